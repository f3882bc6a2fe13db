//! Acceptance run: one line per criterion, exit status 1 on any unexpected result.

mod common;

use bca_core::algebra::FiniteBooleanAlgebra;
use bca_core::contact::ContactStructure;
use bca_core::interval::rational::Q;
use bca_core::points::chain::{self, Catalog};
use bca_core::points;
use bca_core::report::{AxiomReport, Status, Verdict};
use bca_core::spaces::{self, SpaceKind};
use bca_core::Elem;
use common::regions::{check_triple, seeded_terms};
use common::{all_graphs, complete, cycle, path, structure, Oracle};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::{Duration, Instant};

struct Outcome {
    report: AxiomReport,
    problems: Vec<String>,
    /// Known failure of the literal criterion, with the analysis it was checked against.
    expected_failure: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { report: AxiomReport::new(), problems: Vec::new(), expected_failure: None }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn record(&mut self, label: impl Into<String>, v: &Verdict) {
        let mut v = v.clone();
        v.axiom = format!("{} {}", label.into(), v.axiom);
        self.report.push(v);
    }
}

fn verdict(r: &AxiomReport, axiom: &str) -> Verdict {
    r.get(axiom).cloned().unwrap_or_else(|| panic!("missing verdict {axiom}"))
}

fn stone_suite() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in 1..=5 {
        let b = FiniteBooleanAlgebra::with_atoms(n).unwrap();
        o.require(b.ultrafilters().len() == n, format!("n={n}: ultrafilter count"));
        let d = spaces::verify_stone_duality(&b).unwrap();
        o.require(verdict(&d.verdicts, "isomorphism").passed(), format!("n={n}: isomorphism"));
        o.record(format!("n={n}"), &verdict(&d.verdicts, "isomorphism"));
        let s = ContactStructure::overlap(b.clone());
        let ps = spaces::point_space(&s, SpaceKind::Stone).unwrap();
        let props = spaces::check_space_properties(&ps.space);
        for axiom in ["Hausdorff", "zero-dimensional", "totally-disconnected"] {
            let v = verdict(&props, axiom);
            o.require(v.passed(), format!("n={n}: {axiom}"));
            o.record(format!("n={n}"), &v);
        }
        let mut ok = 0;
        for _ in 0..100 {
            let anchor = Elem::atom(rng.random_range(0..n));
            let family: Vec<Elem> = (0..rng.random_range(1..5))
                .map(|_| anchor.join(Elem(rng.random_range(0..1u32 << n))))
                .collect();
            match b.extend_fip_family(&family) {
                Ok(u) if b.is_ultrafilter(u) && family.iter().all(|&x| u.contains(x)) => ok += 1,
                _ => o.problems.push(format!("n={n}: FIP extension of {family:?}")),
            }
        }
        o.record(format!("n={n}"), &Verdict::pass("fip-extension", ok));
    }
    o
}

fn contact_suite() -> Outcome {
    let mut o = Outcome::new();
    let mut end_failures = 0u64;
    let mut structures = 0u64;
    for n in 1..=4 {
        for edges in all_graphs(n) {
            structures += 1;
            let s = structure(n, &edges);
            let oracle = Oracle::new(n, &edges);
            let mut r = s.check_contact_axioms().unwrap();
            r.extend(points::check_end_characterizations(&s).unwrap());
            let tag = format!("{edges:?}");
            for axiom in ["C0", "C1", "C2", "C3", "C4", "C5<=>C5*", "product-lemma", "(†)<=>(✠)", "ultrafilter<=>(‡)", "membership-lemma"] {
                o.require(verdict(&r, axiom).passed(), format!("{tag}: {axiom}"));
            }
            o.require(verdict(&r, "C5").passed() == oracle.connected(), format!("{tag}: C5 vs connectivity"));
            let all_cliques = s.components().iter().all(|&k| s.is_clique(k));
            let end = verdict(&r, "(†)<=>end");
            if end.failed() {
                end_failures += 1;
            }
            o.require(end.passed() == all_cliques, format!("{tag}: (†)<=>end outside the analysed cases"));
        }
    }
    o.report.push(Verdict::pass("structures", structures));
    o.report.push(Verdict::from_search(
        "(†)<=>maximal-round",
        structures,
        (end_failures > 0).then(|| vec![format!("{end_failures} structures with a non-clique component")]),
    ));
    if end_failures > 0 {
        o.expected_failure = Some(format!(
            "(†) <=> maximal-round fails on {end_failures}/{structures} structures, exactly those with a component that is not a clique; every other sub-check passes"
        ));
    }
    o
}

type Edges = Vec<(usize, usize)>;

fn end_component_suite() -> Outcome {
    let mut o = Outcome::new();
    let mut graphs: Vec<(String, usize, Edges)> = Vec::new();
    for n in 1..=5 {
        graphs.push((format!("path{n}"), n, path(n)));
        graphs.push((format!("cycle{n}"), n, cycle(n)));
        graphs.push((format!("complete{n}"), n, complete(n)));
    }
    for n in 2..=5 {
        for k in 1..n {
            let mut e = path(k);
            e.extend(path(n - k).into_iter().map(|(a, b)| (a + k, b + k)));
            graphs.push((format!("split{k}+{}", n - k), n, e));
        }
    }
    for (name, n, edges) in &graphs {
        let s = structure(*n, edges);
        let ends = points::enumerate_ends(&s);
        let comps = Oracle::new(*n, edges).component_count();
        o.require(ends.len() == comps, format!("{name}: {} ends, {comps} components", ends.len()));
        let ps = spaces::point_space(&s, SpaceKind::End).unwrap();
        let connected = verdict(&spaces::check_space_properties(&ps.space), "connected").passed();
        let c5 = verdict(&s.check_contact_axioms().unwrap(), "C5").passed();
        o.require(connected == c5, format!("{name}: end space connected vs C5"));
        o.report.push(Verdict::pass(format!("{name} ends={}", ends.len()), 1));
    }
    o
}

fn grz_suite() -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=5 {
        let b = FiniteBooleanAlgebra::with_atoms(n).unwrap();
        let s = ContactStructure::overlap(b.clone());
        let g = points::check_g1_g2(&s).unwrap();
        o.require(g.all_pass(), format!("overlap n={n}: G1/G2"));
        let mut grz = points::enumerate_g_points(&s).unwrap();
        let mut ends = points::enumerate_ends(&s);
        let mut ult = b.ultrafilters();
        grz.sort();
        ends.sort();
        ult.sort();
        o.require(grz == ends && ends == ult, format!("overlap n={n}: Grz = End = Ult"));
        let reps: Vec<Vec<Elem>> = (0..n)
            .flat_map(|p| {
                let a = Elem::atom(p);
                let rest = b.complement(a);
                vec![vec![a], vec![a, b.unit()], vec![rest.join(a), a]]
            })
            .collect();
        let q = points::quotient_by_similarity(&s, &reps).unwrap();
        o.require(q.injective && q.onto_g_points && q.classes.len() == n, format!("overlap n={n}: quotient"));
        o.report.extend(g);
        o.report.push(Verdict::pass(format!("overlap n={n} quotient"), q.classes.len() as u64));
    }
    let s = structure(3, &path(3));
    let g = points::check_g1_g2(&s).unwrap();
    let g1 = verdict(&g, "G1");
    o.require(g1.failed() && g1.witness == Some(vec!["{b}".into()]), "path3: G1 witness {b}");
    o.record("path3", &g1);
    o
}

const REGION_TRIPLES: usize = 400;

fn interval_suite() -> Outcome {
    let mut o = Outcome::new();
    let terms = seeded_terms(0xacce55, 3 * REGION_TRIPLES);
    let mut failures = Vec::new();
    let mut periodic = 0;
    for t in terms.chunks(3) {
        if let Err(e) = check_triple(&t[0], &t[1], &t[2]) {
            failures.push(e);
        }
        periodic += t
            .iter()
            .filter(|x| {
                let r = x.region();
                r.is_left_periodic() || r.is_right_periodic()
            })
            .count();
    }
    o.require(periodic > 0, "no periodic regions generated");
    o.require(failures.is_empty(), failures.first().cloned().unwrap_or_default());
    o.report.push(Verdict::from_search("regions", terms.len() as u64, failures.first().map(|e| vec![e.clone()])));
    o.report.push(Verdict::pass("periodic-regions", periodic as u64));
    o
}

fn carrier_suite() -> Outcome {
    let mut o = Outcome::new();
    let dv = chain::de_vries_not_end_report(50);
    for axiom in ["round", "round(larger)", "contained-in-larger"] {
        o.require(verdict(&dv, axiom).passed(), format!("deVriesNotEnd: {axiom}"));
    }
    let maximal = verdict(&dv, "maximal");
    o.require(maximal.failed() && maximal.witness == Some(vec!["(-1,1)".into()]), "deVriesNotEnd: strictly larger round filter");
    o.report.extend(dv);

    let started = Instant::now();
    let origin = chain::origin(Q::zero());
    let r3 = chain::g_rep_falsify(&origin, 50, Catalog::Periodic).unwrap();
    let w = chain::is_w_representative(&origin, 50).unwrap();
    let elapsed = started.elapsed();
    o.require(r3.status == Status::HoldsToDepth(50), "origin: r3 holds to depth 50");
    o.require(w.status == Status::HoldsToDepth(50), "origin: W-representative holds to depth 50");
    o.require(elapsed < Duration::from_secs(10), format!("origin: {elapsed:?} over budget"));
    o.record("origin", &r3);
    o.record("origin", &w);

    let (u, v) = chain::stripes4();
    let tails = chain::tails();
    let periodic = chain::g_rep_falsify(&tails, 50, Catalog::Periodic).unwrap();
    o.require(
        periodic.failed() && periodic.witness == Some(vec![u.to_string(), v.to_string()]),
        "tails: r3 fails with the stripe witnesses",
    );
    o.record("tails", &periodic);
    for depth in 0..=50 {
        let plain = chain::g_rep_falsify(&tails, depth, Catalog::Plain).unwrap();
        o.require(plain.status == Status::HoldsToDepth(depth), format!("tails: plain carrier at depth {depth}"));
    }
    o.report.push(Verdict::holds_to_depth("tails plain r3", 50));

    let y = chain::build_counterexample_sequence(&tails, &u, &v, 20).unwrap();
    let r = chain::counterexample_report(&tails, &y, 20);
    o.require(verdict(&r, "descending").passed(), "counterexample: descending");
    o.require(verdict(&r, "covered-by-chain").passed(), "counterexample: covered by tails");
    o.require(verdict(&r, "covers-back").failed(), "counterexample: never covers back");
    o.report.extend(r);
    o
}

type Suite = (&'static str, fn() -> Outcome, Option<Duration>);

const SUITES: [Suite; 6] = [
    ("1 stone", stone_suite, Some(Duration::from_secs(10))),
    ("2 contact-axioms", contact_suite, Some(Duration::from_secs(60))),
    ("3 end-components", end_component_suite, None),
    ("4 grzegorczyk-finite", grz_suite, None),
    ("5 interval-randomized", interval_suite, Some(Duration::from_secs(30))),
    ("6 interval-carrier", carrier_suite, Some(Duration::from_secs(10))),
];

fn main() {
    let mut unexpected = 0;
    let mut first_json = Vec::new();
    for (name, suite, budget) in SUITES {
        let started = Instant::now();
        let mut outcome = suite();
        let elapsed = started.elapsed();
        if let Some(b) = budget {
            outcome.require(elapsed < b, format!("runtime {elapsed:.2?} exceeds {b:?}"));
        }
        first_json.push(outcome.report.to_json());
        let line = format!("criterion {name:<24} {elapsed:>10.2?}");
        match (&outcome.expected_failure, outcome.problems.is_empty()) {
            (None, true) => println!("{line}  PASS"),
            (Some(why), true) => println!("{line}  FAIL  {why}"),
            (_, false) => {
                unexpected += 1;
                println!("{line}  FAIL  {}", outcome.problems.join("; "));
            }
        }
    }
    let started = Instant::now();
    let repeat: Vec<String> = SUITES.iter().map(|(_, suite, _)| suite().report.to_json()).collect();
    let identical = repeat == first_json;
    let line = format!("criterion {:<24} {:>10.2?}", "7 determinism", started.elapsed());
    if identical {
        println!("{line}  PASS");
    } else {
        unexpected += 1;
        println!("{line}  FAIL  reports differ between runs");
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
