//! Points of contact algebras: round filters, ends, Grzegorczyk points,
//! abstractive sets and covering.
//!
//! On a finite structure every filter is principal. `↑g` is round iff `g ≪ g`,
//! which for an atom-graph contact means `g` is a union of graph components.
//! The maximal ones, the ends, are the single components. A ≪-chain satisfies
//! the Grzegorczyk conditions iff its least member is a component that is a
//! clique, so G-points are the clique components.

pub mod chain;

use crate::algebra::{Elem, Filter, EXHAUSTIVE_ATOMS};
use crate::contact::ContactStructure;
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Verdict};

pub fn is_round_filter(s: &ContactStructure, f: Filter) -> bool {
    !f.generator.is_zero() && s.well_inside(f.generator, f.generator)
}

pub fn round_filters(s: &ContactStructure) -> Vec<Filter> {
    s.algebra().filters().filter(|&f| is_round_filter(s, f)).collect()
}

/// Maximal round filters, found by comparing every pair of round filters.
pub fn enumerate_ends(s: &ContactStructure) -> Vec<Filter> {
    let round = round_filters(s);
    round
        .iter()
        .copied()
        .filter(|&f| !round.iter().any(|&g| g != f && f.is_subset_of(g)))
        .collect()
}

/// `x` is in contact with every member of `f`.
pub fn touches_filter(s: &ContactStructure, x: Elem, f: Filter) -> bool {
    f.members(s.algebra()).all(|y| s.contact(x, y))
}

/// A separated pair `x, y` with neither `-x` nor `-y` in `f`.
pub fn dagger_witness(s: &ContactStructure, f: Filter) -> Option<(Elem, Elem)> {
    let b = s.algebra();
    for x in b.elements() {
        for y in b.elements() {
            if !s.contact(x, y) && !f.contains(b.complement(x)) && !f.contains(b.complement(y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// A separated pair of regions both touching every member of `f`.
pub fn cross_witness(s: &ContactStructure, f: Filter) -> Option<(Elem, Elem)> {
    let touching: Vec<Elem> = s.algebra().nonzero().filter(|&x| touches_filter(s, x, f)).collect();
    for &x in &touching {
        for &y in &touching {
            if !s.contact(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn dagger_verdict(s: &ContactStructure, f: Filter) -> Verdict {
    let size = s.algebra().size();
    let w = dagger_witness(s, f).map(|(x, y)| vec![s.format(x), s.format(y)]);
    Verdict::from_search("(†)", size * size, w)
}

pub fn cross_verdict(s: &ContactStructure, f: Filter) -> Verdict {
    let nz = s.algebra().size() - 1;
    let w = cross_witness(s, f).map(|(x, y)| vec![s.format(x), s.format(y)]);
    Verdict::from_search("(✠)", nz * nz, w)
}

/// First `x` violating `x ∈ f ⟺ -x` does not touch `f`.
fn membership_witness(s: &ContactStructure, f: Filter) -> Option<Elem> {
    let b = s.algebra();
    b.elements()
        .find(|&x| f.contains(x) == touches_filter(s, b.complement(x), f))
}

/// Exhaustive comparison of the end characterizations over every round
/// filter, and of the ultrafilter characterization over every filter.
pub fn check_end_characterizations(s: &ContactStructure) -> Result<AxiomReport> {
    let b = s.algebra();
    b.require_exhaustive(EXHAUSTIVE_ATOMS)?;
    let round = round_filters(s);
    let ends = enumerate_ends(s);
    let n = round.len() as u64;
    let mut dagger_end = None;
    let mut dagger_cross = None;
    let mut membership = None;
    for &f in &round {
        let dagger = dagger_witness(s, f).is_none();
        let cross = cross_witness(s, f).is_none();
        if dagger != ends.contains(&f) && dagger_end.is_none() {
            dagger_end = Some(vec![b.format_filter(f)]);
        }
        if dagger != cross && dagger_cross.is_none() {
            dagger_cross = Some(vec![b.format_filter(f)]);
        }
        if membership.is_none() {
            if let Some(x) = membership_witness(s, f) {
                membership = Some(vec![b.format_filter(f), s.format(x)]);
            }
        }
    }
    let mut r = AxiomReport::new();
    r.push(Verdict::from_search("(†)<=>end", n, dagger_end));
    r.push(Verdict::from_search("(†)<=>(✠)", n, dagger_cross));
    r.push(Verdict::from_search("membership-lemma", n * b.size(), membership));
    r.extend(b.check_ultrafilter_characterization()?);
    Ok(r)
}

/// Checks r0–r3 for a finite set of regions.
pub fn is_g_representative(s: &ContactStructure, q: &[Elem]) -> Result<AxiomReport> {
    if q.is_empty() {
        return Err(Error::EmptySet);
    }
    for &x in q {
        s.algebra().check(x)?;
    }
    let mut r = AxiomReport::new();
    let n = q.len() as u64;
    r.push(Verdict::from_search(
        "r0",
        n,
        q.iter().any(|x| x.is_zero()).then(|| vec![s.format(Elem::ZERO)]),
    ));
    let mut r1 = None;
    'outer: for &u in q {
        for &v in q {
            if u != v && !s.well_inside(u, v) && !s.well_inside(v, u) {
                r1 = Some(vec![s.format(u), s.format(v)]);
                break 'outer;
            }
        }
    }
    r.push(Verdict::from_search("r1", n * n, r1));
    let r2 = q
        .iter()
        .find(|&&u| !q.iter().any(|&v| s.well_inside(v, u)))
        .map(|&u| vec![s.format(u)]);
    r.push(Verdict::from_search("r2", n * n, r2));
    let all: Vec<Elem> = s.algebra().elements().collect();
    let mut r3 = None;
    'scan: for &x in &all {
        for &y in &all {
            if q.iter().all(|u| u.overlaps(x) && u.overlaps(y)) && !s.contact(x, y) {
                r3 = Some(vec![s.format(x), s.format(y)]);
                break 'scan;
            }
        }
    }
    r.push(Verdict::from_search("r3", (all.len() * all.len()) as u64, r3));
    Ok(r)
}

/// Least members of the G-representatives: components that are cliques.
pub fn clique_components(s: &ContactStructure) -> Vec<Elem> {
    s.components().into_iter().filter(|&k| s.is_clique(k)).collect()
}

/// Filters generated by G-representatives. Each representative generates the
/// filter of its least member, and that member alone is a representative, so
/// it suffices to test singleton chains.
pub fn enumerate_g_points(s: &ContactStructure) -> Result<Vec<Filter>> {
    s.algebra().require_exhaustive(EXHAUSTIVE_ATOMS)?;
    let mut out = Vec::new();
    for m in s.algebra().nonzero() {
        if is_g_representative(s, &[m])?.all_pass() {
            out.push(Filter::principal(m));
        }
    }
    Ok(out)
}

/// G1 and G2, decided through the clique components.
pub fn check_g1_g2(s: &ContactStructure) -> Result<AxiomReport> {
    let cliques = clique_components(s);
    let b = s.algebra();
    let failing: Vec<Elem> = b
        .nonzero()
        .filter(|&x| !cliques.iter().any(|k| k.leq(x)))
        .collect();
    let centre = (0..b.atom_count()).map(Elem::atom).find(|&p| {
        let nb: Vec<usize> = s.neighbourhood(p).atoms().filter(|&q| Elem::atom(q) != p).collect();
        nb.iter().any(|&q| nb.iter().any(|&r| q < r && !s.atom_adjacent(q, r)))
    });
    let g1 = centre.or_else(|| failing.first().copied()).filter(|_| !failing.is_empty());
    let mut r = AxiomReport::new();
    r.push(Verdict::from_search(
        "G1",
        b.size() - 1,
        g1.map(|x| vec![s.format(x)]),
    ));
    let mut pairs = 0;
    let mut g2 = None;
    for x in b.nonzero() {
        for y in b.nonzero() {
            if !s.contact(x, y) {
                continue;
            }
            pairs += 1;
            if g2.is_none() && !cliques.iter().any(|k| k.overlaps(x) && k.overlaps(y)) {
                g2 = Some(vec![s.format(x), s.format(y)]);
            }
        }
    }
    r.push(Verdict::from_search("G2", pairs, g2));
    Ok(r)
}

/// `a` covers `b`: every member of `a` lies above some member of `b`.
pub fn covers_finite(a: &[Elem], b: &[Elem]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| y.leq(x)))
}

/// r0, r1 and the absence of a least member. A finite chain always has a
/// least member, so this fails on every finite set and names that member.
pub fn is_abstractive_finite(s: &ContactStructure, a: &[Elem]) -> Result<Verdict> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let rep = is_g_representative(s, a)?;
    for axiom in ["r0", "r1"] {
        if let Some(v) = rep.get(axiom).filter(|v| v.failed()) {
            return Ok(Verdict::fail("abstractive", v.witness.clone().unwrap_or_default())
                .with_note(format!("{axiom} fails")));
        }
    }
    let least = a.iter().find(|&&x| a.iter().all(|&y| x.leq(y)));
    Ok(match least {
        Some(&m) => Verdict::fail("abstractive", vec![s.format(m)]).with_note("least member exists"),
        None => Verdict::pass("abstractive", a.len() as u64),
    })
}

/// Exact Whitehead test on a finite structure. No abstractive sets exist
/// there, so the candidate is always rejected.
pub fn is_w_representative_finite(s: &ContactStructure, a: &[Elem]) -> Result<Verdict> {
    let v = is_abstractive_finite(s, a)?;
    if v.failed() {
        return Err(Error::NotAbstractive(
            v.witness.map(|w| w.join(", ")).unwrap_or_default(),
        ));
    }
    Ok(Verdict::pass("W-representative", 1))
}

/// Classes of finite G-representatives under mutual covering, each mapped to
/// the filter it generates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityQuotient {
    pub classes: Vec<Vec<usize>>,
    pub points: Vec<Filter>,
    pub injective: bool,
    pub onto_g_points: bool,
}

pub fn quotient_by_similarity(s: &ContactStructure, reps: &[Vec<Elem>]) -> Result<SimilarityQuotient> {
    for q in reps {
        let r = is_g_representative(s, q)?;
        if !r.all_pass() {
            let bad: Vec<String> = q.iter().map(|&x| s.format(x)).collect();
            return Err(Error::NotRepresentative(bad.join(", ")));
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, q) in reps.iter().enumerate() {
        let home = classes.iter_mut().find(|c| {
            let p = &reps[c[0]];
            covers_finite(p, q) && covers_finite(q, p)
        });
        match home {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let points: Vec<Filter> = classes
        .iter()
        .map(|c| {
            let q = &reps[c[0]];
            let least = q.iter().copied().find(|&x| q.iter().all(|&y| x.leq(y)));
            Filter::principal(least.expect("a ≪-chain has a least member"))
        })
        .collect();
    let mut sorted = points.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == points.len();
    let onto_g_points = sorted == enumerate_g_points(s)?;
    Ok(SimilarityQuotient {
        classes,
        points,
        injective,
        onto_g_points,
    })
}
