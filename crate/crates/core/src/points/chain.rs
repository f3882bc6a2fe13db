//! Lazily indexed chains of regions of the real line, and the bounded
//! searches that stand in for quantifiers over the whole algebra.

use crate::error::{Error, Result};
use crate::interval::rational::{self as rat, Bound, Q};
use crate::interval::Region;
use crate::report::{AxiomReport, Verdict};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

type Generator = dyn Fn(usize) -> Region + Send + Sync;

/// `i ↦ x_i`, evaluated on demand and memoized.
#[derive(Clone)]
pub struct RegionChain {
    name: String,
    descending: bool,
    generator: Arc<Generator>,
    cache: Arc<Mutex<HashMap<usize, Region>>>,
}

impl fmt::Debug for RegionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RegionChain").field("name", &self.name).finish()
    }
}

impl RegionChain {
    /// `descending` records that `x_{i+1} ≪ x_i` holds by construction, which
    /// lets covering checks use monotonicity. It is still verified on demand.
    pub fn new(
        name: impl Into<String>,
        descending: bool,
        generator: impl Fn(usize) -> Region + Send + Sync + 'static,
    ) -> Self {
        RegionChain {
            name: name.into(),
            descending,
            generator: Arc::new(generator),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, i: usize) -> Region {
        if let Some(r) = self.cache.lock().expect("cache lock").get(&i) {
            return r.clone();
        }
        let r = (self.generator)(i);
        self.cache.lock().expect("cache lock").insert(i, r.clone());
        r
    }

    pub fn prefix(&self, n: usize) -> Vec<Region> {
        (0..n).map(|i| self.get(i)).collect()
    }

    /// Nonzero members and `x_{i+1} ≪ x_i` for all `i < depth`.
    pub fn check_descending(&self, depth: usize) -> Result<()> {
        if self.get(0).is_zero() {
            return Err(Error::NotDescending { index: 0 });
        }
        for i in 0..depth {
            let next = self.get(i + 1);
            if next.is_zero() || !next.well_inside(&self.get(i)) {
                return Err(Error::NotDescending { index: i + 1 });
            }
        }
        Ok(())
    }
}

fn open(a: Q, b: Q) -> Region {
    Region::open(a, b).expect("family interval is nonempty")
}

fn frac(i: usize) -> Q {
    rat::ratio(1, i as i64 + 1)
}

/// `(r - 1/(i+1), r + 1/(i+1))`.
pub fn origin(r: Q) -> RegionChain {
    let name = format!("origin({})", rat::format(&r));
    RegionChain::new(name, true, move |i| open(&r - frac(i), &r + frac(i)))
}

/// `(i, ∞)`.
pub fn tails() -> RegionChain {
    RegionChain::new("tails", true, |i| {
        Region::interval(Bound::Finite(rat::int(i as i64)), Bound::PosInf).expect("ray")
    })
}

/// `(-1 - 1/(i+1), 1 + 1/(i+1))`: round, but contained in a larger round filter.
pub fn de_vries_not_end() -> RegionChain {
    RegionChain::new("deVriesNotEnd", true, |i| {
        open(-rat::int(1) - frac(i), rat::int(1) + frac(i))
    })
}

/// `(-1/2 - 1/(i+3), 1/2 + 1/(i+3))`.
pub fn de_vries_larger() -> RegionChain {
    RegionChain::new("deVriesLarger", true, |i| {
        let d = frac(i + 2);
        open(-rat::half() - &d, rat::half() + d)
    })
}

/// The two stripe regions `⋃(4k, 4k+1)` and `⋃(4k+2, 4k+3)` over `k ≥ 0`.
pub fn stripes4() -> (Region, Region) {
    let four = rat::int(4);
    let zero = Q::zero();
    let u = Region::right_tail(&four, &zero, &open(zero.clone(), Q::one())).expect("stripe");
    let v = Region::right_tail(&four, &zero, &open(rat::int(2), rat::int(3))).expect("stripe");
    (u, v)
}

/// Candidate regions searched for separated pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Catalog {
    /// Grid cells of width `1/d` over the span of `x_0`, plus the two rays outside it.
    Plain,
    /// `Plain` plus `tail(p, 0, (s, s+1))` and `ltail(p, 0, (s, s+1))` for `p ≤ 8`.
    Periodic,
}

pub const MAX_CATALOG_PERIOD: i64 = 8;

/// Catalog items in search order. Any finite union with grid endpoints that
/// overlaps a region contains a single cell that does, so cells suffice.
pub fn catalog(x0: &Region, depth: usize, kind: Catalog) -> Vec<Region> {
    let d = depth.max(1) as i64;
    let (a, b) = x0.span();
    let step = rat::ratio(1, d);
    let mut items = vec![Region::interval(Bound::NegInf, Bound::Finite(a.clone())).expect("ray")];
    let mut left = a;
    while left < b {
        let right = &left + &step;
        items.push(open(left.clone(), right.clone()));
        left = right;
    }
    items.push(Region::interval(Bound::Finite(left), Bound::PosInf).expect("ray"));
    if kind == Catalog::Periodic {
        let zero = Q::zero();
        for p in 1..=MAX_CATALOG_PERIOD {
            let period = rat::int(p);
            for mirrored in [false, true] {
                for s in 0..p {
                    let cell = open(rat::int(s), rat::int(s + 1));
                    let item = if mirrored {
                        Region::left_tail(&period, &zero, &cell)
                    } else {
                        Region::right_tail(&period, &zero, &cell)
                    };
                    items.push(item.expect("cell lies in one period"));
                }
            }
        }
    }
    items
}

/// Searches for separated `x, y` that overlap every `x_i`, `i ≤ depth`.
/// The first separated pair in catalog order is reported.
pub fn g_rep_falsify(chain: &RegionChain, depth: usize, kind: Catalog) -> Result<Verdict> {
    chain.check_descending(depth)?;
    let last = chain.get(depth);
    let items: Vec<Region> = catalog(&chain.get(0), depth, kind)
        .into_iter()
        .filter(|c| c.overlaps(&last))
        .collect();
    for (i, x) in items.iter().enumerate() {
        for y in &items[i + 1..] {
            if !x.contact(y) {
                return Ok(Verdict::fail("r3", vec![x.to_string(), y.to_string()])
                    .with_cases(items.len() as u64));
            }
        }
    }
    Ok(Verdict::holds_to_depth("r3", depth).with_cases(items.len() as u64))
}

/// r0, r1 and the absence of a least member, each up to `depth`.
pub fn is_abstractive(chain: &RegionChain, depth: usize) -> Verdict {
    match chain.check_descending(depth + 1) {
        Err(Error::NotDescending { index }) => {
            Verdict::fail("abstractive", vec![format!("x{index}"), chain.get(index).to_string()])
        }
        Err(e) => Verdict::fail("abstractive", vec![e.to_string()]),
        Ok(()) => match (0..=depth).find(|&i| chain.get(i).leq(&chain.get(i + 1))) {
            Some(i) => Verdict::fail("abstractive", vec![format!("x{i}"), chain.get(i).to_string()])
                .with_note("least member"),
            None => Verdict::holds_to_depth("abstractive", depth),
        },
    }
}

/// Members of `b` examined when looking below a member of `a`.
pub fn search_bound(depth: usize) -> usize {
    4 * depth + 4
}

/// `a` covers `b` up to `depth`: each `a_i` lies above some `b_j` with
/// `j ≤ 4·depth + 4`. A failure names the first `a_i` with no such `b_j`.
pub fn covers(a: &RegionChain, b: &RegionChain, depth: usize) -> Verdict {
    let bound = search_bound(depth);
    let below = |x: &Region| {
        if b.descending {
            b.get(bound).leq(x)
        } else {
            (0..=bound).any(|j| b.get(j).leq(x))
        }
    };
    for i in 0..=depth {
        let x = a.get(i);
        if !below(&x) {
            return Verdict::fail("covers", vec![format!("x{i}"), x.to_string()])
                .with_note(format!("no member of {} up to index {bound} lies below it", b.name));
        }
    }
    Verdict::holds_to_depth("covers", depth)
}

/// Chains `(c - a/(k+m), c + b/(k+m))` with `c` on the grid `1/d` inside the
/// span of `x_0`, `a, b ∈ {1, 2, 3}` and `m ∈ {1, 2}`.
pub fn shrinking_catalog(x0: &Region, depth: usize) -> Vec<RegionChain> {
    let d = depth.max(1) as i64;
    let (lo, hi) = x0.span();
    let step = rat::ratio(1, d);
    let mut out = Vec::new();
    let mut c = lo;
    while c <= hi {
        for a in 1..=3i64 {
            for b in 1..=3i64 {
                for m in 1..=2i64 {
                    let centre = c.clone();
                    let name = format!("shrink({},{a},{b},{m})", rat::format(&c));
                    out.push(RegionChain::new(name, true, move |k| {
                        let k = k as i64 + m;
                        open(&centre - rat::ratio(a, k), &centre + rat::ratio(b, k))
                    }));
                }
            }
        }
        c += &step;
    }
    out
}

/// Whitehead test on the interval carrier. A chain failing r3 is refuted with
/// a constructed counterexample; otherwise every catalog chain it covers must
/// cover it back.
pub fn is_w_representative(chain: &RegionChain, depth: usize) -> Result<Verdict> {
    let abstractive = is_abstractive(chain, depth);
    if abstractive.failed() {
        return Err(Error::NotAbstractive(
            abstractive.witness.map(|w| w.join(" ")).unwrap_or_default(),
        ));
    }
    let r3 = g_rep_falsify(chain, depth, Catalog::Periodic)?;
    if let Some([u, v]) = r3.witness.as_deref() {
        let u = crate::interval::parse_region(u)?;
        let v = crate::interval::parse_region(v)?;
        let b = build_counterexample_sequence(chain, &u, &v, depth)?;
        let mut witness = vec![b.name().to_string()];
        witness.extend(b.prefix(3).iter().map(Region::to_string));
        return Ok(Verdict::fail("W-representative", witness)
            .with_note("covered chain that does not cover back"));
    }
    let candidates = shrinking_catalog(&chain.get(0), depth);
    let mut cases = 0;
    for b in &candidates {
        if covers(chain, b, depth).failed() {
            continue;
        }
        cases += 1;
        if covers(b, chain, depth).failed() {
            let mut witness = vec![b.name().to_string()];
            witness.extend(b.prefix(3).iter().map(Region::to_string));
            return Ok(Verdict::fail("W-representative", witness).with_cases(cases));
        }
    }
    Ok(Verdict::holds_to_depth("W-representative", depth).with_cases(cases))
}

/// From separated `u, v` overlapping every `x_i`: `u_0 = -v`,
/// `u_{i+1} = interpolate(u, u_i)` and `y_i = u_i · x_i`. The result is covered
/// by `x` but does not cover it back; both facts are checked up to `depth`.
pub fn build_counterexample_sequence(
    x: &RegionChain,
    u: &Region,
    v: &Region,
    depth: usize,
) -> Result<RegionChain> {
    if let Some(p) = u.contact_witness(v) {
        return Err(Error::Precondition(format!(
            "u and v are not separated: closures meet at {}",
            rat::format(&p)
        )));
    }
    for i in 0..=depth {
        let xi = x.get(i);
        if !u.overlaps(&xi) {
            return Err(Error::Precondition(format!("u does not overlap x{i}")));
        }
        if !v.overlaps(&xi) {
            return Err(Error::Precondition(format!("v does not overlap x{i}")));
        }
    }
    let interpolants = Arc::new(Mutex::new(vec![v.complement()]));
    let (u, xs) = (u.clone(), x.clone());
    let ui = move |i: usize| {
        let mut seq = interpolants.lock().expect("interpolant lock");
        while seq.len() <= i {
            let next = u.interpolate(seq.last().expect("u_0")).expect("u ≪ u_i holds inductively");
            seq.push(next);
        }
        seq[i].clone()
    };
    let y = RegionChain::new(format!("counterexample({})", x.name), true, move |i| {
        ui(i).meet(&xs.get(i))
    });
    y.check_descending(depth)
        .map_err(|e| Error::Precondition(format!("constructed chain: {e}")))?;
    for i in 0..=depth {
        let yi = y.get(i);
        if !yi.leq(&x.get(i)) {
            return Err(Error::Precondition(format!("y{i} is not below x{i}")));
        }
        if let Some(j) = (0..=depth).find(|&j| x.get(j).leq(&yi)) {
            return Err(Error::Precondition(format!("x{j} lies below y{i}")));
        }
    }
    Ok(y)
}

/// Verdicts for the counterexample chain: descending, covered by `x`, and
/// failing to cover `x` back at every checked index.
pub fn counterexample_report(x: &RegionChain, y: &RegionChain, depth: usize) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.push(match y.check_descending(depth) {
        Ok(()) => Verdict::holds_to_depth("descending", depth),
        Err(e) => Verdict::fail("descending", vec![e.to_string()]),
    });
    r.push(match covers(x, y, depth) {
        v if v.failed() => v,
        _ => Verdict::holds_to_depth("covered-by-chain", depth),
    });
    let back: Vec<usize> = (0..=depth)
        .filter(|&i| {
            let yi = y.get(i);
            !(0..=search_bound(depth)).any(|j| x.get(j).leq(&yi))
        })
        .collect();
    r.push(if back.len() == depth + 1 {
        Verdict::fail("covers-back", vec![format!("y0..y{depth}")])
            .with_cases(back.len() as u64)
            .with_note("no member of the original chain lies below any checked member")
    } else {
        Verdict::holds_to_depth("covers-back", depth)
            .with_note(format!("only {} of {} indices fail", back.len(), depth + 1))
    });
    r
}

/// The round filter generated by `deVriesNotEnd` is strictly contained in the
/// one generated by `deVriesLarger`; `(-1, 1)` separates them.
pub fn de_vries_not_end_report(depth: usize) -> AxiomReport {
    let z = de_vries_not_end();
    let w = de_vries_larger();
    let witness = open(-rat::int(1), rat::int(1));
    let mut r = AxiomReport::new();
    for (label, chain) in [("round", &z), ("round(larger)", &w)] {
        r.push(match chain.check_descending(depth) {
            Ok(()) => Verdict::holds_to_depth(label, depth),
            Err(e) => Verdict::fail(label, vec![e.to_string()]),
        });
    }
    let contained = (0..=depth).find(|&n| !w.get(1).well_inside(&z.get(n)));
    r.push(match contained {
        None => Verdict::holds_to_depth("contained-in-larger", depth),
        Some(n) => Verdict::fail("contained-in-larger", vec![format!("z{n}"), z.get(n).to_string()]),
    });
    let outside = (0..=depth).all(|n| !z.get(n).well_inside(&witness));
    let inside = w.get(0).well_inside(&witness);
    r.push(if outside && inside {
        Verdict::fail("maximal", vec![witness.to_string()])
            .with_note("member of the larger round filter only")
    } else {
        Verdict::holds_to_depth("maximal", depth)
    });
    r
}
