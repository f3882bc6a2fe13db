//! Random region terms with a pointwise membership oracle.
//!
//! Every endpoint, threshold and period is a multiple of 1/4, so no breakpoint
//! of any term is an odd multiple of 1/16. Membership at those sample points is
//! plain boolean algebra; contact is decided from the cells around each
//! quarter point. Thresholds stay in [-8, 8] and periods divide 12, so the
//! window [-40, 40] shows every behaviour of a term.

use bca_core::interval::rational::{int, ratio, Q};
use bca_core::interval::Bound;
use bca_core::Region;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const WINDOW: i64 = 40;

#[derive(Clone, Debug)]
pub enum Term {
    Interval(Option<i64>, Option<i64>),
    Tail { period: i64, threshold: i64, start: i64, end: i64, left: bool },
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Not(Box<Term>),
}

fn q4(n: i64) -> Q {
    ratio(n, 4)
}

impl Term {
    pub fn region(&self) -> Region {
        match self {
            Term::Interval(a, b) => Region::interval(
                a.map_or(Bound::NegInf, |a| Bound::Finite(q4(a))),
                b.map_or(Bound::PosInf, |b| Bound::Finite(q4(b))),
            )
            .unwrap(),
            Term::Tail { period, threshold, start, end, left } => {
                let pattern = Region::open(q4(*start), q4(*end)).unwrap();
                let (p, t) = (int(*period), q4(*threshold));
                if *left {
                    Region::left_tail(&p, &t, &pattern).unwrap()
                } else {
                    Region::right_tail(&p, &t, &pattern).unwrap()
                }
            }
            Term::Meet(a, b) => a.region().meet(&b.region()),
            Term::Join(a, b) => a.region().join(&b.region()),
            Term::Not(a) => a.region().complement(),
        }
    }

    /// Membership of `x16 / 16`, where `x16` is odd.
    pub fn holds(&self, x16: i64) -> bool {
        match self {
            Term::Interval(a, b) => a.is_none_or(|a| x16 > 4 * a) && b.is_none_or(|b| x16 < 4 * b),
            Term::Tail { period, threshold, start, end, left } => {
                let d = if *left { -x16 - 4 * threshold } else { x16 - 4 * threshold };
                if d <= 0 {
                    return false;
                }
                let r = d.rem_euclid(16 * period);
                r > 4 * start && r < 4 * end
            }
            Term::Meet(a, b) => a.holds(x16) && b.holds(x16),
            Term::Join(a, b) => a.holds(x16) || b.holds(x16),
            Term::Not(a) => !a.holds(x16),
        }
    }
}

/// Sample points `(2k+1)/16` for `k` in `[-8·WINDOW, 8·WINDOW)`, as numerators.
pub fn samples() -> impl Iterator<Item = i64> {
    (-8 * WINDOW..8 * WINDOW).map(|k| 2 * k + 1)
}

/// Sampled membership of a region, read off its components in the window.
pub fn profile(r: &Region) -> Vec<bool> {
    let (lo, hi) = (int(-WINDOW - 1), int(WINDOW + 1));
    let mut out = vec![false; 16 * WINDOW as usize];
    let sixteen = int(16);
    for (a, b) in r.components_in(&lo, &hi) {
        let a = match a {
            Bound::Finite(a) => (a * &sixteen).floor().to_integer().try_into().unwrap_or(i64::MIN),
            _ => i64::MIN,
        };
        let b = match b {
            Bound::Finite(b) => (b * &sixteen).ceil().to_integer().try_into().unwrap_or(i64::MAX),
            _ => i64::MAX,
        };
        for (i, x) in samples().enumerate() {
            if a < x && x < b {
                out[i] = true;
            }
        }
    }
    out
}

pub fn term_profile(t: &Term) -> Vec<bool> {
    samples().map(|x| t.holds(x)).collect()
}

/// Closures meet: some quarter point has an in-cell of each region next to it,
/// or the regions share a sample point.
pub fn oracle_contact(a: &[bool], b: &[bool]) -> bool {
    if a.iter().zip(b).any(|(x, y)| *x && *y) {
        return true;
    }
    // consecutive samples straddle one multiple of 1/8; a breakpoint can only sit there
    (1..a.len()).any(|i| (a[i - 1] || a[i]) && (b[i - 1] || b[i]))
}

pub fn random_term(rng: &mut impl Rng, depth: u32) -> Term {
    if depth == 0 || rng.random_bool(0.35) {
        return match rng.random_range(0..10) {
            0 => Term::Interval(None, Some(rng.random_range(-32..32))),
            1 => Term::Interval(Some(rng.random_range(-32..32)), None),
            2..=5 => {
                let a = rng.random_range(-32..32);
                Term::Interval(Some(a), Some(a + rng.random_range(1..16)))
            }
            _ => {
                let period = [1, 2, 3, 4][rng.random_range(0..4)];
                let start = rng.random_range(0..4 * period);
                let end = rng.random_range(start + 1..=4 * period);
                Term::Tail {
                    period,
                    threshold: rng.random_range(-32..=32),
                    start,
                    end,
                    left: rng.random_bool(0.4),
                }
            }
        };
    }
    let a = Box::new(random_term(rng, depth - 1));
    match rng.random_range(0..5) {
        0 | 1 => Term::Meet(a, Box::new(random_term(rng, depth - 1))),
        2 | 3 => Term::Join(a, Box::new(random_term(rng, depth - 1))),
        _ => Term::Not(a),
    }
}

pub fn seeded_terms(seed: u64, count: usize) -> Vec<Term> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_term(&mut rng, 3)).collect()
}

/// Every checked law for one triple of regions. Returns the first violation.
pub fn check_triple(tx: &Term, ty: &Term, tz: &Term) -> Result<(), String> {
    let (x, y, z) = (tx.region(), ty.region(), tz.region());
    let (px, py, pz) = (profile(&x), profile(&y), profile(&z));
    let fail = |what: &str| Err(format!("{what}: x={x} y={y} z={z}"));
    if px != term_profile(tx) || py != term_profile(ty) || pz != term_profile(tz) {
        return fail("pointwise semantics");
    }
    if x.contact(&y) != oracle_contact(&px, &py) {
        return fail("contact oracle");
    }
    if x.well_inside(&y) != !oracle_contact(&px, &profile(&y.complement())) {
        return fail("well-inside oracle");
    }

    let zero = Region::zero();
    let unit = Region::unit();
    if zero.contact(&x) {
        return fail("C0");
    }
    if x.leq(&y) && !x.is_zero() && !x.contact(&y) {
        return fail("C1");
    }
    if x.contact(&y) != y.contact(&x) {
        return fail("C2");
    }
    if x.leq(&y) && z.contact(&x) && !z.contact(&y) {
        return fail("C3");
    }
    if x.contact(&y.join(&z)) != (x.contact(&y) || x.contact(&z)) {
        return fail("C4");
    }
    if !x.is_zero() && !x.is_unit() && !x.contact(&x.complement()) {
        return fail("C5");
    }
    if !unit.well_inside(&unit) {
        return fail("DV1");
    }
    if x.well_inside(&y) && !x.leq(&y) {
        return fail("DV2");
    }
    let xy = x.meet(&y);
    let yz = y.join(&z);
    if xy.leq(&x) && x.well_inside(&y) && y.leq(&yz) && !xy.well_inside(&yz) {
        return fail("DV3");
    }
    if x.well_inside(&y) && x.well_inside(&z) && !x.well_inside(&y.meet(&z)) {
        return fail("DV4");
    }
    if x.well_inside(&y) != y.complement().well_inside(&x.complement()) {
        return fail("DV5");
    }
    for (u, v) in well_inside_pairs(&x, &y, &z) {
        if !u.is_zero() {
            let w = u.interpolate(&v).map_err(|e| format!("DV6 {e}: u={u} v={v}"))?;
            if !(u.well_inside(&w) && w.well_inside(&v)) {
                return Err(format!("DV6: u={u} w={w} v={v}"));
            }
        }
    }
    if !x.is_zero() {
        let s = x.shrink().map_err(|e| format!("DV7 {e}: x={x}"))?;
        if s.is_zero() || !s.well_inside(&x) {
            return Err(format!("DV7: x={x} shrink={s}"));
        }
    }
    let pairs = well_inside_pairs(&x, &y, &z);
    for (a, u) in &pairs {
        for (b, v) in &pairs {
            if !a.meet(b).well_inside(&u.meet(v)) {
                return Err(format!("product lemma: {a} << {u}, {b} << {v}"));
            }
        }
    }

    if x.meet(&x) != x || x.join(&x) != x || x.join(&y) != y.join(&x) {
        return fail("idempotence");
    }
    if x.complement().complement() != x {
        return fail("regular-open fixed point");
    }
    for r in [&x, &y, &z, &xy, &yz] {
        let text = r.to_string();
        let back = bca_core::interval::parse_region(&text).map_err(|e| format!("reparse {text}: {e}"))?;
        if &back != r || back.to_string() != text {
            return Err(format!("canonical form not idempotent: {text} -> {back}"));
        }
    }
    Ok(())
}

/// Pairs `u ≪ v` built from the triple.
fn well_inside_pairs(x: &Region, y: &Region, z: &Region) -> Vec<(Region, Region)> {
    let mut out = Vec::new();
    for r in [x, y, z] {
        if !r.is_zero() {
            out.push((r.shrink().unwrap(), r.clone()));
        }
    }
    for (a, b) in [(x, y), (y, z), (x, z)] {
        if a.well_inside(b) {
            out.push((a.clone(), b.clone()));
        }
        let m = a.meet(b);
        if !m.is_zero() {
            out.push((m.shrink().unwrap(), a.join(b)));
        }
    }
    out.push((Region::zero(), x.clone()));
    out
}
