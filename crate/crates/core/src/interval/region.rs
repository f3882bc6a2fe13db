//! Eventually periodic regular open subsets of the real line.
//!
//! A region is stored as the finite list of its breakpoints inside a window
//! `[lo - pl, hi + pr]` together with the state of every cell between them.
//! Left of `lo` the set repeats with period `pl`, right of `hi` with period
//! `pr`. Canonical regions have minimal periods and minimal thresholds, so two
//! regions denote the same set iff they are structurally equal.

use super::rational::{self as rat, midpoint, Bound, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::{max, min};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    lo: Q,
    hi: Q,
    left_period: Q,
    right_period: Q,
    cuts: Vec<Q>,
    states: Vec<bool>,
}

impl Region {
    pub fn zero() -> Region {
        Region::constant(false)
    }

    pub fn unit() -> Region {
        Region::constant(true)
    }

    fn constant(value: bool) -> Region {
        Region {
            lo: Q::zero(),
            hi: Q::zero(),
            left_period: Q::one(),
            right_period: Q::one(),
            cuts: Vec::new(),
            states: vec![value],
        }
    }

    pub fn interval(lower: Bound, upper: Bound) -> Result<Region> {
        Region::from_intervals(&[(lower, upper)])
    }

    /// `(a, b)` with rational endpoints.
    pub fn open(a: Q, b: Q) -> Result<Region> {
        Region::interval(Bound::Finite(a), Bound::Finite(b))
    }

    /// Regular open hull (`Int Cl`) of a finite union of open intervals.
    pub fn from_intervals(parts: &[(Bound, Bound)]) -> Result<Region> {
        for (a, b) in parts {
            if a >= b {
                return Err(Error::EmptyInterval {
                    lower: a.to_string(),
                    upper: b.to_string(),
                });
            }
        }
        let finite: Vec<Q> = parts
            .iter()
            .flat_map(|(a, b)| [a.finite().cloned(), b.finite().cloned()])
            .flatten()
            .collect();
        let lo = finite.iter().min().cloned().unwrap_or_else(Q::zero);
        let hi = finite.iter().max().cloned().unwrap_or_else(Q::zero);
        let sample = |x: &Q| {
            let x = Bound::Finite(x.clone());
            parts.iter().any(|(a, b)| *a < x && x < *b)
        };
        Ok(Region::build(lo, hi, Q::one(), Q::one(), finite, sample))
    }

    /// `Int Cl` of the union of `pattern + threshold + k·period` over `k ≥ 0`.
    pub fn right_tail(period: &Q, threshold: &Q, pattern: &Region) -> Result<Region> {
        Region::check_pattern(period, pattern)?;
        let offsets = Region::pattern_offsets(period, pattern);
        let cands = (0..=2)
            .flat_map(|k| {
                let base = threshold + period * rat::int(k);
                offsets.iter().map(move |o| &base + o)
            })
            .collect();
        let sample = |x: &Q| {
            x > threshold && pattern.state_at(&rat::modulo(&(x - threshold), period))
        };
        Ok(Region::build(
            threshold.clone(),
            threshold.clone(),
            Q::one(),
            period.clone(),
            cands,
            sample,
        ))
    }

    /// Mirror image of [`Region::right_tail`]: the union of `-(y + threshold + k·period)`.
    pub fn left_tail(period: &Q, threshold: &Q, pattern: &Region) -> Result<Region> {
        Region::check_pattern(period, pattern)?;
        let offsets = Region::pattern_offsets(period, pattern);
        let start = -threshold;
        let cands = (0..=2)
            .flat_map(|k| {
                let base = &start - period * rat::int(k);
                offsets.iter().map(move |o| &base - o)
            })
            .collect();
        let sample = |x: &Q| {
            *x < start && pattern.state_at(&rat::modulo(&(&start - x), period))
        };
        Ok(Region::build(
            start.clone(),
            start.clone(),
            period.clone(),
            Q::one(),
            cands,
            sample,
        ))
    }

    fn check_pattern(period: &Q, pattern: &Region) -> Result<()> {
        if !period.is_positive() {
            return Err(Error::NonPositivePeriod(rat::format(period)));
        }
        if !pattern.leq(&Region::open(Q::zero(), period.clone())?) {
            return Err(Error::PatternOutsidePeriod(rat::format(period)));
        }
        Ok(())
    }

    fn pattern_offsets(period: &Q, pattern: &Region) -> Vec<Q> {
        let mut offsets = pattern.breaks_in(&Q::zero(), period);
        offsets.push(Q::zero());
        offsets.push(period.clone());
        offsets
    }

    pub fn is_zero(&self) -> bool {
        self.cuts.is_empty() && !self.states[0]
    }

    pub fn is_unit(&self) -> bool {
        self.cuts.is_empty() && self.states[0]
    }

    pub fn left_period(&self) -> &Q {
        &self.left_period
    }

    pub fn right_period(&self) -> &Q {
        &self.right_period
    }

    /// Left threshold: below it the set repeats with the left period.
    pub fn lo(&self) -> &Q {
        &self.lo
    }

    /// Right threshold: above it the set repeats with the right period.
    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn is_left_periodic(&self) -> bool {
        self.cuts.iter().any(|c| *c < self.lo)
    }

    pub fn is_right_periodic(&self) -> bool {
        self.cuts.iter().any(|c| *c > self.hi)
    }

    /// Hull of the stored breakpoints, or `[0, 0]` for constant regions.
    pub fn span(&self) -> (Q, Q) {
        match (self.cuts.first(), self.cuts.last()) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => (Q::zero(), Q::zero()),
        }
    }

    fn window(&self) -> (Q, Q) {
        (&self.lo - &self.left_period, &self.hi + &self.right_period)
    }

    /// Membership of a point that is not a breakpoint. At a breakpoint this
    /// returns the state of the cell to its left.
    pub fn state_at(&self, x: &Q) -> bool {
        let x = self.reduce(x);
        let idx = self.cuts.partition_point(|c| *c < x);
        self.states[idx]
    }

    /// Membership of an arbitrary point of the line.
    pub fn contains(&self, x: &Q) -> bool {
        let left = self.state_left_of(x);
        left && left == self.state_right_of(x)
    }

    fn in_closure(&self, x: &Q) -> bool {
        self.state_left_of(x) || self.state_right_of(x)
    }

    fn state_left_of(&self, x: &Q) -> bool {
        let prev = self.prev_break_before(x).unwrap_or_else(|| x - Q::one());
        self.state_at(&midpoint(&prev, x))
    }

    fn state_right_of(&self, x: &Q) -> bool {
        let next = self.next_break_after(x).unwrap_or_else(|| x + Q::one());
        self.state_at(&midpoint(x, &next))
    }

    fn reduce(&self, x: &Q) -> Q {
        let (wlo, whi) = self.window();
        if *x > whi {
            let k = rat::ceil_div(&(x - &whi), &self.right_period);
            x - rat::times(&self.right_period, &k)
        } else if *x < wlo {
            let k = rat::ceil_div(&(&wlo - x), &self.left_period);
            x + rat::times(&self.left_period, &k)
        } else {
            x.clone()
        }
    }

    /// All breakpoints in the closed interval `[a, b]`, ascending.
    pub fn breaks_in(&self, a: &Q, b: &Q) -> Vec<Q> {
        if a > b {
            return Vec::new();
        }
        let (wlo, whi) = self.window();
        let mut out = Vec::new();
        if *a < wlo {
            let offsets: Vec<Q> = self
                .cuts
                .iter()
                .take_while(|c| **c < self.lo)
                .map(|c| &self.lo - c)
                .collect();
            if !offsets.is_empty() {
                let p = &self.left_period;
                let first = max(BigInt::one(), rat::floor_div(&(&self.lo - b), p) - 1);
                let last = rat::ceil_div(&(&self.lo - a), p);
                let mut k = first;
                while k <= last {
                    let base = &self.lo - rat::times(p, &k);
                    for o in &offsets {
                        let x = &base - o;
                        if x >= *a && x <= *b && x < wlo {
                            out.push(x);
                        }
                    }
                    k += 1;
                }
            }
        }
        out.extend(self.cuts.iter().filter(|c| *c >= a && *c <= b).cloned());
        if *b > whi {
            let offsets: Vec<Q> = self
                .cuts
                .iter()
                .filter(|c| **c > self.hi)
                .map(|c| c - &self.hi)
                .collect();
            if !offsets.is_empty() {
                let p = &self.right_period;
                let first = max(BigInt::one(), rat::floor_div(&(a - &self.hi), p) - 1);
                let last = rat::ceil_div(&(b - &self.hi), p);
                let mut k = first;
                while k <= last {
                    let base = &self.hi + rat::times(p, &k);
                    for o in &offsets {
                        let x = &base + o;
                        if x >= *a && x <= *b && x > whi {
                            out.push(x);
                        }
                    }
                    k += 1;
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Least breakpoint strictly greater than `x`.
    pub fn next_break_after(&self, x: &Q) -> Option<Q> {
        let (wlo, whi) = self.window();
        if *x < wlo && self.is_left_periodic() {
            let next = self
                .breaks_in(x, &(x + &self.left_period))
                .into_iter()
                .find(|b| b > x);
            if next.is_some() {
                return next;
            }
        }
        if let Some(c) = self.cuts.iter().find(|c| *c > x) {
            return Some(c.clone());
        }
        if self.is_right_periodic() {
            let from = max(x.clone(), whi);
            let to = &from + &self.right_period;
            return self.breaks_in(&from, &to).into_iter().find(|b| b > x);
        }
        None
    }

    /// Greatest breakpoint strictly less than `x`.
    pub fn prev_break_before(&self, x: &Q) -> Option<Q> {
        let (wlo, whi) = self.window();
        if *x > whi && self.is_right_periodic() {
            let prev = self
                .breaks_in(&(x - &self.right_period), x)
                .into_iter()
                .rev()
                .find(|b| b < x);
            if prev.is_some() {
                return prev;
            }
        }
        if let Some(c) = self.cuts.iter().rev().find(|c| *c < x) {
            return Some(c.clone());
        }
        if self.is_left_periodic() {
            let to = min(x.clone(), wlo);
            let from = &to - &self.left_period;
            return self.breaks_in(&from, &to).into_iter().rev().find(|b| b < x);
        }
        None
    }

    /// Connected components meeting the open interval `(a, b)`, with their true endpoints.
    pub fn components_in(&self, a: &Q, b: &Q) -> Vec<(Bound, Bound)> {
        let mut bounds = vec![a.clone()];
        bounds.extend(self.breaks_in(a, b));
        bounds.push(b.clone());
        bounds.dedup();
        let mut out = Vec::new();
        for w in bounds.windows(2) {
            if !self.state_at(&midpoint(&w[0], &w[1])) {
                continue;
            }
            let left = if w[0] == *a && !self.is_break(a) {
                self.prev_break_before(a).map_or(Bound::NegInf, Bound::Finite)
            } else {
                Bound::Finite(w[0].clone())
            };
            let right = if w[1] == *b && !self.is_break(b) {
                self.next_break_after(b).map_or(Bound::PosInf, Bound::Finite)
            } else {
                Bound::Finite(w[1].clone())
            };
            out.push((left, right));
        }
        out
    }

    fn is_break(&self, x: &Q) -> bool {
        !self.breaks_in(x, x).is_empty()
    }

    fn build(lo: Q, hi: Q, pl: Q, pr: Q, cands: Vec<Q>, sample: impl Fn(&Q) -> bool) -> Region {
        Region::build_raw(lo, hi, pl, pr, cands, sample).canonical()
    }

    /// Samples `sample` on the cells cut out by `cands`, drops cuts that do not
    /// change state and trims to the window. `cands` must contain every
    /// breakpoint of the target within `[lo - 2pl, hi + 2pr]`, and the target
    /// must repeat with `pl` below `lo` and with `pr` above `hi`.
    fn build_raw(
        lo: Q,
        hi: Q,
        pl: Q,
        pr: Q,
        cands: Vec<Q>,
        sample: impl Fn(&Q) -> bool,
    ) -> Region {
        let wlo = &lo - &pl;
        let whi = &hi + &pr;
        let elo = &wlo - &pl;
        let ehi = &whi + &pr;
        let mut c: Vec<Q> = cands.into_iter().filter(|x| *x >= elo && *x <= ehi).collect();
        c.sort();
        c.dedup();
        let m = c.len();
        let mut st = Vec::with_capacity(m + 1);
        if m == 0 {
            st.push(sample(&lo));
        } else {
            st.push(if c[0] > elo {
                sample(&midpoint(&elo, &c[0]))
            } else {
                sample(&(&c[0] - Q::one()))
            });
            for i in 1..m {
                st.push(sample(&midpoint(&c[i - 1], &c[i])));
            }
            st.push(if c[m - 1] < ehi {
                sample(&midpoint(&c[m - 1], &ehi))
            } else {
                sample(&(&c[m - 1] + Q::one()))
            });
        }
        let mut cuts = Vec::new();
        let mut states = vec![st[0]];
        for (i, x) in c.into_iter().enumerate() {
            if st[i + 1] != *states.last().unwrap() {
                cuts.push(x);
                states.push(st[i + 1]);
            }
        }
        let first = cuts.partition_point(|x| *x < wlo);
        let last = cuts.partition_point(|x| *x <= whi);
        Region {
            lo,
            hi,
            left_period: pl,
            right_period: pr,
            states: states[first..=last].to_vec(),
            cuts: cuts[first..last].to_vec(),
        }
    }

    fn canonical(self) -> Region {
        let qr = self.minimal_period(true);
        let ql = self.minimal_period(false);
        let right = self.right_threshold(&ql, &qr);
        let left = self.left_threshold(&ql, &qr);
        let (lo, hi, pl, pr) = match (left, right) {
            (Some(l), Some(r)) => (min(l, r.clone()), r, ql, qr),
            _ => {
                let q = min(ql, qr);
                let anchor = self
                    .breaks_in(&Q::zero(), &q)
                    .into_iter()
                    .next()
                    .unwrap_or_else(Q::zero);
                (anchor.clone(), anchor, q.clone(), q)
            }
        };
        let from = &lo - &pl - &pl;
        let to = &hi + &pr + &pr;
        let cands = self.breaks_in(&from, &to);
        Region::build_raw(lo, hi, pl, pr, cands, |x| self.state_at(x))
    }

    fn minimal_period(&self, right: bool) -> Q {
        let (p, a, b) = if right {
            let p = self.right_period.clone();
            (p.clone(), self.hi.clone(), &self.hi + p)
        } else {
            let p = self.left_period.clone();
            (p.clone(), &self.lo - p, self.lo.clone())
        };
        let n = self
            .cuts
            .iter()
            .filter(|c| if right { **c > a && **c <= b } else { **c >= a && **c < b })
            .count();
        if n == 0 {
            return Q::one();
        }
        for k in (1..=n).rev().filter(|k| n % k == 0) {
            let q = &p / rat::int(k as i64);
            let shift = if right { q.clone() } else { -q.clone() };
            if self.shift_agrees(&a, &b, &shift) {
                return q;
            }
        }
        p
    }

    fn shift_agrees(&self, a: &Q, b: &Q, shift: &Q) -> bool {
        self.mismatch_cells(a, b, shift).is_empty()
    }

    /// Cells of `[a, b]` on which the set differs from its translate by `shift`.
    fn mismatch_cells(&self, a: &Q, b: &Q, shift: &Q) -> Vec<(Q, Q)> {
        let mut pts = self.breaks_in(a, b);
        pts.extend(
            self.breaks_in(&(a + shift), &(b + shift))
                .into_iter()
                .map(|x| x - shift),
        );
        pts.push(a.clone());
        pts.push(b.clone());
        pts.sort();
        pts.dedup();
        pts.windows(2)
            .filter(|w| {
                let m = midpoint(&w[0], &w[1]);
                self.state_at(&m) != self.state_at(&(&m + shift))
            })
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect()
    }

    fn right_threshold(&self, ql: &Q, qr: &Q) -> Option<Q> {
        let a = &self.lo - ql - qr;
        self.mismatch_cells(&a, &self.hi, qr)
            .into_iter()
            .map(|(_, r)| r)
            .max()
    }

    fn left_threshold(&self, ql: &Q, qr: &Q) -> Option<Q> {
        let b = &self.hi + qr + ql;
        self.mismatch_cells(&self.lo, &b, &-ql)
            .into_iter()
            .map(|(l, _)| l)
            .min()
    }

    fn common_frame(&self, other: &Region) -> (Q, Q, Q, Q) {
        (
            min(&self.lo, &other.lo).clone(),
            max(&self.hi, &other.hi).clone(),
            rat::lcm(&self.left_period, &other.left_period),
            rat::lcm(&self.right_period, &other.right_period),
        )
    }

    fn combine(&self, other: &Region, f: impl Fn(bool, bool) -> bool) -> Region {
        let (lo, hi, pl, pr) = self.common_frame(other);
        let from = &lo - &pl - &pl;
        let to = &hi + &pr + &pr;
        let mut cands = self.breaks_in(&from, &to);
        cands.extend(other.breaks_in(&from, &to));
        Region::build(lo, hi, pl, pr, cands, |x| {
            f(self.state_at(x), other.state_at(x))
        })
    }

    pub fn meet(&self, other: &Region) -> Region {
        self.combine(other, |a, b| a && b)
    }

    /// `Int Cl` of the union.
    pub fn join(&self, other: &Region) -> Region {
        self.combine(other, |a, b| a || b)
    }

    /// `Int` of the set complement.
    pub fn complement(&self) -> Region {
        let mut out = self.clone();
        for s in &mut out.states {
            *s = !*s;
        }
        out
    }

    /// Breakpoints of both regions over one common period on each side of the
    /// shared core, bracketed by the scan bounds.
    fn joint_points(&self, other: &Region) -> Vec<Q> {
        let (lo, hi, pl, pr) = self.common_frame(other);
        let from = &lo - &pl;
        let to = &hi + &pr;
        let mut pts = self.breaks_in(&from, &to);
        pts.extend(other.breaks_in(&from, &to));
        pts.push(from);
        pts.push(to);
        pts.sort();
        pts.dedup();
        pts
    }

    fn any_cell(&self, other: &Region, f: impl Fn(bool, bool) -> bool) -> Option<Q> {
        self.joint_points(other)
            .windows(2)
            .map(|w| midpoint(&w[0], &w[1]))
            .find(|m| f(self.state_at(m), other.state_at(m)))
    }

    pub fn leq(&self, other: &Region) -> bool {
        self.any_cell(other, |a, b| a && !b).is_none()
    }

    pub fn overlaps(&self, other: &Region) -> bool {
        self.any_cell(other, |a, b| a && b).is_some()
    }

    /// Leftmost scanned point of `Cl self ∩ Cl other`, if the closures meet.
    pub fn contact_witness(&self, other: &Region) -> Option<Q> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let pts = self.joint_points(other);
        for (i, p) in pts.iter().enumerate() {
            if i > 0 {
                let m = midpoint(&pts[i - 1], p);
                if self.state_at(&m) && other.state_at(&m) {
                    return Some(m);
                }
            }
            if self.in_closure(p) && other.in_closure(p) {
                return Some(p.clone());
            }
        }
        None
    }

    pub fn contact(&self, other: &Region) -> bool {
        self.contact_witness(other).is_some()
    }

    /// `Cl self ⊆ other`.
    pub fn well_inside(&self, other: &Region) -> bool {
        !self.contact(&other.complement())
    }

    /// A region `w` with `self ≪ w ≪ v`: every component of `self` grows by half
    /// the gap to the surrounding component of `v`, at most by 1.
    pub fn interpolate(&self, v: &Region) -> Result<Region> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if let Some(x) = self.contact_witness(&v.complement()) {
            return Err(Error::Precondition(format!(
                "not U << V: closure of U leaves V at {}",
                rat::format(&x)
            )));
        }
        let (lo, hi, pl, pr) = self.common_frame(v);
        let lo = lo - &pl - rat::int(3);
        let hi = hi + &pr + rat::int(3);
        let from = &lo - &pl - &pl - rat::int(2);
        let to = &hi + &pr + &pr + rat::int(2);
        let gap = |d: Q| min(d / rat::int(2), Q::one());
        let mut cands = Vec::new();
        let mut grown = Vec::new();
        for (a, b) in self.components_in(&from, &to) {
            let a = match a {
                Bound::Finite(a) => {
                    let d = v.prev_break_before(&a).map_or_else(Q::one, |c| gap(&a - c));
                    let x = a - d;
                    cands.push(x.clone());
                    Bound::Finite(x)
                }
                other => other,
            };
            let b = match b {
                Bound::Finite(b) => {
                    let d = v.next_break_after(&b).map_or_else(Q::one, |c| gap(c - &b));
                    let x = b + d;
                    cands.push(x.clone());
                    Bound::Finite(x)
                }
                other => other,
            };
            grown.push((a, b));
        }
        Ok(Region::build(lo, hi, pl, pr, cands, |x| {
            let x = Bound::Finite(x.clone());
            grown.iter().any(|(a, b)| *a < x && x < *b)
        }))
    }

    /// A nonzero region well inside `self`: the middle third of the leftmost
    /// bounded component, else a unit interval inside an unbounded one.
    pub fn shrink(&self) -> Result<Region> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let (wlo, whi) = self.window();
        let comps = self.components_in(&wlo, &whi);
        for (a, b) in &comps {
            if let (Bound::Finite(a), Bound::Finite(b)) = (a, b) {
                let third = (b - a) / rat::int(3);
                return Region::open(a + &third, b - &third);
            }
        }
        let one = Q::one();
        let two = rat::int(2);
        match comps.iter().find(|(a, b)| matches!((a, b), (Bound::Finite(_), Bound::PosInf))) {
            Some((Bound::Finite(a), _)) => Region::open(a + &one, a + &two),
            _ => match comps.first() {
                Some((Bound::NegInf, Bound::Finite(b))) => Region::open(b - &two, b - &one),
                _ => Region::open(Q::zero(), one),
            },
        }
    }

    /// Thresholds used for printing: moved outward to the nearest break when
    /// the region is empty between the threshold and that break.
    fn print_anchors(&self) -> (Option<Q>, Option<Q>) {
        let global = self.is_left_periodic() && self.is_right_periodic() && self.lo == self.hi;
        let left = self.is_left_periodic().then(|| match self.prev_break_before(&self.lo) {
            Some(b) if !global && !self.state_at(&midpoint(&b, &self.lo)) => b,
            _ => self.lo.clone(),
        });
        let right = self.is_right_periodic().then(|| match self.next_break_after(&self.hi) {
            Some(b) if !global && !self.state_at(&midpoint(&self.hi, &b)) => b,
            _ => self.hi.clone(),
        });
        (left, right)
    }

    /// Components lying in the non-repeating core, in order.
    fn core_components(&self) -> Vec<(Bound, Bound)> {
        let (left, right) = self.print_anchors();
        let mut bounds = vec![left.clone().map_or(Bound::NegInf, Bound::Finite)];
        bounds.extend(
            self.cuts
                .iter()
                .filter(|c| left.as_ref().is_none_or(|l| *c > l))
                .filter(|c| right.as_ref().is_none_or(|r| *c < r))
                .cloned()
                .map(Bound::Finite),
        );
        bounds.push(right.map_or(Bound::PosInf, Bound::Finite));
        let mut out = Vec::new();
        for w in bounds.windows(2) {
            let sample = match (&w[0], &w[1]) {
                (Bound::Finite(a), Bound::Finite(b)) if a < b => midpoint(a, b),
                (Bound::Finite(_), Bound::Finite(_)) => continue,
                (Bound::NegInf, Bound::Finite(b)) => b - Q::one(),
                (Bound::Finite(a), Bound::PosInf) => a + Q::one(),
                _ => Q::zero(),
            };
            if self.state_at(&sample) {
                out.push((w[0].clone(), w[1].clone()));
            }
        }
        out
    }

    /// In-cells of `(from, from + period)` shifted so that `from` sits at 0.
    fn period_pattern(&self, from: &Q, period: &Q, mirrored: bool) -> Vec<(Q, Q)> {
        let to = from + period;
        let mut pts = vec![from.clone()];
        pts.extend(self.cuts.iter().filter(|c| *c > from && **c < to).cloned());
        pts.push(to.clone());
        let mut out: Vec<(Q, Q)> = pts
            .windows(2)
            .filter(|w| self.state_at(&midpoint(&w[0], &w[1])))
            .map(|w| {
                if mirrored {
                    (&to - &w[1], &to - &w[0])
                } else {
                    (&w[0] - from, &w[1] - from)
                }
            })
            .collect();
        if mirrored {
            out.reverse();
        }
        out
    }
}

fn format_pattern(parts: &[(Q, Q)]) -> String {
    parts
        .iter()
        .map(|(a, b)| format!("({},{})", rat::format(a), rat::format(b)))
        .collect::<Vec<_>>()
        .join(" | ")
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("empty");
        }
        let mut items = Vec::new();
        let (left, right) = self.print_anchors();
        if let Some(lo) = left {
            let from = &lo - &self.left_period;
            items.push(format!(
                "ltail({},{},{})",
                rat::format(&self.left_period),
                rat::format(&-&lo),
                format_pattern(&self.period_pattern(&from, &self.left_period, true))
            ));
        }
        for (a, b) in self.core_components() {
            items.push(format!("({a},{b})"));
        }
        if let Some(hi) = right {
            items.push(format!(
                "tail({},{},{})",
                rat::format(&self.right_period),
                rat::format(&hi),
                format_pattern(&self.period_pattern(&hi, &self.right_period, false))
            ));
        }
        f.write_str(&items.join(" | "))
    }
}
