//! Contact structures induced by reflexive symmetric relations on atoms.
//!
//! `x C y` holds when `x` and `y` are nonzero and some atom below `x` is
//! related to some atom below `y`. Structures built this way satisfy C0–C4 by
//! construction; the checker below verifies that claim along with the
//! well-inside axioms and the connectedness variants.

use crate::algebra::{Elem, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Status, Verdict};

/// Largest atom count accepted by [`ContactStructure::check_contact_axioms`].
pub const CONTACT_CHECK_ATOMS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactStructure {
    algebra: FiniteBooleanAlgebra,
    /// Closed neighbourhood of each atom, loops included.
    adjacency: Vec<u32>,
}

impl ContactStructure {
    /// Overlap contact: only the loops are present, so `C` is `x·y ≠ 0`.
    pub fn overlap(algebra: FiniteBooleanAlgebra) -> Self {
        let adjacency = (0..algebra.atom_count()).map(|i| 1u32 << i).collect();
        ContactStructure { algebra, adjacency }
    }

    pub fn from_atom_graph<S: AsRef<str>>(algebra: FiniteBooleanAlgebra, edges: &[(S, S)]) -> Result<Self> {
        let idx: Vec<(usize, usize)> = edges
            .iter()
            .map(|(p, q)| Ok((algebra.atom_index(p.as_ref())?, algebra.atom_index(q.as_ref())?)))
            .collect::<Result<_>>()?;
        Ok(Self::from_index_edges(algebra, &idx))
    }

    /// # Panics
    /// If an edge endpoint is not an atom index of `algebra`.
    pub fn from_index_edges(algebra: FiniteBooleanAlgebra, edges: &[(usize, usize)]) -> Self {
        let mut s = Self::overlap(algebra);
        for &(p, q) in edges {
            assert!(p < s.adjacency.len() && q < s.adjacency.len(), "edge endpoint out of range");
            s.adjacency[p] |= 1 << q;
            s.adjacency[q] |= 1 << p;
        }
        s
    }

    pub fn algebra(&self) -> &FiniteBooleanAlgebra {
        &self.algebra
    }

    pub fn atom_count(&self) -> usize {
        self.algebra.atom_count()
    }

    /// Non-loop edges `(p, q)` with `p < q`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.atom_count();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                if self.adjacency[p] & (1 << q) != 0 {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn is_overlap(&self) -> bool {
        self.edges().is_empty()
    }

    pub fn atom_adjacent(&self, p: usize, q: usize) -> bool {
        self.adjacency[p] & (1 << q) != 0
    }

    /// Atoms related to some atom of `x`.
    pub fn neighbourhood(&self, x: Elem) -> Elem {
        Elem(x.atoms().fold(0, |acc, p| acc | self.adjacency[p]))
    }

    pub fn contact(&self, x: Elem, y: Elem) -> bool {
        !x.is_zero() && !y.is_zero() && self.neighbourhood(x).overlaps(y)
    }

    /// `x ≪ y` iff `x` is not in contact with `−y`.
    pub fn well_inside(&self, x: Elem, y: Elem) -> bool {
        !self.contact(x, self.algebra.complement(y))
    }

    /// Connected components of the atom graph, ordered by least atom.
    pub fn components(&self) -> Vec<Elem> {
        let mut seen = 0u32;
        let mut comps = Vec::new();
        for p in 0..self.atom_count() {
            if seen & (1 << p) != 0 {
                continue;
            }
            let mut comp = Elem::atom(p);
            loop {
                let next = self.neighbourhood(comp);
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp.0;
            comps.push(comp);
        }
        comps
    }

    pub fn is_clique(&self, x: Elem) -> bool {
        x.atoms().all(|p| x.leq(Elem(self.adjacency[p])))
    }

    pub fn format(&self, x: Elem) -> String {
        self.algebra.format(x)
    }

    fn fmt_all(&self, xs: &[Elem]) -> Vec<String> {
        xs.iter().map(|&x| self.format(x)).collect()
    }

    /// A nonzero `u ≪ x` and a nonzero `z ≤ x` with `u` separated from `z`.
    pub fn split_separated(&self, x: Elem) -> Result<Option<(Elem, Elem)>> {
        self.algebra.check(x)?;
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        for u in x.subsets().filter(|u| !u.is_zero()) {
            if !self.well_inside(u, x) {
                continue;
            }
            if let Some(z) = x.subsets().find(|&z| !z.is_zero() && !self.contact(u, z)) {
                return Ok(Some((u, z)));
            }
        }
        Ok(None)
    }

    /// Exhaustive verdicts for C0–C5, C5*, DV1–DV7, the product lemma and
    /// atomlessness, plus the meta-verdicts relating them.
    pub fn check_contact_axioms(&self) -> Result<AxiomReport> {
        self.algebra.require_exhaustive(CONTACT_CHECK_ATOMS)?;
        let b = &self.algebra;
        let size = b.size();
        let unit = b.unit();
        let all: Vec<Elem> = b.elements().collect();
        let neg = |x: Elem| b.complement(x);
        let c = |x: Elem, y: Elem| self.contact(x, y);
        let wi = |x: Elem, y: Elem| self.well_inside(x, y);
        let pairs = size * size;
        let triples = pairs * size;
        let quads = pairs * pairs;
        let mut r = AxiomReport::new();

        r.push(Verdict::from_search(
            "C0",
            size,
            all.iter().find(|&&x| c(Elem::ZERO, x)).map(|&x| self.fmt_all(&[x])),
        ));
        r.push(Verdict::from_search(
            "C1",
            pairs,
            first_pair(&all, |x, y| x.leq(y) && !x.is_zero() && !c(x, y)).map(|(x, y)| self.fmt_all(&[x, y])),
        ));
        r.push(Verdict::from_search(
            "C2",
            pairs,
            first_pair(&all, |x, y| c(x, y) && !c(y, x)).map(|(x, y)| self.fmt_all(&[x, y])),
        ));
        r.push(Verdict::from_search(
            "C3",
            triples,
            first_triple(&all, |x, y, z| x.leq(y) && c(z, x) && !c(z, y)).map(|w| self.fmt_all(&w)),
        ));
        r.push(Verdict::from_search(
            "C4",
            triples,
            first_triple(&all, |x, y, z| c(x, y.join(z)) && !c(x, y) && !c(x, z)).map(|w| self.fmt_all(&w)),
        ));
        let proper = |x: Elem| !x.is_zero() && x != unit;
        let c5 = Verdict::from_search(
            "C5",
            size,
            all.iter().find(|&&x| proper(x) && !c(x, neg(x))).map(|&x| self.fmt_all(&[x])),
        );
        let c5_star = Verdict::from_search(
            "C5*",
            pairs,
            first_pair(&all, |x, y| proper(x) && wi(x, y) && !(x.leq(y) && x != y))
                .map(|(x, y)| self.fmt_all(&[x, y])),
        );
        let equiv = c5.status == c5_star.status;
        r.push(c5);
        r.push(c5_star);

        r.push(if wi(unit, unit) {
            Verdict::pass("DV1", 1)
        } else {
            Verdict::fail("DV1", self.fmt_all(&[unit, unit]))
        });
        r.push(Verdict::from_search(
            "DV2",
            pairs,
            first_pair(&all, |x, y| wi(x, y) && !x.leq(y)).map(|(x, y)| self.fmt_all(&[x, y])),
        ));
        r.push(Verdict::from_search("DV3", quads, self.dv3_witness(&all)));
        r.push(Verdict::from_search(
            "DV4",
            triples,
            first_triple(&all, |x, y, z| wi(x, y) && wi(x, z) && !wi(x, y.meet(z))).map(|w| self.fmt_all(&w)),
        ));
        r.push(Verdict::from_search(
            "DV5",
            pairs,
            first_pair(&all, |x, y| wi(x, y) && !wi(neg(y), neg(x))).map(|(x, y)| self.fmt_all(&[x, y])),
        ));
        r.push(Verdict::from_search(
            "DV6",
            triples,
            first_pair(&all, |x, y| wi(x, y) && !all.iter().any(|&z| wi(x, z) && wi(z, y)))
                .map(|(x, y)| self.fmt_all(&[x, y])),
        ));
        r.push(Verdict::from_search(
            "DV7",
            pairs,
            all.iter()
                .find(|&&x| !x.is_zero() && !all.iter().any(|&y| !y.is_zero() && wi(y, x)))
                .map(|&x| self.fmt_all(&[x])),
        ));
        r.push(Verdict::from_search("product-lemma", quads, self.product_lemma_witness(&all)));
        r.push(Verdict::from_search(
            "atomless",
            pairs,
            all.iter()
                .find(|&&x| !x.is_zero() && !all.iter().any(|&y| !y.is_zero() && y.leq(x) && y != x))
                .map(|&x| self.fmt_all(&[x])),
        ));

        let meta = if equiv {
            Verdict::pass("C5<=>C5*", 1)
        } else {
            Verdict::fail("C5<=>C5*", vec!["C5".into(), "C5*".into()])
        };
        r.push(meta);

        let premises_hold = ["C0", "C1", "C2", "C3"]
            .iter()
            .all(|a| r.get(a).map(|v| v.status == Status::Pass).unwrap_or(false));
        let g = crate::points::check_g1_g2(self)?;
        let grz = g.all_pass();
        let c4 = r.get("C4").map(|v| v.status == Status::Pass).unwrap_or(false);
        let derivable = if !(premises_hold && grz) || c4 {
            Verdict::pass("C4-derivable", 1)
        } else {
            Verdict::fail("C4-derivable", vec!["C0-C3, G1, G2 hold but C4 fails".into()])
        };
        r.push(derivable.with_note(format!(
            "premises {} in this structure",
            if premises_hold && grz { "hold" } else { "do not all hold" }
        )));
        Ok(r)
    }

    fn dv3_witness(&self, all: &[Elem]) -> Option<Vec<String>> {
        // x ≤ y ≪ z ≤ w → x ≪ w, in lexicographic order of (x, y, z, w)
        for &x in all {
            for &y in all {
                if !x.leq(y) {
                    continue;
                }
                for &z in all {
                    if !self.well_inside(y, z) {
                        continue;
                    }
                    for &w in all {
                        if z.leq(w) && !self.well_inside(x, w) {
                            return Some(self.fmt_all(&[x, y, z, w]));
                        }
                    }
                }
            }
        }
        None
    }

    fn product_lemma_witness(&self, all: &[Elem]) -> Option<Vec<String>> {
        let wi_pairs: Vec<(Elem, Elem)> = all
            .iter()
            .flat_map(|&x| all.iter().map(move |&u| (x, u)))
            .filter(|&(x, u)| self.well_inside(x, u))
            .collect();
        for &(x, u) in &wi_pairs {
            for &(y, v) in &wi_pairs {
                if !self.well_inside(x.meet(y), u.meet(v)) {
                    return Some(self.fmt_all(&[x, u, y, v]));
                }
            }
        }
        None
    }
}

fn first_pair(all: &[Elem], mut bad: impl FnMut(Elem, Elem) -> bool) -> Option<(Elem, Elem)> {
    for &x in all {
        for &y in all {
            if bad(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn first_triple(all: &[Elem], mut bad: impl FnMut(Elem, Elem, Elem) -> bool) -> Option<[Elem; 3]> {
    for &x in all {
        for &y in all {
            for &z in all {
                if bad(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}
