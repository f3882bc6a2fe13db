//! Finite topological spaces built from points of a contact structure.
//!
//! Point sets are bitmasks over the point list. Every open set is stored, so
//! closures and interiors are plain scans.

use crate::algebra::{Elem, FiniteBooleanAlgebra, Filter};
use crate::contact::ContactStructure;
use crate::error::{Error, Result};
use crate::points;
use crate::report::{AxiomReport, Verdict};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Stone,
    End,
    Grz,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSpace {
    labels: Vec<String>,
    opens: Vec<u32>,
}

impl TopSpace {
    /// The topology generated by `basis`. The sets must cover the points and
    /// every pairwise intersection must be a union of basis sets.
    pub fn from_basis(labels: Vec<String>, basis: &[u32]) -> Result<TopSpace> {
        let full = full_mask(labels.len());
        let cover = basis.iter().fold(0, |acc, &b| acc | b);
        if cover != full {
            return Err(Error::Precondition("basis does not cover the points".into()));
        }
        for &a in basis {
            for &b in basis {
                let meet = a & b;
                let union = basis.iter().filter(|&&c| c & !meet == 0).fold(0, |acc, &c| acc | c);
                if union != meet {
                    return Err(Error::Precondition(
                        "intersection of basis sets is not a union of basis sets".into(),
                    ));
                }
            }
        }
        let mut opens: BTreeSet<u32> = BTreeSet::from([0]);
        for &b in basis {
            let grown: Vec<u32> = opens.iter().map(|&o| o | b).collect();
            opens.extend(grown);
        }
        Ok(TopSpace {
            labels,
            opens: opens.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn full(&self) -> u32 {
        full_mask(self.len())
    }

    pub fn is_open(&self, set: u32) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: u32) -> bool {
        self.is_open(self.full() & !set)
    }

    pub fn interior(&self, set: u32) -> u32 {
        self.opens.iter().filter(|&&o| o & !set == 0).fold(0, |acc, &o| acc | o)
    }

    pub fn closure(&self, set: u32) -> u32 {
        let full = self.full();
        full & !self.interior(full & !set)
    }

    pub fn regular_opens(&self) -> Vec<u32> {
        self.opens
            .iter()
            .copied()
            .filter(|&o| self.interior(self.closure(o)) == o)
            .collect()
    }

    pub fn clopens(&self) -> Vec<u32> {
        self.opens.iter().copied().filter(|&o| self.is_closed(o)).collect()
    }

    /// Least open set containing point `p`.
    pub fn minimal_neighbourhood(&self, p: usize) -> u32 {
        self.opens
            .iter()
            .filter(|&&o| o & (1 << p) != 0)
            .fold(self.full(), |acc, &o| acc & o)
    }

    /// Connected components as point sets, ordered by least point.
    pub fn components(&self) -> Vec<u32> {
        let clopens = self.clopens();
        let mut out: Vec<u32> = Vec::new();
        for p in 0..self.len() {
            if out.iter().any(|&c| c & (1 << p) != 0) {
                continue;
            }
            let comp = clopens
                .iter()
                .filter(|&&c| c & (1 << p) != 0)
                .fold(self.full(), |acc, &c| acc & c);
            out.push(comp);
        }
        out
    }

    pub fn format_set(&self, set: u32) -> String {
        let names: Vec<&str> = (0..self.len())
            .filter(|&p| set & (1 << p) != 0)
            .map(|p| self.labels[p].as_str())
            .collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Points followed by the Hasse diagram of inclusion between open sets,
    /// in dot syntax.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph opens {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  // p{i} = {l}");
        }
        for &o in &self.opens {
            let _ = writeln!(s, "  o{o} [label=\"{}\"];", self.format_set(o));
        }
        for &a in &self.opens {
            for &b in &self.opens {
                let covered = a != b
                    && a & !b == 0
                    && !self.opens.iter().any(|&c| c != a && c != b && a & !c == 0 && c & !b == 0);
                if covered {
                    let _ = writeln!(s, "  o{a} -> o{b};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A space of points of a structure with its basis assignment `x ↦ {p : x ∈ p}`.
#[derive(Clone, Debug)]
pub struct PointSpace {
    pub kind: SpaceKind,
    pub points: Vec<Filter>,
    pub space: TopSpace,
    /// Basis set of every element, indexed by the element's bits.
    pub basis: Vec<u32>,
    pub flag: Option<String>,
}

impl PointSpace {
    pub fn basis_set(&self, x: Elem) -> u32 {
        self.basis[x.bits() as usize]
    }
}

pub fn point_space(s: &ContactStructure, kind: SpaceKind) -> Result<PointSpace> {
    let b = s.algebra();
    b.require_exhaustive(crate::algebra::EXHAUSTIVE_ATOMS)?;
    let points = match kind {
        SpaceKind::Stone => b.ultrafilters(),
        SpaceKind::End => points::enumerate_ends(s),
        SpaceKind::Grz => points::enumerate_g_points(s)?,
    };
    let flag = (kind == SpaceKind::Grz && points.is_empty()).then(|| "G1 fails: no G-points".to_string());
    let basis: Vec<u32> = b
        .elements()
        .map(|x| {
            points
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(x))
                .fold(0, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let labels = points.iter().map(|&f| b.format_filter(f)).collect();
    let space = TopSpace::from_basis(labels, &basis)?;
    Ok(PointSpace {
        kind,
        points,
        space,
        basis,
        flag,
    })
}

fn pairs_without(x: &TopSpace, mut separated: impl FnMut(usize, usize) -> bool) -> Option<(usize, usize)> {
    for p in 0..x.len() {
        for q in 0..x.len() {
            if p != q && !separated(p, q) {
                return Some((p, q));
            }
        }
    }
    None
}

pub fn check_space_properties(x: &TopSpace) -> AxiomReport {
    let n = x.len() as u64;
    let bit = |p: usize| 1u32 << p;
    let label = |p: usize| x.labels[p].clone();
    let mut r = AxiomReport::new();

    let t1 = pairs_without(x, |p, q| x.opens.iter().any(|&o| o & bit(p) != 0 && o & bit(q) == 0));
    r.push(Verdict::from_search("T1", n * n, t1.map(|(p, q)| vec![label(p), label(q)])));

    let hausdorff = pairs_without(x, |p, q| {
        x.opens.iter().any(|&u| {
            u & bit(p) != 0 && x.opens.iter().any(|&v| v & bit(q) != 0 && u & v == 0)
        })
    });
    r.push(Verdict::from_search("Hausdorff", n * n, hausdorff.map(|(p, q)| vec![label(p), label(q)])));

    let comps = x.components();
    let connected = if comps.len() <= 1 {
        Verdict::pass("connected", n)
    } else {
        Verdict::fail("connected", comps.iter().map(|&c| x.format_set(c)).collect())
    };
    r.push(connected.with_note(format!("{} components", comps.len())));

    let clopens = x.clopens();
    let zero_dim = x.opens.iter().find_map(|&o| {
        (0..x.len())
            .filter(|&p| o & bit(p) != 0)
            .find(|&p| !clopens.iter().any(|&c| c & bit(p) != 0 && c & !o == 0))
            .map(|p| vec![x.format_set(o), label(p)])
    });
    r.push(Verdict::from_search("zero-dimensional", x.opens.len() as u64, zero_dim));

    r.push(Verdict::from_search(
        "totally-disconnected",
        comps.len() as u64,
        comps.iter().find(|c| c.count_ones() > 1).map(|&c| vec![x.format_set(c)]),
    ));
    r.push(Verdict::from_search(
        "discrete",
        n,
        (0..x.len()).find(|&p| !x.is_open(bit(p))).map(|p| vec![label(p)]),
    ));

    // Finite subcover of the cover by minimal neighbourhoods, chosen greedily.
    let mut covered = 0;
    let mut subcover = 0;
    for p in 0..x.len() {
        if covered & bit(p) == 0 {
            covered |= x.minimal_neighbourhood(p);
            subcover += 1;
        }
    }
    r.push(
        Verdict::from_search(
            "compact",
            n,
            (covered != x.full()).then(|| vec![x.format_set(x.full() & !covered)]),
        )
        .with_note(format!("finite subcover of size {subcover}")),
    );

    let regular = x.regular_opens();
    let concentric = if let Some((p, q)) = t1 {
        Some(vec![label(p), label(q)])
    } else {
        (0..x.len())
            .find(|&p| !regular.contains(&x.minimal_neighbourhood(p)))
            .map(|p| vec![label(p)])
    };
    r.push(
        Verdict::from_search("concentric", n, concentric)
            .with_note("local basis: the minimal neighbourhood, a one-element R1 chain"),
    );
    r
}

/// Clopen sets of `x` as a Boolean algebra. Atoms are the minimal nonempty
/// clopens, ordered by least point; the second value lists them.
pub fn clopen_algebra(x: &TopSpace) -> Result<(FiniteBooleanAlgebra, Vec<u32>)> {
    let clopens = x.clopens();
    let mut atoms: Vec<u32> = clopens
        .iter()
        .copied()
        .filter(|&c| c != 0 && !clopens.iter().any(|&d| d != 0 && d != c && d & !c == 0))
        .collect();
    atoms.sort_by_key(|a| a.trailing_zeros());
    let names: Vec<String> = atoms.iter().map(|&a| x.format_set(a)).collect();
    if names.is_empty() {
        return Err(Error::NoAtoms);
    }
    Ok((FiniteBooleanAlgebra::new(&names)?, atoms))
}

fn elem_of(atoms: &[u32], set: u32) -> Option<Elem> {
    let mut e = Elem::ZERO;
    let mut covered = 0;
    for (i, &a) in atoms.iter().enumerate() {
        if a & set == a {
            e = e.join(Elem::atom(i));
            covered |= a;
        }
    }
    (covered == set).then_some(e)
}

/// Verdicts plus the table `element ↦ point set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub verdicts: AxiomReport,
    pub table: Vec<(String, String)>,
}

pub fn verify_stone_duality(b: &FiniteBooleanAlgebra) -> Result<DualityReport> {
    b.require_exhaustive(crate::algebra::EXHAUSTIVE_ATOMS)?;
    let s = ContactStructure::overlap(b.clone());
    let ps = point_space(&s, SpaceKind::Stone)?;
    let x = &ps.space;
    let (co, atoms) = clopen_algebra(x)?;
    let i = |e: Elem| ps.basis_set(e);
    let all: Vec<Elem> = b.elements().collect();
    let size = b.size();
    let mut r = AxiomReport::new();

    let images: BTreeSet<u32> = all.iter().map(|&e| i(e)).collect();
    let clopens: BTreeSet<u32> = x.clopens().into_iter().collect();
    let bijective = images.len() == all.len() && images == clopens;
    r.push(if bijective {
        Verdict::pass("bijective", size)
    } else {
        Verdict::fail("bijective", vec![format!("{} images, {} clopens", images.len(), clopens.len())])
    });
    let pair = |e: Elem, f: Elem| vec![b.format(e), b.format(f)];
    let mut meet = None;
    let mut join = None;
    for &e in &all {
        for &f in &all {
            if meet.is_none() && i(e.meet(f)) != i(e) & i(f) {
                meet = Some(pair(e, f));
            }
            if join.is_none() && i(e.join(f)) != i(e) | i(f) {
                join = Some(pair(e, f));
            }
        }
    }
    r.push(Verdict::from_search("preserves-meet", size * size, meet));
    r.push(Verdict::from_search("preserves-join", size * size, join));
    r.push(Verdict::from_search(
        "preserves-complement",
        size,
        all.iter()
            .find(|&&e| i(b.complement(e)) != x.full() & !i(e))
            .map(|&e| vec![b.format(e)]),
    ));
    let images_in_co = all.iter().all(|&e| elem_of(&atoms, i(e)).is_some_and(|c| co.contains(c)));
    let iso = r.all_pass() && images_in_co && co.size() == size;
    r.push(if iso {
        Verdict::pass("isomorphism", size)
    } else {
        Verdict::fail("isomorphism", vec![format!("|B| = {size}, |CO| = {}", co.size())])
    });
    let table = all.iter().map(|&e| (b.format(e), x.format_set(i(e)))).collect();
    Ok(DualityReport { verdicts: r, table })
}

pub fn verify_de_vries_embedding(s: &ContactStructure) -> Result<DualityReport> {
    let ps = point_space(s, SpaceKind::End)?;
    let x = &ps.space;
    let b = s.algebra();
    let all: Vec<Elem> = b.elements().collect();
    let size = b.size();
    let e = |y: Elem| ps.basis_set(y);
    let ro = x.regular_opens();
    let wi = |u: u32, v: u32| x.closure(u) & !v == 0;
    let mut r = AxiomReport::new();

    r.push(Verdict::from_search(
        "regular-open-values",
        size,
        all.iter().find(|&&y| !ro.contains(&e(y))).map(|&y| vec![b.format(y)]),
    ));
    let bounds = e(Elem::ZERO) == 0 && e(b.unit()) == x.full();
    r.push(if bounds {
        Verdict::pass("preserves-bounds", 2)
    } else {
        Verdict::fail("preserves-bounds", vec![x.format_set(e(Elem::ZERO)), x.format_set(e(b.unit()))])
    });
    let mut meet = None;
    let mut ll = None;
    let mut injective = None;
    for &y in &all {
        for &z in &all {
            let w = || vec![b.format(y), b.format(z)];
            if meet.is_none() && e(y.meet(z)) != e(y) & e(z) {
                meet = Some(w());
            }
            if ll.is_none() && s.well_inside(y, z) != wi(e(y), e(z)) {
                ll = Some(w());
            }
            if injective.is_none() && y < z && e(y) == e(z) {
                injective = Some(w());
            }
        }
    }
    r.push(Verdict::from_search("preserves-meet", size * size, meet));
    r.push(Verdict::from_search("preserves-well-inside", size * size, ll));
    r.push(Verdict::from_search("injective", size * size, injective));
    let embedding = r.all_pass();

    let mut dense = None;
    for &u in &ro {
        for &v in &ro {
            if u != 0 && wi(u, v) && !all.iter().any(|&z| wi(u, e(z)) && wi(e(z), v)) {
                dense = Some(vec![x.format_set(u), x.format_set(v)]);
                break;
            }
        }
    }
    let dense_ok = dense.is_none();
    r.push(Verdict::from_search("dense", (ro.len() * ro.len()) as u64, dense));
    r.push(if embedding {
        Verdict::pass("embedding", 1)
    } else {
        Verdict::fail("embedding", vec!["see failed verdicts above".into()])
    });
    let images: BTreeSet<u32> = all.iter().map(|&y| e(y)).collect();
    let onto = ro.iter().all(|u| images.contains(u));
    r.push(if embedding && dense_ok && onto {
        Verdict::pass("isomorphism", ro.len() as u64)
    } else {
        Verdict::fail("isomorphism", vec![format!("{} regular opens, {} images", ro.len(), images.len())])
    });
    let table = all.iter().map(|&y| (b.format(y), x.format_set(e(y)))).collect();
    Ok(DualityReport { verdicts: r, table })
}

fn max_disjoint_family(sets: &[u32]) -> usize {
    fn go(sets: &[u32], used: u32) -> usize {
        match sets.split_first() {
            None => 0,
            Some((&s, rest)) => {
                let skip = go(rest, used);
                if s & used == 0 {
                    skip.max(1 + go(rest, used | s))
                } else {
                    skip
                }
            }
        }
    }
    let nonzero: Vec<u32> = sets.iter().copied().filter(|&s| s != 0).collect();
    go(&nonzero, 0)
}

/// Largest antichains on both sides, and `x ⊥ y ⟺ 𝒢(x) ∩ 𝒢(y) = ∅` when G1 holds.
pub fn ccc_report(s: &ContactStructure) -> Result<AxiomReport> {
    let b = s.algebra();
    let elems: Vec<u32> = b.nonzero().map(|x| x.bits()).collect();
    let mut r = AxiomReport::new();
    let alg = max_disjoint_family(&elems);
    r.push(Verdict::pass("max-antichain(algebra)", alg as u64).with_note(format!("size {alg}")));
    let ps = point_space(s, SpaceKind::Grz)?;
    let space = max_disjoint_family(ps.space.opens());
    r.push(Verdict::pass("max-antichain(space)", space as u64).with_note(format!("size {space}")));
    let g1 = points::check_g1_g2(s)?;
    if g1.get("G1").is_some_and(|v| v.failed()) {
        r.push(Verdict::skipped("incompatible<=>disjoint", "G1 fails"));
        return Ok(r);
    }
    let all: Vec<Elem> = b.elements().collect();
    let mut witness = None;
    for &x in &all {
        for &y in &all {
            let apart = !x.overlaps(y);
            let disjoint = ps.basis_set(x) & ps.basis_set(y) == 0;
            if apart != disjoint && witness.is_none() {
                witness = Some(vec![b.format(x), b.format(y)]);
            }
        }
    }
    r.push(Verdict::from_search(
        "incompatible<=>disjoint",
        (all.len() * all.len()) as u64,
        witness,
    ));
    Ok(r)
}

/// Property report for a point space, with a note on an unsettled question
/// for spaces of G-points.
pub fn space_report(s: &ContactStructure, kind: SpaceKind) -> Result<(PointSpace, AxiomReport)> {
    let ps = point_space(s, kind)?;
    let mut r = AxiomReport::new();
    if let Some(flag) = &ps.flag {
        r.push(Verdict::skipped("points", flag.clone()));
    }
    r.extend(check_space_properties(&ps.space));
    if kind == SpaceKind::Stone {
        let b = s.algebra();
        let mut cases = 0;
        let mut witness = None;
        for x in b.nonzero() {
            for y in b.nonzero().filter(|&y| x.overlaps(y)) {
                cases += 1;
                let ok = b
                    .extend_fip_family(&[x, y])
                    .is_ok_and(|u| u.contains(x) && u.contains(y) && b.is_ultrafilter(u));
                if !ok && witness.is_none() {
                    witness = Some(vec![b.format(x), b.format(y)]);
                }
            }
        }
        r.push(Verdict::from_search("fip-ultrafilter", cases, witness));
    }
    if kind == SpaceKind::Grz {
        r.push(Verdict::skipped(
            "interpolation-counterpart",
            "open: which property of the space of G-points corresponds to interpolation is not known",
        ));
    }
    Ok((ps, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ContactStructure {
        ContactStructure::from_index_edges(FiniteBooleanAlgebra::with_atoms(n).unwrap(), edges)
    }

    fn overlap(n: usize) -> ContactStructure {
        ContactStructure::overlap(FiniteBooleanAlgebra::with_atoms(n).unwrap())
    }

    #[test]
    fn stone_space_of_three_atoms() {
        let ps = point_space(&overlap(3), SpaceKind::Stone).unwrap();
        assert_eq!(ps.space.len(), 3);
        assert_eq!(ps.space.opens().len(), 8);
        let r = check_space_properties(&ps.space);
        for a in ["Hausdorff", "zero-dimensional", "totally-disconnected", "discrete", "compact"] {
            assert!(r.get(a).unwrap().passed(), "{a}");
        }
    }

    #[test]
    fn end_spaces() {
        let ps = point_space(&graph(3, &[(0, 1), (1, 2)]), SpaceKind::End).unwrap();
        assert_eq!(ps.space.len(), 1);
        assert_eq!(ps.space.opens().len(), 2);
        assert!(check_space_properties(&ps.space).get("connected").unwrap().passed());
        let ps = point_space(&graph(3, &[(0, 1)]), SpaceKind::End).unwrap();
        assert_eq!(ps.space.components().len(), 2);
    }

    #[test]
    fn empty_grz_space_is_flagged() {
        let ps = point_space(&graph(3, &[(0, 1), (1, 2)]), SpaceKind::Grz).unwrap();
        assert!(ps.space.is_empty());
        assert_eq!(ps.flag.as_deref(), Some("G1 fails: no G-points"));
    }

    #[test]
    fn stone_duality_small() {
        for n in 1..=3 {
            let d = verify_stone_duality(&FiniteBooleanAlgebra::with_atoms(n).unwrap()).unwrap();
            assert!(d.verdicts.all_pass(), "{}", d.verdicts);
            assert_eq!(d.table.len(), 1 << n);
        }
    }

    #[test]
    fn de_vries_embedding_examples() {
        let d = verify_de_vries_embedding(&overlap(3)).unwrap();
        assert!(d.verdicts.get("isomorphism").unwrap().passed(), "{}", d.verdicts);
        let d = verify_de_vries_embedding(&graph(3, &[(0, 1), (1, 2)])).unwrap();
        assert!(d.verdicts.get("injective").unwrap().failed());
        assert!(d.verdicts.get("embedding").unwrap().failed());
        assert!(verify_de_vries_embedding(&overlap(1)).unwrap().verdicts.all_pass());
    }

    #[test]
    fn ccc_examples() {
        let r = ccc_report(&overlap(3)).unwrap();
        assert_eq!(r.get("max-antichain(algebra)").unwrap().cases, Some(3));
        assert_eq!(r.get("incompatible<=>disjoint").unwrap().cases, Some(64));
        assert!(r.all_pass());
        let r = ccc_report(&graph(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(r.get("incompatible<=>disjoint").unwrap().status, crate::report::Status::Skipped);
        assert_eq!(ccc_report(&overlap(1)).unwrap().get("max-antichain(algebra)").unwrap().cases, Some(1));
    }

    #[test]
    fn basis_validation() {
        assert!(TopSpace::from_basis(vec!["p".into(), "q".into()], &[1]).is_err());
        assert!(TopSpace::from_basis(vec!["p".into(), "q".into(), "r".into()], &[3, 6]).is_err());
        let x = TopSpace::from_basis(vec!["p".into(), "q".into()], &[1, 3]).unwrap();
        assert_eq!(x.opens(), &[0, 1, 3]);
        assert_eq!(x.closure(1), 3);
        assert!(x.to_dot().contains("o1 -> o3"));
    }
}
