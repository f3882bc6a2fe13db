//! Finite Boolean algebras as powerset lattices over named atoms.
//!
//! Elements are atom subsets stored as bitmasks: bit `i` set means atom `i`
//! lies below the element. Every filter of a finite Boolean algebra is the
//! principal filter of the meet of its members, so a [`Filter`] is stored as
//! its generator alone.

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Verdict};
use std::collections::HashSet;
use std::fmt;

/// Largest atom count an algebra may have.
pub const MAX_ATOMS: usize = 24;
/// Largest atom count accepted by the exhaustive filter checks.
pub const EXHAUSTIVE_ATOMS: usize = 5;

/// An element of a finite Boolean algebra, as a set of atom indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn atom(i: usize) -> Elem {
        Elem(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn meet(self, other: Elem) -> Elem {
        Elem(self.0 & other.0)
    }

    pub fn join(self, other: Elem) -> Elem {
        Elem(self.0 | other.0)
    }

    pub fn leq(self, other: Elem) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn overlaps(self, other: Elem) -> bool {
        self.0 & other.0 != 0
    }

    pub fn atom_count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_atom(self) -> bool {
        self.0.count_ones() == 1
    }

    /// Indices of the atoms below this element, ascending.
    pub fn atoms(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// Least-index atom below this element.
    pub fn least_atom(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Every element below `self`, in ascending bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Elem> {
        let full = self.0;
        let mut all: Vec<u32> = Vec::with_capacity(1 << full.count_ones());
        let mut s: u32 = 0;
        loop {
            all.push(s);
            if s == full {
                break;
            }
            s = (s.wrapping_sub(full)) & full;
        }
        all.sort_unstable();
        all.into_iter().map(Elem)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
    Complement,
    Leq,
    Overlap,
}

/// Result of [`FiniteBooleanAlgebra::lattice_operation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpValue {
    Element(Elem),
    Bool(bool),
}

/// The powerset algebra over a list of named atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBooleanAlgebra {
    names: Vec<String>,
}

impl FiniteBooleanAlgebra {
    pub fn new<S: AsRef<str>>(atom_names: &[S]) -> Result<Self> {
        if atom_names.is_empty() {
            return Err(Error::NoAtoms);
        }
        if atom_names.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atom_names.len()));
        }
        let mut seen = HashSet::new();
        let mut names = Vec::with_capacity(atom_names.len());
        for n in atom_names {
            let n = n.as_ref();
            if !seen.insert(n) {
                return Err(Error::DuplicateAtom(n.to_string()));
            }
            names.push(n.to_string());
        }
        Ok(FiniteBooleanAlgebra { names })
    }

    /// Algebra whose atoms are named `a`, `b`, ... (then `a1`, `b1`, ... past `z`).
    pub fn with_atoms(n: usize) -> Result<Self> {
        let names: Vec<String> = (0..n)
            .map(|i| {
                let letter = (b'a' + (i % 26) as u8) as char;
                if i < 26 {
                    letter.to_string()
                } else {
                    format!("{letter}{}", i / 26)
                }
            })
            .collect();
        Self::new(&names)
    }

    pub fn atom_names(&self) -> &[String] {
        &self.names
    }

    pub fn atom_count(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> u64 {
        1u64 << self.names.len()
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn unit(&self) -> Elem {
        Elem(((1u64 << self.names.len()) - 1) as u32)
    }

    pub fn atom(&self, i: usize) -> Elem {
        Elem::atom(i)
    }

    pub fn atoms(&self) -> impl Iterator<Item = Elem> {
        (0..self.names.len()).map(Elem::atom)
    }

    pub fn atom_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn element<S: AsRef<str>>(&self, names: &[S]) -> Result<Elem> {
        names.iter().try_fold(Elem::ZERO, |acc, n| {
            Ok(acc.join(Elem::atom(self.atom_index(n.as_ref())?)))
        })
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 & !self.unit().0 == 0
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::ForeignElement(x.0))
        }
    }

    /// All `2^n` elements in ascending bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..=self.unit().0).map(Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        (1..=self.unit().0).map(Elem)
    }

    pub fn complement(&self, x: Elem) -> Elem {
        Elem(!x.0 & self.unit().0)
    }

    pub fn lattice_operation(&self, op: LatticeOp, x: Elem, y: Option<Elem>) -> Result<OpValue> {
        self.check(x)?;
        if let Some(y) = y {
            self.check(y)?;
        }
        let need = || y.ok_or(Error::MissingOperand);
        Ok(match op {
            LatticeOp::Meet => OpValue::Element(x.meet(need()?)),
            LatticeOp::Join => OpValue::Element(x.join(need()?)),
            LatticeOp::Complement => OpValue::Element(self.complement(x)),
            LatticeOp::Leq => OpValue::Bool(x.leq(need()?)),
            LatticeOp::Overlap => OpValue::Bool(x.overlaps(need()?)),
        })
    }

    pub fn format(&self, x: Elem) -> String {
        let names: Vec<&str> = x.atoms().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn format_filter(&self, f: Filter) -> String {
        format!("↑{}", self.format(f.generator))
    }

    pub(crate) fn require_exhaustive(&self, limit: usize) -> Result<()> {
        if self.atom_count() > limit {
            Err(Error::OutsideExhaustiveScope {
                atoms: self.atom_count(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// Every proper filter, i.e. `↑g` for each nonzero `g`, ordered by generator.
    pub fn filters(&self) -> impl Iterator<Item = Filter> {
        self.nonzero().map(Filter::principal)
    }

    /// The ultrafilters: principal filters at atoms.
    pub fn ultrafilters(&self) -> Vec<Filter> {
        self.atoms().map(Filter::principal).collect()
    }

    /// Extend a family with the finite intersection property to an ultrafilter.
    ///
    /// Picks the least-index atom below the meet of the family.
    pub fn extend_fip_family(&self, family: &[Elem]) -> Result<Filter> {
        let mut meet = self.unit();
        for (i, &x) in family.iter().enumerate() {
            self.check(x)?;
            meet = meet.meet(x);
            if meet.is_zero() {
                return Err(Error::FipViolation {
                    sub_meet: family[..=i].iter().map(|&e| self.format(e)).collect(),
                });
            }
        }
        let atom = meet.least_atom().expect("meet is nonzero");
        Ok(Filter::principal(Elem::atom(atom)))
    }

    /// Witness pair for the failure of "x ⊥ y implies −x ∈ F or −y ∈ F".
    pub fn ddagger_witness(&self, f: Filter) -> Option<(Elem, Elem)> {
        for x in self.elements() {
            for y in self.elements() {
                if !x.overlaps(y)
                    && !f.contains(self.complement(x))
                    && !f.contains(self.complement(y))
                {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Over every proper filter: ultrafilter iff the incompatibility condition holds.
    pub fn check_ultrafilter_characterization(&self) -> Result<AxiomReport> {
        self.require_exhaustive(EXHAUSTIVE_ATOMS)?;
        let mut cases = 0;
        let mut witness = None;
        for f in self.filters() {
            cases += 1;
            let ultra = self.is_ultrafilter(f);
            let ddagger = self.ddagger_witness(f).is_none();
            if ultra != ddagger && witness.is_none() {
                witness = Some(vec![self.format_filter(f)]);
            }
        }
        let mut r = AxiomReport::new();
        r.push(Verdict::from_search("ultrafilter<=>(‡)", cases, witness));
        Ok(r)
    }

    /// Maximality among proper filters, by direct comparison with every other filter.
    pub fn is_ultrafilter(&self, f: Filter) -> bool {
        !f.generator.is_zero()
            && self
                .filters()
                .all(|g| !(f.is_subset_of(g) && f != g))
    }
}

/// A principal filter `↑g = {x : g ≤ x}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter {
    pub generator: Elem,
}

impl Filter {
    pub fn principal(generator: Elem) -> Self {
        Filter { generator }
    }

    pub fn contains(self, x: Elem) -> bool {
        self.generator.leq(x)
    }

    pub fn is_subset_of(self, other: Filter) -> bool {
        other.generator.leq(self.generator)
    }

    pub fn members(self, algebra: &FiniteBooleanAlgebra) -> impl Iterator<Item = Elem> + '_ {
        algebra.elements().filter(move |&x| self.contains(x))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}
