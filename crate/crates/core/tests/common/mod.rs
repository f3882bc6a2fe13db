#![allow(dead_code)]

use bca_core::algebra::FiniteBooleanAlgebra;
use bca_core::contact::ContactStructure;

/// Every simple graph on `n` vertices, as edge lists. Reflexivity is implicit.
pub fn all_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

pub fn structure(n: usize, edges: &[(usize, usize)]) -> ContactStructure {
    ContactStructure::from_index_edges(FiniteBooleanAlgebra::with_atoms(n).unwrap(), edges)
}

pub fn path(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn cycle(n: usize) -> Vec<(usize, usize)> {
    let mut e = path(n);
    if n > 2 {
        e.push((n - 1, 0));
    }
    e
}

pub fn complete(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Independent model of a contact structure on raw bitmasks.
pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for (i, row) in adj.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Oracle { n, adj }
    }

    pub fn unit(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn elements(&self) -> std::ops::RangeInclusive<u32> {
        0..=self.unit()
    }

    fn members(&self, x: u32) -> Vec<usize> {
        (0..self.n).filter(|i| x >> i & 1 == 1).collect()
    }

    pub fn contact(&self, x: u32, y: u32) -> bool {
        self.members(x)
            .iter()
            .any(|&p| self.members(y).iter().any(|&q| self.adj[p][q]))
    }

    pub fn well_inside(&self, x: u32, y: u32) -> bool {
        !self.contact(x, self.unit() & !y)
    }

    pub fn connected(&self) -> bool {
        let mut seen = 1u32;
        loop {
            let next = (0..self.n)
                .filter(|&q| (0..self.n).any(|p| seen >> p & 1 == 1 && self.adj[p][q]))
                .fold(seen, |acc, q| acc | 1 << q);
            if next == seen {
                return seen == self.unit();
            }
            seen = next;
        }
    }

    pub fn component_count(&self) -> usize {
        let mut left = self.unit();
        let mut count = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = (0..self.n)
                    .filter(|&q| (0..self.n).any(|p| comp >> p & 1 == 1 && self.adj[p][q]))
                    .fold(comp, |acc, q| acc | 1 << q);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            count += 1;
        }
        count
    }

    /// Every filter as a membership bitmap over the `2^n` elements, found by
    /// testing each family of elements against the filter axioms.
    pub fn filters(&self) -> Vec<u64> {
        let size = 1usize << self.n;
        assert!(size <= 16, "filter oracle enumerates 2^(2^n) families");
        let mut out = Vec::new();
        for fam in 1u64..1 << size {
            let has = |x: u32| fam >> x & 1 == 1;
            if has(0) {
                continue;
            }
            let up = self.elements().all(|x| !has(x) || self.elements().all(|y| x & !y != 0 || has(y)));
            let meets = self.elements().all(|x| !has(x) || self.elements().all(|y| !has(y) || has(x & y)));
            if up && meets {
                out.push(fam);
            }
        }
        out
    }

    pub fn is_round(&self, f: u64) -> bool {
        self.elements()
            .filter(|&x| f >> x & 1 == 1)
            .all(|x| self.elements().any(|y| f >> y & 1 == 1 && self.well_inside(y, x)))
    }

    pub fn maximal(fams: &[u64]) -> Vec<u64> {
        fams.iter()
            .copied()
            .filter(|&f| !fams.iter().any(|&g| g != f && f & g == f))
            .collect()
    }

    pub fn touches(&self, x: u32, f: u64) -> bool {
        self.elements().filter(|&y| f >> y & 1 == 1).all(|y| self.contact(x, y))
    }

    pub fn dagger(&self, f: u64) -> bool {
        let u = self.unit();
        self.elements().all(|x| {
            self.elements()
                .all(|y| self.contact(x, y) || f >> (u & !x) & 1 == 1 || f >> (u & !y) & 1 == 1)
        })
    }

    pub fn cross(&self, f: u64) -> bool {
        let t: Vec<u32> = self.elements().filter(|&x| x != 0 && self.touches(x, f)).collect();
        t.iter().all(|&x| t.iter().all(|&y| self.contact(x, y)))
    }

    /// Sets of nonzero regions satisfying r1–r3 (r0 by construction),
    /// enumerated as subsets of the nonzero elements.
    pub fn g_representatives(&self) -> Vec<Vec<u32>> {
        let nz: Vec<u32> = (1..=self.unit()).collect();
        let mut out = Vec::new();
        for mask in 1u64..1 << nz.len() {
            let q: Vec<u32> = nz.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            let chain = q
                .iter()
                .all(|&u| q.iter().all(|&v| u == v || self.well_inside(u, v) || self.well_inside(v, u)));
            if !chain {
                continue;
            }
            let deep = q.iter().all(|&u| q.iter().any(|&v| self.well_inside(v, u)));
            if !deep {
                continue;
            }
            let r3 = self.elements().all(|x| {
                self.elements().all(|y| {
                    !q.iter().all(|&u| u & x != 0 && u & y != 0) || self.contact(x, y)
                })
            });
            if r3 {
                out.push(q);
            }
        }
        out
    }

    /// Filter generated by a set of regions: everything above a finite meet.
    pub fn generated(&self, q: &[u32]) -> u64 {
        let mut f = 0u64;
        for x in self.elements() {
            let above = (1u64..1 << q.len()).any(|sub| {
                let m = q
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| sub >> i & 1 == 1)
                    .fold(self.unit(), |acc, (_, &u)| acc & u);
                m & !x == 0
            });
            if above {
                f |= 1 << x;
            }
        }
        f
    }
}

pub fn bitmap_of(f: bca_core::Filter, n: usize) -> u64 {
    (0u32..1 << n).filter(|&x| f.contains(bca_core::Elem(x))).fold(0, |acc, x| acc | 1 << x)
}
pub mod regions;
