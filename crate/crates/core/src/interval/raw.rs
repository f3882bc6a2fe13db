use super::rational::Bound;
use super::region::Region;
use crate::error::{Error, Result};
use std::fmt;

/// A finite union of open intervals kept exactly as a set: overlapping pieces
/// are merged, pieces that merely share an endpoint stay apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    parts: Vec<(Bound, Bound)>,
}

impl IntervalSet {
    pub fn canonicalize(raw: &[(Bound, Bound)]) -> Result<IntervalSet> {
        for (a, b) in raw {
            if a >= b {
                return Err(Error::EmptyInterval {
                    lower: a.to_string(),
                    upper: b.to_string(),
                });
            }
        }
        let mut sorted = raw.to_vec();
        sorted.sort();
        let mut parts: Vec<(Bound, Bound)> = Vec::new();
        for (a, b) in sorted {
            match parts.last_mut() {
                Some((_, end)) if a < *end => {
                    if b > *end {
                        *end = b;
                    }
                }
                _ => parts.push((a, b)),
            }
        }
        Ok(IntervalSet { parts })
    }

    pub fn parts(&self) -> &[(Bound, Bound)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// No two pieces share an endpoint.
    pub fn is_regular_open(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].1 != w[1].0)
    }

    /// `Int Cl` of the set.
    pub fn regularize(&self) -> Region {
        Region::from_intervals(&self.parts).expect("canonical parts are nonempty intervals")
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("empty");
        }
        let items: Vec<String> = self.parts.iter().map(|(a, b)| format!("({a},{b})")).collect();
        f.write_str(&items.join(" | "))
    }
}
