//! Permutations of `{0..n-1}` and their cycle structure.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &w in &images {
            if w >= n || seen[w] {
                return Err(Error::NotAPermutation);
            }
            seen[w] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles; unmentioned vertices are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = alloc::vec![false; n];
        for cycle in cycles {
            for (idx, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::DuplicateVertex { vertex: v });
                }
                seen[v] = true;
                images[v] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.len()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        Permutation { images }
    }

    /// `self` after `other`: the result maps v to self(other(v)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// The square, v -> self(self(v)).
    pub fn square(&self) -> Permutation {
        self.compose(self)
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = alloc::vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = alloc::vec![start];
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_decomposition())
    }
}

/// Disjoint cycles covering `0..n`.
///
/// Normalized so that each cycle starts at its smallest element and
/// cycles are listed by ascending first element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Cycle lengths in ascending order.
    pub fn lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.cycles).expect("cycles are disjoint by construction")
    }
}

impl fmt::Display for CycleDecomposition {
    /// The text form `(0 1 3 2)(4)`, fixed points written explicitly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parse the `(0 1 3 2)(4)` text form of a permutation on `0..n`.
///
/// Every vertex must appear exactly once; fixed points are spelled out.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation, Error> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut digits = String::new();
    let mut mentioned = 0usize;
    for ch in text.trim().chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(Error::BadCycleNotation { reason: "nested '('" });
                }
                current = Some(Vec::new());
            }
            ')' => {
                let mut cycle = current.take().ok_or(Error::BadCycleNotation {
                    reason: "')' without '('",
                })?;
                if !digits.is_empty() {
                    cycle.push(flush_number(&mut digits)?);
                }
                if cycle.is_empty() {
                    return Err(Error::BadCycleNotation { reason: "empty cycle" });
                }
                mentioned += cycle.len();
                cycles.push(cycle);
            }
            '0'..='9' => {
                if current.is_none() {
                    return Err(Error::BadCycleNotation { reason: "digit outside cycle" });
                }
                digits.push(ch);
            }
            ' ' | ',' => {
                if !digits.is_empty() {
                    let v = flush_number(&mut digits)?;
                    current.as_mut().unwrap().push(v);
                }
            }
            _ => return Err(Error::BadCycleNotation { reason: "unexpected character" }),
        }
    }
    if current.is_some() {
        return Err(Error::BadCycleNotation { reason: "unclosed '('" });
    }
    if mentioned != n {
        return Err(Error::BadCycleNotation {
            reason: "every vertex must appear exactly once",
        });
    }
    Permutation::from_cycles(n, &cycles)
}

fn flush_number(digits: &mut String) -> Result<usize, Error> {
    let v = digits
        .parse()
        .map_err(|_| Error::BadCycleNotation { reason: "bad number" })?;
    digits.clear();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn identity_decomposes_into_fixed_points() {
        let cycles = Permutation::identity(4).cycle_decomposition();
        assert_eq!(cycles.lengths(), alloc::vec![1, 1, 1, 1]);
        assert_eq!(cycles.to_string(), "(0)(1)(2)(3)");
    }

    #[test]
    fn four_cycle_decomposition() {
        let p = Permutation::from_cycles(4, &[alloc::vec![0, 1, 3, 2]]).unwrap();
        assert_eq!(p.images(), &[1, 3, 0, 2]);
        let cycles = p.cycle_decomposition();
        assert_eq!(cycles.cycles(), &[alloc::vec![0, 1, 3, 2]]);
        assert_eq!(cycles.to_permutation(), p);
    }

    #[test]
    fn doubling_mod_five() {
        let p = Permutation::from_images(alloc::vec![0, 2, 4, 1, 3]).unwrap();
        let cycles = p.cycle_decomposition();
        assert_eq!(cycles.cycles(), &[alloc::vec![0], alloc::vec![1, 2, 4, 3]]);
        assert_eq!(cycles.to_string(), "(0)(1 2 4 3)");
    }

    #[test]
    fn recomposing_is_identity_map() {
        let p = Permutation::from_images(alloc::vec![3, 0, 5, 1, 2, 4, 6]).unwrap();
        assert_eq!(p.cycle_decomposition().to_permutation(), p);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(7));
    }

    #[test]
    fn cycle_text_round_trip() {
        for text in ["(0 1 3 2)(4)", "(0)(1 2 4 3)", "(0)"] {
            let n = text.chars().filter(char::is_ascii_digit).count();
            let p = parse_cycles(text, n).unwrap();
            assert_eq!(p.cycle_decomposition().to_string(), text);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_cycles("(0 1", 2).is_err());
        assert!(parse_cycles("(0 1)(1)", 2).is_err());
        assert!(parse_cycles("(0 2)", 3).is_err());
        assert!(parse_cycles("0 1", 2).is_err());
        assert!(Permutation::from_images(alloc::vec![0, 0]).is_err());
        assert!(Permutation::from_images(alloc::vec![1, 2]).is_err());
    }
}
