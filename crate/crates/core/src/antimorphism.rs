//! Antimorphisms: permutations mapping edges onto non-edges.
//!
//! A graph is self-complementary exactly when it has one. The searches
//! here are backtracking constructions of an isomorphism from the graph
//! to its complement, pruned by degrees, by incremental pair
//! consistency, and (for the constrained variants) by the cycle
//! structure closed so far.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::perm::{CycleDecomposition, Permutation};

/// Does `tau` map every edge to a non-edge and vice versa?
pub fn is_antimorphism(g: &Graph, tau: &Permutation) -> Result<bool, Error> {
    let n = g.order();
    if tau.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: tau.len() });
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) == g.has_edge(tau.apply(u), tau.apply(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Sachs/Ringel cycle law: every cycle length is a multiple of
/// four, except for at most one fixed point.
pub fn check_sachs_ringel(cycles: &CycleDecomposition) -> bool {
    let mut fixed_points = 0;
    for cycle in cycles.cycles() {
        match cycle.len() {
            1 => fixed_points += 1,
            len if len % 4 == 0 => {}
            _ => return false,
        }
    }
    fixed_points <= 1
}

/// Cheap rejections shared by all searches.
fn obviously_not_sc(g: &Graph) -> bool {
    let n = g.order();
    if n % 4 == 2 || n % 4 == 3 {
        return true;
    }
    // The edge count must be half of all pairs.
    if 2 * g.edge_count() != n * n.saturating_sub(1) / 2 {
        return true;
    }
    // Degrees must pair up as d <-> n-1-d.
    let mut buckets = alloc::vec![0usize; n.max(1)];
    for v in 0..n {
        buckets[g.degree(v)] += 1;
    }
    (0..n).any(|d| buckets[d] != buckets[n - 1 - d])
}

/// Deterministic antimorphism search.
///
/// Images are assigned in vertex order, candidates tried ascending, so
/// the first solution is the lexicographically least image array.
pub fn find_antimorphism(g: &Graph) -> Option<Permutation> {
    if obviously_not_sc(g) {
        return None;
    }
    let n = g.order();
    let candidates = degree_candidates(g);
    let mut images = alloc::vec![usize::MAX; n];
    let mut used = 0u64;
    if assign_in_vertex_order(g, &candidates, &mut images, &mut used, 0) {
        let tau = Permutation::from_images(images).expect("search yields a bijection");
        debug_assert_eq!(is_antimorphism(g, &tau), Ok(true));
        Some(tau)
    } else {
        None
    }
}

/// An antimorphism all of whose cycle lengths are powers of two.
///
/// One always exists on a self-complementary graph; if the search comes
/// back empty on one, that is an internal inconsistency, never a quiet
/// failure.
pub fn find_power_of_two_antimorphism(g: &Graph) -> Result<Permutation, Error> {
    let n = g.order();
    let allowed = |len: usize| len.is_power_of_two() && (len == 1 || len.is_multiple_of(4));
    let max_len = if n == 0 { 0 } else { 1usize << (usize::BITS - 1 - n.leading_zeros()) };
    if let Some(tau) = chain_search(g, &allowed, max_len, None) {
        return Ok(tau);
    }
    if find_antimorphism(g).is_none() {
        return Err(Error::NotSelfComplementary);
    }
    Err(Error::Inconsistency(
        "self-complementary graph without a power-of-two antimorphism",
    ))
}

/// An antimorphism whose cycle lengths are exactly the given multiset.
pub fn find_antimorphism_with_cycle_lengths(g: &Graph, lengths: &[usize]) -> Option<Permutation> {
    if lengths.iter().sum::<usize>() != g.order() || obviously_not_sc(g) {
        return None;
    }
    let mut remaining: BTreeMap<usize, usize> = BTreeMap::new();
    for &len in lengths {
        *remaining.entry(len).or_insert(0) += 1;
    }
    let max_len = *remaining.keys().next_back().unwrap_or(&0);
    let allowed = |len: usize| len == 1 || len.is_multiple_of(4);
    chain_search(g, &allowed, max_len, Some(remaining))
}

/// Candidate images by degree: deg(tau(v)) must be n-1-deg(v).
fn degree_candidates(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut by_degree = alloc::vec![0u64; n.max(1)];
    for v in 0..n {
        by_degree[g.degree(v)] |= 1 << v;
    }
    (0..n).map(|v| by_degree[n - 1 - g.degree(v)]).collect()
}

fn consistent(g: &Graph, images: &[usize], v: usize, w: usize) -> bool {
    for (u, &image) in images.iter().enumerate() {
        if u == v || image == usize::MAX {
            continue;
        }
        if g.has_edge(u, v) == g.has_edge(image, w) {
            return false;
        }
    }
    true
}

fn assign_in_vertex_order(
    g: &Graph,
    candidates: &[u64],
    images: &mut Vec<usize>,
    used: &mut u64,
    v: usize,
) -> bool {
    let n = g.order();
    if v == n {
        return true;
    }
    let mut pool = candidates[v] & !*used;
    while pool != 0 {
        let w = pool.trailing_zeros() as usize;
        pool &= pool - 1;
        if !consistent(g, images, v, w) {
            continue;
        }
        images[v] = w;
        if closed_cycle_length(images, v).is_none_or(|len| len == 1 || len % 4 == 0) {
            *used |= 1 << w;
            if assign_in_vertex_order(g, candidates, images, used, v + 1) {
                return true;
            }
            *used &= !(1 << w);
        }
        images[v] = usize::MAX;
    }
    false
}

/// If assigning images[v] closed a cycle, its length.
fn closed_cycle_length(images: &[usize], v: usize) -> Option<usize> {
    let mut x = images[v];
    let mut len = 1;
    while x != v {
        if x >= images.len() || images[x] == usize::MAX {
            return None;
        }
        x = images[x];
        len += 1;
    }
    Some(len)
}

/// Backtracking that assigns images along orbits, so a cycle's length
/// is known the moment it closes and bad cycle shapes are cut early.
fn chain_search(
    g: &Graph,
    allowed: &dyn Fn(usize) -> bool,
    max_len: usize,
    remaining: Option<BTreeMap<usize, usize>>,
) -> Option<Permutation> {
    let n = g.order();
    if obviously_not_sc(g) {
        return None;
    }
    let mut state = ChainState {
        g,
        candidates: degree_candidates(g),
        images: alloc::vec![usize::MAX; n],
        mapped_to: 0,
        remaining,
        max_len,
    };
    if state.open_new_chain(allowed) {
        let tau = Permutation::from_images(state.images).expect("search yields a bijection");
        debug_assert_eq!(is_antimorphism(g, &tau), Ok(true));
        Some(tau)
    } else {
        None
    }
}

struct ChainState<'a> {
    g: &'a Graph,
    candidates: Vec<u64>,
    images: Vec<usize>,
    /// Vertices already used as an image.
    mapped_to: u64,
    /// Cycle-length multiset still to realize, when prescribed.
    remaining: Option<BTreeMap<usize, usize>>,
    max_len: usize,
}

impl ChainState<'_> {
    fn open_new_chain(&mut self, allowed: &dyn Fn(usize) -> bool) -> bool {
        match self.images.iter().position(|&w| w == usize::MAX) {
            None => self.remaining.as_ref().is_none_or(|r| r.values().all(|&c| c == 0)),
            Some(start) => self.extend_chain(start, start, 0, allowed),
        }
    }

    fn extend_chain(
        &mut self,
        start: usize,
        tail: usize,
        len: usize,
        allowed: &dyn Fn(usize) -> bool,
    ) -> bool {
        let mut pool = self.candidates[tail] & !self.mapped_to;
        while pool != 0 {
            let w = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let closes = w == start;
            if !closes && self.images[w] != usize::MAX {
                continue;
            }
            if closes {
                let cycle_len = len + 1;
                if !allowed(cycle_len) || !self.take_length(cycle_len) {
                    continue;
                }
            } else if len + 2 > self.max_len {
                continue;
            }
            if consistent(self.g, &self.images, tail, w) {
                self.images[tail] = w;
                self.mapped_to |= 1 << w;
                let ok = if closes {
                    self.open_new_chain(allowed)
                } else {
                    self.extend_chain(start, w, len + 1, allowed)
                };
                if ok {
                    return true;
                }
                self.images[tail] = usize::MAX;
                self.mapped_to &= !(1 << w);
            }
            if closes {
                self.give_back_length(len + 1);
            }
        }
        false
    }

    fn take_length(&mut self, len: usize) -> bool {
        match &mut self.remaining {
            None => true,
            Some(multiset) => match multiset.get_mut(&len) {
                Some(count) if *count > 0 => {
                    *count -= 1;
                    true
                }
                _ => false,
            },
        }
    }

    fn give_back_length(&mut self, len: usize) {
        if let Some(multiset) = &mut self.remaining {
            *multiset.get_mut(&len).expect("length was taken") += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    #[test]
    fn p4_antimorphism() {
        let p4 = Graph::path(4);
        let tau = parse_cycles("(0 1 3 2)", 4).unwrap();
        assert_eq!(is_antimorphism(&p4, &tau), Ok(true));
        assert_eq!(is_antimorphism(&p4, &Permutation::identity(4)), Ok(false));
    }

    #[test]
    fn c5_doubling_antimorphism() {
        let c5 = Graph::cycle(5);
        let tau = parse_cycles("(0)(1 2 4 3)", 5).unwrap();
        assert_eq!(is_antimorphism(&c5, &tau), Ok(true));
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let err = is_antimorphism(&Graph::path(4), &Permutation::identity(5)).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { expected: 4, found: 5 });
    }

    #[test]
    fn sachs_ringel_law() {
        let ok = |cycles: &[Vec<usize>], n| {
            check_sachs_ringel(&Permutation::from_cycles(n, cycles).unwrap().cycle_decomposition())
        };
        assert!(ok(&[alloc::vec![0, 1, 2, 3]], 4));
        assert!(ok(&[alloc::vec![0], alloc::vec![1, 2, 3, 4]], 5));
        assert!(!ok(&[alloc::vec![0, 1], alloc::vec![2, 3]], 4));
        assert!(!ok(&[alloc::vec![0], alloc::vec![1]], 2));
    }

    #[test]
    fn search_finds_least_p4_antimorphism() {
        let tau = find_antimorphism(&Graph::path(4)).unwrap();
        assert_eq!(tau.images(), &[1, 3, 0, 2]);
        assert_eq!(tau.cycle_decomposition().lengths(), alloc::vec![4]);
    }

    #[test]
    fn k3_has_no_antimorphism() {
        assert!(find_antimorphism(&Graph::complete(3)).is_none());
    }

    #[test]
    fn c4_has_no_antimorphism() {
        // Right vertex count, wrong edge count.
        assert!(find_antimorphism(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn power_of_two_on_c5() {
        let tau = find_power_of_two_antimorphism(&Graph::cycle(5)).unwrap();
        assert_eq!(tau.cycle_decomposition().lengths(), alloc::vec![1, 4]);
        assert_eq!(is_antimorphism(&Graph::cycle(5), &tau), Ok(true));
    }

    #[test]
    fn power_of_two_on_p4() {
        let tau = find_power_of_two_antimorphism(&Graph::path(4)).unwrap();
        assert_eq!(tau.cycle_decomposition().lengths(), alloc::vec![4]);
    }

    #[test]
    fn power_of_two_rejects_non_sc() {
        assert_eq!(
            find_power_of_two_antimorphism(&Graph::complete(4)).unwrap_err(),
            Error::NotSelfComplementary
        );
    }

    #[test]
    fn cycle_type_search() {
        let c5 = Graph::cycle(5);
        let tau = find_antimorphism_with_cycle_lengths(&c5, &[4, 1]).unwrap();
        assert_eq!(tau.cycle_decomposition().lengths(), alloc::vec![1, 4]);
        assert!(find_antimorphism_with_cycle_lengths(&c5, &[5]).is_none());
        assert!(find_antimorphism_with_cycle_lengths(&c5, &[4]).is_none());
    }

    #[test]
    fn square_of_antimorphism_is_automorphism() {
        for g in [Graph::path(4), Graph::cycle(5)] {
            let tau = find_antimorphism(&g).unwrap();
            let sq = tau.square();
            for u in 0..g.order() {
                for v in u + 1..g.order() {
                    assert_eq!(g.has_edge(u, v), g.has_edge(sq.apply(u), sq.apply(v)));
                }
            }
        }
    }
}
