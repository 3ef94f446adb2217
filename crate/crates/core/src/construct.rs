//! Generators for self-complementary graphs: the block constructions
//! and exhaustive enumeration up to isomorphism.
//!
//! Enumeration walks one permutation per admissible cycle type, splits
//! the vertex pairs into orbits under it, and alternates edges along
//! each orbit; conjugate permutations yield the same isomorphism
//! classes, so one representative per type is enough. Deduplication is
//! a streaming set of canonical strings.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::antimorphism::{check_sachs_ringel, find_antimorphism, is_antimorphism};
use crate::canon::canonical_form;
use crate::error::Error;
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6;
use crate::perm::Permutation;

/// Default cap for [`enumerate_sc_graphs`]; the class counts explode
/// quickly past this.
pub const DEFAULT_ENUMERATION_GUARD: usize = 13;

/// Two copies of `g` and two of its complement, joined in a block path.
///
/// The vertex layout is fixed as [G1 | G3 | G4 | G2] with all edges
/// G1-G3, G3-G4 and G4-G2, so the returned antimorphism is the same
/// index formula for every input: it cycles i -> m+i -> 3m+i -> 2m+i.
/// Panics if the result would exceed 62 vertices.
pub fn p4_construction(g: &Graph) -> (Graph, Permutation) {
    let m = g.order();
    let out = j_construction(g, g);
    let mut images = alloc::vec![0; 4 * m];
    for i in 0..m {
        images[i] = m + i;
        images[m + i] = 3 * m + i;
        images[3 * m + i] = 2 * m + i;
        images[2 * m + i] = i;
    }
    let tau = Permutation::from_images(images).unwrap();
    assert_eq!(
        is_antimorphism(&out, &tau),
        Ok(true),
        "P4-construction must yield its block antimorphism"
    );
    (out, tau)
}

/// The two-graph variant: copies G1, G2 of `g` and H1, H2 of the
/// complement of `h`, with all edges G1-H1, H1-H2, H2-G2.
///
/// The result is self-complementary exactly when `g` and `h` are
/// isomorphic; deciding that is as hard as graph isomorphism itself.
pub fn j_construction(g: &Graph, h: &Graph) -> Graph {
    let m = g.order();
    let p = h.order();
    let n = 2 * m + 2 * p;
    assert!(n <= MAX_VERTICES, "construction exceeds {MAX_VERTICES} vertices");
    let hbar = h.complement();
    let mut out = Graph::empty(n);
    // Blocks: G1 = 0..m, H1 = m..m+p, H2 = m+p..m+2p, G2 = m+2p..n.
    for (u, v) in g.edges() {
        out.add_edge(u, v);
        out.add_edge(m + 2 * p + u, m + 2 * p + v);
    }
    for (u, v) in hbar.edges() {
        out.add_edge(m + u, m + v);
        out.add_edge(m + p + u, m + p + v);
    }
    for i in 0..m {
        for j in 0..p {
            out.add_edge(i, m + j);
            out.add_edge(m + 2 * p + i, m + p + j);
        }
    }
    for i in 0..p {
        for j in 0..p {
            out.add_edge(m + i, m + p + j);
        }
    }
    out
}

/// One candidate antimorphism together with an edge/non-edge choice per
/// orbit of its action on vertex pairs.
#[derive(Clone, Debug)]
pub struct OrbitChoice {
    sigma: Permutation,
    orbits: Vec<Vec<(usize, usize)>>,
    bits: Vec<bool>,
}

impl OrbitChoice {
    /// `sigma` must satisfy the Sachs/Ringel cycle law; that is what
    /// makes every pair orbit even, hence the alternation consistent.
    pub fn new(sigma: Permutation, bits: Vec<bool>) -> Result<Self, Error> {
        if !check_sachs_ringel(&sigma.cycle_decomposition()) {
            return Err(Error::WrongCycleType);
        }
        let orbits = pair_orbits(&sigma);
        if bits.len() != orbits.len() {
            return Err(Error::SizeMismatch { expected: orbits.len(), found: bits.len() });
        }
        debug_assert!(orbits.iter().all(|o| o.len() % 2 == 0));
        Ok(OrbitChoice { sigma, orbits, bits })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// One representative pair per orbit, in discovery order.
    pub fn orbit_reps(&self) -> Vec<(usize, usize)> {
        self.orbits.iter().map(|o| o[0]).collect()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The graph the bits describe; `sigma` is an antimorphism of it.
    pub fn decode(&self) -> Graph {
        let mut g = Graph::empty(self.sigma.len());
        decode_into(&mut g, &self.orbits, &self.bits);
        g
    }
}

fn decode_into(g: &mut Graph, orbits: &[Vec<(usize, usize)>], bits: &[bool]) {
    for (orbit, &bit) in orbits.iter().zip(bits) {
        let mut edge = bit;
        for &(u, v) in orbit {
            if edge {
                g.add_edge(u, v);
            }
            edge = !edge;
        }
    }
}

/// Orbits of `sigma` acting on unordered vertex pairs. Each orbit is
/// the walk from its lexicographically least pair.
pub fn pair_orbits(sigma: &Permutation) -> Vec<Vec<(usize, usize)>> {
    let n = sigma.len();
    let mut seen = alloc::vec![false; n * n];
    let mut orbits = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen[u * n + v] {
                continue;
            }
            let mut orbit = Vec::new();
            let (mut x, mut y) = (u, v);
            loop {
                seen[x.min(y) * n + x.max(y)] = true;
                orbit.push((x.min(y), x.max(y)));
                x = sigma.apply(x);
                y = sigma.apply(y);
                if x.min(y) == u && x.max(y) == v {
                    break;
                }
            }
            orbits.push(orbit);
        }
    }
    orbits
}

/// Cycle types allowed by the Sachs/Ringel law: multiples of four in
/// descending order, plus a single trailing 1 when n is odd.
pub fn sachs_ringel_cycle_types(n: usize) -> Vec<Vec<usize>> {
    let (quads, fixed) = match n % 4 {
        0 => (n, false),
        1 => (n - 1, true),
        _ => return Vec::new(),
    };
    let mut types = Vec::new();
    let mut current = Vec::new();
    partitions_into_quads(quads, quads, &mut current, &mut types);
    if fixed {
        for t in &mut types {
            t.push(1);
        }
    }
    types
}

fn partitions_into_quads(
    left: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        out.push(current.clone());
        return;
    }
    let mut part = max_part.min(left);
    part -= part % 4;
    while part >= 4 {
        current.push(part);
        partitions_into_quads(left - part, part, current, out);
        current.pop();
        part -= 4;
    }
}

/// The permutation with the given cycle type on consecutive blocks.
fn block_permutation(n: usize, cycle_type: &[usize]) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 0;
    for &len in cycle_type {
        cycles.push((next..next + len).collect());
        next += len;
    }
    debug_assert_eq!(next, n);
    Permutation::from_cycles(n, &cycles).unwrap()
}

/// Every self-complementary graph on `n` vertices, one per isomorphism
/// class, canonically labeled and sorted by canonical string.
pub fn enumerate_sc_graphs(n: usize) -> Result<Vec<Graph>, Error> {
    enumerate_sc_graphs_with_guard(n, DEFAULT_ENUMERATION_GUARD)
}

pub fn enumerate_sc_graphs_with_guard(n: usize, guard: usize) -> Result<Vec<Graph>, Error> {
    if n > guard || n > MAX_VERTICES {
        return Err(Error::GuardExceeded { n, max: guard.min(MAX_VERTICES) });
    }
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    for cycle_type in sachs_ringel_cycle_types(n) {
        let sigma = block_permutation(n, &cycle_type);
        let orbits = pair_orbits(&sigma);
        debug_assert!(orbits.iter().all(|o| o.len() % 2 == 0));
        let nbits = orbits.len();
        // Flipping every orbit bit complements the graph, which stays
        // in the same isomorphism class; pin the first bit.
        let free_bits = nbits.saturating_sub(1);
        let mut bits = alloc::vec![false; nbits];
        for assignment in 0u64..1 << free_bits {
            if nbits > 0 {
                bits[0] = true;
                for i in 0..free_bits {
                    bits[i + 1] = assignment >> i & 1 == 1;
                }
            }
            let mut g = Graph::empty(n);
            decode_into(&mut g, &orbits, &bits);
            let canon = canonical_form(&g).graph;
            classes.entry(graph6::write(&canon)).or_insert(canon);
        }
    }
    for g in classes.values() {
        if find_antimorphism(g).is_none() {
            return Err(Error::Inconsistency("enumeration produced a non-sc graph"));
        }
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn k1_p4_construction_is_p4() {
        let (g, tau) = p4_construction(&Graph::empty(1));
        assert_eq!(g, Graph::path(4));
        assert_eq!(tau.images(), &[1, 3, 0, 2]);
    }

    #[test]
    fn iterated_p4_construction_stays_sc() {
        let (p4, _) = p4_construction(&Graph::empty(1));
        let (g16, tau) = p4_construction(&p4);
        assert_eq!(g16.order(), 16);
        assert_eq!(is_antimorphism(&g16, &tau), Ok(true));
        assert!(find_antimorphism(&g16).is_some());
    }

    #[test]
    fn p4_construction_degrees() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        let (out, _) = p4_construction(&g);
        for v in 0..3 {
            assert_eq!(out.degree(v), g.degree(v) + 3);
        }
    }

    #[test]
    fn j_construction_matches_p4_construction() {
        let g = Graph::path(4);
        assert_eq!(j_construction(&g, &g), p4_construction(&g).0);
    }

    #[test]
    fn j_construction_of_k1_pair_is_p4() {
        let k1 = Graph::empty(1);
        assert_eq!(j_construction(&k1, &k1), Graph::path(4));
    }

    #[test]
    fn j_construction_sc_iff_isomorphic() {
        let p4 = Graph::path(4);
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(find_antimorphism(&j_construction(&p4, &p4)).is_some());
        assert!(find_antimorphism(&j_construction(&p4, &claw)).is_none());
    }

    #[test]
    fn orbit_choice_decodes_with_sigma_as_antimorphism() {
        let sigma = block_permutation(5, &[4, 1]);
        let orbits = pair_orbits(&sigma);
        for assignment in 0u64..1 << orbits.len() {
            let bits = (0..orbits.len()).map(|i| assignment >> i & 1 == 1).collect();
            let choice = OrbitChoice::new(sigma.clone(), bits).unwrap();
            let g = choice.decode();
            assert_eq!(is_antimorphism(&g, &sigma), Ok(true));
        }
    }

    #[test]
    fn orbit_choice_rejects_bad_sigma() {
        let sigma = block_permutation(4, &[2, 2]);
        assert!(matches!(
            OrbitChoice::new(sigma, alloc::vec![]),
            Err(Error::WrongCycleType)
        ));
    }

    #[test]
    fn cycle_types_at_small_n() {
        assert_eq!(sachs_ringel_cycle_types(4), alloc::vec![alloc::vec![4]]);
        assert_eq!(sachs_ringel_cycle_types(5), alloc::vec![alloc::vec![4, 1]]);
        assert_eq!(sachs_ringel_cycle_types(6), Vec::<Vec<usize>>::new());
        assert_eq!(
            sachs_ringel_cycle_types(12),
            alloc::vec![alloc::vec![12], alloc::vec![8, 4], alloc::vec![4, 4, 4]]
        );
    }

    #[test]
    fn enumeration_at_tiny_n() {
        assert_eq!(enumerate_sc_graphs(0).unwrap().len(), 1);
        assert_eq!(enumerate_sc_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_sc_graphs(2).unwrap(), Vec::<Graph>::new());
        assert_eq!(enumerate_sc_graphs(3).unwrap(), Vec::<Graph>::new());
        let n4 = enumerate_sc_graphs(4).unwrap();
        assert_eq!(n4.len(), 1);
        assert!(are_isomorphic(&n4[0], &Graph::path(4)));
    }

    #[test]
    fn enumeration_at_n5_is_c5_and_bull() {
        let n5 = enumerate_sc_graphs(5).unwrap();
        assert_eq!(n5.len(), 2);
        let bull = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]);
        assert!(n5.iter().any(|g| are_isomorphic(g, &Graph::cycle(5))));
        assert!(n5.iter().any(|g| are_isomorphic(g, &bull)));
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_sc_graphs(14),
            Err(Error::GuardExceeded { n: 14, max: 13 })
        ));
    }

    #[test]
    fn enumeration_contains_p4_constructions() {
        // Spot check: images of 1- and 2-vertex graphs land in the
        // n = 4 and n = 8 enumerations.
        let n8 = enumerate_sc_graphs(8).unwrap();
        for base in [Graph::empty(2), Graph::complete(2)] {
            let (g, _) = p4_construction(&base);
            assert!(n8.iter().any(|h| are_isomorphic(h, &g)));
        }
    }
}
