//! Simple undirected graphs on at most 62 vertices, stored as bitset
//! adjacency rows, plus the vertex-subset type used throughout.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Largest order we support; one graph6 length byte covers exactly this.
pub const MAX_VERTICES: usize = 62;

/// A subset of `{0..n-1}` packed into a word.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..n`, no loops.
///
/// Adjacency is kept symmetric by construction; row `v` is the
/// neighbourhood of `v` as a bitset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are capped at {MAX_VERTICES} vertices");
        Graph { n, rows: alloc::vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The complete graph.
    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// The cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// The path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// N(v) as a set; never contains `v` itself.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    /// The closed non-neighbourhood: every vertex not adjacent to `v`,
    /// including `v`.
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(!self.rows[v] & VertexSet::full(self.n).0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !VertexSet::full(u + 1).0)
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `s`, relabeled onto `0..|s|`.
    ///
    /// The returned mapping sends each new index to the old vertex it
    /// stands for; old vertices are kept in ascending order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), Error> {
        if !s.is_subset_of(self.vertex_set()) {
            let vertex = s.difference(self.vertex_set()).min().unwrap();
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let map: Vec<usize> = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Relabel by `perm` (old vertex -> new vertex).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Do the ordered vertices w-x-y-z induce a path with edges wx, xy, yz?
    pub fn is_induced_p4(&self, quad: [usize; 4]) -> Result<bool, Error> {
        for (i, &v) in quad.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if quad[..i].contains(&v) {
                return Err(Error::DuplicateVertex { vertex: v });
            }
        }
        let [w, x, y, z] = quad;
        Ok(self.has_edge(w, x)
            && self.has_edge(x, y)
            && self.has_edge(y, z)
            && !self.has_edge(w, y)
            && !self.has_edge(w, z)
            && !self.has_edge(x, z))
    }

    /// If the 4-set induces a P4, return it in path order, the smaller
    /// end first. Returns `None` otherwise.
    pub fn p4_path_order(&self, quad: [usize; 4]) -> Option<[usize; 4]> {
        let degs: Vec<usize> = quad
            .iter()
            .map(|&v| quad.iter().filter(|&&u| u != v && self.has_edge(u, v)).count())
            .collect();
        let mut ends = quad.iter().zip(&degs).filter(|(_, &d)| d == 1).map(|(&v, _)| v);
        let (e1, e2) = (ends.next()?, ends.next()?);
        if ends.next().is_some() || degs.iter().sum::<usize>() != 6 {
            return None;
        }
        let first = e1.min(e2);
        let last = e1.max(e2);
        let second = quad.iter().copied().find(|&v| v != last && self.has_edge(first, v))?;
        let third = quad.iter().copied().find(|&v| v != first && self.has_edge(last, v))?;
        let order = [first, second, third, last];
        match self.is_induced_p4(order) {
            Ok(true) => Some(order),
            _ => None,
        }
    }

    /// Every pair with one end in `x` and the other in `y` is an edge
    /// (a vertex in both sets is not compared with itself).
    pub fn complete_between(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|u| y.difference(VertexSet::singleton(u)).is_subset_of(self.neighbors(u)))
    }

    /// No edge has one end in `x` and the other in `y`.
    pub fn no_edges_between(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|u| self.neighbors(u).intersection(y).is_empty())
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                if v > u && self.rows[u] & self.rows[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components of the subgraph induced by `within`,
    /// ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut comps = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v).intersection(within).difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_within(self.vertex_set()).len() == 1
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> Vec<usize> {
        if self.n < 3 {
            return Vec::new();
        }
        (0..self.n)
            .filter(|&v| {
                let rest = self.vertex_set().difference(VertexSet::singleton(v));
                self.components_within(rest).len() > 1
            })
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
