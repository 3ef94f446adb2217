//! Canonical labeling by iterated neighbourhood refinement plus
//! backtracking over the coarsest stable partition.
//!
//! Two graphs get equal canonical forms exactly when they are
//! isomorphic. Ties inside a cell are broken by exploring vertices in
//! ascending order; automorphisms discovered from coinciding leaves
//! prune branches that provably repeat earlier work.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::graph6;

/// A graph together with the relabeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The canonically relabeled graph.
    pub graph: Graph,
    /// Old vertex -> new vertex.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    /// The canonical edge string: graph6 of the canonical graph.
    pub fn graph6(&self) -> String {
        graph6::write(&self.graph)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search {
        g,
        n,
        best: None,
        first: None,
        generators: Vec::new(),
        path: Vec::new(),
    };
    search.node(alloc::vec![0; n]);
    let (graph, relabeling) = search.best.expect("search visits at least one leaf");
    CanonicalForm { graph, relabeling }
}

pub fn canonical_string(g: &Graph) -> String {
    canonical_form(g).graph6()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g).graph == canonical_form(h).graph
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<(Graph, Vec<usize>)>,
    first: Option<(Graph, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

const MAX_GENERATORS: usize = 96;

impl Search<'_> {
    fn node(&mut self, mut colors: Vec<u32>) {
        let ncolors = refine(self.g, &mut colors);
        if ncolors == self.n {
            self.leaf(&colors);
            return;
        }
        let cell = target_cell(&colors, ncolors);
        let members: Vec<usize> =
            (0..self.n).filter(|&v| colors[v] == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried) {
                continue;
            }
            self.path.push(v);
            self.node(individualize(&colors, v));
            self.path.pop();
            tried.push(v);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let labeling: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let candidate = self.g.relabel(&labeling);
        if let Some((first_graph, first_labeling)) = &self.first {
            if candidate == *first_graph {
                let auto = compose_inverse(first_labeling, &labeling);
                self.record_generator(auto);
            }
        } else {
            self.first = Some((candidate.clone(), labeling.clone()));
        }
        match &self.best {
            None => self.best = Some((candidate, labeling)),
            Some((best_graph, best_labeling)) => {
                if candidate < *best_graph {
                    self.best = Some((candidate, labeling));
                } else if candidate == *best_graph {
                    let auto = compose_inverse(best_labeling, &labeling);
                    self.record_generator(auto);
                }
            }
        }
    }

    fn record_generator(&mut self, auto: Vec<usize>) {
        if self.generators.len() >= MAX_GENERATORS {
            return;
        }
        if auto.iter().enumerate().all(|(v, &w)| v == w) {
            return;
        }
        debug_assert_eq!(self.g.relabel(&auto), *self.g);
        if !self.generators.contains(&auto) {
            self.generators.push(auto);
        }
    }

    /// Is `v` in the orbit of an already-explored sibling under the
    /// automorphisms found so far that fix the current path pointwise?
    fn equivalent_to_tried(&self, v: usize, tried: &[usize]) -> bool {
        if self.generators.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut merged = false;
        for gen in &self.generators {
            if self.path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            merged = true;
            for (u, &image) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, u), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        merged && {
            let root = find(&mut parent, v);
            tried.iter().any(|&u| find(&mut parent, u) == root)
        }
    }
}

/// mu^-1 composed with lambda: an automorphism when both labelings
/// produce the same relabeled graph.
fn compose_inverse(mu: &[usize], lambda: &[usize]) -> Vec<usize> {
    let mut mu_inv = alloc::vec![0; mu.len()];
    for (v, &w) in mu.iter().enumerate() {
        mu_inv[w] = v;
    }
    lambda.iter().map(|&w| mu_inv[w]).collect()
}

/// Refine to the coarsest stable partition; colors are kept dense and
/// ordered by an isomorphism-invariant key. Returns the color count.
fn refine(g: &Graph, colors: &mut [u32]) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut ncolors = colors.iter().max().map_or(0, |&c| c as usize + 1);
    loop {
        if ncolors == n {
            return n;
        }
        let width = ncolors + 1;
        let mut masks = alloc::vec![0u64; ncolors];
        for v in 0..n {
            masks[colors[v] as usize] |= 1 << v;
        }
        let mut keys = alloc::vec![0u32; n * width];
        for v in 0..n {
            let row = g.neighbors(v).bits();
            keys[v * width] = colors[v];
            for (c, &mask) in masks.iter().enumerate() {
                keys[v * width + 1 + c] = (row & mask).count_ones();
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| keys[a * width..(a + 1) * width].cmp(&keys[b * width..(b + 1) * width]));
        let mut next = 0u32;
        for (idx, &v) in order.iter().enumerate() {
            if idx > 0 {
                let u = order[idx - 1];
                if keys[u * width..(u + 1) * width] != keys[v * width..(v + 1) * width] {
                    next += 1;
                }
            }
            colors[v] = next;
        }
        let new_ncolors = next as usize + 1;
        if new_ncolors == ncolors {
            return ncolors;
        }
        ncolors = new_ncolors;
    }
}

/// Smallest cell with at least two members; ties to the lowest color.
fn target_cell(colors: &[u32], ncolors: usize) -> u32 {
    let mut sizes = alloc::vec![0usize; ncolors];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let mut best = u32::MAX;
    let mut best_size = usize::MAX;
    for (c, &s) in sizes.iter().enumerate() {
        if s >= 2 && s < best_size {
            best_size = s;
            best = c as u32;
        }
    }
    best
}

/// Split `v` off the front of its cell.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let pivot = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| if u == v { pivot } else if c >= pivot { c + 1 } else { c })
        .collect()
}
