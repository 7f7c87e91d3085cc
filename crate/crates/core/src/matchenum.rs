//! Perfect matchings and matching polynomials.
//!
//! Two independent algorithms compute `P(G) = Σ_M Π_{e∈M} w_e`:
//! recursive elimination of the lowest uncovered vertex, memoized on the
//! set of uncovered vertices, and a frontier sweep over the edge list that
//! only remembers which active vertices are already covered.

use std::collections::{BTreeMap, HashMap};

use crate::error::Result;
use crate::laurent::{ExponentVector, LaurentPolynomial};
use crate::rootsys::{RootVector, TypeSpec};
use crate::tilegraphs::{graph_for_root, realize, MatchingGraph};

/// Fixed-width vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct VertexSet(Box<[u64]>);

impl VertexSet {
    fn empty(n: usize) -> Self {
        VertexSet(vec![0; n.div_ceil(64).max(1)].into_boxed_slice())
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn lowest(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// A set of edges (indices into the graph's edge list).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    pub edges: Vec<usize>,
}

impl Matching {
    pub fn weight(&self, g: &MatchingGraph) -> LaurentPolynomial {
        self.edges
            .iter()
            .fold(LaurentPolynomial::one(g.nvars), |acc, &e| {
                &acc * &g.edges[e].weight
            })
    }

    /// Every vertex lies on exactly one chosen edge.
    pub fn is_perfect(&self, g: &MatchingGraph) -> bool {
        let mut hits = vec![0u32; g.num_vertices()];
        for &e in &self.edges {
            hits[g.edges[e].u] += 1;
            hits[g.edges[e].v] += 1;
        }
        hits.iter().all(|&h| h == 1)
    }
}

fn adjacency(g: &MatchingGraph) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![vec![]; g.num_vertices()];
    for (i, e) in g.edges.iter().enumerate() {
        if e.u != e.v {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
    }
    adj
}

/// All perfect matchings, each listed by increasing edge index.
pub fn perfect_matchings(g: &MatchingGraph) -> Vec<Matching> {
    fn go(
        adj: &[Vec<(usize, usize)>],
        left: &mut VertexSet,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Matching>,
    ) {
        let Some(v) = left.lowest() else {
            let mut edges = chosen.clone();
            edges.sort_unstable();
            out.push(Matching { edges });
            return;
        };
        left.remove(v);
        for &(u, e) in &adj[v] {
            if left.contains(u) {
                left.remove(u);
                chosen.push(e);
                go(adj, left, chosen, out);
                chosen.pop();
                left.insert(u);
            }
        }
        left.insert(v);
    }
    let adj = adjacency(g);
    let mut out = vec![];
    go(
        &adj,
        &mut VertexSet::full(g.num_vertices()),
        &mut vec![],
        &mut out,
    );
    out.sort();
    out
}

/// `P(G)` by recursive vertex elimination.
pub fn matching_polynomial(g: &MatchingGraph) -> LaurentPolynomial {
    fn rec(
        adj: &[Vec<(usize, usize)>],
        g: &MatchingGraph,
        left: VertexSet,
        memo: &mut HashMap<VertexSet, LaurentPolynomial>,
    ) -> LaurentPolynomial {
        let Some(v) = left.lowest() else {
            return LaurentPolynomial::one(g.nvars);
        };
        if let Some(p) = memo.get(&left) {
            return p.clone();
        }
        let mut sum = LaurentPolynomial::zero(g.nvars);
        let mut rest = left.clone();
        rest.remove(v);
        for &(u, e) in &adj[v] {
            if rest.contains(u) {
                let mut sub = rest.clone();
                sub.remove(u);
                let inner = rec(adj, g, sub, memo);
                if !inner.is_zero() {
                    sum = &sum + &(&inner * &g.edges[e].weight);
                }
            }
        }
        memo.insert(left, sum.clone());
        sum
    }
    let adj = adjacency(g);
    rec(
        &adj,
        g,
        VertexSet::full(g.num_vertices()),
        &mut HashMap::new(),
    )
}

/// `P(G)` by a frontier sweep over the edges in list order.
///
/// A state records which vertices are already covered. Once the last edge
/// at a vertex has been swept, states leaving it uncovered are dropped and
/// the vertex leaves the state. On a ladder this is the usual transfer
/// product along the tiles.
pub fn matching_polynomial_transfer(g: &MatchingGraph) -> LaurentPolynomial {
    let n = g.num_vertices();
    let mut last = vec![None; n];
    for (i, e) in g.edges.iter().enumerate() {
        if e.u != e.v {
            last[e.u] = Some(i);
            last[e.v] = Some(i);
        }
    }
    if last.iter().any(|l| l.is_none()) {
        return LaurentPolynomial::zero(g.nvars);
    }
    let mut states: BTreeMap<VertexSet, LaurentPolynomial> = BTreeMap::new();
    states.insert(VertexSet::empty(n), LaurentPolynomial::one(g.nvars));
    for (i, e) in g.edges.iter().enumerate() {
        if e.u == e.v {
            continue;
        }
        let mut next: BTreeMap<VertexSet, LaurentPolynomial> = BTreeMap::new();
        let mut put = |k: VertexSet, p: LaurentPolynomial| {
            let slot = next
                .entry(k)
                .or_insert_with(|| LaurentPolynomial::zero(g.nvars));
            *slot = &*slot + &p;
        };
        for (covered, p) in &states {
            put(covered.clone(), p.clone());
            if !covered.contains(e.u) && !covered.contains(e.v) {
                let mut c = covered.clone();
                c.insert(e.u);
                c.insert(e.v);
                put(c, p * &e.weight);
            }
        }
        for x in [e.u, e.v] {
            if last[x] == Some(i) {
                let mut closed: BTreeMap<VertexSet, LaurentPolynomial> = BTreeMap::new();
                for (mut covered, p) in std::mem::take(&mut next) {
                    if covered.contains(x) {
                        covered.remove(x);
                        let slot = closed
                            .entry(covered)
                            .or_insert_with(|| LaurentPolynomial::zero(g.nvars));
                        *slot = &*slot + &p;
                    }
                }
                next = closed;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    states
        .remove(&VertexSet::empty(n))
        .unwrap_or_else(|| LaurentPolynomial::zero(g.nvars))
}

/// `P(G_α) / x^α` for a positive root `α`.
pub fn cluster_expansion(spec: TypeSpec, alpha: &RootVector) -> Result<LaurentPolynomial> {
    let g = realize(&graph_for_root(spec, alpha)?)?;
    let shift: Vec<i32> = alpha.0.iter().map(|a| -a).collect();
    Ok(matching_polynomial(&g).mul_monomial(&ExponentVector::from(shift)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_spans_words() {
        let mut s = VertexSet::empty(130);
        s.insert(129);
        s.insert(64);
        assert_eq!(s.lowest(), Some(64));
        s.remove(64);
        assert_eq!(s.lowest(), Some(129));
        assert!(s.contains(129) && !s.contains(0));
    }

    #[test]
    fn isolated_vertex() {
        let mut g = MatchingGraph::new(1);
        let a = g.add_vertex("a");
        let b = g.add_vertex("b");
        g.add_vertex("c");
        g.add_vertex("d");
        g.add_edge(a, b, LaurentPolynomial::one(1), "e");
        assert!(matching_polynomial(&g).is_zero());
        assert!(matching_polynomial_transfer(&g).is_zero());
        assert!(perfect_matchings(&g).is_empty());
    }

    #[test]
    fn empty_graph_has_one_matching() {
        let g = MatchingGraph::new(2);
        assert!(matching_polynomial(&g).is_one());
        assert!(matching_polynomial_transfer(&g).is_one());
        assert_eq!(perfect_matchings(&g).len(), 1);
    }
}
