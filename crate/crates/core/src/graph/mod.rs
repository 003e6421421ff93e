//! Codeword containment graphs, general relationship complexes and graphs,
//! and the graph predicates used throughout.

mod relationship;

use std::collections::VecDeque;
use std::fmt::{self, Display, Write as _};

use serde::Serialize;
use serde_json::Value;

use crate::code::{Code, Codeword};
use crate::error::{Error, Result};

pub use relationship::{gr_complex, gr_complex_by_products, grg};

/// Vertex labels that know how to render themselves in DOT and JSON.
pub trait Label: Clone + Ord + Display {
    fn to_json(&self) -> Value;
}

impl Label for Codeword {
    fn to_json(&self) -> Value {
        Value::from(self.neurons())
    }
}

impl Label for usize {
    fn to_json(&self) -> Value {
        Value::from(*self)
    }
}

/// A simple undirected graph with unique, sorted vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeGraph<L> {
    labels: Vec<L>,
    adj: Vec<Vec<usize>>,
}

impl<L: Label> CodeGraph<L> {
    /// Builds a graph from labels and an edge predicate on label pairs.
    pub fn from_predicate<F: Fn(&L, &L) -> bool>(mut labels: Vec<L>, adjacent: F) -> Self {
        labels.sort();
        labels.dedup();
        let k = labels.len();
        let mut adj = vec![Vec::new(); k];
        for i in 0..k {
            for j in i + 1..k {
                if adjacent(&labels[i], &labels[j]) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        Self { labels, adj }
    }

    pub fn vertices(&self) -> &[L] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as label pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(L, L)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }

    fn index(&self, v: &L) -> Result<usize> {
        self.labels
            .binary_search(v)
            .map_err(|_| Error::UnknownVertex(v.to_string()))
    }

    pub fn has_edge(&self, u: &L, v: &L) -> Result<bool> {
        let (i, j) = (self.index(u)?, self.index(v)?);
        Ok(self.adj[i].contains(&j))
    }

    pub fn degree(&self, v: &L) -> Result<usize> {
        Ok(self.adj[self.index(v)?].len())
    }

    pub fn neighbors(&self, v: &L) -> Result<Vec<L>> {
        let i = self.index(v)?;
        let mut out: Vec<L> = self.adj[i]
            .iter()
            .map(|&j| self.labels[j].clone())
            .collect();
        out.sort();
        Ok(out)
    }

    fn bfs(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.labels.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.labels.is_empty() || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        let k = self.labels.len();
        self.adj.iter().all(|a| a.len() + 1 == k)
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adj.iter().all(|a| a.len() == degree)
    }

    /// Sorted distinct vertex degrees.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Number of edges on a shortest path; `None` when unreachable.
    pub fn distance(&self, u: &L, v: &L) -> Result<Option<usize>> {
        let (i, j) = (self.index(u)?, self.index(v)?);
        Ok(self.bfs(i)[j])
    }

    /// Largest finite distance; `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for i in 0..self.labels.len() {
            for d in self.bfs(i) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Deterministic DOT text, vertices in label order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph {\n");
        for l in &self.labels {
            let _ = writeln!(s, "  \"{l}\";");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  \"{u}\" -- \"{v}\";");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.iter().map(Label::to_json).collect(),
            edges: self
                .edges()
                .iter()
                .map(|(u, v)| [u.to_json(), v.to_json()])
                .collect(),
        }
    }
}

impl<L: Label> fmt::Debug for CodeGraph<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        write!(
            f,
            "CodeGraph(|V|={}, E=[{}])",
            self.labels.len(),
            edges.join(", ")
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphJson {
    pub vertices: Vec<Value>,
    pub edges: Vec<[Value; 2]>,
}

/// Codeword containment graph: an edge for each strict containment.
pub fn ccg(c: &Code) -> CodeGraph<Codeword> {
    CodeGraph::from_predicate(c.words().to_vec(), |a, b| {
        a.is_strict_subset(b) || b.is_strict_subset(a)
    })
}

pub fn to_dot<L: Label>(g: &CodeGraph<L>) -> String {
    g.to_dot()
}

/// Bitmask adjacency of the CCG for codes with at most 64 codewords; used by
/// the exhaustive sweeps.
pub(crate) fn ccg_bitsets(words: &[u64]) -> Vec<u64> {
    let k = words.len();
    let mut adj = vec![0u64; k];
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (words[i], words[j]);
            if a != b && (a & !b == 0 || b & !a == 0) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

pub(crate) fn bitset_connected(adj: &[u64]) -> bool {
    let k = adj.len();
    if k == 0 {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[i];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == k
}

/// Largest eccentricity, or `None` if disconnected.
pub(crate) fn bitset_diameter(adj: &[u64]) -> Option<usize> {
    let k = adj.len();
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut best = 0;
    for s in 0..k {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut d = 0;
        while seen != all {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[i];
            }
            frontier = next & !seen;
            if frontier == 0 {
                return None;
            }
            seen |= frontier;
            d += 1;
        }
        best = best.max(d);
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    fn cw(n: usize, v: &[usize]) -> Codeword {
        Codeword::from_neurons(n, v.iter().copied()).unwrap()
    }

    fn edge_strings(g: &CodeGraph<Codeword>) -> Vec<String> {
        g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect()
    }

    #[test]
    fn containment_graph_examples() {
        let g = ccg(&parse_code("1;2;13;123").unwrap());
        assert_eq!(
            edge_strings(&g),
            ["{1}-{1,3}", "{1}-{1,2,3}", "{2}-{1,2,3}", "{1,3}-{1,2,3}"]
        );
        let g = ccg(&parse_code("13;125;1235;1245").unwrap());
        assert_eq!(
            edge_strings(&g),
            ["{1,3}-{1,2,3,5}", "{1,2,5}-{1,2,3,5}", "{1,2,5}-{1,2,4,5}"]
        );
        let g = ccg(&parse_code("{};1;2;123;4").unwrap());
        let empty = cw(4, &[]);
        assert_eq!(g.degree(&empty).unwrap(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn predicates() {
        assert!(!ccg(&parse_code("1;12;3").unwrap()).is_connected());
        assert!(ccg(&parse_code("1;12;123").unwrap()).is_complete());
        assert!(ccg(&parse_code("1;2;123;124").unwrap()).is_regular(2));
        assert!(!ccg(&parse_code("1;2;123;1234").unwrap()).is_regular(2));
        assert!(
            ccg(&parse_code("12;16;56;45;34;23;123;126;156;456;345;234").unwrap()).is_regular(2)
        );
    }

    #[test]
    fn distance_and_diameter() {
        let g = ccg(&parse_code("1;2;13;123").unwrap());
        assert_eq!(g.distance(&cw(3, &[2]), &cw(3, &[1, 3])).unwrap(), Some(2));
        assert_eq!(g.diameter(), Some(2));
        let h = ccg(&parse_code("1;12;3").unwrap());
        assert_eq!(h.distance(&cw(3, &[1]), &cw(3, &[3])).unwrap(), None);
        assert_eq!(h.diameter(), None);
        assert!(matches!(
            g.distance(&cw(3, &[3]), &cw(3, &[1])),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn dot_output() {
        let g = ccg(&parse_code("{};1").unwrap());
        assert_eq!(
            g.to_dot(),
            "graph {\n  \"{}\";\n  \"{1}\";\n  \"{}\" -- \"{1}\";\n}\n"
        );
        let k2 = CodeGraph::from_predicate(vec![2usize, 1], |_, _| true);
        assert_eq!(
            k2.to_dot(),
            "graph {\n  \"1\";\n  \"2\";\n  \"1\" -- \"2\";\n}\n"
        );
        let bare = CodeGraph::from_predicate(vec![1usize, 2], |_, _| false);
        assert_eq!(bare.to_dot(), "graph {\n  \"1\";\n  \"2\";\n}\n");
    }

    #[test]
    fn json_output() {
        let g = ccg(&parse_code("{};1").unwrap());
        assert_eq!(
            serde_json::to_string(&g.to_json()).unwrap(),
            r#"{"vertices":[[],[1]],"edges":[[[],[1]]]}"#
        );
    }

    #[test]
    fn bitset_helpers_agree_with_graph() {
        for bits in 1u64..256 {
            let c = Code::from_masks(3, (0..8).filter(|m| bits >> m & 1 == 1)).unwrap();
            let words: Vec<u64> = c.masks().collect();
            let adj = ccg_bitsets(&words);
            let g = ccg(&c);
            assert_eq!(bitset_connected(&adj), g.is_connected());
            assert_eq!(bitset_diameter(&adj), g.diameter());
        }
    }

    #[test]
    fn complete_iff_chain() {
        for bits in 1u64..256 {
            let c = Code::from_masks(3, (0..8).filter(|m| bits >> m & 1 == 1)).unwrap();
            assert_eq!(ccg(&c).is_complete(), c.is_complete(), "{c}");
        }
    }
}
