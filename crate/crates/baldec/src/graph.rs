//! Undirected simple graphs on vertices `0..n`: parsing, neighborhoods,
//! induced subgraphs, connectivity, vertex cuts, and k-connectivity.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A subset of a graph's vertices, kept sorted for canonical output.
pub type VertexSet = BTreeSet<usize>;

/// Finite undirected graph with no loops or multi-edges; vertices are
/// `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Wire format: `{"n": 3, "edges": [[0,1],[1,2]]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates, and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Errors on loops, duplicates, or endpoints
    /// outside `0..n`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!(
                "edge ({u},{v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Domain(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Domain(format!("duplicate edge ({u},{v})")));
        }
        let pos_u = self.adj[u].partition_point(|&w| w < v);
        self.adj[u].insert(pos_u, v);
        let pos_v = self.adj[v].partition_point(|&w| w < u);
        self.adj[v].insert(pos_v, u);
        self.m += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        (0..self.n).collect()
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(0, n - 1).unwrap();
        g
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    /// Serializes to the JSON wire format with `u < v` on every edge.
    pub fn to_json(&self) -> String {
        let json = GraphJson {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&json).expect("graph serialization cannot fail")
    }
}

/// Parses either accepted graph format: the JSON object
/// `{"n":..,"edges":[[u,v],..]}` or plain text (`n m` on the first line, one
/// `u v` pair per following line).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_graph_json(trimmed)
    } else {
        parse_graph_plain(text)
    }
}

fn parse_graph_json(text: &str) -> Result<Graph> {
    let json: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph json: {e}")))?;
    let mut g = Graph::empty(json.n);
    for (i, [u, v]) in json.edges.iter().enumerate() {
        g.add_edge(*u, *v)
            .map_err(|e| Error::Parse(format!("edges[{i}]: {e}")))?;
    }
    Ok(g)
}

fn parse_graph_plain(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .ok_or_else(|| Error::Parse("line 1: missing vertex count".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("line 1: vertex count: {e}")))?;
    let m: usize = it
        .next()
        .ok_or_else(|| Error::Parse("line 1: missing edge count".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("line 1: edge count: {e}")))?;
    if it.next().is_some() {
        return Err(Error::Parse("line 1: expected exactly `n m`".into()));
    }
    let mut g = Graph::empty(n);
    let mut read = 0;
    for (idx, line) in lines {
        let lineno = idx + 1;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: missing endpoint")))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {lineno}: endpoint: {e}")))?;
        let v: usize = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: missing second endpoint")))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {lineno}: endpoint: {e}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("line {lineno}: expected exactly `u v`")));
        }
        g.add_edge(u, v)
            .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
        read += 1;
    }
    if read != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges but {read} edge lines follow"
        )));
    }
    Ok(g)
}

fn check_in_range(g: &Graph, s: &VertexSet, what: &str) -> Result<()> {
    if let Some(&v) = s.iter().next_back() {
        if v >= g.vertex_count() {
            return Err(Error::Domain(format!(
                "{what} contains vertex {v}, outside 0..{}",
                g.vertex_count()
            )));
        }
    }
    Ok(())
}

/// Open neighborhood of `s`: all vertices outside `s` adjacent to a member
/// of `s`. Always disjoint from `s`.
pub fn neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    check_in_range(g, s, "vertex set")?;
    let mut out = VertexSet::new();
    for &v in s {
        for &w in g.neighbors(v) {
            if !s.contains(&w) {
                out.insert(w);
            }
        }
    }
    Ok(out)
}

/// Subgraph induced by `s`, with `s` relabeled order-preservingly to
/// `0..|s|`.
pub fn induced(g: &Graph, s: &VertexSet) -> Result<Graph> {
    check_in_range(g, s, "vertex set")?;
    let order: Vec<usize> = s.iter().copied().collect();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        index[v] = i;
    }
    let mut out = Graph::empty(order.len());
    for (i, &v) in order.iter().enumerate() {
        for &w in g.neighbors(v) {
            if w > v && s.contains(&w) {
                out.add_edge(i, index[w])?;
            }
        }
    }
    Ok(out)
}

/// Breadth-first reachability from `start`, restricted to vertices where
/// `allowed` is true.
fn bfs_component(g: &Graph, start: usize, allowed: &[bool]) -> VertexSet {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    let mut comp = VertexSet::new();
    comp.insert(start);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                comp.insert(w);
                queue.push_back(w);
            }
        }
    }
    comp
}

/// True iff every vertex is reachable from vertex 0. Graphs with at most one
/// vertex count as connected.
pub fn is_connected(g: &Graph) -> bool {
    if g.vertex_count() <= 1 {
        return true;
    }
    let allowed = vec![true; g.vertex_count()];
    bfs_component(g, 0, &allowed).len() == g.vertex_count()
}

/// Tests whether `y` is a vertex cut. On success returns the witnessing
/// split `(x1, x2)` of the remaining vertices: `x1` is the component of the
/// smallest-index remaining vertex, `x2` everything else, with no edges
/// between them.
pub fn is_vertex_cut(g: &Graph, y: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    let mut allowed = vec![true; n];
    for &v in y {
        if v < n {
            allowed[v] = false;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| allowed[v]).collect();
    if rest.len() < 2 {
        return None;
    }
    let comp = bfs_component(g, rest[0], &allowed);
    if comp.len() == rest.len() {
        return None;
    }
    let other: VertexSet = rest.into_iter().filter(|v| !comp.contains(v)).collect();
    Some((comp, other))
}

/// Smallest vertex cut, or `None` when no cut exists (complete graphs and
/// graphs with fewer than 2 vertices). Ties broken lexicographically, so
/// results are reproducible.
pub fn min_vertex_cut(g: &Graph) -> Option<VertexSet> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    // Sizes ascending, candidates in lexicographic order within each size:
    // the first cut found is the lexicographically smallest minimum cut.
    for k in 0..=n.saturating_sub(2) {
        for cand in (0..n).combinations(k) {
            let y: VertexSet = cand.into_iter().collect();
            if is_vertex_cut(g, &y).is_some() {
                return Some(y);
            }
        }
    }
    None
}

/// True iff `n > k` and no vertex cut of size `< k` exists. Complete graphs
/// follow the standard convention: `K_n` is `(n-1)`-connected.
///
/// Decided via internally disjoint path counts (Menger) rather than cut
/// enumeration, so the exhaustive-enumeration definition remains an
/// independent check.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut seen_nonadjacent = false;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            seen_nonadjacent = true;
            if local_connectivity_at_least(g, u, v, k) < k {
                return false;
            }
        }
    }
    // No non-adjacent pair: complete graph, (n-1)-connected, and n > k.
    let _ = seen_nonadjacent;
    true
}

/// Number of internally disjoint `u`-`v` paths, counted up to `k` (stops
/// augmenting once `k` paths are found). Requires `u`, `v` non-adjacent.
fn local_connectivity_at_least(g: &Graph, s: usize, t: usize, k: usize) -> usize {
    // Vertex-split flow network: vertex v becomes arc v_in(2v) -> v_out(2v+1)
    // of capacity 1; each edge {a,b} contributes a_out->b_in and b_out->a_in.
    // Max flow from s_out to t_in equals the local vertex connectivity.
    let n = g.vertex_count();
    let nodes = 2 * n;
    let mut cap = std::collections::HashMap::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut arc = |from: usize, to: usize, c: usize, adj: &mut Vec<Vec<usize>>| {
        cap.insert((from, to), c);
        cap.entry((to, from)).or_insert(0);
        if !adj[from].contains(&to) {
            adj[from].push(to);
        }
        if !adj[to].contains(&from) {
            adj[to].push(from);
        }
    };
    for v in 0..n {
        let c = if v == s || v == t { n } else { 1 };
        arc(2 * v, 2 * v + 1, c, &mut adj);
    }
    for (a, b) in g.edges() {
        arc(2 * a + 1, 2 * b, n, &mut adj);
        arc(2 * b + 1, 2 * a, n, &mut adj);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < k {
        // BFS for an augmenting path.
        let mut pred = vec![usize::MAX; nodes];
        let mut queue = VecDeque::new();
        pred[source] = source;
        queue.push_back(source);
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if pred[y] == usize::MAX && cap[&(x, y)] > 0 {
                    pred[y] = x;
                    if y == sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if pred[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = pred[y];
            *cap.get_mut(&(x, y)).unwrap() -= 1;
            *cap.get_mut(&(y, x)).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    #[test]
    fn parse_json_path() {
        let g = parse_graph(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_json_isolated_vertex() {
        let g = parse_graph(r#"{"n":1,"edges":[]}"#).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_loop() {
        let err = parse_graph(r#"{"n":2,"edges":[[0,0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)), "{err}");
        assert!(err.to_string().contains("loop"));
    }

    #[test]
    fn parse_rejects_duplicate_either_order() {
        let err = parse_graph(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = parse_graph(r#"{"n":2,"edges":[[0,5]]}"#).unwrap_err();
        assert!(err.to_string().contains("edges[0]"));
    }

    #[test]
    fn parse_plain_text() {
        let g = parse_graph("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(4));
        let err = parse_graph("2 1\n").unwrap_err();
        assert!(err.to_string().contains("1 edges"));
        let err = parse_graph("3 1\n0 0\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn json_roundtrip_is_canonical() {
        let g = parse_graph(r#"{"n":3,"edges":[[2,1],[1,0]]}"#).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn neighborhood_examples() {
        let p3 = Graph::path(3);
        assert_eq!(neighborhood(&p3, &vs(&[1])).unwrap(), vs(&[0, 2]));
        assert_eq!(neighborhood(&p3, &vs(&[0, 1, 2])).unwrap(), vs(&[]));
        let star = Graph::star(4);
        assert_eq!(neighborhood(&star, &vs(&[1])).unwrap(), vs(&[0]));
        assert!(neighborhood(&p3, &vs(&[7])).is_err());
    }

    #[test]
    fn induced_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(induced(&k4, &vs(&[0, 1, 2])).unwrap(), Graph::complete(3));
        let p4 = Graph::path(4);
        let endpoints = induced(&p4, &vs(&[0, 3])).unwrap();
        assert_eq!(endpoints.vertex_count(), 2);
        assert_eq!(endpoints.edge_count(), 0);
        assert_eq!(induced(&p4, &p4.vertex_set()).unwrap(), p4);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&Graph::path(4)));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two_edges));
        assert!(is_connected(&Graph::empty(1)));
        assert!(is_connected(&Graph::empty(0)));
    }

    #[test]
    fn vertex_cut_examples() {
        let star = Graph::star(4);
        assert_eq!(
            is_vertex_cut(&star, &vs(&[0])),
            Some((vs(&[1]), vs(&[2, 3])))
        );
        assert_eq!(is_vertex_cut(&Graph::complete(4), &vs(&[0])), None);
        let p4 = Graph::path(4);
        assert_eq!(is_vertex_cut(&p4, &vs(&[1])), Some((vs(&[0]), vs(&[2, 3]))));
    }

    #[test]
    fn min_cut_examples() {
        assert_eq!(min_vertex_cut(&Graph::star(4)), Some(vs(&[0])));
        assert_eq!(min_vertex_cut(&Graph::complete(4)), None);
        // P4 has two minimum cuts {1} and {2}; the lexicographically smaller wins.
        assert_eq!(min_vertex_cut(&Graph::path(4)), Some(vs(&[1])));
    }

    #[test]
    fn k_connected_examples() {
        assert!(is_k_connected(&Graph::complete(4), 3));
        assert!(!is_k_connected(&Graph::complete(4), 4));
        assert!(!is_k_connected(&Graph::star(4), 2));
        assert!(is_k_connected(&Graph::cycle(5), 2));
    }

    #[test]
    fn disconnected_graph_has_empty_min_cut() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_vertex_cut(&g), Some(VertexSet::new()));
        assert!(is_vertex_cut(&g, &VertexSet::new()).is_some());
    }

    /// Definition-level oracle: enumerate every subset of size < k and check
    /// none is a cut. Independent of the flow-based implementation.
    fn k_connected_by_enumeration(g: &Graph, k: usize) -> bool {
        let n = g.vertex_count();
        if n <= k {
            return false;
        }
        for size in 0..k {
            for cand in (0..n).combinations(size) {
                if is_vertex_cut(g, &cand.into_iter().collect()).is_some() {
                    return false;
                }
            }
        }
        true
    }

    fn graph_from_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
                bit += 1;
            }
        }
        g
    }

    #[test]
    fn k_connectivity_agrees_with_enumeration_up_to_n6() {
        for n in 1..=6 {
            let pairs = n * (n - 1) / 2;
            for mask in 0u64..1 << pairs {
                let g = graph_from_mask(n, mask);
                for k in 0..=n {
                    assert_eq!(
                        is_k_connected(&g, k),
                        k_connected_by_enumeration(&g, k),
                        "n={n} mask={mask} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn min_cut_is_minimum_and_lex_smallest_up_to_n5() {
        for n in 2..=5 {
            let pairs = n * (n - 1) / 2;
            for mask in 0u64..1 << pairs {
                let g = graph_from_mask(n, mask);
                let mut best: Option<VertexSet> = None;
                for size in 0..=n - 2 {
                    for cand in (0..n).combinations(size) {
                        let y: VertexSet = cand.into_iter().collect();
                        if is_vertex_cut(&g, &y).is_some() {
                            best = Some(y);
                            break;
                        }
                    }
                    if best.is_some() {
                        break;
                    }
                }
                assert_eq!(min_vertex_cut(&g), best, "n={n} mask={mask}");
            }
        }
    }

    proptest! {
        #[test]
        fn neighborhood_disjoint_from_input(mask in 0u64..1 << 15, raw in proptest::collection::btree_set(0usize..6, 0..6)) {
            let g = graph_from_mask(6, mask);
            let nh = neighborhood(&g, &raw).unwrap();
            prop_assert!(nh.is_disjoint(&raw));
        }

        #[test]
        fn k_connectivity_monotone(mask in 0u64..1 << 15) {
            let g = graph_from_mask(6, mask);
            let mut prev = true;
            for k in 0..=7 {
                let now = is_k_connected(&g, k);
                prop_assert!(prev || !now, "k-connectivity not monotone at k={k}");
                prev = now;
            }
        }

        #[test]
        fn min_cut_is_a_cut_and_no_smaller_exists(mask in 0u64..1 << 15) {
            let g = graph_from_mask(6, mask);
            if let Some(y) = min_vertex_cut(&g) {
                prop_assert!(is_vertex_cut(&g, &y).is_some());
                for size in 0..y.len() {
                    for cand in (0..6).combinations(size) {
                        prop_assert!(is_vertex_cut(&g, &cand.into_iter().collect()).is_none());
                    }
                }
            }
        }
    }
}
