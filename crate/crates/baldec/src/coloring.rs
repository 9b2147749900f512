//! Balanced colorings and balanced decompositions: validation, exhaustive
//! enumeration, and the adversarial construction from a minimum vertex cut.

use serde::{Deserialize, Serialize};

use crate::graph::{is_connected, is_k_connected, is_vertex_cut, min_vertex_cut, Graph, VertexSet};
use crate::{Error, Result};

/// A triple of disjoint vertex classes covering `V(G)` with `|p1| = |p2|`.
/// `p1`/`p2` model start/target pebble positions, `x` the uncolored rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedColoring {
    pub p1: VertexSet,
    pub p2: VertexSet,
    pub x: VertexSet,
}

impl BalancedColoring {
    pub fn new(p1: VertexSet, p2: VertexSet, x: VertexSet) -> Self {
        BalancedColoring { p1, p2, x }
    }

    /// Convenience constructor for literals.
    pub fn from_slices(p1: &[usize], p2: &[usize], x: &[usize]) -> Self {
        BalancedColoring {
            p1: p1.iter().copied().collect(),
            p2: p2.iter().copied().collect(),
            x: x.iter().copied().collect(),
        }
    }

    /// The coloring with every vertex uncolored.
    pub fn all_x(g: &Graph) -> Self {
        BalancedColoring {
            p1: VertexSet::new(),
            p2: VertexSet::new(),
            x: g.vertex_set(),
        }
    }

    /// Class of vertex `v`: 1 for `p1`, 2 for `p2`, 0 for `x` or absent.
    pub fn class_of(&self, v: usize) -> u8 {
        if self.p1.contains(&v) {
            1
        } else if self.p2.contains(&v) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serialization cannot fail")
    }
}

#[derive(Deserialize)]
struct ColoringJson {
    p1: Vec<usize>,
    p2: Vec<usize>,
    x: Option<Vec<usize>>,
}

fn set_from_list(list: Vec<usize>, field: &str) -> Result<VertexSet> {
    let mut out = VertexSet::new();
    for v in list {
        if !out.insert(v) {
            return Err(Error::Parse(format!("{field}: duplicate vertex {v}")));
        }
    }
    Ok(out)
}

/// Parses coloring JSON `{"p1":[..],"p2":[..],"x":[..]}` against `g`. The
/// `x` field may be omitted, in which case it is the complement of
/// `p1 ∪ p2`. The result is validated before being returned.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<BalancedColoring> {
    let json: ColoringJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("coloring json: {e}")))?;
    let p1 = set_from_list(json.p1, "p1")?;
    let p2 = set_from_list(json.p2, "p2")?;
    let x = match json.x {
        Some(list) => set_from_list(list, "x")?,
        None => (0..g.vertex_count())
            .filter(|v| !p1.contains(v) && !p2.contains(v))
            .collect(),
    };
    let c = BalancedColoring::new(p1, p2, x);
    validate_coloring(g, &c)?;
    Ok(c)
}

/// Checks the three coloring invariants in order — pairwise disjointness,
/// exact coverage of `V(G)`, balance — and reports the first violation.
pub fn validate_coloring(g: &Graph, c: &BalancedColoring) -> Result<()> {
    for (first, second, name) in [
        (&c.p1, &c.p2, "p1 and p2"),
        (&c.p1, &c.x, "p1 and x"),
        (&c.p2, &c.x, "p2 and x"),
    ] {
        if let Some(v) = first.intersection(second).next() {
            return Err(Error::InvalidColoring(format!(
                "{name} overlap at vertex {v}"
            )));
        }
    }
    let n = g.vertex_count();
    for (set, name) in [(&c.p1, "p1"), (&c.p2, "p2"), (&c.x, "x")] {
        if let Some(&v) = set.iter().next_back() {
            if v >= n {
                return Err(Error::InvalidColoring(format!(
                    "{name} contains vertex {v}, outside 0..{n}"
                )));
            }
        }
    }
    let covered = c.p1.len() + c.p2.len() + c.x.len();
    if covered != n {
        let missing = (0..n)
            .find(|v| !c.p1.contains(v) && !c.p2.contains(v) && !c.x.contains(v))
            .expect("disjoint undersized classes must miss a vertex");
        return Err(Error::InvalidColoring(format!(
            "classes cover {covered} of {n} vertices (vertex {missing} unassigned)"
        )));
    }
    if c.p1.len() != c.p2.len() {
        return Err(Error::InvalidColoring(format!(
            "|p1| = {} but |p2| = {}",
            c.p1.len(),
            c.p2.len()
        )));
    }
    Ok(())
}

/// A partition of `V(G)` into connected, individually balanced parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    parts: Vec<Vec<usize>>,
    max_part_size: usize,
}

impl Decomposition {
    /// Parts sorted by their smallest member, for canonical output.
    pub fn new(mut parts: Vec<VertexSet>) -> Self {
        parts.sort_by_key(|p| p.iter().next().copied());
        Decomposition { parts }
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let json = DecompositionJson {
            parts: self
                .parts
                .iter()
                .map(|p| p.iter().copied().collect())
                .collect(),
            max_part_size: self.max_part_size(),
        };
        serde_json::to_string(&json).expect("decomposition serialization cannot fail")
    }
}

fn part_is_connected(g: &Graph, part: &VertexSet) -> bool {
    let mut allowed = vec![false; g.vertex_count()];
    for &v in part {
        allowed[v] = true;
    }
    let &start = part.iter().next().expect("parts are nonempty");
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == part.len()
}

/// Checks that `d` is a balanced decomposition of `(g, c)` with every part
/// of at most `s` vertices: parts nonempty, disjoint, covering, connected,
/// and individually balanced. Diagnostics name the first offending part.
pub fn verify_decomposition(
    g: &Graph,
    c: &BalancedColoring,
    d: &Decomposition,
    s: usize,
) -> Result<()> {
    validate_coloring(g, c)?;
    if s == 0 {
        return Err(Error::InvalidDecomposition(
            "part size bound must be positive".into(),
        ));
    }
    let n = g.vertex_count();
    let mut owner = vec![None; n];
    for (i, part) in d.parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidDecomposition(format!("part {i} is empty")));
        }
        if part.len() > s {
            return Err(Error::InvalidDecomposition(format!(
                "part {i} has {} vertices, above the bound {s}",
                part.len()
            )));
        }
        for &v in part {
            if v >= n {
                return Err(Error::InvalidDecomposition(format!(
                    "part {i} contains vertex {v}, outside 0..{n}"
                )));
            }
            if let Some(j) = owner[v] {
                return Err(Error::InvalidDecomposition(format!(
                    "vertex {v} appears in parts {j} and {i}"
                )));
            }
            owner[v] = Some(i);
        }
        if !part_is_connected(g, part) {
            return Err(Error::InvalidDecomposition(format!(
                "part {i} induces a disconnected subgraph"
            )));
        }
        let n1 = part.iter().filter(|v| c.p1.contains(v)).count();
        let n2 = part.iter().filter(|v| c.p2.contains(v)).count();
        if n1 != n2 {
            return Err(Error::InvalidDecomposition(format!(
                "part {i} has {n1} p1 vertices but {n2} p2 vertices"
            )));
        }
    }
    if let Some(v) = (0..n).find(|&v| owner[v].is_none()) {
        return Err(Error::InvalidDecomposition(format!(
            "vertex {v} is not covered by any part"
        )));
    }
    Ok(())
}

/// Lazy stream of every balanced coloring of `g`, each exactly once.
///
/// Order is fixed: `|p1|` ascending from 0 to `⌊n/2⌋`, and within each size
/// class lexicographically on the per-vertex label vector under
/// `p1 < p2 < x`.
pub fn enumerate_balanced_colorings(g: &Graph) -> BalancedColorings {
    BalancedColorings::new(g.vertex_count())
}

const LABEL_P1: u8 = 0;
const LABEL_P2: u8 = 1;
const LABEL_X: u8 = 2;

/// Iterator behind [`enumerate_balanced_colorings`].
#[derive(Debug, Clone)]
pub struct BalancedColorings {
    n: usize,
    k: usize,
    k_max: usize,
    labels: Vec<u8>,
    state: IterState,
}

#[derive(Debug, Clone, PartialEq)]
enum IterState {
    StartClass,
    Within,
    Done,
}

impl BalancedColorings {
    fn new(n: usize) -> Self {
        BalancedColorings {
            n,
            k: 0,
            k_max: n / 2,
            labels: Vec::new(),
            state: IterState::StartClass,
        }
    }

    /// Total number of colorings this stream will yield:
    /// `Σ_k C(n,k)·C(n−k,k)`.
    pub fn total_count(n: usize) -> u128 {
        fn binom(n: usize, k: usize) -> u128 {
            if k > n {
                return 0;
            }
            let mut r: u128 = 1;
            for i in 0..k {
                r = r * (n - i) as u128 / (i + 1) as u128;
            }
            r
        }
        (0..=n / 2).map(|k| binom(n, k) * binom(n - k, k)).sum()
    }

    fn counts(&self, upto: usize) -> (usize, usize) {
        let mut used1 = 0;
        let mut used2 = 0;
        for &l in &self.labels[..upto] {
            match l {
                LABEL_P1 => used1 += 1,
                LABEL_P2 => used2 += 1,
                _ => {}
            }
        }
        (used1, used2)
    }

    /// A label is feasible at depth `d` iff class budgets are respected and
    /// the remaining positions can still absorb the outstanding demand.
    fn feasible(&self, d: usize, label: u8, used1: usize, used2: usize) -> bool {
        let (u1, u2) = match label {
            LABEL_P1 => (used1 + 1, used2),
            LABEL_P2 => (used1, used2 + 1),
            _ => (used1, used2),
        };
        u1 <= self.k && u2 <= self.k && (self.k - u1) + (self.k - u2) <= self.n - d - 1
    }

    /// Greedily completes positions `from..n` with the smallest feasible
    /// labels. With exact feasibility this never dead-ends.
    fn fill_from(&mut self, from: usize) -> bool {
        let (mut used1, mut used2) = self.counts(from);
        self.labels.truncate(from);
        for d in from..self.n {
            let label = (LABEL_P1..=LABEL_X)
                .find(|&l| self.feasible(d, l, used1, used2))
                .expect("exact feasibility check guarantees an extension");
            match label {
                LABEL_P1 => used1 += 1,
                LABEL_P2 => used2 += 1,
                _ => {}
            }
            self.labels.push(label);
        }
        used1 == self.k && used2 == self.k
    }

    fn first_in_class(&mut self) -> bool {
        self.labels.clear();
        if (self.k - 0) + (self.k - 0) > self.n {
            return false;
        }
        self.fill_from(0)
    }

    /// Advances `labels` to the next vector in lexicographic order with the
    /// same class sizes; false when the class is exhausted.
    fn advance_in_class(&mut self) -> bool {
        let mut d = self.n;
        while d > 0 {
            d -= 1;
            let current = self.labels[d];
            let (used1, used2) = self.counts(d);
            if let Some(next) =
                (current + 1..=LABEL_X).find(|&l| self.feasible(d, l, used1, used2))
            {
                self.labels.truncate(d);
                self.labels.push(next);
                let filled = self.fill_from(d + 1);
                debug_assert!(filled, "feasible prefixes complete");
                return true;
            }
        }
        false
    }

    fn emit(&self) -> BalancedColoring {
        let mut c = BalancedColoring::new(VertexSet::new(), VertexSet::new(), VertexSet::new());
        for (v, &l) in self.labels.iter().enumerate() {
            match l {
                LABEL_P1 => c.p1.insert(v),
                LABEL_P2 => c.p2.insert(v),
                _ => c.x.insert(v),
            };
        }
        c
    }
}

impl Iterator for BalancedColorings {
    type Item = BalancedColoring;

    fn next(&mut self) -> Option<BalancedColoring> {
        loop {
            match self.state {
                IterState::Done => return None,
                IterState::StartClass => {
                    if self.first_in_class() {
                        self.state = IterState::Within;
                        return Some(self.emit());
                    }
                    // Class sizes grow monotonically; an infeasible k means
                    // all larger k are infeasible too.
                    self.state = IterState::Done;
                }
                IterState::Within => {
                    if self.advance_in_class() {
                        return Some(self.emit());
                    }
                    if self.k == self.k_max {
                        self.state = IterState::Done;
                    } else {
                        self.k += 1;
                        self.state = IterState::StartClass;
                    }
                }
            }
        }
    }
}

/// Constructs a balanced coloring that no decomposition with parts of at
/// most 3 vertices can satisfy, from a minimum vertex cut `Y`:
///
/// * `G1` = smaller side of the cut split, `l = min(|Y|, |V(G1)| − 1)`;
/// * `Y ∩ P1` takes `l` vertices of the cut, `Y ∩ P2` the other `|Y| − l`;
/// * `G1` contributes `l + 1` vertices to `P2` and none to `P1`;
/// * `P1` is topped up to `|Y| + 1` vertices from `G2`; everything else is
///   uncolored.
///
/// All selections take smallest indices first, so the result is
/// reproducible. Applicable only to connected graphs on at least 3 vertices
/// that are not `⌊n/2⌋`-connected.
pub fn adversarial_coloring(g: &Graph) -> Result<BalancedColoring> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::NotApplicable(format!(
            "graph has {n} vertices; the construction needs at least 3"
        )));
    }
    if !is_connected(g) {
        return Err(Error::NotApplicable("graph is disconnected".into()));
    }
    let half = n / 2;
    if is_k_connected(g, half) {
        return Err(Error::NotApplicable(format!(
            "graph is {half}-connected; no qualifying vertex cut exists"
        )));
    }
    let y = min_vertex_cut(g)
        .ok_or_else(|| Error::Internal("non-complete connected graph must have a cut".into()))?;
    let (x1, x2) = is_vertex_cut(g, &y)
        .ok_or_else(|| Error::Internal("minimum cut failed the cut re-check".into()))?;
    // Smaller side becomes G1; on ties the side holding the smallest index,
    // which is x1 by construction of the split witness.
    let (g1, g2) = if x1.len() <= x2.len() { (x1, x2) } else { (x2, x1) };
    if 2 * y.len() > n - 2 {
        return Err(Error::Internal(format!(
            "minimum cut of size {} is too large for n = {n}",
            y.len()
        )));
    }
    let l = y.len().min(g1.len() - 1);

    let mut c = BalancedColoring::new(VertexSet::new(), VertexSet::new(), VertexSet::new());
    for (i, &v) in y.iter().enumerate() {
        if i < l {
            c.p1.insert(v);
        } else {
            c.p2.insert(v);
        }
    }
    for &v in g1.iter().take(l + 1) {
        c.p2.insert(v);
    }
    for &v in g2.iter().take(y.len() + 1 - l) {
        c.p1.insert(v);
    }
    c.x = (0..n)
        .filter(|v| !c.p1.contains(v) && !c.p2.contains(v))
        .collect();

    validate_coloring(g, &c).map_err(|e| {
        Error::Internal(format!("adversarial construction produced a bad coloring: {e}"))
    })?;
    if c.p1.len() != y.len() + 1 {
        return Err(Error::Internal(format!(
            "adversarial coloring has |p1| = {}, expected |Y|+1 = {}",
            c.p1.len(),
            y.len() + 1
        )));
    }
    Ok(c)
}
