//! Labeled simple graphs on the vertex set `1..=n`.
//!
//! Adjacency is kept as one `u64` neighbor mask per vertex, so `n` is capped
//! at [`MAX_VERTICES`]. Every other module works with these graphs and with
//! [`VertexSet`] bitmasks over the same labels.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("{0}")]
    InvalidParameter(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// A subset of `1..=64`, stored as a bitmask (bit `v - 1` for vertex `v`).
///
/// The total order is by size first, then lexicographic on the sorted
/// member lists, so sorting a family of sets yields `∅` first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter()
            .fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 & (1u64 << (v - 1)) != 0
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

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v + 1)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the lowest differing vertex belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x == 0 || x > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_vertices(v))
    }
}

/// A finite simple graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & (1u64 << (v - 1)) != 0
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((1..=self.n).filter(|&v| self.adj[v - 1] == 0))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|i| !self.adj[i] & full & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & within.0 & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `true` iff deleting `v` increases the number of components.
    pub fn is_cut_vertex(&self, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(v)?;
        if self.n < 2 {
            return Err(GraphError::InvalidParameter(
                "cut vertices need at least two vertices".into(),
            ));
        }
        let before = self.component_count();
        let after = self.components_within(self.vertices().without(v)).len();
        Ok(after > before)
    }

    /// Induced subgraph on `w`, relabeled `1..=|w|` by increasing original
    /// label. The second component maps new labels (index `k - 1`) to old ones.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if w.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(bad) = w.iter().find(|&v| v > self.n) {
            return Err(GraphError::VertexOutOfRange { v: bad, n: self.n });
        }
        let labels = w.to_vec();
        let mut g = Graph::empty(labels.len())?;
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.adj[a] |= 1u64 << b;
                    g.adj[b] |= 1u64 << a;
                }
            }
        }
        Ok((g, labels))
    }

    /// Applies the relabeling `perm[v - 1] = new label of v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u - 1] - 1, perm[v - 1] - 1);
            adj[a] |= 1u64 << b;
            adj[b] |= 1u64 << a;
        }
        Graph { n: self.n, adj }
    }

    /// Upper-triangle adjacency bits in graph6 order, as an integer key.
    /// Only meaningful for `n <= 11` (at most 55 pairs).
    fn triangle_key(&self) -> u64 {
        let mut key = 0u64;
        for j in 2..=self.n {
            for i in 1..j {
                key = (key << 1) | self.has_edge(i, j) as u64;
            }
        }
        key
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn block_offsets(parts: &[Graph]) -> Result<Vec<usize>, GraphError> {
    let total: usize = parts.iter().map(Graph::n).sum();
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for p in parts {
        offsets.push(acc);
        acc += p.n();
    }
    Ok(offsets)
}

/// Block-relabeled disjoint union; part `i` occupies the next `|V_i|` labels.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::InvalidParameter(
            "disjoint union needs at least one part".into(),
        ));
    }
    let offsets = block_offsets(parts)?;
    let mut g = Graph::empty(parts.iter().map(Graph::n).sum())?;
    for (p, &off) in parts.iter().zip(&offsets) {
        for (u, v) in p.edges() {
            g.add_edge(u + off, v + off)?;
        }
    }
    Ok(g)
}

/// Join product: the disjoint union plus every edge between distinct blocks.
pub fn join_product(parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.len() < 2 {
        return Err(GraphError::InvalidParameter(
            "join product needs at least two parts".into(),
        ));
    }
    let mut g = disjoint_union(parts)?;
    let offsets = block_offsets(parts)?;
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for u in 1..=parts[a].n() {
                for v in 1..=parts[b].n() {
                    g.add_edge(u + offsets[a], v + offsets[b])?;
                }
            }
        }
    }
    Ok(g)
}

/// Named graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Complete(usize),
    /// Edgeless graph `K_n^c`.
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}` with the center labeled 1.
    Star(usize),
    /// `K_{t_1,...,t_r}` with `t_1 <= ... <= t_r`, built as a join of edgeless blocks.
    CompleteMultipartite(Vec<usize>),
    Complement(Box<Graph>),
}

pub fn make_named(family: &Named) -> Result<Graph, GraphError> {
    let bad = |msg: &str| Err(GraphError::InvalidParameter(msg.to_string()));
    match family {
        Named::Complete(n) => {
            let mut g = Graph::empty(*n)?;
            for u in 1..=*n {
                for v in u + 1..=*n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Named::Empty(n) => Graph::empty(*n),
        Named::Path(n) => {
            let mut g = Graph::empty(*n)?;
            for v in 1..*n {
                g.add_edge(v, v + 1)?;
            }
            Ok(g)
        }
        Named::Cycle(n) => {
            if *n < 3 {
                return bad("a cycle needs at least 3 vertices");
            }
            let mut g = make_named(&Named::Path(*n))?;
            g.add_edge(*n, 1)?;
            Ok(g)
        }
        Named::Star(k) => {
            if *k == 0 {
                return bad("a star needs at least one leaf");
            }
            join_product(&[Graph::empty(1)?, Graph::empty(*k)?])
        }
        Named::CompleteMultipartite(parts) => {
            if parts.len() < 2 {
                return bad("a complete multipartite graph needs at least two parts");
            }
            if parts.iter().any(|&t| t == 0) {
                return bad("multipartite part sizes must be positive");
            }
            if parts.windows(2).any(|w| w[0] > w[1]) {
                return bad("multipartite part sizes must be sorted ascending");
            }
            let blocks = parts
                .iter()
                .map(|&t| Graph::empty(t))
                .collect::<Result<Vec<_>, _>>()?;
            join_product(&blocks)
        }
        Named::Complement(g) => Ok(g.complement()),
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record (header optional, surrounding whitespace ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let err = |offset: usize, reason: &str| GraphError::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(skip, "empty record"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(skip + pos, "byte outside the printable range 63..=126"));
    }
    let take = |from: usize, count: usize| -> Result<u64, GraphError> {
        if bytes.len() < from + count {
            return Err(err(skip + bytes.len(), "truncated vertex-count prefix"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63)))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        (u64::from(bytes[0] - 63), 1)
    } else if bytes.len() > 1 && bytes[1] == 126 {
        let n = take(2, 6)?;
        if n <= 258_047 {
            return Err(err(skip, "8-byte vertex count used for a small value"));
        }
        (n, 8)
    } else {
        let n = take(1, 3)?;
        if n < 63 {
            return Err(err(skip, "4-byte vertex count used for a small value"));
        }
        (n, 4)
    };
    let n = n as usize;
    if n == 0 {
        return Err(err(skip, "graph has no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    let payload = &bytes[pos..];
    if payload.len() != expected {
        return Err(err(
            skip + pos + payload.len().min(expected),
            &format!("expected {expected} adjacency bytes, found {}", payload.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 2..=n {
        for i in 1..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = payload[k / 6] - 63;
        let mask = (1u8 << (6 - k % 6)) - 1;
        if last & mask != 0 {
            return Err(err(skip + pos + k / 6, "nonzero padding bits"));
        }
    }
    pos += expected;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Encodes `g` in graph6 (no header).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 2..=n {
        for i in 1..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Largest `n` accepted by the brute-force isomorphism routines.
pub const MAX_ISO_VERTICES: usize = 8;

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    // Heap's algorithm over labels 1..=n; `visit` returns false to stop early.
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    if !visit(&perm) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if !visit(&perm) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Brute-force isomorphism test; `None` when `n` exceeds [`MAX_ISO_VERTICES`].
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Option<bool> {
    if a.n() != b.n() {
        return Some(false);
    }
    if a.n() > MAX_ISO_VERTICES {
        return None;
    }
    if a.edge_count() != b.edge_count() || degree_profile(a) != degree_profile(b) {
        return Some(false);
    }
    let target = b.triangle_key();
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        if a.relabel(p).triangle_key() == target {
            found = true;
        }
        !found
    });
    Some(found)
}

/// Canonical representative of the isomorphism class (maximal graph6 bit key).
pub fn canonical_form(g: &Graph) -> Option<Graph> {
    if g.n() > MAX_ISO_VERTICES {
        return None;
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    for_each_permutation(g.n(), |p| {
        let key = g.relabel(p).triangle_key();
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            best = Some((key, p.to_vec()));
        }
        true
    });
    best.map(|(_, p)| g.relabel(&p))
}

/// Every labeled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=11).contains(&n), "labeled enumeration is limited to n <= 11");
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let mut g = Graph::empty(n).expect("n checked");
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j).expect("valid pair");
            }
        }
        g
    })
}

/// One canonical representative per isomorphism class on `n <= 7` vertices,
/// sorted by edge count and then graph6 code.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "class enumeration is limited to n <= 7");
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for g in all_labeled_graphs(n) {
        let c = canonical_form(&g).expect("n <= 7");
        if seen.insert(c.triangle_key()) {
            reps.push(c);
        }
    }
    reps.sort_by_key(|g| (g.edge_count(), write_graph6(g)));
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Graph {
        make_named(&Named::Path(n)).unwrap()
    }

    fn k(n: usize) -> Graph {
        make_named(&Named::Complete(n)).unwrap()
    }

    /// Independent graph6 decoder working bit by bit over a flat bit vector.
    fn decode_reference(code: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes: Vec<u8> = code.bytes().map(|b| b - 63).collect();
        let n = bytes[0] as usize;
        let bits: Vec<u8> = bytes[1..]
            .iter()
            .flat_map(|b| (0..6).rev().map(move |s| (b >> s) & 1))
            .collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i + 1, j + 1));
                }
                k += 1;
            }
        }
        edges.sort_unstable();
        (n, edges)
    }

    #[test]
    fn graph6_small_records() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, k(2));
        assert_eq!(decode_reference("A_"), (2, vec![(1, 2)]));
        let b = parse_graph6("B_").unwrap();
        assert_eq!(write_graph6(&b), "B_");
        assert_eq!(decode_reference("B_"), (b.n(), b.edges()));
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k2);
        assert!(matches!(parse_graph6(""), Err(GraphError::Graph6 { .. })));
    }

    #[test]
    fn graph6_errors_name_offsets() {
        // padding bit set: n=2 uses 1 bit, '`' = 96 - 63 = 33 = 100001
        match parse_graph6("A`") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C ") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("?").is_err());
        assert!(parse_graph6("~").is_err());
    }

    #[test]
    fn graph6_long_prefix() {
        let g = make_named(&Named::Cycle(64)).unwrap();
        let code = write_graph6(&g);
        assert!(code.starts_with('~'));
        assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn graph6_roundtrip_all_small_labeled() {
        for n in 1..=5 {
            for g in all_labeled_graphs(n) {
                let code = write_graph6(&g);
                assert_eq!(parse_graph6(&code).unwrap(), g);
                assert_eq!(decode_reference(&code), (g.n(), g.edges()));
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        let (h, labels) = p(4).induced_subgraph(VertexSet::from_vertices([1, 2, 3])).unwrap();
        assert_eq!(h, p(3));
        assert_eq!(labels, vec![1, 2, 3]);
        let (h, _) = k(4).induced_subgraph(VertexSet::from_vertices([2, 4])).unwrap();
        assert_eq!(h, k(2));
        let c5 = make_named(&Named::Cycle(5)).unwrap();
        for drop in 1..=5 {
            let (h, _) = c5.induced_subgraph(c5.vertices().without(drop)).unwrap();
            assert_eq!(is_isomorphic(&h, &p(4)), Some(true));
        }
        assert_eq!(
            k(3).induced_subgraph(VertexSet::EMPTY).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn components_and_cut_vertices() {
        let two_k2 = disjoint_union(&[k(2), k(2)]).unwrap();
        assert_eq!(
            two_k2.connected_components(),
            vec![VertexSet::from_vertices([1, 2]), VertexSet::from_vertices([3, 4])]
        );
        assert_eq!(k(3).connected_components().len(), 1);
        assert_eq!(Graph::empty(3).unwrap().component_count(), 3);
        assert!(p(3).is_cut_vertex(2).unwrap());
        assert!(!k(3).is_cut_vertex(1).unwrap());
        assert!(p(4).is_cut_vertex(2).unwrap());
        assert!(!p(4).is_cut_vertex(1).unwrap());
        assert!(p(4).is_cut_vertex(5).is_err());
    }

    #[test]
    fn joins_and_unions() {
        let k1 = Graph::empty(1).unwrap();
        let p3 = join_product(&[k1.clone(), Graph::empty(2).unwrap()]).unwrap();
        assert_eq!(p3.edges(), vec![(1, 2), (1, 3)]);
        assert_eq!(is_isomorphic(&p3, &p(3)), Some(true));
        let b = join_product(&[k1.clone(), disjoint_union(&[k1.clone(), k(2)]).unwrap()]).unwrap();
        assert_eq!(b.edges(), vec![(1, 2), (1, 3), (1, 4), (3, 4)]);
        assert_eq!(join_product(&[k(2), k(2)]).unwrap(), k(4));
        assert!(join_product(&[k(2)]).is_err());
        assert_eq!(disjoint_union(&[k1.clone()]).unwrap(), k1);
        let g = disjoint_union(&[k1, k(2)]).unwrap();
        assert_eq!(g.edges(), vec![(2, 3)]);
    }

    #[test]
    fn named_families() {
        let k12 = make_named(&Named::CompleteMultipartite(vec![1, 2])).unwrap();
        assert_eq!(is_isomorphic(&k12, &p(3)), Some(true));
        let k22 = make_named(&Named::CompleteMultipartite(vec![2, 2])).unwrap();
        let c4 = make_named(&Named::Cycle(4)).unwrap();
        assert_eq!(is_isomorphic(&k22, &c4), Some(true));
        assert_eq!(
            make_named(&Named::Complement(Box::new(k(3)))).unwrap(),
            Graph::empty(3).unwrap()
        );
        for r in 2..=5 {
            assert_eq!(
                make_named(&Named::CompleteMultipartite(vec![1; r])).unwrap(),
                k(r)
            );
        }
        assert!(make_named(&Named::CompleteMultipartite(vec![2, 1])).is_err());
        assert!(make_named(&Named::CompleteMultipartite(vec![3])).is_err());
        assert!(make_named(&Named::Complete(0)).is_err());
        let star = make_named(&Named::Star(3)).unwrap();
        assert_eq!(star.degree(1), 3);
    }

    #[test]
    fn vertex_set_order() {
        let mut fam = vec![
            VertexSet::from_vertices([2, 3]),
            VertexSet::from_vertices([1, 3]),
            VertexSet::EMPTY,
            VertexSet::from_vertices([4]),
            VertexSet::from_vertices([1, 4]),
        ];
        fam.sort();
        let lists: Vec<Vec<usize>> = fam.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![], vec![4], vec![1, 3], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| isomorphism_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }
}
