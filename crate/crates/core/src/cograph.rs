//! P4-free graphs: induced-P4 search, minimum connected dominating sets and
//! the join factorization built from them, assembled into cotrees.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Cap for the exhaustive minimum connected dominating set search.
pub const MCDS_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CographError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph needs at least two vertices for a join split")]
    TooSmall,
    #[error("induced P4 on {0:?}")]
    InducedP4([usize; 4]),
    #[error("exhaustive dominating-set search is capped at {MCDS_LIMIT} vertices, graph has {0}")]
    TooLarge(usize),
    #[error("minimum connected dominating set {0:?} is neither a vertex nor an edge")]
    UnexpectedDominatingSet(VertexSet),
}

/// An induced `P4`, listed in path order, or `None` if `g` is P4-free.
pub fn has_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    // Scan the middle edge (b, c) and look for a pendant on each side.
    for b in 1..=n {
        for c in g.neighbors(b).iter() {
            let a_side = g
                .neighbors(b)
                .difference(g.closed_neighbors(c));
            let d_side = g
                .neighbors(c)
                .difference(g.closed_neighbors(b));
            for a in a_side.iter() {
                if let Some(d) = d_side.iter().find(|&d| !g.has_edge(a, d)) {
                    let path = [a, b, c, d];
                    // report the orientation that starts with the smaller end
                    return Some(if a < d { path } else { [d, c, b, a] });
                }
            }
        }
    }
    None
}

fn is_dominating(g: &Graph, t: VertexSet) -> bool {
    let covered = t
        .iter()
        .fold(t, |acc, v| acc.union(g.neighbors(v)));
    covered == g.vertices()
}

fn induces_connected(g: &Graph, t: VertexSet) -> bool {
    g.components_within(t).len() == 1
}

/// Next subset of `0..n` with the same popcount (Gosper's hack); subsets of
/// one size come out in increasing integer order.
fn next_same_size(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Lexicographically first connected dominating set of minimum size.
pub fn minimum_connected_dominating_set(g: &Graph) -> Result<VertexSet, CographError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(CographError::Disconnected);
    }
    if n > MCDS_LIMIT {
        return Err(CographError::TooLarge(n));
    }
    for size in 1..=n {
        let mut best: Option<VertexSet> = None;
        let mut mask = (1u64 << size) - 1;
        while mask < 1u64 << n {
            let t = VertexSet::from_bits(mask);
            if is_dominating(g, t) && induces_connected(g, t) && best.is_none_or(|b| t < b) {
                best = Some(t);
            }
            mask = next_same_size(mask);
        }
        if let Some(t) = best {
            return Ok(t);
        }
    }
    unreachable!("the full vertex set of a connected graph is a connected dominating set")
}

/// Which branch of the factorization produced the split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitBranch {
    /// The dominating set is a single universal vertex.
    UniversalVertex,
    /// Dominating edge `{v, w}` with `A = ∅`: `w` is universal.
    EmptyA,
    /// Dominating edge with `B = ∅`: `v` is universal.
    EmptyB,
    /// Dominating edge with `A`, `B` nonempty; sides built from `C1, C2, C3`.
    Partition,
}

/// Record of the sets computed while splitting a connected P4-free graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitCertificate {
    pub dominating: VertexSet,
    pub branch: SplitBranch,
    pub v: Option<usize>,
    pub w: Option<usize>,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c1: VertexSet,
    pub c2: VertexSet,
    pub c3: VertexSet,
}

/// Splits a connected P4-free graph as `G = G[V1] * G[V2]`.
///
/// With `T` the minimum connected dominating set: a single vertex `u` gives
/// `({u}, rest)`. An edge `{v, w}` gives `A = N(v) \ N[w]`,
/// `B = N(w) \ N[v]`, `C = N(v) ∩ N(w)` split into `C1` (sees all of `A`
/// only), `C2` (all of `B` only), `C3` (both), and the sides
/// `{v} ∪ B ∪ C1 ∪ C3` and `{w} ∪ A ∪ C2`.
pub fn join_split(g: &Graph) -> Result<(VertexSet, VertexSet, SplitCertificate), CographError> {
    if g.n() < 2 {
        return Err(CographError::TooSmall);
    }
    if !g.is_connected() {
        return Err(CographError::Disconnected);
    }
    if let Some(p4) = has_induced_p4(g) {
        return Err(CographError::InducedP4(p4));
    }
    split_connected(g)
}

/// The split procedure alone; a non-cograph surfaces as a dominating set
/// larger than an edge or a missing cross edge.
fn split_connected(g: &Graph) -> Result<(VertexSet, VertexSet, SplitCertificate), CographError> {
    let all = g.vertices();
    let t = minimum_connected_dominating_set(g)?;
    let mut cert = SplitCertificate {
        dominating: t,
        branch: SplitBranch::UniversalVertex,
        v: None,
        w: None,
        a: VertexSet::EMPTY,
        b: VertexSet::EMPTY,
        c1: VertexSet::EMPTY,
        c2: VertexSet::EMPTY,
        c3: VertexSet::EMPTY,
    };
    let (side1, side2) = match t.to_vec()[..] {
        [u] => {
            let s = VertexSet::singleton(u);
            (s, all.difference(s))
        }
        [v, w] => {
            cert.v = Some(v);
            cert.w = Some(w);
            let a = g.neighbors(v).difference(g.closed_neighbors(w));
            let b = g.neighbors(w).difference(g.closed_neighbors(v));
            cert.a = a;
            cert.b = b;
            if a.is_empty() {
                cert.branch = SplitBranch::EmptyA;
                let s = VertexSet::singleton(w);
                (s, all.difference(s))
            } else if b.is_empty() {
                cert.branch = SplitBranch::EmptyB;
                let s = VertexSet::singleton(v);
                (s, all.difference(s))
            } else {
                cert.branch = SplitBranch::Partition;
                let c = g.neighbors(v).intersection(g.neighbors(w));
                for x in c.iter() {
                    let nx = g.neighbors(x);
                    match (a.is_subset(nx), b.is_subset(nx)) {
                        (true, false) => cert.c1 = cert.c1.with(x),
                        (false, true) => cert.c2 = cert.c2.with(x),
                        (true, true) => cert.c3 = cert.c3.with(x),
                        (false, false) => return Err(p4_error(g, t)),
                    }
                }
                let s1 = VertexSet::singleton(v).union(b).union(cert.c1).union(cert.c3);
                let s2 = VertexSet::singleton(w).union(a).union(cert.c2);
                (s1, s2)
            }
        }
        _ => return Err(p4_error(g, t)),
    };
    // Every cross pair must be an edge; a failure means the input was not P4-free.
    for x in side1.iter() {
        if !side2.is_subset(g.neighbors(x)) || side1.union(side2) != all {
            return Err(p4_error(g, t));
        }
    }
    Ok((side1, side2, cert))
}

fn p4_error(g: &Graph, t: VertexSet) -> CographError {
    match has_induced_p4(g) {
        Some(p4) => CographError::InducedP4(p4),
        None => CographError::UnexpectedDominatingSet(t),
    }
}

/// Cotree of a P4-free graph; leaves carry original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Join(Vec<Cotree>),
    Union(Vec<Cotree>),
}

impl Cotree {
    fn join(children: Vec<Cotree>) -> Cotree {
        let mut flat = Vec::new();
        for c in children {
            match c {
                Cotree::Join(grand) => flat.extend(grand),
                other => flat.push(other),
            }
        }
        Cotree::Join(flat)
    }

    fn union(children: Vec<Cotree>) -> Cotree {
        let mut flat = Vec::new();
        for c in children {
            match c {
                Cotree::Union(grand) => flat.extend(grand),
                other => flat.push(other),
            }
        }
        Cotree::Union(flat)
    }

    pub fn leaves(&self) -> VertexSet {
        match self {
            Cotree::Leaf(v) => VertexSet::singleton(*v),
            Cotree::Join(ch) | Cotree::Union(ch) => ch
                .iter()
                .fold(VertexSet::EMPTY, |acc, c| acc.union(c.leaves())),
        }
    }

    /// Rebuilds the graph on `1..=n`: two leaves are adjacent iff their
    /// lowest common ancestor is a join node.
    pub fn to_graph(&self, n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("cotree over a nonempty graph");
        self.add_edges(&mut g);
        g
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join(ch) => {
                for (k, c) in ch.iter().enumerate() {
                    c.add_edges(g);
                    for d in &ch[k + 1..] {
                        for u in c.leaves().iter() {
                            for v in d.leaves().iter() {
                                g.add_edge(u, v).expect("leaf labels are in range");
                            }
                        }
                    }
                }
            }
        }
    }

    /// Checks the normal-form invariants: internal nodes have at least two
    /// children and never a child of the same kind.
    pub fn is_normalized(&self) -> bool {
        match self {
            Cotree::Leaf(_) => true,
            Cotree::Join(ch) => {
                ch.len() >= 2
                    && ch.iter().all(|c| !matches!(c, Cotree::Join(_)) && c.is_normalized())
            }
            Cotree::Union(ch) => {
                ch.len() >= 2
                    && ch.iter().all(|c| !matches!(c, Cotree::Union(_)) && c.is_normalized())
            }
        }
    }
}

impl Serialize for Cotree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(2))?;
        match self {
            Cotree::Leaf(v) => {
                map.serialize_entry("kind", "leaf")?;
                map.serialize_entry("vertex", v)?;
            }
            Cotree::Join(ch) => {
                map.serialize_entry("kind", "join")?;
                map.serialize_entry("children", ch)?;
            }
            Cotree::Union(ch) => {
                map.serialize_entry("kind", "union")?;
                map.serialize_entry("children", ch)?;
            }
        }
        map.end()
    }
}

/// Cotree built by repeated join splits. The induced-P4 search is only
/// consulted to name a witness once a split fails.
pub fn cotree(g: &Graph) -> Result<Cotree, CographError> {
    cotree_on(g, g.vertices())
}

fn cotree_on(g: &Graph, within: VertexSet) -> Result<Cotree, CographError> {
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|c| cotree_on(g, c))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::union(children));
    }
    if within.len() == 1 {
        return Ok(Cotree::Leaf(within.min().expect("nonempty")));
    }
    let (h, labels) = g.induced_subgraph(within).expect("nonempty vertex set");
    let (s1, s2, _) = split_connected(&h).map_err(|e| match e {
        CographError::InducedP4(p) => CographError::InducedP4(p.map(|v| labels[v - 1])),
        other => other,
    })?;
    let lift = |s: VertexSet| VertexSet::from_vertices(s.iter().map(|v| labels[v - 1]));
    Ok(Cotree::join(vec![
        cotree_on(g, lift(s1))?,
        cotree_on(g, lift(s2))?,
    ]))
}

/// Number of unordered non-adjacent vertex pairs.
pub fn nonadjacent_pairs(g: &Graph) -> usize {
    g.n() * (g.n() - 1) / 2 - g.edge_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_labeled_graphs, disjoint_union, join_product, make_named, Named};

    fn named(f: Named) -> Graph {
        make_named(&f).unwrap()
    }

    /// All 4-subsets in all 24 orders, checking the path pattern literally.
    fn brute_p4(g: &Graph) -> bool {
        let n = g.n();
        let mut idx = [0usize; 4];
        for a in 1..=n {
            idx[0] = a;
            for b in 1..=n {
                for c in 1..=n {
                    for d in 1..=n {
                        let q = [a, b, c, d];
                        let distinct = (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]));
                        if distinct
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                            && !g.has_edge(a, c)
                            && !g.has_edge(b, d)
                            && !g.has_edge(a, d)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn is_induced_p4(g: &Graph, p: [usize; 4]) -> bool {
        let [a, b, c, d] = p;
        g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(b, d)
            && !g.has_edge(a, d)
    }

    #[test]
    fn p4_examples() {
        assert_eq!(has_induced_p4(&named(Named::Path(4))), Some([1, 2, 3, 4]));
        assert_eq!(has_induced_p4(&named(Named::Complete(4))), None);
        let c5 = named(Named::Cycle(5));
        let w = has_induced_p4(&c5).unwrap();
        assert!(is_induced_p4(&c5, w));
    }

    #[test]
    fn p4_scan_matches_brute_force() {
        for n in 1..=5 {
            for g in all_labeled_graphs(n) {
                let found = has_induced_p4(&g);
                assert_eq!(found.is_some(), brute_p4(&g));
                if let Some(p) = found {
                    assert!(is_induced_p4(&g, p));
                }
            }
        }
    }

    #[test]
    fn mcds_examples() {
        let v = |l: &[usize]| VertexSet::from_vertices(l.iter().copied());
        assert_eq!(minimum_connected_dominating_set(&named(Named::Path(3))).unwrap(), v(&[2]));
        assert_eq!(minimum_connected_dominating_set(&named(Named::Complete(4))).unwrap(), v(&[1]));
        assert_eq!(minimum_connected_dominating_set(&named(Named::Path(4))).unwrap(), v(&[2, 3]));
        assert_eq!(
            minimum_connected_dominating_set(&Graph::empty(2).unwrap()),
            Err(CographError::Disconnected)
        );
    }

    #[test]
    fn mcds_is_minimum_by_exhaustion() {
        for n in 1..=6 {
            for g in all_labeled_graphs(n).filter(Graph::is_connected).step_by(3) {
                let t = minimum_connected_dominating_set(&g).unwrap();
                assert!(is_dominating(&g, t) && induces_connected(&g, t));
                for mask in 1u64..1 << n {
                    let s = VertexSet::from_bits(mask);
                    if s.len() < t.len() {
                        assert!(!(is_dominating(&g, s) && induces_connected(&g, s)));
                    }
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        let (a, b, cert) = join_split(&named(Named::Path(3))).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![2], vec![1, 3]));
        assert_eq!(cert.branch, SplitBranch::UniversalVertex);

        let k22 = named(Named::CompleteMultipartite(vec![2, 2]));
        let (a, b, _) = join_split(&k22).unwrap();
        for x in a.iter() {
            assert!(b.is_subset(k22.neighbors(x)));
        }
        assert_eq!(a.union(b), k22.vertices());
        assert!(!a.is_empty() && !b.is_empty());

        assert_eq!(
            join_split(&named(Named::Path(4))).unwrap_err(),
            CographError::InducedP4([1, 2, 3, 4])
        );
    }

    #[test]
    fn cotree_examples() {
        assert_eq!(
            cotree(&named(Named::Complete(2))).unwrap(),
            Cotree::Join(vec![Cotree::Leaf(1), Cotree::Leaf(2)])
        );
        let k2 = named(Named::Complete(2));
        let two = disjoint_union(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(
            cotree(&two).unwrap(),
            Cotree::Union(vec![
                Cotree::Join(vec![Cotree::Leaf(1), Cotree::Leaf(2)]),
                Cotree::Join(vec![Cotree::Leaf(3), Cotree::Leaf(4)]),
            ])
        );
        let k1 = Graph::empty(1).unwrap();
        let b = join_product(&[k1.clone(), disjoint_union(&[k1, k2]).unwrap()]).unwrap();
        let t = cotree(&b).unwrap();
        assert_eq!(
            t,
            Cotree::Join(vec![
                Cotree::Leaf(1),
                Cotree::Union(vec![
                    Cotree::Leaf(2),
                    Cotree::Join(vec![Cotree::Leaf(3), Cotree::Leaf(4)]),
                ]),
            ])
        );
        assert_eq!(
            serde_json::to_string(&Cotree::Join(vec![Cotree::Leaf(1), Cotree::Leaf(2)])).unwrap(),
            r#"{"kind":"join","children":[{"kind":"leaf","vertex":1},{"kind":"leaf","vertex":2}]}"#
        );
        let k4 = cotree(&named(Named::Complete(4))).unwrap();
        assert_eq!(k4, Cotree::Join((1..=4).map(Cotree::Leaf).collect()));
    }

    #[test]
    fn cotree_equivalence_small() {
        for n in 1..=5 {
            for g in all_labeled_graphs(n) {
                match cotree(&g) {
                    Ok(t) => {
                        assert!(brute_p4(&g) == false);
                        assert!(t.is_normalized());
                        assert_eq!(t.to_graph(n), g);
                        assert_eq!(t.leaves(), g.vertices());
                    }
                    Err(CographError::InducedP4(p)) => {
                        assert!(brute_p4(&g));
                        assert!(is_induced_p4(&g, p));
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn connected_cographs_have_small_dominating_sets() {
        for g in all_labeled_graphs(6).filter(|g| g.is_connected() && has_induced_p4(g).is_none()) {
            assert!(minimum_connected_dominating_set(&g).unwrap().len() <= 2);
        }
    }

    #[test]
    fn nonadjacent_pair_counts() {
        assert_eq!(nonadjacent_pairs(&named(Named::Complete(4))), 0);
        assert_eq!(nonadjacent_pairs(&named(Named::Path(3))), 1);
        assert_eq!(nonadjacent_pairs(&named(Named::Cycle(4))), 2);
    }
}
