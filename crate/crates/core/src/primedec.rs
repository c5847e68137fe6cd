//! Cut sets `𝒞(G)` and the minimal primes `P_T(K_m, G)` of `J_{K_m,G}`.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{join_product, Graph, GraphError, VertexSet};

/// Largest `n` for which [`cut_sets`] enumerates all `2^n` subsets.
pub const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeDecError {
    #[error("exhaustive-limit: cut-set enumeration is capped at {limit} vertices, graph has {n}")]
    ExhaustiveLimit { n: usize, limit: usize },
    #[error("{0:?} does not have the cut vertex property; P_T is not a minimal prime")]
    NotCutSet(VertexSet),
    #[error("the join formula needs both factors disconnected; use cut_sets on the join instead")]
    ConnectedFactor,
    #[error("row count m must be at least 2, got {0}")]
    RowCount(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `𝒞(G)`: `∅` first, then by size and lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSetFamily {
    #[serde(skip)]
    pub ambient: Graph,
    pub sets: Vec<VertexSet>,
}

impl CutSetFamily {
    fn from_sets(ambient: Graph, sets: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if sets.first() != Some(&VertexSet::EMPTY) {
            sets.insert(0, VertexSet::EMPTY);
        }
        CutSetFamily { ambient, sets }
    }

    /// `𝒞̄(G)`, the nonempty members.
    pub fn nonempty(&self) -> &[VertexSet] {
        &self.sets[1..]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        self.sets.binary_search(&t).is_ok()
    }
}

/// `T = ∅`, or every `v ∈ T` is a cut vertex of `G[T̄ ∪ {v}]`.
///
/// `v` is a cut vertex of `G[T̄ ∪ {v}]` exactly when its neighbors meet at
/// least two components of `G[T̄]`.
pub fn has_cut_point_property(g: &Graph, t: VertexSet) -> bool {
    if t.is_empty() {
        return true;
    }
    let rest = g.vertices().difference(t);
    let comps = g.components_within(rest);
    t.iter().all(|v| {
        let nb = g.neighbors(v);
        comps.iter().filter(|c| !c.intersection(nb).is_empty()).take(2).count() == 2
    })
}

pub fn cut_sets(g: &Graph) -> Result<CutSetFamily, PrimeDecError> {
    let n = g.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(PrimeDecError::ExhaustiveLimit { n, limit: EXHAUSTIVE_LIMIT });
    }
    // A vertex of degree <= 1 can never separate anything, so subsets
    // containing one are skipped without a component computation.
    let weak = (1..=n)
        .filter(|&v| g.degree(v) < 2)
        .fold(0u64, |acc, v| acc | 1u64 << (v - 1));
    let sets = (0u64..1u64 << n)
        .filter(|&mask| mask & weak == 0)
        .map(VertexSet::from_bits)
        .filter(|&t| has_cut_point_property(g, t));
    Ok(CutSetFamily::from_sets(g.clone(), sets))
}

/// One minimal prime `P_T(K_m, G)` in combinatorial form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    pub t: VertexSet,
    pub m: usize,
    pub n: usize,
    /// Components of `G[T̄]`; the prime contains all 2-minors inside each.
    pub clique_blocks: Vec<VertexSet>,
}

impl PrimeComponent {
    /// Variables `x_ij`, `(i, j) ∈ [m] × T`, killed by the prime.
    pub fn killed(&self) -> Vec<(usize, usize)> {
        (1..=self.m)
            .flat_map(|i| self.t.iter().map(move |j| (i, j)))
            .collect()
    }

    /// `Σ (m + n_i - 1)` over the clique blocks, i.e. `dim S/P_T`.
    pub fn dimension(&self) -> usize {
        self.clique_blocks.iter().map(|b| self.m + b.len() - 1).sum()
    }
}

impl Serialize for PrimeComponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            #[serde(rename = "T")]
            t: VertexSet,
            killed: Vec<[usize; 2]>,
            cliques: &'a [VertexSet],
        }
        Repr {
            t: self.t,
            killed: self.killed().into_iter().map(|(i, j)| [i, j]).collect(),
            cliques: &self.clique_blocks,
        }
        .serialize(s)
    }
}

pub fn prime_component(g: &Graph, m: usize, t: VertexSet) -> Result<PrimeComponent, PrimeDecError> {
    if m < 2 {
        return Err(PrimeDecError::RowCount(m));
    }
    if let Some(v) = t.iter().find(|&v| v > g.n()) {
        return Err(GraphError::VertexOutOfRange { v, n: g.n() }.into());
    }
    if !has_cut_point_property(g, t) {
        return Err(PrimeDecError::NotCutSet(t));
    }
    Ok(PrimeComponent {
        t,
        m,
        n: g.n(),
        clique_blocks: g.components_within(g.vertices().difference(t)),
    })
}

/// All minimal primes, in the order of `𝒞(G)`.
pub fn minimal_primes(g: &Graph, m: usize) -> Result<Vec<PrimeComponent>, PrimeDecError> {
    cut_sets(g)?
        .sets
        .iter()
        .map(|&t| prime_component(g, m, t))
        .collect()
}

/// `{A_1 ∪ ... ∪ A_t : A_i ∈ 𝒜_i}`; empty as soon as one family is empty.
pub fn join_collections(families: &[Vec<VertexSet>]) -> Vec<VertexSet> {
    let mut acc: BTreeSet<VertexSet> = BTreeSet::from([VertexSet::EMPTY]);
    for fam in families {
        acc = acc
            .iter()
            .flat_map(|a| fam.iter().map(move |b| a.union(*b)))
            .collect();
        if acc.is_empty() {
            break;
        }
    }
    acc.into_iter().collect()
}

/// `𝒞` of a component, lifted to the labels of the ambient graph.
fn lifted_cut_sets(g: &Graph, comp: VertexSet, offset: usize) -> Result<Vec<VertexSet>, PrimeDecError> {
    let (h, labels) = g.induced_subgraph(comp)?;
    Ok(cut_sets(&h)?
        .sets
        .into_iter()
        .map(|t| VertexSet::from_vertices(t.iter().map(|v| labels[v - 1] + offset)))
        .collect())
}

/// `𝒞(G1 * G2)` for disconnected `G1`, `G2`, assembled from the components'
/// families without enumerating subsets of the join. `G1` keeps labels
/// `1..=n1` and `G2` is shifted by `n1`, as in [`join_product`].
pub fn cut_sets_of_join(g1: &Graph, g2: &Graph) -> Result<CutSetFamily, PrimeDecError> {
    let comps1 = g1.connected_components();
    let comps2 = g2.connected_components();
    if comps1.len() < 2 || comps2.len() < 2 {
        return Err(PrimeDecError::ConnectedFactor);
    }
    let n1 = g1.n();
    let joined = join_product(&[g1.clone(), g2.clone()])?;
    let v1 = VertexSet::full(n1);
    let v2 = joined.vertices().difference(v1);

    let fam1 = comps1
        .iter()
        .map(|&c| lifted_cut_sets(g1, c, 0))
        .collect::<Result<Vec<_>, _>>()?;
    let fam2 = comps2
        .iter()
        .map(|&c| lifted_cut_sets(g2, c, n1))
        .collect::<Result<Vec<_>, _>>()?;

    let side1 = join_collections(&fam1).into_iter().map(|a| a.union(v2));
    let side2 = join_collections(&fam2).into_iter().map(|a| a.union(v1));
    Ok(CutSetFamily::from_sets(joined, side1.chain(side2)))
}

/// `dim S/J_{K_m,G} = max_{T ∈ 𝒞(G)} Σ_i (m + n_i - 1)` over the components
/// of `G[T̄]`. The per-block value `m + n_i - 1` is the dimension of the
/// 2-minor variety of a generic `m × n_i` matrix.
pub fn krull_dimension(g: &Graph, m: usize) -> Result<usize, PrimeDecError> {
    Ok(minimal_primes(g, m)?
        .iter()
        .map(PrimeComponent::dimension)
        .max()
        .unwrap_or(0))
}
