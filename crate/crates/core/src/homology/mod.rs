//! Graded Betti numbers of `S/I` as dimensions of Koszul homology
//! `H_i(x; S/I)_j`, computed block by block over multidegrees with sparse
//! rank computations on standard-monomial bases.

mod degeneration;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::hilbert::standard_monomials;
use crate::poly::{
    gbei_generators, Field, FieldChoice, GroebnerBasis, Monomial, MonomialOrder, PolyError,
    PolyRing, VariableGrid,
};
use crate::primedec::{krull_dimension, PrimeDecError};
use crate::with_field;

pub use degeneration::{regularity as degeneration_regularity, StanleyReisner};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("cutoff reached: beta[{i},{j}] is nonzero on the certification row")]
    CutoffReached { i: usize, j: usize },
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("normal form left the standard monomial basis")]
    NotMultigraded,
    #[error("no tried monomial order gives a squarefree initial ideal")]
    NotSquarefree,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    PrimeDec(#[from] PrimeDecError),
}

/// How an oracle value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Koszul homology of `S/I` in every degree with `j - i <= cutoff`.
    Full,
    /// Local cohomology of `S/in(I)` for a squarefree initial ideal, via
    /// reduced homology of links in its Stanley–Reisner complex. Regularity
    /// and depth of `S/I` and `S/in(I)` agree in that situation.
    SquarefreeDegeneration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub nvars: usize,
    pub cutoff: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    fn new(nvars: usize, cutoff: usize) -> Self {
        BettiTable {
            nvars,
            cutoff,
            entries: BTreeMap::new(),
        }
    }

    fn bump(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), beta)` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `max { j - i : beta_ij != 0 }`; 0 for an empty table.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// `sum_i (-1)^i beta_ij` indexed by `j`: the K-polynomial of `S/I`.
    pub fn alternating_sums(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut k = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.entries {
            k[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        while k.len() > 1 && k.last() == Some(&0) {
            k.pop();
        }
        k
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            v: u64,
        }
        #[derive(Serialize)]
        struct Repr {
            #[serde(rename = "N")]
            n: usize,
            cutoff: usize,
            beta: Vec<Entry>,
        }
        Repr {
            n: self.nvars,
            cutoff: self.cutoff,
            beta: self
                .entries
                .iter()
                .map(|(&(i, j), &v)| Entry { i, j, v })
                .collect(),
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    pub regularity: usize,
    pub proj_dim: usize,
    pub depth: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
}

impl HomologicalSummary {
    /// Auslander–Buchsbaum for depth; Gorenstein as Cohen–Macaulay with last
    /// total Betti number 1.
    pub fn from_table(table: &BettiTable, dim: usize) -> Self {
        let pd = table.projective_dimension();
        let depth = table.nvars - pd;
        let cm = depth == dim;
        HomologicalSummary {
            regularity: table.regularity(),
            proj_dim: pd,
            depth,
            dim,
            cohen_macaulay: cm,
            gorenstein: cm && table.total(pd) == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on enumerated `(wedge, monomial)` pairs.
    pub max_basis: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 200_000_000,
        }
    }
}

/// Multidegree packed one byte per coordinate: rows first, then columns.
type Key = u128;

struct Grading {
    m: usize,
    nvars: usize,
    var_key: Vec<Key>,
}

impl Grading {
    fn new(grid: VariableGrid, multigraded: bool) -> Self {
        let nvars = grid.len();
        let var_key = (0..nvars)
            .map(|k| {
                if multigraded {
                    let (i, j) = grid.position(k);
                    (1u128 << (8 * (i - 1))) | (1u128 << (8 * (grid.m + j - 1)))
                } else {
                    1
                }
            })
            .collect();
        Grading {
            m: grid.m,
            nvars,
            var_key,
        }
    }

    fn key_of(&self, mono: &Monomial) -> Key {
        mono.factors()
            .map(|(k, e)| self.var_key[k] * e as u128)
            .sum()
    }

    fn key_of_mask(&self, mask: u64) -> Key {
        let mut bits = mask;
        let mut key = 0;
        while bits != 0 {
            key += self.var_key[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        key
    }

    fn rows(&self, key: Key) -> Vec<u8> {
        (0..self.m).map(|r| (key >> (8 * r)) as u8).collect()
    }
}

fn is_nonincreasing(v: &[u8]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Number of distinct rearrangements of `v`.
fn orbit_size(v: &[u8]) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_insert(0) += 1;
    }
    counts.values().fold(fact(v.len()), |acc, &c| acc / fact(c))
}

type SparseRow<E> = Vec<(u32, E)>;

fn sub_scaled<F: Field>(field: &F, a: &[(u32, F::Elem)], v: &F::Elem, b: &[(u32, F::Elem)]) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let take_a = y == b.len() || (x < a.len() && a[x].0 < b[y].0);
        let take_b = x == a.len() || (y < b.len() && b[y].0 < a[x].0);
        if take_a {
            out.push(a[x].clone());
            x += 1;
        } else if take_b {
            out.push((b[y].0, field.neg(&field.mul(v, &b[y].1))));
            y += 1;
        } else {
            let c = field.sub(&a[x].1, &field.mul(v, &b[y].1));
            if !field.is_zero(&c) {
                out.push((a[x].0, c));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

/// Rank by row echelon form; pivots are the leading column of each stored
/// row, taken in input order, so the result is deterministic.
pub(crate) fn sparse_rank<F: Field>(field: &F, rows: Vec<SparseRow<F::Elem>>, ncols: usize) -> usize {
    let mut pivots: Vec<Option<SparseRow<F::Elem>>> = vec![None; ncols];
    let mut rank = 0;
    for mut row in rows {
        row.sort_by_key(|e| e.0);
        while let Some((c, v)) = row.first().cloned() {
            match &pivots[c as usize] {
                Some(p) => row = sub_scaled(field, &row, &v, p),
                None => {
                    let inv = field.inv(&v);
                    let normalized: SparseRow<F::Elem> =
                        row.iter().map(|(k, x)| (*k, field.mul(x, &inv))).collect();
                    pivots[c as usize] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Standard monomials with normal forms of `x_k * s` in a dense id space.
struct StdIndex<E> {
    ids: HashMap<Monomial, u32>,
    monos: Vec<Monomial>,
    /// `nf[s][k]`, filled only where the complex needs it.
    nf: Vec<Vec<SparseRow<E>>>,
}

impl<E: Clone + Send + Sync> StdIndex<E> {
    fn new(monos: Vec<Monomial>) -> Self {
        let ids = monos
            .iter()
            .enumerate()
            .map(|(k, m)| (*m, k as u32))
            .collect();
        StdIndex {
            ids,
            nf: vec![Vec::new(); monos.len()],
            monos,
        }
    }

    fn fill_nf<F: Field<Elem = E>>(
        &mut self,
        gb: &GroebnerBasis<F>,
        needs: impl Fn(&Monomial, usize) -> bool + Sync,
    ) -> Result<(), HomologyError> {
        let ring = gb.ring();
        let nvars = ring.nvars();
        let ids = &self.ids;
        let tables: Result<Vec<Vec<SparseRow<E>>>, HomologyError> = self
            .monos
            .par_iter()
            .map(|s| {
                (0..nvars)
                    .map(|k| {
                        if !needs(s, k) {
                            return Ok(Vec::new());
                        }
                        let t = s.times_var(k);
                        let nf = match ids.get(&t) {
                            Some(&id) => return Ok(vec![(id, ring.field.one())]),
                            None => gb.normal_form(&ring.monomial(t)),
                        };
                        nf.terms()
                            .iter()
                            .map(|(mono, c)| {
                                ids.get(mono)
                                    .map(|&id| (id, c.clone()))
                                    .ok_or(HomologyError::NotMultigraded)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        self.nf = tables?;
        Ok(())
    }
}

/// One multidegree block: basis elements `(wedge mask, std id)` per level `i`.
struct Block {
    levels: Vec<Vec<(u64, u32)>>,
}

impl Block {
    fn new(n: usize) -> Self {
        Block {
            levels: vec![Vec::new(); n + 1],
        }
    }

    /// Rank of `d_i : level i -> level i - 1`.
    fn rank<F: Field>(&self, field: &F, i: usize, idx: &StdIndex<F::Elem>) -> usize {
        if i == 0 || self.levels[i].is_empty() || self.levels[i - 1].is_empty() {
            return 0;
        }
        let target: HashMap<(u64, u32), u32> = self.levels[i - 1]
            .iter()
            .enumerate()
            .map(|(k, &e)| (e, k as u32))
            .collect();
        let rows = self.levels[i]
            .iter()
            .map(|&(mask, sid)| {
                let mut row = Vec::new();
                let mut bits = mask;
                let mut pos = 0;
                while bits != 0 {
                    let f = bits.trailing_zeros() as usize;
                    let rest = mask & !(1u64 << f);
                    let negate = pos % 2 == 1;
                    for (tid, c) in &idx.nf[sid as usize][f] {
                        let col = *target
                            .get(&(rest, *tid))
                            .expect("Koszul image stays inside its multidegree block");
                        row.push((col, if negate { field.neg(c) } else { c.clone() }));
                    }
                    bits &= bits - 1;
                    pos += 1;
                }
                row
            })
            .collect();
        sparse_rank(field, rows, self.levels[i - 1].len())
    }
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if k == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

fn check_grading<F: Field>(gb: &GroebnerBasis<F>) -> Result<bool, HomologyError> {
    let ring = gb.ring();
    let grid = ring.grid;
    if ring.aux || grid.m + grid.n > 16 {
        return Ok(false);
    }
    let fine = Grading::new(grid, true);
    let coarse = Grading::new(grid, false);
    let mut multigraded = true;
    for p in gb.polys() {
        let lead = p.lead().expect("nonzero");
        if p.monomials().any(|m| coarse.key_of(m) != coarse.key_of(lead)) {
            return Err(HomologyError::NotHomogeneous);
        }
        if p.monomials().any(|m| fine.key_of(m) != fine.key_of(lead)) {
            multigraded = false;
        }
    }
    Ok(multigraded)
}

/// The ideal is stable under permuting rows: the swap `(1 2)` and the cycle
/// `(1 2 ... m)` generate the symmetric group.
fn row_symmetric<F: Field>(gb: &GroebnerBasis<F>) -> bool {
    let ring = gb.ring();
    let grid = ring.grid;
    if grid.m < 2 {
        return false;
    }
    let perm_of = |sigma: &dyn Fn(usize) -> usize| -> Vec<usize> {
        (0..grid.len())
            .map(|k| {
                let (i, j) = grid.position(k);
                grid.index(sigma(i), j)
            })
            .collect()
    };
    let swap = perm_of(&|i| match i {
        1 => 2,
        2 => 1,
        other => other,
    });
    let cycle = perm_of(&|i| i % grid.m + 1);
    [swap, cycle].iter().all(|perm| {
        gb.polys().iter().all(|p| {
            let moved = ring.from_terms(
                p.terms()
                    .iter()
                    .map(|(mono, c)| (mono.permuted(perm), c.clone()))
                    .collect(),
            );
            gb.contains(&moved)
        })
    })
}

/// Graded Betti numbers of `S/I` from the reduced Gröbner basis of `I`.
///
/// `cutoff` must be at least `reg(S/I) + 1`; the row `j - i = cutoff` is
/// computed and must vanish, otherwise `CutoffReached` is returned.
pub fn betti_table<F: Field>(
    gb: &GroebnerBasis<F>,
    cutoff: usize,
    limits: Limits,
) -> Result<BettiTable, HomologyError> {
    let ring = gb.ring();
    let nvars = ring.nvars();
    let mut table = BettiTable::new(nvars, cutoff);
    if gb.polys().iter().any(|p| p.lead().is_some_and(Monomial::is_one)) {
        return Ok(table);
    }
    if gb.is_empty() {
        table.bump(0, 0, 1);
        return Ok(table);
    }
    let multigraded = check_grading(gb)?;
    let symmetric = multigraded && row_symmetric(gb);
    let grading = Grading::new(ring.grid, multigraded);
    for (i, j, v) in full_blocks(gb, &grading, symmetric, cutoff, limits)? {
        table.bump(i, j, v);
    }
    if let Some(&(i, j)) = table.entries.keys().find(|&&(i, j)| j - i >= cutoff) {
        return Err(HomologyError::CutoffReached { i, j });
    }
    Ok(table)
}

fn solve_block<F: Field>(
    field: &F,
    block: &Block,
    idx: &StdIndex<F::Elem>,
    j: usize,
    wanted: impl Fn(usize) -> bool,
    weight: u64,
) -> Vec<(usize, usize, u64)> {
    let top = block.levels.len() - 1;
    let mut ranks = vec![None; top + 2];
    let rank = |i: usize, ranks: &mut Vec<Option<usize>>| -> usize {
        if i > top {
            return 0;
        }
        *ranks[i].get_or_insert_with(|| block.rank(field, i, idx))
    };
    let mut out = Vec::new();
    for i in 0..=top {
        if block.levels[i].is_empty() || !wanted(i) {
            continue;
        }
        let h = block.levels[i].len() - rank(i, &mut ranks) - rank(i + 1, &mut ranks);
        if h > 0 {
            out.push((i, j, h as u64 * weight));
        }
    }
    out
}

fn full_blocks<F: Field>(
    gb: &GroebnerBasis<F>,
    grading: &Grading,
    symmetric: bool,
    cutoff: usize,
    limits: Limits,
) -> Result<Vec<(usize, usize, u64)>, HomologyError> {
    let ring = gb.ring();
    let nvars = grading.nvars;
    if nvars >= 40 {
        return Err(HomologyError::ResourceLimit(format!(
            "full Koszul complex on {nvars} variables"
        )));
    }
    let by_degree = standard_monomials(&gb.leading_monomials(), nvars, cutoff + 1);
    let total_std: u64 = by_degree.iter().map(|v| v.len() as u64).sum();
    let work = total_std.saturating_mul(1u64 << nvars);
    if work > limits.max_basis {
        return Err(HomologyError::ResourceLimit(format!(
            "{work} wedge-monomial pairs exceed the cap of {}",
            limits.max_basis
        )));
    }
    let offsets: Vec<u32> = by_degree
        .iter()
        .scan(0u32, |acc, v| {
            let o = *acc;
            *acc += v.len() as u32;
            Some(o)
        })
        .collect();
    let mut idx = StdIndex::new(by_degree.iter().flatten().copied().collect());
    idx.fill_nf(gb, |s, _| (s.degree() as usize) <= cutoff)?;
    let std_keys: Vec<Key> = idx.monos.iter().map(|s| grading.key_of(s)).collect();

    let mut out = Vec::new();
    for j in 0..=nvars + cutoff {
        let mut blocks: HashMap<Key, Block> = HashMap::new();
        let lo = j.saturating_sub(cutoff + 1);
        for i in lo..=j.min(nvars) {
            let r = j - i;
            for mask in subsets_of_size(nvars, i) {
                let fk = grading.key_of_mask(mask);
                let start = offsets[r] as usize;
                for sid in start..start + by_degree[r].len() {
                    let key = fk + std_keys[sid];
                    if symmetric && !is_nonincreasing(&grading.rows(key)) {
                        continue;
                    }
                    blocks
                        .entry(key)
                        .or_insert_with(|| Block::new(nvars))
                        .levels[i]
                        .push((mask, sid as u32));
                }
            }
        }
        let mut keyed: Vec<(Key, Block)> = blocks.into_iter().collect();
        keyed.sort_by_key(|(k, _)| *k);
        let part: Vec<(usize, usize, u64)> = keyed
            .par_iter()
            .flat_map_iter(|(key, block)| {
                let weight = if symmetric { orbit_size(&grading.rows(*key)) } else { 1 };
                solve_block(&ring.field, block, &idx, j, |i| j - i <= cutoff, weight)
            })
            .collect();
        out.extend(part);
    }
    Ok(out)
}

/// Strategy selection for the regularity oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyChoice {
    /// `Full` up to `full_mode_max_vars` variables, degeneration above.
    Auto,
    Full,
    SquarefreeDegeneration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub field: FieldChoice,
    pub max_vars: usize,
    pub full_mode_max_vars: usize,
    pub max_degree: usize,
    pub strategy: StrategyChoice,
    pub limits: Limits,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            field: FieldChoice::default(),
            max_vars: 36,
            full_mode_max_vars: 12,
            max_degree: 16,
            strategy: StrategyChoice::Auto,
            limits: Limits::default(),
        }
    }
}

impl OracleConfig {
    fn resolve(&self, nvars: usize) -> Strategy {
        match self.strategy {
            StrategyChoice::Full => Strategy::Full,
            StrategyChoice::SquarefreeDegeneration => Strategy::SquarefreeDegeneration,
            StrategyChoice::Auto if nvars <= self.full_mode_max_vars => Strategy::Full,
            StrategyChoice::Auto => Strategy::SquarefreeDegeneration,
        }
    }
}

fn gbei_basis_in<F: Field>(field: F, g: &Graph, m: usize, order: MonomialOrder) -> Result<GroebnerBasis<F>, PolyError> {
    let ring = PolyRing::new(field, VariableGrid::new(m, g.n())?, order);
    gbei_generators(&ring, g)?.groebner_basis()
}

/// Reduced Gröbner basis of `J_{K_m,G}` under degrevlex.
pub fn gbei_basis<F: Field>(field: F, g: &Graph, m: usize) -> Result<GroebnerBasis<F>, PolyError> {
    gbei_basis_in(field, g, m, MonomialOrder::DegRevLex)
}

/// Upper bound on `reg(S/J_{K_m,G})`: `n_i - 1` summed over components.
pub fn certified_upper_bound(g: &Graph) -> usize {
    g.connected_components().iter().map(|c| c.len() - 1).sum()
}

fn check_size(g: &Graph, m: usize, cfg: &OracleConfig) -> Result<usize, HomologyError> {
    if m < 2 {
        return Err(PolyError::TooFewRows(m).into());
    }
    let nvars = m * g.n();
    if nvars > cfg.max_vars {
        return Err(HomologyError::ResourceLimit(format!(
            "{nvars} variables exceed the oracle cap of {}",
            cfg.max_vars
        )));
    }
    let cutoff = certified_upper_bound(g) + 1;
    if cutoff > cfg.max_degree {
        return Err(HomologyError::ResourceLimit(format!(
            "degree cutoff {cutoff} exceeds the cap of {}",
            cfg.max_degree
        )));
    }
    Ok(cutoff)
}

/// Betti table of `S/J_{K_m,G}` with cutoff = certified bound + 1.
pub fn gbei_betti_table(g: &Graph, m: usize, cfg: &OracleConfig) -> Result<BettiTable, HomologyError> {
    let cutoff = check_size(g, m, cfg)?;
    with_field!(cfg.field, |f| {
        let gb = gbei_basis(f, g, m)?;
        betti_table(&gb, cutoff, cfg.limits)
    })
}

/// Oracle regularity together with the method that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleRegularity {
    pub value: usize,
    pub strategy: Strategy,
}

pub fn regularity_oracle(g: &Graph, m: usize, cfg: &OracleConfig) -> Result<OracleRegularity, HomologyError> {
    let cutoff = check_size(g, m, cfg)?;
    let strategy = cfg.resolve(m * g.n());
    let value = match strategy {
        Strategy::Full => gbei_betti_table(g, m, cfg)?.regularity(),
        Strategy::SquarefreeDegeneration if g.edge_count() == 0 => 0,
        Strategy::SquarefreeDegeneration => {
            with_field!(cfg.field, |f| degenerate_regularity(f, g, m, cutoff - 1))?
        }
    };
    Ok(OracleRegularity { value, strategy })
}

fn degenerate_regularity<F: Field>(f: F, g: &Graph, m: usize, bound: usize) -> Result<usize, HomologyError> {
    let nvars = m * g.n();
    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let gb = gbei_basis_in(f.clone(), g, m, order)?;
        match StanleyReisner::from_leads(&gb.leading_monomials(), nvars) {
            Ok(sr) => return Ok(degeneration::regularity(&f, &sr, bound)),
            Err(HomologyError::NotSquarefree) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(HomologyError::NotSquarefree)
}

/// Full Betti table summary; `dim` comes from the cut-set decomposition.
pub fn homological_summary(g: &Graph, m: usize, cfg: &OracleConfig) -> Result<HomologicalSummary, HomologyError> {
    let table = gbei_betti_table(g, m, cfg)?;
    let dim = krull_dimension(g, m)?;
    Ok(HomologicalSummary::from_table(&table, dim))
}

/// K-polynomial of `S/J_{K_m,G}` from the initial ideal.
pub fn gbei_k_polynomial(g: &Graph, m: usize, field: FieldChoice) -> Result<Vec<i64>, PolyError> {
    with_field!(field, |f| Ok(gbei_basis(f, g, m)?.k_polynomial()))
}
