//! Exhaustive small-instance checks: closed forms, classifiers and the
//! decomposition against the exact oracle, plus the algebraic property
//! checks the oracle itself relies on.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::cograph::{cotree, has_induced_p4, CographError};
use crate::graph::{
    canonical_form, disjoint_union, isomorphism_classes, join_product, make_named, all_labeled_graphs,
    write_graph6, Graph, Named, VertexSet, MAX_ISO_VERTICES,
};
use crate::homology::{
    gbei_basis, gbei_betti_table, gbei_k_polynomial, homological_summary, regularity_oracle, HomologicalSummary,
    HomologyError, OracleConfig,
};
use crate::poly::hilbert::hilbert_from_k;
use crate::poly::{
    gbei_generators, ideal_equal, ideal_intersection, prime_generators, Field, FieldChoice, Ideal, Monomial,
    MonomialOrder, PolyRing, PrimeField, VariableGrid,
};
use crate::primedec::{cut_sets, cut_sets_of_join, minimal_primes};
use crate::reg::{
    classify_cm_reg2, classify_extremal_gorenstein, classify_reg2, construct_with_regularity, default_rows,
    reg, reg_formula, Mode,
};
use crate::with_field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; expected one of {list}", list = Suite::names().join(", "))]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Reproductions,
    Decomposition,
    JoinCutsets,
    P4freeEquivalence,
    Reg2Classifier,
    CmGorenstein,
    JoinBounds,
    Constructor,
    Properties,
    Monotonicity,
    Agreement,
    Characteristic,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Reproductions,
        Suite::Decomposition,
        Suite::JoinCutsets,
        Suite::P4freeEquivalence,
        Suite::Reg2Classifier,
        Suite::CmGorenstein,
        Suite::JoinBounds,
        Suite::Constructor,
        Suite::Properties,
        Suite::Monotonicity,
        Suite::Agreement,
        Suite::Characteristic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Reproductions => "reproductions",
            Suite::Decomposition => "decomposition",
            Suite::JoinCutsets => "join-cutsets",
            Suite::P4freeEquivalence => "p4free-equivalence",
            Suite::Reg2Classifier => "reg2-classifier",
            Suite::CmGorenstein => "cm-gorenstein",
            Suite::JoinBounds => "join-bounds",
            Suite::Constructor => "constructor",
            Suite::Properties => "properties",
            Suite::Monotonicity => "monotonicity",
            Suite::Agreement => "agreement",
            Suite::Characteristic => "characteristic",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Suite::ALL.iter().map(|s| s.name()).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
    /// The instance hit a resource cap rather than a wrong answer.
    pub resource_limit: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub millis: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn resource_limited(&self) -> bool {
        self.failures.iter().any(|f| f.resource_limit)
    }
}

/// `"graph6 m=3"` style label.
fn label(g: &Graph, m: usize) -> String {
    format!("{} m={m}", write_graph6(g))
}

fn named(f: Named) -> Graph {
    make_named(&f).expect("fixed family")
}

fn k2_k2() -> Graph {
    disjoint_union(&[named(Named::Complete(2)), named(Named::Complete(2))]).expect("2K2")
}

/// `K1 * (K1 ⊔ K2)`: a triangle with a pendant edge.
pub fn triangle_whisker() -> Graph {
    let inner = disjoint_union(&[named(Named::Empty(1)), named(Named::Complete(2))]).expect("K1 + K2");
    join_product(&[named(Named::Empty(1)), inner]).expect("join")
}

/// `(name, G, m, reg)` for the published values.
pub fn reproduction_instances() -> Vec<(String, Graph, usize, usize)> {
    let mut out = vec![
        ("K3".to_string(), named(Named::Complete(3)), 3, 2),
        ("P3".into(), named(Named::Path(3)), 3, 2),
        ("P3".into(), named(Named::Path(3)), 4, 2),
        ("P4".into(), named(Named::Path(4)), 3, 3),
        ("K_{1,3}".into(), named(Named::Star(3)), 3, 3),
        ("K1*(K1+K2)".into(), triangle_whisker(), 3, 3),
        ("K2+K2".into(), k2_k2(), 3, 2),
    ];
    for m in 2..=4 {
        out.push(("K2".into(), named(Named::Complete(2)), m, 1));
    }
    out
}

/// Isomorphism classes on `3..=4` vertices without isolated vertices at
/// `m = 3`, then `n = 3` at `m = 4`.
pub fn reg2_instances() -> Vec<(Graph, usize)> {
    let clean = |n: usize| isomorphism_classes(n).into_iter().filter(|g| g.isolated_vertices().is_empty());
    let mut out: Vec<(Graph, usize)> = (3..=4).flat_map(clean).map(|g| (g, 3)).collect();
    out.extend(clean(3).map(|g| (g, 4)));
    out
}

/// Every isomorphism class on `1..=4` vertices with `m ∈ {2, 3}`.
pub fn decomposition_instances() -> Vec<(Graph, usize)> {
    let classes: Vec<Graph> = (1..=4).flat_map(isomorphism_classes).collect();
    [2, 3]
        .into_iter()
        .flat_map(|m| classes.iter().map(move |g| (g.clone(), m)))
        .collect()
}

/// Unordered pairs of isomorphism classes with `|V1| + |V2| <= max_total`.
pub fn join_pairs(max_total: usize) -> Vec<(Graph, Graph)> {
    let classes: Vec<Vec<Graph>> = (0..max_total).map(|n| if n == 0 { Vec::new() } else { isomorphism_classes(n) }).collect();
    let mut out = Vec::new();
    for n1 in 1..max_total {
        for n2 in n1..=max_total - n1 {
            for (a, g1) in classes[n1].iter().enumerate() {
                for (b, g2) in classes[n2].iter().enumerate() {
                    if n1 == n2 && b < a {
                        continue;
                    }
                    out.push((g1.clone(), g2.clone()));
                }
            }
        }
    }
    out
}

/// Ordered pairs of disconnected classes with `|V1| + |V2| <= max_total`.
pub fn disconnected_pairs(max_total: usize) -> Vec<(Graph, Graph)> {
    let classes: Vec<Vec<Graph>> = (0..max_total)
        .map(|n| match n {
            0 | 1 => Vec::new(),
            _ => isomorphism_classes(n).into_iter().filter(|g| !g.is_connected()).collect(),
        })
        .collect();
    let mut out = Vec::new();
    for n1 in 2..max_total {
        for n2 in 2..=max_total - n1 {
            for g1 in &classes[n1] {
                for g2 in &classes[n2] {
                    out.push((g1.clone(), g2.clone()));
                }
            }
        }
    }
    out
}

/// Joins from [`join_pairs`] with every `3 <= m < |V1| + |V2|`.
pub fn join_instances(max_total: usize) -> Vec<(Graph, Graph, usize)> {
    join_pairs(max_total)
        .into_iter()
        .flat_map(|(g1, g2)| {
            let n = g1.n() + g2.n();
            (3..n).map(move |m| (g1.clone(), g2.clone(), m))
        })
        .collect()
}

/// Runs suites against one oracle configuration, memoizing oracle calls
/// by characteristic, canonical graph and `m`.
pub struct Verifier {
    cfg: OracleConfig,
    regs: HashMap<(u64, String, usize), usize>,
    summaries: HashMap<(String, usize), HomologicalSummary>,
}

fn key(g: &Graph) -> String {
    if g.n() <= MAX_ISO_VERTICES {
        write_graph6(&canonical_form(g).expect("n checked"))
    } else {
        write_graph6(g)
    }
}

struct Run {
    report: SuiteReport,
}

impl Run {
    fn check(&mut self, instance: impl FnOnce() -> String, outcome: Result<Option<String>, String>) {
        self.report.checked += 1;
        match outcome {
            Ok(None) => {}
            Ok(Some(detail)) => self.report.failures.push(Failure {
                instance: instance(),
                detail,
                resource_limit: false,
            }),
            Err(detail) => self.report.failures.push(Failure {
                instance: instance(),
                resource_limit: detail.starts_with(RESOURCE),
                detail,
            }),
        }
    }
}

pub const CHARACTERISTIC_FULL_VARS: usize = 9;

const RESOURCE: &str = "resource limit: ";

fn describe(e: impl fmt::Display, resource: bool) -> String {
    if resource {
        format!("{RESOURCE}{e}")
    } else {
        e.to_string()
    }
}

fn homology_err(e: HomologyError) -> String {
    let resource = matches!(e, HomologyError::ResourceLimit(_));
    describe(e, resource)
}

fn reg_err(e: crate::reg::RegError) -> String {
    let resource = matches!(e, crate::reg::RegError::Oracle(HomologyError::ResourceLimit(_)));
    describe(e, resource)
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

impl Verifier {
    pub fn new(cfg: OracleConfig) -> Self {
        Verifier {
            cfg,
            regs: HashMap::new(),
            summaries: HashMap::new(),
        }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    /// Oracle regularity under the verifier's field.
    pub fn oracle_reg(&mut self, g: &Graph, m: usize) -> Result<usize, HomologyError> {
        let cfg = self.cfg;
        self.oracle_reg_in(g, m, &cfg)
    }

    fn oracle_reg_in(&mut self, g: &Graph, m: usize, cfg: &OracleConfig) -> Result<usize, HomologyError> {
        let k = (cfg.field.characteristic(), key(g), m);
        if let Some(&v) = self.regs.get(&k) {
            return Ok(v);
        }
        let v = regularity_oracle(g, m, cfg)?.value;
        self.regs.insert(k, v);
        Ok(v)
    }

    pub fn summary(&mut self, g: &Graph, m: usize) -> Result<HomologicalSummary, HomologyError> {
        let k = (key(g), m);
        if let Some(s) = self.summaries.get(&k) {
            return Ok(*s);
        }
        let s = homological_summary(g, m, &self.cfg)?;
        self.summaries.insert(k.clone(), s);
        self.regs.insert((self.cfg.field.characteristic(), k.0, m), s.regularity);
        Ok(s)
    }

    pub fn run(&mut self, suite: Suite) -> SuiteReport {
        let start = Instant::now();
        let mut run = Run {
            report: SuiteReport {
                suite,
                checked: 0,
                failures: Vec::new(),
                notes: Vec::new(),
                millis: 0,
            },
        };
        match suite {
            Suite::Reproductions => self.reproductions(&mut run),
            Suite::Decomposition => self.decomposition(&mut run),
            Suite::JoinCutsets => join_cutsets(&mut run),
            Suite::P4freeEquivalence => p4free(&mut run),
            Suite::Reg2Classifier => self.reg2_classifier(&mut run),
            Suite::CmGorenstein => self.cm_gorenstein(&mut run),
            Suite::JoinBounds => self.join_bounds(&mut run),
            Suite::Constructor => self.constructor(&mut run),
            Suite::Properties => self.properties(&mut run),
            Suite::Monotonicity => self.monotonicity(&mut run),
            Suite::Agreement => self.agreement(&mut run),
            Suite::Characteristic => self.characteristic(&mut run),
        }
        run.report.millis = start.elapsed().as_millis();
        run.report
    }

    fn reproductions(&mut self, run: &mut Run) {
        for (name, g, m, want) in reproduction_instances() {
            let outcome = reg(&g, m, Mode::Both, &self.cfg).map_err(reg_err).map(|r| {
                expect(r.value == Some(want), || format!("expected {want}, got {:?}", r.value))
            });
            run.check(|| format!("{name} m={m}"), outcome);
        }
    }

    fn decomposition(&mut self, run: &mut Run) {
        let field = self.cfg.field;
        for (g, m) in decomposition_instances() {
            let outcome = with_field!(field, |f| decomposition_check(f, &g, m));
            run.check(|| label(&g, m), outcome);
        }
    }

    fn reg2_classifier(&mut self, run: &mut Run) {
        for (g, m) in reg2_instances() {
            let outcome = (|| {
                let c = classify_reg2(&g, m).map_err(reg_err)?;
                let r = self.oracle_reg(&g, m).map_err(homology_err)?;
                Ok(expect(c.reg2 == (r == 2), || {
                    format!("classifier says {}, oracle regularity {r}", c.reg2)
                }))
            })();
            run.check(|| label(&g, m), outcome);
        }
    }

    fn cm_gorenstein(&mut self, run: &mut Run) {
        struct Want {
            name: &'static str,
            g: Graph,
            m: usize,
            dim_depth: Option<(usize, usize)>,
            cm: Option<bool>,
            gorenstein: Option<bool>,
        }
        let wants = [
            Want { name: "K3", g: named(Named::Complete(3)), m: 3, dim_depth: Some((5, 5)), cm: Some(true), gorenstein: Some(true) },
            Want { name: "P3", g: named(Named::Path(3)), m: 3, dim_depth: Some((6, 5)), cm: Some(false), gorenstein: Some(false) },
            Want { name: "K2+K2", g: k2_k2(), m: 3, dim_depth: None, cm: Some(true), gorenstein: Some(false) },
            Want { name: "K3", g: named(Named::Complete(3)), m: 4, dim_depth: None, cm: None, gorenstein: Some(false) },
        ];
        for w in wants {
            let outcome = self.summary(&w.g, w.m).map_err(homology_err).map(|s| {
                let mut bad = Vec::new();
                if let Some((dim, depth)) = w.dim_depth {
                    if (s.dim, s.depth) != (dim, depth) {
                        bad.push(format!("dim/depth {}/{} != {dim}/{depth}", s.dim, s.depth));
                    }
                }
                if w.cm.is_some_and(|cm| cm != s.cohen_macaulay) {
                    bad.push(format!("cohen_macaulay = {}", s.cohen_macaulay));
                }
                if w.gorenstein.is_some_and(|gor| gor != s.gorenstein) {
                    bad.push(format!("gorenstein = {}", s.gorenstein));
                }
                (!bad.is_empty()).then(|| bad.join("; "))
            });
            run.check(|| format!("{} m={}", w.name, w.m), outcome);
        }
        // classifiers against the summaries over the regularity-2 instance set
        for (g, m) in reg2_instances() {
            let outcome = (|| {
                let s = self.summary(&g, m).map_err(homology_err)?;
                let cm = classify_cm_reg2(&g, m).map_err(reg_err)?;
                let gor = classify_extremal_gorenstein(&g, m).map_err(reg_err)?;
                let mut bad = Vec::new();
                if s.depth > s.dim || (s.gorenstein && !s.cohen_macaulay) {
                    bad.push(format!("inconsistent summary {s:?}"));
                }
                if cm.cm_reg2 != (s.cohen_macaulay && s.regularity == 2) {
                    bad.push(format!("cm_reg2 = {} but summary {s:?}", cm.cm_reg2));
                }
                if gor.extremal_gorenstein != (s.gorenstein && s.regularity == 2) {
                    bad.push(format!("extremal_gorenstein = {} but summary {s:?}", gor.extremal_gorenstein));
                }
                Ok((!bad.is_empty()).then(|| bad.join("; ")))
            })();
            run.check(|| label(&g, m), outcome);
        }
    }

    fn join_bounds(&mut self, run: &mut Run) {
        for (g1, g2, m) in join_instances(5) {
            let outcome = (|| {
                let g = join_product(&[g1.clone(), g2.clone()]).map_err(|e| e.to_string())?;
                let r = self.oracle_reg(&g, m).map_err(homology_err)?;
                let r1 = self.oracle_reg(&g1, m).map_err(homology_err)?;
                let r2 = self.oracle_reg(&g2, m).map_err(homology_err)?;
                let allowed = [r1, r2, m - 1, m];
                Ok(expect(allowed.contains(&r), || format!("reg {r} not in {allowed:?}")))
            })();
            run.check(|| format!("{} * {} m={m}", write_graph6(&g1), write_graph6(&g2)), outcome);
        }
    }

    fn constructor(&mut self, run: &mut Run) {
        for n in 2..=6 {
            for r in 1..n {
                if r == 1 && n != 2 {
                    run.report
                        .notes
                        .push(format!("n={n} r=1 infeasible: regularity 1 forces G = K2"));
                    continue;
                }
                let m = default_rows(n, r);
                let outcome = (|| {
                    let c = construct_with_regularity(n, r, m).map_err(reg_err)?;
                    let g = &c.graph;
                    if g.n() != n || !g.is_connected() {
                        return Ok(Some(format!("{} is not a connected graph on {n} vertices", c.description)));
                    }
                    let got = if n <= 5 {
                        self.oracle_reg(g, m).map_err(homology_err)?
                    } else {
                        match reg_formula(g, m).map_err(reg_err)?.value {
                            Some(v) => v,
                            None => return Ok(Some(format!("no formula value for {}", c.description))),
                        }
                    };
                    Ok(expect(got == r, || format!("{} has regularity {got}", c.description)))
                })();
                run.check(|| format!("n={n} r={r} m={m}"), outcome);
            }
        }
    }

    fn properties(&mut self, run: &mut Run) {
        let field = self.cfg.field;
        let mut seen = BTreeSet::new();
        let instances: Vec<(Graph, usize)> = decomposition_instances()
            .into_iter()
            .chain(reg2_instances())
            .filter(|(g, m)| seen.insert((key(g), *m)))
            .collect();
        for (g, m) in instances {
            let outcome = with_field!(field, |f| groebner_properties(f, &g, m));
            run.check(|| format!("groebner {}", label(&g, m)), outcome);
            if m * g.n() <= self.cfg.full_mode_max_vars {
                let outcome = hilbert_betti(&g, m, &self.cfg);
                run.check(|| format!("hilbert/betti {}", label(&g, m)), outcome);
            }
        }
    }

    /// Graphs whose induced subgraphs are compared: the regularity-2
    /// set, the reproductions and the connected joins on at most 5 vertices.
    fn monotonicity_set(&self) -> Vec<(Graph, usize)> {
        let mut seen = BTreeSet::new();
        let joins = join_instances(5)
            .into_iter()
            .filter_map(|(g1, g2, m)| join_product(&[g1, g2]).ok().map(|g| (g, m)));
        reg2_instances()
            .into_iter()
            .chain(reproduction_instances().into_iter().map(|(_, g, m, _)| (g, m)))
            .chain(joins)
            .filter(|(g, m)| seen.insert((key(g), *m)))
            .collect()
    }

    fn monotonicity(&mut self, run: &mut Run) {
        for (g, m) in self.monotonicity_set() {
            let outcome = (|| {
                let r = self.oracle_reg(&g, m).map_err(homology_err)?;
                let mut subs = BTreeSet::new();
                let full = g.vertices().bits();
                for bits in 1..full {
                    let w = VertexSet::from_bits(bits);
                    if !w.is_subset(g.vertices()) {
                        continue;
                    }
                    let (h, _) = g.induced_subgraph(w).map_err(|e| e.to_string())?;
                    if subs.insert(key(&h)) {
                        let rh = self.oracle_reg(&h, m).map_err(homology_err)?;
                        if rh > r {
                            return Ok(Some(format!("induced {} has regularity {rh} > {r}", write_graph6(&h))));
                        }
                    }
                }
                Ok(None)
            })();
            run.check(|| label(&g, m), outcome);
        }
    }

    fn agreement(&mut self, run: &mut Run) {
        for (g, m) in self.monotonicity_set() {
            if g.edge_count() == 0 {
                continue;
            }
            let outcome = reg(&g, m, Mode::Both, &self.cfg).map_err(reg_err).map(|_| None);
            run.check(|| label(&g, m), outcome);
        }
    }

    /// Regularity over `F_2`, the default prime and the rationals. Koszul
    /// ranks over the rationals are slow, so instances above
    /// [`CHARACTERISTIC_FULL_VARS`] variables go through the degeneration.
    fn characteristic(&mut self, run: &mut Run) {
        run.report.notes.push(format!(
            "full Koszul mode up to {CHARACTERISTIC_FULL_VARS} variables, squarefree degeneration above"
        ));
        let fields = [
            FieldChoice::Prime(PrimeField::new(2).expect("prime")),
            FieldChoice::Prime(PrimeField::default()),
            FieldChoice::Rational,
        ];
        let mut seen = BTreeSet::new();
        let instances: Vec<(Graph, usize)> = reg2_instances()
            .into_iter()
            .chain(reproduction_instances().into_iter().map(|(_, g, m, _)| (g, m)))
            .filter(|(g, m)| seen.insert((key(g), *m)))
            .collect();
        for (g, m) in instances {
            let outcome = (|| {
                let mut values = Vec::new();
                for field in fields {
                    let cfg = OracleConfig {
                        field,
                        full_mode_max_vars: self.cfg.full_mode_max_vars.min(CHARACTERISTIC_FULL_VARS),
                        ..self.cfg
                    };
                    values.push(self.oracle_reg_in(&g, m, &cfg).map_err(homology_err)?);
                }
                Ok(expect(values.windows(2).all(|w| w[0] == w[1]), || {
                    format!("regularity depends on the field: F_2, F_p, Q give {values:?}")
                }))
            })();
            run.check(|| label(&g, m), outcome);
        }
    }
}

/// `J = ∩ P_T` and no `P_T` can be dropped.
fn decomposition_check<F: Field>(field: F, g: &Graph, m: usize) -> Result<Option<String>, String> {
    let ring = PolyRing::new(field, VariableGrid::new(m, g.n()).map_err(|e| e.to_string())?, MonomialOrder::DegRevLex);
    let j = gbei_generators(&ring, g).map_err(|e| e.to_string())?;
    let primes = minimal_primes(g, m).map_err(|e| e.to_string())?;
    let ideals = primes
        .iter()
        .map(|p| prime_generators(&ring, p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let meet = |parts: &[&Ideal<F>]| -> Result<Option<Ideal<F>>, String> {
        let mut it = parts.iter();
        let Some(first) = it.next() else { return Ok(None) };
        let mut acc = (*first).clone();
        for p in it {
            acc = ideal_intersection(&acc, p).map_err(|e| e.to_string())?;
        }
        Ok(Some(acc))
    };
    let all: Vec<&Ideal<F>> = ideals.iter().collect();
    let whole = meet(&all)?.expect("the family contains P_∅");
    if !ideal_equal(&j, &whole).map_err(|e| e.to_string())? {
        return Ok(Some("J differs from the intersection of the P_T".into()));
    }
    if ideals.len() > 1 {
        for (k, p) in primes.iter().enumerate() {
            let rest: Vec<&Ideal<F>> = ideals.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, x)| x).collect();
            let others = meet(&rest)?.expect("at least one other prime");
            if ideal_equal(&j, &others).map_err(|e| e.to_string())? {
                return Ok(Some(format!("P_T for T = {} is redundant", p.t)));
            }
        }
    }
    Ok(None)
}

/// S-pairs reduce to zero, generators reduce to zero, and normal forms are
/// idempotent with `f - NF(f) ∈ J`.
fn groebner_properties<F: Field>(field: F, g: &Graph, m: usize) -> Result<Option<String>, String> {
    let gb = gbei_basis(field, g, m).map_err(|e| e.to_string())?;
    if !gb.is_groebner() {
        return Ok(Some("an S-pair does not reduce to zero".into()));
    }
    let ring = gb.ring().clone();
    let gens = gbei_generators(&ring, g).map_err(|e| e.to_string())?;
    if !gens.generators().iter().all(|p| gb.contains(p)) {
        return Ok(Some("a generator has a nonzero normal form".into()));
    }
    let n = ring.nvars();
    let one = ring.field.one();
    for a in 0..n {
        for b in a..n {
            let (xa, xb) = (Monomial::var(a), Monomial::var(b));
            let mut f = ring.from_terms(vec![(xa.mul(&xb), one.clone()), (xa, one.clone())]);
            if let Some(h) = gens.generators().first() {
                f = ring.add(&f, &ring.mul_term(h, &xb, &one));
            }
            let nf = gb.normal_form(&f);
            if gb.normal_form(&nf) != nf {
                return Ok(Some(format!("normal form of {} is not idempotent", ring.format(&f))));
            }
            if !gb.contains(&ring.sub(&f, &nf)) {
                return Ok(Some(format!("f - NF(f) not in J for f = {}", ring.format(&f))));
            }
        }
    }
    Ok(None)
}

/// `Σ_i (-1)^i β_{i,j}` equals the K-polynomial, and both give the same
/// Hilbert function.
fn hilbert_betti(g: &Graph, m: usize, cfg: &OracleConfig) -> Result<Option<String>, String> {
    let table = gbei_betti_table(g, m, cfg).map_err(homology_err)?;
    let mut k = gbei_k_polynomial(g, m, cfg.field).map_err(|e| e.to_string())?;
    while k.len() > 1 && k.last() == Some(&0) {
        k.pop();
    }
    let sums = table.alternating_sums();
    if sums != k {
        return Ok(Some(format!("alternating sums {sums:?} != K-polynomial {k:?}")));
    }
    let nvars = m * g.n();
    let hf = with_field!(cfg.field, |f| {
        let gb = gbei_basis(f, g, m).map_err(|e| e.to_string())?;
        (0..=6).map(|d| gb.hilbert_function(d)).collect::<Vec<_>>()
    });
    for (d, &h) in hf.iter().enumerate() {
        if hilbert_from_k(&sums, nvars, d) != h as i128 {
            return Ok(Some(format!("Hilbert function differs in degree {d}")));
        }
    }
    Ok(None)
}

fn join_cutsets(run: &mut Run) {
    for (g1, g2) in disconnected_pairs(7) {
        let outcome = (|| {
            let fast = cut_sets_of_join(&g1, &g2).map_err(|e| e.to_string())?;
            let joined = join_product(&[g1.clone(), g2.clone()]).map_err(|e| e.to_string())?;
            let slow = cut_sets(&joined).map_err(|e| e.to_string())?;
            Ok(expect(fast.sets == slow.sets, || {
                format!("formula {:?} vs exhaustive {:?}", fast.sets, slow.sets)
            }))
        })();
        run.check(|| format!("{} * {}", write_graph6(&g1), write_graph6(&g2)), outcome);
    }
}

fn p4free(run: &mut Run) {
    let n = 6;
    for g in all_labeled_graphs(n) {
        let outcome = match (cotree(&g), has_induced_p4(&g)) {
            (Ok(t), None) => Ok(expect(t.to_graph(n) == g && t.is_normalized(), || {
                "cotree does not rebuild the graph".to_string()
            })),
            (Err(CographError::InducedP4(_)), Some(_)) => Ok(None),
            (Ok(_), Some(p)) => Ok(Some(format!("cotree built despite induced P4 {p:?}"))),
            (Err(e), None) => Ok(Some(format!("P4-free but cotree failed: {e}"))),
            (Err(e), Some(_)) => Err(e.to_string()),
        };
        run.check(|| write_graph6(&g), outcome);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert!("unknown".parse::<Suite>().is_err());
    }

    #[test]
    fn instance_set_sizes() {
        // n = 3: P3, K3; n = 4: seven classes without isolated vertices
        assert_eq!(reg2_instances().len(), 2 + 7 + 2);
        assert_eq!(decomposition_instances().len(), 2 * (1 + 2 + 4 + 11));
        assert!(join_pairs(5).iter().all(|(a, b)| a.n() + b.n() <= 5));
        assert!(disconnected_pairs(7).iter().all(|(a, b)| !a.is_connected() && !b.is_connected()));
    }

    #[test]
    fn cheap_suites_pass() {
        let mut v = Verifier::new(OracleConfig::default());
        for s in [Suite::Reproductions, Suite::JoinCutsets] {
            let r = v.run(s);
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn cache_is_keyed_by_isomorphism_class() {
        let mut v = Verifier::new(OracleConfig::default());
        let p3 = named(Named::Path(3));
        let other = p3.relabel(&[2, 1, 3]);
        assert_eq!(v.oracle_reg(&p3, 3).unwrap(), 2);
        assert_eq!(v.regs.len(), 1);
        assert_eq!(v.oracle_reg(&other, 3).unwrap(), 2);
        assert_eq!(v.regs.len(), 1);
    }
}
