use serde::Serialize;

use super::field::Field;
use super::groebner::{groebner_basis, is_groebner, reduce};
use super::hilbert;
use super::monomial::Monomial;
use super::polynomial::{Poly, PolyRing};
use super::PolyError;
use crate::graph::Graph;
use crate::primedec::PrimeComponent;

#[derive(Debug, Clone, PartialEq)]
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    generators: Vec<Poly<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: PolyRing<F>, generators: Vec<Poly<F>>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, generators }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn groebner_basis(&self) -> Result<GroebnerBasis<F>, PolyError> {
        Ok(GroebnerBasis {
            ring: self.ring.clone(),
            polys: groebner_basis(&self.ring, &self.generators)?,
        })
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| self.ring.format(g)).collect()
    }
}

/// A reduced Gröbner basis together with its ring.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    polys: Vec<Poly<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn polys(&self) -> &[Poly<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| *p.lead().expect("nonzero"))
            .collect()
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        reduce(&self.ring, f, &self.polys)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn is_groebner(&self) -> bool {
        is_groebner(&self.ring, &self.polys)
    }

    /// Number of standard monomials of degree `d`.
    pub fn hilbert_function(&self, d: usize) -> u64 {
        hilbert::hilbert_function(&self.leading_monomials(), self.ring.nvars(), d)
    }

    /// Hilbert series numerator of `S / I` over `(1 - t)^N`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        hilbert::k_polynomial(&self.leading_monomials())
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::new(self.ring.clone(), self.polys.clone())
    }
}

fn minor<F: Field>(ring: &PolyRing<F>, i: usize, j: usize, t: usize, l: usize) -> Poly<F> {
    let g = ring.grid;
    let f = &ring.field;
    ring.from_terms(vec![
        (g.var(i, t).mul(&g.var(j, l)), f.one()),
        (g.var(i, l).mul(&g.var(j, t)), f.neg(&f.one())),
    ])
}

/// `x_it x_jl - x_il x_jt` for each row pair `i < j` (outer loop) and edge
/// `{t, l}`, `t < l` (inner loop).
pub fn gbei_generators<F: Field>(ring: &PolyRing<F>, g: &Graph) -> Result<Ideal<F>, PolyError> {
    let grid = ring.grid;
    if grid.n != g.n() {
        return Err(PolyError::RingMismatch(format!(
            "grid has {} columns, graph has {} vertices",
            grid.n,
            g.n()
        )));
    }
    if grid.m < 2 {
        return Err(PolyError::TooFewRows(grid.m));
    }
    let edges = g.edges();
    let mut gens = Vec::with_capacity(grid.m * (grid.m - 1) / 2 * edges.len());
    for i in 1..=grid.m {
        for j in i + 1..=grid.m {
            for &(t, l) in &edges {
                gens.push(minor(ring, i, j, t, l));
            }
        }
    }
    Ok(Ideal::new(ring.clone(), gens))
}

/// Variables of the killed columns, then the 2-minors inside each block.
pub fn prime_generators<F: Field>(ring: &PolyRing<F>, p: &PrimeComponent) -> Result<Ideal<F>, PolyError> {
    if ring.grid.m != p.m || ring.grid.n != p.n {
        return Err(PolyError::RingMismatch(format!(
            "grid {}x{} but component lives on {}x{}",
            ring.grid.m, ring.grid.n, p.m, p.n
        )));
    }
    let mut gens: Vec<Poly<F>> = p.killed().into_iter().map(|(i, j)| ring.x(i, j)).collect();
    for block in &p.clique_blocks {
        let cols = block.to_vec();
        for i in 1..=p.m {
            for j in i + 1..=p.m {
                for (a, &t) in cols.iter().enumerate() {
                    for &l in &cols[a + 1..] {
                        gens.push(minor(ring, i, j, t, l));
                    }
                }
            }
        }
    }
    Ok(Ideal::new(ring.clone(), gens))
}

fn same_ring<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<(), PolyError> {
    if a.ring != b.ring {
        return Err(PolyError::RingMismatch(
            "ideals live in different rings".to_string(),
        ));
    }
    Ok(())
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn ideal_intersection<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>, PolyError> {
    same_ring(i, j)?;
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::new(ring.clone(), Vec::new()));
    }
    let big = ring.with_aux();
    let t = Monomial::var(big.aux_index().expect("aux ring"));
    let f = &big.field;
    let one_minus_t = big.from_terms(vec![(Monomial::one(), f.one()), (t, f.neg(&f.one()))]);
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(big.mul_term(&big.adopt(g), &t, &f.one()));
    }
    for g in j.generators() {
        gens.push(big.mul(&big.adopt(g), &one_minus_t));
    }
    let gb = groebner_basis(&big, &gens)?;
    let aux = big.aux_index().expect("aux ring");
    let kept = gb
        .iter()
        .filter(|p| p.monomials().all(|m| m.exp(aux) == 0))
        .map(|p| ring.adopt(p))
        .collect();
    Ok(Ideal::new(ring.clone(), kept))
}

/// Equality of ideals by comparing reduced Gröbner bases.
pub fn ideal_equal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool, PolyError> {
    same_ring(i, j)?;
    Ok(i.groebner_basis()?.polys == j.groebner_basis()?.polys)
}

/// JSON view of an ideal: generator strings plus the ring description.
#[derive(Debug, Clone, Serialize)]
pub struct IdealListing {
    pub m: usize,
    pub n: usize,
    pub characteristic: u64,
    pub order: &'static str,
    pub generators: Vec<String>,
}

impl<F: Field> Ideal<F> {
    pub fn listing(&self) -> IdealListing {
        IdealListing {
            m: self.ring.grid.m,
            n: self.ring.grid.n,
            characteristic: self.ring.field.characteristic(),
            order: self.ring.order.name(),
            generators: self.format_generators(),
        }
    }
}
