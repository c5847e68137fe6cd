//! Buchberger's algorithm with the Gebauer–Möller criteria and the normal
//! selection strategy.

use std::cmp::Ordering;

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::{Poly, PolyRing};
use super::PolyError;

/// Rational coefficients larger than this many bits abort the computation.
pub const RATIONAL_BIT_LIMIT: u64 = 1 << 14;

/// Complete reduction of `f` by `basis`: no term of the result is divisible
/// by a leading monomial of `basis`. `basis` need not be a Gröbner basis.
pub fn reduce<F: Field>(ring: &PolyRing<F>, f: &Poly<F>, basis: &[Poly<F>]) -> Poly<F> {
    reduce_with(ring, f, |m| {
        basis
            .iter()
            .find(|g| g.lead().is_some_and(|l| l.divides(m)))
    })
}

fn reduce_with<'a, F: Field>(
    ring: &PolyRing<F>,
    f: &Poly<F>,
    find_divisor: impl Fn(&Monomial) -> Option<&'a Poly<F>>,
) -> Poly<F> {
    let field = &ring.field;
    let mut rem = Vec::new();
    let mut cur = f.clone();
    let mut pos = 0;
    while pos < cur.len() {
        let (m, c) = &cur.terms()[pos];
        match find_divisor(m) {
            Some(g) => {
                let q = m.div(g.lead().expect("nonzero")).expect("divisor");
                let coef = field.neg(&field.div(c, g.lead_coeff().expect("nonzero")));
                // the leading terms cancel exactly, so drop them up front
                let tail = Poly::from_sorted(g.terms()[1..].to_vec());
                cur = ring.axpy(&cur, &coef, &q, &tail, pos + 1);
                pos = 0;
            }
            None => {
                // terms before `pos` already live in `rem`
                rem.push((*m, c.clone()));
                pos += 1;
            }
        }
    }
    Poly::from_sorted(rem)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder<'a, F: Field> {
    ring: &'a PolyRing<F>,
    polys: Vec<Poly<F>>,
    leads: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> Builder<'_, F> {
    fn active_polys(&self) -> Vec<Poly<F>> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.clone())
            .collect()
    }

    fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        reduce_with(self.ring, f, |m| {
            (0..self.polys.len())
                .find(|&k| self.active[k] && self.leads[k].divides(m))
                .map(|k| &self.polys[k])
        })
    }

    fn insert(&mut self, h: Poly<F>) {
        let h = self.ring.monic(&h);
        let lh = *h.lead().expect("nonzero");
        let idx = self.polys.len();

        // candidate pairs (g, h) for active g
        let mut c: Vec<Pair> = (0..idx)
            .filter(|&g| self.active[g])
            .map(|g| Pair {
                i: g,
                j: idx,
                lcm: self.leads[g].lcm(&lh),
            })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while !c.is_empty() {
            let p = c.remove(0);
            let coprime = self.leads[p.i].is_coprime(&lh);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let fresh: Vec<Pair> = d
            .into_iter()
            .filter(|p| !self.leads[p.i].is_coprime(&lh))
            .collect();

        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && leads[p.i].lcm(&lh) != p.lcm
                && leads[p.j].lcm(&lh) != p.lcm)
        });
        self.pairs.extend(fresh);

        for g in 0..idx {
            if self.active[g] && lh.divides(&self.leads[g]) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.leads.push(lh);
        self.active.push(true);
    }

    fn select(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

fn check_growth<F: Field>(ring: &PolyRing<F>, p: &Poly<F>) -> Result<(), PolyError> {
    let bits = ring.coefficient_bits(p);
    if bits > RATIONAL_BIT_LIMIT {
        return Err(PolyError::CoefficientGrowth { bits });
    }
    Ok(())
}

/// Reduced Gröbner basis: monic, minimal, tails reduced, sorted by
/// decreasing leading monomial. The zero ideal gives an empty basis.
pub fn groebner_basis<F: Field>(
    ring: &PolyRing<F>,
    generators: &[Poly<F>],
) -> Result<Vec<Poly<F>>, PolyError> {
    let mut b = Builder {
        ring,
        polys: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in generators {
        let h = b.reduce(g);
        if !h.is_zero() {
            check_growth(ring, &h)?;
            b.insert(h);
        }
    }
    while let Some(pair) = b.select() {
        let s = ring.s_polynomial(&b.polys[pair.i], &b.polys[pair.j]);
        let h = b.reduce(&s);
        if !h.is_zero() {
            check_growth(ring, &h)?;
            b.insert(h);
        }
    }
    let minimal = b.active_polys();
    let mut reduced: Vec<Poly<F>> = (0..minimal.len())
        .map(|k| {
            let lead = Poly::from_sorted(vec![minimal[k].terms()[0].clone()]);
            let tail = Poly::from_sorted(minimal[k].terms()[1..].to_vec());
            let others: Vec<Poly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != k)
                .map(|(_, p)| p.clone())
                .collect();
            let t = reduce(ring, &tail, &others);
            ring.add(&lead, &t)
        })
        .collect();
    for p in &reduced {
        check_growth(ring, p)?;
    }
    reduced.sort_by(|a, b| ring.cmp(b.lead().expect("nonzero"), a.lead().expect("nonzero")));
    Ok(reduced)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner<F: Field>(ring: &PolyRing<F>, basis: &[Poly<F>]) -> bool {
    (0..basis.len()).all(|i| {
        (i + 1..basis.len()).all(|j| {
            let s = ring.s_polynomial(&basis[i], &basis[j]);
            reduce(ring, &s, basis).is_zero()
        })
    })
}

/// Minimal, monic, tail-reduced and sorted.
pub fn is_reduced<F: Field>(ring: &PolyRing<F>, basis: &[Poly<F>]) -> bool {
    basis.iter().enumerate().all(|(k, p)| {
        ring.field.is_one(p.lead_coeff().expect("nonzero"))
            && p.monomials().all(|m| {
                basis
                    .iter()
                    .enumerate()
                    .all(|(o, q)| o == k || !q.lead().expect("nonzero").divides(m))
            })
    }) && basis
        .windows(2)
        .all(|w| ring.cmp(w[0].lead().expect("nonzero"), w[1].lead().expect("nonzero")) == Ordering::Greater)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, Rationals};
    use crate::poly::monomial::MonomialOrder;
    use crate::poly::polynomial::VariableGrid;
    use proptest::prelude::*;

    fn ring(m: usize, n: usize, order: MonomialOrder) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::default(), VariableGrid::new(m, n).unwrap(), order)
    }

    fn parse_all<F: Field>(r: &PolyRing<F>, src: &[&str]) -> Vec<Poly<F>> {
        src.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let r = ring(2, 2, MonomialOrder::DegRevLex);
        let f = parse_all(&r, &["x[1,1]*x[2,2] - x[1,2]*x[2,1]"]);
        let gb = groebner_basis(&r, &f).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(r.format(&gb[0]), "x[1,2]*x[2,1] - x[1,1]*x[2,2]");
    }

    #[test]
    fn hand_reduction_example() {
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let r = ring(2, 2, order);
            let gens = parse_all(&r, &["x[1,1]", "x[1,1]*x[2,2] - x[1,2]*x[2,1]"]);
            let gb = groebner_basis(&r, &gens).unwrap();
            let mut shown: Vec<String> = gb.iter().map(|p| r.format(p)).collect();
            shown.sort();
            assert_eq!(shown, vec!["x[1,1]", "x[1,2]*x[2,1]"]);
        }
    }

    #[test]
    fn normal_form_examples_under_lex() {
        let r = ring(2, 2, MonomialOrder::Lex);
        let gb = groebner_basis(&r, &parse_all(&r, &["x[1,1]*x[2,2] - x[1,2]*x[2,1]"])).unwrap();
        let nf = |s: &str| r.format(&reduce(&r, &r.parse(s).unwrap(), &gb));
        assert_eq!(nf("x[1,1]*x[2,2]"), "x[1,2]*x[2,1]");
        assert_eq!(nf("x[1,2]*x[2,1]"), "x[1,2]*x[2,1]");
        assert_eq!(r.format(&reduce(&r, &Poly::zero(), &gb)), "0");
    }

    #[test]
    fn cyclic_three_over_both_fields() {
        // a classic nontrivial basis computation in three variables
        let src = [
            "x[1,1] + x[1,2] + x[1,3]",
            "x[1,1]*x[1,2] + x[1,2]*x[1,3] + x[1,3]*x[1,1]",
            "x[1,1]*x[1,2]*x[1,3] - 1",
        ];
        let r = ring(1, 3, MonomialOrder::Lex);
        let gb = groebner_basis(&r, &parse_all(&r, &src)).unwrap();
        assert!(is_groebner(&r, &gb) && is_reduced(&r, &gb));
        let shown: Vec<String> = gb.iter().map(|p| r.format(p)).collect();
        assert_eq!(
            shown,
            vec!["x[1,1] + x[1,2] + x[1,3]", "x[1,2]^2 + x[1,2]*x[1,3] + x[1,3]^2", "x[1,3]^3 - 1"]
        );
        let q = PolyRing::new(Rationals, VariableGrid::new(1, 3).unwrap(), MonomialOrder::Lex);
        let gbq = groebner_basis(&q, &parse_all(&q, &src)).unwrap();
        let shown_q: Vec<String> = gbq.iter().map(|p| q.format(p)).collect();
        assert_eq!(shown, shown_q);
    }

    #[test]
    fn inconsistent_system_gives_one() {
        let r = ring(1, 2, MonomialOrder::DegRevLex);
        let gb = groebner_basis(&r, &parse_all(&r, &["x[1,1]", "x[1,1] - 1"])).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(r.format(&gb[0]), "1");
    }

    fn arb_binomials() -> impl Strategy<Value = Vec<String>> {
        let var = (1usize..=2, 1usize..=3).prop_map(|(i, j)| format!("x[{i},{j}]"));
        let mono = proptest::collection::vec(var, 1..=3).prop_map(|v| v.join("*"));
        proptest::collection::vec((mono.clone(), mono, -3i64..=3), 1..=4).prop_map(|v| {
            v.into_iter()
                .map(|(a, b, c)| format!("{a} + {c}*{b}"))
                .collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn bases_are_confluent_and_contain_inputs(src in arb_binomials()) {
            for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
                let r = ring(2, 3, order);
                let gens: Vec<_> = src.iter().map(|s| r.parse(s).unwrap()).collect();
                let gb = groebner_basis(&r, &gens).unwrap();
                prop_assert!(is_groebner(&r, &gb));
                prop_assert!(is_reduced(&r, &gb));
                for g in &gens {
                    prop_assert!(reduce(&r, g, &gb).is_zero());
                }
                // recomputing from the basis is a fixed point
                prop_assert_eq!(groebner_basis(&r, &gb).unwrap(), gb.clone());
                for g in &gens {
                    let once = reduce(&r, &r.mul(g, &r.x(1, 1)), &gb);
                    prop_assert!(once.is_zero());
                }
            }
        }

        #[test]
        fn normal_form_is_idempotent_and_linear(src in arb_binomials(), a in arb_binomials(), b in arb_binomials()) {
            let r = ring(2, 3, MonomialOrder::DegRevLex);
            let gens: Vec<_> = src.iter().map(|s| r.parse(s).unwrap()).collect();
            let gb = groebner_basis(&r, &gens).unwrap();
            let f = r.parse(&a[0]).unwrap();
            let g = r.parse(&b[0]).unwrap();
            let nf = |p: &Poly<PrimeField>| reduce(&r, p, &gb);
            prop_assert_eq!(nf(&nf(&f)), nf(&f));
            prop_assert_eq!(nf(&r.add(&f, &g)), r.add(&nf(&f), &nf(&g)));
        }
    }
}
