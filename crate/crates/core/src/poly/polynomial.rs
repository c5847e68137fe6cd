use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::PolyError;

/// The `m x n` matrix of variables, indexed row-major from `x[1,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VariableGrid {
    pub m: usize,
    pub n: usize,
}

impl VariableGrid {
    pub fn new(m: usize, n: usize) -> Result<Self, PolyError> {
        if m == 0 || n == 0 || m * n >= MAX_VARS {
            return Err(PolyError::GridSize { m, n });
        }
        Ok(VariableGrid { m, n })
    }

    pub fn len(&self) -> usize {
        self.m * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of `x[i,j]` for 1-based `i`, `j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j));
        (i - 1) * self.n + (j - 1)
    }

    /// 1-based `(row, column)` of variable `k`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        (k / self.n + 1, k % self.n + 1)
    }

    pub fn var(&self, i: usize, j: usize) -> Monomial {
        Monomial::var(self.index(i, j))
    }
}

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// Terms sorted strictly decreasing in the ring's order, no zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub(crate) fn from_sorted(terms: Vec<Term<F>>) -> Self {
        Poly { terms }
    }
}

/// Polynomial ring over the grid, optionally with one auxiliary variable
/// placed after the grid variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub grid: VariableGrid,
    pub aux: bool,
    pub order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, grid: VariableGrid, order: MonomialOrder) -> Self {
        PolyRing {
            field,
            grid,
            aux: false,
            order,
        }
    }

    /// The same grid plus an auxiliary variable under the elimination order.
    pub fn with_aux(&self) -> Self {
        PolyRing {
            field: self.field.clone(),
            grid: self.grid,
            aux: true,
            order: MonomialOrder::Elimination {
                aux: self.grid.len(),
            },
        }
    }

    pub fn nvars(&self) -> usize {
        self.grid.len() + self.aux as usize
    }

    pub fn aux_index(&self) -> Option<usize> {
        self.aux.then(|| self.grid.len())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        self.term(Monomial::one(), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly::from_sorted(vec![(m, c)])
        }
    }

    pub fn monomial(&self, m: Monomial) -> Poly<F> {
        self.term(m, self.field.one())
    }

    pub fn x(&self, i: usize, j: usize) -> Poly<F> {
        self.monomial(self.grid.var(i, j))
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<Term<F>>) -> Poly<F> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| self.field.is_zero(c)) {
                out.pop();
            }
        }
        Poly::from_sorted(out)
    }

    /// Re-sorts a polynomial whose terms were ordered by another ring.
    pub fn adopt(&self, p: &Poly<F>) -> Poly<F> {
        self.from_terms(p.terms().to_vec())
    }

    pub fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.axpy(a, &self.field.one(), &Monomial::one(), b, 0)
    }

    pub fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.axpy(a, &self.field.neg(&self.field.one()), &Monomial::one(), b, 0)
    }

    pub fn neg(&self, a: &Poly<F>) -> Poly<F> {
        self.scale(a, &self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, a: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|(m, x)| (*m, self.field.mul(x, c)))
                .collect(),
        )
    }

    pub fn mul_term(&self, a: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|(am, x)| (am.mul(m), self.field.mul(x, c)))
                .collect(),
        )
    }

    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        b.terms.iter().fold(Poly::zero(), |acc, (m, c)| {
            let part = self.mul_term(a, m, c);
            self.add(&acc, &part)
        })
    }

    pub fn monic(&self, a: &Poly<F>) -> Poly<F> {
        match a.lead_coeff() {
            Some(c) if !self.field.is_one(c) => self.scale(a, &self.field.inv(c)),
            _ => a.clone(),
        }
    }

    /// `a[skip..] + c * m * b`, merging in order.
    pub(crate) fn axpy(
        &self,
        a: &Poly<F>,
        c: &F::Elem,
        m: &Monomial,
        b: &Poly<F>,
        skip: usize,
    ) -> Poly<F> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = a.terms[skip.min(a.len())..].iter().peekable();
        let mut ib = b.terms.iter().map(|(bm, bc)| (bm.mul(m), f.mul(bc, c))).peekable();
        loop {
            let ord = match (ia.peek(), ib.peek()) {
                (Some(x), Some(y)) => self.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(ia.next().cloned().expect("peeked")),
                Ordering::Less => out.push(ib.next().expect("peeked")),
                Ordering::Equal => {
                    let (am, ac) = ia.next().expect("peeked");
                    let (_, bc) = ib.next().expect("peeked");
                    let s = f.add(ac, &bc);
                    if !f.is_zero(&s) {
                        out.push((*am, s));
                    }
                }
            }
        }
        Poly::from_sorted(out)
    }

    pub fn s_polynomial(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let (la, lb) = (a.lead().expect("nonzero"), b.lead().expect("nonzero"));
        let l = la.lcm(lb);
        let ua = l.div(la).expect("lcm");
        let ub = l.div(lb).expect("lcm");
        let ca = self.field.inv(a.lead_coeff().expect("nonzero"));
        let cb = self.field.neg(&self.field.inv(b.lead_coeff().expect("nonzero")));
        let left = self.mul_term(a, &ua, &ca);
        self.axpy(&left, &cb, &ub, b, 0)
    }

    /// Largest coefficient size in bits, for growth control over the rationals.
    pub fn coefficient_bits(&self, a: &Poly<F>) -> u64 {
        a.terms
            .iter()
            .map(|(_, c)| self.field.bit_size(c))
            .max()
            .unwrap_or(0)
    }

    pub fn var_name(&self, k: usize) -> String {
        if Some(k) == self.aux_index() {
            "t".to_string()
        } else {
            let (i, j) = self.grid.position(k);
            format!("x[{i},{j}]")
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = m
            .factors()
            .map(|(k, e)| {
                if e == 1 {
                    self.var_name(k)
                } else {
                    format!("{}^{e}", self.var_name(k))
                }
            })
            .collect();
        parts.join("*")
    }

    /// Text form, e.g. `x[1,1]*x[2,2] - x[1,2]*x[2,1]`.
    pub fn format(&self, p: &Poly<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in p.terms.iter().enumerate() {
            let r = self.field.render(c);
            let (neg, mag) = match r.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, r),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (mag.as_str(), m.is_one()) {
                ("1", false) => s.push_str(&self.format_monomial(m)),
                (_, true) => s.push_str(&mag),
                _ => {
                    let _ = write!(s, "{mag}*{}", self.format_monomial(m));
                }
            }
        }
        s
    }

    /// Parses the text form with integer coefficients.
    pub fn parse(&self, text: &str) -> Result<Poly<F>, PolyError> {
        let bad = |msg: &str| PolyError::Parse(format!("{msg} in {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let neg = rest.starts_with('-');
            if neg || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest[1.min(rest.len())..]
                .find(['+', '-'])
                .map_or(rest.len(), |p| p + 1);
            let chunk = &rest[..end];
            rest = &rest[end..];
            let mut coeff: i64 = if neg { -1 } else { 1 };
            let mut mono = Monomial::one();
            for factor in chunk.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u8>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                if let Ok(v) = base.parse::<i64>() {
                    coeff = coeff.checked_mul(v.pow(exp as u32)).ok_or_else(|| bad("coefficient too large"))?;
                    continue;
                }
                let k = self.parse_var(base).ok_or_else(|| bad("unknown variable"))?;
                for _ in 0..exp {
                    mono = mono.times_var(k);
                }
            }
            terms.push((mono, self.field.from_i64(coeff)));
        }
        Ok(self.from_terms(terms))
    }

    fn parse_var(&self, s: &str) -> Option<usize> {
        if s == "t" {
            return self.aux_index();
        }
        let inner = s.strip_prefix("x[")?.strip_suffix(']')?;
        let (i, j) = inner.split_once(',')?;
        let (i, j): (usize, usize) = (i.parse().ok()?, j.parse().ok()?);
        ((1..=self.grid.m).contains(&i) && (1..=self.grid.n).contains(&j))
            .then(|| self.grid.index(i, j))
    }
}
