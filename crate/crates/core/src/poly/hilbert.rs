//! Standard monomials and Hilbert series of monomial ideals.

use super::monomial::Monomial;

pub fn is_standard(m: &Monomial, leads: &[Monomial]) -> bool {
    !leads.iter().any(|l| l.divides(m))
}

/// Standard monomials of degrees `0..=max_degree`, one vector per degree,
/// each in increasing generation order (deterministic).
pub fn standard_monomials(leads: &[Monomial], nvars: usize, max_degree: usize) -> Vec<Vec<Monomial>> {
    let mut out = vec![vec![Monomial::one()]];
    if leads.iter().any(Monomial::is_one) {
        out[0].clear();
    }
    for _ in 1..=max_degree {
        let prev = out.last().expect("degree 0 present");
        let mut next = Vec::new();
        for s in prev {
            // extend only at or after the last variable so each monomial appears once
            let start = s.last_var().unwrap_or(0);
            for k in start..nvars {
                let t = s.times_var(k);
                if is_standard(&t, leads) {
                    next.push(t);
                }
            }
        }
        out.push(next);
    }
    out
}

/// Number of standard monomials of degree `d`.
pub fn hilbert_function(leads: &[Monomial], nvars: usize, d: usize) -> u64 {
    standard_monomials(leads, nvars, d)[d].len() as u64
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, v) in b.iter().enumerate() {
        a[k + shift] -= v;
    }
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, v) in b.iter().enumerate() {
        a[k + shift] += v;
    }
}

/// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^N` of `S / (gens)`,
/// as coefficients of `t^0, t^1, ...`.
pub fn k_polynomial(gens: &[Monomial]) -> Vec<i64> {
    let mut k = numerator(minimalize(gens.to_vec()));
    while k.len() > 1 && k.last() == Some(&0) {
        k.pop();
    }
    k
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    // pairwise coprime generators: product of (1 - t^deg)
    let mut seen = 0u64;
    let coprime = gens.iter().all(|g| {
        let ok = seen & g.support() == 0;
        seen |= g.support();
        ok
    });
    if coprime {
        let mut k = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let prev = k.clone();
            poly_sub_shifted(&mut k, &prev, d);
        }
        return k;
    }
    // pivot on the variable occurring in the most non-linear generators:
    // K(M) = K(M + x) + t * K(M : x)
    let mut counts = [0usize; 64];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for (v, _) in g.factors() {
            counts[v] += 1;
        }
    }
    let x = (0..64).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("nonempty");
    let xm = Monomial::var(x);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(x) == 0).copied().collect();
    plus.push(xm);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.div(&xm).unwrap_or(*g))
        .collect();
    let mut k = numerator(minimalize(plus));
    let c = numerator(minimalize(colon));
    poly_add_shifted(&mut k, &c, 1);
    k
}

/// `HF(d)` from a K-polynomial in `nvars` variables.
pub fn hilbert_from_k(k: &[i64], nvars: usize, d: usize) -> i128 {
    k.iter()
        .enumerate()
        .filter(|&(j, _)| j <= d)
        .map(|(j, &c)| c as i128 * binomial(nvars + d - j - 1, nvars.saturating_sub(1)))
        .sum()
}

pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn standard_monomials_of_zero_ideal() {
        let s = standard_monomials(&[], 9, 2);
        assert_eq!(s[0].len(), 1);
        assert_eq!(s[1].len(), 9);
        assert_eq!(s[2].len(), 45);
    }

    #[test]
    fn counts_against_closed_form() {
        // S / (x0*x3) in 4 variables: HF(d) = C(d+3,3) - C(d+1,3)
        let leads = [m(&[1, 0, 0, 1])];
        for d in 0..6 {
            let expected = binomial(d + 3, 3) - binomial(d + 1, 3);
            assert_eq!(hilbert_function(&leads, 4, d) as i128, expected);
        }
        assert_eq!(k_polynomial(&leads), vec![1, 0, -1]);
    }

    #[test]
    fn k_polynomial_matches_counts() {
        let cases: Vec<Vec<Monomial>> = vec![
            vec![m(&[1, 1]), m(&[0, 1, 1]), m(&[1, 0, 1])],
            vec![m(&[2]), m(&[1, 1]), m(&[0, 3])],
            vec![m(&[1, 1, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 1, 1]), m(&[1, 0, 0, 1])],
            vec![m(&[0, 0, 0, 0, 1]), m(&[1, 1, 1])],
        ];
        for gens in cases {
            let n = 5;
            let k = k_polynomial(&gens);
            for d in 0..8 {
                assert_eq!(hilbert_from_k(&k, n, d), hilbert_function(&gens, n, d) as i128);
            }
        }
    }

    #[test]
    fn unit_ideal() {
        assert_eq!(k_polynomial(&[Monomial::one()]), vec![0]);
        assert_eq!(hilbert_function(&[Monomial::one()], 3, 0), 0);
    }
}
