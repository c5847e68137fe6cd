use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// Hard cap on the number of variables, auxiliary variable included.
pub const MAX_VARS: usize = 64;

/// Dense exponent vector with cached degree and support bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
    mask: u64,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
            mask: 0,
        }
    }

    pub fn var(k: usize) -> Self {
        Self::one().times_var(k)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        exps.iter()
            .enumerate()
            .fold(Self::one(), |acc, (k, &e)| (0..e).fold(acc, |a, _| a.times_var(k)))
    }

    pub fn exp(&self, k: usize) -> u8 {
        self.exps[k]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    /// Bit `k` is set iff variable `k` divides the monomial.
    pub fn support(&self) -> u64 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Highest variable index in the support.
    pub fn last_var(&self) -> Option<usize> {
        (self.mask != 0).then(|| 63 - self.mask.leading_zeros() as usize)
    }

    pub fn times_var(mut self, k: usize) -> Self {
        self.exps[k] = self.exps[k].checked_add(1).expect("exponent overflow");
        self.deg += 1;
        self.mask |= 1 << k;
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = *self;
        let mut bits = other.mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            r.exps[k] = r.exps[k].checked_add(other.exps[k]).expect("exponent overflow");
            bits &= bits - 1;
        }
        r.deg += other.deg;
        r.mask |= other.mask;
        r
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        let mut bits = self.mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            if self.exps[k] > other.exps[k] {
                return false;
            }
            bits &= bits - 1;
        }
        true
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut r = *self;
        let mut bits = other.mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            r.exps[k] -= other.exps[k];
            if r.exps[k] == 0 {
                r.mask &= !(1 << k);
            }
            bits &= bits - 1;
        }
        r.deg -= other.deg;
        Some(r)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut r = *self;
        let mut bits = other.mask;
        let mut deg = self.deg;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            if other.exps[k] > r.exps[k] {
                deg += (other.exps[k] - r.exps[k]) as u16;
                r.exps[k] = other.exps[k];
            }
            bits &= bits - 1;
        }
        r.deg = deg;
        r.mask |= other.mask;
        r
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.mask & other.mask == 0
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        let mut bits = self.mask;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                (k, self.exps[k])
            })
        })
    }

    /// Applies a variable relabeling `k -> perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.factors().fold(Self::one(), |acc, (k, e)| {
            (0..e).fold(acc, |a, _| a.times_var(perm[k]))
        })
    }

    fn revlex_cmp(&self, other: &Self, below: usize) -> Ordering {
        // the larger monomial has the smaller exponent at the last differing variable
        for k in (0..below).rev() {
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(k, e)| if e == 1 { format!("v{k}") } else { format!("v{k}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Variable `aux` forms its own leading block; degrevlex on the rest.
    Elimination { aux: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a
                .deg
                .cmp(&b.deg)
                .then_with(|| a.revlex_cmp(b, MAX_VARS)),
            MonomialOrder::Lex => {
                for k in 0..MAX_VARS {
                    match a.exps[k].cmp(&b.exps[k]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination { aux } => {
                let (ta, tb) = (a.exps[aux], b.exps[aux]);
                ta.cmp(&tb)
                    .then_with(|| (a.deg - ta as u16).cmp(&(b.deg - tb as u16)))
                    .then_with(|| a.revlex_cmp(b, aux))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Elimination { .. } => "elimination",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn arithmetic() {
        let a = mono(&[1, 0, 2]);
        let b = mono(&[0, 1, 1]);
        assert_eq!(a.mul(&b), mono(&[1, 1, 3]));
        assert_eq!(a.lcm(&b), mono(&[1, 1, 2]));
        assert!(b.divides(&mono(&[0, 1, 1, 4])));
        assert!(!a.divides(&b));
        assert_eq!(mono(&[2, 1]).div(&mono(&[1, 1])), Some(mono(&[1])));
        assert_eq!(a.degree(), 3);
        assert_eq!(a.last_var(), Some(2));
        assert!(mono(&[1]).is_coprime(&mono(&[0, 1])));
    }

    #[test]
    fn orders_on_a_two_by_two_minor() {
        // x11*x22 against x12*x21 with row-major indices 0..4
        let diag = mono(&[1, 0, 0, 1]);
        let anti = mono(&[0, 1, 1, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&diag, &anti), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&diag, &anti), Ordering::Less);
    }

    #[test]
    fn elimination_puts_aux_first() {
        let ord = MonomialOrder::Elimination { aux: 4 };
        let t = Monomial::var(4);
        let big = mono(&[3, 3, 3, 3]);
        assert_eq!(ord.cmp(&t, &big), Ordering::Greater);
        assert_eq!(
            ord.cmp(&mono(&[1, 0, 0, 1]), &mono(&[0, 1, 1, 0])),
            MonomialOrder::DegRevLex.cmp(&mono(&[1, 0, 0, 1]), &mono(&[0, 1, 1, 0]))
        );
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u8..3, 6).prop_map(|v| mono(&v))
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Elimination { aux: 5 }] {
                prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
                prop_assert_ne!(ord.cmp(&a.mul(&c), &Monomial::one()), Ordering::Less);
                if a != b {
                    prop_assert_ne!(ord.cmp(&a, &b), Ordering::Equal);
                }
            }
        }

        #[test]
        fn lcm_and_division(a in arb_mono(), b in arb_mono()) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!(l.div(&a).unwrap().mul(&a), l);
            prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
        }
    }
}
