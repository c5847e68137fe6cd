//! Regularity of `S/I` through a squarefree initial ideal `in(I)`.
//!
//! For a Stanley–Reisner ring `K[Δ]`, `H^i_m(K[Δ])` is nonzero exactly when
//! some face `F` has `H̃_{i-|F|-1}(lk F) != 0`, and the top degree of that
//! piece is `-|F|`. Hence `reg K[Δ] = max { k + 1 : H̃_k(lk F) != 0 }`.

use super::{sparse_rank, HomologyError};
use crate::poly::{Field, Monomial};

/// A simplicial complex on `nvars` vertices given by its minimal nonfaces.
#[derive(Debug, Clone)]
pub struct StanleyReisner {
    nvars: usize,
    /// `quad[v]`: vertices `u` with `{u, v}` a minimal nonface.
    quad: Vec<u64>,
    /// Minimal nonfaces with three or more vertices, by vertex.
    higher: Vec<Vec<u64>>,
    /// All minimal nonfaces, by vertex.
    by_vertex: Vec<Vec<u64>>,
}

impl StanleyReisner {
    pub fn from_leads(leads: &[Monomial], nvars: usize) -> Result<Self, HomologyError> {
        let mut sr = StanleyReisner {
            nvars,
            quad: vec![0; nvars],
            higher: vec![Vec::new(); nvars],
            by_vertex: vec![Vec::new(); nvars],
        };
        for l in leads {
            if l.factors().any(|(_, e)| e > 1) {
                return Err(HomologyError::NotSquarefree);
            }
            let mask = l.support();
            for (v, _) in l.factors() {
                sr.by_vertex[v].push(mask);
                match l.degree() {
                    2 => sr.quad[v] |= mask & !(1 << v),
                    _ => sr.higher[v].push(mask),
                }
            }
        }
        Ok(sr)
    }

    /// `face ∪ {v}` is a face, given that `face` is.
    fn extends(&self, face: u64, v: usize) -> bool {
        let with = face | 1 << v;
        face & self.quad[v] == 0 && !self.higher[v].iter().any(|&n| n & with == n)
    }

    /// Vertices `u` outside `face` with `face ∪ {u}` a face.
    fn candidates(&self, face: u64) -> u64 {
        (0..self.nvars)
            .filter(|&u| face >> u & 1 == 0 && self.extends(face, u))
            .fold(0, |acc, u| acc | 1 << u)
    }

    /// All faces, smallest first.
    pub fn faces(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.collect(0, 0, self.candidates(0), self.nvars, &mut out);
        out.sort_by_key(|f| (f.count_ones(), *f));
        out
    }

    /// DFS over `face ⊔ base` where `cand` holds the admissible vertices
    /// above the last one added.
    fn collect(&self, base: u64, face: u64, cand: u64, max_size: usize, out: &mut Vec<u64>) {
        out.push(face);
        if face.count_ones() as usize >= max_size {
            return;
        }
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let grown = base | face | 1 << v;
            // later vertices only, then the nonface tests for the new vertex
            let mut next = bits & !self.quad[v];
            let mut rest = next;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if !self.higher[u].is_empty() && !self.extends(grown, u) {
                    next &= !(1 << u);
                }
            }
            self.collect(base, face | 1 << v, next, max_size, out);
        }
    }

    /// `lk F` is a cone: some vertex of it lies in no minimal nonface that
    /// could close up inside `F ∪ lk F`.
    fn link_is_cone(&self, f: u64, cand: u64) -> bool {
        let span = f | cand;
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.by_vertex[v].iter().all(|&n| (n & !(1 << v)) & !span != 0) {
                return true;
            }
        }
        false
    }

    /// Faces of `lk F` with at most `max_size` vertices, grouped by size and
    /// sorted within each size.
    fn link(&self, f: u64, cand: u64, max_size: usize) -> Vec<Vec<u64>> {
        let mut all = Vec::new();
        self.collect(f, 0, cand, max_size, &mut all);
        let mut by_size = vec![Vec::new(); max_size + 1];
        for g in all {
            by_size[g.count_ones() as usize].push(g);
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        by_size
    }
}

/// Rank of the simplicial boundary from faces of size `s` to size `s - 1`.
fn boundary_rank<F: Field>(field: &F, upper: &[u64], lower: &[u64]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let minus = field.neg(&field.one());
    let rows = upper
        .iter()
        .map(|&g| {
            let mut row = Vec::with_capacity(g.count_ones() as usize);
            let mut bits = g;
            let mut pos = 0;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let col = lower
                    .binary_search(&(g & !(1u64 << v)))
                    .expect("boundary of a face is in the complex");
                let c = if pos % 2 == 0 { field.one() } else { minus.clone() };
                row.push((col as u32, c));
                pos += 1;
            }
            row
        })
        .collect();
    sparse_rank(field, rows, lower.len())
}

/// Largest `s` in `lo..=hi` with `H̃_{s-1}(lk F) != 0`.
fn link_contribution<F: Field>(
    field: &F,
    sr: &StanleyReisner,
    f: u64,
    cand: u64,
    lo: usize,
    hi: usize,
) -> Option<usize> {
    let link = sr.link(f, cand, hi + 1);
    if link[lo].is_empty() {
        return None;
    }
    let mut ranks: Vec<Option<usize>> = vec![None; hi + 2];
    let mut rank = |s: usize| -> usize {
        *ranks[s].get_or_insert_with(|| match s {
            0 => 0,
            _ => boundary_rank(field, &link[s], &link[s - 1]),
        })
    };
    // H̃_k lives on faces of size k + 1
    (lo..=hi).rev().find(|&s| {
        let dim = link[s].len();
        dim > 0 && dim > rank(s) + rank(s + 1)
    })
}

/// `reg K[Δ]` for a complex whose regularity is known to be at most `bound`.
pub fn regularity<F: Field>(field: &F, sr: &StanleyReisner, bound: usize) -> usize {
    let mut best = 0;
    for f in sr.faces() {
        if best >= bound {
            break;
        }
        let cand = sr.candidates(f);
        if cand == 0 || sr.link_is_cone(f, cand) {
            continue;
        }
        if let Some(s) = link_contribution(field, sr, f, cand, best + 1, bound) {
            best = s;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PrimeField;

    fn sr(nonfaces: &[&[usize]], n: usize) -> StanleyReisner {
        let leads: Vec<Monomial> = nonfaces
            .iter()
            .map(|vs| vs.iter().fold(Monomial::one(), |m, &v| m.times_var(v)))
            .collect();
        StanleyReisner::from_leads(&leads, n).unwrap()
    }

    #[test]
    fn faces_of_a_path_complex() {
        // nonfaces 02, 13 on four vertices: the 4-cycle 0-1-2-3
        let c = sr(&[&[0, 2], &[1, 3]], 4);
        assert_eq!(c.faces().len(), 1 + 4 + 4);
    }

    #[test]
    fn known_regularities() {
        let f = PrimeField::default();
        // two disjoint edges in 4 variables: K[x,y,z,w]/(xy, zw), a complete intersection of quadrics
        assert_eq!(regularity(&f, &sr(&[&[0, 1], &[2, 3]], 4), 5), 2);
        // 4-cycle as a complex: Gorenstein of dimension 2, reg 2
        assert_eq!(regularity(&f, &sr(&[&[0, 2], &[1, 3]], 4), 5), 2);
        // full simplex
        assert_eq!(regularity(&f, &sr(&[], 3), 5), 0);
        // a single quadric
        assert_eq!(regularity(&f, &sr(&[&[0, 1]], 3), 5), 1);
        // boundary of the triangle: S/(xyz), reg 2
        assert_eq!(regularity(&f, &sr(&[&[0, 1, 2]], 3), 5), 2);
        // pentagon: S/(x0x2, x0x3, x1x3, x1x4, x2x4) is Gorenstein of reg 2
        let pentagon = sr(&[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]], 5);
        assert_eq!(regularity(&f, &pentagon, 5), 2);
        // octahedron boundary and a degree-4 hypersurface, both reg 3
        let octahedron = sr(&[&[0, 1], &[2, 3], &[4, 5]], 6);
        assert_eq!(regularity(&f, &octahedron, 5), 3);
        assert_eq!(regularity(&f, &sr(&[&[0, 1, 2, 3]], 5), 5), 3);
    }

    #[test]
    fn cones_are_detected() {
        // vertex 2 is free of nonfaces: every link containing it is a cone
        let c = sr(&[&[0, 1]], 3);
        assert!(c.link_is_cone(0, c.candidates(0)));
        let cycle = sr(&[&[0, 2], &[1, 3]], 4);
        assert!(!cycle.link_is_cone(0, cycle.candidates(0)));
        assert!(!cycle.link_is_cone(1, cycle.candidates(1)));
    }

    #[test]
    fn faces_match_brute_force() {
        let c = sr(&[&[0, 1], &[1, 2, 3], &[3, 4], &[0, 2, 4]], 5);
        let mut brute: Vec<u64> = (0u64..32)
            .filter(|&f| ![0b00011u64, 0b01110, 0b11000, 0b10101].iter().any(|&n| f & n == n))
            .collect();
        brute.sort_by_key(|f| (f.count_ones(), *f));
        assert_eq!(c.faces(), brute);
    }

    #[test]
    fn rejects_non_squarefree() {
        let sq = Monomial::var(0).times_var(0);
        assert!(matches!(
            StanleyReisner::from_leads(&[sq], 2),
            Err(HomologyError::NotSquarefree)
        ));
    }
}
