//! Independent classical (q = 1) ground truth: Weyl dimensions, spherical
//! weight enumeration, and brute-force commutative Pluecker / Kaehler
//! computations over Q.
//!
//! Nothing here touches R-matrices or the quantum engine; these numbers are
//! used as oracles for the dimension checks elsewhere.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::qarith::Rational;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Weyl dimension of the sl_N irreducible with highest weight
/// lambda = sum lambda_i omega_i (lambda has N-1 entries, possibly fewer;
/// missing entries are zero).
pub fn weyl_dim(n: usize, lambda: &[i64]) -> u64 {
    let mut lam = vec![0i64; n - 1];
    for (i, v) in lambda.iter().enumerate() {
        if i < n - 1 {
            lam[i] = *v;
        } else {
            assert_eq!(*v, 0, "weight index out of range");
        }
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut part = (j - i) as i64;
            for m in i..j {
                if m < n - 1 {
                    part += lam[m];
                }
            }
            num *= BigInt::from(part);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r.is_zero());
    let digits = q.to_u64_digits();
    assert!(digits.1.len() <= 1);
    digits.1.first().copied().unwrap_or(0)
}

/// Fundamental-weight vector omega_i (1-based) for sl_N.
pub fn omega(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n - 1];
    if i >= 1 && i <= n - 1 {
        v[i - 1] = 1;
    }
    // omega_0 and omega_N denote the trivial weight
    v
}

fn add_weights(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

/// All spherical weights sum n_i (omega_i + omega_{N-i}), i = 1..min(r,s),
/// with sum n_i <= kmax, for the Grassmannian of r-planes in C^N.
pub fn spherical_weights(n: usize, r: usize, kmax: usize) -> Vec<Vec<i64>> {
    let s = n - r;
    let m = r.min(s);
    let mut out = Vec::new();
    let mut tuple = vec![0usize; m];
    fn rec(n: usize, m: usize, idx: usize, left: usize, tuple: &mut Vec<usize>, out: &mut Vec<Vec<i64>>) {
        if idx == m {
            let mut lam = vec![0i64; n - 1];
            for (i, ni) in tuple.iter().enumerate() {
                let w = add_weights(&omega(n, i + 1), &omega(n, n - (i + 1)));
                for (a, b) in lam.iter_mut().zip(w.iter()) {
                    *a += (*ni as i64) * b;
                }
            }
            out.push(lam);
            return;
        }
        for v in 0..=left {
            tuple[idx] = v;
            rec(n, m, idx + 1, left - v, tuple, out);
        }
    }
    rec(n, m, 0, kmax, &mut tuple, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Sum of Weyl dimensions over the spherical weights with sum n_i <= k.
pub fn spherical_dim_sum(n: usize, r: usize, k: usize) -> u64 {
    spherical_weights(n, r, k).iter().map(|lam| weyl_dim(n, lam)).sum()
}

// ---------------------------------------------------------------------------
// Commutative Pluecker ring over Q
// ---------------------------------------------------------------------------

/// Sorted multiset of variable indices; the commutative monomial basis.
pub type Monomial = Vec<u16>;

/// Sparse vector over the commutative monomial basis.
pub type PolyVec = BTreeMap<Monomial, Rational>;

fn add_term(v: &mut PolyVec, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(m.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&m);
    }
}

fn mul_monomial(v: &PolyVec, m: &Monomial) -> PolyVec {
    v.iter()
        .map(|(k, c)| {
            let mut k2 = k.clone();
            k2.extend_from_slice(m);
            k2.sort_unstable();
            (k2, c.clone())
        })
        .collect()
}

/// Deterministic reduced echelon over monomial-indexed sparse vectors.
#[derive(Default)]
pub struct PolyEchelon {
    rows: Vec<(Monomial, PolyVec)>,
}

impl PolyEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: PolyVec) -> PolyVec {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                if c.is_zero() {
                    continue;
                }
                for (m, rc) in row {
                    let e = v.entry(m.clone()).or_insert_with(Rational::zero);
                    *e -= &c * rc;
                }
                v.retain(|_, c| !c.is_zero());
            }
        }
        v
    }

    /// Returns true when the vector enlarged the span.
    pub fn insert(&mut self, v: PolyVec) -> bool {
        let mut v = self.reduce(v);
        v.retain(|_, c| !c.is_zero());
        let Some((pivot, pc)) = v.iter().next().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let inv = pc.recip();
        for (_, c) in v.iter_mut() {
            *c *= &inv;
        }
        // keep earlier rows fully reduced
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                for (m, rc) in &v {
                    let e = row.entry(m.clone()).or_insert_with(Rational::zero);
                    *e -= &c * rc;
                }
                row.retain(|_, c| !c.is_zero());
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by(|a, b| a.0.cmp(&b.0));
        true
    }
}

/// The commutative Pluecker model of the cone over Gr(s-planes via minors):
/// variables are s-subsets of {1..n}, relations are the Grassmann-Pluecker
/// quadrics. Degree-k dimensions are computed by plain elimination.
pub struct PlueckerRing {
    pub n: usize,
    pub s: usize,
    pub vars: Vec<Vec<u8>>,
    quadrics: Vec<PolyVec>,
}

fn subsets(n: usize, s: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, s: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as u8);
            rec(n, s, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, s, 0, &mut cur, &mut out);
    out
}

impl PlueckerRing {
    pub fn new(n: usize, s: usize) -> Self {
        let vars = subsets(n, s);
        let index: BTreeMap<Vec<u8>, u16> =
            vars.iter().enumerate().map(|(i, v)| (v.clone(), i as u16)).collect();
        // signed lookup of p_{tuple}: zero on repeats, sign of the sorting permutation
        let signed = |tuple: &[u8]| -> Option<(u16, i64)> {
            let mut t = tuple.to_vec();
            let mut sign = 1i64;
            for i in 0..t.len() {
                for j in (i + 1)..t.len() {
                    match t[j].cmp(&t[i]) {
                        std::cmp::Ordering::Less => {
                            t.swap(i, j);
                            sign = -sign;
                        }
                        std::cmp::Ordering::Equal => return None,
                        _ => {}
                    }
                }
            }
            index.get(&t).map(|i| (*i, sign))
        };

        let mut quadrics = Vec::new();
        if s >= 1 && s + 1 <= n {
            let heads = subsets(n, s - 1);
            let tails = subsets(n, s + 1);
            for a in &heads {
                for b in &tails {
                    let mut rel: PolyVec = BTreeMap::new();
                    for (t, m) in b.iter().enumerate() {
                        let mut left = a.clone();
                        left.push(*m);
                        let Some((li, ls)) = signed(&left) else { continue };
                        let mut right = b.clone();
                        right.remove(t);
                        let (ri, rs) = signed(&right).unwrap();
                        let sign = if t % 2 == 0 { 1 } else { -1 };
                        let mut mono = vec![li, ri];
                        mono.sort_unstable();
                        add_term(
                            &mut rel,
                            mono,
                            Rational::from(BigInt::from(sign * ls * rs)),
                        );
                    }
                    rel.retain(|_, c| !c.is_zero());
                    if !rel.is_empty() {
                        quadrics.push(rel);
                    }
                }
            }
        }
        PlueckerRing { n, s, vars, quadrics }
    }

    fn monomials(&self, k: usize) -> Vec<Monomial> {
        let v = self.vars.len() as u16;
        let mut out = Vec::new();
        let mut cur: Monomial = Vec::new();
        fn rec(v: u16, k: usize, start: u16, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for x in start..v {
                cur.push(x);
                rec(v, k, x, cur, out);
                cur.pop();
            }
        }
        rec(v, k, 0, &mut cur, &mut out);
        out
    }

    /// Echelon of the degree-k piece of the quadric ideal.
    fn ideal_echelon(&self, k: usize) -> PolyEchelon {
        let mut ech = PolyEchelon::new();
        if k < 2 {
            return ech;
        }
        for m in self.monomials(k - 2) {
            for qd in &self.quadrics {
                ech.insert(mul_monomial(qd, &m));
            }
        }
        ech
    }

    /// Dimension of the degree-k homogeneous component of the quotient ring.
    pub fn dim(&self, k: usize) -> usize {
        let monos = self.monomials(k);
        monos.len() - self.ideal_echelon(k).rank()
    }

    /// Degree-k dimensions of the Kaehler 1-forms of the quotient:
    /// coefficients of degree k-1 against the formal dx basis, modulo
    /// d(quadrics) multiplied by monomials (coefficients reduced in the ring).
    pub fn kaehler_dim(&self, k: usize) -> usize {
        assert!(k >= 1);
        let nv = self.vars.len() as u16;
        let ring_ech = self.ideal_echelon(k - 1);
        // coordinates: monomial (degree k-1, reduced) x dx index, encoded by
        // appending the dx index after a separator slot
        let encode = |m: &Monomial, dx: u16| -> Monomial {
            let mut v = m.clone();
            v.push(u16::MAX);
            v.push(dx);
            v
        };
        let mut rel = PolyEchelon::new();
        if k >= 2 {
            for m in self.monomials(k - 2) {
                for qd in &self.quadrics {
                    // d(quadric): each degree-2 monomial {a,b} contributes
                    // x_a dx_b + x_b dx_a (with multiplicity for a = b)
                    let mut vec: PolyVec = BTreeMap::new();
                    for (mono, c) in qd {
                        let pairs: Vec<(u16, u16)> = if mono[0] == mono[1] {
                            vec![(mono[0], mono[0]), (mono[0], mono[0])]
                        } else {
                            vec![(mono[0], mono[1]), (mono[1], mono[0])]
                        };
                        for (coefvar, dxvar) in pairs {
                            let mut cm = m.clone();
                            cm.push(coefvar);
                            cm.sort_unstable();
                            // reduce the coefficient part in the ring
                            let mut coefvec: PolyVec = BTreeMap::new();
                            add_term(&mut coefvec, cm, c.clone());
                            let red = ring_ech.reduce(coefvec);
                            for (rm, rc) in red {
                                add_term(&mut vec, encode(&rm, dxvar), rc);
                            }
                        }
                    }
                    vec.retain(|_, c| !c.is_zero());
                    rel.insert(vec);
                }
            }
        }
        let ring_dim = self.dim(k - 1);
        ring_dim * nv as usize - rel.rank()
    }
}

/// Classical level dimension of the Grassmannian coordinate algebra:
/// dim V(k omega_s) * dim V(k omega_r) computed via the Pluecker oracle.
pub fn classical_level_dim(n: usize, r: usize, k: usize) -> usize {
    let s = n - r;
    PlueckerRing::new(n, s).dim(k) * PlueckerRing::new(n, r).dim(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn weyl_dims_sl2_sl3() {
        assert_eq!(weyl_dim(2, &[0]), 1);
        assert_eq!(weyl_dim(2, &[1]), 2);
        assert_eq!(weyl_dim(2, &[2]), 3);
        assert_eq!(weyl_dim(3, &[1, 1]), 8);
        assert_eq!(weyl_dim(3, &[0, 3]), 10);
        assert_eq!(weyl_dim(4, &[0, 1, 0]), 6);
        assert_eq!(weyl_dim(4, &[1, 0, 1]), 15);
        assert_eq!(weyl_dim(4, &[0, 2, 0]), 20);
        assert_eq!(weyl_dim(6, &[0, 0, 2, 0, 0]), 175);
        assert_eq!(weyl_dim(6, &[0, 1, 0, 1, 0]), 189);
        assert_eq!(weyl_dim(6, &[1, 0, 0, 0, 1]), 35);
    }

    #[test]
    fn spherical_sums() {
        // Gr(1,2): sum over n <= k of (2n+1) = (k+1)^2
        for k in 0..=3 {
            assert_eq!(spherical_dim_sum(2, 1, k), ((k + 1) * (k + 1)) as u64);
        }
        // Gr(1,3): 1 + 8 at level 1
        assert_eq!(spherical_dim_sum(3, 1, 1), 9);
        assert_eq!(spherical_dim_sum(3, 2, 1), 9);
        // Gr(2,4): 1 + 15 + 20 at level 1
        assert_eq!(spherical_dim_sum(4, 2, 1), 36);
    }

    #[test]
    fn pluecker_dims_match_weyl() {
        for (n, s, k) in [
            (2usize, 1usize, 3usize),
            (3, 1, 3),
            (3, 2, 3),
            (4, 2, 3),
            (6, 3, 2),
        ] {
            let ring = PlueckerRing::new(n, s);
            for deg in 0..=k {
                let mut lam = vec![0i64; n - 1];
                if s >= 1 && s <= n - 1 {
                    lam[s - 1] = deg as i64;
                }
                assert_eq!(
                    ring.dim(deg) as u64,
                    weyl_dim(n, &lam),
                    "n={n} s={s} deg={deg}"
                );
            }
        }
    }

    #[test]
    fn classical_level_dims() {
        assert_eq!(classical_level_dim(2, 1, 1), 4);
        assert_eq!(classical_level_dim(2, 1, 2), 9);
        assert_eq!(classical_level_dim(3, 1, 1), 9);
        assert_eq!(classical_level_dim(3, 2, 1), 9);
    }

    #[test]
    fn kaehler_dims_small() {
        // N=2, s=1: free module of rank 2 over C[x1,x2]
        let ring = PlueckerRing::new(2, 1);
        for k in 1..=4 {
            assert_eq!(ring.kaehler_dim(k), 2 * ring.dim(k - 1));
        }
        // N=3, s=2: also free (no relations survive at these degrees)
        let ring = PlueckerRing::new(3, 2);
        assert_eq!(ring.kaehler_dim(1), 3);
        assert_eq!(ring.kaehler_dim(2), 9);
        assert_eq!(ring.kaehler_dim(3), 18);
        // N=6, s=3 at degree 2: 400 ambient minus 35 quadric differentials
        let ring = PlueckerRing::new(6, 3);
        assert_eq!(ring.kaehler_dim(2), 365);
    }
}
