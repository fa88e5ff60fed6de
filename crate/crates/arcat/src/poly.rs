//! Univariate polynomials over the rationals.
//!
//! Just enough polynomial arithmetic to split endomorphisms: Euclidean
//! division, gcd, the extended gcd (for Bezout coefficients), squarefree
//! decomposition, rational-root extraction, matrix evaluation, and the
//! minimal polynomial of an exact matrix via Krylov iteration. Nothing
//! here factors into irreducibles — the decomposition machinery only ever
//! needs *coprime* splittings, which gcds alone provide.

use crate::linalg::{rat, ExactMatrix, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial with rational coefficients, lowest degree first.
/// The zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly::from_coeffs(vec![Rat::one()])
    }

    /// `x - a`.
    pub fn linear(a: &Rat) -> Poly {
        Poly::from_coeffs(vec![-a.clone(), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0 for the purposes of this crate.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        Poly::from_coeffs(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division: returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree();
        let dl = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        // peel off the leading coefficient of r until deg r < deg d
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].clone() / &dl;
            if !f.is_zero() {
                q[k - dd] = f.clone();
                for (i, c) in d.coeffs.iter().enumerate() {
                    r[k - dd + i] -= &f * c;
                }
            }
            r.pop();
        }
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` monic with `u*self + v*other = g`.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let l = r0.leading();
        let scale = |p: &Poly| Poly::from_coeffs(p.coeffs.iter().map(|c| c / &l).collect());
        (scale(&r0), scale(&s0), scale(&t0))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// Squarefree decomposition (Yun): returns `[(s_1, 1), (s_2, 2), ...]`
    /// with `self = lc * prod s_i^i`, the `s_i` monic, squarefree, pairwise
    /// coprime, and nonconstant entries only.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let f = self.monic();
        if f.is_constant() {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.is_constant() {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1usize;
        while !b.is_constant() {
            let s = b.gcd(&d);
            if !s.is_constant() {
                out.push((s.clone(), i));
            }
            b = b.div_rem(&s).0;
            c = d.div_rem(&s).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// All rational roots with multiplicity stripped (each root listed once).
    /// Uses the classical numerator/denominator divisor search on a
    /// content-cleared copy.
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_zero() || self.is_constant() {
            return vec![];
        }
        // clear denominators
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        // strip trailing zero coefficients => root 0
        let mut roots = Vec::new();
        let mut ints = ints;
        if ints.first().is_some_and(|c| c.is_zero()) {
            roots.push(Rat::zero());
            while ints.first().is_some_and(|c| c.is_zero()) {
                ints.remove(0);
            }
        }
        if ints.len() <= 1 {
            return roots;
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let eval = |x: &Rat| -> Rat {
            let mut acc = Rat::zero();
            for c in ints.iter().rev() {
                acc = acc * x + Rat::from_integer(c.clone());
            }
            acc
        };
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                    if eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand.clone());
                    }
                }
            }
        }
        roots
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        let n = m.rows();
        assert_eq!(n, m.cols(), "eval_matrix needs a square matrix");
        let mut acc = ExactMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                *acc.at_mut(i, i) += c;
            }
        }
        acc
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // plain trial division; the constants involved are tiny in practice
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Minimal polynomial of a square rational matrix, monic.
///
/// Builds the Krylov flags `I, A, A^2, ...` as vectors of length `n^2`
/// and stops at the first linear dependence; the dependence coefficients
/// are the minimal polynomial. The `0 x 0` matrix reports `x` by
/// convention (it acts as zero on the zero space) — callers never rely
/// on that case.
pub fn min_poly(m: &ExactMatrix) -> Poly {
    let n = m.rows();
    assert_eq!(n, m.cols(), "min_poly needs a square matrix");
    if n == 0 {
        return Poly::from_coeffs(vec![Rat::zero(), Rat::one()]);
    }
    let mut powers: Vec<ExactMatrix> = vec![ExactMatrix::identity(n)];
    loop {
        // try to express the next power in terms of the ones we have
        let next = powers.last().unwrap().mul(m);
        let cols: Vec<Vec<Rat>> = powers.iter().map(|p| p.flatten()).collect();
        let basis = ExactMatrix::from_columns(n * n, &cols);
        if let Some(x) = basis.solve(&next.flatten()) {
            // next = sum x_i * A^i  =>  min poly = x^k - sum x_i x^i
            let mut coeffs: Vec<Rat> = x.into_iter().map(|c| -c).collect();
            coeffs.push(Rat::one());
            return Poly::from_coeffs(coeffs);
        }
        powers.push(next);
        assert!(
            powers.len() <= n + 1,
            "Krylov iteration failed to terminate"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn division_with_remainder() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let f = p(&[-1, 0, 0, 1]);
        let d = p(&[-1, 1]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let g = p(&[-1, 1]).gcd(&p(&[1, 1]));
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn xgcd_produces_bezout_witnesses() {
        let a = p(&[0, 1]).mul(&p(&[0, 1])); // x^2
        let b = p(&[-1, 1]); // x - 1
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one());
    }

    #[test]
    fn squarefree_decomposition_splits_multiplicities() {
        // (x - 1)^2 * (x + 2)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[2, 1]), 1));
        assert_eq!(dec[1], (p(&[-1, 1]), 2));
    }

    #[test]
    fn rational_roots_found_with_denominators() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let f = p(&[-3, 5, 2]);
        let mut roots = f.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![rat(-3), frac(1, 2)]);
    }

    #[test]
    fn min_poly_of_projection_is_x2_minus_x() {
        let m = ExactMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(min_poly(&m), p(&[0, -1, 1])); // x^2 - x
    }

    #[test]
    fn min_poly_of_identity_is_x_minus_one() {
        assert_eq!(min_poly(&ExactMatrix::identity(3)), p(&[-1, 1]));
    }

    #[test]
    fn min_poly_annihilates_matrix() {
        let m = ExactMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[2, 1, -1]]);
        let mp = min_poly(&m);
        assert!(mp.eval_matrix(&m).is_zero());
    }
}
