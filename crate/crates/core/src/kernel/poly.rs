//! Univariate polynomials and their factorization.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Dense polynomial, lowest degree first. The leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field.one())
    }

    /// The monomial `t`.
    pub fn t(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// The linear polynomial `t - root`.
    pub fn linear(root: &Scalar) -> Self {
        let f = root.field();
        Poly::new(f, vec![-root, f.one()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor
            .leading()
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lc_inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * d);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_u64(i as u64))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.field).rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }

    fn canonical_cmp(&self, other: &Poly) -> Ordering {
        // degree first, then negated lower coefficients from the constant
        // term up, so linear factors t - r come out in ascending root order
        self.degree().cmp(&other.degree()).then_with(|| {
            let key = |p: &Poly| -> Vec<Scalar> {
                p.coeffs[..p.coeffs.len().saturating_sub(1)]
                    .iter()
                    .map(|c| -c)
                    .collect()
            };
            key(self).cmp(&key(other))
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 {
                terms.push(c.to_string());
            } else if c.is_one() {
                terms.push(mono);
            } else {
                terms.push(format!("{c}*{mono}"));
            }
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// A factorization `f = leading * prod(factor^multiplicity)` with monic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: Scalar,
    pub factors: Vec<(Poly, usize)>,
    /// False when some factor over Q may still be reducible (degree ≥ 4 with
    /// no rational root); always true over GF(p).
    pub complete: bool,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.leading.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Roots of the linear factors, ascending.
    pub fn linear_roots(&self) -> Vec<Scalar> {
        let mut roots: Vec<Scalar> = self
            .factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, _)| -&f.coeff(0))
            .collect();
        roots.sort();
        roots
    }

    pub fn splits_linearly(&self) -> bool {
        self.factors.iter().all(|(f, _)| f.degree() == Some(1))
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with `g`
/// squarefree and pairwise coprime, `f = prod g^i`.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y);
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w);
    }
    if let FieldSpec::PrimeField(p) = field {
        if !c.is_one() {
            // c is a p-th power: coefficients at multiples of p
            let root: Vec<Scalar> = c.coeffs().iter().step_by(p as usize).cloned().collect();
            let root = Poly::new(field, root);
            for (g, m) in squarefree_decomposition(&root) {
                out.push((g, m * p as usize));
            }
        }
    }
    out
}

/// Berlekamp's algorithm for a monic squarefree polynomial over GF(p).
fn berlekamp(f: &Poly, p: u64) -> Vec<Poly> {
    let field = f.field();
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return vec![f.clone()];
    }
    // column i of q holds x^{ip} mod f
    let xp = Poly::t(field).pow_mod(p, f);
    let mut q = Matrix::zeros(field, n, n);
    let mut cur = Poly::one(field);
    for i in 0..n {
        for k in 0..n {
            q.set(k, i, cur.coeff(k));
        }
        cur = cur.mul(&xp).rem(f);
    }
    let kernel = q.sub(&Matrix::identity(field, n)).kernel();
    let k = kernel.cols();
    let mut factors = vec![f.clone()];
    for v in kernel.column_vectors() {
        if factors.len() == k {
            break;
        }
        let g = Poly::new(field, v);
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if h.degree() == Some(1) {
                next.push(h);
                continue;
            }
            for s in 0..p {
                let d = h.gcd(&g.sub(&Poly::constant(field.from_u64(s))));
                if d.degree().unwrap_or(0) > 0 {
                    next.push(d);
                }
            }
        }
        factors = next;
    }
    factors
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots of a squarefree polynomial over Q, ascending.
fn rational_roots(f: &Poly) -> Vec<Scalar> {
    let field = f.field();
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        lcm = lcm.lcm(c.as_rational().expect("rational").denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(field.zero());
    }
    let a0 = &ints[low];
    let an = ints.last().unwrap();
    if f.degree().unwrap_or(0) > low {
        let mut candidates = Vec::new();
        for num in divisors(a0) {
            for den in divisors(an) {
                let r = BigRational::new(num.clone(), den.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            let s = Scalar::Rational(c);
            if f.eval(&s).is_zero() {
                roots.push(s);
            }
        }
    }
    roots.sort();
    roots
}

/// Factor a nonzero polynomial. Over GF(p) the factorization is complete;
/// over Q only linear factors are split off and any remaining cofactor is
/// reported as a single factor.
pub fn factor_over_field(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading();
    let monic = f.monic();
    let mut factors = Vec::new();
    let mut complete = true;
    for (g, m) in squarefree_decomposition(&monic) {
        match f.field() {
            FieldSpec::PrimeField(p) => {
                for h in berlekamp(&g, p) {
                    factors.push((h, m));
                }
            }
            FieldSpec::Rationals => {
                let mut rest = g.clone();
                for r in rational_roots(&g) {
                    let lin = Poly::linear(&r);
                    rest = rest.exact_div(&lin);
                    factors.push((lin, m));
                }
                if rest.degree().unwrap_or(0) > 0 {
                    if rest.degree().unwrap() >= 4 {
                        complete = false;
                    }
                    factors.push((rest.monic(), m));
                }
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization {
        leading,
        factors,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const F5: FieldSpec = FieldSpec::PrimeField(5);
    const Q: FieldSpec = FieldSpec::Rationals;

    fn linear5(root: i64) -> Poly {
        Poly::linear(&F5.from_i64(root))
    }

    #[test]
    fn t_squared_minus_one_over_f5() {
        let f = Poly::from_i64(F5, &[-1, 0, 1]);
        let fac = factor_over_field(&f).unwrap();
        assert_eq!(fac.factors, vec![(linear5(1), 1), (linear5(4), 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn t_squared_plus_one_over_f5() {
        let f = Poly::from_i64(F5, &[1, 0, 1]);
        let fac = factor_over_field(&f).unwrap();
        assert_eq!(fac.factors, vec![(linear5(2), 1), (linear5(3), 1)]);
    }

    #[test]
    fn t_squared_minus_two_is_irreducible_over_f5() {
        let f = Poly::from_i64(F5, &[-2, 0, 1]);
        let fac = factor_over_field(&f).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
        assert!(!fac.splits_linearly());
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            factor_over_field(&Poly::zero(F5)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn pth_powers_and_multiplicities() {
        // (t - 1)^5 (t^2 + 2) over GF(5)
        let mut f = Poly::from_i64(F5, &[2, 0, 1]);
        for _ in 0..5 {
            f = f.mul(&linear5(1));
        }
        let fac = factor_over_field(&f.scale(&F5.from_u64(3))).unwrap();
        assert_eq!(fac.leading, F5.from_u64(3));
        assert_eq!(
            fac.factors,
            vec![(linear5(1), 5), (Poly::from_i64(F5, &[2, 0, 1]), 1)]
        );
    }

    #[test]
    fn rational_linear_splitting() {
        // 2t^3 - 3t^2 + t = t(2t - 1)(t - 1)
        let f = Poly::from_i64(Q, &[0, 1, -3, 2]);
        let fac = factor_over_field(&f).unwrap();
        assert!(fac.splits_linearly());
        assert_eq!(
            fac.linear_roots(),
            vec![Q.zero(), Q.from_ratio(1, 2).unwrap(), Q.one()]
        );
        assert_eq!(fac.expand(), f);
        // t^2 + 1 has no rational root
        let g = Poly::from_i64(Q, &[1, 0, 1]);
        let fac = factor_over_field(&g).unwrap();
        assert!(!fac.splits_linearly());
        assert!(fac.complete);
    }

    fn poly5() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(0u64..5, 1..6)
            .prop_map(|v| Poly::new(F5, v.into_iter().map(|x| F5.from_u64(x)).collect()))
    }

    fn is_irreducible_brute(f: &Poly) -> bool {
        // no monic factor of degree 1..=deg/2
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            let count = 5usize.pow(d as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    coeffs.push(F5.from_u64((k % 5) as u64));
                    k /= 5;
                }
                coeffs.push(F5.one());
                if f.rem(&Poly::new(F5, coeffs)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn factorization_reconstructs_and_is_irreducible(f in poly5()) {
            prop_assume!(!f.is_zero());
            let fac = factor_over_field(&f).unwrap();
            prop_assert_eq!(fac.expand(), f);
            for (g, _) in &fac.factors {
                prop_assert!(is_irreducible_brute(g));
            }
        }

        #[test]
        fn factors_of_product_refine(f in poly5(), g in poly5()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let mut expected: std::collections::BTreeMap<Vec<Scalar>, usize> = Default::default();
            for (h, m) in factor_over_field(&f).unwrap().factors.into_iter()
                .chain(factor_over_field(&g).unwrap().factors) {
                *expected.entry(h.coeffs().to_vec()).or_default() += m;
            }
            let mut got: std::collections::BTreeMap<Vec<Scalar>, usize> = Default::default();
            for (h, m) in factor_over_field(&f.mul(&g)).unwrap().factors {
                *got.entry(h.coeffs().to_vec()).or_default() += m;
            }
            prop_assert_eq!(got, expected);
        }
    }
}
