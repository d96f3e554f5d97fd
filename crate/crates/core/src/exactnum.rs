//! Exact rational arithmetic and integer linear algebra.
//!
//! Everything here is exact: rationals are reduced `BigInt` fractions and all
//! matrix computations (determinant, definiteness, Smith normal form,
//! signature) run over the integers or rationals, never floats.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

/// An exact reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ExactError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Smallest integer `>= self`.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Parses `"a/b"` or a plain integer `"a"`.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::ParseRational(s.to_string());
        match s.split_once('/') {
            Some((a, b)) => {
                let numer: BigInt = a.trim().parse().map_err(|_| bad())?;
                let denom: BigInt = b.trim().parse().map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(ExactError::ZeroDenominator);
                }
                Rational::new(numer, denom)
            }
            None => {
                let n: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(Rational::from_int(n))
            }
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

/// A square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Result<Self, ExactError> {
        if entries.len() != dim * dim {
            return Err(ExactError::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim, "rows must form a square matrix");
                r.iter().map(|&x| BigInt::from(x))
            })
            .collect();
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        if self.dim == 0 {
            return BigInt::one();
        }
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                // pivot search below row k
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j])
                        / &prev;
                    a[i * n + j] = v;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Leading principal minors `det(M[..k])` for k = 1..=dim.
    pub fn leading_principal_minors(&self) -> Vec<BigInt> {
        (1..=self.dim).map(|k| self.submatrix_det(k)).collect()
    }

    fn submatrix_det(&self, k: usize) -> BigInt {
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix { dim: k, entries }.det()
    }

    /// True iff the k-th leading principal minor has sign (-1)^k for all k.
    pub fn is_negative_definite(&self) -> Result<bool, ExactError> {
        if !self.is_symmetric() {
            return Err(ExactError::NotSymmetric);
        }
        for (k, minor) in self.leading_principal_minors().iter().enumerate() {
            let want_negative = k % 2 == 0;
            let ok = if want_negative {
                minor.is_negative()
            } else {
                minor.is_positive()
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Signature (n_plus, n_minus, n_zero) of a symmetric matrix, by exact
    /// congruence diagonalization over the rationals.
    pub fn signature(&self) -> Result<(usize, usize, usize), ExactError> {
        if !self.is_symmetric() {
            return Err(ExactError::NotSymmetric);
        }
        let n = self.dim;
        let mut a: Vec<BigRational> = self
            .entries
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        let at = |a: &Vec<BigRational>, i: usize, j: usize| a[i * n + j].clone();
        let (mut plus, mut minus, mut zero) = (0usize, 0usize, 0usize);
        let mut live: Vec<usize> = (0..n).collect();
        while !live.is_empty() {
            // prefer a nonzero diagonal pivot
            let pivot = live.iter().copied().find(|&i| !at(&a, i, i).is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    // all-zero diagonal: a nonzero off-diagonal pair, or done
                    let pair = live
                        .iter()
                        .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i < j && !at(&a, i, j).is_zero());
                    match pair {
                        Some((i, j)) => {
                            // row/col addition makes the diagonal nonzero
                            for c in 0..n {
                                let v = at(&a, j, c);
                                a[i * n + c] += v;
                            }
                            for r in 0..n {
                                let v = at(&a, r, j);
                                a[r * n + i] += v;
                            }
                            i
                        }
                        None => {
                            zero += live.len();
                            break;
                        }
                    }
                }
            };
            let d = at(&a, p, p);
            if d.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            live.retain(|&i| i != p);
            // clear row/column p on the remaining block
            for &i in &live {
                let f = at(&a, i, p) / d.clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = at(&a, p, c) * f.clone();
                    a[i * n + c] -= v;
                }
                for r in 0..n {
                    let v = at(&a, r, p) * f.clone();
                    a[r * n + i] -= v;
                }
            }
        }
        Ok((plus, minus, zero))
    }

    /// Smith normal form over the integers.
    pub fn smith_normal_form(&self) -> SNFResult {
        let n = self.dim;
        let mut a = self.entries.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * n + j].clone();
        let mut diag: Vec<BigInt> = Vec::with_capacity(n);
        let mut t = 0usize;
        while t < n {
            // pivot: minimal nonzero absolute value in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !a[i * n + j].is_zero()
                        && pivot
                            .map(|(pi, pj)| a[i * n + j].abs() < at(&a, pi, pj).abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match pivot {
                Some(p) => p,
                None => break,
            };
            for c in 0..n {
                a.swap(t * n + c, pi * n + c);
            }
            for r in 0..n {
                a.swap(r * n + t, r * n + pj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = at(&a, i, t).div_floor(&at(&a, t, t));
                if !q.is_zero() {
                    for c in 0..n {
                        let v = at(&a, t, c) * &q;
                        a[i * n + c] -= v;
                    }
                }
                if !a[i * n + t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = at(&a, t, j).div_floor(&at(&a, t, t));
                if !q.is_zero() {
                    for r in 0..n {
                        let v = at(&a, r, t) * &q;
                        a[r * n + j] -= v;
                    }
                }
                if !a[t * n + j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue; // remainders left; a smaller pivot exists next round
            }
            diag.push(at(&a, t, t).abs());
            t += 1;
        }
        // enforce the divisibility chain d1 | d2 | ...
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..diag.len().saturating_sub(1) {
                let (d1, d2) = (diag[i].clone(), diag[i + 1].clone());
                if !(&d2 % &d1).is_zero() {
                    let g = d1.gcd(&d2);
                    let l = (&d1 * &d2) / &g;
                    diag[i] = g;
                    diag[i + 1] = l;
                    changed = true;
                }
            }
        }
        let zeros = n - diag.len();
        diag.extend(std::iter::repeat(BigInt::zero()).take(zeros));
        SNFResult {
            invariant_factors: diag,
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Invariant factors of an integer matrix: each nonzero factor divides the
/// next, zeros (the corank) come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SNFResult {
    pub invariant_factors: Vec<BigInt>,
}

impl SNFResult {
    /// Number of zero invariant factors.
    pub fn corank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len() - self.corank()
    }

    /// True iff every nonzero invariant factor is 1 (free cokernel).
    pub fn cokernel_is_free(&self) -> bool {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .all(|d| d.is_one())
    }

    pub fn nonzero_product(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .product()
    }
}

/// Exact integer square root test: `Some(r)` iff `n == r*r` with `r >= 0`.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.dim();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let mut sub = Vec::with_capacity((n - 1) * (n - 1));
            for i in 1..n {
                for c in 0..n {
                    if c != j {
                        sub.push(m.get(i, c).clone());
                    }
                }
            }
            let minor = IntMatrix::new(n - 1, sub).unwrap();
            let term = m.get(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn random_matrix(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> IntMatrix {
        let entries = (0..dim * dim)
            .map(|_| big(rng.gen_range(-bound..=bound)))
            .collect();
        IntMatrix::new(dim, entries).unwrap()
    }

    fn path_matrix(weights: &[i64]) -> IntMatrix {
        let n = weights.len();
        let mut m = IntMatrix::zeros(n);
        for (i, &w) in weights.iter().enumerate() {
            m.set(i, i, big(w));
            if i + 1 < n {
                m.set(i, i + 1, BigInt::one());
                m.set(i + 1, i, BigInt::one());
            }
        }
        m
    }

    #[test]
    fn det_examples() {
        assert_eq!(IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).det(), big(3));
        assert_eq!(IntMatrix::from_rows(&[vec![-1]]).det(), big(-1));
        // |det| of the (-2,-2,-3,-4) path equals the numerator of [2,2,3,4]^- = 25/18
        assert_eq!(path_matrix(&[-2, -2, -3, -4]).det().abs(), big(25));
    }

    #[test]
    fn negative_definite_examples() {
        let m = IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]);
        assert!(m.is_negative_definite().unwrap());
        let z = IntMatrix::from_rows(&[vec![0]]);
        assert!(!z.is_negative_definite().unwrap());
        // (-2,-1,-2) path is degenerate: det = 0
        let d = path_matrix(&[-2, -1, -2]);
        assert_eq!(d.det(), BigInt::zero());
        assert!(!d.is_negative_definite().unwrap());
    }

    #[test]
    fn non_symmetric_rejected() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]);
        assert_eq!(m.is_negative_definite(), Err(ExactError::NotSymmetric));
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.smith_normal_form().invariant_factors, vec![big(1), big(6)]);
        let id = IntMatrix::identity(3);
        assert_eq!(
            id.smith_normal_form().invariant_factors,
            vec![big(1), big(1), big(1)]
        );
        let d = path_matrix(&[-2, -1, -2]);
        assert_eq!(
            d.smith_normal_form().invariant_factors,
            vec![big(1), big(1), big(0)]
        );
    }

    #[test]
    fn snf_product_matches_det_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let dim = rng.gen_range(1..=5);
            let m = random_matrix(&mut rng, dim, 6);
            let det = m.det();
            if det.is_zero() {
                continue;
            }
            let snf = m.smith_normal_form();
            assert_eq!(snf.corank(), 0);
            assert_eq!(snf.nonzero_product(), det.abs());
            for w in snf.invariant_factors.windows(2) {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let dim = rng.gen_range(1..=6);
            let m = random_matrix(&mut rng, dim, 5);
            assert_eq!(m.det(), det_cofactor(&m));
        }
    }

    #[test]
    fn signature_of_small_matrices() {
        let m = IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]);
        assert_eq!(m.signature().unwrap(), (0, 2, 0));
        let d = path_matrix(&[-2, -1, -2]);
        assert_eq!(d.signature().unwrap(), (0, 2, 1));
        let mixed = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(mixed.signature().unwrap(), (1, 1, 0));
        let p = path_matrix(&[2, 2, 3, 2]);
        assert_eq!(p.signature().unwrap(), (4, 0, 0));
    }

    #[test]
    fn signature_counts_match_definiteness_on_random_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..300 {
            let dim = rng.gen_range(1..=5);
            let mut m = random_matrix(&mut rng, dim, 4);
            for i in 0..dim {
                for j in 0..i {
                    let v = m.get(i, j).clone();
                    m.set(j, i, v);
                }
            }
            let (p, mi, z) = m.signature().unwrap();
            assert_eq!(p + mi + z, dim);
            assert_eq!(m.is_negative_definite().unwrap(), mi == dim);
            assert_eq!(z == 0, !m.det().is_zero());
        }
    }

    #[test]
    fn rational_parse_and_display() {
        let r: Rational = "32/7".parse().unwrap();
        assert_eq!(r, Rational::new(32, 7).unwrap());
        assert_eq!(r.to_string(), "32/7");
        let i: Rational = "-4".parse().unwrap();
        assert_eq!(i, Rational::from_int(-4));
        assert_eq!(i.to_string(), "-4");
        let reduced = Rational::new(6, -4).unwrap();
        assert_eq!(reduced.to_string(), "-3/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_ceil_and_recip() {
        let r = Rational::new(7, 2).unwrap();
        assert_eq!(r.ceil_int(), big(4));
        assert_eq!(Rational::new(-7, 2).unwrap().ceil_int(), big(-3));
        assert_eq!(Rational::from_int(3).ceil_int(), big(3));
        assert_eq!(r.recip().unwrap(), Rational::new(2, 7).unwrap());
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn perfect_sqrt_detects_squares() {
        assert_eq!(perfect_sqrt(&big(400)), Some(big(20)));
        assert_eq!(perfect_sqrt(&big(64)), Some(big(8)));
        assert_eq!(perfect_sqrt(&big(0)), Some(big(0)));
        assert_eq!(perfect_sqrt(&big(50)), None);
        assert_eq!(perfect_sqrt(&big(-4)), None);
    }
}
