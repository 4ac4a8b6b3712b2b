//! Exact dense univariate polynomials in the indeterminate `k`.
//!
//! [`Poly<T>`] is generic over the coefficient ring through `num-traits`;
//! the solver works with the concrete aliases [`IntPoly`] (arbitrary-precision
//! integers) and `Poly<BigRational>` (used internally by interpolation), plus
//! the reduced-fraction wrapper [`RatPoly`].

use crate::error::{Error, Result};
use num::traits::NumAssign;
use num::{BigInt, BigRational, Integer, Num, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient ring bound: exact signed arithmetic with value semantics.
pub trait Coeff: Num + NumAssign + Signed + Clone + fmt::Debug + fmt::Display {}
impl<T> Coeff for T where T: Num + NumAssign + Signed + Clone + fmt::Debug + fmt::Display {}

/// Dense univariate polynomial; `coeffs[i]` multiplies `k^i`.
/// Normalized: no trailing zeros, the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T: Coeff> {
    coeffs: Vec<T>,
}

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;

impl<T: Coeff> Poly<T> {
    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly<T> {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Poly<T> {
        Poly { coeffs: vec![c] }.normalized()
    }

    /// The monomial `c * k^power`.
    pub fn monomial(c: T, power: usize) -> Poly<T> {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }.normalized()
    }

    /// The indeterminate `k` itself.
    pub fn var() -> Poly<T> {
        Poly::monomial(T::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Poly<T> {
        Poly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Poly<T> {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `k^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
        .normalized()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Index of the lowest nonzero coefficient, i.e. the multiplicity of
    /// zero as a root. Errors on the zero polynomial.
    pub fn zero_multiplicity(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidArg("zero polynomial has no zero multiplicity".into()))
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
        .normalized()
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly { coeffs }.normalized()
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly { coeffs }.normalized()
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Poly { coeffs }.normalized()
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "k")?;
                    } else {
                        write!(f, "k^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Integer-specific constructions
// ---------------------------------------------------------------------------

/// The falling factorial `k_(n) = k (k-1) ... (k-n+1)`; `k_(0) = 1`.
pub fn falling_factorial(n: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for i in 0..n {
        let factor = IntPoly::from_coeffs(vec![BigInt::from(-(i as i64)), BigInt::one()]);
        acc = &acc * &factor;
    }
    acc
}

impl IntPoly {
    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Coefficients as decimal strings, ascending power (JSON form).
    pub fn coeffs_decimal(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_coeffs(coeffs: &[String]) -> Result<IntPoly> {
        let parsed: std::result::Result<Vec<BigInt>, _> =
            coeffs.iter().map(|s| s.parse::<BigInt>()).collect();
        Ok(IntPoly::from_coeffs(parsed.map_err(|e| {
            Error::InvalidArg(format!("bad coefficient string: {e}"))
        })?))
    }
}

impl Poly<BigRational> {
    /// Converts to integer coefficients, or `None` if any denominator is not 1.
    pub fn try_into_int(&self) -> Option<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(IntPoly::from_coeffs(coeffs))
    }
}

/// Interpolates the unique polynomial of degree `<= degree_bound` through
/// `degree_bound + 1` points with distinct x-values, by Newton divided
/// differences over exact rationals. The result must have integer
/// coefficients; a non-integer coefficient signals a counting bug upstream
/// and is reported as an internal error.
pub fn interpolate(points: &[(BigInt, BigInt)], degree_bound: usize) -> Result<IntPoly> {
    if points.len() != degree_bound + 1 {
        return Err(Error::InvalidArg(format!(
            "need exactly {} points for degree bound {degree_bound}, got {}",
            degree_bound + 1,
            points.len()
        )));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::InvalidArg(format!("duplicate x-value {xi}")));
            }
        }
    }
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    // Divided-difference coefficients, computed in place.
    let mut dd: Vec<BigRational> = points
        .iter()
        .map(|(_, y)| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..dd.len() {
        for j in (level..dd.len()).rev() {
            let num = &dd[j] - &dd[j - 1];
            let den = &xs[j] - &xs[j - level];
            dd[j] = num / den;
        }
    }
    // Horner-style assembly of the Newton form.
    let mut acc: Poly<BigRational> = Poly::constant(dd[dd.len() - 1].clone());
    for i in (0..dd.len() - 1).rev() {
        let shift = Poly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        acc = &(&acc * &shift) + &Poly::constant(dd[i].clone());
    }
    acc.try_into_int().ok_or_else(|| {
        Error::Internal("interpolation produced non-integer coefficients".into())
    })
}

// ---------------------------------------------------------------------------
// RatPoly: an integer polynomial divided by a positive integer
// ---------------------------------------------------------------------------

/// A polynomial with rational coefficients kept as `num / den` with an
/// integer numerator polynomial and a positive denominator, reduced so
/// that `gcd(content(num), den) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    num: IntPoly,
    den: BigInt,
}

impl RatPoly {
    /// `p / m` in reduced form. `m` must be positive.
    pub fn new(num: IntPoly, den: BigInt) -> RatPoly {
        assert!(den.is_positive(), "denominator must be positive");
        let content = num
            .coeffs()
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return RatPoly {
                num,
                den: BigInt::one(),
            };
        }
        let g = content.gcd(&den);
        RatPoly {
            num: num.map_coeffs(|c| c / &g),
            den: den / g,
        }
    }

    pub fn from_int(num: IntPoly) -> RatPoly {
        RatPoly {
            num,
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn eval(&self, x: &BigInt) -> BigRational {
        BigRational::new(self.num.eval(x), self.den.clone())
    }

    /// Evaluation that must land on an integer.
    pub fn eval_int(&self, x: &BigInt) -> Result<BigInt> {
        let value = self.num.eval(x);
        let (q, r) = value.div_rem(&self.den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal(format!(
                "expected integer value at k = {x}, got {value}/{}",
                self.den
            )))
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `p / m` as a reduced [`RatPoly`]; `m >= 1` required.
pub fn div_by_const(p: &IntPoly, m: &BigInt) -> RatPoly {
    RatPoly::new(p.clone(), m.clone())
}
