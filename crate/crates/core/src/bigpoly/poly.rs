use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// `coeffs[i]` holds the coefficient of `x^i`. Canonical form: the
/// highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// Builds a polynomial from ascending coefficients, trimming
    /// trailing zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from machine integers, ascending powers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest-order nonzero coefficient (zero for the zero polynomial).
    pub fn trailing_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the absolute coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the original signs.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let content = self.content();
        Poly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Flips the overall sign if the leading coefficient is negative.
    pub fn with_positive_leading(&self) -> Poly {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Primitive greatest common divisor with positive leading
    /// coefficient, via a primitive pseudo-remainder sequence.
    ///
    /// Panics when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials is undefined"
        );
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.with_positive_leading()
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a  mod  d`.
    fn pseudo_rem(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut scale_left = match self.degree() {
            Some(da) if da >= dd => da - dd + 1,
            _ => 0,
        };
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading_coeff();
            let term = divisor.scalar_mul(&factor).shift(dr - dd);
            rem = &rem.scalar_mul(&lead) - &term;
            scale_left -= 1;
        }
        for _ in 0..scale_left {
            rem = rem.scalar_mul(&lead);
        }
        rem
    }

    /// Exact division; `Err(NotExact)` if the divisor does not divide
    /// `self` over the integers. Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        assert!(!divisor.is_zero(), "exact division by the zero polynomial");
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dd = divisor.degree().unwrap();
        let da = self.degree().unwrap();
        if da < dd {
            return Err(PolyError::NotExact);
        }
        let lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); da - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return Err(PolyError::NotExact);
            }
            let (q, r) = rem.leading_coeff().div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::NotExact);
            }
            rem = &rem - &divisor.scalar_mul(&q).shift(dr - dd);
            quot[dr - dd] = q;
        }
        Ok(Poly::from_coeffs(quot))
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    /// Ascending-power rendering, e.g. `1 - 3x^2 + x^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
