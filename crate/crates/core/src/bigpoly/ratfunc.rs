use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, PolyError, Series};

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: numerator and denominator share no polynomial factor,
/// their integer contents are coprime, and the lowest-order nonzero
/// coefficient of the denominator is positive. Two values are equal as
/// rational functions exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den` in canonical reduced form. Panics when `den` is
    /// the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let shared = num.content().gcd(&den.content());
        if !shared.is_one() {
            let shared = Poly::constant(shared);
            num = num.div_exact(&shared).expect("content divides");
            den = den.div_exact(&shared).expect("content divides");
        }
        if den.trailing_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Reciprocal. Panics on zero.
    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of the zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// First `n_terms` power-series coefficients at `x = 0`, labeled with
    /// the rendered rational function.
    pub fn series(&self, n_terms: usize) -> Result<Series, PolyError> {
        self.series_labeled(n_terms, self.to_string())
    }

    /// Power-series expansion via the linear recurrence induced by the
    /// denominator: `q0*a[n] = p[n] - sum_{j>=1} q[j]*a[n-j]`.
    ///
    /// Requires a denominator with nonzero constant term. Every
    /// generating function in this crate has an integer series; a
    /// non-integer coefficient is reported as an error rather than
    /// silently rounded.
    pub fn series_labeled(
        &self,
        n_terms: usize,
        origin: impl Into<String>,
    ) -> Result<Series, PolyError> {
        let q0 = self.den.constant_term();
        if q0.is_zero() {
            return Err(PolyError::ZeroConstantTerm);
        }
        let mut terms: Vec<BigInt> = Vec::with_capacity(n_terms);
        let den_deg = self.den.degree().unwrap_or(0);
        for n in 0..n_terms {
            let mut acc = self.num.coeff(n);
            for j in 1..=den_deg.min(n) {
                acc -= self.den.coeff(j) * &terms[n - j];
            }
            let (value, rem) = acc.div_rem(&q0);
            if !rem.is_zero() {
                return Err(PolyError::NonIntegerSeries(n));
            }
            terms.push(value);
        }
        Ok(Series::new(terms, origin))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics when dividing by the zero rational function.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
