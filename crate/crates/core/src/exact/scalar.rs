//! Exact scalars: rationals and Gaussian rationals.
//!
//! A [`Scalar`] is either a reduced rational or a Gaussian rational with a
//! nonzero imaginary part. Purely real Gaussian values are demoted to the
//! rational variant on construction, so structural equality coincides with
//! numerical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// An exact number in `Q` or `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Real and imaginary parts; invariant: imaginary part is nonzero.
    Gaussian(BigRational, BigRational),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::Gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Reduced fraction `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    /// Canonical constructor: demotes a zero imaginary part.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rational(re)
        } else {
            Scalar::Gaussian(re, im)
        }
    }

    pub fn gaussian_int(re: i64, im: i64) -> Self {
        Scalar::gaussian(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn re(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Gaussian(re, _) => re.clone(),
        }
    }

    pub fn im(&self) -> BigRational {
        match self {
            Scalar::Rational(_) => BigRational::zero(),
            Scalar::Gaussian(_, im) => im.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.clone()),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(re.clone(), -im.clone()),
        }
    }

    /// Sign of a real scalar: -1, 0 or 1. Errors on non-real input.
    pub fn sign(&self) -> Result<i8, ExactError> {
        match self {
            Scalar::Rational(r) => Ok(if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }),
            Scalar::Gaussian(..) => Err(ExactError::NotReal),
        }
    }

    /// `re^2 + im^2`, always a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        let re = self.re();
        let im = self.im();
        &re * &re + &im * &im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Gaussian(re, im) => {
                let n = self.norm_sq();
                Scalar::gaussian(re / &n, -im / &n)
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Gaussian(..) => f64::NAN,
        }
    }

    fn parts(&self) -> (BigRational, BigRational) {
        (self.re(), self.im())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        Scalar::gaussian(a + c, b + d)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        Scalar::gaussian(a - c, b - d)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Fast path keeps plain rationals out of the Gaussian branch.
        if let (Scalar::Rational(a), Scalar::Rational(c)) = (self, rhs) {
            return Scalar::Rational(a * c);
        }
        let (a, b) = self.parts();
        let (c, d) = rhs.parts();
        Scalar::gaussian(&a * &c - &b * &d, &a * &d + &b * &c)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r.clone()),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(-re.clone(), -im.clone()),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `a/b` for rationals (denominator elided when 1),
    /// `a/b+c/d*i` or `a/b-c/d*i` for Gaussian rationals. No spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Gaussian(re, im) => {
                let sign = if im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}*i", fmt_rational(re), sign, fmt_rational(&im.abs()))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

impl FromStr for Scalar {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse(s.to_string());
        if let Some(head) = s.strip_suffix("*i") {
            // Split at the sign of the imaginary part: the last '+' or '-'
            // that is not a leading sign and not part of a fraction.
            let split = head
                .char_indices()
                .rev()
                .find(|(i, c)| *i > 0 && (*c == '+' || *c == '-') && head.as_bytes()[i - 1] != b'/')
                .map(|(i, _)| i);
            match split {
                Some(idx) => {
                    let re = parse_rational(&head[..idx])?;
                    let sign = &head[idx..=idx];
                    let im = parse_rational(&head[idx + 1..])?;
                    let im = if sign == "-" { -im } else { im };
                    Ok(Scalar::gaussian(re, im))
                }
                // A bare "c*i" is accepted on input.
                None => Ok(Scalar::gaussian(num::zero(), parse_rational(head)?)),
            }
        } else if s.contains('i') {
            Err(bad())
        } else {
            Ok(Scalar::Rational(parse_rational(s)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_with_zero_imag_equals_rational() {
        let g = Scalar::gaussian(BigRational::new(3.into(), 4.into()), BigRational::zero());
        assert_eq!(g, Scalar::ratio(3, 4));
        assert!(g.is_real());
    }

    #[test]
    fn arithmetic() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
        let z = Scalar::gaussian_int(1, 2);
        let w = Scalar::gaussian_int(1, -2);
        assert_eq!(&z * &w, Scalar::from_int(5));
        assert_eq!(&z + &w, Scalar::from_int(2));
        assert_eq!(&(&z / &z), &Scalar::one());
        assert_eq!(z.conj(), w);
    }

    #[test]
    fn rendering_and_parsing() {
        let cases = ["0", "1", "-2", "3/4", "-5/7", "1+1*i", "1/2-3/4*i", "0+1*i", "-1-1*i"];
        for c in cases {
            let s: Scalar = c.parse().unwrap();
            assert_eq!(s.to_string(), c.to_string(), "round trip of {c}");
        }
        // Accepted on input, canonicalized on output.
        assert_eq!("2*i".parse::<Scalar>().unwrap().to_string(), "0+2*i");
        assert_eq!("1+0*i".parse::<Scalar>().unwrap().to_string(), "1");
        assert!("i".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn sign_of_real_only() {
        assert_eq!(Scalar::ratio(-2, 5).sign().unwrap(), -1);
        assert_eq!(Scalar::zero().sign().unwrap(), 0);
        assert!(Scalar::i().sign().is_err());
    }
}
