use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial in `r` over the rationals.
///
/// Coefficients are stored from the constant term upwards and never carry
/// trailing zeros, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a + b·r`.
    pub fn linear(a: impl Into<Rat>, b: impl Into<Rat>) -> Self {
        Self::from_coeffs(vec![a.into(), b.into()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q·divisor + rem` with `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dlead_inv = dlead.recip()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &dlead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Monic greatest common divisor over Q.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, rem) = x.div_rem(&y)?;
            x = y;
            y = rem.monic();
        }
        Ok(x.monic())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rat::zero();
        let coeffs = (0..n)
            .map(|i| {
                f(self.coeffs.get(i).unwrap_or(&zero), other.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        Self::from_coeffs(coeffs)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "r")?,
                (1, false) => write!(f, "{mag}*r")?,
                (_, true) => write!(f, "r^{i}")?,
                (_, false) => write!(f, "{mag}*r^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        let r2m1 = UniPoly::from_ints(&[-1, 0, 1]);
        let rm1 = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(UniPoly::gcd(&r2m1, &rm1).unwrap(), rm1);
        let a = UniPoly::from_ints(&[1, 1]);
        let b = UniPoly::from_ints(&[2, 1]);
        assert_eq!(UniPoly::gcd(&a, &b).unwrap(), UniPoly::one());
        let r = UniPoly::from_ints(&[0, 3]);
        assert_eq!(UniPoly::gcd(&UniPoly::zero(), &r).unwrap(), UniPoly::r());
        assert!(matches!(UniPoly::gcd(&UniPoly::zero(), &UniPoly::zero()), Err(Error::UndefinedGcd)));
    }

    #[test]
    fn division() {
        let a = &UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[2, 1]);
        assert_eq!(a.exact_div(&UniPoly::from_ints(&[1, 1])).unwrap(), UniPoly::from_ints(&[2, 1]));
        assert!(matches!(a.exact_div(&UniPoly::r()), Err(Error::InexactDivision)));
        assert!(matches!(a.div_rem(&UniPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[60, 238, 275, 90, 9]).to_string(), "60 + 238*r + 275*r^2 + 90*r^3 + 9*r^4");
        assert_eq!(UniPoly::from_ints(&[0, -1, 1]).to_string(), "-r + r^2");
    }
}
