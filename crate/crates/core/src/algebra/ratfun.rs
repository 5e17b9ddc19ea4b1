use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// Quotient of two polynomials in `r`, kept reduced with a monic denominator.
///
/// The canonical form is unique, so structural equality is equality of
/// rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    /// Reduce `num/den` to canonical form.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = UniPoly::gcd(&num, &den)?;
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g)?, den.exact_div(&g)?)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            return Ok(Self { num, den });
        }
        let inv = lc.recip()?;
        Ok(Self { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero() -> Self {
        Self { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self { num: p, den: UniPoly::one() }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from(n))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eval(&self, r: &Rat) -> Result<Rat> {
        let den = self.den.eval(r);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(r) / den)
    }

    fn canonical(num: UniPoly, den: UniPoly) -> Self {
        Self::new(num, den).expect("denominator of a product of nonzero denominators is nonzero")
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        RatFun::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; see [`RatFun::checked_div`].
impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs).expect("division of a rational function by zero")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> Self {
        iter.fold(RatFun::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for RatFun {
    fn product<I: Iterator<Item = RatFun>>(iter: I) -> Self {
        iter.fold(RatFun::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &UniPoly| {
            let n = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if n > 1 { format!("({p})") } else { p.to_string() }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}


#[derive(serde::Serialize, serde::Deserialize)]
struct RatFunJson {
    num: super::MultiPoly,
    den: super::MultiPoly,
}

impl serde::Serialize for RatFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunJson { num: (&self.num).into(), den: (&self.den).into() }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for RatFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = RatFunJson::deserialize(d)?;
        let num = j.num.to_unipoly().ok_or_else(|| D::Error::custom("numerator must be univariate in r"))?;
        let den = j.den.to_unipoly().ok_or_else(|| D::Error::custom("denominator must be univariate in r"))?;
        RatFun::new(num, den).map_err(D::Error::custom)
    }
}
