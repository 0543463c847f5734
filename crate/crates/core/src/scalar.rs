//! Exact Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of the field ℚ(i).
///
/// Both components are kept normalized by `BigRational` (positive denominator,
/// lowest terms), so derived equality is exact structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`; `None` if a denominator is zero.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Option<Self> {
        if re_den == 0 || im_den == 0 {
            return None;
        }
        Some(Self::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        ))
    }

    /// Gaussian integer `re + im·i`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn i() -> Self {
        Self::gaussian(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Field norm `a² + b²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// A square root inside ℚ(i), if one exists.
    ///
    /// For `z = a + bi`, a root `x + yi` needs `|z| = √(a²+b²)` rational and
    /// `x² = (a + |z|)/2` a rational square.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let x_sq = (&self.re + &modulus) / &two;
        if x_sq.is_zero() {
            // z is a non-positive real: root is purely imaginary.
            let y = rational_sqrt(&(-&self.re))?;
            return Some(Self::new(BigRational::zero(), y));
        }
        let x = rational_sqrt(&x_sq)?;
        let y = &self.im / (&two * &x);
        Some(Self::new(x, y))
    }

    /// Total order by `(re, im)`, used only for deterministic output ordering.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    /// Least common multiple of the two component denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }
}

/// Square root of a non-negative rational when it is a perfect square.
pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_real() && rhs.is_real() {
            return GaussianRational::from(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like `BigRational`.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in ℚ(i)");
        self * &inv
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $Trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im, false),
            (false, false) => {
                write!(f, "{}", self.re)?;
                write_imag(f, &self.im, true)
            }
        }
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &BigRational, signed: bool) -> fmt::Result {
    let sign = if im.is_negative() {
        "-"
    } else if signed {
        "+"
    } else {
        ""
    };
    let abs = im.abs();
    if abs.is_one() {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{abs}i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON form of a big integer: a number when it fits in `i64`, else a string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    pub(crate) fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntRepr::Small(v),
            None => IntRepr::Big(n.to_string()),
        }
    }

    pub(crate) fn into_big(self) -> Result<BigInt, String> {
        match self {
            IntRepr::Small(v) => Ok(v.into()),
            IntRepr::Big(s) => s.parse().map_err(|_| format!("invalid integer {s:?}")),
        }
    }
}

/// `[num, den]` pair for one rational component.
#[derive(Serialize, Deserialize)]
pub(crate) struct RationalRepr(IntRepr, IntRepr);

impl RationalRepr {
    pub(crate) fn from_rational(q: &BigRational) -> Self {
        RationalRepr(IntRepr::from_big(q.numer()), IntRepr::from_big(q.denom()))
    }

    /// Strict decoding: positive denominator, lowest terms.
    pub(crate) fn into_rational(self) -> Result<BigRational, String> {
        let num = self.0.into_big()?;
        let den = self.1.into_big()?;
        parse_reduced(num, den)
    }
}

/// Accepts `num/den` only when already normalized.
pub(crate) fn parse_reduced(num: BigInt, den: BigInt) -> Result<BigRational, String> {
    if !den.is_positive() {
        return Err(format!("denominator {den} must be positive"));
    }
    if !num.gcd(&den).is_one() {
        return Err(format!("{num}/{den} is not in lowest terms"));
    }
    Ok(BigRational::new_raw(num, den))
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    re: RationalRepr,
    im: RationalRepr,
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            re: RationalRepr::from_rational(&self.re),
            im: RationalRepr::from_rational(&self.im),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let re = repr.re.into_rational().map_err(D::Error::custom)?;
        let im = repr.im.into_rational().map_err(D::Error::custom)?;
        Ok(Self::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(re: i64, im: i64) -> GaussianRational {
        GaussianRational::gaussian(re, im)
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, q(-1, 0));
    }

    #[test]
    fn normalized_after_division() {
        let a = GaussianRational::from_fractions(2, 4, -3, 6).unwrap();
        assert_eq!(a.re(), &BigRational::new(1.into(), 2.into()));
        assert_eq!(a.im(), &BigRational::new((-1).into(), 2.into()));
        let b = &q(1, 1) / &q(1, -1);
        assert_eq!(b, GaussianRational::i());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(GaussianRational::from_fractions(1, 0, 0, 1).is_none());
        assert!(q(0, 0).inv().is_none());
    }

    #[test]
    fn square_roots() {
        assert_eq!(q(-1, 0).sqrt().map(|r| &r * &r), Some(q(-1, 0)));
        assert_eq!(q(0, 2).sqrt(), Some(q(1, 1)));
        assert_eq!(q(-4, 0).sqrt(), Some(q(0, 2)));
        let r = q(3, 4).sqrt().unwrap();
        assert_eq!(&r * &r, q(3, 4));
        assert!(q(2, 0).sqrt().is_none());
        assert!(q(1, 1).sqrt().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(q(0, 0).to_string(), "0");
        assert_eq!(q(0, -1).to_string(), "-i");
        assert_eq!(q(2, 3).to_string(), "2+3i");
        assert_eq!(
            GaussianRational::from_fractions(-1, 2, 1, 3).unwrap().to_string(),
            "-1/2+1/3i"
        );
    }

    #[test]
    fn json_shape() {
        let a = GaussianRational::from_fractions(-3, 4, 5, 1).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"re":[-3,4],"im":[5,1]}"#);
        let back: GaussianRational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<GaussianRational>(r#"{"re":[2,4],"im":[0,1]}"#).is_err());
        assert!(serde_json::from_str::<GaussianRational>(r#"{"re":[1,-2],"im":[0,1]}"#).is_err());
    }

    fn arb() -> impl Strategy<Value = GaussianRational> {
        (-20i64..20, 1i64..8, -20i64..20, 1i64..8)
            .prop_map(|(a, b, c, d)| GaussianRational::from_fractions(a, b, c, d).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
            prop_assert_eq!((&a * &a.conj()).im().clone(), BigRational::zero());
        }

        #[test]
        fn sqrt_of_square(a in arb()) {
            let r = (&a * &a).sqrt().unwrap();
            prop_assert_eq!(&r * &r, &a * &a);
        }
    }
}
