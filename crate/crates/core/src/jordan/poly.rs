//! Univariate polynomials over ℚ(i) and root finding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

/// Polynomial with coefficients stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `Π (λ − rᵢ)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a GaussianRational>) -> Self {
        roots.into_iter().fold(Self::one(), |p, r| {
            p.mul(&Self::new(vec![-r.clone(), GaussianRational::one()]))
        })
    }

    pub fn one() -> Self {
        Self::new(vec![GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Degree, with the zero polynomial given degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    /// Quotient by `(λ − r)`, assuming `r` is a root.
    fn deflate(&self, r: &GaussianRational) -> Self {
        let d = self.degree();
        let mut q = vec![GaussianRational::zero(); d];
        let mut carry = GaussianRational::zero();
        for k in (1..=d).rev() {
            carry = &(&carry * r) + &self.coeffs[k];
            q[k - 1] = carry.clone();
        }
        Self::new(q)
    }

    /// Roots in ℚ(i) with multiplicities, sorted by `(re, im)`.
    ///
    /// Linear factors come from the rational root test over the Gaussian
    /// integers; a leftover quadratic is solved when its discriminant is a
    /// square in ℚ(i). Anything else is reported as [`Error::NotSplit`].
    pub fn roots(&self) -> Result<Vec<(GaussianRational, usize)>> {
        let mut found: Vec<(GaussianRational, usize)> = Vec::new();
        let push = |r: GaussianRational, found: &mut Vec<(GaussianRational, usize)>| match found
            .iter_mut()
            .find(|(x, _)| *x == r)
        {
            Some(entry) => entry.1 += 1,
            None => found.push((r, 1)),
        };
        let mut q = self.clone();
        while q.degree() > 0 && q.coeff(0).is_zero() {
            q = q.deflate(&GaussianRational::zero());
            push(GaussianRational::zero(), &mut found);
        }
        if q.degree() > 0 {
            for r in candidate_roots(&q) {
                while q.degree() > 0 && q.eval(&r).is_zero() {
                    q = q.deflate(&r);
                    push(r.clone(), &mut found);
                }
            }
        }
        if q.degree() == 2 {
            let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
            let disc = &(&b * &b) - &(&GaussianRational::from_integer(4) * &(&a * &c));
            if let Some(s) = disc.sqrt() {
                let two_a = &GaussianRational::from_integer(2) * &a;
                let inv = two_a.inv().expect("leading coefficient is nonzero");
                push(&(&(-&b) + &s) * &inv, &mut found);
                push(&(&(-&b) - &s) * &inv, &mut found);
                q = Self::new(vec![a]);
            }
        }
        if q.degree() == 1 {
            push(-(&q.coeff(0) / &q.coeff(1)), &mut found);
            q = Self::new(vec![q.coeff(1)]);
        }
        found.sort_by(|a, b| a.0.lex_cmp(&b.0));
        if q.degree() > 0 {
            return Err(Error::NotSplit {
                roots: found,
                residual: q.coeffs,
            });
        }
        Ok(found)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let coef = if c.is_one() && k > 0 {
                    String::new()
                } else {
                    format!("({c})")
                };
                match k {
                    0 => coef,
                    1 => format!("{coef}λ"),
                    _ => format!("{coef}λ^{k}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Candidates `u / v` with `u | b₀` and `v | bₙ` after clearing denominators.
fn candidate_roots(p: &Poly) -> Vec<GaussianRational> {
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scale = GaussianRational::from(BigRational::from_integer(l));
    let b0 = &p.coeff(0) * &scale;
    let bn = &p.coeff(p.degree()) * &scale;
    let mut out: Vec<GaussianRational> = Vec::new();
    let denominators = gaussian_divisors(&bn);
    for u in gaussian_divisors(&b0) {
        for v in &denominators {
            let r = &u / v;
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

fn is_gaussian_integer(z: &GaussianRational) -> bool {
    z.re().is_integer() && z.im().is_integer()
}

/// Every Gaussian integer dividing the nonzero Gaussian integer `a`,
/// including unit multiples.
pub(crate) fn gaussian_divisors(a: &GaussianRational) -> Vec<GaussianRational> {
    debug_assert!(is_gaussian_integer(a) && !a.is_zero());
    let norm = a.norm().to_integer();
    let mut rest = a.clone();
    let mut primes: Vec<(GaussianRational, u32)> = Vec::new();
    for (p, _) in factor_integer(&norm) {
        for pi in gaussian_primes_over(&p) {
            let mut e = 0;
            loop {
                let q = &rest / &pi;
                if !is_gaussian_integer(&q) {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                primes.push((pi, e));
            }
        }
    }
    let mut divisors = vec![GaussianRational::one()];
    for (pi, e) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut power = d.clone();
            for _ in 0..=e {
                next.push(power.clone());
                power = &power * &pi;
            }
        }
        divisors = next;
    }
    let units = [
        GaussianRational::one(),
        GaussianRational::i(),
        -GaussianRational::one(),
        -GaussianRational::i(),
    ];
    divisors.iter().flat_map(|d| units.iter().map(move |u| d * u)).collect()
}

/// Gaussian primes dividing the rational prime `p` (one per associate class).
fn gaussian_primes_over(p: &BigInt) -> Vec<GaussianRational> {
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let from = |x: BigInt, y: BigInt| GaussianRational::new(BigRational::from_integer(x), BigRational::from_integer(y));
    if *p == two {
        return vec![from(BigInt::one(), BigInt::one())];
    }
    if p.mod_floor(&four) == BigInt::from(3) {
        return vec![from(p.clone(), BigInt::zero())];
    }
    let mut x = BigInt::one();
    loop {
        let rest = p - &x * &x;
        let y = rest.sqrt();
        if &y * &y == rest {
            return vec![from(x.clone(), y.clone()), from(x, -y)];
        }
        x += 1;
    }
}

/// Prime factorization of a positive integer by trial division.
fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::gaussian(re, im)
    }

    #[test]
    fn roots_with_multiplicity() {
        let p = Poly::from_roots(&[g(1, 0), g(1, 0), g(-1, 0)]);
        assert_eq!(p.roots().unwrap(), vec![(g(-1, 0), 1), (g(1, 0), 2)]);
    }

    #[test]
    fn gaussian_roots() {
        let p = Poly::new(vec![g(1, 0), g(0, 0), g(1, 0)]);
        assert_eq!(p.roots().unwrap(), vec![(g(0, -1), 1), (g(0, 1), 1)]);
    }

    #[test]
    fn not_split() {
        let p = Poly::new(vec![g(-2, 0), g(0, 0), g(1, 0)]);
        match p.roots() {
            Err(Error::NotSplit { roots, residual }) => {
                assert!(roots.is_empty());
                assert_eq!(residual.len(), 3);
            }
            other => panic!("{other:?}"),
        }
        let q = p.mul(&Poly::from_roots(&[g(3, 1)]));
        match q.roots() {
            Err(Error::NotSplit { roots, .. }) => assert_eq!(roots, vec![(g(3, 1), 1)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fractional_roots() {
        let half = GaussianRational::from_fractions(1, 2, -2, 3).unwrap();
        let p = Poly::from_roots(&[half.clone(), g(0, 0), g(5, -2)]);
        let mut expected = vec![(half, 1), (g(0, 0), 1), (g(5, -2), 1)];
        expected.sort_by(|a, b| a.0.lex_cmp(&b.0));
        assert_eq!(p.roots().unwrap(), expected);
    }

    #[test]
    fn divisors_of_gaussian_integers() {
        let divs = gaussian_divisors(&g(5, 0));
        // 1, 2+i, 2−i, 5 up to units
        assert_eq!(divs.len(), 16);
        for d in &divs {
            assert!(is_gaussian_integer(&(&g(5, 0) / d)));
        }
        assert_eq!(gaussian_divisors(&g(0, 1)).len(), 4);
        assert_eq!(gaussian_divisors(&g(6, 0)).len(), 4 * 3 * 2);
    }

    #[test]
    fn display() {
        let p = Poly::from_roots(&[g(1, 0), g(0, 1)]);
        assert_eq!(p.to_string(), "λ^2 + (-1-i)λ + (i)");
    }
}
