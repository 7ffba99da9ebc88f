//! Real-root isolation for integer polynomials by Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use super::poly::{IntPolynomial, RatPoly};
use crate::error::{Error, Result};

/// Sturm chain of the square-free part of a polynomial.
pub(crate) struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// `p` must be nonzero.
    pub(crate) fn new(p: &IntPolynomial) -> Self {
        let p = p.to_rational();
        let dp = p.derivative();
        let squarefree = if dp.is_zero() { p.clone() } else { p.div_rem(&p.gcd(&dp)).0 };
        let mut chain = vec![squarefree.clone(), squarefree.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
            chain.push(r);
        }
        chain.pop();
        SturmChain { chain }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn sign(x: &BigRational) -> i8 {
        if x.is_zero() {
            0
        } else if x.is_positive() {
            1
        } else {
            -1
        }
    }

    fn at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign(&p.eval(x))))
    }

    fn at_infinity(&self, negative: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = Self::sign(p.leading().expect("chain entries are nonzero"));
            if negative && p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots.
    pub(crate) fn real_roots(&self) -> usize {
        self.at_infinity(true) - self.at_infinity(false)
    }

    /// Number of distinct roots in `(a, b]`.
    pub(crate) fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.at(a) - self.at(b)
    }

    /// Strict bound on the absolute value of every root.
    fn root_bound(&self) -> BigRational {
        let p = &self.chain[0];
        let lead = p.leading().unwrap().abs();
        let max = p
            .coeffs()
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        max + BigRational::from_integer(BigInt::from(2))
    }
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn real_root_count(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    Ok(SturmChain::new(p).real_roots())
}

/// The smallest real root of `p` to within `precision`.
pub fn min_root(p: &IntPolynomial, precision: f64) -> Result<f64> {
    min_root_bracket(p, precision).map(|(lo, hi)| {
        let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    })
}

/// Rational interval `(lo, hi]` of width at most `precision` holding the
/// smallest real root.
pub(crate) fn min_root_bracket(
    p: &IntPolynomial,
    precision: f64,
) -> Result<(BigRational, BigRational)> {
    if !(precision > 0.0) {
        return Err(Error::input(format!("precision must be positive, got {precision}")));
    }
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no smallest root".into()));
    }
    let chain = SturmChain::new(p);
    if chain.real_roots() == 0 {
        return Err(Error::Domain(format!("{p} has no real root")));
    }
    let bound = chain.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    let eps = BigRational::from_f64(precision).expect("finite precision");
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / &two;
        if chain.roots_in(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}

/// Exact sign of `p` at a float point (floats are exact rationals).
pub fn sign_at(p: &IntPolynomial, x: f64) -> i8 {
    let Some(x) = BigRational::from_f64(x) else {
        return 0;
    };
    let v = p.eval_rational(&x);
    if v.is_zero() {
        0
    } else if v > BigRational::zero() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots strictly below `x`, decided exactly.
pub fn roots_below(p: &IntPolynomial, x: f64) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    let xr = BigRational::from_f64(x).ok_or_else(|| Error::input(format!("{x} is not finite")))?;
    let chain = SturmChain::new(p);
    let bound = chain.root_bound();
    if xr <= -bound.clone() {
        return Ok(0);
    }
    let at_x = usize::from(p.eval_rational(&xr).is_zero());
    Ok(chain.roots_in(&-bound, &xr) - at_x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_below_a_point() {
        // (x+2)^2 (x-1)
        let q = p(&[-4, 0, 3, 1]);
        assert_eq!(roots_below(&q, -2.0).unwrap(), 0);
        assert_eq!(roots_below(&q, -1.999).unwrap(), 1);
        assert_eq!(roots_below(&q, 1.0).unwrap(), 1);
        assert_eq!(roots_below(&q, 1.5).unwrap(), 2);
        assert_eq!(roots_below(&q, -1e6).unwrap(), 0);
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn known_smallest_roots() {
        let alpha0 = min_root(&p(&[-1, 2, 1]), 1e-13).unwrap();
        assert!((alpha0 - (-1.0 - 2f64.sqrt())).abs() < 1e-12);
        let alpha1 = min_root(&p(&[-2, -2, 2, 1]), 1e-13).unwrap();
        assert!((alpha1 + 2.4811943040920164).abs() < 1e-12);
        let beta = min_root(&p(&[-4, -35, 13, 21, -7, -3, 1]), 1e-13).unwrap();
        assert!((beta + 2.0391359003249128).abs() < 1e-12);
    }

    #[test]
    fn repeated_roots_and_exact_hits() {
        // (x+1)^2 (x-3): smallest root is exactly -1.
        let q = p(&[-3, -5, -1, 1]);
        assert!((min_root(&q, 1e-12).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(real_root_count(&q).unwrap(), 2);
        assert!((min_root(&p(&[0, 1]), 1e-12).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn no_real_root() {
        assert!(matches!(min_root(&p(&[1, 0, 1]), 1e-9), Err(Error::Domain(_))));
        assert!(matches!(min_root(&p(&[5]), 1e-9), Err(Error::Domain(_))));
        assert!(matches!(min_root(&IntPolynomial::zero(), 1e-9), Err(Error::Domain(_))));
        assert_eq!(real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
    }

    #[test]
    fn bracket_has_sign_change() {
        let sextic = p(&[-4, -35, 13, 21, -7, -3, 1]);
        let r = min_root(&sextic, 1e-12).unwrap();
        let (a, b) = (sign_at(&sextic, r - 1e-6), sign_at(&sextic, r + 1e-6));
        assert!(a * b < 0);
    }
}
