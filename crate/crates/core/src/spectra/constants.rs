//! The algebraic thresholds α₀ = −1−√2, α₁ and β.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::poly::IntPolynomial;
use super::roots::min_root;
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ConstantName {
    Alpha0,
    Alpha1,
    Beta,
}

impl ConstantName {
    pub const ALL: [ConstantName; 3] = [ConstantName::Alpha0, ConstantName::Alpha1, ConstantName::Beta];

    /// Minimal polynomial, constant term first.
    pub fn minimal_poly(self) -> IntPolynomial {
        match self {
            ConstantName::Alpha0 => IntPolynomial::from_i64(&[-1, 2, 1]),
            ConstantName::Alpha1 => IntPolynomial::from_i64(&[-2, -2, 2, 1]),
            ConstantName::Beta => IntPolynomial::from_i64(&[-4, -35, 13, 21, -7, -3, 1]),
        }
    }
}

impl FromStr for ConstantName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "ALPHA0" => Ok(ConstantName::Alpha0),
            "ALPHA1" => Ok(ConstantName::Alpha1),
            "BETA" => Ok(ConstantName::Beta),
            _ => Err(Error::input(format!(
                "unknown constant `{s}` (expected ALPHA0, ALPHA1 or BETA)"
            ))),
        }
    }
}

impl fmt::Display for ConstantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstantName::Alpha0 => "ALPHA0",
            ConstantName::Alpha1 => "ALPHA1",
            ConstantName::Beta => "BETA",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraicConstant {
    pub name: ConstantName,
    pub minimal_poly: IntPolynomial,
    pub value: f64,
    pub precision: f64,
}

pub fn constant(name: ConstantName) -> AlgebraicConstant {
    constant_with_precision(name, DEFAULT_PRECISION).expect("minimal polynomials have real roots")
}

pub fn constant_with_precision(name: ConstantName, precision: f64) -> Result<AlgebraicConstant> {
    let minimal_poly = name.minimal_poly();
    let value = min_root(&minimal_poly, precision)?;
    Ok(AlgebraicConstant {
        name,
        minimal_poly,
        value,
        precision,
    })
}

fn cached(cell: &'static OnceLock<f64>, name: ConstantName) -> f64 {
    *cell.get_or_init(|| {
        min_root(&name.minimal_poly(), 1e-15).expect("minimal polynomials have real roots")
    })
}

/// −1−√2, correct to double precision.
pub fn alpha0() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    cached(&CELL, ConstantName::Alpha0)
}

/// Smallest root of x³+2x²−2x−2.
pub fn alpha1() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    cached(&CELL, ConstantName::Alpha1)
}

/// Smallest root of x⁶−3x⁵−7x⁴+21x³+13x²−35x−4.
pub fn beta() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    cached(&CELL, ConstantName::Beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert!((alpha0() - (-1.0 - 2f64.sqrt())).abs() < 1e-15);
        assert!((alpha1() + 2.4812).abs() < 1e-4);
        assert!((beta() + 2.0391).abs() < 1e-4);
        assert!(alpha1() < alpha0() && alpha0() < beta() && beta() < -2.0);
    }

    #[test]
    fn constants_satisfy_their_polynomials() {
        for name in ConstantName::ALL {
            let c = constant(name);
            let p = &c.minimal_poly;
            let slope = p.derivative().eval_f64(c.value).abs();
            assert!(p.eval_f64(c.value).abs() <= slope * 1e-12 + 1e-12, "{name}");
        }
    }

    #[test]
    fn names() {
        assert_eq!("beta".parse::<ConstantName>().unwrap(), ConstantName::Beta);
        assert_eq!(ConstantName::Alpha1.to_string(), "ALPHA1");
        assert!("GAMMA".parse::<ConstantName>().is_err());
        assert_eq!(
            serde_json::to_string(&ConstantName::Alpha0).unwrap(),
            "\"ALPHA0\""
        );
    }
}
