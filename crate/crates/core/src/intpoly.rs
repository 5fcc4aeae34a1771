//! Integer-valued polynomials stored in the binomial basis.
//!
//! `P(t) = c_0*C(t,0) + c_1*C(t,1) + ... + c_m*C(t,m)` with integer `c_i`,
//! which makes integer-valuedness automatic and keeps all arithmetic exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binomial_poly;
use crate::error::{HvError, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct IntPoly {
    /// Coefficients in the basis C(t, i); no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `slope*t + constant`, using C(t,1) = t.
    pub fn linear(slope: i64, constant: i64) -> Self {
        IntPoly::new(vec![BigInt::from(constant), BigInt::from(slope)])
    }

    /// Interpolates from the values P(0), P(1), ..., P(m) by forward differences.
    pub fn from_values(values: &[BigInt]) -> Self {
        let mut table: Vec<BigInt> = values.to_vec();
        let mut coeffs = Vec::with_capacity(values.len());
        for level in 0..values.len() {
            coeffs.push(table[0].clone());
            for i in 0..values.len() - level - 1 {
                table[i] = &table[i + 1] - &table[i];
            }
            table.truncate(values.len() - level - 1);
        }
        IntPoly::new(coeffs)
    }

    /// The polynomial C(t + shift, k).
    pub fn binomial_shifted(k: u32, shift: i64) -> Self {
        let values: Vec<BigInt> = (0..=k as i64)
            .map(|t| binomial_poly(&BigInt::from(t + shift), k))
            .collect();
        IntPoly::from_values(&values)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree as a polynomial in t; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * binomial_poly(t, i as u32);
            }
        }
        acc
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// First difference P(t) - P(t-1); degree drops by one.
    pub fn delta(&self) -> IntPoly {
        match self.degree() {
            None | Some(0) => IntPoly::zero(),
            Some(m) => {
                let values: Vec<BigInt> = (0..m as i64)
                    .map(|t| self.eval_i64(t) - self.eval_i64(t - 1))
                    .collect();
                IntPoly::from_values(&values)
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Smallest T >= 0 from which every value P(t), t >= T, is certified
    /// nonnegative (all forward differences at T are >= 0); `None` when the
    /// polynomial is eventually negative.
    pub fn nonnegative_from(&self) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        let m = self.degree().unwrap();
        if self.leading_coeff().unwrap().is_negative() {
            return None;
        }
        // Coarse bound past which all differences are provably nonnegative.
        let lead = self.leading_coeff().unwrap().magnitude().clone();
        let rest: num_bigint::BigUint = self
            .coeffs
            .iter()
            .take(m)
            .map(|c| c.magnitude().clone())
            .sum();
        let ratio = (rest / lead) + 1u32;
        let ratio_i64 = i64::try_from(ratio).unwrap_or(i64::MAX / 4);
        let cap = (m as i64 + 1) * (ratio_i64 + 2) + 4;
        'outer: for t in 0..=cap {
            let values: Vec<BigInt> = (t..=t + m as i64).map(|x| self.eval_i64(x)).collect();
            let mut table = values;
            for _ in 0..=m {
                if table[0].is_negative() {
                    continue 'outer;
                }
                for i in 0..table.len().saturating_sub(1) {
                    table[i] = &table[i + 1] - &table[i];
                }
                table.pop();
            }
            return Some(t);
        }
        None
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs.clone())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul<&BigInt> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &BigInt) -> IntPoly {
        self.scale(rhs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => write!(f, "0"),
            Some(0) => write!(f, "{}", self.coeffs[0]),
            Some(1) => {
                let slope = &self.coeffs[1];
                let c = &self.coeffs[0];
                if slope == &BigInt::one() {
                    write!(f, "t")?;
                } else if slope == &BigInt::from(-1) {
                    write!(f, "-t")?;
                } else {
                    write!(f, "{}t", slope)?;
                }
                if c.is_positive() {
                    write!(f, "+{}", c)?;
                } else if c.is_negative() {
                    write!(f, "{}", c)?;
                }
                Ok(())
            }
            Some(_) => {
                let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "bin:{}", parts.join(","))
            }
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

/// Accepts the binomial-basis form `bin:c0,c1,...` and the linear shorthand
/// `A*t+B` / `At+B` / `t+B` / `B`.
impl FromStr for IntPoly {
    type Err = HvError;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = s.strip_prefix("bin:") {
            let coeffs = rest
                .split(',')
                .map(|p| {
                    p.parse::<BigInt>()
                        .map_err(|_| HvError::Parse(format!("bad coefficient `{p}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(IntPoly::new(coeffs));
        }
        // linear shorthand
        let bad = || HvError::Parse(format!("cannot parse Hilbert polynomial `{s}`"));
        if let Some(pos) = s.find('t') {
            let (head, tail) = s.split_at(pos);
            let tail = &tail[1..];
            let slope: i64 = match head.trim_end_matches('*') {
                "" | "+" => 1,
                "-" => -1,
                h => h.parse().map_err(|_| bad())?,
            };
            let constant: i64 = if tail.is_empty() {
                0
            } else {
                tail.parse().map_err(|_| bad())?
            };
            Ok(IntPoly::linear(slope, constant))
        } else {
            let c: i64 = s.parse().map_err(|_| bad())?;
            Ok(IntPoly::linear(0, c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_eval_and_display() {
        let p = IntPoly::linear(9, -10);
        assert_eq!(p.eval_i64(3), BigInt::from(17));
        assert_eq!(p.to_string(), "9t-10");
        assert_eq!(IntPoly::linear(5, 1).to_string(), "5t+1");
        assert_eq!(IntPoly::linear(3, 0).to_string(), "3t");
        assert_eq!(IntPoly::constant(BigInt::from(7)).to_string(), "7");
    }

    #[test]
    fn from_values_round_trip() {
        // P(t) = C(t,2): values 1 at t=2 ...
        let p = IntPoly::binomial_shifted(2, 0);
        assert_eq!(p.coeffs(), &[BigInt::zero(), BigInt::zero(), BigInt::one()]);
        let q = IntPoly::binomial_shifted(2, 3); // C(t+3, 2)
        assert_eq!(q.eval_i64(0), BigInt::from(3));
        assert_eq!(q.eval_i64(-1), BigInt::from(1));
        assert_eq!(q.eval_i64(4), BigInt::from(21));
    }

    #[test]
    fn delta_of_linear() {
        let p = IntPoly::linear(9, -10);
        assert_eq!(p.delta(), IntPoly::constant(BigInt::from(9)));
        let c = IntPoly::binomial_shifted(3, 1);
        assert_eq!(c.delta(), IntPoly::binomial_shifted(2, 0));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3t+1".parse::<IntPoly>().unwrap(), IntPoly::linear(3, 1));
        assert_eq!("3*t+1".parse::<IntPoly>().unwrap(), IntPoly::linear(3, 1));
        assert_eq!("t".parse::<IntPoly>().unwrap(), IntPoly::linear(1, 0));
        assert_eq!("9t-10".parse::<IntPoly>().unwrap(), IntPoly::linear(9, -10));
        assert_eq!("4".parse::<IntPoly>().unwrap(), IntPoly::constant(BigInt::from(4)));
        let p = "bin:1,0,2".parse::<IntPoly>().unwrap();
        assert_eq!(p.eval_i64(3), BigInt::from(7));
    }

    #[test]
    fn nonnegative_certificate() {
        assert_eq!(IntPoly::linear(1, -5).nonnegative_from(), Some(5));
        assert_eq!(IntPoly::linear(-1, 100).nonnegative_from(), None);
        assert_eq!(IntPoly::zero().nonnegative_from(), Some(0));
        assert_eq!(IntPoly::constant(BigInt::from(-1)).nonnegative_from(), None);
    }
}
