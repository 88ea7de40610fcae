//! Exact arithmetic in `Z[A^{±1}, M]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::Error;

/// A monomial `A^a M^m`, ordered by `(a, m)`.
pub type Exponents = (i64, u32);

/// Bivariate polynomial, Laurent in `A`, ordinary in `M`, with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentBipoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentBipoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, a: i64, m: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, m, coeff.into());
        p
    }

    /// `-A^{-2} - A^2`, the value of a bar-free circle.
    pub fn loop_value() -> Self {
        Self::from_terms([(-2, 0, -1), (2, 0, -1)])
    }

    /// The variable `M`.
    pub fn m() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, m, c) in terms {
            p.add_term(a, m, c.into());
        }
        p
    }

    pub fn add_term(&mut self, a: i64, m: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, m)).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(a, m));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(a, m)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, m), c)| (a, m, c))
    }

    pub fn coeff(&self, a: i64, m: u32) -> BigInt {
        self.terms.get(&(a, m)).cloned().unwrap_or_default()
    }

    pub fn is_m_free(&self) -> bool {
        self.terms.keys().all(|&(_, m)| m == 0)
    }

    pub fn max_m(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, m)| m).max()
    }

    fn a_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().map(|&(a, _)| a).min()?;
        let max = self.terms.keys().map(|&(a, _)| a).max()?;
        Some((min, max))
    }

    /// Multiply by `A^shift`.
    pub fn shift_a(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, m), c)| ((a + shift, m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`. Returns [`Error::NotDivisible`] when
    /// no quotient exists in `Z[A^{±1}, M]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Any exact quotient has its A-exponents in this window.
        let (p_lo, p_hi) = self.a_range().expect("nonzero");
        let (q_lo, q_hi) = divisor.a_range().expect("nonzero");
        let (lo, hi) = (p_lo - q_lo, p_hi - q_hi);
        let lead = |p: &Self| -> (u32, i64, BigInt) {
            let (&(a, m), c) = p.terms.iter().max_by_key(|(&(a, m), _)| (m, a)).expect("nonzero");
            (m, a, c.clone())
        };
        let (qm, qa, qc) = lead(divisor);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rm, ra, rc) = lead(&rem);
            if rm < qm {
                return Err(Error::NotDivisible);
            }
            let (factor, r) = rc.div_rem(&qc);
            let ta = ra - qa;
            if !r.is_zero() || ta < lo || ta > hi {
                return Err(Error::NotDivisible);
            }
            let step = Self::monomial(factor, ta, rm - qm);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    /// Substitute an `M`-free polynomial for `M`.
    pub fn eval_m(&self, s: &Self) -> Self {
        let mut powers: Vec<Self> = vec![Self::one()];
        let mut out = Self::zero();
        for (&(a, m), c) in &self.terms {
            while powers.len() <= m as usize {
                let next = powers.last().expect("seeded") * s;
                powers.push(next);
            }
            let term = Self::monomial(c.clone(), a, 0);
            out = &out + &(&term * &powers[m as usize]);
        }
        out
    }

    /// A-exponents of an `M`-free polynomial.
    pub fn a_exponents(&self) -> Vec<i64> {
        self.terms.keys().map(|&(a, _)| a).collect()
    }
}

impl Add for &LaurentBipoly {
    type Output = LaurentBipoly;
    fn add(self, rhs: &LaurentBipoly) -> LaurentBipoly {
        let mut out = self.clone();
        for (&(a, m), c) in &rhs.terms {
            out.add_term(a, m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentBipoly {
    type Output = LaurentBipoly;
    fn sub(self, rhs: &LaurentBipoly) -> LaurentBipoly {
        let mut out = self.clone();
        for (&(a, m), c) in &rhs.terms {
            out.add_term(a, m, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentBipoly {
    type Output = LaurentBipoly;
    fn neg(self) -> LaurentBipoly {
        LaurentBipoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentBipoly {
    type Output = LaurentBipoly;
    fn mul(self, rhs: &LaurentBipoly) -> LaurentBipoly {
        let mut out = LaurentBipoly::zero();
        for (&(a1, m1), c1) in &self.terms {
            for (&(a2, m2), c2) in &rhs.terms {
                out.add_term(a1 + a2, m1 + m2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentBipoly {
            type Output = LaurentBipoly;
            fn $method(self, rhs: LaurentBipoly) -> LaurentBipoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, a: i64, m: u32) -> fmt::Result {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("A".to_string()),
        _ => parts.push(format!("A^{a}")),
    }
    match m {
        0 => {}
        1 => parts.push("M".to_string()),
        _ => parts.push(format!("M^{m}")),
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for LaurentBipoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(a, m), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = a == 0 && m == 0;
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, a, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentBipoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentBipoly({self})")
    }
}

/// JSON form: `[[a_exp, m_exp, coeff], ...]` in canonical order. Coefficients
/// outside the `i64` range are written as decimal strings.
impl Serialize for LaurentBipoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(a, m), c) in &self.terms {
            let coeff = match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            };
            seq.serialize_element(&(a, m, coeff))?;
        }
        seq.end()
    }
}
