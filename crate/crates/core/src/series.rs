//! Truncated univariate power series over exact rationals, and the nested
//! radicals `ψ_j` that generate the tier triangle.
//!
//! The bivariate generating function
//! `T(z, w) = Σ_j w^j (ψ_j - ψ_{j+1}) / (2z(1-w))` depends on `z` and `w`
//! only through `u = z(1-w)`. With `g_j(u) = (ψ_j(u) - ψ_{j+1}(u)) / (2u)`
//! and `u^m = z^m (1-w)^m`,
//!
//! ```text
//! T(n, t) = Σ_{j=0}^{t} (-1)^{t-j} binomial(n, t-j) [u^n] g_j
//! ```
//!
//! so everything here is univariate.

use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumerate::{TableKind, TierTable};
use crate::error::{Error, Result};
use crate::tier::max_tier;

pub const DEFAULT_ORDER: usize = 32;

/// `Σ_{k=0}^{order} c_k x^k + O(x^{order+1})`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn constant(c: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = rat(c);
        s
    }

    /// Integer coefficients `c_0, c_1, ...`, zero padded or truncated to `order`.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = rat(c);
        }
        s
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Divide by `x`; the constant term must vanish. Loses one order.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0", found: self.coeffs[0].to_string() });
        }
        if self.order() == 0 {
            return Err(Error::TruncationTooSmall { order: 0, needed: 1 });
        }
        Ok(RationalSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Multiply by `x`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        RationalSeries { coeffs }
    }

    /// `1 / self`; the constant term must be non-zero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ConstantTerm { expected: "non-zero", found: "0".into() });
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(RationalSeries { coeffs: out })
    }

    pub fn div(&self, other: &RationalSeries) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Square root with constant term 1, by Newton's iteration
    /// `r ← (r + s/r) / 2`, doubling the number of correct terms each step.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm { expected: "1", found: self.coeffs[0].to_string() });
        }
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut r = RationalSeries::constant(1, 0);
        let mut correct = 1; // terms known: 0..correct
        while correct < n + 1 {
            correct = (2 * correct).min(n + 1);
            let order = correct - 1;
            let r_ext = r.truncate(order);
            let quotient = self.truncate(order).div(&r_ext)?;
            r = (&r_ext + &quotient).scale(&half);
        }
        Ok(r.truncate(n))
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &RationalSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0", found: inner.coeffs[0].to_string() });
        }
        let n = self.order().min(inner.order());
        // Horner from the top coefficient
        let inner = inner.truncate(n);
        let mut acc = RationalSeries::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `c_k * z^k` terms joined by newlines, zero terms omitted.
    pub fn render_terms(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                writeln!(out, "{} * {var}^{k}", render_rational(c)).unwrap();
            }
        }
        out
    }

    /// Every coefficient as an integer, if all are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

pub fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(render_rational).collect();
        write!(f, "[{}; O(x^{})]", terms.join(", "), self.order() + 1)
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, other: &RationalSeries) -> RationalSeries {
        let n = self.order().min(other.order());
        RationalSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, other: &RationalSeries) -> RationalSeries {
        let n = self.order().min(other.order());
        RationalSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;

    fn neg(self) -> RationalSeries {
        RationalSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, other: &RationalSeries) -> RationalSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs }
    }
}

/// `C(x) = (1 - sqrt(1 - 4x)) / (2x)`, the Catalan generating function.
pub fn catalan_series(order: usize) -> Result<RationalSeries> {
    if order == 0 {
        return Err(Error::NonPositive);
    }
    let root = RationalSeries::from_ints(&[1, -4], order + 1).sqrt()?;
    let numer = &RationalSeries::constant(1, order + 1) - &root;
    Ok(numer.shift_down()?.scale(&BigRational::new(BigInt::one(), BigInt::from(2))))
}

/// `ψ_0 = 1 - 2u`, `ψ_1 = sqrt(1 - 4u)`, `ψ_j = sqrt(2ψ_{j-1} - 1)`.
#[derive(Debug, Clone)]
pub struct PsiTower {
    pub levels: Vec<RationalSeries>,
}

impl PsiTower {
    pub fn order(&self) -> usize {
        self.levels[0].order()
    }

    /// `g_j = (ψ_j - ψ_{j+1}) / (2u)`, exact through `u^{order-1}`.
    pub fn g(&self, j: usize) -> Result<RationalSeries> {
        let diff = &self.levels[j] - &self.levels[j + 1];
        Ok(diff.shift_down()?.scale(&BigRational::new(BigInt::one(), BigInt::from(2))))
    }

    /// `ρ_j = (1 - ψ_{j+1}) / (1 - ψ_j)`, exact through `u^{order-1}`.
    pub fn rho(&self, j: usize) -> Result<RationalSeries> {
        let one = RationalSeries::constant(1, self.order());
        let numer = (&one - &self.levels[j + 1]).shift_down()?;
        let denom = (&one - &self.levels[j]).shift_down()?;
        numer.div(&denom)
    }
}

/// Levels `ψ_0 ..= ψ_levels` modulo `u^{order+1}`.
pub fn psi_tower(levels: usize, order: usize) -> Result<PsiTower> {
    if levels == 0 {
        return Err(Error::NonPositive);
    }
    let two = rat(2);
    let mut out = vec![RationalSeries::from_ints(&[1, -2], order)];
    out.push(RationalSeries::from_ints(&[1, -4], order).sqrt()?);
    for _ in 2..=levels {
        let prev = out.last().unwrap();
        let radicand = &prev.scale(&two) - &RationalSeries::constant(1, order);
        out.push(radicand.sqrt()?);
    }
    Ok(PsiTower { levels: out })
}

/// `T_t(z) = Σ_n T(n, t) z^n`, exact through `z^order`.
pub fn tier_series(t: usize, order: usize) -> Result<RationalSeries> {
    // g_j needs ψ through u^{order+1}
    let tower = psi_tower(t + 1, order + 1)?;
    let gs: Vec<RationalSeries> = (0..=t).map(|j| tower.g(j)).collect::<Result<_>>()?;
    let coeffs = (0..=order)
        .map(|n| {
            let mut acc = BigRational::zero();
            for (j, g) in gs.iter().enumerate() {
                let s = t - j;
                let term = BigRational::from_integer(BigInt::from(binomial(n as u64, s as u64))) * g.coeff(n);
                if s.is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect();
    Ok(RationalSeries::from_rationals(coeffs, order))
}

/// `[z^n w^t] T(z, w)`, computed from a tower truncated at `order >= n`.
pub fn t_coefficient(n: usize, t: usize, order: usize) -> Result<BigUint> {
    if order < n {
        return Err(Error::TruncationTooSmall { order, needed: n });
    }
    let series = tier_series(t, order)?;
    to_count(series.coeff(n), n, t)
}

fn to_count(c: &BigRational, n: usize, t: usize) -> Result<BigUint> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::Inconsistent(format!(
            "coefficient [z^{n} w^{t}] = {} is not a non-negative integer",
            render_rational(c)
        )));
    }
    Ok(c.to_integer().to_biguint().expect("non-negative"))
}

/// The tier triangle for `n <= max_n` from the generating function, one
/// column series per tier; columns are computed in parallel.
pub fn table_gf(max_n: usize) -> Result<TierTable> {
    use rayon::prelude::*;
    if max_n == 0 {
        return Err(Error::NonPositive);
    }
    let top = max_tier(max_n)?;
    let columns: Vec<RationalSeries> = (0..=top).into_par_iter().map(|t| tier_series(t, max_n)).collect::<Result<_>>()?;
    let mut table = TierTable::from_fn(TableKind::Exact, max_n, |_, _| BigUint::zero());
    for (t, col) in columns.iter().enumerate() {
        for n in 1..=max_n {
            table.set_cell(n, t, to_count(col.coeff(n), n, t)?);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &RationalSeries) -> Vec<i64> {
        s.integer_coeffs().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(RationalSeries::constant(1, 8).sqrt().unwrap(), RationalSeries::constant(1, 8));
        let sq = RationalSeries::from_ints(&[1, 2, 1], 8);
        assert_eq!(sq.sqrt().unwrap(), RationalSeries::from_ints(&[1, 1], 8));
        let s = RationalSeries::from_ints(&[1, -4], 12);
        let r = s.sqrt().unwrap();
        assert_eq!(&r * &r, s);
        assert_eq!(ints(&r)[..5], [1, -2, -2, -4, -10]);
        assert!(matches!(RationalSeries::constant(4, 3).sqrt(), Err(Error::ConstantTerm { .. })));
    }

    #[test]
    fn sqrt_of_non_square_has_rational_terms() {
        // sqrt(1 + x) = 1 + x/2 - x^2/8 + ...
        let r = RationalSeries::from_ints(&[1, 1], 6).sqrt().unwrap();
        assert_eq!(render_rational(r.coeff(1)), "1/2");
        assert_eq!(render_rational(r.coeff(2)), "-1/8");
        assert_eq!(&r * &r, RationalSeries::from_ints(&[1, 1], 6));
    }

    #[test]
    fn inverse_and_compose() {
        let one_minus_x = RationalSeries::from_ints(&[1, -1], 6);
        assert_eq!(one_minus_x.inverse().unwrap(), RationalSeries::from_ints(&[1; 7], 6));
        assert!(RationalSeries::from_ints(&[0, 1], 3).inverse().is_err());
        // (1 + x) ∘ (x + x^2) = 1 + x + x^2
        let f = RationalSeries::from_ints(&[1, 1], 5);
        let g = RationalSeries::from_ints(&[0, 1, 1], 5);
        assert_eq!(f.compose(&g).unwrap(), RationalSeries::from_ints(&[1, 1, 1], 5));
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn catalan_examples() {
        let c = catalan_series(12).unwrap();
        assert_eq!(c.order(), 12);
        assert_eq!(ints(&c)[..10], [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
        assert!(catalan_series(0).is_err());
    }

    #[test]
    fn psi_examples() {
        let tower = psi_tower(4, 16).unwrap();
        assert_eq!(tower.levels[0], RationalSeries::from_ints(&[1, -2], 16));
        assert_eq!(ints(&tower.levels[1])[1], -2);
        for level in &tower.levels {
            assert!(level.coeff(0).is_one());
        }
        assert!(psi_tower(0, 4).is_err());
    }

    #[test]
    fn t_coefficient_examples() {
        assert_eq!(t_coefficient(5, 2, 5).unwrap(), BigUint::from(8u32));
        assert_eq!(t_coefficient(4, 1, 32).unwrap(), BigUint::from(10u32));
        assert_eq!(t_coefficient(7, 0, 7).unwrap(), BigUint::from(429u32));
        assert!(matches!(t_coefficient(7, 0, 6), Err(Error::TruncationTooSmall { .. })));
    }

    #[test]
    fn render() {
        let s = RationalSeries::from_rationals(vec![rat(0), rat(3), BigRational::new(BigInt::from(-1), BigInt::from(4))], 2);
        assert_eq!(s.render_terms("z"), "3 * z^1\n-1/4 * z^2\n");
    }
}
