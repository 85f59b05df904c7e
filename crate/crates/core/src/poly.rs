//! Dense univariate polynomials with exact integer coefficients.
//!
//! Everything in this crate that looks like a polynomial (Eulerian,
//! f- and h-polynomials, Poincaré polynomials) lives here.
//! Arithmetic is exact: no rounding, no overflow (with an unbounded scalar).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::{scalar_from_i64, Scalar};

/// A polynomial stored as a dense coefficient list; `coeffs[i]` multiplies `t^i`.
///
/// Canonical form: the zero polynomial is the empty list, otherwise the
/// highest stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Builds a polynomial from coefficients indexed by degree, trimming
    /// trailing zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// `c * t^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// `t^lo + t^(lo+1) + ... + t^hi`; zero when the range is empty.
    pub fn sum_of_powers(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); hi + 1];
        for c in coeffs.iter_mut().take(hi + 1).skip(lo) {
            *c = T::one();
        }
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in canonical (trimmed) form.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Evaluates at `x` by Horner's rule.
    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// `p(t + shift)`, expanded exactly via binomial coefficients:
    /// the new coefficient of `t^j` is `Σ_i a_i C(i,j) shift^(i-j)`.
    pub fn compose_linear(&self, shift: i64) -> Self {
        if self.is_zero() || shift == 0 {
            return self.clone();
        }
        let d = self.coeffs.len() - 1;
        let s: T = scalar_from_i64(shift);

        let mut shift_pows = Vec::with_capacity(d + 1);
        shift_pows.push(T::one());
        for e in 1..=d {
            shift_pows.push(shift_pows[e - 1].clone() * s.clone());
        }

        let mut result = vec![T::zero(); d + 1];
        // Pascal row for C(i, _), rebuilt incrementally per source degree i.
        let mut row: Vec<T> = vec![T::one()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                let mut next = Vec::with_capacity(i + 1);
                next.push(T::one());
                for j in 1..i {
                    next.push(row[j - 1].clone() + row[j].clone());
                }
                next.push(T::one());
                row = next;
            }
            if a.is_zero() {
                continue;
            }
            for (j, binom) in row.iter().enumerate() {
                let term = a.clone() * binom.clone() * shift_pows[i - j].clone();
                result[j] = result[j].clone() + term;
            }
        }
        Polynomial::from_coeffs(result)
    }

    /// `p(t^2)`: interleaves the coefficients with zeros.
    pub fn substitute_square(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); 2 * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Polynomial { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs)
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.add_impl(rhs)
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Self {
        self.sub_impl(&rhs)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.sub_impl(rhs)
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        self.mul_impl(rhs)
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use proptest::prelude::*;

    type P = Polynomial<Int>;

    fn poly(cs: &[i64]) -> P {
        Polynomial::from_coeffs(cs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
        assert_eq!(poly(&[5]).degree(), Some(0));
    }

    #[test]
    fn compose_linear_hexagon_example() {
        // 6 + 6t + t^2 shifted by -1 gives 1 + 4t + t^2
        assert_eq!(poly(&[6, 6, 1]).compose_linear(-1), poly(&[1, 4, 1]));
    }

    #[test]
    fn compose_linear_zero_shift_is_identity() {
        let p = poly(&[3, -7, 0, 2]);
        assert_eq!(p.compose_linear(0), p);
    }

    #[test]
    fn compose_linear_binomial_square() {
        assert_eq!(poly(&[0, 0, 1]).compose_linear(1), poly(&[1, 2, 1]));
    }

    #[test]
    fn substitute_square_interleaves() {
        assert_eq!(poly(&[1, 4, 1]).substitute_square(), poly(&[1, 0, 4, 0, 1]));
        assert!(P::zero().substitute_square().is_zero());
    }

    #[test]
    fn evaluate_horner() {
        let p = poly(&[1, 4, 1]);
        assert_eq!(p.evaluate(&Int::from(1)), Int::from(6));
        assert_eq!(p.evaluate(&Int::from(-2)), Int::from(-3));
    }

    #[test]
    fn sum_of_powers_ranges() {
        assert_eq!(P::sum_of_powers(1, 3), poly(&[0, 1, 1, 1]));
        assert!(P::sum_of_powers(2, 1).is_zero());
        assert_eq!(P::sum_of_powers(0, 0), P::one());
    }

    #[test]
    fn display_signs() {
        assert_eq!(poly(&[1, -4, 1]).to_string(), "1 - 4*t + t^2");
        assert_eq!(poly(&[0, 0, -2]).to_string(), "-2*t^2");
        assert_eq!(P::zero().to_string(), "0");
    }

    /// Coefficients spanning well past 64 bits.
    fn big_coeff() -> impl Strategy<Value = Int> {
        (any::<i64>(), any::<i64>()).prop_map(|(hi, lo)| (Int::from(hi) << 70) + Int::from(lo))
    }

    fn big_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(big_coeff(), 0..6).prop_map(Polynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in big_poly(), b in big_poly(), c in big_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, P::zero());
        }

        #[test]
        fn compose_linear_round_trip(p in big_poly()) {
            prop_assert_eq!(p.compose_linear(-1).compose_linear(1), p);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in big_poly(), b in big_poly(), x in any::<i64>()) {
            let x = Int::from(x);
            prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
            prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
        }
    }
}
