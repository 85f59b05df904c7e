//! The counting formulas: f-vectors and h-polynomials of the orbit polytope
//! of a stabilizer subset `J`, Eulerian closed forms and recurrences for the
//! tail-interval family `J(k,n)`, and Poincaré polynomials / Betti numbers
//! of the associated projective toric variety.
//!
//! Everything here is driven by the cross-section-lattice count: the faces
//! of the orbit polytope correspond to the admissible family `S(J)`, a face
//! for `I` having dimension `|I|` and orbit size `(n+1)! / |W_{I*_J}|`.

use crate::coxeter::{
    admissible_subsets, classify_combinatorially_smooth, i_star, parabolic_order, Form,
    SimpleSubset,
};
use crate::error::{Error, Result};
use crate::eulerian::{binomial, eulerian_polynomial, factorial};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Face counts `f_0..f_d` of a `d`-polytope.
///
/// Invariants, checked on construction: all counts are positive, `f_d = 1`
/// (the polytope itself is its unique `d`-face), and the alternating sum
/// `Σ (-1)^i f_i` equals 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector<T> {
    counts: Vec<T>,
}

impl<T: Scalar> FVector<T> {
    pub fn new(counts: Vec<T>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::NotPolytopal("empty face-count sequence".into()));
        }
        if let Some(i) = counts.iter().position(|c| !c.is_positive()) {
            return Err(Error::NotPolytopal(format!(
                "face count f_{i} = {} is not positive",
                counts[i]
            )));
        }
        if !counts.last().unwrap().is_one() {
            return Err(Error::NotPolytopal(format!(
                "top face count is {}, expected 1",
                counts.last().unwrap()
            )));
        }
        let mut alternating = T::zero();
        for (i, c) in counts.iter().enumerate() {
            if i % 2 == 0 {
                alternating = alternating + c.clone();
            } else {
                alternating = alternating - c.clone();
            }
        }
        if !alternating.is_one() {
            return Err(Error::NotPolytopal(format!(
                "alternating sum is {alternating}, expected 1"
            )));
        }
        Ok(FVector { counts })
    }

    /// Dimension `d` of the polytope.
    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    /// The face polynomial `f(t) = Σ f_i t^i`.
    pub fn polynomial(&self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.counts.clone())
    }
}

/// The h-vector `h_0..h_d`, wrapped as the polynomial `h(t) = f(t-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector<T> {
    coeffs: Polynomial<T>,
}

impl<T: Scalar> HVector<T> {
    pub fn from_polynomial(coeffs: Polynomial<T>) -> Self {
        HVector { coeffs }
    }

    pub fn polynomial(&self) -> &Polynomial<T> {
        &self.coeffs
    }

    pub fn d(&self) -> usize {
        self.coeffs.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.coeff(i)
    }

    /// `h_i = h_(d-i)` for all `i`.
    pub fn is_palindromic(&self) -> bool {
        let d = self.d();
        (0..=d / 2).all(|i| self.coeff(i) == self.coeff(d - i))
    }
}

/// `h(t) = f(t - 1)`.
pub fn f_to_h<T: Scalar>(f: &FVector<T>) -> HVector<T> {
    HVector::from_polynomial(f.polynomial().compose_linear(-1))
}

/// `f(t) = h(t + 1)`; fails when the result is not a valid face-count
/// sequence (the input was not the h-vector of a polytope).
pub fn h_to_f<T: Scalar>(h: &HVector<T>) -> Result<FVector<T>> {
    let f = h.polynomial().compose_linear(1);
    let mut counts = f.coeffs().to_vec();
    // pad so a dropped top coefficient is reported as a bad top count
    while counts.len() < h.d() + 1 {
        counts.push(T::zero());
    }
    FVector::new(counts)
}

/// Face-orbit sizes of `P_λ` summed by dimension: entry `i` is
/// `Σ_(I ∈ S(J), |I| = i) (n+1)! / |W_{I*_J}|`, which is `f_i`.
///
/// Entry `n` is zero exactly when `J` is the full set (the polytope
/// degenerates to a point); all earlier entries are then zero too.
fn face_counts_by_size<T: Scalar>(j: &SimpleSubset) -> Vec<T> {
    let n = j.rank();
    let group_order: T = factorial(n + 1);
    let mut counts = vec![T::zero(); n as usize + 1];
    for i in admissible_subsets(n, j) {
        let stabilizer: T = parabolic_order(&i_star(&i, j));
        let (orbit, remainder) = group_order.div_rem(&stabilizer);
        assert!(
            remainder.is_zero(),
            "internal invariant violated: |W_I*| = {stabilizer} does not divide |W| = {group_order}"
        );
        let size = i.len() as usize;
        counts[size] = counts[size].clone() + orbit;
    }
    counts
}

/// The f-vector of `P_λ` from the lattice count. The polytope has dimension
/// `n` for proper `J` and collapses to a point for `J = S`.
pub fn f_vector_lattice<T: Scalar>(j: &SimpleSubset) -> FVector<T> {
    let mut counts: Vec<T> = face_counts_by_size(j);
    while counts.len() > 1 && counts.last().unwrap().is_zero() {
        counts.pop();
    }
    FVector::new(counts).expect("internal invariant violated: lattice face counts not polytopal")
}

/// The h-polynomial of `X(J)`:
/// `h(t) = Σ_(I ∈ S(J)) (n+1)!/|W_{I*_J}| (t-1)^(|I|)`,
/// evaluated by Horner in `(t - 1)` over the by-size face counts.
pub fn h_polynomial_lattice<T: Scalar>(j: &SimpleSubset) -> HVector<T> {
    let counts = face_counts_by_size(j);
    let shift = Polynomial::from_coeffs(vec![-T::one(), T::one()]); // t - 1
    let mut h = Polynomial::zero();
    for c in counts.into_iter().rev() {
        h = h * shift.clone() + Polynomial::constant(c);
    }
    HVector::from_polynomial(h)
}

/// The subset-sum form of the Eulerian polynomial:
/// `Σ_(I ⊆ S) (n+1)!/|W_I| (t-1)^(|I|)`, which equals `E_(n+1)(t)`.
pub fn eulerian_polynomial_subset_form<T: Scalar>(n: u32) -> Polynomial<T> {
    let group_order: T = factorial(n + 1);
    let mut counts = vec![T::zero(); n as usize + 1];
    for i in admissible_subsets(n, &SimpleSubset::empty(n)) {
        let order: T = parabolic_order(&i);
        let (orbit, remainder) = group_order.div_rem(&order);
        assert!(
            remainder.is_zero(),
            "internal invariant violated: non-exact division"
        );
        let size = i.len() as usize;
        counts[size] = counts[size].clone() + orbit;
    }
    let shift = Polynomial::from_coeffs(vec![-T::one(), T::one()]);
    let mut e = Polynomial::zero();
    for c in counts.into_iter().rev() {
        e = e * shift.clone() + Polynomial::constant(c);
    }
    e
}

/// Closed form for the single-reflection stabilizer `J = {s_n}`:
/// `h(t) = E_(n+1)(t) - C(n+1,2) t E_(n-1)(t)`, for `n >= 2`.
pub fn h_single_reflection_closed_form<T: Scalar>(n: u32) -> Result<HVector<T>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "closed form needs rank >= 2, got {n}"
        )));
    }
    let correction =
        Polynomial::monomial(binomial::<T>(n + 1, 2), 1) * eulerian_polynomial::<T>(n - 1);
    Ok(HVector::from_polynomial(
        eulerian_polynomial::<T>(n + 1) - correction,
    ))
}

/// h-vector of the tail interval `J(k,n)` by the recurrence
/// `h_k = h_(k-1) - C(n+1,k+1) (t^k + ... + t) E_(n-k)`, iterated from the
/// permutohedron base case `h_0 = E_(n+1)`.
///
/// `k = n` is allowed: with `E_0 = 1` the recurrence collapses to `h_n = 1`,
/// matching the point that `J = S` leaves of the orbit.
pub fn h_recurrence<T: Scalar>(n: u32, k: u32) -> Result<HVector<T>> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "tail interval index {k} exceeds rank {n}"
        )));
    }
    let mut h = eulerian_polynomial::<T>(n + 1);
    for step in 1..=k {
        let ladder = Polynomial::<T>::sum_of_powers(1, step as usize);
        let term = ladder.scale(&binomial::<T>(n + 1, step as i64 + 1))
            * eulerian_polynomial::<T>(n - step);
        h = h - term;
    }
    Ok(HVector::from_polynomial(h))
}

/// The Poincaré polynomial `P(t) = h(t^2)` of `X(J)` and its Betti sequence
/// `b_0..b_(2d)` (`b_(2i) = h_i`, odd Betti numbers zero).
///
/// Computed for every `J`; `smooth` records whether the coefficients really
/// are Betti numbers of a rationally smooth variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poincare<T> {
    pub polynomial: Polynomial<T>,
    pub betti: Vec<T>,
    pub smooth: bool,
    pub form: Form,
}

pub fn poincare<T: Scalar>(j: &SimpleSubset) -> Poincare<T> {
    let h = h_polynomial_lattice::<T>(j);
    let polynomial = h.polynomial().substitute_square();
    let d = h.d();
    let betti = (0..=2 * d).map(|i| polynomial.coeff(i)).collect();
    let (smooth, form) = classify_combinatorially_smooth(j);
    Poincare {
        polynomial,
        betti,
        smooth,
        form,
    }
}

/// The summed recurrence for Poincaré polynomials of the tail-interval
/// family: `Σ_(i=2..=k) C(n+1,i+1) (t^(2i) + ... + t^2) E_(n-i)(t^2)`,
/// which telescopes to `P_1(t) - P_k(t)`. Empty (zero) at `k = 1`.
pub fn poincare_difference<T: Scalar>(n: u32, k: u32) -> Result<Polynomial<T>> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut sum = Polynomial::zero();
    for i in 2..=k {
        let ladder = Polynomial::<T>::sum_of_powers(1, i as usize).substitute_square();
        let term = ladder.scale(&binomial::<T>(n + 1, i as i64 + 1))
            * eulerian_polynomial::<T>(n - i).substitute_square();
        sum = sum + term;
    }
    Ok(sum)
}

/// Both sides of the telescoping identity
/// `Σ_(i=0..k-1) C(k+1,i) (t-1)^(k-i) + k = t + t^2 + ... + t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck<T> {
    pub lhs: Polynomial<T>,
    pub rhs: Polynomial<T>,
    pub equal: bool,
}

pub fn binomial_geometric_identity<T: Scalar>(k: u32) -> IdentityCheck<T> {
    let shift = Polynomial::from_coeffs(vec![-T::one(), T::one()]); // t - 1
                                                                    // (t-1)^e for e = 0..=k
    let mut shift_pows = vec![Polynomial::<T>::one()];
    for e in 1..=k as usize {
        shift_pows.push(&shift_pows[e - 1] * &shift);
    }
    let mut lhs = Polynomial::constant(crate::scalar::scalar_from_u32::<T>(k));
    for i in 0..k {
        let term = shift_pows[(k - i) as usize].scale(&binomial::<T>(k + 1, i as i64));
        lhs = lhs + term;
    }
    let rhs = Polynomial::<T>::sum_of_powers(1, k as usize);
    let equal = lhs == rhs;
    IdentityCheck { lhs, rhs, equal }
}
