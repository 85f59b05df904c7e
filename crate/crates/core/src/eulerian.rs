//! Eulerian numbers and polynomials, plus the factorials and binomial
//! coefficients the counting formulas are built from.

use crate::poly::Polynomial;
use crate::scalar::{scalar_from_u32, Scalar};

/// `n!`.
pub fn factorial<T: Scalar>(n: u32) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * scalar_from_u32(i))
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial<T: Scalar>(n: u32, k: i64) -> T {
    if k < 0 || k > n as i64 {
        return T::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut c = T::one();
    for i in 1..=k {
        // exact at every step: c holds C(n-k+i-1, i-1) before this division
        c = c * scalar_from_u32(n - k + i) / scalar_from_u32(i);
    }
    c
}

/// Number of permutations of `1..=n` with exactly `ascents` ascents, by the
/// recurrence `E(n,i) = (i+1) E(n-1,i) + (n-i) E(n-1,i-1)`.
///
/// Out-of-range `ascents` yields zero rather than an error. `E(0,0) = 1` by
/// the empty-permutation convention.
pub fn eulerian_number<T: Scalar>(n: u32, ascents: i64) -> T {
    if n == 0 {
        return if ascents == 0 { T::one() } else { T::zero() };
    }
    if ascents < 0 || ascents >= n as i64 {
        return T::zero();
    }
    eulerian_row::<T>(n)[ascents as usize].clone()
}

/// The Eulerian polynomial `E_n(t) = Σ_i E(n,i) t^i`, of degree `n-1` for
/// `n >= 1`; `E_0(t) = 1` by convention.
pub fn eulerian_polynomial<T: Scalar>(n: u32) -> Polynomial<T> {
    if n == 0 {
        return Polynomial::one();
    }
    Polynomial::from_coeffs(eulerian_row(n))
}

/// Row `E(n, 0..=n-1)` of the Eulerian triangle, `n >= 1`.
fn eulerian_row<T: Scalar>(n: u32) -> Vec<T> {
    let mut row: Vec<T> = vec![T::one()];
    for m in 2..=n {
        let mut next = Vec::with_capacity(m as usize);
        for i in 0..m {
            let keep = if (i as usize) < row.len() {
                scalar_from_u32::<T>(i + 1) * row[i as usize].clone()
            } else {
                T::zero()
            };
            let lift = if i > 0 {
                scalar_from_u32::<T>(m - i) * row[(i - 1) as usize].clone()
            } else {
                T::zero()
            };
            next.push(keep + lift);
        }
        row = next;
    }
    row
}
