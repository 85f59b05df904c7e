//! One-stop summary record for a stabilizer subset, as consumed by the CLI.

use crate::coxeter::{classify_combinatorially_smooth, Form, SimpleSubset};
use crate::hvector::{f_vector_lattice, h_polynomial_lattice, poincare, FVector, HVector};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Everything the counting formulas say about one `(n, J)`.
#[derive(Clone, Debug)]
pub struct Report<T> {
    pub n: u32,
    pub j: SimpleSubset,
    pub form: Form,
    pub smooth: bool,
    pub f: FVector<T>,
    pub h: HVector<T>,
    pub poincare: Polynomial<T>,
    pub betti: Vec<T>,
}

impl<T: Scalar> Report<T> {
    pub fn compute(j: &SimpleSubset) -> Self {
        let (smooth, form) = classify_combinatorially_smooth(j);
        let p = poincare::<T>(j);
        Report {
            n: j.rank(),
            j: *j,
            form,
            smooth,
            f: f_vector_lattice(j),
            h: h_polynomial_lattice(j),
            poincare: p.polynomial,
            betti: p.betti,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    #[test]
    fn report_fields_are_consistent() {
        let j = SimpleSubset::new(3, [3]).unwrap();
        let report = Report::<Int>::compute(&j);
        assert_eq!(report.n, 3);
        assert!(report.smooth);
        assert_eq!(report.form, Form::RightInterval);
        assert_eq!(
            report.h.polynomial(),
            &report.f.polynomial().compose_linear(-1)
        );
        assert_eq!(report.poincare, report.h.polynomial().substitute_square());
        assert_eq!(report.betti.len(), 2 * report.h.d() + 1);
    }
}
