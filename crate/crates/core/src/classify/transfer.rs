//! Moving quiddities between conjugate embeddings.
//!
//! With `w = g(alpha)`, the entries of `M_n(k_1 w, ..., k_n w)` are
//! polynomials in `alpha` with rational coefficients. If each of them minus
//! its target value is divisible by the minimal polynomial, the same
//! identity holds at every root, so the multipliers give a quiddity for
//! every conjugate embedding.

use serde::Serialize;

use super::ClassifyError;
use crate::numfield::{BigRat, QPoly};
use crate::quiddity::{euler_expansion, is_quiddity, QuiddityTuple};

/// One constraint polynomial `R(X)` and whether the minimal polynomial
/// divides it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityCheck {
    pub constraint: String,
    pub polynomial: Vec<String>,
    pub divisible: bool,
}

#[derive(Clone, Debug)]
pub struct TransferOutcome {
    pub tuple: QuiddityTuple,
    pub epsilon: i8,
    pub source_index: usize,
    pub target_index: usize,
    pub certificate: Vec<DivisibilityCheck>,
}

impl TransferOutcome {
    pub fn certified(&self) -> bool {
        self.certificate.iter().all(|c| c.divisible)
    }
}

/// Constraint polynomials in `alpha` for `M_n = eps Id`, as pairs
/// `(name, polynomial)`; each must vanish at `alpha`.
pub fn constraint_polynomials(t: &QuiddityTuple, eps: i8) -> Vec<(&'static str, QPoly)> {
    let ks = t.multipliers();
    let n = ks.len();
    let g = t.generator().as_poly();
    let at = |part: &[i64]| euler_expansion(part).to_qpoly().compose(&g);
    let e = QPoly::constant(BigRat::from_integer(eps.into()));
    let mut out = vec![("K_n - eps", &at(ks) - &e)];
    if n >= 1 {
        out.push(("K_{n-1}(a_2..a_n)", at(&ks[1..])));
        out.push(("K_{n-1}(a_1..a_{n-1})", at(&ks[..n - 1])));
    }
    if n >= 2 {
        out.push(("K_{n-2}(a_2..a_{n-1}) + eps", &at(&ks[1..n - 1]) + &e));
    }
    out
}

/// The same multipliers over the conjugate generator at root `target`.
pub fn transfer_theta(t: &QuiddityTuple, target: usize) -> Result<TransferOutcome, ClassifyError> {
    let eps = is_quiddity(t).ok_or(ClassifyError::NotAQuiddity)?;
    let field = t.field();
    if !field.is_proven_irreducible() {
        return Err(ClassifyError::IrreducibilityUnknown);
    }
    let mu = field.min_poly();
    let certificate: Vec<DivisibilityCheck> = constraint_polynomials(t, eps)
        .into_iter()
        .map(|(name, r)| DivisibilityCheck {
            constraint: name.to_string(),
            divisible: r.divisible_by(mu),
            polynomial: r.to_strings(),
        })
        .collect();
    let target_field = field.with_selected(target)?;
    let generator = target_field.element(t.generator().coords())?;
    let image = QuiddityTuple::new(generator, t.multipliers().to_vec());
    let outcome = TransferOutcome {
        tuple: image,
        epsilon: eps,
        source_index: field.selected_index(),
        target_index: target,
        certificate,
    };
    if !outcome.certified() || is_quiddity(&outcome.tuple) != Some(eps) {
        return Err(ClassifyError::TransferFailed);
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational::int;
    use crate::numfield::{ComplexInterval, NumberField};

    fn sqrt2() -> NumberField {
        NumberField::make(&QPoly::from_i64s(&[-2, 0, 1]), &ComplexInterval::real(int(1), int(2)), false).unwrap()
    }

    #[test]
    fn constant_sqrt2_tuple_moves_to_negative_root() {
        let f = sqrt2();
        let other = (0..2).find(|&j| j != f.selected_index()).unwrap();
        let t = QuiddityTuple::new(f.alpha(), vec![1, 1, 1, 1]);
        let out = transfer_theta(&t, other).unwrap();
        assert!(out.certified());
        assert_eq!(out.tuple.multipliers(), &[1, 1, 1, 1]);
        // the embedded generator is now negative
        let e = out.tuple.generator().embed(other, 20);
        assert!(e.re.1 < int(0));
        let back = transfer_theta(&out.tuple, f.selected_index()).unwrap();
        assert_eq!(back.tuple.multipliers(), t.multipliers());
    }

    #[test]
    fn rejects_non_quiddities() {
        let f = sqrt2();
        let t = QuiddityTuple::new(f.alpha(), vec![1, 1, 1]);
        assert!(matches!(transfer_theta(&t, 0), Err(ClassifyError::NotAQuiddity)));
    }
}
