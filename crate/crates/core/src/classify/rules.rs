//! Rule-based classification of the irreducible quiddities over `<w>`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use super::ClassifyError;
use crate::numfield::algebraic::imaginary_part_squared_compare;
use crate::numfield::{BigRat, FieldElement, QPoly};
use crate::polycrit::{irreducible_over_q, schur_cohn_count};
use crate::quiddity::canonical_multipliers;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Irreducibles are exactly `(0, kw, 0, -kw)` and `(kw, 0, -kw, 0)`.
    FourTupleFamily,
    /// `(1,1,1)`, `(-1,-1,-1)` and the four-tuples with `k != +-1`.
    IntegerFamily,
    /// `w = +-sqrt(k)`, `k` in `{2, 3}`: the four-tuples plus the constant
    /// `+-w` tuples of size 4 (`k = 2`) or 6 (`k = 3`).
    SqrtKFamily(u32),
    /// Only `(0, 0, 0, 0)`.
    ZeroGenerator,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Justification {
    ModulusGE2,
    ConjugateModulusGE2,
    ComplexABProductGE1,
    Transcendental,
    SpecialTable,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationOutcome {
    pub family: Family,
    pub justification: Justification,
    pub notes: Vec<String>,
}

impl ClassificationOutcome {
    fn new(family: Family, justification: Justification, note: impl Into<String>) -> Self {
        ClassificationOutcome { family, justification, notes: vec![note.into()] }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyFlags {
    /// The generator is declared transcendental; no field is needed.
    pub transcendental: bool,
}

fn two() -> BigRat {
    BigRat::from_integer(2.into())
}

/// Applies the rules in order; the first match wins. `w` may be omitted
/// only for a transcendental generator.
pub fn classify(w: Option<&FieldElement>, flags: ClassifyFlags) -> Result<ClassificationOutcome, ClassifyError> {
    let Some(w) = w else {
        if flags.transcendental {
            return Ok(transcendental());
        }
        return Err(ClassifyError::MissingGenerator);
    };
    if w.is_zero() {
        return Ok(ClassificationOutcome::new(Family::ZeroGenerator, Justification::SpecialTable, "w = 0"));
    }
    if let Some(q) = w.as_rational() {
        if q.is_integer() {
            let k = q.to_integer();
            if k == 1.into() || k == (-1).into() {
                return Ok(ClassificationOutcome::new(Family::IntegerFamily, Justification::SpecialTable, "w = +-1"));
            }
            return Ok(ClassificationOutcome::new(
                Family::FourTupleFamily,
                Justification::ModulusGE2,
                format!("w = {k} is an integer with |w| >= 2"),
            ));
        }
    }
    let square = w * w;
    if w.as_rational().is_none() {
        for k in [2u32, 3] {
            if square.as_rational() == Some(BigRat::from_integer(k.into())) {
                return Ok(ClassificationOutcome::new(
                    Family::SqrtKFamily(k),
                    Justification::SpecialTable,
                    format!("w^2 = {k}"),
                ));
            }
        }
    }
    if flags.transcendental {
        return Ok(transcendental());
    }
    let field = w.field();
    let sel = field.selected_index();
    if w.modulus_compare(sel, &two()) != Ordering::Less {
        return Ok(ClassificationOutcome::new(
            Family::FourTupleFamily,
            Justification::ModulusGE2,
            "|w| >= 2 under the selected embedding",
        ));
    }
    let mu = w.min_poly();
    if !field.is_proven_irreducible() && !irreducible_over_q(&mu).is_proven() {
        return Err(ClassifyError::IrreducibilityUnknown);
    }
    let count = schur_cohn_count(&mu, &two())?;
    if count.has_root_outside_open_disk() {
        let witness = (0..field.root_count())
            .find(|&j| w.modulus_compare(j, &two()) != Ordering::Less)
            .expect("a conjugate outside the disk is some embedding of w");
        let mut out = ClassificationOutcome::new(
            Family::FourTupleFamily,
            Justification::ConjugateModulusGE2,
            format!(
                "minimal polynomial {mu} has {} of {} roots in |z| < 2",
                count.count,
                mu.degree().unwrap_or(0)
            ),
        );
        out.notes.push(format!("embedding at root {witness} has modulus >= 2"));
        return Ok(out);
    }
    // w = a + ib with |ab| >= 1, i.e. (Im w^2)^2 = 4 (ab)^2 >= 4.
    if imaginary_part_squared_compare(&square, sel, &BigRat::from_integer(4.into())) != Ordering::Less {
        return Ok(ClassificationOutcome::new(
            Family::FourTupleFamily,
            Justification::ComplexABProductGE1,
            "w = a + ib with |ab| >= 1",
        ));
    }
    let mut out = ClassificationOutcome::new(
        Family::Unknown,
        Justification::None,
        "no rule applies: every conjugate has modulus < 2 and |ab| < 1",
    );
    if is_golden(w) {
        out.notes.push(
            "w = +-(1 + sqrt 5)/2: the constant 5-tuples (w,...,w) and (-w,...,-w) are quiddities; \
             conjectured irreducibles are these and the zero four-tuples"
                .to_string(),
        );
    }
    Ok(out)
}

fn transcendental() -> ClassificationOutcome {
    ClassificationOutcome::new(Family::FourTupleFamily, Justification::Transcendental, "generator declared transcendental")
}

/// `w^2 -+ w - 1 = 0` with `|w| > 1`.
fn is_golden(w: &FieldElement) -> bool {
    let m = w.min_poly();
    (m == QPoly::from_i64s(&[-1, -1, 1]) || m == QPoly::from_i64s(&[-1, 1, 1]))
        && w.modulus_compare(w.field().selected_index(), &BigRat::from_integer(1.into())) == Ordering::Greater
}

/// Canonical multipliers of the irreducibles of `family` with size at most
/// `n_max` and multipliers bounded by `k_bound`; `None` for `Unknown`.
pub fn expected_irreducibles(family: Family, n_max: usize, k_bound: i64) -> Option<BTreeSet<Vec<i64>>> {
    let four = |skip_units: bool| {
        (-k_bound..=k_bound)
            .filter(move |k| !(skip_units && k.abs() == 1))
            .flat_map(|k| [vec![0, k, 0, -k], vec![k, 0, -k, 0]])
    };
    let constant = |n: usize| [vec![1; n], vec![-1; n]];
    let all: Vec<Vec<i64>> = match family {
        Family::Unknown => return None,
        Family::ZeroGenerator => vec![vec![0, 0, 0, 0]],
        Family::FourTupleFamily => four(false).collect(),
        Family::IntegerFamily => four(true).chain(constant(3)).collect(),
        Family::SqrtKFamily(2) => four(false).chain(if k_bound >= 1 { constant(4).to_vec() } else { vec![] }).collect(),
        Family::SqrtKFamily(3) => four(false).chain(if k_bound >= 1 { constant(6).to_vec() } else { vec![] }).collect(),
        Family::SqrtKFamily(_) => return None,
    };
    Some(
        all.into_iter()
            .filter(|t| t.len() <= n_max && t.iter().all(|k| k.abs() <= k_bound))
            .map(|t| canonical_multipliers(&t))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational::{int, ratio};
    use crate::numfield::{ComplexInterval, NumberField};

    fn root(cs: &[i64], lo: BigRat, hi: BigRat) -> FieldElement {
        NumberField::make(&QPoly::from_i64s(cs), &ComplexInterval::real(lo, hi), false).unwrap().alpha()
    }

    fn family(w: &FieldElement) -> (Family, Justification) {
        let o = classify(Some(w), ClassifyFlags::default()).unwrap();
        (o.family, o.justification)
    }

    #[test]
    fn rule_order() {
        let q = NumberField::rationals();
        assert_eq!(family(&q.zero()).0, Family::ZeroGenerator);
        assert_eq!(family(&q.from_int(-1)).0, Family::IntegerFamily);
        assert_eq!(family(&q.from_int(3)), (Family::FourTupleFamily, Justification::ModulusGE2));
        assert_eq!(family(&q.from_rational(ratio(5, 2))), (Family::FourTupleFamily, Justification::ModulusGE2));
        assert_eq!(family(&q.from_rational(ratio(1, 2))).0, Family::Unknown);
        let s2 = root(&[-2, 0, 1], int(-2), int(-1));
        assert_eq!(family(&s2).0, Family::SqrtKFamily(2));
        let s5 = root(&[-5, 0, 1], int(2), int(3));
        assert_eq!(family(&s5), (Family::FourTupleFamily, Justification::ModulusGE2));
        let t = classify(None, ClassifyFlags { transcendental: true }).unwrap();
        assert_eq!(t.justification, Justification::Transcendental);
        assert_eq!(classify(None, ClassifyFlags::default()), Err(ClassifyError::MissingGenerator));
    }

    #[test]
    fn conjugate_rule_and_golden_ratio() {
        // 1 - sqrt 2, root of X^2 - 2X - 1
        let w = root(&[-1, -2, 1], ratio(-1, 2), ratio(-2, 5));
        assert_eq!(family(&w), (Family::FourTupleFamily, Justification::ConjugateModulusGE2));
        let phi = root(&[-1, -1, 1], int(1), int(2));
        let o = classify(Some(&phi), ClassifyFlags::default()).unwrap();
        assert_eq!(o.family, Family::Unknown);
        assert_eq!(o.notes.len(), 2);
        let phi_conj = root(&[-1, -1, 1], int(-1), int(0));
        assert_eq!(classify(Some(&phi_conj), ClassifyFlags::default()).unwrap().notes.len(), 1);
    }

    #[test]
    fn gaussian_generator_uses_ab_rule() {
        let f = NumberField::make(
            &QPoly::from_i64s(&[2, -2, 1]),
            &ComplexInterval { re: (int(0), int(2)), im: (int(0), int(2)) },
            false,
        )
        .unwrap();
        assert_eq!(family(&f.alpha()), (Family::FourTupleFamily, Justification::ComplexABProductGE1));
    }

    #[test]
    fn knowledge_base() {
        let z = expected_irreducibles(Family::IntegerFamily, 6, 2).unwrap();
        assert_eq!(z.len(), 4);
        assert!(z.contains(&vec![-2, 0, 2, 0]) && z.contains(&vec![0, 0, 0, 0]));
        let s3 = expected_irreducibles(Family::SqrtKFamily(3), 5, 2).unwrap();
        assert_eq!(s3.len(), 3);
        assert_eq!(expected_irreducibles(Family::SqrtKFamily(3), 6, 2).unwrap().len(), 5);
        assert_eq!(expected_irreducibles(Family::Unknown, 6, 2), None);
    }
}
