use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use quiddity::classify::{
    census, classify, enumerate_quiddities, transfer_theta, ClassifyFlags, EnumerationReport, Family,
};
use quiddity::numfield::rational::ratio;
use quiddity::numfield::{ComplexInterval, FieldElement, NumberField, QPoly};
use quiddity::par::Execution;
use quiddity::quiddity::{canonical_multipliers, QuiddityTuple};
use quiddity::reducibility::{brute_force_reduction, find_reduction};

fn sqrt2_field() -> NumberField {
    NumberField::make(&QPoly::from_i64s(&[-2, 0, 1]), &ComplexInterval::real(ratio(1, 1), ratio(2, 1)), false).unwrap()
}

fn sqrt2() -> FieldElement {
    sqrt2_field().alpha()
}

fn sqrt2_census() -> &'static EnumerationReport {
    static R: OnceLock<EnumerationReport> = OnceLock::new();
    R.get_or_init(|| census(&sqrt2(), 7, 2, Execution::Parallel).unwrap())
}

fn integer_census() -> &'static EnumerationReport {
    static R: OnceLock<EnumerationReport> = OnceLock::new();
    R.get_or_init(|| census(&NumberField::rationals().one(), 7, 2, Execution::Parallel).unwrap())
}

fn tuple(w: &FieldElement, ks: &[i64]) -> QuiddityTuple {
    QuiddityTuple::new(w.clone(), ks.to_vec())
}

#[test]
fn reduction_agrees_with_exhaustive_search() {
    let one = NumberField::rationals().one();
    for (w, report, bound) in [(one, integer_census(), 12), (sqrt2(), sqrt2_census(), 20)] {
        for m in report.quiddities.iter().filter(|m| m.multipliers.len() <= 6) {
            let t = tuple(&w, &m.multipliers);
            let fast = find_reduction(&t).unwrap();
            let slow = brute_force_reduction(&t, bound).unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "{:?}", m.multipliers);
        }
    }
}

#[test]
fn witnesses_replay() {
    let one = NumberField::rationals().one();
    for (w, report) in [(one, integer_census()), (sqrt2(), sqrt2_census())] {
        for m in &report.quiddities {
            if let Some(wit) = &m.witness {
                assert!(wit.replays(&tuple(&w, &m.multipliers)), "{:?}", m.multipliers);
            }
        }
    }
}

#[test]
fn zero_entries_force_reducibility_from_size_five() {
    let one = NumberField::rationals().one();
    for (w, report) in [(one, integer_census()), (sqrt2(), sqrt2_census())] {
        for m in report.quiddities.iter().filter(|m| m.multipliers.len() >= 5 && m.multipliers.contains(&0)) {
            assert!(find_reduction(&tuple(&w, &m.multipliers)).unwrap().is_some(), "{:?}", m.multipliers);
        }
    }
}

#[test]
fn four_tuples_are_irreducible_without_one() {
    let w = sqrt2();
    for m in sqrt2_census().of_size(4) {
        assert!(find_reduction(&tuple(&w, &m.multipliers)).unwrap().is_none(), "{:?}", m.multipliers);
    }
}

#[test]
fn four_tuple_family_has_only_zero_four_tuples() {
    let f = sqrt2_field();
    let w = &f.one() - &f.alpha();
    assert_eq!(classify(Some(&w), ClassifyFlags::default()).unwrap().family, Family::FourTupleFamily);
    let report = census(&w, 7, 2, Execution::Parallel).unwrap();
    for ks in report.irreducible.unwrap() {
        assert!((-2..=2).any(|k| canonical_multipliers(&[0, k, 0, -k]) == ks), "{ks:?}");
    }
}

#[test]
fn sequential_and_parallel_enumerations_agree() {
    for w in [NumberField::rationals().one(), sqrt2()] {
        let seq = enumerate_quiddities(&w, 6, 2, Execution::Sequential).unwrap();
        let par = enumerate_quiddities(&w, 6, 2, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}

fn negated(report: &EnumerationReport) -> BTreeSet<Vec<i64>> {
    report
        .quiddities
        .iter()
        .map(|m| canonical_multipliers(&m.multipliers.iter().map(|k| -k).collect::<Vec<_>>()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn census_is_invariant_under_generator_sign(a in -3i64..=3, b in -2i64..=2) {
        prop_assume!(a != 0 || b != 0);
        let f = sqrt2_field();
        let w = &f.from_int(a) + &f.alpha().scale_int(b);
        let plus = enumerate_quiddities(&w, 6, 2, Execution::Parallel).unwrap();
        let minus = enumerate_quiddities(&-&w, 6, 2, Execution::Parallel).unwrap();
        prop_assert_eq!(plus.multiplier_sets(), negated(&minus));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn conjugate_transfer_is_an_involution(i in 0usize..1000) {
        let members = &sqrt2_census().quiddities;
        let ks = &members[i % members.len()].multipliers;
        let t = tuple(&sqrt2(), ks);
        let source = t.field().selected_index();
        let there = transfer_theta(&t, 1 - source).unwrap();
        prop_assert!(there.certified());
        let back = transfer_theta(&there.tuple, source).unwrap();
        prop_assert_eq!(back.tuple.multipliers(), &ks[..]);
        prop_assert_eq!(back.tuple.generator(), t.generator());
    }
}
