use num_complex::Complex64;
use proptest::prelude::*;

use quiddity::numfield::rational::ratio;
use quiddity::numfield::QPoly;
use quiddity::polycrit::{
    eisenstein, irreducible_over_q, modp_irreducible, osada, rouche_dominant_count, schur_cohn_count,
    IrreducibilityVerdict,
};

/// Durand–Kerner in double precision; `None` when it fails to settle.
fn numeric_roots(cs: &[i64]) -> Option<Vec<Complex64>> {
    let lead = *cs.last()? as f64;
    let monic: Vec<Complex64> = cs.iter().map(|&c| Complex64::new(c as f64 / lead, 0.0)).collect();
    let d = monic.len() - 1;
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let denom = (0..d).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            return Some(z);
        }
    }
    None
}

fn poly_coeffs() -> impl Strategy<Value = Vec<i64>> {
    (1usize..=8).prop_flat_map(|d| {
        (prop::collection::vec(-9i64..=9, d), prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])).prop_map(|(mut v, lead)| {
            v.push(lead);
            v
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn schur_cohn_matches_numeric_roots(cs in poly_coeffs(), r in prop::sample::select(vec![(1i64, 1i64), (2, 1), (3, 2)])) {
        let p = QPoly::from_i64s(&cs);
        let radius = ratio(r.0, r.1);
        let rf = r.0 as f64 / r.1 as f64;
        let sc = schur_cohn_count(&p, &radius).unwrap();
        let on = sc.on_boundary.unwrap();
        prop_assert!(sc.count + on <= p.degree().unwrap());

        // Zeros at the origin are exact; the rest go to the numeric solver.
        let zeros = cs.iter().take_while(|&&c| c == 0).count();
        let rest = &cs[zeros..];
        let roots = if rest.len() > 1 { numeric_roots(rest) } else { Some(Vec::new()) };
        prop_assume!(roots.is_some());
        let roots = roots.unwrap();
        // Clustered or near-circle roots are beyond double precision.
        prop_assume!(roots.iter().all(|z| (z.norm() - rf).abs() > 1e-6));
        prop_assume!(roots.iter().enumerate().all(|(i, a)| roots[..i].iter().all(|b| (a - b).norm() > 1e-5)));
        let inside = zeros + roots.iter().filter(|z| z.norm() < rf).count();
        prop_assert_eq!(sc.count, inside);
        prop_assert_eq!(on, 0);
    }

    #[test]
    fn rouche_agrees_with_schur_cohn(cs in poly_coeffs(), j in 0usize..9, r in prop::sample::select(vec![(1i64, 2i64), (1, 1), (2, 1)])) {
        let p = QPoly::from_i64s(&cs);
        prop_assume!(j < cs.len() && cs[j] != 0);
        let radius = ratio(r.0, r.1);
        if let Some(rc) = rouche_dominant_count(&p, j, &radius).unwrap() {
            let sc = schur_cohn_count(&p, &radius).unwrap();
            prop_assert_eq!(rc.count, sc.count);
            prop_assert_eq!(sc.on_boundary, Some(0));
        }
    }

    #[test]
    fn verdicts_respect_rational_roots(root in -4i64..=4, q in prop::collection::vec(-6i64..=6, 1..=5)) {
        // (X - root) * (X^k + q) has a rational root.
        let mut monic_q = q.clone();
        monic_q.push(1);
        let p = &QPoly::from_i64s(&[-root, 1]) * &QPoly::from_i64s(&monic_q);
        prop_assert!(!matches!(irreducible_over_q(&p), IrreducibilityVerdict::Proven(_)));
        prop_assert_eq!(eisenstein(&p), None);
        prop_assert_eq!(osada(&p), None);
        for prime in [2, 3, 5, 7, 11, 13] {
            prop_assert!(!modp_irreducible(&p, prime).unwrap());
        }
    }
}
