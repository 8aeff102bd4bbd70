//! Replayable verification suites. Each suite is a list of claims that are
//! recomputed from scratch and reported individually.

use std::collections::BTreeSet;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use quiddity::classify::{
    census, classify, enumerate_quiddities, expected_irreducibles, parity_audit, small_entry_violations,
    transfer_theta, ClassifyFlags, EnumerationReport, Family, Justification,
};
use quiddity::numfield::rational::{int, ratio};
use quiddity::numfield::{BigRat, ComplexInterval, FieldElement, NumberField, QPoly};
use quiddity::par::Execution;
use quiddity::polycrit::{eisenstein, osada, rouche_dominant_count, schur_cohn_count};
use quiddity::quiddity::{canonical_multipliers, continuant, equivalent_multipliers, is_quiddity, oplus, QuiddityTuple};
use quiddity::reducibility::{brute_force_reduction, find_reduction};

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub description: &'static str,
    pub claims: Vec<Claim>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(Execution) -> Result<Vec<Claim>>,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "small-sizes", description: "closed forms of the quiddities of size 2, 3 and 4 over Z", run: small_sizes },
    Suite { name: "oplus-examples", description: "worked sums and the neutral element (0,0)", run: oplus_examples },
    Suite { name: "four-continuant", description: "closed form of K_4 against the recurrence", run: four_continuant },
    Suite { name: "integer-census", description: "irreducibles over Z for n <= 8, |k| <= 3", run: integer_census },
    Suite { name: "sqrt2-census", description: "irreducibles over <sqrt 2> for n <= 8, |k| <= 2", run: sqrt2_census },
    Suite { name: "sqrt3-census", description: "irreducibles over <sqrt 3> for n <= 8, |k| <= 2", run: sqrt3_census },
    Suite { name: "conjugate-modulus", description: "<1 - sqrt 2> has only the zero four-tuples", run: conjugate_modulus },
    Suite { name: "gaussian-generator", description: "<1 + i> has even sizes and zero entries only", run: gaussian_generator },
    Suite { name: "even-sizes", description: "no odd sizes over <e^(i pi/4)> and <1/sqrt 2>", run: even_sizes },
    Suite { name: "constant-tuples", description: "constant quiddities of the golden ratio, 1 and sqrt 2", run: constant_tuples },
    Suite { name: "polynomial-criteria", description: "Eisenstein, Osada, dominant-term and Schur-Cohn examples", run: polynomial_criteria },
    Suite { name: "conjugate-transfer", description: "transfer to the conjugate embedding over <sqrt 2>", run: conjugate_transfer },
    Suite { name: "reduction-oracle", description: "forced-boundary reduction against exhaustive search", run: reduction_oracle },
    Suite { name: "small-entries", description: "every census member has two entries of modulus < 2", run: small_entries },
];

/// Alternative names accepted by `find`.
const ALIASES: &[(&str, &str)] = &[("rouche-examples", "polynomial-criteria")];

pub fn find(name: &str) -> Option<&'static Suite> {
    let name = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, n)| *n);
    SUITES.iter().find(|s| s.name == name)
}

impl Suite {
    pub fn run(&self, exec: Execution) -> Result<SuiteReport> {
        Ok(SuiteReport { suite: self.name, description: self.description, claims: (self.run)(exec)? })
    }
}

fn claim(text: impl Into<String>, pass: bool) -> Claim {
    Claim { claim: text.into(), pass, detail: None }
}

fn claim_eq<T: PartialEq + std::fmt::Debug>(text: impl Into<String>, got: T, want: T) -> Claim {
    let pass = got == want;
    Claim { claim: text.into(), pass, detail: (!pass).then(|| format!("got {got:?}, expected {want:?}")) }
}

pub fn field(min_poly: &[i64], hint: ComplexInterval) -> Result<NumberField> {
    Ok(NumberField::make(&QPoly::from_i64s(min_poly), &hint, false)?)
}

fn real(lo: BigRat, hi: BigRat) -> ComplexInterval {
    ComplexInterval::real(lo, hi)
}

fn rect(re: (BigRat, BigRat), im: (BigRat, BigRat)) -> ComplexInterval {
    ComplexInterval { re, im }
}

pub fn sqrt2() -> Result<FieldElement> {
    Ok(field(&[-2, 0, 1], real(int(1), int(2)))?.alpha())
}

fn sqrt3() -> Result<FieldElement> {
    Ok(field(&[-3, 0, 1], real(int(1), int(2)))?.alpha())
}

fn one_minus_sqrt2() -> Result<FieldElement> {
    Ok(field(&[-1, -2, 1], real(ratio(-1, 2), ratio(-2, 5)))?.alpha())
}

fn one_plus_i() -> Result<FieldElement> {
    Ok(field(&[2, -2, 1], rect((int(0), int(2)), (int(0), int(2))))?.alpha())
}

fn canonical_set(ts: impl IntoIterator<Item = Vec<i64>>) -> BTreeSet<Vec<i64>> {
    ts.into_iter().map(|t| canonical_multipliers(&t)).collect()
}

fn irreducible_set(r: &EnumerationReport) -> BTreeSet<Vec<i64>> {
    r.irreducible.clone().unwrap_or_default().into_iter().collect()
}

/// Irreducibles match the family list and every reducible member replays.
fn census_claims(label: &str, w: &FieldElement, n_max: usize, k_bound: i64, family: Family, exec: Execution) -> Result<Vec<Claim>> {
    let r = census(w, n_max, k_bound, exec)?;
    let want = expected_irreducibles(family, n_max, k_bound).unwrap_or_default();
    let replay = r.quiddities.iter().filter(|m| m.irreducible == Some(false) && m.multipliers.len() > 2).all(|m| {
        let t = QuiddityTuple::new(w.clone(), m.multipliers.clone());
        m.witness.as_ref().is_some_and(|wit| wit.replays(&t))
    });
    Ok(vec![
        claim_eq(format!("{label}: irreducibles equal the {family:?} list within bounds"), irreducible_set(&r), want),
        claim(format!("{label}: every reducible member carries a replaying witness"), replay),
    ])
}

fn small_sizes(exec: Execution) -> Result<Vec<Claim>> {
    let z = NumberField::rationals().one();
    let r = enumerate_quiddities(&z, 4, 5, exec)?;
    let size = |n: usize| canonical_set(r.of_size(n).map(|m| m.multipliers.clone()));
    let range = || -5i64..=5;
    let mut four = Vec::new();
    for a in range() {
        for b in range() {
            if a * b == 0 {
                four.push(vec![-a, b, a, -b]);
            }
            if a * b == 2 {
                four.push(vec![a, b, a, b]);
            }
        }
    }
    Ok(vec![
        claim_eq("size 1: none", size(1), BTreeSet::new()),
        claim_eq("size 2: (0,0) only", size(2), canonical_set([vec![0, 0]])),
        claim_eq("size 3: (1,1,1) and (-1,-1,-1)", size(3), canonical_set([vec![1, 1, 1], vec![-1, -1, -1]])),
        claim_eq("size 4: (-a,b,a,-b) with ab = 0 and (a,b,a,b) with ab = 2", size(4), canonical_set(four)),
    ])
}

fn oplus_examples(_: Execution) -> Result<Vec<Claim>> {
    let left = oplus(&[0, 0], &[5, -3, 2, 7])?;
    Ok(vec![
        claim_eq("(-1,2,4) + (3,0,1) = (0,2,7,0)", oplus(&[-1, 2, 4], &[3, 0, 1])?, vec![0, 2, 7, 0]),
        claim_eq("(-2,1,3,1) + (2,3,1) = (-1,1,3,3,3)", oplus(&[-2, 1, 3, 1], &[2, 3, 1])?, vec![-1, 1, 3, 3, 3]),
        claim_eq(
            "(2,1,0,2) + (1,-3,2,5,1) = (3,1,0,3,-3,2,5)",
            oplus(&[2, 1, 0, 2], &[1, -3, 2, 5, 1])?,
            vec![3, 1, 0, 3, -3, 2, 5],
        ),
        claim_eq("a + (0,0) = a", oplus(&[5, -3, 2, 7], &[0, 0])?, vec![5, -3, 2, 7]),
        claim("(0,0) + a is equivalent to a", equivalent_multipliers(&left, &[5, -3, 2, 7])),
    ])
}

fn four_continuant(_: Execution) -> Result<Vec<Claim>> {
    let q = NumberField::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let v: Vec<BigRat> = (0..4).map(|_| ratio(rng.gen_range(-50..=50), rng.gen_range(1..=12))).collect();
        let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
        let closed = a * b * c * d - a * b - a * d - c * d + int(1);
        let entries: Vec<FieldElement> = v.iter().map(|x| q.from_rational(x.clone())).collect();
        if continuant(&q, &entries).as_rational() != Some(closed) {
            mismatches += 1;
        }
    }
    Ok(vec![claim_eq("K_4 = abcd - ab - ad - cd + 1 on 1000 random rational tuples", mismatches, 0)])
}

fn integer_census(exec: Execution) -> Result<Vec<Claim>> {
    census_claims("Z", &NumberField::rationals().one(), 8, 3, Family::IntegerFamily, exec)
}

fn sqrt2_census(exec: Execution) -> Result<Vec<Claim>> {
    census_claims("<sqrt 2>", &sqrt2()?, 8, 2, Family::SqrtKFamily(2), exec)
}

fn sqrt3_census(exec: Execution) -> Result<Vec<Claim>> {
    census_claims("<sqrt 3>", &sqrt3()?, 8, 2, Family::SqrtKFamily(3), exec)
}

fn conjugate_modulus(exec: Execution) -> Result<Vec<Claim>> {
    let w = one_minus_sqrt2()?;
    let mut claims = census_claims("<1 - sqrt 2>", &w, 8, 2, Family::FourTupleFamily, exec)?;
    let o = classify(Some(&w), ClassifyFlags::default())?;
    claims.push(claim_eq(
        "classified through a conjugate of modulus >= 2",
        (o.family, o.justification),
        (Family::FourTupleFamily, Justification::ConjugateModulusGE2),
    ));
    Ok(claims)
}

fn gaussian_generator(exec: Execution) -> Result<Vec<Claim>> {
    let w = one_plus_i()?;
    let r = census(&w, 8, 2, exec)?;
    let odd: Vec<_> = r.quiddities.iter().filter(|m| m.multipliers.len() % 2 == 1).collect();
    let zero_free: Vec<_> = r.quiddities.iter().filter(|m| !m.multipliers.contains(&0)).collect();
    let o = classify(Some(&w), ClassifyFlags::default())?;
    Ok(vec![
        claim_eq("no odd-size quiddity", odd.len(), 0),
        claim_eq("every quiddity has a zero entry", zero_free.len(), 0),
        claim_eq(
            "irreducibles are the zero four-tuples",
            irreducible_set(&r),
            expected_irreducibles(Family::FourTupleFamily, 8, 2).unwrap_or_default(),
        ),
        claim_eq(
            "classified by |ab| >= 1",
            (o.family, o.justification),
            (Family::FourTupleFamily, Justification::ComplexABProductGE1),
        ),
    ])
}

fn even_sizes(exec: Execution) -> Result<Vec<Claim>> {
    let zeta = field(&[1, 0, 0, 0, 1], rect((int(0), int(1)), (int(0), int(1))))?.alpha();
    let half = NumberField::make(&QPoly::new(vec![ratio(-1, 2), int(0), int(1)]), &real(int(0), int(1)), false)?.alpha();
    let a = parity_audit(&zeta, 7, 2, exec)?;
    let b = parity_audit(&half, 7, 2, exec)?;
    Ok(vec![
        claim_eq("<e^(i pi/4)>: odd sizes up to 7", a.odd_size_members, vec![]),
        claim_eq("<1/sqrt 2>: odd sizes up to 7", b.odd_size_members, vec![]),
    ])
}

fn constant_tuples(_: Execution) -> Result<Vec<Claim>> {
    let phi = field(&[-1, -1, 1], real(int(1), int(2)))?.alpha();
    let t = |w: &FieldElement, n: usize| is_quiddity(&QuiddityTuple::new(w.clone(), vec![1; n]));
    Ok(vec![
        claim_eq("M_5(phi, ..., phi) = -Id", t(&phi, 5), Some(-1)),
        claim_eq("twelve 1s: M_12 = +Id", t(&NumberField::rationals().one(), 12), Some(1)),
        claim_eq("eight sqrt 2: M_8 = +Id", t(&sqrt2()?, 8), Some(1)),
    ])
}

fn polynomial_criteria(_: Execution) -> Result<Vec<Claim>> {
    let a = QPoly::from_i64s(&[5, 0, 0, 5, 10, 1]);
    let c = QPoly::from_i64s(&[11, 1, -1, 2, 0, 0, 5, 1]);
    let ra = rouche_dominant_count(&a, 4, &int(2))?;
    let rc = rouche_dominant_count(&c, 6, &int(2))?;
    let ev = |r: &Option<quiddity::polycrit::DiskRootCount>| {
        r.as_ref().and_then(|r| r.rouche.as_ref().map(|e| (e.others.clone(), e.dominant.clone(), r.count)))
    };
    Ok(vec![
        claim_eq("Eisenstein proves X^5 + 10X^4 + 5X^3 + 5 irreducible at p = 5", eisenstein(&a), Some(5)),
        claim_eq("Osada proves X^7 + 5X^6 + 2X^3 - X^2 + X + 11 irreducible at p = 11", osada(&c), Some(11)),
        claim_eq("on |z| = 2: 77 < 160, four roots inside", ev(&ra), Some((int(77), int(160), 4))),
        claim_eq("on |z| = 2: 161 < 320, six roots inside", ev(&rc), Some((int(161), int(320), 6))),
        claim_eq("Schur-Cohn counts four roots of the quintic in |z| < 2", schur_cohn_count(&a, &int(2))?.count, 4),
    ])
}

fn conjugate_transfer(exec: Execution) -> Result<Vec<Claim>> {
    let w = sqrt2()?;
    let f = w.field();
    let target = (0..f.root_count()).find(|&j| j != f.selected_index()).expect("degree two");
    let w_target = f.with_selected(target)?.element(w.coords())?;
    let src = census(&w, 6, 2, exec)?;
    let dst = census(&w_target, 6, 2, exec)?;
    let mut maps = true;
    let mut certified = true;
    let mut involution = true;
    for m in &src.quiddities {
        let t = QuiddityTuple::new(w.clone(), m.multipliers.clone());
        let out = transfer_theta(&t, target)?;
        maps &= is_quiddity(&out.tuple) == Some(m.epsilon);
        certified &= out.certified();
        let back = transfer_theta(&out.tuple, f.selected_index())?;
        involution &= back.tuple.multipliers() == t.multipliers();
    }
    Ok(vec![
        claim("every quiddity maps to a quiddity with the same sign", maps),
        claim_eq("the two censuses have the same members", src.multiplier_sets(), dst.multiplier_sets()),
        claim_eq("irreducibles map to irreducibles", irreducible_set(&src), irreducible_set(&dst)),
        claim("the transfer is an involution", involution),
        claim("the minimal polynomial divides every constraint polynomial", certified),
    ])
}

fn reduction_oracle(exec: Execution) -> Result<Vec<Claim>> {
    // Boundary multipliers are entries of a product of at most three inner
    // matrices: at most 12 over Z and 20 over <sqrt 2> for |k| <= 2.
    let mut claims = Vec::new();
    for (label, w, bound) in [("Z", NumberField::rationals().one(), 12), ("<sqrt 2>", sqrt2()?, 20)] {
        let r = enumerate_quiddities(&w, 6, 2, exec)?;
        let disagreements: Vec<Vec<i64>> = exec
            .map(&r.quiddities, |m| {
                let t = QuiddityTuple::new(w.clone(), m.multipliers.clone());
                let fast = find_reduction(&t).map(|x| x.is_some());
                let slow = brute_force_reduction(&t, bound).map(|x| x.is_some());
                (fast != slow).then(|| m.multipliers.clone())
            })
            .into_iter()
            .flatten()
            .collect();
        claims.push(claim_eq(format!("{label}: both decisions agree on all {} members", r.quiddities.len()), disagreements, vec![]));
    }
    Ok(claims)
}

fn small_entries(exec: Execution) -> Result<Vec<Claim>> {
    let z = NumberField::rationals().one();
    let mut claims = Vec::new();
    for (label, w, k) in [
        ("Z", z, 3),
        ("<sqrt 2>", sqrt2()?, 2),
        ("<sqrt 3>", sqrt3()?, 2),
        ("<1 - sqrt 2>", one_minus_sqrt2()?, 2),
        ("<1 + i>", one_plus_i()?, 2),
    ] {
        let r = enumerate_quiddities(&w, 8, k, exec)?;
        claims.push(claim_eq(format!("{label}: members with fewer than two small entries"), small_entry_violations(&r)?, vec![]));
    }
    Ok(claims)
}
