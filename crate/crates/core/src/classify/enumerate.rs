//! Bounded enumeration of quiddities over `<w>` by meet in the middle, and
//! the irreducibility census on top of it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::numfield::{FieldDescriptor, FieldElement};
use crate::par::Execution;
use crate::quiddity::{canonical_multipliers, is_quiddity, m_product_of, Mat2, QuiddityTuple};
use crate::reducibility::{find_reduction, ReductionWitness};

/// One equivalence class of quiddities, stored by its canonical multipliers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusMember {
    pub multipliers: Vec<i64>,
    pub epsilon: i8,
    /// Filled in by the census; size-2 members are never irreducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReductionWitness>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub field: FieldDescriptor,
    pub generator: Vec<String>,
    pub n_max: usize,
    pub k_bound: i64,
    /// Sorted by size, then lexicographically.
    pub quiddities: Vec<CensusMember>,
    pub counts_by_size: BTreeMap<usize, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<Vec<Vec<i64>>>,
    /// Wall time of the run; not part of the serialized report.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for EnumerationReport {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field
            && self.generator == o.generator
            && self.n_max == o.n_max
            && self.k_bound == o.k_bound
            && self.quiddities == o.quiddities
            && self.counts_by_size == o.counts_by_size
            && self.irreducible == o.irreducible
    }
}

impl EnumerationReport {
    /// Rebuilds the generator from the stored descriptor.
    pub fn generator_element(&self) -> Result<FieldElement, ClassifyError> {
        let field = self.field.build()?;
        Ok(field.parse_element(&self.generator)?)
    }

    pub fn multiplier_sets(&self) -> BTreeSet<Vec<i64>> {
        self.quiddities.iter().map(|m| m.multipliers.clone()).collect()
    }

    pub fn of_size(&self, n: usize) -> impl Iterator<Item = &CensusMember> {
        self.quiddities.iter().filter(move |m| m.multipliers.len() == n)
    }
}

/// Multipliers searched: `-K..=K`, or only `0` for the zero generator, where
/// all multipliers give the same entries.
fn multiplier_range(w: &FieldElement, k_bound: i64) -> Vec<i64> {
    if w.is_zero() {
        vec![0]
    } else {
        (-k_bound..=k_bound).collect()
    }
}

/// The `index`-th vector of length `len` over `ks` in lexicographic order.
fn nth_vector(ks: &[i64], len: usize, mut index: usize) -> Vec<i64> {
    let b = ks.len();
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = ks[index % b];
        index /= b;
    }
    v
}

fn product(w: &FieldElement, ks: &[i64]) -> Mat2 {
    let entries: Vec<FieldElement> = ks.iter().map(|&k| w.scale_int(k)).collect();
    m_product_of(w.field(), &entries)
}

/// Half-products `M_h(u)` for every left vector `u`, grouped by value.
fn left_table(w: &FieldElement, ks: &[i64], h: usize, exec: Execution) -> HashMap<Mat2, Vec<Vec<i64>>> {
    let total = ks.len().pow(h as u32);
    let products = exec.map_range(total, |i| {
        let u = nth_vector(ks, h, i);
        (product(w, &u), u)
    });
    let mut table: HashMap<Mat2, Vec<Vec<i64>>> = HashMap::new();
    for (m, u) in products {
        table.entry(m).or_default().push(u);
    }
    table
}

/// All quiddities of size `n` over the given multipliers, as canonical
/// multiplier vectors with their sign.
fn quiddities_of_size(
    w: &FieldElement,
    ks: &[i64],
    n: usize,
    table: &HashMap<Mat2, Vec<Vec<i64>>>,
    exec: Execution,
) -> BTreeMap<Vec<i64>, i8> {
    let h = n.div_ceil(2);
    let r = n - h;
    let total = ks.len().pow(r as u32);
    // M_n = R L with R the right half-product, so M_n = eps Id iff L = eps R^-1.
    let hits = exec.map_range(total, |i| {
        let v = nth_vector(ks, r, i);
        let rinv = product(w, &v).inverse_unimodular();
        let mut found = Vec::new();
        for (eps, key) in [(1i8, rinv.clone()), (-1i8, rinv.neg())] {
            let Some(lefts) = table.get(&key) else { continue };
            for u in lefts {
                let mut t = u.clone();
                t.extend_from_slice(&v);
                // Every class is reached through its canonical representative.
                if canonical_multipliers(&t) != t {
                    continue;
                }
                let full = QuiddityTuple::new(w.clone(), t.clone());
                assert_eq!(is_quiddity(&full), Some(eps), "half-product match failed full verification");
                found.push((t, eps));
            }
        }
        found
    });
    hits.into_iter().flatten().collect()
}

/// All quiddities over `<w>` of size at most `n_max` with multipliers
/// bounded by `k_bound`, one canonical representative per class.
pub fn enumerate_quiddities(
    w: &FieldElement,
    n_max: usize,
    k_bound: i64,
    exec: Execution,
) -> Result<EnumerationReport, ClassifyError> {
    if n_max < 1 || k_bound < 0 {
        return Err(ClassifyError::BadBounds);
    }
    let start = Instant::now();
    let ks = multiplier_range(w, k_bound);
    let mut tables: BTreeMap<usize, HashMap<Mat2, Vec<Vec<i64>>>> = BTreeMap::new();
    let mut quiddities = Vec::new();
    let mut counts_by_size = BTreeMap::new();
    for n in 1..=n_max {
        let h = n.div_ceil(2);
        let table = tables.entry(h).or_insert_with(|| left_table(w, &ks, h, exec));
        let found = quiddities_of_size(w, &ks, n, table, exec);
        counts_by_size.insert(n, found.len());
        quiddities.extend(found.into_iter().map(|(multipliers, epsilon)| CensusMember {
            multipliers,
            epsilon,
            irreducible: None,
            witness: None,
        }));
    }
    Ok(EnumerationReport {
        field: w.field().descriptor(),
        generator: w.coord_strings(),
        n_max,
        k_bound,
        quiddities,
        counts_by_size,
        irreducible: None,
        elapsed: start.elapsed(),
    })
}

/// Decides irreducibility of every member. Reducible members keep the
/// witness that replays them; `(0, 0)` is excluded by convention.
pub fn irreducible_census(report: &EnumerationReport, exec: Execution) -> Result<EnumerationReport, ClassifyError> {
    let start = Instant::now();
    let w = report.generator_element()?;
    let decided = exec.map(&report.quiddities, |m| {
        if m.multipliers.len() < 3 {
            return Ok((false, None));
        }
        let t = QuiddityTuple::new(w.clone(), m.multipliers.clone());
        find_reduction(&t).map(|wit| (wit.is_none(), wit))
    });
    let mut out = report.clone();
    let mut irreducible = Vec::new();
    for (m, d) in out.quiddities.iter_mut().zip(decided) {
        let (irr, wit) = d?;
        m.irreducible = Some(irr);
        m.witness = wit;
        if irr {
            irreducible.push(m.multipliers.clone());
        }
    }
    out.irreducible = Some(irreducible);
    out.elapsed = report.elapsed + start.elapsed();
    Ok(out)
}

/// Enumeration followed by the census.
pub fn census(w: &FieldElement, n_max: usize, k_bound: i64, exec: Execution) -> Result<EnumerationReport, ClassifyError> {
    irreducible_census(&enumerate_quiddities(w, n_max, k_bound, exec)?, exec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    pub field: FieldDescriptor,
    pub generator: Vec<String>,
    pub n_max: usize,
    pub k_bound: i64,
    pub counts_by_size: BTreeMap<usize, usize>,
    pub odd_size_members: Vec<Vec<i64>>,
}

impl ParityReport {
    pub fn all_even(&self) -> bool {
        self.odd_size_members.is_empty()
    }
}

/// Lists every odd-size quiddity within the bounds.
pub fn parity_audit(w: &FieldElement, n_max: usize, k_bound: i64, exec: Execution) -> Result<ParityReport, ClassifyError> {
    let report = enumerate_quiddities(w, n_max, k_bound, exec)?;
    Ok(ParityReport {
        field: report.field,
        generator: report.generator,
        n_max,
        k_bound,
        counts_by_size: report.counts_by_size,
        odd_size_members: report
            .quiddities
            .into_iter()
            .filter(|m| m.multipliers.len() % 2 == 1)
            .map(|m| m.multipliers)
            .collect(),
    })
}

/// Members with fewer than two entries of modulus `< 2` under the selected
/// embedding. Every quiddity over the complex numbers has at least two, so
/// the result should be empty.
pub fn small_entry_violations(report: &EnumerationReport) -> Result<Vec<Vec<i64>>, ClassifyError> {
    let w = report.generator_element()?;
    let index = w.field().selected_index();
    let two = crate::numfield::BigRat::from_integer(2.into());
    let mut small: HashMap<i64, bool> = HashMap::new();
    let mut bad = Vec::new();
    for m in &report.quiddities {
        let count = m
            .multipliers
            .iter()
            .filter(|&&k| {
                *small
                    .entry(k)
                    .or_insert_with(|| w.scale_int(k).modulus_compare(index, &two) == std::cmp::Ordering::Less)
            })
            .count();
        if count < 2 {
            bad.push(m.multipliers.clone());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;

    #[test]
    fn vectors_in_lexicographic_order() {
        let ks = [-1, 0, 1];
        assert_eq!(nth_vector(&ks, 2, 0), vec![-1, -1]);
        assert_eq!(nth_vector(&ks, 2, 1), vec![-1, 0]);
        assert_eq!(nth_vector(&ks, 2, 8), vec![1, 1]);
        assert_eq!(nth_vector(&ks, 0, 0), Vec::<i64>::new());
    }

    #[test]
    fn integers_up_to_size_three() {
        let z = NumberField::rationals().one();
        let r = enumerate_quiddities(&z, 3, 2, Execution::Sequential).unwrap();
        assert_eq!(
            r.multiplier_sets(),
            [vec![0, 0], vec![-1, -1, -1], vec![1, 1, 1]].into_iter().collect()
        );
        assert_eq!(r.counts_by_size[&1], 0);
        assert_eq!(r.quiddities[0].epsilon, -1);
    }

    #[test]
    fn census_of_integers_size_four() {
        let z = NumberField::rationals().one();
        let r = census(&z, 4, 2, Execution::Parallel).unwrap();
        let irr: BTreeSet<Vec<i64>> = r.irreducible.clone().unwrap().into_iter().collect();
        let expected: BTreeSet<Vec<i64>> =
            [vec![-1, -1, -1], vec![1, 1, 1], vec![0, 0, 0, 0], vec![-2, 0, 2, 0]].into_iter().collect();
        assert_eq!(irr, expected);
        for m in &r.quiddities {
            if m.irreducible == Some(false) && m.multipliers.len() > 2 {
                let t = QuiddityTuple::new(z.clone(), m.multipliers.clone());
                assert!(m.witness.as_ref().unwrap().replays(&t));
            }
        }
        assert!(small_entry_violations(&r).unwrap().is_empty());
    }

    #[test]
    fn zero_generator_uses_only_zero() {
        let z = NumberField::rationals().zero();
        let r = enumerate_quiddities(&z, 6, 3, Execution::Sequential).unwrap();
        assert_eq!(r.multiplier_sets(), [vec![0, 0], vec![0, 0, 0, 0], vec![0; 6]].into_iter().collect());
        assert_eq!(enumerate_quiddities(&z, 0, 1, Execution::Sequential).unwrap_err(), ClassifyError::BadBounds);
    }
}
