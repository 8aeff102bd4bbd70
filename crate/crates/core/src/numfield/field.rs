//! Number fields `Q(alpha)` with a selected complex embedding, and their
//! elements in the power basis.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebraic;
use super::complex::{ComplexInterval, RectDescriptor};
use super::poly::QPoly;
use super::rational::{format_rational, parse_rational, round_down, round_up, BigRat, ParseRationalError};
use super::roots::{isolate_all_roots, RootLocation};
use crate::polycrit::{irreducible_over_q, IrreducibilityVerdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("minimal polynomial must have degree at least 1")]
    NotMonic,
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("root hint contains {0} roots; exactly one is required")]
    AmbiguousHint(usize),
    #[error("irreducibility over Q could not be proven; pass the assume-irreducible flag to proceed")]
    IrreducibilityUnknown,
    #[error("minimal polynomial is reducible: factor {0}")]
    Reducible(String),
    #[error("generator is zero")]
    ZeroGenerator,
    #[error("elements belong to different fields")]
    IncompatibleFields,
    #[error("{0}")]
    Isolation(String),
    #[error("conjugate index {0} out of range")]
    BadConjugate(usize),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

/// How irreducibility of the minimal polynomial was established.
#[derive(Debug, Clone, PartialEq)]
pub enum Irreducibility {
    Proven(IrreducibilityVerdict),
    Assumed,
}

#[derive(Debug)]
struct FieldData {
    min_poly: QPoly,
    degree: usize,
    roots: Vec<RootLocation>,
    irreducibility: Irreducibility,
    /// Power-basis coordinates of `alpha^(d + j)` for `0 <= j < d - 1`.
    reduction: Vec<Vec<BigRat>>,
}

/// A number field together with a selected root. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct NumberField {
    data: Arc<FieldData>,
    selected: usize,
    hint: ComplexInterval,
}

/// Field descriptor JSON document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub min_poly: Vec<String>,
    pub root_hint: RectDescriptor,
    #[serde(default)]
    pub assume_irreducible: bool,
}

impl FieldDescriptor {
    pub fn build(&self) -> Result<NumberField, FieldError> {
        let p = QPoly::parse_strings(&self.min_poly)?;
        let hint = self.root_hint.to_interval()?;
        NumberField::make(&p, &hint, self.assume_irreducible)
    }
}

impl NumberField {
    /// Builds `Q(alpha)` where `alpha` is the unique root of `min_poly` in
    /// `root_hint`. The polynomial is made monic first.
    pub fn make(min_poly: &QPoly, root_hint: &ComplexInterval, assume_irreducible: bool) -> Result<Self, FieldError> {
        let degree = match min_poly.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(FieldError::NotMonic),
        };
        let p = min_poly.monic();
        if !p.is_squarefree() {
            return Err(FieldError::NotSquarefree);
        }
        let irreducibility = match irreducible_over_q(&p) {
            v @ IrreducibilityVerdict::Proven(_) => Irreducibility::Proven(v),
            IrreducibilityVerdict::Disproven(f) => return Err(FieldError::Reducible(f.to_string())),
            IrreducibilityVerdict::Unknown if assume_irreducible => Irreducibility::Assumed,
            IrreducibilityVerdict::Unknown => return Err(FieldError::IrreducibilityUnknown),
        };
        let roots = isolate_all_roots(&p).map_err(|e| FieldError::Isolation(e.to_string()))?;
        let selected = select_root(&p, &roots, root_hint)?;
        let reduction = reduction_table(&p, degree);
        Ok(NumberField {
            data: Arc::new(FieldData { min_poly: p, degree, roots, irreducibility, reduction }),
            selected,
            hint: root_hint.clone(),
        })
    }

    /// `Q` presented as `Q(0)` with minimal polynomial `X`.
    pub fn rationals() -> Self {
        let hint = ComplexInterval::zero();
        Self::make(&QPoly::x(), &hint, false).expect("X is irreducible")
    }

    pub fn min_poly(&self) -> &QPoly {
        &self.data.min_poly
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn selected_index(&self) -> usize {
        self.selected
    }

    pub fn root_count(&self) -> usize {
        self.data.roots.len()
    }

    pub fn irreducibility(&self) -> &Irreducibility {
        &self.data.irreducibility
    }

    pub fn is_proven_irreducible(&self) -> bool {
        matches!(self.data.irreducibility, Irreducibility::Proven(_))
    }

    /// Same field, other embedding.
    pub fn with_selected(&self, index: usize) -> Result<Self, FieldError> {
        let root = self.data.roots.get(index).ok_or(FieldError::BadConjugate(index))?;
        Ok(NumberField { data: self.data.clone(), selected: index, hint: root.rect() })
    }

    /// Fields are compatible when they share the minimal polynomial; the
    /// selected root does not matter for arithmetic.
    pub fn compatible(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.min_poly == other.data.min_poly
    }

    /// Isolating box of root `index` at the stored precision.
    pub fn root_box(&self, index: usize) -> ComplexInterval {
        self.data.roots[index].rect()
    }

    /// True when root `index` is real.
    pub fn root_is_real(&self, index: usize) -> bool {
        self.data.roots[index].is_real()
    }

    /// Box of width at most `2^-bits` around root `index`.
    pub fn root_interval(&self, index: usize, bits: u32) -> ComplexInterval {
        self.data.roots[index].refined(&self.data.min_poly, bits).rect()
    }

    /// Index of the complex-conjugate root of root `index`.
    pub fn conjugate_of(&self, index: usize) -> usize {
        if self.root_is_real(index) {
            return index;
        }
        let b = self.root_box(index).conj();
        (0..self.root_count())
            .find(|&j| j != index && !self.root_box(j).disjoint(&b))
            .unwrap_or(index)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            min_poly: self.data.min_poly.to_strings(),
            root_hint: RectDescriptor::from_interval(&self.hint),
            assume_irreducible: matches!(self.data.irreducibility, Irreducibility::Assumed),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coords: vec![BigRat::zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRat::one())
    }

    pub fn from_rational(&self, q: BigRat) -> FieldElement {
        let mut e = self.zero();
        e.coords[0] = q;
        e
    }

    pub fn from_int(&self, k: i64) -> FieldElement {
        self.from_rational(BigRat::from_integer(k.into()))
    }

    /// The generator `alpha` of the power basis.
    pub fn alpha(&self) -> FieldElement {
        self.element_from_poly(&QPoly::x())
    }

    /// `q(alpha)`.
    pub fn element_from_poly(&self, q: &QPoly) -> FieldElement {
        let r = q.rem(&self.data.min_poly);
        let mut coords = vec![BigRat::zero(); self.degree()];
        for (i, c) in r.coeffs().iter().enumerate() {
            coords[i] = c.clone();
        }
        FieldElement { field: self.clone(), coords }
    }

    /// Element from power-basis coordinates; missing trailing ones are zero.
    pub fn element(&self, coords: &[BigRat]) -> Result<FieldElement, FieldError> {
        if coords.len() > self.degree() {
            return Err(FieldError::IncompatibleFields);
        }
        let mut c = coords.to_vec();
        c.resize(self.degree(), BigRat::zero());
        Ok(FieldElement { field: self.clone(), coords: c })
    }

    pub fn parse_element<S: AsRef<str>>(&self, coords: &[S]) -> Result<FieldElement, FieldError> {
        let cs: Result<Vec<BigRat>, _> = coords.iter().map(|s| parse_rational(s.as_ref())).collect();
        self.element(&cs?)
    }
}

fn reduction_table(p: &QPoly, d: usize) -> Vec<Vec<BigRat>> {
    (0..d.saturating_sub(1))
        .map(|j| {
            let r = QPoly::x().pow(d + j).rem(p);
            (0..d).map(|i| r.coeff(i)).collect()
        })
        .collect()
}

/// Refines every root box until each is inside or disjoint from the hint;
/// exactly one root must end up inside.
fn select_root(p: &QPoly, roots: &[RootLocation], hint: &ComplexInterval) -> Result<usize, FieldError> {
    let mut current: Vec<RootLocation> = roots.to_vec();
    let mut bits = 4u32;
    loop {
        let mut inside = Vec::new();
        let mut undecided = false;
        for (i, r) in current.iter().enumerate() {
            let b = r.rect();
            if hint.contains_interval(&b) {
                inside.push(i);
            } else if !hint.disjoint(&b) {
                undecided = true;
            }
        }
        if !undecided || bits > 256 {
            return match inside.as_slice() {
                [i] if !undecided => Ok(*i),
                _ => Err(FieldError::AmbiguousHint(inside.len())),
            };
        }
        bits += 8;
        current = current.iter().map(|r| r.refined(p, bits)).collect();
    }
}

/// An element of a number field, as power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<BigRat>,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[BigRat] {
        &self.coords
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    fn check(&self, other: &FieldElement) {
        assert!(self.field.compatible(&other.field), "arithmetic across incompatible fields");
    }

    pub fn scale(&self, c: &BigRat) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn scale_int(&self, k: i64) -> FieldElement {
        self.scale(&BigRat::from_integer(k.into()))
    }

    /// Multiplicative inverse, `None` for zero (or a zero divisor when the
    /// minimal polynomial was only assumed irreducible).
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.as_poly().ext_gcd(self.field.min_poly());
        if g.degree() != Some(0) {
            return None;
        }
        Some(self.field.element_from_poly(&s))
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `k` when `self = k * w` for a rational integer `k`.
    pub fn subgroup_member(&self, w: &FieldElement) -> Result<Option<BigInt>, FieldError> {
        if !self.field.compatible(&w.field) {
            return Err(FieldError::IncompatibleFields);
        }
        let winv = w.inv().ok_or(FieldError::ZeroGenerator)?;
        let q = self * &winv;
        Ok(q.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer()))
    }

    /// Image under embedding `index`: a box of width at most `2^-bits`
    /// containing the exact value.
    pub fn embed(&self, index: usize, bits: u32) -> ComplexInterval {
        if let Some(q) = self.as_rational() {
            return ComplexInterval::point(&super::complex::creal(q));
        }
        let target = super::rational::pow2(-(bits as i64));
        let mut root_bits = bits + 8;
        loop {
            let rb = self.field.root_interval(index, root_bits);
            let v = eval_interval(&self.coords, &rb, root_bits + 8);
            if v.width() <= target {
                return v;
            }
            root_bits += 16;
        }
    }

    /// Exact sign of `|embed(self)| - threshold`.
    pub fn modulus_compare(&self, index: usize, threshold: &BigRat) -> Ordering {
        algebraic::modulus_compare(self, index, threshold)
    }

    /// Characteristic polynomial of multiplication by `self`.
    pub fn charpoly(&self) -> QPoly {
        algebraic::charpoly(self)
    }

    /// Minimal polynomial over `Q`.
    pub fn min_poly(&self) -> QPoly {
        self.charpoly().squarefree_part()
    }
}

/// Horner evaluation in rectangle arithmetic with outward rounding.
fn eval_interval(coords: &[BigRat], x: &ComplexInterval, bits: u32) -> ComplexInterval {
    let mut acc = ComplexInterval::zero();
    for c in coords.iter().rev() {
        acc = acc.mul(x).add(&ComplexInterval::point(&super::complex::creal(c.clone())));
        acc = round_out(&acc, bits);
    }
    acc
}

fn round_out(b: &ComplexInterval, bits: u32) -> ComplexInterval {
    ComplexInterval {
        re: (round_down(&b.re.0, bits), round_up(&b.re.1, bits)),
        im: (round_down(&b.im.0, bits), round_up(&b.im.1, bits)),
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.compatible(&other.field) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.as_poly();
        let s = p.to_string().replace('X', "a");
        write!(f, "{s}")
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        self.check(o);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        FieldElement { field: self.field.clone(), coords }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        self.check(o);
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect();
        FieldElement { field: self.field.clone(), coords }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        self.check(o);
        let d = self.coords.len();
        let mut full = vec![BigRat::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        let mut coords: Vec<BigRat> = full[..d].to_vec();
        for (j, high) in full[d..].iter().enumerate() {
            if high.is_zero() {
                continue;
            }
            for (c, r) in coords.iter_mut().zip(&self.field.data.reduction[j]) {
                *c += high * r;
            }
        }
        FieldElement { field: self.field.clone(), coords }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::complex::{crat, creal};
    use crate::numfield::rational::{int, ratio, to_f64};

    fn sqrt2() -> NumberField {
        NumberField::make(&QPoly::from_i64s(&[-2, 0, 1]), &ComplexInterval::real(int(1), int(2)), false).unwrap()
    }

    #[test]
    fn make_selects_hinted_root() {
        let f = sqrt2();
        assert_eq!(f.degree(), 2);
        let e = f.alpha().embed(f.selected_index(), 20);
        assert!((to_f64(&e.midpoint().re) - 2f64.sqrt()).abs() < 1e-5);

        let lin = NumberField::make(&QPoly::from_i64s(&[-3, 1]), &ComplexInterval::real(int(0), int(10)), false).unwrap();
        assert_eq!(lin.alpha().as_rational(), Some(int(3)));

        let p = QPoly::new(vec![ratio(-5, 2), int(-1), int(1)]);
        let f = NumberField::make(&p, &ComplexInterval::real(ratio(-12, 10), ratio(-11, 10)), false).unwrap();
        let v = to_f64(&f.alpha().embed(f.selected_index(), 30).midpoint().re);
        assert!((v - (1.0 - 11f64.sqrt()) / 2.0).abs() < 1e-8);
    }

    #[test]
    fn make_errors() {
        let hint = ComplexInterval::real(int(-10), int(10));
        let sq = QPoly::from_i64s(&[-2, 0, 1]);
        assert_eq!(NumberField::make(&sq, &hint, false).unwrap_err(), FieldError::AmbiguousHint(2));
        let far = ComplexInterval::real(int(5), int(6));
        assert_eq!(NumberField::make(&sq, &far, false).unwrap_err(), FieldError::AmbiguousHint(0));
        let rep = QPoly::from_i64s(&[1, 2, 1]);
        assert_eq!(NumberField::make(&rep, &hint, false).unwrap_err(), FieldError::NotSquarefree);
        let unknown = QPoly::from_i64s(&[2, 0, 3, 0, 1]);
        assert_eq!(NumberField::make(&unknown, &hint, false).unwrap_err(), FieldError::IrreducibilityUnknown);
        assert!(matches!(NumberField::make(&QPoly::from_i64s(&[-1, 0, 1]), &hint, true), Err(FieldError::Reducible(_))));
        assert_eq!(NumberField::make(&QPoly::from_i64s(&[3]), &hint, false).unwrap_err(), FieldError::NotMonic);
    }

    #[test]
    fn non_monic_input_is_normalised() {
        let f = NumberField::make(&QPoly::from_i64s(&[-1, 0, 2]), &ComplexInterval::real(int(0), int(1)), false).unwrap();
        assert_eq!(f.min_poly(), &QPoly::new(vec![ratio(-1, 2), int(0), int(1)]));
    }

    #[test]
    fn embedding_of_conjugate() {
        let f = sqrt2();
        let neg = 1 - f.selected_index();
        let x = &f.one() - &f.alpha();
        let e = x.embed(neg, 20);
        assert!(e.width() <= crate::numfield::rational::pow2(-20));
        assert!((to_f64(&e.midpoint().re) - (1.0 + 2f64.sqrt())).abs() < 1e-5);
        assert_eq!(f.zero().embed(0, 50), ComplexInterval::point(&creal(int(0))));
    }

    #[test]
    fn complex_embedding() {
        let f = NumberField::make(
            &QPoly::from_i64s(&[2, -2, 1]),
            &ComplexInterval { re: (int(0), int(2)), im: (int(0), int(2)) },
            false,
        )
        .unwrap();
        let b = f.alpha().embed(f.selected_index(), 40);
        assert!(b.contains(&crat(int(1), int(1))));
        assert_eq!(f.conjugate_of(f.selected_index()), 1 - f.selected_index());
    }

    #[test]
    fn subgroup_membership() {
        let f = sqrt2();
        let w = f.alpha();
        assert_eq!(w.scale_int(3).subgroup_member(&w).unwrap(), Some(BigInt::from(3)));
        assert_eq!(f.one().subgroup_member(&w).unwrap(), None);
        assert_eq!(f.zero().subgroup_member(&w).unwrap(), Some(BigInt::from(0)));
        assert_eq!(w.subgroup_member(&f.zero()), Err(FieldError::ZeroGenerator));
    }

    #[test]
    fn inverse_and_min_poly() {
        let f = sqrt2();
        let x = &f.one() + &f.alpha();
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(x.min_poly(), QPoly::from_i64s(&[-1, -2, 1]));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn modulus_comparisons() {
        use Ordering::*;
        let f = sqrt2();
        let a = f.alpha();
        let i = f.selected_index();
        assert_eq!((&f.one() + &a).modulus_compare(i, &int(2)), Greater);
        assert_eq!(a.modulus_compare(i, &int(2)), Less);
        assert_eq!(f.from_int(2).modulus_compare(i, &int(2)), Equal);
        assert_eq!(a.modulus_compare(i, &ratio(0, 1)), Greater);
        assert_eq!((&a - &f.one()).modulus_compare(1 - i, &int(2)), Greater);
    }
}
