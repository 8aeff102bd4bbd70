//! Certified isolation and refinement of all complex roots of a squarefree
//! rational polynomial.
//!
//! Real roots come from exact Descartes bisection. Non-real roots start from
//! floating-point Aberth approximations in the upper half plane; each one is
//! then certified exactly: a working disk `D(c, r)` and an isolating disk
//! `D(c, 4r)` must each contain exactly one root (strict Schur–Cohn count),
//! isolating disks must be pairwise disjoint and miss the real axis, and the
//! total `#real + 2 #upper` must equal the degree. Lower roots are mirrors.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::complex::{crat, creal, CPoly, CRat, ComplexInterval};
use super::poly::QPoly;
use super::rational::{from_f64, pow2, ratio, round_nearest, sqrt_upper, to_f64, BigRat};
use super::real_roots::{bisect, isolate_real_roots, RealRoot};
use crate::polycrit::unit_disk_count_strict;

/// A complex root in the open upper or lower half plane.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskRoot {
    /// Current disk, known to contain the root.
    pub center: CRat,
    pub radius: BigRat,
    /// Disk holding no other root of the polynomial.
    pub iso_center: CRat,
    pub iso_radius: BigRat,
    /// Bounding box, kept as a running intersection so refinements nest.
    pub rect: ComplexInterval,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RootLocation {
    Real(RealRoot),
    Complex(DiskRoot),
}

impl RootLocation {
    pub fn rect(&self) -> ComplexInterval {
        match self {
            RootLocation::Real(r) => {
                let (a, b) = r.bounds();
                ComplexInterval::real(a, b)
            }
            RootLocation::Complex(d) => d.rect.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, RootLocation::Real(_))
    }

    /// Returns a refined copy whose box has width at most `2^-bits`.
    pub fn refined(&self, p: &QPoly, bits: u32) -> RootLocation {
        let target = pow2(-(bits as i64));
        match self {
            RootLocation::Real(r) => {
                let mut r = r.clone();
                loop {
                    let (a, b) = r.bounds();
                    if b - a <= target {
                        return RootLocation::Real(r);
                    }
                    r = bisect(p, &r);
                }
            }
            RootLocation::Complex(d) => RootLocation::Complex(refine_disk(p, d, &target, bits)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("could not certify the complex roots of {0}")]
pub struct IsolationError(pub String);

/// Isolates all `d` roots of the squarefree `p`, sorted by the midpoint of
/// their initial boxes (real part, then imaginary part).
pub fn isolate_all_roots(p: &QPoly) -> Result<Vec<RootLocation>, IsolationError> {
    let d = p.degree().unwrap_or(0);
    let real: Vec<RootLocation> = isolate_real_roots(p).into_iter().map(RootLocation::Real).collect();
    let nonreal = d - real.len();
    let mut out = real;
    if nonreal > 0 {
        let upper = certify_upper_roots(p, nonreal / 2)?;
        for u in upper {
            let lower = DiskRoot {
                center: u.center.conj(),
                radius: u.radius.clone(),
                iso_center: u.iso_center.conj(),
                iso_radius: u.iso_radius.clone(),
                rect: u.rect.conj(),
            };
            out.push(RootLocation::Complex(u));
            out.push(RootLocation::Complex(lower));
        }
    }
    out.sort_by(|a, b| {
        let (ma, mb) = (a.rect().midpoint(), b.rect().midpoint());
        ma.re.cmp(&mb.re).then(ma.im.cmp(&mb.im))
    });
    Ok(out)
}

/// Floating-point Aberth–Ehrlich iteration for all roots.
fn aberth(p: &QPoly) -> Vec<Complex64> {
    let lead = to_f64(&p.leading());
    let cs: Vec<Complex64> = p.coeffs().iter().map(|c| Complex64::new(to_f64(c) / lead, 0.0)).collect();
    let n = cs.len() - 1;
    let bound = 1.0 + cs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let eval = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(zs[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (zs[i] - zs[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                zs[i] -= step;
                moved = moved.max(step.norm() / (1.0 + zs[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    zs
}

fn count_in_disk(p: &CPoly, center: &CRat, radius: &BigRat) -> Option<usize> {
    unit_disk_count_strict(&p.recentre(center, radius))
}

/// Exact Newton step, rounded to `bits` fractional bits.
fn newton(p: &CPoly, dp: &CPoly, z: &CRat, bits: u32) -> Option<CRat> {
    let d = dp.eval(z);
    if d.is_zero() {
        return None;
    }
    let next = z - p.eval(z) / d;
    Some(crat(round_nearest(&next.re, bits), round_nearest(&next.im, bits)))
}

fn certify_upper_roots(p: &QPoly, upper_count: usize) -> Result<Vec<DiskRoot>, IsolationError> {
    let err = || IsolationError(p.to_string());
    let cp = CPoly::from_qpoly(p);
    let dp = cp.derivative();
    let approx = aberth(p);
    let mut nonreal: Vec<Complex64> = approx.clone();
    nonreal.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
    nonreal.truncate(2 * upper_count);
    let uppers: Vec<Complex64> = nonreal.iter().copied().filter(|z| z.im > 0.0).collect();
    if uppers.len() != upper_count {
        return Err(err());
    }
    let mut out: Vec<DiskRoot> = Vec::with_capacity(upper_count);
    for z in &uppers {
        let sep = approx
            .iter()
            .filter(|o| (*o - z).norm() > 0.0)
            .map(|o| (o - z).norm())
            .fold(f64::INFINITY, f64::min)
            .min(2.0 * z.im);
        let mut center = crat(from_f64(z.re), from_f64(z.im));
        let mut radius = from_f64(sep / 10.0);
        let mut certified = None;
        for attempt in 0..24 {
            let iso = &radius * BigRat::from_integer(4.into());
            let ok = iso < center.im
                && count_in_disk(&cp, &center, &radius) == Some(1)
                && count_in_disk(&cp, &center, &iso) == Some(1);
            if ok {
                certified = Some(DiskRoot {
                    rect: ComplexInterval::around(&center, &radius),
                    iso_center: center.clone(),
                    iso_radius: iso,
                    center,
                    radius,
                });
                break;
            }
            // Polish the centre exactly and shrink the disk before retrying.
            if attempt % 2 == 0 {
                if let Some(c) = newton(&cp, &dp, &center, 80 + 8 * attempt) {
                    center = c;
                }
            }
            radius = radius / BigRat::from_integer(2.into());
        }
        out.push(certified.ok_or_else(err)?);
    }
    for i in 0..out.len() {
        for j in 0..i {
            let gap = &out[i].iso_center - &out[j].iso_center;
            let reach = &out[i].iso_radius + &out[j].iso_radius;
            if gap.norm_sqr() <= &reach * &reach {
                return Err(err());
            }
        }
    }
    Ok(out)
}

/// Shrinks the disk until its bounding box has width at most `target`.
///
/// Invariant: `|c - C| + 2r <= R` for current disk `(c, r)` and isolating
/// disk `(C, R)`, so every candidate disk below stays inside the isolating
/// one and any root it contains is the tracked root.
fn refine_disk(p: &QPoly, d: &DiskRoot, target: &BigRat, bits: u32) -> DiskRoot {
    let cp = CPoly::from_qpoly(p);
    let dp = cp.derivative();
    let deg = BigRat::from_integer(p.degree().unwrap_or(1).into());
    let two = BigRat::from_integer(2.into());
    let mut cur = d.clone();
    let inside_iso = |c: &CRat, r: &BigRat, cur: &DiskRoot| {
        let slack = &cur.iso_radius - &(r * &two);
        if slack.is_negative() {
            return false;
        }
        (c - &cur.iso_center).norm_sqr() <= &slack * &slack
    };
    while &cur.radius * &two > *target {
        // Newton inclusion: some root lies within deg * |p(z)/p'(z)| of z.
        let mut advanced = false;
        if let Some(z) = newton(&cp, &dp, &cur.center, bits + 16) {
            let pz = cp.eval(&z);
            let dz = dp.eval(&z);
            if !dz.is_zero() {
                let rho2 = &deg * &deg * pz.norm_sqr() / dz.norm_sqr();
                let rho = sqrt_upper(&rho2, bits + 8);
                let rho = if rho.is_zero() { pow2(-(bits as i64) - 8) } else { rho };
                if rho < cur.radius && inside_iso(&z, &rho, &cur) {
                    cur.rect = cur.rect.intersect(&ComplexInterval::around(&z, &rho)).unwrap_or(cur.rect.clone());
                    cur.center = z;
                    cur.radius = rho;
                    advanced = true;
                }
            }
        }
        if advanced {
            continue;
        }
        // Quadrisection: four disks of radius 3r/4 cover D(c, r).
        let half = &cur.radius / &two;
        let sub_r = &cur.radius * ratio(3, 4);
        let offsets = [
            creal(half.clone()),
            creal(-half.clone()),
            crat(BigRat::zero(), half.clone()),
            crat(BigRat::zero(), -half.clone()),
        ];
        let mut next = None;
        for off in offsets {
            let c = &cur.center + off;
            if inside_iso(&c, &sub_r, &cur) && count_in_disk(&cp, &c, &sub_r) == Some(1) {
                next = Some(c);
                break;
            }
        }
        let c = next.expect("a covering sub-disk contains the isolated root");
        cur.rect = cur.rect.intersect(&ComplexInterval::around(&c, &sub_r)).unwrap_or(cur.rect.clone());
        cur.center = c;
        cur.radius = sub_r;
    }
    cur
}

#[cfg(test)]
fn disk_contains(d: &DiskRoot, z: &CRat) -> bool {
    (z - &d.center).norm_sqr() < &d.radius * &d.radius
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational::int;

    #[test]
    fn gaussian_roots() {
        let p = QPoly::from_i64s(&[1, 0, 1]);
        let roots = isolate_all_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        let i = crat(int(0), int(1));
        let RootLocation::Complex(top) = &roots[1] else { panic!() };
        assert!(disk_contains(top, &i));
        let refined = roots[1].refined(&p, 60);
        assert!(refined.rect().width() <= pow2(-60));
        assert!(refined.rect().contains(&i));
        assert!(roots[1].rect().contains_interval(&refined.rect()));
    }

    #[test]
    fn mixed_real_and_complex() {
        // (X - 2)(X^2 - 2X + 2): roots 2, 1 +- i
        let p = &QPoly::from_i64s(&[-2, 1]) * &QPoly::from_i64s(&[2, -2, 1]);
        let roots = isolate_all_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots.iter().filter(|r| r.is_real()).count(), 1);
        for (k, r) in roots.iter().enumerate() {
            let fine = r.refined(&p, 40).rect();
            for (j, o) in roots.iter().enumerate() {
                if j != k {
                    assert!(fine.disjoint(&o.refined(&p, 40).rect()));
                }
            }
        }
        let fine = roots[0].refined(&p, 30).rect();
        assert!(fine.contains(&crat(int(1), int(-1))));
    }

    #[test]
    fn eighth_roots_of_unity() {
        let p = QPoly::from_i64s(&[1, 0, 0, 0, 1]);
        let roots = isolate_all_roots(&p).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            let b = r.refined(&p, 50).rect();
            let z = b.midpoint();
            let m = z.norm_sqr();
            assert!((to_f64(&m) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn quintic_with_clustered_moduli() {
        let p = QPoly::from_i64s(&[5, 0, 0, 5, 10, 1]);
        let roots = isolate_all_roots(&p).unwrap();
        assert_eq!(roots.len(), 5);
        assert_eq!(roots.iter().filter(|r| r.is_real()).count(), 1);
    }
}
