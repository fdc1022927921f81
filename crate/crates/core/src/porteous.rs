//! Weierstrass points of pencil families via principal parts and Porteous.
//!
//! For a family `X -> P^1` of genus-`g` curves with relative dualizing class
//! `w`, the Weierstrass points sweep out the class `c1(P^g(w)) - c1(E)` where
//! `E` is the pulled-back Hodge bundle, i.e. `g(g+1)/2 w - deg(lambda) f`.

use crate::chow::{lattice_intersect, pencil_family, BaseSurface, LatticeClass, PencilFamily};
use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::picard::{basis, class_d, delta, pair, SpaceKind};
use crate::testcurves::CurveRecord;

/// Pencil family together with the degree of `lambda` on its base.
#[derive(Clone, Debug)]
pub struct FamilyInvariants {
    pub genus: u32,
    pub lambda_deg: Rational,
    pub family: PencilFamily,
}

impl FamilyInvariants {
    pub fn new(family: PencilFamily, lambda_deg: Rational) -> Result<Self> {
        if family.genus < 1 {
            return Err(Error::Genus(family.genus));
        }
        if lambda_deg.is_negative() {
            return Err(Error::Identity(format!(
                "lambda degree {lambda_deg} is negative"
            )));
        }
        Ok(Self {
            genus: family.genus,
            lambda_deg,
            family,
        })
    }

    /// Uses [`lambda_degree`] for the Hodge class.
    pub fn from_family(family: PencilFamily) -> Result<Self> {
        let lambda = lambda_degree(&family);
        Self::new(family, lambda)
    }
}

/// `c1` of the bundle of relative `k`-jets of a line bundle `L`, summed along
/// the filtration `0 -> L (x) w^{j-1} -> P^j(L) -> P^{j-1}(L) -> 0`.
pub fn principal_parts_c1(
    k: u32,
    c1_l: &LatticeClass,
    c1_omega: &LatticeClass,
) -> Result<LatticeClass> {
    if k < 1 {
        return Err(Error::Order(k));
    }
    let mut total = LatticeClass::zero(c1_l.lattice());
    for j in 1..=k {
        let graded = c1_l.try_add(&c1_omega.scale(&Rational::from(j - 1)))?;
        total = total.try_add(&graded)?;
    }
    Ok(total)
}

/// Class of the curve traced by the Weierstrass points of the fibers.
pub fn weierstrass_family_class(fam: &FamilyInvariants) -> Result<LatticeClass> {
    let omega = &fam.family.omega_rel;
    let jets = principal_parts_c1(fam.genus, omega, omega)?;
    Ok(&jets - &fam.family.fiber.scale(&fam.lambda_deg))
}

/// Degree of the Weierstrass sweep against a class pulled back from the base surface.
pub fn weierstrass_sweep_degree(fam: &FamilyInvariants, ample: &LatticeClass) -> Result<Rational> {
    if !ample.is_base_pullback() {
        return Err(Error::NotBasePullback);
    }
    lattice_intersect(&weierstrass_family_class(fam)?, ample)
}

/// Degree of `eta` on the base when the differentials are cut by `L`: with
/// `w = pi^* O(-1) (x) O(L)` and a section `E`, `-E^2 = deg eta + L.E`.
pub fn eta_degree_from_family(fam: &PencilFamily, l: &LatticeClass) -> Result<Rational> {
    if fam.base_points == 0 {
        return Err(Error::NoSections);
    }
    let e = LatticeClass::exceptional(&fam.lattice, 0);
    lattice_intersect(&(&fam.omega_rel - l), &e)
}

/// `kappa = pi_* c1(w)^2 = w^2`.
pub fn kappa_degree(fam: &PencilFamily) -> Rational {
    lattice_intersect(&fam.omega_rel, &fam.omega_rel).expect("same lattice")
}

/// Number of singular fibers of a general pencil, each one-nodal:
/// `e(X) - e(P^1) e(F)`.
pub fn singular_fiber_count(fam: &PencilFamily) -> Rational {
    let g = i64::from(fam.genus);
    Rational::int(fam.total_euler() - 2 * (2 - 2 * g))
}

/// `lambda = (kappa + delta) / 12`.
pub fn lambda_degree(fam: &PencilFamily) -> Rational {
    (kappa_degree(fam) + singular_fiber_count(fam)) / Rational::int(12)
}

pub fn cubic_pencil() -> PencilFamily {
    pencil_family(BaseSurface::P2, &[3]).expect("ample")
}

pub fn quartic_pencil() -> PencilFamily {
    pencil_family(BaseSurface::P2, &[4]).expect("ample")
}

/// Canonical genus-4 curves on a smooth quadric: `(3,3)` curves on `P^1 x P^1`.
pub fn genus4_quadric_pencil() -> PencilFamily {
    pencil_family(BaseSurface::P1xP1, &[3, 3]).expect("ample")
}

/// Hyperplane class of the base surface, pulled back: `h` on `P^2`, `l1 + l2` on the quadric.
pub fn hyperplane(fam: &PencilFamily) -> LatticeClass {
    let h = match fam.base {
        BaseSurface::P2 => vec![1],
        BaseSurface::P1xP1 => vec![1, 1],
    };
    fam.pullback(&h).expect("base rank")
}

/// Test curve in `P Hbar_g` given by a pencil whose differentials are cut by
/// a fixed hyperplane: `(eta, lambda, delta_0)` degrees computed from the family.
pub fn pencil_test_curve(fam: &PencilFamily) -> Result<CurveRecord> {
    let b = basis(SpaceKind::PHodgeAbelian, fam.genus)?;
    let terms = [
        (
            "eta".to_string(),
            eta_degree_from_family(fam, &hyperplane(fam))?,
        ),
        ("lambda".to_string(), lambda_degree(fam)),
        (delta(0), singular_fiber_count(fam)),
    ];
    CurveRecord::with_vector(
        format!("pencil{:?}", fam.pencil_class),
        "general pencil, hyperplane differentials",
        b,
        &terms,
    )
}

/// `B.D` computed two ways: by pairing the family's test curve with the class
/// of `D`, and by the Porteous sweep against the hyperplane class.
pub fn sweep_cross_check(fam: &PencilFamily) -> Result<(Rational, Rational)> {
    let by_class = pair(&pencil_test_curve(fam)?, &class_d(fam.genus)?)?;
    let inv = FamilyInvariants::from_family(fam.clone())?;
    let by_sweep = weierstrass_sweep_degree(&inv, &hyperplane(fam))?;
    Ok((by_class, by_sweep))
}
