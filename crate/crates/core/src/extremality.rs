//! Teichmuller curves in the double-zero strata and extremality certificates.
//!
//! A Teichmuller curve `C` generated by a flat surface in a stratum with
//! signature `mu` has `C.eta = chi/2`, `C.lambda = chi L / 2` and
//! `C.delta_0 = (chi/2)(12 L - 12 kappa_mu)` in the abelian case, where `L` is
//! the Lyapunov sum. A class `D` is certified extremal when `C.(D + dA) <= 0`
//! for some `d > 0` and ample `A`, on a Zariski dense family of such curves.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::picard::{basis, delta, pair, BasisSpec, DivisorClass, SpaceKind};
use crate::testcurves::{CurveData, CurveRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionKind {
    Abelian,
    Quadratic,
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Abelian => "abelian",
            Self::Quadratic => "quadratic",
        })
    }
}

impl std::str::FromStr for PartitionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abelian" => Ok(Self::Abelian),
            "quadratic" => Ok(Self::Quadratic),
            other => Err(Error::Format(format!("unknown kind `{other}`"))),
        }
    }
}

/// Zero orders of a differential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    kind: PartitionKind,
    genus: u32,
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(kind: PartitionKind, genus: u32, mut parts: Vec<u32>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::Genus(genus));
        }
        let bad = |reason: String| Error::Partition {
            parts: parts.clone(),
            reason,
        };
        if parts.contains(&0) {
            return Err(bad("parts must be positive".into()));
        }
        let total: u64 = parts.iter().map(|&m| u64::from(m)).sum();
        let want = match kind {
            PartitionKind::Abelian => 2 * u64::from(genus) - 2,
            PartitionKind::Quadratic => 4 * u64::from(genus) - 4,
        };
        if total != want {
            return Err(bad(format!("parts sum to {total}, expected {want}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { kind, genus, parts })
    }

    /// `(2, 1^{2g-4})`.
    pub fn stratum_abelian(g: u32) -> Result<Self> {
        let ones = (2 * g).checked_sub(4).ok_or(Error::Genus(g))?;
        Self::new(PartitionKind::Abelian, g, double_zero(ones))
    }

    /// `(2, 1^{4g-6})`.
    pub fn stratum_quadratic(g: u32) -> Result<Self> {
        let ones = (4 * g).checked_sub(6).ok_or(Error::Genus(g))?;
        Self::new(PartitionKind::Quadratic, g, double_zero(ones))
    }

    pub fn stratum(kind: PartitionKind, g: u32) -> Result<Self> {
        match kind {
            PartitionKind::Abelian => Self::stratum_abelian(g),
            PartitionKind::Quadratic => Self::stratum_quadratic(g),
        }
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }
}

fn double_zero(ones: u32) -> Vec<u32> {
    std::iter::once(2)
        .chain(std::iter::repeat_n(1, ones as usize))
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `1/12 sum m(m+2)/(m+1)` for abelian signatures, `1/24 sum d(d+4)/(d+2)` for quadratic ones.
pub fn kappa_mu(p: &Partition) -> Rational {
    let (scale, shift) = match p.kind {
        PartitionKind::Abelian => (12, 1),
        PartitionKind::Quadratic => (24, 2),
    };
    let sum: Rational = p
        .parts
        .iter()
        .map(|&m| {
            let m = i64::from(m);
            Rational::frac(m * (m + 2 * shift), m + shift)
        })
        .sum();
    sum / Rational::int(scale)
}

/// `(9g-10)/36`.
pub fn kappa_abelian_closed(g: u32) -> Rational {
    Rational::frac(9 * i64::from(g) - 10, 36)
}

/// `(20g-21)/72`.
pub fn kappa_quadratic_closed(g: u32) -> Rational {
    Rational::frac(20 * i64::from(g) - 21, 72)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeichParamsAbelian {
    pub chi: Rational,
    pub lyapunov: Rational,
}

impl TeichParamsAbelian {
    pub fn new(chi: Rational, lyapunov: Rational) -> Self {
        Self { chi, lyapunov }
    }

    fn validate(&self, g: u32) -> Result<()> {
        if !self.chi.is_positive() {
            return Err(Error::TeichParams(format!(
                "chi = {} must be positive",
                self.chi
            )));
        }
        if self.lyapunov.is_negative() || self.lyapunov > Rational::from(g) {
            return Err(Error::TeichParams(format!(
                "L = {} outside [0, {g}]",
                self.lyapunov
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeichParamsQuadratic {
    pub chi: Rational,
    pub c_area: Rational,
}

impl TeichParamsQuadratic {
    pub fn new(chi: Rational, c_area: Rational) -> Self {
        Self { chi, c_area }
    }

    fn validate(&self) -> Result<()> {
        if !self.chi.is_positive() {
            return Err(Error::TeichParams(format!(
                "chi = {} must be positive",
                self.chi
            )));
        }
        if self.c_area.is_negative() {
            return Err(Error::TeichParams(format!(
                "c_area = {} is negative",
                self.c_area
            )));
        }
        Ok(())
    }
}

fn expect_kind(p: &Partition, kind: PartitionKind, g: u32) -> Result<()> {
    if p.kind != kind || p.genus != g {
        return Err(Error::Partition {
            parts: p.parts.clone(),
            reason: format!(
                "expected a {kind} partition in genus {g}, got {} in genus {}",
                p.kind, p.genus
            ),
        });
    }
    Ok(())
}

/// Intersection vector of a Teichmuller curve over `PHodgeAbelian(g)`.
pub fn teich_vector_abelian(g: u32, p: &Partition, t: &TeichParamsAbelian) -> Result<CurveRecord> {
    expect_kind(p, PartitionKind::Abelian, g)?;
    t.validate(g)?;
    let half = &t.chi / Rational::int(2);
    let twelve = Rational::int(12);
    let terms = [
        ("eta".to_string(), half.clone()),
        ("lambda".to_string(), &half * &t.lyapunov),
        (
            delta(0),
            &half * (&twelve * &t.lyapunov - &twelve * kappa_mu(p)),
        ),
    ];
    CurveRecord::with_vector(
        format!("teich{p}[chi={}, L={}]", t.chi, t.lyapunov),
        "Teichmuller curve, abelian stratum",
        basis(SpaceKind::PHodgeAbelian, g)?,
        &terms,
    )
}

/// Teichmuller curve over `PHodgeQuadratic(g)`, carrying a single total-boundary degree.
pub fn teich_vector_quadratic(
    g: u32,
    p: &Partition,
    t: &TeichParamsQuadratic,
) -> Result<CurveRecord> {
    expect_kind(p, PartitionKind::Quadratic, g)?;
    t.validate()?;
    let data = CurveData::TotalBoundary {
        eta: t.chi.clone(),
        lambda: &t.chi / Rational::int(2) * (&t.c_area + kappa_mu(p)),
        delta_total: Rational::int(6) * &t.chi * &t.c_area,
    };
    Ok(CurveRecord {
        name: format!("teich{p}[chi={}, c_area={}]", t.chi, t.c_area),
        anchor: "Teichmuller curve, quadratic stratum".into(),
        basis: basis(SpaceKind::PHodgeQuadratic, g)?,
        data,
        known_pairings: Default::default(),
    })
}

/// `C.psi_i` at a zero of order `m`, as `chi/(2(m+1))`, after checking it against
/// `(C.lambda - C.delta/12) / ((m+1) kappa_mu)` evaluated on the curve's vector.
pub fn psi_degree(g: u32, p: &Partition, t: &TeichParamsAbelian, m: u32) -> Result<Rational> {
    if !p.parts.contains(&m) {
        return Err(Error::NotAPart(m));
    }
    let c = teich_vector_abelian(g, p, t)?;
    let total_delta: Rational = c
        .basis
        .boundary_indices()
        .iter()
        .map(|&i| c.vector().unwrap()[i].clone())
        .sum();
    let m1 = Rational::from(m + 1);
    let quotient = (c.entry("lambda")? - total_delta / Rational::int(12)) / (&m1 * kappa_mu(p));
    let closed = &t.chi / (Rational::int(2) * &m1);
    if quotient != closed {
        return Err(Error::Identity(format!(
            "psi degree {quotient} != {closed}"
        )));
    }
    Ok(closed)
}

/// `A = a lambda + b eta + c0 delta_0` over `PHodgeAbelian(g)`.
pub fn ample_abelian(g: u32, a: &Rational, b: &Rational, c0: &Rational) -> Result<DivisorClass> {
    DivisorClass::from_terms(
        basis(SpaceKind::PHodgeAbelian, g)?,
        &[
            ("lambda".to_string(), a.clone()),
            ("eta".to_string(), b.clone()),
            (delta(0), c0.clone()),
        ],
    )
}

/// `A = a lambda + b eta + c sum delta_i` over `PHodgeQuadratic(g)`.
pub fn ample_quadratic(g: u32, a: &Rational, b: &Rational, c: &Rational) -> Result<DivisorClass> {
    let mut terms = vec![
        ("lambda".to_string(), a.clone()),
        ("eta".to_string(), b.clone()),
    ];
    terms.extend((0..=g / 2).map(|i| (delta(i), c.clone())));
    DivisorClass::from_terms(basis(SpaceKind::PHodgeQuadratic, g)?, &terms)
}

/// Optimal multiplier over an interval together with the parameter value where
/// the infimum is attained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub d: Rational,
    pub attained_at: Rational,
}

/// Infimum of `num / den(x)` over `x` in `[lo, hi]` for `den` affine and positive.
fn endpoint_inf(
    num: Rational,
    den: impl Fn(&Rational) -> Rational,
    lo: Rational,
    hi: Rational,
    name: &str,
) -> Result<Threshold> {
    let mut best: Option<(Rational, Rational)> = None;
    for x in [lo, hi] {
        let v = den(&x);
        if !v.is_positive() {
            return Err(Error::NonPositiveDenominator {
                endpoint: format!("{name}={x}"),
                value: v.to_string(),
            });
        }
        if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
            best = Some((v, x));
        }
    }
    let (v, x) = best.expect("two endpoints");
    Ok(Threshold {
        d: num / v,
        attained_at: x,
    })
}

/// `inf_{L in [0,g]} 2 / (3 (b - 12 c0 kappa_mu + (a + 12 c0) L))` for `mu = (2,1^{2g-4})`.
pub fn threshold_abelian(a: &Rational, b: &Rational, c0: &Rational, g: u32) -> Result<Threshold> {
    let kappa = kappa_mu(&Partition::stratum_abelian(g)?);
    let twelve = Rational::int(12);
    let constant = b - &twelve * c0 * &kappa;
    let slope = a + &twelve * c0;
    endpoint_inf(
        Rational::frac(2, 3),
        |l| &constant + &slope * l,
        Rational::zero(),
        Rational::from(g),
        "L",
    )
}

/// `inf_{c in [0, c_max]} 1 / (2b + 12 c c_area + a (c_area + kappa))` for `(2,1^{4g-6})`.
pub fn threshold_quadratic(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    g: u32,
    c_max: &Rational,
) -> Result<Threshold> {
    if c_max.is_negative() {
        return Err(Error::TeichParams(format!("c_max = {c_max} is negative")));
    }
    let kappa = kappa_mu(&Partition::stratum_quadratic(g)?);
    let constant = Rational::int(2) * b + a * &kappa;
    let slope = Rational::int(12) * c + a;
    endpoint_inf(
        Rational::one(),
        |x| &constant + &slope * x,
        Rational::zero(),
        c_max.clone(),
        "c_area",
    )
}

/// Teichmuller curves of `(2,1^{2g-4})` for every `(chi, L)` pair.
pub fn abelian_grid(g: u32, chis: &[Rational], lyapunovs: &[Rational]) -> Result<Vec<CurveRecord>> {
    let p = Partition::stratum_abelian(g)?;
    let mut out = Vec::with_capacity(chis.len() * lyapunovs.len());
    for chi in chis {
        for l in lyapunovs {
            out.push(teich_vector_abelian(
                g,
                &p,
                &TeichParamsAbelian::new(chi.clone(), l.clone()),
            )?);
        }
    }
    Ok(out)
}

/// `chi in 1..=5`, `L in {0, kappa_mu, g/2, g}`.
pub fn default_abelian_grid(g: u32) -> Result<Vec<CurveRecord>> {
    let kappa = kappa_mu(&Partition::stratum_abelian(g)?);
    let chis: Vec<Rational> = (1..=5).map(Rational::int).collect();
    let ls = [
        Rational::zero(),
        kappa,
        Rational::frac(i64::from(g), 2),
        Rational::from(g),
    ];
    abelian_grid(g, &chis, &ls)
}

/// Teichmuller curves of `(2,1^{4g-6})` for every `(chi, c_area)` pair.
pub fn quadratic_grid(g: u32, chis: &[Rational], areas: &[Rational]) -> Result<Vec<CurveRecord>> {
    let p = Partition::stratum_quadratic(g)?;
    let mut out = Vec::with_capacity(chis.len() * areas.len());
    for chi in chis {
        for c in areas {
            out.push(teich_vector_quadratic(
                g,
                &p,
                &TeichParamsQuadratic::new(chi.clone(), c.clone()),
            )?);
        }
    }
    Ok(out)
}

/// `chi in 1..=5`, `c_area in {0, c_max/2, c_max}`.
pub fn default_quadratic_grid(g: u32, c_max: &Rational) -> Result<Vec<CurveRecord>> {
    let chis: Vec<Rational> = (1..=5).map(Rational::int).collect();
    let areas = [Rational::zero(), c_max / Rational::int(2), c_max.clone()];
    quadratic_grid(g, &chis, &areas)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub curve: String,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub pass: bool,
    /// Set when no curves were supplied.
    pub vacuous: bool,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

/// Checks `C.(D + dA) <= 0` on every curve.
pub fn certificate_check(
    divisor: &DivisorClass,
    ample: &DivisorClass,
    d: &Rational,
    curves: &[CurveRecord],
) -> Result<Certificate> {
    if !d.is_positive() {
        return Err(Error::NonPositiveMultiplier(d.to_string()));
    }
    let test = divisor.try_add(&ample.scale(d))?;
    let mut violations = Vec::new();
    for c in curves {
        let value = pair(c, &test)?;
        if value.is_positive() {
            violations.push(Violation {
                curve: c.name.clone(),
                value,
            });
        }
    }
    Ok(Certificate {
        pass: violations.is_empty(),
        vacuous: curves.is_empty(),
        checked: curves.len(),
        violations,
    })
}

/// Pairing of the double-zero stratum class with its Teichmuller curve of
/// Euler characteristic `chi`, as `(constant, coefficient of L)`.
pub fn stratum_pairing_abelian_affine(g: u32, chi: &Rational) -> Result<(Rational, Rational)> {
    let p = Partition::stratum_abelian(g)?;
    let stratum = crate::picard::class_stratum_abelian(g)?;
    let at = |l: Rational| -> Result<Rational> {
        pair(
            &teich_vector_abelian(g, &p, &TeichParamsAbelian::new(chi.clone(), l))?,
            &stratum,
        )
    };
    let c0 = at(Rational::zero())?;
    let c1 = at(Rational::one())?;
    Ok((c0.clone(), c1 - c0))
}

/// As [`stratum_pairing_abelian_affine`], affine in `c_area`.
pub fn stratum_pairing_quadratic_affine(g: u32, chi: &Rational) -> Result<(Rational, Rational)> {
    let p = Partition::stratum_quadratic(g)?;
    let stratum = crate::picard::class_stratum_quadratic(g)?;
    let at = |c: Rational| -> Result<Rational> {
        pair(
            &teich_vector_quadratic(g, &p, &TeichParamsQuadratic::new(chi.clone(), c))?,
            &stratum,
        )
    };
    let c0 = at(Rational::zero())?;
    let c1 = at(Rational::one())?;
    Ok((c0.clone(), c1 - c0))
}

pub fn stratum_basis(kind: PartitionKind, g: u32) -> Result<Arc<BasisSpec>> {
    match kind {
        PartitionKind::Abelian => basis(SpaceKind::PHodgeAbelian, g),
        PartitionKind::Quadratic => basis(SpaceKind::PHodgeQuadratic, g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{class_stratum_abelian, class_stratum_quadratic};
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn partitions_validated() {
        assert!(Partition::new(PartitionKind::Abelian, 3, vec![2, 1, 1]).is_ok());
        assert!(Partition::new(PartitionKind::Abelian, 3, vec![2, 1]).is_err());
        assert!(Partition::new(PartitionKind::Quadratic, 2, vec![2, 1, 1]).is_ok());
        assert!(Partition::new(PartitionKind::Abelian, 2, vec![2, 0]).is_err());
        assert_eq!(
            Partition::stratum_abelian(4).unwrap().parts(),
            &[2, 1, 1, 1, 1]
        );
        assert_eq!(Partition::stratum_quadratic(2).unwrap().parts().len(), 3);
        assert!(Partition::stratum_abelian(1).is_err());
    }

    #[test]
    fn kappa_values() {
        let ab = Partition::new(PartitionKind::Abelian, 3, vec![2, 1, 1]).unwrap();
        assert_eq!(kappa_mu(&ab), r(17, 36));
        let qd = Partition::new(PartitionKind::Quadratic, 2, vec![2, 1, 1]).unwrap();
        assert_eq!(kappa_mu(&qd), r(19, 72));
        assert_eq!(kappa_mu(&Partition::stratum_abelian(2).unwrap()), r(2, 9));
        for g in 2..=50 {
            assert_eq!(
                kappa_mu(&Partition::stratum_abelian(g).unwrap()),
                kappa_abelian_closed(g)
            );
            assert_eq!(
                kappa_mu(&Partition::stratum_quadratic(g).unwrap()),
                kappa_quadratic_closed(g)
            );
        }
    }

    #[test]
    fn teich_abelian() {
        let g = 4;
        let p = Partition::stratum_abelian(g).unwrap();
        let kappa = kappa_mu(&p);
        let c = teich_vector_abelian(g, &p, &TeichParamsAbelian::new(r(3, 1), kappa)).unwrap();
        assert!(c.entry(&delta(0)).unwrap().is_zero());
        let top = teich_vector_abelian(g, &p, &TeichParamsAbelian::new(r(2, 1), r(4, 1))).unwrap();
        assert_eq!(top.entry("lambda").unwrap(), r(4, 1));
        assert_eq!(
            pair(&top, &class_stratum_abelian(g).unwrap()).unwrap(),
            r(-2, 3)
        );
        assert!(teich_vector_abelian(g, &p, &TeichParamsAbelian::new(r(0, 1), r(1, 1))).is_err());
        assert!(teich_vector_abelian(g, &p, &TeichParamsAbelian::new(r(1, 1), r(9, 2))).is_err());
        let wrong = Partition::stratum_quadratic(g).unwrap();
        assert!(
            teich_vector_abelian(g, &wrong, &TeichParamsAbelian::new(r(1, 1), r(1, 1))).is_err()
        );
    }

    #[test]
    fn teich_quadratic() {
        let p = Partition::stratum_quadratic(2).unwrap();
        let c =
            teich_vector_quadratic(2, &p, &TeichParamsQuadratic::new(r(2, 1), r(1, 1))).unwrap();
        match &c.data {
            CurveData::TotalBoundary {
                lambda,
                delta_total,
                ..
            } => {
                assert_eq!(lambda, &r(91, 72));
                assert_eq!(delta_total, &r(12, 1));
            }
            other => panic!("{other:?}"),
        }
        let p3 = Partition::stratum_quadratic(3).unwrap();
        let c3 =
            teich_vector_quadratic(3, &p3, &TeichParamsQuadratic::new(r(2, 1), r(1, 2))).unwrap();
        assert_eq!(
            pair(&c3, &class_stratum_quadratic(3).unwrap()).unwrap(),
            r(-1, 1)
        );
        let ample = ample_abelian(3, &r(1, 1), &r(1, 1), &r(1, 1)).unwrap();
        assert!(pair(&c3, &ample).is_err());
    }

    #[test]
    fn pairings_independent_of_flat_data() {
        for g in 2..=12 {
            for chi in [r(1, 1), r(7, 3)] {
                assert_eq!(
                    stratum_pairing_abelian_affine(g, &chi).unwrap(),
                    (-&chi / r(3, 1), r(0, 1))
                );
                assert_eq!(
                    stratum_pairing_quadratic_affine(g, &chi).unwrap(),
                    (-&chi / r(2, 1), r(0, 1))
                );
            }
        }
    }

    #[test]
    fn psi_values() {
        let p = Partition::stratum_abelian(3).unwrap();
        assert_eq!(
            psi_degree(3, &p, &TeichParamsAbelian::new(r(6, 1), r(1, 1)), 2).unwrap(),
            r(1, 1)
        );
        assert_eq!(
            psi_degree(3, &p, &TeichParamsAbelian::new(r(4, 1), r(1, 2)), 1).unwrap(),
            r(1, 1)
        );
        assert_eq!(
            psi_degree(3, &p, &TeichParamsAbelian::new(r(4, 1), r(1, 2)), 3),
            Err(Error::NotAPart(3))
        );
    }

    #[test]
    fn thresholds() {
        let t = threshold_abelian(&r(1, 1), &r(1, 1), &r(0, 1), 3).unwrap();
        assert_eq!(
            t,
            Threshold {
                d: r(1, 6),
                attained_at: r(3, 1)
            }
        );
        // L-coefficient vanishes
        let k = kappa_abelian_closed(5);
        let t = threshold_abelian(&r(12, 1), &r(20, 1), &r(-1, 1), 5).unwrap();
        assert_eq!(t.d, r(2, 3) / (r(20, 1) + r(12, 1) * k));
        // infimum of 2/(3(10/9 - L/2)) on [0,2] sits at L = 0
        let t = threshold_abelian(&r(0, 1), &r(1, 1), &r(-1, 24), 2).unwrap();
        assert_eq!(
            t,
            Threshold {
                d: r(3, 5),
                attained_at: r(0, 1)
            }
        );
        assert!(matches!(
            threshold_abelian(&r(-1, 1), &r(1, 1), &r(0, 1), 2),
            Err(Error::NonPositiveDenominator { .. })
        ));

        assert_eq!(
            threshold_quadratic(&r(0, 1), &r(3, 1), &r(0, 1), 4, &r(2, 1))
                .unwrap()
                .d,
            r(1, 6)
        );
        let t = threshold_quadratic(&r(1, 1), &r(1, 1), &r(0, 1), 2, &r(1, 1)).unwrap();
        assert_eq!(
            t,
            Threshold {
                d: r(72, 235),
                attained_at: r(1, 1)
            }
        );
        let t = threshold_quadratic(&r(1, 1), &r(4, 1), &r(-1, 6), 3, &r(1, 1)).unwrap();
        assert_eq!(t.attained_at, r(0, 1));
    }

    #[test]
    fn certificates() {
        let g = 3;
        let (a, b, c0) = (r(1, 1), r(1, 1), r(0, 1));
        let t = threshold_abelian(&a, &b, &c0, g).unwrap();
        let stratum = class_stratum_abelian(g).unwrap();
        let ample = ample_abelian(g, &a, &b, &c0).unwrap();
        let grid = default_abelian_grid(g).unwrap();
        let ok = certificate_check(&stratum, &ample, &t.d, &grid).unwrap();
        assert!(ok.pass && !ok.vacuous && ok.checked == 20);

        let bad = certificate_check(&stratum, &ample, &(&t.d * r(2, 1)), &grid).unwrap();
        assert!(!bad.pass);
        assert!(bad
            .violations
            .iter()
            .all(|v| v.value.is_positive() && v.curve.contains("L=3")));

        let empty = certificate_check(&stratum, &ample, &t.d, &[]).unwrap();
        assert!(empty.pass && empty.vacuous);
        assert!(matches!(
            certificate_check(&stratum, &ample, &r(0, 1), &grid),
            Err(Error::NonPositiveMultiplier(_))
        ));
    }

    proptest! {
        #[test]
        fn psi_identity(cn in 1i64..40, cd in 1i64..7, ln in 0i64..40, ld in 1i64..7, g in 2u32..8) {
            let l = Rational::frac(ln, ld);
            prop_assume!(l <= Rational::from(g));
            let p = Partition::stratum_abelian(g).unwrap();
            let t = TeichParamsAbelian::new(Rational::frac(cn, cd), l);
            for &m in p.parts() {
                prop_assert_eq!(psi_degree(g, &p, &t, m).unwrap(), Rational::frac(cn, cd) / Rational::from(2 * (m + 1)));
            }
        }

        #[test]
        fn thresholds_positive_and_sound(an in 0i64..30, bn in 1i64..30, cn in -10i64..10, cd in 1i64..24, g in 2u32..7) {
            let (a, b, c0) = (Rational::int(an), Rational::int(bn), Rational::frac(cn, cd));
            if let Ok(t) = threshold_abelian(&a, &b, &c0, g) {
                prop_assert!(t.d.is_positive());
                let cert = certificate_check(
                    &class_stratum_abelian(g).unwrap(),
                    &ample_abelian(g, &a, &b, &c0).unwrap(),
                    &t.d,
                    &default_abelian_grid(g).unwrap(),
                ).unwrap();
                prop_assert!(cert.pass);
            }
        }
    }
}
