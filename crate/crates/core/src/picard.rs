//! Named Picard bases and the divisor classes that live on them.
//!
//! Symbol names are plain ASCII: `eta`, `lambda`, `psi`, `kappa`, `delta`
//! (total boundary), `delta_i` for boundary divisors, and `delta_i^mk` for the
//! boundary divisor of `Mbar_{g,1}` whose genus-`i` component carries the mark.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::testcurves::{CurveData, CurveRecord};

/// The space whose rational Picard group a basis spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceKind {
    /// Projectivized Hodge bundle over `Mbar_g`: `[eta, lambda, delta_0..delta_{g/2}]`.
    PHodgeAbelian,
    /// Projectivized bundle of quadratic differentials, same symbols as the abelian case.
    PHodgeQuadratic,
    /// `Mbar_{g,1}`: `[lambda, psi, delta_1^mk..delta_{g-1}^mk]`.
    MbarG1,
    /// `Mbar_g`: `[lambda, delta_0..delta_{g/2}]`.
    MbarG,
    /// `Mbar_g` with `kappa` and total `delta` appended as eliminable symbols.
    MbarGExtended,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisSpec {
    kind: SpaceKind,
    genus: u32,
    symbols: Vec<String>,
}

pub fn delta(i: u32) -> String {
    format!("delta_{i}")
}

pub fn delta_marked(i: u32) -> String {
    format!("delta_{i}^mk")
}

impl BasisSpec {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    /// Indices of the boundary symbols `delta_0..delta_{g/2}` (empty on `MbarG1`).
    pub fn boundary_indices(&self) -> Vec<usize> {
        (0..=self.genus / 2)
            .filter_map(|i| self.index_of(&delta(i)).ok())
            .collect()
    }

    fn label(&self) -> String {
        format!("{}(g={})", self.kind, self.genus)
    }
}

/// Ordered symbol list for `kind` at genus `g`.
pub fn basis(kind: SpaceKind, g: u32) -> Result<Arc<BasisSpec>> {
    if g < 2 {
        return Err(Error::Genus(g));
    }
    let boundary = (0..=g / 2).map(delta);
    let symbols: Vec<String> = match kind {
        SpaceKind::PHodgeAbelian | SpaceKind::PHodgeQuadratic => ["eta".into(), "lambda".into()]
            .into_iter()
            .chain(boundary)
            .collect(),
        SpaceKind::MbarG1 => ["lambda".into(), "psi".into()]
            .into_iter()
            .chain((1..g).map(delta_marked))
            .collect(),
        SpaceKind::MbarG => std::iter::once("lambda".into()).chain(boundary).collect(),
        SpaceKind::MbarGExtended => std::iter::once("lambda".into())
            .chain(boundary)
            .chain(["kappa".into(), "delta".into()])
            .collect(),
    };
    Ok(Arc::new(BasisSpec {
        kind,
        genus: g,
        symbols,
    }))
}

/// A rational divisor class: one coefficient per basis symbol.
#[derive(Clone, PartialEq, Eq)]
pub struct DivisorClass {
    basis: Arc<BasisSpec>,
    coeffs: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(basis: Arc<BasisSpec>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != basis.len() {
            return Err(Error::Dimension {
                expected: basis.len(),
                got: coeffs.len(),
            });
        }
        Ok(Self { basis, coeffs })
    }

    pub fn zero(basis: Arc<BasisSpec>) -> Self {
        let coeffs = vec![Rational::zero(); basis.len()];
        Self { basis, coeffs }
    }

    /// Class with the listed symbols set and everything else zero.
    pub fn from_terms<S: AsRef<str>>(
        basis: Arc<BasisSpec>,
        terms: &[(S, Rational)],
    ) -> Result<Self> {
        let mut c = Self::zero(basis);
        for (sym, q) in terms {
            let i = c.basis.index_of(sym.as_ref())?;
            c.coeffs[i] += q;
        }
        Ok(c)
    }

    pub fn basis(&self) -> &Arc<BasisSpec> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, symbol: &str) -> Result<&Rational> {
        Ok(&self.coeffs[self.basis.index_of(symbol)?])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.basis
            .symbols
            .iter()
            .map(String::as_str)
            .zip(&self.coeffs)
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.label(),
                right: other.basis.label(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            basis: self.basis.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * k).collect();
        Self {
            basis: self.basis.clone(),
            coeffs,
        }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scale(&Rational::int(-1))
    }
}

/// Panics on basis mismatch; use [`DivisorClass::try_add`] for checked addition.
impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.try_add(rhs)
            .expect("adding divisor classes over different bases")
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.try_sub(rhs)
            .expect("subtracting divisor classes over different bases")
    }
}

pub(crate) fn fmt_linear<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a str, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (sym, q) in terms {
        if q.is_zero() {
            continue;
        }
        let mag = q.abs();
        let sign = if q.is_negative() { "-" } else { "+" };
        match (first, q.is_negative()) {
            (true, false) => {}
            (true, true) => write!(f, "-")?,
            (false, _) => write!(f, " {sign} ")?,
        }
        if mag == Rational::one() {
            write!(f, "{sym}")?;
        } else {
            write!(f, "{mag} {sym}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_linear(f, self.terms())
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.basis.label())?;
        fmt::Display::fmt(self, f)
    }
}

fn q(n: i64) -> Rational {
    Rational::int(n)
}

fn gi(g: u32) -> i64 {
    i64::from(g)
}

/// Weierstrass divisor on `Mbar_{g,1}`:
/// `g(g+1)/2 psi - lambda - sum_{i=1}^{g-1} (g-i)(g-i+1)/2 delta_i^mk`.
pub fn class_w(g: u32) -> Result<DivisorClass> {
    let b = basis(SpaceKind::MbarG1, g)?;
    let n = gi(g);
    let mut terms = vec![
        ("lambda".to_string(), q(-1)),
        ("psi".to_string(), Rational::frac(n * (n + 1), 2)),
    ];
    for i in 1..g {
        let k = n - gi(i);
        terms.push((delta_marked(i), Rational::frac(-k * (k + 1), 2)));
    }
    DivisorClass::from_terms(b, &terms)
}

/// Stratum of abelian differentials with a double zero:
/// `24 lambda - (6g-6) eta - 2 delta_0 - 3 sum_{i>=1} delta_i`.
pub fn class_stratum_abelian(g: u32) -> Result<DivisorClass> {
    let b = basis(SpaceKind::PHodgeAbelian, g)?;
    let mut terms = vec![
        ("eta".to_string(), q(-(6 * gi(g) - 6))),
        ("lambda".to_string(), q(24)),
        (delta(0), q(-2)),
    ];
    terms.extend((1..=g / 2).map(|i| (delta(i), q(-3))));
    DivisorClass::from_terms(b, &terms)
}

/// Stratum of quadratic differentials with a double zero:
/// `72 lambda - 10(g-1) eta - 6 sum_{i>=0} delta_i`.
pub fn class_stratum_quadratic(g: u32) -> Result<DivisorClass> {
    let b = basis(SpaceKind::PHodgeQuadratic, g)?;
    let mut terms = vec![
        ("eta".to_string(), q(-10 * (gi(g) - 1))),
        ("lambda".to_string(), q(72)),
    ];
    terms.extend((0..=g / 2).map(|i| (delta(i), q(-6))));
    DivisorClass::from_terms(b, &terms)
}

/// Closed-form class of the divisor of canonical divisors containing a
/// Weierstrass point:
/// `-(g-1)g(g+1) eta + 2(3g^2+2g+1) lambda - g(g+1)/2 delta_0 + sum (g+3) i (i-g) delta_i`.
pub fn class_d(g: u32) -> Result<DivisorClass> {
    let b = basis(SpaceKind::PHodgeAbelian, g)?;
    let n = gi(g);
    let mut terms = vec![
        ("eta".to_string(), q(-(n - 1) * n * (n + 1))),
        ("lambda".to_string(), q(2 * (3 * n * n + 2 * n + 1))),
        (delta(0), Rational::frac(-n * (n + 1), 2)),
    ];
    terms.extend((1..=g / 2).map(|i| {
        let i = gi(i);
        (delta(i as u32), q((n + 3) * i * (i - n)))
    }));
    DivisorClass::from_terms(b, &terms)
}

/// Replaces `eliminated` in `c` by `replacement`, distributing its coefficient.
pub fn substitute_relation(
    c: &DivisorClass,
    eliminated: &str,
    replacement: &DivisorClass,
) -> Result<DivisorClass> {
    c.check_basis(replacement)?;
    let idx = c.basis.index_of(eliminated)?;
    if !replacement.coeffs[idx].is_zero() {
        return Err(Error::SelfReferentialRelation(eliminated.to_string()));
    }
    let k = c.coeffs[idx].clone();
    let mut out = c.try_add(&replacement.scale(&k))?;
    out.coeffs[idx] = Rational::zero();
    Ok(out)
}

/// The genus-2 relation `lambda = delta_0/10 + delta_1/5`, as a replacement
/// class over `PHodgeAbelian(2)`.
pub fn genus2_lambda_relation() -> DivisorClass {
    let b = basis(SpaceKind::PHodgeAbelian, 2).expect("genus 2");
    DivisorClass::from_terms(
        b,
        &[
            (delta(0), Rational::frac(1, 10)),
            (delta(1), Rational::frac(1, 5)),
        ],
    )
    .expect("symbols exist")
}

/// `kappa = 12 lambda - delta_0 - ... - delta_{g/2}` over `MbarGExtended(g)`.
pub fn kappa_relation(g: u32) -> Result<DivisorClass> {
    let b = basis(SpaceKind::MbarGExtended, g)?;
    let mut terms = vec![("lambda".to_string(), q(12))];
    terms.extend((0..=g / 2).map(|i| (delta(i), q(-1))));
    DivisorClass::from_terms(b, &terms)
}

/// Intersection number of a curve with a divisor class over the same basis.
pub fn pair(curve: &CurveRecord, c: &DivisorClass) -> Result<Rational> {
    if curve.basis != c.basis {
        return Err(Error::BasisMismatch {
            left: curve.basis.label(),
            right: c.basis.label(),
        });
    }
    match &curve.data {
        CurveData::Vector(v) => Ok(v.iter().zip(&c.coeffs).map(|(x, y)| x * y).sum()),
        CurveData::TotalBoundary {
            eta,
            lambda,
            delta_total,
        } => {
            let bd = c.basis.boundary_indices();
            let uniform = bd.first().map(|&i| &c.coeffs[i]);
            if bd.iter().any(|&i| Some(&c.coeffs[i]) != uniform) {
                return Err(Error::NonUniformBoundary);
            }
            let boundary = uniform.map_or_else(Rational::zero, |u| u * delta_total);
            Ok(eta * c.coeff("eta")? + lambda * c.coeff("lambda")? + boundary)
        }
        CurveData::Unset => Err(Error::NoVector(curve.name.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use proptest::prelude::*;

    fn ints(c: &DivisorClass) -> Vec<Rational> {
        c.coeffs().to_vec()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn bases() {
        let b = basis(SpaceKind::PHodgeAbelian, 2).unwrap();
        assert_eq!(b.symbols(), ["eta", "lambda", "delta_0", "delta_1"]);
        let b = basis(SpaceKind::PHodgeAbelian, 4).unwrap();
        assert_eq!(
            b.symbols(),
            ["eta", "lambda", "delta_0", "delta_1", "delta_2"]
        );
        let b = basis(SpaceKind::MbarG1, 3).unwrap();
        assert_eq!(b.symbols(), ["lambda", "psi", "delta_1^mk", "delta_2^mk"]);
        let b = basis(SpaceKind::MbarGExtended, 2).unwrap();
        assert_eq!(
            b.symbols(),
            ["lambda", "delta_0", "delta_1", "kappa", "delta"]
        );
        assert_eq!(basis(SpaceKind::MbarG, 1), Err(Error::Genus(1)));
    }

    #[test]
    fn weierstrass_class() {
        // [lambda, psi, delta_1^mk, ...]
        assert_eq!(ints(&class_w(2).unwrap()), v(&[-1, 3, -1]));
        assert_eq!(ints(&class_w(3).unwrap()), v(&[-1, 6, -3, -1]));
        assert_eq!(class_w(10).unwrap().coeff("psi").unwrap(), &q(55));
        assert!(class_w(1).is_err());
    }

    #[test]
    fn stratum_classes() {
        assert_eq!(
            ints(&class_stratum_abelian(3).unwrap()),
            v(&[-12, 24, -2, -3])
        );
        assert_eq!(
            ints(&class_stratum_abelian(2).unwrap()),
            v(&[-6, 24, -2, -3])
        );
        assert_eq!(
            class_stratum_abelian(5).unwrap().coeff("eta").unwrap(),
            &q(-24)
        );
        assert_eq!(
            ints(&class_stratum_quadratic(2).unwrap()),
            v(&[-10, 72, -6, -6])
        );
        assert_eq!(
            ints(&class_stratum_quadratic(3).unwrap()),
            v(&[-20, 72, -6, -6])
        );
        for g in 2..10 {
            assert_eq!(
                class_stratum_quadratic(g).unwrap().coeff("lambda").unwrap(),
                &q(72)
            );
        }
    }

    #[test]
    fn weierstrass_hodge_class() {
        assert_eq!(ints(&class_d(3).unwrap()), v(&[-24, 68, -6, -12]));
        assert_eq!(ints(&class_d(4).unwrap()), v(&[-60, 114, -10, -21, -28]));
        assert_eq!(ints(&class_d(2).unwrap()), v(&[-6, 34, -3, -5]));
        assert_eq!(
            class_d(3).unwrap().to_string(),
            "-24 eta + 68 lambda - 6 delta_0 - 12 delta_1"
        );
    }

    #[test]
    fn kappa_substitution() {
        let g2 = basis(SpaceKind::MbarGExtended, 2).unwrap();
        let kappa = DivisorClass::from_terms(g2.clone(), &[("kappa", q(1))]).unwrap();
        let out = substitute_relation(&kappa, "kappa", &kappa_relation(2).unwrap()).unwrap();
        assert_eq!(ints(&out), v(&[12, -1, -1, 0, 0]));
        // self-reference rejected
        let bad = DivisorClass::from_terms(g2, &[("kappa", q(1)), ("lambda", q(1))]).unwrap();
        assert_eq!(
            substitute_relation(&kappa, "kappa", &bad),
            Err(Error::SelfReferentialRelation("kappa".into()))
        );
    }

    #[test]
    fn genus2_relation_agrees() {
        let rel = genus2_lambda_relation();
        let d = substitute_relation(&class_d(2).unwrap(), "lambda", &rel).unwrap();
        let s = substitute_relation(&class_stratum_abelian(2).unwrap(), "lambda", &rel).unwrap();
        let expect = vec![q(-6), q(0), Rational::frac(2, 5), Rational::frac(9, 5)];
        assert_eq!(ints(&d), expect);
        assert_eq!(d, s);
        let diff = &class_d(2).unwrap() - &class_stratum_abelian(2).unwrap();
        assert!(substitute_relation(&diff, "lambda", &rel)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn zero_coefficient_substitution_is_identity() {
        let c = class_d(2).unwrap();
        let rel = DivisorClass::from_terms(c.basis().clone(), &[("delta_0", q(5))]).unwrap();
        let c0 = substitute_relation(&c, "lambda", &rel).unwrap();
        let c1 = substitute_relation(&c0, "lambda", &rel).unwrap();
        assert_eq!(c0, c1);
    }

    #[test]
    fn pairing_basics() {
        let b = basis(SpaceKind::PHodgeAbelian, 3).unwrap();
        let a = CurveRecord::with_vector("A", "", b.clone(), &[("eta".into(), q(-1))]).unwrap();
        assert_eq!(pair(&a, &class_d(3).unwrap()).unwrap(), q(24));
        assert_eq!(pair(&a, &DivisorClass::zero(b)).unwrap(), q(0));
        assert!(matches!(
            pair(&a, &class_d(4).unwrap()),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn total_boundary_needs_uniform_coefficients() {
        let b = basis(SpaceKind::PHodgeQuadratic, 4).unwrap();
        let c = CurveRecord {
            name: "T".into(),
            anchor: String::new(),
            basis: b.clone(),
            data: CurveData::TotalBoundary {
                eta: q(1),
                lambda: q(2),
                delta_total: q(3),
            },
            known_pairings: Default::default(),
        };
        // -30 + 144 - 18
        assert_eq!(
            pair(&c, &class_stratum_quadratic(4).unwrap()).unwrap(),
            q(96)
        );
        let skewed = DivisorClass::from_terms(b, &[("delta_0", q(1))]).unwrap();
        assert_eq!(pair(&c, &skewed), Err(Error::NonUniformBoundary));
    }

    #[test]
    fn mismatched_bases_do_not_mix() {
        let a = class_d(3).unwrap();
        let b = class_stratum_quadratic(3).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::BasisMismatch { .. })));
        assert!(matches!(
            substitute_relation(&a, "lambda", &class_d(4).unwrap()),
            Err(Error::BasisMismatch { .. })
        ));
    }

    fn class_over(b: &Arc<BasisSpec>, xs: &[i64]) -> DivisorClass {
        DivisorClass::new(
            b.clone(),
            xs.iter().map(|&x| Rational::frac(x, 3)).collect(),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn pairing_is_bilinear(v in prop::collection::vec(-20i64..20, 5),
                               x in prop::collection::vec(-20i64..20, 5),
                               y in prop::collection::vec(-20i64..20, 5),
                               k in -7i64..7) {
            let b = basis(SpaceKind::PHodgeAbelian, 4).unwrap();
            let terms: Vec<(String, Rational)> =
                b.symbols().iter().cloned().zip(v.iter().map(|&t| q(t))).collect();
            let curve = CurveRecord::with_vector("X", "", b.clone(), &terms).unwrap();
            let (cx, cy) = (class_over(&b, &x), class_over(&b, &y));
            let lhs = pair(&curve, &(&cx + &cy)).unwrap();
            prop_assert_eq!(lhs, pair(&curve, &cx).unwrap() + pair(&curve, &cy).unwrap());
            let kq = Rational::frac(k, 2);
            prop_assert_eq!(pair(&curve, &cx.scale(&kq)).unwrap(), kq * pair(&curve, &cx).unwrap());
        }
    }
}
