use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactq::Rational;

/// Chow ring of `P^{n_1} x ... x P^{n_k}`, generated by the hyperplane
/// pullbacks `h_j` with `h_j^{n_j + 1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiProjRing {
    dims: Vec<u32>,
}

impl MultiProjRing {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidRing("need at least one factor".into()));
        }
        if dims.contains(&0) {
            return Err(Error::InvalidRing(format!(
                "factor dimensions must be >= 1, got {dims:?}"
            )));
        }
        Ok(Self { dims })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> u32 {
        self.dims.iter().sum()
    }

    /// Zero class with no terms.
    pub fn zero(&self) -> ChowElement {
        ChowElement {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Rational) -> ChowElement {
        self.monomial(vec![0; self.dims.len()], c)
    }

    pub fn one(&self) -> ChowElement {
        self.constant(Rational::one())
    }

    /// Hyperplane class pulled back from factor `j` (0-based).
    pub fn generator(&self, j: usize) -> ChowElement {
        let mut e = vec![0; self.dims.len()];
        e[j] = 1;
        self.monomial(e, Rational::one())
    }

    /// Linear class `sum_j coeffs[j] h_j`.
    pub fn linear(&self, coeffs: &[i64]) -> Result<ChowElement> {
        if coeffs.len() != self.dims.len() {
            return Err(Error::Dimension {
                expected: self.dims.len(),
                got: coeffs.len(),
            });
        }
        Ok(coeffs.iter().enumerate().fold(self.zero(), |acc, (j, &c)| {
            acc + self.generator(j).scale(&Rational::int(c))
        }))
    }

    /// `c * prod h_j^{e_j}`, zero if any `e_j > n_j`.
    pub fn monomial(&self, exps: Vec<u32>, c: Rational) -> ChowElement {
        let mut terms = BTreeMap::new();
        if self.admissible(&exps) && !c.is_zero() {
            terms.insert(exps, c);
        }
        ChowElement {
            ring: self.clone(),
            terms,
        }
    }

    fn admissible(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.dims).all(|(e, n)| e <= n)
    }

    /// Canonical class `-sum (n_j + 1) h_j`.
    pub fn canonical(&self) -> ChowElement {
        let k: Vec<i64> = self.dims.iter().map(|&n| -(i64::from(n) + 1)).collect();
        self.linear(&k).expect("length matches")
    }
}

/// Sparse element of a [`MultiProjRing`], keyed by exponent vector.
/// Monomials that vanish in the ring are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowElement {
    ring: MultiProjRing,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ChowElement {
    pub fn ring(&self) -> &MultiProjRing {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.dims.clone(),
                right: other.ring.dims.clone(),
            });
        }
        Ok(())
    }

    fn insert(terms: &mut BTreeMap<Vec<u32>, Rational>, e: Vec<u32>, c: Rational) {
        let slot = terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            terms.remove(&e);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert(&mut terms, e.clone(), c.clone());
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        Self {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Product with eager truncation of vanishing monomials.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if self.ring.admissible(&e) {
                    Self::insert(&mut terms, e, c1 * c2);
                }
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Degree map: coefficient of the point class `prod h_j^{n_j}`.
    pub fn integrate(&self) -> Rational {
        self.terms
            .get(self.ring.dims())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficients on `h_1..h_k` if this is a homogeneous degree-1 class.
    pub fn linear_coeffs(&self) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.ring.factors()];
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() != 1 {
                return None;
            }
            let j = e.iter().position(|&x| x == 1).expect("degree one");
            out[j] = c.clone();
        }
        Some(out)
    }
}

/// `a * b` in the ring, failing on a ring mismatch.
pub fn chow_mul(a: &ChowElement, b: &ChowElement) -> Result<ChowElement> {
    a.try_mul(b)
}

pub fn chow_integrate(a: &ChowElement) -> Rational {
    a.integrate()
}

/// Canonical class of a complete intersection of the given hypersurfaces:
/// `K_ambient + sum [X_i]`, as a linear class to be restricted.
pub fn adjunction_canonical(
    ring: &MultiProjRing,
    hypersurfaces: &[ChowElement],
) -> Result<ChowElement> {
    let mut k = ring.canonical();
    for h in hypersurfaces {
        if h.linear_coeffs().is_none() {
            return Err(Error::NotLinear);
        }
        k = k.try_add(h)?;
    }
    Ok(k)
}

/// `omega_{X/B} = K_X - pi^* K_{P^1}` where `B` is the `P^1` factor `base`
/// (0-based).
pub fn relative_dualizing_linear(canonical: &ChowElement, base: usize) -> Result<ChowElement> {
    if canonical.linear_coeffs().is_none() {
        return Err(Error::NotLinear);
    }
    let ring = canonical.ring();
    if ring.dims().get(base) != Some(&1) {
        return Err(Error::NotBaseFactor(base));
    }
    Ok(canonical + &ring.generator(base).scale(&Rational::int(2)))
}

impl Add for &ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: &ChowElement) -> ChowElement {
        self.try_add(rhs)
            .expect("adding elements of different Chow rings")
    }
}

impl Add for ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: ChowElement) -> ChowElement {
        &self + &rhs
    }
}

impl Neg for &ChowElement {
    type Output = ChowElement;
    fn neg(self) -> ChowElement {
        self.scale(&Rational::int(-1))
    }
}

impl Sub for &ChowElement {
    type Output = ChowElement;
    fn sub(self, rhs: &ChowElement) -> ChowElement {
        self + &-rhs
    }
}

impl Mul for &ChowElement {
    type Output = ChowElement;
    fn mul(self, rhs: &ChowElement) -> ChowElement {
        self.try_mul(rhs)
            .expect("multiplying elements of different Chow rings")
    }
}

impl Mul for ChowElement {
    type Output = ChowElement;
    fn mul(self, rhs: ChowElement) -> ChowElement {
        &self * &rhs
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(j, &p)| {
                    if p == 1 {
                        format!("h{}", j + 1)
                    } else {
                        format!("h{}^{p}", j + 1)
                    }
                })
                .collect();
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == Rational::one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.ring.dims, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p1p3() -> MultiProjRing {
        MultiProjRing::new(vec![1, 3]).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::int(n)
    }

    #[test]
    fn truncation() {
        let r = p1p3();
        let (a, b) = (r.generator(0), r.generator(1));
        assert!((&a * &a).is_zero());
        // (a+b)^2 = 2ab + b^2 once a^2 = 0
        let expect = r.monomial(vec![1, 1], q(2)) + r.monomial(vec![0, 2], q(1));
        assert_eq!((&a + &b).pow(2), expect);
        assert_eq!(&r.one() * &b, b);
        assert!(b.pow(4).is_zero());
    }

    #[test]
    fn integrals() {
        let r = p1p3();
        let (a, b) = (r.generator(0), r.generator(1));
        let s = &a + &b;
        let t = &a + &b.scale(&q(3));
        let kappa = &(&(&s * &s) * &t) * &b.scale(&q(2));
        assert_eq!(chow_integrate(&kappa), q(14));
        assert_eq!((&a * &b.pow(3)).integrate(), q(1));
        assert_eq!(b.pow(4).integrate(), q(0));
    }

    #[test]
    fn adjunction() {
        let r = p1p3();
        let quadric = r.linear(&[0, 2]).unwrap();
        let k = adjunction_canonical(&r, std::slice::from_ref(&quadric)).unwrap();
        assert_eq!(k.linear_coeffs().unwrap(), vec![q(-2), q(-2)]);
        let x = r.linear(&[1, 3]).unwrap();
        let kx = adjunction_canonical(&r, &[quadric, x]).unwrap();
        assert_eq!(kx.linear_coeffs().unwrap(), vec![q(-1), q(1)]);
        let rel = relative_dualizing_linear(&kx, 0).unwrap();
        assert_eq!(rel.linear_coeffs().unwrap(), vec![q(1), q(1)]);
        let rel2 = relative_dualizing_linear(&k, 0).unwrap();
        assert_eq!(rel2.linear_coeffs().unwrap(), vec![q(0), q(-2)]);
        assert_eq!(&rel - &r.linear(&[2, 0]).unwrap(), kx);

        let p2 = MultiProjRing::new(vec![2]).unwrap();
        for d in 1..8 {
            let k = adjunction_canonical(&p2, &[p2.linear(&[d]).unwrap()]).unwrap();
            assert_eq!(k.linear_coeffs().unwrap(), vec![q(d - 3)]);
        }
    }

    #[test]
    fn errors() {
        let r = p1p3();
        let other = MultiProjRing::new(vec![2]).unwrap();
        assert!(matches!(
            chow_mul(&r.one(), &other.one()),
            Err(Error::RingMismatch { .. })
        ));
        assert_eq!(
            adjunction_canonical(&r, &[r.generator(0).pow(1) * r.generator(1)]),
            Err(Error::NotLinear)
        );
        assert_eq!(
            relative_dualizing_linear(&r.canonical(), 1),
            Err(Error::NotBaseFactor(1))
        );
        assert!(MultiProjRing::new(vec![]).is_err());
        assert!(MultiProjRing::new(vec![1, 0]).is_err());
    }

    // Full polynomial expansion without truncation, then truncation at the end.
    fn oracle_product(
        r: &MultiProjRing,
        x: &[(Vec<u32>, i64)],
        y: &[(Vec<u32>, i64)],
    ) -> ChowElement {
        let mut out = r.zero();
        for (e1, c1) in x {
            for (e2, c2) in y {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out = out + r.monomial(e, q(c1 * c2));
            }
        }
        out
    }

    fn build(r: &MultiProjRing, x: &[(Vec<u32>, i64)]) -> ChowElement {
        x.iter()
            .fold(r.zero(), |acc, (e, c)| acc + r.monomial(e.clone(), q(*c)))
    }

    fn element() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..3, 2), -5i64..6), 0..5)
    }

    proptest! {
        #[test]
        fn ring_axioms(x in element(), y in element(), z in element()) {
            let r = MultiProjRing::new(vec![1, 2]).unwrap();
            let (a, b, c) = (build(&r, &x), build(&r, &y), build(&r, &z));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &r.one(), a.clone());
            prop_assert_eq!(&a * &b, oracle_product(&r, &x, &y));
            // stored monomials never exceed the factor dimensions
            for e in (&a * &b).terms().keys() {
                prop_assert!(e[0] <= 1 && e[1] <= 2);
            }
        }

        #[test]
        fn integral_is_multilinear(x in element(), y in element(), z in element(), k in -4i64..5) {
            let r = MultiProjRing::new(vec![1, 2]).unwrap();
            let (a, b, c) = (build(&r, &x), build(&r, &y), build(&r, &z));
            let lhs = (&(&a + &b) * &c).integrate();
            prop_assert_eq!(lhs, (&a * &c).integrate() + (&b * &c).integrate());
            prop_assert_eq!((&a.scale(&q(k)) * &c).integrate(), q(k) * (&a * &c).integrate());
        }
    }
}
