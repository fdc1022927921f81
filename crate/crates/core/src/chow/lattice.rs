use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactq::Rational;

/// Intersection lattice of a surface blown up at `r` general points: the base
/// generators with their intersection form, plus exceptional curves
/// `E_1..E_r` with `E_i^2 = -1` orthogonal to everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUpLattice {
    base_names: Vec<String>,
    base_form: Vec<Vec<i64>>,
    exceptional: usize,
}

impl BlowUpLattice {
    pub fn new(
        base_names: Vec<String>,
        base_form: Vec<Vec<i64>>,
        exceptional: usize,
    ) -> Result<Arc<Self>> {
        let n = base_names.len();
        if base_form.len() != n || base_form.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidLattice(format!("form must be {n}x{n}")));
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| base_form[i][j] == base_form[j][i]));
        if !symmetric {
            return Err(Error::InvalidLattice("form is not symmetric".into()));
        }
        Ok(Arc::new(Self {
            base_names,
            base_form,
            exceptional,
        }))
    }

    pub fn base_rank(&self) -> usize {
        self.base_names.len()
    }

    pub fn exceptional_count(&self) -> usize {
        self.exceptional
    }

    pub fn rank(&self) -> usize {
        self.base_rank() + self.exceptional
    }

    pub fn base_names(&self) -> &[String] {
        &self.base_names
    }
}

/// Class in a [`BlowUpLattice`]: coefficients on the base generators followed
/// by `E_1..E_r`.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeClass {
    lattice: Arc<BlowUpLattice>,
    coeffs: Vec<Rational>,
}

impl LatticeClass {
    pub fn new(lattice: &Arc<BlowUpLattice>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != lattice.rank() {
            return Err(Error::Dimension {
                expected: lattice.rank(),
                got: coeffs.len(),
            });
        }
        Ok(Self {
            lattice: lattice.clone(),
            coeffs,
        })
    }

    pub fn zero(lattice: &Arc<BlowUpLattice>) -> Self {
        Self {
            lattice: lattice.clone(),
            coeffs: vec![Rational::zero(); lattice.rank()],
        }
    }

    /// Pullback of a base class.
    pub fn base(lattice: &Arc<BlowUpLattice>, base: &[Rational]) -> Result<Self> {
        if base.len() != lattice.base_rank() {
            return Err(Error::Dimension {
                expected: lattice.base_rank(),
                got: base.len(),
            });
        }
        let mut c = Self::zero(lattice);
        c.coeffs[..base.len()].clone_from_slice(base);
        Ok(c)
    }

    pub fn base_int(lattice: &Arc<BlowUpLattice>, base: &[i64]) -> Result<Self> {
        Self::base(
            lattice,
            &base.iter().map(|&x| Rational::int(x)).collect::<Vec<_>>(),
        )
    }

    /// `E_i`, 0-based.
    pub fn exceptional(lattice: &Arc<BlowUpLattice>, i: usize) -> Self {
        assert!(
            i < lattice.exceptional,
            "exceptional index {i} out of range"
        );
        let mut c = Self::zero(lattice);
        c.coeffs[lattice.base_rank() + i] = Rational::one();
        c
    }

    /// `E_1 + ... + E_r`.
    pub fn exceptional_sum(lattice: &Arc<BlowUpLattice>) -> Self {
        let mut c = Self::zero(lattice);
        for x in &mut c.coeffs[lattice.base_rank()..] {
            *x = Rational::one();
        }
        c
    }

    pub fn lattice(&self) -> &Arc<BlowUpLattice> {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn base_part(&self) -> &[Rational] {
        &self.coeffs[..self.lattice.base_rank()]
    }

    pub fn exceptional_part(&self) -> &[Rational] {
        &self.coeffs[self.lattice.base_rank()..]
    }

    pub fn is_base_pullback(&self) -> bool {
        self.exceptional_part().iter().all(Rational::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            lattice: self.lattice.clone(),
            coeffs,
        })
    }

    pub fn dot(&self, other: &Self) -> Result<Rational> {
        lattice_intersect(self, other)
    }
}

/// Intersection number of two classes on the same blown-up surface.
pub fn lattice_intersect(u: &LatticeClass, v: &LatticeClass) -> Result<Rational> {
    if u.lattice != v.lattice {
        return Err(Error::LatticeMismatch);
    }
    let l = &u.lattice;
    let n = l.base_rank();
    let mut total = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            let m = l.base_form[i][j];
            if m != 0 {
                total += Rational::int(m) * &u.coeffs[i] * &v.coeffs[j];
            }
        }
    }
    for (a, b) in u.exceptional_part().iter().zip(v.exceptional_part()) {
        total -= a * b;
    }
    Ok(total)
}

impl Add for &LatticeClass {
    type Output = LatticeClass;
    fn add(self, rhs: &LatticeClass) -> LatticeClass {
        self.try_add(rhs)
            .expect("adding classes from different lattices")
    }
}

impl Neg for &LatticeClass {
    type Output = LatticeClass;
    fn neg(self) -> LatticeClass {
        self.scale(&Rational::int(-1))
    }
}

impl Sub for &LatticeClass {
    type Output = LatticeClass;
    fn sub(self, rhs: &LatticeClass) -> LatticeClass {
        self + &-rhs
    }
}

impl fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(String, &Rational)> = self
            .lattice
            .base_names
            .iter()
            .cloned()
            .zip(self.base_part())
            .collect();
        let ex = self.exceptional_part();
        match ex.first() {
            Some(first) if ex.iter().all(|c| c == first) => terms.push(("sum E_i".into(), first)),
            _ => terms.extend(
                ex.iter()
                    .enumerate()
                    .map(|(i, c)| (format!("E_{}", i + 1), c)),
            ),
        }
        crate::picard::fmt_linear(f, terms.iter().map(|(s, c)| (s.as_str(), *c)))
    }
}

impl fmt::Debug for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Base surface of a pencil.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseSurface {
    /// `P^2` with hyperplane class `h`.
    P2,
    /// `P^1 x P^1` (a smooth quadric) with rulings `l1`, `l2`.
    P1xP1,
}

impl BaseSurface {
    pub fn names(self) -> Vec<String> {
        match self {
            BaseSurface::P2 => vec!["h".into()],
            BaseSurface::P1xP1 => vec!["l1".into(), "l2".into()],
        }
    }

    pub fn form(self) -> Vec<Vec<i64>> {
        match self {
            BaseSurface::P2 => vec![vec![1]],
            BaseSurface::P1xP1 => vec![vec![0, 1], vec![1, 0]],
        }
    }

    pub fn canonical(self) -> Vec<i64> {
        match self {
            BaseSurface::P2 => vec![-3],
            BaseSurface::P1xP1 => vec![-2, -2],
        }
    }

    /// Topological Euler characteristic.
    pub fn euler(self) -> i64 {
        match self {
            BaseSurface::P2 => 3,
            BaseSurface::P1xP1 => 4,
        }
    }

    fn is_ample(self, class: &[i64]) -> bool {
        match self {
            BaseSurface::P2 => class.len() == 1 && class[0] > 0,
            BaseSurface::P1xP1 => class.len() == 2 && class.iter().all(|&c| c > 0),
        }
    }

    fn pairing(self, u: &[i64], v: &[i64]) -> i64 {
        let m = self.form();
        (0..u.len())
            .flat_map(|i| (0..v.len()).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * u[i] * v[j])
            .sum()
    }
}

/// Total space of a general pencil on a base surface, blown up at its base points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilFamily {
    pub base: BaseSurface,
    pub pencil_class: Vec<i64>,
    pub lattice: Arc<BlowUpLattice>,
    /// Fiber class `bl^* C - sum E_i`.
    pub fiber: LatticeClass,
    /// Relative dualizing class `K_X + 2 f`.
    pub omega_rel: LatticeClass,
    pub genus: u32,
    pub base_points: usize,
}

impl PencilFamily {
    /// Pullback of a base class.
    pub fn pullback(&self, base: &[i64]) -> Result<LatticeClass> {
        LatticeClass::base_int(&self.lattice, base)
    }

    /// Canonical class of the blown-up total space.
    pub fn canonical(&self) -> LatticeClass {
        &self.pullback(&self.base.canonical()).expect("base rank")
            + &LatticeClass::exceptional_sum(&self.lattice)
    }

    /// Topological Euler characteristic of the blown-up total space.
    pub fn total_euler(&self) -> i64 {
        self.base.euler() + self.base_points as i64
    }
}

/// Blows up the `C^2` base points of a pencil in `|C|` and returns the fibration data.
/// The fiber genus comes from adjunction on the base.
pub fn pencil_family(base: BaseSurface, pencil_class: &[i64]) -> Result<PencilFamily> {
    if !base.is_ample(pencil_class) {
        return Err(Error::NotAmple(pencil_class.to_vec()));
    }
    let c = pencil_class;
    let self_int = base.pairing(c, c);
    let adj = self_int + base.pairing(c, &base.canonical());
    let genus = u32::try_from(adj / 2 + 1).map_err(|_| Error::NotAmple(c.to_vec()))?;
    let r = usize::try_from(self_int).expect("ample class has positive square");
    let lattice = BlowUpLattice::new(base.names(), base.form(), r)?;
    let sum_e = LatticeClass::exceptional_sum(&lattice);
    let fiber = &LatticeClass::base_int(&lattice, c)? - &sum_e;
    let k = &LatticeClass::base_int(&lattice, &base.canonical())? + &sum_e;
    let omega_rel = &k + &fiber.scale(&Rational::int(2));
    Ok(PencilFamily {
        base,
        pencil_class: c.to_vec(),
        lattice,
        fiber,
        omega_rel,
        genus,
        base_points: r,
    })
}
