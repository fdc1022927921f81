//! Persisted catalog of divisor classes and test curves.
//!
//! One JSON document holds every record for a range of genera. Coefficients
//! are written as canonical `"p/q"` strings keyed by basis symbol.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::extremality::{kappa_mu, teich_vector_abelian, Partition, TeichParamsAbelian};
use crate::picard::{
    basis, class_d, class_stratum_abelian, class_stratum_quadratic, class_w,
    genus2_lambda_relation, kappa_relation, DivisorClass, SpaceKind,
};
use crate::porteous::{genus4_quadric_pencil, pencil_test_curve, quartic_pencil};
use crate::testcurves::{
    curve_a, curve_b, curve_c, curves_b1_b2_b3, moving_curve_catalog, CurveData, CurveRecord,
};

/// Environment variable overriding the catalog path.
pub const CATALOG_ENV: &str = "HODGEDIV_CATALOG";

pub fn default_path() -> PathBuf {
    std::env::var_os(CATALOG_ENV).map_or_else(|| PathBuf::from("catalog.json"), PathBuf::from)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub name: String,
    pub anchor: String,
    pub kind: SpaceKind,
    pub genus: u32,
    pub coefficients: IndexMap<String, Rational>,
}

impl ClassEntry {
    pub fn from_class(name: &str, anchor: &str, c: &DivisorClass) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            kind: c.basis().kind(),
            genus: c.basis().genus(),
            coefficients: c.terms().map(|(s, v)| (s.to_string(), v.clone())).collect(),
        }
    }

    pub fn to_class(&self) -> Result<DivisorClass> {
        let b = basis(self.kind, self.genus)?;
        if self.coefficients.len() != b.len() {
            return Err(Error::Dimension {
                expected: b.len(),
                got: self.coefficients.len(),
            });
        }
        let terms: Vec<(&str, Rational)> = self
            .coefficients
            .iter()
            .map(|(s, v)| (s.as_str(), v.clone()))
            .collect();
        DivisorClass::from_terms(b, &terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CurveEntryData {
    Vector {
        entries: IndexMap<String, Rational>,
    },
    TotalBoundary {
        eta: Rational,
        lambda: Rational,
        delta_total: Rational,
    },
    Unset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub name: String,
    pub anchor: String,
    pub kind: SpaceKind,
    pub genus: u32,
    pub data: CurveEntryData,
    pub known_pairings: BTreeMap<String, Rational>,
}

impl CurveEntry {
    pub fn from_record(c: &CurveRecord) -> Self {
        let data = match &c.data {
            CurveData::Vector(v) => CurveEntryData::Vector {
                entries: c
                    .basis
                    .symbols()
                    .iter()
                    .cloned()
                    .zip(v.iter().cloned())
                    .collect(),
            },
            CurveData::TotalBoundary {
                eta,
                lambda,
                delta_total,
            } => CurveEntryData::TotalBoundary {
                eta: eta.clone(),
                lambda: lambda.clone(),
                delta_total: delta_total.clone(),
            },
            CurveData::Unset => CurveEntryData::Unset,
        };
        Self {
            name: c.name.clone(),
            anchor: c.anchor.clone(),
            kind: c.basis.kind(),
            genus: c.basis.genus(),
            data,
            known_pairings: c.known_pairings.clone(),
        }
    }

    pub fn to_record(&self) -> Result<CurveRecord> {
        let b = basis(self.kind, self.genus)?;
        let data = match &self.data {
            CurveEntryData::Vector { entries } => {
                let terms: Vec<(&str, Rational)> = entries
                    .iter()
                    .map(|(s, v)| (s.as_str(), v.clone()))
                    .collect();
                CurveData::Vector(
                    DivisorClass::from_terms(b.clone(), &terms)?
                        .coeffs()
                        .to_vec(),
                )
            }
            CurveEntryData::TotalBoundary {
                eta,
                lambda,
                delta_total,
            } => CurveData::TotalBoundary {
                eta: eta.clone(),
                lambda: lambda.clone(),
                delta_total: delta_total.clone(),
            },
            CurveEntryData::Unset => CurveData::Unset,
        };
        Ok(CurveRecord {
            name: self.name.clone(),
            anchor: self.anchor.clone(),
            basis: b,
            data,
            known_pairings: self.known_pairings.clone(),
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub classes: Vec<ClassEntry>,
    pub curves: Vec<CurveEntry>,
}

impl Catalog {
    /// Every catalogued class and curve for the given genera.
    pub fn build(genera: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut cat = Self::default();
        for g in genera {
            cat.add_genus(g)?;
        }
        Ok(cat)
    }

    fn add_genus(&mut self, g: u32) -> Result<()> {
        let mut class = |name: &str, anchor: &str, c: DivisorClass| {
            self.classes.push(ClassEntry::from_class(name, anchor, &c));
        };
        class(
            "D",
            "canonical divisors containing a Weierstrass point",
            class_d(g)?,
        );
        class("W", "Weierstrass divisor on Mbar_{g,1}", class_w(g)?);
        class(
            "H(2)",
            "abelian differentials with a double zero",
            class_stratum_abelian(g)?,
        );
        class(
            "Q(2)",
            "quadratic differentials with a double zero",
            class_stratum_quadratic(g)?,
        );
        class("kappa", "kappa = 12 lambda - delta", kappa_relation(g)?);
        if g == 2 {
            class(
                "lambda",
                "lambda in terms of boundary classes in genus 2",
                genus2_lambda_relation(),
            );
        }

        let mut curves = vec![curve_a(g)?, curve_b(g)?];
        if g >= 3 {
            for i in 1..=g / 2 {
                curves.push(curve_c(g, i)?);
                curves.extend(curves_b1_b2_b3(g, i)?);
            }
        }
        curves.extend(moving_curve_catalog(g)?);
        match g {
            3 => curves.push(pencil_test_curve(&quartic_pencil())?),
            4 => curves.push(pencil_test_curve(&genus4_quadric_pencil())?),
            _ => {}
        }
        let p = Partition::stratum_abelian(g)?;
        let sample = TeichParamsAbelian::new(Rational::int(2), kappa_mu(&p));
        curves.push(teich_vector_abelian(g, &p, &sample)?);
        self.curves
            .extend(curves.iter().map(CurveEntry::from_record));
        Ok(())
    }

    pub fn genera(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self
            .classes
            .iter()
            .map(|c| c.genus)
            .chain(self.curves.iter().map(|c| c.genus))
            .collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Records of one genus.
    pub fn for_genus(&self, g: u32) -> Self {
        Self {
            classes: self
                .classes
                .iter()
                .filter(|c| c.genus == g)
                .cloned()
                .collect(),
            curves: self
                .curves
                .iter()
                .filter(|c| c.genus == g)
                .cloned()
                .collect(),
        }
    }

    pub fn class(&self, name: &str, g: u32) -> Option<&ClassEntry> {
        self.classes.iter().find(|c| c.name == name && c.genus == g)
    }

    pub fn curve(&self, name: &str, g: u32) -> Option<&CurveEntry> {
        self.curves.iter().find(|c| c.name == name && c.genus == g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let cat: Self = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        for c in &cat.classes {
            c.to_class()?;
        }
        for c in &cat.curves {
            c.to_record()?;
        }
        Ok(cat)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut s = self.to_json();
        s.push('\n');
        std::fs::write(path, s).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    /// Names of records that differ from a fresh build of the same genera.
    pub fn diff_against_rebuild(&self) -> Result<Vec<String>> {
        let fresh = Self::build(self.genera())?;
        let mut out = Vec::new();
        for c in &self.classes {
            if fresh.class(&c.name, c.genus) != Some(c) {
                out.push(format!("class {} (g={})", c.name, c.genus));
            }
        }
        for c in &self.curves {
            if fresh.curve(&c.name, c.genus) != Some(c) {
                out.push(format!("curve {} (g={})", c.name, c.genus));
            }
        }
        for c in &fresh.classes {
            if self.class(&c.name, c.genus).is_none() {
                out.push(format!("missing class {} (g={})", c.name, c.genus));
            }
        }
        for c in &fresh.curves {
            if self.curve(&c.name, c.genus).is_none() {
                out.push(format!("missing curve {} (g={})", c.name, c.genus));
            }
        }
        Ok(out)
    }
}
