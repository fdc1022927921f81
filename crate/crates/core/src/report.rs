//! Command implementations returning deterministic, serializable reports.

use std::fmt::Write as _;
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CurveEntryData};
use crate::chow::{
    adjunction_canonical, eval_expression, lattice_intersect, parse_dims,
    relative_dualizing_linear, MultiProjRing,
};
use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::extremality::{
    ample_abelian, ample_quadratic, certificate_check, default_abelian_grid,
    default_quadratic_grid, kappa_mu, stratum_pairing_abelian_affine,
    stratum_pairing_quadratic_affine, teich_vector_abelian, teich_vector_quadratic,
    threshold_abelian, threshold_quadratic, Partition, PartitionKind, TeichParamsAbelian,
    TeichParamsQuadratic,
};
use crate::picard::{
    class_d, class_stratum_abelian, class_stratum_quadratic, genus2_lambda_relation, pair,
    substitute_relation,
};
use crate::porteous::{
    eta_degree_from_family, genus4_quadric_pencil, hyperplane, kappa_degree, lambda_degree,
    pencil_test_curve, quartic_pencil, singular_fiber_count, weierstrass_family_class,
    weierstrass_sweep_degree, FamilyInvariants,
};
use crate::testcurves::{derive_theorem_class_detailed, CurveData, CurveRecord};

/// Named worked examples accepted by [`cmd_verify`].
pub const EXAMPLES: [&str; 3] = ["quartic-pencil", "genus4-quadric", "genus2-relation"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub quantity: String,
    pub anchor: String,
    pub expected: Option<String>,
    pub computed: String,
    pub matched: bool,
}

impl Row {
    /// Exact comparison of two rationals.
    pub fn check(
        quantity: impl Into<String>,
        anchor: impl Into<String>,
        expected: &Rational,
        computed: &Rational,
    ) -> Self {
        Self {
            quantity: quantity.into(),
            anchor: anchor.into(),
            expected: Some(expected.to_string()),
            computed: computed.to_string(),
            matched: expected == computed,
        }
    }

    /// A computed value with nothing to compare against.
    pub fn info(
        quantity: impl Into<String>,
        anchor: impl Into<String>,
        computed: impl ToString,
    ) -> Self {
        Self {
            quantity: quantity.into(),
            anchor: anchor.into(),
            expected: None,
            computed: computed.to_string(),
            matched: true,
        }
    }

    pub fn flag(
        quantity: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        detail: impl ToString,
    ) -> Self {
        Self {
            quantity: quantity.into(),
            anchor: anchor.into(),
            expected: None,
            computed: detail.to_string(),
            matched: ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: IndexMap<String, String>,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl Report {
    fn new(command: impl Into<String>, inputs: &[(&str, String)]) -> Self {
        Self {
            command: command.into(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            rows: Vec::new(),
            vector: None,
            pairing: None,
            notes: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    fn finish(mut self) -> Self {
        self.verdict = if self.rows.iter().all(|r| r.matched) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// 0 when every row matches, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if !self.inputs.is_empty() {
            let inputs: Vec<String> = self
                .inputs
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(out, "inputs:  {}", inputs.join(" "));
        }
        if !self.rows.is_empty() {
            let header = ["quantity", "anchor", "expected", "computed", "match"];
            let cells: Vec<[String; 5]> = self
                .rows
                .iter()
                .map(|r| {
                    [
                        r.quantity.clone(),
                        r.anchor.clone(),
                        r.expected.clone().unwrap_or_else(|| "-".into()),
                        r.computed.clone(),
                        if r.matched { "yes".into() } else { "NO".into() },
                    ]
                })
                .collect();
            let mut width = header.map(str::len);
            for row in &cells {
                for (w, c) in width.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cols: &[String]| {
                let padded: Vec<String> = cols
                    .iter()
                    .zip(&width)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&header.map(String::from)));
            let _ = writeln!(out, "{}", line(&width.map(|w| "-".repeat(w))));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        if let Some(v) = &self.vector {
            let parts: Vec<String> = v.iter().map(|(k, x)| format!("{k}={x}")).collect();
            let _ = writeln!(out, "vector:  {}", parts.join(" "));
        }
        if let Some(p) = &self.pairing {
            let _ = writeln!(out, "pairing: {p}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "note:    {n}");
        }
        let _ = writeln!(
            out,
            "verdict: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn curve_vector(c: &CurveRecord) -> IndexMap<String, String> {
    match &c.data {
        CurveData::Vector(v) => c
            .basis
            .symbols()
            .iter()
            .cloned()
            .zip(v.iter().map(ToString::to_string))
            .collect(),
        CurveData::TotalBoundary {
            eta,
            lambda,
            delta_total,
        } => IndexMap::from([
            ("eta".to_string(), eta.to_string()),
            ("lambda".to_string(), lambda.to_string()),
            ("delta".to_string(), delta_total.to_string()),
        ]),
        CurveData::Unset => IndexMap::new(),
    }
}

/// Re-derives the class of `D` from test curves and compares it with the closed form.
pub fn cmd_derive(g: u32) -> Result<Report> {
    let der = derive_theorem_class_detailed(g)?;
    let expected = class_d(g)?;
    let mut rep = Report::new(format!("derive --genus {g}"), &[("genus", g.to_string())]);
    for ((sym, e), c) in expected.terms().zip(der.class.coeffs()) {
        rep.push(Row::check(
            format!("coefficient of {sym}"),
            "closed-form class of D",
            e,
            c,
        ));
    }
    rep.push(Row::info(
        "a'",
        "eta coefficient on the simple-zero stratum",
        &der.a_prime,
    ));
    rep.push(Row::info(
        "b'",
        "multiple of the double-zero stratum class",
        &der.b_prime,
    ));
    rep.push(Row::check(
        "b",
        "24 b'",
        &(Rational::int(24) * &der.b_prime),
        der.class.coeff("lambda")?,
    ));
    rep.vector = Some(
        der.class
            .terms()
            .map(|(s, v)| (s.to_string(), v.to_string()))
            .collect(),
    );
    rep.notes.push(format!("derived:  {}", der.class));
    rep.notes.push(format!("expected: {expected}"));
    rep.notes
        .push(format!("equations: {}", der.equations.join("; ")));
    Ok(rep.finish())
}

fn q(n: i64) -> Rational {
    Rational::int(n)
}

fn verify_quartic() -> Result<Report> {
    let fam = quartic_pencil();
    let g = fam.genus;
    let mut rep = Report::new(
        "verify-example --example quartic-pencil",
        &[("example", "quartic-pencil".into())],
    );
    let h = hyperplane(&fam);
    let curve = pencil_test_curve(&fam)?;
    rep.push(Row::check(
        "genus",
        "plane quartics",
        &q(3),
        &Rational::from(g),
    ));
    rep.push(Row::check(
        "omega.f",
        "2g-2",
        &q(4),
        &lattice_intersect(&fam.omega_rel, &fam.fiber)?,
    ));
    rep.push(Row::check(
        "f^2",
        "fibers are disjoint",
        &q(0),
        &lattice_intersect(&fam.fiber, &fam.fiber)?,
    ));
    rep.push(Row::check(
        "deg eta",
        "hyperplane cuts the differentials",
        &q(1),
        &eta_degree_from_family(&fam, &h)?,
    ));
    rep.push(Row::check(
        "B.kappa",
        "omega_rel^2",
        &q(9),
        &kappa_degree(&fam),
    ));
    rep.push(Row::check(
        "B.delta_0",
        "singular fibers",
        &q(27),
        &singular_fiber_count(&fam),
    ));
    rep.push(Row::check(
        "B.lambda",
        "(kappa + delta)/12",
        &q(3),
        &lambda_degree(&fam),
    ));
    rep.push(Row::check(
        "B.D",
        "pairing with the class of D",
        &q(18),
        &pair(&curve, &class_d(g)?)?,
    ));
    let inv = FamilyInvariants::from_family(fam.clone())?;
    let sweep = weierstrass_family_class(&inv)?;
    let expected_sweep = &fam.omega_rel.scale(&q(6)) - &fam.fiber.scale(&q(3));
    rep.push(Row::flag(
        "sweep class",
        "6 omega - 3 f",
        sweep == expected_sweep,
        &sweep,
    ));
    rep.push(Row::check(
        "B.D",
        "Porteous sweep against h",
        &q(18),
        &weierstrass_sweep_degree(&inv, &h)?,
    ));
    rep.push(Row::check("B.D", "6d - 6 at d = 4", &q(18), &q(6 * 4 - 6)));
    rep.vector = Some(curve_vector(&curve));
    Ok(rep.finish())
}

fn verify_genus4() -> Result<Report> {
    let fam = genus4_quadric_pencil();
    let g = fam.genus;
    let mut rep = Report::new(
        "verify-example --example genus4-quadric",
        &[("example", "genus4-quadric".into())],
    );
    let h = hyperplane(&fam);
    let curve = pencil_test_curve(&fam)?;
    rep.push(Row::check(
        "genus",
        "(3,3) curves on a quadric",
        &q(4),
        &Rational::from(g),
    ));
    rep.push(Row::check(
        "omega.f",
        "2g-2",
        &q(6),
        &lattice_intersect(&fam.omega_rel, &fam.fiber)?,
    ));
    rep.push(Row::check(
        "f^2",
        "fibers are disjoint",
        &q(0),
        &lattice_intersect(&fam.fiber, &fam.fiber)?,
    ));
    rep.push(Row::check(
        "B.eta",
        "hyperplane cuts the differentials",
        &q(1),
        &eta_degree_from_family(&fam, &h)?,
    ));
    rep.push(Row::check(
        "B.kappa",
        "lattice omega_rel^2",
        &q(14),
        &kappa_degree(&fam),
    ));

    // total space as a complete intersection of types (0,2) and (1,3) in P^1 x P^3
    let ring = MultiProjRing::new(vec![1, 3])?;
    let quadric = ring.linear(&[0, 2])?;
    let cubics = ring.linear(&[1, 3])?;
    let total = &quadric * &cubics;
    let omega = relative_dualizing_linear(&adjunction_canonical(&ring, &[quadric, cubics])?, 0)?;
    rep.push(Row::flag(
        "omega_rel",
        "adjunction in P^1 x P^3",
        omega.linear_coeffs() == Some(vec![q(1), q(1)]),
        &omega,
    ));
    rep.push(Row::check(
        "B.kappa",
        "Chow ring: (a+b)^2 (a+3b) 2b",
        &q(14),
        &(&omega.pow(2) * &total).integrate(),
    ));
    let literal = eval_expression("(a+b)*(a+b)*(a+3b)*(2b)", &ring, None)?.integrate();
    rep.push(Row::check(
        "B.kappa",
        "Chow ring expression",
        &q(14),
        &literal,
    ));

    rep.push(Row::check(
        "B.delta_0",
        "singular fibers",
        &q(34),
        &singular_fiber_count(&fam),
    ));
    rep.push(Row::check(
        "B.lambda",
        "(kappa + delta)/12",
        &q(4),
        &lambda_degree(&fam),
    ));
    rep.push(Row::check(
        "B.D",
        "pairing with the class of D",
        &q(56),
        &pair(&curve, &class_d(g)?)?,
    ));
    let inv = FamilyInvariants::from_family(fam.clone())?;
    let sweep = weierstrass_family_class(&inv)?;
    let expected_sweep = &fam.omega_rel.scale(&q(10)) - &fam.fiber.scale(&q(4));
    rep.push(Row::flag(
        "sweep class",
        "10 omega - 4 f",
        sweep == expected_sweep,
        &sweep,
    ));
    rep.push(Row::check(
        "B.D",
        "lattice Porteous against l1 + l2",
        &q(56),
        &weierstrass_sweep_degree(&inv, &h)?,
    ));
    let f = ring.generator(0);
    let sweep_chow = &(&omega.scale(&q(10)) - &f.scale(&q(4))) * &ring.generator(1);
    rep.push(Row::check(
        "B.D",
        "Chow ring: (10 omega - 4 f) h",
        &q(56),
        &(&sweep_chow * &total).integrate(),
    ));
    rep.vector = Some(curve_vector(&curve));
    Ok(rep.finish())
}

fn verify_genus2() -> Result<Report> {
    let mut rep = Report::new(
        "verify-example --example genus2-relation",
        &[("example", "genus2-relation".into())],
    );
    let diff = class_d(2)?.try_sub(&class_stratum_abelian(2)?)?;
    let residual = substitute_relation(&diff, "lambda", &genus2_lambda_relation())?;
    for (sym, v) in residual.terms() {
        rep.push(Row::check(
            format!("residual {sym}"),
            "D minus the double-zero stratum, lambda eliminated",
            &q(0),
            v,
        ));
    }
    rep.vector = Some(
        residual
            .terms()
            .map(|(s, v)| (s.to_string(), v.to_string()))
            .collect(),
    );
    rep.notes.push(format!("D - H(2) = {diff}"));
    Ok(rep.finish())
}

pub fn cmd_verify(example: &str) -> Result<Report> {
    match example {
        "quartic-pencil" => verify_quartic(),
        "genus4-quadric" => verify_genus4(),
        "genus2-relation" => verify_genus2(),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

/// Catalog records of one genus, read from `path` when it exists.
pub fn cmd_catalog_list(g: u32, path: &Path) -> Result<Report> {
    let (cat, source) = if path.exists() {
        (Catalog::load(path)?, path.display().to_string())
    } else {
        (Catalog::build([g])?, "built in memory".to_string())
    };
    let cat = cat.for_genus(g);
    if cat.classes.is_empty() && cat.curves.is_empty() {
        return Err(Error::Genus(g));
    }
    let mut rep = Report::new(
        format!("catalog list --genus {g}"),
        &[("genus", g.to_string()), ("source", source)],
    );
    for c in &cat.classes {
        rep.push(Row::info(
            format!("class {} [{:?}]", c.name, c.kind),
            &c.anchor,
            c.to_class()?,
        ));
    }
    for c in &cat.curves {
        let shown = match &c.data {
            CurveEntryData::Vector { entries } => {
                let parts: Vec<String> = entries
                    .iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                format!("({})", parts.join(", "))
            }
            CurveEntryData::TotalBoundary {
                eta,
                lambda,
                delta_total,
            } => {
                format!("(eta={eta}, lambda={lambda}, delta={delta_total})")
            }
            CurveEntryData::Unset => "unset".to_string(),
        };
        let known: Vec<String> = c
            .known_pairings
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let shown = if known.is_empty() {
            shown
        } else {
            format!("{shown} known {}", known.join(", "))
        };
        rep.push(Row::info(
            format!("curve {} [{:?}]", c.name, c.kind),
            &c.anchor,
            shown,
        ));
    }
    Ok(rep.finish())
}

pub fn cmd_catalog_write(path: &Path, max_genus: u32) -> Result<Report> {
    if max_genus < 2 {
        return Err(Error::Genus(max_genus));
    }
    let cat = Catalog::build(2..=max_genus)?;
    cat.save(path)?;
    let mut rep = Report::new(
        format!("catalog write --max-genus {max_genus}"),
        &[
            ("path", path.display().to_string()),
            ("max_genus", max_genus.to_string()),
        ],
    );
    rep.push(Row::info("classes", "records written", cat.classes.len()));
    rep.push(Row::info("curves", "records written", cat.curves.len()));
    Ok(rep.finish())
}

/// Compares a stored catalog with a fresh build.
pub fn cmd_catalog_check(path: &Path) -> Result<Report> {
    let cat = Catalog::load(path)?;
    let diffs = cat.diff_against_rebuild()?;
    let mut rep = Report::new("catalog check", &[("path", path.display().to_string())]);
    rep.push(Row::info(
        "records",
        "classes + curves",
        cat.classes.len() + cat.curves.len(),
    ));
    if diffs.is_empty() {
        rep.push(Row::flag(
            "stored records",
            "fresh build",
            true,
            "identical",
        ));
    }
    for d in diffs {
        rep.push(Row::flag(d, "fresh build", false, "differs"));
    }
    Ok(rep.finish())
}

/// Degree of a top-degree expression on a product of projective spaces.
pub fn cmd_chow_eval(expr: &str, dims: &str, gens: Option<&[String]>) -> Result<Report> {
    let ring = parse_dims(dims)?;
    let value = eval_expression(expr, &ring, gens)?;
    let mut inputs = vec![("expr", expr.to_string()), ("dims", dims.to_string())];
    let mut command = format!("chow eval {expr:?} --dims {dims}");
    if let Some(g) = gens {
        inputs.push(("gens", g.join(",")));
        let _ = write!(command, " --gens {}", g.join(","));
    }
    let mut rep = Report::new(command, &inputs);
    rep.push(Row::info("class", "truncated product", &value));
    rep.push(Row::info(
        "degree",
        "coefficient of the point class",
        value.integrate(),
    ));
    rep.pairing = Some(value.integrate().to_string());
    Ok(rep.finish())
}

/// Teichmuller curve vector and its pairing with the double-zero stratum class.
/// `param` is `L` in the abelian case and `c_area` in the quadratic one.
pub fn cmd_teich_pair(
    kind: PartitionKind,
    g: u32,
    chi: &Rational,
    param: &Rational,
) -> Result<Report> {
    let p = Partition::stratum(kind, g)?;
    let (curve, stratum, expected, (constant, slope), pname) = match kind {
        PartitionKind::Abelian => (
            teich_vector_abelian(g, &p, &TeichParamsAbelian::new(chi.clone(), param.clone()))?,
            class_stratum_abelian(g)?,
            -chi / q(3),
            stratum_pairing_abelian_affine(g, chi)?,
            "lyapunov",
        ),
        PartitionKind::Quadratic => (
            teich_vector_quadratic(
                g,
                &p,
                &TeichParamsQuadratic::new(chi.clone(), param.clone()),
            )?,
            class_stratum_quadratic(g)?,
            -chi / q(2),
            stratum_pairing_quadratic_affine(g, chi)?,
            "carea",
        ),
    };
    let value = pair(&curve, &stratum)?;
    let mut rep = Report::new(
        format!("teich pair --kind {kind} --genus {g} --chi {chi} --{pname} {param}"),
        &[
            ("kind", kind.to_string()),
            ("genus", g.to_string()),
            ("chi", chi.to_string()),
            (pname, param.to_string()),
        ],
    );
    rep.push(Row::info("kappa_mu", p.to_string(), kappa_mu(&p)));
    let anchor = if kind == PartitionKind::Abelian {
        "-chi/3"
    } else {
        "-chi/2"
    };
    rep.push(Row::check("C.stratum", anchor, &expected, &value));
    rep.push(Row::check(
        format!("coefficient of {pname}"),
        "cancels identically",
        &q(0),
        &slope,
    ));
    rep.push(Row::check("constant term", anchor, &expected, &constant));
    rep.vector = Some(curve_vector(&curve));
    rep.pairing = Some(value.to_string());
    Ok(rep.finish())
}

pub struct AmpleInput<'a> {
    pub a: &'a Rational,
    pub b: &'a Rational,
    pub c: &'a Rational,
}

fn threshold_inputs(
    kind: PartitionKind,
    g: u32,
    amp: &AmpleInput<'_>,
    c_max: Option<&Rational>,
) -> Vec<(&'static str, String)> {
    let mut v = vec![
        ("kind", kind.to_string()),
        ("genus", g.to_string()),
        ("a", amp.a.to_string()),
        ("b", amp.b.to_string()),
        ("c", amp.c.to_string()),
    ];
    if let Some(m) = c_max {
        v.push(("cmax", m.to_string()));
    }
    v
}

fn need_cmax(c_max: Option<&Rational>) -> Result<&Rational> {
    c_max.ok_or_else(|| Error::TeichParams("--cmax is required for the quadratic stratum".into()))
}

fn compute_threshold(
    kind: PartitionKind,
    g: u32,
    amp: &AmpleInput<'_>,
    c_max: Option<&Rational>,
) -> Result<crate::extremality::Threshold> {
    match kind {
        PartitionKind::Abelian => threshold_abelian(amp.a, amp.b, amp.c, g),
        PartitionKind::Quadratic => threshold_quadratic(amp.a, amp.b, amp.c, g, need_cmax(c_max)?),
    }
}

fn tail(kind: PartitionKind, g: u32, amp: &AmpleInput<'_>, c_max: Option<&Rational>) -> String {
    let mut s = format!(
        "--kind {kind} --genus {g} --a {} --b {} --c {}",
        amp.a, amp.b, amp.c
    );
    if let Some(m) = c_max {
        let _ = write!(s, " --cmax {m}");
    }
    s
}

/// Largest `d` with `C.(S + dA) <= 0` on the whole parameter interval.
pub fn cmd_threshold(
    kind: PartitionKind,
    g: u32,
    amp: &AmpleInput<'_>,
    c_max: Option<&Rational>,
) -> Result<Report> {
    let t = compute_threshold(kind, g, amp, c_max)?;
    let mut rep = Report::new(
        format!("threshold {}", tail(kind, g, amp, c_max)),
        &threshold_inputs(kind, g, amp, c_max),
    );
    rep.push(Row::flag("d", "positive infimum", t.d.is_positive(), &t.d));
    let pname = if kind == PartitionKind::Abelian {
        "L"
    } else {
        "c_area"
    };
    rep.push(Row::info(
        format!("attained at {pname}"),
        "interval endpoint",
        &t.attained_at,
    ));
    Ok(rep.finish())
}

/// Checks `C.(S + dA) <= 0` on the default Teichmuller grid; `d` defaults to the threshold.
pub fn cmd_certify(
    kind: PartitionKind,
    g: u32,
    amp: &AmpleInput<'_>,
    c_max: Option<&Rational>,
    d: Option<&Rational>,
) -> Result<Report> {
    let (stratum, ample, grid) = match kind {
        PartitionKind::Abelian => (
            class_stratum_abelian(g)?,
            ample_abelian(g, amp.a, amp.b, amp.c)?,
            default_abelian_grid(g)?,
        ),
        PartitionKind::Quadratic => {
            let m = need_cmax(c_max)?;
            (
                class_stratum_quadratic(g)?,
                ample_quadratic(g, amp.a, amp.b, amp.c)?,
                default_quadratic_grid(g, m)?,
            )
        }
    };
    let d = match d {
        Some(d) => d.clone(),
        None => compute_threshold(kind, g, amp, c_max)?.d,
    };
    let cert = certificate_check(&stratum, &ample, &d, &grid)?;
    let mut inputs = threshold_inputs(kind, g, amp, c_max);
    inputs.push(("d", d.to_string()));
    let mut rep = Report::new(
        format!("certify {} --d {d}", tail(kind, g, amp, c_max)),
        &inputs,
    );
    rep.push(Row::info(
        "curves checked",
        "Teichmuller grid",
        cert.checked,
    ));
    for v in &cert.violations {
        rep.push(Row::flag(
            format!("C.(S + dA) for {}", v.curve),
            "must be <= 0",
            false,
            &v.value,
        ));
    }
    if cert.vacuous {
        rep.notes.push("no curves supplied; pass is vacuous".into());
    }
    rep.push(Row::flag(
        "certificate",
        "C.(S + dA) <= 0 on every curve",
        cert.pass,
        if cert.pass { "holds" } else { "violated" },
    ));
    Ok(rep.finish())
}
