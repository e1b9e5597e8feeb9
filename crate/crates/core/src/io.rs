//! JSON documents for factorizations, decompositions, catalog entries and
//! reports. Polynomials travel as canonical text; an optional `"vars"` list
//! names the ring variables (default `z0, z1, ...`).

use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::mf::{
    GradedFreeModule, GradedMatrix, MatrixFactorization, StrengthDecomposition, VerificationReport,
    Violation,
};
use crate::poly::{Polynomial, Ring, VarNames};
use crate::strength::{
    pow2_ceil, quadric_strength, singularity_profile, BlockCertificate, SingularityProfile,
    StrengthBound, StrengthCertificate,
};

/// Field, variable count and optional names shared by every document.
#[derive(Debug, Clone)]
pub struct Context {
    pub field: Field,
    pub vars: VarNames,
}

impl Context {
    pub fn new(field: Field, vars: VarNames) -> Self {
        Context { field, vars }
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.vars.len(), self.field)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.vars.parse(text, self.field)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        self.vars.format(p)
    }

    fn from_header(field: &str, num_vars: usize, vars: Option<Vec<String>>) -> Result<Self> {
        let field: Field = field.parse()?;
        let vars = match vars {
            None => VarNames::default_names(num_vars),
            Some(v) => {
                if v.len() != num_vars {
                    return Err(Error::Document(format!(
                        "num_vars is {num_vars} but {} names were given",
                        v.len()
                    )));
                }
                VarNames::new(v)?
            }
        };
        Ok(Context { field, vars })
    }

    fn names(&self) -> Option<Vec<String>> {
        (!self.vars.is_default()).then(|| self.vars.names().to_vec())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub source_twists: Vec<i64>,
    pub target_twists: Vec<i64>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfDoc {
    pub field: String,
    pub num_vars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub f: String,
    pub phi: MatrixDoc,
    pub psi: MatrixDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandsDoc {
    pub gs: Vec<String>,
    pub hs: Vec<String>,
}

/// Accepts both a bare decomposition (`gs`, `hs` at top level) and a
/// catalog entry (`decomposition: {gs, hs}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub field: String,
    pub num_vars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<SummandsDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub name: String,
    pub field: String,
    pub num_vars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub f: String,
    pub decomposition: Option<SummandsDoc>,
    pub provenance: String,
}

fn matrix_doc(m: &GradedMatrix, ctx: &Context) -> MatrixDoc {
    MatrixDoc {
        source_twists: m.source().twists().to_vec(),
        target_twists: m.target().twists().to_vec(),
        entries: m
            .entries()
            .iter()
            .map(|row| row.iter().map(|p| ctx.format(p)).collect())
            .collect(),
    }
}

fn matrix_from_doc(doc: &MatrixDoc, ctx: &Context) -> Result<GradedMatrix> {
    let entries = doc
        .entries
        .iter()
        .map(|row| row.iter().map(|t| ctx.parse(t)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    GradedMatrix::new(
        ctx.ring(),
        GradedFreeModule::new(doc.source_twists.clone())?,
        GradedFreeModule::new(doc.target_twists.clone())?,
        entries,
    )
}

pub fn mf_to_doc(mf: &MatrixFactorization, vars: &VarNames) -> MfDoc {
    let ctx = Context::new(mf.ring().field, vars.clone());
    MfDoc {
        field: ctx.field.to_string(),
        num_vars: vars.len(),
        vars: ctx.names(),
        f: ctx.format(mf.f()),
        phi: matrix_doc(mf.phi(), &ctx),
        psi: matrix_doc(mf.psi(), &ctx),
    }
}

pub fn mf_from_doc(doc: &MfDoc) -> Result<(MatrixFactorization, VarNames)> {
    let ctx = Context::from_header(&doc.field, doc.num_vars, doc.vars.clone())?;
    let mf = MatrixFactorization::new(
        ctx.parse(&doc.f)?,
        matrix_from_doc(&doc.phi, &ctx)?,
        matrix_from_doc(&doc.psi, &ctx)?,
    )?;
    Ok((mf, ctx.vars))
}

pub fn decomposition_to_doc(d: &StrengthDecomposition, vars: &VarNames) -> DecompositionDoc {
    let ctx = Context::new(d.ring().field, vars.clone());
    DecompositionDoc {
        field: ctx.field.to_string(),
        num_vars: vars.len(),
        vars: ctx.names(),
        gs: Some(d.gs().iter().map(|p| ctx.format(p)).collect()),
        hs: Some(d.hs().iter().map(|p| ctx.format(p)).collect()),
        decomposition: None,
    }
}

pub fn decomposition_from_doc(doc: &DecompositionDoc) -> Result<(StrengthDecomposition, VarNames)> {
    let ctx = Context::from_header(&doc.field, doc.num_vars, doc.vars.clone())?;
    let (gs, hs) = match (&doc.gs, &doc.hs, &doc.decomposition) {
        (Some(g), Some(h), _) => (g, h),
        (None, None, Some(s)) => (&s.gs, &s.hs),
        _ => {
            return Err(Error::Document(
                "expected `gs` and `hs`, or a `decomposition` object holding them".into(),
            ))
        }
    };
    let parse_all = |v: &[String]| v.iter().map(|t| ctx.parse(t)).collect::<Result<Vec<_>>>();
    let d = StrengthDecomposition::new(parse_all(gs)?, parse_all(hs)?)?;
    Ok((d, ctx.vars))
}

pub fn catalog_to_doc(e: &CatalogEntry) -> CatalogDoc {
    let ctx = Context::new(e.f.field(), e.vars.clone());
    CatalogDoc {
        name: e.name.clone(),
        field: ctx.field.to_string(),
        num_vars: e.vars.len(),
        vars: ctx.names(),
        f: ctx.format(&e.f),
        decomposition: e.decomposition.as_ref().map(|d| SummandsDoc {
            gs: d.gs().iter().map(|p| ctx.format(p)).collect(),
            hs: d.hs().iter().map(|p| ctx.format(p)).collect(),
        }),
        provenance: e.provenance.clone(),
    }
}

/// Parses a catalog document. The known factorization is not serialized,
/// so `mf` is always `None`.
pub fn catalog_from_doc(doc: &CatalogDoc) -> Result<CatalogEntry> {
    let ctx = Context::from_header(&doc.field, doc.num_vars, doc.vars.clone())?;
    let f = ctx.parse(&doc.f)?;
    let decomposition = match &doc.decomposition {
        None => None,
        Some(s) => {
            let parse_all = |v: &[String]| v.iter().map(|t| ctx.parse(t)).collect::<Result<Vec<_>>>();
            let d = StrengthDecomposition::new(parse_all(&s.gs)?, parse_all(&s.hs)?)?;
            if d.f() != &f {
                return Err(Error::Document(format!(
                    "entry '{}': summands do not add up to f",
                    doc.name
                )));
            }
            Some(d)
        }
    };
    Ok(CatalogEntry {
        name: doc.name.clone(),
        vars: ctx.vars,
        f,
        decomposition,
        mf: None,
        provenance: doc.provenance.clone(),
    })
}

fn bound_json(b: StrengthBound) -> serde_json::Value {
    match b {
        StrengthBound::Finite(v) => v.into(),
        StrengthBound::Infinite => "inf".into(),
    }
}

/// Exact strength when `f` is a quadric outside characteristic 2.
fn exact_quadric_strength(f: &Polynomial) -> Option<i64> {
    if f.homogeneous_degree() == Some(2) && f.field().characteristic() != 2 {
        quadric_strength(f).ok().map(i64::from)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub f: String,
    pub degree: u32,
    pub jacobian_codim: usize,
    pub sing_codim: usize,
    pub e: i64,
    pub strength_lower: i64,
    pub strength_upper: Option<i64>,
    pub bgs_mf_threshold: u64,
    pub bgs_mcm_threshold: u64,
}

impl AnalysisReport {
    /// `upper` is an exhibited strength upper bound, if any. For quadrics
    /// the exact strength tightens both ends.
    pub fn new(p: &SingularityProfile, vars: &VarNames, upper: Option<i64>) -> Self {
        let exact = exact_quadric_strength(&p.f);
        let upper = match (upper, exact) {
            (Some(u), Some(x)) => Some(u.min(x)),
            (u, x) => u.or(x),
        };
        AnalysisReport {
            f: vars.format(&p.f),
            degree: p.degree,
            jacobian_codim: p.jacobian_codim,
            sing_codim: p.sing_codim,
            e: p.e,
            strength_lower: exact.unwrap_or(p.strength_lower).max(p.strength_lower),
            strength_upper: upper,
            bgs_mf_threshold: p.mf_threshold(),
            bgs_mcm_threshold: p.mcm_threshold(),
        }
    }
}

pub fn certificate_json(c: &StrengthCertificate, vars: &VarNames) -> serde_json::Value {
    let block = |b: &BlockCertificate| {
        serde_json::json!({
            "degree": b.degree,
            "size": b.size,
            "minors_codim": b.minors_codim,
            "bound": bound_json(b.bound),
        })
    };
    serde_json::json!({
        "polys": c.polys.iter().map(|p| vars.format(p)).collect::<Vec<_>>(),
        "blocks": c.blocks.iter().map(block).collect::<Vec<_>>(),
        "minors_codim": c.minors_codim,
        "certified_collective_lower": bound_json(c.certified_collective_lower),
    })
}

pub fn verification_json(r: &VerificationReport, vars: &VarNames) -> serde_json::Value {
    let witness = r.witness.as_ref().map(|w| match w {
        Violation::Product {
            side,
            row,
            col,
            expected,
            actual,
        } => serde_json::json!({
            "kind": "product",
            "side": side.name(),
            "row": row,
            "col": col,
            "expected": vars.format(expected),
            "actual": vars.format(actual),
        }),
        Violation::Twists { detail } => serde_json::json!({ "kind": "twists", "detail": detail }),
        Violation::Grading { side, violation } => serde_json::json!({
            "kind": "grading",
            "side": side.name(),
            "row": violation.row,
            "col": violation.col,
            "expected_degree": violation.expected_degree,
            "actual_degree": violation.actual_degree,
        }),
        Violation::Unit {
            side,
            row,
            col,
            entry,
        } => serde_json::json!({
            "kind": "unit",
            "side": side.name(),
            "row": row,
            "col": col,
            "entry": vars.format(entry),
        }),
    });
    serde_json::json!({
        "passed": r.passed(),
        "products_ok": r.products_ok,
        "graded_ok": r.graded_ok,
        "reduced_ok": r.reduced_ok,
        "witness": witness,
    })
}

pub fn mcm_rank_json(r: u32, c: &Scalar) -> serde_json::Value {
    serde_json::json!({ "r": r, "c": c.to_string() })
}

/// Rank bounds exhibited by a decomposition next to the thresholds `2^(e+1)`
/// and `2^e` forced by the singular locus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BgsReport {
    pub f: String,
    pub s_exhibited: usize,
    pub e: i64,
    pub strength_lower: i64,
    pub strength_upper: i64,
    pub mf_rank_upper: u64,
    pub mcm_rank_upper: u64,
    pub bgs_mf_threshold: u64,
    pub bgs_mcm_threshold: u64,
    /// `s >= e + 1`.
    pub gap_holds: bool,
    /// Both thresholds are at most the matching upper bounds.
    pub consistent: bool,
}

pub fn bgs_report(d: &StrengthDecomposition, vars: &VarNames) -> Result<BgsReport> {
    if d.f().is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = singularity_profile(d.f())?;
    let s = d.s();
    let exact = exact_quadric_strength(d.f());
    let mf_rank_upper = pow2_ceil(s as i64);
    let mcm_rank_upper = pow2_ceil(s as i64 - 1);
    Ok(BgsReport {
        f: vars.format(d.f()),
        s_exhibited: s,
        e: p.e,
        strength_lower: exact.unwrap_or(p.strength_lower).max(p.strength_lower),
        strength_upper: exact.map_or(s as i64, |x| x.min(s as i64)),
        mf_rank_upper,
        mcm_rank_upper,
        bgs_mf_threshold: p.mf_threshold(),
        bgs_mcm_threshold: p.mcm_threshold(),
        gap_holds: s as i64 >= p.e + 1,
        consistent: p.mf_threshold() <= mf_rank_upper && p.mcm_threshold() <= mcm_rank_upper,
    })
}
