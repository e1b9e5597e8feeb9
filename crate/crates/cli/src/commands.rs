use std::fmt;
use std::io::{Read, Write};

use mfkit_core::catalog::{self, CatalogEntry, DEFAULT_SEED};
use mfkit_core::io::{
    bgs_report, catalog_to_doc, certificate_json, decomposition_from_doc, mcm_rank_json, mf_from_doc,
    mf_to_doc, verification_json, AnalysisReport, DecompositionDoc, MfDoc,
};
use mfkit_core::mf::{knorrer_build, mcm_rank_of, search_reduced_mf, SearchPattern};
use mfkit_core::strength::{collective_strength_certificate, singularity_profile};
use mfkit_core::{Field, Polynomial, VarNames};
use serde::Serialize;

use crate::{CatalogCommand, Command, MfCommand, RingArgs, StrengthCommand};

pub const SEED_VAR: &str = "MFKIT_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    Verification,
    Usage,
    Resource,
}

#[derive(Debug)]
pub struct CliError {
    kind: Failure,
    message: String,
}

impl CliError {
    fn new(kind: Failure, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            Failure::Verification => 1,
            Failure::Usage => 2,
            Failure::Resource => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<mfkit_core::Error> for CliError {
    fn from(e: mfkit_core::Error) -> Self {
        use mfkit_core::Error::*;
        let kind = match e {
            RankCap { .. } | SearchBudget { .. } | ResampleExhausted { .. } => Failure::Resource,
            NotPowerOfF => Failure::Verification,
            _ => Failure::Usage,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::new(Failure::Usage, format!("invalid JSON: {e}"))
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::new(Failure::Usage, format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new(Failure::Usage, format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn write_json<T: Serialize>(value: &T, out: Option<&str>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        None | Some("-") => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::new(Failure::Usage, format!("writing stdout: {e}")))
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::new(Failure::Usage, format!("writing {path}: {e}"))),
    }
}

fn parse_field(s: &str) -> Result<Field> {
    Ok(s.parse::<Field>()?)
}

/// Parses polynomial texts in a common ring.
fn parse_polys(texts: &[String], field: Field, vars: Option<&[String]>) -> Result<(Vec<Polynomial>, VarNames)> {
    let names = match vars {
        Some(v) => VarNames::new(v.iter().map(|s| s.trim().to_string()))?,
        None => VarNames::infer(texts.iter().map(String::as_str)),
    };
    if names.is_empty() {
        return Err(CliError::new(Failure::Usage, "input has no variables"));
    }
    let polys = texts
        .iter()
        .map(|t| names.parse(t, field))
        .collect::<mfkit_core::Result<Vec<_>>>()?;
    Ok((polys, names))
}

fn ring_polys(files: &[String], ring: &RingArgs) -> Result<(Vec<Polynomial>, VarNames)> {
    let texts = files.iter().map(|f| read_input(f)).collect::<Result<Vec<_>>>()?;
    parse_polys(&texts, parse_field(&ring.field)?, ring.vars.as_deref())
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Mf(c) => run_mf(c),
        Command::Analyze { poly_file, ring } => {
            let (polys, vars) = ring_polys(&[poly_file], &ring)?;
            let profile = singularity_profile(&polys[0])?;
            let report = AnalysisReport::new(&profile, &vars, None);
            eprintln!(
                "degree {}, singular locus of codimension {}, e = {}, strength >= {}",
                report.degree, report.sing_codim, report.e, report.strength_lower
            );
            write_json(&report, None)
        }
        Command::Strength(StrengthCommand::Cert { poly_files, ring }) => {
            let (polys, vars) = ring_polys(&poly_files, &ring)?;
            let cert = collective_strength_certificate(&polys)?;
            eprintln!(
                "collective strength of {} form(s) >= {}",
                polys.len(),
                cert.certified_collective_lower
            );
            write_json(&certificate_json(&cert, &vars), None)
        }
        Command::BgsCheck { decomp } => {
            let doc: DecompositionDoc = serde_json::from_str(&read_input(&decomp)?)?;
            let (d, vars) = decomposition_from_doc(&doc)?;
            let report = bgs_report(&d, &vars)?;
            write_json(&report, None)?;
            eprintln!(
                "s = {}, e = {}: rank bounds {}/{} against thresholds {}/{}",
                report.s_exhibited,
                report.e,
                report.mf_rank_upper,
                report.mcm_rank_upper,
                report.bgs_mf_threshold,
                report.bgs_mcm_threshold
            );
            if report.consistent {
                Ok(())
            } else {
                Err(CliError::new(
                    Failure::Verification,
                    "thresholds exceed the exhibited rank bounds",
                ))
            }
        }
        Command::Catalog(c) => run_catalog(c),
        Command::Search {
            field,
            rank,
            pattern,
            poly_file,
            vars,
        } => {
            let field = parse_field(&field)?;
            let pattern: SearchPattern = pattern.parse()?;
            let text = read_input(&poly_file)?;
            let (polys, names) = parse_polys(&[text], field, vars.as_deref())?;
            match search_reduced_mf(&polys[0], rank, &pattern)? {
                Some(mf) => {
                    eprintln!("found a reduced rank {rank} factorization");
                    write_json(
                        &serde_json::json!({
                            "found": true,
                            "exhaustive": true,
                            "mf": mf_to_doc(&mf, &names),
                        }),
                        None,
                    )
                }
                None => {
                    eprintln!("none (exhaustive)");
                    write_json(
                        &serde_json::json!({
                            "found": false,
                            "exhaustive": true,
                            "result": "none (exhaustive)",
                        }),
                        None,
                    )
                }
            }
        }
    }
}

fn run_mf(command: MfCommand) -> Result<()> {
    match command {
        MfCommand::Build { decomp, out } => {
            let doc: DecompositionDoc = serde_json::from_str(&read_input(&decomp)?)?;
            let (d, vars) = decomposition_from_doc(&doc)?;
            let mf = knorrer_build(&d)?;
            let report = mf.verify();
            write_json(&mf_to_doc(&mf, &vars), out.as_deref())?;
            if report.passed() {
                eprintln!("rank {} factorization built and verified", mf.rank());
                Ok(())
            } else {
                eprintln!("{}", verification_json(&report, &vars));
                Err(CliError::new(Failure::Verification, "built factorization failed verification"))
            }
        }
        MfCommand::Verify { mf } => {
            let doc: MfDoc = serde_json::from_str(&read_input(&mf)?)?;
            let (mf, vars) = mf_from_doc(&doc)?;
            let report = mf.verify();
            write_json(&verification_json(&report, &vars), None)?;
            if report.passed() {
                eprintln!("rank {} factorization verified", mf.rank());
                Ok(())
            } else {
                Err(CliError::new(Failure::Verification, "verification failed"))
            }
        }
        MfCommand::McmRank { mf } => {
            let doc: MfDoc = serde_json::from_str(&read_input(&mf)?)?;
            let (mf, _) = mf_from_doc(&doc)?;
            let (r, c) = mcm_rank_of(&mf)?;
            eprintln!("det(phi) = {c} * f^{r}");
            write_json(&mcm_rank_json(r, &c), None)
        }
    }
}

/// Seed precedence: `--seed`, then `MFKIT_SEED`, then the built-in default.
fn sampler_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::new(Failure::Usage, format!("{SEED_VAR}={v} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn run_catalog(command: CatalogCommand) -> Result<()> {
    let entry: CatalogEntry = match command {
        CatalogCommand::Quadric { s } => catalog::quadric_entry(s),
        CatalogCommand::PowerSum { d, n } => catalog::power_sum_entry(d, n)?,
        CatalogCommand::DisjointBlocks { d, s, n } => catalog::disjoint_blocks_entry(d, s, n)?,
        CatalogCommand::GenericDet { n } => catalog::generic_matrix_det(n)?,
        CatalogCommand::Pfaffian { n } => catalog::pfaffian_entry(n)?,
        CatalogCommand::MixedType => catalog::mixed_type_entry(),
        CatalogCommand::PowerSumProducts { n } => catalog::power_sum_products(n)?,
        CatalogCommand::Sample {
            mu,
            d,
            n,
            seed,
            field,
            terms,
        } => catalog::sample_entry(&mu, d, n, sampler_seed(seed)?, parse_field(&field)?, terms)?,
        CatalogCommand::All => {
            let docs: Vec<_> = catalog::standard_catalog()?.iter().map(catalog_to_doc).collect();
            eprintln!("{} entries", docs.len());
            return write_json(&docs, None);
        }
    };
    eprintln!("{}: {}", entry.name, entry.provenance);
    write_json(&catalog_to_doc(&entry), None)
}
