//! Command-line surface: construct, verify, axiom-check, normalize,
//! teleport, fingerprint, and the order-6 reproduction, with JSON in/out.
//!
//! Exit codes: 0 when all requested checks pass, 1 when a verification
//! fails, 2 for usage errors (unknown options, unreadable or invalid input).

pub mod json;

use std::fs;
use std::io::{Read, Write};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use ueb_core::d6;
use ueb_core::hadamard::{butson_c6, fourier_matrix, HadamardFamily};
use ueb_core::linalg::{ComplexMatrix, Scalar, Tolerance};
use ueb_core::quasigroup::{GroupSpec, LatinSquare};
use ueb_core::structures::{
    check_bialgebra, check_duality, check_frobenius_law, check_ls_unitarity, ls_structure,
    ClassicalStructure,
};
use ueb_core::teleport::teleport_all_outcomes;
use ueb_core::ueb::{
    fingerprint, generalized_shift_multiply, minimal_shift_multiply, mub_basis, normalize_d2,
    pauli_basis, shift_multiply, verify, ErrorBasis, TransformStep,
};

use json::{BasisJson, FamilyJson, LatinJson, VerifyJson};

/// The two reference-table cells the order-6 reproduction is expected to
/// flag; see the crate documentation of `ueb_core::d6`.
pub const D6_EXPECTED_FLAGGED: [(usize, usize); 2] = [(4, 5), (5, 4)];

#[derive(Debug, Parser)]
#[command(
    name = "ueb",
    version,
    about = "Construct and verify unitary error bases"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct an error basis and print it as JSON.
    Construct {
        /// One of: pauli, sm, minimal, mub, gsm.
        #[arg(long)]
        kind: String,
        /// Phase for the pauli kind.
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Abelian group spec such as Z6 or Z2xZ3 (minimal, mub).
        #[arg(long)]
        group: Option<String>,
        /// Latin square: `d6`, `group:<spec>`, a file path, or inline JSON (sm, gsm).
        #[arg(long)]
        latin: Option<String>,
        /// Hadamard family: `fourier:<spec>`, `c6`, or `file:<path>` (sm, gsm).
        #[arg(long)]
        hadamard: Option<String>,
        /// Twist index for the gsm kind.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Write the basis JSON here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Verify an error basis read from a file, inline JSON, or stdin.
    Verify {
        /// Basis source; `-` or absent reads stdin. Builtin kinds accepted.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Check the structure axioms of a latin square.
    Axioms {
        /// Latin square: `d6`, `group:<spec>`, a file path, or inline JSON.
        #[arg(long)]
        latin: String,
        /// One of: frobenius, bialgebra, duality, unitality, unitarity, all.
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Rebuild the order-6 generalised instance, print its table, compare it
    /// with the reference rendering, and verify the resulting basis.
    ReproD6,
    /// Normalize a dimension-2 basis to the canonical quadruple.
    NormalizeD2 {
        #[arg(long)]
        basis: String,
    },
    /// Teleport seeded random states using a verified basis as corrections.
    Teleport {
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 100)]
        states: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print the equivalence-invariant fingerprint of a basis.
    Fingerprint {
        #[arg(long)]
        basis: String,
    },
}

/// Formats a real to 12 significant digits, keeping epsilon-level
/// differences visible.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn fmt_complex(z: Scalar) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", sig12(z.re), sign, sig12(z.im.abs()))
}

/// Deterministic normalized random column states.
pub fn random_states(dim: usize, count: usize, seed: u64) -> Vec<ComplexMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gaussian = move || {
        // Box–Muller from two uniforms.
        let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
        let u2: f64 = rng.gen();
        (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
    };
    (0..count)
        .map(|_| loop {
            let raw: Vec<Scalar> = (0..dim)
                .map(|_| Scalar::new(gaussian(), gaussian()))
                .collect();
            let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-6 {
                let entries = raw
                    .into_iter()
                    .map(|z| z / Scalar::new(norm, 0.0))
                    .collect();
                break ComplexMatrix::new(dim, 1, entries).expect("finite entries");
            }
        })
        .collect()
}

fn read_source(spec: &str) -> Result<String> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else if spec.trim_start().starts_with('{') {
        Ok(spec.to_string())
    } else {
        fs::read_to_string(spec).with_context(|| format!("reading {spec}"))
    }
}

/// Resolves a basis argument: builtin kinds (`pauli[:theta]`,
/// `minimal:<group>`, `mub:<group>`, `sm:d6`, `gsm:d6`), inline JSON, `-`
/// for stdin, or a file path.
pub fn resolve_basis(spec: &str) -> Result<ErrorBasis> {
    if let Some(rest) = spec.strip_prefix("pauli") {
        let theta = match rest.strip_prefix(':') {
            Some(t) => t.parse::<f64>().context("pauli phase")?,
            None if rest.is_empty() => 0.0,
            _ => bail!("unknown basis kind {spec:?}"),
        };
        return Ok(pauli_basis(theta));
    }
    if let Some(g) = spec.strip_prefix("minimal:") {
        return Ok(minimal_shift_multiply(&parse_group(g)?));
    }
    if let Some(g) = spec.strip_prefix("mub:") {
        return Ok(mub_basis(&parse_group(g)?));
    }
    if spec == "sm:d6" {
        return shift_multiply(&d6::latin_square(), &d6::family()).map_err(|e| anyhow!("{e}"));
    }
    if spec == "gsm:d6" {
        return generalized_shift_multiply(&d6::latin_square(), &d6::family(), 0)
            .map_err(|e| anyhow!("{e}"));
    }
    let text = read_source(spec)?;
    let parsed: BasisJson = serde_json::from_str(&text).context("parsing basis JSON")?;
    parsed.to_basis()
}

fn parse_group(spec: &str) -> Result<GroupSpec> {
    spec.parse::<GroupSpec>().map_err(|e| anyhow!("{e}"))
}

fn resolve_latin(spec: &str) -> Result<LatinSquare> {
    if spec == "d6" {
        return Ok(d6::latin_square());
    }
    if let Some(g) = spec.strip_prefix("group:") {
        return Ok(LatinSquare::cayley_table(&parse_group(g)?));
    }
    let text = read_source(spec)?;
    let parsed: LatinJson = serde_json::from_str(&text).context("parsing latin square JSON")?;
    parsed.to_square()
}

fn resolve_family(spec: &str, order: usize, tol: Tolerance) -> Result<HadamardFamily> {
    if let Some(g) = spec.strip_prefix("fourier:") {
        let g = parse_group(g)?;
        if g.order() != order {
            bail!(
                "family order {} does not match latin square order {order}",
                g.order()
            );
        }
        return Ok(HadamardFamily::uniform(fourier_matrix(&g)));
    }
    if spec == "c6" {
        if order != 6 {
            bail!("the c6 family has order 6, latin square has order {order}");
        }
        return Ok(HadamardFamily::uniform(butson_c6()));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        let parsed: FamilyJson = serde_json::from_str(&text).context("parsing family JSON")?;
        let fam = parsed.to_family(tol)?;
        if fam.order() != order {
            bail!(
                "family order {} does not match latin square order {order}",
                fam.order()
            );
        }
        return Ok(fam);
    }
    bail!("hadamard spec must be fourier:<group>, c6, or file:<path>")
}

/// Parses arguments and runs; returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out),
        Err(e) => {
            // Help and version are successful exits.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

/// Runs a parsed invocation; returns the process exit code.
pub fn run(cli: Cli, out: &mut impl Write) -> i32 {
    let json_mode = cli.json;
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            if json_mode {
                let _ = writeln!(
                    std::io::stderr(),
                    "{}",
                    serde_json::json!({ "error": format!("{e:#}") })
                );
            } else {
                let _ = writeln!(std::io::stderr(), "error: {e:#}");
            }
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<i32> {
    let tol = Tolerance::default();
    match cli.command {
        Command::Construct {
            kind,
            theta,
            group,
            latin,
            hadamard,
            k,
            out: out_path,
        } => {
            let basis = match kind.as_str() {
                "pauli" => pauli_basis(theta),
                "minimal" | "mub" => {
                    let g = parse_group(group.as_deref().context("--group is required")?)?;
                    if kind == "minimal" {
                        minimal_shift_multiply(&g)
                    } else {
                        mub_basis(&g)
                    }
                }
                "sm" | "gsm" => {
                    let square = resolve_latin(latin.as_deref().context("--latin is required")?)?;
                    let fam = resolve_family(
                        hadamard.as_deref().context("--hadamard is required")?,
                        square.order(),
                        tol,
                    )?;
                    if kind == "sm" {
                        shift_multiply(&square, &fam).map_err(|e| anyhow!("{e}"))?
                    } else {
                        generalized_shift_multiply(&square, &fam, k).map_err(|e| anyhow!("{e}"))?
                    }
                }
                other => bail!("unknown kind {other:?}"),
            };
            let text = serde_json::to_string(&BasisJson::from_basis(&basis))?;
            match out_path {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {path}"))?,
                None => writeln!(out, "{text}")?,
            }
            Ok(0)
        }

        Command::Verify { basis } => {
            let basis = resolve_basis(basis.as_deref().unwrap_or("-"))?;
            let report = verify(&basis, tol);
            let payload = VerifyJson {
                verb: "verify".into(),
                dim: basis.dim(),
                all_unitary: report.all_unitary,
                max_unitarity_defect: report.max_unitarity_defect,
                max_orthogonality_defect: report.max_orthogonality_defect,
                is_ueb: report.is_ueb,
            };
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                writeln!(out, "dim:                      {}", payload.dim)?;
                writeln!(out, "all unitary:              {}", payload.all_unitary)?;
                writeln!(
                    out,
                    "max unitarity defect:     {}",
                    sig12(payload.max_unitarity_defect)
                )?;
                writeln!(
                    out,
                    "max orthogonality defect: {}",
                    sig12(payload.max_orthogonality_defect)
                )?;
                writeln!(out, "is ueb:                   {}", payload.is_ueb)?;
            }
            Ok(if report.is_ueb { 0 } else { 1 })
        }

        Command::Axioms { latin, check } => {
            let square = resolve_latin(&latin)?;
            let (square, normalized) = if square.is_loop_at_zero() {
                (square, false)
            } else {
                (square.normalize_to_loop().0, true)
            };
            let s = ls_structure(&square).map_err(|e| anyhow!("{e}"))?;
            let black = ClassicalStructure::standard(square.order());
            let id = ComplexMatrix::identity(square.order());

            let mut checks: Vec<(&str, bool)> = Vec::new();
            let want = |name: &str| check == "all" || check == name;
            if want("frobenius") {
                checks.push((
                    "frobenius",
                    check_frobenius_law(s.mult(), s.comult(), tol).map_err(|e| anyhow!("{e}"))?,
                ));
            }
            if want("bialgebra") {
                checks.push((
                    "bialgebra",
                    check_bialgebra(s.mult(), Some(s.unit()), &black, tol)
                        .map_err(|e| anyhow!("{e}"))?,
                ));
            }
            if want("duality") {
                checks.push((
                    "duality",
                    check_duality(s.mult(), &black, tol).map_err(|e| anyhow!("{e}"))?,
                ));
            }
            if want("unitality") {
                let left = s.mult().matmul(&s.unit().kron(&id))?.approx_eq(&id, tol);
                let right = s.mult().matmul(&id.kron(s.unit()))?.approx_eq(&id, tol);
                checks.push(("unitality", left && right));
            }
            if want("unitarity") {
                let (u1, u2) =
                    check_ls_unitarity(s.mult(), &black, tol).map_err(|e| anyhow!("{e}"))?;
                checks.push(("unitarity", u1 && u2));
            }
            if checks.is_empty() {
                bail!("unknown check {check:?}");
            }

            if cli.json {
                let payload = serde_json::json!({
                    "verb": "axioms",
                    "order": square.order(),
                    "loop_normalized": normalized,
                    "associative": square.is_associative(),
                    "checks": checks.iter().cloned().collect::<std::collections::BTreeMap<_,_>>(),
                });
                writeln!(out, "{payload}")?;
            } else {
                writeln!(out, "order:       {}", square.order())?;
                writeln!(out, "normalized:  {normalized}")?;
                writeln!(out, "associative: {}", square.is_associative())?;
                for (name, ok) in &checks {
                    writeln!(out, "{name}: {ok}")?;
                }
            }
            Ok(if checks.iter().all(|(_, ok)| *ok) {
                0
            } else {
                1
            })
        }

        Command::ReproD6 => {
            let report = d6::build_report(tol).map_err(|e| anyhow!("{e}"))?;
            let symbols = ['a', 'b', 'c', 'd', 'e', 'f'];
            let flagged_ok = report.flagged == D6_EXPECTED_FLAGGED;
            let healthy = report.all_symbols_match
                && flagged_ok
                && report.basis_report.is_ueb
                && report.max_twist_offdiagonal <= tol.eps()
                && report.max_twist_unitarity_defect <= tol.eps()
                && report.max_twist_cross_deviation <= tol.eps();

            if cli.json {
                #[derive(Serialize)]
                struct CellJson {
                    row: usize,
                    col: usize,
                    symbol: char,
                    computed: [f64; 2],
                    reference: [f64; 2],
                    reference_bulk_scaled: bool,
                    deviation: f64,
                    flagged: bool,
                }
                let cells: Vec<CellJson> = report
                    .cells
                    .iter()
                    .map(|c| CellJson {
                        row: c.row,
                        col: c.col,
                        symbol: symbols[c.symbol],
                        computed: [c.computed.re, c.computed.im],
                        reference: [c.reference.re, c.reference.im],
                        reference_bulk_scaled: c.reference_bulk_scaled,
                        deviation: c.deviation,
                        flagged: c.flagged,
                    })
                    .collect();
                let payload = serde_json::json!({
                    "verb": "repro-d6",
                    "all_symbols_match": report.all_symbols_match,
                    "bulk_factor": [report.bulk_factor.re, report.bulk_factor.im],
                    "flagged": report.flagged,
                    "is_ueb": report.basis_report.is_ueb,
                    "max_unitarity_defect": report.basis_report.max_unitarity_defect,
                    "max_orthogonality_defect": report.basis_report.max_orthogonality_defect,
                    "max_twist_offdiagonal": report.max_twist_offdiagonal,
                    "max_twist_unitarity_defect": report.max_twist_unitarity_defect,
                    "max_twist_cross_deviation": report.max_twist_cross_deviation,
                    "healthy": healthy,
                    "cells": cells,
                });
                writeln!(out, "{payload}")?;
            } else {
                writeln!(out, "generalised order-6 table (symbol, coefficient):")?;
                for r in 0..6 {
                    for c in 0..6 {
                        let cell = &report.cells[r * 6 + c];
                        let mark = if cell.flagged { " FLAG" } else { "" };
                        writeln!(
                            out,
                            "  ({r},{c}) {}  computed {}  reference {}  dev {}{mark}",
                            symbols[cell.symbol],
                            fmt_complex(cell.computed),
                            fmt_complex(cell.reference),
                            sig12(cell.deviation),
                        )?;
                    }
                }
                writeln!(
                    out,
                    "symbols match:            {}",
                    report.all_symbols_match
                )?;
                writeln!(
                    out,
                    "bulk scale factor:        {} (construction -> reference)",
                    fmt_complex(report.bulk_factor)
                )?;
                writeln!(out, "flagged cells:            {:?}", report.flagged)?;
                writeln!(
                    out,
                    "basis is ueb:             {}",
                    report.basis_report.is_ueb
                )?;
                writeln!(
                    out,
                    "max orthogonality defect: {}",
                    sig12(report.basis_report.max_orthogonality_defect)
                )?;
                writeln!(
                    out,
                    "twist offdiag/unitarity:  {} / {}",
                    sig12(report.max_twist_offdiagonal),
                    sig12(report.max_twist_unitarity_defect)
                )?;
                writeln!(out, "healthy:                  {healthy}")?;
            }
            Ok(if healthy { 0 } else { 1 })
        }

        Command::NormalizeD2 { basis } => {
            let basis = resolve_basis(&basis)?;
            match normalize_d2(&basis, tol) {
                Ok((canonical, steps)) => {
                    if cli.json {
                        let payload = serde_json::json!({
                            "verb": "normalize-d2",
                            "elements": BasisJson::from_basis(&canonical).elements,
                            "steps": steps.iter().map(step_name).collect::<Vec<_>>(),
                        });
                        writeln!(out, "{payload}")?;
                    } else {
                        writeln!(out, "canonical quadruple:")?;
                        for (idx, e) in canonical.elements().iter().enumerate() {
                            writeln!(
                                out,
                                "  [{idx}] [{} {} ; {} {}]",
                                fmt_complex(e.get(0, 0)),
                                fmt_complex(e.get(0, 1)),
                                fmt_complex(e.get(1, 0)),
                                fmt_complex(e.get(1, 1)),
                            )?;
                        }
                        writeln!(out, "transcript ({} steps):", steps.len())?;
                        for s in &steps {
                            writeln!(out, "  {}", step_name(s))?;
                        }
                    }
                    Ok(0)
                }
                Err(ueb_core::Error::NotUeb) => {
                    writeln!(out, "input does not verify as a unitary error basis")?;
                    Ok(1)
                }
                Err(e) => Err(anyhow!("{e}")),
            }
        }

        Command::Teleport {
            basis,
            states,
            seed,
        } => {
            let basis = resolve_basis(&basis)?;
            let d = basis.dim();
            if !verify(&basis, tol).is_ueb {
                writeln!(out, "basis does not verify as a unitary error basis")?;
                return Ok(1);
            }
            let inputs = random_states(d, states.max(1), seed);
            let mut max_fid_dev: f64 = 0.0;
            let mut max_prob_dev: f64 = 0.0;
            let mut first: Vec<(usize, usize, f64, f64)> = Vec::new();
            for (n, state) in inputs.iter().enumerate() {
                let traces =
                    teleport_all_outcomes(&basis, state, tol).map_err(|e| anyhow!("{e}"))?;
                let total: f64 = traces.iter().map(|t| t.outcome_probability).sum();
                max_prob_dev = max_prob_dev.max((total - 1.0).abs());
                for t in &traces {
                    max_fid_dev = max_fid_dev.max((t.fidelity - 1.0).abs());
                    if n == 0 {
                        first.push((t.outcome.0, t.outcome.1, t.outcome_probability, t.fidelity));
                    }
                }
            }
            let pass = max_fid_dev <= tol.eps() && max_prob_dev <= tol.eps();
            if cli.json {
                let payload = serde_json::json!({
                    "verb": "teleport",
                    "dim": d,
                    "states": inputs.len(),
                    "seed": seed,
                    "max_fidelity_deviation": max_fid_dev,
                    "max_probability_deviation": max_prob_dev,
                    "pass": pass,
                });
                writeln!(out, "{payload}")?;
            } else {
                writeln!(out, "outcomes for the first state:")?;
                for (i, j, p, f) in &first {
                    writeln!(
                        out,
                        "  ({i},{j})  probability {}  fidelity {}",
                        sig12(*p),
                        sig12(*f)
                    )?;
                }
                writeln!(out, "states:                    {}", inputs.len())?;
                writeln!(out, "max fidelity deviation:    {}", sig12(max_fid_dev))?;
                writeln!(out, "max probability deviation: {}", sig12(max_prob_dev))?;
                writeln!(out, "pass:                      {pass}")?;
            }
            Ok(if pass { 0 } else { 1 })
        }

        Command::Fingerprint { basis } => {
            let basis = resolve_basis(&basis)?;
            let values = fingerprint(&basis);
            if cli.json {
                let payload = serde_json::json!({
                    "verb": "fingerprint",
                    "dim": basis.dim(),
                    "values": values,
                });
                writeln!(out, "{payload}")?;
            } else {
                // Cluster within tolerance for readability.
                writeln!(out, "dim:    {}", basis.dim())?;
                writeln!(out, "values: {}", values.len())?;
                let mut idx = 0;
                while idx < values.len() {
                    let v = values[idx];
                    let mut count = 1;
                    while idx + count < values.len() && (values[idx + count] - v).abs() < 1e-9 {
                        count += 1;
                    }
                    writeln!(out, "  {} x{count}", sig12(v))?;
                    idx += count;
                }
            }
            Ok(0)
        }
    }
}

fn step_name(step: &TransformStep) -> String {
    match step {
        TransformStep::LeftMultiply(_) => "left-multiply".into(),
        TransformStep::Conjugate(_) => "conjugate".into(),
        TransformStep::Phase { index, phase } => {
            format!("phase[{index}] {}", fmt_complex(*phase))
        }
    }
}
