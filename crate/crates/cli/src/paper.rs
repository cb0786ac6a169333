//! Checks of the worked examples: the cyclotomic identity, the rank
//! `2(p − 1)` lattice and its cyclic model, and the monomial action tables.

use std::path::PathBuf;

use clap::Subcommand;
use lattice_core::{direct_sum, iso_search, IsoOptions, IsoVerdict};
use paper_models::fixtures::{fixtures_dir, write_all};
use paper_models::{
    case1_lattice, check_table, cyclotomic, cyclotomic_identity, lambda_lattice, rho_matrix, verify_case1_iso, Case,
    PaperError, TableCheck,
};
use serde_json::json;

use crate::error::CliError;
use crate::render::{json, matrix, yes_no};
use crate::{Outcome, EXIT_NO, EXIT_UNKNOWN, EXIT_YES};

#[derive(Debug, Subcommand)]
pub enum PaperCommand {
    /// `Φ_p(T²) = Φ_p(T)·Φ_{2p}(T)`.
    Cyclotomic {
        #[arg(long = "p")]
        p: i64,
    },
    /// The lattice `M` of rank `2(p − 1)` over `⟨σ₃, τ⟩`.
    Case1 {
        #[arg(long = "p")]
        p: i64,
        /// Build and check the intertwiner `Λ → M`.
        #[arg(long)]
        verify_iso: bool,
    },
    /// Isomorphism search for `M ⊕ M ≅ Λ ⊕ Λ`.
    Case3 {
        #[arg(long = "p")]
        p: i64,
    },
    /// Check one transcribed action table.
    Table {
        #[arg(long)]
        case: u8,
        #[arg(long)]
        step: String,
        #[arg(long = "p")]
        p: i64,
    },
    /// Check every transcribed table for the given primes.
    Tables {
        #[arg(long = "p", default_values_t = [3, 5])]
        primes: Vec<i64>,
    },
    /// Write the shipped fixture documents.
    Fixtures {
        /// Target directory (default: the shipped fixture directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub(crate) fn run(cmd: &PaperCommand, jobs: usize, as_json: bool) -> Result<Outcome, CliError> {
    match cmd {
        PaperCommand::Cyclotomic { p } => cyclotomic_cmd(*p, as_json),
        PaperCommand::Case1 { p, verify_iso } => case1_cmd(*p, *verify_iso, as_json),
        PaperCommand::Case3 { p } => case3_cmd(*p, as_json),
        PaperCommand::Table { case, step, p } => {
            let case = Case::from_number(*case).ok_or_else(|| CliError::Usage(format!("no case {case}; expected 1, 2 or 3")))?;
            let check = check_table(case, step, *p)?;
            let code = if check.verified() { EXIT_YES } else { EXIT_NO };
            let out = if as_json { json(&check) } else { describe_check(&check) };
            Ok(Outcome::ok(code, out))
        }
        PaperCommand::Tables { primes } => tables_cmd(primes, jobs, as_json),
        PaperCommand::Fixtures { out } => {
            let dir = out.clone().unwrap_or_else(fixtures_dir);
            let n = write_all(&dir).map_err(|e| CliError::Io { path: dir.display().to_string(), source: e })?;
            Ok(Outcome::ok(EXIT_YES, format!("wrote {n} files to {}\n", dir.display())))
        }
    }
}

fn cyclotomic_cmd(p: i64, as_json: bool) -> Result<Outcome, CliError> {
    let holds = cyclotomic_identity(p)?;
    let n = p as usize;
    let lhs = cyclotomic(n).poly().compose_power(2);
    let rhs = cyclotomic(n).poly().mul(&cyclotomic(2 * n).poly());
    let coeffs = |q: &exact_linalg::IntPoly| q.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
    let out = if as_json {
        json(&json!({"p": p, "holds": holds, "lhs": coeffs(&lhs), "rhs": coeffs(&rhs)}))
    } else {
        format!(
            "Phi_p(T^2) coefficients:         [{}]\nPhi_p(T)*Phi_2p(T) coefficients: [{}]\nidentity holds: {}\n",
            coeffs(&lhs).join(", "),
            coeffs(&rhs).join(", "),
            yes_no(holds)
        )
    };
    Ok(Outcome::ok(if holds { EXIT_YES } else { EXIT_NO }, out))
}

fn case1_cmd(p: i64, verify_iso: bool, as_json: bool) -> Result<Outcome, CliError> {
    let m = case1_lattice(p)?;
    let phi = cyclotomic(p as usize).poly();
    let kills = phi.eval_matrix(&m.action()[0]).is_zero();
    let rho_order = (1..=2 * p as u64).find(|&k| rho_matrix(&m).pow(k).is_identity());
    let iso = if verify_iso {
        Some(match verify_case1_iso(p) {
            Ok(map) => Ok(map.matrix),
            Err(PaperError::IsoCheckFailed(why)) => Err(why),
            Err(e) => return Err(e.into()),
        })
    } else {
        None
    };
    let code = if kills && !matches!(iso, Some(Err(_))) { EXIT_YES } else { EXIT_NO };
    let out = if as_json {
        json(&json!({
            "p": p,
            "rank": m.rank(),
            "phi_p_of_sigma3_is_zero": kills,
            "rho_order": rho_order,
            "intertwiner": iso.as_ref().map(|r| r.as_ref().ok()),
            "iso_error": iso.as_ref().and_then(|r| r.as_ref().err()),
        }))
    } else {
        let mut s = format!("rank: {}\nPhi_p(sigma3) = 0: {}\n", m.rank(), yes_no(kills));
        if let Some(k) = rho_order {
            s.push_str(&format!("order of rho = sigma3*tau: {k}\n"));
        }
        match &iso {
            Some(Ok(x)) => s.push_str(&format!("unimodular intertwiner Lambda -> M:\n{}", matrix(x, 2))),
            Some(Err(why)) => s.push_str(&format!("intertwiner check failed: {why}\n")),
            None => {}
        }
        s
    };
    Ok(Outcome::ok(code, out))
}

fn case3_cmd(p: i64, as_json: bool) -> Result<Outcome, CliError> {
    let m = case1_lattice(p)?;
    let l = lambda_lattice(p)?;
    let mm = direct_sum(&m, &m)?;
    let ll = direct_sum(&l, &l)?;
    let verdict = iso_search(&ll, &mm, &IsoOptions::default());
    let (code, status) = match &verdict {
        IsoVerdict::Isomorphic(_) => (EXIT_YES, "isomorphic".to_string()),
        IsoVerdict::NotIsomorphic(w) => (EXIT_NO, format!("not isomorphic ({w})")),
        IsoVerdict::Unknown => (EXIT_UNKNOWN, "unknown (search bound reached)".to_string()),
    };
    let x = match &verdict {
        IsoVerdict::Isomorphic(x) => Some(x),
        _ => None,
    };
    let out = if as_json {
        json(&json!({"p": p, "rank": mm.rank(), "verdict": status, "intertwiner": x}))
    } else {
        let mut s = format!("rank: {}\nLambda+Lambda vs M+M: {status}\n", mm.rank());
        if let Some(x) = x {
            s.push_str(&format!("intertwiner:\n{}", matrix(x, 2)));
        }
        s
    };
    Ok(Outcome::ok(code, out))
}

fn comparison(r: &Result<Vec<String>, String>) -> String {
    match r {
        Ok(d) if d.is_empty() => "identical".to_string(),
        Ok(d) => format!("{} entries differ: {}", d.len(), d.join("; ")),
        Err(why) => format!("derivation stopped ({why})"),
    }
}

fn describe_check(c: &TableCheck) -> String {
    let mut s = format!("case {} step {} (p = {})\n", c.case, c.step, c.p);
    match &c.relation_failure {
        None => s.push_str("relations: hold\n"),
        Some(f) => s.push_str(&format!("relations: {f}\n")),
    }
    s.push_str(&format!("against the group law: {}\n", comparison(&c.against_group_law)));
    if let Some(prev) = &c.against_previous {
        s.push_str(&format!("against the previous printed table: {}\n", comparison(prev)));
    }
    s
}

fn tables_cmd(primes: &[i64], jobs: usize, as_json: bool) -> Result<Outcome, CliError> {
    let mut tasks = Vec::new();
    for &p in primes {
        for case in Case::ALL {
            for step in case.printed_steps() {
                tasks.push((case, *step, p));
            }
        }
    }
    let jobs = jobs.clamp(1, tasks.len().max(1));
    let chunk = tasks.len().div_ceil(jobs).max(1);
    let results: Vec<Result<TableCheck, PaperError>> = std::thread::scope(|s| {
        let handles: Vec<_> = tasks
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|&(c, st, p)| check_table(c, st, p)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    let checks = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let all = checks.iter().all(TableCheck::verified);
    let out = if as_json {
        json(&checks)
    } else {
        let mut s = String::new();
        for c in &checks {
            s.push_str(&format!(
                "case {} step {:<2} p = {:<2}  relations {}  group law: {}\n",
                c.case,
                c.step,
                c.p,
                if c.verified() { "hold" } else { "FAIL" },
                if c.matches_group_law() { "identical".to_string() } else { short(&c.against_group_law) },
            ));
        }
        s.push_str(&format!("all tables verified: {}\n", yes_no(all)));
        s
    };
    Ok(Outcome::ok(if all { EXIT_YES } else { EXIT_NO }, out))
}

fn short(r: &Result<Vec<String>, String>) -> String {
    match r {
        Ok(d) => format!("{} entries differ", d.len()),
        Err(_) => "derivation stopped".to_string(),
    }
}
