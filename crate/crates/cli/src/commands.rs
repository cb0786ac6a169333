use cohomology::{classify_jobs, element_name, flabby_witness, CohomologyReport, SubgroupEntry};
use flabby::{
    check_exactness, flabby_resolution, minimal_flabby_resolution, permutation_certificate, rho_invertible_with,
    Invertibility, PermutationVerdict, ResolutionDoc, RhoDoc, RhoOptions,
};
use group_core::{GroupDoc, Subgroup};
use lattice_core::{GroupRef, Lattice, LatticeDoc};
use monomial_action::{exponent_lattice, Verification};
use paper_models::reiner_decompose;
use serde_json::json;

use crate::error::CliError;
use crate::input::{fixture_label, lattice_from, load_action, load_lattice};
use crate::render::{json, matrix, table, yes_no};
use crate::{paper, Cli, Command, LatticeInput, Outcome, EXIT_NO, EXIT_UNKNOWN, EXIT_YES};

pub(crate) fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let jobs = cli.jobs.max(1);
    match &cli.command {
        Command::Cohomology { input, subgroup } => cohomology_cmd(&lattice(input)?, subgroup.as_deref(), jobs, cli.json),
        Command::Classify { input } => classify_cmd(&lattice(input)?, jobs, cli.json),
        Command::Resolve { input, minimal } => resolve_cmd(&lattice(input)?, *minimal, cli.json),
        Command::Rho { input, no_reduce } => rho_cmd(&lattice(input)?, !no_reduce, cli.json),
        Command::Cert { input } => cert_cmd(&lattice(input)?, cli.json),
        Command::Reiner { input } => reiner_cmd(&lattice(input)?, cli.json),
        Command::MonomialVerify { action, exponent_lattice, expect_lattice } => {
            monomial_cmd(action, *exponent_lattice, expect_lattice.as_deref(), cli.json)
        }
        Command::Paper { which } => paper::run(which, jobs, cli.json),
    }
}

fn lattice(input: &LatticeInput) -> Result<Lattice, CliError> {
    lattice_from(input.lattice.as_deref(), input.catalog.as_deref(), &input.params)
}

fn header(m: &Lattice) -> String {
    let g = m.group();
    format!("group of order {} generated by {}; lattice of rank {}\n", g.order(), g.generator_names().join(", "), m.rank())
}

fn cohomology_table(entries: &[SubgroupEntry]) -> String {
    let mut rows = vec![["subgroup", "order", "cyclic", "generators", "H^-1", "H^0", "H^1"].map(String::from).to_vec()];
    for e in entries {
        rows.push(vec![
            e.key.clone(),
            e.order.to_string(),
            yes_no(e.is_cyclic).to_string(),
            if e.generators.is_empty() { "1".to_string() } else { e.generators.join(",") },
            e.hat_minus1.to_string(),
            e.hat0.to_string(),
            e.h1.to_string(),
        ]);
    }
    table(&rows)
}

fn cohomology_cmd(m: &Lattice, subgroup: Option<&str>, jobs: usize, as_json: bool) -> Result<Outcome, CliError> {
    let mut report = classify_jobs(m, jobs)?;
    if let Some(key) = subgroup {
        report.entries.retain(|e| e.key == key);
        if report.entries.is_empty() {
            return Err(CliError::Usage(format!("no subgroup class with key {key:?}")));
        }
    }
    let out = if as_json {
        json(&report.entries)
    } else {
        format!("{}{}", header(m), cohomology_table(&report.entries))
    };
    Ok(Outcome::ok(EXIT_YES, out))
}

fn first_nontrivial(report: &CohomologyReport, pick: fn(&SubgroupEntry) -> String) -> Option<String> {
    report.entries.iter().map(|e| (e, pick(e))).find(|(_, g)| g != "0").map(|(e, g)| format!("{g} on subgroup {}", e.key))
}

fn classify_cmd(m: &Lattice, jobs: usize, as_json: bool) -> Result<Outcome, CliError> {
    let report = classify_jobs(m, jobs)?;
    let code = if report.flabby && report.coflabby { EXIT_YES } else { EXIT_NO };
    let out = if as_json {
        json(&report)
    } else {
        let mut s = format!("{}{}", header(m), cohomology_table(&report.entries));
        match first_nontrivial(&report, |e| e.hat_minus1.to_string()) {
            None => s.push_str("flabby: yes\n"),
            Some(w) => s.push_str(&format!("flabby: no (H^-1 = {w})\n")),
        }
        match first_nontrivial(&report, |e| e.h1.to_string()) {
            None => s.push_str("coflabby: yes\n"),
            Some(w) => s.push_str(&format!("coflabby: no (H^1 = {w})\n")),
        }
        s
    };
    Ok(Outcome::ok(code, out))
}

fn group_ref(m: &Lattice) -> GroupRef {
    GroupRef::Doc(GroupDoc::regular(m.group()))
}

fn resolve_cmd(m: &Lattice, minimal: bool, as_json: bool) -> Result<Outcome, CliError> {
    let r = if minimal { minimal_flabby_resolution(m)? } else { flabby_resolution(m)? };
    let exact = check_exactness(&r);
    let witness = flabby_witness(&r.e)?;
    let code = if exact.is_ok() && witness.is_none() { EXIT_YES } else { EXIT_NO };
    let out = if as_json {
        json(&json!({
            "resolution": ResolutionDoc::new(&r, &group_ref(m)),
            "exact": exact.is_ok(),
            "exactness_error": exact.as_ref().err(),
            "e_flabby": witness.is_none(),
        }))
    } else {
        let g = m.group();
        let mut s = header(m);
        s.push_str(&format!("ranks: M = {}, P = {}, E = {}\n", r.m.rank(), r.p.rank(), r.e.rank()));
        s.push_str("permutation summands of P:\n");
        for summand in &r.summands {
            let h = Subgroup::from_elements(g, summand.subgroup.clone());
            let gens: Vec<String> = h.generators().iter().map(|&x| element_name(g, x)).collect();
            let gens = if gens.is_empty() { "1".to_string() } else { gens.join(",") };
            s.push_str(&format!("  Z[G/H] with H = <{gens}> of order {}\n", h.order()));
        }
        s.push_str(&format!("exact: {}\n", match &exact {
            Ok(()) => "yes".to_string(),
            Err(e) => format!("no ({e})"),
        }));
        s.push_str(&format!("E flabby: {}\n", match &witness {
            None => "yes".to_string(),
            Some((key, grp)) => format!("no (H^-1 = {grp} on subgroup {key})"),
        }));
        for (name, a) in g.generator_names().iter().zip(r.e.action()) {
            s.push_str(&format!("E: {name} =\n{}", matrix(a, 2)));
        }
        s
    };
    Ok(Outcome::ok(code, out))
}

fn verdict_code(v: &Invertibility) -> i32 {
    match v {
        Invertibility::Yes(_) => EXIT_YES,
        Invertibility::No(_) => EXIT_NO,
        Invertibility::Unknown(_) => EXIT_UNKNOWN,
    }
}

fn rho_cmd(m: &Lattice, reduce: bool, as_json: bool) -> Result<Outcome, CliError> {
    let v = rho_invertible_with(m, &RhoOptions { reduce_kernel: reduce, ..Default::default() })?;
    let doc = RhoDoc::new(&v);
    let out = if as_json {
        json(&doc)
    } else {
        let mut s = header(m);
        s.push_str(&format!("acting group order: {}{}\n", doc.acting_order, if doc.reduced { " (kernel divided out)" } else { "" }));
        s.push_str(&format!("flabby lattice E of rank {}\n", doc.rank_e));
        s.push_str(&format!("rho invertible: {}\n", doc.detail));
        s.push_str(&format!("reason: {}\n", doc.reason));
        if let Some(c) = &doc.retract_rational {
            s.push_str(&format!("conclusion: {c}\n"));
        }
        s
    };
    Ok(Outcome::ok(verdict_code(&v.invertible), out))
}

fn cert_cmd(m: &Lattice, as_json: bool) -> Result<Outcome, CliError> {
    let v = permutation_certificate(m)?;
    let (code, value, text) = match &v {
        PermutationVerdict::Basis(b) => {
            (EXIT_YES, json!({"permutation": true, "basis": b}), format!("permutation lattice: yes\nbasis:\n{}", matrix(b, 2)))
        }
        PermutationVerdict::NotPermutation(why) => {
            (EXIT_NO, json!({"permutation": false, "reason": why}), format!("permutation lattice: no ({why})\n"))
        }
        PermutationVerdict::Unknown => {
            (EXIT_UNKNOWN, json!({"permutation": null}), "permutation lattice: unknown (search bound reached)\n".to_string())
        }
    };
    let out = if as_json { json(&value) } else { format!("{}{text}", header(m)) };
    Ok(Outcome::ok(code, out))
}

fn reiner_cmd(m: &Lattice, as_json: bool) -> Result<Outcome, CliError> {
    let d = reiner_decompose(m)?;
    let out = if as_json {
        json(&d)
    } else {
        let c = d.counts;
        format!(
            "{}sign summands: {}\ntrivial summands: {}\nregular summands: {}\nbasis (sign | trivial | regular pairs):\n{}",
            header(m),
            c.a,
            c.b,
            c.c,
            matrix(&d.basis, 2)
        )
    };
    Ok(Outcome::ok(EXIT_YES, out))
}

fn monomial_cmd(
    path: &std::path::Path,
    show_lattice: bool,
    expect: Option<&std::path::Path>,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let (action, check) = load_action(path)?;
    let label = fixture_label(path);
    let mut code = if check.holds() { EXIT_YES } else { EXIT_NO };
    let lattice = if check.holds() && (show_lattice || expect.is_some()) { Some(exponent_lattice(&action)?) } else { None };
    let matches = match (expect, &lattice) {
        (Some(p), Some(l)) => Some(load_lattice(p)? == *l),
        (Some(p), None) => {
            load_lattice(p)?;
            Some(false)
        }
        _ => None,
    };
    if matches == Some(false) {
        code = EXIT_NO;
    }
    let failure = match &check {
        Verification::Holds => None,
        Verification::Fails(f) => Some(f.to_string()),
    };
    let out = if as_json {
        json(&json!({
            "label": label,
            "root_order": action.root_order(),
            "variables": action.nvars(),
            "generators": action.generator_names(),
            "relations": action.relations().len(),
            "purely_monomial": action.is_purely_monomial(),
            "verified": check.holds(),
            "failure": failure,
            "exponent_lattice": lattice.as_ref().filter(|_| show_lattice).map(LatticeDoc::from_lattice),
            "matches_expected_lattice": matches,
        }))
    } else {
        let mut s = String::new();
        if let Some(l) = &label {
            s.push_str(&format!("{l}\n"));
        }
        s.push_str(&format!(
            "{} variables, generators {}, zeta of order {}, {}\n",
            action.nvars(),
            action.generator_names().join(", "),
            action.root_order(),
            if action.is_purely_monomial() { "purely monomial" } else { "monomial" }
        ));
        match &failure {
            None => s.push_str(&format!("relations: all {} hold\n", action.relations().len())),
            Some(f) => s.push_str(&format!("relations: {f}\n")),
        }
        if let (true, Some(l)) = (show_lattice, &lattice) {
            for (name, a) in l.group().generator_names().iter().zip(l.action()) {
                s.push_str(&format!("exponent lattice: {name} =\n{}", matrix(a, 2)));
            }
        }
        if let Some(m) = matches {
            s.push_str(&format!("exponent lattice equals expected lattice: {}\n", yes_no(m)));
        }
        s
    };
    Ok(Outcome::ok(code, out))
}
