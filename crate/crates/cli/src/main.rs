//! `mcgdim`: command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (one JSON line on stderr), 2 usage
//! error.

mod args;

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use mcgdim::criterion::Epsilon;
use mcgdim::groups::lambda_bounds;
use mcgdim::sigio::{ingest_actions_path, render_signature};
use mcgdim::verifiers::{
    deficiency_candidates, min_positive_deficiency, verify_lambda_bounds, verify_lemma_ab,
    GroupFamily,
};
use mcgdim::{
    check_criterion, conclude, enumerate_all, enumerate_signatures, hurwitz_ceiling,
    parse_signature, GroupSpec, IngestError, Mode, OrbifoldSignature, ParseError, Rational,
    Surface,
};
use serde::Serialize;
use serde_json::{json, Value};

use args::{Cli, Command, GroupArgs, SigCommand, SurfaceArgs, VerifyCommand};

/// A failure reported as `{code, message, location?}`.
#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
    location: Option<Value>,
}

impl Failure {
    fn new(code: &'static str, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
            location: None,
        }
    }

    fn at(mut self, location: Value) -> Self {
        self.location = Some(location);
        self
    }

    fn to_json(&self) -> String {
        let mut v = json!({ "code": self.code, "message": self.message });
        if let Some(loc) = &self.location {
            v["location"] = loc.clone();
        }
        v.to_string()
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let location = match &e {
            ParseError::Syntax { offset, .. } => json!({ "offset": offset }),
            ParseError::Semantic { field, .. } => json!({ "field": field }),
        };
        Failure::new("signature_parse", e).at(location)
    }
}

/// What a command produced: a JSON value and its plain-text rendering.
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn new(value: impl Serialize, text: String) -> Self {
        Output {
            // Round-tripping through `Value` sorts object keys.
            json: serde_json::to_value(value).expect("report types serialize"),
            text,
        }
    }
}

type CmdResult = Result<Output, Failure>;

fn surface(args: &SurfaceArgs) -> Result<Surface, Failure> {
    Surface::new(args.kind.into(), args.genus, args.punctures, args.boundary)
        .map_err(|e| Failure::new("surface", e).at(json!({ "field": "genus" })))
}

fn cmd_vcd(args: &SurfaceArgs) -> CmdResult {
    let s = surface(args)?;
    let bounds = s.known_dimension_bounds();
    let text = format!(
        "{s}: vcd = {}\ncd_F, gd_F ∈ [{}, {}]{}\n",
        s.vcd_mcg(),
        bounds.lower,
        bounds.upper,
        if bounds.equal { " (equal)" } else { "" }
    );
    Ok(Output::new(
        json!({ "surface": s.to_string(), "vcd": s.vcd_mcg(), "bounds": bounds }),
        text,
    ))
}

fn cmd_chi(args: &SurfaceArgs) -> CmdResult {
    let s = surface(args)?;
    let chi = s.euler_characteristic();
    Ok(Output::new(
        json!({ "surface": s.to_string(), "euler_characteristic": chi, "hyperbolic": s.is_hyperbolic() }),
        format!("{s}: χ = {chi}\n"),
    ))
}

fn signature_summary(sig: &OrbifoldSignature) -> Value {
    let (e, c) = sig.ef_cf();
    json!({
        "canonical": render_signature(sig),
        "orientable": sig.is_orientable(),
        "genus": sig.genus(),
        "e_F": sig.elliptic_count(),
        "c_F": sig.corner_count(),
        "b_m": sig.mirror_boundaries(),
        "b_c": sig.cornered_boundaries(),
        "E_F": e,
        "C_F": c,
        "chi_underlying": sig.underlying_euler(),
        "chi_orb": sig.orbifold_euler(),
        "inequalities_hold": sig.validate_inequalities(),
    })
}

fn cmd_sig_parse(text: &str, genus: Option<u32>) -> CmdResult {
    let sig = parse_signature(text)?;
    let mut v = signature_summary(&sig);
    let mut out = String::new();
    let _ = writeln!(out, "{sig}");
    for key in [
        "e_F",
        "c_F",
        "b_m",
        "b_c",
        "E_F",
        "C_F",
        "chi_underlying",
        "chi_orb",
    ] {
        let _ = writeln!(out, "  {key:<15}{}", plain(&v[key]));
    }
    if let Some(g) = genus {
        let order = sig.rh_order(g);
        v["rh_order"] = json!(order);
        v["source_genus"] = json!(g);
        let _ = writeln!(
            out,
            "  |F| on N_{g}:   {}",
            order.map_or("not a quotient".to_string(), |o| o.to_string())
        );
    }
    Ok(Output { json: v, text: out })
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn cmd_weyl(text: &str) -> CmdResult {
    let sig = parse_signature(text)?;
    let surface = sig.underlying_surface();
    Ok(Output::new(
        json!({
            "signature": render_signature(&sig),
            "weyl_surface": surface.to_string(),
            "vcd_weyl": sig.vcd_weyl(),
        }),
        format!(
            "{sig}\n  Weyl surface {surface}, vcd(WF) = {}\n",
            sig.vcd_weyl()
        ),
    ))
}

fn group_spec(args: &GroupArgs) -> Result<GroupSpec, Failure> {
    if let Some(n) = args.cyclic {
        return Ok(GroupSpec::Cyclic(n));
    }
    if let Some(n) = args.dihedral {
        return Ok(GroupSpec::Dihedral(n));
    }
    if let Some(d) = args.symmetric {
        return Ok(GroupSpec::Symmetric(d));
    }
    if let Some(gens) = &args.perm {
        return Ok(GroupSpec::Permutations {
            generators: gens.clone(),
            degree: args.degree.expect("clap requires --degree with --perm"),
        });
    }
    let text = args
        .product
        .as_deref()
        .expect("clap requires one group flag");
    text.parse()
        .map_err(|e| Failure::new("group", e).at(json!({ "field": "product" })))
}

fn cmd_lambda(args: &GroupArgs) -> CmdResult {
    let spec = group_spec(args)?;
    let group = spec.build(args.cap).map_err(|e| Failure::new("group", e))?;
    let lattice = group.subgroup_lattice();
    let lambda = lattice.longest_chain();
    let bounds = lambda_bounds(group.order() as u64);
    let text = format!(
        "{spec}: |G| = {}, {} subgroups, λ = {lambda}\n  bounds: Ω = {}, ⌊log₂⌋ = {}, |G|/2 = {}\n",
        group.order(),
        lattice.len(),
        bounds.omega,
        bounds.log2_floor,
        bounds.half
    );
    Ok(Output::new(
        json!({
            "group": spec.to_string(),
            "order": group.order(),
            "subgroups": lattice.len(),
            "lambda": lambda,
            "bounds": bounds,
        }),
        text,
    ))
}

fn cmd_enumerate(genus: u32, order: Option<u64>, max_order: Option<u64>, quiet: bool) -> CmdResult {
    if genus < 3 {
        return Err(Failure::new("genus", format!("genus {genus} is below 3"))
            .at(json!({ "field": "genus" })));
    }
    let entries = match order {
        Some(o) => enumerate_signatures(genus, o)
            .into_iter()
            .map(|s| (o, s))
            .collect(),
        None => {
            let max = max_order.unwrap_or_else(|| hurwitz_ceiling(genus));
            if !quiet {
                eprintln!("enumerating orders 2..={max} for N_{genus}");
            }
            enumerate_all(genus, max)
        }
    };
    let rows: Vec<Value> = entries
        .iter()
        .map(|(o, s)| json!({ "order": o, "signature": render_signature(s), "vcd_weyl": s.vcd_weyl() }))
        .collect();
    let mut text = String::new();
    for (o, s) in &entries {
        let _ = writeln!(text, "{o}\t{s}\t{}", s.vcd_weyl());
    }
    Ok(Output::new(
        json!({ "genus": genus, "count": rows.len(), "signatures": rows }),
        text,
    ))
}

fn ingest(path: &Path) -> Result<Vec<mcgdim::ActionRow>, Failure> {
    ingest_actions_path(path).map_err(|e| match e {
        IngestError::Io(io) => {
            Failure::new("io", io).at(json!({ "path": path.display().to_string() }))
        }
        IngestError::Invalid(diags) => {
            let first = &diags[0];
            Failure::new(
                "actions",
                format!("{} invalid line(s); {first}", diags.len()),
            )
            .at(json!({ "path": path.display().to_string(), "line": first.line }))
        }
    })
}

fn cmd_criterion(
    genus: u32,
    actions: Option<&Path>,
    max_order: Option<u64>,
    quiet: bool,
) -> CmdResult {
    let rows = actions.map(ingest).transpose()?;
    let mode = if rows.is_some() {
        Mode::Database
    } else {
        Mode::PureRh
    };
    let report = check_criterion(genus, mode, rows.as_deref(), max_order)
        .map_err(|e| Failure::new("criterion", e).at(json!({ "field": "genus" })))?;
    if !quiet {
        eprintln!(
            "examined {} signatures up to order {}",
            report.examined, report.max_order
        );
    }
    let conclusion = conclude(genus, Some(&report)).ok();
    let mut text = format!(
        "N_{genus} ({}): m* = {}, vcd = {}\n  cd_F ≤ {}, gd_F ≤ {}, equal: {}\n",
        report.mode,
        report.m_star,
        report.vcd_target,
        report.cd_upper,
        report.gd_upper,
        report.equal
    );
    if report.ceiling_hit {
        text.push_str("  warning: search stopped below 84(g-2); m* may be low\n");
    }
    for w in &report.witnesses {
        let _ = writeln!(
            text,
            "  witness |F| = {}, {}, vcd(WF) = {}, λ ≤ {} ({})",
            w.order,
            w.signature,
            w.vcd_weyl,
            w.lambda_bound,
            w.source.as_str()
        );
    }
    let mut v = serde_json::to_value(&report).expect("report serializes");
    if let Some(c) = conclusion {
        v["conclusion"] = serde_json::to_value(c).expect("conclusion serializes");
    }
    Ok(Output { json: v, text })
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn cmd_verify_lemmas() -> Result<(Output, bool), Failure> {
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            pass,
            detail,
        })
    };

    type Expected = (Epsilon, bool, Vec<(u32, u32)>);
    let expected: [Expected; 3] = [
        (Epsilon::Zero, false, vec![(1, 2), (1, 3)]),
        (Epsilon::Half, true, vec![(2, 2)]),
        (
            Epsilon::One,
            true,
            vec![(2, 2), (2, 3), (2, 4), (2, 5), (3, 2)],
        ),
    ];
    for (eps, family, sporadic) in expected {
        let r = verify_lemma_ab(eps, 50, 50);
        let pass = r.one_b_family == family && r.sporadic == sporadic;
        push(
            &format!("pair inequality, ε = {}", eps.value()),
            pass,
            format!(
                "(1,b) family: {}; other exceptions: {:?}",
                r.one_b_family, r.sporadic
            ),
        );
    }

    for (two_equal, k, triple) in [
        (false, Rational::new(1, 42), (2, 3, 7)),
        (true, Rational::new(1, 12), (3, 3, 4)),
    ] {
        let d = min_positive_deficiency(100, two_equal);
        let pass = d
            .as_ref()
            .is_some_and(|d| d.k == k && d.witnesses == vec![triple]);
        let detail = d.map_or("none".into(), |d| {
            format!("k = {} at {:?}", d.k, d.witnesses)
        });
        let name = if two_equal {
            "least deficiency, two equal"
        } else {
            "least deficiency"
        };
        push(name, pass, detail);
    }
    let cands = deficiency_candidates(&[2, 3], &[3, 4], 100);
    push(
        "deficiency candidates (q ≤ 3, r ≤ 4)",
        cands == vec![(2, 3, 7), (2, 4, 5), (3, 3, 4), (3, 4, 4)],
        format!("{cands:?}"),
    );

    let audit = verify_lambda_bounds(&GroupFamily::All.specs(200), 200)
        .map_err(|e| Failure::new("group", e))?;
    push(
        "λ ≤ |F|/2 and λ ≤ log₂|F|",
        audit.counterexamples.is_empty() && audit.omega_violations.is_empty(),
        format!(
            "{} groups, {} counterexamples",
            audit.checked,
            audit.counterexamples.len()
        ),
    );

    let all_pass = checks.iter().all(|c| c.pass);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(
            text,
            "{} {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    Ok((
        Output::new(json!({ "all_pass": all_pass, "checks": checks }), text),
        all_pass,
    ))
}

fn run(cli: &Cli) -> Result<(Output, bool), Failure> {
    let ok = |o: Output| (o, true);
    match &cli.command {
        Command::Vcd(a) => cmd_vcd(a).map(ok),
        Command::Chi(a) => cmd_chi(a).map(ok),
        Command::Sig {
            command: SigCommand::Parse { signature, genus },
        } => cmd_sig_parse(signature, *genus).map(ok),
        Command::Weyl { signature } => cmd_weyl(signature).map(ok),
        Command::Lambda(g) => cmd_lambda(g).map(ok),
        Command::Enumerate {
            genus,
            order,
            max_order,
        } => cmd_enumerate(*genus, *order, *max_order, cli.quiet).map(ok),
        Command::Criterion {
            genus,
            actions,
            max_order,
        } => cmd_criterion(*genus, actions.as_deref(), *max_order, cli.quiet).map(ok),
        Command::Verify {
            command: VerifyCommand::Lemmas,
        } => cmd_verify_lemmas(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, pass)) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n"
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let mut stdout = io::stdout().lock();
            if let Err(e) = stdout
                .write_all(body.as_bytes())
                .and_then(|()| stdout.flush())
            {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("{}", Failure::new("io", e).to_json());
                    return ExitCode::from(1);
                }
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                eprintln!(
                    "{}",
                    Failure::new("verification_failed", "a check failed").to_json()
                );
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("{}", f.to_json());
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcgdim::groups::DEFAULT_CAP;

    #[test]
    fn failure_json_is_one_line() {
        let f = Failure::from(parse_signature("(0; *; [-]; {-})").unwrap_err());
        let line = f.to_json();
        assert!(!line.contains('\n'));
        let v: Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["code"], "signature_parse");
        assert_eq!(v["location"]["offset"], 4);
    }

    #[test]
    fn group_spec_from_flags() {
        let args = GroupArgs {
            cyclic: None,
            dihedral: None,
            symmetric: None,
            perm: None,
            degree: None,
            product: Some("C2xD4".into()),
            cap: DEFAULT_CAP,
        };
        assert_eq!(group_spec(&args).unwrap().to_string(), "C2xD4");
    }
}
