//! The `gtcat` command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::based_ring::double_coset_ring;
use crate::cochain::{builtin_cochain, cochain_catalog, Cochain, CochainFile, DomainTag};
use crate::error::Error;
use crate::group::{builtin_group, catalog, FiniteGroup, GroupFile, Subgroup, DEFAULT_ORDER_CAP};
use crate::gt_category::{drinfeld_double_data, GTCategoryData, Grading, SimpleObject};
use crate::verify::verify_instance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_BAD_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gtcat", version, about = "Group-theoretical fusion categories C(G, ω, H, ψ)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Double coset ring R(G,H), its adjoint series and Γ chain
    Ring(InstanceArgs),
    /// Nilpotency verdict and class bounds
    Nilpotency(InstanceArgs),
    /// Simple objects and the double-coset grading
    Simples(InstanceArgs),
    /// The group K ⋉_ν Ĥ of invertible objects
    Invertibles(InstanceArgs),
    /// Universal grading group G/H ⋉ Z(H) (ω = ψ = 0, H normal)
    Ugrading(InstanceArgs),
    /// Simples of the Drinfeld double C(G×G, 0, Δ(G), 0)
    Double(DoubleArgs),
    /// Run the full identity suite
    Verify(VerifyArgs),
    /// List builtin groups and cochains
    Catalog(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// `builtin:NAME` or a JSON group file
    #[arg(long)]
    pub group: String,
    /// `center`, `whole`, `trivial`, `derived`, an element list `[0,3]`, or
    /// comma-separated generators: cycles `(12)(34)`, words `r^2*s`, indices
    #[arg(long, default_value = "trivial")]
    pub subgroup: String,
    /// `zero`, `builtin:NAME[:k]` or a JSON cochain file
    #[arg(long, default_value = "zero")]
    pub omega: String,
    /// Same forms as `--omega`; tables use `"domain": "H"`
    #[arg(long, default_value = "zero")]
    pub psi: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DoubleArgs {
    /// `builtin:NAME` or a JSON group file
    #[arg(long)]
    pub group: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bound on sampled pairs per randomized check
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Failure {
        Failure { code: EXIT_BAD_INPUT, message: e.to_string() }
    }
}

fn classify(e: Error) -> Failure {
    let code = match e {
        Error::NotCocycle { .. } | Error::CoboundaryMismatch { .. } | Error::NotNormalized(_) => EXIT_INVALID,
        Error::Unsupported(_) => EXIT_INVALID,
        _ => EXIT_BAD_INPUT,
    };
    Failure { code, message: e.to_string() }
}

/// Group-order cap, overridable through `GTCAT_CAP`.
pub fn order_cap() -> usize {
    std::env::var("GTCAT_CAP").ok().and_then(|v| v.parse().ok()).filter(|&c| c > 0).unwrap_or(DEFAULT_ORDER_CAP)
}

pub fn load_group(spec: &str, cap: usize) -> Result<FiniteGroup, Failure> {
    let g = if let Some(name) = spec.strip_prefix("builtin:") {
        builtin_group(name).map_err(Failure::input)?
    } else {
        let text = std::fs::read_to_string(spec).map_err(|e| Failure::input(format!("{spec}: {e}")))?;
        let file: GroupFile = serde_json::from_str(&text).map_err(|e| Failure::input(format!("{spec}: {e}")))?;
        file.build(cap).map_err(|e| Failure::input(format!("{spec}: {e}")))?
    };
    if g.order() > cap {
        return Err(Failure::input(Error::CapExceeded { cap, got: g.order() }));
    }
    Ok(g)
}

/// Splits on commas outside parentheses and brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.into_iter().filter(|t| !t.is_empty()).collect()
}

/// `(1 2 3)(4 5)` or `(123)(45)`, 1-based points.
fn parse_cycles(g: &FiniteGroup, s: &str) -> Result<usize, String> {
    let degree = g.permutation_degree().ok_or("cycle notation needs a permutation group")?;
    let mut images: Vec<usize> = (0..degree).collect();
    for cycle in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let body = cycle.strip_prefix('(').ok_or_else(|| format!("malformed cycle {cycle:?}"))?;
        let points: Vec<usize> = if body.contains([' ', ',']) {
            body.split([' ', ',']).filter(|t| !t.is_empty()).map(|t| t.parse::<usize>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?
        } else {
            body.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| format!("bad point {c:?}"))).collect::<Result<_, _>>()?
        };
        if points.iter().any(|&p| p == 0 || p > degree) {
            return Err(format!("point out of range 1..={degree} in {cycle:?})"));
        }
        // apply this cycle after the ones already read
        let mut step: Vec<usize> = (0..degree).collect();
        for (i, &p) in points.iter().enumerate() {
            step[p - 1] = points[(i + 1) % points.len()] - 1;
        }
        images = images.iter().map(|&x| step[x]).collect();
    }
    g.find_permutation(&images).ok_or_else(|| format!("{s} is not in the group"))
}

/// `r^2*s`, using generator names.
fn parse_word(g: &FiniteGroup, s: &str) -> Result<usize, String> {
    let mut x = g.identity();
    for token in s.split('*').map(str::trim) {
        let (name, power) = match token.split_once('^') {
            Some((n, p)) => (n.trim(), p.trim().parse::<i64>().map_err(|e| format!("{token}: {e}"))?),
            None => (token, 1),
        };
        let base = if name == "e" || name == "1" {
            g.identity()
        } else {
            g.generator_names()
                .iter()
                .find(|(n, _)| n == name)
                .map(|&(_, y)| y)
                .ok_or_else(|| format!("unknown generator {name:?}"))?
        };
        let ord = g.element_order(base) as i64;
        x = g.mul(x, g.pow(base, power.rem_euclid(ord) as usize));
    }
    Ok(x)
}

pub fn parse_subgroup(g: &FiniteGroup, spec: &str) -> Result<Subgroup, Failure> {
    let bad = |m: String| Failure::input(format!("subgroup {spec:?}: {m}"));
    let spec = spec.trim();
    match spec {
        "center" => return Ok(g.center()),
        "whole" | "G" => return Ok(g.whole()),
        "trivial" | "e" | "1" => return Ok(g.trivial_subgroup()),
        "derived" => return Ok(g.derived_subgroup()),
        _ => {}
    }
    if let Some(body) = spec.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
        let mut elems = Vec::new();
        for t in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let x: usize = t.parse().map_err(|e| bad(format!("{t}: {e}")))?;
            if x >= g.order() {
                return Err(bad(format!("element {x} out of range")));
            }
            elems.push(x);
        }
        elems.sort_unstable();
        elems.dedup();
        return g.subgroup_from_elements(&elems).map_err(|e| bad(e.to_string()));
    }
    let mut gens = Vec::new();
    for t in split_top_level(spec) {
        let x = if t.starts_with('(') {
            parse_cycles(g, t)
        } else if let Ok(i) = t.parse::<usize>() {
            if i < g.order() { Ok(i) } else { Err(format!("element {i} out of range")) }
        } else {
            parse_word(g, t)
        };
        gens.push(x.map_err(bad)?);
    }
    g.subgroup_generated(&gens).map_err(|e| bad(e.to_string()))
}

pub fn load_cochain(spec: &str, degree: usize, g: &FiniteGroup, h: &Subgroup) -> Result<Cochain, Failure> {
    let dom = if degree == 3 { g.whole() } else { h.clone() };
    if spec == "zero" {
        return Ok(Cochain::zero(degree, &dom));
    }
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let (name, k) = match rest.split_once(':') {
            Some((n, k)) => (n, Some(k.parse::<i64>().map_err(|e| Failure::input(format!("{spec}: {e}")))?)),
            None => (rest, None),
        };
        return builtin_cochain(name, k, degree, g, &dom).map_err(Failure::input);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Failure::input(format!("{spec}: {e}")))?;
    let file: CochainFile = serde_json::from_str(&text).map_err(|e| Failure::input(format!("{spec}: {e}")))?;
    file.build(degree, g, h).map_err(|e| match e {
        Error::NotNormalized(_) => classify(e),
        e => Failure::input(format!("{spec}: {e}")),
    })
}

pub fn load_instance(args: &InstanceArgs) -> Result<GTCategoryData, Failure> {
    let cap = order_cap();
    let g = load_group(&args.group, cap)?;
    let h = parse_subgroup(&g, &args.subgroup)?;
    let omega = load_cochain(&args.omega, 3, &g, &h)?;
    let psi = load_cochain(&args.psi, 2, &g, &h)?;
    Ok(GTCategoryData::new(g, omega, h, psi).map_err(classify)?.with_cap(cap))
}

/// Input echo: re-reading these files reproduces the instance exactly.
#[derive(Serialize)]
struct InstanceEcho {
    group: GroupFile,
    subgroup: Vec<usize>,
    omega: CochainFile,
    psi: CochainFile,
    representatives: Vec<usize>,
}

fn echo(data: &GTCategoryData) -> InstanceEcho {
    InstanceEcho {
        group: GroupFile::from_group(data.group()),
        subgroup: data.subgroup().members().to_vec(),
        omega: CochainFile::from_cochain(data.omega(), DomainTag::G),
        psi: CochainFile::from_cochain(data.psi(), DomainTag::H),
        representatives: data.representatives().to_vec(),
    }
}

fn cochain_json(c: &Cochain) -> serde_json::Value {
    json!(c.support().into_iter().map(|(a, p)| json!({"args": a, "phase": p})).collect::<Vec<_>>())
}

fn cochain_text(c: &Cochain) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.support().iter().map(|(a, p)| format!("{}↦{p}", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join(" ")
}

fn subgroup_text(g: &FiniteGroup, h: &Subgroup) -> String {
    if h.order() == g.order() {
        format!("{} (whole group)", g.name())
    } else {
        format!("order {} {:?}", h.order(), h.members())
    }
}

/// A finished report: text and JSON forms plus the exit code.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub code: i32,
}

fn ring_report(data: &GTCategoryData) -> Result<Report, Failure> {
    let g = data.group();
    let r = double_coset_ring(g, data.subgroup()).map_err(classify)?;
    let rep = r.report(g);
    let q = r.quotient_to_group_ring(g);
    let mut t = String::new();
    writeln!(t, "R(G,H) for G = {}, H {}", g.name(), subgroup_text(g, data.subgroup())).unwrap();
    writeln!(t, "rank {} (double cosets HxH, representative x = minimal element)", r.ring.rank()).unwrap();
    for (i, l) in rep.labels.iter().enumerate() {
        writeln!(t, "  {l}: size {}, star = {}", r.cosets.sizes()[i], rep.labels[rep.star[i]]).unwrap();
    }
    writeln!(t, "products:").unwrap();
    for x in 1..r.ring.rank() {
        for y in 1..r.ring.rank() {
            let terms: Vec<&str> = r.ring.product_support(x, y).map(|z| rep.labels[z].as_str()).collect();
            writeln!(t, "  {} * {} = {}", rep.labels[x], rep.labels[y], terms.join(" + ")).unwrap();
        }
    }
    writeln!(t, "associative: {}", rep.associative).unwrap();
    writeln!(t, "adjoint series ranks: {:?}", rep.adjoint_series_ranks).unwrap();
    writeln!(t, "Γ chain orders: {:?}", rep.gamma_chain.iter().map(Vec::len).collect::<Vec<_>>()).unwrap();
    match rep.class {
        Some(c) => writeln!(t, "nilpotent of class {c}").unwrap(),
        None => writeln!(t, "not nilpotent").unwrap(),
    }
    writeln!(t, "agrees with successive normal closures: {}", rep.agrees_with_closures).unwrap();
    writeln!(t, "image Z[G/N], N = normal closure of H: |G/N| = {}", q.quotient.order()).unwrap();
    let json = json!({
        "command": "ring",
        "instance": echo(data),
        "ring": rep,
        "quotient": {"normal_closure": q.normal.members(), "order": q.quotient.order(), "map": q.map, "homomorphism": q.homomorphism},
    });
    Ok(Report { text: t, json, code: EXIT_OK })
}

fn nilpotency_report(data: &GTCategoryData) -> Result<Report, Failure> {
    let g = data.group();
    let n = data.nilpotency().map_err(classify)?;
    let closure = if n.normal_closure_order == g.order() {
        g.name().to_string()
    } else {
        format!("subgroup of order {}", n.normal_closure_order)
    };
    let mut t = String::new();
    if n.nilpotent {
        writeln!(t, "nilpotent; normal closure = {closure}").unwrap();
        let (lo, hi) = (n.lower.unwrap(), n.upper.unwrap());
        writeln!(t, "cl(H) = {lo}, defect of H in G = {}", n.defect.unwrap()).unwrap();
        if lo == hi {
            writeln!(t, "nilpotency class = {lo}").unwrap();
        } else {
            writeln!(t, "{lo} ≤ nilpotency class ≤ {hi}").unwrap();
        }
    } else {
        writeln!(t, "not nilpotent; normal closure = {closure}").unwrap();
    }
    if let Some(c) = n.ring_class {
        writeln!(t, "R(G,H) nilpotent of class {c}").unwrap();
    }
    writeln!(t, "based-ring route agrees: {}", n.routes_agree).unwrap();
    let json = json!({"command": "nilpotency", "instance": echo(data), "nilpotency": n});
    Ok(Report { text: t, json, code: EXIT_OK })
}

fn simples_text(data: &GTCategoryData, simples: &[SimpleObject], grading: &Grading, t: &mut String) {
    writeln!(t, "{} simple objects (g, ρ)", simples.len()).unwrap();
    writeln!(t, "  {:>6} {:>6} {:>6} {:>6} {:>6}", "g", "|H^g|", "ρ", "dim ρ", "fpdim").unwrap();
    for s in simples {
        writeln!(t, "  {:>6} {:>6} {:>6} {:>6} {:>6}", s.g, s.hg_order, s.rep_label, s.dim_rho, s.fpdim).unwrap();
    }
    let total: usize = simples.iter().map(|s| s.fpdim * s.fpdim).sum();
    writeln!(t, "Σ fpdim² = {total} (|G| = {})", data.group().order()).unwrap();
    writeln!(t, "grading by double cosets:").unwrap();
    for c in &grading.components {
        writeln!(t, "  H{}H (size {}): fpdims {:?}", c.representative, c.size, c.fpdims).unwrap();
    }
    writeln!(
        t,
        "trivial component: {} simples, {} classes of H, ψ^1 cohomologically trivial: {}",
        grading.trivial_component_simples, grading.h_class_count, grading.psi1_trivial
    )
    .unwrap();
}

fn simples_report(data: &GTCategoryData, command: &str) -> Result<Report, Failure> {
    let simples = data.enumerate_simples().map_err(classify)?;
    let grading = data.grading(&simples).map_err(classify)?;
    let mut t = String::new();
    writeln!(t, "C(G, ω, H, ψ) with G = {}, H {}", data.group().name(), subgroup_text(data.group(), data.subgroup())).unwrap();
    simples_text(data, &simples, &grading, &mut t);
    let total: usize = simples.iter().map(|s| s.fpdim * s.fpdim).sum();
    let json = json!({
        "command": command,
        "instance": echo(data),
        "simples": simples,
        "global_dimension": total,
        "grading": grading,
    });
    Ok(Report { text: t, json, code: EXIT_OK })
}

fn invertibles_report(data: &GTCategoryData) -> Result<Report, Failure> {
    let g = data.group();
    let inv = data.invertible_group().map_err(classify)?;
    let as_group = inv.as_group().map_err(classify)?;
    let mut t = String::new();
    writeln!(t, "K ⋉_ν Ĥ of order {} ({})", inv.order(), if as_group.is_abelian() { "abelian" } else { "non-abelian" }).unwrap();
    writeln!(t, "K = {:?} (representatives in N_G(H) with ψ^g trivial)", inv.k).unwrap();
    let factors: Vec<String> = inv.characters.orders.iter().map(|o| format!("Z{o}")).collect();
    let dual = if factors.is_empty() { "1".to_string() } else { factors.join(" × ") };
    writeln!(t, "Ĥ ≅ {dual} (order {})", inv.characters.order()).unwrap();
    for (&(g1, g2), v) in &inv.nu {
        if !v.is_zero() {
            writeln!(t, "  ν({g1}, {g2}) = {}", cochain_text(v)).unwrap();
        }
    }
    if inv.nu.values().all(Cochain::is_zero) {
        writeln!(t, "  ν ≡ 0").unwrap();
    }
    for &k in &inv.k {
        writeln!(t, "  η_{k} = {}", cochain_text(&inv.eta[&k])).unwrap();
    }
    let elements: Vec<_> = (0..inv.order())
        .map(|x| {
            let (gg, rho) = inv.element(x);
            json!({"g": gg, "rho": cochain_json(&rho)})
        })
        .collect();
    let action: Vec<_> = inv
        .k
        .iter()
        .map(|&k| {
            let imgs: Vec<usize> = inv
                .characters
                .elements
                .iter()
                .map(|c| inv.characters.index_of(&c.conjugate(g, k).expect("normalizer")).expect("character"))
                .collect();
            json!({"g": k, "character_permutation": imgs})
        })
        .collect();
    let json = json!({
        "command": "invertibles",
        "instance": echo(data),
        "order": inv.order(),
        "abelian": as_group.is_abelian(),
        "k": inv.k,
        "characters": {"orders": inv.characters.orders, "elements": inv.characters.elements.iter().map(cochain_json).collect::<Vec<_>>()},
        "action": action,
        "eta": inv.eta.iter().map(|(k, e)| json!({"g": k, "eta": cochain_json(e)})).collect::<Vec<_>>(),
        "nu": inv.nu.iter().map(|(&(a, b), v)| json!({"g1": a, "g2": b, "nu": cochain_json(v)})).collect::<Vec<_>>(),
        "elements": elements,
        "table": inv.table,
    });
    Ok(Report { text: t, json, code: EXIT_OK })
}

fn ugrading_report(data: &GTCategoryData) -> Result<Report, Failure> {
    let u = data.universal_grading().map_err(classify)?;
    let mut t = String::new();
    writeln!(t, "U(C) ≅ G/H ⋉ Z(H) of order {} (|Z(H)|·|G|/|H| = {})", u.group.order(), u.predicted_order).unwrap();
    writeln!(t, "|G/H| = {}, |Z(H)| = {}, {}", u.quotient.order(), u.center.order(), if u.group.is_abelian() { "abelian" } else { "non-abelian" }).unwrap();
    writeln!(t, "C_ad ≅ Rep(H/Z(H)) has {} simples", u.adjoint_component_simples).unwrap();
    let json = json!({
        "command": "ugrading",
        "instance": echo(data),
        "order": u.group.order(),
        "predicted_order": u.predicted_order,
        "quotient_order": u.quotient.order(),
        "center_order": u.center.order(),
        "action": u.action,
        "well_defined": u.well_defined,
        "abelian": u.group.is_abelian(),
        "adjoint_component_simples": u.adjoint_component_simples,
        "table": u.group.table_rows(),
    });
    Ok(Report { text: t, json, code: EXIT_OK })
}

fn verify_report(data: &GTCategoryData, seed: u64, samples: usize) -> Report {
    let checks = verify_instance(data, seed, samples);
    let ok = checks.iter().all(|c| c.passed);
    let mut t = String::new();
    for c in &checks {
        writeln!(t, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
    }
    writeln!(t, "{}", if ok { "all identities pass" } else { "verification failed" }).unwrap();
    let json = json!({"command": "verify", "instance": echo(data), "seed": seed, "checks": checks, "passed": ok});
    Report { text: t, json, code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED } }
}

fn catalog_report() -> Report {
    let groups = catalog();
    let cochains = cochain_catalog();
    let mut t = String::from("builtin groups (builtin:NAME; also Z<n>, S<n>, A<n>, D<2n> and x-products):\n");
    for g in &groups {
        writeln!(t, "  {:<10} order {:>4}  generators {}", g.name, g.order, g.generators.join(", ")).unwrap();
    }
    t.push_str("builtin cochains (builtin:NAME[:k]):\n");
    for (name, desc) in &cochains {
        writeln!(t, "  {name:<16} {desc}").unwrap();
    }
    let json = json!({
        "groups": groups,
        "cochains": cochains.iter().map(|(n, d)| json!({"name": n, "description": d})).collect::<Vec<_>>(),
    });
    Report { text: t, json, code: EXIT_OK }
}

fn emit(report: &Report, out: &OutputArgs) -> Result<(), Failure> {
    let body = match out.format {
        Format::Text => report.text.clone(),
        Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable") + "\n",
    };
    match &out.output {
        Some(path) => write_file(path, &body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Runs a parsed command, printing the report; returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let result = (|| -> Result<i32, Failure> {
        let (report, out) = match &cli.command {
            Command::Ring(a) => (ring_report(&load_instance(a)?)?, &a.out),
            Command::Nilpotency(a) => (nilpotency_report(&load_instance(a)?)?, &a.out),
            Command::Simples(a) => (simples_report(&load_instance(a)?, "simples")?, &a.out),
            Command::Invertibles(a) => (invertibles_report(&load_instance(a)?)?, &a.out),
            Command::Ugrading(a) => (ugrading_report(&load_instance(a)?)?, &a.out),
            Command::Double(a) => {
                let g = load_group(&a.group, order_cap())?;
                let data = drinfeld_double_data(&g).map_err(classify)?.with_cap(order_cap());
                (simples_report(&data, "double")?, &a.out)
            }
            Command::Verify(a) => (verify_report(&load_instance(&a.instance)?, a.seed, a.samples), &a.instance.out),
            Command::Catalog(out) => (catalog_report(), out),
        };
        emit(&report, out)?;
        Ok(report.code)
    })();
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_specs() {
        let s3 = builtin_group("S3").unwrap();
        assert_eq!(parse_subgroup(&s3, "(12)").unwrap().order(), 2);
        assert_eq!(parse_subgroup(&s3, "(123)").unwrap().order(), 3);
        assert_eq!(parse_subgroup(&s3, "(1 2),(2 3)").unwrap().order(), 6);
        assert_eq!(parse_subgroup(&s3, "center").unwrap().order(), 1);
        assert_eq!(parse_subgroup(&s3, "[0]").unwrap().order(), 1);
        assert!(parse_subgroup(&s3, "(14)").is_err());
        let d8 = builtin_group("D8").unwrap();
        assert_eq!(parse_subgroup(&d8, "s").unwrap().order(), 2);
        assert_eq!(parse_subgroup(&d8, "r^2, s").unwrap().order(), 4);
        assert_eq!(parse_subgroup(&d8, "r*s").unwrap().order(), 2);
        assert_eq!(parse_subgroup(&d8, "r^-1").unwrap().order(), 4);
        assert!(parse_subgroup(&d8, "q").is_err());
        let sq = builtin_group("S3xS3").unwrap();
        assert_eq!(parse_subgroup(&sq, "(12)(45)").unwrap().order(), 2);
    }

    #[test]
    fn cycles_compose_left_to_right() {
        let s3 = builtin_group("S3").unwrap();
        let x = parse_cycles(&s3, "(12)(23)").unwrap();
        let a = parse_cycles(&s3, "(12)").unwrap();
        let b = parse_cycles(&s3, "(23)").unwrap();
        assert_eq!(x, s3.mul(a, b));
    }
}
