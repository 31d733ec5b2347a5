use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use colouring_core::graph::{verify_proper, write_dimacs, Vertex};
use colouring_core::group::{
    automorphisms, build_from_spec, center, classify, enumerate_lifting_subgroups, is_three_group, quotient,
    subgroup_generated, Elem, FiniteGroup, Label, LiftingKind, LiftingSubgroup,
};
use colouring_core::lifting::{colour, lift_c3c3, lift_c9c3, transport, ColourOutcome};
use colouring_core::perm::{
    conj_by_automorphism, is_colouring_bijection, is_complete_mapping, is_strong_complete_mapping, Perm,
};
use colouring_core::perm_file::{read_perm_file, write_perm_file};
use colouring_core::search::{scm_census, search, Mode, Order, SearchConfig, Target};
use colouring_core::tables::{exported_maps, verify_tables};
use serde_json::{json, Value};

use crate::{
    AutArgs, CensusArgs, ColourArgs, Command, GraphAction, GraphCheckArgs, GroupAction, LiftArgs, OrderArg, Report,
    SearchArgs, TablesAction, TargetArg, VerifyArgs, DATA_DIR_ENV,
};

pub struct Outcome {
    pub report: Report,
    pub code: u8,
}

impl Outcome {
    fn verdict(report: Report, holds: bool) -> Self {
        Outcome { report, code: if holds { 0 } else { 1 } }
    }
}

/// A check inside the tool failed; reported with exit code 3.
#[derive(Debug)]
pub struct InvariantFailure(pub String);

impl fmt::Display for InvariantFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invariant failure: {}", self.0)
    }
}

impl std::error::Error for InvariantFailure {}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    use colouring_core::Error as E;
    for cause in e.chain() {
        if cause.downcast_ref::<InvariantFailure>().is_some() {
            return 3;
        }
        if let Some(E::Invariant(_) | E::InvalidTable(_)) = cause.downcast_ref::<E>() {
            return 3;
        }
    }
    2
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Group { action: GroupAction::Show { spec } } => group_show(&spec),
        Command::Verify(a) => verify(a),
        Command::Search(a) => run_search(a),
        Command::Census(a) => census(a),
        Command::Lift(a) => lift(a),
        Command::Colour(a) => run_colour(a),
        Command::Graph { action: GraphAction::Check(a) } => graph_check(a),
        Command::Aut(a) => aut(a),
        Command::Tables { action: TablesAction::Verify } => tables_verify(),
        Command::Tables { action: TablesAction::Export { dir } } => tables_export(dir),
    }
}

fn group(spec: &str) -> Result<FiniteGroup> {
    build_from_spec(spec).with_context(|| format!("group `{spec}`"))
}

fn labels(g: &FiniteGroup, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x).to_string()).collect()
}

/// Finds a permutation file as given, else under the data directory.
fn resolve(path: &str) -> Result<PathBuf> {
    let p = PathBuf::from(path);
    if p.exists() {
        return Ok(p);
    }
    if let Some(dir) = std::env::var_os(DATA_DIR_ENV) {
        let dir = PathBuf::from(dir);
        for candidate in [dir.join(&p), p.file_name().map(|f| dir.join(f)).unwrap_or_default()] {
            if candidate.is_file() {
                return Ok(candidate);
            }
        }
    }
    bail!("permutation file `{path}` not found")
}

fn read_any_perm(path: &str) -> Result<(FiniteGroup, Perm)> {
    let file = resolve(path)?;
    read_perm_file(&file).with_context(|| format!("reading {}", file.display()))
}

/// `identity`, or a file whose header names the same group spec as `g`.
fn load_perm(g: &FiniteGroup, arg: &str) -> Result<Perm> {
    if arg == "identity" {
        return Ok(Perm::identity(g.order()));
    }
    let (h, sigma) = read_any_perm(arg)?;
    if h.name() != g.name() {
        bail!("`{arg}` is a permutation of {}, not {}", h.name(), g.name());
    }
    Ok(sigma)
}

fn write_checked(
    path: &Path,
    g: &FiniteGroup,
    sigma: &Perm,
    check: impl Fn(&FiniteGroup, &Perm) -> bool,
) -> Result<()> {
    if !check(g, sigma) {
        return Err(
            InvariantFailure(format!("refusing to write {}: the permutation fails its check", path.display())).into()
        );
    }
    write_perm_file(path, g, sigma).with_context(|| format!("writing {}", path.display()))
}

fn group_show(spec: &str) -> Result<Outcome> {
    let g = group(spec)?;
    let mut r = Report::new();
    r.set("group", g.name())
        .set("order", g.order())
        .set("center order", center(&g).order())
        .set("classification", classify(&g).to_string())
        .set("abelian", g.is_abelian());
    if is_three_group(&g) {
        let subs: Vec<Value> = enumerate_lifting_subgroups(&g)
            .iter()
            .map(|s| {
                json!({
                    "kind": s.kind.to_string(),
                    "generators": labels(&g, &s.subgroup.generators),
                    "central": s.central,
                    "quotient noncyclic": s.quotient_noncyclic,
                })
            })
            .collect();
        r.set("lifting subgroups", subs);
    } else {
        r.set("lifting subgroups", "not a 3-group");
    }
    Ok(Outcome { report: r, code: 0 })
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let sigma = load_perm(&g, &a.perm)?;
    let (cb, scm, cm) = if a.cb || a.scm || a.cm { (a.cb, a.scm, a.cm) } else { (true, false, false) };
    let mut r = Report::new();
    r.set("group", g.name()).set("perm", a.perm.as_str());
    let mut holds = true;
    for (asked, key, test) in [
        (cb, "colouring bijection", is_colouring_bijection as fn(&FiniteGroup, &Perm) -> bool),
        (scm, "strong complete mapping", is_strong_complete_mapping),
        (cm, "complete mapping", is_complete_mapping),
    ] {
        if asked {
            let v = test(&g, &sigma);
            holds &= v;
            r.set(key, v);
        }
    }
    Ok(Outcome::verdict(r, holds))
}

fn run_search(a: SearchArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let target = match a.target {
        TargetArg::Cb => Target::Cb,
        TargetArg::Scm => Target::Scm,
        TargetArg::Cm => Target::Cm,
    };
    let mode = match (a.mode.count, a.mode.enumerate) {
        (true, _) => Mode::Count,
        (_, Some(n)) => Mode::Enumerate(n),
        _ => Mode::First,
    };
    let order = match a.order {
        OrderArg::FailFirst => Order::FailFirst,
        OrderArg::Ascending => Order::Ascending,
    };
    let config =
        SearchConfig::new(target, mode).fix_identity(a.fix_identity).budget(a.budget).order(order).jobs(a.jobs);
    let result = search(&g, &config)?;
    if let Some(bad) = result.found.iter().find(|s| !target.check(&g, s)) {
        return Err(InvariantFailure(format!("search returned {:?}, which fails the check", bad.images())).into());
    }
    let mut r = Report::new();
    r.set("group", g.name())
        .set("target", format!("{:?}", a.target).to_lowercase())
        .set(
            "mode",
            match mode {
                Mode::First => "first".to_string(),
                Mode::Count => "count".to_string(),
                Mode::Enumerate(n) => format!("enumerate {n}"),
            },
        )
        .set("fix identity", a.fix_identity)
        .set("found", result.found.len());
    if mode == Mode::Count {
        r.set("count", result.count);
    }
    r.set("nodes explored", result.nodes_explored).set("exhausted", result.exhausted);
    if let Some(out) = &a.out {
        let paths = output_paths(out, result.found.len());
        for (p, s) in paths.iter().zip(&result.found) {
            write_checked(p, &g, s, |g, s| target.check(g, s))?;
        }
        r.set("written", paths.iter().map(|p| p.display().to_string()).collect::<Vec<_>>());
    } else if let Some(first) = result.found.first() {
        r.set("images", first.images().to_vec());
    }
    let positive = match mode {
        Mode::Count => true,
        _ => !result.found.is_empty(),
    };
    Ok(Outcome::verdict(r, positive))
}

fn output_paths(out: &Path, n: usize) -> Vec<PathBuf> {
    if n <= 1 {
        return vec![out.to_path_buf(); n];
    }
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = out.extension().map(|e| format!(".{}", e.to_string_lossy())).unwrap_or_default();
    (1..=n).map(|i| out.with_file_name(format!("{stem}_{i}{ext}"))).collect()
}

fn census(a: CensusArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let c = scm_census(&g, a.budget, a.fix_identity, a.jobs)?;
    let mut r = Report::new();
    r.set("group", g.name())
        .set("fix identity", a.fix_identity)
        .set("scm count", c.scm_count)
        .set("cb count", c.cb_count)
        .set("ratio", c.ratio.map(|x| format!("{x:.6}")))
        .set("nodes explored", c.nodes_explored)
        .set("exhausted", c.exhausted);
    Ok(Outcome::verdict(r, c.exhausted))
}

fn parse_labels(s: &str) -> Result<Vec<Label>> {
    s.split(')')
        .map(|p| p.trim().trim_start_matches(',').trim())
        .filter(|p| !p.is_empty())
        .map(|p| format!("{p})").parse::<Label>().map_err(|e| anyhow!(e)))
        .collect()
}

fn lift(a: LiftArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let (qg, qsigma) = read_any_perm(&a.quotient_perm)?;
    let candidates = enumerate_lifting_subgroups(&g);
    let chosen: LiftingSubgroup = if a.subgroup == "auto" {
        candidates
            .into_iter()
            .filter(|c| g.order() / c.subgroup.order() == qg.order())
            .find(|c| quotient(&g, &c.subgroup).ok().and_then(|d| transport(&qsigma, &qg, &d.quotient)).is_some())
            .ok_or_else(|| {
                anyhow!("no normal C3xC3 or C9xC3 in {} has quotient isomorphic to {}", g.name(), qg.name())
            })?
    } else {
        let gens = parse_labels(&a.subgroup)?
            .iter()
            .map(|l| g.element_by_label(l).ok_or_else(|| anyhow!("{l} is not an element of {}", g.name())))
            .collect::<Result<Vec<_>>>()?;
        let h = subgroup_generated(&g, &gens);
        candidates
            .into_iter()
            .find(|c| c.subgroup.elements == h.elements)
            .ok_or_else(|| anyhow!("<{}> is not a normal C3xC3 or C9xC3", a.subgroup))?
    };
    let dec = quotient(&g, &chosen.subgroup)?;
    let phi = transport(&qsigma, &qg, &dec.quotient)
        .ok_or_else(|| anyhow!("{} is not isomorphic to G/H (order {})", qg.name(), dec.quotient.order()))?;
    let lifted = match chosen.kind {
        LiftingKind::CentralC3C3 | LiftingKind::C3C3 => lift_c3c3(&g, &chosen.subgroup, &phi)?,
        LiftingKind::C9C3 => lift_c9c3(&g, &chosen.subgroup, &phi)?,
    };
    let mut r = Report::new();
    r.set("group", g.name())
        .set("subgroup", labels(&g, &chosen.subgroup.generators))
        .set("kind", chosen.kind.to_string())
        .set("quotient order", dec.quotient.order())
        .set("quotient perm group", qg.name())
        .set("case", format!("{:?}", lifted.case))
        .set("layers", lifted.layers.holds.to_vec())
        .set("colouring bijection", lifted.verified);
    if let Some(out) = &a.out {
        write_checked(out, &g, &lifted.sigma, is_colouring_bijection)?;
        r.set("written", out.display().to_string());
    } else {
        r.set("images", lifted.sigma.images().to_vec());
    }
    Ok(Outcome::verdict(r, lifted.verified))
}

fn run_colour(a: ColourArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let report = colour(&g)?;
    let mut r = Report::new();
    r.set("group", g.name()).set("order", g.order());
    let (status, coloured) = match &report.outcome {
        ColourOutcome::Coloured { .. } => ("coloured".to_string(), true),
        ColourOutcome::NoConstructionKnown { reason } => (format!("no construction known: {reason}"), false),
        ColourOutcome::SearchExhausted { nodes } => (format!("search budget spent after {nodes} nodes"), false),
    };
    r.set("status", status);
    r.set("trace", serde_json::to_value(&report.trace)?);
    if let Some(sigma) = report.sigma() {
        r.set("colouring bijection", is_colouring_bijection(&g, sigma));
        if let Some(out) = &a.out {
            write_checked(out, &g, sigma, is_colouring_bijection)?;
            r.set("written", out.display().to_string());
        } else {
            r.set("images", sigma.images().to_vec());
        }
    }
    Ok(Outcome::verdict(r, coloured))
}

fn vertex_label(g: &FiniteGroup, v: Vertex) -> String {
    format!("({}, {}, {})", g.label(v.x), g.label(v.y), g.label(v.z))
}

fn graph_check(a: GraphCheckArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let sigma = load_perm(&g, &a.perm)?;
    let cert = verify_proper(&g, &sigma, a.jobs)?;
    let mut r = Report::new();
    r.set("group", g.name())
        .set("order", cert.order)
        .set("colouring bijection", cert.sigma_is_colouring_bijection)
        .set("vertices", cert.vertices)
        .set("checks", cert.checks)
        .set("colours used", cert.colours_used)
        .set("classes uniform", cert.classes_uniform)
        .set("clique", format!("{{(x,e,e)}}, size {}", cert.clique.len()))
        .set("clique verified", cert.clique_verified)
        .set("proper", cert.proper)
        .set(
            "first violation",
            cert.first_violation.map(|w| format!("{} ~ {}", vertex_label(&g, w.u), vertex_label(&g, w.v))),
        )
        .set("chromatic number", cert.conclusion);
    if let Some(path) = &a.export_dimacs {
        let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
        write_dimacs(&g, &mut w)?;
        r.set("dimacs", path.display().to_string());
    }
    if !cert.proper && cert.sigma_is_colouring_bijection {
        return Err(InvariantFailure("a colouring bijection gave an improper colouring".into()).into());
    }
    Ok(Outcome::verdict(r, cert.conclusion.is_some()))
}

fn aut(a: AutArgs) -> Result<Outcome> {
    let g = group(&a.group)?;
    let auts = automorphisms(&g)?;
    let mut r = Report::new();
    r.set("group", g.name()).set("automorphisms", auts.len());
    if let Some(path) = &a.orbit {
        let sigma = load_perm(&g, path)?;
        let mut orbit = BTreeSet::new();
        let mut stabiliser = 0;
        for phi in auts {
            let tau = conj_by_automorphism(&g, &sigma, &Perm::new(phi)?)?;
            stabiliser += usize::from(tau == sigma);
            orbit.insert(tau);
        }
        let cbs = orbit.iter().filter(|t| is_colouring_bijection(&g, t)).count();
        r.set("orbit size", orbit.len()).set("stabiliser order", stabiliser).set("colouring bijections in orbit", cbs);
    }
    Ok(Outcome { report: r, code: 0 })
}

fn tables_verify() -> Result<Outcome> {
    let report = verify_tables();
    let mut r = Report::new();
    for c in &report.checks {
        let v = match &c.detail {
            None => "pass".to_string(),
            Some(d) => format!("FAIL {d}"),
        };
        r.set(&c.table, v);
    }
    r.set("tables", report.checks.len()).set("all passed", report.all_passed());
    if !report.all_passed() {
        return Ok(Outcome { report: r, code: 3 });
    }
    Ok(Outcome { report: r, code: 0 })
}

fn tables_export(dir: Option<PathBuf>) -> Result<Outcome> {
    let dir =
        dir.or_else(|| std::env::var_os(DATA_DIR_ENV).map(PathBuf::from)).unwrap_or_else(|| PathBuf::from("data"));
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut groups: HashMap<&str, FiniteGroup> = HashMap::new();
    let maps = exported_maps();
    for m in &maps {
        if !groups.contains_key(m.group_spec) {
            groups.insert(m.group_spec, group(m.group_spec)?);
        }
        let g = &groups[m.group_spec];
        let sigma = Perm::new(m.images.clone())
            .map_err(|_| InvariantFailure(format!("table column {} is not a bijection", m.file_stem)))?;
        write_checked(&dir.join(format!("{}.perm", m.file_stem)), g, &sigma, |_, _| true)?;
    }
    let mut r = Report::new();
    r.set("dir", dir.display().to_string()).set("files", maps.len());
    Ok(Outcome { report: r, code: 0 })
}
