//! `springer`: command-line front end for the springer-core library.
//!
//! Every subcommand runs one library operation and prints its result as an
//! aligned table (default) or as JSON (`--format json`). Exit codes: 0 on
//! success, 1 on domain errors, 2 on malformed input. Diagnostics go to
//! stderr as `error[<code>]: <message>`.

mod input;
mod render;
mod schema;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use springer_core::bernstein::{self, Catalog};
use springer_core::cuspidal::{self, Rep};
use springer_core::extquot::{self, GroupAction, TwistedQuotientData};
use springer_core::orbits;
use springer_core::projrep::{self, DEFAULT_BOUND};
use springer_core::rootdata::ExtendedWeylGroup;

use render::{list, perms, Table};

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Domain(springer_core::Error),
    Violations(usize),
}

impl From<springer_core::Error> for CliError {
    fn from(e: springer_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn code(&self) -> String {
        match self {
            CliError::Malformed(_) => "malformed_input".into(),
            CliError::Violations(_) => "condition_violation".into(),
            CliError::Domain(e) => {
                let debug = format!("{e:?}");
                let name: String = debug.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
                let mut out = String::new();
                for (i, c) in name.chars().enumerate() {
                    if c.is_ascii_uppercase() && i > 0 {
                        out.push('_');
                    }
                    out.push(c.to_ascii_lowercase());
                }
                out
            }
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Domain(_) | CliError::Violations(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Malformed(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Violations(n) => write!(f, "the quotient data violates {n} condition(s)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "springer", version, about = "Exact combinatorics of the generalized Springer correspondence")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    format: Format,
    /// Print the JSON schema of an input document and exit
    /// (group, cocycle, twisted-irreps, extquot, catalog, parabolic-pair).
    #[arg(long, value_name = "NAME")]
    schema: Option<String>,
    #[command(subcommand)]
    command: Option<Command>,
}

/// `<family> [rank]`, e.g. `E8`, `B 612` or `D4`.
#[derive(Debug, Args)]
struct GroupArgs {
    family: String,
    rank: Option<u32>,
}

#[derive(Debug, Args)]
struct ExtendedArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Diagram automorphisms generating π₀: `flip`, `triality`, or 1-based
    /// permutations of the simple roots separated by `;`.
    #[arg(long)]
    pi0: Option<String>,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[command(flatten)]
    ext: ExtendedArgs,
    /// Simple roots of M (1-based, comma-separated; `0`, `-` or `none` for the torus).
    #[arg(long = "M", allow_hyphen_values = true)]
    m: String,
    /// Simple roots of L.
    #[arg(long = "L", allow_hyphen_values = true)]
    l: String,
    /// Generators of Ω for M, as 1-based permutations separated by `;`.
    #[arg(long = "M-omega")]
    m_omega: Option<String>,
    /// Generators of Ω for L.
    #[arg(long = "L-omega")]
    l_omega: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Nilpotent orbits and their component groups.
    Orbits {
        #[command(flatten)]
        group: GroupArgs,
        /// Print only the number of orbits.
        #[arg(long)]
        count: bool,
    },
    /// The component group A(O) of one orbit.
    ComponentGroup {
        #[command(flatten)]
        group: GroupArgs,
        /// A partition such as `3,2,1` (with `:I` or `:II` for very even
        /// orbits of type D) or a Bala–Carter label.
        #[arg(long)]
        orbit: String,
    },
    /// Cuspidal local systems.
    Cuspidal {
        #[command(flatten)]
        group: GroupArgs,
        /// Print only the number of cuspidal local systems.
        #[arg(long)]
        count: bool,
        /// List cuspidal data on standard Levi subgroups (classical groups).
        #[arg(long, conflicts_with = "count")]
        levi_data: bool,
    },
    /// Cuspidal support of a local system on an exceptional group.
    Support {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        orbit: String,
        /// Exponent of the central character.
        #[arg(long, default_value_t = 0)]
        central: u32,
        /// Partition labelling the irreducible of the symmetric factor.
        #[arg(long, default_value = "")]
        factor: String,
    },
    /// Conjugacy classes of parabolic pairs (X, Ω).
    Parabolics(ExtendedArgs),
    /// Quasi-Levi subgroups, one per class of Levi subgroups.
    QuasiLevis(ExtendedArgs),
    /// Double cosets W_M \ W / W_L with minimal representatives.
    DoubleCosets(PairArgs),
    /// Index set of the Mackey formula for M and L.
    Mackey(PairArgs),
    /// Character table of a finite group (JSON input, `-` for stdin).
    Chartable { input: PathBuf },
    /// Irreducibles of a twisted group algebra (JSON input).
    TwistedIrreps { input: PathBuf },
    /// Twisted extended quotient of a group action (JSON input).
    Extquot { input: PathBuf },
    /// Dual Bernstein variety model over a catalog.
    Bernstein {
        #[command(subcommand)]
        command: BernsteinCommand,
    },
}

#[derive(Debug, Subcommand)]
enum BernsteinCommand {
    /// Assemble all blocks of a catalog, keyed by `levi/label`.
    Assemble { catalog: PathBuf },
}

/// A result in both output formats.
struct Output {
    json: Value,
    table: String,
}

impl Output {
    fn scalar(n: usize) -> Self {
        Output { json: json!(n), table: format!("{n}\n") }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn rep_string(r: &Rep) -> String {
    match r {
        Rep::Trivial => "1".into(),
        Rep::Character { order, exponent } => format!("chi({order})^{exponent}"),
        Rep::CentralCharacter { label } => label.clone(),
        Rep::SignTimesCentral { central } => format!("sgn x {central}"),
        Rep::DimTagged { dim, central } => format!("dim {dim}, {central}"),
    }
}

fn run_orbits(g: &GroupArgs, count: bool) -> Result<Output, CliError> {
    let g = input::group_label(&g.family, g.rank)?;
    let list = orbits::enumerate_orbits(&g);
    if count {
        return Ok(Output::scalar(list.len()));
    }
    let mut t = Table::new(&["orbit", "A(O)"]);
    let mut j = Vec::new();
    for o in &list {
        let a = orbits::component_group(&g, o)?;
        t.row(vec![o.to_string(), a.to_string()]);
        j.push(json!({ "orbit": o, "component_group": a }));
    }
    Ok(Output { json: Value::Array(j), table: t.render() })
}

fn run_component_group(g: &GroupArgs, orbit: &str) -> Result<Output, CliError> {
    let g = input::group_label(&g.family, g.rank)?;
    let o = input::orbit(&g, orbit)?;
    let a = orbits::component_group(&g, &o)?;
    let order = a.order().map_or("-".to_string(), |n| n.to_string());
    let mut t = Table::new(&["orbit", "A(O)", "order"]);
    t.row(vec![o.to_string(), a.to_string(), order]);
    Ok(Output { json: json!({ "orbit": o, "component_group": a, "order": a.order() }), table: t.render() })
}

fn run_cuspidal(g: &GroupArgs, count: bool, levi_data: bool) -> Result<Output, CliError> {
    let g = input::group_label(&g.family, g.rank)?;
    if levi_data {
        let data = cuspidal::cuspidal_levi_data(&g)?;
        let mut t = Table::new(&["levi", "X", "GL blocks", "classical rank", "systems"]);
        for d in &data {
            let systems: Vec<String> = d
                .factors
                .iter()
                .map(|f| format!("{}: {} {}", f.factor, f.system.orbit, rep_string(&f.system.rep)))
                .collect();
            t.row(vec![
                d.levi.semisimple_type.clone(),
                list(&d.levi.x),
                list(&d.gl_blocks),
                d.classical_rank.map_or("-".into(), |m| m.to_string()),
                systems.join("; "),
            ]);
        }
        return Ok(Output { json: to_json(&data), table: t.render() });
    }
    let c = cuspidal::cuspidal_classification(&g);
    if count {
        return Ok(Output::scalar(c.systems.len()));
    }
    let mut t = Table::new(&["orbit", "representation"]);
    for s in &c.systems {
        t.row(vec![s.orbit.to_string(), rep_string(&s.rep)]);
    }
    let mut table = t.render();
    for w in &c.warnings {
        table.push_str(&format!("warning: {w}\n"));
    }
    Ok(Output { json: to_json(&c), table })
}

fn run_support(g: &GroupArgs, orbit: &str, central: u32, factor: &str) -> Result<Output, CliError> {
    let g = input::group_label(&g.family, g.rank)?;
    let o = input::orbit(&g, orbit)?;
    let e = input::enhancement(central, factor)?;
    let s = cuspidal::cuspidal_support_exceptional(&g, &o, &e)?;
    let orbit = match &s.orbit {
        cuspidal::SupportOrbit::Zero => "0".to_string(),
        cuspidal::SupportOrbit::Regular => "regular".to_string(),
        cuspidal::SupportOrbit::Orbit(o) => o.to_string(),
    };
    let mut t = Table::new(&["levi", "X", "center", "orbit", "system", "central"]);
    t.row(vec![
        s.levi.semisimple_type.clone(),
        list(&s.levi.x),
        s.levi_center.clone(),
        orbit,
        rep_string(&s.system),
        s.central.to_string(),
    ]);
    Ok(Output { json: to_json(&s), table: t.render() })
}

fn extended(a: &ExtendedArgs) -> Result<ExtendedWeylGroup, CliError> {
    let g = input::group_label(&a.group.family, a.group.rank)?;
    input::extended_weyl(&g, a.pi0.as_deref())
}

fn run_parabolics(a: &ExtendedArgs) -> Result<Output, CliError> {
    let ext = extended(a)?;
    let rs = ext.root_system();
    let mut t = Table::new(&["X", "omega", "|omega|", "type", "class size"]);
    let mut j = Vec::new();
    for class in ext.parabolic_pair_classes() {
        let p = &class[0];
        let pj = ext.pair_json(p);
        let ty = rs.subsystem_type(&p.x);
        t.row(vec![list(&pj.x), perms(&pj.omega), p.omega.len().to_string(), ty.clone(), class.len().to_string()]);
        j.push(json!({ "pair": pj, "omega_order": p.omega.len(), "type": ty, "class_size": class.len() }));
    }
    Ok(Output { json: Value::Array(j), table: t.render() })
}

fn run_quasi_levis(a: &ExtendedArgs) -> Result<Output, CliError> {
    let ext = extended(a)?;
    let q = ext.quasi_levis()?;
    let mut t = Table::new(&["X", "type", "|omega|", "omega"]);
    for l in &q {
        t.row(vec![list(&l.x), l.semisimple_type.clone(), l.omega.len().to_string(), perms(&l.omega)]);
    }
    Ok(Output { json: to_json(&q), table: t.render() })
}

fn run_double_cosets(a: &PairArgs, mackey: bool) -> Result<Output, CliError> {
    let ext = extended(&a.ext)?;
    let q = input::pair(&ext, &a.m, a.m_omega.as_deref())?;
    let p = input::pair(&ext, &a.l, a.l_omega.as_deref())?;
    if mackey {
        let terms = ext.mackey_terms(&p, &q)?;
        let mut t = Table::new(&["word", "theta", "length", "M ∩ wL", "common roots", "|M ∩ wP|", "|Q ∩ wL|"]);
        for m in &terms {
            t.row(vec![
                word(&m.coset.word),
                list(&m.coset.theta),
                m.coset.length.to_string(),
                m.levi_mwl.semisimple_type.clone(),
                m.common_roots.to_string(),
                m.parabolic_in_m.to_string(),
                m.parabolic_in_wl.to_string(),
            ]);
        }
        return Ok(Output { json: to_json(&terms), table: t.render() });
    }
    let cosets = ext.double_cosets(&q, &p)?;
    let mut t = Table::new(&["word", "theta", "length", "dim", "size"]);
    for c in &cosets {
        t.row(vec![word(&c.word), list(&c.theta), c.length.to_string(), c.dim.to_string(), c.size.to_string()]);
    }
    Ok(Output { json: to_json(&cosets), table: t.render() })
}

fn word(w: &[usize]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn run_chartable(path: &PathBuf) -> Result<Output, CliError> {
    let g: input::GroupInput = input::read_json(path)?;
    let g = g.build()?;
    let ct = projrep::character_table(&g, DEFAULT_BOUND)?;
    let headers: Vec<String> = std::iter::once("chi".to_string())
        .chain(ct.classes.iter().map(|c| format!("{}[{}]", c.rep, c.elements.len())))
        .collect();
    let hr: Vec<&str> = headers.iter().map(String::as_str).collect();
    let mut t = Table::new(&hr);
    for (i, row) in ct.characters.iter().enumerate() {
        t.row(std::iter::once(format!("{i}")).chain(row.iter().map(|x| x.to_string())).collect());
    }
    let json = json!({
        "order": ct.order,
        "conductor": ct.conductor,
        "classes": ct.classes,
        "degrees": ct.degrees,
        "characters": ct.characters.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Output { json, table: t.render() })
}

fn run_twisted_irreps(path: &PathBuf) -> Result<Output, CliError> {
    let inp: input::TwistedIrrepsInput = input::read_json(path)?;
    let g = inp.group.build()?;
    let t = projrep::twisted_irreps(&g, &inp.cocycle, DEFAULT_BOUND)?;
    let mut table = Table::new(&["irreducible", "dim"]);
    for (i, d) in t.dims.iter().enumerate() {
        table.row(vec![i.to_string(), d.to_string()]);
    }
    let json = json!({
        "modulus": t.modulus,
        "conductor": t.conductor,
        "dims": t.dims,
        "characters": t.characters.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Output { json, table: table.render() })
}

fn run_extquot(path: &PathBuf, format: Format) -> Result<Output, CliError> {
    let inp: input::ExtquotInput = input::read_json(path)?;
    let g = inp.group.build()?;
    let action = GroupAction::new(g, &inp.action)?;
    let data = match inp.data {
        Some(d) => d,
        None if inp.base_points.is_empty() => TwistedQuotientData::trivial(&action),
        None => {
            let bases: Vec<_> = inp.base_points.into_iter().map(|b| (b.point, b.cocycle)).collect();
            let modulus = match inp.modulus {
                Some(m) => m,
                None => bases.iter().fold(1u32, |m, (_, k)| lcm(m, k.modulus)),
            };
            TwistedQuotientData::from_base_points(&action, modulus, &bases)?
        }
    };
    let violations = extquot::validate(&action, &data)?;
    if !violations.is_empty() {
        let mut t = Table::new(&["condition", "orbit", "witness", "instances"]);
        for v in &violations {
            let (a, b, x) = v.witness;
            t.row(vec![v.condition.to_string(), v.orbit.to_string(), format!("({a},{b},{x})"), v.instances.to_string()]);
        }
        print_output(&Output { json: json!({ "violations": violations }), table: t.render() }, format);
        return Err(CliError::Violations(violations.len()));
    }
    let points = match &inp.blocks {
        Some(b) => extquot::two_step_quotient(&action, b, &data)?,
        None => extquot::build(&action, &data)?,
    };
    let mut t = Table::new(&["point", "irreducible", "dim", "members"]);
    for p in &points {
        let members: Vec<String> = p.members.iter().map(|(x, r)| format!("({x},{r})")).collect();
        t.row(vec![p.point.to_string(), p.irrep.to_string(), p.dim.to_string(), members.join(" ")]);
    }
    Ok(Output { json: json!({ "points": points }), table: t.render() })
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn run_bernstein(cmd: &BernsteinCommand) -> Result<Output, CliError> {
    let BernsteinCommand::Assemble { catalog } = cmd;
    let c: Catalog = input::read_json(catalog)?;
    let blocks = bernstein::assemble_all(&c)?;
    let mut t = Table::new(&["key", "label", "point", "irreducible", "dim", "members", "central", "shift"]);
    let mut j = BTreeMap::new();
    for (k, pts) in &blocks {
        for p in pts {
            t.row(vec![
                k.to_string(),
                p.label.clone(),
                p.point.to_string(),
                p.irrep.to_string(),
                p.dim.to_string(),
                p.members.len().to_string(),
                p.central_character.clone().unwrap_or_else(|| "-".into()),
                p.shift.clone().unwrap_or_else(|| "-".into()),
            ]);
        }
        j.insert(k.to_string(), to_json(pts));
    }
    Ok(Output { json: to_json(&j), table: t.render() })
}

fn print_output(out: &Output, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("valid JSON")),
        Format::Table => print!("{}", out.table),
    }
}

fn run(cli: &Cli) -> Result<Option<Output>, CliError> {
    if let Some(name) = &cli.schema {
        let s = schema::get(name).ok_or_else(|| {
            CliError::Malformed(format!("unknown schema {name:?}; known: {}", schema::NAMES.join(", ")))
        })?;
        println!("{s}");
        return Ok(None);
    }
    let Some(cmd) = &cli.command else {
        return Err(CliError::Malformed("no subcommand given; see --help".into()));
    };
    let out = match cmd {
        Command::Orbits { group, count } => run_orbits(group, *count)?,
        Command::ComponentGroup { group, orbit } => run_component_group(group, orbit)?,
        Command::Cuspidal { group, count, levi_data } => run_cuspidal(group, *count, *levi_data)?,
        Command::Support { group, orbit, central, factor } => run_support(group, orbit, *central, factor)?,
        Command::Parabolics(a) => run_parabolics(a)?,
        Command::QuasiLevis(a) => run_quasi_levis(a)?,
        Command::DoubleCosets(a) => run_double_cosets(a, false)?,
        Command::Mackey(a) => run_double_cosets(a, true)?,
        Command::Chartable { input } => run_chartable(input)?,
        Command::TwistedIrreps { input } => run_twisted_irreps(input)?,
        Command::Extquot { input } => run_extquot(input, cli.format)?,
        Command::Bernstein { command } => run_bernstein(command)?,
    };
    Ok(Some(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(out)) => {
            print_output(&out, cli.format);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
