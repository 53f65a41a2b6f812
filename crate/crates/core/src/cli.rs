//! The `actforge` command line: thin verbs over the library and the JSON
//! workspace. [`run`] returns the process exit code.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::act::{is_generating_set, minimal_generating_set, right_regular_act, ActElem, FiniteAct};
use crate::congruence::connect_sequence;
use crate::diagonal::{
    attach_act_generators, diagonal_act, product_diagonal_presentation, square_generating_set,
    zero_extension_generators, zero_extension_presentation,
};
use crate::error::Error;
use crate::family::monoid_by_name;
use crate::monoid::{adjoin_zero, attach_act_monoid, direct_product_monoid, FiniteMonoid, MonoidElem};
use crate::presentation::{
    canonical_presentation, is_irredundant, kernel_presentation, reduce_presentation,
    BoundPresentation, FreeActElem, GenLabel, PresentationReport,
};
use crate::product::{dp_generating_set, dp_presentation, DiagonalDecomposition};
use crate::suite::{self, diagonal_presentation, small_presentation, CriterionReport};
use crate::workspace::{
    family_act, load_workspace, save_workspace, Recipe, Workspace, WorkspaceDocument, WorkspaceError,
};
use crate::wreath::{
    finite_a_fg_n_u, is_u_connected, left_zero_u, reduce_t1, wreath_act, wreath_generating_set,
    wreath_presentation, MapSpace, NAMap, WreathAct,
};

#[derive(Debug, Parser)]
#[command(name = "actforge", version, about = "Finite monoid acts: generators, presentations, certificates")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Where inputs come from. Names not found in the workspace fall back to the
/// built-in family: monoids by name (`Z2`), acts as `monoid/act`
/// (`Z2/regular`).
#[derive(Debug, Args)]
pub struct Inputs {
    #[arg(long, short)]
    pub workspace: Option<PathBuf>,
    #[arg(long)]
    pub monoid: Vec<String>,
    #[arg(long)]
    pub act: Vec<String>,
    /// Name for the new entry.
    #[arg(long)]
    pub name: Option<String>,
    /// Workspace file to write; defaults to the input workspace.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a workspace and re-check every entry.
    Validate { path: PathBuf },
    /// Build a named construction.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Emit a generating set and check it.
    Generate {
        #[arg(value_enum)]
        kind: GenerateKind,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Emit a presentation with its verification verdict.
    Present {
        #[arg(value_enum)]
        kind: PresentKind,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Verify the presentations stored in a workspace.
    Verify {
        path: PathBuf,
        #[arg(long)]
        presentation: Option<String>,
    },
    /// Drop redundant relations, or shrink the first wreath block.
    Reduce {
        #[arg(long)]
        presentation: Option<String>,
        /// Reduce the wreath presentation of the two `--act`s.
        #[arg(long)]
        wreath: bool,
        /// Left zero of N used to build U.
        #[arg(long)]
        left_zero: Option<String>,
        /// Monoid generators of N used to build U.
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Find a derivation between two free act elements, or a (U, a)-chain
    /// between two maps A -> N.
    Connect {
        #[arg(long)]
        presentation: Option<String>,
        /// `generator.element`
        #[arg(long)]
        lhs: Option<String>,
        #[arg(long)]
        rhs: Option<String>,
        /// Maps as comma lists, separated by `;`.
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        at: Option<ActElem>,
        #[arg(long, value_delimiter = ',')]
        theta: Vec<MonoidElem>,
        #[arg(long, value_delimiter = ',')]
        phi: Vec<MonoidElem>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Run the acceptance criteria.
    Suite {
        #[arg(long, default_value = "small")]
        family: String,
        #[arg(long)]
        criterion: Vec<u8>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConstructKind {
    Diagonal,
    Dp,
    Wreath,
    M0,
    Attach,
    WreathMonoid,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenerateKind {
    Act,
    Diagonal,
    Dp,
    Wreath,
    Zero,
    Attach,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PresentKind {
    Act,
    Canonical,
    Diagonal,
    Dp,
    Wreath,
    Zero,
    ProductDiagonal,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Workspace(#[from] WorkspaceError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::SizeLimitExceeded { .. }) => 3,
            CliError::Core(Error::VerificationFailed(_)) => 1,
            CliError::Workspace(w) if w.is_cap() => 3,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::SizeLimitExceeded { .. }) => "cap_exceeded",
            CliError::Core(Error::VerificationFailed(_)) => "verification_failed",
            CliError::Core(_) => "invalid_input",
            CliError::Workspace(WorkspaceError::Parse { .. }) => "parse_error",
            CliError::Workspace(WorkspaceError::DanglingReference { .. }) => "dangling_reference",
            CliError::Workspace(_) => "validation_error",
            CliError::Usage(_) => "usage",
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

type CliResult<T> = Result<T, CliError>;

/// What a verb prints: a JSON value, a human rendering, and an exit code.
pub struct Report {
    pub status: u8,
    pub value: Value,
    pub text: String,
}

impl Report {
    fn ok(value: Value, text: String) -> Self {
        Report { status: 0, value, text }
    }
}

/// Parses `args` (including the program name) and runs the verb.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(report) => {
            if json {
                print!("{}", crate::workspace::to_pretty_json(&report.value));
            } else {
                println!("{}", report.text);
            }
            report.status
        }
        Err(e) => {
            if json {
                let v = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
                print!("{}", crate::workspace::to_pretty_json(&v));
            } else {
                eprintln!("error ({}): {e}", e.kind());
            }
            e.exit_code()
        }
    }
}

pub fn execute(command: Command) -> CliResult<Report> {
    match command {
        Command::Validate { path } => validate(&path),
        Command::Construct { kind, inputs } => construct(kind, inputs),
        Command::Generate { kind, inputs } => generate(kind, inputs),
        Command::Present { kind, inputs } => present(kind, inputs),
        Command::Verify { path, presentation } => verify(&path, presentation.as_deref()),
        Command::Reduce {
            presentation,
            wreath,
            left_zero,
            generators,
            inputs,
        } => {
            if wreath {
                reduce_wreath(left_zero, generators, inputs)
            } else {
                let name = presentation.ok_or_else(|| usage("reduce needs --presentation or --wreath"))?;
                reduce_stored(&name, inputs)
            }
        }
        Command::Connect {
            presentation,
            lhs,
            rhs,
            u,
            at,
            theta,
            phi,
            inputs,
        } => match presentation {
            Some(p) => {
                let lhs = lhs.ok_or_else(|| usage("connect needs --lhs"))?;
                let rhs = rhs.ok_or_else(|| usage("connect needs --rhs"))?;
                connect_words(&p, &lhs, &rhs, inputs)
            }
            None => {
                let u = u.ok_or_else(|| usage("connect needs --presentation or --u"))?;
                let at = at.ok_or_else(|| usage("connect needs --at"))?;
                connect_maps(&u, at, NAMap(theta), NAMap(phi), inputs)
            }
        },
        Command::Suite { family, criterion } => run_suite(&family, &criterion),
    }
}

/// A workspace under construction: the document to save and the resolved
/// objects it names.
struct Ctx {
    doc: WorkspaceDocument,
    ws: Workspace,
    out: Option<PathBuf>,
}

impl Ctx {
    fn open(inputs: &Inputs) -> CliResult<Self> {
        let ws = match &inputs.workspace {
            Some(p) if p.exists() => load_workspace(p)?,
            _ => Workspace::default(),
        };
        Ok(Ctx {
            doc: ws.document.clone(),
            ws,
            out: inputs.out.clone().or_else(|| inputs.workspace.clone()),
        })
    }

    fn monoid(&mut self, name: &str) -> CliResult<Arc<FiniteMonoid>> {
        if let Some(m) = self.ws.monoids.get(name) {
            return Ok(m.clone());
        }
        let m = monoid_by_name(name).ok_or_else(|| usage(format!("unknown monoid '{name}'")))?;
        self.put_monoid(name, m.clone(), Recipe::new("family", &[name], None));
        Ok(m)
    }

    fn act(&mut self, name: &str) -> CliResult<FiniteAct> {
        if let Some(a) = self.ws.acts.get(name) {
            return Ok(a.clone());
        }
        let (mname, aname) = name
            .split_once('/')
            .ok_or_else(|| usage(format!("unknown act '{name}'")))?;
        let a = family_act(mname, aname).ok_or_else(|| usage(format!("unknown act '{name}'")))?;
        self.monoid(mname)?;
        self.put_act(name, mname, a.clone(), Recipe::new("family", &[mname, aname], None));
        Ok(a)
    }

    fn monoid_of(&self, act: &str) -> String {
        self.doc.acts[act].monoid.clone()
    }

    fn put_monoid(&mut self, name: &str, m: Arc<FiniteMonoid>, recipe: Recipe) {
        self.doc.add_monoid(name, &m, Some(recipe));
        self.ws.monoids.insert(name.to_string(), m);
    }

    fn put_act(&mut self, name: &str, monoid: &str, a: FiniteAct, recipe: Recipe) {
        self.doc.add_act(name, monoid, &a, Some(recipe));
        self.ws.acts.insert(name.to_string(), a);
    }

    fn diagonal(&mut self, mname: &str) -> CliResult<(String, FiniteAct)> {
        let m = self.monoid(mname)?;
        let name = format!("diag({mname})");
        let d = diagonal_act(&m)?;
        self.put_act(&name, mname, d.clone(), Recipe::new("diagonal", &[mname], None));
        Ok((name, d))
    }

    fn zero(&mut self, mname: &str) -> CliResult<String> {
        let m = self.monoid(mname)?;
        let name = format!("{mname}^0");
        self.put_monoid(&name, Arc::new(adjoin_zero(&m)), Recipe::new("zero", &[mname], None));
        Ok(name)
    }

    fn attach(&mut self, aname: &str) -> CliResult<String> {
        let a = self.act(aname)?;
        let name = format!("U({aname})");
        let u = attach_act_monoid(a.base(), &a)?;
        self.put_monoid(&name, Arc::new(u), Recipe::new("attach", &[aname], None));
        Ok(name)
    }

    fn product(&mut self, aname: &str, bname: &str) -> CliResult<(String, FiniteAct)> {
        let (a, b) = (self.act(aname)?, self.act(bname)?);
        let name = format!("{aname} x {bname}");
        let p = crate::act::direct_product_act(&a, &b)?;
        let mname = self.monoid_of(aname);
        self.put_act(&name, &mname, p.clone(), Recipe::new("product", &[aname, bname], None));
        Ok((name, p))
    }

    fn wreath(&mut self, aname: &str, bname: &str) -> CliResult<(String, WreathAct)> {
        let (a, b) = (self.act(aname)?, self.act(bname)?);
        let wa = wreath_act(&a, &b)?;
        let nname = self.monoid_of(bname);
        let wname = format!("W({aname},{nname})");
        self.put_monoid(&wname, wa.w.monoid.clone(), Recipe::new("wreath", &[aname, &nname], None));
        let name = format!("{aname} wr {bname}");
        self.put_act(&name, &wname, wa.act.clone(), Recipe::new("wreath", &[aname, bname], None));
        Ok((name, wa))
    }

    fn save(&self) -> CliResult<Option<String>> {
        match &self.out {
            Some(p) => {
                Workspace::from_document(self.doc.clone())?;
                save_workspace(p, &self.doc)?;
                Ok(Some(p.display().to_string()))
            }
            None => Ok(None),
        }
    }
}

fn one_monoid(inputs: &Inputs) -> CliResult<String> {
    match inputs.monoid.as_slice() {
        [m] => Ok(m.clone()),
        _ => Err(usage("expected exactly one --monoid")),
    }
}

fn one_act(inputs: &Inputs) -> CliResult<String> {
    match inputs.act.as_slice() {
        [a] => Ok(a.clone()),
        _ => Err(usage("expected exactly one --act")),
    }
}

fn two_acts(inputs: &Inputs) -> CliResult<(String, String)> {
    match inputs.act.as_slice() {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(usage("expected two --act options")),
    }
}

fn saved_note(saved: &Option<String>) -> String {
    saved.as_ref().map(|p| format!("\nwrote {p}")).unwrap_or_default()
}

fn validate(path: &Path) -> CliResult<Report> {
    let ws = load_workspace(path)?;
    let d = &ws.document;
    let value = json!({
        "valid": true,
        "monoids": d.monoids.len(),
        "acts": d.acts.len(),
        "presentations": d.presentations.len(),
        "generating_sets": d.generating_sets.len(),
    });
    let text = format!(
        "{}: valid ({} monoids, {} acts, {} presentations, {} generating sets)",
        path.display(),
        d.monoids.len(),
        d.acts.len(),
        d.presentations.len(),
        d.generating_sets.len()
    );
    Ok(Report::ok(value, text))
}

fn construct(kind: ConstructKind, inputs: Inputs) -> CliResult<Report> {
    let mut ctx = Ctx::open(&inputs)?;
    let (what, name, size) = match kind {
        ConstructKind::Diagonal => {
            let (name, d) = ctx.diagonal(&one_monoid(&inputs)?)?;
            ("act", name, d.size())
        }
        ConstructKind::Dp => {
            let (a, b) = two_acts(&inputs)?;
            let (name, p) = ctx.product(&a, &b)?;
            ("act", name, p.size())
        }
        ConstructKind::Wreath => {
            let (a, b) = two_acts(&inputs)?;
            let (name, wa) = ctx.wreath(&a, &b)?;
            ("act", name, wa.act.size())
        }
        ConstructKind::M0 => {
            let name = ctx.zero(&one_monoid(&inputs)?)?;
            let order = ctx.ws.monoids[&name].order();
            ("monoid", name, order)
        }
        ConstructKind::Attach => {
            let name = ctx.attach(&one_act(&inputs)?)?;
            let order = ctx.ws.monoids[&name].order();
            ("monoid", name, order)
        }
        ConstructKind::WreathMonoid => {
            let aname = one_act(&inputs)?;
            let nname = one_monoid(&inputs)?;
            let a = ctx.act(&aname)?;
            let n = ctx.monoid(&nname)?;
            let w = crate::wreath::wreath_monoid(a.base_arc(), &n, &a)?;
            let name = format!("W({aname},{nname})");
            let order = w.monoid.order();
            ctx.put_monoid(&name, w.monoid, Recipe::new("wreath", &[&aname, &nname], None));
            ("monoid", name, order)
        }
    };
    let name = match &inputs.name {
        Some(new) => rename(&mut ctx, what, &name, new),
        None => name,
    };
    let saved = ctx.save()?;
    let value = json!({"kind": what, "name": name, "size": size, "written": saved});
    let text = format!("built {what} '{name}' with {size} elements{}", saved_note(&saved));
    Ok(Report::ok(value, text))
}

fn rename(ctx: &mut Ctx, what: &str, old: &str, new: &str) -> String {
    if what == "act" {
        if let Some(e) = ctx.doc.acts.remove(old) {
            ctx.doc.acts.insert(new.to_string(), e);
        }
        if let Some(a) = ctx.ws.acts.remove(old) {
            ctx.ws.acts.insert(new.to_string(), a);
        }
    } else {
        if let Some(e) = ctx.doc.monoids.remove(old) {
            ctx.doc.monoids.insert(new.to_string(), e);
        }
        if let Some(m) = ctx.ws.monoids.remove(old) {
            ctx.ws.monoids.insert(new.to_string(), m);
        }
        for a in ctx.doc.acts.values_mut() {
            if a.monoid == old {
                a.monoid = new.to_string();
            }
        }
    }
    new.to_string()
}

/// Square generating set of the diagonal act, with the identity added so it
/// also suits constructions that need `1 ∈ U`.
fn diagonal_u(m: &FiniteMonoid, with_identity: bool) -> Vec<MonoidElem> {
    let mut u = square_generating_set(m).u;
    if with_identity && !u.contains(&m.identity()) {
        u.push(m.identity());
        u.sort_unstable();
    }
    u
}

fn generate(kind: GenerateKind, inputs: Inputs) -> CliResult<Report> {
    let mut ctx = Ctx::open(&inputs)?;
    let (target_name, elems): (String, Vec<ActElem>) = match kind {
        GenerateKind::Act => {
            let name = one_act(&inputs)?;
            let a = ctx.act(&name)?;
            (name, minimal_generating_set(&a).elems)
        }
        GenerateKind::Diagonal => {
            let mname = one_monoid(&inputs)?;
            let m = ctx.monoid(&mname)?;
            let (name, _) = ctx.diagonal(&mname)?;
            (name, square_generating_set(&m).pairs(&m))
        }
        GenerateKind::Dp => {
            let (an, bn) = two_acts(&inputs)?;
            let (a, b) = (ctx.act(&an)?, ctx.act(&bn)?);
            let u = diagonal_u(a.base(), false);
            let x = minimal_generating_set(&a).elems;
            let y = minimal_generating_set(&b).elems;
            let g = dp_generating_set(&a, &x, &b, &y, &u, &u)?;
            let (name, _) = ctx.product(&an, &bn)?;
            (name, g.z)
        }
        GenerateKind::Wreath => {
            let (an, bn) = two_acts(&inputs)?;
            let (name, wa) = ctx.wreath(&an, &bn)?;
            let x = minimal_generating_set(wa.a()).elems;
            let y = minimal_generating_set(&wa.b).elems;
            (name, wreath_generating_set(&wa, &x, &y)?)
        }
        GenerateKind::Zero => {
            let mname = one_monoid(&inputs)?;
            let m = ctx.monoid(&mname)?;
            let z = zero_extension_generators(&m, &diagonal_u(&m, false))?;
            let zname = ctx.zero(&mname)?;
            let (name, _) = ctx.diagonal(&zname)?;
            (name, z.act_elems())
        }
        GenerateKind::Attach => {
            let aname = one_act(&inputs)?;
            let a = ctx.act(&aname)?;
            let x = minimal_generating_set(&a).elems;
            let pairs = attach_act_generators(a.base_arc(), &a, &x, &diagonal_u(a.base(), true))?;
            let uname = ctx.attach(&aname)?;
            let (name, _) = ctx.diagonal(&uname)?;
            (name, pairs.act_elems())
        }
    };
    let target = ctx.ws.acts[&target_name].clone();
    let verified = is_generating_set(&target, &elems);
    let set_name = inputs.name.clone().unwrap_or_else(|| format!("gens({target_name})"));
    ctx.doc.generating_sets.insert(
        set_name.clone(),
        crate::workspace::GeneratingSetEntry {
            act: target_name.clone(),
            elems: elems.clone(),
            verified: Some(verified),
            recipe: None,
        },
    );
    let saved = ctx.save()?;
    let labels: Vec<String> = elems.iter().map(|&e| target.label(e)).collect();
    let value = json!({
        "name": set_name,
        "act": target_name,
        "elems": elems,
        "labels": labels,
        "verified": verified,
        "written": saved,
    });
    let text = format!(
        "{set_name}: {} generators of '{target_name}' ({} elements), {}{}",
        elems.len(),
        target.size(),
        if verified { "verified" } else { "NOT generating" },
        saved_note(&saved)
    );
    Ok(Report {
        status: if verified { 0 } else { 1 },
        value,
        text,
    })
}

fn kind_name(kind: impl ValueEnum) -> String {
    kind.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

struct Presented {
    monoid: String,
    act: String,
    bound: BoundPresentation,
    blocks: Value,
}

fn present(kind: PresentKind, inputs: Inputs) -> CliResult<Report> {
    let mut ctx = Ctx::open(&inputs)?;
    let p = build_presentation(&mut ctx, kind, &inputs)?;
    let target = ctx.ws.acts[&p.act].clone();
    let report = p.bound.verify(&target);
    let name = inputs
        .name
        .clone()
        .unwrap_or_else(|| format!("{}({})", kind_name(kind), p.act));
    ctx.doc.add_presentation(&name, &p.monoid, Some(&p.act), &p.bound, Some(report.clone()), None);
    let saved = ctx.save()?;
    Ok(presentation_report(&name, &p.act, &p.bound, &report, p.blocks, &saved))
}

fn build_presentation(ctx: &mut Ctx, kind: PresentKind, inputs: &Inputs) -> CliResult<Presented> {
    Ok(match kind {
        PresentKind::Act | PresentKind::Canonical => {
            let name = one_act(inputs)?;
            let a = ctx.act(&name)?;
            let bound = if matches!(kind, PresentKind::Act) {
                small_presentation(&a)?
            } else {
                canonical_presentation(&a, &a.base().greedy_generators())?
            };
            Presented {
                monoid: ctx.monoid_of(&name),
                act: name,
                bound,
                blocks: Value::Null,
            }
        }
        PresentKind::Diagonal => {
            let mname = one_monoid(inputs)?;
            let m = ctx.monoid(&mname)?;
            let u = diagonal_u(&m, false);
            let bound = diagonal_presentation(&m, &u, &u)?;
            let (act, _) = ctx.diagonal(&mname)?;
            Presented {
                monoid: mname,
                act,
                bound,
                blocks: Value::Null,
            }
        }
        PresentKind::Dp => {
            let (an, bn) = two_acts(inputs)?;
            let (a, b) = (ctx.act(&an)?, ctx.act(&bn)?);
            let m = a.base_arc().clone();
            let sq = square_generating_set(&m);
            let d = DiagonalDecomposition::build(&m, &sq.u, &sq.v)?;
            let pdiag = diagonal_presentation(&m, &d.u, &d.v)?;
            let (pa, pb) = (small_presentation(&a)?, small_presentation(&b)?);
            let pp = dp_presentation(&a, &b, &pa, &pb, &pdiag, &d)?;
            let (act, _) = ctx.product(&an, &bn)?;
            Presented {
                monoid: ctx.monoid_of(&an),
                act,
                blocks: json!({
                    "t1": pp.t1.len(), "t2": pp.t2.len(), "t3": pp.t3.len(),
                    "generator_sides": pp.generator_sides.len(),
                }),
                bound: pp.bound,
            }
        }
        PresentKind::Wreath => {
            let (an, bn) = two_acts(inputs)?;
            let (act, wa) = ctx.wreath(&an, &bn)?;
            let (pa, pb) = (small_presentation(wa.a())?, small_presentation(&wa.b)?);
            let wp = wreath_presentation(&wa, &pa, &pb)?;
            Presented {
                monoid: ctx.monoid_of(&act),
                act,
                blocks: json!({"t1": wp.t1.len(), "t2": wp.t2.len(), "t3": wp.t3.len()}),
                bound: wp.bound,
            }
        }
        PresentKind::Zero => {
            let mname = one_monoid(inputs)?;
            let m = ctx.monoid(&mname)?;
            let u = diagonal_u(&m, false);
            let pd = diagonal_presentation(&m, &u, &u)?;
            let rr = right_regular_act(&m);
            let pm = reduce_presentation(&kernel_presentation(&rr, &u)?, &rr)?;
            let bound = zero_extension_presentation(&m, &pd, &pm)?;
            let zname = ctx.zero(&mname)?;
            let (act, _) = ctx.diagonal(&zname)?;
            Presented {
                monoid: zname,
                act,
                bound,
                blocks: Value::Null,
            }
        }
        PresentKind::ProductDiagonal => {
            let (mn, nn) = match inputs.monoid.as_slice() {
                [a, b] => (a.clone(), b.clone()),
                _ => return Err(usage("expected two --monoid options")),
            };
            let (m, n) = (ctx.monoid(&mn)?, ctx.monoid(&nn)?);
            let (u, v) = (diagonal_u(&m, false), diagonal_u(&n, false));
            let pm = diagonal_presentation(&m, &u, &u)?;
            let pn = diagonal_presentation(&n, &v, &v)?;
            let pd = product_diagonal_presentation(&m, &n, &pm, &pn)?;
            let pname = format!("{mn}x{nn}");
            ctx.put_monoid(&pname, Arc::new(direct_product_monoid(&m, &n)?), Recipe::new("product", &[&mn, &nn], None));
            let (act, _) = ctx.diagonal(&pname)?;
            Presented {
                monoid: pname,
                act,
                blocks: json!({
                    "t1": pd.t1.len(), "t2": pd.t2.len(),
                    "generator_sides": pd.generator_sides.len(),
                }),
                bound: pd.bound,
            }
        }
    })
}

fn presentation_report(
    name: &str,
    act: &str,
    bound: &BoundPresentation,
    report: &PresentationReport,
    blocks: Value,
    saved: &Option<String>,
) -> Report {
    let labels: Vec<String> = bound.presentation.gen_labels().iter().map(GenLabel::to_string).collect();
    let value = json!({
        "name": name,
        "act": act,
        "generators": labels,
        "relations": bound.relations().len(),
        "blocks": blocks,
        "verdict": report,
        "written": saved,
    });
    let mut text = format!(
        "{name}: {} generators, {} relations for '{act}'\n  verdict: {}",
        labels.len(),
        bound.relations().len(),
        verdict_text(report)
    );
    text.push_str(&saved_note(saved));
    Report {
        status: if report.holds() { 0 } else { 1 },
        value,
        text,
    }
}

fn verdict_text(report: &PresentationReport) -> String {
    match &report.witness {
        None => format!("holds ({} classes)", report.kernel_classes),
        Some(w) => format!(
            "FAILS: {w} (kernel {} classes, closure {} classes)",
            report.kernel_classes, report.closure_classes
        ),
    }
}

fn verify(path: &Path, only: Option<&str>) -> CliResult<Report> {
    let text = std::fs::read_to_string(path).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let mut doc = WorkspaceDocument::from_json(&text)?;
    let stored: Vec<(String, Option<bool>)> = doc
        .presentations
        .iter()
        .map(|(k, p)| (k.clone(), p.verdict.as_ref().map(PresentationReport::holds)))
        .collect();
    // Verdicts are recomputed below rather than trusted on load.
    for p in doc.presentations.values_mut() {
        p.verdict = None;
    }
    let ws = Workspace::from_document(doc)?;
    if let Some(name) = only {
        if !ws.document.presentations.contains_key(name) {
            return Err(usage(format!("no presentation '{name}'")));
        }
    }
    let mut results = Vec::new();
    let mut lines = Vec::new();
    let mut failed = false;
    for (name, was) in stored {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        let (bound, target) = ws.presentation(&name)?;
        let Some(target) = target else {
            lines.push(format!("{name}: no target act, skipped"));
            continue;
        };
        let report = bound.verify(&target);
        let stale = was.is_some_and(|w| w != report.holds());
        failed |= !report.holds() || stale;
        lines.push(format!(
            "{name}: {}{}",
            verdict_text(&report),
            if stale { " (stored verdict is stale)" } else { "" }
        ));
        results.push(json!({"name": name, "verdict": report, "stale": stale}));
    }
    Ok(Report {
        status: if failed { 1 } else { 0 },
        value: json!({"presentations": results}),
        text: lines.join("\n"),
    })
}

fn reduce_stored(name: &str, inputs: Inputs) -> CliResult<Report> {
    let mut ctx = Ctx::open(&inputs)?;
    let (bound, target) = ctx.ws.presentation(name)?;
    let target = target.ok_or_else(|| usage(format!("presentation '{name}' names no act")))?;
    let reduced = reduce_presentation(&bound, &target)?;
    let irredundant = is_irredundant(&reduced, &target)?;
    let report = reduced.verify(&target);
    let entry = ctx.doc.presentations[name].clone();
    let new_name = inputs.name.clone().unwrap_or_else(|| format!("{name}-reduced"));
    ctx.doc.add_presentation(
        &new_name,
        &entry.monoid,
        entry.act.as_deref(),
        &reduced,
        Some(report.clone()),
        None,
    );
    let saved = ctx.save()?;
    let mut out = presentation_report(
        &new_name,
        entry.act.as_deref().unwrap_or(""),
        &reduced,
        &report,
        json!({"before": bound.relations().len(), "after": reduced.relations().len(), "irredundant": irredundant}),
        &saved,
    );
    out.text = format!(
        "{} -> {} relations, irredundant: {irredundant}\n{}",
        bound.relations().len(),
        reduced.relations().len(),
        out.text
    );
    Ok(out)
}

fn parse_monoid_elem(m: &FiniteMonoid, s: &str) -> CliResult<MonoidElem> {
    let s = s.trim();
    if let Some(e) = m.elements().find(|&e| m.label(e) == s) {
        return Ok(e);
    }
    match s.parse::<usize>() {
        Ok(e) if e < m.order() => Ok(e),
        _ => Err(usage(format!("no monoid element '{s}'"))),
    }
}

fn reduce_wreath(left_zero: Option<String>, generators: Vec<String>, inputs: Inputs) -> CliResult<Report> {
    let mut ctx = Ctx::open(&inputs)?;
    let (an, bn) = two_acts(&inputs)?;
    let (act, wa) = ctx.wreath(&an, &bn)?;
    let (pa, pb) = (small_presentation(wa.a())?, small_presentation(&wa.b)?);
    let full = wreath_presentation(&wa, &pa, &pb)?;
    let u = match (left_zero, generators.is_empty()) {
        (Some(z), true) => left_zero_u(&wa.w, &full.x, parse_monoid_elem(&wa.w.n, &z)?)?,
        (None, false) => {
            let xn = generators
                .iter()
                .map(|g| parse_monoid_elem(&wa.w.n, g))
                .collect::<CliResult<Vec<_>>>()?;
            finite_a_fg_n_u(&wa.w, &full.x, &xn)?
        }
        _ => return Err(usage("reduce --wreath needs exactly one of --left-zero, --generators")),
    };
    let reduced = reduce_t1(&wa, &full, &u)?;
    let report = reduced.bound.verify(&wa.act);
    let name = inputs.name.clone().unwrap_or_else(|| format!("reduced({act})"));
    let mname = ctx.monoid_of(&act);
    ctx.doc.add_presentation(&name, &mname, Some(&act), &reduced.bound, Some(report.clone()), None);
    let saved = ctx.save()?;
    let u_maps: Vec<Vec<MonoidElem>> = u.iter().map(|t| t.0.clone()).collect();
    let mut out = presentation_report(
        &name,
        &act,
        &reduced.bound,
        &report,
        json!({"t1_before": full.t1.len(), "t1_after": reduced.t1.len(), "u": u_maps}),
        &saved,
    );
    out.text = format!(
        "first block: {} -> {} relations using {} maps\n{}",
        full.t1.len(),
        reduced.t1.len(),
        u.len(),
        out.text
    );
    Ok(out)
}

fn parse_word(bound: &BoundPresentation, s: &str) -> CliResult<FreeActElem> {
    let (g, e) = s
        .rsplit_once('.')
        .ok_or_else(|| usage(format!("'{s}' is not of the form generator.element")))?;
    let labels = bound.presentation.gen_labels();
    let gen = labels
        .iter()
        .position(|l| l.to_string() == g)
        .or_else(|| g.parse::<usize>().ok().filter(|&i| i < labels.len()))
        .ok_or_else(|| usage(format!("no generator '{g}'")))?;
    Ok(FreeActElem::new(gen, parse_monoid_elem(bound.presentation.monoid(), e)?))
}

fn connect_words(name: &str, lhs: &str, rhs: &str, inputs: Inputs) -> CliResult<Report> {
    let ctx = Ctx::open(&inputs)?;
    let (bound, _) = ctx.ws.presentation(name)?;
    let (l, r) = (parse_word(&bound, lhs)?, parse_word(&bound, rhs)?);
    let free = bound.presentation.free_act()?;
    let pairs = bound.presentation.relation_pairs(&free);
    let (a, b) = (free.encode(l.gen, l.elem), free.encode(r.gen, r.elem));
    match connect_sequence(free.act(), &pairs, a, b) {
        Some(cert) => {
            let replays = cert.replay(free.act(), &pairs, a, b).is_ok();
            let value = json!({
                "verdict": "consequence",
                "lhs": l, "rhs": r,
                "certificate": cert,
                "replays": replays,
            });
            let mut text = format!("{l} = {r} follows in {} steps (replay: {})", cert.len(), if replays { "ok" } else { "FAILED" });
            for s in &cert.steps {
                text.push_str(&format!(
                    "\n  relation {} {:?} times {}",
                    s.pair,
                    s.direction,
                    bound.presentation.monoid().label(s.multiplier)
                ));
            }
            Ok(Report {
                status: if replays { 0 } else { 1 },
                value,
                text,
            })
        }
        None => Ok(Report {
            status: 1,
            value: json!({"verdict": "not_consequence", "lhs": l, "rhs": r}),
            text: format!("NotConsequence: {l} = {r} does not follow from the relations"),
        }),
    }
}

fn parse_maps(s: &str) -> CliResult<Vec<NAMap>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.split(',')
                .map(|v| v.trim().parse::<MonoidElem>().map_err(|_| usage(format!("bad map '{t}'"))))
                .collect::<CliResult<Vec<_>>>()
                .map(NAMap)
        })
        .collect()
}

fn connect_maps(u: &str, at: ActElem, theta: NAMap, phi: NAMap, inputs: Inputs) -> CliResult<Report> {
    let mut ctx = Ctx::open(&inputs)?;
    let a = ctx.act(&one_act(&inputs)?)?;
    let n = ctx.monoid(&one_monoid(&inputs)?)?;
    let u = parse_maps(u)?;
    let maps = MapSpace::new(n.order(), a.size())?;
    let in_space = |t: &NAMap| t.len() == a.size() && t.0.iter().all(|&v| v < n.order());
    if !u.iter().all(in_space) || !in_space(&theta) || !in_space(&phi) || at >= a.size() {
        return Err(Error::OutOfRange("maps must send A into N".into()).into());
    }
    match is_u_connected(&n, &maps, &u, at, &theta, &phi) {
        Some(cert) => {
            let replays = cert.replay(&n, &u, at, &theta, &phi).is_ok();
            let mut text = format!(
                "{theta} and {phi} are (U, {at})-connected in {} steps (replay: {})",
                cert.len(),
                if replays { "ok" } else { "FAILED" }
            );
            for s in &cert.steps {
                text.push_str(&format!("\n  {:?} u{} psi={}", s.mode, s.u_index, s.psi));
            }
            Ok(Report {
                status: if replays { 0 } else { 1 },
                value: json!({"verdict": "connected", "certificate": cert, "replays": replays}),
                text,
            })
        }
        None => Ok(Report {
            status: 1,
            value: json!({"verdict": "not_connected"}),
            text: format!("{theta} and {phi} are not (U, {at})-connected"),
        }),
    }
}

fn run_suite(family: &str, only: &[u8]) -> CliResult<Report> {
    if family != "small" {
        return Err(usage(format!("unknown family '{family}' (only 'small' exists)")));
    }
    let reports: Vec<CriterionReport> = if only.is_empty() {
        suite::run_all()
    } else {
        only.iter()
            .map(|&id| {
                suite::criterion(id)
                    .map(|c| c.run())
                    .ok_or_else(|| usage(format!("no criterion {id}")))
            })
            .collect::<CliResult<_>>()?
    };
    let passed = reports.iter().filter(|r| r.passed).count();
    let mut text: Vec<String> = reports.iter().map(CriterionReport::line).collect();
    text.push(format!("{passed}/{} criteria passed", reports.len()));
    Ok(Report {
        status: if passed == reports.len() { 0 } else { 1 },
        value: json!({"criteria": reports, "passed": passed, "total": reports.len()}),
        text: text.join("\n"),
    })
}
