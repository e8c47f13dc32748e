use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lcsmbqc::kgroup::{dihedral_check, DEFAULT_BUDGET};
use lcsmbqc::lcs::{
    lcs_from_mbqc, mermin_fixtures, mermin_star_lcs, qudit_star_family, GeneratorAssignment,
};
use lcsmbqc::mbqc::{
    contextuality_witness, qubit_star_spec, qudit_star_closed_form, qudit_star_spec, OutputTable,
};
use lcsmbqc::{
    check_solution_conditions, maximal_p_torsion_abelian, output_table, phi, reduce_to_classical,
    run_suite, Lcs, MbqcSpec, Suite, TensorElement, Torus, Variant, VerifyConfig,
};

#[derive(Parser)]
#[command(name = "lcsmbqc", version, about = "Linear constraint systems from qudit MBQC")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap on enumerated elements or pairs.
    #[arg(long, global = true, env = "LCSMBQC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for randomized properties.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report (or CSV table) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the maximal p-torsion abelian subgroups of K.
    Subgroups {
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
    /// Project a p-torsion tensor element onto the Heisenberg-Weyl group.
    Phi {
        #[arg(long, value_enum, default_value_t = VariantArg::Proof)]
        variant: VariantArg,
        /// TensorElement JSON; `-` reads standard input.
        #[arg(long)]
        input: PathBuf,
    },
    #[command(subcommand)]
    Mbqc(MbqcCmd),
    #[command(subcommand)]
    Lcs(LcsCmd),
    /// Worked examples with their expected verdicts.
    Demo {
        name: DemoName,
        #[arg(long, default_value_t = 3)]
        p: u32,
    },
    /// Run a property suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Proof)]
        variant: VariantArg,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

#[derive(Subcommand)]
enum MbqcCmd {
    /// Simulate a computation spec and print its output table.
    Run {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Simulate one of the star computations.
    Demo {
        name: StarName,
        #[arg(long, default_value_t = 3)]
        p: u32,
    },
}

#[derive(Subcommand)]
enum LcsCmd {
    /// Solve Ax = b over Z_d classically.
    Solve {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check an operator assignment against the solution conditions.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
    /// Build the system of a computation from its simulated outputs.
    FromMbqc {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Reduce a quantum solution to a classical one.
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum DemoName {
    MerminSquare,
    MerminStar,
    QuditStar,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum StarName {
    QuditStar,
    QubitStar,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum VariantArg {
    Proof,
    Displayed,
    Naive,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Proof => Variant::Proof,
            VariantArg::Displayed => Variant::Displayed,
            VariantArg::Naive => Variant::Naive,
        }
    }
}

/// Embedded in every JSON report.
#[derive(Serialize)]
struct RunConfig {
    command: String,
    budget: u64,
    seed: u64,
    #[serde(flatten)]
    args: serde_json::Value,
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    config: RunConfig,
    passed: bool,
    result: T,
}

struct Ctx {
    budget: u64,
    seed: u64,
    out: Option<PathBuf>,
}

impl Ctx {
    fn report<T: Serialize>(&self, command: &str, args: serde_json::Value, passed: bool, result: T) -> anyhow::Result<bool> {
        if let Some(path) = &self.out {
            let r = Report {
                config: RunConfig { command: command.into(), budget: self.budget, seed: self.seed, args },
                passed,
                result,
            };
            fs::write(path, serde_json::to_string_pretty(&r)? + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(passed)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_table(t: &OutputTable) {
    print!("{}", t.to_csv());
}

fn subgroups(ctx: &Ctx, p: u32, m: u32) -> anyhow::Result<bool> {
    let torus = Torus::new(p, m)?;
    let rep = maximal_p_torsion_abelian(torus, ctx.budget)?;
    println!("K over T_({}) at p = {p}: {} elements, {} p-torsion", p.pow(m), rep.group_order, rep.torsion_count);
    println!("center order: {}", rep.center_order);
    println!(
        "maximal p-torsion abelian subgroups: {} ({} torus, {} center-and-shift, {} other)",
        rep.subgroup_count, rep.torus_p_count, rep.center_and_shift_count, rep.other_count
    );
    let mut ok = rep.classification_holds();
    println!("classification: {}", verdict(ok));
    let dihedral = if p == 2 {
        let d = dihedral_check(m)?;
        println!("dihedral relations: {}", verdict(d.holds()));
        ok &= d.holds();
        Some(d)
    } else {
        None
    };
    let result = serde_json::json!({ "subgroups": rep, "dihedral": dihedral });
    ctx.report("subgroups", serde_json::json!({ "p": p, "m": m }), ok, result)
}

fn star_table(ctx: &Ctx, name: StarName, p: u32) -> anyhow::Result<bool> {
    let spec = match name {
        StarName::QubitStar => qubit_star_spec(),
        StarName::QuditStar => {
            if p == 2 {
                bail!("the qudit star needs an odd prime; use qubit-star for p = 2");
            }
            qudit_star_spec(p)?
        }
    };
    let table = output_table(&spec)?;
    print_table(&table);
    let witness = contextuality_witness(&table)?;
    println!("o(i) = {}", witness.polynomial);
    println!("degree {}: {}", witness.degree, if witness.contextual { "contextual" } else { "not contextual" });
    let mut ok = table.is_deterministic() && witness.contextual;
    if let StarName::QuditStar = name {
        let matches = table
            .rows
            .iter()
            .all(|r| r.output == Some(qudit_star_closed_form(p, r.input[0], r.input[1])));
        println!("closed form: {}", verdict(matches));
        ok &= matches;
    }
    let result = serde_json::json!({ "table": table, "witness": witness });
    ctx.report("mbqc demo", serde_json::json!({ "name": name, "p": spec.p() }), ok, result)
}

fn mbqc_run(ctx: &Ctx, spec_path: &Path) -> anyhow::Result<bool> {
    let spec: MbqcSpec = read_json(spec_path)?;
    let table = output_table(&spec)?;
    match &ctx.out {
        Some(path) => {
            fs::write(path, table.to_csv()).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print_table(&table),
    }
    if table.is_deterministic() {
        let w = contextuality_witness(&table)?;
        eprintln!("deterministic; degree {} ({})", w.degree, if w.contextual { "contextual" } else { "not contextual" });
    } else {
        eprintln!("not deterministic on every input");
    }
    Ok(true)
}

fn lcs_cmd(ctx: &Ctx, cmd: &LcsCmd) -> anyhow::Result<bool> {
    match cmd {
        LcsCmd::Solve { input } => {
            let s: Lcs = read_json(input)?;
            let x = s.solve_classical()?;
            match &x {
                Some(x) => println!("classical: {x:?}"),
                None => println!("classical: NONE"),
            }
            ctx.report("lcs solve", serde_json::json!({ "input": input }), true, x)
        }
        LcsCmd::Check { input, assignment } => {
            let s: Lcs = read_json(input)?;
            let g: GeneratorAssignment = read_json(assignment)?;
            let rep = check_solution_conditions(&s, &g)?;
            println!("torsion: {}", verdict(rep.torsion));
            println!("commutativity: {}", verdict(rep.commutativity));
            println!("constraints: {}", verdict(rep.constraints));
            for f in &rep.failures {
                println!("  {f}");
            }
            let args = serde_json::json!({ "input": input, "assignment": assignment });
            ctx.report("lcs check", args, rep.is_quantum_solution(), rep)
        }
        LcsCmd::FromMbqc { spec } => {
            let sp: MbqcSpec = read_json(spec)?;
            let table = output_table(&sp)?;
            let s = lcs_from_mbqc(&sp, &table)?;
            println!("{}", serde_json::to_string(&s)?);
            ctx.report("lcs from-mbqc", serde_json::json!({ "spec": spec }), true, s)
        }
        LcsCmd::Reduce { input, assignment } => {
            let s: Lcs = read_json(input)?;
            let g: GeneratorAssignment = read_json(assignment)?;
            let red = reduce_to_classical(&s, &g)?;
            println!("x = {:?}", red.x);
            println!("classical check: {}", verdict(red.classical_ok));
            println!("images solve the system: {}", verdict(red.image_report.is_quantum_solution()));
            let ok = red.classical_ok && red.image_report.is_quantum_solution();
            let args = serde_json::json!({ "input": input, "assignment": assignment });
            ctx.report("lcs reduce", args, ok, red)
        }
    }
}

fn demo(ctx: &Ctx, name: DemoName, p: u32) -> anyhow::Result<bool> {
    match name {
        DemoName::MerminSquare => {
            let f = mermin_fixtures();
            println!("{}", serde_json::to_string(&f.square)?);
            let x = f.square.solve_classical()?;
            let rep = check_solution_conditions(&f.square, &f.square_assignment)?;
            let classical = match &x {
                Some(x) => format!("{x:?}"),
                None => "NONE".into(),
            };
            println!("classical: {classical}, quantum: {}", verdict(rep.is_quantum_solution()));
            let ok = x.is_none() && rep.is_quantum_solution();
            ctx.report("demo", serde_json::json!({ "name": name }), ok, serde_json::json!({ "classical": x, "quantum": rep }))
        }
        DemoName::MerminStar => {
            let displayed = mermin_star_lcs();
            println!("{}", serde_json::to_string(&displayed)?);
            let x = displayed.solve_classical()?;
            println!("classical: {}", if x.is_none() { "NONE".to_string() } else { format!("{x:?}") });
            let table = output_table(&qubit_star_spec())?;
            print_table(&table);
            let outputs = table.outputs()?;
            let expected: Vec<u32> = displayed.b.clone();
            let matches = outputs == expected;
            println!("simulated o = {outputs:?}, displayed o = {expected:?}: {}", verdict(matches));
            let w = contextuality_witness(&table)?;
            println!("o(i) = {} (degree {})", w.polynomial, w.degree);
            let ok = x.is_none() && matches && w.contextual;
            let result = serde_json::json!({ "classical": x, "table": table, "witness": w });
            ctx.report("demo", serde_json::json!({ "name": name }), ok, result)
        }
        DemoName::QuditStar => {
            if p == 2 {
                bail!("the qudit star needs an odd prime");
            }
            let fam = qudit_star_family(p)?;
            print_table(&fam.table);
            let w = contextuality_witness(&fam.table)?;
            println!("o(i) = {}", w.polynomial);
            println!("degree {}: {}", w.degree, if w.contextual { "contextual" } else { "not contextual" });
            println!("classical: {}", if fam.classical_solution.is_none() { "NONE".to_string() } else { format!("{:?}", fam.classical_solution) });
            println!("torsion: {}", verdict(fam.torsion));
            println!("constraints on GHZ: {}", verdict(fam.ghz_constraints));
            println!("commute on GHZ: {}", verdict(fam.commute_on_ghz));
            match &fam.noncommuting_pair {
                Some((a, b)) => println!("operators for inputs {a:?} and {b:?} do not commute"),
                None => println!("all operators commute"),
            }
            let closed = fam
                .table
                .rows
                .iter()
                .all(|r| r.output == Some(qudit_star_closed_form(p, r.input[0], r.input[1])));
            let ok = w.contextual && closed && fam.classical_solution.is_none() && fam.dichotomy_holds();
            let result = serde_json::json!({ "family": fam, "witness": w });
            ctx.report("demo", serde_json::json!({ "name": name, "p": p }), ok, result)
        }
    }
}

fn verify(ctx: &Ctx, suite: &str, config: VerifyConfig) -> anyhow::Result<bool> {
    let suite: Suite = suite.parse()?;
    let rep = run_suite(suite, &config)?;
    for r in &rep.results {
        print!("{} {} ({}/{} failed)", verdict(r.passed), r.name, r.failures, r.checked);
        if !r.detail.is_empty() {
            print!(" {}", r.detail);
        }
        println!();
        if let Some(c) = &r.counterexample {
            println!("    counterexample: {c}");
        }
    }
    println!("suite {suite}: {}", verdict(rep.passed));
    if let Some(path) = &ctx.out {
        fs::write(path, serde_json::to_string_pretty(&rep)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(rep.passed)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let ctx = Ctx { budget: cli.budget, seed: cli.seed, out: cli.out };
    if ctx.budget == 0 {
        bail!("--budget must be positive");
    }
    match cli.command {
        Command::Subgroups { p, m } => subgroups(&ctx, p, m),
        Command::Phi { variant, input } => {
            let e: TensorElement = read_json(&input)?;
            let h = phi(&e, variant.into())?;
            println!("{}", serde_json::to_string(&h)?);
            ctx.report("phi", serde_json::json!({ "variant": variant, "input": input }), true, h)
        }
        Command::Mbqc(MbqcCmd::Run { spec }) => mbqc_run(&ctx, &spec),
        Command::Mbqc(MbqcCmd::Demo { name, p }) => star_table(&ctx, name, p),
        Command::Lcs(cmd) => lcs_cmd(&ctx, &cmd),
        Command::Demo { name, p } => demo(&ctx, name, p),
        Command::Verify { suite, p, m, n, variant, samples } => {
            let config = VerifyConfig {
                p,
                m,
                n,
                variant: variant.into(),
                budget: ctx.budget,
                seed: ctx.seed,
                samples,
            };
            verify(&ctx, &suite, config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
