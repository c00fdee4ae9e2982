use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use moduli_euler::genfun::{chibar_table, SeriesName, DEFAULT_ORDER};
use moduli_euler::open::{chi_open, Method};
use moduli_euler::oracle::{
    burnside_quotient, enumerate_stable_rooted_trees, GroupChoice, StableTree,
};
use moduli_euler::output::{write_records, Format, OutputRecord};
use moduli_euler::quotient::{QuotientKind, QuotientSpec};
use moduli_euler::verify::{self, Suite, VerifyOptions};
use moduli_euler::{Error, Rational};

/// Exact Euler characteristics of moduli spaces of pointed curves in genus
/// 0, 1 and 2.
#[derive(Parser)]
#[command(name = "moduli-euler", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristics of open or compactified moduli spaces.
    #[command(subcommand)]
    Chi(ChiCommand),
    /// Euler characteristic of a finite quotient.
    Quotient(QuotientArgs),
    /// Coefficients of a generating series.
    Series(SeriesArgs),
    /// Brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run self-checks; prints one line per check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Encoding {
    #[arg(long, value_enum, default_value_t = Encode::Table)]
    format: Encode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encode {
    Table,
    Json,
    Csv,
}

impl From<Encode> for Format {
    fn from(e: Encode) -> Format {
        match e {
            Encode::Table => Format::Table,
            Encode::Json => Format::Json,
            Encode::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum ChiCommand {
    /// chi(M_{g,n}).
    Open {
        #[arg(long)]
        genus: u8,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
        #[command(flatten)]
        out: Encoding,
    },
    /// chi(M-bar_{g,n}) for every stable n up to --max-n.
    Compact {
        #[arg(long)]
        genus: u8,
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        out: Encoding,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Strata,
    Recursive,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Strata => Method::Strata,
            MethodArg::Recursive => Method::Recursive,
        }
    }
}

#[derive(Args)]
struct QuotientArgs {
    /// m0-mod-sj, m0-mod-klein, m0-mod-d4, prod2-mod-s2, prod2-mod-s3,
    /// prod2-mod-klein, prod3-mod-klein, m1-mod-s2 or m1-cross-m0-mod-s2.
    kind: String,
    /// Marked-point counts of the factors.
    #[arg(required = true)]
    sizes: Vec<u32>,
    /// Number of permuted markings, for m0-mod-sj.
    #[arg(long)]
    j: Option<u32>,
    #[command(flatten)]
    out: Encoding,
}

#[derive(Args)]
struct SeriesArgs {
    /// D, E, K1, K2, K1_vertex, K1_loop or K2_type1 .. K2_type7.
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// `coeffs` prints [t^n]; `egf` prints n! [t^n].
    #[arg(long, value_enum, default_value_t = SeriesView::Coeffs)]
    format: SeriesView,
    #[arg(long, value_enum, default_value_t = Encode::Table)]
    output: Encode,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesView {
    Coeffs,
    Egf,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Point-count a quotient of M_{0,n} and evaluate at q = 1.
    Quotient {
        #[arg(long)]
        n: u32,
        /// klein, d4, sj:<j> or custom:<cycles>,<cycles>,...
        #[arg(long)]
        group: String,
        #[command(flatten)]
        out: Encoding,
    },
    /// Enumerate stable rooted trees on n leaves.
    Trees {
        #[arg(long)]
        n: u32,
        /// Also print every tree.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: Encoding,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// series-algebra, quotients-vs-oracle, strata, k1, k2, trees or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Random cases per randomized identity.
    #[arg(long, default_value_t = 500)]
    cases: usize,
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    seed: u64,
}

enum Failure {
    Usage(Error),
    Verification(usize),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(records: &[OutputRecord], out: Encode) -> Result<(), Failure> {
    let stdout = io::stdout();
    write_records(records, out.into(), stdout.lock())?;
    Ok(())
}

fn chi(cmd: ChiCommand) -> Result<(), Failure> {
    match cmd {
        ChiCommand::Open { genus, n, method, out } => {
            let method = Method::from(method);
            let value = chi_open(genus, n, method)?;
            let provenance = match method {
                Method::Closed => "closed form",
                Method::Strata => "stratification by the hyperelliptic involution",
                Method::Recursive => "universal-curve recursion",
            };
            let record = OutputRecord::new("chi-open", value, provenance)
                .input("genus", genus)
                .input("n", n)
                .input("method", method.name());
            emit(&[record], out.format)
        }
        ChiCommand::Compact { genus, max_n, order, out } => {
            let provenance = format!("K{genus} closed form, order {order}");
            let records: Vec<_> = chibar_table(genus, max_n, order)?
                .into_iter()
                .map(|(n, v)| {
                    OutputRecord::new("chi-compact", v, provenance.clone())
                        .input("genus", genus)
                        .input("n", n)
                })
                .collect();
            emit(&records, out.format)
        }
    }
}

fn quotient(args: QuotientArgs) -> Result<(), Failure> {
    let kind: QuotientKind = args.kind.parse()?;
    let spec = QuotientSpec::new(kind, args.sizes.clone(), args.j)?;
    let mut record = OutputRecord::new("quotient", spec.chi()?, "quotient table").input("kind", kind.name());
    for (i, n) in args.sizes.iter().enumerate() {
        record = record.input(&format!("n{}", i + 1), *n);
    }
    if let Some(j) = args.j {
        record = record.input("j", j);
    }
    emit(&[record], args.out.format)
}

fn series(args: SeriesArgs) -> Result<(), Failure> {
    let name: SeriesName = args.name.parse()?;
    let s = name.compute(args.order)?;
    let (values, view) = match args.format {
        SeriesView::Coeffs => (s.coeffs().to_vec(), "coeffs"),
        SeriesView::Egf => (s.egf_values(), "egf"),
    };
    let records: Vec<_> = values
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            OutputRecord::new("series", v, format!("{name} to order {}", args.order))
                .input("name", name.to_string())
                .input("view", view)
                .input("k", k)
        })
        .collect();
    emit(&records, args.output)
}

fn oracle(cmd: OracleCommand) -> Result<(), Failure> {
    match cmd {
        OracleCommand::Quotient { n, group, out } => {
            let choice: GroupChoice = group.parse()?;
            let action = choice.action(n)?;
            let b = burnside_quotient(&action)?;
            b.check_counts()?;
            let provenance = "twisted Burnside point count at q = 1";
            let records = [
                OutputRecord::new("oracle-quotient", b.chi.clone(), provenance)
                    .input("n", n)
                    .input("group", choice.to_string())
                    .input("order", action.order()),
                OutputRecord::list("oracle-polynomial", b.polynomial.coeffs().to_vec(), "coefficients of P(q), constant first")
                    .input("n", n)
                    .input("group", choice.to_string())
                    .input("order", action.order()),
            ];
            emit(&records, out.format)
        }
        OracleCommand::Trees { n, list, out } => {
            let trees = enumerate_stable_rooted_trees(n)?;
            if list {
                let mut stdout = io::stdout().lock();
                for t in &trees {
                    writeln!(stdout, "{t}")?;
                }
            }
            let sum: Rational = trees.iter().map(StableTree::contribution).sum();
            let records = [
                OutputRecord::new("tree-count", Rational::from(trees.len() as i64), "explicit enumeration").input("n", n),
                OutputRecord::new("tree-contribution-sum", sum, "explicit enumeration").input("n", n),
            ];
            emit(&records, out.format)
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse()?;
    let options = VerifyOptions {
        order: args.order,
        cases: args.cases,
        seed: args.seed,
    };
    let report = verify::run(suite, &options);
    let mut stdout = io::stdout().lock();
    for check in &report.checks {
        writeln!(stdout, "{check}")?;
    }
    let failed = report.failures().count();
    writeln!(stdout, "{} checks, {failed} failed", report.checks.len())?;
    if failed > 0 {
        return Err(Failure::Verification(failed));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Chi(cmd) => chi(cmd),
        Command::Quotient(args) => quotient(args),
        Command::Series(args) => series(args),
        Command::Oracle(cmd) => oracle(cmd),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(n)) => {
            eprintln!("verification failed: {n} check(s)");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
