use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kfact::enumerate::{count_formula, k_factorizations, k_forests, k_parking_functions};
use kfact::verify::{run_suites, Suite};
use kfact::{
    jcdal, jcdal_inverse, least_entries, least_entries_inverse, Error, KFactorization, KForest,
    ParkingFunction,
};

mod render;

#[derive(Parser)]
#[command(
    name = "kfact",
    version,
    about = "Minimal k-factorizations, k-forests and k-parking functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map an object to its counterpart in another family.
    Convert {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print every statistic of an object.
    Stats {
        #[arg(long = "type")]
        kind: Kind,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print (kn+1)^(n-1).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also enumerate the factorizations and print how many there are.
        #[arg(long)]
        enumerate: bool,
    },
    /// Run exhaustive checks on one (n, k) cell.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every object of one family, one per line.
    Enumerate {
        #[arg(long)]
        what: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the arch diagram of a factorization (of its lower form when k > 1).
    Render {
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        /// Add the dual tree (dashed in SVG).
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(clap::Args)]
struct IoArgs {
    /// Read from this file instead of standard input.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Write to this file instead of standard output.
    #[arg(long = "out")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Fact,
    Forest,
    Parking,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

enum Object {
    Fact(KFactorization),
    Forest(KForest),
    Parking(ParkingFunction),
}

impl Object {
    fn k(&self) -> usize {
        match self {
            Object::Fact(f) => f.k(),
            Object::Forest(f) => f.k(),
            Object::Parking(p) => p.k(),
        }
    }

    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Object::Fact(f), Format::Text) => f.to_text(),
            (Object::Fact(f), Format::Json) => f.to_json(),
            (Object::Forest(f), Format::Text) => f.to_text(),
            (Object::Forest(f), Format::Json) => f.to_json(),
            (Object::Parking(p), Format::Text) => p.to_text(),
            (Object::Parking(p), Format::Json) => p.to_json(),
        }
    }
}

enum Failure {
    Lib(Error),
    Io(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("kfact: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("kfact: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Convert {
            from,
            to,
            k,
            io,
            format,
        } => {
            let object = parse_object(from, k, &read_input(&io)?)?;
            let converted = convert(object, to)?;
            write_output(&io, &converted.render(format))
        }
        Command::Stats {
            kind,
            k,
            io,
            format,
        } => {
            let object = parse_object(kind, k, &read_input(&io)?)?;
            write_output(&io, &stats(&object, format))
        }
        Command::Count { n, k, enumerate } => {
            if k == 0 {
                return Err(Error::ZeroK.into());
            }
            let mut out = count_formula(n, k).to_string();
            if enumerate {
                out.push_str(&format!("\nenumerated={}", k_factorizations(n, k).count()));
            }
            print_line(&out)
        }
        Command::Verify {
            n,
            k,
            suite,
            jobs,
            format,
        } => {
            if k == 0 {
                return Err(Error::ZeroK.into());
            }
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let reports = run_suites(n, k, &suites, jobs);
            let lines: Vec<String> = match format {
                Format::Text => reports.iter().flat_map(|r| r.to_lines()).collect(),
                Format::Json => reports.iter().map(|r| r.to_json()).collect(),
            };
            print_line(&lines.join("\n"))?;
            if reports.iter().all(|r| r.passed()) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Enumerate { what, n, k, format } => {
            if k == 0 {
                return Err(Error::ZeroK.into());
            }
            let objects: Box<dyn Iterator<Item = Object>> = match what {
                Kind::Fact => Box::new(k_factorizations(n, k).map(Object::Fact)),
                Kind::Forest => Box::new(k_forests(n, k).map(Object::Forest)),
                Kind::Parking => Box::new(k_parking_functions(n, k).map(Object::Parking)),
            };
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            for object in objects {
                writeln!(out, "{}", object.render(format))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Render { format, dual, io } => {
            let f = parse_fact(&read_input(&io)?, None)?;
            let drawn = if f.k() == 1 { f } else { f.lower() };
            let picture = match format {
                RenderFormat::Ascii => render::ascii(&drawn, dual)?,
                RenderFormat::Svg => render::svg(&drawn, dual)?,
            };
            write_output(&io, picture.trim_end())
        }
    }
}

fn read_input(io: &IoArgs) -> Result<String, Failure> {
    match &io.input {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(io: &IoArgs, body: &str) -> Result<(), Failure> {
    match &io.output {
        Some(path) => fs::write(path, format!("{body}\n"))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => print_line(body),
    }
}

fn print_line(body: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    writeln!(out, "{body}")?;
    Ok(())
}

fn is_json(s: &str) -> bool {
    s.trim_start().starts_with('{')
}

fn check_k(object: Object, k: Option<usize>) -> Result<Object, Error> {
    match k {
        Some(k) if k != object.k() => Err(Error::WrongArity {
            expected: k,
            found: object.k(),
        }),
        _ => Ok(object),
    }
}

fn parse_fact(s: &str, k: Option<usize>) -> Result<KFactorization, Error> {
    let f = if is_json(s) {
        KFactorization::from_json(s)?
    } else {
        KFactorization::from_text(s)?
    };
    match check_k(Object::Fact(f), k)? {
        Object::Fact(f) => Ok(f),
        _ => unreachable!(),
    }
}

/// JSON is recognised by a leading `{`; otherwise the text form of `kind` is
/// expected. A `--k` that disagrees with the object is an error.
fn parse_object(kind: Kind, k: Option<usize>, s: &str) -> Result<Object, Error> {
    let text_k = k.unwrap_or(1);
    let object = match kind {
        Kind::Fact => Object::Fact(parse_fact(s, k)?),
        Kind::Forest if is_json(s) => Object::Forest(KForest::from_json(s)?),
        Kind::Forest => Object::Forest(KForest::from_text(s, text_k)?),
        Kind::Parking if is_json(s) => Object::Parking(ParkingFunction::from_json(s)?),
        Kind::Parking => Object::Parking(ParkingFunction::from_text(s, text_k)?),
    };
    check_k(object, k)
}

fn convert(object: Object, to: Kind) -> Result<Object, Error> {
    let fact = match object {
        Object::Fact(f) => f,
        Object::Forest(f) if to == Kind::Forest => return Ok(Object::Forest(f)),
        Object::Forest(f) => jcdal_inverse(&f)?,
        Object::Parking(p) if to == Kind::Parking => return Ok(Object::Parking(p)),
        Object::Parking(p) => least_entries_inverse(&p)?,
    };
    Ok(match to {
        Kind::Fact => Object::Fact(fact),
        Kind::Forest => Object::Forest(jcdal(&fact)?),
        Kind::Parking => Object::Parking(least_entries(&fact)),
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn stats(object: &Object, format: Format) -> String {
    match (object, format) {
        (Object::Fact(f), Format::Json) => {
            let a = f.area_stats();
            json!({
                "k": f.k(),
                "n": f.n(),
                "area": a.area,
                "coarea": a.coarea,
                "semiarea": a.semiarea,
                "cosemiarea": a.cosemiarea,
                "least": f.least_entries(),
                "widths": f.widths(),
            })
            .to_string()
        }
        (Object::Fact(f), Format::Text) => {
            let a = f.area_stats();
            [
                format!("k={}", f.k()),
                format!("n={}", f.n()),
                format!("area={}", a.area),
                format!("coarea={}", a.coarea),
                format!("semiarea={}", a.semiarea),
                format!("cosemiarea={}", a.cosemiarea),
                format!("least={}", join(&f.least_entries())),
                format!("widths={}", join(&f.widths())),
            ]
            .join("\n")
        }
        (Object::Forest(f), Format::Json) => {
            serde_json::to_string(&f.stats()).expect("stats serialize")
        }
        (Object::Forest(f), Format::Text) => {
            let s = f.stats();
            [
                format!("k={}", s.k),
                format!("n={}", f.n()),
                format!("components={}", s.components),
                format!("dep={}", s.dep),
                format!("maj={}", s.maj),
                format!("comaj={}", s.comaj),
                format!("inv={}", s.inv),
                format!("coinv={}", s.coinv),
                format!("chr={}", s.chr),
                format!("cochr={}", s.cochr),
                format!("maj_k={}", s.maj_k),
                format!("comaj_k={}", s.comaj_k),
                format!("inv_k={}", s.inv_k),
                format!("coinv_k={}", s.coinv_k),
                format!("hook={}", join(&s.hook)),
                format!("hook_left={}", join(&s.hook_left)),
                format!("hook_right={}", join(&s.hook_right)),
            ]
            .join("\n")
        }
        (Object::Parking(p), Format::Json) => {
            json!({"k": p.k(), "n": p.n(), "disp": p.disp()}).to_string()
        }
        (Object::Parking(p), Format::Text) => {
            format!("k={}\nn={}\ndisp={}", p.k(), p.n(), p.disp())
        }
    }
}
