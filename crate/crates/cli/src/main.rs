use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use braid3_core::enumeration::{
    braid_index_check_pretzel, enumerate_minimal_with, genus_census, realizable_3braid, Outcome,
    DEFAULT_MAX_BANDS, MAX_BANDS_ENV,
};
use braid3_core::hecke::{homfly_at_point, FP_MODULUS, FP_V, FP_Z};
use braid3_core::knot_table::make_table;
use braid3_core::xu::{genus, is_strongly_quasipositive};
use braid3_core::{
    homfly, pretzel_homfly, reduce, report, torus_homfly, BraidWord, Error, KnotTable, LaurentPoly2,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "braid3", version, about = "Invariants of closed 3-braids")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Report timing on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal band word, Euler characteristic and genus of the closure.
    Reduce { word: BraidWord },
    /// Skein polynomial of the closure.
    Homfly {
        word: BraidWord,
        /// Print the value at the fixed evaluation point of GF(2^61 - 1)
        /// instead of the polynomial.
        #[arg(long)]
        at_point: bool,
    },
    /// Full invariant report.
    Invariants { word: BraidWord },
    /// List minimal words up to rotation and index shift.
    Enumerate {
        #[arg(long, env = MAX_BANDS_ENV, default_value_t = DEFAULT_MAX_BANDS)]
        max_bands: usize,
        /// Only this length (default: every length up to the cap).
        #[arg(long)]
        length: Option<usize>,
        /// Knot census of this genus, grouped by polynomial.
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Decide whether a polynomial belongs to a closed 3-braid.
    CheckPoly {
        #[arg(long)]
        poly: LaurentPoly2,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, env = MAX_BANDS_ENV, default_value_t = DEFAULT_MAX_BANDS)]
        max_bands: usize,
    },
    /// Skein polynomial of the (2, k) torus link.
    Torus {
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Skein polynomial of a pretzel link with parallel twists.
    Pretzel {
        #[arg(required = true, num_args = 1.., value_delimiter = ',')]
        twists: Vec<i64>,
    },
    /// Write a reference table computed from built-in braid representatives.
    MakeTable {
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn structured<T: Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))
}

fn check_cap(max_bands: usize) -> Result<(), Error> {
    if max_bands == 0 {
        return Err(Error::Domain("--max-bands must be positive".into()));
    }
    Ok(())
}

/// The table at `path`, or the built-in reference table.
fn load_table(path: &Option<PathBuf>) -> Result<Option<KnotTable>, Error> {
    match path {
        Some(p) => KnotTable::load(p).map(Some),
        None => Ok(Some(make_table())),
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let fmt = cli.format;
    match cli.command {
        Command::Reduce { word } => {
            let nf = reduce(&word);
            let chi = nf.euler_characteristic();
            let genus = genus(&word);
            let qp = is_strongly_quasipositive(&word);
            if fmt == Format::Structured {
                return structured(&json!({
                    "word": word,
                    "kind": nf.kind,
                    "left": nf.left,
                    "twist": nf.twist,
                    "right": nf.right,
                    "minimal_word": nf.minimal_word,
                    "minimal_length": nf.minimal_length(),
                    "conjugator": nf.conjugator,
                    "chi": chi,
                    "components": word.closure_components(),
                    "genus": genus,
                    "quasipositive": qp,
                }));
            }
            let mut out = String::new();
            writeln!(out, "kind: {}", nf.kind).unwrap();
            writeln!(out, "L: {}", nf.left).unwrap();
            writeln!(out, "k: {}", nf.twist).unwrap();
            writeln!(out, "R: {}", nf.right).unwrap();
            writeln!(out, "minimal word: {}", nf.minimal_word).unwrap();
            writeln!(out, "minimal length: {}", nf.minimal_length()).unwrap();
            writeln!(out, "chi: {chi}").unwrap();
            writeln!(out, "genus: {genus}").unwrap();
            write!(out, "quasipositive: {qp}").unwrap();
            Ok(out)
        }
        Command::Homfly { word, at_point } => {
            if at_point {
                let value = homfly_at_point(&word).0;
                return Ok(match fmt {
                    Format::Structured => structured(&json!({
                        "word": word,
                        "v": FP_V,
                        "z": FP_Z,
                        "modulus": FP_MODULUS,
                        "value": value,
                    }))?,
                    Format::Text => value.to_string(),
                });
            }
            let p = homfly(&word);
            match fmt {
                Format::Structured => structured(&json!({ "word": word, "homfly": p })),
                Format::Text => Ok(p.to_string()),
            }
        }
        Command::Invariants { word } => {
            let r = report(&word)?;
            if fmt == Format::Structured {
                return structured(&r);
            }
            let mut out = String::new();
            writeln!(out, "word: {}", r.word).unwrap();
            writeln!(out, "minimal word: {}", r.normal_form.minimal_word).unwrap();
            writeln!(out, "kind: {}", r.normal_form.kind).unwrap();
            writeln!(out, "minimal length: {}", r.minimal_length).unwrap();
            writeln!(out, "chi: {}", r.chi).unwrap();
            writeln!(out, "components: {}", r.components).unwrap();
            writeln!(out, "genus: {}", r.genus).unwrap();
            writeln!(out, "quasipositive: {}", r.quasipositive).unwrap();
            writeln!(out, "homfly: {}", r.homfly).unwrap();
            writeln!(out, "max deg_z: {}", r.max_deg_z).unwrap();
            writeln!(out, "min deg_v: {}", r.min_deg_v).unwrap();
            writeln!(out, "max deg_v: {}", r.max_deg_v).unwrap();
            writeln!(out, "leading class: {}", r.leading_class).unwrap();
            writeln!(out, "mwf bound: {}", r.mwf_lower_bound).unwrap();
            writeln!(out, "conway: {}", r.conway).unwrap();
            write!(out, "alexander: {}", r.alexander).unwrap();
            Ok(out)
        }
        Command::Enumerate {
            max_bands,
            length,
            genus,
            table,
        } => {
            check_cap(max_bands)?;
            let table = load_table(&table)?;
            if let Some(g) = genus {
                let classes = genus_census(g, table.as_ref(), max_bands)?;
                if fmt == Format::Structured {
                    return structured(&classes);
                }
                let mut out = String::from("polynomial,name,words");
                for c in classes {
                    let words: Vec<String> = c.words.iter().map(|w| w.to_string()).collect();
                    write!(
                        out,
                        "\n{},{},{}",
                        c.homfly,
                        c.matched_name.unwrap_or_default(),
                        words.join(" ; ")
                    )
                    .unwrap();
                }
                return Ok(out);
            }
            let lengths: Vec<usize> = match length {
                Some(n) => vec![n],
                None => (0..=max_bands).collect(),
            };
            let mut entries = Vec::new();
            for n in lengths {
                entries.extend(enumerate_minimal_with(n, max_bands, table.as_ref())?);
            }
            if fmt == Format::Structured {
                return structured(&entries);
            }
            let mut out = String::from("word,kind,chi,components,genus,homfly,name");
            for e in entries {
                write!(
                    out,
                    "\n{},{},{},{},{},{},{}",
                    e.canonical_word,
                    e.kind,
                    e.chi,
                    e.components,
                    e.genus,
                    e.homfly,
                    e.matched_name.unwrap_or_default()
                )
                .unwrap();
            }
            Ok(out)
        }
        Command::CheckPoly {
            poly,
            table,
            max_bands,
        } => {
            check_cap(max_bands)?;
            let table = load_table(&table)?;
            let verdict = realizable_3braid(&poly, table.as_ref(), max_bands)?;
            if fmt == Format::Structured {
                return structured(&verdict);
            }
            let mut out = verdict.to_string();
            if let Outcome::Realizable { witness } = &verdict.outcome {
                write!(out, "\nwitness: {witness}\nhomfly: {}", homfly(witness)).unwrap();
            }
            Ok(out)
        }
        Command::Torus { k } => {
            let p = torus_homfly(k);
            match fmt {
                Format::Structured => structured(&json!({ "k": k, "homfly": p })),
                Format::Text => Ok(p.to_string()),
            }
        }
        Command::Pretzel { twists } => {
            let p = pretzel_homfly(&twists)?;
            let check = match twists.as_slice() {
                &[a, b, c, d] if twists.iter().all(|&x| x >= 1) => {
                    Some(braid_index_check_pretzel(a, b, c, d)?)
                }
                _ => None,
            };
            if fmt == Format::Structured {
                return structured(&json!({ "twists": twists, "homfly": p, "degrees": check }));
            }
            let mut out = p.to_string();
            if let Some(c) = check {
                write!(
                    out,
                    "\nchi: {}\nmin deg_v: {}\nmax deg_v: {}\nmwf bound: {}",
                    c.chi, c.min_deg_v, c.max_deg_v, c.mwf_lower_bound
                )
                .unwrap();
            }
            Ok(out)
        }
        Command::MakeTable { output } => {
            let table = make_table();
            match output {
                Some(path) => {
                    table.save(&path)?;
                    Ok(format!(
                        "wrote {} entries to {}",
                        table.len(),
                        path.display()
                    ))
                }
                None => Ok(table.render().trim_end().to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let verbose = cli.verbose;
    let start = Instant::now();
    let result = run(cli);
    if verbose > 0 {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
