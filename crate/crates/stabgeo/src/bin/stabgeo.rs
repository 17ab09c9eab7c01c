use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stabgeo::bench::{bench_inner, BenchRow, Reference};
use stabgeo::census::{
    angle_histogram, evading_state, local_search, max_overlap, overlap_to_f64, search_target,
    verify_two_qubit_table, CountReport, ENUM_LIMIT, TWO_QUBIT_TABLE,
};
use stabgeo::clifford::measure;
use stabgeo::geometry::{
    bivector, inner_product_abs, inner_product_complex, nearest_neighbors, orthogonalize, wedge_norm,
    StabilizerSum,
};
use stabgeo::synth::basis_norm_circuit;
use stabgeo::{Cyclo, Error, StabilizerMatrix};

#[derive(Parser)]
#[command(name = "stabgeo", version, about = "Stabilizer states, their geometry and census")]
struct Cli {
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum RefArg {
    Random,
    Ghz,
    Zero,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the canonical form of a matrix file.
    Canon { file: PathBuf },
    /// Basis-normalization circuit and the basis state it reaches.
    Synth { file: PathBuf },
    /// Inner product of two states.
    Inner {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        complex: bool,
    },
    /// Wedge product norm and, when one exists, the bivector state.
    Wedge { a: PathBuf, b: PathBuf },
    /// Rewrite a sum of states as a sum of pairwise orthogonal states.
    Ortho { file: PathBuf },
    /// States at the smallest nonzero angle.
    Neighbors { file: PathBuf },
    /// Enumerate all states on `n` qubits.
    Enum {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Check the built-in two-qubit table against the enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Distribution of angles to |0...0>.
    Hist {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Greedy nearest-neighbor ascent towards (1+eps)|0...0> + sum of the rest.
    Localsearch {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "1")]
        eps: String,
    },
    /// Best stabilizer overlap of (|00>+|01>+|10>)^(⊗m).
    Evade {
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Time inner products between random states.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 20, 40, 80])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1.2])]
        beta: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = RefArg::Random)]
        reference: RefArg,
    },
    /// Measure one qubit (1-based) in the Z basis.
    Measure {
        file: PathBuf,
        #[arg(long)]
        qubit: usize,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Out = Result<String, Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn matrix(path: &PathBuf) -> Result<StabilizerMatrix, Failure> {
    Ok(StabilizerMatrix::parse_text(&read(path)?)?)
}

fn rational(s: &str, line: usize) -> Result<BigRational, Error> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("bad number {s:?}") })
}

/// Terms start with `@ re [im]`, followed by the rows of the state.
fn parse_sum(text: &str) -> Result<StabilizerSum, Error> {
    let mut terms: Vec<(Cyclo, String, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('@') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let re = rational(parts.first().copied().unwrap_or("1"), idx + 1)?;
            let im = parts.get(1).map(|s| rational(s, idx + 1)).transpose()?;
            let mut c = Cyclo::from_rational(re);
            if let Some(im) = im {
                c = c + Cyclo::i_pow(1).scale(&im);
            }
            terms.push((c, String::new(), idx + 1));
        } else {
            let Some(t) = terms.last_mut() else {
                return Err(Error::Parse { line: idx + 1, msg: "row before the first '@' line".into() });
            };
            t.1.push_str(line);
            t.1.push('\n');
        }
    }
    let first = terms.first().ok_or(Error::Parse { line: 1, msg: "empty sum".into() })?;
    let n = StabilizerMatrix::parse_text(&first.1)?.num_qubits();
    let mut sum = StabilizerSum::new(n);
    for (c, rows, line) in terms {
        let m = StabilizerMatrix::parse_text(&rows).map_err(|e| match e {
            Error::Parse { line: l, msg } => Error::Parse { line: line + l, msg },
            e => e,
        })?;
        sum.insert(c, &m)?;
    }
    Ok(sum)
}

fn sum_text(sum: &StabilizerSum) -> String {
    sum.terms.iter().map(|(c, m)| format!("@ {c}\n{m}")).collect::<Vec<_>>().join("\n")
}

fn report_text(r: &CountReport, format: Format) -> String {
    match format {
        Format::Csv => format!("n,k,count,fraction\n{}\n", r.csv_rows().join("\n")),
        Format::Text => {
            let mut s = format!("n = {}, {} states\n", r.n, r.total);
            for (k, f) in r.fractions() {
                let count = k.map_or(&r.orthogonal, |k| &r.per_k[&k]);
                let label = k.map_or("orthogonal".to_string(), |k| format!("2^(-{k}/2)"));
                s += &format!("{label:>12} {count:>12} {:>8.2}%\n", 100.0 * num_traits::ToPrimitive::to_f64(&f).unwrap());
            }
            s
        }
    }
}

fn run(cli: &Cli) -> Out {
    let text = match &cli.cmd {
        Cmd::Canon { file } => matrix(file)?.canonicalize().to_string(),
        Cmd::Synth { file } => {
            let bn = basis_norm_circuit(&matrix(file)?)?;
            let bits: String = (0..bn.matrix.num_qubits())
                .map(|q| if bn.bits[q / 64] >> (q % 64) & 1 == 1 { '1' } else { '0' })
                .collect();
            format!("{}# maps to |{bits}>\n", bn.circuit)
        }
        Cmd::Inner { a, b, complex } => {
            let (a, b) = (matrix(a)?, matrix(b)?);
            let v = if *complex { inner_product_complex(&a, &b)? } else { inner_product_abs(&a, &b)? };
            format!("{v}\n")
        }
        Cmd::Wedge { a, b } => {
            let (a, b) = (matrix(a)?, matrix(b)?);
            let norm = wedge_norm(&a, &b)?;
            let state = bivector(&a, &b)?;
            format!("# norm {norm}\n{state}")
        }
        Cmd::Ortho { file } => sum_text(&orthogonalize(&parse_sum(&read(file)?)?)?),
        Cmd::Neighbors { file } => {
            let nb = nearest_neighbors(&matrix(file)?)?;
            let body: Vec<String> = nb.iter().map(|m| m.to_string()).collect();
            format!("# {} nearest neighbors\n{}", nb.len(), body.join("\n"))
        }
        Cmd::Enum { n, verify } => {
            if *verify {
                if *n != 2 {
                    return Err(Failure::Usage("--verify applies to n = 2".into()));
                }
                let problems = verify_two_qubit_table(TWO_QUBIT_TABLE)?;
                if !problems.is_empty() {
                    return Err(Failure::Lib(Error::Domain(problems.join("\n"))));
                }
                "all 60 table rows match\n".to_string()
            } else {
                let states = stabgeo::census::enumerate_states(*n)?;
                let body: Vec<String> = states.iter().map(|m| m.to_string()).collect();
                format!("# {} states\n{}", states.len(), body.join("\n"))
            }
        }
        Cmd::Hist { n } => {
            let r = if *n <= ENUM_LIMIT {
                angle_histogram(*n, &StabilizerMatrix::zero_state(*n))?
            } else {
                CountReport::from_formulas(*n as u32)
            };
            report_text(&r, cli.format)
        }
        Cmd::Localsearch { n, eps } => {
            let eps = rational(eps, 0).map_err(|_| Failure::Usage(format!("bad --eps {eps:?}")))?;
            let target = search_target(*n, &eps);
            let path = local_search(&target, &StabilizerMatrix::zero_state(*n))?;
            let mut s = String::new();
            for (i, step) in path.iter().enumerate() {
                s += &format!("# step {i}, overlap {:.6}\n{}", overlap_to_f64(&step.overlap), step.state);
            }
            s
        }
        Cmd::Evade { m } => {
            let (o, best) = max_overlap(&evading_state(*m))?;
            format!("# squared overlap {} + {}*sqrt(2), overlap {:.6}\n{best}", o.0, o.1, overlap_to_f64(&o))
        }
        Cmd::Bench { n, beta, reps, reference } => {
            let reference = match reference {
                RefArg::Random => Reference::Random,
                RefArg::Ghz => Reference::Ghz,
                RefArg::Zero => Reference::Zero,
            };
            let rows = bench_inner(n, beta, *reps, cli.seed, reference)?;
            let body: Vec<String> = rows.iter().map(BenchRow::csv).collect();
            format!("{}\n{}\n", BenchRow::CSV_HEADER, body.join("\n"))
        }
        Cmd::Measure { file, qubit } => {
            let m = matrix(file)?;
            if *qubit == 0 {
                return Err(Failure::Usage("qubits are numbered from 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let (bit, post) = measure(&m, qubit - 1, &mut rng)?;
            format!("# outcome {}\n{post}", u8::from(bit))
        }
    };
    Ok(text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("stabgeo: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("stabgeo: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("stabgeo: {e}");
            ExitCode::from(if matches!(e, Error::Parse { .. }) { 2 } else { 3 })
        }
    }
}
