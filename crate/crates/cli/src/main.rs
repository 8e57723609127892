use std::io::Read;
use std::process::ExitCode;

use braidcore::crossing::{crossing_matrix, lift_crossing};
use braidcore::verify::run_suite;
use braidcore::{
    apply_artin, apply_moves, check_diving_formulas, construct_from_invariant, is_in_image_c,
    is_perm_braid_matrix, lift_tau, satisfies_ppb_conditions, search_positive_pure_realizations,
    v_invariant, BraidWord, CrossingMatrix, Error, FreeWord, HVector, HurwitzMove, SearchLimit,
    Sign, SimpleBraid,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "braidtool", version, about = "Exact braid invariants")]
struct Cli {
    /// Aligned human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordInput {
    /// Number of strands; inferred from the largest generator if omitted.
    #[arg(short)]
    m: Option<usize>,

    /// Braid word, e.g. "-2 1 1 2" or "s2^-1 s1^2".
    #[arg(allow_hyphen_values = true, default_value = "")]
    word: String,
}

#[derive(Args)]
struct MatrixInput {
    /// Matrix JSON such as {"m":2,"rows":[[0,1],[1,0]]}; read from stdin if omitted.
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Crossing matrix C(β).
    Crossing(WordInput),
    /// Underlying permutation |β|.
    Perm(WordInput),
    /// τ₁θ(β) together with |β|.
    Johnson(WordInput),
    /// Artin action on the free generators, or on one free word.
    Artin {
        #[command(flatten)]
        input: WordInput,
        /// Free word such as "x1 x2^-1"; all generators if omitted.
        #[arg(long, allow_hyphen_values = true)]
        free: Option<String>,
    },
    /// Cord invariant of σ_base^sign conjugated by a word, or a braid realizing
    /// a given invariant when --homology is given.
    Simple {
        #[arg(short)]
        m: usize,
        #[arg(long)]
        base: Option<usize>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        conjugator: String,
        /// Also check the diving identities for every column.
        #[arg(long)]
        check: bool,
        /// Target coefficients of X_1..X_m, e.g. "0 2 0 0 -1".
        #[arg(long, allow_hyphen_values = true, requires = "transposition")]
        homology: Option<String>,
        /// Target transposition "i j" for --homology.
        #[arg(long, allow_hyphen_values = true)]
        transposition: Option<String>,
    },
    /// Hurwitz moves on a tuple of braids, with invariants before and after.
    Hurwitz {
        #[arg(short)]
        m: usize,
        /// One tuple entry; repeat for each entry.
        #[arg(long = "tuple", allow_hyphen_values = true, required = true)]
        tuple: Vec<String>,
        /// Moves such as "1 -2 3"; -p is the inverse of move p.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        moves: String,
    },
    /// Membership tests for a matrix.
    CheckMatrix(MatrixInput),
    /// Positive pure braids with a given crossing matrix, one per line.
    SearchPpb {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, default_value_t = 1, conflicts_with = "all")]
        limit: usize,
        /// Every realization of the minimal length.
        #[arg(long)]
        all: bool,
    },
    /// Seeded randomized property suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Serialize)]
struct MatrixReport {
    perm_braid: bool,
    #[serde(rename = "image_of_C")]
    image_of_c: bool,
    ppb_conditions: bool,
}

enum Failure {
    Usage(String),
    Domain(String),
    /// Output that should still go to stdout, with a domain exit code.
    Reported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+1" | "1" | "+" => Ok(Sign::Pos),
        "-1" | "-" => Ok(Sign::Neg),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

fn parse_word(m: Option<usize>, text: &str) -> Result<BraidWord, Failure> {
    Ok(match m {
        Some(m) => BraidWord::parse(m, text)?,
        None => text.parse()?,
    })
}

fn parse_ints(text: &str, what: &str) -> Result<Vec<i64>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(n, t)| {
            t.parse()
                .map_err(|_| Failure::Usage(format!("{what}: bad integer {t:?} at token {}", n + 1)))
        })
        .collect()
}

fn read_matrix(input: &MatrixInput) -> Result<CrossingMatrix, Failure> {
    let text = match &input.json {
        Some(t) => t.clone(),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("matrix JSON: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let pretty = cli.pretty;
    Ok(match cli.command {
        Command::Crossing(input) => {
            let c = crossing_matrix(&parse_word(input.m, &input.word)?);
            if pretty {
                c.to_string()
            } else {
                to_json(&c)
            }
        }
        Command::Perm(input) => {
            let w = parse_word(input.m, &input.word)?;
            let p = w.permutation();
            if pretty {
                p.to_string()
            } else {
                to_json(&json!({ "m": w.strands(), "perm": p }))
            }
        }
        Command::Johnson(input) => {
            let lift = lift_tau(&parse_word(input.m, &input.word)?);
            if pretty {
                let mut lines = Vec::new();
                for (i, t) in lift.map.images().iter().enumerate() {
                    let mut terms = Vec::new();
                    for j in 0..t.rank() {
                        for k in j + 1..t.rank() {
                            let c = t.get(j + 1, k + 1)?;
                            if c != 0 {
                                terms.push(format!("{c}·X{}∧X{}", j + 1, k + 1));
                            }
                        }
                    }
                    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                    lines.push(format!("X{} ↦ {rhs}", i + 1));
                }
                lines.push(format!("perm {}", lift.perm));
                lines.join("\n")
            } else {
                to_json(&lift)
            }
        }
        Command::Artin { input, free } => {
            let w = parse_word(input.m, &input.word)?;
            let m = w.strands();
            let inputs = match free {
                Some(text) => vec![FreeWord::parse(m, &text)?],
                None => (1..=m).map(|k| FreeWord::generator(m, k)).collect::<Result<_, _>>()?,
            };
            let pairs = inputs
                .iter()
                .map(|x| Ok((x.to_string(), apply_artin(&w, x)?.to_string())))
                .collect::<Result<Vec<_>, Failure>>()?;
            if pretty {
                pairs.iter().map(|(x, y)| format!("{x} ↦ {y}")).collect::<Vec<_>>().join("\n")
            } else {
                let images: Vec<_> = pairs.iter().map(|(x, y)| json!({ "input": x, "image": y })).collect();
                to_json(&json!({ "m": m, "images": images }))
            }
        }
        Command::Simple {
            m,
            base,
            sign,
            conjugator,
            check,
            homology,
            transposition,
        } => match homology {
            Some(h) => {
                let coeffs = parse_ints(&h, "--homology")?;
                let pair = parse_ints(transposition.as_deref().unwrap_or(""), "--transposition")?;
                let [i, j] = pair[..] else {
                    return Err(Failure::Usage("--transposition takes two indices".into()));
                };
                if coeffs.len() != m {
                    return Err(Failure::Usage(format!("--homology needs {m} coefficients")));
                }
                let built = construct_from_invariant(
                    m,
                    i.max(0) as usize,
                    j.max(0) as usize,
                    sign,
                    &HVector::from_coeffs(coeffs),
                )?;
                let word = built.as_word();
                if pretty {
                    format!("σ{}^{} * ({})\n= {word}", built.base(), built.sign(), built.conjugator())
                } else {
                    to_json(&json!({
                        "base": built.base(),
                        "sign": built.sign().as_i64(),
                        "conjugator": built.conjugator().to_string(),
                        "word": word.to_string(),
                    }))
                }
            }
            None => {
                let base = base.ok_or_else(|| Failure::Usage("--base is required".into()))?;
                let braid = SimpleBraid::new(base, sign, BraidWord::parse(m, &conjugator)?)?;
                let class = v_invariant(&braid)?;
                let report = if check { Some(check_diving_formulas(&braid)?) } else { None };
                if let Some(Some(v)) = report.as_ref().map(|r| r.violation.clone()) {
                    return Err(Failure::Domain(format!("diving identity violated: {v}")));
                }
                if pretty {
                    let mut s = format!(
                        "v = ({}, {}), transposition ({} {})",
                        class.homology, class.sign, class.i, class.j
                    );
                    if report.is_some() {
                        s.push_str("\ndiving identities hold");
                    }
                    s
                } else {
                    to_json(&class)
                }
            }
        },
        Command::Hurwitz { m, tuple, moves } => {
            let words = tuple
                .iter()
                .map(|t| BraidWord::parse(m, t).map_err(Failure::from))
                .collect::<Result<Vec<_>, _>>()?;
            let moves = HurwitzMove::parse_list(&moves)?;
            let after = apply_moves(&words, &moves)?;
            let lifts_before: Vec<_> = words.iter().map(lift_tau).collect();
            let lifts_after: Vec<_> = after.iter().map(lift_tau).collect();
            let predicted = apply_moves(&lifts_before, &moves)?;
            let crossing_before: Vec<_> = words.iter().map(lift_crossing).collect();
            let crossing_predicted = apply_moves(&crossing_before, &moves)?;
            let consistent = predicted == lifts_after
                && crossing_predicted == after.iter().map(lift_crossing).collect::<Vec<_>>();
            if pretty {
                let mut lines = vec![format!(
                    "moves: {}",
                    moves.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                )];
                for (n, (b, a)) in words.iter().zip(&after).enumerate() {
                    lines.push(format!("{}: [{b}] -> [{a}]", n + 1));
                }
                lines.push(format!("invariants transform consistently: {consistent}"));
                lines.join("\n")
            } else {
                to_json(&json!({
                    "moves": moves.iter().map(|mv| mv.position as i64 * mv.direction.as_i64()).collect::<Vec<_>>(),
                    "words": after.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "before": lifts_before,
                    "after": lifts_after,
                    "consistent": consistent,
                }))
            }
        }
        Command::CheckMatrix(input) => {
            let c = read_matrix(&input)?;
            let result = MatrixReport {
                perm_braid: is_perm_braid_matrix(&c),
                image_of_c: is_in_image_c(&c),
                ppb_conditions: satisfies_ppb_conditions(&c),
            };
            if pretty {
                format!(
                    "perm_braid      {}\nimage_of_C      {}\nppb_conditions  {}",
                    result.perm_braid, result.image_of_c, result.ppb_conditions
                )
            } else {
                to_json(&result)
            }
        }
        Command::SearchPpb { input, limit, all } => {
            let c = read_matrix(&input)?;
            let limit = if all {
                SearchLimit::Unbounded
            } else if limit == 0 {
                return Err(Failure::Usage("--limit must be positive".into()));
            } else {
                SearchLimit::AtMost(limit)
            };
            let found = search_positive_pure_realizations(&c, limit)?;
            if found.is_empty() {
                return Err(Failure::Domain("no positive pure braid has this crossing matrix".into()));
            }
            found.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
        }
        Command::Verify { seed, cases } => {
            let outcomes = run_suite(seed, cases);
            let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
            let mut lines = vec![format!("seed {seed}, {cases} cases per check")];
            for o in &outcomes {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                let mut line = format!("{status}  {:<width$}  {}/{}", o.name, o.cases - o.failures, o.cases);
                if let Some(f) = &o.first_failure {
                    line.push_str(&format!("  first failure: {f}"));
                }
                lines.push(line);
            }
            let table = lines.join("\n");
            if outcomes.iter().any(|o| !o.passed()) {
                return Err(Failure::Reported(table));
            }
            table
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Reported(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
    }
}
