//! Command-line front end: compute exact f/h/Poincaré data for any
//! stabilizer subset, classify it, run the geometric oracle, and batch-verify
//! the identity suites at configurable ranges.

use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbitope::{
    binomial_geometric_identity, classify_combinatorially_smooth, enumerate_face_lattice,
    eulerian_polynomial, eulerian_polynomial_subset_form, f_vector_geometric, f_vector_lattice,
    factorial, h_polynomial_lattice, h_recurrence, h_single_reflection_closed_form, is_simple,
    orbit_points, parabolic_order, poincare, poincare_difference, Error, Guard, Int, IntPolynomial,
    IntReport, SimpleSubset,
};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "orbitope",
    version,
    about = "Exact f-vectors, h-polynomials and toric Betti numbers of A_n orbit polytopes"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Raise the oracle enumeration guards to this rank
    /// (ORBITOPE_GUARD_N does the same).
    #[arg(long, global = true)]
    guard_n: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Eulerian polynomial E_n as its coefficient list.
    Eulerian {
        #[arg(long)]
        n: u32,
    },
    /// h-vector of X(J) with the smoothness verdict.
    Hvec(Target),
    /// f-vector of the orbit polytope of J.
    Fvec(Target),
    /// Poincaré polynomial and Betti numbers of X(J).
    Poincare(Target),
    /// Classify J against the combinatorially smooth forms.
    Classify(Target),
    /// Run a named verification suite and report pass/fail per instance.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest rank (or identity index) to check; each suite has a default.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Geometric pipeline from orbit points to the face-lattice f-vector.
    Oracle {
        #[command(flatten)]
        target: Target,
        /// Also print the face lattice, one face per line (text format only).
        #[arg(long)]
        dump: bool,
    },
}

/// A stabilizer subset addressed either explicitly or as a tail interval.
#[derive(Args)]
struct Target {
    /// Rank n of A_n (simple reflections s_1 ... s_n).
    #[arg(long)]
    n: u32,

    #[command(flatten)]
    stabilizer: Stabilizer,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Stabilizer {
    /// Subset as comma-separated indices ("s4,s5" or "4,5"), or "empty".
    #[arg(long)]
    j: Option<String>,

    /// Tail-interval shorthand: k picks J(k,n) = {s_(n-k+1), ..., s_n}.
    #[arg(long)]
    k: Option<u32>,
}

impl Target {
    fn resolve(&self) -> Result<(SimpleSubset, Option<u32>), Error> {
        if self.n > orbitope::coxeter::MAX_RANK {
            return Err(Error::InvalidArgument(format!(
                "rank {} exceeds the supported maximum {}",
                self.n,
                orbitope::coxeter::MAX_RANK
            )));
        }
        match (&self.stabilizer.j, self.stabilizer.k) {
            (Some(list), None) => Ok((SimpleSubset::parse(list, self.n)?, None)),
            (None, Some(k)) => {
                if k > self.n {
                    return Err(Error::InvalidArgument(format!(
                        "k = {k} exceeds the rank n = {}",
                        self.n
                    )));
                }
                Ok((SimpleSubset::tail_interval(k, self.n), Some(k)))
            }
            _ => unreachable!("clap enforces exactly one of --j/--k"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Subset-sum identity for E_(n+1), both routes.
    Thm4,
    /// Closed form for J = {s_n} against the lattice formula.
    Thm5,
    /// Tail-interval recurrence against the lattice formula.
    Thm6,
    /// Summed Poincaré recurrence against direct differences.
    Cor4,
    /// Telescoping binomial identity.
    Id14,
    /// Geometric face-lattice oracle against the lattice f-vector.
    Oracle,
    /// Structural h-vector properties of smooth stabilizers.
    Symmetry,
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::Thm4 => "thm4",
            Suite::Thm5 => "thm5",
            Suite::Thm6 => "thm6",
            Suite::Cor4 => "cor4",
            Suite::Id14 => "id14",
            Suite::Oracle => "oracle",
            Suite::Symmetry => "symmetry",
        }
    }

    fn default_max_n(&self) -> u32 {
        match self {
            Suite::Thm4 => 8,
            Suite::Thm5 => 10,
            Suite::Thm6 => 8,
            Suite::Cor4 => 8,
            Suite::Id14 => 20,
            Suite::Oracle => 5,
            Suite::Symmetry => 8,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::GuardExceeded { .. } => 3,
                _ => 2,
            }
        }
    };
    process::exit(code);
}

fn run(cli: Cli) -> Result<i32, Error> {
    let mut guard = Guard::from_env();
    if let Some(n) = cli.guard_n {
        let raised = Guard::raised_to(n);
        guard.max_orbit_rank = guard.max_orbit_rank.max(raised.max_orbit_rank);
        guard.max_lattice_rank = guard.max_lattice_rank.max(raised.max_lattice_rank);
    }

    match &cli.command {
        Command::Eulerian { n } => {
            let e = eulerian_polynomial::<Int>(*n);
            let coeffs = poly_strings(&e);
            match cli.format {
                Format::Text => println!("{}", coeffs.join(" ")),
                Format::Json => {
                    let payload = json!({
                        "version": VERSION,
                        "command": "eulerian",
                        "n": n,
                        "h": coeffs,
                    });
                    println!("{payload}");
                }
                Format::Csv => print_csv_rows("degree,coefficient", &coeffs),
                Format::Latex => print_latex_rows("i", "coefficient", &coeffs),
            }
            Ok(0)
        }
        Command::Hvec(target) => {
            let (j, k) = target.resolve()?;
            let report = IntReport::compute(&j);
            let h = poly_strings(report.h.polynomial());
            emit_vector(&cli, &report, k, "hvec", "h", h);
            Ok(0)
        }
        Command::Fvec(target) => {
            let (j, k) = target.resolve()?;
            let report = IntReport::compute(&j);
            let f = report.f.counts().iter().map(|c| c.to_string()).collect();
            emit_vector(&cli, &report, k, "fvec", "f", f);
            Ok(0)
        }
        Command::Poincare(target) => {
            let (j, k) = target.resolve()?;
            let report = IntReport::compute(&j);
            let p: Vec<String> = report.betti.iter().map(|b| b.to_string()).collect();
            match cli.format {
                Format::Text => {
                    print_header(&report, k);
                    println!("poincare: {}", p.join(" "));
                    println!("betti: {}", p.join(" "));
                }
                Format::Json => {
                    let mut payload = header_json(&report, k, "poincare");
                    payload.insert("poincare".into(), json!(p));
                    payload.insert("betti".into(), json!(p));
                    println!("{}", Value::Object(payload));
                }
                Format::Csv => print_csv_rows("degree,coefficient", &p),
                Format::Latex => print_latex_rows("i", "b_i", &p),
            }
            Ok(0)
        }
        Command::Classify(target) => {
            let (j, k) = target.resolve()?;
            let (smooth, form) = classify_combinatorially_smooth(&j);
            match cli.format {
                Format::Text => println!(
                    "n = {}  J = {}  form = {}  smooth = {}",
                    j.rank(),
                    j,
                    form,
                    smooth
                ),
                Format::Json => {
                    let mut payload = serde_json::Map::new();
                    payload.insert("version".into(), json!(VERSION));
                    payload.insert("command".into(), json!("classify"));
                    payload.insert("n".into(), json!(j.rank()));
                    payload.insert("j".into(), json!(j.iter().collect::<Vec<u32>>()));
                    if let Some(k) = k {
                        payload.insert("k".into(), json!(k));
                    }
                    payload.insert("smooth".into(), json!(smooth));
                    payload.insert("form".into(), json!(form.as_str()));
                    println!("{}", Value::Object(payload));
                }
                Format::Csv => {
                    println!("n,j,form,smooth");
                    println!("{},{},{},{}", j.rank(), csv_field(&j.to_string()), form, smooth);
                }
                Format::Latex => {
                    println!("\\begin{{tabular}}{{llll}}");
                    println!("n & J & form & smooth \\\\");
                    println!("{} & {} & {} & {} \\\\", j.rank(), j, form, smooth);
                    println!("\\end{{tabular}}");
                }
            }
            Ok(0)
        }
        Command::Verify { suite, max_n } => {
            let max_n = max_n.unwrap_or_else(|| suite.default_max_n());
            let instances = run_suite(*suite, max_n, &guard)?;
            let passed = instances.iter().filter(|i| i.pass).count();
            let total = instances.len();
            match cli.format {
                Format::Text => {
                    for inst in &instances {
                        if inst.pass {
                            println!("ok   {} {}", suite.name(), inst.key);
                        } else {
                            println!(
                                "FAIL {} {}: expected {}, got {}",
                                suite.name(),
                                inst.key,
                                inst.expected.as_deref().unwrap_or("?"),
                                inst.got.as_deref().unwrap_or("?")
                            );
                        }
                    }
                    if passed == total {
                        println!("{}: {passed}/{total} instances pass", suite.name());
                    } else {
                        println!(
                            "{}: {passed}/{total} instances pass, {} failures",
                            suite.name(),
                            total - passed
                        );
                    }
                }
                Format::Json => {
                    let list: Vec<Value> = instances
                        .iter()
                        .map(|inst| {
                            let mut item = serde_json::Map::new();
                            item.insert("key".into(), json!(inst.key));
                            item.insert("pass".into(), json!(inst.pass));
                            if let Some(e) = &inst.expected {
                                item.insert("expected".into(), json!(e));
                            }
                            if let Some(g) = &inst.got {
                                item.insert("got".into(), json!(g));
                            }
                            Value::Object(item)
                        })
                        .collect();
                    let payload = json!({
                        "version": VERSION,
                        "command": "verify",
                        "suite": { "name": suite.name(), "instances": list },
                    });
                    println!("{payload}");
                }
                Format::Csv => {
                    println!("key,pass");
                    for inst in &instances {
                        println!("{},{}", csv_field(&inst.key), inst.pass);
                    }
                }
                Format::Latex => {
                    println!("\\begin{{tabular}}{{lr}}");
                    println!("instance & pass \\\\");
                    for inst in &instances {
                        println!("{} & {} \\\\", inst.key, inst.pass);
                    }
                    println!("\\end{{tabular}}");
                }
            }
            Ok(if passed == total { 0 } else { 1 })
        }
        Command::Oracle { target, dump } => {
            let (j, k) = target.resolve()?;
            if *dump && cli.format != Format::Text {
                return Err(Error::InvalidArgument(
                    "--dump is only available with --format text".into(),
                ));
            }
            let pts = orbit_points(&orbitope::canonical_weight(&j), &guard)?;
            let lattice = enumerate_face_lattice(&pts, &guard)?;
            let f: Vec<String> = lattice.f_counts().iter().map(|c| c.to_string()).collect();
            let (smooth, form) = classify_combinatorially_smooth(&j);
            match cli.format {
                Format::Text => {
                    println!(
                        "n = {}  J = {}  form = {}  smooth = {}  simple = {}",
                        j.rank(),
                        j,
                        form,
                        smooth,
                        is_simple(&lattice)
                    );
                    println!("f: {}", f.join(" "));
                    if *dump {
                        print!("{}", lattice.dump());
                    }
                }
                Format::Json => {
                    let mut payload = serde_json::Map::new();
                    payload.insert("version".into(), json!(VERSION));
                    payload.insert("command".into(), json!("oracle"));
                    payload.insert("n".into(), json!(j.rank()));
                    payload.insert("j".into(), json!(j.iter().collect::<Vec<u32>>()));
                    if let Some(k) = k {
                        payload.insert("k".into(), json!(k));
                    }
                    payload.insert("smooth".into(), json!(smooth));
                    payload.insert("form".into(), json!(form.as_str()));
                    payload.insert("f".into(), json!(f));
                    println!("{}", Value::Object(payload));
                }
                Format::Csv => print_csv_rows("dim,count", &f),
                Format::Latex => print_latex_rows("i", "f_i", &f),
            }
            Ok(0)
        }
    }
}

fn poly_strings(p: &IntPolynomial) -> Vec<String> {
    let len = p.degree().map_or(1, |d| d + 1);
    (0..len).map(|i| p.coeff(i).to_string()).collect()
}

fn print_header(report: &IntReport, k: Option<u32>) {
    let k_part = k.map_or(String::new(), |k| format!("  k = {k}"));
    println!(
        "n = {}  J = {}{}  form = {}  smooth = {}",
        report.n, report.j, k_part, report.form, report.smooth
    );
}

fn header_json(
    report: &IntReport,
    k: Option<u32>,
    command: &str,
) -> serde_json::Map<String, Value> {
    let mut payload = serde_json::Map::new();
    payload.insert("version".into(), json!(VERSION));
    payload.insert("command".into(), json!(command));
    payload.insert("n".into(), json!(report.n));
    payload.insert("j".into(), json!(report.j.iter().collect::<Vec<u32>>()));
    if let Some(k) = k {
        payload.insert("k".into(), json!(k));
    }
    payload.insert("smooth".into(), json!(report.smooth));
    payload.insert("form".into(), json!(report.form.as_str()));
    payload
}

fn emit_vector(
    cli: &Cli,
    report: &IntReport,
    k: Option<u32>,
    command: &str,
    label: &str,
    values: Vec<String>,
) {
    match cli.format {
        Format::Text => {
            print_header(report, k);
            println!("{label}: {}", values.join(" "));
        }
        Format::Json => {
            let mut payload = header_json(report, k, command);
            payload.insert(label.into(), json!(values));
            println!("{}", Value::Object(payload));
        }
        Format::Csv => {
            let header = if label == "f" {
                "dim,count"
            } else {
                "degree,coefficient"
            };
            print_csv_rows(header, &values);
        }
        Format::Latex => print_latex_rows("i", &format!("{label}_i"), &values),
    }
}

/// Quotes a CSV field when it contains a comma (subset lists do).
fn csv_field(raw: &str) -> String {
    if raw.contains(',') {
        format!("\"{raw}\"")
    } else {
        raw.to_string()
    }
}

fn print_csv_rows(header: &str, values: &[String]) {
    println!("{header}");
    for (i, v) in values.iter().enumerate() {
        println!("{i},{v}");
    }
}

fn print_latex_rows(index_label: &str, value_label: &str, values: &[String]) {
    println!("\\begin{{tabular}}{{rr}}");
    println!("{index_label} & {value_label} \\\\");
    for (i, v) in values.iter().enumerate() {
        println!("{i} & {v} \\\\");
    }
    println!("\\end{{tabular}}");
}

struct Instance {
    key: String,
    pass: bool,
    expected: Option<String>,
    got: Option<String>,
}

impl Instance {
    fn equality<V: PartialEq + std::fmt::Display>(key: String, got: V, expected: V) -> Self {
        let pass = got == expected;
        Instance {
            key,
            pass,
            expected: if pass {
                None
            } else {
                Some(expected.to_string())
            },
            got: if pass { None } else { Some(got.to_string()) },
        }
    }
}

fn run_suite(suite: Suite, max_n: u32, guard: &Guard) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    match suite {
        Suite::Thm4 => {
            for n in 1..=max_n {
                let expected = eulerian_polynomial::<Int>(n + 1);
                let by_subsets = eulerian_polynomial_subset_form::<Int>(n);
                let by_lattice = h_polynomial_lattice::<Int>(&SimpleSubset::empty(n));
                let pass = by_subsets == expected && by_lattice.polynomial() == &expected;
                out.push(Instance {
                    key: format!("n={n}"),
                    pass,
                    expected: (!pass).then(|| expected.to_string()),
                    got: (!pass).then(|| by_subsets.to_string()),
                });
            }
        }
        Suite::Thm5 => {
            for n in 2..=max_n {
                let j = SimpleSubset::new(n, [n])?;
                out.push(Instance::equality(
                    format!("n={n}"),
                    h_single_reflection_closed_form::<Int>(n)?
                        .polynomial()
                        .clone(),
                    h_polynomial_lattice::<Int>(&j).polynomial().clone(),
                ));
            }
        }
        Suite::Thm6 => {
            for n in 1..=max_n {
                for k in 0..=n {
                    let j = SimpleSubset::tail_interval(k, n);
                    out.push(Instance::equality(
                        format!("n={n} k={k}"),
                        h_recurrence::<Int>(n, k)?.polynomial().clone(),
                        h_polynomial_lattice::<Int>(&j).polynomial().clone(),
                    ));
                }
            }
        }
        Suite::Cor4 => {
            for n in 1..=max_n {
                let p1 = poincare::<Int>(&SimpleSubset::tail_interval(1, n)).polynomial;
                for k in 1..=n {
                    let pk = poincare::<Int>(&SimpleSubset::tail_interval(k, n)).polynomial;
                    out.push(Instance::equality(
                        format!("n={n} k={k}"),
                        poincare_difference::<Int>(n, k)?,
                        &p1 - &pk,
                    ));
                }
            }
        }
        Suite::Id14 => {
            for k in 1..=max_n {
                let check = binomial_geometric_identity::<Int>(k);
                out.push(Instance {
                    key: format!("k={k}"),
                    pass: check.equal,
                    expected: (!check.equal).then(|| check.rhs.to_string()),
                    got: (!check.equal).then(|| check.lhs.to_string()),
                });
            }
        }
        Suite::Oracle => {
            for n in 1..=max_n {
                if n <= 4 {
                    for mask in 0..(1u32 << n) {
                        let j = SimpleSubset::from_mask(n, mask);
                        out.push(oracle_instance(&j, format!("n={n} J={j}"), guard)?);
                    }
                } else {
                    for k in 0..=n {
                        let j = SimpleSubset::tail_interval(k, n);
                        out.push(oracle_instance(&j, format!("n={n} k={k}"), guard)?);
                    }
                }
            }
        }
        Suite::Symmetry => {
            for n in 1..=max_n {
                for mask in 0..(1u32 << n) {
                    let j = SimpleSubset::from_mask(n, mask);
                    let (smooth, _) = classify_combinatorially_smooth(&j);
                    if !smooth {
                        continue;
                    }
                    let h = h_polynomial_lattice::<Int>(&j);
                    let d = h.d();
                    let vertices = factorial::<Int>(n + 1) / parabolic_order::<Int>(&j);
                    let structural = d == n as usize
                        && h.coeff(0) == Int::from(1)
                        && h.coeff(d) == Int::from(1)
                        && h.is_palindromic()
                        && (0..=d).all(|i| h.coeff(i) > Int::from(0))
                        && h.polynomial().evaluate(&Int::from(1)) == vertices;
                    out.push(Instance {
                        key: format!("n={n} J={j}"),
                        pass: structural,
                        expected: (!structural)
                            .then(|| "palindromic positive h with h(1) = vertex count".into()),
                        got: (!structural).then(|| h.polynomial().to_string()),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn oracle_instance(j: &SimpleSubset, key: String, guard: &Guard) -> Result<Instance, Error> {
    let geometric = f_vector_geometric::<Int>(j, guard)?;
    let lattice = f_vector_lattice::<Int>(j);
    Ok(Instance::equality(
        key,
        geometric.polynomial(),
        lattice.polynomial(),
    ))
}
