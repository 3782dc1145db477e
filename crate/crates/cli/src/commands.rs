use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use unitform::format::{format_certificate, format_matrix, parse_matrix};
use unitform::oracle::brute_force_equivalent;
use unitform::standard_form::check_s3prime;
use unitform::{
    equivalent_by, gram_weight_check, is_standard_form, legacy_standardize_traced, standardize, Condition, Error,
    GramVerdict, GramWitness, OracleBudget, OrderSpec, T0Matrix,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

/// A command that could not run to completion.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn load(path: &Path) -> Result<T0Matrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn order_for(k: u32, text: Option<&str>) -> Result<OrderSpec, Failure> {
    let order = match text {
        Some(t) => OrderSpec::parse(k, t),
        None => OrderSpec::default_for(k),
    };
    order.map_err(|e| Failure::new(EXIT_PARSE, format!("--order: {e}")))
}

fn internal(e: Error) -> Failure {
    Failure::new(EXIT_INTERNAL, format!("internal error: {e}"))
}

fn write_output(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", path.display())))
}

pub fn cmd_verify(file: &Path, order: Option<&str>) -> Outcome {
    let a = load(file)?;
    let order = order_for(a.order(), order)?;
    let (ok, report) = is_standard_form(&order, &a);
    let s3prime = check_s3prime(&a);
    for cond in [Condition::S1, Condition::S2, Condition::S3, Condition::S4] {
        match report.first(cond) {
            None => println!("PASS  {cond}"),
            Some(v) => println!("FAIL  {v}"),
        }
    }
    match s3prime.first(Condition::S3Prime) {
        None => println!("PASS  {} (informational)", Condition::S3Prime),
        Some(v) => println!("FAIL  {v} (informational)"),
    }
    println!("standard form: {}", if ok { "yes" } else { "no" });
    Ok(if ok { EXIT_OK } else { EXIT_NO })
}

pub struct StandardizeArgs {
    pub file: PathBuf,
    pub order: Option<String>,
    pub out: Option<PathBuf>,
    pub cert: Option<PathBuf>,
    pub legacy: bool,
    pub trace: bool,
}

pub fn cmd_standardize(args: &StandardizeArgs) -> Outcome {
    let w = load(&args.file)?;
    let order = order_for(w.order(), args.order.as_deref())?;

    let (s, cert) = if args.legacy {
        let (s, cert, trace) = legacy_standardize_traced(&w, &order).map_err(internal)?;
        if args.trace {
            for (i, step) in trace.steps().iter().enumerate() {
                print!("# W({})\n{}", i + 1, format_matrix(step));
            }
        }
        let (ok, report) = is_standard_form(&order, &s);
        if !ok {
            let first = report.violations.first().expect("non-empty report");
            eprintln!("note: legacy result is not in standard form: {first}");
        }
        (s, cert)
    } else {
        let (s, cert) = standardize(&w, &order).map_err(internal)?;
        let (ok, report) = is_standard_form(&order, &s);
        if !ok {
            let first = report.violations.first().expect("non-empty report");
            return Err(Failure::new(EXIT_INTERNAL, format!("self-check failed: {first}")));
        }
        if !equivalent_by(&w, &s, &cert.left, &cert.right).map_err(internal)? {
            return Err(Failure::new(EXIT_INTERNAL, "self-check failed: certificate does not validate"));
        }
        (s, cert)
    };

    let matrix_text = format_matrix(&s);
    let cert_text = format_certificate(&cert);
    match &args.out {
        Some(path) => write_output(path, &matrix_text)?,
        None => print!("{matrix_text}"),
    }
    match &args.cert {
        Some(path) => write_output(path, &cert_text)?,
        None => print!("{cert_text}"),
    }
    Ok(EXIT_OK)
}

pub fn cmd_gram(file: &Path) -> Outcome {
    let w = load(file)?;
    match gram_weight_check(&w).map_err(internal)? {
        GramVerdict::UnitWeighing { weight } => {
            println!("unit weighing: w = {weight}");
            Ok(EXIT_OK)
        }
        GramVerdict::NotWeighing(GramWitness::NotSquare { rows, cols }) => {
            Err(Failure::new(EXIT_NO, format!("matrix is {rows}x{cols}, not square")))
        }
        GramVerdict::NotWeighing(GramWitness::Entry { row, col, value }) => {
            println!("not a unit weighing: witness ({row}, {col}) = {value}");
            Ok(EXIT_NO)
        }
    }
}

fn same_shape(a: &T0Matrix, b: &T0Matrix) -> bool {
    a.order() == b.order() && a.shape() == b.shape()
}

fn describe(a: &T0Matrix) -> String {
    format!("k = {}, {}x{}", a.order(), a.rows(), a.cols())
}

/// `budget` is `Some` for an exhaustive comparison.
pub fn cmd_compare(a_path: &Path, b_path: &Path, order: Option<&str>, budget: Option<OracleBudget>) -> Outcome {
    let a = load(a_path)?;
    let b = load(b_path)?;
    if !same_shape(&a, &b) {
        println!("dimension mismatch: {} vs {}", describe(&a), describe(&b));
        return Ok(EXIT_NO);
    }

    if let Some(budget) = budget {
        return match brute_force_equivalent(&a, &b, &budget) {
            Ok(Some(cert)) => {
                println!("EQUIVALENT");
                print!("{}", format_certificate(&cert));
                Ok(EXIT_OK)
            }
            Ok(None) => {
                println!("NOT EQUIVALENT");
                Ok(EXIT_NO)
            }
            Err(e @ Error::BudgetExceeded(_)) => Err(Failure::new(EXIT_BUDGET, e.to_string())),
            Err(e) => Err(internal(e)),
        };
    }

    let order = order_for(a.order(), order)?;
    let (sa, ca) = standardize(&a, &order).map_err(internal)?;
    let (sb, cb) = standardize(&b, &order).map_err(internal)?;
    if sa == sb {
        let cert = ca.between(&cb).map_err(internal)?;
        println!("same standard form");
        print!("{}", format_certificate(&cert));
        Ok(EXIT_OK)
    } else {
        println!("different standard forms — equivalence undetermined");
        Ok(EXIT_NO)
    }
}

fn plural(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut files = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let entries = fs::read_dir(input).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", input.display())))?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(input.clone());
        }
    }
    Ok(files)
}

pub fn cmd_dedup(inputs: &[PathBuf], order: Option<&str>) -> Outcome {
    let files = expand_inputs(inputs)?;
    if files.is_empty() {
        return Err(Failure::new(EXIT_NO, "no input files"));
    }
    let matrices = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
    let first = &matrices[0];
    if let Some((i, odd)) = matrices.iter().enumerate().find(|(_, m)| !same_shape(first, m)) {
        return Err(Failure::new(
            EXIT_NO,
            format!(
                "mixed shapes: {} has {} but {} has {}",
                files[0].display(),
                describe(first),
                files[i].display(),
                describe(odd)
            ),
        ));
    }
    let order = order_for(first.order(), order)?;

    let forms = matrices
        .par_iter()
        .map(|m| standardize(m, &order).map(|(s, _)| s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(internal)?;

    let mut index: HashMap<&T0Matrix, usize> = HashMap::new();
    let mut groups: Vec<(&T0Matrix, Vec<usize>)> = Vec::new();
    for (i, s) in forms.iter().enumerate() {
        let g = *index.entry(s).or_insert_with(|| {
            groups.push((s, Vec::new()));
            groups.len() - 1
        });
        groups[g].1.push(i);
    }

    let mut out = String::new();
    for (g, (form, members)) in groups.iter().enumerate() {
        let _ = writeln!(out, "group {} ({})", g + 1, plural(members.len(), "file"));
        for &i in members {
            let _ = writeln!(out, "  {}", files[i].display());
        }
        out.push_str(&format_matrix(form));
    }
    let _ = writeln!(out, "{}, {}", plural(files.len(), "input"), plural(groups.len(), "group"));
    out.push_str("note: equal fingerprints prove equivalence; distinct fingerprints do not prove inequivalence\n");
    print!("{out}");
    Ok(EXIT_OK)
}
