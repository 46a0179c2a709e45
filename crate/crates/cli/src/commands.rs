use std::fmt;
use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use symideal::characters::character_table;
use symideal::ideal::analyze;
use symideal::kostka::{kostka, kostka_bruteforce};
use symideal::module_structure::{
    check_bound_on, decompose_rd, maximal_r_generated, min_generators, BoundCheck,
};
use symideal::numbers::monomial_count;
use symideal::partitions::{a000070, enumerate_partitions, partition_count};
use symideal::polynomial::{parse_polynomials, parse_polynomials_json, PolynomialJson};
use symideal::psi::{
    check_coefficient_sums, expected_hilbert, jd_blocks, random_jd_generator, w_blocks,
};
use symideal::tableaux::{enumerate_ssyt, enumerate_syt, specht_dim};
use symideal::verify::{
    published_appendix_tables, reproduce_appendix_tables, verify_bound_grid,
    verify_elementary_inequality, verify_kostka_inequality, verify_main_inequality,
    ElementaryBounds,
};
use symideal::{Decomposition, KostkaCache, Partition, Polynomial};

use crate::range::parse_inclusive;
use crate::{Cli, Command, Emit, KostkaMethod, PolyFormat, TableFormat, VerifyCommand};

#[derive(Debug)]
pub enum CliError {
    Lib(symideal::Error),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(symideal::Error::Resource { .. }) => 3,
            CliError::Lib(symideal::Error::Invariant(_)) => 1,
            CliError::Lib(symideal::Error::Input(_)) | CliError::Input(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(s) => f.write_str(s),
        }
    }
}

impl From<symideal::Error> for CliError {
    fn from(e: symideal::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<String> for CliError {
    fn from(s: String) -> Self {
        CliError::Input(s)
    }
}

pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::VerificationFailed
        }
    }
}

type Res = Result<Status, CliError>;

fn big(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

fn partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_decomposition(path: &Path) -> Result<Decomposition, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn print_decomposition(v: &Decomposition) {
    println!("{v}");
    println!("dimension {}", v.dimension());
}

fn print_polys(polys: &[Polynomial], json: bool) {
    if json {
        let list: Vec<PolynomialJson> = polys.iter().map(PolynomialJson::from).collect();
        print_json(&list);
    } else {
        let blocks: Vec<String> = polys.iter().map(ToString::to_string).collect();
        print!("{}", blocks.join("\n"));
    }
}

pub fn run(cli: &Cli) -> Res {
    let caps = cli.caps();
    let exec = cli.exec();
    let cache = KostkaCache::new();
    match &cli.command {
        Command::Partitions { d, max_parts } => {
            let parts = enumerate_partitions(*d, *max_parts);
            let count = partition_count(*d);
            let a = (*d >= 1).then(|| a000070(*d));
            if cli.json {
                print_json(&json!({
                    "d": d,
                    "partitions": parts,
                    "listed": parts.len(),
                    "count": big(&count),
                    "a000070": a.as_ref().map(big),
                }));
            } else {
                for p in &parts {
                    println!("({p})");
                }
                println!("listed {}  P({d}) = {count}", parts.len());
                if let Some(a) = a {
                    println!("A000070({d}) = {a}");
                }
            }
            Ok(Status::Ok)
        }
        Command::Kostka {
            shape,
            content,
            method,
            list,
        } => {
            let (lambda, mu) = (partition(shape)?, partition(content)?);
            let rec = match method {
                KostkaMethod::Enumerate => None,
                _ => Some(kostka(&lambda, &mu, &cache)?),
            };
            let brute = match method {
                KostkaMethod::Recursion => None,
                _ => Some(kostka_bruteforce(&lambda, &mu, &caps)?),
            };
            let agree = match (&rec, &brute) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            };
            let value = rec.clone().or_else(|| brute.clone()).expect("one method ran");
            let tableaux = if *list {
                Some(enumerate_ssyt(&lambda, &mu, &caps)?)
            } else {
                None
            };
            if cli.json {
                print_json(&json!({
                    "shape": lambda,
                    "content": mu,
                    "value": big(&value),
                    "recursion": rec.as_ref().map(big),
                    "enumerate": brute.as_ref().map(big),
                    "agree": agree,
                    "tableaux": tableaux.as_ref().map(|ts| ts.iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>()),
                }));
            } else {
                if agree {
                    println!("{value}");
                } else {
                    println!(
                        "DISAGREEMENT recursion={} enumerate={}",
                        rec.expect("both"),
                        brute.expect("both")
                    );
                }
                for t in tableaux.iter().flatten() {
                    println!();
                    print!("{t}");
                }
            }
            Ok(Status::from_pass(agree))
        }
        Command::SpechtDim { shape, list } => {
            let lambda = partition(shape)?;
            let f = specht_dim(&lambda);
            let tableaux = if *list {
                Some(enumerate_syt(&lambda, &caps)?)
            } else {
                None
            };
            if cli.json {
                print_json(&json!({
                    "shape": lambda,
                    "dim": big(&f),
                    "tableaux": tableaux.as_ref().map(|ts| ts.iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>()),
                }));
            } else {
                println!("{f}");
                for t in tableaux.iter().flatten() {
                    println!();
                    print!("{t}");
                }
            }
            Ok(Status::Ok)
        }
        Command::CharacterTable { n, format } => {
            let table = character_table(*n, &caps)?;
            if cli.json || *format == TableFormat::Json {
                print_json(&table);
            } else {
                print!("{}", table.to_ascii());
            }
            Ok(Status::Ok)
        }
        Command::DecomposeRd { n, d } => {
            let v = decompose_rd(*n, *d, &cache, exec)?;
            if cli.json {
                print_json(&v);
            } else {
                print_decomposition(&v);
            }
            Ok(Status::Ok)
        }
        Command::MaxSubmodule {
            r,
            n,
            d,
            decomposition,
        } => {
            let v = match decomposition {
                Some(path) => read_decomposition(path)?,
                None => decompose_rd(n.expect("clap"), d.expect("clap"), &cache, exec)?,
            };
            let m = maximal_r_generated(&v, *r)?;
            if cli.json {
                print_json(&m);
            } else {
                print_decomposition(&m);
            }
            Ok(Status::Ok)
        }
        Command::MinGenerators { decomposition } => {
            let v = read_decomposition(decomposition)?;
            let r = min_generators(&v);
            if cli.json {
                print_json(&json!({ "min_generators": big(&r), "decomposition": v }));
            } else {
                println!("{r}");
            }
            Ok(Status::Ok)
        }
        Command::MinGeneratorsIdeal { n, gens, format } => {
            let text = read(gens)?;
            let is_json = match format {
                Some(f) => *f == PolyFormat::Json,
                None => gens.extension().is_some_and(|e| e == "json"),
            };
            let polys = if is_json {
                parse_polynomials_json(&text)?
            } else {
                parse_polynomials(&text, *n)?
            };
            if let Some(bad) = polys.iter().find(|p| p.n() != *n) {
                return Err(CliError::Input(format!(
                    "generator in {} variables, expected {n}",
                    bad.n()
                )));
            }
            let analysis = analyze(&polys, &caps)?;
            let r = &analysis.min_generators;
            if cli.json {
                print_json(&json!({
                    "n": n,
                    "d": analysis.span.d(),
                    "dim": analysis.span.dim(),
                    "decomposition": analysis.decomposition,
                    "min_generators": big(r),
                    "principal": *r == BigUint::from(1u32),
                }));
            } else {
                println!("degree-{} component: {}", analysis.span.d(), analysis.decomposition);
                println!("dimension {}", analysis.span.dim());
                println!("min symmetric generators {r}");
            }
            Ok(Status::Ok)
        }
        Command::ConstructJ { n, d, emit } => construct_j(cli, *n, *d, *emit),
        Command::CheckBound { d, r, n, n_range } => {
            let ns = match (n, n_range) {
                (Some(n), _) => *n..=*n,
                (None, Some(s)) => parse_inclusive(s)?,
                (None, None) => unreachable!("clap requires one"),
            };
            let ns: Vec<usize> = ns.collect();
            let cells = exec.map(&ns, |&n| -> Result<BoundCheck, symideal::Error> {
                let rd = decompose_rd(n, *d, &cache, symideal::Execution::Sequential)?;
                check_bound_on(&rd, *d, *r)
            });
            let cells = cells.into_iter().collect::<Result<Vec<_>, _>>()?;
            let pass = cells.iter().all(BoundCheck::consistent);
            if cli.json {
                print_json(&cells);
            } else {
                for c in &cells {
                    println!(
                        "n={} d={} r={} dim_max={} target={} equality={} threshold={}",
                        c.n, c.d, c.r, c.dim_max, c.target, c.equality, c.threshold_holds
                    );
                }
            }
            Ok(Status::from_pass(pass))
        }
        Command::Verify { what } => verify(cli, what, &cache),
        Command::Hilbert { n, d, i } => {
            let degrees: Vec<usize> = match i {
                Some(i) => vec![*i],
                None => (0..=d + 1).collect(),
            };
            let values = degrees
                .iter()
                .map(|&i| Ok((i, expected_hilbert(*n, *d, i)?)))
                .collect::<Result<Vec<_>, symideal::Error>>()?;
            if cli.json {
                let vals: Vec<Value> = values
                    .iter()
                    .map(|(i, v)| json!({ "i": i, "value": big(v) }))
                    .collect();
                print_json(&json!({ "n": n, "d": d, "values": vals }));
            } else {
                for (i, v) in values {
                    println!("H({i}) = {v}");
                }
            }
            Ok(Status::Ok)
        }
    }
}

fn construct_j(cli: &Cli, n: usize, d: usize, emit: Emit) -> Res {
    let caps = cli.caps();
    let exec = cli.exec();
    let blocks = jd_blocks(n, d, exec)?;
    match emit {
        Emit::Basis => {
            let basis: Vec<Polynomial> = blocks.vectors().cloned().collect();
            print_polys(&basis, cli.json);
            Ok(Status::Ok)
        }
        Emit::Generator => {
            let g = random_jd_generator(n, d, cli.seed, 16, &caps)?;
            if cli.json {
                print_json(&json!({
                    "generator": PolynomialJson::from(&g.generator),
                    "orbit_dim": g.orbit_dim,
                    "target_dim": g.target_dim,
                    "attempts": g.attempts,
                    "certified": g.certified(),
                }));
            } else {
                print!("{}", g.generator);
                if !g.certified() {
                    eprintln!(
                        "not certified: orbit spans {} of {} dimensions after {} attempts",
                        g.orbit_dim, g.target_dim, g.attempts
                    );
                }
            }
            Ok(Status::from_pass(g.certified()))
        }
        Emit::Report => {
            let jd = blocks.to_subspace();
            let w = w_blocks(n, d, exec)?;
            let analysis = analyze(&jd.basis(), &caps)?;
            let top = Partition::row(d);
            let sums_vanish = jd.basis().iter().all(|row| {
                check_coefficient_sums(row)
                    .iter()
                    .all(|(a, s)| *a == top || s.is_zero())
            });
            let g = random_jd_generator(n, d, cli.seed, 16, &caps)?;
            let gen_sums: Vec<Value> = check_coefficient_sums(&g.generator)
                .into_iter()
                .map(|(a, s)| json!({ "partition": a, "sum": s.to_string() }))
                .collect();
            let principal = analysis.min_generators == BigUint::from(1u32);
            let dim_rd = monomial_count(n, d);
            let hilbert_d = if d >= 2 { Some(expected_hilbert(n, d, d)?) } else { None };
            let report = json!({
                "n": n,
                "d": d,
                "dim_rd": big(&dim_rd),
                "dim_w": w.dim(),
                "dim_jd": jd.dim(),
                "dim_quotient": big(&(&dim_rd - BigUint::from(jd.dim()))),
                "hilbert_d": hilbert_d.as_ref().map(big),
                "decomposition": analysis.decomposition,
                "basis_sums_vanish_off_top": sums_vanish,
                "min_generators": big(&analysis.min_generators),
                "principal": principal,
                "generator": {
                    "seed": cli.seed,
                    "certified": g.certified(),
                    "orbit_dim": g.orbit_dim,
                    "attempts": g.attempts,
                    "coefficient_sums": gen_sums,
                },
            });
            if cli.json {
                print_json(&report);
            } else {
                println!("n={n} d={d}");
                println!("dim R_d = {dim_rd}, dim W = {}, dim J_d = {}", w.dim(), jd.dim());
                if let Some(h) = &hilbert_d {
                    println!("dim (R/J)_d = {} (Hilbert value {h})", &dim_rd - BigUint::from(jd.dim()));
                }
                println!("J_d = {}", analysis.decomposition);
                println!("basis coefficient sums vanish off ({top}): {sums_vanish}");
                println!("min symmetric generators {}", analysis.min_generators);
                println!("principal symmetric: {principal}");
                println!(
                    "random generator (seed {}): certified={} orbit dim {} after {} attempts",
                    cli.seed,
                    g.certified(),
                    g.orbit_dim,
                    g.attempts
                );
                for (a, s) in check_coefficient_sums(&g.generator) {
                    println!("  sum over orbit of ({a}): {s}");
                }
            }
            Ok(Status::from_pass(sums_vanish))
        }
    }
}

fn verify(cli: &Cli, what: &VerifyCommand, cache: &KostkaCache) -> Res {
    let exec = cli.exec();
    match what {
        VerifyCommand::Inequality { n } => {
            let known = (partition("2,2")?, partition("2,2")?);
            let mut reports = Vec::new();
            for n in parse_inclusive(n)? {
                reports.push(verify_kostka_inequality(n, cache, exec)?);
            }
            // the pair ((2,2),(2,2)) at n=4 is the excluded case
            let unexpected: Vec<_> = reports
                .iter()
                .flat_map(|r| r.violations.iter().filter(|v| !(r.n == 4 && **v == known)))
                .collect();
            if cli.json {
                print_json(&json!({ "reports": reports, "unexpected": unexpected }));
            } else {
                for r in &reports {
                    let v: Vec<String> = r
                        .violations
                        .iter()
                        .map(|(l, m)| format!("(({l}),({m}))"))
                        .collect();
                    println!("n={} checked={} violations=[{}]", r.n, r.checked, v.join(", "));
                }
            }
            Ok(Status::from_pass(unexpected.is_empty()))
        }
        VerifyCommand::Appendix => {
            let got = reproduce_appendix_tables(cache);
            let pass = got == published_appendix_tables();
            if cli.json {
                print_json(&json!({ "tables": got, "matches": pass }));
            } else {
                for t in &got {
                    println!("μ = ({})", t.mu);
                    println!("{:<10} {:>3} {:>4} {:>6} {:>8}", "λ", "K", "f", "(n-1)K", "(#μ-1)f");
                    for r in &t.rows {
                        println!(
                            "{:<10} {:>3} {:>4} {:>6} {:>8}",
                            format!("({})", r.lambda),
                            r.kostka,
                            r.dim,
                            r.lhs,
                            r.rhs
                        );
                    }
                    println!();
                }
                println!("matches published values: {pass}");
            }
            Ok(Status::from_pass(pass))
        }
        VerifyCommand::MainInequality { d, n } => {
            let mut reports = Vec::new();
            for n in parse_inclusive(n)? {
                reports.push(verify_main_inequality(n, *d, cache, exec)?);
            }
            let pass = reports.iter().all(|r| r.holds());
            if cli.json {
                print_json(&reports);
            } else {
                for r in &reports {
                    println!("n={} d={}", r.n, r.d);
                    for row in &r.rows {
                        let mark = if row.lhs > row.rhs { "  VIOLATION" } else { "" };
                        println!("  ({})  {} <= {}{mark}", row.lambda, row.lhs, row.rhs);
                    }
                }
            }
            Ok(Status::from_pass(pass))
        }
        VerifyCommand::BoundGrid { d, extra_n } => {
            let degrees: Vec<usize> = parse_inclusive(d)?.collect();
            let report = verify_bound_grid(&degrees, *extra_n, cache, exec)?;
            if cli.json {
                print_json(&report);
            } else {
                let equal = report.cells.iter().filter(|c| c.equality).count();
                println!(
                    "cells={} equality={} inconsistent={}",
                    report.cells.len(),
                    equal,
                    report.inconsistent.len()
                );
                for c in &report.inconsistent {
                    println!("  INCONSISTENT {c:?}");
                }
            }
            Ok(Status::from_pass(report.holds()))
        }
        VerifyCommand::Elementary { n_max, l_max, p_max } => {
            let report = verify_elementary_inequality(
                ElementaryBounds {
                    n_max: *n_max,
                    l_max: *l_max,
                    p_max: *p_max,
                },
                exec,
            )?;
            if cli.json {
                print_json(&report);
            } else {
                println!(
                    "checked={} skipped={} violations={}",
                    report.checked,
                    report.skipped,
                    report.violations.len()
                );
            }
            Ok(Status::from_pass(report.violations.is_empty()))
        }
    }
}
