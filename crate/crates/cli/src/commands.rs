use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::anyhow;
use serde_json::json;

use zed_core::generate::{
    random_cnf, random_seq_pair, random_set_pair, rng_from_seed, SeqGenParams, SetGenParams,
};
use zed_core::io::{
    emit_dimacs3, emit_name_table, emit_seq_genome, emit_set_genome, parse_dimacs3,
    parse_seq_genome, parse_set_genome, ParseDiagnostic,
};
use zed_core::sat::{
    brute_force_sat_with_cap, reduce_3sat_to_seq_zed, reduce_3sat_to_set_zed, CnfFormula,
};
use zed_core::selftest::{run_selftest, Mutant, SelftestConfig, SelftestOutcome};
use zed_core::seq::{
    algorithm2_elcs, elcs_exact_oracle, lcs, zed_one_side_duplicate_free, zed_seq_exact,
    zed_seq_exact_with_cap, zed_seq_special, SeqDecision,
};
use zed_core::set::{
    algorithm3_special, algorithm4_fpt, algorithm4_fpt_with_cap, zed_set_exact_with,
    ExactSetConfig, SetDecision,
};
use zed_core::{
    check_seq_certificate, classify_instance, Alphabet, GeneFamily, InstanceClass, SeqGenome,
    SetGenome, Side, ZedError,
};

use crate::{
    BenchArgs, BenchWhat, Cli, Command, ElcsArgs, ElcsMode, GenArgs, GenKind, MutantArg,
    ReduceArgs, SatArgs, SelftestArgs, SeqMode, SetMode, SolveSeqArgs, SolveSetArgs, Variant,
    VerifyArgs,
};

pub const YES: u8 = 0;
pub const NO: u8 = 1;
pub const USAGE: u8 = 2;
pub const PRECONDITION: u8 = 3;
pub const LIMIT: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Display) -> Self {
        Failure {
            code: USAGE,
            error: anyhow!("{error}"),
        }
    }
}

impl From<ZedError> for Failure {
    fn from(e: ZedError) -> Self {
        let code = match e {
            ZedError::CapExceeded { .. } | ZedError::Timeout { .. } => LIMIT,
            _ => PRECONDITION,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

/// What a command reports: exit code, verdict line, and for the JSON report
/// the algorithm used and a witness.
struct Outcome {
    code: u8,
    algorithm: String,
    witness: Option<String>,
}

impl Outcome {
    fn verdict(yes: bool, algorithm: impl Into<String>, witness: Option<String>) -> Self {
        Outcome {
            code: if yes { YES } else { NO },
            algorithm: algorithm.into(),
            witness,
        }
    }
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    let start = Instant::now();
    let result = match &cli.command {
        Command::SolveSeq(a) => solve_seq(a),
        Command::SolveSet(a) => solve_set(a),
        Command::Elcs(a) => elcs(a),
        Command::Reduce(a) => reduce(a),
        Command::Verify(a) => verify(a),
        Command::Sat(a) => sat(a),
        Command::Gen(a) => gen(a),
        Command::Selftest(a) => selftest(a),
        Command::Bench(a) => bench(a),
    };
    if let Some(path) = &cli.report {
        let (verdict, algorithm, witness) = match &result {
            Ok(o) => (
                verdict_word(o.code),
                o.algorithm.as_str(),
                o.witness.clone(),
            ),
            Err(_) => ("ERROR", "", None),
        };
        let line = json!({
            "command": command_name(&cli.command),
            "verdict": verdict,
            "algorithm": algorithm,
            "elapsed_ms": start.elapsed().as_millis() as u64,
            "witness": witness,
        });
        let written = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .and_then(|mut f| writeln!(f, "{line}"));
        if let Err(e) = written {
            return Err(Failure::usage(format!(
                "cannot write report {}: {e}",
                path.display()
            )));
        }
    }
    result.map(|o| o.code)
}

fn verdict_word(code: u8) -> &'static str {
    match code {
        YES => "YES",
        NO => "NO",
        _ => "ERROR",
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::SolveSeq(_) => "solve-seq",
        Command::SolveSet(_) => "solve-set",
        Command::Elcs(_) => "elcs",
        Command::Reduce(_) => "reduce",
        Command::Verify(_) => "verify",
        Command::Sat(_) => "sat",
        Command::Gen(_) => "gen",
        Command::Selftest(_) => "selftest",
        Command::Bench(_) => "bench",
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, ParseDiagnostic>) -> Result<T, Failure> {
    r.map_err(|d| Failure::usage(format!("{}: {d}", path.display())))
}

fn read_seq(path: &Path) -> Result<SeqGenome, Failure> {
    parsed(path, parse_seq_genome(&read(path)?))
}

fn read_set(path: &Path) -> Result<SetGenome, Failure> {
    parsed(path, parse_set_genome(&read(path)?))
}

fn read_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    parsed(path, parse_dimacs3(&read(path)?))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn solve_seq(a: &SolveSeqArgs) -> Result<Outcome, Failure> {
    let g1 = read_seq(&a.g1)?;
    let g2 = read_seq(&a.g2)?;
    let exact = || zed_seq_exact_with_cap(&g1, &g2, a.max_families);
    let (algorithm, decision): (&str, SeqDecision) = match a.mode {
        SeqMode::Special => ("special", zed_seq_special(&g1, &g2)?),
        SeqMode::Exact => ("exact", exact()?),
        SeqMode::Auto => match classify_instance(&g1, &g2) {
            Err(ZedError::FamilyMismatch { family }) => {
                eprintln!("family {family} occurs in only one genome");
                ("family-check", SeqDecision::no())
            }
            Err(e) => return Err(e.into()),
            Ok(InstanceClass::BothExemplar) => ("lcs", zed_seq_special(&g1, &g2)?),
            Ok(InstanceClass::OneSideDuplicateFree { exemplar_side }) => {
                let (x, y) = match exemplar_side {
                    Side::First => (&g1, &g2),
                    Side::Second => (&g2, &g1),
                };
                ("subsequence", zed_one_side_duplicate_free(x, y)?)
            }
            Ok(InstanceClass::PerGeneSpecial) => ("special", zed_seq_special(&g1, &g2)?),
            Ok(InstanceClass::General) => ("exact", exact()?),
        },
    };
    let witness = decision.certificate.as_ref().map(|c| c.to_string());
    match &decision.certificate {
        Some(cert) => {
            println!("YES {algorithm}");
            println!("certificate: {cert}");
            if let Some(path) = &a.cert_out {
                write(path, &emit_seq_genome(cert))?;
            }
        }
        None => println!("NO {algorithm}"),
    }
    Ok(Outcome::verdict(decision.is_yes(), algorithm, witness))
}

fn solve_set(a: &SolveSetArgs) -> Result<Outcome, Failure> {
    let g1 = read_set(&a.g1)?;
    let g2 = read_set(&a.g2)?;
    let config = ExactSetConfig {
        max_pairs_per_gene: a.max_pairs,
        timeout: Some(Duration::from_secs(a.timeout_secs)),
    };
    let (algorithm, decision): (&str, SetDecision) = match a.mode {
        SetMode::Matching => ("matching", algorithm3_special(&g1, &g2)?),
        SetMode::Fpt => ("fpt", algorithm4_fpt_with_cap(&g1, &g2, a.max_k)?),
        SetMode::Exact => ("exact", zed_set_exact_with(&g1, &g2, &config)?),
        SetMode::Auto => match classify_instance(&g1, &g2) {
            Err(ZedError::FamilyMismatch { family }) => {
                eprintln!("family {family} occurs in only one genome");
                ("family-check", SetDecision::no())
            }
            Err(e) => return Err(e.into()),
            Ok(class) if class.is_special() => ("matching", algorithm3_special(&g1, &g2)?),
            Ok(_) if g1.k().max(g2.k()) <= a.max_k => {
                ("fpt", algorithm4_fpt_with_cap(&g1, &g2, a.max_k)?)
            }
            Ok(_) => ("exact", zed_set_exact_with(&g1, &g2, &config)?),
        },
    };
    let mut witness = None;
    match &decision.certificate {
        Some(cert) => {
            println!("YES {algorithm}");
            println!("certificate: {cert}");
            if let Some(m) = &decision.witness_matching {
                println!("matching: {m}");
                witness = Some(m.to_string());
            }
            if let Some(p) = &decision.witness_permutation {
                let p: Vec<String> = p.iter().map(|j| (j + 1).to_string()).collect();
                println!("permutation: {}", p.join(" "));
                witness = Some(p.join(" "));
            }
            if let Some(path) = &a.cert_out {
                write(path, &emit_set_genome(cert))?;
            }
        }
        None => println!("NO {algorithm}"),
    }
    Ok(Outcome::verdict(decision.is_yes(), algorithm, witness))
}

fn elcs(a: &ElcsArgs) -> Result<Outcome, Failure> {
    let sa = read_seq(&a.a)?;
    let sb = read_seq(&a.b)?;
    let mandatory = a
        .mandatory
        .iter()
        .map(|&id| GeneFamily::new(id).ok_or_else(|| Failure::usage("family 0 is not valid")))
        .collect::<Result<Vec<_>, _>>()?;
    let alphabet = Alphabet::from_mandatory(mandatory, &sa, &sb);
    let (algorithm, best) = match a.mode {
        ElcsMode::Special => {
            let r = algorithm2_elcs(&sa, &sb, &alphabet).map_err(|e| match e {
                ZedError::PreconditionViolated(msg) => Failure {
                    code: PRECONDITION,
                    error: anyhow!("{msg}; use --mode oracle for general instances"),
                },
                other => other.into(),
            })?;
            ("special", r)
        }
        ElcsMode::Oracle => ("oracle", elcs_exact_oracle(&sa, &sb, &alphabet)?),
    };
    match &best {
        Some(s) => {
            println!("YES {algorithm} length={}", s.len());
            println!("{s}");
            if let Some(path) = &a.out {
                write(path, &emit_seq_genome(s))?;
            }
        }
        None => println!("NO {algorithm}"),
    }
    Ok(Outcome::verdict(
        best.is_some(),
        algorithm,
        best.map(|s| s.to_string()),
    ))
}

fn reduce(a: &ReduceArgs) -> Result<Outcome, Failure> {
    let phi = read_cnf(&a.cnf)?;
    let (n, m) = (phi.n_vars() as usize, phi.n_clauses());
    let (g1, g2, names, sizes) = match a.variant {
        Variant::Seq => {
            let r = reduce_3sat_to_seq_zed(&phi);
            let sizes = vec![
                format!("len(G1) = 3n+12m+1 = {}", r.g1.len()),
                format!("len(G2) = 3n+12m+1 = {}", r.g2.len()),
                format!("families = 2n+6m+1 = {}", r.names.len()),
            ];
            debug_assert_eq!(r.g1.len(), 3 * n + 12 * m + 1);
            (
                emit_seq_genome(&r.g1),
                emit_seq_genome(&r.g2),
                r.names,
                sizes,
            )
        }
        Variant::Set => {
            let r = reduce_3sat_to_set_zed(&phi)?;
            let sizes = vec![
                format!("genes(G1) = n+15m = {}", r.g1.total_genes()),
                format!("genes(G2) = 2n+18m = {}", r.g2.total_genes()),
                format!("k1 = n+6m = {}", r.g1.k()),
                format!("k2 = 2n+7m = {}", r.g2.k()),
                format!("families = n+9m = {}", r.names.len()),
            ];
            debug_assert_eq!(r.g1.total_genes(), n + 15 * m);
            (
                emit_set_genome(&r.g1),
                emit_set_genome(&r.g2),
                r.names,
                sizes,
            )
        }
    };
    write(&with_ext(&a.out, "g1"), &g1)?;
    write(&with_ext(&a.out, "g2"), &g2)?;
    write(&with_ext(&a.out, "tsv"), &emit_name_table(&names))?;
    println!("n = {n}, m = {m}");
    for line in sizes {
        println!("{line}");
    }
    Ok(Outcome::verdict(true, "reduce", None))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let failure = match a.variant {
        Variant::Seq => {
            let (g1, g2, c) = (read_seq(&a.g1)?, read_seq(&a.g2)?, read_seq(&a.cert)?);
            check_seq_certificate(&g1, &g2, &c)
                .err()
                .map(|f| (f.code(), f.to_string()))
        }
        Variant::Set => {
            let (g1, g2, c) = (read_set(&a.g1)?, read_set(&a.g2)?, read_set(&a.cert)?);
            zed_core::set::check_set_certificate(&g1, &g2, &c)
                .err()
                .map(|f| (f.code(), f.to_string()))
        }
    };
    match &failure {
        None => println!("YES valid"),
        Some((code, detail)) => {
            println!("NO {code}");
            eprintln!("{detail}");
        }
    }
    Ok(Outcome::verdict(
        failure.is_none(),
        "verify",
        failure.map(|(code, _)| code.to_string()),
    ))
}

fn sat(a: &SatArgs) -> Result<Outcome, Failure> {
    let phi = read_cnf(&a.cnf)?;
    let found = brute_force_sat_with_cap(&phi, a.max_vars)?;
    match &found {
        Some(sigma) => {
            println!("YES brute-force");
            println!("assignment: {sigma}");
        }
        None => println!("NO brute-force"),
    }
    Ok(Outcome::verdict(
        found.is_some(),
        "brute-force",
        found.map(|s| s.to_string()),
    ))
}

fn gen(a: &GenArgs) -> Result<Outcome, Failure> {
    const MAX_SIZE: u64 = 1_000_000;
    let too_big = |what: &str, v: u64| -> Result<(), Failure> {
        if v > MAX_SIZE {
            Err(Failure::usage(format!("{what} = {v} is above {MAX_SIZE}")))
        } else {
            Ok(())
        }
    };
    let mut rng = rng_from_seed(a.seed);
    match a.kind {
        GenKind::Cnf => {
            too_big("--vars", a.vars.into())?;
            too_big("--clauses", a.clauses as u64)?;
            if a.vars == 0 {
                return Err(Failure::usage("--vars must be at least 1"));
            }
            if a.distinct && a.clauses > 0 && a.vars < 3 {
                return Err(Failure::usage("--distinct needs --vars of at least 3"));
            }
            let text = emit_dimacs3(&random_cnf(&mut rng, a.vars, a.clauses, a.distinct));
            match &a.out {
                Some(path) => write(path, &text)?,
                None => print!("{text}"),
            }
        }
        GenKind::Seq | GenKind::Set => {
            let Some(prefix) = &a.out else {
                return Err(Failure::usage("--out PREFIX is required for seq and set"));
            };
            if a.max_copies == 0 {
                return Err(Failure::usage("--max-copies must be at least 1"));
            }
            too_big("--max-copies", a.max_copies as u64)?;
            let (t1, t2) = if a.kind == GenKind::Seq {
                if a.families == 0 {
                    return Err(Failure::usage("--families must be at least 1"));
                }
                too_big("--families", a.families.into())?;
                let p = SeqGenParams {
                    families: a.families,
                    max_copies: a.max_copies,
                    special: a.special,
                    signs: a.signs,
                    planted: a.planted,
                };
                let (g1, g2) = random_seq_pair(&mut rng, &p);
                (emit_seq_genome(&g1), emit_seq_genome(&g2))
            } else {
                if a.k1 == 0 || a.k2 == 0 {
                    return Err(Failure::usage("--k1 and --k2 must be at least 1"));
                }
                too_big("--ground", a.ground.into())?;
                too_big("--k1", a.k1 as u64)?;
                too_big("--k2", a.k2 as u64)?;
                let p = SetGenParams {
                    ground: a.ground,
                    k1: a.k1,
                    k2: a.k2,
                    max_copies: a.max_copies,
                    special: a.special,
                    planted: a.planted,
                };
                let (g1, g2) = random_set_pair(&mut rng, &p);
                (emit_set_genome(&g1), emit_set_genome(&g2))
            };
            write(&with_ext(prefix, "g1"), &t1)?;
            write(&with_ext(prefix, "g2"), &t2)?;
        }
    }
    Ok(Outcome::verdict(true, "gen", None))
}

fn selftest(a: &SelftestArgs) -> Result<Outcome, Failure> {
    let config = SelftestConfig {
        budget: Duration::from_secs(a.budget_secs),
        seed: a.seed,
        mutant: a.mutant.map(|MutantArg::WrongWeight| Mutant::WrongWeight),
        ..SelftestConfig::default()
    };
    let report = run_selftest(&config);
    print!("{report}");
    let (code, summary) = match report.outcome {
        SelftestOutcome::Passed => (YES, "PASS".to_string()),
        SelftestOutcome::Failed { suite } => (NO, format!("FAIL {suite}")),
        SelftestOutcome::BudgetExhausted => (LIMIT, "BUDGET EXHAUSTED".to_string()),
    };
    println!("{summary}");
    Ok(Outcome {
        code,
        algorithm: "selftest".into(),
        witness: Some(summary),
    })
}

fn timed<T>(label: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    println!(
        "{label:<40} {:>10.3} ms",
        start.elapsed().as_secs_f64() * 1e3
    );
    out
}

fn bench(a: &BenchArgs) -> Result<Outcome, Failure> {
    let mut rng = rng_from_seed(a.seed);
    let on = |w: BenchWhat| a.what == w || a.what == BenchWhat::All;
    if on(BenchWhat::Lcs) {
        let p = SeqGenParams {
            families: 50,
            max_copies: 100,
            ..SeqGenParams::default()
        };
        let (x, y) = random_seq_pair(&mut rng, &p);
        timed(&format!("lcs {}x{}", x.len(), y.len()), || lcs(&x, &y));
    }
    if on(BenchWhat::Matching) {
        let p = SetGenParams {
            ground: 2000,
            k1: 200,
            k2: 200,
            max_copies: 3,
            special: true,
            planted: true,
        };
        let (g1, g2) = random_set_pair(&mut rng, &p);
        timed("matching k=200 |S|=2000", || algorithm3_special(&g1, &g2))?;
    }
    if on(BenchWhat::Fpt) {
        let p = SetGenParams {
            ground: 24,
            k1: 8,
            k2: 8,
            max_copies: 3,
            special: false,
            planted: false,
        };
        let (g1, g2) = random_set_pair(&mut rng, &p);
        timed("fpt k=8 |S|=24", || algorithm4_fpt(&g1, &g2))?;
    }
    if on(BenchWhat::SeqExact) {
        let p = SeqGenParams {
            families: 16,
            max_copies: 2,
            planted: true,
            ..SeqGenParams::default()
        };
        let (g1, g2) = random_seq_pair(&mut rng, &p);
        timed("seq exact D=16", || zed_seq_exact(&g1, &g2))?;
    }
    Ok(Outcome::verdict(true, "bench", None))
}
