use std::fs;
use std::io::{self, Read};

use neuralcanon::canonicity::witness_generators;
use neuralcanon::text::{
    parse_code_file, parse_ext_file, parse_ideal, parse_ideal_file, parse_monomial,
};
use neuralcanon::{
    canonical_fast, canonical_full, chain_canonical, code_of_ideal, cycle_canonical,
    generic_canonical, is_canonical, minimal_primes_with, oracle_canonical, substitute,
    CanonicalResult, DecompositionStrategy, Error, MonomialIdeal, SfMonomial, SpreadOrientation,
    SpreadShape, Substitution, ORACLE_HARD_LIMIT,
};

use crate::report::{strings, Report};
use crate::{Cli, Command, Family, Input, Method, Strategy};

/// Environment variable lowering or raising the oracle width cap.
pub const ORACLE_CAP_VAR: &str = "NEURALCANON_ORACLE_MAX_N";
const DEFAULT_ORACLE_CAP: usize = 12;

pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Debug)]
enum Failure {
    Parse(String),
    Domain(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// A finished command: the report, its text rendering and the exit status.
struct Done {
    report: Report,
    text: Vec<String>,
    detail: Vec<String>,
    status: u8,
}

impl Done {
    fn ok(report: Report, text: Vec<String>) -> Self {
        Done {
            report,
            text,
            detail: Vec::new(),
            status: 0,
        }
    }
}

pub fn run(cli: &Cli) -> u8 {
    match dispatch(cli) {
        Ok(done) => {
            if cli.json {
                println!("{}", done.report.to_json());
            } else {
                for line in &done.text {
                    println!("{line}");
                }
            }
            if cli.verbose > 0 {
                for line in &done.detail {
                    eprintln!("{line}");
                }
            }
            done.status
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            EXIT_PARSE
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            EXIT_DOMAIN
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("error: {m}");
            EXIT_MISMATCH
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Done, Failure> {
    match &cli.command {
        Command::Canon {
            input,
            strategy,
            fast,
            full,
        } => {
            let strategy = match (fast, full) {
                (true, _) => Strategy::Fast,
                (_, true) => Strategy::Full,
                _ => *strategy,
            };
            canon(&read_ideal(input, cli.n)?, strategy)
        }
        Command::Check { input } => check(&read_ideal(input, cli.n)?),
        Command::Decompose { input, method } => decompose(&read_ideal(input, cli.n)?, *method),
        Command::Polarize { input } => polarize(&read_ideal(input, cli.n)?),
        Command::Depolarize { input } => depolarize(&read_ideal(input, cli.n)?),
        Command::Oracle { input, code } => oracle(input, cli.n, *code),
        Command::Family { family } => family_cmd(family, cli.n),
        Command::Generic { input, subs, k } => generic(input, cli.n, *k, subs),
    }
}

fn read_text(input: &Input) -> Result<String, Failure> {
    if let Some(g) = &input.gens {
        return Ok(g.clone());
    }
    let mut s = String::new();
    match input.file.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            s = fs::read_to_string(p)
                .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Domain(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(s)
}

fn read_ideal(input: &Input, n: Option<usize>) -> Result<MonomialIdeal, Failure> {
    let text = read_text(input)?;
    Ok(if input.gens.is_some() {
        parse_ideal(&text, n)?
    } else {
        parse_ideal_file(&text, n)?
    })
}

/// Turns an inline `a, b, c` list into file lines.
fn inline_lines(text: &str) -> String {
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    t.replace(',', "\n")
}

fn fill(report: &mut Report, input: &MonomialIdeal, result: &MonomialIdeal) {
    report.input = strings(input.gens());
    report.result = strings(result.gens());
    report.canonical = result.same_generators(input);
    report.added = strings(result.difference(input));
    report.removed = strings(input.difference(result));
}

fn lines(a: &MonomialIdeal) -> Vec<String> {
    strings(a.gens())
}

fn canon(a: &MonomialIdeal, strategy: Strategy) -> Result<Done, Failure> {
    let (res, name): (CanonicalResult, &str) = match strategy {
        Strategy::Fast => (canonical_fast(a)?, "fast"),
        Strategy::Full => (canonical_full(a)?, "full"),
        Strategy::Both => {
            let full = canonical_full(a)?;
            let fast = canonical_fast(a)?;
            if full.canonical != fast.canonical {
                return Err(Failure::Mismatch(format!(
                    "routes disagree\n  full: {}\n  fast: {}\n  only full: {}\n  only fast: {}",
                    full.canonical,
                    fast.canonical,
                    strings(full.canonical.difference(&fast.canonical)).join(", "),
                    strings(fast.canonical.difference(&full.canonical)).join(", "),
                )));
            }
            (full, "both")
        }
    };
    let mut report = Report::new(a.n(), name);
    fill(&mut report, a, &res.canonical);
    let mut done = Done::ok(report, lines(&res.canonical));
    done.detail = vec![
        format!("strategy: {name}"),
        format!("indices processed: {}", res.indices_processed),
        format!("added: {}", strings(&res.added).join(", ")),
        format!("removed: {}", strings(&res.removed).join(", ")),
    ];
    Ok(done)
}

fn check(a: &MonomialIdeal) -> Result<Done, Failure> {
    let v = is_canonical(a);
    let (message, status) = if let Some(p) = v.precondition_failure {
        (format!("hypotheses not met: {p}"), 2)
    } else if let Some(w) = v.witness {
        let (g, h) = witness_generators(a, &w).expect("witness indexes the input");
        (
            format!(
                "not canonical: generators {} ({g}) and {} ({h}) share only index {}",
                w.first, w.second, w.index
            ),
            1,
        )
    } else {
        ("canonical".to_string(), 0)
    };
    let mut report = Report::new(a.n(), "check");
    report.input = lines(a);
    report.result = lines(a);
    report.canonical = v.canonical;
    report.message = Some(message.clone());
    Ok(Done {
        report,
        text: vec![message],
        detail: Vec::new(),
        status,
    })
}

fn decompose(a: &MonomialIdeal, method: Method) -> Result<Done, Failure> {
    let (strategy, name) = match method {
        Method::Splitting => (DecompositionStrategy::Splitting, "splitting"),
        Method::Transversal => (DecompositionStrategy::Transversal, "transversal"),
    };
    let primes = minimal_primes_with(a, strategy);
    let mut report = Report::new(a.n(), name);
    report.input = lines(a);
    report.result = strings(&primes);
    Ok(Done::ok(report.clone(), report.result))
}

fn polarize(a: &MonomialIdeal) -> Result<Done, Failure> {
    for g in a.gens() {
        if let Some(i) = g.boolean_indices().iter().next() {
            return Err(Error::NotPseudomonomial { index: i }.into());
        }
    }
    let mut report = Report::new(a.n(), "polarize");
    fill(&mut report, a, a);
    Ok(Done::ok(report, lines(a)))
}

fn depolarize(a: &MonomialIdeal) -> Result<Done, Failure> {
    let out = a
        .gens()
        .iter()
        .map(SfMonomial::depolarize)
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = Report::new(a.n(), "depolarize");
    report.input = lines(a);
    report.result = strings(&out);
    Ok(Done::ok(report.clone(), report.result))
}

fn oracle_cap() -> Result<usize, Failure> {
    let Ok(raw) = std::env::var(ORACLE_CAP_VAR) else {
        return Ok(DEFAULT_ORACLE_CAP);
    };
    let cap: usize = raw.trim().parse().map_err(|_| {
        Failure::Domain(format!("{ORACLE_CAP_VAR} must be an integer, got {raw:?}"))
    })?;
    if cap > ORACLE_HARD_LIMIT {
        return Err(Failure::Domain(format!(
            "{ORACLE_CAP_VAR}={cap} is above the hard limit of {ORACLE_HARD_LIMIT}"
        )));
    }
    Ok(cap)
}

fn oracle(input: &Input, n: Option<usize>, code_input: bool) -> Result<Done, Failure> {
    let cap = oracle_cap()?;
    let check_width = |n: usize| {
        if n > cap {
            Err(Failure::Domain(format!(
                "width {n} is above the oracle cap of {cap} (set {ORACLE_CAP_VAR}, at most {ORACLE_HARD_LIMIT})"
            )))
        } else {
            Ok(())
        }
    };
    if code_input {
        let mut text = read_text(input)?;
        if input.gens.is_some() {
            text = inline_lines(&text);
        }
        let code = parse_code_file(&text, n)?;
        check_width(code.n())?;
        let result = oracle_canonical(&code)?;
        let mut report = Report::new(code.n(), "oracle");
        report.input = strings(code.iter());
        report.result = lines(&result);
        return Ok(Done::ok(report, lines(&result)));
    }
    let a = read_ideal(input, n)?;
    check_width(a.n())?;
    let result = oracle_canonical(&code_of_ideal(&a)?)?;
    let mut report = Report::new(a.n(), "oracle");
    fill(&mut report, &a, &result);
    Ok(Done::ok(report, lines(&result)))
}

/// Parses family monomials at a common width: the larger of `reserved`, the
/// largest index used and the `--n` override.
fn family_monomials(
    texts: &[String],
    reserved: usize,
    n: Option<usize>,
) -> Result<Vec<SfMonomial>, Failure> {
    let joined = texts.join(", ");
    let seen = parse_ideal(&joined, None)?.n();
    let n = n.unwrap_or(seen.max(reserved).max(1));
    Ok(parse_ideal(&joined, Some(n))?.into_gens())
}

fn defaulted(gs: &[String], count: usize) -> Vec<String> {
    if gs.is_empty() {
        vec!["1".to_string(); count]
    } else {
        gs.to_vec()
    }
}

fn parse_blocks(spec: &str) -> Result<Vec<Vec<usize>>, Failure> {
    spec.split(';')
        .map(|block| {
            block
                .split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| {
                        Failure::Parse(format!("bad block member {:?} in {spec:?}", t.trim()))
                    })
                })
                .collect()
        })
        .collect()
}

fn family_cmd(family: &Family, n: Option<usize>) -> Result<Done, Failure> {
    let (ideal, result, name) = match family {
        Family::Chain { k, gs } => {
            let gs = family_monomials(&defaulted(gs, *k), k.saturating_sub(1), n)?;
            (
                neuralcanon::chain_ideal(*k, &gs)?,
                chain_canonical(*k, &gs)?,
                "chain",
            )
        }
        Family::Cycle { k, gs } => {
            let gs = family_monomials(&defaulted(gs, *k), *k, n)?;
            (
                neuralcanon::cycle_ideal(*k, &gs)?,
                cycle_canonical(*k, &gs)?,
                "cycle",
            )
        }
        Family::Spread {
            blocks,
            g,
            gs,
            reversed,
        } => {
            let orientation = if *reversed {
                SpreadOrientation::Reversed
            } else {
                SpreadOrientation::Standard
            };
            let shape = SpreadShape::new(parse_blocks(blocks)?, orientation)?;
            let mut texts = vec![g.clone()];
            texts.extend(defaulted(gs, shape.blocks().len()));
            let all = family_monomials(&texts, shape.k(), n)?;
            let (g, gs) = all.split_first().expect("at least the long generator");
            (
                neuralcanon::spread_ideal(&shape, g, gs)?,
                neuralcanon::spread_canonical(&shape, g, gs)?,
                "spread",
            )
        }
    };
    let mut report = Report::new(ideal.n(), name);
    fill(&mut report, &ideal, &result);
    let mut done = Done::ok(report, lines(&result));
    done.detail = vec![format!("family ideal: {ideal}")];
    Ok(done)
}

fn generic(
    input: &Input,
    n: Option<usize>,
    k: Option<usize>,
    subs: &[String],
) -> Result<Done, Failure> {
    let mut text = read_text(input)?;
    if input.gens.is_some() {
        text = inline_lines(&text);
    }
    let a = parse_ext_file(&text, n, k)?;
    let g = generic_canonical(&a)?;
    let mut report = Report::new(a.n(), "generic");
    report.input = strings(a.gens());
    report.result = strings(g.gens());
    let same = g.same_generators(&a);
    report.canonical = same;
    if subs.is_empty() {
        report.added = g
            .gens()
            .iter()
            .filter(|f| !a.gens().contains(f))
            .map(|f| f.to_string())
            .collect();
        report.removed = a
            .gens()
            .iter()
            .filter(|f| !g.gens().contains(f))
            .map(|f| f.to_string())
            .collect();
        return Ok(Done::ok(report.clone(), report.result));
    }
    let mut images: Vec<Option<SfMonomial>> = vec![None; a.k()];
    for s in subs {
        let (lhs, rhs) = s.split_once('=').ok_or_else(|| {
            Failure::Parse(format!("substitution {s:?} is not of the form zJ=MONOMIAL"))
        })?;
        let j: usize = lhs
            .trim()
            .strip_prefix('z')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Failure::Parse(format!("bad placeholder {:?} in {s:?}", lhs.trim())))?;
        if j == 0 || j > a.k() {
            return Err(Error::PlaceholderOutOfRange { z: j, k: a.k() }.into());
        }
        images[j - 1] = Some(parse_monomial(rhs, a.n())?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(j, m)| m.ok_or_else(|| Failure::Domain(format!("no image given for z{}", j + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    let sub = Substitution::new(images);
    let concrete = substitute(&g, &sub)?;
    report.strategy = "generic+substitute".to_string();
    report.result = lines(&concrete);
    report.canonical = false;
    let mut done = Done::ok(report, lines(&concrete));
    done.detail = vec![format!("generic canonical form: {g}")];
    Ok(done)
}
