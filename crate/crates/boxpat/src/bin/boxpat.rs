//! Command-line surface for the boxpat library.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse error,
//! 3 bound exceeded, 4 precondition violation.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use boxpat::algebra::{BiPoly, IntPoly, RationalGF, TSeries};
use boxpat::lego::{self, LegoWall, RowConfig};
use boxpat::perm::{bond_count, box1_count, rect_count, Permutation};
use boxpat::sequences::hertzsprung_numbers;
use boxpat::signed::{avoider_numbers, bad_pair_count, max_box_count, SignedPermutation};
use boxpat::transfer;
use boxpat::verify;
use boxpat::word::{box_count_word, k_bond_count, rect_count_word, Word};
use boxpat::Error;

/// Default series order when neither --order nor BOXPAT_ORDER is given.
const DEFAULT_ORDER: usize = 12;
/// Hard cap on series order accepted by the CLI.
const MAX_ORDER: usize = 64;
/// Cap on b-file term counts.
const MAX_BFILE: usize = 128;

#[derive(Parser)]
#[command(name = "boxpat", version, about = "Exact rectangle-pattern and bond statistics", disable_help_subcommand = true)]
struct Cli {
    /// Emit machine-readable JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a statistic on a single object.
    Stat(StatArgs),
    /// Expand a transfer system as a power series in t.
    Series(SeriesArgs),
    /// Print the closed-form generating function of a transfer system.
    Gf(GfArgs),
    /// Recompute published claims and compare against the embedded tables.
    Verify {
        /// One of: hardin-3, hardin-4, hardin-5, mathar, barker, riordan,
        /// flajolet, maxbox, fibonacci, all.
        target: String,
    },
    /// Print a sequence prefix in OEIS b-file format ("n value" per line).
    Bfile {
        /// One of: hertzsprung, avoider-count, maxbox, walls, fibonacci.
        sequence: String,
        /// Number of terms to print.
        count: usize,
    },
    /// Count, list, or translate stable LEGO walls (bricks 2, 3, 4).
    Lego(LegoArgs),
}

#[derive(Args)]
struct StatArgs {
    /// Object kind: perm, word, or sperm.
    kind: String,
    /// The object, e.g. 214365 or -2,1,3,-4 or 113.
    #[arg(allow_hyphen_values = true)]
    object: String,
    /// Statistic: bond, box1, kbox:k, rect:a,b, kbond:k, badpairs.
    stat: String,
    /// Alphabet size (words only).
    #[arg(long)]
    alphabet: Option<u32>,
}

#[derive(Args)]
struct SeriesArgs {
    /// System: kbond, rect1k, or box2.
    system: String,
    /// Alphabet size.
    ell: u32,
    /// Bond/rectangle parameter k (omitted for box2).
    k: Option<u32>,
    /// Series order (t-degree); defaults to BOXPAT_ORDER or 12.
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Args)]
struct GfArgs {
    /// System: kbond or rect1k.
    system: String,
    /// Alphabet size.
    ell: u32,
    /// Bond/rectangle parameter k (not accepted for box2).
    k: Option<u32>,
}

#[derive(Args)]
struct LegoArgs {
    /// Wall width in studs.
    width: u32,
    /// Wall height in rows (ignored by encode/decode).
    height: usize,
    /// Action: count, list, encode, or decode.
    action: String,
    /// Word to encode, or wall file to decode ("-" for stdin).
    arg: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("boxpat: {e}");
            exit_code_for(&e)
        }
    };
    ExitCode::from(code)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::BoundExceeded(_) | Error::DegreeExceeded { .. } => 3,
        Error::NotMaximal { .. }
        | Error::NotAvoider { .. }
        | Error::NotStable { .. }
        | Error::HasSingleton { .. }
        | Error::NotExpandable
        | Error::SingularSystem
        | Error::SubstitutionDegenerate => 4,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.cmd {
        Cmd::Stat(args) => cmd_stat(args, cli.json),
        Cmd::Series(args) => cmd_series(args, cli.json),
        Cmd::Gf(args) => cmd_gf(args, cli.json),
        Cmd::Verify { target } => cmd_verify(target, cli.json),
        Cmd::Bfile { sequence, count } => cmd_bfile(sequence, *count),
        Cmd::Lego(args) => cmd_lego(args),
    }
}

/// Statistic spec: bond | box1 | kbox:k | rect:a,b | kbond:k | badpairs.
enum StatSpec {
    Bond,
    Box1,
    Kbox(u32),
    Rect(u32, u32),
    Kbond(u32),
    BadPairs,
}

fn parse_stat_spec(s: &str) -> Result<StatSpec, Error> {
    let bad = |m: &str| Error::Parse(format!("bad statistic '{s}': {m}"));
    match s {
        "bond" => return Ok(StatSpec::Bond),
        "box1" => return Ok(StatSpec::Box1),
        "badpairs" => return Ok(StatSpec::BadPairs),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("kbox:") {
        let k = rest.parse().map_err(|_| bad("expected kbox:k"))?;
        return Ok(StatSpec::Kbox(k));
    }
    if let Some(rest) = s.strip_prefix("kbond:") {
        let k = rest.parse().map_err(|_| bad("expected kbond:k"))?;
        return Ok(StatSpec::Kbond(k));
    }
    if let Some(rest) = s.strip_prefix("rect:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| bad("expected rect:a,b"))?;
        let a = a.trim().parse().map_err(|_| bad("bad a"))?;
        let b = b.trim().parse().map_err(|_| bad("bad b"))?;
        return Ok(StatSpec::Rect(a, b));
    }
    Err(bad("unknown statistic"))
}

fn cmd_stat(args: &StatArgs, json: bool) -> Result<u8, Error> {
    let spec = parse_stat_spec(&args.stat)?;
    let value: usize = match args.kind.as_str() {
        "perm" => {
            let sigma = Permutation::parse(&args.object)?;
            match spec {
                StatSpec::Bond => bond_count(&sigma),
                StatSpec::Box1 => box1_count(&sigma),
                StatSpec::Kbox(k) => rect_count(&sigma, k, k),
                StatSpec::Rect(a, b) => rect_count(&sigma, a, b),
                StatSpec::Kbond(k) => {
                    // Adjacent positions whose values differ by at most k.
                    let w = Word::new(sigma.values().to_vec(), sigma.len() as u32)?;
                    k_bond_count(&w, k)
                }
                StatSpec::BadPairs => {
                    return Err(Error::Parse("badpairs applies to sperm objects".into()))
                }
            }
        }
        "word" => {
            let ell = args
                .alphabet
                .ok_or_else(|| Error::Parse("words require --alphabet".into()))?;
            let w = Word::parse(&args.object, ell)?;
            match spec {
                StatSpec::Bond | StatSpec::Kbond(1) => k_bond_count(&w, 1),
                StatSpec::Kbond(k) => k_bond_count(&w, k),
                StatSpec::Box1 => box_count_word(&w, 1),
                StatSpec::Kbox(k) => box_count_word(&w, k),
                StatSpec::Rect(a, b) => rect_count_word(&w, a, b),
                StatSpec::BadPairs => {
                    return Err(Error::Parse("badpairs applies to sperm objects".into()))
                }
            }
        }
        "sperm" => {
            let pi = SignedPermutation::parse(&args.object)?;
            match spec {
                StatSpec::BadPairs => bad_pair_count(&pi),
                _ => {
                    return Err(Error::Parse(
                        "only badpairs is defined for sperm objects".into(),
                    ))
                }
            }
        }
        other => return Err(Error::Parse(format!("unknown object kind '{other}'"))),
    };
    if json {
        println!("{}", serde_json::json!({ "value": value }));
    } else {
        println!("{value}");
    }
    Ok(0)
}

fn series_order(args: &SeriesArgs) -> Result<usize, Error> {
    let order = match args.order {
        Some(o) => o,
        None => match std::env::var("BOXPAT_ORDER") {
            Ok(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("BOXPAT_ORDER is not an integer: '{s}'")))?,
            Err(_) => DEFAULT_ORDER,
        },
    };
    if order > MAX_ORDER {
        return Err(Error::Parse(format!("order {order} exceeds the maximum {MAX_ORDER}")));
    }
    Ok(order)
}

fn compute_series(system: &str, ell: u32, k: Option<u32>, order: usize) -> Result<TSeries, Error> {
    let need_k = || k.ok_or_else(|| Error::Parse(format!("{system} requires a k parameter")));
    match system {
        "kbond" => Ok(transfer::kbond_series(ell, need_k()?, order)),
        "rect1k" => Ok(transfer::rect1k_series(ell, need_k()?, order)),
        "box2" => {
            if k.is_some() {
                return Err(Error::Parse("box2 takes only an alphabet size".into()));
            }
            Ok(transfer::box2_series(ell, order))
        }
        other => Err(Error::Parse(format!("unknown system '{other}'"))),
    }
}

fn poly_strings(p: &IntPoly) -> Vec<String> {
    p.to_decimal_strings()
}

fn cmd_series(args: &SeriesArgs, json: bool) -> Result<u8, Error> {
    let order = series_order(args)?;
    let series = compute_series(&args.system, args.ell, args.k, order)?;
    if json {
        let rows: Vec<serde_json::Value> = series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| serde_json::json!({ "t_order": n, "coeffs": poly_strings(c) }))
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else {
        let width = format!("t^{order}").len();
        for (n, c) in series.coeffs().iter().enumerate() {
            println!("{:>width$}: {}", format!("t^{n}"), c.display_in("x"));
        }
    }
    Ok(0)
}

fn bipoly_json(p: &BiPoly) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (b, tc) in p.t_coeffs().iter().enumerate() {
        for (a, c) in tc.coeffs().iter().enumerate() {
            if c != &BigInt::from(0) {
                map.insert(format!("{a},{b}"), serde_json::Value::String(c.to_string()));
            }
        }
    }
    serde_json::Value::Object(map)
}

fn cmd_gf(args: &GfArgs, json: bool) -> Result<u8, Error> {
    let need_k = || {
        args.k
            .ok_or_else(|| Error::Parse(format!("{} requires a k parameter", args.system)))
    };
    let gf: RationalGF = match args.system.as_str() {
        "kbond" => transfer::kbond_gf(args.ell, need_k()?)?,
        "rect1k" => transfer::rect1k_gf(args.ell, need_k()?)?,
        "box2" => {
            return Err(Error::BoundExceeded(
                "the 2-box system has no supported closed form; use `series box2`".into(),
            ))
        }
        other => return Err(Error::Parse(format!("unknown system '{other}'"))),
    };
    if json {
        println!(
            "{}",
            serde_json::json!({ "num": bipoly_json(gf.num()), "den": bipoly_json(gf.den()) })
        );
    } else {
        println!("num = {}", gf.num().display_xt());
        println!("den = {}", gf.den().display_xt());
    }
    Ok(0)
}

fn cmd_verify(target: &str, json: bool) -> Result<u8, Error> {
    let reports = verify::run(target)
        .ok_or_else(|| Error::Parse(format!("unknown verify target '{target}'")))?;
    let all_pass = reports.iter().all(|r| r.all_pass());
    if json {
        let arr: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
        println!("{}", serde_json::Value::Array(arr));
    } else {
        for r in &reports {
            print!("{}", r.render());
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_bfile(sequence: &str, count: usize) -> Result<u8, Error> {
    if count > MAX_BFILE {
        return Err(Error::BoundExceeded(format!(
            "b-file count {count} exceeds the maximum {MAX_BFILE}"
        )));
    }
    // (offset, terms): line i prints "offset+i terms[i]".
    let (offset, terms): (usize, Vec<BigInt>) = match sequence {
        "hertzsprung" => (0, hertzsprung_numbers(count.saturating_sub(1))),
        "avoider-count" => (0, avoider_numbers(count.saturating_sub(1))),
        "maxbox" => (0, (0..count).map(max_box_count).collect()),
        "walls" => (1, (1..=count).map(|h| lego::count_stable_walls(7, &[2, 3, 4], h)).collect()),
        "fibonacci" => {
            (2, (2..2 + count).map(|n| boxpat::binword::box1_avoider_count(4, n)).collect())
        }
        other => return Err(Error::Parse(format!("unknown sequence '{other}'"))),
    };
    let mut out = String::new();
    for (i, v) in terms.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", offset + i));
    }
    print!("{out}");
    Ok(0)
}

/// Depth-first enumeration of stable walls in canonical (lexicographic) order.
fn list_walls(configs: &[RowConfig], height: usize) -> Vec<Vec<RowConfig>> {
    let mut out = Vec::new();
    let mut stack: Vec<RowConfig> = Vec::new();
    fn rec(configs: &[RowConfig], height: usize, stack: &mut Vec<RowConfig>, out: &mut Vec<Vec<RowConfig>>) {
        if stack.len() == height {
            out.push(stack.clone());
            return;
        }
        for c in configs {
            if stack.last().map_or(true, |top| top.stackable(c)) {
                stack.push(c.clone());
                rec(configs, height, stack, out);
                stack.pop();
            }
        }
    }
    rec(configs, height, &mut stack, &mut out);
    out
}

fn cmd_lego(args: &LegoArgs) -> Result<u8, Error> {
    const BRICKS: &[u32] = &[2, 3, 4];
    match args.action.as_str() {
        "count" => {
            println!("{}", lego::count_stable_walls(args.width, BRICKS, args.height));
        }
        "list" => {
            if args.height > 8 {
                return Err(Error::BoundExceeded(format!(
                    "listing walls of height {} is above the bound 8",
                    args.height
                )));
            }
            let configs = lego::enumerate_row_configs(args.width, BRICKS);
            for (i, wall) in list_walls(&configs, args.height).iter().enumerate() {
                if i > 0 {
                    println!();
                }
                for row in wall {
                    println!("{row}");
                }
            }
        }
        "encode" => {
            let text = args
                .arg
                .as_deref()
                .ok_or_else(|| Error::Parse("encode requires a word argument".into()))?;
            let w = Word::parse(text, 5)?;
            let wall = lego::lego_encode(&w)?;
            println!("{wall}");
        }
        "decode" => {
            let path = args
                .arg
                .as_deref()
                .ok_or_else(|| Error::Parse("decode requires a wall file argument".into()))?;
            let text = if path == "-" {
                use std::io::Read;
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?
            };
            let wall = LegoWall::parse(args.width, &text)?;
            let w = lego::lego_decode(&wall)?;
            println!("{w}");
        }
        other => return Err(Error::Parse(format!("unknown lego action '{other}'"))),
    }
    Ok(0)
}
