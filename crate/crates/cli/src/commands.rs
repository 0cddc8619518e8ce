use std::time::Instant;

use antipowers::{
    ap_min, ap_set, compute_n, density_estimate, extract_power_witness, find_anti_power_factor,
    first_anti_power_factor, is_k_anti_power, is_k_power, p_set, Error, InfiniteWord,
    SearchParams, SearchStatus, Word,
};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{CheckMode, Command, Format, Kind};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

pub struct Outcome {
    pub output: String,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::BudgetExhausted { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: EXIT_USAGE,
    }
}

/// JSON wrapper shared by every command.
#[derive(Serialize)]
struct OutputEnvelope<'a> {
    command: &'a str,
    params: Value,
    result: Value,
    elapsed_ms: u128,
}

fn envelope(command: &str, params: Value, result: impl Serialize, started: Instant) -> String {
    let env = OutputEnvelope {
        command,
        params,
        result: serde_json::to_value(result).expect("serializable result"),
        elapsed_ms: started.elapsed().as_millis(),
    };
    let mut out = serde_json::to_string_pretty(&env).expect("serializable envelope");
    out.push('\n');
    out
}

fn infinite_word(name: &str, cap: Option<usize>) -> Result<InfiniteWord, Failure> {
    let x: InfiniteWord = name.parse()?;
    Ok(match cap {
        Some(c) => x.with_cap(c),
        None => x,
    })
}

/// Parses `3..20,30,50` style lists (ranges inclusive).
pub fn parse_list(text: &str) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| usage(format!("bad number {s:?} in {text:?}: {e}")))
        };
        match part.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                out.extend(num(a)?..=num(b)?);
            }
            None => out.push(num(part)?),
        }
    }
    if out.is_empty() {
        return Err(usage(format!("empty list {text:?}")));
    }
    Ok(out)
}

pub fn run(command: Command) -> Result<Outcome, Failure> {
    let started = Instant::now();
    match command {
        Command::Generate {
            word,
            length,
            format,
            cap,
        } => {
            let x = infinite_word(&word, cap)?;
            let prefix = x.prefix(length)?;
            let output = match format {
                Format::Json => envelope(
                    "generate",
                    json!({ "word": x.to_string(), "length": length }),
                    &prefix,
                    started,
                ),
                _ => format!("{prefix}\n"),
            };
            Ok(Outcome {
                output,
                code: EXIT_OK,
            })
        }

        Command::ApTable {
            word,
            orders,
            limit,
            format,
            cap,
        } => {
            let x = infinite_word(&word, cap)?;
            let orders = parse_list(&orders)?;
            if orders.iter().any(|&k| k < 2) {
                return Err(usage("orders must be at least 2"));
            }
            let mut rows = Vec::with_capacity(orders.len());
            for k in orders {
                let m = ap_min(&x, k, limit)?;
                rows.push(json!({ "k": k, "m": m, "length": m.map(|m| m * k) }));
            }
            let output = match format {
                Format::Json => envelope(
                    "ap-table",
                    json!({ "word": x.to_string(), "limit": limit }),
                    &rows,
                    started,
                ),
                _ => {
                    let mut out = String::from("k,m,length\n");
                    for r in &rows {
                        let cell = |v: &Value| v.as_u64().map(|n| n.to_string()).unwrap_or_default();
                        out.push_str(&format!("{},{},{}\n", r["k"], cell(&r["m"]), cell(&r["length"])));
                    }
                    out
                }
            };
            Ok(Outcome {
                output,
                code: EXIT_OK,
            })
        }

        Command::Check {
            target,
            k,
            mode,
            limit,
            format,
            cap,
        } => check(&target, k, mode, limit, format, cap, started),

        Command::SearchN {
            l,
            k,
            alphabet,
            cap,
            parallel,
            format,
        } => {
            let params = SearchParams::new(l, k)
                .alphabet(alphabet)
                .length_cap(cap)
                .parallel_depth(parallel.unwrap_or(0));
            let outcome = compute_n(&params)?;
            let code = match outcome.status {
                SearchStatus::Exact(_) => EXIT_OK,
                SearchStatus::LowerBoundOnly(_) => EXIT_NEGATIVE,
            };
            let output = match format {
                Format::Json => envelope(
                    "search-n",
                    json!({ "l": l, "k": k, "alphabet": alphabet, "cap": cap }),
                    &outcome,
                    started,
                ),
                _ => match outcome.status {
                    SearchStatus::Exact(n) => {
                        format!("N({l},{k}) = {n} (alphabet {alphabet}), witness {}\n", outcome.max_avoiding_word)
                    }
                    SearchStatus::LowerBoundOnly(n) => format!(
                        "N({l},{k}) > {n} (alphabet {alphabet}, cap reached), witness {}\n",
                        outcome.max_avoiding_word
                    ),
                },
            };
            Ok(Outcome { output, code })
        }

        Command::SearchTable {
            powers,
            orders,
            alphabet,
            cap,
            parallel,
        } => {
            let mut out = String::from("l,k,N\n");
            for l in parse_list(&powers)? {
                for &k in &parse_list(&orders)? {
                    let params = SearchParams::new(l, k)
                        .alphabet(alphabet)
                        .length_cap(cap)
                        .parallel_depth(parallel.unwrap_or(0));
                    let cell = match compute_n(&params)?.status {
                        SearchStatus::Exact(n) => n.to_string(),
                        SearchStatus::LowerBoundOnly(n) => format!(">{n}"),
                    };
                    out.push_str(&format!("{l},{k},{cell}\n"));
                }
            }
            Ok(Outcome {
                output: out,
                code: EXIT_OK,
            })
        }

        Command::Witness {
            word,
            k,
            l,
            budget,
            format,
            cap,
        } => {
            let x = infinite_word(&word, cap)?;
            let result = extract_power_witness(&x, k, l, budget)?;
            let output = match format {
                Format::Json => envelope(
                    "witness",
                    json!({ "word": x.to_string(), "k": k, "l": l, "budget": budget }),
                    &result,
                    started,
                ),
                _ => match &result {
                    antipowers::Dichotomy::Power(e) => format!(
                        "power: u = {} with u^{} at position {} (r = {}, s = {}, i = {}, j = {})\n",
                        e.u, e.l, e.position, e.r, e.s, e.i, e.j
                    ),
                    antipowers::Dichotomy::AntiPower(r) => format!(
                        "anti-power: {} prefixes of order {} in m = {}..={}, first m = {}\n",
                        r.members.len(),
                        r.k,
                        r.scanned.0,
                        r.scanned.1,
                        r.members[0]
                    ),
                },
            };
            Ok(Outcome {
                output,
                code: EXIT_OK,
            })
        }

        Command::Density {
            word,
            k,
            kind,
            horizon,
            format,
            cap,
        } => {
            let x = infinite_word(&word, cap)?;
            let set = match kind {
                Kind::Ap => ap_set(&x, k, horizon)?,
                Kind::P => p_set(&x, k, horizon)?,
            };
            let estimate = density_estimate(&set)?;
            let output = match format {
                Format::Json => envelope(
                    "density",
                    json!({ "word": x.to_string(), "k": k, "kind": set.kind, "horizon": horizon }),
                    json!({ "set": set, "density": estimate }),
                    started,
                ),
                _ => estimate.to_csv(),
            };
            Ok(Outcome {
                output,
                code: EXIT_OK,
            })
        }
    }
}

fn check(
    target: &str,
    k: usize,
    mode: CheckMode,
    limit: Option<usize>,
    format: Format,
    cap: Option<usize>,
    started: Instant,
) -> Result<Outcome, Failure> {
    if k == 0 {
        return Err(usage("k must be at least 1"));
    }
    let (source, word, x) = match target.strip_prefix("literal:") {
        Some("") => return Err(usage("empty literal")),
        Some(text) => (target.to_string(), Some(Word::parse_ascii(text)?), None),
        None => {
            let x = infinite_word(target, cap)?;
            (x.to_string(), None, Some(x))
        }
    };
    let prefix_of = |x: &InfiniteWord| -> Result<Word, Failure> {
        let n = limit.ok_or_else(|| usage("generator targets need --limit"))?;
        Ok(x.prefix(n)?)
    };

    let (holds, result) = match mode {
        CheckMode::AntiPower | CheckMode::Power => {
            let w = match (&word, &x) {
                (Some(w), _) => w.clone(),
                (None, Some(x)) => prefix_of(x)?,
                _ => unreachable!(),
            };
            let holds = if mode == CheckMode::Power {
                is_k_power(&w, k)
            } else {
                is_k_anti_power(&w, k)
            };
            (holds, json!({ "holds": holds, "length": w.len() }))
        }
        CheckMode::Scan => {
            if k < 2 {
                return Err(usage("scan needs k >= 2"));
            }
            let hit = match (&word, &x) {
                (Some(w), _) => first_anti_power_factor(w, k),
                (None, Some(x)) => {
                    let n = limit.ok_or_else(|| usage("generator targets need --limit"))?;
                    find_anti_power_factor(x, k, n)?
                }
                _ => unreachable!(),
            };
            (hit.is_some(), json!({ "found": hit.is_some(), "factor": hit }))
        }
    };

    let output = match format {
        Format::Json => envelope(
            "check",
            json!({ "target": source, "k": k, "mode": mode.to_possible_value().expect("named mode").get_name(), "limit": limit }),
            &result,
            started,
        ),
        _ => match mode {
            CheckMode::Scan => match result["factor"].as_object() {
                Some(f) => format!(
                    "found: {k}-anti-power at position {} with block length {}\n",
                    f["position"], f["block_length"]
                ),
                None => "not-found\n".to_string(),
            },
            _ => format!("{}\n", if holds { "holds" } else { "fails" }),
        },
    };
    Ok(Outcome {
        output,
        code: if holds { EXIT_OK } else { EXIT_NEGATIVE },
    })
}
