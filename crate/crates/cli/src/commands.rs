use std::fmt::Write as _;
use std::time::Instant;

use colorkit::counting::{
    capacity_disjoint, capacity_single, capacity_two_qminus1, count_auto, count_brute,
    count_disjoint, count_single, count_two_qminus1, exponent_grid_argmax, info_rate, CountReport,
    DEFAULT_MAX_STATES,
};
use colorkit::covering::{
    pair_coverage, schonheim_bound, schonheim_tightness, search_min_cover, t_capital_min,
    verify_t_capital_min, CoverSearchResult, TminCertificate,
};
use colorkit::{
    apply_profile, make_profile, reconstruct, Alphabet, ColoredOutput, ColoringProfile, Error,
    Sequence,
};
use serde_json::{json, Value};

use crate::args::*;
use crate::exit::{self, Failure};
use crate::parse;

pub struct Report {
    pub result: Value,
    pub text: String,
    pub code: u8,
}

impl Report {
    fn ok(result: Value, text: String) -> Self {
        Report {
            result,
            text,
            code: exit::OK,
        }
    }
}

type Outcome = Result<Report, Failure>;

/// Runs one subcommand; returns its name, its parameters and the outcome.
pub fn run(command: &Command) -> (String, Value, Outcome) {
    fn params<T: serde::Serialize>(args: &T) -> Value {
        serde_json::to_value(args).expect("arguments serialize")
    }
    match command {
        Command::Apply(a) => ("apply".into(), params(a), apply(a)),
        Command::Count(a) => ("count".into(), params(a), count(a)),
        Command::Rate(a) => ("rate".into(), params(a), rate(a)),
        Command::Capacity(a) => ("capacity".into(), params(a), capacity(a)),
        Command::Cover(CoverCommand::Check(a)) => ("cover check".into(), params(a), cover_check(a)),
        Command::Cover(CoverCommand::Search(a)) => {
            ("cover search".into(), params(a), cover_search(a))
        }
        Command::Cover(CoverCommand::Bound(a)) => ("cover bound".into(), params(a), cover_bound(a)),
        Command::Cover(CoverCommand::Tmin(a)) => {
            ("cover Tmin".into(), params(a), tmin(&a.qc, a.verify))
        }
        Command::Cover(CoverCommand::TminVerify(a)) => {
            ("cover Tmin-verify".into(), params(a), tmin(a, true))
        }
        Command::Reconstruct(a) => ("reconstruct".into(), params(a), reconstruct_cmd(a)),
        Command::Bench(a) => ("bench".into(), params(a), bench(a)),
    }
}

fn alphabet(q: u32) -> Result<Alphabet, Failure> {
    Ok(Alphabet::new(q)?)
}

fn profile(q: u32, field: &str, s: &str) -> Result<ColoringProfile, Failure> {
    let sets = parse::lists(field, s)?;
    Ok(make_profile(alphabet(q)?, &sets)?)
}

fn max_states() -> Result<u64, Failure> {
    match std::env::var("COLORKIT_MAX_STATES") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("COLORKIT_MAX_STATES: not a count: {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_STATES),
    }
}

fn apply(a: &ApplyArgs) -> Outcome {
    let p = profile(a.q, "--profile", &a.profile)?;
    let x = parse::sequence("--x", &a.x)?;
    let out = apply_profile(&x, &p)?;
    let streams: Vec<String> = out.streams().iter().map(|s| s.to_string()).collect();
    let text = streams.join("\n") + "\n";
    Ok(Report::ok(
        json!({ "profile": p.to_string(), "streams": streams }),
        text,
    ))
}

/// Counting parameters after reconciling `--c`, `--t` and `--profile`.
struct Resolved {
    report: CountReport,
    /// The profile a brute-force check should enumerate.
    oracle: Option<ColoringProfile>,
}

fn require(value: Option<usize>, name: &str, method: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::input(format!("--method {method} needs --{name} or --profile")))
}

fn check_shape(spec: &CountSpec, p: &ColoringProfile) -> Result<(), Failure> {
    for (flag, given, actual) in [("c", spec.c, p.c()), ("t", spec.t, p.t())] {
        if given.is_some_and(|g| g != actual) {
            return Err(Failure::domain(format!(
                "--{flag} {} disagrees with the profile ({actual})",
                given.unwrap()
            )));
        }
    }
    Ok(())
}

/// Profile with the shape a closed form assumes, built from consecutive
/// symbols.
fn canonical(q: u32, sets: Vec<Vec<u32>>) -> Result<ColoringProfile, Failure> {
    Ok(make_profile(alphabet(q)?, &sets)?)
}

fn resolve(spec: &CountSpec, n: usize, cap: u64) -> Result<Resolved, Failure> {
    let q = spec.q;
    let given = match &spec.profile {
        Some(s) => Some(profile(q, "--profile", s)?),
        None => None,
    };
    if let Some(p) = &given {
        check_shape(spec, p)?;
    }
    let c = given.as_ref().map(|p| p.c()).or(spec.c);
    let t = given.as_ref().map(|p| p.t()).or(spec.t);
    let resolved = match spec.method {
        Method::Brute | Method::Auto => {
            let p =
                given.ok_or_else(|| Failure::input("--method brute and auto need --profile"))?;
            let report = if spec.method == Method::Brute {
                count_brute(n, &p, cap)?
            } else {
                count_auto(n, &p, cap)?
            };
            Resolved {
                report,
                oracle: Some(p),
            }
        }
        Method::Lemma1 => {
            let c = require(c, "c", "lemma1")?;
            if t.unwrap_or(1) != 1 {
                return Err(Failure::domain(
                    "--method lemma1 counts a single coloring (t = 1)",
                ));
            }
            let report = count_single(q, c, n)?;
            let oracle = match given {
                Some(p) => Some(p),
                None => Some(canonical(q, vec![(0..c as u32).collect()])?),
            };
            Resolved { report, oracle }
        }
        Method::Prop2 => {
            if c.is_some_and(|c| c + 1 != q as usize) || t.unwrap_or(2) != 2 {
                return Err(Failure::domain(
                    "--method prop2 needs two colorings of size q-1",
                ));
            }
            let report = count_two_qminus1(q, n)?;
            let oracle = match given {
                Some(p) => Some(p),
                None => {
                    let drop = |s: u32| (0..q).filter(|&v| v != s).collect::<Vec<_>>();
                    Some(canonical(q, vec![drop(q - 1), drop(q - 2)])?)
                }
            };
            Resolved { report, oracle }
        }
        Method::Thm4 => {
            let c = require(c, "c", "thm4")?;
            let t = require(t, "t", "thm4")?;
            if given.as_ref().is_some_and(|p| !p.is_disjoint()) {
                return Err(Failure::domain(
                    "--method thm4 needs pairwise disjoint colorings",
                ));
            }
            let report = count_disjoint(q, c, t, n)?;
            let oracle = match given {
                Some(p) => Some(p),
                None => {
                    let sets = (0..t as u32)
                        .map(|j| (j * c as u32..(j + 1) * c as u32).collect())
                        .collect();
                    Some(canonical(q, sets)?)
                }
            };
            Resolved { report, oracle }
        }
    };
    Ok(resolved)
}

fn report_json(r: &CountReport) -> Value {
    json!({
        "q": r.q,
        "c": r.c,
        "t": r.t,
        "n": r.n,
        "method": r.method.name(),
        "formula": r.method.formula(),
        "count": r.count.to_string(),
        "within_hypothesis": r.within_hypothesis,
    })
}

fn count(a: &CountArgs) -> Outcome {
    let cap = max_states()?;
    let Resolved { report, oracle } = resolve(&a.spec, a.spec.n, cap)?;
    let mut result = report_json(&report);
    let mut text = format!(
        "count: {}\nmethod: {} ({})\n",
        report.count,
        report.method,
        report.method.formula()
    );
    if !report.within_hypothesis {
        text.push_str("note: parameters lie outside the formula's stated hypotheses (q >= 4)\n");
    }
    let mut code = exit::OK;
    if a.verify {
        let p = oracle.expect("every method has an oracle profile");
        let brute = count_brute(report.n, &p, cap)?.count;
        let agree = brute == report.count;
        result["verify"] =
            json!({ "profile": p.to_string(), "brute": brute.to_string(), "agree": agree });
        let verdict = if agree { "OK" } else { "MISMATCH" };
        let _ = writeln!(text, "verify: {verdict} (brute force over {p}: {brute})");
        if !agree {
            code = exit::VERIFY;
        }
    }
    Ok(Report { result, text, code })
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.6}"))
}

fn rate(a: &RateArgs) -> Outcome {
    let cap = max_states()?;
    if a.series {
        let mut rows = Vec::new();
        let mut text = String::from("n,R_n\n");
        for n in 1..=a.spec.n {
            let r = info_rate(&resolve(&a.spec, n, cap)?.report)?;
            let _ = writeln!(text, "{n},{}", r.rate);
            rows.push(json!({ "n": n, "rate": r.rate }));
        }
        return Ok(Report::ok(json!({ "series": rows }), text));
    }
    let report = resolve(&a.spec, a.spec.n, cap)?.report;
    let r = info_rate(&report)?;
    let mut result = report_json(&report);
    result["rate"] = json!(r.rate);
    result["capacity"] = json!(r.capacity);
    result["s_opt"] = json!(r.s_opt);
    let mut text = format!("rate: {:.6}\ncapacity: {}\n", r.rate, opt(r.capacity));
    if let Some(s) = r.s_opt {
        let _ = writeln!(text, "s_opt: {s:.6}");
    }
    let _ = writeln!(text, "count: {}", report.count);
    Ok(Report::ok(result, text))
}

fn capacity(a: &CapacityArgs) -> Outcome {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Failure::input(format!("--mode needs --{name}")))
    };
    match a.mode {
        CapacityMode::Single => {
            let cap = capacity_single(a.q, need(a.c, "c")?)?;
            Ok(Report::ok(
                json!({ "capacity": cap }),
                format!("capacity: {cap:.6}\n"),
            ))
        }
        CapacityMode::Disjoint => {
            let cap = capacity_disjoint(a.q, need(a.c, "c")?, need(a.t, "t")?)?;
            Ok(Report::ok(
                json!({ "capacity": cap }),
                format!("capacity: {cap:.6}\n"),
            ))
        }
        CapacityMode::TwoQminus1 => {
            let cap = capacity_two_qminus1(a.q)?;
            let mut result = json!({ "capacity": cap.capacity, "s_opt": cap.s_opt });
            let mut text = format!("capacity: {:.6}\ns_opt: {:.6}\n", cap.capacity, cap.s_opt);
            if let Some(step) = a.grid {
                let g = exponent_grid_argmax(a.q, step)?;
                result["grid"] = json!({ "step": step, "s": g.s, "t": g.t, "value": g.value });
                let _ = writeln!(
                    text,
                    "grid argmax (step {step}): s={:.6} t={:.6} value={:.6}",
                    g.s, g.t, g.value
                );
            }
            Ok(Report::ok(result, text))
        }
    }
}

fn cover_check(a: &CoverCheckArgs) -> Outcome {
    let p = profile(a.q, "--profile", &a.profile)?;
    let map = pair_coverage(&p);
    let uncovered = map.uncovered_pairs();
    let text = if map.is_complete() {
        "2-cover: every pair is covered\n".to_string()
    } else {
        let list: Vec<String> = uncovered
            .iter()
            .map(|(a, b)| format!("{{{a},{b}}}"))
            .collect();
        format!("NOT a 2-cover; uncovered pairs: {}\n", list.join(" "))
    };
    let result = json!({
        "profile": p.to_string(),
        "is_2_cover": map.is_complete(),
        "uncovered": uncovered,
    });
    Ok(Report::ok(result, text))
}

fn search_report(r: &CoverSearchResult) -> (Value, String) {
    let result = json!({
        "q": r.q,
        "c": r.c,
        "t_found": r.t_found,
        "lower_bound": r.lower_bound.to_string(),
        "optimal": r.optimal,
        "nodes": r.nodes,
        "witness": r.witness.to_string(),
    });
    let status = if r.optimal {
        "optimal"
    } else {
        "not proved optimal"
    };
    let text = format!(
        "t = {} ({status}; Schönheim bound {})\nwitness: {}\nnodes: {}\n",
        r.t_found, r.lower_bound, r.witness, r.nodes
    );
    (result, text)
}

fn cover_search(a: &CoverSearchArgs) -> Outcome {
    match search_min_cover(a.q, a.c, a.budget) {
        Ok(r) => {
            let (result, text) = search_report(&r);
            Ok(Report::ok(result, text))
        }
        Err(Error::BudgetExceeded { budget, incumbent }) => {
            let mut f = Failure::new(
                exit::LIMIT,
                format!(
                    "search budget of {budget} nodes exhausted; reporting the best cover found"
                ),
            );
            f.partial = Some(search_report(&incumbent));
            Err(f)
        }
        Err(e) => Err(e.into()),
    }
}

fn cover_bound(a: &CoverBoundArgs) -> Outcome {
    let bound = schonheim_bound(a.q, a.c, a.tau)?;
    let tight = schonheim_tightness(a.q, a.c, a.tau)?;
    let result = json!({ "schonheim_bound": bound.to_string(), "divisibility_holds": tight });
    let text = format!(
        "Schönheim bound: {bound}\ndivisibility conditions: {}\n",
        if tight { "hold" } else { "fail" }
    );
    Ok(Report::ok(result, text))
}

fn certificate_json(cert: &TminCertificate) -> Value {
    json!({
        "witness": cert.witness.to_string(),
        "witness_uncovered": cert.witness_uncovered,
        "below_checked": cert.below_checked,
        "below_non_covers": cert.below_non_covers,
        "at_checked": cert.at_checked,
        "at_all_cover": cert.at_all_cover,
        "certified": cert.certified,
    })
}

fn tmin(a: &QcArgs, verify: bool) -> Outcome {
    let t = t_capital_min(a.q, a.c)?;
    let mut result = json!({ "q": a.q, "c": a.c, "t_capital_min": t.to_string() });
    let mut text = format!("T_min({}, {}) = {t}\n", a.q, a.c);
    let mut code = exit::OK;
    if verify {
        let cert = verify_t_capital_min(a.q, a.c)?;
        result["certificate"] = certificate_json(&cert);
        let _ = writeln!(
            text,
            "{}: {} of {} profiles of size {} are not covers; {} of size {t} checked, all cover: {}",
            if cert.certified { "certified" } else { "NOT certified" },
            cert.below_non_covers,
            cert.below_checked,
            t - 1,
            cert.at_checked,
            cert.at_all_cover,
        );
        if !cert.certified {
            code = exit::VERIFY;
        }
    }
    Ok(Report { result, text, code })
}

fn reconstruct_cmd(a: &ReconstructArgs) -> Outcome {
    let p = profile(a.q, "--profile", &a.profile)?;
    if let Some(raw) = &a.roundtrip {
        let x = parse::sequence("--roundtrip", raw)?;
        let out = apply_profile(&x, &p)?;
        let streams: Vec<String> = out.streams().iter().map(|s| s.to_string()).collect();
        let decoded = reconstruct(&out)?;
        let ok = decoded == x;
        let result = json!({
            "input": x.to_string(),
            "streams": streams,
            "decoded": decoded.to_string(),
            "ok": ok,
        });
        let text = format!(
            "round trip {}\ndecoded: {decoded}\n",
            if ok { "OK" } else { "MISMATCH" }
        );
        let code = if ok { exit::OK } else { exit::VERIFY };
        return Ok(Report { result, text, code });
    }
    let streams: Vec<Sequence> = if let Some(s) = &a.streams {
        parse::lists("--streams", s)?
            .into_iter()
            .map(Sequence::from)
            .collect()
    } else {
        let path = a.input.as_ref().expect("clap requires one source");
        let contents = std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("--in {}: {e}", path.display())))?;
        parse::stream_file(&format!("--in {}", path.display()), &contents)?
    };
    let out = ColoredOutput::new(&p, streams)?;
    let x = reconstruct(&out)?;
    Ok(Report::ok(
        json!({ "sequence": x.to_string(), "length": x.len() }),
        format!("{x}\n"),
    ))
}

fn bench(a: &BenchArgs) -> Outcome {
    use rand::{Rng, SeedableRng};

    let mut rows = Vec::new();
    let mut text = String::new();
    let mut time =
        |name: &str, f: &mut dyn FnMut() -> Result<(), Failure>| -> Result<(), Failure> {
            let start = Instant::now();
            for _ in 0..a.repeat {
                f()?;
            }
            let ms = start.elapsed().as_secs_f64() * 1e3 / a.repeat.max(1) as f64;
            let _ = writeln!(text, "{name}: {ms:.1} ms");
            rows.push(json!({ "task": name, "ms": ms }));
            Ok(())
        };

    let two = canonical(5, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 4]])?;
    time("enumerate q=5 t=2 n=8", &mut || {
        count_brute(8, &two, DEFAULT_MAX_STATES)?;
        Ok(())
    })?;
    time("search (7,3)", &mut || {
        search_min_cover(7, 3, colorkit::covering::DEFAULT_NODE_BUDGET)?;
        Ok(())
    })?;
    let cover = match search_min_cover(20, 3, 20_000) {
        Ok(r) => r.witness,
        Err(Error::BudgetExceeded { incumbent, .. }) => incumbent.witness,
        Err(e) => return Err(e.into()),
    };
    time("decode 1000 x q=20 n=500", &mut || {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let x: Sequence = (0..500)
                .map(|_| rng.gen_range(0..20u32))
                .collect::<Vec<_>>()
                .into();
            let out = apply_profile(&x, &cover)?;
            if reconstruct(&out)? != x {
                return Err(Failure::new(exit::VERIFY, "decoder mismatch"));
            }
        }
        Ok(())
    })?;
    Ok(Report::ok(json!({ "timings": rows }), text))
}
