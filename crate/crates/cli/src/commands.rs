use std::fmt::Write as _;
use std::path::Path;

use braidwo::divisors::{self, EnumMode};
use braidwo::expseq::{normalize_letters, word_of};
use braidwo::garside::{bridge_constant, complexity as cplx, d_of, greedy_nf};
use braidwo::growth::{ack_inv, ack_r_inv, ackermann, ackermann_diag, AckOutcome, GrowthFn};
use braidwo::hydra::{self, ord3, sci_digest};
use braidwo::ordinal::{hardy as hardy_fn, Ordinal, Variant};
use braidwo::special::{self, Insertion, OrdConvention, SkewTree};
use braidwo::verify::{self, CriterionReport, CRITERIA};
use braidwo::{wo, BraidWord, Error, ExpSeq, Nat};
use serde_json::{json, Value};

pub const CLI_SCHEMA: &str = "braidwo.cli/1";

pub struct Out {
    pub kind: &'static str,
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Out {
    fn ok(kind: &'static str, text: impl Into<String>, json: Value) -> Self {
        Out {
            kind,
            text: text.into(),
            json,
            code: 0,
        }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            let mut v = self.json.clone();
            if let Value::Object(m) = &mut v {
                m.insert("schema".into(), CLI_SCHEMA.into());
                m.insert("kind".into(), self.kind.into());
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        } else if !self.text.is_empty() {
            println!("{}", self.text.trim_end());
        }
    }
}

pub struct Fail {
    pub code: u8,
    pub message: String,
}

impl Fail {
    pub fn usage(message: impl Into<String>) -> Self {
        Fail {
            code: 2,
            message: message.into(),
        }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            let v = json!({ "schema": CLI_SCHEMA, "kind": "error", "error": self.message, "exit_code": self.code });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        } else {
            eprintln!("error: {}", self.message);
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Exhausted(_) | Error::Cap(_) => 3,
            _ => 2,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

type R = Result<Out, Fail>;

fn num(x: &Nat, sci: bool) -> String {
    if sci {
        sci_digest(x)
    } else {
        x.to_string()
    }
}

fn num_json(x: &Nat, sci: bool) -> Value {
    if sci {
        json!({ "value": x.to_string(), "digest": sci_digest(x), "bits": x.bits() })
    } else {
        json!(x.to_string())
    }
}

fn parse_nat(s: &str) -> Result<Nat, Fail> {
    s.parse::<Nat>()
        .map_err(|_| Fail::usage(format!("not a natural number: {s}")))
}

/// A 3-braid given as a word ("2211") or an exponent sequence ("(2,2)").
pub fn parse_braid(s: &str) -> Result<ExpSeq, Fail> {
    let s = s.trim();
    if s.starts_with('(') {
        return Ok(s.parse::<ExpSeq>()?);
    }
    let w = BraidWord::parse(s, 3)?;
    Ok(normalize_letters(w.letters()))
}

fn word_string(b: &ExpSeq) -> Result<String, Fail> {
    Ok(word_of(b)?.to_string())
}

pub fn normalize(word: &str) -> R {
    let w = BraidWord::parse(word, 3)?;
    let e = normalize_letters(w.letters());
    let nf = word_string(&e)?;
    Ok(Out::ok(
        "normalize",
        e.to_string(),
        json!({ "input": w.to_string(), "expseq": e.to_string(), "normal_word": nf, "length": w.len() }),
    ))
}

pub fn compare(a: &str, b: &str) -> R {
    let (x, y) = (parse_braid(a)?, parse_braid(b)?);
    let r = match x.cmp(&y) {
        std::cmp::Ordering::Less => "LESS",
        std::cmp::Ordering::Equal => "EQUAL",
        std::cmp::Ordering::Greater => "GREATER",
    };
    Ok(Out::ok(
        "compare",
        r,
        json!({ "a": x.to_string(), "b": y.to_string(), "result": r }),
    ))
}

pub fn complexity(braid: &str) -> R {
    let b = parse_braid(braid)?;
    let n = cplx(&b)?;
    let d = d_of(&b);
    let c = if b.is_trivial() {
        None
    } else {
        Some(bridge_constant(&b)?)
    };
    let text = match c {
        Some(c) => format!("{n}\t(d = {d}, C = {c})"),
        None => format!("{n}\t(d = {d})"),
    };
    Ok(Out::ok(
        "complexity",
        text,
        json!({ "braid": b.to_string(), "complexity": n, "d": d, "bridge_constant": c }),
    ))
}

pub fn greedy(braid: &str) -> R {
    let b = parse_braid(braid)?;
    let g = greedy_nf(&b)?;
    let factors: Vec<String> = g
        .factors
        .iter()
        .map(|f| f.letters().iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(Out::ok(
        "greedy",
        g.to_string(),
        json!({ "braid": b.to_string(), "factors": factors, "delta_power": g.d, "complexity": g.complexity() }),
    ))
}

pub fn ord(braid: &str) -> R {
    let b = parse_braid(braid)?;
    let o = ord3(&b);
    Ok(Out::ok(
        "ord",
        o.to_string(),
        json!({ "braid": b.to_string(), "ordinal": o.to_string() }),
    ))
}

pub fn fundseq(ordinal: &str, x: &str, variant: &str) -> R {
    let a: Ordinal = ordinal.parse()?;
    let x = parse_nat(x)?;
    let v: Variant = variant.parse()?;
    let f = v.fund(&a, &x)?;
    Ok(Out::ok(
        "fundseq",
        f.to_string(),
        json!({ "ordinal": a.to_string(), "x": x.to_string(), "variant": variant, "result": f.to_string() }),
    ))
}

pub fn hardy(ordinal: &str, x: &str, variant: &str, budget_bits: u64, sci: bool) -> R {
    let a: Ordinal = ordinal.parse()?;
    let x = parse_nat(x)?;
    let v: Variant = variant.parse()?;
    let h = hardy_fn(&a, &x, v, budget_bits)?;
    Ok(Out::ok(
        "hardy",
        num(&h, sci),
        json!({ "ordinal": a.to_string(), "x": x.to_string(), "variant": variant, "value": num_json(&h, sci) }),
    ))
}

pub fn ack(x: &str, level: Option<u64>, cutoff_bits: u64, sci: bool) -> R {
    let xn = parse_nat(x)?;
    let cutoff = Nat::from(1u32) << cutoff_bits;
    let out = match level {
        Some(r) => ackermann(r, &xn, &cutoff),
        None => {
            let xs = xn
                .to_string()
                .parse::<u64>()
                .map_err(|_| Fail::usage("diagonal argument too large"))?;
            ackermann_diag(xs, &cutoff)
        }
    };
    match out {
        AckOutcome::Value(v) => Ok(Out::ok(
            "ack",
            num(&v, sci),
            json!({ "x": xn.to_string(), "level": level, "value": num_json(&v, sci) }),
        )),
        AckOutcome::AboveCutoff => Err(Fail {
            code: 3,
            message: format!("value exceeds 2^{cutoff_bits}"),
        }),
    }
}

pub fn ackinv(x: &str, level: Option<u64>) -> R {
    let xn = parse_nat(x)?;
    let y = match level {
        Some(r) => ack_r_inv(r, &xn),
        None => ack_inv(&xn),
    };
    Ok(Out::ok(
        "ackinv",
        y.to_string(),
        json!({ "x": xn.to_string(), "level": level, "value": y }),
    ))
}

pub fn hydra_run(braid: &str, trace: bool, max_steps: u64, export: Option<&Path>) -> R {
    let b = parse_braid(braid)?;
    let tr = hydra::run(&b, max_steps);
    let mut text = String::new();
    if trace {
        for (t, x) in tr.states.iter().enumerate() {
            let w = word_string(x)?;
            let _ = writeln!(text, "{t:>4}  {:<24} {:<20} {}", x.to_string(), w, ord3(x));
        }
    }
    if let Some(p) = export {
        std::fs::write(p, tr.export()).map_err(|e| Fail::usage(format!("{}: {e}", p.display())))?;
    }
    let steps = tr.steps();
    let states: Vec<String> = tr.states.iter().map(|x| x.to_string()).collect();
    let mut out = Out::ok(
        "hydra-run",
        String::new(),
        json!({ "start": b.to_string(), "terminated": tr.terminated, "steps": steps, "trace": if trace { Some(states) } else { None } }),
    );
    if tr.terminated {
        let _ = writeln!(text, "T = {steps}");
    } else {
        let _ = writeln!(text, "not terminated after {steps} steps");
        out.code = 3;
    }
    out.text = text;
    Ok(out)
}

pub fn hydra_length(braid: &str, k: u64, method: &str, max_moves: u64, budget_bits: u64, sci: bool) -> R {
    let b = parse_braid(braid)?;
    let start = b.mul_sigma1_pow(k);
    let t = match method {
        "fast" => hydra::hydra_length_fast(&start, max_moves)?,
        "slow" => hydra::hydra_length(&start, max_moves)?,
        "hardy" => hydra::hardy_length(&b, k, budget_bits)?,
        m => return Err(Fail::usage(format!("unknown method {m}; expected fast, slow or hardy"))),
    };
    Ok(Out::ok(
        "hydra-length",
        num(&t, sci),
        json!({ "braid": b.to_string(), "k": k, "method": method, "length": num_json(&t, sci) }),
    ))
}

pub fn mirror(braid: &str, horizon: u64) -> R {
    let b = parse_braid(braid)?;
    let rep = hydra::mirror_check(&b, horizon);
    let mut text = String::new();
    for s in &rep.steps {
        let _ = writeln!(
            text,
            "t={:<3} {:<18} p={} {} -> {}  standard {} [{}]  adapted {} [{}]",
            s.t,
            s.case.to_string(),
            s.breadth,
            s.ord_before,
            s.ord_after,
            s.standard,
            if s.standard_match { "ok" } else { "MISS" },
            s.adapted,
            if s.adapted_match { "ok" } else { "MISS" },
        );
    }
    let bad = rep.unexplained();
    let _ = writeln!(
        text,
        "{} steps, {} standard mismatches, {} unexplained",
        rep.steps.len(),
        rep.standard_mismatches(),
        bad
    );
    let mut out = Out::ok(
        "mirror",
        text,
        json!({ "report": rep, "standard_mismatches": rep.standard_mismatches(), "unexplained": bad }),
    );
    if bad > 0 {
        out.code = 1;
    }
    Ok(out)
}

fn table_out(kind: &'static str, header: Value, entries: &[ExpSeq]) -> Out {
    let mut text = String::new();
    for (i, e) in entries.iter().enumerate() {
        let _ = writeln!(text, "{}\t{e}", i + 1);
    }
    let mut j = header;
    j["count"] = json!(entries.len());
    j["entries"] = json!(entries.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    Out::ok(kind, text, j)
}

pub fn enum_divisors(l: u64, mode: &str, no_cache: bool) -> R {
    let m: EnumMode = mode.parse()?;
    let t = if m == EnumMode::Recursive && !no_cache {
        divisors::cached_divisors(&divisors::cache_dir(), l)?
    } else {
        divisors::enumerate_divisors(l, m)?
    };
    Ok(table_out("enum-divisors", json!({ "l": l, "mode": mode }), t.entries()))
}

pub fn enum_s(k: u64, l: u64) -> R {
    let s = divisors::enumerate_s(k, l)?;
    Ok(table_out("enum-s", json!({ "k": k, "l": l }), &s))
}

pub fn count_total(l: u64, sci: bool) -> R {
    let n = divisors::divisor_count(l);
    Ok(Out::ok(
        "count-total",
        num(&n, sci),
        json!({ "l": l, "count": num_json(&n, sci) }),
    ))
}

pub fn count_s(k: u64, l: u64, sci: bool) -> R {
    let n = divisors::card_s(k, l)?;
    Ok(Out::ok(
        "count-s",
        num(&n, sci),
        json!({ "k": k, "l": l, "count": num_json(&n, sci) }),
    ))
}

pub fn wo_longest(k: u64, f: &str, max_len: u64, exhaustive: bool) -> R {
    let g: GrowthFn = f.parse()?;
    let r = wo::longest_simple(k, g, max_len)?;
    let ex = if exhaustive {
        Some(wo::longest_simple_exhaustive(k, g, max_len)?)
    } else {
        None
    };
    let outcome = serde_json::to_value(r.outcome).expect("json");
    let mut text = format!("{} {}\n", r.length, outcome.as_str().unwrap_or(""));
    if let Some(why) = &r.reason {
        let _ = writeln!(text, "stopped: {why}");
    }
    if let Some(e) = ex {
        let _ = writeln!(text, "exhaustive: {e}");
    }
    for (t, b) in r.witness.iter().enumerate() {
        let _ = writeln!(text, "{t}\t{b}");
    }
    Ok(Out::ok(
        "wo-longest",
        text,
        json!({ "k": k, "f": g.to_string(), "result": r, "exhaustive": ex }),
    ))
}

pub fn wo_dilate(k: u64, t_max: Option<u64>, window: u64) -> R {
    let h = wo::h_of(k, window)?.h;
    let t_max = t_max.unwrap_or(window * h);
    let rep = wo::dilation_report(k, h, t_max)?;
    let mut text = String::new();
    for r in &rep.rows {
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{}",
            r.t,
            r.seq,
            r.complexity,
            if r.within { "" } else { "OVER" }
        );
    }
    let _ = writeln!(
        text,
        "k={k} h={h}: descending {}, normal {}, within 2h+f_w(t) {}, max complexity {}",
        rep.descending, rep.all_normal, rep.all_within, rep.max_complexity
    );
    for v in &rep.violations {
        let _ = writeln!(text, "violation: {v}");
    }
    let ok = rep.descending && rep.all_normal && rep.all_within;
    let mut out = Out::ok("wo-dilate", text, json!({ "report": rep }));
    if !ok {
        out.code = 1;
    }
    Ok(out)
}

pub fn wo_experiment(k: u64, f: &str, max_len: u64) -> R {
    let g: GrowthFn = f.parse()?;
    let mut r = wo::wo_experiment(k, g, max_len)?;
    let millis = r.millis;
    r.millis = 0;
    let outcome = serde_json::to_value(r.outcome).expect("json");
    let text = format!(
        "k={k} f={g}: {} {} ({millis} ms)",
        r.length,
        outcome.as_str().unwrap_or("")
    );
    let mut j = serde_json::to_value(&r).expect("json");
    if let Value::Object(m) = &mut j {
        m.remove("millis");
    }
    Ok(Out::ok("wo-experiment", text, json!({ "report": j })))
}

fn tree(s: &str) -> Result<SkewTree, Fail> {
    Ok(s.parse::<SkewTree>()?)
}

fn letters(w: &[u8]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    let big = w.iter().any(|&x| x > 9);
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    parts.join(if big { " " } else { "" })
}

pub fn special_skew(t: &str) -> R {
    let x = tree(t)?;
    let w = x.word()?;
    Ok(Out::ok(
        "special-skew",
        letters(&w),
        json!({ "tree": x.to_string(), "strands": x.level().max(2), "word": letters(&w), "length": w.len() }),
    ))
}

pub fn special_parse(n: u8, word: &str) -> R {
    let w = BraidWord::parse(word, n)?;
    let x = special::parse_special(n, w.letters())?;
    Ok(Out::ok(
        "special-parse",
        x.to_string(),
        json!({ "word": w.to_string(), "strands": n, "tree": x.to_string() }),
    ))
}

pub fn special_run(t: &str, trace: bool, max_steps: u64, insertion: &str) -> R {
    let x = tree(t)?;
    let ins: Insertion = insertion.parse()?;
    let tr = special::run_sp(&x, max_steps, ins)?;
    let mut text = String::new();
    if trace {
        for (i, s) in tr.states.iter().enumerate() {
            let _ = writeln!(text, "{i:>4}  {:<28} {}", s.to_string(), letters(&s.word()?));
        }
    }
    let steps = tr.states.len() - 1;
    let mut out = Out::ok(
        "special-run",
        String::new(),
        json!({
            "start": x.to_string(),
            "insertion": insertion,
            "terminated": tr.terminated,
            "steps": steps,
            "trace": if trace { Some(tr.states.iter().map(|s| s.to_string()).collect::<Vec<_>>()) } else { None },
        }),
    );
    if tr.terminated {
        let _ = writeln!(text, "T^sp = {steps}");
    } else {
        let _ = writeln!(text, "not terminated after {steps} steps");
        out.code = 3;
    }
    out.text = text;
    Ok(out)
}

pub fn special_ord(t: &str, convention: &str) -> R {
    let x = tree(t)?;
    let c: OrdConvention = convention.parse()?;
    let o = special::ord_sp(&x, c);
    Ok(Out::ok(
        "special-ord",
        o.to_string(),
        json!({ "tree": x.to_string(), "convention": convention, "ordinal": o.to_string() }),
    ))
}

pub fn special_mirror(t: &str, horizon: u64, insertion: &str, convention: &str) -> R {
    let x = tree(t)?;
    let ins: Insertion = insertion.parse()?;
    let c: OrdConvention = convention.parse()?;
    let steps = special::mirror_check_sp(&x, horizon, ins, c)?;
    let mut text = String::new();
    for s in &steps {
        let _ = writeln!(
            text,
            "t={:<3} {} -> {}  predicted {} [{}]",
            s.t,
            s.ord_before,
            s.ord_after,
            s.predicted,
            if s.matches { "ok" } else { "MISS" }
        );
    }
    let misses = steps.iter().filter(|s| !s.matches).count();
    let _ = writeln!(text, "{} steps, {misses} mismatches", steps.len());
    let mut out = Out::ok(
        "special-mirror",
        text,
        json!({ "tree": x.to_string(), "steps": steps, "mismatches": misses }),
    );
    if misses > 0 {
        out.code = 1;
    }
    Ok(out)
}

fn report_json(r: &CriterionReport) -> Value {
    json!({ "id": r.id, "name": r.name, "passed": r.passed, "notes": r.notes, "failures": r.failures })
}

pub fn verify(suite: &str, jobs: Option<usize>) -> R {
    let ids: Vec<u8> = if suite == "all" {
        CRITERIA.iter().map(|c| c.0).collect()
    } else {
        let id = verify::criterion_id(suite).ok_or_else(|| {
            let names: Vec<&str> = CRITERIA.iter().map(|c| c.1).collect();
            Fail::usage(format!(
                "unknown suite {suite}; expected all, 1-14 or one of {}",
                names.join(", ")
            ))
        })?;
        vec![id]
    };
    let jobs = jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .max(1);
    let mut reports: Vec<Option<CriterionReport>> = vec![None; ids.len()];
    for chunk in ids.chunks(jobs).zip(reports.chunks_mut(jobs)) {
        std::thread::scope(|s| {
            let hs: Vec<_> = chunk
                .0
                .iter()
                .map(|&id| s.spawn(move || verify::run_criterion(id)))
                .collect();
            for (slot, h) in chunk.1.iter_mut().zip(hs) {
                *slot = Some(h.join().expect("suite panicked"));
            }
        });
    }
    let reports: Vec<CriterionReport> = reports.into_iter().map(|r| r.expect("ran")).collect();
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{}", r.line());
        for n in &r.notes {
            let _ = writeln!(text, "       {n}");
        }
        for f in &r.failures {
            let _ = writeln!(text, "     ! {f}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(text, "{} passed, {failed} failed", reports.len() - failed);
    let mut out = Out::ok(
        "verify",
        text,
        json!({
            "suite": suite,
            "timestamp": crate::manifest::now_unix(),
            "passed": failed == 0,
            "results": reports.iter().map(report_json).collect::<Vec<_>>(),
        }),
    );
    if failed > 0 {
        out.code = 1;
    }
    Ok(out)
}
