//! Browser bindings. Every entry point takes plain strings and returns a
//! JSON document, with an `error` field when the input is rejected.

use braidwo::expseq::{normalize_letters, word_of};
use braidwo::hydra::{self, ord3};
use braidwo::ordinal::{hardy as hardy_fn, Ordinal, Variant};
use braidwo::{BraidWord, Error, ExpSeq};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Cap on Hardy budgets requested from the page.
const MAX_BUDGET_BITS: u32 = 1 << 16;

fn braid(s: &str) -> Result<ExpSeq, Error> {
    let s = s.trim();
    if s.starts_with('(') {
        s.parse()
    } else {
        Ok(normalize_letters(BraidWord::parse(s, 3)?.letters()))
    }
}

fn reply(r: Result<Value, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

#[wasm_bindgen]
pub fn normalize(word: &str) -> String {
    reply(braid(word).and_then(|b| {
        Ok(json!({
            "expseq": b.to_string(),
            "word": word_of(&b)?.to_string(),
            "ordinal": ord3(&b).to_string(),
        }))
    }))
}

#[wasm_bindgen]
pub fn compare(a: &str, b: &str) -> String {
    reply(braid(a).and_then(|x| {
        let y = braid(b)?;
        let r = match x.cmp(&y) {
            std::cmp::Ordering::Less => "LESS",
            std::cmp::Ordering::Equal => "EQUAL",
            std::cmp::Ordering::Greater => "GREATER",
        };
        Ok(json!({ "a": x.to_string(), "b": y.to_string(), "result": r }))
    }))
}

#[wasm_bindgen]
pub fn hydra_trace(start: &str, max_steps: u32) -> String {
    reply(braid(start).and_then(|b| {
        let tr = hydra::run(&b, max_steps as u64);
        let rows: Result<Vec<Value>, Error> = tr
            .states
            .iter()
            .map(|x| {
                Ok(json!({ "expseq": x.to_string(), "word": word_of(x)?.to_string(), "ordinal": ord3(x).to_string() }))
            })
            .collect();
        Ok(json!({ "terminated": tr.terminated, "steps": tr.steps(), "states": rows? }))
    }))
}

#[wasm_bindgen]
pub fn hardy(ordinal: &str, x: &str, variant: &str, budget_bits: u32) -> String {
    reply((|| {
        let a: Ordinal = ordinal.parse()?;
        let v: Variant = variant.parse()?;
        let x = x.trim().parse().map_err(|_| Error::Parse {
            what: "natural number",
            detail: x.into(),
        })?;
        let h = hardy_fn(&a, &x, v, budget_bits.min(MAX_BUDGET_BITS) as u64)?;
        Ok(
            json!({ "ordinal": a.to_string(), "value": h.to_string(), "digest": hydra::sci_digest(&h), "bits": h.bits() }),
        )
    })())
}

#[wasm_bindgen]
pub fn fundamental_sequence(ordinal: &str, x: u32, variant: &str) -> String {
    reply((|| {
        let a: Ordinal = ordinal.parse()?;
        let v: Variant = variant.parse()?;
        let f = v.fund(&a, &x.into())?;
        Ok(json!({ "ordinal": a.to_string(), "x": x, "result": f.to_string() }))
    })())
}
