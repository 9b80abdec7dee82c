use std::fmt::Write as _;
use std::io::{self, BufRead, Write};
use std::path::Path;

use braidwo::hydra::{game_step, ord3, permitted_positions};
use braidwo::Nat;
use serde_json::json;

use crate::commands::{parse_braid, Fail, Out};

/// Interactive game on stdin. Each line is a position to hit or `quit`;
/// the trace is written on quit, at end of input, and on victory.
pub fn battle(braid: &str, trace_file: &Path, as_json: bool) -> Result<Out, Fail> {
    let mut b = parse_braid(braid)?;
    let start = b.clone();
    let mut records = vec![(b.clone(), None::<usize>)];
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    // prompts stay off stdout when the caller wants JSON there
    let mut prompt: Box<dyn Write> = if as_json {
        Box::new(io::stderr())
    } else {
        Box::new(io::stdout())
    };
    let mut t: u64 = 0;
    let mut quit = false;
    while !b.is_trivial() {
        let ps = permitted_positions(&b);
        let _ = writeln!(prompt, "t={t}  b={b}  ord={}  permitted: {ps:?}", ord3(&b));
        let _ = write!(prompt, "> ");
        let _ = prompt.flush();
        let Some(Ok(line)) = lines.next() else {
            quit = true;
            break;
        };
        let line = line.trim();
        if line == "quit" || line == "q" {
            quit = true;
            break;
        }
        let r = match line.parse::<usize>() {
            Ok(r) if ps.contains(&r) => r,
            _ => {
                let _ = writeln!(prompt, "choose one of {ps:?}, or quit");
                continue;
            }
        };
        t += 1;
        b = game_step(&b, &Nat::from(t), r)?;
        records.push((b.clone(), Some(r)));
    }
    let mut file = String::new();
    for (i, (x, r)) in records.iter().enumerate() {
        let _ = writeln!(
            file,
            "{i}\t{x}\t{}\t{}",
            ord3(x),
            r.map(|r| r.to_string()).unwrap_or_else(|| "-".into())
        );
    }
    std::fs::write(trace_file, file).map_err(|e| Fail::usage(format!("{}: {e}", trace_file.display())))?;
    let won = b.is_trivial();
    let text = if won {
        format!("victory after {t} steps; trace in {}", trace_file.display())
    } else {
        format!("stopped after {t} steps at {b}; trace in {}", trace_file.display())
    };
    let choices: Vec<usize> = records.iter().filter_map(|x| x.1).collect();
    Ok(Out {
        kind: "hydra-battle",
        text,
        json: json!({
            "start": start.to_string(),
            "steps": t,
            "won": won,
            "quit": quit,
            "final": b.to_string(),
            "choices": choices,
            "trace_file": trace_file.display().to_string(),
        }),
        code: 0,
    })
}
