#![allow(dead_code)]
pub mod oracle;

use std::path::PathBuf;

use ainfty::io::{parse_bytes, run_document, Command, Document};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

/// `(file name, contents)` sorted by name.
pub fn corpus() -> Vec<(String, String)> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, std::fs::read_to_string(&p).expect("readable corpus file"))
        })
        .collect()
}

pub const CAP: usize = 4;

/// Every command without operands, as `(command, exit, reports)`.
pub fn all_results(doc: &Document) -> Vec<(Command, i32, Vec<ainfty::Report>)> {
    Command::ALL
        .into_iter()
        .filter(|c| *c != Command::ComposeCompat)
        .map(|c| {
            // canonical form reorders sections, and reports follow input order
            let mut o = run_document(c, doc, &[]);
            o.reports.sort_by(|a, b| a.check.cmp(&b.check));
            (c, o.exit, o.reports)
        })
        .collect()
}

/// Parses, canonicalizes and reparses one file; checks the canonical text is
/// a fixed point and that every command sees the same thing in both.
pub fn round_trip(name: &str, text: &str) -> Result<(), String> {
    let doc = parse_bytes(text.as_bytes(), CAP).map_err(|e| format!("{name}: {e}"))?;
    let canon = doc.canonical();
    let again = parse_bytes(canon.as_bytes(), CAP).map_err(|e| format!("{name}: canonical text fails: {e}"))?;
    if again.canonical() != canon {
        return Err(format!("{name}: canonical form is not idempotent"));
    }
    let (a, b) = (all_results(&doc), all_results(&again));
    for ((c, ea, ra), (_, eb, rb)) in a.iter().zip(&b) {
        if ea != eb || ra != rb {
            return Err(format!("{name}: {} differs after canonicalization", c.name()));
        }
    }
    Ok(())
}

/// One random edit: byte flips, insertions, deletions, line shuffles or
/// numeric tokens swapped for other numbers.
pub fn mutate(rng: &mut ChaCha8Rng, text: &[u8]) -> Vec<u8> {
    let mut v = text.to_vec();
    let edits = rng.gen_range(1..=4);
    for _ in 0..edits {
        match rng.gen_range(0..6) {
            0 if !v.is_empty() => {
                let i = rng.gen_range(0..v.len());
                v[i] ^= 1 << rng.gen_range(0..8);
            }
            1 => {
                let i = rng.gen_range(0..=v.len());
                let b = *b"01 ()->#\nXdmu9".get(rng.gen_range(0..14)).unwrap();
                v.insert(i, b);
            }
            2 if !v.is_empty() => {
                let i = rng.gen_range(0..v.len());
                let j = (i + rng.gen_range(1..16)).min(v.len());
                v.drain(i..j);
            }
            3 => {
                let s = String::from_utf8_lossy(&v).into_owned();
                let mut lines: Vec<&str> = s.split('\n').collect();
                if lines.len() > 1 {
                    let i = rng.gen_range(0..lines.len());
                    let j = rng.gen_range(0..lines.len());
                    lines.swap(i, j);
                }
                v = lines.join("\n").into_bytes();
            }
            4 => {
                let s = String::from_utf8_lossy(&v).into_owned();
                let mut lines: Vec<&str> = s.split('\n').collect();
                if !lines.is_empty() {
                    let i = rng.gen_range(0..lines.len());
                    let l = lines[i];
                    lines.insert(i, l);
                }
                v = lines.join("\n").into_bytes();
            }
            _ => {
                let s = String::from_utf8_lossy(&v).into_owned();
                let words: Vec<&str> = s.split(' ').collect();
                if !words.is_empty() {
                    let i = rng.gen_range(0..words.len());
                    let n = ["0", "1", "2", "7", "64", "513", "99999999999999999999", "-1", ""][rng.gen_range(0..9)];
                    let mut w: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                    w[i] = n.to_string();
                    v = w.join(" ").into_bytes();
                }
            }
        }
    }
    v
}

/// Feeds `n` inputs (random bytes and corpus mutations) to the parser.
/// Returns `(accepted, rejected)`; any panic is returned as an error.
pub fn fuzz(n: usize, seed: u64) -> Result<(usize, usize), String> {
    let corpus = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            if i % 4 == 0 {
                let len = rng.gen_range(0..200);
                (0..len).map(|_| rng.gen()).collect()
            } else {
                let (_, t) = &corpus[rng.gen_range(0..corpus.len())];
                mutate(&mut rng, t.as_bytes())
            }
        })
        .collect();
    use rayon::prelude::*;
    let hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let results: Vec<Result<bool, usize>> = inputs
        .par_iter()
        .enumerate()
        .map(|(i, bytes)| match std::panic::catch_unwind(|| parse_bytes(bytes, CAP).is_ok()) {
            Ok(ok) => Ok(ok),
            Err(_) => Err(i),
        })
        .collect();
    std::panic::set_hook(hook);
    let mut accepted = 0;
    for r in &results {
        match r {
            Ok(true) => accepted += 1,
            Ok(false) => {}
            Err(i) => {
                return Err(format!("parser panicked on input {i}: {:?}", String::from_utf8_lossy(&inputs[*i])))
            }
        }
    }
    Ok((accepted, n - accepted))
}
