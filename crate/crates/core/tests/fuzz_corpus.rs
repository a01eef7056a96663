//! Replays the checked-in fuzz corpus through the same checks the fuzz
//! targets make, so the seeds stay meaningful without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use colondec::code::{add, weight};
use colondec::decode;
use colondec::format::{parse_code, parse_word, serialize_code, serialize_word};

fn corpus(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut entries: Vec<(PathBuf, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path, text)
        })
        .collect();
    entries.sort();
    assert!(!entries.is_empty());
    entries
}

#[test]
fn parse_code_seeds() {
    let mut parsed = 0;
    for (path, text) in corpus("parse_code") {
        if let Ok(code) = parse_code(&text) {
            assert_eq!(
                parse_code(&serialize_code(&code)).unwrap(),
                code,
                "{}",
                path.display()
            );
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn parse_word_seeds() {
    let code = parse_code("7 2 5\n1 0 3 4 6\n0 1 2 5 1\n").unwrap();
    for (path, text) in corpus("parse_word") {
        if let Ok(word) = parse_word(&text, &code) {
            assert_eq!(
                parse_word(&serialize_word(&word), &code).unwrap(),
                word,
                "{}",
                path.display()
            );
        }
    }
}

#[test]
fn decode_seeds() {
    for (path, text) in corpus("decode") {
        let (code_text, word_text) = text.split_once("%\n").unwrap();
        let c = parse_code(code_text).unwrap();
        let w = parse_word(word_text, &c).unwrap();
        let r = decode(&c, &w).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if let (Some(e), Some(nearest)) = (&r.error, &r.nearest) {
            assert_eq!(add(c.field(), e, &nearest.v), w);
            assert_eq!(Some(weight(e)), r.d_w);
        }
    }
}
