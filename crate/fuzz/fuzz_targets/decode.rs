#![no_main]

use colondec::format::{parse_code, parse_word};
use colondec::{code, decode, Status};
use libfuzzer_sys::fuzz_target;

// Input: a code file, a line holding only `%`, then a word file.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((code_text, word_text)) = text.split_once("%\n") else {
        return;
    };
    let Ok(c) = parse_code(code_text) else { return };
    // Keep the ideal computations small.
    if c.n() > 10 || c.k() > 4 || c.field().modulus() > 11 {
        return;
    }
    let Ok(w) = parse_word(word_text, &c) else {
        return;
    };
    let r = decode(&c, &w).expect("valid inputs decode");
    if let (Some(e), Some(nearest)) = (&r.error, &r.nearest) {
        assert_eq!(code::add(c.field(), e, &nearest.v), w);
        assert_eq!(Some(code::weight(e)), r.d_w);
    }
    if r.status == Status::Corrected {
        assert!(r.d_w.unwrap() < r.d);
    }
});
