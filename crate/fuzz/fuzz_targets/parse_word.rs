#![no_main]

use colondec::format::{parse_code, parse_word, serialize_word};
use libfuzzer_sys::fuzz_target;

const CODE: &str = "7 2 5\n1 0 3 4 6\n0 1 2 5 1\n";

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let code = parse_code(CODE).unwrap();
    if let Ok(word) = parse_word(text, &code) {
        assert_eq!(word.len(), code.n());
        assert_eq!(parse_word(&serialize_word(&word), &code).unwrap(), word);
    }
});
