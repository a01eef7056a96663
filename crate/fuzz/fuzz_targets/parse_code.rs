#![no_main]

use colondec::format::{parse_code, serialize_code};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(code) = parse_code(text) {
        // Whatever parses must survive a round trip unchanged.
        let again = parse_code(&serialize_code(&code)).expect("serialized code parses");
        assert_eq!(again, code);
    }
});
