//! Parses a request, prints it back in the line format and as JSON, and
//! checks that both forms parse to the same request.
//!
//! `cargo run --example request_roundtrip -- fixtures/diamond.txt`

use quiver_vgit::report::{parse_request, parse_request_json};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "fixtures/diamond.txt".into());
    let request = parse_request(&std::fs::read_to_string(&path)?)?;
    let text = request.to_text();
    let json = request.to_json();
    assert_eq!(parse_request(&text)?, request);
    assert_eq!(parse_request_json(&json)?, request);
    println!("{text}");
    println!("{json}");
    Ok(())
}
