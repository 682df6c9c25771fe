mod common;

use common::*;
use quiver_vgit::report::{parse_request, parse_request_json, OutputFormat};
use quiver_vgit::Scope;

#[test]
fn json_fixture_mirrors_text_fixture() {
    let json = parse_request_json(include_str!("../fixtures/diamond.json")).unwrap();
    assert_eq!(json, diamond_request());
}

#[test]
fn every_fixture_roundtrips_through_both_forms() {
    for text in [DIAMOND, HIRZEBRUCH, include_str!("../fixtures/kronecker3.txt")] {
        let r = parse_request(text).unwrap();
        assert_eq!(parse_request(&r.to_text()).unwrap(), r);
        assert_eq!(parse_request_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn json_rationals_accept_three_spellings() {
    let json = r#"{
        "vertices": ["0", "1", "2"],
        "arrows": [{"name": "x", "source": "0", "target": "1"}, {"name": "y", "source": "1", "target": "2"}],
        "d": [1, 1, 1],
        "slice": {"p": [1, "1/2"], "u1": [{"num": 0, "den": 1}, 1], "u2": [1, 0]}
    }"#;
    let err = parse_request_json(json).unwrap_err();
    // p lies in span(u1, u2) for a two-dimensional working space.
    assert!(err.message.contains("slice"), "{err}");
    let json = json.replace(r#""p": [1, "1/2"], "#, "");
    let r = parse_request_json(&json).unwrap();
    assert!(r.slice.is_some());
}

#[test]
fn format_and_scope_lines() {
    let text = format!("{HIRZEBRUCH}\nformat: json\nscope: g-ample\n");
    let r = parse_request(&text).unwrap();
    assert_eq!(r.format, Some(OutputFormat::Json));
    assert_eq!(r.scope, Some(Scope::GAmpleOnly));
    assert_eq!(parse_request(&r.to_text()).unwrap(), r);
}

#[test]
fn errors_carry_positions() {
    let cases = [
        ("vertices: a b\nd: 1 1\narrow x a -> b\n", (3, 1)),
        ("vertices: a b\narrow x: a -> b\nd: 1 1\nd: 1 1\n", (4, 1)),
        ("vertices: a a\n", (1, 13)),
        ("vertices: a b\narrow x: a -> b\nd: 1 2\n", (3, 6)),
    ];
    for (text, (line, column)) in cases {
        let e = parse_request(text).unwrap_err();
        assert_eq!((e.line, e.column), (line, column), "{text:?}: {e}");
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# header\n\nvertices: a b   # two\narrow x: a -> b\n\nd: 1 1\n";
    let r = parse_request(text).unwrap();
    assert_eq!(r.quiver.arrows().len(), 1);
}
