#![allow(dead_code)]

use quiver_vgit::analysis::stable::{locate_chamber, Location};
use quiver_vgit::analysis::{analyze, AnalysisOptions, QuiverAnalysis, Scope};
use quiver_vgit::geometry::slice::SliceSpec;
use quiver_vgit::quiver::{Character, DimensionVector, Quiver};
use quiver_vgit::rational::{frac, int, Rational};
use quiver_vgit::report::{parse_request, AnalysisRequest};
use rand::Rng;

pub const DIAMOND: &str = include_str!("../../fixtures/diamond.txt");
pub const HIRZEBRUCH: &str = include_str!("../../fixtures/hirzebruch.txt");

pub fn diamond_request() -> AnalysisRequest {
    parse_request(DIAMOND).expect("fixture parses")
}

pub fn diamond() -> (AnalysisRequest, QuiverAnalysis) {
    let r = diamond_request();
    let a = analyze(&r.quiver, &r.d, &r.options()).expect("fixture analyzes");
    (r, a)
}

/// Interior slice points of the five G-ample regions, labelled A to E.
pub fn named_points() -> Vec<(&'static str, [Rational; 2])> {
    vec![
        ("A", [frac(-1, 2), frac(1, 2)]),
        ("B", [int(0), int(1)]),
        ("C", [frac(1, 2), frac(1, 2)]),
        ("D", [int(2), frac(1, 2)]),
        ("E", [int(0), int(-1)]),
    ]
}

/// Chamber index of each named region, found by locating its slice point.
pub fn named_chambers(request: &AnalysisRequest, analysis: &QuiverAnalysis) -> Vec<(&'static str, usize)> {
    let slice = request.slice.as_ref().expect("fixture has a slice");
    named_points()
        .into_iter()
        .map(|(name, pt)| {
            let theta = integral_character(analysis, slice, &pt);
            match locate_chamber(&theta, analysis).expect("character in d^perp") {
                Location::Chamber(i) => (name, i),
                other => panic!("region {name} located as {other:?}"),
            }
        })
        .collect()
}

/// A positive integer multiple of the character at a slice point.
pub fn integral_character(analysis: &QuiverAnalysis, slice: &SliceSpec, pt: &[Rational; 2]) -> Character {
    let theta = analysis.to_ambient(&slice.point(&pt[0], &pt[1]));
    let den = theta.iter().fold(num_bigint::BigInt::from(1), |acc, x| {
        num_integer::Integer::lcm(&acc, x.denom())
    });
    Character(
        theta
            .iter()
            .map(|x| i64::try_from((x * Rational::from_integer(den.clone())).to_integer()).unwrap())
            .collect(),
    )
}

pub fn kronecker(m: usize) -> Quiver {
    let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "0", "1")).collect();
    Quiver::from_names(&["0", "1"], &arrows).unwrap()
}

/// Random acyclic quiver: arrows go from lower to higher position in a
/// random vertex order. A spanning tree is laid first when the arrow budget
/// allows, so most samples are connected.
pub fn random_acyclic_quiver<R: Rng>(rng: &mut R, max_vertices: usize, max_arrows: usize) -> Quiver {
    let n = rng.gen_range(2..=max_vertices);
    let m = rng.gen_range(1..=max_arrows);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut pairs = Vec::new();
    if m >= n - 1 {
        for pos in 1..n {
            let other = rng.gen_range(0..pos);
            pairs.push((order[other], order[pos]));
        }
    }
    while pairs.len() < m {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let (lo, hi) = if order.iter().position(|&v| v == i) < order.iter().position(|&v| v == j) {
            (i, j)
        } else {
            (j, i)
        };
        pairs.push((lo, hi));
    }
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    Quiver::new(
        vertices.clone(),
        pairs
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| (format!("a{k}"), vertices[s].clone(), vertices[t].clone())),
    )
    .unwrap()
}

pub fn g_ample_analysis(q: &Quiver) -> QuiverAnalysis {
    analyze(
        q,
        &DimensionVector::thin(q.vertex_count()),
        &AnalysisOptions { scope: Scope::GAmpleOnly, ..Default::default() },
    )
    .unwrap()
}

pub fn witness_character(analysis: &QuiverAnalysis, chamber: usize) -> Character {
    let theta = analysis.to_ambient(&analysis.chambers[chamber].chamber.witness);
    Character(theta.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect())
}
