//! Requests in, tables, JSON and SVG out.

pub mod document;
pub mod request;
pub mod svg;
pub mod tables;

pub use document::{build_document, to_json, AnalysisDocument};
pub use request::{parse_request, parse_request_json, AnalysisRequest, OutputFormat, ParseError};
pub use svg::render_svg;
pub use tables::render_tables;

use crate::analysis::analyze;
use crate::error::Result;

/// Runs the analysis a request describes and assembles its document.
pub fn run_request(request: &AnalysisRequest) -> Result<AnalysisDocument> {
    let analysis = analyze(&request.quiver, &request.d, &request.options())?;
    build_document(request, &analysis)
}
