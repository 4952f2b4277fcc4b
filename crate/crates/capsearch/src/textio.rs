//! Textual syntax for points and point sets.
//!
//! A point is written either as a binary coordinate string of length
//! r+1 (first character = coordinate x_1, e.g. `10000` for e_1 in
//! PG(4,2)) or as its integer encoding; the two are accepted
//! interchangeably. A set is a comma-separated list.

use capsearch_core::{Point, PointSet, Space};

/// Parses one point token, either a coordinate string or a decimal
/// encoding.
pub fn parse_point(space: &Space, token: &str) -> Result<Point, String> {
    let token = token.trim();
    if token.is_empty() {
        return Err("empty point token".into());
    }
    let d = space.dim() as usize;
    if token.len() == d && token.bytes().all(|b| b == b'0' || b == b'1') {
        let mut encoding = 0u32;
        for (i, b) in token.bytes().enumerate() {
            if b == b'1' {
                encoding |= 1 << i;
            }
        }
        return space
            .point(encoding)
            .map_err(|e| format!("bad point {token:?}: {e}"));
    }
    let encoding: u32 = token.parse().map_err(|_| {
        format!("bad point {token:?}: expected a coordinate string of length {d} or an integer")
    })?;
    space
        .point(encoding)
        .map_err(|e| format!("bad point {token:?}: {e}"))
}

/// Parses a comma-separated point list, rejecting repeats.
pub fn parse_points(space: &Space, text: &str) -> Result<Vec<Point>, String> {
    let mut points = Vec::new();
    for token in text.split(',') {
        let p = parse_point(space, token)?;
        if points.contains(&p) {
            return Err(format!("repeated point {}", coordinate_string(space, p)));
        }
        points.push(p);
    }
    Ok(points)
}

/// Renders a point as its coordinate string, x_1 first.
pub fn coordinate_string(space: &Space, p: Point) -> String {
    (0..space.dim())
        .map(|i| if p.encoding() >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// `13 (10110)` style rendering used in reports.
pub fn describe_point(space: &Space, p: Point) -> String {
    format!("{} ({})", p.encoding(), coordinate_string(space, p))
}

/// Ascending encodings separated by spaces, e.g. for canonical forms.
pub fn encoding_list(s: &PointSet) -> String {
    s.iter()
        .map(|p| p.encoding().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
