//! Text format for an enumerated layer: one subspace per line, basis rows
//! as hex strings (one digit per coordinate) separated by spaces.

use std::io::{BufRead, Write};

use crate::form::FormSpace;
use crate::subspace::SubspaceRep;
use crate::vector::{from_hex, to_hex};
use crate::OracleError;

pub fn format_subspace(space: &FormSpace, s: &SubspaceRep) -> String {
    let rows: Vec<String> = s.rows().iter().map(|&r| to_hex(r, space.dim())).collect();
    rows.join(" ")
}

pub fn write_layer(
    space: &FormSpace,
    layer: &[SubspaceRep],
    mut out: impl Write,
) -> std::io::Result<()> {
    for s in layer {
        writeln!(out, "{}", format_subspace(space, s))?;
    }
    Ok(())
}

/// Parses a layer written by [`write_layer`]; rows are re-echelonized and
/// must already be canonical.
pub fn read_layer(space: &FormSpace, input: impl BufRead) -> Result<Vec<SubspaceRep>, OracleError> {
    let bad = |n: usize, why: &str| OracleError::BadExport(format!("line {n}: {why}"));
    let mut out = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line = line.map_err(|e| OracleError::BadExport(e.to_string()))?;
        let mut rows = Vec::new();
        for tok in line.split_whitespace() {
            let (v, len) = from_hex(tok).ok_or_else(|| bad(n + 1, "not a hex vector"))?;
            if len != space.dim() {
                return Err(bad(n + 1, "wrong length"));
            }
            rows.push(v);
        }
        let s = SubspaceRep::span(space, &rows);
        if s.rows() != rows {
            return Err(bad(n + 1, "not in reduced echelon form"));
        }
        out.push(s);
    }
    Ok(out)
}
