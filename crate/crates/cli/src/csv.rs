//! CSV emission with byte-stable formatting: every float is written with 17
//! significant digits in scientific form, so equal runs produce equal files
//! and values round-trip through parsing exactly.

use std::io::{self, Write};

pub fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn comment(out: &mut dyn Write, key: &str, value: impl std::fmt::Display) -> io::Result<()> {
    writeln!(out, "# {key} = {value}")
}

pub fn row(out: &mut dyn Write, fields: &[String]) -> io::Result<()> {
    writeln!(out, "{}", fields.join(","))
}
