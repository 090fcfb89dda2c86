//! Command-line driver for irredforge: argument parsing, the subcommands,
//! and the JSON/CSV file formats.

pub mod commands;
pub mod doc;
pub mod error;
pub mod sweep;

use irredforge_core::syntax::parse_prime_poly;
use irredforge_core::{FieldElement, FieldSpec, Poly, PolyRing};

use crate::error::{CliError, CliResult};

pub use commands::{run, Cli};

/// Builds `F_{p^m}`; `modulus` is ignored for `m = 1` when empty.
pub fn field_from_parts(p: u64, m: u32, modulus: &str) -> CliResult<FieldSpec> {
    if m == 1 && modulus.trim().is_empty() {
        return Ok(FieldSpec::prime(p)?);
    }
    let coeffs = parse_prime_poly(p, modulus)?;
    if coeffs.len() != m as usize + 1 {
        return Err(CliError::Precondition(format!(
            "modulus {modulus} has degree {}, expected {m}",
            coeffs.len().saturating_sub(1)
        )));
    }
    Ok(FieldSpec::new(p, m, &coeffs)?)
}

/// Parses `p,m,<modulus>`, `p` alone, or one of the aliases `gf8`, `gf16`.
pub fn parse_field(text: &str) -> CliResult<FieldSpec> {
    match text.trim() {
        "gf8" => return Ok(FieldSpec::gf8()),
        "gf16" => return Ok(FieldSpec::gf16()),
        _ => {}
    }
    let mut parts = text.splitn(3, ',');
    let bad = |what: &str| CliError::Precondition(format!("field '{text}': {what}"));
    let p = parts
        .next()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .ok_or_else(|| bad("expected p,m,<modulus>"))?;
    let m = match parts.next() {
        Some(s) => s.trim().parse::<u32>().map_err(|_| bad("m is not an integer"))?,
        None => 1,
    };
    let modulus = parts.next().unwrap_or("");
    field_from_parts(p, m, modulus)
}

/// Parses a polynomial and checks it is monic irreducible.
pub fn parse_irreducible(field: &FieldSpec, text: &str) -> CliResult<Poly<FieldElement>> {
    let f = field.parse_poly(text)?;
    let ring = PolyRing::new(field.clone());
    if f.degree().unwrap_or(0) == 0 {
        return Err(CliError::Precondition(format!("'{text}' is constant")));
    }
    if !ring.is_monic(&f) {
        return Err(CliError::Precondition(format!("'{text}' is not monic")));
    }
    if !ring.is_irreducible(&f)? {
        return Err(CliError::Precondition(format!("'{text}' is reducible")));
    }
    Ok(f)
}

/// Reads a member list: one polynomial per line, blank lines and lines
/// starting with `#` ignored.
pub fn parse_member_list(field: &FieldSpec, text: &str) -> CliResult<Vec<Poly<FieldElement>>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            parse_irreducible(field, l).map_err(|e| match e {
                CliError::Precondition(msg) => CliError::Precondition(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use irredforge_core::Field;

    #[test]
    fn field_syntax() {
        assert_eq!(parse_field("2,4,y^4+y+1").unwrap(), FieldSpec::gf16());
        assert_eq!(parse_field("gf8").unwrap(), FieldSpec::gf8());
        assert_eq!(parse_field("7").unwrap().q(), 7);
        assert_eq!(parse_field("3,2,y^2+1").unwrap().size(), 9);
        assert_eq!(parse_field("2,4,y^4+1").unwrap_err().exit_code(), 2);
        assert_eq!(parse_field("2,3,y^4+y+1").unwrap_err().exit_code(), 2);
        assert!(parse_field("x").is_err());
    }

    #[test]
    fn member_lists() {
        let f = FieldSpec::gf16();
        let ms = parse_member_list(&f, "# header\nx + a\n\nx^2 + x + a^3\n").unwrap();
        assert_eq!(ms.len(), 2);
        assert!(parse_member_list(&f, "").unwrap().is_empty());
        let err = parse_member_list(&f, "x^2\n").unwrap_err();
        assert!(err.to_string().starts_with("line 1"));
    }
}
