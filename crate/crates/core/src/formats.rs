//! The `.gfc` generator-matrix format.
//!
//! ```text
//! # optional comments
//! field 2 2 poly 1 1 1
//! code 2 4
//! 1 1 1 1
//! 0 1 2 3
//! ```
//!
//! `poly` lists the monic modulus little-endian, `c_0 ... c_m`. Entries are canonical
//! element codes in `[0, q)`.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::matrix::MatGF;

#[derive(Clone, Debug)]
pub struct CodeFile {
    pub matrix: MatGF,
    /// The modulus differs from the one `FieldSpec::new` picks.
    pub custom_modulus: bool,
    pub warnings: Vec<String>,
}

impl CodeFile {
    /// The code spanned by the rows (rank-deficient matrices are reduced).
    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::spanned_by(&self.matrix)
    }
}

pub fn write_gfc(g: &MatGF, comments: &[&str]) -> String {
    let f = g.field();
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    let poly: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
    out.push_str(&format!("field {} {} poly {}\n", f.p(), f.m(), poly.join(" ")));
    out.push_str(&format!("code {} {}\n", g.rows(), g.cols()));
    for r in 0..g.rows() {
        let row: Vec<String> = g.row(r).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, tokens: &[&str]) -> Result<Vec<u32>> {
    tokens
        .iter()
        .map(|t| t.parse::<u32>().map_err(|_| parse_err(line, format!("expected an integer, found {t:?}"))))
        .collect()
}

pub fn read_gfc(text: &str) -> Result<CodeFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (fl, field_line) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let tokens: Vec<&str> = field_line.split_whitespace().collect();
    if tokens.len() < 5 || tokens[0] != "field" || tokens[3] != "poly" {
        return Err(parse_err(fl, "expected `field <p> <m> poly <c_0 ... c_m>`"));
    }
    let pm = numbers(fl, &tokens[1..3])?;
    let (p, m) = (pm[0], pm[1]);
    let poly = numbers(fl, &tokens[4..])?;
    if poly.len() != m as usize + 1 {
        return Err(parse_err(fl, format!("modulus of degree {m} needs {} coefficients", m + 1)));
    }
    let default = FieldSpec::new(p, m).map_err(|e| parse_err(fl, e.to_string()))?;
    let (field, custom_modulus): (Arc<FieldSpec>, bool) = if default.modulus() == poly.as_slice() {
        (default, false)
    } else {
        (FieldSpec::with_modulus(p, poly).map_err(|e| parse_err(fl, e.to_string()))?, true)
    };
    let mut warnings = Vec::new();
    if custom_modulus {
        warnings.push("modulus differs from the default primitive polynomial".to_string());
    }
    let (cl, code_line) = lines.next().ok_or_else(|| parse_err(fl + 1, "missing `code <k> <n>` line"))?;
    let tokens: Vec<&str> = code_line.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "code" {
        return Err(parse_err(cl, "expected `code <k> <n>`"));
    }
    let kn = numbers(cl, &tokens[1..])?;
    let (k, n) = (kn[0] as usize, kn[1] as usize);
    if k == 0 || n == 0 {
        return Err(parse_err(cl, "k and n must be positive"));
    }
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(k);
    for (ln, line) in lines {
        if rows.len() == k {
            return Err(parse_err(ln, format!("more than {k} rows")));
        }
        let row = numbers(ln, &line.split_whitespace().collect::<Vec<_>>())?;
        if row.len() != n {
            return Err(parse_err(ln, format!("row has {} entries, expected {n}", row.len())));
        }
        if let Some(bad) = row.iter().find(|&&x| !field.contains(x)) {
            return Err(parse_err(ln, format!("entry {bad} is not in GF({})", field.q())));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(parse_err(cl, format!("expected {k} rows, found {}", rows.len())));
    }
    let matrix = MatGF::from_rows(field, &rows)?;
    let rank = matrix.rank();
    if rank < k {
        warnings.push(format!("generator has rank {rank} < k = {k}; using the row span"));
    }
    Ok(CodeFile {
        matrix,
        custom_modulus,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let f = FieldSpec::new(2, 2).unwrap();
        let g = MatGF::from_rows(f, &[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        let text = write_gfc(&g, &["mds"]);
        assert_eq!(text, "# mds\nfield 2 2 poly 1 1 1\ncode 2 4\n1 1 1 1\n0 1 2 3\n");
        let back = read_gfc(&text).unwrap();
        assert_eq!(back.matrix, g);
        assert!(!back.custom_modulus && back.warnings.is_empty());
    }

    #[test]
    fn custom_modulus_is_flagged() {
        // x^3 + x^2 + 1 is primitive but not the default x^3 + x + 1
        let back = read_gfc("field 2 3 poly 1 0 1 1\ncode 1 2\n1 5\n").unwrap();
        assert!(back.custom_modulus);
        assert_eq!(back.matrix.field().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = read_gfc("# c\nfield 2 1 poly 1 1\ncode 2 3\n1 0 1\n0 2 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 5, msg: "entry 2 is not in GF(2)".into() });
        assert!(matches!(read_gfc("field 2 1 poly 1 1\ncode 2 3\n1 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_gfc(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn rank_deficiency_warns() {
        let back = read_gfc("field 2 1 poly 1 1\ncode 2 3\n1 0 1\n1 0 1\n").unwrap();
        assert_eq!(back.warnings.len(), 1);
        assert_eq!(back.code().unwrap().k(), 1);
    }
}
