//! Difference matrices over the additive group of GF(p^l) and the codes they induce.
//!
//! `difference_matrix(p, l, h)` takes the multiplication table of GF(p^(l+h)) and
//! pushes every entry through a surjective additive map onto GF(p^l). Any such map
//! yields a difference matrix, since distinct rows `f_i, f_j` differ by the bijection
//! `x -> (f_i - f_j) x`. The map is coordinate truncation to the first `l` base-p
//! digits, except when `1 < l` and `l | h`: then the relative trace to the subfield of
//! order p^l is used, which is GF(p^l)-linear and makes the induced code linear.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::budget;
use crate::code::{hamming, CodewordMatrix, LinearCode};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// Largest side p^(l+h) accepted by [`difference_matrix`].
pub const MAX_SIDE: u64 = 4096;

/// How table entries were mapped onto the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Projection {
    Truncation,
    RelativeTrace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceMatrix {
    field: Arc<FieldSpec>,
    mu: usize,
    entries: Vec<Vec<Elem>>,
}

impl DifferenceMatrix {
    /// Wraps `entries` after checking the difference property.
    pub fn new(field: Arc<FieldSpec>, entries: Vec<Vec<Elem>>) -> Result<Self> {
        if !is_difference_matrix(&entries, &field) {
            return Err(Error::Verification("not a difference matrix".into()));
        }
        let mu = entries.len() / field.q() as usize;
        Ok(DifferenceMatrix { field, mu, entries })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// Order of the group.
    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Side length q * mu.
    pub fn side(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Elem>] {
        &self.entries
    }
}

/// Exhaustive check over all row pairs: every difference of two distinct rows contains
/// each group element exactly `side / q` times.
pub fn is_difference_matrix(entries: &[Vec<Elem>], field: &FieldSpec) -> bool {
    let side = entries.len();
    let q = field.q() as usize;
    if side == 0 || !side.is_multiple_of(q) || entries.iter().any(|r| r.len() != side) {
        return false;
    }
    if entries.iter().flatten().any(|&e| !field.contains(e)) {
        return false;
    }
    let mu = side / q;
    let mut tally = vec![0usize; q];
    for i in 0..side {
        for j in i + 1..side {
            tally.iter_mut().for_each(|t| *t = 0);
            for (&a, &b) in entries[i].iter().zip(&entries[j]) {
                tally[field.sub(a, b) as usize] += 1;
            }
            if tally.iter().any(|&t| t != mu) {
                return false;
            }
        }
    }
    true
}

/// The projection used by [`difference_matrix`] for these parameters.
pub fn projection_for(l: u32, h: u32) -> Projection {
    if l > 1 && h.is_multiple_of(l) {
        Projection::RelativeTrace
    } else {
        Projection::Truncation
    }
}

/// `D(p^l, p^h)` from the multiplication table of GF(p^(l+h)), rows and columns in
/// canonical element order.
pub fn difference_matrix(p: u32, l: u32, h: u32) -> Result<DifferenceMatrix> {
    if l == 0 || h == 0 {
        return Err(Error::InvalidParameters("l and h must be at least 1".into()));
    }
    let u = l + h;
    let side = (p as u64)
        .checked_pow(u)
        .filter(|&s| s <= MAX_SIDE)
        .ok_or_else(|| Error::InvalidParameters(format!("side {p}^{u} exceeds {MAX_SIDE}")))?;
    let big = FieldSpec::new(p, u)?;
    let small = FieldSpec::new(p, l)?;
    let phi: Box<dyn Fn(Elem) -> Elem> = match projection_for(l, h) {
        Projection::Truncation => {
            let cut = p.pow(l);
            Box::new(move |x| x % cut)
        }
        Projection::RelativeTrace => {
            let iso = subfield_iso(&big, &small);
            let big = big.clone();
            let steps = u / l;
            let frob = (p as u64).pow(l);
            Box::new(move |x| {
                let mut acc = 0;
                let mut power = x;
                for _ in 0..steps {
                    acc = big.add(acc, power);
                    power = big.pow(power, frob);
                }
                iso[&acc]
            })
        }
    };
    let side = side as u32;
    let entries: Vec<Vec<Elem>> = (0..side)
        .map(|i| (0..side).map(|j| phi(big.mul(i, j))).collect())
        .collect();
    DifferenceMatrix::new(small, entries)
        .map_err(|_| Error::Verification(format!("D({p}^{l}, {p}^{h}) failed the difference check")))
}

/// Map from the subfield of order |small| inside `big` onto `small`, sending a root of
/// the small field's modulus to its primitive element.
fn subfield_iso(big: &FieldSpec, small: &FieldSpec) -> HashMap<Elem, Elem> {
    let cofactor = (big.q() as u64 - 1) / (small.q() as u64 - 1);
    let beta = big.exp(cofactor);
    let modulus = small.modulus();
    let eval = |x: Elem| {
        modulus
            .iter()
            .rev()
            .fold(0, |acc, &c| big.add(big.mul(acc, x), c))
    };
    // coefficients of the modulus lie in GF(p), whose canonical codes agree in both fields
    let gamma = (1..small.q() as u64)
        .map(|j| big.pow(beta, j))
        .find(|&x| eval(x) == 0)
        .expect("the modulus splits in the subfield");
    let mut iso = HashMap::from([(0, 0)]);
    for j in 0..small.q() as u64 - 1 {
        iso.insert(big.pow(gamma, j), small.exp(j));
    }
    iso
}

/// Shifts columns by the first row and rows by the first column, giving a zero first
/// row and zero first column; the difference property is preserved.
pub fn normalize_dm(d: &DifferenceMatrix) -> DifferenceMatrix {
    let f = &d.field;
    let e = &d.entries;
    let entries = e
        .iter()
        .map(|row| {
            row.iter()
                .zip(&e[0])
                .map(|(&x, &top)| f.add(f.sub(f.sub(x, row[0]), top), e[0][0]))
                .collect()
        })
        .collect();
    DifferenceMatrix {
        field: f.clone(),
        mu: d.mu,
        entries,
    }
}

/// The code formed by all translates `D + g` of the rows of `D`.
#[derive(Clone, Debug)]
pub struct DmCode {
    pub codewords: CodewordMatrix,
    pub linear: Option<LinearCode>,
    pub q: u32,
    pub mu: usize,
}

impl DmCode {
    pub fn n(&self) -> usize {
        self.codewords.n()
    }

    /// Codeword count N = q^2 mu.
    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    /// Minimum distance (q - 1) mu.
    pub fn d(&self) -> usize {
        (self.q as usize - 1) * self.mu
    }
}

/// Stacks `D^(0), ..., D^(q-1)` (block g holds the rows of D plus g) and checks that
/// rows of one translate class are at distance q mu and all others at (q - 1) mu.
pub fn dm_code(d: &DifferenceMatrix) -> Result<DmCode> {
    let f = &d.field;
    let q = f.q();
    let side = d.side();
    let mut rows = Vec::with_capacity(side * q as usize);
    for g in f.elements() {
        for r in &d.entries {
            rows.push(r.iter().map(|&x| f.add(x, g)).collect::<Vec<_>>());
        }
    }
    verify_translate_distances(d)?;
    let codewords = CodewordMatrix::new(f.clone(), rows);
    let linear = codewords.as_linear_code();
    Ok(DmCode {
        codewords,
        linear,
        q,
        mu: d.mu,
    })
}

/// Distance between `r_i + g` and `r_j + g'` is `n - #{t : r_i[t] - r_j[t] = g' - g}`,
/// so it depends on the shift difference only; checked for every pair of rows and every
/// difference.
fn verify_translate_distances(d: &DifferenceMatrix) -> Result<()> {
    let f = &d.field;
    let q = f.q() as usize;
    let n = d.side();
    let (same, other) = (n, (q - 1) * d.mu);
    let mut tally = vec![0usize; q];
    for i in 0..n {
        for j in 0..n {
            tally.iter_mut().for_each(|t| *t = 0);
            for (&a, &b) in d.entries[i].iter().zip(&d.entries[j]) {
                tally[f.sub(b, a) as usize] += 1;
            }
            for delta in f.elements() {
                if i == j && delta == 0 {
                    continue;
                }
                let dist = n - tally[delta as usize];
                let expect = if i == j { same } else { other };
                if dist != expect {
                    return Err(Error::Verification(format!(
                        "rows {i} and {j} under shift difference {delta} at distance {dist}, expected {expect}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Pairwise distance check of the stacked rows by direct comparison.
pub fn translate_distance_dichotomy(code: &DmCode) -> bool {
    let side = code.n();
    let rows = code.codewords.rows();
    let q = code.q as usize;
    let n = side;
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            let same_class = a % side == b % side;
            let expect = if same_class { n } else { (q - 1) * code.mu };
            if hamming(&rows[a], &rows[b]) != expect {
                return false;
            }
        }
    }
    true
}

/// Text dump: `dm p l h`, then one line of integers per row.
pub fn write_dm(d: &DifferenceMatrix, p: u32, l: u32, h: u32) -> String {
    let mut out = format!("dm {p} {l} {h}\n");
    for row in &d.entries {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the output of [`write_dm`]; the matrix must pass the difference check.
pub fn read_dm(text: &str) -> Result<(DifferenceMatrix, (u32, u32, u32))> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse = |s: &str, line: usize| {
        s.parse::<u32>().map_err(|_| Error::Parse {
            line,
            msg: format!("expected an integer, found {s:?}"),
        })
    };
    if fields.len() != 4 || fields[0] != "dm" {
        return Err(Error::Parse {
            line: hl,
            msg: "expected `dm p l h`".into(),
        });
    }
    let (p, l, h) = (parse(fields[1], hl)?, parse(fields[2], hl)?, parse(fields[3], hl)?);
    let field = FieldSpec::new(p, l)?;
    let mut entries = Vec::new();
    for (ln, line) in lines {
        let row = line
            .split_whitespace()
            .map(|s| parse(s, ln))
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    let side = budget::power(p, (l + h) as usize);
    if entries.len() as u128 != side {
        return Err(Error::Parse {
            line: hl,
            msg: format!("expected {side} rows, found {}", entries.len()),
        });
    }
    Ok((DifferenceMatrix::new(field, entries)?, (p, l, h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::weight_distribution;

    #[test]
    fn binary_d22() {
        let d = difference_matrix(2, 1, 1).unwrap();
        assert_eq!((d.side(), d.mu(), d.q()), (4, 2, 2));
        let code = dm_code(&d).unwrap();
        assert_eq!((code.n(), code.size(), code.d()), (4, 8, 2));
        let lin = code.linear.clone().unwrap();
        assert_eq!(weight_distribution(&lin).unwrap().nonzero_weights(), vec![2, 4]);
        assert!(translate_distance_dichotomy(&code));
    }

    #[test]
    fn gf4_d44_is_linear() {
        let d = difference_matrix(2, 2, 2).unwrap();
        assert_eq!(projection_for(2, 2), Projection::RelativeTrace);
        let code = dm_code(&d).unwrap();
        assert_eq!((code.n(), code.size(), code.d()), (16, 64, 12));
        let lin = code.linear.clone().expect("linear over GF(4)");
        assert_eq!(lin.k(), 3);
        assert_eq!(weight_distribution(&lin).unwrap().nonzero_weights(), vec![12, 16]);
    }

    #[test]
    fn ternary_d33() {
        let d = difference_matrix(3, 1, 1).unwrap();
        assert_eq!(d.side(), 9);
        assert!(is_difference_matrix(d.entries(), d.field()));
    }

    #[test]
    fn additive_nonlinear_d42() {
        // D(4, 2): the additive (8, 32, {6, 8})_4 code
        let d = difference_matrix(2, 2, 1).unwrap();
        let code = dm_code(&d).unwrap();
        assert_eq!((code.n(), code.size()), (8, 32));
        assert!(code.codewords.is_additive());
        assert!(code.linear.is_none());
        assert_eq!(code.codewords.distance_set(), vec![6, 8]);
    }

    #[test]
    fn broken_matrices_fail() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert!(!is_difference_matrix(&vec![vec![0; 4]; 4], &f));
        let mut e = difference_matrix(2, 1, 1).unwrap().entries().to_vec();
        e[1][2] ^= 1;
        assert!(!is_difference_matrix(&e, &f));
    }

    #[test]
    fn normalization_is_idempotent() {
        for (p, l, h) in [(2, 1, 1), (3, 1, 1), (2, 1, 2), (2, 2, 1)] {
            let d = difference_matrix(p, l, h).unwrap();
            let n1 = normalize_dm(&d);
            assert!(n1.entries()[0].iter().all(|&x| x == 0));
            assert!(n1.entries().iter().all(|r| r[0] == 0));
            assert!(is_difference_matrix(n1.entries(), n1.field()));
            assert_eq!(normalize_dm(&n1), n1);
        }
    }

    #[test]
    fn dm_text_roundtrip() {
        let d = difference_matrix(3, 1, 1).unwrap();
        let text = write_dm(&d, 3, 1, 1);
        assert!(text.starts_with("dm 3 1 1\n"));
        let (back, params) = read_dm(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(params, (3, 1, 1));
    }
}
