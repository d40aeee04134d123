use serde::Serialize;

use crate::code::{hamming, weight, CodewordMatrix, LinearCode};
use crate::diffmat::{is_difference_matrix, DifferenceMatrix};
use crate::error::Result;
use crate::field::Elem;
use crate::matrix::MatGF;

/// Outcome of the antipodal generator-form test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntipodalForm {
    pub holds: bool,
    /// Common weight of the residual code `C*`.
    pub residual_distance: Option<usize>,
    pub reason: Option<String>,
}

impl AntipodalForm {
    fn fail(reason: impl Into<String>) -> Self {
        AntipodalForm {
            holds: false,
            residual_distance: None,
            reason: Some(reason.into()),
        }
    }
}

/// Brings `code` to the form `[1 ... 1 ; G*]` and tests the residual code `C*`: it must
/// be equidistant with distance `d*`, and each symbol present in a nonzero word of `C*`
/// must occur exactly `n - d*` times in it. The test holds iff the code has exactly
/// the two weights `d*` and `n`.
pub fn antipodal_form_check(code: &LinearCode) -> Result<AntipodalForm> {
    let f = code.field().clone();
    let n = code.n();
    if code.k() < 2 {
        return Ok(AntipodalForm::fail("dimension below 2"));
    }
    let words = code.codeword_matrix()?;
    let Some(full) = words.rows().iter().find(|w| weight(w) == n) else {
        return Ok(AntipodalForm::fail("no codeword of full weight; no column scaling gives an all-ones row"));
    };
    // column scaling that turns `full` into the all-ones word
    let scale: Vec<Elem> = full.iter().map(|&x| f.inv(x).expect("nonzero")).collect();
    let scaled = |row: &[Elem]| -> Vec<Elem> { row.iter().zip(&scale).map(|(&a, &s)| f.mul(a, s)).collect() };
    let ones = vec![1; n];
    let mut basis = vec![ones.clone()];
    for r in 0..code.k() {
        let cand = scaled(code.generator().row(r));
        let mut trial = basis.clone();
        trial.push(cand.clone());
        if MatGF::from_rows(f.clone(), &trial)?.rank() == trial.len() {
            basis.push(cand);
        }
    }
    let residual = LinearCode::from_rows(f.clone(), &basis[1..])?;
    let residual_words = residual.codeword_matrix()?;
    let mut common = None;
    for w in residual_words.rows() {
        let wt = weight(w);
        if wt == 0 {
            continue;
        }
        match common {
            None => common = Some(wt),
            Some(c) if c != wt => return Ok(AntipodalForm::fail(format!("residual code has weights {c} and {wt}"))),
            _ => {}
        }
        let mu = n - wt;
        let mut tally = vec![0usize; f.q() as usize];
        w.iter().for_each(|&x| tally[x as usize] += 1);
        if let Some(sym) = tally.iter().position(|&t| t != 0 && t != mu) {
            return Ok(AntipodalForm::fail(format!(
                "symbol {sym} occurs {} times in a residual word, expected {mu}",
                tally[sym]
            )));
        }
    }
    Ok(AntipodalForm {
        holds: true,
        residual_distance: common,
        reason: None,
    })
}

/// Partition of a two-weight `{d, n}` code into simplexes (q words pairwise at distance
/// n), with the structural clauses that follow from it.
#[derive(Clone, Debug, Serialize)]
pub struct SimplexPartition {
    pub classes: Vec<Vec<usize>>,
    pub d: usize,
    /// `n - d`.
    pub mu: usize,
    /// Every symbol of a non-constant word occurs exactly `mu` times.
    pub symbol_multiplicity: bool,
    pub n_multiple_of_mu: bool,
    /// `d <= n (q - 1) / q`.
    pub distance_bound: bool,
    /// `n = mu q`, `N = mu q^2`, `d = mu (q - 1)`.
    pub pdm: bool,
    /// For additive PDM codes: one word per class, shifted to start with 0, forms a
    /// difference matrix.
    #[serde(skip)]
    pub reassembled: Option<DifferenceMatrix>,
}

/// Greedy simplex partition of `m`; `Err` carries a row that could not be placed.
pub fn simplex_partition(m: &CodewordMatrix) -> std::result::Result<SimplexPartition, String> {
    let f = m.field().clone();
    let q = f.q() as usize;
    let n = m.n();
    let rows = m.rows();
    let distances = m.distance_set();
    let d = match distances.as_slice() {
        [d, top] if *top == n && *d < n => *d,
        _ => return Err(format!("distances {distances:?} are not of the form {{d, {n}}}")),
    };
    let mut used = vec![false; rows.len()];
    let mut classes = Vec::new();
    for start in 0..rows.len() {
        if used[start] {
            continue;
        }
        let mut class = vec![start];
        for cand in start + 1..rows.len() {
            if class.len() == q {
                break;
            }
            if !used[cand] && class.iter().all(|&c| hamming(&rows[c], &rows[cand]) == n) {
                class.push(cand);
            }
        }
        if class.len() < q {
            return Err(format!("row {start} lies in no simplex of size {q} among the remaining rows"));
        }
        class.iter().for_each(|&c| used[c] = true);
        classes.push(class);
    }
    let mu = n - d;
    let symbol_multiplicity = rows.iter().all(|r| {
        if r.iter().all(|&x| x == r[0]) {
            return true;
        }
        let mut tally = vec![0usize; q];
        r.iter().for_each(|&x| tally[x as usize] += 1);
        tally.iter().all(|&t| t == 0 || t == mu)
    });
    let pdm = n == mu * q && rows.len() == mu * q * q && d == mu * (q - 1);
    let reassembled = (pdm && m.is_additive())
        .then(|| {
            let entries: Vec<Vec<Elem>> = classes
                .iter()
                .map(|class| {
                    let r = class.iter().map(|&i| &rows[i]).find(|r| r[0] == 0).unwrap_or(&rows[class[0]]);
                    r.iter().map(|&x| f.sub(x, r[0])).collect()
                })
                .collect();
            is_difference_matrix(&entries, &f).then(|| DifferenceMatrix::new(f.clone(), entries).expect("checked"))
        })
        .flatten();
    Ok(SimplexPartition {
        classes,
        d,
        mu,
        symbol_multiplicity,
        n_multiple_of_mu: n.is_multiple_of(mu),
        distance_bound: d * q <= n * (q - 1),
        pdm,
        reassembled,
    })
}
