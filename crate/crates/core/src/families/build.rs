use std::sync::Arc;

use num_rational::Ratio;

use super::{ia_formula, Family, FamilyInstance, FamilyParams};
use crate::code::{is_projective, projective_dual_transform, weight_distribution, LinearCode};
use crate::diffmat::{difference_matrix, dm_code};
use crate::error::{Error, Result};
use crate::field::{prime_power, Elem, FieldSpec};
use crate::matrix::MatGF;

/// Builds the instance described by `params`.
pub fn construct(params: FamilyParams) -> Result<FamilyInstance> {
    match params {
        FamilyParams::ExtHamming { m } => cr1_extended_hamming(m),
        FamilyParams::DmDual { p, l, h } => cr2_dm_dual(p, l, h),
        FamilyParams::MdsDual { q, n } => cr3_mds_dual(q, n),
        FamilyParams::BoseBush { q } => cr4_bose_bush(q),
        FamilyParams::Delsarte { q } => cr5_delsarte(q),
        FamilyParams::Denniston { q, h } => cr6_denniston(q, h),
    }
}

fn finish(params: FamilyParams, two_weight_code: LinearCode, h: u32, note: Option<String>) -> Result<FamilyInstance> {
    let (q, n, d) = params.predicted()?;
    if two_weight_code.n() != n || two_weight_code.q() != q {
        return Err(Error::Verification(format!(
            "{params}: built a length {} code over GF({}), expected length {n} over GF({q})",
            two_weight_code.n(),
            two_weight_code.q()
        )));
    }
    let cr_code = two_weight_code.dual()?;
    let predicted_ia = ia_formula(params.family(), q, n, h)?;
    let trivial = two_weight_code.k() < 2 || cr_code.k() < 2 || !is_projective(&two_weight_code);
    Ok(FamilyInstance {
        params,
        two_weight_code,
        cr_code,
        predicted_ia,
        predicted_weights: [d, n],
        trivial,
        note,
    })
}

fn even_order(q: u32, family: Family) -> Result<Arc<FieldSpec>> {
    match prime_power(q as u64) {
        Some((2, _)) if q >= 4 => FieldSpec::of_order(q as u64),
        Some((p, _)) if p != 2 => Err(Error::InvalidParameters(format!(
            "{family} needs q = 2^m >= 4; codes of this type do not exist for odd q = {q} (PG(2, q) has no hyperoval, so no (q+2, 3, q) code)"
        ))),
        _ => Err(Error::InvalidParameters(format!("{family} needs q = 2^m >= 4, got q = {q}"))),
    }
}

/// CR.1: the two-weight side is the first-order Reed-Muller code whose generator has
/// every binary m-tuple as a column, plus the all-ones row.
pub fn cr1_extended_hamming(m: u32) -> Result<FamilyInstance> {
    if !(2..=16).contains(&m) {
        return Err(Error::InvalidParameters(format!("ext-hamming needs 2 <= m <= 16, got m = {m}")));
    }
    let field = FieldSpec::new(2, 1)?;
    let n = 1usize << m;
    let mut rows: Vec<Vec<Elem>> = (0..m as usize)
        .map(|i| (0..n).map(|j| ((j >> (m as usize - 1 - i)) & 1) as Elem).collect())
        .collect();
    rows.push(vec![1; n]);
    let code = LinearCode::from_rows(field, &rows)?;
    let note = (m == 2).then(|| "m = 2 gives the [4,1] repetition code, trivial".to_string());
    finish(FamilyParams::ExtHamming { m }, code, 0, note)
}

/// CR.2: the linear code spanned by the translates of `D(p^l, p^h)`.
pub fn cr2_dm_dual(p: u32, l: u32, h: u32) -> Result<FamilyInstance> {
    if l == 0 || !h.is_multiple_of(l) {
        return Err(Error::InvalidParameters(format!("dm-dual needs l | h, got l = {l}, h = {h}")));
    }
    let d = difference_matrix(p, l, h)?;
    let code = dm_code(&d)?
        .linear
        .ok_or_else(|| Error::Verification(format!("D({p}^{l}, {p}^{h}) did not give a linear code")))?;
    finish(FamilyParams::DmDual { p, l, h }, code, 0, None)
}

/// CR.3: rows `(1, ..., 1)` and `(a_0, ..., a_{n-1})` with `a_i = i` in canonical order.
pub fn cr3_mds_dual(q: u32, n: usize) -> Result<FamilyInstance> {
    let field = FieldSpec::of_order(q as u64)?;
    if n < 3 || n > q as usize {
        return Err(Error::InvalidParameters(format!("mds-dual needs 3 <= n <= q, got n = {n}, q = {q}")));
    }
    let rows = vec![vec![1; n], (0..n as Elem).collect()];
    let code = LinearCode::from_rows(field, &rows)?;
    let note = (n == 3).then(|| "n = 3 gives a [3,1] completely regular side, trivial".to_string());
    finish(FamilyParams::MdsDual { q, n }, code, 0, note)
}

fn bose_bush_code(field: &Arc<FieldSpec>) -> Result<LinearCode> {
    let mut columns: Vec<Vec<Elem>> = field.elements().map(|t| vec![1, t, field.mul(t, t)]).collect();
    columns.push(vec![0, 1, 0]);
    columns.push(vec![0, 0, 1]);
    LinearCode::new(MatGF::from_columns(field.clone(), 3, &columns)?)
}

/// CR.4: the conic `{(1, t, t^2)}` plus its nucleus `(0, 1, 0)` and the point `(0, 0, 1)`.
pub fn cr4_bose_bush(q: u32) -> Result<FamilyInstance> {
    let field = even_order(q, Family::Cr4)?;
    finish(FamilyParams::BoseBush { q }, bose_bush_code(&field)?, 0, None)
}

/// The explicit generator with columns `(1,0,0), (1,1,0), (1,0,1), (1,1,1)` followed by
/// `(1, x_i, y_i)`, `x_i = a^i / (1 + a^i + a^2i)`, `y_i = a^2i / (1 + a^i + a^2i)` for
/// `i = 1..q-2`. Defined only when no denominator vanishes, that is when 3 does not
/// divide q - 1. The weight set `{q, q + 2}` is checked before returning.
pub fn bush_matrix_paper(q: u32) -> Result<MatGF> {
    let f = even_order(q, Family::Cr4)?;
    let mut columns = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]];
    for i in 1..=(q - 2) {
        let a = f.exp(i as u64);
        let a2 = f.mul(a, a);
        let den = f.add(f.add(1, a), a2);
        if den == 0 {
            return Err(Error::VanishingDenominator { i });
        }
        columns.push(vec![1, f.div(a, den)?, f.div(a2, den)?]);
    }
    let g = MatGF::from_columns(f.clone(), 3, &columns)?;
    let code = LinearCode::new(g.clone())?;
    let weights = weight_distribution(&code)?.nonzero_weights();
    if weights != [q as usize, q as usize + 2] {
        return Err(Error::Verification(format!("explicit Bose-Bush matrix has weights {weights:?}")));
    }
    Ok(g)
}

/// CR.5: the projective dual of the Bose-Bush code with multiplicity `w/2 - q/2`, which
/// keeps exactly the points whose codeword has full weight q + 2.
pub fn cr5_delsarte(q: u32) -> Result<FamilyInstance> {
    let field = even_order(q, Family::Cr5)?;
    let bb = bose_bush_code(&field)?;
    let code = projective_dual_transform(&bb, Ratio::new(1, 2), Ratio::from_integer(-(q as i64) / 2))?;
    let note = (q == 4).then(|| "q = 4 reproduces the Bose-Bush parameters".to_string());
    finish(FamilyParams::Delsarte { q }, code, 0, note)
}

/// Smallest element `c` (canonical order) with absolute trace 1, making
/// `x^2 + xy + c y^2` irreducible in characteristic 2.
fn irreducible_constant(f: &FieldSpec) -> Elem {
    f.elements().find(|&c| f.trace(c) == 1).expect("the trace is onto GF(2)")
}

/// Column set of the Denniston arc: `(1, x, y)` for `x^2 + xy + c y^2` in the additive
/// subgroup spanned by `1, a, ..., a^(u-1)`, with `(x, y)` in lexicographic order.
pub fn denniston_columns(field: &FieldSpec, h: u32) -> Vec<Vec<Elem>> {
    let u = h.trailing_zeros();
    let mut subgroup = vec![false; field.q() as usize];
    for mask in 0u32..h {
        let e = (0..u)
            .filter(|b| mask >> b & 1 == 1)
            .fold(0, |acc, b| field.add(acc, field.exp(b as u64)));
        subgroup[e as usize] = true;
    }
    let c = irreducible_constant(field);
    let mut columns = Vec::new();
    for x in field.elements() {
        for y in field.elements() {
            let phi = field.add(field.add(field.mul(x, x), field.mul(x, y)), field.mul(c, field.mul(y, y)));
            if subgroup[phi as usize] {
                columns.push(vec![1, x, y]);
            }
        }
    }
    columns
}

/// CR.6: the Denniston maximal arc of degree `h`.
pub fn cr6_denniston(q: u32, h: u32) -> Result<FamilyInstance> {
    let field = even_order(q, Family::Cr6)?;
    if !h.is_power_of_two() || h < 2 || h > q / 2 {
        return Err(Error::InvalidParameters(format!("denniston needs h = 2^u with 2 <= h <= q/2, got h = {h}")));
    }
    let columns = denniston_columns(&field, h);
    let expected = 1 + (q as usize + 1) * (h as usize - 1);
    if columns.len() != expected {
        return Err(Error::Verification(format!("Denniston arc has {} points, expected {expected}", columns.len())));
    }
    let code = LinearCode::new(MatGF::from_columns(field, 3, &columns)?)?;
    finish(FamilyParams::Denniston { q, h }, code, h, None)
}
