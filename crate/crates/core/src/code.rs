//! Linear codes, weight distributions and the code transforms built on them.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::{self, ENUM_BUDGET_VAR, SYND_BUDGET_VAR};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::macwilliams::macwilliams;
use crate::matrix::MatGF;
use crate::projective::ProjectiveSpace;
use crate::vecspace::Packed;

/// A linear [n, k]_q code given by a full-rank k x n generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: MatGF,
}

impl LinearCode {
    pub fn new(generator: MatGF) -> Result<Self> {
        let rank = generator.rank();
        if rank != generator.rows() || rank == 0 {
            return Err(Error::RankDeficient {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode { generator })
    }

    /// The code spanned by the rows of `rows`, reduced to a basis.
    pub fn spanned_by(rows: &MatGF) -> Result<Self> {
        Self::new(rows.row_basis())
    }

    pub fn from_rows(field: Arc<FieldSpec>, rows: &[Vec<Elem>]) -> Result<Self> {
        Self::new(MatGF::from_rows(field, rows)?)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        self.generator.field()
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &MatGF {
        &self.generator
    }

    /// A generator matrix of the dual code, used as parity-check matrix.
    pub fn parity_check(&self) -> MatGF {
        self.generator.null_space()
    }

    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::Degenerate("the dual of the full space is {0}".into()));
        }
        LinearCode::new(self.parity_check())
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        self.generator.combine_rows(message)
    }

    /// Number of codewords, q^k (saturating).
    pub fn size(&self) -> u128 {
        budget::power(self.q(), self.k())
    }

    /// Visits every codeword once.
    pub fn for_each_codeword(&self, mut visit: impl FnMut(&[Elem])) {
        let rows = scaled_rows(&self.generator);
        let mut stack = vec![vec![0; self.n()]; self.k() + 1];
        walk(&rows, self.field(), 0, &mut stack, &mut visit);
    }

    /// All codewords, as rows of a [`CodewordMatrix`].
    pub fn codeword_matrix(&self) -> Result<CodewordMatrix> {
        budget::require("codeword listing", self.size(), budget::enum_budget(), ENUM_BUDGET_VAR)?;
        let mut rows = Vec::with_capacity(self.size() as usize);
        self.for_each_codeword(|c| rows.push(c.to_vec()));
        Ok(CodewordMatrix::new(self.field().clone(), rows))
    }

    /// Column multiplicities per projective point, plus the number of zero columns.
    pub fn column_classes(&self) -> (Vec<usize>, usize) {
        column_classes(&self.generator)
    }

    /// Largest number of generator columns spanning the same projective point.
    pub fn max_column_multiplicity(&self) -> usize {
        self.column_classes().0.into_iter().max().unwrap_or(0)
    }
}

fn scaled_rows(g: &MatGF) -> Vec<Vec<Vec<Elem>>> {
    let f = g.field();
    (0..g.rows())
        .map(|r| {
            f.elements()
                .map(|c| g.row(r).iter().map(|&x| f.mul(c, x)).collect())
                .collect()
        })
        .collect()
}

fn walk(
    rows: &[Vec<Vec<Elem>>],
    field: &FieldSpec,
    level: usize,
    stack: &mut [Vec<Elem>],
    visit: &mut impl FnMut(&[Elem]),
) {
    if level == rows.len() {
        visit(&stack[level]);
        return;
    }
    for c in 0..field.q() as usize {
        let (lo, hi) = stack.split_at_mut(level + 1);
        for ((out, &a), &b) in hi[0].iter_mut().zip(&lo[level]).zip(&rows[level][c]) {
            *out = field.add(a, b);
        }
        walk(rows, field, level + 1, stack, visit);
    }
}

fn column_classes(g: &MatGF) -> (Vec<usize>, usize) {
    let space = ProjectiveSpace::new(g.field().clone(), g.rows());
    let mut mult = vec![0; space.len()];
    let mut zeros = 0;
    for c in 0..g.cols() {
        match space.index_of(&g.column(c)) {
            Some(i) => mult[i] += 1,
            None => zeros += 1,
        }
    }
    (mult, zeros)
}

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> Self {
        WeightDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Weights `w > 0` with `A_w > 0`, ascending.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.counts.len()).filter(|&w| !self.counts[w].is_zero()).collect()
    }

    /// Minimum nonzero weight; `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        self.nonzero_weights().first().copied()
    }

    /// Number of distinct nonzero weights.
    pub fn s_count(&self) -> usize {
        self.nonzero_weights().len()
    }

    /// Sparse `weight -> count` map of the nonzero entries.
    pub fn sparse(&self) -> BTreeMap<usize, BigUint> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }
}

/// Direct enumeration of all q^k codewords.
pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    budget::require("weight enumeration", code.size(), budget::enum_budget(), ENUM_BUDGET_VAR)?;
    let n = code.n();
    let field = code.field();
    let rows = scaled_rows(code.generator());
    let count_from = |first: usize| {
        let mut counts = vec![0u64; n + 1];
        let mut stack = vec![vec![0; n]; code.k() + 1];
        stack[1] = rows[0][first].clone();
        walk(&rows, field, 1, &mut stack, &mut |c: &[Elem]| {
            counts[c.iter().filter(|&&e| e != 0).count()] += 1
        });
        counts
    };
    let counts = (0..field.q() as usize)
        .into_par_iter()
        .map(count_from)
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(WeightDistribution::from_u64(&counts))
}

/// Weight distribution counted through parity-check syndromes: a dynamic program over
/// the columns of H tracking `(syndrome, weight)`, with syndromes merged up to scalar
/// multiples. Independent of MacWilliams; feasible when q^(n-k) is small.
pub fn weight_distribution_by_syndromes(code: &LinearCode) -> Result<WeightDistribution> {
    let n = code.n();
    let r = n - code.k();
    if r == 0 {
        let f = code.field();
        let q1 = BigUint::from(f.q() - 1);
        let counts = (0..=n)
            .map(|w| binomial(n, w) * num_traits::pow(q1.clone(), w))
            .collect();
        return Ok(WeightDistribution::new(counts));
    }
    let states = budget::power(code.q(), r);
    budget::require("syndrome weight count", states, budget::synd_budget(), SYND_BUDGET_VAR)?;
    let h = code.parity_check();
    let field = code.field();
    let packed = Packed::new(field.clone(), r);
    let size = packed.size() as usize;

    // class[s] = index of the projective class of syndrome s (0 for s = 0)
    let mut class = vec![usize::MAX; size];
    let mut reps = vec![0u64];
    class[0] = 0;
    for s in 1..size as u64 {
        if class[s as usize] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(s);
        for c in 1..field.q() {
            class[packed.scale(c, s) as usize] = id;
        }
    }

    let columns: Vec<u64> = (0..n).map(|j| packed.encode(&h.column(j))).collect();
    let mut dp: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n + 1]; reps.len()];
    dp[0][0] = BigUint::from(1u32);
    for (j, &col) in columns.iter().enumerate() {
        let shifts: Vec<u64> = (1..field.q()).map(|g| packed.neg(packed.scale(g, col))).collect();
        let next: Vec<Vec<BigUint>> = reps
            .par_iter()
            .enumerate()
            .map(|(c, &rep)| {
                let mut row = dp[c].clone();
                for &shift in &shifts {
                    let src = &dp[class[packed.add(rep, shift) as usize]];
                    for w in 1..=j + 1 {
                        if !src[w - 1].is_zero() {
                            row[w] += &src[w - 1];
                        }
                    }
                }
                row
            })
            .collect();
        dp = next;
    }
    Ok(WeightDistribution::new(dp.swap_remove(0)))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Weight distribution of the dual, enumerating whichever side is smaller and
/// transforming when needed.
pub fn dual_weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    if code.k() <= code.n() - code.k() {
        let wd = weight_distribution(code)?;
        macwilliams(&wd, code.n(), code.k(), code.q())
    } else {
        weight_distribution(&code.dual()?)
    }
}

/// Weight distribution of the code itself, through the dual and MacWilliams when the
/// code is too large to enumerate.
pub fn weight_distribution_auto(code: &LinearCode) -> Result<WeightDistribution> {
    if code.k() <= code.n() - code.k() || code.k() == code.n() {
        weight_distribution(code)
    } else {
        let dual = code.dual()?;
        let wd = weight_distribution(&dual)?;
        macwilliams(&wd, dual.n(), dual.k(), dual.q())
    }
}

/// Minimum distance, via the dual when the code is too large.
pub fn min_distance(code: &LinearCode) -> Result<usize> {
    weight_distribution_auto(code)?
        .min_distance()
        .ok_or_else(|| Error::Degenerate("zero code".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntipodalVerdict {
    pub weights: Vec<usize>,
    pub d: Option<usize>,
    pub is_two_weight: bool,
    pub includes_n: bool,
    pub antipodal: bool,
}

/// True iff the nonzero weights are exactly `{d, n}` with `d < n`.
pub fn is_antipodal_two_weight(wd: &WeightDistribution, n: usize) -> AntipodalVerdict {
    let weights = wd.nonzero_weights();
    let is_two_weight = weights.len() == 2;
    let includes_n = weights.last() == Some(&n);
    AntipodalVerdict {
        d: weights.first().copied(),
        antipodal: is_two_weight && includes_n,
        weights,
        is_two_weight,
        includes_n,
    }
}

/// No zero column and no two columns that are scalar multiples.
pub fn is_projective(code: &LinearCode) -> bool {
    let (mult, zeros) = code.column_classes();
    zeros == 0 && mult.iter().all(|&m| m <= 1)
}

/// Columns completing those of `g` to `s` copies of every point of PG(k-1, q), in
/// canonical point order. `g` need not have full rank.
pub fn complementary_columns(g: &MatGF, s: usize) -> Result<MatGF> {
    let space = ProjectiveSpace::new(g.field().clone(), g.rows());
    let (mult, zeros) = column_classes(g);
    if zeros > 0 {
        return Err(Error::InvalidParameters("zero column has no projective point".into()));
    }
    let mut columns = Vec::new();
    for (i, &m) in mult.iter().enumerate() {
        if m > s {
            return Err(Error::MultiplicityExceeded { point: i, count: m, s });
        }
        for _ in m..s {
            columns.push(space.point(i).to_vec());
        }
    }
    if columns.is_empty() {
        return Err(Error::Degenerate("n_c = 0: the columns already cover every point".into()));
    }
    MatGF::from_columns(g.field().clone(), g.rows(), &columns)
}

/// The complementary code `C_c` of the generator column multiset for multiplicity `s`.
pub fn complementary_code(code: &LinearCode, s: usize) -> Result<LinearCode> {
    let cols = complementary_columns(code.generator(), s)?;
    LinearCode::new(cols).map_err(|e| match e {
        Error::RankDeficient { rank, .. } => {
            Error::Degenerate(format!("complementary columns span only rank {rank}"))
        }
        other => other,
    })
}

/// Each point `v` of PG(k-1, q) repeated `a * wt(vG) + b` times.
pub fn projective_dual_transform(code: &LinearCode, a: Ratio<i64>, b: Ratio<i64>) -> Result<LinearCode> {
    if !is_projective(code) {
        return Err(Error::InvalidParameters("projective dual needs a projective code".into()));
    }
    let space = ProjectiveSpace::new(code.field().clone(), code.k());
    let mut columns = Vec::new();
    for (i, v) in space.points().iter().enumerate() {
        let w = code.encode(v).iter().filter(|&&e| e != 0).count() as i64;
        let mult = a * Ratio::from_integer(w) + b;
        if !mult.is_integer() || mult < Ratio::zero() {
            return Err(Error::BadMultiplicity {
                point: i,
                value: mult.to_string(),
            });
        }
        for _ in 0..mult.to_integer() {
            columns.push(v.clone());
        }
    }
    if columns.is_empty() {
        return Err(Error::Degenerate("projective dual has length 0".into()));
    }
    let g = MatGF::from_columns(code.field().clone(), code.k(), &columns)?;
    LinearCode::new(g).map_err(|_| Error::Degenerate("projective dual columns do not span".into()))
}

/// The explicit list of codewords of a (possibly nonlinear) code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordMatrix {
    field: Arc<FieldSpec>,
    rows: Vec<Vec<Elem>>,
}

impl CodewordMatrix {
    pub fn new(field: Arc<FieldSpec>, rows: Vec<Vec<Elem>>) -> Self {
        CodewordMatrix { field, rows }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Elem>> {
        self.rows
    }

    pub fn distance(&self, i: usize, j: usize) -> usize {
        hamming(&self.rows[i], &self.rows[j])
    }

    pub fn rows_distinct(&self) -> bool {
        let set: HashSet<&Vec<Elem>> = self.rows.iter().collect();
        set.len() == self.rows.len()
    }

    /// Sorted set of pairwise distances between distinct rows.
    pub fn distance_set(&self) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                seen.insert(self.distance(i, j));
            }
        }
        seen.into_iter().collect()
    }

    /// Closed under coordinatewise addition: the rows are distinct and their GF(p)-span
    /// (each symbol expanded to its m base-p digits) has exactly N vectors.
    pub fn is_additive(&self) -> bool {
        let f = &self.field;
        let prime = FieldSpec::new(f.p(), 1).expect("p is prime");
        let expanded: Vec<Vec<Elem>> = self
            .rows
            .iter()
            .map(|r| r.iter().flat_map(|&e| f.digits(e)).collect())
            .collect();
        self.spans_exactly(&prime, &expanded)
    }

    /// Closed under addition and scalar multiplication: the rows are distinct and
    /// their GF(q)-span has exactly N vectors.
    pub fn is_linear(&self) -> bool {
        self.spans_exactly(&self.field, &self.rows)
    }

    fn spans_exactly(&self, field: &Arc<FieldSpec>, rows: &[Vec<Elem>]) -> bool {
        if self.rows.is_empty() {
            return false;
        }
        // N must be a power of the field order before any elimination
        let (n, fq) = (self.rows.len() as u128, field.q() as u128);
        let mut size = 1u128;
        while size < n {
            size *= fq;
        }
        if size != n || !self.rows_distinct() {
            return false;
        }
        let rank = match MatGF::from_rows(field.clone(), rows) {
            Ok(m) => m.rank(),
            Err(_) => return false,
        };
        budget::power(field.q(), rank) == self.rows.len() as u128
    }

    /// The linear code spanned by the rows, when the rows form exactly that code.
    pub fn as_linear_code(&self) -> Option<LinearCode> {
        if !self.is_linear() {
            return None;
        }
        let m = MatGF::from_rows(self.field.clone(), &self.rows).ok()?;
        LinearCode::spanned_by(&m).ok()
    }
}

pub fn hamming(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn weight(a: &[Elem]) -> usize {
    a.iter().filter(|&&x| x != 0).count()
}

/// Common pairwise distance of all distinct rows, if there is one.
pub fn equidistant_check(m: &CodewordMatrix) -> Option<usize> {
    match m.distance_set().as_slice() {
        [d] => Some(*d),
        _ => None,
    }
}

/// Common nonzero weight of a linear code, if there is one.
pub fn equidistant_weight(code: &LinearCode) -> Result<Option<usize>> {
    let wd = weight_distribution_auto(code)?;
    Ok(match wd.nonzero_weights().as_slice() {
        [d] => Some(*d),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<FieldSpec> {
        FieldSpec::of_order(q).unwrap()
    }

    fn repetition4() -> LinearCode {
        LinearCode::from_rows(gf(2), &[vec![1, 1, 1, 1]]).unwrap()
    }

    fn hamming8() -> LinearCode {
        // RM(1,3): all-ones row plus the three coordinate rows of AG(3,2)
        let rows = vec![
            vec![1, 1, 1, 1, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1],
            vec![0, 0, 1, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        ];
        LinearCode::from_rows(gf(2), &rows).unwrap()
    }

    fn bose_bush4() -> LinearCode {
        let f = gf(4);
        let mut cols: Vec<Vec<Elem>> = f.elements().map(|t| vec![1, t, f.mul(t, t)]).collect();
        cols.push(vec![0, 1, 0]);
        cols.push(vec![0, 0, 1]);
        LinearCode::new(MatGF::from_columns(f, 3, &cols).unwrap()).unwrap()
    }

    #[test]
    fn dual_of_repetition_is_even_weight() {
        let even = repetition4().dual().unwrap();
        assert_eq!(even.k(), 3);
        let wd = weight_distribution(&even).unwrap();
        assert_eq!(wd, WeightDistribution::from_u64(&[1, 0, 6, 0, 1]));
        assert!(even.dual().unwrap().same_code(&repetition4()));
    }

    #[test]
    fn hamming8_is_self_dual() {
        let c = hamming8();
        assert!(c.dual().unwrap().same_code(&c));
        let wd = weight_distribution(&c).unwrap();
        assert_eq!(wd.sparse(), BTreeMap::from([(0, 1u32.into()), (4, 14u32.into()), (8, 1u32.into())]));
    }

    #[test]
    fn bose_bush_distributions() {
        let c = bose_bush4();
        let wd = weight_distribution(&c).unwrap();
        assert_eq!(wd.count(4), &BigUint::from(45u32));
        assert_eq!(wd.count(6), &BigUint::from(18u32));
        let dual = c.dual().unwrap();
        assert_eq!(min_distance(&dual).unwrap(), 4);
        assert!(is_projective(&c));
        let v = is_antipodal_two_weight(&wd, 6);
        assert!(v.antipodal);
        assert_eq!(v.d, Some(4));
    }

    #[test]
    fn syndrome_count_matches_enumeration() {
        for c in [hamming8(), bose_bush4(), repetition4().dual().unwrap(), repetition4()] {
            assert_eq!(weight_distribution_by_syndromes(&c).unwrap(), weight_distribution(&c).unwrap());
        }
    }

    #[test]
    fn single_weight_code_is_not_two_weight() {
        // [5,2]_4 code with every point of PG(1,4) as a column: equidistant, weight 4
        let f = gf(4);
        let cols: Vec<Vec<Elem>> = ProjectiveSpace::new(f.clone(), 2).points().to_vec();
        let c = LinearCode::new(MatGF::from_columns(f, 2, &cols).unwrap()).unwrap();
        let wd = weight_distribution(&c).unwrap();
        assert_eq!(wd.nonzero_weights(), vec![4]);
        assert!(!is_antipodal_two_weight(&wd, 5).antipodal);
    }

    #[test]
    fn projectivity() {
        let f = gf(4);
        let c = LinearCode::from_rows(f.clone(), &[vec![1, 2, 0], vec![0, 3, 1]]).unwrap();
        // columns (1,0), (2,3) = 2*(1,2)... and (0,1)
        assert!(is_projective(&c));
        let rep = LinearCode::from_rows(f.clone(), &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(!is_projective(&rep));
        let scaled = LinearCode::from_rows(f, &[vec![1, 2, 0], vec![1, 2, 1]]).unwrap();
        assert!(!is_projective(&scaled));
    }

    #[test]
    fn bose_bush_complement() {
        let c = bose_bush4();
        let cc = complementary_code(&c, 1).unwrap();
        assert_eq!((cc.n(), cc.k()), (15, 3));
        let wd = weight_distribution(&cc).unwrap();
        assert_eq!(wd.sparse(), BTreeMap::from([(0, 1u32.into()), (10, 18u32.into()), (12, 45u32.into())]));
        let joined = LinearCode::new(c.generator().concat(cc.generator()).unwrap()).unwrap();
        assert_eq!(equidistant_weight(&joined).unwrap(), Some(16));
        assert_eq!(equidistant_check(&joined.codeword_matrix().unwrap()), Some(16));
    }

    #[test]
    fn full_point_set_has_empty_complement() {
        let f = gf(2);
        let c = LinearCode::from_rows(f, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(matches!(complementary_code(&c, 1), Err(Error::Degenerate(_))));
        assert!(matches!(complementary_code(&c, 0), Err(Error::MultiplicityExceeded { .. })));
    }

    #[test]
    fn doubled_point_complement_is_equidistant() {
        let f = gf(2);
        let g = MatGF::from_columns(f.clone(), 2, &[vec![1, 0], vec![1, 0]]).unwrap();
        let cc = complementary_columns(&g, 2).unwrap();
        assert_eq!(cc.cols(), 4);
        let joined = g.concat(&cc).unwrap();
        for msg in [[0, 1], [1, 0], [1, 1]] {
            assert_eq!(weight(&joined.combine_rows(&msg)), 4);
        }
    }

    #[test]
    fn projective_dual_of_bose_bush() {
        let c = bose_bush4();
        let t = projective_dual_transform(&c, Ratio::new(1, 2), Ratio::from_integer(-2)).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(weight_distribution(&t).unwrap().nonzero_weights(), vec![4, 6]);
        let simplex = projective_dual_transform(&c, Ratio::zero(), Ratio::from_integer(1)).unwrap();
        assert_eq!(simplex.n(), 21);
        assert_eq!(equidistant_weight(&simplex).unwrap(), Some(16));
        assert!(matches!(
            projective_dual_transform(&c, Ratio::new(1, 3), Ratio::zero()),
            Err(Error::BadMultiplicity { .. })
        ));
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let f = gf(2);
        let rows: Vec<Vec<Elem>> = (0..30)
            .map(|i| (0..31).map(|j| (i == j || j == 30) as Elem).collect())
            .collect();
        let c = LinearCode::from_rows(f, &rows).unwrap();
        assert!(matches!(weight_distribution(&c), Err(Error::Budget { .. })));
        // the dual side is a single word, so the automatic path succeeds
        let wd = weight_distribution_auto(&c).unwrap();
        assert_eq!(wd.total(), BigUint::from(1u64 << 30));
        assert_eq!(min_distance(&c).unwrap(), 2);
    }
}
