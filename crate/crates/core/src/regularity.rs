//! Covering radius, subconstituents and complete regularity.
//!
//! For a linear code every vector `x` has the same neighbor-level profile as every
//! other vector with the same syndrome: `d(x + e, C)` is the weight of the coset
//! `x + e + C`, which only depends on `H(x + e)^t`. Complete regularity is therefore
//! decided on the syndrome graph (q^(n-k) vertices, edges `s -> s + g h_i` for all
//! columns `h_i` of H and all `g != 0`). [`brute_subconstituents`] checks the
//! definition over the whole space and serves as an independent oracle.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::budget::{self, BRUTE_LIMIT, SYND_BUDGET_VAR};
use crate::code::{dual_weight_distribution, CodewordMatrix, LinearCode};
use crate::error::{Error, Result};
use crate::matrix::MatGF;
use crate::vecspace::Packed;

const UNSEEN: u8 = u8::MAX;

/// Coset-leader weights for every syndrome of a code.
#[derive(Clone, Debug)]
pub struct SyndromeProfile {
    packed: Packed,
    n: usize,
    levels: Vec<u8>,
    steps: Vec<u64>,
    rho: usize,
    level_counts: Vec<u64>,
}

impl SyndromeProfile {
    /// Profile of the code with full-rank parity-check matrix `h`.
    pub fn from_parity_check(h: &MatGF) -> Result<Self> {
        let r = h.rows();
        let q = h.field().q();
        budget::require("syndrome profile", budget::power(q, r), budget::synd_budget(), SYND_BUDGET_VAR)?;
        if h.rank() != r {
            return Err(Error::RankDeficient { rank: h.rank(), rows: r });
        }
        let packed = Packed::new(h.field().clone(), r);
        let mut steps = Vec::with_capacity(h.cols() * (q as usize - 1));
        for j in 0..h.cols() {
            let col = packed.encode(&h.column(j));
            for g in 1..q {
                steps.push(packed.scale(g, col));
            }
        }
        let mut levels = vec![UNSEEN; packed.size() as usize];
        let mut queue = VecDeque::from([0u64]);
        levels[0] = 0;
        while let Some(s) = queue.pop_front() {
            let next = levels[s as usize] + 1;
            for &step in &steps {
                let t = packed.add(s, step) as usize;
                if levels[t] == UNSEEN {
                    levels[t] = next;
                    queue.push_back(t as u64);
                }
            }
        }
        let rho = *levels.iter().max().unwrap_or(&0) as usize;
        let mut level_counts = vec![0u64; rho + 1];
        for &l in &levels {
            level_counts[l as usize] += 1;
        }
        Ok(SyndromeProfile {
            packed,
            n: h.cols(),
            levels,
            steps,
            rho,
            level_counts,
        })
    }

    pub fn covering_radius(&self) -> usize {
        self.rho
    }

    /// Redundancy r = n - k.
    pub fn redundancy(&self) -> usize {
        self.packed.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coset weight of syndrome `s`.
    pub fn level(&self, s: u64) -> usize {
        self.levels[s as usize] as usize
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    /// Number of cosets at each level 0..=rho.
    pub fn cosets_per_level(&self) -> &[u64] {
        &self.level_counts
    }

    /// Subconstituent sizes |C(i)| in vectors.
    pub fn subconstituent_sizes(&self) -> Vec<u128> {
        let k = self.n - self.packed.len();
        let per_coset = budget::power(self.packed.field().q(), k);
        self.level_counts.iter().map(|&c| c as u128 * per_coset).collect()
    }

    /// Per-coset (down, same, up) neighbor counts, then the per-level verdict.
    pub fn complete_regularity(&self) -> Regularity {
        let mut per_level: Vec<Option<(u64, [u64; 3])>> = vec![None; self.rho + 1];
        for s in 0..self.levels.len() as u64 {
            let l = self.levels[s as usize] as i32;
            let mut counts = [0u64; 3];
            for &step in &self.steps {
                let t = self.levels[self.packed.add(s, step) as usize] as i32;
                counts[(t - l + 1) as usize] += 1;
            }
            match per_level[l as usize] {
                None => per_level[l as usize] = Some((s, counts)),
                Some((first, seen)) if seen[0] != counts[0] || seen[2] != counts[2] => {
                    return Regularity::Irregular(Violation {
                        level: l as usize,
                        first,
                        second: s,
                        first_counts: seen,
                        second_counts: counts,
                    });
                }
                _ => {}
            }
        }
        let counts: Vec<[u64; 3]> = per_level.into_iter().map(|e| e.expect("every level occupied").1).collect();
        Regularity::Regular(IntersectionArray::from_counts(&counts))
    }

    pub fn decode(&self, s: u64) -> Vec<u32> {
        self.packed.decode(s)
    }
}

/// `{b_0, ..., b_{rho-1}; c_1, ..., c_rho}` together with the derived `a_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub a: Vec<u64>,
}

impl IntersectionArray {
    /// `b` and `c` as printed; `a_l = (q-1)n - b_l - c_l` with `c_0 = b_rho = 0`.
    pub fn new(b: Vec<u64>, c: Vec<u64>, q: u32, n: usize) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidParameters("b and c must both have rho entries".into()));
        }
        let valency = (q as u64 - 1) * n as u64;
        let rho = b.len();
        let mut a = Vec::with_capacity(rho + 1);
        for l in 0..=rho {
            let bl = if l < rho { b[l] } else { 0 };
            let cl = if l > 0 { c[l - 1] } else { 0 };
            a.push(valency.checked_sub(bl + cl).ok_or_else(|| {
                Error::InvalidParameters(format!("b_{l} + c_{l} exceeds (q-1)n = {valency}"))
            })?);
        }
        Ok(IntersectionArray { b, c, a })
    }

    fn from_counts(counts: &[[u64; 3]]) -> Self {
        let rho = counts.len() - 1;
        IntersectionArray {
            b: (0..rho).map(|l| counts[l][2]).collect(),
            c: (1..=rho).map(|l| counts[l][0]).collect(),
            a: counts.iter().map(|c| c[1]).collect(),
        }
    }

    pub fn rho(&self) -> usize {
        self.b.len()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

/// Two vertices (syndromes, or vectors for the brute oracle) at the same level with
/// different (down, same, up) counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub level: usize,
    pub first: u64,
    pub second: u64,
    pub first_counts: [u64; 3],
    pub second_counts: [u64; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular(IntersectionArray),
    Irregular(Violation),
}

impl Regularity {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            Regularity::Regular(ia) => Some(ia),
            Regularity::Irregular(_) => None,
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }
}

pub fn syndrome_profile(code: &LinearCode) -> Result<SyndromeProfile> {
    SyndromeProfile::from_parity_check(&code.parity_check())
}

pub fn complete_regularity(code: &LinearCode) -> Result<Regularity> {
    Ok(syndrome_profile(code)?.complete_regularity())
}

/// Covering radius together with the external distance and the `rho <= s` checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusReport {
    pub rho: usize,
    pub external_distance: usize,
    pub rho_le_s: bool,
    pub rho_eq_s: bool,
}

pub fn covering_radius(code: &LinearCode) -> Result<usize> {
    Ok(syndrome_profile(code)?.covering_radius())
}

/// Number of distinct nonzero weights of the dual code.
pub fn external_distance(code: &LinearCode) -> Result<usize> {
    if code.k() == code.n() {
        return Ok(0);
    }
    Ok(dual_weight_distribution(code)?.s_count())
}

pub fn radius_report(code: &LinearCode) -> Result<RadiusReport> {
    let rho = covering_radius(code)?;
    let s = external_distance(code)?;
    Ok(RadiusReport {
        rho,
        external_distance: s,
        rho_le_s: rho <= s,
        rho_eq_s: rho == s,
    })
}

/// Uniform packing in the wide sense, decided through the equivalent `rho = s`.
pub fn up_wide_check(code: &LinearCode) -> Result<RadiusReport> {
    radius_report(code)
}

/// Full-space oracle: distances to the code for all q^n vectors, then the neighbor
/// counts of every vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteSubconstituents {
    pub rho: usize,
    pub vectors_per_level: Vec<u64>,
    pub regularity: Regularity,
}

pub fn brute_subconstituents(code: &LinearCode) -> Result<BruteSubconstituents> {
    let n = code.n();
    let q = code.q();
    let total = budget::power(q, n);
    if total > BRUTE_LIMIT {
        return Err(Error::Budget {
            what: "full-space oracle",
            needed: total,
            budget: BRUTE_LIMIT,
            var: "(fixed)",
        });
    }
    let space = Packed::new(code.field().clone(), n);
    let mut dist = vec![UNSEEN; total as usize];
    let mut queue = VecDeque::new();
    code.for_each_codeword(|c| {
        let x = space.encode(c);
        dist[x as usize] = 0;
        queue.push_back(x);
    });
    let unit = |i: usize, g: u32| (g as u64) * (q as u64).pow(i as u32);
    let steps: Vec<u64> = (0..n).flat_map(|i| (1..q).map(move |g| unit(i, g))).collect();
    while let Some(x) = queue.pop_front() {
        let next = dist[x as usize] + 1;
        for &e in &steps {
            let y = space.add(x, e) as usize;
            if dist[y] == UNSEEN {
                dist[y] = next;
                queue.push_back(y as u64);
            }
        }
    }
    let rho = *dist.iter().max().unwrap() as usize;
    let mut vectors_per_level = vec![0u64; rho + 1];
    let mut per_level: Vec<Option<(u64, [u64; 3])>> = vec![None; rho + 1];
    let mut violation = None;
    for x in 0..total as u64 {
        let l = dist[x as usize] as i32;
        vectors_per_level[l as usize] += 1;
        if violation.is_some() {
            continue;
        }
        let mut counts = [0u64; 3];
        for &e in &steps {
            let t = dist[space.add(x, e) as usize] as i32;
            counts[(t - l + 1) as usize] += 1;
        }
        match per_level[l as usize] {
            None => per_level[l as usize] = Some((x, counts)),
            Some((first, seen)) if seen[0] != counts[0] || seen[2] != counts[2] => {
                violation = Some(Violation {
                    level: l as usize,
                    first,
                    second: x,
                    first_counts: seen,
                    second_counts: counts,
                });
            }
            _ => {}
        }
    }
    let regularity = match violation {
        Some(v) => Regularity::Irregular(v),
        None => {
            let counts: Vec<[u64; 3]> = per_level.into_iter().map(|e| e.unwrap().1).collect();
            Regularity::Regular(IntersectionArray::from_counts(&counts))
        }
    };
    Ok(BruteSubconstituents {
        rho,
        vectors_per_level,
        regularity,
    })
}

/// Whether every choice of `t` columns shows every q-ary t-tuple exactly `N / q^t` times.
pub fn is_orthogonal_array(m: &CodewordMatrix, t: usize) -> bool {
    let q = m.q() as usize;
    let n = m.n();
    if t == 0 {
        return true;
    }
    if t > n {
        return false;
    }
    let cells = match q.checked_pow(t as u32) {
        Some(c) if m.len().is_multiple_of(c) => c,
        _ => return false,
    };
    let lambda = m.len() / cells;
    let mut cols: Vec<usize> = (0..t).collect();
    let mut tally = vec![0usize; cells];
    loop {
        tally.iter_mut().for_each(|x| *x = 0);
        for row in m.rows() {
            let idx = cols.iter().fold(0, |acc, &c| acc * q + row[c] as usize);
            tally[idx] += 1;
        }
        if tally.iter().any(|&x| x != lambda) {
            return false;
        }
        // next t-subset in lexicographic order
        let Some(i) = (0..t).rev().find(|&i| cols[i] < n - t + i) else {
            return true;
        };
        cols[i] += 1;
        for j in i + 1..t {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Largest strength t such that `m` is an orthogonal array of strength t.
pub fn oa_strength(m: &CodewordMatrix) -> usize {
    oa_strength_capped(m, m.n())
}

/// As [`oa_strength`], stopping the search at `max_t`.
pub fn oa_strength_capped(m: &CodewordMatrix, max_t: usize) -> usize {
    (1..=max_t.min(m.n())).take_while(|&t| is_orthogonal_array(m, t)).count()
}
