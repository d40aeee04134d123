//! Exhaustive searches at desk scale: arcs in PG(2, q), and a census of all antipodal
//! two-weight codes of small length whose duals are completely regular.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget;
use crate::code::binomial;
use crate::error::{Error, Result};
use crate::families::{family_match, CrSignature, Family};
use crate::field::{Elem, FieldSpec};
use crate::formats::write_gfc;
use crate::matrix::MatGF;
use crate::projective::ProjectiveSpace;
use crate::regularity::{IntersectionArray, SyndromeProfile};

/// Largest q for an existence search, and for a full count.
pub const ARC_EXISTS_MAX_Q: u32 = 16;
pub const ARC_COUNT_MAX_Q: u32 = 8;

const WORDS: usize = 5;

#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Bits([u64; WORDS]);

impl Bits {
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or(self, other: Bits) -> Bits {
        let mut out = self;
        out.0.iter_mut().zip(other.0).for_each(|(a, b)| *a |= b);
        out
    }
}

/// Points and lines of PG(2, q) with the line through every pair of points.
struct Plane {
    space: ProjectiveSpace,
    lines: Vec<Bits>,
    through: Vec<u16>,
}

impl Plane {
    fn new(field: Arc<FieldSpec>) -> Self {
        let space = ProjectiveSpace::new(field.clone(), 3);
        let p = space.len();
        let lines: Vec<Bits> = space
            .points()
            .iter()
            .map(|l| {
                let mut b = Bits::default();
                for (i, pt) in space.points().iter().enumerate() {
                    if space.dot(l, pt) == 0 {
                        b.set(i);
                    }
                }
                b
            })
            .collect();
        let f = &field;
        let mut through = vec![0u16; p * p];
        for i in 0..p {
            for j in 0..p {
                if i == j {
                    continue;
                }
                let (a, b) = (space.point(i), space.point(j));
                let cross = [
                    f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
                    f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
                    f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
                ];
                through[i * p + j] = space.index_of(&cross).expect("distinct points") as u16;
            }
        }
        Plane { space, lines, through }
    }

    fn len(&self) -> usize {
        self.space.len()
    }

    fn line(&self, i: usize, j: usize) -> Bits {
        self.lines[self.through[i * self.len() + j] as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcMode {
    /// Stop at the first arc; the search starts from the standard frame.
    Exists,
    /// Count every arc of the target size (as an increasing point sequence).
    Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcSearch {
    pub q: u32,
    pub size: usize,
    pub exists: bool,
    pub count: Option<u64>,
    pub witness: Option<Vec<Vec<Elem>>>,
    pub nodes: u64,
}

struct ArcDfs<'a> {
    plane: &'a Plane,
    target: usize,
    nodes: &'a AtomicU64,
    limit: u128,
    stop_at_first: bool,
}

impl ArcDfs<'_> {
    fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) as u128 + 1;
        if n > self.limit {
            return Err(Error::Budget {
                what: "arc search",
                needed: n,
                budget: self.limit,
                var: budget::SEARCH_BUDGET_VAR,
            });
        }
        Ok(())
    }

    /// Number of arcs completing `arc` with points above `last`; with `stop_at_first`
    /// the arc found is left in `arc`.
    fn run(&self, arc: &mut Vec<usize>, blocked: Bits, last: usize) -> Result<u64> {
        self.tick()?;
        if arc.len() == self.target {
            return Ok(1);
        }
        let p = self.plane.len();
        let free: Vec<usize> = (last + 1..p).filter(|&c| !blocked.has(c)).collect();
        if free.len() < self.target - arc.len() {
            return Ok(0);
        }
        let mut total = 0;
        for c in free {
            let next = arc.iter().fold(blocked, |b, &a| b.or(self.plane.line(a, c)));
            arc.push(c);
            let found = self.run(arc, next, c)?;
            if found > 0 && self.stop_at_first {
                return Ok(found);
            }
            arc.pop();
            total += found;
        }
        Ok(total)
    }
}

fn blocked_by(plane: &Plane, arc: &[usize]) -> Bits {
    let mut b = Bits::default();
    for (x, &i) in arc.iter().enumerate() {
        b.set(i);
        for &j in &arc[x + 1..] {
            b = b.or(plane.line(i, j));
        }
    }
    b
}

/// Backtracking search for `size`-arcs of PG(2, q) (no three points collinear).
pub fn search_arcs(q: u32, size: usize, mode: ArcMode) -> Result<ArcSearch> {
    let max_q = match mode {
        ArcMode::Exists => ARC_EXISTS_MAX_Q,
        ArcMode::Count => ARC_COUNT_MAX_Q,
    };
    if q > max_q {
        return Err(Error::InvalidParameters(format!("arc search supports q <= {max_q} in this mode, got {q}")));
    }
    let field = FieldSpec::of_order(q as u64)?;
    let plane = Plane::new(field);
    let p = plane.len();
    let nodes = AtomicU64::new(0);
    let dfs = ArcDfs {
        plane: &plane,
        target: size,
        nodes: &nodes,
        limit: budget::search_budget(),
        stop_at_first: mode == ArcMode::Exists,
    };
    let point = |i: usize| plane.space.point(i).to_vec();
    let finish = |exists, count, witness: Option<Vec<usize>>| ArcSearch {
        q,
        size,
        exists,
        count,
        witness: witness.map(|w| w.into_iter().map(point).collect()),
        nodes: nodes.load(Ordering::Relaxed),
    };
    match mode {
        ArcMode::Count => {
            let counts: Vec<u64> = (0..p)
                .into_par_iter()
                .map(|first| dfs.run(&mut vec![first], blocked_by(&plane, &[first]), first))
                .collect::<Result<_>>()?;
            let count: u64 = counts.iter().sum();
            Ok(finish(count > 0, Some(count), None))
        }
        ArcMode::Exists => {
            // any arc of four or more points maps onto one through the standard frame
            let frame: Vec<usize> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
                .iter()
                .map(|v| plane.space.index_of(v).expect("frame point"))
                .take(size.min(4))
                .collect();
            if size <= frame.len() {
                return Ok(finish(true, None, Some(frame)));
            }
            let blocked = blocked_by(&plane, &frame);
            let found = (0..p)
                .into_par_iter()
                .filter(|&c| !blocked.has(c))
                .map(|c| {
                    let mut arc = frame.clone();
                    let next = frame.iter().fold(blocked, |b, &a| b.or(plane.line(a, c)));
                    arc.push(c);
                    Ok((dfs.run(&mut arc, next, c)? > 0).then_some(arc))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .next();
            Ok(finish(found.is_some(), None, found))
        }
    }
}

/// Outcome for one census entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CensusStatus {
    /// Nontrivial, completely regular, parameters of some family.
    Matched,
    /// Nontrivial, completely regular, no family fits.
    Unmatched,
    /// The completely regular side has dimension below 2 or minimum distance below 3.
    Trivial,
    /// Covering radius 2 but not completely regular.
    NotCr,
}

impl std::fmt::Display for CensusStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CensusStatus::Matched => "MATCHED",
            CensusStatus::Unmatched => "UNMATCHED",
            CensusStatus::Trivial => "TRIVIAL",
            CensusStatus::NotCr => "NOT_CR",
        };
        f.write_str(s)
    }
}

/// Parameter class of antipodal two-weight `[n, r, {d, n}]_q` codes found by the census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub q: u32,
    pub r: usize,
    pub n: usize,
    pub d: usize,
    pub weights: [usize; 2],
    pub projective: bool,
    /// Covering radius of the dual.
    pub rho: usize,
    pub ia: Option<IntersectionArray>,
    pub families: Vec<Family>,
    pub status: CensusStatus,
    /// Column multisets yielding these parameters.
    pub count: u64,
    /// First multiset found, as point indices of PG(r-1, q).
    pub example: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub q: u32,
    pub r: usize,
    pub n_max: usize,
    pub projective_only: bool,
    pub entries: Vec<CensusEntry>,
    /// Antipodal codes whose dual has covering radius other than 2.
    pub other_radius: u64,
    pub candidates_bound: u128,
    #[serde(skip)]
    field: Option<Arc<FieldSpec>>,
}

impl Census {
    pub fn unmatched(&self) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(|e| e.status == CensusStatus::Unmatched)
    }

    /// Generator matrix of an entry's example code.
    pub fn example_matrix(&self, entry: &CensusEntry) -> Result<MatGF> {
        let field = self.field.clone().ok_or(Error::Inconsistent("census without field".into()))?;
        let space = ProjectiveSpace::new(field.clone(), self.r);
        let cols: Vec<Vec<Elem>> = entry.example.iter().map(|&i| space.point(i).to_vec()).collect();
        MatGF::from_columns(field, self.r, &cols)
    }
}

struct CensusDfs<'a> {
    incidence: &'a [Vec<u32>],
    hyperplanes: usize,
    n_max: usize,
    strict: bool,
}

impl CensusDfs<'_> {
    /// Collects every multiset extending `cols` (column indices nondecreasing) whose
    /// hyperplane counts are all 0 or a common delta, some 0, and delta below n.
    fn run(&self, cols: &mut Vec<usize>, z: &mut [u32], found: &mut Vec<Vec<usize>>) {
        let n = cols.len();
        let zmax = *z.iter().max().unwrap();
        if zmax > 0 && (zmax as usize) < n && z.iter().all(|&v| v == 0 || v == zmax) && z.contains(&0) {
            found.push(cols.clone());
        }
        if n == self.n_max {
            return;
        }
        let rem = (self.n_max - n - 1) as u32;
        let start = cols.last().map_or(0, |&c| c + self.strict as usize);
        for c in start..self.hyperplanes {
            for &h in &self.incidence[c] {
                z[h as usize] += 1;
            }
            let zm = zmax.max(self.incidence[c].iter().map(|&h| z[h as usize]).max().unwrap_or(0));
            // a hyperplane already met must still be able to reach the common count
            if z.iter().all(|&v| v == 0 || zm - v <= rem) {
                cols.push(c);
                self.run(cols, z, found);
                cols.pop();
            }
            for &h in &self.incidence[c] {
                z[h as usize] -= 1;
            }
        }
    }
}

/// Enumerates column multisets of PG(r-1, q) of size at most `n_max` generating
/// antipodal two-weight codes, and classifies the dual of each.
pub fn search_antipodal_duals(q: u32, r: usize, n_max: usize, projective_only: bool) -> Result<Census> {
    if r < 2 {
        return Err(Error::InvalidParameters("census needs r >= 2".into()));
    }
    let field = FieldSpec::of_order(q as u64)?;
    let space = ProjectiveSpace::new(field.clone(), r);
    let p = space.len();
    let candidates: BigUint = if projective_only {
        (0..=n_max.min(p)).map(|k| binomial(p, k)).sum()
    } else {
        binomial(p + n_max, n_max)
    };
    let candidates_bound = candidates.to_u128().unwrap_or(u128::MAX);
    budget::require("census candidates", candidates_bound, budget::search_budget(), budget::SEARCH_BUDGET_VAR)?;
    // point c lies on hyperplane v when v . c = 0
    let incidence: Vec<Vec<u32>> = (0..p)
        .map(|c| (0..p).filter(|&v| space.dot(space.point(v), space.point(c)) == 0).map(|v| v as u32).collect())
        .collect();
    let dfs = CensusDfs {
        incidence: &incidence,
        hyperplanes: p,
        n_max,
        strict: projective_only,
    };
    let found: Vec<Vec<usize>> = (0..p)
        .into_par_iter()
        .map(|first| {
            let mut z = vec![0u32; p];
            for &h in &incidence[first] {
                z[h as usize] += 1;
            }
            let mut out = Vec::new();
            if n_max >= 1 {
                dfs.run(&mut vec![first], &mut z, &mut out);
            }
            out
        })
        .flatten()
        .collect();

    type Key = (usize, usize, bool, usize, Option<IntersectionArray>);
    let mut groups: BTreeMap<Key, (u64, Vec<usize>)> = BTreeMap::new();
    let mut other_radius = 0;
    for cols in found {
        let columns: Vec<Vec<Elem>> = cols.iter().map(|&i| space.point(i).to_vec()).collect();
        let h = MatGF::from_columns(field.clone(), r, &columns)?;
        let profile = SyndromeProfile::from_parity_check(&h)?;
        let rho = profile.covering_radius();
        if rho != 2 {
            other_radius += 1;
            continue;
        }
        let n = cols.len();
        let projective = cols.windows(2).all(|w| w[0] != w[1]);
        let d = n - hyperplane_count(&incidence, &cols, p);
        let ia = profile.complete_regularity().array().cloned();
        let entry = groups.entry((n, d, projective, rho, ia)).or_insert((0, cols.clone()));
        entry.0 += 1;
    }
    let entries = groups
        .into_iter()
        .map(|((n, d, projective, rho, ia), (count, example))| {
            let trivial = !projective || n < r + 2;
            let families = family_match(&CrSignature {
                q,
                n,
                k: n - r,
                dual_weights: vec![d, n],
                ia: ia.clone(),
            });
            let status = if trivial {
                CensusStatus::Trivial
            } else if ia.is_none() {
                CensusStatus::NotCr
            } else if families.is_empty() {
                CensusStatus::Unmatched
            } else {
                CensusStatus::Matched
            };
            CensusEntry {
                q,
                r,
                n,
                d,
                weights: [d, n],
                projective,
                rho,
                ia,
                families,
                status,
                count,
                example,
            }
        })
        .collect();
    Ok(Census {
        q,
        r,
        n_max,
        projective_only,
        entries,
        other_radius,
        candidates_bound,
        field: Some(field),
    })
}

/// The common nonzero hyperplane count delta (so d = n - delta).
fn hyperplane_count(incidence: &[Vec<u32>], cols: &[usize], p: usize) -> usize {
    let mut z = vec![0usize; p];
    for &c in cols {
        for &h in &incidence[c] {
            z[h as usize] += 1;
        }
    }
    z.into_iter().max().unwrap_or(0)
}

pub const CENSUS_HEADER: &str = "# matching is by parameters (n, k, q, dual weights, intersection array), not by code equivalence";

/// Tab-separated table, one line per entry.
pub fn census_tsv(census: &Census) -> String {
    let mut out = format!("{CENSUS_HEADER}\nq\tr\tn\tk\tweights\tprojective\trho\tia\tstatus\tfamilies\tcount\n");
    for e in &census.entries {
        let fams: Vec<String> = e.families.iter().map(Family::to_string).collect();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{{{},{}}}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            e.q,
            e.r,
            e.n,
            e.n - e.r,
            e.weights[0],
            e.weights[1],
            e.projective,
            e.rho,
            e.ia.as_ref().map_or("-".to_string(), |ia| ia.to_string()),
            e.status,
            if fams.is_empty() { "-".to_string() } else { fams.join(",") },
            e.count
        ));
    }
    out
}

/// Writes one `.gfc` per UNMATCHED entry into `dir`.
pub fn dump_unmatched(census: &Census, dir: &Path) -> Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for e in census.unmatched() {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("unmatched_q{}_r{}_n{}_d{}.gfc", e.q, e.r, e.n, e.d));
        let g = census.example_matrix(e)?;
        std::fs::write(&path, write_gfc(&g, &["antipodal two-weight code with an unmatched completely regular dual"]))?;
        paths.push(path);
    }
    Ok(paths)
}

/// Runs the census and renders it; UNMATCHED entries are dumped when `dump_dir` is set.
pub fn classify_report(q: u32, r: usize, n_max: usize, dump_dir: Option<&Path>) -> Result<(Census, String)> {
    let census = search_antipodal_duals(q, r, n_max, false)?;
    if let Some(dir) = dump_dir {
        dump_unmatched(&census, dir)?;
    }
    let table = census_tsv(&census);
    Ok((census, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperoval_counts_match_brute_force() {
        assert_eq!(search_arcs(2, 4, ArcMode::Count).unwrap().count, Some(7));
        assert_eq!(search_arcs(4, 6, ArcMode::Count).unwrap().count, Some(168));
    }

    #[test]
    fn odd_planes_have_no_hyperoval() {
        assert!(!search_arcs(3, 5, ArcMode::Exists).unwrap().exists);
        assert!(!search_arcs(5, 7, ArcMode::Exists).unwrap().exists);
        // ovals do exist
        assert!(search_arcs(5, 6, ArcMode::Exists).unwrap().exists);
    }

    #[test]
    fn hyperoval_witness_is_an_arc() {
        let s = search_arcs(4, 6, ArcMode::Exists).unwrap();
        let w = s.witness.unwrap();
        assert_eq!(w.len(), 6);
        let f = FieldSpec::of_order(4).unwrap();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    let m = MatGF::from_rows(f.clone(), &[w[a].clone(), w[b].clone(), w[c].clone()]).unwrap();
                    assert_eq!(m.rank(), 3);
                }
            }
        }
    }

    #[test]
    fn small_census_is_deterministic() {
        let a = search_antipodal_duals(2, 3, 8, false).unwrap();
        let b = search_antipodal_duals(2, 3, 8, false).unwrap();
        assert_eq!(census_tsv(&a), census_tsv(&b));
        assert_eq!(a.unmatched().count(), 0);
    }

    #[test]
    fn bose_bush_appears_in_the_q4_census() {
        let c = search_antipodal_duals(4, 3, 6, false).unwrap();
        let bb = c.entries.iter().find(|e| e.n == 6 && e.d == 4 && e.projective).unwrap();
        assert_eq!(bb.ia.as_ref().unwrap().to_string(), "{18, 15; 1, 6}");
        assert!(bb.families.contains(&Family::Cr4));
        assert_eq!(bb.status, CensusStatus::Matched);
    }
}
