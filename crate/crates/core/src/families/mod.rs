//! The six known families of completely regular codes with covering radius 2 and
//! antipodal dual, their predicted intersection arrays, and parameter-level matching.

mod build;
mod structure;

use std::fmt;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::regularity::IntersectionArray;

pub use build::{bush_matrix_paper, cr1_extended_hamming, cr2_dm_dual, cr3_mds_dual, cr4_bose_bush, cr5_delsarte, cr6_denniston, construct, denniston_columns};
pub use structure::{antipodal_form_check, simplex_partition, AntipodalForm, SimplexPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "CR.1")]
    Cr1,
    #[serde(rename = "CR.2")]
    Cr2,
    #[serde(rename = "CR.3")]
    Cr3,
    #[serde(rename = "CR.4")]
    Cr4,
    #[serde(rename = "CR.5")]
    Cr5,
    #[serde(rename = "CR.6")]
    Cr6,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::Cr1, Family::Cr2, Family::Cr3, Family::Cr4, Family::Cr5, Family::Cr6];

    /// Name of the two-weight side, as used by the command line.
    pub fn slug(self) -> &'static str {
        match self {
            Family::Cr1 => "ext-hamming",
            Family::Cr2 => "dm-dual",
            Family::Cr3 => "mds-dual",
            Family::Cr4 => "bose-bush",
            Family::Cr5 => "delsarte",
            Family::Cr6 => "denniston",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = Family::ALL.iter().position(|x| x == self).unwrap() + 1;
        write!(f, "CR.{i}")
    }
}

/// Family parameters as accepted by the constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    ExtHamming { m: u32 },
    DmDual { p: u32, l: u32, h: u32 },
    MdsDual { q: u32, n: usize },
    BoseBush { q: u32 },
    Delsarte { q: u32 },
    Denniston { q: u32, h: u32 },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::ExtHamming { .. } => Family::Cr1,
            FamilyParams::DmDual { .. } => Family::Cr2,
            FamilyParams::MdsDual { .. } => Family::Cr3,
            FamilyParams::BoseBush { .. } => Family::Cr4,
            FamilyParams::Delsarte { .. } => Family::Cr5,
            FamilyParams::Denniston { .. } => Family::Cr6,
        }
    }

    /// Field order, length and the weights `(d, n)` of the two-weight side.
    pub fn predicted(&self) -> Result<(u32, usize, usize)> {
        let (q, n, d) = match *self {
            FamilyParams::ExtHamming { m } => (2u64, 1u64 << m, 1u64 << (m - 1)),
            FamilyParams::DmDual { p, l, h } => {
                let (q, mu) = ((p as u64).pow(l), (p as u64).pow(h));
                (q, q * mu, (q - 1) * mu)
            }
            FamilyParams::MdsDual { q, n } => (q as u64, n as u64, n as u64 - 1),
            FamilyParams::BoseBush { q } => (q as u64, q as u64 + 2, q as u64),
            FamilyParams::Delsarte { q } => {
                let q = q as u64;
                (q, q * (q - 1) / 2, q * (q - 2) / 2)
            }
            FamilyParams::Denniston { q, h } => {
                let (q, h) = (q as u64, h as u64);
                (q, 1 + (q + 1) * (h - 1), q * (h - 1))
            }
        };
        Ok((q as u32, n as usize, d as usize))
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyParams::ExtHamming { m } => write!(f, "ext-hamming m={m}"),
            FamilyParams::DmDual { p, l, h } => write!(f, "dm-dual p={p} l={l} h={h}"),
            FamilyParams::MdsDual { q, n } => write!(f, "mds-dual q={q} n={n}"),
            FamilyParams::BoseBush { q } => write!(f, "bose-bush q={q}"),
            FamilyParams::Delsarte { q } => write!(f, "delsarte q={q}"),
            FamilyParams::Denniston { q, h } => write!(f, "denniston q={q} h={h}"),
        }
    }
}

/// A constructed family member: the antipodal two-weight code and its completely
/// regular dual, with the values the family formulas predict for them.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub params: FamilyParams,
    pub two_weight_code: LinearCode,
    pub cr_code: LinearCode,
    pub predicted_ia: IntersectionArray,
    /// `{d, n}` of the two-weight side.
    pub predicted_weights: [usize; 2],
    /// Outside `2 <= k <= n - 2`, `3 <= d <= n - 1` for the completely regular side.
    pub trivial: bool,
    pub note: Option<String>,
}

impl FamilyInstance {
    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn q(&self) -> u32 {
        self.cr_code.q()
    }

    pub fn n(&self) -> usize {
        self.cr_code.n()
    }
}

/// The intersection array each family's formula assigns to a CR code of length `n`
/// over GF(q); `h` is the Denniston arc degree and is ignored elsewhere.
pub fn ia_formula(family: Family, q: u32, n: usize, h: u32) -> Result<IntersectionArray> {
    let (q64, n64, h64) = (q as u64, n as u64, h as u64);
    let (b, c) = match family {
        Family::Cr1 => ([n64, n64 - 1], [1, n64]),
        Family::Cr2 => ([n64 * (q64 - 1), n64 - 1], [1, n64 * (q64 - 1)]),
        Family::Cr3 => {
            if n64 > q64 + 1 {
                return Err(Error::InvalidParameters(format!("CR.3 needs n <= q + 1, got n = {n}")));
            }
            ([n64 * (q64 - 1), (q64 + 1 - n64) * (n64 - 1)], [1, n64 * (n64 - 1)])
        }
        Family::Cr4 => ([(q64 + 2) * (q64 - 1), q64 * q64 - 1], [1, q64 + 2]),
        Family::Cr5 => (
            [(q64 - 1) * n64, (q64 - 2) * (q64 + 1) * (q64 + 2) / 4],
            [1, q64 * (q64 - 1) * (q64 - 2) / 4],
        ),
        Family::Cr6 => {
            if h < 2 || h > q {
                return Err(Error::InvalidParameters(format!("CR.6 needs 2 <= h <= q, got h = {h}")));
            }
            (
                [(q64 - 1) * n64, (q64 + 1) * (h64 - 1) * (q64 - h64 + 1)],
                [1, (h64 - 1) * n64],
            )
        }
    };
    IntersectionArray::new(b.to_vec(), c.to_vec(), q, n)
}

/// The parameters family matching looks at: a code of length `n` and dimension `k`
/// over GF(q), the nonzero weights of its dual, and its intersection array if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrSignature {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub dual_weights: Vec<usize>,
    pub ia: Option<IntersectionArray>,
}

/// Every family whose parameter formulas reproduce `sig` exactly: length, dimension,
/// dual weights and intersection array. Families overlap (CR.1 is CR.2 at q = 2, CR.3
/// at n = q is CR.2), and all matches are listed.
pub fn family_match(sig: &CrSignature) -> Vec<Family> {
    let Some(ia) = &sig.ia else {
        return Vec::new();
    };
    Family::ALL
        .into_iter()
        .filter(|&f| {
            candidate_h(f, sig).into_iter().any(|h| {
                let Some(params) = params_for(f, sig.q, sig.n, h) else {
                    return false;
                };
                let Ok((_, n, d)) = params.predicted() else {
                    return false;
                };
                let dual_dim = sig.n - sig.k;
                n == sig.n
                    && sig.dual_weights == [d, n]
                    && expected_dual_dim(&params) == Some(dual_dim)
                    && ia_formula(f, sig.q, sig.n, h).ok().as_ref() == Some(ia)
            })
        })
        .collect()
}

fn candidate_h(f: Family, sig: &CrSignature) -> Vec<u32> {
    match f {
        Family::Cr6 if sig.n > 1 && (sig.n - 1).is_multiple_of(sig.q as usize + 1) => {
            vec![((sig.n - 1) / (sig.q as usize + 1) + 1) as u32]
        }
        Family::Cr6 => Vec::new(),
        _ => vec![0],
    }
}

/// The constructor parameters that would produce a length-`n` member over GF(q).
fn params_for(f: Family, q: u32, n: usize, h: u32) -> Option<FamilyParams> {
    let (p, m) = crate::field::prime_power(q as u64)?;
    let even = p == 2 && q >= 4;
    match f {
        Family::Cr1 => (q == 2 && n >= 4 && n.is_power_of_two()).then(|| FamilyParams::ExtHamming { m: n.trailing_zeros() }),
        Family::Cr2 => {
            // n = q * mu with mu a power of p
            let mut mu = n / q as usize;
            if mu == 0 || mu * q as usize != n {
                return None;
            }
            let mut e = 0;
            while mu.is_multiple_of(p as usize) {
                mu /= p as usize;
                e += 1;
            }
            (mu == 1 && e >= 1).then_some(FamilyParams::DmDual { p, l: m, h: e })
        }
        Family::Cr3 => (n >= 3 && n <= q as usize).then_some(FamilyParams::MdsDual { q, n }),
        Family::Cr4 => (even && n == q as usize + 2).then_some(FamilyParams::BoseBush { q }),
        Family::Cr5 => (even && 2 * n == (q * (q - 1)) as usize).then_some(FamilyParams::Delsarte { q }),
        Family::Cr6 => (even && h >= 2 && h <= q / 2 && h.is_power_of_two()).then_some(FamilyParams::Denniston { q, h }),
    }
}

/// Dimension of the two-weight side of a family member.
fn expected_dual_dim(params: &FamilyParams) -> Option<usize> {
    Some(match *params {
        FamilyParams::ExtHamming { m } => m as usize + 1,
        FamilyParams::DmDual { p, l, h } => {
            // q^k = q^2 mu with q = p^l, mu = p^h; needs l | h for a linear code
            if h % l != 0 {
                return None;
            }
            let _ = p;
            2 + (h / l) as usize
        }
        FamilyParams::MdsDual { .. } => 2,
        FamilyParams::BoseBush { .. } | FamilyParams::Delsarte { .. } | FamilyParams::Denniston { .. } => 3,
    })
}

/// Nontriviality of a linear `[n, k, d]` code in the sense used throughout:
/// `2 <= k <= n - 2` and `3 <= d <= n - 1`.
pub fn is_nontrivial(n: usize, k: usize, d: usize) -> bool {
    k >= 2 && k + 2 <= n && d >= 3 && d < n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ia(b: [u64; 2], c: [u64; 2]) -> (Vec<u64>, Vec<u64>) {
        (b.to_vec(), c.to_vec())
    }

    #[test]
    fn formulas_at_known_points() {
        let cases = [
            (Family::Cr1, 2, 8, 0, ia([8, 7], [1, 8])),
            (Family::Cr3, 4, 4, 0, ia([12, 3], [1, 12])),
            (Family::Cr4, 4, 6, 0, ia([18, 15], [1, 6])),
            (Family::Cr4, 8, 10, 0, ia([70, 63], [1, 10])),
            (Family::Cr5, 8, 28, 0, ia([196, 135], [1, 84])),
            (Family::Cr6, 8, 28, 4, ia([196, 135], [1, 84])),
            (Family::Cr6, 8, 10, 2, ia([70, 63], [1, 10])),
            (Family::Cr2, 4, 16, 0, ia([48, 15], [1, 48])),
        ];
        for (f, q, n, h, (b, c)) in cases {
            let got = ia_formula(f, q, n, h).unwrap();
            assert_eq!((got.b, got.c), (b, c), "{f} q={q} n={n}");
        }
    }

    #[test]
    fn display_and_slugs() {
        assert_eq!(Family::Cr4.to_string(), "CR.4");
        assert_eq!(Family::Cr6.slug(), "denniston");
        assert_eq!(
            FamilyParams::Denniston { q: 8, h: 4 }.predicted().unwrap(),
            (8, 28, 24)
        );
    }

    #[test]
    fn matching_lists_overlaps() {
        let sig = CrSignature {
            q: 2,
            n: 8,
            k: 4,
            dual_weights: vec![4, 8],
            ia: Some(ia_formula(Family::Cr1, 2, 8, 0).unwrap()),
        };
        assert_eq!(family_match(&sig), vec![Family::Cr1, Family::Cr2]);

        let sig = CrSignature {
            q: 4,
            n: 6,
            k: 3,
            dual_weights: vec![4, 6],
            ia: Some(ia_formula(Family::Cr4, 4, 6, 0).unwrap()),
        };
        // at q = 4 Delsarte and Denniston with h = 2 share the Bose-Bush parameters
        assert_eq!(family_match(&sig), vec![Family::Cr4, Family::Cr5, Family::Cr6]);

        let no_ia = CrSignature { ia: None, ..sig };
        assert!(family_match(&no_ia).is_empty());
    }
}
