//! Bounds and necessary conditions for two-weight `{d, n}` codes, in exact arithmetic.
//!
//! Every check reports `applicable` and `satisfied` separately: several conditions are
//! gated on a positive denominator or on a precondition, and a vacuous pass should be
//! visible as such.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::prime_power;

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn one() -> BigRational {
    BigRational::one()
}

fn show(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One evaluated condition with its witness values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub applicable: bool,
    pub satisfied: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    fn new(name: &'static str, applicable: bool, satisfied: bool, lhs: &BigRational, rhs: &BigRational) -> Self {
        Check {
            name,
            applicable,
            satisfied: applicable && satisfied,
            lhs: show(lhs),
            rhs: show(rhs),
        }
    }

    fn inapplicable(name: &'static str) -> Self {
        Check {
            name,
            applicable: false,
            satisfied: false,
            lhs: String::new(),
            rhs: String::new(),
        }
    }

    /// Applicable and not satisfied.
    pub fn failed(&self) -> bool {
        self.applicable && !self.satisfied
    }
}

fn ratio_if_positive(num: BigRational, den: BigRational) -> Option<BigRational> {
    den.is_positive().then(|| num / den)
}

/// Plotkin: `N <= qd / (qd - (q-1)n)` when the denominator is positive.
pub fn plotkin(n: u64, d: u64, q: u64) -> Option<BigRational> {
    let (n, d, q) = (int(n), int(d), int(q));
    ratio_if_positive(&q * &d, &q * &d - (&q - one()) * n)
}

/// Gray-Rankin analog, a bound on `N / q`:
/// `q (qd - (q-2)n)(n-d) / (n - ((q-1)n - qd)^2)` when the denominator is positive.
pub fn gray_rankin(n: u64, d: u64, q: u64) -> Option<BigRational> {
    let (n, d, q) = (int(n), int(d), int(q));
    let t = (&q - one()) * &n - &q * &d;
    let den = &n - &t * &t;
    ratio_if_positive(&q * (&q * &d - (&q - int(2)) * &n) * (&n - &d), den)
}

/// Bound for codes with maximal distance n: `N <= q^2 d / (dq - (q-1)(n-1))` when the
/// denominator is positive.
pub fn max_distance_bound(n: u64, d: u64, q: u64) -> Option<BigRational> {
    let (n, d, q) = (int(n), int(d), int(q));
    ratio_if_positive(&q * &q * &d, &d * &q - (&q - one()) * (n - one()))
}

/// Cardinality bounds and the identities that hold at their extremes for a
/// two-weight `(n, N, {d, n})_q` code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm41Report {
    /// `max{(q-1)n + 1, q^2} <= N`.
    pub left: Check,
    /// `N <= q^2 d / (qd - (q-1)(n-1))`.
    pub right: Check,
    pub left_equality: bool,
    pub right_equality: bool,
    /// At right equality: `n = (N(q(d+1)-1) - q^2 d) / (N(q-1))`.
    pub length_identity: Check,
    /// At right equality: `d = (n-1)(q-1)N / (q(N-q))`.
    pub distance_identity: Check,
    /// At left equality: Latin-square parameters `d = n - 1`, `N = q^2`, `n <= q`, or an
    /// equidistant code.
    pub left_equality_kind: Option<String>,
    /// `N | q^2 d`.
    pub n_divides_q2d: Check,
    /// `(q - 1) | (N - 1) d`.
    pub q1_divides: Check,
}

impl Thm41Report {
    pub fn checks(&self) -> [&Check; 6] {
        [
            &self.left,
            &self.right,
            &self.length_identity,
            &self.distance_identity,
            &self.n_divides_q2d,
            &self.q1_divides,
        ]
    }

    /// No applicable check failed.
    pub fn passes(&self) -> bool {
        self.checks().iter().all(|c| !c.failed())
    }
}

pub fn thm41_check(n: u64, big_n: u128, d: u64, q: u64) -> Thm41Report {
    let (rn, rd, rq, rbig) = (int(n), int(d), int(q), int(big_n));
    let lower = int(((q - 1) * n + 1).max(q * q));
    let left = Check::new("cardinality lower bound", true, lower <= rbig, &lower, &rbig);
    let left_equality = lower == rbig;
    let (right, right_equality) = match max_distance_bound(n, d, q) {
        Some(upper) => (Check::new("cardinality upper bound", true, rbig <= upper, &rbig, &upper), rbig == upper),
        None => (Check::inapplicable("cardinality upper bound"), false),
    };
    let (length_identity, distance_identity) = if right_equality {
        let n_formula = (&rbig * (&rq * (&rd + one()) - one()) - &rq * &rq * &rd) / (&rbig * (&rq - one()));
        let d_formula = (&rn - one()) * (&rq - one()) * &rbig / (&rq * (&rbig - &rq));
        (
            Check::new("length from cardinality", true, n_formula == rn, &n_formula, &rn),
            Check::new("distance from length", true, d_formula == rd, &d_formula, &rd),
        )
    } else {
        (Check::inapplicable("length from cardinality"), Check::inapplicable("distance from length"))
    };
    let left_equality_kind = left_equality.then(|| {
        if d + 1 == n && big_n == (q * q) as u128 && n <= q {
            "latin-square".to_string()
        } else {
            "equidistant".to_string()
        }
    });
    let q2d = &rq * &rq * &rd;
    let n_divides_q2d = Check::new("N divides q^2 d", true, (&q2d / &rbig).is_integer(), &rbig, &q2d);
    let prod = (&rbig - one()) * &rd;
    let q1_divides = Check::new("q - 1 divides (N - 1) d", true, (&prod / (&rq - one())).is_integer(), &(&rq - one()), &prod);
    Thm41Report {
        left,
        right,
        left_equality,
        right_equality,
        length_identity,
        distance_identity,
        left_equality_kind,
        n_divides_q2d,
        q1_divides,
    }
}

fn valuation(mut a: u128, p: u128) -> u32 {
    let mut v = 0;
    while a > 0 && a.is_multiple_of(p) {
        a /= p;
        v += 1;
    }
    v
}

/// Divisibility relations between a linear `[n, k, {d, n}]_q` code and its complement
/// for multiplicity `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm42Report {
    pub delta: u64,
    pub d_c: u64,
    pub n_c: u64,
    /// `(q, d)`, `(q, delta)`, `(q, d_c)`.
    pub gcds: [u64; 3],
    /// `gamma_d`, `gamma_delta`, `gamma_c`.
    pub valuations: [u32; 3],
    /// `(q, d) = (q, delta)` and `(q, d_c) = (q, delta)`.
    pub gcd_equalities: [bool; 2],
    /// `gamma_d = gamma_delta` and `gamma_c = gamma_delta`.
    pub valuation_equalities: [bool; 2],
    /// s = 1, k >= 4: both gcd equalities.
    pub clause_i: Check,
    /// s = 1, k = 3, gated: both gcd equalities.
    pub clause_ii: Check,
    /// s = 1, k >= 2: one of the valuation equalities.
    pub clause_iii: Check,
    /// s >= 1, k >= 3: one of the valuation equalities.
    pub clause_iv: Check,
    /// s >= 1, k >= 3: one of the gcd equalities.
    pub clause_iv_gcd: Check,
}

impl Thm42Report {
    pub fn checks(&self) -> [&Check; 5] {
        [&self.clause_i, &self.clause_ii, &self.clause_iii, &self.clause_iv, &self.clause_iv_gcd]
    }

    pub fn passes(&self) -> bool {
        self.checks().iter().all(|c| !c.failed())
    }

    pub fn some_valuation_equality(&self) -> bool {
        self.valuation_equalities.iter().any(|&b| b)
    }
}

fn flag(b: bool) -> BigRational {
    if b {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

/// Evaluates the clauses for `[n, k, {d, n}]_q` with complement multiplicity `s`; fails
/// when `d_c = s q^(k-1) - n` is not positive (the code has no proper complement).
pub fn thm42_check(n: u64, k: u32, d: u64, q: u64, s: u64) -> Result<Thm42Report> {
    let (p, _) = prime_power(q).ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))?;
    if d >= n || k < 2 || s == 0 {
        return Err(Error::InvalidParameters("needs 0 < d < n, k >= 2 and s >= 1".into()));
    }
    let delta = n - d;
    let qk1 = (q as u128).pow(k - 1);
    let d_c = (s as u128 * qk1).checked_sub(n as u128).filter(|&x| x > 0).ok_or_else(|| {
        Error::Inconsistent(format!("d_c = s q^(k-1) - n = {} - {n} is not positive", s as u128 * qk1))
    })?;
    let n_c = s as u128 * (qk1 * q as u128 - 1) / (q as u128 - 1) - n as u128;
    let q128 = q as u128;
    let g = |a: u128| a.gcd(&q128);
    let gcds = [g(d as u128), g(delta as u128), g(d_c)];
    let p = p as u128;
    let valuations = [valuation(d as u128, p), valuation(delta as u128, p), valuation(d_c, p)];
    let gcd_equalities = [gcds[0] == gcds[1], gcds[2] == gcds[1]];
    let valuation_equalities = [valuations[0] == valuations[1], valuations[2] == valuations[1]];
    let both = gcd_equalities[0] && gcd_equalities[1];
    let one_val = valuation_equalities[0] || valuation_equalities[1];
    let n128 = n as u128;
    let gate_a = {
        let l = g(d as u128).pow(2);
        let r = q128 * (n128 * (n128 - 1)).gcd(&q128);
        (l <= r, l, r)
    };
    let gate_b = {
        let l = g(n128).pow(2);
        let r = q128 * (n_c * n_c.saturating_sub(1)).gcd(&q128);
        (l > r, l, r)
    };
    let gate = gate_a.0 || gate_b.0;
    let clause_ii = if s == 1 && k == 3 && gate {
        Check::new("clause (ii): both gcd equalities", true, both, &flag(gcd_equalities[0]), &flag(gcd_equalities[1]))
    } else {
        Check::inapplicable("clause (ii): both gcd equalities")
    };
    Ok(Thm42Report {
        delta,
        d_c: d_c as u64,
        n_c: n_c as u64,
        gcds: gcds.map(|x| x as u64),
        valuations,
        gcd_equalities,
        valuation_equalities,
        clause_i: Check::new(
            "clause (i): both gcd equalities",
            s == 1 && k >= 4,
            both,
            &flag(gcd_equalities[0]),
            &flag(gcd_equalities[1]),
        ),
        clause_ii,
        clause_iii: Check::new(
            "clause (iii): one valuation equality",
            s == 1 && k >= 2,
            one_val,
            &flag(valuation_equalities[0]),
            &flag(valuation_equalities[1]),
        ),
        clause_iv: Check::new(
            "clause (iv): one valuation equality",
            k >= 3,
            one_val,
            &flag(valuation_equalities[0]),
            &flag(valuation_equalities[1]),
        ),
        clause_iv_gcd: Check::new(
            "clause (iv): one gcd equality",
            k >= 3,
            gcd_equalities[0] || gcd_equalities[1],
            &flag(gcd_equalities[0]),
            &flag(gcd_equalities[1]),
        ),
    })
}

/// `(u, h)` with `n - w = p^u` and `w = h p^u`; `None` when `n - w` is not a power of p
/// dividing `w`.
pub fn lemma40_decompose(n: u64, w: u64, q: u64) -> Option<(u32, u64)> {
    let (p, _) = prime_power(q)?;
    let delta = n.checked_sub(w).filter(|&x| x > 0)?;
    let u = valuation(delta as u128, p as u128);
    if (p as u64).pow(u) != delta || !w.is_multiple_of(delta) {
        return None;
    }
    Some((u, w / delta))
}

/// Solution of the two moment equations for the counts of weight-w and weight-n words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum WeightCounts {
    Integral { mu1: u128, mu2: u128, degenerate: bool },
    NonIntegral { mu1: String, mu2: String },
}

/// Solves `w mu1 + n mu2 = n(q-1)q^(k-1)` and
/// `w^2 mu1 + n^2 mu2 = n(q-1)(n(q-1)+1)q^(k-2)` exactly.
pub fn lemma42_mu(n: u64, k: u32, q: u64, w: u64) -> Result<WeightCounts> {
    if w >= n || w == 0 {
        return Err(Error::InvalidParameters(format!("needs 0 < w < n, got w = {w}, n = {n}")));
    }
    let (rn, rw, rq) = (int(n), int(w), int(q));
    let qpow = |e: i64| -> BigRational {
        if e >= 0 {
            int(BigInt::from(q).pow(e as u32))
        } else {
            BigRational::one() / int(BigInt::from(q).pow((-e) as u32))
        }
    };
    let a = &rn * (&rq - one()) * qpow(k as i64 - 1);
    let b = &rn * (&rq - one()) * (&rn * (&rq - one()) + one()) * qpow(k as i64 - 2);
    let det = &rw * &rn * (&rn - &rw);
    let mu1 = (&a * &rn * &rn - &rn * &b) / &det;
    let mu2 = (&rw * &b - &rw * &rw * &a) / &det;
    let nonneg_int = |r: &BigRational| r.is_integer() && !r.is_negative();
    Ok(if nonneg_int(&mu1) && nonneg_int(&mu2) {
        let (m1, m2) = (mu1.to_integer().to_u128().unwrap_or(u128::MAX), mu2.to_integer().to_u128().unwrap_or(u128::MAX));
        WeightCounts::Integral {
            mu1: m1,
            mu2: m2,
            degenerate: m1 == 0 || m2 == 0,
        }
    } else {
        WeightCounts::NonIntegral {
            mu1: show(&mu1),
            mu2: show(&mu2),
        }
    })
}

/// Everything above evaluated for one two-weight code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsReport {
    pub q: u64,
    pub n: u64,
    pub size: u128,
    pub k: Option<u32>,
    pub d: u64,
    pub delta: u64,
    pub s: u64,
    pub plotkin: Option<String>,
    pub gray_rankin: Option<String>,
    pub max_distance: Option<String>,
    pub thm41: Thm41Report,
    /// `Err` text when the complement is empty (difference matrix type codes).
    pub thm42: std::result::Result<Thm42Report, String>,
    pub lemma40: Option<(u32, u64)>,
    pub lemma42: Option<WeightCounts>,
}

/// Evaluates every condition for a `{d, n}` code of size `size`; `k` is the dimension
/// when the code is linear and `s` the maximal column multiplicity.
pub fn conditions_report(q: u64, n: u64, size: u128, k: Option<u32>, d: u64, s: u64) -> ConditionsReport {
    let thm42 = match k {
        Some(k) => thm42_check(n, k, d, q, s).map_err(|e| e.to_string()),
        None => Err("needs a linear code".into()),
    };
    ConditionsReport {
        q,
        n,
        size,
        k,
        d,
        delta: n.saturating_sub(d),
        s,
        plotkin: plotkin(n, d, q).as_ref().map(show),
        gray_rankin: gray_rankin(n, d, q).as_ref().map(show),
        max_distance: max_distance_bound(n, d, q).as_ref().map(show),
        thm41: thm41_check(n, size, d, q),
        thm42,
        lemma40: if s == 1 { lemma40_decompose(n, d, q) } else { None },
        lemma42: match k {
            Some(k) if s == 1 && d < n => lemma42_mu(n, k, q, d).ok(),
            _ => None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> BigRational {
        int(x)
    }

    #[test]
    fn plotkin_values() {
        assert_eq!(plotkin(3, 2, 2), Some(r(4)));
        assert_eq!(plotkin(4, 2, 2), None);
        assert_eq!(plotkin(5, 4, 4), Some(r(16)));
    }

    #[test]
    fn gray_rankin_values() {
        assert_eq!(gray_rankin(8, 4, 2), Some(r(8)));
        assert_eq!(gray_rankin(8, 6, 4), Some(r(8)));
        // ((q-1)n - qd)^2 = 9 > n = 4
        assert_eq!(gray_rankin(4, 0, 2), None);
    }

    #[test]
    fn max_distance_values() {
        assert_eq!(max_distance_bound(6, 4, 4), Some(r(64)));
        assert_eq!(max_distance_bound(28, 24, 8), Some(r(512)));
        assert_eq!(max_distance_bound(10, 2, 2), None);
    }

    #[test]
    fn thm41_bose_bush() {
        let rep = thm41_check(6, 64, 4, 4);
        assert!(rep.right_equality && !rep.left_equality);
        assert!(rep.length_identity.satisfied && rep.distance_identity.satisfied);
        assert!(rep.n_divides_q2d.satisfied && rep.q1_divides.satisfied);
        assert!(rep.passes());
    }

    #[test]
    fn thm41_latin_square_and_denniston() {
        let rep = thm41_check(4, 16, 3, 4);
        assert!(rep.left_equality);
        assert_eq!(rep.left_equality_kind.as_deref(), Some("latin-square"));
        let rep = thm41_check(28, 512, 24, 8);
        assert!(rep.right_equality && rep.passes());
    }

    #[test]
    fn thm42_denniston_and_bose_bush() {
        let rep = thm42_check(28, 3, 24, 8, 1).unwrap();
        assert_eq!(rep.valuations, [3, 2, 2]);
        assert_eq!(rep.d_c, 36);
        assert!(rep.valuation_equalities[1]);
        assert!(!rep.clause_ii.applicable);
        assert!(rep.clause_iii.satisfied && rep.passes());

        let rep = thm42_check(10, 3, 8, 8, 1).unwrap();
        assert_eq!((rep.d_c, rep.valuations), (54, [3, 1, 1]));
        assert!(rep.clause_iii.satisfied);
    }

    #[test]
    fn thm42_rejects_empty_complement() {
        // the [16,3]_4 difference matrix code: s q^(k-1) = n
        assert!(matches!(thm42_check(16, 3, 12, 4, 1), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn lemma40_cases() {
        assert_eq!(lemma40_decompose(6, 4, 4), Some((1, 2)));
        assert_eq!(lemma40_decompose(28, 24, 8), Some((2, 6)));
        assert_eq!(lemma40_decompose(7, 4, 2), None);
    }

    #[test]
    fn lemma42_cases() {
        let int = |mu1, mu2, degenerate| WeightCounts::Integral { mu1, mu2, degenerate };
        assert_eq!(lemma42_mu(6, 3, 4, 4).unwrap(), int(45, 18, false));
        assert_eq!(lemma42_mu(8, 4, 2, 4).unwrap(), int(14, 1, false));
        assert_eq!(lemma42_mu(7, 3, 2, 4).unwrap(), int(7, 0, true));
        assert!(lemma42_mu(6, 3, 4, 6).is_err());
        assert!(matches!(lemma42_mu(7, 3, 2, 5).unwrap(), WeightCounts::NonIntegral { .. }));
    }
}
