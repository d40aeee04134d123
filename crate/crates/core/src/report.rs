//! The full per-code pipeline behind `crlab report`, and its JSON form (schema 1).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::code::{dual_weight_distribution, is_antipodal_two_weight, weight_distribution_auto, LinearCode, WeightDistribution};
use crate::conditions::{conditions_report, ConditionsReport};
use crate::error::{Error, Result};
use crate::families::{family_match, CrSignature, Family};
use crate::regularity::{syndrome_profile, IntersectionArray, Regularity, SyndromeProfile, Violation};

pub const SCHEMA_VERSION: u32 = 1;

fn exact<S: Serializer>(map: &BTreeMap<usize, BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    // numbers stay exact integers however large
    let as_numbers: BTreeMap<String, serde_json::Number> = map
        .iter()
        .map(|(w, c)| (w.to_string(), c.to_string().parse().expect("decimal integer")))
        .collect();
    as_numbers.serialize(s)
}

/// Which code of the pair `{C, C^perp}` is the antipodal two-weight one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[serde(rename = "self")]
    This,
    Dual,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d: usize,
    #[serde(serialize_with = "exact")]
    pub weight_distribution: BTreeMap<usize, BigUint>,
    pub dual_weights: Vec<usize>,
    pub rho: usize,
    pub external_distance: usize,
    pub packing_radius: usize,
    pub subconstituent_sizes: Vec<u128>,
    pub intersection_array: Option<IntersectionArray>,
    pub completely_regular: bool,
    /// Two cosets at one level with different neighbor counts.
    pub violation: Option<Violation>,
    pub antipodal_dual: bool,
    pub uniformly_packed: bool,
    pub oa_strength: usize,
    /// Families matching the completely regular member of the pair.
    pub family_matches: Vec<Family>,
    /// Antipodal two-weight member of the pair the conditions were evaluated on.
    pub conditions_side: Option<Side>,
    pub conditions: Option<ConditionsReport>,
}

fn weights_of(wd: &WeightDistribution) -> Vec<usize> {
    wd.nonzero_weights()
}

fn regularity_parts(r: Regularity) -> (Option<IntersectionArray>, Option<Violation>) {
    match r {
        Regularity::Regular(ia) => (Some(ia), None),
        Regularity::Irregular(v) => (None, Some(v)),
    }
}

fn conditions_for(tw: &LinearCode, d: usize) -> ConditionsReport {
    let q = tw.q() as u64;
    conditions_report(
        q,
        tw.n() as u64,
        crate::budget::power(tw.q(), tw.k()),
        Some(tw.k() as u32),
        d as u64,
        tw.max_column_multiplicity() as u64,
    )
}

pub fn code_report(code: &LinearCode) -> Result<CodeReport> {
    let (n, k, q) = (code.n(), code.k(), code.q());
    let wd = weight_distribution_auto(code)?;
    let d = wd.min_distance().unwrap_or(0);
    let dual_wd = if k == n {
        WeightDistribution::from_u64(&[1])
    } else {
        dual_weight_distribution(code)?
    };
    let dual_weights = weights_of(&dual_wd);
    let profile = syndrome_profile(code)?;
    let rho = profile.covering_radius();
    let s = dual_weights.len();
    let (ia, violation) = regularity_parts(profile.complete_regularity());
    let antipodal_dual = k < n && is_antipodal_two_weight(&dual_wd, n).antipodal;
    let antipodal_self = is_antipodal_two_weight(&wd, n).antipodal;
    // OA strength of a linear code is one less than the dual distance
    let oa_strength = dual_wd.min_distance().map_or(n, |dd| dd - 1);

    let mut family_matches = Vec::new();
    let mut conditions_side = None;
    let mut conditions = None;
    if antipodal_dual {
        let dual = code.dual()?;
        if ia.is_some() {
            family_matches = family_match(&CrSignature {
                q,
                n,
                k,
                dual_weights: dual_weights.clone(),
                ia: ia.clone(),
            });
        }
        conditions_side = Some(Side::Dual);
        conditions = Some(conditions_for(&dual, dual_weights[0]));
    } else if antipodal_self && k < n {
        // the pair's completely regular member is the dual, checked through our generator
        let dual_profile = SyndromeProfile::from_parity_check(code.generator())?;
        if let Some(dual_ia) = dual_profile.complete_regularity().array() {
            family_matches = family_match(&CrSignature {
                q,
                n,
                k: n - k,
                dual_weights: weights_of(&wd),
                ia: Some(dual_ia.clone()),
            });
        }
        conditions_side = Some(Side::This);
        conditions = Some(conditions_for(code, d));
    }
    Ok(CodeReport {
        schema: SCHEMA_VERSION,
        n,
        k,
        q,
        d,
        weight_distribution: wd.sparse(),
        dual_weights,
        rho,
        external_distance: s,
        packing_radius: d.saturating_sub(1) / 2,
        subconstituent_sizes: profile.subconstituent_sizes(),
        completely_regular: ia.is_some(),
        intersection_array: ia,
        violation,
        antipodal_dual,
        uniformly_packed: rho == s,
        oa_strength,
        family_matches,
        conditions_side,
        conditions,
    })
}

impl CodeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text summary.
    pub fn table(&self) -> String {
        let wd: Vec<String> = self.weight_distribution.iter().map(|(w, c)| format!("{w}:{c}")).collect();
        let mut out = format!("code            [{}, {}, {}]_{}\n", self.n, self.k, self.d, self.q);
        out += &format!("weights         {}\n", wd.join(" "));
        out += &format!("dual weights    {:?}\n", self.dual_weights);
        out += &format!("rho             {}\n", self.rho);
        out += &format!("external dist.  {}\n", self.external_distance);
        out += &format!("packing radius  {}\n", self.packing_radius);
        out += &format!(
            "IA              {}\n",
            self.intersection_array.as_ref().map_or("none (not completely regular)".to_string(), |ia| ia.to_string())
        );
        if let Some(v) = &self.violation {
            out += &format!(
                "violation       level {}: cosets {} and {} have counts {:?} vs {:?}\n",
                v.level, v.first, v.second, v.first_counts, v.second_counts
            );
        }
        out += &format!("antipodal dual  {}\n", self.antipodal_dual);
        out += &format!("uniformly packed {}\n", self.uniformly_packed);
        out += &format!("OA strength     {}\n", self.oa_strength);
        let fams: Vec<String> = self.family_matches.iter().map(Family::to_string).collect();
        out += &format!("families        {}\n", if fams.is_empty() { "-".into() } else { fams.join(", ") });
        if let Some(c) = &self.conditions {
            out += &format!("size bounds     {}\n", if c.thm41.passes() { "pass" } else { "FAIL" });
            let t42 = match &c.thm42 {
                Ok(r) if r.passes() => "pass".to_string(),
                Ok(_) => "FAIL".to_string(),
                Err(e) => format!("n/a ({e})"),
            };
            out += &format!("complement cond. {t42}\n");
        }
        out
    }
}

fn require_key<'a>(obj: &'a serde_json::Map<String, Value>, key: &str) -> std::result::Result<&'a Value, String> {
    obj.get(key).ok_or_else(|| format!("missing key {key:?}"))
}

/// Structural check of a schema-1 report.
pub fn validate_report_json(v: &Value) -> std::result::Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    if require_key(obj, "schema")?.as_u64() != Some(SCHEMA_VERSION as u64) {
        return Err("schema must be 1".into());
    }
    for key in ["n", "k", "q", "d", "rho", "external_distance", "packing_radius", "oa_strength"] {
        require_key(obj, key)?.as_u64().ok_or(format!("{key} must be a non-negative integer"))?;
    }
    for key in ["completely_regular", "antipodal_dual", "uniformly_packed"] {
        require_key(obj, key)?.as_bool().ok_or(format!("{key} must be a boolean"))?;
    }
    let wd = require_key(obj, "weight_distribution")?.as_object().ok_or("weight_distribution must be an object")?;
    for (w, c) in wd {
        w.parse::<usize>().map_err(|_| format!("weight key {w:?} is not an integer"))?;
        if !c.is_u64() && c.to_string().parse::<BigUint>().is_err() {
            return Err(format!("count for weight {w} is not an integer"));
        }
    }
    let ia = require_key(obj, "intersection_array")?;
    if !ia.is_null() {
        for key in ["b", "c", "a"] {
            let arr = ia.get(key).and_then(Value::as_array).ok_or(format!("intersection_array.{key} must be an array"))?;
            if arr.iter().any(|x| !x.is_u64()) {
                return Err(format!("intersection_array.{key} holds a non-integer"));
            }
        }
    }
    if ia.is_null() == require_key(obj, "completely_regular")?.as_bool().unwrap_or(false) {
        return Err("intersection_array must be present exactly when completely_regular".into());
    }
    for key in ["dual_weights", "family_matches", "subconstituent_sizes"] {
        require_key(obj, key)?.as_array().ok_or(format!("{key} must be an array"))?;
    }
    require_key(obj, "conditions")?;
    Ok(())
}

pub fn parse_report(text: &str) -> Result<Value> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    validate_report_json(&v).map_err(Error::Verification)?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cr3_mds_dual, cr4_bose_bush};
    use crate::field::FieldSpec;
    use crate::regularity::oa_strength;

    #[test]
    fn bose_bush_dual_report() {
        let bb = cr4_bose_bush(4).unwrap();
        let r = code_report(&bb.cr_code).unwrap();
        assert_eq!(r.rho, 2);
        assert_eq!(r.intersection_array.as_ref().unwrap().to_string(), "{18, 15; 1, 6}");
        assert!(r.family_matches.contains(&Family::Cr4));
        assert!(r.antipodal_dual && r.uniformly_packed);
        assert_eq!(r.dual_weights, vec![4, 6]);
        assert_eq!(r.conditions_side, Some(Side::Dual));
        let c = r.conditions.as_ref().unwrap();
        assert!(c.thm41.passes());
    }

    #[test]
    fn two_weight_side_reports_the_pair() {
        let mds = cr3_mds_dual(7, 5).unwrap();
        let cr = code_report(&mds.cr_code).unwrap();
        let tw = code_report(&mds.two_weight_code).unwrap();
        assert_eq!(cr.conditions_side, Some(Side::Dual));
        assert_eq!(tw.conditions_side, Some(Side::This));
        assert_eq!(tw.family_matches, cr.family_matches);
        assert!(tw.family_matches.contains(&Family::Cr3));
    }

    #[test]
    fn json_validates_and_is_stable() {
        let bb = cr4_bose_bush(4).unwrap();
        let a = code_report(&bb.cr_code).unwrap().to_json();
        let b = code_report(&bb.cr_code).unwrap().to_json();
        assert_eq!(a, b);
        let v = parse_report(&a).unwrap();
        assert_eq!(v["weight_distribution"]["0"], 1);
        assert_eq!(v["intersection_array"]["b"], serde_json::json!([18, 15]));
    }

    #[test]
    fn oa_strength_agrees_with_enumeration() {
        let bb = cr4_bose_bush(4).unwrap();
        for code in [&bb.two_weight_code, &bb.cr_code] {
            let r = code_report(code).unwrap();
            assert_eq!(r.oa_strength, oa_strength(&code.codeword_matrix().unwrap()));
        }
    }

    #[test]
    fn non_regular_code_has_witness() {
        let f = FieldSpec::new(2, 1).unwrap();
        let c = LinearCode::from_rows(f, &[vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 1]]).unwrap();
        let r = code_report(&c).unwrap();
        assert!(!r.completely_regular);
        assert!(r.violation.is_some());
        assert!(parse_report(&r.to_json()).is_ok());
    }

    #[test]
    fn validator_rejects_broken_reports() {
        let bb = cr4_bose_bush(4).unwrap();
        let mut v: Value = serde_json::from_str(&code_report(&bb.cr_code).unwrap().to_json()).unwrap();
        v["schema"] = 2.into();
        assert!(validate_report_json(&v).is_err());
        v["schema"] = 1.into();
        v.as_object_mut().unwrap().remove("rho");
        assert!(validate_report_json(&v).is_err());
    }
}
