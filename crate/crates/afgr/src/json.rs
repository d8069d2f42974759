//! JSON schema for the CLI and the golden-example runner.
//!
//! Conventions: coweights are integer arrays; affine Weyl group elements
//! are `{"trans": [...], "perm": [...]}` with 1-based permutation images
//! plus an optional reduced word; moment points are arrays of exact
//! rationals `{"num": .., "den": ..}`; polytopes are arrays of points;
//! dimension results are `{"value": int|null, "empty": bool,
//! "equidimensional": bool, "kind": ..}`.

use num_traits::Signed;
use serde::Serialize;

use crate::degeneration::{
    AdmissibleSet, Bound, Component, LimitReport, P1Limit, Sl2IwahoriLimit, Sl2MvLimit,
};
use crate::dims::{DimKind, DimResult, DimValue};
use crate::polytope::{Polytope, RegularityReport};
use crate::weyl::{AffineRoot, AffineWeylElt, Coweight, MomentPoint, Rat};
use crate::{Error, Result};

#[derive(Serialize, Clone, Debug)]
pub struct RatJson {
    pub num: i64,
    pub den: i64,
}

fn big_to_i64(v: &num_bigint::BigInt) -> Result<i64> {
    i64::try_from(v.clone()).map_err(|_| Error::Unsupported("rational exceeds i64 range".into()))
}

pub fn rat_json(r: &Rat) -> Result<RatJson> {
    // normalize sign into the numerator
    let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    Ok(RatJson {
        num: big_to_i64(&num)?,
        den: big_to_i64(&den)?,
    })
}

pub fn coweight_json(c: &Coweight) -> Vec<i64> {
    c.coords().to_vec()
}

pub fn point_json(p: &MomentPoint) -> Result<Vec<RatJson>> {
    p.coords().iter().map(rat_json).collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct AffineWeylEltJson {
    pub trans: Vec<i64>,
    pub perm: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
}

pub fn elt_json(x: &AffineWeylElt, with_word: bool) -> AffineWeylEltJson {
    AffineWeylEltJson {
        trans: x.trans().coords().to_vec(),
        perm: x.fin().images(),
        // extended (GL-mode) elements have no word in the generators
        word: if with_word { x.try_reduced_word() } else { None },
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct AffineRootJson {
    pub root: [usize; 2],
    pub level: i64,
}

pub fn affine_root_json(g: &AffineRoot) -> AffineRootJson {
    let (i, j) = g.root.indices();
    AffineRootJson {
        root: [i, j],
        level: g.level,
    }
}

pub fn polytope_json(p: &Polytope) -> Result<Vec<Vec<RatJson>>> {
    p.vertices().iter().map(point_json).collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct DimResultJson {
    pub value: Option<i64>,
    pub empty: bool,
    pub equidimensional: bool,
    pub kind: &'static str,
}

pub fn dim_result_json(r: &DimResult) -> DimResultJson {
    DimResultJson {
        value: match r.value {
            DimValue::Empty => None,
            DimValue::Dim(d) => Some(d),
        },
        empty: r.is_empty(),
        equidimensional: r.equidimensional,
        kind: match r.kind {
            DimKind::GrIntersection => "gr_intersection",
            DimKind::FlIntersectionBound => "fl_intersection_upper_bound",
        },
    }
}

#[derive(Serialize, Clone, Debug)]
#[serde(untagged)]
pub enum BoundJson {
    Finite {
        finite: u64,
    },
    CapExceeded {
        cap_exceeded: CapJson,
    },
}

#[derive(Serialize, Clone, Debug)]
pub struct CapJson {
    pub partial: u64,
    pub examined: u64,
}

pub fn bound_json(b: &Bound) -> BoundJson {
    match b {
        Bound::Finite(v) => BoundJson::Finite { finite: *v },
        Bound::CapExceeded { partial, examined } => BoundJson::CapExceeded {
            cap_exceeded: CapJson {
                partial: *partial,
                examined: *examined,
            },
        },
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ComponentJson {
    pub anchor: AffineWeylEltJson,
    pub polytope: Vec<Vec<RatJson>>,
}

pub fn component_json(c: &Component) -> Result<ComponentJson> {
    Ok(ComponentJson {
        anchor: elt_json(&c.anchor, true),
        polytope: polytope_json(&c.polytope)?,
    })
}

#[derive(Serialize, Clone, Debug)]
pub struct LimitReportJson {
    pub polytope: Vec<Vec<RatJson>>,
    pub lower_bound: u64,
    pub upper_bound: BoundJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentJson>>,
}

pub fn limit_report_json(r: &LimitReport) -> Result<LimitReportJson> {
    Ok(LimitReportJson {
        polytope: polytope_json(&r.polytope)?,
        lower_bound: r.lower_bound,
        upper_bound: bound_json(&r.upper_bound),
        components: match &r.components {
            None => None,
            Some(cs) => Some(cs.iter().map(component_json).collect::<Result<_>>()?),
        },
    })
}

#[derive(Serialize, Clone, Debug)]
pub struct P1LimitJson {
    pub fixed_points: Vec<AffineWeylEltJson>,
    pub edges: Vec<[AffineWeylEltJson; 2]>,
}

pub fn p1_limit_json(l: &P1Limit) -> P1LimitJson {
    P1LimitJson {
        fixed_points: l.fixed_points.iter().map(|x| elt_json(x, false)).collect(),
        edges: l
            .edges
            .iter()
            .map(|(a, b)| [elt_json(a, false), elt_json(b, false)])
            .collect(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct AdmissibleSetJson {
    pub elements: Vec<AffineWeylEltJson>,
    pub maximal: Vec<AffineWeylEltJson>,
}

pub fn admissible_set_json(a: &AdmissibleSet) -> AdmissibleSetJson {
    AdmissibleSetJson {
        elements: a.elements.iter().map(|x| elt_json(x, true)).collect(),
        maximal: a.maximal.iter().map(|x| elt_json(x, true)).collect(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Sl2MvLimitJson {
    pub dim: u64,
    pub fixed_point_count: u64,
    pub cells_by_dim: Vec<[u64; 2]>,
    pub components: Vec<AffineWeylEltJson>,
}

pub fn sl2_mv_limit_json(l: &Sl2MvLimit) -> Sl2MvLimitJson {
    Sl2MvLimitJson {
        dim: l.dim,
        fixed_point_count: l.fixed_point_count,
        cells_by_dim: l.cells_by_dim.iter().map(|&(k, c)| [k, c]).collect(),
        components: l.components.iter().map(|x| elt_json(x, true)).collect(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Sl2IwahoriLimitJson {
    pub dim: u64,
    pub translation_anchor: AffineWeylEltJson,
    pub orbit_anchor: AffineWeylEltJson,
    pub orbit_word: Vec<usize>,
}

pub fn sl2_iwahori_limit_json(l: &Sl2IwahoriLimit) -> Sl2IwahoriLimitJson {
    Sl2IwahoriLimitJson {
        dim: l.dim,
        translation_anchor: elt_json(&l.translation_anchor, true),
        orbit_anchor: elt_json(&l.orbit_anchor, false),
        orbit_word: l.orbit_word.clone(),
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct RegularityJson {
    pub regular: bool,
    pub margin: RatJson,
    pub heights: Vec<HeightJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infeasibility_certificate: Option<Vec<RatJson>>,
    pub witness_checked: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct HeightJson {
    pub point: Vec<RatJson>,
    pub height: RatJson,
}

pub fn regularity_json(r: &RegularityReport) -> Result<RegularityJson> {
    Ok(RegularityJson {
        regular: r.regular,
        margin: rat_json(&r.margin)?,
        heights: r
            .heights
            .iter()
            .map(|(p, h)| {
                Ok(HeightJson {
                    point: point_json(p)?,
                    height: rat_json(h)?,
                })
            })
            .collect::<Result<_>>()?,
        infeasibility_certificate: match &r.infeasibility_certificate {
            None => None,
            Some(ys) => Some(ys.iter().map(rat_json).collect::<Result<_>>()?),
        },
        witness_checked: r.witness_checked,
    })
}

/// Serializes any of the schema values to a compact JSON string.
pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("schema types serialize infallibly")
}

/// Pretty JSON used by the CLI when a human is watching.
pub fn to_string_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("schema types serialize infallibly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::rat;

    #[test]
    fn elt_roundtrip_shape() {
        let x = AffineWeylElt::from_word(2, &[0, 1]).unwrap();
        let json = to_string(&elt_json(&x, true));
        assert_eq!(json, r#"{"trans":[1,-1],"perm":[1,2],"word":[0,1]}"#);
    }

    #[test]
    fn rat_normalizes_sign() {
        let r = rat_json(&rat(1, -4)).unwrap();
        assert_eq!((r.num, r.den), (-1, 4));
    }

    #[test]
    fn reserializing_is_idempotent() {
        // parse ∘ serialize is idempotent: one normalization pass at most
        let p = crate::polytope::mv_polytope_sl3(0, 0, 1, 1).unwrap();
        let json = to_string(&polytope_json(&p).unwrap());
        let once: serde_json::Value = serde_json::from_str(&json).unwrap();
        let json_once = serde_json::to_string(&once).unwrap();
        let twice: serde_json::Value = serde_json::from_str(&json_once).unwrap();
        assert_eq!(serde_json::to_string(&twice).unwrap(), json_once);
        // and parsing back into a Value loses nothing
        assert_eq!(once, twice);
    }
}
