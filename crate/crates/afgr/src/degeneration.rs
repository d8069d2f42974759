//! Special-fibre limit rules of the central degeneration `Gr × G/B ⇝ Fl`:
//! fixed points, extended-torus-invariant P¹s, products of root-subgroup
//! orbits, semi-infinite orbits, admissible sets, and component bounds.

use crate::dims::height;
use crate::orders::semiinf_leq_lattice;
use crate::polytope::Polytope;
use crate::weyl::{
    bruhat_lower_interval, AffineRoot, AffineWeylElt, Coweight, FiniteWeylElt, MomentPoint, Root,
};
use crate::{Error, Result};

pub mod bounds;
pub use bounds::{component_upper_bound, Bound};

/// The limit of the `Gr` fixed point `t^β` is the `Fl` fixed point `(β, e)`.
pub fn degenerate_fixed_point(beta: &Coweight) -> AffineWeylElt {
    AffineWeylElt::translation(beta.clone())
}

/// Limit of an extended-torus-invariant P¹: two P¹s meeting at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Limit {
    /// `[(β₁, e), (β₁, s_{α₀}), (β₂, e)]`; the middle point is the node.
    pub fixed_points: [AffineWeylElt; 3],
    pub edges: [(AffineWeylElt, AffineWeylElt); 2],
}

/// Degenerates the P¹ joining `t^{β₁}` and `t^{β₂}`, where
/// `β₁ − β₂ = m·α₀∨` for a positive root `α₀` and `m ≥ 1`.
pub fn degenerate_p1(beta1: &Coweight, beta2: &Coweight) -> Result<P1Limit> {
    beta1.check_rank(beta2)?;
    let diff = beta1.sub(beta2);
    let root = positive_coroot_direction(&diff).ok_or(Error::NotCorootMultiple)?;
    let rank = beta1.rank();
    let node = AffineWeylElt::new(beta1.clone(), FiniteWeylElt::reflection(rank, &root))?;
    let top = degenerate_fixed_point(beta1);
    let bottom = degenerate_fixed_point(beta2);
    Ok(P1Limit {
        fixed_points: [top.clone(), node.clone(), bottom.clone()],
        edges: [(top, node.clone()), (node, bottom)],
    })
}

/// The positive root `α₀` with `v = m·α₀∨`, `m ≥ 1`, if there is one.
fn positive_coroot_direction(v: &Coweight) -> Option<Root> {
    let mut pos = None;
    let mut neg = None;
    for (k, &c) in v.coords().iter().enumerate() {
        if c > 0 {
            if pos.is_some() {
                return None;
            }
            pos = Some((k + 1, c));
        } else if c < 0 {
            if neg.is_some() {
                return None;
            }
            neg = Some((k + 1, c));
        }
    }
    let ((i, a), (j, b)) = (pos?, neg?);
    if a != -b || i >= j {
        return None;
    }
    Some(Root::new(v.rank(), i, j).unwrap())
}

/// The `α′` rule for root subgroups: `U_α` survives unchanged when the
/// ordinary part is positive; the level is raised by one when it is
/// negative.
pub fn degenerate_root_subgroup(gamma: &AffineRoot) -> AffineRoot {
    if gamma.root.is_positive() {
        *gamma
    } else {
        AffineRoot::new(gamma.root, gamma.level + 1)
    }
}

/// The distinguished component of the limit of `∏ U_{αᵢ}·t^μ`: the product
/// of the degenerated root subgroups through `(μ, e)`.
pub fn degenerate_product_orbit(
    mu: &Coweight,
    gammas: &[AffineRoot],
) -> Result<(AffineWeylElt, Vec<AffineRoot>)> {
    for (a, gamma) in gammas.iter().enumerate() {
        if gammas[a + 1..].contains(gamma) {
            return Err(Error::DuplicateRoot);
        }
    }
    Ok((
        degenerate_fixed_point(mu),
        gammas.iter().map(degenerate_root_subgroup).collect(),
    ))
}

/// The limit of the closed `U_w` orbit `S_w^μ` is the closed `U_w` orbit
/// anchored at `(μ, e)` in `Fl`.
pub fn degenerate_semiinfinite(_w: &FiniteWeylElt, mu: &Coweight) -> AffineWeylElt {
    degenerate_fixed_point(mu)
}

/// Membership of `y` in the closure of the limit `S_w^{(μ, e)}`.
pub fn semiinfinite_limit_contains(
    w: &FiniteWeylElt,
    mu: &Coweight,
    y: &AffineWeylElt,
) -> Result<bool> {
    semiinf_leq_lattice(y, &degenerate_semiinfinite(w, mu), w)
}

/// The λ-admissible set and its maximal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    pub elements: Vec<AffineWeylElt>,
    pub maximal: Vec<AffineWeylElt>,
}

/// `{x ∈ W_aff : x ≤ t_{wλ} for some w ∈ W}` for dominant `λ`, with the
/// maximal elements (the distinct translations `t_{wλ}`).
pub fn admissible_set(lambda: &Coweight) -> Result<AdmissibleSet> {
    lambda.check_sum_zero()?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    let rank = lambda.rank();
    let mut maximal: Vec<AffineWeylElt> = Vec::new();
    for w in FiniteWeylElt::all(rank) {
        let t = AffineWeylElt::translation(w.apply_coweight(lambda));
        if !maximal.contains(&t) {
            maximal.push(t);
        }
    }
    maximal.sort_by_cached_key(AffineWeylElt::sort_key);
    let mut elements: Vec<AffineWeylElt> = Vec::new();
    for t in &maximal {
        for z in bruhat_lower_interval(t) {
            if !elements.contains(&z) {
                elements.push(z);
            }
        }
    }
    elements.sort_by_cached_key(AffineWeylElt::sort_key);
    Ok(AdmissibleSet { elements, maximal })
}

/// An irreducible component of a special-fibre limit, described by its
/// anchor fixed point and its moment polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub anchor: AffineWeylElt,
    pub polytope: Polytope,
}

/// Bounds (and known components, when available) for the number of
/// irreducible components of a special-fibre limit.
#[derive(Clone, Debug)]
pub struct LimitReport {
    pub polytope: Polytope,
    pub lower_bound: u64,
    pub upper_bound: Bound,
    pub components: Option<Vec<Component>>,
}

/// Moment polytope of the closed Iwahori orbit `I^x ⊆ Fl`: the hull of the
/// moment images of `{z : z ≤ x}`.
pub fn iwahori_orbit_polytope_fl(x: &AffineWeylElt) -> Polytope {
    let pts: Vec<MomentPoint> = bruhat_lower_interval(x)
        .iter()
        .map(AffineWeylElt::moment_image)
        .collect();
    Polytope::convex_hull(&pts).expect("nonempty interval")
}

/// The limit of the `G(O)` orbit `Gr^λ`: one closed Iwahori orbit per
/// maximal λ-admissible element, so exactly `|W/W_λ|` components.
pub fn go_orbit_limit(lambda: &Coweight) -> Result<LimitReport> {
    let adm = admissible_set(lambda)?;
    let components: Vec<Component> = adm
        .maximal
        .iter()
        .map(|anchor| Component {
            anchor: anchor.clone(),
            polytope: iwahori_orbit_polytope_fl(anchor),
        })
        .collect();
    let orbit_points: Vec<Coweight> = adm
        .maximal
        .iter()
        .map(|t| t.trans().clone())
        .collect();
    let polytope = limit_polytope(&Polytope::from_coweights(&orbit_points)?)?;
    let n = components.len() as u64;
    Ok(LimitReport {
        polytope,
        lower_bound: n,
        upper_bound: Bound::Finite(n),
        components: Some(components),
    })
}

/// Moment polytope of the special-fibre limit: the hull of
/// `Φ((μᵢ, e))` over the (lattice) vertices `μᵢ`; a translate of the input
/// by the alcove barycenter (flatness).
pub fn limit_polytope(p: &Polytope) -> Result<Polytope> {
    let mut pts = Vec::with_capacity(p.num_vertices());
    for v in p.vertices() {
        let Some(cw) = v.as_coweight() else {
            return Err(Error::NotLatticePoint(format!("{:?}", v)));
        };
        pts.push(degenerate_fixed_point(&cw).moment_image());
    }
    Polytope::convex_hull(&pts)
}

/// Lower bound for the number of irreducible components of the limit: the
/// number of vertices of the general-fibre moment polytope.
pub fn component_lower_bound(p: &Polytope) -> Result<u64> {
    for v in p.vertices() {
        if v.as_coweight().is_none() {
            return Err(Error::NotLatticePoint(format!("{:?}", v)));
        }
    }
    Ok(p.num_vertices() as u64)
}

/// Stratification of the limit of an SL2 MV cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2MvLimit {
    /// Dimension `d = height(μ + λ)` of the general fibre.
    pub dim: u64,
    /// `2d + 1` fixed points.
    pub fixed_point_count: u64,
    /// `(k, 2(d − k))` open generalized MV cycles for `1 ≤ k < d`.
    pub cells_by_dim: Vec<(u64, u64)>,
    /// Anchors of the two `d`-dimensional components: `(−λ, e)` and
    /// `(μ, e)`. Empty when `d = 0`.
    pub components: Vec<AffineWeylElt>,
}

/// Limit structure of the SL2 MV cycle `closure(S_e^{−λ} ∩ S_{w₀}^{μ})`
/// for dominant `λ`.
pub fn sl2_mv_limit(lambda: &Coweight, mu: &Coweight) -> Result<Sl2MvLimit> {
    if lambda.rank() != 2 || mu.rank() != 2 {
        return Err(Error::RankUnsupported {
            rank: lambda.rank().max(mu.rank()),
            limit: 2,
        });
    }
    lambda.check_sum_zero()?;
    mu.check_sum_zero()?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    let chain_ok = crate::orders::dominance_leq(&lambda.neg(), mu)?
        && crate::orders::dominance_leq(mu, lambda)?;
    if !chain_ok {
        return Err(Error::EmptyCycle(format!(
            "S_e^{:?} ∩ S_w0^{:?} is empty: need −λ ≤ μ ≤ λ",
            lambda.neg(),
            mu
        )));
    }
    let d = height(&mu.add(lambda))? as u64;
    let cells_by_dim: Vec<(u64, u64)> = (1..d).map(|k| (k, 2 * (d - k))).collect();
    let components = if d == 0 {
        vec![]
    } else {
        vec![
            degenerate_fixed_point(&lambda.neg()),
            degenerate_fixed_point(mu),
        ]
    };
    Ok(Sl2MvLimit {
        dim: d,
        fixed_point_count: 2 * d + 1,
        cells_by_dim,
        components,
    })
}

/// The two components of the limit of an SL2 Iwahori (or opposite-Iwahori)
/// orbit that is not a `G(O)` orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2IwahoriLimit {
    pub dim: u64,
    /// Anchor `(γ, e)` of the component through the limit of `t^γ`.
    pub translation_anchor: AffineWeylElt,
    /// Anchor of the closed Iwahori orbit component,
    /// `(s₀s₁)^{(d−1)/2}s₀` (standard) or `(s₁s₀)^{(d−1)/2}s₁` (opposite).
    pub orbit_anchor: AffineWeylElt,
    pub orbit_word: Vec<usize>,
}

pub fn sl2_iwahori_limit(gamma: &Coweight, opposite: bool) -> Result<Sl2IwahoriLimit> {
    if gamma.rank() != 2 {
        return Err(Error::RankUnsupported {
            rank: gamma.rank(),
            limit: 2,
        });
    }
    gamma.check_sum_zero()?;
    let c = gamma.coords()[0];
    if c == 0 {
        return Err(Error::Unsupported(
            "γ = 0 indexes a point; nontrivial G(O)-orbit limits are handled by go_orbit_limit"
                .into(),
        ));
    }
    let word: Vec<usize> = if opposite {
        if c > 0 {
            return Err(Error::Unsupported(
                "opposite Iwahori orbit needs anti-dominant γ (the dominant case is the G(O) orbit — use go_orbit_limit)"
                    .into(),
            ));
        }
        let h = (-c) as usize;
        let mut w: Vec<usize> = [1usize, 0].repeat(h - 1);
        w.push(1);
        w
    } else {
        if c < 0 {
            return Err(Error::Unsupported(
                "standard Iwahori orbit needs dominant γ (the anti-dominant case is the G(O) orbit — use go_orbit_limit)"
                    .into(),
            ));
        }
        let h = c as usize;
        let mut w: Vec<usize> = [0usize, 1].repeat(h - 1);
        w.push(0);
        w
    };
    let d = (2 * c.unsigned_abs()) - 1;
    debug_assert_eq!(word.len() as u64, d);
    Ok(Sl2IwahoriLimit {
        dim: d,
        translation_anchor: degenerate_fixed_point(gamma),
        orbit_anchor: AffineWeylElt::from_word(2, &word)?,
        orbit_word: word,
    })
}
