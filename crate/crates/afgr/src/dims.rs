//! Closed-form dimension formulas: heights, Iwahori-orbit dimensions in
//! `Gr` and `Fl`, the equidimensional `Gr` intersection formula and the
//! affine-flag intersection upper bounds.

use crate::weyl::{AffineWeylElt, Coweight, FiniteWeylElt, Root};
use crate::{Error, Result};

/// Outcome of a dimension formula: either an actual dimension or the empty
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimValue {
    Empty,
    Dim(i64),
}

/// Which formula produced a [`DimResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    /// `S_{w₀}^μ ∩ I^λ` in the affine Grassmannian (equidimensional).
    GrIntersection,
    /// `S_{w₀}^{w₂} ∩ I^{w₁}` in the affine flag variety (upper bound only).
    FlIntersectionBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimResult {
    pub value: DimValue,
    pub equidimensional: bool,
    pub kind: DimKind,
}

impl DimResult {
    pub fn is_empty(&self) -> bool {
        self.value == DimValue::Empty
    }

    pub fn dim(&self) -> Option<i64> {
        match self.value {
            DimValue::Empty => None,
            DimValue::Dim(d) => Some(d),
        }
    }
}

/// Height of a coroot-lattice element: `Σ cᵢ` where `λ = Σ cᵢ αᵢ∨`.
/// In `GL_n` coordinates the coefficients are the prefix sums of `λ`.
pub fn height(lambda: &Coweight) -> Result<i64> {
    lambda.check_sum_zero()?;
    let mut prefix = 0i64;
    let mut total = 0i64;
    for &c in &lambda.coords()[..lambda.rank() - 1] {
        prefix += c;
        total += prefix;
    }
    Ok(total)
}

/// `dim(G/P_{λ_dom})` = number of positive roots moved by `λ_dom`.
fn dim_partial_flag(lambda_dom: &Coweight) -> i64 {
    Root::positive(lambda_dom.rank())
        .iter()
        .filter(|alpha| lambda_dom.pairing(alpha) > 0)
        .count() as i64
}

/// The minimal-length coset representative `w` with `λ = w · λ_dom`
/// (ties in `λ_dom` are matched to increasing target positions).
pub fn minimal_coset_rep(lambda: &Coweight) -> (FiniteWeylElt, Coweight) {
    let dom = lambda.dominant();
    let n = lambda.rank();
    let mut used = vec![false; n];
    let mut images = vec![0usize; n];
    for (image, target) in images.iter_mut().zip(dom.coords()) {
        let j = (0..n)
            .find(|&j| !used[j] && lambda.coords()[j] == *target)
            .expect("dominant rearrangement always matches");
        used[j] = true;
        *image = j + 1;
    }
    (FiniteWeylElt::from_images(images).unwrap(), dom)
}

/// Dimension of the Iwahori orbit `I^λ` in the affine Grassmannian:
/// `ℓ(w) + 2·height(λ_dom) − dim(G/P_{λ_dom})`.
pub fn iwahori_dim_gr(lambda: &Coweight) -> Result<i64> {
    lambda.check_sum_zero()?;
    let (w, dom) = minimal_coset_rep(lambda);
    Ok(w.length() as i64 + 2 * height(&dom)? - dim_partial_flag(&dom))
}

/// Dimension of the Iwahori orbit in `Fl` = length of the indexing element.
pub fn iwahori_dim_fl(x: &AffineWeylElt) -> i64 {
    x.length() as i64
}

/// Dimension of `S_{w₀}^μ ∩ I^λ` in the affine Grassmannian:
/// `height(λ_dom + μ) − dim(G/P_{λ_dom}) + ℓ(w)` when `λ ≤ μ ≤ λ_dom` in
/// dominance order, and empty otherwise. The intersection is
/// equidimensional.
pub fn gr_intersection_dim(lambda: &Coweight, mu: &Coweight) -> Result<DimResult> {
    lambda.check_sum_zero()?;
    mu.check_sum_zero()?;
    lambda.check_rank(mu)?;
    let (w, dom) = minimal_coset_rep(lambda);
    let chain_ok = crate::orders::dominance_leq(lambda, mu)? && crate::orders::dominance_leq(mu, &dom)?;
    if !chain_ok {
        return Ok(DimResult {
            value: DimValue::Empty,
            equidimensional: false,
            kind: DimKind::GrIntersection,
        });
    }
    let value = height(&dom.add(mu))? - dim_partial_flag(&dom) + w.length() as i64;
    Ok(DimResult {
        value: DimValue::Dim(value),
        equidimensional: true,
        kind: DimKind::GrIntersection,
    })
}

/// Upper bound for `dim(S_{w₀}^{w₂} ∩ I^{w₁})` in the affine flag variety,
/// with `w₁ = (λ, w′)` and `w₂ = (μ, w″)`: the `Gr` part plus
/// `dim(G/B) − ℓ(w′)` if `w′ = w″`, `ℓ(w′) − ℓ(w″)` if `w″ < w′`, and empty
/// unless `w″ ≤ w′` in the finite Bruhat order.
pub fn fl_intersection_bound(x: &AffineWeylElt, y: &AffineWeylElt) -> Result<DimResult> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    let empty = DimResult {
        value: DimValue::Empty,
        equidimensional: false,
        kind: DimKind::FlIntersectionBound,
    };
    let gr = gr_intersection_dim(x.trans(), y.trans())?;
    let DimValue::Dim(base) = gr.value else {
        return Ok(empty);
    };
    let (wp, wpp) = (x.fin(), y.fin());
    let fiber = if wp == wpp {
        let n = x.rank();
        let dim_gb = (n * (n - 1) / 2) as i64;
        dim_gb - wp.length() as i64
    } else if FiniteWeylElt::bruhat_leq(wpp, wp) {
        wp.length() as i64 - wpp.length() as i64
    } else {
        return Ok(empty);
    };
    Ok(DimResult {
        value: DimValue::Dim(base + fiber),
        equidimensional: false,
        kind: DimKind::FlIntersectionBound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::FiniteWeylElt;

    fn cw(coords: &[i64]) -> Coweight {
        Coweight::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&Coweight::zero(3)).unwrap(), 0);
        assert_eq!(height(&cw(&[2, -2])).unwrap(), 2);
        assert_eq!(height(&cw(&[1, 0, -1])).unwrap(), 2);
        assert_eq!(height(&cw(&[2, -1, -1])).unwrap(), 3);
        assert!(height(&cw(&[1, 0])).is_err());
    }

    #[test]
    fn iwahori_dim_gr_examples() {
        assert_eq!(iwahori_dim_gr(&cw(&[-1, 1])).unwrap(), 2);
        assert_eq!(iwahori_dim_gr(&cw(&[1, -1])).unwrap(), 1);
        assert_eq!(iwahori_dim_gr(&cw(&[1, 0, -1])).unwrap(), 1);
        // the closed G(O) orbit Gr^{α+β} has dimension 4 = dim of I^{w₀·θ∨}
        assert_eq!(iwahori_dim_gr(&cw(&[-1, 0, 1])).unwrap(), 4);
    }

    #[test]
    fn iwahori_dim_fl_examples() {
        assert_eq!(iwahori_dim_fl(&AffineWeylElt::identity(2)), 0);
        assert_eq!(
            iwahori_dim_fl(&AffineWeylElt::from_word(2, &[0, 1, 0]).unwrap()),
            3
        );
        assert_eq!(
            iwahori_dim_fl(&AffineWeylElt::translation(cw(&[2, -2]))),
            4
        );
    }

    #[test]
    fn gr_intersection_examples() {
        // SL2: λ = −α∨, μ = α∨ → 2, equidimensional
        let r = gr_intersection_dim(&cw(&[-1, 1]), &cw(&[1, -1])).unwrap();
        assert_eq!(r.value, DimValue::Dim(2));
        assert!(r.equidimensional);
        // SL2: λ = α∨ dominant, μ = 0 → empty
        let r = gr_intersection_dim(&cw(&[1, -1]), &cw(&[0, 0])).unwrap();
        assert!(r.is_empty());
        // SL3: λ = −(α∨+β∨), μ = 0 → 2
        let r = gr_intersection_dim(&cw(&[-1, 0, 1]), &cw(&[0, 0, 0])).unwrap();
        assert_eq!(r.value, DimValue::Dim(2));
    }

    #[test]
    fn gr_self_intersection_is_nonnegative() {
        // gr_intersection_dim(λ, λ) ≥ 0 whenever nonempty
        for coords in [
            vec![0i64, 0],
            vec![2, -2],
            vec![-3, 3],
            vec![1, 0, -1],
            vec![-1, -1, 2],
            vec![2, 1, -3],
            vec![0, 2, -2],
        ] {
            let lambda = cw(&coords);
            let r = gr_intersection_dim(&lambda, &lambda).unwrap();
            if let Some(d) = r.dim() {
                assert!(d >= 0, "negative dimension at λ = {:?}", lambda);
            }
        }
    }

    #[test]
    fn gr_intersection_density_claim() {
        // gr_intersection_dim(λ, λ_dom) = iwahori_dim_gr(λ)
        for coords in [
            vec![0i64, 0],
            vec![1, -1],
            vec![-2, 2],
            vec![3, -3],
            vec![1, 0, -1],
            vec![-1, 0, 1],
            vec![2, -1, -1],
            vec![-1, -1, 2],
            vec![2, 1, -3],
        ] {
            let lambda = cw(&coords);
            let dom = lambda.dominant();
            let r = gr_intersection_dim(&lambda, &dom).unwrap();
            assert_eq!(r.dim(), Some(iwahori_dim_gr(&lambda).unwrap()));
        }
    }

    #[test]
    fn fl_bound_examples() {
        let s1 = FiniteWeylElt::transposition(2, 1, 2);
        let x = AffineWeylElt::new(cw(&[1, -1]), s1.clone()).unwrap();
        let r = fl_intersection_bound(&x, &x).unwrap();
        assert_eq!(r.value, DimValue::Dim(1));
        assert!(!r.equidimensional);

        // SL3: w′ = e < w″ = w₀ is empty
        let x = AffineWeylElt::translation(cw(&[-1, 0, 1]));
        let y = AffineWeylElt::new(cw(&[0, 0, 0]), FiniteWeylElt::longest(3)).unwrap();
        assert!(fl_intersection_bound(&x, &y).unwrap().is_empty());

        // empty Gr part propagates
        let x = AffineWeylElt::new(cw(&[1, -1]), s1.clone()).unwrap();
        let y = AffineWeylElt::new(cw(&[0, 0]), s1).unwrap();
        assert!(fl_intersection_bound(&x, &y).unwrap().is_empty());
    }

    #[test]
    fn fl_bound_below_weak_corollary() {
        // sharper bound ≤ Gr part + dim(G/B)
        for rank in [2usize, 3] {
            let dim_gb = (rank * (rank - 1) / 2) as i64;
            for x in crate::weyl::elements_up_to_length(rank, 3) {
                for y in crate::weyl::elements_up_to_length(rank, 3) {
                    let r = fl_intersection_bound(&x, &y).unwrap();
                    if let Some(d) = r.dim() {
                        let gr = gr_intersection_dim(x.trans(), y.trans()).unwrap();
                        assert!(d <= gr.dim().unwrap() + dim_gb);
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_rep_is_minimal() {
        // among all w with λ = w·λ_dom, the chosen one has minimal length
        for coords in [vec![0i64, 1, -1], vec![-1, -1, 2], vec![1, 1, -2]] {
            let lambda = cw(&coords);
            let (w, dom) = minimal_coset_rep(&lambda);
            assert_eq!(w.apply_coweight(&dom), lambda);
            for u in FiniteWeylElt::all(3) {
                if u.apply_coweight(&dom) == lambda {
                    assert!(w.length() <= u.length());
                }
            }
        }
    }
}
