//! Dominance order on coweights and the semi-infinite (periodic) closure
//! order on `W_aff`, in two cross-validated characterisations: the type A
//! lattice picture and the alcove-cone picture.
//!
//! For the orbit order of `U_w = wN(K)w⁻¹` the uniform statement is
//! `x ≤_w y  ⟺  x − y ∈ w · (cone of positive coroots)`, tested
//! componentwise on lattice flags (integral cone) or on moment images
//! (rational cone). At `w = w₀` this is exactly dominance of flags.

use crate::weyl::{
    alcove_barycenter, AffineWeylElt, Coweight, FiniteWeylElt, MomentPoint, Rat,
};
use crate::{Error, Result};
use num_traits::Zero;

/// The lattice-picture encoding `(η₀, …, η_{n−1})` of an affine flag fixed
/// point; `η₀` alone determines the `Gr` fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFlag {
    etas: Vec<Coweight>,
}

impl LatticeFlag {
    pub fn etas(&self) -> &[Coweight] {
        &self.etas
    }

    pub fn rank(&self) -> usize {
        self.etas.len()
    }
}

/// Dominance: `a ≤ b` iff `b − a` is a nonnegative integer combination of
/// the positive coroots `eᵢ − eᵢ₊₁`, i.e. all prefix sums of `b − a` are
/// ≥ 0 and the total sum is 0.
pub fn dominance_leq(a: &Coweight, b: &Coweight) -> Result<bool> {
    a.check_rank(b)?;
    let diff = b.sub(a);
    Ok(in_positive_coroot_cone(diff.coords()))
}

fn in_positive_coroot_cone(v: &[i64]) -> bool {
    let mut prefix = 0i64;
    for &c in v {
        prefix += c;
        if prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

fn in_positive_coroot_cone_rat(v: &[Rat]) -> bool {
    let mut prefix = Rat::zero();
    for c in v {
        prefix += c;
        if prefix < Rat::zero() {
            return false;
        }
    }
    prefix.is_zero()
}

/// Lattice flag of `x = (λ, w)`: `η₀ = λ`, `ηᵢ = η₀ + Σ_{j ≤ i} e_{w(j)}`.
/// The step convention is calibrated against the SL2 chain of the
/// semi-infinite order (`flag_of(e) = ((0,0), (1,0))`).
pub fn flag_of(x: &AffineWeylElt) -> LatticeFlag {
    let rank = x.rank();
    let mut etas = Vec::with_capacity(rank);
    let mut eta = x.trans().clone();
    etas.push(eta.clone());
    for i in 1..rank {
        eta = eta.add(&Coweight::basis_vector(rank, x.fin().apply(i)));
        etas.push(eta.clone());
    }
    LatticeFlag { etas }
}

/// Semi-infinite closure order via the lattice picture: `x ≤ y` for the
/// `U_w` orbits iff every flag step satisfies
/// `ηᵢ(x) − ηᵢ(y) ∈ w · (positive coroot cone)`.
pub fn semiinf_leq_lattice(
    x: &AffineWeylElt,
    y: &AffineWeylElt,
    w: &FiniteWeylElt,
) -> Result<bool> {
    if x.rank() != y.rank() || x.rank() != w.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank().max(w.rank())));
    }
    let winv = w.inverse();
    let fx = flag_of(x);
    let fy = flag_of(y);
    for (ex, ey) in fx.etas.iter().zip(&fy.etas) {
        let diff = winv.apply_coweight(&ex.sub(ey));
        if !in_positive_coroot_cone(diff.coords()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Semi-infinite closure order via the alcove picture: `x ≤ y` for the
/// `U_w` orbits iff `Φ(x) − Φ(y)` lies in the closed rational cone
/// `w · (positive coroot cone)`; at `w = w₀` this is the cone generated by
/// the negative roots.
pub fn semiinf_leq_cone(x: &AffineWeylElt, y: &AffineWeylElt, w: &FiniteWeylElt) -> Result<bool> {
    if x.rank() != y.rank() || x.rank() != w.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank().max(w.rank())));
    }
    let diff = x.moment_image().sub(&y.moment_image());
    let twisted = w.inverse().apply_moment(&diff);
    Ok(in_positive_coroot_cone_rat(twisted.coords()))
}

/// Moment image of a `Gr` fixed point under the flag convention, exposed
/// for the cone/lattice agreement checks: `Φ(μ) = μ + b₀`-free variant.
pub fn gr_moment(mu: &Coweight) -> MomentPoint {
    mu.to_moment_point().add(&alcove_barycenter(mu.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::elements_up_to_length;

    fn cw(coords: &[i64]) -> Coweight {
        Coweight::new(coords.to_vec()).unwrap()
    }

    fn sl2(word: &[usize]) -> AffineWeylElt {
        AffineWeylElt::from_word(2, word).unwrap()
    }

    #[test]
    fn dominance_examples() {
        let a = cw(&[1, 0, -1]);
        assert!(dominance_leq(&a, &a).unwrap());
        // SL2: −α∨ ≤ α∨
        assert!(dominance_leq(&cw(&[-1, 1]), &cw(&[1, -1])).unwrap());
        assert!(!dominance_leq(&cw(&[1, -1]), &cw(&[-1, 1])).unwrap());
        // SL3: α∨ vs β∨ incomparable
        let alpha = cw(&[1, -1, 0]);
        let beta = cw(&[0, 1, -1]);
        assert!(!dominance_leq(&alpha, &beta).unwrap());
        assert!(!dominance_leq(&beta, &alpha).unwrap());
        assert!(dominance_leq(&cw(&[1, 0]), &cw(&[0, 1])).is_ok());
        assert!(dominance_leq(&cw(&[1, 0]), &cw(&[0, 1, 0])).is_err());
    }

    #[test]
    fn flag_examples() {
        // flag_of(e) = ((0,0), (1,0))
        let e = AffineWeylElt::identity(2);
        assert_eq!(flag_of(&e).etas(), &[cw(&[0, 0]), cw(&[1, 0])]);
        // flag_of(s₀) = ((1,−1), (1,0))
        let s0 = sl2(&[0]);
        assert_eq!(flag_of(&s0).etas(), &[cw(&[1, -1]), cw(&[1, 0])]);
        // periodicity: η_{n−1} + e_{w(n)} = η₀ + (1,…,1)
        for z in elements_up_to_length(3, 4) {
            let flag = flag_of(&z);
            let last = flag.etas().last().unwrap();
            let closed = last.add(&Coweight::basis_vector(3, z.fin().apply(3)));
            assert_eq!(closed, z.trans().add(&cw(&[1, 1, 1])));
        }
    }

    #[test]
    fn sl2_chain_both_pictures() {
        // s₁s₀s₁ < s₁s₀ < s₁ < 1 < s₀ < s₀s₁ in the U⁻ order
        let chain = [
            sl2(&[1, 0, 1]),
            sl2(&[1, 0]),
            sl2(&[1]),
            sl2(&[]),
            sl2(&[0]),
            sl2(&[0, 1]),
        ];
        let w0 = FiniteWeylElt::longest(2);
        for pair in chain.windows(2) {
            assert!(semiinf_leq_lattice(&pair[0], &pair[1], &w0).unwrap());
            assert!(semiinf_leq_cone(&pair[0], &pair[1], &w0).unwrap());
            assert!(!semiinf_leq_lattice(&pair[1], &pair[0], &w0).unwrap());
            assert!(!semiinf_leq_cone(&pair[1], &pair[0], &w0).unwrap());
        }
    }

    #[test]
    fn translation_monotonicity() {
        let w0 = FiniteWeylElt::longest(3);
        let coweights = [
            cw(&[0, 0, 0]),
            cw(&[1, -1, 0]),
            cw(&[0, 1, -1]),
            cw(&[1, 0, -1]),
            cw(&[-1, 0, 1]),
            cw(&[2, -1, -1]),
        ];
        for a in &coweights {
            for b in &coweights {
                let ta = AffineWeylElt::translation(a.clone());
                let tb = AffineWeylElt::translation(b.clone());
                assert_eq!(
                    semiinf_leq_lattice(&ta, &tb, &w0).unwrap(),
                    dominance_leq(a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn sl3_examples() {
        let w0 = FiniteWeylElt::longest(3);
        let x = AffineWeylElt::translation(cw(&[-1, 0, 1]));
        let y = AffineWeylElt::translation(cw(&[0, 0, 0]));
        assert!(semiinf_leq_lattice(&x, &y, &w0).unwrap());
        // U-order is the reverse twist: closure of S_e^(0,e) contains t_{θ∨}
        let e = FiniteWeylElt::identity(3);
        let t_theta = AffineWeylElt::translation(cw(&[1, 0, -1]));
        assert!(semiinf_leq_lattice(&t_theta, &y, &e).unwrap());
        assert!(!semiinf_leq_lattice(&x, &y, &e).unwrap());
    }

    #[test]
    fn pictures_agree_small_ball() {
        for rank in [2usize, 3] {
            let elts = elements_up_to_length(rank, 3);
            for w in FiniteWeylElt::all(rank) {
                for x in &elts {
                    for y in &elts {
                        assert_eq!(
                            semiinf_leq_lattice(x, y, &w).unwrap(),
                            semiinf_leq_cone(x, y, &w).unwrap(),
                            "pictures disagree at {:?} vs {:?} (w = {:?})",
                            x,
                            y,
                            w
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn partial_order_axioms() {
        let w0 = FiniteWeylElt::longest(2);
        let elts = elements_up_to_length(2, 4);
        for x in &elts {
            assert!(semiinf_leq_lattice(x, x, &w0).unwrap());
        }
        for x in &elts {
            for y in &elts {
                if x != y
                    && semiinf_leq_lattice(x, y, &w0).unwrap()
                    && semiinf_leq_lattice(y, x, &w0).unwrap()
                {
                    panic!("antisymmetry violated at {:?}, {:?}", x, y);
                }
                for z in &elts {
                    if semiinf_leq_lattice(x, y, &w0).unwrap()
                        && semiinf_leq_lattice(y, z, &w0).unwrap()
                    {
                        assert!(semiinf_leq_lattice(x, z, &w0).unwrap());
                    }
                }
            }
        }
    }
}
