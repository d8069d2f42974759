//! Root data of type `A_{n-1}` and the affine Weyl group.
//!
//! Coweights are stored in `GL_n` coordinates (length-`n` integer vectors);
//! in SL mode the coordinate sum is zero. The affine Weyl group is the
//! semidirect product `X_*(T) ⋊ W` with the group law
//! `(λ₁, w₁)(λ₂, w₂) = (λ₁ + w₁·λ₂, w₁w₂)`.
//!
//! The simple-reflection convention is `s₀ = t_{θ∨} s_θ`, calibrated so that
//! `(s₀s₁)² = t_{2α∨}` in SL2.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// An integral coweight of `GL_n` (sum-zero in SL mode).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coweight{:?}", self.coords)
    }
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::RankTooSmall(coords.len()));
        }
        Ok(Coweight { coords })
    }

    pub fn zero(rank: usize) -> Self {
        Coweight {
            coords: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_sum_zero(&self) -> bool {
        self.coords.iter().sum::<i64>() == 0
    }

    /// Errors unless the coordinate sum is zero (SL mode / coroot lattice).
    pub fn check_sum_zero(&self) -> Result<()> {
        if self.is_sum_zero() {
            Ok(())
        } else {
            Err(Error::NotSumZero(self.coords.clone()))
        }
    }

    pub fn check_rank(&self, other: &Coweight) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.rank(), other.rank()))
        }
    }

    /// The simple coroot `αᵢ∨ = eᵢ − eᵢ₊₁` for `1 ≤ i ≤ rank−1`.
    pub fn simple_coroot(rank: usize, i: usize) -> Self {
        assert!((1..rank).contains(&i), "simple coroot index out of range");
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        coords[i] = -1;
        Coweight { coords }
    }

    pub fn basis_vector(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i));
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Coweight { coords }
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        assert_eq!(self.rank(), other.rank());
        Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        assert_eq!(self.rank(), other.rank());
        Coweight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Coweight {
        Coweight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Coweight {
        Coweight {
            coords: self.coords.iter().map(|a| c * a).collect(),
        }
    }

    /// Natural pairing with the root `eᵢ − eⱼ`.
    pub fn pairing(&self, root: &Root) -> i64 {
        self.coords[root.i - 1] - self.coords[root.j - 1]
    }

    /// Coordinates sorted into the dominant chamber.
    pub fn dominant(&self) -> Coweight {
        let mut coords = self.coords.clone();
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Coweight { coords }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_moment_point(&self) -> MomentPoint {
        MomentPoint {
            coords: self.coords.iter().map(|&c| rat(c, 1)).collect(),
        }
    }
}

/// An ordinary root `eᵢ − eⱼ` of `GL_n`, `i ≠ j` (1-based indices).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Root {
    i: usize,
    j: usize,
}

impl Root {
    pub fn new(rank: usize, i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > rank || j > rank {
            return Err(Error::BadRoot(i, j));
        }
        Ok(Root { i, j })
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negated(&self) -> Root {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// The associated coroot `eᵢ − eⱼ` as a coweight vector.
    pub fn coroot(&self, rank: usize) -> Coweight {
        let mut coords = vec![0; rank];
        coords[self.i - 1] = 1;
        coords[self.j - 1] = -1;
        Coweight { coords }
    }

    pub fn simple(i: usize) -> Root {
        Root { i, j: i + 1 }
    }

    /// The highest root `θ = e₁ − e_n`.
    pub fn highest(rank: usize) -> Root {
        Root { i: 1, j: rank }
    }

    /// All positive roots `eᵢ − eⱼ`, `i < j`, in lexicographic order.
    pub fn positive(rank: usize) -> Vec<Root> {
        let mut out = Vec::new();
        for i in 1..=rank {
            for j in (i + 1)..=rank {
                out.push(Root { i, j });
            }
        }
        out
    }
}

/// An affine root `α₀ + kδ`; `δ` stays symbolic (it has no coordinates in
/// the `T`-equivariant picture).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineRoot {
    pub root: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(root: Root, level: i64) -> Self {
        AffineRoot { root, level }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.root.is_positive())
    }
}

/// An element of the finite Weyl group `W = S_n`, acting on coordinates by
/// `w · eᵢ = e_{w(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeylElt {
    // perm[i] = w(i+1) - 1, i.e. images in 0-based form
    perm: Vec<usize>,
}

impl fmt::Debug for FiniteWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.images())
    }
}

impl FiniteWeylElt {
    pub fn identity(rank: usize) -> Self {
        FiniteWeylElt {
            perm: (0..rank).collect(),
        }
    }

    /// Builds from 1-based images `[w(1), …, w(n)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let rank = images.len();
        if rank < 2 {
            return Err(Error::RankTooSmall(rank));
        }
        let mut seen = vec![false; rank];
        for &im in &images {
            if im == 0 || im > rank || seen[im - 1] {
                return Err(Error::BadPermutation(images.clone()));
            }
            seen[im - 1] = true;
        }
        Ok(FiniteWeylElt {
            perm: images.iter().map(|&im| im - 1).collect(),
        })
    }

    /// 1-based images `[w(1), …, w(n)]`.
    pub fn images(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p + 1).collect()
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i - 1] + 1
    }

    pub fn transposition(rank: usize, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..rank).collect();
        perm.swap(i - 1, j - 1);
        FiniteWeylElt { perm }
    }

    /// The reflection `s_α` in the ordinary root `α = eᵢ − eⱼ`.
    pub fn reflection(rank: usize, root: &Root) -> Self {
        Self::transposition(rank, root.i, root.j)
    }

    pub fn simple_reflection(rank: usize, i: usize) -> Self {
        Self::transposition(rank, i, i + 1)
    }

    /// The longest element `w₀` (coordinate reversal).
    pub fn longest(rank: usize) -> Self {
        FiniteWeylElt {
            perm: (0..rank).rev().collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        FiniteWeylElt { perm }
    }

    /// Group law `(w₁w₂)(i) = w₁(w₂(i))`.
    pub fn mul(&self, other: &FiniteWeylElt) -> Self {
        assert_eq!(self.rank(), other.rank());
        FiniteWeylElt {
            perm: other.perm.iter().map(|&p| self.perm[p]).collect(),
        }
    }

    /// Coordinate action: `(w·λ)_{w(i)} = λ_i`.
    pub fn apply_coweight(&self, c: &Coweight) -> Coweight {
        assert_eq!(self.rank(), c.rank());
        let mut coords = vec![0; c.rank()];
        for (i, &p) in self.perm.iter().enumerate() {
            coords[p] = c.coords[i];
        }
        Coweight { coords }
    }

    pub fn apply_moment(&self, p: &MomentPoint) -> MomentPoint {
        assert_eq!(self.rank(), p.rank());
        let mut coords = vec![Rat::zero(); p.rank()];
        for (i, &q) in self.perm.iter().enumerate() {
            coords[q] = p.coords[i].clone();
        }
        MomentPoint { coords }
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        Root {
            i: self.apply(r.i),
            j: self.apply(r.j),
        }
    }

    /// Coxeter length (= number of inversions).
    pub fn length(&self) -> u64 {
        let mut len = 0;
        for i in 0..self.perm.len() {
            for j in (i + 1)..self.perm.len() {
                if self.perm[i] > self.perm[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// All elements of `W`, in lexicographic order of their image vectors.
    pub fn all(rank: usize) -> Vec<FiniteWeylElt> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..rank).collect();
        loop {
            out.push(FiniteWeylElt { perm: perm.clone() });
            // next lexicographic permutation
            let Some(k) = (0..rank - 1).rev().find(|&k| perm[k] < perm[k + 1]) else {
                break;
            };
            let l = (k + 1..rank).rev().find(|&l| perm[l] > perm[k]).unwrap();
            perm.swap(k, l);
            perm[k + 1..].reverse();
        }
        out
    }

    /// Finite Bruhat order on `W` (via the tableau criterion is overkill at
    /// this scale; subword DP over a reduced word of `y` is exact).
    pub fn bruhat_leq(x: &FiniteWeylElt, y: &FiniteWeylElt) -> bool {
        assert_eq!(x.rank(), y.rank());
        if x == y {
            return true;
        }
        if x.length() >= y.length() {
            return false;
        }
        let word = y.reduced_word();
        let mut reach: HashSet<FiniteWeylElt> = HashSet::new();
        reach.insert(FiniteWeylElt::identity(x.rank()));
        for &i in &word {
            let s = FiniteWeylElt::simple_reflection(x.rank(), i);
            let mut next = reach.clone();
            for z in &reach {
                next.insert(z.mul(&s));
            }
            reach = next;
        }
        reach.contains(x)
    }

    /// A reduced word in the simple reflections `s₁ … s_{n−1}` (1-based).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            // a left descent always exists for w ≠ e
            let i = (1..w.rank())
                .find(|&i| {
                    let s = FiniteWeylElt::simple_reflection(w.rank(), i);
                    s.mul(&w).length() < w.length()
                })
                .expect("non-identity permutation has a descent");
            word.push(i);
            let s = FiniteWeylElt::simple_reflection(w.rank(), i);
            w = s.mul(&w);
        }
        word
    }
}

/// A point of the coweight plane `t*_ℝ` with exact rational coordinates
/// (sum-zero). Images of `T`-fixed points under the moment map live here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MomentPoint {
    coords: Vec<Rat>,
}

impl fmt::Debug for MomentPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pt[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl MomentPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::RankTooSmall(coords.len()));
        }
        Ok(MomentPoint { coords })
    }

    pub fn zero(rank: usize) -> Self {
        MomentPoint {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn add(&self, other: &MomentPoint) -> MomentPoint {
        assert_eq!(self.rank(), other.rank());
        MomentPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &MomentPoint) -> MomentPoint {
        assert_eq!(self.rank(), other.rank());
        MomentPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MomentPoint {
        MomentPoint {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pairing(&self, root: &Root) -> Rat {
        &self.coords[root.i - 1] - &self.coords[root.j - 1]
    }

    /// Exact integral coweight, if all coordinates are integers.
    pub fn as_coweight(&self) -> Option<Coweight> {
        let mut coords = Vec::with_capacity(self.rank());
        for c in &self.coords {
            if !c.is_integer() {
                return None;
            }
            coords.push(i64::try_from(c.to_integer()).ok()?);
        }
        Some(Coweight { coords })
    }

    /// Mirror image across the affine hyperplane `{⟨·, α₀⟩ = k}`.
    pub fn mirror(&self, gamma: &AffineRoot) -> MomentPoint {
        let coeff = self.pairing(&gamma.root) - rat(gamma.level, 1);
        let coroot = gamma.root.coroot(self.rank()).to_moment_point();
        self.sub(&coroot.scale(&coeff))
    }
}

/// Barycenter of the fundamental alcove: `b₀ = ρ∨ / n` (all marks of type A
/// are 1), with `ρ∨` the half-sum of positive coroots.
pub fn alcove_barycenter(rank: usize) -> MomentPoint {
    let n = rank as i64;
    let coords = (0..rank)
        .map(|i| {
            // ρ∨_i = (n - 1 - 2i)/2, divided by n
            Rat::new(BigInt::from(n - 1 - 2 * i as i64), BigInt::from(2 * n))
        })
        .collect();
    MomentPoint { coords }
}

/// An element `(λ, w)` of the affine Weyl group `W_aff = X_*(T) ⋊ W`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElt {
    trans: Coweight,
    fin: FiniteWeylElt,
}

impl fmt::Debug for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.trans.coords, self.fin.images())
    }
}

impl AffineWeylElt {
    pub fn new(trans: Coweight, fin: FiniteWeylElt) -> Result<Self> {
        if trans.rank() != fin.rank() {
            return Err(Error::RankMismatch(trans.rank(), fin.rank()));
        }
        Ok(AffineWeylElt { trans, fin })
    }

    pub fn identity(rank: usize) -> Self {
        AffineWeylElt {
            trans: Coweight::zero(rank),
            fin: FiniteWeylElt::identity(rank),
        }
    }

    pub fn translation(c: Coweight) -> Self {
        let rank = c.rank();
        AffineWeylElt {
            trans: c,
            fin: FiniteWeylElt::identity(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.trans.rank()
    }

    pub fn trans(&self) -> &Coweight {
        &self.trans
    }

    pub fn fin(&self) -> &FiniteWeylElt {
        &self.fin
    }

    pub fn is_translation(&self) -> bool {
        self.fin.is_identity()
    }

    /// Semidirect-product law `(λ₁, w₁)(λ₂, w₂) = (λ₁ + w₁·λ₂, w₁w₂)`.
    pub fn compose(&self, other: &AffineWeylElt) -> Result<AffineWeylElt> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(AffineWeylElt {
            trans: self.trans.add(&self.fin.apply_coweight(&other.trans)),
            fin: self.fin.mul(&other.fin),
        })
    }

    pub fn inverse(&self) -> AffineWeylElt {
        let winv = self.fin.inverse();
        AffineWeylElt {
            trans: winv.apply_coweight(&self.trans).neg(),
            fin: winv,
        }
    }

    /// Affine action on the coweight lattice: `(λ, w)·x = λ + w·x`.
    pub fn act(&self, x: &Coweight) -> Coweight {
        self.trans.add(&self.fin.apply_coweight(x))
    }

    /// Affine action on the coweight plane.
    pub fn act_moment(&self, p: &MomentPoint) -> MomentPoint {
        self.trans
            .to_moment_point()
            .add(&self.fin.apply_moment(p))
    }

    /// Simple affine generator: `s₀ = t_{θ∨} s_θ`; `sᵢ` (i ≥ 1) is finite.
    pub fn simple_generator(rank: usize, i: usize) -> Result<AffineWeylElt> {
        if i >= rank {
            return Err(Error::BadGenerator(i, rank));
        }
        if i == 0 {
            let theta = Root::highest(rank);
            Ok(AffineWeylElt {
                trans: theta.coroot(rank),
                fin: FiniteWeylElt::reflection(rank, &theta),
            })
        } else {
            Ok(AffineWeylElt {
                trans: Coweight::zero(rank),
                fin: FiniteWeylElt::simple_reflection(rank, i),
            })
        }
    }

    /// Product of simple generators in the given order.
    pub fn from_word(rank: usize, word: &[usize]) -> Result<AffineWeylElt> {
        let mut out = AffineWeylElt::identity(rank);
        for &i in word {
            out = out.compose(&AffineWeylElt::simple_generator(rank, i)?)?;
        }
        Ok(out)
    }

    /// The affine reflection `t_{k·α₀∨} s_{α₀}` across `{⟨·, α₀⟩ = k}`.
    pub fn reflection(rank: usize, gamma: &AffineRoot) -> AffineWeylElt {
        AffineWeylElt {
            trans: gamma.root.coroot(rank).scale(gamma.level),
            fin: FiniteWeylElt::reflection(rank, &gamma.root),
        }
    }

    /// Iwahori–Matsumoto length
    /// `ℓ(t_λ w) = Σ_{α>0, w⁻¹α>0} |⟨λ,α⟩| + Σ_{α>0, w⁻¹α<0} |⟨λ,α⟩ − 1|`.
    pub fn length(&self) -> u64 {
        let winv = self.fin.inverse();
        let mut len: i64 = 0;
        for alpha in Root::positive(self.rank()) {
            let a = self.trans.pairing(&alpha);
            if winv.apply_root(&alpha).is_positive() {
                len += a.abs();
            } else {
                len += (a - 1).abs();
            }
        }
        len as u64
    }

    /// Smallest index `i` with `ℓ(sᵢ x) < ℓ(x)`, if any.
    pub fn left_descent(&self) -> Option<usize> {
        let len = self.length();
        (0..self.rank()).find(|&i| {
            let s = AffineWeylElt::simple_generator(self.rank(), i).unwrap();
            s.compose(self).unwrap().length() < len
        })
    }

    /// A reduced word, obtained by greedily stripping left descents.
    /// `None` for elements of the extended group `GL_n` picture that are
    /// not products of the simple generators (nontrivial length-zero part).
    pub fn try_reduced_word(&self) -> Option<Vec<usize>> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = w.left_descent() {
            word.push(i);
            let s = AffineWeylElt::simple_generator(w.rank(), i).unwrap();
            w = s.compose(&w).unwrap();
        }
        (w == AffineWeylElt::identity(self.rank())).then_some(word)
    }

    /// A reduced word for an element of `W_aff` proper.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.try_reduced_word()
            .expect("element lies outside the affine Weyl group (nontrivial length-zero part)")
    }

    /// Moment-map image `Φ(λ, w) = λ + w(b₀)` — the alcove-lattice vertex of
    /// the fixed point, with `b₀` the barycenter of the fundamental alcove.
    pub fn moment_image(&self) -> MomentPoint {
        self.act_moment(&alcove_barycenter(self.rank()))
    }

    /// Sort key `(length, trans, perm)` giving a deterministic total order.
    pub fn sort_key(&self) -> (u64, Vec<i64>, Vec<usize>) {
        (
            self.length(),
            self.trans.coords.clone(),
            self.fin.perm.clone(),
        )
    }
}

/// All affine reflections `t_{kγ∨} s_γ` with `γ ∈ Φ⁺` and `|k| ≤ bound`.
fn reflections_up_to(rank: usize, bound: i64) -> Vec<AffineWeylElt> {
    let mut out = Vec::new();
    for root in Root::positive(rank) {
        for k in -bound..=bound {
            out.push(AffineWeylElt::reflection(
                rank,
                &AffineRoot::new(root, k),
            ));
        }
    }
    out
}

/// Strong Bruhat order on `W_aff`, by cover-BFS from below: from `x`,
/// repeatedly left-multiply by affine reflections that raise the length by
/// exactly one, looking for `y`. Reflection levels are bounded by
/// `ℓ(y) + 2`, which is safe because `ℓ(t_{kγ∨}s_γ · z) ≥ 2|k| − ℓ(z) − 1`.
pub fn bruhat_leq(x: &AffineWeylElt, y: &AffineWeylElt) -> Result<bool> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    if x == y {
        return Ok(true);
    }
    let (lx, ly) = (x.length(), y.length());
    if lx >= ly {
        return Ok(false);
    }
    let refls = reflections_up_to(x.rank(), ly as i64 + 2);
    let mut frontier: HashSet<AffineWeylElt> = HashSet::new();
    frontier.insert(x.clone());
    for level in (lx + 1)..=ly {
        let mut next = HashSet::new();
        for z in &frontier {
            for r in &refls {
                let rz = r.compose(z).unwrap();
                if rz.length() == level {
                    if rz == *y {
                        return Ok(true);
                    }
                    next.insert(rz);
                }
            }
        }
        if next.is_empty() {
            return Ok(false);
        }
        frontier = next;
    }
    Ok(false)
}

/// The lower Bruhat interval `{z : z ≤ x}` via subword products of a
/// reduced word of `x`, in the deterministic `(length, trans, perm)` order.
pub fn bruhat_lower_interval(x: &AffineWeylElt) -> Vec<AffineWeylElt> {
    let rank = x.rank();
    let word = x.reduced_word();
    let mut reach: HashSet<AffineWeylElt> = HashSet::new();
    reach.insert(AffineWeylElt::identity(rank));
    for &i in &word {
        let s = AffineWeylElt::simple_generator(rank, i).unwrap();
        let mut next = reach.clone();
        for z in &reach {
            next.insert(z.compose(&s).unwrap());
        }
        reach = next;
    }
    let mut out: Vec<AffineWeylElt> = reach.into_iter().collect();
    out.sort_by_cached_key(|z| z.sort_key());
    out
}

/// Shortest-word lengths of all elements within BFS radius `radius` of the
/// identity. Independent oracle for the Iwahori–Matsumoto formula.
pub fn word_length_ball(rank: usize, radius: u64) -> HashMap<AffineWeylElt, u64> {
    let gens: Vec<AffineWeylElt> = (0..rank)
        .map(|i| AffineWeylElt::simple_generator(rank, i).unwrap())
        .collect();
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(AffineWeylElt::identity(rank), 0u64);
    queue.push_back(AffineWeylElt::identity(rank));
    while let Some(z) = queue.pop_front() {
        let d = dist[&z];
        if d == radius {
            continue;
        }
        for s in &gens {
            let zs = z.compose(s).unwrap();
            if !dist.contains_key(&zs) {
                dist.insert(zs.clone(), d + 1);
                queue.push_back(zs);
            }
        }
    }
    dist
}

/// All elements of length ≤ `max_len`, sorted by `(length, trans, perm)`.
pub fn elements_up_to_length(rank: usize, max_len: u64) -> Vec<AffineWeylElt> {
    let mut out: Vec<AffineWeylElt> = word_length_ball(rank, max_len).into_keys().collect();
    out.sort_by_cached_key(|z| z.sort_key());
    out
}

/// Compares two rationals; helper for deterministic orderings elsewhere.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}

/// True when `q` is a nonnegative rational (used by cone tests).
pub fn rat_nonneg(q: &Rat) -> bool {
    !q.is_negative()
}

/// True when `q == 1`.
pub fn rat_is_one(q: &Rat) -> bool {
    q.is_one()
}
