//! Exact convex geometry in the coweight plane: hulls, containment,
//! lattice-point enumeration, the root-direction dimension count, Minkowski
//! sums, SL3 MV polytopes, and a regular-subdivision checker backed by the
//! exact LP of [`crate::lp`].
//!
//! Geometry is planar (the sum-zero plane) for ranks 2 and 3; higher ranks
//! (up to 6) fall back to LP-based hull filtering and containment.

use num_traits::{Signed, Zero};

use crate::lp::{self, Cmp, Constraint};
use crate::weyl::{rat, Coweight, MomentPoint, Rat, Root};
use crate::{Error, Result};

/// Hard cap on the ambient rank for the enumeration-style operations.
pub const MAX_RANK: usize = 6;

/// A convex polytope in the coweight plane, stored as an irredundant vertex
/// list in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    rank: usize,
    vertices: Vec<MomentPoint>,
}

fn proj2(p: &MomentPoint) -> (Rat, Rat) {
    let c = p.coords();
    if c.len() == 2 {
        (c[0].clone(), Rat::zero())
    } else {
        (c[0].clone(), c[1].clone())
    }
}

fn cross(o: &(Rat, Rat), a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Andrew's monotone chain over exact rationals; returns the hull in
/// counterclockwise cyclic order with strictly convex turns only.
fn monotone_chain(points: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(Rat, Rat)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(Rat, Rat)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn on_segment(a: &(Rat, Rat), b: &(Rat, Rat), p: &(Rat, Rat)) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let within = |lo: &Rat, hi: &Rat, v: &Rat| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(&a.0, &b.0, &p.0) && within(&a.1, &b.1, &p.1)
}

/// Point in closed convex polygon given in ccw cyclic order.
fn in_polygon(hull: &[(Rat, Rat)], p: &(Rat, Rat)) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == *p,
        2 => on_segment(&hull[0], &hull[1], p),
        _ => (0..hull.len())
            .all(|i| !cross(&hull[i], &hull[(i + 1) % hull.len()], p).is_negative()),
    }
}

fn lp_point_in_hull(points: &[MomentPoint], p: &MomentPoint) -> bool {
    let n = points.len();
    let rank = p.rank();
    let mut constraints = Vec::new();
    for k in 0..rank {
        let coeffs: Vec<Rat> = points.iter().map(|q| q.coords()[k].clone()).collect();
        constraints.push(Constraint {
            coeffs,
            cmp: Cmp::Eq,
            rhs: p.coords()[k].clone(),
        });
    }
    constraints.push(Constraint {
        coeffs: vec![rat(1, 1); n],
        cmp: Cmp::Eq,
        rhs: rat(1, 1),
    });
    lp::feasible(n, vec![true; n], constraints)
}

impl Polytope {
    /// Convex hull of a nonempty point set: irredundant vertices in
    /// deterministic lexicographic order.
    pub fn convex_hull(points: &[MomentPoint]) -> Result<Polytope> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyInput);
        };
        let rank = first.rank();
        if rank > MAX_RANK {
            return Err(Error::RankUnsupported {
                rank,
                limit: MAX_RANK,
            });
        }
        for p in points {
            if p.rank() != rank {
                return Err(Error::RankMismatch(rank, p.rank()));
            }
        }
        let mut dedup: Vec<MomentPoint> = points.to_vec();
        dedup.sort();
        dedup.dedup();
        if rank <= 3 {
            // planar projection drops one coordinate; points must share a
            // coordinate-sum level for it to be injective
            let level: Rat = dedup[0].coords().iter().sum();
            for p in &dedup {
                if p.coords().iter().sum::<Rat>() != level {
                    return Err(Error::Unsupported(
                        "points do not lie in a common sum-level plane".into(),
                    ));
                }
            }
        }
        let mut vertices: Vec<MomentPoint> = if rank <= 3 {
            let planar: Vec<(Rat, Rat)> = dedup.iter().map(proj2).collect();
            let hull = monotone_chain(&planar);
            dedup
                .iter()
                .filter(|p| hull.contains(&proj2(p)))
                .cloned()
                .collect()
        } else {
            dedup
                .iter()
                .enumerate()
                .filter(|(i, p)| {
                    let others: Vec<MomentPoint> = dedup
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| j != i)
                        .map(|(_, q)| q.clone())
                        .collect();
                    others.is_empty() || !lp_point_in_hull(&others, p)
                })
                .map(|(_, p)| p.clone())
                .collect()
        };
        vertices.sort();
        Ok(Polytope { rank, vertices })
    }

    pub fn from_coweights(points: &[Coweight]) -> Result<Polytope> {
        let pts: Vec<MomentPoint> = points.iter().map(Coweight::to_moment_point).collect();
        Self::convex_hull(&pts)
    }

    pub fn point(p: MomentPoint) -> Polytope {
        Polytope {
            rank: p.rank(),
            vertices: vec![p],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[MomentPoint] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Affine dimension of the vertex set (0, 1 or 2 for ranks ≤ 3).
    pub fn dim(&self) -> usize {
        if self.vertices.len() == 1 {
            return 0;
        }
        if self.rank <= 3 {
            let pts: Vec<(Rat, Rat)> = self.vertices.iter().map(proj2).collect();
            let collinear = pts
                .iter()
                .all(|p| cross(&pts[0], &pts[1], p).is_zero());
            if collinear {
                1
            } else {
                2
            }
        } else {
            // rational row reduction on the difference vectors
            let base = &self.vertices[0];
            let mut rows: Vec<Vec<Rat>> = self.vertices[1..]
                .iter()
                .map(|p| p.sub(base).coords().to_vec())
                .collect();
            let mut dim = 0;
            let cols = self.rank;
            let mut pivot_row = 0;
            for col in 0..cols {
                if let Some(r) =
                    (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())
                {
                    rows.swap(pivot_row, r);
                    let pivot = rows[pivot_row].clone();
                    for row in rows.iter_mut().skip(pivot_row + 1) {
                        let factor = &row[col] / &pivot[col];
                        if !factor.is_zero() {
                            for (dst, src) in row[col..].iter_mut().zip(&pivot[col..]) {
                                *dst -= src * &factor;
                            }
                        }
                    }
                    pivot_row += 1;
                    dim += 1;
                }
            }
            dim
        }
    }

    /// Exact membership in the closed hull.
    pub fn contains(&self, p: &MomentPoint) -> bool {
        if p.rank() != self.rank {
            return false;
        }
        if self.rank <= 3 {
            let level: Rat = self.vertices[0].coords().iter().sum();
            if p.coords().iter().sum::<Rat>() != level {
                return false;
            }
            let hull = monotone_chain(&self.vertices.iter().map(proj2).collect::<Vec<_>>());
            in_polygon(&hull, &proj2(p))
        } else {
            lp_point_in_hull(&self.vertices, p)
        }
    }

    pub fn contains_coweight(&self, v: &Coweight) -> bool {
        self.contains(&v.to_moment_point())
    }

    pub fn translate(&self, shift: &MomentPoint) -> Polytope {
        let mut vertices: Vec<MomentPoint> =
            self.vertices.iter().map(|v| v.add(shift)).collect();
        vertices.sort();
        Polytope {
            rank: self.rank,
            vertices,
        }
    }

    /// Integer bounding box of the vertex set.
    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for v in &self.vertices {
            for (k, c) in v.coords().iter().enumerate() {
                let fl = c.floor().to_integer();
                let ce = c.ceil().to_integer();
                lo[k] = lo[k].min(i64::try_from(fl).unwrap());
                hi[k] = hi[k].max(i64::try_from(ce).unwrap());
            }
        }
        (lo, hi)
    }

    /// All points of `v + Λ` (Λ the coroot lattice) inside the polytope, in
    /// lexicographic order.
    pub fn coset_lattice_points(&self, v: &Coweight) -> Result<Vec<Coweight>> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch(v.rank(), self.rank));
        }
        if self.rank > MAX_RANK {
            return Err(Error::RankUnsupported {
                rank: self.rank,
                limit: MAX_RANK,
            });
        }
        if !self.contains_coweight(v) {
            return Err(Error::NotLatticePoint(format!("{:?}", v)));
        }
        let total: i64 = v.coords().iter().sum();
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        let mut current = vec![0i64; self.rank];
        self.enumerate_box(&lo, &hi, total, 0, &mut current, &mut out);
        Ok(out)
    }

    fn enumerate_box(
        &self,
        lo: &[i64],
        hi: &[i64],
        total: i64,
        k: usize,
        current: &mut Vec<i64>,
        out: &mut Vec<Coweight>,
    ) {
        if k == self.rank - 1 {
            let rest: i64 = total - current.iter().take(k).sum::<i64>();
            if rest < lo[k] || rest > hi[k] {
                return;
            }
            current[k] = rest;
            let cand = Coweight::new(current.clone()).unwrap();
            if self.contains_coweight(&cand) {
                out.push(cand);
            }
            return;
        }
        for c in lo[k]..=hi[k] {
            current[k] = c;
            self.enumerate_box(lo, hi, total, k + 1, current, out);
        }
    }

    fn is_vertex(&self, v: &MomentPoint) -> bool {
        self.vertices.iter().any(|u| u == v)
    }

    /// The dimension count of the moment-polytope theorems: the number of
    /// pairs `(γ, m)` with `γ` a root, `m ≥ 1` and `v + m·γ∨` still in the
    /// polytope. Requires `v` to be a vertex.
    pub fn root_direction_count(&self, v: &Coweight) -> Result<u64> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch(v.rank(), self.rank));
        }
        let vp = v.to_moment_point();
        if !self.is_vertex(&vp) {
            return Err(Error::NotAVertex(format!("{:?}", v)));
        }
        let mut count = 0u64;
        let mut roots = Root::positive(self.rank);
        let negatives: Vec<Root> = roots.iter().map(Root::negated).collect();
        roots.extend(negatives);
        for gamma in roots {
            let coroot = gamma.coroot(self.rank);
            let mut m = 1i64;
            loop {
                let probe = v.add(&coroot.scale(m));
                if !self.contains_coweight(&probe) {
                    break;
                }
                count += 1;
                m += 1;
            }
        }
        Ok(count)
    }

    /// Vertex-independent root-direction count; errors with the per-vertex
    /// counts when they disagree (the polytope is then not an Iwahori/MV
    /// moment polytope).
    pub fn dimension_estimate(&self) -> Result<u64> {
        let mut counts = Vec::new();
        for v in &self.vertices {
            let Some(cw) = v.as_coweight() else {
                return Err(Error::NotLatticePoint(format!("{:?}", v)));
            };
            counts.push((format!("{:?}", cw), self.root_direction_count(&cw)?));
        }
        let first = counts[0].1;
        if counts.iter().any(|(_, c)| *c != first) {
            return Err(Error::VertexDisagreement(counts));
        }
        Ok(first)
    }

    /// Convex hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.add(b));
            }
        }
        Polytope::convex_hull(&sums)
    }

    /// `c`-fold dilation (= `c`-fold Minkowski power for these generators).
    pub fn dilate(&self, c: i64) -> Result<Polytope> {
        if c < 0 {
            return Err(Error::NegativeCoefficient);
        }
        if c == 0 {
            return Ok(Polytope::point(MomentPoint::zero(self.rank)));
        }
        let factor = rat(c, 1);
        let vertices: Vec<MomentPoint> =
            self.vertices.iter().map(|v| v.scale(&factor)).collect();
        Polytope::convex_hull(&vertices)
    }

    /// Doubled area of a 2-quasi-planar polytope (ranks 2–3), used by the
    /// subdivision tiling check. 1-dim polytopes report doubled length
    /// along the first nonzero coordinate instead.
    fn measure2(&self) -> Rat {
        match self.dim() {
            0 => Rat::zero(),
            1 => {
                // projected length; cells of a 1-dim subdivision all lie on
                // the same line, so the coordinate choice is consistent
                let pts: Vec<(Rat, Rat)> = self.vertices.iter().map(proj2).collect();
                let dx = &pts[1].0 - &pts[0].0;
                if dx.is_zero() {
                    (&pts[1].1 - &pts[0].1).abs()
                } else {
                    dx.abs()
                }
            }
            _ => {
                let hull =
                    monotone_chain(&self.vertices.iter().map(proj2).collect::<Vec<_>>());
                let mut doubled = Rat::zero();
                for i in 0..hull.len() {
                    let a = &hull[i];
                    let b = &hull[(i + 1) % hull.len()];
                    doubled += &a.0 * &b.1 - &b.0 * &a.1;
                }
                doubled.abs()
            }
        }
    }
}

/// The four SL3 Minkowski generators of MV polytopes.
fn sl3_generators() -> [Polytope; 4] {
    let zero = Coweight::zero(3);
    let alpha = Coweight::new(vec![1, -1, 0]).unwrap();
    let beta = Coweight::new(vec![0, 1, -1]).unwrap();
    let theta = Coweight::new(vec![1, 0, -1]).unwrap();
    let hull = |pts: &[&Coweight]| {
        Polytope::from_coweights(&pts.iter().map(|p| (*p).clone()).collect::<Vec<_>>()).unwrap()
    };
    [
        hull(&[&zero, &alpha]),
        hull(&[&zero, &beta]),
        hull(&[&zero, &alpha, &theta]),
        hull(&[&zero, &beta, &theta]),
    ]
}

/// MV polytope of SL3 as `c₁·a₁ ⊕ c₂·a₂ ⊕ c₃·b₁ ⊕ c₄·b₂` with the two
/// segment generators `a₁ = [0, α∨]`, `a₂ = [0, β∨]` and the two prime
/// triangles `b₁ = conv{0, α∨, α∨+β∨}`, `b₂ = conv{0, β∨, α∨+β∨}`.
pub fn mv_polytope_sl3(c1: i64, c2: i64, c3: i64, c4: i64) -> Result<Polytope> {
    if c1 < 0 || c2 < 0 || c3 < 0 || c4 < 0 {
        return Err(Error::NegativeCoefficient);
    }
    let gens = sl3_generators();
    let mut out = Polytope::point(MomentPoint::zero(3));
    for (gen, c) in gens.iter().zip([c1, c2, c3, c4]) {
        out = out.minkowski_sum(&gen.dilate(c)?)?;
    }
    Ok(out)
}

/// A polyhedral subdivision given by its top-dimensional cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    cells: Vec<Polytope>,
}

impl Subdivision {
    pub fn new(cells: Vec<Polytope>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyInput);
        }
        let rank = cells[0].rank();
        if cells.iter().any(|c| c.rank() != rank) {
            return Err(Error::InvalidSubdivision(
                "cells have mixed ambient ranks".into(),
            ));
        }
        Ok(Subdivision { cells })
    }

    pub fn cells(&self) -> &[Polytope] {
        &self.cells
    }
}

/// Result of the lifting-function LP for a subdivision.
#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub regular: bool,
    /// Optimal shared margin ε of the strict lower-face inequalities,
    /// maximized subject to ε ≤ 1. Positive iff the subdivision is regular.
    pub margin: Rat,
    /// An optimal lifting `v ↦ h_v` over the subdivision's vertex set.
    pub heights: Vec<(MomentPoint, Rat)>,
    /// When not regular, the dual multipliers proving `ε ≤ margin ≤ 0`.
    pub infeasibility_certificate: Option<Vec<Rat>>,
    /// The certificate (dual when rejected, primal margins when accepted)
    /// has been re-verified by direct arithmetic.
    pub witness_checked: bool,
}

fn edges_of(cell: &Polytope) -> Vec<(MomentPoint, MomentPoint)> {
    let verts = cell.vertices();
    match cell.dim() {
        0 => vec![],
        1 => vec![(verts[0].clone(), verts[1].clone())],
        _ => {
            let planar: Vec<(Rat, Rat)> = verts.iter().map(proj2).collect();
            let hull = monotone_chain(&planar);
            let find = |pt: &(Rat, Rat)| {
                verts
                    .iter()
                    .find(|v| proj2(v) == *pt)
                    .expect("hull point is a vertex")
                    .clone()
            };
            (0..hull.len())
                .map(|i| (find(&hull[i]), find(&hull[(i + 1) % hull.len()])))
                .collect()
        }
    }
}

/// Checks the polyhedral-complex conditions: equal-dimensional cells whose
/// pairwise intersections are shared faces and whose union is `outer`.
fn validate_tiling(outer: &Polytope, s: &Subdivision) -> Result<()> {
    let invalid = |msg: &str| Err(Error::InvalidSubdivision(msg.into()));
    if s.cells.iter().any(|c| c.rank() != outer.rank()) {
        return invalid("cell rank differs from the outer polytope");
    }
    if s.cells.len() == 1 {
        if s.cells[0] == *outer {
            return Ok(());
        }
        return invalid("single cell differs from the outer polytope");
    }
    if outer.rank() > 3 {
        return Err(Error::RankUnsupported {
            rank: outer.rank(),
            limit: 3,
        });
    }
    let d = outer.dim();
    if s.cells.iter().any(|c| c.dim() != d) {
        return invalid("cells do not all have the dimension of the outer polytope");
    }
    for cell in &s.cells {
        if cell.vertices().iter().any(|v| !outer.contains(v)) {
            return invalid("cell is not contained in the outer polytope");
        }
    }
    let total: Rat = s.cells.iter().map(|c| c.measure2()).sum();
    if total != outer.measure2() {
        return invalid("cell measures do not add up to the outer polytope");
    }
    // pairwise intersections must be shared faces
    for (i, c) in s.cells.iter().enumerate() {
        for d2 in &s.cells[i + 1..] {
            if c == d2 {
                return invalid("duplicate cell");
            }
            let common: Vec<&MomentPoint> = c
                .vertices()
                .iter()
                .filter(|v| d2.is_vertex(v))
                .collect();
            // points of one cell inside the other must be shared vertices
            for (a, b) in [(c, d2), (d2, c)] {
                for v in a.vertices() {
                    if b.contains(v) && !b.is_vertex(v) {
                        return invalid("cell vertex lies inside a neighboring cell");
                    }
                }
            }
            match common.len() {
                0 | 1 => {}
                2 => {
                    // a shared segment must be a full edge of both cells
                    let seg = (common[0].clone(), common[1].clone());
                    for cell in [c, d2] {
                        let ok = edges_of(cell).iter().any(|(a, b)| {
                            (*a == seg.0 && *b == seg.1) || (*a == seg.1 && *b == seg.0)
                        });
                        if !ok {
                            return invalid("shared segment is not an edge of both cells");
                        }
                    }
                }
                _ => return invalid("cells overlap in more than a face"),
            }
        }
    }
    Ok(())
}

/// Decides whether `s` is a regular subdivision of `outer`: is there a
/// lifting height function on the vertex set whose lower faces induce
/// exactly the given cells? Strictness is handled by a shared positive
/// margin variable maximized subject to `ε ≤ 1`; the subdivision is regular
/// iff the optimum is positive.
pub fn check_regular_subdivision(outer: &Polytope, s: &Subdivision) -> Result<RegularityReport> {
    validate_tiling(outer, s)?;

    // vertex set of the subdivision
    let mut verts: Vec<MomentPoint> = Vec::new();
    for cell in &s.cells {
        for v in cell.vertices() {
            if !verts.contains(v) {
                verts.push(v.clone());
            }
        }
    }
    verts.sort();

    let rank = outer.rank();
    let nv = verts.len();
    let nc = s.cells.len();
    // variables: h_v (nv), per cell a_C (rank) and b_C (1), then ε
    let num_vars = nv + nc * (rank + 1) + 1;
    let eps = num_vars - 1;
    let h = |v: usize| v;
    let a = |c: usize, k: usize| nv + c * (rank + 1) + k;
    let b = |c: usize| nv + c * (rank + 1) + rank;

    let mut constraints = Vec::new();
    for (ci, cell) in s.cells.iter().enumerate() {
        for (vi, v) in verts.iter().enumerate() {
            let mut coeffs = vec![Rat::zero(); num_vars];
            coeffs[h(vi)] = rat(1, 1);
            for k in 0..rank {
                coeffs[a(ci, k)] = -v.coords()[k].clone();
            }
            coeffs[b(ci)] = rat(-1, 1);
            if cell.is_vertex(v) {
                constraints.push(Constraint {
                    coeffs,
                    cmp: Cmp::Eq,
                    rhs: Rat::zero(),
                });
            } else {
                coeffs[eps] = rat(-1, 1);
                constraints.push(Constraint {
                    coeffs,
                    cmp: Cmp::Ge,
                    rhs: Rat::zero(),
                });
            }
        }
    }
    let mut eps_cap = vec![Rat::zero(); num_vars];
    eps_cap[eps] = rat(1, 1);
    constraints.push(Constraint {
        coeffs: eps_cap,
        cmp: Cmp::Le,
        rhs: rat(1, 1),
    });

    let mut objective = vec![Rat::zero(); num_vars];
    objective[eps] = rat(1, 1);
    let problem = lp::Problem {
        num_vars,
        nonneg: vec![false; num_vars],
        constraints,
        objective,
    };
    let outcome = lp::solve(&problem);
    let lp::Outcome::Optimal {
        value,
        solution,
        dual,
    } = outcome
    else {
        // the margin LP is always feasible (ε ≤ 0 with a flat lifting) and
        // bounded by the normalization, so this cannot happen
        return Err(Error::InvalidSubdivision(
            "margin LP unexpectedly unsolvable".into(),
        ));
    };

    let regular = value.is_positive();
    let heights: Vec<(MomentPoint, Rat)> = verts
        .iter()
        .cloned()
        .zip(solution[..nv].iter().cloned())
        .collect();

    // re-verify the winning side by direct arithmetic
    let witness_checked = if regular {
        let mut ok = true;
        for (ci, cell) in s.cells.iter().enumerate() {
            for (vi, v) in verts.iter().enumerate() {
                let mut affine = solution[b(ci)].clone();
                for k in 0..rank {
                    affine += &solution[a(ci, k)] * &v.coords()[k];
                }
                let gap = &solution[h(vi)] - &affine;
                ok &= if cell.is_vertex(v) {
                    gap.is_zero()
                } else {
                    gap >= value
                };
            }
        }
        ok
    } else {
        lp::verify_bound(&problem, &dual, &value)
    };

    Ok(RegularityReport {
        regular,
        margin: value,
        heights,
        infeasibility_certificate: if regular { None } else { Some(dual) },
        witness_checked,
    })
}
