//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use afgr::corpus::{self, DEFAULT_CAP};
use afgr::degeneration::{self, bounds::Bound};
use afgr::dims;
use afgr::exec::Mode;
use afgr::orders;
use afgr::polytope::{check_regular_subdivision, mv_polytope_sl3, Polytope, Subdivision};
use afgr::weyl::{
    self, elements_up_to_length, word_length_ball, AffineWeylElt, Coweight, FiniteWeylElt,
    MomentPoint,
};

fn cw(coords: &[i64]) -> Coweight {
    Coweight::new(coords.to_vec()).unwrap()
}

fn sl2(word: &[usize]) -> AffineWeylElt {
    AffineWeylElt::from_word(2, word).unwrap()
}

fn finish(criterion: &str, started: Instant, budget_secs: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion {criterion}: PASS ({elapsed:.2}s, budget {budget_secs}s)");
    assert!(
        elapsed < budget_secs,
        "criterion {criterion} exceeded its runtime budget: {elapsed:.2}s"
    );
}

/// All sum-zero coweights with coordinates in [-bound, bound].
fn sum_zero_box(rank: usize, bound: i64) -> Vec<Coweight> {
    let mut out = Vec::new();
    let mut coords = vec![0i64; rank];
    fn rec(rank: usize, bound: i64, k: usize, coords: &mut Vec<i64>, out: &mut Vec<Coweight>) {
        if k == rank - 1 {
            let rest = -coords[..k].iter().sum::<i64>();
            if rest.abs() <= bound {
                coords[k] = rest;
                out.push(Coweight::new(coords.clone()).unwrap());
            }
            return;
        }
        for c in -bound..=bound {
            coords[k] = c;
            rec(rank, bound, k + 1, coords, out);
        }
    }
    rec(rank, bound, 0, &mut coords, &mut out);
    out
}

#[test]
fn criterion_01_semi_infinite_chain_and_agreement() {
    let started = Instant::now();
    // the SL2 chain s₁s₀s₁ < s₁s₀ < s₁ < 1 < s₀ < s₀s₁, both pictures
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
        assert!(orders::semiinf_leq_lattice(&pair[0], &pair[1], &w0).unwrap());
        assert!(orders::semiinf_leq_cone(&pair[0], &pair[1], &w0).unwrap());
        assert!(!orders::semiinf_leq_lattice(&pair[1], &pair[0], &w0).unwrap());
        assert!(!orders::semiinf_leq_cone(&pair[1], &pair[0], &w0).unwrap());
    }

    // exhaustive agreement: all SL2 elements with |translation| ≤ 3
    let mut sl2_elts = Vec::new();
    for c in -3i64..=3 {
        for w in FiniteWeylElt::all(2) {
            sl2_elts.push(AffineWeylElt::new(cw(&[c, -c]), w).unwrap());
        }
    }
    for w in FiniteWeylElt::all(2) {
        for x in &sl2_elts {
            for y in &sl2_elts {
                assert_eq!(
                    orders::semiinf_leq_lattice(x, y, &w).unwrap(),
                    orders::semiinf_leq_cone(x, y, &w).unwrap(),
                    "SL2 disagreement at {:?} vs {:?}",
                    x,
                    y
                );
            }
        }
    }
    // and all SL3 elements of length ≤ 5
    let sl3_elts = elements_up_to_length(3, 5);
    for w in FiniteWeylElt::all(3) {
        for x in &sl3_elts {
            for y in &sl3_elts {
                assert_eq!(
                    orders::semiinf_leq_lattice(x, y, &w).unwrap(),
                    orders::semiinf_leq_cone(x, y, &w).unwrap(),
                    "SL3 disagreement at {:?} vs {:?}",
                    x,
                    y
                );
            }
        }
    }
    finish("01 semi-infinite chain + picture agreement", started, 10.0);
}

#[test]
fn criterion_02_affine_weyl_calibration() {
    let started = Instant::now();
    assert_eq!(sl2(&[0, 1, 0, 1]), AffineWeylElt::translation(cw(&[2, -2])));
    assert_eq!(sl2(&[1, 0, 1, 0]), AffineWeylElt::translation(cw(&[-2, 2])));
    for rank in [2usize, 3] {
        for (elt, bfs_len) in word_length_ball(rank, 6) {
            assert_eq!(
                elt.length(),
                bfs_len,
                "IM formula disagrees with BFS at {:?}",
                elt
            );
        }
    }
    finish("02 affine Weyl calibration + IM = BFS length", started, 30.0);
}

#[test]
fn criterion_03_p1_degeneration() {
    let started = Instant::now();
    // SL2: (α∨, −α∨) → {(α,e), (α,σ), (−α,e)} with the two stated edges
    let lim = degeneration::degenerate_p1(&cw(&[1, -1]), &cw(&[-1, 1])).unwrap();
    let sigma = FiniteWeylElt::transposition(2, 1, 2);
    let a = AffineWeylElt::translation(cw(&[1, -1]));
    let m = AffineWeylElt::new(cw(&[1, -1]), sigma).unwrap();
    let b = AffineWeylElt::translation(cw(&[-1, 1]));
    assert_eq!(lim.fixed_points, [a.clone(), m.clone(), b.clone()]);
    assert_eq!(lim.edges, [(a, m.clone()), (m, b)]);

    // SL3: (α∨+β∨, 0) → {(α+β,e), (α+β,w₀), (0,e)}
    let lim = degeneration::degenerate_p1(&cw(&[1, 0, -1]), &cw(&[0, 0, 0])).unwrap();
    let a = AffineWeylElt::translation(cw(&[1, 0, -1]));
    let m = AffineWeylElt::new(cw(&[1, 0, -1]), FiniteWeylElt::longest(3)).unwrap();
    let b = AffineWeylElt::identity(3);
    assert_eq!(lim.fixed_points, [a.clone(), m.clone(), b.clone()]);
    assert_eq!(lim.edges, [(a, m.clone()), (m, b)]);
    finish("03 P¹ degeneration (exact)", started, 5.0);
}

#[test]
fn criterion_04_polytope_dimension_counts() {
    let started = Instant::now();
    // hexagon of Gr^{α+β}: count 4 at every vertex
    let theta = cw(&[1, 0, -1]);
    let orbit: Vec<Coweight> = FiniteWeylElt::all(3)
        .iter()
        .map(|w| w.apply_coweight(&theta))
        .collect();
    let hex = Polytope::from_coweights(&orbit).unwrap();
    for v in &orbit {
        assert_eq!(hex.root_direction_count(v).unwrap(), 4);
    }
    assert_eq!(hex.dimension_estimate().unwrap(), 4);

    // SL2 segments [λ, μ]: count = height(μ − λ), both endpoints
    for lo in -3i64..=3 {
        for hi in (lo + 1)..=(lo + 6).min(3) {
            let seg = Polytope::from_coweights(&[cw(&[lo, -lo]), cw(&[hi, -hi])]).unwrap();
            let h = dims::height(&cw(&[hi - lo, lo - hi])).unwrap() as u64;
            assert_eq!(seg.root_direction_count(&cw(&[lo, -lo])).unwrap(), h);
            assert_eq!(seg.root_direction_count(&cw(&[hi, -hi])).unwrap(), h);
            assert_eq!(seg.dimension_estimate().unwrap(), h);
        }
    }

    // the 81 Minkowski tuples with coefficients ≤ 2: every true MV
    // polytope (min(c1,c2) = 0) is vertex-independent with count equal to
    // height(top − bottom); mixed tuples are not MV polytopes and must be
    // reported as vertex disagreements
    for c1 in 0..=2i64 {
        for c2 in 0..=2i64 {
            for c3 in 0..=2i64 {
                for c4 in 0..=2i64 {
                    let p = mv_polytope_sl3(c1, c2, c3, c4).unwrap();
                    if c1 > 0 && c2 > 0 {
                        assert!(matches!(
                            p.dimension_estimate(),
                            Err(afgr::Error::VertexDisagreement(_))
                        ));
                        continue;
                    }
                    let verts: Vec<Coweight> = p
                        .vertices()
                        .iter()
                        .map(|v| v.as_coweight().unwrap())
                        .collect();
                    let top = verts
                        .iter()
                        .find(|t| verts.iter().all(|o| orders::dominance_leq(o, t).unwrap()))
                        .unwrap();
                    let bottom = verts
                        .iter()
                        .find(|b| verts.iter().all(|o| orders::dominance_leq(b, o).unwrap()))
                        .unwrap();
                    let spread = dims::height(&top.sub(bottom)).unwrap() as u64;
                    assert_eq!(
                        p.dimension_estimate().unwrap(),
                        spread,
                        "MV({c1},{c2},{c3},{c4})"
                    );
                }
            }
        }
    }
    finish("04 polytope dimension counts", started, 60.0);
}

#[test]
fn criterion_05_go_orbit_limits() {
    let started = Instant::now();
    // SL2, λ = α∨: maximal admissible set exactly {s₀s₁, s₁s₀}
    let adm = degeneration::admissible_set(&cw(&[1, -1])).unwrap();
    let expected = {
        let mut v = vec![sl2(&[0, 1]), sl2(&[1, 0])];
        v.sort_by_cached_key(AffineWeylElt::sort_key);
        v
    };
    assert_eq!(adm.maximal, expected);

    // SL3, λ = α∨+β∨: exactly 6 maximal elements
    let adm = degeneration::admissible_set(&cw(&[1, 0, -1])).unwrap();
    assert_eq!(adm.maximal.len(), 6);
    let report = degeneration::go_orbit_limit(&cw(&[1, 0, -1])).unwrap();
    assert_eq!(report.lower_bound, 6);
    assert_eq!(report.upper_bound, Bound::Finite(6));
    finish("05 G(O)-orbit limits (exact)", started, 10.0);
}

#[test]
fn criterion_06_golden_corpus() {
    let started = Instant::now();
    let report = corpus::run_corpus(DEFAULT_CAP, Mode::default()).unwrap();
    let lower: Vec<u64> = report.cases.iter().map(|c| c.lower_bound).collect();
    assert_eq!(lower, vec![1, 2, 3, 4, 6]);
    let known: Vec<u64> = report.cases.iter().map(|c| c.known_components).collect();
    assert_eq!(known, vec![1, 2, 3, 5, 6]);
    for case in &report.cases {
        let afgr::json::BoundJson::Finite { finite } = &case.upper_bound else {
            panic!("case {} hit the enumeration cap", case.name);
        };
        assert!(
            *finite >= case.known_components,
            "case {}: upper bound {} below known count {}",
            case.name,
            finite,
            case.known_components
        );
        assert!(case.pass, "case {} failed", case.name);
    }
    assert!(report.all_pass);
    finish("06 golden SL3 corpus", started, 300.0);
}

#[test]
fn criterion_07_sl2_limit_structure() {
    let started = Instant::now();
    // λ = 2α∨, μ = α∨ (d = 3): 7 fixed points, cells (4, 2) in dims (1, 2),
    // two 3-dimensional components
    let lim = degeneration::sl2_mv_limit(&cw(&[2, -2]), &cw(&[1, -1])).unwrap();
    assert_eq!(lim.dim, 3);
    assert_eq!(lim.fixed_point_count, 7);
    assert_eq!(lim.cells_by_dim, vec![(1, 4), (2, 2)]);
    assert_eq!(lim.components.len(), 2);

    // Iwahori anchors s₀s₁s₀ (standard, γ = 2α∨) and s₁s₀s₁ (opposite)
    let std = degeneration::sl2_iwahori_limit(&cw(&[2, -2]), false).unwrap();
    assert_eq!(std.orbit_anchor, sl2(&[0, 1, 0]));
    assert_eq!(std.translation_anchor, AffineWeylElt::translation(cw(&[2, -2])));
    let opp = degeneration::sl2_iwahori_limit(&cw(&[-2, 2]), true).unwrap();
    assert_eq!(opp.orbit_anchor, sl2(&[1, 0, 1]));
    assert_eq!(opp.translation_anchor, AffineWeylElt::translation(cw(&[-2, 2])));
    finish("07 SL2 limit structure (exact)", started, 10.0);
}

#[test]
fn criterion_08_dimension_formulas() {
    let started = Instant::now();
    // gr_intersection_dim(λ, λ_dom) = iwahori_dim_gr(λ) whenever
    // height(λ_dom) ≤ 3
    for rank in [2usize, 3] {
        for lambda in sum_zero_box(rank, 3) {
            let dom = lambda.dominant();
            if dims::height(&dom).unwrap() > 3 {
                continue;
            }
            let r = dims::gr_intersection_dim(&lambda, &dom).unwrap();
            assert_eq!(
                r.dim(),
                Some(dims::iwahori_dim_gr(&lambda).unwrap()),
                "density claim fails at {:?}",
                lambda
            );
            assert!(r.equidimensional);

            // monotone −1 stepping across each admissible chain
            let mut by_height: Vec<(i64, i64)> = Vec::new();
            for mu in sum_zero_box(rank, 3) {
                if orders::dominance_leq(&lambda, &mu).unwrap()
                    && orders::dominance_leq(&mu, &dom).unwrap()
                {
                    let v = dims::gr_intersection_dim(&lambda, &mu)
                        .unwrap()
                        .dim()
                        .unwrap();
                    by_height.push((dims::height(&mu).unwrap(), v));
                }
            }
            for &(h1, v1) in &by_height {
                for &(h2, v2) in &by_height {
                    if h2 == h1 - 1 {
                        assert_eq!(v2, v1 - 1, "stepping fails at λ = {:?}", lambda);
                    }
                }
            }
        }
    }
    // SL3: λ = −(α∨+β∨), μ = 0 → 2, the dimension of the triangle MV cycle
    let r = dims::gr_intersection_dim(&cw(&[-1, 0, 1]), &cw(&[0, 0, 0])).unwrap();
    assert_eq!(r.dim(), Some(2));
    let tri = mv_polytope_sl3(0, 0, 1, 0).unwrap();
    assert_eq!(tri.dimension_estimate().unwrap(), 2);
    finish("08 dimension formulas (exact)", started, 30.0);
}

#[test]
fn criterion_09_regular_subdivision_checker() {
    let started = Instant::now();
    let theta = cw(&[1, 0, -1]);
    let orbit: Vec<Coweight> = FiniteWeylElt::all(3)
        .iter()
        .map(|w| w.apply_coweight(&theta))
        .collect();
    let hex = Polytope::from_coweights(&orbit).unwrap();

    // trivial subdivision accepted
    let triv = check_regular_subdivision(&hex, &Subdivision::new(vec![hex.clone()]).unwrap())
        .unwrap();
    assert!(triv.regular && triv.witness_checked);

    // hexagon into three rhombi accepted
    let o = cw(&[0, 0, 0]);
    let alpha = cw(&[1, -1, 0]);
    let beta = cw(&[0, 1, -1]);
    let rhombus = |a: &Coweight, b: &Coweight, c: &Coweight| {
        Polytope::from_coweights(&[o.clone(), a.clone(), b.clone(), c.clone()]).unwrap()
    };
    let rhombi = Subdivision::new(vec![
        rhombus(&alpha, &theta, &beta),
        rhombus(&beta, &alpha.neg(), &theta.neg()),
        rhombus(&theta.neg(), &beta.neg(), &alpha),
    ])
    .unwrap();
    let rep = check_regular_subdivision(&hex, &rhombi).unwrap();
    assert!(rep.regular, "rhombi margin {}", rep.margin);
    assert!(rep.witness_checked);

    // the classical non-regular triangulation rejected, with the dual
    // certificate of LP infeasibility re-verified
    let at = |x: i64, y: i64| alpha.scale(x).add(&beta.scale(y));
    let tri = |a: &Coweight, b: &Coweight, c: &Coweight| {
        Polytope::from_coweights(&[a.clone(), b.clone(), c.clone()]).unwrap()
    };
    let (p1, p2, p3) = (at(0, 0), at(4, 0), at(0, 4));
    let (q1, q2, q3) = (at(1, 1), at(2, 1), at(1, 2));
    let outer = tri(&p1, &p2, &p3);
    let moae = Subdivision::new(vec![
        tri(&p1, &p2, &q1),
        tri(&p2, &q1, &q2),
        tri(&p2, &p3, &q2),
        tri(&p3, &q2, &q3),
        tri(&p1, &p3, &q3),
        tri(&p1, &q1, &q3),
        tri(&q1, &q2, &q3),
    ])
    .unwrap();
    let rep = check_regular_subdivision(&outer, &moae).unwrap();
    assert!(!rep.regular, "MOAE accepted with margin {}", rep.margin);
    assert!(rep.infeasibility_certificate.is_some());
    assert!(rep.witness_checked, "certificate failed re-verification");
    finish("09 regular-subdivision checker", started, 5.0);
}

#[test]
fn criterion_10_determinism() {
    let started = Instant::now();
    let a = corpus::corpus_json(&corpus::run_corpus(DEFAULT_CAP, Mode::Parallel).unwrap());
    let b = corpus::corpus_json(&corpus::run_corpus(DEFAULT_CAP, Mode::Parallel).unwrap());
    let c = corpus::corpus_json(&corpus::run_corpus(DEFAULT_CAP, Mode::Sequential).unwrap());
    assert_eq!(a, b, "repeated runs differ");
    assert_eq!(a, c, "parallel and sequential runs differ");
    finish("10 determinism of the examples suite", started, 300.0);
}

/// Supporting check tying criterion 1's two orders to the moment geometry:
/// reflecting across any wall mirrors moment images.
#[test]
fn supporting_reflection_mirror_invariant() {
    let started = Instant::now();
    for rank in [2usize, 3] {
        for z in elements_up_to_length(rank, 3) {
            let img: MomentPoint = z.moment_image();
            for root in weyl::Root::positive(rank) {
                for k in -2..=2i64 {
                    let gamma = weyl::AffineRoot::new(root, k);
                    let r = AffineWeylElt::reflection(rank, &gamma);
                    assert_eq!(
                        r.compose(&z).unwrap().moment_image(),
                        img.mirror(&gamma)
                    );
                }
            }
        }
    }
    finish("supporting reflection/moment compatibility", started, 10.0);
}
