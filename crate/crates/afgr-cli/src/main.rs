//! `afgr` — exact combinatorics of the central degeneration of the type A
//! affine Grassmannian, on the command line.
//!
//! Exit codes: 0 success (and all golden values matched for `examples`),
//! 1 domain error (empty cycle, non-dominant coweight, …), 2 usage error.

mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use afgr::corpus::{self, DEFAULT_CAP};
use afgr::degeneration::{self, bounds::Bound};
use afgr::dims;
use afgr::exec::Mode;
use afgr::json as schema;
use afgr::orders;
use afgr::polytope::{check_regular_subdivision, mv_polytope_sl3, Polytope, Subdivision};
use afgr::svg;
use afgr::weyl::{AffineRoot, AffineWeylElt, Coweight};

#[derive(Parser)]
#[command(name = "afgr", version, about = "Affine Grassmannian central degeneration toolkit")]
struct Cli {
    /// Ambient rank n of SL_n / GL_n (2..=6); inferred from vector
    /// arguments when omitted
    #[arg(long, global = true)]
    rank: Option<usize>,

    /// Coweight lattice mode: `sl` (sum-zero enforced) or `gl`
    #[arg(long, global = true, default_value = "sl")]
    mode: String,

    /// Output format: `text` or `json`
    #[arg(long, global = true, default_value = "text")]
    output: String,

    /// Cap on examined candidate subsets in bound enumerations
    /// (overrides the AFGR_CAP environment variable)
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Disable the internal parallel fan-out
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Affine Weyl group arithmetic
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Dominance and semi-infinite closure orders
    #[command(subcommand)]
    Order(OrderCmd),
    /// Exact polytope geometry
    #[command(subcommand)]
    Polytope(PolyCmd),
    /// Central degeneration rules
    #[command(subcommand)]
    Degen(DegenCmd),
    /// Dimension formulas
    #[command(subcommand)]
    Dims(DimsCmd),
    /// Run the golden SL3 example corpus
    Examples {
        /// Run a single case: point, p1, triangle, trapezoid, hexagon
        #[arg(long)]
        case: Option<String>,
    },
    /// Render a polytope to SVG (ranks 2 and 3)
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Compose two elements
    Compose {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Evaluate a word in the simple generators s₀ … s_{n−1}
    Word {
        #[arg(long)]
        word: String,
    },
    /// Iwahori–Matsumoto length
    Length {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Strong Bruhat order test x ≤ y
    Bruhat {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Affine reflection across {⟨·, α⟩ = k}, optionally applied to a coweight
    Reflect {
        #[arg(long)]
        root: String,
        #[arg(long, default_value_t = 0)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        apply: Option<String>,
    },
    /// Moment-map image (alcove-lattice vertex) of a fixed point
    Moment {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Dominance order on coweights
    Dominance {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Semi-infinite closure order for U_w orbits (both pictures)
    Semiinf {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Finite Weyl element indexing U_w (default w0)
        #[arg(long, default_value = "w0")]
        w: String,
        /// Which characterisation: lattice, cone or both
        #[arg(long, default_value = "both")]
        picture: String,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Convex hull of a point list
    Hull {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Root-direction dimension estimate (vertex-independent count)
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mv: Option<String>,
    },
    /// SL3 MV polytope from Minkowski coefficients c1,c2,c3,c4
    Mv {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Minkowski sum of two polytopes
    Minkowski {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Lattice points of v + Λ inside the polytope
    LatticePoints {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Root-direction count at one vertex
    RootCount {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Regular-subdivision check via the lifting LP
    RegularCheck {
        #[arg(long, allow_hyphen_values = true)]
        outer: String,
        /// Cells as point lists separated by `|`
        #[arg(long, allow_hyphen_values = true)]
        cells: String,
    },
}

#[derive(Subcommand)]
enum DegenCmd {
    /// Limit of a Gr fixed point
    Point {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Limit of the invariant P¹ joining t^{β₁} and t^{β₂}
    P1 {
        #[arg(long, allow_hyphen_values = true)]
        b1: String,
        #[arg(long, allow_hyphen_values = true)]
        b2: String,
    },
    /// The α′ rule for a root subgroup
    Root {
        #[arg(long)]
        root: String,
        #[arg(long, default_value_t = 0)]
        level: i64,
    },
    /// Distinguished component of a product of root-subgroup orbits
    Product {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Affine roots `i,j:k` separated by `|` (k defaults to 0)
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        roots: String,
    },
    /// Limit of a closed U_w orbit, with optional membership test
    Semiinf {
        #[arg(long, default_value = "w0")]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        contains: Option<String>,
    },
    /// λ-admissible set and its maximal elements
    Admissible {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Limit of a G(O) orbit: components and exact count
    GoLimit {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Component bounds for a limit with the given polytope and dimension
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        dim: i64,
    },
    /// SL2 MV-cycle limit structure
    Sl2Mv {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// SL2 Iwahori-orbit limit anchors
    Sl2Iwahori {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long)]
        opposite: bool,
    },
}

#[derive(Subcommand)]
enum DimsCmd {
    /// Height of a coroot-lattice element
    Height {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Dimension of the Iwahori orbit I^λ in Gr
    GrIwahori {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Dimension of the Iwahori orbit in Fl (= length)
    FlIwahori {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Equidimensional intersection S_{w₀}^μ ∩ I^λ in Gr
    GrIntersection {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Upper bound for S_{w₀}^{w₂} ∩ I^{w₁} in Fl
    FlBound {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Args)]
struct RenderArgs {
    /// A named polytope: point, p1, triangle, trapezoid, hexagon
    #[arg(long)]
    polytope: Option<String>,
    /// Or SL3 Minkowski coefficients c1,c2,c3,c4
    #[arg(long, allow_hyphen_values = true)]
    mv: Option<String>,
    /// Or an explicit point list
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// Output file
    #[arg(long)]
    out: String,
}

struct Output {
    text: String,
    json: Value,
}

enum Failure {
    Usage(String),
    Domain(afgr::Error),
    GoldenMismatch,
}

impl From<afgr::Error> for Failure {
    fn from(e: afgr::Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = Result<Output, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Ctx {
    rank: Option<usize>,
    sl_mode: bool,
    cap: u64,
    mode: Mode,
}

impl Ctx {
    fn rank_for(&self, vectors: &[&Coweight]) -> Result<usize, Failure> {
        let inferred = vectors.first().map(|c| c.rank());
        let rank = self.rank.or(inferred).unwrap_or(3);
        if !(2..=6).contains(&rank) {
            return Err(usage(format!("rank {} out of supported range 2..=6", rank)));
        }
        for v in vectors {
            if v.rank() != rank {
                return Err(usage(format!(
                    "coweight {:?} does not match rank {}",
                    v.coords(),
                    rank
                )));
            }
        }
        Ok(rank)
    }

    fn check_sl(&self, vectors: &[&Coweight]) -> Result<(), Failure> {
        if self.sl_mode {
            for v in vectors {
                v.check_sum_zero().map_err(Failure::Domain)?;
            }
        }
        Ok(())
    }
}

fn parse_cw(s: &str) -> Result<Coweight, Failure> {
    parse::coweight(s).map_err(usage)
}

fn parse_elt(s: &str, rank: usize) -> Result<AffineWeylElt, Failure> {
    parse::element(s, rank).map_err(usage)
}

fn parse_polytope(s: &str, ctx: &Ctx) -> Result<Polytope, Failure> {
    let pts = parse::points(s).map_err(usage)?;
    let refs: Vec<&Coweight> = pts.iter().collect();
    ctx.rank_for(&refs)?;
    ctx.check_sl(&refs)?;
    Ok(Polytope::from_coweights(&pts)?)
}

fn elt_value(x: &AffineWeylElt) -> Value {
    serde_json::to_value(schema::elt_json(x, true)).unwrap()
}

fn elt_text(x: &AffineWeylElt) -> String {
    match x.try_reduced_word() {
        Some(word) => format!(
            "trans {:?}, perm {:?}, word {:?}",
            x.trans().coords(),
            x.fin().images(),
            word
        ),
        None => format!(
            "trans {:?}, perm {:?} (extended element, no word)",
            x.trans().coords(),
            x.fin().images()
        ),
    }
}

fn polytope_value(p: &Polytope) -> Result<Value, Failure> {
    Ok(serde_json::to_value(schema::polytope_json(p)?).unwrap())
}

fn run_weyl(cmd: &WeylCmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        WeylCmd::Compose { x, y } => {
            let probe = x.strip_prefix("t:").and_then(|r| r.split(";p:").next());
            let rank = match probe {
                Some(t) => ctx.rank_for(&[&parse_cw(t)?])?,
                None => ctx.rank_for(&[])?,
            };
            let (x, y) = (parse_elt(x, rank)?, parse_elt(y, rank)?);
            let z = x.compose(&y)?;
            Ok(Output {
                text: elt_text(&z),
                json: elt_value(&z),
            })
        }
        WeylCmd::Word { word } => {
            let rank = ctx.rank_for(&[])?;
            let word = parse::usizes(word).map_err(usage)?;
            let z = AffineWeylElt::from_word(rank, &word)?;
            Ok(Output {
                text: elt_text(&z),
                json: elt_value(&z),
            })
        }
        WeylCmd::Length { x } => {
            let rank = ctx.rank_for(&[])?;
            let x = parse_elt(x, rank)?;
            if ctx.sl_mode {
                x.trans().check_sum_zero()?;
            }
            let len = x.length();
            Ok(Output {
                text: format!("{}", len),
                json: json!({ "length": len }),
            })
        }
        WeylCmd::Bruhat { x, y } => {
            let rank = ctx.rank_for(&[])?;
            let (x, y) = (parse_elt(x, rank)?, parse_elt(y, rank)?);
            let leq = afgr::weyl::bruhat_leq(&x, &y)?;
            Ok(Output {
                text: format!("{}", leq),
                json: json!({ "leq": leq }),
            })
        }
        WeylCmd::Reflect { root, level, apply } => {
            let rank = ctx.rank_for(&[])?;
            let root = parse::root(root, rank).map_err(usage)?;
            let gamma = AffineRoot::new(root, *level);
            let r = AffineWeylElt::reflection(rank, &gamma);
            let mut json = json!({ "reflection": elt_value(&r) });
            let mut text = elt_text(&r);
            if let Some(apply) = apply {
                let x = parse_cw(apply)?;
                ctx.rank_for(&[&x])?;
                let image = r.act(&x);
                text = format!("{} | image {:?}", text, image.coords());
                json["image"] = json!(schema::coweight_json(&image));
            }
            Ok(Output { text, json })
        }
        WeylCmd::Moment { x } => {
            let rank = ctx.rank_for(&[])?;
            let x = parse_elt(x, rank)?;
            let img = x.moment_image();
            Ok(Output {
                text: format!("{:?}", img),
                json: serde_json::to_value(schema::point_json(&img)?).unwrap(),
            })
        }
    }
}

fn run_order(cmd: &OrderCmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        OrderCmd::Dominance { a, b } => {
            let (a, b) = (parse_cw(a)?, parse_cw(b)?);
            ctx.rank_for(&[&a, &b])?;
            let leq = orders::dominance_leq(&a, &b)?;
            Ok(Output {
                text: format!("{}", leq),
                json: json!({ "leq": leq }),
            })
        }
        OrderCmd::Semiinf { x, y, w, picture } => {
            let rank = ctx.rank_for(&[])?;
            let (x, y) = (parse_elt(x, rank)?, parse_elt(y, rank)?);
            let w = parse::finite(w, rank).map_err(usage)?;
            let lattice = orders::semiinf_leq_lattice(&x, &y, &w)?;
            let cone = orders::semiinf_leq_cone(&x, &y, &w)?;
            let (text, json) = match picture.as_str() {
                "lattice" => (format!("{}", lattice), json!({ "leq": lattice })),
                "cone" => (format!("{}", cone), json!({ "leq": cone })),
                "both" => (
                    format!("lattice {} | cone {}", lattice, cone),
                    json!({ "lattice": lattice, "cone": cone, "agree": lattice == cone }),
                ),
                other => return Err(usage(format!("unknown picture {:?}", other))),
            };
            Ok(Output { text, json })
        }
    }
}

fn run_polytope(cmd: &PolyCmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        PolyCmd::Hull { points } => {
            let p = parse_polytope(points, ctx)?;
            Ok(Output {
                text: format!("{} vertices: {:?}", p.num_vertices(), p.vertices()),
                json: polytope_value(&p)?,
            })
        }
        PolyCmd::Dim { points, mv } => {
            let p = match (points, mv) {
                (Some(points), None) => parse_polytope(points, ctx)?,
                (None, Some(mv)) => parse_mv(mv)?,
                _ => return Err(usage("give exactly one of --points / --mv")),
            };
            let dim = p.dimension_estimate()?;
            Ok(Output {
                text: format!("{}", dim),
                json: json!({ "dimension": dim }),
            })
        }
        PolyCmd::Mv { coeffs } => {
            let p = parse_mv(coeffs)?;
            Ok(Output {
                text: format!("{} vertices: {:?}", p.num_vertices(), p.vertices()),
                json: polytope_value(&p)?,
            })
        }
        PolyCmd::Minkowski { p, q } => {
            let (p, q) = (parse_polytope(p, ctx)?, parse_polytope(q, ctx)?);
            let s = p.minkowski_sum(&q)?;
            Ok(Output {
                text: format!("{} vertices: {:?}", s.num_vertices(), s.vertices()),
                json: polytope_value(&s)?,
            })
        }
        PolyCmd::LatticePoints { points, v } => {
            let p = parse_polytope(points, ctx)?;
            let v = parse_cw(v)?;
            let pts = p.coset_lattice_points(&v)?;
            Ok(Output {
                text: format!("{} points: {:?}", pts.len(), pts),
                json: json!(pts
                    .iter()
                    .map(schema::coweight_json)
                    .collect::<Vec<_>>()),
            })
        }
        PolyCmd::RootCount { points, v } => {
            let p = parse_polytope(points, ctx)?;
            let v = parse_cw(v)?;
            let count = p.root_direction_count(&v)?;
            Ok(Output {
                text: format!("{}", count),
                json: json!({ "count": count }),
            })
        }
        PolyCmd::RegularCheck { outer, cells } => {
            let outer = parse_polytope(outer, ctx)?;
            let cell_points = parse::cells(cells).map_err(usage)?;
            let mut cell_polys = Vec::new();
            for pts in &cell_points {
                cell_polys.push(Polytope::from_coweights(pts)?);
            }
            let report = check_regular_subdivision(&outer, &Subdivision::new(cell_polys)?)?;
            Ok(Output {
                text: format!(
                    "regular: {} (margin {}, witness checked: {})",
                    report.regular, report.margin, report.witness_checked
                ),
                json: serde_json::to_value(schema::regularity_json(&report)?).unwrap(),
            })
        }
    }
}

fn parse_mv(coeffs: &str) -> Result<Polytope, Failure> {
    let c = parse::i64s(coeffs).map_err(usage)?;
    if c.len() != 4 {
        return Err(usage("--mv needs four coefficients c1,c2,c3,c4"));
    }
    Ok(mv_polytope_sl3(c[0], c[1], c[2], c[3])?)
}

fn parse_affine_roots(s: &str, rank: usize) -> Result<Vec<AffineRoot>, Failure> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split('|')
        .map(|item| {
            let (root, level) = match item.split_once(':') {
                Some((r, k)) => (
                    r,
                    k.trim()
                        .parse::<i64>()
                        .map_err(|e| usage(format!("bad level {:?}: {}", k, e)))?,
                ),
                None => (item, 0),
            };
            let root = parse::root(root, rank).map_err(usage)?;
            Ok(AffineRoot::new(root, level))
        })
        .collect()
}

fn run_degen(cmd: &DegenCmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        DegenCmd::Point { beta } => {
            let beta = parse_cw(beta)?;
            ctx.rank_for(&[&beta])?;
            ctx.check_sl(&[&beta])?;
            let z = degeneration::degenerate_fixed_point(&beta);
            Ok(Output {
                text: elt_text(&z),
                json: elt_value(&z),
            })
        }
        DegenCmd::P1 { b1, b2 } => {
            let (b1, b2) = (parse_cw(b1)?, parse_cw(b2)?);
            ctx.rank_for(&[&b1, &b2])?;
            ctx.check_sl(&[&b1, &b2])?;
            let limit = degeneration::degenerate_p1(&b1, &b2)?;
            Ok(Output {
                text: format!(
                    "fixed points: {}; {}; {}",
                    elt_text(&limit.fixed_points[0]),
                    elt_text(&limit.fixed_points[1]),
                    elt_text(&limit.fixed_points[2])
                ),
                json: serde_json::to_value(schema::p1_limit_json(&limit)).unwrap(),
            })
        }
        DegenCmd::Root { root, level } => {
            let rank = ctx.rank_for(&[])?;
            let root = parse::root(root, rank).map_err(usage)?;
            let out = degeneration::degenerate_root_subgroup(&AffineRoot::new(root, *level));
            Ok(Output {
                text: format!("root {:?}, level {}", out.root.indices(), out.level),
                json: serde_json::to_value(schema::affine_root_json(&out)).unwrap(),
            })
        }
        DegenCmd::Product { mu, roots } => {
            let mu = parse_cw(mu)?;
            let rank = ctx.rank_for(&[&mu])?;
            ctx.check_sl(&[&mu])?;
            let gammas = parse_affine_roots(roots, rank)?;
            let (anchor, out) = degeneration::degenerate_product_orbit(&mu, &gammas)?;
            Ok(Output {
                text: format!(
                    "anchor {} | roots {:?}",
                    elt_text(&anchor),
                    out.iter()
                        .map(|g| (g.root.indices(), g.level))
                        .collect::<Vec<_>>()
                ),
                json: json!({
                    "anchor": elt_value(&anchor),
                    "roots": out.iter().map(schema::affine_root_json).collect::<Vec<_>>(),
                }),
            })
        }
        DegenCmd::Semiinf { w, mu, contains } => {
            let mu = parse_cw(mu)?;
            let rank = ctx.rank_for(&[&mu])?;
            ctx.check_sl(&[&mu])?;
            let w = parse::finite(w, rank).map_err(usage)?;
            let anchor = degeneration::degenerate_semiinfinite(&w, &mu);
            let mut json = json!({ "anchor": elt_value(&anchor) });
            let mut text = format!("anchor {}", elt_text(&anchor));
            if let Some(candidate) = contains {
                let y = parse_elt(candidate, rank)?;
                let inside = degeneration::semiinfinite_limit_contains(&w, &mu, &y)?;
                text = format!("{} | contains: {}", text, inside);
                json["contains"] = json!(inside);
            }
            Ok(Output { text, json })
        }
        DegenCmd::Admissible { lambda } => {
            let lambda = parse_cw(lambda)?;
            ctx.rank_for(&[&lambda])?;
            let adm = degeneration::admissible_set(&lambda)?;
            Ok(Output {
                text: format!(
                    "{} elements, {} maximal: {:?}",
                    adm.elements.len(),
                    adm.maximal.len(),
                    adm.maximal
                        .iter()
                        .map(AffineWeylElt::reduced_word)
                        .collect::<Vec<_>>()
                ),
                json: serde_json::to_value(schema::admissible_set_json(&adm)).unwrap(),
            })
        }
        DegenCmd::GoLimit { lambda } => {
            let lambda = parse_cw(lambda)?;
            ctx.rank_for(&[&lambda])?;
            let report = degeneration::go_orbit_limit(&lambda)?;
            Ok(Output {
                text: format!(
                    "{} components (lower = upper = exact)",
                    report.components.as_deref().map_or(0, |c| c.len())
                ),
                json: serde_json::to_value(schema::limit_report_json(&report)?).unwrap(),
            })
        }
        DegenCmd::Bounds { points, dim } => {
            let p = parse_polytope(points, ctx)?;
            let lower = degeneration::component_lower_bound(&p)?;
            let upper = degeneration::component_upper_bound(&p, *dim, ctx.cap, ctx.mode)?;
            let ptilde = degeneration::limit_polytope(&p)?;
            let report = degeneration::LimitReport {
                polytope: ptilde,
                lower_bound: lower,
                upper_bound: upper.clone(),
                components: None,
            };
            Ok(Output {
                text: match upper {
                    Bound::Finite(v) => format!("lower {} / upper {}", lower, v),
                    Bound::CapExceeded { partial, examined } => format!(
                        "lower {} / upper >= {} (cap exceeded after {} subsets)",
                        lower, partial, examined
                    ),
                },
                json: serde_json::to_value(schema::limit_report_json(&report)?).unwrap(),
            })
        }
        DegenCmd::Sl2Mv { lambda, mu } => {
            let (lambda, mu) = (parse_cw(lambda)?, parse_cw(mu)?);
            ctx.rank_for(&[&lambda, &mu])?;
            let lim = degeneration::sl2_mv_limit(&lambda, &mu)?;
            Ok(Output {
                text: format!(
                    "dim {} | {} fixed points | cells {:?} | components {:?}",
                    lim.dim,
                    lim.fixed_point_count,
                    lim.cells_by_dim,
                    lim.components
                        .iter()
                        .map(|c| c.trans().coords().to_vec())
                        .collect::<Vec<_>>()
                ),
                json: serde_json::to_value(schema::sl2_mv_limit_json(&lim)).unwrap(),
            })
        }
        DegenCmd::Sl2Iwahori { gamma, opposite } => {
            let gamma = parse_cw(gamma)?;
            ctx.rank_for(&[&gamma])?;
            let lim = degeneration::sl2_iwahori_limit(&gamma, *opposite)?;
            Ok(Output {
                text: format!(
                    "dim {} | translation anchor {} | orbit anchor {}",
                    lim.dim,
                    elt_text(&lim.translation_anchor),
                    elt_text(&lim.orbit_anchor)
                ),
                json: serde_json::to_value(schema::sl2_iwahori_limit_json(&lim)).unwrap(),
            })
        }
    }
}

fn run_dims(cmd: &DimsCmd, ctx: &Ctx) -> CmdResult {
    match cmd {
        DimsCmd::Height { lambda } => {
            let lambda = parse_cw(lambda)?;
            ctx.rank_for(&[&lambda])?;
            let h = dims::height(&lambda)?;
            Ok(Output {
                text: format!("{}", h),
                json: json!({ "height": h }),
            })
        }
        DimsCmd::GrIwahori { lambda } => {
            let lambda = parse_cw(lambda)?;
            ctx.rank_for(&[&lambda])?;
            let d = dims::iwahori_dim_gr(&lambda)?;
            Ok(Output {
                text: format!("{}", d),
                json: json!({ "dimension": d }),
            })
        }
        DimsCmd::FlIwahori { x } => {
            let rank = ctx.rank_for(&[])?;
            let x = parse_elt(x, rank)?;
            let d = dims::iwahori_dim_fl(&x);
            Ok(Output {
                text: format!("{}", d),
                json: json!({ "dimension": d }),
            })
        }
        DimsCmd::GrIntersection { lambda, mu } => {
            let (lambda, mu) = (parse_cw(lambda)?, parse_cw(mu)?);
            ctx.rank_for(&[&lambda, &mu])?;
            let r = dims::gr_intersection_dim(&lambda, &mu)?;
            Ok(Output {
                text: match r.dim() {
                    Some(d) => format!("{} (equidimensional)", d),
                    None => "empty".into(),
                },
                json: serde_json::to_value(schema::dim_result_json(&r)).unwrap(),
            })
        }
        DimsCmd::FlBound { x, y } => {
            let rank = ctx.rank_for(&[])?;
            let (x, y) = (parse_elt(x, rank)?, parse_elt(y, rank)?);
            let r = dims::fl_intersection_bound(&x, &y)?;
            Ok(Output {
                text: match r.dim() {
                    Some(d) => format!("<= {}", d),
                    None => "empty".into(),
                },
                json: serde_json::to_value(schema::dim_result_json(&r)).unwrap(),
            })
        }
    }
}

fn run_examples(case: &Option<String>, ctx: &Ctx) -> CmdResult {
    match case {
        None => {
            let report = corpus::run_corpus(ctx.cap, ctx.mode)?;
            let ok = report.all_pass;
            let out = Output {
                text: corpus::corpus_table(&report),
                json: serde_json::to_value(&report).unwrap(),
            };
            if ok {
                Ok(out)
            } else {
                print_output(&out, false);
                Err(Failure::GoldenMismatch)
            }
        }
        Some(name) => {
            let spec = corpus::CASES
                .iter()
                .find(|c| c.name == name.as_str())
                .ok_or_else(|| {
                    usage(format!(
                        "unknown case {:?}; available: {:?}",
                        name,
                        corpus::case_names()
                    ))
                })?;
            let case = corpus::run_case(spec, ctx.cap, ctx.mode)?;
            let ok = case.pass;
            let out = Output {
                text: format!(
                    "{}: lower bound {} (golden {}), component count {} (golden), upper bound {:?} -> {}",
                    case.name,
                    case.lower_bound,
                    case.golden_lower_bound,
                    case.known_components,
                    case.upper_bound,
                    if ok { "pass" } else { "FAIL" }
                ),
                json: serde_json::to_value(&case).unwrap(),
            };
            if ok {
                Ok(out)
            } else {
                print_output(&out, false);
                Err(Failure::GoldenMismatch)
            }
        }
    }
}

fn run_render(args: &RenderArgs, ctx: &Ctx) -> CmdResult {
    let named = |name: &str| -> Result<Polytope, Failure> {
        let spec = corpus::CASES
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| {
                usage(format!(
                    "unknown polytope {:?}; available: {:?}",
                    name,
                    corpus::case_names()
                ))
            })?;
        Ok(corpus::case_polytope(spec))
    };
    let p = match (&args.polytope, &args.mv, &args.points) {
        (Some(name), None, None) => named(name)?,
        (None, Some(mv), None) => parse_mv(mv)?,
        (None, None, Some(points)) => parse_polytope(points, ctx)?,
        _ => return Err(usage("give exactly one of --polytope / --mv / --points")),
    };
    let svg = svg::render_polytope(&p)?;
    std::fs::write(&args.out, &svg)
        .map_err(|e| usage(format!("cannot write {:?}: {}", args.out, e)))?;
    Ok(Output {
        text: format!("wrote {} ({} bytes)", args.out, svg.len()),
        json: json!({ "file": args.out, "bytes": svg.len() }),
    })
}

fn print_output(out: &Output, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string(&out.json).unwrap());
    } else {
        println!("{}", out.text);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = match cli.output.as_str() {
        "json" => true,
        "text" => false,
        other => {
            eprintln!("error: unknown output format {:?}", other);
            return ExitCode::from(2);
        }
    };
    let sl_mode = match cli.mode.as_str() {
        "sl" => true,
        "gl" => false,
        other => {
            eprintln!("error: unknown mode {:?} (use sl or gl)", other);
            return ExitCode::from(2);
        }
    };
    let cap = cli
        .cap
        .or_else(|| std::env::var("AFGR_CAP").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_CAP);
    let ctx = Ctx {
        rank: cli.rank,
        sl_mode,
        cap,
        mode: if cli.sequential {
            Mode::Sequential
        } else {
            Mode::Parallel
        },
    };
    let result = match &cli.command {
        Cmd::Weyl(cmd) => run_weyl(cmd, &ctx),
        Cmd::Order(cmd) => run_order(cmd, &ctx),
        Cmd::Polytope(cmd) => run_polytope(cmd, &ctx),
        Cmd::Degen(cmd) => run_degen(cmd, &ctx),
        Cmd::Dims(cmd) => run_dims(cmd, &ctx),
        Cmd::Examples { case } => run_examples(case, &ctx),
        Cmd::Render(args) => run_render(args, &ctx),
    };
    match result {
        Ok(out) => {
            print_output(&out, as_json);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
        Err(Failure::GoldenMismatch) => ExitCode::from(1),
    }
}
