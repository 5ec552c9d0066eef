//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! ```bash
//! cargo test -p invgeo --test acceptance
//! ```

mod common;

use std::f64::consts::{SQRT_2, TAU};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use invgeo::householder::PythagoreanRoot;
use invgeo::matfun::jordan_block_root;
use invgeo::oracle::{brute_force_roots, OracleCount, OracleGrid};
use invgeo::quadric::{bell_basis, generator_identity_residual, generator_point, principal_section_point, ruling_direction};
use invgeo::splitquat::{unit_root_identity, unit_root_neg};
use invgeo::*;

const TOL: Tolerance = Tolerance { abs_tol: 1e-9, exact_tol: 1e-12 };

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, id: &str, title: &str, checks: &[(&str, bool, String)]) {
        let ok = checks.iter().all(|c| c.1);
        if !ok {
            self.failed += 1;
        }
        println!("[{}] criterion {id}: {title}", if ok { "PASS" } else { "FAIL" });
        for (name, pass, detail) in checks {
            println!("         {} {name}: {detail}", if *pass { "ok " } else { "BAD" });
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn m(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
    Mat2::new(a, b, c, d).unwrap()
}

/// `X² - target` with the product written out by hand.
fn square_gap(x: &Mat2, target: &Mat2) -> f64 {
    let [a, b, c, d] = x.entries();
    let [p, q, r, s] = target.entries();
    [a * a + b * c - p, a * b + b * d - q, c * a + d * c - r, c * b + d * d - s].iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
}

fn criterion_1(rep: &mut Report) {
    let inv = sample_involutions(10_000, 1, 10.0).unwrap();
    let skew = sample_skew_involutions(10_000, 2, 10.0).unwrap();
    let worst_inv = inv.iter().map(|r| square_gap(r, &Mat2::IDENTITY)).fold(0.0, f64::max);
    let worst_skew = skew.iter().map(|r| square_gap(r, &Mat2::NEG_IDENTITY)).fold(0.0, f64::max);
    let in_range = inv.iter().chain(&skew).all(|r| r.a().abs() <= 10.0 && r.b().abs() <= 10.0 && r.b().abs() >= 1e-3);
    rep.line(
        "1",
        "family correctness",
        &[
            ("10^4 general roots, |R^2 - I| <= 1e-9", worst_inv <= 1e-9, format!("worst {worst_inv:.2e}")),
            ("10^4 skew roots, |R^2 + I| <= 1e-9", worst_skew <= 1e-9, format!("worst {worst_skew:.2e}")),
            ("parameters within |a|,|b| <= 10, |b| >= 1e-3", in_range, format!("{}", in_range)),
        ],
    );
}

fn criterion_2(rep: &mut Report) {
    let cls = |a: f64, b: f64| classify_quadric(LocusParams::new(a, b).unwrap());
    let c = cls(0.0, -1.0);
    let named = c.kind == SurfaceKind::OneSheetHyperboloid
        && c.radius_sq == 2.0
        && cls(1.0, 0.0).kind == SurfaceKind::OneSheetHyperboloid
        && cls(0.0, 0.0).kind == SurfaceKind::RightCircularCone
        && cls(0.0, 1.0).kind == SurfaceKind::TwoSheetHyperboloid;
    // alpha = i/2, beta = j/2, so 4(alpha^2 - 4 beta) = i^2 - 8j exactly
    let mut mismatches = 0;
    for i in -10i64..=10 {
        for j in -10i64..=10 {
            let expected = match (i * i - 8 * j).signum() {
                1 => SurfaceKind::OneSheetHyperboloid,
                0 => SurfaceKind::RightCircularCone,
                _ => SurfaceKind::TwoSheetHyperboloid,
            };
            let got = cls(i as f64 / 2.0, j as f64 / 2.0);
            let radius = (i * i) as f64 / 8.0 - j as f64;
            if got.kind != expected || got.radius_sq != radius {
                mismatches += 1;
            }
        }
    }
    rep.line(
        "2",
        "quadric reproduction",
        &[
            ("(0,-1) one-sheet r^2=2, (1,0) one-sheet, (0,0) cone, (0,1) two-sheet", named, format!("{:?}", c)),
            ("21x21 grid over [-5,5]^2 follows sign(alpha^2 - 4 beta)", mismatches == 0, format!("{mismatches} mismatches of 441")),
        ],
    );
}

fn criterion_3(rep: &mut Report) {
    let basis = bell_basis();
    let mut ortho = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            let dot: f64 = (0..4).map(|k| basis[i][k] * basis[j][k]).sum();
            ortho = ortho.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    let mut r = rng(3);
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let x = m(r.random_range(-10.0..10.0), r.random_range(-10.0..10.0), r.random_range(-10.0..10.0), r.random_range(-10.0..10.0));
        let back = from_bell(to_bell(&x, x.trace(), TOL).unwrap()).unwrap();
        worst = worst.max(back.max_diff(&x));
    }
    let p = to_bell(&Mat2::diag(1.0, -1.0).unwrap(), 0.0, TOL).unwrap();
    let gap = (p.x - SQRT_2).abs().max(p.y.abs()).max(p.z.abs());
    rep.line(
        "3",
        "Bell frame",
        &[
            ("basis orthonormal <= 1e-15", ortho <= 1e-15, format!("{ortho:.2e}")),
            ("from_bell(to_bell(X)) = X <= 1e-12 on 10^3 matrices", worst <= 1e-12, format!("worst {worst:.2e}")),
            ("to_bell(diag(1,-1), 0) = (sqrt 2, 0, 0) <= 1e-15", gap <= 1e-15, format!("({}, {}, {})", p.x, p.y, p.z)),
        ],
    );
}

/// Largest `|X - λY|` after scaling both to unit max-norm with a common sign.
fn parallel_gap(x: &Mat2, y: &Mat2) -> f64 {
    let xs = x.scale(1.0 / x.max_norm());
    let ys = y.scale(1.0 / y.max_norm());
    xs.max_diff(&ys).min(xs.max_diff(&-ys))
}

fn criterion_4(rep: &mut Report) {
    let mut r = rng(4);
    let mut worst_ident = 0.0_f64;
    let mut worst_line = 0.0_f64;
    let mut retries = 0;
    let mut points = 0;
    while points < 100 {
        let (u, v) = (r.random_range(-2.0..2.0_f64), r.random_range(0.0..TAU));
        let a = from_bell(BellPoint { x: SQRT_2 * u.cosh() * v.cos(), y: SQRT_2 * u.cosh() * v.sin(), z: SQRT_2 * u.sinh(), alpha: 0.0 })
            .unwrap();
        let seed = m(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0), r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
        let pair = match generator_directions(&a, &seed, TOL) {
            Ok(p) => p,
            Err(Error::DegenerateSeed) => {
                retries += 1;
                continue;
            }
            Err(e) => panic!("{a}: {e}"),
        };
        points += 1;
        worst_ident = worst_ident.max(generator_identity_residual(&a, &pair));
        for t in [-2.0, -0.5, 1.0, 3.0] {
            worst_line = worst_line.max(square_gap(&generator_point(&a, &pair.u, t), &Mat2::IDENTITY));
            worst_line = worst_line.max(square_gap(&generator_point(&a, &pair.v, t), &Mat2::IDENTITY));
        }
    }
    // closed form from the seed X = [1, 0; 0, 0] on the principal section
    let e11 = m(1.0, 0.0, 0.0, 0.0);
    let mut worst_paper_u = 0.0_f64;
    let mut worst_paper_as_v = 0.0_f64;
    for k in 0..16 {
        let phi = 0.1 + TAU * k as f64 / 16.0;
        let (s, c) = phi.sin_cos();
        let a = principal_section_point(phi).unwrap();
        let paper_u = m(-s, c - 1.0, c + 1.0, s);
        let u = ruling_direction(&a, &e11, Ruling::First, TOL).unwrap();
        let v = ruling_direction(&a, &e11, Ruling::Second, TOL).unwrap();
        worst_paper_u = worst_paper_u.max(parallel_gap(&u, &paper_u));
        worst_paper_as_v = worst_paper_as_v.max(parallel_gap(&v, &paper_u));
    }
    rep.line(
        "4",
        "generators",
        &[
            (
                "six identities <= 1e-9 at 100 surface points",
                worst_ident <= 1e-9,
                format!("worst {worst_ident:.2e} ({retries} seed retries)"),
            ),
            ("(A+tU)^2 = I and (A+tV)^2 = I <= 1e-8, t in {-2,-0.5,1,3}", worst_line <= 1e-8, format!("worst {worst_line:.2e}")),
            (
                "closed-form U parallel to [-sin, cos-1; cos+1, sin] <= 1e-9",
                worst_paper_u <= 1e-9,
                format!("gap {worst_paper_u:.2e}; that matrix is parallel to V instead (gap {worst_paper_as_v:.2e})"),
            ),
        ],
    );
}

fn criterion_5(rep: &mut Report) {
    let mut r = rng(5);
    let quat = |r: &mut ChaCha8Rng| {
        SplitQuat::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0), r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)).unwrap()
    };
    let mut hom = 0.0_f64;
    let mut det = 0.0_f64;
    for _ in 0..10_000 {
        let (p, q) = (quat(&mut r), quat(&mut r));
        hom = hom.max((p * q).to_matrix().max_diff(&(p.to_matrix() * q.to_matrix())));
        det = det.max((p.to_matrix().det() - p.modulus()).abs());
    }
    // dyadic coefficients make (w+z) and (w-z) exact, so the round trip can be checked bit for bit
    let mut inexact = 0;
    for _ in 0..10_000 {
        let mut dy = || r.random_range(-4096i32..=4096) as f64 / 512.0;
        let q = SplitQuat::new(dy(), dy(), dy(), dy()).unwrap();
        if SplitQuat::from_matrix(&q.to_matrix()) != q {
            inexact += 1;
        }
    }
    let mut worst_pos = 0.0_f64;
    let mut worst_neg = 0.0_f64;
    for i in 0..13 {
        let t = -1.2 + 2.4 * i as f64 / 12.0;
        for k in 0..16 {
            let phi = TAU * k as f64 / 16.0;
            let q = unit_root_identity(t, phi);
            worst_pos = worst_pos.max((q * q).max_diff(&SplitQuat::ONE));
            let n = unit_root_neg(t, phi).unwrap();
            worst_neg = worst_neg.max((n * n).max_diff(&SplitQuat::scalar(-1.0)));
        }
    }
    rep.line(
        "5",
        "split-quaternion isomorphism",
        &[
            ("to_matrix(pq) = to_matrix(p) to_matrix(q) <= 1e-12, 10^4 pairs", hom <= 1e-12, format!("worst {hom:.2e}")),
            ("det(to_matrix(q)) = qq* <= 1e-12", det <= 1e-12, format!("worst {det:.2e}")),
            ("from_matrix(to_matrix(q)) = q exactly, 10^4 dyadic q", inexact == 0, format!("{inexact} inexact")),
            ("roots of +1 on a 13x16 (t, phi) grid <= 1e-10", worst_pos <= 1e-10, format!("worst {worst_pos:.2e}")),
            ("roots of -1 on a 13x16 (t, phi) grid <= 1e-10", worst_neg <= 1e-10, format!("worst {worst_neg:.2e}")),
        ],
    );
}

fn criterion_6(rep: &mut Report) {
    let mut worst = 0.0_f64;
    let mut symmetric = true;
    for k in 0..64 {
        let phi = TAU * k as f64 / 64.0;
        let h = householder_from_angle(phi).unwrap();
        let v = UnitVec2::mirror_normal(phi).to_vec2();
        symmetric &= h.b() == h.c();
        worst = worst.max(square_gap(&h, &Mat2::IDENTITY));
        worst = worst.max((h.det() + 1.0).abs());
        worst = worst.max((h * v).max_diff(-v));
    }
    let exact = [(3, 4, 5), (5, 12, 13)].iter().all(|&(r, s, t)| PythagoreanRoot::new(r, s, t).unwrap().squares_to_identity_exactly());
    // the same check by hand on [r, s; s, -r] / t in integers
    let by_hand = [(3i64, 4i64, 5i64), (5, 12, 13)].iter().all(|&(r, s, t)| {
        let m = [[r, s], [s, -r]];
        (0..2).all(|i| (0..2).all(|j| m[i][0] * m[0][j] + m[i][1] * m[1][j] == if i == j { t * t } else { 0 }))
    });
    rep.line(
        "6",
        "Householder reflections",
        &[
            ("H^2 = I, det H = -1, Hv = -v <= 1e-12 over 64 angles", worst <= 1e-12, format!("worst {worst:.2e}")),
            ("H symmetric", symmetric, format!("{symmetric}")),
            ("(3,4,5) and (5,12,13) roots square to I in integers", exact && by_hand, format!("{}", exact && by_hand)),
        ],
    );
}

fn criterion_7(rep: &mut Report) {
    let br = sqrt_branches(&Mat2::diag(1.0, 4.0).unwrap(), TOL).unwrap();
    let expected: Vec<Mat2> =
        [(1.0, 2.0), (-1.0, -2.0), (1.0, -2.0), (-1.0, 2.0)].iter().map(|&(p, q)| Mat2::diag(p, q).unwrap()).collect();
    let four = br.len() == 4 && expected.iter().all(|e| br.all().any(|r| r == e));

    let mut jordan = 0.0_f64;
    let mut jordan_ok = true;
    for l in [0.25, 1.0, 2.0, 9.0] {
        let a = m(l, 1.0, 0.0, l);
        let br = sqrt_branches(&a, TOL).unwrap();
        let formula = jordan_block_root(l);
        jordan_ok &= br.len() == 2 && br.all().all(|r| r.max_diff(&formula).min(r.max_diff(&-formula)) <= 1e-15);
        for r in br.all() {
            jordan = jordan.max(square_gap(r, &a));
        }
    }

    let nil = m(0.0, 1.0, 0.0, 0.0);
    let nil_none = sqrt_branches(&nil, TOL).unwrap().is_empty() && count_real_roots(&nil, TOL).unwrap() == RootCardinality::Zero;

    let suite = [
        ("I", Mat2::IDENTITY),
        ("-I", Mat2::NEG_IDENTITY),
        ("4I", Mat2::scalar(4.0).unwrap()),
        ("diag(5,0)", Mat2::diag(5.0, 0.0).unwrap()),
        ("[1,1;0,1]", m(1.0, 1.0, 0.0, 1.0)),
        ("[0,1;0,0]", nil),
        ("diag(1,4)", Mat2::diag(1.0, 4.0).unwrap()),
        ("[0,1;-2,3]", m(0.0, 1.0, -2.0, 3.0)),
        ("diag(-1,-4)", Mat2::diag(-1.0, -4.0).unwrap()),
        ("0", Mat2::ZERO),
    ];
    let mut disagreements = Vec::new();
    for (name, a) in suite {
        let ours = count_real_roots(&a, TOL).unwrap();
        let oracle = OracleCount::of(&brute_force_roots(&a, &OracleGrid::default()));
        let agree = matches!((ours, oracle), (RootCardinality::Zero, OracleCount::Zero) | (RootCardinality::Infinite, OracleCount::Many))
            || matches!((ours, oracle), (RootCardinality::Finite(x), OracleCount::Finite(y)) if x == y);
        if !agree {
            disagreements.push(format!("{name}: {ours:?} vs {oracle:?}"));
        }
    }
    rep.line(
        "7",
        "matrix square roots",
        &[
            ("sqrt_branches(diag(1,4)) = {diag(+-1, +-2)} exactly", four, format!("{} roots", br.len())),
            (
                "Jordan-block roots square back <= 1e-12, lambda in {0.25,1,2,9}",
                jordan <= 1e-12 && jordan_ok,
                format!("worst {jordan:.2e}"),
            ),
            ("[0,1;0,0] has no square root", nil_none, format!("{nil_none}")),
            ("count_real_roots agrees with the brute-force oracle on 10 matrices", disagreements.is_empty(), format!("{disagreements:?}")),
        ],
    );
}

fn criterion_8(rep: &mut Report) {
    let general = sample_involutions(1000, 8, 10.0).unwrap();
    let worst_general = general.iter().map(|x| decompose_general(x, TOL).unwrap().recompose().max_diff(x)).fold(0.0, f64::max);

    let mut r = rng(8);
    let mut worst_case = 0.0_f64;
    for _ in 0..250 {
        let p = r.random_range(-10.0..10.0);
        for fam in [
            RootFamily::Identity,
            RootFamily::NegIdentity,
            RootFamily::UpperBPlusMinus { b: p },
            RootFamily::UpperBMinusPlus { b: p },
            RootFamily::LowerCPlusMinus { c: p },
            RootFamily::LowerCMinusPlus { c: p },
        ] {
            worst_case = worst_case.max(decompose_case(fam).unwrap().recompose().max_diff(&make_case_root(fam).unwrap()));
        }
    }

    // R²p is formed from entries of size up to ~1e5, so the period checks
    // are relative to ‖R‖²·‖p‖
    let skew = sample_skew_involutions(1000, 9, 10.0).unwrap();
    let mut worst_period = 0.0_f64;
    for (inv, sk) in general.iter().zip(&skew) {
        let p = Vec2::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)).unwrap();
        for (t, half_turn) in [(inv, p), (sk, -p)] {
            let n2 = t.max_norm().powi(2).max(1.0) * p.norm();
            let o = orbit(t, p, 4).unwrap();
            worst_period = worst_period.max(o[2].max_diff(half_turn) / n2).max(o[4].max_diff(p) / (n2 * n2 / p.norm()));
        }
    }
    rep.line(
        "8",
        "plane-transform decompositions",
        &[
            ("decompose_general recomposes <= 1e-9, 10^3 roots", worst_general <= 1e-9, format!("worst {worst_general:.2e}")),
            ("decompose_case products match constructors <= 1e-12", worst_case <= 1e-12, format!("worst {worst_case:.2e}")),
            (
                "orbits: T^2 p = p for involutions, T^2 p = -p and T^4 p = p for skew (relative 1e-9)",
                worst_period <= 1e-9,
                format!("worst relative {worst_period:.2e} over 10^3 + 10^3 orbits"),
            ),
        ],
    );
}

fn criterion_9(rep: &mut Report) {
    let mut unstable = Vec::new();
    let mut stale = Vec::new();
    for (name, args) in common::CASES {
        let (first, second) = (common::invgeo(args), common::invgeo(args));
        if first.status.code() != Some(0) || first.stdout != second.stdout {
            unstable.push(*name);
        }
        if std::fs::read(common::golden_dir().join(name)).ok().as_deref() != Some(&first.stdout[..]) {
            stale.push(*name);
        }
    }
    let bad = common::invgeo(&["decompose", "--matrix", "{\"a\":1,"]);
    let doc: Option<serde_json::Value> = serde_json::from_slice(&bad.stderr).ok();
    let json_err = bad.status.code() == Some(2) && doc.as_ref().is_some_and(|d| d["error"].is_string());
    rep.line(
        "9",
        "command line",
        &[
            (
                "every golden case is byte-identical across two runs",
                unstable.is_empty(),
                format!("{} cases, unstable {unstable:?}", common::CASES.len()),
            ),
            ("outputs match the checked-in golden files", stale.is_empty(), format!("mismatched {stale:?}")),
            (
                "malformed input exits 2 with a JSON error",
                json_err,
                format!("exit {:?}, {}", bad.status.code(), String::from_utf8_lossy(&bad.stderr).trim_end()),
            ),
        ],
    );
}

fn main() -> ExitCode {
    let mut rep = Report { failed: 0 };
    criterion_1(&mut rep);
    criterion_2(&mut rep);
    criterion_3(&mut rep);
    criterion_4(&mut rep);
    criterion_5(&mut rep);
    criterion_6(&mut rep);
    criterion_7(&mut rep);
    criterion_8(&mut rep);
    criterion_9(&mut rep);
    println!("\n{} of 9 criteria passed", 9 - rep.failed);
    if rep.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
