//! Acceptance criteria, one line of output per criterion.
//!
//! Every comparison is exact. Randomized grids use a fixed ChaCha seed so a
//! failure reproduces bit for bit.

use std::process::ExitCode;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeta_infinity::germ::{
    acampo_zeta, lifted_point_zeta_inf, milnor_from_zeta, yomdin_point_zeta_inf,
    yomdin_point_zeta_inf_alt, AcampoData,
};
use zeta_infinity::perm::{permutation_power, zeta_of_permutation, Permutation};
use zeta_infinity::pipeline::{
    atypical_at_infinity, combine, curve_report, curve_zeta, family_zeta_zero, yomdin_zeta,
    CurveAttestations, CurveComponent, CurveProblem, FamilyParams, SingularPoint,
    StratificationProblem, Stratum, Verdict, YomdinPoint, YomdinProblem, ZetaMode,
};
use zeta_infinity::{IntPolynomial, RationalFunction, ZetaFactorization};

const SEED: u64 = 0x5eed_2e7a;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn z(pairs: &[(i64, i64)]) -> ZetaFactorization {
    ZetaFactorization::from_exponents(pairs.iter().copied()).unwrap()
}

fn cusp() -> AcampoData {
    AcampoData::new([(2, 1), (3, 1), (6, -1)]).unwrap()
}

fn random_zeta(rng: &mut ChaCha8Rng) -> ZetaFactorization {
    let n = rng.gen_range(0..=6);
    let pairs: Vec<(i64, i64)> = (0..n)
        .map(|_| (rng.gen_range(1..=30), rng.gen_range(-5..=5)))
        .collect();
    ZetaFactorization::from_exponents(pairs).unwrap()
}

fn random_acampo(rng: &mut ChaCha8Rng) -> AcampoData {
    let mut support: Vec<i64> = (1..=12).collect();
    support.shuffle(rng);
    let size = rng.gen_range(0..=12);
    AcampoData::new(support[..size].iter().map(|&m| (m, rng.gen_range(-5..=5)))).unwrap()
}

fn random_acampo_grid() -> Vec<AcampoData> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    (0..1000).map(|_| random_acampo(&mut rng)).collect()
}

fn criterion_family() -> Outcome {
    let r = family_zeta_zero(&FamilyParams {
        a: 2,
        b: 1,
        c: 1,
        d: 2,
    })
    .map_err(|e| e.to_string())?;
    ensure!(r.zeta0 == z(&[(3, 1)]), "(2,1,1,2): zeta0 = {}", r.zeta0);
    ensure!(r.lambda == 3, "(2,1,1,2): lambda = {}", r.lambda);
    ensure!(r.certified_atypical, "(2,1,1,2) not certified atypical");

    let r = family_zeta_zero(&FamilyParams {
        a: 3,
        b: 1,
        c: 2,
        d: 2,
    })
    .map_err(|e| e.to_string())?;
    ensure!(r.zeta0 == z(&[(2, 2)]), "(3,1,2,2): zeta0 = {}", r.zeta0);
    ensure!(r.lambda == 4, "(3,1,2,2): lambda = {}", r.lambda);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut tested = 0;
    while tested < 200 {
        let f = FamilyParams {
            a: rng.gen_range(1..=20),
            b: rng.gen_range(1..=20),
            c: rng.gen_range(1..=20),
            d: rng.gen_range(1..=20),
        };
        if f.a * f.d == f.b * f.c {
            continue;
        }
        tested += 1;
        let r = family_zeta_zero(&f).map_err(|e| e.to_string())?;
        let s = family_zeta_zero(&f.swapped()).map_err(|e| e.to_string())?;
        ensure!(r == s, "{f:?}: swap changes the result");
        let det = (f.a * f.d - f.b * f.c).abs();
        ensure!(
            det % r.gcd_value == 0,
            "{f:?}: G = {} does not divide {det}",
            r.gcd_value
        );
        ensure!(
            r.certified_atypical && atypical_at_infinity(&r.zeta0),
            "{f:?}: not certified"
        );
    }
    Ok(format!("goldens + {tested} randomized tuples"))
}

/// Integer partitions of `n` with parts at most `max`.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn criterion_power_transform() -> Outcome {
    let mut cases = 0;
    for n in 0..=8 {
        for cycle_type in partitions(n, n) {
            let p = Permutation::from_cycle_type(&cycle_type).map_err(|e| e.to_string())?;
            let zeta = zeta_of_permutation(&p).map_err(|e| e.to_string())?;
            for k in 1..=12 {
                let iterate = permutation_power(&p, k).map_err(|e| e.to_string())?;
                let lhs = zeta_of_permutation(&iterate).map_err(|e| e.to_string())?;
                let rhs = zeta.power_transform(k).map_err(|e| e.to_string())?;
                ensure!(
                    lhs == rhs,
                    "cycle type {cycle_type:?}, k={k}: {lhs} vs {rhs}"
                );
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (cycle type, k) pairs"))
}

fn criterion_route_equality() -> Outcome {
    let mut cases = 0;
    for a in random_acampo_grid() {
        for d in 2..=12 {
            for k in 1..d {
                let direct = yomdin_point_zeta_inf(&a, k, d).map_err(|e| e.to_string())?;
                let via_power = yomdin_point_zeta_inf_alt(&a, k, d).map_err(|e| e.to_string())?;
                ensure!(
                    direct == via_power,
                    "{a:?}, k={k}, d={d}: {direct} vs {via_power}"
                );
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn criterion_lifting_identity() -> Outcome {
    let mut cases = 0;
    for a in random_acampo_grid() {
        for d in 2..=12 {
            for k in 1..d {
                let point = yomdin_point_zeta_inf(&a, k, d).map_err(|e| e.to_string())?;
                for chi_d in -5..=5 {
                    let lifted =
                        lifted_point_zeta_inf(&a, chi_d, k, d).map_err(|e| e.to_string())?;
                    let expected = ZetaFactorization::cyclo_factor(d - k, chi_d - 1)
                        .and_then(|lead| lead.mul(&point))
                        .map_err(|e| e.to_string())?;
                    ensure!(lifted == expected, "{a:?}, chi_D={chi_d}, k={k}, d={d}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

/// det(I - tM) for a 2x2 integer matrix, as a polynomial in t.
fn det_one_minus_t(m: [[i64; 2]; 2]) -> IntPolynomial {
    let entry = |i: usize, j: usize| IntPolynomial::new(vec![i64::from(i == j), -m[i][j]]);
    let diag = entry(0, 0).mul(&entry(1, 1)).unwrap();
    let off = entry(0, 1).mul(&entry(1, 0)).unwrap();
    let coeff = |p: &IntPolynomial, i: usize| p.coeffs().get(i).copied().unwrap_or(0);
    IntPolynomial::new((0..3).map(|i| coeff(&diag, i) - coeff(&off, i)).collect())
}

fn criterion_acampo_goldens() -> Outcome {
    let cusp_zeta = acampo_zeta(&cusp()).map_err(|e| e.to_string())?;
    ensure!(
        cusp_zeta == z(&[(2, 1), (3, 1), (6, -1)]),
        "cusp zeta {cusp_zeta}"
    );
    // Monodromy of x^2 + y^3 on H_1 is the companion matrix of Phi_6 = t^2 - t + 1;
    // H_0 contributes (1 - t). zeta = (1 - t) / det(I - tM).
    let h1 = det_one_minus_t([[0, -1], [1, 1]]);
    let oracle = RationalFunction::new(IntPolynomial::new(vec![1, -1]), h1).unwrap();
    let reduced = cusp_zeta
        .expand()
        .and_then(|e| e.reduce())
        .map_err(|e| e.to_string())?;
    ensure!(
        reduced == oracle,
        "cusp reduced {reduced} vs oracle {oracle}"
    );
    ensure!(
        reduced.to_string() == "(1 - t)/(1 - t + t^2)",
        "cusp reduced {reduced}"
    );
    let mu = milnor_from_zeta(&cusp_zeta, 2).map_err(|e| e.to_string())?;
    ensure!(mu == 2, "cusp mu {mu}");

    // node: Milnor fibre C*, trivial monodromy
    let node = acampo_zeta(&AcampoData::new([(2, 0)]).unwrap()).map_err(|e| e.to_string())?;
    ensure!(node.is_unit(), "node zeta {node}");
    ensure!(milnor_from_zeta(&node, 2) == Ok(1), "node mu");

    // smooth: contractible fibre
    let smooth = acampo_zeta(&AcampoData::new([(1, 1)]).unwrap()).map_err(|e| e.to_string())?;
    ensure!(smooth == z(&[(1, 1)]), "smooth zeta {smooth}");
    ensure!(milnor_from_zeta(&smooth, 2) == Ok(0), "smooth mu");
    Ok("cusp, node, smooth".into())
}

fn cuspidal_cubic_curve() -> CurveProblem {
    CurveProblem {
        d: 3,
        k: 1,
        components: vec![CurveComponent {
            q: 1,
            deg: 3,
            chi: Some(2),
        }],
        sing_points: vec![SingularPoint {
            mu: 2,
            incident: vec![0],
            acampo_g: cusp(),
        }],
        attestations: CurveAttestations {
            lower_curve_reduced: true,
            points_off_lower_curve: true,
            multiple_components_transversal: true,
        },
    }
}

fn criterion_yomdin_curve() -> Outcome {
    let expected = z(&[(2, 1), (3, 1), (4, -1), (6, -1), (12, 1)]);
    let y = yomdin_zeta(&YomdinProblem {
        n: 2,
        d: 3,
        k: 1,
        points: vec![YomdinPoint {
            acampo: cusp(),
            mu: Some(2),
        }],
    })
    .map_err(|e| e.to_string())?;
    let c = curve_report(&cuspidal_cubic_curve()).map_err(|e| e.to_string())?;
    ensure!(y.zeta == expected, "yomdin zeta {}", y.zeta);
    ensure!(c.zeta.zeta == expected, "curve zeta {}", c.zeta.zeta);
    ensure!(
        y.degree == 7 && c.degree == 7,
        "degrees {} / {}",
        y.degree,
        c.degree
    );
    ensure!(c.mu == 6, "curve mu {}", c.mu);
    ensure!(c.degree == 1 + c.mu, "deg != 1 + mu");
    Ok(format!("zeta = {expected}"))
}

/// Two double lines `x^2 y^2` meeting in a node at `(0:0:1)`.
///
/// Hand evaluation (d = 4, dt = 2, mu = 1, chi(reduced curve) = 3):
/// * Xi^2: chi = 3 - 3 = 0.
/// * Xi^1_j: chi = 2 - (d-k) - 1; germ (y^2 + u^k)/u^4.
/// * Lambda^0_j: d-k points each, zeta 1.
/// * Q: blowing up once turns (xy)^2 into x^4 y1^2, so S_4 = P^1 minus two
///   points, chi(S_4) = 0 and zeta_g = 1; the germ gives (1 - t^(d-k)).
///
/// k = 3 (P = x^2 y^2 + x): Xi^1_j has chi 0, so zeta = (1 - t); mu = 27 - 3*15 + 9*2 = 0.
/// k = 2 (P = x^2 y^2 + generic conic): gcd(2,2) = 2, the line germ is
/// (1 - t^2)(1 - t^2)^-2 = (1 - t^2)^-1 with chi -1 on each line, so
/// zeta = (1 - t^2)^2 (1 - t^2) = (1 - t^2)^3; mu = 27 - 2*15 + 4*2 = 5.
fn double_lines(k: i64) -> CurveProblem {
    CurveProblem {
        d: 4,
        k,
        components: vec![
            CurveComponent {
                q: 2,
                deg: 1,
                chi: Some(2),
            },
            CurveComponent {
                q: 2,
                deg: 1,
                chi: Some(2),
            },
        ],
        sing_points: vec![SingularPoint {
            mu: 1,
            incident: vec![0, 1],
            acampo_g: AcampoData::new([(4, 0)]).unwrap(),
        }],
        attestations: CurveAttestations::default(),
    }
}

fn criterion_curve_goldens() -> Outcome {
    for (k, expected, mu) in [(3, z(&[(1, 1)]), 0), (2, z(&[(2, 3)]), 5)] {
        let r = curve_report(&double_lines(k)).map_err(|e| e.to_string())?;
        ensure!(r.zeta.zeta == expected, "k={k}: zeta {}", r.zeta.zeta);
        ensure!(
            r.zeta.aggregated == expected,
            "k={k}: aggregated {}",
            r.zeta.aggregated
        );
        ensure!(r.mu == mu, "k={k}: mu {}", r.mu);
        ensure!(r.degree == 1 + r.mu, "k={k}: deg {} != 1 + mu", r.degree);
        ensure!(r.verdict == Verdict::Consistent, "k={k}: verdict");
    }
    let r = curve_zeta(&cuspidal_cubic_curve()).map_err(|e| e.to_string())?;
    ensure!(
        r.inclusion_exclusion_holds,
        "cuspidal cubic inclusion-exclusion"
    );
    Ok("double lines with k = 3 and k = 2, cuspidal cubic".into())
}

fn criterion_stratification() -> Outcome {
    let smooth = combine(&StratificationProblem {
        n: 1,
        strata: vec![
            Stratum::new("CP^1 minus 3 points", -1, z(&[(3, 1)])),
            Stratum::new("3 points", 3, z(&[])),
        ],
        mode: ZetaMode::Infinite,
    })
    .map_err(|e| e.to_string())?;
    ensure!(smooth.zeta == z(&[(3, -1)]), "zeta {}", smooth.zeta);
    ensure!(smooth.chi_total == -3, "chi_P {}", smooth.chi_total);
    ensure!(smooth.chi_sum == 2, "sum chi {}", smooth.chi_sum);

    let y = yomdin_zeta(&YomdinProblem {
        n: 1,
        d: 3,
        k: 1,
        points: vec![],
    })
    .map_err(|e| e.to_string())?;
    ensure!(y.zeta == smooth.zeta, "yomdin route {}", y.zeta);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for case in 0..1000 {
        let n = rng.gen_range(1..=4);
        let count = rng.gen_range(0..=6);
        let strata = (0..count)
            .map(|_| Stratum::new("", rng.gen_range(-10..=10), random_zeta(&mut rng)))
            .collect();
        let mode = if rng.gen_bool(0.5) {
            ZetaMode::Infinite
        } else {
            ZetaMode::Zero
        };
        let r = combine(&StratificationProblem { n, strata, mode }).map_err(|e| e.to_string())?;
        let degree = r.zeta.degree().map_err(|e| e.to_string())?;
        ensure!(
            degree == r.chi_total,
            "case {case}: deg {degree} vs chi {}",
            r.chi_total
        );
    }
    Ok("smooth cubic + 1000 randomized problems".into())
}

fn criterion_zeta_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let e = |err: zeta_infinity::Error| err.to_string();
    for case in 0..500 {
        let a = random_zeta(&mut rng);
        let b = random_zeta(&mut rng);
        let k1 = rng.gen_range(1..=12);
        let k2 = rng.gen_range(1..=12);
        let r = rng.gen_range(1..=12);

        let deg_a = a.degree().map_err(e)?;
        let deg_b = b.degree().map_err(e)?;
        ensure!(
            a.mul(&b).map_err(e)?.degree().map_err(e)? == deg_a + deg_b,
            "case {case}: additivity"
        );
        ensure!(
            a.power_transform(k1).map_err(e)?.degree().map_err(e)? == deg_a,
            "case {case}: power_transform degree"
        );
        ensure!(
            a.power_transform(k1)
                .map_err(e)?
                .power_transform(k2)
                .map_err(e)?
                == a.power_transform(k1 * k2).map_err(e)?,
            "case {case}: composition law"
        );
        ensure!(
            a.substitute_power(r).map_err(e)?.degree().map_err(e)? == r * deg_a,
            "case {case}: substitute_power scaling"
        );
        ensure!(
            ZetaFactorization::parse(&a.to_string()).map_err(e)? == a,
            "case {case}: round trip"
        );
    }
    Ok("500 randomized values per law".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 family zeta0 reproduction", criterion_family),
        (
            "2 power-transform permutation oracle",
            criterion_power_transform,
        ),
        (
            "3 point germ: stratum route = power route",
            criterion_route_equality,
        ),
        ("4 lifting identity", criterion_lifting_identity),
        ("5 A'Campo golden germs", criterion_acampo_goldens),
        ("6 Yomdin / curve cross-consistency", criterion_yomdin_curve),
        ("7 curve goldens", criterion_curve_goldens),
        ("8 stratification sanity", criterion_stratification),
        ("9 zeta algebra suite", criterion_zeta_algebra),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {failures} of {} criteria failed",
            criteria.len()
        );
        ExitCode::FAILURE
    }
}
