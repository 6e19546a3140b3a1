use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use zeta_infinity::germ::{
    acampo_zeta, germ_zeta_inf, germ_zeta_zero, milnor_from_zeta, AcampoData, GermForm,
};
use zeta_infinity::perm::{permutation_power, zeta_of_permutation, Permutation};
use zeta_infinity::pipeline::{
    atypical_at_infinity, combine, curve_report, family_stratification, family_zeta_zero,
    lambda_invariant, yomdin_zeta, CurveProblem, FamilyParams, StratificationProblem, Stratum,
    Verdict, YomdinProblem, ZetaMode,
};
use zeta_infinity::poly::MultiPoly;
use zeta_infinity::{Error, ZetaFactorization};

use crate::checks;
use crate::document::Document;
use crate::report::{show, CliError, Report};
use crate::Mode;

pub struct Options {
    pub check: bool,
    pub seed: u64,
}

impl Options {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn evaluate(mode: Mode, doc: &Document, opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new(mode.name());
    echo_polynomial(&mut report, doc);
    match mode {
        Mode::Strata => strata(&mut report, doc, opts)?,
        Mode::Yomdin => yomdin(&mut report, doc, opts)?,
        Mode::Curve => curve(&mut report, doc, opts)?,
        Mode::Family => family(&mut report, doc, opts)?,
        Mode::Germ => germ(&mut report, doc, opts)?,
        Mode::ZetaCalc => zeta_calc(&mut report, doc, opts)?,
        Mode::Perm => perm(&mut report, doc, opts)?,
    }
    Ok(report)
}

fn echo_polynomial(report: &mut Report, doc: &Document) {
    let Some(block) = &doc.polynomial else {
        return;
    };
    report.line(format!(
        "polynomial: {} in ({})",
        block.poly,
        block.variables().join(", ")
    ));
    let mut echo = json!({
        "text": block.poly.to_string(),
        "variables": block.variables(),
    });
    if let Ok(gap) = &block.gap {
        report.line(format!(
            "leading parts: d = {}, k = {}, P_d = {}, P_(d-k) = {}",
            gap.d, gap.k, gap.top, gap.next
        ));
        echo["d"] = gap.d.into();
        echo["k"] = gap.k.into();
        echo["top"] = gap.top.to_string().into();
        echo["next"] = gap.next.to_string().into();
    }
    report.field("polynomial", echo);
}

fn require_variables(doc: &Document, count: i64, why: &str) -> Result<(), CliError> {
    if let Some(block) = &doc.polynomial {
        let got = block.variables().len();
        if got as i64 != count {
            return Err(
                CliError::invalid(format!("{why} needs {count} variables, got {got}"))
                    .in_field("variables"),
            );
        }
    }
    Ok(())
}

/// Declared `(d, k)` must match the leading parts of a supplied polynomial.
fn require_gap(doc: &Document, d: i64, k: i64) -> Result<(), CliError> {
    let Some(block) = &doc.polynomial else {
        return Ok(());
    };
    let gap = block.require_gap()?;
    if gap.d as i64 != d {
        return Err(
            CliError::invalid(format!("declared {d}, polynomial has degree {}", gap.d))
                .in_field("d"),
        );
    }
    if gap.k as i64 != k {
        return Err(
            CliError::invalid(format!("declared {k}, polynomial has gap {}", gap.k)).in_field("k"),
        );
    }
    Ok(())
}

fn zeta_lines(report: &mut Report, z: &ZetaFactorization) -> Result<i64, CliError> {
    let degree = z.degree()?;
    report.line(format!("zeta = {}", show(z)));
    report.line(format!("degree = {degree}"));
    report.field("zeta", z);
    report.field("degree", degree);
    Ok(degree)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StrataDocument {
    n: i64,
    #[serde(default)]
    mode: ZetaMode,
    strata: Vec<StrataEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StrataEntry {
    chi: i64,
    zeta: Option<ZetaFactorization>,
    germ: Option<GermForm>,
    #[serde(default)]
    label: String,
}

fn strata(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let input: StrataDocument = doc.payload()?;
    require_variables(doc, input.n + 1, "a hyperplane at infinity of dimension n")?;
    let mut strata = Vec::with_capacity(input.strata.len());
    let mut point_germs = Vec::new();
    for (i, entry) in input.strata.into_iter().enumerate() {
        let field = format!("strata[{i}]");
        let zeta = match (entry.zeta, &entry.germ) {
            (Some(z), None) => z,
            (None, Some(g)) => {
                let resolved = g.validate().and_then(|()| match input.mode {
                    ZetaMode::Infinite => germ_zeta_inf(g),
                    ZetaMode::Zero => germ_zeta_zero(g),
                });
                if let GermForm::YomdinPoint { acampo, k, d } = g {
                    point_germs.push((acampo.clone(), *k, *d));
                }
                resolved.map_err(|e| CliError::from(e).in_field(&format!("{field}.germ")))?
            }
            _ => {
                return Err(
                    CliError::invalid("give exactly one of `zeta` or `germ`").in_field(&field)
                )
            }
        };
        strata.push(Stratum::new(entry.label, entry.chi, zeta));
    }
    let problem = StratificationProblem {
        n: input.n,
        strata,
        mode: input.mode,
    };
    let result = combine(&problem)?;
    let degree = zeta_lines(report, &result.zeta)?;
    report.line(format!("chi_P = {}", result.chi_total));
    report.line(format!("sum of stratum chi = {}", result.chi_sum));
    report.field("chi_total", result.chi_total);
    report.field("chi_sum", result.chi_sum);
    if input.mode == ZetaMode::Zero {
        let lambda = lambda_invariant(&result.zeta, input.n)?;
        let certified = atypical_at_infinity(&result.zeta);
        report.line(format!("lambda = {lambda}"));
        report.line(format!("atypical at infinity: {}", certificate(certified)));
        report.field("lambda", lambda);
        report.field("atypical_at_infinity", certified);
    }
    report.warnings(result.warnings);

    if opts.check {
        report.check(
            "degree equals chi_P",
            checks::equal("degree", degree, result.chi_total),
        );
        if input.mode == ZetaMode::Infinite {
            let outcome = point_germs
                .iter()
                .try_for_each(|(a, k, d)| checks::point_routes(a, *k, *d))
                .map(|()| format!("{} point germ(s)", point_germs.len()));
            report.check("point germ routes", outcome);
        }
        report.check("round trip", checks::round_trip(&[&result.zeta]));
    }
    Ok(())
}

fn yomdin(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let problem: YomdinProblem = doc.payload()?;
    require_variables(doc, problem.n + 1, "a problem with this n")?;
    require_gap(doc, problem.d, problem.k)?;
    let result = yomdin_zeta(&problem)?;
    zeta_lines(report, &result.zeta)?;
    report.line(format!("mu = {}", result.global_milnor));
    report.line(format!(
        "chi of the smooth part of the divisor = {}",
        result.chi_xi_n
    ));
    report.line(format!(
        "local Milnor numbers = {:?}",
        result.milnor_numbers
    ));
    report.field("mu", result.global_milnor);
    report.field("chi_xi_n", result.chi_xi_n);
    report.field("milnor_numbers", &result.milnor_numbers);
    report.field("strata", &result.strata);

    if opts.check {
        let mut rng = opts.rng();
        let outcome = problem
            .points
            .iter()
            .try_for_each(|p| {
                checks::point_routes(&p.acampo, problem.k, problem.d)?;
                checks::lifting(&p.acampo, problem.k, problem.d, &mut rng)
            })
            .map(|()| format!("{} point(s)", problem.points.len()));
        report.check("point germ routes and lifting", outcome);
        let restrat = combine(&StratificationProblem {
            n: problem.n,
            strata: result.strata.clone(),
            mode: ZetaMode::Infinite,
        })
        .map_err(|e| e.to_string())
        .and_then(|c| {
            if c.zeta == result.zeta {
                Ok("stratification matches the closed form".to_owned())
            } else {
                Err(format!(
                    "stratification {} vs closed form {}",
                    c.zeta, result.zeta
                ))
            }
        });
        report.check("strata route", restrat);
        report.check("round trip", checks::round_trip(&[&result.zeta]));
    }
    Ok(())
}

fn curve(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let problem: CurveProblem = doc.payload()?;
    require_variables(doc, 3, "a plane curve problem")?;
    require_gap(doc, problem.d, problem.k)?;
    let result = curve_report(&problem)?;
    let verdict = match result.verdict {
        Verdict::Consistent => "consistent",
        Verdict::Inconsistent => "inconsistent",
    };
    zeta_lines(report, &result.zeta.zeta)?;
    report.line(format!("mu = {}", result.mu));
    report.line(format!(
        "verdict: {verdict} (degree {}, 1 + mu = {})",
        result.degree,
        1 + result.mu
    ));
    report.line(if result.hypotheses_attested {
        "hypotheses: attested".to_owned()
    } else {
        "hypotheses: formula output, hypotheses unverified".to_owned()
    });
    report.line(format!(
        "aggregated product = {}",
        show(&result.zeta.aggregated)
    ));
    report.field("mu", result.mu);
    report.field("verdict", result.verdict);
    report.field("hypotheses_attested", result.hypotheses_attested);
    report.field("aggregated", &result.zeta.aggregated);
    report.field(
        "inclusion_exclusion_holds",
        result.zeta.inclusion_exclusion_holds,
    );
    report.field("strata", &result.zeta.strata);
    report.warnings(result.zeta.warnings.clone());

    if opts.check {
        report.check(
            "degree = 1 + mu",
            checks::equal("degree", result.degree, 1 + result.mu),
        );
        let aggregated = if !result.zeta.inclusion_exclusion_holds {
            Ok("skipped: component data fails inclusion-exclusion".to_owned())
        } else if result.zeta.aggregated == result.zeta.zeta {
            Ok("stratum product equals aggregated product".to_owned())
        } else {
            Err(format!(
                "{} vs {}",
                result.zeta.zeta, result.zeta.aggregated
            ))
        };
        report.check("aggregated route", aggregated);
        let points = problem
            .sing_points
            .iter()
            .try_for_each(|p| checks::point_routes(&p.acampo_g, problem.k, problem.d))
            .map(|()| format!("{} point(s)", problem.sing_points.len()));
        report.check("point germ routes", points);
        report.check(
            "round trip",
            checks::round_trip(&[&result.zeta.zeta, &result.zeta.aggregated]),
        );
    }
    Ok(())
}

fn certificate(certified: bool) -> &'static str {
    if certified {
        "certified"
    } else {
        "not certified"
    }
}

/// `x^a y^b (x^c y^d - z^(c+d)) + z` in the given variable names.
fn family_polynomial(f: &FamilyParams, vars: &[String]) -> Result<MultiPoly, Error> {
    let text = format!(
        "{x}^{a}*{y}^{b}*({x}^{c}*{y}^{d} - {z}^{cd}) + {z}",
        x = vars[0],
        y = vars[1],
        z = vars[2],
        a = f.a,
        b = f.b,
        c = f.c,
        d = f.d,
        cd = f.c + f.d
    );
    MultiPoly::parse(&text, vars)
}

fn family(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let params: FamilyParams = doc.payload()?;
    require_variables(doc, 3, "the family")?;
    let result = family_zeta_zero(&params)?;
    if let Some(block) = &doc.polynomial {
        let expected = family_polynomial(&params, block.variables())?;
        if expected != block.poly {
            return Err(CliError::invalid(format!(
                "does not match the family with these parameters, expected {expected}"
            ))
            .in_field("polynomial"));
        }
    }
    let FamilyParams { a, b, c, d } = params;
    report.line(format!(
        "family (a, b, c, d) = ({a}, {b}, {c}, {d}), deg P = {}",
        result.total_degree
    ));
    report.line(format!("zeta0 = {}", show(&result.zeta0)));
    let degree = result.zeta0.degree()?;
    report.line(format!("degree = {degree}"));
    report.line(format!("G = {}", result.gcd_value));
    report.line(format!("lambda = {}", result.lambda));
    report.line(format!(
        "atypical at infinity: {}",
        certificate(result.certified_atypical)
    ));
    report.field("zeta", &result.zeta0);
    report.field("degree", degree);
    report.field("gcd", result.gcd_value);
    report.field("lambda", result.lambda);
    report.field("atypical_at_infinity", result.certified_atypical);
    report.field("total_degree", result.total_degree);

    if opts.check {
        let swapped = family_zeta_zero(&params.swapped()).map_err(|e| e.to_string());
        report.check(
            "swap invariance",
            swapped.and_then(|s| {
                if s == result {
                    Ok("(a,b,c,d) and (b,a,d,c) agree".to_owned())
                } else {
                    Err(format!("swapped family gives {}", s.zeta0))
                }
            }),
        );
        let det = params.determinant()?.abs();
        report.check(
            "G divides |ad - bc|",
            if det % result.gcd_value == 0 {
                Ok(format!("{} | {det}", result.gcd_value))
            } else {
                Err(format!("{} does not divide {det}", result.gcd_value))
            },
        );
        let combined = family_stratification(&params)
            .and_then(|p| combine(&p))
            .map_err(|e| e.to_string());
        report.check(
            "stratification route",
            combined.and_then(|c| {
                if c.zeta == result.zeta0 {
                    Ok("combined strata equal the closed form".to_owned())
                } else {
                    Err(format!("{} vs {}", c.zeta, result.zeta0))
                }
            }),
        );
        report.check(
            "certificate",
            if result.certified_atypical == atypical_at_infinity(&result.zeta0) {
                Ok(certificate(result.certified_atypical).to_owned())
            } else {
                Err("certificate disagrees with zeta0".to_owned())
            },
        );
        report.check("round trip", checks::round_trip(&[&result.zeta0]));
    }
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GermDocument {
    form: Option<GermForm>,
    acampo: Option<AcampoData>,
    /// Number of variables of the germ, for the Milnor number.
    n: Option<i64>,
}

fn germ(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let input: GermDocument = doc.payload()?;
    if input.form.is_none() && input.acampo.is_none() {
        return Err(CliError::invalid("give `form`, `acampo` or both").in_field("form"));
    }
    let mut rng = opts.rng();
    let mut round_trip = Vec::new();

    if let Some(a) = &input.acampo {
        let zeta = acampo_zeta(a).map_err(|e| CliError::from(e).in_field("acampo"))?;
        let degree = zeta.degree()?;
        let expanded = zeta.expand()?;
        let reduced = expanded.reduce()?;
        report.line(format!("A'Campo zeta = {}", show(&zeta)));
        report.line(format!("A'Campo degree = {degree}"));
        report.line(format!("expanded = {expanded}"));
        report.line(format!("reduced = {reduced}"));
        report.field("acampo_zeta", &zeta);
        report.field("acampo_degree", degree);
        report.field("expanded", expanded.to_string());
        report.field("reduced", reduced.to_string());
        if let Some(n) = input.n {
            let mu = milnor_from_zeta(&zeta, n).map_err(|e| CliError::from(e).in_field("n"))?;
            report.line(format!("mu = {mu}"));
            report.field("mu", mu);
        }
        if opts.check {
            report.check(
                "point germ routes and lifting",
                checks::point_grid(a, &mut rng),
            );
            report.check(
                "reduction",
                match reduced.same_function(&expanded) {
                    Ok(true) => Ok("reduced form equals the expansion".to_owned()),
                    Ok(false) => Err(format!("{reduced} differs from {expanded}")),
                    Err(e) => Err(e.to_string()),
                },
            );
        }
        round_trip.push(zeta);
    }

    if let Some(form) = &input.form {
        form.validate()
            .map_err(|e| CliError::from(e).in_field("form"))?;
        let zeta = germ_zeta_inf(form)?;
        report.line(format!("germ {}", form.name()));
        zeta_lines(report, &zeta)?;
        match germ_zeta_zero(form) {
            Ok(zero) => {
                report.line(format!("zeta0 = {}", show(&zero)));
                report.field("zeta0", &zero);
                round_trip.push(zero);
            }
            Err(Error::ZeroZetaUnspecified(_)) => {
                report.line("zeta0: not specified for this germ form");
            }
            Err(e) => return Err(e.into()),
        }
        if let (true, GermForm::YomdinPoint { acampo, k, d }) = (opts.check, form) {
            let outcome = checks::point_routes(acampo, *k, *d)
                .and_then(|()| checks::lifting(acampo, *k, *d, &mut rng))
                .map(|()| format!("k = {k}, d = {d}"));
            report.check("form routes and lifting", outcome);
        }
        round_trip.push(zeta);
    }

    if opts.check {
        report.check(
            "round trip",
            checks::round_trip(&round_trip.iter().collect::<Vec<_>>()),
        );
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ZetaOp {
    Degree,
    Mul,
    Pow,
    Substitute,
    Power,
    Expand,
    Reduce,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZetaCalcDocument {
    pub op: ZetaOp,
    pub zeta: ZetaFactorization,
    pub other: Option<ZetaFactorization>,
    pub k: Option<i64>,
    pub e: Option<i64>,
    pub r: Option<i64>,
}

fn required<T: Copy>(value: Option<T>, name: &str, op: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::invalid(format!("required for op {op}")).in_field(name))
}

fn zeta_calc(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let input: ZetaCalcDocument = doc.payload()?;
    let z = &input.zeta;
    let deg = z.degree()?;
    let result = match input.op {
        ZetaOp::Degree => {
            report.line(deg.to_string());
            report.field("degree", deg);
            None
        }
        ZetaOp::Mul => {
            let other = input
                .other
                .as_ref()
                .ok_or_else(|| CliError::invalid("required for op mul").in_field("other"))?;
            let product = z.mul(other)?;
            if opts.check {
                let expected = deg + other.degree()?;
                report.check(
                    "degree additivity",
                    checks::equal("degree", product.degree()?, expected),
                );
            }
            Some(product)
        }
        ZetaOp::Pow => {
            let e = required(input.e, "e", "pow")?;
            let power = z.pow(e)?;
            if opts.check {
                report.check(
                    "degree scaling",
                    checks::equal("degree", power.degree()?, deg * e),
                );
            }
            Some(power)
        }
        ZetaOp::Substitute => {
            let r = required(input.r, "r", "substitute")?;
            let sub = z.substitute_power(r)?;
            if opts.check {
                report.check(
                    "degree scaling",
                    checks::equal("degree", sub.degree()?, deg * r),
                );
            }
            Some(sub)
        }
        ZetaOp::Power => {
            let k = required(input.k, "k", "power")?;
            let transformed = z.power_transform(k)?;
            if opts.check {
                report.check(
                    "degree preserved",
                    checks::equal("degree", transformed.degree()?, deg),
                );
                let oracle = match checks::permutation_realizing(z) {
                    Some(p) => checks::permutation_oracle(&p, [k]),
                    None => Ok("skipped: no small permutation has this zeta-function".to_owned()),
                };
                report.check("permutation oracle", oracle);
            }
            Some(transformed)
        }
        ZetaOp::Expand | ZetaOp::Reduce => {
            let expanded = z.expand()?;
            let shown = if input.op == ZetaOp::Expand {
                expanded.clone()
            } else {
                expanded.reduce()?
            };
            report.line(shown.to_string());
            report.field("rational", shown.to_string());
            report.field("expanded", expanded.to_string());
            if opts.check {
                report.check(
                    "same function",
                    match shown.same_function(&expanded) {
                        Ok(true) => Ok("result equals the expansion".to_owned()),
                        Ok(false) => Err(format!("{shown} differs from {expanded}")),
                        Err(e) => Err(e.to_string()),
                    },
                );
            }
            None
        }
    };
    if let Some(r) = &result {
        report.line(show(r));
        report.line(format!("degree = {}", r.degree()?));
        report.field("zeta", r);
        report.field("degree", r.degree()?);
    }
    if opts.check {
        let mut values = vec![z];
        values.extend(&result);
        report.check("round trip", checks::round_trip(&values));
    }
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermDocument {
    pub images: Vec<usize>,
    pub k: Option<i64>,
}

fn perm(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), CliError> {
    let input: PermDocument = doc.payload()?;
    let p = Permutation::new(input.images).map_err(|e| CliError::from(e).in_field("images"))?;
    let zeta = zeta_of_permutation(&p)?;
    let mut lengths = p.cycle_lengths();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    report.line(format!("cycle type = {lengths:?}"));
    report.field("cycle_type", &lengths);
    let degree = zeta_lines(report, &zeta)?;
    if let Some(k) = input.k {
        let iterate = zeta_of_permutation(
            &permutation_power(&p, k).map_err(|e| CliError::from(e).in_field("k"))?,
        )?;
        let transformed = zeta.power_transform(k)?;
        report.line(format!("zeta of the {k}-th iterate = {}", show(&iterate)));
        report.field("iterate_zeta", &iterate);
        report.check(
            "iterate equals power transform",
            if iterate == transformed {
                Ok(format!("k = {k}"))
            } else {
                Err(format!("iterate {iterate} vs transform {transformed}"))
            },
        );
    }
    if opts.check {
        report.check(
            "degree equals size",
            checks::equal("degree", degree, p.len() as i64),
        );
        report.check("permutation oracle", checks::permutation_oracle(&p, 1..=12));
        report.check("round trip", checks::round_trip(&[&zeta]));
    }
    Ok(())
}
