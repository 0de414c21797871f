//! Executes a job and produces its artifacts.

use serde::Serialize;

use phcurves::algebra::{partial_fractions, FactoredDenominator};
use phcurves::curve::{BasisLabel, CurveKind, CurveSolution, SolutionBasis};
use phcurves::dual::{osculating_normal_sweep, osculating_normals};
use phcurves::hermite::{check_directions, default_basis, hermite_c1, HermiteSolution};
use phcurves::residue::{basis_curves, single_pole_basis};
use phcurves::verify::{verify_curve, VerificationReport};
use phcurves::{
    envelope_curve, existence_report, factor_hodograph, integrate_curve, lambda_space,
    solve_linear_system, HyperplaneFamily, LambdaAnsatz, QuaternionPolynomial, RationalFunction,
    ScaledPreimage,
};

use crate::error::Failure;
use crate::job::{Job, PoleSpec};
use crate::sample::{sample_curve, samples_csv, samples_svg, Samples};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

/// Named output files.
pub type Artifacts = Vec<(String, Vec<u8>)>;

fn json<T: Serialize>(name: &str, v: &T) -> Result<(String, Vec<u8>), Failure> {
    let mut bytes = serde_json::to_vec_pretty(v).map_err(Failure::invalid)?;
    bytes.push(b'\n');
    Ok((format!("{name}.json"), bytes))
}

/// Re-verifies a constructed curve; any failed check is fatal.
fn certify(
    c: &CurveSolution,
    a: Option<&QuaternionPolynomial>,
    what: &str,
) -> Result<VerificationReport, Failure> {
    let rep = verify_curve(c, a, None);
    if !rep.all_passed() {
        let failed: Vec<String> = rep
            .failures()
            .map(|(k, v)| format!("{k}: {}", v.witness.clone().unwrap_or_default()))
            .collect();
        return Err(Failure::verification(format!(
            "{what}: {}",
            failed.join("; ")
        )));
    }
    Ok(rep)
}

fn certify_basis(b: &SolutionBasis, a: &QuaternionPolynomial) -> Result<(), Failure> {
    for c in &b.curves {
        certify(&c.curve, Some(a), &format!("basis curve {}", c.label))?;
    }
    Ok(())
}

fn factored(poles: &[PoleSpec]) -> Result<FactoredDenominator, Failure> {
    FactoredDenominator::new(
        poles
            .iter()
            .map(|p| (p.root.to_gaussian(), p.multiplicity))
            .collect(),
    )
    .map_err(Failure::invalid)
}

#[derive(Serialize)]
struct FactorOutput<'a> {
    #[serde(flatten)]
    preimage: &'a ScaledPreimage,
    hodograph: QuaternionPolynomial,
}

#[derive(Serialize)]
struct BasisOutput<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    existence: Option<String>,
    basis: &'a SolutionBasis,
    /// Canonical representatives, in basis order.
    canonical: Vec<CurveSolution>,
}

#[derive(Serialize)]
struct LambdaOutput {
    label: BasisLabel,
    lambda: RationalFunction,
}

#[derive(Serialize)]
struct ResidueOutput<'a> {
    lambda_space: Vec<LambdaOutput>,
    basis: &'a SolutionBasis,
}

#[derive(Serialize)]
struct CurveOutput<'a> {
    curve: &'a CurveSolution,
    canonical: CurveSolution,
    verification: VerificationReport,
}

#[derive(Serialize)]
struct DualOutput<'a> {
    normal: &'a QuaternionPolynomial,
    curve: &'a CurveSolution,
    verification: VerificationReport,
}

#[derive(Serialize)]
struct HermiteOutput<'a> {
    #[serde(flatten)]
    solution: &'a HermiteSolution,
    verification: VerificationReport,
}

fn basis_output(
    name: &str,
    basis: &SolutionBasis,
    a: &QuaternionPolynomial,
    existence: Option<String>,
) -> Result<Artifacts, Failure> {
    if basis.is_empty() {
        let mut msg = "solution space is empty".to_string();
        for d in &basis.diagnostics {
            msg.push_str("; ");
            msg.push_str(d);
        }
        return Err(Failure::infeasible(msg));
    }
    certify_basis(basis, a)?;
    let canonical = basis.curves.iter().map(|c| c.curve.canonical()).collect();
    Ok(vec![json(
        name,
        &BasisOutput {
            existence,
            basis,
            canonical,
        },
    )?])
}

pub fn run(job: &Job, format: Option<Format>) -> Result<Artifacts, Failure> {
    let name = job.name();
    if !matches!(job, Job::Sample { .. }) && matches!(format, Some(Format::Csv | Format::Svg)) {
        return Err(Failure::invalid(format!("{name} only writes JSON")));
    }
    match job {
        Job::Factor { hodograph } => {
            let p = factor_hodograph(hodograph)?;
            let back = p.hodograph();
            if back != *hodograph {
                return Err(Failure::verification(
                    "factorization does not reproduce the hodograph",
                ));
            }
            Ok(vec![json(
                name,
                &FactorOutput {
                    preimage: &p,
                    hodograph: back,
                },
            )?])
        }
        Job::ConstructLinear {
            a,
            alpha,
            deg_b,
            deg_mu,
        } => {
            let existence = FactoredDenominator::from_polynomial(alpha)
                .ok()
                .map(|f| existence_report(a, &f).summary());
            let basis = solve_linear_system(a, alpha, *deg_b, *deg_mu)?;
            basis_output(name, &basis, a, existence)
        }
        Job::ConstructResidue {
            a,
            poles,
            polynomial_degree,
            mode,
            lambda,
            labels,
        } => {
            let den = factored(poles)?;
            if let Some(l) = lambda {
                let form = match partial_fractions(l, &den) {
                    Ok(f) => f,
                    Err(_) => partial_fractions(
                        l,
                        &FactoredDenominator::from_polynomial(l.den()).map_err(Failure::invalid)?,
                    )
                    .map_err(Failure::invalid)?,
                };
                let c = integrate_curve(a, &form, *mode)?;
                let verification = certify(&c, Some(a), "curve")?;
                return Ok(vec![json(
                    name,
                    &CurveOutput {
                        curve: &c,
                        canonical: c.canonical(),
                        verification,
                    },
                )?]);
            }
            let ansatz = LambdaAnsatz {
                poles: den.clone(),
                polynomial_degree: *polynomial_degree,
                mode: *mode,
            };
            let space = lambda_space(a, &ansatz)?;
            let labels = labels
                .clone()
                .unwrap_or_else(|| space.iter().map(|e| e.label).collect());
            let basis = basis_curves(a, &den, &labels, *mode)?;
            if basis.is_empty() {
                return Err(Failure::infeasible("no free labels"));
            }
            certify_basis(&basis, a)?;
            let lambda_space = space
                .iter()
                .map(|e| {
                    Ok(LambdaOutput {
                        label: e.label,
                        lambda: e.rational_function(),
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(vec![json(
                name,
                &ResidueOutput {
                    lambda_space,
                    basis: &basis,
                },
            )?])
        }
        Job::ConstructDual {
            a,
            h,
            normal,
            deg_n,
        } => {
            let normal = match (normal, deg_n) {
                (Some(n), _) => n.clone(),
                (None, Some(d)) => {
                    osculating_normals(a, *d)
                        .into_iter()
                        .next()
                        .ok_or_else(|| {
                            Failure::infeasible(format!("no osculating normal of degree {d}"))
                        })?
                }
                (None, None) => osculating_normal_sweep(a, None)
                    .and_then(|(_, ns)| ns.into_iter().next())
                    .ok_or_else(|| {
                        Failure::infeasible("no osculating normal up to the degree cap")
                    })?,
            };
            let c = envelope_curve(&HyperplaneFamily {
                normal: normal.clone(),
                offset: h.clone(),
            })?;
            let mut verification = certify(&c, Some(a), "envelope")?;
            let profile = phcurves::dual::orthogonality_profile(a, &normal);
            let orthogonal = profile.iter().take(3).all(|p| p.is_zero());
            verification.insert(
                "normal_orthogonality",
                if orthogonal {
                    phcurves::CheckOutcome::pass()
                } else {
                    phcurves::CheckOutcome::fail(
                        "normal is not orthogonal to the slope field and its derivatives",
                    )
                },
            );
            if !orthogonal {
                return Err(Failure::invalid(
                    "normal is not orthogonal to the slope field and its derivatives",
                ));
            }
            Ok(vec![json(
                name,
                &DualOutput {
                    normal: &normal,
                    curve: &c,
                    verification,
                },
            )?])
        }
        Job::Basis {
            a,
            pole,
            range,
            mode,
        } => {
            if range[0] > range[1] {
                return Err(Failure::invalid("empty label range"));
            }
            let basis = single_pole_basis(a, pole, range[0]..=range[1], *mode)?;
            basis_output(name, &basis, a, None)
        }
        Job::Verify { curve, a, interval } => {
            let iv = interval.as_ref().map(|[lo, hi]| (lo, hi));
            let rep = verify_curve(curve, a.as_ref(), iv);
            let out = json(name, &rep)?;
            if !rep.all_passed() {
                let failed: Vec<&String> = rep.failures().map(|(k, _)| k).collect();
                return Err(Failure::verification(format!(
                    "failed checks {failed:?}: {}",
                    String::from_utf8_lossy(&out.1)
                )));
            }
            Ok(vec![out])
        }
        Job::Hermite {
            a,
            data,
            pole,
            labels,
        } => {
            check_directions(a, data)?;
            let basis = match labels {
                None => default_basis(a, pole)?,
                Some(ls) => {
                    let lo = ls.iter().copied().min().unwrap_or(0).min(-1);
                    let hi = ls.iter().copied().max().unwrap_or(0).max(0);
                    let full = single_pole_basis(a, pole, lo..=hi, CurveKind::ArcLength)?;
                    let wanted: Vec<BasisLabel> = ls
                        .iter()
                        .map(|&l| {
                            if l < 0 {
                                BasisLabel::pole(0, l)
                            } else {
                                BasisLabel::Power(l as u32)
                            }
                        })
                        .collect();
                    if let Some(l) = wanted.iter().find(|l| full.get(l).is_none()) {
                        return Err(Failure::invalid(format!("label {l} is not free")));
                    }
                    full.restricted(&wanted)
                }
            };
            let sol = hermite_c1(a, data, &basis)?;
            let verification = certify(&sol.curve, Some(a), "interpolant")?;
            for (t, p, d) in [
                (&data.t0, &data.p0, &data.d0),
                (&data.t1, &data.p1, &data.d1),
            ] {
                let pos = sol.curve.eval(t).map(|q| vec![q.x, q.y, q.z]);
                let vel = sol.curve.eval_velocity(t).map(|q| vec![q.x, q.y, q.z]);
                if pos.as_ref() != Some(p) || vel.as_ref() != Some(d) {
                    return Err(Failure::verification(
                        "interpolant misses the prescribed data",
                    ));
                }
            }
            Ok(vec![json(
                name,
                &HermiteOutput {
                    solution: &sol,
                    verification,
                },
            )?])
        }
        Job::Sample {
            curve,
            from,
            to,
            step,
        } => {
            let samples: Samples = sample_curve(curve, from, to, step)?;
            let mut out = Vec::new();
            let want = |f: Format| format.is_none_or(|g| g == f);
            if format == Some(Format::Json) {
                out.push(json("samples", &samples)?);
            }
            if want(Format::Csv) && format != Some(Format::Json) {
                out.push(("samples.csv".to_string(), samples_csv(&samples)?));
            }
            if want(Format::Svg) && format != Some(Format::Json) {
                out.push((
                    "samples.svg".to_string(),
                    samples_svg(&samples).into_bytes(),
                ));
            }
            Ok(out)
        }
    }
}
