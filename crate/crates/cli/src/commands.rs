use crate::args::*;
use crate::output::{emit, number};
use anyhow::{bail, Result};
use conekit_core::lpcheck::{lp_norm_probe_sweep, KernelSource, Triangle};
use conekit_core::report::{csv_with_header, fmt_sig};
use conekit_core::resolvent::{kernel_sweep_csv, KernelSweepRow};
use conekit_core::riesz::{
    offdiag_bound_check, riesz_kernel_uncertified, spectrum_interval, OffDiagGrid, OffDiagRegion,
};
use conekit_core::{
    load_spectrum, resolvent_kernel, sphere_spectrum, threshold_interval, threshold_interval_constant,
    threshold_interval_zero_potential, torus_spectrum, ConePoint, CrossPoint, CrossSection, CrossSectionSpectrum,
    DensityGauge, HomogeneousKernelSpec, PInterval, ResolventRequest,
};
use rayon::prelude::*;
use serde_json::{json, Value};

pub fn build_spectrum(src: &SpectrumSource) -> Result<CrossSectionSpectrum> {
    if let Some(path) = &src.spectrum_file {
        return Ok(load_spectrum(path)?);
    }
    let spec = match src.cross_section {
        CrossKind::Sphere => {
            let a = match src.radii.as_slice() {
                [] => 1.0,
                [a] => *a,
                _ => bail!("sphere takes one radius, got {}", src.radii.len()),
            };
            sphere_spectrum(src.d, a, src.c, src.mu_cutoff)?
        }
        CrossKind::Torus => {
            let radii = if src.radii.is_empty() { vec![1.0; src.d.saturating_sub(1)] } else { src.radii.clone() };
            torus_spectrum(src.d, &radii, src.c, src.mu_cutoff)?
        }
    };
    Ok(spec)
}

/// z' sits at the base point of the cross-section; z is `gamma` away from it.
pub fn point_pair(spec: &CrossSectionSpectrum, r: f64, rp: f64, gamma: f64) -> Result<(ConePoint, ConePoint)> {
    let (y, yp) = match &spec.geometry.cross_section {
        CrossSection::Sphere { dim, .. } => (CrossPoint::sphere_at_angle(*dim, gamma), CrossPoint::sphere_pole(*dim)),
        CrossSection::Torus { radii } => {
            let mut y = vec![0.0; radii.len()];
            y[0] = gamma;
            (CrossPoint(y), CrossPoint(vec![0.0; radii.len()]))
        }
        CrossSection::Separation { .. } => (CrossPoint::separation(gamma), CrossPoint::separation(0.0)),
    };
    Ok((ConePoint::new(r, y)?, ConePoint::new(rp, yp)?))
}

fn grid3(a: &[f64], b: &[f64], c: &[f64]) -> Vec<(f64, f64, f64)> {
    let mut out = Vec::with_capacity(a.len() * b.len() * c.len());
    for &x in a {
        for &y in b {
            for &z in c {
                out.push((x, y, z));
            }
        }
    }
    out
}

pub fn spectrum(args: &SpectrumArgs) -> Result<()> {
    let spec = build_spectrum(&args.source)?;
    let mu1 = spec.mu1().ok();
    let weyl = spec.weyl_fit();
    emit(
        &args.output,
        || {
            let rows: Vec<Vec<String>> = spec
                .modes
                .iter()
                .enumerate()
                .map(|(j, m)| {
                    vec![
                        j.to_string(),
                        fmt_sig(m.mu),
                        m.multiplicity.to_string(),
                        m.laplace_eigenvalue.map(fmt_sig).unwrap_or_default(),
                    ]
                })
                .collect();
            csv_with_header(&["index", "mu", "multiplicity", "laplace_eigenvalue"], &rows)
        },
        || {
            json!({
                "d": spec.d(),
                "v0": spec.v0.label(),
                "mu_cutoff": spec.mu_cutoff,
                "mu0": spec.mu0(),
                "mu1": mu1,
                "norms_only": spec.is_norms_only(),
                "weyl_c": weyl.c,
                "modes": spec.modes.iter().map(|m| json!({
                    "mu": m.mu,
                    "multiplicity": m.multiplicity,
                    "laplace_eigenvalue": m.laplace_eigenvalue,
                })).collect::<Vec<_>>(),
            })
        },
    )
}

struct ThresholdRow {
    d: usize,
    param: &'static str,
    value: f64,
    interval: PInterval,
}

pub fn thresholds(args: &ThresholdArgs) -> Result<()> {
    let mut rows = Vec::new();
    if let Some(path) = &args.spectrum_file {
        let spec = load_spectrum(path)?;
        rows.push(ThresholdRow { d: spec.d(), param: "mu0", value: spec.mu0(), interval: spectrum_interval(&spec)? });
    }
    for &d in &args.d {
        for &c in &args.c {
            let interval = if c == 0.0 {
                threshold_interval_zero_potential(d, sphere_spectrum(d, 1.0, 0.0, None)?.mu1()?)?
            } else {
                threshold_interval_constant(d, c)?
            };
            rows.push(ThresholdRow { d, param: "c", value: c, interval });
        }
        for &mu0 in &args.mu0 {
            rows.push(ThresholdRow { d, param: "mu0", value: mu0, interval: threshold_interval(d, mu0)? });
        }
        for &mu1 in &args.mu1 {
            rows.push(ThresholdRow {
                d,
                param: "mu1",
                value: mu1,
                interval: threshold_interval_zero_potential(d, mu1)?,
            });
        }
    }
    if rows.is_empty() {
        bail!("thresholds needs at least one of --c, --mu0, --mu1, --spectrum-file");
    }
    emit(
        &args.output,
        || {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.d.to_string(),
                        r.param.to_string(),
                        fmt_sig(r.value),
                        fmt_sig(r.interval.p_lo),
                        fmt_sig(r.interval.p_hi),
                        basis_label(&r.interval).to_string(),
                    ]
                })
                .collect();
            csv_with_header(&["d", "param", "value", "p_lo", "p_hi", "basis"], &body)
        },
        || {
            Value::Array(
                rows.iter()
                    .map(|r| {
                        json!({
                            "d": r.d,
                            "param": r.param,
                            "value": number(r.value),
                            "p_lo": number(r.interval.p_lo),
                            "p_hi": number(r.interval.p_hi),
                            "basis": basis_label(&r.interval),
                        })
                    })
                    .collect(),
            )
        },
    )
}

fn basis_label(iv: &PInterval) -> &'static str {
    use conekit_core::riesz::ThresholdBasis::*;
    match iv.basis {
        GeneralPotential => "general",
        ZeroPotential => "zero-potential",
        ConstantPotential => "constant-potential",
    }
}

pub fn kernel(args: &KernelArgs) -> Result<()> {
    let spec = build_spectrum(&args.source)?;
    let gauge = match args.gauge {
        GaugeArg::Riemannian => DensityGauge::Riemannian,
        GaugeArg::BHalf => DensityGauge::BHalf,
    };
    let mut points = Vec::new();
    for (r, rp, gamma) in grid3(&args.points.r, &args.points.rp, &args.points.gamma) {
        for &lambda in &args.lambda {
            points.push((r, rp, gamma, lambda));
        }
    }
    let rows: Vec<KernelSweepRow> = points
        .par_iter()
        .map(|&(r, rp, gamma, lambda)| -> Result<KernelSweepRow> {
            let (z, zp) = point_pair(&spec, r, rp, gamma)?;
            let req = ResolventRequest::new(&spec, z, zp).lambda(lambda).rel_tol(args.rel_tol).gauge(gauge);
            let value = resolvent_kernel(&req)?;
            Ok(KernelSweepRow { r, r_prime: rp, gamma, lambda, value, gauge })
        })
        .collect::<Result<_>>()?;
    emit(&args.output, || kernel_sweep_csv(&rows), || serde_json::to_value(&rows).expect("rows serialize"))
}

pub fn riesz(args: &RieszArgs) -> Result<()> {
    let spec = build_spectrum(&args.source)?;
    if let Some(region) = args.region {
        let region = match region {
            RegionArg::T2 => OffDiagRegion::T2,
            RegionArg::T3 => OffDiagRegion::T3,
        };
        let grid = OffDiagGrid::standard(vec![1.0, 2.0, 4.0, 8.0], 1.0 / 64.0, 1, 6);
        let report = offdiag_bound_check(&spec, region, &grid)?;
        return emit(&args.output, || report.to_csv(), || serde_json::to_value(&report).expect("report serializes"));
    }
    if args.r.is_empty() || args.rp.is_empty() {
        bail!("riesz needs --r and --rp, or --region");
    }
    let points = grid3(&args.r, &args.rp, &args.gamma);
    let rows = points
        .par_iter()
        .map(|&(r, rp, gamma)| -> Result<_> {
            let (z, zp) = point_pair(&spec, r, rp, gamma)?;
            Ok((r, rp, gamma, riesz_kernel_uncertified(&spec, &z, &zp, args.rel_tol)?))
        })
        .collect::<Result<Vec<_>>>()?;
    emit(
        &args.output,
        || {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(r, rp, g, v)| {
                    vec![
                        fmt_sig(*r),
                        fmt_sig(*rp),
                        fmt_sig(*g),
                        fmt_sig(v.d_r),
                        fmt_sig(v.angular),
                        fmt_sig(v.quad_error_est),
                        v.certified.to_string(),
                    ]
                })
                .collect();
            csv_with_header(&["r", "r_prime", "gamma", "d_r", "angular", "quad_error_est", "certified"], &body)
        },
        || {
            Value::Array(
                rows.iter().map(|(r, rp, g, v)| json!({"r": r, "r_prime": rp, "gamma": g, "kernel": v})).collect(),
            )
        },
    )
}

pub fn probe(args: &ProbeArgs) -> Result<()> {
    let spec;
    let source = match args.kernel {
        ProbeKernel::T2 | ProbeKernel::T3 => {
            spec = build_spectrum(&args.source)?;
            let region = if args.kernel == ProbeKernel::T2 { OffDiagRegion::T2 } else { OffDiagRegion::T3 };
            KernelSource::Riesz { spectrum: &spec, region }
        }
        ProbeKernel::Lower | ProbeKernel::Upper => {
            let tri = if args.kernel == ProbeKernel::Lower { Triangle::Lower } else { Triangle::Upper };
            KernelSource::Model(HomogeneousKernelSpec::new(args.source.d, args.alpha, tri)?)
        }
    };
    let results = lp_norm_probe_sweep(&source, &args.p, &args.k, args.per_decade)?;
    emit(
        &args.output,
        || {
            let body: Vec<Vec<String>> = results
                .iter()
                .flat_map(|res| {
                    res.domain_halfwidth_exponents.iter().zip(&res.norm_estimates).zip(&res.converged).map(
                        move |((k, n), c)| {
                            vec![
                                res.kernel_descriptor.clone(),
                                fmt_sig(res.p),
                                k.to_string(),
                                fmt_sig(*n),
                                c.to_string(),
                                serde_json::to_value(res.verdict).expect("verdict").as_str().unwrap_or("").to_string(),
                            ]
                        },
                    )
                })
                .collect();
            csv_with_header(&["kernel", "p", "k", "norm", "converged", "verdict"], &body)
        },
        || serde_json::to_value(&results).expect("results serialize"),
    )
}
