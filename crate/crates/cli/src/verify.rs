use crate::args::Suite;
use anyhow::Result;
use conekit_core::bessel::{check_bessel_bounds, wronskian_residual};
use conekit_core::lpcheck::{lp_norm_probe, KernelSource, Triangle, Verdict};
use conekit_core::report::fmt_sig;
use conekit_core::resolvent::{boundary_order_probe, zf_compatibility_check, Face};
use conekit_core::riesz::{zero_potential_refinement_check, OffDiagGrid, OffDiagRegion};
use conekit_core::{
    cone_distance, offdiag_bound_check, resolvent_kernel, riesz_kernel, schur_bounded, sphere_spectrum, ConeGeometry,
    ConePoint, CrossPoint, HomogeneousKernelSpec, ResolventRequest,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

fn check(id: impl Into<String>, pass: bool, detail: String) -> Check {
    Check { id: id.into(), pass, detail }
}

fn pt(r: f64, gamma: f64) -> Result<ConePoint> {
    Ok(ConePoint::new(r, CrossPoint::sphere_at_angle(2, gamma))?)
}

/// r'/r or r/r' in [4, 1000] with r' in [0.05, 5].
fn certified_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let rp: f64 = 10f64.powf(rng.gen_range(-1.3..0.7));
    let s: f64 = 10f64.powf(rng.gen_range(-3.0..-0.61));
    if rng.gen_bool(0.5) {
        (s * rp, rp)
    } else {
        (rp / s, rp)
    }
}

fn euclid(seed: u64) -> Result<Vec<Check>> {
    let spec = sphere_spectrum(3, 1.0, 0.0, None)?;
    let geo = ConeGeometry::euclidean(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_dist = 0.0f64;
    for _ in 0..10 {
        let (r, rp) = (rng.gen_range(0.1..5.0), rng.gen_range(0.1..5.0));
        let g: f64 = rng.gen_range(0.0..PI);
        let got = cone_distance(&geo, &pt(r, g)?, &pt(rp, 0.0)?)?;
        let want = (r * r + rp * rp - 2.0 * r * rp * g.cos()).sqrt();
        worst_dist = worst_dist.max((got - want).abs() / want);
    }
    let mut worst_g = 0.0f64;
    for _ in 0..50 {
        let (r, rp) = certified_pair(&mut rng);
        let g: f64 = rng.gen_range(0.0..PI);
        let v = resolvent_kernel(&ResolventRequest::new(&spec, pt(r, g)?, pt(rp, 0.0)?).rel_tol(1e-10))?;
        let rr = (r * r + rp * rp - 2.0 * r * rp * g.cos()).sqrt();
        let exact = (-rr).exp() / (4.0 * PI * rr);
        worst_g = worst_g.max((v.value - exact).abs() / exact);
    }
    let mut worst_t = 0.0f64;
    for _ in 0..5 {
        let (r, rp) = certified_pair(&mut rng);
        let g: f64 = rng.gen_range(0.1..PI);
        let v = riesz_kernel(&spec, &pt(r, g)?, &pt(rp, 0.0)?, 1e-8)?;
        let r2 = r * r + rp * rp - 2.0 * r * rp * g.cos();
        let f = -1.0 / (PI * PI * r2 * r2);
        let (er, ea) = (f * (r - rp * g.cos()), f * rp * g.sin());
        worst_t = worst_t.max((v.d_r - er).hypot(v.angular - ea) / er.hypot(ea));
    }
    Ok(vec![
        check("euclid-distance", worst_dist <= 1e-12, format!("worst rel err {} at 10 pairs", fmt_sig(worst_dist))),
        check("yukawa-oracle", worst_g <= 1e-6, format!("worst rel err {} at 50 points", fmt_sig(worst_g))),
        check("riesz-oracle", worst_t <= 1e-4, format!("worst rel err {} at 5 points", fmt_sig(worst_t))),
    ])
}

fn bessel(seed: u64) -> Result<Vec<Check>> {
    let mus: Vec<f64> = (0..=99).map(|k| 0.5 + 0.5 * k as f64).collect();
    let rs: Vec<f64> = (0..=60).map(|k| 10f64.powf(-3.0 + 0.1 * k as f64)).collect();
    let rep = check_bessel_bounds(&mus, &rs);
    let mut out: Vec<Check> = rep
        .rows
        .iter()
        .map(|r| {
            check(
                format!("bessel-bound-{}", r.bound_id.label()),
                r.pass,
                format!("C={} drift={}", fmt_sig(r.c_fit), fmt_sig(r.max_violation_ratio)),
            )
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let nu: f64 = rng.gen_range(0.0..200.0);
        let x: f64 = 10f64.powf(rng.gen_range(-3.0..2.7));
        worst = worst.max(wronskian_residual(nu, x)?);
    }
    out.push(check("bessel-wronskian", worst < 1e-10, format!("worst residual {} at 1000 points", fmt_sig(worst))));
    Ok(out)
}

fn kernels() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let y = CrossPoint::sphere_at_angle(2, 0.7);
    let yp = CrossPoint::sphere_pole(2);
    for c in [0.0, -0.24, 1.0] {
        let spec = sphere_spectrum(3, 1.0, c, None)?;
        for face in [Face::Zf, Face::Lbz] {
            let p = boundary_order_probe(&spec, face, &y, &yp)?;
            let want = p.expected.unwrap_or(f64::NAN);
            let tag = if face == Face::Zf { "zf" } else { "lbz" };
            out.push(check(
                format!("boundary-order-{tag}[c={c}]"),
                (p.slope - want).abs() <= 0.05,
                format!("slope {} expected {}", fmt_sig(p.slope), fmt_sig(want)),
            ));
        }
        let rep = zf_compatibility_check(&spec, 0.25, &y, &yp)?;
        let dev = rep.deviation_at(1e-3);
        out.push(check(
            format!("zf-compatibility[c={c}]"),
            dev <= 1e-4 && (rep.rate_exponent - 2.0).abs() <= 0.2,
            format!("deviation at r'=1e-3 {} rate {}", fmt_sig(dev), fmt_sig(rep.rate_exponent)),
        ));
    }
    let spec = sphere_spectrum(3, 1.0, -0.24, None)?;
    let grid = OffDiagGrid::standard(vec![1.0, 2.0, 4.0, 8.0], 1.0 / 64.0, 1, 6);
    for region in [OffDiagRegion::T2, OffDiagRegion::T3] {
        let a = offdiag_bound_check(&spec, region, &grid)?;
        let b = offdiag_bound_check(&spec, region, &grid.refined())?;
        let drift = (b.constant - a.constant).abs() / a.constant;
        out.push(check(
            format!("offdiag-{}", region.label()),
            a.pass && b.pass && drift <= 0.1,
            format!("C={} refined {}", fmt_sig(a.constant), fmt_sig(b.constant)),
        ));
    }
    let flat = sphere_spectrum(3, 1.0, 0.0, None)?;
    let z = zero_potential_refinement_check(&flat, &grid)?;
    out.push(check(
        "zero-potential-refinement",
        z.pass(),
        format!("bottom C={} rest C={}", fmt_sig(z.bottom.constant), fmt_sig(z.rest.constant)),
    ));
    let mut worst = 0.0f64;
    let mut agree = true;
    for (alpha, tri, p) in [(1.0, Triangle::Lower, 2.0), (0.5, Triangle::Lower, 3.0), (2.0, Triangle::Upper, 2.0)] {
        let m = HomogeneousKernelSpec::new(3, alpha, tri)?;
        let s = schur_bounded(&m, p)?;
        let r = lp_norm_probe(&KernelSource::Model(m), p, &[16, 24, 32], 10)?;
        agree &= s.bounded && r.verdict == Verdict::Stable;
        let last = r.norm_estimates.last().copied().unwrap_or(f64::NAN);
        worst = worst.max((last - s.l1_norm).abs() / s.l1_norm);
    }
    out.push(check("schur-consistency", agree && worst <= 0.1, format!("worst probe vs Schur {}", fmt_sig(worst))));
    Ok(out)
}

pub fn run(suite: Suite, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Euclid | Suite::All) {
        out.extend(euclid(seed)?);
    }
    if matches!(suite, Suite::Bessel | Suite::All) {
        out.extend(bessel(seed)?);
    }
    if suite == Suite::All {
        out.extend(kernels()?);
    }
    Ok(out)
}
