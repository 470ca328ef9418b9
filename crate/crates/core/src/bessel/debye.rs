//! Uniform large-order (Debye) expansions of I_nu(nu z) and K_nu(nu z).

use super::scaled::Scaled;
use std::f64::consts::PI;
use std::sync::OnceLock;

const TERMS: usize = 18;

struct DebyePolys {
    u: Vec<Vec<f64>>,
    v: Vec<Vec<f64>>,
}

fn polys() -> &'static DebyePolys {
    static P: OnceLock<DebyePolys> = OnceLock::new();
    P.get_or_init(|| {
        let mut u: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 0..TERMS - 1 {
            let p = &u[k];
            let mut next = vec![0.0; p.len() + 3];
            // 1/2 t^2 (1 - t^2) u_k'(t)
            for i in 1..p.len() {
                let di = i as f64 * p[i];
                next[i + 1] += 0.5 * di;
                next[i + 3] -= 0.5 * di;
            }
            // 1/8 int_0^t (1 - 5 s^2) u_k(s) ds
            for (i, &pi) in p.iter().enumerate() {
                next[i + 1] += 0.125 * pi / (i as f64 + 1.0);
                next[i + 3] -= 0.625 * pi / (i as f64 + 3.0);
            }
            u.push(next);
        }
        // v_k = u_k + t (t^2 - 1) (u_{k-1}/2 + t u_{k-1}')
        let mut v: Vec<Vec<f64>> = vec![vec![1.0]];
        for k in 1..TERMS {
            let prev = &u[k - 1];
            let mut w = vec![0.0; prev.len() + 1];
            for (i, &pi) in prev.iter().enumerate() {
                w[i] += 0.5 * pi + i as f64 * pi;
            }
            let mut out = u[k].clone();
            out.resize(w.len() + 3, 0.0);
            for (i, &wi) in w.iter().enumerate() {
                out[i + 3] += wi;
                out[i + 1] -= wi;
            }
            v.push(out);
        }
        DebyePolys { u, v }
    })
}

fn horner(p: &[f64], t: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// Result of the Debye expansions at one (nu, x).
pub(crate) struct DebyeValues {
    pub i: Scaled,
    pub ip: Scaled,
    pub k: Scaled,
    pub kp: Scaled,
    pub rel_err: f64,
}

/// Debye expansions for I, I', K, K' at order nu and argument x.
pub(crate) fn debye(nu: f64, x: f64) -> DebyeValues {
    let p = polys();
    let z = x / nu;
    let sq = (1.0 + z * z).sqrt();
    let t = 1.0 / sq;
    let eta = sq + (z / (1.0 + sq)).ln();
    let mut su = 0.0;
    let mut su_alt = 0.0;
    let mut sv = 0.0;
    let mut sv_alt = 0.0;
    let mut scale = 1.0;
    let mut last = f64::INFINITY;
    for k in 0..TERMS {
        let uk = horner(&p.u[k], t) * scale;
        let vk = horner(&p.v[k], t) * scale;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        su += uk;
        su_alt += sign * uk;
        sv += vk;
        sv_alt += sign * vk;
        last = uk.abs().max(vk.abs());
        if last < 1e-17 {
            break;
        }
        scale /= nu;
    }
    let quarter = 0.25 * (1.0 + z * z).ln();
    let ln_i = nu * eta - 0.5 * (2.0 * PI * nu).ln() - quarter;
    let ln_k = 0.5 * (PI / (2.0 * nu)).ln() - nu * eta - quarter;
    // I'(nu z) = (1+z^2)^(1/4) e^(nu eta) / (sqrt(2 pi nu) z) sum v_k / nu^k
    let ln_ip = nu * eta - 0.5 * (2.0 * PI * nu).ln() + quarter - z.ln();
    let ln_kp = 0.5 * (PI / (2.0 * nu)).ln() - nu * eta + quarter - z.ln();
    let rel_err = last + (nu * eta).abs() * 2.0 * f64::EPSILON + 20.0 * f64::EPSILON;
    DebyeValues {
        i: Scaled::from_ln(ln_i, 1.0).scale(su),
        ip: Scaled::from_ln(ln_ip, 1.0).scale(sv),
        k: Scaled::from_ln(ln_k, 1.0).scale(su_alt),
        kp: Scaled::from_ln(ln_kp, 1.0).scale(-sv_alt),
        rel_err,
    }
}
