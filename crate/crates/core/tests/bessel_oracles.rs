//! Bessel values against frozen high-precision tables and closed forms.

mod oracles {
    include!("oracles/bessel_table.rs");
}

use conekit_core::bessel::{bessel_i, bessel_i_dr, bessel_k, bessel_k_dr, Scaled};
use std::f64::consts::PI;

fn rel_err(ours: Scaled, (m, e): (f64, i32)) -> f64 {
    let r = ours.div(Scaled::new(m).shift(e));
    (r.to_f64() - 1.0).abs()
}

#[test]
fn table_values_to_1e12() {
    let mut worst: (f64, String) = (0.0, String::new());
    for &(nu, x, i, ip, k, kp) in oracles::BESSEL_TABLE {
        let checks = [
            ("I", rel_err(bessel_i(nu, x).unwrap().scaled(), i)),
            ("I'", rel_err(bessel_i_dr(nu, x).unwrap().scaled(), ip)),
            ("K", rel_err(bessel_k(nu, x).unwrap().scaled(), k)),
            ("K'", rel_err(bessel_k_dr(nu, x).unwrap().scaled(), kp)),
        ];
        for (name, e) in checks {
            if e > worst.0 {
                worst = (e, format!("{name} nu={nu} x={x}"));
            }
        }
    }
    println!("worst relative error {:.3e} at {}", worst.0, worst.1);
    assert!(worst.0 < 1e-12, "worst {:.3e} at {}", worst.0, worst.1);
}

#[test]
fn half_integer_orders_match_closed_forms() {
    // I_{1/2}, I_{3/2}, K_{1/2}, K_{3/2} in elementary functions
    for &x in &[0.01, 0.3, 1.0, 2.0, 7.5, 12.0, 40.0, 200.0] {
        let i12 = (2.0 / (PI * x)).sqrt() * x.sinh();
        let i32_ = (2.0 / (PI * x)).sqrt() * (x.cosh() - x.sinh() / x);
        let k12 = (PI / (2.0 * x)).sqrt() * (-x).exp();
        let k32 = k12 * (1.0 + 1.0 / x);
        let pairs = [
            (bessel_i(0.5, x).unwrap().to_f64(), i12),
            (bessel_k(0.5, x).unwrap().to_f64(), k12),
            (bessel_k(1.5, x).unwrap().to_f64(), k32),
        ];
        for (a, b) in pairs {
            assert!(((a - b) / b).abs() < 1e-12, "x={x}: {a} vs {b}");
        }
        if x > 0.5 {
            let a = bessel_i(1.5, x).unwrap().to_f64();
            assert!(((a - i32_) / i32_).abs() < 1e-12, "x={x}");
        }
    }
}
