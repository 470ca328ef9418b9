//! Gamma-function helpers and orthogonal-polynomial recurrences.

pub use libm::{lgamma, tgamma};

/// Taylor coefficients of 1/Gamma(z) about 0, starting at z^1.
const RGAMMA_TAYLOR: [f64; 29] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
];

/// Temme's auxiliary gamma quantities for |mu| <= 1/2.
///
/// Returns `(gam1, gam2, 1/Gamma(1+mu), 1/Gamma(1-mu))` where
/// `gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)` and
/// `gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2`, with gam1 finite at mu = 0.
pub fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    // 1/Gamma(1+x) = sum_j RGAMMA_TAYLOR[j] x^j
    let mut even = 0.0;
    let mut odd = 0.0;
    let m2 = mu * mu;
    for j in (0..RGAMMA_TAYLOR.len()).rev() {
        if j % 2 == 0 {
            even = even * m2 + RGAMMA_TAYLOR[j];
        }
    }
    for j in (0..RGAMMA_TAYLOR.len()).rev() {
        if j % 2 == 1 {
            odd = odd * m2 + RGAMMA_TAYLOR[j];
        }
    }
    // even(mu) = sum over even j of c_j mu^j; odd(mu) = sum over odd j of c_j mu^(j-1)
    let gampl = even + mu * odd;
    let gammi = even - mu * odd;
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, gampl, gammi)
}

/// Values C_0^a(t), ..., C_n^a(t) of Gegenbauer polynomials.
pub fn gegenbauer_all(n: usize, alpha: f64, t: f64) -> Vec<f64> {
    let mut c = Vec::with_capacity(n + 1);
    c.push(1.0);
    if n == 0 {
        return c;
    }
    c.push(2.0 * alpha * t);
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * t * (kf + alpha - 1.0) * c[k - 1] - (kf + 2.0 * alpha - 2.0) * c[k - 2]) / kf;
        c.push(next);
    }
    c
}

/// Volume of the unit sphere S^(n-1) in R^n.
pub fn unit_sphere_volume(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    2.0 * std::f64::consts::PI.powf(h) / tgamma(h)
}

/// Binomial coefficient as a float.
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}
