//! Globally adaptive Gauss-Kronrod (7, 15) quadrature for vector integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone)]
pub struct Quadrature<const N: usize> {
    pub value: [f64; N],
    /// Estimated absolute error (max over components).
    pub abs_error: f64,
    pub evaluations: usize,
    /// Final subintervals (a, b, error estimate), sorted by a.
    pub panels: Vec<(f64, f64, f64)>,
    pub converged: bool,
}

struct Panel<const N: usize> {
    a: f64,
    b: f64,
    value: [f64; N],
    err: f64,
}

impl<const N: usize> PartialEq for Panel<N> {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl<const N: usize> Eq for Panel<N> {}
impl<const N: usize> PartialOrd for Panel<N> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl<const N: usize> Ord for Panel<N> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// One G7-K15 rule on [a, b]; returns (Kronrod value, error estimate).
pub fn gk15<const N: usize>(f: &mut impl FnMut(f64) -> [f64; N], a: f64, b: f64) -> ([f64; N], f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = [0.0; N];
    let mut g = [0.0; N];
    for i in 0..N {
        k[i] = WGK[7] * fc[i];
        g[i] = WG[3] * fc[i];
    }
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        for i in 0..N {
            let s = f1[i] + f2[i];
            k[i] += WGK[j] * s;
            if j % 2 == 1 {
                g[i] += WG[j / 2] * s;
            }
        }
    }
    let mut err: f64 = 0.0;
    for i in 0..N {
        k[i] *= h;
        g[i] *= h;
        err = err.max((k[i] - g[i]).abs());
    }
    (k, err)
}

/// Adaptive integration over the given breakpoints, bisecting the panel with
/// the largest error until the total error is below
/// `max(abs_tol, rel_tol * |value|)` or `max_panels` is reached.
pub fn integrate<const N: usize>(
    mut f: impl FnMut(f64) -> [f64; N],
    breakpoints: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Quadrature<N> {
    let mut heap = BinaryHeap::new();
    let mut evals = 0usize;
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            let (value, err) = gk15(&mut f, w[0], w[1]);
            evals += 15;
            heap.push(Panel { a: w[0], b: w[1], value, err });
        }
    }
    let total = |heap: &BinaryHeap<Panel<N>>| {
        let mut v = [0.0; N];
        let mut e = 0.0;
        // sum in interval order for reproducibility
        let mut ps: Vec<&Panel<N>> = heap.iter().collect();
        ps.sort_by(|x, y| x.a.total_cmp(&y.a));
        for p in ps {
            for i in 0..N {
                v[i] += p.value[i];
            }
            e += p.err;
        }
        (v, e)
    };
    let (mut run_v, mut run_e) = total(&heap);
    let mut converged = false;
    loop {
        let scale = run_v.iter().map(|x| x.abs()).fold(0.0, f64::max);
        if run_e <= abs_tol.max(rel_tol * scale) {
            // confirm with an ordered re-summation
            let (v, e) = total(&heap);
            let scale = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
            if e <= abs_tol.max(rel_tol * scale) {
                converged = true;
                break;
            }
            run_v = v;
            run_e = e;
        }
        if heap.len() >= max_panels {
            break;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let m = 0.5 * (worst.a + worst.b);
        if !(m > worst.a && m < worst.b) {
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk15(&mut f, worst.a, m);
        let (v2, e2) = gk15(&mut f, m, worst.b);
        evals += 30;
        for i in 0..N {
            run_v[i] += v1[i] + v2[i] - worst.value[i];
        }
        run_e += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: m, value: v1, err: e1 });
        heap.push(Panel { a: m, b: worst.b, value: v2, err: e2 });
    }
    let (value, abs_error) = total(&heap);
    let mut panels: Vec<(f64, f64, f64)> = heap.iter().map(|p| (p.a, p.b, p.err)).collect();
    panels.sort_by(|x, y| x.0.total_cmp(&y.0));
    Quadrature { value, abs_error, evaluations: evals, panels, converged }
}

/// Scalar convenience wrapper.
pub fn integrate_scalar(
    mut f: impl FnMut(f64) -> f64,
    breakpoints: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Quadrature<1> {
    integrate(move |x| [f(x)], breakpoints, abs_tol, rel_tol, max_panels)
}
