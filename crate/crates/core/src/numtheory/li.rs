//! The offset logarithmic integral `Li(x) = ∫_2^x dt / ln t`.

use super::NumTheoryError;

const TOLERANCE: f64 = 1e-12;

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (v, err) = gk15(f, a, b);
    if err <= tol || depth == 0 {
        return v;
    }
    let m = 0.5 * (a + b);
    adaptive(f, a, m, tol / 2.0, depth - 1) + adaptive(f, m, b, tol / 2.0, depth - 1)
}

/// `Li(x)` by adaptive Gauss–Kronrod quadrature.
pub fn li(x: f64) -> Result<f64, NumTheoryError> {
    if !(x >= 2.0) {
        return Err(NumTheoryError::LiDomain(x));
    }
    if x == 2.0 {
        return Ok(0.0);
    }
    // substitute t = e^s to tame the integrand's slow growth
    let g = |s: f64| s.exp() / s;
    let (a, b) = (2f64.ln(), x.ln());
    Ok(adaptive(&g, a, b, TOLERANCE * x / x.ln(), 40))
}

/// The classical logarithmic integral `li(x) = γ + ln ln x + Σ (ln x)^k/(k·k!)`.
fn li_series(x: f64) -> f64 {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let l = x.ln();
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..400u32 {
        term *= l / k as f64;
        let add = term / k as f64;
        sum += add;
        if add < sum * 1e-18 {
            break;
        }
    }
    EULER_GAMMA + l.ln() + sum
}

/// `Li(x)` through the series for `li`, used as an independent oracle.
pub fn li_by_series(x: f64) -> Result<f64, NumTheoryError> {
    if !(x >= 2.0) {
        return Err(NumTheoryError::LiDomain(x));
    }
    Ok(li_series(x) - li_series(2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li_at_two_is_zero() {
        assert_eq!(li(2.0).unwrap(), 0.0);
        assert!(li(1.5).is_err());
        assert!(li(f64::NAN).is_err());
    }

    #[test]
    fn quadrature_matches_series() {
        for x in [3.0, 10.0, 1000.0, 1e4, 1e5, 1e6] {
            let a = li(x).unwrap();
            let b = li_by_series(x).unwrap();
            assert!(((a - b) / b).abs() < 1e-10, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn known_value() {
        // li(1000) = 177.6096580..., li(2) = 1.0451637801...
        let v = li(1000.0).unwrap();
        assert!((v - (177.609_657_990_152 - 1.045_163_780_117_492_8)).abs() < 1e-8);
    }
}
