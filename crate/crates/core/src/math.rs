//! Float math shims usable without `std`, plus a couple of small numeric
//! helpers shared across modules. All transcendental calls route through
//! `libm` so results are identical in `no_std` and test builds.

pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn tanh(x: f64) -> f64 {
    libm::tanh(x)
}

pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

/// Numerically safe logistic function.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + exp(-x))
    } else {
        let e = exp(x);
        e / (1.0 + e)
    }
}

/// Mean of a slice; 0 for an empty slice.
pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation (n-1 denominator); 0 when fewer than 2 values.
pub fn sample_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    sqrt(ss / (xs.len() - 1) as f64)
}

pub const LN_2PI: f64 = 1.837877066409345483560659472811235279723;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigmoid_matches_definition_on_both_branches() {
        for &x in &[-30.0, -2.0, 0.0, 2.0, 30.0] {
            let direct = 1.0 / (1.0 + (-x as f64).exp());
            assert!((sigmoid(x) - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn sample_std_known_value() {
        let xs = [2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0];
        // variance with n-1 denominator is 32/7
        assert!((sample_std(&xs) - (32.0f64 / 7.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn ln_2pi_constant() {
        assert!((LN_2PI - (2.0 * core::f64::consts::PI).ln()).abs() < 1e-15);
    }
}
