//! Small shared numerical kernels: finite differences, quadrature, fits.

use nalgebra::{Matrix3, Vector3};

/// Number of RK4 steps covering `[0, span]` at a requested step `h`,
/// rounded to the nearest even count so that two-interval schemes
/// (Simpson pairs, transport steps) always land on the final node.
pub fn even_step_count(span: f64, h: f64) -> usize {
    let n = (span / h).round().max(2.0) as usize;
    if n % 2 == 0 {
        n
    } else {
        n + 1
    }
}

/// Fourth-order first derivative of uniformly sampled data.
///
/// Centered five-point stencil in the interior, one-sided five-point
/// stencils on the first and last two nodes.
pub fn derivative_grid(h: f64, values: &[Vector3<f64>]) -> Vec<Vector3<f64>> {
    let n = values.len();
    assert!(n >= 5, "need at least 5 samples for the 5-point stencil");
    let d = 12.0 * h;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = |j: usize| values[j];
        let row = if i == 0 {
            (-25.0 * v(0) + 48.0 * v(1) - 36.0 * v(2) + 16.0 * v(3) - 3.0 * v(4)) / d
        } else if i == 1 {
            (-3.0 * v(0) - 10.0 * v(1) + 18.0 * v(2) - 6.0 * v(3) + v(4)) / d
        } else if i == n - 2 {
            (3.0 * v(n - 1) + 10.0 * v(n - 2) - 18.0 * v(n - 3) + 6.0 * v(n - 4) - v(n - 5)) / d
        } else if i == n - 1 {
            (25.0 * v(n - 1) - 48.0 * v(n - 2) + 36.0 * v(n - 3) - 16.0 * v(n - 4)
                + 3.0 * v(n - 5))
                / d
        } else {
            (v(i - 2) - 8.0 * v(i - 1) + 8.0 * v(i + 1) - v(i + 2)) / d
        };
        out.push(row);
    }
    out
}

/// Fourth-order central difference of a scalar-to-vector callable.
pub fn derivative_of<F>(f: &F, t: f64) -> Vector3<f64>
where
    F: Fn(f64) -> Vector3<f64> + ?Sized,
{
    let h = 1e-3;
    (8.0 * (f(t + h) - f(t - h)) - (f(t + 2.0 * h) - f(t - 2.0 * h))) / (12.0 * h)
}

/// Fourth-order central second difference of a scalar-to-vector callable.
pub fn second_derivative_of<F>(f: &F, t: f64) -> Vector3<f64>
where
    F: Fn(f64) -> Vector3<f64> + ?Sized,
{
    let h = 5e-3;
    (-(f(t + 2.0 * h) + f(t - 2.0 * h)) + 16.0 * (f(t + h) + f(t - h)) - 30.0 * f(t))
        / (12.0 * h * h)
}

/// Cumulative trapezoid integral of uniformly sampled data; starts at 0.
pub fn cumulative_trapezoid(h: f64, values: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(values.len());
    let mut acc = 0.0;
    out.push(0.0);
    for w in values.windows(2) {
        acc += 0.5 * h * (w[0] + w[1]);
        out.push(acc);
    }
    out
}

/// Least-squares slope of y against x.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    sxy / sxx
}

/// Largest singular value of a 3×3 matrix.
pub fn spectral_norm(m: &Matrix3<f64>) -> f64 {
    m.svd(false, false).singular_values[0]
}

/// `n` points from `lo` to `hi` inclusive (a single point for n = 1).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_derivative_is_fourth_order() {
        let h = 1e-2;
        let values: Vec<_> = (0..101)
            .map(|i| {
                let t = i as f64 * h;
                Vector3::new(t.sin(), t.cos(), (2.0 * t).sin())
            })
            .collect();
        let d = derivative_grid(h, &values);
        for (i, di) in d.iter().enumerate() {
            let t = i as f64 * h;
            let exact = Vector3::new(t.cos(), -t.sin(), 2.0 * (2.0 * t).cos());
            assert!((di - exact).norm() < 5e-7, "node {i}: {:.3e}", (di - exact).norm());
        }
    }

    #[test]
    fn callable_derivatives_match_closed_forms() {
        let f = |t: f64| Vector3::new(t.sin(), t * t, (-t).exp());
        let d = derivative_of(&f, 0.7);
        let exact = Vector3::new(0.7f64.cos(), 1.4, -(-0.7f64).exp());
        assert!((d - exact).norm() < 1e-10);
        let dd = second_derivative_of(&f, 0.7);
        let exact2 = Vector3::new(-0.7f64.sin(), 2.0, (-0.7f64).exp());
        assert!((dd - exact2).norm() < 1e-8);
    }

    #[test]
    fn slope_of_line_recovered() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [0.5, -1.5, -3.5, -5.5];
        assert!((fit_slope(&xs, &ys) + 2.0).abs() < 1e-12);
    }
}
