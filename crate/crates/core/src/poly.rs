//! Real roots of low-degree polynomials.

use crate::tol::ROOT_MERGE_TOL;

/// Real roots of `c2·x² + c1·x + c0`, ascending, with near-equal roots merged.
///
/// A vanishing leading coefficient degrades to the linear case. The all-zero
/// polynomial has no isolated roots and yields an empty list.
pub fn real_quadratic_roots(c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    let scale = c2.abs().max(c1.abs()).max(c0.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if c2.abs() <= 1e-14 * scale {
        if c1.abs() <= 1e-14 * scale {
            return Vec::new();
        }
        return vec![-c0 / c1];
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    let disc_scale = (c1 * c1).max((4.0 * c2 * c0).abs());
    if disc < 0.0 {
        if disc >= -1e-14 * disc_scale {
            return vec![-c1 / (2.0 * c2)];
        }
        return Vec::new();
    }
    let sq = disc.sqrt();
    // Cancellation-free pair.
    let q = -0.5 * (c1 + c1.signum() * sq);
    let mut roots = if q == 0.0 {
        vec![0.0, 0.0]
    } else {
        vec![q / c2, c0 / q]
    };
    roots.sort_by(f64::total_cmp);
    merge_close(roots)
}

/// Real roots of `c3·x³ + c2·x² + c1·x + c0`, ascending, merged within
/// [`ROOT_MERGE_TOL`]. Each root gets a Newton polish on the original
/// polynomial, accepted only when it lowers the residual.
pub fn real_cubic_roots(c3: f64, c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    let scale = c3.abs().max(c2.abs()).max(c1.abs()).max(c0.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if c3.abs() <= 1e-14 * scale {
        return real_quadratic_roots(c2, c1, c0);
    }
    let (a, b, c) = (c2 / c3, c1 / c3, c0 / c3);
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let d = q * q / 4.0 + p * p * p / 27.0;
    let d_scale = (q * q / 4.0).max((p * p * p / 27.0).abs());

    let depressed: Vec<f64> = if p.abs() <= 1e-15 * (1.0 + a.abs() * a.abs()) && q.abs() <= 1e-15 * (1.0 + a.abs().powi(3)) {
        vec![0.0]
    } else if d.abs() <= 1e-13 * d_scale {
        // Double root.
        let single = 3.0 * q / p;
        let double = -1.5 * q / p;
        vec![single, double]
    } else if d < 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|i| m * (theta - 2.0 * std::f64::consts::PI * i as f64 / 3.0).cos())
            .collect()
    } else {
        let s = d.sqrt();
        let u = (-q / 2.0 + s).cbrt();
        let v = (-q / 2.0 - s).cbrt();
        vec![u + v]
    };

    let eval = |x: f64| ((c3 * x + c2) * x + c1) * x + c0;
    let deriv = |x: f64| (3.0 * c3 * x + 2.0 * c2) * x + c1;
    let mut roots: Vec<f64> = depressed
        .into_iter()
        .map(|t| {
            let mut x = t - shift;
            for _ in 0..3 {
                let f = eval(x);
                let df = deriv(x);
                if df == 0.0 {
                    break;
                }
                let next = x - f / df;
                if eval(next).abs() < f.abs() {
                    x = next;
                } else {
                    break;
                }
            }
            x
        })
        .collect();
    roots.sort_by(f64::total_cmp);
    merge_close(roots)
}

fn merge_close(roots: Vec<f64>) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(roots.len());
    for r in roots {
        match out.last() {
            Some(&last) if (r - last).abs() <= ROOT_MERGE_TOL * (1.0 + last.abs()) => {}
            _ => out.push(r),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn quadratic_cases() {
        assert!(close(&real_quadratic_roots(1.0, -3.0, 2.0), &[1.0, 2.0]));
        assert!(close(&real_quadratic_roots(1.0, -2.0, 1.0), &[1.0]));
        assert!(real_quadratic_roots(1.0, 0.0, 1.0).is_empty());
        assert!(close(&real_quadratic_roots(0.0, 2.0, -1.0), &[0.5]));
        assert!(real_quadratic_roots(0.0, 0.0, 1.0).is_empty());
        assert!(real_quadratic_roots(0.0, 0.0, 0.0).is_empty());
    }

    #[test]
    fn cubic_three_real() {
        // (x-1)(x-2)(x+3)
        assert!(close(&real_cubic_roots(1.0, 0.0, -7.0, 6.0), &[-3.0, 1.0, 2.0]));
    }

    #[test]
    fn cubic_one_real() {
        // (x-2)(x²+1)
        assert!(close(&real_cubic_roots(1.0, -2.0, 1.0, -2.0), &[2.0]));
    }

    #[test]
    fn cubic_repeated() {
        // (x-1)²(x+2)
        let r = real_cubic_roots(1.0, 0.0, -3.0, 2.0);
        assert_eq!(r.len(), 2);
        assert!((r[0] + 2.0).abs() < 1e-12 && (r[1] - 1.0).abs() < 1e-7);
        // x³
        assert_eq!(real_cubic_roots(2.0, 0.0, 0.0, 0.0), vec![0.0]);
    }

    #[test]
    fn cubic_falls_back_to_quadratic() {
        assert!(close(&real_cubic_roots(0.0, 1.0, -3.0, 2.0), &[1.0, 2.0]));
    }
}
