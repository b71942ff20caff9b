//! Legendre polynomial evaluation and Legendre-Gauss-Radau (LGR) rules.
//!
//! The flipped rule collocates on (-1, 1] with the right endpoint included —
//! the node set is the negated roots of P_{n-1} + P_n — so terminal-time
//! boundary information couples to the dynamics. The standard rule mirrors it
//! onto [-1, 1). Both integrate polynomials of degree <= 2n - 2 exactly.

use crate::scalar::Real;
use crate::{Error, Result};

/// Gauss-Radau quadrature rule on [-1, 1] with one endpoint included.
#[derive(Debug, Clone, PartialEq)]
pub struct RadauRule<T> {
    pub n_points: usize,
    /// Ascending; `flipped` rules end at exactly +1, standard rules start at
    /// exactly -1.
    pub nodes: Vec<T>,
    /// Positive, summing to 2.
    pub weights: Vec<T>,
    pub flipped: bool,
}

impl<T: Real> RadauRule<T> {
    /// Integrates `f` over [-1, 1].
    pub fn integrate(&self, f: impl Fn(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&r, &w)| acc + w * f(r))
    }
}

/// Evaluates the Legendre polynomial P_n(r) by the three-term recurrence.
pub fn legendre_eval<T: Real>(n: usize, r: T) -> T {
    legendre_last_three(n, r).2
}

/// Returns (P_{n-2}, P_{n-1}, P_n) at `r`; entries below index 0 are zero.
fn legendre_last_three<T: Real>(n: usize, r: T) -> (T, T, T) {
    let mut prev2 = T::zero(); // P_{k-2}
    let mut prev = T::zero(); // P_{k-1}
    let mut cur = T::one(); // P_k, starting at k = 0
    for k in 1..=n {
        let kf = T::usize(k);
        let next = ((T::usize(2 * k - 1) * r * cur) - (kf - T::one()) * prev) / kf;
        prev2 = prev;
        prev = cur;
        cur = next;
    }
    (prev2, prev, cur)
}

/// Value and derivative of f(r) = P_{n-1}(r) + P_n(r) for interior r.
fn radau_poly_and_deriv<T: Real>(n: usize, r: T) -> (T, T) {
    let (pm2, pm1, p) = legendre_last_three(n, r);
    let denom = r * r - T::one();
    // P_k'(r) = k (r P_k - P_{k-1}) / (r^2 - 1), valid away from +-1.
    let dpm1 = T::usize(n - 1) * (r * pm1 - pm2) / denom;
    let dp = T::usize(n) * (r * p - pm1) / denom;
    (pm1 + p, dpm1 + dp)
}

/// Interior roots of P_{n-1} + P_n (the root at -1 is handled analytically):
/// bracket by sign changes on a Chebyshev-style sample grid, then polish with
/// safeguarded Newton iteration.
fn interior_radau_roots<T: Real>(n: usize) -> Result<Vec<T>> {
    if n == 1 {
        return Ok(Vec::new());
    }
    let wanted = n - 1;
    let mut samples = 16 * n + 32;
    for _ in 0..4 {
        let mut grid = Vec::with_capacity(samples);
        for k in 1..=samples {
            // theta-uniform sampling resolves the endpoint clustering.
            let theta = std::f64::consts::PI * (k as f64) / ((samples + 1) as f64);
            grid.push(T::of(-theta.cos()));
        }
        let mut brackets = Vec::with_capacity(wanted);
        let mut prev_r = grid[0];
        let mut prev_f = radau_poly_and_deriv(n, prev_r).0;
        for &r in &grid[1..] {
            let f = radau_poly_and_deriv(n, r).0;
            if prev_f == T::zero() {
                brackets.push((prev_r, prev_r));
            } else if prev_f * f < T::zero() {
                brackets.push((prev_r, r));
            }
            prev_r = r;
            prev_f = f;
        }
        if brackets.len() == wanted {
            let mut roots = Vec::with_capacity(wanted);
            for (lo, hi) in brackets {
                roots.push(polish_root(n, lo, hi)?);
            }
            return Ok(roots);
        }
        samples *= 4;
    }
    Err(Error::RootFinding {
        n,
        detail: format!("bracketing found fewer than {wanted} interior roots"),
    })
}

fn polish_root<T: Real>(n: usize, mut lo: T, mut hi: T) -> Result<T> {
    let tol = T::epsilon() * T::of(4.0);
    let (mut flo, _) = radau_poly_and_deriv(n, lo);
    if flo == T::zero() {
        return Ok(lo);
    }
    let mut r = (lo + hi) / T::of(2.0);
    for _ in 0..100 {
        let (f, df) = radau_poly_and_deriv(n, r);
        if f == T::zero() {
            return Ok(r);
        }
        if f * flo < T::zero() {
            hi = r;
        } else {
            lo = r;
            flo = f;
        }
        let newton = r - f / df;
        let step = if newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) / T::of(2.0) // bisection fallback keeps the bracket
        };
        if (step - r).abs() <= tol * T::max(T::one(), r.abs()) {
            return Ok(step);
        }
        r = step;
    }
    Err(Error::RootFinding {
        n,
        detail: "Newton iteration cap exceeded".to_string(),
    })
}

/// Standard LGR rule: roots of P_{n-1} + P_n with the first node exactly -1.
///
/// Weights follow the closed form w_i = (1 - r_i) / (n^2 P_{n-1}(r_i)^2),
/// which covers the included endpoint as well (w_0 = 2 / n^2).
pub fn standard_lgr_rule<T: Real>(n: usize) -> Result<RadauRule<T>> {
    assert!(n >= 1, "a Radau rule needs at least one point");
    let mut nodes = Vec::with_capacity(n);
    nodes.push(T::of(-1.0));
    nodes.extend(interior_radau_roots::<T>(n)?);
    let n2 = T::usize(n * n);
    let weights: Vec<T> = nodes
        .iter()
        .map(|&r| {
            let pm1 = legendre_eval(n - 1, r);
            (T::one() - r) / (n2 * pm1 * pm1)
        })
        .collect();
    Ok(RadauRule {
        n_points: n,
        nodes,
        weights,
        flipped: false,
    })
}

/// Flipped LGR rule: negated, reversed standard nodes, so the last node is
/// exactly +1; weights are the reversed standard weights.
pub fn flipped_lgr_rule<T: Real>(n: usize) -> Result<RadauRule<T>> {
    let std_rule = standard_lgr_rule::<T>(n)?;
    let nodes: Vec<T> = std_rule.nodes.iter().rev().map(|&r| -r).collect();
    let weights: Vec<T> = std_rule.weights.iter().rev().copied().collect();
    Ok(RadauRule {
        n_points: n,
        nodes,
        weights,
        flipped: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_low_orders() {
        assert_eq!(legendre_eval(0, 0.3f64), 1.0);
        assert_eq!(legendre_eval(1, -0.5f64), -0.5);
        assert_eq!(legendre_eval(2, 1.0f64), 1.0);
        // P_3(r) = (5 r^3 - 3 r) / 2, frozen at r = 0.3.
        assert_abs_diff_eq!(legendre_eval(3, 0.3f64), -0.3825, epsilon = 1e-15);
        // P_n(-1) = (-1)^n.
        assert_abs_diff_eq!(legendre_eval(5, -1.0f64), -1.0, epsilon = 1e-15);
    }

    #[test]
    fn flipped_one_point() {
        let rule = flipped_lgr_rule::<f64>(1).unwrap();
        assert_eq!(rule.nodes, vec![1.0]);
        assert_eq!(rule.weights, vec![2.0]);
        assert!(rule.flipped);
    }

    #[test]
    fn flipped_two_points_hand_derived() {
        // P_1 + P_2 = (3r - 1)(r + 1) / 2 has roots {-1, 1/3}; negated and
        // reversed: {-1/3, 1}. Moment system: w1 + w2 = 2, -w1/3 + w2 = 0.
        let rule = flipped_lgr_rule::<f64>(2).unwrap();
        assert_abs_diff_eq!(rule.nodes[0], -1.0 / 3.0, epsilon = 1e-14);
        assert_eq!(rule.nodes[1], 1.0);
        assert_abs_diff_eq!(rule.weights[0], 1.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.weights[1], 0.5, epsilon = 1e-14);
    }

    #[test]
    fn standard_two_points_hand_derived() {
        let rule = standard_lgr_rule::<f64>(2).unwrap();
        assert_eq!(rule.nodes[0], -1.0);
        assert_abs_diff_eq!(rule.nodes[1], 1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.weights[0], 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.weights[1], 1.5, epsilon = 1e-14);
    }

    #[test]
    fn three_point_rule_integrates_quartic() {
        let rule = flipped_lgr_rule::<f64>(3).unwrap();
        let quartic = rule.integrate(|r| r.powi(4));
        assert_abs_diff_eq!(quartic, 2.0 / 5.0, epsilon = 1e-12);
    }

    #[test]
    fn exactness_to_degree_2n_minus_2() {
        for n in 1..=8 {
            for rule in [flipped_lgr_rule::<f64>(n).unwrap(), standard_lgr_rule(n).unwrap()] {
                for k in 0..=(2 * n - 2) {
                    let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
                    let got = rule.integrate(|r| r.powi(k as i32));
                    assert_abs_diff_eq!(got, exact, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn weights_positive_and_sum_to_two() {
        for n in 1..=12 {
            for rule in [flipped_lgr_rule::<f64>(n).unwrap(), standard_lgr_rule(n).unwrap()] {
                assert!(rule.weights.iter().all(|&w| w > 0.0));
                let sum: f64 = rule.weights.iter().sum();
                assert_abs_diff_eq!(sum, 2.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn node_confinement() {
        for n in 1..=12 {
            let fl = flipped_lgr_rule::<f64>(n).unwrap();
            assert!(fl.nodes.iter().all(|&r| r > -1.0));
            assert_eq!(*fl.nodes.last().unwrap(), 1.0);
            assert!(fl.nodes.windows(2).all(|w| w[0] < w[1]));
            let st = standard_lgr_rule::<f64>(n).unwrap();
            assert_eq!(st.nodes[0], -1.0);
            assert!(st.nodes.iter().all(|&r| r < 1.0));
        }
    }

    #[test]
    fn mirror_symmetry_between_rules() {
        for n in 1..=10 {
            let fl = flipped_lgr_rule::<f64>(n).unwrap();
            let st = standard_lgr_rule::<f64>(n).unwrap();
            for i in 0..n {
                assert_abs_diff_eq!(fl.nodes[i], -st.nodes[n - 1 - i], epsilon = 1e-15);
                assert_abs_diff_eq!(fl.weights[i], st.weights[n - 1 - i], epsilon = 1e-15);
            }
        }
    }

    /// Independent oracle: recover the weights from the moment conditions
    /// integral(r^k) = 2/(k+1) for even k (0 for odd k), k < n.
    #[test]
    fn weights_match_moment_system() {
        for n in 1..=8 {
            for rule in [flipped_lgr_rule::<f64>(n).unwrap(), standard_lgr_rule(n).unwrap()] {
                let mut vt = nalgebra::DMatrix::<f64>::zeros(n, n);
                let mut m = nalgebra::DVector::<f64>::zeros(n);
                for k in 0..n {
                    for (i, &r) in rule.nodes.iter().enumerate() {
                        vt[(k, i)] = r.powi(k as i32);
                    }
                    m[k] = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
                }
                let w = vt.lu().solve(&m).expect("moment system solvable");
                for i in 0..n {
                    assert_abs_diff_eq!(rule.weights[i], w[i], epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn works_in_single_precision() {
        let rule = flipped_lgr_rule::<f32>(4).unwrap();
        let sum: f32 = rule.weights.iter().sum();
        assert_abs_diff_eq!(sum, 2.0f32, epsilon = 1e-5);
        assert_eq!(*rule.nodes.last().unwrap(), 1.0f32);
    }
}
