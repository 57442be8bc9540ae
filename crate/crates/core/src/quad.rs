//! Fixed-panel Simpson quadrature.
//!
//! Profiles are smooth, so composite Simpson on a power-of-two panel count is
//! accurate far beyond the 1e-10 tolerances used in tests. Integrals of |g|
//! locate sign changes of g by bisection and split the affected panel there,
//! which keeps the kink of the absolute value off the quadrature nodes.

/// Default panel count for all profile integrals.
pub const PANELS: usize = 1 << 14;

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

/// Composite Simpson rule for a signed integrand.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        let hi = a + (i + 1) as f64 * h;
        total += simpson(f, lo, hi);
    }
    total
}

fn bisect_root<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        if hi - lo <= 1e-15 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return mid;
        }
        if (flo < 0.0) == (fmid < 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Composite Simpson rule for |g|, splitting panels at sign changes of g.
pub fn integrate_abs<F: Fn(f64) -> f64>(g: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    let mut s_lo = g(a);
    for i in 0..panels {
        let lo = a + i as f64 * h;
        let hi = if i + 1 == panels { b } else { a + (i + 1) as f64 * h };
        let s_hi = g(hi);
        if s_lo != 0.0 && s_hi != 0.0 && (s_lo < 0.0) != (s_hi < 0.0) {
            let root = bisect_root(g, lo, hi);
            total += simpson(g, lo, root).abs() + simpson(g, root, hi).abs();
        } else {
            total += simpson(g, lo, hi).abs();
        }
        s_lo = s_hi;
    }
    total
}

/// Cumulative integral F(x) = Integral_a^x f, tabulated on a uniform grid with
/// one Simpson panel per cell. Evaluation adds a partial panel from the nearest
/// node below, so accuracy is uniform in x.
pub struct CumulativeIntegral {
    a: f64,
    h: f64,
    nodes: Vec<f64>,
}

impl CumulativeIntegral {
    pub fn build<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> Self {
        let h = (b - a) / panels as f64;
        let mut nodes = Vec::with_capacity(panels + 1);
        let mut acc = 0.0;
        nodes.push(0.0);
        for i in 0..panels {
            let lo = a + i as f64 * h;
            let hi = a + (i + 1) as f64 * h;
            acc += simpson(f, lo, hi);
            nodes.push(acc);
        }
        Self { a, h, nodes }
    }

    pub fn eval<F: Fn(f64) -> f64>(&self, f: &F, x: f64) -> f64 {
        let panels = self.nodes.len() - 1;
        let rel = (x - self.a) / self.h;
        let idx = (rel.floor() as isize).clamp(0, panels as isize - 1) as usize;
        let node_x = self.a + idx as f64 * self.h;
        self.nodes[idx] + simpson(f, node_x, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn integrates_polynomial_exactly() {
        // Simpson is exact on cubics.
        let f = |x: f64| 3.0 * x * x - 2.0 * x + 1.0;
        let val = integrate(&f, 0.0, 2.0, 4);
        assert!((val - 6.0).abs() < 1e-14, "got {val}");
    }

    #[test]
    fn abs_integral_of_sine_over_full_period() {
        // Integral of |sin(2 pi x)| over [0,1] is 2/pi; the integrand changes
        // sign mid-interval.
        let g = |x: f64| (2.0 * PI * x).sin();
        let val = integrate_abs(&g, 0.0, 1.0, PANELS);
        assert!((val - 2.0 / PI).abs() < 1e-12, "got {val}");
    }

    #[test]
    fn abs_integral_with_many_sign_changes() {
        let g = |x: f64| (20.0 * PI * x).sin();
        let val = integrate_abs(&g, 0.0, 1.0, PANELS);
        assert!((val - 2.0 / PI).abs() < 1e-11, "got {val}");
    }

    #[test]
    fn cumulative_matches_closed_form() {
        let f = |x: f64| (PI * x).cos();
        let cum = CumulativeIntegral::build(&f, 0.0, 1.0, 1 << 12);
        for i in 0..=100 {
            let x = i as f64 / 100.0 + 0.0037 * ((i % 3) as f64) / 100.0;
            let x = x.min(1.0);
            let exact = (PI * x).sin() / PI;
            let got = cum.eval(&f, x);
            assert!((got - exact).abs() < 1e-13, "x = {x}: {got} vs {exact}");
        }
    }
}
