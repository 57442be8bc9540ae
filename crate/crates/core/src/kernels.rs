//! Closed forms of the convolution kernels
//!
//!   Kc(w, t) = Integral_0^t (t - s) cos(w s) ds     = (1 - cos(w t)) / w^2
//!   Ks(w, t) = Integral_0^t (t - s) sin(w s) / w ds = (t - sin(w t) / w) / w^2
//!
//! used when the first particle's position is recovered from the deviation
//! history. For |w t| < 1e-4 both formulas lose all their leading digits to
//! cancellation, so a short Taylor series is used there instead; the switch
//! keeps the relative error at the rounding level on both sides.

pub fn kernel_cos(w: f64, t: f64) -> f64 {
    let wt = w * t;
    if wt.abs() < 1e-4 {
        let z = wt * wt;
        t * t * (0.5 - z / 24.0 + z * z / 720.0)
    } else {
        (1.0 - wt.cos()) / (w * w)
    }
}

pub fn kernel_sin(w: f64, t: f64) -> f64 {
    let wt = w * t;
    if wt.abs() < 1e-4 {
        let z = wt * wt;
        t * t * t * (1.0 / 6.0 - z / 120.0 + z * z / 5040.0)
    } else {
        (t - wt.sin() / w) / (w * w)
    }
}

/// d/dt Kc = sin(w t) / w.
pub fn kernel_cos_dt(w: f64, t: f64) -> f64 {
    let wt = w * t;
    if wt.abs() < 1e-4 {
        let z = wt * wt;
        t * (1.0 - z / 6.0 + z * z / 120.0)
    } else {
        wt.sin() / w
    }
}

/// d/dt Ks = (1 - cos(w t)) / w^2.
pub fn kernel_sin_dt(w: f64, t: f64) -> f64 {
    let wt = w * t;
    if wt.abs() < 1e-4 {
        let z = wt * wt;
        t * t * (0.5 - z / 24.0 + z * z / 720.0)
    } else {
        (1.0 - wt.cos()) / (w * w)
    }
}
