use num_complex::Complex64;
use serde::Serialize;

/// Central-difference settings. With `richardson` the second differences at
/// `h` and `h/2` are combined to cancel the `h²` error term.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FiniteDiff {
    pub h: f64,
    pub richardson: bool,
}

impl Default for FiniteDiff {
    fn default() -> Self {
        FiniteDiff { h: 1e-4, richardson: false }
    }
}

impl FiniteDiff {
    pub fn new(h: f64) -> FiniteDiff {
        FiniteDiff { h, richardson: false }
    }

    pub fn richardson(h: f64) -> FiniteDiff {
        FiniteDiff { h, richardson: true }
    }

    fn raw<F: Fn([f64; 4]) -> f64>(f: &F, p: [f64; 4], i: usize, j: usize, h: f64) -> f64 {
        let at = |di: f64, dj: f64| {
            let mut q = p;
            q[i] += di;
            q[j] += dj;
            f(q)
        };
        if i == j {
            (at(h, 0.0) - 2.0 * f(p) + at(-h, 0.0)) / (h * h)
        } else {
            (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h)
        }
    }

    /// `∂²f/∂p_i∂p_j` at `p`.
    pub fn second<F: Fn([f64; 4]) -> f64>(&self, f: &F, p: [f64; 4], i: usize, j: usize) -> f64 {
        let d = Self::raw(f, p, i, j, self.h);
        if self.richardson {
            (4.0 * Self::raw(f, p, i, j, self.h / 2.0) - d) / 3.0
        } else {
            d
        }
    }

    /// Complex Hessian of a real function of `(u, v, x, y)`:
    /// `(f_ζζ̄, f_zz̄, f_ζz̄)`.
    pub fn complex_hessian<F: Fn([f64; 4]) -> f64>(&self, f: &F, p: [f64; 4]) -> (f64, f64, Complex64) {
        let d = |i, j| self.second(f, p, i, j);
        let (uu, vv, xx, yy) = (d(0, 0), d(1, 1), d(2, 2), d(3, 3));
        let (ux, vy, uy, vx) = (d(0, 2), d(1, 3), d(0, 3), d(1, 2));
        ((uu + vv) / 4.0, (xx + yy) / 4.0, Complex64::new(ux + vy, uy - vx) / 4.0)
    }

    /// Five-point Laplacian of a function on the plane.
    pub fn laplacian<F: Fn(Complex64) -> f64>(&self, f: &F, at: Complex64) -> f64 {
        let g = |p: [f64; 4]| f(Complex64::new(p[0], p[1]));
        let p = [at.re, at.im, 0.0, 0.0];
        self.second(&g, p, 0, 0) + self.second(&g, p, 1, 1)
    }

    /// Central first derivative of a holomorphic function along the real axis.
    pub fn derivative<F: Fn(Complex64) -> Complex64>(&self, f: &F, at: Complex64) -> Complex64 {
        let d = |h: f64| (f(at + h) - f(at - h)) / (2.0 * h);
        if self.richardson {
            (d(self.h / 2.0) * 4.0 - d(self.h)) / 3.0
        } else {
            d(self.h)
        }
    }
}
