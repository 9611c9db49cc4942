use num_complex::Complex64;

/// Compensated (Kahan) sum of complex terms.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Kahan {
    sum: Complex64,
    carry: Complex64,
}

impl Kahan {
    pub(crate) fn add(&mut self, x: Complex64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> Complex64 {
        self.sum
    }
}

/// Upper bound for `Σ_{n > N} n^k r^n`, infinite if the ratio test does not
/// bite yet.
pub(crate) fn power_tail(k: i32, r: f64, n: usize) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let m = (n + 1) as f64;
    let q = ((m + 1.0) / m).powi(k) * r;
    if q >= 1.0 {
        return f64::INFINITY;
    }
    m.powi(k) * r.powf(m) / (1.0 - q)
}
