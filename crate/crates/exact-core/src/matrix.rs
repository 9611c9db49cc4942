use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::{ExactError, PiLinear, Rat};

/// Symmetric square matrix with arbitrary precision integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntSymMatrix {
    pub fn new(rows: &[Vec<i64>]) -> Result<IntSymMatrix, ExactError> {
        let big: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntSymMatrix::from_big(big)
    }

    pub fn from_big(rows: Vec<Vec<BigInt>>) -> Result<IntSymMatrix, ExactError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ExactError::Ragged);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(ExactError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(IntSymMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Zero matrix of size `n`, filled in with [`IntSymMatrix::set_sym`].
    pub fn zeros(n: usize) -> IntSymMatrix {
        IntSymMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn set_sym(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.n + j] = value.into();
        self.entries[j * self.n + i] = value.into();
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.n,
            cols: self.n,
            data: self.entries.iter().map(|x| Rat::from(x.clone())).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, ExactError> {
        self.to_rat().mul_vec(v)
    }

    pub fn det(&self) -> BigInt {
        let mut work: Vec<Vec<BigInt>> = self.rows();
        match bareiss(&mut work, self.n) {
            Some(d) => d,
            None => BigInt::zero(),
        }
    }

    /// Solve `M x = rhs_j` for several right-hand sides at once.
    fn solve_many(&self, rhs: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>, ExactError> {
        let n = self.n;
        for b in rhs {
            if b.len() != n {
                return Err(ExactError::DimensionMismatch { expected: n, got: b.len() });
            }
        }
        if n == 0 {
            return Ok(rhs.iter().map(|_| Vec::new()).collect());
        }
        // Clear denominators of each right-hand side so elimination stays in Z.
        let scales: Vec<BigInt> = rhs
            .iter()
            .map(|b| b.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom())))
            .collect();
        let k = rhs.len();
        let mut work: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigInt> = (0..n).map(|j| self.get(i, j).clone()).collect();
                for (b, s) in rhs.iter().zip(&scales) {
                    let scaled = b[i].inner() * s;
                    debug_assert!(scaled.is_integer());
                    row.push(scaled.to_integer());
                }
                row
            })
            .collect();
        bareiss(&mut work, n).ok_or(ExactError::SingularMatrix)?;

        let mut out = Vec::with_capacity(k);
        for (c, s) in scales.iter().enumerate() {
            let mut x = vec![Rat::zero(); n];
            for i in (0..n).rev() {
                let mut acc = Rat::from(work[i][n + c].clone());
                for j in (i + 1)..n {
                    acc -= &(Rat::from(work[i][j].clone()) * &x[j]);
                }
                x[i] = acc / Rat::from(work[i][i].clone());
            }
            let s = Rat::from(s.clone());
            out.push(x.into_iter().map(|xi| xi / &s).collect());
        }
        Ok(out)
    }
}

/// Fraction-free forward elimination on the first `n` columns. Pivots on
/// the first nonzero entry of each column. Returns the determinant of the
/// leading `n x n` block, or `None` when it is singular.
fn bareiss(a: &mut [Vec<BigInt>], n: usize) -> Option<BigInt> {
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..cols {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Some(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
}

impl fmt::Debug for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for IntSymMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(serializer)
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<RatMatrix, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Ragged);
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut data = vec![Rat::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rat::one();
        }
        RatMatrix { rows: n, cols: n, data }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                data.push((0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum());
            }
        }
        Ok(RatMatrix { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, ExactError> {
        if self.cols != v.len() {
            return Err(ExactError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == RatMatrix::identity(self.rows) && self.rows == self.cols
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Exact inverse via fraction-free elimination.
pub fn mat_inverse(m: &IntSymMatrix) -> Result<RatMatrix, ExactError> {
    let n = m.size();
    let unit: Vec<Vec<Rat>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let cols = m.solve_many(&unit)?;
    let rows: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    if n == 0 {
        return Ok(RatMatrix::identity(0));
    }
    RatMatrix::from_rows(rows)
}

/// Exact solution of `M x = v`.
pub fn solve_symmetric(m: &IntSymMatrix, v: &[Rat]) -> Result<Vec<Rat>, ExactError> {
    let mut sols = m.solve_many(&[v.to_vec()])?;
    Ok(sols.pop().unwrap_or_default())
}

/// `M x = v` for a right-hand side in Q + Qπ, solved part by part.
pub fn solve_symmetric_pi(m: &IntSymMatrix, v: &[PiLinear]) -> Result<Vec<PiLinear>, ExactError> {
    let rat: Vec<Rat> = v.iter().map(|x| x.rat.clone()).collect();
    let pi: Vec<Rat> = v.iter().map(|x| x.pi.clone()).collect();
    let mut sols = m.solve_many(&[rat, pi])?;
    let pi_sol = sols.pop().unwrap_or_default();
    let rat_sol = sols.pop().unwrap_or_default();
    Ok(rat_sol.into_iter().zip(pi_sol).map(|(a, b)| PiLinear::new(a, b)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p, q).unwrap()
    }

    #[test]
    fn inverse_of_a2() {
        let m = IntSymMatrix::new(&[vec![-2, 1], vec![1, -2]]).unwrap();
        let inv = mat_inverse(&m).unwrap();
        let expect = RatMatrix::from_rows(vec![vec![r(-2, 3), r(-1, 3)], vec![r(-1, 3), r(-2, 3)]]).unwrap();
        assert_eq!(inv, expect);
        assert!(m.to_rat().mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn small_cases() {
        let m = IntSymMatrix::new(&[vec![-2]]).unwrap();
        assert_eq!(mat_inverse(&m).unwrap().get(0, 0), &r(-1, 2));
        assert_eq!(solve_symmetric(&m, &[r(1, 2)]).unwrap(), vec![r(-1, 4)]);
        let d = IntSymMatrix::new(&[vec![-2, 0], vec![0, -2]]).unwrap();
        let inv = mat_inverse(&d).unwrap();
        assert_eq!(inv.get(0, 0), &r(-1, 2));
        assert_eq!(inv.get(0, 1), &r(0, 1));
    }

    #[test]
    fn singular_and_mismatch() {
        let m = IntSymMatrix::new(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(mat_inverse(&m), Err(ExactError::SingularMatrix));
        assert_eq!(m.det(), BigInt::zero());
        let a2 = IntSymMatrix::new(&[vec![-2, 1], vec![1, -2]]).unwrap();
        assert_eq!(
            solve_symmetric(&a2, &[r(1, 1)]),
            Err(ExactError::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn needs_row_swap() {
        let m = IntSymMatrix::new(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.det(), BigInt::from(-1));
        assert_eq!(solve_symmetric(&m, &[r(2, 1), r(3, 1)]).unwrap(), vec![r(3, 1), r(2, 1)]);
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            IntSymMatrix::new(&[vec![1, 2], vec![3, 1]]),
            Err(ExactError::NotSymmetric { row: 0, col: 1 })
        );
    }

    #[test]
    fn empty_matrix() {
        let m = IntSymMatrix::zeros(0);
        assert_eq!(solve_symmetric(&m, &[]).unwrap(), Vec::<Rat>::new());
        assert_eq!(m.det(), BigInt::one());
    }
}
