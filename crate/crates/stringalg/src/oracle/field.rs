//! Exact arithmetic over a prime field and small dense matrices.

/// The field `F_p`. The default characteristic used by the oracle is the
/// prime 32003; characteristics 2 and 3 are used for the field-independence
/// checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && is_prime(p), "field characteristic must be prime");
        assert!(p < (1 << 31), "characteristic too large for exact u64 products");
        PrimeField { p }
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn from_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero");
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut base: u64, mut e: u64) -> u64 {
        base %= self.p;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over `F_p`, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, f: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            for c in 0..self.cols {
                let tmp = self.get(row, c);
                self.set(row, c, self.get(pivot_row, c));
                self.set(pivot_row, c, tmp);
            }
            let inv = f.inv(self.get(row, col));
            for c in 0..self.cols {
                self.set(row, c, f.mul(inv, self.get(row, c)));
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for c in 0..self.cols {
                        let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of the null space, returned as the columns of a matrix.
    pub fn kernel_basis(&self, f: PrimeField) -> Matrix {
        let mut r = self.clone();
        let pivots = r.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, j, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Solves `self * X = rhs` when `self` has full column rank.
    pub fn solve(&self, rhs: &Matrix, f: PrimeField) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            for c in 0..rhs.cols {
                aug.set(r, self.cols + c, rhs.get(r, c));
            }
        }
        let pivots = aug.rref(f);
        assert!(
            pivots.len() == self.cols && pivots.iter().enumerate().all(|(i, &c)| c == i),
            "solve: matrix does not have full column rank"
        );
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for r in 0..self.cols {
            for c in 0..rhs.cols {
                x.set(r, c, aug.get(r, self.cols + c));
            }
        }
        // Consistency: rows beyond the pivots must be zero.
        for r in self.cols..self.rows {
            for c in 0..rhs.cols {
                assert_eq!(aug.get(r, self.cols + c), 0, "solve: inconsistent system");
            }
        }
        x
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&Matrix], rows: usize) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, off + c, b.get(r, c));
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let f = PrimeField::new(7);
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn rref_and_kernel() {
        let f = PrimeField::new(32003);
        let mut m = Matrix::zeros(2, 3);
        m.set(0, 0, 1);
        m.set(0, 2, 1);
        m.set(1, 1, 1);
        let k = m.kernel_basis(f);
        assert_eq!(k.cols, 1);
        // Kernel vector (−1, 0, 1) up to scale.
        let v = k.column(0);
        assert_eq!(v[1], 0);
        assert_eq!(f.add(v[0], f.mul(1, v[2])), 0);
        let product_is_zero = {
            let mut mk = m.mul(&k, f);
            mk.rref(f).is_empty()
        };
        assert!(product_is_zero);
    }

    #[test]
    fn solve_round_trip() {
        let f = PrimeField::new(5);
        let mut a = Matrix::zeros(3, 2);
        a.set(0, 0, 1);
        a.set(1, 1, 2);
        a.set(2, 0, 3);
        let mut x = Matrix::zeros(2, 2);
        x.set(0, 0, 4);
        x.set(1, 1, 3);
        let b = a.mul(&x, f);
        let solved = a.solve(&b, f);
        assert_eq!(solved, x);
    }
}
