//! Dense Gaussian elimination over a finite field.

use crate::galois::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of forward elimination: `pivots[r]` is the pivot column of row `r`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pub pivots: Vec<usize>,
    /// First non-pivot column at or after the watched column, if elimination
    /// stopped there.
    pub free: Option<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[u32], f: &Field) -> Vec<u32> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// `row[dst] -= factor * row[src]` on columns `from..`.
    fn axpy(&mut self, dst: usize, src: usize, factor: u32, from: usize, f: &Field) {
        let cols = self.cols;
        let (d, s) = if dst < src {
            let (a, b) = self.data.split_at_mut(src * cols);
            (&mut a[dst * cols..(dst + 1) * cols], &b[..cols])
        } else {
            let (a, b) = self.data.split_at_mut(dst * cols);
            (&mut b[..cols], &a[src * cols..(src + 1) * cols])
        };
        if f.degree() == 1 {
            let p = f.characteristic() as u64;
            let neg = p - factor as u64;
            for (x, &y) in d[from..].iter_mut().zip(&s[from..]) {
                if y != 0 {
                    *x = ((*x as u64 + neg * y as u64) % p) as u32;
                }
            }
        } else {
            for (x, &y) in d[from..].iter_mut().zip(&s[from..]) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
    }

    fn scale_row(&mut self, r: usize, factor: u32, from: usize, f: &Field) {
        let cols = self.cols;
        for x in &mut self.data[r * cols + from..(r + 1) * cols] {
            *x = f.mul(*x, factor);
        }
    }

    /// Forward elimination to row echelon form with unit pivots, processing
    /// columns left to right. Stops at the first column `c >= watch_from`
    /// that receives no pivot; pass `watch_from = cols` for a full pass.
    pub fn eliminate(&mut self, f: &Field, watch_from: usize) -> Echelon {
        if f.degree() == 1 {
            return self.eliminate_prime(f, watch_from);
        }
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            let found = (next..self.rows).find(|&r| self.get(r, c) != 0);
            let Some(pr) = found else {
                if c >= watch_from {
                    return Echelon {
                        pivots,
                        free: Some(c),
                    };
                }
                continue;
            };
            if pr != next {
                for k in c..self.cols {
                    self.data.swap(pr * self.cols + k, next * self.cols + k);
                }
            }
            let inv = f.inv(self.get(next, c)).expect("nonzero pivot");
            self.scale_row(next, inv, c, f);
            for r in next + 1..self.rows {
                let factor = self.get(r, c);
                if factor != 0 {
                    self.axpy(r, next, factor, c, f);
                }
            }
            pivots.push(c);
            next += 1;
        }
        Echelon { pivots, free: None }
    }

    /// Prime-field elimination with delayed reduction: entries accumulate in
    /// `u64` and are reduced only when read as a pivot or a factor. Each entry
    /// receives at most `rank` updates below `p^2`, so nothing overflows for
    /// `p <= 2^20`.
    fn eliminate_prime(&mut self, f: &Field, watch_from: usize) -> Echelon {
        let p = f.characteristic() as u64;
        let cols = self.cols;
        let mut a: Vec<u64> = self.data.iter().map(|&v| v as u64).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        let mut free = None;
        for c in 0..cols {
            let mut found = None;
            for r in next..self.rows {
                let v = &mut a[r * cols + c];
                *v %= p;
                if found.is_none() && *v != 0 {
                    found = Some(r);
                }
            }
            let Some(pr) = found else {
                if c >= watch_from {
                    free = Some(c);
                    break;
                }
                continue;
            };
            if pr != next {
                for k in c..cols {
                    a.swap(pr * cols + k, next * cols + k);
                }
            }
            let (head, tail) = a.split_at_mut((next + 1) * cols);
            let piv = &mut head[next * cols + c..];
            let inv = f.inv(piv[0] as u32).expect("nonzero pivot") as u64;
            for x in piv.iter_mut() {
                *x = *x % p * inv % p;
            }
            for row in tail.chunks_exact_mut(cols) {
                let factor = row[c];
                if factor != 0 {
                    let neg = p - factor;
                    for (x, &y) in row[c..].iter_mut().zip(piv.iter()) {
                        *x += neg * y;
                    }
                }
            }
            pivots.push(c);
            next += 1;
        }
        for (d, v) in self.data.iter_mut().zip(&a) {
            *d = (v % p) as u32;
        }
        Echelon { pivots, free }
    }

    /// Kernel vector of an echelon form with `x[free] = 1` and every other
    /// non-pivot column, as well as every column after `free`, set to zero.
    pub fn back_substitute(&self, ech: &Echelon, free: usize, f: &Field) -> Vec<u32> {
        let mut x = vec![0u32; self.cols];
        x[free] = 1;
        for (r, &pc) in ech.pivots.iter().enumerate().rev() {
            if pc > free {
                continue;
            }
            let row = self.row(r);
            let mut acc = 0u32;
            for c in pc + 1..=free {
                if row[c] != 0 && x[c] != 0 {
                    acc = f.add(acc, f.mul(row[c], x[c]));
                }
            }
            x[pc] = f.neg(acc);
        }
        x
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        let cols = m.cols;
        m.eliminate(f, cols).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rows: usize, cols: usize, f: &Field, rng: &mut impl Rng, density: f64) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.random_bool(density) {
                    m.set(r, c, rng.random_range(0..f.order()));
                }
            }
        }
        m
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for f in [Field::prime(2).unwrap(), Field::with_order(16).unwrap(), Field::prime(17).unwrap()] {
            for _ in 0..50 {
                let rows = rng.random_range(1..12);
                let cols = rng.random_range(1..12);
                let orig = random_matrix(rows, cols, &f, &mut rng, 0.6);
                let mut m = orig.clone();
                let ech = m.eliminate(&f, cols);
                for free in (0..cols).filter(|c| !ech.pivots.contains(c)) {
                    let x = m.back_substitute(&ech, free, &f);
                    assert!(orig.mul_vec(&x, &f).iter().all(|&v| v == 0));
                    assert_eq!(x[free], 1);
                }
            }
        }
    }

    #[test]
    fn rank_brute_force_gf2() {
        // rank = log2 of the number of distinct images over GF(2)
        let f = Field::prime(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let rows = rng.random_range(1..6);
            let cols = rng.random_range(1..7);
            let m = random_matrix(rows, cols, &f, &mut rng, 0.5);
            let mut kernel = 0usize;
            for code in 0..(1usize << cols) {
                let x: Vec<u32> = (0..cols).map(|b| ((code >> b) & 1) as u32).collect();
                if m.mul_vec(&x, &f).iter().all(|&v| v == 0) {
                    kernel += 1;
                }
            }
            assert_eq!(1usize << (cols - m.rank(&f)), kernel);
        }
    }

    #[test]
    fn watched_column_stops_early() {
        let f = Field::prime(5).unwrap();
        // columns 0,1 pivots; column 2 free
        let mut m = Matrix::zeros(2, 4);
        for (r, row) in [[1, 0, 2, 1], [0, 1, 3, 4]].iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        let orig = m.clone();
        let ech = m.eliminate(&f, 1);
        assert_eq!(ech.free, Some(2));
        let x = m.back_substitute(&ech, 2, &f);
        assert_eq!(x, vec![3, 2, 1, 0]);
        assert!(orig.mul_vec(&x, &f).iter().all(|&v| v == 0));
    }
}
