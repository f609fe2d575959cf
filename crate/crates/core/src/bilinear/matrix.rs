//! Small dense integer matrices, just enough for exact verification
//! of orthogonality and anticommutation identities.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<i64>>) -> Option<Self> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        if rows_data.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(IntMatrix { rows, cols, data: rows_data.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let w = other.get(k, j);
                    if w != 0 {
                        out.set(i, j, out.get(i, j) + v * w);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; `kron(A, I)` repeats `A` entrywise into
    /// identity-sized blocks.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v == 0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let w = other.get(p, q);
                        if w != 0 {
                            out.set(i * other.rows + p, j * other.cols + q, v * w);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Whether this equals `k` times the identity.
    pub fn is_scaled_identity(&self, k: i64) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { k } else { 0 })
            })
    }

    /// Entries in `{-1, 0, 1}` with exactly one nonzero per row and
    /// per column.
    pub fn is_signed_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_seen = vec![false; self.cols];
        for i in 0..self.rows {
            let mut row_nonzero = 0;
            for j in 0..self.cols {
                match self.get(i, j) {
                    0 => {}
                    1 | -1 => {
                        row_nonzero += 1;
                        if col_seen[j] {
                            return false;
                        }
                        col_seen[j] = true;
                    }
                    _ => return false,
                }
            }
            if row_nonzero != 1 {
                return false;
            }
        }
        true
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).map(move |j| (i, j, self.get(i, j))))
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IntMatrix::from_rows(rows).ok_or_else(|| D::Error::custom("ragged matrix rows"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_with_identity_blocks() {
        let q = IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let k = q.kron(&IntMatrix::identity(2));
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0, 2), 1);
        assert_eq!(k.get(1, 3), 1);
        assert_eq!(k.get(2, 0), -1);
        assert!(k.is_signed_permutation());
    }

    #[test]
    fn transpose_and_product() {
        let q = IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert!(q.transpose().mul(&q).is_scaled_identity(1));
        assert!(q.mul(&q).is_scaled_identity(-1));
    }
}
