//! Hurwitz–Radon matrix families and the arithmetic around them.
//!
//! A family of size `s` on `R^k` is a list of signed permutation
//! matrices `B_0 = I, B_1, ..., B_{s-1}` satisfying the exact
//! identities `B_i^T B_j + B_j^T B_i = 2 delta_ij I`. Such a family
//! encodes a normed bilinear pairing `R^k x R^s -> R^k`, and the
//! maximal size is the Radon–Hurwitz number `rho(k)`.
//!
//! With `B_0 = I` the remaining matrices are anticommuting
//! antisymmetric complex structures. They are built here from three
//! ingredients: the quaternion left and right multiplication tables,
//! tensor doubling with the 2x2 blocks `P = [[0,1],[1,0]]`,
//! `Q = [[0,1],[-1,0]]`, `R = [[1,0],[0,-1]]`, and the period-sixteen
//! step that tensors an existing family with the full product of the
//! sixteen-dimensional one. Odd factors of `k` are handled by
//! tensoring with an identity block. Any construction passing the
//! exact checks is equally good; this one keeps all entries in
//! `{-1, 0, 1}`.

use crate::bilinear::matrix::IntMatrix;
use crate::{Error, Result};

/// The Radon–Hurwitz number: writing `n = 2^{4a+b} * odd` with
/// `0 <= b <= 3`, returns `8a + 2^b`. Rejects `n = 0`.
pub fn radon_hurwitz(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::OutOfRange("radon_hurwitz requires n >= 1".into()));
    }
    let t = n.trailing_zeros() as u64;
    Ok(8 * (t / 4) + (1 << (t % 4)))
}

/// Parity of the binomial coefficient `binom(n + m, n)`: odd exactly
/// when the binary digits of `n` and `m` are disjoint.
pub fn binom_odd(n: u64, m: u64) -> bool {
    n & m == 0
}

fn p2() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap()
}

fn q2() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap()
}

fn r2() -> IntMatrix {
    IntMatrix::from_rows(vec![vec![1, 0], vec![0, -1]]).unwrap()
}

// Basis quaternion products e_a * e_b as (index, sign), with
// 0 = 1, 1 = i, 2 = j, 3 = k.
const QUAT: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, -1), (0, -1), (1, 1)],
    [(3, 1), (2, 1), (1, -1), (0, -1)],
];

/// Matrix of `x -> e_q * x` on the quaternions.
fn quat_left(q: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(4, 4);
    for b in 0..4 {
        let (i, s) = QUAT[q][b];
        m.set(i, b, s);
    }
    m
}

/// Matrix of `x -> x * e_q` on the quaternions.
fn quat_right(q: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(4, 4);
    for b in 0..4 {
        let (i, s) = QUAT[b][q];
        m.set(i, b, s);
    }
    m
}

/// The anticommuting antisymmetric complex structures on `R^{2^t}`,
/// `rho(2^t) - 1` of them.
///
/// Base cases: nothing on `R^1`; the rotation `Q` on `R^2`; the three
/// quaternion left multiplications on `R^4`; on `R^8` the seven
/// matrices `Q (x) I`, `P (x) L_q`, `R (x) R_q` (left and right
/// quaternion multiplications commute, which is what makes the last
/// two groups anticommute with each other); on `R^16` the doubling
/// `Q (x) I`, `P (x) G` of the `R^8` family. For `t >= 5` the family
/// is `J (x) w` for `J` in the `t - 4` family plus `I (x) F` for `F`
/// in the `R^16` family, where `w` is the product of all eight
/// sixteen-dimensional structures: `w` is symmetric, squares to the
/// identity and anticommutes with each `F`.
fn structures(t: u32) -> Vec<IntMatrix> {
    match t {
        0 => Vec::new(),
        1 => vec![q2()],
        2 => (1..4).map(quat_left).collect(),
        3 => {
            let mut fam = vec![q2().kron(&IntMatrix::identity(4))];
            fam.extend((1..4).map(|q| p2().kron(&quat_left(q))));
            fam.extend((1..4).map(|q| r2().kron(&quat_right(q))));
            fam
        }
        4 => {
            let mut fam = vec![q2().kron(&IntMatrix::identity(8))];
            fam.extend(structures(3).iter().map(|g| p2().kron(g)));
            fam
        }
        _ => {
            let sixteen = structures(4);
            let omega = sixteen
                .iter()
                .fold(IntMatrix::identity(16), |acc, f| acc.mul(f));
            let small = structures(t - 4);
            let eye = IntMatrix::identity(1 << (t - 4));
            let mut fam: Vec<IntMatrix> = small.iter().map(|j| j.kron(&omega)).collect();
            fam.extend(sixteen.iter().map(|f| eye.kron(f)));
            fam
        }
    }
}

/// A Hurwitz–Radon family on `R^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HrFamily {
    pub k: usize,
    pub mats: Vec<IntMatrix>,
}

impl HrFamily {
    pub fn size(&self) -> usize {
        self.mats.len()
    }

    /// Exact verification of all family invariants: signed
    /// permutation entries, `B_0 = I`, and
    /// `B_i^T B_j + B_j^T B_i = 2 delta_ij I` for every pair.
    pub fn verify_exact(&self) -> Result<()> {
        if self.mats.is_empty() || !self.mats[0].is_scaled_identity(1) {
            return Err(Error::Rejected("family must start with the identity".into()));
        }
        for (i, b) in self.mats.iter().enumerate() {
            if b.rows() != self.k || b.cols() != self.k {
                return Err(Error::Dimension(format!("matrix {i} is not {0}x{0}", self.k)));
            }
            if !b.is_signed_permutation() {
                return Err(Error::Rejected(format!("matrix {i} is not a signed permutation")));
            }
        }
        for i in 0..self.mats.len() {
            let bit = self.mats[i].transpose();
            for j in i..self.mats.len() {
                let sym = bit.mul(&self.mats[j]).add(&self.mats[j].transpose().mul(&self.mats[i]));
                let expected = if i == j { 2 } else { 0 };
                if !sym.is_scaled_identity(expected) {
                    return Err(Error::Rejected(format!(
                        "anticommutation identity fails at pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The first `s` matrices of a Hurwitz–Radon family on `R^k`.
/// Rejects `s` beyond the Radon–Hurwitz capacity `rho(k)`.
pub fn hr_family(k: u64, s: u64) -> Result<HrFamily> {
    if k == 0 || s == 0 {
        return Err(Error::OutOfRange("hr_family requires k, s >= 1".into()));
    }
    let rho = radon_hurwitz(k)?;
    if s > rho {
        return Err(Error::Capacity(format!(
            "requested {s} matrices on R^{k}, but rho({k}) = {rho}"
        )));
    }
    let t = k.trailing_zeros();
    let odd = (k >> t) as usize;
    let mut mats = vec![IntMatrix::identity(1 << t)];
    mats.extend(structures(t).into_iter().take(s as usize - 1));
    if odd > 1 {
        let eye = IntMatrix::identity(odd);
        mats = mats.iter().map(|m| m.kron(&eye)).collect();
    }
    Ok(HrFamily { k: k as usize, mats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radon_hurwitz_values() {
        assert_eq!(radon_hurwitz(16).unwrap(), 9);
        assert_eq!(radon_hurwitz(8).unwrap(), 8);
        assert_eq!(radon_hurwitz(12).unwrap(), 4);
        assert_eq!(radon_hurwitz(1).unwrap(), 1);
        assert_eq!(radon_hurwitz(2).unwrap(), 2);
        assert_eq!(radon_hurwitz(32).unwrap(), 10);
        assert_eq!(radon_hurwitz(64).unwrap(), 12);
        assert_eq!(radon_hurwitz(128).unwrap(), 16);
        assert_eq!(radon_hurwitz(256).unwrap(), 17);
        assert!(radon_hurwitz(0).is_err());
    }

    #[test]
    fn binomial_parity() {
        assert!(!binom_odd(1, 1)); // binom(2,1) = 2
        assert!(binom_odd(2, 4)); // binom(6,2) = 15
        assert!(!binom_odd(3, 7)); // binom(10,3) = 120
        assert!(binom_odd(0, 0));
        // cross-check against direct computation for small values
        for n in 0u64..12 {
            for m in 0u64..12 {
                let mut b: u128 = 1;
                for i in 0..n {
                    b = b * (n + m - i) as u128 / (i + 1) as u128;
                }
                assert_eq!(binom_odd(n, m), b % 2 == 1, "at ({n}, {m})");
            }
        }
    }

    #[test]
    fn smallest_families() {
        let f = hr_family(1, 1).unwrap();
        assert_eq!(f.mats, vec![IntMatrix::identity(1)]);
        f.verify_exact().unwrap();

        let f = hr_family(2, 2).unwrap();
        f.verify_exact().unwrap();
        assert!(f.mats[1].mul(&f.mats[1]).is_scaled_identity(-1));

        let f = hr_family(4, 4).unwrap();
        f.verify_exact().unwrap();
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(hr_family(4, 5), Err(Error::Capacity(_))));
        assert!(matches!(hr_family(6, 3), Err(Error::Capacity(_))));
        assert!(hr_family(6, 2).is_ok());
    }

    #[test]
    fn full_families_verify_exactly_up_to_64() {
        for k in 1..=64u64 {
            let rho = radon_hurwitz(k).unwrap();
            let fam = hr_family(k, rho).unwrap();
            assert_eq!(fam.size() as u64, rho);
            fam.verify_exact().unwrap_or_else(|e| panic!("k = {k}: {e}"));
        }
    }

    #[test]
    fn odd_factors_tensor_cleanly() {
        let f = hr_family(48, radon_hurwitz(48).unwrap()).unwrap(); // 16 * 3
        assert_eq!(f.size(), 9);
        f.verify_exact().unwrap();
    }
}
