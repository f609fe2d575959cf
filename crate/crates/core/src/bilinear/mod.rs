//! Normed bilinear maps with integer coefficients, their exact
//! verification, and the composition calculus that realizes regular
//! maps between products of spheres.
//!
//! A bilinear map `F: R^a x R^b -> R^c` is stored as `c` coefficient
//! matrices with `F_i(x, y) = x^T A_i y`. Two exact conditions drive
//! everything:
//!
//! * *normed*: `||F(x, y)|| = ||x|| ||y||` identically, equivalent to
//!   the integer identities
//!   `sum_i (A_i[j][l] A_i[j'][l'] + A_i[j][l'] A_i[j'][l]) = 2 d_jj' d_ll'`;
//! * *nice*: the first coordinate is exactly `x_1 y_1`, i.e. the
//!   first coefficient matrix is the elementary matrix `E_00`.
//!
//! A nice normed map of shape `(n+1, m+1, n+m+1)` restricts, after
//! scaling by one half, to a regular map `S^n x S^m -> S^{n+m}`
//! between spheres shifted to pass through the origin
//! (`||x||^2 = 2 x_1`); [`emit_regular_map`] packages that restriction
//! together with its machine-checkable certificate.

pub mod derive;
pub mod hurwitz;
pub mod matrix;
pub mod sample;

pub use derive::{certify_nice, realize, NiceDerivation, SearchBudget, Step};
pub use hurwitz::{binom_odd, hr_family, radon_hurwitz, HrFamily};
pub use matrix::IntMatrix;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer-coefficient bilinear map `F: R^a x R^b -> R^c`,
/// `F_i(x, y) = x^T mats[i] y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearMap {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub mats: Vec<IntMatrix>,
}

/// A failed instance of the normedness identity, for diagnostics:
/// the symmetrized coefficient sum at rows `(j, j2)`, columns
/// `(l, l2)` came out as `got` instead of `expected`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormedFailure {
    pub j: usize,
    pub l: usize,
    pub j2: usize,
    pub l2: usize,
    pub got: i128,
    pub expected: i128,
}

impl std::fmt::Display for NormedFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "coefficient identity fails at rows ({}, {}), cols ({}, {}): got {}, expected {}",
            self.j, self.j2, self.l, self.l2, self.got, self.expected
        )
    }
}

impl BilinearMap {
    pub fn new(a: usize, b: usize, c: usize, mats: Vec<IntMatrix>) -> Result<Self> {
        let map = BilinearMap { a, b, c, mats };
        map.validate()?;
        Ok(map)
    }

    /// The multiplication map of the reals: shape `(1, 1, 1)`, single
    /// entry one. Nice and normed; the seed of every composition.
    pub fn base_nice() -> Self {
        BilinearMap {
            a: 1,
            b: 1,
            c: 1,
            mats: vec![IntMatrix::from_rows(vec![vec![1]]).unwrap()],
        }
    }

    /// Shape consistency (used after deserialization).
    pub fn validate(&self) -> Result<()> {
        if self.a == 0 || self.b == 0 || self.c == 0 {
            return Err(Error::Dimension("dimensions must be positive".into()));
        }
        if self.mats.len() != self.c {
            return Err(Error::Dimension(format!(
                "expected {} coefficient matrices, found {}",
                self.c,
                self.mats.len()
            )));
        }
        for (i, m) in self.mats.iter().enumerate() {
            if m.rows() != self.a || m.cols() != self.b {
                return Err(Error::Dimension(format!(
                    "matrix {i} has shape {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    self.a,
                    self.b
                )));
            }
        }
        Ok(())
    }

    /// Sparse columns of the coefficient tensor: for each input cell
    /// `(j, l)` the nonzero `(i, A_i[j][l])`, sorted by `i`.
    fn cells(&self) -> Vec<Vec<(u32, i64)>> {
        let mut cells = vec![Vec::new(); self.a * self.b];
        for (i, m) in self.mats.iter().enumerate() {
            for (j, l, v) in m.entries() {
                if v != 0 {
                    cells[j * self.b + l].push((i as u32, v));
                }
            }
        }
        cells
    }

    /// First violated instance of the normedness identity, if any.
    pub fn normed_failure(&self) -> Option<NormedFailure> {
        fn dot(x: &[(u32, i64)], y: &[(u32, i64)]) -> i128 {
            let (mut p, mut q, mut acc) = (0usize, 0usize, 0i128);
            while p < x.len() && q < y.len() {
                match x[p].0.cmp(&y[q].0) {
                    std::cmp::Ordering::Less => p += 1,
                    std::cmp::Ordering::Greater => q += 1,
                    std::cmp::Ordering::Equal => {
                        acc += x[p].1 as i128 * y[q].1 as i128;
                        p += 1;
                        q += 1;
                    }
                }
            }
            acc
        }

        let cells = self.cells();
        let cell = |j: usize, l: usize| &cells[j * self.b + l];
        // The symmetrized sum is invariant under swapping j <-> j2 and
        // under swapping l <-> l2, so ordered pairs suffice.
        for j in 0..self.a {
            for j2 in j..self.a {
                for l in 0..self.b {
                    for l2 in l..self.b {
                        let got = dot(cell(j, l), cell(j2, l2)) + dot(cell(j, l2), cell(j2, l));
                        let expected = if j == j2 && l == l2 { 2 } else { 0 };
                        if got != expected {
                            return Some(NormedFailure { j, l, j2, l2, got, expected });
                        }
                    }
                }
            }
        }
        None
    }

    /// Exact check of `||F(x, y)||^2 = ||x||^2 ||y||^2` as a
    /// polynomial identity in the integer coefficients.
    pub fn verify_normed(&self) -> bool {
        self.normed_failure().is_none()
    }

    /// Exact check of `F_1(x, y) = x_1 y_1`: the first coefficient
    /// matrix is the elementary matrix at `(0, 0)`.
    pub fn verify_nice(&self) -> bool {
        let Some(m0) = self.mats.first() else { return false };
        m0.entries().all(|(j, l, v)| v == if j == 0 && l == 0 { 1 } else { 0 })
    }

    /// The transposed map `F'(y, x) = F(x, y)`, swapping the two
    /// arguments. Preserves normedness and niceness.
    pub fn swapped(&self) -> BilinearMap {
        BilinearMap {
            a: self.b,
            b: self.a,
            c: self.c,
            mats: self.mats.iter().map(IntMatrix::transpose).collect(),
        }
    }
}

/// The normed pairing `R^k x R^b -> R^k` encoded by a Hurwitz–Radon
/// family: `H(x, y) = sum_l y_l B_l x`, using the first `b` matrices.
pub fn hr_to_bilinear(fam: &HrFamily, b: usize) -> Result<BilinearMap> {
    if b == 0 || b > fam.size() {
        return Err(Error::Capacity(format!(
            "family of size {} cannot pair against R^{b}",
            fam.size()
        )));
    }
    let k = fam.k;
    let mats = (0..k)
        .map(|i| {
            let mut m = IntMatrix::zeros(k, b);
            for (l, bmat) in fam.mats.iter().take(b).enumerate() {
                for j in 0..k {
                    m.set(j, l, bmat.get(i, j));
                }
            }
            m
        })
        .collect();
    BilinearMap::new(k, b, k, mats)
}

/// One recursion step: given a nice normed `g: R^{n+1} x R^{m+1} ->
/// R^{n+m+1}` and a normed `h: R^k x R^{m+1} -> R^k`, splits the left
/// argument as `x = (x~, x^)` and returns
/// `F(x, y) = (g(x~, y), h(x^, y))`, a nice normed map of shape
/// `(n+k+1, m+1, n+m+k+1)`. Both exact checks are re-run on the
/// output.
pub fn compose_step(g: &BilinearMap, h: &BilinearMap) -> Result<BilinearMap> {
    if g.b != h.b {
        return Err(Error::Dimension(format!(
            "right dimensions differ: {} vs {}",
            g.b, h.b
        )));
    }
    if h.a != h.c {
        return Err(Error::Dimension(format!(
            "pairing must have square shape, got ({}, {}, {})",
            h.a, h.b, h.c
        )));
    }
    let (a, b, c) = (g.a + h.a, g.b, g.c + h.c);
    let mut mats = Vec::with_capacity(c);
    for gm in &g.mats {
        let mut m = IntMatrix::zeros(a, b);
        for (j, l, v) in gm.entries() {
            if v != 0 {
                m.set(j, l, v);
            }
        }
        mats.push(m);
    }
    for hm in &h.mats {
        let mut m = IntMatrix::zeros(a, b);
        for (j, l, v) in hm.entries() {
            if v != 0 {
                m.set(g.a + j, l, v);
            }
        }
        mats.push(m);
    }
    let out = BilinearMap::new(a, b, c, mats)?;
    if !out.verify_normed() {
        return Err(Error::Rejected("composition lost normedness".into()));
    }
    if !out.verify_nice() {
        return Err(Error::Rejected("composition lost niceness".into()));
    }
    Ok(out)
}

/// Certificate data carried by an emitted regular map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub normed: bool,
    pub nice: bool,
    pub binom_odd: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub derivation: Option<NiceDerivation>,
}

/// A verified regular map `S^n x S^m -> S^{n+m}`: the scaled
/// restriction `f = F/2` of a nice normed bilinear map to the spheres
/// `||x||^2 = 2 x_1` shifted through the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularMapSpec {
    pub n: u64,
    pub m: u64,
    /// Always the symbolic scale "1/2"; no floating point anywhere.
    pub scale: String,
    /// Sphere convention marker: "shifted" unit spheres through 0.
    pub sphere: String,
    #[serde(flatten)]
    pub map: BilinearMap,
    pub certificate: Certificate,
}

/// Packages a nice normed bilinear map of shape `(n+1, m+1, n+m+1)`
/// as a regular map between shifted spheres. The three hypotheses
/// (odd binomial `binom(n+m, n)`, normedness, niceness) are verified
/// exactly, in that order, and each failure is a distinct rejection.
pub fn emit_regular_map(
    map: &BilinearMap,
    derivation: Option<NiceDerivation>,
) -> Result<RegularMapSpec> {
    map.validate()?;
    if map.c + 1 != map.a + map.b {
        return Err(Error::Rejected(format!(
            "shape ({}, {}, {}) is not of the form (n+1, m+1, n+m+1)",
            map.a, map.b, map.c
        )));
    }
    let (n, m) = ((map.a - 1) as u64, (map.b - 1) as u64);
    if n < 1 || m < 1 {
        return Err(Error::Rejected("both sphere dimensions must be at least 1".into()));
    }
    if !binom_odd(n, m) {
        return Err(Error::Rejected(format!(
            "binom({}, {n}) is even; the restriction would not have odd degree",
            n + m
        )));
    }
    if let Some(fail) = map.normed_failure() {
        return Err(Error::Rejected(format!("map is not normed: {fail}")));
    }
    if !map.verify_nice() {
        return Err(Error::Rejected("map is not nice: first coordinate is not x_1*y_1".into()));
    }
    Ok(RegularMapSpec {
        n,
        m,
        scale: "1/2".to_string(),
        sphere: "shifted".to_string(),
        map: map.clone(),
        certificate: Certificate {
            normed: true,
            nice: true,
            binom_odd: true,
            derivation,
        },
    })
}
