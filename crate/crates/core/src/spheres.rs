//! Invariants of spheres and products of spheres derived from the
//! ideal calculus.
//!
//! The index function `phi(n, m)` with values in `{1, 2, inf}` is
//! *computed*, as the index of the degree `-(n+m)` part of the
//! complexification ideal of the `n`-sphere inside `KO^{-n-m}(pt)`,
//! and only *checked* against the embedded reference tables, which
//! serve as regression oracles. The same index describes the image of
//! algebraic K-theory inside the topological K-groups of
//! `S^n x S^m`, reported by [`kgroups_product`].

use std::fmt;

use serde::Serialize;

use crate::ideal::{self, DegreePart, HomogeneousIdeal, Subgroup, SubgroupIndex};
use crate::ko::{self, GroupDescriptor, GroupKind};
use crate::{Error, Result};

/// Value of the index function: 1, 2 or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiValue {
    One,
    Two,
    Infinity,
}

impl PhiValue {
    pub fn as_str(&self) -> &'static str {
        match self {
            PhiValue::One => "1",
            PhiValue::Two => "2",
            PhiValue::Infinity => "inf",
        }
    }
}

impl fmt::Display for PhiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for PhiValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl From<SubgroupIndex> for PhiValue {
    fn from(ix: SubgroupIndex) -> PhiValue {
        match ix {
            SubgroupIndex::Infinite => PhiValue::Infinity,
            SubgroupIndex::Finite(k) => {
                if k == 1.into() {
                    PhiValue::One
                } else if k == 2.into() {
                    PhiValue::Two
                } else {
                    // The complexification ideals only ever produce
                    // indices 1, 2 or infinity.
                    unreachable!("unexpected subgroup index {k}")
                }
            }
        }
    }
}

/// The index `phi(n, m)`, computed as the index of the degree
/// `-(n+m)` part of the complexification ideal of `S^n` in
/// `KO^{-n-m}(pt)`. Extends to all integers with period eight in both
/// arguments.
pub fn phi(n: i64, m: i64) -> PhiValue {
    let nr = n.rem_euclid(8);
    let mr = m.rem_euclid(8);
    let ideal = ideal::complexification_ideal(nr as u32);
    ideal.index_at(-(nr + mr)).into()
}

/// Reference values of `phi` for residues `0..8 x 0..8` (rows `n`,
/// columns `m`).
pub const PHI_TABLE_REFERENCE: [[PhiValue; 8]; 8] = {
    use PhiValue::{Infinity as F, One as X, Two as T};
    [
        [X, X, X, X, X, X, X, X],
        [X, X, X, F, X, X, X, F],
        [X, X, X, X, X, X, T, T],
        [X, F, X, X, X, F, T, T],
        [X, X, X, X, X, X, X, X],
        [X, X, X, F, X, X, X, F],
        [X, X, T, T, X, X, X, X],
        [X, F, T, T, X, F, X, X],
    ]
};

/// Reference orders of the groups `KO^0(S^{n+m})` reduced, i.e. of
/// `KO^{-(n+m)}(pt)`, for residues `0..8 x 0..8`.
pub const ORDER_TABLE_REFERENCE: [[PhiValue; 8]; 8] = {
    use PhiValue::{Infinity as F, One as X, Two as T};
    [
        [F, T, T, X, F, X, X, X],
        [T, T, X, F, X, X, X, F],
        [T, X, F, X, X, X, F, T],
        [X, F, X, X, X, F, T, T],
        [F, X, X, X, F, T, T, X],
        [X, X, X, F, T, T, X, F],
        [X, X, F, T, T, X, F, X],
        [X, F, T, T, X, F, X, X],
    ]
};

/// All 64 values of `phi` on residues mod 8, computed entrywise.
pub fn phi_table() -> [[PhiValue; 8]; 8] {
    std::array::from_fn(|n| std::array::from_fn(|m| phi(n as i64, m as i64)))
}

/// Order of the cyclic group `KO^{-(n+m)}(pt)` for residues mod 8.
pub fn bott_order_table() -> [[PhiValue; 8]; 8] {
    std::array::from_fn(|n| {
        std::array::from_fn(|m| match ko::ko_group(-((n + m) as i64)).kind {
            GroupKind::Trivial => PhiValue::One,
            GroupKind::OrderTwo => PhiValue::Two,
            GroupKind::InfiniteCyclic => PhiValue::Infinity,
        })
    })
}

/// A single disagreement between a computed table and its reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMismatch {
    pub n: usize,
    pub m: usize,
    pub computed: PhiValue,
    pub reference: PhiValue,
}

fn diff_tables(
    computed: &[[PhiValue; 8]; 8],
    reference: &[[PhiValue; 8]; 8],
) -> Vec<TableMismatch> {
    let mut out = Vec::new();
    for n in 0..8 {
        for m in 0..8 {
            if computed[n][m] != reference[n][m] {
                out.push(TableMismatch {
                    n,
                    m,
                    computed: computed[n][m],
                    reference: reference[n][m],
                });
            }
        }
    }
    out
}

/// Self-test: the computed `phi` table against its embedded reference.
pub fn phi_table_check() -> std::result::Result<(), Vec<TableMismatch>> {
    let d = diff_tables(&phi_table(), &PHI_TABLE_REFERENCE);
    if d.is_empty() { Ok(()) } else { Err(d) }
}

/// Self-test: the computed order table against its embedded reference.
pub fn bott_order_table_check() -> std::result::Result<(), Vec<TableMismatch>> {
    let d = diff_tables(&bott_order_table(), &ORDER_TABLE_REFERENCE);
    if d.is_empty() { Ok(()) } else { Err(d) }
}

/// The image of the complexifiable classes in the reduced group
/// `KO^p(S^n) = KO^{p-n}(pt)`: the degree `p - n` part of the
/// complexification ideal of `S^n`.
pub fn ko_sphere_reduced(p: i64, n: u32) -> DegreePart {
    ideal::complexification_ideal(n).part(p - n as i64)
}

/// The image of the complexifiable classes in the reduced group
/// `KU^p(S^n) = KU^{p-n}(pt)`: everything when `n` is even, zero when
/// `n` is odd.
pub fn ku_sphere_reduced(p: i64, n: u32) -> DegreePart {
    let degree = p - n as i64;
    let ambient = ko::ku_group(degree);
    let subgroup = if ambient.kind == GroupKind::Trivial || n % 2 == 1 {
        Subgroup::Zero
    } else {
        Subgroup::Full
    };
    DegreePart::new(degree, ambient, subgroup)
}

/// Base field of the K-theory being reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScalarField {
    R,
    C,
    H,
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarField::R => "R",
            ScalarField::C => "C",
            ScalarField::H => "H",
        })
    }
}

/// One summand of the splitting of the K-group of `S^n x S^m`: an
/// ambient cyclic group together with the index of the algebraic
/// classes inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub ambient: GroupDescriptor,
    pub index: String,
}

impl Summand {
    fn new(ambient: GroupDescriptor, index: SubgroupIndex) -> Self {
        Summand { ambient, index: index.to_string() }
    }
}

/// Which classes in the topological K-group of `S^n x S^m` are
/// realized algebraically, split along
/// `K(S^n x S^m) = K(S^{n+m}) + K(S^n) + K(S^m)` (reduced groups).
/// The two factor summands are always realized in full; only the
/// wedge summand can be a proper subgroup, of the reported index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductKGroupReport {
    pub field: ScalarField,
    pub n: u32,
    pub m: u32,
    pub wedge: Summand,
    pub factors: [Summand; 2],
}

/// The algebraic subgroup of the K-groups of `S^n x S^m` over the
/// field `R`, `C` or `H` (quaternionic groups are reported through
/// the degree shift by the `theta` generator, as `KO^{-n-m-4}(pt)`).
pub fn kgroups_product(n: u32, m: u32, field: ScalarField) -> Result<ProductKGroupReport> {
    if n < 1 || m < 1 {
        return Err(Error::OutOfRange(format!(
            "kgroups_product requires n, m >= 1, got ({n}, {m})"
        )));
    }
    let (ni, mi) = (n as i64, m as i64);
    let (wedge, factors) = match field {
        ScalarField::C => {
            let ambient = ko::ku_group(-(ni + mi));
            let index = if n % 2 == 1 && m % 2 == 1 {
                SubgroupIndex::Infinite
            } else {
                SubgroupIndex::one()
            };
            (
                Summand::new(ambient, index),
                [
                    Summand::new(ko::ku_group(-ni), SubgroupIndex::one()),
                    Summand::new(ko::ku_group(-mi), SubgroupIndex::one()),
                ],
            )
        }
        ScalarField::R => {
            let ambient = ko::ko_group(-(ni + mi));
            let index = phi_as_index(phi(ni, mi));
            (
                Summand::new(ambient, index),
                [
                    Summand::new(ko::ko_group(-ni), SubgroupIndex::one()),
                    Summand::new(ko::ko_group(-mi), SubgroupIndex::one()),
                ],
            )
        }
        ScalarField::H => {
            let ambient = ko::ko_group(-(ni + mi) - 4);
            let index = phi_as_index(phi(ni, mi + 4));
            (
                Summand::new(ambient, index),
                [
                    Summand::new(ko::ko_group(-ni - 4), SubgroupIndex::one()),
                    Summand::new(ko::ko_group(-mi - 4), SubgroupIndex::one()),
                ],
            )
        }
    };
    Ok(ProductKGroupReport { field, n, m, wedge, factors })
}

fn phi_as_index(v: PhiValue) -> SubgroupIndex {
    match v {
        PhiValue::One => SubgroupIndex::one(),
        PhiValue::Two => SubgroupIndex::Finite(2.into()),
        PhiValue::Infinity => SubgroupIndex::Infinite,
    }
}

/// Whether the complexification ideal of `S^{n+m}` is contained in
/// that of `S^n`. A regular map `S^n x S^m -> S^{n+m}` of topological
/// degree one forces this containment, so `false` witnesses that no
/// such map exists.
pub fn kr_obstruction(n: u32, m: u32) -> bool {
    let target = ideal::complexification_ideal(n + m);
    let source = ideal::complexification_ideal(n);
    target.contained_in(&source)
}

/// The failing containment behind a `false` answer of
/// [`kr_obstruction`]: a generator of the ideal of `S^{n+m}` that is
/// not in the ideal of `S^n`.
pub fn kr_obstruction_witness(n: u32, m: u32) -> Option<crate::ko::KoElement> {
    let target = ideal::complexification_ideal(n + m);
    let source = ideal::complexification_ideal(n);
    target
        .generators()
        .iter()
        .find(|g| !source.contains(g).expect("generators are homogeneous"))
        .cloned()
}

/// The unreduced complexification ideal of `S^n`, re-exported for
/// callers that work with the ideal directly.
pub fn sphere_ideal(n: u32) -> HomogeneousIdeal {
    ideal::complexification_ideal(n)
}
