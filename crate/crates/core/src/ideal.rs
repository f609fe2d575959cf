//! Homogeneous ideals in `KO^*(pt)` and their degreewise structure.
//!
//! A homogeneous ideal is given by finitely many homogeneous
//! generators. Its degree-`p` part is a subgroup of the cyclic group
//! `KO^p(pt)`, computed exactly: each degree of `KO^*(pt)` is cyclic,
//! so the part is generated by the products of each generator with the
//! single canonical basis element in the complementary degree.
//! Subgroups of `Z` are recorded by their nonnegative gcd, subgroups
//! of `Z/2` by a bit. Since `lambda` is a unit, everything is periodic
//! in the degree with period eight, and all queries reduce to one
//! period.
//!
//! The ideals attached to spheres are produced by
//! [`complexification_ideal`]: `(1)`, `(eta)`, `(2, eta^2, alpha)` or
//! `(0)` according to the dimension mod 4.

use std::fmt;

use num::bigint::BigInt;
use num::Integer;
use num::traits::{One, Signed, Zero};

use crate::ko::{self, GroupDescriptor, GroupKind, KoElement};
use crate::{Error, Result};

/// Subgroup of the cyclic coefficient group in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subgroup {
    Full,
    /// Proper subgroup `k*Z` of an infinite cyclic group, `k >= 2`.
    IndexK(BigInt),
    Zero,
}

/// Index of a subgroup in its ambient cyclic group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupIndex {
    Finite(BigInt),
    Infinite,
}

impl SubgroupIndex {
    pub fn one() -> Self {
        SubgroupIndex::Finite(BigInt::one())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, SubgroupIndex::Finite(k) if k.is_one())
    }
}

impl fmt::Display for SubgroupIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupIndex::Finite(k) => write!(f, "{k}"),
            SubgroupIndex::Infinite => write!(f, "inf"),
        }
    }
}

/// The degree-`p` part of a homogeneous ideal, as a subgroup of the
/// ambient group `KO^p(pt)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePart {
    pub degree: i64,
    pub ambient: GroupDescriptor,
    pub subgroup: Subgroup,
}

impl DegreePart {
    pub(crate) fn new(degree: i64, ambient: GroupDescriptor, subgroup: Subgroup) -> Self {
        // Normalize: IndexK(1) is Full; order-two and trivial ambients
        // only carry Full or Zero.
        let subgroup = match (&ambient.kind, subgroup) {
            (_, Subgroup::IndexK(k)) if k.is_one() => Subgroup::Full,
            (GroupKind::Trivial, _) => Subgroup::Zero,
            (g, s) => {
                debug_assert!(
                    !(matches!(g, GroupKind::OrderTwo) && matches!(s, Subgroup::IndexK(_)))
                );
                s
            }
        };
        DegreePart { degree, ambient, subgroup }
    }

    /// Index of the subgroup in the ambient group.
    pub fn index(&self) -> SubgroupIndex {
        match (&self.ambient.kind, &self.subgroup) {
            (GroupKind::Trivial, _) => SubgroupIndex::one(),
            (_, Subgroup::Full) => SubgroupIndex::one(),
            (GroupKind::OrderTwo, Subgroup::Zero) => SubgroupIndex::Finite(BigInt::from(2)),
            (GroupKind::InfiniteCyclic, Subgroup::Zero) => SubgroupIndex::Infinite,
            (GroupKind::InfiniteCyclic, Subgroup::IndexK(k)) => SubgroupIndex::Finite(k.clone()),
            (GroupKind::OrderTwo, Subgroup::IndexK(_)) => unreachable!("normalized away"),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.subgroup, Subgroup::Zero) || self.ambient.kind == GroupKind::Trivial
    }

    /// Whether this subgroup is contained in `other` (same degree).
    pub fn contained_in(&self, other: &DegreePart) -> bool {
        debug_assert_eq!(self.degree.rem_euclid(8), other.degree.rem_euclid(8));
        match (&self.subgroup, &other.subgroup) {
            (Subgroup::Zero, _) => true,
            (_, Subgroup::Full) => true,
            (_, Subgroup::Zero) => self.is_zero(),
            (Subgroup::Full, Subgroup::IndexK(_)) => false,
            (Subgroup::IndexK(a), Subgroup::IndexK(b)) => a.is_multiple_of(b),
        }
    }

    /// Whether the group element with coefficient `c` (relative to the
    /// canonical generator of this degree) lies in the subgroup.
    pub fn contains_coefficient(&self, c: &BigInt) -> bool {
        match (&self.ambient.kind, &self.subgroup) {
            (GroupKind::Trivial, _) => true,
            (_, Subgroup::Full) => true,
            (GroupKind::OrderTwo, Subgroup::Zero) => c.is_even(),
            (_, Subgroup::Zero) => c.is_zero(),
            (_, Subgroup::IndexK(k)) => c.is_multiple_of(k),
        }
    }
}

/// A finitely generated homogeneous ideal in `KO^*(pt)`.
///
/// Every generator is homogeneous and nonzero; the empty list is the
/// zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousIdeal {
    generators: Vec<KoElement>,
    is_unit: bool,
}

impl HomogeneousIdeal {
    /// Builds an ideal from generators, dropping zero ones. Rejects
    /// non-homogeneous generators.
    pub fn new<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = KoElement>,
    {
        let mut generators = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(crate::expr::format_ko(&g)));
            }
            generators.push(g);
        }
        let mut ideal = HomogeneousIdeal { generators, is_unit: false };
        // A homogeneous ideal is the unit ideal exactly when its part
        // in some (hence, by lambda-periodicity, every) degree with
        // infinite cyclic group of invertible generators is full.
        ideal.is_unit = ideal.part(0).subgroup == Subgroup::Full;
        Ok(ideal)
    }

    pub fn zero() -> Self {
        HomogeneousIdeal { generators: Vec::new(), is_unit: false }
    }

    pub fn unit() -> Self {
        HomogeneousIdeal::new([KoElement::one()]).unwrap()
    }

    pub fn generators(&self) -> &[KoElement] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.is_unit
    }

    /// The degree-`p` part. Each generator `g` of degree `d`
    /// contributes the product `g * b` where `b` is the canonical
    /// basis element of degree `p - d`; the part is the subgroup these
    /// products generate (a gcd in `Z`, a bit in `Z/2`).
    pub fn part(&self, p: i64) -> DegreePart {
        let ambient = ko::ko_group(p);
        match ambient.kind {
            GroupKind::Trivial => DegreePart::new(p, ambient, Subgroup::Zero),
            GroupKind::OrderTwo => {
                let hit = self.part_coefficients(p).any(|c| c.is_odd());
                let sub = if hit { Subgroup::Full } else { Subgroup::Zero };
                DegreePart::new(p, ambient, sub)
            }
            GroupKind::InfiniteCyclic => {
                let mut g = BigInt::zero();
                for c in self.part_coefficients(p) {
                    g = g.gcd(&c);
                }
                let sub = if g.is_zero() {
                    Subgroup::Zero
                } else if g.is_one() {
                    Subgroup::Full
                } else {
                    Subgroup::IndexK(g)
                };
                DegreePart::new(p, ambient, sub)
            }
        }
    }

    /// Coefficients (relative to the canonical generator of degree
    /// `p`) of the products generator * complementary basis element.
    fn part_coefficients(&self, p: i64) -> impl Iterator<Item = BigInt> + '_ {
        self.generators.iter().filter_map(move |g| {
            let d = g.homogeneous_degree()?;
            let b = KoElement::term(p - d, 1);
            let prod = g * &b;
            let c = prod.coefficient(p);
            (!c.is_zero()).then_some(c.abs())
        })
    }

    /// Index of the degree-`p` part in `KO^p(pt)`.
    pub fn index_at(&self, p: i64) -> SubgroupIndex {
        if self.is_unit {
            return SubgroupIndex::one();
        }
        self.part(p).index()
    }

    /// Membership of a homogeneous element.
    pub fn contains(&self, x: &KoElement) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let Some(d) = x.homogeneous_degree() else {
            return Err(Error::NotHomogeneous(crate::expr::format_ko(x)));
        };
        Ok(self.part(d).contains_coefficient(&x.coefficient(d)))
    }

    /// Ideal containment `self` in `other`, checked generatorwise.
    pub fn contained_in(&self, other: &HomogeneousIdeal) -> bool {
        self.generators
            .iter()
            .all(|g| other.contains(g).expect("generators are homogeneous"))
    }

    /// Whether the ideal is zero (all parts vanish over one period).
    pub fn is_zero_ideal(&self) -> bool {
        (0..8).all(|r| self.part(-r).is_zero())
    }
}

impl fmt::Display for HomogeneousIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(crate::expr::format_ko)
            .collect();
        write!(f, "({})", gens.join(","))
    }
}

/// The ideal recording which reduced K-theory classes of the
/// `n`-sphere extend over a complexification:
/// `(1)`, `(eta)`, `(2, eta^2, alpha)`, `(0)` for
/// `n = 0, 1, 2, 3 mod 4`.
pub fn complexification_ideal(n: u32) -> HomogeneousIdeal {
    let gens = match n % 4 {
        0 => vec![KoElement::one()],
        1 => vec![KoElement::eta()],
        2 => vec![KoElement::term(0, 2), KoElement::eta_sq(), KoElement::alpha()],
        _ => vec![],
    };
    HomogeneousIdeal::new(gens).expect("fixed homogeneous generators")
}

/// The ideal `(eta)`.
pub fn eta_ideal() -> HomogeneousIdeal {
    HomogeneousIdeal::new([KoElement::eta()]).unwrap()
}

/// The ideal `(2, eta^2, alpha)`, the image of realification.
pub fn realification_ideal() -> HomogeneousIdeal {
    HomogeneousIdeal::new([
        KoElement::term(0, 2),
        KoElement::eta_sq(),
        KoElement::alpha(),
    ])
    .unwrap()
}

/// The four structural implications every homogeneous ideal `J` of
/// `KO^*(pt)` satisfies:
///
/// 1. if `J_(0) = 0` then `J` is contained in `(eta)`,
/// 2. if `J_(-1) = 0` then `J` is contained in `(2, eta^2, alpha)`,
/// 3. if `J_(0) = 0` and `J_(-2) = 0` then `J = (0)`,
/// 4. if `J_(-4) = 0` and `J_(-2) = 0` then `J = (0)`.
///
/// Returns whether each implication holds for `J` (they always do;
/// evaluating them is a structural self-check, not a filter).
pub fn lemma_implications(j: &HomogeneousIdeal) -> [bool; 4] {
    let contained_via_parts = |big: &HomogeneousIdeal| -> bool {
        (0..8).all(|r| j.part(-r).contained_in(&big.part(-r)))
    };
    let h0 = j.part(0).is_zero();
    let h1 = j.part(-1).is_zero();
    let h2 = j.part(-2).is_zero();
    let h4 = j.part(-4).is_zero();
    [
        !h0 || contained_via_parts(&eta_ideal()),
        !h1 || contained_via_parts(&realification_ideal()),
        !(h0 && h2) || j.is_zero_ideal(),
        !(h4 && h2) || j.is_zero_ideal(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(gens: &[KoElement]) -> HomogeneousIdeal {
        HomogeneousIdeal::new(gens.to_vec()).unwrap()
    }

    #[test]
    fn generator_spans_its_own_degree() {
        let j = ideal(&[KoElement::alpha()]);
        assert_eq!(j.part(-4).subgroup, Subgroup::Full);
    }

    #[test]
    fn realification_ideal_parts() {
        let j = realification_ideal();
        // Degree -8: generated by 2*lambda and alpha^2 = 4*lambda.
        let p = j.part(-8);
        assert_eq!(p.subgroup, Subgroup::IndexK(BigInt::from(2)));
        assert_eq!(p.index(), SubgroupIndex::Finite(BigInt::from(2)));
        // Degree -1: 2*eta = 0, and eta^2, alpha reach only trivial
        // complements, so the part vanishes in a Z/2 ambient.
        let p = j.part(-1);
        assert_eq!(p.subgroup, Subgroup::Zero);
        assert_eq!(p.index(), SubgroupIndex::Finite(BigInt::from(2)));
        // Degree -4: alpha itself makes the part full.
        assert_eq!(j.part(-4).subgroup, Subgroup::Full);
        // Degree 0: gcd(2, 4) = 2.
        assert_eq!(j.part(0).subgroup, Subgroup::IndexK(BigInt::from(2)));
    }

    #[test]
    fn eta_ideal_vanishes_in_degree_zero() {
        let j = eta_ideal();
        assert_eq!(j.part(0).subgroup, Subgroup::Zero);
        assert_eq!(j.index_at(0), SubgroupIndex::Infinite);
        // In its own degree it is everything.
        assert_eq!(j.part(-1).subgroup, Subgroup::Full);
        // eta * eta spans degree -2.
        assert_eq!(j.part(-2).subgroup, Subgroup::Full);
    }

    #[test]
    fn unit_and_zero_ideal_indices() {
        let unit = HomogeneousIdeal::unit();
        assert!(unit.is_unit());
        for p in -12..=12 {
            assert!(unit.index_at(p).is_one());
        }
        let zero = HomogeneousIdeal::zero();
        assert_eq!(zero.index_at(-8), SubgroupIndex::Infinite);
        assert!(zero.index_at(-3).is_one()); // trivial ambient
        assert!(zero.is_zero_ideal());
    }

    #[test]
    fn membership_examples() {
        let eta = eta_ideal();
        assert!(eta.contains(&KoElement::eta_sq()).unwrap());
        let r = realification_ideal();
        assert!(!r.contains(&KoElement::eta()).unwrap());
        assert!(HomogeneousIdeal::zero().contains(&KoElement::zero()).unwrap());
        // Non-homogeneous membership queries are rejected.
        let mixed = &KoElement::one() + &KoElement::eta();
        assert!(r.contains(&mixed).is_err());
    }

    #[test]
    fn eta_and_realification_ideals_are_incomparable() {
        let eta = eta_ideal();
        let r = realification_ideal();
        assert!(!eta.contained_in(&r));
        assert!(!r.contained_in(&eta));
    }

    #[test]
    fn complexification_ideals_by_residue() {
        assert!(complexification_ideal(4).is_unit());
        assert_eq!(complexification_ideal(9), eta_ideal());
        assert_eq!(complexification_ideal(2), realification_ideal());
        assert!(complexification_ideal(7).is_zero_ideal());
        for n in 0..32 {
            assert_eq!(complexification_ideal(n), complexification_ideal(n % 4));
        }
    }

    #[test]
    fn lemma_implications_hold_on_named_ideals() {
        for j in [
            eta_ideal(),
            HomogeneousIdeal::zero(),
            ideal(&[KoElement::lambda_pow(1)]),
            realification_ideal(),
            HomogeneousIdeal::unit(),
        ] {
            assert_eq!(lemma_implications(&j), [true; 4], "failed for {j}");
        }
    }

    #[test]
    fn lemma_implications_exhaustive_small_sweep() {
        // All ideals generated by up to 4 canonical basis elements
        // with degrees in -8..=8.
        let basis: Vec<KoElement> = (-8..=8)
            .filter_map(|d| {
                let e = KoElement::term(d, 1);
                (!e.is_zero()).then_some(e)
            })
            .collect();
        let mut stack = vec![(0usize, Vec::new())];
        while let Some((start, gens)) = stack.pop() {
            let j = ideal(&gens);
            assert_eq!(lemma_implications(&j), [true; 4], "failed for {j}");
            if gens.len() < 4 {
                for i in start..basis.len() {
                    let mut next = gens.clone();
                    next.push(basis[i].clone());
                    stack.push((i, next));
                }
            }
        }
    }

    fn arb_ideal() -> impl Strategy<Value = HomogeneousIdeal> {
        proptest::collection::vec(((-12i64..=12), (-6i64..=6)), 0..4).prop_map(|gs| {
            HomogeneousIdeal::new(gs.into_iter().map(|(d, c)| KoElement::term(d, c))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn parts_are_lambda_periodic(j in arb_ideal(), p in -24i64..=24) {
            prop_assert_eq!(j.part(p).subgroup, j.part(p - 8).subgroup);
        }

        #[test]
        fn larger_ideals_have_dividing_index(j in arb_ideal(), extra in (-12i64..=12, -6i64..=6), p in -12i64..=12) {
            let mut gens: Vec<KoElement> = j.generators().to_vec();
            gens.push(KoElement::term(extra.0, extra.1));
            let bigger = HomogeneousIdeal::new(gens).unwrap();
            // index of the bigger ideal divides index of the smaller
            match (bigger.index_at(p), j.index_at(p)) {
                (SubgroupIndex::Finite(a), SubgroupIndex::Finite(b)) => {
                    prop_assert!(b.is_multiple_of(&a));
                }
                (SubgroupIndex::Infinite, small) => {
                    prop_assert_eq!(small, SubgroupIndex::Infinite);
                }
                (SubgroupIndex::Finite(_), SubgroupIndex::Infinite) => {}
            }
        }

        #[test]
        fn lemma_implications_hold_generically(j in arb_ideal()) {
            prop_assert_eq!(lemma_implications(&j), [true; 4]);
        }
    }
}
