//! Coefficient rings of orthogonal, unitary, quaternionic and Real
//! K-theory, with all arithmetic in canonical form.
//!
//! `KO^*(pt) = Z[eta, alpha, lambda, lambda^{-1}] / (2*eta, eta^3, alpha*eta, alpha^2 - 4*lambda)`
//! with `|eta| = -1`, `|alpha| = -4`, `|lambda| = -8`. As a graded
//! group it is cyclic in every degree, with the canonical generators
//!
//! * `lambda^{-t}` in degree `8t` (infinite order),
//! * `eta*lambda^{-t}` in degree `8t - 1` (order two),
//! * `eta^2*lambda^{-t}` in degree `8t - 2` (order two),
//! * `alpha*lambda^{-t}` in degree `8t - 4` (infinite order),
//!
//! and zero in all other degrees. `KU^*(pt) = Z[beta, beta^{-1}]` with
//! `|beta| = -2`. `KSp^*(pt)` is the free `KO^*(pt)`-module on one
//! generator `theta` of degree `-4`, with `theta^2 = lambda` under the
//! pairing back into `KO`. `KR^*(pt) = KO^*(pt)[sigma, sigma^{-1}]`
//! with `|sigma| = -1 - tau` in bidegrees `p + q*tau`.
//!
//! Elements are immutable and every operation returns canonical form:
//! order-two coefficients are stored reduced mod 2 and zero terms are
//! never kept, so equality is plain coefficient comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Which cyclic group sits in a given degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "0")]
    Trivial,
    #[serde(rename = "Z")]
    InfiniteCyclic,
    #[serde(rename = "Z/2")]
    OrderTwo,
}

/// A coefficient group in a single (bi)degree: its isomorphism type
/// and a label for the canonical generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

impl GroupDescriptor {
    pub fn trivial() -> Self {
        GroupDescriptor { kind: GroupKind::Trivial, generator: None }
    }

    fn with(kind: GroupKind, generator: String) -> Self {
        GroupDescriptor { kind, generator: Some(generator) }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupKind::Trivial => "0",
            GroupKind::InfiniteCyclic => "Z",
            GroupKind::OrderTwo => "Z/2",
        };
        match &self.generator {
            Some(g) => write!(f, "{name}<{g}>"),
            None => write!(f, "{name}"),
        }
    }
}

/// The four varieties of canonical basis generator in `KO^*(pt)`,
/// keyed by degree mod 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GenKind {
    Unit,   // lambda power, degree = 0 mod 8
    Eta,    // degree = -1 mod 8
    EtaSq,  // degree = -2 mod 8
    Alpha,  // degree = -4 mod 8
}

fn gen_kind(degree: i64) -> Option<GenKind> {
    match degree.rem_euclid(8) {
        0 => Some(GenKind::Unit),
        7 => Some(GenKind::Eta),
        6 => Some(GenKind::EtaSq),
        4 => Some(GenKind::Alpha),
        _ => None,
    }
}

/// True when the coefficient group in this degree has order two.
pub fn is_torsion_degree(degree: i64) -> bool {
    matches!(gen_kind(degree), Some(GenKind::Eta) | Some(GenKind::EtaSq))
}

/// Symbol and lambda exponent of the canonical generator in `degree`,
/// e.g. degree `-1` is `(Some("e"), 0)` and degree `8` is `(None, -1)`.
/// Returns `None` for degrees with trivial group.
pub fn basis_symbol(degree: i64) -> Option<(Option<&'static str>, i64)> {
    match gen_kind(degree)? {
        GenKind::Unit => Some((None, -degree / 8)),
        GenKind::Eta => Some((Some("e"), -(degree + 1) / 8)),
        GenKind::EtaSq => Some((Some("e2"), -(degree + 2) / 8)),
        GenKind::Alpha => Some((Some("a"), -(degree + 4) / 8)),
    }
}

fn basis_label(degree: i64) -> Option<String> {
    let (sym, t) = basis_symbol(degree)?;
    Some(match sym {
        None if t == 0 => "1".to_string(),
        None => format!("l^{t}"),
        Some(s) if t == 0 => s.to_string(),
        Some(s) => format!("{s}*l^{t}"),
    })
}

/// The group `KO^p(pt)`: infinite cyclic for `p = 0, 4 mod 8`, order
/// two for `p = 6, 7 mod 8`, trivial otherwise; period eight.
pub fn ko_group(p: i64) -> GroupDescriptor {
    match gen_kind(p) {
        None => GroupDescriptor::trivial(),
        Some(GenKind::Unit) | Some(GenKind::Alpha) => {
            GroupDescriptor::with(GroupKind::InfiniteCyclic, basis_label(p).unwrap())
        }
        Some(GenKind::Eta) | Some(GenKind::EtaSq) => {
            GroupDescriptor::with(GroupKind::OrderTwo, basis_label(p).unwrap())
        }
    }
}

/// The group `KU^p(pt)`: infinite cyclic on `beta^{-p/2}` in even
/// degrees, trivial in odd ones.
pub fn ku_group(p: i64) -> GroupDescriptor {
    if p % 2 != 0 {
        return GroupDescriptor::trivial();
    }
    let k = -p / 2;
    let label = if k == 0 { "1".to_string() } else { format!("b^{k}") };
    GroupDescriptor::with(GroupKind::InfiniteCyclic, label)
}

/// Product of the canonical generators in degrees `p` and `q`:
/// `Some(multiplier)` with the result living in degree `p + q`, or
/// `None` when the product vanishes. Encodes the relations
/// `eta^3 = 0`, `alpha*eta = 0` and `alpha^2 = 4*lambda`.
fn basis_product(p: i64, q: i64) -> Option<i64> {
    use GenKind::*;
    let (a, b) = (gen_kind(p)?, gen_kind(q)?);
    match (a, b) {
        (Unit, _) | (_, Unit) => Some(1),
        (Eta, Eta) => Some(1),
        (Alpha, Alpha) => Some(4),
        _ => None, // eta*eta^2, eta*alpha, eta^2*eta^2, eta^2*alpha
    }
}

/// An element of `KO^*(pt)` as a finite sum of canonical generators.
///
/// Keys are degrees, values the integer coefficient of the canonical
/// generator in that degree. Invariants: no zero coefficients, no
/// terms in trivial degrees, order-two coefficients reduced to `0..2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KoElement {
    terms: BTreeMap<i64, BigInt>,
}

fn insert_canonical(terms: &mut BTreeMap<i64, BigInt>, degree: i64, coeff: BigInt) {
    if gen_kind(degree).is_none() {
        return; // the group there is trivial
    }
    let entry = terms.entry(degree).or_insert_with(BigInt::zero);
    *entry += coeff;
    if is_torsion_degree(degree) {
        let two = BigInt::from(2);
        *entry = ((entry.clone() % &two) + &two) % &two;
    }
    if entry.is_zero() {
        terms.remove(&degree);
    }
}

impl KoElement {
    pub fn zero() -> Self {
        KoElement::default()
    }

    pub fn one() -> Self {
        KoElement::term(0, BigInt::one())
    }

    pub fn eta() -> Self {
        KoElement::term(-1, BigInt::one())
    }

    pub fn eta_sq() -> Self {
        KoElement::term(-2, BigInt::one())
    }

    pub fn alpha() -> Self {
        KoElement::term(-4, BigInt::one())
    }

    /// `lambda^t`, the invertible generator of degree `-8t`.
    pub fn lambda_pow(t: i64) -> Self {
        KoElement::term(-8 * t, BigInt::one())
    }

    /// A single term `coeff * (canonical generator of `degree`)`,
    /// canonicalized.
    pub fn term(degree: i64, coeff: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        insert_canonical(&mut terms, degree, coeff.into());
        KoElement { terms }
    }

    /// Builds an element from arbitrary raw terms, canonicalizing as
    /// it goes (summing duplicates, reducing mod 2, dropping zeros and
    /// trivial degrees).
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut terms = BTreeMap::new();
        for (d, c) in iter {
            insert_canonical(&mut terms, d, c);
        }
        KoElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of a homogeneous element. Zero counts as homogeneous of
    /// every degree and reports `None`; a multi-term element is not
    /// homogeneous and also reports `None`; use [`Self::is_homogeneous`]
    /// to distinguish.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.terms.len() == 1 {
            self.terms.keys().next().copied()
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.len() <= 1
    }

    pub fn coefficient(&self, degree: i64) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Multiplication by `lambda^t`, an isomorphism shifting degrees
    /// by `-8t`.
    pub fn lambda_shift(&self, t: i64) -> KoElement {
        KoElement {
            terms: self.terms.iter().map(|(d, c)| (d - 8 * t, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> KoElement {
        KoElement::from_terms(self.terms.iter().map(|(d, c)| (*d, c * k)))
    }
}

impl Add for &KoElement {
    type Output = KoElement;
    fn add(self, rhs: &KoElement) -> KoElement {
        let mut terms = self.terms.clone();
        for (d, c) in &rhs.terms {
            insert_canonical(&mut terms, *d, c.clone());
        }
        KoElement { terms }
    }
}

impl Sub for &KoElement {
    type Output = KoElement;
    fn sub(self, rhs: &KoElement) -> KoElement {
        self + &(-rhs)
    }
}

impl Neg for &KoElement {
    type Output = KoElement;
    fn neg(self) -> KoElement {
        KoElement::from_terms(self.terms.iter().map(|(d, c)| (*d, -c)))
    }
}

impl Mul for &KoElement {
    type Output = KoElement;
    fn mul(self, rhs: &KoElement) -> KoElement {
        let mut terms = BTreeMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                if let Some(k) = basis_product(*p, *q) {
                    insert_canonical(&mut terms, p + q, a * b * BigInt::from(k));
                }
            }
        }
        KoElement { terms }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl $trait for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

forward_owned_binop!(KoElement, Add, add);
forward_owned_binop!(KoElement, Sub, sub);
forward_owned_binop!(KoElement, Mul, mul);

/// An element of `KU^*(pt) = Z[beta, beta^{-1}]`. Keys are (even)
/// degrees, values the coefficient of `beta^{-p/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KuElement {
    terms: BTreeMap<i64, BigInt>,
}

impl KuElement {
    pub fn zero() -> Self {
        KuElement::default()
    }

    pub fn one() -> Self {
        KuElement::beta_pow(0)
    }

    /// `beta^k`, of degree `-2k`.
    pub fn beta_pow(k: i64) -> Self {
        KuElement::term(-2 * k, BigInt::one())
    }

    pub fn term(degree: i64, coeff: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c: BigInt = coeff.into();
        if degree % 2 == 0 && !c.is_zero() {
            terms.insert(degree, c);
        }
        KuElement { terms }
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (d, c) in iter {
            if d % 2 != 0 {
                continue;
            }
            let entry = terms.entry(d).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&d);
            }
        }
        KuElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, degree: i64) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }
}

impl Add for &KuElement {
    type Output = KuElement;
    fn add(self, rhs: &KuElement) -> KuElement {
        KuElement::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(d, c)| (*d, c.clone())),
        )
    }
}

impl Neg for &KuElement {
    type Output = KuElement;
    fn neg(self) -> KuElement {
        KuElement::from_terms(self.terms.iter().map(|(d, c)| (*d, -c)))
    }
}

impl Sub for &KuElement {
    type Output = KuElement;
    fn sub(self, rhs: &KuElement) -> KuElement {
        self + &(-rhs)
    }
}

impl Mul for &KuElement {
    type Output = KuElement;
    fn mul(self, rhs: &KuElement) -> KuElement {
        KuElement::from_terms(self.terms.iter().flat_map(|(p, a)| {
            rhs.terms.iter().map(move |(q, b)| (p + q, a * b))
        }))
    }
}

forward_owned_binop!(KuElement, Add, add);
forward_owned_binop!(KuElement, Sub, sub);
forward_owned_binop!(KuElement, Mul, mul);

/// An element of `KSp^*(pt)`, the free `KO^*(pt)`-module on the
/// degree `-4` generator `theta`. The stored base is the `KO`
/// cofactor: the element is `base * theta`.
///
/// `KSp` is deliberately not given a ring structure of its own; the
/// only products are the `KO`-module action and the pairing
/// [`theta_mul`] back into `KO` via `theta^2 = lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KSpElement {
    pub base: KoElement,
}

impl KSpElement {
    pub fn zero() -> Self {
        KSpElement::default()
    }

    /// `theta` itself.
    pub fn theta() -> Self {
        KSpElement { base: KoElement::one() }
    }

    pub fn from_base(base: KoElement) -> Self {
        KSpElement { base }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// The `KO`-module action.
    pub fn scale_ko(&self, x: &KoElement) -> KSpElement {
        KSpElement { base: &self.base * x }
    }
}

impl Add for &KSpElement {
    type Output = KSpElement;
    fn add(self, rhs: &KSpElement) -> KSpElement {
        KSpElement { base: &self.base + &rhs.base }
    }
}

forward_owned_binop!(KSpElement, Add, add);

/// Realification `KU^*(pt) -> KO^*(pt)`. Additive but *not*
/// multiplicative: on powers of the Bott class,
/// `r(beta^n) = 2*lambda^k, eta^2*lambda^k, alpha*lambda^k, 0`
/// for `n = 4k, 4k+1, 4k+2, 4k+3`.
pub fn realify(x: &KuElement) -> KoElement {
    let mut out = KoElement::zero();
    for (d, c) in x.terms() {
        let n = -d / 2;
        let k = n.div_euclid(4);
        let t = match n.rem_euclid(4) {
            0 => KoElement::term(-8 * k, c * BigInt::from(2)),
            1 => KoElement::term(-8 * k - 2, c.clone()),
            2 => KoElement::term(-8 * k - 4, c.clone()),
            _ => KoElement::zero(),
        };
        out = &out + &t;
    }
    out
}

/// Quaternionification `KU^*(pt) -> KSp^*(pt)`: on powers of the Bott
/// class, `h(beta^n) = lambda^{k-1}*alpha*theta, 0, 2*lambda^k*theta,
/// eta^2*lambda^k*theta` for `n = 4k, 4k+1, 4k+2, 4k+3`.
pub fn quaternionify(x: &KuElement) -> KSpElement {
    let mut base = KoElement::zero();
    for (d, c) in x.terms() {
        let n = -d / 2;
        let k = n.div_euclid(4);
        let t = match n.rem_euclid(4) {
            0 => KoElement::term(-8 * (k - 1) - 4, c.clone()),
            2 => KoElement::term(-8 * k, c * BigInt::from(2)),
            3 => KoElement::term(-8 * k - 2, c.clone()),
            _ => KoElement::zero(),
        };
        base = &base + &t;
    }
    KSpElement { base }
}

/// The pairing `KSp -> KO` given by one more multiplication by
/// `theta`: since `theta^2 = lambda`, `base*theta` maps to
/// `base*lambda`.
pub fn theta_mul(x: &KSpElement) -> KoElement {
    x.base.lambda_shift(1)
}

/// An element of `KR^*(pt) = KO^*(pt)[sigma, sigma^{-1}]`, graded by
/// the power of `sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KrElement {
    parts: BTreeMap<i64, KoElement>,
}

impl KrElement {
    pub fn zero() -> Self {
        KrElement::default()
    }

    pub fn from_ko(x: KoElement) -> Self {
        KrElement::from_parts([(0, x)])
    }

    /// `sigma^k`, of bidegree `-k - k*tau`.
    pub fn sigma_pow(k: i64) -> Self {
        KrElement::from_parts([(k, KoElement::one())])
    }

    pub fn from_parts<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, KoElement)>,
    {
        let mut parts: BTreeMap<i64, KoElement> = BTreeMap::new();
        for (s, x) in iter {
            let entry = parts.entry(s).or_insert_with(KoElement::zero);
            *entry = &*entry + &x;
            if entry.is_zero() {
                parts.remove(&s);
            }
        }
        KrElement { parts }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (i64, &KoElement)> {
        self.parts.iter().map(|(s, x)| (*s, x))
    }
}

impl Add for &KrElement {
    type Output = KrElement;
    fn add(self, rhs: &KrElement) -> KrElement {
        KrElement::from_parts(
            self.parts
                .iter()
                .chain(rhs.parts.iter())
                .map(|(s, x)| (*s, x.clone())),
        )
    }
}

impl Mul for &KrElement {
    type Output = KrElement;
    fn mul(self, rhs: &KrElement) -> KrElement {
        KrElement::from_parts(self.parts.iter().flat_map(|(s, x)| {
            rhs.parts.iter().map(move |(t, y)| (s + t, x * y))
        }))
    }
}

forward_owned_binop!(KrElement, Add, add);
forward_owned_binop!(KrElement, Mul, mul);

/// A bidegree `p + q*tau` for Real K-theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }
}

/// The group `KR^{p+q*tau}(pt)`. Since `KR^*(pt) = KO^*(pt)[sigma,
/// sigma^{-1}]` with `|sigma| = -1 - tau`, the group in bidegree
/// `(p, q)` is `KO^{p-q}(pt)`, generated by the `KO` generator times
/// `sigma^{-q}`.
pub fn kr_coeff(b: Bidegree) -> GroupDescriptor {
    let base = ko_group(b.p - b.q);
    if base.kind == GroupKind::Trivial || b.q == 0 {
        return base;
    }
    let s = format!("s^{}", -b.q);
    let generator = match base.generator.as_deref() {
        Some("1") | None => s,
        Some(g) => format!("{g}*{s}"),
    };
    GroupDescriptor { kind: base.kind, generator: Some(generator) }
}
