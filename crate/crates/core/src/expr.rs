//! Textual serialization of coefficient-ring elements, and its
//! inverse.
//!
//! Tokens: `e` for eta, `e2` for eta squared, `a` for alpha, `l^t`
//! for the t-th power of lambda, `b^k` for powers of the unitary Bott
//! class, `th` for theta, `s^k` for powers of the Real Bott class.
//! Elements are sums of integer-scaled monomials, e.g.
//! `2*l^-1 + e2*l^0`. The printer always emits the canonical form
//! (terms in decreasing degree, explicit `l^t` factor, unit
//! coefficients omitted); the parser accepts any product of tokens
//! and integers, so printing then parsing is the identity.
//!
//! Unitary elements (`b`) cannot be mixed with the graded orthogonal
//! tokens (realification is not a ring map, so such sums have no
//! canonical home), and `th` cannot be mixed with `s`.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::traits::{One, Signed};

use crate::ideal::HomogeneousIdeal;
use crate::ko::{basis_symbol, KoElement, KrElement, KSpElement, KuElement};
use crate::{Error, Result};

/// An element of one of the four coefficient rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingElement {
    Ko(KoElement),
    Ku(KuElement),
    KSp(KSpElement),
    Kr(KrElement),
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_element(self))
    }
}

// ---- printing ----

fn push_term(out: &mut String, sign_negative: bool, body: String) {
    if out.is_empty() {
        if sign_negative {
            out.push('-');
        }
    } else {
        out.push_str(if sign_negative { " - " } else { " + " });
    }
    out.push_str(&body);
}

fn monomial(coeff_abs: &BigInt, symbols: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !coeff_abs.is_one() || symbols.is_empty() {
        parts.push(coeff_abs.to_string());
    }
    parts.extend(symbols.iter().cloned());
    parts.join("*")
}

fn ko_symbols(degree: i64) -> Vec<String> {
    let (sym, t) = basis_symbol(degree).expect("canonical terms live in nontrivial degrees");
    let mut out = Vec::new();
    if let Some(s) = sym {
        out.push(s.to_string());
    }
    out.push(format!("l^{t}"));
    out
}

pub fn format_ko(x: &KoElement) -> String {
    let mut out = String::new();
    for (degree, coeff) in x.terms().collect::<Vec<_>>().into_iter().rev() {
        push_term(&mut out, coeff.is_negative(), monomial(&coeff.abs(), &ko_symbols(degree)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_ku(x: &KuElement) -> String {
    let mut out = String::new();
    for (degree, coeff) in x.terms().collect::<Vec<_>>().into_iter().rev() {
        let k = -degree / 2;
        push_term(
            &mut out,
            coeff.is_negative(),
            monomial(&coeff.abs(), &[format!("b^{k}")]),
        );
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_ksp(x: &KSpElement) -> String {
    let mut out = String::new();
    for (degree, coeff) in x.base.terms().collect::<Vec<_>>().into_iter().rev() {
        let mut syms = ko_symbols(degree);
        syms.push("th".to_string());
        push_term(&mut out, coeff.is_negative(), monomial(&coeff.abs(), &syms));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_kr(x: &KrElement) -> String {
    let mut out = String::new();
    for (s, ko) in x.parts() {
        for (degree, coeff) in ko.terms().collect::<Vec<_>>().into_iter().rev() {
            let mut syms = ko_symbols(degree);
            if s != 0 {
                syms.push(format!("s^{s}"));
            }
            push_term(&mut out, coeff.is_negative(), monomial(&coeff.abs(), &syms));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_element(x: &RingElement) -> String {
    match x {
        RingElement::Ko(v) => format_ko(v),
        RingElement::Ku(v) => format_ku(v),
        RingElement::KSp(v) => format_ksp(v),
        RingElement::Kr(v) => format_kr(v),
    }
}

// ---- parsing ----

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Int(BigInt),
    Eta,
    EtaSq,
    Alpha,
    Theta,
    Lambda(i64),
    Beta(i64),
    Sigma(i64),
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer {digits:?}")))?;
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_lowercase() => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_lowercase() || d.is_ascii_digit() {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let exponent = |chars: &mut std::iter::Peekable<std::str::Chars>| -> Result<i64> {
                    if chars.peek() != Some(&'^') {
                        return Ok(1);
                    }
                    chars.next();
                    let mut text = String::new();
                    if chars.peek() == Some(&'-') {
                        text.push('-');
                        chars.next();
                    }
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            text.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    text.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent {text:?}")))
                };
                match ident.as_str() {
                    "e" => tokens.push(Token::Eta),
                    "e2" => tokens.push(Token::EtaSq),
                    "a" => tokens.push(Token::Alpha),
                    "th" => tokens.push(Token::Theta),
                    "l" => tokens.push(Token::Lambda(exponent(&mut chars)?)),
                    "b" => tokens.push(Token::Beta(exponent(&mut chars)?)),
                    "s" => tokens.push(Token::Sigma(exponent(&mut chars)?)),
                    other => return Err(Error::Parse(format!("unknown token {other:?}"))),
                }
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

/// Intermediate value while evaluating a product: either still a bare
/// integer, a unitary element, or a graded element over `KO` indexed
/// by (sigma power, theta present).
#[derive(Debug, Clone)]
enum Val {
    Int(BigInt),
    Ku(KuElement),
    Graded(BTreeMap<(i64, bool), KoElement>),
}

fn graded_single(sigma: i64, theta: bool, x: KoElement) -> Val {
    let mut m = BTreeMap::new();
    m.insert((sigma, theta), x);
    Val::Graded(m)
}

fn graded_insert(acc: &mut BTreeMap<(i64, bool), KoElement>, key: (i64, bool), x: KoElement) {
    let entry = acc.entry(key).or_insert_with(KoElement::zero);
    *entry = &*entry + &x;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

fn mul_vals(a: Val, b: Val) -> Result<Val> {
    Ok(match (a, b) {
        (Val::Int(x), Val::Int(y)) => Val::Int(x * y),
        (Val::Int(x), Val::Ku(y)) | (Val::Ku(y), Val::Int(x)) => {
            Val::Ku(KuElement::from_terms(y.terms().map(|(d, c)| (d, c * &x))))
        }
        (Val::Int(x), Val::Graded(g)) | (Val::Graded(g), Val::Int(x)) => {
            let mut out = BTreeMap::new();
            for (key, v) in g {
                graded_insert(&mut out, key, v.scale(&x));
            }
            Val::Graded(out)
        }
        (Val::Ku(x), Val::Ku(y)) => Val::Ku(&x * &y),
        (Val::Graded(g), Val::Graded(h)) => {
            let mut out = BTreeMap::new();
            for ((s1, t1), x) in &g {
                for ((s2, t2), y) in &h {
                    let prod = x * y;
                    // theta^2 = lambda
                    let (theta, value) = match (t1, t2) {
                        (true, true) => (false, prod.lambda_shift(1)),
                        (a, b) => (*a || *b, prod),
                    };
                    graded_insert(&mut out, (s1 + s2, theta), value);
                }
            }
            Val::Graded(out)
        }
        (Val::Ku(_), Val::Graded(_)) | (Val::Graded(_), Val::Ku(_)) => {
            return Err(Error::Parse(
                "cannot mix unitary (b) and orthogonal (e, a, l, th, s) tokens".into(),
            ))
        }
    })
}

fn add_vals(a: Val, b: Val) -> Result<Val> {
    Ok(match (a, b) {
        (Val::Int(x), Val::Int(y)) => Val::Int(x + y),
        (Val::Int(x), other) | (other, Val::Int(x)) => {
            let lifted = match &other {
                Val::Ku(_) => Val::Ku(KuElement::term(0, x)),
                _ => graded_single(0, false, KoElement::term(0, x)),
            };
            add_vals(lifted, other)?
        }
        (Val::Ku(x), Val::Ku(y)) => Val::Ku(&x + &y),
        (Val::Graded(mut g), Val::Graded(h)) => {
            for (key, v) in h {
                graded_insert(&mut g, key, v);
            }
            Val::Graded(g)
        }
        (Val::Ku(_), Val::Graded(_)) | (Val::Graded(_), Val::Ku(_)) => {
            return Err(Error::Parse(
                "cannot mix unitary (b) and orthogonal (e, a, l, th, s) tokens".into(),
            ))
        }
    })
}

fn finalize(v: Val) -> Result<RingElement> {
    match v {
        Val::Int(x) => Ok(RingElement::Ko(KoElement::term(0, x))),
        Val::Ku(x) => Ok(RingElement::Ku(x)),
        Val::Graded(g) => {
            let has_theta = g.keys().any(|(_, t)| *t);
            let plain = g.keys().any(|(_, t)| !*t);
            let has_sigma = g.keys().any(|(s, _)| *s != 0);
            if has_theta && plain {
                return Err(Error::Parse(
                    "sum mixes theta terms with plain orthogonal terms".into(),
                ));
            }
            if has_theta && has_sigma {
                return Err(Error::Parse("cannot mix th with s".into()));
            }
            if has_theta {
                let base = g
                    .into_iter()
                    .fold(KoElement::zero(), |acc, (_, x)| &acc + &x);
                Ok(RingElement::KSp(KSpElement::from_base(base)))
            } else if has_sigma {
                Ok(RingElement::Kr(KrElement::from_parts(
                    g.into_iter().map(|((s, _), x)| (s, x)),
                )))
            } else {
                let x = g.into_iter().fold(KoElement::zero(), |acc, (_, v)| &acc + &v);
                Ok(RingElement::Ko(x))
            }
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn factor(&mut self) -> Result<Val> {
        match self.next() {
            Some(Token::Int(v)) => Ok(Val::Int(v)),
            Some(Token::Eta) => Ok(graded_single(0, false, KoElement::eta())),
            Some(Token::EtaSq) => Ok(graded_single(0, false, KoElement::eta_sq())),
            Some(Token::Alpha) => Ok(graded_single(0, false, KoElement::alpha())),
            Some(Token::Theta) => Ok(graded_single(0, true, KoElement::one())),
            Some(Token::Lambda(t)) => Ok(graded_single(0, false, KoElement::lambda_pow(t))),
            Some(Token::Beta(k)) => Ok(Val::Ku(KuElement::beta_pow(k))),
            Some(Token::Sigma(k)) => Ok(graded_single(k, false, KoElement::one())),
            Some(Token::Minus) => {
                let v = self.factor()?;
                mul_vals(Val::Int(BigInt::from(-1)), v)
            }
            other => Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        }
    }

    fn term(&mut self) -> Result<Val> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            let rhs = self.factor()?;
            acc = mul_vals(acc, rhs)?;
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<Val> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = mul_vals(Val::Int(BigInt::from(-1)), acc)?;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = add_vals(acc, t)?;
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    let t = mul_vals(Val::Int(BigInt::from(-1)), t)?;
                    acc = add_vals(acc, t)?;
                }
                None => return Ok(acc),
                other => return Err(Error::Parse(format!("expected + or -, found {other:?}"))),
            }
        }
    }
}

/// Parses an element of any of the four coefficient rings.
pub fn parse_element(input: &str) -> Result<RingElement> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    finalize(parser.expr()?)
}

/// Parses an ideal literal such as `(2,e2,a)`, `(e)`, `(0)` or `(1)`.
/// Components must be homogeneous orthogonal elements.
pub fn parse_ideal(input: &str) -> Result<HomogeneousIdeal> {
    let trimmed = input.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("ideal literal must be parenthesized: {input:?}")))?;
    let mut gens = Vec::new();
    for piece in inner.split(',') {
        if piece.trim().is_empty() {
            return Err(Error::Parse("empty ideal component".into()));
        }
        match parse_element(piece)? {
            RingElement::Ko(x) => gens.push(x),
            _ => {
                return Err(Error::Parse(format!(
                    "ideal generators must be orthogonal elements: {piece:?}"
                )))
            }
        }
    }
    HomogeneousIdeal::new(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal;
    use proptest::prelude::*;

    fn ko(s: &str) -> KoElement {
        match parse_element(s).unwrap() {
            RingElement::Ko(x) => x,
            other => panic!("expected orthogonal element, got {other:?}"),
        }
    }

    #[test]
    fn canonical_string_round_trips() {
        let x = &KoElement::term(8, 2) + &KoElement::eta_sq();
        let s = format_ko(&x);
        assert_eq!(s, "2*l^-1 + e2*l^0");
        assert_eq!(ko(&s), x);
    }

    #[test]
    fn parser_accepts_loose_forms() {
        assert_eq!(ko("e*e"), KoElement::eta_sq());
        assert_eq!(ko("a*a"), KoElement::term(-8, 4));
        assert_eq!(ko("l^1*l^-1"), KoElement::one());
        assert_eq!(ko("3"), KoElement::term(0, 3));
        assert_eq!(ko("2 - 2"), KoElement::zero());
        assert_eq!(ko("-e"), KoElement::eta()); // 2-torsion
        assert_eq!(ko("e*a"), KoElement::zero());
        assert_eq!(format_ko(&ko("0")), "0");
    }

    #[test]
    fn theta_and_sigma_elements() {
        let theta = parse_element("th").unwrap();
        assert_eq!(theta, RingElement::KSp(KSpElement::theta()));
        assert_eq!(format_element(&theta), "l^0*th");

        // theta^2 = lambda lands back in KO
        let lam = parse_element("th*th").unwrap();
        assert_eq!(lam, RingElement::Ko(KoElement::lambda_pow(1)));

        let sig = parse_element("2*s^3 + e*s^-1").unwrap();
        let RingElement::Kr(x) = &sig else { panic!() };
        assert!(!x.is_zero());
        let printed = format_element(&sig);
        assert_eq!(parse_element(&printed).unwrap(), sig);
    }

    #[test]
    fn mixing_rules_are_enforced() {
        assert!(parse_element("b^1 + e").is_err());
        assert!(parse_element("b^1*l^1").is_err());
        assert!(parse_element("th*s^1").is_err());
        assert!(parse_element("1 + th").is_err());
        assert!(parse_element("x").is_err());
        assert!(parse_element("").is_err());
    }

    #[test]
    fn ideal_literals() {
        assert_eq!(parse_ideal("(2,e2,a)").unwrap(), ideal::realification_ideal());
        assert_eq!(parse_ideal("(e)").unwrap(), ideal::eta_ideal());
        assert!(parse_ideal("(0)").unwrap().is_zero_ideal());
        assert!(parse_ideal("(1)").unwrap().is_unit());
        assert!(parse_ideal("2,e2").is_err());
        assert!(parse_ideal("(1+e)").is_err()); // not homogeneous
    }

    fn arb_ko_element() -> impl Strategy<Value = KoElement> {
        proptest::collection::vec(((-12i64..=12), (-9i64..=9)), 0..5)
            .prop_map(|ts| KoElement::from_terms(ts.into_iter().map(|(d, c)| (d, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn printing_then_parsing_is_identity_ko(x in arb_ko_element()) {
            let s = format_ko(&x);
            prop_assert_eq!(ko(&s), x);
        }

        #[test]
        fn printing_then_parsing_is_identity_ku(ts in proptest::collection::vec(((-6i64..=6), (-9i64..=9)), 0..4)) {
            let x = KuElement::from_terms(ts.into_iter().map(|(k, c)| (-2 * k, BigInt::from(c))));
            let s = format_ku(&x);
            match parse_element(&s).unwrap() {
                RingElement::Ku(y) => prop_assert_eq!(x, y),
                RingElement::Ko(y) => {
                    // "0" parses as the orthogonal zero
                    prop_assert!(x.is_zero() && y.is_zero());
                }
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }

        #[test]
        fn printing_then_parsing_is_identity_ksp(x in arb_ko_element()) {
            let v = KSpElement::from_base(x);
            let s = format_ksp(&v);
            match parse_element(&s).unwrap() {
                RingElement::KSp(y) => prop_assert_eq!(v, y),
                RingElement::Ko(y) => prop_assert!(v.is_zero() && y.is_zero()),
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }
}
