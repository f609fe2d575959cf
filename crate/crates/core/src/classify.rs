//! Per-pair verdicts on which topological degrees regular maps
//! `S^n x S^m -> S^{n+m}` can realize, and a global consistency
//! audit.
//!
//! The no-go side is computed, not looked up: the ideal containment
//! behind [`crate::spheres::kr_obstruction`] is evaluated in both
//! argument orders. The positive side is a replayable
//! [`NiceDerivation`]. When neither side decides, the verdict is an
//! honest `Unknown`, labeled with the (conjectural) prediction of the
//! binomial parity.

use std::fmt;

use serde::Serialize;

use crate::bilinear::{binom_odd, certify_nice, realize, NiceDerivation, SearchBudget};
use crate::expr::format_ko;
use crate::spheres::{kr_obstruction, kr_obstruction_witness};
use crate::{Error, Result};

/// Which degrees are realized by regular maps `S^n x S^m -> S^{n+m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every integer is realized (a nice pair with a certificate).
    AllDegrees,
    /// Exactly the even integers are realized.
    EvenDegreesOnly,
    /// Every regular map is homotopic to a constant one.
    OnlyNullHomotopic,
    /// Undecided here; the parity heuristic predicts all degrees.
    UnknownConjecturedAll,
    /// Undecided here; the parity heuristic predicts even degrees only.
    UnknownConjecturedEvenOnly,
}

impl Verdict {
    pub fn is_unknown(&self) -> bool {
        matches!(
            self,
            Verdict::UnknownConjecturedAll | Verdict::UnknownConjecturedEvenOnly
        )
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::AllDegrees => "AllDegrees",
            Verdict::EvenDegreesOnly => "EvenDegreesOnly",
            Verdict::OnlyNullHomotopic => "OnlyNullHomotopic",
            Verdict::UnknownConjecturedAll => "UnknownConjecturedAll",
            Verdict::UnknownConjecturedEvenOnly => "UnknownConjecturedEvenOnly",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What backs a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Both dimensions odd: the vanishing theorem for odd-odd pairs.
    OddOddVanishing,
    /// The computed ideal containment failed in the recorded argument
    /// order; `witness` is a generator of the target ideal that does
    /// not lie in the factor ideal.
    IdealObstruction { first: u32, second: u32, witness: String },
    /// A replayable derivation of the pair.
    NiceCertificate { derivation: NiceDerivation },
    /// Nothing decided; records the binomial parity the conjecture
    /// would use.
    ParityPrediction { binom_odd: bool },
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::OddOddVanishing => write!(f, "odd-odd vanishing"),
            Evidence::IdealObstruction { first, second, witness } => {
                write!(
                    f,
                    "ideal obstruction at ({first}, {second}): {witness} does not extend"
                )
            }
            Evidence::NiceCertificate { derivation } => {
                write!(f, "nice-pair certificate with {} steps", derivation.steps.len())
            }
            Evidence::ParityPrediction { binom_odd } => {
                write!(
                    f,
                    "undecided; binomial parity predicts {}",
                    if *binom_odd { "all degrees" } else { "even degrees only" }
                )
            }
        }
    }
}

/// Verdict plus its evidence for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStatus {
    pub n: u32,
    pub m: u32,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

/// Classifies the pair `(n, m)`, in precedence order: the odd-odd
/// vanishing theorem, then the computed ideal obstruction (both
/// argument orders), then the certification search, and otherwise an
/// unknown verdict labeled by the binomial parity.
pub fn classify(n: u32, m: u32, budget: &SearchBudget) -> Result<DegreeStatus> {
    if n < 1 || m < 1 {
        return Err(Error::OutOfRange(format!(
            "classify requires n, m >= 1, got ({n}, {m})"
        )));
    }
    if n % 2 == 1 && m % 2 == 1 {
        return Ok(DegreeStatus {
            n,
            m,
            verdict: Verdict::OnlyNullHomotopic,
            evidence: Evidence::OddOddVanishing,
        });
    }
    for (first, second) in [(n, m), (m, n)] {
        if !kr_obstruction(first, second) {
            let witness = kr_obstruction_witness(first, second)
                .map(|g| format_ko(&g))
                .unwrap_or_default();
            return Ok(DegreeStatus {
                n,
                m,
                verdict: Verdict::EvenDegreesOnly,
                evidence: Evidence::IdealObstruction { first, second, witness },
            });
        }
    }
    if let Some(derivation) = certify_nice(n as u64, m as u64, budget) {
        return Ok(DegreeStatus {
            n,
            m,
            verdict: Verdict::AllDegrees,
            evidence: Evidence::NiceCertificate { derivation },
        });
    }
    let parity = binom_odd(n as u64, m as u64);
    Ok(DegreeStatus {
        n,
        m,
        verdict: if parity {
            Verdict::UnknownConjecturedAll
        } else {
            Verdict::UnknownConjecturedEvenOnly
        },
        evidence: Evidence::ParityPrediction { binom_odd: parity },
    })
}

/// One violated audit assertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: u32,
    pub m: u32,
    pub check: String,
}

/// Result of sweeping all pairs `1 <= n, m <= n_max`.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub n_max: u32,
    pub pairs: usize,
    pub all_degrees: usize,
    pub even_only: usize,
    pub null_homotopic: usize,
    pub unknown: usize,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Cross-checks every verdict in the square against the others:
/// verdicts are symmetric; no certified pair is matched by a no-go;
/// every even-only pair has an even binomial (consistency with the
/// parity conjecture); every certificate replays and its realized map
/// passes both exact checks.
pub fn consistency_audit(n_max: u32, budget: &SearchBudget) -> AuditReport {
    let mut report = AuditReport {
        n_max,
        pairs: 0,
        all_degrees: 0,
        even_only: 0,
        null_homotopic: 0,
        unknown: 0,
        violations: Vec::new(),
    };
    let fail = |n: u32, m: u32, check: &str, violations: &mut Vec<Violation>| {
        violations.push(Violation { n, m, check: check.to_string() });
    };
    for n in 1..=n_max {
        for m in 1..=n_max {
            report.pairs += 1;
            let status = classify(n, m, budget).expect("positive pair");
            match status.verdict {
                Verdict::AllDegrees => report.all_degrees += 1,
                Verdict::EvenDegreesOnly => report.even_only += 1,
                Verdict::OnlyNullHomotopic => report.null_homotopic += 1,
                _ => report.unknown += 1,
            }

            let mirrored = classify(m, n, budget).expect("positive pair");
            if status.verdict != mirrored.verdict {
                fail(n, m, "verdict is not symmetric", &mut report.violations);
            }

            let no_go =
                (n % 2 == 1 && m % 2 == 1) || !kr_obstruction(n, m) || !kr_obstruction(m, n);
            match status.verdict {
                Verdict::AllDegrees => {
                    if no_go {
                        fail(n, m, "certified pair matched by a no-go", &mut report.violations);
                    }
                    let Evidence::NiceCertificate { derivation } = &status.evidence else {
                        fail(n, m, "certified pair without certificate", &mut report.violations);
                        continue;
                    };
                    match derivation.replay() {
                        Ok(state) if state == (n as u64, m as u64) => {}
                        _ => {
                            fail(n, m, "certificate does not replay", &mut report.violations);
                            continue;
                        }
                    }
                    match realize(derivation) {
                        Ok(map) if map.verify_normed() && map.verify_nice() => {}
                        _ => fail(n, m, "realized map fails exact checks", &mut report.violations),
                    }
                }
                Verdict::EvenDegreesOnly => {
                    if binom_odd(n as u64, m as u64) {
                        fail(
                            n,
                            m,
                            "even-only pair with odd binomial contradicts the parity conjecture",
                            &mut report.violations,
                        );
                    }
                }
                Verdict::OnlyNullHomotopic => {
                    if n % 2 == 0 || m % 2 == 0 {
                        fail(n, m, "null-homotopic verdict off the odd-odd case", &mut report.violations);
                    }
                    if binom_odd(n as u64, m as u64) {
                        fail(n, m, "odd-odd pair with odd binomial", &mut report.violations);
                    }
                }
                _ => {}
            }
        }
    }
    report
}
