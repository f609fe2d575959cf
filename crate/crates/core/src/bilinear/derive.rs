//! Derivations of nice pairs and their realization as verified maps.
//!
//! The derivation system has three rules. `Base` starts at the pair
//! `(0, 0)`, realized by plain multiplication of reals. `AddLeft(k)`
//! moves `(n, m)` to `(n + k, m)` and is admissible when
//! `rho(k) > m`, realized by composing with a Hurwitz–Radon pairing
//! of size `m + 1` on `R^k`. `Swap` exchanges the two coordinates,
//! realized by transposing coefficient matrices.
//!
//! Every pair reached this way carries an odd binomial
//! `binom(n+m, n)` (the admissibility condition forces the binary
//! digits `AddLeft` touches to be disjoint from those of `m`), and
//! the realized map is nice and normed by construction. Both facts
//! are still re-checked exactly on every replay; nothing is trusted
//! to the search.
//!
//! The search is breadth-first over states dominated by the target,
//! so a returned derivation is as short as possible. Failure to find
//! one within the budget means "not certified", never "not nice":
//! whether the rules reach every nice pair is not known.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::hurwitz::{binom_odd, hr_family, radon_hurwitz};
use super::{compose_step, hr_to_bilinear, BilinearMap};
use crate::{Error, Result};

/// One step of a derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Step {
    Base,
    AddLeft(u64),
    Swap,
}

/// A replayable certificate that `(n, m)` is a nice pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceDerivation {
    pub target: (u64, u64),
    pub steps: Vec<Step>,
}

impl NiceDerivation {
    /// Replays the steps from scratch, validating every rule
    /// application, and checks that the final state is the target and
    /// that its binomial is odd. Returns the final state.
    pub fn replay(&self) -> Result<(u64, u64)> {
        let mut state: Option<(u64, u64)> = None;
        for (idx, step) in self.steps.iter().enumerate() {
            state = Some(match (state, step) {
                (None, Step::Base) => (0, 0),
                (None, _) => {
                    return Err(Error::InvalidDerivation(
                        "derivation must begin with base".into(),
                    ))
                }
                (Some(_), Step::Base) => {
                    return Err(Error::InvalidDerivation(format!(
                        "base appears again at step {idx}"
                    )))
                }
                (Some((n, m)), Step::AddLeft(k)) => {
                    let rho = radon_hurwitz(*k)?;
                    if rho <= m {
                        return Err(Error::InvalidDerivation(format!(
                            "add_left({k}) at ({n}, {m}) needs rho({k}) > {m}, but rho({k}) = {rho}"
                        )));
                    }
                    (n + k, m)
                }
                (Some((n, m)), Step::Swap) => (m, n),
            });
        }
        let Some(state) = state else {
            return Err(Error::InvalidDerivation("empty derivation".into()));
        };
        if state != self.target {
            return Err(Error::InvalidDerivation(format!(
                "derivation ends at {state:?}, target is {:?}",
                self.target
            )));
        }
        if !binom_odd(state.0, state.1) {
            return Err(Error::InvalidDerivation(format!(
                "binom({}, {}) is even at the final state",
                state.0 + state.1,
                state.0
            )));
        }
        Ok(state)
    }
}

/// Limits on the certification search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of states expanded.
    pub max_expansions: usize,
    /// Cap on either coordinate of intermediate states; `None` means
    /// `n + m` for target `(n, m)`.
    pub coordinate_cap: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_expansions: 100_000, coordinate_cap: None }
    }
}

/// Searches for a derivation of the pair `(n, m)`.
///
/// Returns `None` when `binom(n+m, n)` is even (no derivation can
/// exist) or when the budget is exhausted. Coordinates along any
/// derivation never decrease as a multiset, so the search space is
/// capped at the larger target coordinate; the breadth-first order
/// makes the result deterministic.
pub fn certify_nice(n: u64, m: u64, budget: &SearchBudget) -> Option<NiceDerivation> {
    if !binom_odd(n, m) {
        return None;
    }
    let cap = budget.coordinate_cap.unwrap_or(n + m).max(n.max(m));
    let goal = if n >= m { (n, m) } else { (m, n) };

    let mut parent: HashMap<(u64, u64), ((u64, u64), Step)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back((0u64, 0u64));
    parent.insert((0, 0), ((0, 0), Step::Base));
    let mut expansions = 0usize;
    let mut found = goal == (0, 0);

    'search: while let Some(state) = queue.pop_front() {
        expansions += 1;
        if expansions > budget.max_expansions {
            return None;
        }
        let (a, b) = state;
        let push = |next: (u64, u64), step: Step, parent: &mut HashMap<_, _>, queue: &mut VecDeque<_>| {
            if next.0 <= cap && next.1 <= cap && !parent.contains_key(&next) {
                parent.insert(next, (state, step));
                queue.push_back(next);
                return next == goal;
            }
            false
        };
        for k in 1..=cap.saturating_sub(a) {
            if radon_hurwitz(k).expect("k >= 1") > b
                && push((a + k, b), Step::AddLeft(k), &mut parent, &mut queue)
            {
                found = true;
                break 'search;
            }
        }
        if a != b && push((b, a), Step::Swap, &mut parent, &mut queue) {
            found = true;
            break 'search;
        }
    }

    if !found {
        return None;
    }

    let mut steps = Vec::new();
    let mut cursor = goal;
    loop {
        let (prev, step) = parent[&cursor];
        steps.push(step);
        if matches!(step, Step::Base) {
            break;
        }
        cursor = prev;
    }
    steps.reverse();
    if goal != (n, m) {
        steps.push(Step::Swap);
    }
    let derivation = NiceDerivation { target: (n, m), steps };
    debug_assert_eq!(derivation.replay().unwrap(), (n, m));
    Some(derivation)
}

/// Replays a derivation into an explicit nice normed bilinear map of
/// shape `(n+1, m+1, n+m+1)`, verifying the rules and both exact
/// coefficient checks along the way.
pub fn realize(derivation: &NiceDerivation) -> Result<BilinearMap> {
    derivation.replay()?;
    let mut map: Option<BilinearMap> = None;
    let mut state = (0u64, 0u64);
    for step in &derivation.steps {
        match step {
            Step::Base => {
                map = Some(BilinearMap::base_nice());
            }
            Step::AddLeft(k) => {
                let g = map.take().expect("replay validated the step order");
                let fam = hr_family(*k, state.1 + 1)?;
                let h = hr_to_bilinear(&fam, state.1 as usize + 1)?;
                map = Some(compose_step(&g, &h)?);
                state.0 += k;
            }
            Step::Swap => {
                map = Some(map.take().expect("replay validated the step order").swapped());
                state = (state.1, state.0);
            }
        }
    }
    let map = map.expect("replay rejected empty derivations");
    let (n, m) = derivation.target;
    let expected = ((n + 1) as usize, (m + 1) as usize, (n + m + 1) as usize);
    if (map.a, map.b, map.c) != expected {
        return Err(Error::InvalidDerivation(format!(
            "realized shape ({}, {}, {}) does not match target {:?}",
            map.a, map.b, map.c, derivation.target
        )));
    }
    if !map.verify_normed() || !map.verify_nice() {
        return Err(Error::InvalidDerivation(
            "realized map fails an exact check".into(),
        ));
    }
    Ok(map)
}
