//! Counterexample search for candidate laws over generated structures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators::{enumerate_all, random_instance, ENUMERATION_LIMIT};
use crate::laws::{check_equation, LawReport};
use crate::order::MeetSemilattice;
use crate::term::Equation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub min: usize,
    pub max: usize,
    /// Random instances drawn after the exhaustive stream.
    pub count: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            min: 1,
            max: ENUMERATION_LIMIT,
            count: 100,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub structure: MeetSemilattice,
    pub report: LawReport,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub hit: Option<SearchHit>,
    pub structures_checked: usize,
}

/// Sizes `min..=max` restricted to what exhaustive enumeration supports.
fn exhaustive_sizes(cfg: &SearchConfig) -> std::ops::RangeInclusive<usize> {
    cfg.min.max(1)..=cfg.max.min(ENUMERATION_LIMIT)
}

/// Evaluates `eq` on every enumerated structure with `min..=max` (capped at
/// the enumeration limit) elements, then on `count` seeded random
/// instances with sizes in `min..=max`. Stops at the first counterexample.
/// Structures without a top are skipped when the equation mentions `1`.
pub fn search(eq: &Equation, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.min == 0 || cfg.min > cfg.max {
        return Err(Error::InvalidSpec(format!(
            "size range {}..={}",
            cfg.min, cfg.max
        )));
    }
    let mut checked = 0;
    let mut try_one = |s: MeetSemilattice| -> Result<Option<SearchHit>> {
        if eq.uses_one() && !s.is_bounded() {
            return Ok(None);
        }
        checked += 1;
        let report = check_equation(&s, eq)?;
        Ok((!report.holds()).then_some(SearchHit {
            structure: s,
            report,
        }))
    };
    for n in exhaustive_sizes(cfg) {
        for s in enumerate_all(n)? {
            if let Some(hit) = try_one(s)? {
                return Ok(SearchOutcome {
                    hit: Some(hit),
                    structures_checked: checked,
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.count {
        let n = rng.gen_range(cfg.min..=cfg.max);
        let s = random_instance(n, rng.gen())?;
        if let Some(hit) = try_one(s)? {
            return Ok(SearchOutcome {
                hit: Some(hit),
                structures_checked: checked,
            });
        }
    }
    Ok(SearchOutcome {
        hit: None,
        structures_checked: checked,
    })
}
