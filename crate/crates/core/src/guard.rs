use crate::error::{Error, Result};

/// Size limits for everything that enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest group whose full endomorphism ring is materialized.
    pub max_group: usize,
    /// Largest ring accepted as the base R of resolutions and searches.
    pub max_ring: usize,
    /// Largest number of candidates any exhaustive search may visit.
    pub max_candidates: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_group: 8, max_ring: 4, max_candidates: 10_000_000 }
    }
}

impl Guards {
    pub fn with_candidates(max_candidates: u64) -> Self {
        Guards { max_candidates, ..Self::default() }
    }

    /// `base^exponent` if it stays within the candidate bound.
    pub fn search_space(&self, what: &str, base: usize, exponent: usize) -> Result<u64> {
        let mut total: u64 = 1;
        for _ in 0..exponent {
            total = match total.checked_mul(base as u64) {
                Some(t) if t <= self.max_candidates => t,
                _ => {
                    return Err(Error::Guard {
                        what: what.to_string(),
                        needed: format!("{base}^{exponent}"),
                        bound: self.max_candidates,
                    })
                }
            };
        }
        if total > self.max_candidates {
            return Err(Error::Guard {
                what: what.to_string(),
                needed: format!("{base}^{exponent}"),
                bound: self.max_candidates,
            });
        }
        Ok(total)
    }

    pub fn check_group(&self, what: &str, order: usize) -> Result<()> {
        if order > self.max_group {
            return Err(Error::Guard {
                what: what.to_string(),
                needed: format!("order {order}"),
                bound: self.max_group as u64,
            });
        }
        Ok(())
    }

    pub fn check_ring(&self, what: &str, order: usize) -> Result<()> {
        if order > self.max_ring {
            return Err(Error::Guard {
                what: what.to_string(),
                needed: format!("order {order}"),
                bound: self.max_ring as u64,
            });
        }
        Ok(())
    }
}
