use crate::error::{Error, Result};

/// Node budget shared by the backtracking searches of one call.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 200_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Counts one search node; fails once the limit is passed.
    #[inline]
    pub fn tick(&mut self, context: &'static str) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Budget {
                context,
                used: self.used,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}
