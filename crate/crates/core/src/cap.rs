//! Enumeration caps: refuse to materialize more than a fixed number of objects.

use crate::error::{Error, Result};

/// Default cap on listed or counted objects.
pub const DEFAULT_CAP: usize = 1_000_000;

pub trait CapExt: Iterator + Sized {
    /// Collects at most `cap` items; one more is an error.
    fn collect_capped(self, cap: usize) -> Result<Vec<Self::Item>> {
        let mut out = Vec::new();
        for item in self {
            if out.len() == cap {
                return Err(Error::CapExceeded(cap));
            }
            out.push(item);
        }
        Ok(out)
    }

    /// Counts at most `cap` items; one more is an error.
    fn count_capped(self, cap: usize) -> Result<usize> {
        let mut n = 0;
        for _ in self {
            if n == cap {
                return Err(Error::CapExceeded(cap));
            }
            n += 1;
        }
        Ok(n)
    }
}

impl<I: Iterator> CapExt for I {}
