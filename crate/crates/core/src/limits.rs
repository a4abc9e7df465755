//! Size caps for exhaustive enumerations.

use crate::error::{Error, Result};
use crate::perm::Family;

/// Largest degrees the enumerating operations accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub involutions: usize,
    pub pancake_reflections: usize,
    pub burnt_reflections: usize,
    pub graph_unsigned: usize,
    pub graph_signed: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            involutions: 8,
            pancake_reflections: 7,
            burnt_reflections: 6,
            graph_unsigned: 9,
            graph_signed: 7,
        }
    }
}

impl Limits {
    /// No caps beyond available memory.
    pub fn unlimited() -> Self {
        Limits {
            involutions: usize::MAX,
            pancake_reflections: usize::MAX,
            burnt_reflections: usize::MAX,
            graph_unsigned: usize::MAX,
            graph_signed: usize::MAX,
        }
    }

    pub fn graph(&self, family: Family) -> usize {
        match family {
            Family::Unsigned => self.graph_unsigned,
            Family::Signed => self.graph_signed,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, family: Family, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded {
            what,
            n,
            cap,
            estimate: family.group_order(n),
        })
    } else {
        Ok(())
    }
}
