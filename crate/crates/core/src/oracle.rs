//! Brute-force orders of generator products, computed by building the
//! product and taking the lcm of its cycle lengths. Every closed form in
//! [`crate::closed_forms`] is checked against these.

use crate::error::Result;
use crate::gens::{burnt_flip, pancake_flip};

/// Order of `f_a f_b` in `S_n`.
pub fn two_flips_in(a: usize, b: usize, n: usize) -> Result<u64> {
    Ok(pancake_flip(a, n)?.compose(&pancake_flip(b, n)?)?.order())
}

/// Order of `f_a f_b` in the smallest group containing both.
pub fn two_flips(a: usize, b: usize) -> Result<u64> {
    two_flips_in(a, b, a.max(b) + 1)
}

/// Order of `f^B_a f^B_b` in `B_n`.
pub fn two_burnt_flips_in(a: usize, b: usize, n: usize) -> Result<u64> {
    Ok(burnt_flip(a, n)?.compose(&burnt_flip(b, n)?)?.order())
}

pub fn two_burnt_flips(a: usize, b: usize) -> Result<u64> {
    two_burnt_flips_in(a, b, a.max(b) + 1)
}

/// Order of `f_a f_b f_c` in `S_n`.
pub fn three_flips_in(a: usize, b: usize, c: usize, n: usize) -> Result<u64> {
    let ab = pancake_flip(a, n)?.compose(&pancake_flip(b, n)?)?;
    Ok(ab.compose(&pancake_flip(c, n)?)?.order())
}

pub fn three_flips(a: usize, b: usize, c: usize) -> Result<u64> {
    three_flips_in(a, b, c, a.max(b).max(c) + 1)
}
