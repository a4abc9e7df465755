//! Pancake flips in the symmetric group S_n and the hyperoctahedral group
//! B_n: closed-form orders of flip products, conjugates of flips, and the
//! pancake graphs.
//!
//! Permutations act on `1..=n` and compose right to left:
//! `compose(p, q)(x) = p(q(x))`. Multiplying `w` on the right by the flip
//! `f_i` reverses the first `i + 1` entries of its one-line notation.
//!
//! ```
//! use pancake_core::{closed_forms, gens};
//!
//! let f1 = gens::pancake_flip(1, 4).unwrap();
//! let f3 = gens::pancake_flip(3, 4).unwrap();
//! assert_eq!(f1.compose(&f3).unwrap().order(), 4);
//! assert_eq!(closed_forms::order_two_flips_formula(1, 3).unwrap().value, Some(4));
//! ```

pub mod cayley;
pub mod closed_forms;
pub mod error;
pub mod gens;
pub mod limits;
pub mod matrix;
pub mod oracle;
pub mod perm;
pub mod reflections;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use perm::{CycleDecomposition, Element, Family, GroupElement, Permutation, SignedPermutation};
