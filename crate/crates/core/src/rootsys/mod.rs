//! Reduced and non-reduced root systems over exact rationals.
//!
//! Coordinates follow Bourbaki. The lexicographic order used for "lowest"
//! and "highest" compares ambient coordinates in a fixed significance order:
//! first coordinate first for A, B, C, D, BC and F4; last coordinate first
//! for E6, E7 and E8; `(e3, e1, e2)` for G2. Each choice makes every
//! Bourbaki positive root lexicographically positive.

mod bourbaki;
mod order;
mod system;
mod types;
mod vector;

pub use order::{lowest_root, LexOrder};
pub use system::RootSystem;
pub use types::{Family, RootClass, RootSystemType, WolfClass};
pub use vector::RootVec;
