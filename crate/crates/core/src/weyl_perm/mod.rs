//! Permutation groups on the 27 lines, and W(E6) as generated by simple reflections.

mod classes;
mod group;
mod orbits;
mod permutation;

pub use classes::{conjugacy_classes, ConjugacyClass, ENUMERATION_BOUND};
pub use group::{schreier_sims, BasicOrbit, PermGroup};
pub use orbits::{orbit_count_on_ordered_pairs, orbitals, orbits_on_points};
pub use permutation::Permutation;

use crate::error::Result;
use crate::picard::{line_permutation, simple_roots, Line};

/// Order of W(E6), `2^7 * 3^4 * 5`.
pub const WEYL_E6_ORDER: u128 = 51_840;

/// Reflections in `E1-E2, E2-E3, E3-E4, E4-E5, E5-E6, H-E1-E2-E3`, as line permutations.
pub fn simple_reflection_generators(lines: &[Line]) -> Result<Vec<Permutation>> {
    simple_roots().iter().map(|r| line_permutation(lines, r)).collect()
}

impl PermGroup {
    pub fn orbits_on_points(&self) -> Vec<Vec<usize>> {
        orbits_on_points(self.generators())
    }

    pub fn orbit_count_on_ordered_pairs(&self) -> usize {
        orbit_count_on_ordered_pairs(self.generators())
    }
}
