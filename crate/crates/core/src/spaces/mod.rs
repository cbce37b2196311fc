//! Space constructors: discrete sets, nerves, Eilenberg-MacLane spaces,
//! group actions with their Borel quotients, and the universe of finite
//! sets. Everything returns certified complexes.

mod action;
mod em;
mod nerve;

pub use action::{
    homotopy_quotient, raise_action, translation_action, trivial_action, GroupAction,
    HomotopyQuotient,
};
pub use em::eilenberg_maclane;
pub use nerve::{classifying_map, classifying_space, nerve_groupoid, symmetric_universe};

use crate::error::Result;
use crate::kan::{kan_check, KanComplex};
use crate::limits::Limits;
use crate::simplicial::{Simplex, SimplicialData};

/// n isolated points, stored at bound 1.
pub fn discrete(n: usize, limits: &Limits) -> Result<KanComplex> {
    let vertices = (0..n).map(|_| Simplex { faces: Vec::new() }).collect();
    kan_check(SimplicialData::new(1, vec![vertices, Vec::new()])?, limits)
}

pub fn point(limits: &Limits) -> Result<KanComplex> {
    discrete(1, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_spaces_are_kan_even_when_empty() {
        let lim = Limits::default();
        assert!(discrete(0, &lim).unwrap().is_empty());
        let three = discrete(3, &lim).unwrap();
        assert_eq!(three.vertex_count(), 3);
        assert_eq!(three.total_count(1), 3);
    }
}
