use std::collections::HashSet;

use crate::solution::SolutionPermutation;
use crate::symmetry::SymmetryElement;

/// One orbit of the solution set under the four label-preserving symmetries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest member.
    pub representative: SolutionPermutation,
    pub size: usize,
}

pub fn orbit_of(s: &SolutionPermutation) -> Vec<SolutionPermutation> {
    let mut members: Vec<_> = SymmetryElement::ALL.iter().map(|g| g.apply(s)).collect();
    members.sort();
    members.dedup();
    members
}

/// Partitions `solutions` into orbits. `solutions` must be closed under the
/// symmetry group; orbits are returned in order of their representatives.
///
/// # Panics
///
/// Panics if some image of a solution is missing from the input.
pub fn partition(solutions: &[SolutionPermutation]) -> Vec<Orbit> {
    let all: HashSet<&SolutionPermutation> = solutions.iter().collect();
    let mut seen: HashSet<SolutionPermutation> = HashSet::with_capacity(solutions.len());
    let mut orbits = Vec::new();
    for s in solutions {
        if seen.contains(s) {
            continue;
        }
        let members = orbit_of(s);
        for m in &members {
            assert!(all.contains(m), "solution set not closed: {m} missing");
        }
        orbits.push(Orbit {
            representative: members[0].clone(),
            size: members.len(),
        });
        seen.extend(members);
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_orbit_has_four_members() {
        let s4 = SolutionPermutation::new(vec![3, 2, 4, 1]);
        let orbit = orbit_of(&s4);
        assert_eq!(orbit.len(), 4);
        assert_eq!(orbit[0].as_slice(), [2, 4, 3, 1]);
    }

    #[test]
    fn identity_is_fixed_by_everything() {
        let id = SolutionPermutation::new(vec![1]);
        assert_eq!(orbit_of(&id), std::slice::from_ref(&id));
        assert_eq!(
            partition(std::slice::from_ref(&id)),
            [Orbit {
                representative: id,
                size: 1
            }]
        );
    }

    #[test]
    #[should_panic(expected = "not closed")]
    fn open_set_is_rejected() {
        partition(&[SolutionPermutation::new(vec![3, 2, 4, 1])]);
    }
}
