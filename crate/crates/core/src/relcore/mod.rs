//! Relation algebra over finite ground sets and finite quasi-uniform spaces.

mod pointset;
mod relation;
mod space;

pub use pointset::{nonempty_subsets, subsets_of, PointSet};
pub use relation::{RawRelation, Relation};
pub use space::{Direction, GroundSet, MissingDiagonal, QUSpace, ReflexivePolicy, ValidationReport};

/// Every reflexive relation on `n` points whose off-diagonal part is given
/// by the bits of an index in `0..2^(n(n-1))`, in index order.
pub fn reflexive_relations(n: usize) -> impl Iterator<Item = Relation> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    assert!(off.len() < 32, "too many relations to enumerate");
    (0u64..1 << off.len()).map(move |m| {
        Relation::from_pairs(
            n,
            off.iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
    })
}

/// All preorders (reflexive transitive relations) on `n` points.
pub fn preorders(n: usize) -> impl Iterator<Item = Relation> {
    reflexive_relations(n).filter(Relation::is_transitive)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| preorders(n).count()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }
}
