use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::relcore::{PointSet, QUSpace, Relation};

/// Largest ground set the generator produces.
pub const MAX_GENERATED_POINTS: usize = 64;

#[derive(Clone, Debug)]
pub struct Generated {
    pub space: QUSpace,
    pub repair: Option<Repair>,
}

/// Pairs removed from the raw draw to make the least entourage transitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Repair {
    pub pairs_removed: usize,
}

/// `{(x, y) : M(y) ⊆ M(x)}` for reflexive `m`. It is a preorder, and
/// `m ∩ envelope(m)` is transitive: `(x, y), (y, z)` in it give
/// `M(z) ⊆ M(y) ⊆ M(x)`, so `z ∈ M(x)`.
fn envelope(m: &Relation) -> Relation {
    let n = m.size();
    Relation::from_rows(
        (0..n)
            .map(|x| PointSet::from_points(n, (0..n).filter(|&y| m.row(y).is_subset(m.row(x)))))
            .collect(),
    )
}

/// `k` random reflexive relations on `n` points, deterministic in `seed`.
///
/// When the intersection of the draw is not transitive, every relation is
/// intersected with the envelope of that intersection and the repair is
/// logged and returned.
pub fn gen_space(n: usize, k: usize, seed: u64) -> Result<Generated> {
    if n == 0 || n > MAX_GENERATED_POINTS {
        return Err(Error::InvalidArgument(format!("n = {n} outside 1..={MAX_GENERATED_POINTS}")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.gen_range(0.2..0.8);
    let raw: Vec<Relation> = (0..k)
        .map(|_| {
            Relation::from_pairs(
                n,
                (0..n)
                    .flat_map(|x| (0..n).map(move |y| (x, y)))
                    .filter(|&(x, y)| x != y)
                    .filter(|_| rng.gen_bool(density))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let min = raw[1..].iter().fold(raw[0].clone(), |acc, r| acc.intersect(r).expect("same size"));
    if min.is_transitive() {
        return Ok(Generated {
            space: QUSpace::from_base(n, raw)?,
            repair: None,
        });
    }
    let env = envelope(&min);
    let before: usize = raw.iter().map(Relation::pair_count).sum();
    let repaired: Vec<Relation> = raw.iter().map(|r| r.intersect(&env).expect("same size")).collect();
    let after: usize = repaired.iter().map(Relation::pair_count).sum();
    let repair = Repair {
        pairs_removed: before - after,
    };
    log::debug!("gen_space(n={n}, k={k}, seed={seed}): repaired by removing {} pairs", repair.pairs_removed);
    Ok(Generated {
        space: QUSpace::from_base(n, repaired)?,
        repair: Some(repair),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::spacefile::space_hash;

    #[test]
    fn deterministic_per_seed() {
        let a = gen_space(3, 1, 7).unwrap();
        let b = gen_space(3, 1, 7).unwrap();
        assert_eq!(space_hash(&a.space), space_hash(&b.space));
        assert_eq!(a.space.size(), 3);
    }

    #[test]
    fn bounds() {
        assert!(gen_space(0, 1, 1).is_err());
        assert!(gen_space(2, 0, 1).is_err());
        assert!(gen_space(MAX_GENERATED_POINTS + 1, 1, 1).is_err());
        assert_eq!(gen_space(1, 2, 1).unwrap().space.size(), 1);
    }

    #[test]
    fn two_hundred_seeds_validate_and_some_repair() {
        let mut repaired = 0;
        for seed in 0..200 {
            let g = gen_space(5, 3, seed).unwrap();
            assert!(g.space.min_entourage().is_transitive());
            repaired += g.repair.is_some() as usize;
        }
        assert!(repaired > 0);
    }

    #[test]
    fn envelope_is_a_transitive_cut() {
        let m = Relation::from_pairs(3, [(0, 1), (1, 2)]);
        assert!(!m.is_transitive());
        let cut = m.intersect(&envelope(&m)).unwrap();
        assert!(cut.is_transitive());
        assert!(cut.is_subset(&m));
    }
}
