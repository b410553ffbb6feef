//! Seeded and exhaustive collections of finite spaces for the finite suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::relcore::{preorders, QUSpace, Relation};

use super::generate::gen_space;
use super::report::sha256_hex;
use super::spacefile::space_hash;

/// Random spaces per seeded corpus.
pub const RANDOM_SPACES: usize = 200;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub space: QUSpace,
    pub hash: String,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub name: &'static str,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    fn new(name: &'static str, spaces: impl IntoIterator<Item = (String, QUSpace)>) -> Self {
        let entries = spaces
            .into_iter()
            .map(|(name, space)| CorpusEntry {
                hash: space_hash(&space),
                name,
                space,
            })
            .collect();
        Corpus { name, entries }
    }

    /// Hash over the member hashes in order; stands in for a space hash in
    /// reports that aggregate over the corpus.
    pub fn digest(&self) -> String {
        let joined: Vec<&str> = self.entries.iter().map(|e| e.hash.as_str()).collect();
        sha256_hex(&format!("{}\n{}", self.name, joined.join("\n")))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn random_spaces(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>, prefix: &str) -> Vec<(String, QUSpace)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(sizes.clone());
            let k = rng.gen_range(1..=3);
            let sub = rng.gen();
            let g = gen_space(n, k, sub).expect("sizes are in range");
            (format!("{prefix}-{i}"), g.space)
        })
        .collect()
}

/// 200 seeded random spaces on one to five points.
pub fn random_corpus(seed: u64) -> Corpus {
    Corpus::new("random", random_spaces(seed, RANDOM_SPACES, 1..=5, "random"))
}

/// Fixed generators on `n` points; some are not transitive on their own.
pub fn generator_catalogue(n: usize) -> Vec<(&'static str, Relation)> {
    let last = n - 1;
    vec![
        ("identity", Relation::identity(n)),
        ("full", Relation::full(n)),
        ("chain", Relation::from_pairs(n, (0..n).flat_map(|x| (x..n).map(move |y| (x, y))))),
        ("reverse", Relation::from_pairs(n, (0..n).flat_map(|x| (0..=x).map(move |y| (x, y))))),
        ("fork", Relation::from_pairs(n, (0..n).map(|y| (0, y)))),
        ("star", Relation::from_pairs(n, (0..n).map(|x| (x, last)))),
        ("successor", Relation::from_pairs(n, (0..last).map(|x| (x, x + 1)))),
    ]
}

/// Bases of one to three distinct catalogue generators on two to four
/// points whose intersection is transitive.
pub fn catalogue_spaces() -> Vec<(String, QUSpace)> {
    let mut out = vec![];
    for n in 2..=4 {
        let cat = generator_catalogue(n);
        let m = cat.len();
        let mut combos: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
        combos.extend((0..m).flat_map(|i| (i + 1..m).map(move |j| vec![i, j])));
        combos.extend((0..m).flat_map(|i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |k| vec![i, j, k]))));
        for combo in combos {
            let base: Vec<Relation> = combo.iter().map(|&i| cat[i].1.clone()).collect();
            if let Ok(space) = QUSpace::from_base(n, base) {
                let names: Vec<&str> = combo.iter().map(|&i| cat[i].0).collect();
                out.push((format!("catalogue-{n}-{}", names.join("+")), space));
            }
        }
    }
    out
}

/// Every preorder on one to four points, the catalogue bases, and 200
/// seeded random five-point spaces.
pub fn reference_corpus(seed: u64) -> Corpus {
    let mut spaces: Vec<(String, QUSpace)> = (1..=4)
        .flat_map(|n| {
            preorders(n).enumerate().map(move |(i, r)| {
                (format!("preorder-{n}-{i}"), QUSpace::from_base(n, vec![r]).expect("transitive"))
            })
        })
        .collect();
    spaces.extend(catalogue_spaces());
    spaces.extend(random_spaces(seed ^ 0x5eed_5eed, RANDOM_SPACES, 5..=5, "random5"));
    Corpus::new("reference", spaces)
}
