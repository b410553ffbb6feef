use std::fmt;

use crate::error::{Error, Result};

use super::PointSet;

/// A reflexive binary relation on `{0, .., n-1}`, one bitset row per point.
///
/// Row `x` is the image `R(x) = {y : (x, y) ∈ R}`. Every constructor adds the
/// diagonal, so reflexivity holds by construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    rows: Vec<PointSet>,
}

impl Relation {
    pub fn identity(n: usize) -> Self {
        Relation {
            rows: (0..n).map(|x| PointSet::singleton(n, x)).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Relation {
            rows: vec![PointSet::full(n); n],
        }
    }

    /// The reflexive closure of the given 0-based pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::identity(n);
        for (x, y) in pairs {
            r.rows[x].insert(y);
        }
        r
    }

    /// Builds from explicit rows, adding the diagonal.
    pub fn from_rows(mut rows: Vec<PointSet>) -> Self {
        let n = rows.len();
        for (x, row) in rows.iter_mut().enumerate() {
            assert_eq!(row.universe(), n, "row universe must match row count");
            row.insert(x);
        }
        Relation { rows }
    }

    /// Row-mask form for relations on at most 64 points.
    pub fn from_row_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        Self::from_rows(masks.iter().map(|&m| PointSet::from_mask(n, m)).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn row(&self, x: usize) -> &PointSet {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    /// Ordered 0-based pairs of the relation, diagonal included.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(PointSet::len).sum()
    }

    /// `R(a) = {y : ∃x ∈ a, (x, y) ∈ R}`.
    pub fn image(&self, a: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.size());
        for x in a.iter() {
            out.union_with(&self.rows[x]);
        }
        out
    }

    /// `R⁻¹(a) = {x : ∃y ∈ a, (x, y) ∈ R}`.
    pub fn preimage(&self, a: &PointSet) -> PointSet {
        PointSet::from_points(
            self.size(),
            (0..self.size()).filter(|&x| self.rows[x].intersects(a)),
        )
    }

    pub fn inverse(&self) -> Self {
        let n = self.size();
        let mut rows = vec![PointSet::empty(n); n];
        for (x, y) in self.pairs() {
            rows[y].insert(x);
        }
        Relation { rows }
    }

    /// `self ∘ other` in diagrammatic order: `(x, z)` with `(x, y) ∈ self`, `(y, z) ∈ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Relation {
            rows: self.rows.iter().map(|row| other.image(row)).collect(),
        })
    }

    pub fn square(&self) -> Self {
        self.compose(self).expect("same ground")
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Relation {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Relation {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.union(b))
                .collect(),
        })
    }

    /// `R ∩ R⁻¹`.
    pub fn symmetrize(&self) -> Self {
        self.intersect(&self.inverse()).expect("same ground")
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.size() == other.size()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.inverse()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    /// A triple `(x, y, z)` with `(x, y), (y, z)` in the relation but not `(x, z)`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                if let Some(z) = self.rows[y].difference(row).first() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// Pushes the relation forward along a point map into a `target`-point ground.
    pub fn push_forward(&self, map: &[usize], target: usize) -> Self {
        Relation::from_pairs(target, self.pairs().map(|(x, y)| (map[x], map[y])))
    }

    /// Restriction to the members of `a`, re-indexed in increasing order.
    pub fn restrict(&self, a: &PointSet) -> Self {
        let members: Vec<usize> = a.iter().collect();
        let k = members.len();
        Relation::from_rows(
            members
                .iter()
                .map(|&x| {
                    PointSet::from_points(
                        k,
                        members
                            .iter()
                            .enumerate()
                            .filter(|(_, &y)| self.contains(x, y))
                            .map(|(j, _)| j),
                    )
                })
                .collect(),
        )
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.size() == other.size() {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                left: self.size(),
                right: other.size(),
            })
        }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation[{}]", self.size())?;
        f.debug_list()
            .entries(
                self.pairs()
                    .filter(|(x, y)| x != y)
                    .map(|(x, y)| (x + 1, y + 1)),
            )
            .finish()
    }
}

/// A relation as read from input, before the reflexive closure is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRelation {
    pub size: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl RawRelation {
    pub fn new(size: usize, pairs: Vec<(usize, usize)>) -> Self {
        RawRelation { size, pairs }
    }

    /// Points `x` for which `(x, x)` is missing.
    pub fn missing_diagonal(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| !self.pairs.contains(&(x, x)))
            .collect()
    }

    pub fn close(&self) -> Relation {
        Relation::from_pairs(self.size, self.pairs.iter().copied())
    }
}
