use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{PointSet, RawRelation, Relation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidGround("a ground set needs at least one point".into()));
        }
        Ok(GroundSet { size, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut ground = Self::new(labels.len())?;
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGround(format!("duplicate label `{l}`")));
            }
        }
        ground.labels = Some(labels);
        Ok(ground)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a 0-based point: its label, or its 1-based number.
    pub fn name(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => (x + 1).to_string(),
        }
    }
}

/// How reflexivity gaps in raw input are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReflexivePolicy {
    /// Add the missing diagonal and record that it happened.
    #[default]
    Repair,
    /// Report missing diagonal pairs as a validation failure.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingDiagonal {
    /// 1-based index of the base relation.
    pub relation: usize,
    /// 1-based points whose diagonal pair is absent.
    pub points: Vec<usize>,
}

/// Outcome of checking a candidate base against the quasi-uniformity axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub points: usize,
    pub base_size: usize,
    pub empty_base: bool,
    pub size_mismatch: Vec<usize>,
    pub out_of_range: Vec<usize>,
    pub non_reflexive: Vec<MissingDiagonal>,
    /// Whether the reflexive closure was applied to make the base usable.
    pub reflexive_repair: bool,
    /// 1-based `(x, y, z)` with `(x,y), (y,z)` in the min-entourage but not `(x,z)`.
    pub non_transitive: Option<[usize; 3]>,
    pub strict: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        !self.empty_base
            && self.size_mismatch.is_empty()
            && self.out_of_range.is_empty()
            && self.non_transitive.is_none()
            && !(self.strict && !self.non_reflexive.is_empty())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        if self.empty_base {
            parts.push("empty base".to_string());
        }
        for i in &self.size_mismatch {
            parts.push(format!("relation {i} has the wrong ground size"));
        }
        for i in &self.out_of_range {
            parts.push(format!("relation {i} mentions a point outside the ground set"));
        }
        for m in &self.non_reflexive {
            let verb = if self.strict { "non-reflexive" } else { "repaired non-reflexive" };
            parts.push(format!("{verb} relation {} (missing diagonal at {:?})", m.relation, m.points));
        }
        if let Some([x, y, z]) = self.non_transitive {
            parts.push(format!(
                "non-transitive min-entourage: ({x},{y}) and ({y},{z}) present, ({x},{z}) missing"
            ));
        }
        if parts.is_empty() {
            parts.push("valid".into());
        }
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// The topology τ(𝒰), neighbourhoods `U(x)`.
    Forward,
    /// The conjugate topology τ(𝒰⁻¹), neighbourhoods `U⁻¹(x)`.
    Conjugate,
}

/// A finite quasi-uniform space given by a finite base of reflexive relations.
///
/// On a finite set the generated filter has a least element, the
/// intersection `M` of the base, and a relation is an entourage exactly when
/// it contains `M`. The axiom "each entourage contains the square of another"
/// then reduces to transitivity of `M`, which construction enforces.
#[derive(Clone, PartialEq, Eq)]
pub struct QUSpace {
    ground: GroundSet,
    base: Vec<Relation>,
    min: Relation,
    min_inv: Relation,
}

impl QUSpace {
    pub fn new(ground: GroundSet, base: Vec<Relation>) -> Result<Self> {
        let n = ground.size();
        let mut report = ValidationReport {
            points: n,
            base_size: base.len(),
            empty_base: base.is_empty(),
            ..Default::default()
        };
        report.size_mismatch = base
            .iter()
            .enumerate()
            .filter(|(_, r)| r.size() != n)
            .map(|(i, _)| i + 1)
            .collect();
        if !report.is_valid() {
            return Err(Error::Invalid(Box::new(report)));
        }
        let min = intersect_all(n, &base);
        if let Some((x, y, z)) = min.transitivity_witness() {
            report.non_transitive = Some([x + 1, y + 1, z + 1]);
            return Err(Error::Invalid(Box::new(report)));
        }
        let min_inv = min.inverse();
        Ok(QUSpace {
            ground,
            base,
            min,
            min_inv,
        })
    }

    /// Convenience constructor for an unlabelled ground set.
    pub fn from_base(n: usize, base: Vec<Relation>) -> Result<Self> {
        Self::new(GroundSet::new(n)?, base)
    }

    /// Checks raw relations without building anything.
    pub fn validate(ground: &GroundSet, raws: &[RawRelation], policy: ReflexivePolicy) -> ValidationReport {
        let n = ground.size();
        let mut report = ValidationReport {
            points: n,
            base_size: raws.len(),
            empty_base: raws.is_empty(),
            strict: policy == ReflexivePolicy::Strict,
            ..Default::default()
        };
        for (i, raw) in raws.iter().enumerate() {
            if raw.size != n {
                report.size_mismatch.push(i + 1);
                continue;
            }
            if raw.pairs.iter().any(|&(x, y)| x >= n || y >= n) {
                report.out_of_range.push(i + 1);
                continue;
            }
            let missing = raw.missing_diagonal();
            if !missing.is_empty() {
                report.non_reflexive.push(MissingDiagonal {
                    relation: i + 1,
                    points: missing.iter().map(|x| x + 1).collect(),
                });
            }
        }
        report.reflexive_repair = !report.strict && !report.non_reflexive.is_empty();
        if report.is_valid() {
            let closed: Vec<Relation> = raws.iter().map(RawRelation::close).collect();
            if let Some((x, y, z)) = intersect_all(n, &closed).transitivity_witness() {
                report.non_transitive = Some([x + 1, y + 1, z + 1]);
            }
        }
        report
    }

    /// Validates raw input and builds the space, returning the report alongside.
    pub fn from_raw(
        ground: GroundSet,
        raws: &[RawRelation],
        policy: ReflexivePolicy,
    ) -> Result<(Self, ValidationReport)> {
        let report = Self::validate(&ground, raws, policy);
        if !report.is_valid() {
            return Err(Error::Invalid(Box::new(report)));
        }
        let space = Self::new(ground, raws.iter().map(RawRelation::close).collect())?;
        Ok((space, report))
    }

    pub fn size(&self) -> usize {
        self.ground.size()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn base(&self) -> &[Relation] {
        &self.base
    }

    /// The min-entourage `M`, intersection of the base.
    pub fn min_entourage(&self) -> &Relation {
        &self.min
    }

    pub fn min_inverse(&self) -> &Relation {
        &self.min_inv
    }

    pub fn min_symmetric(&self) -> Relation {
        self.min.symmetrize()
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.size())
    }

    /// Whether `v` is an entourage, i.e. contains `M`.
    pub fn is_entourage(&self, v: &Relation) -> bool {
        self.min.is_subset(v)
    }

    /// The space with every base relation transposed.
    pub fn conjugate(&self) -> Self {
        QUSpace {
            ground: self.ground.clone(),
            base: self.base.iter().map(Relation::inverse).collect(),
            min: self.min_inv.clone(),
            min_inv: self.min.clone(),
        }
    }

    /// Closure in τ(𝒰) (`M⁻¹(a)`) or in τ(𝒰⁻¹) (`M(a)`).
    pub fn closure(&self, a: &PointSet, direction: Direction) -> PointSet {
        match direction {
            Direction::Forward => self.min_inv.image(a),
            Direction::Conjugate => self.min.image(a),
        }
    }

    /// `cl_τ(𝒰) a ∩ cl_τ(𝒰⁻¹) a`.
    pub fn double_closure(&self, a: &PointSet) -> PointSet {
        self.min_inv.image(a).intersection(&self.min.image(a))
    }

    pub fn is_doubly_closed(&self, a: &PointSet) -> bool {
        self.double_closure(a) == *a
    }

    /// The smallest neighbourhood of `x` in the given topology.
    pub fn min_neighbourhood(&self, x: usize, direction: Direction) -> &PointSet {
        match direction {
            Direction::Forward => self.min.row(x),
            Direction::Conjugate => self.min_inv.row(x),
        }
    }

    /// Classes of `M ∩ M⁻¹`, ordered by least member.
    pub fn t0_classes(&self) -> Vec<PointSet> {
        let sym = self.min_symmetric();
        let mut seen = PointSet::empty(self.size());
        let mut classes = vec![];
        for x in 0..self.size() {
            if !seen.contains(x) {
                let class = sym.row(x).clone();
                seen.union_with(&class);
                classes.push(class);
            }
        }
        classes
    }

    /// A pair of distinct indistinguishable points, if the space is not T₀.
    pub fn t0_witness(&self) -> Option<(usize, usize)> {
        let sym = self.min_symmetric();
        (0..self.size()).find_map(|x| sym.row(x).iter().find(|&y| y != x).map(|y| (x, y)))
    }

    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    pub fn require_t0(&self) -> Result<()> {
        match self.t0_witness() {
            Some((x, y)) => Err(Error::NotT0(x + 1, y + 1)),
            None => Ok(()),
        }
    }

    /// The subspace on `a`, each base relation restricted to `a × a`.
    pub fn subspace(&self, a: &PointSet) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let labels = self
            .ground
            .labels()
            .map(|l| a.iter().map(|x| l[x].clone()).collect::<Vec<_>>());
        let ground = match labels {
            Some(l) => GroundSet::with_labels(l)?,
            None => GroundSet::new(a.len())?,
        };
        Self::new(ground, self.base.iter().map(|r| r.restrict(a)).collect())
    }
}

impl fmt::Debug for QUSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QUSpace")
            .field("points", &self.size())
            .field("base", &self.base)
            .finish()
    }
}

pub(crate) fn intersect_all(n: usize, rels: &[Relation]) -> Relation {
    rels.iter().fold(Relation::full(n), |acc, r| {
        acc.intersect(r).expect("validated ground sizes")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcore::nonempty_subsets;

    fn sierpinski() -> QUSpace {
        QUSpace::from_base(2, vec![Relation::from_pairs(2, [(0, 1)])]).unwrap()
    }

    fn chain3() -> QUSpace {
        QUSpace::from_base(3, vec![Relation::from_pairs(3, [(0, 1), (1, 2), (0, 2)])]).unwrap()
    }

    #[test]
    fn ground_set_rules() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::with_labels(vec!["a".into(), "a".into()]).is_err());
        let g = GroundSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.name(1), "b");
        assert_eq!(GroundSet::new(3).unwrap().name(2), "3");
    }

    #[test]
    fn validate_examples() {
        let g3 = GroundSet::new(3).unwrap();
        let id = RawRelation::new(3, (0..3).map(|x| (x, x)).collect());
        assert!(QUSpace::validate(&g3, std::slice::from_ref(&id), ReflexivePolicy::Strict).is_valid());

        let mut a = id.clone();
        a.pairs.push((0, 1));
        let mut b = id.clone();
        b.pairs.push((1, 2));
        assert!(QUSpace::validate(&g3, &[a.clone(), b.clone()], ReflexivePolicy::Strict).is_valid());

        let broken = RawRelation::new(3, vec![(0, 0), (2, 2)]);
        let strict = QUSpace::validate(&g3, std::slice::from_ref(&broken), ReflexivePolicy::Strict);
        assert!(!strict.is_valid());
        assert_eq!(strict.non_reflexive[0].points, vec![2]);
        assert!(strict.to_string().contains("non-reflexive"));

        let (space, report) =
            QUSpace::from_raw(g3.clone(), &[broken], ReflexivePolicy::Repair).unwrap();
        assert!(report.reflexive_repair);
        assert_eq!(space.min_entourage(), &Relation::identity(3));

        let mut ab = a.clone();
        ab.pairs.push((1, 2));
        let report = QUSpace::validate(&g3, &[ab], ReflexivePolicy::Strict);
        assert_eq!(report.non_transitive, Some([1, 2, 3]));
        assert!(QUSpace::validate(&g3, &[], ReflexivePolicy::Repair).empty_base);
    }

    #[test]
    fn closure_examples() {
        let s = sierpinski();
        let one = PointSet::singleton(2, 0);
        assert_eq!(s.closure(&one, Direction::Forward), one);
        assert_eq!(s.closure(&one, Direction::Conjugate), PointSet::full(2));
        assert_eq!(s.closure(&s.full_set(), Direction::Forward), s.full_set());
    }

    /// Closure by its definition: x is in the closure iff every base
    /// neighbourhood of x meets a.
    fn neighbourhood_closure(s: &QUSpace, a: &PointSet, d: Direction) -> PointSet {
        PointSet::from_points(
            s.size(),
            (0..s.size()).filter(|&x| {
                s.base().iter().all(|u| {
                    let nb = match d {
                        Direction::Forward => u.row(x).clone(),
                        Direction::Conjugate => u.inverse().row(x).clone(),
                    };
                    nb.intersects(a)
                })
            }),
        )
    }

    #[test]
    fn closure_matches_neighbourhood_oracle() {
        let spaces = [
            sierpinski(),
            chain3(),
            QUSpace::from_base(
                3,
                vec![Relation::from_pairs(3, [(0, 1)]), Relation::from_pairs(3, [(1, 2)])],
            )
            .unwrap(),
        ];
        for s in &spaces {
            for a in nonempty_subsets(s.size()) {
                for d in [Direction::Forward, Direction::Conjugate] {
                    assert_eq!(s.closure(&a, d), neighbourhood_closure(s, &a, d));
                }
            }
        }
    }

    #[test]
    fn double_closure_of_union_can_grow() {
        let s = chain3();
        let a = PointSet::singleton(3, 0);
        let b = PointSet::singleton(3, 2);
        let parts = s.double_closure(&a).union(&s.double_closure(&b));
        let whole = s.double_closure(&a.union(&b));
        assert!(parts.is_subset(&whole) && parts != whole);
        assert!(whole.contains(1));
    }

    #[test]
    fn t0_examples() {
        let id = QUSpace::from_base(3, vec![Relation::identity(3)]).unwrap();
        assert_eq!(id.t0_classes().len(), 3);
        let full = QUSpace::from_base(2, vec![Relation::full(2)]).unwrap();
        assert_eq!(full.t0_classes(), vec![PointSet::full(2)]);
        assert!(matches!(full.require_t0(), Err(Error::NotT0(1, 2))));
        assert!(sierpinski().is_t0());
        for x in 0..2 {
            let p = PointSet::singleton(2, x);
            assert_eq!(sierpinski().double_closure(&p), p);
        }
    }

    #[test]
    fn subspace_restricts_base() {
        let s = chain3();
        let sub = s.subspace(&PointSet::from_points(3, [0, 2])).unwrap();
        assert_eq!(sub.min_entourage(), &Relation::from_pairs(2, [(0, 1)]));
        assert!(s.subspace(&PointSet::empty(3)).is_err());
    }
}
