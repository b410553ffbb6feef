use serde_json::json;

use crate::audit::Audit;
use crate::error::Result;
use crate::filters::{self, PFilter};
use crate::relcore::{subsets_of, PointSet, QUSpace, Relation};

use super::{generators_with_min, in_double};

/// The standard bicompletion: minimal 𝒰ˢ-Cauchy filters with
/// `(ℱ, 𝒢) ∈ Ũ` iff `F × G ⊆ U` for some members `F, G`.
#[derive(Clone, Debug)]
pub struct Bicompletion {
    source: QUSpace,
    pub points: Vec<PFilter>,
    /// `embedding[x]` is the index of `𝒰ˢ(x)` among `points`.
    pub embedding: Vec<usize>,
    /// One `Ũ` per generator of the source (base, then `M` if needed).
    pub generators: Vec<Relation>,
    pub space: QUSpace,
}

/// Principal 𝒰ˢ-Cauchy filters: those whose least member lies in one `Mˢ`-class.
pub fn cauchy_filters(space: &QUSpace) -> Vec<PFilter> {
    let mut out: Vec<PFilter> = space
        .t0_classes()
        .iter()
        .flat_map(|c| subsets_of(c).filter(|s| !s.is_empty()).collect::<Vec<_>>())
        .map(|gen| PFilter::new(gen).expect("nonempty"))
        .collect();
    out.sort();
    out
}

pub fn bicompletion(space: &QUSpace) -> Result<Bicompletion> {
    space.require_t0()?;
    let cauchy = cauchy_filters(space);
    // Minimal in the filter order means coarsest: no other Cauchy filter has
    // a strictly larger least member.
    let points: Vec<PFilter> = cauchy
        .iter()
        .filter(|f| !cauchy.iter().any(|g| g != *f && f.gen().is_subset(g.gen())))
        .cloned()
        .collect();
    let sym = space.min_symmetric();
    let embedding: Vec<usize> = (0..space.size())
        .map(|x| {
            points
                .binary_search_by(|p| p.gen().cmp(sym.row(x)))
                .expect("neighbourhood filter is a minimal Cauchy filter")
        })
        .collect();
    let (gens, _) = generators_with_min(space);
    let k = points.len();
    let generators: Vec<Relation> = gens
        .iter()
        .map(|u| {
            Relation::from_rows(
                points
                    .iter()
                    .map(|f| {
                        PointSet::from_points(
                            k,
                            (0..k).filter(|&j| {
                                f.gen().iter().all(|x| points[j].gen().is_subset(u.row(x)))
                            }),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(Bicompletion {
        source: space.clone(),
        space: QUSpace::from_base(k, generators.clone())?,
        points,
        embedding,
        generators,
    })
}

impl Bicompletion {
    pub fn source(&self) -> &QUSpace {
        &self.source
    }

    /// The embedding is a bijection that carries each generator onto its `Ũ`,
    /// and `Ũ` agrees with `U_+ ∩ U_−` on the Cauchy filters.
    pub fn audit_isomorphism(&self) -> Audit {
        let mut audit = Audit::new();
        let n = self.source.size();
        let mut hit = self.embedding.clone();
        hit.sort();
        hit.dedup();
        audit.check(
            hit.len() == n && self.points.len() == n,
            "embedding bijective",
            || json!({ "points": self.points, "embedding": self.embedding }),
        );
        let (gens, _) = generators_with_min(&self.source);
        for (k, u) in gens.iter().enumerate() {
            for x in 0..n {
                for y in 0..n {
                    let (ex, ey) = (self.embedding[x], self.embedding[y]);
                    audit.check(
                        u.contains(x, y) == self.generators[k].contains(ex, ey),
                        "embedding preserves entourages",
                        || json!({ "entourage": k + 1, "x": x + 1, "y": y + 1 }),
                    );
                }
            }
            for (i, f) in self.points.iter().enumerate() {
                for (j, g) in self.points.iter().enumerate() {
                    let tilde = self.generators[k].contains(i, j);
                    let double = in_double(u, f.gen(), g.gen());
                    audit.check(tilde == double, "product form agrees with U_+ ∩ U_-", || {
                        json!({ "entourage": k + 1, "f": f, "g": g, "tilde": tilde, "double": double })
                    });
                }
            }
        }
        audit.check(filters::is_bicomplete(&self.space), "bicompletion bicomplete", || json!({}));
        audit.check(self.space.is_t0(), "bicompletion T0", || json!({}));
        audit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn sierpinski_bicompletion_is_itself() {
        let m = Relation::from_pairs(2, [(0, 1)]);
        let s = QUSpace::from_base(2, vec![m.clone()]).unwrap();
        let b = bicompletion(&s).unwrap();
        assert_eq!(b.points.len(), 2);
        assert_eq!(b.generators[0], m);
        assert!(b.audit_isomorphism().passed());
    }

    #[test]
    fn non_t0_rejected() {
        let s = QUSpace::from_base(2, vec![Relation::full(2)]).unwrap();
        assert!(matches!(bicompletion(&s), Err(Error::NotT0(1, 2))));
    }

    #[test]
    fn cauchy_filters_of_indiscrete_pair() {
        let s = QUSpace::from_base(2, vec![Relation::full(2)]).unwrap();
        assert_eq!(cauchy_filters(&s).len(), 3);
    }
}
