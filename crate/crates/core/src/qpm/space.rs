use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::relcore::{PointSet, Relation};

use super::rational::{dyadic, format_rat, require_positive, serialize_rats, sorgenfrey, Rat};

/// A finite quasi-pseudometric space: a list of rational points and a
/// distance table satisfying `d(x, x) = 0` and the triangle inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPSpace {
    #[serde(serialize_with = "serialize_rats")]
    points: Vec<Rat>,
    #[serde(skip)]
    dist: Vec<Vec<Rat>>,
}

impl QPSpace {
    /// Tabulates `dist` and validates it exhaustively.
    pub fn new(points: Vec<Rat>, dist: impl Fn(&Rat, &Rat) -> Rat) -> Result<Self> {
        let table = points
            .iter()
            .map(|x| points.iter().map(|y| dist(x, y)).collect())
            .collect();
        Self::from_table(points, table)
    }

    pub fn from_table(points: Vec<Rat>, dist: Vec<Vec<Rat>>) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::EmptySet);
        }
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument("distance table is not square".into()));
        }
        for i in 0..n {
            if !dist[i][i].is_zero() {
                return Err(Error::InvalidArgument(format!("d(x{0}, x{0}) is not 0", i + 1)));
            }
            for j in 0..n {
                if dist[i][j] < Rat::zero() {
                    return Err(Error::InvalidArgument(format!("d(x{}, x{}) is negative", i + 1, j + 1)));
                }
                for k in 0..n {
                    if dist[i][k] > dist[i][j] + dist[j][k] {
                        return Err(Error::InvalidArgument(format!(
                            "triangle inequality fails at x{}, x{}, x{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(QPSpace { points, dist })
    }

    /// The given points under the Sorgenfrey quasi-metric.
    pub fn sorgenfrey(points: Vec<Rat>) -> Self {
        let dist = points
            .iter()
            .map(|x| points.iter().map(|y| sorgenfrey(x, y)).collect())
            .collect();
        QPSpace { points, dist }
    }

    /// `{start, start + step, ..., start + (count − 1)·step}` under Sorgenfrey.
    pub fn sorgenfrey_grid(start: Rat, step: Rat, count: usize) -> Self {
        Self::sorgenfrey((0..count).map(|i| start + step * Rat::from_integer(i as i128)).collect())
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Rat] {
        &self.points
    }

    pub fn dist(&self, i: usize, j: usize) -> &Rat {
        &self.dist[i][j]
    }

    pub fn index_of(&self, x: &Rat) -> Option<usize> {
        self.points.iter().position(|p| p == x)
    }

    /// `d⁻¹(x, y) = d(y, x)`.
    pub fn conjugate(&self) -> Self {
        let n = self.size();
        let dist = (0..n).map(|i| (0..n).map(|j| self.dist[j][i]).collect()).collect();
        QPSpace { points: self.points.clone(), dist }
    }

    /// `dˢ = max(d, d⁻¹)`.
    pub fn symmetrize(&self) -> Self {
        let n = self.size();
        let dist = (0..n)
            .map(|i| (0..n).map(|j| self.dist[i][j].max(self.dist[j][i])).collect())
            .collect();
        QPSpace { points: self.points.clone(), dist }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.dist[i][j] == self.dist[j][i]))
    }

    /// `{y : d(x, y) < eps}`.
    pub fn ball(&self, x: usize, eps: &Rat) -> PointSet {
        PointSet::from_points(self.size(), (0..self.size()).filter(|&y| self.dist[x][y] < *eps))
    }

    /// `{y : d(y, x) < eps}`.
    pub fn conjugate_ball(&self, x: usize, eps: &Rat) -> PointSet {
        PointSet::from_points(self.size(), (0..self.size()).filter(|&y| self.dist[y][x] < *eps))
    }

    /// The entourage `U_eps = {(x, y) : d(x, y) < eps}`.
    pub fn entourage(&self, eps: &Rat) -> Result<Relation> {
        require_positive(eps)?;
        Ok(Relation::from_rows(
            (0..self.size()).map(|x| self.ball(x, eps)).collect(),
        ))
    }

    /// `max(sup_{y∈b} inf_{x∈a} d(x, y), sup_{x∈a} inf_{y∈b} d(x, y))`.
    pub fn hausdorff(&self, a: &PointSet, b: &PointSet) -> Result<Rat> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let reach = |from: &PointSet, to: &PointSet, forward: bool| {
            to.iter()
                .map(|y| {
                    from.iter()
                        .map(|x| if forward { self.dist[x][y] } else { self.dist[y][x] })
                        .min()
                        .expect("nonempty")
                })
                .max()
                .expect("nonempty")
        };
        Ok(reach(a, b, true).max(reach(b, a, false)))
    }

    /// Points whose `d`- and `d⁻¹`-balls meet `a` at every scale in `scales`.
    pub fn double_closure(&self, a: &PointSet, scales: &[Rat]) -> PointSet {
        PointSet::from_points(
            self.size(),
            (0..self.size()).filter(|&x| {
                scales
                    .iter()
                    .all(|eps| self.ball(x, eps).intersects(a) && self.conjugate_ball(x, eps).intersects(a))
            }),
        )
    }

    /// Dyadic scales `2^{-k} ≤ 1` strictly above the smallest positive distance,
    /// the scales this finite point list can resolve.
    pub fn resolvable_scales(&self) -> Vec<Rat> {
        let mesh = self
            .dist
            .iter()
            .flatten()
            .filter(|d| !d.is_zero())
            .min()
            .copied()
            .unwrap_or_else(Rat::one);
        (0..64).map(dyadic).take_while(|eps| *eps > mesh).collect()
    }

    pub fn describe(&self) -> String {
        let pts: Vec<String> = self.points.iter().map(format_rat).collect();
        format!("{{{}}}", pts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperspace::hyper_member;
    use crate::qpm::rational::{int, rat};
    use num_traits::Signed;

    fn grid(step: Rat, count: usize) -> QPSpace {
        QPSpace::sorgenfrey_grid(int(0), step, count)
    }

    #[test]
    fn hausdorff_examples() {
        let s = QPSpace::sorgenfrey(vec![int(0), rat(1, 2), int(1)]);
        let set = |xs: &[usize]| PointSet::from_points(3, xs.iter().copied());
        assert_eq!(s.hausdorff(&set(&[0]), &set(&[1])).unwrap(), rat(1, 2));
        assert_eq!(s.hausdorff(&set(&[0, 2]), &set(&[1])).unwrap(), int(1));
        assert_eq!(s.hausdorff(&set(&[0, 2]), &set(&[0, 2])).unwrap(), int(0));
        assert!(s.hausdorff(&PointSet::empty(3), &set(&[1])).is_err());
    }

    #[test]
    fn validation_rejects_bad_tables() {
        let pts = vec![int(0), int(1), int(2)];
        assert!(QPSpace::new(pts.clone(), |x, y| if x == y { int(0) } else { int(1) }).is_ok());
        assert!(QPSpace::new(pts.clone(), |_, _| int(1)).is_err());
        let bad = |x: &Rat, y: &Rat| if x == y { int(0) } else if *x == int(0) && *y == int(2) { int(5) } else { int(1) };
        assert!(QPSpace::new(pts, bad).is_err());
    }

    #[test]
    fn symmetrization_of_sorgenfrey() {
        let s = grid(rat(1, 3), 7);
        let sym = s.symmetrize();
        assert!(sym.is_symmetric());
        for i in 0..7 {
            for j in 0..7 {
                let expected = if i == j {
                    int(0)
                } else {
                    (s.points()[i] - s.points()[j]).abs().max(int(1))
                };
                assert_eq!(*sym.dist(i, j), expected);
            }
        }
        assert_eq!(s.conjugate().conjugate(), s);
        assert_eq!(sym.symmetrize(), sym);
    }

    #[test]
    fn hausdorff_matches_lifted_entourage() {
        let s = grid(rat(1, 4), 5);
        for eps in [rat(1, 8), rat(1, 4), rat(1, 2), int(1), int(2)] {
            let u = s.entourage(&eps).unwrap();
            for a in crate::relcore::nonempty_subsets(5) {
                for b in crate::relcore::nonempty_subsets(5) {
                    let close = s.hausdorff(&a, &b).unwrap() < eps;
                    assert_eq!(close, hyper_member(&u, &a, &b), "{a} {b} {eps}");
                }
            }
        }
    }

    #[test]
    fn double_closure_of_split_interval() {
        let s = grid(rat(1, 4), 9);
        let scales = s.resolvable_scales();
        assert_eq!(scales, vec![int(1), rat(1, 2)]);
        let one = s.index_of(&int(1)).unwrap();
        let left = PointSet::from_points(9, (0..9).filter(|&i| s.points()[i] > int(0) && s.points()[i] < int(1)));
        let right = PointSet::from_points(9, (0..9).filter(|&i| s.points()[i] > int(1) && s.points()[i] < int(2)));
        assert!(s.double_closure(&left.union(&right), &scales).contains(one));
        assert_eq!(s.double_closure(&left, &scales), left);
        assert_eq!(s.double_closure(&right, &scales), right);
        assert!(s.double_closure(&PointSet::full(9), &scales).is_full());
    }
}
