//! Explicit boolean matrices on `{1, .., N}`, an oracle independent of the
//! closed forms in [`super::SymEntourage`].
//!
//! Each generator (`≤`, `T_p`) is materialized as a matrix together with its
//! transpose, an entourage is the AND of its generators' matrices, and images
//! are ORs of rows. Results are compared on `{1, .., N−1}`, away from the top
//! of the truncated order.

use std::collections::BTreeSet;

use super::{CofSet, SymEntourage, SymFilter};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: u64) -> Self {
        Bits(vec![0; (n as usize + 64) / 64])
    }

    fn from_fn(n: u64, f: impl Fn(u64) -> bool) -> Self {
        let mut b = Self::empty(n);
        for x in (1..=n).filter(|&x| f(x)) {
            b.set(x);
        }
        b
    }

    fn set(&mut self, x: u64) {
        self.0[x as usize / 64] |= 1 << (x % 64);
    }

    fn get(&self, x: u64) -> bool {
        self.0[x as usize / 64] >> (x % 64) & 1 == 1
    }

    fn and(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }

    fn or(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn window(&self, n: u64) -> BTreeSet<u64> {
        (1..n).filter(|&y| self.get(y)).collect()
    }
}

/// Rows indexed `0..=n`; row 0 is unused padding.
#[derive(Clone, Debug)]
struct Matrix(Vec<Bits>);

impl Matrix {
    fn from_fn(n: u64, f: impl Fn(u64, u64) -> bool) -> Self {
        Matrix((0..=n).map(|x| Bits::from_fn(n, |y| x >= 1 && f(x, y))).collect())
    }

    fn and(&mut self, other: &Matrix) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            a.and(b);
        }
    }
}

/// Precomputed generator matrices for one truncation bound.
#[derive(Clone, Debug)]
pub struct TruncationOracle {
    n: u64,
    full: Matrix,
    order: (Matrix, Matrix),
    punctures: Vec<(Matrix, Matrix)>,
}

impl TruncationOracle {
    /// Generators `T_p` are materialized for `p ≤ max_puncture`.
    pub fn new(n: u64, max_puncture: u64) -> Self {
        assert!(n >= 2, "truncation needs at least two points");
        let full = Matrix::from_fn(n, |_, _| true);
        let order = (
            Matrix::from_fn(n, |x, y| x <= y),
            Matrix::from_fn(n, |y, x| x <= y),
        );
        let punctures = (1..=max_puncture)
            .map(|p| {
                let t = |x: u64, y: u64| x == p || y != p;
                (Matrix::from_fn(n, t), Matrix::from_fn(n, |y, x| t(x, y)))
            })
            .collect();
        TruncationOracle { n, full, order, punctures }
    }

    pub fn bound(&self) -> u64 {
        self.n
    }

    pub fn entourage(&self, e: &SymEntourage) -> TruncatedEntourage {
        let (mut rows, mut cols) = if e.with_leq {
            self.order.clone()
        } else {
            (self.full.clone(), self.full.clone())
        };
        for &p in &e.punctures {
            match self.punctures.get(p as usize - 1) {
                Some((r, c)) => {
                    rows.and(r);
                    cols.and(c);
                }
                None => {
                    let t = |x: u64, y: u64| x == p || y != p;
                    rows.and(&Matrix::from_fn(self.n, t));
                    cols.and(&Matrix::from_fn(self.n, |y, x| t(x, y)));
                }
            }
        }
        TruncatedEntourage { n: self.n, rows, cols }
    }
}

/// An entourage materialized on `{1, .., N}`.
#[derive(Clone, Debug)]
pub struct TruncatedEntourage {
    n: u64,
    rows: Matrix,
    cols: Matrix,
}

impl TruncatedEntourage {
    pub fn new(e: &SymEntourage, n: u64) -> Self {
        TruncationOracle::new(n, 0).entourage(e)
    }

    pub fn contains(&self, x: u64, y: u64) -> bool {
        self.rows.0[x as usize].get(y)
    }

    fn collect(&self, table: &Matrix, a: &CofSet) -> Bits {
        let mut acc = Bits::empty(self.n);
        for x in a.truncate(self.n) {
            acc.or(&table.0[x as usize]);
        }
        acc
    }

    /// `e(a ∩ [1, N])` restricted to `[1, N−1]`.
    pub fn image(&self, a: &CofSet) -> BTreeSet<u64> {
        self.collect(&self.rows, a).window(self.n)
    }

    /// `e⁻¹(a ∩ [1, N])` restricted to `[1, N−1]`.
    pub fn preimage(&self, a: &CofSet) -> BTreeSet<u64> {
        self.collect(&self.cols, a).window(self.n)
    }

    /// `(e ∩ e⁻¹)(a ∩ [1, N])` restricted to `[1, N−1]`.
    pub fn sym_image(&self, a: &CofSet) -> BTreeSet<u64> {
        let mut acc = Bits::empty(self.n);
        for x in a.truncate(self.n) {
            let mut row = self.rows.0[x as usize].clone();
            row.and(&self.cols.0[x as usize]);
            acc.or(&row);
        }
        acc.window(self.n)
    }

    /// `⋂_k (e⁻¹(B_k) ∩ e(B_k))` over the truncated base members
    /// `B_k ∩ [1, N]`, `k = 2, .., N`, restricted to `[1, N−1]`.
    ///
    /// The members are nested, so their images are suffix ORs of rows.
    pub fn u_sub_f(&self, f: &SymFilter) -> BTreeSet<u64> {
        let lead = match f {
            SymFilter::Principal(b) => {
                let mut img = self.collect(&self.rows, b);
                img.and(&self.collect(&self.cols, b));
                return img.window(self.n);
            }
            SymFilter::GFilter => Some(1),
            SymFilter::Cofinite => None,
        };
        let mut img = Bits::empty(self.n);
        let mut pre = Bits::empty(self.n);
        if let Some(x) = lead {
            img.or(&self.rows.0[x]);
            pre.or(&self.cols.0[x]);
        }
        let mut meet = Bits::from_fn(self.n, |_| true);
        for k in (2..=self.n).rev() {
            img.or(&self.rows.0[k as usize]);
            pre.or(&self.cols.0[k as usize]);
            let mut both = img.clone();
            both.and(&pre);
            meet.and(&both);
        }
        meet.window(self.n)
    }
}

/// Restriction of a symbolic set to the comparison window `[1, N−1]`.
pub fn window(a: &CofSet, n: u64) -> BTreeSet<u64> {
    a.truncate(n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_match_membership_rule() {
        let e = SymEntourage::new(true, [2, 5]);
        let t = TruncatedEntourage::new(&e, 20);
        for x in 1..=20 {
            for y in 1..=20 {
                assert_eq!(t.contains(x, y), e.contains(x, y), "({x},{y})");
            }
        }
        let cached = TruncationOracle::new(20, 6).entourage(&e);
        assert_eq!(cached.image(&CofSet::finite([1, 4])), t.image(&CofSet::finite([1, 4])));
    }

    #[test]
    fn order_preimage_of_one() {
        let t = TruncatedEntourage::new(&SymEntourage::leq(), 50);
        assert_eq!(t.image(&CofSet::singleton(1)), (1..50).collect());
        assert_eq!(t.preimage(&CofSet::singleton(1)), BTreeSet::from([1]));
    }

    #[test]
    fn filter_cores_match_closed_forms() {
        for n in [20, 50, 200] {
            let oracle = TruncationOracle::new(n, 12);
            for leq in [true, false] {
                for s in [vec![], vec![1], vec![2, 7, 12], vec![1, 3, 5, 9, 11]] {
                    let e = SymEntourage::new(leq, s);
                    let t = oracle.entourage(&e);
                    for f in [
                        SymFilter::GFilter,
                        SymFilter::Cofinite,
                        SymFilter::Principal(CofSet::finite([2, 3])),
                    ] {
                        let symbolic = f.u_sub_f(&e).unwrap();
                        assert_eq!(t.u_sub_f(&f), window(&symbolic, n), "{e} {f:?} N={n}");
                    }
                }
            }
        }
    }
}
