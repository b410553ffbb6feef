use serde::Serialize;

use crate::error::{Error, Result};

use super::rational::{require_positive, serialize_rat, sorgenfrey, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyProbe {
    /// The tail examined: the second half of the sequence.
    pub tail_start: usize,
    #[serde(serialize_with = "serialize_rat")]
    pub tail_diameter: Rat,
    pub cauchy: bool,
    /// A candidate within `eps` of every tail term in the symmetrized distance.
    pub limit: Option<String>,
}

/// Classifies a finite sequence at scale `eps` under the symmetrization of
/// `dist`: Cauchy when the second half has diameter below `eps`, and
/// convergent to the first candidate (then the tail terms) within `eps` of
/// every tail term.
pub fn cauchy_probe(
    dist: impl Fn(&Rat, &Rat) -> Rat,
    seq: &[Rat],
    eps: &Rat,
    candidates: &[Rat],
) -> Result<CauchyProbe> {
    require_positive(eps)?;
    if seq.is_empty() {
        return Err(Error::EmptySet);
    }
    let sym = |x: &Rat, y: &Rat| dist(x, y).max(dist(y, x));
    let tail_start = seq.len() / 2;
    let tail = &seq[tail_start..];
    let tail_diameter = tail
        .iter()
        .flat_map(|x| tail.iter().map(|y| sym(x, y)))
        .max()
        .expect("nonempty tail");
    let limit = candidates
        .iter()
        .chain(tail)
        .find(|c| tail.iter().all(|b| sym(c, b) < *eps))
        .map(super::rational::format_rat);
    Ok(CauchyProbe {
        tail_start,
        cauchy: tail_diameter < *eps,
        tail_diameter,
        limit,
    })
}

pub fn sorgenfrey_cauchy_probe(seq: &[Rat], eps: &Rat) -> Result<CauchyProbe> {
    cauchy_probe(sorgenfrey, seq, eps, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpm::rational::{int, rat};
    use num_traits::Signed;

    #[test]
    fn constant_and_eventually_constant() {
        let p = sorgenfrey_cauchy_probe(&[rat(1, 3); 6], &rat(1, 2)).unwrap();
        assert!(p.cauchy);
        assert_eq!(p.limit.as_deref(), Some("1/3"));
        let seq = vec![int(5), int(-2), rat(7, 3), int(0), int(0), int(0), int(0), int(0)];
        let p = sorgenfrey_cauchy_probe(&seq, &rat(1, 2)).unwrap();
        assert!(p.cauchy);
        assert_eq!(p.limit.as_deref(), Some("0"));
    }

    #[test]
    fn harmonic_sequence_is_not_cauchy() {
        let seq: Vec<Rat> = (1..=32).map(|m| rat(1, m)).collect();
        let p = sorgenfrey_cauchy_probe(&seq, &rat(1, 2)).unwrap();
        assert!(!p.cauchy);
        assert_eq!(p.tail_diameter, int(1));
        assert!(p.limit.is_none());
        // The same sequence is Cauchy for the Euclidean distance at a coarse scale.
        let euclid = |x: &Rat, y: &Rat| (x - y).abs();
        assert!(cauchy_probe(euclid, &seq, &rat(1, 16), &[int(0)]).unwrap().cauchy);
    }
}
