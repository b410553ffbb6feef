//! Text formats for finite spaces and rational point sets.
//!
//! A space file has a `points N` header, an optional `labels a b c ...` line,
//! then one `relation` block per base member listing pairs `i j` (1-based
//! indices or labels), one pair per line. `#` starts a comment. A point-set
//! file has one rational (`p/q` or an integer) per line.

use crate::error::{Error, Result};
use crate::qpm::{format_rat, parse_rat, Rat};
use crate::relcore::{GroundSet, QUSpace, RawRelation, ReflexivePolicy, ValidationReport};

use super::report::sha256_hex;

/// A parsed space file, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceFile {
    pub ground: GroundSet,
    pub relations: Vec<RawRelation>,
}

impl SpaceFile {
    pub fn validate(&self, policy: ReflexivePolicy) -> ValidationReport {
        QUSpace::validate(&self.ground, &self.relations, policy)
    }

    pub fn build(&self, policy: ReflexivePolicy) -> Result<(QUSpace, ValidationReport)> {
        QUSpace::from_raw(self.ground.clone(), &self.relations, policy)
    }
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Lines with comments stripped, numbered from 1, blank ones dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn parse_space(text: &str) -> Result<SpaceFile> {
    let mut size: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut relations: Vec<RawRelation> = vec![];
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        let mut words = content.split_whitespace();
        let head = words.next().expect("nonempty line");
        match head {
            "points" => {
                if size.is_some() {
                    return Err(parse_error(line, "duplicate `points` header"));
                }
                let n: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| parse_error(line, "`points` needs a count"))?;
                if n == 0 {
                    return Err(parse_error(line, "a ground set needs at least one point"));
                }
                if words.next().is_some() {
                    return Err(parse_error(line, "trailing input after `points N`"));
                }
                size = Some(n);
            }
            "labels" => {
                let n = size.ok_or_else(|| parse_error(line, "`labels` before `points`"))?;
                if labels.is_some() || !relations.is_empty() {
                    return Err(parse_error(line, "`labels` must follow `points` once"));
                }
                let ls: Vec<String> = words.map(str::to_string).collect();
                if ls.len() != n {
                    return Err(parse_error(line, format!("expected {n} labels, found {}", ls.len())));
                }
                if let Some(l) = ls.iter().find(|l| l.parse::<usize>().is_ok()) {
                    return Err(parse_error(line, format!("label `{l}` would shadow a point number")));
                }
                labels = Some(ls);
            }
            "relation" => {
                let n = size.ok_or_else(|| parse_error(line, "`relation` before `points`"))?;
                if words.next().is_some() {
                    return Err(parse_error(line, "trailing input after `relation`"));
                }
                relations.push(RawRelation::new(n, vec![]));
            }
            _ => {
                let n = size.ok_or_else(|| parse_error(line, "pair before `points`"))?;
                let rel = relations
                    .last_mut()
                    .ok_or_else(|| parse_error(line, "pair outside a `relation` block"))?;
                let tokens: Vec<&str> = content.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(parse_error(line, format!("expected a pair `i j`, found `{content}`")));
                }
                let point = |t: &str| -> Result<usize> {
                    if let Ok(i) = t.parse::<usize>() {
                        return if (1..=n).contains(&i) {
                            Ok(i - 1)
                        } else {
                            Err(parse_error(line, format!("point {i} outside 1..={n}")))
                        };
                    }
                    labels
                        .as_ref()
                        .and_then(|ls| ls.iter().position(|l| l == t))
                        .ok_or_else(|| parse_error(line, format!("unknown point `{t}`")))
                };
                rel.pairs.push((point(tokens[0])?, point(tokens[1])?));
            }
        }
    }
    let n = size.ok_or_else(|| parse_error(last_line.max(1), "missing `points N` header"))?;
    let ground = match labels {
        Some(ls) => GroundSet::with_labels(ls),
        None => GroundSet::new(n),
    }
    .map_err(|e| parse_error(1, e.to_string()))?;
    Ok(SpaceFile { ground, relations })
}

/// Canonical text of a space: every pair of every base relation, row by row.
pub fn serialize_space(space: &QUSpace) -> String {
    let mut out = format!("points {}\n", space.size());
    if let Some(ls) = space.ground().labels() {
        out.push_str(&format!("labels {}\n", ls.join(" ")));
    }
    for r in space.base() {
        out.push_str("relation\n");
        for (x, y) in r.pairs() {
            out.push_str(&format!("{} {}\n", x + 1, y + 1));
        }
    }
    out
}

/// SHA-256 of the canonical serialization.
pub fn space_hash(space: &QUSpace) -> String {
    sha256_hex(&serialize_space(space))
}

pub fn parse_point_set(text: &str) -> Result<Vec<Rat>> {
    let mut points = vec![];
    for (line, content) in content_lines(text) {
        let x = parse_rat(content).map_err(|e| parse_error(line, e.to_string()))?;
        if points.contains(&x) {
            return Err(parse_error(line, format!("duplicate point {content}")));
        }
        points.push(x);
    }
    if points.is_empty() {
        return Err(parse_error(1, "no points"));
    }
    Ok(points)
}

pub fn serialize_point_set(points: &[Rat]) -> String {
    points.iter().map(|p| format!("{}\n", format_rat(p))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpm::rat;
    use crate::relcore::Relation;
    use proptest::prelude::*;

    const SIERPINSKI: &str = "# two points\npoints 2\nlabels open closed\nrelation\nopen closed  # one way\n";

    #[test]
    fn parses_labels_and_comments() {
        let f = parse_space(SIERPINSKI).unwrap();
        let (space, report) = f.build(ReflexivePolicy::Repair).unwrap();
        assert!(report.reflexive_repair);
        assert_eq!(space.base()[0], Relation::from_pairs(2, [(0, 1)]));
        assert!(f.build(ReflexivePolicy::Strict).is_err());
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("points 2\nrelation\n1 3\n", 3),
            ("relation\n", 1),
            ("points 2\n1 2\n", 2),
            ("points 2\nrelation\n1\n", 3),
            ("points 0\n", 1),
            ("points 2\n\nlabels a\n", 3),
            ("# nothing\n", 1),
        ];
        for (text, expected) in cases {
            match parse_space(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn point_sets() {
        let pts = parse_point_set("0\n1/2 # half\n\n-3/4\n").unwrap();
        assert_eq!(pts, vec![rat(0, 1), rat(1, 2), rat(-3, 4)]);
        assert_eq!(parse_point_set(&serialize_point_set(&pts)).unwrap(), pts);
        assert!(matches!(parse_point_set("1\nx\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_point_set("1\n1\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trips(n in 1usize..6, masks in proptest::collection::vec(any::<u64>(), 1..4)) {
            let base: Vec<Relation> = masks
                .iter()
                .map(|m| Relation::from_pairs(n, (0..n * n).filter(|i| m >> i & 1 == 1).map(|i| (i / n, i % n))))
                .collect();
            let closed: Vec<Relation> = base.iter().map(|r| {
                let mut t = r.clone();
                while !t.is_transitive() { t = t.square(); }
                t
            }).collect();
            let space = QUSpace::from_base(n, closed).unwrap();
            let text = serialize_space(&space);
            let (back, report) = parse_space(&text).unwrap().build(ReflexivePolicy::Strict).unwrap();
            prop_assert!(!report.reflexive_repair);
            prop_assert_eq!(&back, &space);
            prop_assert_eq!(space_hash(&back), space_hash(&space));
        }
    }
}
