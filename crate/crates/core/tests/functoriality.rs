//! Point maps between small spaces and their lifts to subsets and filters.

use qubench::hyperspace::{self, audit_hypermap, image_set};
use qubench::relcore::{nonempty_subsets, preorders, QUSpace};
use qubench::stability::lift_map_fd;

fn spaces(n: usize) -> Vec<QUSpace> {
    preorders(n).map(|r| QUSpace::from_base(n, vec![r]).unwrap()).collect()
}

/// Every map from `n` points to `m` points.
fn maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    (0..m.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let p = code % m;
                    code /= m;
                    p
                })
                .collect()
        })
        .collect()
}

#[test]
fn continuous_maps_lift_continuously() {
    let sources = spaces(2);
    let targets = spaces(3);
    let mut continuous = 0;
    for x in &sources {
        for y in &targets {
            for f in maps(2, 3) {
                let fd = lift_map_fd(&f, x, y).unwrap();
                assert!(fd.audit.passed(), "{f:?}: {:?}", fd.audit.violations);
                let hyper = audit_hypermap(&f, x, y).unwrap();
                assert!(hyper.passed());
                let is_continuous = hyperspace::continuity_violation(&f, x, y).is_none();
                assert_eq!(fd.continuous(), is_continuous);
                continuous += is_continuous as usize;
            }
        }
    }
    assert!(continuous > 0);
}

#[test]
fn hypermap_respects_composition() {
    let f = [1, 0, 2];
    let g = [2, 2, 0];
    let gf: Vec<usize> = f.iter().map(|&p| g[p]).collect();
    for a in nonempty_subsets(3) {
        assert_eq!(image_set(&g, &image_set(&f, &a, 3), 3), image_set(&gf, &a, 3));
    }
    let id: Vec<usize> = (0..3).collect();
    for a in nonempty_subsets(3) {
        assert_eq!(image_set(&id, &a, 3), a);
    }
}

#[test]
fn bad_maps_are_refused() {
    let x = &spaces(2)[0];
    let y = &spaces(3)[0];
    assert!(lift_map_fd(&[0], x, y).is_err());
    assert!(lift_map_fd(&[0, 5], x, y).is_err());
    assert!(audit_hypermap(&[0, 5], x, y).is_err());
}
