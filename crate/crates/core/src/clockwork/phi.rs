use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Direction, MoveEvent, SiteLabel};

/// Net number of clockwise moves per site. Zero entries are never stored,
/// so equal vectors compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PhiVector(BTreeMap<SiteLabel, i64>);

impl PhiVector {
    pub fn get(&self, site: SiteLabel) -> i64 {
        self.0.get(&site).copied().unwrap_or(0)
    }

    pub fn add(&mut self, site: SiteLabel, delta: i64) {
        let v = self.0.entry(site).or_insert(0);
        *v += delta;
        if *v == 0 {
            self.0.remove(&site);
        }
    }

    pub fn record(&mut self, m: MoveEvent) {
        self.add(
            m.site,
            match m.direction {
                Direction::Cw => 1,
                Direction::Ccw => -1,
            },
        );
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SiteLabel, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    fn combine(&self, other: &PhiVector, f: impl Fn(i64, i64) -> i64) -> PhiVector {
        let mut out = PhiVector::default();
        for &k in self.0.keys().chain(other.0.keys()) {
            let v = f(self.get(k), other.get(k));
            if v != 0 {
                out.0.insert(k, v);
            }
        }
        out
    }

    pub fn pointwise_min(&self, other: &PhiVector) -> PhiVector {
        self.combine(other, i64::min)
    }

    pub fn pointwise_max(&self, other: &PhiVector) -> PhiVector {
        self.combine(other, i64::max)
    }
}

/// Exponent sum of a path: clockwise moves count `+1`, counter-clockwise
/// moves `-1`, per site.
pub fn accumulate_phi(path: &[MoveEvent]) -> PhiVector {
    let mut phi = PhiVector::default();
    for &m in path {
        phi.record(m);
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trinity::TriangleId;

    fn tri(i: usize) -> SiteLabel {
        SiteLabel::Triangle(TriangleId(i))
    }

    #[test]
    fn empty_path_is_zero() {
        assert!(accumulate_phi(&[]).is_zero());
    }

    #[test]
    fn path_and_reverse_cancel() {
        let path = [MoveEvent::cw(tri(0)), MoveEvent::cw(tri(2)), MoveEvent::ccw(tri(5))];
        let mut both = path.to_vec();
        both.extend(path.iter().rev().map(|m| m.inverse()));
        assert_eq!(accumulate_phi(&path).get(tri(5)), -1);
        assert!(accumulate_phi(&both).is_zero());
    }

    #[test]
    fn min_and_max() {
        let a = accumulate_phi(&[MoveEvent::cw(tri(0)), MoveEvent::cw(tri(0))]);
        let b = accumulate_phi(&[MoveEvent::cw(tri(2))]);
        assert_eq!(a.pointwise_min(&b), PhiVector::default());
        assert_eq!(a.pointwise_max(&b).total(), 3);
    }
}
