//! Clock moves.
//!
//! A move site is a black triangle, or more generally a disk bounded by a
//! three-edge cycle (one edge of each color) whose inside borders the cycle
//! with black triangles only. A site's three corner vertices are listed
//! counter-clockwise; `whites[i]` lies outside edge `i`, which runs from
//! vertex `i` to vertex `i + 1`. When every vertex `i` is matched to
//! `whites[i]` the site is clockwise, and the clockwise move rematches
//! vertex `i` to `whites[i - 1]`, one counter-clockwise step about the
//! vertex. When every vertex `i` is matched to `whites[i - 1]` the site is
//! counter-clockwise.

mod phi;
mod sites;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::states::State;
use crate::trinity::{EdgeId, TriangleId, Trinity, VertexId};

pub use phi::{accumulate_phi, PhiVector};
pub use sites::{disk_interior, find_sites};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "cw")]
    Cw,
    #[serde(rename = "ccw")]
    Ccw,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Cw => Direction::Ccw,
            Direction::Ccw => Direction::Cw,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Cw => "cw",
            Direction::Ccw => "ccw",
        })
    }
}

/// Name of a move site: a black triangle id, or the red, green and blue
/// edges of a disk's boundary (written `r:g:b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SiteLabel {
    Triangle(TriangleId),
    Disk([EdgeId; 3]),
}

impl SiteLabel {
    pub fn triangle(self) -> Option<TriangleId> {
        match self {
            SiteLabel::Triangle(t) => Some(t),
            SiteLabel::Disk(_) => None,
        }
    }
}

impl fmt::Display for SiteLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SiteLabel::Triangle(t) => write!(f, "{t}"),
            SiteLabel::Disk([r, g, b]) => write!(f, "{r}:{g}:{b}"),
        }
    }
}

impl FromStr for SiteLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<SiteLabel, String> {
        let bad = || format!("bad move site `{s}`");
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [t] => Ok(SiteLabel::Triangle(TriangleId(t.parse().map_err(|_| bad())?))),
            [r, g, b] => {
                let p = |x: &str| x.parse().map(EdgeId).map_err(|_| bad());
                Ok(SiteLabel::Disk([p(r)?, p(g)?, p(b)?]))
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for SiteLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SiteLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub label: SiteLabel,
    pub vertices: [VertexId; 3],
    pub edges: [EdgeId; 3],
    pub whites: [TriangleId; 3],
}

impl Site {
    pub fn of_triangle(t: &Trinity, b: TriangleId) -> Site {
        let bd = t.boundary(b);
        Site {
            label: SiteLabel::Triangle(b),
            vertices: t.triangle_vertices(b),
            edges: bd.map(|s| s.edge),
            whites: [0, 1, 2].map(|k| t.across(b, k).triangle),
        }
    }

    /// Orientation class in a state, given the state's vertex-to-white table.
    pub fn class(&self, owners: &[Option<TriangleId>]) -> Option<Direction> {
        let at = |i: usize| owners[self.vertices[i].0];
        if (0..3).all(|i| at(i) == Some(self.whites[i])) {
            Some(Direction::Cw)
        } else if (0..3).all(|i| at(i) == Some(self.whites[(i + 2) % 3])) {
            Some(Direction::Ccw)
        } else {
            None
        }
    }

    /// The three rematched pairs of a move in direction `d` (assumes the
    /// site is currently of class `d`).
    pub fn moved_pairs(&self, d: Direction) -> [(TriangleId, VertexId); 3] {
        [0, 1, 2].map(|i| {
            let w = match d {
                Direction::Cw => self.whites[(i + 2) % 3],
                Direction::Ccw => self.whites[i],
            };
            (w, self.vertices[i])
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MoveEvent {
    pub site: SiteLabel,
    pub direction: Direction,
}

impl MoveEvent {
    pub fn cw(site: SiteLabel) -> MoveEvent {
        MoveEvent { site, direction: Direction::Cw }
    }

    pub fn ccw(site: SiteLabel) -> MoveEvent {
        MoveEvent { site, direction: Direction::Ccw }
    }

    pub fn inverse(self) -> MoveEvent {
        MoveEvent { site: self.site, direction: self.direction.reversed() }
    }
}

impl fmt::Display for MoveEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.direction, self.site)
    }
}

impl FromStr for MoveEvent {
    type Err = String;

    fn from_str(s: &str) -> Result<MoveEvent, String> {
        let mut tok = s.split_whitespace();
        let direction = match tok.next() {
            Some("cw") => Direction::Cw,
            Some("ccw") => Direction::Ccw,
            _ => return Err(format!("move `{s}` must start with cw or ccw")),
        };
        let site = tok.next().ok_or_else(|| format!("move `{s}` lacks a site"))?.parse()?;
        if tok.next().is_some() {
            return Err(format!("trailing text in move `{s}`"));
        }
        Ok(MoveEvent { site, direction })
    }
}

/// One event per line; blank lines and `#` comments are skipped.
pub fn parse_path(text: &str) -> Result<Vec<MoveEvent>, String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| l.parse().map_err(|m| format!("line {}: {m}", i + 1)))
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("{0} is not a move site of this trinity")]
    UnknownSite(SiteLabel),
    #[error("site {site} is not {direction}-empty in this state")]
    NotApplicable { site: SiteLabel, direction: Direction },
}

/// The move sites of a trinity, found once.
#[derive(Clone, Debug)]
pub struct Clockwork {
    sites: Vec<Site>,
    index: HashMap<SiteLabel, usize>,
}

impl Clockwork {
    pub fn new(t: &Trinity) -> Clockwork {
        let mut sites: Vec<Site> = t.blacks().iter().map(|&b| Site::of_triangle(t, b)).collect();
        sites.extend(find_sites(t));
        let index = sites.iter().enumerate().map(|(i, s)| (s.label, i)).collect();
        Clockwork { sites, index }
    }

    /// Black triangles first (by id), then disks (by edge triple).
    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn site(&self, label: SiteLabel) -> Option<&Site> {
        self.index.get(&label).map(|&i| &self.sites[i])
    }

    pub fn site_index(&self, label: SiteLabel) -> Option<usize> {
        self.index.get(&label).copied()
    }

    /// No disk sites: every move is about a single black triangle.
    pub fn is_irreducible(&self) -> bool {
        self.sites.iter().all(|s| matches!(s.label, SiteLabel::Triangle(_)))
    }

    /// Sites that admit a move in `s`, with their class, in site order.
    pub fn movable(&self, t: &Trinity, s: &State) -> Vec<(SiteLabel, Direction)> {
        let owners = s.owners(t.vertex_count());
        self.sites.iter().filter_map(|site| site.class(&owners).map(|d| (site.label, d))).collect()
    }

    pub fn apply(&self, t: &Trinity, s: &State, m: MoveEvent) -> Result<State, MoveError> {
        let site = self.site(m.site).ok_or(MoveError::UnknownSite(m.site))?;
        if site.class(&s.owners(t.vertex_count())) != Some(m.direction) {
            return Err(MoveError::NotApplicable { site: m.site, direction: m.direction });
        }
        let mut out = s.clone();
        out.rematch(&site.moved_pairs(m.direction));
        Ok(out)
    }

    /// Apply moves in order, stopping at the first that does not apply.
    pub fn replay(&self, t: &Trinity, s: &State, path: &[MoveEvent]) -> Result<State, MoveError> {
        path.iter().try_fold(s.clone(), |cur, &m| self.apply(t, &cur, m))
    }
}

/// Empty black triangles of `s` with their class. Other sites (disks) are
/// reported by [`Clockwork::movable`].
pub fn empty_black_triangles(t: &Trinity, s: &State) -> Vec<(TriangleId, Direction)> {
    let owners = s.owners(t.vertex_count());
    t.blacks()
        .iter()
        .filter_map(|&b| Site::of_triangle(t, b).class(&owners).map(|d| (b, d)))
        .collect()
}

/// Apply one move. Sites are looked up afresh; use [`Clockwork::apply`]
/// when applying many moves to the same trinity.
pub fn apply_move(t: &Trinity, s: &State, m: MoveEvent) -> Result<State, MoveError> {
    match m.site {
        SiteLabel::Triangle(b) if b.0 < t.triangle_count() && t.blacks().contains(&b) => {
            let site = Site::of_triangle(t, b);
            if site.class(&s.owners(t.vertex_count())) != Some(m.direction) {
                return Err(MoveError::NotApplicable { site: m.site, direction: m.direction });
            }
            let mut out = s.clone();
            out.rematch(&site.moved_pairs(m.direction));
            Ok(out)
        }
        SiteLabel::Triangle(_) => Err(MoveError::UnknownSite(m.site)),
        SiteLabel::Disk(_) => Clockwork::new(t).apply(t, s, m),
    }
}
