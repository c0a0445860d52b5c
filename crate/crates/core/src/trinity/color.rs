use std::fmt;

use serde::{Deserialize, Serialize};

/// Vertex (and derived edge) colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "G")]
    Green,
    #[serde(rename = "B")]
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn index(self) -> usize {
        match self {
            Color::Red => 0,
            Color::Green => 1,
            Color::Blue => 2,
        }
    }

    pub fn from_index(i: usize) -> Color {
        Color::ALL[i % 3]
    }

    /// Cyclic successor red -> green -> blue -> red.
    pub fn next(self) -> Color {
        Color::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Color {
        Color::from_index(self.index() + 2)
    }

    /// The color missing from `{a, b}`; `None` when `a == b`.
    pub fn third(a: Color, b: Color) -> Option<Color> {
        if a == b {
            return None;
        }
        Some(Color::from_index(3 - a.index() - b.index()))
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Green => 'G',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(c: &str) -> Option<Color> {
        match c {
            "R" | "r" => Some(Color::Red),
            "G" | "g" => Some(Color::Green),
            "B" | "b" => Some(Color::Blue),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Triangle shade, fixed by the surface orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Shade {
    Black,
    White,
}

impl Shade {
    /// Shade of a triangle whose corners read `colors` counter-clockwise.
    ///
    /// Black triangles read red, green, blue counter-clockwise; equivalently,
    /// going clockwise green follows blue.
    pub fn of_ccw_corners(colors: [Color; 3]) -> Option<Shade> {
        let [a, b, c] = colors;
        if a == b || b == c || a == c {
            return None;
        }
        if b == a.next() {
            Some(Shade::Black)
        } else {
            Some(Shade::White)
        }
    }
}

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

id_type!(VertexId);
id_type!(EdgeId);
id_type!(TriangleId);

/// An edge reference inside a triangle boundary; `forward` traverses the
/// edge from its first listed endpoint to its second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedEdge {
    pub edge: EdgeId,
    pub forward: bool,
}

impl SignedEdge {
    pub fn new(edge: usize, forward: bool) -> Self {
        SignedEdge { edge: EdgeId(edge), forward }
    }

    pub fn reversed(self) -> Self {
        SignedEdge { edge: self.edge, forward: !self.forward }
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.forward { '+' } else { '-' }, self.edge.0)
    }
}

impl std::str::FromStr for SignedEdge {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (forward, digits) = match s.as_bytes().first() {
            Some(b'+') => (true, &s[1..]),
            Some(b'-') => (false, &s[1..]),
            _ => return Err(format!("signed edge `{s}` must start with + or -")),
        };
        let id = digits.parse::<usize>().map_err(|_| format!("bad edge id in `{s}`"))?;
        Ok(SignedEdge::new(id, forward))
    }
}

impl Serialize for SignedEdge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedEdge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_color() {
        assert_eq!(Color::third(Color::Red, Color::Green), Some(Color::Blue));
        assert_eq!(Color::third(Color::Blue, Color::Red), Some(Color::Green));
        assert_eq!(Color::third(Color::Green, Color::Green), None);
    }

    #[test]
    fn shade_rule() {
        use Color::*;
        // going clockwise green comes after blue in black triangles
        assert_eq!(Shade::of_ccw_corners([Red, Green, Blue]), Some(Shade::Black));
        assert_eq!(Shade::of_ccw_corners([Green, Blue, Red]), Some(Shade::Black));
        assert_eq!(Shade::of_ccw_corners([Red, Blue, Green]), Some(Shade::White));
        assert_eq!(Shade::of_ccw_corners([Red, Red, Green]), None);
    }

    #[test]
    fn signed_edge_text() {
        let e: SignedEdge = "-12".parse().unwrap();
        assert_eq!(e, SignedEdge::new(12, false));
        assert_eq!(e.to_string(), "-12");
        assert!("12".parse::<SignedEdge>().is_err());
    }
}
