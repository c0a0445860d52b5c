use super::{Color, EdgeId, Shade, SignedEdge, TriangleId, Trinity, TrinityData, TrinityError, VertexId};

/// A trinity described purely by how black triangles are glued to white ones.
///
/// `across[x][b]` is the white triangle on the other side of black triangle
/// `b`'s `x`-colored edge. Black triangles read red, green, blue
/// counter-clockwise and white ones red, blue, green, so the three
/// bijections determine the whole oriented map. Vertices are recovered as
/// orbits of corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gluing {
    pub across: [Vec<usize>; 3],
    /// White index of the outer triangle.
    pub outer: Option<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

impl Gluing {
    pub fn n(&self) -> usize {
        self.across[0].len()
    }

    pub fn inverse(&self, x: Color) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (b, &w) in self.across[x.index()].iter().enumerate() {
            inv[w] = b;
        }
        inv
    }

    /// Genus from the Euler characteristic, or `None` when the black and
    /// white triangles do not form one connected surface.
    pub fn genus(&self) -> Option<u32> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let inv: Vec<Vec<usize>> = Color::ALL.iter().map(|&x| self.inverse(x)).collect();
        let mut uf = UnionFind((0..n).collect());
        let mut vertices = 0;
        for y in Color::ALL {
            let (a, b) = (y.next().index(), y.prev().index());
            let mut seen = vec![false; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                vertices += 1;
                let mut cur = start;
                while !seen[cur] {
                    seen[cur] = true;
                    let next = inv[b][self.across[a][cur]];
                    uf.union(cur, next);
                    cur = next;
                }
            }
        }
        if (0..n).any(|i| uf.find(i) != uf.find(0)) {
            return None;
        }
        let euler = vertices as i64 - n as i64;
        (euler <= 2 && euler % 2 == 0).then(|| ((2 - euler) / 2) as u32)
    }

    /// Build the trinity: black `b` gets triangle id `b`, white `w` gets
    /// `n + w`; edge `3b + x` is black `b`'s `x`-colored edge; vertex ids
    /// follow the first corner that reaches them.
    pub fn to_trinity(&self) -> Result<Trinity, TrinityError> {
        let n = self.n();
        for perm in &self.across {
            let mut seen = vec![false; n];
            for &w in perm {
                if w >= n || std::mem::replace(&mut seen[w], true) {
                    return Err(TrinityError::Parse { line: 0, message: "gluing is not a bijection".into() });
                }
            }
        }
        // corner index: triangle * 3 + color
        let mut uf = UnionFind((0..6 * n).collect());
        for x in Color::ALL {
            for b in 0..n {
                let w = n + self.across[x.index()][b];
                for y in [x.next(), x.prev()] {
                    uf.union(b * 3 + y.index(), w * 3 + y.index());
                }
            }
        }
        let mut vertex_of = vec![usize::MAX; 6 * n];
        let mut vertices = Vec::new();
        for c in 0..6 * n {
            let root = uf.find(c);
            if vertex_of[root] == usize::MAX {
                vertex_of[root] = vertices.len();
                vertices.push((VertexId(vertices.len()), Color::from_index(c % 3)));
            }
            vertex_of[c] = vertex_of[root];
        }
        let v = |t: usize, x: Color| VertexId(vertex_of[t * 3 + x.index()]);

        let mut edges = Vec::with_capacity(3 * n);
        for b in 0..n {
            for x in Color::ALL {
                // black b traverses its x-edge from corner x.next() to x.prev()
                edges.push((EdgeId(3 * b + x.index()), v(b, x.next()), v(b, x.prev())));
            }
        }
        let inv: Vec<Vec<usize>> = Color::ALL.iter().map(|&x| self.inverse(x)).collect();
        let mut triangles = Vec::with_capacity(2 * n);
        for b in 0..n {
            // counter-clockwise from the red corner: red->green is the blue edge
            let e = |x: Color| SignedEdge::new(3 * b + x.index(), true);
            triangles.push((TriangleId(b), [e(Color::Blue), e(Color::Red), e(Color::Green)]));
        }
        triangles.extend((0..n).map(|w| {
            let e = |x: Color| SignedEdge::new(3 * inv[x.index()][w] + x.index(), false);
            (TriangleId(n + w), [e(Color::Green), e(Color::Red), e(Color::Blue)])
        }));
        let data = TrinityData {
            genus: None,
            outer: self.outer.map(|w| TriangleId(n + w)),
            vertices,
            edges,
            triangles,
        };
        Trinity::from_data(&data)
    }
}

impl Trinity {
    /// The gluing of this trinity with blacks and whites indexed by their
    /// position in [`Trinity::blacks`] / [`Trinity::whites`].
    pub fn gluing(&self) -> Gluing {
        let mut white_index = vec![usize::MAX; self.triangle_count()];
        for (i, &w) in self.whites().iter().enumerate() {
            white_index[w.0] = i;
        }
        let across = Color::ALL.map(|x| {
            self.blacks()
                .iter()
                .map(|&b| {
                    let e = self.edge_of_color(b, x);
                    white_index[self.edge_triangle(e, Shade::White).0]
                })
                .collect()
        });
        Gluing { across, outer: self.outer().map(|o| white_index[o.0]) }
    }
}
