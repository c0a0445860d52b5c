use std::collections::VecDeque;

use sha2::{Digest, Sha256};

use super::{Color, Gluing, Trinity};

/// Isomorphism invariant of a trinity under color- and orientation-preserving
/// maps (which must also carry the outer triangle to the outer triangle).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub encoding: Vec<u32>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> Vec<u8> {
        self.encoding.iter().flat_map(|x| x.to_le_bytes()).collect()
    }

    /// Lowercase hex SHA-256 of [`CanonicalForm::bytes`].
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.bytes()))
    }

    /// The encoding as text: `genus n outer | w_r w_g w_b | ...`.
    pub fn text(&self) -> String {
        let mut parts = vec![format!("{} {} {}", self.encoding[0], self.encoding[1], self.encoding[2] as i64)];
        for chunk in self.encoding[3..].chunks(3) {
            parts.push(format!("{} {} {}", chunk[0], chunk[1], chunk[2]));
        }
        parts.join(" | ")
    }
}

const NONE: u32 = u32::MAX;

/// Breadth-first relabeling from black triangle `start`. Returns the encoding
/// and the black and white relabelings.
fn encode_from(g: &Gluing, inv: &[Vec<usize>; 3], genus: u32, start: usize) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let n = g.n();
    let mut black_label = vec![NONE; n];
    let mut white_label = vec![NONE; n];
    let (mut nb, mut nw) = (0u32, 0u32);
    let mut queue = VecDeque::new();
    black_label[start] = 0;
    nb += 1;
    queue.push_back((true, start));
    while let Some((is_black, t)) = queue.pop_front() {
        for (across, inv) in g.across.iter().zip(inv.iter()) {
            if is_black {
                let w = across[t];
                if white_label[w] == NONE {
                    white_label[w] = nw;
                    nw += 1;
                    queue.push_back((false, w));
                }
            } else {
                let b = inv[t];
                if black_label[b] == NONE {
                    black_label[b] = nb;
                    nb += 1;
                    queue.push_back((true, b));
                }
            }
        }
    }
    let mut by_label = vec![0usize; n];
    for (b, &l) in black_label.iter().enumerate() {
        by_label[l as usize] = b;
    }
    let mut enc = Vec::with_capacity(3 + 3 * n);
    enc.push(genus);
    enc.push(n as u32);
    enc.push(g.outer.map_or(NONE, |o| white_label[o]));
    for &b in &by_label {
        for x in 0..3 {
            enc.push(white_label[g.across[x][b]]);
        }
    }
    (enc, black_label, white_label)
}

fn best_start(t: &Trinity) -> (Gluing, Vec<u32>, Vec<u32>, Vec<u32>) {
    let g = t.gluing();
    let inv = Color::ALL.map(|x| g.inverse(x));
    let mut best: Option<(Vec<u32>, Vec<u32>, Vec<u32>)> = None;
    for start in 0..g.n() {
        let cand = encode_from(&g, &inv, t.genus(), start);
        if best.as_ref().is_none_or(|b| cand.0 < b.0) {
            best = Some(cand);
        }
    }
    let (enc, bl, wl) = best.expect("a trinity has a black triangle");
    (g, enc, bl, wl)
}

/// Minimum breadth-first encoding over all starting black triangles.
pub fn canonical_form(t: &Trinity) -> CanonicalForm {
    CanonicalForm { encoding: best_start(t).1 }
}

/// The representative of `t`'s isomorphism class with canonical ids.
pub fn canonical_trinity(t: &Trinity) -> Trinity {
    let (g, _, bl, wl) = best_start(t);
    let n = g.n();
    let mut across = [vec![0; n], vec![0; n], vec![0; n]];
    for b in 0..n {
        for x in 0..3 {
            across[x][bl[b] as usize] = wl[g.across[x][b]] as usize;
        }
    }
    let relabeled = Gluing { across, outer: g.outer.map(|o| wl[o] as usize) };
    relabeled.to_trinity().expect("relabeling preserves validity")
}
