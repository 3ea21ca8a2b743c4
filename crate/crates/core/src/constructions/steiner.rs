//! The Steiner system S(3,6,22) from the projective plane PG(2,4), and the
//! Mesner, Gewirtz and Higman–Sims graphs built from it.
//!
//! Points `0..21` are the points of PG(2,4) and point `21` is the extra
//! point at infinity. Blocks `0..21` are the extended lines (line ∪ {21});
//! blocks `21..77` are hyperovals from one family of 56 that pairwise meet
//! in 0 or 2 points.

use super::{expect_srg, k_subsets_colex, GEWIRTZ_SRG, HIGMAN_SIMS_SRG, MESNER_SRG};
use crate::error::{domain, self_check, Result};
use crate::graph::{Bitset, Graph};

/// F4 = {0, 1, x, x+1} encoded as 0..4 in the polynomial basis, `x² = x + 1`.
const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

fn f4_dot(a: [u8; 3], b: [u8; 3]) -> u8 {
    (0..3).fold(0, |acc, i| acc ^ F4_MUL[a[i] as usize][b[i] as usize])
}

/// Non-zero vectors of F4³ whose first non-zero coordinate is 1.
fn projective_points() -> Vec<[u8; 3]> {
    let mut pts = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    /// Each block as a bitmask over the 22 points.
    blocks: Vec<u32>,
}

impl SteinerSystem {
    pub const POINTS: usize = 22;

    /// Blocks as sorted point lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|&b| (0..22).filter(|i| b >> i & 1 == 1).collect())
            .collect()
    }

    pub fn block_masks(&self) -> &[u32] {
        &self.blocks
    }

    /// Indices of the blocks containing `point`.
    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b] >> point & 1 == 1)
            .collect()
    }

    /// Every 3-subset of points lies in exactly one block.
    pub fn verify(&self) -> Result<()> {
        if self.blocks.len() != 77
            || self
                .blocks
                .iter()
                .any(|b| b.count_ones() != 6 || b >> 22 != 0)
        {
            return Err(self_check("S(3,6,22) must have 77 blocks of size 6"));
        }
        for t in k_subsets_colex(22, 3) {
            let hits = self.blocks.iter().filter(|&&b| b as u64 & t == t).count();
            if hits != 1 {
                return Err(self_check(format!("triple {t:#x} lies in {hits} blocks")));
            }
        }
        Ok(())
    }
}

pub fn steiner_3_6_22() -> SteinerSystem {
    let pts = projective_points();
    let collinear = |a: usize, b: usize, c: usize| {
        // det of the 3×3 matrix over a field of characteristic 2.
        let (p, q, r) = (pts[a], pts[b], pts[c]);
        let m = |x: u8, y: u8| F4_MUL[x as usize][y as usize];
        let cross = [
            m(q[1], r[2]) ^ m(q[2], r[1]),
            m(q[2], r[0]) ^ m(q[0], r[2]),
            m(q[0], r[1]) ^ m(q[1], r[0]),
        ];
        f4_dot(p, cross) == 0
    };
    let lines: Vec<u32> = pts
        .iter()
        .map(|&l| {
            (0..21)
                .filter(|&i| f4_dot(l, pts[i]) == 0)
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    let hyperovals: Vec<u32> = k_subsets_colex(21, 6)
        .into_iter()
        .filter(|&s| {
            let v: Vec<usize> = (0..21).filter(|i| s >> i & 1 == 1).collect();
            (0..6).all(|a| (a + 1..6).all(|b| (b + 1..6).all(|c| !collinear(v[a], v[b], v[c]))))
        })
        .map(|s| s as u32)
        .collect();
    assert_eq!(hyperovals.len(), 168, "PG(2,4) has 168 hyperovals");
    let family =
        select_even_family(&hyperovals, 56).expect("PG(2,4) has a 56-family of hyperovals");
    let mut blocks: Vec<u32> = lines.iter().map(|&l| l | 1 << 21).collect();
    blocks.extend(family);
    let sys = SteinerSystem { blocks };
    sys.verify().expect("S(3,6,22) construction");
    sys
}

/// Backtracking search for `size` hyperovals pairwise meeting in 0 or 2
/// points, in index order.
fn select_even_family(hyperovals: &[u32], size: usize) -> Option<Vec<u32>> {
    let m = hyperovals.len();
    let ok = |a: u32, b: u32| (a & b).count_ones() % 2 == 0;
    let compat: Vec<Bitset> = (0..m)
        .map(|i| {
            Bitset::from_iter_with_capacity(
                m,
                (0..m).filter(|&j| j != i && ok(hyperovals[i], hyperovals[j])),
            )
        })
        .collect();
    fn rec(compat: &[Bitset], cand: Bitset, chosen: &mut Vec<usize>, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        if chosen.len() + cand.len() < size {
            return false;
        }
        for v in cand.iter() {
            let mut next = cand.clone();
            next.intersect_with(compat[v].words());
            next.difference_with(Bitset::from_iter_with_capacity(compat.len(), 0..=v).words());
            chosen.push(v);
            if rec(compat, next, chosen, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(&compat, Bitset::full(m), &mut chosen, size)
        .then(|| chosen.iter().map(|&i| hyperovals[i]).collect())
}

/// Blocks as vertices, adjacent when disjoint. srg(77,16,0,4).
pub fn mesner(sys: &SteinerSystem) -> Result<Graph> {
    let b = sys.block_masks();
    let g = Graph::from_fn(b.len(), |x, y| b[x] & b[y] == 0);
    expect_srg(&g, MESNER_SRG, "Mesner")?;
    Ok(g)
}

/// Blocks avoiding `point`, adjacent when disjoint. srg(56,10,0,2).
pub fn gewirtz(sys: &SteinerSystem, point: usize) -> Result<Graph> {
    if point >= SteinerSystem::POINTS {
        return Err(domain(format!("point {point} out of range 0..22")));
    }
    let b: Vec<u32> = sys
        .block_masks()
        .iter()
        .copied()
        .filter(|&x| x >> point & 1 == 0)
        .collect();
    let g = Graph::from_fn(b.len(), |x, y| b[x] & b[y] == 0);
    expect_srg(&g, GEWIRTZ_SRG, "Gewirtz")?;
    Ok(g)
}

/// Mesner graph on `0..77`, point vertices `77 + i` joined to the blocks
/// containing `i`, and vertex `99` joined to every point vertex.
/// srg(100,22,0,6).
pub fn higman_sims(sys: &SteinerSystem) -> Result<Graph> {
    let b = sys.block_masks();
    let g = Graph::from_fn(100, |x, y| match (x, y) {
        (x, y) if y < 77 => b[x] & b[y] == 0,
        (x, y) if x < 77 && y < 99 => b[x] >> (y - 77) & 1 == 1,
        (x, 99) => (77..99).contains(&x),
        _ => false,
    });
    expect_srg(&g, HIGMAN_SIMS_SRG, "Higman–Sims")?;
    Ok(g)
}
