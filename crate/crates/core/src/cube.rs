//! Unit-cube geometry: corner labels, positions, symmetries and directions.
//!
//! Corners are indexed `0..8` in the order `A B C D A' B' C' D'`. Corner `i`
//! and corner `i ^ 4` are body-opposite.

use alloc::vec::Vec;

use crate::pauli::Site;

pub const LABELS: [&str; 8] = ["A", "B", "C", "D", "A'", "B'", "C'", "D'"];

/// Position of each corner relative to the generator's reference point.
pub const CORNERS: [Site; 8] = [
    [1, 0, 1],
    [1, 1, 1],
    [1, 0, 0],
    [1, 1, 0],
    [0, 1, 0],
    [0, 0, 0],
    [0, 1, 1],
    [0, 0, 1],
];

#[inline]
pub const fn opposite(i: usize) -> usize {
    i ^ 4
}

pub fn corner_at(p: Site) -> Option<usize> {
    CORNERS.iter().position(|c| *c == p)
}

fn sub(a: Site, b: Site) -> Site {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// The 48 symmetries of the cube as corner permutations `perm[i] = image of i`.
/// The identity comes first.
pub fn symmetries() -> Vec<[usize; 8]> {
    let mut out = Vec::with_capacity(48);
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for axes in PERMS {
        for flips in 0..8u8 {
            let mut perm = [0usize; 8];
            for (i, c) in CORNERS.iter().enumerate() {
                let mut q = [0i64; 3];
                for k in 0..3 {
                    let v = c[axes[k]];
                    q[k] = if (flips >> k) & 1 == 1 { 1 - v } else { v };
                }
                perm[i] = corner_at(q).expect("cube maps to itself");
            }
            out.push(perm);
        }
    }
    out
}

/// The 120° rotation `(x, y, z) -> (z, x, y)` about the body diagonal `(1,1,1)`.
pub fn rotation_111() -> [usize; 8] {
    let mut perm = [0; 8];
    for (i, c) in CORNERS.iter().enumerate() {
        perm[i] = corner_at([c[2], c[0], c[1]]).expect("cube maps to itself");
    }
    perm
}

/// The 13 line directions through the cube: axes, face diagonals, body diagonals.
pub const DIRECTIONS: [Site; 13] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, -1, 0],
    [1, 0, 1],
    [1, 0, -1],
    [0, 1, 1],
    [0, 1, -1],
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [-1, 1, 1],
];

/// Corners grouped by the lines of direction `d` through them: corners that
/// differ by `±d` share a group. Groups are ordered by their smallest corner.
pub fn direction_groups(d: Site) -> Vec<Vec<usize>> {
    let neg = [-d[0], -d[1], -d[2]];
    let mut seen = [false; 8];
    let mut groups = Vec::new();
    for a in 0..8 {
        if seen[a] {
            continue;
        }
        let mut g = alloc::vec![a];
        seen[a] = true;
        for b in (a + 1)..8 {
            let diff = sub(CORNERS[b], CORNERS[a]);
            if !seen[b] && (diff == d || diff == neg) {
                g.push(b);
                seen[b] = true;
            }
        }
        groups.push(g);
    }
    groups
}

/// All pairs `(a, b)` of corners grouped by the offset `pos(a) - pos(b)`.
pub fn offset_pairs() -> Vec<(Site, Vec<(usize, usize)>)> {
    let mut out: Vec<(Site, Vec<(usize, usize)>)> = Vec::new();
    for a in 0..8 {
        for b in 0..8 {
            let t = sub(CORNERS[a], CORNERS[b]);
            match out.iter_mut().find(|(s, _)| *s == t) {
                Some((_, v)) => v.push((a, b)),
                None => out.push((t, alloc::vec![(a, b)])),
            }
        }
    }
    out.sort_by_key(|(t, _)| *t);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opposite_corners_are_body_diagonal() {
        for i in 0..8 {
            let d = sub(CORNERS[i], CORNERS[opposite(i)]);
            assert!(d.iter().all(|c| c.abs() == 1));
        }
    }

    #[test]
    fn symmetries_form_a_group_of_48() {
        let syms = symmetries();
        assert_eq!(syms.len(), 48);
        let mut sorted = syms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 48);
        for a in &syms {
            for b in &syms {
                let comp: [usize; 8] = core::array::from_fn(|i| a[b[i]]);
                assert!(syms.contains(&comp));
            }
        }
    }

    #[test]
    fn group_shapes() {
        for d in DIRECTIONS {
            let g = direction_groups(d);
            let pairs = g.iter().filter(|x| x.len() == 2).count();
            let nonzero = d.iter().filter(|c| **c != 0).count();
            let expected = match nonzero {
                1 => (4, 4),
                2 => (6, 2),
                _ => (7, 1),
            };
            assert_eq!((g.len(), pairs), expected, "direction {d:?}");
        }
    }

    #[test]
    fn y_axis_pairs() {
        let g = direction_groups([0, 1, 0]);
        assert_eq!(g, alloc::vec![alloc::vec![0, 1], alloc::vec![2, 3], alloc::vec![4, 5], alloc::vec![6, 7]]);
    }

    #[test]
    fn twenty_seven_offsets() {
        assert_eq!(offset_pairs().len(), 27);
    }
}
