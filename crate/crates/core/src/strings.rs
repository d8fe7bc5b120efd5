//! Logical string segments on the infinite lattice.
//!
//! A segment is an operator together with two congruent `w×w×w` anchor cubes;
//! every generator placement acting trivially on both anchors must commute
//! with it. This module decides segment membership and connectivity, deforms
//! segments by generator products, scans flat segments for disconnectability
//! and analyses the one-dimensional constraint sequences that bound them.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{commutes_with_generator, CubicCode};
use crate::cube::CORNERS;
use crate::error::StringsError;
use crate::f2::{kernel, solve, BinaryMatrix, BinaryVector, RowSpace};
use crate::pauli::{PauliOperator, Site, SiteOp};

/// A generator type and its reference point.
pub type Placement = (usize, Site);

fn add(a: Site, b: Site) -> Site {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: Site, b: Site) -> Site {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Axis-aligned box of sites `lo <= s < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cuboid {
    pub lo: Site,
    pub hi: Site,
}

impl Cuboid {
    pub fn new(lo: Site, hi: Site) -> Self {
        Self { lo, hi }
    }

    /// The cube with minimum corner `corner` and side `w`.
    pub fn cube(corner: Site, w: usize) -> Self {
        let w = w as i64;
        Self { lo: corner, hi: add(corner, [w, w, w]) }
    }

    pub fn empty() -> Self {
        Self { lo: [0; 3], hi: [0; 3] }
    }

    pub fn is_empty(&self) -> bool {
        (0..3).any(|k| self.hi[k] <= self.lo[k])
    }

    pub fn contains(&self, s: &Site) -> bool {
        (0..3).all(|k| self.lo[k] <= s[k] && s[k] < self.hi[k])
    }

    pub fn contains_box(&self, other: &Cuboid) -> bool {
        other.is_empty() || (0..3).all(|k| self.lo[k] <= other.lo[k] && other.hi[k] <= self.hi[k])
    }

    /// Smallest box containing both.
    #[must_use]
    pub fn hull(&self, other: &Cuboid) -> Cuboid {
        if self.is_empty() {
            return *other;
        }
        if other.is_empty() {
            return *self;
        }
        Cuboid {
            lo: core::array::from_fn(|k| self.lo[k].min(other.lo[k])),
            hi: core::array::from_fn(|k| self.hi[k].max(other.hi[k])),
        }
    }

    #[must_use]
    pub fn grow(&self, margin: i64) -> Cuboid {
        Cuboid { lo: sub(self.lo, [margin; 3]), hi: add(self.hi, [margin; 3]) }
    }

    pub fn intersects(&self, other: &Cuboid) -> bool {
        !self.is_empty() && !other.is_empty() && (0..3).all(|k| self.lo[k] < other.hi[k] && other.lo[k] < self.hi[k])
    }

    pub fn volume(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (0..3).map(|k| (self.hi[k] - self.lo[k]) as usize).product()
        }
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        let c = *self;
        let empty = c.is_empty();
        (c.lo[0]..c.hi[0])
            .flat_map(move |x| (c.lo[1]..c.hi[1]).flat_map(move |y| (c.lo[2]..c.hi[2]).map(move |z| [x, y, z])))
            .filter(move |_| !empty)
    }

    /// Index of `s` within [`Cuboid::sites`] order.
    pub fn index(&self, s: &Site) -> usize {
        let d = sub(*s, self.lo);
        let ny = (self.hi[1] - self.lo[1]) as usize;
        let nz = (self.hi[2] - self.lo[2]) as usize;
        ((d[0] as usize) * ny + d[1] as usize) * nz + d[2] as usize
    }

    /// Bounding box of an operator's support.
    pub fn of_support(o: &PauliOperator) -> Cuboid {
        match o.bounding_box() {
            Some((lo, hi)) => Cuboid { lo, hi: add(hi, [1, 1, 1]) },
            None => Cuboid::empty(),
        }
    }
}

/// A finite operator with two anchor cubes given by their minimum corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub op: PauliOperator,
    pub w: usize,
    pub anchors: [Site; 2],
}

impl Segment {
    pub fn new(op: PauliOperator, w: usize, first: Site, second: Site) -> Self {
        Self { op, w, anchors: [first, second] }
    }

    pub fn anchor(&self, i: usize) -> Cuboid {
        Cuboid::cube(self.anchors[i], self.w)
    }

    /// Position of the first anchor relative to the second.
    pub fn direction(&self) -> Site {
        sub(self.anchors[1], self.anchors[0])
    }

    /// l1-length of the direction.
    pub fn length(&self) -> usize {
        self.direction().iter().map(|c| c.unsigned_abs() as usize).sum()
    }

    pub fn is_flat(&self) -> bool {
        self.direction().iter().filter(|c| **c != 0).count() <= 1
    }

    pub fn anchors_overlap(&self) -> bool {
        self.anchor(0).intersects(&self.anchor(1))
    }

    pub fn in_anchor(&self, s: &Site) -> bool {
        self.anchor(0).contains(s) || self.anchor(1).contains(s)
    }

    /// Smallest box containing both anchors.
    pub fn anchor_hull(&self) -> Cuboid {
        self.anchor(0).hull(&self.anchor(1))
    }
}

/// Placements of any generator type with a nontrivial corner on some site of `sites`.
fn placements_touching<'a>(code: &'a CubicCode, sites: impl Iterator<Item = Site> + 'a) -> BTreeSet<Placement> {
    let mut out = BTreeSet::new();
    for s in sites {
        for (t, g) in code.generators.iter().enumerate() {
            for (pos, op) in CORNERS.iter().zip(&g.corners) {
                if !op.is_identity() {
                    out.insert((t, sub(s, *pos)));
                }
            }
        }
    }
    out
}

fn placement_sites<'a>(code: &'a CubicCode, p: &Placement) -> impl Iterator<Item = (Site, SiteOp)> + 'a {
    let (t, r) = *p;
    CORNERS
        .iter()
        .zip(&code.generators[t].corners)
        .filter(|(_, op)| !op.is_identity())
        .map(move |(pos, op)| (add(r, *pos), *op))
}

/// Product of the listed placements, phase ignored.
pub fn placement_product(code: &CubicCode, placements: &[Placement]) -> PauliOperator {
    let mut o = PauliOperator::identity(code.m());
    for p in placements {
        for (s, op) in placement_sites(code, p) {
            o.mul_site(s, op);
        }
    }
    o
}

/// Whether every placement acting trivially on both anchors commutes with the operator.
pub fn is_segment(seg: &Segment, code: &CubicCode) -> bool {
    placements_touching(code, seg.op.sites().copied()).into_iter().all(|p| {
        let on_anchor = placement_sites(code, &p).any(|(s, _)| seg.in_anchor(&s));
        on_anchor || !commutes_with_generator(&seg.op, &code.generators[p.0], p.1)
    })
}

/// Whether some path through the support joins the two anchors. Two sites
/// are adjacent when a single generator placement covers both.
pub fn is_connected(seg: &Segment, code: &CubicCode) -> bool {
    let offsets = code.adjacency_offsets();
    let (a0, a1) = (seg.anchor(0), seg.anchor(1));
    let near = |s: &Site, b: &Cuboid| b.contains(s) || offsets.iter().any(|d| b.contains(&add(*s, *d)));
    if a0.intersects(&a1) || a0.sites().any(|s| near(&s, &a1)) {
        return true;
    }
    let support: BTreeSet<Site> = seg.op.sites().copied().collect();
    let mut seen: BTreeSet<Site> = support.iter().copied().filter(|s| near(s, &a0)).collect();
    let mut stack: Vec<Site> = seen.iter().copied().collect();
    while let Some(s) = stack.pop() {
        if near(&s, &a1) {
            return true;
        }
        for d in &offsets {
            let t = add(s, *d);
            if support.contains(&t) && seen.insert(t) {
                stack.push(t);
            }
        }
    }
    false
}

/// One of the twelve cube edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeInfo {
    pub corners: (usize, usize),
    pub axis: usize,
    /// Whether the site at one end can be erased by generators along this edge.
    pub good: bool,
}

impl EdgeInfo {
    /// Whether the edge lies on the face `pos[axis] == side`.
    pub fn on_face(&self, axis: usize, side: i64) -> bool {
        CORNERS[self.corners.0][axis] == side && CORNERS[self.corners.1][axis] == side
    }
}

fn rank_of_ops(ops: &[u32]) -> usize {
    crate::f2::rank_of_words(&ops.iter().map(|&o| u64::from(o)).collect::<Vec<_>>())
}

/// Good-for-erasing flags of all 12 cube edges.
///
/// For CSS codes an edge is good when the Z-type generator's corner operators
/// at its ends are independent. Otherwise all generator types' corner
/// operators at both ends must span the single-site Pauli space.
pub fn good_edges(code: &CubicCode) -> Vec<EdgeInfo> {
    let m = code.m();
    let mut out = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            let d = sub(CORNERS[b], CORNERS[a]);
            if d.iter().map(|c| c.abs()).sum::<i64>() != 1 {
                continue;
            }
            let axis = (0..3).find(|&k| d[k] != 0).expect("unit step");
            let good = if code.css {
                let g = &code.generators[0];
                rank_of_ops(&[u32::from(g.corners[a].z()), u32::from(g.corners[b].z())]) == m
            } else {
                let ops: Vec<u32> =
                    code.generators.iter().flat_map(|g| [g.corners[a].vector_bits(), g.corners[b].vector_bits()]).collect();
                rank_of_ops(&ops) == 2 * m
            };
            out.push(EdgeInfo { corners: (a, b), axis, good });
        }
    }
    out
}

/// Result of a deformation: the new operator and the placements multiplied in.
#[derive(Clone, Debug)]
pub struct Deformed {
    pub operator: PauliOperator,
    pub placements: Vec<Placement>,
}

/// Subsets of generator types whose corner `c` operators multiply to `target`.
fn erase_subset(code: &CubicCode, c: usize, target: SiteOp) -> Option<Vec<usize>> {
    let n = code.generators.len();
    (0u32..1 << n).find_map(|mask| {
        let prod = (0..n)
            .filter(|t| (mask >> t) & 1 == 1)
            .fold(SiteOp::identity(code.m()), |acc, t| acc.mul(code.generators[t].corners[c]));
        (prod.vector_bits() == target.vector_bits()).then(|| (0..n).filter(|t| (mask >> t) & 1 == 1).collect())
    })
}

/// Tries to clear the face `s[axis] == value` by erasing its sites in
/// decreasing order of `(su·s[u], sv·s[v])`, each time multiplying generator
/// cubes that stay inside `region`.
fn erase_face(
    o: &PauliOperator,
    code: &CubicCode,
    region: &Cuboid,
    axis: usize,
    outward: i64,
    su: i64,
    sv: i64,
) -> Result<Deformed, Site> {
    let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
    let value = if outward > 0 { region.hi[axis] - 1 } else { region.lo[axis] };
    let key = |s: &Site| (core::cmp::Reverse(su * s[u]), core::cmp::Reverse(sv * s[v]));
    // corner of the cube at the erased site: extreme in the outward, +su, +sv directions
    let mut rel = [0i64; 3];
    rel[axis] = i64::from(outward > 0);
    rel[u] = i64::from(su > 0);
    rel[v] = i64::from(sv > 0);
    let c = CORNERS.iter().position(|p| *p == rel).expect("cube corner");
    let mut cur = o.clone();
    let mut placements = Vec::new();
    loop {
        let mut face: Vec<Site> = cur.sites().copied().filter(|s| s[axis] == value).collect();
        if face.is_empty() {
            return Ok(Deformed { operator: cur, placements });
        }
        face.sort_by_key(key);
        let s = face[0];
        let reference = sub(s, rel);
        let inside = CORNERS.iter().all(|p| region.contains(&add(reference, *p)));
        let types = if inside { erase_subset(code, c, cur.get(&s)) } else { None };
        let Some(types) = types else { return Err(s) };
        for t in types {
            let p = (t, reference);
            for (site, op) in placement_sites(code, &p) {
                cur.mul_site(site, op);
            }
            placements.push(p);
        }
    }
}

/// Greedy corner erasing: multiplies generators inside the hull of the
/// support and `target` until the support lies in `target`.
pub fn shrink_to_box(o: &PauliOperator, target: &Cuboid, code: &CubicCode) -> Result<Deformed, StringsError> {
    let mut cur = o.clone();
    let mut placements = Vec::new();
    loop {
        let hull = Cuboid::of_support(&cur);
        if target.contains_box(&hull) {
            return Ok(Deformed { operator: cur, placements });
        }
        let region = hull.hull(target);
        let mut stuck = None;
        let mut progressed = false;
        'faces: for axis in 0..3 {
            for outward in [1i64, -1] {
                let sticks_out = if target.is_empty() {
                    true
                } else if outward > 0 {
                    hull.hi[axis] > target.hi[axis]
                } else {
                    hull.lo[axis] < target.lo[axis]
                };
                if !sticks_out {
                    continue;
                }
                for (su, sv) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    match erase_face(&cur, code, &region, axis, outward, su, sv) {
                        Ok(d) => {
                            cur = d.operator;
                            placements.extend(d.placements);
                            progressed = true;
                            break 'faces;
                        }
                        Err(s) => stuck = Some(s),
                    }
                }
            }
        }
        if !progressed {
            return Err(StringsError::Stuck(stuck.unwrap_or([0; 3])));
        }
    }
}

/// Columns `(site index in region) * 2m + vector bit` for operators inside a region.
fn op_vector(o: &PauliOperator, region: &Cuboid, m: usize) -> BinaryVector {
    let mut v = BinaryVector::zeros(region.volume() * 2 * m);
    for (s, op) in o.iter() {
        let base = region.index(s) * 2 * m;
        for i in 0..2 * m {
            if (op.vector_bits() >> i) & 1 == 1 {
                v.flip(base + i);
            }
        }
    }
    v
}

/// All placements whose cube lies inside `region`.
fn placements_inside(code: &CubicCode, region: &Cuboid) -> Vec<Placement> {
    let inner = Cuboid { lo: region.lo, hi: sub(region.hi, [1, 1, 1]) };
    (0..code.generators.len()).flat_map(|t| inner.sites().map(move |p| (t, p))).collect()
}

/// Placements inside `region` whose product equals `o` up to phase; an
/// open-lattice membership solve.
pub fn generator_decomposition(o: &PauliOperator, region: &Cuboid, code: &CubicCode) -> Option<Vec<Placement>> {
    if !o.sites().all(|s| region.contains(s)) {
        return None;
    }
    let m = code.m();
    let cands = placements_inside(code, region);
    let n_rows = region.volume() * 2 * m;
    let mut cols = Vec::with_capacity(cands.len());
    for p in &cands {
        cols.push(op_vector(&placement_product(code, core::slice::from_ref(p)), region, m));
    }
    let a = BinaryMatrix::from_rows(n_rows, &cols).transpose();
    let x = solve(&a, &op_vector(o, region, m))?;
    Some(x.iter_ones().map(|i| cands[i]).collect())
}

/// Result of [`reduce_to_flat`].
#[derive(Clone, Debug)]
pub struct FlatReduction {
    pub operator: PauliOperator,
    pub placements: Vec<Placement>,
    /// Axis order of the three legs.
    pub order: [usize; 3],
    /// Layers added around each leg; pieces have width `w + 2·slack`.
    pub slack: i64,
    /// Flat pieces with their intermediate anchors; legs of length 0 are omitted.
    pub pieces: Vec<Segment>,
}

/// Deforms a segment into a union of at most three axis-parallel flat
/// segments. Solves for a product of generators inside the hull of the
/// support and anchors that confines the operator to three tubes joining
/// the anchors leg by leg, trying all six leg orders.
pub fn reduce_to_flat(seg: &Segment, code: &CubicCode) -> Result<FlatReduction, StringsError> {
    let m = code.m();
    // one site of slack lets generators straddle the hull's faces
    let region = Cuboid::of_support(&seg.op).hull(&seg.anchor_hull()).grow(1);
    let cands = placements_inside(code, &region);
    let cand_vecs: Vec<BinaryVector> =
        cands.iter().map(|p| op_vector(&placement_product(code, core::slice::from_ref(p)), &region, m)).collect();
    let target = op_vector(&seg.op, &region, m);
    for slack in 0..=MAX_FLAT_SLACK {
        for order in LEG_ORDERS {
            if let Some(r) = flat_in_order(seg, code, order, slack, &region, &cands, &cand_vecs, &target) {
                return Ok(r);
            }
        }
    }
    Err(StringsError::NoFlatForm)
}

/// How far legs may widen beyond the anchors. Width-`w` tubes suffice for
/// Code 1 with all-positive directions; mixed signs, and Codes 3 and 4,
/// need one extra layer around each leg.
pub const MAX_FLAT_SLACK: i64 = 1;

/// The six orders in which the legs of a flat decomposition can be traversed.
pub const LEG_ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// [`reduce_to_flat`] restricted to one leg order.
pub fn reduce_to_flat_in_order(seg: &Segment, code: &CubicCode, order: [usize; 3], slack: i64) -> Option<FlatReduction> {
    let m = code.m();
    let region = Cuboid::of_support(&seg.op).hull(&seg.anchor_hull()).grow(1);
    let cands = placements_inside(code, &region);
    let cand_vecs: Vec<BinaryVector> =
        cands.iter().map(|p| op_vector(&placement_product(code, core::slice::from_ref(p)), &region, m)).collect();
    flat_in_order(seg, code, order, slack, &region, &cands, &cand_vecs, &op_vector(&seg.op, &region, m))
}

fn flat_in_order(
    seg: &Segment,
    code: &CubicCode,
    order: [usize; 3],
    slack: i64,
    region: &Cuboid,
    cands: &[Placement],
    cand_vecs: &[BinaryVector],
    target: &BinaryVector,
) -> Option<FlatReduction> {
    let m = code.m();
    let d = seg.direction();
    {
        let mut corners = vec![seg.anchors[0]];
        for &k in &order {
            let mut next = *corners.last().expect("nonempty");
            next[k] += d[k];
            corners.push(next);
        }
        let tubes: Vec<Cuboid> = corners
            .windows(2)
            .map(|c| Cuboid::cube(c[0], seg.w).hull(&Cuboid::cube(c[1], seg.w)).grow(slack))
            .collect();
        let forbidden: Vec<usize> = region
            .sites()
            .enumerate()
            .filter(|(_, s)| !tubes.iter().any(|t| t.contains(s)))
            .flat_map(|(i, _)| (0..2 * m).map(move |b| i * 2 * m + b))
            .collect();
        let a = BinaryMatrix::from_fn(forbidden.len(), cands.len(), |r, c| cand_vecs[c].get(forbidden[r]));
        let rhs = BinaryVector::from_bits(&forbidden.iter().map(|&i| target.get(i)).collect::<Vec<_>>());
        let x = solve(&a, &rhs)?;
        let placements: Vec<Placement> = x.iter_ones().map(|i| cands[i]).collect();
        let operator = seg.op.multiply(&placement_product(code, &placements));
        let mut pieces = Vec::new();
        let mut taken: BTreeSet<Site> = BTreeSet::new();
        for (i, tube) in tubes.iter().enumerate() {
            if corners[i] == corners[i + 1] {
                continue;
            }
            let part = operator.restrict(|s| tube.contains(s) && !taken.contains(s));
            taken.extend(part.sites().copied());
            let shift = [slack; 3];
            pieces.push(Segment::new(part, seg.w + 2 * slack as usize, sub(corners[i], shift), sub(corners[i + 1], shift)));
        }
        Some(FlatReduction { operator, placements, order, slack, pieces })
    }
}

/// An equivalent disconnected operator and the generators used.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub operator: PauliOperator,
    pub placements: Vec<Placement>,
    pub axis: usize,
    /// The plane `s[axis] == slab` on which the operator vanishes.
    pub slab: i64,
}

/// Margin around the support used by slab-clearing solves.
pub const SLAB_MARGIN: i64 = 2;

/// Solves for generators touching the plane `s[axis] == slab` whose product
/// agrees with `o` on that plane, inside a window around `window`.
pub fn clear_slab(o: &PauliOperator, code: &CubicCode, axis: usize, slab: i64, window: &Cuboid) -> Option<Vec<Placement>> {
    let m = code.m();
    let mut plane = window.grow(SLAB_MARGIN);
    plane.lo[axis] = slab;
    plane.hi[axis] = slab + 1;
    if o.sites().any(|s| s[axis] == slab && !plane.contains(s)) {
        return None;
    }
    let mut cands = Vec::new();
    for t in 0..code.generators.len() {
        for dz in [-1i64, 0] {
            let mut refs = Cuboid { lo: plane.lo, hi: sub(plane.hi, [1, 1, 1]) };
            refs.lo[axis] = slab + dz;
            refs.hi[axis] = slab + dz + 1;
            cands.extend(refs.sites().map(|p| (t, p)));
        }
    }
    let restrict = |x: &PauliOperator| op_vector(&x.restrict(|s| s[axis] == slab), &plane, m);
    let cols: Vec<BinaryVector> =
        cands.iter().map(|p| restrict(&placement_product(code, core::slice::from_ref(p)))).collect();
    let a = BinaryMatrix::from_rows(plane.volume() * 2 * m, &cols).transpose();
    let x = solve(&a, &restrict(o))?;
    Some(x.iter_ones().map(|i| cands[i]).collect())
}

/// Looks for a plane between the anchors that a generator product can clear,
/// giving an equivalent segment whose support no longer joins the anchors.
/// Sound, not complete: `None` means no single-plane cut was found.
pub fn disconnect_certificate(seg: &Segment, code: &CubicCode) -> Option<Certificate> {
    if seg.anchors_overlap() {
        return None;
    }
    let window = Cuboid::of_support(&seg.op).hull(&seg.anchor_hull());
    let d = seg.direction();
    for axis in 0..3 {
        let (a0, a1) = (seg.anchors[0][axis], seg.anchors[1][axis]);
        let w = seg.w as i64;
        let (lo, hi) = if a0 <= a1 { (a0 + w, a1) } else { (a1 + w, a0) };
        if d[axis] == 0 || lo >= hi {
            continue;
        }
        // middle planes first: the anchors' influence is weakest there
        let mid = (lo + hi - 1) / 2;
        let mut slabs: Vec<i64> = (lo..hi).collect();
        slabs.sort_by_key(|s| (s - mid).abs());
        for slab in slabs {
            let Some(placements) = clear_slab(&seg.op, code, axis, slab, &window) else { continue };
            let operator = seg.op.multiply(&placement_product(code, &placements));
            let cut = Segment::new(operator.clone(), seg.w, seg.anchors[0], seg.anchors[1]);
            if !is_connected(&cut, code) {
                return Some(Certificate { operator, placements, axis, slab });
            }
        }
    }
    None
}

/// Re-derives a certificate's claims without trusting how it was built: the
/// quotient is a generator product found by an independent solve, the result
/// is still a segment, and its support does not join the anchors.
pub fn verify_certificate(seg: &Segment, cert: &Certificate, code: &CubicCode) -> bool {
    let quotient = seg.op.multiply(&cert.operator);
    let region = Cuboid::of_support(&quotient).grow(1);
    let Some(found) = generator_decomposition(&quotient, &region, code) else { return false };
    let rebuilt = placement_product(code, &found);
    let cut = Segment::new(cert.operator.clone(), seg.w, seg.anchors[0], seg.anchors[1]);
    rebuilt.abelianized() == quotient.abelianized() && is_segment(&cut, code) && !is_connected(&cut, code)
}

/// Segments along `axis` with anchors at `0` and `length·e_axis`, restricted
/// to the tube joining them: a basis of the space of such operators.
pub fn flat_segment_basis(code: &CubicCode, w: usize, axis: usize, length: usize) -> Vec<PauliOperator> {
    let mut second = [0i64; 3];
    second[axis] = length as i64;
    let probe = Segment::new(PauliOperator::identity(code.m()), w, [0; 3], second);
    segment_basis(code, w, [0; 3], second, &probe.anchor_hull())
}

/// Basis of the operators supported in `region` that are segments for the
/// given anchors.
pub fn segment_basis(code: &CubicCode, w: usize, first: Site, second: Site, region: &Cuboid) -> Vec<PauliOperator> {
    let m = code.m();
    let probe = Segment::new(PauliOperator::identity(m), w, first, second);
    let mut rows: Vec<BinaryVector> = Vec::new();
    for p in placements_touching(code, region.sites()) {
        if placement_sites(code, &p).any(|(s, _)| probe.in_anchor(&s)) {
            continue;
        }
        let mut row = BinaryVector::zeros(region.volume() * 2 * m);
        for (s, op) in placement_sites(code, &p) {
            if region.contains(&s) {
                let base = region.index(&s) * 2 * m;
                let dual = SiteOp::new(m, op.z(), op.x()).vector_bits();
                for i in 0..2 * m {
                    if (dual >> i) & 1 == 1 {
                        row.flip(base + i);
                    }
                }
            }
        }
        rows.push(row);
    }
    let a = BinaryMatrix::from_rows(region.volume() * 2 * m, &rows);
    let sites: Vec<Site> = region.sites().collect();
    kernel(&a)
        .into_iter()
        .map(|v| {
            let mut o = PauliOperator::identity(m);
            for (i, s) in sites.iter().enumerate() {
                let bits = (0..2 * m).fold(0u32, |acc, b| acc | (u32::from(v.get(i * 2 * m + b)) << b));
                if bits != 0 {
                    o.mul_site(*s, SiteOp::from_vector_bits(m, bits));
                }
            }
            o
        })
        .collect()
}

/// Transfer description of flat segments of width `w` along one axis.
///
/// A slab is a `w×w` cross-section of the tube with `2m` bits per site.
/// Generators inside the tube between two middle slabs give the equations
/// `A s + B t = 0` for consecutive slab contents `s`, `t`. Admissible slab
/// contents are tracked by the linear constraints cutting them out, since
/// each step removes only a few dimensions.
#[derive(Clone, Debug)]
pub struct SlabTransfer {
    pub w: usize,
    pub axis: usize,
    pub bits: usize,
    a: BinaryMatrix,
    b: BinaryMatrix,
    /// Rows `[A_i | e_i]` and `[B_i | e_i]` in echelon form.
    a_solver: RowSpace,
    b_solver: RowSpace,
    gauge_dim: usize,
    /// Constraints whose common kernel is the clearable slab contents.
    gauge_dual: Vec<BinaryVector>,
}

fn local(axis: usize, p: Site) -> (i64, i64, i64) {
    (p[axis], p[(axis + 1) % 3], p[(axis + 2) % 3])
}

fn row_solver(m: &BinaryMatrix) -> RowSpace {
    let (n, r) = (m.n_cols(), m.n_rows());
    let mut space = RowSpace::new(n + r);
    for i in 0..r {
        let mut v = BinaryVector::zeros(n + r);
        for j in m.row_vector(i).iter_ones() {
            v.flip(j);
        }
        v.flip(n + i);
        space.insert(&v);
    }
    space
}

impl SlabTransfer {
    pub fn new(code: &CubicCode, w: usize, axis: usize, margin: i64) -> Self {
        let m = code.m();
        let wi = w as i64;
        let bits = w * w * 2 * m;
        let bit = |u: i64, v: i64, i: usize| ((u * wi + v) as usize) * 2 * m + i;
        let mut a = BinaryMatrix::with_cols(bits);
        let mut b = BinaryMatrix::with_cols(bits);
        for g in &code.generators {
            for pu in -1..wi {
                for pv in -1..wi {
                    let (mut ra, mut rb) = (Vec::new(), Vec::new());
                    for (pos, op) in CORNERS.iter().zip(&g.corners) {
                        let (da, du, dv) = local(axis, *pos);
                        let (u, v) = (pu + du, pv + dv);
                        if !(0..wi).contains(&u) || !(0..wi).contains(&v) {
                            continue;
                        }
                        let dual = SiteOp::new(m, op.z(), op.x()).vector_bits();
                        let target = if da == 0 { &mut ra } else { &mut rb };
                        target.extend((0..2 * m).filter(|i| (dual >> i) & 1 == 1).map(|i| bit(u, v, i)));
                    }
                    if !ra.is_empty() || !rb.is_empty() {
                        a.push_sparse_row(ra);
                        b.push_sparse_row(rb);
                    }
                }
            }
        }
        // Products of generators touching slab 0 that vanish on slab 0 outside the tube.
        let lo = -1 - margin;
        let hi = wi + margin;
        let width = (hi - lo + 1) as usize;
        let out_bit = |u: i64, v: i64, i: usize| ((u - lo) as usize * width + (v - lo) as usize) * 2 * m + i;
        let mut inside: Vec<BinaryVector> = Vec::new();
        let mut outside: Vec<BinaryVector> = Vec::new();
        for g in &code.generators {
            for pa in [-1i64, 0] {
                for pu in lo..hi {
                    for pv in lo..hi {
                        let mut vin = BinaryVector::zeros(bits);
                        let mut vout = BinaryVector::zeros(width * width * 2 * m);
                        for (pos, op) in CORNERS.iter().zip(&g.corners) {
                            let (da, du, dv) = local(axis, *pos);
                            if pa + da != 0 {
                                continue;
                            }
                            let (u, v) = (pu + du, pv + dv);
                            let ob = op.vector_bits();
                            for i in (0..2 * m).filter(|i| (ob >> i) & 1 == 1) {
                                if (0..wi).contains(&u) && (0..wi).contains(&v) {
                                    vin.flip(bit(u, v, i));
                                } else {
                                    vout.flip(out_bit(u, v, i));
                                }
                            }
                        }
                        if !vin.is_zero() || !vout.is_zero() {
                            inside.push(vin);
                            outside.push(vout);
                        }
                    }
                }
            }
        }
        let out_matrix = BinaryMatrix::from_rows(width * width * 2 * m, &outside).transpose();
        let mut gauge = RowSpace::new(bits);
        for k in kernel(&out_matrix) {
            let mut v = BinaryVector::zeros(bits);
            for i in k.iter_ones() {
                v.xor_assign(&inside[i]);
            }
            gauge.insert(&v);
        }
        let gauge_dual = kernel(&BinaryMatrix::from_rows(bits, gauge.basis()));
        let (a_solver, b_solver) = (row_solver(&a), row_solver(&b));
        Self { w, axis, bits, a, b, a_solver, b_solver, gauge_dim: gauge.dim(), gauge_dual }
    }

    /// No constraints: every slab content.
    pub fn full(&self) -> RowSpace {
        RowSpace::new(self.bits)
    }

    /// Constraints on the slab next to an anchor. A generator reaching into
    /// the anchor layer still counts when it acts trivially on the anchor's
    /// cross-section, which shows up as a vanishing anchor-side row.
    pub fn next_to_anchor(&self, backward: bool) -> RowSpace {
        let (anchor_side, own) = if backward { (&self.b, &self.a) } else { (&self.a, &self.b) };
        let mut out = RowSpace::new(self.bits);
        for r in 0..own.n_rows() {
            if anchor_side.row(r).iter().all(|w| *w == 0) {
                out.insert(&own.row_vector(r));
            }
        }
        out
    }

    /// Constraints on `t` given constraints on `s` with `A s + B t = 0`.
    /// With `backward` the roles of the two slabs are exchanged.
    ///
    /// `c·t = 0` holds for every admissible `t` exactly when `c = yB` with
    /// `yA` a combination of the constraints on `s`.
    pub fn step(&self, from: &RowSpace, backward: bool) -> RowSpace {
        let (solver, other) = if backward { (&self.b_solver, &self.a) } else { (&self.a_solver, &self.b) };
        let n = self.bits;
        let r = other.n_rows();
        let mut out = RowSpace::new(n);
        let mut push = |y: &BinaryVector| {
            let mut c = BinaryVector::zeros(n);
            for i in y.iter_ones().filter(|&i| i >= n) {
                c.xor_assign(&other.row_vector(i - n));
            }
            out.insert(&c);
        };
        // y with yA = 0 are the solver rows whose leading part vanished
        for row in solver.basis() {
            if row.first_one().is_some_and(|p| p >= n) {
                push(row);
            }
        }
        // combinations of constraints lying in the row space of A; the
        // reduced vectors are [c + y_c A | y_c], zero at every solver pivot
        let mut combos = RowSpace::new(n + r);
        for c in from.basis() {
            let mut v = BinaryVector::zeros(n + r);
            for j in c.iter_ones() {
                v.flip(j);
            }
            combos.insert(&solver.reduce(&v));
        }
        for row in combos.basis() {
            if row.first_one().is_some_and(|p| p >= n) {
                push(row);
            }
        }
        out
    }

    /// Whether every slab content satisfying both constraint sets can be cleared.
    pub fn cleared(&self, f: &RowSpace, g: &RowSpace) -> bool {
        let mut joint = f.clone();
        for c in g.basis() {
            joint.insert(c);
        }
        self.gauge_dual.iter().all(|d| joint.contains(d))
    }

    pub fn gauge_dim(&self) -> usize {
        self.gauge_dim
    }
}

/// Basis of `span(f) ∩ span(g)`.
pub fn intersection(f: &[BinaryVector], g: &[BinaryVector], len: usize) -> Vec<BinaryVector> {
    let cols: Vec<BinaryVector> = f.iter().chain(g).cloned().collect();
    if cols.is_empty() {
        return Vec::new();
    }
    let m = BinaryMatrix::from_rows(len, &cols).transpose();
    let mut space = RowSpace::new(len);
    for k in kernel(&m) {
        let mut v = BinaryVector::zeros(len);
        for i in k.iter_ones().filter(|&i| i < f.len()) {
            v.xor_assign(&f[i]);
        }
        space.insert(&v);
    }
    space.basis().to_vec()
}

/// Disconnectability of flat segments by length along one axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiScan {
    pub w: usize,
    pub axis: usize,
    /// `(length, disconnectable)` for `w < length <= l_max`.
    pub rows: Vec<(usize, bool)>,
    pub forward_dims: Vec<usize>,
    pub backward_dims: Vec<usize>,
    /// Every length strictly above this value is disconnectable, when the
    /// transfer spaces stabilised within the scan.
    pub certified_above: Option<usize>,
}

impl PhiScan {
    /// Longest scanned length without a certificate, or `w` if every scanned length has one.
    pub fn max_nontrivial(&self) -> usize {
        self.rows.iter().filter(|(_, ok)| !ok).map(|(l, _)| *l).max().unwrap_or(self.w)
    }
}

/// Scans flat segments of width `w` along `axis` for lengths up to `l_max`.
///
/// The middle slabs of a segment of length `l` are the `l - w` cross-sections
/// strictly between the anchors. A length is disconnectable when some middle
/// slab has all its admissible contents clearable by generators touching it.
/// The admissible contents at a slab `d1` steps from one anchor and `d2`
/// from the other are the intersection of the forward and backward transfer
/// spaces; both shrink monotonically, so once they stop changing the verdict
/// holds for every longer length.
pub fn phi_scan(code: &CubicCode, w: usize, axis: usize, l_max: usize) -> Result<PhiScan, StringsError> {
    if w < 1 {
        return Err(StringsError::Width(1));
    }
    let t = SlabTransfer::new(code, w, axis, SLAB_MARGIN);
    let steps = l_max.saturating_sub(w + 1);
    let mut fwd = vec![t.next_to_anchor(false)];
    let mut bwd = vec![t.next_to_anchor(true)];
    let grow = |seq: &mut Vec<RowSpace>, backward: bool, upto: usize| {
        while seq.len() <= upto {
            let last = seq.last().expect("nonempty");
            let next = t.step(last, backward);
            if next.dim() == last.dim() {
                break;
            }
            seq.push(next);
        }
    };
    grow(&mut fwd, false, steps);
    grow(&mut bwd, true, steps);
    let stable_f = fwd.len() - 1;
    let stable_b = bwd.len() - 1;
    // Clearability only improves as either depth grows, so one staircase
    // walk gives the least clearable backward depth for each forward depth.
    let check = |d1: usize, d2: usize| t.cleared(&fwd[d1], &bwd[d2]);
    let mut least_b: Vec<Option<usize>> = vec![None; stable_f + 1];
    let mut d2 = stable_b;
    for (d1, slot) in least_b.iter_mut().enumerate() {
        if !check(d1, d2) {
            continue;
        }
        while d2 > 0 && check(d1, d2 - 1) {
            d2 -= 1;
        }
        *slot = Some(d2);
    }
    let cleared_at = |d1: usize, d2: usize| least_b[d1.min(stable_f)].is_some_and(|b| b <= d2.min(stable_b));
    let mut rows = Vec::new();
    for l in w + 1..=l_max {
        let mid = l - w;
        let ok = (0..mid).any(|j| cleared_at(j, mid - 1 - j));
        rows.push((l, ok));
    }
    let converged = stable_f < steps.max(1) || stable_b < steps.max(1);
    let certified_above = (converged && cleared_at(stable_f, stable_b)).then(|| w + stable_f + stable_b);
    let forward_dims = fwd.iter().map(|c| t.bits - c.dim()).collect();
    let backward_dims = bwd.iter().map(|c| t.bits - c.dim()).collect();
    Ok(PhiScan { w, axis, rows, forward_dims, backward_dims, certified_above })
}

/// Two-site conditions on consecutive sites of a line: `(left, right)` must
/// commute with every listed pair `(c1, c2)` in the sense
/// `λ(c1, left) + λ(c2, right) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeConstraint {
    pub m: usize,
    pub pairs: Vec<(SiteOp, SiteOp)>,
}

impl EdgeConstraint {
    /// Comma-separated pairs such as `IZ-ZI, II-IZ`.
    pub fn parse(text: &str) -> Result<Self, crate::error::PauliError> {
        let mut pairs = Vec::new();
        for part in text.split(',') {
            let (a, b) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| crate::error::PauliError::parse(0, "expected two operators joined by '-'"))?;
            pairs.push((SiteOp::parse(a.trim())?, SiteOp::parse(b.trim())?));
        }
        let m = pairs.first().map_or(1, |p| p.0.m());
        Ok(Self { m, pairs })
    }

    /// Site operators the sequence ranges over: X-type against Z-type
    /// conditions, Z-type against X-type ones, all Paulis otherwise.
    pub fn alphabet(&self) -> Vec<SiteOp> {
        let ops = self.pairs.iter().flat_map(|(a, b)| [*a, *b]);
        let all: Vec<SiteOp> = SiteOp::all(self.m).collect();
        if ops.clone().all(|o| o.is_z_type()) {
            all.into_iter().filter(|o| o.is_x_type()).collect()
        } else if ops.clone().all(|o| o.is_x_type()) {
            all.into_iter().filter(|o| o.is_z_type()).collect()
        } else {
            all
        }
    }

    pub fn solutions(&self) -> Vec<(SiteOp, SiteOp)> {
        let alpha = self.alphabet();
        let mut out = Vec::new();
        for a in &alpha {
            for b in &alpha {
                if self.pairs.iter().all(|(c1, c2)| c1.lambda(*a) == c2.lambda(*b)) {
                    out.push((*a, *b));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceClass {
    /// Only the identity sequence.
    Trivial,
    /// Long sequences are the identity except for at most `head` sites at
    /// the start and `tail` sites at the end.
    Confusing { head: usize, tail: usize },
    /// A single nontrivial cycle.
    Periodic { period: usize, cycle: Vec<SiteOp> },
    /// Several nontrivial cycles or branching inside one.
    Irregular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceAnalysis {
    pub class: SequenceClass,
    pub solutions: Vec<(SiteOp, SiteOp)>,
}

pub fn edge_constraint_automaton(ec: &EdgeConstraint) -> SequenceAnalysis {
    analyze_follow_relation(&ec.alphabet(), &ec.solutions())
}

/// Classifies the sequences in which each consecutive pair is an allowed pair.
pub fn analyze_follow_relation(alphabet: &[SiteOp], allowed: &[(SiteOp, SiteOp)]) -> SequenceAnalysis {
    let n = alphabet.len();
    let idx = |o: SiteOp| alphabet.iter().position(|a| a.vector_bits() == o.vector_bits());
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in allowed {
        if let (Some(i), Some(j)) = (idx(*a), idx(*b)) {
            adj[i][j] = true;
        }
    }
    let mut reach = adj.clone();
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let solutions = allowed.to_vec();
    let id = alphabet.iter().position(|a| a.is_identity());
    let nontrivial_pairs = allowed.iter().any(|(a, b)| !a.is_identity() || !b.is_identity());
    if !nontrivial_pairs {
        return SequenceAnalysis { class: SequenceClass::Trivial, solutions };
    }
    let cyclic: Vec<usize> = (0..n).filter(|&i| reach[i][i] && Some(i) != id).collect();
    let id_in_big_cycle = id.is_some_and(|z| cyclic.iter().any(|&i| reach[i][z] && reach[z][i]));
    if cyclic.is_empty() {
        let z = id.expect("identity in alphabet");
        // longest identity-free paths, which are finite once no cycle avoids II
        let mut depth_to = vec![None::<usize>; n];
        fn longest(i: usize, adj: &[Vec<bool>], z: usize, goal: &dyn Fn(usize) -> bool, memo: &mut [Option<usize>]) -> usize {
            if let Some(d) = memo[i] {
                return d;
            }
            let mut best = if goal(i) { 1 } else { 0 };
            for j in 0..adj.len() {
                if adj[i][j] && j != z {
                    let d = longest(j, adj, z, goal, memo);
                    if d > 0 {
                        best = best.max(d + 1);
                    }
                }
            }
            memo[i] = Some(best);
            best
        }
        let into_id = |i: usize| adj[i][z];
        let head = (0..n).filter(|&i| i != z).map(|i| longest(i, &adj, z, &into_id, &mut depth_to)).max().unwrap_or(0);
        let rev: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| adj[j][i]).collect()).collect();
        let from_id = |i: usize| adj[z][i];
        let mut memo2 = vec![None; n];
        let tail = (0..n).filter(|&i| i != z).map(|i| longest(i, &rev, z, &from_id, &mut memo2)).max().unwrap_or(0);
        return SequenceAnalysis { class: SequenceClass::Confusing { head, tail }, solutions };
    }
    // one strongly connected component, a simple cycle, not through the identity
    let first = cyclic[0];
    let single_scc = cyclic.iter().all(|&i| reach[first][i] && reach[i][first]);
    let simple = cyclic.iter().all(|&i| cyclic.iter().filter(|&&j| adj[i][j]).count() == 1);
    if single_scc && simple && !id_in_big_cycle {
        let mut cycle = vec![alphabet[first]];
        let mut cur = first;
        loop {
            let next = *cyclic.iter().find(|&&j| adj[cur][j]).expect("cycle successor");
            if next == first {
                break;
            }
            cycle.push(alphabet[next]);
            cur = next;
        }
        return SequenceAnalysis { class: SequenceClass::Periodic { period: cycle.len(), cycle }, solutions };
    }
    SequenceAnalysis { class: SequenceClass::Irregular, solutions }
}

/// Smallest offset `n0` with `f(n + t) = f(n)` for all `n > n0` inside the
/// window, indices starting at 1.
pub fn quasi_period_offset<T: PartialEq>(f: &[T], t: usize) -> Option<usize> {
    if t == 0 || t >= f.len() {
        return None;
    }
    let last_bad = (1..=f.len() - t).rev().find(|&n| f[n - 1 + t] != f[n - 1]);
    Some(last_bad.unwrap_or(0))
}

pub fn is_quasi_period<T: PartialEq>(f: &[T], t: usize, n0: usize) -> bool {
    quasi_period_offset(f, t).is_some_and(|o| o <= n0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiPeriod {
    pub period: usize,
    pub offset: usize,
}

/// Smallest `t` that repeats at least twice after its offset within the
/// window, with that offset.
pub fn quasi_period_detect<T: PartialEq>(f: &[T]) -> Option<QuasiPeriod> {
    (1..f.len()).find_map(|t| {
        let n0 = quasi_period_offset(f, t)?;
        (f.len() >= n0 + 3 * t).then_some(QuasiPeriod { period: t, offset: n0 })
    })
}

/// All quasi-periods `t` observed with at least two repeats in the window.
pub fn observed_quasi_periods<T: PartialEq>(f: &[T]) -> Vec<QuasiPeriod> {
    (1..f.len())
        .filter_map(|t| {
            let n0 = quasi_period_offset(f, t)?;
            (f.len() >= n0 + 3 * t).then_some(QuasiPeriod { period: t, offset: n0 })
        })
        .collect()
}

/// 2×2 matrix over F2, rows as bit masks over the input components.
pub type Mat2 = [u8; 2];

pub fn mat2_apply(m: Mat2, v: u8) -> u8 {
    (0..2).fold(0u8, |acc, r| acc | (((m[r] & v).count_ones() as u8 & 1) << r))
}

pub fn mat2_mul(a: Mat2, b: Mat2) -> Mat2 {
    // column j of b is (b[0]>>j & 1, b[1]>>j & 1)
    core::array::from_fn(|r| {
        (0..2).fold(0u8, |acc, j| {
            let col = ((b[0] >> j) & 1) | (((b[1] >> j) & 1) << 1);
            acc | (((a[r] & col).count_ones() as u8 & 1) << j)
        })
    })
}

pub const MAT2_IDENTITY: Mat2 = [0b01, 0b10];

/// Row recursion `a_{i,j+1} = M a_{i,j} + b(previous rows at j+1 and j)`.
///
/// `b` rows are masks over four bits per previous row: bits `4r, 4r+1` hold
/// `a_{i-1-r, j+1}` and bits `4r+2, 4r+3` hold `a_{i-1-r, j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowRecursion {
    pub m: Mat2,
    pub b: [u32; 2],
}

impl RowRecursion {
    pub fn is_idempotent(&self) -> bool {
        mat2_mul(self.m, self.m) == self.m
    }

    pub fn is_involution(&self) -> bool {
        mat2_mul(self.m, self.m) == MAT2_IDENTITY
    }

    /// Next row of the same length as the previous rows, starting from `first`.
    pub fn next_row(&self, prev: &[&[u8]], first: u8) -> Vec<u8> {
        let len = prev.iter().map(|r| r.len()).min().unwrap_or(0);
        let mut out = Vec::with_capacity(len);
        if len == 0 {
            return out;
        }
        out.push(first & 3);
        for j in 0..len - 1 {
            let mut packed = 0u32;
            for (r, row) in prev.iter().enumerate() {
                packed |= (u32::from(row[j + 1]) | (u32::from(row[j]) << 2)) << (4 * r);
            }
            let inhom = (0..2).fold(0u8, |acc, k| acc | ((((self.b[k] & packed).count_ones() & 1) as u8) << k));
            out.push(mat2_apply(self.m, out[j]) ^ inhom);
        }
        out
    }
}

/// The interior recursion of the x-rectangle of a y-segment of the code with
/// generator `IZ ZZ ZI ZI ZI ZZ IZ ZI`, solved from the four-site condition
/// `P1 a_{i-1,j+1} + P2 a_{i-1,j} + P3 a_{i,j+1} + P4 a_{i,j} = 0`
/// with `P3` its own inverse.
pub fn code2_interior_recursion() -> RowRecursion {
    let p1: Mat2 = [0b10, 0b01];
    let p2: Mat2 = [0b11, 0b10];
    let p3: Mat2 = [0b01, 0b11];
    let p4: Mat2 = [0b01, 0b01];
    let m = mat2_mul(p3, p4);
    let u = mat2_mul(p3, p1);
    let v = mat2_mul(p3, p2);
    let b = core::array::from_fn(|r| u32::from(u[r]) | (u32::from(v[r]) << 2));
    RowRecursion { m, b }
}

/// The boundary-row matrix where the two rectangles meet: an involution.
pub const CODE2_BOUNDARY_MATRIX: Mat2 = [0b01, 0b11];

/// Quasi-period bound for the far edge of a width-`w` y-segment: `2^(3w-2)`.
pub fn code2_edge_quasi_period(w: usize) -> u64 {
    1u64 << (3 * w - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuboid_indexing_matches_iteration() {
        let c = Cuboid::new([-1, 2, 0], [2, 4, 3]);
        for (i, s) in c.sites().enumerate() {
            assert_eq!(c.index(&s), i);
        }
        assert_eq!(c.volume(), 18);
        assert_eq!(Cuboid::empty().sites().count(), 0);
    }

    #[test]
    fn mat2_products() {
        let m: Mat2 = [0b01, 0b00];
        assert_eq!(mat2_mul(m, m), m);
        assert_eq!(mat2_mul(CODE2_BOUNDARY_MATRIX, CODE2_BOUNDARY_MATRIX), MAT2_IDENTITY);
        assert_eq!(mat2_apply([0b11, 0b10], 0b10), 0b11);
    }

    #[test]
    fn interior_recursion_has_the_printed_matrix() {
        let r = code2_interior_recursion();
        assert_eq!(r.m, [0b01, 0b00]);
        assert!(r.is_idempotent());
    }

    #[test]
    fn quasi_period_basics() {
        let f = [1, 1, 1, 1, 1];
        assert_eq!(quasi_period_detect(&f), Some(QuasiPeriod { period: 1, offset: 0 }));
        let g = [5, 7, 1, 2, 3, 1, 2, 3, 1, 2, 3];
        assert_eq!(quasi_period_detect(&g), Some(QuasiPeriod { period: 3, offset: 2 }));
        assert!(is_quasi_period(&g, 6, 2));
        assert!(!is_quasi_period(&g, 3, 1));
    }
}
