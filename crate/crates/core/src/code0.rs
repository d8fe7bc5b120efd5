//! The non-CSS code with generator `XX ZI ZY XY ZZ II XZ ZX`: its three-fold
//! symmetry, algebraic relations, basic string operators and the gauge
//! accounting of those strings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::CubicCode;
use crate::cube::{rotation_111, CORNERS};
use crate::error::LatticeError;
use crate::f2::{rank, BinaryMatrix, BinaryVector, RowSpace};
use crate::lattice::{k_from_rank, vectorize, PeriodicLattice, StabilizerGroup};
use crate::pauli::{reduce_site, LineOperator, PauliOperator, Phase, Site, SiteOp};
use crate::strings::{analyze_follow_relation, SequenceAnalysis};

pub fn code() -> CubicCode {
    CubicCode::table(0).expect("catalog entry 0")
}

/// `(x, y, z) -> (z, x, y)`.
pub fn rotate(p: Site) -> Site {
    [p[2], p[0], p[1]]
}

/// The per-site map `?X -> ?Y -> ?Z -> ?X` on the second qubit.
pub fn cycle_second_qubit(op: SiteOp) -> SiteOp {
    let (x, z) = (op.x(), op.z());
    let (x2, z2) = ((x >> 1) & 1, (z >> 1) & 1);
    SiteOp::new(2, (x & 1) | ((x2 ^ z2) << 1), (z & 1) | (x2 << 1))
}

/// The site map as a 4×4 matrix in the basis `XI, ZI, IX, IZ`, column `j`
/// the image of basis vector `j`.
pub fn symmetry_matrix() -> [[u8; 4]; 4] {
    let basis = [SiteOp::new(2, 1, 0), SiteOp::new(2, 0, 1), SiteOp::new(2, 2, 0), SiteOp::new(2, 0, 2)];
    let coords = |o: SiteOp| [o.x() & 1, o.z() & 1, (o.x() >> 1) & 1, (o.z() >> 1) & 1];
    let mut s = [[0u8; 4]; 4];
    for (j, b) in basis.iter().enumerate() {
        let c = coords(cycle_second_qubit(*b));
        for i in 0..4 {
            s[i][j] = c[i];
        }
    }
    s
}

/// The symplectic form in the same basis.
pub const LAMBDA: [[u8; 4]; 4] = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];

fn mat4_mul(a: &[[u8; 4]; 4], b: &[[u8; 4]; 4]) -> [[u8; 4]; 4] {
    core::array::from_fn(|i| core::array::from_fn(|j| (0..4).fold(0, |acc, k| acc ^ (a[i][k] & b[k][j]))))
}

fn transpose4(a: &[[u8; 4]; 4]) -> [[u8; 4]; 4] {
    core::array::from_fn(|i| core::array::from_fn(|j| a[j][i]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// `S^T λ S = λ`.
    pub symplectic: bool,
    /// Both generator types map to themselves under rotation then `S`.
    pub generators_invariant: bool,
    /// Three applications give the identity on corners and on site operators.
    pub order_three: bool,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.symplectic && self.generators_invariant && self.order_three
    }
}

pub fn verify_threefold_symmetry() -> SymmetryReport {
    let s = symmetry_matrix();
    let symplectic = mat4_mul(&transpose4(&s), &mat4_mul(&LAMBDA, &s)) == LAMBDA;
    let perm = rotation_111();
    let c = code();
    let generators_invariant = c
        .generators
        .iter()
        .all(|g| (0..8).all(|i| g.corners[perm[i]] == cycle_second_qubit(g.corners[i])));
    let order_three = (0..8).all(|i| perm[perm[perm[i]]] == i)
        && SiteOp::all(2).all(|o| cycle_second_qubit(cycle_second_qubit(cycle_second_qubit(o))) == o)
        && CORNERS.iter().all(|p| rotate(rotate(rotate(*p))) == *p);
    SymmetryReport { symplectic, generators_invariant, order_three }
}

/// A periodic arrangement of generators whose product is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationLattice {
    pub name: &'static str,
    pub basis: Vec<Site>,
    /// Generator type and offset of each placement in the unit cell.
    pub cell: Vec<(usize, Site)>,
    /// The lattice descends to `Z_L^3` only when this divides `L`.
    pub modulus: usize,
}

impl RelationLattice {
    /// The planar relation: `Q` and `Q^P` one step above it, repeated along
    /// `(1,0,-1)` and `(0,1,-1)`.
    pub fn r1() -> Self {
        Self { name: "R1", basis: vec![[1, 0, -1], [0, 1, -1]], cell: vec![(0, [0, 0, 0]), (1, [0, 0, 1])], modulus: 1 }
    }

    /// The body-centred relation on the even sublattice.
    pub fn r2() -> Self {
        Self {
            name: "R2",
            basis: vec![[2, 0, 0], [0, 2, 0], [0, 0, 2]],
            cell: vec![(0, [0, 0, 0]), (1, [1, 1, 1])],
            modulus: 2,
        }
    }

    /// Placements on `Z_L^3` of the relation translated by `shift`.
    pub fn placements(&self, l: usize, shift: Site) -> Result<Vec<(usize, Site)>, LatticeError> {
        if l == 0 || l % self.modulus != 0 {
            return Err(LatticeError::Embedding(self.modulus));
        }
        let mut points = BTreeSet::new();
        let mut stack = vec![reduce_site(shift, l)];
        while let Some(p) = stack.pop() {
            if points.insert(p) {
                for b in &self.basis {
                    for sign in [1, -1] {
                        stack.push(reduce_site([p[0] + sign * b[0], p[1] + sign * b[1], p[2] + sign * b[2]], l));
                    }
                }
            }
        }
        let mut out: Vec<(usize, Site)> = points
            .iter()
            .flat_map(|p| self.cell.iter().map(move |(t, o)| (*t, reduce_site([p[0] + o[0], p[1] + o[1], p[2] + o[2]], l))))
            .collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// A generator placement as a Hermitian operator: a factor `i` for each `Y`.
pub fn hermitian_placement(code: &CubicCode, t: usize, pos: Site, l: usize) -> PauliOperator {
    let g = &code.generators[t];
    let mut o = PauliOperator::identity(code.m());
    let mut ys = 0;
    for (c, op) in CORNERS.iter().zip(&g.corners) {
        ys += op.y_count();
        o.mul_site_with_phase(reduce_site([pos[0] + c[0], pos[1] + c[1], pos[2] + c[2]], l), *op);
    }
    o.set_phase(o.phase().mul(Phase::from_power(ys)));
    o
}

/// Phase-exact product of all placements of the relation on `Z_L^3`.
pub fn relation_product(rel: &RelationLattice, l: usize) -> Result<PauliOperator, LatticeError> {
    let c = code();
    let mut acc = PauliOperator::identity(2);
    for (t, p) in rel.placements(l, [0; 3])? {
        acc = acc.multiply_with_phase(&hermitian_placement(&c, t, p, l));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub l: usize,
    /// Independent relations found.
    pub relations: usize,
    /// `L + 6 q_2(L)`.
    pub claimed: usize,
    /// Every embedded relation multiplies to the identity.
    pub all_vanish: bool,
}

/// Counts independent embedded relations: the `L` translates of R1 along
/// `(1,0,0)` and, for even `L`, the 8 translates of R2. Each relation is a
/// dependency among generators, so the count is a lower bound on `k`.
pub fn lower_bound_k(l: usize) -> Result<LowerBound, LatticeError> {
    if l < 2 {
        return Err(LatticeError::TooSmall(l, 2));
    }
    let lat = PeriodicLattice::new(l)?;
    let n = lat.n_sites();
    let c = code();
    let mut shifts: Vec<(RelationLattice, Site)> = (0..l as i64).map(|t| (RelationLattice::r1(), [t, 0, 0])).collect();
    if l % 2 == 0 {
        for k in 0..8i64 {
            shifts.push((RelationLattice::r2(), [k & 1, (k >> 1) & 1, (k >> 2) & 1]));
        }
    }
    let mut space = RowSpace::new(2 * n);
    let mut all_vanish = true;
    for (rel, shift) in &shifts {
        let mut v = BinaryVector::zeros(2 * n);
        let mut product = PauliOperator::identity(2);
        for (t, p) in rel.placements(l, *shift)? {
            v.flip(t * n + lat.index(p));
            product.mul_assign(&c.generators[t].at(p).reduce_mod(l));
        }
        all_vanish &= product.is_identity();
        space.insert(&v);
    }
    Ok(LowerBound { l, relations: space.dim(), claimed: l + if l % 2 == 0 { 6 } else { 0 }, all_vanish })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StringKind {
    Z,
    X,
    Y,
}

/// One of the three basic string operators at a base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicString {
    pub kind: StringKind,
    pub base: Site,
    pub lines: [LineOperator; 3],
}

impl BasicString {
    pub fn on_lattice(&self, l: usize) -> PauliOperator {
        let mut o = PauliOperator::identity(2);
        for line in &self.lines {
            o.mul_assign(&line.on_lattice(l));
        }
        o
    }
}

/// `θ^Z_p = ZZ[1,0,-1]_{p+z} XI[1,0,-1]_p ZZ[1,0,-1]_{p-z}`; `θ^X` and
/// `θ^Y` are its images under one and two applications of the symmetry.
pub fn basic_strings(p: Site) -> [BasicString; 3] {
    let zz = SiteOp::new(2, 0, 3);
    let xi = SiteOp::new(2, 1, 0);
    let template: [(SiteOp, Site); 3] = [(zz, [0, 0, 1]), (xi, [0, 0, 0]), (zz, [0, 0, -1])];
    let dir: Site = [1, 0, -1];
    let build = |kind: StringKind, turns: usize| {
        let lines = template.map(|(op, off)| {
            let (mut op, mut off, mut v) = (op, off, dir);
            for _ in 0..turns {
                op = cycle_second_qubit(op);
                off = rotate(off);
                v = rotate(v);
            }
            LineOperator::new(op, v, [p[0] + off[0], p[1] + off[1], p[2] + off[2]])
        });
        BasicString { kind, base: p, lines }
    };
    [build(StringKind::Z, 0), build(StringKind::X, 1), build(StringKind::Y, 2)]
}

/// `θ^Z_{(0,i,0)}` and `θ^X_{(0,0,i)}` for `i` in `Z_L`.
pub fn gamma(l: usize) -> (Vec<PauliOperator>, Vec<PauliOperator>) {
    let li = l as i64;
    let zs = (0..li).map(|i| basic_strings([0, i, 0])[0].on_lattice(l)).collect();
    let xs = (0..li).map(|i| basic_strings([0, 0, i])[1].on_lattice(l)).collect();
    (zs, xs)
}

/// `ω'_{ij} = δ_{i,j+2} + δ_{i,j-2}` with indices mod `L`.
pub fn structural_omega(l: usize) -> BinaryMatrix {
    BinaryMatrix::from_fn(l, l, |i, j| ((j + 2) % l == i) ^ ((j + l - 2) % l == i))
}

/// `ω'_{ij}`: whether `θ^Z_{(0,i,0)}` and `θ^X_{(0,0,j)}` anticommute on `Z_L^3`.
pub fn explicit_omega(l: usize) -> BinaryMatrix {
    let (zs, xs) = gamma(l);
    BinaryMatrix::from_fn(l, l, |i, j| zs[i].anticommutes(&xs[j]))
}

/// The closed form `4⌈L/4⌉ - 4`.
pub fn closed_form_rank(l: usize) -> usize {
    4 * l.div_ceil(4) - 4
}

/// The circulant's rank: `L-1` for odd `L`, `L-2` for `L ≡ 2 mod 4`, `L-4` for `4 | L`.
pub fn circulant_rank(l: usize) -> usize {
    match l % 4 {
        0 => l - 4,
        2 => l - 2,
        _ => l - 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub l: usize,
    pub structural: usize,
    pub explicit: usize,
    /// Column shift `s` with `explicit[i][j] = structural[i][j+s]`, if any.
    pub shift: Option<usize>,
    /// The `θ^Z` strings commute pairwise, as do the `θ^X` strings.
    pub blocks_commute: bool,
}

impl GammaReport {
    /// `k_h`, half the rank of the commutation matrix of Γ.
    pub fn k_h(&self) -> usize {
        self.explicit
    }
}

pub fn gamma_rank(l: usize) -> Result<GammaReport, LatticeError> {
    if l <= 4 {
        return Err(LatticeError::TooSmall(l, 5));
    }
    let s = structural_omega(l);
    let e = explicit_omega(l);
    let shift = (0..l).find(|&sh| (0..l).all(|i| (0..l).all(|j| e.get(i, j) == s.get(i, (j + sh) % l))));
    let (zs, xs) = gamma(l);
    let pairwise = |v: &[PauliOperator]| v.iter().enumerate().all(|(i, a)| v[i + 1..].iter().all(|b| !a.anticommutes(b)));
    Ok(GammaReport { l, structural: rank(&s), explicit: rank(&e), shift, blocks_commute: pairwise(&zs) && pairwise(&xs) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub l: usize,
    pub k: usize,
    /// `2 k_h + k_i`: dimension of span(Γ) modulo the stabilizer group.
    pub gamma_dim: usize,
    pub k_h: usize,
    pub k_i: usize,
    /// Upper bound on `k_h + k_i` from the counting argument: `L - 1` for
    /// odd `L`, `L + 4` for even `L`.
    pub gauge_bound: usize,
}

impl ResidualReport {
    pub fn gauge(&self) -> usize {
        self.k_h + self.k_i
    }

    /// Logical qubits left after gauging out the basic strings.
    pub fn residual(&self) -> usize {
        self.k - self.gauge()
    }

    pub fn holds(&self) -> bool {
        self.gauge() <= self.gauge_bound && self.residual() >= 1
    }
}

/// Exact gauge accounting of Γ on `Z_L^3`.
pub fn residual_qubit_check(l: usize) -> Result<ResidualReport, LatticeError> {
    let g = gamma_rank(l)?;
    let c = code();
    let stab = StabilizerGroup::new(&c, l)?;
    let k = k_from_rank(&c, l, stab.rank());
    let (zs, xs) = gamma(l);
    let mut space = RowSpace::new(2 * 2 * l * l * l);
    for o in zs.iter().chain(&xs) {
        space.insert(&stab.reduce(&vectorize(o, l)));
    }
    let gamma_dim = space.dim();
    let k_h = g.k_h();
    let k_i = gamma_dim - 2 * k_h;
    let gauge_bound = if l % 2 == 1 { l - 1 } else { l + 4 };
    Ok(ResidualReport { l, k, gamma_dim, k_h, k_i, gauge_bound })
}

/// The two lines along `y` bordering the tunnel of the upper-bound argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TunnelLine {
    /// `x = z = 0`.
    Inner,
    /// `x = 0, z = -1`, once generators touching the inner line are excluded.
    Outer,
}

/// Two-site actions `(left, right)` on a unit edge of the line, one per
/// generator placement outside the tunnel that touches the edge.
pub fn tunnel_edge_actions(line: TunnelLine) -> Vec<(SiteOp, SiteOp)> {
    let (z_line, refs): (i64, [(i64, i64); 2]) = match line {
        TunnelLine::Inner => (0, [(-1, -1), (-1, 0)]),
        TunnelLine::Outer => (-1, [(-1, -2), (0, -2)]),
    };
    let c = code();
    let corner = |d: Site| CORNERS.iter().position(|p| *p == d).expect("cube corner");
    let mut out = Vec::new();
    for g in &c.generators {
        for (xr, zr) in refs {
            let (dx, dz) = (-xr, z_line - zr);
            out.push((g.corners[corner([dx, 0, dz])], g.corners[corner([dx, 1, dz])]));
        }
    }
    out
}

/// The map from the right operator of one edge to that of the next: the
/// shared site must cancel, and the left operators form a basis.
pub fn chain_map(actions: &[(SiteOp, SiteOp)]) -> Option<Vec<(SiteOp, SiteOp)>> {
    let m = BinaryMatrix::from_fn(4, actions.len(), |r, c| (actions[c].0.vector_bits() >> r) & 1 == 1);
    if rank(&m) != 4 || actions.len() != 4 {
        return None;
    }
    let map = SiteOp::all(2)
        .map(|v| {
            let x = crate::f2::solve(&m, &BinaryVector::from_bits(&(0..4).map(|r| (v.vector_bits() >> r) & 1 == 1).collect::<Vec<_>>()))
                .expect("left operators span");
            let next = x.iter_ones().fold(SiteOp::identity(2), |acc, i| acc.mul(actions[i].1));
            (v, next)
        })
        .collect();
    Some(map)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub line: TunnelLine,
    pub actions: Vec<(SiteOp, SiteOp)>,
    /// Successive right operators starting from `ZI`, closed when it returns.
    pub orbit: Vec<SiteOp>,
    pub analysis: SequenceAnalysis,
}

impl ChainReport {
    pub fn cycle_length(&self) -> usize {
        self.orbit.len() - 1
    }
}

pub fn code0_period7_chain(line: TunnelLine) -> Option<ChainReport> {
    let actions = tunnel_edge_actions(line);
    let map = chain_map(&actions)?;
    let next = |v: SiteOp| map.iter().find(|(a, _)| *a == v).map(|(_, b)| *b).expect("total map");
    let start = SiteOp::new(2, 0, 1);
    let mut orbit = vec![start];
    let mut cur = next(start);
    while cur != start && orbit.len() <= 16 {
        orbit.push(cur);
        cur = next(cur);
    }
    orbit.push(cur);
    let alphabet: Vec<SiteOp> = SiteOp::all(2).collect();
    let analysis = analyze_follow_relation(&alphabet, &map);
    Some(ChainReport { line, actions, orbit, analysis })
}
