//! Cubic codes on the periodic lattice Z_L^3.
//!
//! Qubit coordinates are laid out site by site. In the full symplectic layout
//! site `s` owns columns `s·2m .. s·2m + 2m` holding `(x_1..x_m | z_1..z_m)`;
//! in the Z-block layout used for CSS ranks it owns `s·m .. s·m + m`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{CubicCode, GeneratorSpec};
use crate::cube::{CORNERS, DIRECTIONS};
use crate::error::LatticeError;
use crate::f2::{kernel, BinaryMatrix, BinaryVector};
use crate::pauli::{parse_expression, reduce_site, Expression, LineOperator, PauliOperator, PlaneOperator, Site, SiteOp, Term};

/// Default memory budget for dense eliminations: 4 GiB.
pub const DEFAULT_MEMORY_BUDGET: u64 = 4 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodicLattice {
    pub l: usize,
}

impl PeriodicLattice {
    pub fn new(l: usize) -> Result<Self, LatticeError> {
        if l < 2 {
            return Err(LatticeError::TooSmall(l, 2));
        }
        Ok(Self { l })
    }

    pub fn n_sites(&self) -> usize {
        self.l * self.l * self.l
    }

    #[inline]
    pub fn index(&self, s: Site) -> usize {
        let r = reduce_site(s, self.l);
        (r[0] as usize) + self.l * ((r[1] as usize) + self.l * (r[2] as usize))
    }

    pub fn site(&self, i: usize) -> Site {
        let l = self.l;
        [(i % l) as i64, ((i / l) % l) as i64, (i / (l * l)) as i64]
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        (0..self.n_sites()).map(|i| self.site(i))
    }
}

/// Which generator rows and which columns make up a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// All generator types, full symplectic columns.
    Full,
    /// CSS only: the Z-type generator on Z-part columns.
    ZBlock,
}

impl Layout {
    pub fn for_code(code: &CubicCode) -> Self {
        if code.css {
            Layout::ZBlock
        } else {
            Layout::Full
        }
    }

    pub fn columns_per_site(&self, m: usize) -> usize {
        match self {
            Layout::Full => 2 * m,
            Layout::ZBlock => m,
        }
    }
}

/// Column offsets of a site operator within its site block.
fn op_columns(op: SiteOp, layout: Layout) -> impl Iterator<Item = usize> {
    let (bits, width) = match layout {
        Layout::Full => (op.vector_bits(), 2 * op.m()),
        Layout::ZBlock => (u32::from(op.z()), op.m()),
    };
    (0..width).filter(move |i| (bits >> i) & 1 == 1)
}

/// Sparse columns of generator `g` placed at `p`.
pub fn placement_columns(g: &GeneratorSpec, p: Site, lat: &PeriodicLattice, layout: Layout) -> Vec<usize> {
    let c = layout.columns_per_site(g.m());
    let mut cols: Vec<usize> = Vec::with_capacity(16);
    for (pos, op) in CORNERS.iter().zip(&g.corners) {
        let base = lat.index([p[0] + pos[0], p[1] + pos[1], p[2] + pos[2]]) * c;
        cols.extend(op_columns(*op, layout).map(|i| base + i));
    }
    cols.sort_unstable();
    // Distinct corners never share a site for L >= 2, but stay safe.
    let mut out: Vec<usize> = Vec::with_capacity(cols.len());
    for c in cols {
        if out.last() == Some(&c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// Generator types used by a layout.
fn layout_generators(code: &CubicCode, layout: Layout) -> &[GeneratorSpec] {
    match layout {
        Layout::Full => &code.generators,
        Layout::ZBlock => &code.generators[..1],
    }
}

/// Sparse generator rows, type-major then site index.
pub fn generator_rows(code: &CubicCode, lat: &PeriodicLattice, layout: Layout) -> Vec<Vec<usize>> {
    let gens = layout_generators(code, layout);
    let mut rows = Vec::with_capacity(gens.len() * lat.n_sites());
    for g in gens {
        for p in lat.sites() {
            rows.push(placement_columns(g, p, lat, layout));
        }
    }
    rows
}

fn dense_bytes(rows: usize, cols: usize) -> u64 {
    rows as u64 * cols.div_ceil(64) as u64 * 8
}

/// The generator matrix in the given layout.
pub fn generator_matrix(code: &CubicCode, l: usize, layout: Layout) -> Result<BinaryMatrix, LatticeError> {
    generator_matrix_with_budget(code, l, layout, DEFAULT_MEMORY_BUDGET)
}

pub fn generator_matrix_with_budget(
    code: &CubicCode,
    l: usize,
    layout: Layout,
    budget: u64,
) -> Result<BinaryMatrix, LatticeError> {
    let lat = PeriodicLattice::new(l)?;
    let n_cols = lat.n_sites() * layout.columns_per_site(code.m());
    let n_rows = layout_generators(code, layout).len() * lat.n_sites();
    let needed = dense_bytes(n_rows, n_cols);
    if needed > budget {
        return Err(LatticeError::MemoryBudget { needed, budget });
    }
    let mut m = BinaryMatrix::with_cols(n_cols);
    for r in generator_rows(code, &lat, layout) {
        m.push_sparse_row(r);
    }
    Ok(m)
}

/// Rank of the generator matrix by dense elimination.
pub fn dense_rank(code: &CubicCode, l: usize, budget: u64) -> Result<usize, LatticeError> {
    let layout = Layout::for_code(code);
    let mut m = generator_matrix_with_budget(code, l, layout, budget)?;
    Ok(m.eliminate(false).rank())
}

/// `k` from a generator rank: CSS codes use the Z-block rank twice.
pub fn k_from_rank(code: &CubicCode, l: usize, rank: usize) -> usize {
    let n = code.m() * l * l * l;
    if code.css {
        n - 2 * rank
    } else {
        n - rank
    }
}

/// Number of encoded qubits on `Z_L^3`, by dense elimination.
pub fn count_logical_qubits(code: &CubicCode, l: usize) -> Result<usize, LatticeError> {
    count_logical_qubits_with_budget(code, l, DEFAULT_MEMORY_BUDGET)
}

pub fn count_logical_qubits_with_budget(code: &CubicCode, l: usize, budget: u64) -> Result<usize, LatticeError> {
    let r = dense_rank(code, l, budget)?;
    Ok(k_from_rank(code, l, r))
}

/// Largest `r` with `2^r | L`.
pub fn two_adic_valuation(l: usize) -> u32 {
    l.trailing_zeros()
}

/// The closed-form `k(L)` for codes 0 to 4.
pub fn predicted_k(id: u8, l: usize) -> Result<u64, LatticeError> {
    if l == 0 {
        return Err(LatticeError::TooSmall(l, 1));
    }
    let q = |n: usize| u64::from(l % n == 0);
    let p = 1u64 << two_adic_valuation(l);
    let l64 = l as u64;
    Ok(match id {
        0 => l64 + 3 * p * (q(2) + 2 * q(7) + 8 * q(9) + 48 * q(63) + 64 * q(65) + 18 * q(171)),
        1 => 2 * (1 + 2 * p * (q(2) + 12 * q(15) + 60 * q(63)) - 2 * q(2)),
        2 => 2 * p * (1 + 6 * q(7) + 6 * q(21) + 30 * q(31) + 60 * q(63) + 126 * q(127)),
        3 => 2 * p * (1 + 8 * q(15) + 6 * q(21) + 40 * q(31) + 42 * q(63) + 16 * q(85) + 112 * q(127)),
        4 => 2 * p * (1 + 2 * q(3) + 8 * q(15) + 40 * q(31) + 48 * q(63) + 112 * q(127)),
        other => return Err(LatticeError::UnknownCode(other)),
    })
}

/// Lower and upper bounds on `k(L)`.
pub fn k_bounds(id: u8, l: usize) -> Option<(u64, u64)> {
    let l64 = l as u64;
    match id {
        0 => {
            let lower = l64 + 6 * u64::from(l % 2 == 0);
            let upper = if l % 7 == 0 { 12 * l64 - 12 } else { 4 * l64 };
            Some((lower, upper))
        }
        1..=4 => Some((2, 4 * l64)),
        _ => None,
    }
}

/// Placements `(type, reference)` whose support meets the support of `o`.
fn touching_placements(o: &PauliOperator, code: &CubicCode, l: usize) -> BTreeSet<(usize, Site)> {
    let mut out = BTreeSet::new();
    for s in o.sites() {
        for (t, g) in code.generators.iter().enumerate() {
            for (c, pos) in CORNERS.iter().enumerate() {
                if !g.corners[c].is_identity() {
                    out.insert((t, reduce_site([s[0] - pos[0], s[1] - pos[1], s[2] - pos[2]], l)));
                }
            }
        }
    }
    out
}

/// Whether the placement of generator `g` at `p` anticommutes with `o` on `Z_L^3`.
pub fn placement_anticommutes(o: &PauliOperator, g: &GeneratorSpec, p: Site, l: usize) -> bool {
    let mut parity = false;
    for (pos, op) in CORNERS.iter().zip(&g.corners) {
        let s = reduce_site([p[0] + pos[0], p[1] + pos[1], p[2] + pos[2]], l);
        parity ^= op.lambda(o.get(&s));
    }
    parity
}

/// Excited generator placements `(type, reference)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SyndromeMap {
    pub excited: BTreeSet<(usize, Site)>,
}

impl SyndromeMap {
    pub fn len(&self) -> usize {
        self.excited.len()
    }

    pub fn is_empty(&self) -> bool {
        self.excited.is_empty()
    }

    pub fn get(&self, t: usize, p: Site) -> bool {
        self.excited.contains(&(t, p))
    }

    #[must_use]
    pub fn xor(&self, other: &SyndromeMap) -> SyndromeMap {
        SyndromeMap { excited: self.excited.symmetric_difference(&other.excited).copied().collect() }
    }
}

/// Syndrome of `o` (sites already reduced mod `L`).
pub fn syndrome(o: &PauliOperator, code: &CubicCode, l: usize) -> SyndromeMap {
    let o = o.reduce_mod(l);
    let excited = touching_placements(&o, code, l)
        .into_iter()
        .filter(|(t, p)| placement_anticommutes(&o, &code.generators[*t], *p, l))
        .collect();
    SyndromeMap { excited }
}

/// Whether `o` commutes with every generator placement on `Z_L^3`.
pub fn is_logical(o: &PauliOperator, code: &CubicCode, l: usize) -> bool {
    let o = o.reduce_mod(l);
    touching_placements(&o, code, l).into_iter().all(|(t, p)| !placement_anticommutes(&o, &code.generators[t], p, l))
}

/// Full symplectic vector of an operator on `Z_L^3`.
pub fn vectorize(o: &PauliOperator, l: usize) -> BinaryVector {
    let lat = PeriodicLattice { l };
    let w = 2 * o.m();
    let mut v = BinaryVector::zeros(lat.n_sites() * w);
    for (s, op) in o.reduce_mod(l).iter() {
        let base = lat.index(*s) * w;
        for i in op_columns(*op, Layout::Full) {
            v.flip(base + i);
        }
    }
    v
}

/// Inverse of [`vectorize`].
pub fn devectorize(v: &BinaryVector, m: usize, l: usize) -> PauliOperator {
    let lat = PeriodicLattice { l };
    let w = 2 * m;
    let mut o = PauliOperator::identity(m);
    let mut per_site: BTreeMap<usize, u32> = BTreeMap::new();
    for i in v.iter_ones() {
        *per_site.entry(i / w).or_default() |= 1 << (i % w);
    }
    for (s, bits) in per_site {
        o.mul_site(lat.site(s), SiteOp::from_vector_bits(m, bits));
    }
    o
}

/// Echelon form of all generator rows, for membership queries.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    pub l: usize,
    pub m: usize,
    matrix: BinaryMatrix,
    pivots: Vec<usize>,
}

impl StabilizerGroup {
    pub fn new(code: &CubicCode, l: usize) -> Result<Self, LatticeError> {
        let mut matrix = generator_matrix(code, l, Layout::Full)?;
        let e = matrix.eliminate(false);
        Ok(Self { l, m: code.m(), matrix, pivots: e.pivots })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// `v` with every pivot cleared; two vectors are congruent modulo the
    /// group exactly when their reductions agree.
    pub fn reduce(&self, v: &BinaryVector) -> BinaryVector {
        let mut v = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                let row = self.matrix.row_vector(i);
                v.xor_assign(&row);
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &BinaryVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Phase-blind membership.
    pub fn contains(&self, o: &PauliOperator) -> bool {
        self.contains_vector(&vectorize(o, self.l))
    }
}

pub fn is_stabilizer_element(o: &PauliOperator, code: &CubicCode, l: usize) -> Result<bool, LatticeError> {
    Ok(StabilizerGroup::new(code, l)?.contains(o))
}

/// A string operator with its printed complement.
#[derive(Clone, Debug)]
pub struct StringEntry {
    pub id: u8,
    pub string: &'static str,
    pub complement: &'static str,
}

/// Nontrivial string operators of codes 11 to 17 and, for each, a logical
/// operator that anticommutes with it on `Z_5^3`.
pub const STRING_TABLE: [StringEntry; 7] = [
    StringEntry { id: 11, string: "ZZ[z](0,0,0) ZI[z](1,0,0)", complement: "XI[y](0,0,0) IX[y](1,0,0)" },
    StringEntry { id: 12, string: "IZ[z](0,0,0) ZI[z](0,1,0)", complement: "XI[x](0,0,0) XX[x](0,1,0)" },
    StringEntry { id: 13, string: "ZZ[z](0,0,0) IZ[z](0,1,0)", complement: "sigma[0,1,0]_IX(0,0,0)" },
    StringEntry { id: 14, string: "IX[z](0,0,0) XI[z](0,1,0)", complement: "sigma[0,0,1]_IZ(0,0,0)" },
    StringEntry { id: 15, string: "ZI[y](0,0,0) ZZ[y](1,0,0)", complement: "IX[z](0,0,0) XI[z](1,0,0)" },
    StringEntry { id: 16, string: "ZZ[1,0,1](0,0,0) IZ[1,0,1](1,0,0)", complement: "IX[1,1,0](0,0,0) XI[1,1,0](1,0,0)" },
    StringEntry { id: 17, string: "ZZ[x](0,0,0) IZ[x](0,0,1)", complement: "sigma[0,0,1]_IX(0,0,0)" },
];

pub fn string_entry(id: u8) -> Option<&'static StringEntry> {
    STRING_TABLE.iter().find(|e| e.id == id)
}

/// A logical operator anticommuting with the queried one.
#[derive(Clone, Debug)]
pub struct Witness {
    pub expression: Expression,
    pub operator: PauliOperator,
}

/// Primitive directions in `{-1,0,1}^3` up to sign: the catalog's normals.
fn first_axis(v: Site) -> usize {
    (0..3).find(|&k| v[k] != 0).expect("nonzero vector")
}

/// Searches, in order, the string table entries of the code, all plane
/// operators `sigma[n]_E` with `n` among the 13 cube directions, and all
/// period-one lines, for a logical operator anticommuting with `o`.
pub fn nontriviality_witness(o: &PauliOperator, code: &CubicCode, l: usize) -> Option<Witness> {
    if o.is_identity() {
        return None;
    }
    let o = o.reduce_mod(l);
    let m = code.m();
    let try_expr = |e: Expression| -> Option<Witness> {
        let op = e.on_lattice(l, m);
        (op.anticommutes(&o) && is_logical(&op, code, l)).then_some(Witness { expression: e, operator: op })
    };
    if let Some(entry) = code.id.and_then(string_entry) {
        for text in [entry.string, entry.complement] {
            let e = parse_expression(text).expect("table entries parse");
            if let Some(w) = try_expr(e) {
                return Some(w);
            }
        }
    }
    let li = l as i64;
    for n in DIRECTIONS {
        let k = first_axis(n);
        for e in SiteOp::all(m).skip(1) {
            for t in 0..li {
                let mut anchor = [0i64; 3];
                anchor[k] = t;
                let expr = Expression { terms: vec![Term::Plane(PlaneOperator::new(e, n, anchor))] };
                if let Some(w) = try_expr(expr) {
                    return Some(w);
                }
            }
        }
    }
    for v in DIRECTIONS {
        let k = first_axis(v);
        let (a, b) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for e in SiteOp::all(m).skip(1) {
            for s in 0..li {
                for t in 0..li {
                    let mut p = [0i64; 3];
                    p[a] = s;
                    p[b] = t;
                    let expr = Expression { terms: vec![Term::Line(LineOperator::new(e, v, p))] };
                    if let Some(w) = try_expr(expr) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Whether `sigma[normal]_E` commutes with every generator on the infinite
/// lattice: for each generator type and each plane through the cube, the
/// product of the corners on that plane must commute with `E`.
pub fn plane_logical_check(e: SiteOp, normal: Site, code: &CubicCode) -> bool {
    code.generators.iter().all(|g| {
        let mut levels: BTreeMap<i64, SiteOp> = BTreeMap::new();
        for (pos, op) in CORNERS.iter().zip(&g.corners) {
            let v = normal[0] * pos[0] + normal[1] * pos[1] + normal[2] * pos[2];
            let cur = levels.entry(v).or_insert(SiteOp::identity(e.m()));
            *cur = cur.mul(*op);
        }
        levels.values().all(|p| !e.lambda(*p))
    })
}

/// Two integer vectors spanning the lattice points of planes with normal `n`.
pub fn plane_basis(n: Site) -> Option<(Site, Site)> {
    let mut cands = Vec::new();
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            for c in -1..=1i64 {
                let u = [a, b, c];
                if u != [0, 0, 0] && a * n[0] + b * n[1] + c * n[2] == 0 {
                    cands.push(u);
                }
            }
        }
    }
    cands.sort_by_key(|u| (u.iter().map(|x| x.abs()).sum::<i64>(), core::cmp::Reverse(*u)));
    for (i, u) in cands.iter().enumerate() {
        for v in &cands[i + 1..] {
            let cross = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
            if cross == n || cross == [-n[0], -n[1], -n[2]] {
                return Some((*u, *v));
            }
        }
    }
    None
}

/// Rectangle `anchor + a·u + b·v`, `0 <= a < width`, `0 <= b < height`, in a plane.
#[derive(Clone, Copy, Debug)]
pub struct PlaneRegion {
    pub anchor: Site,
    pub width: usize,
    pub height: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneEnergy {
    pub excitations: usize,
    pub boundary_length: usize,
    /// Largest sup-norm distance from an excited generator's nontrivial
    /// corners to the nearest boundary site of the region.
    pub max_distance: usize,
}

fn torus_distance(a: Site, b: Site, l: usize) -> usize {
    let li = l as i64;
    (0..3)
        .map(|k| {
            let d = (a[k] - b[k]).rem_euclid(li);
            d.min(li - d) as usize
        })
        .max()
        .unwrap_or(0)
}

/// Syndrome statistics of the plane operator `sigma[normal]_E` restricted to a rectangle.
pub fn partial_plane_energy(
    e: SiteOp,
    normal: Site,
    region: PlaneRegion,
    code: &CubicCode,
    l: usize,
) -> Option<PlaneEnergy> {
    let (u, v) = plane_basis(normal)?;
    let li = l as i64;
    let at = |a: i64, b: i64| reduce_site([region.anchor[0] + a * u[0] + b * v[0], region.anchor[1] + a * u[1] + b * v[1], region.anchor[2] + a * u[2] + b * v[2]], l);
    let mut sites = BTreeSet::new();
    for a in 0..region.width as i64 {
        for b in 0..region.height as i64 {
            sites.insert(at(a, b));
        }
    }
    let o = PauliOperator::from_sites(e.m(), sites.iter().map(|s| (*s, e)));
    let boundary: Vec<Site> = sites
        .iter()
        .copied()
        .filter(|s| {
            [u, v, [-u[0], -u[1], -u[2]], [-v[0], -v[1], -v[2]]]
                .iter()
                .any(|d| !sites.contains(&reduce_site([s[0] + d[0], s[1] + d[1], s[2] + d[2]], l)))
        })
        .collect();
    let syn = syndrome(&o, code, l);
    let mut max_distance = 0;
    for (t, p) in &syn.excited {
        let g = &code.generators[*t];
        let d = CORNERS
            .iter()
            .zip(&g.corners)
            .filter(|(_, op)| !op.is_identity())
            .flat_map(|(pos, _)| {
                let s = [p[0] + pos[0], p[1] + pos[1], p[2] + pos[2]];
                boundary.iter().map(move |b| torus_distance(s, *b, l))
            })
            .min()
            .unwrap_or(li as usize);
        max_distance = max_distance.max(d);
    }
    Some(PlaneEnergy { excitations: syn.len(), boundary_length: boundary.len(), max_distance })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxReport {
    pub width: usize,
    /// Dimension of the space of logical operators supported in the box.
    pub dimension: usize,
    pub trivial: usize,
    pub all_trivial: bool,
}

/// Logical operators supported in the box `[0, w)^3` of `Z_L^3` and whether
/// each basis element is a product of generators.
pub fn box_logical_triviality(code: &CubicCode, w: usize, l: usize) -> Result<BoxReport, LatticeError> {
    if l < w + 4 {
        return Err(LatticeError::TooSmall(l, w + 4));
    }
    if w == 0 {
        return Ok(BoxReport { width: 0, dimension: 0, trivial: 0, all_trivial: true });
    }
    let m = code.m();
    let wi = w as i64;
    let c = 2 * m;
    let var = |s: Site| -> Option<usize> {
        s.iter().all(|x| (0..wi).contains(x)).then(|| (((s[0] * wi + s[1]) * wi + s[2]) as usize) * c)
    };
    let n = w * w * w * c;
    let mut eqs = BinaryMatrix::with_cols(n);
    for g in &code.generators {
        for px in -1..wi {
            for py in -1..wi {
                for pz in -1..wi {
                    let mut ones = Vec::new();
                    for (pos, op) in CORNERS.iter().zip(&g.corners) {
                        if let Some(base) = var([px + pos[0], py + pos[1], pz + pos[2]]) {
                            // λ(g, O) = g.x · O.z + g.z · O.x
                            for q in 0..m {
                                if (op.z() >> q) & 1 == 1 {
                                    ones.push(base + q);
                                }
                                if (op.x() >> q) & 1 == 1 {
                                    ones.push(base + m + q);
                                }
                            }
                        }
                    }
                    if !ones.is_empty() {
                        eqs.push_sparse_row(ones);
                    }
                }
            }
        }
    }
    let basis = kernel(&eqs);
    let group = StabilizerGroup::new(code, l)?;
    let mut trivial = 0;
    for b in &basis {
        let mut o = PauliOperator::identity(m);
        for x in 0..wi {
            for y in 0..wi {
                for z in 0..wi {
                    let base = var([x, y, z]).expect("inside");
                    let bits = (0..c).fold(0u32, |acc, i| acc | (u32::from(b.get(base + i)) << i));
                    if bits != 0 {
                        o.mul_site([x, y, z], SiteOp::from_vector_bits(m, bits));
                    }
                }
            }
        }
        debug_assert!(is_logical(&o, code, l));
        if group.contains(&o) {
            trivial += 1;
        }
    }
    Ok(BoxReport { width: w, dimension: basis.len(), trivial, all_trivial: trivial == basis.len() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    /// Every candidate in Gray-code order.
    GrayCode,
    /// Candidates by increasing number of sites, stopping at the first hit.
    ByWeight,
}

#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub distance: usize,
    pub order: SearchOrder,
    pub candidates: u64,
    pub witness: PauliOperator,
}

/// Largest number of candidate bits the exhaustive search accepts.
pub const DISTANCE_SEARCH_LIMIT: u32 = 32;

/// Minimum number of sites of a nontrivial logical operator, by exhaustive
/// search. CSS codes enumerate X-type operators only; the Z-type distance is
/// the same by the X/Z duality of the generators.
pub fn brute_force_distance(code: &CubicCode, l: usize, order: SearchOrder) -> Result<DistanceReport, LatticeError> {
    brute_force_distance_with_limit(code, l, order, DISTANCE_SEARCH_LIMIT)
}

pub fn brute_force_distance_with_limit(
    code: &CubicCode,
    l: usize,
    order: SearchOrder,
    limit: u32,
) -> Result<DistanceReport, LatticeError> {
    let lat = PeriodicLattice::new(l)?;
    let m = code.m();
    let n_sites = lat.n_sites();
    // Per-site candidate width and which generators act as checks / stabilizers.
    let width = if code.css { m } else { 2 * m };
    let bits = (n_sites * width) as u32;
    if bits > limit || bits > 63 {
        return Err(LatticeError::SearchTooLarge { bits, limit });
    }
    if count_logical_qubits(code, l)? == 0 {
        return Err(LatticeError::NoLogicals);
    }
    // Encode a candidate as a word; bit `s·width + i`.
    let encode_op = |op: SiteOp| -> u64 {
        if code.css {
            u64::from(op.x())
        } else {
            u64::from(op.vector_bits())
        }
    };
    let checks: Vec<&GeneratorSpec> = if code.css { vec![&code.generators[0]] } else { code.generators.iter().collect() };
    let stabs: Vec<&GeneratorSpec> = if code.css { vec![&code.generators[1]] } else { code.generators.iter().collect() };
    let n_checks = checks.len() * n_sites;
    if n_checks > 128 {
        return Err(LatticeError::SearchTooLarge { bits, limit });
    }
    // Syndrome column of each candidate bit.
    let mut columns = vec![0u128; bits as usize];
    for (ti, g) in checks.iter().enumerate() {
        for p in lat.sites() {
            let row = ti * n_sites + lat.index(p);
            for (pos, op) in CORNERS.iter().zip(&g.corners) {
                let s = lat.index([p[0] + pos[0], p[1] + pos[1], p[2] + pos[2]]);
                for i in 0..width {
                    let probe = if code.css {
                        SiteOp::new(m, 1 << i, 0)
                    } else {
                        SiteOp::from_vector_bits(m, 1 << i)
                    };
                    if op.lambda(probe) {
                        columns[s * width + i] ^= 1u128 << row;
                    }
                }
            }
        }
    }
    let mut basis: Vec<u64> = Vec::new();
    for g in &stabs {
        for p in lat.sites() {
            let mut v = 0u64;
            for (pos, op) in CORNERS.iter().zip(&g.corners) {
                let s = lat.index([p[0] + pos[0], p[1] + pos[1], p[2] + pos[2]]);
                v ^= encode_op(*op) << (s * width);
            }
            insert_word(&mut basis, v);
        }
    }
    let site_mask = (1u64 << width) - 1;
    let weight = |v: u64| (0..n_sites).filter(|s| (v >> (s * width)) & site_mask != 0).count();
    let decode = |v: u64| -> PauliOperator {
        let mut o = PauliOperator::identity(m);
        for s in 0..n_sites {
            let b = ((v >> (s * width)) & site_mask) as u32;
            if b != 0 {
                let op = if code.css { SiteOp::new(m, b as u8, 0) } else { SiteOp::from_vector_bits(m, b) };
                o.mul_site(lat.site(s), op);
            }
        }
        o
    };
    let nontrivial = |v: u64| reduce_word(&basis, v) != 0;
    match order {
        SearchOrder::GrayCode => {
            let mut v = 0u64;
            let mut syn = 0u128;
            let mut best: Option<(usize, u64)> = None;
            let total = 1u64 << bits;
            for step in 1..total {
                let j = step.trailing_zeros() as usize;
                v ^= 1 << j;
                syn ^= columns[j];
                if syn == 0 && nontrivial(v) {
                    let w = weight(v);
                    if best.is_none_or(|(bw, _)| w < bw) {
                        best = Some((w, v));
                    }
                }
            }
            let (d, v) = best.ok_or(LatticeError::NoLogicals)?;
            Ok(DistanceReport { distance: d, order, candidates: total - 1, witness: decode(v) })
        }
        SearchOrder::ByWeight => {
            let mut candidates = 0u64;
            for w in 1..=n_sites {
                let mut chosen: Vec<usize> = (0..w).collect();
                loop {
                    // all nonzero assignments on the chosen sites
                    let per = site_mask;
                    let mut digits = vec![1u64; w];
                    loop {
                        candidates += 1;
                        let mut v = 0u64;
                        let mut syn = 0u128;
                        for (k, &s) in chosen.iter().enumerate() {
                            let d = digits[k];
                            v |= d << (s * width);
                            for i in 0..width {
                                if (d >> i) & 1 == 1 {
                                    syn ^= columns[s * width + i];
                                }
                            }
                        }
                        if syn == 0 && nontrivial(v) {
                            return Ok(DistanceReport { distance: w, order, candidates, witness: decode(v) });
                        }
                        let mut k = 0;
                        while k < w && digits[k] == per {
                            digits[k] = 1;
                            k += 1;
                        }
                        if k == w {
                            break;
                        }
                        digits[k] += 1;
                    }
                    if !next_combination(&mut chosen, n_sites) {
                        break;
                    }
                }
            }
            Err(LatticeError::NoLogicals)
        }
    }
}

fn insert_word(basis: &mut Vec<u64>, v: u64) {
    let r = reduce_word(basis, v);
    if r != 0 {
        basis.push(r);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
}

/// Reduces `v` against a basis with distinct leading bits, sorted descending.
fn reduce_word(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        v = v.min(v ^ b);
    }
    v
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// How the ordered elimination obtained its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderedMethod {
    /// Generators outside the tunnel peeled into a triangular prefix.
    Peel,
    /// Slab-by-slab sweep along z.
    SlabSweep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderedReport {
    pub rank: usize,
    pub method: OrderedMethod,
    /// Rows in the triangular prefix (peeling) or eliminated slab pivots.
    pub prefix: usize,
    /// Largest dense working set in bytes.
    pub peak_bytes: u64,
}

/// Reference cells `(a, b)` of the tunnel generators and the axis they run
/// along: the 1×2 tunnels of the upper-bound arguments.
pub fn tunnel(id: u8, l: usize) -> Option<(usize, [(i64, i64); 2])> {
    let last = l as i64 - 1;
    match id {
        1..=4 => Some((2, [(last, 0), (0, 0)])),
        0 => Some((1, [(0, last), (0, 0)])),
        _ => None,
    }
}

/// Rank of the generator matrix (Z-block for CSS codes) computed with
/// O(L^4) working memory.
///
/// First the generators outside the code's tunnel are peeled: repeatedly
/// take a generator that is the only remaining one acting on some column.
/// Peeled rows form a triangular set; the remaining rows are reduced against
/// it in peel order and eliminated densely. When peeling stalls before the
/// tunnel is all that is left, a z-slab sweep is used instead.
pub fn ordered_elimination_rank(code: &CubicCode, l: usize) -> Result<OrderedReport, LatticeError> {
    let id = code.id.filter(|i| *i <= 4).ok_or(LatticeError::NoOrdering)?;
    let lat = PeriodicLattice::new(l)?;
    let layout = Layout::for_code(code);
    let rows = generator_rows(code, &lat, layout);
    let (axis, cells) = tunnel(id, l).expect("codes 0-4 have tunnels");
    let in_tunnel: Vec<bool> = (0..rows.len())
        .map(|r| {
            let p = lat.site(r % lat.n_sites());
            let others: Vec<i64> = (0..3).filter(|&k| k != axis).map(|k| p[k]).collect();
            cells.contains(&(others[0], others[1]))
        })
        .collect();
    if let Some(report) = peel_rank(&rows, &in_tunnel, lat.n_sites() * layout.columns_per_site(code.m())) {
        return Ok(report);
    }
    Ok(slab_sweep_rank(code, &lat, layout))
}

fn peel_rank(rows: &[Vec<usize>], excluded: &[bool], n_cols: usize) -> Option<OrderedReport> {
    let mut count = vec![0u32; n_cols];
    let mut xor_id = vec![0usize; n_cols];
    let mut active: Vec<bool> = excluded.iter().map(|e| !e).collect();
    for (r, cols) in rows.iter().enumerate() {
        if active[r] {
            for &c in cols {
                count[c] += 1;
                xor_id[c] ^= r;
            }
        }
    }
    let mut stack: Vec<usize> = (0..n_cols).filter(|&c| count[c] == 1).collect();
    let mut order: Vec<(usize, usize)> = Vec::new();
    while let Some(c) = stack.pop() {
        if count[c] != 1 {
            continue;
        }
        let r = xor_id[c];
        active[r] = false;
        order.push((r, c));
        for &d in &rows[r] {
            count[d] -= 1;
            xor_id[d] ^= r;
            if count[d] == 1 {
                stack.push(d);
            }
        }
    }
    if active.iter().any(|&a| a) {
        return None;
    }
    let rest: Vec<usize> = (0..rows.len()).filter(|&r| excluded[r]).collect();
    let mut residual = BinaryMatrix::zeros(rest.len(), n_cols);
    for (i, &r) in rest.iter().enumerate() {
        let mut v = BinaryVector::from_indices(n_cols, rows[r].iter().copied());
        for &(pr, pc) in &order {
            if v.get(pc) {
                for &d in &rows[pr] {
                    v.flip(d);
                }
            }
        }
        residual.row_mut(i).copy_from_slice(v.words());
    }
    let peak = residual.bytes() as u64;
    let r = residual.eliminate(false).rank();
    Some(OrderedReport { rank: order.len() + r, method: OrderedMethod::Peel, prefix: order.len(), peak_bytes: peak })
}

/// Rows of `width` words with distinct leading bits.
struct WordEchelon {
    width: usize,
    rows: Vec<u64>,
    leads: BTreeMap<usize, usize>,
}

enum Reduced {
    /// Stored with a new lead below the limit.
    Stored,
    /// Zero below the limit after reduction.
    Rest,
}

impl WordEchelon {
    fn new(width: usize) -> Self {
        Self { width, rows: Vec::new(), leads: BTreeMap::new() }
    }

    fn lead(row: &[u64]) -> Option<usize> {
        row.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Reduces `row` while its lead is below `limit`; stores it if that lead is new.
    fn reduce(&mut self, row: &mut [u64], limit: usize) -> Reduced {
        while let Some(p) = Self::lead(row).filter(|p| *p < limit) {
            match self.leads.get(&p) {
                Some(&i) => {
                    let src = &self.rows[i * self.width..(i + 1) * self.width];
                    for k in p / 64..self.width {
                        row[k] ^= src[k];
                    }
                }
                None => {
                    self.leads.insert(p, self.leads.len());
                    self.rows.extend_from_slice(row);
                    return Reduced::Stored;
                }
            }
        }
        Reduced::Rest
    }

    fn len(&self) -> usize {
        self.leads.len()
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.width..(i + 1) * self.width]
    }

    fn bytes(&self) -> u64 {
        (self.rows.len() * 8) as u64
    }
}

/// z-slab sweep. A row is `[cur | next | border]`, each a slab of `L^2 c`
/// bits padded to whole words; slab 0 is the border that the last layer of
/// generators wraps onto.
///
/// After step `s` no remaining row touches slab `s`, so rows with a pivot in
/// `cur` are independent of everything else and only counted.
fn slab_sweep_rank(code: &CubicCode, lat: &PeriodicLattice, layout: Layout) -> OrderedReport {
    const CUR: usize = 0;
    const NEXT: usize = 1;
    const BORDER: usize = 2;
    let l = lat.l;
    let c = layout.columns_per_site(code.m());
    let sw = (l * l * c).div_ceil(64);
    let width = 3 * sw;
    let gens = layout_generators(code, layout);

    let make_row = |g: &GeneratorSpec, x: i64, y: i64, lower: usize, upper: usize| -> Vec<u64> {
        let mut row = vec![0u64; width];
        for (pos, op) in CORNERS.iter().zip(&g.corners) {
            let s = reduce_site([x + pos[0], y + pos[1], 0], l);
            let base = ((s[0] as usize) + l * (s[1] as usize)) * c;
            let part = if pos[2] == 0 { lower } else { upper };
            for i in op_columns(*op, layout) {
                let bit = part * sw * 64 + base + i;
                row[bit / 64] ^= 1 << (bit % 64);
            }
        }
        row
    };
    let layer = |lower: usize, upper: usize| {
        let mut out = Vec::with_capacity(gens.len() * l * l);
        for g in gens {
            for y in 0..l as i64 {
                for x in 0..l as i64 {
                    out.push(make_row(g, x, y, lower, upper));
                }
            }
        }
        out
    };

    let mut border = WordEchelon::new(sw);
    let mut carried = layer(BORDER, CUR);
    let mut eliminated = 0usize;
    let mut peak = 0u64;
    for s in 1..l {
        let upper = if s + 1 == l { BORDER } else { NEXT };
        let mut active = core::mem::take(&mut carried);
        active.extend(layer(CUR, upper));
        let mut pivots = WordEchelon::new(width);
        let mut rest = WordEchelon::new(2 * sw);
        for mut row in active {
            if let Reduced::Rest = pivots.reduce(&mut row, sw * 64) {
                let _ = rest.reduce(&mut row[sw..], 2 * sw * 64);
            }
        }
        eliminated += pivots.len();
        peak = peak.max(pivots.bytes() + rest.bytes() + border.bytes());
        for i in 0..rest.len() {
            let r = rest.row(i);
            if r[..sw].iter().any(|w| *w != 0) {
                // shift next into cur for the following step
                let mut row = vec![0u64; width];
                row[..sw].copy_from_slice(&r[..sw]);
                row[2 * sw..].copy_from_slice(&r[sw..]);
                carried.push(row);
            } else {
                let mut b = r[sw..].to_vec();
                let _ = border.reduce(&mut b, sw * 64);
            }
        }
    }
    debug_assert!(carried.is_empty());
    OrderedReport {
        rank: eliminated + border.len(),
        method: OrderedMethod::SlabSweep,
        prefix: eliminated,
        peak_bytes: peak,
    }
}

/// Rank by the slab sweep alone, for cross-checking the peeling path.
pub fn slab_sweep(code: &CubicCode, l: usize) -> Result<OrderedReport, LatticeError> {
    let lat = PeriodicLattice::new(l)?;
    Ok(slab_sweep_rank(code, &lat, Layout::for_code(code)))
}
