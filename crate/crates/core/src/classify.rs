//! Commutation matrices of cube generators: constraints, conditions,
//! canonical forms and the exhaustive classification.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{css_dual_generator, CubicCode, GeneratorSpec};
use crate::cube::{direction_groups, offset_pairs, opposite, symmetries, DIRECTIONS};
use crate::f2::{kernel, rank, rank_of_words, realize_commutation_matrix, BinaryMatrix, SymplecticForm};
use crate::pauli::{Site, SiteOp};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Kind {
    Css,
    NonCss,
}

/// 8×8 matrix over F2; row `a` is a byte whose bit `b` is entry `(a, b)`.
///
/// Non-CSS: `ω_ab = λ(Q_a, Q_b)`. CSS: `ω'_ab = λ(Q^Z_a, Q^X_b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CommutationMatrix {
    pub kind: Kind,
    pub rows: [u8; 8],
}

impl CommutationMatrix {
    pub fn new(kind: Kind, rows: [u8; 8]) -> Self {
        Self { kind, rows }
    }

    pub fn zero(kind: Kind) -> Self {
        Self { kind, rows: [0; 8] }
    }

    pub fn of_code(code: &CubicCode) -> Self {
        let (left, right, kind) = if code.css {
            (&code.generators[0], &code.generators[1], Kind::Css)
        } else {
            (&code.generators[0], &code.generators[0], Kind::NonCss)
        };
        Self { kind, rows: commutation_rows(left, right) }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> bool {
        (self.rows[a] >> b) & 1 == 1
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        Self { kind: self.kind, rows: transpose8(&self.rows) }
    }

    pub fn rank(&self) -> usize {
        rank_of_words(&self.rows.map(u64::from))
    }

    pub fn to_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_fn(8, 8, |a, b| self.get(a, b))
    }

    /// Whether it is symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.rows == transpose8(&self.rows) && (0..8).all(|a| !self.get(a, a))
    }

    /// Image under the corner permutation `perm`: `new[π(a)][π(b)] = old[a][b]`.
    #[must_use]
    pub fn permuted(&self, perm: &[usize; 8]) -> Self {
        let mut rows = [0u8; 8];
        for a in 0..8 {
            for b in 0..8 {
                if self.get(a, b) {
                    rows[perm[a]] |= 1 << perm[b];
                }
            }
        }
        Self { kind: self.kind, rows }
    }
}

/// `λ(left_a, right_b)` for all corner pairs.
pub fn commutation_rows(left: &GeneratorSpec, right: &GeneratorSpec) -> [u8; 8] {
    core::array::from_fn(|a| {
        (0..8).fold(0u8, |acc, b| acc | (u8::from(left.corners[a].lambda(right.corners[b])) << b))
    })
}

fn transpose8(rows: &[u8; 8]) -> [u8; 8] {
    core::array::from_fn(|b| (0..8).fold(0u8, |acc, a| acc | (((rows[a] >> b) & 1) << a)))
}

/// Homogeneous linear system on the free entries of ω.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub kind: Kind,
    /// Variable `k` is the entry `variables[k]`.
    pub variables: Vec<(usize, usize)>,
    /// One row per independent equation.
    pub equations: BinaryMatrix,
}

impl ConstraintSystem {
    pub fn n_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn solution_dimension(&self) -> usize {
        self.n_variables() - rank(&self.equations)
    }

    pub fn solution_basis(&self) -> Vec<CommutationMatrix> {
        kernel(&self.equations).iter().map(|v| self.matrix_of(&v.to_bits())).collect()
    }

    pub fn matrix_of(&self, values: &[bool]) -> CommutationMatrix {
        let mut m = CommutationMatrix::zero(self.kind);
        for (&(a, b), &on) in self.variables.iter().zip(values) {
            if on {
                m.rows[a] |= 1 << b;
                if self.kind == Kind::NonCss {
                    m.rows[b] |= 1 << a;
                }
            }
        }
        m
    }

    pub fn values_of(&self, m: &CommutationMatrix) -> Vec<bool> {
        self.variables.iter().map(|&(a, b)| m.get(a, b)).collect()
    }

    pub fn is_satisfied(&self, m: &CommutationMatrix) -> bool {
        let v = crate::f2::BinaryVector::from_bits(&self.values_of(m));
        self.equations.mul_vec(&v).is_zero()
    }
}

/// The commutation constraints among all translates of the generators.
///
/// Non-CSS: generators `Q` and its inversion placed at every relative offset
/// in `{-1,0,1}^3` must commute; the unknowns are `ω_ab` with `a < b`.
/// CSS: for each offset `t`, `Σ ω'_ab` over corner pairs with
/// `pos(a) = t + pos(b)` vanishes; the unknowns are all 64 entries.
pub fn constraint_system(kind: Kind) -> ConstraintSystem {
    match kind {
        Kind::Css => {
            let variables: Vec<(usize, usize)> = (0..8).flat_map(|a| (0..8).map(move |b| (a, b))).collect();
            let mut eqs = BinaryMatrix::with_cols(64);
            for (_, pairs) in offset_pairs() {
                eqs.push_sparse_row(pairs.iter().map(|&(a, b)| a * 8 + b));
            }
            ConstraintSystem { kind, variables, equations: independent_rows(&eqs) }
        }
        Kind::NonCss => {
            let variables: Vec<(usize, usize)> = (0..8).flat_map(|a| ((a + 1)..8).map(move |b| (a, b))).collect();
            let index = |a: usize, b: usize| -> Option<usize> {
                (a != b).then(|| variables.iter().position(|&v| v == (a.min(b), a.max(b))).expect("pair listed"))
            };
            let mut eqs = BinaryMatrix::with_cols(variables.len());
            let mut seen = BTreeSet::new();
            for (_, pairs) in offset_pairs() {
                for inv_left in [false, true] {
                    for inv_right in [false, true] {
                        let mut row = BTreeSet::new();
                        for &(a, b) in &pairs {
                            let ca = if inv_left { opposite(a) } else { a };
                            let cb = if inv_right { opposite(b) } else { b };
                            if let Some(k) = index(ca, cb) {
                                if !row.remove(&k) {
                                    row.insert(k);
                                }
                            }
                        }
                        if !row.is_empty() && seen.insert(row.clone()) {
                            eqs.push_sparse_row(row);
                        }
                    }
                }
            }
            ConstraintSystem { kind, variables, equations: independent_rows(&eqs) }
        }
    }
}

fn independent_rows(m: &BinaryMatrix) -> BinaryMatrix {
    let mut space = crate::f2::RowSpace::new(m.n_cols());
    let mut out = BinaryMatrix::with_cols(m.n_cols());
    for r in m.rows() {
        if space.insert(&r) {
            out.push_row(&r);
        }
    }
    out
}

/// Grouping of corners by lines of one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionMatrix {
    pub direction: Site,
    pub groups: Vec<Vec<usize>>,
}

impl DirectionMatrix {
    /// Row masks: bit `a` set when corner `a` is in the group.
    pub fn row_masks(&self) -> Vec<u8> {
        self.groups.iter().map(|g| g.iter().fold(0u8, |acc, &a| acc | (1 << a))).collect()
    }

    pub fn to_matrix(&self) -> BinaryMatrix {
        let masks = self.row_masks();
        BinaryMatrix::from_fn(masks.len(), 8, |r, a| (masks[r] >> a) & 1 == 1)
    }

    /// Rows of `R ω`.
    pub fn apply(&self, rows: &[u8; 8]) -> Vec<u8> {
        self.groups.iter().map(|g| g.iter().fold(0u8, |acc, &a| acc ^ rows[a])).collect()
    }
}

pub fn direction_matrices() -> Vec<DirectionMatrix> {
    DIRECTIONS.iter().map(|&d| DirectionMatrix { direction: d, groups: direction_groups(d) }).collect()
}

/// Outcome of the condition checks on one commutation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub rank: usize,
    pub m: usize,
    pub rank_ok: bool,
    /// Directions whose rank condition fails.
    pub failing_directions: Vec<Site>,
    pub corner_product_ok: bool,
    pub constraints_ok: bool,
    pub passed: bool,
    pub reason: Option<String>,
}

/// Rank condition, the 13 direction conditions and the corner-product
/// condition for a code with `m` qubits per site.
pub fn check_conditions(omega: &CommutationMatrix, m: usize) -> ConditionReport {
    let system = constraint_system(omega.kind);
    let constraints_ok = system.is_satisfied(omega) && (omega.kind == Kind::Css || omega.is_alternating());
    let r = omega.rank();
    let target = match omega.kind {
        Kind::Css => m,
        Kind::NonCss => 2 * m,
    };
    let rank_ok = r == target;
    let transposed = omega.transpose();
    let mut failing_directions = Vec::new();
    for d in direction_matrices() {
        let mut ok = rank_of_words(&d.apply(&omega.rows).iter().map(|&x| u64::from(x)).collect::<Vec<_>>()) == target;
        if omega.kind == Kind::Css {
            ok &= rank_of_words(&d.apply(&transposed.rows).iter().map(|&x| u64::from(x)).collect::<Vec<_>>()) == target;
        }
        if !ok {
            failing_directions.push(d.direction);
        }
    }
    let corner_product_ok = match omega.kind {
        // Q and its inversion together cover each corner operator twice.
        Kind::NonCss => true,
        Kind::Css => omega.rows.iter().fold(0, |acc, r| acc ^ r) == 0 && transposed.rows.iter().fold(0, |acc, r| acc ^ r) == 0,
    };
    let reason = if !constraints_ok {
        Some("violates the commutation constraints".into())
    } else if !rank_ok {
        Some(alloc::format!("rank {r} does not match m = {m}"))
    } else if let Some(d) = failing_directions.first() {
        Some(alloc::format!("rank drops along direction ({},{},{})", d[0], d[1], d[2]))
    } else if !corner_product_ok {
        Some("product of corner operators is not the identity".into())
    } else {
        None
    };
    ConditionReport {
        rank: r,
        m,
        rank_ok,
        passed: reason.is_none(),
        failing_directions,
        corner_product_ok,
        constraints_ok,
        reason,
    }
}

/// Minimum over the cube symmetries (and, for CSS, transposition) under the
/// lexicographic order on rows.
pub fn canonicalize(omega: &CommutationMatrix) -> CommutationMatrix {
    canonicalize_with(omega, &symmetries())
}

fn canonicalize_with(omega: &CommutationMatrix, syms: &[[usize; 8]]) -> CommutationMatrix {
    let mut best = *omega;
    let candidates: &[CommutationMatrix] =
        if omega.kind == Kind::Css { &[*omega, omega.transpose()] } else { core::slice::from_ref(omega) };
    for c in candidates {
        for p in syms {
            let img = c.permuted(p);
            if img.rows < best.rows {
                best = img;
            }
        }
    }
    best
}

/// Number of distinct images under the symmetry group.
pub fn orbit_size(omega: &CommutationMatrix) -> usize {
    let syms = symmetries();
    let mut set = BTreeSet::new();
    let candidates: Vec<CommutationMatrix> =
        if omega.kind == Kind::Css { vec![*omega, omega.transpose()] } else { vec![*omega] };
    for c in &candidates {
        for p in &syms {
            set.insert(c.permuted(p).rows);
        }
    }
    set.len()
}

/// Generators realizing `ω` (non-CSS) on `rank(ω)/2` qubits.
pub fn realize_non_css(omega: &CommutationMatrix) -> Option<GeneratorSpec> {
    let m = omega.rank() / 2;
    if m == 0 || m > SiteOp::MAX_QUBITS {
        return None;
    }
    let p = realize_commutation_matrix(&omega.to_matrix(), &SymplecticForm::standard(m)).ok()?;
    Some(GeneratorSpec::new(core::array::from_fn(|a| {
        let col = p.column(a);
        SiteOp::from_vector_bits(m, col.iter_ones().fold(0u32, |acc, i| acc | (1 << i)))
    })))
}

/// Z- and X-type generators with `λ(Z_a, X_b) = ω'_ab` on `rank(ω')` qubits.
///
/// The X-parts are the first linearly independent rows of `ω'`; the Z-part of
/// corner `a` holds the coordinates of row `a` in that basis.
pub fn realize_css(omega: &CommutationMatrix) -> Option<(GeneratorSpec, GeneratorSpec)> {
    let mut basis: Vec<u8> = Vec::new();
    for &r in &omega.rows {
        let mut probe: Vec<u64> = basis.iter().map(|&b| u64::from(b)).collect();
        probe.push(u64::from(r));
        if rank_of_words(&probe) > basis.len() {
            basis.push(r);
        }
    }
    let m = basis.len();
    if m == 0 || m > SiteOp::MAX_QUBITS {
        return None;
    }
    let mut z = [SiteOp::identity(m); 8];
    for a in 0..8 {
        let coeffs = (0u8..(1 << m))
            .find(|c| (0..m).filter(|q| (c >> q) & 1 == 1).fold(0u8, |acc, q| acc ^ basis[q]) == omega.rows[a])?;
        z[a] = SiteOp::new(m, 0, coeffs);
    }
    let x: [SiteOp; 8] = core::array::from_fn(|b| {
        let bits = (0..m).fold(0u8, |acc, q| acc | (((basis[q] >> b) & 1) << q));
        SiteOp::new(m, bits, 0)
    });
    Some((GeneratorSpec::new(z), GeneratorSpec::new(x)))
}

/// One equivalence class found by the enumeration.
#[derive(Clone, Debug)]
pub struct CodeClass {
    pub omega: CommutationMatrix,
    pub m: usize,
    pub orbit_size: usize,
    pub code: CubicCode,
    /// For CSS classes: whether the realized X generator equals the dual of
    /// the realized Z generator.
    pub dual_consistent: bool,
    /// Catalog code with the same canonical form.
    pub table_id: Option<u8>,
    pub report: ConditionReport,
}

/// Canonical form of each catalog code's commutation matrix.
pub fn table_canonical_forms() -> BTreeMap<CommutationMatrix, u8> {
    CubicCode::table_all()
        .iter()
        .map(|c| (canonicalize(&CommutationMatrix::of_code(c)), c.id.expect("catalog id")))
        .collect()
}

/// Fast condition test on raw rows, used inside the enumeration loops.
fn passes_fast(rows: &[u8; 8], kind: Kind, target: usize, dirs: &[DirectionMatrix]) -> bool {
    let words = |v: &[u8]| -> Vec<u64> { v.iter().map(|&x| u64::from(x)).collect() };
    if rank_of_words(&words(rows)) != target {
        return false;
    }
    let t = transpose8(rows);
    if kind == Kind::Css && (rows.iter().fold(0, |a, r| a ^ r) != 0 || t.iter().fold(0, |a, r| a ^ r) != 0) {
        return false;
    }
    dirs.iter().all(|d| {
        rank_of_words(&words(&d.apply(rows))) == target
            && (kind == Kind::NonCss || rank_of_words(&words(&d.apply(&t))) == target)
    })
}

/// All equivalence classes of valid commutation matrices for `m` qubits per site.
pub fn enumerate_codes(kind: Kind, m: usize) -> Vec<CodeClass> {
    let dirs = direction_matrices();
    let syms = symmetries();
    let mut found: BTreeSet<CommutationMatrix> = BTreeSet::new();
    match kind {
        Kind::NonCss => {
            let system = constraint_system(kind);
            let basis = system.solution_basis();
            // Gray-code walk over the solution space.
            let mut cur = [0u8; 8];
            for step in 1u64..(1u64 << basis.len()) {
                let flip = step.trailing_zeros() as usize;
                for a in 0..8 {
                    cur[a] ^= basis[flip].rows[a];
                }
                if passes_fast(&cur, kind, 2 * m, &dirs) {
                    found.insert(canonicalize_with(&CommutationMatrix::new(kind, cur), &syms));
                }
            }
        }
        Kind::Css => {
            for (spanning, _) in column_spaces(m) {
                for w in css_coefficients(&spanning) {
                    let rows: [u8; 8] = core::array::from_fn(|a| {
                        spanning.iter().zip(&w).filter(|(u, _)| (*u >> a) & 1 == 1).fold(0u8, |acc, (_, wq)| acc ^ wq)
                    });
                    if passes_fast(&rows, kind, m, &dirs) {
                        found.insert(canonicalize_with(&CommutationMatrix::new(kind, rows), &syms));
                    }
                }
            }
        }
    }
    let table = table_canonical_forms();
    found.into_iter().filter_map(|omega| build_class(omega, m, &table)).collect()
}

fn build_class(omega: CommutationMatrix, m: usize, table: &BTreeMap<CommutationMatrix, u8>) -> Option<CodeClass> {
    let report = check_conditions(&omega, m);
    let table_id = table.get(&omega).copied();
    let (code, dual_consistent) = match omega.kind {
        Kind::NonCss => (CubicCode::non_css("enumerated", realize_non_css(&omega)?), true),
        Kind::Css => {
            let (qz, qx) = realize_css(&omega)?;
            let consistent = qz.m() == 2 && css_dual_generator(&qz) == qx;
            let code = if consistent {
                CubicCode::css("enumerated", qz)
            } else {
                CubicCode { name: "enumerated".into(), id: None, css: true, generators: vec![qz, qx] }
            };
            (code, consistent)
        }
    };
    let mut code = code;
    if let Some(id) = table_id {
        code.name = alloc::format!("Code {id}");
        code.id = Some(id);
    }
    Some(CodeClass { omega, m, orbit_size: orbit_size(&omega), code, dual_consistent, table_id, report })
}

/// Subspaces of F2^8 of dimension `d` as reduced bases, each with one
/// spanning list. The column space of a rank-`d` `ω'` is one of these.
fn column_spaces(d: usize) -> Vec<(Vec<u8>, ())> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut stack: Vec<(Vec<u8>, u16)> = vec![(Vec::new(), 1)];
    while let Some((basis, next)) = stack.pop() {
        if basis.len() == d {
            let key = reduced_basis(&basis);
            if seen.insert(key.clone()) {
                out.push((key, ()));
            }
            continue;
        }
        for v in next..256 {
            let v = v as u8;
            let mut probe: Vec<u64> = basis.iter().map(|&b| u64::from(b)).collect();
            probe.push(u64::from(v));
            if rank_of_words(&probe) == basis.len() + 1 {
                let mut nb = basis.clone();
                nb.push(v);
                stack.push((nb, u16::from(v) + 1));
            }
        }
    }
    out.sort();
    out
}

fn reduced_basis(basis: &[u8]) -> Vec<u8> {
    let mut rows: Vec<u8> = basis.to_vec();
    let mut out: Vec<u8> = Vec::new();
    for bit in (0..8).rev() {
        if let Some(i) = rows.iter().position(|r| (r >> bit) & 1 == 1) {
            let p = rows.remove(i);
            for r in rows.iter_mut().chain(out.iter_mut()) {
                if (*r >> bit) & 1 == 1 {
                    *r ^= p;
                }
            }
            out.push(p);
        }
    }
    out
}

/// All coefficient tuples `(w_1..w_d)` such that `ω' = Σ_q u_q w_q^T`
/// satisfies the CSS constraints and has rank `d`.
fn css_coefficients(spanning: &[u8]) -> Vec<Vec<u8>> {
    let d = spanning.len();
    let n = 8 * d;
    let mut eqs = BinaryMatrix::with_cols(n);
    for (_, pairs) in offset_pairs() {
        let mut ones = Vec::new();
        for &(a, b) in &pairs {
            for (q, u) in spanning.iter().enumerate() {
                if (u >> a) & 1 == 1 {
                    ones.push(q * 8 + b);
                }
            }
        }
        eqs.push_sparse_row(ones);
    }
    let ker = kernel(&eqs);
    let packed: Vec<u64> =
        ker.iter().map(|v| v.iter_ones().fold(0u64, |acc, i| acc | (1u64 << i))).collect();
    let mut out = Vec::new();
    let mut cur = 0u64;
    for step in 1u64..(1u64 << packed.len()) {
        cur ^= packed[step.trailing_zeros() as usize];
        let w: Vec<u8> = (0..d).map(|q| ((cur >> (8 * q)) & 0xff) as u8).collect();
        if rank_of_words(&w.iter().map(|&x| u64::from(x)).collect::<Vec<_>>()) == d {
            out.push(w);
        }
    }
    out
}

/// Status of one member of the square-lattice family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareVerdict {
    Rejected,
    /// One qubit per site, equivalent to the rotated toric code.
    ToricCode,
    /// Two qubits per site splitting into two decoupled toric codes.
    TwoCopies,
    Other,
}

#[derive(Clone, Debug)]
pub struct SquareEntry {
    pub i: bool,
    pub j: bool,
    pub omega: [u8; 4],
    pub rank: usize,
    pub m: usize,
    pub realization: Option<[SiteOp; 4]>,
    /// The realization satisfies `P^T λ P = ω`.
    pub realization_ok: bool,
    pub verdict: SquareVerdict,
}

#[derive(Clone, Debug)]
pub struct SquareReport {
    /// Dimension of the solution space of the commutation constraints.
    pub family_dimension: usize,
    /// The solutions are exactly the matrices parameterized by `(i, j)`.
    pub family_matches: bool,
    pub entries: Vec<SquareEntry>,
}

/// Corner `k` of a square sits at `(k & 1, k >> 1)`; the inversion partner is `3 - k`.
pub const SQUARE_CORNERS: [[i64; 2]; 4] = [[0, 0], [1, 0], [0, 1], [1, 1]];

/// The four-corner commutation matrix with `ω_01 = ω_23 = i` (x-adjacent
/// corners) and `ω_02 = ω_13 = j` (y-adjacent corners).
pub fn square_omega(i: bool, j: bool) -> [u8; 4] {
    let (i, j) = (u8::from(i), u8::from(j));
    [i << 1 | j << 2, i | j << 3, j | i << 3, j << 1 | i << 2]
}

/// Commutation constraints for a square generator and its inversion on Z^2.
pub fn square_constraints() -> BinaryMatrix {
    let vars: Vec<(usize, usize)> = (0..4).flat_map(|a| ((a + 1)..4).map(move |b| (a, b))).collect();
    let idx = |a: usize, b: usize| vars.iter().position(|&v| v == (a.min(b), a.max(b)));
    let mut eqs = BinaryMatrix::with_cols(vars.len());
    for dx in -1..=1i64 {
        for dy in -1..=1i64 {
            for inv_l in [false, true] {
                for inv_r in [false, true] {
                    let mut row = BTreeSet::new();
                    for a in 0..4 {
                        for b in 0..4 {
                            let d = [SQUARE_CORNERS[a][0] - SQUARE_CORNERS[b][0], SQUARE_CORNERS[a][1] - SQUARE_CORNERS[b][1]];
                            if d != [dx, dy] {
                                continue;
                            }
                            let ca = if inv_l { 3 - a } else { a };
                            let cb = if inv_r { 3 - b } else { b };
                            if ca != cb {
                                let k = idx(ca, cb).expect("pair");
                                if !row.remove(&k) {
                                    row.insert(k);
                                }
                            }
                        }
                    }
                    if !row.is_empty() {
                        eqs.push_sparse_row(row);
                    }
                }
            }
        }
    }
    eqs
}

/// Classifies the square-lattice analogue: every solution of the constraints,
/// its rank, and a realization.
pub fn enumerate_2d() -> SquareReport {
    let eqs = square_constraints();
    let basis = kernel(&eqs);
    let vars: Vec<(usize, usize)> = (0..4).flat_map(|a| ((a + 1)..4).map(move |b| (a, b))).collect();
    let to_rows = |v: &crate::f2::BinaryVector| -> [u8; 4] {
        let mut rows = [0u8; 4];
        for k in v.iter_ones() {
            let (a, b) = vars[k];
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        rows
    };
    let mut solutions = BTreeSet::new();
    for mask in 0u32..(1 << basis.len()) {
        let mut v = crate::f2::BinaryVector::zeros(vars.len());
        for (k, b) in basis.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                v.xor_assign(b);
            }
        }
        solutions.insert(to_rows(&v));
    }
    let family: BTreeSet<[u8; 4]> =
        [(false, false), (true, false), (false, true), (true, true)].iter().map(|&(i, j)| square_omega(i, j)).collect();
    let mut entries = Vec::new();
    for (i, j) in [(false, false), (true, true), (true, false), (false, true)] {
        let omega = square_omega(i, j);
        let words: Vec<u64> = omega.iter().map(|&r| u64::from(r)).collect();
        let r = rank_of_words(&words);
        let m = r / 2;
        let mat = BinaryMatrix::from_fn(4, 4, |a, b| (omega[a] >> b) & 1 == 1);
        let realization = if m > 0 {
            realize_commutation_matrix(&mat, &SymplecticForm::standard(m)).ok().map(|p| {
                core::array::from_fn(|a| {
                    let col = p.column(a);
                    SiteOp::from_vector_bits(m, col.iter_ones().fold(0u32, |acc, k| acc | (1 << k)))
                })
            })
        } else {
            None
        };
        let realization_ok = realization.is_some_and(|ops: [SiteOp; 4]| square_rows(&ops) == omega);
        let verdict = match m {
            0 => SquareVerdict::Rejected,
            1 => SquareVerdict::ToricCode,
            2 if two_copies_structure(i, j) => SquareVerdict::TwoCopies,
            _ => SquareVerdict::Other,
        };
        entries.push(SquareEntry { i, j, omega, rank: r, m, realization, realization_ok, verdict });
    }
    SquareReport { family_dimension: basis.len(), family_matches: solutions == family, entries }
}

/// `λ(s_a, s_b)` for a square generator.
pub fn square_rows(ops: &[SiteOp; 4]) -> [u8; 4] {
    core::array::from_fn(|a| (0..4).fold(0u8, |acc, b| acc | (u8::from(ops[a].lambda(ops[b])) << b)))
}

/// The two-qubit realization of the `(1,0)` member, as drawn for the
/// square-lattice derivation, or its 90° rotation for `(0,1)`.
pub fn square_two_qubit_realization(i: bool, j: bool) -> Option<[SiteOp; 4]> {
    let p = |s: &str| SiteOp::parse(s).expect("literal");
    match (i, j) {
        (true, false) => Some([p("IZ"), p("IX"), p("XI"), p("ZI")]),
        // rotate by 90°: the corner at (x, y) moves to (1 - y, x)
        (false, true) => Some([p("XI"), p("IZ"), p("ZI"), p("IX")]),
        _ => None,
    }
}

/// Checks that the drawn realization commutes as `ω(i, j)` and that qubit 1
/// on rows of one parity only meets qubit 2 on rows of the other parity, so
/// the generators split by the parity of `row + qubit`.
pub fn two_copies_structure(i: bool, j: bool) -> bool {
    let Some(s) = square_two_qubit_realization(i, j) else { return false };
    if square_rows(&s) != square_omega(i, j) {
        return false;
    }
    let inv: [SiteOp; 4] = core::array::from_fn(|k| s[3 - k]);
    // The "row" coordinate runs perpendicular to the lines of equal parity.
    let row_axis = if i { 1 } else { 0 };
    [s, inv].iter().all(|g| {
        let classes: BTreeSet<i64> = (0..4)
            .flat_map(|k| {
                (0..2).filter(move |q| (g[k].x() | g[k].z()) >> q & 1 == 1).map(move |q| (SQUARE_CORNERS[k][row_axis] + q as i64).rem_euclid(2))
            })
            .collect();
        classes.len() == 1
    })
}

/// Number of connected qubit classes of a square-lattice code on the `L × L`
/// torus, joining qubits that share a generator placement.
pub fn square_qubit_components(gens: &[[SiteOp; 4]], l: usize) -> usize {
    let m = gens[0][0].m();
    let n = l * l * m;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let li = l as i64;
    for g in gens {
        for x in 0..li {
            for y in 0..li {
                let mut touched = Vec::new();
                for (k, c) in SQUARE_CORNERS.iter().enumerate() {
                    for q in 0..m {
                        if (g[k].x() | g[k].z()) >> q & 1 == 1 {
                            let sx = (x + c[0]).rem_euclid(li) as usize;
                            let sy = (y + c[1]).rem_euclid(li) as usize;
                            touched.push((sy * l + sx) * m + q);
                        }
                    }
                }
                for w in touched.windows(2) {
                    let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                    parent[a] = b;
                }
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Per-site symplectic maps `S` (as column lists) with `S(a_k) = b_k` for all corners.
pub fn square_site_equivalence(a: &[SiteOp; 4], b: &[SiteOp; 4]) -> Option<[u32; 2]> {
    for c0 in 1u32..4 {
        for c1 in 1u32..4 {
            if c0 == c1 {
                continue;
            }
            let cols = [c0, c1];
            if (0..4).all(|k| a[k].transform(&cols) == b[k]) {
                return Some(cols);
            }
        }
    }
    None
}
