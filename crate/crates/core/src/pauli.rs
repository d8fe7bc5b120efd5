//! Pauli operators on Z^3 and on periodic lattices Z_L^3.
//!
//! A site operator on `m` qubits is the vector `(x_1..x_m | z_1..z_m)` and
//! stands for `X^x Z^z`, qubit by qubit. In the two-letter notation the first
//! letter is qubit 1, so `XZ` is `(1,0 | 0,1)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::error::PauliError;

pub type Site = [i64; 3];

/// `X^x Z^z` on `m <= 4` qubits; bit `q` of `x`/`z` is qubit `q + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SiteOp {
    m: u8,
    x: u8,
    z: u8,
}

impl SiteOp {
    pub const MAX_QUBITS: usize = 4;

    pub fn new(m: usize, x: u8, z: u8) -> Self {
        assert!((1..=Self::MAX_QUBITS).contains(&m), "unsupported qubit count {m}");
        let mask = ((1u16 << m) - 1) as u8;
        assert!(x & !mask == 0 && z & !mask == 0, "bits beyond qubit {m}");
        Self { m: m as u8, x, z }
    }

    pub fn identity(m: usize) -> Self {
        Self::new(m, 0, 0)
    }

    /// Parses letters `I X Y Z`, one per qubit.
    pub fn parse(s: &str) -> Result<Self, PauliError> {
        let mut x = 0u8;
        let mut z = 0u8;
        let mut m = 0usize;
        for (q, c) in s.chars().enumerate() {
            if q >= Self::MAX_QUBITS {
                return Err(PauliError::parse(q + 1, "too many qubits in site operator"));
            }
            match c {
                'I' => {}
                'X' => x |= 1 << q,
                'Y' => {
                    x |= 1 << q;
                    z |= 1 << q;
                }
                'Z' => z |= 1 << q,
                other => return Err(PauliError::parse(q + 1, alloc::format!("unexpected '{other}' in site operator"))),
            }
            m = q + 1;
        }
        if m == 0 {
            return Err(PauliError::parse(1, "empty site operator"));
        }
        Ok(Self::new(m, x, z))
    }

    /// From the packed vector `(x_1..x_m | z_1..z_m)`, bit `i` = coordinate `i`.
    pub fn from_vector_bits(m: usize, v: u32) -> Self {
        let mask = (1u32 << m) - 1;
        Self::new(m, (v & mask) as u8, ((v >> m) & mask) as u8)
    }

    pub fn vector_bits(&self) -> u32 {
        u32::from(self.x) | (u32::from(self.z) << self.m)
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn x(&self) -> u8 {
        self.x
    }

    #[inline]
    pub fn z(&self) -> u8 {
        self.z
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn is_z_type(&self) -> bool {
        self.x == 0
    }

    pub fn is_x_type(&self) -> bool {
        self.z == 0
    }

    /// Number of `Y` letters.
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    #[inline]
    #[must_use]
    pub fn mul(self, other: SiteOp) -> SiteOp {
        debug_assert_eq!(self.m, other.m);
        SiteOp { m: self.m, x: self.x ^ other.x, z: self.z ^ other.z }
    }

    /// Symplectic product without the qubit-count check.
    #[inline]
    pub fn lambda(self, other: SiteOp) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones() & 1 == 1
    }

    /// Exchanges qubits 1 and 2 of a two-qubit operator.
    #[must_use]
    pub fn swap_qubits(self) -> SiteOp {
        assert_eq!(self.m, 2, "qubit swap needs two qubits");
        let sw = |b: u8| ((b & 1) << 1) | ((b >> 1) & 1);
        SiteOp { m: 2, x: sw(self.x), z: sw(self.z) }
    }

    /// The X-type operator whose X-part is this operator's Z-part.
    #[must_use]
    pub fn z_to_x(self) -> SiteOp {
        SiteOp { m: self.m, x: self.z, z: 0 }
    }

    /// Applies a linear map on the packed vector, given as `2m` columns.
    #[must_use]
    pub fn transform(self, columns: &[u32]) -> SiteOp {
        let v = self.vector_bits();
        let mut out = 0u32;
        for (i, c) in columns.iter().enumerate() {
            if (v >> i) & 1 == 1 {
                out ^= c;
            }
        }
        SiteOp::from_vector_bits(self.m(), out)
    }

    pub fn all(m: usize) -> impl Iterator<Item = SiteOp> {
        (0..(1u32 << (2 * m))).map(move |v| SiteOp::from_vector_bits(m, v))
    }
}

impl fmt::Display for SiteOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.m {
            let c = match ((self.x >> q) & 1, (self.z >> q) & 1) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (1, 1) => 'Y',
                _ => 'Z',
            };
            f.write_char(c)?;
        }
        Ok(())
    }
}

/// `λ(a, b)`: whether the two site operators anticommute.
pub fn commutes(a: SiteOp, b: SiteOp) -> Result<bool, PauliError> {
    if a.m != b.m {
        return Err(PauliError::QubitMismatch { left: a.m(), right: b.m() });
    }
    Ok(a.lambda(b))
}

/// Powers of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_power(k: u32) -> Phase {
        Phase((k % 4) as u8)
    }

    pub fn power(self) -> u8 {
        self.0
    }

    #[must_use]
    pub fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["+1", "+i", "-1", "-i"][self.0 as usize])
    }
}

/// Finite-support Pauli operator with a phase tag.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliOperator {
    m: usize,
    support: BTreeMap<Site, SiteOp>,
    phase: Phase,
}

impl PauliOperator {
    pub fn identity(m: usize) -> Self {
        Self { m, support: BTreeMap::new(), phase: Phase::ONE }
    }

    pub fn single(site: Site, op: SiteOp) -> Self {
        let mut o = Self::identity(op.m());
        o.mul_site(site, op);
        o
    }

    pub fn from_sites(m: usize, sites: impl IntoIterator<Item = (Site, SiteOp)>) -> Self {
        let mut o = Self::identity(m);
        for (s, op) in sites {
            o.mul_site(s, op);
        }
        o
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn set_phase(&mut self, phase: Phase) {
        self.phase = phase;
    }

    pub fn get(&self, site: &Site) -> SiteOp {
        self.support.get(site).copied().unwrap_or(SiteOp::identity(self.m))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Site, &SiteOp)> {
        self.support.iter()
    }

    pub fn sites(&self) -> impl Iterator<Item = &Site> {
        self.support.keys()
    }

    /// Number of sites acted on nontrivially.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty()
    }

    /// Multiplies `op` onto one site, ignoring phases.
    pub fn mul_site(&mut self, site: Site, op: SiteOp) {
        assert_eq!(op.m(), self.m, "qubit count mismatch");
        if op.is_identity() {
            return;
        }
        let cur = self.get(&site).mul(op);
        if cur.is_identity() {
            self.support.remove(&site);
        } else {
            self.support.insert(site, cur);
        }
    }

    /// Multiplies `op` from the right onto one site, tracking the phase.
    pub fn mul_site_with_phase(&mut self, site: Site, op: SiteOp) {
        let cur = self.get(&site);
        // (X^a Z^b)(X^c Z^d) = (-1)^{b·c} X^{a+c} Z^{b+d}
        if (cur.z & op.x).count_ones() & 1 == 1 {
            self.phase = self.phase.mul(Phase::MINUS_ONE);
        }
        self.mul_site(site, op);
    }

    /// Abelianized product: sitewise XOR, phase of `self` kept.
    #[must_use]
    pub fn multiply(&self, other: &PauliOperator) -> PauliOperator {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &PauliOperator) {
        assert_eq!(self.m, other.m, "qubit count mismatch");
        for (s, op) in &other.support {
            self.mul_site(*s, *op);
        }
    }

    /// Product `self · other` with exact phase.
    #[must_use]
    pub fn multiply_with_phase(&self, other: &PauliOperator) -> PauliOperator {
        assert_eq!(self.m, other.m, "qubit count mismatch");
        let mut out = self.clone();
        out.phase = out.phase.mul(other.phase);
        for (s, op) in &other.support {
            out.mul_site_with_phase(*s, *op);
        }
        out
    }

    /// Whether the two operators anticommute.
    pub fn anticommutes(&self, other: &PauliOperator) -> bool {
        let (small, large) = if self.weight() <= other.weight() { (self, other) } else { (other, self) };
        let mut parity = false;
        for (s, op) in &small.support {
            if let Some(o) = large.support.get(s) {
                parity ^= op.lambda(*o);
            }
        }
        parity
    }

    #[must_use]
    pub fn translate(&self, by: Site) -> PauliOperator {
        PauliOperator {
            m: self.m,
            support: self.support.iter().map(|(s, op)| ([s[0] + by[0], s[1] + by[1], s[2] + by[2]], *op)).collect(),
            phase: self.phase,
        }
    }

    /// Coordinates reduced into `[0, L)`; colliding sites multiply.
    #[must_use]
    pub fn reduce_mod(&self, l: usize) -> PauliOperator {
        let mut out = PauliOperator::identity(self.m);
        out.phase = self.phase;
        for (s, op) in &self.support {
            out.mul_site(reduce_site(*s, l), *op);
        }
        out
    }

    /// Restriction to the sites accepted by `keep`.
    #[must_use]
    pub fn restrict(&self, mut keep: impl FnMut(&Site) -> bool) -> PauliOperator {
        PauliOperator {
            m: self.m,
            support: self.support.iter().filter(|(s, _)| keep(s)).map(|(s, o)| (*s, *o)).collect(),
            phase: Phase::ONE,
        }
    }

    /// Smallest axis-aligned box `(min, max)` containing the support.
    pub fn bounding_box(&self) -> Option<(Site, Site)> {
        let mut it = self.support.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for s in it {
            for i in 0..3 {
                lo[i] = lo[i].min(s[i]);
                hi[i] = hi[i].max(s[i]);
            }
        }
        Some((lo, hi))
    }

    /// Erases the phase.
    #[must_use]
    pub fn abelianized(&self) -> PauliOperator {
        let mut o = self.clone();
        o.phase = Phase::ONE;
        o
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase.power() {
            0 => {}
            1 => f.write_str("i ")?,
            2 => f.write_str("- ")?,
            _ => f.write_str("-i ")?,
        }
        if self.support.is_empty() {
            return f.write_str("I");
        }
        for (k, (s, op)) in self.support.iter().enumerate() {
            if k > 0 {
                f.write_char(' ')?;
            }
            write!(f, "{op}({},{},{})", s[0], s[1], s[2])?;
        }
        Ok(())
    }
}

pub fn reduce_site(s: Site, l: usize) -> Site {
    let l = l as i64;
    [s[0].rem_euclid(l), s[1].rem_euclid(l), s[2].rem_euclid(l)]
}

/// `E[v]_p`: `E` on every site `p + n v`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LineOperator {
    pub e: SiteOp,
    pub v: Site,
    pub p: Site,
}

impl LineOperator {
    pub fn new(e: SiteOp, v: Site, p: Site) -> Self {
        assert!(v != [0, 0, 0], "line direction must be nonzero");
        Self { e, v, p }
    }

    /// Whether consecutive sites are lattice neighbours in the sup norm.
    pub fn has_period_one(&self) -> bool {
        self.v.iter().map(|c| c.abs()).max() == Some(1)
    }

    /// The closed line on `Z_L^3`.
    pub fn on_lattice(&self, l: usize) -> PauliOperator {
        let mut seen = BTreeMap::new();
        let mut n = 0i64;
        loop {
            let s = reduce_site([self.p[0] + n * self.v[0], self.p[1] + n * self.v[1], self.p[2] + n * self.v[2]], l);
            if seen.insert(s, self.e).is_some() {
                break;
            }
            n += 1;
        }
        PauliOperator { m: self.e.m(), support: seen, phase: Phase::ONE }
    }

    /// The `n` sites `p, p + v, ..., p + (n-1) v` on the infinite lattice.
    pub fn segment(&self, n: usize) -> PauliOperator {
        let n = n as i64;
        PauliOperator::from_sites(
            self.e.m(),
            (0..n).map(|k| ([self.p[0] + k * self.v[0], self.p[1] + k * self.v[1], self.p[2] + k * self.v[2]], self.e)),
        )
    }
}

impl fmt::Display for LineOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]{}", self.e, direction_text(self.v), site_text(self.p))
    }
}

/// `sigma[a,b,c]_E(p)`: `E` on every site `x` with `(a,b,c)·(x - p) = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlaneOperator {
    pub e: SiteOp,
    pub normal: Site,
    pub anchor: Site,
}

impl PlaneOperator {
    pub fn new(e: SiteOp, normal: Site, anchor: Site) -> Self {
        assert!(normal != [0, 0, 0], "plane normal must be nonzero");
        Self { e, normal, anchor }
    }

    pub fn contains(&self, x: Site, l: usize) -> bool {
        let d: i64 = (0..3).map(|i| self.normal[i] * (x[i] - self.anchor[i])).sum();
        d.rem_euclid(l as i64) == 0
    }

    pub fn on_lattice(&self, l: usize) -> PauliOperator {
        let li = l as i64;
        let mut o = PauliOperator::identity(self.e.m());
        for x in 0..li {
            for y in 0..li {
                for z in 0..li {
                    if self.contains([x, y, z], l) {
                        o.mul_site([x, y, z], self.e);
                    }
                }
            }
        }
        o
    }
}

impl fmt::Display for PlaneOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normal;
        write!(f, "sigma[{},{},{}]_{}{}", n[0], n[1], n[2], self.e, site_text(self.anchor))
    }
}

fn direction_text(v: Site) -> String {
    match v {
        [1, 0, 0] => "x".into(),
        [0, 1, 0] => "y".into(),
        [0, 0, 1] => "z".into(),
        _ => alloc::format!("{},{},{}", v[0], v[1], v[2]),
    }
}

fn site_text(p: Site) -> String {
    alloc::format!("({},{},{})", p[0], p[1], p[2])
}

/// One factor of an operator expression.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Term {
    Site(Site, SiteOp),
    Line(LineOperator),
    Plane(PlaneOperator),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Site(p, e) => write!(f, "{e}{}", site_text(*p)),
            Term::Line(l) => l.fmt(f),
            Term::Plane(p) => p.fmt(f),
        }
    }
}

/// Product of terms, e.g. `ZZ[z](0,0,0) ZI[z](1,0,0)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Expression {
    pub terms: Vec<Term>,
}

impl Expression {
    pub fn m(&self) -> Option<usize> {
        self.terms.first().map(|t| match t {
            Term::Site(_, e) => e.m(),
            Term::Line(l) => l.e.m(),
            Term::Plane(p) => p.e.m(),
        })
    }

    /// The operator on `Z_L^3`, sites reduced mod `L`.
    pub fn on_lattice(&self, l: usize, m: usize) -> PauliOperator {
        let mut o = PauliOperator::identity(m);
        for t in &self.terms {
            match t {
                Term::Site(p, e) => o.mul_site(reduce_site(*p, l), *e),
                Term::Line(line) => o.mul_assign(&line.on_lattice(l)),
                Term::Plane(pl) => o.mul_assign(&pl.on_lattice(l)),
            }
        }
        o
    }

    /// Finite operators only: planes and lines are rejected.
    pub fn to_finite(&self, m: usize) -> Option<PauliOperator> {
        let mut o = PauliOperator::identity(m);
        for t in &self.terms {
            match t {
                Term::Site(p, e) => o.mul_site(*p, *e),
                _ => return None,
            }
        }
        Some(o)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("I");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_char(' ')?;
            }
            t.fmt(f)?;
        }
        Ok(())
    }
}

/// Parses an operator expression.
///
/// Accepted forms, separated by spaces or `*`:
/// `ZI(1,0,0)`, `ZZ[z](0,0,0)`, `ZZ[1,0,-1]_(0,0,1)`, compact `ZZ[101](000)`,
/// and planes `sigma[0,1,0]_IX(0,0,0)` or `σ^{[010]}_{IX}(000)`. A missing
/// position means the origin. The bare word `I` is the identity.
pub fn parse_expression(text: &str) -> Result<Expression, PauliError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let mut terms = Vec::new();
    let mut m: Option<usize> = None;
    loop {
        p.skip_separators();
        if p.done() {
            break;
        }
        let start = p.pos;
        let term = p.term()?;
        let tm = match &term {
            Some(Term::Site(_, e)) => Some(e.m()),
            Some(Term::Line(l)) => Some(l.e.m()),
            Some(Term::Plane(pl)) => Some(pl.e.m()),
            None => None,
        };
        if let Some(tm) = tm {
            match m {
                Some(m0) if m0 != tm => {
                    return Err(PauliError::parse(start + 1, "terms act on different numbers of qubits"));
                }
                _ => m = Some(tm),
            }
        }
        terms.extend(term);
    }
    Ok(Expression { terms })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PauliError> {
        Err(PauliError::parse(self.pos + 1, msg))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PauliError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(alloc::format!("expected '{c}'"))
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == '*' || c == '·' || c == '⊗') {
            self.pos += 1;
        }
    }

    fn starts_with(&self, word: &str) -> bool {
        word.chars().enumerate().all(|(i, c)| self.chars.get(self.pos + i) == Some(&c))
    }

    fn term(&mut self) -> Result<Option<Term>, PauliError> {
        if self.starts_with("sigma") {
            self.pos += 5;
            return self.plane().map(Some);
        }
        if self.eat('σ') {
            return self.plane().map(Some);
        }
        let label_start = self.pos;
        let e = self.site_op()?;
        if e.m() == 1 && e.is_identity() && !matches!(self.peek(), Some('[' | '(' | '_')) {
            // bare "I": identity factor
            let _ = label_start;
            return Ok(None);
        }
        if self.peek() == Some('[') {
            let v = self.vector(true)?;
            if v == [0, 0, 0] {
                return self.err("line direction must be nonzero");
            }
            let p = self.optional_position()?;
            return Ok(Some(Term::Line(LineOperator::new(e, v, p))));
        }
        let p = self.optional_position()?;
        Ok(Some(Term::Site(p, e)))
    }

    fn plane(&mut self) -> Result<Term, PauliError> {
        self.eat('^');
        let braced = self.eat('{');
        let normal = self.vector(false)?;
        if braced {
            self.expect('}')?;
        }
        if normal == [0, 0, 0] {
            return self.err("plane normal must be nonzero");
        }
        self.expect('_')?;
        let braced = self.eat('{');
        let e = self.site_op()?;
        if braced {
            self.expect('}')?;
        }
        let p = self.optional_position()?;
        Ok(Term::Plane(PlaneOperator::new(e, normal, p)))
    }

    fn site_op(&mut self) -> Result<SiteOp, PauliError> {
        let start = self.pos;
        while matches!(self.peek(), Some('I' | 'X' | 'Y' | 'Z')) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a site operator such as ZI");
        }
        if let Some(c) = self.peek().filter(|c| c.is_alphanumeric()) {
            return self.err(alloc::format!("unexpected '{c}' in site operator"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        SiteOp::parse(&s).map_err(|e| match e {
            PauliError::Parse { column, message } => PauliError::parse(start + column, message),
            other => other,
        })
    }

    fn optional_position(&mut self) -> Result<Site, PauliError> {
        let underscore = self.eat('_');
        if self.peek() == Some('(') {
            self.triple('(', ')', false)
        } else if underscore {
            self.err("expected '(' after '_'")
        } else {
            Ok([0, 0, 0])
        }
    }

    fn vector(&mut self, axes: bool) -> Result<Site, PauliError> {
        self.triple('[', ']', axes)
    }

    /// `open a,b,c close`, `open abc close` (single digits), or an axis letter.
    fn triple(&mut self, open: char, close: char, axes: bool) -> Result<Site, PauliError> {
        self.expect(open)?;
        if axes {
            let axis = match self.peek() {
                Some('x') => Some([1, 0, 0]),
                Some('y') => Some([0, 1, 0]),
                Some('z') => Some([0, 0, 1]),
                _ => None,
            };
            if let Some(v) = axis {
                self.pos += 1;
                self.eat('\u{302}');
                self.expect(close)?;
                return Ok(v);
            }
        }
        let start = self.pos;
        let Some(end) = self.chars[start..].iter().position(|&c| c == close).map(|k| start + k) else {
            return self.err(alloc::format!("missing '{close}'"));
        };
        let body: String = self.chars[start..end].iter().filter(|c| !c.is_whitespace()).collect();
        let mut out = [0i64; 3];
        if body.contains(',') {
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 3 {
                return self.err("expected three comma-separated integers");
            }
            for (i, part) in parts.iter().enumerate() {
                out[i] = part
                    .replace('−', "-")
                    .parse()
                    .map_err(|_| PauliError::parse(start + 1, alloc::format!("bad integer '{part}'")))?;
            }
        } else {
            let mut k = 0;
            let mut neg = false;
            for c in body.chars() {
                match c {
                    '-' | '−' if !neg => neg = true,
                    d if d.is_ascii_digit() && k < 3 => {
                        let v = i64::from(d as u8 - b'0');
                        out[k] = if neg { -v } else { v };
                        neg = false;
                        k += 1;
                    }
                    _ => return Err(PauliError::parse(start + 1, alloc::format!("bad coordinates '{body}'"))),
                }
            }
            if k != 3 || neg {
                return Err(PauliError::parse(start + 1, alloc::format!("expected three coordinates in '{body}'")));
            }
        }
        self.pos = end + 1;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> SiteOp {
        SiteOp::parse(s).unwrap()
    }

    #[test]
    fn single_qubit_x_z_anticommute() {
        assert_eq!(commutes(op("X"), op("Z")), Ok(true));
        assert_eq!(commutes(op("XI"), op("IZ")), Ok(false));
        assert!(commutes(op("X"), op("XI")).is_err());
    }

    #[test]
    fn xz_squared_is_minus_identity() {
        let a = PauliOperator::single([0, 0, 0], op("Y"));
        let p = a.multiply_with_phase(&a);
        assert!(p.is_identity());
        assert_eq!(p.phase(), Phase::MINUS_ONE);
        let x = PauliOperator::single([0, 0, 0], op("X"));
        let q = x.multiply_with_phase(&x);
        assert!(q.is_identity());
        assert_eq!(q.phase(), Phase::ONE);
    }

    #[test]
    fn parse_and_print_roundtrip() {
        for text in [
            "ZZ[z](0,0,0) ZI[z](1,0,0)",
            "ZZ[1,0,-1](0,0,1)",
            "sigma[0,1,0]_IX(0,0,0)",
            "XI(1,2,3)",
        ] {
            let e = parse_expression(text).unwrap();
            assert_eq!(alloc::format!("{e}"), text);
        }
    }

    #[test]
    fn compact_forms() {
        let a = parse_expression("ZZ[101](000) IZ[101](100)").unwrap();
        let b = parse_expression("ZZ[1,0,1](0,0,0) IZ[1,0,1](1,0,0)").unwrap();
        assert_eq!(a, b);
        let c = parse_expression("σ^{[010]}_{IX}(000)").unwrap();
        assert_eq!(c, parse_expression("sigma[0,1,0]_IX(0,0,0)").unwrap());
        assert_eq!(parse_expression("XI[x̂](000)").unwrap(), parse_expression("XI[x](0,0,0)").unwrap());
    }

    #[test]
    fn parse_errors_carry_columns() {
        match parse_expression("ZZ(0,0,0) ZQ(1,0,0)") {
            Err(PauliError::Parse { column, .. }) => assert_eq!(column, 12),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_expression("ZZ(0,0)").is_err());
        assert!(parse_expression("ZZ(0,0,0) Z(1,0,0)").is_err());
    }

    #[test]
    fn line_wraps_with_period_l() {
        let l = LineOperator::new(op("ZZ"), [1, 0, -1], [0, 0, 0]);
        assert!(l.has_period_one());
        assert_eq!(l.on_lattice(5).weight(), 5);
    }

    #[test]
    fn plane_has_l_squared_sites() {
        let p = PlaneOperator::new(op("ZZ"), [1, -1, 0], [0, 0, 0]);
        assert_eq!(p.on_lattice(4).weight(), 16);
    }
}
