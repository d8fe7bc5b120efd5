//! Generator specifications and the catalog of cubic codes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cube::{opposite, CORNERS};
use crate::pauli::{PauliOperator, Site, SiteOp};

/// One generator type: a site operator on each of the 8 cube corners.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorSpec {
    pub corners: [SiteOp; 8],
}

impl GeneratorSpec {
    pub fn new(corners: [SiteOp; 8]) -> Self {
        let m = corners[0].m();
        assert!(corners.iter().all(|c| c.m() == m), "corners act on different qubit counts");
        Self { corners }
    }

    /// Eight space-separated corner labels, e.g. `ZI ZZ IZ ZI IZ II ZI IZ`.
    pub fn parse(text: &str) -> Option<Self> {
        let ops: Vec<SiteOp> = text.split_whitespace().map(SiteOp::parse).collect::<Result<_, _>>().ok()?;
        let corners: [SiteOp; 8] = ops.try_into().ok()?;
        let m = corners[0].m();
        corners.iter().all(|c| c.m() == m).then_some(Self { corners })
    }

    pub fn m(&self) -> usize {
        self.corners[0].m()
    }

    /// The generator obtained by spatial inversion: corner `i` carries the
    /// operator of the opposite corner.
    #[must_use]
    pub fn inversion(&self) -> GeneratorSpec {
        GeneratorSpec { corners: core::array::from_fn(|i| self.corners[opposite(i)]) }
    }

    pub fn is_z_type(&self) -> bool {
        self.corners.iter().all(|c| c.is_z_type())
    }

    pub fn is_x_type(&self) -> bool {
        self.corners.iter().all(|c| c.is_x_type())
    }

    pub fn corner_product(&self) -> SiteOp {
        self.corners.iter().fold(SiteOp::identity(self.m()), |acc, c| acc.mul(*c))
    }

    /// The placement with its reference point at `pos`.
    pub fn at(&self, pos: Site) -> PauliOperator {
        PauliOperator::from_sites(
            self.m(),
            CORNERS.iter().zip(&self.corners).map(|(c, op)| ([pos[0] + c[0], pos[1] + c[1], pos[2] + c[2]], *op)),
        )
    }

    /// Offsets `pos(b) - pos(a)` between corners that both act nontrivially.
    pub fn support_offsets(&self) -> Vec<Site> {
        let mut out = BTreeSet::new();
        for a in 0..8 {
            for b in 0..8 {
                if a != b && !self.corners[a].is_identity() && !self.corners[b].is_identity() {
                    out.insert([CORNERS[b][0] - CORNERS[a][0], CORNERS[b][1] - CORNERS[a][1], CORNERS[b][2] - CORNERS[a][2]]);
                }
            }
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.corners.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The X-type partner of a Z-type generator of a two-qubit CSS code:
/// the X-part at corner `α'` is the Z-part at `α` with the qubits exchanged.
pub fn css_dual_generator(qz: &GeneratorSpec) -> GeneratorSpec {
    assert!(qz.is_z_type(), "dual construction needs a Z-type generator");
    assert_eq!(qz.m(), 2, "dual construction is defined for two qubits per site");
    GeneratorSpec { corners: core::array::from_fn(|i| qz.corners[opposite(i)].swap_qubits().z_to_x()) }
}

/// A translation-invariant code with cube-shaped generators.
///
/// For CSS codes the generators are `[Q^Z, Q^X]`; otherwise `[Q, Q^P]` where
/// `Q^P` is the spatial inversion of `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicCode {
    pub name: String,
    pub id: Option<u8>,
    pub css: bool,
    pub generators: Vec<GeneratorSpec>,
}

impl CubicCode {
    pub fn css(name: impl Into<String>, qz: GeneratorSpec) -> Self {
        let qx = css_dual_generator(&qz);
        Self { name: name.into(), id: None, css: true, generators: alloc::vec![qz, qx] }
    }

    pub fn non_css(name: impl Into<String>, q: GeneratorSpec) -> Self {
        let qp = q.inversion();
        Self { name: name.into(), id: None, css: false, generators: alloc::vec![q, qp] }
    }

    pub fn m(&self) -> usize {
        self.generators[0].m()
    }

    /// The generator printed in the catalog: `Q^Z` for CSS codes, `Q` otherwise.
    pub fn primary(&self) -> &GeneratorSpec {
        &self.generators[0]
    }

    /// Catalog code `id` in `0..=17`.
    pub fn table(id: u8) -> Option<CubicCode> {
        let text = TABLE.get(id as usize)?;
        let g = GeneratorSpec::parse(text).expect("catalog entries parse");
        let name = alloc::format!("Code {id}");
        let mut code = if id == 0 { Self::non_css(name, g) } else { Self::css(name, g) };
        code.id = Some(id);
        Some(code)
    }

    pub fn table_all() -> Vec<CubicCode> {
        (0..TABLE.len() as u8).filter_map(Self::table).collect()
    }

    /// Site offsets along which some generator placement connects two sites.
    pub fn adjacency_offsets(&self) -> Vec<Site> {
        let mut set = BTreeSet::new();
        for g in &self.generators {
            set.extend(g.support_offsets());
        }
        set.into_iter().collect()
    }
}

/// Catalog generators in corner order `A B C D A' B' C' D'`. Entry 0 is the
/// non-CSS code; the others list `Q^Z`.
pub const TABLE: [&str; 18] = [
    "XX ZI ZY XY ZZ II XZ ZX",
    "ZI ZZ IZ ZI IZ II ZI IZ",
    "IZ ZZ ZI ZI ZI ZZ IZ ZI",
    "IZ ZZ ZZ ZI ZZ II IZ IZ",
    "IZ ZZ ZI ZI IZ II IZ ZI",
    "ZI ZZ II ZZ ZI II IZ IZ",
    "ZI II ZI ZZ IZ ZZ II IZ",
    "ZI ZZ ZI IZ IZ II II ZZ",
    "ZI ZI IZ ZZ IZ II IZ ZI",
    "ZI IZ ZZ ZZ IZ ZZ II IZ",
    "ZI IZ ZI ZZ IZ ZZ ZI ZI",
    "ZI ZZ II IZ ZI II IZ ZZ",
    "ZI IZ ZZ ZZ ZI II II IZ",
    "ZI ZZ IZ ZI IZ II II ZZ",
    "ZI IZ ZZ ZZ IZ II ZZ IZ",
    "ZI IZ II ZZ IZ ZZ II ZI",
    "ZI ZI II IZ IZ ZZ II ZZ",
    "ZI ZZ IZ ZI IZ ZI ZI ZZ",
];

/// Symplectic product of `o` with generator `g` placed at `pos`.
pub fn commutes_with_generator(o: &PauliOperator, g: &GeneratorSpec, pos: Site) -> bool {
    let mut parity = false;
    for (c, op) in CORNERS.iter().zip(&g.corners) {
        let s = [pos[0] + c[0], pos[1] + c[1], pos[2] + c[2]];
        parity ^= op.lambda(o.get(&s));
    }
    parity
}

/// Partitions `sites` into classes joined by paths whose steps lie in a
/// single generator placement.
pub fn site_components(sites: &BTreeSet<Site>, code: &CubicCode) -> Vec<Vec<Site>> {
    let offsets = code.adjacency_offsets();
    let index: BTreeMap<Site, usize> = sites.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let list: Vec<Site> = sites.iter().copied().collect();
    let mut parent: Vec<usize> = (0..list.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, s) in list.iter().enumerate() {
        for d in &offsets {
            if let Some(&j) = index.get(&[s[0] + d[0], s[1] + d[1], s[2] + d[2]]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Site>> = BTreeMap::new();
    for (i, s) in list.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(*s);
    }
    groups.into_values().collect()
}

/// Connected components of the support of `o`.
pub fn connected_components(o: &PauliOperator, code: &CubicCode) -> Vec<PauliOperator> {
    let sites: BTreeSet<Site> = o.sites().copied().collect();
    site_components(&sites, code)
        .into_iter()
        .map(|group| PauliOperator::from_sites(o.m(), group.into_iter().map(|s| (s, o.get(&s)))))
        .collect()
}
