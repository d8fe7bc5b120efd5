use std::collections::BTreeSet;

use cubic_core::code::{site_components, CubicCode};
use cubic_core::lattice::is_stabilizer_element;
use cubic_core::pauli::{parse_expression, PauliOperator, Site, SiteOp};
use cubic_core::strings::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn code(id: u8) -> CubicCode {
    CubicCode::table(id).unwrap()
}

fn op(s: &str) -> SiteOp {
    SiteOp::parse(s).unwrap()
}

fn random_combination(basis: &[PauliOperator], m: usize, rng: &mut StdRng) -> PauliOperator {
    let mut o = PauliOperator::identity(m);
    for b in basis {
        if rng.gen_bool(0.5) {
            o = o.multiply(b);
        }
    }
    o.abelianized()
}

fn random_stabilizer(code: &CubicCode, region: &Cuboid, count: usize, rng: &mut StdRng) -> (PauliOperator, Vec<Placement>) {
    let placements: Vec<Placement> = (0..count)
        .map(|_| {
            let p: Site = std::array::from_fn(|k| rng.gen_range(region.lo[k]..region.hi[k] - 1));
            (rng.gen_range(0..code.generators.len()), p)
        })
        .collect();
    (placement_product(code, &placements), placements)
}

/// Membership of `a·b` in the stabilizer group of a torus large enough to
/// hold both without wrapping onto itself.
fn equivalent(a: &PauliOperator, b: &PauliOperator, code: &CubicCode) -> bool {
    let q = a.multiply(b);
    let Some((lo, hi)) = q.bounding_box() else { return true };
    let extent = (0..3).map(|k| (hi[k] - lo[k] + 1) as usize).max().unwrap();
    let l = 2 * extent + 4;
    let shifted = PauliOperator::from_sites(q.m(), q.iter().map(|(s, o)| ([s[0] - lo[0], s[1] - lo[1], s[2] - lo[2]], *o)));
    is_stabilizer_element(&shifted, code, l).unwrap()
}

/// Connectivity through the generic component routine: anchors join the
/// support as path endpoints.
fn connected_oracle(seg: &Segment, code: &CubicCode) -> bool {
    let a0: BTreeSet<Site> = seg.anchor(0).sites().collect();
    let a1: BTreeSet<Site> = seg.anchor(1).sites().collect();
    let mut sites: BTreeSet<Site> = seg.op.sites().copied().collect();
    sites.extend(a0.iter().copied());
    sites.extend(a1.iter().copied());
    site_components(&sites, code).iter().any(|c| c.iter().any(|s| a0.contains(s)) && c.iter().any(|s| a1.contains(s)))
}

/// Code 11's string `ZZ[z](0,0,0) ZI[z](1,0,0)` cut to `n` layers, with
/// anchors covering both ends.
fn code_11_cut(n: i64) -> Segment {
    let o = PauliOperator::from_sites(2, (0..n).flat_map(|z| [([0, 0, z], op("ZZ")), ([1, 0, z], op("ZI"))]));
    Segment::new(o, 2, [0, -1, -1], [0, -1, n - 1])
}

#[test]
fn cut_string_is_a_connected_segment() {
    let c = code(11);
    for n in [3, 6, 10] {
        let seg = code_11_cut(n);
        assert!(is_segment(&seg, &c), "n={n}");
        assert!(is_connected(&seg, &c));
        assert_eq!(connected_oracle(&seg, &c), true);
        let mut broken = seg.clone();
        broken.op.mul_site([0, 0, n / 2], op("XI"));
        assert!(!is_segment(&broken, &c));
    }
}

#[test]
fn support_inside_anchors_is_always_a_segment() {
    let mut rng = StdRng::seed_from_u64(3);
    for id in 0..=4 {
        let c = code(id);
        let seg0 = Segment::new(PauliOperator::identity(2), 2, [0, 0, 0], [0, 7, 0]);
        let sites: Vec<Site> = seg0.anchor(0).sites().chain(seg0.anchor(1).sites()).collect();
        for _ in 0..10 {
            let picked: Vec<(Site, SiteOp)> = sites
                .iter()
                .filter_map(|s| rng.gen_bool(0.4).then(|| (*s, SiteOp::from_vector_bits(2, rng.gen_range(1..16)))))
                .collect();
            let o = PauliOperator::from_sites(2, picked);
            let seg = Segment { op: o, ..seg0.clone() };
            assert!(is_segment(&seg, &c));
            assert!(!is_connected(&seg, &c) || connected_oracle(&seg, &c));
        }
    }
}

#[test]
fn single_error_between_far_anchors_is_not_a_segment() {
    for id in 0..=4 {
        let c = code(id);
        for e in SiteOp::all(2).skip(1) {
            let o = PauliOperator::single([0, 5, 0], e);
            let seg = Segment::new(o, 2, [0, 0, 0], [0, 10, 0]);
            assert!(!is_segment(&seg, &c), "code {id} {e}");
        }
    }
}

#[test]
fn overlapping_anchors_are_connected_and_never_cut() {
    let c = code(1);
    let seg = Segment::new(PauliOperator::identity(2), 3, [0, 0, 0], [0, 2, 0]);
    assert!(is_connected(&seg, &c));
    assert!(disconnect_certificate(&seg, &c).is_none());
}

fn faces_with_good_edges(id: u8) -> Vec<Vec<EdgeInfo>> {
    let edges = good_edges(&code(id));
    assert_eq!(edges.len(), 12);
    let mut out = Vec::new();
    for axis in 0..3 {
        for side in [0, 1] {
            out.push(edges.iter().copied().filter(|e| e.good && e.on_face(axis, side)).collect());
        }
    }
    out
}

#[test]
fn code_1_has_two_orthogonal_good_edges_on_every_face() {
    for face in faces_with_good_edges(1) {
        assert!(face.iter().any(|a| face.iter().any(|b| a.axis != b.axis)), "{face:?}");
    }
}

#[test]
fn code_3_face_x0_has_one_good_edge() {
    let c = code(3);
    let face: Vec<EdgeInfo> = good_edges(&c).into_iter().filter(|e| e.good && e.on_face(0, 0)).collect();
    assert_eq!(face.len(), 1);
    let (a, b) = face[0].corners;
    let mut names = [c.generators[0].corners[a].to_string(), c.generators[0].corners[b].to_string()];
    names.sort();
    assert_eq!(names, ["IZ", "ZZ"]);
}

#[test]
fn identity_generator_has_no_good_edges() {
    let id = cubic_core::code::GeneratorSpec::new([SiteOp::identity(2); 8]);
    let c = CubicCode::css("trivial", id);
    assert!(good_edges(&c).iter().all(|e| !e.good));
}

#[test]
fn good_edges_agree_with_brute_force_independence() {
    // independent iff no nonzero combination of the two end operators vanishes
    for c in CubicCode::table_all().into_iter().filter(|c| c.css) {
        for e in good_edges(&c) {
            let (a, b) = (c.generators[0].corners[e.corners.0], c.generators[0].corners[e.corners.1]);
            let independent = !a.is_identity() && !b.is_identity() && a != b;
            assert_eq!(e.good, independent, "{} edge {:?}", c.name, e.corners);
        }
    }
}

#[test]
fn shrink_leaves_contained_operators_alone() {
    let c = code(1);
    let o = PauliOperator::from_sites(2, [([1, 1, 1], op("XZ")), ([2, 1, 1], op("ZZ"))]);
    let d = shrink_to_box(&o, &Cuboid::new([0, 0, 0], [4, 4, 4]), &c).unwrap();
    assert_eq!(d.operator, o);
    assert!(d.placements.is_empty());
}

#[test]
fn random_stabilizers_shrink_to_identity() {
    let mut rng = StdRng::seed_from_u64(11);
    let region = Cuboid::new([0, 0, 0], [6, 6, 6]);
    for id in 0..=4 {
        let c = code(id);
        for _ in 0..8 {
            let (s, _) = random_stabilizer(&c, &region, 12, &mut rng);
            let d = shrink_to_box(&s, &Cuboid::empty(), &c).unwrap_or_else(|e| panic!("code {id}: {e}"));
            assert!(d.operator.is_identity(), "code {id}");
            assert_eq!(placement_product(&c, &d.placements).abelianized(), s.abelianized());
        }
    }
}

#[test]
fn finite_logicals_of_code_1_erase_to_identity() {
    // operators in a 5^3 box commuting with every generator on the infinite lattice
    let c = code(1);
    let region = Cuboid::new([0, 0, 0], [5, 5, 5]);
    let far = [100, 100, 100];
    let basis = segment_basis(&c, 1, far, far, &region);
    assert!(!basis.is_empty());
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..5 {
        let o = random_combination(&basis, 2, &mut rng);
        let d = shrink_to_box(&o, &Cuboid::empty(), &c).unwrap();
        assert!(d.operator.is_identity());
        assert!(equivalent(&o, &d.operator, &c));
    }
}

#[test]
fn flat_reduction_of_a_diagonal_code_1_segment() {
    let c = code(1);
    let (w, first, second) = (2, [0, 0, 0], [3, 3, 3]);
    let probe = Segment::new(PauliOperator::identity(2), w, first, second);
    let region = probe.anchor_hull();
    let basis = segment_basis(&c, w, first, second, &region);
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..4 {
        let seg = Segment::new(random_combination(&basis, 2, &mut rng), w, first, second);
        assert!(is_segment(&seg, &c));
        let flat = reduce_to_flat(&seg, &c).unwrap();
        assert_eq!(flat.pieces.len(), 3);
        assert_eq!(flat.slack, 0);
        assert!(flat.pieces.iter().all(|p| p.is_flat() && p.length() == 3 && p.w == 2));
        let mut joined = PauliOperator::identity(2);
        for p in &flat.pieces {
            joined = joined.multiply(&p.op);
        }
        assert_eq!(joined.abelianized(), flat.operator.abelianized());
        assert!(equivalent(&seg.op, &flat.operator, &c));
        assert!(is_segment(&Segment { op: flat.operator.clone(), ..seg.clone() }, &c));
    }
}

#[test]
fn flat_reduction_of_mixed_sign_code_3_segment() {
    let c = code(3);
    let (w, first, second) = (2, [0, 0, 0], [2, -3, 2]);
    let probe = Segment::new(PauliOperator::identity(2), w, first, second);
    let basis = segment_basis(&c, w, first, second, &probe.anchor_hull());
    let mut rng = StdRng::seed_from_u64(8);
    let seg = Segment::new(random_combination(&basis, 2, &mut rng), w, first, second);
    let flat = reduce_to_flat(&seg, &c).unwrap();
    assert!(flat.pieces.len() <= 3 && flat.pieces.iter().all(Segment::is_flat));
    assert!(flat.pieces.iter().all(|p| p.w == w + 2 * flat.slack as usize));
    assert!(equivalent(&seg.op, &flat.operator, &c));
}

#[test]
fn every_direction_sign_reduces_for_codes_1_to_4() {
    let mut rng = StdRng::seed_from_u64(77);
    for id in 1..=4 {
        let c = code(id);
        for d in [[2, 3, 1], [-2, 3, 1], [2, -3, 1], [2, 3, -1], [-1, -2, -2]] {
            let probe = Segment::new(PauliOperator::identity(2), 2, [0; 3], d);
            let basis = segment_basis(&c, 2, [0; 3], d, &probe.anchor_hull());
            let seg = Segment::new(random_combination(&basis, 2, &mut rng), 2, [0; 3], d);
            let flat = reduce_to_flat(&seg, &c).unwrap_or_else(|e| panic!("code {id} {d:?}: {e}"));
            assert!(equivalent(&seg.op, &flat.operator, &c));
            for p in &flat.pieces {
                assert!(p.is_flat());
                assert!(p.op.sites().all(|s| p.anchor_hull().contains(s)));
            }
        }
    }
}

#[test]
fn flat_segments_reduce_to_themselves() {
    let c = code(2);
    let seg = code_11_cut(4);
    let seg = Segment { op: PauliOperator::identity(2), ..seg };
    let flat = reduce_to_flat(&seg, &c).unwrap();
    assert!(flat.placements.is_empty());
    assert_eq!(flat.pieces.len(), 1);
}

#[test]
fn code_1_y_segment_of_length_20_is_disconnected() {
    let c = code(1);
    let basis = flat_segment_basis(&c, 2, 1, 20);
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..3 {
        let seg = Segment::new(random_combination(&basis, 2, &mut rng), 2, [0, 0, 0], [0, 20, 0]);
        let cert = disconnect_certificate(&seg, &c).expect("certificate");
        assert!(verify_certificate(&seg, &cert, &c));
        assert!(equivalent(&seg.op, &cert.operator, &c));
    }
}

#[test]
fn code_11_string_cuts_are_never_disconnected() {
    let c = code(11);
    for n in [4, 8, 14] {
        assert!(disconnect_certificate(&code_11_cut(n), &c).is_none(), "n={n}");
    }
    for axis in 0..3 {
        let scan = phi_scan(&c, 2, axis, 16).unwrap();
        assert!(scan.rows.iter().all(|(_, ok)| !ok));
        assert_eq!(scan.certified_above, None);
    }
}

#[test]
fn scan_matches_explicit_slab_solves() {
    // A length is disconnectable when one middle plane clears every segment.
    // Clearable segments form a linear space, so checking a basis with an
    // independent solve per plane decides it exactly.
    let mut rng = StdRng::seed_from_u64(99);
    for (id, axis) in [(1u8, 1usize), (2, 2), (0, 0), (3, 0), (4, 2), (11, 2)] {
        let c = code(id);
        let w = 2;
        let scan = phi_scan(&c, w, axis, 12).unwrap();
        for &(l, ok) in &scan.rows {
            let basis = flat_segment_basis(&c, w, axis, l);
            let mut second = [0i64; 3];
            second[axis] = l as i64;
            let probe = Segment::new(PauliOperator::identity(2), w, [0; 3], second);
            let window = probe.anchor_hull();
            let explicit = (w as i64..l as i64)
                .any(|slab| basis.iter().all(|b| clear_slab(b, &c, axis, slab, &window).is_some()));
            assert_eq!(ok, explicit, "code {id} l={l}");
            if ok {
                for _ in 0..2 {
                    let seg = Segment::new(random_combination(&basis, 2, &mut rng), w, [0; 3], second);
                    let cert = disconnect_certificate(&seg, &c).unwrap_or_else(|| panic!("code {id} l={l}"));
                    assert!(verify_certificate(&seg, &cert, &c));
                }
            }
        }
    }
}

#[test]
fn scan_bounds_for_the_cubic_codes() {
    for w in 2..=4 {
        for axis in 0..3 {
            let s = phi_scan(&code(1), w, axis, 5 * w + 4).unwrap();
            assert!(s.max_nontrivial() <= 5 * w - 2, "w={w} axis={axis}");
            assert!(s.certified_above.is_some_and(|l| l <= 5 * w + 4));
        }
        let s = phi_scan(&code(2), w, 2, 5 * w + 4).unwrap();
        assert!(s.max_nontrivial() <= 3 * w);
    }
    for w in [2, 5, 9] {
        let s = phi_scan(&code(0), w, 0, 5 * w + 4).unwrap();
        assert!(s.max_nontrivial() <= 3 * w && s.certified_above.is_some());
    }
}

#[test]
fn certificate_verification_rejects_forgeries() {
    let c = code(1);
    let basis = flat_segment_basis(&c, 2, 1, 12);
    let mut rng = StdRng::seed_from_u64(4);
    let seg = Segment::new(random_combination(&basis, 2, &mut rng), 2, [0, 0, 0], [0, 12, 0]);
    let mut cert = disconnect_certificate(&seg, &c).unwrap();
    cert.operator.mul_site([0, 6, 0], op("XI"));
    assert!(!verify_certificate(&seg, &cert, &c));
}

#[test]
fn code_1_edge_constraint_is_confusing() {
    let ec = EdgeConstraint::parse("IZ-ZI, II-IZ").unwrap();
    let a = edge_constraint_automaton(&ec);
    assert!(matches!(a.class, SequenceClass::Confusing { .. }), "{:?}", a.class);
    let got: BTreeSet<String> = a.solutions.iter().map(|(x, y)| format!("{x}-{y}")).collect();
    let want: BTreeSet<String> = ["II-II", "XI-II", "IX-XI", "XX-XI"].iter().map(|s| s.to_string()).collect();
    assert_eq!(got, want);
}

#[test]
fn code_2_far_edge_has_period_three() {
    let ec = EdgeConstraint::parse("ZI-IZ, ZZ-ZI").unwrap();
    match edge_constraint_automaton(&ec).class {
        SequenceClass::Periodic { period, cycle } => {
            assert_eq!(period, 3);
            let names: Vec<String> = cycle.iter().map(SiteOp::to_string).collect();
            let start = names.iter().position(|n| n == "XI").unwrap();
            let rotated: Vec<&str> = (0..3).map(|i| names[(start + i) % 3].as_str()).collect();
            assert_eq!(rotated, ["XI", "XX", "IX"]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn full_rank_constraints_are_trivial() {
    let ec = EdgeConstraint::parse("ZI-II, IZ-II, II-ZI, II-IZ").unwrap();
    let a = edge_constraint_automaton(&ec);
    assert_eq!(a.class, SequenceClass::Trivial);
    assert_eq!(a.solutions.len(), 1);
}

#[test]
fn edge_solutions_match_brute_force() {
    let mut rng = StdRng::seed_from_u64(17);
    let z = |b: u8| SiteOp::new(2, 0, b);
    for _ in 0..200 {
        let pairs: Vec<(SiteOp, SiteOp)> =
            (0..rng.gen_range(1..4)).map(|_| (z(rng.gen_range(0..4)), z(rng.gen_range(0..4)))).collect();
        if pairs.iter().all(|(a, b)| a.is_identity() && b.is_identity()) {
            continue;
        }
        let ec = EdgeConstraint { m: 2, pairs: pairs.clone() };
        let got = ec.solutions();
        let mut want = Vec::new();
        for a in 0..4u8 {
            for b in 0..4u8 {
                let (xa, xb) = (SiteOp::new(2, a, 0), SiteOp::new(2, b, 0));
                // Z-part of c against X-part of the candidate, bit by bit
                let ok = pairs.iter().all(|(c1, c2)| ((c1.z() & a).count_ones() + (c2.z() & b).count_ones()) % 2 == 0);
                if ok {
                    want.push((xa, xb));
                }
            }
        }
        let norm = |v: &[(SiteOp, SiteOp)]| v.iter().map(|(a, b)| (a.vector_bits(), b.vector_bits())).collect::<BTreeSet<_>>();
        assert_eq!(norm(&got), norm(&want));
    }
}

fn is_qp(f: &[u8], t: usize, n0: usize) -> bool {
    // definition scan, indices from 1
    (n0 + 1..=f.len() - t).all(|n| f[n - 1] == f[n - 1 + t])
}

fn random_eventually_periodic(rng: &mut StdRng, t: usize, n0: usize, len: usize) -> Vec<u8> {
    let pre: Vec<u8> = (0..n0).map(|_| rng.gen_range(0..4)).collect();
    let per: Vec<u8> = (0..t).map(|_| rng.gen_range(0..4)).collect();
    (0..len).map(|i| if i < n0 { pre[i] } else { per[(i - n0) % t] }).collect()
}

#[test]
fn lemmas_on_random_recursions() {
    // 1000 instances split between idempotent and involutive matrices
    let mut rng = StdRng::seed_from_u64(2024);
    let mats: Vec<Mat2> = (0..16u8).map(|k| [k & 3, k >> 2]).collect();
    let idem: Vec<Mat2> = mats.iter().copied().filter(|m| mat2_mul(*m, *m) == *m).collect();
    let invol: Vec<Mat2> = mats.iter().copied().filter(|m| mat2_mul(*m, *m) == MAT2_IDENTITY).collect();
    assert_eq!((idem.len(), invol.len()), (8, 4));
    for trial in 0..1000 {
        let idempotent = trial % 2 == 0;
        let m = if idempotent { idem[rng.gen_range(0..idem.len())] } else { invol[rng.gen_range(0..invol.len())] };
        let rec = RowRecursion { m, b: [rng.gen_range(0..16), rng.gen_range(0..16)] };
        let (t, n0) = (rng.gen_range(1..=5), rng.gen_range(0..=5));
        let prev = random_eventually_periodic(&mut rng, t, n0, 240);
        let row = rec.next_row(&[&prev], rng.gen_range(0..4));
        if idempotent {
            assert!(rec.is_idempotent());
            assert!(is_qp(&row, 2 * t, n0 + t), "trial {trial}");
        } else {
            assert!(rec.is_involution());
            assert!(is_qp(&row, 4 * t, n0), "trial {trial}");
        }
    }
}

#[test]
fn idempotent_step_with_constant_input_has_quasi_period_two() {
    let rec = code2_interior_recursion();
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..50 {
        let c = rng.gen_range(0..4u8);
        let prev = vec![c; 40];
        let row = rec.next_row(&[&prev], rng.gen_range(0..4));
        assert!(is_qp(&row, 2, 1));
    }
    let zero = vec![0u8; 30];
    let row = rec.next_row(&[&zero], 3);
    assert_eq!(quasi_period_detect(&row).map(|q| q.period), Some(1));
}

#[test]
fn code_2_far_edge_contradiction() {
    // Rows built from a period-one first row keep power-of-two quasi-periods,
    // so a nonzero row of period three cannot occur at the far edge.
    let rec = code2_interior_recursion();
    let boundary = RowRecursion { m: CODE2_BOUNDARY_MATRIX, b: rec.b };
    let mut rng = StdRng::seed_from_u64(12);
    for w in 2..=4usize {
        let q = code2_edge_quasi_period(w) as usize;
        assert!(q.is_power_of_two() && q % 3 != 0);
        for _ in 0..20 {
            let mut row = vec![rng.gen_range(0..4u8); 6 * q];
            for i in 0..3 * w {
                let r = if i < w { rec } else { boundary };
                row = r.next_row(&[&row], rng.gen_range(0..4));
            }
            let detected = quasi_period_detect(&row).expect("eventually periodic");
            assert!(detected.period.is_power_of_two() && q % detected.period == 0, "w={w} {detected:?}");
        }
    }
}

#[test]
fn period_divides_quasi_periods() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..300 {
        let (t, n0) = (rng.gen_range(1..=8), rng.gen_range(0..=6));
        let f = random_eventually_periodic(&mut rng, t, n0, 120);
        let found = quasi_period_detect(&f).unwrap();
        assert!(t % found.period == 0);
        for q in observed_quasi_periods(&f) {
            assert_eq!(q.period % found.period, 0);
        }
    }
}

proptest! {
    #[test]
    fn detection_agrees_with_definition(t in 1usize..6, n0 in 0usize..6, seed in 0u64..1000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_eventually_periodic(&mut rng, t, n0, 60);
        let found = quasi_period_detect(&f).unwrap();
        prop_assert!(is_qp(&f, found.period, found.offset));
        for p in 1..found.period {
            prop_assert!((0..=f.len()).all(|o| f.len() < o + 3 * p || !is_qp(&f, p, o)));
        }
        if found.offset > 0 {
            prop_assert!(!is_qp(&f, found.period, found.offset - 1));
        }
    }

    #[test]
    fn segments_survive_stabilizer_multiplication(seed in 0u64..500, id in 0u8..5) {
        let c = code(id);
        let mut rng = StdRng::seed_from_u64(seed);
        let basis = flat_segment_basis(&c, 2, (seed % 3) as usize, 7);
        let mut second = [0i64; 3];
        second[(seed % 3) as usize] = 7;
        let o = random_combination(&basis, 2, &mut rng);
        let (s, _) = random_stabilizer(&c, &Cuboid::new([-3, -3, -3], [10, 10, 10]), 6, &mut rng);
        let seg = Segment::new(o.multiply(&s), 2, [0; 3], second);
        prop_assert!(is_segment(&seg, &c));
        prop_assert_eq!(is_connected(&seg, &c), connected_oracle(&seg, &c));
    }

    #[test]
    fn connectivity_matches_component_oracle(seed in 0u64..2000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = code(rng.gen_range(0..5));
        let sites: Vec<(Site, SiteOp)> = (0..rng.gen_range(0..14))
            .map(|_| ([rng.gen_range(-1..4), rng.gen_range(-1..10), rng.gen_range(-1..4)], SiteOp::from_vector_bits(2, rng.gen_range(1..16))))
            .collect();
        let seg = Segment::new(PauliOperator::from_sites(2, sites), 2, [0, 0, 0], [0, 7, 0]);
        prop_assert_eq!(is_connected(&seg, &c), connected_oracle(&seg, &c));
    }
}

#[test]
fn parsed_expressions_feed_segments() {
    // complement of Code 11's string is a y-string; its cut is a segment too
    let e = parse_expression("XI[y](0,0,0) IX[y](1,0,0)").unwrap();
    assert_eq!(e.terms.len(), 2);
    let c = code(11);
    let o = PauliOperator::from_sites(2, (0..6).flat_map(|y| [([0, y, 0], op("XI")), ([1, y, 0], op("IX"))]));
    let seg = Segment::new(o, 2, [0, -1, -1], [0, 5, -1]);
    assert!(is_segment(&seg, &c) && is_connected(&seg, &c));
}
