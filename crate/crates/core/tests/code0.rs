use cubic_core::code0::*;
use cubic_core::lattice::{count_logical_qubits, is_logical, StabilizerGroup};
use cubic_core::pauli::{LineOperator, PauliOperator, Phase, SiteOp};
use proptest::prelude::*;

fn s(t: &str) -> SiteOp {
    SiteOp::parse(t).unwrap()
}

#[test]
fn symmetry_matrix_matches_hand_computation() {
    // XI->XI, ZI->ZI, IX->IY, IZ->IX; columns in basis XI, ZI, IX, IZ.
    let expected = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 0]];
    assert_eq!(symmetry_matrix(), expected);
    assert_eq!(cycle_second_qubit(s("IX")), s("IY"));
    assert_eq!(cycle_second_qubit(s("IY")), s("IZ"));
    assert_eq!(cycle_second_qubit(s("IZ")), s("IX"));
}

#[test]
fn threefold_symmetry_holds() {
    let r = verify_threefold_symmetry();
    assert!(r.holds(), "{r:?}");
}

#[test]
fn relations_multiply_to_identity_with_phase_one() {
    for l in [2, 3, 4, 5, 6] {
        let p = relation_product(&RelationLattice::r1(), l).unwrap();
        assert!(p.is_identity(), "R1 support at L={l}");
        assert_eq!(p.phase(), Phase::ONE, "R1 phase at L={l}");
    }
    for l in [2, 4, 6] {
        let p = relation_product(&RelationLattice::r2(), l).unwrap();
        assert!(p.is_identity(), "R2 support at L={l}");
        assert_eq!(p.phase(), Phase::ONE, "R2 phase at L={l}");
    }
}

#[test]
fn body_centred_relation_needs_even_size() {
    assert!(relation_product(&RelationLattice::r2(), 3).is_err());
    assert!(relation_product(&RelationLattice::r2(), 5).is_err());
}

#[test]
fn relation_count_bounds_logical_qubits() {
    for l in 2..=6 {
        let b = lower_bound_k(l).unwrap();
        assert!(b.all_vanish, "L={l}");
        assert!(b.relations >= b.claimed, "L={l}: {b:?}");
        let k = count_logical_qubits(&code(), l).unwrap();
        assert!(b.relations <= k, "L={l}: {} > k={k}", b.relations);
    }
}

#[test]
fn rotated_strings_match_the_written_forms() {
    let p = [0, 0, 0];
    let [_, x, y] = basic_strings(p);
    let want_x = [
        LineOperator::new(s("ZX"), [-1, 1, 0], [1, 0, 0]),
        LineOperator::new(s("XI"), [-1, 1, 0], [0, 0, 0]),
        LineOperator::new(s("ZX"), [-1, 1, 0], [-1, 0, 0]),
    ];
    let want_y = [
        LineOperator::new(s("ZY"), [0, -1, 1], [0, 1, 0]),
        LineOperator::new(s("XI"), [0, -1, 1], [0, 0, 0]),
        LineOperator::new(s("ZY"), [0, -1, 1], [0, -1, 0]),
    ];
    for l in [5, 6, 7] {
        let prod = |v: &[LineOperator]| v.iter().fold(PauliOperator::identity(2), |mut a, b| {
            a.mul_assign(&b.on_lattice(l));
            a
        });
        assert_eq!(x.on_lattice(l), prod(&want_x));
        assert_eq!(y.on_lattice(l), prod(&want_y));
    }
}

#[test]
fn basic_strings_are_logical_and_multiply_to_a_stabilizer() {
    for l in [3, 4, 5, 6] {
        let g = StabilizerGroup::new(&code(), l).unwrap();
        let strings = basic_strings([1, 0, 2]);
        let ops: Vec<_> = strings.iter().map(|t| t.on_lattice(l)).collect();
        for o in &ops {
            assert!(is_logical(o, &code(), l), "L={l}");
        }
        let mut prod = ops[0].clone();
        prod.mul_assign(&ops[1]);
        prod.mul_assign(&ops[2]);
        assert!(g.contains(&prod), "L={l}");
    }
}

#[test]
fn parallel_z_strings_differ_by_stabilizers_within_a_plane() {
    let l = 5;
    let g = StabilizerGroup::new(&code(), l).unwrap();
    let base = basic_strings([0, 0, 0])[0].on_lattice(l);
    for shift in [[1, -1, 0], [2, 0, -2], [0, 3, -3], [1, 1, -2]] {
        let mut o = basic_strings(shift)[0].on_lattice(l);
        o.mul_assign(&base);
        assert!(g.contains(&o), "shift {shift:?}");
    }
}

#[test]
fn gamma_rank_matches_circulant() {
    for l in 5..=24 {
        let r = gamma_rank(l).unwrap();
        assert!(r.blocks_commute, "L={l}");
        assert_eq!(r.explicit, r.structural, "L={l}");
        assert!(r.shift.is_some(), "L={l}");
        assert_eq!(r.structural, circulant_rank(l), "L={l}");
    }
}

#[test]
fn circulant_rank_oracle() {
    // The circulant is t^-2 (t^4 + 1) mod t^L + 1, so its nullity is
    // deg gcd(t^4 + 1, t^L + 1) = gcd(4, L).
    for l in 5..=64 {
        assert_eq!(circulant_rank(l), l - gcd(4, l), "L={l}");
        if l % 2 == 0 {
            assert_eq!(closed_form_rank(l), circulant_rank(l), "L={l}");
        }
    }
    assert_ne!(closed_form_rank(7), circulant_rank(7));
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn residual_qubits_survive_gauging() {
    for l in [5, 6, 7] {
        let r = residual_qubit_check(l).unwrap();
        assert_eq!(r.k, count_logical_qubits(&code(), l).unwrap());
        assert!(r.holds(), "{r:?}");
    }
}

#[test]
fn tunnel_chains_have_period_seven() {
    let inner = code0_period7_chain(TunnelLine::Inner).expect("independent left operators");
    let mut got: Vec<_> = inner.actions.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    got.sort();
    let mut want: Vec<_> = [("XX", "ZI"), ("ZZ", "II"), ("ZY", "XY"), ("XZ", "ZX")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    want.sort();
    assert_eq!(got, want);
    let names: Vec<_> = inner.orbit.iter().map(|o| o.to_string()).collect();
    assert_eq!(names, ["ZI", "XZ", "ZX", "IX", "XY", "YZ", "YY", "ZI"]);
    assert_eq!(inner.cycle_length(), 7);

    let outer = code0_period7_chain(TunnelLine::Outer).expect("independent left operators");
    let mut got: Vec<_> = outer.actions.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    got.sort();
    let mut want: Vec<_> = [("ZX", "XZ"), ("XY", "ZY"), ("XX", "ZI"), ("ZZ", "II")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    want.sort();
    assert_eq!(got, want);
    let names: Vec<_> = outer.orbit.iter().map(|o| o.to_string()).collect();
    assert_eq!(names, ["ZI", "IY", "XZ", "YZ", "YX", "ZY", "XX", "ZI"]);
}

proptest! {
    #[test]
    fn symmetry_preserves_commutation(a in 0u8..16, b in 0u8..16) {
        let (oa, ob) = (SiteOp::from_vector_bits(2, a.into()), SiteOp::from_vector_bits(2, b.into()));
        prop_assert_eq!(oa.lambda(ob), cycle_second_qubit(oa).lambda(cycle_second_qubit(ob)));
    }

    #[test]
    fn basic_string_translates_stay_logical(x in 0i64..5, y in 0i64..5, z in 0i64..5, kind in 0usize..3) {
        let l = 5;
        let o = basic_strings([x, y, z])[kind].on_lattice(l);
        prop_assert!(is_logical(&o, &code(), l));
    }
}

#[test]
fn relation_phase_is_independent_of_multiplication_order() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let c = code();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for (rel, l) in [(RelationLattice::r1(), 5), (RelationLattice::r2(), 4)] {
        let mut placements = rel.placements(l, [0, 0, 0]).unwrap();
        for _ in 0..5 {
            placements.shuffle(&mut rng);
            let p = placements
                .iter()
                .fold(PauliOperator::identity(2), |acc, (t, s)| acc.multiply_with_phase(&hermitian_placement(&c, *t, *s, l)));
            assert!(p.is_identity());
            assert_eq!(p.phase(), Phase::ONE, "{}", rel.name);
        }
    }
}

#[test]
fn basic_strings_are_logical_on_every_tested_size() {
    for l in 5..=16 {
        for s in basic_strings([0, 0, 0]) {
            assert!(is_logical(&s.on_lattice(l), &code(), l), "{:?} L={l}", s.kind);
        }
    }
}

#[test]
fn relation_lower_bound_examples() {
    assert!(lower_bound_k(5).unwrap().relations >= 5);
    assert!(lower_bound_k(4).unwrap().relations >= 10);
    assert!(lower_bound_k(1).is_err());
}
