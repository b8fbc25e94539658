use proptest::prelude::*;

use trisasaki::chevalley::build_chevalley;
use trisasaki::dynkin::isotropy_report;
use trisasaki::linalg::SparseVec;
use trisasaki::rootcore::{build_root_system, LieType};
use trisasaki::tensors::Mode;

fn lie_type() -> impl Strategy<Value = LieType> {
    prop::sample::select(LieType::all_up_to(7))
}

fn small_type() -> impl Strategy<Value = LieType> {
    prop::sample::select(
        ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
            .map(|s| s.parse::<LieType>().unwrap())
            .to_vec(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cartan_numbers_are_bounded_and_strings_consistent(t in lie_type(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let rs = build_root_system(t);
        let a = &rs.roots()[i.index(rs.roots().len())];
        let b = &rs.roots()[j.index(rs.roots().len())];
        let c = rs.cartan_number(a, b).unwrap();
        prop_assert!(c.abs() <= 3);
        if a != b && *a != b.neg() {
            let (p, q) = rs.root_string(a, b).unwrap();
            prop_assert_eq!(p as i64 - q as i64, c);
        }
    }

    #[test]
    fn grading_and_dimension_count(t in lie_type()) {
        let row = isotropy_report(&build_root_system(t)).unwrap();
        prop_assert_eq!(row.dim_m, 4 * row.n + 3);
        prop_assert_eq!(row.dim_g - row.dim_h, row.dim_m);
        prop_assert_eq!(row.einstein_constant, 2 * (2 * row.n + 1));
    }

    #[test]
    fn brackets_are_antisymmetric_and_satisfy_jacobi(t in small_type(), a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let cb = build_chevalley(build_root_system(t)).unwrap();
        let table = cb.table();
        let d = table.dim();
        let (a, b, c) = (a % d, b % d, c % d);
        let sum = table.bracket(a, b).plus(table.bracket(b, a));
        prop_assert!(sum.is_zero());
        prop_assert!(table.jacobi_residual(a, b, c).is_zero());
    }

    #[test]
    fn omega_is_an_involutive_automorphism(t in small_type(), a in 0usize..1000, b in 0usize..1000) {
        let cb = build_chevalley(build_root_system(t)).unwrap();
        let d = cb.dim();
        let (x, y) = (SparseVec::unit(a % d), SparseVec::unit(b % d));
        let lhs = cb.omega(&cb.table().bracket_vecs(&x, &y));
        let rhs = cb.table().bracket_vecs(&cb.omega(&x), &cb.omega(&y));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(cb.omega(&cb.omega(&x)), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn sampled_curvature_is_deterministic_and_passes(seed in any::<u64>(), samples in 10usize..400) {
        use trisasaki::chevalley::compact_real_form;
        use trisasaki::datum::build_complex_datum;
        use trisasaki::tensors::{build_model, compact_split, curvature_checks, nomizu};
        let cb = build_chevalley(build_root_system("C3".parse().unwrap())).unwrap();
        let d = build_complex_datum(&cb, &cb.root_system().highest_root()).unwrap();
        let cf = compact_real_form(&cb).unwrap();
        let model = build_model(compact_split(&cb, &d, &cf).unwrap()).unwrap();
        let nt = nomizu(&model);
        let mode = Mode::Sampled { seed, samples };
        let a = curvature_checks(&model, &nt, mode);
        let b = curvature_checks(&model, &nt, mode);
        prop_assert!(a.0.passed());
        let want = (samples / 5).min(a.1.ricci_population) + (samples - samples / 5).min(a.1.condition_population);
        prop_assert_eq!(a.1.ricci_entries + a.1.condition_tuples, want);
        prop_assert_eq!(a, b);
    }
}
