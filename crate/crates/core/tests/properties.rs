//! Property tests over randomly drawn inputs.

use proptest::prelude::*;
use staut::cyclicity::{check_dependency_table, check_further_equivalences, check_upper_lower_equivalences, profile, Axiom, CycleData};
use staut::linear::build_vec_model;
use staut::quantale::{build_lukasiewicz, build_rel_quantale, build_s3, is_cyclic};
use staut::staut::{lcurry, lcurry_inv, rcurry, rcurry_inv, StautModel};
use staut::strictify::{check_strict_negations, zangify, Window, ZString, ZangModel};
use staut::thin::quantale_model;
use staut::{QMat, Q};
use std::sync::{Arc, OnceLock};

fn q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Q::new(n, d))
}

fn mat(r: usize, c: usize) -> impl Strategy<Value = QMat> {
    prop::collection::vec(q(), r * c).prop_map(move |xs| QMat::from_rows(&xs.chunks(c).map(|row| row.to_vec()).collect::<Vec<_>>()))
}

fn vec2() -> &'static staut::linear::LinearModel {
    static M: OnceLock<staut::linear::LinearModel> = OnceLock::new();
    M.get_or_init(|| build_vec_model(2, 1).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matrix_product_is_associative(a in mat(2, 3), b in mat(3, 2), c in mat(2, 2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn kron_mixed_product(a in mat(2, 2), b in mat(2, 1), c in mat(2, 2), d in mat(1, 2)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn inverse_is_two_sided(a in mat(3, 3)) {
        match a.inverse() {
            Some(inv) => {
                prop_assert!(a.mul(&inv).is_identity());
                prop_assert!(inv.mul(&a).is_identity());
            }
            None => prop_assert!(a.rank() < 3),
        }
    }

    #[test]
    fn rank_plus_nullity(a in mat(3, 4)) {
        prop_assert_eq!(a.rank() + a.nullspace().len(), 4);
    }

    #[test]
    fn relation_residuation(a in 0u32..16, b in 0u32..16) {
        let q = build_rel_quantale(2).unwrap();
        let d = q.dualizer();
        prop_assert_eq!(q.leq(q.tensor(a, b), d), q.leq(b, q.ldual(a)));
        prop_assert_eq!(q.leq(q.tensor(b, a), d), q.leq(b, q.rdual(a)));
        prop_assert_eq!(q.rdual(q.ldual(a)), a);
        prop_assert_eq!(q.ldual(q.par(a, b)), q.tensor(q.ldual(b), q.ldual(a)));
    }

    #[test]
    fn lukasiewicz_is_cyclic(n in 2usize..7) {
        prop_assert!(is_cyclic(&build_lukasiewicz(n).unwrap()).0);
    }

    #[test]
    fn curry_roundtrips_on_vec(coeffs in prop::collection::vec(q(), 16), i in 0usize..2, j in 0usize..2) {
        let m = vec2();
        let g = m.generators();
        let (p, t) = (g[i], g[j]);
        let span = m.hom_span(p.tensor(t), staut::ObjRef::d());
        let terms: Vec<(Q, &staut::Mor)> = coeffs.iter().copied().zip(span.iter()).collect();
        let w = m.lin_comb(&terms).unwrap();
        prop_assert_eq!(lcurry_inv(m, &lcurry(m, &w).unwrap()).unwrap(), w.clone());
        prop_assert_eq!(rcurry_inv(m, &rcurry(m, &w).unwrap()).unwrap(), w);
    }

    #[test]
    fn window_parse_roundtrip(lo in -8i64..=0, hi in 0i64..=8) {
        let w = Window::parse(&format!("{lo},{hi}")).unwrap();
        prop_assert_eq!((w.lo, w.hi), (lo, hi));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Scalar cycles on Vec: the profile satisfies the dependency rows and
    /// equivalences, and K and T0 follow `λ² = 1` and `λ = 1`.
    #[test]
    fn scalar_profiles_are_consistent(n in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), d in 1i64..=3) {
        let lam = Q::new(n, d);
        let pr = profile(vec2(), &CycleData::scalar(lam));
        prop_assert!(check_dependency_table(std::slice::from_ref(&pr)).pass);
        prop_assert!(check_upper_lower_equivalences(&pr).pass);
        prop_assert!(check_further_equivalences(&pr).pass);
        prop_assert_eq!(pr.holds(Axiom::K), lam * lam == Q::one());
        prop_assert_eq!(pr.holds(Axiom::T0), lam == Q::one());
    }

    #[test]
    fn strict_negations_on_random_windows(lo in -3i64..=0, hi in 0i64..=3) {
        let base: Arc<dyn StautModel> = Arc::new(quantale_model(build_rel_quantale(2).unwrap(), 2, 0));
        let g = base.generators();
        let c = CycleData::identity();
        let w = Window::new(lo, hi).unwrap();
        let z = ZangModel::new("Z", base.clone(), w, vec![("p", zangify(base.clone(), g[0])), ("f", ZString::period2(base.clone(), g[1], &c))]).unwrap();
        prop_assert!(check_strict_negations(&z).pass);
    }

    #[test]
    fn s3_cyclicity_matches_centrality(k in 0usize..6) {
        let (labels, table) = staut::quantale::s3();
        let central = (0..6).all(|g| table[g * 6 + k] == table[k * 6 + g]);
        prop_assert_eq!(is_cyclic(&build_s3(&labels[k]).unwrap()).0, central);
    }
}
