//! Reductive splitting, invariant 3-Sasakian tensors, Nomizu operator and
//! curvature, all on an adapted basis of the compact form.

pub mod curvature;
pub mod model;
pub mod nomizu;
pub mod split;

pub use curvature::{curvature_checks, ricci, riemann, CurvatureInfo, Mode};
pub use model::{build_model, verify_sasaki_identities, SasakiModel};
pub use nomizu::{nomizu, verify_nomizu, NomizuTable};
pub use split::{compact_split, ReductiveSplit};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{build_chevalley, compact_real_form};
    use crate::datum::build_complex_datum;
    use crate::linalg::{q, Matrix};
    use crate::rootcore::{build_root_system, LieType};

    fn model(s: &str) -> SasakiModel {
        let cb = build_chevalley(build_root_system(s.parse::<LieType>().unwrap())).unwrap();
        let d = build_complex_datum(&cb, &cb.root_system().highest_root()).unwrap();
        let cf = compact_real_form(&cb).unwrap();
        build_model(compact_split(&cb, &d, &cf).unwrap()).unwrap()
    }

    fn assert_section(s: &crate::report::Section) {
        if let Some(c) = s.first_failure() {
            panic!("{}: {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn dims() {
        for (t, h, g1, m) in [("A1", 0, 0, 3), ("A2", 1, 4, 7), ("G2", 3, 8, 11)] {
            let md = model(t);
            let s = md.split();
            assert_eq!((s.dim_h(), s.dim_g1(), s.dim_m()), (h, g1, m), "{t}");
        }
    }

    /// On sp(1) the Killing form is −8 on the basis, so g = −B/8 = identity.
    #[test]
    fn a1_gram_is_identity() {
        let md = model("A1");
        assert_eq!(*md.gram(), Matrix::identity(3));
        assert_eq!(md.einstein_constant(), 2);
    }

    #[test]
    fn all_identities_small_types() {
        for t in ["A1", "A2", "A3", "B3", "C2", "C3", "G2"] {
            let md = model(t);
            assert_section(&md.split().verify());
            assert_section(&verify_sasaki_identities(&md));
            let nt = nomizu(&md);
            assert_section(&verify_nomizu(&md, &nt));
            let (sec, info) = curvature_checks(&md, &nt, Mode::Full);
            assert_section(&sec);
            assert!(info.exhaustive);
        }
    }

    #[test]
    fn einstein_constants() {
        for (t, lambda) in [("A1", 2), ("A2", 6), ("G2", 10)] {
            let md = model(t);
            let nt = nomizu(&md);
            assert_eq!(md.einstein_constant(), lambda);
            for y in 0..md.dim() {
                assert_eq!(ricci(&md, &nt, y, y), q(lambda) * &md.gram()[(y, y)]);
            }
        }
    }

    #[test]
    fn wrong_metric_is_detected() {
        let mut md = model("A2");
        md.rescale_g1(&q(2));
        let nt = nomizu(&md);
        assert!(!verify_nomizu(&md, &nt).checks[0].passed);
        let (sec, _) = curvature_checks(&md, &nt, Mode::Full);
        assert!(sec.checks.iter().all(|c| !c.passed));
        let ids = verify_sasaki_identities(&md);
        let failed: Vec<&str> = ids
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        assert!(
            failed.contains(&"d eta(x, y) = 2 g(x, phi y)"),
            "{failed:?}"
        );
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let md = model("B3");
        let nt = nomizu(&md);
        let a = curvature_checks(
            &md,
            &nt,
            Mode::Sampled {
                seed: 7,
                samples: 500,
            },
        );
        let b = curvature_checks(
            &md,
            &nt,
            Mode::Sampled {
                seed: 7,
                samples: 500,
            },
        );
        assert_eq!(a, b);
        assert_eq!(a.1.ricci_entries + a.1.condition_tuples, 500);
        assert!(a.0.passed());
        let big = curvature_checks(
            &md,
            &nt,
            Mode::Sampled {
                seed: 1,
                samples: 1_000_000,
            },
        );
        assert!(big.1.exhaustive);
    }
}
