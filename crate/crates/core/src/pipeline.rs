//! End-to-end verification of one type: root system, Chevalley basis,
//! datum, compact form, tensors, curvature and isotropy.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::chevalley::{build_chevalley, compact_real_form};
use crate::datum::{build_complex_datum, verify_module_iso, ModuleIsoReport};
use crate::dynkin::{isotropy_report, IsotropyReport};
use crate::error::{Error, Result};
use crate::report::{Check, Section};
use crate::rootcore::{build_root_system, form_is_consistent, reflection_closure_failure, LieType};
use crate::tensors::{
    build_model, compact_split, curvature_checks, nomizu, verify_nomizu, verify_sasaki_identities,
    CurvatureInfo, Mode,
};

/// Above this dimension `auto` resolves to sampled curvature.
pub const FULL_MODE_MAX_DIM: usize = 78;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeChoice {
    Full,
    Sampled,
    Auto,
}

/// Which check groups to run beyond the always-on structural ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSet {
    pub datum: bool,
    pub identities: bool,
    pub nomizu: bool,
    pub curvature: bool,
}

impl CheckSet {
    pub const ALL: CheckSet = CheckSet {
        datum: true,
        identities: true,
        nomizu: true,
        curvature: true,
    };
    pub const NONE: CheckSet = CheckSet {
        datum: false,
        identities: false,
        nomizu: false,
        curvature: false,
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub checks: CheckSet,
    pub mode: ModeChoice,
    pub seed: u64,
    pub samples: usize,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            checks: CheckSet::ALL,
            mode: ModeChoice::Auto,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            timing: false,
        }
    }
}

impl Options {
    pub fn resolve_mode(&self, dim_g: usize) -> Mode {
        let full = match self.mode {
            ModeChoice::Full => true,
            ModeChoice::Sampled => false,
            ModeChoice::Auto => dim_g <= FULL_MODE_MAX_DIM,
        };
        if full {
            Mode::Full
        } else {
            Mode::Sampled {
                seed: self.seed,
                samples: self.samples,
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub dim_g: usize,
    pub dim_h: usize,
    pub n: usize,
    pub dim_m: usize,
    pub einstein_constant: usize,
    pub highest_root: Vec<i64>,
    /// Complex dimensions of the grading blocks `k = −2, …, 2`.
    pub grading_dims: [usize; 5],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_iso: Option<ModuleIsoReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureInfo>,
    pub isotropy: IsotropyReport,
    pub sections: Vec<Section>,
    pub passed: bool,
    /// Milliseconds per stage; only present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
}

impl TypeReport {
    /// `(section, check)` of the first failing check.
    pub fn first_failure(&self) -> Option<(&Section, &Check)> {
        self.sections
            .iter()
            .find_map(|s| s.first_failure().map(|c| (s, c)))
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }
}

/// A verifier that reports through `Result` becomes a single check.
fn check_of(name: &str, evaluated: u64, r: Result<()>) -> Check {
    match r {
        Ok(()) => Check::pass(name, evaluated),
        Err(Error::Verification { check, witness }) => {
            Check::fail(name, evaluated, format!("{check}: {witness}"))
        }
        Err(e) => Check::fail(name, evaluated, e.to_string()),
    }
}

struct Clock {
    on: bool,
    last: Instant,
    stages: BTreeMap<String, u64>,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock {
            on,
            last: Instant::now(),
            stages: BTreeMap::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        if self.on {
            let now = Instant::now();
            self.stages
                .insert(stage.into(), (now - self.last).as_millis() as u64);
            self.last = now;
        }
    }
}

/// Runs every selected check for `t`. Construction failures that prevent
/// later stages from existing are returned as errors; everything else is
/// recorded as a check.
pub fn verify_type(t: LieType, opts: &Options) -> Result<TypeReport> {
    let mut clock = Clock::new(opts.timing);
    let mut sections = Vec::new();

    let rs = build_root_system(t);
    let theta = rs.highest_root();
    let roots_count = rs.roots().len() as u64;
    let closure = reflection_closure_failure(&rs).map(|(i, b)| format!("s_{} {b}", i + 1));
    let maximal = rs
        .maximality_witness(&theta)
        .map(|w| w.map(|(b, c)| format!("{b}: c = {c}")));
    sections.push(Section::new(
        "root system",
        vec![
            Check::from_witness(
                "closed under simple reflections",
                roots_count * rs.rank() as u64,
                closure,
            ),
            Check::from_witness(
                "symmetrized form matches the Cartan matrix",
                (rs.rank() * rs.rank()) as u64,
                (!form_is_consistent(&rs)).then(|| t.label()),
            ),
            check_of(
                "highest root is maximal",
                roots_count,
                maximal.and_then(|w| match w {
                    None => Ok(()),
                    Some(w) => Err(Error::Verification {
                        check: "maximality".into(),
                        witness: w,
                    }),
                }),
            ),
        ],
    ));
    let iso = isotropy_report(&rs)?;
    clock.lap("root system");

    let cb = build_chevalley(rs)?;
    let dim = cb.dim() as u64;
    let mut chev = vec![
        Check::pass("Chevalley relations", dim * dim),
        check_of(
            "Jacobi identity",
            dim * (dim - 1) * (dim - 2) / 6,
            cb.verify_jacobi(),
        ),
    ];
    clock.lap("chevalley");

    let d = build_complex_datum(&cb, &theta)?;
    let module_iso = if opts.checks.datum {
        let r = verify_module_iso(&cb, &d);
        let evaluated = r
            .as_ref()
            .map(|m| (m.s_alpha_checks + m.v_checks) as u64)
            .unwrap_or(0);
        let report = r.as_ref().ok().cloned();
        sections.push(Section::new(
            "datum",
            vec![
                Check::pass(
                    "complex datum (grading, v + s_alpha = u0, dim u(+-2) = 1)",
                    d.dim_g() as u64,
                ),
                check_of("module isomorphism u1 = C2 (x) W", evaluated, r.map(|_| ())),
            ],
        ));
        report
    } else {
        None
    };
    clock.lap("datum");

    let cf = compact_real_form(&cb)?;
    chev.push(check_of(
        "compact Killing form negative definite",
        dim,
        cf.verify_negative_definite(),
    ));
    chev.push(check_of(
        "compact Killing form ad-invariant",
        dim * dim * dim,
        cf.verify_invariance(),
    ));
    sections.insert(1, Section::new("Chevalley basis", chev));
    clock.lap("compact form");

    let split = compact_split(&cb, &d, &cf)?;
    if opts.checks.identities {
        sections.push(split.verify());
    }
    let model = build_model(split)?;
    if opts.checks.identities {
        sections.push(verify_sasaki_identities(&model));
    }
    clock.lap("tensors");

    let mut curvature = None;
    if opts.checks.nomizu || opts.checks.curvature {
        let nt = nomizu(&model);
        if opts.checks.nomizu {
            sections.push(verify_nomizu(&model, &nt));
        }
        clock.lap("nomizu");
        if opts.checks.curvature {
            let (sec, info) = curvature_checks(&model, &nt, opts.resolve_mode(cb.dim()));
            sections.push(sec);
            curvature = Some(info);
            clock.lap("curvature");
        }
    }

    let n = d.n();
    let dim_m = d.dim_m();
    let witness = |ok: bool, got: usize, want: usize| (!ok).then(|| format!("{got} vs {want}"));
    sections.push(Section::new(
        "dimensions",
        vec![
            Check::from_witness(
                "dim M = 4n + 3",
                1,
                witness(dim_m == 4 * n + 3, dim_m, 4 * n + 3),
            ),
            Check::from_witness(
                "dim u(1) = 2n",
                1,
                witness(d.grading().dim(1) == 2 * n, d.grading().dim(1), 2 * n),
            ),
            Check::from_witness(
                "dim h from diagram = dim v",
                1,
                witness(iso.dim_h == d.dim_v(), iso.dim_h, d.dim_v()),
            ),
            Check::from_witness(
                "n from diagram = n from grading",
                1,
                witness(iso.n == n, iso.n, n),
            ),
            Check::from_witness(
                "dim m of the model = dim M",
                1,
                witness(model.dim() == dim_m, model.dim(), dim_m),
            ),
        ],
    ));

    let passed = sections.iter().all(Section::passed);
    Ok(TypeReport {
        lie_type: t.label(),
        dim_g: d.dim_g(),
        dim_h: d.dim_v(),
        n,
        dim_m,
        einstein_constant: 2 * (2 * n + 1),
        highest_root: theta.coords().to_vec(),
        grading_dims: d.grading().dims(),
        module_iso,
        curvature,
        isotropy: iso,
        sections,
        passed,
        timing_ms: opts.timing.then_some(clock.stages),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_full_pipeline() {
        let r = verify_type("G2".parse().unwrap(), &Options::default()).unwrap();
        assert!(r.passed, "{:?}", r.first_failure());
        assert_eq!((r.n, r.dim_m, r.einstein_constant), (2, 11, 10));
        assert_eq!(r.curvature.as_ref().unwrap().mode, "full");
        assert!(r.timing_ms.is_none());
    }

    #[test]
    fn auto_mode_threshold() {
        let o = Options::default();
        assert_eq!(o.resolve_mode(78), Mode::Full);
        assert_eq!(
            o.resolve_mode(133),
            Mode::Sampled {
                seed: DEFAULT_SEED,
                samples: DEFAULT_SAMPLES
            }
        );
    }

    #[test]
    fn check_selection() {
        let o = Options {
            checks: CheckSet::NONE,
            ..Options::default()
        };
        let r = verify_type("A2".parse().unwrap(), &o).unwrap();
        let names: Vec<&str> = r.sections.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, vec!["root system", "Chevalley basis", "dimensions"]);
        assert!(r.passed);
    }
}
