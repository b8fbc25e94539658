//! Riemann and Ricci curvature at the base point.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::model::SasakiModel;
use super::nomizu::NomizuTable;
use crate::linalg::{fmt_q, q, SparseVec, Q};
use crate::report::{Check, Section};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Full,
    /// Deterministic pseudo-random subset of `samples` index tuples.
    Sampled {
        seed: u64,
        samples: usize,
    },
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CurvatureInfo {
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub einstein_constant: i64,
    pub ricci_entries: usize,
    pub ricci_population: usize,
    pub condition_tuples: usize,
    pub condition_population: usize,
    /// True when every tuple of both populations was evaluated.
    pub exhaustive: bool,
}

/// `R(x,y)z = α(x,α(y,z)) − α(y,α(x,z)) − α([x,y]_m, z) − [[x,y]_h, z]` on
/// basis vectors of `m`.
pub fn riemann(model: &SasakiModel, nt: &NomizuTable, x: usize, y: usize, z: usize) -> SparseVec {
    let split = model.split();
    let mut r = nt.left(x, nt.get(y, z));
    r.sub(&nt.left(y, nt.get(x, z)));
    r.sub(&nt.right(&split.bracket_m(x, y), z));
    let h = split.bracket_h(x, y);
    let mut hz = SparseVec::new();
    for (c, coef) in h.iter() {
        hz.add_scaled(coef, split.table().bracket(c, z));
    }
    r.sub(&hz);
    r
}

/// `Ric(y, z) = tr(x ↦ R(x,y)z)`.
pub fn ricci(model: &SasakiModel, nt: &NomizuTable, y: usize, z: usize) -> Q {
    (0..model.dim())
        .map(|x| riemann(model, nt, x, y, z).get(x))
        .sum()
}

fn ricci_witness(model: &SasakiModel, nt: &NomizuTable, y: usize, z: usize) -> Option<String> {
    let lambda = q(model.einstein_constant());
    let got = ricci(model, nt, y, z);
    let want = &lambda * &model.gram()[(y, z)];
    let l = model.labels();
    (got != want).then(|| {
        format!(
            "Ric({}, {}) = {} vs {}",
            l[y],
            l[z],
            fmt_q(&got),
            fmt_q(&want)
        )
    })
}

/// `R(x, ξ_i)y = η_i(y)x − g(x,y)ξ_i`.
fn condition_witness(
    model: &SasakiModel,
    nt: &NomizuTable,
    i: usize,
    x: usize,
    y: usize,
) -> Option<String> {
    let got = riemann(model, nt, x, i, y);
    let mut want = SparseVec::single(x, model.eta(i).get(y));
    want.add_term(i, -model.gram()[(x, y)].clone());
    let l = model.labels();
    (got != want).then(|| format!("R({}, xi_{}){} = {}", l[x], i + 1, l[y], got))
}

fn pick(population: usize, amount: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    if amount >= population {
        return (0..population).collect();
    }
    let mut v = sample(rng, population, amount).into_vec();
    v.sort_unstable();
    v
}

/// Einstein condition `Ric = 2(2n+1) g` and the ξ-curvature condition, on
/// all index tuples (full) or on a seeded sample. In sampled mode one fifth
/// of the budget goes to Ricci entries, each a full trace over `m`.
pub fn curvature_checks(
    model: &SasakiModel,
    nt: &NomizuTable,
    mode: Mode,
) -> (Section, CurvatureInfo) {
    let m = model.dim();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|y| (y..m).map(move |z| (y, z))).collect();
    let ricci_population = pairs.len();
    let condition_population = 3 * m * m;
    let (ricci_idx, cond_idx, seed) = match mode {
        Mode::Full => (
            (0..ricci_population).collect(),
            (0..condition_population).collect(),
            None,
        ),
        Mode::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = pick(ricci_population, samples / 5, &mut rng);
            let c = pick(condition_population, samples - samples / 5, &mut rng);
            (r, c, Some(seed))
        }
    };
    let ricci_fail = ricci_idx
        .par_iter()
        .find_map_first(|&p| ricci_witness(model, nt, pairs[p].0, pairs[p].1));
    let cond_fail = cond_idx.par_iter().find_map_first(|&t| {
        let (i, rest) = (t / (m * m), t % (m * m));
        condition_witness(model, nt, i, rest / m, rest % m)
    });
    let lambda = model.einstein_constant();
    let checks = vec![
        Check::from_witness(
            format!("Einstein Ric = {lambda} g"),
            ricci_idx.len() as u64,
            ricci_fail,
        ),
        Check::from_witness(
            "R(x, xi_i)y = eta_i(y)x - g(x,y)xi_i",
            cond_idx.len() as u64,
            cond_fail,
        ),
    ];
    let info = CurvatureInfo {
        mode: if seed.is_some() { "sampled" } else { "full" },
        seed,
        einstein_constant: lambda,
        ricci_entries: ricci_idx.len(),
        ricci_population,
        condition_tuples: cond_idx.len(),
        condition_population,
        exhaustive: ricci_idx.len() == ricci_population && cond_idx.len() == condition_population,
    };
    (Section::new("curvature", checks), info)
}
