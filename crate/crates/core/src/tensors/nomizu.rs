//! Nomizu operator of the invariant metric, solved from the Koszul formula.

use num_traits::Zero;
use rayon::prelude::*;

use super::model::SasakiModel;
use crate::linalg::{frac, SparseVec, Q};
use crate::report::{Check, Section};

/// `α(e_a, e_b)` for all basis pairs of `m`.
#[derive(Clone, Debug)]
pub struct NomizuTable {
    table: Vec<Vec<SparseVec>>,
}

impl NomizuTable {
    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn get(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    /// `α(e_a, y)`
    pub fn left(&self, a: usize, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (b, c) in y.iter() {
            out.add_scaled(c, &self.table[a][b]);
        }
        out
    }

    /// `α(x, e_b)`
    pub fn right(&self, x: &SparseVec, b: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, c) in x.iter() {
            out.add_scaled(c, &self.table[a][b]);
        }
        out
    }
}

/// Row `w` of the Gram matrix applied to a sparse vector: `g(e_w, v)`.
fn g_row(model: &SasakiModel, w: usize, v: &SparseVec) -> Q {
    let mut acc = Q::zero();
    for (x, c) in v.iter() {
        let gw = &model.gram()[(w, x)];
        if !gw.is_zero() {
            acc += c * gw;
        }
    }
    acc
}

/// Solves `2g(α(x,y), z) = g([x,y]_m, z) − g([y,z]_m, x) + g([z,x]_m, y)`.
pub fn nomizu(model: &SasakiModel) -> NomizuTable {
    let m = model.dim();
    let split = model.split();
    let br: Vec<Vec<SparseVec>> = (0..m)
        .map(|a| (0..m).map(|b| split.bracket_m(a, b)).collect())
        .collect();
    let half = frac(1, 2);
    let ginv = model.gram_inv();
    let table = (0..m)
        .into_par_iter()
        .map(|a| {
            (0..m)
                .map(|b| {
                    let mut rhs = SparseVec::new();
                    for z in 0..m {
                        let mut v = g_row(model, z, &br[a][b]);
                        v -= g_row(model, a, &br[b][z]);
                        v += g_row(model, b, &br[z][a]);
                        rhs.add_term(z, v);
                    }
                    ginv.mul_sparse(&rhs).scaled(&half)
                })
                .collect()
        })
        .collect();
    NomizuTable { table }
}

/// Case formula, torsion, metric compatibility, `α(x,x) = 0` and
/// `∇ξ_i = −φ_i`, each on every basis pair (triple for compatibility).
pub fn verify_nomizu(model: &SasakiModel, nt: &NomizuTable) -> Section {
    let m = model.dim();
    let split = model.split();
    let l = model.labels();
    let half = frac(1, 2);
    let pairs = (m * m) as u64;
    let mut checks = Vec::new();

    let witness = (0..m).find_map(|a| {
        (0..m).find_map(|b| {
            let br = split.bracket_m(a, b);
            let expected = match (split.is_k(a), split.is_k(b)) {
                (true, false) => SparseVec::new(),
                (true, true) | (false, false) => br.scaled(&half),
                (false, true) => br,
            };
            (*nt.get(a, b) != expected)
                .then(|| format!("alpha({}, {}) = {}", l[a], l[b], nt.get(a, b)))
        })
    });
    checks.push(Check::from_witness("Nomizu case formula", pairs, witness));

    let witness = (0..m).find_map(|a| {
        (0..m).find_map(|b| {
            let lhs = nt.get(a, b).minus(nt.get(b, a));
            (lhs != split.bracket_m(a, b)).then(|| format!("({}, {})", l[a], l[b]))
        })
    });
    checks.push(Check::from_witness(
        "torsion alpha(x,y) - alpha(y,x) = [x,y]_m",
        pairs,
        witness,
    ));

    let witness = (0..m).into_par_iter().find_map_first(|a| {
        for b in 0..m {
            for c in b..m {
                let s = g_row(model, c, nt.get(a, b)) + g_row(model, b, nt.get(a, c));
                if !s.is_zero() {
                    return Some(format!("({}, {}, {})", l[a], l[b], l[c]));
                }
            }
        }
        None
    });
    checks.push(Check::from_witness(
        "metric compatibility g(alpha(x,y),z) + g(y,alpha(x,z)) = 0",
        (m * m * (m + 1) / 2) as u64,
        witness,
    ));

    let witness = (0..m)
        .find(|&a| !nt.get(a, a).is_zero())
        .map(|a| l[a].clone());
    checks.push(Check::from_witness("alpha(x, x) = 0", m as u64, witness));

    let witness = (0..3).find_map(|i| {
        (0..m).find_map(|a| {
            let lhs = nt.get(a, i);
            let rhs = model.phi(i).column(a).neg();
            (*lhs != rhs).then(|| format!("i = {}, x = {}", i + 1, l[a]))
        })
    });
    checks.push(Check::from_witness(
        "alpha(x, X_i) = -phi_i x",
        3 * m as u64,
        witness,
    ));

    Section::new("Nomizu operator", checks)
}
