//! Chevalley basis of a simple complex Lie algebra and its compact real form.
//!
//! Basis layout: `E_β` for the positive roots in canonical order, then the
//! simple coroots `H_1..H_r`, then `E_{−β}` in the same order as the
//! positives.

pub mod compact;
mod table;

pub use compact::{compact_real_form, CompactForm, ComplexVec};
pub use table::StructureTable;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{frac, q, to_i64, SparseVec, Q};
use crate::rootcore::{coroot_coefficients, Root, RootSystem};

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    rs: RootSystem,
    table: StructureTable,
}

/// How a non-simple positive root is reached: `E_δ = [e_i, E_prev] / pc`.
#[derive(Clone, Copy, Debug)]
struct Step {
    i: usize,
    prev: usize,
    pc: i64,
}

impl ChevalleyBasis {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn h_index(&self, j: usize) -> usize {
        self.num_positive() + j
    }

    pub fn neg_index(&self, k: usize) -> usize {
        self.num_positive() + self.rank() + k
    }

    /// Basis index of `E_β`.
    pub fn root_index(&self, beta: &Root) -> Option<usize> {
        let np = self.num_positive();
        self.rs
            .index_of(beta)
            .map(|i| if i < np { i } else { i + self.rank() })
    }

    /// The root of basis element `b`, or `None` for a Cartan element.
    pub fn root_of(&self, b: usize) -> Option<&Root> {
        let (np, r) = (self.num_positive(), self.rank());
        if b < np {
            Some(&self.rs.roots()[b])
        } else if b >= np + r {
            Some(&self.rs.roots()[b - r])
        } else {
            None
        }
    }

    /// Index of the opposite basis element (`E_β ↔ E_{−β}`, `H_j ↔ H_j`).
    pub fn bar(&self, b: usize) -> usize {
        let (np, r) = (self.num_positive(), self.rank());
        if b < np {
            b + np + r
        } else if b >= np + r {
            b - np - r
        } else {
            b
        }
    }

    /// Chevalley involution: `E_β ↦ −E_{−β}`, `H ↦ −H`.
    pub fn omega(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(v.iter().map(|(b, c)| (self.bar(b), -c.clone())))
    }

    /// Eigenvalue of `ad(H_k)` on basis element `b`.
    pub fn weight(&self, b: usize, k: usize) -> i64 {
        self.root_of(b)
            .map_or(0, |beta| root_on_coroot(&self.rs, beta, k))
    }

    /// `β(H)` for a Cartan element `H` given in the `H_k` coordinates.
    pub fn root_on(&self, beta: &Root, h: &SparseVec) -> Q {
        let mut acc = Q::zero();
        for (b, c) in h.iter() {
            let k = b
                .checked_sub(self.num_positive())
                .filter(|&k| k < self.rank());
            let k = k.expect("Cartan element expected");
            acc += c * q(root_on_coroot(&self.rs, beta, k));
        }
        acc
    }

    /// The coroot `H_α ∈ [u_α, u_{−α}]` with `α(H_α) = 2`, read off the
    /// table and checked against the coroot formula.
    pub fn coroot_element(&self, alpha: &Root) -> Result<SparseVec> {
        let a = self
            .root_index(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.coords().to_vec(), self.rs.lie_type().label()))?;
        let h = self.table.bracket(a, self.bar(a)).clone();
        let expected = SparseVec::from_pairs(
            coroot_coefficients(&self.rs, alpha)
                .into_iter()
                .enumerate()
                .map(|(k, c)| (self.h_index(k), q(c))),
        );
        if h != expected || self.root_on(alpha, &h) != q(2) {
            return Err(Error::Verification {
                check: "coroot relation".into(),
                witness: format!("α = {alpha}: [E_α, E_−α] = {h}"),
            });
        }
        Ok(h)
    }

    /// `N_{βγ}` with `[E_β, E_γ] = N_{βγ} E_{β+γ}`; zero when `β+γ ∉ Φ`.
    pub fn structure_constant(&self, beta: &Root, gamma: &Root) -> Result<i64> {
        let label = || self.rs.lie_type().label();
        let b = self
            .root_index(beta)
            .ok_or_else(|| Error::NotARoot(beta.coords().to_vec(), label()))?;
        let g = self
            .root_index(gamma)
            .ok_or_else(|| Error::NotARoot(gamma.coords().to_vec(), label()))?;
        let sum = beta.plus(gamma);
        if sum.is_zero() {
            return Err(Error::DegenerateString {
                alpha: beta.coords().to_vec(),
                beta: gamma.coords().to_vec(),
            });
        }
        let v = self.table.bracket(b, g);
        match self.root_index(&sum) {
            None => {
                if v.is_zero() {
                    Ok(0)
                } else {
                    Err(sign_failure(
                        beta,
                        gamma,
                        "bracket nonzero although β+γ is not a root",
                    ))
                }
            }
            Some(s) => {
                if v.nnz() != 1 || v.coeff(s).is_none() {
                    return Err(sign_failure(
                        beta,
                        gamma,
                        "bracket leaves the root space u_{β+γ}",
                    ));
                }
                to_i64(&v.get(s)).ok_or_else(|| sign_failure(beta, gamma, "non-integral constant"))
            }
        }
    }

    /// Relations fixed by a Chevalley basis, checked on every pair of
    /// roots: Cartan weights, coroot relation, `|N_{βγ}| = p+1` and
    /// `N_{−β,−γ} = −N_{βγ}`.
    pub fn verify_relations(&self) -> Result<()> {
        if let Some((a, b)) = self.table.antisymmetry_failure() {
            return Err(Error::Verification {
                check: "antisymmetry".into(),
                witness: format!("[{}, {}]", self.table.labels()[a], self.table.labels()[b]),
            });
        }
        for b in 0..self.dim() {
            for k in 0..self.rank() {
                let expected = SparseVec::single(b, q(self.weight(b, k)));
                if *self.table.bracket(self.h_index(k), b) != expected {
                    return Err(Error::Verification {
                        check: "Cartan weights".into(),
                        witness: format!("[H{}, {}]", k + 1, self.table.labels()[b]),
                    });
                }
            }
        }
        for beta in self.rs.positive_roots() {
            self.coroot_element(beta)?;
        }
        for beta in self.rs.roots() {
            for gamma in self.rs.roots() {
                if beta.plus(gamma).is_zero() {
                    continue;
                }
                let n = self.structure_constant(beta, gamma)?;
                let n_neg = self.structure_constant(&beta.neg(), &gamma.neg())?;
                if n_neg != -n {
                    return Err(sign_failure(beta, gamma, "N_{−β,−γ} ≠ −N_{βγ}"));
                }
                if self.rs.contains(&beta.plus(gamma)) && beta != gamma {
                    let (p, _) = self.rs.root_string(beta, gamma)?;
                    if n.abs() != p as i64 + 1 {
                        return Err(sign_failure(beta, gamma, "|N_{βγ}| ≠ p+1"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive Jacobi identity on basis triples.
    pub fn verify_jacobi(&self) -> Result<()> {
        match self.table.jacobi_failure() {
            None => Ok(()),
            Some((a, b, c)) => {
                let l = self.table.labels();
                Err(Error::Verification {
                    check: "Jacobi identity".into(),
                    witness: format!("({}, {}, {})", l[a], l[b], l[c]),
                })
            }
        }
    }
}

fn root_on_coroot(rs: &RootSystem, beta: &Root, k: usize) -> i64 {
    beta.coords()
        .iter()
        .enumerate()
        .map(|(j, &c)| c * rs.cartan()[k][j])
        .sum()
}

fn sign_failure(beta: &Root, gamma: &Root, what: &str) -> Error {
    Error::Construction(format!(
        "structure constants at β = {beta}, γ = {gamma}: {what}"
    ))
}

fn basis_label(rs: &RootSystem, b: usize) -> String {
    let (np, r) = (rs.num_positive(), rs.rank());
    if b < np {
        format!("E[{}]", rs.roots()[b].label())
    } else if b < np + r {
        format!("H{}", b - np + 1)
    } else {
        format!("E[{}]", rs.roots()[b - r].label())
    }
}

/// Builds the Chevalley basis by height recursion.
///
/// Every non-simple positive root `δ` is reached from `δ' = δ − α_i` with
/// `i` the smallest index for which `δ'` is a root, and
/// `E_δ := [e_i, E_δ'] / (p+1)` where `p` is the length of the `α_i`-string
/// below `δ'`. Negative root vectors are `E_{−β} := −ω(E_β)`.
pub fn build_chevalley(rs: RootSystem) -> Result<ChevalleyBasis> {
    let r = rs.rank();
    let np = rs.num_positive();
    let dim = 2 * np + r;
    let pos: Vec<Root> = rs.positive_roots().to_vec();
    let h_idx = |k: usize| np + k;
    let neg_idx = |k: usize| np + r + k;
    let bar = |b: usize| {
        if b < np {
            b + np + r
        } else if b >= np + r {
            b - np - r
        } else {
            b
        }
    };
    let omega = |v: &SparseVec| SparseVec::from_pairs(v.iter().map(|(b, c)| (bar(b), -c.clone())));
    let pos_index = |root: &Root| rs.index_of(root).filter(|&x| x < np);

    let mut steps: Vec<Option<Step>> = Vec::with_capacity(np);
    for delta in &pos {
        if delta.height() == 1 {
            steps.push(None);
            continue;
        }
        let (i, prev) = (0..r)
            .find_map(|i| pos_index(&delta.minus(&rs.simple_root(i))).map(|x| (i, x)))
            .ok_or_else(|| Error::Construction(format!("{delta} has no predecessor")))?;
        let a = rs.simple_root(i);
        let mut p = 0;
        while rs.contains(&pos[prev].plus_multiple(-(p + 1), &a)) {
            p += 1;
        }
        steps.push(Some(Step { i, prev, pc: p + 1 }));
    }

    // Adjoint action of the generators e_j = E_{α_j}, f_j = E_{−α_j}.
    let mut e_act: Vec<Vec<Option<SparseVec>>> = vec![vec![None; dim]; r];
    let mut f_act: Vec<Vec<Option<SparseVec>>> = vec![vec![None; dim]; r];
    let cartan = rs.cartan();
    for j in 0..r {
        for k in 0..r {
            e_act[j][h_idx(k)] = Some(SparseVec::single(j, q(-cartan[k][j])));
            f_act[j][h_idx(k)] = Some(SparseVec::single(neg_idx(j), q(cartan[k][j])));
            let fe = if j == k {
                SparseVec::single(h_idx(j), q(-1))
            } else {
                SparseVec::new()
            };
            f_act[j][k] = Some(fe);
        }
    }

    fn apply(row: &[Option<SparseVec>], v: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (b, c) in v.iter() {
            let img = row[b].as_ref().ok_or_else(|| {
                Error::Construction(format!("generator action on {b} used before definition"))
            })?;
            out.add_scaled(c, img);
        }
        Ok(out)
    }
    let known = |slot: &Option<SparseVec>, what: &str| -> Result<SparseVec> {
        slot.clone()
            .ok_or_else(|| Error::Construction(format!("{what} used before definition")))
    };

    let max_h = pos.last().map_or(0, |x| x.height()) as usize;
    let mut by_height: Vec<Vec<usize>> = vec![Vec::new(); max_h + 2];
    for (k, root) in pos.iter().enumerate() {
        by_height[root.height() as usize].push(k);
    }

    for h in 1..=max_h {
        // f_j on height h+1
        for &d in &by_height[h + 1] {
            let st = steps[d].expect("non-simple");
            for j in 0..r {
                let inner = known(&f_act[j][st.prev], "f-action")?;
                let mut v = apply(&e_act[st.i], &inner)?;
                if st.i == j {
                    v.add_term(st.prev, q(-root_on_coroot(&rs, &pos[st.prev], j)));
                }
                f_act[j][d] = Some(v.scaled(&frac(1, st.pc)));
            }
        }
        // e_j on height h
        for &g in &by_height[h] {
            for j in 0..r {
                let delta = pos[g].plus(&rs.simple_root(j));
                let img = match pos_index(&delta) {
                    None => SparseVec::new(),
                    Some(d) => {
                        let st = steps[d].expect("non-simple");
                        if st.i == j && st.prev == g {
                            SparseVec::single(d, q(st.pc))
                        } else {
                            // Compare images under ad(f_i) inside the line u_{δ−α_i}.
                            let inner = known(&f_act[st.i][g], "f-action")?;
                            let lhs = apply(&e_act[j], &inner)?;
                            let rhs = known(&f_act[st.i][d], "f-action")?;
                            let line = |v: &SparseVec| v.support().all(|b| b == st.prev);
                            let denom = rhs.get(st.prev);
                            if denom.is_zero() || !line(&lhs) || !line(&rhs) {
                                return Err(Error::Construction(format!(
                                    "sign consistency failed for roots {}, {}, {}",
                                    pos[g],
                                    rs.simple_root(j),
                                    delta
                                )));
                            }
                            SparseVec::single(d, lhs.get(st.prev) / denom)
                        }
                    }
                };
                e_act[j][g] = Some(img);
            }
        }
    }

    for j in 0..r {
        for k in 0..np {
            let f = known(&f_act[j][k], "f-action")?;
            let e = known(&e_act[j][k], "e-action")?;
            e_act[j][neg_idx(k)] = Some(omega(&f));
            f_act[j][neg_idx(k)] = Some(omega(&e));
        }
    }
    let unwrap_row = |row: &[Option<SparseVec>]| -> Result<Vec<SparseVec>> {
        row.iter().map(|s| known(s, "generator action")).collect()
    };

    let mut ad: Vec<Vec<SparseVec>> = vec![Vec::new(); dim];
    for j in 0..r {
        ad[j] = unwrap_row(&e_act[j])?;
        ad[neg_idx(j)] = unwrap_row(&f_act[j])?;
    }
    for k in 0..r {
        ad[h_idx(k)] = (0..dim)
            .map(|b| {
                let w = if b < np {
                    root_on_coroot(&rs, &pos[b], k)
                } else if b >= np + r {
                    -root_on_coroot(&rs, &pos[b - np - r], k)
                } else {
                    0
                };
                SparseVec::single(b, q(w))
            })
            .collect();
    }
    for d in 0..np {
        let Some(st) = steps[d] else { continue };
        let e_i = unwrap_row(&e_act[st.i])?;
        let inv = frac(1, st.pc);
        let col: Vec<SparseVec> = (0..dim)
            .map(|b| {
                let mut v = SparseVec::new();
                for (x, c) in ad[st.prev][b].iter() {
                    v.add_scaled(c, &e_i[x]);
                }
                for (x, c) in e_i[b].iter() {
                    v.add_scaled(&-c.clone(), &ad[st.prev][x]);
                }
                v.scaled(&inv)
            })
            .collect();
        ad[d] = col;
    }
    for k in 0..np {
        if steps[k].is_none() {
            continue;
        }
        ad[neg_idx(k)] = (0..dim).map(|b| omega(&ad[k][bar(b)])).collect();
    }

    let labels = (0..dim).map(|b| basis_label(&rs, b)).collect();
    let cb = ChevalleyBasis {
        table: StructureTable::from_ad(labels, ad),
        rs,
    };
    cb.verify_relations()?;
    Ok(cb)
}
