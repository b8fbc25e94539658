//! Compact reductive splitting `g = h ⊕ m`, `m = k ⊕ g₁`, in an adapted basis.
//!
//! Adapted basis order: `X₁, X₂, X₃`, then `(U_β, V_β)` for the positive
//! roots with `|c_{αβ}| = 1`, then an integer basis of `i·ker α` followed by
//! `(U_β, V_β)` for the positive roots with `c_{αβ} = 0`.

use std::ops::Range;

use num_traits::Zero;
use rayon::prelude::*;

use crate::chevalley::compact::{complex_to_compact, ComplexVec};
use crate::chevalley::{ChevalleyBasis, CompactForm, StructureTable};
use crate::datum::ComplexDatum;
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, q, Matrix, SparseVec, Q};
use crate::report::{Check, Section};

#[derive(Clone, Debug)]
pub struct ReductiveSplit {
    n: usize,
    dim_m: usize,
    basis: Vec<SparseVec>,
    table: StructureTable,
    killing: Matrix,
    h_alpha_trace: Q,
    n_from_grading: usize,
}

impl ReductiveSplit {
    /// `n = dim_R g₁ / 4`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_g(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn dim_h(&self) -> usize {
        self.dim_g() - self.dim_m
    }

    pub fn dim_g1(&self) -> usize {
        self.dim_m - 3
    }

    pub fn k_range(&self) -> Range<usize> {
        0..3
    }

    pub fn g1_range(&self) -> Range<usize> {
        3..self.dim_m
    }

    pub fn h_range(&self) -> Range<usize> {
        self.dim_m..self.dim_g()
    }

    pub fn is_k(&self, a: usize) -> bool {
        a < 3
    }

    pub fn is_g1(&self, a: usize) -> bool {
        (3..self.dim_m).contains(&a)
    }

    pub fn is_h(&self, a: usize) -> bool {
        a >= self.dim_m
    }

    /// Adapted basis vectors in compact-form coordinates.
    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Bracket table in adapted coordinates.
    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        self.table.labels()
    }

    /// Killing form in adapted coordinates.
    pub fn killing(&self) -> &Matrix {
        &self.killing
    }

    /// `B(H_α, H_α)` as the trace of `ad(H_α)²` on the complex algebra.
    pub fn h_alpha_trace(&self) -> &Q {
        &self.h_alpha_trace
    }

    pub fn bracket_m(&self, a: usize, b: usize) -> SparseVec {
        let m = self.dim_m;
        self.table.bracket(a, b).restrict(|x| x < m)
    }

    pub fn bracket_h(&self, a: usize, b: usize) -> SparseVec {
        let m = self.dim_m;
        self.table.bracket(a, b).restrict(|x| x >= m)
    }

    fn block_name(&self, a: usize) -> &'static str {
        if self.is_k(a) {
            "k"
        } else if self.is_g1(a) {
            "g1"
        } else {
            "h"
        }
    }

    /// Allowed blocks for `[a, b]` under the reductive bracket relations.
    fn allowed(&self, a: usize, b: usize) -> impl Fn(usize) -> bool + '_ {
        let (ka, kb) = (self.block_name(a), self.block_name(b));
        let (x, y) = if ka <= kb { (ka, kb) } else { (kb, ka) };
        move |t: usize| {
            let kt = self.block_name(t);
            match (x, y) {
                ("h", "h") => kt == "h",
                ("h", "k") => false,
                ("g1", "h") => kt == "g1",
                ("k", "k") => kt == "k",
                ("g1", "k") => kt == "g1",
                ("g1", "g1") => kt == "h" || kt == "k",
                _ => unreachable!(),
            }
        }
    }

    pub fn verify(&self) -> Section {
        let l = self.labels();
        let mut checks = Vec::new();

        let mut witness = None;
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let want = SparseVec::single(k, q(2));
            if *self.table.bracket(i, j) != want && witness.is_none() {
                witness = Some(format!(
                    "[{}, {}] = {}",
                    l[i],
                    l[j],
                    self.table.bracket(i, j)
                ));
            }
        }
        checks.push(Check::from_witness(
            "commutators [X_i, X_j] = 2 eps_ijk X_k",
            3,
            witness,
        ));

        let d = self.dim_g();
        let witness = (0..d).find_map(|a| {
            (a..d).find_map(|b| {
                let ok = self.allowed(a, b);
                let inside = self.table.bracket(a, b).support().all(ok);
                (!inside).then(|| format!("[{}, {}] leaves its block", l[a], l[b]))
            })
        });
        checks.push(Check::from_witness(
            "reductive bracket relations",
            (d * (d + 1) / 2) as u64,
            witness,
        ));

        let m = self.dim_m;
        let witness = (0..m).find_map(|a| {
            let range = if self.is_k(a) { 3..d } else { m..d };
            range
                .filter(|&b| !self.killing[(a, b)].is_zero())
                .map(|b| format!("B({}, {}) = {}", l[a], l[b], fmt_q(&self.killing[(a, b)])))
                .next()
        });
        let witness = witness
            .or_else(|| (self.dim_m != 4 * self.n + 3).then(|| format!("dim m = {}", self.dim_m)));
        checks.push(Check::from_witness(
            "B-orthogonal splitting m = h^perp = k + g1",
            (m * d) as u64,
            witness,
        ));

        let target = -q(4 * (self.n as i64 + 2));
        let witness = (0..3).find_map(|i| {
            (0..3).find_map(|j| {
                let want = if i == j { target.clone() } else { Q::zero() };
                (self.killing[(i, j)] != want)
                    .then(|| format!("B({}, {}) = {}", l[i], l[j], fmt_q(&self.killing[(i, j)])))
            })
        });
        checks.push(Check::from_witness(
            "B(X_i, X_j) = -4(n+2) delta_ij",
            9,
            witness,
        ));

        let want = q(4 * (self.n as i64 + 2));
        let witness = (self.h_alpha_trace != want || -self.killing[(0, 0)].clone() != want)
            .then(|| format!("trace ad(H_a)^2 = {}", fmt_q(&self.h_alpha_trace)));
        checks.push(Check::from_witness("B(H_a, H_a) = 4(n+2)", 2, witness));

        let witness = (self.n_from_grading != self.n).then(|| {
            format!(
                "dim u^(1)/2 = {}, dim g1/4 = {}",
                self.n_from_grading, self.n
            )
        });
        checks.push(Check::from_witness(
            "n from grading = dim g1 / 4",
            1,
            witness,
        ));

        Section::new("splitting", checks)
    }
}

fn uv_labels(cf: &CompactForm, b: usize) -> String {
    cf.table().labels()[b].clone()
}

/// Assembles the adapted basis, its bracket table and Killing form.
pub fn compact_split(
    cb: &ChevalleyBasis,
    d: &ComplexDatum,
    cf: &CompactForm,
) -> Result<ReductiveSplit> {
    let rs = cb.root_system();
    let alpha = d.alpha();
    let [xa, ya, ha] = d.s_alpha();
    let x1 = complex_to_compact(cb, &ComplexVec::imaginary(ha.clone()))?;
    let x2 = complex_to_compact(cb, &ComplexVec::imaginary(xa.plus(ya)))?;
    let x3 = complex_to_compact(cb, &ComplexVec::real(ya.minus(xa)))?;

    let mut basis = vec![x1, x2, x3];
    let mut labels: Vec<String> = vec!["X1".into(), "X2".into(), "X3".into()];
    let mut h_roots = Vec::new();
    for (k, beta) in rs.positive_roots().iter().enumerate() {
        match rs.cartan_unchecked(alpha, beta).abs() {
            1 => {
                for b in [cf.u_index(k), cf.v_index(k)] {
                    basis.push(SparseVec::unit(b));
                    labels.push(uv_labels(cf, b));
                }
            }
            0 => h_roots.push(k),
            _ => {}
        }
    }
    let dim_m = basis.len();
    for (i, v) in d.v_basis().iter().enumerate() {
        if v.support().all(|b| cb.root_of(b).is_none()) {
            basis.push(complex_to_compact(cb, &ComplexVec::imaginary(v.clone()))?);
            labels.push(format!("t{}", i + 1));
        }
    }
    for k in h_roots {
        for b in [cf.u_index(k), cf.v_index(k)] {
            basis.push(SparseVec::unit(b));
            labels.push(uv_labels(cf, b));
        }
    }

    let dim = cf.dim();
    if basis.len() != dim || (dim_m - 3) % 4 != 0 {
        return Err(Error::Construction(format!(
            "adapted basis has {} vectors (dim g = {dim}, dim m = {dim_m})",
            basis.len()
        )));
    }
    let p = Matrix::from_columns(dim, &basis);
    let pinv = p
        .inverse()
        .ok_or_else(|| Error::Construction("adapted basis is linearly dependent".into()))?;
    let pinv_cols: Vec<SparseVec> = (0..dim).map(|j| pinv.column(j)).collect();
    let to_adapted = |v: &SparseVec| {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(c, &pinv_cols[j]);
        }
        out
    };

    let ad: Vec<Vec<SparseVec>> = (0..dim)
        .into_par_iter()
        .map(|a| {
            (0..dim)
                .map(|b| to_adapted(&cf.bracket(&basis[a], &basis[b])))
                .collect()
        })
        .collect();
    let rows: Vec<Vec<Q>> = (0..dim)
        .into_par_iter()
        .map(|a| {
            (0..dim)
                .map(|b| cf.killing_of(&basis[a], &basis[b]))
                .collect()
        })
        .collect();

    let mut h_alpha_trace = Q::zero();
    for b in 0..cb.dim() {
        if let Some(beta) = cb.root_of(b) {
            let w = cb.root_on(beta, ha);
            h_alpha_trace += &w * &w;
        }
    }

    Ok(ReductiveSplit {
        n: (dim_m - 3) / 4,
        dim_m,
        basis,
        table: StructureTable::from_ad(labels, ad),
        killing: Matrix::from_rows(rows),
        h_alpha_trace,
        n_from_grading: d.n(),
    })
}
