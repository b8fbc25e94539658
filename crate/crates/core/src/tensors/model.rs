//! Invariant metric and structure tensors `(g, ξ_i, η_i, φ_i)` on `m`.

use num_traits::Zero;

use super::split::ReductiveSplit;
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, frac, q, Matrix, SparseVec, Q};
use crate::report::{Check, Section};

#[derive(Clone, Debug)]
pub struct SasakiModel {
    split: ReductiveSplit,
    gram: Matrix,
    gram_inv: Matrix,
    xi: [SparseVec; 3],
    eta: [SparseVec; 3],
    phi: [Matrix; 3],
}

impl SasakiModel {
    pub fn split(&self) -> &ReductiveSplit {
        &self.split
    }

    pub fn n(&self) -> usize {
        self.split.n()
    }

    pub fn dim(&self) -> usize {
        self.split.dim_m()
    }

    pub fn labels(&self) -> &[String] {
        &self.split.labels()[..self.dim()]
    }

    /// Gram matrix of `g` on the adapted basis of `m`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix {
        &self.gram_inv
    }

    pub fn xi(&self, i: usize) -> &SparseVec {
        &self.xi[i]
    }

    /// Coefficients of the covector `η_i = g(ξ_i, ·)`.
    pub fn eta(&self, i: usize) -> &SparseVec {
        &self.eta[i]
    }

    pub fn phi(&self, i: usize) -> &Matrix {
        &self.phi[i]
    }

    pub fn g(&self, x: &SparseVec, y: &SparseVec) -> Q {
        self.gram.bilinear(x, y)
    }

    pub fn eta_of(&self, i: usize, x: &SparseVec) -> Q {
        let mut acc = Q::zero();
        for (a, c) in x.iter() {
            if let Some(e) = self.eta[i].coeff(a) {
                acc += c * e;
            }
        }
        acc
    }

    /// `dη_i(x, y) := −η_i([x, y]_m)` on basis vectors.
    pub fn d_eta(&self, i: usize) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for a in 0..m {
            for b in 0..m {
                out[(a, b)] = -self.eta_of(i, &self.split.bracket_m(a, b));
            }
        }
        out
    }

    /// Rescales `g` on `g₁` by `s`; used to show the checks detect a wrong
    /// metric.
    #[cfg(test)]
    pub(crate) fn rescale_g1(&mut self, s: &Q) {
        let m = self.dim();
        for a in 3..m {
            for b in 3..m {
                self.gram[(a, b)] = &self.gram[(a, b)] * s;
            }
        }
        self.gram_inv = self.gram.inverse().expect("definite");
        self.eta = [0, 1, 2].map(|i| self.gram.column(i));
    }

    /// Einstein constant `2(2n+1)`.
    pub fn einstein_constant(&self) -> i64 {
        2 * (2 * self.n() as i64 + 1)
    }
}

/// Gram matrix `−B/(4(n+2))` on `k`, `−B/(8(n+2))` on `g₁`; `ξ_i = X_i`;
/// `φ_i = ½ ad X_i` on `k` and `ad X_i` on `g₁`.
pub fn build_model(split: ReductiveSplit) -> Result<SasakiModel> {
    let m = split.dim_m();
    let n = split.n() as i64;
    let ck = frac(-1, 4 * (n + 2));
    let cg = frac(-1, 8 * (n + 2));
    let mut gram = Matrix::zeros(m, m);
    for a in 0..m {
        for b in 0..m {
            let scale = match (split.is_k(a), split.is_k(b)) {
                (true, true) => &ck,
                (false, false) => &cg,
                _ => continue,
            };
            gram[(a, b)] = &split.killing()[(a, b)] * scale;
        }
    }
    let gram_inv = gram
        .inverse()
        .ok_or_else(|| Error::Construction("Gram matrix on m is singular".into()))?;
    let xi = [SparseVec::unit(0), SparseVec::unit(1), SparseVec::unit(2)];
    let eta = [0, 1, 2].map(|i| gram.column(i));
    let half = frac(1, 2);
    let phi = [0, 1, 2].map(|i| {
        let cols: Vec<SparseVec> = (0..m)
            .map(|b| {
                let img = split.bracket_m(i, b);
                if split.is_k(b) {
                    img.scaled(&half)
                } else {
                    img
                }
            })
            .collect();
        Matrix::from_columns(m, &cols)
    });
    Ok(SasakiModel {
        split,
        gram,
        gram_inv,
        xi,
        eta,
        phi,
    })
}

fn outer(x: &SparseVec, y: &SparseVec, m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out[(a, b)] = c * d;
        }
    }
    out
}

fn row(v: &SparseVec, m: usize) -> Matrix {
    Matrix::from_rows(vec![v.to_dense(m)])
}

fn col(v: &SparseVec, m: usize) -> Matrix {
    Matrix::from_columns(m, std::slice::from_ref(v))
}

/// First failing check across `i = 1, 2, 3`, reported under one name.
fn over_i(name: &str, per_i: impl Fn(usize) -> Check) -> Check {
    let mut evaluated = 0;
    for i in 0..3 {
        let c = per_i(i);
        evaluated += c.evaluated;
        if !c.passed {
            let w = format!("i = {}: {}", i + 1, c.witness.unwrap_or_default());
            return Check::fail(name, evaluated, w);
        }
    }
    Check::pass(name, evaluated)
}

const CYCLIC: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

fn over_cyclic(name: &str, per: impl Fn(usize, usize, usize) -> Check) -> Check {
    let mut evaluated = 0;
    for (i, j, k) in CYCLIC {
        let c = per(i, j, k);
        evaluated += c.evaluated;
        if !c.passed {
            let w = format!(
                "(i, j, k) = ({}, {}, {}): {}",
                i + 1,
                j + 1,
                k + 1,
                c.witness.unwrap_or_default()
            );
            return Check::fail(name, evaluated, w);
        }
    }
    Check::pass(name, evaluated)
}

/// All structure identities of the model, exactly, on the adapted basis.
pub fn verify_sasaki_identities(model: &SasakiModel) -> Section {
    let m = model.dim();
    let l = model.labels();
    let id = Matrix::identity(m);
    let g = model.gram();
    let zero_col = Matrix::zeros(m, 1);
    let zero_row = Matrix::zeros(1, m);
    let mut checks = Vec::new();

    checks.push(over_i("phi^2 = -id + eta (x) xi", |i| {
        let p = model.phi(i);
        let rhs = outer(model.xi(i), model.eta(i), m).sub(&id);
        Check::matrices("", &p.mul(p), &rhs, l)
    }));
    checks.push(over_i("phi xi = 0", |i| {
        Check::matrices("", &model.phi(i).mul(&col(model.xi(i), m)), &zero_col, l)
    }));
    checks.push(over_i("eta o phi = 0", |i| {
        Check::matrices("", &row(model.eta(i), m).mul(model.phi(i)), &zero_row, l)
    }));
    checks.push(over_i("eta(xi) = 1", |i| {
        let v = model.eta_of(i, model.xi(i));
        Check::from_witness("", 1, (v != q(1)).then(|| fmt_q(&v)))
    }));
    checks.push(over_i("g(phi x, phi y) = g(x, y) - eta(x) eta(y)", |i| {
        let p = model.phi(i);
        let lhs = p.transpose().mul(g).mul(p);
        let rhs = g.sub(&outer(model.eta(i), model.eta(i), m));
        Check::matrices("", &lhs, &rhs, l)
    }));
    checks.push(over_i("g(x, phi y) + g(phi x, y) = 0", |i| {
        let p = model.phi(i);
        let lhs = g.mul(p).add(&p.transpose().mul(g));
        Check::matrices("", &lhs, &Matrix::zeros(m, m), l)
    }));
    let d_etas: Vec<Matrix> = (0..3).map(|i| model.d_eta(i)).collect();
    checks.push(over_i("d eta(x, y) = 2 g(x, phi y)", |i| {
        let rhs = g.mul(model.phi(i)).scale(&q(2));
        Check::matrices("", &d_etas[i], &rhs, l)
    }));
    checks.push(over_i("d eta(phi x, phi y) = d eta(x, y)", |i| {
        let p = model.phi(i);
        Check::matrices("", &p.transpose().mul(&d_etas[i]).mul(p), &d_etas[i], l)
    }));
    checks.push(over_i("d eta(xi, .) = 0", |i| {
        let lhs = row(model.xi(i), m).mul(&d_etas[i]);
        Check::matrices("", &lhs, &zero_row, l)
    }));

    // Sign pin: dη_i(ξ_j, ξ_k) = 2g(ξ_j, φ_i ξ_k) on all 27 index triples.
    let mut witness = None;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let lhs = d_etas[i][(j, k)].clone();
                let rhs = q(2) * model.g(model.xi(j), &model.phi(i).mul_sparse(model.xi(k)));
                if lhs != rhs && witness.is_none() {
                    witness = Some(format!(
                        "(i, j, k) = ({}, {}, {}): {} vs {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        fmt_q(&lhs),
                        fmt_q(&rhs)
                    ));
                }
            }
        }
    }
    checks.push(Check::from_witness(
        "d eta_i(xi_j, xi_k) = 2 g(xi_j, phi_i xi_k)",
        27,
        witness,
    ));

    checks.push(over_cyclic(
        "phi_i phi_j - eta_j (x) xi_i = phi_k",
        |i, j, k| {
            let lhs = model
                .phi(i)
                .mul(model.phi(j))
                .sub(&outer(model.xi(i), model.eta(j), m));
            Check::matrices("", &lhs, model.phi(k), l)
        },
    ));
    checks.push(over_cyclic("phi_i xi_j = xi_k", |i, j, k| {
        let lhs = model.phi(i).mul(&col(model.xi(j), m));
        Check::matrices("", &lhs, &col(model.xi(k), m), l)
    }));
    checks.push(over_cyclic("eta_i o phi_j = eta_k", |i, j, k| {
        let lhs = row(model.eta(i), m).mul(model.phi(j));
        Check::matrices("", &lhs, &row(model.eta(k), m), l)
    }));

    let mut witness = None;
    for i in 0..3 {
        for j in 0..3 {
            let v = model.g(model.xi(i), model.xi(j));
            let want = if i == j { q(1) } else { Q::zero() };
            if v != want && witness.is_none() {
                witness = Some(format!("g(xi_{}, xi_{}) = {}", i + 1, j + 1, fmt_q(&v)));
            }
        }
    }
    checks.push(Check::from_witness("g(xi_i, xi_j) = delta_ij", 9, witness));

    let split = model.split();
    let scale = frac(-1, 4 * (model.n() as i64 + 2));
    checks.push(over_i("eta_i = -B(X_i, .)/(4(n+2)) on m", |i| {
        let lhs = row(model.eta(i), m);
        let b_row: Vec<Q> = (0..m).map(|b| &split.killing()[(i, b)] * &scale).collect();
        Check::matrices("", &lhs, &Matrix::from_rows(vec![b_row]), l)
    }));

    Section::new("structure identities", checks)
}
