//! Z-grading by a maximal root and the complex 3-Sasakian datum built from it.

use num_traits::Zero;
use serde::Serialize;

use crate::chevalley::ChevalleyBasis;
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, SparseVec};
use crate::rootcore::{LieType, Root, Series};

/// Eigenspace decomposition of `ad(H_α)`: block `k` holds the roots with
/// `c_{αβ} = k`; the Cartan subalgebra sits in block 0.
#[derive(Clone, Debug)]
pub struct Grading {
    alpha: Root,
    rank: usize,
    blocks: [Vec<Root>; 5],
}

impl Grading {
    pub fn alpha(&self) -> &Root {
        &self.alpha
    }

    pub fn block(&self, k: i64) -> &[Root] {
        &self.blocks[(k + 2) as usize]
    }

    /// Complex dimension of `u^(k)`.
    pub fn dim(&self, k: i64) -> usize {
        self.block(k).len() + if k == 0 { self.rank } else { 0 }
    }

    /// Dimensions for `k = −2, …, 2`.
    pub fn dims(&self) -> [usize; 5] {
        [
            self.dim(-2),
            self.dim(-1),
            self.dim(0),
            self.dim(1),
            self.dim(2),
        ]
    }
}

/// Degree of a Chevalley basis element under the grading (Cartan has degree 0).
fn degree(cb: &ChevalleyBasis, alpha: &Root, b: usize) -> i64 {
    let rs = cb.root_system();
    cb.root_of(b)
        .map_or(0, |beta| rs.cartan_unchecked(alpha, beta))
}

fn fail(check: &str, witness: String) -> Error {
    Error::Verification {
        check: check.to_string(),
        witness,
    }
}

/// Grades the algebra by `c_{αβ}`, checking that each block is the matching
/// eigenspace of `ad(H_α)` and that brackets add degrees.
pub fn z_grading(cb: &ChevalleyBasis, alpha: &Root) -> Result<Grading> {
    let rs = cb.root_system();
    if let Some((witness, cartan)) = rs.maximality_witness(alpha)? {
        return Err(Error::NotMaximal {
            root: alpha.coords().to_vec(),
            witness: witness.coords().to_vec(),
            cartan,
        });
    }
    let mut blocks: [Vec<Root>; 5] = Default::default();
    for beta in rs.roots() {
        let c = rs.cartan_unchecked(alpha, beta);
        blocks[(c + 2) as usize].push(beta.clone());
    }
    let h_alpha = cb.coroot_element(alpha)?;
    let t = cb.table();
    let labels = t.labels();
    for b in 0..cb.dim() {
        let k = degree(cb, alpha, b);
        let img = t.bracket_vecs(&h_alpha, &SparseVec::unit(b));
        if img != SparseVec::single(b, q(k)) {
            return Err(fail("ad(H_α) eigenspaces", labels[b].clone()));
        }
    }
    for a in 0..cb.dim() {
        for b in a + 1..cb.dim() {
            let want = degree(cb, alpha, a) + degree(cb, alpha, b);
            if t.bracket(a, b)
                .support()
                .any(|x| degree(cb, alpha, x) != want)
            {
                return Err(fail(
                    "grading additivity",
                    format!("[{}, {}]", labels[a], labels[b]),
                ));
            }
        }
    }
    Ok(Grading {
        alpha: alpha.clone(),
        rank: rs.rank(),
        blocks,
    })
}

/// `u₀ = v ⊕ s_α`, `u₁ = u^(−1) ⊕ u^(1)` with `u₁ ≅ C² ⊗ W`, `W = u^(1)`.
#[derive(Clone, Debug)]
pub struct ComplexDatum {
    lie_type: LieType,
    grading: Grading,
    phi0: Vec<Root>,
    v_basis: Vec<SparseVec>,
    s_alpha: [SparseVec; 3],
    u_plus: Vec<usize>,
    u_minus: Vec<usize>,
    n: usize,
    dim_g: usize,
}

impl ComplexDatum {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn alpha(&self) -> &Root {
        self.grading.alpha()
    }

    /// Roots perpendicular to `α`.
    pub fn phi0(&self) -> &[Root] {
        &self.phi0
    }

    /// Basis of `v = ker α ⊕ ⊕_{β∈Φ₀} u_β` in Chevalley coordinates.
    pub fn v_basis(&self) -> &[SparseVec] {
        &self.v_basis
    }

    /// `(X_α, Y_α, H_α)`.
    pub fn s_alpha(&self) -> &[SparseVec; 3] {
        &self.s_alpha
    }

    /// Chevalley indices spanning `u^(1)`.
    pub fn u_plus(&self) -> &[usize] {
        &self.u_plus
    }

    /// Chevalley indices spanning `u^(−1)`.
    pub fn u_minus(&self) -> &[usize] {
        &self.u_minus
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.v_basis.len()
    }

    /// Real dimension of `M = G/H`.
    pub fn dim_m(&self) -> usize {
        self.dim_g - self.dim_v()
    }

    pub fn summary(&self) -> DatumSummary {
        DatumSummary {
            lie_type: self.lie_type.label(),
            alpha: self.alpha().coords().to_vec(),
            block_dims: self.grading.dims(),
            phi0_count: self.phi0.len(),
            dim_v: self.dim_v(),
            n: self.n,
            dim_m: self.dim_m(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DatumSummary {
    pub lie_type: String,
    pub alpha: Vec<i64>,
    /// Complex dimensions of `u^(k)` for `k = −2, …, 2`.
    pub block_dims: [usize; 5],
    pub phi0_count: usize,
    pub dim_v: usize,
    pub n: usize,
    pub dim_m: usize,
}

/// Integer basis of `ker α` inside the Cartan subalgebra.
fn ker_alpha_basis(cb: &ChevalleyBasis, alpha: &Root) -> Vec<SparseVec> {
    let r = cb.rank();
    let w: Vec<i64> = (0..r).map(|k| pairing(cb, alpha, k)).collect();
    let k0 = w
        .iter()
        .position(|&x| x != 0)
        .expect("α is nonzero on the Cartan");
    (0..r)
        .filter(|&k| k != k0)
        .map(|k| SparseVec::from_pairs([(cb.h_index(k), q(w[k0])), (cb.h_index(k0), q(-w[k]))]))
        .collect()
}

/// `α(H_k)`.
fn pairing(cb: &ChevalleyBasis, alpha: &Root, k: usize) -> i64 {
    let rs = cb.root_system();
    alpha
        .coords()
        .iter()
        .enumerate()
        .map(|(j, &a)| a * rs.cartan()[k][j])
        .sum()
}

/// True iff `x` lies in `v`: root components only on `Φ₀`, Cartan part in `ker α`.
fn in_v(cb: &ChevalleyBasis, alpha: &Root, x: &SparseVec) -> bool {
    let mut cartan = SparseVec::new();
    for (b, c) in x.iter() {
        match cb.root_of(b) {
            Some(beta) => {
                if cb.root_system().cartan_unchecked(alpha, beta) != 0 {
                    return false;
                }
            }
            None => cartan.add_term(b, c.clone()),
        }
    }
    cb.root_on(alpha, &cartan).is_zero()
}

/// Builds the datum for a maximal root and checks that `v` is a subalgebra
/// commuting with `s_α`, that `u₀ = v ⊕ s_α`, and the dimension count.
pub fn build_complex_datum(cb: &ChevalleyBasis, alpha: &Root) -> Result<ComplexDatum> {
    let grading = z_grading(cb, alpha)?;
    let rs = cb.root_system();
    let phi0 = grading.block(0).to_vec();
    let mut v_basis = ker_alpha_basis(cb, alpha);
    for beta in &phi0 {
        v_basis.push(SparseVec::unit(cb.root_index(beta).expect("root")));
    }
    let a = cb
        .root_index(alpha)
        .ok_or_else(|| Error::NotARoot(alpha.coords().to_vec(), rs.lie_type().label()))?;
    let s_alpha = [
        SparseVec::unit(a),
        SparseVec::unit(cb.bar(a)),
        cb.coroot_element(alpha)?,
    ];

    let t = cb.table();
    for (i, x) in v_basis.iter().enumerate() {
        for (j, y) in v_basis.iter().enumerate().skip(i + 1) {
            if !in_v(cb, alpha, &t.bracket_vecs(x, y)) {
                return Err(fail(
                    "v closed under bracket",
                    format!("v basis pair ({i}, {j})"),
                ));
            }
        }
        for (j, s) in s_alpha.iter().enumerate() {
            if !t.bracket_vecs(x, s).is_zero() {
                let name = ["X_α", "Y_α", "H_α"][j];
                return Err(fail("[v, s_α] = 0", format!("v basis {i} against {name}")));
            }
        }
    }
    let dim_u0 = grading.dim(-2) + grading.dim(0) + grading.dim(2);
    let mut span: Vec<SparseVec> = v_basis.clone();
    span.extend(s_alpha.iter().cloned());
    let rank = Matrix::from_columns(cb.dim(), &span).rank();
    let odd = span
        .iter()
        .any(|x| x.support().any(|b| degree(cb, alpha, b).abs() == 1));
    if rank != dim_u0 || span.len() != dim_u0 || odd {
        return Err(fail(
            "u₀ = v ⊕ s_α",
            format!("rank {rank} against dim u₀ = {dim_u0}"),
        ));
    }
    if grading.dim(2) != 1 || grading.dim(-2) != 1 {
        return Err(fail("dim u^(±2) = 1", format!("{:?}", grading.dims())));
    }

    let idx = |roots: &[Root]| -> Vec<usize> {
        roots
            .iter()
            .map(|b| cb.root_index(b).expect("root"))
            .collect()
    };
    let u_plus = idx(grading.block(1));
    let u_minus = idx(grading.block(-1));
    if u_plus.len() % 2 != 0 {
        return Err(fail(
            "dim u^(1) even",
            format!("dim u^(1) = {}", u_plus.len()),
        ));
    }
    let n = u_plus.len() / 2;
    let datum = ComplexDatum {
        lie_type: rs.lie_type(),
        grading,
        phi0,
        v_basis,
        s_alpha,
        u_plus,
        u_minus,
        n,
        dim_g: cb.dim(),
    };
    if datum.dim_m() != 4 * n + 3 || datum.u_plus.len() + datum.u_minus.len() != 4 * n {
        return Err(fail(
            "dim M = 4n + 3",
            format!("dim M = {}, n = {n}", datum.dim_m()),
        ));
    }
    Ok(datum)
}

/// Outcome of the module-isomorphism certificate `u₁ ≅ C² ⊗ W`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ModuleIsoReport {
    pub dim_w: usize,
    /// `ad(X_α): u_β → u_{β+α}` bijective on every `c = −1` root space, and of
    /// full rank on `u^(−1) → u^(1)`.
    pub bijective: bool,
    /// Number of `(generator, basis vector)` equivariance checks performed.
    pub s_alpha_checks: usize,
    pub v_checks: usize,
}

/// `Ψ(X) = (X^(1), [X_α, X^(−1)])` as a pair of vectors in `W = u^(1)`.
fn psi(cb: &ChevalleyBasis, d: &ComplexDatum, x: &SparseVec) -> (SparseVec, SparseVec) {
    let alpha = d.alpha();
    let plus = x.restrict(|b| degree(cb, alpha, b) == 1);
    let minus = x.restrict(|b| degree(cb, alpha, b) == -1);
    (plus, cb.table().bracket_vecs(&d.s_alpha[0], &minus))
}

/// Verifies `u₁ ≅ C² ⊗ W` through `Ψ`: bijectivity of `ad(X_α)` from
/// `u^(−1)` onto `W`, equivariance for `X_α, Y_α, H_α` acting on `C²` in the
/// standard way, and equivariance for `v` acting on `W` by `ad`.
pub fn verify_module_iso(cb: &ChevalleyBasis, d: &ComplexDatum) -> Result<ModuleIsoReport> {
    let t = cb.table();
    let labels = t.labels();
    let xa = &d.s_alpha[0];
    for &b in &d.u_minus {
        let img = t.bracket_vecs(xa, &SparseVec::unit(b));
        let target = cb.root_of(b).expect("root").plus(d.alpha());
        let ti = cb.root_index(&target);
        if img.nnz() != 1 || ti.and_then(|x| img.coeff(x)).is_none() {
            return Err(fail("ad(X_α) bijective on u_β", labels[b].clone()));
        }
    }
    let cols: Vec<SparseVec> = d
        .u_minus
        .iter()
        .map(|&b| t.bracket_vecs(xa, &SparseVec::unit(b)))
        .collect();
    if Matrix::from_columns(cb.dim(), &cols).rank() != d.u_plus.len()
        || d.u_plus.len() != d.u_minus.len()
    {
        return Err(fail("ad(X_α): u^(−1) → u^(1) bijective", String::new()));
    }

    let basis: Vec<usize> = d.u_minus.iter().chain(&d.u_plus).copied().collect();
    let mut s_checks = 0;
    for &b in &basis {
        let x = SparseVec::unit(b);
        let (w1, w2) = psi(cb, d, &x);
        let expected = [
            (w2.clone(), SparseVec::new()),
            (SparseVec::new(), w1.clone()),
            (w1.clone(), w2.neg()),
        ];
        for (g, want) in d.s_alpha.iter().zip(expected) {
            if psi(cb, d, &t.bracket_vecs(g, &x)) != want {
                return Err(fail("Ψ equivariance for s_α", labels[b].clone()));
            }
            s_checks += 1;
        }
    }
    let mut v_checks = 0;
    for (i, v) in d.v_basis.iter().enumerate() {
        for &b in &basis {
            let x = SparseVec::unit(b);
            let (w1, w2) = psi(cb, d, &x);
            let want = (t.bracket_vecs(v, &w1), t.bracket_vecs(v, &w2));
            if psi(cb, d, &t.bracket_vecs(v, &x)) != want {
                return Err(fail(
                    "Ψ equivariance for v",
                    format!("v basis {i} on {}", labels[b]),
                ));
            }
            v_checks += 1;
        }
    }
    Ok(ModuleIsoReport {
        dim_w: d.u_plus.len(),
        bijective: true,
        s_alpha_checks: s_checks,
        v_checks,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ShortRootWitness {
    pub short_root: Vec<i64>,
    pub witness: Vec<i64>,
    pub cartan: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct G2Probe {
    /// One `|c| = 3` witness per short root.
    pub short: Vec<ShortRootWitness>,
    /// Long roots, all of which pass the maximality criterion.
    pub long_maximal: Vec<Vec<i64>>,
    pub maximal_count: usize,
}

/// For G2: every short root has a `|c| = 3` witness and fails maximality;
/// every long root is maximal.
pub fn g2_short_root_probe(cb: &ChevalleyBasis) -> Result<G2Probe> {
    let rs = cb.root_system();
    let lt = rs.lie_type();
    if lt.series() != Series::G {
        return Err(Error::WrongType {
            expected: "G2".into(),
            found: lt.label(),
        });
    }
    let mut short = Vec::new();
    let mut long_maximal = Vec::new();
    for sigma in rs.roots() {
        if rs.is_long(sigma) {
            if !rs.is_maximal(sigma) {
                return Err(fail("long roots of G2 maximal", sigma.to_string()));
            }
            long_maximal.push(sigma.coords().to_vec());
        } else {
            let witness = rs
                .roots()
                .iter()
                .find(|b| rs.cartan_unchecked(sigma, b).abs() == 3)
                .ok_or_else(|| fail("|c| = 3 witness for short root", sigma.to_string()))?;
            if rs.is_maximal(sigma) {
                return Err(fail("short roots of G2 not maximal", sigma.to_string()));
            }
            short.push(ShortRootWitness {
                short_root: sigma.coords().to_vec(),
                witness: witness.coords().to_vec(),
                cartan: rs.cartan_unchecked(sigma, witness),
            });
        }
    }
    let maximal_count = rs.roots().iter().filter(|r| rs.is_maximal(r)).count();
    Ok(G2Probe {
        short,
        long_maximal,
        maximal_count,
    })
}
