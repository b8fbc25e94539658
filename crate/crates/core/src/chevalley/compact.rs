//! Compact real form on the basis `T_j = iH_j`, `U_β = E_β − E_{−β}`,
//! `V_β = i(E_β + E_{−β})` (β positive), ordered `T_1..T_r` then
//! `(U_β, V_β)` per positive root.

use num_traits::Zero;
use rayon::prelude::*;

use super::{ChevalleyBasis, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{frac, Matrix, SparseVec, Q};

/// Element of the complexification, as real and imaginary parts over the
/// Chevalley basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexVec {
    pub re: SparseVec,
    pub im: SparseVec,
}

impl ComplexVec {
    pub fn real(re: SparseVec) -> Self {
        ComplexVec {
            re,
            im: SparseVec::new(),
        }
    }

    /// `i · v`
    pub fn imaginary(im: SparseVec) -> Self {
        ComplexVec {
            re: SparseVec::new(),
            im,
        }
    }

    fn bracket(t: &StructureTable, x: &ComplexVec, y: &ComplexVec) -> ComplexVec {
        let mut re = t.bracket_vecs(&x.re, &y.re);
        re.sub(&t.bracket_vecs(&x.im, &y.im));
        let mut im = t.bracket_vecs(&x.re, &y.im);
        im.add(&t.bracket_vecs(&x.im, &y.re));
        ComplexVec { re, im }
    }
}

#[derive(Clone, Debug)]
pub struct CompactForm {
    rank: usize,
    num_positive: usize,
    table: StructureTable,
    killing: Matrix,
}

impl CompactForm {
    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// Killing form `B(X,Y) = tr(ad X ∘ ad Y)` on the compact basis.
    pub fn killing(&self) -> &Matrix {
        &self.killing
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn t_index(&self, j: usize) -> usize {
        j
    }

    pub fn u_index(&self, k: usize) -> usize {
        self.rank + 2 * k
    }

    pub fn v_index(&self, k: usize) -> usize {
        self.rank + 2 * k + 1
    }

    /// Positive-root index carried by a compact basis element (`None` for `T_j`).
    pub fn root_slot(&self, b: usize) -> Option<usize> {
        b.checked_sub(self.rank).map(|x| x / 2)
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.table.bracket_vecs(x, y)
    }

    pub fn killing_of(&self, x: &SparseVec, y: &SparseVec) -> Q {
        self.killing.bilinear(x, y)
    }

    pub fn verify_negative_definite(&self) -> Result<()> {
        if self.killing.is_negative_definite() {
            Ok(())
        } else {
            Err(Error::Verification {
                check: "Killing form negative definite".into(),
                witness: format!("compact form of rank {}", self.rank),
            })
        }
    }

    pub fn verify_invariance(&self) -> Result<()> {
        match self.table.invariance_failure(&self.killing) {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::Verification {
                check: "ad-invariance of the Killing form".into(),
                witness: format!("basis triple ({a}, {b}, {c})"),
            }),
        }
    }
}

/// Coordinates of a compact-basis element in the complexified Chevalley basis.
pub fn compact_to_complex(cb: &ChevalleyBasis, x: &SparseVec) -> ComplexVec {
    let r = cb.rank();
    let mut z = ComplexVec::default();
    for (b, c) in x.iter() {
        if b < r {
            z.im.add_term(cb.h_index(b), c.clone());
        } else {
            let k = (b - r) / 2;
            let (e, f) = (k, cb.neg_index(k));
            if (b - r).is_multiple_of(2) {
                z.re.add_term(e, c.clone());
                z.re.add_term(f, -c.clone());
            } else {
                z.im.add_term(e, c.clone());
                z.im.add_term(f, c.clone());
            }
        }
    }
    z
}

/// Inverse of [`compact_to_complex`]; fails if `z` is not in the compact
/// real form.
pub fn complex_to_compact(cb: &ChevalleyBasis, z: &ComplexVec) -> Result<SparseVec> {
    let (r, np) = (cb.rank(), cb.num_positive());
    let off_form = |what: &str| Error::Verification {
        check: "element lies in the compact real form".into(),
        witness: what.to_string(),
    };
    let mut x = SparseVec::new();
    for j in 0..r {
        let h = cb.h_index(j);
        if !z.re.get(h).is_zero() {
            return Err(off_form(&format!("real part on H{}", j + 1)));
        }
        x.add_term(j, z.im.get(h));
    }
    let half = frac(1, 2);
    for k in 0..np {
        let f = cb.neg_index(k);
        let (re_e, re_f, im_e, im_f) = (z.re.get(k), z.re.get(f), z.im.get(k), z.im.get(f));
        if !(&re_e + &re_f).is_zero() || !(&im_e - &im_f).is_zero() {
            return Err(off_form(&format!("root pair {}", cb.table().labels()[k])));
        }
        x.add_term(r + 2 * k, (re_e - re_f) * &half);
        x.add_term(r + 2 * k + 1, (im_e + im_f) * &half);
    }
    Ok(x)
}

fn compact_labels(cb: &ChevalleyBasis) -> Vec<String> {
    let mut labels: Vec<String> = (0..cb.rank()).map(|j| format!("T{}", j + 1)).collect();
    for beta in cb.root_system().positive_roots() {
        labels.push(format!("U[{}]", beta.label()));
        labels.push(format!("V[{}]", beta.label()));
    }
    labels
}

/// Builds the compact real form, its Killing form, and checks negative
/// definiteness.
pub fn compact_real_form(cb: &ChevalleyBasis) -> Result<CompactForm> {
    let dim = cb.dim();
    let images: Vec<ComplexVec> = (0..dim)
        .map(|a| compact_to_complex(cb, &SparseVec::unit(a)))
        .collect();
    let ad: Vec<Vec<SparseVec>> = (0..dim)
        .into_par_iter()
        .map(|a| {
            (0..dim)
                .map(|b| {
                    let z = ComplexVec::bracket(cb.table(), &images[a], &images[b]);
                    complex_to_compact(cb, &z)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let table = StructureTable::from_ad(compact_labels(cb), ad);
    let killing = table.killing_form();
    let cf = CompactForm {
        rank: cb.rank(),
        num_positive: cb.num_positive(),
        table,
        killing,
    };
    cf.verify_negative_definite()?;
    Ok(cf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_chevalley;
    use crate::linalg::q;
    use crate::rootcore::{build_root_system, LieType};

    fn cf(s: &str) -> (ChevalleyBasis, CompactForm) {
        let cb = build_chevalley(build_root_system(s.parse::<LieType>().unwrap())).unwrap();
        let cf = compact_real_form(&cb).unwrap();
        (cb, cf)
    }

    /// Oracle for A1: traces of the three 3×3 adjoint matrices written out
    /// from `[T,U] = 2V`, `[T,V] = −2U`, `[U,V] = 2T`.
    #[test]
    fn su2_killing_is_minus_eight() {
        let (_, c) = cf("A1");
        let t = c.table();
        assert_eq!(*t.bracket(0, 1), SparseVec::single(2, q(2)));
        assert_eq!(*t.bracket(0, 2), SparseVec::single(1, q(-2)));
        assert_eq!(*t.bracket(1, 2), SparseVec::single(0, q(2)));
        assert_eq!(*c.killing(), Matrix::identity(3).scale(&q(-8)));
    }

    #[test]
    fn round_trip_and_dims() {
        let (cb, c) = cf("G2");
        assert_eq!(c.dim(), 14);
        for b in 0..c.dim() {
            let x = SparseVec::unit(b);
            assert_eq!(
                complex_to_compact(&cb, &compact_to_complex(&cb, &x)).unwrap(),
                x
            );
        }
        assert!(complex_to_compact(&cb, &ComplexVec::real(SparseVec::unit(0))).is_err());
    }

    #[test]
    fn a2_killing_definite_and_invariant() {
        let (_, c) = cf("A2");
        assert_eq!(c.dim(), 8);
        assert!(c.killing().is_negative_definite());
        c.verify_invariance().unwrap();
        assert_eq!(c.table().jacobi_failure(), None);
    }

    #[test]
    fn killing_is_a_multiple_of_the_form_on_cartan() {
        // On the Cartan part B(T_i, T_j) = −B(H_i, H_j) = −2h∨·(H_i|H_j)
        // with the normalized form; check proportionality to the coroot form.
        let (cb, c) = cf("B3");
        let rs = cb.root_system();
        let s = rs.form();
        let r = rs.rank();
        let ratio = c.killing()[(0, 0)].clone() / (q(4) / &s[(0, 0)]);
        for i in 0..r {
            for j in 0..r {
                let coform = q(4) * &s[(i, j)] / (&s[(i, i)] * &s[(j, j)]);
                assert_eq!(c.killing()[(i, j)], &ratio * coform);
            }
        }
    }
}
