use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::linalg::{fmt_q, Matrix, SparseVec, Q};

/// Bracket table of a Lie algebra on a fixed basis: `ad[a][b] = [e_a, e_b]`.
#[derive(Clone, Debug)]
pub struct StructureTable {
    labels: Vec<String>,
    ad: Vec<Vec<SparseVec>>,
}

impl StructureTable {
    pub fn from_ad(labels: Vec<String>, ad: Vec<Vec<SparseVec>>) -> Self {
        assert_eq!(labels.len(), ad.len());
        assert!(ad.iter().all(|col| col.len() == labels.len()));
        StructureTable { labels, ad }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket(&self, a: usize, b: usize) -> &SparseVec {
        &self.ad[a][b]
    }

    /// `[e_a, v]`
    pub fn ad_apply(&self, a: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (b, c) in v.iter() {
            out.add_scaled(c, &self.ad[a][b]);
        }
        out
    }

    /// `[x, y]` for arbitrary elements.
    pub fn bracket_vecs(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), &self.ad[a][b]);
            }
        }
        out
    }

    /// Dense matrix of `ad(x)` in this basis (columns are images).
    pub fn ad_matrix(&self, x: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim())
            .map(|b| self.bracket_vecs(x, &SparseVec::unit(b)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn antisymmetry_failure(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n).find_map(|a| {
            (a..n).find_map(|b| {
                let ok = if a == b {
                    self.ad[a][a].is_zero()
                } else {
                    self.ad[a][b] == self.ad[b][a].neg()
                };
                (!ok).then_some((a, b))
            })
        })
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`
    pub fn jacobi_residual(&self, a: usize, b: usize, c: usize) -> SparseVec {
        let mut r = self.ad_apply(a, &self.ad[b][c]);
        r.add(&self.ad_apply(b, &self.ad[c][a]));
        r.add(&self.ad_apply(c, &self.ad[a][b]));
        r
    }

    /// Exhaustive Jacobi check over all triples `a < b < c` (the identity is
    /// alternating, so this covers every triple once antisymmetry holds).
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in a + 1..n {
                for c in b + 1..n {
                    if !self.jacobi_residual(a, b, c).is_zero() {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// `B(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let rows: Vec<Vec<Q>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![Q::zero(); n];
                for (j, slot) in row.iter_mut().enumerate().skip(i) {
                    let mut acc = Q::zero();
                    for l in 0..n {
                        for (k, c) in self.ad[j][l].iter() {
                            if let Some(d) = self.ad[i][k].coeff(l) {
                                acc += c * d;
                            }
                        }
                    }
                    *slot = acc;
                }
                row
            })
            .collect();
        let mut m = Matrix::from_rows(rows);
        for i in 0..n {
            for j in 0..i {
                m[(i, j)] = m[(j, i)].clone();
            }
        }
        m
    }

    /// `B([e_a,e_b],e_c) + B(e_b,[e_a,e_c])` vanishes for all triples; returns
    /// the first failing triple.
    pub fn invariance_failure(&self, form: &Matrix) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                for c in b..n {
                    let lhs = form.bilinear(&self.ad[a][b], &SparseVec::unit(c))
                        + form.bilinear(&SparseVec::unit(b), &self.ad[a][c]);
                    if !lhs.is_zero() {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Deterministic JSON: labels plus every nonzero bracket `[e_i, e_j]`
    /// with `i < j`, coefficients as exact fraction strings.
    pub fn to_json(&self) -> Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = &self.ad[i][j];
                if v.is_zero() {
                    continue;
                }
                let terms: Vec<Value> = v.iter().map(|(k, c)| json!([k, fmt_q(c)])).collect();
                brackets.push(json!({ "i": i, "j": j, "terms": terms }));
            }
        }
        json!({ "dim": self.dim(), "basis": self.labels, "brackets": brackets })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    /// sl2 on (E, H, F) written out by hand.
    fn sl2() -> StructureTable {
        let z = SparseVec::new;
        let ad = vec![
            vec![z(), SparseVec::single(0, q(-2)), SparseVec::unit(1)],
            vec![SparseVec::single(0, q(2)), z(), SparseVec::single(2, q(-2))],
            vec![SparseVec::single(1, q(-1)), SparseVec::single(2, q(2)), z()],
        ];
        StructureTable::from_ad(vec!["E".into(), "H".into(), "F".into()], ad)
    }

    #[test]
    fn sl2_axioms_and_killing() {
        let t = sl2();
        assert!(t.antisymmetry_failure().is_none());
        assert!(t.jacobi_failure().is_none());
        let b = t.killing_form();
        assert_eq!(b[(1, 1)], q(8));
        assert_eq!(b[(0, 2)], q(4));
        assert_eq!(b[(0, 0)], q(0));
        assert!(t.invariance_failure(&b).is_none());
    }

    #[test]
    fn broken_table_is_caught() {
        let mut t = sl2();
        t.ad[1][0] = SparseVec::single(0, q(3));
        t.ad[0][1] = SparseVec::single(0, q(-3));
        assert!(t.antisymmetry_failure().is_none());
        assert_eq!(t.jacobi_failure(), Some((0, 1, 2)));
    }

    #[test]
    fn json_lists_upper_triangle() {
        let v = sl2().to_json();
        assert_eq!(v["dim"], 3);
        assert_eq!(v["brackets"].as_array().unwrap().len(), 3);
        assert_eq!(v["brackets"][0]["terms"][0], json!([0, "-2"]));
    }
}
