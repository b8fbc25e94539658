//! Root systems of the simple complex Lie algebras in the simple-root basis.
//!
//! Roots are integer coordinate vectors with respect to the Bourbaki-numbered
//! simple roots. The invariant form is carried by the symmetrized Cartan
//! matrix, normalized so that long roots have squared length 2.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{frac, q, to_i64, Matrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A simple type such as `E8`, with the rank bounds enforced on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let bound = match series {
            Series::A if rank < 1 => Some("A requires rank >= 1"),
            Series::B if rank < 2 => Some("B requires rank >= 2"),
            Series::C if rank < 2 => Some("C requires rank >= 2"),
            Series::D if rank < 4 => Some("D requires rank >= 4"),
            Series::E if !(6..=8).contains(&rank) => Some("E requires rank in {6, 7, 8}"),
            Series::F if rank != 4 => Some("F requires rank = 4"),
            Series::G if rank != 2 => Some("G requires rank = 2"),
            _ => None,
        };
        match bound {
            Some(bound) => Err(Error::InvalidRank {
                series: series.letter(),
                rank,
                bound,
            }),
            None => Ok(LieType { series, rank }),
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    /// Every valid type of rank at most `max_rank`, exceptionals included
    /// when their rank fits. Ordered by series, then rank.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Squared lengths of the simple roots and the Dynkin edges.
    fn diagram_data(&self) -> (Vec<Q>, Vec<(usize, usize)>) {
        let r = self.rank;
        let chain: Vec<(usize, usize)> = (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        match self.series {
            Series::A => (vec![q(2); r], chain),
            Series::B => {
                let mut norms = vec![q(2); r];
                norms[r - 1] = q(1);
                (norms, chain)
            }
            Series::C => {
                let mut norms = vec![q(1); r];
                norms[r - 1] = q(2);
                (norms, chain)
            }
            Series::D => {
                let mut edges: Vec<(usize, usize)> = (0..r - 2).map(|i| (i, i + 1)).collect();
                edges.push((r - 3, r - 1));
                (vec![q(2); r], edges)
            }
            Series::E => {
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
                let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
                let edges = all
                    .iter()
                    .copied()
                    .filter(|&(a, b)| a < r && b < r)
                    .collect();
                (vec![q(2); r], edges)
            }
            Series::F => (vec![q(2), q(2), q(1), q(1)], chain),
            Series::G => (vec![frac(2, 3), q(2)], chain),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::ParseType(s.to_string()));
        }
        let rank = digits
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        LieType::new(series, rank)
    }
}

/// Integer coordinates of a root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self + k * other`
    pub fn plus_multiple(&self, k: i64, other: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    /// Compact label such as `1,2,1` (negative roots carry signs).
    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Ordering key for positive roots: height first, then coordinates in
/// descending lexicographic order (so `α1 < α2 < ...` at height one).
fn root_order_key(r: &Root) -> (i64, std::cmp::Reverse<Vec<i64>>) {
    (r.height(), std::cmp::Reverse(r.0.clone()))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    form: Matrix,
    symmetrizer: Vec<Q>,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `cartan[i][j] = 2⟨α_i, α_j⟩ / ⟨α_i, α_i⟩ = c_{α_i α_j}`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrized form `S = D·A`, the invariant form on the root lattice.
    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    /// All roots: positives in canonical order, then their negatives in the
    /// same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn dim_algebra(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn inner(&self, a: &Root, b: &Root) -> Q {
        let mut acc = Q::zero();
        for (i, &x) in a.coords().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords().iter().enumerate() {
                if y != 0 {
                    acc += &self.form[(i, j)] * q(x * y);
                }
            }
        }
        acc
    }

    pub fn is_long(&self, r: &Root) -> bool {
        self.inner(r, r) == q(2)
    }

    fn require_root(&self, r: &Root) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::NotARoot(r.coords().to_vec(), self.lie_type.label()))
        }
    }

    /// `c_{αβ} = 2⟨β,α⟩/⟨α,α⟩` for a root `alpha` and any lattice vector `beta`.
    pub fn cartan_number(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        self.require_root(alpha)?;
        Ok(self.cartan_unchecked(alpha, beta))
    }

    pub(crate) fn cartan_unchecked(&self, alpha: &Root, beta: &Root) -> i64 {
        let c = q(2) * self.inner(beta, alpha) / self.inner(alpha, alpha);
        to_i64(&c)
            .unwrap_or_else(|| panic!("non-integral Cartan number {c} for {alpha} against {beta}"))
    }

    /// The reflection `s_i(β) = β − c_{α_i β} α_i`.
    pub fn simple_reflection(&self, i: usize, beta: &Root) -> Root {
        let c: i64 = (0..self.rank())
            .map(|j| self.cartan[i][j] * beta.coords()[j])
            .sum();
        beta.plus_multiple(-c, &self.simple_root(i))
    }

    /// The unique root of maximal height; it dominates every root
    /// coefficient-wise.
    pub fn highest_root(&self) -> Root {
        let top = self
            .positive_roots()
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty");
        debug_assert!(self.roots.iter().all(|r| r
            .coords()
            .iter()
            .zip(top.coords())
            .all(|(a, b)| a <= b)));
        top.clone()
    }

    /// Maximality criterion: `|c_{αβ}| ≤ 2` for every root `β`, with equality
    /// exactly at `β = ±α`. Returns a violating witness if there is one.
    pub fn maximality_witness(&self, alpha: &Root) -> Result<Option<(Root, i64)>> {
        self.require_root(alpha)?;
        let neg = alpha.neg();
        for beta in &self.roots {
            let c = self.cartan_unchecked(alpha, beta);
            let opposite = *beta == *alpha || *beta == neg;
            if c.abs() > 2 || (c.abs() == 2) != opposite {
                return Ok(Some((beta.clone(), c)));
            }
        }
        Ok(None)
    }

    pub fn is_maximal(&self, alpha: &Root) -> bool {
        matches!(self.maximality_witness(alpha), Ok(None))
    }

    /// Largest `(p, q)` with `β + rα ∈ Φ` for all `r ∈ {−p, …, q}`.
    pub fn root_string(&self, alpha: &Root, beta: &Root) -> Result<(u32, u32)> {
        self.require_root(alpha)?;
        self.require_root(beta)?;
        if *beta == *alpha || *beta == alpha.neg() {
            return Err(Error::DegenerateString {
                alpha: alpha.coords().to_vec(),
                beta: beta.coords().to_vec(),
            });
        }
        let mut p = 0u32;
        while self.contains(&beta.plus_multiple(-(p as i64 + 1), alpha)) {
            p += 1;
        }
        let mut qq = 0u32;
        while self.contains(&beta.plus_multiple(qq as i64 + 1, alpha)) {
            qq += 1;
        }
        let c = self.cartan_unchecked(alpha, beta);
        assert_eq!(
            p as i64 - qq as i64,
            c,
            "p - q != c for {alpha} through {beta}"
        );
        Ok((p, qq))
    }
}

/// Builds the full root system of `t` from the simple roots by extending
/// root strings height by height.
pub fn build_root_system(t: LieType) -> RootSystem {
    let r = t.rank;
    let (norms, edges) = t.diagram_data();
    let mut form = Matrix::zeros(r, r);
    for (i, n) in norms.iter().enumerate() {
        form[(i, i)] = n.clone();
    }
    for &(a, b) in &edges {
        let m = if norms[a] > norms[b] {
            norms[a].clone()
        } else {
            norms[b].clone()
        };
        let v = -m / q(2);
        form[(a, b)] = v.clone();
        form[(b, a)] = v;
    }
    let symmetrizer: Vec<Q> = norms.iter().map(|n| n / q(2)).collect();
    let cartan: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let c = q(2) * &form[(i, j)] / &form[(i, i)];
                    to_i64(&c).expect("integral Cartan matrix")
                })
                .collect()
        })
        .collect();

    let mut positives: BTreeSet<Root> = BTreeSet::new();
    let mut level: Vec<Root> = (0..r).map(|i| Root::simple(r, i)).collect();
    while !level.is_empty() {
        positives.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..r {
                let alpha_i = Root::simple(r, i);
                let mut p = 0i64;
                while positives.contains(&beta.plus_multiple(-(p + 1), &alpha_i)) {
                    p += 1;
                }
                let c: i64 = (0..r).map(|j| cartan[i][j] * beta.coords()[j]).sum();
                if p - c > 0 {
                    next.insert(beta.plus(&alpha_i));
                }
            }
        }
        level = next.into_iter().collect();
    }

    let mut pos: Vec<Root> = positives.into_iter().collect();
    pos.sort_by_key(root_order_key);
    let n_pos = pos.len();
    let mut roots = pos.clone();
    roots.extend(pos.iter().map(Root::neg));
    let index = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();

    let rs = RootSystem {
        lie_type: t,
        cartan,
        form,
        symmetrizer,
        roots,
        n_pos,
        index,
    };
    debug_assert!(rs.form.is_positive_definite());
    rs
}

/// Checks closure under every simple reflection; returns the first failure.
pub fn reflection_closure_failure(rs: &RootSystem) -> Option<(usize, Root)> {
    for beta in rs.roots() {
        for i in 0..rs.rank() {
            if !rs.contains(&rs.simple_reflection(i, beta)) {
                return Some((i, beta.clone()));
            }
        }
    }
    None
}

/// Height-one-step coefficient pattern used by several callers: the
/// coefficient vector of the coroot `β^∨ = 2β/⟨β,β⟩` in simple coroots.
pub fn coroot_coefficients(rs: &RootSystem, beta: &Root) -> Vec<i64> {
    let nb = rs.inner(beta, beta);
    beta.coords()
        .iter()
        .enumerate()
        .map(|(k, &b)| {
            let c = q(b) * &rs.form()[(k, k)] / &nb;
            to_i64(&c).expect("integral coroot coefficients")
        })
        .collect()
}

/// `true` iff the symmetrized form is symmetric positive definite and
/// `D·A = S` holds entrywise.
pub fn form_is_consistent(rs: &RootSystem) -> bool {
    let r = rs.rank();
    let sym_ok =
        (0..r).all(|i| (0..r).all(|j| &rs.symmetrizer[i] * q(rs.cartan[i][j]) == rs.form[(i, j)]));
    sym_ok
        && rs.form.is_positive_definite()
        && rs.symmetrizer.iter().all(|d| *d > Q::zero())
        && rs.cartan.iter().enumerate().all(|(i, row)| row[i] == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count: orbit of the simple roots under the simple
    /// reflections, computed with a plain work queue.
    fn closure_oracle_count(t: LieType) -> usize {
        let rs = build_root_system(t);
        let r = t.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = (0..r).map(|i| Root::simple(r, i).0).collect();
        while let Some(v) = queue.pop() {
            if !seen.insert(v.clone()) {
                continue;
            }
            for i in 0..r {
                let c: i64 = (0..r).map(|j| rs.cartan()[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= c;
                if !seen.contains(&w) {
                    queue.push(w);
                }
            }
        }
        seen.len()
    }

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_bounds() {
        assert_eq!(ty("e8").label(), "E8");
        assert_eq!(ty(" G2 ").rank(), 2);
        assert!(matches!(
            "D3".parse::<LieType>(),
            Err(Error::InvalidRank { series: 'D', .. })
        ));
        assert!(matches!(
            "E9".parse::<LieType>(),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            "F5".parse::<LieType>(),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            "B1".parse::<LieType>(),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            "A0".parse::<LieType>(),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!("X3".parse::<LieType>(), Err(Error::ParseType(_))));
        assert!(matches!("A".parse::<LieType>(), Err(Error::ParseType(_))));
        assert!(matches!("A-1".parse::<LieType>(), Err(Error::ParseType(_))));
    }

    #[test]
    fn root_counts_match_closure_oracle() {
        for t in LieType::all_up_to(8) {
            let rs = build_root_system(t);
            assert_eq!(rs.roots().len(), closure_oracle_count(t), "{t}");
        }
        assert_eq!(build_root_system(ty("A1")).roots().len(), 2);
        assert_eq!(closure_oracle_count(ty("G2")), 12);
        assert_eq!(closure_oracle_count(ty("E8")), 240);
        assert_eq!(build_root_system(ty("E8")).roots().len(), 240);
    }

    #[test]
    fn closure_and_sign_invariants() {
        for t in LieType::all_up_to(8) {
            let rs = build_root_system(t);
            assert!(reflection_closure_failure(&rs).is_none(), "{t}");
            assert!(form_is_consistent(&rs), "{t}");
            for r in rs.roots() {
                assert!(!r.is_zero());
                assert!(r.is_positive() || r.neg().is_positive(), "{t} {r}");
                assert!(rs.contains(&r.neg()));
            }
        }
    }

    #[test]
    fn cartan_number_examples() {
        let a2 = build_root_system(ty("A2"));
        let a1 = a2.simple_root(0);
        let a2r = a2.simple_root(1);
        assert_eq!(a2.cartan_number(&a1, &a1).unwrap(), 2);
        assert_eq!(a2.cartan_number(&a1, &a2r).unwrap(), -1);

        let g2 = build_root_system(ty("G2"));
        let short = g2.simple_root(0);
        assert!(!g2.is_long(&short));
        // The long root at 150 degrees from the short simple root.
        let long = g2.simple_root(1);
        assert_eq!(g2.cartan_number(&short, &long).unwrap(), -3);
        assert!(g2.cartan_number(&Root::new(vec![5, 5]), &long).is_err());
    }

    #[test]
    fn highest_roots() {
        assert_eq!(
            build_root_system(ty("A2")).highest_root(),
            Root::new(vec![1, 1])
        );
        assert_eq!(
            build_root_system(ty("G2")).highest_root(),
            Root::new(vec![3, 2])
        );
        assert_eq!(
            build_root_system(ty("C2")).highest_root(),
            Root::new(vec![2, 1])
        );
        assert_eq!(
            build_root_system(ty("E8")).highest_root(),
            Root::new(vec![2, 3, 4, 6, 5, 4, 3, 2])
        );
        for t in LieType::all_up_to(8) {
            let rs = build_root_system(t);
            assert!(rs.is_maximal(&rs.highest_root()), "{t}");
            assert!(rs.is_long(&rs.highest_root()), "{t}");
        }
    }

    #[test]
    fn maximality_examples() {
        let a2 = build_root_system(ty("A2"));
        let top = Root::new(vec![1, 1]);
        assert!(a2.is_maximal(&top));
        let cs: BTreeSet<i64> = a2
            .roots()
            .iter()
            .map(|b| a2.cartan_number(&top, b).unwrap())
            .collect();
        assert_eq!(cs, [-2, -1, 1, 2].into_iter().collect());
        let a1 = build_root_system(ty("A1"));
        assert!(a1.is_maximal(&a1.simple_root(0)));
        let g2 = build_root_system(ty("G2"));
        assert!(!g2.is_maximal(&g2.simple_root(0)));
    }

    #[test]
    fn root_string_examples() {
        let a2 = build_root_system(ty("A2"));
        assert_eq!(
            a2.root_string(&a2.simple_root(0), &a2.simple_root(1))
                .unwrap(),
            (0, 1)
        );
        let g2 = build_root_system(ty("G2"));
        assert_eq!(
            g2.root_string(&g2.simple_root(0), &g2.simple_root(1))
                .unwrap(),
            (0, 3)
        );
        let d4 = build_root_system(ty("D4"));
        assert_eq!(
            d4.root_string(&d4.simple_root(0), &d4.simple_root(2))
                .unwrap(),
            (0, 0)
        );
        let a = a2.simple_root(0);
        assert!(matches!(
            a2.root_string(&a, &a.neg()),
            Err(Error::DegenerateString { .. })
        ));
    }

    #[test]
    fn string_identity_all_pairs() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = build_root_system(ty(t));
            for a in rs.roots() {
                for b in rs.roots() {
                    if *b == *a || *b == a.neg() {
                        continue;
                    }
                    let (p, qq) = rs.root_string(a, b).unwrap();
                    assert_eq!(p as i64 - qq as i64, rs.cartan_number(a, b).unwrap());
                }
            }
        }
    }
}
