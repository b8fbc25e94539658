//! Dynkin diagrams, the extended diagram, isotropy typing by node deletion,
//! and the classification tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootcore::{build_root_system, LieType, Root, RootSystem, Series};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    /// `c_{ab} · c_{ba}`.
    pub multiplicity: i64,
    /// Node carrying the shorter root, for multiple bonds.
    pub arrow_to: Option<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Diagram {
    pub nodes: Vec<Root>,
    pub bonds: Vec<Bond>,
}

impl Diagram {
    /// Diagram on arbitrary roots, with bonds read off pairwise Cartan numbers.
    pub fn from_roots(rs: &RootSystem, nodes: Vec<Root>) -> Diagram {
        let mut bonds = Vec::new();
        for a in 0..nodes.len() {
            for b in a + 1..nodes.len() {
                let cab = rs.cartan_unchecked(&nodes[a], &nodes[b]);
                let cba = rs.cartan_unchecked(&nodes[b], &nodes[a]);
                let mult = cab * cba;
                if mult == 0 {
                    continue;
                }
                let (na, nb) = (
                    rs.inner(&nodes[a], &nodes[a]),
                    rs.inner(&nodes[b], &nodes[b]),
                );
                let arrow_to = if na < nb {
                    Some(a)
                } else if nb < na {
                    Some(b)
                } else {
                    None
                };
                bonds.push(Bond {
                    a,
                    b,
                    multiplicity: mult,
                    arrow_to,
                });
            }
        }
        Diagram { nodes, bonds }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.bonds.iter().filter_map(move |e| {
            if e.a == v {
                Some(e.b)
            } else if e.b == v {
                Some(e.a)
            } else {
                None
            }
        })
    }

    /// Connected components as sorted node lists, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.nodes.len()];
        let mut out = Vec::new();
        for s in 0..self.nodes.len() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for w in self.neighbors(v).collect::<Vec<_>>() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Cartan matrix reconstructed from bonds alone.
    pub fn cartan_from_bonds(&self) -> Vec<Vec<i64>> {
        let n = self.nodes.len();
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for e in &self.bonds {
            let (short, long) = match e.arrow_to {
                Some(s) if s == e.a => (e.a, e.b),
                Some(_) => (e.b, e.a),
                None => (e.a, e.b),
            };
            let m = if e.arrow_to.is_some() {
                e.multiplicity
            } else {
                1
            };
            a[short][long] = -m;
            a[long][short] = -1;
        }
        a
    }
}

pub fn diagram(rs: &RootSystem) -> Diagram {
    Diagram::from_roots(rs, (0..rs.rank()).map(|i| rs.simple_root(i)).collect())
}

/// Simple roots followed by the lowest root `−θ`.
pub fn extended_diagram(rs: &RootSystem) -> Diagram {
    let mut nodes: Vec<Root> = (0..rs.rank()).map(|i| rs.simple_root(i)).collect();
    nodes.push(rs.highest_root().neg());
    Diagram::from_roots(rs, nodes)
}

/// Names one connected finite-type component by degree sequence, bond
/// multiplicities and, for doubly laced chains, which end is short.
/// A two-node double bond is B2 or C2 by the ambient series.
pub fn classify_component(d: &Diagram, comp: &[usize], ambient: Series) -> Result<String> {
    let n = comp.len();
    let inside: Vec<&Bond> = d
        .bonds
        .iter()
        .filter(|e| comp.contains(&e.a) && comp.contains(&e.b))
        .collect();
    let describe = || format!("nodes {comp:?} with bonds {inside:?}");
    if inside.len() != n - 1 {
        return Err(Error::Unclassifiable(describe()));
    }
    let degree = |v: usize| inside.iter().filter(|e| e.a == v || e.b == v).count();
    let max_mult = inside.iter().map(|e| e.multiplicity).max().unwrap_or(1);
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match max_mult {
        1 if branch.is_empty() => Ok(format!("A{n}")),
        1 if branch.len() == 1 && degree(branch[0]) == 3 => {
            let centre = branch[0];
            let mut arms: Vec<usize> = d
                .neighbors(centre)
                .filter(|w| comp.contains(w))
                .map(|w| arm_length(d, comp, centre, w))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(format!("D{}", k + 3)),
                [1, 2, 2] => Ok("E6".into()),
                [1, 2, 3] => Ok("E7".into()),
                [1, 2, 4] => Ok("E8".into()),
                _ => Err(Error::Unclassifiable(describe())),
            }
        }
        2 if branch.is_empty() => {
            let e = inside
                .iter()
                .find(|e| e.multiplicity == 2)
                .expect("double bond");
            let short = e
                .arrow_to
                .ok_or_else(|| Error::Unclassifiable(describe()))?;
            if n == 2 {
                return Ok(if ambient == Series::C {
                    "C2".into()
                } else {
                    "B2".into()
                });
            }
            let long = if short == e.a { e.b } else { e.a };
            let (short_leaf, long_leaf) = (degree(short) == 1, degree(long) == 1);
            match (short_leaf, long_leaf, n) {
                (true, false, _) => Ok(format!("B{n}")),
                (false, true, _) => Ok(format!("C{n}")),
                (false, false, 4) => Ok("F4".into()),
                _ => Err(Error::Unclassifiable(describe())),
            }
        }
        3 if n == 2 => Ok("G2".into()),
        _ => Err(Error::Unclassifiable(describe())),
    }
}

fn arm_length(d: &Diagram, comp: &[usize], centre: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    loop {
        let next: Vec<usize> = d
            .neighbors(cur)
            .filter(|&w| w != prev && comp.contains(&w))
            .collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Classified components of the sub-diagram on `keep`, as sorted labels.
fn classify_nodes(rs: &RootSystem, nodes: Vec<Root>) -> Result<Vec<String>> {
    let d = Diagram::from_roots(rs, nodes);
    let mut out = d
        .components()
        .iter()
        .map(|c| classify_component(&d, c, rs.lie_type().series()))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|s| label_key(s));
    Ok(out)
}

fn label_key(s: &str) -> (std::cmp::Reverse<usize>, String) {
    (
        std::cmp::Reverse(s[1..].parse().unwrap_or(0)),
        s.to_string(),
    )
}

/// Simple roots orthogonal to `α`; checked to generate every root orthogonal
/// to `α` with coefficients of one sign.
pub fn simple_roots_of_h(rs: &RootSystem, alpha: &Root) -> Result<Vec<Root>> {
    let keep: Vec<usize> = (0..rs.rank())
        .filter(|&i| rs.cartan_unchecked(alpha, &rs.simple_root(i)) == 0)
        .collect();
    let phi0: BTreeSet<&Root> = rs
        .roots()
        .iter()
        .filter(|b| rs.cartan_unchecked(alpha, b) == 0)
        .collect();
    for beta in &phi0 {
        let supported = beta
            .coords()
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || keep.contains(&i));
        if !supported {
            return Err(Error::Verification {
                check: "simple roots of h generate the orthogonal roots".into(),
                witness: beta.to_string(),
            });
        }
    }
    // The subsystem generated by reflections in the kept roots is all of Φ₀.
    let mut orbit: BTreeSet<Root> = keep.iter().map(|&i| rs.simple_root(i)).collect();
    let mut frontier: Vec<Root> = orbit.iter().cloned().collect();
    while let Some(b) = frontier.pop() {
        for &i in &keep {
            let s = rs.simple_reflection(i, &b);
            if orbit.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    if orbit.len() != phi0.len() || orbit.iter().any(|b| !phi0.contains(b)) {
        return Err(Error::Verification {
            check: "simple roots of h generate the orthogonal roots".into(),
            witness: format!("subsystem of size {} against {}", orbit.len(), phi0.len()),
        });
    }
    Ok(keep.into_iter().map(|i| rs.simple_root(i)).collect())
}

/// Family and concrete names for one row of the tables.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IsotropyReport {
    pub lie_type: String,
    pub group: String,
    pub h_components: Vec<String>,
    pub center_dim: usize,
    pub h_name: String,
    pub normalizer_components: Vec<String>,
    pub normalizer_name: String,
    pub dim_g: usize,
    pub dim_h: usize,
    pub n: usize,
    pub dim_m: usize,
    pub einstein_constant: usize,
    pub manifold: String,
    pub family: String,
    pub wolf_space: String,
    pub wolf_family: String,
    /// `"Z2"` or `"trivial"`: the group of the only non-trivial quotient.
    pub pi1_quotient: String,
    /// Always `"lookup"`: the annotation is not computed.
    pub pi1_source: String,
}

pub const FAMILY_SPHERE: &str = "Sp(n+1)/Sp(n) ≅ S^{4n+3}";
pub const FAMILY_RP: &str = "Sp(n+1)/(Sp(n)×Z2) ≅ RP^{4n+3}";
pub const FAMILY_SU: &str = "SU(m)/S(U(m-2)×U(1))";
pub const FAMILY_SO: &str = "SO(k)/(SO(k-4)×Sp(1))";

pub const WOLF_SP: &str = "Sp(n+1)/(Sp(n)×Sp(1))";
pub const WOLF_SU: &str = "SU(m)/S(U(m-2)×U(2))";
pub const WOLF_SO: &str = "SO(k)/(SO(k-4)×SO(4))";

struct Names {
    group: String,
    h: String,
    normalizer: String,
    dim_h: usize,
    family: &'static str,
    wolf_family: &'static str,
    h_components: Vec<String>,
    center: usize,
    z2: bool,
}

/// Expected isotropy data per type: the finite naming lookup, together with
/// the component labels and dimension it must agree with.
fn names(t: LieType) -> Names {
    let r = t.rank();
    let comps = |v: Vec<String>| v.into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>();
    let sp_label = |n: usize| match n {
        0 => String::new(),
        1 => "A1".into(),
        n => format!("C{n}"),
    };
    let so_label = |k: usize| -> Vec<String> {
        // so(k) as a sum of simple labels.
        match k {
            0..=2 => vec![],
            3 => vec!["A1".into()],
            4 => vec!["A1".into(), "A1".into()],
            5 => vec!["B2".into()],
            6 => vec!["A3".into()],
            k if k % 2 == 1 => vec![format!("B{}", (k - 1) / 2)],
            k => vec![format!("D{}", k / 2)],
        }
    };
    let exceptional = |g: &str, h: &str, nm: &str, dim_h, comp: &str| Names {
        group: g.into(),
        h: h.into(),
        normalizer: nm.into(),
        dim_h,
        family: "",
        wolf_family: "",
        h_components: vec![comp.into()],
        center: 0,
        z2: false,
    };
    match (t.series(), r) {
        (Series::A, 1) | (Series::C, _) => {
            let n = if t.series() == Series::A { 0 } else { r - 1 };
            Names {
                group: format!("Sp({})", n + 1),
                h: format!("Sp({n})"),
                normalizer: format!("Sp({n})×Sp(1)"),
                dim_h: n * (2 * n + 1),
                family: FAMILY_SPHERE,
                wolf_family: WOLF_SP,
                h_components: comps(vec![sp_label(n)]),
                center: 0,
                z2: true,
            }
        }
        (Series::A, _) => {
            let m = r + 1;
            Names {
                group: format!("SU({m})"),
                h: format!("S(U({})×U(1))", m - 2),
                normalizer: format!("S(U({})×U(2))", m - 2),
                dim_h: (m - 2) * (m - 2),
                family: FAMILY_SU,
                wolf_family: WOLF_SU,
                h_components: comps(vec![if m > 3 {
                    format!("A{}", m - 3)
                } else {
                    String::new()
                }]),
                center: 1,
                z2: false,
            }
        }
        (Series::B, _) | (Series::D, _) => {
            let k = if t.series() == Series::B {
                2 * r + 1
            } else {
                2 * r
            };
            let mut hc = so_label(k - 4);
            hc.push("A1".into());
            Names {
                group: format!("SO({k})"),
                h: format!("SO({})×Sp(1)", k - 4),
                normalizer: format!("SO({})×SO(4)", k - 4),
                dim_h: (k - 4) * (k - 5) / 2 + 3,
                family: FAMILY_SO,
                wolf_family: WOLF_SO,
                h_components: hc,
                center: 0,
                z2: false,
            }
        }
        (Series::G, _) => Names {
            family: "G2/Sp(1)",
            wolf_family: "G2/SO(4)",
            ..exceptional("G2", "Sp(1)", "SO(4)", 3, "A1")
        },
        (Series::F, _) => Names {
            family: "F4/Sp(3)",
            wolf_family: "F4/Sp(3)Sp(1)",
            ..exceptional("F4", "Sp(3)", "Sp(3)Sp(1)", 21, "C3")
        },
        (Series::E, 6) => Names {
            family: "E6/SU(6)",
            wolf_family: "E6/SU(6)Sp(1)",
            ..exceptional("E6", "SU(6)", "SU(6)Sp(1)", 35, "A5")
        },
        (Series::E, 7) => Names {
            family: "E7/Spin(12)",
            wolf_family: "E7/Spin(12)Sp(1)",
            ..exceptional("E7", "Spin(12)", "Spin(12)Sp(1)", 66, "D6")
        },
        (Series::E, _) => Names {
            family: "E8/E7",
            wolf_family: "E8/E7Sp(1)",
            ..exceptional("E8", "E7", "E7Sp(1)", 133, "E7")
        },
    }
}

fn quotient(group: &str, h: &str) -> String {
    if h.contains('×') && !h.starts_with("S(") {
        format!("{group}/({h})")
    } else {
        format!("{group}/{h}")
    }
}

/// Isotropy data of the canonical highest-root construction, read off the
/// diagrams and checked against the naming lookup.
pub fn isotropy_report(rs: &RootSystem) -> Result<IsotropyReport> {
    let t = rs.lie_type();
    let theta = rs.highest_root();
    let h_roots = simple_roots_of_h(rs, &theta)?;
    let h_components = classify_nodes(rs, h_roots.clone())?;
    // Extended diagram with the neighbours of −θ deleted: the remaining
    // simple nodes must be exactly those of h.
    let ext = extended_diagram(rs);
    let lowest = rs.rank();
    let cut: BTreeSet<usize> = ext.neighbors(lowest).collect();
    let n_nodes: Vec<Root> = (0..=rs.rank())
        .filter(|v| !cut.contains(v))
        .map(|v| ext.nodes[v].clone())
        .collect();
    if n_nodes[..n_nodes.len() - 1] != h_roots[..] {
        return Err(Error::Verification {
            check: "node deletion agrees with the simple roots of h".into(),
            witness: t.label(),
        });
    }
    let normalizer_components = classify_nodes(rs, n_nodes)?;

    let rank_of = |s: &String| s[1..].parse::<usize>().expect("label");
    let ss_rank: usize = h_components.iter().map(rank_of).sum();
    let center_dim = rs.rank() - 1 - ss_rank;

    let phi0 = rs
        .roots()
        .iter()
        .filter(|b| rs.cartan_unchecked(&theta, b) == 0)
        .count();
    let plus = rs
        .roots()
        .iter()
        .filter(|b| rs.cartan_unchecked(&theta, b) == 1)
        .count();
    let dim_g = rs.dim_algebra();
    let dim_h = rs.rank() - 1 + phi0;
    let n = plus / 2;
    let dim_m = dim_g - dim_h;

    let nm = names(t);
    let mismatch = |what: &str, got: String, want: String| Error::Verification {
        check: format!("isotropy lookup agrees with the diagram ({what})"),
        witness: format!("{t}: computed {got}, lookup {want}"),
    };
    let mut want_h = nm.h_components.clone();
    want_h.sort_by_key(|s| label_key(s));
    if want_h != h_components {
        return Err(mismatch(
            "h components",
            format!("{h_components:?}"),
            format!("{want_h:?}"),
        ));
    }
    let mut want_n = want_h.clone();
    want_n.push("A1".into());
    want_n.sort_by_key(|s| label_key(s));
    if want_n != normalizer_components {
        return Err(mismatch(
            "normalizer",
            format!("{normalizer_components:?}"),
            format!("{want_n:?}"),
        ));
    }
    if nm.center != center_dim {
        return Err(mismatch(
            "center",
            center_dim.to_string(),
            nm.center.to_string(),
        ));
    }
    if nm.dim_h != dim_h {
        return Err(mismatch("dim h", dim_h.to_string(), nm.dim_h.to_string()));
    }
    if dim_m != 4 * n + 3 {
        return Err(mismatch(
            "dim M = 4n+3",
            dim_m.to_string(),
            (4 * n + 3).to_string(),
        ));
    }

    let mut manifold = quotient(&nm.group, &nm.h);
    if nm.z2 {
        write!(manifold, " ≅ S^{}", 4 * n + 3).expect("string write");
    }
    Ok(IsotropyReport {
        lie_type: t.label(),
        wolf_space: quotient(&nm.group, &nm.normalizer),
        group: nm.group,
        h_components,
        center_dim,
        h_name: nm.h,
        normalizer_components,
        normalizer_name: nm.normalizer,
        dim_g,
        dim_h,
        n,
        dim_m,
        einstein_constant: 2 * (2 * n + 1),
        manifold,
        family: nm.family.to_string(),
        wolf_family: nm.wolf_family.to_string(),
        pi1_quotient: if nm.z2 { "Z2".into() } else { "trivial".into() },
        pi1_source: "lookup".into(),
    })
}

/// Redundancy guards: `n ≥ 0` (A1 is read as Sp(1)), `m ≥ 3`, `k ≥ 7`.
fn in_table(t: LieType) -> bool {
    match t.series() {
        Series::B => 2 * t.rank() + 1 >= 7,
        Series::D => 2 * t.rank() >= 7,
        _ => true,
    }
}

/// One row per type of rank at most `max_rank` (after the redundancy
/// guards), plus every exceptional type, in family order.
pub fn classification_table(max_rank: usize) -> Result<Vec<IsotropyReport>> {
    let mut types: BTreeSet<LieType> = LieType::all_up_to(max_rank)
        .into_iter()
        .filter(|t| in_table(*t))
        .collect();
    for s in ["G2", "F4", "E6", "E7", "E8"] {
        types.insert(s.parse()?);
    }
    let mut rows = types
        .into_iter()
        .map(|t| isotropy_report(&build_root_system(t)))
        .collect::<Result<Vec<_>>>()?;
    let order = |r: &IsotropyReport| MANIFOLD_FAMILIES.iter().position(|f| *f == r.family);
    rows.sort_by_key(|r| (order(r), r.dim_g));
    Ok(rows)
}

/// Families of the first list, in display order.
pub const MANIFOLD_FAMILIES: [&str; 9] = [
    FAMILY_SPHERE,
    FAMILY_RP,
    FAMILY_SU,
    FAMILY_SO,
    "G2/Sp(1)",
    "F4/Sp(3)",
    "E6/SU(6)",
    "E7/Spin(12)",
    "E8/E7",
];

pub const WOLF_FAMILIES: [&str; 8] = [
    WOLF_SP,
    WOLF_SU,
    WOLF_SO,
    "G2/SO(4)",
    "F4/Sp(3)Sp(1)",
    "E6/SU(6)Sp(1)",
    "E7/Spin(12)Sp(1)",
    "E8/E7Sp(1)",
];

/// Families realized by `rows`, in display order. The projective family is
/// present whenever a row carries the Z2 annotation.
pub fn families_present(rows: &[IsotropyReport]) -> (Vec<&'static str>, Vec<&'static str>) {
    let fam: BTreeSet<&str> = rows.iter().map(|r| r.family.as_str()).collect();
    let z2 = rows.iter().any(|r| r.pi1_quotient == "Z2");
    let m = MANIFOLD_FAMILIES
        .iter()
        .copied()
        .filter(|f| fam.contains(f) || (*f == FAMILY_RP && z2))
        .collect();
    let wf: BTreeSet<&str> = rows.iter().map(|r| r.wolf_family.as_str()).collect();
    let w = WOLF_FAMILIES
        .iter()
        .copied()
        .filter(|f| wf.contains(f))
        .collect();
    (m, w)
}

fn quotient_note(r: &IsotropyReport) -> String {
    if r.pi1_quotient == "Z2" {
        let n = r.n;
        format!("Z2: Sp({})/(Sp({n})×Z2) ≅ RP^{}", n + 1, 4 * n + 3)
    } else {
        "trivial".into()
    }
}

pub fn table_markdown(rows: &[IsotropyReport]) -> String {
    let mut s = String::new();
    let (fams, wolves) = families_present(rows);
    s.push_str("# Homogeneous 3-Sasakian manifolds\n\n");
    s.push_str(
        "| type | M = G/H | h | center | dim M | n | Einstein constant | quotient (lookup) |\n",
    );
    s.push_str("|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        let h = if r.h_components.is_empty() {
            "0".to_string()
        } else {
            r.h_components.join(" + ")
        };
        writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            r.lie_type,
            r.manifold,
            h,
            r.center_dim,
            r.dim_m,
            r.n,
            r.einstein_constant,
            quotient_note(r)
        )
        .expect("string write");
    }
    s.push_str("\nFamilies:\n\n");
    for f in &fams {
        writeln!(s, "- {f}").expect("string write");
    }
    s.push_str("\nGuards: n >= 0, m >= 3, k >= 7.\n");
    s.push_str("\n# Homogeneous positive quaternion-Kähler spaces\n\n");
    s.push_str("| type | G/N_G(K) | normalizer | dim |\n");
    s.push_str("|---|---|---|---|\n");
    for r in rows {
        writeln!(
            s,
            "| {} | {} | {} | {} |",
            r.lie_type,
            r.wolf_space,
            r.normalizer_components.join(" + "),
            r.dim_m - 3
        )
        .expect("string write");
    }
    s.push_str("\nFamilies:\n\n");
    for f in &wolves {
        writeln!(s, "- {f}").expect("string write");
    }
    s
}

pub fn table_json(rows: &[IsotropyReport]) -> serde_json::Value {
    let (fams, wolves) = families_present(rows);
    serde_json::json!({
        "rows": rows,
        "families": fams,
        "wolf_families": wolves,
    })
}

pub fn table_csv(rows: &[IsotropyReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Construction(format!("csv: {e}"));
    w.write_record([
        "type",
        "group",
        "h",
        "h_components",
        "center_dim",
        "dim_g",
        "dim_h",
        "n",
        "dim_m",
        "einstein_constant",
        "manifold",
        "family",
        "wolf_space",
        "wolf_family",
        "pi1_quotient",
        "pi1_source",
    ])
    .map_err(io)?;
    for r in rows {
        w.write_record([
            r.lie_type.clone(),
            r.group.clone(),
            r.h_name.clone(),
            r.h_components.join("+"),
            r.center_dim.to_string(),
            r.dim_g.to_string(),
            r.dim_h.to_string(),
            r.n.to_string(),
            r.dim_m.to_string(),
            r.einstein_constant.to_string(),
            r.manifold.clone(),
            r.family.clone(),
            r.wolf_space.clone(),
            r.wolf_family.clone(),
            r.pi1_quotient.clone(),
            r.pi1_source.clone(),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Construction(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Construction(format!("csv: {e}")))
}

/// Row lookup by type label, for the `report` command.
pub fn rows_by_type(rows: Vec<IsotropyReport>) -> BTreeMap<String, IsotropyReport> {
    rows.into_iter().map(|r| (r.lie_type.clone(), r)).collect()
}
