//! The set `GSat(A) \ Sat(A)` for indecomposable `A`, matched against the
//! printed families.

use serde::{Serialize, Serializer};

use crate::cartan::{DiagramAutomorphism, SimpleType};
use crate::decorations::{enumerate_cd, Analysis, ClassLabel, Decoration};
use crate::error::{input, Result};
use crate::roots::RootSystem;

/// One member of a printed family: 0-based `X`, the swapped pair of `tau`
/// (if any) and the distinguished node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub family: String,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub x: Vec<usize>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub swap: Option<(usize, usize)>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub node: usize,
}

impl FamilyMember {
    fn tau(&self, n: usize) -> DiagramAutomorphism {
        let mut t = DiagramAutomorphism::identity(n);
        if let Some((a, b)) = self.swap {
            t.perm[a] = b;
            t.perm[b] = a;
        }
        t
    }
}

/// Alternating fill: odd nodes up to `i` black, even ones white, all nodes after `i` black
/// (1-based description; output 0-based).
fn alternating(n: usize, i: usize) -> Vec<usize> {
    (1..=n).filter(|&k| k % 2 == 1 || k > i).map(|k| k - 1).collect()
}

fn member(family: &str, x: Vec<usize>, swap: Option<(usize, usize)>, node: usize) -> FamilyMember {
    FamilyMember {
        family: family.to_string(),
        x,
        swap,
        node,
    }
}

/// Members of the printed families; with `excluded`, the same patterns at the
/// values of `i` removed by the stated bounds.
fn members(t: SimpleType, excluded: bool) -> Vec<FamilyMember> {
    let n = t.rank;
    let keep = |ok: bool| ok != excluded;
    let mut out = Vec::new();
    match t.letter {
        'B' => {
            if !excluded {
                for i in (2..=n).step_by(2) {
                    out.push(member("B: i even", alternating(n, i), None, i - 1));
                }
            }
        }
        'C' => {
            for i in 1..=n {
                if keep(i < n) {
                    out.push(member("C: i<n", (i..n).collect(), None, i - 1));
                }
            }
        }
        'D' if n % 2 == 0 => {
            for i in (2..=n).step_by(2) {
                if keep(i + 1 < n) {
                    out.push(member(
                        "D: i<n-1, i even, n even",
                        alternating(n, i),
                        None,
                        i - 1,
                    ));
                }
            }
        }
        'D' => {
            for i in (2..n).step_by(2) {
                if keep(i + 2 < n) {
                    out.push(member(
                        "D: i<n-2, i even, n odd",
                        alternating(n, i),
                        Some((n - 2, n - 1)),
                        i - 1,
                    ));
                }
            }
        }
        'E' if !excluded => match n {
            6 => out.push(member("E6", vec![0, 2, 3, 4, 5], Some((0, 5)), 1)),
            7 => {
                out.push(member("E7 (i=6)", vec![1, 2, 3, 4, 6], None, 5));
                out.push(member("E7 (i=1)", vec![1, 2, 3, 4, 5, 6], None, 0));
            }
            _ => {
                out.push(member("E8 (i=1)", vec![1, 2, 3, 4, 5, 6], None, 0));
                out.push(member("E8 (i=8)", vec![0, 1, 2, 3, 4, 5, 6], None, 7));
            }
        },
        'F' if !excluded => {
            out.push(member("F4 (i=4)", vec![1, 2], None, 3));
            out.push(member("F4 (i=1)", vec![1, 2, 3], None, 0));
        }
        'G' if !excluded => {
            out.push(member("G2 (i=1)", vec![1], None, 0));
            out.push(member("G2 (i=2)", vec![0], None, 1));
        }
        _ => {}
    }
    if t.letter == 'E' && n == 6 {
        // tau on E6 swaps 1<->6 and 3<->5
        for m in out.iter_mut() {
            m.swap = None;
            m.family = "E6".into();
        }
    }
    out
}

/// Printed family members for `t` (0-based data).
pub fn printed_families(t: SimpleType) -> Vec<FamilyMember> {
    members(t, false)
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Entry {
    #[serde(serialize_with = "crate::one_based::ser")]
    pub x: Vec<usize>,
    #[serde(serialize_with = "tau_pairs")]
    pub tau: DiagramAutomorphism,
    /// The unique `tau`-fixed white node with non-integral `alpha_i(rho_X^vee)`.
    #[serde(serialize_with = "crate::one_based::ser")]
    pub node: usize,
    pub label: ClassLabel,
    pub family: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Report {
    pub type_: String,
    pub entries: Vec<Table1Entry>,
    /// Family patterns at values of `i` excluded by the printed bounds, with their labels.
    pub borderline: Vec<Table1Entry>,
}

fn tau_pairs<S: Serializer>(t: &DiagramAutomorphism, s: S) -> std::result::Result<S::Ok, S::Error> {
    t.pairs().serialize(s)
}

/// Computed `GSat \ Sat` for an indecomposable root system.
pub fn gsat_minus_sat(rs: &RootSystem) -> Vec<(Decoration, usize, ClassLabel)> {
    enumerate_cd(rs)
        .into_iter()
        .filter_map(|d| {
            let an = Analysis::new(rs, &d);
            let label = an.classify();
            if matches!(label, ClassLabel::WeakSat | ClassLabel::NonweakGSat) {
                let node = an.non_integral_node().expect("non-Satake has such a node");
                Some((d, node, label))
            } else {
                None
            }
        })
        .collect()
}

pub fn table1(rs: &RootSystem) -> Result<Table1Report> {
    let a = rs.cartan();
    let [t] = a.factors() else {
        return input("table1 needs an indecomposable type");
    };
    let n = a.rank();
    let mut fam = printed_families(*t);
    if t.letter == 'E' && n == 6 {
        let w0 = rs.tau0x(&(0..n).collect::<Vec<_>>())?;
        for m in fam.iter_mut() {
            m.swap = Some((0, w0.apply(0)));
        }
    }
    let family_of = |d: &Decoration| {
        fam.iter()
            .find(|m| m.x == d.x && tau_of(m, rs) == d.tau)
            .map(|m| m.family.clone())
    };
    let entries = gsat_minus_sat(rs)
        .into_iter()
        .map(|(d, node, label)| Table1Entry {
            family: family_of(&d),
            x: d.x,
            tau: d.tau,
            node,
            label,
        })
        .collect();
    let mut borderline = Vec::new();
    for m in members(*t, true) {
        let tau = tau_of(&m, rs);
        let dec = Decoration::new(rs, &m.x, tau)
            .or_else(|_| Decoration::new(rs, &m.x, DiagramAutomorphism::identity(n)));
        if let Ok(d) = dec {
            let label = Analysis::new(rs, &d).classify();
            borderline.push(Table1Entry {
                x: d.x,
                tau: d.tau,
                node: m.node,
                label,
                family: Some(m.family),
            });
        }
    }
    Ok(Table1Report {
        type_: a.type_string(),
        entries,
        borderline,
    })
}

fn tau_of(m: &FamilyMember, rs: &RootSystem) -> DiagramAutomorphism {
    let n = rs.rank();
    if m.family == "E6" {
        return rs
            .tau0x(&(0..n).collect::<Vec<_>>())
            .expect("finite type");
    }
    m.tau(n)
}
