//! Compatible decorations `(X, tau)`, the GSat / Sat predicates, labels and
//! the parameter index sets.

pub mod heck;
pub mod table1;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanMatrix, DiagramAutomorphism};
use crate::error::{input, Error, Result};
use crate::linalg::{q, Q};
use crate::roots::{simple_root, IntMap, RootSystem};

/// A pair `(X, tau)`; nodes 0-based, `x` sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    pub x: Vec<usize>,
    pub tau: DiagramAutomorphism,
}

impl Decoration {
    /// Validates compatibility against `rs`.
    pub fn new(rs: &RootSystem, x: &[usize], tau: DiagramAutomorphism) -> Result<Self> {
        let mut x = x.to_vec();
        x.sort_unstable();
        x.dedup();
        if let Some(bad) = x.iter().find(|&&i| i >= rs.rank()) {
            return input(format!("node {} out of range", bad + 1));
        }
        if tau.perm.len() != rs.rank() || !tau.preserves(rs.cartan()) {
            return input("tau is not a diagram automorphism");
        }
        if let Some(why) = compatibility_violation(rs, &x, &tau) {
            return input(format!("not a compatible decoration: {why}"));
        }
        Ok(Decoration { x, tau })
    }

    pub fn rank(&self) -> usize {
        self.tau.perm.len()
    }

    pub fn in_x(&self, i: usize) -> bool {
        self.x.binary_search(&i).is_ok()
    }

    /// `I \ X`, sorted; the index set of `gamma`.
    pub fn white(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.in_x(i)).collect()
    }

    /// Smallest node of each `tau`-orbit in `I \ X`.
    pub fn i_star(&self) -> Vec<usize> {
        self.white()
            .into_iter()
            .filter(|&i| self.tau.apply(i) >= i)
            .collect()
    }

    /// `X[i] = X ∪ {i, tau(i)}`.
    pub fn x_bracket(&self, i: usize) -> Vec<usize> {
        let mut v = self.x.clone();
        v.push(i);
        v.push(self.tau.apply(i));
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Union of the components of `X` neighbouring `{i, tau(i)}`.
    pub fn x_check(&self, a: &CartanMatrix, i: usize) -> Vec<usize> {
        let ends = [i, self.tau.apply(i)];
        let mut out: Vec<usize> = a
            .components_of(&self.x)
            .into_iter()
            .filter(|c| c.iter().any(|&j| ends.iter().any(|&e| a.a[e][j] != 0)))
            .flatten()
            .collect();
        out.sort_unstable();
        out
    }

    /// Position of node `i` within `gamma` (i.e. within `I \ X`).
    pub fn gamma_slot(&self, i: usize) -> Option<usize> {
        self.white().iter().position(|&w| w == i)
    }

    pub fn to_json(&self, a: &CartanMatrix) -> DecorationJson {
        DecorationJson {
            type_: a.type_string(),
            x: self.x.iter().map(|i| i + 1).collect(),
            tau: self.tau.pairs(),
        }
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x: Vec<String> = self.x.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "X={{{}}} tau={}", x.join(","), self.tau)
    }
}

/// Serialized form `{"type":"B3","X":[2,3],"tau":[[1,1],[2,2],[3,3]]}`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecorationJson {
    #[serde(rename = "type")]
    pub type_: String,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub tau: Vec<[usize; 2]>,
}

impl DecorationJson {
    pub fn parse(&self) -> Result<(RootSystem, Decoration)> {
        let a = CartanMatrix::from_type_string(&self.type_)?;
        let rs = RootSystem::generate(&a)?;
        let n = a.rank();
        let mut perm = vec![usize::MAX; n];
        for &[i, j] in &self.tau {
            if i == 0 || j == 0 || i > n || j > n {
                return input("tau pair out of range");
            }
            perm[i - 1] = j - 1;
        }
        if perm.contains(&usize::MAX) {
            return input("tau must list every node");
        }
        if self.x.iter().any(|&i| i == 0 || i > n) {
            return input("X node out of range");
        }
        let x: Vec<usize> = self.x.iter().map(|i| i - 1).collect();
        let dec = Decoration::new(&rs, &x, DiagramAutomorphism { perm })?;
        Ok((rs, dec))
    }
}

/// Reason why `(X, tau)` fails to be compatible, if it does.
pub fn compatibility_violation(
    rs: &RootSystem,
    x: &[usize],
    tau: &DiagramAutomorphism,
) -> Option<String> {
    if !tau.is_involution() {
        return Some("tau is not an involution".into());
    }
    let in_x = |i: usize| x.contains(&i);
    if let Some(&i) = x.iter().find(|&&i| !in_x(tau.apply(i))) {
        return Some(format!("tau(X) != X at node {}", i + 1));
    }
    let t0 = match rs.tau0x(x) {
        Ok(t) => t,
        Err(e) => return Some(e.to_string()),
    };
    if let Some(&i) = x.iter().find(|&&i| tau.apply(i) != t0.apply(i)) {
        return Some(format!("tau differs from tau_0X at node {}", i + 1));
    }
    None
}

/// All compatible decorations: `X` by increasing bitmask, then `tau` in the
/// automorphism group order.
pub fn enumerate_cd(rs: &RootSystem) -> Vec<Decoration> {
    let n = rs.rank();
    let auts: Vec<DiagramAutomorphism> = rs
        .cartan()
        .automorphism_group()
        .into_iter()
        .filter(|t| t.is_involution())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let x: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let t0 = rs.tau0x(&x).expect("tau_0X exists in finite type");
        for tau in &auts {
            let ok = x
                .iter()
                .all(|&i| tau.apply(i) == t0.apply(i));
            if ok {
                out.push(Decoration {
                    x: x.clone(),
                    tau: tau.clone(),
                });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    NotCompatible,
    #[serde(rename = "NotGSat")]
    CompatibleOnly,
    Sat,
    WeakSat,
    NonweakGSat,
}

impl ClassLabel {
    pub fn is_gsat(self) -> bool {
        matches!(
            self,
            ClassLabel::Sat | ClassLabel::WeakSat | ClassLabel::NonweakGSat
        )
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassLabel::NotCompatible => "NotCompatible",
            ClassLabel::CompatibleOnly => "NotGSat",
            ClassLabel::Sat => "Sat",
            ClassLabel::WeakSat => "WeakSat",
            ClassLabel::NonweakGSat => "NonweakGSat",
        };
        f.write_str(s)
    }
}

/// Witness of a failed GSat condition: white node `i`, black node `j` forming
/// the excluded two-node pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsatViolation {
    #[serde(serialize_with = "crate::one_based::ser")]
    pub node: usize,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub partner: usize,
    pub clause: String,
}

/// Per-decoration data shared by the predicates: `theta` on the lattice and
/// the pairings `alpha_j(2 rho_X^vee)`.
#[derive(Clone, Debug)]
pub struct Analysis<'a> {
    pub rs: &'a RootSystem,
    pub dec: &'a Decoration,
    pub theta: IntMap,
    pub two_rho: Vec<i64>,
}

impl<'a> Analysis<'a> {
    pub fn new(rs: &'a RootSystem, dec: &'a Decoration) -> Self {
        Analysis {
            rs,
            dec,
            theta: rs.theta(&dec.x, &dec.tau),
            two_rho: rs.two_rho_pairings(&dec.x),
        }
    }

    /// `(theta(alpha_i))(h_i)`.
    pub fn theta_pairing(&self, i: usize) -> i64 {
        self.rs.pairing(&self.theta.cols[i], i)
    }

    pub fn gsat_violation(&self) -> Option<GsatViolation> {
        let a = self.rs.cartan();
        for i in self.dec.white() {
            if self.dec.tau.apply(i) != i {
                continue;
            }
            let xc = self.dec.x_check(a, i);
            if let [j] = xc[..] {
                if a.a[i][j] * a.a[j][i] == 1 {
                    return Some(GsatViolation {
                        node: i,
                        partner: j,
                        clause: format!(
                            "white node {} with a single black neighbour {} joined by a simple edge",
                            i + 1,
                            j + 1
                        ),
                    });
                }
            }
        }
        None
    }

    pub fn is_gsat(&self) -> bool {
        self.gsat_violation().is_none()
    }

    /// The four reformulations of the GSat condition, in order:
    /// `w_X(alpha_i) = alpha_i + alpha_j => a_ij != -1`;
    /// `X(i) = {j} => a_ij a_ji != 1`;
    /// `theta(alpha_i) = -(alpha_i + alpha_j) => a_ij != -1`;
    /// `(theta alpha_i)(h_i) != -1`.
    pub fn gsat_reformulations(&self) -> [bool; 4] {
        let rs = self.rs;
        let a = rs.cartan();
        let n = rs.rank();
        let wx = rs.longest_element(&self.dec.x);
        let fixed_white: Vec<usize> = self
            .dec
            .white()
            .into_iter()
            .filter(|&i| self.dec.tau.apply(i) == i)
            .collect();
        let r1 = fixed_white.iter().all(|&i| {
            self.dec.x.iter().all(|&j| {
                let mut target = simple_root(n, i);
                target[j] += 1;
                wx.map.cols[i] != target || a.a[i][j] != -1
            })
        });
        let comps = a.components_of(&self.dec.x);
        let r2 = fixed_white.iter().all(|&i| {
            let near: Vec<usize> = comps
                .iter()
                .filter(|c| c.iter().any(|&j| a.a[i][j] != 0))
                .flatten()
                .copied()
                .collect();
            match near[..] {
                [j] => a.a[i][j] * a.a[j][i] != 1,
                _ => true,
            }
        });
        let r3 = (0..n).all(|i| {
            (0..n).filter(|&j| j != i).all(|j| {
                let mut target = simple_root(n, i);
                target[j] += 1;
                let minus: Vec<i64> = target.iter().map(|c| -c).collect();
                self.theta.cols[i] != minus || a.a[i][j] != -1
            })
        });
        let r4 = (0..n).all(|i| self.theta_pairing(i) != -1);
        [r1, r2, r3, r4]
    }

    /// `alpha_i(rho_X^vee) in Z` for every `tau`-fixed white node.
    pub fn is_sat(&self) -> bool {
        self.non_integral_node().is_none()
    }

    /// A `tau`-fixed white node with `alpha_i(rho_X^vee)` not integral.
    pub fn non_integral_node(&self) -> Option<usize> {
        self.dec
            .white()
            .into_iter()
            .find(|&i| self.dec.tau.apply(i) == i && self.two_rho[i] % 2 != 0)
    }

    /// All `tau`-fixed white nodes with `alpha_i(rho_X^vee)` not integral.
    pub fn non_integral_nodes(&self) -> Vec<usize> {
        self.dec
            .white()
            .into_iter()
            .filter(|&i| self.dec.tau.apply(i) == i && self.two_rho[i] % 2 != 0)
            .collect()
    }

    /// Some component is the triple-edge diagram with only its long node black.
    pub fn is_nonweak_exception(&self) -> bool {
        let a = self.rs.cartan();
        a.components().iter().any(|c| {
            let [p, r] = c[..] else { return false };
            let black: Vec<usize> = c.iter().copied().filter(|&k| self.dec.in_x(k)).collect();
            a.a[p][r] * a.a[r][p] == 3
                && black.len() == 1
                && a.d[black[0]] > a.d[if black[0] == p { r } else { p }]
        })
    }

    pub fn classify(&self) -> ClassLabel {
        if !self.is_gsat() {
            ClassLabel::CompatibleOnly
        } else if self.is_sat() {
            ClassLabel::Sat
        } else if self.is_nonweak_exception() {
            ClassLabel::NonweakGSat
        } else {
            ClassLabel::WeakSat
        }
    }

    pub fn index_sets(&self) -> IndexSets {
        let rs = self.rs;
        let a = rs.cartan();
        let n = rs.rank();
        let dec = self.dec;
        let i_star = dec.i_star();
        let i_diff: Vec<usize> = i_star
            .iter()
            .copied()
            .filter(|&i| dec.tau.apply(i) != i && self.theta_pairing(i) != 0)
            .collect();
        let i_diff_alt: Vec<usize> = i_star
            .iter()
            .copied()
            .filter(|&i| {
                dec.tau.apply(i) != i
                    && dec
                        .x_bracket(i)
                        .iter()
                        .any(|&j| j != i && a.a[i][j] < 0)
            })
            .collect();
        let i_ns: Vec<usize> = (0..n).filter(|&i| self.theta_pairing(i) == -2).collect();
        let i_ns_alt: Vec<usize> = dec
            .white()
            .into_iter()
            .filter(|&i| dec.tau.apply(i) == i && dec.x_check(a, i).is_empty())
            .collect();
        let i_nsf: Vec<usize> = i_ns
            .iter()
            .copied()
            .filter(|&j| i_ns.iter().all(|&i| a.a[i][j] % 2 == 0))
            .collect();
        let x_check = dec
            .white()
            .into_iter()
            .map(|i| (i, dec.x_check(a, i)))
            .collect();
        IndexSets {
            i_star,
            i_diff,
            i_diff_alt,
            i_ns,
            i_ns_alt,
            i_nsf,
            x_check,
        }
    }
}

pub fn classify(rs: &RootSystem, dec: &Decoration) -> ClassLabel {
    Analysis::new(rs, dec).classify()
}

/// Label for an arbitrary pair, including incompatible ones.
pub fn classify_pair(rs: &RootSystem, x: &[usize], tau: &DiagramAutomorphism) -> ClassLabel {
    match Decoration::new(rs, x, tau.clone()) {
        Ok(dec) => classify(rs, &dec),
        Err(_) => ClassLabel::NotCompatible,
    }
}

/// Node index sets attached to a decoration; all 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSets {
    #[serde(serialize_with = "crate::one_based::ser")]
    pub i_star: Vec<usize>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub i_diff: Vec<usize>,
    /// `I_diff` via the neighbour criterion; must equal `i_diff`.
    #[serde(serialize_with = "crate::one_based::ser")]
    pub i_diff_alt: Vec<usize>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub i_ns: Vec<usize>,
    /// `I_ns` via `tau(i) = i` and empty `X̌(i)`; must equal `i_ns`.
    #[serde(serialize_with = "crate::one_based::ser")]
    pub i_ns_alt: Vec<usize>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub i_nsf: Vec<usize>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub x_check: Vec<(usize, Vec<usize>)>,
}

impl IndexSets {
    /// Nodes of `I* \ I_diff` that are not `tau`-fixed: these tie `gamma_i = gamma_{tau(i)}`.
    fn tied(&self, dec: &Decoration) -> Vec<usize> {
        self.i_star
            .iter()
            .copied()
            .filter(|i| !self.i_diff.contains(i) && dec.tau.apply(*i) != *i)
            .collect()
    }

    /// `gamma` indexed by `I \ X`, nonzero, with `gamma_i = gamma_{tau(i)}` on `I* \ I_diff`.
    pub fn in_gamma(&self, dec: &Decoration, gamma: &[Q]) -> bool {
        let g = |i: usize| &gamma[dec.gamma_slot(i).expect("white node")];
        gamma.len() == dec.white().len()
            && gamma.iter().all(|x| *x != q(0))
            && self.tied(dec).iter().all(|&i| g(i) == g(dec.tau.apply(i)))
    }

    /// `gamma in Gamma` with `gamma_i = 1` on `I* \ I_diff`.
    pub fn in_gamma_tilde(&self, dec: &Decoration, gamma: &[Q]) -> bool {
        self.in_gamma(dec, gamma)
            && self
                .i_star
                .iter()
                .filter(|i| !self.i_diff.contains(i))
                .all(|&i| gamma[dec.gamma_slot(i).unwrap()] == q(1))
    }

    /// `sigma_i = 0` on `I* \ I_nsf`.
    pub fn in_sigma(&self, dec: &Decoration, sigma: &[Q]) -> bool {
        sigma.len() == dec.white().len()
            && self
                .i_star
                .iter()
                .filter(|i| !self.i_nsf.contains(i))
                .all(|&i| sigma[dec.gamma_slot(i).unwrap()] == q(0))
    }

    /// A tuple outside `Gamma`, if the decoration has a tied split orbit.
    pub fn gamma_violating(&self, dec: &Decoration) -> Option<Vec<Q>> {
        let i = *self.tied(dec).first()?;
        let mut g = vec![q(1); dec.white().len()];
        g[dec.gamma_slot(dec.tau.apply(i)).unwrap()] = q(2);
        Some(g)
    }
}

/// Parses a 1-based node list such as `"2,3"`; empty string means `X = ∅`.
pub fn parse_nodes(s: &str, n: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" || s.eq_ignore_ascii_case("none") {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let k: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad node '{t}'")))?;
            if k == 0 || k > n {
                return input(format!("node {k} out of range 1..={n}"));
            }
            Ok(k - 1)
        })
        .collect()
}

/// `"id"`, `"w0"` (meaning `tau_{0,I}`) or pairs `"1:2,2:1"`; unlisted nodes are fixed.
pub fn parse_tau(s: &str, rs: &RootSystem) -> Result<DiagramAutomorphism> {
    let n = rs.rank();
    let s = s.trim();
    if s.eq_ignore_ascii_case("id") {
        return Ok(DiagramAutomorphism::identity(n));
    }
    if s.eq_ignore_ascii_case("w0") {
        return rs.tau0x(&(0..n).collect::<Vec<_>>());
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for pair in s.split(',') {
        let (a, b) = pair
            .split_once(':')
            .ok_or_else(|| Error::Input(format!("bad tau pair '{pair}'")))?;
        let a = parse_nodes(a, n)?;
        let b = parse_nodes(b, n)?;
        if a.len() != 1 || b.len() != 1 {
            return input(format!("bad tau pair '{pair}'"));
        }
        perm[a[0]] = b[0];
        perm[b[0]] = a[0];
    }
    let t = DiagramAutomorphism { perm };
    if !t.preserves(rs.cartan()) {
        return input("tau does not preserve the Cartan matrix");
    }
    Ok(t)
}

/// Comma-separated rationals such as `"1,-2/3"`.
pub fn parse_gamma(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<Q>()
                .map_err(|_| Error::Input(format!("bad rational '{t}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::generate(&CartanMatrix::from_type_string(t).unwrap()).unwrap()
    }

    fn dec(r: &RootSystem, x: &[usize], perm: Option<Vec<usize>>) -> Decoration {
        let tau = perm
            .map(|perm| DiagramAutomorphism { perm })
            .unwrap_or_else(|| DiagramAutomorphism::identity(r.rank()));
        Decoration::new(r, x, tau).unwrap()
    }

    #[test]
    fn cd_counts() {
        assert_eq!(enumerate_cd(&rs("A1")).len(), 2);
        let a2 = enumerate_cd(&rs("A2"));
        assert!(a2.contains(&Decoration {
            x: vec![],
            tau: DiagramAutomorphism { perm: vec![1, 0] }
        }));
        assert!(a2.contains(&Decoration {
            x: vec![0, 1],
            tau: DiagramAutomorphism { perm: vec![1, 0] }
        }));
        assert!(!a2.iter().any(|d| d.x == vec![0] && !d.tau.is_identity()));
    }

    #[test]
    fn cd_matches_brute_force_a3() {
        let r = rs("A3");
        let auts = r.cartan().automorphism_group();
        let mut brute = 0;
        for mask in 0..8u32 {
            let x: Vec<usize> = (0..3).filter(|&i| mask >> i & 1 == 1).collect();
            // tau_0X computed independently from -w_X via the Weyl group action
            let wx = r.longest_element(&x);
            for t in &auts {
                let inv = t.compose(t).is_identity();
                let stable = x.iter().all(|&i| x.contains(&t.apply(i)));
                let agrees = x.iter().all(|&i| {
                    let img = wx.apply(&simple_root(3, i));
                    img.iter().map(|c| -c).collect::<Vec<_>>() == simple_root(3, t.apply(i))
                });
                if inv && stable && agrees {
                    brute += 1;
                }
            }
        }
        assert_eq!(enumerate_cd(&r).len(), brute);
    }

    #[test]
    fn gsat_examples() {
        let r = rs("A2");
        let d = dec(&r, &[1], None);
        let an = Analysis::new(&r, &d);
        let v = an.gsat_violation().unwrap();
        assert_eq!((v.node, v.partner), (0, 1));
        assert_eq!(an.classify(), ClassLabel::CompatibleOnly);
        for t in ["A3", "B3", "G2"] {
            let r = rs(t);
            let d = dec(&r, &[], None);
            assert!(Analysis::new(&r, &d).is_gsat());
        }
    }

    #[test]
    fn rank_two_labels() {
        let r = rs("B2");
        assert_eq!(classify(&r, &dec(&r, &[0], None)), ClassLabel::WeakSat);
        assert_eq!(classify(&r, &dec(&r, &[1], None)), ClassLabel::Sat);
        let r = rs("C2");
        assert_eq!(classify(&r, &dec(&r, &[1], None)), ClassLabel::WeakSat);
        let r = rs("G2");
        assert_eq!(classify(&r, &dec(&r, &[0], None)), ClassLabel::NonweakGSat);
        assert_eq!(classify(&r, &dec(&r, &[1], None)), ClassLabel::WeakSat);
    }

    #[test]
    fn sat_trivial_cases() {
        for t in ["A3", "B3", "C3", "D4", "G2"] {
            let r = rs(t);
            let all: Vec<usize> = (0..r.rank()).collect();
            let t0 = r.tau0x(&all).unwrap();
            assert!(Analysis::new(&r, &dec(&r, &[], None)).is_sat());
            assert!(Analysis::new(&r, &dec(&r, &all, Some(t0.perm))).is_sat());
        }
    }

    #[test]
    fn index_set_examples() {
        let r = rs("A2");
        let d = dec(&r, &[], None);
        let s = Analysis::new(&r, &d).index_sets();
        assert_eq!(s.i_ns, vec![0, 1]);
        assert!(s.i_nsf.is_empty());
        let r = rs("A1");
        let s = Analysis::new(&r, &dec(&r, &[], None)).index_sets();
        assert_eq!(s.i_nsf, vec![0]);
        let r = rs("C2");
        let s = Analysis::new(&r, &dec(&r, &[1], None)).index_sets();
        assert!(s.i_ns.is_empty());
        let r = rs("A1xA1");
        let d = dec(&r, &[], Some(vec![1, 0]));
        let an = Analysis::new(&r, &d);
        assert_eq!(an.theta_pairing(0), 0);
        let s = an.index_sets();
        assert!(s.i_diff.is_empty());
        assert!(s.in_gamma(&d, &[q(3), q(3)]));
        assert!(!s.in_gamma(&d, &[q(1), q(2)]));
        assert_eq!(s.gamma_violating(&d), Some(vec![q(1), q(2)]));
        assert!(s.in_sigma(&d, &[q(0), q(5)]));
        assert!(!s.in_sigma(&d, &[q(1), q(0)]));
    }

    #[test]
    fn parsing() {
        let r = rs("A3");
        assert_eq!(parse_nodes("1,3", 3).unwrap(), vec![0, 2]);
        assert!(parse_nodes("4", 3).is_err());
        assert_eq!(parse_tau("w0", &r).unwrap().perm, vec![2, 1, 0]);
        assert_eq!(parse_tau("1:3", &r).unwrap().perm, vec![2, 1, 0]);
        assert!(parse_tau("1:2", &r).is_err());
        assert_eq!(
            parse_gamma("1,-2/3").unwrap(),
            vec![q(1), crate::linalg::qf(-2, 3)]
        );
        let j = DecorationJson {
            type_: "B3".into(),
            x: vec![2, 3],
            tau: vec![[1, 1], [2, 2], [3, 3]],
        };
        let (r, d) = j.parse().unwrap();
        assert_eq!(d.to_json(r.cartan()), j);
    }
}
