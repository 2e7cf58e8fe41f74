//! Restricted roots, the restricted Weyl group and the five conditions
//! equivalent to the GSat property.
//!
//! Elements acting on `V^{-theta}` are compared through the key `2 w P`, where
//! `P = (1 - theta) / 2` projects onto `V^{-theta}`.

use std::collections::HashSet;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decorations::{Analysis, Decoration};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::roots::{closure_group, weyl_group_order, IntMap, RootSystem};

type Mat = Vec<Vec<Q>>;

fn to_mat(m: &IntMap) -> Mat {
    m.to_rational()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    crate::linalg::mat_mul(a, b)
}

fn ident(n: usize) -> Mat {
    (0..n)
        .map(|r| (0..n).map(|c| if r == c { q(1) } else { q(0) }).collect())
        .collect()
}

fn sub_mat(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(x, y)| crate::linalg::sub(x, y)).collect()
}

fn scale_mat(a: &Mat, c: &Q) -> Mat {
    a.iter().map(|r| crate::linalg::scale(r, c)).collect()
}

/// Restricted-root data of a decoration.
#[derive(Clone, Debug)]
pub struct RestrictedData {
    /// `P = (1 - theta)/2`, row-major in simple-root coordinates.
    pub projection: Mat,
    /// Gram matrix `(alpha_i, alpha_j) = d_i a_ij`.
    pub gram: Mat,
    /// `Phi-bar` without duplicates, in order of first appearance over `Phi+`, then negatives.
    pub roots: Vec<Vec<Q>>,
}

impl RestrictedData {
    pub fn new(rs: &RootSystem, theta: &IntMap) -> Self {
        let n = rs.rank();
        let t = to_mat(theta);
        let projection = scale_mat(&sub_mat(&ident(n), &t), &Q::new(1.into(), 2.into()));
        let gram: Mat = (0..n)
            .map(|i| (0..n).map(|j| q(rs.cartan().inner(i, j))).collect())
            .collect();
        let mut roots = Vec::new();
        let mut seen = HashSet::new();
        for sign in [1i64, -1] {
            for b in rs.positive() {
                let v: Vec<Q> = b.iter().map(|c| q(sign * c)).collect();
                let bar = apply(&projection, &v);
                if !crate::linalg::is_zero_vec(&bar) && seen.insert(bar.clone()) {
                    roots.push(bar);
                }
            }
        }
        RestrictedData {
            projection,
            gram,
            roots,
        }
    }

    pub fn bar(&self, v: &[Q]) -> Vec<Q> {
        apply(&self.projection, v)
    }

    pub fn inner(&self, u: &[Q], v: &[Q]) -> Q {
        let gv = apply(&self.gram, v);
        u.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    /// Orthogonal reflection in `a` as a full matrix on `V`.
    pub fn reflection(&self, a: &[Q]) -> Mat {
        let n = a.len();
        let aa = self.inner(a, a);
        let mut m = ident(n);
        // m e_k = e_k - 2 (e_k, a)/(a, a) a
        let ga = apply(&self.gram, a);
        for k in 0..n {
            let c = &ga[k] * q(2) / &aa;
            for r in 0..n {
                m[r][k] -= &c * &a[r];
            }
        }
        m
    }

    /// Key `2 M P` of the restriction of `M` to `V^{-theta}`.
    pub fn key(&self, m: &Mat) -> Mat {
        scale_mat(&mul(m, &self.projection), &q(2))
    }

    /// Whether `Phi-bar` is a (possibly non-reduced or empty) root system.
    pub fn is_root_system(&self) -> bool {
        let set: HashSet<&Vec<Q>> = self.roots.iter().collect();
        self.roots.iter().all(|a| {
            let aa = self.inner(a, a);
            self.roots.iter().all(|b| {
                let c = q(2) * self.inner(a, b) / &aa;
                if !c.is_integer() {
                    return false;
                }
                let img: Vec<Q> = b.iter().zip(a).map(|(x, y)| x - &c * y).collect();
                set.contains(&img)
            })
        })
    }
}

fn apply(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckReport {
    /// `s-bar_i` lies in `W-bar` for all `i` in `I*`.
    pub cond_ii: bool,
    /// `s~_i = w_X w_{X[i]}` commutes with theta and restricts to `s-bar_i`.
    pub cond_iii: bool,
    /// `tau_{0,X[i]}` preserves `X`.
    pub cond_iv: bool,
    /// `W-bar` equals the group generated by reflections in `Phi-bar`.
    pub cond_v: bool,
    /// `{s~_i}` is a Coxeter system for the group it generates.
    pub cond_vi: bool,
    pub is_restricted_root_system: bool,
    pub restricted_weyl_order: usize,
    pub restricted_root_count: usize,
    /// Orders of `s~_i s~_j`, diagonal 1; left at 1 when some `s~_i` is not an involution.
    pub coxeter_matrix: Vec<Vec<u64>>,
    pub generated_order: usize,
    /// Order of the abstract Coxeter group of `coxeter_matrix`; `None` if infinite.
    pub coxeter_order: Option<u64>,
}

impl HeckReport {
    pub fn conditions(&self) -> [bool; 5] {
        [
            self.cond_ii,
            self.cond_iii,
            self.cond_iv,
            self.cond_v,
            self.cond_vi,
        ]
    }
}

/// Evaluates the five conditions; `weyl` is the enumerated Weyl group.
pub fn heck_report(rs: &RootSystem, dec: &Decoration, weyl: &[IntMap]) -> Result<HeckReport> {
    let an = Analysis::new(rs, dec);
    let n = rs.rank();
    let rd = RestrictedData::new(rs, &an.theta);
    let p2 = scale_mat(&rd.projection, &q(2));
    let i_star = dec.i_star();

    // W-bar
    let mut wbar: HashSet<Mat> = HashSet::new();
    for w in weyl {
        let wm = to_mat(w);
        let k = mul(&wm, &p2);
        if mul(&rd.projection, &k) == k {
            wbar.insert(k);
        }
    }

    let s_bar: Vec<Mat> = i_star
        .iter()
        .map(|&i| {
            let a: Vec<Q> = rd.bar(&unit(n, i));
            rd.key(&rd.reflection(&a))
        })
        .collect();
    let cond_ii = s_bar.iter().all(|k| wbar.contains(k));

    let s_tilde: Vec<IntMap> = i_star
        .iter()
        .map(|&i| {
            let wx = rs.longest_element(&dec.x).map;
            let wxi = rs.longest_element(&dec.x_bracket(i)).map;
            wx.compose(&wxi)
        })
        .collect();
    let cond_iii = s_tilde.iter().zip(&s_bar).all(|(s, sb)| {
        s.compose(&an.theta) == an.theta.compose(s) && rd.key(&to_mat(s)) == *sb
    });

    let cond_iv = i_star.iter().all(|&i| {
        let t = rs.tau0x(&dec.x_bracket(i)).expect("finite type");
        dec.x.iter().all(|&j| dec.in_x(t.apply(j)))
    });

    // group generated by reflections in restricted roots, capped just above |W-bar|
    let mut dirs: Vec<Mat> = Vec::new();
    let mut dir_seen = HashSet::new();
    for a in &rd.roots {
        let k = rd.key(&rd.reflection(a));
        if dir_seen.insert(k.clone()) {
            dirs.push(k);
        }
    }
    let cap = wbar.len() + 1;
    let identity_key = p2.clone();
    let mut gen_set: HashSet<Mat> = HashSet::from([identity_key.clone()]);
    let mut frontier = vec![identity_key];
    let half = Q::new(1.into(), 2.into());
    while let Some(g) = frontier.pop() {
        if gen_set.len() > cap {
            break;
        }
        for r in &dirs {
            let h = scale_mat(&mul(r, &g), &half);
            if gen_set.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    let cond_v = gen_set.len() == wbar.len() && gen_set.iter().all(|k| wbar.contains(k));

    // Coxeter system test
    let involutive = s_tilde
        .iter()
        .all(|s| !s.is_identity() && s.compose(s).is_identity());
    let m = s_tilde.len();
    let mut coxeter_matrix = vec![vec![1u64; m]; m];
    let mut generated_order = 0;
    let mut coxeter_order = None;
    let mut cond_vi = false;
    if involutive {
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    coxeter_matrix[a][b] = element_order(&s_tilde[a].compose(&s_tilde[b]));
                }
            }
        }
        let cap = weyl.len();
        let group = closure_group(&s_tilde, n, cap).map_err(|e| {
            Error::Structural(format!("subgroup of W exceeds |W|: {e}"))
        })?;
        generated_order = group.len();
        coxeter_order = coxeter_group_order(&coxeter_matrix);
        cond_vi = coxeter_order == Some(generated_order as u64);
    }

    Ok(HeckReport {
        cond_ii,
        cond_iii,
        cond_iv,
        cond_v,
        cond_vi,
        is_restricted_root_system: rd.is_root_system(),
        restricted_weyl_order: wbar.len(),
        restricted_root_count: rd.roots.len(),
        coxeter_matrix,
        generated_order,
        coxeter_order,
    })
}

/// Convenience wrapper enumerating `W` first. Refuses when `|W|` exceeds
/// [`WEYL_CAP`](crate::verify::WEYL_CAP).
pub fn heck_report_standalone(rs: &RootSystem, dec: &Decoration) -> Result<HeckReport> {
    let cap = match weyl_group_order(rs.cartan()) {
        Some(o) if o <= crate::verify::WEYL_CAP => o as usize,
        o => {
            return crate::error::input(format!(
                "{}: Weyl group of order {} is too large to enumerate",
                rs.cartan().type_string(),
                o.map_or("?".into(), |o| o.to_string())
            ))
        }
    };
    let weyl = rs.enumerate_weyl_group(cap)?;
    heck_report(rs, dec, &weyl)
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

fn element_order(g: &IntMap) -> u64 {
    let mut p = g.clone();
    let mut k = 1;
    while !p.is_identity() {
        p = p.compose(g);
        k += 1;
    }
    k
}

/// Order of the Coxeter group with matrix `m` (diagonal ignored), from the
/// classification of finite Coxeter groups; `None` when infinite.
pub fn coxeter_group_order(m: &[Vec<u64>]) -> Option<u64> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut total: u64 = 1;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for b in 0..n {
                if !seen[b] && b != a && m[a][b] >= 3 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        total = total.checked_mul(irreducible_order(m, &comp)?)?;
    }
    Some(total)
}

fn irreducible_order(m: &[Vec<u64>], comp: &[usize]) -> Option<u64> {
    let fact = |k: u64| (1..=k).product::<u64>();
    let r = comp.len();
    if r == 1 {
        return Some(2);
    }
    let mut edges = Vec::new();
    for (x, &a) in comp.iter().enumerate() {
        for &b in &comp[x + 1..] {
            if m[a][b] >= 3 {
                edges.push((a, b, m[a][b]));
            }
        }
    }
    if r == 2 {
        return Some(2 * edges[0].2);
    }
    if edges.len() != r - 1 {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let big: Vec<&(usize, usize, u64)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    let n = r as u64;
    if big.is_empty() {
        match branch[..] {
            [] => return Some(fact(n + 1)),
            [c] if degree(c) == 3 => {
                let mut arms: Vec<usize> = edges
                    .iter()
                    .filter(|e| e.0 == c || e.1 == c)
                    .map(|e| arm_length(&edges, c, if e.0 == c { e.1 } else { e.0 }))
                    .collect();
                arms.sort_unstable();
                return match arms[..] {
                    [1, 1, _] => Some((1u64 << (n - 1)) * fact(n)),
                    [1, 2, 2] => Some(51_840),
                    [1, 2, 3] => Some(2_903_040),
                    [1, 2, 4] => Some(696_729_600),
                    _ => None,
                };
            }
            _ => return None,
        }
    }
    if big.len() != 1 || !branch.is_empty() {
        return None;
    }
    let (a, b, label) = *big[0];
    let at_end = degree(a) == 1 || degree(b) == 1;
    match (label, at_end, r) {
        (4, true, _) => Some((1u64 << n) * fact(n)),
        (4, false, 4) => Some(1152),
        (5, true, 3) => Some(120),
        (5, true, 4) => Some(14_400),
        _ => None,
    }
}

/// Number of vertices on the arm leaving `centre` through `first`.
fn arm_length(edges: &[(usize, usize, u64)], centre: usize, first: usize) -> usize {
    let mut prev = centre;
    let mut cur = first;
    let mut len = 1;
    loop {
        let next = edges.iter().find_map(|e| {
            if e.0 == cur && e.1 != prev {
                Some(e.1)
            } else if e.1 == cur && e.0 != prev {
                Some(e.0)
            } else {
                None
            }
        });
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
                len += 1;
            }
            None => return len,
        }
    }
}
