//! Root systems, the Weyl group action on the root lattice, longest elements
//! of parabolic subgroups, `tau_{0,X}`, the dual Weyl vector and `zeta`.

use std::collections::{HashMap, HashSet};

use num::Integer;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanMatrix, DiagramAutomorphism};
use crate::error::{Error, Result};
use crate::linalg::{qf, Q};

/// Coefficients over the simple roots, in node order.
pub type RootVector = Vec<i64>;

pub fn simple_root(n: usize, i: usize) -> RootVector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

pub fn is_positive(beta: &[i64]) -> bool {
    beta.iter().all(|&c| c >= 0) && beta.iter().any(|&c| c > 0)
}

pub fn is_negative(beta: &[i64]) -> bool {
    beta.iter().all(|&c| c <= 0) && beta.iter().any(|&c| c < 0)
}

pub fn neg(beta: &[i64]) -> RootVector {
    beta.iter().map(|c| -c).collect()
}

pub fn add_roots(a: &[i64], b: &[i64]) -> RootVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Nodes with nonzero coefficient.
pub fn support(beta: &[i64]) -> Vec<usize> {
    (0..beta.len()).filter(|&k| beta[k] != 0).collect()
}

/// Integer linear map on the root lattice, stored by columns: `cols[k]` is the
/// image of `alpha_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMap {
    pub cols: Vec<RootVector>,
}

impl IntMap {
    pub fn identity(n: usize) -> Self {
        IntMap {
            cols: (0..n).map(|k| simple_root(n, k)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, beta: &[i64]) -> RootVector {
        let n = self.dim();
        let mut out = vec![0; n];
        for (k, &c) in beta.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(&self.cols[k]) {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &IntMap) -> IntMap {
        IntMap {
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn negate(&self) -> IntMap {
        IntMap {
            cols: self.cols.iter().map(|c| neg(c)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMap::identity(self.dim())
    }

    /// Relabelling map `alpha_k -> alpha_{sigma(k)}`.
    pub fn from_automorphism(sigma: &DiagramAutomorphism) -> IntMap {
        let n = sigma.perm.len();
        IntMap {
            cols: (0..n).map(|k| simple_root(n, sigma.apply(k))).collect(),
        }
    }

    /// Row-major rational matrix (entry `[r][c]` is coefficient `r` of the image of `alpha_c`).
    pub fn to_rational(&self) -> Vec<Vec<Q>> {
        let n = self.dim();
        (0..n)
            .map(|r| (0..n).map(|c| Q::from_integer(self.cols[c][r].into())).collect())
            .collect()
    }
}

/// A Weyl group element with the word it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    pub map: IntMap,
    /// 0-based letters; `w = s_{word[0]} s_{word[1]} ...`.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn apply(&self, beta: &[i64]) -> RootVector {
        self.map.apply(beta)
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<RootVector>,
    index: HashMap<RootVector, usize>,
}

impl RootSystem {
    /// Reflection closure of the simple roots, sorted by height, then by
    /// descending coefficient vector.
    pub fn generate(cartan: &CartanMatrix) -> Result<Self> {
        let n = cartan.rank();
        let cap = if cartan.factors().is_empty() {
            // raw matrices: no classical count available, bound by E8 per node
            120 * n.max(1)
        } else {
            cartan.factors().iter().map(|t| t.positive_root_count()).sum()
        };
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut layer: Vec<RootVector> = (0..n).map(|i| simple_root(n, i)).collect();
        seen.extend(layer.iter().cloned());
        let mut all = layer.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let p = pairing_with(cartan, beta, i);
                    if p < 0 {
                        let mut g = beta.clone();
                        g[i] -= p;
                        if seen.insert(g.clone()) {
                            next.push(g);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            if all.len() > cap {
                return Err(Error::Structural(format!(
                    "root closure exceeded the bound {cap}"
                )));
            }
            layer = next;
        }
        all.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
        let index = all.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        Ok(RootSystem {
            cartan: cartan.clone(),
            positive: all,
            index,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_index(&self, beta: &[i64]) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn is_root(&self, beta: &[i64]) -> bool {
        self.index.contains_key(beta) || self.index.contains_key(&neg(beta))
    }

    /// `beta(h_i) = sum_j c_j a_ij`.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        pairing_with(&self.cartan, beta, i)
    }

    /// `alpha(h_beta)` for a positive root `beta`, using
    /// `h_beta = sum_k c_k (d_k / d_beta) h_k`.
    pub fn coroot_pairing(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let n = self.rank();
        let num: i64 = (0..n)
            .map(|k| beta[k] * self.cartan.d[k] * self.pairing(alpha, k))
            .sum();
        let db = self.half_norm(beta);
        debug_assert_eq!(num % db, 0);
        num / db
    }

    /// `(beta, beta) / 2` in the normalization `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn half_norm(&self, beta: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta[i] * beta[j] * self.cartan.inner(i, j);
            }
        }
        s / 2
    }

    pub fn reflect(&self, i: usize, beta: &[i64]) -> RootVector {
        let mut g = beta.to_vec();
        g[i] -= self.pairing(beta, i);
        g
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let n = self.rank();
        WeylElement {
            map: IntMap {
                cols: (0..n).map(|k| self.reflect(i, &simple_root(n, k))).collect(),
            },
            word: vec![i],
        }
    }

    /// Product `s_{word[0]} ... s_{word[l-1]}`.
    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        let mut m = IntMap::identity(self.rank());
        for &i in word {
            m = m.compose(&self.simple_reflection(i).map);
        }
        WeylElement {
            map: m,
            word: word.to_vec(),
        }
    }

    pub fn highest_root(&self) -> &RootVector {
        self.positive.last().expect("nonempty root system")
    }

    /// Highest root of the component containing node `i`.
    pub fn highest_root_through(&self, i: usize) -> &RootVector {
        self.positive
            .iter()
            .rev()
            .find(|b| b[i] > 0)
            .expect("simple roots are positive")
    }

    /// Indices of the positive roots supported in `x`.
    pub fn positive_in(&self, x: &[usize]) -> Vec<usize> {
        let mut mask = vec![false; self.rank()];
        for &i in x {
            mask[i] = true;
        }
        (0..self.positive.len())
            .filter(|&k| support(&self.positive[k]).iter().all(|&i| mask[i]))
            .collect()
    }

    /// `w_X` from the greedy reduced word: append the smallest `i` in `X`
    /// with `w(alpha_i) > 0` until none is left.
    pub fn longest_element(&self, x: &[usize]) -> WeylElement {
        let n = self.rank();
        let mut sorted = x.to_vec();
        sorted.sort_unstable();
        let mut w = IntMap::identity(n);
        let mut word = Vec::new();
        while let Some(&i) = sorted.iter().find(|&&i| is_positive(&w.cols[i])) {
            w = w.compose(&self.simple_reflection(i).map);
            word.push(i);
        }
        WeylElement { map: w, word }
    }

    /// Up to `limit` distinct reduced words for `w`, by depth-first search on
    /// right descents in increasing letter order.
    pub fn reduced_words(&self, w: &IntMap, limit: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.reduced_words_rec(w, &mut suffix, limit, &mut out);
        out
    }

    fn reduced_words_rec(
        &self,
        w: &IntMap,
        suffix: &mut Vec<usize>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if w.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in 0..self.rank() {
            if is_negative(&w.cols[i]) {
                let shorter = w.compose(&self.simple_reflection(i).map);
                suffix.push(i);
                self.reduced_words_rec(&shorter, suffix, limit, out);
                suffix.pop();
                if out.len() >= limit {
                    return;
                }
            }
        }
    }

    /// Length as the number of positive roots sent to negative ones.
    pub fn length(&self, w: &IntMap) -> usize {
        self.positive
            .iter()
            .filter(|b| is_negative(&w.apply(b)))
            .count()
    }

    /// `-w_X(alpha_i) = alpha_{tau0X(i)}` on `X`, identity off `X`.
    pub fn tau0x(&self, x: &[usize]) -> Result<DiagramAutomorphism> {
        let n = self.rank();
        let wx = self.longest_element(x);
        let mut perm: Vec<usize> = (0..n).collect();
        for &i in x {
            let img = neg(&wx.map.cols[i]);
            let s = support(&img);
            if s.len() != 1 || img[s[0]] != 1 || !x.contains(&s[0]) {
                return Err(Error::Structural(format!(
                    "-w_X(alpha_{}) is not a simple root of X",
                    i + 1
                )));
            }
            perm[i] = s[0];
        }
        Ok(DiagramAutomorphism { perm })
    }

    /// `alpha_j(2 rho_X^vee)` for every node `j`: the pairing with the sum of
    /// positive coroots of `Phi_X`.
    pub fn two_rho_pairings(&self, x: &[usize]) -> Vec<i64> {
        let n = self.rank();
        let px = self.positive_in(x);
        (0..n)
            .map(|j| {
                let aj = simple_root(n, j);
                px.iter()
                    .map(|&k| self.coroot_pairing(&aj, &self.positive[k]))
                    .sum()
            })
            .collect()
    }

    /// `alpha_j(rho_X^vee)` as exact rationals.
    pub fn dual_weyl_vector(&self, x: &[usize]) -> Vec<Q> {
        self.two_rho_pairings(x)
            .into_iter()
            .map(|v| qf(v, 2))
            .collect()
    }

    /// `zeta(beta) = (-1)^{beta(2 rho_X^vee)}`.
    pub fn zeta(&self, x: &[usize], beta: &[i64]) -> i64 {
        let tr = self.two_rho_pairings(x);
        zeta_from_pairings(&tr, beta)
    }

    /// `theta = -w_X tau` on the root lattice.
    pub fn theta(&self, x: &[usize], tau: &DiagramAutomorphism) -> IntMap {
        let wx = self.longest_element(x);
        wx.map.compose(&IntMap::from_automorphism(tau)).negate()
    }

    /// Enumerates `W` as lattice maps by breadth-first search, failing beyond `cap`.
    pub fn enumerate_weyl_group(&self, cap: usize) -> Result<Vec<IntMap>> {
        let gens: Vec<IntMap> = (0..self.rank())
            .map(|i| self.simple_reflection(i).map)
            .collect();
        closure_group(&gens, self.rank(), cap)
    }
}

pub fn zeta_from_pairings(two_rho: &[i64], beta: &[i64]) -> i64 {
    let s: i64 = beta.iter().zip(two_rho).map(|(b, t)| b * t).sum();
    if s.is_even() {
        1
    } else {
        -1
    }
}

fn pairing_with(cartan: &CartanMatrix, beta: &[i64], i: usize) -> i64 {
    beta.iter().zip(&cartan.a[i]).map(|(c, a)| c * a).sum()
}

/// Group generated by integer maps, by breadth-first closure; `cap` bounds the order.
pub fn closure_group(gens: &[IntMap], n: usize, cap: usize) -> Result<Vec<IntMap>> {
    let id = IntMap::identity(n);
    let mut seen: HashSet<IntMap> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        let g = out[k].clone();
        for s in gens {
            let h = g.compose(s);
            if seen.insert(h.clone()) {
                out.push(h);
                if out.len() > cap {
                    return Err(Error::Structural(format!("group order exceeds {cap}")));
                }
            }
        }
        k += 1;
    }
    Ok(out)
}

/// Classical Weyl group orders, used as a sanity bound.
pub fn weyl_group_order(cartan: &CartanMatrix) -> Option<u64> {
    let fact = |k: u64| (1..=k).product::<u64>();
    if cartan.factors().is_empty() {
        return None;
    }
    Some(
        cartan
            .factors()
            .iter()
            .map(|t| {
                let n = t.rank as u64;
                match t.letter {
                    'A' => fact(n + 1),
                    'B' | 'C' => (1u64 << n) * fact(n),
                    'D' => (1u64 << (n - 1)) * fact(n),
                    'E' => match n {
                        6 => 51_840,
                        7 => 2_903_040,
                        _ => 696_729_600,
                    },
                    'F' => 1152,
                    _ => 12,
                }
            })
            .product(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::generate(&CartanMatrix::from_type_string(t).unwrap()).unwrap()
    }

    #[test]
    fn counts_match_classical() {
        for t in [
            "A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
            "A2xB3",
        ] {
            let c = CartanMatrix::from_type_string(t).unwrap();
            let r = RootSystem::generate(&c).unwrap();
            let expected: usize = c.factors().iter().map(|f| f.positive_root_count()).sum();
            assert_eq!(r.num_positive(), expected, "{t}");
        }
    }

    #[test]
    fn a2_roots_in_order() {
        let r = rs("A2");
        assert_eq!(r.positive(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_highest_root() {
        let r = rs("G2");
        assert_eq!(r.highest_root(), &vec![2, 3]);
        assert_eq!(r.reflect(1, &[1, 0]), vec![1, 3]);
    }

    #[test]
    fn reflections() {
        let r = rs("A2");
        assert_eq!(r.reflect(0, &[1, 0]), vec![-1, 0]);
        assert_eq!(r.reflect(0, &[0, 1]), vec![1, 1]);
        let s = r.simple_reflection(1).map;
        assert!(s.compose(&s).is_identity());
    }

    #[test]
    fn longest_elements() {
        let r = rs("A2");
        assert!(r.longest_element(&[]).map.is_identity());
        assert_eq!(r.longest_element(&[0]).map, r.simple_reflection(0).map);
        let w0 = r.longest_element(&[0, 1]);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.apply(&[1, 0]), vec![0, -1]);
        let r = rs("F4");
        let w0 = r.longest_element(&[0, 1, 2, 3]);
        assert_eq!(w0.length(), 24);
        assert_eq!(r.length(&w0.map), 24);
        assert!(w0.map.negate().is_identity());
    }

    #[test]
    fn reduced_words_agree() {
        let r = rs("B3");
        let w0 = r.longest_element(&[0, 1, 2]);
        let words = r.reduced_words(&w0.map, 5);
        assert_eq!(words.len(), 5);
        for w in &words {
            assert_eq!(w.len(), 9);
            assert_eq!(r.from_word(w).map, w0.map);
        }
    }

    #[test]
    fn tau0x_cases() {
        let r = rs("A3");
        assert!(r.tau0x(&[0]).unwrap().is_identity());
        assert_eq!(r.tau0x(&[0, 1]).unwrap().perm, vec![1, 0, 2]);
        let r = rs("D4");
        assert!(r.tau0x(&[0, 1, 2, 3]).unwrap().is_identity());
        let r = rs("D5");
        assert_eq!(r.tau0x(&[0, 1, 2, 3, 4]).unwrap().perm, vec![0, 1, 2, 4, 3]);
        let r = rs("E6");
        assert!(!r.tau0x(&[0, 1, 2, 3, 4, 5]).unwrap().is_identity());
    }

    #[test]
    fn dual_weyl_vector_singleton() {
        // Oracle: for X = {j}, alpha_i(rho_X^vee) = a_ji / 2.
        for t in ["B2", "C2", "G2", "A3", "F4"] {
            let r = rs(t);
            let n = r.rank();
            for j in 0..n {
                let v = r.dual_weyl_vector(&[j]);
                for i in 0..n {
                    let expected = if i == j {
                        qf(1, 1)
                    } else {
                        qf(r.cartan().a[j][i], 2)
                    };
                    assert_eq!(v[i], expected, "{t} j={j} i={i}");
                }
            }
        }
    }

    #[test]
    fn dual_weyl_vector_solves_cartan_system() {
        // Oracle: on X the values are 1, and 2 rho^vee = sum_k x_k h_k with
        // sum_k x_k a_kj = 2 for j in X.
        let r = rs("F4");
        let x = [1, 2, 3];
        let tr = r.two_rho_pairings(&x);
        for &j in &x {
            assert_eq!(tr[j], 2);
        }
        let ax = r.cartan().submatrix(&x);
        let at: Vec<Vec<Q>> = (0..3)
            .map(|i| (0..3).map(|j| qf(ax.a[j][i], 1)).collect())
            .collect();
        let coeffs = crate::linalg::solve(&at, &[qf(2, 1), qf(2, 1), qf(2, 1)]).unwrap();
        let outside: Q = (0..3)
            .map(|k| &coeffs[k] * qf(r.cartan().a[x[k]][0], 1))
            .sum();
        assert_eq!(outside, qf(tr[0], 1));
    }

    #[test]
    fn zeta_values() {
        let r = rs("C2");
        assert_eq!(r.zeta(&[], &[1, 0]), 1);
        assert_eq!(r.zeta(&[1], &[0, 1]), 1);
        assert_eq!(r.zeta(&[1], &[1, 0]), -1);
    }

    #[test]
    fn theta_basics() {
        let r = rs("A2");
        let id = DiagramAutomorphism::identity(2);
        assert!(r.theta(&[], &id).negate().is_identity());
        let swap = DiagramAutomorphism { perm: vec![1, 0] };
        assert_eq!(r.theta(&[], &swap).apply(&[1, 0]), vec![0, -1]);
    }

    #[test]
    fn weyl_group_orders() {
        for t in ["A3", "B3", "G2", "F4", "D4"] {
            let c = CartanMatrix::from_type_string(t).unwrap();
            let r = RootSystem::generate(&c).unwrap();
            let w = r.enumerate_weyl_group(100_000).unwrap();
            assert_eq!(w.len() as u64, weyl_group_order(&c).unwrap(), "{t}");
        }
    }
}
