//! A Chevalley basis of the finite-dimensional Lie algebra `g(A)` with exact
//! structure constants, and the automorphisms built from it.
//!
//! Basis order: `e_beta` for the positive roots (in root-system order), then
//! `h_1..h_n`, then `f_beta` in the same order as the `e_beta`. Signs of the
//! structure constants come from extraspecial pairs: for every non-simple
//! positive root `xi`, with `k` the least simple index such that `xi - alpha_k`
//! is a root, `N(alpha_k, xi - alpha_k) = p + 1 > 0`. All verified identities
//! are sign-convention independent statements inside this one realization.

use std::collections::HashMap;
use std::fmt::Write as _;

use num::rational::Ratio;
use num::{One, Zero};

use crate::cartan::DiagramAutomorphism;
use crate::decorations::Decoration;
use crate::error::{input, Error, Result};
use crate::linalg::{axpy, is_zero_vec, q, zero_vec, Q};
use crate::roots::{add_roots, height, is_positive, neg, simple_root, RootSystem, RootVector};

pub type SparseVec = Vec<(usize, Q)>;

/// Which part of the triangular decomposition a basis element lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    E(usize),
    H(usize),
    F(usize),
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    /// `table[a][b] = [x_a, x_b]`, sparse with integer coefficients.
    table: Vec<Vec<Vec<(usize, i64)>>>,
    /// `N(alpha, beta)` for positive `alpha, beta` with `alpha + beta` a root.
    npos: HashMap<(usize, usize), i64>,
    /// Extraspecial pair `(k, index of xi - alpha_k)` for each non-simple positive root.
    extraspecial: Vec<Option<(usize, usize)>>,
}

impl LieAlgebra {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let pos = rs.positive();
        let np = pos.len();
        let n = rs.rank();
        let mut alg = LieAlgebra {
            rs: rs.clone(),
            table: Vec::new(),
            npos: HashMap::new(),
            extraspecial: vec![None; np],
        };
        // positive roots are sorted by height, so every decomposition of xi
        // uses roots that were already handled
        for (x, xi) in pos.iter().enumerate() {
            if height(xi) < 2 {
                continue;
            }
            let (k, b1) = (0..n)
                .find_map(|k| {
                    let mut g = xi.clone();
                    g[k] -= 1;
                    rs.positive_index(&g).map(|b| (k, b))
                })
                .ok_or_else(|| Error::Structural(format!("root {xi:?} has no decomposition")))?;
            alg.extraspecial[x] = Some((k, b1));
            let a1 = simple_root(n, k);
            let beta1 = pos[b1].clone();
            let p1 = alg.string_below(&a1, &beta1);
            let a1i = rs.positive_index(&a1).unwrap();
            alg.npos.insert((a1i, b1), p1 + 1);
            alg.npos.insert((b1, a1i), -(p1 + 1));
            for (ai, alpha) in pos.iter().enumerate() {
                let beta = crate::roots::add_roots(xi, &neg(alpha));
                let Some(bi) = rs.positive_index(&beta) else {
                    continue;
                };
                if alg.npos.contains_key(&(ai, bi)) {
                    continue;
                }
                // four-term identity on (alpha, beta, -alpha1, -beta1)
                let m_a1 = neg(&a1);
                let m_b1 = neg(&beta1);
                let t1 = Ratio::from(alg.n_general(&beta, &m_a1) * alg.n_general(alpha, &m_b1));
                let t2 = Ratio::from(alg.n_general(&m_a1, alpha) * alg.n_general(&beta, &m_b1));
                let mut s = Ratio::<i64>::zero();
                let d1 = add_roots(&beta, &m_a1);
                if !t1.is_zero() {
                    s += t1 / rs.half_norm(&d1);
                }
                let d2 = add_roots(alpha, &m_a1);
                if !t2.is_zero() {
                    s += t2 / rs.half_norm(&d2);
                }
                let val = s * rs.half_norm(xi) / (p1 + 1);
                if !val.is_integer() || val.is_zero() {
                    return Err(Error::Structural(format!(
                        "structure constant N({alpha:?},{beta:?}) = {val}"
                    )));
                }
                let v = val.to_integer();
                alg.npos.insert((ai, bi), v);
                alg.npos.insert((bi, ai), -v);
            }
        }
        alg.table = alg.make_table()?;
        Ok(alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn dim(&self) -> usize {
        2 * self.num_positive() + self.rank()
    }

    pub fn kind(&self, a: usize) -> BasisKind {
        let np = self.num_positive();
        let n = self.rank();
        if a < np {
            BasisKind::E(a)
        } else if a < np + n {
            BasisKind::H(a - np)
        } else {
            BasisKind::F(a - np - n)
        }
    }

    pub fn e(&self, k: usize) -> usize {
        k
    }

    pub fn h(&self, i: usize) -> usize {
        self.num_positive() + i
    }

    pub fn f(&self, k: usize) -> usize {
        self.num_positive() + self.rank() + k
    }

    /// Basis index of the root vector of a (signed) root.
    pub fn root_vector(&self, beta: &[i64]) -> Option<usize> {
        if is_positive(beta) {
            self.rs.positive_index(beta).map(|k| self.e(k))
        } else {
            self.rs.positive_index(&neg(beta)).map(|k| self.f(k))
        }
    }

    pub fn simple_e(&self, i: usize) -> usize {
        self.e(self.rs.positive_index(&simple_root(self.rank(), i)).unwrap())
    }

    pub fn simple_f(&self, i: usize) -> usize {
        self.f(self.rs.positive_index(&simple_root(self.rank(), i)).unwrap())
    }

    /// `Q`-degree of a basis element (zero for `h_i`).
    pub fn weight(&self, a: usize) -> RootVector {
        match self.kind(a) {
            BasisKind::E(k) => self.rs.positive()[k].clone(),
            BasisKind::H(_) => vec![0; self.rank()],
            BasisKind::F(k) => neg(&self.rs.positive()[k]),
        }
    }

    pub fn label(&self, a: usize) -> String {
        let coeffs = |k: usize| {
            self.rs.positive()[k]
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.kind(a) {
            BasisKind::E(k) => format!("e[{}]", coeffs(k)),
            BasisKind::H(i) => format!("h[{}]", i + 1),
            BasisKind::F(k) => format!("f[{}]", coeffs(k)),
        }
    }

    /// Largest `p` with `beta - p alpha` a root.
    fn string_below(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut p = 0;
        let mut g = beta.to_vec();
        loop {
            for (x, a) in g.iter_mut().zip(alpha) {
                *x -= a;
            }
            if !self.rs.is_root(&g) {
                return p;
            }
            p += 1;
        }
    }

    /// `N(x, y)` for arbitrary nonzero roots; zero when `x + y` is not a root.
    pub fn n_general(&self, x: &[i64], y: &[i64]) -> i64 {
        let s = add_roots(x, y);
        if !self.rs.is_root(&s) {
            return 0;
        }
        let (px, py) = (is_positive(x), is_positive(y));
        match (px, py) {
            (true, true) => {
                let a = self.rs.positive_index(x).unwrap();
                let b = self.rs.positive_index(y).unwrap();
                self.npos[&(a, b)]
            }
            (false, false) => -self.n_general(&neg(x), &neg(y)),
            (false, true) => -self.n_general(y, x),
            (true, false) => {
                // x + y + z = 0 gives N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y)
                let z = neg(&s);
                let (num, den) = if is_positive(&z) {
                    (self.rs.half_norm(&z) * self.n_general(&z, x), self.rs.half_norm(y))
                } else {
                    (self.rs.half_norm(&z) * self.n_general(y, &z), self.rs.half_norm(x))
                };
                debug_assert_eq!(num % den, 0);
                num / den
            }
        }
    }

    /// Structure constant table; also checks `|N(alpha,beta)| = p + 1`.
    fn make_table(&self) -> Result<Vec<Vec<Vec<(usize, i64)>>>> {
        let d = self.dim();
        let n = self.rank();
        let mut t = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in 0..d {
                let wa = self.weight(a);
                let wb = self.weight(b);
                t[a][b] = match (self.kind(a), self.kind(b)) {
                    (BasisKind::H(_), BasisKind::H(_)) => Vec::new(),
                    (BasisKind::H(i), _) => vec![(b, self.rs.pairing(&wb, i))],
                    (_, BasisKind::H(i)) => vec![(a, -self.rs.pairing(&wa, i))],
                    _ => {
                        let s = add_roots(&wa, &wb);
                        if s.iter().all(|&c| c == 0) {
                            // [e_beta, e_-beta] = h_beta
                            let (beta, sign) = if is_positive(&wa) { (&wa, 1) } else { (&wb, -1) };
                            let hb = self.rs.half_norm(beta);
                            (0..n)
                                .filter(|&k| beta[k] != 0)
                                .map(|k| {
                                    let c = beta[k] * self.rs.cartan().d[k];
                                    debug_assert_eq!(c % hb, 0);
                                    (self.h(k), sign * c / hb)
                                })
                                .collect()
                        } else if let Some(c) = self.root_vector(&s) {
                            let nv = self.n_general(&wa, &wb);
                            let p = self.string_below(&wa, &wb);
                            if nv.abs() != p + 1 {
                                return Err(Error::Structural(format!(
                                    "|N({wa:?},{wb:?})| = {} but p + 1 = {}",
                                    nv.abs(),
                                    p + 1
                                )));
                            }
                            vec![(c, nv)]
                        } else {
                            Vec::new()
                        }
                    }
                };
                t[a][b].retain(|&(_, c)| c != 0);
            }
        }
        Ok(t)
    }

    /// `[x_a, x_b]` as an integer combination of basis elements.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = zero_vec(d);
        let ys: Vec<(usize, &Q)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for &(b, yb) in &ys {
                for &(c, k) in &self.table[a][b] {
                    out[c] += xa * yb * q(k);
                }
            }
        }
        out
    }

    /// `ad(x)^m (y)`.
    pub fn ad_pow(&self, x: &[Q], m: usize, y: &[Q]) -> Vec<Q> {
        let mut v = y.to_vec();
        for _ in 0..m {
            v = self.bracket(x, &v);
        }
        v
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Q> {
        crate::linalg::unit_vec(self.dim(), a)
    }

    /// First basis triple violating the Jacobi identity, scanning `a < b < c`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let br = |a: usize, v: &[(usize, i64)], out: &mut Vec<i64>, sign: i64| {
            for &(c, k) in v {
                for &(e, l) in &self.table[a][c] {
                    out[e] += sign * k * l;
                }
            }
        };
        let mut acc = vec![0i64; d];
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    acc.iter_mut().for_each(|x| *x = 0);
                    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
                    br(a, &self.table[b][c], &mut acc, 1);
                    br(b, &self.table[c][a], &mut acc, 1);
                    br(c, &self.table[a][b], &mut acc, 1);
                    if acc.iter().any(|&x| x != 0) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Jacobi identity on `samples` random basis triples.
    pub fn jacobi_sampled(&self, samples: usize, seed: u64) -> bool {
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = self.dim();
        (0..samples).all(|_| {
            let [a, b, c] = [0; 3].map(|_| rng.random_range(0..d));
            let (x, y, z) = (self.basis_vector(a), self.basis_vector(b), self.basis_vector(c));
            let mut s = self.bracket(&x, &self.bracket(&y, &z));
            axpy(&mut s, &q(1), &self.bracket(&y, &self.bracket(&z, &x)));
            axpy(&mut s, &q(1), &self.bracket(&z, &self.bracket(&x, &y)));
            is_zero_vec(&s)
        })
    }

    /// Line-oriented dump of all nonzero brackets `[x_a, x_b]` with `a < b`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let v = &self.table[a][b];
                if v.is_empty() {
                    continue;
                }
                let terms: Vec<String> = v
                    .iter()
                    .map(|&(c, k)| format!("{k}*{}", self.label(c)))
                    .collect();
                let _ = writeln!(
                    s,
                    "bracket {} {} = {}",
                    self.label(a),
                    self.label(b),
                    terms.join(" + ")
                );
            }
        }
        s
    }

    /// Automorphism determined by the images of `e_i` and `f_i`; the other
    /// root vectors follow the extraspecial decompositions. Not checked.
    pub fn from_generators(&self, e_img: &[Vec<Q>], f_img: &[Vec<Q>]) -> LinearMap {
        let np = self.num_positive();
        let n = self.rank();
        let d = self.dim();
        let mut cols: Vec<Vec<Q>> = vec![Vec::new(); d];
        for k in 0..np {
            let (ek, fk) = (self.e(k), self.f(k));
            match self.extraspecial[k] {
                None => {
                    let i = self.rs.positive()[k].iter().position(|&c| c == 1).unwrap();
                    cols[ek] = e_img[i].clone();
                    cols[fk] = f_img[i].clone();
                }
                Some((i, b)) => {
                    // e_xi = [e_i, e_b] / N, f_xi = -[f_i, f_b] / N
                    let a1 = self.rs.positive_index(&simple_root(n, i)).unwrap();
                    let nv = q(self.npos[&(a1, b)]);
                    let v = self.bracket(&e_img[i], &cols[self.e(b)]);
                    cols[ek] = v.into_iter().map(|c| c / &nv).collect();
                    let v = self.bracket(&f_img[i], &cols[self.f(b)]);
                    cols[fk] = v.into_iter().map(|c| -c / &nv).collect();
                }
            }
        }
        for i in 0..n {
            cols[self.h(i)] = self.bracket(&e_img[i], &f_img[i]);
        }
        LinearMap::from_dense_columns(&cols)
    }

    /// `omega`: `e_i -> -f_i`, `f_i -> -e_i`, `h -> -h`.
    pub fn chevalley_involution(&self) -> LinearMap {
        let n = self.rank();
        let e: Vec<Vec<Q>> = (0..n).map(|i| self.basis_vector(self.simple_f(i)).iter().map(|c| -c).collect()).collect();
        let f: Vec<Vec<Q>> = (0..n).map(|i| self.basis_vector(self.simple_e(i)).iter().map(|c| -c).collect()).collect();
        self.from_generators(&e, &f)
    }

    /// Relabelling by a diagram automorphism: `e_i -> e_{sigma(i)}`, `f_i -> f_{sigma(i)}`.
    pub fn diagram_automorphism(&self, sigma: &DiagramAutomorphism) -> LinearMap {
        let n = self.rank();
        let e: Vec<Vec<Q>> = (0..n).map(|i| self.basis_vector(self.simple_e(sigma.apply(i)))).collect();
        let f: Vec<Vec<Q>> = (0..n).map(|i| self.basis_vector(self.simple_f(sigma.apply(i)))).collect();
        self.from_generators(&e, &f)
    }

    /// `exp(ad(c x_a))` for a root vector `x_a`, as a finite sum.
    pub fn exp_ad(&self, a: usize, c: &Q) -> LinearMap {
        let d = self.dim();
        let x: Vec<Q> = self.basis_vector(a).into_iter().map(|v| v * c).collect();
        let cols = (0..d)
            .map(|b| {
                let mut term = self.basis_vector(b);
                let mut acc = term.clone();
                let mut k = 1i64;
                loop {
                    term = self.bracket(&x, &term);
                    if is_zero_vec(&term) {
                        break;
                    }
                    assert!(k <= 4, "ad of a root vector is nilpotent of degree at most 4");
                    term.iter_mut().for_each(|t| *t /= q(k));
                    axpy(&mut acc, &q(1), &term);
                    k += 1;
                }
                acc
            })
            .collect::<Vec<_>>();
        LinearMap::from_dense_columns(&cols)
    }

    /// `Ad(s_i) = exp(ad e_i) exp(ad(-f_i)) exp(ad e_i)`.
    pub fn braid_automorphism(&self, i: usize) -> LinearMap {
        let ee = self.exp_ad(self.simple_e(i), &q(1));
        let ff = self.exp_ad(self.simple_f(i), &q(-1));
        ee.compose(&ff).compose(&ee)
    }

    /// `Ad(s_{w_0}) ... Ad(s_{w_k})`.
    pub fn ad_w(&self, word: &[usize]) -> LinearMap {
        let gens: Vec<LinearMap> = (0..self.rank()).map(|i| self.braid_automorphism(i)).collect();
        word.iter()
            .fold(LinearMap::identity(self.dim()), |m, &i| m.compose(&gens[i]))
    }

    /// `chi(beta) = prod_i chi_i^{beta_i}`.
    pub fn character_value(chi: &[Q], beta: &[i64]) -> Q {
        let mut v = Q::one();
        for (c, &k) in chi.iter().zip(beta) {
            let p = c.pow(k.unsigned_abs() as i32);
            if k >= 0 {
                v *= p;
            } else {
                v /= p;
            }
        }
        v
    }

    /// `Ad(chi)`: multiplication by `chi(beta)` on `g_beta`; `chi` by its values on simple roots.
    pub fn character_automorphism(&self, chi: &[Q]) -> Result<LinearMap> {
        if chi.len() != self.rank() {
            return input(format!("character needs {} values", self.rank()));
        }
        if chi.iter().any(|c| c.is_zero()) {
            return input("character values must be nonzero");
        }
        let cols = (0..self.dim())
            .map(|a| vec![(a, Self::character_value(chi, &self.weight(a)))])
            .collect();
        Ok(LinearMap { cols })
    }

    /// `theta = Ad(w_X) tau omega`.
    pub fn theta(&self, dec: &Decoration) -> LinearMap {
        let wx = self.rs.longest_element(&dec.x);
        self.ad_w(&wx.word)
            .compose(&self.diagram_automorphism(&dec.tau))
            .compose(&self.chevalley_involution())
    }

    /// `chi_gamma` on simple roots, with `gamma` indexed by sorted `I \ X`.
    pub fn chi_gamma(&self, dec: &Decoration, gamma: &[Q]) -> Result<Vec<Q>> {
        let white = dec.white();
        if gamma.len() != white.len() {
            return input(format!("gamma needs {} entries", white.len()));
        }
        if gamma.iter().any(|g| g.is_zero()) {
            return input("gamma entries must be nonzero");
        }
        let n = self.rank();
        let tr = self.rs.two_rho_pairings(&dec.x);
        let istar = dec.i_star();
        Ok((0..n)
            .map(|i| {
                if dec.in_x(i) {
                    q(1)
                } else if istar.contains(&i) {
                    gamma[dec.gamma_slot(i).unwrap()].clone()
                } else {
                    let z = crate::roots::zeta_from_pairings(&tr, &simple_root(n, i));
                    gamma[dec.gamma_slot(dec.tau.apply(i)).unwrap()].clone() * q(z)
                }
            })
            .collect())
    }

    /// `theta_gamma = Ad(chi_gamma) theta`.
    pub fn theta_gamma(&self, dec: &Decoration, gamma: &[Q]) -> Result<LinearMap> {
        let chi = self.chi_gamma(dec, gamma)?;
        Ok(self.character_automorphism(&chi)?.compose(&self.theta(dec)))
    }

    /// `Ad(zeta)` for `zeta(beta) = (-1)^{beta(2 rho_X^vee)}`.
    pub fn ad_zeta(&self, x: &[usize]) -> LinearMap {
        let tr = self.rs.two_rho_pairings(x);
        let chi: Vec<Q> = tr.iter().map(|&t| q(if t % 2 == 0 { 1 } else { -1 })).collect();
        self.character_automorphism(&chi).expect("values are +-1")
    }

    /// `{h_i : i in X} ∪ {h_i - h_tau(i) : i in I*, i != tau(i)}` in `g`-coordinates.
    pub fn h_theta_basis(&self, dec: &Decoration) -> Vec<Vec<Q>> {
        let mut out: Vec<Vec<Q>> = dec.x.iter().map(|&i| self.basis_vector(self.h(i))).collect();
        for i in dec.i_star() {
            let t = dec.tau.apply(i);
            if t != i {
                let mut v = self.basis_vector(self.h(i));
                v[self.h(t)] = q(-1);
                out.push(v);
            }
        }
        out
    }

    /// Projection of `v` onto the root space (or Cartan part) of degree `beta`.
    pub fn project(&self, v: &[Q], beta: &[i64]) -> Vec<Q> {
        (0..self.dim())
            .map(|a| if self.weight(a) == beta { v[a].clone() } else { Q::zero() })
            .collect()
    }
}

/// Linear endomorphism of `g`, stored by sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub cols: Vec<SparseVec>,
}

impl LinearMap {
    pub fn identity(d: usize) -> Self {
        LinearMap {
            cols: (0..d).map(|a| vec![(a, q(1))]).collect(),
        }
    }

    pub fn from_dense_columns(cols: &[Vec<Q>]) -> Self {
        LinearMap {
            cols: cols
                .iter()
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| (k, v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, a: usize) -> Vec<Q> {
        let mut v = zero_vec(self.dim());
        for (k, c) in &self.cols[a] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        let mut out = zero_vec(self.dim());
        for (a, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.cols[a] {
                out[*k] += x * c;
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let d = self.dim();
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: Vec<Q> = zero_vec(d);
                for (k, c) in col {
                    for (l, v) in &self.cols[*k] {
                        acc[*l] += c * v;
                    }
                }
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LinearMap { cols }
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearMap::identity(self.dim())
    }

    /// Rows of the dense matrix.
    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        let d = self.dim();
        let mut m = vec![zero_vec(d); d];
        for (a, col) in self.cols.iter().enumerate() {
            for (k, c) in col {
                m[*k][a] = c.clone();
            }
        }
        m
    }

    /// Fixed space `ker(M - 1)`.
    pub fn fixed_space(&self) -> Vec<Vec<Q>> {
        let mut rows = self.to_rows();
        for (k, r) in rows.iter_mut().enumerate() {
            r[k] -= q(1);
        }
        crate::linalg::kernel(&rows, self.dim())
    }

    /// First basis pair `(a, b)` with `M[x_a, x_b] != [M x_a, M x_b]`.
    pub fn automorphism_violation(&self, g: &LieAlgebra) -> Option<(usize, usize)> {
        let d = self.dim();
        let imgs: Vec<Vec<Q>> = (0..d).map(|a| self.column(a)).collect();
        for a in 0..d {
            for b in a + 1..d {
                let mut lhs = zero_vec(d);
                for &(c, k) in g.bracket_basis(a, b) {
                    axpy(&mut lhs, &q(k), &imgs[c]);
                }
                if lhs != g.bracket(&imgs[a], &imgs[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_automorphism(&self, g: &LieAlgebra) -> bool {
        self.automorphism_violation(g).is_none()
    }
}
