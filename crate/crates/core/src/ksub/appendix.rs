//! Closed forms for `ad(b_i)^m (b_j)` at arbitrary `m`, compared against the
//! iterated bracket.

use serde::Serialize;

use crate::chevalley::LieAlgebra;
use crate::decorations::Decoration;
use crate::error::{input, Result};
use crate::ksub::{p_coeff, KGenerators};
use crate::linalg::{add, axpy, is_zero_vec, q, scale, sub, Q};
use crate::roots::{add_roots, is_positive, neg, simple_root, zeta_from_pairings};

#[derive(Clone, Debug, Serialize)]
pub struct AppendixReport {
    /// 1: `i in X`; 2: `i` outside `X`, `j in X`; 3: both outside `X`.
    pub lemma: u8,
    pub branch: &'static str,
    pub m: usize,
    #[serde(skip)]
    pub residual: Vec<Q>,
    pub holds: bool,
}

pub fn appendix_oracle(
    g: &LieAlgebra,
    dec: &Decoration,
    gens: &KGenerators,
    i: usize,
    j: usize,
    m: usize,
) -> Result<AppendixReport> {
    if i == j {
        return input("appendix identities need i != j");
    }
    let rs = g.root_system();
    let n = g.rank();
    let a_ij = rs.cartan().a[i][j];
    let big_m = rs.cartan().serre_degree(i, j) as i64;
    let fi = g.basis_vector(g.simple_f(i));
    let fj = g.basis_vector(g.simple_f(j));
    let th = &gens.theta;
    let th_fi = th.apply(&fi);
    let fim = g.ad_pow(&fi, m, &fj);
    let lhs = g.ad_pow(&gens.b[i], m, &gens.b[j]);
    let gamma = |k: usize| gens.gamma_of(dec, k);
    let ai = simple_root(n, i);
    let aj = simple_root(n, j);
    let wx_ai = rs.longest_element(&dec.x).apply(&ai);
    let zeta_i = q(zeta_from_pairings(&rs.two_rho_pairings(&dec.x), &ai));
    let fixed = dec.tau.apply(i) == i;
    let swap = dec.tau.apply(i) == j;
    let (lemma, branch, rhs) = if dec.in_x(i) {
        if m == 0 {
            return input("lemma for i in X needs m >= 1");
        }
        let rhs = if dec.in_x(j) {
            fim.clone()
        } else {
            add(&fim, &scale(&th.apply(&fim), &gamma(j)))
        };
        (1, if dec.in_x(j) { "j in X" } else { "j outside X" }, rhs)
    } else if dec.in_x(j) {
        if m == 0 {
            return input("lemma for j in X needs m >= 1");
        }
        let gi = gamma(i);
        let mut rhs = add(&fim, &scale(&th.apply(&fim), &gi.pow(m as i32)));
        let d = sub_roots(&sub_roots(&wx_ai, &ai), &aj);
        let plus = is_positive(&d) && rs.is_root(&d);
        let zero = d.iter().all(|&c| c == 0);
        let branch = if fixed && plus && m == 2 {
            let v = g.bracket(&th_fi, &g.bracket(&fi, &fj));
            axpy(&mut rhs, &((q(1) + &zeta_i) * &gi), &v);
            "L2 n+_X"
        } else if fixed && zero && m == 2 {
            let mut v = scale(&g.basis_vector(g.h(i)), &q(2));
            v[g.h(j)] -= q(a_ij);
            axpy(&mut rhs, &-gi.clone(), &v);
            "L2 cartan"
        } else if fixed && zero && m == 3 {
            // the second term carries gamma_i: L_3 = -3(2+a_ij) gamma_i (f_i - gamma_i theta(f_i)),
            // as forced by L_4 = [b_i, L_3]
            let v = sub(&fi, &scale(&th_fi, &gi));
            axpy(&mut rhs, &(q(-3 * (2 + a_ij)) * &gi), &v);
            "L3"
        } else if fixed && zero && m == 4 {
            let v = g.basis_vector(g.simple_e(j));
            axpy(&mut rhs, &(q(-6 * a_ij * (2 + a_ij)) * &gi * &gi), &v);
            "L4"
        } else {
            "L = 0"
        };
        (2, branch, rhs)
    } else {
        let (gi, gj) = (gamma(i), gamma(j));
        let mut rhs = add(&fim, &scale(&th.apply(&fim), &(gi.pow(m as i32) * &gj)));
        let d = sub_roots(&wx_ai, &ai);
        let plus = is_positive(&d) && rs.is_root(&d);
        let zero = d.iter().all(|&c| c == 0);
        let branch = if swap && plus && m == 1 {
            let v = g.bracket(&th_fi, &fj);
            axpy(&mut rhs, &(gi.clone() + &zeta_i * &gj), &v);
            "L1 n+_X"
        } else if swap && zero && m == 1 {
            let mut v = scale(&g.basis_vector(g.h(i)), &gj);
            v[g.h(j)] -= gi.clone();
            rhs = add(&rhs, &v);
            "L1 cartan"
        } else if swap && zero && m == 2 {
            let mut v = scale(&fi, &(gj.clone() - q(a_ij) * &gi));
            axpy(&mut v, &-(gi.clone() * (gi.clone() - q(a_ij) * &gj)), &g.basis_vector(g.simple_e(j)));
            axpy(&mut rhs, &q(2), &v);
            "L2 swap"
        } else if fixed && zero {
            for r in 1..=m / 2 {
                let c = q(p_coeff(big_m, r, m)) * gi.pow(r as i32);
                axpy(&mut rhs, &c, &g.ad_pow(&gens.b[i], m - 2 * r, &gens.b[j]));
            }
            "p-sum"
        } else {
            "L = 0"
        };
        (3, branch, rhs)
    };
    let residual = sub(&lhs, &rhs);
    Ok(AppendixReport {
        lemma,
        branch,
        m,
        holds: is_zero_vec(&residual),
        residual,
    })
}

fn sub_roots(a: &[i64], b: &[i64]) -> Vec<i64> {
    add_roots(a, &neg(b))
}
