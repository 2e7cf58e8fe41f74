//! The four equivalent conditions on `(X, tau, gamma)`, evaluated independently.

use num::BigInt;
use serde::Serialize;

use crate::chevalley::LieAlgebra;
use crate::decorations::{Analysis, Decoration};
use crate::error::{Error, Result};
use crate::ksub::serre::{serre_all, SerreReport};
use crate::ksub::{dimension_formula, lie_closure, standard_basis, KGenerators, StandardBasis, SubalgebraBasis};
use crate::linalg::{q, Subspace, Q};

/// A vector of `k ∩ h` outside `h^theta`.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// `"2h_i+h_j"`, `"gamma_j h_i - gamma_i h_j"`, or `"other"`.
    pub kind: String,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub nodes: Option<(usize, usize)>,
    /// Coefficients on `h_1..h_n`.
    pub h_coeffs: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub gsat: bool,
    pub in_gamma: bool,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub cond_iv: bool,
    pub dim_k: usize,
    pub dim_k_cap_h: usize,
    pub dim_h_theta: usize,
    pub dim_formula: usize,
    pub closure_certified: bool,
    pub serre_identities_hold: bool,
    #[serde(serialize_with = "crate::ksub::serre::ser_bigint")]
    pub serre_residual_max: BigInt,
    pub witness: Option<Witness>,
    pub labels: Vec<String>,
    #[serde(skip)]
    pub serre: Vec<SerreReport>,
    #[serde(skip)]
    pub k: SubalgebraBasis,
    #[serde(skip)]
    pub basis: StandardBasis,
}

impl TheoremReport {
    pub fn conditions(&self) -> [bool; 4] {
        [self.cond_i, self.cond_ii, self.cond_iii, self.cond_iv]
    }

    pub fn consistent(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&x| x == c[0])
    }
}

fn h_vector(g: &LieAlgebra, coeffs: &[(usize, Q)]) -> Vec<Q> {
    let mut v = crate::linalg::zero_vec(g.dim());
    for (i, c) in coeffs {
        v[g.h(*i)] += c.clone();
    }
    v
}

fn find_witness(g: &LieAlgebra, dec: &Decoration, gens: &KGenerators, cap: &Subspace, h_theta: &Subspace) -> Option<Witness> {
    let n = g.rank();
    let bad = |v: &[Q]| cap.contains(v) && !h_theta.contains(v);
    let render = |v: &[Q]| (0..n).map(|i| v[g.h(i)].to_string()).collect();
    for i in dec.white() {
        for j in 0..n {
            if i == j {
                continue;
            }
            let v = h_vector(g, &[(i, q(2)), (j, q(1))]);
            if dec.in_x(j) && bad(&v) {
                return Some(Witness { kind: "2h_i+h_j".into(), nodes: Some((i, j)), h_coeffs: render(&v) });
            }
            if dec.tau.apply(i) == j {
                let v = h_vector(g, &[(i, gens.gamma_of(dec, j)), (j, -gens.gamma_of(dec, i))]);
                if bad(&v) {
                    return Some(Witness {
                        kind: "gamma_j h_i - gamma_i h_j".into(),
                        nodes: Some((i, j)),
                        h_coeffs: render(&v),
                    });
                }
            }
        }
    }
    cap.rows().iter().find(|v| !h_theta.contains(v)).map(|v| Witness {
        kind: "other".into(),
        nodes: None,
        h_coeffs: render(v),
    })
}

/// Builds `k` and evaluates (i)-(iv). Errors only on bad input; the caller
/// decides what an inconsistency means.
pub fn main_theorem_report(g: &LieAlgebra, dec: &Decoration, gamma: &[Q]) -> Result<TheoremReport> {
    let rs = g.root_system();
    let gens = KGenerators::new(g, dec, gamma, false)?;
    let an = Analysis::new(rs, dec);
    let gsat = an.is_gsat();
    let in_gamma = an.index_sets().in_gamma(dec, gamma);
    let k = lie_closure(g, &gens.all());
    if !k.is_subalgebra {
        return Err(Error::Structural("closure certificate failed".into()));
    }
    let serre = serre_all(g, dec, &gens)?;
    let cond_ii = serre.iter().all(|r| r.good);
    let basis = standard_basis(g, dec, &gens, &k);
    let cond_iii = basis.is_basis();
    let h_all: Vec<Vec<Q>> = (0..g.rank()).map(|i| g.basis_vector(g.h(i))).collect();
    let h = Subspace::spanned_by(g.dim(), h_all.iter());
    let h_theta = Subspace::spanned_by(g.dim(), gens.h_theta.iter());
    let cap = k.space.intersection(&h);
    let cond_iv = cap.same_as(&h_theta);
    let witness = if cond_iv { None } else { find_witness(g, dec, &gens, &cap, &h_theta) };
    let serre_residual_max = serre.iter().map(|r| r.residual_max.clone()).max().unwrap_or_default();
    Ok(TheoremReport {
        gsat,
        in_gamma,
        cond_i: gsat && in_gamma,
        cond_ii,
        cond_iii,
        cond_iv,
        dim_k: k.dim(),
        dim_k_cap_h: cap.dim(),
        dim_h_theta: h_theta.dim(),
        dim_formula: dimension_formula(g, dec),
        closure_certified: k.is_subalgebra,
        serre_identities_hold: serre.iter().all(|r| r.holds()),
        serre_residual_max,
        witness,
        labels: basis.labels.clone(),
        serre,
        k,
        basis,
    })
}
