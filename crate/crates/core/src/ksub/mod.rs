//! The subalgebra `k_gamma(X, tau)` of `g`: generators, Lie closure and the
//! standard basis of bracket words.
//!
//! `gamma` is always indexed by the sorted list `I \ X`. Parameters are exact
//! rationals; every verified identity is polynomial in `gamma`, so rational
//! samples exercise the same code paths as complex ones.

pub mod appendix;
pub mod pcoeff;
pub mod serre;
pub mod structure;
pub mod theorem;

use serde::Serialize;

use crate::chevalley::{LieAlgebra, LinearMap};
use crate::decorations::Decoration;
use crate::error::{input, Result};
use crate::linalg::{axpy, is_zero_vec, q, Subspace, Q};
use crate::roots::{add_roots, simple_root, RootVector};

pub use pcoeff::p_coeff;

/// Generators of `k`: `e_i` and `b_i = f_i` on `X`, `h^theta`, and
/// `b_i = f_i + gamma_i theta(f_i)` off `X`.
#[derive(Clone, Debug)]
pub struct KGenerators {
    pub gamma: Vec<Q>,
    pub theta: LinearMap,
    /// `b_i` for every node.
    pub b: Vec<Vec<Q>>,
    /// `(i, e_i)` for `i in X`.
    pub e: Vec<(usize, Vec<Q>)>,
    pub h_theta: Vec<Vec<Q>>,
}

impl KGenerators {
    /// Fails on a wrong-length `gamma`, or on a zero entry unless `allow_zero`.
    pub fn new(g: &LieAlgebra, dec: &Decoration, gamma: &[Q], allow_zero: bool) -> Result<Self> {
        let white = dec.white();
        if gamma.len() != white.len() {
            return input(format!(
                "gamma needs {} entries (one per node outside X), got {}",
                white.len(),
                gamma.len()
            ));
        }
        if !allow_zero && gamma.iter().any(|c| *c == q(0)) {
            return input("gamma entries must be nonzero");
        }
        let theta = g.theta(dec);
        let b = (0..g.rank())
            .map(|i| {
                let f = g.basis_vector(g.simple_f(i));
                match dec.gamma_slot(i) {
                    None => f,
                    Some(s) => {
                        let mut v = f.clone();
                        axpy(&mut v, &gamma[s], &theta.apply(&f));
                        v
                    }
                }
            })
            .collect();
        let e = dec
            .x
            .iter()
            .map(|&i| (i, g.basis_vector(g.simple_e(i))))
            .collect();
        Ok(KGenerators {
            gamma: gamma.to_vec(),
            theta,
            b,
            e,
            h_theta: g.h_theta_basis(dec),
        })
    }

    /// `gamma_i` for a node outside `X`.
    pub fn gamma_of(&self, dec: &Decoration, i: usize) -> Q {
        self.gamma[dec.gamma_slot(i).expect("node outside X")].clone()
    }

    pub fn all(&self) -> Vec<Vec<Q>> {
        let mut v: Vec<Vec<Q>> = self.e.iter().map(|(_, x)| x.clone()).collect();
        v.extend(self.h_theta.iter().cloned());
        v.extend(self.b.iter().cloned());
        v
    }

    /// `b_w = ad(b_{w_0}) ... ad(b_{w_{l-2}}) (b_{w_{l-1}})`.
    pub fn b_word(&self, g: &LieAlgebra, word: &[usize]) -> Vec<Q> {
        let (last, rest) = word.split_last().expect("nonempty word");
        rest.iter()
            .rev()
            .fold(self.b[*last].clone(), |v, &i| g.bracket(&self.b[i], &v))
    }
}

/// An echelonized subspace of `g`, flagged when certified closed under the bracket.
#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    pub space: Subspace,
    pub is_subalgebra: bool,
}

impl SubalgebraBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        self.space.rows()
    }
}

/// Brackets of all pairs of rows reduce to zero against the span.
pub fn is_closed(g: &LieAlgebra, space: &Subspace) -> bool {
    let rows = space.rows();
    (0..rows.len()).all(|a| {
        (a + 1..rows.len()).all(|b| space.contains(&g.bracket(&rows[a], &rows[b])))
    })
}

/// Lie subalgebra generated by `gens`: brackets with the generators until the
/// span stabilizes, then certified on all pairs.
pub fn lie_closure(g: &LieAlgebra, gens: &[Vec<Q>]) -> SubalgebraBasis {
    let mut space = Subspace::new(g.dim());
    let mut queue: Vec<Vec<Q>> = Vec::new();
    for v in gens {
        if space.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    let mut k = 0;
    while k < queue.len() {
        let v = queue[k].clone();
        k += 1;
        for u in gens {
            let w = g.bracket(u, &v);
            if !is_zero_vec(&w) && space.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    let is_subalgebra = is_closed(g, &space);
    SubalgebraBasis {
        space,
        is_subalgebra,
    }
}

/// `k_gamma(X, tau)` as a certified subalgebra.
pub fn build_k(g: &LieAlgebra, dec: &Decoration, gamma: &[Q], allow_zero: bool) -> Result<SubalgebraBasis> {
    let gens = KGenerators::new(g, dec, gamma, allow_zero)?;
    Ok(lie_closure(g, &gens.all()))
}

/// Letters in the order used to extend words: nodes outside `X`, then `X`.
fn letter_order(dec: &Decoration) -> Vec<usize> {
    let mut v = dec.white();
    v.extend(dec.x.iter().copied());
    v
}

pub fn word_weight(n: usize, word: &[usize]) -> RootVector {
    word.iter()
        .fold(vec![0; n], |acc, &i| add_roots(&acc, &simple_root(n, i)))
}

pub fn word_label(prefix: &str, word: &[usize]) -> String {
    if word.len() == 1 {
        format!("{prefix}_{}", word[0] + 1)
    } else {
        let s: Vec<String> = word.iter().map(|i| (i + 1).to_string()).collect();
        format!("{prefix}_({})", s.join(","))
    }
}

/// Words `J` with `{f_w}` a basis of `n^-`: `J_1 = I`, and `J_l` keeps, in
/// order of letter then previous word, each `(i, w)` with `w in J_{l-1}`
/// whose `f`-monomial is independent of those kept so far.
pub fn j_words(g: &LieAlgebra, dec: &Decoration) -> Vec<(Vec<usize>, Vec<Q>)> {
    let n = g.rank();
    let f: Vec<Vec<Q>> = (0..n).map(|i| g.basis_vector(g.simple_f(i))).collect();
    let mut out: Vec<(Vec<usize>, Vec<Q>)> = (0..n).map(|i| (vec![i], f[i].clone())).collect();
    let mut span = Subspace::spanned_by(g.dim(), f.iter());
    let letters = letter_order(dec);
    let mut prev = out.clone();
    while !prev.is_empty() {
        let mut next = Vec::new();
        for &i in &letters {
            for (w, fw) in &prev {
                let v = g.bracket(&f[i], fw);
                if !is_zero_vec(&v) && span.insert(v.clone()) {
                    let mut word = vec![i];
                    word.extend_from_slice(w);
                    next.push((word, v));
                }
            }
        }
        out.extend(next.iter().cloned());
        prev = next;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardBasis {
    /// `J_X`: words in `X` with `{e_w}` a basis of `n^+_X`.
    #[serde(serialize_with = "crate::one_based::ser")]
    pub e_words: Vec<Vec<usize>>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub h_x: Vec<usize>,
    /// Pairs `(i, tau(i))` with `i in I*`, `i != tau(i)`.
    #[serde(serialize_with = "crate::one_based::ser")]
    pub h_pairs: Vec<(usize, usize)>,
    #[serde(serialize_with = "crate::one_based::ser")]
    pub b_words: Vec<Vec<usize>>,
    /// All vectors, in the order of the four blocks above.
    #[serde(skip)]
    pub vectors: Vec<Vec<Q>>,
    pub labels: Vec<String>,
    /// The four blocks are linearly independent.
    pub direct: bool,
    /// Their span is `k`.
    pub spans_k: bool,
    /// `pi_{-alpha_w}(b_w) = f_w` for every `w in J`.
    pub lowest_projection: bool,
}

impl StandardBasis {
    pub fn is_basis(&self) -> bool {
        self.direct && self.spans_k
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Offset of the `b`-block within `vectors`.
    pub fn b_offset(&self) -> usize {
        self.e_words.len() + self.h_x.len() + self.h_pairs.len()
    }
}

/// The standard basis of `k`; when `dec` is not a generalized Satake diagram
/// or `gamma` is outside `Gamma`, `direct` or `spans_k` is false.
pub fn standard_basis(
    g: &LieAlgebra,
    dec: &Decoration,
    gens: &KGenerators,
    k: &SubalgebraBasis,
) -> StandardBasis {
    let n = g.rank();
    let j = j_words(g, dec);
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    let mut e_words = Vec::new();
    // e-words in X, built along the same J
    let mut e_vec: Vec<Option<Vec<Q>>> = Vec::new();
    for (w, _) in &j {
        if !w.iter().all(|&i| dec.in_x(i)) {
            e_vec.push(None);
            continue;
        }
        let v = if w.len() == 1 {
            g.basis_vector(g.simple_e(w[0]))
        } else {
            let tail = j.iter().position(|(u, _)| u[..] == w[1..]).unwrap();
            let prev = e_vec[tail].as_ref().unwrap();
            g.bracket(&g.basis_vector(g.simple_e(w[0])), prev)
        };
        e_words.push(w.clone());
        labels.push(word_label("e", w));
        vectors.push(v.clone());
        e_vec.push(Some(v));
    }
    for &i in &dec.x {
        labels.push(format!("h_{}", i + 1));
        vectors.push(g.basis_vector(g.h(i)));
    }
    let mut h_pairs = Vec::new();
    for i in dec.i_star() {
        let t = dec.tau.apply(i);
        if t != i {
            h_pairs.push((i, t));
            labels.push(format!("h_{}-h_{}", i + 1, t + 1));
            let mut v = g.basis_vector(g.h(i));
            v[g.h(t)] = q(-1);
            vectors.push(v);
        }
    }
    let mut b_vec: Vec<Vec<Q>> = Vec::new();
    let mut lowest_projection = true;
    for (w, fw) in &j {
        let v = if w.len() == 1 {
            gens.b[w[0]].clone()
        } else {
            let tail = j.iter().position(|(u, _)| u[..] == w[1..]).unwrap();
            g.bracket(&gens.b[w[0]], &b_vec[tail])
        };
        let wt: RootVector = word_weight(n, w).iter().map(|c| -c).collect();
        lowest_projection &= g.project(&v, &wt) == *fw;
        labels.push(word_label("b", w));
        vectors.push(v.clone());
        b_vec.push(v);
    }
    let span = Subspace::spanned_by(g.dim(), vectors.iter());
    StandardBasis {
        e_words,
        h_x: dec.x.clone(),
        h_pairs,
        b_words: j.into_iter().map(|(w, _)| w).collect(),
        direct: span.dim() == vectors.len(),
        spans_k: span.same_as(&k.space),
        vectors,
        labels,
        lowest_projection,
    }
}

/// `|Phi_X|/2 + |I| - |I*| + |Phi|/2`.
pub fn dimension_formula(g: &LieAlgebra, dec: &Decoration) -> usize {
    let rs = g.root_system();
    rs.positive_in(&dec.x).len() + g.rank() - dec.i_star().len() + rs.num_positive()
}

pub fn dim_check(g: &LieAlgebra, dec: &Decoration, k: &SubalgebraBasis) -> bool {
    k.dim() == dimension_formula(g, dec)
}
