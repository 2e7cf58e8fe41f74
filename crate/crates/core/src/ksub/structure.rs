//! Derived subalgebra, the weak-Satake filtration, centre, Killing form and
//! the Onsager comparison.

use serde::Serialize;

use crate::chevalley::{BasisKind, LieAlgebra};
use crate::decorations::{Analysis, ClassLabel, Decoration};
use crate::error::{input, Error, Result};
use crate::ksub::{build_k, lie_closure, standard_basis, KGenerators, StandardBasis, SubalgebraBasis};
use crate::linalg::{kernel, q, rank, solve, Subspace, Q};

/// `span [a, b]` over the given spanning vectors.
pub fn bracket_span(g: &LieAlgebra, a: &[Vec<Q>], b: &[Vec<Q>]) -> Subspace {
    let mut s = Subspace::new(g.dim());
    for x in a {
        for y in b {
            s.insert(g.bracket(x, y));
        }
    }
    s
}

pub fn derived_subalgebra(g: &LieAlgebra, k: &Subspace) -> Subspace {
    bracket_span(g, k.rows(), k.rows())
}

/// Coordinates with respect to a fixed list of independent vectors.
pub struct Coordinates {
    span: Subspace,
    /// `columns[a]` = echelon coordinates of the `a`-th vector.
    p: Vec<Vec<Q>>,
}

impl Coordinates {
    pub fn new(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        let span = Subspace::spanned_by(ambient, vectors.iter());
        assert_eq!(span.dim(), vectors.len(), "vectors must be independent");
        let piv = span.pivots().to_vec();
        let p = piv
            .iter()
            .map(|&c| vectors.iter().map(|v| v[c].clone()).collect())
            .collect();
        Coordinates { span, p }
    }

    pub fn of(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.span.contains(v) {
            return None;
        }
        let c: Vec<Q> = self.span.pivots().iter().map(|&k| v[k].clone()).collect();
        solve(&self.p, &c)
    }
}

/// `c[a][b]` = coordinates of `[u_a, u_b]`.
pub fn structure_constants(g: &LieAlgebra, basis: &[Vec<Q>]) -> Option<Vec<Vec<Vec<Q>>>> {
    let co = Coordinates::new(g.dim(), basis);
    basis
        .iter()
        .map(|x| basis.iter().map(|y| co.of(&g.bracket(x, y))).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct KPrimeReport {
    pub dim_k: usize,
    pub dim_kprime: usize,
    pub codim: usize,
    /// `|I_diff| + |I_nsf|`.
    pub expected_codim: usize,
    /// `k' ⊕ span(complement) = k`, with the complement from `I_diff` and `I_nsf`.
    pub complement_ok: bool,
    /// `k'` equals the span of the standard basis minus the complement.
    pub basis_ok: bool,
    /// The bound `codim <= 1` applies to indecomposable `A` only.
    pub indecomposable: bool,
}

impl KPrimeReport {
    pub fn holds(&self) -> bool {
        self.codim == self.expected_codim && self.complement_ok && self.basis_ok && (self.codim <= 1 || !self.indecomposable)
    }
}

pub fn kprime_check(g: &LieAlgebra, dec: &Decoration, gens: &KGenerators, sb: &StandardBasis) -> KPrimeReport {
    let ix = Analysis::new(g.root_system(), dec).index_sets();
    let k = Subspace::spanned_by(g.dim(), sb.vectors.iter());
    let kp = derived_subalgebra(g, &k);
    let mut comp: Vec<Vec<Q>> = Vec::new();
    for &i in &ix.i_diff {
        let mut v = g.basis_vector(g.h(i));
        v[g.h(dec.tau.apply(i))] = q(-1);
        comp.push(v);
    }
    for &j in &ix.i_nsf {
        comp.push(gens.b[j].clone());
    }
    let mut sum = kp.clone();
    let mut direct = true;
    for v in &comp {
        direct &= sum.insert(v.clone());
    }
    let complement_ok = direct && sum.same_as(&k);
    // Prop. basis: drop h_i - h_tau(i) for i in I_diff and b_j for j in I_nsf
    let off = sb.b_offset();
    let keep: Vec<Vec<Q>> = sb
        .vectors
        .iter()
        .enumerate()
        .filter(|(a, _)| {
            let pair = *a >= sb.e_words.len() + sb.h_x.len() && *a < off;
            if pair {
                let (i, _) = sb.h_pairs[a - sb.e_words.len() - sb.h_x.len()];
                return !ix.i_diff.contains(&i);
            }
            if *a >= off {
                let w = &sb.b_words[a - off];
                return !(w.len() == 1 && ix.i_nsf.contains(&w[0]));
            }
            true
        })
        .map(|(_, v)| v.clone())
        .collect();
    let basis_ok = Subspace::spanned_by(g.dim(), keep.iter()).same_as(&kp);
    KPrimeReport {
        dim_k: k.dim(),
        dim_kprime: kp.dim(),
        codim: k.dim() - kp.dim(),
        expected_codim: ix.i_diff.len() + ix.i_nsf.len(),
        complement_ok,
        basis_ok,
        indecomposable: g.root_system().cartan().is_indecomposable(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeakReport {
    #[serde(serialize_with = "crate::one_based::ser")]
    pub node: usize,
    pub highest_root_coeff: i64,
    /// `dim k(i)_r` for `r = 0..=4`.
    pub filtration_dims: Vec<usize>,
    /// Dimensions of `k(i)`, `[k(i),k(i)]`, `[k(i),[k(i),k(i)]]`.
    pub lcs_dims: Vec<usize>,
    pub lcs_matches_filtration: bool,
    pub khat_dim: usize,
    /// `k ∩ g_{I\{i}}` equals the fixed space of `theta_gamma` there.
    pub khat_is_fixed_space: bool,
    /// `g_{I\{i}}` is `theta_gamma`-stable and `theta_gamma^2 = id` on it.
    pub theta_gamma_involutive: bool,
    pub b_i_raises: bool,
    pub khat_stable: bool,
    pub ideal: bool,
    pub splits: bool,
    pub zero_gamma_dim_match: bool,
    pub zero_gamma_graded_match: bool,
    pub zero_gamma_structure_match: bool,
}

impl WeakReport {
    pub fn holds(&self) -> bool {
        self.highest_root_coeff == 2
            && self.lcs_dims.len() == 3
            && self.lcs_dims[1] > 0
            && self.lcs_dims[2] == 0
            && self.lcs_matches_filtration
            && self.khat_is_fixed_space
            && self.theta_gamma_involutive
            && self.b_i_raises
            && self.khat_stable
            && self.ideal
            && self.splits
            && self.zero_gamma_dim_match
            && self.zero_gamma_graded_match
            && self.zero_gamma_structure_match
    }
}

/// `k(i)_r`: span of `b_w`, `w in J`, with `alpha_i`-coefficient at least `r`.
pub fn filtration(g: &LieAlgebra, sb: &StandardBasis, i: usize, r: i64) -> Subspace {
    let n = g.rank();
    let off = sb.b_offset();
    let vs: Vec<Vec<Q>> = sb
        .b_words
        .iter()
        .enumerate()
        .filter(|(_, w)| crate::ksub::word_weight(n, w)[i] >= r)
        .map(|(a, _)| sb.vectors[off + a].clone())
        .collect();
    Subspace::spanned_by(g.dim(), vs.iter())
}

fn maps_into(g: &LieAlgebra, xs: &[Vec<Q>], ys: &[Vec<Q>], target: &Subspace) -> bool {
    xs.iter().all(|x| ys.iter().all(|y| target.contains(&g.bracket(x, y))))
}

pub fn weak_structure_report(g: &LieAlgebra, dec: &Decoration, gamma: &[Q]) -> Result<WeakReport> {
    let rs = g.root_system();
    let an = Analysis::new(rs, dec);
    if an.classify() != ClassLabel::WeakSat {
        return input("weak structure needs a weak Satake diagram");
    }
    if an.non_integral_nodes().len() != 1 {
        return input("weak structure needs a unique non-integral node");
    }
    let i = an.non_integral_node().expect("weak diagrams have the node");
    let gens = KGenerators::new(g, dec, gamma, false)?;
    let k = lie_closure(g, &gens.all());
    let sb = standard_basis(g, dec, &gens, &k);
    if !sb.is_basis() {
        return Err(Error::Verification("standard basis is not a basis".into()));
    }
    let filt: Vec<Subspace> = (0..=4).map(|r| filtration(g, &sb, i, r)).collect();
    let ki = &filt[1];
    let c2 = derived_subalgebra(g, ki);
    let c3 = bracket_span(g, ki.rows(), c2.rows());
    // g_{I\{i}}
    let sub: Vec<Vec<Q>> = (0..g.dim())
        .filter(|&a| match g.kind(a) {
            BasisKind::H(k) => k != i,
            _ => g.weight(a)[i] == 0,
        })
        .map(|a| g.basis_vector(a))
        .collect();
    let gsub = Subspace::spanned_by(g.dim(), sub.iter());
    let khat = k.space.intersection(&gsub);
    let tg = g.theta_gamma(dec, gamma)?;
    let fixed = Subspace::spanned_by(g.dim(), tg.fixed_space().iter()).intersection(&gsub);
    let theta_gamma_involutive = sub.iter().all(|v| {
        let w = tg.apply(v);
        gsub.contains(&w) && tg.apply(&w) == *v
    });
    let b_i_raises = (0..4).all(|r| maps_into(g, &[gens.b[i].clone()], filt[r].rows(), &filt[r + 1]));
    let khat_stable = (1..=4).all(|r| maps_into(g, khat.rows(), filt[r].rows(), &filt[r]));
    let ideal = maps_into(g, ki.rows(), k.rows(), ki);
    let mut both = ki.clone();
    let mut direct = true;
    for v in khat.rows() {
        direct &= both.insert(v.clone());
    }
    let splits = direct && both.same_as(&k.space);

    // gamma_i -> 0
    let mut g0 = gamma.to_vec();
    g0[dec.gamma_slot(i).unwrap()] = q(0);
    let gens0 = KGenerators::new(g, dec, &g0, true)?;
    let k0 = lie_closure(g, &gens0.all());
    let sb0 = standard_basis(g, dec, &gens0, &k0);
    let dims0: Vec<usize> = (0..=4).map(|r| filtration(g, &sb0, i, r).dim()).collect();
    let dims: Vec<usize> = filt.iter().map(|s| s.dim()).collect();
    let structure_match = sb0.is_basis()
        && match (structure_constants(g, &sb.vectors), structure_constants(g, &sb0.vectors)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        };
    Ok(WeakReport {
        node: i,
        highest_root_coeff: rs.highest_root_through(i)[i],
        lcs_dims: vec![ki.dim(), c2.dim(), c3.dim()],
        lcs_matches_filtration: c2.same_as(&filt[2]) && filt[3].dim() == 0,
        filtration_dims: dims.clone(),
        khat_dim: khat.dim(),
        khat_is_fixed_space: khat.same_as(&fixed),
        theta_gamma_involutive,
        b_i_raises,
        khat_stable,
        ideal,
        splits,
        zero_gamma_dim_match: k0.dim() == k.dim(),
        zero_gamma_graded_match: dims0 == dims,
        zero_gamma_structure_match: structure_match,
    })
}

/// Centralizer of `k` in `k`.
pub fn center(g: &LieAlgebra, basis: &[Vec<Q>]) -> Subspace {
    let d = g.dim();
    let m = basis.len();
    // rows: for each u_b and coordinate t, sum_a c_a [u_a, u_b]_t = 0
    let brs: Vec<Vec<Vec<Q>>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| g.bracket(x, y)).collect())
        .collect();
    let mut rows = Vec::new();
    for b in 0..m {
        for t in 0..d {
            let row: Vec<Q> = (0..m).map(|a| brs[a][b][t].clone()).collect();
            if row.iter().any(|c| *c != q(0)) {
                rows.push(row);
            }
        }
    }
    let ker = kernel(&rows, m);
    let vs: Vec<Vec<Q>> = ker
        .iter()
        .map(|c| {
            let mut v = crate::linalg::zero_vec(d);
            for (a, ca) in c.iter().enumerate() {
                crate::linalg::axpy(&mut v, ca, &basis[a]);
            }
            v
        })
        .collect();
    Subspace::spanned_by(d, vs.iter())
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub dim_center: usize,
    pub center_labels: Vec<String>,
    /// Only for weak Satake diagrams.
    pub inside_ki2: Option<bool>,
    pub inside_j_even: Option<bool>,
    /// `dim = 1` and the generator lies in the `J_even` span.
    pub single_j_even_generator: Option<bool>,
}

pub fn center_report(g: &LieAlgebra, dec: &Decoration, sb: &StandardBasis) -> CenterReport {
    let z = center(g, &sb.vectors);
    let n = g.rank();
    let co = Coordinates::new(g.dim(), &sb.vectors);
    let center_labels = z
        .rows()
        .iter()
        .map(|v| {
            let c = co.of(v).expect("centre lies in k");
            let lead = c.iter().find(|x| **x != q(0)).cloned().unwrap_or(q(1));
            c.iter()
                .map(|x| x / &lead)
                .collect::<Vec<_>>()
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != q(0))
                .map(|(a, x)| format!("{x}*{}", sb.labels[a]))
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect();
    let an = Analysis::new(g.root_system(), dec);
    let (mut ki2, mut jev, mut single) = (None, None, None);
    let nodes = an.non_integral_nodes();
    if let (ClassLabel::WeakSat, &[i]) = (an.classify(), &nodes[..]) {
        let f2 = filtration(g, sb, i, 2);
        let off = sb.b_offset();
        let even: Vec<Vec<Q>> = sb
            .b_words
            .iter()
            .enumerate()
            .filter(|(_, w)| {
                let wt = crate::ksub::word_weight(n, w);
                dec.white().iter().all(|&k| wt[k] % 2 == 0)
            })
            .map(|(a, _)| sb.vectors[off + a].clone())
            .collect();
        let ev = Subspace::spanned_by(g.dim(), even.iter());
        let a = f2.contains_subspace(&z);
        let b = ev.contains_subspace(&z);
        ki2 = Some(a);
        jev = Some(b);
        single = Some(z.dim() == 1 && b);
    }
    CenterReport {
        dim_center: z.dim(),
        center_labels,
        inside_ki2: ki2,
        inside_j_even: jev,
        single_j_even_generator: single,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Reductivity {
    pub dim: usize,
    pub killing_form_rank: usize,
    pub is_semisimple: bool,
    pub is_reductive: bool,
}

/// Killing form of the algebra spanned by `basis` (assumed closed).
pub fn killing_rank(g: &LieAlgebra, basis: &[Vec<Q>]) -> usize {
    let m = basis.len();
    if m == 0 {
        return 0;
    }
    let c = structure_constants(g, basis).expect("basis spans a subalgebra");
    // ad(u_a)[t][b] = c[a][b][t]
    let mut kf = vec![vec![q(0); m]; m];
    for a in 0..m {
        for b in a..m {
            let mut s = q(0);
            for t in 0..m {
                for u in 0..m {
                    let x = &c[a][u][t];
                    if *x == q(0) {
                        continue;
                    }
                    s += x * &c[b][t][u];
                }
            }
            kf[a][b] = s.clone();
            kf[b][a] = s;
        }
    }
    rank(&kf, m)
}

/// Semisimple iff the Killing form is nondegenerate; reductive iff the
/// derived algebra is semisimple.
pub fn reductivity_report(g: &LieAlgebra, k: &Subspace) -> Reductivity {
    let r = killing_rank(g, k.rows());
    let d = derived_subalgebra(g, k);
    let rd = killing_rank(g, d.rows());
    Reductivity {
        dim: k.dim(),
        killing_form_rank: r,
        is_semisimple: r == k.dim(),
        is_reductive: rd == d.dim(),
    }
}

/// `k((∅, id), 1)` equals the fixed space of `omega`.
pub fn onsager_check(g: &LieAlgebra) -> Result<bool> {
    let n = g.rank();
    let dec = Decoration::new(g.root_system(), &[], crate::cartan::DiagramAutomorphism::identity(n))?;
    let k = build_k(g, &dec, &vec![q(1); n], false)?;
    let fixed = Subspace::spanned_by(g.dim(), g.chevalley_involution().fixed_space().iter());
    Ok(k.is_subalgebra && k.space.same_as(&fixed))
}

/// Rescaling by `Ad(chi)` with `chi(alpha_i) = sqrt(gamma_i)`, only when every
/// `gamma_i` is a rational square. `None` when some entry is not a square.
pub fn onsager_rescaling(g: &LieAlgebra, gamma: &[Q]) -> Result<Option<bool>> {
    let n = g.rank();
    let mut roots = Vec::new();
    for c in gamma {
        match rational_sqrt(c) {
            Some(r) => roots.push(r),
            None => return Ok(None),
        }
    }
    let dec = Decoration::new(g.root_system(), &[], crate::cartan::DiagramAutomorphism::identity(n))?;
    let k1 = build_k(g, &dec, &vec![q(1); n], false)?;
    let kg = build_k(g, &dec, gamma, false)?;
    let chi = g.character_automorphism(&roots)?;
    let img: Vec<Vec<Q>> = k1.rows().iter().map(|v| chi.apply(v)).collect();
    Ok(Some(Subspace::spanned_by(g.dim(), img.iter()).same_as(&kg.space)))
}

fn rational_sqrt(c: &Q) -> Option<Q> {
    use num::Signed;
    if c.is_negative() {
        return None;
    }
    let s = |x: &num::BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    Some(Q::new(s(c.numer())?, s(c.denom())?))
}

pub fn k_of(g: &LieAlgebra, dec: &Decoration, gamma: &[Q]) -> Result<(KGenerators, SubalgebraBasis, StandardBasis)> {
    let gens = KGenerators::new(g, dec, gamma, false)?;
    let k = lie_closure(g, &gens.all());
    let sb = standard_basis(g, dec, &gens, &k);
    Ok((gens, k, sb))
}
