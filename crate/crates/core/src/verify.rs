//! The full verification battery for one Cartan type, shared by the command
//! line and the C interface.

use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::{CartanMatrix, DiagramAutomorphism};
use crate::chevalley::LieAlgebra;
use crate::decorations::heck::{heck_report, HeckReport};
use crate::decorations::{enumerate_cd, Analysis, ClassLabel, Decoration, DecorationJson};
use crate::error::{input, Result};
use crate::ksub::appendix::appendix_oracle;
use crate::ksub::serre::serre_eval;
use crate::ksub::structure::{
    center_report, kprime_check, onsager_check, reductivity_report, weak_structure_report, CenterReport,
    KPrimeReport, WeakReport,
};
use crate::ksub::theorem::{main_theorem_report, TheoremReport};
use crate::ksub::{standard_basis, KGenerators};
use crate::linalg::{is_zero_vec, q, zero_vec, Q};
use crate::roots::{weyl_group_order, IntMap, RootSystem};

/// Weyl groups above this order are not enumerated; the restricted Weyl group
/// conditions are then skipped.
pub const WEYL_CAP: u64 = 60_000;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub x: Option<Vec<usize>>,
    pub tau: Option<DiagramAutomorphism>,
    pub gamma: Option<Vec<Q>>,
    /// Ranks up to this get the exhaustive Jacobi check; larger ones are sampled.
    pub exhaustive_jacobi_rank: usize,
    pub jacobi_samples: usize,
    pub seed: u64,
    /// Reduced words of `w_X` compared per decoration.
    pub reduced_words: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            x: None,
            tau: None,
            gamma: None,
            exhaustive_jacobi_rank: 4,
            jacobi_samples: 2000,
            seed: 0,
            reduced_words: 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn check(name: &str, passed: bool) -> Check {
    Check { name: name.into(), passed, detail: None }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaChecks {
    pub theta_automorphism: bool,
    pub theta_gamma_automorphism: bool,
    pub fixes_g_x: bool,
    pub square_is_ad_zeta: bool,
    pub reduced_words_tested: usize,
    pub reduced_words_agree: bool,
}

impl ThetaChecks {
    pub fn holds(&self) -> bool {
        self.theta_automorphism
            && self.theta_gamma_automorphism
            && self.fixes_g_x
            && self.square_is_ad_zeta
            && self.reduced_words_agree
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremRun {
    pub gamma: Vec<String>,
    pub report: TheoremReport,
    pub consistent: bool,
    /// GSat runs only: closure dimension equals the formula.
    pub dim_formula_ok: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixSummary {
    pub cases: usize,
    pub branches: Vec<String>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecorationVerification {
    pub decoration: DecorationJson,
    pub label: ClassLabel,
    pub reformulations_agree: bool,
    pub heck: Option<HeckReport>,
    /// Conditions (ii)-(vi) all equal the GSat predicate.
    pub heck_consistent: Option<bool>,
    pub theta: ThetaChecks,
    pub theorem: Vec<TheoremRun>,
    pub serre_identities_hold: bool,
    pub kprime: Option<KPrimeReport>,
    pub weak: Option<WeakReport>,
    pub center: Option<CenterReport>,
    pub appendix: Option<AppendixSummary>,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub type_: String,
    pub rank: usize,
    pub dim: usize,
    pub structural: Vec<Check>,
    pub examples: Vec<Check>,
    pub decorations: Vec<DecorationVerification>,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// `gamma_i = 2 + min(i, tau(i))`: distinct across orbits, tied within them.
pub fn generic_gamma(dec: &Decoration) -> Vec<Q> {
    dec.white()
        .iter()
        .map(|&i| q(2 + i.min(dec.tau.apply(i)) as i64))
        .collect()
}

fn gamma_strings(g: &[Q]) -> Vec<String> {
    g.iter().map(|c| c.to_string()).collect()
}

pub fn theta_checks(g: &LieAlgebra, dec: &Decoration, gamma: &[Q], words: usize) -> Result<ThetaChecks> {
    let rs = g.root_system();
    let th = g.theta(dec);
    let thg = g.theta_gamma(dec, gamma)?;
    let fixes_g_x = dec.x.iter().all(|&i| {
        let e = g.basis_vector(g.simple_e(i));
        let f = g.basis_vector(g.simple_f(i));
        th.apply(&e) == e && th.apply(&f) == f
    });
    let square_is_ad_zeta = th.compose(&th).to_rows() == g.ad_zeta(&dec.x).to_rows();
    let wx = rs.longest_element(&dec.x);
    let found = rs.reduced_words(&wx.map, words);
    let first = g.ad_w(&wx.word).to_rows();
    let reduced_words_agree = found.iter().all(|w| g.ad_w(w).to_rows() == first);
    Ok(ThetaChecks {
        theta_automorphism: th.is_automorphism(g),
        theta_gamma_automorphism: thg.is_automorphism(g),
        fixes_g_x,
        square_is_ad_zeta,
        reduced_words_tested: found.len(),
        reduced_words_agree,
    })
}

/// Lemma identities for all ordered pairs and `m = 1..=M+1`.
pub fn appendix_summary(g: &LieAlgebra, dec: &Decoration, gamma: &[Q]) -> Result<AppendixSummary> {
    let gens = KGenerators::new(g, dec, gamma, false)?;
    let n = g.rank();
    let a = g.root_system().cartan();
    let mut branches: Vec<String> = Vec::new();
    let mut failures = Vec::new();
    let mut cases = 0;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for m in 1..=a.serre_degree(i, j) + 1 {
                let r = appendix_oracle(g, dec, &gens, i, j, m)?;
                cases += 1;
                let b = format!("lemma {} {}", r.lemma, r.branch);
                if !branches.contains(&b) {
                    branches.push(b);
                }
                if !r.holds {
                    failures.push(format!("i={} j={} m={m} {}", i + 1, j + 1, r.branch));
                }
            }
        }
    }
    branches.sort();
    Ok(AppendixSummary { cases, branches, failures })
}

/// Runs every check on one decoration. `weyl` enables the restricted Weyl group conditions.
pub fn verify_decoration(
    g: &LieAlgebra,
    dec: &Decoration,
    gamma: Option<&[Q]>,
    weyl: Option<&[IntMap]>,
    words: usize,
) -> Result<DecorationVerification> {
    let rs = g.root_system();
    let an = Analysis::new(rs, dec);
    let label = an.classify();
    let gsat = label.is_gsat();
    let mut failures = Vec::new();
    let reformulations_agree = an.gsat_reformulations().iter().all(|&b| b == gsat);
    if !reformulations_agree {
        failures.push("GSat reformulations disagree".to_string());
    }
    let heck = weyl.map(|w| heck_report(rs, dec, w)).transpose()?;
    let heck_consistent = heck.as_ref().map(|h| h.conditions().iter().all(|&c| c == gsat));
    if heck_consistent == Some(false) {
        failures.push("restricted Weyl group conditions disagree with GSat".into());
    }

    let ones = vec![q(1); dec.white().len()];
    let generic = generic_gamma(dec);
    let mut gammas = match gamma {
        Some(gm) => vec![gm.to_vec()],
        None => vec![ones.clone(), generic.clone()],
    };
    if gamma.is_none() {
        if let Some(v) = an.index_sets().gamma_violating(dec) {
            gammas.push(v);
        }
    }
    let primary = gammas[0].clone();

    let theta = theta_checks(g, dec, &primary, words)?;
    if !theta.holds() {
        failures.push("theta checks failed".into());
    }

    let mut theorem = Vec::new();
    for gm in &gammas {
        let report = main_theorem_report(g, dec, gm)?;
        let consistent = report.consistent();
        if !consistent {
            failures.push(format!("conditions (i)-(iv) disagree for gamma {:?}", gamma_strings(gm)));
        }
        if !report.serre_identities_hold {
            failures.push(format!("Serre identity residual for gamma {:?}", gamma_strings(gm)));
        }
        let dim_formula_ok = (gsat && report.in_gamma).then(|| report.dim_k == report.dim_formula);
        if dim_formula_ok == Some(false) {
            failures.push("dimension formula".into());
        }
        theorem.push(TheoremRun { gamma: gamma_strings(gm), report, consistent, dim_formula_ok });
    }
    let serre_identities_hold = theorem.iter().all(|t| t.report.serre_identities_hold);

    let (mut kprime, mut weak, mut center, mut appendix) = (None, None, None, None);
    let good = theorem.iter().find(|t| t.report.cond_i);
    if let Some(run) = good {
        let gm = &gammas[theorem.iter().position(|t| t.report.cond_i).unwrap()];
        let gens = KGenerators::new(g, dec, gm, false)?;
        let kp = kprime_check(g, dec, &gens, &run.report.basis);
        if !kp.holds() {
            failures.push("derived subalgebra".into());
        }
        kprime = Some(kp);
        center = Some(center_report(g, dec, &run.report.basis));
        if label == ClassLabel::WeakSat && an.non_integral_nodes().len() == 1 {
            let w = weak_structure_report(g, dec, gm)?;
            if !w.holds() {
                failures.push("weak Satake structure".into());
            }
            weak = Some(w);
        }
        let ap_gamma = if gamma.is_some() { gm.clone() } else { generic.clone() };
        if an.index_sets().in_gamma(dec, &ap_gamma) {
            let s = appendix_summary(g, dec, &ap_gamma)?;
            failures.extend(s.failures.iter().map(|f| format!("appendix {f}")));
            appendix = Some(s);
        }
    }
    let passed = failures.is_empty();
    Ok(DecorationVerification {
        decoration: dec.to_json(rs.cartan()),
        label,
        reformulations_agree,
        heck,
        heck_consistent,
        theta,
        theorem,
        serre_identities_hold,
        kprime,
        weak,
        center,
        appendix,
        failures,
        passed,
    })
}

fn structural_checks(g: &LieAlgebra, cfg: &VerifyConfig) -> Vec<Check> {
    let n = g.rank();
    let mut out = Vec::new();
    if n <= cfg.exhaustive_jacobi_rank {
        let v = g.jacobi_violation();
        out.push(Check {
            name: "jacobi exhaustive".into(),
            passed: v.is_none(),
            detail: v.map(|(a, b, c)| format!("{} {} {}", g.label(a), g.label(b), g.label(c))),
        });
    } else {
        out.push(check("jacobi sampled", g.jacobi_sampled(cfg.jacobi_samples, cfg.seed)));
    }
    let omega = g.chevalley_involution();
    out.push(check("omega automorphism", omega.is_automorphism(g)));
    out.push(check("omega involution", omega.compose(&omega).is_identity()));
    out.push(check(
        "Ad(s_i) automorphisms",
        (0..n).all(|i| g.braid_automorphism(i).is_automorphism(g)),
    ));
    if n <= 3 {
        out.push(check("Onsager fixed points", onsager_check(g).unwrap_or(false)));
    }
    out
}

/// Checks of the two worked examples, for `C2` and `G2`.
pub fn example_checks(g: &LieAlgebra, gamma_value: &Q) -> Result<Vec<Check>> {
    let rs = g.root_system();
    let a = rs.cartan();
    let mut out = Vec::new();
    let ty = a.type_string();
    let (x, white, black) = match ty.as_str() {
        "C2" => (1usize, 0usize, 1usize),
        "G2" => (0, 1, 0),
        _ => return Ok(out),
    };
    let dec = Decoration::new(rs, &[x], DiagramAutomorphism::identity(2))?;
    let gamma = vec![gamma_value.clone()];
    let gens = KGenerators::new(g, &dec, &gamma, false)?;
    let k = crate::ksub::lie_closure(g, &gens.all());
    let sb = standard_basis(g, &dec, &gens, &k);
    let kp = kprime_check(g, &dec, &gens, &sb);
    out.push(check(&format!("{ty} example: k = k'"), kp.codim == 0 && kp.holds()));
    let bw = |w: usize| gens.b[w].clone();
    let e = g.basis_vector(g.simple_e(black));
    let h = g.basis_vector(g.h(black));
    let rel = |lhs: Vec<Q>, rhs: Vec<Q>| lhs == rhs;
    let z = zero_vec(g.dim());
    let sc = |v: &[Q], c: i64| crate::linalg::scale(v, &q(c));
    if ty == "C2" {
        out.push(check("C2 example: dim k = 6", k.dim() == 6));
        let rels = [
            rel(g.bracket(&e, &bw(white)), z.clone()),
            rel(g.bracket(&e, &bw(black)), h.clone()),
            rel(g.bracket(&h, &bw(white)), bw(white)),
            rel(g.bracket(&h, &bw(black)), sc(&bw(black), -2)),
            rel(g.bracket(&h, &e), sc(&e, 2)),
            rel(g.ad_pow(&bw(white), 3, &bw(black)), z.clone()),
            rel(g.ad_pow(&bw(black), 2, &bw(white)), z.clone()),
        ];
        out.push(check("C2 example: relations", rels.iter().all(|&b| b)));
        let w = weak_structure_report(g, &dec, &gamma)?;
        out.push(check("C2 example: Heisenberg radical", w.lcs_dims == [3, 1, 0] && w.holds()));
        let c = center_report(g, &dec, &sb);
        out.push(check("C2 example: centre", c.center_labels == ["1*b_(1,1,2)"]));
        let r = reductivity_report(g, &k.space);
        out.push(check("C2 example: not reductive", !r.is_reductive));
    } else {
        out.push(check("G2 example: dim k = 8", k.dim() == 8));
        let s = serre_eval(g, &dec, &gens, white, black)?;
        let mut expect = zero_vec(g.dim());
        expect[g.simple_e(black)] = q(-18) * gamma_value * gamma_value;
        out.push(Check {
            name: "G2 example: ad(b_2)^4(b_1) = -18 gamma_2^2 e_1".into(),
            passed: s.lhs == expect && is_zero_vec(&crate::linalg::sub(&s.lhs, &s.rhs)),
            detail: Some(s.expansion.clone()),
        });
        let rels = [
            rel(g.bracket(&e, &bw(black)), h.clone()),
            rel(g.bracket(&e, &bw(white)), z.clone()),
            rel(g.bracket(&h, &bw(black)), sc(&bw(black), -2)),
            rel(g.bracket(&h, &bw(white)), bw(white)),
            rel(g.bracket(&h, &e), sc(&e, 2)),
            rel(g.ad_pow(&bw(black), 2, &bw(white)), z.clone()),
        ];
        out.push(check("G2 example: relations", rels.iter().all(|&b| b)));
        let r = reductivity_report(g, &k.space);
        out.push(check("G2 example: Killing form nondegenerate", r.is_semisimple));
    }
    Ok(out)
}

/// Decorations selected by `cfg`: all of `CD(A)`, or the one given by `X` and `tau`.
pub fn select_decorations(rs: &RootSystem, cfg: &VerifyConfig) -> Result<Vec<Decoration>> {
    match (&cfg.x, &cfg.tau) {
        (None, None) => Ok(enumerate_cd(rs)),
        (x, tau) => {
            let x = x.clone().unwrap_or_default();
            let tau = tau.clone().unwrap_or_else(|| DiagramAutomorphism::identity(rs.rank()));
            Ok(vec![Decoration::new(rs, &x, tau)?])
        }
    }
}

/// Full battery. Runs decorations in parallel on the current rayon pool;
/// output order follows `enumerate_cd`.
pub fn verify(a: &CartanMatrix, cfg: &VerifyConfig, progress: &(dyn Fn(&str) + Sync)) -> Result<VerifyReport> {
    let rs = RootSystem::generate(a)?;
    if cfg.gamma.is_some() && cfg.x.is_none() && cfg.tau.is_none() {
        return input("--gamma needs a single decoration (--X/--tau)");
    }
    let g = LieAlgebra::build(&rs)?;
    progress(&format!("{}: dim {}", a.type_string(), g.dim()));
    let structural = structural_checks(&g, cfg);
    let examples = if cfg.x.is_none() && cfg.tau.is_none() {
        example_checks(&g, &q(2))?
    } else {
        Vec::new()
    };
    let weyl = match weyl_group_order(a) {
        Some(o) if o <= WEYL_CAP => Some(rs.enumerate_weyl_group(o as usize)?),
        _ => None,
    };
    let decs = select_decorations(&rs, cfg)?;
    let total = decs.len();
    let decorations: Vec<DecorationVerification> = decs
        .par_iter()
        .enumerate()
        .map(|(k, d)| {
            let r = verify_decoration(&g, d, cfg.gamma.as_deref(), weyl.as_deref(), cfg.reduced_words);
            progress(&format!("[{}/{total}] {d}", k + 1));
            r
        })
        .collect::<Result<_>>()?;
    let mut failures: Vec<String> = structural
        .iter()
        .chain(&examples)
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect();
    for (d, v) in decs.iter().zip(&decorations) {
        failures.extend(v.failures.iter().map(|f| format!("{d}: {f}")));
    }
    Ok(VerifyReport {
        type_: a.type_string(),
        rank: a.rank(),
        dim: g.dim(),
        passed: failures.is_empty(),
        structural,
        examples,
        decorations,
        failures,
    })
}
