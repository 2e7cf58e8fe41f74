mod common;

use std::collections::BTreeSet;

use common::*;
use satake::decorations::{
    classify, enumerate_cd, parse_gamma, parse_nodes, parse_tau, Analysis, ClassLabel, Decoration,
};
use satake::linalg::q;
use satake::{DiagramAutomorphism, RootSystem};

const DECOMPOSABLE: &[&str] = &["A1xA1", "A1xG2", "A2xB2", "B2xG2", "A1xA1xA1", "A1xC3"];

fn all_types() -> Vec<String> {
    let mut v = types_up_to_rank(6);
    v.extend(DECOMPOSABLE.iter().map(|s| s.to_string()));
    v
}

#[test]
fn enumeration_matches_definition() {
    for t in all_types() {
        let r = rs(&t);
        let got: BTreeSet<(Vec<usize>, Vec<usize>)> =
            enumerate_cd(&r).into_iter().map(|d| (d.x, d.tau.perm)).collect();
        assert_eq!(got, cd_oracle(r.cartan()), "{t}");
    }
}

#[test]
fn tau0_matches_reflection_oracle() {
    for t in ["A5", "D5", "D6", "E6", "B4", "A1xA2"] {
        let r = rs(&t);
        let n = r.rank();
        for mask in 0u32..1 << n {
            let x: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            assert_eq!(r.tau0x(&x).unwrap().perm, tau0_oracle(r.cartan(), &x), "{t} {x:?}");
        }
    }
}

#[test]
fn predicates_match_oracles() {
    for t in all_types() {
        let r = rs(&t);
        let a = r.cartan();
        for d in enumerate_cd(&r) {
            let an = Analysis::new(&r, &d);
            let gs = an.is_gsat();
            assert_eq!(gs, gsat_oracle(a, &d), "{t} {d}");
            assert_eq!(an.is_sat(), sat_oracle(a, &d), "{t} {d}");
            assert!(!an.is_sat() || gs, "Sat outside GSat: {t} {d}");
            assert_eq!(an.gsat_reformulations(), [gs; 4], "{t} {d}");
            assert_eq!(an.gsat_violation().is_none(), gs, "{t} {d}");
            // theta(alpha_i)(h_i) = -1 exactly on the excluded pattern
            let minus_one = d.white().into_iter().any(|i| an.theta_pairing(i) == -1);
            assert_eq!(minus_one, !gs, "{t} {d}");
        }
    }
}

#[test]
fn labels_partition() {
    for t in all_types() {
        let r = rs(&t);
        for d in enumerate_cd(&r) {
            let an = Analysis::new(&r, &d);
            let want = if !gsat_oracle(r.cartan(), &d) {
                ClassLabel::CompatibleOnly
            } else if sat_oracle(r.cartan(), &d) {
                ClassLabel::Sat
            } else if an.is_nonweak_exception() {
                ClassLabel::NonweakGSat
            } else {
                ClassLabel::WeakSat
            };
            assert_eq!(classify(&r, &d), want, "{t} {d}");
            if want == ClassLabel::NonweakGSat {
                // only a G2 component with its long node black
                assert!(r.cartan().factors().iter().any(|f| f.to_string() == "G2"), "{t}");
            }
        }
    }
}

#[test]
fn index_sets() {
    for t in all_types() {
        let r = rs(&t);
        let indecomposable = r.cartan().is_indecomposable();
        for d in enumerate_cd(&r) {
            let an = Analysis::new(&r, &d);
            if !an.is_gsat() {
                continue;
            }
            let ix = an.index_sets();
            assert_eq!(ix.i_diff, ix.i_diff_alt, "{t} {d}");
            assert_eq!(ix.i_ns, ix.i_ns_alt, "{t} {d}");
            assert!(ix.i_nsf.iter().all(|i| ix.i_ns.contains(i)));
            assert!(ix.i_ns.iter().all(|i| ix.i_star.contains(i)));
            assert!(ix.i_diff.iter().all(|i| ix.i_star.contains(i)));
            for (i, xc) in &ix.x_check {
                let comps = components(r.cartan(), &d.x);
                let mut want: Vec<usize> = comps
                    .into_iter()
                    .filter(|c| c.iter().any(|&j| r.cartan().a[*i][j] != 0 || r.cartan().a[d.tau.apply(*i)][j] != 0))
                    .flatten()
                    .collect();
                want.sort();
                assert_eq!(xc, &want);
            }
            if indecomposable {
                assert!(ix.i_diff.len() + ix.i_nsf.len() <= 1, "{t} {d}");
            }
        }
    }
}

fn restrict(r: &RootSystem, d: &Decoration, comp: &[usize]) -> (RootSystem, Decoration) {
    let sub = RootSystem::generate(&r.cartan().submatrix(comp)).unwrap();
    let local = |i: usize| comp.iter().position(|&c| c == i).unwrap();
    let x: Vec<usize> = d.x.iter().filter(|i| comp.contains(i)).map(|&i| local(i)).collect();
    let tau = DiagramAutomorphism {
        perm: comp.iter().map(|&i| local(d.tau.apply(i))).collect(),
    };
    let dec = Decoration::new(&sub, &x, tau).unwrap();
    (sub, dec)
}

#[test]
fn gsat_and_sat_factor_over_components() {
    // components pairwise non-isomorphic, so tau preserves each
    for t in ["A1xG2", "A2xB2", "B2xG2", "A1xC3"] {
        let r = rs(t);
        let comps = r.cartan().components();
        for d in enumerate_cd(&r) {
            let an = Analysis::new(&r, &d);
            let parts: Vec<(RootSystem, Decoration)> = comps.iter().map(|c| restrict(&r, &d, c)).collect();
            let gs = parts.iter().all(|(s, e)| Analysis::new(s, e).is_gsat());
            let sat = parts.iter().all(|(s, e)| Analysis::new(s, e).is_sat());
            assert_eq!(an.is_gsat(), gs, "{t} {d}");
            assert_eq!(an.is_sat(), sat, "{t} {d}");
        }
    }
}

#[test]
fn small_examples() {
    let a1 = rs("A1");
    let decs = enumerate_cd(&a1);
    assert_eq!(decs.len(), 2);
    assert!(decs.iter().all(|d| classify(&a1, d) == ClassLabel::Sat));

    let a2 = rs("A2");
    let bad = Decoration::new(&a2, &[1], DiagramAutomorphism::identity(2)).unwrap();
    assert_eq!(classify(&a2, &bad), ClassLabel::CompatibleOnly);
    let v = Analysis::new(&a2, &bad).gsat_violation().unwrap();
    assert_eq!((v.node, v.partner), (0, 1));

    let g2 = rs("G2");
    let labels: Vec<ClassLabel> = enumerate_cd(&g2).iter().map(|d| classify(&g2, d)).collect();
    assert_eq!(labels.iter().filter(|l| matches!(l, ClassLabel::WeakSat | ClassLabel::NonweakGSat)).count(), 2);

    // sp4 weak diagram: node 1 white, node 2 black
    let c2 = rs("C2");
    let d = Decoration::new(&c2, &[1], DiagramAutomorphism::identity(2)).unwrap();
    assert_eq!(classify(&c2, &d), ClassLabel::WeakSat);
    let ix = Analysis::new(&c2, &d).index_sets();
    assert!(ix.i_ns.is_empty());
    assert_eq!(ix.x_check, vec![(0, vec![1])]);

    for t in ["A1", "A2", "A3", "A4", "A5", "A6"] {
        let r = rs(t);
        assert!(enumerate_cd(&r)
            .iter()
            .all(|d| !Analysis::new(&r, d).is_gsat() || Analysis::new(&r, d).is_sat()));
    }
}

#[test]
fn gamma_index_sets() {
    let r = rs("A3");
    let w0 = parse_tau("w0", &r).unwrap();
    let d = Decoration::new(&r, &[], w0).unwrap();
    let ix = Analysis::new(&r, &d).index_sets();
    assert!(ix.in_gamma(&d, &[q(1), q(1), q(1)]));
    assert!(!ix.in_gamma(&d, &[q(1), q(0), q(1)]));
    if let Some(bad) = ix.gamma_violating(&d) {
        assert!(!ix.in_gamma(&d, &bad));
    }
    for t in all_types() {
        let r = rs(&t);
        for d in enumerate_cd(&r) {
            let an = Analysis::new(&r, &d);
            if !an.is_gsat() {
                continue;
            }
            let ix = an.index_sets();
            let ones = vec![q(1); d.white().len()];
            assert!(ix.in_gamma(&d, &ones));
            assert!(ix.in_gamma_tilde(&d, &ones));
            assert!(ix.in_sigma(&d, &vec![q(0); d.white().len()]));
            if let Some(g) = ix.gamma_violating(&d) {
                assert!(!ix.in_gamma(&d, &g), "{t} {d}");
            }
        }
    }
}

#[test]
fn parsers() {
    let r = rs("A4");
    assert_eq!(parse_nodes("2,3", 4).unwrap(), vec![1, 2]);
    assert_eq!(parse_nodes("", 4).unwrap(), Vec::<usize>::new());
    assert!(parse_nodes("5", 4).is_err());
    assert!(parse_nodes("x", 4).is_err());
    assert_eq!(parse_tau("w0", &r).unwrap().perm, vec![3, 2, 1, 0]);
    assert_eq!(parse_tau("1:4,2:3", &r).unwrap().perm, vec![3, 2, 1, 0]);
    assert!(parse_tau("1:2", &r).is_err());
    assert_eq!(parse_gamma("1,-2/3").unwrap(), vec![q(1), satake::linalg::Q::new((-2).into(), 3.into())]);
    assert!(parse_gamma("1,abc").is_err());
}
