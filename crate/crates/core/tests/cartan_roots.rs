mod common;

use std::collections::HashSet;

use common::*;
use proptest::prelude::*;
use satake::roots::{is_positive, simple_root};
use satake::{CartanMatrix, IntMap};

const TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "A1xA1", "A2xB2", "A1xG2",
];

#[test]
fn type_strings() {
    let a = cartan("A2");
    assert_eq!(a.a, vec![vec![2, -1], vec![-1, 2]]);
    assert_eq!(a.d, vec![1, 1]);
    let g = cartan("G2");
    assert_eq!(g.a[0][1] * g.a[1][0], 3);
    assert_eq!(g.d, vec![3, 1]);
    assert_eq!(g.a[0][1], -1);
    let p = cartan("a1xa1");
    assert_eq!(p.a, vec![vec![2, 0], vec![0, 2]]);
    for bad in ["E9", "Q3", "", "A0", "D3x", "B1", "G3"] {
        assert!(CartanMatrix::from_type_string(bad).is_err(), "{bad}");
    }
}

#[test]
fn bourbaki_numbering() {
    // a_ij = alpha_j(h_i); B3 has the short root last
    let b = cartan("B3");
    assert_eq!((b.a[1][2], b.a[2][1]), (-1, -2));
    assert_eq!(b.d, vec![2, 2, 1]);
    let c = cartan("C3");
    assert_eq!((c.a[1][2], c.a[2][1]), (-2, -1));
    assert_eq!(c.d, vec![1, 1, 2]);
    let d = cartan("D4");
    assert_eq!((d.a[1][2], d.a[1][3], d.a[2][3]), (-1, -1, 0));
    let e = cartan("E6");
    assert_eq!((e.a[1][3], e.a[0][2], e.a[1][2]), (-1, -1, 0));
    let f = cartan("F4");
    assert_eq!((f.a[1][2], f.a[2][1]), (-1, -2));
}

#[test]
fn automorphism_groups() {
    assert_eq!(cartan("A2").automorphism_group().len(), 2);
    assert_eq!(cartan("G2").automorphism_group().len(), 1);
    // brute force over all 24 permutations
    let d4 = cartan("D4");
    let mut count = 0;
    let idx = [0usize, 1, 2, 3];
    for a in idx {
        for b in idx {
            for c in idx {
                for d in idx {
                    let s = [a, b, c, d];
                    if s.iter().collect::<HashSet<_>>().len() < 4 {
                        continue;
                    }
                    if (0..4).all(|i| (0..4).all(|j| d4.a[s[i]][s[j]] == d4.a[i][j])) {
                        count += 1;
                    }
                }
            }
        }
    }
    assert_eq!(count, 6);
    assert_eq!(d4.automorphism_group().len(), 6);
    assert_eq!(cartan("A1xA1").automorphism_group().len(), 2);
}

#[test]
fn components_of_types() {
    assert_eq!(cartan("A2").components().len(), 1);
    assert_eq!(cartan("A1xA1").components().len(), 2);
    assert_eq!(cartan("A3").components_of(&[0, 2]).len(), 2);
}

#[test]
fn positive_root_counts() {
    for t in types_up_to_rank(8) {
        let r = rs(&t);
        let letter = t.chars().next().unwrap();
        let n: usize = t[1..].parse().unwrap();
        assert_eq!(r.num_positive(), classical_positive_count(letter, n), "{t}");
        let oracle: HashSet<Vec<i64>> = positive_roots_in(r.cartan(), &(0..n).collect::<Vec<_>>())
            .into_iter()
            .collect();
        let got: HashSet<Vec<i64>> = r.positive().iter().cloned().collect();
        assert_eq!(got, oracle, "{t}");
    }
}

#[test]
fn highest_roots() {
    assert_eq!(rs("G2").highest_root(), &vec![2, 3]);
    assert_eq!(rs("F4").highest_root(), &vec![2, 3, 4, 2]);
    assert_eq!(rs("E8").highest_root(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
    assert_eq!(rs("B3").highest_root(), &vec![1, 2, 2]);
}

fn subset_strategy() -> impl Strategy<Value = (usize, u32)> {
    (0..TYPES.len(), any::<u32>())
}

fn subset(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetrizable(k in 0..TYPES.len()) {
        let a = cartan(TYPES[k]);
        let n = a.rank();
        for i in 0..n {
            prop_assert_eq!(a.a[i][i], 2);
            for j in 0..n {
                prop_assert_eq!(a.d[i] * a.a[i][j], a.d[j] * a.a[j][i]);
                if i != j {
                    prop_assert!(a.a[i][j] <= 0);
                    prop_assert_eq!(a.a[i][j] == 0, a.a[j][i] == 0);
                }
            }
        }
        prop_assert!(a.is_positive_definite());
    }

    #[test]
    fn automorphisms_closed(k in 0..TYPES.len()) {
        let a = cartan(TYPES[k]);
        let g = a.automorphism_group();
        let comps: Vec<HashSet<usize>> = a.components().into_iter().map(|c| c.into_iter().collect()).collect();
        for s in &g {
            for t in &g {
                prop_assert!(g.contains(&s.compose(t)));
            }
            for c in &comps {
                let img: HashSet<usize> = c.iter().map(|&i| s.apply(i)).collect();
                prop_assert!(comps.contains(&img));
            }
        }
    }

    #[test]
    fn sub_gcm_is_finite((k, mask) in subset_strategy()) {
        let a = cartan(TYPES[k]);
        let x = subset(a.rank(), mask);
        if !x.is_empty() {
            let s = a.submatrix(&x);
            prop_assert!(s.validate().is_ok());
            prop_assert!(s.is_positive_definite());
        }
    }

    #[test]
    fn positive_roots_extend_by_simple(k in 0..TYPES.len()) {
        let r = rs(TYPES[k]);
        let n = r.rank();
        for b in r.positive() {
            if b.iter().sum::<i64>() == 1 {
                continue;
            }
            let ok = (0..n).any(|i| {
                let mut c = b.clone();
                c[i] -= 1;
                is_positive(&c) && r.is_root(&c)
            });
            prop_assert!(ok);
        }
    }

    #[test]
    fn longest_element((k, mask) in subset_strategy()) {
        let r = rs(TYPES[k]);
        let n = r.rank();
        let x = subset(n, mask);
        let w = r.longest_element(&x);
        prop_assert!(w.map.compose(&w.map).is_identity());
        prop_assert_eq!(r.length(&w.map), r.positive_in(&x).len());
        prop_assert_eq!(w.length(), r.positive_in(&x).len());
        for &i in &x {
            let img = w.apply(&simple_root(n, i));
            let neg: Vec<i64> = img.iter().map(|c| -c).collect();
            let j = neg.iter().position(|&c| c == 1);
            prop_assert!(j.is_some_and(|j| x.contains(&j) && neg.iter().sum::<i64>() == 1));
        }
        for word in r.reduced_words(&w.map, 3) {
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(&r.from_word(&word).map, &w.map);
        }
    }

    #[test]
    fn theta_on_lattice(k in 0..TYPES.len(), pick in any::<prop::sample::Index>()) {
        let r = rs(TYPES[k]);
        let decs = satake::decorations::enumerate_cd(&r);
        let d = &decs[pick.index(decs.len())];
        let th = r.theta(&d.x, &d.tau);
        prop_assert!(th.compose(&th).is_identity());
        // theta(h_i - h_tau(i)) = h_i - h_tau(i) on the coroot side: coroot of theta(alpha_i)
        let n = r.rank();
        let a = r.cartan();
        for i in 0..n {
            let t = d.tau.apply(i);
            let cor = |v: &[i64]| -> Vec<num::rational::Ratio<i64>> {
                let nb = form(a, v, v);
                (0..n).map(|k| num::rational::Ratio::new(2 * v[k] * a.d[k], nb)).collect()
            };
            let lhs: Vec<_> = cor(&th.apply(&simple_root(n, i)))
                .into_iter()
                .zip(cor(&th.apply(&simple_root(n, t))))
                .map(|(p, q)| p - q)
                .collect();
            let rhs: Vec<_> = cor(&simple_root(n, i))
                .into_iter()
                .zip(cor(&simple_root(n, t)))
                .map(|(p, q)| p - q)
                .collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn intmap_identity() {
    assert!(IntMap::identity(3).is_identity());
}
