//! Independent oracles: root strings, GSat and Sat straight from their
//! definitions, and the printed table of non-Satake diagrams.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use num::rational::Ratio;
use satake::decorations::Decoration;
use satake::{CartanMatrix, LieAlgebra, RootSystem};

pub fn cartan(t: &str) -> CartanMatrix {
    CartanMatrix::from_type_string(t).unwrap()
}

pub fn rs(t: &str) -> RootSystem {
    RootSystem::generate(&cartan(t)).unwrap()
}

pub fn alg(t: &str) -> LieAlgebra {
    LieAlgebra::build(&rs(t)).unwrap()
}

pub fn types_up_to_rank(max: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(format!("A{n}"));
        if n >= 2 {
            out.push(format!("B{n}"));
        }
        if n >= 3 {
            out.push(format!("C{n}"));
        }
        if n >= 4 {
            out.push(format!("D{n}"));
        }
    }
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        if cartan(t).rank() <= max {
            out.push(t.into());
        }
    }
    out
}

/// `(alpha_k, alpha_l) = d_k a_kl`.
pub fn form(a: &CartanMatrix, x: &[i64], y: &[i64]) -> i64 {
    let n = a.rank();
    let mut s = 0;
    for k in 0..n {
        for l in 0..n {
            s += x[k] * y[l] * a.d[k] * a.a[k][l];
        }
    }
    s
}

/// Positive roots of the sub-diagram on `nodes` by root strings:
/// `beta + alpha_i` is a root iff `p - q > 0` where `q` is the number of
/// times `alpha_i` can be subtracted. Returns full-length coefficient vectors.
pub fn positive_roots_in(a: &CartanMatrix, nodes: &[usize]) -> Vec<Vec<i64>> {
    let n = a.rank();
    let unit = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let mut seen: HashSet<Vec<i64>> = nodes.iter().map(|&i| unit(i)).collect();
    let mut queue: VecDeque<Vec<i64>> = nodes.iter().map(|&i| unit(i)).collect();
    let mut out = Vec::new();
    while let Some(b) = queue.pop_front() {
        out.push(b.clone());
        for &i in nodes {
            let ai = unit(i);
            // q: how far down the alpha_i string from b
            let mut q = 0;
            let mut c = b.clone();
            loop {
                c[i] -= 1;
                if seen.contains(&c) {
                    q += 1;
                } else {
                    break;
                }
            }
            let pairing = 2 * form(a, &b, &ai) / form(a, &ai, &ai);
            if q - pairing > 0 {
                let mut up = b.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
    }
    out
}

/// Connected components of the sub-diagram on `nodes`.
pub fn components(a: &CartanMatrix, nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&s) = left.iter().next() {
        let mut comp = vec![s];
        left.remove(&s);
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            let nb: Vec<usize> = left.iter().copied().filter(|&v| a.a[u][v] != 0).collect();
            for v in nb {
                left.remove(&v);
                comp.push(v);
            }
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Definition of GSat: no white `i` whose neighbouring black components
/// together with `{i, tau(i)}` form a single edge white-black of type A2.
pub fn gsat_oracle(a: &CartanMatrix, dec: &Decoration) -> bool {
    let n = a.rank();
    let comps = components(a, &dec.x);
    (0..n).filter(|i| !dec.x.contains(i)).all(|i| {
        let t = dec.tau.perm[i];
        let near: Vec<usize> = comps
            .iter()
            .filter(|c| c.iter().any(|&j| a.a[i][j] != 0 || a.a[t][j] != 0))
            .flatten()
            .copied()
            .collect();
        let bad = t == i && near.len() == 1 && a.a[i][near[0]] == -1 && a.a[near[0]][i] == -1;
        !bad
    })
}

/// `alpha_i(rho_X^vee) = (1/2) sum over positive roots beta of X of 2(alpha_i,beta)/(beta,beta)`.
pub fn alpha_rho_vee(a: &CartanMatrix, x: &[usize], i: usize) -> Ratio<i64> {
    let n = a.rank();
    let mut ai = vec![0; n];
    ai[i] = 1;
    positive_roots_in(a, x)
        .iter()
        .map(|b| Ratio::new(form(a, &ai, b), form(a, b, b)))
        .sum()
}

pub fn sat_oracle(a: &CartanMatrix, dec: &Decoration) -> bool {
    (0..a.rank())
        .filter(|i| !dec.x.contains(i) && dec.tau.perm[*i] == *i)
        .all(|i| alpha_rho_vee(a, &dec.x, i).is_integer())
}

/// One entry of the printed table: 1-based `X`, swapped pairs of `tau`, marked node.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Printed {
    pub x: Vec<usize>,
    pub swaps: Vec<(usize, usize)>,
    pub node: usize,
}

fn p(x: Vec<usize>, swaps: Vec<(usize, usize)>, node: usize) -> Printed {
    Printed { x, swaps, node }
}

/// Black: odd nodes below `i` and every node above `i`.
fn alternating_black(n: usize, i: usize) -> Vec<usize> {
    let mut x: Vec<usize> = (1..i).step_by(2).collect();
    x.extend(i + 1..=n);
    x
}

/// Transcription of the printed table, 1-based.
pub fn printed_table(letter: char, n: usize) -> BTreeSet<Printed> {
    let mut s = BTreeSet::new();
    match letter {
        'A' => {}
        'B' => {
            for i in (2..=n).filter(|i| i % 2 == 0) {
                s.insert(p(alternating_black(n, i), vec![], i));
            }
        }
        'C' => {
            for i in 1..n {
                s.insert(p((i + 1..=n).collect(), vec![], i));
            }
        }
        'D' => {
            for i in (2..n).filter(|i| i % 2 == 0) {
                if n % 2 == 0 && i < n - 1 {
                    s.insert(p(alternating_black(n, i), vec![], i));
                }
                if n % 2 == 1 && i + 2 < n {
                    s.insert(p(alternating_black(n, i), vec![(n - 1, n)], i));
                }
            }
        }
        'E' => match n {
            6 => {
                s.insert(p(vec![1, 3, 4, 5, 6], vec![(1, 6), (3, 5)], 2));
            }
            7 => {
                s.insert(p(vec![2, 3, 4, 5, 7], vec![], 6));
                s.insert(p(vec![2, 3, 4, 5, 6, 7], vec![], 1));
            }
            8 => {
                s.insert(p(vec![2, 3, 4, 5, 6, 7], vec![], 1));
                s.insert(p(vec![1, 2, 3, 4, 5, 6, 7], vec![], 8));
            }
            _ => unreachable!(),
        },
        'F' => {
            s.insert(p(vec![2, 3], vec![], 4));
            s.insert(p(vec![2, 3, 4], vec![], 1));
        }
        'G' => {
            s.insert(p(vec![2], vec![], 1));
            s.insert(p(vec![1], vec![], 2));
        }
        _ => unreachable!(),
    }
    s
}

pub fn swaps_of(dec: &Decoration) -> Vec<(usize, usize)> {
    dec.tau
        .perm
        .iter()
        .enumerate()
        .filter(|(i, t)| i < *t)
        .map(|(i, t)| (i + 1, t + 1))
        .collect()
}

/// Non-integral `tau`-fixed white node, 1-based, from the oracle.
pub fn marked_node(a: &CartanMatrix, dec: &Decoration) -> Vec<usize> {
    (0..a.rank())
        .filter(|i| !dec.x.contains(i) && dec.tau.perm[*i] == *i)
        .filter(|&i| !alpha_rho_vee(a, &dec.x, i).is_integer())
        .map(|i| i + 1)
        .collect()
}

/// Positive root counts of the classical tables.
pub fn classical_positive_count(letter: char, n: usize) -> usize {
    match (letter, n) {
        ('A', n) => n * (n + 1) / 2,
        ('B' | 'C', n) => n * n,
        ('D', n) => n * (n - 1),
        ('E', 6) => 36,
        ('E', 7) => 63,
        ('E', 8) => 120,
        ('F', 4) => 24,
        ('G', 2) => 6,
        _ => unreachable!(),
    }
}

/// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
pub fn reflect(a: &CartanMatrix, i: usize, beta: &[i64]) -> Vec<i64> {
    let n = a.rank();
    let mut ai = vec![0; n];
    ai[i] = 1;
    let c = 2 * form(a, beta, &ai) / form(a, &ai, &ai);
    let mut out = beta.to_vec();
    out[i] -= c;
    out
}

/// A reduced word for `w_X`: drive `2 rho_X` to its antidominant image.
pub fn longest_word(a: &CartanMatrix, x: &[usize]) -> Vec<usize> {
    let n = a.rank();
    let mut mu = vec![0; n];
    for b in positive_roots_in(a, x) {
        for k in 0..n {
            mu[k] += b[k];
        }
    }
    let mut word = Vec::new();
    'outer: loop {
        for &i in x {
            let mut ai = vec![0; n];
            ai[i] = 1;
            if form(a, &mu, &ai) > 0 {
                mu = reflect(a, i, &mu);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word
}

pub fn apply_word(a: &CartanMatrix, word: &[usize], beta: &[i64]) -> Vec<i64> {
    word.iter().rev().fold(beta.to_vec(), |v, &i| reflect(a, i, &v))
}

/// `tau_{0,X}` on `X` from `w_X(alpha_j) = -alpha_{tau(j)}`; identity off `X`.
pub fn tau0_oracle(a: &CartanMatrix, x: &[usize]) -> Vec<usize> {
    let n = a.rank();
    let w = longest_word(a, x);
    let mut perm: Vec<usize> = (0..n).collect();
    for &j in x {
        let mut aj = vec![0; n];
        aj[j] = 1;
        let img = apply_word(a, &w, &aj);
        perm[j] = img.iter().position(|&c| c == -1).unwrap();
    }
    perm
}

/// All permutations of `0..n` preserving `a`, by brute force.
pub fn automorphisms_oracle(a: &CartanMatrix) -> Vec<Vec<usize>> {
    fn rec(a: &CartanMatrix, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = a.rank();
        let k = cur.len();
        if k == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if used[v] || a.a[v][v] != a.a[k][k] {
                continue;
            }
            // partial check keeps the search small
            if (0..k).all(|j| a.a[cur[j]][v] == a.a[j][k] && a.a[v][cur[j]] == a.a[k][j]) {
                used[v] = true;
                cur.push(v);
                rec(a, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(a, &mut Vec::new(), &mut vec![false; a.rank()], &mut out);
    out
}

/// Compatible decorations as `(X, tau)`, 0-based, from the definition.
pub fn cd_oracle(a: &CartanMatrix) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let n = a.rank();
    let autos: Vec<Vec<usize>> = automorphisms_oracle(a)
        .into_iter()
        .filter(|t| (0..n).all(|i| t[t[i]] == i))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << n {
        let x: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let t0 = tau0_oracle(a, &x);
        for t in &autos {
            if x.iter().all(|&j| t[j] == t0[j]) {
                out.insert((x.clone(), t.clone()));
            }
        }
    }
    out
}
