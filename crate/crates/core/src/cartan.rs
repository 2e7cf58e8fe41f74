//! Cartan matrices of finite type, symmetrizers, Dynkin components and
//! diagram automorphisms.
//!
//! Node numbering follows Bourbaki for every type except G2, where node 1 is
//! the long root (`d = [3, 1]`, `a12 = -1`, `a21 = -3`). Nodes are 0-based
//! internally and printed 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::linalg::{q, Q};

/// One indecomposable factor of a type string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub letter: char,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let letter = letter.to_ascii_uppercase();
        let ok = match letter {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return input(format!("unknown type letter '{letter}'")),
        };
        if !ok {
            return input(format!("invalid rank {rank} for type {letter}"));
        }
        Ok(SimpleType { letter, rank })
    }

    /// Number of positive roots of the classical root system.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            'A' => n * (n + 1) / 2,
            'B' | 'C' => n * n,
            'D' => n * (n - 1),
            'E' => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            'F' => 24,
            'G' => 6,
            _ => unreachable!(),
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.letter {
            'A' | 'B' | 'C' | 'F' | 'G' => (1..n).map(|k| (k - 1, k)).collect(),
            'D' => {
                let mut e: Vec<_> = (1..n - 1).map(|k| (k - 1, k)).collect();
                e.push((n - 3, n - 1));
                e
            }
            'E' => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|k| (k - 1, k)));
                e
            }
            _ => unreachable!(),
        }
    }

    fn matrix(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        let mut d = vec![1i64; n];
        match self.letter {
            'B' => {
                a[n - 1][n - 2] = -2;
                for x in d.iter_mut().take(n - 1) {
                    *x = 2;
                }
            }
            'C' => {
                a[n - 2][n - 1] = -2;
                d[n - 1] = 2;
            }
            'F' => {
                a[2][1] = -2;
                d[0] = 2;
                d[1] = 2;
            }
            'G' => {
                a[1][0] = -3;
                d[0] = 3;
            }
            _ => {}
        }
        (a, d)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Parses `TYPE RANK ("x" TYPE RANK)*`, case-insensitive, e.g. `"A2xB3"`.
pub fn parse_type_string(spec: &str) -> Result<Vec<SimpleType>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return input("empty type string");
    }
    spec.split(['x', 'X'])
        .map(|part| {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars
                .next()
                .ok_or_else(|| Error::Input(format!("malformed type string '{spec}'")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Input(format!("malformed rank in '{part}'")))?;
            SimpleType::new(letter, rank)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    /// Node labels, 1-based.
    pub nodes: Vec<usize>,
    pub a: Vec<Vec<i64>>,
    /// Symmetrizers: smallest positive integers per component, short roots get 1.
    pub d: Vec<i64>,
    #[serde(skip)]
    factors: Vec<SimpleType>,
}

impl CartanMatrix {
    pub fn from_type_string(spec: &str) -> Result<Self> {
        Ok(Self::from_factors(&parse_type_string(spec)?))
    }

    pub fn from_factors(factors: &[SimpleType]) -> Self {
        let n: usize = factors.iter().map(|t| t.rank).sum();
        let mut a = vec![vec![0i64; n]; n];
        let mut d = vec![0i64; n];
        let mut off = 0;
        for t in factors {
            let (block, dd) = t.matrix();
            for i in 0..t.rank {
                d[off + i] = dd[i];
                for j in 0..t.rank {
                    a[off + i][off + j] = block[i][j];
                }
            }
            off += t.rank;
        }
        CartanMatrix {
            nodes: (1..=n).collect(),
            a,
            d,
            factors: factors.to_vec(),
        }
    }

    /// Builds a matrix from raw entries, validating the GCM axioms,
    /// symmetrizability and positive definiteness.
    pub fn from_entries(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) || d.len() != n {
            return input("Cartan matrix must be square with one symmetrizer per node");
        }
        let c = CartanMatrix {
            nodes: (1..=n).collect(),
            a,
            d,
            factors: Vec::new(),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            if self.a[i][i] != 2 {
                return input(format!("a[{i}][{i}] != 2"));
            }
            if self.d[i] <= 0 {
                return input("symmetrizers must be positive");
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.a[i][j] > 0 || ((self.a[i][j] == 0) != (self.a[j][i] == 0)) {
                    return input(format!("entries ({i},{j}) violate the GCM axioms"));
                }
                if self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i] {
                    return input(format!("symmetrizer fails at ({i},{j})"));
                }
            }
        }
        if !self.is_positive_definite() {
            return input("Cartan matrix is not of finite type");
        }
        Ok(())
    }

    /// Sylvester's criterion on the symmetrized matrix `d_i a_ij`.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.rank();
        let b: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| q(self.d[i] * self.a[i][j])).collect())
            .collect();
        (1..=n).all(|k| {
            let minor: Vec<Vec<Q>> = b[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(minor) > q(0)
        })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// Indecomposable factors when built from a type string; empty for raw matrices.
    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn type_string(&self) -> String {
        if self.factors.is_empty() {
            return format!("rank{}", self.rank());
        }
        self.factors
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }

    /// `M_ij = 1 - a_ij` for `i != j`.
    pub fn serre_degree(&self, i: usize, j: usize) -> usize {
        (1 - self.a[i][j]) as usize
    }

    /// Symmetric bilinear form `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn inner(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    /// Connected components of the Dynkin graph, each sorted, ordered by least node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_of(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Connected components of the full subdiagram on `subset`.
    pub fn components_of(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank()];
        let mut member = vec![false; self.rank()];
        for &i in subset {
            member[i] = true;
        }
        let mut out = Vec::new();
        for &start in subset {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..self.rank() {
                    if member[j] && !seen[j] && i != j && self.a[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }

    /// `A_X = (a_ij)_{i,j in X}`, nodes relabelled in increasing order.
    pub fn submatrix(&self, subset: &[usize]) -> CartanMatrix {
        let a = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.a[i][j]).collect())
            .collect();
        let d = subset.iter().map(|&i| self.d[i]).collect();
        CartanMatrix {
            nodes: (1..=subset.len()).collect(),
            a,
            d,
            factors: Vec::new(),
        }
    }

    /// All permutations of the nodes preserving the matrix, in lexicographic
    /// order of their one-line notation (identity first).
    pub fn automorphism_group(&self) -> Vec<DiagramAutomorphism> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<DiagramAutomorphism>,
    ) {
        let n = self.rank();
        if k == n {
            out.push(DiagramAutomorphism { perm: perm.clone() });
            return;
        }
        for img in 0..n {
            if used[img] {
                continue;
            }
            let consistent = self.d[k] == self.d[img]
                && (0..=k).all(|j| {
                    let pj = if j == k { img } else { perm[j] };
                    self.a[img][pj] == self.a[k][j] && self.a[pj][img] == self.a[j][k]
                });
            if consistent {
                perm[k] = img;
                used[img] = true;
                self.extend_automorphism(k + 1, perm, used, out);
                used[img] = false;
                perm[k] = usize::MAX;
            }
        }
    }
}

fn determinant(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != q(0)) else {
            return q(0);
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c] == q(0) {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

/// A permutation `sigma` of the nodes (0-based, `perm[i] = sigma(i)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> Self {
        DiagramAutomorphism {
            perm: (0..n).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_involution(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| self.perm[p] == i)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &DiagramAutomorphism) -> DiagramAutomorphism {
        DiagramAutomorphism {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn preserves(&self, a: &CartanMatrix) -> bool {
        let n = a.rank();
        (0..n).all(|i| (0..n).all(|j| a.a[self.perm[i]][self.perm[j]] == a.a[i][j]))
    }

    /// Explicit 1-based pairs `[[i, sigma(i)], ...]`.
    pub fn pairs(&self) -> Vec<[usize; 2]> {
        self.perm
            .iter()
            .enumerate()
            .map(|(i, &p)| [i + 1, p + 1])
            .collect()
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self
            .perm
            .iter()
            .enumerate()
            .filter(|(i, p)| i < p)
            .map(|(i, p)| format!("{}:{}", i + 1, p + 1))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
