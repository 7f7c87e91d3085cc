//! Exchange matrices, seed mutation and the bipartite belt.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::rootsys::{roots_of, Kind, RootVector, TypeSpec};

/// A square integer matrix `b_ij`, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i32>>,
}

impl ExchangeMatrix {
    pub fn new(rows: Vec<Vec<i32>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("exchange matrix must be square".into()));
        }
        Ok(ExchangeMatrix { b: rows })
    }

    /// The bipartite initial matrix of a supported type. D_n rows and
    /// columns are ordered `1, 1b, 2, ..., n-1`.
    pub fn initial(spec: TypeSpec) -> Self {
        let n = spec.rank();
        let mut b = vec![vec![0; n]; n];
        let link = |b: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
            b[i][j] = v;
            b[j][i] = -v;
        };
        match spec.kind() {
            Kind::D => {
                link(&mut b, 0, 2, 1);
                link(&mut b, 1, 2, 1);
                for k in 2..n - 1 {
                    link(&mut b, k, k + 1, if k % 2 == 1 { 1 } else { -1 });
                }
            }
            Kind::G2 => {
                b = vec![vec![0, 1], vec![-3, 0]];
            }
            _ => {
                for i in 0..n - 1 {
                    link(&mut b, i, i + 1, if i % 2 == 0 { 1 } else { -1 });
                }
                match spec.kind() {
                    Kind::B => b[1][0] = -2,
                    Kind::C => b[0][1] = 2,
                    _ => {}
                }
            }
        }
        ExchangeMatrix { b }
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    /// Entry `b_ij` with 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.b
    }

    /// Matrix mutation in direction `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let n = self.size();
        if k == 0 || k > n {
            return Err(Error::Index { index: k, rank: n });
        }
        let k = k - 1;
        let b = &self.b;
        let out = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + (-b[i][k]).max(0) * b[k][j] + b[i][k] * b[k][j].max(0)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(ExchangeMatrix { b: out })
    }

    /// Every row has entries of a single sign.
    pub fn is_bipartite(&self) -> bool {
        self.b
            .iter()
            .all(|r| !(r.iter().any(|&x| x > 0) && r.iter().any(|&x| x < 0)))
    }

    /// Positive integers `d_i` with `d_i b_ij = -d_j b_ji`, normalized to
    /// coprime entries, if they exist.
    pub fn skew_symmetrizer(&self) -> Option<Vec<i64>> {
        let n = self.size();
        let mut d = vec![0i64; n];
        for start in 0..n {
            if d[start] != 0 {
                continue;
            }
            d[start] = 1;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    let (bij, bji) = (self.b[i][j] as i64, self.b[j][i] as i64);
                    if bij == 0 && bji == 0 {
                        continue;
                    }
                    if bij == 0 || bji == 0 || (bij > 0) == (bji > 0) {
                        return None;
                    }
                    if d[j] != 0 {
                        continue;
                    }
                    // d_j = d_i * b_ij / (-b_ji), rescaling everything assigned so far
                    let num = d[i] * bij.abs();
                    let den = bji.abs();
                    let g = num.gcd(&den);
                    let scale = den / g;
                    for x in d.iter_mut() {
                        *x *= scale;
                    }
                    d[j] = num / g;
                    stack.push(j);
                }
            }
        }
        let g = d.iter().fold(0i64, |g, &x| g.gcd(&x));
        let d: Vec<i64> = d.into_iter().map(|x| x / g).collect();
        self.is_skew_symmetrized_by(&d).then_some(d)
    }

    pub fn is_skew_symmetrized_by(&self, d: &[i64]) -> bool {
        let n = self.size();
        d.len() == n
            && d.iter().all(|&x| x > 0)
            && (0..n)
                .all(|i| (0..n).all(|j| d[i] * self.b[i][j] as i64 == -d[j] * self.b[j][i] as i64))
    }
}

/// Matrix mutation in direction `k` (1-based).
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    b.mutate(k)
}

/// A cluster with its exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub cluster: Vec<LaurentPolynomial>,
    pub matrix: ExchangeMatrix,
}

impl Seed {
    pub fn new(cluster: Vec<LaurentPolynomial>, matrix: ExchangeMatrix) -> Result<Self> {
        if cluster.len() != matrix.size() {
            return Err(Error::Dimension(cluster.len(), matrix.size()));
        }
        if cluster.iter().any(|x| x.is_zero()) {
            return Err(Error::Domain("cluster entries must be nonzero".into()));
        }
        Ok(Seed { cluster, matrix })
    }

    /// Seed mutation in direction `k` (1-based), using row `k` of the
    /// matrix for the exchange binomial.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.matrix.size();
        if k == 0 || k > n {
            return Err(Error::Index { index: k, rank: n });
        }
        let kk = k - 1;
        let nv = self.cluster[0].nvars();
        let mut pos = LaurentPolynomial::one(nv);
        let mut neg = LaurentPolynomial::one(nv);
        for j in 0..n {
            let e = self.matrix.get(kk, j);
            if e > 0 {
                pos = &pos * &self.cluster[j].pow(e as u32);
            } else if e < 0 {
                neg = &neg * &self.cluster[j].pow((-e) as u32);
            }
        }
        let fresh = (&pos + &neg).div_exact(&self.cluster[kk])?;
        let mut cluster = self.cluster.clone();
        cluster[kk] = fresh;
        Ok(Seed {
            cluster,
            matrix: self.matrix.mutate(k)?,
        })
    }
}

pub fn initial_seed(spec: TypeSpec) -> Seed {
    let n = spec.rank();
    Seed {
        cluster: (0..n).map(|i| LaurentPolynomial::var(n, i)).collect(),
        matrix: ExchangeMatrix::initial(spec),
    }
}

pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    s.mutate(k)
}

/// One cell of the belt: `x_col^(sup)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeltEntry {
    /// 1-based slot.
    pub col: usize,
    pub sup: usize,
    pub poly: LaurentPolynomial,
}

/// Rows of belt variables. Row 0 holds the initial variables at odd
/// positions, row 1 those at even positions, and row `r ≥ 2` the results of
/// belt step `r - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeltLattice {
    #[serde(rename = "type")]
    pub kind: Kind,
    pub rank: usize,
    pub rows: Vec<Vec<BeltEntry>>,
}

impl BeltLattice {
    /// Value at `(row, slot)` with a 0-based slot.
    pub fn get(&self, row: usize, slot: usize) -> Option<&LaurentPolynomial> {
        self.rows
            .get(row)?
            .iter()
            .find(|e| e.col == slot + 1)
            .map(|e| &e.poly)
    }

    pub fn entries(&self) -> impl Iterator<Item = &BeltEntry> {
        self.rows.iter().flatten()
    }
}

/// The two halves of a belt step as 0-based slots. The first half holds
/// odd positions; for D_n it is `1, 1b, 3, 5, ...`.
pub fn belt_groups(spec: TypeSpec) -> (Vec<usize>, Vec<usize>) {
    let n = spec.rank();
    let first = |s: usize| match spec.kind() {
        Kind::D => s < 2 || s % 2 == 1,
        _ => s.is_multiple_of(2),
    };
    (
        (0..n).filter(|&s| first(s)).collect(),
        (0..n).filter(|&s| !first(s)).collect(),
    )
}

/// Row budget `2 (h + 2)` with `h` the Coxeter number.
pub fn belt_cap(spec: TypeSpec) -> usize {
    2 * (spec.coxeter_number() + 2)
}

fn generate(spec: TypeSpec, max_rows: usize, stop_when_covered: bool) -> Result<BeltLattice> {
    if max_rows == 0 {
        return Err(Error::Domain("belt needs at least one row".into()));
    }
    let (odd, even) = belt_groups(spec);
    let mut seed = initial_seed(spec);
    let row_of = |seed: &Seed, group: &[usize], sup: usize| -> Vec<BeltEntry> {
        group
            .iter()
            .map(|&s| BeltEntry {
                col: s + 1,
                sup,
                poly: seed.cluster[s].clone(),
            })
            .collect()
    };
    let mut rows = vec![row_of(&seed, &odd, 0)];
    if max_rows > 1 {
        rows.push(row_of(&seed, &even, 0));
    }
    let roots: BTreeSet<RootVector> = roots_of(spec)?.into_iter().collect();
    let mut covered = BTreeSet::new();
    let mut step = 1;
    while rows.len() < max_rows {
        if stop_when_covered && roots.is_subset(&covered) {
            break;
        }
        let group = if step % 2 == 1 { &odd } else { &even };
        for &s in group {
            seed = seed.mutate(s + 1)?;
        }
        let row = row_of(&seed, group, step);
        for e in &row {
            let d = e.poly.split()?.denominator;
            covered.insert(RootVector(d.as_slice().to_vec()));
        }
        rows.push(row);
        step += 1;
    }
    if stop_when_covered && !roots.is_subset(&covered) {
        return Err(Error::Incomplete(spec.to_string(), max_rows));
    }
    Ok(BeltLattice {
        kind: spec.kind(),
        rank: spec.rank(),
        rows,
    })
}

/// Belt rows until every positive root occurs as a denominator vector,
/// failing if that takes more than `max_rows` rows.
pub fn belt(spec: TypeSpec, max_rows: usize) -> Result<BeltLattice> {
    generate(spec, max_rows, true)
}

/// Exactly `rows` belt rows, with no stopping rule.
pub fn belt_rows(spec: TypeSpec, rows: usize) -> Result<BeltLattice> {
    generate(spec, rows, false)
}

/// Every non-initial cluster variable, keyed by its denominator vector.
pub fn noninitial_variables(spec: TypeSpec) -> Result<BTreeMap<RootVector, LaurentPolynomial>> {
    let lattice = belt(spec, belt_cap(spec))?;
    let mut out: BTreeMap<RootVector, LaurentPolynomial> = BTreeMap::new();
    for e in lattice.entries().filter(|e| e.sup > 0) {
        let d = e.poly.split()?.denominator;
        if d.as_slice().iter().any(|&x| x < 0) {
            continue;
        }
        let key = RootVector(d.as_slice().to_vec());
        if let Some(prev) = out.get(&key) {
            if prev != &e.poly {
                return Err(Error::Bijection(format!(
                    "denominator {key} carried by {prev} and {}",
                    e.poly
                )));
            }
        } else {
            out.insert(key, e.poly.clone());
        }
    }
    let roots: BTreeSet<RootVector> = roots_of(spec)?.into_iter().collect();
    let keys: BTreeSet<RootVector> = out.keys().cloned().collect();
    if keys != roots {
        let extra: Vec<String> = keys.difference(&roots).map(|r| r.to_string()).collect();
        let missing: Vec<String> = roots.difference(&keys).map(|r| r.to_string()).collect();
        return Err(Error::Bijection(format!(
            "{spec}: extra denominators {extra:?}, missing roots {missing:?}"
        )));
    }
    Ok(out)
}
