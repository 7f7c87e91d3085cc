//! Root systems of types A, B, C, D and G2 in simple-root coordinates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::mutation::ExchangeMatrix;

/// Cartan type tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::G2 => "G2",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "G" | "G2" => Ok(Kind::G2),
            other => Err(Error::Domain(format!("unsupported type tag {other:?}"))),
        }
    }
}

impl Serialize for Kind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A supported (type, rank) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeSpec {
    kind: Kind,
    rank: usize,
}

impl TypeSpec {
    /// Supported pairs: A_n (n ≥ 1), B_n and C_n (n ≥ 2), D_n (n ≥ 4), G2.
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let ok = match kind {
            Kind::A => rank >= 1,
            Kind::B | Kind::C => rank >= 2,
            Kind::D => rank >= 4,
            Kind::G2 => rank == 2,
        };
        if !ok {
            return Err(Error::Domain(format!("unsupported pair {kind}{rank}")));
        }
        Ok(TypeSpec { kind, rank })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_number(&self) -> usize {
        match self.kind {
            Kind::A => self.rank + 1,
            Kind::B | Kind::C => 2 * self.rank,
            Kind::D => 2 * self.rank - 2,
            Kind::G2 => 6,
        }
    }

    /// `|Φ+|` by the closed formulas.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.kind {
            Kind::A => n * (n + 1) / 2,
            Kind::B | Kind::C => n * n,
            Kind::D => n * (n - 1),
            Kind::G2 => 6,
        }
    }

    /// Label of a 0-based slot. D_n uses the order `1, 1b, 2, ..., n-1`.
    pub fn label(&self, slot: usize) -> String {
        match (self.kind, slot) {
            (Kind::D, 0) => "1".into(),
            (Kind::D, 1) => "1b".into(),
            (Kind::D, s) => s.to_string(),
            (_, s) => (s + 1).to_string(),
        }
    }

    /// Slot of label `k` (1-based, bars excluded) for k ≥ 2.
    pub fn slot_of(&self, k: usize) -> usize {
        match self.kind {
            Kind::D => k,
            _ => k - 1,
        }
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::G2 => f.write_str("G2"),
            k => write!(f, "{k}{}", self.rank),
        }
    }
}

/// A vector in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Parses `1,0,2` (spaces and surrounding brackets tolerated).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        t.split(',')
            .map(|c| {
                c.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Domain(format!("bad root coordinate {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(RootVector)
    }

    /// `1-0-2`, used in file names.
    pub fn dashed(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for RootVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Cartan matrix read off an exchange matrix: `a_ii = 2`, `a_ij = -|b_ij|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSpec {
    pub spec: TypeSpec,
    pub a: Vec<Vec<i32>>,
}

impl CartanSpec {
    pub fn from_exchange(spec: TypeSpec, b: &ExchangeMatrix) -> Self {
        let n = b.size();
        let a = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { -b.get(i, j).abs() })
                    .collect()
            })
            .collect();
        CartanSpec { spec, a }
    }

    pub fn of(spec: TypeSpec) -> Self {
        Self::from_exchange(spec, &ExchangeMatrix::initial(spec))
    }

    /// Simple reflection `s_j(α) = α - (Σ_i α_i a_ij) e_j`.
    pub fn reflect(&self, alpha: &RootVector, j: usize) -> RootVector {
        let pairing: i32 = (0..alpha.0.len()).map(|i| alpha.0[i] * self.a[i][j]).sum();
        let mut out = alpha.clone();
        out.0[j] -= pairing;
        out
    }
}

const CLOSURE_CAP: usize = 100_000;

/// All positive roots, by closing the simple roots under simple
/// reflections and keeping the nonnegative images.
pub fn positive_roots(cartan: &CartanSpec) -> Result<BTreeSet<RootVector>> {
    let n = cartan.a.len();
    let mut seen: BTreeSet<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
    let mut queue: VecDeque<RootVector> = seen.iter().cloned().collect();
    let mut steps = 0;
    while let Some(alpha) = queue.pop_front() {
        for j in 0..n {
            steps += 1;
            if steps > CLOSURE_CAP {
                return Err(Error::Domain(format!(
                    "reflection closure for {} exceeded {CLOSURE_CAP} steps",
                    cartan.spec
                )));
            }
            let beta = cartan.reflect(&alpha, j);
            if beta.is_positive() && seen.insert(beta.clone()) {
                queue.push_back(beta);
            }
        }
    }
    Ok(seen)
}

/// Positive roots of a supported pair, sorted lexicographically.
pub fn roots_of(spec: TypeSpec) -> Result<Vec<RootVector>> {
    Ok(positive_roots(&CartanSpec::of(spec))?.into_iter().collect())
}
