//! Checks that compare the mutation route with the matching route, plus
//! the supporting lattice identities.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::matchenum::{cluster_expansion, matching_polynomial, matching_polynomial_transfer};
use crate::mutation::{belt, belt_cap, noninitial_variables, BeltLattice};
use crate::rootsys::{roots_of, Kind, RootVector, TypeSpec};
use crate::tilegraphs::{enumerate_family, realize, sq, Shape, Tile, TileGraph};

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<RootVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell: Option<String>,
    pub expected: String,
    pub actual: String,
    pub difference: String,
}

impl Counterexample {
    fn new(expected: &LaurentPolynomial, actual: &LaurentPolynomial) -> Self {
        let difference = expected
            .checked_sub(actual)
            .map(|d| d.to_string())
            .unwrap_or_else(|e| e.to_string());
        Counterexample {
            root: None,
            cell: None,
            expected: expected.to_string(),
            actual: actual.to_string(),
            difference,
        }
    }

    fn at_root(mut self, root: &RootVector) -> Self {
        self.root = Some(root.clone());
        self
    }

    fn at_cell(mut self, cell: String) -> Self {
        self.cell = Some(cell);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: detail.into(),
            counterexample: None,
            elapsed_ms: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        detail: impl Into<String>,
        cx: Option<Counterexample>,
    ) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: detail.into(),
            counterexample: cx,
            elapsed_ms: None,
        }
    }

    fn error(name: impl Into<String>, e: &Error) -> Self {
        Self::fail(name, format!("error: {e}"), None)
    }

    fn from_result(name: &str, r: Result<CheckResult>) -> Self {
        r.unwrap_or_else(|e| Self::error(name, &e))
    }
}

/// A set of checks. Passes only if every check passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// Sorts checks by name so merged reports are deterministic.
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.checks).collect())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Cluster expansion by matchings against the belt variables, for every
/// positive root, plus the family-level properties.
pub fn verify_theorem(spec: TypeSpec) -> VerificationReport {
    let tag = |s: &str| format!("{spec}.theorem.{s}");
    let roots = match roots_of(spec) {
        Ok(r) => r,
        Err(e) => return VerificationReport::new(vec![CheckResult::error(tag("roots"), &e)]),
    };
    let family = enumerate_family(spec);
    let mut checks = vec![];

    checks.push(if family.len() == roots.len() {
        CheckResult::pass(
            tag("cardinality"),
            format!("{} graphs, {} positive roots", family.len(), roots.len()),
        )
    } else {
        CheckResult::fail(
            tag("cardinality"),
            format!("{} graphs, {} positive roots", family.len(), roots.len()),
            None,
        )
    });

    let mus: BTreeSet<RootVector> = family.iter().map(|g| g.root()).collect();
    let root_set: BTreeSet<RootVector> = roots.iter().cloned().collect();
    checks.push(if mus.len() == family.len() && mus == root_set {
        CheckResult::pass(
            tag("injectivity"),
            "multiplicity vectors are distinct and equal the positive roots",
        )
    } else {
        let missing: Vec<String> = root_set.difference(&mus).map(|r| r.to_string()).collect();
        CheckResult::fail(
            tag("injectivity"),
            format!("{} distinct vectors; missing {missing:?}", mus.len()),
            None,
        )
    });

    let vars = match noninitial_variables(spec) {
        Ok(v) => v,
        Err(e) => {
            checks.push(CheckResult::error(tag("expansion"), &e));
            return VerificationReport::new(checks);
        }
    };

    let outcomes: Vec<(RootVector, Result<LaurentPolynomial>)> = roots
        .par_iter()
        .map(|a| (a.clone(), cluster_expansion(spec, a)))
        .collect();
    let mut bad = None;
    for (alpha, got) in &outcomes {
        let want = &vars[alpha];
        match got {
            Ok(got) if got == want => {}
            Ok(got) => {
                bad = Some(CheckResult::fail(
                    tag("expansion"),
                    format!("mismatch at {alpha}"),
                    Some(Counterexample::new(want, got).at_root(alpha)),
                ));
                break;
            }
            Err(e) => {
                bad = Some(CheckResult::fail(
                    tag("expansion"),
                    format!("error at {alpha}: {e}"),
                    None,
                ));
                break;
            }
        }
    }
    checks.push(bad.unwrap_or_else(|| {
        CheckResult::pass(tag("expansion"), format!("{} roots checked", roots.len()))
    }));

    let negative = vars.iter().find(|(_, v)| !v.has_nonnegative_coefficients());
    checks.push(match negative {
        None => CheckResult::pass(
            tag("positivity"),
            format!("{} numerators nonnegative", vars.len()),
        ),
        Some((alpha, v)) => CheckResult::fail(
            tag("positivity"),
            format!("negative coefficient at {alpha}"),
            Some(Counterexample::new(&LaurentPolynomial::zero(v.nvars()), v).at_root(alpha)),
        ),
    });
    VerificationReport::new(checks)
}

/// The two matching-polynomial algorithms agree on every family graph.
pub fn check_matching_algorithms(spec: TypeSpec) -> CheckResult {
    let name = format!("{spec}.algorithms");
    let family = enumerate_family(spec);
    let outcome: Result<Option<(RootVector, LaurentPolynomial, LaurentPolynomial)>> = family
        .par_iter()
        .map(|g| {
            let m = realize(g)?;
            let (a, b) = (matching_polynomial(&m), matching_polynomial_transfer(&m));
            Ok((a != b).then(|| (g.root(), a, b)))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().next());
    match outcome {
        Ok(None) => CheckResult::pass(name, format!("{} graphs agree", family.len())),
        Ok(Some((alpha, a, b))) => CheckResult::fail(
            name,
            format!("algorithms disagree at {alpha}"),
            Some(Counterexample::new(&a, &b).at_root(&alpha)),
        ),
        Err(e) => CheckResult::error(name, &e),
    }
}

/// Right-hand side `bc + 1` (or its deformation) of the diamond at `slot`,
/// with `prev` giving values one row up. Missing neighbours count as 1.
fn diamond_rhs(
    spec: TypeSpec,
    slot: usize,
    prev: &dyn Fn(usize) -> Option<LaurentPolynomial>,
) -> LaurentPolynomial {
    let n = spec.rank();
    let one = LaurentPolynomial::one(n);
    let at = |s: Option<usize>| s.and_then(prev).unwrap_or_else(|| one.clone());
    let left = at(slot.checked_sub(1));
    let right = at(Some(slot + 1));
    let body = match (spec.kind(), slot) {
        (Kind::C, 0) => right.pow(2),
        (Kind::B, 0) | (Kind::G2, 0) => right,
        (Kind::B, 1) => &left.pow(2) * &right,
        (Kind::G2, 1) => left.pow(3),
        (Kind::D, 0) | (Kind::D, 1) => at(Some(2)),
        (Kind::D, 2) => &(&at(Some(0)) * &at(Some(1))) * &at(Some(3)),
        _ => &left * &right,
    };
    &body + &one
}

/// Walks every diamond `a` (two rows up), `d`, with its neighbours one row
/// up, and checks the relation for that position.
pub fn check_belt_diamonds(spec: TypeSpec) -> CheckResult {
    let name = format!("{spec}.diamonds");
    let lattice = match belt(spec, belt_cap(spec)) {
        Ok(l) => l,
        Err(e) => return CheckResult::error(name, &e),
    };
    diamonds_in(spec, &lattice, name)
}

fn diamonds_in(spec: TypeSpec, lattice: &BeltLattice, name: String) -> CheckResult {
    let mut count = 0;
    for r in 2..lattice.rows.len() {
        for e in &lattice.rows[r] {
            let slot = e.col - 1;
            let Some(a) = lattice.get(r - 2, slot) else {
                return CheckResult::fail(
                    name,
                    format!("missing cell ({}, {})", r - 2, e.col),
                    None,
                );
            };
            let prev = |s: usize| lattice.get(r - 1, s).cloned();
            let lhs = a * &e.poly;
            let rhs = diamond_rhs(spec, slot, &prev);
            if lhs != rhs {
                return CheckResult::fail(
                    name,
                    format!("diamond fails at row {r}, column {}", spec.label(slot)),
                    Some(Counterexample::new(&rhs, &lhs).at_cell(format!("row {r} col {}", e.col))),
                );
            }
            count += 1;
        }
    }
    CheckResult::pass(name, format!("{count} diamonds"))
}

/// How extended-lattice weights are assigned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LatticeWeights {
    /// `y_1 = 1`, `y_{-1} = -1`, `y_{-i} = -y_i`, symbolic `y_0`; slot `k`
    /// holds `y_k` and slot 1 is unused.
    Signed,
    /// One independent variable per index in the window.
    Generic,
}

/// Tiles `T~_i` with `y_{i+1}` north and `y_{i-1}` south, over the index
/// window `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedLatticeConfig {
    pub weights: LatticeWeights,
    pub lo: i64,
    pub hi: i64,
}

impl ExtendedLatticeConfig {
    pub fn signed(radius: i64) -> Self {
        ExtendedLatticeConfig {
            weights: LatticeWeights::Signed,
            lo: -radius,
            hi: radius,
        }
    }

    pub fn generic(lo: i64, hi: i64) -> Self {
        ExtendedLatticeConfig {
            weights: LatticeWeights::Generic,
            lo,
            hi,
        }
    }

    pub fn nvars(&self) -> usize {
        match self.weights {
            LatticeWeights::Signed => self.hi.max(-self.lo) as usize + 1,
            LatticeWeights::Generic => (self.hi - self.lo + 1) as usize,
        }
    }

    /// Names for display: `y0, y1, ...` or `y[lo], ...`.
    pub fn names(&self) -> Vec<String> {
        match self.weights {
            LatticeWeights::Signed => (0..self.nvars()).map(|k| format!("y{k}")).collect(),
            LatticeWeights::Generic => (self.lo..=self.hi).map(|k| format!("y[{k}]")).collect(),
        }
    }

    /// The weight `y_k`.
    pub fn y(&self, k: i64) -> LaurentPolynomial {
        assert!(
            self.lo <= k && k <= self.hi,
            "index {k} outside the lattice window"
        );
        let nv = self.nvars();
        match self.weights {
            LatticeWeights::Generic => LaurentPolynomial::var(nv, (k - self.lo) as usize),
            LatticeWeights::Signed => match k {
                1 => LaurentPolynomial::one(nv),
                -1 => LaurentPolynomial::constant(nv, -1),
                0 => LaurentPolynomial::var(nv, 0),
                k if k > 1 => LaurentPolynomial::var(nv, k as usize),
                k => -&LaurentPolynomial::var(nv, (-k) as usize),
            },
        }
    }

    pub fn tile(&self, i: i64) -> Tile {
        let one = LaurentPolynomial::one(self.nvars());
        Tile::new(
            format!("T~{i}"),
            None,
            Shape::Square,
            vec![self.y(i + 1), one.clone(), self.y(i - 1), one],
        )
    }

    /// `T~_lo ∪ ... ∪ T~_hi` in a row; empty when `lo > hi`.
    pub fn window(&self, lo: i64, hi: i64) -> TileGraph {
        TileGraph::strip((lo..=hi).map(|i| self.tile(i)).collect(), self.nvars(), 0)
    }

    pub fn matching(&self, lo: i64, hi: i64) -> Result<LaurentPolynomial> {
        Ok(matching_polynomial(&realize(&self.window(lo, hi))?))
    }

    /// Product of the tile weights `y_lo ... y_hi`.
    pub fn monomial(&self, lo: i64, hi: i64) -> LaurentPolynomial {
        (lo..=hi).fold(LaurentPolynomial::one(self.nvars()), |acc, i| {
            &acc * &self.y(i)
        })
    }

    /// `P(window) / y_lo ... y_hi`.
    pub fn value(&self, lo: i64, hi: i64) -> Result<LaurentPolynomial> {
        self.matching(lo, hi)?.div_exact(&self.monomial(lo, hi))
    }

    /// Sets `y_0 = 0`; fails with a pole if `y_0` still divides.
    pub fn limit_y0(&self, p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        assert_eq!(self.weights, LatticeWeights::Signed);
        let mut m = BTreeMap::new();
        m.insert(0, LaurentPolynomial::zero(p.nvars()));
        p.substitute(&m, p.nvars())
    }

    fn show(&self, p: &LaurentPolynomial) -> String {
        p.display_with(&self.names())
    }
}

/// The excess monomial of the condensation identity: the weight of the
/// matching of `G_0` using the horizontals of every second tile from
/// `T~_{i-j+2}`, times the analogous matching of `G_2`.
pub fn condensation_excess(i: i64, j: i64, config: &ExtendedLatticeConfig) -> LaurentPolynomial {
    let horizontals = |from: i64, to: i64| {
        (from..=to)
            .step_by(2)
            .fold(LaurentPolynomial::one(config.nvars()), |acc, k| {
                &(&acc * &config.y(k - 1)) * &config.y(k + 1)
            })
    };
    &horizontals(i - j + 2, i + j - 2) * &horizontals(i - j + 3, i + j - 3)
}

/// `P(G_0) P(G_2) = P(G_1^{i-1}) P(G_1^{i+1}) + excess` at center `i`,
/// half-width `j ≥ 2`.
pub fn check_condensation(i: i64, j: i64, config: &ExtendedLatticeConfig) -> CheckResult {
    let tag = match config.weights {
        LatticeWeights::Signed => "signed",
        LatticeWeights::Generic => "generic",
    };
    let name = format!("condensation.{tag}.i{i}.j{j}");
    if j < 2 || i - j < config.lo || i + j > config.hi {
        return CheckResult::fail(name, "center/width outside the configured window", None);
    }
    let run = || -> Result<CheckResult> {
        let c = config;
        let lhs = &c.matching(i - j + 1, i + j - 1)? * &c.matching(i - j + 3, i + j - 3)?;
        let rhs = &(&c.matching(i - j + 1, i + j - 3)? * &c.matching(i - j + 3, i + j - 1)?)
            + &condensation_excess(i, j, c);
        Ok(if lhs == rhs {
            CheckResult::pass(name.clone(), format!("{} terms", lhs.num_terms()))
        } else {
            let mut cx = Counterexample::new(&lhs, &rhs);
            cx.expected = c.show(&lhs);
            cx.actual = c.show(&rhs);
            CheckResult::fail(name.clone(), "identity fails", Some(cx))
        })
    };
    CheckResult::from_result(&format!("condensation.{tag}.i{i}.j{j}"), run())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// `H_j = T~_{-j}..T~_{j+1}` gives `y_{j+2}` and `T~_{-j}..T~_{j+2}` gives 1,
/// after dividing by the tile monomial and letting `y_0 → 0`.
pub fn check_center_one(j: i64, parity: Parity) -> CheckResult {
    let tag = match parity {
        Parity::Even => "even",
        Parity::Odd => "odd",
    };
    let name = format!("center_one.{tag}.j{j}");
    let c = ExtendedLatticeConfig::signed(j + 4);
    let run = || -> Result<CheckResult> {
        let (hi, want) = match parity {
            Parity::Even => (j + 1, c.y(j + 2)),
            Parity::Odd => (j + 2, LaurentPolynomial::one(c.nvars())),
        };
        let raw = c.value(-j, hi)?;
        let got = c.limit_y0(&raw)?;
        Ok(if got == want {
            CheckResult::pass(
                name.clone(),
                format!("{} terms, limit {}", raw.num_terms(), c.show(&got)),
            )
        } else {
            let mut cx = Counterexample::new(&want, &got);
            cx.expected = c.show(&want);
            cx.actual = c.show(&got);
            CheckResult::fail(name.clone(), format!("quotient {}", c.show(&raw)), Some(cx))
        })
    };
    CheckResult::from_result(&format!("center_one.{tag}.j{j}"), run())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExcisionScenario {
    /// `T~_{2-j}..T~_{j+k}` against `T~_{j+1}..T~_{j+k}`, with `j, k ≥ 1`.
    AType { j: i64, k: i64 },
    /// `T_a..T_b` against `T_a..T_{2n+1-b}` in the B_n tower lattice,
    /// for `3 ≤ a ≤ n` and `n+1 ≤ b ≤ 2n+2-a`.
    BTower { n: usize, a: usize, b: usize },
}

/// Weights of the B_n tower lattice lifted past rank `n`: `x_{n+1} = 1`,
/// `x_{n+2} = y_0` (last slot) and `x_{n+2+k} = -x_{n+2-k}`.
fn b_lift_weight(n: usize, k: usize) -> LaurentPolynomial {
    let nv = n + 1;
    match k {
        k if (1..=n).contains(&k) => LaurentPolynomial::var(nv, k - 1),
        k if k == n + 1 || k == 0 => LaurentPolynomial::one(nv),
        k if k == n + 2 => LaurentPolynomial::var(nv, n),
        k => -&b_lift_weight(n, 2 * n + 4 - k),
    }
}

/// `P(T_a..T_b) / x_a..x_b` in the lifted tower lattice, with `y_0 → 0`.
/// An empty tower gives 1.
pub fn b_tower_value(n: usize, a: usize, b: usize) -> Result<LaurentPolynomial> {
    let nv = n + 1;
    let one = LaurentPolynomial::one(nv);
    let mut g = TileGraph::new(nv, 0);
    let mut den = one.clone();
    for k in a..=b {
        let t = g.add(Tile::new(
            format!("T{k}"),
            None,
            Shape::Square,
            vec![
                one.clone(),
                b_lift_weight(n, k - 1),
                one.clone(),
                b_lift_weight(n, k + 1),
            ],
        ));
        if t > 0 {
            g.glue(t, sq::S, t - 1, sq::N);
        }
        den = &den * &b_lift_weight(n, k);
    }
    let raw = matching_polynomial(&realize(&g)?).div_exact(&den)?;
    let mut m = BTreeMap::new();
    m.insert(n, LaurentPolynomial::zero(nv));
    raw.substitute(&m, nv)
}

pub fn check_excision(scenario: ExcisionScenario) -> CheckResult {
    match scenario {
        ExcisionScenario::AType { j, k } => {
            let name = format!("excision.A.j{j}.k{k}");
            if j < 1 || k < 1 {
                return CheckResult::fail(name, "need j, k >= 1", None);
            }
            let c = ExtendedLatticeConfig::signed(j + k + 2);
            let run = || -> Result<CheckResult> {
                let big = c.limit_y0(&c.value(2 - j, j + k)?)?;
                let small = c.limit_y0(&c.value(j + 1, j + k)?)?;
                Ok(if big == small {
                    CheckResult::pass(name.clone(), format!("both give {}", c.show(&big)))
                } else {
                    let mut cx = Counterexample::new(&small, &big);
                    cx.expected = c.show(&small);
                    cx.actual = c.show(&big);
                    CheckResult::fail(name.clone(), "values differ", Some(cx))
                })
            };
            CheckResult::from_result(&format!("excision.A.j{j}.k{k}"), run())
        }
        ExcisionScenario::BTower { n, a, b } => {
            let name = format!("excision.B{n}.a{a}.b{b}");
            if n < 3 || a < 3 || a > n || b < n + 1 || b + a > 2 * n + 2 {
                return CheckResult::fail(name, "inadmissible tower", None);
            }
            let run = || -> Result<CheckResult> {
                let lhs = b_tower_value(n, a, b)?;
                let image = 2 * n + 1 - b;
                let rhs = b_tower_value(n, a, image)?;
                let alt = b_tower_value(n, a, 2 * n + 2 - b)?;
                let alt_note = if alt == lhs { "also" } else { "not" };
                let shown = |t: usize| {
                    if t < a {
                        "empty".to_string()
                    } else {
                        format!("T{a}..T{t}")
                    }
                };
                let detail = format!(
                    "T{a}..T{b} matches {} ({alt_note} {})",
                    shown(image),
                    shown(2 * n + 2 - b)
                );
                Ok(if lhs == rhs {
                    CheckResult::pass(name.clone(), detail)
                } else {
                    CheckResult::fail(name.clone(), detail, Some(Counterexample::new(&rhs, &lhs)))
                })
            };
            CheckResult::from_result(&format!("excision.B{n}.a{a}.b{b}"), run())
        }
    }
}

/// Every admissible tower excision in B_n.
pub fn b_excision_scenarios(n: usize) -> Vec<ExcisionScenario> {
    let mut out = vec![];
    for a in 3..=n {
        for b in n + 1..=2 * n + 2 - a {
            out.push(ExcisionScenario::BTower { n, a, b });
        }
    }
    out
}

/// A-type excision windows with at most `max_tiles` tiles.
pub fn a_excision_scenarios(max_tiles: i64) -> Vec<ExcisionScenario> {
    let mut out = vec![];
    for j in 1..=max_tiles {
        for k in 1..=max_tiles {
            if 2 * j + k - 1 <= max_tiles {
                out.push(ExcisionScenario::AType { j, k });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Folding {
    /// A_{2n-1} onto C_n.
    AToC(usize),
    /// D_n onto B_{n-1}.
    DToB(usize),
}

/// The identification of variables used by a folding, as an assignment
/// into the smaller ring.
pub fn folding_map(
    direction: Folding,
) -> Result<(TypeSpec, TypeSpec, BTreeMap<usize, LaurentPolynomial>)> {
    match direction {
        Folding::AToC(n) => {
            let from = TypeSpec::new(Kind::A, 2 * n - 1)?;
            let to = TypeSpec::new(Kind::C, n)?;
            let mut m = BTreeMap::new();
            for k in 1..2 * n {
                let image = match k {
                    k if k < n => n + 1 - k,
                    k if k == n => 1,
                    k => k - n + 1,
                };
                m.insert(k - 1, LaurentPolynomial::var(n, image - 1));
            }
            Ok((from, to, m))
        }
        Folding::DToB(n) => {
            let from = TypeSpec::new(Kind::D, n)?;
            let to = TypeSpec::new(Kind::B, n - 1)?;
            let mut m = BTreeMap::new();
            m.insert(0, LaurentPolynomial::var(n - 1, 0));
            m.insert(1, LaurentPolynomial::var(n - 1, 0));
            for s in 2..n {
                m.insert(s, LaurentPolynomial::var(n - 1, s - 1));
            }
            Ok((from, to, m))
        }
    }
}

/// The folded image of every variable of the larger type, duplicates
/// collapsed, equals the variable set of the smaller type.
pub fn check_folding(direction: Folding) -> CheckResult {
    let name = match direction {
        Folding::AToC(n) => format!("folding.A{}toC{n}", 2 * n - 1),
        Folding::DToB(n) => format!("folding.D{n}toB{}", n - 1),
    };
    let run = || -> Result<CheckResult> {
        let (from, to, map) = folding_map(direction)?;
        let source = noninitial_variables(from)?;
        let target: BTreeSet<String> = noninitial_variables(to)?
            .values()
            .map(|v| v.to_string())
            .collect();
        let mut image = BTreeSet::new();
        for v in source.values() {
            image.insert(v.substitute(&map, to.rank())?.to_string());
        }
        Ok(if image == target {
            CheckResult::pass(
                name.clone(),
                format!("{} variables fold onto {}", source.len(), target.len()),
            )
        } else {
            let extra: Vec<&String> = image.difference(&target).collect();
            let missing: Vec<&String> = target.difference(&image).collect();
            CheckResult::fail(
                name.clone(),
                format!("extra {extra:?}, missing {missing:?}"),
                None,
            )
        })
    };
    CheckResult::from_result(&name, run())
}

/// Selectable check groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckKind {
    Theorem,
    Diamonds,
    Algorithms,
    Folding,
    Condensation,
    Excision,
    CenterOne,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Theorem,
        CheckKind::Diamonds,
        CheckKind::Algorithms,
        CheckKind::Folding,
        CheckKind::Condensation,
        CheckKind::Excision,
        CheckKind::CenterOne,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "theorem" => Ok(CheckKind::Theorem),
            "diamonds" => Ok(CheckKind::Diamonds),
            "algorithms" => Ok(CheckKind::Algorithms),
            "folding" => Ok(CheckKind::Folding),
            "condensation" => Ok(CheckKind::Condensation),
            "excision" => Ok(CheckKind::Excision),
            "center-one" => Ok(CheckKind::CenterOne),
            other => Err(Error::Domain(format!("unknown check {other:?}"))),
        }
    }
}

fn timed(timings: bool, f: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let start = Instant::now();
    let mut out = f();
    if timings {
        let ms = start.elapsed().as_millis() as u64;
        for c in &mut out {
            c.elapsed_ms = Some(ms);
        }
    }
    out
}

/// Runs the selected check groups for one type. Lattice checks that do not
/// depend on the type use fixed ranges; folding runs where the type is the
/// target (or, for odd A ranks, the source) of a folding.
pub fn run_checks(spec: TypeSpec, kinds: &[CheckKind], timings: bool) -> VerificationReport {
    let kinds: BTreeSet<CheckKind> = kinds.iter().copied().collect();
    let groups: Vec<Vec<CheckResult>> = kinds
        .par_iter()
        .map(|kind| {
            timed(timings, || match kind {
                CheckKind::Theorem => verify_theorem(spec).checks,
                CheckKind::Diamonds => vec![check_belt_diamonds(spec)],
                CheckKind::Algorithms => vec![check_matching_algorithms(spec)],
                CheckKind::Folding => {
                    let n = spec.rank();
                    match spec.kind() {
                        Kind::C => vec![check_folding(Folding::AToC(n))],
                        Kind::A if n % 2 == 1 && n >= 3 => {
                            vec![check_folding(Folding::AToC(n.div_ceil(2)))]
                        }
                        Kind::B if n >= 3 => vec![check_folding(Folding::DToB(n + 1))],
                        Kind::D => vec![check_folding(Folding::DToB(n))],
                        _ => vec![],
                    }
                }
                CheckKind::Condensation => {
                    let mut v = vec![];
                    for j in 2..=5 {
                        v.push(check_condensation(
                            0,
                            j,
                            &ExtendedLatticeConfig::generic(-j, j),
                        ));
                        for i in -3..=3 {
                            v.push(check_condensation(i, j, &ExtendedLatticeConfig::signed(9)));
                        }
                    }
                    v
                }
                CheckKind::Excision => {
                    let mut s = a_excision_scenarios(7);
                    let ns: Vec<usize> = match spec.kind() {
                        Kind::B if spec.rank() >= 3 => vec![spec.rank()],
                        _ => vec![3, 4],
                    };
                    for n in ns {
                        s.extend(b_excision_scenarios(n));
                    }
                    s.into_par_iter().map(check_excision).collect()
                }
                CheckKind::CenterOne => (0..=4)
                    .flat_map(|j| {
                        [
                            check_center_one(j, Parity::Even),
                            check_center_one(j, Parity::Odd),
                        ]
                    })
                    .collect(),
            })
        })
        .collect();
    VerificationReport::new(groups.into_iter().flatten().collect())
}
