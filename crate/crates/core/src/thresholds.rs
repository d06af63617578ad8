//! Dominator's thresholds `a_ℓ`, `a'_ℓ` and Staller's thresholds `b_ℓ`,
//! `b'_ℓ`.
//!
//! Every threshold is found by a linear scan from 1, which is valid because
//! the winner is monotone in both biases. The scan stops at the value the
//! trivial upper bounds guarantee:
//!
//! | threshold | bound                                  |
//! |-----------|----------------------------------------|
//! | `a_ℓ`     | `γ(G)`                                 |
//! | `a'_ℓ`    | `ℓ·Δ(G)` if `ℓ <= δ(G)`, otherwise `∞` |
//! | `b_ℓ`     | `Δ(G)+1` if `ℓ < γ(G)`, otherwise `∞`  |
//! | `b'_ℓ`    | `δ(G)+1`                               |
//!
//! The bound itself is probed too, so a violated bound surfaces as
//! [`ThresholdError::BoundViolated`] instead of a silently wrong value.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::game::{GameConfig, Player};
use crate::graph::Graph;
use crate::invariants::domination_number;
use crate::solver::{solve_with, SolveError, SolverOptions};

/// A threshold: a positive integer or `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThresholdValue {
    Finite(usize),
    Infinite,
}

impl ThresholdValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            ThresholdValue::Finite(v) => Some(v),
            ThresholdValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ThresholdValue::Infinite
    }

    /// `self <= v` for an integer `v`.
    pub fn at_most(self, v: usize) -> bool {
        matches!(self, ThresholdValue::Finite(x) if x <= v)
    }
}

impl Ord for ThresholdValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ThresholdValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ThresholdValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ThresholdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdValue::Finite(v) => write!(f, "{v}"),
            ThresholdValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Which of the four thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThresholdKind {
    /// `a_ℓ`: least Dominator bias winning the D-game against Staller bias ℓ.
    A,
    /// `a'_ℓ`: same for the S-game.
    APrime,
    /// `b_ℓ`: least Staller bias winning the D-game against Dominator bias ℓ.
    B,
    /// `b'_ℓ`: same for the S-game.
    BPrime,
}

impl ThresholdKind {
    pub const ALL: [ThresholdKind; 4] =
        [ThresholdKind::A, ThresholdKind::APrime, ThresholdKind::B, ThresholdKind::BPrime];

    pub fn label(self) -> &'static str {
        match self {
            ThresholdKind::A => "a",
            ThresholdKind::APrime => "a'",
            ThresholdKind::B => "b",
            ThresholdKind::BPrime => "b'",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        ThresholdKind::ALL.into_iter().find(|k| k.label() == s)
    }

    pub fn starter(self) -> Player {
        match self {
            ThresholdKind::A | ThresholdKind::B => Player::Dominator,
            ThresholdKind::APrime | ThresholdKind::BPrime => Player::Staller,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdError {
    /// Biases and indices start at 1.
    ZeroIndex,
    Solve(SolveError),
    /// No bias up to the guaranteed bound won. Indicates a solver defect.
    BoundViolated {
        kind: ThresholdKind,
        index: usize,
        bound: usize,
    },
}

impl From<SolveError> for ThresholdError {
    fn from(e: SolveError) -> Self {
        ThresholdError::Solve(e)
    }
}

impl fmt::Display for ThresholdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdError::ZeroIndex => f.write_str("threshold index must be at least 1"),
            ThresholdError::Solve(e) => write!(f, "{e}"),
            ThresholdError::BoundViolated { kind, index, bound } => {
                write!(f, "{}_{index}: no winning bias up to the guaranteed bound {bound}", kind.label())
            }
        }
    }
}

impl core::error::Error for ThresholdError {}

/// Least Dominator bias `a` with which Dominator wins against Staller bias
/// `staller_bias` when `starter` moves first (`a_ℓ` or `a'_ℓ`).
pub fn dominator_threshold(
    g: &Graph,
    staller_bias: usize,
    starter: Player,
    opts: SolverOptions,
) -> Result<ThresholdValue, ThresholdError> {
    if staller_bias == 0 {
        return Err(ThresholdError::ZeroIndex);
    }
    let (kind, bound) = match starter {
        Player::Dominator => (ThresholdKind::A, domination_number(g)),
        Player::Staller => {
            if staller_bias > g.min_degree() {
                return Ok(ThresholdValue::Infinite);
            }
            (ThresholdKind::APrime, staller_bias * g.max_degree())
        }
    };
    for a in 1..=bound {
        let cfg = GameConfig::new(a, staller_bias, starter).expect("positive");
        if solve_with(g, cfg, opts)? == Player::Dominator {
            return Ok(ThresholdValue::Finite(a));
        }
    }
    Err(ThresholdError::BoundViolated { kind, index: staller_bias, bound })
}

/// Least Staller bias `b` with which Staller wins against Dominator bias
/// `dominator_bias` when `starter` moves first (`b_ℓ` or `b'_ℓ`).
pub fn staller_threshold(
    g: &Graph,
    dominator_bias: usize,
    starter: Player,
    opts: SolverOptions,
) -> Result<ThresholdValue, ThresholdError> {
    if dominator_bias == 0 {
        return Err(ThresholdError::ZeroIndex);
    }
    let (kind, bound) = match starter {
        Player::Staller => (ThresholdKind::BPrime, g.min_degree() + 1),
        Player::Dominator => {
            if dominator_bias >= domination_number(g) {
                return Ok(ThresholdValue::Infinite);
            }
            (ThresholdKind::B, g.max_degree() + 1)
        }
    };
    for b in 1..=bound {
        let cfg = GameConfig::new(dominator_bias, b, starter).expect("positive");
        if solve_with(g, cfg, opts)? == Player::Staller {
            return Ok(ThresholdValue::Finite(b));
        }
    }
    Err(ThresholdError::BoundViolated { kind, index: dominator_bias, bound })
}

/// Any of the four thresholds by kind.
pub fn threshold(
    g: &Graph,
    kind: ThresholdKind,
    index: usize,
    opts: SolverOptions,
) -> Result<ThresholdValue, ThresholdError> {
    match kind {
        ThresholdKind::A | ThresholdKind::APrime => dominator_threshold(g, index, kind.starter(), opts),
        ThresholdKind::B | ThresholdKind::BPrime => staller_threshold(g, index, kind.starter(), opts),
    }
}

/// A table cell value; `Undecided` when the solver budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellValue {
    Value(ThresholdValue),
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub kind: ThresholdKind,
    pub index: usize,
    pub value: CellValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not evaluated because an input cell was undecided.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdTable {
    pub max_index: usize,
    pub cells: Vec<Cell>,
    pub checks: Vec<TableCheck>,
}

impl ThresholdTable {
    pub fn get(&self, kind: ThresholdKind, index: usize) -> Option<CellValue> {
        self.cells.iter().find(|c| c.kind == kind && c.index == index).map(|c| c.value)
    }

    fn value(&self, kind: ThresholdKind, index: usize) -> Option<ThresholdValue> {
        match self.get(kind, index)? {
            CellValue::Value(v) => Some(v),
            CellValue::Undecided => None,
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// All four thresholds for indices `1..=max_index`, plus the consistency
/// checks between them: the cross relations `b_ℓ >= b'_ℓ` and
/// `a'_ℓ >= a_ℓ`, monotonicity in the index, and for every pair of biases
/// `i, j <= max_index` the equivalences between the game winner and the
/// thresholds (`W(G,i,j) = D` iff `a_j <= i` iff `b_i >= j+1`, and likewise
/// for the S-game).
pub fn threshold_table(g: &Graph, max_index: usize, opts: SolverOptions) -> Result<ThresholdTable, ThresholdError> {
    if max_index == 0 {
        return Err(ThresholdError::ZeroIndex);
    }
    let mut cells = Vec::new();
    for kind in ThresholdKind::ALL {
        for index in 1..=max_index {
            let value = match threshold(g, kind, index, opts) {
                Ok(v) => CellValue::Value(v),
                Err(ThresholdError::Solve(_)) => CellValue::Undecided,
                Err(e) => return Err(e),
            };
            cells.push(Cell { kind, index, value });
        }
    }
    let mut table = ThresholdTable { max_index, cells, checks: Vec::new() };
    table.checks = table_checks(g, &table, opts);
    Ok(table)
}

fn check(name: String, outcome: Option<(bool, String)>) -> TableCheck {
    match outcome {
        Some((ok, detail)) => {
            TableCheck { name, status: if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail }
        }
        None => TableCheck { name, status: CheckStatus::Skipped, detail: String::from("undecided input") },
    }
}

fn table_checks(g: &Graph, t: &ThresholdTable, opts: SolverOptions) -> Vec<TableCheck> {
    use ThresholdKind::*;
    let mut out = Vec::new();
    let m = t.max_index;
    for l in 1..=m {
        out.push(check(
            format!("b_{l} >= b'_{l}"),
            t.value(B, l).zip(t.value(BPrime, l)).map(|(b, bp)| (b >= bp, format!("{b} vs {bp}"))),
        ));
        out.push(check(
            format!("a'_{l} >= a_{l}"),
            t.value(APrime, l).zip(t.value(A, l)).map(|(ap, a)| (ap >= a, format!("{ap} vs {a}"))),
        ));
    }
    for kind in ThresholdKind::ALL {
        for i in 2..=m {
            out.push(check(
                format!("{k}_{i} >= {k}_{j}", k = kind.label(), j = i - 1),
                t.value(kind, i).zip(t.value(kind, i - 1)).map(|(hi, lo)| (hi >= lo, format!("{hi} vs {lo}"))),
            ));
        }
    }
    for (starter, a_kind, b_kind) in [(Player::Dominator, A, B), (Player::Staller, APrime, BPrime)] {
        for i in 1..=m {
            for j in 1..=m {
                let cfg = GameConfig::new(i, j, starter).expect("positive");
                let name = format!("winner({}, {i}, {j}) consistent", starter.letter());
                let outcome = match (solve_with(g, cfg, opts), t.value(a_kind, j), t.value(b_kind, i)) {
                    (Ok(w), Some(a), Some(b)) => {
                        let d = w == Player::Dominator;
                        let by_a = a.at_most(i);
                        let by_b = !b.at_most(j);
                        Some((
                            d == by_a && d == by_b,
                            format!("winner {w}, {}_{j}={a}, {}_{i}={b}", a_kind.label(), b_kind.label()),
                        ))
                    }
                    _ => None,
                };
                out.push(check(name, outcome));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use ThresholdValue::*;

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn path_values() {
        let p5 = path(5).unwrap();
        let p6 = path(6).unwrap();
        let p4 = path(4).unwrap();
        assert_eq!(dominator_threshold(&p5, 1, Player::Staller, opts()), Ok(Finite(2)));
        assert_eq!(dominator_threshold(&p6, 1, Player::Staller, opts()), Ok(Finite(1)));
        assert_eq!(dominator_threshold(&p4, 2, Player::Staller, opts()), Ok(Infinite));
        assert_eq!(staller_threshold(&path(3).unwrap(), 1, Player::Dominator, opts()), Ok(Infinite));
    }

    #[test]
    fn grid_values() {
        assert_eq!(staller_threshold(&grid(2, 2).unwrap(), 1, Player::Dominator, opts()), Ok(Finite(3)));
        assert_eq!(staller_threshold(&grid(3, 2).unwrap(), 1, Player::Dominator, opts()), Ok(Finite(2)));
    }

    #[test]
    fn ordering_of_values() {
        assert!(Finite(100) < Infinite);
        assert!(Finite(2) < Finite(3));
        assert!(Finite(3).at_most(3));
        assert!(!Infinite.at_most(1000));
        assert_eq!(ThresholdKind::from_label("b'"), Some(ThresholdKind::BPrime));
    }

    #[test]
    fn table_for_p4() {
        let t = threshold_table(&path(4).unwrap(), 2, opts()).unwrap();
        assert_eq!(t.get(ThresholdKind::APrime, 1), Some(CellValue::Value(Finite(1))));
        assert_eq!(t.get(ThresholdKind::B, 1), Some(CellValue::Value(Finite(2))));
        assert_eq!(t.get(ThresholdKind::BPrime, 1), Some(CellValue::Value(Finite(2))));
        assert_eq!(t.get(ThresholdKind::APrime, 2), Some(CellValue::Value(Infinite)));
        assert!(t.all_checks_pass(), "{:?}", t.checks);
        assert!(t.checks.iter().all(|c| c.status == CheckStatus::Pass));
    }

    #[test]
    fn single_vertex() {
        let k1 = path(1).unwrap();
        for l in 1..=3 {
            assert_eq!(dominator_threshold(&k1, l, Player::Dominator, opts()), Ok(Finite(1)));
            // Staller opens by taking the only vertex.
            assert_eq!(dominator_threshold(&k1, l, Player::Staller, opts()), Ok(Infinite));
        }
    }

    #[test]
    fn c5_staller_start_within_bound() {
        let c5 = cycle(5).unwrap();
        let v = staller_threshold(&c5, 1, Player::Staller, opts()).unwrap();
        assert!(v.at_most(3));
        let t = threshold_table(&c5, 1, opts()).unwrap();
        assert!(t.all_checks_pass());
    }

    #[test]
    fn undecided_cells() {
        let g = grid(3, 3).unwrap();
        let t = threshold_table(&g, 1, SolverOptions::with_budget(1)).unwrap();
        assert!(t.cells.iter().any(|c| c.value == CellValue::Undecided));
        assert!(t.checks.iter().any(|c| c.status == CheckStatus::Skipped));
    }
}
