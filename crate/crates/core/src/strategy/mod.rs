//! Executable strategies and the match driver.
//!
//! A [`Strategy`] plays one side. [`Strategy::prepare`] checks that it applies
//! to the graph and configuration and clears any per-match memory;
//! [`Strategy::choose`] returns the next move. Arbitrary choices resolve to
//! the lexicographically first legal option, so every strategy is
//! deterministic.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::game::{apply_move, is_terminal, GameConfig, GameError, GameState, Outcome, Player};
use crate::graph::Graph;
use crate::invariants::min_dominating_subset_bounded;
use crate::solver::SolveError;
use crate::vset::VertexSet;

mod best_response;
mod grid;
mod large_order;
mod line_graph;
mod local;
mod pairing;
mod tree;
mod trivial;

pub use best_response::BestResponse;
pub use grid::{GridStaller12, GridStaller22};
pub use large_order::LargeOrderStaller;
pub use line_graph::SdrLineGraphDominator;
pub use local::LocalDominationDominator;
pub use pairing::PairingDominator;
pub use tree::TreeStaller;
pub use trivial::{
    DominatorDominatingSet, DominatorNeighborResponder, FanDominator, GreedyStaller, StallerMinDegree,
    StarPartitionDominator,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyError {
    Inapplicable(String),
    Solve(SolveError),
    /// A state the strategy's construction rules out was reached.
    Internal(String),
}

impl From<SolveError> for StrategyError {
    fn from(e: SolveError) -> Self {
        StrategyError::Solve(e)
    }
}

impl fmt::Display for StrategyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyError::Inapplicable(why) => write!(f, "not applicable: {why}"),
            StrategyError::Solve(e) => write!(f, "{e}"),
            StrategyError::Internal(why) => write!(f, "internal error: {why}"),
        }
    }
}

impl core::error::Error for StrategyError {}

pub(crate) fn inapplicable<T>(why: impl Into<String>) -> Result<T, StrategyError> {
    Err(StrategyError::Inapplicable(why.into()))
}

/// One move of a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Turn {
    pub player: Player,
    pub mv: VertexSet,
}

pub trait Strategy: StrategyClone {
    /// Name with parameters, as used in transcripts and error messages.
    fn name(&self) -> String;

    fn role(&self) -> Player;

    /// Checks applicability to `(g, cfg)` and resets per-match memory.
    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError>;

    /// The next move. `history` lists every earlier move of the match.
    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        history: &[Turn],
    ) -> Result<VertexSet, StrategyError>;
}

pub trait StrategyClone {
    fn clone_box(&self) -> Box<dyn Strategy>;
}

impl<T: Strategy + Clone + 'static> StrategyClone for T {
    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

impl Clone for Box<dyn Strategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchRecord {
    pub turns: Vec<Turn>,
    pub winner: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchError {
    WrongRole { strategy: String, expected: Player },
    Strategy { strategy: String, error: StrategyError },
    IllegalMove { strategy: String, mv: VertexSet, error: GameError },
}

impl fmt::Display for MatchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchError::WrongRole { strategy, expected } => {
                write!(f, "strategy {strategy} cannot play as {expected}")
            }
            MatchError::Strategy { strategy, error } => write!(f, "strategy {strategy}: {error}"),
            MatchError::IllegalMove { strategy, mv, error } => {
                write!(f, "strategy {strategy} returned illegal move {mv}: {error}")
            }
        }
    }
}

impl core::error::Error for MatchError {}

/// Plays a full match and returns every move plus the winner.
pub fn play_match(
    g: &Graph,
    cfg: &GameConfig,
    dominator: &mut dyn Strategy,
    staller: &mut dyn Strategy,
) -> Result<MatchRecord, MatchError> {
    for (s, role) in [(&*dominator, Player::Dominator), (&*staller, Player::Staller)] {
        if s.role() != role {
            return Err(MatchError::WrongRole { strategy: s.name(), expected: role });
        }
    }
    dominator.prepare(g, cfg).map_err(|error| MatchError::Strategy { strategy: dominator.name(), error })?;
    staller.prepare(g, cfg).map_err(|error| MatchError::Strategy { strategy: staller.name(), error })?;
    let mut state = cfg.initial_state();
    let mut turns = Vec::new();
    loop {
        if let Some(winner) = is_terminal(g, &state) {
            return Ok(MatchRecord { turns, winner });
        }
        let mover: &mut dyn Strategy = match state.to_move {
            Player::Dominator => &mut *dominator,
            Player::Staller => &mut *staller,
        };
        let mv = mover
            .choose(g, cfg, &state, &turns)
            .map_err(|error| MatchError::Strategy { strategy: mover.name(), error })?;
        let next = apply_move(g, &state, cfg, mv).map_err(|error| MatchError::IllegalMove {
            strategy: mover.name(),
            mv,
            error,
        })?;
        turns.push(Turn { player: state.to_move, mv });
        state = next;
    }
}

/// Plays `strategy` against every possible opponent move sequence. Returns
/// the first transcript the strategy loses, or `None` if it wins them all.
/// Every strategy move is checked for legality along the way.
pub fn exhaustive_check(g: &Graph, cfg: &GameConfig, strategy: &dyn Strategy) -> Result<Option<Vec<Turn>>, MatchError> {
    let mut s = strategy.clone_box();
    s.prepare(g, cfg).map_err(|error| MatchError::Strategy { strategy: s.name(), error })?;
    let mut turns = Vec::new();
    explore(g, cfg, s, cfg.initial_state(), &mut turns)
}

fn explore(
    g: &Graph,
    cfg: &GameConfig,
    mut s: Box<dyn Strategy>,
    state: GameState,
    turns: &mut Vec<Turn>,
) -> Result<Option<Vec<Turn>>, MatchError> {
    if let Some(w) = is_terminal(g, &state) {
        return Ok((w != s.role()).then(|| turns.clone()));
    }
    if state.to_move == s.role() {
        let mv = s.choose(g, cfg, &state, turns).map_err(|error| MatchError::Strategy { strategy: s.name(), error })?;
        let next = apply_move(g, &state, cfg, mv).map_err(|error| MatchError::IllegalMove {
            strategy: s.name(),
            mv,
            error,
        })?;
        turns.push(Turn { player: state.to_move, mv });
        let r = explore(g, cfg, s, next, turns);
        turns.pop();
        return r;
    }
    let moves = crate::game::legal_moves(g, &state, cfg).expect("not terminal");
    for mv in moves {
        turns.push(Turn { player: state.to_move, mv });
        let r = explore(g, cfg, s.clone_box(), state.play_unchecked(mv), turns);
        turns.pop();
        if let Some(lost) = r? {
            return Ok(Some(lost));
        }
    }
    Ok(None)
}

/// Extends `preferred` (taken in order, skipping played or repeated
/// vertices) with the lexicographically first unplayed vertices until the
/// move has the required size.
pub(crate) fn complete_move<I>(g: &Graph, cfg: &GameConfig, state: &GameState, preferred: I) -> VertexSet
where
    I: IntoIterator<Item = usize>,
{
    let k = state.move_size(g, cfg);
    let unplayed = state.unplayed(g);
    let mut mv = VertexSet::EMPTY;
    for v in preferred {
        if mv.len() == k {
            break;
        }
        if unplayed.contains(v) {
            mv.insert(v);
        }
    }
    let filler = unplayed.difference(mv).take_smallest(k - mv.len());
    mv.union(filler)
}

/// Staller's immediate win: the missing part of the first closed
/// neighbourhood free of Dominator's vertices that she can complete now.
pub(crate) fn staller_immediate_win(g: &Graph, cfg: &GameConfig, state: &GameState) -> Option<VertexSet> {
    let k = state.move_size(g, cfg);
    (0..g.n())
        .map(|v| g.closed(v))
        .find(|nv| nv.is_disjoint(state.dom) && nv.difference(state.sta).len() <= k)
        .map(|nv| nv.difference(state.sta))
}

/// Dominator's immediate win: a smallest set of unplayed vertices completing
/// a dominating set, if it fits in one move.
pub(crate) fn dominator_completion(g: &Graph, cfg: &GameConfig, state: &GameState) -> Option<VertexSet> {
    let k = state.move_size(g, cfg);
    let open = g.vertices().difference(g.dominated_by(state.dom));
    min_dominating_subset_bounded(g, open, state.unplayed(g), k)
}

/// The opponent's most recent move.
pub(crate) fn last_move_of(history: &[Turn], p: Player) -> Option<VertexSet> {
    history.iter().rev().find(|t| t.player == p).map(|t| t.mv)
}

/// Number of moves `p` has made so far.
pub(crate) fn moves_made(history: &[Turn], p: Player) -> usize {
    history.iter().filter(|t| t.player == p).count()
}

pub(crate) fn require_config(cfg: &GameConfig, a: usize, b: usize, what: &str) -> Result<(), StrategyError> {
    if cfg.a != a || cfg.b != b {
        return inapplicable(format!("{what} needs biases ({a},{b}), got ({},{})", cfg.a, cfg.b));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
