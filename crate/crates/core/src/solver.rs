//! Exact solver for the biased Maker-Breaker domination game.
//!
//! Binary AND/OR search over positions `(dom, sta, to_move)` with a
//! transposition table. The game stops as soon as either player's goal is
//! met. Two value-preserving reductions are applied by default:
//!
//! * a mover who can finish the game in the current move does so;
//! * a vertex is *dead* once every closed neighbourhood containing it meets
//!   Dominator's set. Dead vertices cannot affect either goal, so when at
//!   least `k` live vertices remain only live `k`-sets are tried, and
//!   otherwise all live vertices are taken together with dead filler.
//!
//! Both can be switched off through [`SolverOptions`]; the reference
//! evaluator in [`reference`] uses neither and is the cross-check.

use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::game::{is_terminal, GameConfig, GameState, Outcome, Player};
use crate::graph::Graph;
use crate::invariants::min_dominating_subset_bounded;
use crate::symmetry::automorphisms;
use crate::vset::{for_each_subset_of_size, VertexSet};

/// Default cap on expanded positions.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Maximum number of positions expanded before giving up.
    pub budget: u64,
    /// End the game as soon as Dominator's set dominates. When off, play
    /// continues until the board is full or Staller wins.
    pub early_dominator_stop: bool,
    /// Apply the immediate-win and dead-vertex reductions.
    pub reductions: bool,
    /// At the root, try one move per orbit of the automorphism group.
    pub root_symmetry: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { budget: DEFAULT_BUDGET, early_dominator_stop: true, reductions: true, root_symmetry: false }
    }
}

impl SolverOptions {
    pub fn with_budget(budget: u64) -> Self {
        SolverOptions { budget, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    /// The node budget ran out before the value was known.
    BudgetExceeded { budget: u64 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::BudgetExceeded { budget } => {
                write!(f, "undecided: solver budget of {budget} positions exhausted")
            }
        }
    }
}

impl core::error::Error for SolveError {}

/// A transposition table detached from its solver, so it can be carried
/// between solver instances for the same graph, configuration and options.
#[derive(Debug, Clone, Default)]
pub struct SolverMemo(HashMap<(u64, u64, bool), bool>);

/// A solver bound to one graph and one bias configuration. The
/// transposition table persists across queries, so repeated calls on
/// positions of the same game are cheap.
pub struct Solver<'g> {
    g: &'g Graph,
    cfg: GameConfig,
    opts: SolverOptions,
    memo: HashMap<(u64, u64, bool), bool>,
    expanded: u64,
    reach: usize,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, cfg: GameConfig, opts: SolverOptions) -> Self {
        Solver { g, cfg, opts, memo: HashMap::new(), expanded: 0, reach: g.max_degree() + 1 }
    }

    /// A solver that starts from a table filled by an earlier solver with the
    /// same graph, configuration and options.
    pub fn with_memo(g: &'g Graph, cfg: GameConfig, opts: SolverOptions, memo: SolverMemo) -> Self {
        let mut s = Self::new(g, cfg, opts);
        s.memo = memo.0;
        s
    }

    pub fn into_memo(self) -> SolverMemo {
        SolverMemo(self.memo)
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn config(&self) -> GameConfig {
        self.cfg
    }

    /// Positions expanded so far (cumulative over all queries).
    pub fn expanded(&self) -> u64 {
        self.expanded
    }

    /// Winner of the game from its initial position.
    pub fn solve(&mut self) -> Result<Outcome, SolveError> {
        let root = self.cfg.initial_state();
        if self.opts.root_symmetry {
            self.solve_with_symmetry(root)
        } else {
            self.winner(&root)
        }
    }

    /// Winner under optimal play from `state`.
    pub fn winner(&mut self, state: &GameState) -> Result<Outcome, SolveError> {
        let mover = state.to_move;
        Ok(if self.mover_wins(state)? { mover } else { mover.other() })
    }

    fn terminal(&self, state: &GameState) -> Option<Outcome> {
        if self.opts.early_dominator_stop {
            is_terminal(self.g, state)
        } else if (0..self.g.n()).any(|v| self.g.closed(v).is_subset(state.sta)) {
            Some(Player::Staller)
        } else if state.unplayed(self.g).is_empty() {
            Some(Player::Dominator)
        } else {
            None
        }
    }

    fn mover_wins(&mut self, state: &GameState) -> Result<bool, SolveError> {
        if let Some(w) = self.terminal(state) {
            return Ok(w == state.to_move);
        }
        let key = (state.dom.bits(), state.sta.bits(), state.to_move == Player::Dominator);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.expanded += 1;
        if self.expanded > self.opts.budget {
            return Err(SolveError::BudgetExceeded { budget: self.opts.budget });
        }
        let result = self.search(state)?;
        self.memo.insert(key, result);
        Ok(result)
    }

    fn search(&mut self, state: &GameState) -> Result<bool, SolveError> {
        let k = state.move_size(self.g, &self.cfg);
        let unplayed = state.unplayed(self.g);
        if self.opts.reductions {
            let undominated = self.g.vertices().difference(self.g.dominated_by(state.dom));
            if self.immediate_win(state, k, undominated) {
                return Ok(true);
            }
            let live = self.g.dominated_by(undominated).intersection(unplayed);
            if live.len() < k {
                let filler = unplayed.difference(live).take_smallest(k - live.len());
                let child = state.play_unchecked(live.union(filler));
                return Ok(!self.mover_wins(&child)?);
            }
            return self.try_moves(state, live, k);
        }
        self.try_moves(state, unplayed, k)
    }

    fn try_moves(&mut self, state: &GameState, pool: VertexSet, k: usize) -> Result<bool, SolveError> {
        let mut err = None;
        let found = for_each_subset_of_size(pool, k, |mv| match self.mover_wins(&state.play_unchecked(mv)) {
            Ok(child_mover_wins) => !child_mover_wins,
            Err(e) => {
                err = Some(e);
                true
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(found),
        }
    }

    fn immediate_win(&self, state: &GameState, k: usize, undominated: VertexSet) -> bool {
        match state.to_move {
            Player::Staller => undominated.iter().any(|v| self.g.closed(v).difference(state.sta).len() <= k),
            Player::Dominator => {
                if !self.opts.early_dominator_stop {
                    return false;
                }
                if undominated.len() > k * self.reach {
                    return false;
                }
                min_dominating_subset_bounded(self.g, undominated, state.unplayed(self.g), k).is_some()
            }
        }
    }

    /// Root search trying one representative per orbit of moves under the
    /// automorphism group. Falls back to the plain search when the group is
    /// too large to list.
    fn solve_with_symmetry(&mut self, root: GameState) -> Result<Outcome, SolveError> {
        let Some(autos) = automorphisms(self.g, 50_000) else {
            return self.winner(&root);
        };
        if let Some(w) = self.terminal(&root) {
            return Ok(w);
        }
        let k = root.move_size(self.g, &self.cfg);
        let mut reps: Vec<VertexSet> = Vec::new();
        for_each_subset_of_size(root.unplayed(self.g), k, |mv| {
            let canonical = autos
                .iter()
                .map(|p| mv.iter().map(|v| p[v]).collect::<VertexSet>())
                .all(|img| img.bits().reverse_bits() <= mv.bits().reverse_bits());
            if canonical {
                reps.push(mv);
            }
            false
        });
        let mover = root.to_move;
        for mv in reps {
            if !self.mover_wins(&root.play_unchecked(mv))? {
                return Ok(mover);
            }
        }
        Ok(mover.other())
    }
}

/// Winner of the game on `g` with configuration `cfg` under optimal play,
/// using default options.
pub fn solve(g: &Graph, cfg: GameConfig) -> Result<Outcome, SolveError> {
    Solver::new(g, cfg, SolverOptions::default()).solve()
}

/// [`solve`] with explicit options.
pub fn solve_with(g: &Graph, cfg: GameConfig, opts: SolverOptions) -> Result<Outcome, SolveError> {
    Solver::new(g, cfg, opts).solve()
}

/// Plain minimax over [`crate::game::legal_moves`]: no memoisation, no
/// reductions. Exponential; meant for cross-checking on tiny graphs.
pub mod reference {
    use crate::game::{apply_move, is_terminal, legal_moves, GameConfig, GameState, Outcome};
    use crate::graph::Graph;

    pub fn winner(g: &Graph, cfg: &GameConfig, state: &GameState) -> Outcome {
        if let Some(w) = is_terminal(g, state) {
            return w;
        }
        let mover = state.to_move;
        let moves = legal_moves(g, state, cfg).expect("non-terminal");
        for mv in moves {
            let next = apply_move(g, state, cfg, mv).expect("legal");
            if winner(g, cfg, &next) == mover {
                return mover;
            }
        }
        mover.other()
    }

    pub fn solve(g: &Graph, cfg: &GameConfig) -> Outcome {
        winner(g, cfg, &cfg.initial_state())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::all_graphs;
    use crate::graph::*;

    #[test]
    fn known_small_games() {
        let p6 = path(6).unwrap();
        assert_eq!(solve(&p6, GameConfig::d_game(1, 1)), Ok(Player::Dominator));
        let p3 = path(3).unwrap();
        assert_eq!(solve(&p3, GameConfig::s_game(1, 1)), Ok(Player::Staller));
        let c4 = grid(2, 2).unwrap();
        assert_eq!(solve(&c4, GameConfig::d_game(1, 2)), Ok(Player::Dominator));
        assert_eq!(solve(&c4, GameConfig::d_game(1, 3)), Ok(Player::Staller));
        let k1 = path(1).unwrap();
        assert_eq!(solve(&k1, GameConfig::d_game(1, 1)), Ok(Player::Dominator));
        assert_eq!(solve(&k1, GameConfig::s_game(1, 1)), Ok(Player::Staller));
    }

    #[test]
    fn budget_is_reported() {
        let g = grid(4, 3).unwrap();
        let r = solve_with(&g, GameConfig::s_game(1, 1), SolverOptions::with_budget(3));
        assert_eq!(r, Err(SolveError::BudgetExceeded { budget: 3 }));
    }

    #[test]
    fn agrees_with_reference_up_to_five_vertices() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                for a in 1..=3 {
                    for b in 1..=3 {
                        for cfg in [GameConfig::d_game(a, b), GameConfig::s_game(a, b)] {
                            assert_eq!(solve(&g, cfg).unwrap(), reference::solve(&g, &cfg), "{g:?} {cfg:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn option_variants_agree() {
        let variants = [
            SolverOptions { early_dominator_stop: false, ..Default::default() },
            SolverOptions { reductions: false, ..Default::default() },
            SolverOptions { root_symmetry: true, ..Default::default() },
        ];
        for g in all_graphs(6).iter().step_by(3) {
            for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                for cfg in [GameConfig::d_game(a, b), GameConfig::s_game(a, b)] {
                    let base = solve(g, cfg).unwrap();
                    for opts in variants {
                        assert_eq!(solve_with(g, cfg, opts).unwrap(), base, "{g:?} {cfg:?} {opts:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn repeated_queries_are_stable() {
        let g = cycle(8).unwrap();
        let cfg = GameConfig::s_game(1, 2);
        let mut s = Solver::new(&g, cfg, SolverOptions::default());
        let first = s.solve().unwrap();
        assert_eq!(s.solve().unwrap(), first);
        assert_eq!(solve(&g, cfg).unwrap(), first);
    }
}
