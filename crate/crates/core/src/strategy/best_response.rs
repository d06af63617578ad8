use alloc::format;
use alloc::string::String;

use super::{Strategy, StrategyError, Turn};
use crate::game::{is_terminal, legal_moves, GameConfig, GameState, Player};
use crate::graph::Graph;
use crate::solver::{Solver, SolverMemo, SolverOptions};
use crate::vset::VertexSet;

/// Optimal play from the exact solver: the lexicographically first move
/// leading to a position won by `role`, or the first legal move when every
/// move loses. The solver table is kept for the whole match.
#[derive(Clone)]
pub struct BestResponse {
    role: Player,
    opts: SolverOptions,
    memo: SolverMemo,
}

impl BestResponse {
    pub fn new(role: Player) -> Self {
        Self::with_options(role, SolverOptions::default())
    }

    pub fn with_options(role: Player, opts: SolverOptions) -> Self {
        BestResponse { role, opts, memo: SolverMemo::default() }
    }
}

impl Strategy for BestResponse {
    fn name(&self) -> String {
        format!("best-{}", self.role.letter())
    }

    fn role(&self) -> Player {
        self.role
    }

    fn prepare(&mut self, _g: &Graph, _cfg: &GameConfig) -> Result<(), StrategyError> {
        self.memo = SolverMemo::default();
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        _history: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        let memo = core::mem::take(&mut self.memo);
        let mut solver = Solver::with_memo(g, *cfg, self.opts, memo);
        let moves = legal_moves(g, state, cfg).map_err(|e| StrategyError::Internal(format!("{e}")))?;
        let mut pick = moves[0];
        if solver.winner(state)? == self.role {
            for mv in moves {
                let child = state.play_unchecked(mv);
                let w = match is_terminal(g, &child) {
                    Some(w) => w,
                    None => solver.winner(&child)?,
                };
                if w == self.role {
                    pick = mv;
                    break;
                }
            }
        }
        self.memo = solver.into_memo();
        Ok(pick)
    }
}
