//! Staller strategies on finite grids `P_m □ P_n`. Grid vertex `(i,j)`, with
//! `1 <= i <= m` and `1 <= j <= n`, has id `(i-1)·n + (j-1)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    complete_move, inapplicable, last_move_of, moves_made, require_config, staller_immediate_win, Strategy,
    StrategyError, Turn,
};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::{grid, Graph};
use crate::vset::VertexSet;

fn check_grid(g: &Graph, m: usize, n: usize) -> Result<(), StrategyError> {
    match grid(m, n) {
        Ok(h) if h == *g => Ok(()),
        _ => inapplicable(format!("graph is not the {m}x{n} grid")),
    }
}

/// Staller in the `(2,2)` S-game on `P_m □ P_n` with `m = 4k+1`: her `i`-th
/// move is `(4i-2,1), (4i,1)` for `i <= k`, each forcing two blocks, and her
/// next move completes `N[(4k+1,1)]`. Any unanswered threat is punished at
/// once.
#[derive(Clone)]
pub struct GridStaller22 {
    pub m: usize,
    pub n: usize,
}

impl GridStaller22 {
    fn id(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }
}

impl Strategy for GridStaller22 {
    fn name(&self) -> String {
        format!("grid22:{}:{}", self.m, self.n)
    }

    fn role(&self) -> Player {
        Player::Staller
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if self.m % 4 != 1 || self.m < 5 || self.n < 2 {
            return inapplicable("grid22 needs m = 4k+1 with k >= 1 and n >= 2");
        }
        check_grid(g, self.m, self.n)?;
        require_config(cfg, 2, 2, "grid22")?;
        if cfg.starter != Player::Staller {
            return inapplicable("grid22 plays the S-game");
        }
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        history: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        if let Some(win) = staller_immediate_win(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, win));
        }
        let i = moves_made(history, Player::Staller) + 1;
        let k = (self.m - 1) / 4;
        let script = if i <= k { Vec::from([self.id(4 * i - 2, 1), self.id(4 * i, 1)]) } else { Vec::new() };
        Ok(complete_move(g, cfg, state, script))
    }
}

/// Staller in the `(1,2)` D-game on `P_m □ P_n`, `m >= 3`, `n >= 2`. After
/// Dominator's first vertex `v` she claims a corner `c` and a neighbour `c'`
/// of it with `v` outside `N[c] ∪ N[c']`, which leaves two disjoint threats.
/// The positions without such a pair are `v` in the middle row of the 3x2
/// grid and `v = (2,2)` in the 3x3 grid; these have their own replies.
#[derive(Clone)]
pub struct GridStaller12 {
    pub m: usize,
    pub n: usize,
}

impl GridStaller12 {
    fn id(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }

    fn opening(&self, g: &Graph, v: usize) -> Vec<usize> {
        let (m, n) = (self.m, self.n);
        if (m, n) == (3, 2) && v == self.id(2, 1) {
            return Vec::from([self.id(1, 2), self.id(2, 2)]);
        }
        if (m, n) == (3, 2) && v == self.id(2, 2) {
            return Vec::from([self.id(1, 1), self.id(2, 1)]);
        }
        if (m, n) == (3, 3) && v == self.id(2, 2) {
            return Vec::from([self.id(1, 1), self.id(1, 2)]);
        }
        let corners = [
            ((1, 1), [(1, 2), (2, 1)]),
            ((1, n), [(1, n - 1), (2, n)]),
            ((m, 1), [(m, 2), (m - 1, 1)]),
            ((m, n), [(m, n - 1), (m - 1, n)]),
        ];
        for ((ci, cj), nbrs) in corners {
            let c = self.id(ci, cj);
            for (di, dj) in nbrs {
                let d = self.id(di, dj);
                if !g.closed(c).union(g.closed(d)).contains(v) {
                    return Vec::from([c, d]);
                }
            }
        }
        Vec::new()
    }
}

impl Strategy for GridStaller12 {
    fn name(&self) -> String {
        format!("grid12:{}:{}", self.m, self.n)
    }

    fn role(&self) -> Player {
        Player::Staller
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if self.m < 3 || self.n < 2 {
            return inapplicable("grid12 needs m >= 3 and n >= 2");
        }
        check_grid(g, self.m, self.n)?;
        require_config(cfg, 1, 2, "grid12")?;
        if cfg.starter != Player::Dominator {
            return inapplicable("grid12 plays the D-game");
        }
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        history: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        if let Some(win) = staller_immediate_win(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, win));
        }
        let first = moves_made(history, Player::Staller) == 0;
        let v = last_move_of(history, Player::Dominator).and_then(|d| d.first());
        let script = match (first, v) {
            (true, Some(v)) => self.opening(g, v),
            _ => Vec::new(),
        };
        Ok(complete_move(g, cfg, state, script))
    }
}
