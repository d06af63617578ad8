use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{complete_move, inapplicable, moves_made, staller_immediate_win, Strategy, StrategyError, Turn};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Staller in the `(k-1, k)` game on graphs of large order.
///
/// With `P = Δ-k+1`, she fixes a pool `A` of `k^P` vertices with pairwise
/// disjoint closed neighbourhoods that Dominator has not touched. Part 1
/// takes `k^(P-1)` moves and claims the pool, `k` vertices a move. Part `i`
/// takes `k^(P-i)` moves and adds one vertex to each of `k^(P-i+1)`
/// neighbourhoods that still hold `i-1` of her vertices and none of his.
/// One such neighbourhood survives every part, and her last move completes
/// it. Each turn first checks for a closed neighbourhood she can finish at
/// once, which also covers `Δ < k`.
///
/// In the D-game the pool is chosen after Dominator's opening, so it avoids
/// his vertices and the game is played as an S-game on the rest.
#[derive(Clone)]
pub struct LargeOrderStaller {
    k: usize,
    pool: Option<Vec<usize>>,
    part: usize,
    moves_left: usize,
    targets: Vec<usize>,
    served: VertexSet,
}

impl LargeOrderStaller {
    pub fn new(k: usize) -> Self {
        LargeOrderStaller { k, pool: None, part: 0, moves_left: 0, targets: Vec::new(), served: VertexSet::EMPTY }
    }

    fn exponent(&self, g: &Graph) -> usize {
        (g.max_degree() + 1).saturating_sub(self.k)
    }

    /// Order needed for the strategy to be guaranteed to win.
    pub fn required_order(&self, g: &Graph, starter: Player) -> Option<usize> {
        let (k, delta) = (self.k, g.max_degree());
        let block = k.checked_pow(self.exponent(g) as u32)?;
        let spread = delta * delta + 1;
        match (starter, delta < k) {
            (Player::Staller, true) => Some(0),
            (Player::Staller, false) => block.checked_mul(spread),
            (Player::Dominator, true) => Some((k - 1) * (delta + 1) + 1),
            (Player::Dominator, false) => (block + 1).checked_mul(spread),
        }
    }

    fn build_pool(&self, g: &Graph, state: &GameState) -> Vec<usize> {
        let want = self.k.pow(self.exponent(g) as u32);
        let mut pool = Vec::new();
        let mut used = VertexSet::EMPTY;
        for s in 0..g.n() {
            if pool.len() == want {
                break;
            }
            let ns = g.closed(s);
            if ns.is_disjoint(state.played()) && ns.is_disjoint(used) {
                pool.push(s);
                used = used.union(ns);
            }
        }
        pool
    }

    fn alive(g: &Graph, state: &GameState, s: usize, owned: usize) -> bool {
        let ns = g.closed(s);
        ns.is_disjoint(state.dom) && ns.intersection(state.sta).len() >= owned
    }

    fn start_part(&mut self, g: &Graph, state: &GameState, part: usize) {
        let p = self.exponent(g);
        self.part = part;
        self.moves_left = self.k.pow((p - part) as u32);
        self.served = VertexSet::EMPTY;
        let width = self.k.pow((p - part + 1) as u32);
        self.targets =
            self.pool.iter().flatten().copied().filter(|&s| Self::alive(g, state, s, part - 1)).take(width).collect();
    }
}

impl Strategy for LargeOrderStaller {
    fn name(&self) -> String {
        format!("large:{}", self.k)
    }

    fn role(&self) -> Player {
        Player::Staller
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        let k = self.k;
        if k < 2 || cfg.a != k - 1 || cfg.b != k {
            return inapplicable(format!("large:{k} plays the ({}, {k}) game with k >= 2", k.saturating_sub(1)));
        }
        match self.required_order(g, cfg.starter) {
            Some(need) if g.n() >= need => {}
            Some(need) => return inapplicable(format!("large:{k} needs order at least {need}, graph has {}", g.n())),
            None => return inapplicable(format!("large:{k} order bound overflows")),
        }
        *self = LargeOrderStaller::new(k);
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
        let p = self.exponent(g);
        if p == 0 {
            return Ok(complete_move(g, cfg, state, None));
        }
        if self.pool.is_none() {
            self.pool = Some(self.build_pool(g, state));
            self.part = 1;
            self.moves_left = self.k.pow((p - 1) as u32);
        }
        let done = moves_made(history, Player::Staller);
        while self.moves_left == 0 && self.part < p {
            let next = self.part + 1;
            self.start_part(g, state, next);
        }
        let unplayed = state.unplayed(g);
        let mut picks = Vec::new();
        if self.moves_left == 0 {
            // Every part is over: complete a surviving neighbourhood.
            let x = self
                .pool
                .iter()
                .flatten()
                .copied()
                .filter(|&s| g.closed(s).is_disjoint(state.dom))
                .max_by_key(|&s| (g.closed(s).intersection(state.sta).len(), core::cmp::Reverse(s)));
            if let Some(x) = x {
                picks.extend(g.closed(x).intersection(unplayed));
            }
        } else if self.part == 1 {
            let pool = self.pool.as_deref().unwrap_or_default();
            picks.extend(pool.iter().skip(done * self.k).take(self.k).copied());
        } else {
            for &s in &self.targets {
                if picks.len() == self.k {
                    break;
                }
                if self.served.contains(s) || !g.closed(s).is_disjoint(state.dom) {
                    continue;
                }
                if let Some(v) = g.closed(s).intersection(unplayed).first() {
                    self.served.insert(s);
                    picks.push(v);
                }
            }
        }
        self.moves_left = self.moves_left.saturating_sub(1);
        Ok(complete_move(g, cfg, state, picks))
    }
}
