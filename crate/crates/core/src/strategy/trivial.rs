//! One-line strategies behind the trivial threshold bounds, plus a greedy
//! Staller used as a heuristic opponent.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    complete_move, dominator_completion, inapplicable, last_move_of, moves_made, staller_immediate_win, Strategy,
    StrategyError, Turn,
};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::{fan, Graph};
use crate::invariants::{domination_number, min_dominating_set};
use crate::star_partition::{k_star_partition, StarPartition};
use crate::vset::VertexSet;

/// Staller with bias at least `δ+1` in the S-game: claims `N[v]` for a vertex
/// `v` of minimum degree.
#[derive(Clone, Default)]
pub struct StallerMinDegree;

impl Strategy for StallerMinDegree {
    fn name(&self) -> String {
        "mindeg".into()
    }

    fn role(&self) -> Player {
        Player::Staller
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if cfg.starter != Player::Staller {
            return inapplicable("mindeg plays the S-game");
        }
        if cfg.b < g.min_degree() + 1 {
            return inapplicable(format!("mindeg needs b >= {}", g.min_degree() + 1));
        }
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        _: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        if let Some(win) = staller_immediate_win(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, win));
        }
        let v = (0..g.n()).min_by_key(|&v| g.degree(v)).expect("nonempty graph");
        Ok(complete_move(g, cfg, state, g.closed(v)))
    }
}

/// Dominator with bias at least `γ` in the D-game: claims a minimum
/// dominating set at once.
#[derive(Clone, Default)]
pub struct DominatorDominatingSet;

impl Strategy for DominatorDominatingSet {
    fn name(&self) -> String {
        "domset".into()
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if cfg.starter != Player::Dominator {
            return inapplicable("domset plays the D-game");
        }
        let gamma = domination_number(g);
        if cfg.a < gamma {
            return inapplicable(format!("domset needs a >= gamma = {gamma}"));
        }
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        _: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        if let Some(done) = dominator_completion(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, done));
        }
        Ok(complete_move(g, cfg, state, min_dominating_set(g)))
    }
}

/// Dominator with bias at least `b·Δ` against Staller bias `b <= δ`: after
/// each Staller move, claims every unplayed neighbour of her new vertices.
/// In the D-game the opening move is the lexicographically first vertices.
#[derive(Clone, Default)]
pub struct DominatorNeighborResponder;

impl Strategy for DominatorNeighborResponder {
    fn name(&self) -> String {
        "neighbor".into()
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if cfg.b > g.min_degree() {
            return inapplicable(format!("neighbor needs b <= delta = {}", g.min_degree()));
        }
        if cfg.a < cfg.b * g.max_degree() {
            return inapplicable(format!("neighbor needs a >= b * Delta = {}", cfg.b * g.max_degree()));
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
        if let Some(done) = dominator_completion(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, done));
        }
        let reply = last_move_of(history, Player::Staller).map_or(VertexSet::EMPTY, |s| g.neighbors_of_set(s));
        Ok(complete_move(g, cfg, state, reply))
    }
}

/// Dominator with bias `σ(G)` against Staller bias 1: fixes a `σ`-star
/// partition and, whenever Staller enters a star, claims the rest of it.
#[derive(Clone, Default)]
pub struct StarPartitionDominator {
    partition: Option<StarPartition>,
}

impl Strategy for StarPartitionDominator {
    fn name(&self) -> String {
        "starpart".into()
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if cfg.b != 1 {
            return inapplicable("starpart needs Staller bias 1");
        }
        match k_star_partition(g, cfg.a) {
            Some(p) => {
                self.partition = Some(p);
                Ok(())
            }
            None => inapplicable(format!("no {}-star partition", cfg.a)),
        }
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        history: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        let p = self.partition.as_ref().expect("prepared");
        let reply = last_move_of(history, Player::Staller)
            .and_then(|s| s.first())
            .and_then(|v| p.star_of(v))
            .map_or(VertexSet::EMPTY, |i| p.stars[i].vertices());
        Ok(complete_move(g, cfg, state, reply))
    }
}

/// Dominator on `F_{a,n} = C_{a+1} □ K_n` in the `(a, n+1)` D-game: first one
/// vertex in each of the layers `1..=a`, then one unplayed vertex in the
/// closed neighbourhood of every vertex left undominated.
#[derive(Clone)]
pub struct FanDominator {
    pub a: usize,
    pub n: usize,
}

impl Strategy for FanDominator {
    fn name(&self) -> String {
        format!("fan:{}:{}", self.a, self.n)
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        match fan(self.a, self.n) {
            Ok(f) if f == *g => {}
            _ => return inapplicable(format!("graph is not F_{{{},{}}}", self.a, self.n)),
        }
        if cfg.starter != Player::Dominator || cfg.a != self.a || cfg.b != self.n + 1 {
            return inapplicable(format!("fan plays the ({}, {}) D-game", self.a, self.n + 1));
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
        if moves_made(history, Player::Dominator) == 0 {
            return Ok(complete_move(g, cfg, state, (1..=self.a).map(|x| x * self.n)));
        }
        if let Some(done) = dominator_completion(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, done));
        }
        let unplayed = state.unplayed(g);
        let mut dom = state.dom;
        let mut picks = Vec::new();
        for u in g.vertices().difference(g.dominated_by(state.dom)) {
            if g.dominated_by(dom).contains(u) {
                continue;
            }
            let options = g.neighbors(u).union(VertexSet::singleton(u)).intersection(unplayed);
            if let Some(x) = g.neighbors(u).intersection(unplayed).first().or(options.first()) {
                dom.insert(x);
                picks.push(x);
            }
        }
        Ok(complete_move(g, cfg, state, picks))
    }
}

/// Heuristic Staller: wins at once when possible, otherwise attacks the
/// Dominator-free closed neighbourhood with the fewest unclaimed vertices.
#[derive(Clone, Default)]
pub struct GreedyStaller;

impl Strategy for GreedyStaller {
    fn name(&self) -> String {
        "greedy".into()
    }

    fn role(&self) -> Player {
        Player::Staller
    }

    fn prepare(&mut self, _: &Graph, _: &GameConfig) -> Result<(), StrategyError> {
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        _: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        if let Some(win) = staller_immediate_win(g, cfg, state) {
            return Ok(complete_move(g, cfg, state, win));
        }
        let target = (0..g.n())
            .map(|v| g.closed(v))
            .filter(|nv| nv.is_disjoint(state.dom))
            .min_by_key(|nv| nv.difference(state.sta).len());
        Ok(complete_move(g, cfg, state, target.map_or(VertexSet::EMPTY, |nv| nv.difference(state.sta))))
    }
}
