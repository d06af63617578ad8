use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{complete_move, dominator_completion, inapplicable, last_move_of, Strategy, StrategyError, Turn};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::Graph;
use crate::local_domination::{local_domination_at, local_domination_number, local_target};
use crate::vset::VertexSet;

/// Dominator with bias `a >= γ̃_ℓ(G)` against Staller bias `ℓ <= δ(G)`.
///
/// After each Staller move `S` he makes sure every vertex of `N(S)` and every
/// degree-`ℓ` vertex of `S` is dominated. He takes a minimum `R ⊆ V \ S`
/// dominating that target and plays it with three substitutions: vertices he
/// already owns are skipped, a Staller vertex outside `N(S)` is dropped, and
/// a Staller vertex `y ∈ N(S)` that is still undominated is replaced by an
/// unplayed vertex of `N(y) \ S`. Leftover picks are the lexicographically
/// first unplayed vertices, which is also his whole opening in a D-game.
#[derive(Clone, Default)]
pub struct LocalDominationDominator;

impl Strategy for LocalDominationDominator {
    fn name(&self) -> String {
        "local".into()
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        let ell = cfg.b;
        if g.n() == 0 || g.min_degree() < ell {
            return inapplicable(format!("local needs minimum degree at least {ell}"));
        }
        let value = local_domination_number(g, ell).map_err(|e| StrategyError::Inapplicable(format!("{e}")))?.value;
        if cfg.a < value {
            return inapplicable(format!("local needs a >= {value}"));
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
        let Some(s) = last_move_of(history, Player::Staller) else {
            return Ok(complete_move(g, cfg, state, None));
        };
        let r = local_domination_at(g, s).map_err(|e| StrategyError::Internal(format!("{e}")))?;
        let reach = g.neighbors_of_set(s);
        let dominated = g.dominated_by(state.dom);
        let unplayed = state.unplayed(g);
        let mut picks: Vec<usize> = Vec::new();
        for x in r {
            if state.dom.contains(x) {
                continue;
            }
            if !state.sta.contains(x) {
                picks.push(x);
                continue;
            }
            if !reach.contains(x) || dominated.contains(x) {
                continue;
            }
            let z = g.neighbors(x).difference(s).intersection(unplayed).iter().find(|z| !picks.contains(z));
            if let Some(z) = z {
                picks.push(z);
            }
        }
        debug_assert!({
            let after = state.dom.union(picks.iter().copied().collect());
            local_target(g, s).is_subset(g.dominated_by(after))
        });
        Ok(complete_move(g, cfg, state, picks))
    }
}
