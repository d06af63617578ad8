use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    complete_move, dominator_completion, inapplicable, last_move_of, require_config, Strategy, StrategyError, Turn,
};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::Graph;
use crate::invariants::perfect_matching;
use crate::vset::VertexSet;

/// Dominator in the `(1,1)` game: answers Staller's vertex with its partner
/// under a fixed perfect matching. Since every `N[v]` contains `v` and its
/// partner, Staller never owns a closed neighbourhood.
#[derive(Clone, Default)]
pub struct PairingDominator {
    matching: Option<Vec<(usize, usize)>>,
    partner: Vec<usize>,
}

impl PairingDominator {
    /// Uses a maximum matching found at preparation time.
    pub fn new() -> Self {
        Self::default()
    }

    /// Uses the given matching, which must be perfect.
    pub fn with_matching(m: Vec<(usize, usize)>) -> Self {
        PairingDominator { matching: Some(m), partner: Vec::new() }
    }
}

impl Strategy for PairingDominator {
    fn name(&self) -> String {
        "pairing".into()
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        require_config(cfg, 1, 1, "pairing")?;
        let m = match &self.matching {
            Some(m) => m.clone(),
            None => match perfect_matching(g) {
                Some(m) => m,
                None => return inapplicable("graph has no perfect matching"),
            },
        };
        let mut partner = vec![usize::MAX; g.n()];
        for &(u, v) in &m {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || partner[u] != usize::MAX || partner[v] != usize::MAX {
                return inapplicable(format!("({u},{v}) breaks the matching"));
            }
            partner[u] = v;
            partner[v] = u;
        }
        if partner.contains(&usize::MAX) {
            return inapplicable("matching is not perfect");
        }
        self.partner = partner;
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
        let reply = last_move_of(history, Player::Staller).and_then(|s| s.first()).map(|x| self.partner[x]);
        Ok(complete_move(g, cfg, state, reply))
    }
}
