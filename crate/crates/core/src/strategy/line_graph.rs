use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{complete_move, dominator_completion, inapplicable, last_move_of, Strategy, StrategyError, Turn};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::{line_graph, Graph};
use crate::sdr::{clique_family, sdr_t, Sdr};
use crate::vset::VertexSet;

/// Dominator in the `(k,k)` game on `L(H)` with `δ(H) >= 2t` and
/// `k <= 2t-1`.
///
/// Each vertex `u` of `H` gives the clique `Q_u` of edges at `u`, and a fixed
/// SDR^t of these cliques gives every `Q_u` a set `R_u` of `t`
/// representatives. Staller's vertices are answered one at a time in
/// increasing order: a representative of `Q_u` is answered inside `Q_u`,
/// any other vertex by one of its neighbours, and the lexicographically
/// first unplayed vertex fills in when neither is available.
#[derive(Clone)]
pub struct SdrLineGraphDominator {
    h: Graph,
    t: usize,
    /// `(clique, representatives)` for each clique owning a representative.
    cliques: Vec<(VertexSet, VertexSet)>,
}

impl SdrLineGraphDominator {
    pub fn new(h: Graph, t: usize) -> Self {
        SdrLineGraphDominator { h, t, cliques: Vec::new() }
    }

    pub fn root(&self) -> &Graph {
        &self.h
    }

    pub fn t(&self) -> usize {
        self.t
    }
}

impl Strategy for SdrLineGraphDominator {
    fn name(&self) -> String {
        format!("sdr:{}", self.t)
    }

    fn role(&self) -> Player {
        Player::Dominator
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        let t = self.t;
        if t == 0 {
            return inapplicable("sdr needs t >= 1");
        }
        if self.h.n() == 0 || self.h.min_degree() < 2 * t {
            return inapplicable(format!("sdr needs the root graph to have minimum degree at least {}", 2 * t));
        }
        if cfg.a != cfg.b || cfg.a > 2 * t - 1 {
            return inapplicable(format!("sdr needs biases (k,k) with k <= {}", 2 * t - 1));
        }
        let (lg, _) = line_graph(&self.h).map_err(|e| StrategyError::Inapplicable(format!("{e}")))?;
        if lg != *g {
            return inapplicable("graph is not the line graph of the given root graph");
        }
        let (family, _) = clique_family(&self.h).map_err(|e| StrategyError::Inapplicable(format!("{e}")))?;
        let reps = match sdr_t(&family, t) {
            Sdr::Witness(reps) => reps,
            Sdr::Deficient { .. } => {
                return Err(StrategyError::Internal("clique family has no SDR^t despite the degree bound".into()))
            }
        };
        self.cliques = family
            .sets()
            .iter()
            .zip(reps)
            .map(|(q, r)| (q.iter().copied().collect(), r.into_iter().collect()))
            .collect();
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
        let mut free = state.unplayed(g);
        let mut picks = Vec::new();
        for x in s {
            let clique = self.cliques.iter().find(|(_, r)| r.contains(x)).map(|&(q, _)| q);
            let y = clique
                .and_then(|q| q.intersection(free).first())
                .or_else(|| g.neighbors(x).intersection(free).first())
                .or_else(|| free.first());
            if let Some(y) = y {
                free.remove(y);
                picks.push(y);
            }
        }
        Ok(complete_move(g, cfg, state, picks))
    }
}
