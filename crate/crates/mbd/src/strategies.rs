//! Strategy names for the command line, plus a seeded random player.

use mbd_core::game::{GameConfig, GameState, Player};
use mbd_core::graph::Graph;
use mbd_core::solver::SolverOptions;
use mbd_core::strategy::*;
use mbd_core::vset::VertexSet;
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formats::parse_graph6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("unknown strategy `{0}`; known strategies: {STRATEGIES}")]
    Unknown(String),
    #[error("strategy `{0}`: {1}")]
    Params(String, String),
    #[error("strategy `{name}` plays {plays}, not {wanted}")]
    Role { name: String, plays: Player, wanted: Player },
}

pub const STRATEGIES: &str = "best, random:SEED, pairing, local, sdr:T:H6, neighbor, domset, starpart, fan:A:N \
(Dominator); large:K, grid22:M:N, grid12:M:N, tree, mindeg, greedy (Staller)";

/// A player choosing uniformly among unplayed vertices, reproducible from
/// its seed.
#[derive(Clone)]
pub struct RandomStrategy {
    role: Player,
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStrategy {
    pub fn new(role: Player, seed: u64) -> Self {
        RandomStrategy { role, seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Strategy for RandomStrategy {
    fn name(&self) -> String {
        format!("random:{}", self.seed)
    }

    fn role(&self) -> Player {
        self.role
    }

    fn prepare(&mut self, _: &Graph, _: &GameConfig) -> Result<(), StrategyError> {
        self.rng = ChaCha8Rng::seed_from_u64(self.seed);
        Ok(())
    }

    fn choose(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        state: &GameState,
        _: &[Turn],
    ) -> Result<VertexSet, StrategyError> {
        let k = state.move_size(g, cfg);
        let picks = state.unplayed(g).iter().choose_multiple(&mut self.rng, k);
        Ok(picks.into_iter().collect())
    }
}

fn nums(name: &str, params: &[&str], expected: usize) -> Result<Vec<usize>, SpecError> {
    if params.len() != expected {
        return Err(SpecError::Params(name.into(), format!("expected {expected} parameter(s), got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.parse().map_err(|_| SpecError::Params(name.into(), format!("`{p}` is not a nonnegative integer"))))
        .collect()
}

/// Builds the strategy named by `spec` (`name` or `name:p1:p2`) for `role`.
pub fn parse_strategy(spec: &str, role: Player, opts: SolverOptions) -> Result<Box<dyn Strategy>, SpecError> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    let s: Box<dyn Strategy> = match name {
        "best" => {
            nums(name, &params, 0)?;
            Box::new(BestResponse::with_options(role, opts))
        }
        "random" => {
            let seed = match params.as_slice() {
                [] => 0,
                _ => nums(name, &params, 1)?[0] as u64,
            };
            Box::new(RandomStrategy::new(role, seed))
        }
        "pairing" => {
            nums(name, &params, 0)?;
            Box::new(PairingDominator::new())
        }
        "local" => {
            nums(name, &params, 0)?;
            Box::new(LocalDominationDominator)
        }
        "sdr" => {
            let [t, h] = params.as_slice() else {
                return Err(SpecError::Params(name.into(), "expected sdr:T:H with H in graph6".into()));
            };
            let t = nums(name, &[t], 1)?[0];
            let h = parse_graph6(h).map_err(|e| SpecError::Params(name.into(), e.to_string()))?;
            Box::new(SdrLineGraphDominator::new(h, t))
        }
        "neighbor" => {
            nums(name, &params, 0)?;
            Box::new(DominatorNeighborResponder)
        }
        "domset" => {
            nums(name, &params, 0)?;
            Box::new(DominatorDominatingSet)
        }
        "starpart" => {
            nums(name, &params, 0)?;
            Box::new(StarPartitionDominator::default())
        }
        "fan" => {
            let p = nums(name, &params, 2)?;
            Box::new(FanDominator { a: p[0], n: p[1] })
        }
        "large" => Box::new(LargeOrderStaller::new(nums(name, &params, 1)?[0])),
        "grid22" => {
            let p = nums(name, &params, 2)?;
            Box::new(GridStaller22 { m: p[0], n: p[1] })
        }
        "grid12" => {
            let p = nums(name, &params, 2)?;
            Box::new(GridStaller12 { m: p[0], n: p[1] })
        }
        "tree" => {
            nums(name, &params, 0)?;
            Box::new(TreeStaller::new())
        }
        "mindeg" => {
            nums(name, &params, 0)?;
            Box::new(StallerMinDegree)
        }
        "greedy" => {
            nums(name, &params, 0)?;
            Box::new(GreedyStaller)
        }
        other => return Err(SpecError::Unknown(other.into())),
    };
    if s.role() != role {
        return Err(SpecError::Role { name: s.name(), plays: s.role(), wanted: role });
    }
    Ok(s)
}
