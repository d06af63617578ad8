use alloc::format;
use alloc::string::String;

use super::{complete_move, inapplicable, staller_immediate_win, Strategy, StrategyError, Turn};
use crate::game::{GameConfig, GameState, Player};
use crate::graph::Graph;
use crate::star_partition::{lex_optimal_star_partition, star_digraph, star_partition_width};
use crate::vset::VertexSet;

/// Staller in the `(σ-1, 1)` S-game on a tree `T` with `σ = σ(T) >= 2`.
///
/// She works in a subtree `T'`, initially `T`. With a lexicographically
/// optimal partition of `T'` she starts at the first `σ`-star, follows a
/// maximal directed path of the star digraph to a star with no out-arcs and
/// claims its centre. Dominator then has to take every leaf of that star,
/// and `T'` becomes the component of `T' - star` holding the starting star.
/// A closed neighbourhood she can finish is always claimed first.
#[derive(Clone, Default)]
pub struct TreeStaller {
    region: Option<VertexSet>,
}

impl TreeStaller {
    pub fn new() -> Self {
        Self::default()
    }

    /// The centre to claim in `region` and the region for the next turn.
    fn step(g: &Graph, region: VertexSet) -> Option<(usize, VertexSet)> {
        let (h, old) = g.induced(region);
        let p = lex_optimal_star_partition(&h).ok()?;
        let width = p.width();
        let start = p.stars.iter().position(|s| s.leaves.len() == width)?;
        let digraph = star_digraph(&h, &p).ok()?;
        let path = digraph.maximal_path_from(start);
        let end = p.stars[*path.last()?];
        let rest = h.vertices().difference(end.vertices());
        let next = if rest.contains(p.stars[start].center) {
            h.component_of(p.stars[start].center, rest)
        } else {
            VertexSet::EMPTY
        };
        Some((old[end.center], next.iter().map(|v| old[v]).collect()))
    }
}

impl Strategy for TreeStaller {
    fn name(&self) -> String {
        "tree".into()
    }

    fn role(&self) -> Player {
        Player::Staller
    }

    fn prepare(&mut self, g: &Graph, cfg: &GameConfig) -> Result<(), StrategyError> {
        if !g.is_tree() || g.n() < 2 {
            return inapplicable("tree needs a tree on at least two vertices");
        }
        let sigma = star_partition_width(g).finite().expect("trees on two or more vertices have a partition");
        if sigma < 2 {
            return inapplicable("tree needs star partition width at least 2");
        }
        if cfg.a != sigma - 1 || cfg.b != 1 || cfg.starter != Player::Staller {
            return inapplicable(format!("tree plays the ({}, 1) S-game", sigma - 1));
        }
        self.region = None;
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
        let region = self.region.unwrap_or(g.vertices());
        let pick = match Self::step(g, region) {
            Some((center, next)) if state.unplayed(g).contains(center) => {
                self.region = Some(next);
                Some(center)
            }
            _ => {
                self.region = Some(VertexSet::EMPTY);
                region.intersection(state.unplayed(g)).first()
            }
        };
        Ok(complete_move(g, cfg, state, pick))
    }
}
