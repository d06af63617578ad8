use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::census::{connected_graphs, enumerate_trees};
use crate::game::GameConfig;
use crate::graph::*;
use crate::solver::solve;
use crate::star_partition::star_partition_width;

fn best(role: Player) -> BestResponse {
    BestResponse::new(role)
}

fn vs_best(g: &Graph, cfg: GameConfig, s: &mut dyn Strategy) -> Outcome {
    let r = match s.role() {
        Player::Dominator => play_match(g, &cfg, s, &mut best(Player::Staller)),
        Player::Staller => play_match(g, &cfg, &mut best(Player::Dominator), s),
    };
    r.unwrap().winner
}

fn never_loses(g: &Graph, cfg: GameConfig, s: &dyn Strategy) {
    let lost = exhaustive_check(g, &cfg, s).unwrap();
    assert!(lost.is_none(), "{} loses on {g:?} {cfg:?}: {lost:?}", s.name());
}

#[test]
fn best_against_best_reproduces_the_solver() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for a in 1..=2 {
                for b in 1..=2 {
                    for cfg in [GameConfig::d_game(a, b), GameConfig::s_game(a, b)] {
                        let r = play_match(&g, &cfg, &mut best(Player::Dominator), &mut best(Player::Staller)).unwrap();
                        assert_eq!(r.winner, solve(&g, cfg).unwrap(), "{g:?} {cfg:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn best_response_on_paths() {
    let p4 = path(4).unwrap();
    let cfg = GameConfig::d_game(1, 1);
    let r = play_match(&p4, &cfg, &mut best(Player::Dominator), &mut best(Player::Staller)).unwrap();
    assert_eq!(r.winner, Player::Dominator);
    let p3 = path(3).unwrap();
    let cfg = GameConfig::s_game(1, 1);
    let r = play_match(&p3, &cfg, &mut best(Player::Dominator), &mut best(Player::Staller)).unwrap();
    assert_eq!(r.winner, Player::Staller);
}

#[test]
fn single_vertex_ends_after_one_move() {
    let k1 = complete(1).unwrap();
    let cfg = GameConfig::d_game(1, 1);
    let r = play_match(&k1, &cfg, &mut best(Player::Dominator), &mut GreedyStaller).unwrap();
    assert_eq!(r.winner, Player::Dominator);
    assert_eq!(r.turns.len(), 1);
}

#[test]
fn driver_rejects_wrong_roles_and_illegal_moves() {
    let g = path(4).unwrap();
    let cfg = GameConfig::d_game(1, 1);
    let err = play_match(&g, &cfg, &mut GreedyStaller, &mut best(Player::Staller)).unwrap_err();
    assert!(matches!(err, MatchError::WrongRole { .. }));

    #[derive(Clone)]
    struct Cheater;
    impl Strategy for Cheater {
        fn name(&self) -> String {
            "cheater".into()
        }
        fn role(&self) -> Player {
            Player::Staller
        }
        fn prepare(&mut self, _: &Graph, _: &GameConfig) -> Result<(), StrategyError> {
            Ok(())
        }
        fn choose(&mut self, _: &Graph, _: &GameConfig, s: &GameState, _: &[Turn]) -> Result<VertexSet, StrategyError> {
            Ok(s.dom)
        }
    }
    let err = play_match(&g, &cfg, &mut PairingDominator::new(), &mut Cheater).unwrap_err();
    match err {
        MatchError::IllegalMove { strategy, .. } => assert_eq!(strategy, "cheater"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn pairing() {
    let p4 = path(4).unwrap();
    for cfg in [GameConfig::d_game(1, 1), GameConfig::s_game(1, 1)] {
        never_loses(&p4, cfg, &PairingDominator::new());
        for g in [path(6).unwrap(), cycle(6).unwrap()] {
            assert_eq!(vs_best(&g, cfg, &mut PairingDominator::new()), Player::Dominator);
        }
    }
    let mut s = PairingDominator::new();
    assert!(s.prepare(&path(5).unwrap(), &GameConfig::s_game(1, 1)).is_err());
    let mut s = PairingDominator::with_matching(vec![(0, 1), (1, 2)]);
    assert!(s.prepare(&p4, &GameConfig::s_game(1, 1)).is_err());
}

#[test]
fn trivial_strategies() {
    for g in [path(5).unwrap(), cycle(6).unwrap(), complete_bipartite(2, 3).unwrap()] {
        let cfg = GameConfig::s_game(1, g.min_degree() + 1);
        let r = play_match(&g, &cfg, &mut best(Player::Dominator), &mut StallerMinDegree).unwrap();
        assert_eq!(r.winner, Player::Staller);
        assert_eq!(r.turns.len(), 1);
    }
    let p5 = path(5).unwrap();
    let cfg = GameConfig::d_game(2, 1);
    let r = play_match(&p5, &cfg, &mut DominatorDominatingSet, &mut best(Player::Staller)).unwrap();
    assert_eq!(r.winner, Player::Dominator);
    assert_eq!(r.turns.len(), 1);

    let c6 = cycle(6).unwrap();
    let cfg = GameConfig::s_game(2, 1);
    assert_eq!(vs_best(&c6, cfg, &mut DominatorNeighborResponder), Player::Dominator);
    never_loses(&c6, cfg, &DominatorNeighborResponder);
    never_loses(&c6, GameConfig::s_game(4, 2), &DominatorNeighborResponder);
}

#[test]
fn star_partition_dominator_never_loses() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let sigma = star_partition_width(&g).finite().unwrap();
            never_loses(&g, GameConfig::s_game(sigma, 1), &StarPartitionDominator::default());
        }
    }
}

#[test]
fn fan_dominator_against_greedy() {
    let g = fan(3, 2).unwrap();
    let cfg = GameConfig::d_game(3, 3);
    let r = play_match(&g, &cfg, &mut FanDominator { a: 3, n: 2 }, &mut GreedyStaller).unwrap();
    assert_eq!(r.winner, Player::Dominator);
}

#[test]
fn local_domination_dominator() {
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let a = crate::local_domination::local_domination_number(&g, 1).unwrap().value;
            for cfg in [GameConfig::s_game(a, 1), GameConfig::d_game(a, 1)] {
                never_loses(&g, cfg, &LocalDominationDominator);
            }
        }
    }
    let c10 = cycle(10).unwrap();
    assert_eq!(vs_best(&c10, GameConfig::s_game(4, 2), &mut LocalDominationDominator), Player::Dominator);
    let mut s = LocalDominationDominator;
    assert!(s.prepare(&c10, &GameConfig::s_game(3, 2)).is_err());
    assert!(s.prepare(&path(4).unwrap(), &GameConfig::s_game(4, 2)).is_err());
}

#[test]
fn sdr_line_graph_dominator() {
    for n in 3..=5 {
        for h in connected_graphs(n) {
            if h.min_degree() < 2 {
                continue;
            }
            let (g, _) = line_graph(&h).unwrap();
            if g.n() > 8 {
                continue;
            }
            never_loses(&g, GameConfig::s_game(1, 1), &SdrLineGraphDominator::new(h.clone(), 1));
        }
    }
    let k5 = complete(5).unwrap();
    let (g, _) = line_graph(&k5).unwrap();
    let mut s = SdrLineGraphDominator::new(k5.clone(), 2);
    assert_eq!(vs_best(&g, GameConfig::s_game(2, 2), &mut s), Player::Dominator);
    assert!(SdrLineGraphDominator::new(k5, 3).prepare(&g, &GameConfig::s_game(2, 2)).is_err());
}

#[test]
fn large_order_staller() {
    let mut s = LargeOrderStaller::new(2);
    assert_eq!(vs_best(&cycle(10).unwrap(), GameConfig::s_game(1, 2), &mut s), Player::Staller);
    assert_eq!(vs_best(&cycle(12).unwrap(), GameConfig::s_game(1, 2), &mut s), Player::Staller);
    never_loses(&cycle(10).unwrap(), GameConfig::s_game(1, 2), &s);
    never_loses(&path(15).unwrap(), GameConfig::d_game(1, 2), &s);
    assert!(s.prepare(&path(2).unwrap(), &GameConfig::d_game(1, 2)).is_err());
    assert!(s.prepare(&cycle(9).unwrap(), &GameConfig::s_game(1, 2)).is_err());
    // Δ < k: one grab wins.
    let mut s = LargeOrderStaller::new(3);
    let r = play_match(&path(4).unwrap(), &GameConfig::s_game(2, 3), &mut best(Player::Dominator), &mut s).unwrap();
    assert_eq!(r.winner, Player::Staller);
}

#[test]
fn grid_stallers() {
    for n in [2, 3] {
        let g = grid(5, n).unwrap();
        let mut s = GridStaller22 { m: 5, n };
        assert_eq!(vs_best(&g, GameConfig::s_game(2, 2), &mut s), Player::Staller);
    }
    never_loses(&grid(5, 2).unwrap(), GameConfig::s_game(2, 2), &GridStaller22 { m: 5, n: 2 });
    for (m, n) in [(3, 2), (3, 3), (4, 2), (5, 2), (4, 3)] {
        let g = grid(m, n).unwrap();
        never_loses(&g, GameConfig::d_game(1, 2), &GridStaller12 { m, n });
    }
    let mut s = GridStaller12 { m: 3, n: 2 };
    assert!(s.prepare(&grid(3, 2).unwrap(), &GameConfig::s_game(1, 2)).is_err());
    assert!(s.prepare(&grid(2, 3).unwrap(), &GameConfig::d_game(1, 2)).is_err());
    let mut s = GridStaller22 { m: 4, n: 2 };
    assert!(s.prepare(&grid(4, 2).unwrap(), &GameConfig::s_game(2, 2)).is_err());
}

#[test]
fn tree_staller_on_small_trees() {
    let k13 = star(3).unwrap();
    assert_eq!(vs_best(&k13, GameConfig::s_game(2, 1), &mut TreeStaller::new()), Player::Staller);
    assert_eq!(vs_best(&path(5).unwrap(), GameConfig::s_game(1, 1), &mut TreeStaller::new()), Player::Staller);
    for n in 2..=8 {
        for t in enumerate_trees(n) {
            let sigma = star_partition_width(&t).finite().unwrap();
            if sigma < 2 {
                assert!(TreeStaller::new().prepare(&t, &GameConfig::s_game(1, 1)).is_err());
                continue;
            }
            never_loses(&t, GameConfig::s_game(sigma - 1, 1), &TreeStaller::new());
        }
    }
}

#[test]
fn strategies_clone_through_boxes() {
    let boxed: Vec<Box<dyn Strategy>> = vec![Box::new(TreeStaller::new()), Box::new(LargeOrderStaller::new(2))];
    let copies = boxed.clone();
    assert_eq!(copies[1].name(), "large:2");
}

#[test]
fn exhaustive_check_finds_losses() {
    let lost = exhaustive_check(&path(4).unwrap(), &GameConfig::d_game(1, 1), &GreedyStaller).unwrap();
    let turns = lost.expect("Staller cannot win on P_4");
    assert_eq!(turns.last().unwrap().player, Player::Dominator);
    let lost = exhaustive_check(&path(3).unwrap(), &GameConfig::s_game(1, 1), &best(Player::Dominator)).unwrap();
    assert!(lost.is_some());
}
