//! Rules of the `(a, b)`-biased Maker-Breaker domination game.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::vset::{for_each_subset_of_size, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    #[inline]
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Player::Dominator => 'D',
            Player::Staller => 'S',
        }
    }

    pub fn from_letter(c: char) -> Option<Player> {
        match c {
            'D' | 'd' => Some(Player::Dominator),
            'S' | 's' => Some(Player::Staller),
            _ => None,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Winner of a finished game. Same letters as [`Player`].
pub type Outcome = Player;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameConfig {
    /// Dominator's bias.
    pub a: usize,
    /// Staller's bias.
    pub b: usize,
    pub starter: Player,
}

impl GameConfig {
    pub fn new(a: usize, b: usize, starter: Player) -> Result<Self, GameError> {
        if a == 0 || b == 0 {
            return Err(GameError::ZeroBias);
        }
        Ok(GameConfig { a, b, starter })
    }

    /// The D-game with biases `(a, b)`.
    pub fn d_game(a: usize, b: usize) -> Self {
        Self::new(a, b, Player::Dominator).expect("positive biases")
    }

    /// The S-game with biases `(a, b)`.
    pub fn s_game(a: usize, b: usize) -> Self {
        Self::new(a, b, Player::Staller).expect("positive biases")
    }

    #[inline]
    pub fn bias(&self, p: Player) -> usize {
        match p {
            Player::Dominator => self.a,
            Player::Staller => self.b,
        }
    }

    pub fn initial_state(&self) -> GameState {
        GameState::new(self.starter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    ZeroBias,
    Terminal,
    IllegalMove { mover: Player, mv: VertexSet, reason: &'static str },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::ZeroBias => f.write_str("biases must be positive"),
            GameError::Terminal => f.write_str("the game is already decided"),
            GameError::IllegalMove { mover, mv, reason } => {
                write!(f, "illegal move {mv} by {mover}: {reason}")
            }
        }
    }
}

impl core::error::Error for GameError {}

/// Claimed vertices of both players plus the side to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub dom: VertexSet,
    pub sta: VertexSet,
    pub to_move: Player,
}

impl GameState {
    pub fn new(to_move: Player) -> Self {
        GameState { dom: VertexSet::EMPTY, sta: VertexSet::EMPTY, to_move }
    }

    #[inline]
    pub fn played(&self) -> VertexSet {
        self.dom.union(self.sta)
    }

    #[inline]
    pub fn unplayed(&self, g: &Graph) -> VertexSet {
        g.vertices().difference(self.played())
    }

    #[inline]
    pub fn claimed_by(&self, p: Player) -> VertexSet {
        match p {
            Player::Dominator => self.dom,
            Player::Staller => self.sta,
        }
    }

    /// Number of vertices the side to move must claim now.
    pub fn move_size(&self, g: &Graph, cfg: &GameConfig) -> usize {
        cfg.bias(self.to_move).min(self.unplayed(g).len())
    }

    /// Applies `mv` for the side to move, checking only disjointness from
    /// played vertices. Use [`apply_move`] for the full legality check.
    #[inline]
    pub fn play_unchecked(&self, mv: VertexSet) -> GameState {
        let mut next = *self;
        match self.to_move {
            Player::Dominator => next.dom = next.dom.union(mv),
            Player::Staller => next.sta = next.sta.union(mv),
        }
        next.to_move = self.to_move.other();
        next
    }
}

/// True iff Staller owns some closed neighbourhood.
pub fn staller_has_won(g: &Graph, state: &GameState) -> bool {
    (0..g.n()).any(|v| g.closed(v).is_subset(state.sta))
}

/// True iff Dominator's vertices dominate `G`.
pub fn dominator_has_won(g: &Graph, state: &GameState) -> bool {
    g.dominates(state.dom)
}

/// The winner if the game is decided, else `None`. The game stops as soon as
/// either goal is met; a full board always has a winner since the complement
/// of Staller's set dominates whenever she owns no closed neighbourhood.
pub fn is_terminal(g: &Graph, state: &GameState) -> Option<Outcome> {
    if staller_has_won(g, state) {
        Some(Player::Staller)
    } else if dominator_has_won(g, state) || state.unplayed(g).is_empty() {
        Some(Player::Dominator)
    } else {
        None
    }
}

/// All legal moves for the side to move, in lexicographic order.
pub fn legal_moves(g: &Graph, state: &GameState, cfg: &GameConfig) -> Result<Vec<VertexSet>, GameError> {
    if is_terminal(g, state).is_some() {
        return Err(GameError::Terminal);
    }
    let k = state.move_size(g, cfg);
    let mut out = Vec::new();
    for_each_subset_of_size(state.unplayed(g), k, |s| {
        out.push(s);
        false
    });
    Ok(out)
}

/// Plays `mv` after checking it is legal in `state`.
pub fn apply_move(g: &Graph, state: &GameState, cfg: &GameConfig, mv: VertexSet) -> Result<GameState, GameError> {
    if is_terminal(g, state).is_some() {
        return Err(GameError::Terminal);
    }
    let mover = state.to_move;
    if !mv.is_subset(g.vertices()) {
        return Err(GameError::IllegalMove { mover, mv, reason: "vertex out of range" });
    }
    if !mv.is_disjoint(state.played()) {
        return Err(GameError::IllegalMove { mover, mv, reason: "vertex already played" });
    }
    if mv.len() != state.move_size(g, cfg) {
        return Err(GameError::IllegalMove { mover, mv, reason: "wrong number of vertices" });
    }
    Ok(state.play_unchecked(mv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn st(dom: &[usize], sta: &[usize], to_move: Player) -> GameState {
        GameState { dom: dom.iter().copied().collect(), sta: sta.iter().copied().collect(), to_move }
    }

    #[test]
    fn legal_move_lists() {
        let p3 = path(3).unwrap();
        let cfg = GameConfig::d_game(1, 1);
        let moves = legal_moves(&p3, &GameState::new(Player::Dominator), &cfg).unwrap();
        assert_eq!(moves, [VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])]);

        // Dominator owns the centre: already won.
        let cfg2 = GameConfig::d_game(1, 2);
        assert_eq!(legal_moves(&p3, &st(&[1], &[], Player::Staller), &cfg2), Err(GameError::Terminal));
        let p4 = path(4).unwrap();
        let moves = legal_moves(&p4, &st(&[0], &[], Player::Staller), &cfg2).unwrap();
        assert_eq!(moves.len(), 3);
        assert!(moves.iter().all(|m| m.len() == 2));
        assert_eq!(legal_moves(&p3, &st(&[0, 1, 2], &[], Player::Staller), &cfg2), Err(GameError::Terminal));
    }

    #[test]
    fn last_move_takes_remainder() {
        let p5 = path(5).unwrap();
        let cfg = GameConfig::d_game(1, 3);
        let s = st(&[0, 4], &[2], Player::Staller);
        let moves = legal_moves(&p5, &s, &cfg).unwrap();
        assert_eq!(moves, [VertexSet::from([1, 3])]);
    }

    #[test]
    fn apply_checks() {
        let p3 = path(3).unwrap();
        let cfg = GameConfig::d_game(1, 1);
        let s0 = GameState::new(Player::Dominator);
        let s1 = apply_move(&p3, &s0, &cfg, VertexSet::from([1])).unwrap();
        assert_eq!(s1, st(&[1], &[], Player::Staller));
        let p5 = path(5).unwrap();
        let s = st(&[1], &[], Player::Staller);
        assert!(matches!(apply_move(&p5, &s, &cfg, VertexSet::from([1])), Err(GameError::IllegalMove { .. })));
        assert!(matches!(apply_move(&p5, &s, &cfg, VertexSet::from([3, 4])), Err(GameError::IllegalMove { .. })));
        assert!(GameConfig::new(0, 1, Player::Staller).is_err());
    }

    #[test]
    fn win_conditions() {
        let p3 = path(3).unwrap();
        assert!(staller_has_won(&p3, &st(&[], &[0, 1], Player::Dominator)));
        assert!(!staller_has_won(&p3, &st(&[], &[0, 2], Player::Dominator)));
        let c5 = cycle(5).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(!staller_has_won(&c5, &st(&[], &[u, v], Player::Dominator)));
            }
        }
        assert!(dominator_has_won(&p3, &st(&[1], &[], Player::Staller)));
        let p5 = path(5).unwrap();
        // N[1] ∪ N[3] = {0,1,2,3,4}
        assert!(dominator_has_won(&p5, &st(&[1, 3], &[], Player::Staller)));
        assert!(dominator_has_won(&p5, &st(&[1, 4], &[], Player::Staller)));
        assert!(!dominator_has_won(&p5, &st(&[0, 4], &[], Player::Staller)));
    }

    #[test]
    fn terminal_detection() {
        let p3 = path(3).unwrap();
        assert_eq!(is_terminal(&p3, &st(&[0, 2], &[1], Player::Dominator)), Some(Player::Dominator));
        assert_eq!(is_terminal(&p3, &st(&[], &[0, 1], Player::Dominator)), Some(Player::Staller));
        assert_eq!(is_terminal(&p3, &GameState::new(Player::Dominator)), None);
    }
}
