//! The regression battery behind `mbd verify-paper`.
//!
//! Every check carries its acceptance criterion, a topical anchor, the
//! instance it runs on, the expected value and a node budget that applies to
//! each solver call it makes. Running out of budget reports
//! `skipped-budget`, never a pass.

use std::fmt::Display;
use std::time::Instant;

use mbd_core::census::{all_graphs, connected_graphs, enumerate_trees};
use mbd_core::game::{is_terminal, GameConfig, GameState, Player};
use mbd_core::graph::{self, Graph};
use mbd_core::invariants::{domination_number, perfect_matching};
use mbd_core::local_domination::{is_induced_star_free, local_domination_number, local_domination_simplified};
use mbd_core::solver::{reference, solve_with, SolveError, SolverOptions, DEFAULT_BUDGET};
use mbd_core::star_partition::{
    check_lex_optimal_lemma, has_k_star_partition, isolated_vertex_condition, lex_optimal_star_partition,
    sigma_formula_check, star_partition_width,
};
use mbd_core::strategy::{
    play_match, BestResponse, FanDominator, GreedyStaller, GridStaller22, LargeOrderStaller, LocalDominationDominator,
    MatchError, SdrLineGraphDominator, Strategy, StrategyError, TreeStaller,
};
use mbd_core::thresholds::{threshold, threshold_table, ThresholdError, ThresholdKind, ThresholdValue};
use mbd_core::vset::VertexSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::{to_graph6, REPORT_SCHEMA};
use crate::strategies::RandomStrategy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
    NotApplicable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Full,
}

impl Suite {
    pub fn label(self) -> &'static str {
        match self {
            Suite::Quick => "quick",
            Suite::Full => "full",
        }
    }
}

/// What a check saw, and whether it matches the expectation.
pub struct Observed {
    pub observed: String,
    pub ok: bool,
}

/// Reasons a check stops without a verdict.
#[derive(Debug)]
pub enum Halt {
    Budget(String),
    NotApplicable(String),
    Error(String),
}

impl From<SolveError> for Halt {
    fn from(e: SolveError) -> Self {
        Halt::Budget(e.to_string())
    }
}

impl From<ThresholdError> for Halt {
    fn from(e: ThresholdError) -> Self {
        match e {
            ThresholdError::Solve(s) => s.into(),
            other => Halt::Error(other.to_string()),
        }
    }
}

impl From<MatchError> for Halt {
    fn from(e: MatchError) -> Self {
        match e {
            MatchError::Strategy { error: StrategyError::Solve(s), .. } => s.into(),
            other => Halt::Error(other.to_string()),
        }
    }
}

type Run = Box<dyn Fn(SolverOptions) -> Result<Observed, Halt> + Send + Sync>;

pub struct Check {
    pub criterion: u8,
    pub id: String,
    pub anchor: &'static str,
    pub instance: String,
    pub expected: String,
    /// Part of the quick suite as well as the full one.
    pub quick: bool,
    /// Node budget for each solver call.
    pub budget: u64,
    run: Run,
}

impl Check {
    pub fn run(&self) -> CheckReport {
        let start = Instant::now();
        let opts = SolverOptions::with_budget(self.budget);
        let (observed, status) = match (self.run)(opts) {
            Ok(o) => (o.observed, if o.ok { Status::Pass } else { Status::Fail }),
            Err(Halt::Budget(why)) => (why, Status::SkippedBudget),
            Err(Halt::NotApplicable(why)) => (why, Status::NotApplicable),
            Err(Halt::Error(why)) => (format!("error: {why}"), Status::Fail),
        };
        CheckReport {
            criterion: self.criterion,
            id: self.id.clone(),
            anchor: self.anchor,
            instance: self.instance.clone(),
            expected: self.expected.clone(),
            observed,
            status,
            wall_ms: Some(start.elapsed().as_millis() as u64),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub criterion: u8,
    pub id: String,
    pub anchor: &'static str,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionSummary {
    pub criterion: u8,
    pub title: &'static str,
    pub checks: usize,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatteryReport {
    pub schema: &'static str,
    pub suite: &'static str,
    pub criteria: Vec<CriterionSummary>,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl BatteryReport {
    pub fn criterion(&self, c: u8) -> Option<&CriterionSummary> {
        self.criteria.iter().find(|s| s.criterion == c)
    }

    /// Worst status over all criteria that ran.
    pub fn status(&self) -> Status {
        let all: Vec<Status> = self.criteria.iter().map(|c| c.status).collect();
        combine(&all)
    }
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "paths"),
    (2, "small grids with bias one"),
    (3, "grids with bias two"),
    (4, "local domination numbers"),
    (5, "local domination bound on the census"),
    (6, "claw-free graphs"),
    (7, "line graphs"),
    (8, "star partitions"),
    (9, "Staller threshold on trees equals star partition width"),
    (10, "large-order Staller strategy"),
    (11, "trivial threshold bounds"),
    (12, "game rules, solver and monotonicity"),
];

fn combine(statuses: &[Status]) -> Status {
    if statuses.contains(&Status::Fail) {
        Status::Fail
    } else if statuses.contains(&Status::SkippedBudget) {
        Status::SkippedBudget
    } else if statuses.contains(&Status::Pass) {
        Status::Pass
    } else {
        Status::NotApplicable
    }
}

/// Runs the suite's checks (optionally only some criteria) on the rayon pool.
/// Reports keep the canonical check order. With `timing` off, no wall times
/// are recorded, so repeated runs give identical reports.
pub fn run(suite: Suite, only: Option<&[u8]>, timing: bool) -> BatteryReport {
    let start = Instant::now();
    let checks: Vec<Check> = checks()
        .into_iter()
        .filter(|c| suite == Suite::Full || c.quick)
        .filter(|c| only.is_none_or(|o| o.contains(&c.criterion)))
        .collect();
    let mut reports: Vec<CheckReport> = checks.par_iter().map(Check::run).collect();
    if !timing {
        for r in &mut reports {
            r.wall_ms = None;
        }
    }
    let criteria = CRITERIA
        .iter()
        .filter(|(c, _)| only.is_none_or(|o| o.contains(c)))
        .map(|&(criterion, title)| {
            let statuses: Vec<Status> = reports.iter().filter(|r| r.criterion == criterion).map(|r| r.status).collect();
            CriterionSummary { criterion, title, checks: statuses.len(), status: combine(&statuses) }
        })
        .collect();
    BatteryReport {
        schema: REPORT_SCHEMA,
        suite: suite.label(),
        criteria,
        checks: reports,
        wall_ms: timing.then(|| start.elapsed().as_millis() as u64),
    }
}

// ---- helpers used by the check definitions ----

fn winner(g: &Graph, a: usize, b: usize, starter: Player, opts: SolverOptions) -> Result<Player, Halt> {
    let cfg = GameConfig::new(a, b, starter).map_err(|e| Halt::Error(e.to_string()))?;
    Ok(solve_with(g, cfg, opts)?)
}

fn w(g: &Graph, a: usize, b: usize, opts: SolverOptions) -> Result<Player, Halt> {
    winner(g, a, b, Player::Dominator, opts)
}

fn w_s(g: &Graph, a: usize, b: usize, opts: SolverOptions) -> Result<Player, Halt> {
    winner(g, a, b, Player::Staller, opts)
}

fn equal(observed: impl Display, expected: impl Display) -> Observed {
    let (o, e) = (observed.to_string(), expected.to_string());
    Observed { ok: o == e, observed: o }
}

fn built<T, E: Display>(r: Result<T, E>) -> Result<T, Halt> {
    r.map_err(|e| Halt::Error(e.to_string()))
}

/// Runs `f` on every item in parallel. The first violation in item order
/// fails the check; otherwise an error, then budget exhaustion, wins over a
/// pass.
fn census<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Option<String>, Halt> + Sync) -> Result<Observed, Halt> {
    let results: Vec<Result<Option<String>, Halt>> = items.par_iter().map(&f).collect();
    if let Some(v) = results.iter().find_map(|r| r.as_ref().ok().cloned().flatten()) {
        return Ok(Observed { observed: format!("violation: {v}"), ok: false });
    }
    let mut skipped = 0;
    let mut first_budget = None;
    for r in results.iter() {
        match r {
            Err(Halt::Error(e)) => return Err(Halt::Error(e.clone())),
            Err(Halt::Budget(e)) => {
                skipped += 1;
                first_budget.get_or_insert_with(|| e.clone());
            }
            _ => {}
        }
    }
    let checked = results.iter().filter(|r| matches!(r, Ok(None))).count();
    if skipped > 0 {
        return Err(Halt::Budget(format!(
            "{skipped} of {} instances undecided ({})",
            items.len(),
            first_budget.unwrap_or_default()
        )));
    }
    Ok(Observed { observed: format!("0 violations in {checked} instances"), ok: true })
}

fn violation(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

fn vs_best(g: &Graph, cfg: GameConfig, s: &mut dyn Strategy, opts: SolverOptions) -> Result<Player, Halt> {
    let r = match s.role() {
        Player::Dominator => play_match(g, &cfg, s, &mut BestResponse::with_options(Player::Staller, opts))?,
        Player::Staller => play_match(g, &cfg, &mut BestResponse::with_options(Player::Dominator, opts), s)?,
    };
    Ok(r.winner)
}

fn inf_or(v: Option<usize>) -> ThresholdValue {
    v.map_or(ThresholdValue::Infinite, ThresholdValue::Finite)
}

struct Builder {
    checks: Vec<Check>,
    criterion: u8,
    anchor: &'static str,
    quick: bool,
    budget: u64,
}

impl Builder {
    fn section(&mut self, criterion: u8, anchor: &'static str) {
        self.criterion = criterion;
        self.anchor = anchor;
        self.budget = DEFAULT_BUDGET;
    }

    fn add(
        &mut self,
        id: impl Into<String>,
        instance: impl Into<String>,
        expected: impl Display,
        run: impl Fn(SolverOptions) -> Result<Observed, Halt> + Send + Sync + 'static,
    ) {
        self.checks.push(Check {
            criterion: self.criterion,
            id: id.into(),
            anchor: self.anchor,
            instance: instance.into(),
            expected: expected.to_string(),
            quick: self.quick,
            budget: self.budget,
            run: Box::new(run),
        });
    }

    fn threshold(
        &mut self,
        instance: &str,
        make: impl Fn() -> Result<Graph, graph::GraphError> + Send + Sync + 'static,
        kind: ThresholdKind,
        index: usize,
        expected: ThresholdValue,
    ) {
        self.add(format!("{}_{index}", kind.label()), instance, expected, move |opts| {
            let g = built(make())?;
            Ok(equal(threshold(&g, kind, index, opts)?, expected))
        });
    }

    fn winner(
        &mut self,
        instance: &str,
        make: impl Fn() -> Result<Graph, graph::GraphError> + Send + Sync + 'static,
        cfg: GameConfig,
        expected: Player,
    ) {
        let prime = if cfg.starter == Player::Staller { "'" } else { "" };
        self.add(format!("W{prime}({},{})", cfg.a, cfg.b), instance, expected, move |opts| {
            let g = built(make())?;
            Ok(equal(solve_with(&g, cfg, opts)?, expected))
        });
    }
}

/// Every check of the full suite in canonical order.
pub fn checks() -> Vec<Check> {
    let mut b = Builder { checks: Vec::new(), criterion: 0, anchor: "", quick: true, budget: DEFAULT_BUDGET };
    paths(&mut b);
    grids(&mut b);
    grids_bias_two(&mut b);
    local_values(&mut b);
    local_bound(&mut b);
    claw_free(&mut b);
    line_graphs(&mut b);
    star_partitions(&mut b);
    trees(&mut b);
    large_order(&mut b);
    trivial_bounds(&mut b);
    properties(&mut b);
    b.checks
}

fn paths(b: &mut Builder) {
    use ThresholdKind::*;
    b.section(1, "paths");
    for n in 1..=10 {
        b.quick = n <= 6;
        let inst = format!("path:{n}");
        let p = move || graph::path(n);
        b.winner(&inst, p, GameConfig::d_game(1, 1), Player::Dominator);
        b.threshold(&inst, p, B, 1, inf_or((n >= 4).then_some(2)));
        b.threshold(&inst, p, BPrime, 1, ThresholdValue::Finite(if n % 2 == 1 { 1 } else { 2 }));
        if n >= 2 {
            b.threshold(&inst, p, APrime, 1, ThresholdValue::Finite(if n % 2 == 1 { 2 } else { 1 }));
        }
        b.threshold(&inst, p, APrime, 2, ThresholdValue::Infinite);
        // Dominator may claim everything and still loses the S-game.
        b.winner(&inst, p, GameConfig::s_game(n, 2), Player::Staller);
    }
}

fn grids(b: &mut Builder) {
    use ThresholdKind::*;
    b.section(2, "finite grids");
    b.quick = true;
    let g22 = || graph::grid(2, 2);
    b.threshold("grid:2:2", g22, B, 1, ThresholdValue::Finite(3));
    b.threshold("grid:2:2", g22, BPrime, 1, ThresholdValue::Finite(2));
    for (m, n) in [(3, 2), (4, 2), (3, 3)] {
        b.quick = m * n <= 6;
        let inst = format!("grid:{m}:{n}");
        let g = move || graph::grid(m, n);
        b.threshold(&inst, g, B, 1, ThresholdValue::Finite(2));
        b.threshold(&inst, g, BPrime, 1, ThresholdValue::Finite(2));
        b.threshold(&inst, g, A, 1, ThresholdValue::Finite(1));
        b.threshold(&inst, g, APrime, 1, ThresholdValue::Finite(1));
    }
}

fn grids_bias_two(b: &mut Builder) {
    b.section(3, "grids with bias two");
    b.quick = false;
    b.budget = 100_000_000;
    for n in [2, 3] {
        let inst = format!("grid:5:{n}");
        let g = move || graph::grid(5, n);
        b.winner(&inst, g, GameConfig::s_game(2, 2), Player::Staller);
        b.add("a'_2 >= 3", inst.clone(), ">= 3", move |opts| {
            let g = built(g())?;
            let lost = w_s(&g, 1, 2, opts)? == Player::Staller && w_s(&g, 2, 2, opts)? == Player::Staller;
            Ok(Observed { observed: if lost { ">= 3".into() } else { "< 3".into() }, ok: lost })
        });
        b.threshold(&inst, g, ThresholdKind::BPrime, 2, ThresholdValue::Finite(2));
        b.add("grid22 vs best", inst.clone(), Player::Staller, move |opts| {
            let g = built(g())?;
            Ok(equal(vs_best(&g, GameConfig::s_game(2, 2), &mut GridStaller22 { m: 5, n }, opts)?, Player::Staller))
        });
    }
}

fn local_values(b: &mut Builder) {
    b.section(4, "local domination");
    for n in 5..=9 {
        b.quick = n <= 6;
        b.add("ltilde_1", format!("cycle:{n}"), 2, move |_| {
            let g = built(graph::cycle(n))?;
            let v = built(local_domination_number(&g, 1))?.value;
            let simplified = built(local_domination_simplified(&g))?;
            if v != simplified {
                return Ok(Observed { observed: format!("{v} but simplified form gives {simplified}"), ok: false });
            }
            Ok(equal(v, 2))
        });
    }
    b.quick = false;
    b.add("ltilde_2", "cycle:10", 4, |_| {
        let g = built(graph::cycle(10))?;
        Ok(equal(built(local_domination_number(&g, 2))?.value, 4))
    });
    b.add("ltilde_1", "local-example", 2, |_| {
        let g = graph::local_domination_example();
        Ok(equal(built(local_domination_number(&g, 1))?.value, 2))
    });
}

fn local_bound(b: &mut Builder) {
    b.section(5, "local domination bound");
    for n in 2..=7 {
        b.quick = n <= 6;
        let inst = format!("connected n={n}");
        for ell in [1, 2] {
            b.add(format!("a'_{ell} <= ltilde_{ell}"), inst.clone(), "0 violations", move |opts| {
                let graphs: Vec<Graph> = connected_graphs(n).into_iter().filter(|g| g.min_degree() >= ell).collect();
                census(&graphs, |g| {
                    let l = built(local_domination_number(g, ell))?.value;
                    Ok(violation(w_s(g, l, ell, opts)? == Player::Dominator, || {
                        format!("{} loses W'(G,{l},{ell})", to_graph6(g))
                    }))
                })
            });
        }
        if n <= 6 {
            b.add("local vs best", inst.clone(), "0 violations", move |opts| {
                census(&connected_graphs(n), |g| {
                    let l = built(local_domination_number(g, 1))?.value;
                    let cfg = GameConfig::s_game(l, 1);
                    Ok(violation(vs_best(g, cfg, &mut LocalDominationDominator, opts)? == Player::Dominator, || {
                        format!("local strategy loses on {} with ({l},1)", to_graph6(g))
                    }))
                })
            });
        }
    }
}

fn claw_free(b: &mut Builder) {
    b.section(6, "claw-free graphs");
    for n in 2..=7 {
        b.quick = n <= 6;
        b.add("a'_1 <= 2", format!("connected claw-free n={n}"), "0 violations", move |opts| {
            let graphs: Vec<Graph> = connected_graphs(n).into_iter().filter(|g| is_induced_star_free(g, 3)).collect();
            census(&graphs, |g| {
                Ok(violation(w_s(g, 2, 1, opts)? == Player::Dominator, || format!("{} loses W'(G,2,1)", to_graph6(g))))
            })
        });
    }
    for k in [2, 3] {
        b.quick = k == 2;
        let n = 2 * k + 1;
        b.threshold(&format!("path:{n}"), move || graph::path(n), ThresholdKind::APrime, 1, ThresholdValue::Finite(2));
        b.threshold(
            &format!("pplus:{k}"),
            move || graph::path_plus(k),
            ThresholdKind::APrime,
            1,
            ThresholdValue::Finite(2),
        );
    }
}

fn line_graphs(b: &mut Builder) {
    use ThresholdKind::*;
    b.section(7, "line graphs");
    for n in 3..=6 {
        b.quick = n <= 4;
        let inst = format!("L(H), H connected, delta(H) >= 2, n(H)={n}");
        let roots = move || -> Vec<Graph> { connected_graphs(n).into_iter().filter(|h| h.min_degree() >= 2).collect() };
        b.add("a_1 = a'_1 = 1", inst.clone(), "0 violations", move |opts| {
            census(&roots(), |h| {
                let (g, _) = built(graph::line_graph(h))?;
                let (a1, a1p) = (threshold(&g, A, 1, opts)?, threshold(&g, APrime, 1, opts)?);
                let one = ThresholdValue::Finite(1);
                Ok(violation(a1 == one && a1p == one, || format!("H={}: a_1={a1}, a'_1={a1p}", to_graph6(h))))
            })
        });
        b.add("sdr:1 vs best", inst, "0 violations", move |opts| {
            census(&roots(), |h| {
                let (g, _) = built(graph::line_graph(h))?;
                for cfg in [GameConfig::s_game(1, 1), GameConfig::d_game(1, 1)] {
                    let mut s = SdrLineGraphDominator::new(h.clone(), 1);
                    if vs_best(&g, cfg, &mut s, opts)? != Player::Dominator {
                        return Ok(Some(format!("H={}: loses with starter {}", to_graph6(h), cfg.starter)));
                    }
                }
                Ok(None)
            })
        });
    }
}

fn star_partitions(b: &mut Builder) {
    b.section(8, "star partitions");
    let sigma = |g: &Graph| star_partition_width(g);
    for n in 2..=8 {
        b.quick = n <= 6;
        let expected = if n % 2 == 0 { 1 } else { 2 };
        b.add("sigma", format!("complete:{n}"), expected, move |_| {
            Ok(equal(sigma(&built(graph::complete(n))?), expected))
        });
    }
    for r in 1..=5 {
        b.quick = true;
        b.add("sigma", format!("star:{r}"), r, move |_| Ok(equal(sigma(&built(graph::star(r))?), r)));
    }
    for m in 1..=3 {
        b.quick = m <= 2;
        let inst = format!("kbip:2:{}", 2 * m);
        b.add("sigma", inst.clone(), m, move |_| Ok(equal(sigma(&built(graph::complete_bipartite(2, 2 * m))?), m)));
        b.threshold(
            &inst,
            move || graph::complete_bipartite(2, 2 * m),
            ThresholdKind::APrime,
            1,
            ThresholdValue::Finite(1),
        );
    }
    for n in 1..=7 {
        b.quick = n <= 6;
        let inst = format!("all graphs n={n}");
        b.add("k-star partition iff i(G-X) <= k|X|, k=2,3", inst.clone(), "0 violations", move |_| {
            census(&all_graphs(n), |g| {
                for k in [2, 3] {
                    let direct = has_k_star_partition(g, k);
                    let by_condition = isolated_vertex_condition(g, k).is_ok();
                    if direct != by_condition {
                        return Ok(Some(format!(
                            "{} k={k}: partition {direct}, condition {by_condition}",
                            to_graph6(g)
                        )));
                    }
                }
                Ok(None)
            })
        });
        b.add("1-star partition iff perfect matching", inst.clone(), "0 violations", move |_| {
            census(&all_graphs(n), |g| {
                let direct = has_k_star_partition(g, 1);
                let pm = perfect_matching(g).is_some();
                Ok(violation(direct == pm, || format!("{}: partition {direct}, perfect matching {pm}", to_graph6(g))))
            })
        });
        b.add("sigma formula", inst, "0 violations", move |_| {
            census(&all_graphs(n), |g| {
                Ok(match sigma_formula_check(g).agrees() {
                    Some(false) => Some(format!("{}: {:?}", to_graph6(g), sigma_formula_check(g))),
                    _ => None,
                })
            })
        });
    }
    for n in 2..=9 {
        b.quick = n <= 6;
        b.add("lex-optimal lemma", format!("trees n={n}"), "0 violations", move |_| {
            census(&enumerate_trees(n), |t| {
                let p = built(lex_optimal_star_partition(t))?;
                let report = built(check_lex_optimal_lemma(t, &p))?;
                Ok(violation(report.passed(), || format!("{}: {report:?}", to_graph6(t))))
            })
        });
    }
}

fn trees(b: &mut Builder) {
    b.section(9, "trees");
    for n in 2..=9 {
        b.quick = n <= 6;
        let inst = format!("trees n={n}");
        b.add("a'_1 = sigma", inst.clone(), "0 violations", move |opts| {
            census(&enumerate_trees(n), |t| {
                let a = threshold(t, ThresholdKind::APrime, 1, opts)?;
                let s = star_partition_width(t);
                Ok(violation(a == s, || format!("{}: a'_1={a}, sigma={s}", to_graph6(t))))
            })
        });
        b.add("tree vs best", inst, "0 violations", move |opts| {
            census(&enumerate_trees(n), |t| {
                let s = star_partition_width(t).finite().expect("trees on two or more vertices");
                if s < 2 {
                    return Ok(None);
                }
                let cfg = GameConfig::s_game(s - 1, 1);
                Ok(violation(vs_best(t, cfg, &mut TreeStaller::new(), opts)? == Player::Staller, || {
                    format!("tree strategy loses on {} with ({},1)", to_graph6(t), s - 1)
                }))
            })
        });
    }
}

fn large_order(b: &mut Builder) {
    b.section(10, "large order");
    b.quick = false;
    b.budget = 100_000_000;
    type Make = fn() -> Result<Graph, graph::GraphError>;
    let instances: [(&str, Make, GameConfig); 3] = [
        ("cycle:10", || graph::cycle(10), GameConfig::s_game(1, 2)),
        ("cycle:12", || graph::cycle(12), GameConfig::s_game(1, 2)),
        ("path:15", || graph::path(15), GameConfig::d_game(1, 2)),
    ];
    for (inst, make, cfg) in instances {
        b.add("large:2 vs best", inst, Player::Staller, move |opts| {
            let g = built(make())?;
            Ok(equal(vs_best(&g, cfg, &mut LargeOrderStaller::new(2), opts)?, Player::Staller))
        });
        b.winner(inst, make, cfg, Player::Staller);
    }
}

fn trivial_bounds(b: &mut Builder) {
    b.section(11, "trivial bounds");
    for n in 2..=7 {
        b.quick = n <= 6;
        let inst = format!("connected n={n}");
        let item = |b: &mut Builder, id: &str, f: fn(&Graph, SolverOptions) -> Result<Option<String>, Halt>| {
            b.add(id, inst.clone(), "0 violations", move |opts| census(&connected_graphs(n), |g| f(g, opts)));
        };
        item(b, "b'_a <= delta+1 (a <= 2)", |g, opts| {
            for a in [1, 2] {
                if w_s(g, a, g.min_degree() + 1, opts)? != Player::Staller {
                    return Ok(Some(format!("{}: W'(G,{a},delta+1)=D", to_graph6(g))));
                }
            }
            Ok(None)
        });
        item(b, "b_a <= Delta+1 when a < gamma (a <= 2)", |g, opts| {
            let gamma = domination_number(g);
            for a in (1..=2).filter(|&a| a < gamma) {
                if w(g, a, g.max_degree() + 1, opts)? != Player::Staller {
                    return Ok(Some(format!("{}: W(G,{a},Delta+1)=D", to_graph6(g))));
                }
            }
            Ok(None)
        });
        item(b, "a_b <= gamma (b <= 2)", |g, opts| {
            let gamma = domination_number(g);
            for s in [1, 2] {
                if w(g, gamma, s, opts)? != Player::Dominator {
                    return Ok(Some(format!("{}: W(G,gamma,{s})=S", to_graph6(g))));
                }
            }
            Ok(None)
        });
        item(b, "a'_b <= b*Delta when b <= delta (b <= 2)", |g, opts| {
            for s in (1..=2).filter(|&s| s <= g.min_degree()) {
                if w_s(g, s * g.max_degree(), s, opts)? != Player::Dominator {
                    return Ok(Some(format!("{}: W'(G,{s}*Delta,{s})=S", to_graph6(g))));
                }
            }
            Ok(None)
        });
        item(b, "a'_(delta+1) = inf", |g, opts| {
            let a = g.n();
            Ok(violation(w_s(g, a, g.min_degree() + 1, opts)? == Player::Staller, || {
                format!("{}: W'(G,n,delta+1)=D", to_graph6(g))
            }))
        });
        item(b, "a_(Delta+1) = gamma", |g, opts| {
            let (gamma, s) = (domination_number(g), g.max_degree() + 1);
            let wins = w(g, gamma, s, opts)? == Player::Dominator;
            let least = gamma == 1 || w(g, gamma - 1, s, opts)? == Player::Staller;
            Ok(violation(wins && least, || format!("{}: a_(Delta+1) != gamma={gamma}", to_graph6(g))))
        });
        item(b, "b_gamma = inf", |g, opts| {
            let gamma = domination_number(g);
            Ok(violation(w(g, gamma, g.n(), opts)? == Player::Dominator, || {
                format!("{}: W(G,gamma,n)=S", to_graph6(g))
            }))
        });
    }
    b.quick = true;
    let g23 = || graph::gnk(2, 3);
    b.threshold("gnk:2:3", g23, ThresholdKind::BPrime, 2, ThresholdValue::Finite(3));
    b.add("delta+1", "gnk:2:3", 3, move |_| Ok(equal(built(g23())?.min_degree() + 1, 3)));
    b.threshold("gnk:2:3", g23, ThresholdKind::A, 3, ThresholdValue::Finite(2));
    b.add("gamma", "gnk:2:3", 2, move |_| Ok(equal(domination_number(&built(g23())?), 2)));
    b.quick = false;
    b.add("F_(a,n) sharpness", "fan:a:n with a >= n >= 5", "out of scope", |_| {
        Err(Halt::NotApplicable("full-scale sharpness on F_(a,n) is beyond exhaustive search".into()))
    });
    b.add("fan:5:5 simulation", "fan:5:5 (5,6) D-game", "D in every run", |_| {
        let g = built(graph::fan(5, 5))?;
        let cfg = GameConfig::d_game(5, 6);
        let mut lost = Vec::new();
        let mut stallers: Vec<Box<dyn Strategy>> = vec![Box::new(GreedyStaller)];
        stallers.extend((0..8).map(|seed| Box::new(RandomStrategy::new(Player::Staller, seed)) as Box<dyn Strategy>));
        for s in &mut stallers {
            let r = play_match(&g, &cfg, &mut FanDominator { a: 5, n: 5 }, s.as_mut())?;
            if r.winner != Player::Dominator {
                lost.push(s.name());
            }
        }
        Ok(if lost.is_empty() {
            Observed { observed: "D in every run".into(), ok: true }
        } else {
            Observed { observed: format!("S wins against {}", lost.join(", ")), ok: false }
        })
    });
}

fn properties(b: &mut Builder) {
    b.section(12, "game rules and solver");
    for n in 1..=8 {
        b.quick = n <= 6;
        b.add("full-board terminal equivalence", format!("all graphs n={n}"), "0 violations", move |_| {
            census(&all_graphs(n), |g| Ok(full_board_violation(g)))
        });
    }
    for n in 1..=6 {
        b.quick = true;
        b.add("solver = reference (biases <= 3)", format!("all graphs n={n}"), "0 violations", move |opts| {
            census(&all_graphs(n), |g| {
                for (a, s) in (1..=3).flat_map(|a| (1..=3).map(move |s| (a, s))) {
                    for cfg in [GameConfig::d_game(a, s), GameConfig::s_game(a, s)] {
                        let (fast, slow) = (solve_with(g, cfg, opts)?, reference::solve(g, &cfg));
                        if fast != slow {
                            return Ok(Some(format!("{} {cfg:?}: solver {fast}, reference {slow}", to_graph6(g))));
                        }
                    }
                }
                Ok(None)
            })
        });
    }
    for n in 1..=7 {
        b.quick = n <= 6;
        let inst = format!("connected n={n}");
        b.add("winner monotone in biases (<= 3)", inst.clone(), "0 violations", move |opts| {
            census(&connected_graphs(n), |g| monotonicity_violation(g, 3, opts))
        });
        b.add("threshold table consistency (index <= 2)", inst, "0 violations", move |opts| {
            census(&connected_graphs(n), |g| {
                let t = threshold_table(g, 2, opts)?;
                if t.cells.iter().any(|c| c.value == mbd_core::thresholds::CellValue::Undecided) {
                    return Err(Halt::Budget(format!("undecided cell on {}", to_graph6(g))));
                }
                Ok(t.checks
                    .iter()
                    .find(|c| c.status == mbd_core::thresholds::CheckStatus::Fail)
                    .map(|c| format!("{}: {} ({})", to_graph6(g), c.name, c.detail)))
            })
        });
    }
}

/// On every full board, `is_terminal` must name Staller exactly when she
/// owns a closed neighbourhood and Dominator exactly when his vertices
/// dominate, and exactly one of the two must hold.
fn full_board_violation(g: &Graph) -> Option<String> {
    let n = g.n();
    for bits in 0u64..(1u64 << n) {
        let sta = VertexSet::from_bits(bits);
        let dom = g.vertices().difference(sta);
        let staller_owns = (0..n).any(|v| (0..n).all(|u| !(u == v || g.has_edge(u, v)) || sta.contains(u)));
        let dominates = (0..n).all(|v| (0..n).any(|u| (u == v || g.has_edge(u, v)) && dom.contains(u)));
        let state = GameState { dom, sta, to_move: Player::Dominator };
        let got = is_terminal(g, &state);
        let expected = if staller_owns { Player::Staller } else { Player::Dominator };
        if staller_owns == dominates || got != Some(expected) {
            return Some(format!("{} Staller={sta}: terminal {got:?}", to_graph6(g)));
        }
    }
    None
}

/// The four implications between neighbouring games, for biases up to `max`.
fn monotonicity_violation(g: &Graph, max: usize, opts: SolverOptions) -> Result<Option<String>, Halt> {
    let mut d = vec![vec![Player::Dominator; max + 2]; max + 2];
    let mut s = d.clone();
    for a in 1..=max + 1 {
        for b in 1..=max + 1 {
            d[a][b] = w(g, a, b, opts)?;
            s[a][b] = w_s(g, a, b, opts)?;
        }
    }
    for a in 1..=max {
        for b in 1..=max {
            for (name, table) in [("W", &d), ("W'", &s)] {
                if table[a][b] == Player::Staller && table[a][b + 1] != Player::Staller {
                    return Ok(Some(format!("{}: {name}({a},{b})=S but {name}({a},{})=D", to_graph6(g), b + 1)));
                }
                if table[a][b] == Player::Dominator && table[a + 1][b] != Player::Dominator {
                    return Ok(Some(format!("{}: {name}({a},{b})=D but {name}({},{b})=S", to_graph6(g), a + 1)));
                }
            }
            if d[a][b] == Player::Staller && s[a][b] != Player::Staller {
                return Ok(Some(format!("{}: W({a},{b})=S but W'({a},{b})=D", to_graph6(g))));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_criterion_has_checks_in_the_full_suite() {
        let all = checks();
        for (c, _) in CRITERIA {
            assert!(all.iter().any(|k| k.criterion == c), "criterion {c}");
        }
    }

    #[test]
    fn budget_exhaustion_is_not_a_pass() {
        let mut b = Builder { checks: Vec::new(), criterion: 1, anchor: "test", quick: true, budget: 10 };
        b.winner("cycle:9", || graph::cycle(9), GameConfig::s_game(1, 1), Player::Staller);
        let r = b.checks[0].run();
        assert_eq!(r.status, Status::SkippedBudget);
        assert_eq!(combine(&[Status::Pass, Status::SkippedBudget]), Status::SkippedBudget);
        assert_eq!(combine(&[Status::NotApplicable]), Status::NotApplicable);
    }

    #[test]
    fn census_reports_the_first_violation() {
        let items = [1, 2, 3, 4];
        let o = census(&items, |&i| Ok(violation(i % 2 == 1, || format!("even {i}")))).unwrap();
        assert!(!o.ok);
        assert_eq!(o.observed, "violation: even 2");
    }
}
