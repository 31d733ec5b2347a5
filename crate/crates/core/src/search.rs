//! Backtracking search for colouring bijections, strong complete mappings and
//! complete mappings.
//!
//! Every unassigned point keeps a bitset of still-admissible images. Assigning
//! `σ(x) = v` removes, for each other point `y`, the images that would repeat
//! one of the values `v`, `Δ1(x)`, `Δ2(x)`, `Δ3(x)` (or the SCM/CM analogues).
//! An empty domain ends the branch. By default the next point is the one with
//! the fewest admissible images (lowest index on ties); `Order::Ascending`
//! takes points in index order instead. Images are always tried in ascending
//! order, so results depend only on the configuration.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::{is_colouring_bijection, is_complete_mapping, is_permutation, is_strong_complete_mapping, Perm};

/// Largest group accepted by [`search`].
pub const SEARCH_ORDER_CAP: usize = 729;
/// Largest group for counting or enumerating without a node budget.
pub const EXHAUSTIVE_ORDER_CAP: usize = 81;
/// Largest group accepted by [`scm_census`].
pub const CENSUS_ORDER_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Cb,
    Scm,
    Cm,
}

impl Target {
    pub fn check(self, g: &FiniteGroup, sigma: &Perm) -> bool {
        match self {
            Target::Cb => is_colouring_bijection(g, sigma),
            Target::Scm => is_strong_complete_mapping(g, sigma),
            Target::Cm => is_complete_mapping(g, sigma),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    First,
    Count,
    Enumerate(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    #[default]
    FailFirst,
    Ascending,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub target: Target,
    pub mode: Mode,
    pub fix_identity: bool,
    pub node_budget: Option<u64>,
    pub order: Order,
    /// Worker threads; a node budget forces sequential execution.
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(target: Target, mode: Mode) -> Self {
        SearchConfig { target, mode, fix_identity: false, node_budget: None, order: Order::FailFirst, jobs: 1 }
    }

    pub fn fix_identity(mut self, yes: bool) -> Self {
        self.fix_identity = yes;
        self
    }

    pub fn budget(mut self, nodes: Option<u64>) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn order(mut self, order: Order) -> Self {
        self.order = order;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub found: Vec<Perm>,
    /// Number of solutions met; exact when `exhausted` holds in count mode.
    pub count: u64,
    pub nodes_explored: u64,
    /// `false` when the node budget stopped the search.
    pub exhausted: bool,
}

/// Predicate marking a subset of the counted leaves.
type LeafMark<'a> = dyn Fn(&[Elem]) -> bool + Sync + 'a;

/// Leaf behaviour inside one subtree.
#[derive(Clone, Copy)]
enum Collect<'a> {
    /// Keep at most this many solutions, each stamped with the node counter.
    Keep(usize),
    /// Count leaves, and separately those passing the extra test.
    Count(Option<&'a LeafMark<'a>>),
}

#[derive(Default)]
struct Outcome {
    kept: Vec<(Vec<Elem>, u64)>,
    count: u64,
    marked: u64,
    nodes: u64,
    budget_hit: bool,
}

struct Searcher<'g> {
    g: &'g FiniteGroup,
    target: Target,
    order: Order,
    words: usize,
    budget: Option<u64>,
}

#[derive(Clone)]
struct State {
    images: Vec<Elem>,
    domains: Vec<u64>,
    unassigned: usize,
}

const UNSET: Elem = usize::MAX;

impl<'g> Searcher<'g> {
    fn root(&self) -> State {
        let n = self.g.order();
        let mut domains = vec![0u64; n * self.words];
        for y in 0..n {
            for v in 0..n {
                domains[y * self.words + v / 64] |= 1 << (v % 64);
            }
        }
        State { images: vec![UNSET; n], domains, unassigned: n }
    }

    #[inline]
    fn clear(&self, domains: &mut [u64], y: Elem, v: Elem) {
        domains[y * self.words + v / 64] &= !(1u64 << (v % 64));
    }

    /// Records `σ(x) = v` and prunes the other domains. Returns `false` when
    /// some unassigned domain becomes empty.
    fn assign(&self, s: &mut State, x: Elem, v: Elem) -> bool {
        let g = self.g;
        s.images[x] = v;
        s.unassigned -= 1;
        let xi = g.inv(x);
        let (a, b, c) = match self.target {
            Target::Cb => {
                let b = g.mul(xi, v);
                (g.mul(v, x), b, g.mul(b, x))
            }
            Target::Scm => (g.mul(x, v), g.mul(xi, v), 0),
            Target::Cm => (g.mul(x, v), 0, 0),
        };
        let mut alive = true;
        for y in g.elements() {
            if s.images[y] != UNSET {
                continue;
            }
            let yi = g.inv(y);
            let domains = &mut s.domains;
            self.clear(domains, y, v);
            match self.target {
                Target::Cb => {
                    self.clear(domains, y, g.mul(a, yi));
                    self.clear(domains, y, g.mul(y, b));
                    self.clear(domains, y, g.mul(g.mul(y, c), yi));
                }
                Target::Scm => {
                    self.clear(domains, y, g.mul(yi, a));
                    self.clear(domains, y, g.mul(y, b));
                }
                Target::Cm => self.clear(domains, y, g.mul(yi, a)),
            }
            if alive && s.domains[y * self.words..(y + 1) * self.words].iter().all(|&w| w == 0) {
                alive = false;
            }
        }
        alive
    }

    fn next_point(&self, s: &State) -> Elem {
        let unassigned = (0..s.images.len()).filter(|&y| s.images[y] == UNSET);
        match self.order {
            Order::Ascending => unassigned.min().expect("an unassigned point"),
            Order::FailFirst => unassigned
                .min_by_key(|&y| {
                    s.domains[y * self.words..(y + 1) * self.words].iter().map(|w| w.count_ones()).sum::<u32>()
                })
                .expect("an unassigned point"),
        }
    }

    fn values(&self, s: &State, x: Elem) -> Vec<Elem> {
        let mut out = Vec::new();
        for (i, &word) in s.domains[x * self.words..(x + 1) * self.words].iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    /// Depth-first over one subtree. Returns `false` to stop everything.
    fn descend(&self, s: &State, collect: Collect<'_>, out: &mut Outcome) -> bool {
        if s.unassigned == 0 {
            match collect {
                Collect::Keep(limit) => {
                    out.kept.push((s.images.clone(), out.nodes));
                    out.count += 1;
                    return out.kept.len() < limit;
                }
                Collect::Count(extra) => {
                    out.count += 1;
                    if extra.is_some_and(|f| f(&s.images)) {
                        out.marked += 1;
                    }
                    return true;
                }
            }
        }
        let x = self.next_point(s);
        for v in self.values(s, x) {
            if self.budget.is_some_and(|b| out.nodes >= b) {
                out.budget_hit = true;
                return false;
            }
            out.nodes += 1;
            let mut child = s.clone();
            if self.assign(&mut child, x, v) && !self.descend(&child, collect, out) {
                return false;
            }
        }
        true
    }
}

fn check_guards(g: &FiniteGroup, config: &SearchConfig) -> Result<()> {
    let n = g.order();
    if n > SEARCH_ORDER_CAP {
        return Err(Error::Guard(format!("search needs |G| <= {SEARCH_ORDER_CAP}, got {n}")));
    }
    if config.mode != Mode::First && config.node_budget.is_none() && n > EXHAUSTIVE_ORDER_CAP {
        return Err(Error::Guard(format!(
            "exhaustive search without a node budget needs |G| <= {EXHAUSTIVE_ORDER_CAP}, got {n}"
        )));
    }
    if config.mode == Mode::Enumerate(0) {
        return Err(Error::Guard("enumeration limit must be at least 1".into()));
    }
    if config.node_budget == Some(0) {
        return Err(Error::Guard("node budget must be at least 1".into()));
    }
    Ok(())
}

/// Root state after fixing the identity (if asked); `None` if that already
/// empties a domain.
fn prepared_root(searcher: &Searcher<'_>, fix_identity: bool) -> Option<State> {
    let mut root = searcher.root();
    if fix_identity && !searcher.assign(&mut root, 0, 0) {
        return None;
    }
    Some(root)
}

/// Runs the search, splitting on the first branching level when `jobs > 1`.
/// Branches are merged in value order so the output matches a sequential run.
fn run(g: &FiniteGroup, config: &SearchConfig, collect: Collect<'_>) -> Outcome {
    let searcher = Searcher {
        g,
        target: config.target,
        order: config.order,
        words: g.order().div_ceil(64),
        budget: config.node_budget,
    };
    let Some(root) = prepared_root(&searcher, config.fix_identity) else {
        return Outcome::default();
    };
    let parallel = config.jobs > 1 && config.node_budget.is_none() && root.unassigned > 0;
    if !parallel {
        let mut out = Outcome::default();
        searcher.descend(&root, collect, &mut out);
        return out;
    }

    let x = searcher.next_point(&root);
    let branches: Vec<Elem> = searcher.values(&root, x);
    let work = |v: Elem| {
        let mut out = Outcome { nodes: 1, ..Outcome::default() };
        let mut child = root.clone();
        if searcher.assign(&mut child, x, v) {
            searcher.descend(&child, collect, &mut out);
        }
        out
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build();
    let outcomes: Vec<Outcome> = match pool {
        Ok(pool) => pool.install(|| branches.par_iter().map(|&v| work(v)).collect()),
        Err(_) => branches.iter().map(|&v| work(v)).collect(),
    };

    let mut merged = Outcome::default();
    for o in outcomes {
        match collect {
            Collect::Keep(limit) => {
                let room = limit - merged.kept.len();
                if o.kept.len() >= room {
                    let (_, stamp) = o.kept[room - 1];
                    let base = merged.nodes;
                    merged.kept.extend(o.kept.into_iter().take(room).map(|(s, k)| (s, base + k)));
                    merged.count = merged.kept.len() as u64;
                    merged.nodes = base + stamp;
                    return merged;
                }
                let base = merged.nodes;
                merged.kept.extend(o.kept.into_iter().map(|(s, k)| (s, base + k)));
                merged.count = merged.kept.len() as u64;
                merged.nodes += o.nodes;
            }
            Collect::Count(_) => {
                merged.count += o.count;
                merged.marked += o.marked;
                merged.nodes += o.nodes;
            }
        }
    }
    merged
}

pub fn search(g: &FiniteGroup, config: &SearchConfig) -> Result<SearchResult> {
    check_guards(g, config)?;
    let collect = match config.mode {
        Mode::First => Collect::Keep(1),
        Mode::Enumerate(limit) => Collect::Keep(limit),
        Mode::Count => Collect::Count(None),
    };
    let out = run(g, config, collect);
    let mut found = Vec::with_capacity(out.kept.len());
    for (images, _) in out.kept {
        let sigma = Perm::new(images)?;
        if !config.target.check(g, &sigma) {
            return Err(Error::Invariant(format!("search emitted a map failing the {:?} test", config.target)));
        }
        found.push(sigma);
    }
    Ok(SearchResult { found, count: out.count, nodes_explored: out.nodes, exhausted: !out.budget_hit })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Census {
    pub scm_count: u64,
    /// Colouring bijections, counted as the SCMs `τ` whose `θᶜ(τ)` is a
    /// bijection (then `τ⁻¹` is a colouring bijection, and every colouring
    /// bijection arises once this way).
    pub cb_count: u64,
    /// `cb / scm`; undefined when there are no SCMs.
    pub ratio: Option<f64>,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

/// Counts strong complete mappings and, on the same search tree, the
/// colouring bijections.
pub fn scm_census(g: &FiniteGroup, budget: Option<u64>, fix_identity: bool, jobs: usize) -> Result<Census> {
    if g.order() > CENSUS_ORDER_CAP {
        return Err(Error::Guard(format!("census needs |G| <= {CENSUS_ORDER_CAP}, got {}", g.order())));
    }
    let config = SearchConfig::new(Target::Scm, Mode::Count).fix_identity(fix_identity).budget(budget).jobs(jobs);
    check_guards(g, &config)?;
    let theta_bijective = |tau: &[Elem]| {
        let theta: Vec<Elem> = tau.iter().enumerate().map(|(x, &t)| g.mul(g.mul(g.inv(t), x), t)).collect();
        is_permutation(&theta)
    };
    let out = run(g, &config, Collect::Count(Some(&theta_bijective)));
    let ratio = (out.count > 0).then(|| out.marked as f64 / out.count as f64);
    Ok(Census {
        scm_count: out.count,
        cb_count: out.marked,
        ratio,
        nodes_explored: out.nodes,
        exhausted: !out.budget_hit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_from_spec;
    use itertools::Itertools;

    /// Filters every permutation (optionally those fixing the identity).
    fn oracle(g: &FiniteGroup, target: Target, fix_identity: bool) -> u64 {
        let n = g.order();
        let start = usize::from(fix_identity);
        (start..n)
            .permutations(n - start)
            .filter(|tail| {
                let images: Vec<Elem> = (0..start).chain(tail.iter().copied()).collect();
                target.check(g, &Perm::new(images).unwrap())
            })
            .count() as u64
    }

    fn count(g: &FiniteGroup, target: Target, fix_identity: bool) -> u64 {
        let r = search(g, &SearchConfig::new(target, Mode::Count).fix_identity(fix_identity)).unwrap();
        assert!(r.exhausted);
        r.count
    }

    #[test]
    fn counts_match_oracle_on_tiny_groups() {
        for spec in ["C3", "C5", "C2xC2", "C7"] {
            let g = build_from_spec(spec).unwrap();
            for target in [Target::Cb, Target::Scm, Target::Cm] {
                for fix in [false, true] {
                    assert_eq!(count(&g, target, fix), oracle(&g, target, fix), "{spec} {target:?} {fix}");
                }
            }
        }
    }

    #[test]
    fn frozen_counts() {
        let cases = [
            ("C3", [0, 0, 3], [0, 0, 1]),
            ("C5", [10, 10, 15], [2, 2, 3]),
            ("C7", [28, 28, 133], [4, 4, 19]),
            ("C3xC3", [648, 648, 2241], [72, 72, 249]),
        ];
        for (spec, all, fixed) in cases {
            let g = build_from_spec(spec).unwrap();
            for (i, target) in [Target::Cb, Target::Scm, Target::Cm].into_iter().enumerate() {
                assert_eq!(count(&g, target, false), all[i], "{spec} {target:?}");
                assert_eq!(count(&g, target, true), fixed[i], "{spec} {target:?} fixed");
            }
        }
    }

    #[test]
    fn orders_agree_on_counts() {
        let g = build_from_spec("C3xC3").unwrap();
        for target in [Target::Cb, Target::Cm] {
            let a = search(&g, &SearchConfig::new(target, Mode::Count).order(Order::Ascending)).unwrap();
            let b = search(&g, &SearchConfig::new(target, Mode::Count)).unwrap();
            assert_eq!(a.count, b.count);
        }
    }

    #[test]
    fn first_and_enumerate() {
        let g = build_from_spec("C3xC3").unwrap();
        let first = search(&g, &SearchConfig::new(Target::Cb, Mode::First).fix_identity(true)).unwrap();
        assert_eq!(first.found.len(), 1);
        assert!(first.found[0].fixes(0));
        let some = search(&g, &SearchConfig::new(Target::Cb, Mode::Enumerate(5)).fix_identity(true)).unwrap();
        assert_eq!(some.found.len(), 5);
        assert_eq!(some.found[0], first.found[0]);
        assert!(some.found.windows(2).all(|w| w[0] != w[1]));
        let all = search(&g, &SearchConfig::new(Target::Cb, Mode::Enumerate(1000)).fix_identity(true)).unwrap();
        assert_eq!(all.found.len(), 72);
        assert!(all.exhausted);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = build_from_spec("C3xC3").unwrap();
        for mode in [Mode::First, Mode::Count, Mode::Enumerate(7), Mode::Enumerate(1000)] {
            for fix in [false, true] {
                let seq = search(&g, &SearchConfig::new(Target::Cb, mode).fix_identity(fix)).unwrap();
                let par = search(&g, &SearchConfig::new(Target::Cb, mode).fix_identity(fix).jobs(4)).unwrap();
                assert_eq!(seq, par, "{mode:?} {fix}");
            }
        }
    }

    #[test]
    fn budget_stops_search() {
        let g = build_from_spec("C3xC3").unwrap();
        let r = search(&g, &SearchConfig::new(Target::Cm, Mode::Count).budget(Some(50)).jobs(4)).unwrap();
        assert!(!r.exhausted);
        assert_eq!(r.nodes_explored, 50);
    }

    #[test]
    fn guards() {
        let g = build_from_spec("H3xC9").unwrap();
        assert!(matches!(search(&g, &SearchConfig::new(Target::Cb, Mode::Count)), Err(Error::Guard(_))));
        assert!(search(&g, &SearchConfig::new(Target::Cb, Mode::Count).budget(Some(10))).is_ok());
        let c3 = build_from_spec("C3").unwrap();
        assert!(matches!(search(&c3, &SearchConfig::new(Target::Cb, Mode::Enumerate(0))), Err(Error::Guard(_))));
        assert!(matches!(scm_census(&build_from_spec("C27").unwrap(), None, false, 1), Err(Error::Guard(_))));
    }

    #[test]
    fn census_small() {
        let c3 = build_from_spec("C3").unwrap();
        let c = scm_census(&c3, None, false, 1).unwrap();
        assert_eq!((c.scm_count, c.cb_count, c.ratio), (0, 0, None));
        let c5 = build_from_spec("C5").unwrap();
        let c = scm_census(&c5, None, false, 1).unwrap();
        assert_eq!((c.scm_count, c.cb_count, c.ratio), (10, 10, Some(1.0)));
    }

    #[test]
    fn census_agrees_with_direct_cb_count() {
        let g = build_from_spec("M16").unwrap();
        let c = scm_census(&g, None, true, 1).unwrap();
        assert_eq!((c.scm_count, c.cb_count), (11776, 256));
        assert_eq!(count(&g, Target::Cb, true), c.cb_count);
        assert_eq!(count(&g, Target::Scm, true), c.scm_count);
    }
}
