//! Brute-force reference solver and an exhaustive edge-coloring decider.
//!
//! Some optimal schedule contains no idle time, and a no-idle schedule is fully
//! described by the job sequence on each machine (every start is the prefix
//! sum of its predecessors). The oracle enumerates those sequences and checks
//! resource feasibility of the induced schedule; it never re-times jobs.
//!
//! Sequences are generated chronologically: the open machine with the smallest
//! current end time (lowest index on ties) either receives its next job or is
//! closed for good. Without symmetry reduction this visits every
//! (assignment, per-machine order) pair exactly once.
//!
//! With symmetry reduction (the default):
//! - interchangeable jobs (same duration, weight and resource set, or only
//!   private resources with the same machine restrictions) are merged into
//!   classes;
//! - on identical machines, machines that become free at the same instant take
//!   their next job class in non-decreasing order. Swapping what follows such a
//!   tie never changes a start or completion time. With unmovable resources the
//!   rule is applied at time 0 only, where it is plain machine relabeling.
//!
//! A partial schedule is abandoned once a lower bound on its completion
//! strictly exceeds the best objective found, so tied optima survive.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{Assignment, Instance, JobId, MachineId, Schedule};
use crate::rational::{int, Rational};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    /// Merge interchangeable jobs and canonicalize machine ties.
    pub symmetry: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: DEFAULT_BUDGET,
            symmetry: true,
        }
    }
}

impl OracleOptions {
    pub fn with_budget(budget: u64) -> Self {
        OracleOptions { budget, ..Default::default() }
    }

    pub fn exhaustive() -> Self {
        OracleOptions { symmetry: false, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: Rational,
    pub witness: Schedule,
    /// Number of optimal schedules enumerated, when full enumeration was requested.
    pub optima_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum ResourceKey {
    Private(Option<BTreeSet<MachineId>>),
    Shared(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct ClassKey {
    p: Rational,
    weight: Rational,
    column: Option<Vec<Rational>>,
    resources: ResourceKey,
}

/// Groups of interchangeable jobs, ordered by `(p, first id)`.
fn job_classes(inst: &Instance, symmetry: bool) -> Vec<Vec<JobId>> {
    if !symmetry {
        return (0..inst.n()).map(|j| vec![j]).collect();
    }
    let users = inst.jobs_by_resource();
    let mut groups: BTreeMap<ClassKey, Vec<JobId>> = BTreeMap::new();
    for job in &inst.jobs {
        let private = job.resources.iter().all(|&r| users[r].len() == 1);
        let resources = if private {
            let allowed = inst.machine_subsets.as_ref().map(|_| {
                (0..inst.machine_count)
                    .filter(|&i| inst.machine_allowed(job.id, i))
                    .collect()
            });
            ResourceKey::Private(allowed)
        } else {
            let mut r = job.resources.clone();
            r.sort_unstable();
            ResourceKey::Shared(r)
        };
        let key = ClassKey {
            p: job.p,
            weight: job.weight,
            column: inst
                .unrelated_times
                .as_ref()
                .map(|m| m.iter().map(|row| row[job.id]).collect()),
            resources,
        };
        groups.entry(key).or_default().push(job.id);
    }
    let mut classes: Vec<Vec<JobId>> = groups.into_values().collect();
    classes.sort_by(|a, b| inst.jobs[a[0]].p.cmp(&inst.jobs[b[0]].p).then(a[0].cmp(&b[0])));
    classes
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of ways to lay the job classes out as `m` ordered machine sequences:
/// `n! / Π(class size)! · C(n + m − 1, m − 1)`. An upper bound on the search.
pub fn search_space_estimate(inst: &Instance, symmetry: bool) -> u128 {
    let n = inst.n() as u128;
    let mut arrangements: u128 = 1;
    let mut placed: u128 = 0;
    for class in job_classes(inst, symmetry) {
        let size = class.len() as u128;
        placed += size;
        arrangements = arrangements.saturating_mul(binomial(placed, size));
    }
    let m = inst.machine_count as u128;
    arrangements.saturating_mul(binomial(n + m.saturating_sub(1), m.saturating_sub(1)))
}

const CLOSE: usize = usize::MAX;

struct Search<'a> {
    inst: &'a Instance,
    classes: Vec<Vec<JobId>>,
    used: Vec<usize>,
    /// Canonical tie ordering: at every time (`futures`) or only at time 0.
    ties_everywhere: bool,
    ties_at_zero: bool,
    collect_all: bool,
    budget: u64,
    nodes: u64,
    exceeded: bool,

    end: Vec<Rational>,
    open: Vec<bool>,
    starts: Vec<Option<(MachineId, Rational)>>,
    /// Intervals currently placed on each resource.
    intervals: Vec<Vec<(Rational, Rational)>>,
    home: Vec<Option<MachineId>>,
    placed: usize,
    partial: Rational,
    /// `(time, class rank)` of each decision on the current path.
    decisions: Vec<(Rational, usize)>,
    min_duration: Vec<Rational>,

    best: Option<Rational>,
    witnesses: Vec<Schedule>,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, opts: OracleOptions, collect_all: bool) -> Self {
        let classes = job_classes(inst, opts.symmetry);
        let identical_machines = !inst.has_machine_specific_data();
        let min_duration = (0..inst.n())
            .map(|j| {
                (0..inst.machine_count)
                    .filter(|&i| inst.machine_allowed(j, i))
                    .map(|i| inst.processing_time(j, i))
                    .min()
                    .unwrap_or_else(|| inst.jobs[j].p)
            })
            .collect();
        Search {
            inst,
            used: vec![0; classes.len()],
            classes,
            ties_everywhere: opts.symmetry && identical_machines && !inst.unmovable,
            ties_at_zero: opts.symmetry && identical_machines,
            collect_all,
            budget: opts.budget,
            nodes: 0,
            exceeded: false,
            end: vec![Rational::zero(); inst.machine_count],
            open: vec![true; inst.machine_count],
            starts: vec![None; inst.n()],
            intervals: vec![Vec::new(); inst.resource_count],
            home: vec![None; inst.resource_count],
            placed: 0,
            partial: Rational::zero(),
            decisions: Vec::new(),
            min_duration,
            best: None,
            witnesses: Vec::new(),
        }
    }

    fn fits(&self, job: JobId, machine: MachineId, start: Rational, finish: Rational) -> bool {
        if !self.inst.machine_allowed(job, machine) {
            return false;
        }
        for &r in &self.inst.jobs[job].resources {
            if self.inst.unmovable && self.home[r].is_some_and(|h| h != machine) {
                return false;
            }
            let capacity = self.inst.capacity(r) as usize;
            let overlapping: Vec<&(Rational, Rational)> = self.intervals[r]
                .iter()
                .filter(|(s, e)| *s < finish && *e > start)
                .collect();
            if overlapping.len() < capacity {
                continue;
            }
            // Peak load inside [start, finish) is reached at some interval start.
            let mut points: Vec<Rational> = overlapping.iter().map(|(s, _)| (*s).max(start)).collect();
            points.push(start);
            let peak = points
                .iter()
                .map(|&t| overlapping.iter().filter(|(s, e)| *s <= t && t < *e).count())
                .max()
                .unwrap_or(0);
            if peak + 1 > capacity {
                return false;
            }
        }
        true
    }

    fn record_leaf(&mut self) {
        let value = self.partial;
        let better = self.best.is_none_or(|b| value < b);
        if better {
            self.best = Some(value);
            self.witnesses.clear();
        }
        if better || (self.collect_all && self.best == Some(value)) {
            let entries = self
                .starts
                .iter()
                .enumerate()
                .map(|(job, s)| {
                    let (machine, start) = s.expect("leaf has every job placed");
                    Assignment { job, machine, start }
                })
                .collect();
            self.witnesses.push(Schedule::new(entries));
        }
    }

    fn dfs(&mut self) {
        if self.exceeded {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exceeded = true;
            return;
        }
        if self.placed == self.inst.n() {
            self.record_leaf();
            return;
        }
        let Some(machine) = (0..self.inst.machine_count)
            .filter(|&i| self.open[i])
            .min_by(|&a, &b| self.end[a].cmp(&self.end[b]).then(a.cmp(&b)))
        else {
            return;
        };
        let now = self.end[machine];

        if let Some(best) = self.best {
            let mut bound = self.partial;
            for (c, class) in self.classes.iter().enumerate() {
                for &j in &class[self.used[c]..] {
                    bound += self.inst.jobs[j].weight * (now + self.min_duration[j]);
                }
            }
            let cut = if self.collect_all { bound > best } else { bound >= best };
            if cut {
                return;
            }
        }

        let tie_rule = self.ties_everywhere || (self.ties_at_zero && now.is_zero());
        let min_rank = match self.decisions.last() {
            Some(&(t, rank)) if tie_rule && t == now => rank,
            _ => 0,
        };

        for c in 0..self.classes.len() {
            if c < min_rank || min_rank == CLOSE {
                continue;
            }
            if self.used[c] == self.classes[c].len() {
                continue;
            }
            let job = self.classes[c][self.used[c]];
            let finish = now + self.inst.processing_time(job, machine);
            if !self.fits(job, machine, now, finish) {
                continue;
            }
            // place
            self.used[c] += 1;
            self.starts[job] = Some((machine, now));
            self.end[machine] = finish;
            self.placed += 1;
            let gained = self.inst.jobs[job].weight * finish;
            self.partial += gained;
            let mut homed = Vec::new();
            for &r in &self.inst.jobs[job].resources {
                self.intervals[r].push((now, finish));
                if self.home[r].is_none() {
                    self.home[r] = Some(machine);
                    homed.push(r);
                }
            }
            self.decisions.push((now, c));

            self.dfs();

            // undo
            self.decisions.pop();
            for &r in &self.inst.jobs[job].resources {
                self.intervals[r].pop();
            }
            for r in homed {
                self.home[r] = None;
            }
            self.partial -= gained;
            self.placed -= 1;
            self.end[machine] = now;
            self.starts[job] = None;
            self.used[c] -= 1;
            if self.exceeded {
                return;
            }
        }

        let others_open = (0..self.inst.machine_count).any(|i| i != machine && self.open[i]);
        if others_open {
            self.open[machine] = false;
            self.decisions.push((now, CLOSE));
            self.dfs();
            self.decisions.pop();
            self.open[machine] = true;
        }
    }
}

fn run(inst: &Instance, opts: OracleOptions, collect_all: bool) -> Result<Search<'_>> {
    if inst.machine_count == 0 {
        return Err(Error::InvalidParameter("instance has no machines".into()));
    }
    let mut search = Search::new(inst, opts, collect_all);
    search.dfs();
    if search.exceeded {
        return Err(Error::BudgetExceeded {
            estimate: search_space_estimate(inst, opts.symmetry),
            explored: search.nodes - 1,
            budget: opts.budget,
        });
    }
    if search.best.is_none() {
        return Err(Error::Exhausted);
    }
    Ok(search)
}

/// Minimum objective over all feasible no-idle schedules.
pub fn brute_force_opt(inst: &Instance, opts: OracleOptions) -> Result<OracleResult> {
    let mut search = run(inst, opts, false)?;
    Ok(OracleResult {
        optimum: search.best.expect("run guarantees a leaf"),
        witness: search.witnesses.swap_remove(0),
        optima_count: None,
    })
}

/// Every feasible no-idle schedule attaining the optimum. With symmetry
/// reduction on, one representative per class of equivalent schedules.
pub fn enumerate_optima(inst: &Instance, opts: OracleOptions) -> Result<Vec<Schedule>> {
    Ok(run(inst, opts, true)?.witnesses)
}

/// Same as [`brute_force_opt`] but also reports how many optima were enumerated.
pub fn brute_force_with_count(inst: &Instance, opts: OracleOptions) -> Result<OracleResult> {
    let mut search = run(inst, opts, true)?;
    let count = search.witnesses.len();
    Ok(OracleResult {
        optimum: search.best.expect("run guarantees a leaf"),
        witness: search.witnesses.swap_remove(0),
        optima_count: Some(count),
    })
}

/// Independent exhaustive search for unit-time instances on identical machines:
/// every job gets a start in `{0, …, n}`, at most `m` jobs and at most the
/// capacity of each resource per slot. Idle time is allowed, so this does not
/// rely on the no-idle restriction the main oracle uses.
pub fn time_indexed_unit_opt(inst: &Instance) -> Result<Rational> {
    if !inst.is_unit() || inst.machine_subsets.is_some() || inst.unmovable {
        return Err(Error::Unsupported(
            "time-indexed search needs unit jobs on unrestricted identical machines".into(),
        ));
    }
    struct TimeIndexed<'a> {
        inst: &'a Instance,
        slot_jobs: Vec<usize>,
        slot_load: Vec<Vec<u32>>,
        slot_of: Vec<usize>,
        partial: Rational,
        best: Option<Rational>,
        /// Predecessor with identical (p, weight, resources): its slot bounds ours from below.
        twin: Vec<Option<JobId>>,
    }
    impl TimeIndexed<'_> {
        fn go(&mut self, j: usize) {
            let n = self.inst.n();
            if j == n {
                if self.best.is_none_or(|b| self.partial < b) {
                    self.best = Some(self.partial);
                }
                return;
            }
            let rest: Rational = self.inst.jobs[j..].iter().map(|x| x.weight).sum();
            if self.best.is_some_and(|b| self.partial + rest >= b) {
                return;
            }
            let lowest = self.twin[j].map_or(0, |t| self.slot_of[t]);
            for s in lowest..=n {
                if self.slot_jobs[s] == self.inst.machine_count {
                    continue;
                }
                let res = &self.inst.jobs[j].resources;
                if res.iter().any(|&r| self.slot_load[s][r] >= self.inst.capacity(r)) {
                    continue;
                }
                let gained = self.inst.jobs[j].weight * int(s as i128 + 1);
                if self.best.is_some_and(|b| self.partial + gained > b) {
                    break;
                }
                self.slot_jobs[s] += 1;
                for &r in res {
                    self.slot_load[s][r] += 1;
                }
                self.slot_of[j] = s;
                self.partial += gained;
                self.go(j + 1);
                self.partial -= gained;
                for &r in res {
                    self.slot_load[s][r] -= 1;
                }
                self.slot_jobs[s] -= 1;
            }
        }
    }
    let n = inst.n();
    let twin = (0..n)
        .map(|j| {
            (0..j).rev().find(|&k| {
                let (a, b) = (&inst.jobs[j], &inst.jobs[k]);
                a.weight == b.weight && a.resources == b.resources
            })
        })
        .collect();
    let mut search = TimeIndexed {
        inst,
        slot_jobs: vec![0; n + 1],
        slot_load: vec![vec![0; inst.resource_count]; n + 1],
        slot_of: vec![0; n],
        partial: Rational::zero(),
        best: None,
        twin,
    };
    search.go(0);
    search.best.ok_or(Error::Exhausted)
}

/// Exact optimum for unmovable instances by a second, independent route.
///
/// Jobs linked through shared resources must share a machine, where they run
/// one at a time, so resources never constrain timing. The search enumerates
/// machine choices per linked group and sequences each machine by Smith's
/// rule (ascending `p / w`), which is optimal on a single machine.
pub fn unmovable_opt(inst: &Instance, budget: u64) -> Result<OracleResult> {
    if !inst.unmovable {
        return Err(Error::Unsupported("decomposition applies to unmovable instances only".into()));
    }
    let n = inst.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for users in inst.jobs_by_resource() {
        for w in users.windows(2) {
            let (a, b) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<JobId>> = BTreeMap::new();
    for j in 0..n {
        let r = root(&mut parent, j);
        groups.entry(r).or_default().push(j);
    }
    let groups: Vec<Vec<JobId>> = groups.into_values().collect();
    let allowed: Vec<Vec<MachineId>> = groups
        .iter()
        .map(|g| {
            (0..inst.machine_count)
                .filter(|&i| g.iter().all(|&j| inst.machine_allowed(j, i)))
                .collect()
        })
        .collect();
    let interchangeable = !inst.has_machine_specific_data();

    struct State<'a> {
        inst: &'a Instance,
        groups: &'a [Vec<JobId>],
        allowed: &'a [Vec<MachineId>],
        interchangeable: bool,
        choice: Vec<MachineId>,
        nodes: u64,
        budget: u64,
        best: Option<(Rational, Schedule)>,
    }
    impl State<'_> {
        fn evaluate(&self) -> (Rational, Schedule) {
            let inst = self.inst;
            let mut entries = Vec::new();
            let mut total = Rational::zero();
            for i in 0..inst.machine_count {
                let mut jobs: Vec<JobId> = self
                    .groups
                    .iter()
                    .zip(&self.choice)
                    .filter(|(_, &c)| c == i)
                    .flat_map(|(g, _)| g.iter().copied())
                    .collect();
                jobs.sort_by(|&a, &b| {
                    let ka = inst.processing_time(a, i) * inst.jobs[b].weight;
                    let kb = inst.processing_time(b, i) * inst.jobs[a].weight;
                    ka.cmp(&kb).then(a.cmp(&b))
                });
                let mut t = Rational::zero();
                for j in jobs {
                    entries.push(Assignment { job: j, machine: i, start: t });
                    t += inst.processing_time(j, i);
                    total += inst.jobs[j].weight * t;
                }
            }
            (total, Schedule::new(entries))
        }

        fn go(&mut self, g: usize) -> bool {
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            if g == self.groups.len() {
                let (value, sched) = self.evaluate();
                if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
                    self.best = Some((value, sched));
                }
                return true;
            }
            // On interchangeable machines a group may open at most one new machine.
            let fresh = self.choice.iter().copied().max().map_or(0, |x| x + 1);
            for k in 0..self.allowed[g].len() {
                let i = self.allowed[g][k];
                if self.interchangeable && i > fresh {
                    break;
                }
                self.choice.push(i);
                let ok = self.go(g + 1);
                self.choice.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
    }

    let mut state = State {
        inst,
        groups: &groups,
        allowed: &allowed,
        interchangeable,
        choice: Vec::new(),
        nodes: 0,
        budget,
        best: None,
    };
    if !state.go(0) {
        let m = inst.machine_count as u128;
        return Err(Error::BudgetExceeded {
            estimate: m.saturating_pow(groups.len() as u32),
            explored: state.nodes - 1,
            budget,
        });
    }
    let (optimum, witness) = state.best.ok_or(Error::Exhausted)?;
    Ok(OracleResult { optimum, witness, optima_count: None })
}

/// Simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameter(format!("edge ({u}, {v}) out of range")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// Whether the edges admit a proper coloring with at most `k` colors.
pub fn edge_colorable(g: &Graph, k: usize) -> bool {
    fn assign(g: &Graph, k: usize, e: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if e == g.edges.len() {
            return true;
        }
        let (u, v) = g.edges[e];
        // A fresh color is interchangeable with any other fresh one.
        for c in 0..k.min(used + 1) {
            let clash = g.edges[..e].iter().zip(colors.iter()).any(|(&(a, b), &col)| {
                col == c && (a == u || a == v || b == u || b == v)
            });
            if clash {
                continue;
            }
            colors.push(c);
            if assign(g, k, e + 1, colors, used.max(c + 1)) {
                return true;
            }
            colors.pop();
        }
        false
    }
    assign(g, k, 0, &mut Vec::with_capacity(g.edges.len()), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{objective, validate_schedule, Job};
    use crate::rational::{one, ratio};

    fn example41(eps: Rational) -> Instance {
        let mut jobs = Vec::new();
        for r in 0..3 {
            for _ in 0..4 {
                jobs.push((if r == 2 { one() + eps } else { one() }, r));
            }
        }
        Instance::from_pairs(2, 3, jobs)
    }

    #[test]
    fn example41_optimum() {
        let inst = example41(ratio(1, 2));
        let r = brute_force_opt(&inst, OracleOptions::default()).unwrap();
        assert_eq!(r.optimum, int(47));
        assert!(validate_schedule(&inst, &r.witness).is_ok());
        assert_eq!(objective(&inst, &r.witness).unwrap(), int(47));
    }

    #[test]
    fn forced_serialization() {
        let inst = Instance::from_pairs(3, 1, (0..3).map(|_| (int(1), 0)));
        assert_eq!(brute_force_opt(&inst, OracleOptions::default()).unwrap().optimum, int(6));
        assert_eq!(brute_force_opt(&inst, OracleOptions::exhaustive()).unwrap().optimum, int(6));
    }

    #[test]
    fn lb_family_optimum() {
        let eps = ratio(1, 100);
        let mut jobs: Vec<(Rational, usize)> = (0..6).map(|r| (one(), r)).collect();
        jobs.extend((0..6).map(|_| (one() + eps, 6)));
        let inst = Instance::from_pairs(3, 7, jobs);
        let r = brute_force_opt(&inst, OracleOptions::default()).unwrap();
        assert_eq!(r.optimum, ratio(3321, 100));
    }

    #[test]
    fn identical_pair_optima_counts() {
        let inst = Instance::from_pairs(2, 2, [(int(1), 0), (int(1), 1)]);
        assert_eq!(enumerate_optima(&inst, OracleOptions::exhaustive()).unwrap().len(), 2);
        assert_eq!(enumerate_optima(&inst, OracleOptions::default()).unwrap().len(), 1);
    }

    #[test]
    fn single_job_optima_counts() {
        let inst = Instance::from_pairs(3, 1, [(int(2), 0)]);
        assert_eq!(enumerate_optima(&inst, OracleOptions::exhaustive()).unwrap().len(), 3);
        assert_eq!(enumerate_optima(&inst, OracleOptions::default()).unwrap().len(), 1);
    }

    #[test]
    fn exhaustive_enumeration_is_complete() {
        // 2 machines, 3 distinct jobs: 3! · C(4, 1) = 24 sequence layouts, all feasible
        // with private resources. Budget counts nodes, so a tiny budget fails.
        let inst = Instance::from_pairs(2, 3, [(int(1), 0), (int(2), 1), (int(3), 2)]);
        assert_eq!(search_space_estimate(&inst, false), 24);
        let err = brute_force_opt(&inst, OracleOptions { budget: 3, symmetry: false }).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { estimate: 24, .. }));
    }

    #[test]
    fn unmovable_respected() {
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        inst.unmovable = true;
        let r = brute_force_opt(&inst, OracleOptions::default()).unwrap();
        assert_eq!(r.optimum, int(3));
        assert!(validate_schedule(&inst, &r.witness).is_ok());
    }

    #[test]
    fn partition2_dummy_jobs() {
        // Triangle gadget: 3 pairwise-conflicting edge jobs and 3 dummies on 3 machines.
        let jobs = vec![
            Job::new(0, one(), vec![0, 1]),
            Job::new(1, one(), vec![0, 2]),
            Job::new(2, one(), vec![1, 2]),
            Job::new(3, one(), vec![]),
            Job::new(4, one(), vec![]),
            Job::new(5, one(), vec![]),
        ];
        let inst = Instance::new(3, 3, jobs);
        let r = brute_force_opt(&inst, OracleOptions::default()).unwrap();
        assert_eq!(r.optimum, int(10));
        assert_eq!(time_indexed_unit_opt(&inst).unwrap(), int(10));
        assert_eq!(brute_force_opt(&inst, OracleOptions::exhaustive()).unwrap().optimum, int(10));
    }

    #[test]
    fn unrelated_times() {
        let mut inst = Instance::from_pairs(2, 2, [(int(1), 0), (int(1), 1)]);
        inst.unrelated_times = Some(vec![vec![int(1), int(9)], vec![int(9), int(2)]]);
        let r = brute_force_opt(&inst, OracleOptions::default()).unwrap();
        assert_eq!(r.optimum, int(3));
    }

    #[test]
    fn exhausted_when_nothing_fits() {
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0)]);
        inst.machine_subsets = Some(BTreeMap::from([(0, BTreeSet::from([1]))]));
        inst.unrelated_times = None;
        assert_eq!(brute_force_opt(&inst, OracleOptions::default()).unwrap().optimum, int(1));
        // A job whose resources forbid every machine.
        let mut inst = Instance::new(2, 2, vec![Job::new(0, one(), vec![0, 1])]);
        inst.machine_subsets =
            Some(BTreeMap::from([(0, BTreeSet::from([0])), (1, BTreeSet::from([1]))]));
        assert!(matches!(brute_force_opt(&inst, OracleOptions::default()), Err(Error::Exhausted)));
    }

    #[test]
    fn unmovable_routes_agree() {
        let mut inst = Instance::from_pairs(2, 3, [(int(1), 0), (int(1), 0), (int(2), 1), (int(1), 2), (int(3), 2)]);
        inst.unmovable = true;
        let dfs = brute_force_opt(&inst, OracleOptions::default()).unwrap();
        let split = unmovable_opt(&inst, DEFAULT_BUDGET).unwrap();
        assert_eq!(dfs.optimum, split.optimum);
        assert!(validate_schedule(&inst, &split.witness).is_ok());
        assert_eq!(objective(&inst, &split.witness).unwrap(), split.optimum);
        assert!(unmovable_opt(&Instance::from_pairs(1, 1, [(int(1), 0)]), 10).is_err());
    }

    #[test]
    fn unmovable_unbalanced_groups() {
        // Groups of 3,3,3,3,3,5 unit jobs cannot split 10/10 over two machines.
        let jobs = [3, 3, 3, 3, 3, 5]
            .iter()
            .enumerate()
            .flat_map(|(r, &a)| (0..a).map(move |_| (int(1), r)));
        let mut inst = Instance::from_pairs(2, 6, jobs);
        inst.unmovable = true;
        assert_eq!(unmovable_opt(&inst, DEFAULT_BUDGET).unwrap().optimum, int(111));
    }

    #[test]
    fn edge_coloring_basics() {
        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!edge_colorable(&triangle, 2));
        assert!(edge_colorable(&triangle, 3));
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(edge_colorable(&path, 2));
        let diamond = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(diamond.max_degree(), 3);
        assert!(edge_colorable(&diamond, 3));
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
    }
}
