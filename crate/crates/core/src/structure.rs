//! Structural primitives on feasible schedules: slack, blocking pairs,
//! suffixes, untangling, tight-schedule normalization, train sequences and the
//! per-resource SPT-order predicate.
//!
//! Two jobs "share a resource" when their resource sets intersect.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{
    validate_schedule, Instance, JobId, MachineId, ResourceId, Schedule, Timeline,
};
use crate::rational::Rational;

/// A slack value; `Infinite` is the minimum over an empty set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slack {
    Finite(Rational),
    Infinite,
}

impl Slack {
    pub fn is_zero(&self) -> bool {
        matches!(self, Slack::Finite(v) if v.is_zero())
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            Slack::Finite(v) => Some(*v),
            Slack::Infinite => None,
        }
    }
}

impl fmt::Display for Slack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slack::Finite(v) => write!(f, "{v}"),
            Slack::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlackReport {
    pub job: JobId,
    pub d_plus: Slack,
    pub d_minus: Slack,
    pub slack: Slack,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockingPair {
    pub first: JobId,
    pub second: JobId,
    pub tight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainSequence {
    pub machine: MachineId,
    /// Resource set common to every job of the train (one id for partition instances).
    pub resources: Vec<ResourceId>,
    pub jobs: Vec<JobId>,
    pub start: Rational,
    pub end: Rational,
}

fn sharing(inst: &Instance, job: JobId) -> impl Iterator<Item = JobId> + '_ {
    (0..inst.n()).filter(move |&o| o != job && inst.shares_resource(job, o))
}

fn slack_in(inst: &Instance, tl: &Timeline, job: JobId) -> SlackReport {
    let me = tl.slots[job];
    let mut d_plus = Slack::Infinite;
    let mut d_minus = Slack::Infinite;
    for other in sharing(inst, job) {
        let o = tl.slots[other];
        // Only jobs entirely after (before) `job` count; with unit capacities every
        // later-completing (earlier-completing) job qualifies.
        if o.end > me.end && o.start >= me.end {
            d_plus = d_plus.min(Slack::Finite(o.start - me.end));
        }
        if o.end < me.end && o.end <= me.start {
            d_minus = d_minus.min(Slack::Finite(me.start - o.end));
        }
    }
    SlackReport {
        job,
        d_plus,
        d_minus,
        slack: d_plus.min(d_minus),
    }
}

pub fn slack(inst: &Instance, sched: &Schedule, job: JobId) -> Result<SlackReport> {
    let tl = Timeline::resolve(inst, sched)?;
    check_job(inst, job)?;
    Ok(slack_in(inst, &tl, job))
}

pub fn slack_table(inst: &Instance, sched: &Schedule) -> Result<Vec<SlackReport>> {
    let tl = Timeline::resolve(inst, sched)?;
    Ok((0..inst.n()).map(|j| slack_in(inst, &tl, j)).collect())
}

fn check_job(inst: &Instance, job: JobId) -> Result<()> {
    if job >= inst.n() {
        return Err(Error::InvalidParameter(format!("unknown job {job}")));
    }
    Ok(())
}

fn blocking_pairs_in(inst: &Instance, tl: &Timeline) -> Vec<BlockingPair> {
    let mut pairs = Vec::new();
    for job in 0..inst.n() {
        let end = tl.slots[job].end;
        let successor = sharing(inst, job)
            .filter(|&o| tl.slots[o].start >= end)
            .min_by(|&a, &b| tl.slots[a].start.cmp(&tl.slots[b].start).then(a.cmp(&b)));
        if let Some(second) = successor {
            pairs.push(BlockingPair {
                first: job,
                second,
                tight: tl.slots[second].start == end,
            });
        }
    }
    pairs
}

/// For every job with a later same-resource job, the pair with the earliest
/// such successor (ties by smallest id).
pub fn blocking_pairs(inst: &Instance, sched: &Schedule) -> Result<Vec<BlockingPair>> {
    let tl = Timeline::resolve(inst, sched)?;
    Ok(blocking_pairs_in(inst, &tl))
}

fn suffix_in(tl: &Timeline, job: JobId) -> BTreeSet<JobId> {
    let me = tl.slots[job];
    tl.slots
        .iter()
        .enumerate()
        .filter(|&(o, s)| o != job && s.machine == me.machine && s.end >= me.end)
        .map(|(o, _)| o)
        .collect()
}

/// Jobs on `job`'s machine completing no earlier than it, excluding `job`.
pub fn suffix(inst: &Instance, sched: &Schedule, job: JobId) -> Result<BTreeSet<JobId>> {
    let tl = Timeline::resolve(inst, sched)?;
    check_job(inst, job)?;
    Ok(suffix_in(&tl, job))
}

fn untangle_in(inst: &Instance, tl: &Timeline, pair: BlockingPair) -> Result<Timeline> {
    let refuse = |why: &str| Err(Error::NotUntangleable(why.to_string()));
    if inst.unrelated_times.is_some() {
        return refuse("durations depend on the machine");
    }
    if pair.first >= inst.n() || pair.second >= inst.n() {
        return refuse("unknown job");
    }
    if !inst.shares_resource(pair.first, pair.second) {
        return refuse("jobs share no resource");
    }
    let (a, b) = (tl.slots[pair.first], tl.slots[pair.second]);
    if b.start != a.end {
        return refuse("pair is not tight");
    }
    if a.machine == b.machine {
        return refuse("jobs already on the same machine");
    }
    let to_first = suffix_in(tl, pair.second);
    let to_second = suffix_in(tl, pair.first);
    let mut out = tl.clone();
    out.slots[pair.second].machine = a.machine;
    for j in to_first {
        out.slots[j].machine = a.machine;
    }
    for j in to_second {
        out.slots[j].machine = b.machine;
    }
    let report = validate_schedule(inst, &out.to_schedule());
    if !report.is_ok() {
        return Err(Error::NotUntangleable(format!("result violates constraints: {report}")));
    }
    Ok(out)
}

/// Swaps the machine suffixes at a tight cross-machine pair. Start and
/// completion times are unchanged.
pub fn untangle(inst: &Instance, sched: &Schedule, pair: BlockingPair) -> Result<Schedule> {
    let tl = Timeline::resolve(inst, sched)?;
    Ok(untangle_in(inst, &tl, pair)?.to_schedule())
}

/// Whether `job` fits on its own machine at `[start, start + p)` without
/// exceeding any of its resources' capacities.
fn resources_fit(inst: &Instance, tl: &Timeline, job: JobId, start: Rational) -> bool {
    let end = start + inst.processing_time(job, tl.slots[job].machine);
    for &r in &inst.jobs[job].resources {
        let mut events: Vec<(Rational, i32)> = Vec::new();
        for (o, s) in tl.slots.iter().enumerate() {
            if o != job && inst.jobs[o].resources.contains(&r) && s.start < end && s.end > start {
                events.push((s.start.max(start), 1));
                events.push((s.end.min(end), -1));
            }
        }
        events.sort();
        let mut load = 0i64;
        for (_, delta) in events {
            load += delta as i64;
            if load + 1 > inst.capacity(r) as i64 {
                return false;
            }
        }
    }
    true
}

/// One left-shift pass in start order. Returns whether anything moved.
fn shift_pass(inst: &Instance, tl: &mut Timeline) -> bool {
    let mut order: Vec<JobId> = (0..inst.n()).collect();
    order.sort_by(|&a, &b| tl.slots[a].start.cmp(&tl.slots[b].start).then(a.cmp(&b)));
    let mut moved = false;
    for job in order {
        let me = tl.slots[job];
        let machine_free = tl
            .slots
            .iter()
            .enumerate()
            .filter(|&(o, s)| o != job && s.machine == me.machine && s.start < me.start)
            .map(|(_, s)| s.end)
            .max()
            .unwrap_or_else(Rational::zero);
        if machine_free >= me.start {
            continue;
        }
        let mut candidates: Vec<Rational> = sharing(inst, job)
            .map(|o| tl.slots[o].end)
            .filter(|&t| t > machine_free && t < me.start)
            .collect();
        candidates.push(machine_free);
        candidates.sort();
        candidates.dedup();
        if let Some(t) = candidates.into_iter().find(|&t| resources_fit(inst, tl, job, t)) {
            let p = me.end - me.start;
            tl.slots[job].start = t;
            tl.slots[job].end = t + p;
            moved = true;
        }
    }
    moved
}

/// Untangles every tight cross-machine pair and left-shifts jobs into idle
/// time, repeating until nothing changes.
///
/// On plain partition instances the result is a tight schedule: idle-free, with
/// every tight blocking pair on one machine. Pairs whose untangling would break a
/// machine-subset or unmovable constraint are left alone.
pub fn normalize_tight(inst: &Instance, sched: &Schedule) -> Result<Schedule> {
    let report = validate_schedule(inst, sched);
    if !report.is_ok() {
        return Err(Error::Infeasible(report));
    }
    let mut tl = Timeline::resolve(inst, sched)?;
    let cap = (inst.n() * inst.n()).max(1);
    let mut rounds = 0;
    loop {
        let mut changed = false;
        let mut refused: BTreeSet<(JobId, JobId)> = BTreeSet::new();
        let mut untangles = 0;
        loop {
            let next = blocking_pairs_in(inst, &tl).into_iter().find(|p| {
                p.tight
                    && tl.slots[p.first].machine != tl.slots[p.second].machine
                    && !refused.contains(&(p.first, p.second))
            });
            let Some(pair) = next else { break };
            match untangle_in(inst, &tl, pair) {
                Ok(next) => {
                    tl = next;
                    changed = true;
                    untangles += 1;
                    if untangles > cap {
                        return Err(Error::NormalizeCap(cap));
                    }
                }
                Err(Error::NotUntangleable(_)) => {
                    refused.insert((pair.first, pair.second));
                }
                Err(e) => return Err(e),
            }
        }
        if shift_pass(inst, &mut tl) {
            changed = true;
        }
        if !changed {
            return Ok(tl.to_schedule());
        }
        rounds += 1;
        if rounds > cap {
            return Err(Error::NormalizeCap(cap));
        }
    }
}

/// Total idle time before jobs, summed over machines (time 0 to each job's start).
pub fn idle_time(inst: &Instance, sched: &Schedule) -> Result<Rational> {
    let tl = Timeline::resolve(inst, sched)?;
    let mut idle = Rational::zero();
    for seq in tl.machine_sequences(inst.machine_count) {
        let mut t = Rational::zero();
        for j in seq {
            let s = tl.slots[j];
            if s.start > t {
                idle += s.start - t;
            }
            t = t.max(s.end);
        }
    }
    Ok(idle)
}

fn sorted_resources(inst: &Instance, job: JobId) -> Vec<ResourceId> {
    let mut r = inst.jobs[job].resources.clone();
    r.sort_unstable();
    r
}

/// Maximal back-to-back runs of same-resource jobs on each machine.
pub fn train_sequences(inst: &Instance, sched: &Schedule) -> Result<Vec<TrainSequence>> {
    let tl = Timeline::resolve(inst, sched)?;
    let mut trains: Vec<TrainSequence> = Vec::new();
    for (machine, seq) in tl.machine_sequences(inst.machine_count).into_iter().enumerate() {
        let mut current: Option<TrainSequence> = None;
        for j in seq {
            let s = tl.slots[j];
            let resources = sorted_resources(inst, j);
            match &mut current {
                Some(train)
                    if train.end == s.start
                        && train.resources == resources
                        && !resources.is_empty() =>
                {
                    train.jobs.push(j);
                    train.end = s.end;
                }
                _ => {
                    trains.extend(current.take());
                    current = Some(TrainSequence {
                        machine,
                        resources,
                        jobs: vec![j],
                        start: s.start,
                        end: s.end,
                    });
                }
            }
        }
        trains.extend(current);
    }
    Ok(trains)
}

/// True iff every same-resource pair with strictly shorter duration also
/// completes strictly earlier.
pub fn check_spt_order(inst: &Instance, sched: &Schedule) -> Result<bool> {
    let tl = Timeline::resolve(inst, sched)?;
    let duration = |j: JobId| tl.slots[j].end - tl.slots[j].start;
    for a in 0..inst.n() {
        for b in sharing(inst, a) {
            if duration(a) < duration(b) && tl.slots[a].end >= tl.slots[b].end {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
