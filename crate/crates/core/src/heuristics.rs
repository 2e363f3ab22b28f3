//! List-scheduling heuristics and lower bounds.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flow;
use crate::instance::{Assignment, Instance, JobId, MachineId, Schedule};
use crate::rational::{int, one, Rational};
use crate::structure::normalize_tight;

/// Jobs sorted by `(p, id)`: the global order used by every SPT rule here.
pub fn spt_order(inst: &Instance) -> Vec<JobId> {
    let mut order: Vec<JobId> = (0..inst.n()).collect();
    order.sort_by(|&a, &b| inst.jobs[a].p.cmp(&inst.jobs[b].p).then(a.cmp(&b)));
    order
}

/// SPT-available list scheduling.
///
/// Time advances over completion events. At each event the free machines
/// (ascending index) collectively take the earliest list jobs whose resource
/// is idle. A job whose resource was released at exactly this instant goes to
/// the machine that released it; the other selected jobs fill the remaining
/// free machines in list order. Machines with no eligible job idle until the
/// next event.
pub fn spt_available(inst: &Instance) -> Result<Schedule> {
    if !inst.is_plain_partition() {
        return Err(Error::Unsupported(
            "spt-available requires plain partition instances".into(),
        ));
    }
    let n = inst.n();
    let m = inst.machine_count;
    let mut remaining = spt_order(inst);
    let mut machine_end = vec![Rational::zero(); m];
    // Last completion time of each resource and the machine that ran it.
    let mut released: Vec<Option<(Rational, MachineId)>> = vec![None; inst.resource_count];
    let mut entries = Vec::with_capacity(n);
    let mut now = Rational::zero();

    while !remaining.is_empty() {
        let free: Vec<MachineId> = (0..m).filter(|&i| machine_end[i] <= now).collect();
        let idle = |r: usize| released[r].is_none_or(|(t, _)| t <= now);

        let mut selected: Vec<JobId> = Vec::new();
        for &j in &remaining {
            if selected.len() == free.len() {
                break;
            }
            let r = inst.jobs[j].resources[0];
            if idle(r) && !selected.iter().any(|&s| inst.jobs[s].resources[0] == r) {
                selected.push(j);
            }
        }

        let mut taken = vec![false; m];
        let mut placement: Vec<(JobId, MachineId)> = Vec::new();
        let mut unplaced = Vec::new();
        for &j in &selected {
            let r = inst.jobs[j].resources[0];
            match released[r] {
                Some((t, k)) if t == now && free.contains(&k) && !taken[k] => {
                    taken[k] = true;
                    placement.push((j, k));
                }
                _ => unplaced.push(j),
            }
        }
        let mut spare = free.iter().copied().filter(|&i| !taken[i]);
        for j in unplaced {
            let i = spare.next().expect("one free machine per selected job");
            placement.push((j, i));
        }

        for (j, i) in placement {
            let end = now + inst.jobs[j].p;
            machine_end[i] = end;
            released[inst.jobs[j].resources[0]] = Some((end, i));
            entries.push(Assignment { job: j, machine: i, start: now });
            remaining.retain(|&x| x != j);
        }

        if remaining.is_empty() {
            break;
        }
        now = machine_end
            .iter()
            .copied()
            .filter(|&t| t > now)
            .min()
            .expect("a running job must complete while jobs remain");
    }
    Ok(Schedule::new(entries))
}

/// Per-job `k_j`, single-machine SPT completions and the derived bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// `k_j = p_j + Σ p_j'` over same-resource jobs earlier in the `(p, id)` order.
    pub per_job_k: Vec<Rational>,
    pub sum_k: Rational,
    /// Completion of each job in the single-machine SPT schedule.
    pub c1: Vec<Rational>,
    pub opt1: Rational,
    pub opt1_over_m: Rational,
}

impl BoundReport {
    /// `(1 − 1/m)·k_j + (1/m)·C¹_j`, the per-job ceiling on SPT-available completions.
    pub fn per_job_ceiling(&self, machines: usize) -> Vec<Rational> {
        let inv = Rational::new(1, machines as i128);
        self.per_job_k
            .iter()
            .zip(&self.c1)
            .map(|(k, c1)| (one() - inv) * k + inv * c1)
            .collect()
    }
}

/// Per-job and single-machine lower bounds. Same-resource jobs must run one at
/// a time and durations must not depend on the machine.
pub fn bounds(inst: &Instance) -> Result<BoundReport> {
    if inst.jobs.iter().any(|j| j.resources.len() != 1) {
        return Err(Error::Unsupported("bounds require exactly one resource per job".into()));
    }
    if !inst.all_unit_capacity() || inst.unrelated_times.is_some() {
        return Err(Error::Unsupported(
            "bounds require unit capacities and identical machines".into(),
        ));
    }
    if inst.machine_count == 0 {
        return Err(Error::InvalidParameter("no machines".into()));
    }
    let n = inst.n();
    let mut per_job_k = vec![Rational::zero(); n];
    let mut c1 = vec![Rational::zero(); n];
    let mut by_resource = vec![Rational::zero(); inst.resource_count];
    let mut total = Rational::zero();
    for j in spt_order(inst) {
        let p = inst.jobs[j].p;
        let r = inst.jobs[j].resources[0];
        by_resource[r] += p;
        per_job_k[j] = by_resource[r];
        total += p;
        c1[j] = total;
    }
    let sum_k = per_job_k.iter().sum();
    let opt1: Rational = c1.iter().sum();
    Ok(BoundReport {
        per_job_k,
        sum_k,
        c1,
        opt1,
        opt1_over_m: opt1 / int(inst.machine_count as i128),
    })
}

/// Shrinking algorithm for `1 ≤ p_j ≤ c`: solve the unit-time shadow instance
/// exactly, then start every job at `c` times its shadow start.
///
/// The result is returned uncompacted unless `compact` is set, in which case
/// [`normalize_tight`] removes the idle time.
pub fn shrink_solve(inst: &Instance, c: u32, compact: bool) -> Result<Schedule> {
    if c == 0 {
        return Err(Error::InvalidParameter("c must be at least 1".into()));
    }
    if inst.unrelated_times.is_some() || inst.unmovable {
        return Err(Error::Unsupported(
            "shrink requires identical machines without unmovable resources".into(),
        ));
    }
    if inst.jobs.iter().any(|j| j.resources.len() != 1) || !inst.all_unit_capacity() {
        return Err(Error::Unsupported(
            "shrink requires one unit-capacity resource per job".into(),
        ));
    }
    let bound = int(c as i128);
    if let Some(j) = inst.jobs.iter().find(|j| j.p < one() || j.p > bound) {
        return Err(Error::InvalidParameter(format!(
            "job {} has p = {} outside [1, {c}]",
            j.id, j.p
        )));
    }
    let mut shadow = inst.clone();
    for job in &mut shadow.jobs {
        job.p = one();
        job.weight = one();
    }
    let unit = flow::solve_unit(&shadow, false)?;
    let scaled = Schedule::new(
        unit.entries
            .iter()
            .map(|a| Assignment { start: a.start * bound, ..*a })
            .collect(),
    );
    if compact {
        normalize_tight(inst, &scaled)
    } else {
        Ok(scaled)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{objective, validate_schedule, Timeline};
    use crate::rational::ratio;
    use crate::structure::{blocking_pairs, idle_time};

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
    fn example41_spt_value() {
        let inst = example41(ratio(1, 2));
        let sched = spt_available(&inst).unwrap();
        assert_eq!(objective(&inst, &sched).unwrap(), int(51));
        assert_eq!(idle_time(&inst, &sched).unwrap(), int(0));
        let tight: Vec<_> = blocking_pairs(&inst, &sched)
            .unwrap()
            .into_iter()
            .filter(|p| p.tight && inst.jobs[p.first].resources[0] == 2)
            .collect();
        assert_eq!(tight.len(), 3);
        for p in tight {
            assert_eq!(sched.get(p.first).unwrap().machine, sched.get(p.second).unwrap().machine);
        }
    }

    #[test]
    fn lb_family_spt_value() {
        // c = 2: six unit jobs with own resources, six 1+ε jobs sharing one.
        let eps = ratio(1, 100);
        let mut jobs: Vec<(Rational, usize)> = (0..6).map(|r| (one(), r)).collect();
        jobs.extend((0..6).map(|_| (one() + eps, 6)));
        let inst = Instance::from_pairs(3, 7, jobs);
        let sched = spt_available(&inst).unwrap();
        assert_eq!(objective(&inst, &sched).unwrap(), ratio(4221, 100));
    }

    #[test]
    fn affinity_keeps_trains_on_one_machine() {
        // Machine 0 finishes resource 0 at t=1 while machine 1 (lower list job) also frees.
        // Without the affinity rule job 2 would take machine 0 and job 3 would land on machine 1.
        let inst = Instance::from_pairs(2, 3, [(int(1), 0), (int(1), 1), (int(2), 2), (int(2), 0)]);
        let sched = spt_available(&inst).unwrap();
        let tl = Timeline::resolve(&inst, &sched).unwrap();
        assert_eq!(tl.slots[0].machine, 0);
        assert_eq!(tl.slots[3].machine, 0);
        assert_eq!(tl.slots[3].start, tl.slots[0].end);
        assert_eq!(tl.slots[2].machine, 1);
    }

    #[test]
    fn rejects_non_plain() {
        let mut inst = example41(one());
        inst.unmovable = true;
        let err = spt_available(&inst).unwrap_err();
        assert_eq!(err.to_string(), "spt-available requires plain partition instances");
    }

    #[test]
    fn bounds_single_resource() {
        let inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(2), 0), (int(3), 0)]);
        let b = bounds(&inst).unwrap();
        assert_eq!(b.per_job_k, vec![int(1), int(3), int(6)]);
        assert_eq!(b.sum_k, int(10));
        assert_eq!(b.opt1, int(10));
        assert_eq!(b.opt1_over_m, int(5));
    }

    #[test]
    fn bounds_distinct_resources() {
        let inst = Instance::from_pairs(2, 2, [(int(1), 0), (int(1), 1)]);
        let b = bounds(&inst).unwrap();
        assert_eq!(b.per_job_k, vec![int(1), int(1)]);
        assert_eq!(b.sum_k, int(2));
        assert_eq!(b.c1, vec![int(1), int(2)]);
    }

    #[test]
    fn bounds_ties_follow_id_order() {
        let inst = Instance::from_pairs(1, 1, [(int(2), 0), (int(2), 0)]);
        let b = bounds(&inst).unwrap();
        assert_eq!(b.per_job_k, vec![int(2), int(4)]);
    }

    #[test]
    fn bounds_reject_shared_capacity() {
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        inst.capacities = Some(vec![2]);
        assert!(matches!(bounds(&inst), Err(Error::Unsupported(_))));
    }

    #[test]
    fn shrink_identity_for_unit_jobs() {
        let inst = Instance::from_pairs(2, 2, [(int(1), 0), (int(1), 0), (int(1), 1), (int(1), 1)]);
        let shrunk = shrink_solve(&inst, 1, false).unwrap();
        assert_eq!(shrunk, flow::solve_unit(&inst, false).unwrap());
    }

    #[test]
    fn shrink_bound_small_case() {
        let inst = Instance::from_pairs(2, 2, [(int(1), 0), (int(2), 0), (int(2), 1), (int(1), 1)]);
        let shrunk = shrink_solve(&inst, 2, false).unwrap();
        assert!(validate_schedule(&inst, &shrunk).is_ok());
        let value = objective(&inst, &shrunk).unwrap();
        assert!(value <= int(12), "{value}");
        let compact = shrink_solve(&inst, 2, true).unwrap();
        assert!(objective(&inst, &compact).unwrap() <= value);
        assert_eq!(idle_time(&inst, &compact).unwrap(), int(0));
    }

    #[test]
    fn shrink_rejects_out_of_range() {
        let inst = Instance::from_pairs(1, 1, [(int(4), 0)]);
        assert!(matches!(shrink_solve(&inst, 3, false), Err(Error::InvalidParameter(_))));
    }
}
