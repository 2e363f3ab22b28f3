//! Problem and schedule data model.
//!
//! An [`Instance`] is a set of jobs on `m` identical machines where each job
//! holds a set of resources (exactly one in the plain partition problem). Two
//! jobs sharing a resource may not overlap in time beyond that resource's
//! capacity. Optional extensions: per-resource machine subsets, unmovable
//! resources, resource capacities and an unrelated processing-time matrix.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{one, Rational};

pub type JobId = usize;
pub type MachineId = usize;
pub type ResourceId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub id: JobId,
    pub p: Rational,
    pub resources: Vec<ResourceId>,
    pub weight: Rational,
}

impl Job {
    pub fn new(id: JobId, p: Rational, resources: Vec<ResourceId>) -> Self {
        Job {
            id,
            p,
            resources,
            weight: one(),
        }
    }

    pub fn with_weight(mut self, weight: Rational) -> Self {
        self.weight = weight;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub machine_count: usize,
    /// Job `i` must carry id `i`.
    pub jobs: Vec<Job>,
    pub resource_count: usize,
    /// Resource → machines it may be used on. Resources without an entry are unrestricted.
    pub machine_subsets: Option<BTreeMap<ResourceId, BTreeSet<MachineId>>>,
    /// All jobs of one resource must run on a single machine.
    pub unmovable: bool,
    /// Units available per resource; `None` means one unit of each.
    pub capacities: Option<Vec<u32>>,
    /// `unrelated_times[i][j]` is the duration of job `j` on machine `i`.
    pub unrelated_times: Option<Vec<Vec<Rational>>>,
}

impl Instance {
    pub fn new(machine_count: usize, resource_count: usize, jobs: Vec<Job>) -> Self {
        Instance {
            machine_count,
            jobs,
            resource_count,
            machine_subsets: None,
            unmovable: false,
            capacities: None,
            unrelated_times: None,
        }
    }

    /// Plain partition instance from `(p, resource)` pairs, ids in order.
    pub fn from_pairs(
        machine_count: usize,
        resource_count: usize,
        jobs: impl IntoIterator<Item = (Rational, ResourceId)>,
    ) -> Self {
        let jobs = jobs
            .into_iter()
            .enumerate()
            .map(|(id, (p, r))| Job::new(id, p, vec![r]))
            .collect();
        Instance::new(machine_count, resource_count, jobs)
    }

    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    pub fn capacity(&self, resource: ResourceId) -> u32 {
        self.capacities
            .as_ref()
            .and_then(|c| c.get(resource).copied())
            .unwrap_or(1)
    }

    pub fn processing_time(&self, job: JobId, machine: MachineId) -> Rational {
        match &self.unrelated_times {
            Some(matrix) => matrix[machine][job],
            None => self.jobs[job].p,
        }
    }

    /// Whether every resource of `job` may be used on `machine`.
    pub fn machine_allowed(&self, job: JobId, machine: MachineId) -> bool {
        let Some(subsets) = &self.machine_subsets else {
            return true;
        };
        self.jobs[job]
            .resources
            .iter()
            .all(|r| subsets.get(r).is_none_or(|set| set.contains(&machine)))
    }

    pub fn shares_resource(&self, a: JobId, b: JobId) -> bool {
        let ra = &self.jobs[a].resources;
        self.jobs[b].resources.iter().any(|r| ra.contains(r))
    }

    /// Jobs using each resource, in id order.
    pub fn jobs_by_resource(&self) -> Vec<Vec<JobId>> {
        let mut out = vec![Vec::new(); self.resource_count];
        for job in &self.jobs {
            for &r in &job.resources {
                if r < self.resource_count {
                    out[r].push(job.id);
                }
            }
        }
        out
    }

    pub fn is_unit(&self) -> bool {
        self.unrelated_times.is_none() && self.jobs.iter().all(|j| j.p == one())
    }

    pub fn all_unit_capacity(&self) -> bool {
        (0..self.resource_count).all(|r| self.capacity(r) == 1)
    }

    /// Exactly one resource per job, unit capacities and none of the optional constraints.
    pub fn is_plain_partition(&self) -> bool {
        self.jobs.iter().all(|j| j.resources.len() == 1)
            && self.machine_subsets.is_none()
            && !self.unmovable
            && self.unrelated_times.is_none()
            && self.all_unit_capacity()
    }

    pub fn has_machine_specific_data(&self) -> bool {
        self.machine_subsets.is_some() || self.unrelated_times.is_some()
    }
}

/// Where and when one job runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub job: JobId,
    pub machine: MachineId,
    pub start: Rational,
}

/// A non-preemptive schedule: one entry per job.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Schedule {
    pub entries: Vec<Assignment>,
}

impl Schedule {
    /// Entries are kept sorted by job id so that equal schedules compare equal.
    pub fn new(mut entries: Vec<Assignment>) -> Self {
        entries.sort_by_key(|a| a.job);
        Schedule { entries }
    }

    pub fn from_slots(slots: impl IntoIterator<Item = (MachineId, Rational)>) -> Self {
        Schedule::new(
            slots
                .into_iter()
                .enumerate()
                .map(|(job, (machine, start))| Assignment {
                    job,
                    machine,
                    start,
                })
                .collect(),
        )
    }

    pub fn get(&self, job: JobId) -> Option<&Assignment> {
        match self.entries.binary_search_by_key(&job, |a| a.job) {
            Ok(i) => Some(&self.entries[i]),
            Err(_) => self.entries.iter().find(|a| a.job == job),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub machine: MachineId,
    pub start: Rational,
    pub end: Rational,
}

/// A schedule resolved against its instance: `slots[j]` for every job `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Timeline {
    pub slots: Vec<Slot>,
}

impl Timeline {
    pub fn resolve(inst: &Instance, sched: &Schedule) -> Result<Timeline> {
        let mut slots: Vec<Option<Slot>> = vec![None; inst.n()];
        for a in &sched.entries {
            if a.job >= inst.n() {
                return Err(Error::IncompleteSchedule(format!("unknown job {}", a.job)));
            }
            if a.machine >= inst.machine_count {
                return Err(Error::IncompleteSchedule(format!(
                    "job {} on unknown machine {}",
                    a.job, a.machine
                )));
            }
            if slots[a.job].is_some() {
                return Err(Error::IncompleteSchedule(format!("job {} listed twice", a.job)));
            }
            slots[a.job] = Some(Slot {
                machine: a.machine,
                start: a.start,
                end: a.start + inst.processing_time(a.job, a.machine),
            });
        }
        let slots = slots
            .into_iter()
            .enumerate()
            .map(|(j, s)| s.ok_or_else(|| Error::IncompleteSchedule(format!("job {j} missing"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Timeline { slots })
    }

    pub fn to_schedule(&self) -> Schedule {
        Schedule::from_slots(self.slots.iter().map(|s| (s.machine, s.start)))
    }

    pub fn completion(&self, job: JobId) -> Rational {
        self.slots[job].end
    }

    /// Jobs on each machine ordered by start time (ties by id).
    pub fn machine_sequences(&self, machine_count: usize) -> Vec<Vec<JobId>> {
        let mut out = vec![Vec::new(); machine_count];
        for (j, s) in self.slots.iter().enumerate() {
            out[s.machine].push(j);
        }
        for seq in &mut out {
            seq.sort_by(|&a, &b| self.slots[a].start.cmp(&self.slots[b].start).then(a.cmp(&b)));
        }
        out
    }

    pub fn weighted_sum(&self, inst: &Instance) -> Rational {
        self.slots
            .iter()
            .zip(&inst.jobs)
            .map(|(s, j)| s.end * j.weight)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoMachines,
    NoResources,
    JobIdMismatch { index: usize, id: JobId },
    NonPositiveProcessingTime { job: JobId },
    NonPositiveWeight { job: JobId },
    ResourceOutOfRange { job: JobId, resource: ResourceId },
    DuplicateResource { job: JobId, resource: ResourceId },
    SubsetResourceOutOfRange { resource: ResourceId },
    EmptyMachineSubset { resource: ResourceId },
    SubsetMachineOutOfRange { resource: ResourceId, machine: MachineId },
    CapacityCount { expected: usize, found: usize },
    ZeroCapacity { resource: ResourceId },
    UnrelatedShape { expected: (usize, usize), found: (usize, usize) },
    NonPositiveUnrelatedTime { machine: MachineId, job: JobId },

    MissingJob { job: JobId },
    DuplicateJob { job: JobId },
    UnknownJob { job: JobId },
    MachineOutOfRange { job: JobId, machine: MachineId },
    NegativeStart { job: JobId },
    MachineOverlap { machine: MachineId, first: JobId, second: JobId },
    ResourceOverlap {
        resource: ResourceId,
        from: Rational,
        to: Rational,
        load: u32,
        capacity: u32,
    },
    ForbiddenMachine { job: JobId, resource: ResourceId, machine: MachineId },
    UnmovableSplit { resource: ResourceId, machines: Vec<MachineId> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NoMachines => write!(f, "machine count must be positive"),
            NoResources => write!(f, "resource count must be positive"),
            JobIdMismatch { index, id } => write!(f, "job at index {index} has id {id}"),
            NonPositiveProcessingTime { job } => write!(f, "job {job}: processing time must be positive"),
            NonPositiveWeight { job } => write!(f, "job {job}: weight must be positive"),
            ResourceOutOfRange { job, resource } => {
                write!(f, "job {job}: resource id out of range ({resource})")
            }
            DuplicateResource { job, resource } => write!(f, "job {job}: resource {resource} listed twice"),
            SubsetResourceOutOfRange { resource } => {
                write!(f, "machine subset for resource id out of range ({resource})")
            }
            EmptyMachineSubset { resource } => write!(f, "empty machine subset for resource {resource}"),
            SubsetMachineOutOfRange { resource, machine } => {
                write!(f, "machine subset of resource {resource} names unknown machine {machine}")
            }
            CapacityCount { expected, found } => {
                write!(f, "expected {expected} capacities, found {found}")
            }
            ZeroCapacity { resource } => write!(f, "resource {resource} has zero capacity"),
            UnrelatedShape { expected, found } => write!(
                f,
                "unrelated time matrix must be {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            NonPositiveUnrelatedTime { machine, job } => {
                write!(f, "unrelated time of job {job} on machine {machine} must be positive")
            }
            MissingJob { job } => write!(f, "job {job} missing from schedule"),
            DuplicateJob { job } => write!(f, "job {job} scheduled more than once"),
            UnknownJob { job } => write!(f, "schedule names unknown job {job}"),
            MachineOutOfRange { job, machine } => write!(f, "job {job} on unknown machine {machine}"),
            NegativeStart { job } => write!(f, "job {job} starts before time 0"),
            MachineOverlap { machine, first, second } => {
                write!(f, "machine {machine} overlap: jobs {first} and {second}")
            }
            ResourceOverlap { resource, from, to, load, capacity } => write!(
                f,
                "resource {resource} overlap at t∈[{from},{to}) (load {load} > capacity {capacity})"
            ),
            ForbiddenMachine { job, resource, machine } => {
                write!(f, "job {job}: resource {resource} not allowed on machine {machine}")
            }
            UnmovableSplit { resource, machines } => {
                write!(f, "unmovable resource {resource} used on machines {machines:?}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn validate_instance(inst: &Instance) -> ValidationReport {
    let mut report = ValidationReport::default();
    if inst.machine_count == 0 {
        report.push(Violation::NoMachines);
    }
    if inst.resource_count == 0 {
        report.push(Violation::NoResources);
    }
    for (index, job) in inst.jobs.iter().enumerate() {
        if job.id != index {
            report.push(Violation::JobIdMismatch { index, id: job.id });
        }
        if job.p <= Rational::zero() {
            report.push(Violation::NonPositiveProcessingTime { job: job.id });
        }
        if job.weight <= Rational::zero() {
            report.push(Violation::NonPositiveWeight { job: job.id });
        }
        let mut seen = BTreeSet::new();
        for &r in &job.resources {
            if r >= inst.resource_count {
                report.push(Violation::ResourceOutOfRange { job: job.id, resource: r });
            }
            if !seen.insert(r) {
                report.push(Violation::DuplicateResource { job: job.id, resource: r });
            }
        }
    }
    if let Some(subsets) = &inst.machine_subsets {
        for (&r, machines) in subsets {
            if r >= inst.resource_count {
                report.push(Violation::SubsetResourceOutOfRange { resource: r });
            }
            if machines.is_empty() {
                report.push(Violation::EmptyMachineSubset { resource: r });
            }
            for &i in machines {
                if i >= inst.machine_count {
                    report.push(Violation::SubsetMachineOutOfRange { resource: r, machine: i });
                }
            }
        }
    }
    if let Some(caps) = &inst.capacities {
        if caps.len() != inst.resource_count {
            report.push(Violation::CapacityCount {
                expected: inst.resource_count,
                found: caps.len(),
            });
        }
        for (r, &c) in caps.iter().enumerate() {
            if c == 0 {
                report.push(Violation::ZeroCapacity { resource: r });
            }
        }
    }
    if let Some(matrix) = &inst.unrelated_times {
        let cols = matrix.first().map_or(0, Vec::len);
        if matrix.len() != inst.machine_count || matrix.iter().any(|row| row.len() != inst.n()) {
            report.push(Violation::UnrelatedShape {
                expected: (inst.machine_count, inst.n()),
                found: (matrix.len(), cols),
            });
        } else {
            for (i, row) in matrix.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    if *p <= Rational::zero() {
                        report.push(Violation::NonPositiveUnrelatedTime { machine: i, job: j });
                    }
                }
            }
        }
    }
    report
}

/// Checks a schedule against every constraint of the instance.
///
/// Machine and resource conflicts are found with a sweep over interval end
/// points, so over-capacity intervals are reported as maximal `[from, to)` runs.
pub fn validate_schedule(inst: &Instance, sched: &Schedule) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = inst.n();
    let mut slots: Vec<Option<Slot>> = vec![None; n];
    for a in &sched.entries {
        if a.job >= n {
            report.push(Violation::UnknownJob { job: a.job });
            continue;
        }
        if a.machine >= inst.machine_count {
            report.push(Violation::MachineOutOfRange {
                job: a.job,
                machine: a.machine,
            });
            continue;
        }
        if slots[a.job].is_some() {
            report.push(Violation::DuplicateJob { job: a.job });
            continue;
        }
        if a.start < Rational::zero() {
            report.push(Violation::NegativeStart { job: a.job });
        }
        slots[a.job] = Some(Slot {
            machine: a.machine,
            start: a.start,
            end: a.start + inst.processing_time(a.job, a.machine),
        });
    }
    for (job, slot) in slots.iter().enumerate() {
        if slot.is_none() {
            report.push(Violation::MissingJob { job });
        }
    }

    // Machines: sorted by start, a job overlaps if it starts before the running max end.
    let mut per_machine: Vec<Vec<JobId>> = vec![Vec::new(); inst.machine_count];
    for (j, s) in slots.iter().enumerate() {
        if let Some(s) = s {
            per_machine[s.machine].push(j);
        }
    }
    for (machine, jobs) in per_machine.iter_mut().enumerate() {
        jobs.sort_by(|&a, &b| {
            let (sa, sb) = (slots[a].unwrap(), slots[b].unwrap());
            sa.start.cmp(&sb.start).then(a.cmp(&b))
        });
        let mut latest: Option<(JobId, Rational)> = None;
        for &j in jobs.iter() {
            let s = slots[j].unwrap();
            if let Some((prev, end)) = latest {
                if s.start < end {
                    report.push(Violation::MachineOverlap {
                        machine,
                        first: prev,
                        second: j,
                    });
                }
                if s.end > end {
                    latest = Some((j, s.end));
                }
            } else {
                latest = Some((j, s.end));
            }
        }
    }

    // Resources: event sweep, ends processed before starts at equal times.
    for (r, users) in inst.jobs_by_resource().iter().enumerate() {
        let capacity = inst.capacity(r);
        let mut events: Vec<(Rational, i32)> = Vec::new();
        for &j in users {
            if let Some(s) = slots[j] {
                events.push((s.start, 1));
                events.push((s.end, -1));
            }
        }
        events.sort();
        let mut load: i64 = 0;
        let mut open: Option<(Rational, u32)> = None;
        let mut i = 0;
        while i < events.len() {
            let t = events[i].0;
            while i < events.len() && events[i].0 == t {
                load += events[i].1 as i64;
                i += 1;
            }
            let over = load > capacity as i64;
            match (&mut open, over) {
                (None, true) => open = Some((t, load as u32)),
                (Some((_, peak)), true) => *peak = (*peak).max(load as u32),
                (Some((from, peak)), false) => {
                    report.push(Violation::ResourceOverlap {
                        resource: r,
                        from: *from,
                        to: t,
                        load: *peak,
                        capacity,
                    });
                    open = None;
                }
                (None, false) => {}
            }
        }
    }

    if let Some(subsets) = &inst.machine_subsets {
        for (j, s) in slots.iter().enumerate() {
            let Some(s) = s else { continue };
            for &r in &inst.jobs[j].resources {
                if let Some(allowed) = subsets.get(&r) {
                    if !allowed.contains(&s.machine) {
                        report.push(Violation::ForbiddenMachine {
                            job: j,
                            resource: r,
                            machine: s.machine,
                        });
                    }
                }
            }
        }
    }

    if inst.unmovable {
        for (r, users) in inst.jobs_by_resource().iter().enumerate() {
            let machines: BTreeSet<MachineId> =
                users.iter().filter_map(|&j| slots[j].map(|s| s.machine)).collect();
            if machines.len() > 1 {
                report.push(Violation::UnmovableSplit {
                    resource: r,
                    machines: machines.into_iter().collect(),
                });
            }
        }
    }
    report
}

/// `Σ_j w_j C_j` of a feasible schedule.
pub fn objective(inst: &Instance, sched: &Schedule) -> Result<Rational> {
    let report = validate_schedule(inst, sched);
    if !report.is_ok() {
        return Err(Error::Infeasible(report));
    }
    Ok(Timeline::resolve(inst, sched)?.weighted_sum(inst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn unit_pair_same_resource(capacity: Option<u32>) -> Instance {
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        inst.capacities = capacity.map(|c| vec![c]);
        inst
    }

    #[test]
    fn minimal_instance_is_valid() {
        let inst = Instance::from_pairs(1, 1, [(int(1), 0)]);
        assert!(validate_instance(&inst).is_ok());
    }

    #[test]
    fn resource_out_of_range() {
        let inst = Instance::from_pairs(1, 2, [(int(1), 5)]);
        let report = validate_instance(&inst);
        assert_eq!(
            report.violations,
            vec![Violation::ResourceOutOfRange { job: 0, resource: 5 }]
        );
        assert!(report.to_string().contains("resource id out of range"));
    }

    #[test]
    fn empty_machine_subset() {
        let mut inst = Instance::from_pairs(1, 1, [(int(1), 0)]);
        inst.machine_subsets = Some(BTreeMap::from([(0, BTreeSet::new())]));
        let report = validate_instance(&inst);
        assert_eq!(report.violations, vec![Violation::EmptyMachineSubset { resource: 0 }]);
        assert!(report.to_string().contains("empty machine subset"));
    }

    #[test]
    fn bad_times_and_ids() {
        let mut inst = Instance::from_pairs(1, 1, [(int(0), 0), (int(1), 0)]);
        inst.jobs[1].id = 7;
        inst.jobs[1].weight = int(-1);
        let v = validate_instance(&inst).violations;
        assert!(v.contains(&Violation::NonPositiveProcessingTime { job: 0 }));
        assert!(v.contains(&Violation::JobIdMismatch { index: 1, id: 7 }));
        assert!(v.contains(&Violation::NonPositiveWeight { job: 7 }));
    }

    #[test]
    fn capacity_one_overlap_detected() {
        let inst = unit_pair_same_resource(None);
        let sched = Schedule::from_slots([(0, int(0)), (1, int(0))]);
        let report = validate_schedule(&inst, &sched);
        assert_eq!(
            report.violations,
            vec![Violation::ResourceOverlap {
                resource: 0,
                from: int(0),
                to: int(1),
                load: 2,
                capacity: 1
            }]
        );
        assert!(report.to_string().contains("resource 0 overlap at t∈[0,1)"));
        assert!(matches!(objective(&inst, &sched), Err(Error::Infeasible(_))));
    }

    #[test]
    fn capacity_two_allows_pair() {
        let inst = unit_pair_same_resource(Some(2));
        let sched = Schedule::from_slots([(0, int(0)), (1, int(0))]);
        assert!(validate_schedule(&inst, &sched).is_ok());
        assert_eq!(objective(&inst, &sched).unwrap(), int(2));
    }

    #[test]
    fn single_job_objective() {
        let inst = Instance::from_pairs(1, 1, [(int(1), 0)]);
        let sched = Schedule::from_slots([(0, int(0))]);
        assert_eq!(objective(&inst, &sched).unwrap(), int(1));
    }

    #[test]
    fn weighted_objective() {
        let mut inst = Instance::from_pairs(1, 2, [(int(1), 0), (int(2), 1)]);
        inst.jobs[1].weight = ratio(1, 2);
        let sched = Schedule::from_slots([(0, int(0)), (0, int(1))]);
        assert_eq!(objective(&inst, &sched).unwrap(), int(1) + ratio(3, 2));
    }

    #[test]
    fn machine_overlap_missing_and_duplicates() {
        let inst = Instance::from_pairs(1, 3, [(int(2), 0), (int(1), 1), (int(1), 2)]);
        let sched = Schedule {
            entries: vec![
                Assignment { job: 0, machine: 0, start: int(0) },
                Assignment { job: 1, machine: 0, start: int(1) },
                Assignment { job: 1, machine: 0, start: int(5) },
                Assignment { job: 9, machine: 0, start: int(5) },
            ],
        };
        let v = validate_schedule(&inst, &sched).violations;
        assert!(v.contains(&Violation::MachineOverlap { machine: 0, first: 0, second: 1 }));
        assert!(v.contains(&Violation::DuplicateJob { job: 1 }));
        assert!(v.contains(&Violation::UnknownJob { job: 9 }));
        assert!(v.contains(&Violation::MissingJob { job: 2 }));
    }

    #[test]
    fn subset_and_unmovable_violations() {
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        inst.machine_subsets = Some(BTreeMap::from([(0, BTreeSet::from([0]))]));
        inst.unmovable = true;
        let sched = Schedule::from_slots([(0, int(0)), (1, int(1))]);
        let v = validate_schedule(&inst, &sched).violations;
        assert!(v.contains(&Violation::ForbiddenMachine { job: 1, resource: 0, machine: 1 }));
        assert!(v.contains(&Violation::UnmovableSplit { resource: 0, machines: vec![0, 1] }));
    }

    #[test]
    fn unrelated_times_drive_completion() {
        let mut inst = Instance::from_pairs(2, 2, [(int(1), 0), (int(1), 1)]);
        inst.unrelated_times = Some(vec![vec![int(1), int(5)], vec![int(3), int(2)]]);
        let sched = Schedule::from_slots([(0, int(0)), (1, int(0))]);
        assert_eq!(objective(&inst, &sched).unwrap(), int(3));
    }

    #[test]
    fn back_to_back_is_not_overlap() {
        let inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        let sched = Schedule::from_slots([(0, int(0)), (1, int(1))]);
        assert!(validate_schedule(&inst, &sched).is_ok());
    }
}
