//! JSON file formats for instances, schedules and generator metadata.
//!
//! Rationals are written as `[numerator, denominator]` pairs; a bare integer
//! is also accepted on input. Output is pretty-printed with a trailing newline
//! and a fixed key order so identical values give identical bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{validate_instance, Assignment, Instance, Job, MachineId, Schedule};
use crate::rational::{one, Rational, RationalRepr};

#[derive(Serialize, Deserialize)]
struct JobFile {
    id: usize,
    p: RationalRepr,
    resources: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<RationalRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    machines: usize,
    resources: usize,
    jobs: Vec<JobFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    machine_subsets: Option<BTreeMap<usize, Vec<MachineId>>>,
    #[serde(default, skip_serializing_if = "is_false")]
    unmovable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    capacities: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unrelated_times: Option<Vec<Vec<RationalRepr>>>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
struct EntryFile {
    job: usize,
    machine: usize,
    start: RationalRepr,
}

#[derive(Serialize, Deserialize)]
struct ScheduleFile {
    entries: Vec<EntryFile>,
}

/// Sidecar written next to generated instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub kind: String,
    #[serde(default)]
    pub threshold: Option<RationalRepr>,
    pub provenance: serde_json::Value,
}

fn reduced_pair(value: &Rational) -> Result<RationalRepr> {
    RationalRepr::from_rational(value)
}

fn pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

pub fn instance_to_string(inst: &Instance) -> Result<String> {
    let jobs = inst
        .jobs
        .iter()
        .map(|j| {
            Ok(JobFile {
                id: j.id,
                p: reduced_pair(&j.p)?,
                resources: j.resources.clone(),
                weight: if j.weight == one() { None } else { Some(reduced_pair(&j.weight)?) },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let machine_subsets = inst.machine_subsets.as_ref().map(|subsets| {
        subsets
            .iter()
            .map(|(&r, set)| (r, set.iter().copied().collect()))
            .collect()
    });
    let unrelated_times = inst
        .unrelated_times
        .as_ref()
        .map(|rows| {
            rows.iter()
                .map(|row| row.iter().map(reduced_pair).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let file = InstanceFile {
        machines: inst.machine_count,
        resources: inst.resource_count,
        jobs,
        machine_subsets,
        unmovable: inst.unmovable,
        capacities: inst.capacities.clone(),
        unrelated_times,
    };
    pretty(&file)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let jobs = file
        .jobs
        .into_iter()
        .map(|j| {
            let mut job = Job::new(j.id, j.p.to_rational()?, j.resources);
            if let Some(w) = j.weight {
                job.weight = w.to_rational()?;
            }
            Ok(job)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut inst = Instance::new(file.machines, file.resources, jobs);
    inst.unmovable = file.unmovable;
    inst.capacities = file.capacities;
    inst.machine_subsets = file
        .machine_subsets
        .map(|subsets| subsets.into_iter().map(|(r, ms)| (r, ms.into_iter().collect())).collect());
    if let Some(rows) = file.unrelated_times {
        inst.unrelated_times = Some(
            rows.into_iter()
                .map(|row| row.into_iter().map(RationalRepr::to_rational).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let report = validate_instance(&inst);
    if !report.is_ok() {
        return Err(Error::InvalidInstance(report));
    }
    Ok(inst)
}

pub fn schedule_to_string(sched: &Schedule) -> Result<String> {
    let entries = sched
        .entries
        .iter()
        .map(|a| {
            Ok(EntryFile {
                job: a.job,
                machine: a.machine,
                start: reduced_pair(&a.start)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    pretty(&ScheduleFile { entries })
}

pub fn parse_schedule(text: &str) -> Result<Schedule> {
    let file: ScheduleFile = serde_json::from_str(text)?;
    let entries = file
        .entries
        .into_iter()
        .map(|e| {
            Ok(Assignment {
                job: e.job,
                machine: e.machine,
                start: e.start.to_rational()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Schedule::new(entries))
}

pub fn metadata_to_string(meta: &Metadata) -> Result<String> {
    pretty(meta)
}

pub fn parse_metadata(text: &str) -> Result<Metadata> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn write_instance(path: impl AsRef<Path>, inst: &Instance) -> Result<()> {
    Ok(fs::write(path, instance_to_string(inst)?)?)
}

pub fn read_schedule(path: impl AsRef<Path>) -> Result<Schedule> {
    parse_schedule(&fs::read_to_string(path)?)
}

pub fn write_schedule(path: impl AsRef<Path>, sched: &Schedule) -> Result<()> {
    Ok(fs::write(path, schedule_to_string(sched)?)?)
}

pub fn write_metadata(path: impl AsRef<Path>, meta: &Metadata) -> Result<()> {
    Ok(fs::write(path, metadata_to_string(meta)?)?)
}
