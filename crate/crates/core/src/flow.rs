//! Exact solver for unit processing times through a position-indexed
//! min-cost-flow network.
//!
//! One unit of flow per job travels
//! `source → job → (resource, position) → (resource, position)' → (machine, position) → sink`.
//! The `(resource, position)` duplicate pair carries the resource capacity, the
//! `(machine, position)` node admits one job, and the position cost is paid on
//! the machine→sink arc (or, in weighted mode, `w_j · position` on the job arc).
//! A flow of cost `c` corresponds to a schedule with objective `c` and vice versa.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{Assignment, Instance, JobId, MachineId, ResourceId, Schedule};
use crate::rational::{int, one, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Source,
    Sink,
    Job(JobId),
    /// `lane` is a resource id, or the synthetic always-free lane for resource-free jobs.
    ResourcePos { lane: ResourceId, pos: usize },
    ResourcePosOut { lane: ResourceId, pos: usize },
    MachinePos { machine: MachineId, pos: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub capacity: u32,
    pub cost: Rational,
}

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    pub nodes: Vec<NodeKind>,
    pub arcs: Vec<Arc>,
    pub required_flow: usize,
    pub source: usize,
    pub sink: usize,
}

impl FlowNetwork {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arc list: a node-count header line, then `tail head capacity cost` per arc.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.nodes.len());
        for a in &self.arcs {
            let _ = writeln!(out, "{} {} {} {}", a.tail, a.head, a.capacity, a.cost);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    /// Flow on each arc of the network, in arc order.
    pub values: Vec<u32>,
    pub cost: Rational,
}

impl Flow {
    /// Capacity bounds, conservation at inner nodes and total value.
    pub fn check(&self, net: &FlowNetwork) -> Result<()> {
        if self.values.len() != net.arcs.len() {
            return Err(Error::InvalidFlow("flow/arc count mismatch".into()));
        }
        let mut balance = vec![0i64; net.nodes.len()];
        for (a, &f) in net.arcs.iter().zip(&self.values) {
            if f > a.capacity {
                return Err(Error::InvalidFlow(format!("arc {}->{} over capacity", a.tail, a.head)));
            }
            balance[a.tail] -= f as i64;
            balance[a.head] += f as i64;
        }
        for (v, &b) in balance.iter().enumerate() {
            if v != net.source && v != net.sink && b != 0 {
                return Err(Error::InvalidFlow(format!("conservation violated at node {v}")));
            }
        }
        if balance[net.sink] != net.required_flow as i64 {
            return Err(Error::InvalidFlow(format!(
                "flow value {} != required {}",
                balance[net.sink], net.required_flow
            )));
        }
        let cost: Rational = net
            .arcs
            .iter()
            .zip(&self.values)
            .map(|(a, &f)| a.cost * int(f as i128))
            .sum();
        if cost != self.cost {
            return Err(Error::InvalidFlow("recorded cost differs from arc costs".into()));
        }
        Ok(())
    }
}

fn unit_preconditions(inst: &Instance) -> Result<()> {
    if !inst.is_unit() {
        return Err(Error::Unsupported("flow solver requires p_j = 1".into()));
    }
    if inst.unmovable {
        return Err(Error::Unsupported(
            "flow solver does not support unmovable resources".into(),
        ));
    }
    if inst.jobs.iter().any(|j| j.resources.len() > 1) {
        return Err(Error::Unsupported(
            "flow solver requires at most one resource per job".into(),
        ));
    }
    Ok(())
}

/// Builds the network for a unit-time instance. Positions run `1..=n`.
pub fn build_network(inst: &Instance, weighted: bool) -> Result<FlowNetwork> {
    unit_preconditions(inst)?;
    let n = inst.n();
    let m = inst.machine_count;
    let dummy_lane = inst.jobs.iter().any(|j| j.resources.is_empty());
    let lanes = inst.resource_count + usize::from(dummy_lane);
    let lane_of = |job: JobId| inst.jobs[job].resources.first().copied().unwrap_or(inst.resource_count);
    let lane_capacity = |lane: usize| {
        if lane == inst.resource_count {
            n as u32
        } else {
            inst.capacity(lane)
        }
    };

    let source = 0;
    let sink = 1;
    let job_base = 2;
    let rp_base = job_base + n;
    let rp_out_base = rp_base + lanes * n;
    let mp_base = rp_out_base + lanes * n;
    let rp = |lane: usize, pos: usize| rp_base + lane * n + (pos - 1);
    let rp_out = |lane: usize, pos: usize| rp_out_base + lane * n + (pos - 1);
    let mp = |machine: usize, pos: usize| mp_base + machine * n + (pos - 1);

    let mut nodes = vec![NodeKind::Source, NodeKind::Sink];
    nodes.extend((0..n).map(NodeKind::Job));
    for lane in 0..lanes {
        nodes.extend((1..=n).map(|pos| NodeKind::ResourcePos { lane, pos }));
    }
    for lane in 0..lanes {
        nodes.extend((1..=n).map(|pos| NodeKind::ResourcePosOut { lane, pos }));
    }
    for machine in 0..m {
        nodes.extend((1..=n).map(|pos| NodeKind::MachinePos { machine, pos }));
    }

    let mut arcs = Vec::new();
    let mut arc = |tail, head, capacity, cost| arcs.push(Arc { tail, head, capacity, cost });
    for j in 0..n {
        arc(source, job_base + j, 1, Rational::zero());
    }
    for j in 0..n {
        for pos in 1..=n {
            let cost = if weighted {
                inst.jobs[j].weight * int(pos as i128)
            } else {
                Rational::zero()
            };
            arc(job_base + j, rp(lane_of(j), pos), 1, cost);
        }
    }
    for lane in 0..lanes {
        for pos in 1..=n {
            arc(rp(lane, pos), rp_out(lane, pos), lane_capacity(lane), Rational::zero());
        }
    }
    for lane in 0..lanes {
        let allowed: Vec<MachineId> = match inst.machine_subsets.as_ref().and_then(|s| s.get(&lane)) {
            Some(set) => set.iter().copied().filter(|&i| i < m).collect(),
            None => (0..m).collect(),
        };
        for pos in 1..=n {
            for &i in &allowed {
                arc(rp_out(lane, pos), mp(i, pos), 1, Rational::zero());
            }
        }
    }
    for i in 0..m {
        for pos in 1..=n {
            let cost = if weighted { Rational::zero() } else { int(pos as i128) };
            arc(mp(i, pos), sink, 1, cost);
        }
    }

    Ok(FlowNetwork {
        nodes,
        arcs,
        required_flow: n,
        source,
        sink,
    })
}

/// Residual graph edge; edge `2k` is arc `k` forward and `2k + 1` its reverse.
struct Residual {
    head: usize,
    cap: u32,
    cost: Rational,
}

/// Successive shortest augmenting paths with node potentials.
///
/// Dijkstra pops the smallest `(distance, node)` and only replaces a parent on a
/// strict improvement, so equal-cost ties resolve toward lower node indices.
pub fn min_cost_flow(net: &FlowNetwork) -> Result<Flow> {
    let v = net.nodes.len();
    if net.arcs.iter().any(|a| a.cost < Rational::zero()) {
        return Err(Error::Unsupported("negative arc costs are not supported".into()));
    }
    let mut edges: Vec<Residual> = Vec::with_capacity(net.arcs.len() * 2);
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); v];
    for a in &net.arcs {
        adjacency[a.tail].push(edges.len());
        edges.push(Residual { head: a.head, cap: a.capacity, cost: a.cost });
        adjacency[a.head].push(edges.len());
        edges.push(Residual { head: a.tail, cap: 0, cost: -a.cost });
    }

    let mut potential = vec![Rational::zero(); v];
    let mut sent = 0usize;
    while sent < net.required_flow {
        let mut dist: Vec<Option<Rational>> = vec![None; v];
        let mut parent: Vec<Option<usize>> = vec![None; v];
        let mut done = vec![false; v];
        let mut heap = BinaryHeap::new();
        dist[net.source] = Some(Rational::zero());
        heap.push(Reverse((Rational::zero(), net.source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            for &e in &adjacency[u] {
                let edge = &edges[e];
                if edge.cap == 0 || done[edge.head] {
                    continue;
                }
                let nd = d + edge.cost + potential[u] - potential[edge.head];
                if dist[edge.head].is_none_or(|cur| nd < cur) {
                    dist[edge.head] = Some(nd);
                    parent[edge.head] = Some(e);
                    heap.push(Reverse((nd, edge.head)));
                }
            }
        }
        let Some(to_sink) = dist[net.sink] else {
            return Err(Error::InfeasibleNetwork {
                found: sent,
                required: net.required_flow,
            });
        };
        for (p, d) in potential.iter_mut().zip(&dist) {
            *p += match d {
                Some(d) if *d < to_sink => *d,
                _ => to_sink,
            };
        }
        let mut path = Vec::new();
        let mut node = net.sink;
        while node != net.source {
            let e = parent[node].expect("reached nodes have parents");
            path.push(e);
            node = edges[e ^ 1].head;
        }
        let push = path
            .iter()
            .map(|&e| edges[e].cap)
            .min()
            .unwrap_or(0)
            .min((net.required_flow - sent) as u32);
        for &e in &path {
            edges[e].cap -= push;
            edges[e ^ 1].cap += push;
        }
        sent += push as usize;
    }

    let values: Vec<u32> = net
        .arcs
        .iter()
        .enumerate()
        .map(|(k, a)| a.capacity - edges[2 * k].cap)
        .collect();
    let cost = net
        .arcs
        .iter()
        .zip(&values)
        .map(|(a, &f)| a.cost * int(f as i128))
        .sum();
    Ok(Flow { values, cost })
}

/// Reads a schedule off an integral flow: position `p` means start `p − 1`.
///
/// Decoded schedules may leave a machine empty at an earlier position; they are
/// not compacted here.
pub fn decode(net: &FlowNetwork, flow: &Flow) -> Result<Schedule> {
    flow.check(net)?;
    let mut incoming: std::collections::BTreeMap<(usize, usize), Vec<JobId>> = Default::default();
    let mut outgoing: std::collections::BTreeMap<(usize, usize), Vec<MachineId>> = Default::default();
    let mut job_count = 0;
    for (a, &f) in net.arcs.iter().zip(&flow.values) {
        if f == 0 {
            continue;
        }
        match (net.nodes[a.tail], net.nodes[a.head]) {
            (NodeKind::Job(j), NodeKind::ResourcePos { lane, pos }) => {
                incoming.entry((lane, pos)).or_default().push(j);
                job_count += 1;
            }
            (NodeKind::ResourcePosOut { lane, pos }, NodeKind::MachinePos { machine, .. }) => {
                let list = outgoing.entry((lane, pos)).or_default();
                list.extend(std::iter::repeat_n(machine, f as usize));
            }
            _ => {}
        }
    }
    if job_count != net.required_flow {
        return Err(Error::InvalidFlow("flow does not route every job".into()));
    }
    let mut entries = Vec::with_capacity(job_count);
    for (key, mut jobs) in incoming {
        let mut machines = outgoing.remove(&key).unwrap_or_default();
        if jobs.len() != machines.len() {
            return Err(Error::InvalidFlow(format!("lane {key:?} does not decompose into paths")));
        }
        jobs.sort_unstable();
        machines.sort_unstable();
        let start = int(key.1 as i128) - one();
        for (job, machine) in jobs.into_iter().zip(machines) {
            entries.push(Assignment { job, machine, start });
        }
    }
    Ok(Schedule::new(entries))
}

/// Optimal schedule for a unit-time instance (for `Σ w_j C_j` when `weighted`).
pub fn solve_unit(inst: &Instance, weighted: bool) -> Result<Schedule> {
    let net = build_network(inst, weighted)?;
    let flow = min_cost_flow(&net)?;
    decode(&net, &flow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{objective, validate_schedule};
    use std::collections::{BTreeMap, BTreeSet};

    fn figure7() -> Instance {
        Instance::from_pairs(2, 2, [(int(1), 0), (int(1), 0), (int(1), 1), (int(1), 1)])
    }

    #[test]
    fn figure7_counts_and_cost() {
        let inst = figure7();
        let net = build_network(&inst, false).unwrap();
        assert_eq!(net.node_count(), 2 + 4 + 8 + 8 + 8);
        assert_eq!(net.arc_count(), 4 * (1 + 4 + 2 + 4 + 2));
        let flow = min_cost_flow(&net).unwrap();
        assert_eq!(flow.cost, int(6));
        let sched = decode(&net, &flow).unwrap();
        assert!(validate_schedule(&inst, &sched).is_ok());
        assert_eq!(objective(&inst, &sched).unwrap(), int(6));
        let mut starts: Vec<_> = sched.entries.iter().map(|a| a.start).collect();
        starts.sort();
        assert_eq!(starts, vec![int(0), int(0), int(1), int(1)]);
    }

    #[test]
    fn single_job_network() {
        let inst = Instance::from_pairs(1, 1, [(int(1), 0)]);
        let net = build_network(&inst, false).unwrap();
        assert_eq!(net.arc_count(), 5);
        assert_eq!(min_cost_flow(&net).unwrap().cost, int(1));
    }

    #[test]
    fn shared_resource_serializes() {
        let inst = Instance::from_pairs(3, 1, (0..3).map(|_| (int(1), 0)));
        let sched = solve_unit(&inst, false).unwrap();
        assert_eq!(objective(&inst, &sched).unwrap(), int(6));
    }

    #[test]
    fn machine_subset_drops_arcs() {
        let mut inst = figure7();
        inst.machine_subsets = Some(BTreeMap::from([(0, BTreeSet::from([0]))]));
        let net = build_network(&inst, false).unwrap();
        for a in &net.arcs {
            if let (NodeKind::ResourcePosOut { lane: 0, .. }, NodeKind::MachinePos { machine, .. }) =
                (net.nodes[a.tail], net.nodes[a.head])
            {
                assert_eq!(machine, 0);
            }
        }
        let sched = solve_unit(&inst, false).unwrap();
        assert!(validate_schedule(&inst, &sched).is_ok());
    }

    #[test]
    fn weighted_prefers_heavy_job_first() {
        // Orders: heavy first 10·1 + 1·2 = 12, light first 1·1 + 10·2 = 21.
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        inst.jobs[1].weight = int(10);
        let sched = solve_unit(&inst, true).unwrap();
        assert_eq!(sched.get(1).unwrap().start, int(0));
        assert_eq!(objective(&inst, &sched).unwrap(), int(12));
        let net = build_network(&inst, true).unwrap();
        assert_eq!(min_cost_flow(&net).unwrap().cost, int(12));
    }

    #[test]
    fn non_unit_and_unmovable_rejected() {
        let inst = Instance::from_pairs(1, 1, [(int(2), 0)]);
        let err = build_network(&inst, false).unwrap_err();
        assert!(err.to_string().contains("flow solver requires p_j = 1"));
        let mut inst = Instance::from_pairs(1, 1, [(int(1), 0)]);
        inst.unmovable = true;
        assert!(matches!(solve_unit(&inst, false), Err(Error::Unsupported(_))));
    }

    #[test]
    fn dummy_jobs_use_free_lane() {
        let inst = Instance::new(
            2,
            1,
            vec![
                crate::instance::Job::new(0, int(1), vec![0]),
                crate::instance::Job::new(1, int(1), vec![0]),
                crate::instance::Job::new(2, int(1), vec![]),
                crate::instance::Job::new(3, int(1), vec![]),
            ],
        );
        let sched = solve_unit(&inst, false).unwrap();
        assert!(validate_schedule(&inst, &sched).is_ok());
        // Slots: {r0, dummy} then {r0, dummy}.
        assert_eq!(objective(&inst, &sched).unwrap(), int(6));
    }

    #[test]
    fn capacity_two_lets_pair_share_a_slot() {
        let mut inst = Instance::from_pairs(2, 1, [(int(1), 0), (int(1), 0)]);
        inst.capacities = Some(vec![2]);
        let sched = solve_unit(&inst, false).unwrap();
        assert_eq!(objective(&inst, &sched).unwrap(), int(2));
    }

    #[test]
    fn dump_format() {
        let inst = Instance::from_pairs(1, 1, [(int(1), 0)]);
        let dump = build_network(&inst, false).unwrap().dump();
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines[0], "6");
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[5], "5 1 1 1");
    }
}
