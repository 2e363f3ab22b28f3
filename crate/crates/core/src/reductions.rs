//! Instance families and hardness gadgets, each with the threshold that
//! separates yes- from no-instances of the source problem, plus a seeded
//! random generator.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::instance::{validate_instance, Assignment, Instance, Job, Schedule};
use crate::io::Metadata;
use crate::oracle::Graph;
use crate::rational::{int, one, Rational, RationalRepr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GadgetKind {
    Example41,
    LbFamily,
    Mr3Partition,
    Unmovable3Partition,
    Partition2EdgeColoring,
    UnrelatedMapped,
    Random,
}

impl GadgetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::Example41 => "example41",
            GadgetKind::LbFamily => "lb_family",
            GadgetKind::Mr3Partition => "mr_3partition",
            GadgetKind::Unmovable3Partition => "unmovable_3partition",
            GadgetKind::Partition2EdgeColoring => "partition2_edgecoloring",
            GadgetKind::UnrelatedMapped => "unrelated_mapped",
            GadgetKind::Random => "random",
        }
    }
}

/// The combinatorial object a gadget was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Epsilon { eps: Rational },
    LowerBound { c: u32, eps: Rational },
    ThreePartition(ThreePartitionInput),
    Graph(Graph),
    Unrelated { big_t: Rational, source: Box<Provenance> },
    Random { m: usize, n: usize, num_resources: usize, p_max: u32, q: usize, seed: u64 },
}

fn rational_json(v: &Rational) -> Result<Value> {
    Ok(serde_json::to_value(RationalRepr::from_rational(v)?)?)
}

impl Provenance {
    pub fn to_json(&self) -> Result<Value> {
        Ok(match self {
            Provenance::Epsilon { eps } => json!({ "eps": rational_json(eps)? }),
            Provenance::LowerBound { c, eps } => json!({ "c": c, "eps": rational_json(eps)? }),
            Provenance::ThreePartition(tp) => json!({ "m": tp.m, "b": tp.b, "a": tp.a }),
            Provenance::Graph(g) => json!({ "vertices": g.vertex_count, "edges": g.edges }),
            Provenance::Unrelated { big_t, source } => {
                json!({ "t": rational_json(big_t)?, "source": source.to_json()? })
            }
            Provenance::Random { m, n, num_resources, p_max, q, seed } => json!({
                "m": m, "n": n, "num_resources": num_resources, "p_max": p_max, "q": q, "seed": seed
            }),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub instance: Instance,
    /// Decision bound on the optimum; unset for random instances.
    pub threshold: Option<Rational>,
    pub kind: GadgetKind,
    pub provenance: Provenance,
    /// A feasible schedule certifying the yes-side, when one was constructed.
    pub witness: Option<Schedule>,
}

impl GadgetInstance {
    fn checked(self) -> Result<Self> {
        let report = validate_instance(&self.instance);
        if !report.is_ok() {
            return Err(Error::InvalidInstance(report));
        }
        Ok(self)
    }

    pub fn metadata(&self) -> Result<Metadata> {
        Ok(Metadata {
            kind: self.kind.as_str().to_string(),
            threshold: self.threshold.as_ref().map(RationalRepr::from_rational).transpose()?,
            provenance: self.provenance.to_json()?,
        })
    }
}

/// Two machines, four unit jobs on each of two resources and four jobs of
/// length `1 + eps` on a third. The optimum is `42 + 10·eps`.
pub fn gen_example41(eps: Rational) -> Result<GadgetInstance> {
    if eps <= Rational::zero() {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    let jobs = (0..3).flat_map(|r| (0..4).map(move |_| (if r == 2 { one() + eps } else { one() }, r)));
    GadgetInstance {
        instance: Instance::from_pairs(2, 3, jobs),
        threshold: Some(int(42) + int(10) * eps),
        kind: GadgetKind::Example41,
        provenance: Provenance::Epsilon { eps },
        witness: None,
    }
    .checked()
}

/// Three machines, `3c` unit jobs on private resources and `3c` jobs of length
/// `1 + eps` sharing resource `3c`.
pub fn gen_lb_family(c: u32, eps: Rational) -> Result<GadgetInstance> {
    if c == 0 || !c.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("c must be even and positive, got {c}")));
    }
    if eps <= Rational::zero() {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    let k = 3 * c as usize;
    let jobs = (0..k).map(|r| (one(), r)).chain((0..k).map(|_| (one() + eps, k)));
    let cr = int(c as i128);
    let threshold = int(27) * cr * cr / int(4)
        + int(3) * cr
        + (int(9) * cr * cr + int(3) * cr) * eps / int(2);
    GadgetInstance {
        instance: Instance::from_pairs(3, k + 1, jobs),
        threshold: Some(threshold),
        kind: GadgetKind::LbFamily,
        provenance: Provenance::LowerBound { c, eps },
        witness: None,
    }
    .checked()
}

/// `spt_available`'s value on the lower-bound family: `9c² + 3c + ½(9c²+3c)·eps`.
pub fn lb_family_spt_value(c: u32, eps: Rational) -> Rational {
    let cr = int(c as i128);
    let base = int(9) * cr * cr + int(3) * cr;
    base + base * eps / int(2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePartitionInput {
    pub m: usize,
    pub b: u64,
    pub a: Vec<u64>,
}

impl ThreePartitionInput {
    /// Checks `|A| = 3m`, `ΣA = m·b` and `b/4 ≤ a ≤ b/2` (closed bounds).
    pub fn new(m: usize, b: u64, a: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        if a.len() != 3 * m {
            return Err(Error::InvalidParameter(format!("expected {} elements, got {}", 3 * m, a.len())));
        }
        let total: u64 = a.iter().sum();
        if total != m as u64 * b {
            return Err(Error::InvalidParameter(format!("elements sum to {total}, expected {}", m as u64 * b)));
        }
        if let Some(x) = a.iter().find(|&&x| 4 * x < b || 2 * x > b) {
            return Err(Error::InvalidParameter(format!("element {x} outside [b/4, b/2] for b = {b}")));
        }
        Ok(ThreePartitionInput { m, b, a })
    }

    /// Every valid input with the given `m` and `b`, elements sorted ascending.
    pub fn enumerate(m: usize, b: u64) -> Vec<ThreePartitionInput> {
        fn extend(lo: u64, hi: u64, left: usize, sum: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if left == 0 {
                if sum == 0 {
                    out.push(prefix.clone());
                }
                return;
            }
            for x in lo..=hi {
                if x * left as u64 > sum {
                    break;
                }
                prefix.push(x);
                extend(x, hi, left - 1, sum - x, prefix, out);
                prefix.pop();
            }
        }
        let lo = b.div_ceil(4).max(1);
        let hi = b / 2;
        let mut out = Vec::new();
        extend(lo, hi, 3 * m, m as u64 * b, &mut Vec::new(), &mut out);
        out.into_iter()
            .filter_map(|a| ThreePartitionInput::new(m, b, a).ok())
            .collect()
    }
}

/// Exhaustive 3-PARTITION decider. Returns index triples into `tp.a` when the
/// input is a yes-instance.
pub fn three_partition_certificate(tp: &ThreePartitionInput) -> Option<Vec<[usize; 3]>> {
    fn fill(tp: &ThreePartitionInput, used: &mut [bool], triples: &mut Vec<[usize; 3]>) -> bool {
        let Some(first) = used.iter().position(|u| !u) else {
            return true;
        };
        used[first] = true;
        let n = tp.a.len();
        for second in first + 1..n {
            if used[second] {
                continue;
            }
            for third in second + 1..n {
                if used[third] || tp.a[first] + tp.a[second] + tp.a[third] != tp.b {
                    continue;
                }
                used[second] = true;
                used[third] = true;
                triples.push([first, second, third]);
                if fill(tp, used, triples) {
                    return true;
                }
                triples.pop();
                used[second] = false;
                used[third] = false;
            }
        }
        used[first] = false;
        false
    }
    let mut used = vec![false; tp.a.len()];
    let mut triples = Vec::new();
    fill(tp, &mut used, &mut triples).then_some(triples)
}

fn check_certificate(tp: &ThreePartitionInput, cert: &[[usize; 3]]) -> Result<()> {
    let mut seen = BTreeSet::new();
    if cert.len() != tp.m {
        return Err(Error::InvalidParameter(format!("certificate has {} triples, expected {}", cert.len(), tp.m)));
    }
    for t in cert {
        if t.iter().any(|&i| i >= tp.a.len() || !seen.insert(i)) {
            return Err(Error::InvalidParameter("certificate indices must cover A exactly once".into()));
        }
        if t.iter().map(|&i| tp.a[i]).sum::<u64>() != tp.b {
            return Err(Error::InvalidParameter(format!("triple {t:?} does not sum to {}", tp.b)));
        }
    }
    Ok(())
}

/// Sizes of the machine-subset gadget: `N_C = 2mb` and `C = 8mb`.
pub fn mr_constants(tp: &ThreePartitionInput) -> (u64, u64) {
    let mb = tp.m as u64 * tp.b;
    (2 * mb, 8 * mb)
}

/// `Z⁺ = mb + m(N_C·b + (C + N_C·C)·N_C/2) + m(b + N_C²·C) + 2mb`.
pub fn mr_threshold(tp: &ThreePartitionInput) -> Rational {
    let (nc, c) = mr_constants(tp);
    let (m, b, nc, c) = (int(tp.m as i128), int(tp.b as i128), int(nc as i128), int(c as i128));
    m * b + m * (nc * b + (c + nc * c) * nc / int(2)) + m * (b + nc * nc * c) + int(2) * m * b
}

/// Machine-subset gadget on `2m` machines.
///
/// Resources `0..m` are shared by the C-jobs and release job of each group,
/// then one private resource per element of `A`, then one per D-job. Jobs are
/// the element jobs in input order followed, per group `i`, by its `N_C`
/// C-jobs, release job `r_i` and D-job `D_i`.
///
/// With a certificate, the yes-side layout is attached as the witness: each
/// triple sorted ascending from time 0 on machine `i` followed by the C-jobs
/// from time `b`, and `r_i` then `D_i` on machine `m + i`.
pub fn gen_mr_gadget(tp: &ThreePartitionInput, certificate: Option<&[[usize; 3]]>) -> Result<GadgetInstance> {
    let tp = ThreePartitionInput::new(tp.m, tp.b, tp.a.clone())?;
    let m = tp.m;
    let (nc, c) = mr_constants(&tp);
    let nc = nc as usize;
    let a_resource = |k: usize| m + k;
    let d_resource = |i: usize| m + 3 * m + i;

    let mut jobs = Vec::new();
    let mut subsets = BTreeMap::new();
    for (k, &a) in tp.a.iter().enumerate() {
        jobs.push(Job::new(jobs.len(), int(a as i128), vec![a_resource(k)]));
        subsets.insert(a_resource(k), (0..m).collect::<BTreeSet<_>>());
    }
    let mut group_jobs = Vec::new();
    for i in 0..m {
        subsets.insert(i, BTreeSet::from([i, m + i]));
        subsets.insert(d_resource(i), BTreeSet::from([m + i]));
        let first_c = jobs.len();
        for _ in 0..nc {
            jobs.push(Job::new(jobs.len(), int(c as i128), vec![i]));
        }
        let release = jobs.len();
        jobs.push(Job::new(release, int(tp.b as i128), vec![i]));
        let d = jobs.len();
        jobs.push(Job::new(d, int((nc * nc) as i128 * c as i128), vec![d_resource(i)]));
        group_jobs.push((first_c, release, d));
    }
    let mut instance = Instance::new(2 * m, 5 * m, jobs);
    instance.machine_subsets = Some(subsets);

    let witness = match certificate {
        None => None,
        Some(cert) => {
            check_certificate(&tp, cert)?;
            let mut entries = Vec::new();
            for (i, triple) in cert.iter().enumerate() {
                let mut order = triple.to_vec();
                order.sort_by_key(|&k| (tp.a[k], k));
                let mut t = Rational::zero();
                for k in order {
                    entries.push(Assignment { job: k, machine: i, start: t });
                    t += int(tp.a[k] as i128);
                }
                let (first_c, release, d) = group_jobs[i];
                let b = int(tp.b as i128);
                for (pos, job) in (first_c..first_c + nc).enumerate() {
                    entries.push(Assignment { job, machine: i, start: b + int(pos as i128 * c as i128) });
                }
                entries.push(Assignment { job: release, machine: m + i, start: Rational::zero() });
                entries.push(Assignment { job: d, machine: m + i, start: b });
            }
            Some(Schedule::new(entries))
        }
    };

    GadgetInstance {
        instance,
        threshold: Some(mr_threshold(&tp)),
        kind: GadgetKind::Mr3Partition,
        provenance: Provenance::ThreePartition(tp),
        witness,
    }
    .checked()
}

/// Unmovable gadget: `m` machines, and for each element `a` a group of `a`
/// unit jobs sharing a fresh resource. Threshold `(m/2)·b·(b+1)`.
pub fn gen_unmovable_gadget(tp: &ThreePartitionInput) -> Result<GadgetInstance> {
    let tp = ThreePartitionInput::new(tp.m, tp.b, tp.a.clone())?;
    let jobs = tp
        .a
        .iter()
        .enumerate()
        .flat_map(|(r, &a)| (0..a).map(move |_| (one(), r)));
    let mut instance = Instance::from_pairs(tp.m, 3 * tp.m, jobs);
    instance.unmovable = true;
    let b = int(tp.b as i128);
    GadgetInstance {
        instance,
        threshold: Some(int(tp.m as i128) * b * (b + one()) / int(2)),
        kind: GadgetKind::Unmovable3Partition,
        provenance: Provenance::ThreePartition(tp),
        witness: None,
    }
    .checked()
}

/// Two-resource gadget for edge coloring: `|E|` machines, one resource per
/// vertex, one unit job per edge holding both endpoints and `(Δ−1)·|E|`
/// resource-free unit dummies. Threshold `½·Δ·(Δ+1)·|E|`.
pub fn gen_partition2_gadget(g: &Graph) -> Result<GadgetInstance> {
    let g = Graph::new(g.vertex_count, g.edges.clone())?;
    if g.edges.is_empty() {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    let e = g.edges.len();
    let delta = g.max_degree();
    let mut jobs: Vec<Job> = g
        .edges
        .iter()
        .enumerate()
        .map(|(id, &(u, v))| Job::new(id, one(), vec![u.min(v), u.max(v)]))
        .collect();
    for _ in 0..(delta - 1) * e {
        jobs.push(Job::new(jobs.len(), one(), vec![]));
    }
    let d = int(delta as i128);
    GadgetInstance {
        instance: Instance::new(e, g.vertex_count, jobs),
        threshold: Some(d * (d + one()) * int(e as i128) / int(2)),
        kind: GadgetKind::Partition2EdgeColoring,
        provenance: Provenance::Graph(g),
        witness: None,
    }
    .checked()
}

/// Replaces machine subsets by unrelated times: `p_ij = p_j` where job `j`
/// may run on machine `i`, and `big_t` elsewhere. The threshold is kept.
pub fn map_to_unrelated(gadget: &GadgetInstance, big_t: Rational) -> Result<GadgetInstance> {
    let inst = &gadget.instance;
    if inst.machine_subsets.is_none() {
        return Err(Error::InvalidParameter("gadget has no machine subsets".into()));
    }
    if let Some(z) = gadget.threshold {
        if big_t < z {
            return Err(Error::InvalidParameter(format!("T = {big_t} is below the threshold {z}")));
        }
    }
    let times = (0..inst.machine_count)
        .map(|i| {
            inst.jobs
                .iter()
                .map(|j| if inst.machine_allowed(j.id, i) { j.p } else { big_t })
                .collect()
        })
        .collect();
    let mut instance = inst.clone();
    instance.machine_subsets = None;
    instance.unrelated_times = Some(times);
    GadgetInstance {
        instance,
        threshold: gadget.threshold,
        kind: GadgetKind::UnrelatedMapped,
        provenance: Provenance::Unrelated { big_t, source: Box::new(gadget.provenance.clone()) },
        witness: gadget.witness.clone(),
    }
    .checked()
}

/// Seeded random instance: integer `p` uniform in `[1, p_max]` and `q`
/// distinct resources drawn uniformly per job.
pub fn gen_random(
    m: usize,
    n: usize,
    num_resources: usize,
    p_max: u32,
    q: usize,
    seed: u64,
) -> Result<GadgetInstance> {
    if m == 0 || n == 0 || num_resources == 0 || p_max == 0 {
        return Err(Error::InvalidParameter("m, n, num_resources and p_max must be positive".into()));
    }
    if !(1..=2).contains(&q) {
        return Err(Error::InvalidParameter(format!("q must be 1 or 2, got {q}")));
    }
    if num_resources < q {
        return Err(Error::InvalidParameter(format!("q = {q} needs at least {q} resources")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let jobs = (0..n)
        .map(|id| {
            let p = rng.gen_range(1..=p_max);
            let mut resources = sample(&mut rng, num_resources, q).into_vec();
            resources.sort_unstable();
            Job::new(id, int(p as i128), resources)
        })
        .collect();
    GadgetInstance {
        instance: Instance::new(m, num_resources, jobs),
        threshold: None,
        kind: GadgetKind::Random,
        provenance: Provenance::Random { m, n, num_resources, p_max, q, seed },
        witness: None,
    }
    .checked()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{objective, validate_schedule};
    use crate::rational::ratio;

    #[test]
    fn example41_shape() {
        for eps in [ratio(1, 2), one(), ratio(1, 100)] {
            let g = gen_example41(eps).unwrap();
            assert_eq!(g.instance.n(), 12);
            assert_eq!(g.instance.resource_count, 3);
        }
        assert_eq!(gen_example41(ratio(1, 2)).unwrap().threshold, Some(int(47)));
        assert!(gen_example41(Rational::zero()).is_err());
    }

    #[test]
    fn lb_family_shape() {
        let g = gen_lb_family(2, ratio(1, 100)).unwrap();
        assert_eq!(g.instance.resource_count, 7);
        assert_eq!(g.threshold, Some(ratio(3321, 100)));
        assert_eq!(lb_family_spt_value(2, ratio(1, 100)), ratio(4221, 100));
        assert_eq!(gen_lb_family(4, ratio(1, 100)).unwrap().instance.resource_count, 13);
        assert!(gen_lb_family(3, one()).is_err());
        assert!(gen_lb_family(0, one()).is_err());
    }

    #[test]
    fn three_partition_validation() {
        assert!(ThreePartitionInput::new(1, 4, vec![1, 1, 2]).is_ok());
        assert!(ThreePartitionInput::new(1, 4, vec![1, 1, 1]).is_err());
        assert!(ThreePartitionInput::new(1, 8, vec![1, 3, 4]).is_err());
        assert!(ThreePartitionInput::new(2, 4, vec![2, 2, 2, 1, 1, 2]).is_err());
    }

    #[test]
    fn three_partition_enumeration() {
        let all = ThreePartitionInput::enumerate(2, 4);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].a, vec![1, 1, 1, 1, 2, 2]);
        let b3 = ThreePartitionInput::enumerate(2, 3);
        assert_eq!(b3.len(), 1);
        assert_eq!(b3[0].a, vec![1; 6]);
    }

    #[test]
    fn three_partition_decider() {
        let yes = ThreePartitionInput::new(2, 4, vec![1, 1, 2, 1, 1, 2]).unwrap();
        let cert = three_partition_certificate(&yes).unwrap();
        assert!(check_certificate(&yes, &cert).is_ok());
        let no = ThreePartitionInput::new(2, 10, vec![3, 3, 3, 3, 3, 5]).unwrap();
        assert_eq!(three_partition_certificate(&no), None);
    }

    #[test]
    fn mr_gadget_small() {
        let tp = ThreePartitionInput::new(1, 4, vec![1, 1, 2]).unwrap();
        assert_eq!(mr_constants(&tp), (8, 32));
        let cert = three_partition_certificate(&tp).unwrap();
        let g = gen_mr_gadget(&tp, Some(&cert)).unwrap();
        assert_eq!(g.instance.n(), 13);
        assert_eq!(g.instance.machine_count, 2);
        assert_eq!(g.threshold, Some(int(3248)));
        let w = g.witness.as_ref().unwrap();
        assert!(validate_schedule(&g.instance, w).is_ok());
        assert_eq!(objective(&g.instance, w).unwrap(), int(3247));
        assert!(gen_mr_gadget(&tp, Some(&[[0, 1, 1]])).is_err());
    }

    #[test]
    fn unrelated_map_keeps_witness_value() {
        let tp = ThreePartitionInput::new(1, 4, vec![1, 1, 2]).unwrap();
        let cert = three_partition_certificate(&tp).unwrap();
        let g = gen_mr_gadget(&tp, Some(&cert)).unwrap();
        let u = map_to_unrelated(&g, int(3248)).unwrap();
        let times = u.instance.unrelated_times.as_ref().unwrap();
        // Element jobs are barred from machine 1; D is barred from machine 0.
        assert_eq!(times[1][0], int(3248));
        assert_eq!(times[0][12], int(3248));
        let w = u.witness.as_ref().unwrap();
        assert_eq!(objective(&u.instance, w).unwrap(), int(3247));
        assert!(map_to_unrelated(&g, int(3000)).is_err());
        assert!(map_to_unrelated(&gen_example41(one()).unwrap(), int(100)).is_err());
    }

    #[test]
    fn unmovable_gadget_shape() {
        let tp = ThreePartitionInput::new(2, 4, vec![1, 1, 2, 2, 1, 1]).unwrap();
        let g = gen_unmovable_gadget(&tp).unwrap();
        assert_eq!(g.instance.n(), 8);
        assert_eq!(g.instance.resource_count, 6);
        assert!(g.instance.unmovable);
        assert_eq!(g.threshold, Some(int(20)));
    }

    #[test]
    fn partition2_shapes() {
        let fig9 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let g = gen_partition2_gadget(&fig9).unwrap();
        assert_eq!(g.instance.machine_count, 5);
        assert_eq!(g.instance.n(), 15);
        assert_eq!(g.threshold, Some(int(30)));
        let users = g.instance.jobs_by_resource();
        assert!(users.iter().all(|u| u.len() <= 3));

        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(gen_partition2_gadget(&triangle).unwrap().threshold, Some(int(9)));
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(gen_partition2_gadget(&path).unwrap().threshold, Some(int(6)));
        assert!(gen_partition2_gadget(&Graph::new(2, vec![]).unwrap()).is_err());
    }

    #[test]
    fn random_is_seeded() {
        let a = gen_random(2, 6, 4, 4, 1, 7).unwrap();
        let b = gen_random(2, 6, 4, 4, 1, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.instance, gen_random(2, 6, 4, 4, 1, 8).unwrap().instance);
        let two = gen_random(2, 6, 4, 4, 2, 7).unwrap();
        assert!(two.instance.jobs.iter().all(|j| j.resources.len() == 2));
        assert!(gen_random(2, 6, 1, 4, 2, 7).is_err());
        assert!(gen_random(2, 6, 4, 4, 3, 7).is_err());
    }

    #[test]
    fn metadata_serializes() {
        let g = gen_lb_family(2, ratio(1, 100)).unwrap();
        let meta = g.metadata().unwrap();
        assert_eq!(meta.kind, "lb_family");
        assert_eq!(meta.threshold, Some(RationalRepr::Pair([3321, 100])));
        assert_eq!(meta.provenance["c"], json!(2));
    }
}
