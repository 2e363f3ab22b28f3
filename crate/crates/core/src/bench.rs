//! Benchmark rows: run solvers on a batch of instances, compare against the
//! oracle when it finishes within budget, and check every proven bound.
//!
//! CSV columns, in order:
//!
//! `instance_id, kind, n, m, algorithm, objective, oracle, ratio,`
//! `spt_ratio_bound, sum_k_le_opt, opt1_over_m_le_opt, per_job_bound,`
//! `flow_eq_oracle, shrink_bound`
//!
//! Rationals are exact (`num/den`), `ratio` is a 6-digit decimal and every
//! check is `pass`, `fail` or `NA`. Rows are sorted by instance id, then by
//! algorithm in the order above.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flow;
use crate::heuristics::{bounds, shrink_solve, spt_available};
use crate::instance::{objective, Instance, Timeline};
use crate::oracle::{brute_force_opt, OracleOptions};
use crate::rational::{int, one, to_f64, Rational};
use crate::reductions::{gen_lb_family, gen_random, GadgetInstance};

pub const CHECKS: [&str; 6] = [
    "spt_ratio_bound",
    "sum_k_le_opt",
    "opt1_over_m_le_opt",
    "per_job_bound",
    "flow_eq_oracle",
    "shrink_bound",
];

pub const CSV_HEADER: [&str; 14] = [
    "instance_id",
    "kind",
    "n",
    "m",
    "algorithm",
    "objective",
    "oracle",
    "ratio",
    "spt_ratio_bound",
    "sum_k_le_opt",
    "opt1_over_m_le_opt",
    "per_job_bound",
    "flow_eq_oracle",
    "shrink_bound",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algorithm {
    SptAvailable,
    Flow,
    Shrink { c: u32 },
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::SptAvailable => f.write_str("spt-available"),
            Algorithm::Flow => f.write_str("flow"),
            Algorithm::Shrink { c } => write!(f, "shrink(c={c})"),
            Algorithm::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail,
    NotApplicable,
}

impl Check {
    fn from_bool(ok: bool) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Pass => "pass",
            Check::Fail => "fail",
            Check::NotApplicable => "NA",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub instance_id: String,
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub objective: Rational,
    pub oracle: Option<Rational>,
    /// Indexed like [`CHECKS`].
    pub checks: [Check; 6],
}

impl BenchRow {
    pub fn ratio(&self) -> Option<Rational> {
        self.oracle.filter(|o| *o > Rational::from_integer(0)).map(|o| self.objective / o)
    }

    pub fn check(&self, name: &str) -> Option<Check> {
        CHECKS.iter().position(|c| *c == name).map(|i| self.checks[i])
    }

    fn record(&self) -> Vec<String> {
        let mut fields = vec![
            self.instance_id.clone(),
            self.kind.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.algorithm.to_string(),
            self.objective.to_string(),
            self.oracle.map_or("NA".into(), |o| o.to_string()),
            self.ratio().map_or("NA".into(), |r| format!("{:.6}", to_f64(&r))),
        ];
        fields.extend(self.checks.iter().map(|c| c.as_str().to_string()));
        fields
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn failures(&self) -> Vec<(&BenchRow, &'static str)> {
        self.rows
            .iter()
            .flat_map(|row| {
                CHECKS
                    .iter()
                    .zip(row.checks)
                    .filter(|(_, c)| *c == Check::Fail)
                    .map(move |(name, _)| (row, *name))
            })
            .collect()
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
        writer.write_record(CSV_HEADER).map_err(csv_err)?;
        for row in &self.rows {
            writer.write_record(row.record()).map_err(csv_err)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[derive(Clone, Debug)]
pub struct BenchCase {
    pub id: String,
    pub kind: String,
    pub instance: Instance,
}

impl BenchCase {
    pub fn from_gadget(id: String, gadget: GadgetInstance) -> Self {
        BenchCase {
            id,
            kind: gadget.kind.as_str().to_string(),
            instance: gadget.instance,
        }
    }
}

/// Rows for one instance. Algorithms whose preconditions the instance does
/// not meet are skipped; an oracle over budget leaves its columns `NA`.
pub fn bench_case(case: &BenchCase, algorithms: &[Algorithm], opts: OracleOptions) -> Result<Vec<BenchRow>> {
    let inst = &case.instance;
    let oracle = match brute_force_opt(inst, opts) {
        Ok(r) => Some(r.optimum),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let lower = bounds(inst).ok();
    let lower_checks = |opt: Option<Rational>| match (&lower, opt) {
        (Some(b), Some(o)) => (Check::from_bool(b.sum_k <= o), Check::from_bool(b.opt1_over_m <= o)),
        _ => (Check::NotApplicable, Check::NotApplicable),
    };
    let m = inst.machine_count;

    let mut rows = Vec::new();
    let mut algorithms = algorithms.to_vec();
    algorithms.sort();
    algorithms.dedup();
    for &algorithm in &algorithms {
        let mut checks = [Check::NotApplicable; 6];
        let (sum_k, opt1) = lower_checks(oracle);
        checks[1] = sum_k;
        checks[2] = opt1;
        let value = match algorithm {
            Algorithm::SptAvailable => {
                let Ok(sched) = spt_available(inst) else { continue };
                let value = objective(inst, &sched)?;
                if let Some(o) = oracle {
                    let factor = int(2) - one() / int(m as i128);
                    checks[0] = Check::from_bool(value <= factor * o);
                }
                if let Some(b) = &lower {
                    let tl = Timeline::resolve(inst, &sched)?;
                    let ceiling = b.per_job_ceiling(m);
                    checks[3] = Check::from_bool((0..inst.n()).all(|j| tl.completion(j) <= ceiling[j]));
                }
                value
            }
            Algorithm::Flow => {
                let Ok(sched) = flow::solve_unit(inst, false) else { continue };
                let value = objective(inst, &sched)?;
                if let Some(o) = oracle {
                    checks[4] = Check::from_bool(value == o);
                }
                value
            }
            Algorithm::Shrink { c } => {
                let Ok(sched) = shrink_solve(inst, c, false) else { continue };
                let value = objective(inst, &sched)?;
                if let Some(o) = oracle {
                    checks[5] = Check::from_bool(value <= int(c as i128) * o);
                }
                value
            }
            Algorithm::Oracle => match oracle {
                Some(o) => o,
                None => continue,
            },
        };
        rows.push(BenchRow {
            instance_id: case.id.clone(),
            kind: case.kind.clone(),
            n: inst.n(),
            m,
            algorithm,
            objective: value,
            oracle,
            checks,
        });
    }
    Ok(rows)
}

/// Runs every case in parallel; rows come back sorted by instance id.
pub fn run_bench(cases: &[BenchCase], algorithms: &[Algorithm], opts: OracleOptions) -> Result<BenchReport> {
    let per_case: Vec<Vec<BenchRow>> = cases
        .par_iter()
        .map(|case| bench_case(case, algorithms, opts))
        .collect::<Result<_>>()?;
    let mut rows: Vec<BenchRow> = per_case.into_iter().flatten().collect();
    rows.sort_by(|a, b| a.instance_id.cmp(&b.instance_id).then(a.algorithm.cmp(&b.algorithm)));
    Ok(BenchReport { rows })
}

/// Random instances for seeds `0..count`, ids `random-s<seed>` zero-padded.
pub fn random_sweep(
    count: u64,
    m: usize,
    n: usize,
    num_resources: usize,
    p_max: u32,
    q: usize,
    first_seed: u64,
) -> Result<Vec<BenchCase>> {
    (first_seed..first_seed + count)
        .map(|seed| {
            Ok(BenchCase::from_gadget(
                format!("random-m{m}-n{n}-s{seed:06}"),
                gen_random(m, n, num_resources, p_max, q, seed)?,
            ))
        })
        .collect()
}

pub fn lb_sweep(cs: &[u32], eps: Rational) -> Result<Vec<BenchCase>> {
    cs.iter()
        .map(|&c| {
            Ok(BenchCase::from_gadget(format!("lb-c{c:03}"), gen_lb_family(c, eps)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn example41_row() {
        let case = BenchCase::from_gadget("ex41".into(), crate::reductions::gen_example41(ratio(1, 2)).unwrap());
        let rows = bench_case(&case, &[Algorithm::Oracle, Algorithm::SptAvailable, Algorithm::Flow], OracleOptions::default())
            .unwrap();
        // Flow does not apply to non-unit jobs.
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].algorithm, Algorithm::SptAvailable);
        assert_eq!(rows[0].objective, int(51));
        assert_eq!(rows[0].oracle, Some(int(47)));
        assert_eq!(rows[0].check("spt_ratio_bound"), Some(Check::Pass));
        assert_eq!(rows[0].check("flow_eq_oracle"), Some(Check::NotApplicable));
        assert_eq!(rows[1].objective, int(47));
    }

    #[test]
    fn csv_layout() {
        let case = BenchCase::from_gadget("unit".into(), gen_random(2, 4, 3, 1, 1, 3).unwrap());
        let report = run_bench(&[case], &[Algorithm::Flow], OracleOptions::default()).unwrap();
        let csv = report.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[4], "flow");
        assert_eq!(row[7], "1.000000");
        assert_eq!(row[12], "pass");
        assert_eq!(row[13], "NA");
        assert!(report.failures().is_empty());
    }

    #[test]
    fn budget_exceeded_marks_na() {
        let case = BenchCase::from_gadget("tight".into(), crate::reductions::gen_example41(ratio(1, 2)).unwrap());
        let rows = bench_case(&case, &[Algorithm::SptAvailable, Algorithm::Oracle], OracleOptions::with_budget(5)).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].oracle, None);
        assert_eq!(rows[0].ratio(), None);
        assert_eq!(rows[0].check("spt_ratio_bound"), Some(Check::NotApplicable));
        assert_eq!(rows[0].check("per_job_bound"), Some(Check::Pass));
    }

    #[test]
    fn rows_sorted_by_id() {
        let cases = random_sweep(5, 2, 4, 3, 2, 1, 0).unwrap();
        let mut reversed = cases.clone();
        reversed.reverse();
        let a = run_bench(&cases, &[Algorithm::SptAvailable], OracleOptions::default()).unwrap();
        let b = run_bench(&reversed, &[Algorithm::SptAvailable], OracleOptions::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.rows.windows(2).all(|w| w[0].instance_id <= w[1].instance_id));
    }
}
