//! Enumerating small deterministic matrices and checking that every model of
//! a system validates a given formula.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::matrix::{is_model_with, next_assignment, Program};
use super::{alpha, beta, DetMatrix, DugundjiError};
use crate::calculus::axioms_of;
use crate::nmatrix::SystemId;
use crate::random::rng;
use crate::syntax::Formula;

/// Largest number of sampled size-3 candidates a scan accepts.
pub const SAMPLE_CAP: usize = 2_000_000;

const CHUNK: usize = 20_000;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Size-3 candidates to draw. Size 2 is always exhaustive.
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            samples: 10_000,
            seed: 0,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub size: usize,
    pub system: SystemId,
    pub formula: String,
    pub exhaustive: bool,
    /// Candidates covered, counting each isomorphism class with its orbit size
    /// in the exhaustive case.
    pub candidates: u64,
    /// Canonical representatives actually evaluated.
    pub classes: u64,
    pub models: u64,
    pub violations: Vec<DetMatrix>,
    pub seed: Option<u64>,
}

/// Number of well-formed matrices of the given size:
/// `s^s` for each of `¬ □ ◇`, `s^(s²)` for `→`, and `2^s - 2` designated sets.
pub fn candidate_count(size: usize) -> u128 {
    let s = size as u128;
    let unary = s.pow(size as u32);
    unary.pow(3) * s.pow((size * size) as u32) * ((1u128 << size) - 2)
}

/// The `index`-th candidate in mixed-radix order.
fn decode(size: usize, mut index: u64) -> DetMatrix {
    let s = size as u64;
    let mut digits = |n: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = (index % s) as usize;
                index /= s;
                d
            })
            .collect()
    };
    let neg = digits(size);
    let imp = digits(size * size);
    let boxt = digits(size);
    let dia = digits(size);
    let mask = index + 1;
    let designated = (0..size).map(|i| mask >> i & 1 == 1).collect();
    DetMatrix {
        size,
        designated,
        neg,
        imp,
        boxt,
        dia,
    }
}

fn random_candidate<R: Rng>(r: &mut R, size: usize) -> DetMatrix {
    let mut t = |n: usize| (0..n).map(|_| r.gen_range(0..size)).collect::<Vec<_>>();
    let neg = t(size);
    let imp = t(size * size);
    let boxt = t(size);
    let dia = t(size);
    let mask: u64 = r.gen_range(1..(1u64 << size) - 1);
    DetMatrix {
        size,
        designated: (0..size).map(|i| mask >> i & 1 == 1).collect(),
        neg,
        imp,
        boxt,
        dia,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `Some(orbit size)` if `m` is the lexicographically least member of its
/// isomorphism class, `None` otherwise.
fn canonical_orbit(m: &DetMatrix, perms: &[Vec<usize>]) -> Option<u64> {
    let own = m.encoding();
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(perms.len());
    for p in perms {
        let e = m.permuted(p).encoding();
        if e < own {
            return None;
        }
        images.push(e);
    }
    images.sort();
    images.dedup();
    Some(images.len() as u64)
}

#[derive(Default)]
struct Tally {
    candidates: u64,
    classes: u64,
    models: u64,
    violations: Vec<DetMatrix>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.candidates += other.candidates;
        self.classes += other.classes;
        self.models += other.models;
        self.violations.extend(other.violations);
        self
    }
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(f);
        }
    }
    f()
}

/// Enumerates deterministic matrices of `size` (exhaustively for 2, by
/// seeded sampling for 3), keeps the models of `id`, and lists every model
/// that does not validate `f`.
pub fn scan_matrices(size: usize, id: SystemId, f: &Formula, opts: &ScanOptions) -> Result<ScanReport, DugundjiError> {
    let axioms: Vec<Program> = axioms_of(id).iter().map(|a| Program::new(&a.schema)).collect();
    let target = Program::new(f);
    let check = |m: &DetMatrix, weight: u64| -> Tally {
        let mut t = Tally {
            candidates: weight,
            classes: 1,
            ..Default::default()
        };
        if is_model_with(m, &axioms) {
            t.models = weight;
            if !target.valid_in(m) {
                t.violations.push(m.clone());
            }
        }
        t
    };

    let (tally, exhaustive, seed) = match size {
        2 => {
            let perms = permutations(size);
            let total = candidate_count(size) as u64;
            let tally = in_pool(opts.jobs, || {
                (0..total)
                    .into_par_iter()
                    .map(|i| {
                        let m = decode(size, i);
                        match canonical_orbit(&m, &perms) {
                            Some(w) => check(&m, w),
                            None => Tally::default(),
                        }
                    })
                    .reduce(Tally::default, Tally::merge)
            });
            (tally, true, None)
        }
        3 => {
            if opts.samples > SAMPLE_CAP {
                return Err(DugundjiError::BudgetExceeded {
                    requested: opts.samples,
                    cap: SAMPLE_CAP,
                });
            }
            let mut r = rng(opts.seed);
            let mut tally = Tally::default();
            let mut left = opts.samples;
            while left > 0 {
                let n = left.min(CHUNK);
                left -= n;
                let batch: Vec<DetMatrix> = (0..n).map(|_| random_candidate(&mut r, size)).collect();
                let part = in_pool(opts.jobs, || {
                    batch
                        .par_iter()
                        .map(|m| check(m, 1))
                        .reduce(Tally::default, Tally::merge)
                });
                tally = tally.merge(part);
            }
            (tally, false, Some(opts.seed))
        }
        other => return Err(DugundjiError::BadSize(other)),
    };
    Ok(ScanReport {
        size,
        system: id,
        formula: f.to_string(),
        exhaustive,
        candidates: tally.candidates,
        classes: tally.classes,
        models: tally.models,
        violations: tally.violations,
        seed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubstitutionReport {
    pub system: SystemId,
    pub n: usize,
    pub models: u64,
    /// Assignments with `h(p_i) = h(p_k)`, `i ≠ k`, that were checked.
    pub checked: u64,
    /// Cases where `h(α(n)) ≠ h(β_i(n))` although `h(p_i) = h(p_k)`.
    pub failures: u64,
}

/// Over every two-valued model of `id`, checks that `α(n)` and `β_i(n)`
/// take the same value whenever `p_i` repeats the value of some other atom.
pub fn substitution_lemma(id: SystemId, n: usize) -> Result<SubstitutionReport, DugundjiError> {
    if n < 3 {
        return Err(DugundjiError::BadN(n));
    }
    let axioms: Vec<Program> = axioms_of(id).iter().map(|a| Program::new(&a.schema)).collect();
    let a = Program::new(&alpha(n));
    let betas: Vec<Program> = (1..=n).map(|i| Program::new(&beta(n, i))).collect();
    let mut report = SubstitutionReport {
        system: id,
        n,
        models: 0,
        checked: 0,
        failures: 0,
    };
    for index in 0..candidate_count(2) as u64 {
        let m = decode(2, index);
        if !is_model_with(&m, &axioms) {
            continue;
        }
        report.models += 1;
        // Leaves of both programs are p1..pn in order, minus p_i for β_i.
        let mut h = vec![0usize; n];
        loop {
            let va = a.eval(&m, &h);
            for i in 0..n {
                if (0..n).any(|k| k != i && h[k] == h[i]) {
                    let rest: Vec<usize> = (0..n).filter(|&j| j != i).map(|j| h[j]).collect();
                    report.checked += 1;
                    if betas[i].eval(&m, &rest) != va {
                        report.failures += 1;
                    }
                }
            }
            if !next_assignment(&mut h, 2) {
                break;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dugundji::{build_delta, build_gamma};

    #[test]
    fn counts() {
        assert_eq!(candidate_count(2), 2048);
        assert_eq!(candidate_count(3), 27 * 19_683 * 27 * 27 * 6);
        assert_eq!(permutations(3).len(), 6);
        let all: Vec<DetMatrix> = (0..2048).map(|i| decode(2, i)).collect();
        assert!(all.iter().all(DetMatrix::well_formed));
        let mut distinct = all.clone();
        distinct.sort_by_key(DetMatrix::encoding);
        distinct.dedup();
        assert_eq!(distinct.len(), 2048);
    }

    #[test]
    fn orbit_weights_cover_every_candidate() {
        let perms = permutations(2);
        let total: u64 = (0..2048).filter_map(|i| canonical_orbit(&decode(2, i), &perms)).sum();
        assert_eq!(total, 2048);
    }

    #[test]
    fn size_two_scans() {
        let d3 = build_delta(3).unwrap().formula;
        let r = scan_matrices(2, SystemId::Km, &d3, &ScanOptions::default()).unwrap();
        assert_eq!(r.candidates, 2048);
        assert!(r.models > 0);
        assert!(r.violations.is_empty());
        let g3 = build_gamma(3).unwrap().formula;
        let r = scan_matrices(2, SystemId::Tmd, &g3, &ScanOptions { jobs: 2, ..Default::default() }).unwrap();
        assert!(r.violations.is_empty());
    }

    #[test]
    fn size_three_is_budgeted() {
        let d4 = build_delta(4).unwrap().formula;
        let opts = ScanOptions {
            samples: SAMPLE_CAP + 1,
            ..Default::default()
        };
        assert!(matches!(
            scan_matrices(3, SystemId::Km, &d4, &opts),
            Err(DugundjiError::BudgetExceeded { .. })
        ));
        let opts = ScanOptions {
            samples: 3000,
            seed: 5,
            jobs: 2,
        };
        let a = scan_matrices(3, SystemId::Km, &d4, &opts).unwrap();
        let b = scan_matrices(3, SystemId::Km, &d4, &ScanOptions { jobs: 1, ..opts }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.candidates, 3000);
        assert!(a.violations.is_empty());
        assert_eq!(scan_matrices(4, SystemId::Km, &d4, &ScanOptions::default()), Err(DugundjiError::BadSize(4)));
    }
}
