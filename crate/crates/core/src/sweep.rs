//! Enumeration of `(λ, μ, ν)` instances and the primitive-vector sweep that
//! builds, verifies and ranks every `v̄(T⁺)`.

use crate::lr::{admissible_nus, enumerate_marked, lr_sum_identity};
use crate::par::{self, Parallelism};
use crate::primitive::{build_primitive, rank, verify_even_primitive};
use crate::shapes::{hook_partitions, hook_split, HookSplit, Partition};
use serde::Serialize;

/// One weight `(μ|ν)` below a hook weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub lambda: HookSplit,
    pub mu: Partition,
    pub nu: Partition,
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "λ={} μ={} ν={}", self.lambda, self.mu, self.nu)
    }
}

/// All `(m|n)`-hook `λ` with `1 ≤ |λ| ≤ max_size`, every `μ ⊆ λ⁺` and every
/// `ν ⊇ λ⁻` with at most `n` parts and `|ν/λ⁻| = |λ⁺/μ|`.
pub fn instances(m: usize, n: usize, max_size: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for p in hook_partitions(size, m, n) {
            let lambda = hook_split(&p, m, n).expect("hook partition");
            for mu in lambda.lambda_plus.subpartitions() {
                let k = lambda.lambda_plus.size() - mu.size();
                for nu in admissible_nus(&lambda.lambda_minus, k, n) {
                    out.push(Instance {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        nu,
                    });
                }
            }
        }
    }
    out
}

/// Outcome of building and checking every `v̄(T⁺)` of one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceOutcome {
    pub instance: Instance,
    /// `|M|`, the number of marked tableaux.
    pub marked: usize,
    /// The Littlewood-Richardson coefficient `C^{λ'}_{μ'ν}`.
    pub lr: u64,
    /// Rank of the built vectors.
    pub rank: usize,
    /// Vectors whose even-primitivity check failed.
    pub non_primitive: usize,
    /// Vectors equal to zero.
    pub zero_vectors: usize,
    pub errors: Vec<String>,
}

impl InstanceOutcome {
    /// Every vector built, primitive, and independent.
    pub fn passes(&self) -> bool {
        self.errors.is_empty() && self.non_primitive == 0 && self.rank == self.marked
    }
}

/// Builds, verifies and ranks the vectors of one instance.
pub fn run_instance(inst: &Instance, verify: bool) -> InstanceOutcome {
    let mut errors = Vec::new();
    let marked = enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap_or_else(|e| {
        errors.push(e.to_string());
        Vec::new()
    });
    let (lr, _) = lr_sum_identity(&inst.lambda, &inst.mu, &inst.nu);
    let mut vectors = Vec::new();
    let mut non_primitive = 0;
    for pair in &marked {
        match build_primitive(&inst.lambda, &pair.t_plus, &pair.rpos) {
            Ok(v) => {
                if verify {
                    match verify_even_primitive(&v.expression) {
                        Ok(rep) if rep.all_zero() => {}
                        Ok(_) => non_primitive += 1,
                        Err(e) => errors.push(e.to_string()),
                    }
                }
                vectors.push(v);
            }
            Err(e) => errors.push(format!("{}: {e}", pair.t_plus)),
        }
    }
    let zero_vectors = vectors.iter().filter(|v| v.expression.is_zero()).count();
    let r = rank(&vectors.iter().map(|v| &v.expression).collect::<Vec<_>>());
    InstanceOutcome {
        instance: inst.clone(),
        marked: marked.len(),
        lr,
        rank: r,
        non_primitive,
        zero_vectors,
        errors,
    }
}

/// Runs [`run_instance`] over every instance.
pub fn run_sweep(
    m: usize,
    n: usize,
    max_size: usize,
    verify: bool,
    mode: Parallelism,
) -> Vec<InstanceOutcome> {
    let insts = instances(m, n, max_size);
    par::map(&insts, mode, |inst| run_instance(inst, verify))
}
