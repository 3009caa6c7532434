use indexmap::IndexSet;
use serde::Serialize;

use crate::actmod::{aug_matrix, gamma_graph, kernel_blocks, restricted_group, PermGroup};
use crate::augcheck::report::{
    subspace_witness, CheckReport, Condition, Final, GroupMethod, OracleOutcome, Path, Witness,
};
use crate::error::{Error, Result};
use crate::exactlin::{
    brute_force_irreducible_gfp, is_irreducible, Certificate, FieldTag, Matrix, DEFAULT_BRUTE_FORCE_BOUND,
};
use crate::tmon::{
    is_2_transitive, is_primitive, is_transitive, orbit, zero_transitive_sink, GreenData, MonoidData,
};

/// Monoids larger than this hand only their generators to the oracle.
pub const ORACLE_ELEMENT_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupVerdict {
    pub simple: bool,
    pub method: GroupMethod,
    pub certified: bool,
}

/// Simplicity of the augmentation module of a permutation group on its points.
pub fn group_aug_simple(group: &PermGroup, field: FieldTag) -> Result<GroupVerdict> {
    let n = group.degree();
    if n <= 2 {
        return Ok(GroupVerdict { simple: n == 2, method: GroupMethod::SmallDegree, certified: true });
    }
    match field {
        FieldTag::Complexes => {
            Ok(GroupVerdict { simple: group.is_2_transitive(), method: GroupMethod::TwoTransitivity, certified: true })
        }
        FieldTag::Reals => {
            Ok(GroupVerdict { simple: group.is_2_homogeneous(), method: GroupMethod::TwoHomogeneity, certified: true })
        }
        _ => {
            let actions = dedup(group.aug_matrices(field), n - 1, field);
            let r = is_irreducible(&actions, n - 1)?;
            Ok(GroupVerdict { simple: r.irreducible, method: GroupMethod::Oracle, certified: r.is_certified() })
        }
    }
}

// Distinct matrices with the zero and identity matrices dropped, unless nothing else is left.
fn dedup(matrices: Vec<Matrix>, dim: usize, field: FieldTag) -> Vec<Matrix> {
    let id = Matrix::identity(field, dim);
    let zero = Matrix::zeros(field, dim, dim);
    let set: IndexSet<Matrix> = matrices.into_iter().filter(|a| *a != id && *a != zero).collect();
    if set.is_empty() {
        vec![id]
    } else {
        set.into_iter().collect()
    }
}

fn oracle_actions(m: &MonoidData, field: FieldTag) -> Vec<Matrix> {
    let dim = m.degree() - 1;
    let source = if m.len() <= ORACLE_ELEMENT_LIMIT { m.elements() } else { m.generators() };
    dedup(source.iter().map(|t| aug_matrix(t, field)).collect(), dim, field)
}

/// Independent answer from the irreducibility test on the full augmentation action.
pub fn oracle_simple(m: &MonoidData, field: FieldTag) -> Result<OracleOutcome> {
    field.require_computable()?;
    let n = m.degree();
    if n <= 2 {
        let certificate = if n == 2 { Certificate::OneDimensional } else { Certificate::BruteForce };
        return Ok(OracleOutcome {
            field,
            verdict: Final::from_bool(n == 2),
            certified: true,
            method: certificate,
            brute_force: None,
            witness: None,
        });
    }
    let dim = n - 1;
    let actions = oracle_actions(m, field);
    let r = is_irreducible(&actions, dim)?;
    let brute_force = match field {
        FieldTag::Gf(_) => match brute_force_irreducible_gfp(&actions, dim, DEFAULT_BRUTE_FORCE_BOUND) {
            Ok(b) => Some(b),
            Err(Error::BoundExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
        _ => None,
    };
    if let Some(b) = brute_force {
        if b != r.irreducible {
            return Err(Error::Inconsistent(format!(
                "irreducibility test says {} but exhaustive search says {b} over {field}",
                r.irreducible
            )));
        }
    }
    Ok(OracleOutcome {
        field,
        verdict: Final::from_bool(r.irreducible),
        certified: r.is_certified() || brute_force.is_some(),
        method: r.certificate,
        brute_force,
        witness: r.witness.as_deref().map(subspace_witness),
    })
}

fn condition_four(m: &MonoidData, g: &GreenData, j: usize, field: FieldTag) -> Result<Condition> {
    let rank = kernel_blocks(m, g, j)?.incidence_rank(field)?;
    let required = m.degree();
    Ok(Condition::new(rank == required, Some(Witness::Rank { rank, required, field: field.rank_delegate() })))
}

fn condition_five(m: &MonoidData, g: &GreenData, j: usize) -> Result<Condition> {
    let gamma = gamma_graph(m, g, j)?;
    let witness = gamma
        .disconnected_pair()
        .map(|(a, b)| Witness::Components { count: gamma.component_count(), a, b });
    Ok(Condition::new(gamma.is_connected(), witness))
}

fn condition_three(m: &MonoidData, g: &GreenData, j: usize, field: FieldTag, report: &mut CheckReport) -> Result<()> {
    let e = g.idempotents_in(j)[0];
    let group = restricted_group(m, g, e)?;
    let v = group_aug_simple(&group, field)?;
    report.group_condition_method = Some(v.method);
    report.certified &= v.certified;
    report.c3 = Condition::new(
        v.simple,
        Some(Witness::Group { idempotent: e, points: group.points.clone(), order: group.perms.len(), method: v.method }),
    );
    Ok(())
}

fn constant_map(m: &MonoidData) -> Option<usize> {
    (0..m.len()).find(|&x| m.rank(x) == 1)
}

/// Evaluates the five conditions for a monoid that is not a group.
pub fn check_conditions(m: &MonoidData, g: &GreenData, field: FieldTag) -> Result<CheckReport> {
    if m.is_group() {
        return Err(Error::IsGroup);
    }
    let mut report = CheckReport::blank(field, m.degree(), m.len(), Path::Conditions);
    let c = constant_map(m);
    report.c1 = Condition::new(
        c.is_some(),
        c.map(|element| Witness::ConstantMap { element, image: m.element(element).clone() }),
    );
    if c.is_none() {
        report.final_verdict = Final::NotSimple;
        return Ok(report);
    }

    let minimal = g.minimal_nonzero();
    let j = match minimal[..] {
        [j] => {
            let regular = g.is_regular(j);
            report.c2 = Condition::new(regular, Some(Witness::JClass { class: j, rank: g.j_rank(j), regular }));
            regular.then_some(j)
        }
        _ => {
            report.c2 = Condition::new(false, Some(Witness::MinimalClasses { classes: minimal.clone() }));
            None
        }
    };
    let Some(j) = j else {
        report.final_verdict = Final::NotSimple;
        return Ok(report);
    };

    condition_three(m, g, j, field, &mut report)?;
    report.c4 = condition_four(m, g, j, field)?;
    report.c5 = condition_five(m, g, j)?;
    report.final_verdict = Final::from_bool(report.conditions().iter().all(|c| c.verdict.holds()));
    Ok(report)
}

/// Specialised check for 0-transitive monoids: simple iff the minimal
/// nonzero J-class has rank 2 and c4 holds.
pub fn check_0_transitive(m: &MonoidData, g: &GreenData, field: FieldTag) -> Result<CheckReport> {
    let sink = zero_transitive_sink(m).ok_or(Error::Not0Transitive)?;
    let mut report = CheckReport::blank(field, m.degree(), m.len(), Path::ZeroTransitive);
    report.sink = Some(sink);

    let zero = constant_map(m).ok_or_else(|| Error::Inconsistent("0-transitive monoid without a zero".into()))?;
    report.c1 = Condition::new(true, Some(Witness::ConstantMap { element: zero, image: m.element(zero).clone() }));
    let j = match g.minimal_nonzero()[..] {
        [j] if g.is_regular(j) => j,
        _ => return Err(Error::Inconsistent("0-transitive monoid without a unique regular minimal nonzero J-class".into())),
    };
    let rank = g.j_rank(j);
    report.c2 = Condition::new(true, Some(Witness::JClass { class: j, rank, regular: true }));
    condition_three(m, g, j, field, &mut report)?;
    if report.c3.verdict.holds() != (rank == 2) {
        return Err(Error::Inconsistent(format!("group condition disagrees with rank {rank} of the minimal nonzero J-class")));
    }
    report.c4 = condition_four(m, g, j, field)?;
    report.c5 = condition_five(m, g, j)?;

    let gamma = gamma_graph(m, g, j)?;
    if rank == 2 && !gamma.is_star(sink) {
        return Err(Error::Inconsistent("rank-2 minimal nonzero J-class but the fixed-point graph is not a star".into()));
    }
    let simple = rank == 2 && report.c4.verdict.holds();
    if simple {
        let e = g.idempotents_in(j)[0];
        if g.h_classes()[g.h_class(e)].len() != 1 {
            return Err(Error::Inconsistent("simple augmentation with a nontrivial maximal subgroup".into()));
        }
    }
    report.final_verdict = Final::from_bool(simple);
    Ok(report)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Also run the irreducibility oracle and record agreement.
    pub oracle: bool,
}

/// Full decision procedure: routes to the group, 0-transitive or general path.
pub fn decide(m: &MonoidData, field: FieldTag, options: CheckOptions) -> Result<CheckReport> {
    let n = m.degree();
    let g = GreenData::new(m);
    let mut report = if n <= 2 {
        let mut r = CheckReport::blank(field, n, m.len(), Path::SmallDegree);
        r.final_verdict = Final::from_bool(n == 2);
        r
    } else if !is_transitive(m) && zero_transitive_sink(m).is_none() {
        let mut r = CheckReport::blank(field, n, m.len(), Path::Preflight);
        let congruence = is_primitive(m);
        r.preflight = Some(match congruence.witness {
            Some(blocks) => Witness::Congruence { blocks },
            None => {
                let point = (0..n).find(|&w| orbit(m, w).len() < n).expect("intransitive action has a short orbit");
                Witness::Orbit { point, orbit: orbit(m, point) }
            }
        });
        r.final_verdict = Final::NotSimple;
        r
    } else if m.is_group() {
        let mut r = CheckReport::blank(field, n, m.len(), Path::Group);
        let group = PermGroup { points: (0..n).collect(), perms: m.elements().iter().map(|t| t.image().to_vec()).collect() };
        let v = group_aug_simple(&group, field)?;
        r.c3 = Condition::new(v.simple, Some(Witness::Group { idempotent: 0, points: group.points.clone(), order: m.len(), method: v.method }));
        r.group_condition_method = Some(v.method);
        r.certified = v.certified;
        r.final_verdict = Final::from_bool(v.simple);
        r
    } else if zero_transitive_sink(m).is_some() {
        check_0_transitive(m, &g, field)?
    } else {
        check_conditions(m, &g, field)?
    };

    if field.is_computable() {
        if options.oracle {
            let o = oracle_simple(m, field)?;
            report.agreement = Some(o.verdict == report.final_verdict);
            report.oracle = Some(o);
        }
    } else if n > 2 {
        // Simplicity over ℝ or ℂ forces simplicity over ℚ.
        let q = oracle_simple(m, FieldTag::Rationals)?;
        if report.final_verdict == Final::Simple && q.verdict == Final::NotSimple {
            report.final_verdict = Final::Undecidable;
            report.notes.push(format!("{field} criterion says simple but a rational invariant subspace exists"));
        }
        report.rational_cross_check = Some(q);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialVerdict {
    /// Simplicity of the partial transformation module on the non-sink points.
    pub simple: Final,
    pub report: CheckReport,
}

/// Simplicity of `𝔽Λ` for a monoid of partial maps encoded with sink 0.
pub fn partial_module_simple(m: &MonoidData, field: FieldTag, options: CheckOptions) -> Result<PartialVerdict> {
    if m.generators().iter().any(|t| !t.fixes(0)) {
        return Err(Error::InvalidStructure("partial maps must fix the sink point 0".into()));
    }
    let report = decide(m, field, options)?;
    Ok(PartialVerdict { simple: report.final_verdict, report })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoTransitiveReport {
    pub constant_map: bool,
    pub unique_minimal_regular: bool,
    pub group_two_transitive: bool,
    pub gamma_complete: bool,
}

impl TwoTransitiveReport {
    pub fn all_hold(&self) -> bool {
        self.constant_map && self.unique_minimal_regular && self.group_two_transitive && self.gamma_complete
    }
}

/// Structural consequences of 2-transitivity for a monoid that is not a group.
pub fn two_transitive_consequences(m: &MonoidData, g: &GreenData) -> Result<TwoTransitiveReport> {
    if m.is_group() {
        return Err(Error::IsGroup);
    }
    if !is_2_transitive(m) {
        return Err(Error::NotTwoTransitive);
    }
    let constant_map = constant_map(m).is_some();
    let minimal = g.minimal_nonzero();
    let (unique_minimal_regular, group_two_transitive, gamma_complete) = match minimal[..] {
        [j] if g.is_regular(j) => {
            let e = g.idempotents_in(j)[0];
            let group = restricted_group(m, g, e)?;
            (true, group.is_2_transitive(), gamma_graph(m, g, j)?.is_complete())
        }
        _ => (false, false, false),
    };
    Ok(TwoTransitiveReport { constant_map, unique_minimal_regular, group_two_transitive, gamma_complete })
}
