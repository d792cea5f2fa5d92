//! Families of same-order graphs realizing a prescribed list of
//! distinguishing numbers — connected circulant families, their minimal
//! common order, and the disconnected clique-plus-path fallback.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::distinguishing::{
    break_labeling, cmp_distinguishing_formula, explicit_labeling, is_distinguishing,
    random_labeling, Labeling,
};
use crate::graph::{CmpSpec, Graph};
use crate::perm::{is_automorphism, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("need at least two targets")]
    TooFewTargets,
    #[error("targets must be strictly increasing: {prev} then {next}")]
    NotIncreasing { prev: usize, next: usize },
    #[error("every target must be at least 2, got {0}")]
    TargetTooSmall(usize),
    #[error("family order overflows")]
    OrderOverflow,
    #[error("member C({m},{p}) has order {got}, expected {expected}")]
    OrderMismatch {
        m: usize,
        p: usize,
        got: usize,
        expected: usize,
    },
    #[error("member C({m},{p}) has distinguishing number {got}, expected {expected}")]
    TargetMismatch {
        m: usize,
        p: usize,
        got: usize,
        expected: usize,
    },
}

fn validate_targets(targets: &[usize]) -> Result<(), FamilyError> {
    if targets.len() < 2 {
        return Err(FamilyError::TooFewTargets);
    }
    for &d in targets {
        if d < 2 {
            return Err(FamilyError::TargetTooSmall(d));
        }
    }
    for w in targets.windows(2) {
        if w[0] >= w[1] {
            return Err(FamilyError::NotIncreasing {
                prev: w[0],
                next: w[1],
            });
        }
    }
    Ok(())
}

/// A list of `C(m_i, p_i)` sharing one order `n`, with
/// `D(C(m_i, p_i)) = targets[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPlan {
    targets: Vec<usize>,
    members: Vec<CmpSpec>,
    common_order: usize,
    scaling_k: Option<usize>,
}

impl FamilyPlan {
    /// Validates the plan invariants: equal orders and closed-form
    /// agreement with the targets.
    pub fn assemble(
        targets: Vec<usize>,
        members: Vec<CmpSpec>,
        scaling_k: Option<usize>,
    ) -> Result<Self, FamilyError> {
        validate_targets(&targets)?;
        assert_eq!(targets.len(), members.len(), "one member per target");
        let common_order = members[0].order();
        for (spec, &d) in members.iter().zip(&targets) {
            if spec.order() != common_order {
                return Err(FamilyError::OrderMismatch {
                    m: spec.m(),
                    p: spec.p(),
                    got: spec.order(),
                    expected: common_order,
                });
            }
            let formula =
                cmp_distinguishing_formula(spec).map_err(|_| FamilyError::TargetMismatch {
                    m: spec.m(),
                    p: spec.p(),
                    got: 0,
                    expected: d,
                })?;
            if formula != d {
                return Err(FamilyError::TargetMismatch {
                    m: spec.m(),
                    p: spec.p(),
                    got: formula,
                    expected: d,
                });
            }
        }
        Ok(FamilyPlan {
            targets,
            members,
            common_order,
            scaling_k,
        })
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn members(&self) -> &[CmpSpec] {
        &self.members
    }

    pub fn common_order(&self) -> usize {
        self.common_order
    }

    /// The stretch factor applied to the base construction, when the plan
    /// came from [`build_connected_family`]; `None` for plans found by the
    /// minimal-order search.
    pub fn scaling_k(&self) -> Option<usize> {
        self.scaling_k
    }
}

/// True when the closed form gives `D(C(m,p)) = m + 1`.
fn in_small_label_regime(m: usize, p: usize) -> bool {
    p >= 2 && p != 4 && (m >= 2 || p >= 6)
}

/// Connected circulant family for the given strictly increasing targets.
///
/// Takes `m_i = d_i - 1` and `p_i = (prod of the other m_j)`, so every
/// member has the same base order, then stretches all periods by the
/// smallest factor `k` that puts every member in the `m + 1` regime
/// (period at least 2, never 4, and at least 6 for members with `m = 1`).
/// `k = 6` always qualifies, so the search is tiny.
pub fn build_connected_family(targets: &[usize]) -> Result<FamilyPlan, FamilyError> {
    validate_targets(targets)?;
    let ms: Vec<usize> = targets.iter().map(|&d| d - 1).collect();
    let mut base: usize = 1;
    for &m in &ms {
        base = base.checked_mul(m).ok_or(FamilyError::OrderOverflow)?;
    }
    let periods: Vec<usize> = ms.iter().map(|&m| base / m).collect();

    let k = (1..=6)
        .find(|&k| {
            ms.iter()
                .zip(&periods)
                .all(|(&m, &p)| in_small_label_regime(m, k * p))
        })
        .expect("k = 6 always lands in the m + 1 regime");
    let members = ms
        .iter()
        .zip(&periods)
        .map(|(&m, &p)| CmpSpec::new(m, k * p).expect("scaled member has order >= 6"))
        .collect();
    FamilyPlan::assemble(targets.to_vec(), members, Some(k))
}

/// The smallest order `n` such that every `m_i = d_i - 1` divides `n` and
/// `C(m_i, n / m_i)` has distinguishing number exactly `d_i`, found by
/// ascending search over multiples of `lcm(m_1..m_r)`. Never larger than
/// the [`build_connected_family`] order.
pub fn minimal_common_order(targets: &[usize]) -> Result<FamilyPlan, FamilyError> {
    validate_targets(targets)?;
    let ms: Vec<usize> = targets.iter().map(|&d| d - 1).collect();
    let mut base: usize = 1;
    for &m in &ms {
        base = base.checked_mul(m).ok_or(FamilyError::OrderOverflow)?;
    }
    let lcm = ms.iter().fold(1usize, |acc, &m| acc / gcd(acc, m) * m);

    // 6 * base is an upper bound: it is the stretched construction order.
    let mut n = lcm;
    while n <= 6 * base {
        let ok = ms.iter().zip(targets).all(|(&m, &d)| {
            CmpSpec::new(m, n / m)
                .ok()
                .and_then(|spec| cmp_distinguishing_formula(&spec).ok())
                == Some(d)
        });
        if ok {
            let members = ms
                .iter()
                .map(|&m| CmpSpec::new(m, n / m).unwrap())
                .collect();
            return FamilyPlan::assemble(targets.to_vec(), members, None);
        }
        n += lcm;
    }
    unreachable!("the stretched construction order always qualifies")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One member of a disconnected family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisconnectedMember {
    /// The path on `order` vertices.
    Path { order: usize },
    /// A clique next to a path, disjoint.
    CliquePlusPath { clique: usize, path: usize },
    /// The clique on `order` vertices.
    Clique { order: usize },
}

impl DisconnectedMember {
    pub fn graph(&self) -> Graph {
        match *self {
            DisconnectedMember::Path { order } => Graph::path(order),
            DisconnectedMember::CliquePlusPath { clique, path } => {
                Graph::complete(clique).disjoint_union(&Graph::path(path))
            }
            DisconnectedMember::Clique { order } => Graph::complete(order),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            DisconnectedMember::Path { order } | DisconnectedMember::Clique { order } => order,
            DisconnectedMember::CliquePlusPath { clique, path } => clique + path,
        }
    }
}

/// Same-order graphs hitting the targets without the connectivity
/// requirement: mostly cliques padded by paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisconnectedPlan {
    targets: Vec<usize>,
    common_order: usize,
    members: Vec<DisconnectedMember>,
}

impl DisconnectedPlan {
    pub fn assemble(
        targets: Vec<usize>,
        members: Vec<DisconnectedMember>,
    ) -> Result<Self, FamilyError> {
        validate_targets(&targets)?;
        assert_eq!(targets.len(), members.len(), "one member per target");
        let common_order = members[0].order();
        for member in &members {
            assert_eq!(member.order(), common_order, "members must share the order");
        }
        Ok(DisconnectedPlan {
            targets,
            common_order,
            members,
        })
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn common_order(&self) -> usize {
        self.common_order
    }

    pub fn members(&self) -> &[DisconnectedMember] {
        &self.members
    }
}

/// Builds the disconnected family of order `n = max target`: the top
/// target gets `K_n` itself, every other `d` gets `K_d` next to a path
/// filling up the order. The one clash is `d = 2` at `n = 4`, where
/// `K_2 + P_2` has two swappable components; `P_4` stands in for it.
pub fn build_disconnected_family(targets: &[usize]) -> Result<DisconnectedPlan, FamilyError> {
    validate_targets(targets)?;
    let n = *targets.last().expect("targets nonempty");
    let members = targets
        .iter()
        .map(|&d| {
            if d == n {
                DisconnectedMember::Clique { order: n }
            } else if d == 2 && n == 4 {
                DisconnectedMember::Path { order: 4 }
            } else {
                DisconnectedMember::CliquePlusPath {
                    clique: d,
                    path: n - d,
                }
            }
        })
        .collect();
    DisconnectedPlan::assemble(targets.to_vec(), members)
}

/// Evidence that one connected-family member hits its target without
/// running the full oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberCertificate {
    pub spec: CmpSpec,
    pub target_d: usize,
    /// A concrete labeling with `target_d` labels verified distinguishing
    /// (the explicit labeling for `m >= 2`, a pinned 2-labeling for cycle
    /// members).
    pub upper_bound_verified: bool,
    /// Random labelings with fewer than `target_d` labels that were each
    /// broken by an explicit preserving automorphism.
    pub samples_broken: usize,
    pub samples: usize,
}

impl MemberCertificate {
    pub fn holds(&self) -> bool {
        self.upper_bound_verified && self.samples_broken == self.samples
    }
}

/// A 2-labeling of the cycle `C_p` (`p >= 6`) that no rotation or
/// reflection preserves: marks at 0, 1 and 3 leave gap runs 1, 2 and
/// `p - 3`, which no symmetry of the cycle maps to themselves.
fn cycle_two_labeling(p: usize) -> Labeling {
    assert!(p >= 6);
    let mut labels = vec![1; p];
    labels[0] = 2;
    labels[1] = 2;
    labels[3] = 2;
    Labeling::new(2, labels).expect("two-labeling is valid")
}

/// Certifies every member of a connected plan: verifies a labeling with
/// exactly `target_d` labels as distinguishing, then breaks `samples`
/// random labelings that use one label fewer. Deterministic in `seed`.
pub fn certify_connected_plan(
    plan: &FamilyPlan,
    samples: usize,
    seed: u64,
) -> Vec<MemberCertificate> {
    plan.members()
        .iter()
        .zip(plan.targets())
        .enumerate()
        .map(|(index, (&spec, &target_d))| {
            let g = spec.build();
            let (m, _p) = (spec.m(), spec.p());

            let upper = if m >= 2 {
                explicit_labeling(&spec)
                    .map(|c| c.distinct_count() == m + 1 && is_distinguishing(&g, &c))
                    .unwrap_or(false)
            } else {
                let c = cycle_two_labeling(spec.p());
                is_distinguishing(&g, &c)
            };

            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e3779b97f4a7c15));
            let mut broken = 0;
            for _ in 0..samples {
                let c = random_labeling(g.n(), m, &mut rng);
                let sigma = if m >= 2 {
                    break_labeling(&spec, &c).ok()
                } else {
                    // every 1-labeling is constant; the rotation preserves it
                    Some(Permutation::rotation(g.n(), 1))
                };
                let ok = sigma.is_some_and(|sigma| {
                    !sigma.is_identity()
                        && is_automorphism(&g, &sigma)
                        && (0..g.n()).all(|v| c.get(sigma.apply(v)) == c.get(v))
                });
                if ok {
                    broken += 1;
                }
            }

            MemberCertificate {
                spec,
                target_d,
                upper_bound_verified: upper,
                samples_broken: broken,
                samples,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distinguishing::exact_distinguishing_number;

    #[test]
    fn connected_family_3_4_5() {
        let plan = build_connected_family(&[3, 4, 5]).unwrap();
        assert_eq!(plan.common_order(), 24);
        assert_eq!(plan.scaling_k(), Some(1));
        let mp: Vec<(usize, usize)> = plan.members().iter().map(|s| (s.m(), s.p())).collect();
        assert_eq!(mp, vec![(2, 12), (3, 8), (4, 6)]);
        for (spec, &d) in plan.members().iter().zip(plan.targets()) {
            assert_eq!(cmp_distinguishing_formula(spec).unwrap(), d);
        }
    }

    #[test]
    fn period_four_forces_stretching() {
        let plan = build_connected_family(&[3, 5]).unwrap();
        assert_eq!(plan.scaling_k(), Some(3));
        assert_eq!(plan.common_order(), 24);
        let mp: Vec<(usize, usize)> = plan.members().iter().map(|s| (s.m(), s.p())).collect();
        assert_eq!(mp, vec![(2, 12), (4, 6)]);
    }

    #[test]
    fn cycle_member_forces_stretching() {
        // d = 2 puts a cycle in the family, which needs period >= 6
        let plan = build_connected_family(&[2, 3]).unwrap();
        assert_eq!(plan.scaling_k(), Some(3));
        assert_eq!(plan.common_order(), 6);
        let mp: Vec<(usize, usize)> = plan.members().iter().map(|s| (s.m(), s.p())).collect();
        assert_eq!(mp, vec![(1, 6), (2, 3)]);
    }

    #[test]
    fn minimal_order_examples() {
        assert_eq!(minimal_common_order(&[3, 4, 5]).unwrap().common_order(), 24);
        assert_eq!(minimal_common_order(&[3, 4]).unwrap().common_order(), 6);
        assert_eq!(minimal_common_order(&[2, 3]).unwrap().common_order(), 6);
        // picks a non-multiple of the base product when one works
        let plan = minimal_common_order(&[3, 5, 7]).unwrap();
        assert_eq!(plan.common_order(), 12);
        assert_eq!(plan.scaling_k(), None);
    }

    #[test]
    fn minimal_never_beats_the_construction_the_wrong_way() {
        // every target list drawn from {2..6} with at least two entries
        let pool = [2usize, 3, 4, 5, 6];
        for mask in 0u32..(1 << pool.len()) {
            if mask.count_ones() < 2 {
                continue;
            }
            let targets: Vec<usize> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &d)| d)
                .collect();
            let built = build_connected_family(&targets).unwrap();
            let minimal = minimal_common_order(&targets).unwrap();
            assert!(
                minimal.common_order() <= built.common_order(),
                "targets {targets:?}: {} > {}",
                minimal.common_order(),
                built.common_order()
            );
        }
    }

    #[test]
    fn small_plan_members_agree_with_the_oracle() {
        for targets in [vec![2, 3], vec![3, 4], vec![2, 4], vec![2, 5]] {
            let plan = build_connected_family(&targets).unwrap();
            if plan.common_order() > 10 {
                continue;
            }
            for (spec, &d) in plan.members().iter().zip(plan.targets()) {
                let g = spec.build();
                let (exact, _) = exact_distinguishing_number(&g, g.n()).unwrap();
                assert_eq!(
                    exact,
                    d,
                    "targets {targets:?}, member C({},{})",
                    spec.m(),
                    spec.p()
                );
            }
        }
    }

    #[test]
    fn target_validation() {
        assert_eq!(
            build_connected_family(&[3]).unwrap_err(),
            FamilyError::TooFewTargets
        );
        assert_eq!(
            build_connected_family(&[3, 3]).unwrap_err(),
            FamilyError::NotIncreasing { prev: 3, next: 3 }
        );
        assert_eq!(
            build_connected_family(&[4, 3]).unwrap_err(),
            FamilyError::NotIncreasing { prev: 4, next: 3 }
        );
        assert_eq!(
            build_connected_family(&[1, 3]).unwrap_err(),
            FamilyError::TargetTooSmall(1)
        );
        assert_eq!(
            build_disconnected_family(&[5, 2]).unwrap_err(),
            FamilyError::NotIncreasing { prev: 5, next: 2 }
        );
    }

    #[test]
    fn disconnected_family_with_path_exception() {
        let plan = build_disconnected_family(&[2, 3, 4]).unwrap();
        assert_eq!(plan.common_order(), 4);
        assert_eq!(
            plan.members(),
            &[
                DisconnectedMember::Path { order: 4 },
                DisconnectedMember::CliquePlusPath { clique: 3, path: 1 },
                DisconnectedMember::Clique { order: 4 },
            ]
        );
        for (member, &d) in plan.members().iter().zip(plan.targets()) {
            let g = member.graph();
            let (exact, _) = exact_distinguishing_number(&g, g.n()).unwrap();
            assert_eq!(exact, d, "member {member:?}");
        }
    }

    #[test]
    fn disconnected_families_without_exception() {
        let plan = build_disconnected_family(&[3, 5]).unwrap();
        assert_eq!(
            plan.members(),
            &[
                DisconnectedMember::CliquePlusPath { clique: 3, path: 2 },
                DisconnectedMember::Clique { order: 5 },
            ]
        );

        let plan = build_disconnected_family(&[2, 5]).unwrap();
        assert_eq!(
            plan.members()[0],
            DisconnectedMember::CliquePlusPath { clique: 2, path: 3 }
        );
        // non-isomorphic components: the number is the max over components
        for (member, &d) in plan.members().iter().zip(plan.targets()) {
            let g = member.graph();
            let (exact, _) = exact_distinguishing_number(&g, g.n()).unwrap();
            assert_eq!(exact, d, "member {member:?}");
        }
    }

    #[test]
    fn certification_runs_clean() {
        for targets in [vec![2, 3], vec![3, 4], vec![2, 4], vec![4, 5]] {
            let plan = build_connected_family(&targets).unwrap();
            assert!(plan.common_order() <= 32, "targets {targets:?}");
            let certs = certify_connected_plan(&plan, 25, 0);
            assert!(
                certs.iter().all(MemberCertificate::holds),
                "{targets:?}: {certs:?}"
            );
        }
        // deterministic in the seed
        let plan = build_connected_family(&[2, 3]).unwrap();
        assert_eq!(
            certify_connected_plan(&plan, 25, 0),
            certify_connected_plan(&plan, 25, 0)
        );
    }

    #[test]
    fn cycle_two_labeling_downs_all_symmetries() {
        for p in 6..=12 {
            let g = Graph::cycle(p);
            assert!(is_distinguishing(&g, &cycle_two_labeling(p)), "C_{p}");
        }
    }
}
