//! Splits, split cuts, and budgeted split / Chvátal-Gomory closures.
//!
//! The true split closure intersects over every split of `Z^n`; here the
//! family is restricted to primitive normals with a bounded infinity norm,
//! which makes the intersection finite while keeping the result a certified
//! superset of the true closure. Ranks computed against such a budget are
//! therefore one-sided: when the iteration reaches the integer hull the
//! reported round count upper-bounds the true rank, and a stall proves
//! nothing beyond the budget.
//!
//! Only splits with a generator point strictly inside the open strip can
//! change a polyhedron, so each closure round enumerates exactly those; the
//! result equals the intersection over the full budgeted family.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::lattice::integer_hull;
use crate::linalg::{
    canonical_directions, canonical_sign, direction_cmp, dot_ii, dot_iq, primitive,
};
use crate::polyhedron::{Constraint, FaceDescriptor, QPolyhedron};
use crate::rat::{floor_int, int_to_rat, is_integer, IVec, Int, Rat};
use crate::{Error, Result};

/// The split `{x : offset <= normal . x <= offset + 1}` for a primitive
/// integer normal in canonical sign form. Its open strip contains no integer
/// point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    normal: IVec,
    offset: Int,
}

impl Split {
    /// Canonicalizes the pair: the normal is reduced to primitive form and
    /// sign-normalized; flipping the normal maps the offset `b` to `-b - 1`,
    /// which describes the same strip.
    pub fn new(normal: IVec, offset: Int) -> Result<Self> {
        let prim = primitive(&normal)?;
        let flipped = prim
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        let canon = canonical_sign(prim);
        let offset = if flipped {
            -offset - Int::one()
        } else {
            offset
        };
        Ok(Split {
            normal: canon,
            offset,
        })
    }

    pub fn normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn offset(&self) -> &Int {
        &self.offset
    }

    /// True when the value lies strictly inside the open strip.
    pub fn strictly_inside(&self, value: &Rat) -> bool {
        let lo = int_to_rat(&self.offset);
        let hi = int_to_rat(&(&self.offset + Int::one()));
        lo < *value && *value < hi
    }

    /// The two closed half-space constraints `normal.x <= offset` and
    /// `-normal.x <= -(offset+1)` flanking the strip.
    pub fn side_constraints(&self) -> (Constraint, Constraint) {
        let below = Constraint::new(self.normal.clone(), int_to_rat(&self.offset));
        let above = Constraint::new(
            self.normal.iter().map(|x| -x.clone()).collect(),
            int_to_rat(&-(&self.offset + Int::one())),
        );
        (below, above)
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= (", self.offset)?;
        for (i, a) in self.normal.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, ").x <= {}", &self.offset + Int::one())
    }
}

impl PartialOrd for Split {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Split {
    fn cmp(&self, other: &Self) -> Ordering {
        direction_cmp(&self.normal, &other.normal).then_with(|| self.offset.cmp(&other.offset))
    }
}

/// Finite restriction of the split family: normals with `max-norm` at most
/// `norm_bound` (supported on the first `mixed_k` coordinates when set), and
/// a round limit for rank iterations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureBudget {
    pub norm_bound: u32,
    pub max_rounds: u32,
    pub mixed_k: Option<usize>,
}

impl ClosureBudget {
    pub fn new(norm_bound: u32, max_rounds: u32) -> Self {
        assert!(norm_bound >= 1 && max_rounds >= 1, "budgets start at one");
        ClosureBudget {
            norm_bound,
            max_rounds,
            mixed_k: None,
        }
    }

    pub fn with_mixed_k(mut self, k: usize) -> Self {
        self.mixed_k = Some(k);
        self
    }
}

/// Which closure operator a rank iteration applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Split,
    Cg,
}

/// Budgeted split directions: canonical primitive vectors, zero-padded
/// outside the integer block for mixed budgets.
fn budget_directions(ambient: usize, budget: &ClosureBudget) -> Vec<IVec> {
    let k = budget.mixed_k.unwrap_or(ambient).min(ambient);
    canonical_directions(k, budget.norm_bound)
        .into_iter()
        .map(|mut d| {
            d.resize(ambient, Int::zero());
            d
        })
        .collect()
}

/// `conv(Q \ int S)`, the split cut of `Q` along `S`.
///
/// When no generator point lies strictly inside the open strip the cut
/// cannot remove anything and `Q` is returned unchanged; otherwise both
/// closed pieces are computed exactly and their hull taken.
pub fn split_cut(q: &QPolyhedron, s: &Split) -> QPolyhedron {
    if q.is_empty() {
        return q.clone();
    }
    assert_eq!(q.ambient(), s.normal.len(), "split dimension mismatch");
    let touched = q
        .vrep()
        .points
        .iter()
        .any(|p| s.strictly_inside(&dot_iq(&s.normal, p)));
    if !touched {
        return q.clone();
    }
    let (below, above) = s.side_constraints();
    let lower = q.intersect_constraints(Vec::new(), vec![below]);
    let upper = q.intersect_constraints(Vec::new(), vec![above]);
    lower.hull_union(&upper).expect("same ambient dimension")
}

/// All budgeted splits that can change `Q`: pairs `(a, floor(a.v))` over
/// generator points `v` with fractional value `a.v`. Sorted canonically.
pub fn effective_splits(q: &QPolyhedron, budget: &ClosureBudget) -> Vec<Split> {
    let mut set: BTreeSet<Split> = BTreeSet::new();
    if q.is_empty() {
        return Vec::new();
    }
    for dir in budget_directions(q.ambient(), budget) {
        for p in &q.vrep().points {
            let v = dot_iq(&dir, p);
            if !is_integer(&v) {
                let s = Split::new(dir.clone(), floor_int(&v)).expect("primitive direction");
                set.insert(s);
            }
        }
    }
    set.into_iter().collect()
}

/// Intersection of the split cuts for an explicit split family, together
/// with `Q` itself.
pub fn split_closure_with(q: &QPolyhedron, splits: &[Split]) -> QPolyhedron {
    if q.is_empty() {
        return q.clone();
    }
    let mut eqs = q.hrep().equalities.clone();
    let mut ineqs = q.hrep().inequalities.clone();
    for s in splits {
        let cut = split_cut(q, s);
        if cut.is_empty() {
            return QPolyhedron::empty(q.ambient());
        }
        let h = cut.hrep();
        eqs.extend(h.equalities.iter().cloned());
        ineqs.extend(h.inequalities.iter().cloned());
    }
    QPolyhedron::from_constraints(q.ambient(), eqs, ineqs)
}

/// One round of the budgeted split closure.
pub fn split_closure(q: &QPolyhedron, budget: &ClosureBudget) -> QPolyhedron {
    split_closure_with(q, &effective_splits(q, budget))
}

/// One round of the budgeted Chvátal-Gomory closure: for every primitive
/// `c` within the norm budget (both orientations) whose maximum over `Q` is
/// finite, add `c.x <= floor(max)`.
pub fn cg_closure(q: &QPolyhedron, budget: &ClosureBudget) -> QPolyhedron {
    if q.is_empty() {
        return q.clone();
    }
    let v = q.vrep();
    let eqs = q.hrep().equalities.clone();
    let mut ineqs = q.hrep().inequalities.clone();
    for dir in budget_directions(q.ambient(), budget) {
        for c in [
            dir.clone(),
            dir.iter().map(|x| -x.clone()).collect::<IVec>(),
        ] {
            if v.rays.iter().any(|r| dot_ii(&c, r).is_positive())
                || v.lineality.iter().any(|l| !dot_ii(&c, l).is_zero())
            {
                continue;
            }
            let max = v
                .points
                .iter()
                .map(|p| dot_iq(&c, p))
                .max()
                .expect("nonempty");
            ineqs.push(Constraint::new(c, int_to_rat(&floor_int(&max))));
        }
    }
    QPolyhedron::from_constraints(q.ambient(), eqs, ineqs)
}

/// Applies the selected closure operator once.
pub fn closure_once(q: &QPolyhedron, budget: &ClosureBudget, kind: ClosureKind) -> QPolyhedron {
    match kind {
        ClosureKind::Split => split_closure(q, budget),
        ClosureKind::Cg => cg_closure(q, budget),
    }
}

/// Outcome of a budgeted rank iteration.
#[derive(Clone, Debug)]
pub struct RankReport {
    /// Closure applications performed. When `reached_hull` is set this is a
    /// certified upper bound on the true rank; otherwise it only counts the
    /// rounds run before stalling or hitting the round limit.
    pub rank: u32,
    pub reached_hull: bool,
    /// `trajectory[0]` is the input; each further entry is one closure
    /// round. A stalled iteration repeats its fixed point as the last entry.
    pub trajectory: Vec<QPolyhedron>,
}

/// Iterates the budgeted closure until the integer hull is reached, the
/// round budget is exhausted, or a round stops improving.
pub fn closure_rank(
    q: &QPolyhedron,
    budget: &ClosureBudget,
    kind: ClosureKind,
) -> Result<RankReport> {
    if !q.is_bounded() {
        return Err(Error::Unbounded);
    }
    let hull = integer_hull(q)?;
    let mut trajectory = vec![q.clone()];
    loop {
        let rounds = (trajectory.len() - 1) as u32;
        let current = trajectory.last().expect("nonempty trajectory");
        if *current == hull {
            return Ok(RankReport {
                rank: rounds,
                reached_hull: true,
                trajectory,
            });
        }
        if rounds >= budget.max_rounds {
            return Ok(RankReport {
                rank: rounds,
                reached_hull: false,
                trajectory,
            });
        }
        let next = closure_once(current, budget, kind);
        let stalled = next == *current;
        trajectory.push(next);
        if stalled {
            return Ok(RankReport {
                rank: (trajectory.len() - 1) as u32,
                reached_hull: false,
                trajectory,
            });
        }
    }
}

/// Verifies that one budgeted closure round commutes with restriction to a
/// face when both sides use the same split family (the family enumerated on
/// the ambient polyhedron).
pub fn face_closure_commutes(
    q: &QPolyhedron,
    face: &FaceDescriptor,
    budget: &ClosureBudget,
) -> Result<bool> {
    let face_poly = q.face_from_tight(&face.tight).polyhedron;
    let family = effective_splits(q, budget);
    let lhs = split_closure_with(q, &family).intersect(&face_poly)?;
    let rhs = split_closure_with(&face_poly, &family);
    Ok(lhs == rhs)
}
