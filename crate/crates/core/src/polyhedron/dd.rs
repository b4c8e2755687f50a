//! Double description kernel for homogeneous cones, exact over the
//! integers.
//!
//! Cones are `{x : a_i x >= 0}` (with some rows forced to equality). The
//! incremental step keeps a lineality basis and a set of extreme rays modulo
//! lineality; pairs of rays are combined only when combinatorially adjacent,
//! so the ray set stays minimal throughout. Ray vectors are primitive integer
//! vectors; all arithmetic is exact.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::linalg::{dot_ii, primitive};
use crate::rat::{IVec, Int};

/// One homogeneous constraint: `normal . x >= 0`, or `= 0` when `equality`.
pub(crate) struct ConeConstraint {
    pub normal: IVec,
    pub equality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn full_below(bits: usize, limit: usize) -> Self {
        let mut s = BitSet::new(bits);
        for i in 0..limit {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ConeRay {
    pub v: IVec,
    tight: BitSet,
}

/// Minimal generator description of a cone: `span(lineality) + cone(rays)`.
pub(crate) struct ConeGenerators {
    pub lineality: Vec<IVec>,
    pub rays: Vec<ConeRay>,
}

/// Runs the incremental double description method.
///
/// Every constraint normal must be nonzero; callers filter trivial rows.
pub(crate) fn cone_generators(dim: usize, constraints: &[ConeConstraint]) -> ConeGenerators {
    let n_c = constraints.len();
    let mut lineality: Vec<IVec> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<ConeRay> = Vec::new();

    for (idx, c) in constraints.iter().enumerate() {
        debug_assert!(c.normal.iter().any(|x| !x.is_zero()), "zero constraint");
        let pivot = lineality
            .iter()
            .position(|l| !dot_ii(&c.normal, l).is_zero());

        if let Some(p) = pivot {
            // The constraint cuts the lineality space: pivot one basis
            // vector out and make everything else orthogonal to the normal.
            let mut l0 = lineality.swap_remove(p);
            let mut d0 = dot_ii(&c.normal, &l0);
            if d0.is_negative() {
                for x in l0.iter_mut() {
                    *x = -core::mem::take(x);
                }
                d0 = -d0;
            }
            for l in lineality.iter_mut() {
                let dl = dot_ii(&c.normal, l);
                if !dl.is_zero() {
                    let combined: IVec = l
                        .iter()
                        .zip(&l0)
                        .map(|(li, pi)| &d0 * li - &dl * pi)
                        .collect();
                    *l = primitive(&combined).expect("independent basis vector");
                }
            }
            for r in rays.iter_mut() {
                let dr = dot_ii(&c.normal, &r.v);
                if !dr.is_zero() {
                    let combined: IVec =
                        r.v.iter()
                            .zip(&l0)
                            .map(|(ri, pi)| &d0 * ri - &dr * pi)
                            .collect();
                    r.v = primitive(&combined).expect("nonzero ray");
                }
                r.tight.insert(idx);
            }
            if !c.equality {
                // l0 satisfies the new constraint strictly and all previous
                // ones with equality.
                rays.push(ConeRay {
                    v: l0,
                    tight: BitSet::full_below(n_c, idx),
                });
            }
            continue;
        }

        // The normal vanishes on the lineality space: classify rays.
        let values: Vec<Int> = rays.iter().map(|r| dot_ii(&c.normal, &r.v)).collect();
        let plus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        if minus.is_empty() && (!c.equality || plus.is_empty()) {
            // Nothing cut off; record tightness and move on.
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.tight.insert(idx);
                }
            }
            continue;
        }

        let mut new_rays: Vec<ConeRay> = Vec::new();
        for &pi in &plus {
            for &mi in &minus {
                let meet = rays[pi].tight.intersect(&rays[mi].tight);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == pi || k == mi || !meet.is_subset_of(&r.tight));
                if !adjacent {
                    continue;
                }
                let (dp, dm) = (&values[pi], &values[mi]);
                let combined: IVec = rays[pi]
                    .v
                    .iter()
                    .zip(&rays[mi].v)
                    .map(|(pv, mv)| dp * mv - dm * pv)
                    .collect();
                debug_assert!(combined.iter().any(|x| !x.is_zero()), "opposite rays");
                let v = primitive(&combined).expect("nonzero combination");
                // The combination can be tight on constraints outside the
                // pair's meet; the adjacency test needs exact zero sets, so
                // recompute them from scratch.
                let mut tight = BitSet::new(n_c);
                for (i, cc) in constraints[..=idx].iter().enumerate() {
                    if dot_ii(&cc.normal, &v).is_zero() {
                        tight.insert(i);
                    }
                }
                new_rays.push(ConeRay { v, tight });
            }
        }

        let mut kept: Vec<ConeRay> = Vec::new();
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                r.tight.insert(idx);
                kept.push(r);
            } else if values[i].is_positive() && !c.equality {
                kept.push(r);
            }
        }
        kept.extend(new_rays);
        rays = kept;
    }

    ConeGenerators { lineality, rays }
}
