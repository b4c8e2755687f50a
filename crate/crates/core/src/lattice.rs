//! Integer point machinery: enumeration, integer hulls, lattice width,
//! relative lattice-freeness, and the near-subspace probe.
//!
//! Everything is exact. Witnesses are deterministic: enumeration runs in
//! lexicographic coordinate order, width ties break on the canonical
//! direction order, and the lattice-freeness search inherits the
//! deterministic orders of the reductions it composes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::linalg::{
    canonical_directions, dist_sq_to_span, dot_ii, dot_iq, saturated_basis,
    solve_linear_combination, UnimodularMap,
};
use crate::polyhedron::{Constraint, QPolyhedron};
use crate::rat::{ceil_int, floor_int, int_to_rat, is_integer, ivec_to_qvec, IVec, Int, QVec, Rat};
use crate::{Error, Result};

/// Soft cap on bounding-box enumeration, in candidate points.
const ENUM_CAP: u64 = 20_000_000;

/// A rational linear subspace stored as the canonical lattice basis of
/// `span ∩ Z^n` (columns in Hermite normal form), so equality of subspaces
/// is equality of the stored bases.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<IVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// Subspace spanned by integer vectors (saturated and canonicalized).
    pub fn from_int_generators(ambient: usize, vecs: &[IVec]) -> Self {
        Subspace {
            ambient,
            basis: saturated_basis(ambient, vecs),
        }
    }

    /// Subspace spanned by rational vectors.
    pub fn from_rational_generators(ambient: usize, vecs: &[QVec]) -> Self {
        let ints: Vec<IVec> = vecs
            .iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .map(|v| crate::linalg::primitive_of_rational(v).expect("nonzero generator"))
            .collect();
        Subspace::from_int_generators(ambient, &ints)
    }

    /// One-dimensional subspace spanned by a single direction.
    pub fn line(ambient: usize, dir: &IVec) -> Self {
        Subspace::from_int_generators(ambient, core::slice::from_ref(dir))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[IVec] {
        &self.basis
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let cols: Vec<QVec> = self.basis.iter().map(|b| ivec_to_qvec(b)).collect();
        solve_linear_combination(&cols, v).is_some()
    }

    pub fn contains_int_vec(&self, v: &[Int]) -> bool {
        self.contains_vec(&ivec_to_qvec(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains_int_vec(b))
    }

    /// Image under a unimodular map (linear part), again canonical.
    pub fn apply_unimodular(&self, u: &UnimodularMap) -> Subspace {
        let mapped: Vec<IVec> = self.basis.iter().map(|b| u.apply_vec_int(b)).collect();
        Subspace::from_int_generators(self.ambient, &mapped)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

/// Exactly the integer points of a bounded polyhedron, in lexicographic
/// order.
pub fn enumerate_integer_points(p: &QPolyhedron) -> Result<Vec<IVec>> {
    if p.is_empty() {
        return Ok(Vec::new());
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let n = p.ambient();
    let mut lo: Vec<Int> = Vec::with_capacity(n);
    let mut hi: Vec<Int> = Vec::with_capacity(n);
    let mut volume: u64 = 1;
    for i in 0..n {
        let (a, b) = p.coord_range(i).expect("bounded nonempty");
        let (ca, fb) = (ceil_int(&a), floor_int(&b));
        if ca > fb {
            return Ok(Vec::new());
        }
        let width = (&fb - &ca) + Int::from(1);
        let width: u64 = u64::try_from(&width).unwrap_or(u64::MAX);
        volume = volume.saturating_mul(width);
        if volume > ENUM_CAP {
            return Err(Error::EnumerationTooLarge(volume));
        }
        lo.push(ca);
        hi.push(fb);
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut cur = lo.clone();
    'scan: loop {
        let as_q: QVec = ivec_to_qvec(&cur);
        if p.contains_point(&as_q) {
            out.push(cur.clone());
        }
        for i in (0..n).rev() {
            if cur[i] < hi[i] {
                cur[i] += 1;
                cur[i + 1..n].clone_from_slice(&lo[i + 1..n]);
                continue 'scan;
            }
        }
        break;
    }
    Ok(out)
}

/// Convex hull of the integer points of a bounded polyhedron.
pub fn integer_hull(p: &QPolyhedron) -> Result<QPolyhedron> {
    if !p.is_empty() && !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let pts = enumerate_integer_points(p)?;
    Ok(QPolyhedron::from_integer_points(p.ambient(), &pts))
}

/// True iff the polyhedron is the convex hull of its integer points.
///
/// For pointed polyhedra this is "all generator points are integral"; a
/// nontrivial lineality space is quotiented out first, which preserves
/// integrality in both directions.
pub fn is_integral(p: &QPolyhedron) -> Result<bool> {
    if p.is_empty() {
        return Ok(true);
    }
    if p.vrep().lineality.is_empty() {
        return Ok(p.vrep().points.iter().all(|pt| pt.iter().all(is_integer)));
    }
    let (q, _, _) = p.quotient_lineality()?;
    is_integral(&q)
}

/// Result of a budgeted lattice width computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthResult {
    /// Minimum width over the searched directions; `None` when every
    /// searched direction is unbounded on the polyhedron.
    pub width: Option<Rat>,
    /// First direction attaining the minimum, in canonical order.
    pub direction: Option<IVec>,
    /// The `max-norm` budget that was searched.
    pub budget: u32,
}

/// Lattice width over primitive integer directions with infinity norm at
/// most `budget`.
pub fn lattice_width(p: &QPolyhedron, budget: u32) -> Result<WidthResult> {
    if p.is_empty() {
        return Err(Error::EmptyPolyhedron("lattice width"));
    }
    let v = p.vrep();
    let mut best: Option<(Rat, IVec)> = None;
    for c in canonical_directions(p.ambient(), budget) {
        let unbounded = v.rays.iter().any(|r| !dot_ii(&c, r).is_zero())
            || v.lineality.iter().any(|l| !dot_ii(&c, l).is_zero());
        if unbounded {
            continue;
        }
        let vals: Vec<Rat> = v.points.iter().map(|pt| dot_iq(&c, pt)).collect();
        let lo = vals.iter().min().unwrap().clone();
        let hi = vals.iter().max().unwrap().clone();
        let w = hi - lo;
        match &best {
            Some((bw, _)) if *bw <= w => {}
            _ => best = Some((w, c)),
        }
    }
    let (width, direction) = match best {
        Some((w, c)) => (Some(w), Some(c)),
        None => (None, None),
    };
    Ok(WidthResult {
        width,
        direction,
        budget,
    })
}

/// Decides whether `relint(P)` contains an integer point.
///
/// Returns `(true, None)` when `P` is relatively lattice-free, and
/// `(false, Some(witness))` with an integer point of the relative interior
/// otherwise. Unbounded polyhedra are handled by adding the span of the
/// recession cone (which does not change the answer) and quotienting the
/// resulting lineality space away, leaving a polytope.
pub fn is_relatively_lattice_free(p: &QPolyhedron) -> Result<(bool, Option<IVec>)> {
    if p.is_empty() {
        return Err(Error::EmptyPolyhedron("lattice-freeness"));
    }
    let (rays, lins) = p.recession_and_lineality()?;
    let widened;
    let target = if rays.is_empty() {
        p
    } else {
        let gens: Vec<IVec> = rays.iter().chain(lins).cloned().collect();
        widened = p.add_subspace(&gens);
        &widened
    };

    let (quotient, map, k) = target.quotient_lineality()?;
    debug_assert!(quotient.is_bounded());
    let witness_q = match polytope_relint_integer_point(&quotient)? {
        None => return Ok((true, None)),
        Some(w) => w,
    };
    let lifted = QPolyhedron::lift_from_quotient(&map, k, &ivec_to_qvec(&witness_q));
    debug_assert!(lifted.iter().all(is_integer));
    let witness_t: IVec = lifted.iter().map(|x| x.to_integer()).collect();

    if rays.is_empty() {
        debug_assert!(p.relint_contains(&ivec_to_qvec(&witness_t)));
        return Ok((false, Some(witness_t)));
    }

    // Move the witness from relint(P + span(rec P)) into relint(P): write
    // witness = x0 + sum(lambda_i g_i) with x0 in relint(P) over the
    // recession generators, then round the coefficients up to the next
    // integer, which translates by a recession direction of P.
    let gens: Vec<IVec> = rays
        .iter()
        .cloned()
        .chain(lins.iter().cloned())
        .chain(lins.iter().map(|l| l.iter().map(|x| -x.clone()).collect()))
        .collect();
    let wq = ivec_to_qvec(&witness_t);
    let mut eqs = Vec::new();
    let mut ineqs = Vec::new();
    let h = p.hrep();
    for (cs, out) in [(&h.equalities, &mut eqs), (&h.inequalities, &mut ineqs)] {
        for c in cs.iter() {
            let normal: IVec = gens.iter().map(|g| -dot_ii(&c.normal, g)).collect();
            let rhs = c.rhs.clone() - dot_iq(&c.normal, &wq);
            out.push(Constraint::new(normal, rhs));
        }
    }
    let t_poly = QPolyhedron::from_constraints(gens.len(), eqs, ineqs);
    let lambda = t_poly.relint_point()?;
    let mut witness = witness_t;
    for (li, g) in lambda.iter().zip(&gens) {
        let shift = Int::from(1) - ceil_int(li);
        if !shift.is_zero() {
            for (wi, gi) in witness.iter_mut().zip(g) {
                *wi += &shift * gi;
            }
        }
    }
    assert!(
        p.relint_contains(&ivec_to_qvec(&witness)),
        "recession transfer must land in the relative interior"
    );
    Ok((false, Some(witness)))
}

/// Integer point in the relative interior of a polytope, via the integer
/// coset of its affine hull.
fn polytope_relint_integer_point(p: &QPolyhedron) -> Result<Option<IVec>> {
    let (eqs, _) = p.affine_hull()?;
    if eqs.iter().any(|c| !is_integer(&c.rhs)) {
        return Ok(None);
    }
    let a =
        crate::linalg::IMat::from_rows(&eqs.iter().map(|c| c.normal.clone()).collect::<Vec<_>>());
    let a = if eqs.is_empty() {
        crate::linalg::IMat::zero(0, p.ambient())
    } else {
        a
    };
    let b: IVec = eqs.iter().map(|c| c.rhs.to_integer()).collect();
    let Some(sol) = crate::linalg::solve_diophantine(&a, &b) else {
        return Ok(None);
    };
    if sol.kernel.is_empty() {
        let x = ivec_to_qvec(&sol.particular);
        return Ok(if p.relint_contains(&x) {
            Some(sol.particular)
        } else {
            None
        });
    }
    // Substitute x = x0 + K z into the facet inequalities and enumerate the
    // resulting polytope in z-space.
    let x0 = ivec_to_qvec(&sol.particular);
    let ineqs: Vec<Constraint> = p
        .hrep()
        .inequalities
        .iter()
        .map(|c| {
            let normal: IVec = sol
                .kernel
                .iter()
                .map(|kcol| dot_ii(&c.normal, kcol))
                .collect();
            let rhs = c.rhs.clone() - dot_iq(&c.normal, &x0);
            Constraint::new(normal, rhs)
        })
        .collect();
    let zp = QPolyhedron::from_constraints(sol.kernel.len(), Vec::new(), ineqs);
    for z in enumerate_integer_points(&zp)? {
        let mut x = sol.particular.clone();
        for (zj, kcol) in z.iter().zip(&sol.kernel) {
            for (xi, ki) in x.iter_mut().zip(kcol) {
                *xi += zj * ki;
            }
        }
        if p.relint_contains(&ivec_to_qvec(&x)) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Searches the box `|y - x|_inf <= radius` for integer points within
/// squared distance `delta^2` of the subspace, returning one minimizing the
/// exact squared distance to `x` (ties broken lexicographically).
///
/// The caller guarantees `x` lies on the subspace; the search itself is
/// well defined for any `x`.
pub fn near_subspace_point(
    l: &Subspace,
    x: &[Rat],
    delta: &Rat,
    radius: &Rat,
) -> Result<Option<IVec>> {
    assert!(!radius.is_negative(), "radius must be nonnegative");
    assert!(!delta.is_negative(), "delta must be nonnegative");
    debug_assert!(l.contains_vec(x), "probe point must lie on the subspace");
    let n = l.ambient();
    let delta_sq = delta * delta;
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    let mut volume: u64 = 1;
    for xi in x {
        let a = ceil_int(&(xi - radius));
        let b = floor_int(&(xi + radius));
        if a > b {
            return Ok(None);
        }
        let width = u64::try_from(&(&b - &a + Int::from(1))).unwrap_or(u64::MAX);
        volume = volume.saturating_mul(width);
        if volume > ENUM_CAP {
            return Err(Error::EnumerationTooLarge(volume));
        }
        lo.push(a);
        hi.push(b);
    }
    let mut best: Option<(Rat, IVec)> = None;
    let mut cur = lo.clone();
    if n == 0 {
        return Ok(None);
    }
    'scan: loop {
        let yq = ivec_to_qvec(&cur);
        if dist_sq_to_span(l.basis(), &yq) <= delta_sq {
            let d: Rat = yq
                .iter()
                .zip(x)
                .map(|(yi, xi)| {
                    let t = yi - xi;
                    &t * &t
                })
                .fold(Rat::zero(), |a, b| a + b);
            match &best {
                Some((bd, _)) if *bd <= d => {}
                _ => best = Some((d, cur.clone())),
            }
        }
        for i in (0..n).rev() {
            if cur[i] < hi[i] {
                cur[i] += 1;
                cur[i + 1..n].clone_from_slice(&lo[i + 1..n]);
                continue 'scan;
            }
        }
        break;
    }
    Ok(best.map(|(_, y)| y))
}

/// Brute-force lattice-freeness oracle for bounded polyhedra: enumerate all
/// integer points and test each against the relative interior. Used by the
/// test suites as the independent cross-check of
/// [`is_relatively_lattice_free`].
pub fn relint_integer_points_brute(p: &QPolyhedron) -> Result<Vec<IVec>> {
    Ok(enumerate_integer_points(p)?
        .into_iter()
        .filter(|z| p.relint_contains(&ivec_to_qvec(z)))
        .collect())
}

/// Convex hull of the points of `Q` whose first `k` coordinates are
/// integer, computed by enumerating the integer points of the projection
/// and attaching the fibers.
///
/// Requires the projection onto the first `k` coordinates to be bounded.
pub fn mixed_integer_hull(q: &QPolyhedron, k: usize) -> Result<QPolyhedron> {
    let n = q.ambient();
    assert!(k <= n, "integer coordinate count exceeds ambient dimension");
    if q.is_empty() {
        return Ok(QPolyhedron::empty(n));
    }
    if k == n {
        return integer_hull(q);
    }
    let dropped: Vec<usize> = (k..n).collect();
    let proj = q.project_out(&dropped);
    if !proj.is_bounded() {
        return Err(Error::Unbounded);
    }
    let prefixes = enumerate_integer_points(&proj)?;
    let mut points: Vec<QVec> = Vec::new();
    let mut rays: Vec<QVec> = Vec::new();
    let mut lins: Vec<QVec> = Vec::new();
    for w in prefixes {
        let eqs: Vec<Constraint> = (0..k)
            .map(|i| {
                let mut normal = vec![Int::zero(); n];
                normal[i] = Int::from(1);
                Constraint::new(normal, int_to_rat(&w[i]))
            })
            .collect();
        let fiber = q.intersect_constraints(eqs, Vec::new());
        if fiber.is_empty() {
            continue;
        }
        let v = fiber.vrep();
        points.extend(v.points.iter().cloned());
        rays.extend(v.rays.iter().map(|r| ivec_to_qvec(r)));
        lins.extend(v.lineality.iter().map(|l| ivec_to_qvec(l)));
    }
    Ok(QPolyhedron::from_generators(n, points, rays, lins))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::rat::{ivec, qvec, rat};

    fn unit_square() -> QPolyhedron {
        instances::unit_square()
    }

    fn triangle2d() -> QPolyhedron {
        QPolyhedron::from_generators(
            2,
            alloc::vec![qvec(&[0, 0]), qvec(&[2, 0]), qvec(&[0, 2])],
            Vec::new(),
            Vec::new(),
        )
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_integer_points(&unit_square()).unwrap().len(), 4);
        let tri = triangle2d();
        let pts = enumerate_integer_points(&tri).unwrap();
        assert_eq!(pts.len(), 6);
        // Lexicographic order.
        assert_eq!(pts[0], ivec(&[0, 0]));
        assert_eq!(pts[5], ivec(&[2, 0]));

        let cell = QPolyhedron::from_generators(
            2,
            alloc::vec![
                alloc::vec![rat(1, 4), rat(1, 4)],
                alloc::vec![rat(3, 4), rat(1, 4)],
                alloc::vec![rat(1, 2), rat(3, 4)],
            ],
            Vec::new(),
            Vec::new(),
        );
        assert!(enumerate_integer_points(&cell).unwrap().is_empty());

        let prism = instances::triangle3d().add_subspace(&[ivec(&[0, 0, 1])]);
        assert_eq!(enumerate_integer_points(&prism), Err(Error::Unbounded));
    }

    #[test]
    fn integer_hull_examples() {
        for t in [1i64, 8] {
            let q = instances::qt_pyramid(&rat(t, 1)).unwrap();
            assert_eq!(integer_hull(&q).unwrap(), instances::triangle3d());
        }
        let sq = unit_square();
        assert_eq!(integer_hull(&sq).unwrap(), sq);

        let sliver = QPolyhedron::from_generators(
            2,
            alloc::vec![
                alloc::vec![rat(1, 2), rat(0, 1)],
                alloc::vec![rat(3, 2), rat(0, 1)],
                alloc::vec![rat(1, 1), rat(1, 2)],
            ],
            Vec::new(),
            Vec::new(),
        );
        let hull = integer_hull(&sliver).unwrap();
        assert_eq!(hull.vrep().points, alloc::vec![qvec(&[1, 0])]);
    }

    #[test]
    fn integer_hull_invariants() {
        let q = instances::qt_pyramid(&rat(3, 1)).unwrap();
        let h = integer_hull(&q).unwrap();
        assert_eq!(integer_hull(&h).unwrap(), h);
        assert!(q.contains(&h));
        assert_eq!(
            enumerate_integer_points(&q).unwrap(),
            enumerate_integer_points(&h).unwrap()
        );
    }

    #[test]
    fn width_examples() {
        let w = lattice_width(&unit_square(), 1).unwrap();
        assert_eq!(w.width, Some(rat(1, 1)));
        assert_eq!(w.direction, Some(ivec(&[1, 0])));

        let w = lattice_width(&triangle2d(), 2).unwrap();
        assert_eq!(w.width, Some(rat(2, 1)));
        assert_eq!(w.direction, Some(ivec(&[1, 0])));

        let prism = instances::triangle3d().add_subspace(&[ivec(&[0, 0, 1])]);
        let w = lattice_width(&prism, 1).unwrap();
        assert_eq!(w.width, Some(rat(2, 1)));
        assert_eq!(w.direction, Some(ivec(&[1, 0, 0])));
    }

    #[test]
    fn width_is_antitone_in_budget() {
        let p = QPolyhedron::from_generators(
            2,
            alloc::vec![qvec(&[0, 0]), qvec(&[3, 1]), qvec(&[1, 3])],
            Vec::new(),
            Vec::new(),
        );
        let w1 = lattice_width(&p, 1).unwrap().width.unwrap();
        let w2 = lattice_width(&p, 2).unwrap().width.unwrap();
        let w3 = lattice_width(&p, 3).unwrap().width.unwrap();
        assert!(w2 <= w1);
        assert!(w3 <= w2);
    }

    #[test]
    fn width_unimodular_invariance() {
        let p = triangle2d();
        let u = UnimodularMap::new(
            crate::linalg::IMat::from_rows(&[ivec(&[1, 1]), ivec(&[0, 1])]),
            ivec(&[3, -2]),
        )
        .unwrap();
        let q = p.apply_unimodular(&u);
        // Budget large enough to contain the transformed optimum.
        let wp = lattice_width(&p, 3).unwrap().width;
        let wq = lattice_width(&q, 6).unwrap().width;
        assert_eq!(wp, wq);
    }

    #[test]
    fn lattice_free_examples() {
        let prism = instances::triangle3d().add_subspace(&[ivec(&[0, 0, 1])]);
        let (free, w) = is_relatively_lattice_free(&prism).unwrap();
        assert!(free && w.is_none());

        let seg = QPolyhedron::from_generators(
            2,
            alloc::vec![qvec(&[0, 0]), qvec(&[2, 0])],
            Vec::new(),
            Vec::new(),
        );
        let (free, w) = is_relatively_lattice_free(&seg).unwrap();
        assert!(!free);
        assert_eq!(w, Some(ivec(&[1, 0])));

        let p82 = instances::sec82_polytope4d().add_subspace(&[ivec(&[0, 0, 0, 1])]);
        let (free, _) = is_relatively_lattice_free(&p82).unwrap();
        assert!(free);
    }

    #[test]
    fn lattice_free_matches_brute_force_on_bounded() {
        let polys = alloc::vec![
            unit_square(),
            triangle2d(),
            instances::qt_pyramid(&rat(2, 1)).unwrap(),
            instances::sec82_polytope4d(),
            QPolyhedron::from_generators(
                2,
                alloc::vec![qvec(&[0, 0]), qvec(&[3, 0]), qvec(&[0, 3])],
                Vec::new(),
                Vec::new(),
            ),
        ];
        for p in &polys {
            let (free, witness) = is_relatively_lattice_free(p).unwrap();
            let brute = relint_integer_points_brute(p).unwrap();
            assert_eq!(free, brute.is_empty());
            if let Some(w) = witness {
                assert!(brute.contains(&w));
            }
        }
    }

    #[test]
    fn lattice_free_pointed_unbounded_witness() {
        // Upward cone over a wide base: relint contains integer points.
        let cone = QPolyhedron::from_generators(
            2,
            alloc::vec![qvec(&[0, 0])],
            alloc::vec![qvec(&[1, 2]), qvec(&[2, 1])],
            Vec::new(),
        );
        let (free, w) = is_relatively_lattice_free(&cone).unwrap();
        assert!(!free);
        let w = w.unwrap();
        assert!(cone.relint_contains(&ivec_to_qvec(&w)));
    }

    #[test]
    fn near_subspace_examples() {
        let l = Subspace::line(2, &ivec(&[1, 0]));
        let x = qvec(&[5, 0]);
        let y = near_subspace_point(&l, &x, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(y, Some(ivec(&[5, 0])));

        let l = Subspace::line(2, &ivec(&[1, 2]));
        let x = qvec(&[3, 6]);
        let y = near_subspace_point(&l, &x, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(y, Some(ivec(&[3, 6])));

        let l = Subspace::line(2, &ivec(&[2, 1]));
        let x = alloc::vec![rat(1, 1), rat(1, 2)];
        let y = near_subspace_point(&l, &x, &rat(1, 2), &rat(2, 1))
            .unwrap()
            .expect("a nearby integer point exists");
        // Exhaustive check of the returned point's distance bound.
        let d2 = dist_sq_to_span(l.basis(), &ivec_to_qvec(&y));
        assert!(d2 <= rat(1, 4));
        // And minimality among qualifying box points, by direct scan.
        let mut best: Option<Rat> = None;
        for a in -1..=3i64 {
            for b in -2..=3i64 {
                let cand = ivec(&[a, b]);
                if dist_sq_to_span(l.basis(), &ivec_to_qvec(&cand)) <= rat(1, 4) {
                    let d = (rat(a, 1) - x[0].clone()).pow(2) + (rat(b, 1) - x[1].clone()).pow(2);
                    if best.as_ref().is_none_or(|cur| d < *cur) {
                        best = Some(d);
                    }
                }
            }
        }
        let dy =
            (int_to_rat(&y[0]) - x[0].clone()).pow(2) + (int_to_rat(&y[1]) - x[1].clone()).pow(2);
        assert_eq!(Some(dy), best);
    }

    #[test]
    fn near_subspace_none_when_box_misses() {
        let l = Subspace::line(2, &ivec(&[1, 0]));
        let y = near_subspace_point(&l, &qvec(&[5, 0]), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(y, Some(ivec(&[5, 0])));
        // A box of radius 1/4 around the half-integral point on the line
        // contains no integer point at all.
        let x = alloc::vec![rat(11, 2), rat(0, 1)];
        let none = near_subspace_point(&l, &x, &rat(0, 1), &rat(1, 4));
        assert_eq!(none.unwrap(), None);
    }

    #[test]
    fn width_of_full_space_is_unbounded() {
        let plane = QPolyhedron::from_generators(
            2,
            alloc::vec![qvec(&[0, 0])],
            Vec::new(),
            alloc::vec![qvec(&[1, 0]), qvec(&[0, 1])],
        );
        let w = lattice_width(&plane, 2).unwrap();
        assert_eq!(w.width, None);
        assert_eq!(w.direction, None);
    }

    #[test]
    fn mixed_hull_examples() {
        let q1 = instances::qt_pyramid(&rat(1, 1)).unwrap();
        assert_eq!(mixed_integer_hull(&q1, 2).unwrap(), instances::triangle3d());
        assert_eq!(
            mixed_integer_hull(&q1, 3).unwrap(),
            integer_hull(&q1).unwrap()
        );
    }

    #[test]
    fn is_integral_handles_lineality() {
        assert!(is_integral(&instances::triangle3d()).unwrap());
        assert!(is_integral(&instances::qt_pyramid(&rat(0, 1)).unwrap()).unwrap());
        assert!(!is_integral(&instances::qt_pyramid(&rat(1, 1)).unwrap()).unwrap());
        // Integral strip whose canonical generator points are fractional.
        let strip = QPolyhedron::from_constraints(
            2,
            Vec::new(),
            alloc::vec![
                Constraint::new(ivec(&[-1, -2]), rat(-1, 1)),
                Constraint::new(ivec(&[1, 2]), rat(3, 1)),
            ],
        );
        assert!(is_integral(&strip).unwrap());
    }
}
