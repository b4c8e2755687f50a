//! Reverse split rank certificates and the constructions around them.
//!
//! An integral polyhedron `P` has relaxations of unbounded split rank
//! exactly when some nonempty face `F` and rational subspace `L` (not inside
//! the lineality space of `P`) satisfy two geometric conditions:
//!
//! 1. `relint(F + L)` is contained in the interior of no split, and
//! 2. `G + L` is relatively lattice-free for every face `G ⊇ F`.
//!
//! Both conditions are decided one-sidedly here: a containing split found
//! within the direction budget, or an integer point in some `relint(G+L)`,
//! refutes a candidate exactly; the absence of a containing split is only
//! certified up to the searched budget, and every result records that
//! budget. The searcher enumerates candidate subspaces with bounded entries
//! (deduplicated through their canonical lattice bases) and candidate faces
//! by decreasing dimension, so its output is deterministic.
//!
//! The same module hosts the comparison search for the reverse
//! Chvátal-Gomory rank (a one-dimensional `L` with `P + L` relatively
//! lattice-free suffices there), the relaxation constructions used by the
//! growth experiments, and the mixed-integer infinite-rank test for a valid
//! inequality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::cuts::Split;
use crate::lattice::{
    enumerate_integer_points, is_integral, is_relatively_lattice_free, mixed_integer_hull, Subspace,
};
use crate::linalg::{
    canonical_directions, column_hnf, dot_ii, dot_iq, dot_qq, int_inverse, unimodular_to_trailing,
    IMat,
};
use crate::polyhedron::{Constraint, Face, FaceDescriptor, QPolyhedron};
use crate::rat::{floor_int, int_to_rat, is_integer, ivec_to_qvec, IVec, Int, QVec, Rat};
use crate::{Error, Result};

/// Outcome of the search for a split containing `relint(F + L)`.
#[derive(Clone, Debug)]
pub struct SplitSearch {
    /// A split whose interior contains `relint(F + L)`, when one was found
    /// within the budget. Finding one is definitive; not finding one is
    /// budget-relative.
    pub containing_split: Option<Split>,
    /// True exactly when the reported answer is definitive.
    pub exhaustive: bool,
    /// The direction budget that was searched.
    pub dir_budget: u32,
}

impl SplitSearch {
    /// True when no containing split was found (the certificate condition).
    pub fn holds(&self) -> bool {
        self.containing_split.is_none()
    }
}

/// Searches for a split `S` with `relint(F + L) ⊆ int S`.
///
/// Candidate normals are exactly the integer vectors orthogonal to `L` and
/// to the recession cone of `F`; they form a saturated lattice, and the
/// search enumerates them as coefficient vectors over that lattice's
/// canonical basis with max-norm at most `dir_budget`. (Budgeting the
/// coefficients rather than the raw entries matters: for a skewed subspace
/// the orthogonal lattice is skewed too, and a small combination of its
/// basis vectors can have large entries.) A direction that is constant at an
/// integer value on `F` pins `F + L` inside an integral hyperplane; the
/// search then recurses inside that hyperplane after a unimodular coordinate
/// drop, because a lower-dimensional containing split lifts to a
/// full-dimensional one whose normal may exceed any fixed entry bound in the
/// original coordinates.
pub fn search_containing_split(
    face: &QPolyhedron,
    l: &Subspace,
    dir_budget: u32,
) -> Result<SplitSearch> {
    if face.is_empty() {
        return Err(Error::EmptyPolyhedron("split containment search"));
    }
    assert_eq!(face.ambient(), l.ambient(), "subspace dimension mismatch");
    let v = face.vrep();
    let recs: Vec<IVec> = v.rays.iter().chain(&v.lineality).cloned().collect();
    let witness = containment_rec(&v.points, &recs, l.basis(), dir_budget);
    let containing_split = match witness {
        None => None,
        Some((normal, offset)) => Some(Split::new(normal, offset)?),
    };
    let exhaustive = containing_split.is_some();
    Ok(SplitSearch {
        containing_split,
        exhaustive,
        dir_budget,
    })
}

/// Recursive direction search; returns `(normal, offset)` of a containing
/// split in the current coordinates.
fn containment_rec(
    verts: &[QVec],
    recs: &[IVec],
    lbasis: &[IVec],
    budget: u32,
) -> Option<(IVec, Int)> {
    let m = verts.first().map_or(0, Vec::len);
    if m == 0 {
        return None;
    }
    // Saturated lattice of admissible normals. Coefficient-primitive
    // combinations of a saturated basis are primitive, so candidates need no
    // further reduction.
    let orth_rows: Vec<IVec> = recs.iter().chain(lbasis).cloned().collect();
    let mut lattice: Vec<IVec> = if orth_rows.is_empty() {
        IMat::identity(m).cols_vec()
    } else {
        crate::linalg::solve_diophantine(
            &IMat::from_rows(&orth_rows),
            &vec![Int::zero(); orth_rows.len()],
        )
        .expect("homogeneous system")
        .kernel
    };
    if lattice.is_empty() {
        return None;
    }
    // The raw kernel basis can be badly skewed, putting short witness
    // normals out of coefficient reach; a greedy pairwise size reduction
    // fixes that at these dimensions.
    reduce_basis_pairwise(&mut lattice);
    let mut constant: Option<(IVec, Int)> = None;
    for coeff in canonical_directions(lattice.len(), budget) {
        let mut a = vec![Int::zero(); m];
        for (cj, bj) in coeff.iter().zip(&lattice) {
            for (ai, bji) in a.iter_mut().zip(bj) {
                *ai += cj * bji;
            }
        }
        let vals: Vec<Rat> = verts.iter().map(|p| dot_iq(&a, p)).collect();
        let lo = vals.iter().min().unwrap().clone();
        let hi = vals.iter().max().unwrap().clone();
        if lo == hi {
            if !is_integer(&lo) {
                // Constant fractional value: the carrying hyperplane sits
                // strictly inside the split at floor(value).
                return Some((a, floor_int(&lo)));
            }
            if constant.is_none() {
                constant = Some((a, lo.to_integer()));
            }
            continue;
        }
        let beta = floor_int(&lo);
        if hi <= int_to_rat(&(&beta + Int::one())) {
            return Some((a, beta));
        }
    }
    let (a0, b0) = constant?;
    // Drop into the integral hyperplane {a0.x = b0}: pick unimodular V with
    // a0 V = e1, substitute x = V y, and recurse on y_2..y_m.
    let hnf = column_hnf(&IMat::from_rows(core::slice::from_ref(&a0)));
    debug_assert!(hnf.h.get(0, 0).is_one(), "primitive row has unit pivot");
    let v_mat = hnf.u;
    let v_inv = int_inverse(&v_mat).expect("unimodular");
    let drop_q = |p: &QVec| -> QVec {
        let y = v_inv.mul_qvec(p);
        debug_assert_eq!(y[0], int_to_rat(&b0));
        y[1..].to_vec()
    };
    let drop_i = |r: &IVec| -> IVec {
        let y = v_inv.mul_ivec(r);
        debug_assert!(y[0].is_zero());
        y[1..].to_vec()
    };
    let verts2: Vec<QVec> = verts.iter().map(drop_q).collect();
    let recs2: Vec<IVec> = recs.iter().map(drop_i).collect();
    let lbasis2: Vec<IVec> = lbasis.iter().map(drop_i).collect();
    let (a_inner, beta_inner) = containment_rec(&verts2, &recs2, &lbasis2, budget)?;
    // Lift: we need a with a.x = a_inner.y' on the hyperplane, i.e.
    // V^T a = (0, a_inner), so a = V^{-T} (0, a_inner).
    let mut padded = vec![Int::zero()];
    padded.extend(a_inner);
    let lifted = v_inv.transpose().mul_ivec(&padded);
    Some((lifted, beta_inner))
}

/// Greedy pairwise Lagrange reduction: repeatedly shortens one basis vector
/// by an integer multiple of another while the squared norm strictly drops,
/// then canonicalizes signs and order. The lattice is unchanged.
fn reduce_basis_pairwise(basis: &mut [IVec]) {
    use crate::linalg::canonical_sign;
    let norm_sq = |v: &IVec| -> Int { dot_ii(v, v) };
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let denom = norm_sq(&basis[j]);
                if denom.is_zero() {
                    continue;
                }
                // Nearest integer of <b_i, b_j> / <b_j, b_j>.
                let num = dot_ii(&basis[i], &basis[j]);
                let t = floor_int(&Rat::new(
                    &num * Int::from(2) + &denom,
                    &denom * Int::from(2),
                ));
                if t.is_zero() {
                    continue;
                }
                let candidate: IVec = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(a, b)| a - &t * b)
                    .collect();
                if norm_sq(&candidate) < norm_sq(&basis[i]) {
                    basis[i] = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for v in basis.iter_mut() {
        *v = canonical_sign(core::mem::take(v));
    }
    basis.sort_by(|a, b| crate::linalg::direction_cmp(a, b));
}

/// Lattice-freeness verdict for one face of the scan.
#[derive(Clone, Debug)]
pub struct FaceEvidence {
    pub face: FaceDescriptor,
    pub dim: usize,
    pub lattice_free: bool,
    pub witness: Option<IVec>,
}

/// Outcome of checking `G + L` for every face `G ⊇ F`.
#[derive(Clone, Debug)]
pub struct FaceScan {
    pub all_free: bool,
    /// First violating face and its interior integer point, if any.
    pub violation: Option<(FaceDescriptor, IVec)>,
    pub evidence: Vec<FaceEvidence>,
}

/// Checks that `G + L` is relatively lattice-free for every face `G` of `P`
/// containing `F`, in decreasing dimension order (so `P` itself first).
pub fn scan_faces_lattice_free(
    p: &QPolyhedron,
    f: &FaceDescriptor,
    l: &Subspace,
) -> Result<FaceScan> {
    let mut evidence = Vec::new();
    for g in p.faces_containing(f)? {
        let gl = g.polyhedron.add_subspace(l.basis());
        let (free, witness) = is_relatively_lattice_free(&gl)?;
        let dim = g.polyhedron.dim().unwrap_or(0);
        evidence.push(FaceEvidence {
            face: g.descriptor.clone(),
            dim,
            lattice_free: free,
            witness: witness.clone(),
        });
        if !free {
            return Ok(FaceScan {
                all_free: false,
                violation: Some((g.descriptor, witness.expect("violation has a witness"))),
                evidence,
            });
        }
    }
    Ok(FaceScan {
        all_free: true,
        violation: None,
        evidence,
    })
}

/// A face-and-subspace pair witnessing infinite reverse split rank, with
/// machine-checkable evidence attached.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub face: FaceDescriptor,
    pub face_polyhedron: QPolyhedron,
    pub face_dim: usize,
    pub subspace: Subspace,
    pub evidence: Vec<FaceEvidence>,
    pub split_search: SplitSearch,
    pub entry_budget: u32,
    pub dir_budget: u32,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate")?;
        writeln!(
            f,
            "  face: tight-set {:?}, dim {}",
            self.face.tight, self.face_dim
        )?;
        writeln!(f, "  subspace: dim {}, basis rows:", self.subspace.dim())?;
        for b in self.subspace.basis() {
            write!(f, "   ")?;
            for x in b {
                write!(f, " {}", x)?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "  budgets: entry {}, direction {}",
            self.entry_budget, self.dir_budget
        )?;
        writeln!(
            f,
            "  split containment: none found (exhaustive: {})",
            self.split_search.exhaustive
        )?;
        writeln!(f, "  lattice-free evidence:")?;
        for e in &self.evidence {
            writeln!(
                f,
                "    face {:?} (dim {}): {}",
                e.face.tight,
                e.dim,
                if e.lattice_free { "free" } else { "violated" }
            )?;
        }
        Ok(())
    }
}

/// Tuning knobs for the certificate search.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Minimum dimension of candidate faces. A valid certificate face always
    /// has dimension at least two, which is the default pruning; set to zero
    /// to exercise the unpruned search.
    pub min_face_dim: usize,
    /// Cap on the dimension of candidate subspaces (defaults to the ambient
    /// dimension).
    pub max_subspace_dim: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            min_face_dim: 2,
            max_subspace_dim: None,
        }
    }
}

/// All candidate subspaces of one dimension: spans of independent sets of
/// canonical primitive vectors with entries bounded by `entry_budget`,
/// deduplicated through their canonical saturated bases, minus those inside
/// `skip` (the lineality space). Sorted by their canonical bases.
pub fn candidate_subspaces(
    ambient: usize,
    entry_budget: u32,
    dim: usize,
    skip: &Subspace,
) -> Vec<Subspace> {
    let dirs = canonical_directions(ambient, entry_budget);
    let mut found: alloc::collections::BTreeSet<Subspace> = alloc::collections::BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(dim);
    fn go(
        dirs: &[IVec],
        ambient: usize,
        dim: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        found: &mut alloc::collections::BTreeSet<Subspace>,
    ) {
        if chosen.len() == dim {
            let gens: Vec<IVec> = chosen.iter().map(|&i| dirs[i].clone()).collect();
            let s = Subspace::from_int_generators(ambient, &gens);
            if s.dim() == dim {
                found.insert(s);
            }
            return;
        }
        for i in start..dirs.len() {
            chosen.push(i);
            go(dirs, ambient, dim, i + 1, chosen, found);
            chosen.pop();
        }
    }
    go(&dirs, ambient, dim, 0, &mut chosen, &mut found);
    found
        .into_iter()
        .filter(|s| !s.is_subspace_of(skip))
        .collect()
}

/// Validates one `(F, L)` pair against both certificate conditions and
/// packages the evidence; `None` when either condition fails.
pub fn verify_certificate(
    p: &QPolyhedron,
    face: &FaceDescriptor,
    l: &Subspace,
    entry_budget: u32,
    dir_budget: u32,
) -> Result<Option<Certificate>> {
    if !is_integral(p)? {
        return Err(Error::NotIntegral);
    }
    let lin = Subspace::from_int_generators(p.ambient(), &p.vrep().lineality);
    if l.is_zero() || l.is_subspace_of(&lin) {
        return Ok(None);
    }
    let face_poly = p.face_from_tight(&face.tight).polyhedron;
    if face_poly.is_empty() {
        return Ok(None);
    }
    let scan = scan_faces_lattice_free(p, face, l)?;
    if !scan.all_free {
        return Ok(None);
    }
    let search = search_containing_split(&face_poly, l, dir_budget)?;
    if !search.holds() {
        return Ok(None);
    }
    let face_dim = face_poly.dim().unwrap_or(0);
    Ok(Some(Certificate {
        face: face.clone(),
        face_polyhedron: face_poly,
        face_dim,
        subspace: l.clone(),
        evidence: scan.evidence,
        split_search: search,
        entry_budget,
        dir_budget,
    }))
}

/// Searches for a certificate of infinite reverse split rank.
///
/// Candidate subspaces are enumerated by increasing dimension and canonical
/// basis order; for each, candidate faces run by decreasing dimension. The
/// first pair passing both conditions is returned. `None` means no
/// certificate exists *within the budgets*; it is not a finiteness proof.
pub fn find_certificate(
    p: &QPolyhedron,
    entry_budget: u32,
    dir_budget: u32,
) -> Result<Option<Certificate>> {
    find_certificate_with(p, entry_budget, dir_budget, &SearchOptions::default())
}

pub fn find_certificate_with(
    p: &QPolyhedron,
    entry_budget: u32,
    dir_budget: u32,
    opts: &SearchOptions,
) -> Result<Option<Certificate>> {
    if p.is_empty() {
        return Ok(None);
    }
    if !is_integral(p)? {
        return Err(Error::NotIntegral);
    }
    let n = p.ambient();

    // A nontrivial lineality space is quotiented away first; a certificate
    // of the quotient lifts by crossing face and subspace with the dropped
    // coordinates.
    if !p.vrep().lineality.is_empty() {
        let (q, map, k) = p.quotient_lineality()?;
        let Some(inner) = find_certificate_with(&q, entry_budget, dir_budget, opts)? else {
            return Ok(None);
        };
        let inv = map.inverse();
        let lifted_l: Vec<IVec> = inner
            .subspace
            .basis()
            .iter()
            .map(|b| {
                let mut padded = b.clone();
                padded.resize(n, Int::zero());
                inv.apply_vec_int(&padded)
            })
            .collect();
        let l = Subspace::from_int_generators(n, &lifted_l);
        // Lift the face: F' x R^{n-k} mapped back, then locate it among the
        // faces of P through its tight inequalities.
        let fv = inner.face_polyhedron.vrep();
        let embed_q = |pt: &QVec| -> QVec {
            let mut x = pt.clone();
            x.resize(n, Rat::zero());
            x
        };
        let embed_i = |v: &IVec| -> QVec { embed_q(&ivec_to_qvec(v)) };
        let mut lins: Vec<QVec> = fv.lineality.iter().map(&embed_i).collect();
        for j in k..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            lins.push(e);
        }
        let lifted_face_poly = QPolyhedron::from_generators(
            n,
            fv.points.iter().map(embed_q).collect(),
            fv.rays.iter().map(embed_i).collect(),
            lins,
        )
        .apply_unimodular(&inv);
        let tight = p.tight_inequalities_on(&lifted_face_poly);
        let face = FaceDescriptor { tight };
        let cert = verify_certificate(p, &face, &l, entry_budget, dir_budget)?;
        return Ok(Some(cert.expect("lifted certificate re-verifies")));
    }

    let faces = p.all_faces(opts.min_face_dim)?;
    if faces.is_empty() {
        return Ok(None);
    }
    let lin = Subspace::zero(n);
    let max_dim = opts.max_subspace_dim.unwrap_or(n).min(n);
    for d in 1..=max_dim {
        for l in candidate_subspaces(n, entry_budget, d, &lin) {
            for face in &faces {
                let scan = scan_faces_lattice_free(p, &face.descriptor, &l)?;
                if !scan.all_free {
                    continue;
                }
                let search = search_containing_split(&face.polyhedron, &l, dir_budget)?;
                if !search.holds() {
                    continue;
                }
                let face_dim = face.polyhedron.dim().unwrap_or(0);
                return Ok(Some(Certificate {
                    face: face.descriptor.clone(),
                    face_polyhedron: face.polyhedron.clone(),
                    face_dim,
                    subspace: l,
                    evidence: scan.evidence,
                    split_search: search,
                    entry_budget,
                    dir_budget,
                }));
            }
        }
    }
    Ok(None)
}

/// Searches for a one-dimensional direction `v ∉ lin P` with `P + <v>`
/// relatively lattice-free: the reverse Chvátal-Gomory rank counterpart of
/// the certificate search.
pub fn find_cg_certificate(p: &QPolyhedron, entry_budget: u32) -> Result<Option<Subspace>> {
    if p.is_empty() {
        return Err(Error::EmptyPolyhedron("reverse CG certificate search"));
    }
    if !is_integral(p)? {
        return Err(Error::NotIntegral);
    }
    let n = p.ambient();
    let lin = Subspace::from_int_generators(n, &p.vrep().lineality);
    for v in canonical_directions(n, entry_budget) {
        if lin.contains_int_vec(&v) {
            continue;
        }
        let sum = p.add_subspace(core::slice::from_ref(&v));
        if is_relatively_lattice_free(&sum)?.0 {
            return Ok(Some(Subspace::line(n, &v)));
        }
    }
    Ok(None)
}

/// `clconv(F, xbar ± lambda v)` over the given integer directions: the
/// symmetric spike relaxation used by the growth experiments.
pub fn spike_hull(
    face: &QPolyhedron,
    xbar: &[Rat],
    basis: &[IVec],
    lambda: &Rat,
) -> Result<QPolyhedron> {
    if lambda.is_negative() {
        return Err(Error::InvalidParameter(alloc::format!(
            "spike hull needs lambda >= 0, got {}",
            lambda
        )));
    }
    if !face.relint_contains(xbar) {
        return Err(Error::NotInRelativeInterior);
    }
    let v = face.vrep();
    let mut points = v.points.clone();
    for b in basis {
        for sign in [Int::one(), -Int::one()] {
            let spike: QVec = xbar
                .iter()
                .zip(b)
                .map(|(xi, bi)| xi + lambda * int_to_rat(&(&sign * bi)))
                .collect();
            points.push(spike);
        }
    }
    Ok(QPolyhedron::from_generators(
        face.ambient(),
        points,
        v.rays.iter().map(|r| ivec_to_qvec(r)).collect(),
        v.lineality.iter().map(|l| ivec_to_qvec(l)).collect(),
    ))
}

/// Result of the full-dimensional inflation `conv(P, xbar + eps b_j)`.
#[derive(Clone, Debug)]
pub struct Inflation {
    pub polyhedron: QPolyhedron,
    /// Whether the integer point set was preserved (checked by enumeration
    /// when bounded; `None` otherwise).
    pub integer_points_preserved: Option<bool>,
}

/// Grows a non-full-dimensional polyhedron to full dimension by adding the
/// points `xbar + eps b_j` over a basis of the orthogonal complement of the
/// affine hull direction space.
pub fn inflate_full_dim(
    p: &QPolyhedron,
    xbar: &[Rat],
    basis: &[QVec],
    eps: &Rat,
) -> Result<Inflation> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameter(alloc::format!(
            "inflation needs eps > 0, got {}",
            eps
        )));
    }
    if !p.relint_contains(xbar) {
        return Err(Error::NotInRelativeInterior);
    }
    let n = p.ambient();
    let (eqs, _) = p.affine_hull()?;
    let normal_span =
        Subspace::from_int_generators(n, &eqs.iter().map(|c| c.normal.clone()).collect::<Vec<_>>());
    let basis_span = Subspace::from_rational_generators(n, basis);
    if basis_span != normal_span {
        return Err(Error::BadComplementBasis);
    }
    let v = p.vrep();
    let mut points = v.points.clone();
    for b in basis {
        let spike: QVec = xbar.iter().zip(b).map(|(xi, bi)| xi + eps * bi).collect();
        points.push(spike);
    }
    let inflated = QPolyhedron::from_generators(
        n,
        points,
        v.rays.iter().map(|r| ivec_to_qvec(r)).collect(),
        v.lineality.iter().map(|l| ivec_to_qvec(l)).collect(),
    );
    let preserved = if p.is_bounded() && inflated.is_bounded() {
        Some(enumerate_integer_points(&inflated)? == enumerate_integer_points(p)?)
    } else {
        None
    };
    Ok(Inflation {
        polyhedron: inflated,
        integer_points_preserved: preserved,
    })
}

/// Verdict of the mixed-integer infinite-rank test for one inequality.
#[derive(Clone, Debug)]
pub struct MixedRankCheck {
    /// True when a qualifying face was found. The split-containment part of
    /// "qualifying" is budget-relative; a `false` answer is definitive
    /// because every meeting face was refuted by an explicit split.
    pub infinite: bool,
    /// The qualifying face of the projected tight slice, in the integer
    /// coordinates.
    pub qualifying_face: Option<Face>,
    pub faces_checked: usize,
    pub dir_budget: u32,
}

/// Tests whether the valid inequality `c . x <= delta` for the mixed-integer
/// hull of `Q` (first `k` coordinates integer) has infinite split rank:
/// some face `M` of the projected tight slice must meet the projection of
/// the strict side of the inequality while `relint M` avoids the interior
/// of every split of the integer coordinates.
pub fn mixed_infinite_rank_check(
    q: &QPolyhedron,
    k: usize,
    c: &[Rat],
    delta: &Rat,
    dir_budget: u32,
) -> Result<MixedRankCheck> {
    let n = q.ambient();
    assert_eq!(c.len(), n, "inequality dimension mismatch");
    let q_i = mixed_integer_hull(q, k)?;
    if q_i.is_empty() {
        return Err(Error::EmptyPolyhedron("mixed-integer hull"));
    }
    let vi = q_i.vrep();
    let valid = vi.points.iter().all(|p| dot_qq(c, p) <= *delta)
        && vi.rays.iter().all(|r| !dot_iq(r, c).is_positive())
        && vi.lineality.iter().all(|l| dot_iq(l, c).is_zero());
    if !valid {
        return Err(Error::InvalidInequality);
    }

    let tight = Constraint::from_rational(c, delta).ok_or(Error::InvalidInequality)?;
    let flipped = Constraint::new(
        tight.normal.iter().map(|x| -x.clone()).collect(),
        -tight.rhs.clone(),
    );
    let slice = q_i.intersect_constraints(vec![tight], Vec::new());
    if slice.is_empty() {
        return Ok(MixedRankCheck {
            infinite: false,
            qualifying_face: None,
            faces_checked: 0,
            dir_budget,
        });
    }
    let dropped: Vec<usize> = (k..n).collect();
    let projected_slice = slice.project_out(&dropped);

    // Q restricted to c.x >= delta; a face meets the strict region exactly
    // when the supremum of c.x over its lifted fiber exceeds delta.
    let ge_side = q.intersect_constraints(Vec::new(), vec![flipped]);
    let zero_l = Subspace::zero(k);
    let mut checked = 0usize;
    for m in projected_slice.all_faces(0)? {
        checked += 1;
        let mh = m.polyhedron.hrep().clone();
        let pad = |cst: &Constraint| -> Constraint {
            let mut normal = cst.normal.clone();
            normal.resize(n, Int::zero());
            Constraint::new(normal, cst.rhs.clone())
        };
        let region = ge_side.intersect_constraints(
            mh.equalities.iter().map(pad).collect(),
            mh.inequalities.iter().map(pad).collect(),
        );
        if region.is_empty() {
            continue;
        }
        let rv = region.vrep();
        let unbounded_up = rv.rays.iter().any(|r| dot_iq(r, c).is_positive())
            || rv.lineality.iter().any(|l| !dot_iq(l, c).is_zero());
        let meets = unbounded_up || rv.points.iter().any(|p| dot_qq(c, p) > *delta);
        if !meets {
            continue;
        }
        let search = search_containing_split(&m.polyhedron, &zero_l, dir_budget)?;
        if search.holds() {
            return Ok(MixedRankCheck {
                infinite: true,
                qualifying_face: Some(m),
                faces_checked: checked,
                dir_budget,
            });
        }
    }
    Ok(MixedRankCheck {
        infinite: false,
        qualifying_face: None,
        faces_checked: checked,
        dir_budget,
    })
}

/// A mixed-integer instance built from a reverse-rank certificate.
#[derive(Clone, Debug)]
pub struct MixedInstance {
    /// The relaxation in `R^n`; coordinates `1..=k` are integer.
    pub q: QPolyhedron,
    pub k: usize,
    /// The projected integral polyhedron (the mixed-integer hull of `q`).
    pub projected: QPolyhedron,
    /// Projection of the chosen relative-interior point.
    pub apex_base: QVec,
}

/// Builds the mixed-integer relaxation `clconv(proj(P), x~ + e_{k+1}, ...,
/// x~ + e_n)` from a certificate pair `(F, L)` of `P`, after a unimodular
/// change of coordinates making `L` the span of the trailing coordinates.
///
/// `xbar` defaults to the canonical relative-interior point of the face.
pub fn mixed_instance_from_certificate(
    p: &QPolyhedron,
    face: &QPolyhedron,
    l: &Subspace,
    xbar: Option<&[Rat]>,
) -> Result<MixedInstance> {
    let n = p.ambient();
    if l.is_zero() {
        return Err(Error::InvalidParameter(alloc::string::String::from(
            "certificate subspace must be nonzero",
        )));
    }
    let lin = Subspace::from_int_generators(n, &p.vrep().lineality);
    if l.is_subspace_of(&lin) {
        return Err(Error::InvalidParameter(alloc::string::String::from(
            "certificate subspace lies in the lineality space",
        )));
    }
    let default_xbar;
    let xbar = match xbar {
        Some(x) => x,
        None => {
            default_xbar = face.relint_point()?;
            &default_xbar
        }
    };
    if !face.relint_contains(xbar) {
        return Err(Error::NotInRelativeInterior);
    }
    let d = l.dim();
    let k = n - d;
    let map = unimodular_to_trailing(n, l.basis())?;
    let moved = p.apply_unimodular(&map);
    let moved_xbar = map.apply_point(xbar);
    let dropped: Vec<usize> = (k..n).collect();
    let projected = moved.project_out(&dropped);
    let apex_base: QVec = moved_xbar[..k].to_vec();

    let pv = projected.vrep();
    let embed_q = |v: &QVec| -> QVec {
        let mut x = v.clone();
        x.resize(n, Rat::zero());
        x
    };
    let embed_i = |v: &IVec| -> QVec { embed_q(&ivec_to_qvec(v)) };
    let mut points: Vec<QVec> = pv.points.iter().map(&embed_q).collect();
    for j in k..n {
        let mut apex = embed_q(&apex_base);
        apex[j] += Rat::one();
        points.push(apex);
    }
    let q = QPolyhedron::from_generators(
        n,
        points,
        pv.rays.iter().map(&embed_i).collect(),
        pv.lineality.iter().map(embed_i).collect(),
    );
    Ok(MixedInstance {
        q,
        k,
        projected,
        apex_base,
    })
}

/// Certified rational lower bound for the survival coefficient
/// `min(lambda - 1, lambda r / (2 (r + R)))` of the two spike points that
/// every split cut must keep.
///
/// `r` is the inradius of the face around `xbar` (within its affine hull)
/// and `R` the generator radius `max(max |xbar - g|, max 2 |h|)` over the
/// face's integer generator points `g` and recession generators `h`. Both
/// radii are square roots of rationals, so the bound brackets them with
/// certified rational approximations, rounded so the result never exceeds
/// the true coefficient. Membership tests against the returned coefficient
/// stay fully exact.
pub fn survival_coefficient_lower_bound(
    face: &QPolyhedron,
    xbar: &[Rat],
    lambda: &Rat,
) -> Result<Rat> {
    use crate::rat::{norm_sq, sqrt_bounds};
    if !face.relint_contains(xbar) {
        return Err(Error::NotInRelativeInterior);
    }
    let prec = 24u32;
    // Inradius within the affine hull: min over facets of the distance from
    // xbar to the facet hyperplane, measured along the component of the
    // facet normal parallel to the hull.
    let h = face.hrep();
    let eq_normals: Vec<IVec> = h.equalities.iter().map(|c| c.normal.clone()).collect();
    let mut r_sq: Option<Rat> = None;
    for c in &h.inequalities {
        let aq = ivec_to_qvec(&c.normal);
        let within = crate::linalg::reduce_mod_span(&eq_normals, &aq);
        let denom = dot_qq(&within, &within);
        debug_assert!(denom.is_positive(), "facet normal inside equality span");
        let slack = c.rhs.clone() - c.eval(xbar);
        let d_sq = &slack * &slack / denom;
        if r_sq.as_ref().is_none_or(|cur| d_sq < *cur) {
            r_sq = Some(d_sq);
        }
    }
    let Some(r_sq) = r_sq else {
        return Err(Error::InvalidParameter(alloc::string::String::from(
            "face is an affine subspace",
        )));
    };
    let v = face.vrep();
    let mut radius_sq = Rat::zero();
    for g in &v.points {
        let diff: QVec = g.iter().zip(xbar).map(|(gi, xi)| gi - xi).collect();
        let d = norm_sq(&diff);
        if d > radius_sq {
            radius_sq = d;
        }
    }
    for hgen in v.rays.iter().chain(&v.lineality) {
        let d = norm_sq(&ivec_to_qvec(hgen)) * crate::rat::rat(4, 1);
        if d > radius_sq {
            radius_sq = d;
        }
    }
    let (r_lo, _) = sqrt_bounds(&r_sq, prec);
    let (_, big_hi) = sqrt_bounds(&radius_sq, prec);
    debug_assert!(r_lo.is_positive());
    let ratio = lambda.clone() * r_lo.clone() / ((r_lo + big_hi) * crate::rat::rat(2, 1));
    let linear = lambda.clone() - Rat::one();
    Ok(if linear < ratio { linear } else { ratio })
}

/// The two spike points `xbar ± coeff * v` for one spike direction.
pub fn survival_points(xbar: &[Rat], coeff: &Rat, v: &IVec) -> (QVec, QVec) {
    let plus: QVec = xbar
        .iter()
        .zip(v)
        .map(|(xi, vi)| xi + coeff * int_to_rat(vi))
        .collect();
    let minus: QVec = xbar
        .iter()
        .zip(v)
        .map(|(xi, vi)| xi - coeff * int_to_rat(vi))
        .collect();
    (plus, minus)
}
