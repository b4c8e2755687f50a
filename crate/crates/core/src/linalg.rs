//! Integer and rational linear algebra.
//!
//! The work horses are the Hermite normal form with an accumulated
//! unimodular transform, unimodular basis extensions, and Diophantine linear
//! systems. Dimensions are desk scale (soft limit `n <= 8`), so everything
//! favours clarity and exactness over asymptotics: plain column reduction,
//! no LLL, fraction-free only where it falls out naturally.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{IVec, Int, QVec, Rat};
use crate::{Error, Result};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: &[IVec]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        IMat {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors; `rows` is the
    /// ambient dimension (needed when the column list is empty).
    pub fn from_cols(rows: usize, cols: &[IVec]) -> Self {
        let mut m = IMat::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> IVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn cols_vec(&self) -> Vec<IVec> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> IMat {
        let mut t = IMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_ivec(&self, v: &[Int]) -> IVec {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows).map(|i| dot_ii(self.row(i), v)).collect()
    }

    pub fn mul_qvec(&self, v: &[Rat]) -> QVec {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows).map(|i| dot_iq(self.row(i), v)).collect()
    }
}

/// Exact integer dot product.
pub fn dot_ii(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of an integer and a rational vector.
pub fn dot_iq(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// Exact rational dot product.
pub fn dot_qq(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// Greatest common divisor of the absolute entry values; zero for the zero
/// vector.
pub fn gcd_vec(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides out the entry gcd, preserving direction.
pub fn primitive(v: &[Int]) -> Result<IVec> {
    let g = gcd_vec(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Flips the sign so the first nonzero entry is positive.
pub fn canonical_sign(mut v: IVec) -> IVec {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -core::mem::take(x);
            }
        }
    }
    v
}

/// Scales a rational vector by the least common denominator, returning the
/// integer vector and the (positive) scale factor applied.
pub fn scale_to_integer(v: &[Rat]) -> (IVec, Int) {
    let lcm = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled = v
        .iter()
        .map(|x| (x * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    (scaled, lcm)
}

/// Primitive integer vector parallel to a nonzero rational vector,
/// preserving direction.
pub fn primitive_of_rational(v: &[Rat]) -> Result<IVec> {
    let (scaled, _) = scale_to_integer(v);
    primitive(&scaled)
}

/// Canonical total order on integer directions: graded by the L1 norm, ties
/// broken colexicographically (compare reversed entry sequences). Under this
/// order the unit vectors come first, in coordinate order.
pub fn direction_cmp(a: &[Int], b: &[Int]) -> Ordering {
    let l1 = |v: &[Int]| -> Int { v.iter().map(|x| x.abs()).sum() };
    l1(a)
        .cmp(&l1(b))
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// All primitive integer vectors with infinity norm at most `bound`, in
/// canonical sign form, sorted by [`direction_cmp`]. Exactly one of `v` and
/// `-v` appears for each direction.
pub fn canonical_directions(dim: usize, bound: u32) -> Vec<IVec> {
    let mut out = Vec::new();
    if dim == 0 || bound == 0 {
        return out;
    }
    let b = bound as i64;
    let mut entries = vec![-b; dim];
    'outer: loop {
        let v: IVec = entries.iter().map(|&e| Int::from(e)).collect();
        let nonzero = v.iter().position(|x| !x.is_zero());
        if let Some(first) = nonzero {
            if v[first].is_positive() && gcd_vec(&v).is_one() {
                out.push(v);
            }
        }
        for i in (0..dim).rev() {
            if entries[i] < b {
                entries[i] += 1;
                continue 'outer;
            }
            entries[i] = -b;
        }
        break;
    }
    out.sort_by(|a, b| direction_cmp(a, b));
    out
}

/// Column-style Hermite normal form `H = M * U` with `U` unimodular.
///
/// `H` is in column echelon form: pivot rows strictly increase with the
/// column index, pivots are positive, entries above a pivot are zero, and
/// entries to the left of a pivot (same row, earlier columns) are reduced to
/// `[0, pivot)`. Zero columns are trailing. The form is unique, so it doubles
/// as a canonical representative for column lattices.
#[derive(Debug, Clone)]
pub struct ColumnHnf {
    /// The normal form, as a matrix.
    pub h: IMat,
    /// The accumulated unimodular column transform.
    pub u: IMat,
    /// `(row, col)` positions of the pivots, in row order.
    pub pivots: Vec<(usize, usize)>,
}

impl ColumnHnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns of `U` spanning the integer kernel lattice `{x : Mx = 0}`.
    pub fn kernel_basis(&self) -> Vec<IVec> {
        (self.rank()..self.u.n_cols())
            .map(|j| self.u.col(j))
            .collect()
    }
}

/// Computes the column-style Hermite normal form of `m`.
pub fn column_hnf(m: &IMat) -> ColumnHnf {
    let rows = m.n_rows();
    let n = m.n_cols();
    let mut h = m.cols_vec();
    let mut u = IMat::identity(n).cols_vec();
    let mut pivots = Vec::new();
    let mut next = 0usize; // next pivot column position

    for row in 0..rows {
        if next == n {
            break;
        }
        // Reduce columns next..n at this row down to a single nonzero entry
        // by repeated division steps on the column with the smallest
        // nonzero absolute value.
        loop {
            let mut best: Option<usize> = None;
            for j in next..n {
                if h[j][row].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(k) => {
                        if h[j][row].abs() < h[k][row].abs() {
                            best = Some(j);
                        }
                    }
                }
            }
            let Some(j) = best else { break };
            let mut others = false;
            for j2 in next..n {
                if j2 == j || h[j2][row].is_zero() {
                    continue;
                }
                others = true;
                let q = &h[j2][row] / &h[j][row];
                if !q.is_zero() {
                    col_sub_mul(&mut h, j2, j, &q);
                    col_sub_mul(&mut u, j2, j, &q);
                }
            }
            if !others {
                // Single nonzero entry left; install it as the pivot.
                h.swap(next, j);
                u.swap(next, j);
                if h[next][row].is_negative() {
                    col_negate(&mut h, next);
                    col_negate(&mut u, next);
                }
                // Reduce earlier pivot columns at this row to [0, pivot).
                for j2 in 0..next {
                    let q = h[j2][row].div_floor(&h[next][row]);
                    if !q.is_zero() {
                        col_sub_mul(&mut h, j2, next, &q);
                        col_sub_mul(&mut u, j2, next, &q);
                    }
                }
                pivots.push((row, next));
                next += 1;
                break;
            }
        }
    }

    ColumnHnf {
        h: IMat::from_cols(rows, &h),
        u: IMat::from_cols(n, &u),
        pivots,
    }
}

fn col_sub_mul(cols: &mut [IVec], target: usize, source: usize, q: &Int) {
    // cols[target] -= q * cols[source], with disjoint borrows.
    let (a, b) = if target < source {
        let (lo, hi) = cols.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = cols.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (t, s) in a.iter_mut().zip(b.iter()) {
        *t -= q * s;
    }
}

fn col_negate(cols: &mut [IVec], j: usize) {
    for x in cols[j].iter_mut() {
        *x = -core::mem::take(x);
    }
}

/// Row-style Hermite normal form `H = U * M` with `U` unimodular, obtained
/// by transposing the column-style computation.
pub struct RowHnf {
    pub h: IMat,
    pub u: IMat,
    pub pivots: Vec<(usize, usize)>,
}

pub fn row_hnf(m: &IMat) -> RowHnf {
    let t = column_hnf(&m.transpose());
    RowHnf {
        h: t.h.transpose(),
        u: t.u.transpose(),
        pivots: t.pivots.iter().map(|&(r, c)| (c, r)).collect(),
    }
}

/// An integer-affine bijection of `Z^n`: `x -> U x + v` with `|det U| = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularMap {
    fwd: IMat,
    inv: IMat,
    shift: IVec,
}

impl UnimodularMap {
    /// Builds the map, computing and validating the integer inverse.
    pub fn new(fwd: IMat, shift: IVec) -> Result<Self> {
        assert_eq!(fwd.n_rows(), fwd.n_cols(), "square matrix required");
        assert_eq!(fwd.n_rows(), shift.len(), "shift length mismatch");
        let inv = int_inverse(&fwd).ok_or(Error::NotDirectSummand)?;
        Ok(UnimodularMap { fwd, inv, shift })
    }

    pub fn identity(n: usize) -> Self {
        UnimodularMap {
            fwd: IMat::identity(n),
            inv: IMat::identity(n),
            shift: vec![Int::zero(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.fwd.n_rows()
    }

    pub fn is_identity(&self) -> bool {
        self.fwd == IMat::identity(self.dim()) && self.shift.iter().all(Int::is_zero)
    }

    pub fn matrix(&self) -> &IMat {
        &self.fwd
    }

    pub fn shift(&self) -> &[Int] {
        &self.shift
    }

    /// The inverse map, again unimodular.
    pub fn inverse(&self) -> UnimodularMap {
        let neg_shift: IVec = self
            .inv
            .mul_ivec(&self.shift)
            .into_iter()
            .map(|x| -x)
            .collect();
        UnimodularMap {
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
            shift: neg_shift,
        }
    }

    /// `self . other`: applies `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let fwd = self.fwd.mul(&other.fwd);
        let inv = other.inv.mul(&self.inv);
        let mut shift = self.fwd.mul_ivec(&other.shift);
        for (s, t) in shift.iter_mut().zip(self.shift.iter()) {
            *s += t;
        }
        UnimodularMap { fwd, inv, shift }
    }

    pub fn apply_point(&self, x: &[Rat]) -> QVec {
        let mut y = self.fwd.mul_qvec(x);
        for (yi, s) in y.iter_mut().zip(self.shift.iter()) {
            *yi += Rat::from_integer(s.clone());
        }
        y
    }

    /// Applies the linear part only (directions are translation free).
    pub fn apply_vec_int(&self, v: &[Int]) -> IVec {
        self.fwd.mul_ivec(v)
    }

    pub fn apply_vec_rat(&self, v: &[Rat]) -> QVec {
        self.fwd.mul_qvec(v)
    }
}

/// Exact inverse of an integer matrix when it exists over the integers
/// (i.e. when `|det| = 1`); `None` otherwise.
pub fn int_inverse(m: &IMat) -> Option<IMat> {
    let n = m.n_rows();
    assert_eq!(n, m.n_cols());
    // Rational Gauss-Jordan on [M | I].
    let mut a: Vec<QVec> = (0..n)
        .map(|i| {
            let mut row: QVec = m
                .row(i)
                .iter()
                .map(|x| Rat::from_integer(x.clone()))
                .collect();
            for j in 0..n {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    let mut inv = IMat::zero(n, n);
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            let v = &a[i][n + j];
            if !v.denom().is_one() {
                return None;
            }
            inv.set(i, j, v.to_integer());
        }
    }
    Some(inv)
}

/// In-place reduced row echelon form over the rationals. Returns the pivot
/// column indices; zero rows are removed. The result is the canonical basis
/// of the row space.
pub fn rref(rows: &mut Vec<QVec>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                #[allow(clippy::needless_range_loop)]
                for j in 0..ncols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Solves `sum_j w_j * cols[j] = b` over the rationals. Returns one solution
/// (free variables zero), or `None` if inconsistent.
pub fn solve_linear_combination(cols: &[QVec], b: &[Rat]) -> Option<QVec> {
    let n = b.len();
    let k = cols.len();
    let mut aug: Vec<QVec> = (0..n)
        .map(|i| {
            let mut row: QVec = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut w = vec![Rat::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        w[c] = aug[r][k].clone();
    }
    Some(w)
}

/// Unimodular map sending the span of the given lattice basis onto the
/// trailing `basis.len()` coordinates. When the basis already is the
/// trailing unit block the identity is returned, so instances stated in
/// "lineality last" form keep their coordinates.
pub fn unimodular_to_trailing(n: usize, basis: &[IVec]) -> Result<UnimodularMap> {
    let d = basis.len();
    let is_trailing = basis.iter().enumerate().all(|(j, v)| {
        v.iter().enumerate().all(|(i, x)| {
            if i == n - d + j {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    });
    if is_trailing {
        return Ok(UnimodularMap::identity(n));
    }
    let u = extend_to_unimodular(n, basis)?;
    let mut rev = IMat::zero(n, n);
    for i in 0..n {
        rev.set(i, n - 1 - i, Int::one());
    }
    Ok(UnimodularMap::new(rev, vec![Int::zero(); n])?.compose(&u))
}

/// A solved linear Diophantine system `A x = b`.
#[derive(Debug, Clone)]
pub struct DiophantineSolution {
    /// One integer solution.
    pub particular: IVec,
    /// Lattice basis of the integer kernel `{x in Z^n : A x = 0}`; the full
    /// solution set is `particular + Z-combinations of the basis`.
    pub kernel: Vec<IVec>,
}

/// Solves `A x = b` over the integers. `Ok(None)` means infeasible.
pub fn solve_diophantine(a: &IMat, b: &IVec) -> Option<DiophantineSolution> {
    assert_eq!(a.n_rows(), b.len(), "rhs length mismatch");
    let hnf = column_hnf(a);
    let n = a.n_cols();
    let mut y = vec![Int::zero(); n];
    let mut pivot_iter = hnf.pivots.iter().peekable();
    #[allow(clippy::needless_range_loop)]
    for row in 0..a.n_rows() {
        // residual = b_row - sum_{determined pivot cols} H[row][col] * y[col]
        let mut residual = b[row].clone();
        for &(pr, pc) in hnf.pivots.iter() {
            if pr < row && !hnf.h.get(row, pc).is_zero() {
                residual -= hnf.h.get(row, pc) * &y[pc];
            }
        }
        match pivot_iter.peek() {
            Some(&&(pr, pc)) if pr == row => {
                pivot_iter.next();
                let p = hnf.h.get(row, pc);
                let (q, r) = residual.div_rem(p);
                if !r.is_zero() {
                    return None;
                }
                y[pc] = q;
            }
            _ => {
                if !residual.is_zero() {
                    return None;
                }
            }
        }
    }
    let particular = hnf.u.mul_ivec(&y);
    Some(DiophantineSolution {
        particular,
        kernel: hnf.kernel_basis(),
    })
}

/// Orthogonal projection of `v` onto the rational span of integer vectors.
pub fn project_onto_span(basis: &[IVec], v: &[Rat]) -> QVec {
    if basis.is_empty() {
        return vec![Rat::zero(); v.len()];
    }
    // Solve the Gram system (B^T B) w = B^T v and return B w.
    let gram_cols: Vec<QVec> = basis
        .iter()
        .map(|bj| {
            basis
                .iter()
                .map(|bi| Rat::from_integer(dot_ii(bi, bj)))
                .collect()
        })
        .collect();
    let rhs: QVec = basis.iter().map(|bi| dot_iq(bi, v)).collect();
    let w = solve_linear_combination(&gram_cols, &rhs).expect("Gram system is invertible");
    let mut out = vec![Rat::zero(); v.len()];
    for (wj, bj) in w.iter().zip(basis) {
        for (oi, bji) in out.iter_mut().zip(bj) {
            *oi += wj * Rat::from_integer(bji.clone());
        }
    }
    out
}

/// Component of `v` orthogonal to the span of the basis vectors.
pub fn reduce_mod_span(basis: &[IVec], v: &[Rat]) -> QVec {
    let proj = project_onto_span(basis, v);
    v.iter().zip(proj).map(|(vi, pi)| vi - pi).collect()
}

/// Exact squared Euclidean distance from `v` to the span of the basis.
pub fn dist_sq_to_span(basis: &[IVec], v: &[Rat]) -> Rat {
    let r = reduce_mod_span(basis, v);
    dot_qq(&r, &r)
}

/// Canonical lattice basis of `span(vecs) ∩ Z^n`.
///
/// The input generators may be dependent or non-saturated; the output is the
/// column-style Hermite normal form basis of the saturated lattice, so equal
/// spans produce identical bases.
pub fn saturated_basis(n: usize, vecs: &[IVec]) -> Vec<IVec> {
    if vecs.iter().all(|v| v.iter().all(Int::is_zero)) {
        return Vec::new();
    }
    // Integer system A x = 0 whose rational solution set is exactly the
    // span: rows of A form a basis of the orthogonal complement.
    let mut span_rows: Vec<QVec> = vecs
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let pivots = rref(&mut span_rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut a_rows: Vec<IVec> = Vec::new();
    for &f in &free {
        // Standard null-space vector of the echelon rows: x_f = 1 and back
        // substitution on the pivots. These vectors span the orthogonal
        // complement, so `A x = 0` characterizes exactly the span.
        let mut x = vec![Rat::zero(); n];
        x[f] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = -span_rows[r][f].clone();
        }
        a_rows.push(primitive_of_rational(&x).expect("nonzero null vector"));
    }
    if a_rows.is_empty() {
        // Full span: the standard basis is already canonical.
        return IMat::identity(n).cols_vec();
    }
    let a = IMat::from_rows(&a_rows);
    let sol = solve_diophantine(&a, &vec![Int::zero(); a_rows.len()]).expect("homogeneous");
    let basis = IMat::from_cols(n, &sol.kernel);
    let hnf = column_hnf(&basis);
    (0..hnf.rank()).map(|j| hnf.h.col(j)).collect()
}

/// Extends independent primitive columns `B` to a unimodular map sending
/// `span(B)` onto the first `k` coordinates and `Z^n` onto `Z^n`.
///
/// Fails with [`Error::NotDirectSummand`] when the columns do not form a
/// lattice basis of `span(B) ∩ Z^n` (non-unit invariant factors), and with
/// [`Error::DependentColumns`] when they are linearly dependent.
pub fn extend_to_unimodular(n: usize, b_cols: &[IVec]) -> Result<UnimodularMap> {
    let k = b_cols.len();
    let b = IMat::from_cols(n, b_cols);
    let r = row_hnf(&b);
    if r.pivots.len() < k {
        return Err(Error::DependentColumns);
    }
    // Row echelon of rank k on k columns: H = [T; 0]. Direct summand of Z^n
    // exactly when T is the identity.
    for i in 0..k {
        for j in 0..k {
            let expect = if i == j { Int::one() } else { Int::zero() };
            if *r.h.get(i, j) != expect {
                return Err(Error::NotDirectSummand);
            }
        }
    }
    UnimodularMap::new(r.u, vec![Int::zero(); n])
}
