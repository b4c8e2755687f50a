//! Built-in regression instances.
//!
//! These are code-defined constants rather than data files so the tests and
//! the CLI cannot drift apart on coordinates.

use alloc::vec;
use alloc::vec::Vec;

use crate::polyhedron::QPolyhedron;
use crate::rat::{qvec, rat, Rat};

/// `conv{(0,0,0), (2,0,0), (0,2,0)}`: the flat triangle whose relaxations
/// can have arbitrarily high split rank.
pub fn triangle3d() -> QPolyhedron {
    QPolyhedron::from_generators(
        3,
        vec![qvec(&[0, 0, 0]), qvec(&[2, 0, 0]), qvec(&[0, 2, 0])],
        Vec::new(),
        Vec::new(),
    )
}

/// The five-vertex polytope `conv{(0,0,0),(2,0,0),(0,2,0),(1,1,1),(1,1,-1)}`
/// whose vertical relaxations keep finite mixed split rank.
pub fn sec7_polytope() -> QPolyhedron {
    QPolyhedron::from_generators(
        3,
        vec![
            qvec(&[0, 0, 0]),
            qvec(&[2, 0, 0]),
            qvec(&[0, 2, 0]),
            qvec(&[1, 1, 1]),
            qvec(&[1, 1, -1]),
        ],
        Vec::new(),
        Vec::new(),
    )
}

/// `conv{0, e1, e2}` in `R^4`: infinite reverse split rank, but only through
/// a two-dimensional certificate subspace.
pub fn sec81_triangle4d() -> QPolyhedron {
    QPolyhedron::from_generators(
        4,
        vec![
            qvec(&[0, 0, 0, 0]),
            qvec(&[1, 0, 0, 0]),
            qvec(&[0, 1, 0, 0]),
        ],
        Vec::new(),
        Vec::new(),
    )
}

/// `conv{(0,0,0,0),(1,0,0,0),(1,2,0,0),(1,0,2,0)}`: certificates exist only
/// on a proper face.
pub fn sec82_polytope4d() -> QPolyhedron {
    QPolyhedron::from_generators(
        4,
        vec![
            qvec(&[0, 0, 0, 0]),
            qvec(&[1, 0, 0, 0]),
            qvec(&[1, 2, 0, 0]),
            qvec(&[1, 0, 2, 0]),
        ],
        Vec::new(),
        Vec::new(),
    )
}

/// The unit square `[0,1]^2`.
pub fn unit_square() -> QPolyhedron {
    QPolyhedron::from_generators(
        2,
        vec![qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])],
        Vec::new(),
        Vec::new(),
    )
}

/// `conv{(0,0),(0,1)}`: finite reverse split rank but infinite reverse CG
/// rank.
pub fn zero_one_segment() -> QPolyhedron {
    QPolyhedron::from_generators(
        2,
        vec![qvec(&[0, 0]), qvec(&[0, 1])],
        Vec::new(),
        Vec::new(),
    )
}

/// The pyramid `conv(triangle3d, (1/2, 1/2, t))`, a relaxation of the
/// triangle for every `t >= 0`.
pub fn qt_pyramid(t: &Rat) -> crate::Result<QPolyhedron> {
    use num_traits::Signed;
    if t.is_negative() {
        return Err(crate::Error::InvalidParameter(alloc::format!(
            "qt pyramid needs t >= 0, got {}",
            t
        )));
    }
    Ok(QPolyhedron::from_generators(
        3,
        vec![
            qvec(&[0, 0, 0]),
            qvec(&[2, 0, 0]),
            qvec(&[0, 2, 0]),
            vec![rat(1, 2), rat(1, 2), t.clone()],
        ],
        Vec::new(),
        Vec::new(),
    ))
}

/// Names and constructors of all built-in instances.
pub fn builtin(name: &str) -> Option<QPolyhedron> {
    match name {
        "triangle3d" => Some(triangle3d()),
        "sec7-polytope" => Some(sec7_polytope()),
        "sec81-triangle4d" => Some(sec81_triangle4d()),
        "sec82-polytope4d" => Some(sec82_polytope4d()),
        "unit-square" => Some(unit_square()),
        "zero-one-segment" => Some(zero_one_segment()),
        _ => None,
    }
}

/// The list of built-in instance names, for `examples` listings.
pub const BUILTIN_NAMES: &[&str] = &[
    "triangle3d",
    "sec7-polytope",
    "sec81-triangle4d",
    "sec82-polytope4d",
    "unit-square",
    "zero-one-segment",
];
