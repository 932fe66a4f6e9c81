//! Standard polynomials of trace coordinates.
//!
//! For three generators u, v, w the two triple traces t_uvw and t_uwv are
//! the roots of X^2 - p*X + q with p, q polynomial in single and pair
//! traces; F = t_uvw^2 - p*t_uvw + q is the one defining relation of the
//! rank-3 trace ring, and p^2 - 4q its discriminant. The commuting-family
//! relations cut out characters of abelian groups.
//!
//! All constructors accept repeated generator indices: a repeated pair
//! trace t_uu means the reduced trace t_u^2 - 2, which is what makes the
//! degeneration identities (`2f = g` with a doubled index, `2g = h` with a
//! doubled index) hold verbatim.

use super::{Coef, Polynomial, TraceRing};
use std::sync::Arc;

fn int(n: i64) -> Coef {
    Coef::from_integer(n.into())
}

pub fn single_trace(ring: &Arc<TraceRing>, i: usize) -> Polynomial {
    Polynomial::var(ring, ring.single(i))
}

/// t_uv for distinct generators; t_u^2 - 2 when u = v.
pub fn pair_trace(ring: &Arc<TraceRing>, i: usize, j: usize) -> Polynomial {
    if i == j {
        let t = single_trace(ring, i);
        t.mul(&t).sub(&Polynomial::from_int(ring, 2))
    } else {
        Polynomial::var(ring, ring.pair(i, j))
    }
}

/// p = t_u*t_vw + t_v*t_uw + t_w*t_uv - t_u*t_v*t_w, the sum
/// t_uvw + t_uwv.
pub fn triple_trace_sum(ring: &Arc<TraceRing>, i: usize, j: usize, k: usize) -> Polynomial {
    let (ti, tj, tk) = (single_trace(ring, i), single_trace(ring, j), single_trace(ring, k));
    ti.mul(&pair_trace(ring, j, k))
        .add(&tj.mul(&pair_trace(ring, i, k)))
        .add(&tk.mul(&pair_trace(ring, i, j)))
        .sub(&ti.mul(&tj).mul(&tk))
}

/// q = t_u^2 + t_v^2 + t_w^2 + t_uv^2 + t_uw^2 + t_vw^2
///     + t_uv*t_uw*t_vw - t_u*t_v*t_uv - t_u*t_w*t_uw - t_v*t_w*t_vw - 4,
/// the product t_uvw * t_uwv.
pub fn triple_trace_product(
    ring: &Arc<TraceRing>,
    i: usize,
    j: usize,
    k: usize,
) -> Polynomial {
    let (ti, tj, tk) = (single_trace(ring, i), single_trace(ring, j), single_trace(ring, k));
    let (tij, tik, tjk) =
        (pair_trace(ring, i, j), pair_trace(ring, i, k), pair_trace(ring, j, k));
    ti.mul(&ti)
        .add(&tj.mul(&tj))
        .add(&tk.mul(&tk))
        .add(&tij.mul(&tij))
        .add(&tik.mul(&tik))
        .add(&tjk.mul(&tjk))
        .add(&tij.mul(&tik).mul(&tjk))
        .sub(&ti.mul(&tj).mul(&tij))
        .sub(&ti.mul(&tk).mul(&tik))
        .sub(&tj.mul(&tk).mul(&tjk))
        .sub(&Polynomial::from_int(ring, 4))
}

/// F = t_uvw^2 - p*t_uvw + q. Requires distinct indices (it names the
/// triple variable).
pub fn fundamental_relation(
    ring: &Arc<TraceRing>,
    i: usize,
    j: usize,
    k: usize,
) -> Polynomial {
    let t = Polynomial::var(ring, ring.triple(i, j, k));
    t.mul(&t)
        .sub(&triple_trace_sum(ring, i, j, k).mul(&t))
        .add(&triple_trace_product(ring, i, j, k))
}

/// The discriminant p^2 - 4q = (t_uvw - t_uwv)^2.
pub fn triple_discriminant(
    ring: &Arc<TraceRing>,
    i: usize,
    j: usize,
    k: usize,
) -> Polynomial {
    let p = triple_trace_sum(ring, i, j, k);
    let q = triple_trace_product(ring, i, j, k);
    p.mul(&p).sub(&q.scale(&int(4)))
}

/// 2*t_uvw - p: eliminates the triple trace where the two triple traces
/// coincide. Requires distinct indices.
pub fn triple_eliminator(ring: &Arc<TraceRing>, i: usize, j: usize, k: usize) -> Polynomial {
    Polynomial::var(ring, ring.triple(i, j, k))
        .scale(&int(2))
        .sub(&triple_trace_sum(ring, i, j, k))
}

/// f = t_u^2 + t_v^2 + t_uv^2 - t_u*t_v*t_uv - 4, the trace relation of a
/// commuting pair.
pub fn commuting_pair_relation(ring: &Arc<TraceRing>, i: usize, j: usize) -> Polynomial {
    let (ti, tj) = (single_trace(ring, i), single_trace(ring, j));
    let tij = pair_trace(ring, i, j);
    ti.mul(&ti)
        .add(&tj.mul(&tj))
        .add(&tij.mul(&tij))
        .sub(&ti.mul(&tj).mul(&tij))
        .sub(&Polynomial::from_int(ring, 4))
}

/// g = t_u*p(u,v,w) - 2*t_uv*t_uw - 4*t_vw + 2*t_v*t_w, the commuting
/// triple relation with distinguished first index.
pub fn commuting_triple_relation(
    ring: &Arc<TraceRing>,
    i: usize,
    j: usize,
    k: usize,
) -> Polynomial {
    let two = int(2);
    let four = int(4);
    single_trace(ring, i)
        .mul(&triple_trace_sum(ring, i, j, k))
        .sub(&pair_trace(ring, i, j).mul(&pair_trace(ring, i, k)).scale(&two))
        .sub(&pair_trace(ring, j, k).scale(&four))
        .add(&single_trace(ring, j).mul(&single_trace(ring, k)).scale(&two))
}

/// h = (2*t_uv - t_u*t_v)(2*t_wx - t_w*t_x)
///     - (2*t_uw - t_u*t_w)(2*t_vx - t_v*t_x), the commuting quadruple
/// relation.
pub fn commuting_quad_relation(
    ring: &Arc<TraceRing>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Polynomial {
    let z = |u: usize, v: usize| {
        pair_trace(ring, u, v)
            .scale(&int(2))
            .sub(&single_trace(ring, u).mul(&single_trace(ring, v)))
    };
    z(i, j).mul(&z(k, l)).sub(&z(i, k).mul(&z(j, l)))
}
