"""Isomorphisms of chain geometries from ring (anti)isomorphisms.

A ring isomorphism acts on points entrywise.  A ring antiisomorphism
reaches the target line through the dual: annihilator, then the entrywise
map on columns, then a quarter turn R'(a', b') -> R'(b', -a') that puts the
far point back onto the far point.  The closed word formula evaluates the
same composite as R'(1', 0') * E(t_n^phi) * ... * E(t_1^phi).

The catalogue of verified antiisomorphisms: the transpose on matrix2(q),
any automorphism of a commutative ring, and the diagonal flip
[[a,b],[0,d]] -> [[d,b],[0,a]] of upper-triangular2(q).
"""

from __future__ import annotations

from typing import Optional

from chaingeom.rings import (
    FiniteFieldRing,
    Matrix2Ring,
    Ring,
    RingMap,
    Subfield,
    UpperTriangularRing,
    conjugate_subfield,
    make_ring_map,
)
from chaingeom.projline import Matrix2, Point, make_point, row_times_mat
from chaingeom.duality import DualPoint, perp_point


class SubfieldConditionError(ValueError):
    """No unit conjugates the image of the source subfield onto the target one."""


# catalogue -----------------------------------------------------------------

def transpose_map(R: Matrix2Ring) -> RingMap:
    def t(x):
        a, b, c, d = R._tuples[x]
        return R._encode((a, c, b, d))
    return make_ring_map(R, R, t, "antiisomorphism")


def frobenius_map(R: FiniteFieldRing, as_antiiso: bool = False) -> RingMap:
    """x -> x^p; over a commutative ring it serves both ways."""
    p = R.gf.p
    def t(x):
        out = x
        for _ in range(p - 1):
            out = R.mul(out, x)
        return out
    kind = "antiisomorphism" if as_antiiso else "isomorphism"
    return make_ring_map(R, R, t, kind)


def identity_map(R: Ring, as_antiiso: bool = False) -> RingMap:
    kind = "antiisomorphism" if as_antiiso else "isomorphism"
    return make_ring_map(R, R, lambda x: x, kind)


def triangular_flip_map(R: UpperTriangularRing) -> RingMap:
    def t(x):
        a, b, d = R._tuples[x]
        return R._encode((d, b, a))
    return make_ring_map(R, R, t, "antiisomorphism")


def find_conjugator(m: RingMap, K: Subfield, K2: Subfield) -> Optional[int]:
    """A unit u' of the target with image(K) = u'^-1 K2 u', by exhaustion."""
    S = m.target
    image = frozenset(m(k) for k in K.elements)
    for u in S.units:
        if frozenset(conjugate_subfield(K2, u).elements) == image:
            return u
    return None


def verify_subfield_condition(m: RingMap, K: Subfield, K2: Subfield) -> int:
    u = find_conjugator(m, K, K2)
    if u is None:
        raise SubfieldConditionError(
            f"image of {K.descriptor} is conjugate to no {K2.descriptor}")
    return u


# induced maps ----------------------------------------------------------------

def iso_point_map(m: RingMap, p: Point) -> Point:
    """R(a, b) -> R'(a^phi, b^phi) for a ring isomorphism."""
    assert m.kind == "isomorphism"
    return m.target.canonical_pair_left(m(p[0]), m(p[1]))


def antiiso_dual_to_point(m: RingMap, q: DualPoint) -> Point:
    """(v, w)^T R -> R'(v^phi, w^phi) for a ring antiisomorphism."""
    assert m.kind == "antiisomorphism"
    return m.target.canonical_pair_left(m(q[0]), m(q[1]))


def quarter_turn(S: Ring, p: Point) -> Point:
    """R'(a', b') -> R'(b', -a'), the point action of E(0')^-1."""
    return S.canonical_pair_left(p[1], S.neg(p[0]))


def antiiso_point_map(m: RingMap, p: Point) -> Point:
    """The normalized line isomorphism induced by an antiisomorphism:
    annihilator, entrywise map, quarter turn.  Fixes the far point."""
    return quarter_turn(m.target, antiiso_dual_to_point(m, perp_point(m.source, p)))


def antiiso_word_point(m: RingMap, ts: tuple[int, ...]) -> Point:
    """Closed form: R'(1', 0') * E(t_n^phi) * ... * E(t_1^phi)."""
    S = m.target
    from chaingeom.projline import elementary
    row = (S.one, S.zero)
    for t in reversed(ts):
        row = row_times_mat(S, row, elementary(S, m(t)))
    return S.canonical_pair_left(*row)


def map_matrix_entrywise(m: RingMap, M: Matrix2) -> Matrix2:
    return (m(M[0]), m(M[1]), m(M[2]), m(M[3]))


def transpose_law_holds(m: RingMap, M: Matrix2, q: DualPoint) -> bool:
    """(M * q) mapped entrywise equals (q mapped entrywise) * (M^T)^phi."""
    R, S = m.source, m.target
    from chaingeom.projline import mat_times_col
    lhs = antiiso_dual_to_point(m, R.canonical_pair_right(*mat_times_col(R, M, q)))
    Mt_phi = map_matrix_entrywise(m, (M[0], M[2], M[1], M[3]))
    rhs = S.canonical_pair_left(*row_times_mat(S, (m(q[0]), m(q[1])), Mt_phi))
    return lhs == rhs


def iso_chain_map(m: RingMap, C: frozenset) -> frozenset:
    return frozenset(iso_point_map(m, p) for p in C)


def antiiso_chain_map(m: RingMap, C: frozenset) -> frozenset:
    return frozenset(antiiso_point_map(m, p) for p in C)


def residue_restriction_is_ring_map(m: RingMap, point_map) -> bool:
    """Under the coordinate identifications, the restriction of the induced
    map to the residue at the far point is the ring map itself."""
    R, S = m.source, m.target
    return all(point_map(m, make_point(R, x, R.one)) == make_point(S, m(x), S.one)
               for x in R.elements())


def transported_partition(m: RingMap, classes) -> set:
    """Push a far-point block partition through the residue restriction."""
    return {frozenset(frozenset(m(x) for x in B) for B in c.blocks)
            for c in classes}


def preserves_compatibility(m: RingMap, K: Subfield, K2: Subfield) -> bool:
    """True iff the induced map carries the far-point compatibility
    partition onto the one of the target geometry."""
    from chaingeom.projline import infinity
    from chaingeom.chains import residue_at
    from chaingeom.compat import delta_orbits
    src = delta_orbits(residue_at(m.source, K, infinity(m.source)))
    tgt = delta_orbits(residue_at(m.target, K2, infinity(m.target)))
    return transported_partition(m, src) == {c.blocks for c in tgt}
