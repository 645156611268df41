"""Generalized test ideals of monomial ideals via the interior criterion.

x^m lies in tau(a^t) exactly when m + w is in the interior of t*P(a), where
P(a) is the Newton polyhedron and w the Q-Gorenstein vector.  Generators are
found by graded lattice-point enumeration with a saturation certificate.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .enumeration import minimal_upset_generators, upper_degree_seed
from .errors import InputError
from .ideals import MonomialIdeal, minimalize, unit_ideal
from .lattice import ToricRing, pairing, toric_ring, vec_add
from .polyhedra import NewtonPolyhedron, newton_polyhedron, scale

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None


def _check_request(ring: ToricRing, a: MonomialIdeal, t) -> Fraction:
    if a.ring != ring:
        raise InputError("ideal does not belong to the given ring")
    if a.is_zero():
        raise InputError("tau of the zero ideal is undefined")
    t = Fraction(t)
    if t < 0:
        raise InputError(f"negative exponent t = {t}")
    return t


def _interior_member_batch(ring: ToricRing, tP: NewtonPolyhedron):
    """Batch test of m + w in Int(tP) over lattice points m."""
    w = ring.w
    # reduce each facet <m + w, a> > b to an integer comparison
    facets = []
    for a_vec, b in tP.inequalities:
        beta = b - pairing(w, a_vec)
        facets.append((a_vec, beta.numerator, beta.denominator))

    if _np is not None and ring.is_orthant():
        A = _np.array([f[0] for f in facets], dtype=_np.int64)
        num = _np.array([f[1] for f in facets], dtype=_np.int64)
        den = _np.array([f[2] for f in facets], dtype=_np.int64)

        def batch(points):
            if not points:
                return []
            P = _np.array(points, dtype=_np.int64)
            dots = P @ A.T
            ok = (dots * den > num).all(axis=1)
            return [bool(x) for x in ok]

        return batch

    def batch(points):
        out = []
        for m in points:
            out.append(
                all(pairing(m, a_vec) * dn > nm for a_vec, nm, dn in facets)
            )
        return out

    return batch


def tau(ring: ToricRing, a: MonomialIdeal, t) -> MonomialIdeal:
    """The generalized test ideal tau(a^t) as a monomial ideal."""
    t = _check_request(ring, a, t)
    if t == 0:
        return unit_ideal(ring)
    P = newton_polyhedron(ring, a.gens)
    tP = scale(P, t)
    gens = minimal_upset_generators(
        ring,
        _interior_member_batch(ring, tP),
        upper_degree_seed(ring, tP.vertices, shift=ring.w),
    )
    return minimalize(ring, gens)


def tau_is_unit(ring: ToricRing, a: MonomialIdeal, t) -> bool:
    """Fast unit test: is w itself interior to t*P(a)?"""
    t = _check_request(ring, a, t)
    if t == 0:
        return True
    tP = scale(newton_polyhedron(ring, a.gens), t)
    return tP.contains(ring.w, strict=True)


def tau_veronese(d: int, r: int, l: int) -> int:
    """Closed-form exponent e with tau(m^l) = m^e in the r-th Veronese ring."""
    if d < 1 or r < 1 or l < 1:
        raise InputError("tau_veronese needs positive parameters")
    e = math.ceil(Fraction(l) - Fraction(d - 1, r))
    return max(e, 0)


def veronese_ring(d: int, r: int) -> ToricRing:
    """The r-th Veronese of k[x_1..x_d] in adapted lattice coordinates.

    The first adapted coordinate is total degree divided by r; the others are
    the original exponents of x_2..x_d.
    """
    if d < 1 or r < 1:
        raise InputError("veronese_ring needs positive parameters")
    gens = [(r,) + tuple(-1 for _ in range(d - 1))]
    for i in range(1, d):
        gens.append(tuple(1 if j == i else 0 for j in range(d)))
    return toric_ring(gens)


def veronese_maximal_ideal(ring: ToricRing, d: int, r: int) -> MonomialIdeal:
    """The irrelevant maximal ideal of the Veronese ring in adapted coordinates.

    Its generators correspond to the degree-r monomials of the polynomial ring.
    """
    gens = []

    def rec(prefix, remaining, k):
        if k == d - 1:
            gens.append((1,) + prefix)
            return
        for c in range(remaining + 1):
            rec(prefix + (c,), remaining - c, k + 1)

    if d == 1:
        gens.append((1,))
    else:
        rec((), r, 0)
    return minimalize(ring, gens)


def veronese_exponent_coords(m, r: int):
    """Adapted coordinates of an exponent vector of the Veronese subring."""
    total = sum(m)
    if total % r != 0:
        raise InputError(f"exponent {m} has degree not divisible by {r}")
    return (total // r,) + tuple(m[1:])
