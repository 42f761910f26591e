"""Farey polynomials by memoized triangle recursion down the Farey graph.

Each new slope costs exactly one polynomial multiplication: with parents
(a, b) and third triangle vertex d = a (-) b,

    value(mediant) = C(parity of target denominator) - value(a)*value(b)
                     - value(d)

where C is the even/odd recursion constant of the ring (both equal 8 in
the parabolic case).  Values are exact in the parabolic and generic
rings and complex doubles in the numeric ring.

Cache discipline: one engine per ring, entries immutable once inserted.
Population is single-writer; concurrent readers only ever observe
completed entries.
"""

from __future__ import annotations

from typing import Union

from . import oracle
from .rings import GeneratorParams, Laurent2, Poly
from .slopes import (
    CFExpansion,
    Slope,
    ominus,
    parents,
    semiconvergent_path,
)

__all__ = [
    "FareyPolynomialEngine",
    "farey_polynomial",
    "reduced_farey_polynomial",
    "homogeneous_farey_polynomial",
    "fan_walk",
    "cubic_step",
    "cubic_step_homogeneous",
    "recursion_constants",
    "get_engine",
]

Ring = Union[str, GeneratorParams]

_ZERO = Slope(0, 1)
_ONE = Slope(1, 1)
_INF = Slope(1, 0)


def _seed_polynomials(ring: Ring) -> dict[Slope, Poly]:
    if ring == "generic":
        return {
            _ZERO: Poly([Laurent2({(1, -1): 1, (-1, 1): 1}), Laurent2.const(-1)]),
            _ONE: Poly([Laurent2({(1, 1): 1, (-1, -1): 1}), Laurent2.const(1)]),
            _INF: Poly([Laurent2.const(2)]),
        }
    if ring == "parabolic":
        return {
            _ZERO: Poly([2, -1]),
            _ONE: Poly([2, 1]),
            _INF: Poly([2]),
        }
    if isinstance(ring, GeneratorParams):
        al, be = ring.alpha, ring.beta
        return {
            _ZERO: Poly([al / be + be / al, complex(-1)]),
            _ONE: Poly([al * be + 1 / (al * be), complex(1)]),
            _INF: Poly([complex(2)]),
        }
    raise ValueError(f"unknown ring {ring!r}")


class FareyPolynomialEngine:
    """Memoized recursion for one coefficient ring."""

    def __init__(self, ring: Ring = "parabolic"):
        self.ring = ring
        self._cache: dict[Slope, Poly] = _seed_polynomials(ring)
        self._c_even = oracle.recursion_constant(True, ring)
        self._c_odd = oracle.recursion_constant(False, ring)

    def polynomial(self, s: Slope) -> Poly:
        cache = self._cache
        if s in cache:
            return cache[s]
        # Iterative worklist: long left fans would overflow Python's
        # recursion limit well below the depths the benchmark uses.
        stack = [s]
        while stack:
            t = stack[-1]
            if t in cache:
                stack.pop()
                continue
            a, b = parents(t)
            d = ominus(a, b)
            missing = [u for u in (a, b, d) if u not in cache]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            c = self._c_even if t.q % 2 == 0 else self._c_odd
            cache[t] = c - cache[a] * cache[b] - cache[d]
        return cache[s]

    def cached_slopes(self) -> list[Slope]:
        return list(self._cache)


class HomogeneousEngine:
    """The parabolic recursion with its constant term removed.

    Seeds are 2 - z, 2, 2 + z at 0/1, 1/0, 1/1; each triangle step is
    value(mediant) = -value(a)*value(b) - value(d).
    """

    def __init__(self) -> None:
        self._cache: dict[Slope, Poly] = {
            _ZERO: Poly([2, -1]),
            _INF: Poly([2]),
            _ONE: Poly([2, 1]),
        }

    def polynomial(self, s: Slope) -> Poly:
        cache = self._cache
        if s in cache:
            return cache[s]
        stack = [s]
        while stack:
            t = stack[-1]
            if t in cache:
                stack.pop()
                continue
            a, b = parents(t)
            d = ominus(a, b)
            missing = [u for u in (a, b, d) if u not in cache]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            cache[t] = -(cache[a] * cache[b]) - cache[d]
        return cache[s]


_ENGINES: dict = {}
_HOMOGENEOUS = HomogeneousEngine()


def get_engine(ring: Ring = "parabolic") -> FareyPolynomialEngine:
    key = ring if isinstance(ring, (str, GeneratorParams)) else None
    if key is None:
        raise ValueError(f"unknown ring {ring!r}")
    if key not in _ENGINES:
        _ENGINES[key] = FareyPolynomialEngine(ring)
    return _ENGINES[key]


def farey_polynomial(s: Slope, ring: Ring = "parabolic") -> Poly:
    """The trace polynomial of the slope, via the triangle recursion."""
    return get_engine(ring).polynomial(s)


def reduced_farey_polynomial(s: Slope) -> Poly:
    """Parabolic polynomial minus its constant 2."""
    return farey_polynomial(s, "parabolic") - Poly([2])


def homogeneous_farey_polynomial(s: Slope) -> Poly:
    """Solution of the constant-free triangle recursion at the slope."""
    return _HOMOGENEOUS.polynomial(s)


def fan_walk(cf: CFExpansion, n: int, ring: Ring = "parabolic") -> list[tuple[Slope, Poly]]:
    """Polynomials along the unit-mediant walk of a continued fraction.

    The walk advances one Farey triangle at a time, so the engine performs
    one polynomial multiplication per new slope and no matrix products.
    """
    engine = get_engine(ring)
    return [(s, engine.polynomial(s)) for s in semiconvergent_path(cf, n)]


def cubic_step(x1, x2, x3):
    """One step of the parabolic triangle recursion on ring elements."""
    eight = _like_const(8, x1, x2, x3)
    return eight - x1 - x2 * x3


def cubic_step_homogeneous(y1, y2, y3):
    """The same step after shifting the constant fixed point to zero."""
    return -y1 - y2 * y3 - 2 * (y2 + y3)


def _like_const(n, *xs):
    for x in xs:
        if isinstance(x, Poly):
            return Poly([n])
    return n


def recursion_constants(ring: Ring = "parabolic") -> tuple[Poly, Poly]:
    """(even, odd) triangle-sum constants of the ring, as polynomials."""
    return (
        oracle.recursion_constant(True, ring),
        oracle.recursion_constant(False, ring),
    )
