"""General recursive functions on the Farey graph and their closed forms.

A Farey-recursive function F satisfies, on every triangle with parents
(alpha, beta) and difference beta (-) alpha,

    F(beta (+) alpha) = -d1(alpha) F(beta (-) alpha) + d2(alpha) F(beta)
                        + d3(alpha),

where beta is the parent with the larger denominator.  The trace
polynomials are the special case d1 = 1, d2 = -F, d3 = 8; dropping d3
gives the homogeneous family.  Down any fan of repeated mediants the
recursion collapses to a second-order linear recurrence, which is what
the transition-matrix and closed-form helpers here exploit.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DegenerateEigenvalues, SingularParameter, ZeroDivisor
from .recursion import homogeneous_farey_polynomial
from .rings import Poly, exact_div
from .slopes import Slope, boundary_sequence, ominus, parents

__all__ = [
    "FRFSpec",
    "frf_eval",
    "boundary_matrix_power",
    "LeftFanClosedForm",
    "closed_form_left",
    "closed_form_homog_left",
    "closed_form_triangle",
    "chebyshev_T",
    "chebyshev_match",
    "detect_cycle",
    "left_sequence",
]

_SINGULAR_TOL = 1e-12


@dataclass
class FRFSpec:
    """Coefficient maps and seed values of one recursive function.

    ``d2 = None`` marks the self-multiplying case d2(alpha) = -F(alpha),
    which is how the trace polynomials and their relatives arise.  Seeds
    must cover 0/1, 1/1 and 1/0.
    """

    d1: Callable[[Slope], object]
    d2: Optional[Callable[[Slope], object]]
    d3: Callable[[Slope], object]
    seeds: dict
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        needed = {Slope(0, 1), Slope(1, 1), Slope(1, 0)}
        if not needed <= set(self.seeds):
            raise ValueError("seeds must cover 0/1, 1/1 and 1/0")
        self._cache.update(self.seeds)

    @property
    def is_anti_determinant(self) -> bool:
        return self.d2 is None


def _parent_roles(s: Slope) -> tuple[Slope, Slope, Slope]:
    """(alpha, beta, difference) with beta the larger-denominator parent."""
    a, b = parents(s)
    d = ominus(a, b)
    if (a.q, a.p) > (b.q, b.p):
        a, b = b, a
    return a, b, d


def frf_eval(spec: FRFSpec, s: Slope):
    """Value of the recursive function at a slope, by memoized descent."""
    cache = spec._cache
    if s in cache:
        return cache[s]
    stack = [s]
    while stack:
        t = stack[-1]
        if t in cache:
            stack.pop()
            continue
        alpha, beta, diff = _parent_roles(t)
        missing = [u for u in (alpha, beta, diff) if u not in cache]
        if missing:
            stack.extend(missing)
            continue
        stack.pop()
        d2val = -cache[alpha] if spec.d2 is None else spec.d2(alpha)
        cache[t] = (
            -(spec.d1(alpha) * cache[diff]) + d2val * cache[beta] + spec.d3(alpha)
        )
    return cache[s]


def _apply(m, v):
    (m00, m01), (m10, m11) = m
    return (m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1])


def boundary_matrix_power(spec: FRFSpec, alpha: Slope, n: int):
    """Transition-matrix power applied to the first two fan values.

    For an anti-determinant function (d2 = -F, d = d1 multiplicative with
    no zero divisors in its image) the matrix [[0, 1], [-d(a), -F(a)]]
    advances the fan around ``alpha``: non-negative powers give
    (F(fan_n), F(fan_n+1)) on the nose, negative powers pick up inverse
    d-factors and need exact d-inverses.
    """
    if not spec.is_anti_determinant:
        raise ValueError("transition matrices need the self-multiplying form")
    d = spec.d1
    left, right = parents(alpha)
    # Lazy multiplicativity check on the one triangle we rely on.
    if d(alpha) != d(left) * d(right):
        raise ValueError("d is not multiplicative at the visited triangle")
    f_alpha = frf_eval(spec, alpha)
    v = (
        frf_eval(spec, boundary_sequence(alpha, 0)),
        frf_eval(spec, boundary_sequence(alpha, 1)),
    )
    if n >= 0:
        m = ((_zero_like(f_alpha), _one_like(f_alpha)), (-d(alpha), -f_alpha))
        for _ in range(n):
            v = _apply(m, v)
        return v
    det = d(alpha)
    inv = ((-f_alpha, -_one_like(f_alpha)), (det, _zero_like(f_alpha)))
    for _ in range(-n):
        w = _apply(inv, v)
        try:
            v = (exact_div(w[0], det), exact_div(w[1], det))
        except ZeroDivisor:
            raise
    return v


def _one_like(x):
    return Poly([1]) if isinstance(x, Poly) else 1


def _zero_like(x):
    return Poly() if isinstance(x, Poly) else 0


def homogeneous_spec() -> FRFSpec:
    """The standard constant-free family as a recursive-function spec."""
    return FRFSpec(
        d1=lambda _: 1,
        d2=None,
        d3=lambda _: Poly(),
        seeds={
            Slope(0, 1): Poly([2, -1]),
            Slope(1, 0): Poly([2]),
            Slope(1, 1): Poly([2, 1]),
        },
    )


def _check_not_singular(z: complex) -> None:
    if abs(z) < _SINGULAR_TOL or abs(z - 4) < _SINGULAR_TOL:
        raise SingularParameter(f"z = {z} degenerates the closed form")


@dataclass(frozen=True)
class LeftFanClosedForm:
    """Diagonalisation data for the 1/q fan at a fixed parameter z.

    The transition eigenvalues multiply to 1, so the radical's branch
    cannot matter; ``lam`` and ``mu`` are the particular-solution mixing
    coefficients for the trace-polynomial seeds 2 and 2 + z.
    """

    z: complex
    radical: complex
    lam_plus: complex
    lam_minus: complex
    lam: complex
    mu: complex

    @classmethod
    def at(cls, z: complex) -> "LeftFanClosedForm":
        # mu solves the seed system a0 = 2, a1 = 2 + z; its denominator
        # must be 4 - z for the q = 1 value to come out right.
        _check_not_singular(z)
        rad = cmath.sqrt(z * z - 4 * z)
        return cls(
            z=z,
            radical=rad,
            lam_plus=(z - 2 + rad) / 2,
            lam_minus=(z - 2 - rad) / 2,
            lam=2 * z / (z - 4),
            mu=(2 * z - z * z) / (4 - z),
        )

    @property
    def eigen_product(self) -> complex:
        return self.lam_plus * self.lam_minus

    def value(self, q: int) -> complex:
        z, rad = self.z, self.radical
        a = (self.lam * (z - 2 + rad) - 2 * self.mu) * (z - 2 - rad) ** q
        b = (self.lam * (2 - z + rad) + 2 * self.mu) * (z - 2 + rad) ** q
        return 8 / (4 - z) + (a + b) / (2.0 ** (1 + q) * rad)


def closed_form_left(z: complex, q: int) -> complex:
    """Closed-form value of the parabolic trace polynomial at slope 1/q.

    Simplified form of the diagonalised fan recurrence; rejects z in
    {0, 4} where the radical or the particular solution degenerates.
    """
    _check_not_singular(z)
    if q < 0:
        raise ValueError("q must be >= 0")
    rad = cmath.sqrt(z * z - 4 * z)
    powers = (z - 2 - rad) ** q + (z - 2 + rad) ** q
    return 8 / (4 - z) + z / ((z - 4) * 2.0**q) * powers


def closed_form_homog_left(z: complex, q: int, a0: complex, a1: complex) -> complex:
    """Closed form for the homogeneous fan sequence with given seeds.

    The sequence satisfies a(q) = (z - 2) a(q-1) - a(q-2); the formula is
    its diagonalisation and fails at z in {0, 4}.
    """
    _check_not_singular(z)
    rad = cmath.sqrt(z * z - 4 * z)
    a = (a0 * (z - 2 + rad) - 2 * a1) * (z - 2 - rad) ** q
    b = (a0 * (2 - z + rad) + 2 * a1) * (z - 2 + rad) ** q
    return (a + b) / (2.0 ** (1 + q) * rad)


def left_sequence(z, q: int, a0=2, a1=None, constant=8):
    """Exact fan values by direct recurrence; the fallback path.

    With the default seeds this is the parabolic trace value at 1/q; pass
    ``constant=0`` for the homogeneous family.  Works over any ring the
    inputs live in (ints stay exact).
    """
    if a1 is None:
        a1 = 2 + z
    cur, prev = a1, a0
    if q == 0:
        return a0
    for _ in range(q - 1):
        cur, prev = constant - (2 - z) * cur - prev, cur
    return cur


def closed_form_triangle(beta0: Slope, beta1: Slope, n: int, z: complex) -> complex:
    """Closed-form homogeneous value at the n-th fan slope from (beta0, beta1).

    The fan direction is alpha = beta1 (-) beta0.  The transition matrix
    of the fan recurrence has corner entry minus the alpha value, so the
    diagonalisation is taken at x = -F(alpha)(z); when F(alpha)(z) is
    +-2 the eigenvalues collide and the caller must fall back to
    ``boundary_matrix_power`` or the plain recurrence.
    """
    alpha = ominus(beta1, beta0)
    x = -homogeneous_farey_polynomial(alpha).evaluate(z)
    # kappa ~ sqrt(eps) once the fan value nears +-2, so detect
    # degeneracy on the value itself rather than on the radical.
    if min(abs(x - 2), abs(x + 2)) < 1e-9:
        raise DegenerateEigenvalues(f"fan value {x} gives equal eigenvalues")
    kappa = cmath.sqrt(complex(x * x - 4))
    f0 = complex(homogeneous_farey_polynomial(beta0).evaluate(z))
    f1 = complex(homogeneous_farey_polynomial(beta1).evaluate(z))
    a = (f0 * (x + kappa) - 2 * f1) * (x - kappa) ** n
    b = (f0 * (kappa - x) + 2 * f1) * (x + kappa) ** n
    return (a + b) / (2.0 ** (1 + n) * kappa)


def chebyshev_T(n: int) -> Poly:
    """First-kind Chebyshev polynomial by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prev, cur = Poly([1]), Poly([0, 1])
    if n == 0:
        return prev
    two_x = Poly([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def chebyshev_match(q: int, z: complex, tol: float = 1e-9) -> bool:
    """Does the homogeneous 1/q value equal the shifted Chebyshev-type term?

    The comparison sequence follows the Chebyshev recurrence with seeds
    2 and 2x + 4, evaluated at x = (z - 2)/2.  (The seed 2 is forced by
    the degree-0 fan value; a linear seed would contradict the quadratic
    fan entry.)
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    x = (complex(z) - 2) / 2
    prev, cur = complex(2), 2 * x + 4
    w = prev if q == 0 else cur
    for _ in range(max(0, q - 1)):
        prev, cur = cur, 2 * x * cur - prev
        w = cur
    lhs = complex(left_sequence(z, q, a0=2, a1=2 + z, constant=0))
    scale = max(1.0, abs(lhs))
    return abs(lhs - w) <= tol * scale


def detect_cycle(z, max_period: int) -> Optional[int]:
    """Smallest period of the homogeneous fan sequence at z, if any.

    Exact integer arithmetic when z is an integer; complex values compare
    with a relative tolerance.
    """
    length = 3 * max_period + 12
    seq = []
    prev, cur = 2, 2 + z
    seq.append(prev)
    seq.append(cur)
    for _ in range(length):
        prev, cur = cur, (z - 2) * cur - prev
        seq.append(cur)
    exact = isinstance(z, int)

    def same(u, v):
        if exact:
            return u == v
        return cmath.isclose(u, v, rel_tol=1e-9, abs_tol=1e-9)

    for period in range(1, max_period + 1):
        if all(same(seq[i], seq[i + period]) for i in range(len(seq) - period)):
            return period
    return None
