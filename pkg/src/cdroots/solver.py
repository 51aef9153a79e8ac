"""Alternating-root solver for polynomials over division Cayley-Dickson algebras.

Pipeline: split f into even/odd parts E and O, expand conj(g)*g of each into
a scalar polynomial of the norm variable, and isolate the nonnegative roots
of p(N) = expand(E) - N*expand(O).  Each candidate norm N0 yields either the
unique isolated root -O(N0)**-1 * E(N0) or, when O(N0) vanishes, a whole
sphere of roots sharing that norm.  Every emitted result is re-verified by
direct alternating evaluation; candidates that fail verification are dropped
(over the rationals a nonnegative N0 need not be a value of the norm form).

The isolated-root formula relies on conj(a)*(a*b) = norm(a)*b, which holds in
the division-certified (dim <= 8, all gammas negative) algebras the solver is
gated to.  ``generalized_alt_roots`` is the experimental any-dimension scan;
its results are verification-gated and never claimed complete.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import (
    EXACT,
    FLOAT,
    Algebra,
    Element,
    Scalar,
    ToleranceContext,
)
from .errors import (
    InternalConsistencyError,
    InvalidParameterError,
    NotInvertibleError,
    UnsupportedAlgebraError,
    ZeroPolynomialError,
)
from .polynomials import (
    Polynomial,
    ScalarPolynomial,
    eval_alternating,
    eval_scalar_point,
    even_odd_split,
    norm_expand,
)
from .realroots import RootInterval, isolate_nonnegative_roots, refine_root

ISOLATED = "isolated"
SPHERICAL = "spherical"


@dataclass(frozen=True)
class RootResult:
    """One alternating root (or sphere of roots) found by the solver.

    norm_value is the root's norm: a scalar when known exactly (or computed
    in float mode), or a pair of rationals bracketing an irrational norm
    reached from exact inputs.  For spherical results ``root`` is a witness
    of that norm when one is constructible in the ambient mode.
    """

    kind: str
    norm_value: Scalar | tuple[Fraction, Fraction]
    root: Element | None
    witness_available: bool
    residual: Scalar
    experimental: bool = False

    @property
    def norm_is_exact(self) -> bool:
        return not isinstance(self.norm_value, tuple)


def central_polynomial(f: Polynomial, ctx: ToleranceContext | None = None) -> ScalarPolynomial:
    """The scalar candidate-norm polynomial expand(E) - N*expand(O)."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no central polynomial")
    even, odd = even_odd_split(f)
    return norm_expand(even, ctx) - norm_expand(odd, ctx).shifted_up()


def verify_alt_root(f: Polynomial, lam: Element) -> Scalar:
    """Max coefficient magnitude of the alternating value; 0 iff lam is a root."""
    value = eval_alternating(f, lam)
    return max(abs(c) for c in value.coeffs)


def _within(ctx: ToleranceContext, value, scale) -> bool:
    if ctx.is_exact:
        return value == 0
    return abs(value) <= ctx.abs_epsilon + ctx.rel_epsilon * scale


def _coeff_scale(f: Polynomial) -> float:
    return 1.0 + max((float(c.max_abs()) for c in f.coeffs), default=0.0)


def _eval_scale(g: Polynomial, n0: float) -> float:
    s = abs(n0) if abs(n0) > 1.0 else 1.0
    return 1.0 + sum(float(c.max_abs()) * s**k for k, c in enumerate(g.coeffs))


def _canon_fraction(q: Fraction) -> Scalar:
    return q.numerator if q.denominator == 1 else q


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _float_twin(f: Polynomial) -> Polynomial:
    alg = f.algebra
    falg = Algebra([float(g) for g in alg.gammas], FLOAT, ToleranceContext.for_floats())
    return Polynomial(
        falg, [falg.element([float(v) for v in c.coeffs]) for c in f.coeffs]
    )


def _norm_sort_key(result: RootResult) -> Fraction:
    nv = result.norm_value
    return Fraction(nv[0]) if isinstance(nv, tuple) else Fraction(nv)


def _classify_exact(f, even, odd, n0, ctx) -> RootResult | None:
    alg = f.algebra
    ev = eval_scalar_point(even, n0)
    ov = eval_scalar_point(odd, n0)
    zero_s = alg.zero_scalar()
    if all(v == 0 for v in ov.coeffs):
        # O(N0) = 0 forces E(N0) = 0 when the norm form is anisotropic; with
        # --assume-division on other algebras a stray candidate is discarded.
        if any(v != 0 for v in ev.coeffs):
            return None
        w = _rational_sqrt(Fraction(n0))
        if w is None:
            return RootResult(SPHERICAL, n0, None, False, zero_s)
        return RootResult(SPHERICAL, n0, alg.from_scalar(_canon_fraction(w)), True, zero_s)
    try:
        lam = (-ov).inverse(ctx) * ev
    except NotInvertibleError:
        return None
    if lam.norm(ctx) != n0:
        return None
    if verify_alt_root(f, lam) != 0:
        return None
    return RootResult(ISOLATED, n0, lam, True, zero_s)


def _classify_float(f, even, odd, n0: float, norm_value, ctx) -> RootResult | None:
    alg = f.algebra
    ev = eval_scalar_point(even, n0)
    ov = eval_scalar_point(odd, n0)
    if ov.is_zero(ctx, _eval_scale(odd, n0)):
        if not ev.is_zero(ctx, _eval_scale(even, n0)):
            return None
        residual = max(max(abs(v) for v in ev.coeffs), max(abs(v) for v in ov.coeffs))
        witness = alg.from_scalar(math.sqrt(n0)) if n0 >= 0.0 else None
        return RootResult(SPHERICAL, norm_value, witness, witness is not None, residual)
    try:
        lam = (-ov).inverse(ctx) * ev
    except NotInvertibleError:
        return None
    residual = verify_alt_root(f, lam)
    if not _within(ctx, residual, _coeff_scale(f)):
        return None
    if not _within(ctx, lam.norm(ctx) - n0, 1.0 + abs(n0)):
        return None
    return RootResult(ISOLATED, norm_value, lam, True, residual)


def _classify_candidate(f, even, odd, iv: RootInterval, ctx, precision_bits) -> RootResult | None:
    alg = f.algebra
    if iv.exact_value is not None:
        if alg.mode == EXACT:
            return _classify_exact(f, even, odd, _canon_fraction(iv.exact_value), ctx)
        n0 = float(iv.exact_value)
        return _classify_float(f, even, odd, n0, n0, ctx)
    refined = refine_root(iv, Fraction(1, 2**precision_bits))
    n0 = float((refined.lo + refined.hi) / 2)
    if alg.mode == FLOAT:
        return _classify_float(f, even, odd, n0, n0, ctx)
    # Exact input, irrational norm: the root is emitted from a float twin at
    # the refined precision and flagged by its interval-valued norm.
    twin = _float_twin(f)
    t_even, t_odd = even_odd_split(twin)
    fctx = ToleranceContext.for_floats() if ctx.is_exact else ctx
    return _classify_float(twin, t_even, t_odd, n0, (refined.lo, refined.hi), fctx)


def alt_roots(
    f: Polynomial,
    ctx: ToleranceContext | None = None,
    *,
    assume_division: bool = False,
    precision_bits: int = 60,
) -> list[RootResult]:
    """All alternating roots of f, ordered by ascending norm.

    Requires a division-certified algebra unless ``assume_division`` asserts
    anisotropy for other parameter choices; in that case unverifiable
    candidates are silently dropped rather than trusted.
    """
    alg = f.algebra
    if f.is_zero():
        raise ZeroPolynomialError("cannot solve the zero polynomial")
    if not (alg.division_certified or assume_division):
        raise UnsupportedAlgebraError(
            "alt_roots is gated to division-certified algebras "
            "(dim <= 8, all gammas negative); pass assume_division=True to override"
        )
    ctx = alg.tolerance if ctx is None else ctx
    results: list[RootResult] = []
    zero_s = alg.zero_scalar()
    if all(v == 0 for v in f.coeffs[0].coeffs):
        # Anisotropy leaves lambda = 0 as the only norm-zero root; the N0 = 0
        # candidate below is skipped so O(0) never needs inverting.
        results.append(RootResult(ISOLATED, zero_s, alg.zero(), True, zero_s))
    even, odd = even_odd_split(f)
    p = central_polynomial(f, ctx)
    if p.is_zero():
        raise InternalConsistencyError(
            "central polynomial vanished identically; the norm form is not anisotropic"
        )
    for iv in isolate_nonnegative_roots(p):
        if iv.exact_value == 0:
            continue
        res = _classify_candidate(f, even, odd, iv, ctx, precision_bits)
        if res is not None:
            results.append(res)
    results.sort(key=_norm_sort_key)
    return results


def odd_degree_existence_check(
    f: Polynomial,
    ctx: ToleranceContext | None = None,
    *,
    experimental: bool = False,
) -> bool:
    """Whether the solver finds at least one verified root of an odd-degree f.

    Restricted to float mode with every doubling parameter -1.  With
    ``experimental`` (or beyond dim 8) the any-dimension scan is used.
    """
    alg = f.algebra
    if alg.mode != FLOAT or any(g != -1.0 for g in alg.gammas):
        raise UnsupportedAlgebraError(
            "existence check requires float mode with all doubling parameters -1"
        )
    if f.degree < 1 or f.degree % 2 == 0:
        raise InvalidParameterError("existence check requires odd degree")
    if experimental or not alg.division_certified:
        return bool(generalized_alt_roots(f, ctx))
    return bool(alt_roots(f, ctx))


@dataclass(frozen=True)
class SearchGrid:
    """Sampling plan for the experimental norm scan."""

    max_norm: float | None = None
    samples: int = 257
    refine_steps: int = 80


def generalized_alt_roots(
    f: Polynomial,
    ctx: ToleranceContext | None = None,
    grid: SearchGrid | None = None,
) -> list[RootResult]:
    """EXPERIMENTAL: scan candidate norms in any dimension, verification-gated.

    For sampled N the linear system O(N) * lam = -E(N) is solved through the
    left-multiplication matrix; sign changes of norm(lam(N)) - N are bisected
    and only candidates passing re-verification are returned.  The result
    list makes no completeness claim.
    """
    alg = f.algebra
    if alg.mode != FLOAT or any(g != -1.0 for g in alg.gammas):
        raise UnsupportedAlgebraError(
            "the experimental scan requires float mode with all doubling parameters -1"
        )
    if f.is_zero():
        raise ZeroPolynomialError("cannot solve the zero polynomial")
    ctx = alg.tolerance if ctx is None else ctx
    if ctx.is_exact:
        ctx = ToleranceContext.for_floats()
    grid = grid or SearchGrid()

    results: list[RootResult] = []
    if all(v == 0 for v in f.coeffs[0].coeffs):
        results.append(RootResult(ISOLATED, 0.0, alg.zero(), True, 0.0, experimental=True))
    even, odd = even_odd_split(f)
    p = central_polynomial(f, ctx)
    coeff_scale = _coeff_scale(f)

    if odd.is_zero():
        # No odd part: a candidate norm is spherical exactly when E(N0) = 0.
        for iv in isolate_nonnegative_roots(p):
            if iv.exact_value == 0:
                continue
            if iv.exact_value is not None:
                n0 = float(iv.exact_value)
            else:
                refined = refine_root(iv, Fraction(1, 2**60))
                n0 = float((refined.lo + refined.hi) / 2)
            ev = eval_scalar_point(even, n0)
            if not ev.is_zero(ctx, _eval_scale(even, n0)):
                continue
            residual = max(abs(v) for v in ev.coeffs)
            witness = alg.from_scalar(math.sqrt(n0))
            results.append(
                RootResult(SPHERICAL, n0, witness, True, residual, experimental=True)
            )
        results.sort(key=_norm_sort_key)
        return results

    def solve_at(n: float):
        ov = eval_scalar_point(odd, n)
        matrix = np.array(ov.left_mul_matrix(), dtype=float)
        rhs = -np.array(eval_scalar_point(even, n).coeffs, dtype=float)
        try:
            vec = np.linalg.solve(matrix, rhs)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(vec)):
            return None
        return Element(alg, [float(v) for v in vec])

    def norm_gap(n: float):
        lam = solve_at(n)
        if lam is None:
            return None, None
        return lam.norm(ctx) - n, lam

    n_max = grid.max_norm
    if n_max is None:
        if p.degree >= 1:
            lead = abs(p.coeffs[-1])
            n_max = 1.0 + max(abs(c) / lead for c in p.coeffs[:-1])
        else:
            n_max = 1.0
        n_max = 1.25 * float(n_max) + 1.0
    step = n_max / (grid.samples - 1)
    points = [k * step for k in range(grid.samples)]
    values = [norm_gap(n) for n in points]

    for i in range(len(points) - 1):
        r1, lam1 = values[i]
        r2, _ = values[i + 1]
        if r1 is None or r2 is None:
            continue
        candidate = None
        if r1 == 0.0:
            candidate = lam1
        elif r1 * r2 < 0:
            a, b, ra = points[i], points[i + 1], r1
            lam_mid = None
            for _ in range(grid.refine_steps):
                mid = 0.5 * (a + b)
                rm, lam_mid = norm_gap(mid)
                if rm is None or rm == 0.0:
                    break
                if ra * rm < 0:
                    b = mid
                else:
                    a, ra = mid, rm
            candidate = lam_mid
        if candidate is None:
            continue
        residual = verify_alt_root(f, candidate)
        if not _within(ctx, residual, coeff_scale):
            continue
        n_star = candidate.norm(ctx)
        results.append(
            RootResult(ISOLATED, n_star, candidate, True, residual, experimental=True)
        )

    results.sort(key=_norm_sort_key)
    deduped: list[RootResult] = []
    for res in results:
        if (
            deduped
            and res.root is not None
            and deduped[-1].root is not None
            and res.root.approx_eq(deduped[-1].root, ctx)
        ):
            continue
        deduped.append(res)
    return deduped
