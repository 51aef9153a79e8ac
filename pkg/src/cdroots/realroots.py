"""Exact isolation and refinement of nonnegative real roots.

Everything here runs in exact rational arithmetic: float coefficients are
rationalized first (every binary float is a rational), so the candidate-norm
stage of the solver carries no tolerance ambiguity.  Isolation uses a Sturm
chain of the square-free part with bisection; rational roots are pinned down
exactly by refining an isolating interval below 1/(2*L**2), where L bounds
the possible root denominators, and testing the simplest rational inside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalConsistencyError, InvalidParameterError, ZeroPolynomialError
from .polynomials import ScalarPolynomial


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval for one root of the square-free part.

    The closed interval [lo, hi] contains exactly one such root; when the
    root is rational, lo == hi == exact_value.  multiplicity is the root's
    multiplicity in the original polynomial.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    exact_value: Fraction | None = None
    poly: tuple[int, ...] = field(default=(), repr=False, compare=False)


# -- fraction-coefficient helpers --------------------------------------------


def _fr_trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fr_derivative(cs: list[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(cs)][1:]


def _fr_monic(cs: list[Fraction]) -> list[Fraction]:
    lead = cs[-1]
    return [c / lead for c in cs]


def _fr_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    d = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= d:
        top = r[-1]
        if top == 0:
            r.pop()
            continue
        factor = top / lead
        k = len(r) - 1 - d
        for i in range(d):
            r[k + i] -= factor * b[i]
        r.pop()
    return _fr_trim(r)


def _fr_quo(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    d = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(r) - d, 0)
    while len(r) - 1 >= d:
        top = r[-1]
        k = len(r) - 1 - d
        if top != 0:
            factor = top / lead
            q[k] = factor
            for i in range(d):
                r[k + i] -= factor * b[i]
        r.pop()
    return _fr_trim(q)


def _fr_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _fr_trim(list(a))
    b = _fr_trim(list(b))
    while b:
        a, b = b, _fr_rem(a, b)
    return _fr_monic(a) if a else a


def _yun_factors(cs: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Square-free decomposition: p = prod factor**multiplicity (monic factors)."""
    p = _fr_monic(cs)
    dp = _fr_derivative(p)
    g = _fr_gcd(p, dp)
    out = []
    if len(g) == 1:
        return [(p, 1)]
    c = _fr_quo(p, g)
    d = [x - y for x, y in _zip_pad(_fr_quo(dp, g), _fr_derivative(c))]
    d = _fr_trim(d)
    i = 1
    while len(c) > 1:
        a = _fr_gcd(c, d) if d else _fr_monic(c)
        if len(a) > 1:
            out.append((a, i))
        c = _fr_quo(c, a)
        d = _fr_trim([x - y for x, y in _zip_pad(_fr_quo(d, a) if d else [], _fr_derivative(c))])
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


# -- integer-coefficient helpers ----------------------------------------------


def _primitive_int(cs: list[Fraction]) -> list[int]:
    """Clear denominators and divide out the content; positive scaling only."""
    scale = math.lcm(*(c.denominator for c in cs))
    nums = [int(c * scale) for c in cs]
    content = math.gcd(*nums)
    return [n // content for n in nums] if content > 1 else nums


def _int_derivative(cs: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(cs)][1:]


def _scaled_value_at(poly, num: int, den: int):
    """poly(num/den) * den**degree, an exact integer-like value."""
    acc = poly[-1]
    dp = 1
    for i in range(len(poly) - 2, -1, -1):
        dp *= den
        acc = acc * num + poly[i] * dp
    return acc


def _sign_at(poly, x: Fraction) -> int:
    v = _scaled_value_at(poly, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def _sturm_chain(q: list[int]) -> list[list[int]]:
    chain = [q, _int_derivative(q)]
    while len(chain[-1]) > 1:
        r = _fr_rem([Fraction(c) for c in chain[-2]], [Fraction(c) for c in chain[-1]])
        if not r:
            break
        chain.append(_primitive_int([-c for c in r]))
    return chain


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _count_in(chain: list[list[int]], a: Fraction, b: Fraction) -> int:
    """Distinct roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def _cauchy_bound(q: list[int]) -> Fraction:
    lead = abs(q[-1])
    return 1 + max(Fraction(abs(c), lead) for c in q[:-1])


def _deflate(q: list[int], root: Fraction) -> list[int]:
    cs = [Fraction(c) for c in q]
    out = [Fraction(0)] * (len(cs) - 1)
    acc = Fraction(0)
    for i in range(len(cs) - 1, 0, -1):
        acc = cs[i] + root * acc
        out[i - 1] = acc
    if cs[0] + root * acc != 0:
        raise InternalConsistencyError("deflation by a non-root")
    return _primitive_int(out)


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise InvalidParameterError("empty interval")
    if lo == hi:
        return lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    terms = []
    a, b = lo, hi
    while True:
        fl = a.numerator // a.denominator
        if a == fl:
            terms.append(fl)
            break
        if fl + 1 <= b:
            terms.append(fl + 1)
            break
        terms.append(fl)
        a, b = 1 / (b - fl), 1 / (a - fl)
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        value = t + 1 / value
    return value


# -- public operations ---------------------------------------------------------


def square_free_part(
    p: ScalarPolynomial,
) -> tuple[ScalarPolynomial, tuple[tuple[ScalarPolynomial, int], ...]]:
    """Monic square-free part p/gcd(p, p') plus the multiplicity factors.

    Float coefficients are rationalized exactly first.  The second item
    lists (factor, multiplicity) pairs whose product over factor**mult
    rebuilds p up to a constant; the multiplicity of any root of the
    square-free part is the multiplicity of the factor containing it.
    """
    cs = _fr_trim([Fraction(c) for c in p.coeffs])
    if not cs:
        raise ZeroPolynomialError("the zero polynomial has no square-free part")
    if len(cs) == 1:
        return ScalarPolynomial([Fraction(1)]), ()
    g = _fr_gcd(cs, _fr_derivative(cs))
    q = _fr_monic(_fr_quo(cs, g))
    factors = tuple(
        (ScalarPolynomial(w), m) for w, m in _yun_factors(cs)
    )
    return ScalarPolynomial(q), factors


def _multiplicity_exact(factors, r: Fraction) -> int:
    for w, m in factors:
        if w(r) == 0:
            return m
    raise InternalConsistencyError("root not covered by any square-free factor")


def _multiplicity_interval(factors, lo: Fraction, hi: Fraction) -> int:
    for w, m in factors:
        if w(lo) * w(hi) < 0:
            return m
    raise InternalConsistencyError("interval root not covered by any square-free factor")


def _tighten(work, lo, hi, width_cap, excluded):
    sa = _sign_at(work, lo)
    while hi - lo > width_cap or any(lo <= r <= hi for r in excluded):
        mid = (lo + hi) / 2
        sm = _sign_at(work, mid)
        if sm == 0:
            return mid, mid
        if sa * sm < 0:
            hi = mid
        else:
            lo = mid
            sa = sm
    return lo, hi


def isolate_nonnegative_roots(p: ScalarPolynomial) -> list[RootInterval]:
    """All roots of p in [0, inf), rational ones exact, ordered ascending."""
    q_poly, factors = square_free_part(p)
    q = _primitive_int([Fraction(c) for c in q_poly.coeffs])
    if len(q) <= 1:
        return []
    denominator_bound = abs(q[-1])

    exact_roots: list[Fraction] = []
    work = q
    if work[0] == 0:
        exact_roots.append(Fraction(0))
        work = work[1:]

    # Bisection on Sturm counts.  If a midpoint lands exactly on a root, the
    # root is recorded, deflated out, and isolation restarts on the quotient.
    while True:
        intervals: list[tuple[Fraction, Fraction]] = []
        restart = False
        if len(work) > 1:
            chain = _sturm_chain(work)
            bound = _cauchy_bound(work)
            total = _count_in(chain, Fraction(0), bound)
            stack = [(Fraction(0), bound, total)] if total else []
            while stack:
                a, b, cnt = stack.pop()
                if cnt == 1:
                    intervals.append((a, b))
                    continue
                mid = (a + b) / 2
                if _sign_at(work, mid) == 0:
                    exact_roots.append(mid)
                    work = _deflate(work, mid)
                    restart = True
                    break
                left = _count_in(chain, a, mid)
                right = cnt - left
                if left:
                    stack.append((a, mid, left))
                if right:
                    stack.append((mid, b, right))
        if not restart:
            break

    results = [
        RootInterval(r, r, _multiplicity_exact(factors, r), r) for r in exact_roots
    ]
    # Rational roots have denominators dividing the leading coefficient, so
    # below width 1/(2L**2) an interval holds at most one such candidate.
    width_cap = Fraction(1, 2 * denominator_bound * denominator_bound)
    for a, b in intervals:
        a, b = _tighten(work, a, b, width_cap, exact_roots)
        if a == b:
            results.append(RootInterval(a, a, _multiplicity_exact(factors, a), a))
            continue
        candidate = simplest_rational_between(a, b)
        if _scaled_value_at(work, candidate.numerator, candidate.denominator) == 0:
            results.append(
                RootInterval(candidate, candidate, _multiplicity_exact(factors, candidate), candidate)
            )
        else:
            results.append(
                RootInterval(a, b, _multiplicity_interval(factors, a, b), None, tuple(work))
            )
    results.sort(key=lambda iv: iv.lo)

    # keep isolating intervals strictly disjoint
    for i in range(len(results) - 1):
        cur, nxt = results[i], results[i + 1]
        while cur.hi >= nxt.lo:
            if cur.exact_value is None:
                cur = _shrink_once(cur)
            elif nxt.exact_value is None:
                nxt = _shrink_once(nxt)
            else:
                raise InternalConsistencyError("duplicate exact roots")
            results[i], results[i + 1] = cur, nxt
    return results


def _shrink_once(iv: RootInterval) -> RootInterval:
    lo, hi = iv.lo, iv.hi
    mid = (lo + hi) / 2
    sm = _sign_at(iv.poly, mid)
    if sm == 0:
        return RootInterval(mid, mid, iv.multiplicity, mid)
    if _sign_at(iv.poly, lo) * sm < 0:
        return RootInterval(lo, mid, iv.multiplicity, None, iv.poly)
    return RootInterval(mid, hi, iv.multiplicity, None, iv.poly)


def refine_root(interval: RootInterval, target_width) -> RootInterval:
    """Bisect the isolating interval until hi - lo <= target_width."""
    target = Fraction(target_width)
    if target <= 0:
        raise InvalidParameterError("target width must be positive")
    if interval.exact_value is not None or interval.lo == interval.hi or not interval.poly:
        return interval
    lo, hi = interval.lo, interval.hi
    poly = interval.poly
    sa = _sign_at(poly, lo)
    while hi - lo > target:
        mid = (lo + hi) / 2
        sm = _sign_at(poly, mid)
        if sm == 0:
            return RootInterval(mid, mid, interval.multiplicity, mid)
        if sa * sm < 0:
            hi = mid
        else:
            lo = mid
            sa = sm
    return RootInterval(lo, hi, interval.multiplicity, None, poly)
