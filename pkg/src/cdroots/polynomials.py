"""Polynomials with Cayley-Dickson coefficients and their scalar companions.

Coefficients are stored in ascending order (constant term first).  Two kinds
of evaluation exist over an algebra: regular, where index k contributes
a_k * (lam ** k), and alternating, where index k contributes a_k times the
k-letter word ...conj(lam) lam conj(lam) lam.  Because conj(lam) * lam is the
scalar norm N, the alternating value collapses to E(N) + O(N) * lam with E
and O collecting the even- and odd-index coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    EXACT,
    Algebra,
    Element,
    Scalar,
    ToleranceContext,
    coerce_scalar,
    invert_scalar,
)
from .errors import (
    IncompatibleAlgebrasError,
    InternalConsistencyError,
    InvalidParameterError,
)


class Polynomial:
    """Polynomial over a Cayley-Dickson algebra, coefficients ascending.

    Trailing zero coefficients are trimmed on construction, so the degree is
    well defined; the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs=()):
        elems = []
        for c in coeffs:
            if isinstance(c, Element):
                if c.algebra != algebra:
                    raise IncompatibleAlgebrasError(
                        "coefficient belongs to a different algebra"
                    )
                elems.append(c)
            else:
                elems.append(algebra.from_scalar(coerce_scalar(c, algebra.mode)))
        while elems and all(v == 0 for v in elems[-1].coeffs):
            elems.pop()
        self.algebra = algebra
        self.coeffs = tuple(elems)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial(dim={self.algebra.dim}, coeffs={[list(c.coeffs) for c in self.coeffs]!r})"


class ScalarPolynomial:
    """Polynomial with scalar coefficients (ascending) in the norm variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Scalar) -> Scalar:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "ScalarPolynomial":
        return ScalarPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ScalarPolynomial") -> "ScalarPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ScalarPolynomial(tuple(x - y for x, y in zip(a, b)))

    def shifted_up(self) -> "ScalarPolynomial":
        """Multiply by the variable (prepend a zero coefficient)."""
        if not self.coeffs:
            return self
        return ScalarPolynomial((0,) + self.coeffs)

    def derivative(self) -> "ScalarPolynomial":
        return ScalarPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ScalarPolynomial({list(self.coeffs)!r})"


def _check_point(f: Polynomial, lam: Element) -> None:
    if lam.algebra != f.algebra:
        raise IncompatibleAlgebrasError("evaluation point is not in the polynomial's algebra")


def eval_regular(f: Polynomial, lam: Element) -> Element:
    """Sum of a_k * (lam ** k), the coefficient multiplying the power."""
    _check_point(f, lam)
    total = f.algebra.zero()
    pw = f.algebra.one()
    for k, a in enumerate(f.coeffs):
        if k:
            pw = lam * pw
        if not all(v == 0 for v in a.coeffs):
            total = total + a * pw
    return total


def eval_scalar_point(f: Polynomial, s: Scalar) -> Element:
    """Evaluate f, read as a polynomial in a scalar variable, at s."""
    acc = f.algebra.zero()
    for a in reversed(f.coeffs):
        acc = acc.scale(s) + a
    return acc


def eval_alternating(f: Polynomial, lam: Element) -> Element:
    """Alternating value E(N) + O(N) * lam with N = norm(lam)."""
    _check_point(f, lam)
    n_val = lam.norm()
    even, odd = even_odd_split(f)
    return eval_scalar_point(even, n_val) + eval_scalar_point(odd, n_val) * lam


def eval_alternating_literal(f: Polynomial, lam: Element) -> Element:
    """Slow oracle: build each alternating word by repeated multiplication.

    The k-letter word ends in lam and alternates leftwards; it is associated
    right-to-left.  Exists purely to cross-check eval_alternating.
    """
    _check_point(f, lam)
    lam_c = lam.conj()
    total = f.algebra.zero()
    word = f.algebra.one()
    for k, a in enumerate(f.coeffs):
        if k:
            word = (lam if k % 2 == 1 else lam_c) * word
        total = total + a * word
    return total


def even_odd_split(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Split into even- and odd-index coefficient polynomials.

    f is first zero-padded to odd degree 2k+1 so both halves have k+1 slots;
    the caller's polynomial is never mutated.
    """
    cs = list(f.coeffs)
    if not cs:
        cs = [f.algebra.zero()]
    if len(cs) % 2 == 1:
        cs.append(f.algebra.zero())
    return Polynomial(f.algebra, cs[0::2]), Polynomial(f.algebra, cs[1::2])


def norm_expand(g: Polynomial, ctx: ToleranceContext | None = None) -> ScalarPolynomial:
    """Scalar-coefficient expansion of conj(g) * g in the scalar variable.

    Coefficient k collects norm(a_{k/2}) for even k plus the scalar parts of
    the pair sums conj(a_i)*a_j + conj(a_j)*a_i over i + j = k, i < j.  Each
    pair sum is checked to be scalar; a failure means the coefficient algebra
    is broken, not that the input is bad.
    """
    ctx = g.algebra.tolerance if ctx is None else ctx
    cs = g.coeffs
    if not cs:
        return ScalarPolynomial(())
    zero = g.algebra.zero_scalar()
    top = len(cs) - 1
    out = [zero] * (2 * top + 1)
    for i in range(top + 1):
        out[2 * i] = out[2 * i] + cs[i].norm(ctx)
        for j in range(i + 1, top + 1):
            pair = cs[i].conj() * cs[j] + cs[j].conj() * cs[i]
            if ctx.is_exact:
                bad = any(v != 0 for v in pair.coeffs[1:])
            else:
                scale = 2.0 * g.algebra.dim * float(cs[i].max_abs()) * float(cs[j].max_abs())
                bad = any(not ctx.is_zero(v, scale) for v in pair.coeffs[1:])
            if bad:
                raise InternalConsistencyError(
                    "conj(a_i)*a_j + conj(a_j)*a_i has a non-scalar part"
                )
            out[i + j] = out[i + j] + pair.coeffs[0]
    return ScalarPolynomial(out)


def alternating_friend(f: Polynomial, gamma: Scalar) -> Polynomial:
    """Companion polynomial over the doubled algebra CD(A, gamma).

    Even coefficients map to conj(a_{2i}) / gamma**i in the A-part; odd ones
    to (conj(a_{2i+1}) / gamma**(i+1)) * v, realized as the upper half of the
    doubled coefficient vector.  Its regular values on A*v mirror the
    alternating values of f on A (conjugated).
    """
    gamma = coerce_scalar(gamma, f.algebra.mode)
    if gamma == 0:
        raise InvalidParameterError("doubling parameter must be nonzero")
    alg = f.algebra
    doubled = Algebra(alg.gammas + (gamma,), alg.mode, alg.tolerance)
    half = alg.dim
    zeros = (alg.zero_scalar(),) * half
    inv_gamma = invert_scalar(gamma)
    out = []
    for k, a in enumerate(f.coeffs):
        i = k // 2
        if k % 2 == 0:
            factor = inv_gamma**i
            scaled = tuple(factor * v for v in a.conj().coeffs)
            out.append(Element(doubled, scaled + zeros))
        else:
            factor = inv_gamma ** (i + 1)
            scaled = tuple(factor * v for v in a.conj().coeffs)
            out.append(Element(doubled, zeros + scaled))
    return Polynomial(doubled, out)


def decompose_doubling(h: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Unique (f, g) over the undoubled algebra with h = friend(f) + friend(g)*v.

    Inverts the friend construction coefficient by coefficient: writing
    h_k = u_k + w_k*v, even k = 2i gives f_k = gamma**i * conj(u_k) and
    g_k = gamma**i * conj(w_k); odd k = 2i+1 gives f_k = gamma**(i+1) *
    conj(w_k) and g_k = gamma**i * conj(u_k).  Guarded by the recompose
    round-trip in the test suite.
    """
    big = h.algebra
    if big.dim == 1:
        raise InvalidParameterError("cannot decompose over a dim-1 algebra")
    alg = Algebra(big.gammas[:-1], big.mode, big.tolerance)
    gamma = big.gammas[-1]
    half = alg.dim

    def _conj_half(vals):
        return (vals[0],) + tuple(-v for v in vals[1:])

    f_coeffs = []
    g_coeffs = []
    for k, c in enumerate(h.coeffs):
        u = _conj_half(c.coeffs[:half])
        w = _conj_half(c.coeffs[half:])
        i = k // 2
        gi = gamma**i
        if k % 2 == 0:
            f_coeffs.append(Element(alg, tuple(gi * v for v in u)))
            g_coeffs.append(Element(alg, tuple(gi * v for v in w)))
        else:
            gj = gamma ** (i + 1)
            f_coeffs.append(Element(alg, tuple(gj * v for v in w)))
            g_coeffs.append(Element(alg, tuple(gi * v for v in u)))
    return Polynomial(alg, f_coeffs), Polynomial(alg, g_coeffs)


def recompose(f: Polynomial, g: Polynomial, gamma: Scalar) -> Polynomial:
    """friend(f) + friend(g)*v over the doubled algebra."""
    if f.algebra != g.algebra:
        raise IncompatibleAlgebrasError("components live in different algebras")
    ff = alternating_friend(f, gamma)
    gg = alternating_friend(g, gamma)
    doubled = ff.algebra
    v = doubled.basis(doubled.dim // 2)
    n = max(len(ff.coeffs), len(gg.coeffs))
    out = []
    for k in range(n):
        a = ff.coeffs[k] if k < len(ff.coeffs) else doubled.zero()
        b = gg.coeffs[k] if k < len(gg.coeffs) else doubled.zero()
        out.append(a + b * v)
    return Polynomial(doubled, out)
