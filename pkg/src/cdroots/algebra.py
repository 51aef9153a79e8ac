"""Cayley-Dickson algebras: construction, element arithmetic, norm and trace.

An algebra is described by its tower of doubling parameters ``gammas``; an
n-step tower gives a 2**n dimensional algebra over the base field.  Elements
are coefficient vectors over either exact rationals (``int`` / ``Fraction``)
or 64-bit floats; the two scalar modes never mix silently.

Multiplication applies the doubling rule

    (a, b) * (c, d) = (a*c + gamma * conj(d)*b,  d*a + b*conj(c))

recursively to the two halves of the coefficient vector.  Bit k of a basis
index set means the element lies in the v-part of the (k+1)-th doubling
counted from the innermost one, so e0 = 1 and e_{dim/2} is the outermost
doubling unit.  Other sources permute or conjugate this rule differently;
multiplication tables only agree with sources that use this exact convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IncompatibleAlgebrasError,
    InternalConsistencyError,
    InvalidParameterError,
    NotInvertibleError,
    ScalarModeError,
)

EXACT = "exact"
FLOAT = "float"

#: A base-field element: exact rational (int or Fraction) or a double.
Scalar = int | Fraction | float

DEFAULT_ABS_EPSILON = 1e-12
DEFAULT_REL_EPSILON = 1e-9


def coerce_scalar(value: Scalar, mode: str) -> Scalar:
    """Validate ``value`` for ``mode`` and return its canonical form.

    Exact mode accepts ints and Fractions (integral Fractions collapse to
    int); float mode accepts ints and floats.  Anything else is a mode
    mixing error, never a silent conversion.
    """
    if mode == EXACT:
        if isinstance(value, Fraction):
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, int):
            return value
        raise ScalarModeError(f"exact mode requires int or Fraction scalars, got {value!r}")
    if isinstance(value, float):
        return value
    if isinstance(value, int):
        return float(value)
    raise ScalarModeError(f"float mode requires int or float scalars, got {value!r}")


def invert_scalar(value: Scalar) -> Scalar:
    """Multiplicative inverse of a nonzero scalar, staying in its mode."""
    if value == 0:
        raise NotInvertibleError("scalar 0 has no inverse")
    if isinstance(value, float):
        return 1.0 / value
    inv = Fraction(1, 1) / Fraction(value)
    return inv.numerator if inv.denominator == 1 else inv


@dataclass(frozen=True)
class ToleranceContext:
    """Zero-test policy: |x| <= abs_epsilon + rel_epsilon * scale.

    Exact mode uses both epsilons 0, making every zero test exact.  The
    scale is supplied per call site (typically a magnitude bound of the
    inputs that produced x).
    """

    abs_epsilon: float = 0.0
    rel_epsilon: float = 0.0

    def __post_init__(self) -> None:
        if self.abs_epsilon < 0 or self.rel_epsilon < 0:
            raise InvalidParameterError("tolerances must be nonnegative")

    @classmethod
    def exact(cls) -> "ToleranceContext":
        return cls(0.0, 0.0)

    @classmethod
    def for_floats(
        cls,
        abs_epsilon: float = DEFAULT_ABS_EPSILON,
        rel_epsilon: float = DEFAULT_REL_EPSILON,
    ) -> "ToleranceContext":
        return cls(abs_epsilon, rel_epsilon)

    @classmethod
    def default_for(cls, mode: str) -> "ToleranceContext":
        return cls.exact() if mode == EXACT else cls.for_floats()

    @property
    def is_exact(self) -> bool:
        return self.abs_epsilon == 0.0 and self.rel_epsilon == 0.0

    def is_zero(self, value: Scalar, scale: Scalar = 0) -> bool:
        if self.is_exact:
            return value == 0
        return abs(value) <= self.abs_epsilon + self.rel_epsilon * float(scale)


# -- raw coefficient-vector kernels ------------------------------------------
#
# These operate on plain tuples so the recursion carries no object overhead.


def _conj_vec(v: tuple) -> tuple:
    return (v[0],) + tuple(-c for c in v[1:])


def _mul_vec(x: tuple, y: tuple, gammas: tuple) -> tuple:
    n = len(gammas)
    if n == 0:
        return (x[0] * y[0],)
    if n == 1:
        # Scalars are self-conjugate, so the doubling rule collapses to this.
        g = gammas[0]
        x0, x1 = x
        y0, y1 = y
        return (x0 * y0 + g * (y1 * x1), y1 * x0 + x1 * y0)
    g = gammas[-1]
    inner = gammas[:-1]
    h = 1 << (n - 1)
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = _mul_vec(a, c, inner)
    db = _mul_vec(_conj_vec(d), b, inner)
    da = _mul_vec(d, a, inner)
    bc = _mul_vec(b, _conj_vec(c), inner)
    low = tuple(s + g * t for s, t in zip(ac, db))
    high = tuple(s + t for s, t in zip(da, bc))
    return low + high


class Algebra:
    """Descriptor of one Cayley-Dickson tower; factory for its elements."""

    __slots__ = ("gammas", "mode", "tolerance", "dim")

    def __init__(
        self,
        gammas=(),
        mode: str = EXACT,
        tolerance: ToleranceContext | None = None,
    ):
        if mode not in (EXACT, FLOAT):
            raise InvalidParameterError(f"unknown scalar mode {mode!r}")
        gs = tuple(coerce_scalar(g, mode) for g in gammas)
        if any(g == 0 for g in gs):
            raise InvalidParameterError("every doubling parameter must be nonzero")
        if tolerance is None:
            tolerance = ToleranceContext.default_for(mode)
        elif mode == EXACT and not tolerance.is_exact:
            raise InvalidParameterError("exact mode requires zero tolerances")
        self.gammas = gs
        self.mode = mode
        self.tolerance = tolerance
        self.dim = 1 << len(gs)

    @property
    def division_certified(self) -> bool:
        """True when "dim <= 8 and all gammas negative" certifies a division algebra.

        This is a sufficient criterion (anisotropic multiplicative norm over
        the rationals or reals), not a full decision procedure.
        """
        return self.dim <= 8 and all(g < 0 for g in self.gammas)

    def zero_scalar(self) -> Scalar:
        return 0 if self.mode == EXACT else 0.0

    def element(self, coeffs) -> "Element":
        return Element(self, coeffs)

    def zero(self) -> "Element":
        return Element(self, (self.zero_scalar(),) * self.dim)

    def one(self) -> "Element":
        return self.basis(0)

    def basis(self, index: int) -> "Element":
        if not 0 <= index < self.dim:
            raise InvalidParameterError(f"basis index {index} out of range [0, {self.dim})")
        z, o = (0, 1) if self.mode == EXACT else (0.0, 1.0)
        return Element(self, tuple(o if i == index else z for i in range(self.dim)))

    def from_scalar(self, value: Scalar) -> "Element":
        z = self.zero_scalar()
        return Element(self, (value,) + (z,) * (self.dim - 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.gammas == other.gammas and self.mode == other.mode

    def __hash__(self) -> int:
        return hash((self.gammas, self.mode))

    def __repr__(self) -> str:
        return f"Algebra(gammas={list(self.gammas)!r}, mode={self.mode!r})"


class Element:
    """One hypercomplex number: an immutable coefficient vector in its algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs):
        cs = tuple(coerce_scalar(c, algebra.mode) for c in coeffs)
        if len(cs) != algebra.dim:
            raise InvalidParameterError(
                f"expected {algebra.dim} coefficients, got {len(cs)}"
            )
        self.algebra = algebra
        self.coeffs = cs

    # construction from known-good data, skipping validation on hot paths
    @classmethod
    def _raw(cls, algebra: Algebra, coeffs: tuple) -> "Element":
        el = object.__new__(cls)
        object.__setattr__(el, "algebra", algebra)
        object.__setattr__(el, "coeffs", coeffs)
        return el

    def __setattr__(self, name, value):
        if hasattr(self, "coeffs"):
            raise AttributeError("Element is immutable")
        object.__setattr__(self, name, value)

    def _peer(self, other: "Element") -> "Element":
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise IncompatibleAlgebrasError(
                f"operands live in different algebras: {self.algebra!r} vs {other.algebra!r}"
            )
        return other

    # -- linear operations ----------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._peer(other)
        return Element._raw(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._peer(other)
        return Element._raw(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element._raw(self.algebra, tuple(-a for a in self.coeffs))

    def scale(self, s: Scalar) -> "Element":
        s = coerce_scalar(s, self.algebra.mode)
        return Element._raw(self.algebra, tuple(s * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._peer(other)
            return Element._raw(
                self.algebra, _mul_vec(self.coeffs, other.coeffs, self.algebra.gammas)
            )
        if isinstance(other, (int, Fraction, float)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, float)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    def max_abs(self) -> Scalar:
        return max(abs(c) for c in self.coeffs)

    def is_zero(self, ctx: ToleranceContext | None = None, scale: Scalar = 1) -> bool:
        ctx = self.algebra.tolerance if ctx is None else ctx
        if ctx.is_exact:
            return all(c == 0 for c in self.coeffs)
        return all(ctx.is_zero(c, scale) for c in self.coeffs)

    def approx_eq(self, other: "Element", ctx: ToleranceContext | None = None) -> bool:
        self._peer(other)
        ctx = self.algebra.tolerance if ctx is None else ctx
        scale = max(self.max_abs(), other.max_abs(), 1)
        return all(ctx.is_zero(a - b, scale) for a, b in zip(self.coeffs, other.coeffs))

    # -- algebra structure ------------------------------------------------

    def conj(self) -> "Element":
        return Element._raw(self.algebra, _conj_vec(self.coeffs))

    def trace(self) -> Scalar:
        return 2 * self.coeffs[0]

    def norm(self, ctx: ToleranceContext | None = None) -> Scalar:
        """conj(a) * a, checked to be scalar, returned as its e0 component."""
        ctx = self.algebra.tolerance if ctx is None else ctx
        prod = _mul_vec(_conj_vec(self.coeffs), self.coeffs, self.algebra.gammas)
        if ctx.is_exact:
            bad = any(c != 0 for c in prod[1:])
        else:
            m = float(self.max_abs())
            scale = self.algebra.dim * m * m
            bad = any(not ctx.is_zero(c, scale) for c in prod[1:])
        if bad:
            raise InternalConsistencyError(
                "conj(a) * a has a non-scalar part; multiplication is inconsistent"
            )
        return prod[0]

    def inverse(self, ctx: ToleranceContext | None = None) -> "Element":
        """conj(a) / norm(a).

        This is the norm-inverse.  For dim >= 16 it need not be a two-sided
        multiplicative inverse on zero divisors; solver use is gated to
        division-certified algebras.
        """
        ctx = self.algebra.tolerance if ctx is None else ctx
        n = self.norm(ctx)
        if ctx.is_exact:
            zero = n == 0
        else:
            m = float(self.max_abs())
            zero = ctx.is_zero(n, self.algebra.dim * m * m)
        if zero:
            raise NotInvertibleError("element has (tolerance-)zero norm")
        return self.conj().scale(invert_scalar(n))

    def power(self, k: int) -> "Element":
        """k-th power by iterated left multiplication a*(a*(...))."""
        if k < 0:
            raise InvalidParameterError("power requires a nonnegative exponent")
        result = self.algebra.one()
        for _ in range(k):
            result = self * result
        return result

    def __pow__(self, k: int) -> "Element":
        return self.power(k)

    def left_mul_matrix(self) -> list[list[Scalar]]:
        """Matrix M with M @ vec(x) = vec(self * x); column j is self * e_j."""
        cols = [(self * self.algebra.basis(j)).coeffs for j in range(self.algebra.dim)]
        return [list(row) for row in zip(*cols)]

    def __repr__(self) -> str:
        return f"Element({list(self.coeffs)!r})"
