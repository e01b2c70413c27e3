"""Exact univariate polynomials and piecewise polynomials over the rationals.

These carry all the parametric data of the decomposition sweep: negative-part
coefficients (affine in the sweep parameter v), volumes P(v)^2 (quadratic),
and the local h(v) integrands. Everything is exact; the only floating point
in the package lives in the oracle's quadrature cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import IrrationalRoot, OutOfDomain
from .rationals import RatLike, format_rational, parse_rational

_ZERO = Fraction(0)


def _as_fraction(x: RatLike) -> Fraction:
    return x if isinstance(x, Fraction) else parse_rational(x)


@dataclass(frozen=True)
class Poly:
    """A polynomial with Fraction coefficients in ascending degree order.

    Trailing zeros are stripped; the zero polynomial has an empty tuple.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, v: RatLike) -> Fraction:
        v = _as_fraction(v)
        result = _ZERO
        for c in reversed(self.coeffs):
            result = result * v + c
        return result

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else _ZERO

    def __add__(self, other: "Poly | RatLike") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly | RatLike") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: RatLike) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: "Poly | RatLike") -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def antiderivative(self) -> "Poly":
        """The antiderivative with zero constant term."""
        return Poly([_ZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def integrate(self, a: RatLike, b: RatLike) -> Fraction:
        anti = self.antiderivative()
        return anti(b) - anti(a)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[RatLike]) -> "Poly":
        return cls(items)

    def render(self, var: str = "v") -> str:
        """Human-readable form like "1 - 2*v^2"."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                term = mag
            else:
                pow_str = var if i == 1 else f"{var}^{i}"
                term = pow_str if abs(c) == 1 else f"{mag}*{pow_str}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.render()})"


def _as_poly(x: "Poly | RatLike") -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([_as_fraction(x)])


def _sqrt_exact(x: Fraction) -> Fraction | None:
    """The exact rational square root of x >= 0, or None if irrational."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def min_positive_root(p: Poly, lo: RatLike) -> Fraction | None:
    """Smallest rational root of p that is >= lo, for deg(p) <= 2.

    Returns None when no real root >= lo exists. Raises IrrationalRoot when a
    real root >= lo exists but is not rational: breakpoints are required to be
    exact, never approximated.
    """
    lo = _as_fraction(lo)
    if p.degree > 2:
        raise ValueError(f"min_positive_root supports degree <= 2, got {p.degree}")
    if p.is_zero():
        return lo  # every point is a root
    if p.degree <= 0:
        return None
    if p.degree == 1:
        b, a = p.coeff(0), p.coeff(1)
        root = -b / a
        return root if root >= lo else None
    c, b, a = p.coeff(0), p.coeff(1), p.coeff(2)
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    sq = _sqrt_exact(disc)
    if sq is not None:
        r1 = (-b - sq) / (2 * a)
        r2 = (-b + sq) / (2 * a)
        candidates = sorted(r for r in (r1, r2) if r >= lo)
        return candidates[0] if candidates else None
    # Both roots are irrational conjugates; decide exactly whether either is
    # >= lo by comparing sqrt(disc) against +-(2*a*lo + b).
    t = 2 * a * lo + b
    if a > 0:
        # larger root (-b + sqrt)/2a >= lo  <=>  sqrt(disc) >= t
        exists = t <= 0 or disc >= t * t
    else:
        # roots in decreasing order; larger root is (-b - sqrt)/2a
        # (-b - sqrt)/(2a) >= lo  <=>  -sqrt <= t  <=>  sqrt >= -t
        exists = t >= 0 or disc >= t * t
    if exists:
        raise IrrationalRoot(f"irrational root of {p.render()} at or beyond {lo}")
    return None


def nonnegative_on(p: Poly, lo: RatLike, hi: RatLike) -> bool:
    """Exact check that a degree <= 2 polynomial is >= 0 on [lo, hi]."""
    lo, hi = _as_fraction(lo), _as_fraction(hi)
    if p.degree > 2:
        raise ValueError("nonnegative_on supports degree <= 2 only")
    if p(lo) < 0 or p(hi) < 0:
        return False
    a = p.coeff(2)
    if a > 0:
        vertex = -p.coeff(1) / (2 * a)
        if lo < vertex < hi and p(vertex) < 0:
            return False
    return True


@dataclass(frozen=True)
class PiecewisePoly:
    """Piecewise polynomial on consecutive intervals [b_i, b_{i+1}].

    When `continuous` is set, adjacent pieces must agree exactly at the
    shared breakpoints (asserted at construction and on evaluation).
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Poly, ...]
    continuous: bool = True

    def __init__(
        self,
        breakpoints: Iterable[RatLike],
        pieces: Iterable[Poly | RatLike],
        continuous: bool = True,
    ):
        bps = tuple(_as_fraction(b) for b in breakpoints)
        ps = tuple(_as_poly(p) for p in pieces)
        if len(bps) < 2 or len(ps) != len(bps) - 1:
            raise ValueError("need k+1 breakpoints for k >= 1 pieces")
        if any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        if continuous:
            for i in range(len(ps) - 1):
                left, right = ps[i](bps[i + 1]), ps[i + 1](bps[i + 1])
                if left != right:
                    raise ValueError(
                        f"discontinuity at {format_rational(bps[i + 1])}: "
                        f"{format_rational(left)} != {format_rational(right)}"
                    )
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", ps)
        object.__setattr__(self, "continuous", continuous)

    @property
    def lo(self) -> Fraction:
        return self.breakpoints[0]

    @property
    def hi(self) -> Fraction:
        return self.breakpoints[-1]

    def _piece_index(self, v: Fraction) -> int:
        """Index of the governing piece; interior breakpoints go left."""
        if v < self.lo or v > self.hi:
            raise OutOfDomain(
                f"{format_rational(v)} outside "
                f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"
            )
        if v == self.lo:
            return 0
        for i in range(1, len(self.breakpoints)):
            if v <= self.breakpoints[i]:
                return i - 1
        raise AssertionError("unreachable")

    def eval(self, v: RatLike) -> Fraction:
        v = _as_fraction(v)
        i = self._piece_index(v)
        value = self.pieces[i](v)
        if self.continuous and v == self.breakpoints[i + 1] and i + 1 < len(self.pieces):
            assert self.pieces[i + 1](v) == value, "continuity violated"
        return value

    __call__ = eval

    def integrate(self, a: RatLike, b: RatLike) -> Fraction:
        a, b = _as_fraction(a), _as_fraction(b)
        if a > b:
            raise ValueError("integration bounds out of order")
        if a < self.lo or b > self.hi:
            raise OutOfDomain(
                f"[{format_rational(a)}, {format_rational(b)}] outside "
                f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"
            )
        total = _ZERO
        for i, piece in enumerate(self.pieces):
            seg_lo = max(a, self.breakpoints[i])
            seg_hi = min(b, self.breakpoints[i + 1])
            if seg_lo < seg_hi:
                total += piece.integrate(seg_lo, seg_hi)
        return total

    def _align(self, other: "PiecewisePoly") -> tuple[tuple[Fraction, ...], "PiecewisePoly", "PiecewisePoly"]:
        if (self.lo, self.hi) != (other.lo, other.hi):
            raise ValueError("piecewise domains differ")
        merged = tuple(sorted(set(self.breakpoints) | set(other.breakpoints)))
        return merged, self.refine(merged), other.refine(merged)

    def refine(self, breakpoints: Sequence[RatLike]) -> "PiecewisePoly":
        """The same function on a finer breakpoint grid."""
        bps = [_as_fraction(b) for b in breakpoints]
        if bps[0] != self.lo or bps[-1] != self.hi or not set(self.breakpoints) <= set(bps):
            raise ValueError("refinement must contain the original breakpoints")
        pieces = []
        for i in range(len(bps) - 1):
            mid = (bps[i] + bps[i + 1]) / 2
            pieces.append(self.pieces[self._piece_index(mid)])
        return PiecewisePoly(bps, pieces, self.continuous)

    def _zip(self, other: "PiecewisePoly | Poly | RatLike", fn: Callable[[Poly, Poly], Poly]) -> "PiecewisePoly":
        if not isinstance(other, PiecewisePoly):
            other = PiecewisePoly(self.breakpoints, [_as_poly(other)] * len(self.pieces))
        merged, a, b = self._align(other)
        pieces = [fn(pa, pb) for pa, pb in zip(a.pieces, b.pieces)]
        return PiecewisePoly(merged, pieces, continuous=a.continuous and b.continuous)

    def __add__(self, other: "PiecewisePoly | Poly | RatLike") -> "PiecewisePoly":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "PiecewisePoly | Poly | RatLike") -> "PiecewisePoly":
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other: "PiecewisePoly | Poly | RatLike") -> "PiecewisePoly":
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "breakpoints": [format_rational(b) for b in self.breakpoints],
            "pieces": [p.to_strings() for p in self.pieces],
        }

    @classmethod
    def from_json(cls, data: dict, continuous: bool = True) -> "PiecewisePoly":
        return cls(
            [parse_rational(b) for b in data["breakpoints"]],
            [Poly.from_strings(p) for p in data["pieces"]],
            continuous=continuous,
        )

    def render(self, var: str = "v") -> str:
        rows = []
        for i, piece in enumerate(self.pieces):
            lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
            rows.append(
                f"{piece.render(var)} on [{format_rational(lo)}, {format_rational(hi)}]"
            )
        return "; ".join(rows)

    def __repr__(self) -> str:
        return f"PiecewisePoly({self.render()})"


def integrate(pp: PiecewisePoly, a: RatLike, b: RatLike) -> Fraction:
    """Exact integral of a piecewise polynomial over [a, b]."""
    return pp.integrate(a, b)


def eval_at(pp: PiecewisePoly, v: RatLike) -> Fraction:
    """Value of the governing piece at v (left piece at breakpoints)."""
    return pp.eval(v)
