"""Global and local delta-invariant bounds from parametric decompositions.

For a flag curve F with log discrepancy A(F), the expected vanishing order
S(F) = (1/norm) * integral of P(v)^2 over [0, tau] gives the upper bound
A(F)/S(F) for delta. For a point O on F, the localized expected order
S(W; O) = (2/norm) * integral of h(v), with
h(v) = (P.F)(v) * (N.F)_O(v) + (P.F)(v)^2 / 2, gives the lower-bound ratio
A_O / S(W; O) where A_O = 1 - different(O). A flag certifies delta when every
point ratio is at least A(F)/S(F).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import PointSpec, SurfaceConfig
from .errors import NotCertified
from .poly import PiecewisePoly, Poly
from .rationals import format_rational
from .zariski import Decomposition, parametric_decompose


@dataclass(frozen=True)
class PointRow:
    """Local bound at one point class of a flag."""

    point_id: str
    a_local: Fraction
    s_w: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.a_local / self.s_w


@dataclass(frozen=True, eq=False)
class FlagReport:
    """Upper and lower delta bounds extracted from a single flag."""

    config: SurfaceConfig
    flag: str
    a_flag: Fraction
    s_flag: Fraction
    point_rows: tuple[PointRow, ...]

    @property
    def upper_delta(self) -> Fraction:
        return self.a_flag / self.s_flag

    @property
    def lower_delta(self) -> Fraction:
        return min([self.upper_delta] + [row.ratio for row in self.point_rows])

    @property
    def certified_equal(self) -> bool:
        """True when every point ratio is at least the flag's upper bound."""
        return all(row.ratio >= self.upper_delta for row in self.point_rows)

    def render(self) -> str:
        lines = [
            f"flag {self.flag} on {self.config.name}:",
            f"  A = {format_rational(self.a_flag)}, "
            f"S = {format_rational(self.s_flag)}, "
            f"A/S = {format_rational(self.upper_delta)}",
        ]
        for row in self.point_rows:
            lines.append(
                f"  point {row.point_id}: A_O = {format_rational(row.a_local)}, "
                f"S(W;O) = {format_rational(row.s_w)}, "
                f"ratio = {format_rational(row.ratio)}"
            )
        lines.append(
            f"  lower = {format_rational(self.lower_delta)}"
            + (" (certifies A/S)" if self.certified_equal else "")
        )
        return "\n".join(lines)


def s_flag(
    config: SurfaceConfig, flag: str, decomp: Decomposition | None = None
) -> Fraction:
    """Expected vanishing order S(flag) = (1/norm) * int_0^tau P(v)^2 dv."""
    if decomp is None:
        decomp = parametric_decompose(config, flag)
    p_sq = decomp.p_sq_piecewise()
    return p_sq.integrate(0, decomp.tau) / config.norm

def local_h(decomp: Decomposition, point: PointSpec) -> PiecewisePoly:
    """The integrand h(v) = (P.F)(N.F)_O + (P.F)^2/2 at one point class."""
    bps = [decomp.chambers[0].lo] + [ch.hi for ch in decomp.chambers]
    pieces = []
    for ch in decomp.chambers:
        p_dot = ch.p_dot[decomp.flag]
        n_dot = sum(
            (ch.n_coeffs[name] * point.incidences.get(name, 0) for name in ch.support),
            start=Poly([0]),
        )
        pieces.append(p_dot * n_dot + p_dot * p_dot * Fraction(1, 2))
    return PiecewisePoly(bps, pieces)


def s_w_point(
    config: SurfaceConfig,
    flag: str,
    point: PointSpec | str,
    decomp: Decomposition | None = None,
) -> Fraction:
    """Localized expected order S(W; O) = (2/norm) * int_0^tau h(v) dv."""
    if decomp is None:
        decomp = parametric_decompose(config, flag)
    if isinstance(point, str):
        point = config.point(point)
    h = local_h(decomp, point)
    return 2 * h.integrate(0, decomp.tau) / config.norm


def flag_report(
    config: SurfaceConfig,
    flag: str,
    points: Sequence[PointSpec | str] | None = None,
    decomp: Decomposition | None = None,
    pullback_coeff=None,
) -> FlagReport:
    """Full upper/lower bound report for one flag.

    `points` defaults to every point class of the config that lies on the
    flag curve. The flag's log discrepancy comes from the config (default 1
    for curves on the surface itself, the stored value for exceptional or
    orbifold flags).
    """
    if decomp is None:
        decomp = parametric_decompose(config, flag, pullback_coeff=pullback_coeff)
    if points is None:
        points = config.points_on(flag)
    rows = []
    for point in points:
        if isinstance(point, str):
            point = config.point(point)
        a_local = 1 - point.different
        s_w = s_w_point(config, flag, point, decomp=decomp)
        rows.append(PointRow(point.id, a_local, s_w))
    return FlagReport(
        config=config,
        flag=flag,
        a_flag=config.discrepancy_of(flag),
        s_flag=s_flag(config, flag, decomp=decomp),
        point_rows=tuple(rows),
    )


def certify_minimum(reports: Sequence[FlagReport]) -> Fraction:
    """The certified delta from a complete family of flag reports.

    The answer is the smallest upper bound A/S among the flags. It is only
    returned when that flag's point ratios all reach the bound (so the upper
    bound is attained from below) and every other flag's lower bound clears
    it; otherwise NotCertified is raised.
    """
    if not reports:
        raise NotCertified("no flag reports supplied")
    best = min(reports, key=lambda r: r.upper_delta)
    value = best.upper_delta
    for report in reports:
        if report.upper_delta == value and report.certified_equal:
            break
    else:
        raise NotCertified(
            f"no flag with A/S = {format_rational(value)} has matching point bounds"
        )
    for report in reports:
        if report.lower_delta < value:
            raise NotCertified(
                f"flag {report.flag} on {report.config.name} only certifies "
                f"{format_rational(report.lower_delta)} < {format_rational(value)}"
            )
    return value
