"""Parametric Zariski decompositions of anti_k - v*F, exactly over Q.

For a flag curve F the divisor D(v) = anti_k - v*F is decomposed as
D = P(v) + N(v) with P(v) nef, N(v) supported on a negative-definite set of
curves orthogonal to P(v). The support is locally constant in v, so the
decomposition is a finite list of chambers on which every negative-part
coefficient is an affine polynomial and P(v)^2 is a quadratic. The sweep
starts at v = 0 and pivots the support at each breakpoint until P^2 hits 0
at the pseudoeffective threshold tau.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .config import DivisorClass, PointSpec, SurfaceConfig
from .errors import IrrationalRoot, NotPseudoEffective, OutOfDomain, SchemaError
from .linalg import is_negative_definite, solve
from .poly import PiecewisePoly, Poly, min_positive_root, nonnegative_on
from .rationals import RatLike, format_rational, parse_rational

_MAX_PIVOTS = 4096
_MAX_CHAMBERS = 64


@dataclass(frozen=True)
class NegativePart:
    """Support and coefficients of the negative part at a single divisor."""

    support: tuple[str, ...]
    coeffs: Mapping[str, Fraction]


@dataclass(frozen=True)
class Chamber:
    """One maximal interval [lo, hi] with constant negative-part support.

    `n_coeffs` holds the affine coefficient of each support curve,
    `p_sq` the quadratic P(v)^2, and `p_dot` the affine P(v).C for every
    curve C of the configuration. `n_dot_flag` records, for each point class
    on the flag, the affine restriction (N(v).F) at that point, i.e. the sum
    of support coefficients weighted by local intersection multiplicities.
    """

    lo: Fraction
    hi: Fraction
    support: tuple[str, ...]
    n_coeffs: Mapping[str, Poly]
    p_sq: Poly
    p_dot: Mapping[str, Poly]
    n_dot_flag: Mapping[str, Poly]

    def contains(self, v: Fraction) -> bool:
        return self.lo <= v <= self.hi


@dataclass(frozen=True, eq=False)
class Decomposition:
    """All chambers of v -> Zariski(anti_k - v*flag) on [0, tau]."""

    config: SurfaceConfig
    flag: str
    chambers: tuple[Chamber, ...]
    tau: Fraction

    def chamber_at(self, v: RatLike) -> Chamber:
        v = parse_rational(v)
        if not 0 <= v <= self.tau:
            raise OutOfDomain(
                f"v = {format_rational(v)} outside [0, {format_rational(self.tau)}]"
            )
        for ch in self.chambers:
            if v <= ch.hi:
                return ch
        return self.chambers[-1]

    def negative_at(self, v: RatLike) -> NegativePart:
        v = parse_rational(v)
        ch = self.chamber_at(v)
        coeffs = {name: p(v) for name, p in ch.n_coeffs.items()}
        coeffs = {name: c for name, c in coeffs.items() if c != 0}
        return NegativePart(tuple(sorted(coeffs)), coeffs)

    def p_sq_piecewise(self) -> PiecewisePoly:
        bps = [self.chambers[0].lo] + [ch.hi for ch in self.chambers]
        return PiecewisePoly(bps, [ch.p_sq for ch in self.chambers])

    def p_dot_flag_piecewise(self) -> PiecewisePoly:
        bps = [self.chambers[0].lo] + [ch.hi for ch in self.chambers]
        return PiecewisePoly(bps, [ch.p_dot[self.flag] for ch in self.chambers])


def negative_part_at(config: SurfaceConfig, d: DivisorClass) -> NegativePart:
    """Zariski negative part of a single divisor class.

    Iteratively enlarges the support by every curve the current residual
    meets negatively, re-solving the Gram system each round, until the
    residual is nef against all curves and all coefficients are nonnegative.
    """
    names = config.curve_names
    d_dot = {name: intersect_row(config, d, name) for name in names}
    support: list[str] = []
    seen: set[tuple[str, ...]] = set()
    for _ in range(_MAX_PIVOTS):
        coeffs = _solve_support(config, support, {n: d_dot[n] for n in support})
        if coeffs is None or any(c < 0 for c in coeffs.values()):
            if coeffs is not None:
                support = [n for n in support if coeffs[n] > 0]
            else:
                raise NotPseudoEffective(
                    f"{d.coeffs} has no Zariski decomposition on {config.name}"
                )
            key = tuple(support)
            if key in seen:
                raise NotPseudoEffective(
                    f"{d.coeffs} has no Zariski decomposition on {config.name}"
                )
            seen.add(key)
            continue
        violated = [
            name
            for name in names
            if name not in coeffs
            and d_dot[name] - sum(c * _gram(config, n, name) for n, c in coeffs.items()) < 0
        ]
        if not violated:
            gram_s = [[_gram(config, a, b) for b in support] for a in support]
            if not is_negative_definite(gram_s):
                raise NotPseudoEffective(
                    f"support {tuple(support)} is not negative definite on {config.name}"
                )
            coeffs = {n: c for n, c in coeffs.items() if c > 0}
            return NegativePart(tuple(sorted(coeffs)), coeffs)
        support = support + violated
        key = tuple(support)
        if key in seen:
            raise NotPseudoEffective(
                f"{d.coeffs} has no Zariski decomposition on {config.name}"
            )
        seen.add(key)
    raise NotPseudoEffective(f"pivoting did not converge on {config.name}")


def intersect_row(config: SurfaceConfig, d: DivisorClass, curve: str) -> Fraction:
    j = config.index(curve)
    return sum(c * config.gram[i][j] for i, c in enumerate(d.coeffs) if c != 0)


def _gram(config: SurfaceConfig, a: str, b: str) -> Fraction:
    return config.gram[config.index(a)][config.index(b)]


def _solve_support(
    config: SurfaceConfig, support: Sequence[str], rhs: Mapping[str, Fraction]
) -> dict[str, Fraction] | None:
    if not support:
        return {}
    matrix = [[_gram(config, a, b) for b in support] for a in support]
    try:
        sol = solve(matrix, [[rhs[a] for a in support]])
    except ValueError:
        return None
    return {name: sol[0][i] for i, name in enumerate(support)}


# -- parametric sweep ---------------------------------------------------


def parametric_decompose(
    config: SurfaceConfig,
    flag: str,
    pullback_coeff: RatLike | None = None,
) -> Decomposition:
    """Chamber structure of v -> Zariski(anti_k - v*flag) for v in [0, tau].

    `pullback_coeff`, when given, asserts the stored anti_k coefficient on
    the flag curve (useful for flags created by a blowup, where that
    coefficient is the multiplicity of the pulled-back class).
    """
    fi = config.index(flag)
    if pullback_coeff is not None:
        want = parse_rational(pullback_coeff)
        if config.anti_k[fi] != want:
            raise NotPseudoEffective(
                f"anti_k coefficient on {flag} is "
                f"{format_rational(config.anti_k[fi])}, expected {format_rational(want)}"
            )
    d_dot, d_sq = _directional_data(config, flag)
    flag_points = config.points_on(flag)

    chambers: list[Chamber] = []
    v_cur = Fraction(0)
    support: tuple[str, ...] = ()
    while len(chambers) < _MAX_CHAMBERS:
        support, n_polys = _pivot(config, d_dot, support, v_cur)
        p_dot = _residual_dots(config, d_dot, n_polys)
        p_sq = d_sq - sum(
            (n_polys[name] * d_dot[name] for name in support), start=Poly([0])
        )
        n_dot_flag = {
            pt.id: sum(
                (n_polys[name] * pt.incidences.get(name, 0) for name in support),
                start=Poly([0]),
            )
            for pt in flag_points
        }
        hi, is_tau = _chamber_end(config, support, n_polys, p_dot, p_sq, v_cur)
        chambers.append(
            Chamber(
                lo=v_cur,
                hi=hi,
                support=support,
                n_coeffs=n_polys,
                p_sq=p_sq,
                p_dot=p_dot,
                n_dot_flag=n_dot_flag,
            )
        )
        if is_tau:
            return Decomposition(config, flag, tuple(chambers), hi)
        v_cur = hi
    raise NotPseudoEffective(f"chamber sweep did not terminate for flag {flag}")


def _directional_data(config: SurfaceConfig, flag: str) -> tuple[dict[str, Poly], Poly]:
    """Affine D(v).C for every curve C and quadratic D(v)^2, D = anti_k - v*flag."""
    fi = config.index(flag)
    names = config.curve_names
    n = len(names)
    d_dot = {
        name: Poly(
            [
                sum(config.anti_k[i] * config.gram[i][j] for i in range(n)),
                -config.gram[fi][j],
            ]
        )
        for j, name in enumerate(names)
    }
    d_sq = Poly(
        [
            config.norm,
            -2 * sum(config.anti_k[i] * config.gram[i][fi] for i in range(n)),
            config.gram[fi][fi],
        ]
    )
    return d_dot, d_sq


def _pivot(
    config: SurfaceConfig,
    d_dot: Mapping[str, Poly],
    seed: Sequence[str],
    v: Fraction,
) -> tuple[tuple[str, ...], dict[str, Poly]]:
    """Find the valid support just right of v, starting from a seed guess.

    Validity is checked on the lexicographic pair (value at v, slope): a
    support coefficient must be positive immediately after v and a
    non-support curve must meet the residual nonnegatively immediately
    after v.
    """
    names = config.curve_names
    support = [name for name in names if name in set(seed)]
    seen: set[tuple[str, ...]] = set()
    for _ in range(_MAX_PIVOTS):
        key = tuple(support)
        if key in seen:
            raise NotPseudoEffective(
                f"support pivoting cycled at v = {format_rational(v)} on {config.name}"
            )
        seen.add(key)
        n_polys = _solve_support_affine(config, d_dot, support)
        if n_polys is None:
            raise NotPseudoEffective(
                f"singular support {key} at v = {format_rational(v)} on {config.name}"
            )
        drop = [
            name
            for name in support
            if _sign_after(n_polys[name], v) < 0
            or (n_polys[name](v) == 0 and n_polys[name].derivative()(v) == 0)
        ]
        p_dot = _residual_dots(config, d_dot, n_polys)
        add = [
            name for name in names if name not in set(support) and _sign_after(p_dot[name], v) < 0
        ]
        if not drop and not add:
            return tuple(support), {name: n_polys[name] for name in support}
        support = [name for name in support if name not in set(drop)]
        support += [name for name in names if name in set(add)]
        support = [name for name in names if name in set(support)]
    raise NotPseudoEffective(
        f"support pivoting did not converge at v = {format_rational(v)} on {config.name}"
    )


def _sign_after(p: Poly, v: Fraction) -> int:
    """Sign of an affine polynomial immediately to the right of v."""
    value = p(v)
    if value != 0:
        return 1 if value > 0 else -1
    slope = p.derivative()(v)
    if slope != 0:
        return 1 if slope > 0 else -1
    return 0


def _solve_support_affine(
    config: SurfaceConfig, d_dot: Mapping[str, Poly], support: Sequence[str]
) -> dict[str, Poly] | None:
    if not support:
        return {}
    matrix = [[_gram(config, a, b) for b in support] for a in support]
    rhs = [
        [d_dot[a].coeff(0) for a in support],
        [d_dot[a].coeff(1) for a in support],
    ]
    try:
        sol = solve(matrix, rhs)
    except ValueError:
        return None
    return {name: Poly([sol[0][i], sol[1][i]]) for i, name in enumerate(support)}


def _residual_dots(
    config: SurfaceConfig, d_dot: Mapping[str, Poly], n_polys: Mapping[str, Poly]
) -> dict[str, Poly]:
    return {
        name: d_dot[name]
        - sum(
            (n_polys[s] * _gram(config, s, name) for s in n_polys),
            start=Poly([0]),
        )
        for name in config.curve_names
    }


def _chamber_end(
    config: SurfaceConfig,
    support: tuple[str, ...],
    n_polys: Mapping[str, Poly],
    p_dot: Mapping[str, Poly],
    p_sq: Poly,
    lo: Fraction,
) -> tuple[Fraction, bool]:
    """Smallest v > lo at which the support changes or P^2 vanishes.

    Returns (hi, is_tau). Support-change candidates come from affine sign
    flips, which always happen at rational points; the pseudoeffective
    threshold itself must be rational or the sweep raises IrrationalRoot,
    except when a support change occurs first and protects the chamber.
    """
    candidates: list[Fraction] = []
    for name in support:
        p = n_polys[name]
        if p.coeff(1) < 0:
            root = -p.coeff(0) / p.coeff(1)
            if root > lo:
                candidates.append(root)
    in_support = set(support)
    for name in config.curve_names:
        if name in in_support:
            continue
        p = p_dot[name]
        if p.coeff(1) < 0:
            root = -p.coeff(0) / p.coeff(1)
            if root > lo:
                candidates.append(root)
    affine_next = min(candidates) if candidates else None

    try:
        tau = min_positive_root(p_sq, lo)
    except IrrationalRoot:
        if affine_next is not None and nonnegative_on(p_sq, lo, affine_next) and p_sq(
            affine_next
        ) > 0:
            return affine_next, False
        raise
    if tau is not None and tau == lo:
        raise NotPseudoEffective(
            f"P^2 already vanishes at v = {format_rational(lo)} on {config.name}"
        )
    if tau is not None and (affine_next is None or tau <= affine_next):
        return tau, True
    if affine_next is None:
        raise NotPseudoEffective(
            f"no chamber end found after v = {format_rational(lo)} on {config.name}"
        )
    return affine_next, False


def n_restricted_at_point(decomp: Decomposition, point: PointSpec | str) -> PiecewisePoly:
    """(N(v).F) localized at one point class, as a piecewise affine function."""
    if isinstance(point, str):
        point = decomp.config.point(point)
    bps = [decomp.chambers[0].lo] + [ch.hi for ch in decomp.chambers]
    pieces = [
        sum(
            (ch.n_coeffs[name] * point.incidences.get(name, 0) for name in ch.support),
            start=Poly([0]),
        )
        for ch in decomp.chambers
    ]
    return PiecewisePoly(bps, pieces)


# -- serialization -------------------------------------------------------


def decomposition_to_json(decomp: Decomposition) -> dict:
    """JSON-ready dict of the chamber structure, with rationals as strings.

    Polynomials are lists of ascending coefficients; `p_dot` is the row of
    the flag curve only, since every other row can be recomputed from the
    support coefficients.
    """
    return {
        "config": decomp.config.name,
        "flag": decomp.flag,
        "tau": format_rational(decomp.tau),
        "chambers": [
            {
                "lo": format_rational(ch.lo),
                "hi": format_rational(ch.hi),
                "support": list(ch.support),
                "n_coeffs": {name: ch.n_coeffs[name].to_strings() for name in ch.support},
                "p_sq": ch.p_sq.to_strings(),
                "p_dot": ch.p_dot[decomp.flag].to_strings(),
            }
            for ch in decomp.chambers
        ],
    }


def decomposition_from_json(config: SurfaceConfig, data: Mapping) -> Decomposition:
    """Rebuild a decomposition from its JSON form against a configuration.

    Only the support sets and their coefficients are trusted; every derived
    quantity is recomputed from the configuration and cross-checked against
    the stored `p_sq` and `p_dot` rows, so a stale or tampered file raises
    SchemaError instead of round-tripping silently.
    """
    flag = str(data["flag"])
    if flag not in config.curve_names:
        raise SchemaError(f"unknown flag curve {flag!r} on {config.name}")
    if "config" in data and data["config"] != config.name:
        raise SchemaError(
            f"decomposition belongs to {data['config']!r}, not {config.name!r}"
        )
    d_dot, d_sq = _directional_data(config, flag)
    flag_points = config.points_on(flag)
    chambers: list[Chamber] = []
    for raw in data["chambers"]:
        support = tuple(str(name) for name in raw["support"])
        unknown = [name for name in support if name not in config.curve_names]
        if unknown or set(raw["n_coeffs"]) != set(support):
            raise SchemaError(f"support/coefficient mismatch in chamber of {flag}")
        n_polys = {name: Poly.from_strings(raw["n_coeffs"][name]) for name in support}
        p_dot = _residual_dots(config, d_dot, n_polys)
        p_sq = d_sq - sum(
            (n_polys[name] * d_dot[name] for name in support), start=Poly([0])
        )
        if p_sq != Poly.from_strings(raw["p_sq"]):
            raise SchemaError(
                f"stored P^2 disagrees with the recomputed one for flag {flag} "
                f"on [{raw['lo']}, {raw['hi']}]"
            )
        if p_dot[flag] != Poly.from_strings(raw["p_dot"]):
            raise SchemaError(
                f"stored P.{flag} disagrees with the recomputed one "
                f"on [{raw['lo']}, {raw['hi']}]"
            )
        n_dot_flag = {
            pt.id: sum(
                (n_polys[name] * pt.incidences.get(name, 0) for name in support),
                start=Poly([0]),
            )
            for pt in flag_points
        }
        chambers.append(
            Chamber(
                lo=parse_rational(raw["lo"]),
                hi=parse_rational(raw["hi"]),
                support=support,
                n_coeffs=n_polys,
                p_sq=p_sq,
                p_dot=p_dot,
                n_dot_flag=n_dot_flag,
            )
        )
    tau = parse_rational(data["tau"])
    if not chambers:
        raise SchemaError(f"no chambers stored for flag {flag}")
    if chambers[0].lo != 0 or chambers[-1].hi != tau:
        raise SchemaError(f"chambers of {flag} do not cover [0, tau]")
    for left, right in zip(chambers, chambers[1:]):
        if left.hi != right.lo:
            raise SchemaError(f"chambers of {flag} leave a gap at {left.hi}")
    if chambers[-1].p_sq(tau) != 0:
        raise SchemaError(f"P^2 does not vanish at the stored tau for flag {flag}")
    return Decomposition(config, flag, tuple(chambers), tau)


def same_decomposition(a: Decomposition, b: Decomposition) -> bool:
    """Structural equality: same flag, tau and chamber data."""
    if a.config.name != b.config.name or a.flag != b.flag or a.tau != b.tau:
        return False
    if len(a.chambers) != len(b.chambers):
        return False
    for ca, cb in zip(a.chambers, b.chambers):
        if (ca.lo, ca.hi, ca.support) != (cb.lo, cb.hi, cb.support):
            return False
        if dict(ca.n_coeffs) != dict(cb.n_coeffs) or ca.p_sq != cb.p_sq:
            return False
        if dict(ca.p_dot) != dict(cb.p_dot) or dict(ca.n_dot_flag) != dict(cb.n_dot_flag):
            return False
    return True
