"""Independent cross-checks for the decomposition engine.

The oracle never reuses the sweep: it enumerates every negative-definite
subset of curves, solves the orthogonality system on each subset, and keeps
the candidates whose coefficients are nonnegative and whose residual is nef
against all curves. Uniqueness of the decomposition makes agreement of all
accepted candidates a hard invariant (violations raise Ambiguous).

Subset solutions are computed once per (config, flag) pair as integer affine
functions of the sweep parameter via fraction-free elimination, so checking
hundreds of random parameter values stays fast. A plain Fraction-based
reference (`brute_force_negative_part`) backs the fast table and is spot
checked against it. The quadrature check is the only floating-point code in
the package.
"""
from __future__ import annotations

import math
import random
import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .config import DivisorClass, SurfaceConfig
from .errors import Ambiguous, NoSolution
from .linalg import solve
from .poly import PiecewisePoly
from .rationals import RatLike, format_rational, parse_rational
from .zariski import Decomposition, NegativePart, parametric_decompose

_MAX_BRUTE_FORCE_CURVES = 16

_nd_cache: "weakref.WeakKeyDictionary[SurfaceConfig, tuple[tuple[int, ...], ...]]" = (
    weakref.WeakKeyDictionary()
)
_table_cache: "weakref.WeakKeyDictionary[SurfaceConfig, dict]" = weakref.WeakKeyDictionary()


def _integer_gram(config: SurfaceConfig) -> tuple[int, list[list[int]]]:
    """mu and the integer matrix mu * gram."""
    mu = 1
    for row in config.gram:
        for x in row:
            mu = mu * x.denominator // math.gcd(mu, x.denominator)
    gh = [[int(x * mu) for x in row] for row in config.gram]
    return mu, gh


def negative_definite_subsets(config: SurfaceConfig) -> tuple[tuple[int, ...], ...]:
    """All index subsets whose Gram submatrix is negative definite.

    Uses Sylvester's criterion incrementally: a DFS in ascending index order
    extends a subset by j exactly when the new leading principal minor of
    the negated Gram matrix stays positive, which fraction-free elimination
    exposes as the pivot candidate at j. Includes the empty subset.
    """
    if config in _nd_cache:
        return _nd_cache[config]
    _, gh = _integer_gram(config)
    n = len(gh)
    a = [[-gh[i][j] for j in range(n)] for i in range(n)]
    out: list[tuple[int, ...]] = [()]

    def dfs(subset: tuple[int, ...], work: list[list[int]], prev_pivot: int) -> None:
        start = subset[-1] + 1 if subset else 0
        for j in range(start, n):
            pivot = work[j][j]
            if pivot <= 0:
                continue
            out.append(subset + (j,))
            nxt = [row[:] for row in work]
            for r in range(j + 1, n):
                wr, wj = nxt[r], work[j]
                frj = wr[j]
                for c in range(j + 1, n):
                    wr[c] = (pivot * wr[c] - frj * wj[c]) // prev_pivot
            dfs(subset + (j,), nxt, pivot)

    dfs((), a, 1)
    result = tuple(out)
    _nd_cache[config] = result
    return result


def _jordan_solve_int(a: list[list[int]], b: list[list[int]]) -> tuple[list[list[int]], int]:
    """Fraction-free Gauss-Jordan: returns (det(a) * a^-1 b, det(a)).

    `a` must be nonsingular with nonzero leading principal minors (true for
    definite matrices). All intermediate divisions are exact.
    """
    k = len(a)
    width = len(b[0]) if b else 0
    m = [list(a[i]) + list(b[i]) for i in range(k)]
    prev = 1
    for i in range(k):
        pivot = m[i][i]
        for r in range(k):
            if r == i:
                continue
            mr, mi = m[r], m[i]
            factor = mr[i]
            for c in range(k + width):
                mr[c] = (pivot * mr[c] - factor * mi[c]) // prev
        prev = pivot
    det = m[k - 1][k - 1] if k else 1
    sols = [[m[i][k + c] for c in range(width)] for i in range(k)]
    return sols, det


@dataclass(frozen=True)
class _TableRow:
    subset: tuple[int, ...]
    lo: Fraction
    hi: Fraction | None  # None means unbounded above
    num0: tuple[int, ...]
    num1: tuple[int, ...]
    den: int


class SubsetTable:
    """Per-flag acceptance intervals for every negative-definite subset.

    Row coefficients are integer affine numerators over a positive common
    denominator; a subset's row represents the unique solution of its
    orthogonality system together with the exact v-interval on which that
    solution has nonnegative coefficients and nef residual.
    """

    def __init__(self, config: SurfaceConfig, flag: str):
        self.config = config
        self.flag = flag
        mu, gh = _integer_gram(config)
        n = len(gh)
        fi = config.index(flag)
        w0 = [
            sum(config.anti_k[i] * config.gram[i][j] for i in range(n))
            for j in range(n)
        ]
        rho = 1
        for x in w0:
            d = (x * mu).denominator
            rho = rho * d // math.gcd(rho, d)
        r0 = [int(x * mu * rho) for x in w0]
        r1 = [-rho * gh[fi][j] for j in range(n)]

        rows: list[_TableRow] = []
        for subset in negative_definite_subsets(config):
            k = len(subset)
            a = [[gh[i][j] for j in subset] for i in subset]
            b = [[r0[i], r1[i]] for i in subset]
            sols, det = _jordan_solve_int(a, b)
            den = rho * det
            sign = 1 if den > 0 else -1
            den *= sign
            x0 = [sign * sols[i][0] for i in range(k)]
            x1 = [sign * sols[i][1] for i in range(k)]
            conds: list[tuple[int, int]] = [(x0[i], x1[i]) for i in range(k)]
            inside = set(subset)
            for j in range(n):
                if j in inside:
                    continue
                c0 = den * r0[j] - rho * sum(
                    x0[t] * gh[subset[t]][j] for t in range(k)
                )
                c1 = den * r1[j] - rho * sum(
                    x1[t] * gh[subset[t]][j] for t in range(k)
                )
                conds.append((c0, c1))
            lo = Fraction(0)
            hi: Fraction | None = None
            empty = False
            for c0, c1 in conds:
                if c1 == 0:
                    if c0 < 0:
                        empty = True
                        break
                elif c1 > 0:
                    bound = Fraction(-c0, c1)
                    if bound > lo:
                        lo = bound
                else:
                    bound = Fraction(-c0, c1)
                    if hi is None or bound < hi:
                        hi = bound
            if empty or (hi is not None and lo > hi):
                continue
            rows.append(_TableRow(subset, lo, hi, tuple(x0), tuple(x1), den))
        self.rows = tuple(rows)

    def negative_part(self, v: RatLike) -> NegativePart:
        """The unique accepted negative part at one parameter value."""
        v = parse_rational(v)
        names = self.config.curve_names
        found: list[tuple[tuple[Fraction, ...], tuple[int, ...]]] = []
        for row in self.rows:
            if v < row.lo or (row.hi is not None and v > row.hi):
                continue
            coeffs = tuple(
                (row.num0[i] + row.num1[i] * v) / row.den
                for i in range(len(row.subset))
            )
            found.append((coeffs, row.subset))
        if not found:
            raise NoSolution(
                f"no negative-definite support accepts v = {format_rational(v)} "
                f"for flag {self.flag} on {self.config.name}"
            )
        vectors = set()
        for coeffs, subset in found:
            full = [Fraction(0)] * len(names)
            for c, idx in zip(coeffs, subset):
                full[idx] = c
            vectors.add(tuple(full))
        if len(vectors) > 1:
            raise Ambiguous(
                f"{len(vectors)} distinct negative parts at v = {format_rational(v)} "
                f"for flag {self.flag} on {self.config.name}"
            )
        (full,) = vectors
        coeffs = {names[i]: c for i, c in enumerate(full) if c != 0}
        return NegativePart(tuple(sorted(coeffs)), coeffs)


def subset_table(config: SurfaceConfig, flag: str) -> SubsetTable:
    per_config = _table_cache.setdefault(config, {})
    if flag not in per_config:
        per_config[flag] = SubsetTable(config, flag)
    return per_config[flag]


def brute_force_negative_part(config: SurfaceConfig, d: DivisorClass) -> NegativePart:
    """Reference Zariski negative part by exhaustive subset search.

    Solves every negative-definite subset's orthogonality system with plain
    Fraction arithmetic and keeps candidates with nonnegative coefficients
    and nef residual; all accepted candidates must agree.
    """
    names = config.curve_names
    n = len(names)
    if n > _MAX_BRUTE_FORCE_CURVES:
        raise ValueError(
            f"brute force supports at most {_MAX_BRUTE_FORCE_CURVES} curves, got {n}"
        )
    d_dot = [
        sum(d.coeffs[i] * config.gram[i][j] for i in range(n)) for j in range(n)
    ]
    accepted: list[tuple[Fraction, ...]] = []
    for subset in negative_definite_subsets(config):
        matrix = [[config.gram[i][j] for j in subset] for i in subset]
        try:
            sol = solve(matrix, [[d_dot[i] for i in subset]])
        except ValueError:  # pragma: no cover - definite matrices are regular
            continue
        coeffs = sol[0]
        if any(c < 0 for c in coeffs):
            continue
        ok = True
        for j in range(n):
            if j in subset:
                continue
            resid = d_dot[j] - sum(
                coeffs[t] * config.gram[subset[t]][j] for t in range(len(subset))
            )
            if resid < 0:
                ok = False
                break
        if ok:
            full = [Fraction(0)] * n
            for c, idx in zip(coeffs, subset):
                full[idx] = c
            accepted.append(tuple(full))
    if not accepted:
        raise NoSolution(f"no accepted support for {d.coeffs} on {config.name}")
    if len(set(accepted)) > 1:
        raise Ambiguous(
            f"{len(set(accepted))} distinct negative parts for {d.coeffs} on {config.name}"
        )
    full = accepted[0]
    coeffs = {names[i]: c for i, c in enumerate(full) if c != 0}
    return NegativePart(tuple(sorted(coeffs)), coeffs)


# -- quadrature ---------------------------------------------------------


@dataclass(frozen=True)
class QuadratureReport:
    exact: Fraction
    numeric: float
    error: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.error <= self.tol


def quadrature_check(pp: PiecewisePoly, tol: float = 1e-9, panels: int = 10_000) -> QuadratureReport:
    """Composite Simpson quadrature against the exact integral."""
    if panels % 2:
        raise ValueError("Simpson quadrature needs an even panel count")
    numeric = 0.0
    for i, piece in enumerate(pp.pieces):
        lo = float(pp.breakpoints[i])
        hi = float(pp.breakpoints[i + 1])
        xs = np.linspace(lo, hi, panels + 1)
        cs = [float(c) for c in reversed(piece.coeffs)] or [0.0]
        ys = np.polyval(cs, xs)
        h = (hi - lo) / panels
        numeric += (h / 3.0) * (
            ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-1:2].sum()
        )
    exact = pp.integrate(pp.lo, pp.hi)
    error = abs(float(exact) - numeric)
    return QuadratureReport(exact=exact, numeric=numeric, error=error, tol=tol)


# -- randomized engine/oracle agreement ----------------------------------


@dataclass(frozen=True)
class EquivalenceMismatch:
    v: Fraction
    engine: Mapping[str, Fraction]
    oracle: Mapping[str, Fraction]


@dataclass(frozen=True)
class EquivalenceReport:
    config_name: str
    flag: str
    trials: int
    seed: int
    tau: Fraction
    mismatches: tuple[EquivalenceMismatch, ...]
    ambiguous: int

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.ambiguous == 0


def sample_parameters(tau: Fraction, trials: int, seed: int) -> list[Fraction]:
    """Deterministic rational samples in (0, tau) with denominator <= 10^4."""
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < trials:
        q = rng.randint(2, 10_000)
        top = q * tau
        p_max = top.numerator // top.denominator
        if top.denominator == 1:
            p_max -= 1
        if p_max < 1:
            continue
        v = Fraction(rng.randint(1, p_max), q)
        if 0 < v < tau:
            out.append(v)
    return out


def random_equivalence(
    config: SurfaceConfig,
    flag: str,
    trials: int = 100,
    seed: int = 0,
    decomp: Decomposition | None = None,
) -> EquivalenceReport:
    """Compare the sweep against the subset oracle at random parameters.

    Every sampled v must yield the identical negative part from both sides,
    with no subset ambiguity; the first sample is additionally checked
    against the Fraction-based brute force.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if decomp is None:
        decomp = parametric_decompose(config, flag)
    table = subset_table(config, flag)
    mismatches: list[EquivalenceMismatch] = []
    ambiguous = 0
    samples = sample_parameters(decomp.tau, trials, seed)
    for i, v in enumerate(samples):
        engine = decomp.negative_at(v).coeffs
        try:
            oracle = table.negative_part(v).coeffs
        except Ambiguous:
            ambiguous += 1
            continue
        if dict(engine) != dict(oracle):
            mismatches.append(EquivalenceMismatch(v, dict(engine), dict(oracle)))
            continue
        if i == 0:
            d = config.anti_k_divisor - config.basis_vector(flag).scale(v)
            reference = brute_force_negative_part(config, d).coeffs
            if dict(reference) != dict(oracle):
                mismatches.append(EquivalenceMismatch(v, dict(reference), dict(oracle)))
    return EquivalenceReport(
        config_name=config.name,
        flag=flag,
        trials=trials,
        seed=seed,
        tau=decomp.tau,
        mismatches=tuple(mismatches),
        ambiguous=ambiguous,
    )
