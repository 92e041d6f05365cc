"""Exact rational arithmetic, vectors, and an exact simplex LP solver.

Everything on the polyhedral side of this package runs over
arbitrary-precision rationals so derived inequality systems are
bit-reproducible.  gmpy2 is used when importable; the stdlib Fraction is a
drop-in fallback with identical semantics.  Both types are canonical by
construction (coprime numerator/denominator, positive denominator).

The LP solver maximizes a linear objective over free variables subject to
``A x <= b`` and ``E x = f``.  It works on the dual problem: our systems
have few coordinates and many rows, so the dual tableau stays small.
Bland's rule guarantees termination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

try:
    from gmpy2 import mpq as Rational

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction
    _HAVE_GMPY2 = False

R0 = Rational(0)
R1 = Rational(1)


def rat(value, den=None) -> Rational:
    """Coerce ints, ``p/q`` strings, floats, or rationals to Rational.

    Floats convert exactly (no decimal rounding): use strings for decimal
    literals like ``"1/3"``.
    """
    if den is not None:
        return Rational(value) / Rational(den)
    if isinstance(value, float):
        # Fraction(float) is exact; routing through it keeps both backends
        # bit-identical.
        return Rational(Fraction(value))
    return Rational(value)


def vec(values) -> tuple:
    return tuple(rat(x) for x in values)


def dot(u: Sequence, v: Sequence) -> Rational:
    acc = R0
    for a, b in zip(u, v):
        if a and b:
            acc += a * b
    return acc


def scale(v: Sequence, factor) -> tuple:
    f = rat(factor)
    return tuple(x * f for x in v)


def combine(u: Sequence, cu, v: Sequence, cv) -> tuple:
    """cu*u + cv*v, exact."""
    return tuple(cu * a + cv * b for a, b in zip(u, v))


def is_zero(v: Sequence) -> bool:
    return all(not x for x in v)


def normalize(v: Sequence) -> tuple:
    """Scale ``v`` by the positive rational making entries coprime integers.

    The zero vector is its own normal form; signs of entries are preserved.
    """
    den_lcm = 1
    for x in v:
        if x:
            den_lcm = math.lcm(den_lcm, int(x.denominator))
    nums = [int(x.numerator) * (den_lcm // int(x.denominator)) for x in v]
    g = 0
    for n in nums:
        g = math.gcd(g, n)
    if g == 0:
        return tuple(R0 for _ in v)
    return tuple(Rational(n // g) for n in nums)


def as_floats(v: Sequence) -> list:
    return [float(x) for x in v]


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    objective: Optional[Rational] = None
    witness: Optional[tuple] = None


class DimensionMismatch(ValueError):
    pass


def _check_rows(rows, dim, what):
    for coeffs, _bound in rows:
        if len(coeffs) != dim:
            raise DimensionMismatch(
                f"{what} row has {len(coeffs)} coefficients, expected {dim}"
            )


class _Simplex:
    """Two-phase primal simplex for min c.w s.t. M w = q, w >= 0.

    Artificial columns start as the identity, so after the run their
    transformed columns hold the basis inverse, from which the simplex
    multipliers of the final basis are read off.
    """

    def __init__(self, rows, rhs, cost):
        self.m0 = len(rows)  # original row count; fixes tableau width
        self.n = len(cost)
        tab = []
        for i, row in enumerate(rows):
            r = list(row)
            b = rhs[i]
            if b < 0:
                r = [-x for x in r]
                b = -b
            art = [R0] * self.m0
            art[i] = R1
            tab.append(r + art + [b])
        self.tab = tab
        self.cost = list(cost)
        self.basis = [self.n + i for i in range(self.m0)]
        self.width = self.n + self.m0 + 1

    def _pivot(self, prow, pcol):
        tab = self.tab
        row = tab[prow]
        piv = row[pcol]
        if piv != R1:
            inv = R1 / piv
            tab[prow] = row = [x * inv for x in row]
        for i, other in enumerate(tab):
            if i == prow:
                continue
            f = other[pcol]
            if f:
                tab[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[prow] = pcol

    def _reduced_costs(self, cost):
        # z_j = cost_j - sum_i cost_basis[i] * tab[i][j]; padded to width
        z = list(cost) + [R0] * (self.width - len(cost))
        for i, bi in enumerate(self.basis):
            cb = cost[bi] if bi < len(cost) else R0
            if cb:
                row = self.tab[i]
                for j in range(self.width):
                    if row[j]:
                        z[j] -= cb * row[j]
        return z

    def _run(self, cost, n_enterable):
        """Bland iteration over the first ``n_enterable`` columns."""
        while True:
            z = self._reduced_costs(cost)
            enter = -1
            for j in range(n_enterable):
                if z[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best = None
            for i, row in enumerate(self.tab):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best:
                        best = key
                        leave = i
            if leave < 0:
                return UNBOUNDED
            self._pivot(leave, enter)

    def solve(self):
        """Returns (status, value, w, multipliers)."""
        n = self.n
        phase1 = [R0] * n + [R1] * self.m0
        self._run(phase1, n)  # bounded below by 0, always terminates optimal
        art_mass = sum(
            self.tab[i][-1] for i in range(len(self.tab)) if self.basis[i] >= n
        )
        if art_mass > 0:
            return INFEASIBLE, None, None, None
        # drive residual zero-level artificials out; drop redundant rows
        drop = []
        for i in range(len(self.tab)):
            if self.basis[i] >= n:
                row = self.tab[i]
                pcol = next((j for j in range(n) if row[j]), -1)
                if pcol < 0:
                    drop.append(i)
                else:
                    self._pivot(i, pcol)
        for i in reversed(drop):
            del self.tab[i]
            del self.basis[i]
        status = self._run(self.cost, n)
        if status == UNBOUNDED:
            return UNBOUNDED, None, None, None
        w = [R0] * n
        value = R0
        for i, bi in enumerate(self.basis):
            w[bi] = self.tab[i][-1]
            if self.cost[bi]:
                value += self.cost[bi] * self.tab[i][-1]
        # multipliers pi = cost_B . B^{-1}, read from the artificial columns
        pi = []
        for d in range(self.m0):
            col = n + d
            acc = R0
            for i, bi in enumerate(self.basis):
                cb = self.cost[bi]
                if cb and self.tab[i][col]:
                    acc += cb * self.tab[i][col]
            pi.append(acc)
        return OPTIMAL, value, tuple(w), tuple(pi)


def _solve_standard(rows, rhs, cost):
    return _Simplex(rows, rhs, cost).solve()


def solve_standard_feasibility(rows, rhs):
    """Exact feasibility of M w = q, w >= 0; returns a witness w or None."""
    if not rows:
        return ()
    status, _value, w, _pi = _solve_standard(rows, rhs, [R0] * len(rows[0]))
    return w if status == OPTIMAL else None


def solve_lp(objective, constraints, equalities=()) -> LpResult:
    """Exact maximization of ``objective`` over A x <= b, E x = f; x free.

    ``constraints`` and ``equalities`` are sequences of (coeffs, bound)
    pairs.  Status is optimal/infeasible/unbounded; the witness is the
    optimal point, or a ray along which the objective grows.
    """
    dim = len(objective)
    ineqs = [(tuple(c), rat(b)) for c, b in constraints]
    eqs = [(tuple(c), rat(b)) for c, b in equalities]
    _check_rows(ineqs, dim, "inequality")
    _check_rows(eqs, dim, "equality")
    return _solve_lp_inner(vec(objective), ineqs, eqs, allow_ray=True)


def _solve_lp_inner(objective, ineqs, eqs, allow_ray) -> LpResult:
    dim = len(objective)
    # dual: min b.y + f.(z+ - z-)  s.t.  A^T y + E^T (z+ - z-) = c, y >= 0
    cols = []
    cost = []
    for coeffs, bound in ineqs:
        cols.append(coeffs)
        cost.append(bound)
    for coeffs, bound in eqs:
        cols.append(coeffs)
        cost.append(bound)
        cols.append(tuple(-x for x in coeffs))
        cost.append(-bound)
    if not cols:
        if is_zero(objective):
            return LpResult(OPTIMAL, R0, tuple([R0] * dim))
        return LpResult(UNBOUNDED, None, normalize(objective))
    rows = [[col[d] for col in cols] for d in range(dim)]
    status, value, _w, pi = _solve_standard(rows, list(objective), cost)
    if status == OPTIMAL:
        return LpResult(OPTIMAL, value, tuple(pi))
    if status == UNBOUNDED:
        # dual unbounded below => primal infeasible
        return LpResult(INFEASIBLE)
    # dual infeasible: primal is unbounded or infeasible; decide via the
    # homogeneous dual, which is always feasible at w = 0.
    status2, _v2, _w2, _pi2 = _solve_standard(rows, [R0] * dim, cost)
    if status2 == UNBOUNDED:
        return LpResult(INFEASIBLE)
    if not allow_ray:
        return LpResult(UNBOUNDED)
    # recession ray: max c.r s.t. A r <= 0, E r = 0, capped at c.r <= 1
    cone_ineqs = [(c, R0) for c, _b in ineqs] + [(tuple(objective), R1)]
    cone_eqs = [(c, R0) for c, _b in eqs]
    res = _solve_lp_inner(objective, cone_ineqs, cone_eqs, allow_ray=False)
    ray = None
    if res.status == OPTIMAL and res.witness and not is_zero(res.witness):
        ray = normalize(res.witness)
    return LpResult(UNBOUNDED, None, ray)
