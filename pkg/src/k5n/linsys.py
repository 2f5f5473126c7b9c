"""The integer linear system attached to a key and its positive solutions.

Row i of the system reads 2*t_i + sum_{j != i} (label_ij - 2) * t_j = 0,
where t_j counts white vertices carrying rotation j. Everything here is
exact: rational kernel computation via sympy, then bounded enumeration of
integer points; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import sympy

from .keycore import KeyGraph


@dataclass(frozen=True)
class KeyLinearSystem:
    """Symmetric integer coefficient matrix: diagonal 2, off-diagonal label-2."""

    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.coeffs)
        if any(len(row) != m for row in self.coeffs):
            raise ValueError("coefficient matrix must be square")
        for i in range(m):
            if self.coeffs[i][i] != 2:
                raise ValueError("diagonal entries must equal 2")
            for j in range(m):
                if self.coeffs[i][j] != self.coeffs[j][i]:
                    raise ValueError("coefficient matrix must be symmetric")
                if i != j and not -2 <= self.coeffs[i][j] <= 2:
                    raise ValueError("off-diagonal entries lie in {-2..2}")

    @property
    def m(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class SolutionSet:
    """All positive integral solutions with a prescribed coordinate sum."""

    solutions: tuple[tuple[int, ...], ...]
    kernel_rank: int

    def __bool__(self) -> bool:
        return bool(self.solutions)


def build_system(k: KeyGraph) -> KeyLinearSystem:
    m = k.m
    coeffs = tuple(
        tuple(2 if i == j else k.labels[i][j] - 2 for j in range(m))
        for i in range(m)
    )
    return KeyLinearSystem(coeffs)


def kernel_basis(sys: KeyLinearSystem) -> list[tuple[Fraction, ...]]:
    """A rational basis of the null space of the coefficient matrix."""
    mat = sympy.Matrix(sys.coeffs)
    basis = []
    for vec in mat.nullspace():
        basis.append(tuple(Fraction(int(x.p), int(x.q)) for x in vec))
    return basis


def sum_equations(sys: KeyLinearSystem, indices: list[int]) -> tuple[int, ...]:
    """Coefficient vector of the sum of the selected equations."""
    return tuple(sum(sys.coeffs[i][j] for i in indices) for j in range(sys.m))


def _affine_parametrization(sys: KeyLinearSystem, n: int):
    """Solve coeffs*t = 0, sum(t) = n over the rationals.

    Returns (particular, directions) with t = particular + sum c_i * directions[i],
    or None when the affine system is infeasible.
    """
    m = sys.m
    a = sympy.Matrix(sys.coeffs).col_join(sympy.ones(1, m))
    b = sympy.zeros(m + 1, 1)
    b[m, 0] = n
    try:
        sol, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    zero = {p: 0 for p in params}
    particular = tuple(Fraction(int(v.p), int(v.q))
                       for v in sol.subs(zero))
    directions = []
    for p in params:
        unit = dict(zero)
        unit[p] = 1
        vec = sol.subs(unit)
        directions.append(tuple(
            Fraction(int(v.p), int(v.q)) - particular[i]
            for i, v in enumerate(vec)))
    return particular, directions


def positive_integral_solutions(sys: KeyLinearSystem, n: int) -> SolutionSet:
    """Every integer solution with all entries >= 1 summing to ``n``.

    The rational solution space of (system, sum = n) is parametrized
    exactly, then lattice points are enumerated over the bounded ranges the
    positivity constraints allow.
    """
    rank = len(kernel_basis(sys))
    if n < sys.m or sys.m == 0:
        return SolutionSet((), rank)
    param = _affine_parametrization(sys, n)
    if param is None:
        return SolutionSet((), rank)
    particular, directions = param
    m = sys.m
    solutions = set()
    if not directions:
        candidates = [particular]
        for cand in candidates:
            if all(v.denominator == 1 and v >= 1 for v in cand):
                solutions.add(tuple(int(v) for v in cand))
    else:
        # free parameters equal some coordinate t_j, hence range over 1..n-m+1
        lo, hi = 1, n - m + 1
        for choice in product(range(lo, hi + 1), repeat=len(directions)):
            cand = [particular[i] + sum(c * d[i] for c, d in zip(choice, directions))
                    for i in range(m)]
            if all(v.denominator == 1 and v >= 1 for v in cand):
                solutions.add(tuple(int(v) for v in cand))
    ordered = tuple(sorted(solutions))
    for t in ordered:  # exact re-verification of every emitted vector
        assert sum(t) == n
        assert all(sum(sys.coeffs[i][j] * t[j] for j in range(m)) == 0
                   for i in range(m))
    return SolutionSet(ordered, rank)


def solvable_sums(sys: KeyLinearSystem, n_max: int) -> set[int]:
    """All n <= n_max admitting a positive integral solution."""
    return {n for n in range(sys.m, n_max + 1)
            if positive_integral_solutions(sys, n).solutions}


def render_equations(sys: KeyLinearSystem) -> str:
    """Human-readable aligned equations, one per key vertex."""
    lines = []
    width = 6
    for i, row in enumerate(sys.coeffs):
        terms = []
        for j, c in enumerate(row):
            if c == 0:
                terms.append(" " * width)
                continue
            sign = "-" if c < 0 else ("+" if terms and any(t.strip() for t in terms) else " ")
            mag = abs(c)
            coef = "" if mag == 1 else str(mag)
            terms.append(f"{sign} {coef}t_{j}".ljust(width))
        lines.append(f"E_{i}: " + "".join(terms).rstrip() + " = 0")
    return "\n".join(lines)
