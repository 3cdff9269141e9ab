"""Exact rational helpers: text encoding and fraction-free linear algebra."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def format_rational(x) -> str:
    """Encode as ``"p/q"`` in lowest terms with ``q > 0``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {text!r}") from exc


class SingularSystemError(ArithmeticError):
    pass


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        d = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * d) for v in row])
    return out


def row_echelon(rows: Sequence[Sequence], ncols: int | None = None):
    """Bareiss fraction-free elimination.

    Returns ``(echelon, pivots, order)``: the integer echelon form, the pivot
    column of each nonzero row and the original row index each echelon row
    came from.  Only the first ``ncols`` columns are used as pivots.
    """
    m = _integer_rows(rows)
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    width = len(m[0]) if m else 0
    order = list(range(nrows))
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        order[r], order[piv] = order[piv], order[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, width):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots, order


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1]) if rows else 0


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ech, pivots, _ = row_echelon(aug, ncols=n)
    if len(pivots) < n:
        raise SingularSystemError("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(ech[i][n])
        for j in range(i + 1, n):
            acc -= ech[i][j] * x[j]
        x[i] = acc / ech[i][i]
    return x


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space, each vector with integer entries."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ech, pivots, _ = row_echelon(rows, ncols=ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            acc = Fraction(0)
            for j in range(c + 1, ncols):
                acc -= ech[i][j] * x[j]
            x[c] = acc / ech[i][c]
        d = lcm(*(v.denominator for v in x))
        basis.append([v * d for v in x])
    return basis
