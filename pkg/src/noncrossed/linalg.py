"""Exact linear algebra over the rationals.

Rows are cleared to integers, elimination is fraction-free (Bareiss), and
back substitution produces exact Fractions.  Pivoting is first-nonzero, so
results are deterministic; nullspace bases come out in echelon order with
content-normalized integer coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _int_rows(rows):
    """Scale each row by the lcm of its denominators; returns int rows."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * scale) for f in fracs])
    return out


def _echelon(m):
    """Fraction-free row echelon form of an integer matrix (in place).

    Returns the list of (row, col) pivot positions.  Every row below the
    pivot gets the same Bareiss update (lead*row - head*pivot_row) / prev;
    uniformity is what keeps the divisions exact.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    prev = 1
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        lead = m[r][c]
        for i in range(r + 1, rows):
            head = m[i][c]
            row = m[i]
            pivot = m[r]
            new = []
            for j in range(cols):
                q, rem = divmod(lead * row[j] - head * pivot[j], prev)
                if rem:
                    raise AssertionError("fraction-free elimination lost exactness")
                new.append(q)
            m[i] = new
        prev = lead
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    return pivots


def solve(a, b):
    """One exact solution x of a x = b (free variables 0), or None."""
    rows = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m = _int_rows(rows)
    if not m:
        return []
    cols = len(m[0]) - 1
    pivots = _echelon(m)
    # consistency: a pivot in the rhs column means no solution
    if any(c == cols for _, c in pivots):
        return None
    x = [Fraction(0)] * cols
    for r, c in reversed(pivots):
        acc = Fraction(m[r][cols])
        for j in range(c + 1, cols):
            acc -= m[r][j] * x[j]
        x[c] = acc / m[r][c]
    return x


def _normalize_int_vector(vec):
    """Clear denominators, divide by content, make first nonzero positive."""
    scale = lcm(*(f.denominator for f in vec))
    ints = [int(f * scale) for f in vec]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    first = next((v for v in ints if v), 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def nullspace(a):
    """Canonical basis of the kernel of a, as content-free integer tuples."""
    m = _int_rows([list(row) for row in a])
    if not m:
        return []
    cols = len(m[0])
    pivots = _echelon(m)
    pivot_cols = {c: r for r, c in pivots}
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for r, c in reversed(pivots):
            acc = Fraction(0)
            for j in range(c + 1, cols):
                if vec[j]:
                    acc -= m[r][j] * vec[j]
            vec[c] = acc / m[r][c]
        basis.append(_normalize_int_vector(vec))
    return basis
