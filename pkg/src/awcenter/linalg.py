"""Exact sparse Gaussian elimination over any exact field (Fraction, CycloScalar)."""
from __future__ import annotations

import heapq
from fractions import Fraction


class LinearSystemError(ArithmeticError):
    pass


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        r = Fraction(a, b)
        return r.numerator if r.denominator == 1 else r
    return a / b


def solve_sparse(columns: dict, rhs: dict) -> dict:
    """Solve sum_c x_c * columns[c] = rhs exactly.

    ``columns`` maps an unknown to its sparse column {row: coeff}. Pivots are
    chosen by fewest nonzeros in the row (ties by key order), so triangular
    systems are solved without fill-in. Raises LinearSystemError when the
    system is inconsistent or does not determine every unknown.
    """
    rows: dict = {}
    for c, col in columns.items():
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
    b = {r: v for r, v in rhs.items() if v}
    colidx: dict = {c: set() for c in columns}
    for r, row in rows.items():
        for c in row:
            colidx[c].add(r)

    heap = [(len(row), r) for r, row in rows.items()]
    heapq.heapify(heap)
    active = set(rows)
    pivots = []
    while heap:
        n, r = heapq.heappop(heap)
        if r not in active:
            continue
        row = rows[r]
        if n != len(row):
            if row:
                heapq.heappush(heap, (len(row), r))
            continue
        if not row:
            continue
        c = min(row, key=lambda k: (len(colidx[k]), k))
        active.discard(r)
        pivots.append((c, r))
        pv = row[c]
        for c2 in row:
            colidx[c2].discard(r)
        for r2 in list(colidx[c]):
            row2 = rows[r2]
            f = _div(row2[c], pv)
            for c2, v in row.items():
                w = row2.get(c2, 0) - f * v
                if w:
                    if c2 not in row2:
                        colidx[c2].add(r2)
                    row2[c2] = w
                else:
                    row2.pop(c2, None)
                    colidx[c2].discard(r2)
            br = b.get(r, 0)
            if br:
                w = b.get(r2, 0) - f * br
                if w:
                    b[r2] = w
                else:
                    b.pop(r2, None)
            heapq.heappush(heap, (len(row2), r2))

    for r in active:
        if rows[r]:
            raise LinearSystemError("elimination left an unreduced row")
        if b.get(r, 0):
            raise LinearSystemError(f"inconsistent system at row {r!r}")
    for r, v in b.items():
        if r not in rows and v:
            raise LinearSystemError(f"inconsistent system: right side term {r!r} not reachable")
    solved = {c for c, _ in pivots}
    missing = [c for c in columns if c not in solved]
    if missing:
        raise LinearSystemError(f"underdetermined system: {len(missing)} free unknowns, e.g. {missing[0]!r}")

    x: dict = {}
    for c, r in reversed(pivots):
        row = rows[r]
        s = b.get(r, 0)
        for c2, v in row.items():
            if c2 != c:
                s = s - v * x[c2]
        x[c] = _div(s, row[c]) if s else 0
    return x


def rank(vectors: list) -> int:
    """Rank of a list of sparse vectors {coordinate: scalar}."""
    basis: dict = {}  # pivot coordinate -> reduced vector
    r = 0
    for vec in vectors:
        v = {k: c for k, c in vec.items() if c}
        while v:
            k = max(v)
            if k not in basis:
                basis[k] = v
                r += 1
                break
            piv = basis[k]
            f = _div(v[k], piv[k])
            for k2, c2 in piv.items():
                w = v.get(k2, 0) - f * c2
                if w:
                    v[k2] = w
                else:
                    v.pop(k2, None)
    return r
