"""Exact rational row reduction.

Rows are sparse maps from a column key to a nonzero Fraction.  Pivoting is
on the first nonzero column in a fixed column order and rows are inserted
in caller order, so ranks and echelon bases are deterministic.
"""

from __future__ import annotations

from fractions import Fraction


class SparseEchelon:
    """Incremental echelon form over the rationals.

    ``column_key`` maps a column label to a sortable value; it fixes which
    nonzero entry of a row is its pivot (the minimal one).  Pivot rows are
    normalized to leading coefficient 1 and their support never precedes
    the pivot column, so a single ascending elimination pass reduces any
    row completely.
    """

    def __init__(self, column_key=None):
        self._key = column_key if column_key is not None else (lambda c: c)
        self._pivots = {}        # column -> normalized row (dict)
        self._pivot_order = []   # insertion order of pivot columns

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def pivot_columns(self) -> list:
        return list(self._pivot_order)

    def pivot_rows(self) -> list:
        """The normalized echelon rows, in insertion order."""
        return [dict(self._pivots[c]) for c in self._pivot_order]

    def reduce(self, row: dict) -> dict:
        """Fully reduce ``row`` against the stored pivot rows."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        while True:
            hit = None
            hit_key = None
            for c in row:
                if c in self._pivots:
                    k = self._key(c)
                    if hit is None or k < hit_key:
                        hit, hit_key = c, k
            if hit is None:
                return row
            coeff = row[hit]
            for c, v in self._pivots[hit].items():
                s = row.get(c, 0) - coeff * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)

    def add(self, row: dict):
        """Reduce ``row`` and, if nonzero, insert it as a new pivot row.

        Returns the new pivot column, or None if the row was dependent.
        """
        red = self.reduce(row)
        if not red:
            return None
        pivot = min(red, key=self._key)
        lead = red[pivot]
        normalized = {c: v / lead for c, v in red.items()}
        self._pivots[pivot] = normalized
        self._pivot_order.append(pivot)
        return pivot

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def dense_rank(rows) -> int:
    """Rank of a list of equal-length rational vectors."""
    ech = SparseEchelon()
    for r in rows:
        ech.add({j: v for j, v in enumerate(r) if v})
    return ech.rank


def in_span(vector, rows) -> bool:
    """Whether ``vector`` lies in the row span of ``rows``."""
    ech = SparseEchelon()
    for r in rows:
        ech.add({j: v for j, v in enumerate(r) if v})
    return ech.contains({j: v for j, v in enumerate(vector) if v})


def coords_in_span(vector, rows):
    """Coefficients expressing ``vector`` over ``rows``, or None.

    Solves sum_i c_i rows[i] = vector exactly by augmenting each row with
    a marker column carrying its index; markers sort after real columns so
    they are never chosen as pivots while real columns remain.
    """
    n = len(rows)
    ech = SparseEchelon(column_key=lambda c: (1, c[1]) if isinstance(c, tuple) else (0, c))
    for i, r in enumerate(rows):
        row = {j: Fraction(v) for j, v in enumerate(r) if v}
        row[("marker", i)] = Fraction(1)
        ech.add(row)
    red = ech.reduce({j: Fraction(v) for j, v in enumerate(vector) if v})
    if any(not isinstance(c, tuple) for c in red):
        return None
    coeffs = [Fraction(0)] * n
    for c, v in red.items():
        coeffs[c[1]] = -v
    return coeffs


def dense_nullspace(rows, ncols) -> list:
    """Basis of the right null space of the matrix with the given rows.

    Returns a list of Fraction tuples of length ``ncols``.
    """
    rows = [list(map(Fraction, r)) for r in rows]
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(tuple(vec))
    return basis


def normalize_integer_vector(vec) -> tuple:
    """Scale a rational vector to coprime integers with positive leading sign."""
    from math import gcd

    vec = [Fraction(v) for v in vec]
    if all(v == 0 for v in vec):
        return tuple(0 for _ in vec)
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)
