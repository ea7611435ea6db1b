"""Small exact integer matrix helpers (Hermite/Smith style reductions).

Matrices are lists of row lists of Python ints; everything is tiny (at most
a dozen rows), so clarity beats asymptotics.
"""
from __future__ import annotations


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def hermite_form(rows):
    """Row-style Hermite normal form of the lattice spanned by `rows`.

    Returns the list of nonzero reduced rows (a basis of the row lattice).
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    cols = len(m[0])
    basis = []
    col = 0
    while m and col < cols:
        pivots = [r for r in m if r[col] != 0]
        if not pivots:
            col += 1
            continue
        while True:
            pivots.sort(key=lambda r: abs(r[col]))
            p = pivots[0]
            done = True
            for r in pivots[1:]:
                q = r[col] // p[col]
                if q:
                    for k in range(cols):
                        r[k] -= q * p[k]
                    done = False
            pivots = [r for r in pivots if r[col] != 0]
            if done and len(pivots) <= 1:
                break
        p = pivots[0] if pivots else None
        rest = [r for r in m if r[col] == 0]
        if p is not None:
            if p[col] < 0:
                p = [-x for x in p]
            basis.append(p)
        m = [r for r in rest if any(r)]
        col += 1
    return basis


def lattice_contains(basis_rows, vector) -> bool:
    """Is `vector` in the integer row span of `basis_rows`?"""
    rows = hermite_form(basis_rows)
    v = list(vector)
    cols = len(v)
    for row in rows:
        col = next(k for k in range(cols) if row[k] != 0)
        if v[col] % row[col] != 0:
            return False
        q = v[col] // row[col]
        for k in range(cols):
            v[k] -= q * row[k]
    return not any(v)


def saturation_contains(basis_rows, vector) -> bool:
    """Is some positive multiple of `vector` in the row span (i.e. is the
    vector in the saturation of the lattice)?"""
    rows = hermite_form(basis_rows)
    v = [x for x in vector]
    cols = len(v)
    from fractions import Fraction
    w = [Fraction(x) for x in v]
    for row in rows:
        col = next(k for k in range(cols) if row[k] != 0)
        q = w[col] / row[col]
        for k in range(cols):
            w[k] -= q * row[k]
    return not any(w)


def smith_invariants(rows, cols=None):
    """Nonzero diagonal invariants of the Smith normal form.

    `rows` is a list of integer rows; `cols` fixes the column count when
    rows may be empty.  Returns the list of invariant factors d1 | d2 | ...
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    n_rows = len(m)
    n_cols = cols if cols is not None else len(m[0])
    invariants = []
    top = 0
    while top < min(n_rows, n_cols):
        # find smallest nonzero entry in the submatrix
        best = None
        for i in range(top, n_rows):
            for j in range(top, n_cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        _swap_rows(m, top, bi)
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        pivot = m[top][top]
        dirty = False
        for i in range(top + 1, n_rows):
            q = m[i][top] // pivot
            if q:
                for k in range(n_cols):
                    m[i][k] -= q * m[top][k]
            if m[i][top] != 0:
                dirty = True
        for j in range(top + 1, n_cols):
            q = m[top][j] // pivot
            if q:
                for i in range(n_rows):
                    m[i][j] -= q * m[i][top]
            if m[top][j] != 0:
                dirty = True
        if dirty:
            continue
        # pivot must divide all remaining entries for true SNF
        adjust = False
        for i in range(top + 1, n_rows):
            for j in range(top + 1, n_cols):
                if m[i][j] % pivot != 0:
                    for k in range(n_cols):
                        m[top][k] += m[i][k]
                    adjust = True
                    break
            if adjust:
                break
        if adjust:
            continue
        invariants.append(abs(pivot))
        top += 1
    return invariants


def cokernel_invariants(rows, cols):
    """Structure of Z^cols / row-span: (free rank, torsion invariants > 1)."""
    inv = smith_invariants(rows, cols)
    rank = len(inv)
    torsion = [d for d in inv if d > 1]
    return cols - rank, torsion
