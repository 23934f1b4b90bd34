"""Dense linear algebra over a prime field F_p on small list-of-rows matrices."""

from __future__ import annotations

Matrix = list[list[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def eye(n: int) -> Matrix:
    return [[int(r == c) for c in range(n)] for r in range(n)]


def matmul(a: Matrix, b: Matrix, p: int, rows: int, inner: int, cols: int) -> Matrix:
    """a @ b mod p with explicit shapes, so empty matrices stay well defined."""
    return [[sum(a[r][k] * b[k][c] for k in range(inner)) % p for c in range(cols)]
            for r in range(rows)]


def rref(m: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    r = [[x % p for x in row] for row in m]
    rows = len(r)
    cols = len(r[0]) if rows else 0
    pivots: list[int] = []
    lead = 0
    for c in range(cols):
        pivot = next((i for i in range(lead, rows) if r[i][c]), None)
        if pivot is None:
            continue
        r[lead], r[pivot] = r[pivot], r[lead]
        inv = pow(r[lead][c], p - 2, p)
        r[lead] = [(x * inv) % p for x in r[lead]]
        for i in range(rows):
            if i != lead and r[i][c]:
                f = r[i][c]
                r[i] = [(x - f * y) % p for x, y in zip(r[i], r[lead])]
        pivots.append(c)
        lead += 1
        if lead == rows:
            break
    return r, pivots


def rank(m: Matrix, p: int) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: Matrix, p: int, cols: int) -> list[list[int]]:
    """Basis of {x : m x = 0} in F_p^cols."""
    if not m:
        return [[int(r == c) for r in range(cols)] for c in range(cols)]
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-r[row][f]) % p
        basis.append(v)
    return basis


def column_space_complement(m: Matrix, p: int, n: int) -> tuple[list[list[int]], list[int]]:
    """Independent columns spanning im(m) and standard basis indices completing them."""
    cols = len(m[0]) if m else 0
    vectors = [[m[r][c] for r in range(n)] for c in range(cols)]
    chosen: list[list[int]] = []
    for v in vectors:
        if rank(chosen + [v], p) > len(chosen):
            chosen.append(v)
    extra = []
    for k in range(n):
        e = [int(r == k) for r in range(n)]
        if rank(chosen + [[int(r == x) for r in range(n)] for x in extra] + [e], p) > len(chosen) + len(extra):
            extra.append(k)
    return chosen, extra


def inverse(m: Matrix, p: int) -> Matrix:
    n = len(m)
    aug = [list(row) + [int(r == c) for c in range(n)] for r, row in enumerate(m)]
    r, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in r]
