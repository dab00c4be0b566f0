"""Smith normal form of small integer matrices."""

__all__ = ["invariant_factors", "cokernel"]


def invariant_factors(matrix):
    """Nonzero diagonal entries ``d1 | d2 | ...`` of the Smith form of ``matrix``.

    ``matrix`` is a list of integer rows; it is not modified.
    """
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
                    a[t], a[i] = a[i], a[t]
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
                    for row in a:
                        row[t], row[j] = row[j], row[t]
            if not done:
                continue
            # the pivot must divide every remaining entry
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def cokernel(matrix, rows=None):
    """Structure of ``Z^rows / image(matrix)`` as ``(free_rank, torsion)``.

    Columns of ``matrix`` are the images of the source generators.
    ``rows`` must be given when the matrix has no columns.
    """
    m = len(matrix) if rows is None else rows
    factors = invariant_factors(matrix) if matrix and matrix[0] else []
    return m - len(factors), [f for f in factors if f != 1]
