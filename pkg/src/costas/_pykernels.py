"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Same signatures and results; used when the extension is not built or when
``COSTAS_PURE_PYTHON`` is set.
"""
from collections import Counter

BACKEND = "python"


def enumerate_costas(n, prefix, max_rows, store):
    f = list(prefix) + [0] * (n - len(prefix))
    depth = len(prefix)
    used = set(prefix)
    rows = [set() for _ in range(n)]
    for col in range(depth):
        for k in range(1, min(col, max_rows) + 1):
            rows[k].add(f[col] - f[col - k])
    total = symmetric = 0
    arrays = [] if store else None

    def leaf():
        nonlocal total, symmetric
        total += 1
        if all(f[v - 1] == i for i, v in enumerate(f, 1)):
            symmetric += 1
        if store:
            arrays.append(tuple(f))

    def place(col):
        if col == n:
            leaf()
            return
        kmax = min(col, max_rows)
        for v in range(1, n + 1):
            if v in used:
                continue
            diffs = [v - f[col - k] for k in range(1, kmax + 1)]
            if any(d in rows[k] for k, d in enumerate(diffs, 1)):
                continue
            f[col] = v
            used.add(v)
            for k, d in enumerate(diffs, 1):
                rows[k].add(d)
            place(col + 1)
            for k, d in enumerate(diffs, 1):
                rows[k].discard(d)
            used.discard(v)
        f[col] = 0

    place(depth)
    return total, symmetric, arrays


def _rows_ok(f, max_k):
    n = len(f)
    for k in range(1, max_k + 1):
        row = [f[j + k] - f[j] for j in range(n - k)]
        if len(set(row)) != len(row):
            return False
    return True


def costas_batch(arrays):
    return [_rows_ok(f, len(f) - 1) for f in arrays]


def deficiency(values):
    n = len(values)
    total = 0
    for k in range(1, n):
        row = [values[j + k] - values[j] for j in range(n - k)]
        total += len(row) - len(set(row))
    return total


def max_cross(f, g):
    n = len(f)
    counts = Counter((j - i, g[j] - f[i]) for i in range(n) for j in range(n))
    return max(counts.values())


def family_max(arrays, labels):
    best = 0
    count = len(arrays)
    for a in range(count):
        for b in range(a + 1, count):
            if labels[a] != labels[b]:
                best = max(best, max_cross(arrays[a], arrays[b]))
    return best
