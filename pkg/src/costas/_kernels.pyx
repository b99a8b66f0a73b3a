# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.  Signatures mirror costas._pykernels exactly."""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t

BACKEND = "cython"


cdef inline bint _involution(int* f, int n):
    cdef int i
    for i in range(n):
        if f[f[i] - 1] != i + 1:
            return False
    return True


def enumerate_costas(int n, prefix, int max_rows, bint store):
    """Count (and optionally collect) Costas completions of ``prefix``.

    Columns are filled left to right.  ``used`` is a bitmask of taken values;
    ``rowmask[k]`` holds the differences already present in triangle row k,
    offset by n - 1.  Only rows k <= max_rows are maintained during the search;
    leaves are accepted without further checks, so max_rows must be at least
    (n - 1) // 2 for the result to be exact.

    Returns (total, symmetric, arrays) where arrays is a list of tuples in
    lexicographic order when ``store`` is set, else None.
    """
    cdef int depth = len(prefix)
    cdef int* f = <int*> calloc(n + 1, sizeof(int))
    cdef int* nextv = <int*> calloc(n + 1, sizeof(int))
    cdef uint64_t* rowmask = <uint64_t*> calloc(n + 1, sizeof(uint64_t))
    cdef uint64_t used = 0
    cdef long long total = 0, symmetric = 0
    cdef int col, k, v, d, kmax
    cdef bint ok
    arrays = [] if store else None
    if n > 32:
        raise ValueError("compiled enumeration supports n <= 32")
    try:
        for col in range(depth):
            f[col] = prefix[col]
            used |= (<uint64_t>1) << (f[col] - 1)
            kmax = col if col < max_rows else max_rows
            for k in range(1, kmax + 1):
                d = f[col] - f[col - k] + n - 1
                rowmask[k] |= (<uint64_t>1) << d
        if depth == n:
            total = 1
            if _involution(f, n):
                symmetric = 1
            if store:
                arrays.append(tuple([f[i] for i in range(n)]))
            return total, symmetric, arrays
        col = depth
        nextv[col] = 1
        while col >= depth:
            v = nextv[col]
            while v <= n:
                if not (used >> (v - 1)) & 1:
                    kmax = col if col < max_rows else max_rows
                    ok = True
                    for k in range(1, kmax + 1):
                        d = v - f[col - k] + n - 1
                        if (rowmask[k] >> d) & 1:
                            ok = False
                            break
                    if ok:
                        break
                v += 1
            if v > n:
                col -= 1
                if col >= depth:
                    # undo placement at col
                    kmax = col if col < max_rows else max_rows
                    for k in range(1, kmax + 1):
                        d = f[col] - f[col - k] + n - 1
                        rowmask[k] &= ~((<uint64_t>1) << d)
                    used &= ~((<uint64_t>1) << (f[col] - 1))
                continue
            f[col] = v
            nextv[col] = v + 1
            if col == n - 1:
                total += 1
                if _involution(f, n):
                    symmetric += 1
                if store:
                    arrays.append(tuple([f[i] for i in range(n)]))
                continue
            kmax = col if col < max_rows else max_rows
            for k in range(1, kmax + 1):
                d = v - f[col - k] + n - 1
                rowmask[k] |= (<uint64_t>1) << d
            used |= (<uint64_t>1) << (v - 1)
            col += 1
            nextv[col] = 1
        return total, symmetric, arrays
    finally:
        free(f)
        free(nextv)
        free(rowmask)


cdef int _rows_ok(int* f, int n, int max_k, int* seen) nogil:
    cdef int k, j, d
    for j in range(2 * n + 1):
        seen[j] = 0
    for k in range(1, max_k + 1):
        for j in range(n - k):
            d = f[j + k] - f[j] + n
            if seen[d] == k:
                return 0
            seen[d] = k
    return 1


def costas_batch(arrays):
    """Costas verdict for each permutation in ``arrays`` (all of one order)."""
    cdef int count = len(arrays)
    if count == 0:
        return []
    cdef int n = len(arrays[0])
    cdef int* f = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* seen = <int*> malloc((2 * n + 2) * sizeof(int))
    cdef int a, i
    out = []
    try:
        for a in range(count):
            row = arrays[a]
            if len(row) != n:
                raise ValueError("arrays must share one order")
            for i in range(n):
                f[i] = row[i]
            out.append(bool(_rows_ok(f, n, n - 1, seen)))
        return out
    finally:
        free(f)
        free(seen)


def deficiency(values):
    """Sum over triangle rows of (entries - distinct entries)."""
    cdef int n = len(values)
    cdef int* f = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* seen = <int*> calloc(2 * n + 2, sizeof(int))
    cdef int k, j, d, total = 0
    try:
        for j in range(n):
            f[j] = values[j]
        for k in range(1, n):
            for j in range(n - k):
                d = f[j + k] - f[j] + n
                if seen[d] == k:
                    total += 1
                else:
                    seen[d] = k
        return total
    finally:
        free(f)
        free(seen)


cdef int _pair_max(int* f, int* g, int n, int* bucket, int width) nogil:
    # bucket is indexed by (u + n - 1) * width + (v + n - 1), zeroed on entry and exit
    cdef int i, j, idx, best = 0
    for i in range(n):
        for j in range(n):
            idx = (j - i + n - 1) * width + (g[j] - f[i] + n - 1)
            bucket[idx] += 1
            if bucket[idx] > best:
                best = bucket[idx]
    for i in range(n):
        for j in range(n):
            bucket[(j - i + n - 1) * width + (g[j] - f[i] + n - 1)] = 0
    return best


def max_cross(f_values, g_values):
    """Maximum over all shifts of the overlap count between two permutations."""
    cdef int n = len(f_values)
    cdef int width = 2 * n - 1
    cdef int* f = <int*> malloc(n * sizeof(int))
    cdef int* g = <int*> malloc(n * sizeof(int))
    cdef int* bucket = <int*> calloc(width * width, sizeof(int))
    cdef int i
    try:
        for i in range(n):
            f[i] = f_values[i]
            g[i] = g_values[i]
        return _pair_max(f, g, n, bucket, width)
    finally:
        free(f)
        free(g)
        free(bucket)


def family_max(arrays, labels):
    """Max cross-correlation over unordered pairs whose labels differ.

    Both orders of each pair are covered because the shift range is symmetric.
    """
    cdef int count = len(arrays)
    if count < 2:
        return 0
    cdef int n = len(arrays[0])
    cdef int width = 2 * n - 1
    cdef int* data = <int*> malloc(count * n * sizeof(int))
    cdef int* lab = <int*> malloc(count * sizeof(int))
    cdef int* bucket = <int*> calloc(width * width, sizeof(int))
    cdef int a, b, i, best = 0, val
    try:
        for a in range(count):
            row = arrays[a]
            lab[a] = labels[a]
            for i in range(n):
                data[a * n + i] = row[i]
        with nogil:
            for a in range(count):
                for b in range(a + 1, count):
                    if lab[a] == lab[b]:
                        continue
                    val = _pair_max(data + a * n, data + b * n, n, bucket, width)
                    if val > best:
                        best = val
        return best
    finally:
        free(data)
        free(lab)
        free(bucket)
