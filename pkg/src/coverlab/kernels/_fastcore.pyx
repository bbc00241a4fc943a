# cython: boundscheck=False, wraparound=False
"""Compiled exponent-vector kernels.

Same contracts as the pure backend: canonical (degree, lex) order,
duplicates and strict multiples removed. Exponents ride in 64-bit
integers; conversions and additions raise OverflowError rather than
wrapping.
"""

import array

BACKEND = "c"


cdef inline Py_ssize_t _deg(const long long[::1] flat, Py_ssize_t i, Py_ssize_t n) noexcept:
    cdef Py_ssize_t c
    cdef long long s = 0
    for c in range(n):
        s += flat[i * n + c]
    return s


def _filter_minimal(flat_arr, degs_arr, Py_ssize_t k, Py_ssize_t n):
    """Mask of rows not strictly divisible by an earlier kept row. Rows
    must arrive deduplicated and sorted by (degree, lex)."""
    cdef const long long[::1] flat = flat_arr
    cdef const long long[::1] degs = degs_arr
    mask = bytearray(k)
    cdef unsigned char[::1] m = mask
    cdef Py_ssize_t i, j, c
    cdef bint ok
    for i in range(k):
        m[i] = 1
    for i in range(k):
        for j in range(i):
            if m[j] and degs[j] < degs[i]:
                ok = True
                for c in range(n):
                    if flat[j * n + c] > flat[i * n + c]:
                        ok = False
                        break
                if ok:
                    m[i] = 0
                    break
    return mask


def _pairwise_sums(fa_arr, Py_ssize_t ka, fb_arr, Py_ssize_t kb, Py_ssize_t n):
    cdef const long long[::1] fa = fa_arr
    cdef const long long[::1] fb = fb_arr
    out_arr = array.array("q", bytes(8 * ka * kb * n))
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t i, j, c, row
    cdef long long s
    row = 0
    for i in range(ka):
        for j in range(kb):
            for c in range(n):
                s = fa[i * n + c] + fb[j * n + c]
                if s < fa[i * n + c]:
                    raise OverflowError("exponent sum exceeds 64 bits")
                out[row * n + c] = s
            row += 1
    return out_arr


def _pairwise_maxes(fa_arr, Py_ssize_t ka, fb_arr, Py_ssize_t kb, Py_ssize_t n):
    cdef const long long[::1] fa = fa_arr
    cdef const long long[::1] fb = fb_arr
    out_arr = array.array("q", bytes(8 * ka * kb * n))
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t i, j, c, row
    cdef long long x, y
    row = 0
    for i in range(ka):
        for j in range(kb):
            for c in range(n):
                x = fa[i * n + c]
                y = fb[j * n + c]
                out[row * n + c] = x if x >= y else y
            row += 1
    return out_arr


def _flatten(vecs):
    arr = array.array("q")
    for v in vecs:
        arr.extend(v)
    return arr


def _finish(uniq):
    """uniq: deduplicated tuples. Sorts canonically and drops strict
    multiples via the compiled filter."""
    ordered = sorted(uniq, key=lambda v: (sum(v), v))
    k = len(ordered)
    if k == 0:
        return []
    n = len(ordered[0])
    if n == 0 or k == 1:
        return ordered
    flat = _flatten(ordered)
    degs = array.array("q", [sum(v) for v in ordered])
    mask = _filter_minimal(flat, degs, k, n)
    return [v for v, keep in zip(ordered, mask) if keep]


def minimalize(vecs):
    return _finish({tuple(v) for v in vecs})


def _dedupe_rows(rows_arr, Py_ssize_t count, Py_ssize_t n):
    seen = set()
    uniq = []
    cdef Py_ssize_t i
    for i in range(count):
        chunk = rows_arr[i * n : (i + 1) * n]
        key = chunk.tobytes()
        if key not in seen:
            seen.add(key)
            uniq.append(tuple(chunk))
    return uniq


def product_minimalize(a, b):
    a = [tuple(v) for v in a]
    b = [tuple(v) for v in b]
    if not a or not b:
        return []
    n = len(a[0])
    if n == 0:
        return [()]
    sums = _pairwise_sums(_flatten(a), len(a), _flatten(b), len(b), n)
    return _finish(_dedupe_rows(sums, len(a) * len(b), n))


def lcm_minimalize(a, b):
    a = [tuple(v) for v in a]
    b = [tuple(v) for v in b]
    if not a or not b:
        return []
    n = len(a[0])
    if n == 0:
        return [()]
    maxes = _pairwise_maxes(_flatten(a), len(a), _flatten(b), len(b), n)
    return _finish(_dedupe_rows(maxes, len(a) * len(b), n))
