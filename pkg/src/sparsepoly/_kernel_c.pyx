# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure-Python multiply kernel (see _kernel_py.py)."""

from .core import PowerOverflowError

cdef long long INT64_MAX = 9223372036854775807
cdef long long INT64_MIN = -9223372036854775807 - 1


cdef tuple _merge(tuple t1, tuple t2):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t n1 = len(t1), n2 = len(t2)
    if n1 == 0:
        return t2
    if n2 == 0:
        return t1
    cdef list out = []
    cdef tuple p1, p2
    cdef object s1, s2
    cdef long long k1, k2
    while i < n1 and j < n2:
        p1 = <tuple> t1[i]
        p2 = <tuple> t2[j]
        s1 = p1[0]
        s2 = p2[0]
        if s1 < s2:
            out.append(p1)
            i += 1
        elif s2 < s1:
            out.append(p2)
            j += 1
        else:
            k1 = p1[1]
            k2 = p2[1]
            # pre-check so the C addition cannot overflow
            if (k1 > 0 and k2 > INT64_MAX - k1) or (k1 < 0 and k2 < INT64_MIN - k1):
                raise PowerOverflowError(
                    f"power {int(k1) + int(k2)} of {s1!r} outside the signed 64-bit range"
                )
            if k1 + k2 != 0:
                out.append((s1, k1 + k2))
            i += 1
            j += 1
    while i < n1:
        out.append(t1[i])
        i += 1
    while j < n2:
        out.append(t2[j])
        j += 1
    return tuple(out)


def merge_terms(t1, t2):
    """Merge two canonical terms, adding powers; zero sums drop out."""
    return _merge(t1, t2)


def mul_terms(dict p, dict q):
    """Convolve two term->coefficient dicts into a new dict."""
    cdef dict out = {}
    cdef list q_items = list(q.items())
    cdef Py_ssize_t m = len(q_items), idx
    cdef tuple t1, t2, t, pair
    cdef double c1, c2, c
    cdef object existing
    for t1, c1 in p.items():
        for idx in range(m):
            pair = <tuple> q_items[idx]
            t2 = <tuple> pair[0]
            c2 = <double> pair[1]
            t = _merge(t1, t2)
            existing = out.get(t)
            if existing is None:
                c = c1 * c2
                if c != 0.0:
                    out[t] = c
            else:
                c = (<double> existing) + c1 * c2
                if c == 0.0:
                    del out[t]
                else:
                    out[t] = c
    return out
