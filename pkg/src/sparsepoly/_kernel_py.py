"""Pure-Python multiply kernel.

The term-pair convolution is the hot loop of the whole library; this is
the fallback implementation, mirrored exactly by the compiled extension
in ``_kernel_c.pyx``.  Both operate on raw term->coefficient dicts so the
wrapping Mvp type stays out of the inner loop.
"""

from .core import INT64_MAX, INT64_MIN, PowerOverflowError


def merge_terms(t1, t2):
    """Merge two canonical terms, adding powers; zero sums drop out."""
    if not t1:
        return t2
    if not t2:
        return t1
    out = []
    i = j = 0
    n1 = len(t1)
    n2 = len(t2)
    while i < n1 and j < n2:
        s1, k1 = t1[i]
        s2, k2 = t2[j]
        if s1 < s2:
            out.append(t1[i])
            i += 1
        elif s2 < s1:
            out.append(t2[j])
            j += 1
        else:
            k = k1 + k2
            if k != 0:
                if k > INT64_MAX or k < INT64_MIN:
                    raise PowerOverflowError(
                        f"power {k} of {s1!r} outside the signed 64-bit range"
                    )
                out.append((s1, k))
            i += 1
            j += 1
    out.extend(t1[i:])
    out.extend(t2[j:])
    return tuple(out)


def mul_terms(p, q):
    """Convolve two term->coefficient dicts into a new dict.

    Every term pair is accumulated directly into the result map with
    exact-zero deletion, so the output satisfies the storage invariants.
    """
    out = {}
    get = out.get
    q_items = list(q.items())
    for t1, c1 in p.items():
        for t2, c2 in q_items:
            t = merge_terms(t1, t2)
            c = get(t, 0.0) + c1 * c2
            if c == 0.0:
                out.pop(t, None)
            else:
                out[t] = c
    return out


def mul_terms_with_count(p, q):
    """mul_terms plus the number of accumulate operations performed."""
    out = {}
    get = out.get
    count = 0
    q_items = list(q.items())
    for t1, c1 in p.items():
        for t2, c2 in q_items:
            t = merge_terms(t1, t2)
            count += 1
            c = get(t, 0.0) + c1 * c2
            if c == 0.0:
                out.pop(t, None)
            else:
                out[t] = c
    return out, count
