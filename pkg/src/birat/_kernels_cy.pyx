# cython: language_level=3
# Compiled twin of _kernels_py.py; same contract, same results, faster loops.
# Build in place with:  python setup.py build_ext --inplace

cimport cython


@cython.boundscheck(False)
@cython.wraparound(False)
cdef inline tuple _tadd(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = ea[i] + eb[i]
    return tuple(out)


def mul_terms(dict a, dict b):
    """Multiply two term dicts, dropping coefficients that cancel to zero."""
    if not a or not b:
        return {}
    cdef dict out = {}
    cdef tuple ea, eb, key
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = _tadd(ea, eb)
            prev = out.get(key)
            if prev is None:
                out[key] = ca * cb
            else:
                out[key] = prev + ca * cb
    return {k: v for k, v in out.items() if v}


def add_terms(dict a, dict b):
    """Add two term dicts, dropping coefficients that cancel to zero."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    cdef tuple e
    for e, c in b.items():
        prev = out.get(e)
        if prev is None:
            out[e] = c
        else:
            s = prev + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def scale_terms(dict terms, c):
    """Multiply every coefficient by the scalar c (c may be zero)."""
    if not c:
        return {}
    cdef dict out = {}
    cdef tuple e
    for e, v in terms.items():
        out[e] = c * v
    return out
