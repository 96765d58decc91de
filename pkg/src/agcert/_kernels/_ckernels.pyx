# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``.

Keys stay Python ints (they exceed 64 bits for more than a few
variables), so the gain comes from typed loops and direct dict access.
"""

from heapq import heapify, heappop, heappush
from time import perf_counter

from ._pykernels import DeadlineExceeded


def poly_mul(dict f, dict g):
    cdef dict out = {}
    cdef object ka, ca, kb, cb, k, v
    cdef list gi
    cdef Py_ssize_t j, n
    if len(f) > len(g):
        f, g = g, f
    gi = list(g.items())
    n = len(gi)
    for ka, ca in f.items():
        for j in range(n):
            kb, cb = <tuple>gi[j]
            k = ka + kb
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    return {k: v for k, v in out.items() if v}


def poly_mul_term(dict f, object key, object coeff):
    cdef dict out = {}
    cdef object k, c
    for k, c in f.items():
        out[k + key] = c * coeff
    return out


def poly_add_scaled(dict f, dict g, object coeff, object shift):
    cdef dict out = dict(f)
    cdef object k, c, nk, v, nv
    for k, c in g.items():
        nk = k + shift
        v = out.get(nk)
        if v is None:
            out[nk] = coeff * c
        else:
            nv = v + coeff * c
            if nv:
                out[nk] = nv
            else:
                del out[nk]
    return out


def normal_form(dict f, list basis, object low_mask, object guard, object deadline=None):
    cdef dict work = dict(f)
    cdef dict rem = {}
    cdef list heap = [-k for k in work]
    cdef object k, c, low, lk, ll, q, tk, tc, nk, v
    cdef list tail
    cdef tuple entry
    cdef Py_ssize_t steps = 0, i, nb = len(basis), j, nt
    cdef bint found
    heapify(heap)
    while heap:
        k = -heappop(heap)
        c = work.pop(k)
        if not c:
            continue
        low = k & low_mask
        found = False
        for i in range(nb):
            entry = <tuple>basis[i]
            lk = entry[0]
            ll = entry[1]
            if ((low + guard) - ll) & guard == guard:
                tail = <list>entry[2]
                q = k - lk
                steps += 1
                if deadline is not None and not steps & 15 and perf_counter() > deadline:
                    raise DeadlineExceeded(steps)
                nt = len(tail)
                for j in range(nt):
                    tk, tc = <tuple>tail[j]
                    nk = q + tk
                    v = work.get(nk)
                    if v is None:
                        work[nk] = -(c * tc)
                        heappush(heap, -nk)
                    else:
                        work[nk] = v - c * tc
                found = True
                break
        if not found:
            rem[k] = c
    return rem, steps


def divides_key(object a_low, object b_low, object guard):
    return ((b_low + guard) - a_low) & guard == guard
