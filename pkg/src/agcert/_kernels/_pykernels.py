"""Pure-Python polynomial kernels over packed-integer monomial keys.

A polynomial is a dict mapping packed monomial keys to nonzero
coefficients.  Keys are additive under monomial multiplication and their
integer order is the monomial order (see :mod:`agcert.poly.ring`).
"""

from heapq import heapify, heappop, heappush
from time import perf_counter


class DeadlineExceeded(RuntimeError):
    """A reduction ran past its wall-clock deadline."""


def poly_mul(f, g):
    if len(f) > len(g):
        f, g = g, f
    out = {}
    get = out.get
    gi = list(g.items())
    for ka, ca in f.items():
        for kb, cb in gi:
            k = ka + kb
            v = get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    return {k: v for k, v in out.items() if v}


def poly_mul_term(f, key, coeff):
    return {k + key: c * coeff for k, c in f.items()}


def poly_add_scaled(f, g, coeff, shift):
    """Return f + coeff * m * g where m has packed key ``shift``."""
    out = dict(f)
    get = out.get
    for k, c in g.items():
        nk = k + shift
        v = get(nk)
        if v is None:
            out[nk] = coeff * c
        else:
            nv = v + coeff * c
            if nv:
                out[nk] = nv
            else:
                del out[nk]
    return out


def normal_form(f, basis, low_mask, guard, deadline=None):
    """Full normal form of ``f`` modulo a list of monic polynomials.

    ``basis`` holds triples (lead_key, lead_low, tail) where ``tail`` is a
    list of (key, coeff) pairs of the polynomial without its leading term.
    Returns (remainder dict, number of reduction steps).  With a
    ``deadline`` (a perf_counter value) it raises DeadlineExceeded once the
    clock passes it.
    """
    f = dict(f)
    heap = [-k for k in f]
    heapify(heap)
    rem = {}
    steps = 0
    while heap:
        k = -heappop(heap)
        c = f.pop(k)
        if not c:
            continue
        low = k & low_mask
        for lk, ll, tail in basis:
            if ((low + guard) - ll) & guard == guard:
                q = k - lk
                steps += 1
                if deadline is not None and not steps & 15 and perf_counter() > deadline:
                    raise DeadlineExceeded(steps)
                for tk, tc in tail:
                    nk = q + tk
                    v = f.get(nk)
                    if v is None:
                        f[nk] = -(c * tc)
                        heappush(heap, -nk)
                    else:
                        f[nk] = v - c * tc
                break
        else:
            rem[k] = c
    return rem, steps


def divides_key(a_low, b_low, guard):
    """True if the monomial with low part ``a_low`` divides ``b_low``."""
    return ((b_low + guard) - a_low) & guard == guard
