"""Roots of univariate polynomials inside a number field.

The search is p-adic: pick a prime p at which the field's minimal
polynomial splits into distinct linear factors, find the roots of every
conjugate of the polynomial mod p, Hensel-lift them, and recombine one
root per embedding into coordinate vectors.  A rigorous a priori bound on
the coordinates of integral roots decides how far to lift and which
recombinations are genuine.  Every candidate is then checked exactly, so
returned roots are always correct; the bound makes the list complete.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from ..arith import NFElem, NumberField, Rat, nf_sqrt
from ..linalg import inverse
from .univariate import UPoly, squarefree_part

_FIRST_PRIME = 10007


# --- small helpers over Z/pZ ------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        if c:
            for i, x in enumerate(b):
                a[i + k] = (a[i + k] - c * x) % p
        a.pop()
        _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _pgcd(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pdiv_exact(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        q[k] = c
        for i, x in enumerate(b):
            a[i + k] = (a[i + k] - c * x) % p
        a.pop()
        _trim(a)
    return q


def roots_mod_p(f, p: int, rng: random.Random) -> list:
    """Distinct roots in F_p of an integer polynomial (low to high)."""
    f = _trim([x % p for x in f])
    if len(f) <= 1:
        return []
    g = _pgcd(f, _psub(_ppowmod([0, 1], p, f, p), [0, 1], p), p)
    out = []
    stack = [g]
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d <= 0:
            continue
        if d == 1:
            out.append((-h[0]) * pow(h[1], -1, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            s = _psub(_ppowmod([a, 1], (p - 1) // 2, h, p), [1], p)
            k = _pgcd(h, s, p)
            if 0 < len(k) - 1 < d:
                stack.append(k)
                stack.append(_pdiv_exact(h, k, p))
                break
    return sorted(out)


def _eval_mod(f, x, q):
    acc = 0
    for a in reversed(f):
        acc = (acc * x + a) % q
    return acc


def _hensel(f, r, p, k):
    """Lift a simple root r of f mod p to a root mod p^k."""
    df = [i * a for i, a in enumerate(f)][1:]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        q = p**prec
        r = (r - _eval_mod(f, r, q) * pow(_eval_mod(df, r, q), -1, q)) % q
    return r


# --- bounds --------------------------------------------------------------------


def _power_sums(m_int, n):
    """Power sums p_0..p_{2n-2} of the roots of monic integer m (low to high)."""
    a = m_int  # a[n] == 1
    ps = [Fraction(n)]
    for k in range(1, 2 * n - 1):
        s = Fraction(0)
        if k <= n:
            s -= k * a[n - k]
            for i in range(1, k):
                s -= a[n - i] * ps[k - i]
        else:
            for i in range(1, n + 1):
                s -= a[n - i] * ps[k - i]
        ps.append(s)
    return ps


class _FieldData:
    """Per-field constants for the p-adic root search."""

    def __init__(self, field: NumberField):
        m = field.min_poly
        if any(Rat(c).denominator != 1 for c in m):
            raise NotImplementedError("root search needs an integral minimal polynomial")
        self.m = [int(c) for c in m]
        n = field.degree
        self.n = n
        self.R = 1 + max((abs(c) for c in self.m[:-1]), default=0)
        if n == 1:
            self.disc = 1
            self.dual_norm = [Fraction(1)]
        else:
            ps = _power_sums(self.m, n)
            T = [[ps[j + k] for k in range(n)] for j in range(n)]
            Tinv = inverse(T, Fraction(0), Fraction(1))
            d = _trace_det(T)
            self.disc = abs(int(d))
            self.dual_norm = [sum(abs(Tinv[i][l]) * self.R**l for l in range(n)) for i in range(n)]
        self.prime_cache: dict = {}


def _trace_det(T):
    n = len(T)
    m = [list(r) for r in T]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


_FIELD_DATA: dict = {}


def _field_data(field: NumberField) -> _FieldData:
    fd = _FIELD_DATA.get(field)
    if fd is None:
        fd = _FieldData(field)
        _FIELD_DATA[field] = fd
    return fd


def _coords(field, a):
    return field.coeffs_of(a)


# --- main search ---------------------------------------------------------------


def field_roots(f: UPoly) -> list:
    """Distinct roots of ``f`` in its coefficient field."""
    field = f.field
    if f.degree <= 0:
        return []
    g = squarefree_part(f)
    if g.degree == 1:
        return [-g.c[0]]
    if g.degree == 2 and field.degree <= 2:
        b, c = g.c[1], g.c[0]
        disc = b * b - 4 * c
        s = nf_sqrt(disc, field)
        if s is None:
            return []
        r1, r2 = (-b + s) / 2, (-b - s) / 2
        return _sort_roots([r1, r2])
    return _sort_roots(_padic_roots(g))


def field_roots_dense(coeffs, field: NumberField) -> list:
    return _padic_roots(squarefree_part(UPoly(field, coeffs)))


def _sort_roots(rs):
    def key(a):
        c = a.c if isinstance(a, NFElem) else (a,)
        return tuple(Fraction(int(x.numerator), int(x.denominator)) for x in c)

    return sorted(set(rs), key=key)


def _padic_roots(g: UPoly) -> list:
    field = g.field
    if g.degree <= 0:
        return []
    fd = _field_data(field)
    n = fd.n
    d = g.degree
    # integral monic h(y) = s^d g(y/s)
    coords = [[Fraction(int(Rat(x).numerator), int(Rat(x).denominator)) for x in _coords(field, a)] for a in g.c]
    s = 1
    for cs in coords:
        for x in cs:
            s = s * x.denominator // math.gcd(s, x.denominator)
    h_coords = []
    for k, cs in enumerate(coords):
        scale = s ** (d - k)
        h_coords.append([int(x * scale) for x in cs])
    # bound on |sigma(beta)| for every root beta of h
    A = 1 + max(
        (sum(abs(c) * fd.R**i for i, c in enumerate(cs)) for cs in h_coords[:-1]),
        default=0,
    )
    C = max(n * A * dn for dn in fd.dual_norm)
    bound = int(math.ceil(C * fd.disc))

    p = _choose_prime(fd, h_coords)
    k = 1
    while p**k <= 2 * bound + 1:
        k += 1
    q = p**k
    rng = random.Random(p)
    taus0 = roots_mod_p(fd.m, p, rng)
    taus = [_hensel(fd.m, t, p, k) for t in taus0]
    root_lists = []
    for tau in taus:
        hj = [_eval_mod(cs, tau, q) for cs in h_coords]
        r0 = roots_mod_p(hj, p, rng)
        if not r0:
            return []
        root_lists.append([_hensel(hj, r, p, k) for r in r0])
    V = [[pow(t, i, q) for i in range(n)] for t in taus]
    Vinv = _inverse_mod(V, q)
    D = fd.disc
    found = []
    for tup in _product(root_lists):
        cand = []
        ok = True
        for i in range(n):
            v = sum(Vinv[i][j] * tup[j] for j in range(n)) % q
            v = v * D % q
            if v > q // 2:
                v -= q
            if abs(v) > bound:
                ok = False
                break
            cand.append(Rat(v, D))
        if not ok:
            continue
        beta = field.from_coeffs(cand)
        alpha = beta / s
        if not g(alpha):
            found.append(alpha)
    return found


def _product(lists):
    if not lists:
        yield ()
        return
    first, rest = lists[0], lists[1:]
    for x in first:
        for tail in _product(rest):
            yield (x,) + tail


def _inverse_mod(M, q):
    n = len(M)
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if math.gcd(a[i][c], q) == 1)
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, q)
        a[c] = [x * inv % q for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def _choose_prime(fd: _FieldData, h_coords) -> int:
    n = fd.n
    p = _FIRST_PRIME
    rng = random.Random(0)
    lead_ok = True
    while True:
        if _is_prime(p) and fd.disc % p != 0:
            taus = roots_mod_p(fd.m, p, rng)
            if len(taus) == n:
                lead_ok = True
                for tau in taus:
                    hj = [_eval_mod(cs, tau, p) for cs in h_coords]
                    dh = _trim([(i * a) % p for i, a in enumerate(hj)][1:])
                    if len(_pgcd(hj, dh, p)) != 1:
                        lead_ok = False
                        break
                if lead_ok:
                    return p
        p += 2


def roots_with_multiplicity(f: UPoly) -> list:
    """List of (root, multiplicity) for the roots of ``f`` in its field."""
    return [(r, f.root_multiplicity(r)) for r in field_roots(f)]


def split_off_roots(f: UPoly):
    """Return ((root, multiplicity) list, cofactor without roots in the field)."""
    rm = roots_with_multiplicity(f)
    rest = f
    for r, mlt in rm:
        lin = UPoly(f.field, [-r, 1])
        for _ in range(mlt):
            rest = rest.exact_div(lin)
    return rm, rest
