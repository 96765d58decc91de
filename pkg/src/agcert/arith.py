"""Exact rationals and small algebraic number fields Q[t]/(m(t)).

Elements of the rational field are plain ``Rat`` values (gmpy2 ``mpq`` when
available, :class:`fractions.Fraction` otherwise).  Elements of a field of
degree >= 2 are :class:`NFElem` instances holding the reduced residue
coefficients.  Both kinds support the usual arithmetic operators, so
polynomial code can treat coefficients generically.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as Rat

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

    HAVE_GMPY2 = False

MAX_FIELD_DEGREE = 8


class FieldError(ArithmeticError):
    """Raised on field mismatches and invalid field constructions."""


def rat(x, den=None):
    """Coerce ``x`` (int, Rat, Fraction, or 'p/q' string) to ``Rat``."""
    if den is not None:
        return Rat(x, den)
    if isinstance(x, str):
        x = x.strip()
        if "/" in x:
            p, q = x.split("/")
            return Rat(int(p), int(q))
        return Rat(int(x))
    return Rat(x)


def rat_sqrt(a):
    """Exact square root of a nonnegative rational, or None."""
    a = Rat(a)
    if a < 0:
        return None
    p, q = int(a.numerator), int(a.denominator)
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Rat(rp, rq)
    return None


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _rat_poly_divmod(a: list, b: list):
    a = list(a)
    q = [Rat(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _rat_poly_roots(m: Sequence) -> list:
    """Rational roots of a rational polynomial (coefficients low -> high)."""
    m = [Rat(c) for c in m]
    den = 1
    for c in m:
        den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
    z = [int(c * den) for c in m]
    roots = []
    while z and z[0] == 0:
        z.pop(0)
        if Rat(0) not in roots:
            roots.append(Rat(0))
    if len(z) <= 1:
        return roots
    lead, const = abs(z[-1]), abs(z[0])

    def divisors(n):
        out = []
        for d in range(1, math.isqrt(n) + 1):
            if n % d == 0:
                out.append(d)
                if d * d != n:
                    out.append(n // d)
        return out

    for p in divisors(const):
        for q in divisors(lead):
            for s in (1, -1):
                r = Rat(s * p, q)
                if r in roots:
                    continue
                acc = Rat(0)
                for c in reversed(z):
                    acc = acc * r + c
                if acc == 0:
                    roots.append(r)
    return roots


def _has_rational_quadratic_factor(m: Sequence) -> bool:
    """Search for a factorization of an integer quartic into two quadratics."""
    den = 1
    for c in m:
        den = den * int(Rat(c).denominator) // math.gcd(den, int(Rat(c).denominator))
    z = [int(Rat(c) * den) for c in m]
    a4, a0 = z[4], z[0]
    bound = 1 + max(abs(c) for c in z)
    # Gauss lemma: factors (p2 x^2 + p1 x + p0)(q2 x^2 + q1 x + q0) over Z.
    def divs(n):
        n = abs(n)
        return [d for d in range(1, n + 1) if n % d == 0] if n else []

    for p2 in divs(a4):
        q2 = a4 // p2
        for p0 in divs(a0) + [-d for d in divs(a0)]:
            q0 = a0 // p0
            for p1 in range(-bound, bound + 1):
                # x^3 coefficient fixes q1
                num = z[3] - p1 * q2
                if num % p2:
                    continue
                q1 = num // p2
                if p2 * q0 + p1 * q1 + p0 * q2 == z[2] and p1 * q0 + p0 * q1 == z[1]:
                    return True
    return False


class NumberField:
    """The field Q[t]/(min_poly) for a monic irreducible ``min_poly``.

    ``min_poly`` is given low -> high, e.g. ``[2, 0, 1]`` for t^2 + 2.
    """

    def __init__(self, min_poly: Sequence, gen: str = "r", check: bool = True):
        m = [Rat(c) for c in min_poly]
        _trim(m)
        if len(m) < 2:
            raise FieldError("minimal polynomial must have degree >= 1")
        if m[-1] != 1:
            lc = m[-1]
            m = [c / lc for c in m]
        n = len(m) - 1
        if n > MAX_FIELD_DEGREE:
            raise FieldError(f"degree {n} exceeds supported bound {MAX_FIELD_DEGREE}")
        self.min_poly = tuple(m)
        self.degree = n
        self.gen_name = gen
        if check and n > 1:
            self._check_irreducible()
        # t^k for k = n .. 2n-2 as reduced coefficient vectors
        red = {}
        cur = [-c for c in m[:-1]]
        for k in range(n, 2 * n - 1):
            red[k] = tuple(cur)
            top = cur[-1]
            cur = [Rat(0)] + cur[:-1]
            if top:
                for i in range(n):
                    cur[i] -= top * m[i]
        self._red = red
        self.zero = Rat(0) if n == 1 else NFElem(self, (Rat(0),) * n, _raw=True)
        self.one = Rat(1) if n == 1 else NFElem(self, (Rat(1),) + (Rat(0),) * (n - 1), _raw=True)
        self._hash = hash(self.min_poly)

    # --- identity -----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NumberField({self.min_poly_str()})"

    def min_poly_str(self, var: str = "t") -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.min_poly[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            coef = "" if (c in (1, -1) and k) else str(abs(c))
            sep = "*" if coef and mono else ""
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{coef}{sep}{mono}"))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    @classmethod
    def rationals(cls) -> "NumberField":
        return QQ

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def _check_irreducible(self):
        m = self.min_poly
        if _rat_poly_roots(m):
            raise FieldError(f"{self.min_poly_str()} has a rational root")
        if self.degree == 4 and _has_rational_quadratic_factor(m):
            raise FieldError(f"{self.min_poly_str()} splits into rational quadratics")
        if self.degree > 4:
            # TODO(irreducibility): quintic and higher need a real factorizer;
            # only the rational-root test is applied there.
            pass

    # --- element construction ----------------------------------------
    def gen(self):
        if self.degree == 1:
            return -self.min_poly[0]
        return NFElem(self, (Rat(0), Rat(1)) + (Rat(0),) * (self.degree - 2), _raw=True)

    def __call__(self, x):
        """Coerce ``x`` into this field."""
        if isinstance(x, NFElem):
            if x.field != self:
                raise FieldError("element belongs to a different field")
            return x
        if self.degree == 1:
            return Rat(x)
        return NFElem(self, (Rat(x),) + (Rat(0),) * (self.degree - 1), _raw=True)

    def from_coeffs(self, coeffs: Iterable):
        c = [Rat(x) for x in coeffs]
        if self.degree == 1:
            return self.reduce_vector(c)[0]
        return NFElem(self, tuple(self.reduce_vector(c)), _raw=True)

    def reduce_vector(self, c: list) -> list:
        """Reduce a coefficient vector of any length modulo min_poly."""
        n = self.degree
        c = list(c)
        if len(c) <= n:
            return c + [Rat(0)] * (n - len(c))
        m = self.min_poly
        for k in range(len(c) - 1, n - 1, -1):
            top = c[k]
            if top:
                for i in range(n):
                    c[k - n + i] -= top * m[i]
        return c[:n]

    def coeffs_of(self, a) -> tuple:
        if isinstance(a, NFElem):
            return a.c
        return (Rat(a),) + (Rat(0),) * (self.degree - 1)

    def is_element(self, a) -> bool:
        if isinstance(a, NFElem):
            return a.field == self
        return isinstance(a, (int, type(Rat(0))))

    def random_element(self, rng, size: int = 5):
        return self.from_coeffs(Rat(rng.randint(-size, size), rng.randint(1, size)) for _ in range(self.degree))


class NFElem:
    """Element of a number field of degree >= 2, stored as a reduced residue."""

    __slots__ = ("field", "c")

    def __init__(self, field: NumberField, coeffs, _raw: bool = False):
        self.field = field
        if _raw:
            self.c = coeffs
        else:
            self.c = tuple(field.reduce_vector([Rat(x) for x in coeffs]))

    # --- helpers --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("field mismatch")
            return other.c
        if isinstance(other, (int, type(Rat(0)))) or hasattr(other, "denominator"):
            return (Rat(other),) + (Rat(0),) * (self.field.degree - 1)
        return None

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __eq__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return self.c == oc

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return NFElem(self.field, tuple(a + b for a, b in zip(self.c, oc)), _raw=True)

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return NFElem(self.field, tuple(a - b for a, b in zip(self.c, oc)), _raw=True)

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return NFElem(self.field, tuple(b - a for a, b in zip(self.c, oc)), _raw=True)

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.c), _raw=True)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, NFElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("field mismatch")
            a, b = self.c, other.c
            n = len(a)
            if n == 2:
                # t^2 = -m1 t - m0
                m0, m1 = self.field.min_poly[0], self.field.min_poly[1]
                a0, a1 = a
                b0, b1 = b
                hi = a1 * b1
                c0 = a0 * b0 - hi * m0
                c1 = a0 * b1 + a1 * b0
                if m1:
                    c1 -= hi * m1
                return NFElem(self.field, (c0, c1), _raw=True)
            conv = [Rat(0)] * (2 * n - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            conv[i + j] += x * y
            res = conv[:n]
            red = self.field._red
            for k in range(n, 2 * n - 1):
                v = conv[k]
                if v:
                    for i, r in enumerate(red[k]):
                        if r:
                            res[i] += v * r
            return NFElem(self.field, tuple(res), _raw=True)
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        s = oc[0]
        return NFElem(self.field, tuple(a * s for a in self.c), _raw=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in number field")
        if self.is_rational():
            return self.field(1 / self.c[0])
        # extended Euclid on (self, min_poly) over Q
        r0, r1 = list(self.field.min_poly), _trim(list(self.c))
        s0, s1 = [Rat(0)], [Rat(1)]
        while len(r1) > 1:
            q, r = _rat_poly_divmod(r0, r1)
            prod = _poly_mul(q, s1)
            s_new = _poly_sub(s0, prod)
            r0, r1 = r1, r
            s0, s1 = s1, s_new
        # r1 is a nonzero constant
        inv = 1 / r1[0]
        return self.field.from_coeffs([c * inv for c in s1])

    def __truediv__(self, other):
        if isinstance(other, NFElem):
            return self * other.inverse()
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        if not oc[0]:
            raise ZeroDivisionError("division by zero in number field")
        s = 1 / oc[0]
        return NFElem(self.field, tuple(a * s for a in self.c), _raw=True)

    def __rtruediv__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return NFElem(self.field, oc, _raw=True) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # --- display --------------------------------------------------------
    def to_str(self, gen: str | None = None) -> str:
        gen = gen or self.field.gen_name
        parts = []
        for k, c in enumerate(self.c):
            if not c:
                continue
            mono = "" if k == 0 else (gen if k == 1 else f"{gen}^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f"{sign}{body}"
        return s

    def __repr__(self):
        return f"NFElem({self.to_str()})"

    __str__ = to_str


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Rat(0)) - (b[i] if i < len(b) else Rat(0)) for i in range(n)]
    return _trim(out)


QQ = NumberField([0, 1], gen="r", check=False)


def field_of(a) -> NumberField:
    return a.field if isinstance(a, NFElem) else QQ


def nf_arith(a, b, op: str):
    """Exact field arithmetic; ``op`` is one of add, sub, mul, div."""
    fa, fb = field_of(a), field_of(b)
    if fa.degree > 1 and fb.degree > 1 and fa != fb:
        raise FieldError("field mismatch")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b if isinstance(a, NFElem) or isinstance(b, NFElem) else Rat(a) / Rat(b)
    raise ValueError(f"unknown op {op!r}")


def nf_embed(a, target: NumberField, gen_image):
    """Image of ``a`` under the homomorphism sending the source generator to ``gen_image``.

    The source field is the field of ``a``; rationals are fixed.  Raises
    FieldError if ``gen_image`` is not a root of the source minimal polynomial.
    """
    if not isinstance(a, NFElem):
        return target(a)
    src = a.field
    g = target(gen_image)
    acc = target.zero
    for c in reversed(src.min_poly):
        acc = acc * g + c
    if acc:
        raise FieldError("generator image is not a root of the source minimal polynomial")
    acc = target.zero
    for c in reversed(a.c):
        acc = acc * g + c
    return acc


def _canonical_sign(s):
    c = s.c if isinstance(s, NFElem) else (s,)
    for x in c:
        if x:
            return s if x > 0 else -s
    return s


def nf_sqrt(a, field: NumberField | None = None):
    """A square root of ``a`` inside its field, or None if none exists.

    Of the two roots, the one whose lowest nonzero coefficient is positive
    is returned.
    """
    field = field or field_of(a)
    a = field(a)
    if not a:
        return field.zero
    n = field.degree
    if n == 1:
        return rat_sqrt(a)
    if a.is_rational():
        s = rat_sqrt(a.c[0])
        if s is not None:
            return field(s)
    if n == 2:
        return _sqrt_quadratic(a, field)
    from .poly.roots import field_roots_dense

    roots = field_roots_dense([-a, field.zero, field.one], field)
    if not roots:
        return None
    return _canonical_sign(roots[0])


def _sqrt_quadratic(a: NFElem, field: NumberField):
    m0, m1 = field.min_poly[0], field.min_poly[1]
    # w = t + m1/2 satisfies w^2 = D with D rational
    w = field.gen() + m1 / 2
    D = m1 * m1 / 4 - m0
    # norm and trace of a
    conj_w = -w
    x0 = a.c[0] - a.c[1] * m1 / 2  # a = x0 + x1*w
    x1 = a.c[1]
    norm = x0 * x0 - x1 * x1 * D
    trace = 2 * x0
    if a.is_rational():
        # a = y^2 D for a pure multiple of w
        y = rat_sqrt(a.c[0] / D) if D else None
        if y is not None:
            return _canonical_sign(y * w)
        return None
    n_root = rat_sqrt(norm) if norm >= 0 else None
    if n_root is None:
        return None
    for n_val in (n_root, -n_root):
        T = rat_sqrt(trace + 2 * n_val)
        if T:
            s = (a + n_val) / T
            if s * s == a:
                return _canonical_sign(s)
    del conj_w
    return None


def parse_field(spec: str, gen: str = "r") -> NumberField:
    """Parse a field declaration such as ``t^2+2`` (``Q`` or ``1`` for the rationals)."""
    spec = spec.strip()
    if spec in ("Q", "QQ", "", "t"):
        return QQ
    from .poly.parser import parse_univariate_rational

    coeffs = parse_univariate_rational(spec, "t")
    return NumberField(coeffs, gen=gen)
