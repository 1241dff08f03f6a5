"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/N)).

Every numeric quantity in the package (root coordinates, bilinear form
values) lives in one shared field per group, generated by
theta = 2cos(pi/N) where N is the lcm of the finite Coxeter labels.
Elements are polynomials in theta reduced modulo the minimal polynomial
of theta, so equality is structural and there is no tolerance anywhere.

Sign determination is certified: a fast path handles one-signed
coefficient vectors, and the general case evaluates the polynomial on a
shrinking rational enclosure of theta (obtained from mpmath interval
arithmetic, then processed with exact Fraction endpoints) until zero is
excluded.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import mpmath

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_trim(coeffs):
    """Drop trailing zero coefficients (coeffs[i] is the x^i coefficient)."""
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    """Quotient and remainder of a by b over the rationals; b monic-ish."""
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = _ONE / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a)


def chebyshev_c(k):
    """Integer coefficients of C_k with C_k(2cos(t)) = 2cos(k*t).

    C_0 = 2, C_1 = x, C_{j+1} = x*C_j - C_{j-1}.
    """
    if k == 0:
        return [2]
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def minimal_polynomial(n):
    """Monic integer coefficients of the minimal polynomial of 2cos(pi/N).

    The conjugates are 2cos(k*pi/N) over 1 <= k < 2N with gcd(k, 2N) = 1.
    Coefficients are formed from a high-precision numeric product over the
    conjugates and rounded; the result is then verified exactly by division
    into C_{2N} - 2 (whose roots are all 2cos(k*pi/N)) and numerically at
    theta itself.
    """
    if n < 1:
        raise ValueError("N must be a positive integer")
    ks = [k for k in range(1, n + 1) if gcd(k, 2 * n) == 1]
    degree = len(ks)
    with mpmath.workdps(30 + 12 * degree):
        conjugates = [2 * mpmath.cos(mpmath.pi * k / n) for k in ks]
        poly = [mpmath.mpf(1)]
        for c in conjugates:
            poly = [mpmath.mpf(0)] + poly
            for i in range(len(poly) - 1):
                poly[i] -= c * poly[i + 1]
        coeffs = []
        for c in poly:
            r = int(mpmath.nint(c))
            if abs(c - r) > mpmath.mpf("1e-6"):
                raise ArithmeticError(f"conjugate product for N={n} did not round cleanly")
            coeffs.append(r)
        theta = 2 * mpmath.cos(mpmath.pi / n)
        val = mpmath.polyval(list(reversed(coeffs)), theta)
        if abs(val) > mpmath.mpf("1e-10"):
            raise ArithmeticError(f"candidate minimal polynomial for N={n} does not vanish at theta")
    frac = [Fraction(c) for c in coeffs]
    target = [Fraction(c) for c in chebyshev_c(2 * n)]
    target[0] -= 2
    _, rem = _poly_divmod(target, frac)
    if rem:
        raise ArithmeticError(f"candidate minimal polynomial for N={n} does not divide C_2N - 2")
    return coeffs


def _mpf_to_fraction(raw):
    sign, man, exp, _ = raw
    man = int(man)
    v = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -v if sign else v


class AlgebraicReal:
    """Element of Q(2cos(pi/N)) as a reduced coefficient vector.

    Instances are immutable; two values are equal iff their coefficient
    vectors are identical.  Arithmetic reduces modulo the minimal
    polynomial of theta = 2cos(pi/N).
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.field.n, self.coeffs))
        return h

    def __eq__(self, other):
        if isinstance(other, AlgebraicReal):
            return self.coeffs == other.coeffs and self.field is other.field
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self.field.coerce(other)
        a, b = self.coeffs, other.coeffs
        return AlgebraicReal(self.field, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self.field.coerce(other)
        return AlgebraicReal(self.field, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __neg__(self):
        return AlgebraicReal(self.field, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.field.zero
            return AlgebraicReal(self.field, tuple(x * other for x in self.coeffs))
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicReal(self.field, tuple(x / other for x in self.coeffs))
        return self.field.mul(self, self.field.inv(other))

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def is_zero(self):
        return not any(self.coeffs)

    def sign(self):
        return self.field.sign(self)

    def __lt__(self, other):
        return (self - self.field.coerce(other)).sign() < 0

    def __gt__(self, other):
        return (self - self.field.coerce(other)).sign() > 0

    def __le__(self, other):
        return (self - self.field.coerce(other)).sign() <= 0

    def __ge__(self, other):
        return (self - self.field.coerce(other)).sign() >= 0

    def __float__(self):
        t = self.field.theta_float
        val = 0.0
        for c in reversed(self.coeffs):
            val = val * t + c
        return float(val)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "c" if i == 1 else f"c^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"AlgebraicReal({self})"


class RealCyclotomicField:
    """Shared description of Q(2cos(pi/N)) with cached enclosures of theta."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("N must be a positive integer")
        self.n = n
        self.psi = minimal_polynomial(n)
        self.degree = len(self.psi) - 1
        self.zero = AlgebraicReal(self, (_ZERO,) * self.degree)
        self.one = self.from_rational(1)
        self.theta = self.element([0, 1])
        self._enclosures = {}
        self._sign_cache = {}
        # x^(degree+i) mod psi, for i in 0..degree-2, as coefficient tuples
        self._red = []
        base = [-Fraction(c) for c in self.psi[:-1]]
        cur = base[:]
        for _ in range(self.degree - 1):
            self._red.append(tuple(cur))
            lead = cur[-1]
            cur = [_ZERO] + cur[:-1]
            if lead:
                cur = [c + lead * b for c, b in zip(cur, base)]
        with mpmath.workdps(30):
            self.theta_float = float(2 * mpmath.cos(mpmath.pi / n))

    def __repr__(self):
        return f"RealCyclotomicField(N={self.n}, degree={self.degree})"

    def element(self, coeffs):
        """Build an element from rational coefficients, reducing mod psi."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            _, coeffs = _poly_divmod(coeffs, [Fraction(c) for c in self.psi])
        coeffs = coeffs + [_ZERO] * (self.degree - len(coeffs))
        return AlgebraicReal(self, tuple(coeffs))

    def from_rational(self, q):
        return AlgebraicReal(self, (Fraction(q),) + (_ZERO,) * (self.degree - 1))

    def coerce(self, v):
        if isinstance(v, AlgebraicReal):
            if v.field is not self:
                raise ValueError("cannot mix elements of different fields")
            return v
        return self.from_rational(v)

    def mul(self, a, b):
        ac, bc = a.coeffs, b.coeffs
        d = self.degree
        if d == 1:
            return AlgebraicReal(self, (ac[0] * bc[0],))
        raw = [_ZERO] * (2 * d - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    if y:
                        raw[i + j] += x * y
        out = list(raw[:d])
        for i in range(d - 1):
            hi = raw[d + i]
            if hi:
                red = self._red[i]
                for k in range(d):
                    if red[k]:
                        out[k] += hi * red[k]
        return AlgebraicReal(self, tuple(out))

    def inv(self, a):
        """Multiplicative inverse via the extended Euclidean algorithm.

        Maintains s_i * a = r_i (mod psi); stops when r_i is a nonzero
        constant, which always happens since psi is irreducible.
        """
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in the field")
        r0 = [Fraction(c) for c in self.psi]
        r1 = _poly_trim(list(a.coeffs))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is not invertible (zero divisor)")
        c = r1[0]
        return self.element([x / c for x in s1])

    def two_cos_k(self, k):
        """2cos(k*pi/N) as a field element (Chebyshev image of theta)."""
        return self.element([Fraction(c) for c in chebyshev_c(k)])

    def two_cos(self, m):
        """2cos(pi/m) for a finite label m dividing N."""
        if self.n % m != 0:
            raise ValueError(f"label {m} does not divide the field order N={self.n}")
        return self.two_cos_k(self.n // m)

    def embed_cos(self, m):
        """-cos(pi/m) as a field element; m may be the infinite label."""
        if m == float("inf"):
            return self.from_rational(-1)
        return self.two_cos(m) / -2

    def theta_enclosure(self, prec):
        """Certified rational lo < theta < hi at the given bit precision."""
        enc = self._enclosures.get(prec)
        if enc is None:
            ctx = mpmath.iv
            old = ctx.prec
            try:
                ctx.prec = prec
                x = 2 * ctx.cos(ctx.pi / self.n)
            finally:
                ctx.prec = old
            enc = (_mpf_to_fraction(x._mpi_[0]), _mpf_to_fraction(x._mpi_[1]))
            self._enclosures[prec] = enc
        return enc

    def sign(self, a):
        """Exact sign of a under theta -> 2cos(pi/N); certified, no tolerance."""
        coeffs = a.coeffs
        if not any(coeffs):
            return 0
        if self.degree == 1:
            c = coeffs[0]
            return (c > 0) - (c < 0)
        cached = self._sign_cache.get(coeffs)
        if cached is not None:
            return cached
        # theta > 0 whenever the field degree exceeds 1 (then N >= 4), so a
        # one-signed coefficient vector decides immediately.
        if all(c >= 0 for c in coeffs):
            result = 1
        elif all(c <= 0 for c in coeffs):
            result = -1
        else:
            result = None
            prec = 64
            while result is None:
                lo, hi = self.theta_enclosure(prec)
                vlo, vhi = _interval_horner(coeffs, lo, hi)
                if vlo > 0:
                    result = 1
                elif vhi < 0:
                    result = -1
                else:
                    prec *= 2
                    if prec > 1 << 20:
                        raise ArithmeticError("sign refinement failed to converge")
        self._sign_cache[coeffs] = result
        return result


def _interval_horner(coeffs, lo, hi):
    """Exact interval evaluation of a polynomial on [lo, hi]."""
    vlo = vhi = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(cands) + c, max(cands) + c
    return vlo, vhi
