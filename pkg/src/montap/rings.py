"""Exact coefficient rings.

Every ring is a small object exposing ``zero``, ``one``, coercion via
``ring(x)``, unit detection and inversion.  Elements of the integer and
rational rings are plain ``int`` and ``fractions.Fraction`` values; prime
fields and cyclotomic fields get dedicated immutable element classes; the
complex ring uses Python ``complex`` and compares within a tolerance.

    >>> Q = RationalField()
    >>> Q.parse("1/2") + Q.parse("1/3")
    Fraction(5, 6)
    >>> F = PrimeField(11)
    >>> F(7) * F(8)
    Fp(1, 11)
    >>> K = CyclotomicField(7)
    >>> K.format(K.root(3) * K.root(5))
    'z'
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


class NotAUnitError(ArithmeticError):
    """Raised when inverting a non-unit."""


class RingMismatchError(TypeError):
    """Raised when combining elements of different rings."""


# ---------------------------------------------------------------------------
# prime fields


class Fp:
    """Residue class modulo a prime, stored as the least non-negative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, Fp):
            if o.p != self.p:
                raise RingMismatchError(f"GF({self.p}) vs GF({o.p})")
            return o.v
        if isinstance(o, int):
            return o
        return NotImplemented

    def __add__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Fp(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Fp(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Fp(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Fp(self.v * w, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return Fp(pow(self.v, -k, self.p), self.p).inverse()
        return Fp(pow(self.v, k, self.p), self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise NotAUnitError("0 is not invertible")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        if isinstance(o, Fp):
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return (self.v - o) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


# ---------------------------------------------------------------------------
# cyclotomic fields


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic, coefficient lists low-to-high
    num = list(num)
    dn = len(den) - 1
    q = [0] * max(len(num) - dn, 1)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    return q, num[:dn]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class Cyclo:
    """Element of Q(zeta_m) as an integer vector over a positive denominator.

    The vector holds coefficients of 1, z, ..., z^(phi(m)-1); the pair is kept
    reduced so that equal field elements have equal payloads.
    """

    __slots__ = ("c", "den", "m")

    def __init__(self, c, den: int, m: int, _reduced: bool = False):
        if not _reduced:
            c, den = _cyclo_normalize(c, den)
        self.c = c
        self.den = den
        self.m = m

    def _other(self, o):
        if isinstance(o, Cyclo):
            if o.m != self.m:
                raise RingMismatchError(f"Q(zeta_{self.m}) vs Q(zeta_{o.m})")
            return o
        if isinstance(o, (int, Fraction)):
            o = Fraction(o)
            n = len(self.c)
            return Cyclo((o.numerator,) + (0,) * (n - 1), o.denominator, self.m)
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return Cyclo(tuple(a + b for a, b in zip(self.c, o.c)), self.den, self.m)
        return Cyclo(
            tuple(a * o.den + b * self.den for a, b in zip(self.c, o.c)),
            self.den * o.den,
            self.m,
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(tuple(-a for a in self.c), self.den, self.m, True)

    def __sub__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        a, b = self.c, o.c
        n = len(a)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        phi = cyclotomic_polynomial(self.m)
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c:
                for j in range(n):
                    prod[i - n + j] -= c * phi[j]
        return Cyclo(tuple(prod[:n]), self.den * o.den, self.m)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Cyclo((1,) + (0,) * (len(self.c) - 1), 1, self.m, True)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclo":
        if not any(self.c):
            raise NotAUnitError("0 is not invertible")
        phi = [Fraction(x) for x in cyclotomic_polynomial(self.m)]
        a = [Fraction(x, self.den) for x in self.c]
        s = _fraction_poly_inverse_mod(a, phi)
        return _cyclo_from_fractions(s, self.m)

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = self._other(o)
        if isinstance(o, Cyclo):
            return self.m == o.m and self.den == o.den and self.c == o.c
        return NotImplemented

    def __hash__(self):
        return hash((self.c, self.den, self.m))

    def __repr__(self):
        return f"Cyclo({CyclotomicField(self.m).format(self)!r}, m={self.m})"


def _cyclo_normalize(c, den):
    c = tuple(c)
    if den < 0:
        c = tuple(-x for x in c)
        den = -den
    g = den
    for x in c:
        if g == 1:
            break
        g = gcd(g, x)
    if g > 1:
        c = tuple(x // g for x in c)
        den //= g
    if not any(c):
        den = 1
    return c, den


def _cyclo_from_fractions(coeffs, m: int) -> Cyclo:
    n = len(cyclotomic_polynomial(m)) - 1
    coeffs = list(coeffs) + [Fraction(0)] * (n - len(coeffs))
    den = 1
    for x in coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    return Cyclo(tuple(int(x * den) for x in coeffs[:n]), den, m)


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fraction_poly_inverse_mod(a, modulus):
    """Inverse of a modulo an irreducible polynomial over Q (extended Euclid)."""
    r0, r1 = _fp_trim(list(modulus)), _fp_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _fraction_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1))
    if not r1:
        raise NotAUnitError("not invertible")
    c = r1[0]
    return [x / c for x in s1]


def _fraction_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _fp_trim(q), _fp_trim(a[: len(b) - 1])


def _fp_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _fp_trim(out)


def _fp_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _fp_trim([x - y for x, y in zip(a, b)])


# ---------------------------------------------------------------------------
# ring objects

_INT_RE = re.compile(r"^\s*[+-]?\d+\s*$")
_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


class Ring:
    """Base class; subclasses define the element payload conventions."""

    is_field = True
    kind = ""

    def __call__(self, x):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return not a

    def equal(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        return not self.is_zero(a)

    def inverse(self, a):
        if not self.is_unit(a):
            raise NotAUnitError(f"{self.format(a)} is not a unit in {self}")
        return self.one / a

    def divide_exact(self, a, b):
        """Return a/b when b divides a, else raise ArithmeticError."""
        return a * self.inverse(b)

    def format(self, a) -> str:
        return str(a)

    def is_compound(self, a) -> bool:
        """True when the printed form needs parentheses as a coefficient."""
        return False

    def to_spec(self) -> dict:
        return {"kind": self.kind}

    def __eq__(self, other):
        return type(self) is type(other) and self.to_spec() == other.to_spec()

    def __hash__(self):
        return hash(tuple(sorted(self.to_spec().items())))

    def __repr__(self):
        return f"{type(self).__name__}()"


class IntegerRing(Ring):
    kind = "Z"
    is_field = False
    zero = 0
    one = 1

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def parse(self, text: str) -> int:
        if not _INT_RE.match(text):
            raise ValueError(f"bad integer literal {text!r}")
        return int(text)

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def inverse(self, a):
        if a not in (1, -1):
            raise NotAUnitError(f"{a} is not a unit in Z")
        return a

    def divide_exact(self, a, b):
        if b == 0 or a % b:
            raise ArithmeticError(f"{b} does not divide {a} in Z")
        return a // b


class RationalField(Ring):
    kind = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        m = _RAT_RE.match(text)
        if m:
            return Fraction(int(m.group(1)), int(m.group(2)))
        if _INT_RE.match(text):
            return Fraction(int(text))
        raise ValueError(f"bad rational literal {text!r}")

    def inverse(self, a):
        if a == 0:
            raise NotAUnitError("0 is not invertible")
        return 1 / Fraction(a)

    def is_compound(self, a) -> bool:
        return Fraction(a).denominator != 1


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Ring):
    kind = "Fp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise RingMismatchError(f"GF({x.p}) element in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) * Fp(x.denominator, self.p).inverse()
        return Fp(int(x), self.p)

    def parse(self, text: str) -> Fp:
        m = _RAT_RE.match(text)
        if m:
            return self(Fraction(int(m.group(1)), int(m.group(2))))
        if not _INT_RE.match(text):
            raise ValueError(f"bad GF({self.p}) literal {text!r}")
        return Fp(int(text), self.p)

    def inverse(self, a):
        return self(a).inverse()

    def format(self, a) -> str:
        return str(a.v)

    def to_spec(self):
        return {"kind": self.kind, "p": self.p}

    def __repr__(self):
        return f"PrimeField({self.p})"


_CYCLO_TERM = re.compile(
    r"([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*(z(?:\s*\^\s*(-?\d+))?)?\s*"
)


class CyclotomicField(Ring):
    """Q(zeta_m) realised as Q[z]/Phi_m(z)."""

    kind = "cyclotomic"

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self.phi = cyclotomic_polynomial(m)
        self.degree = len(self.phi) - 1
        n = self.degree
        self.zero = Cyclo((0,) * n, 1, m, True)
        self.one = Cyclo((1,) + (0,) * (n - 1), 1, m, True)

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Cyclo):
            if x.m != self.m:
                raise RingMismatchError(f"Q(zeta_{x.m}) element in Q(zeta_{self.m})")
            return x
        x = Fraction(x)
        return Cyclo((x.numerator,) + (0,) * (self.degree - 1), x.denominator, self.m)

    def root(self, power: int = 1) -> Cyclo:
        """zeta^power, reduced modulo Phi_m."""
        power %= self.m
        vec = [0] * max(power + 1, self.degree)
        vec[power] = 1
        _, rem = _poly_divmod_int(vec, list(self.phi)) if power >= self.degree else (None, vec)
        return Cyclo(tuple(rem[: self.degree]), 1, self.m)

    def from_coefficients(self, coeffs) -> Cyclo:
        """Element sum(coeffs[i] * z^i), any length, reduced."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        if len(ints) > self.degree:
            _, ints = _poly_divmod_int(ints, list(self.phi))
        ints = ints + [0] * (self.degree - len(ints))
        return Cyclo(tuple(ints), den, self.m)

    def parse(self, text: str) -> Cyclo:
        s = text.strip()
        if not s:
            raise ValueError("empty cyclotomic literal")
        pos = 0
        acc = self.zero
        nterms = 0
        while pos < len(s):
            m = _CYCLO_TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(4)):
                raise ValueError(f"bad cyclotomic literal {text!r}")
            if nterms and not m.group(1):
                raise ValueError(f"bad cyclotomic literal {text!r}")
            if m.group(3) and not (m.group(2) and m.group(4)):
                raise ValueError(f"bad cyclotomic literal {text!r}")
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                coef = -coef
            if m.group(4):
                exp = int(m.group(5)) if m.group(5) is not None else 1
                term = self.root(exp) * coef
            else:
                term = self(coef)
            acc = acc + term
            nterms += 1
            pos = m.end()
        return acc

    def inverse(self, a):
        return self(a).inverse()

    def format(self, a) -> str:
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = Fraction(a.c[i], a.den)
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def is_compound(self, a) -> bool:
        nz = [i for i, x in enumerate(a.c) if x]
        return len(nz) > 1 or (nz and (nz[0] > 0 or a.den != 1)) if nz else False

    def to_spec(self):
        return {"kind": self.kind, "m": self.m}

    def __repr__(self):
        return f"CyclotomicField({self.m})"


class ComplexFloatField(Ring):
    """Best-effort floating complex numbers; equality within ``tol``."""

    kind = "complex"
    zero = 0j
    one = 1 + 0j

    def __init__(self, tol: float = 1e-9):
        self.tol = tol

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return complex(float(x))
        return complex(x)

    def parse(self, text: str) -> complex:
        t = text.replace(" ", "").replace("i", "j")
        try:
            return complex(t)
        except ValueError:
            raise ValueError(f"bad complex literal {text!r}") from None

    def is_zero(self, a) -> bool:
        return abs(a) <= self.tol

    def equal(self, a, b) -> bool:
        return abs(a - b) <= self.tol

    def inverse(self, a):
        if self.is_zero(a):
            raise NotAUnitError("0 is not invertible")
        return 1 / a

    def format(self, a) -> str:
        return f"{a.real:.12g}{a.imag:+.12g}i"

    def is_compound(self, a) -> bool:
        return True

    def to_spec(self):
        return {"kind": self.kind}


def ring_from_spec(spec: dict) -> Ring:
    """Build a ring from its JSON description (see the representation format)."""
    kind = spec.get("kind")
    if kind in ("Z", "ZZ", "integers"):
        return IntegerRing()
    if kind in ("Q", "QQ", "rationals"):
        return RationalField()
    if kind in ("Fp", "GF", "prime"):
        return PrimeField(int(spec["p"]))
    if kind in ("cyclotomic", "Cyclotomic"):
        return CyclotomicField(int(spec["m"]))
    if kind in ("complex", "C"):
        return ComplexFloatField(float(spec.get("tol", 1e-9)))
    raise ValueError(f"unknown ring kind {kind!r}")


def parse_ring_option(text: str) -> Ring:
    """Parse the CLI shorthand ``Z``, ``Q``, ``Fp:11``, ``cyclotomic:7``, ``complex``."""
    name, _, arg = text.partition(":")
    if name in ("Fp", "GF"):
        return PrimeField(int(arg))
    if name in ("cyclotomic", "Cyclotomic"):
        return CyclotomicField(int(arg))
    return ring_from_spec({"kind": name})


def cyclotomic_embed(m: int, power: int) -> Cyclo:
    return CyclotomicField(m).root(power)
