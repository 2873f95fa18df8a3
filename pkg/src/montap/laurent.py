"""Multivariate Laurent polynomials over an exact coefficient ring.

Polynomials live in a :class:`VarContext` of ``n`` link variables
``t1..tn`` (plain ``t`` when ``n == 1``) followed by ``e`` auxiliary
variables ``e1..es`` whose exponents never go negative.  Terms are kept in a
dict keyed by exponent tuples; the monomial order used for division and for
normalisation is graded lexicographic with ``t1 > t2 > ... > e1 > ...``.

    >>> from montap.rings import IntegerRing
    >>> ctx = VarContext(1)
    >>> t = LaurentPoly.var(ctx, IntegerRing(), 0)
    >>> str((t - 1) * (t + 1))
    't^2 - 1'
    >>> str(exact_divide(t**2 - 1, t - 1))
    't + 1'
    >>> str(canonical_form(-2 * t**-1 + 4 - 2 * t))
    '2*t^2 - 4*t + 2'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rings import Cyclo, Fp, IntegerRing, RationalField, Ring


class NotDivisible(ArithmeticError):
    """The quotient of two polynomials is not a Laurent polynomial."""


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VarContext:
    n: int
    e: int = 0

    def __post_init__(self):
        if self.n < 1 or self.e < 0:
            raise ValueError("need n >= 1 and e >= 0")

    @property
    def nvars(self) -> int:
        return self.n + self.e

    def names(self) -> list[str]:
        ts = ["t"] if self.n == 1 else [f"t{i + 1}" for i in range(self.n)]
        return ts + [f"e{i + 1}" for i in range(self.e)]

    def extend(self, e: int) -> "VarContext":
        return VarContext(self.n, e)


def _order_key(exp):
    return (sum(exp), exp)


class LaurentPoly:
    """Sparse Laurent polynomial; immutable by convention."""

    __slots__ = ("ctx", "ring", "terms")

    def __init__(self, ctx: VarContext, ring: Ring, terms=None, _clean=False):
        self.ctx = ctx
        self.ring = ring
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {k: v for k, v in terms.items() if not ring.is_zero(v)}
        self.terms = terms

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx, ring):
        return cls(ctx, ring, {}, True)

    @classmethod
    def constant(cls, ctx, ring, c):
        c = ring(c)
        return cls(ctx, ring, {(0,) * ctx.nvars: c})

    @classmethod
    def one(cls, ctx, ring):
        return cls.constant(ctx, ring, 1)

    @classmethod
    def monomial(cls, ctx, ring, exps, c=1):
        exps = tuple(exps)
        if len(exps) != ctx.nvars:
            raise ValueError("exponent vector has wrong length")
        return cls(ctx, ring, {exps: ring(c)})

    @classmethod
    def var(cls, ctx, ring, i: int, power: int = 1):
        exps = [0] * ctx.nvars
        exps[i] = power
        return cls.monomial(ctx, ring, exps)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, FractionElem):
            return NotImplemented
        try:
            return LaurentPoly.constant(self.ctx, self.ring, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        is_zero = self.ring.is_zero
        for k, v in other.terms.items():
            if k in terms:
                s = terms[k] + v
                if is_zero(s):
                    del terms[k]
                else:
                    terms[k] = s
            else:
                terms[k] = v
        return LaurentPoly(self.ctx, self.ring, terms, True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ctx, self.ring, {k: -v for k, v in self.terms.items()}, True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly.zero(self.ctx, self.ring)
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        if self.ctx.nvars == 1:
            for (i,), x in a.items():
                for (j,), y in b.items():
                    k = (i + j,)
                    out[k] = get(k, 0) + x * y
        else:
            for ea, x in a.items():
                for eb, y in b.items():
                    k = tuple(p + q for p, q in zip(ea, eb))
                    out[k] = get(k, 0) + x * y
        return LaurentPoly(self.ctx, self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise NotDivisible("negative power of a non-unit")
            ((exp, c),) = self.terms.items()
            return LaurentPoly.monomial(
                self.ctx, self.ring, [-x for x in exp], self.ring.inverse(c)
            ) ** (-k)
        result = LaurentPoly.one(self.ctx, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        return FractionElem(self, other) if isinstance(other, LaurentPoly) else FractionElem(
            self, LaurentPoly.constant(self.ctx, self.ring, other)
        )

    # predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, FractionElem):
            return other == self
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        eq = self.ring.equal
        return all(eq(v, other.terms[k]) for k, v in self.terms.items())

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        if len(self.terms) != 1:
            return False
        ((exp, c),) = self.terms.items()
        if any(exp[self.ctx.n:]):
            return False
        return self.ring.is_unit(c)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    # structure ------------------------------------------------------------------

    def sorted_terms(self):
        """Terms in decreasing monomial order."""
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)

    def leading_term(self):
        exp = max(self.terms, key=_order_key)
        return exp, self.terms[exp]

    def min_exponents(self) -> tuple:
        return tuple(min(col) for col in zip(*self.terms))

    def shift(self, exps) -> "LaurentPoly":
        if not any(exps):
            return self
        return LaurentPoly(
            self.ctx,
            self.ring,
            {tuple(a + b for a, b in zip(k, exps)): v for k, v in self.terms.items()},
            True,
        )

    def scale(self, c) -> "LaurentPoly":
        return LaurentPoly(self.ctx, self.ring, {k: v * c for k, v in self.terms.items()})

    def strip_content(self) -> "LaurentPoly":
        """Divide out the largest monomial factor."""
        if not self.terms:
            return self
        return self.shift([-m for m in self.min_exponents()])

    def invert_variable(self, i: int) -> "LaurentPoly":
        """Substitute t_i -> t_i^{-1}."""
        out = {}
        for k, v in self.terms.items():
            k = list(k)
            k[i] = -k[i]
            out[tuple(k)] = v
        return LaurentPoly(self.ctx, self.ring, out, True)

    def permute_variables(self, perm) -> "LaurentPoly":
        """Send variable i to position perm[i] (t-variables only)."""
        n = self.ctx.n
        out = {}
        for k, v in self.terms.items():
            nk = list(k)
            for i in range(n):
                nk[perm[i]] = k[i]
            out[tuple(nk)] = v
        return LaurentPoly(self.ctx, self.ring, out, True)

    def restrict(self, ctx: VarContext) -> "LaurentPoly":
        """Set trailing auxiliary variables to zero and move into ``ctx``."""
        keep = ctx.nvars
        out = {}
        for k, v in self.terms.items():
            if any(k[keep:]):
                continue
            out[k[:keep]] = v
        return LaurentPoly(ctx, self.ring, out, True)

    def embed(self, ctx: VarContext) -> "LaurentPoly":
        """Append zero exponents for extra auxiliary variables."""
        pad = (0,) * (ctx.nvars - self.ctx.nvars)
        return LaurentPoly(ctx, self.ring, {k + pad: v for k, v in self.terms.items()}, True)

    def evaluate(self, values):
        """Evaluate at ring values (negative exponents need units)."""
        total = self.ring.zero
        for k, v in self.terms.items():
            term = v
            for x, p in zip(values, k):
                term = term * (x ** p)
            total = total + term
        return total

    def change_ring(self, ring: Ring) -> "LaurentPoly":
        return LaurentPoly(self.ctx, ring, {k: ring(v) for k, v in self.terms.items()})


    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


# ---------------------------------------------------------------------------
# fractions


class FractionElem:
    """Quotient num/den of Laurent polynomials, equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.ctx != den.ctx:
            raise ContextMismatch("numerator and denominator contexts differ")
        self.num = num
        self.den = den

    @property
    def ctx(self):
        return self.num.ctx

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, FractionElem):
            return other
        if isinstance(other, LaurentPoly):
            return FractionElem(other, LaurentPoly.one(other.ctx, other.ring))
        return FractionElem(
            LaurentPoly.constant(self.ctx, self.ring, other), LaurentPoly.one(self.ctx, self.ring)
        )

    def simplify(self):
        """Return a LaurentPoly when the denominator divides, else self."""
        try:
            return exact_divide(self.num, self.den)
        except NotDivisible:
            return self

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return FractionElem(self.num + o.num, self.den).simplify()
        return FractionElem(self.num * o.den + o.num * self.den, self.den * o.den).simplify()

    __radd__ = __add__

    def __neg__(self):
        return FractionElem(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return FractionElem(self.num * o.num, self.den * o.den).simplify()

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FractionElem(self.num * o.den, self.den * o.num).simplify()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, FractionElem)):
            o = self._coerce(other)
            return self.num * o.den == o.num * self.den
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __repr__(self):
        return f"FractionElem({str(self)!r})"


def as_fraction(x) -> FractionElem:
    if isinstance(x, FractionElem):
        return x
    return FractionElem(x, LaurentPoly.one(x.ctx, x.ring))


# ---------------------------------------------------------------------------
# division


def _coef_div(ring: Ring, a, b, binv=None):
    if binv is not None:
        return a * binv
    try:
        return ring.divide_exact(a, b)
    except ArithmeticError as exc:
        raise NotDivisible(str(exc)) from None


def exact_divide(f: LaurentPoly, g) -> LaurentPoly:
    """Return q with f = q*g, raising NotDivisible when no such q exists."""
    if not isinstance(g, LaurentPoly):
        g = LaurentPoly.constant(f.ctx, f.ring, g)
    if f.ctx != g.ctx:
        raise ContextMismatch(f"{f.ctx} vs {g.ctx}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    ring = f.ring
    n = f.ctx.n
    if len(g.terms) == 1:
        ((ge, gc),) = g.terms.items()
        binv = ring.inverse(gc) if ring.is_field else None
        out = {}
        for k, v in f.terms.items():
            nk = tuple(a - b for a, b in zip(k, ge))
            if any(x < 0 for x in nk[n:]):
                raise NotDivisible("negative auxiliary exponent")
            out[nk] = _coef_div(ring, v, gc, binv)
        return LaurentPoly(f.ctx, ring, out)
    fmin, gmin = f.min_exponents(), g.min_exponents()
    f0, g0 = f.shift([-m for m in fmin]), g.shift([-m for m in gmin])
    offset = [a - b for a, b in zip(fmin, gmin)]
    if any(x < 0 for x in offset[n:]):
        raise NotDivisible("negative auxiliary exponent")
    if f.ctx.nvars == 1:
        q = _univariate_divide(f0, g0)
    else:
        q = _multivariate_divide(f0, g0)
    return q.shift(offset)


def _dense(p: LaurentPoly):
    deg = max(k[0] for k in p.terms)
    out = [p.ring.zero] * (deg + 1)
    for (i,), v in p.terms.items():
        out[i] = v
    return out


def _univariate_divide(f0, g0):
    ring = f0.ring
    r = _dense(f0)
    g = _dense(g0)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        raise NotDivisible("degree too small")
    lg = g[-1]
    binv = ring.inverse(lg) if ring.is_field else None
    is_zero = ring.is_zero
    q = {}
    gnz = [(j, c) for j, c in enumerate(g) if not is_zero(c)]
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if is_zero(c):
            continue
        qc = _coef_div(ring, c, lg, binv)
        s = i - dg
        q[(s,)] = qc
        for j, gj in gnz:
            r[s + j] = r[s + j] - qc * gj
    if any(not is_zero(x) for x in r[:dg]):
        raise NotDivisible("nonzero remainder")
    return LaurentPoly(f0.ctx, ring, q)


def _multivariate_divide(f0, g0):
    ring = f0.ring
    ge, gc = g0.leading_term()
    binv = ring.inverse(gc) if ring.is_field else None
    gkey = _order_key(ge)
    rem = dict(f0.terms)
    q = {}
    is_zero = ring.is_zero
    gterms = list(g0.terms.items())
    while rem:
        le = max(rem, key=_order_key)
        if _order_key(le) < gkey:
            raise NotDivisible("nonzero remainder")
        shift = tuple(a - b for a, b in zip(le, ge))
        if any(x < 0 for x in shift):
            raise NotDivisible("leading term not divisible")
        qc = _coef_div(ring, rem[le], gc, binv)
        q[shift] = qc
        for e, c in gterms:
            k = tuple(a + b for a, b in zip(e, shift))
            v = rem.get(k, ring.zero) - qc * c
            if is_zero(v):
                rem.pop(k, None)
            else:
                rem[k] = v
    return LaurentPoly(f0.ctx, ring, q)


def divides(f: LaurentPoly, g: LaurentPoly) -> bool:
    try:
        exact_divide(g, f)
        return True
    except NotDivisible:
        return False


# ---------------------------------------------------------------------------
# univariate gcd


def _poly_from_dense(ctx, ring, coeffs):
    return LaurentPoly(ctx, ring, {(i,): c for i, c in enumerate(coeffs)})


def _dense_trim(a, is_zero):
    while a and is_zero(a[-1]):
        a.pop()
    return a


def _field_gcd(a, b, ring):
    is_zero = ring.is_zero
    a, b = _dense_trim(list(a), is_zero), _dense_trim(list(b), is_zero)
    while b:
        inv = ring.inverse(b[-1])
        while len(a) >= len(b) and a:
            c = a[-1] * inv
            s = len(a) - len(b)
            for j, y in enumerate(b):
                a[s + j] = a[s + j] - c * y
            a.pop()
            _dense_trim(a, is_zero)
        a, b = b, a
    return a


def univariate_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Gcd of two ordinary univariate polynomials, normalised like canonical_form.

    Over the integers the computation runs over the rationals and returns the
    primitive part (the content is handled separately by the caller).
    """
    ring = f.ring
    f0, g0 = f.strip_content(), g.strip_content()
    if isinstance(ring, IntegerRing):
        Q = RationalField()
        a = [Fraction(x) for x in _dense(f0)]
        b = [Fraction(x) for x in _dense(g0)]
        h = _field_gcd(a, b, Q)
        den = 1
        for x in h:
            den = den * x.denominator // _igcd(den, x.denominator)
        ints = [int(x * den) for x in h]
        c = 0
        for x in ints:
            c = _igcd(c, x)
        ints = [x // c for x in ints]
        return normalize_poly(_poly_from_dense(f.ctx, ring, ints))
    h = _field_gcd(_dense(f0), _dense(g0), ring)
    return normalize_poly(_poly_from_dense(f.ctx, ring, h))


def _igcd(a, b):
    from math import gcd

    return gcd(a, b)


# ---------------------------------------------------------------------------
# canonical form and equivalence


@dataclass(frozen=True)
class CanonicalResult:
    """Normal form of a value up to units and monomials."""

    num: LaurentPoly
    den: LaurentPoly

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_unit()

    @property
    def kind(self) -> str:
        return "polynomial" if self.is_polynomial else "fraction"

    def __str__(self):
        if self.is_polynomial:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def as_fraction(self) -> FractionElem:
        return FractionElem(self.num, self.den)

    def __eq__(self, other):
        if not isinstance(other, CanonicalResult):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))


def _leading_normalizer(p: LaurentPoly):
    """Unit u with u*p having a normalised leading coefficient."""
    ring = p.ring
    _, c = p.leading_term()
    if isinstance(ring, IntegerRing):
        return -1 if c < 0 else 1
    if ring.is_field:
        return ring.inverse(c)
    return ring.one


def normalize_poly(p: LaurentPoly) -> LaurentPoly:
    """Strip monomial content and normalise the leading coefficient."""
    if p.is_zero():
        return p
    p = p.strip_content()
    u = _leading_normalizer(p)
    return p if u == 1 else p.scale(u)


def canonical_form(f) -> CanonicalResult:
    """Normal form of a polynomial or fraction under multiplication by units and monomials."""
    if isinstance(f, CanonicalResult):
        f = f.as_fraction()
    if isinstance(f, LaurentPoly):
        one = LaurentPoly.one(f.ctx, f.ring)
        return CanonicalResult(normalize_poly(f), one)
    num, den = f.num, f.den
    one = LaurentPoly.one(num.ctx, num.ring)
    if num.is_zero():
        return CanonicalResult(num, one)
    try:
        return CanonicalResult(normalize_poly(exact_divide(num, den)), one)
    except NotDivisible:
        pass
    ring = num.ring
    if num.ctx.nvars == 1 and (ring.is_field or isinstance(ring, IntegerRing)) and ring.kind != "complex":
        g = univariate_gcd(num, den)
        if len(g.terms) > 1 or not g.is_constant():
            num = exact_divide(num.strip_content(), g)
            den = exact_divide(den.strip_content(), g)
    num, den = num.strip_content(), den.strip_content()
    if isinstance(ring, IntegerRing):
        from math import gcd

        c = 0
        for v in itertools.chain(num.terms.values(), den.terms.values()):
            c = gcd(c, v)
        if c > 1:
            num = LaurentPoly(num.ctx, ring, {k: v // c for k, v in num.terms.items()}, True)
            den = LaurentPoly(den.ctx, ring, {k: v // c for k, v in den.terms.items()}, True)
        if den.leading_term()[1] < 0:
            den = -den
            num = -num
        if num.leading_term()[1] < 0:
            num = -num
    elif ring.is_field:
        dinv = ring.inverse(den.leading_term()[1])
        den = den.scale(dinv)
        num = num.scale(ring.inverse(num.leading_term()[1]))
    if den.is_unit():
        return CanonicalResult(normalize_poly(num), one)
    return CanonicalResult(num, den)


def _as_pair(f):
    if isinstance(f, CanonicalResult):
        return f.num, f.den
    if isinstance(f, FractionElem):
        return f.num, f.den
    return f, LaurentPoly.one(f.ctx, f.ring)


def equiv(f, g, allow_var_inversion=None, allow_permutation: bool = False) -> bool:
    """True when g equals f up to a unit and a monomial.

    ``allow_var_inversion`` is an optional sequence of variable indices (or a
    boolean flag per variable) for which t_i -> t_i^{-1} may be substituted
    in ``g``.  ``allow_permutation`` additionally tries every relabelling of
    the link variables.
    """
    fn, fd = _as_pair(f)
    gn, gd = _as_pair(g)
    if fn.ctx != gn.ctx:
        raise ContextMismatch(f"{fn.ctx} vs {gn.ctx}")
    n = fn.ctx.n
    flags = _inversion_indices(allow_var_inversion, n)
    perms = itertools.permutations(range(n)) if allow_permutation else [tuple(range(n))]
    for perm in perms:
        pn, pd = gn.permute_variables(perm), gd.permute_variables(perm)
        for r in range(len(flags) + 1):
            for subset in itertools.combinations(flags, r):
                qn, qd = pn, pd
                for i in subset:
                    qn, qd = qn.invert_variable(i), qd.invert_variable(i)
                if _same_up_to_units(fn * qd, qn * fd):
                    return True
    return False


def _inversion_indices(flags, n):
    if not flags:
        return []
    if flags is True:
        return list(range(n))
    flags = list(flags)
    if all(isinstance(x, bool) for x in flags):
        return [i for i, x in enumerate(flags) if x]
    return [int(i) for i in flags]


def _same_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if len(a.terms) != len(b.terms):
        return False
    return normalize_poly(a) == normalize_poly(b)


# ---------------------------------------------------------------------------
# rendering


def _coef_parts(ring: Ring, c):
    """(negative, body) for a coefficient; body '1' for unit magnitude."""
    if isinstance(c, bool):
        c = int(c)
    if isinstance(c, (int, Fraction)):
        return c < 0, str(abs(c))
    if isinstance(c, Fp):
        return False, str(c.v)
    if isinstance(c, Cyclo):
        s = ring.format(c)
        if ring.is_compound(c):
            return False, f"({s})"
        if s.startswith("-"):
            return True, s[1:]
        return False, s
    if isinstance(c, complex):
        return False, f"({ring.format(c)})"
    return False, f"({c})"


def _monomial_str(names, exp):
    parts = []
    for name, k in zip(names, exp):
        if k == 0:
            continue
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Render in decreasing graded lex order, e.g. ``2*t^4 - 4*t^3 + 5``."""
    if p.is_zero():
        return "0"
    names = p.ctx.names()
    out = []
    for idx, (exp, c) in enumerate(p.sorted_terms()):
        neg, body = _coef_parts(p.ring, c)
        mono = _monomial_str(names, exp)
        if mono:
            text = mono if body == "1" else f"{body}*{mono}"
        else:
            text = body
        if idx == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


def format_value(v) -> str:
    if isinstance(v, LaurentPoly):
        return format_poly(v)
    return str(v)
