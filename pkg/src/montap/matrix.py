"""Dense square matrices over Laurent polynomials (or their fractions).

Also holds the bracket ``[k]_a`` and the ``u_k`` / ``G_k`` matrices used by
the tangle recursion.

    >>> from montap.rings import RationalField
    >>> from montap.laurent import VarContext
    >>> Q = RationalField()
    >>> a = SquareMatrix.scalar(VarContext(1), Q, 1, 2)
    >>> str(bracket(-2, a)[0, 0])
    '-3/4'
    >>> str(u_matrix(3, SquareMatrix.scalar(VarContext(1), Q, 1, 3),
    ...              SquareMatrix.scalar(VarContext(1), Q, 1, Fraction(1, 2)))[0, 0])
    '6'
"""

from __future__ import annotations

from fractions import Fraction  # noqa: F401  (doctest)
from itertools import permutations

from .laurent import FractionElem, LaurentPoly, NotDivisible, VarContext, exact_divide
from .rings import Ring


class Singular(ArithmeticError):
    """Determinant is zero (or not invertible where an inverse was needed)."""


class DimensionMismatch(ValueError):
    pass


class SquareMatrix:
    """d x d matrix whose entries are LaurentPoly or FractionElem values."""

    __slots__ = ("ctx", "ring", "rows")

    def __init__(self, ctx: VarContext, ring: Ring, rows):
        self.ctx = ctx
        self.ring = ring
        self.rows = [list(r) for r in rows]
        d = len(self.rows)
        if any(len(r) != d for r in self.rows):
            raise DimensionMismatch("matrix is not square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, ctx, ring, d):
        z = LaurentPoly.zero(ctx, ring)
        return cls(ctx, ring, [[z] * d for _ in range(d)])

    @classmethod
    def scalar(cls, ctx, ring, d, c):
        z = LaurentPoly.zero(ctx, ring)
        c = c if isinstance(c, (LaurentPoly, FractionElem)) else LaurentPoly.constant(ctx, ring, c)
        return cls(ctx, ring, [[c if i == j else z for j in range(d)] for i in range(d)])

    @classmethod
    def identity(cls, ctx, ring, d):
        return cls.scalar(ctx, ring, d, 1)

    @classmethod
    def from_ring_matrix(cls, ctx, ring, mat, exps=None):
        """Lift an R-matrix, multiplied by the monomial t^exps when given."""
        exps = tuple(exps) if exps is not None else (0,) * ctx.nvars
        rows = [[LaurentPoly(ctx, ring, {exps: ring(x)}) for x in row] for row in mat]
        return cls(ctx, ring, rows)

    # access -------------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if not isinstance(other, SquareMatrix):
            raise TypeError("expected SquareMatrix")
        if other.dim != self.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")

    def map(self, fn) -> "SquareMatrix":
        return SquareMatrix(self.ctx, self.ring, [[fn(x) for x in r] for r in self.rows])

    # arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            other = SquareMatrix.scalar(self.ctx, self.ring, self.dim, other)
        self._check(other)
        return SquareMatrix(
            self.ctx, self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other):
        if not isinstance(other, SquareMatrix):
            other = SquareMatrix.scalar(self.ctx, self.ring, self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SquareMatrix):
            return self.map(lambda x: x * other)
        self._check(other)
        d = self.dim
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = None
                for a, b in zip(r, c):
                    if a.is_zero() or b.is_zero():
                        continue
                    p = a * b
                    acc = p if acc is None else acc + p
                row.append(acc if acc is not None else LaurentPoly.zero(self.ctx, self.ring))
            out.append(row)
        assert len(out) == d
        return SquareMatrix(self.ctx, self.ring, out)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def __pow__(self, k: int):
        if k < 0:
            return matrix_inverse(self) ** (-k)
        result = SquareMatrix.identity(self.ctx, self.ring, self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix) or other.dim != self.dim:
            return NotImplemented
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self == SquareMatrix.identity(self.ctx, self.ring, self.dim)

    def is_polynomial(self) -> bool:
        return all(isinstance(x, LaurentPoly) for r in self.rows for x in r)

    def transpose(self):
        return SquareMatrix(self.ctx, self.ring, [list(c) for c in zip(*self.rows)])

    def minor(self, i, j) -> "SquareMatrix":
        return SquareMatrix(
            self.ctx,
            self.ring,
            [[x for c, x in enumerate(r) if c != j] for rr, r in enumerate(self.rows) if rr != i],
        )

    def restrict(self, ctx: VarContext) -> "SquareMatrix":
        return SquareMatrix(ctx, self.ring, [[x.restrict(ctx) for x in r] for r in self.rows])

    def embed(self, ctx: VarContext) -> "SquareMatrix":
        return SquareMatrix(ctx, self.ring, [[x.embed(ctx) for x in r] for r in self.rows])

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "]"

    def __repr__(self):
        return f"SquareMatrix({self})"


# ---------------------------------------------------------------------------
# determinants


def _det_cofactor(rows):
    d = len(rows)
    if d == 1:
        return rows[0][0]
    if d == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = None
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det_cofactor(sub)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return rows[0][0] - rows[0][0]
    return acc


def _clear_row_denominators(rows, ctx, ring):
    """Scale rows to polynomial entries; returns (rows, product of scale factors)."""
    one = LaurentPoly.one(ctx, ring)
    factor = one
    out = []
    for r in rows:
        den = one
        for x in r:
            if isinstance(x, FractionElem) and not x.den == den:
                den = den * x.den
        row = []
        for x in r:
            if isinstance(x, FractionElem):
                row.append(exact_divide(x.num * den, x.den))
            else:
                row.append(x * den)
        factor = factor * den
        out.append(row)
    return out, factor


def bareiss_determinant(rows, ctx, ring):
    """Fraction-free elimination over Laurent polynomials."""
    a = [list(r) for r in rows]
    d = len(a)
    zero = LaurentPoly.zero(ctx, ring)
    if d == 0:
        return LaurentPoly.one(ctx, ring)
    sign = 1
    prev = LaurentPoly.one(ctx, ring)
    for k in range(d - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, d):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        piv = a[k][k]
        for i in range(k + 1, d):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, d):
                v = piv * row_i[j]
                if not aik.is_zero() and not row_k[j].is_zero():
                    v = v - aik * row_k[j]
                row_i[j] = exact_divide(v, prev) if not v.is_zero() else zero
            row_i[k] = zero
        prev = piv
    det = a[d - 1][d - 1]
    return -det if sign < 0 else det


def determinant(m: SquareMatrix):
    """Exact determinant: cofactors for d <= 4, Bareiss beyond."""
    rows = m.rows
    if m.dim == 0:
        return LaurentPoly.one(m.ctx, m.ring)
    if m.dim <= 4:
        return _det_cofactor(rows)
    if not m.is_polynomial():
        rows, factor = _clear_row_denominators(rows, m.ctx, m.ring)
        return FractionElem(bareiss_determinant(rows, m.ctx, m.ring), factor).simplify()
    return bareiss_determinant(rows, m.ctx, m.ring)


def determinant_leibniz(m: SquareMatrix):
    """Permutation expansion; slow, used as an independent check."""
    d = m.dim
    total = LaurentPoly.zero(m.ctx, m.ring)
    for perm in permutations(range(d)):
        inv = sum(1 for i in range(d) for j in range(i + 1, d) if perm[i] > perm[j])
        term = LaurentPoly.one(m.ctx, m.ring)
        for i, p in enumerate(perm):
            term = term * m.rows[i][p]
        total = total - term if inv % 2 else total + term
    return total


def adjugate(m: SquareMatrix) -> SquareMatrix:
    d = m.dim
    if d == 1:
        return SquareMatrix.identity(m.ctx, m.ring, 1)
    out = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            c = determinant(m.minor(i, j))
            out[j][i] = -c if (i + j) % 2 else c
    return SquareMatrix(m.ctx, m.ring, out)


def _divide_entry(x, det):
    if isinstance(x, LaurentPoly) and isinstance(det, LaurentPoly):
        try:
            return exact_divide(x, det)
        except NotDivisible:
            return FractionElem(x, det)
    if isinstance(det, LaurentPoly):
        det = FractionElem(det, LaurentPoly.one(det.ctx, det.ring))
    return (x / det) if isinstance(x, FractionElem) else FractionElem(x, LaurentPoly.one(x.ctx, x.ring)) / det


def matrix_inverse(m: SquareMatrix) -> SquareMatrix:
    """adj(m)/det(m); entries stay polynomial whenever the division is exact."""
    det = determinant(m)
    if det.is_zero():
        raise Singular("matrix is singular")
    adj = adjugate(m)
    return adj.map(lambda x: _divide_entry(x, det))


# ---------------------------------------------------------------------------
# bracket, u_k, G_k


def bracket(k: int, a: SquareMatrix, a_inv: SquareMatrix | None = None) -> SquareMatrix:
    """[k]_a = 1 + a + ... + a^(k-1), 0 for k = 0, -a^k(1 + ... + a^(-k-1)) for k < 0."""
    d = a.dim
    if k == 0:
        return SquareMatrix.zero(a.ctx, a.ring, d)
    one = SquareMatrix.identity(a.ctx, a.ring, d)
    n = abs(k)
    acc = one
    p = one
    for _ in range(n - 1):
        p = p * a
        acc = acc + p
    if k > 0:
        return acc
    if a_inv is None:
        a_inv = matrix_inverse(a)
    return -((a_inv ** n) * acc)


def u_matrix(k: int, a: SquareMatrix, b: SquareMatrix, ab_inv: SquareMatrix | None = None) -> SquareMatrix:
    """u_k(a, b): [h]_{ab} a (1 - b) for k = 2h, [h+1]_{ab} a - [h]_{ab} ab for k = 2h+1."""
    ab = a * b
    h, odd = divmod(k, 2)
    one = SquareMatrix.identity(a.ctx, a.ring, a.dim)
    if not odd:
        return bracket(h, ab, ab_inv) * a * (one - b)
    return bracket(h + 1, ab, ab_inv) * a - bracket(h, ab, ab_inv) * ab


def g_matrix(k: int, a: SquareMatrix, b: SquareMatrix, ab_inv: SquareMatrix | None = None):
    """Block matrix [[1 - u_k, u_k], [1 - u_{k-1}, u_{k-1}]] as nested lists."""
    one = SquareMatrix.identity(a.ctx, a.ring, a.dim)
    u = u_matrix(k, a, b, ab_inv)
    v = u_matrix(k - 1, a, b, ab_inv)
    return [[one - u, u], [one - v, v]]
