"""Twisted Alexander polynomials of rational and Montesinos links.

Each rational tangle is reduced to three boundary matrices
``(b_ne, b_sw, b_se)`` by running the twist-region recursion

    [eta_out1, eta_out2] = G_k(a, b) [eta_a, eta_b]

where ``a``, ``b`` are the meridians entering the region (taken in the
region's own direction).  Numerator closures then give
``det(b_ne) / det(1 - x_se)``; a vertical chain of tangles gives
``prod det(b_ne_k) * det(c) / det(1 - x_se_s)`` with
``c = p_1 + p_2 q_1 + ... + p_s q_(s-1)...q_1``.

All divisions by ``b_ne`` are done fraction free: with ``adj_k`` and ``D_k``
the adjugate and determinant of ``b_ne_k``,

    C = sum_k sw_k adj_k P_k prod_(j>k) D_j,   P_(k+1) = (se_k - sw_k) adj_k P_k

so ``det(C) = (prod D_k)^d det(c)`` and the numerator is
``det(C) / (prod D_k)^(d-1)``, an exact polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import (
    CanonicalResult,
    FractionElem,
    LaurentPoly,
    NotDivisible,
    VarContext,
    canonical_form,
    exact_divide,
)
from .matrix import SquareMatrix, adjugate, determinant, g_matrix
from .representation import Meridian, Representation, trivial_representation
from .tangles import Diagram, MontesinosSpec, RationalTangleSpec, synthesize_diagram


class EngineError(ArithmeticError):
    pass


class ZeroDenominator(EngineError):
    pass


class DivisionFailed(EngineError):
    pass


class PreconditionFailed(EngineError):
    pass


class UnsupportedContext(EngineError):
    pass


@dataclass
class TangleBoundary:
    b_ne: SquareMatrix
    b_sw: SquareMatrix
    b_se: SquareMatrix
    x0: Meridian
    y0: Meridian
    out_ne: Meridian
    out_sw: Meridian
    out_se: Meridian
    regions: list = field(default_factory=list)  # (k, a, b) per twist region

    def embed(self, ctx: VarContext) -> "TangleBoundary":
        return TangleBoundary(
            self.b_ne.embed(ctx), self.b_sw.embed(ctx), self.b_se.embed(ctx),
            self.x0, self.y0, self.out_ne, self.out_sw, self.out_se, self.regions,
        )


@dataclass
class TapResult:
    value: CanonicalResult
    context: VarContext
    used_degenerate_path: bool = False
    oracle_checked: bool = False
    boundaries: list = field(default_factory=list)

    @property
    def metadata(self) -> dict:
        return {"used_degenerate_path": self.used_degenerate_path, "oracle_checked": self.oracle_checked}

    @property
    def is_polynomial(self) -> bool:
        return self.value.is_polynomial

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# twist regions


def region_outputs(k: int, a: Meridian, b: Meridian):
    """Meridians leaving a twist region with k crossings, entries (a, b)."""
    if k >= 0:
        for _ in range(k):
            a, b = a.conj(b), a
    else:
        for _ in range(-k):
            a, b = b, b.inverse().conj(a)
    return a, b


def tangle_boundary(tangle: RationalTangleSpec, entry_a: Meridian, entry_b: Meridian,
                    ctx: VarContext) -> TangleBoundary:
    """Boundary coefficients of a rational tangle with entry meridians x0, y0."""
    ring = entry_a.ring
    d = entry_a.dim
    one = SquareMatrix.identity(ctx, ring, d)
    zero = SquareMatrix.zero(ctx, ring, d)
    out1, out2, eta1, eta2 = {}, {}, {}, {}
    regions = []
    for j, k in enumerate(tangle.twists, start=1):
        if j == 1:
            a, b, ea, eb = entry_a, entry_b, zero, one
        elif j == 2:
            a, b, ea, eb = entry_b, out2[1].inverse(), one, eta2[1]
        else:
            a, b, ea, eb = out1[j - 2], out2[j - 1].inverse(), eta1[j - 2], eta2[j - 1]
        regions.append((k, a, b))
        abar, bbar = a.bar(ctx), b.bar(ctx)
        ab_inv = (a * b).inverse().bar(ctx)
        G = g_matrix(k, abar, bbar, ab_inv)
        eta1[j] = G[0][0] * ea + G[0][1] * eb
        eta2[j] = G[1][0] * ea + G[1][1] * eb
        out1[j], out2[j] = region_outputs(k, a, b)
    r = tangle.r
    b_sw = eta1[r - 1] if r >= 2 else one
    sw = out1[r - 1] if r >= 2 else entry_b
    return TangleBoundary(eta1[r], b_sw, eta2[r], entry_a, entry_b, out1[r], sw, out2[r], regions)


def boundaries(rep: Representation, ctx: VarContext | None = None) -> list:
    ctx = ctx or rep.context()
    out = []
    for k, t in enumerate(rep.diagram.spec.tangles, start=1):
        x0 = rep.label_meridian(f"T{k}.x0")
        y0 = rep.label_meridian(f"T{k}.y0")
        out.append(tangle_boundary(t, x0, y0, ctx))
    return out


# ---------------------------------------------------------------------------
# closures


def _one_minus(m: Meridian, ctx) -> LaurentPoly:
    d = m.dim
    den = determinant(SquareMatrix.identity(ctx, m.ring, d) - m.bar(ctx))
    if den.is_zero():
        raise ZeroDenominator("det(1 - x_se) vanishes identically")
    return den


def _finish(num, den, ctx, degenerate=False, bds=None) -> TapResult:
    if isinstance(num, FractionElem):
        num, den = num.num, num.den * den
    return TapResult(canonical_form(FractionElem(num, den)), ctx, degenerate, False, bds or [])


def tap_numerator(rep: Representation) -> TapResult:
    """det(b_ne) / det(1 - x_se) for a numerator closure N(T)."""
    spec = rep.diagram.spec
    if spec.closure != "N":
        raise PreconditionFailed("not a numerator closure")
    ctx = rep.context()
    (tb,) = boundaries(rep, ctx)
    num = determinant(tb.b_ne)
    return _finish(num, _one_minus(tb.out_se, ctx), ctx, False, [tb])


def _chain_numerator(bds, ctx, d):
    """det(C) / (prod D_k)^(d-1) for the chain formula (exact)."""
    dets = [determinant(tb.b_ne) for tb in bds]
    adjs = [adjugate(tb.b_ne) for tb in bds]
    ring = bds[0].b_ne.ring
    P = SquareMatrix.identity(ctx, ring, d)
    terms = []
    for tb, adj in zip(bds, adjs):
        step = adj * P
        terms.append(tb.b_sw * step)
        P = (tb.b_se - tb.b_sw) * step
    C = SquareMatrix.zero(ctx, ring, d)
    s = len(bds)
    for k in range(s):
        scale = LaurentPoly.one(ctx, ring)
        for j in range(k + 1, s):
            scale = scale * dets[j]
        C = C + terms[k] * scale
    detC = determinant(C)
    prod = LaurentPoly.one(ctx, ring)
    for D in dets:
        prod = prod * D
    if d == 1:
        return detC
    try:
        return exact_divide(detC, prod ** (d - 1))
    except NotDivisible:
        raise DivisionFailed("chain determinant not divisible by prod det(b_ne)^(d-1)") from None


def tap_denominator(rep: Representation, force_degenerate: bool = False) -> TapResult:
    """Chain formula for D(T_1 * ... * T_s); switches to the epsilon path when needed."""
    spec = rep.diagram.spec
    if spec.closure != "D":
        raise PreconditionFailed("not a denominator closure")
    ctx = rep.context()
    bds = boundaries(rep, ctx)
    if force_degenerate or any(determinant(tb.b_ne).is_zero() for tb in bds):
        return tap_degenerate(rep, bds)
    num = _chain_numerator(bds, ctx, rep.dim)
    return _finish(num, _one_minus(bds[-1].out_se, ctx), ctx, False, bds)


def tap_degenerate(rep: Representation, bds=None) -> TapResult:
    """Replace each b_ne_k by b_ne_k + e_k I, expand, and set e = 0."""
    spec = rep.diagram.spec
    s = len(spec.tangles)
    base = rep.context()
    bds = bds or boundaries(rep, base)
    ctx = base.extend(s)
    ring = rep.ring
    lifted = []
    for k, tb in enumerate(bds):
        eps = LaurentPoly.var(ctx, ring, base.n + k)
        tb = tb.embed(ctx)
        tb.b_ne = tb.b_ne + SquareMatrix.scalar(ctx, ring, rep.dim, eps)
        lifted.append(tb)
    num = _chain_numerator(lifted, ctx, rep.dim).restrict(base)
    return _finish(num, _one_minus(bds[-1].out_se, base), base, True, bds)


def tap_three_strand_simplified(rep: Representation, i: int) -> TapResult:
    """Three-tangle shortcut valid when b_sw of tangle i (0-based) is the identity."""
    spec = rep.diagram.spec
    if spec.closure != "D" or len(spec.tangles) != 3:
        raise PreconditionFailed("needs a chain of exactly three tangles")
    ctx = rep.context()
    bds = boundaries(rep, ctx)
    bi = bds[i % 3]
    if not bi.b_sw.is_identity():
        raise PreconditionFailed(f"b_sw of tangle {i % 3 + 1} is not the identity")
    prev, nxt = bds[(i - 1) % 3], bds[(i + 1) % 3]
    ring = rep.ring
    d = rep.dim
    one = SquareMatrix.identity(ctx, ring, d)
    Dp = determinant(prev.b_ne)
    if Dp.is_zero():
        raise PreconditionFailed("det(b_ne) of the preceding tangle vanishes")
    adj = adjugate(prev.b_ne)
    N = nxt.b_ne * Dp + (bi.b_se - one) * (nxt.b_sw * Dp + prev.b_sw * adj * (nxt.b_se - nxt.b_sw))
    detN = determinant(N)
    num = detN if d == 1 else exact_divide(detN, Dp ** (d - 1))
    return _finish(num, _one_minus(prev.out_se, ctx), ctx, False, bds)


def compute_tap(rep: Representation, force_degenerate: bool = False) -> TapResult:
    if rep.diagram.spec.closure == "N":
        return tap_numerator(rep)
    return tap_denominator(rep, force_degenerate)


def alexander_polynomial(spec, force_degenerate: bool = False, ring=None) -> TapResult:
    """Ordinary (multi-variable) Alexander polynomial via the trivial representation."""
    diagram = spec if isinstance(spec, Diagram) else synthesize_diagram(spec)
    rep = trivial_representation(diagram, ring)
    res = compute_tap(rep, force_degenerate)
    res.value = ordinary_from_wada(res.value, diagram.component_count)
    return res


def ordinary_from_wada(value: CanonicalResult, components: int) -> CanonicalResult:
    """For a knot the trivial-rep quotient is Delta/(t - 1); undo that."""
    if components != 1:
        return value
    t = LaurentPoly.var(value.num.ctx, value.num.ring, 0)
    return canonical_form(FractionElem(value.num * (t - 1), value.den))


def divides(f, g) -> bool:
    """True when g/f is a Laurent polynomial (one variable only)."""
    fv = f.value if isinstance(f, TapResult) else f
    gv = g.value if isinstance(g, TapResult) else g
    fv = fv if isinstance(fv, CanonicalResult) else canonical_form(fv)
    gv = gv if isinstance(gv, CanonicalResult) else canonical_form(gv)
    if fv.num.ctx.nvars != 1:
        raise UnsupportedContext("divides() is only defined for one variable")
    try:
        exact_divide(gv.num * fv.den, gv.den * fv.num)
        return True
    except NotDivisible:
        return False


def link_from_spec(spec) -> Diagram:
    if isinstance(spec, str):
        from .tangles import parse_link

        spec = parse_link(spec)
    if isinstance(spec, MontesinosSpec):
        return synthesize_diagram(spec)
    return spec
