"""Brute-force Wada invariant from the Wirtinger presentation.

The Fox matrix has one block row per crossing and one block column per arc.
For a crossing with over arc j, incoming under arc k and outgoing under arc l:

    positive:  (1 - x_l,                x_j,      -1) at columns (j, k, l)
    negative:  (-x_j^-1 + x_l x_j^-1,   x_j^-1,   -1)

The quotient det(M with block row i and column j deleted) / det(1 - x_j) is
the invariant.  The sparser matrix Q with rows (1 - x_j^e, x_j^e, -1)
satisfies M D = D' Q and gives the same quotient over det(1 - x_l).
Nothing here shares code with the tangle recursion beyond the diagram and
the arc meridians.
"""

from __future__ import annotations

from .engine import TapResult, ZeroDenominator
from .laurent import FractionElem, LaurentPoly, VarContext, canonical_form
from .matrix import SquareMatrix, bareiss_determinant, determinant
from .representation import Representation
from .tangles import Diagram

DEFAULT_SIZE_CAP = 60


class SizeCapExceeded(ValueError):
    pass


def _bars(rep: Representation, ctx: VarContext):
    return [m.bar(ctx) for m in rep.arcs]


def _inv_bars(rep: Representation, ctx: VarContext):
    return [m.inverse().bar(ctx) for m in rep.arcs]


def _place(row: dict, col: int, block: SquareMatrix):
    row[col] = row[col] + block if col in row else block


def fox_matrix(diagram: Diagram, rep: Representation, ctx: VarContext | None = None) -> list:
    """Rows of {column: block} dicts, one per crossing."""
    ctx = ctx or rep.context()
    xs, xinv = _bars(rep, ctx), _inv_bars(rep, ctx)
    one = SquareMatrix.identity(ctx, rep.ring, rep.dim)
    rows = []
    for c in diagram.crossings:
        row: dict = {}
        j, k, l = c.over, c.under_in, c.under_out
        if c.sign > 0:
            _place(row, j, one - xs[l])
            _place(row, k, xs[j])
        else:
            _place(row, j, -xinv[j] + xs[l] * xinv[j])
            _place(row, k, xinv[j])
        _place(row, l, -one)
        rows.append(row)
    return rows


def q_matrix(diagram: Diagram, rep: Representation, ctx: VarContext | None = None) -> list:
    ctx = ctx or rep.context()
    xs, xinv = _bars(rep, ctx), _inv_bars(rep, ctx)
    one = SquareMatrix.identity(ctx, rep.ring, rep.dim)
    rows = []
    for c in diagram.crossings:
        row: dict = {}
        g = xs[c.over] if c.sign > 0 else xinv[c.over]
        _place(row, c.over, one - g)
        _place(row, c.under_in, g)
        _place(row, c.under_out, -one)
        rows.append(row)
    return rows


def d_blocks(diagram: Diagram, rep: Representation, ctx: VarContext | None = None):
    """Diagonal blocks of D (1 - x_j per arc) and D' (1 - x_l per crossing)."""
    ctx = ctx or rep.context()
    xs = _bars(rep, ctx)
    one = SquareMatrix.identity(ctx, rep.ring, rep.dim)
    D = [one - x for x in xs]
    Dp = [one - xs[c.under_out] for c in diagram.crossings]
    return D, Dp


def block_product_right_diag(rows, diag):
    """(rows) * diag(diag) as sparse block rows."""
    return [{j: b * diag[j] for j, b in r.items()} for r in rows]


def block_product_left_diag(diag, rows):
    return [{j: diag[i] * b for j, b in r.items()} for i, r in enumerate(rows)]


def sparse_equal(a, b) -> bool:
    for ra, rb in zip(a, b):
        for j in set(ra) | set(rb):
            x, y = ra.get(j), rb.get(j)
            if x is None:
                if not y.is_zero():
                    return False
            elif y is None:
                if not x.is_zero():
                    return False
            elif not x == y:
                return False
    return True


def assemble_minor(rows, m: int, i: int, j: int, ctx, ring, d: int):
    """Scalar rows of the block matrix with block row i and block column j removed."""
    zero = LaurentPoly.zero(ctx, ring)
    cols = [c for c in range(m) if c != j]
    out = []
    for r, row in enumerate(rows):
        if r == i:
            continue
        for a in range(d):
            line = []
            for c in cols:
                blk = row.get(c)
                if blk is None:
                    line.extend([zero] * d)
                else:
                    line.extend(blk.rows[a])
            out.append(line)
    return out


def wada_invariant(diagram: Diagram, rep: Representation, i: int = 0, j: int = 0,
                   use_q: bool = False, size_cap: int = DEFAULT_SIZE_CAP) -> TapResult:
    """det(minor) / det(1 - x) straight from the definition."""
    ctx = rep.context()
    m = len(diagram.crossings)
    d = rep.dim
    if (m - 1) * d > size_cap:
        raise SizeCapExceeded(f"minor of size {(m - 1) * d} exceeds cap {size_cap}")
    rows = q_matrix(diagram, rep, ctx) if use_q else fox_matrix(diagram, rep, ctx)
    scalar = assemble_minor(rows, m, i, j, ctx, rep.ring, d)
    if scalar:
        num = bareiss_determinant(scalar, ctx, rep.ring)
    else:
        num = LaurentPoly.one(ctx, rep.ring)
    arc = diagram.crossings[i].under_out if use_q else j
    den = determinant(SquareMatrix.identity(ctx, rep.ring, d) - rep.arcs[arc].bar(ctx))
    if den.is_zero():
        raise ZeroDenominator("det(1 - x) vanishes identically")
    return TapResult(canonical_form(FractionElem(num, den)), ctx, False, True)


def all_minors(diagram: Diagram, rep: Representation, use_q: bool = False, size_cap: int = DEFAULT_SIZE_CAP):
    """Every (i, j) minor quotient; test-only helper."""
    m = len(diagram.crossings)
    return {
        (i, j): wada_invariant(diagram, rep, i, j, use_q, size_cap)
        for i in range(m)
        for j in range(m)
    }
