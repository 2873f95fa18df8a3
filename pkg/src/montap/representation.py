"""Representations given by seed meridian matrices.

A representation is specified by d x d matrices over a coefficient ring for a
few labelled arcs of the diagram (the *seeds*, named like ``T1.x0``).  Every
other arc's matrix follows from the Wirtinger relations, which
:func:`propagate` solves by a fixpoint sweep over the crossings.  A seed
describes the meridian in the label's own direction; when that direction
opposes the arc orientation the arc carries the inverse matrix.

Group elements are kept as :class:`Meridian` values: an abelianisation
exponent vector together with an R-matrix, so products and inverses stay
exact and the image t^alpha(g) rho(g) is available on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import VarContext
from .matrix import SquareMatrix
from .rings import IntegerRing, NotAUnitError, Ring, ring_from_spec
from .tangles import Diagram


class InvalidRepresentation(ValueError):
    pass


class UnderdeterminedSeeds(InvalidRepresentation):
    pass


# ---------------------------------------------------------------------------
# plain matrices over R (tuples of tuples)


def rmat_identity(ring: Ring, d: int):
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(d)) for i in range(d))


def rmat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), r[0] * 0) for c in cols) for r in a)


def rmat_equal(ring: Ring, a, b) -> bool:
    return all(ring.equal(x, y) for r, s in zip(a, b) for x, y in zip(r, s))


def rmat_det(ring: Ring, a):
    d = len(a)
    if d == 1:
        return a[0][0]
    if d == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = ring.zero
    for j in range(d):
        sub = tuple(tuple(r[:j] + r[j + 1:]) for r in a[1:])
        term = a[0][j] * rmat_det(ring, sub)
        total = total - term if j % 2 else total + term
    return total


def rmat_inverse(ring: Ring, a):
    """Exact inverse; requires a unit determinant."""
    d = len(a)
    det = rmat_det(ring, a)
    if not ring.is_unit(det):
        raise NotAUnitError(f"determinant {ring.format(det)} is not a unit")
    dinv = ring.inverse(det)
    if d == 1:
        return ((dinv,),)
    out = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            sub = tuple(
                tuple(x for c, x in enumerate(r) if c != j) for rr, r in enumerate(a) if rr != i
            )
            c = rmat_det(ring, sub)
            if (i + j) % 2:
                c = -c
            out[j][i] = c * dinv
    return tuple(tuple(r) for r in out)


def rmat_format(ring: Ring, a) -> str:
    return "[" + "; ".join(", ".join(ring.format(x) for x in r) for r in a) + "]"


# ---------------------------------------------------------------------------
# group elements


class Meridian:
    """Group element image: abelianisation exponents plus rho-matrix."""

    __slots__ = ("ring", "exps", "mat")

    def __init__(self, ring: Ring, exps, mat):
        self.ring = ring
        self.exps = tuple(exps)
        self.mat = tuple(tuple(r) for r in mat)

    @classmethod
    def identity(cls, ring, n, d):
        return cls(ring, (0,) * n, rmat_identity(ring, d))

    @property
    def dim(self):
        return len(self.mat)

    def __mul__(self, other: "Meridian") -> "Meridian":
        return Meridian(
            self.ring,
            tuple(a + b for a, b in zip(self.exps, other.exps)),
            rmat_mul(self.mat, other.mat),
        )

    def inverse(self) -> "Meridian":
        return Meridian(self.ring, tuple(-a for a in self.exps), rmat_inverse(self.ring, self.mat))

    def __pow__(self, k: int) -> "Meridian":
        base = self if k >= 0 else self.inverse()
        out = Meridian.identity(self.ring, len(self.exps), self.dim)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conj(self, other: "Meridian") -> "Meridian":
        """self . other = self * other * self^-1."""
        return self * other * self.inverse()

    def __eq__(self, other):
        if not isinstance(other, Meridian):
            return NotImplemented
        return self.exps == other.exps and rmat_equal(self.ring, self.mat, other.mat)

    __hash__ = None

    def bar(self, ctx: VarContext) -> SquareMatrix:
        """t^alpha(g) rho(g) as a matrix over Laurent polynomials."""
        exps = self.exps + (0,) * (ctx.nvars - len(self.exps))
        return SquareMatrix.from_ring_matrix(ctx, self.ring, self.mat, exps)

    def __repr__(self):
        return f"Meridian(t^{list(self.exps)}, {rmat_format(self.ring, self.mat)})"


def conjugate_meridian(sign: int, over: Meridian, under_in: Meridian) -> Meridian:
    """Outgoing under-arc meridian: J K J^-1 (positive) or J^-1 K J (negative)."""
    if sign > 0:
        return over * under_in * over.inverse()
    return over.inverse() * under_in * over


# ---------------------------------------------------------------------------
# representations


@dataclass
class Representation:
    ring: Ring
    dim: int
    seeds: dict
    diagram: Diagram | None = None
    arcs: list = field(default_factory=list)  # Meridian per arc (actual orientation)

    @property
    def n(self) -> int:
        return self.diagram.component_count

    def arc_meridian(self, arc: int) -> Meridian:
        return self.arcs[arc]

    def label_meridian(self, name: str) -> Meridian:
        """Meridian of a labelled arc taken in the label's direction."""
        lab = self.diagram.labels[name]
        m = self.arcs[lab.arc]
        return m.inverse() if lab.reversed else m

    def context(self, e: int = 0) -> VarContext:
        return VarContext(self.n, e)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_spec(),
            "dim": self.dim,
            "seeds": {k: [[self.ring.format(x) for x in r] for r in v] for k, v in self.seeds.items()},
        }


def _check_matrix(ring, dim, name, mat):
    if len(mat) != dim or any(len(r) != dim for r in mat):
        raise InvalidRepresentation(f"seed {name} is not {dim}x{dim}")
    try:
        rmat_inverse(ring, mat)
    except NotAUnitError:
        raise InvalidRepresentation(f"seed {name} is not invertible over {ring!r}") from None


def propagate(diagram: Diagram, seeds: dict, ring: Ring, dim: int | None = None) -> Representation:
    """Fill in every arc's meridian from the seeds.

    Crossings are swept in index order until nothing changes; a crossing
    yields its outgoing under-arc from over and incoming arcs, or the
    incoming arc from over and outgoing arcs.  Relations whose three arcs are
    all known are left for :func:`verify_representation`.
    """
    seeds = {k: tuple(tuple(ring(x) for x in r) for r in v) for k, v in seeds.items()}
    if dim is None:
        dim = len(next(iter(seeds.values())))
    n = diagram.component_count
    arcs: list = [None] * diagram.arc_count
    for name, mat in seeds.items():
        if name not in diagram.labels:
            raise InvalidRepresentation(f"unknown seed label {name!r}")
        _check_matrix(ring, dim, name, mat)
        lab = diagram.labels[name]
        exps = [0] * n
        exps[diagram.arc_component[lab.arc]] = 1
        m = Meridian(ring, exps, mat)
        if lab.reversed:
            m = Meridian(ring, exps, rmat_inverse(ring, mat))
        if arcs[lab.arc] is None:
            arcs[lab.arc] = m
    changed = True
    while changed:
        changed = False
        for c in diagram.crossings:
            o, a, b = arcs[c.over], arcs[c.under_in], arcs[c.under_out]
            if o is None:
                continue
            if a is not None and b is None:
                arcs[c.under_out] = conjugate_meridian(c.sign, o, a)
                changed = True
            elif b is not None and a is None:
                arcs[c.under_in] = conjugate_meridian(-c.sign, o, b)
                changed = True
    missing = [i for i, m in enumerate(arcs) if m is None]
    if missing:
        raise UnderdeterminedSeeds(
            f"seeds do not determine arcs {missing}; add seeds for more labels "
            f"(available: {', '.join(k for k in diagram.labels if k.count('.') == 1)})"
        )
    return Representation(ring, dim, seeds, diagram, arcs)


def verify_representation(rep: Representation, diagram: Diagram | None = None) -> list:
    """Violated identities as readable strings; an empty list means Ok."""
    diagram = diagram or rep.diagram
    ring = rep.ring
    out = []
    for i, c in enumerate(diagram.crossings):
        expect = conjugate_meridian(c.sign, rep.arcs[c.over], rep.arcs[c.under_in])
        if not rmat_equal(ring, expect.mat, rep.arcs[c.under_out].mat):
            rel = "x_j x_k x_j^-1" if c.sign > 0 else "x_j^-1 x_k x_j"
            out.append(
                f"crossing {i}: arc {c.under_out} != {rel} with j={c.over}, k={c.under_in}"
            )
    for name, mat in rep.seeds.items():
        m = rep.label_meridian(name)
        if not rmat_equal(ring, m.mat, mat):
            out.append(f"seed {name}: propagated {rmat_format(ring, m.mat)} != given {rmat_format(ring, mat)}")
    return out


def trivial_representation(diagram: Diagram, ring: Ring | None = None) -> Representation:
    """The one-dimensional trivial representation (over the integers by default)."""
    ring = ring or IntegerRing()
    seeds = {}
    for k in range(len(diagram.spec.tangles)):
        seeds[f"T{k + 1}.x0"] = ((1,),)
        seeds[f"T{k + 1}.y0"] = ((1,),)
    return propagate(diagram, seeds, ring, 1)


# ---------------------------------------------------------------------------
# file format


def load_representation_data(data: dict, ring_override: Ring | None = None):
    """Parse the JSON representation format into (ring, dim, seeds)."""
    try:
        ring = ring_override if ring_override is not None else ring_from_spec(data["ring"])
        dim = int(data["dim"])
        raw = data["seeds"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidRepresentation(f"malformed representation: {exc}") from None
    if not isinstance(raw, dict) or not raw:
        raise InvalidRepresentation("no seeds given")
    seeds = {}
    for name, mat in raw.items():
        try:
            seeds[name] = tuple(tuple(ring(_literal(x)) for x in r) for r in mat)
        except (TypeError, ValueError) as exc:
            raise InvalidRepresentation(f"seed {name}: {exc}") from None
        _check_matrix(ring, dim, name, seeds[name])
    return ring, dim, seeds


def _literal(x):
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        raise ValueError("boolean entry")
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, float):
        return complex(x)
    raise ValueError(f"bad entry {x!r}")


def read_representation_json(path) -> dict:
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidRepresentation(f"invalid JSON: {exc}") from None


def build_representation(diagram: Diagram, data: dict, ring_override: Ring | None = None) -> Representation:
    ring, dim, seeds = load_representation_data(data, ring_override)
    return propagate(diagram, seeds, ring, dim)
