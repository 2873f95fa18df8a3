"""Rational tangles, Montesinos links and their crossing diagrams.

A rational tangle ``[[k1],...,[kr]]`` is built from alternating twist
regions.  The last region is always horizontal; the first is horizontal when
``r`` is odd.  Horizontal regions are appended on the right, vertical ones
underneath.  ``synthesize_diagram`` expands every region into crossings,
closes the tangle (numerator) or a vertical stack of tangles (denominator),
orients each component and cuts it into Wirtinger arcs.

    >>> continued_fraction([3, 2])
    Fraction(7, 3)
    >>> fraction_to_twists(Fraction(5, 2))
    [2, 2]
    >>> d = synthesize_diagram(parse_link("N([2,2,3])"))
    >>> len(d.crossings), d.component_count
    (7, 1)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction


class DegenerateFraction(ZeroDivisionError):
    pass


class LinkSpecError(ValueError):
    pass


class DiagramError(ValueError):
    pass


def continued_fraction(twists) -> Fraction:
    """[[k1]] = k1 and [[k1..kj]] = kj + 1/[[k1..k(j-1)]]."""
    twists = list(twists)
    if not twists:
        raise ValueError("empty twist sequence")
    value = Fraction(twists[0])
    for k in twists[1:]:
        if value == 0:
            raise DegenerateFraction(f"zero intermediate value in {twists}")
        value = k + 1 / value
    return value


def fraction_to_twists(x) -> list[int]:
    """Twist sequence with the given continued fraction.

    Each step takes the integer part truncated toward zero and recurses on
    the reciprocal of the remainder, so 8/3 becomes [2, 1, 2].
    """
    x = Fraction(x)
    k = math.trunc(x)
    rem = x - k
    if rem == 0:
        return [k]
    return fraction_to_twists(1 / rem) + [k]


@dataclass(frozen=True)
class RationalTangleSpec:
    twists: tuple

    def __post_init__(self):
        if not self.twists:
            raise ValueError("a rational tangle needs at least one twist region")
        object.__setattr__(self, "twists", tuple(int(k) for k in self.twists))
        continued_fraction(self.twists)

    @property
    def fraction(self) -> Fraction:
        return continued_fraction(self.twists)

    @property
    def r(self) -> int:
        return len(self.twists)

    @classmethod
    def from_fraction(cls, x) -> "RationalTangleSpec":
        return cls(tuple(fraction_to_twists(x)))

    def __str__(self):
        return "[" + ",".join(str(k) for k in self.twists) + "]"


@dataclass(frozen=True)
class MontesinosSpec:
    """closure 'N' (one tangle) or 'D' (a vertical chain of at least two)."""

    closure: str
    tangles: tuple

    def __post_init__(self):
        if self.closure not in ("N", "D"):
            raise ValueError("closure must be 'N' or 'D'")
        if self.closure == "N" and len(self.tangles) != 1:
            raise ValueError("numerator closure takes exactly one tangle")
        if self.closure == "D" and len(self.tangles) < 2:
            raise ValueError("denominator closure needs at least two tangles")

    @classmethod
    def numerator(cls, tangle) -> "MontesinosSpec":
        return cls("N", (_as_tangle(tangle),))

    @classmethod
    def montesinos(cls, tangles) -> "MontesinosSpec":
        return cls("D", tuple(_as_tangle(t) for t in tangles))

    def rotated(self, k: int = 1) -> "MontesinosSpec":
        ts = self.tangles[k:] + self.tangles[:k]
        return MontesinosSpec(self.closure, ts)

    def __str__(self):
        if self.closure == "N":
            return f"N({self.tangles[0]})"
        return "M(" + ",".join(str(t) for t in self.tangles) + ")"


def _as_tangle(t) -> RationalTangleSpec:
    if isinstance(t, RationalTangleSpec):
        return t
    if isinstance(t, (list, tuple)):
        return RationalTangleSpec(tuple(t))
    return RationalTangleSpec.from_fraction(t)


# ---------------------------------------------------------------------------
# link spec mini-language

_SPEC_RE = re.compile(r"^\s*([NMP])\s*\((.*)\)\s*$", re.S)
_ENTRY_RE = re.compile(r"\s*(\[[^\]]*\]|[+-]?\d+(?:\s*/\s*[+-]?\d+)?)\s*(?:,|$)")


def _parse_entries(body: str) -> list:
    entries = []
    pos = 0
    body = body.strip()
    if not body:
        raise LinkSpecError("empty argument list")
    while pos < len(body):
        m = _ENTRY_RE.match(body, pos)
        if not m or m.end() == pos:
            raise LinkSpecError(f"cannot parse near {body[pos:]!r}")
        tok = m.group(1)
        if tok.startswith("["):
            inner = tok[1:-1].strip()
            try:
                ks = [int(x) for x in inner.split(",")] if inner else []
            except ValueError:
                raise LinkSpecError(f"bad twist list {tok!r}") from None
            if not ks:
                raise LinkSpecError("empty twist list")
            entries.append(ks)
        else:
            num, _, den = tok.partition("/")
            num, den = int(num), int(den) if den else 1
            if den == 0:
                raise LinkSpecError(f"zero denominator in {tok!r}")
            entries.append(Fraction(num, den))
        pos = m.end()
        if pos < len(body) and body[pos - 1] != ",":
            raise LinkSpecError("missing comma")
    if body.rstrip().endswith(","):
        raise LinkSpecError("trailing comma")
    return entries


def parse_link(text: str) -> MontesinosSpec:
    """Parse ``N(p/q)``, ``N([k1,...])``, ``M(p1/q1,...)`` or ``P(k1,...)``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise LinkSpecError(f"unrecognised link spec {text!r}")
    kind, body = m.group(1), m.group(2)
    entries = _parse_entries(body)
    try:
        if kind == "N":
            if len(entries) == 1:
                return MontesinosSpec.numerator(entries[0])
            # N(k1,k2,...) is accepted as a bare twist list
            if all(isinstance(e, Fraction) and e.denominator == 1 for e in entries):
                return MontesinosSpec.numerator([int(e) for e in entries])
            raise LinkSpecError("N() takes one tangle")
        if kind == "P":
            if not all(isinstance(e, Fraction) and e.denominator == 1 for e in entries):
                raise LinkSpecError("pretzel entries must be integers")
            return MontesinosSpec.montesinos([[int(e)] for e in entries])
        return MontesinosSpec.montesinos(entries)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, LinkSpecError):
            raise
        raise LinkSpecError(str(exc)) from None


# ---------------------------------------------------------------------------
# diagrams

# port positions around a crossing, used for crossing signs
PORTS = ("nw", "ne", "sw", "se")
_POS = {"nw": (-1, 1), "ne": (1, 1), "sw": (-1, -1), "se": (1, -1)}
_THROUGH = {"nw": "se", "se": "nw", "ne": "sw", "sw": "ne"}


@dataclass
class Crossing:
    """Wirtinger data: positive means out = over*in*over^-1."""

    sign: int
    over: int
    under_in: int
    under_out: int
    tangle: int = 0
    region: int = 0


@dataclass
class Label:
    arc: int
    reversed: bool  # label direction opposes the arc orientation


@dataclass
class Diagram:
    spec: MontesinosSpec
    crossings: list
    arc_component: list
    components: list
    labels: dict
    arc_ports: dict = field(default_factory=dict)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def arc_count(self) -> int:
        return len(self.arc_component)

    def census(self) -> tuple:
        pos = sum(1 for c in self.crossings if c.sign > 0)
        return pos, len(self.crossings) - pos


    def dump(self) -> str:
        lines = [f"{c.sign:+d} {c.over} {c.under_in} {c.under_out}" for c in self.crossings]
        for i, arcs in enumerate(self.components):
            lines.append(f"component {i + 1}: " + " ".join(str(a) for a in arcs))
        for name in self.labels:
            lab = self.labels[name]
            if "." in name and name.count(".") == 1:
                lines.append(f"seed {name} = arc {lab.arc}" + ("^-1" if lab.reversed else ""))
        return "\n".join(lines)


class _Graph:
    """Degree-two nodes; each node has two slots holding (neighbour, neighbour_slot)."""

    def __init__(self):
        self.adj = []
        self.info = []

    def node(self, info):
        self.adj.append([None, None])
        self.info.append(info)
        return len(self.adj) - 1

    def link(self, a, sa, b, sb):
        if self.adj[a][sa] is not None or self.adj[b][sb] is not None:
            raise DiagramError("slot already used")
        self.adj[a][sa] = (b, sb)
        self.adj[b][sb] = (a, sa)


class _Builder:
    def __init__(self):
        self.g = _Graph()
        self.crossings = []  # dicts: ports -> node, over pair, tangle, region
        self.junctions = {}  # label -> (node, inward)

    def crossing(self, over_nwse: bool, tangle: int, region: int):
        idx = len(self.crossings)
        ports = {p: self.g.node(("x", idx, p)) for p in PORTS}
        # slot 1 is the pass-through partner, slot 0 the external edge
        self.g.link(ports["nw"], 1, ports["se"], 1)
        self.g.link(ports["ne"], 1, ports["sw"], 1)
        self.crossings.append(
            {"ports": ports, "over": ("nw", "se") if over_nwse else ("sw", "ne"), "t": tangle, "r": region}
        )
        return idx

    def port(self, c, p):
        return self.crossings[c]["ports"][p]

    def junction(self, name, inward):
        # slot 0 faces into the region, slot 1 faces away from it
        n = self.g.node(("j", name))
        self.junctions[name] = (n, inward)
        return n

    def tangle(self, ti: int, spec: RationalTangleSpec):
        r = spec.r
        pre = f"T{ti + 1}"
        regs = []
        for j, k in enumerate(spec.twists, start=1):
            horizontal = (r - j) % 2 == 0
            name = f"{pre}.R{j}"
            a = self.junction(f"{name}.a", horizontal)
            b = self.junction(f"{name}.b", horizontal)
            o1 = self.junction(f"{name}.o1", not horizontal)
            o2 = self.junction(f"{name}.o2", not horizontal)
            cs = [self.crossing(k > 0, ti, j) for _ in range(abs(k))]
            if cs:
                first, last = cs[0], cs[-1]
                if horizontal:
                    for c, d in zip(cs, cs[1:]):
                        self.g.link(self.port(c, "ne"), 0, self.port(d, "nw"), 0)
                        self.g.link(self.port(c, "se"), 0, self.port(d, "sw"), 0)
                    ends = ("nw", "sw", "ne", "se")
                else:
                    for c, d in zip(cs, cs[1:]):
                        self.g.link(self.port(c, "sw"), 0, self.port(d, "nw"), 0)
                        self.g.link(self.port(c, "se"), 0, self.port(d, "ne"), 0)
                    ends = ("nw", "ne", "sw", "se")
                self.g.link(a, 0, self.port(first, ends[0]), 0)
                self.g.link(b, 0, self.port(first, ends[1]), 0)
                self.g.link(o1, 0, self.port(last, ends[2]), 0)
                self.g.link(o2, 0, self.port(last, ends[3]), 0)
            else:
                self.g.link(a, 0, o1, 0)
                self.g.link(b, 0, o2, 0)
            regs.append((a, b, o1, o2))
        for j in range(2, r + 1):
            a, b, _, _ = regs[j - 1]
            self.g.link(b, 1, regs[j - 2][3], 1)
            if j == 2:
                self.g.link(a, 1, regs[0][1], 1)
            else:
                self.g.link(a, 1, regs[j - 3][2], 1)
        nw = regs[0][0]
        ne, se = regs[-1][2], regs[-1][3]
        sw = regs[-2][2] if r >= 2 else regs[0][1]
        aliases = {
            "x0": f"{pre}.R1.a",
            "y0": f"{pre}.R1.b",
            "nw": f"{pre}.R1.a",
            "ne": f"{pre}.R{r}.o1",
            "se": f"{pre}.R{r}.o2",
            "sw": f"{pre}.R{r - 1}.o1" if r >= 2 else f"{pre}.R1.b",
        }
        return {"nw": nw, "ne": ne, "sw": sw, "se": se, "aliases": aliases}


def synthesize_diagram(spec: MontesinosSpec) -> Diagram:
    """Expand a Montesinos spec into an oriented crossing diagram."""
    b = _Builder()
    ends = [b.tangle(i, t) for i, t in enumerate(spec.tangles)]
    if spec.closure == "N":
        e = ends[0]
        b.g.link(e["nw"], 1, e["ne"], 1)
        b.g.link(e["sw"], 1, e["se"], 1)
    else:
        s = len(ends)
        for k in range(s):
            cur, nxt = ends[k], ends[(k + 1) % s]
            b.g.link(cur["sw"], 1, nxt["nw"], 1)
            b.g.link(cur["se"], 1, nxt["ne"], 1)
    return _trace(spec, b, ends)


def _trace(spec, b: _Builder, ends) -> Diagram:
    g = b.g
    nnodes = len(g.adj)
    for v in range(nnodes):
        if None in g.adj[v]:
            raise DiagramError("open end in diagram")
    visited = [False] * nnodes
    junction_of = {node: name for name, (node, _) in b.junctions.items()}
    walks = []
    # walk components starting from the lowest crossing port, entering the crossing there
    for start in range(nnodes):
        if visited[start] or g.info[start][0] != "x":
            continue
        events = []
        node, slot_out = start, 1
        while True:
            visited[node] = True
            info = g.info[node]
            nxt, nslot = g.adj[node][slot_out]
            if info[0] == "x" and slot_out == 1:
                events.append(("pass", info[1], info[2], g.info[nxt][2]))
            elif info[0] == "j":
                events.append(("junction", junction_of[node], slot_out == 0))
            node, slot_out = nxt, 1 - nslot
            if node == start and slot_out == 1:
                break
        walks.append(events)
    for v in range(nnodes):
        if not visited[v]:
            raise DiagramError("a component has no crossings")

    ncross = len(b.crossings)
    over_dir = [None] * ncross
    under = [None] * ncross  # (in_arc, out_arc, direction)
    over_arc = [None] * ncross
    arc_component = []
    components = []
    labels = {}
    for comp, events in enumerate(walks):
        unders = [
            i for i, e in enumerate(events)
            if e[0] == "pass" and set((e[2], e[3])) != set(b.crossings[e[1]]["over"])
        ]
        if not unders:
            raise DiagramError("a component never passes under another strand")
        first = unders[0]
        order = events[first + 1:] + events[: first + 1]
        arcs = []
        cur = len(arc_component)
        arc_component.append(comp)
        arcs.append(cur)
        for idx, e in enumerate(order):
            if e[0] == "junction":
                labels[e[1]] = (cur, e[2])
                continue
            _, c, p, q = e
            d = (_POS[q][0] - _POS[p][0], _POS[q][1] - _POS[p][1])
            if set((p, q)) == set(b.crossings[c]["over"]):
                over_dir[c] = d
                over_arc[c] = cur
            else:
                nxt = len(arc_component)
                if idx == len(order) - 1:
                    nxt = arcs[0]
                else:
                    arc_component.append(comp)
                    arcs.append(nxt)
                under[c] = (cur, nxt, d)
                cur = nxt
        components.append(arcs)

    crossings = []
    for c in range(ncross):
        od, (ain, aout, ud) = over_dir[c], under[c]
        cross = od[0] * ud[1] - od[1] * ud[0]
        crossings.append(
            Crossing(1 if cross > 0 else -1, over_arc[c], ain, aout, b.crossings[c]["t"], b.crossings[c]["r"])
        )

    out_labels = {}
    for name, (node, inward) in b.junctions.items():
        arc, moving_inward = labels[name]
        out_labels[name] = Label(arc, moving_inward != inward)
    for ti, e in enumerate(ends):
        for alias, target in e["aliases"].items():
            out_labels[f"T{ti + 1}.{alias}"] = out_labels[target]
    # keep the short tangle-level names first for readable dumps
    ordered = {k: v for k, v in out_labels.items() if k.count(".") == 1}
    ordered.update({k: v for k, v in out_labels.items() if k.count(".") > 1})
    return Diagram(spec, crossings, arc_component, components, ordered)


def component_count(diagram: Diagram) -> int:
    return diagram.component_count


def crossing_census(diagram: Diagram) -> tuple:
    return diagram.census()
