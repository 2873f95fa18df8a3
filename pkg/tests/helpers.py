"""Shared helpers for the test modules."""

from pathlib import Path

from montap.laurent import LaurentPoly, VarContext
from montap.representation import build_representation, read_representation_json
from montap.rings import IntegerRing
from montap.tangles import parse_link, synthesize_diagram

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def poly(expr, n=1, ring=None, e=0):
    """Evaluate a Python expression in the variables t (or t1..tn) and e1..es."""
    ring = ring or IntegerRing()
    ctx = VarContext(n, e)
    names = ctx.names()
    env = {name: LaurentPoly.var(ctx, ring, i) for i, name in enumerate(names)}
    env["one"] = LaurentPoly.one(ctx, ring)
    value = eval(expr, {"__builtins__": {}}, env)
    if not isinstance(value, LaurentPoly):
        value = LaurentPoly.constant(ctx, ring, value)
    return value


def load_rep(link, name, ring=None):
    diagram = synthesize_diagram(parse_link(link))
    return build_representation(diagram, read_representation_json(FIXTURES / name), ring)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def bracket_poly(k, a):
    """[k]_a for a Laurent polynomial a (k >= 0)."""
    out = a * 0
    for i in range(k):
        out = out + a ** i
    return out
