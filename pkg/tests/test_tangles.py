from fractions import Fraction

import pytest

from montap.tangles import (
    DegenerateFraction,
    LinkSpecError,
    MontesinosSpec,
    RationalTangleSpec,
    component_count,
    continued_fraction,
    crossing_census,
    fraction_to_twists,
    parse_link,
    synthesize_diagram,
)


@pytest.mark.parametrize("twists, value", [([2], 2), ([3, 2], Fraction(7, 3)), ([2, 3], Fraction(7, 2)), ([2, 2], Fraction(5, 2))])
def test_continued_fraction(twists, value):
    assert continued_fraction(twists) == value


def test_continued_fraction_degenerate():
    with pytest.raises(DegenerateFraction):
        continued_fraction([0, 3])


@pytest.mark.parametrize("x, twists", [("5/2", [2, 2]), ("7/2", [2, 3]), ("7/3", [3, 2]), ("4", [4]), ("-2", [-2]), ("8/3", [2, 1, 2])])
def test_fraction_to_twists(x, twists):
    assert fraction_to_twists(x) == twists
    assert continued_fraction(twists) == Fraction(x)


def test_parse_forms():
    assert parse_link("N([2,2,3])") == MontesinosSpec("N", (RationalTangleSpec((2, 2, 3)),))
    assert parse_link("N(7/2)").tangles[0].twists == (2, 3)
    assert parse_link("M(-2, 5/2, 3)").tangles[1].twists == (2, 2)
    assert parse_link("P(3,3,3)") == parse_link("M(3,3,3)")
    assert parse_link("M([3,2],2,[2,3])") == parse_link("M(7/3,2,7/2)")


@pytest.mark.parametrize("text", ["Q(3)", "N()", "P(3/2,1)", "N(1,2/3)", "M(1/0)", "N([2,"])
def test_parse_errors(text):
    with pytest.raises(LinkSpecError):
        parse_link(text)


@pytest.mark.parametrize("link, crossings, components", [
    ("N([3])", 3, 1),
    ("P(2,2,2)", 6, 3),
    ("N([2,2,3])", 7, 1),
    ("N([2,2,2])", 6, 2),
    ("P(3,3,3)", 9, 1),
    ("M(-2,5/2,3)", 9, 1),
    ("M(7/3,2,7/2)", 12, 1),
])
def test_synthesized_sizes(link, crossings, components):
    d = synthesize_diagram(parse_link(link))
    assert len(d.crossings) == crossings
    assert component_count(d) == components


def test_alternating_is_monosigned_census():
    pos, neg = crossing_census(synthesize_diagram(parse_link("P(3,3,3)")))
    assert pos + neg == 9


def test_arcs_are_well_formed():
    d = synthesize_diagram(parse_link("M(7/3,2,7/2)"))
    outs = sorted(c.under_out for c in d.crossings)
    assert outs == list(range(d.arc_count))
    ins = sorted(c.under_in for c in d.crossings)
    assert ins == list(range(d.arc_count))


def test_dump_format():
    text = synthesize_diagram(parse_link("N([3])")).dump().splitlines()
    assert text[0].split()[0] in ("+1", "-1") and len(text[0].split()) == 4
    assert any(line.startswith("component 1:") for line in text)
    assert "seed T1.x0 = arc" in "\n".join(text)


def test_labels_present():
    d = synthesize_diagram(parse_link("P(3,3,3)"))
    for k in (1, 2, 3):
        for side in ("x0", "y0", "nw", "ne", "se", "sw"):
            assert f"T{k}.{side}" in d.labels


def test_rotation():
    spec = parse_link("M(1/3,2,5)")
    assert spec.rotated(1).tangles == spec.tangles[1:] + spec.tangles[:1]
