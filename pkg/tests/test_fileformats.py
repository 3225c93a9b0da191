import pytest

from learnspace import (
    GridDrawing,
    assign_coordinates,
    build_graph,
    from_permutation,
    power_set,
    prefix_suffix_family,
    recognize,
)
from learnspace.fileformats import (
    FormatError,
    format_arrangement,
    format_drawing,
    format_family,
    parse_arrangement,
    parse_drawing,
    parse_family,
)

FAMILY = """learnspace-family 1
{
  "universe": ["a", "b"],
  "states": [
    [],
    ["a"],
    ["b", "z"]
  ]
}
"""


def test_family_roundtrip():
    F = prefix_suffix_family("abc")
    text = format_family(F)
    assert text.startswith("learnspace-family 1\n")
    assert parse_family(text) == F
    assert format_family(parse_family(text)) == text


def test_unknown_element_position():
    with pytest.raises(FormatError) as exc:
        parse_family(FAMILY, "f.fam")
    err = exc.value
    assert (err.line, err.col) == (7, 11)
    assert "unknown element 'z'" in str(err)
    assert str(err).startswith("f.fam:7:11:")


def test_duplicate_state_position():
    text = 'learnspace-family 1\n{"universe": ["a", "b"],\n "states": [[], ["a", "b"], ["b", "a"]]}\n'
    with pytest.raises(FormatError) as exc:
        parse_family(text)
    assert (exc.value.line, exc.value.col) == (3, 29)
    assert "duplicate state" in exc.value.message


def test_bad_header_and_syntax():
    with pytest.raises(FormatError) as exc:
        parse_family('{"universe": [], "states": [[]]}')
    assert exc.value.line == 1
    with pytest.raises(FormatError) as exc:
        parse_family('learnspace-family 1\n{"universe": [],\n "states": [[]}')
    assert exc.value.line == 3


def test_missing_and_extra_keys():
    with pytest.raises(FormatError, match="missing key 'states'"):
        parse_family('learnspace-family 1\n{"universe": []}')
    with pytest.raises(FormatError, match="unexpected key"):
        parse_family('learnspace-family 1\n{"universe": [], "states": [], "x": 1}')
    with pytest.raises(FormatError, match="duplicate element"):
        parse_family('learnspace-family 1\n{"universe": ["a", "a"], "states": []}')


def test_arrangement_forms():
    A = parse_arrangement('learnspace-arrangement 1\n{"universe": ["a", "b"], "permutation": [1, 0]}')
    assert A == from_permutation(["a", "b"], [1, 0])
    B = parse_arrangement(
        'learnspace-arrangement 1\n{"universe": ["p", "q"], "corners": [[5, 0], [-1, 3]]}'
    )
    assert B.universe.elements == ("q", "p") and B.permutation == (1, 0)
    assert parse_arrangement(format_arrangement(B)) == B


def test_arrangement_errors():
    with pytest.raises(FormatError, match="breaks the permutation"):
        parse_arrangement('learnspace-arrangement 1\n{"universe": ["a", "b"], "permutation": [1, 1]}')
    with pytest.raises(FormatError, match="x coordinate 0 repeated"):
        parse_arrangement(
            'learnspace-arrangement 1\n{"universe": ["a", "b"], "corners": [[0, 0], [0, 1]]}'
        )
    with pytest.raises(FormatError, match="exactly one"):
        parse_arrangement('learnspace-arrangement 1\n{"universe": ["a"]}')


def test_drawing_roundtrip():
    F = prefix_suffix_family("abc")
    G = build_graph(F)
    D = assign_coordinates(F, recognize(F))
    text = format_drawing(D, G)
    D2, G2 = parse_drawing(text)
    assert D2 == D
    assert G2.edges == G.edges and G2.vertices == G.vertices
    assert format_drawing(D2, G2) == text


def test_drawing_edge_checks():
    G = build_graph(power_set("ab"))
    D = GridDrawing({0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)})
    text = format_drawing(D, G)
    bad_label = text.replace('"from": 0, "to": 1, "label": "a"', '"from": 0, "to": 1, "label": "b"')
    with pytest.raises(FormatError, match="single-element extension"):
        parse_drawing(bad_label)
    lines = text.splitlines()
    dropped = "\n".join(l for l in lines if '"from": 0, "to": 1' not in l)
    dropped = dropped.replace('"label": "b"},\n  ]', '"label": "b"}\n  ]')
    with pytest.raises(FormatError, match="missing edge"):
        parse_drawing(dropped)
    clash = text.replace('"x": 1, "y": 1', '"x": 1, "y": 0')
    with pytest.raises(FormatError, match="already used"):
        parse_drawing(clash)
