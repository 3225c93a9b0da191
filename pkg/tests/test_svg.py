import re
import warnings
from pathlib import Path

import pytest

from learnspace import (
    GridDrawing,
    SetFamily,
    SvgOptions,
    Universe,
    assign_coordinates,
    build_graph,
    power_set,
    prefix_suffix_family,
    recognize,
    render_svg,
)

GOLDEN = Path(__file__).parent / "golden"


def drawn(F):
    return assign_coordinates(F, recognize(F)), build_graph(F)


def test_square_structure():
    D, G = drawn(power_set("ab"))
    svg = render_svg(D, G)
    assert svg.count("<circle") == 4
    assert svg.count("<line") == 4
    # grid [0, 2] at 48 px plus a 24 px margin on each side
    assert 'viewBox="0 0 144 144"' in svg
    assert "scale(1 -1)" in svg


def test_empty_universe_single_circle():
    F = SetFamily(Universe(()), (0,))
    D, G = drawn(F)
    svg = render_svg(D, G)
    assert svg.count("<circle") == 1
    assert "<line" not in svg


def test_unit_option():
    D, G = drawn(power_set("ab"))
    svg = render_svg(D, G, SvgOptions(unit=10, margin=0))
    assert 'viewBox="0 0 20 20"' in svg


def test_labels():
    D, G = drawn(power_set("ab"))
    svg = render_svg(D, G, SvgOptions(edge_labels=True, state_labels=True))
    texts = re.findall(r"<text[^>]*>([^<]*)</text>", svg)
    assert sorted(texts) == sorted(["a", "a", "b", "b", "{}", "{a}", "{b}", "{a,b}"])


def test_invalid_drawing_warns():
    G = build_graph(power_set("ab"))
    D = GridDrawing({0: (0, 0), 1: (1, 1), 2: (0, 1), 3: (2, 2)})
    with pytest.warns(UserWarning):
        render_svg(D, G)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        render_svg(D, G, SvgOptions(check=False))


def test_prefix_suffix_golden():
    D, G = drawn(prefix_suffix_family("abc"))
    svg = render_svg(D, G, SvgOptions(edge_labels=True, state_labels=True))
    golden = GOLDEN / "prefix_suffix3.svg"
    assert svg == golden.read_text(encoding="utf-8")
    assert render_svg(D, G, SvgOptions(edge_labels=True, state_labels=True)) == svg
