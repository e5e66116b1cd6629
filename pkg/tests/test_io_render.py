from __future__ import annotations

import re

import pytest

from ropesweep.arrangement import validate
from ropesweep.constructions import lower_bound_family, worst_case_family
from ropesweep.errors import ParseError
from ropesweep.experiments import run_row
from ropesweep.graph import build_graph
from ropesweep.io import format_arrangement, parse_arrangement, parse_inline, records_to_csv
from ropesweep.render import render_svg
from ropesweep.report import plot_histograms
from ropesweep.sweep import primal_dual_sweep


def test_round_trip_is_canonical():
    text = format_arrangement(validate(4, [3, 1, 2, 1, 3, 2]), ["example"])
    assert text == "# example\n4\n1 3 2 1 3 2\n"
    assert parse_arrangement(text).swaps == (1, 3, 2, 1, 3, 2)


def test_parse_inline():
    assert parse_inline("3:1,2,1").swaps == (1, 2, 1)
    assert parse_inline("2:1").n == 2
    with pytest.raises(ParseError):
        parse_inline("3 1 2 1")


@pytest.mark.parametrize(
    "text,line",
    [
        ("# c\nthree\n1 2 1\n", 2),
        ("3\n1 x 1\n", 2),
        ("3\n\n# skip\n1 1 2\n", 4),
        ("3\n1 2 1\n5\n", 3),
        ("3\n", 1),
    ],
)
def test_parse_errors_carry_lines(text, line):
    with pytest.raises(ParseError) as exc:
        parse_arrangement(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_csv():
    text = records_to_csv([{"a": 1, "b": [1, 2]}], ["a", "b"])
    assert text == "a,b\n1,1 2\n"


def test_render_two_lines():
    svg = render_svg(build_graph(validate(2, [1])))
    assert svg.count('class="wire"') == 2
    assert svg == render_svg(build_graph(validate(2, [1])))
    for pts in re.findall(r'points="([^"]*)"', svg):  # integer grid
        assert re.fullmatch(r"[\d, ]+", pts)


def test_render_worst_case_rope():
    inst = worst_case_family(7)
    g = build_graph(inst.wd)
    tr = primal_dual_sweep(g)
    step = next(i for i, m in enumerate(tr.moves, 1) if m.kind == "face" and m.id == inst.face)
    rope = [r for k, _, r, _ in tr.states(g) if k == step][0]
    svg = render_svg(g, rope=rope)
    assert svg.count('class="rope-edge"') == 12


def test_render_highlights_faces():
    inst = lower_bound_family(1)
    svg = render_svg(build_graph(inst.wd), faces=inst.sidecar()["faces"])
    assert svg.count('class="face"') == 3
    for name in ("F_l", "F_c", "F_r"):
        assert f'data-name="{name}"' in svg


def test_report_is_deterministic(tmp_path):
    rows = [run_row(n) for n in range(3, 6)]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    plot_histograms(rows, a)
    plot_histograms(rows, b)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().startswith(b"<?xml")
