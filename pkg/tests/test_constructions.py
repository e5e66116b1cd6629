from __future__ import annotations

import pytest

from ropesweep.arrangement import canonicalize, is_canonical, reflect_horizontal, validate
from ropesweep.constructions import (
    _bottom_visit_reversal,
    _top_visit_reversal,
    lower_bound_family,
    lower_bound_from,
    lower_bound_word,
    verify_lower_bound,
    verify_worst_case,
    worst_case_family,
    WorstCaseInstance,
)
from ropesweep.graph import build_graph
from ropesweep.sweep import primal_dual_sweep


@pytest.mark.parametrize("K", [1, 2])
def test_lower_bound_certificate(K):
    inst = lower_bound_family(K)
    assert inst.n == 4 * K + 3
    assert is_canonical(inst.wd.swaps)
    cert = verify_lower_bound(inst)
    assert cert, cert.violation
    assert cert.values["dist_s_to_source_Fl"] >= 2 * K
    assert cert.values["dist_sink_Fc_to_t"] >= 2 * K + 1
    assert cert.values["top_chain_Fl"] == K + 2


def test_lower_bound_sidecar():
    side = lower_bound_family(1).sidecar()
    assert side["family"] == "lower_bound"
    assert side["red"] == [2, 4, 6] and side["blue"] == [3, 5]
    assert set(side["faces"]) == {"F_l", "F_c", "F_r"}


def test_certificate_rejects_mutant():
    K, n = 1, 7
    word = lower_bound_word(K)
    gap = 2 * K + 2
    good, bad = _top_visit_reversal(gap, n), _bottom_visit_reversal(gap, n)
    i = next(i for i in range(len(word)) if word[i:i + len(good)] == good)
    mutant = word[:i] + bad + word[i + len(good):]
    inst = lower_bound_from(canonicalize(validate(n, mutant)), K)
    cert = verify_lower_bound(inst)
    assert not cert
    assert "shorter than 2K" in cert.violation
    assert primal_dual_sweep(build_graph(inst.wd)).max_rope_length < 7 * K + 4


def test_bad_parameters():
    with pytest.raises(ValueError):
        lower_bound_word(0)
    with pytest.raises(ValueError):
        worst_case_family(2)
    with pytest.raises(ValueError):
        lower_bound_from(lower_bound_family(1).wd, 2)


@pytest.mark.parametrize("n", range(3, 9))
def test_worst_case(n):
    inst = worst_case_family(n)
    cert = verify_worst_case(inst)
    assert cert, cert.violation
    assert cert.values["top_chain"] >= n - 1
    assert primal_dual_sweep(build_graph(inst.wd)).max_rope_length == 2 * n - 2


def test_worst_case_verifier_rejects_reflection():
    wd = canonicalize(reflect_horizontal(worst_case_family(6).wd))
    cert = verify_worst_case(WorstCaseInstance(wd))
    assert not cert
    assert cert.violation.startswith("first-crossing condition")
