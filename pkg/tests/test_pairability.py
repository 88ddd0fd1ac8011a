import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairpath.blowup import build
from pairpath.graph import (FamilySpec, GraphError, diameter, generate,
                            make_graph)
from pairpath.pairability import (CANNOT_RULE_OUT, CAP_HIT, FEASIBLE,
                                  INCONCLUSIVE, INFEASIBLE, LAYERED_CUT,
                                  LAYER_GROWTH, NOT_PATH_PAIRABLE,
                                  PATH_PAIRABLE, diameter_upper_bound,
                                  enumerate_pairings, find_disjoint_paths,
                                  is_path_pairable, pairing_count, screen)
from pairpath.routing import make_pairing
from pairpath.verify import verify_plan

from helpers import dumbbell, path_graph


# ---------------------------------------------------------------- search


def test_c4_is_not_path_pairable(c4):
    verdict = is_path_pairable(c4)
    assert verdict.status == NOT_PATH_PAIRABLE
    assert verdict.witness is not None
    assert verdict.witness.pairs == ((0, 2), (1, 3))
    assert verdict.stats.pairings_examined >= 1


def test_c4_pairing_feasibility_split(c4):
    good = find_disjoint_paths(c4, make_pairing([(0, 1), (2, 3)]))
    assert good.status == FEASIBLE
    report = verify_plan(c4, make_pairing([(0, 1), (2, 3)]), good.plan)
    assert report.ok

    bad = find_disjoint_paths(c4, make_pairing([(0, 2), (1, 3)]))
    assert bad.status == INFEASIBLE
    assert bad.plan is None

    other = find_disjoint_paths(c4, make_pairing([(0, 3), (1, 2)]))
    assert other.status == FEASIBLE


def test_q3_is_path_pairable(q3):
    verdict = is_path_pairable(q3)
    assert verdict.status == PATH_PAIRABLE
    assert verdict.witness is None
    assert verdict.stats.pairings_examined == 105


def test_q3_antipodal_pairing_has_disjoint_paths(q3):
    # hardest case: every pair at distance 3
    pairing = make_pairing([(v, v ^ 7) for v in range(4)])
    result = find_disjoint_paths(q3, pairing)
    assert result.status == FEASIBLE
    report = verify_plan(q3, pairing, result.plan)
    assert report.ok
    assert all(len(r) == 3 for r in result.plan.routes)


def test_small_complete_family_verdicts():
    assert is_path_pairable(generate(FamilySpec("complete-bipartite", (3, 3)))).status \
        == PATH_PAIRABLE
    assert is_path_pairable(generate(FamilySpec("complete-bipartite", (1, 3)))).status \
        == PATH_PAIRABLE
    assert is_path_pairable(generate(FamilySpec("complete-bipartite", (2, 2)))).status \
        == NOT_PATH_PAIRABLE


def test_small_grid_verdict():
    verdict = is_path_pairable(generate(FamilySpec("grid2", (2, 3))))
    assert verdict.status == PATH_PAIRABLE
    assert verdict.stats.pairings_examined == 15


def test_enumeration_is_canonical_and_counted():
    pairings = list(enumerate_pairings(list(range(6))))
    assert len(pairings) == 15 == pairing_count(6)
    assert pairings[0] == ((0, 1), (2, 3), (4, 5))
    # smallest unpaired item always leads, partners ascend lexicographically
    assert pairings == sorted(pairings)
    assert pairing_count(8) == 105
    assert pairing_count(10) == 945
    assert pairing_count(12) == 10395


def test_decision_input_guards():
    with pytest.raises(ValueError, match="even"):
        is_path_pairable(path_graph(3))
    with pytest.raises(ValueError, match="12"):
        is_path_pairable(generate(FamilySpec("cycle", (14,))))


def test_tiny_budget_reports_inconclusive(petersen):
    verdict = is_path_pairable(petersen, budget=50)
    assert verdict.status == INCONCLUSIVE
    assert verdict.witness is None
    result = find_disjoint_paths(
        petersen, make_pairing([(0, 7), (1, 8), (2, 9), (3, 5), (4, 6)]),
        budget=3)
    assert result.status == CAP_HIT


def test_worker_count_does_not_change_verdict(c4, petersen):
    lone = is_path_pairable(c4, workers=1)
    multi = is_path_pairable(c4, workers=2)
    assert (lone.status, lone.witness) == (multi.status, multi.witness)

    lone = is_path_pairable(petersen, workers=1)
    multi = is_path_pairable(petersen, workers=2)
    assert lone.status == multi.status == PATH_PAIRABLE


def test_verdict_json_round_trips(c4):
    import json
    doc = json.loads(is_path_pairable(c4).to_json())
    assert doc["status"] == NOT_PATH_PAIRABLE
    assert doc["witness"] == [[0, 2], [1, 3]]
    assert doc["pairings_examined"] >= 1
    assert doc["nodes_expanded"] >= 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.data())
def test_adding_an_edge_preserves_feasible_pairings(extra, data):
    # routing never gets harder in a supergraph
    base = generate(FamilySpec("cycle", (6,)))
    pairs = data.draw(st.sampled_from(list(enumerate_pairings(range(6)))))
    pairing = make_pairing(list(pairs))
    before = find_disjoint_paths(base, pairing)
    if before.status != FEASIBLE:
        return
    candidates = [(u, v) for u in range(6) for v in range(u + 1, 6)
                  if not base.has_edge(u, v)]
    chosen = candidates[:extra]
    bigger = make_graph(6, list(base.edges) + chosen)
    assert find_disjoint_paths(bigger, pairing).status == FEASIBLE


# ---------------------------------------------------------------- screen


def test_screen_rejects_long_path():
    report = screen(path_graph(20))
    assert report.verdict == NOT_PATH_PAIRABLE
    assert len(report.roots_checked) >= 1
    cuts = [v for v in report.violations if v.condition == LAYERED_CUT]
    assert cuts, report.violations
    by_index = {v.index: v for v in cuts}
    assert by_index[4].value == 1
    assert by_index[4].required == 5


def test_screen_rejects_dumbbell_on_cut():
    report = screen(dumbbell(10))
    assert report.verdict == NOT_PATH_PAIRABLE
    assert any(v.condition == LAYERED_CUT for v in report.violations)


def test_screen_rejects_dumbbell_on_layer_growth():
    # longer bar: ball at radius 7 holds 11 <= 24/2 vertices but layers
    # 6 and 7 contribute only 1 + 1
    report = screen(dumbbell(14))
    assert report.verdict == NOT_PATH_PAIRABLE
    growth = [v for v in report.violations if v.condition == LAYER_GROWTH]
    assert growth, report.violations
    assert growth[0].index == 3
    assert growth[0].value == 2
    assert growth[0].required == 3
    assert growth[0].ball == 11


def test_screen_cannot_rule_out_known_pairable(q3, petersen):
    star = generate(FamilySpec("complete-bipartite", (1, 9)))
    for g, diametral in ((q3, 8), (petersen, 10), (star, 9)):
        report = screen(g)
        assert report.verdict == CANNOT_RULE_OUT
        assert report.violations == ()
        assert len(report.roots_checked) == diametral


def test_screen_cannot_rule_out_blown_cycles():
    for m in (2, 3):
        b = build(m)
        report = screen(b.graph)
        assert report.verdict == CANNOT_RULE_OUT
        assert report.diameter == m


def test_screen_stops_at_first_bad_root():
    report = screen(path_graph(20))
    roots = {v.root for v in report.violations}
    # endpoints are the diametral roots; root 0 is checked first and the
    # scan stops there, reporting all of that root's violations
    assert roots == {0}
    assert report.roots_checked == (0,)
    assert len(report.violations) > 1


def test_screen_agrees_with_decided_fixtures(q3):
    # the screen must never reject a graph the exact decision accepts
    for g in (q3, generate(FamilySpec("complete-bipartite", (3, 3))),
              generate(FamilySpec("grid2", (2, 3)))):
        assert is_path_pairable(g).status == PATH_PAIRABLE
        assert screen(g).verdict == CANNOT_RULE_OUT


def test_screen_input_guards():
    with pytest.raises(GraphError, match="even"):
        screen(path_graph(5))
    with pytest.raises(GraphError, match="connected"):
        screen(make_graph(4, [(0, 1), (2, 3)]))


def test_screen_report_json(q3):
    import json
    doc = json.loads(screen(q3).to_json())
    assert doc["verdict"] == CANNOT_RULE_OUT
    assert doc["diameter"] == 3
    assert doc["violations"] == []


def test_diameter_bound_scaling():
    for n in (100, 1000, 10000):
        assert diameter_upper_bound(n) == pytest.approx(
            6.0 * math.sqrt(2.0) * math.sqrt(n))
    # small diameters are never checked against the asymptotic bound
    report = screen(path_graph(18))
    assert all(v.condition != "diameter-bound" for v in report.violations)


def test_blown_cycle_diameter_under_bound():
    for m in (2, 5, 9):
        b = build(m)
        assert diameter(b.graph) == m <= diameter_upper_bound(b.n)
