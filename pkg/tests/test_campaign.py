import json

import pytest

from holelab.campaign import (
    PREDICATES,
    emit_report,
    report_as_dict,
    run_campaign,
)
from holelab.errors import HolelabError
from holelab.graph import Graph
from holelab.io import CorpusEntry, parse_corpus

from conftest import CORPUS_LE7, complete_graph, cycle_graph, petersen_graph


def entries_of(*graphs):
    return [CorpusEntry(i, g, "graph6") for i, g in enumerate(graphs)]


def test_unknown_predicate():
    with pytest.raises(HolelabError):
        run_campaign("no_such_thing", [])


def test_clique_parity_clean_on_complete_graphs():
    corpus = entries_of(*(complete_graph(m) for m in range(1, 7)))
    report = run_campaign("clique_parity", corpus)
    assert report.clean
    assert not report.any_budget_exceeded
    assert [v.detail["parity"] for v in report.verdicts] == [
        [1, m] for m in range(1, 7)
    ]


def test_ternary_euler_on_small_corpus():
    corpus = entries_of(
        Graph(4, cycle_graph(4)),  # 4-hole, no ternary cycle
        Graph(6, cycle_graph(6)),  # ternary hole
        complete_graph(3),  # triangle counts as ternary
        Graph(3),
    )
    report = run_campaign("ternary_euler", corpus)
    assert report.clean
    details = {v.entry_id: v.detail for v in report.verdicts}
    assert details[0]["has_ternary_cycle"] is False
    assert details[0]["euler_reduced"] in (-1, 0, 1)
    assert details[1]["has_ternary_cycle"] is True
    assert details[2]["has_ternary_cycle"] is True
    assert details[3]["has_ternary_cycle"] is False


def test_kalai_balance_on_corpus_sample():
    graphs = [e.graph for e in parse_corpus(str(CORPUS_LE7), "graph6")]
    corpus = entries_of(*graphs[:120])
    report = run_campaign("kalai_balance", corpus, {"k": 1})
    assert report.clean


def test_hole_mod_coverage_require():
    corpus = entries_of(petersen_graph())
    ok = run_campaign("hole_mod_coverage", corpus, {"ell": 3, "require": [0, 2]})
    assert ok.clean
    bad = run_campaign("hole_mod_coverage", corpus, {"ell": 3, "require": [1]})
    assert not bad.clean
    assert bad.counterexamples[0].detail["missing"] == [1]


def test_consecutive_holes_require_pair():
    good = run_campaign(
        "consecutive_holes", entries_of(petersen_graph()),
        {"ell": 4, "require_pair": 1},
    )
    assert good.clean
    assert good.verdicts[0].detail["pair_lengths"] == [5]
    bad = run_campaign(
        "consecutive_holes", entries_of(Graph(4, cycle_graph(4))),
        {"ell": 4, "require_pair": 1},
    )
    assert not bad.clean


def test_budget_exhaustion_recorded_not_fatal():
    corpus = entries_of(petersen_graph(), complete_graph(2))
    report = run_campaign("ternary_euler", corpus, budget_nodes=2)
    assert report.any_budget_exceeded
    assert report.clean  # budget entries are not counterexamples
    assert report.verdicts[0].budget_exceeded


def test_report_serialization_is_deterministic(tmp_path):
    corpus = entries_of(petersen_graph(), complete_graph(4))
    a = run_campaign("clique_parity", corpus, seed=5)
    b = run_campaign("clique_parity", corpus, seed=5)
    assert report_as_dict(a) == report_as_dict(b)
    pa, pb = tmp_path / "a.json", tmp_path / "b.json"
    emit_report(a, str(pa))
    emit_report(b, str(pb))
    assert pa.read_bytes() == pb.read_bytes()
    payload = json.loads(pa.read_text())
    assert payload["predicate"] == "clique_parity"
    assert payload["elapsed_seconds"] is None  # timing excluded by default
    emit_report(a, str(pa), include_timing=True)
    assert json.loads(pa.read_text())["elapsed_seconds"] is not None


def test_threaded_run_matches_serial(monkeypatch):
    corpus = entries_of(*(complete_graph(m) for m in range(1, 8)))
    serial = run_campaign("clique_parity", corpus)
    monkeypatch.setenv("HOLELAB_THREADS", "4")
    threaded = run_campaign("clique_parity", corpus)
    assert report_as_dict(serial) == report_as_dict(threaded)


def test_predicates_tuple_matches_registry():
    for p in PREDICATES:
        report = run_campaign(p, [])
        assert report.clean and report.verdicts == ()
