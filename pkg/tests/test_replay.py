import copy
import json

import pytest

from hilbcert.checker import check_certificate
from hilbcert.gorenstein import GorensteinConstraints, ci_hvector, enumerate_candidate_hvectors
from hilbcert.replay import ProofCertificate, StepKind, replay_d5, replay_plane_case

QUINTIC_CASES = {
    ((1, 1, 4, 4), (1, 2, 3, 4, 3, 2, 1), 16),
    ((1, 2, 3, 4), (1, 3, 5, 6, 5, 3, 1), 24),
}
STEP_ORDER = ["1", "2a", "2b", "3a", "3b", "4", "5", "6a", "6b", "7a", "7b", "8", "9", "10"]
AXIOMS = {"2a", "3b", "6a", "7a", "8"}


@pytest.fixture(scope="module")
def cert():
    return replay_d5()


def read_records_plain(text):
    # certificate records carry no envelope
    return [json.loads(line) for line in text.splitlines()]


def survivors(c):
    return {(s.multidegree.degrees, s.hvector.values, s.min_nodes) for s in c.surviving_cases}


def test_survivors(cert):
    assert survivors(cert) == QUINTIC_CASES


def test_step_layout(cert):
    assert [s.id for s in cert.steps] == STEP_ORDER
    assert {s.id for s in cert.steps if s.kind is StepKind.AXIOM} == AXIOMS
    assert cert.axiom_count() == 5
    for s in cert.steps:
        if s.kind is StepKind.AXIOM:
            assert s.citation is not None and s.citation.statement
            assert not s.verified
        else:
            assert s.verified


def test_every_candidate_eliminated_once(cert):
    cands = [h.values for h in enumerate_candidate_hvectors(GorensteinConstraints(6, 4, 24))]
    elim = cert.eliminated_by()
    assert all(len(v) == 1 for v in elim.values())
    kept = {s.hvector.values for s in cert.surviving_cases}
    assert set(elim) | kept == set(cands)
    assert not set(elim) & kept
    assert elim[(1, 1, 1, 1, 1, 1, 1)] == ["2b"]
    assert elim[(1, 4, 4, 4, 4, 4, 1)] == ["3b"]
    assert elim[(1, 3, 4, 5, 4, 3, 1)] == ["9"]


def test_big_total_steps(cert):
    s4 = cert.step("4")
    assert s4.data["terms"] == [2, 4, 5, 5, 5, 4] and s4.data["sum"] == 25 > 24
    s5 = cert.step("5")
    assert s5.data["sum"] == 26 > 24


def test_lemdi_scans(cert):
    s2b = cert.step("2b")
    assert s2b.data["survivors"] == [] and s2b.data["required_last"] == 7
    row = next(r for r in s2b.data["rows"] if r["multidegree"] == [1, 1, 1, 7])
    assert row["sum_ok"] and not row["within_caps"]
    assert cert.step("6b").data["survivors"] == [[1, 1, 4, 4]]
    assert cert.step("7b").data["survivors"] == [[1, 2, 3, 4], [1, 2, 4, 4]]


def test_green_token(cert):
    d = cert.step("3a").data
    assert (d["c"], d["degree"], d["next"], d["length"]) == (4, 4, 4, 4)
    assert d["base_point_free_next"] is False


def test_deterministic():
    assert replay_d5().dumps() == replay_d5().dumps()
    assert replay_plane_case().dumps() == replay_plane_case().dumps()


def test_record_roundtrip(cert):
    text = cert.dumps()
    again = ProofCertificate.from_records(read_records_plain(text))
    assert again.dumps() == text



def test_checker_accepts(cert):
    rep = check_certificate(cert.to_records())
    assert rep.ok, rep.failures
    assert sorted(rep.checked) == sorted(set(STEP_ORDER) - AXIOMS)


def _tampered(cert, edit):
    recs = copy.deepcopy(cert.to_records())
    edit(recs)
    return check_certificate(recs)


def _step(recs, sid):
    return next(r for r in recs if r["record"] == "step" and r["id"] == sid)


@pytest.mark.parametrize(
    "edit",
    [
        lambda r: _step(r, "4")["data"].update(sum=24),
        lambda r: _step(r, "1")["data"]["candidates"].pop(),
        lambda r: _step(r, "6b")["data"].update(survivors=[[1, 1, 3, 5]]),
        lambda r: _step(r, "3a")["data"].update(c=5),
        lambda r: _step(r, "9")["data"]["cases"][0].update(ci_hvector=[1, 2, 3, 3, 3, 2, 1]),
        lambda r: _step(r, "10")["data"]["cases"][0].update(total=15),
        lambda r: _step(r, "2b")["eliminates"].append([1, 2, 2, 2, 2, 2, 1]),
        lambda r: _step(r, "8").update(citation=None),
        lambda r: [x for x in r if x["record"] == "survivor"][0].update(min_nodes=17),
    ],
)
def test_checker_rejects_tampering(cert, edit):
    assert not _tampered(cert, edit).ok


class TestPlaneCase:
    def test_steps(self):
        c = replay_plane_case()
        assert [s.kind for s in c.steps] == [
            StepKind.AXIOM,
            StepKind.ARITHMETIC,
            StepKind.ARITHMETIC,
            StepKind.AXIOM,
        ]
        assert c.step("p2").data["value"] == 20
        s = c.step("p3").data
        assert s["terms"] == [20, 3, 2, 1] and s["sum"] == 26 > s["bound"] == 24

    def test_tail_read_off_ci(self):
        c = replay_plane_case()
        assert c.step("p3").data["tail"] == list(ci_hvector((1, 1, 4, 4), 4).values[4:7])

    def test_checker(self):
        rep = check_certificate(replay_plane_case().to_records())
        assert rep.ok and rep.checked == ["p2", "p3"]
