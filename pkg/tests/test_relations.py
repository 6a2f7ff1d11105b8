import json

from skewgt import gln, relations
from skewgt.skew import SkewElement


def test_verify_identity_pass_and_fail(ctx3):
    X11 = gln.gen_Xkk(ctx3, 1)
    X22 = gln.gen_Xkk(ctx3, 2)
    ok = relations.verify_identity("same", "an element equals itself", X11, X11)
    assert ok.ok and ok.witness is None
    bad = relations.verify_identity("diff", "distinct diagonals differ", X11, X22)
    assert not bad.ok
    assert bad.witness == X11 - X22


def test_suite_gl2_passes():
    rep = relations.suite_gl2()
    assert rep.ok
    assert len(rep.results) >= 20


def test_suite_gl2_at_larger_context():
    rep = relations.suite_gl2(3)
    assert rep.ok


def test_suite_gl3_passes():
    rep = relations.suite_gl3()
    assert rep.ok
    keys = {r.key for r in rep.results}
    # every family is represented, both signs where applicable
    for probe in ("i:central:V3:A21+", "iii:weight:V2:A22-",
                  "iv:opposite:A21+:A22-", "v:opposite:A11-:A22+",
                  "vi:ladder:A11", "vii:ladder:row2",
                  "viii:serre:A11-:A21-", "ix:braid:V2:-",
                  "ladder-defect:X2+", "cross:e13-e31"):
        assert probe in keys


def test_suite_invariants_passes():
    rep = relations.suite_invariants()
    assert rep.ok


def test_suite_localized_passes():
    rep = relations.suite_localized()
    assert rep.ok


def test_suites_are_deterministic():
    a = relations.suite_localized().to_json()
    b = relations.suite_localized().to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_report_json_schema():
    rep = relations.suite_localized()
    body = rep.to_json()
    assert body["suite"] == "localized"
    for entry in body["results"]:
        assert set(entry) >= {"id", "status", "anchor"}
        assert entry["status"] == "pass"
    X11 = gln.gen_Xkk(gln.triangle(3), 1)
    failing = relations.VerificationReport("demo")
    failing.add(relations.verify_identity("k", "a", X11, SkewElement.zero(X11.ctx)))
    entry = failing.to_json()["results"][0]
    assert entry["status"] == "fail" and "witness" in entry


def test_run_suites_dispatch():
    reports = relations.run_suites(["gl2", "localized"], None)
    assert [r.suite for r in reports] == ["gl2", "localized"]
    assert all(r.ok for r in reports)
