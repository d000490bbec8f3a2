import json
from fractions import Fraction

import pytest

import hhcert

MIDPOINT_VS_MEAN = {
    "interval": {"x": "0", "y": "1"},
    "lhs": {"f_terms": [{"node": "1/2", "weight": "1"}], "F_terms": []},
    "rhs": {"f_terms": [], "F_terms": [{"node": "0", "coef": "-1"}, {"node": "1", "coef": "1"}]},
    "relation": "leq",
}


def test_check_holds():
    cert = hhcert.check(MIDPOINT_VS_MEAN)
    assert cert["verdict"] == "holds"
    assert cert["crossings"] == ["1/2"]
    assert cert["witness"] is None


def test_check_accepts_json_text():
    assert hhcert.check(json.dumps(MIDPOINT_VS_MEAN))["verdict"] == "holds"


def test_fails_with_witness():
    cert = hhcert.check(hhcert.corpus_spec("ex5-doublestar"))
    assert cert["verdict"] == "fails"
    assert cert["witness"]["t"] == "1/2"
    assert cert["witness"]["violation"] == "1/24"
    assert cert["areas"][:2] == ["1/84", "3/56"]


def test_witness_violation_and_sweep():
    spec = hhcert.corpus_spec("ex5-star")
    assert hhcert.witness_violation(spec, "hinge", Fraction(1, 4)) == Fraction(1, 96)
    assert hhcert.hinge_sweep(spec) == (Fraction(1, 84), Fraction(2, 7))


def test_crossing_profile():
    p = hhcert.crossing_profile(hhcert.corpus_spec("remark3-left"))
    assert p["zero_intervals"][0] == ["0", "1/4"]
    assert p["crossings"] == ["1/2"]


def test_canonical_spec():
    spec = json.loads(json.dumps(MIDPOINT_VS_MEAN))
    spec["lhs"]["f_terms"][0]["node"] = "2/4"
    assert hhcert.canonical_spec(spec) == MIDPOINT_VS_MEAN


def test_regression_suite():
    suite = hhcert.regression_suite()
    assert suite["all_expected"]
    assert len(suite["errata"]) == 4
    assert set(hhcert.corpus_ids()) == {row["id"] for row in suite["rows"]}


def test_scan_single_cell():
    csv = hhcert.scan_csv((1, 1), (Fraction(1, 4), Fraction(1, 4)), 1)
    assert csv.splitlines()[1] == "1,1/4,4,holds,true,,,true,,"


def test_classify_four_point():
    c = hhcert.classify_four_point(["-3/2", "1", "-1", "3/2"], "3/4", "1/4")
    assert c["primary"] == "iv"
    assert all(link["verdict"] == "holds" for claim in c["applicable"] for link in claim["chain"])


def test_errors_become_value_errors():
    bad = dict(MIDPOINT_VS_MEAN, lhs={"f_terms": [{"node": "x", "weight": "1"}], "F_terms": []})
    with pytest.raises(ValueError, match=r"lhs\.f_terms\[0\]\.node"):
        hhcert.check(bad)
    with pytest.raises(KeyError):
        hhcert.corpus_spec("missing")
