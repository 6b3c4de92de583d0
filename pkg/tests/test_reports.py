import csv
import io
import json
from fractions import Fraction

import pytest

from catalan_sums.reports import Record, Report, record_from_check
from catalan_sums.results import DivisibilityVerdict, IdentityCheckResult, classify, render


def _report():
    records = [
        Record("a", (1, 2), "3", "3", True),
        Record("b", (2, (3, 4)), "1/2", "1", False),
        Record("c", (5,), "0", "1", False, informational=True),
    ]
    return Report.from_records("verify", {"suite": "x", "n_max": 2}, records, elapsed_ms=7)


def test_status_ignores_informational_records():
    r = _report()
    assert r.status == "fail" and r.checked == 2
    assert r.failures == [{"id": "b", "tuple": [2, [3, 4]], "lhs": "1/2", "rhs": "1"}]
    assert [e["id"] for e in r.errata] == ["c"]


def test_json_round_trip():
    r = _report()
    r.extra["reading"] = "something"
    back = Report.from_dict(json.loads(r.to_json()))
    assert back == r
    assert json.loads(back.to_json()) == json.loads(r.to_json())


def test_csv_one_row_per_tuple():
    rows = list(csv.reader(io.StringIO(_report().to_csv())))
    assert rows[0] == ["id", "tuple", "lhs", "rhs", "result"]
    assert [row[-1] for row in rows[1:]] == ["pass", "fail", "erratum"]


def test_text_and_bad_format():
    assert _report().to_text().startswith("verify: fail (2 checks, 7 ms)")
    with pytest.raises(ValueError):
        _report().render("xml")


def test_exact_rendering():
    assert render(Fraction(10233, 2)) == "10233/2"
    assert render(Fraction(4, 2)) == "2"
    rec = record_from_check(IdentityCheckResult("t", (1,), Fraction(1, 3), Fraction(2, 6)))
    assert rec.ok and rec.lhs == "1/3"


def test_verdicts():
    v = DivisibilityVerdict(15, 10)
    assert v.quotient == Fraction(3, 2) and v.classification == "half_integer"
    assert v.at_most_half and not v.divides
    assert classify(Fraction(1, 3)) == "other"
