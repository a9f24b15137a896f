"""Tests for verdicts, witnesses and reports."""

import pytest

from sigmaperm.errors import InvariantViolation
from sigmaperm.models.reports import CheckReport, GroupSummary, Report, Witness


def test_false_verdict_needs_witness():
    with pytest.raises(InvariantViolation):
        CheckReport(False)


def test_fails_builds_witness():
    report = CheckReport.fails("chief_factor", index=1, order=60, primes=[2, 3, 5])
    assert not report
    assert report.witness.to_dict() == {
        "kind": "chief_factor",
        "index": 1,
        "order": 60,
        "primes": [2, 3, 5],
    }
    assert report.witness.describe() == "chief_factor (index=1, order=60, primes=[2, 3, 5])"


def test_holds():
    assert CheckReport.holds()
    assert CheckReport.holds().witness is None


def test_witness_without_detail():
    assert Witness("chain").describe() == "chain"


def test_report_to_dict_for_least():
    report = Report(
        command="least nilpotent",
        group=GroupSummary(5, 6, (2, 3)),
        least="2|3",
        millis=4,
    )
    assert report.to_dict() == {
        "schema": 1,
        "command": "least nilpotent",
        "group": {"degree": 5, "order": 6, "primes": [2, 3]},
        "least": "2|3",
        "millis": 4,
    }


def test_report_to_dict_key_order():
    report = Report(
        command="check subnormal",
        group=GroupSummary(3, 6, (2, 3)),
        normal=GroupSummary(3, 1, ()),
        subgroup=GroupSummary(3, 2, (2,)),
        sigma="2|3",
        verdict=False,
        witness=Witness("chain", {"steps": 0}),
    )
    assert list(report.to_dict()) == [
        "schema",
        "command",
        "group",
        "normal",
        "subgroup",
        "sigma",
        "verdict",
        "witness",
        "millis",
    ]
    assert report.to_dict()["witness"] == {"kind": "chain", "steps": 0}
