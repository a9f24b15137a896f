"""Tests for the report renderer."""

import json

from sigmaperm.models.reports import GroupSummary, Report, Witness
from sigmaperm.templates.renderer import ReportRenderer, emit_report


S3 = GroupSummary(3, 6, (2, 3))


def test_least_report_text():
    report = Report(command="least nilpotent", group=S3, least="2,3")
    assert emit_report(report) == "least partition: 2,3\n"


def test_empty_least_partition_placeholder():
    report = Report(command="least soluble", group=GroupSummary(1, 1, ()), least="")
    assert emit_report(report) == "least partition: (empty)\n"


def test_check_report_text():
    report = Report(
        command="check subnormal",
        group=S3,
        normal=GroupSummary(3, 1, ()),
        subgroup=GroupSummary(3, 2, (2,)),
        sigma="2|3",
        verdict=False,
        witness=Witness("chain", {"steps": 0}),
    )
    assert emit_report(report).splitlines() == [
        "check subnormal: false",
        "group: degree 3, order 6, primes 2,3",
        "normal: degree 3, order 1, primes -",
        "subgroup: degree 3, order 2, primes 2",
        "sigma: 2|3",
        "witness: chain (steps=0)",
    ]


def test_true_verdict_has_no_witness_line():
    report = Report(command="check soluble", group=S3, sigma="2,3", verdict=True)
    assert emit_report(report) == (
        "check soluble: true\ngroup: degree 3, order 6, primes 2,3\nsigma: 2,3\n"
    )


def test_json_output():
    report = Report(command="least nilpotent", group=S3, least="2,3", millis=12)
    text = emit_report(report, as_json=True)

    assert text.endswith("\n")
    assert json.loads(text) == report.to_dict()


def test_custom_template(temp_dir):
    template = temp_dir / "short.j2"
    template.write_text("{{ report.command }} {{ report.least | partition_text }}")
    renderer = ReportRenderer(template)

    report = Report(command="least nilpotent", group=S3, least="")
    assert renderer.render(report) == "least nilpotent (empty)"


def test_missing_custom_template_falls_back(temp_dir):
    renderer = ReportRenderer(temp_dir / "absent.j2")
    report = Report(command="least nilpotent", group=S3, least="2|3")
    assert renderer.render(report) == "least partition: 2|3\n"
