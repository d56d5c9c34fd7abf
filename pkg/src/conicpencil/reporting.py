"""Text and JSON renderings of pencil reports.

JSON layout (``schema`` 1)::

    {"schema": 1, "kind": "homogeneous" | "bivariate",
     "verdict": ..., "reasons": [...],
     "common_line": "x"?, "concurrency_point": [[re, im] x 3]?,
     "directions": [{"alpha": [re, im], "beta": [re, im], "factors": [str, str]}],
     "det_cubic": [[re, im] x 4], "generator_scales": [sp, sq]}

Bivariate reports add ``line_geometry``, ``b_prime_forms``, ``c_prime_forms``
and ``homogeneous_reasons``; their line strings are affine (z set to 1).
"""

from __future__ import annotations

import json

from .algebra import BinaryCubic, Direction, LinearForm3, Point3
from .expression import format_linear, format_scalar, format_split, parse_linear_form
from .factorizer import SplitPair
from .pencil import (
    BivariateReason,
    BivariateReport,
    FactorizableDirection,
    LineGeometry,
    PencilReport,
    Reason,
    Verdict,
)

SCHEMA_VERSION = 1


def complex_pair(c: complex) -> list[float]:
    c = complex(c)
    return [c.real + 0.0, c.imag + 0.0]


def pair_complex(v) -> complex:
    return complex(v[0], v[1])


def _line_text(line: LinearForm3, affine: bool) -> str:
    return format_linear(line.dehomogenize() if affine else line)


def _direction_entry(fd: FactorizableDirection, affine: bool) -> dict:
    d = fd.direction
    return {
        "alpha": complex_pair(d.alpha),
        "beta": complex_pair(d.beta),
        "factors": [_line_text(l, affine) for l in fd.factors.lines()],
    }


def report_to_dict(report: PencilReport | BivariateReport) -> dict:
    affine = isinstance(report, BivariateReport)
    h = report.homogeneous if affine else report
    out = {
        "schema": SCHEMA_VERSION,
        "kind": "bivariate" if affine else "homogeneous",
        "verdict": report.verdict.value,
        "reasons": [r.value for r in report.reasons],
    }
    if report.common_line is not None:
        out["common_line"] = format_linear(report.common_line)
    if h.concurrency_point is not None:
        out["concurrency_point"] = [complex_pair(c) for c in h.concurrency_point.coordinates]
    out["directions"] = [_direction_entry(fd, affine) for fd in h.directions]
    out["det_cubic"] = [complex_pair(c) for c in h.det_cubic.coefficients]
    out["generator_scales"] = [h.det_cubic.p_scale, h.det_cubic.q_scale]
    if affine:
        out["homogeneous_reasons"] = [r.value for r in h.reasons]
        out["line_geometry"] = report.line_geometry.value if report.line_geometry else None
        for key in ("b_prime_forms", "c_prime_forms"):
            forms = getattr(report, key)
            if forms is not None:
                out[key] = [format_linear(f) for f in forms]
    return out


def _text_lines(report: PencilReport | BivariateReport) -> list[str]:
    affine = isinstance(report, BivariateReport)
    h = report.homogeneous if affine else report
    lines = [f"verdict: {report.verdict.value}"]
    if report.reasons:
        lines.append("reasons: " + ", ".join(r.value for r in report.reasons))
    if affine and report.line_geometry is not None:
        lines.append(f"line geometry: {report.line_geometry.value}")
    if report.common_line is not None:
        lines.append(f"common line: {format_linear(report.common_line)}")
    if h.concurrency_point is not None:
        pt = " : ".join(format_scalar(c) for c in h.concurrency_point.coordinates)
        lines.append(f"concurrency point: ({pt})")
    if affine:
        for label, forms in (("b' forms", report.b_prime_forms), ("c' forms", report.c_prime_forms)):
            if forms is not None:
                lines.append(f"{label}: s = {format_linear(forms[0])}, t = {format_linear(forms[1])}")
    if h.directions:
        lines.append(f"factorizable directions: {len(h.directions)}")
        for fd in h.directions:
            d = fd.direction
            l1, l2 = fd.factors.lines()
            if affine:
                l1, l2 = l1.dehomogenize(), l2.dehomogenize()
            lines.append(f"  ({format_scalar(d.alpha)} : {format_scalar(d.beta)}) -> {format_split(l1, l2)}")
    cubic = ", ".join(format_scalar(c) for c in h.det_cubic.coefficients)
    lines.append(f"det cubic [a^3, a^2 b, a b^2, b^3]: [{cubic}]")
    return lines


def serialize_report(report: PencilReport | BivariateReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2)
    if fmt == "text":
        return "\n".join(_text_lines(report))
    raise ValueError(f"unknown format {fmt!r}")


def _parse_line(text: str, affine: bool) -> LinearForm3:
    if affine:
        return parse_linear_form(text, affine=True).homogenize()
    return parse_linear_form(text)


def report_from_dict(data: dict) -> PencilReport | BivariateReport:
    """Rebuild a report from :func:`report_to_dict` output.

    Generator factorizations are not part of the schema and come back empty.
    """
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    affine = data["kind"] == "bivariate"
    sp, sq = data.get("generator_scales", [1.0, 1.0])
    cubic = BinaryCubic(*(pair_complex(c) for c in data["det_cubic"]), p_scale=sp, q_scale=sq)
    directions = []
    for entry in data["directions"]:
        l1, l2 = (_parse_line(s, affine) for s in entry["factors"])
        directions.append(FactorizableDirection(
            Direction(pair_complex(entry["alpha"]), pair_complex(entry["beta"])),
            SplitPair(l1, l2)))
    point = None
    if "concurrency_point" in data:
        point = Point3(*(pair_complex(c) for c in data["concurrency_point"]))
    common = data.get("common_line")
    verdict = Verdict(data["verdict"])
    if not affine:
        return PencilReport(verdict, tuple(Reason(r) for r in data["reasons"]), cubic,
                            common_line=_parse_line(common, False) if common else None,
                            concurrency_point=point, directions=tuple(directions))
    homogeneous = PencilReport(
        verdict, tuple(Reason(r) for r in data.get("homogeneous_reasons", [])), cubic,
        common_line=_parse_line(common, True) if common else None,
        concurrency_point=point, directions=tuple(directions))

    def forms(key):
        if key not in data:
            return None
        return tuple(parse_linear_form(s, affine=True) for s in data[key])

    geometry = data.get("line_geometry")
    return BivariateReport(
        verdict, tuple(BivariateReason(r) for r in data["reasons"]), homogeneous,
        line_geometry=LineGeometry(geometry) if geometry else None,
        common_line=parse_linear_form(common, affine=True) if common else None,
        b_prime_forms=forms("b_prime_forms"), c_prime_forms=forms("c_prime_forms"))


def load_report(text: str) -> PencilReport | BivariateReport:
    return report_from_dict(json.loads(text))
