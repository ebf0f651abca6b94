"""Command-line front end: normalize, commutator, grade, polygon, analyze,
oracle.

Human-readable text by default; --json emits the versioned report schema
(see SCHEMA_VERSION and the README for the field layout).  Exit codes:
0 on success, 1 for parse or usage errors, 2 for internal invariant
breaches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .element import WeylElement, WeylInternalError, commutator, format_element
from .grading import grade_components, grade_span, to_h_form
from .parser import ExprSyntaxError, element_from_string
from .polygon import PolygonProfile, edges
from .polynomials import BiPoly, UniPoly
from .power_analysis import power_index
from .solvability import (
    DEFAULT_BOX_BOUND,
    DEFAULT_BOX_CAP,
    Verdict,
    analyze,
    find_witness_box,
)

SCHEMA_VERSION = "weyl-report/1"

BOX_CAP_ENV = "WEYL_BOX_CAP"


def _box_cap() -> int:
    raw = os.environ.get(BOX_CAP_ENV)
    if raw is None:
        return DEFAULT_BOX_CAP
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{BOX_CAP_ENV} must be an integer, got {raw!r}")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def scalar_to_json(c: Fraction) -> dict:
    # decimal strings keep arbitrary-precision values lossless in JSON
    return {"num": str(c.numerator), "den": str(c.denominator)}


def scalar_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def unipoly_to_json(f: UniPoly) -> list[dict]:
    return [scalar_to_json(c) for c in f.coeffs()]


def bipoly_to_json(f: BiPoly) -> list[dict]:
    return [
        {"i": i, "j": j, "coeff": scalar_to_json(f.coeff(i, j))}
        for (i, j) in sorted(f.support())
    ]


def _polygon_to_json(x: WeylElement, profile: PolygonProfile) -> dict:
    edge_items = []
    for e in profile.edges:
        edge_items.append(
            {
                "weight": [e.weight.rho, e.weight.sigma],
                "degree": e.degree,
                "support": [list(pt) for pt in sorted(e.support)],
                "polynomial": bipoly_to_json(e.polynomial),
                "power_index": power_index(e.polynomial, e.weight) if e.weight.is_axis() else None,
            }
        )
    vertex_items = [
        {
            "point": list(v.point),
            "separating_weight": [v.separating_weight.rho, v.separating_weight.sigma],
        }
        for v in profile.vertices
    ]
    return {"edges": edge_items, "vertices": vertex_items}


def _verdict_to_json(verdict: Verdict) -> dict:
    return {
        "outcome": verdict.outcome.value,
        "witness": format_element(verdict.witness) if verdict.witness is not None else None,
        "reasons": [
            {"rule": cit.rule.value, "params": cit.params, "citation": cit.citation}
            for cit in verdict.reasons
        ],
        "attempted": [rule.value for rule in verdict.attempted],
        "box_bound": verdict.box_bound,
        "notes": list(verdict.notes),
    }


@dataclass
class AnalysisReport:
    """Losslessly JSON-serializable summary of a full analysis run."""

    input: str
    normal_form: str
    grade_span: dict | None
    h_form: list[dict]
    polygon: dict | None
    verdict: dict
    box_bound: int
    schema: str = SCHEMA_VERSION
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema": self.schema,
            "input": self.input,
            "normal_form": self.normal_form,
            "grade_span": self.grade_span,
            "h_form": self.h_form,
            "polygon": self.polygon,
            "verdict": self.verdict,
            "box_bound": self.box_bound,
            "notes": self.notes,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "AnalysisReport":
        return cls(
            input=data["input"],
            normal_form=data["normal_form"],
            grade_span=data["grade_span"],
            h_form=data["h_form"],
            polygon=data["polygon"],
            verdict=data["verdict"],
            box_bound=data["box_bound"],
            schema=data["schema"],
            notes=data["notes"],
        )


def build_report(text: str, x: WeylElement, box: int, cap: int) -> AnalysisReport:
    verdict = analyze(x, box=box, cap=cap)
    if x.is_zero():
        span_json = None
        h_json: list[dict] = []
        polygon_json = None
    else:
        span = grade_span(x)
        span_json = {"min": span.min_grade, "max": span.max_grade}
        hf = to_h_form(x)
        h_json = [{"grade": s, "coeffs": unipoly_to_json(hf.parts[s])} for s in hf.grades()]
        polygon_json = _polygon_to_json(x, edges(x))
    return AnalysisReport(
        input=text,
        normal_form=format_element(x),
        grade_span=span_json,
        h_form=h_json,
        polygon=polygon_json,
        verdict=_verdict_to_json(verdict),
        box_bound=box,
        notes=list(verdict.notes),
    )


def lattice_sketch(x: WeylElement, profile: PolygonProfile | None = None) -> str:
    """ASCII picture of the support lattice: '*' support points, 'E' points
    on an edge, 'V' joining vertices.  Presentation only."""
    pts = x.support()
    if not pts:
        return "(empty support)"
    if profile is None:
        profile = edges(x)
    edge_points = set().union(*(e.support for e in profile.edges)) if profile.edges else set()
    vertex_points = {v.point for v in profile.vertices}
    imax = max(i for i, _ in pts)
    jmax = max(j for _, j in pts)
    rows = []
    for j in range(jmax, -1, -1):
        cells = []
        for i in range(imax + 1):
            pt = (i, j)
            if pt in vertex_points:
                cells.append("V")
            elif pt in edge_points:
                cells.append("E")
            elif pt in pts:
                cells.append("*")
            else:
                cells.append(".")
        rows.append(f"q^{j:<2} | " + " ".join(cells))
    rows.append("      " + "--" * (imax + 1))
    rows.append("       " + " ".join(f"{i}" if i < 10 else "+" for i in range(imax + 1)))
    rows.append("       (p exponent along the bottom; V vertex, E edge point, * support)")
    return "\n".join(rows)


def _emit(payload, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_normalize(args, cap: int) -> int:
    x = element_from_string(args.expr)
    _emit(
        {"input": args.expr, "normal_form": format_element(x)},
        args.json,
        [format_element(x)],
    )
    return 0


def _cmd_commutator(args, cap: int) -> int:
    x = element_from_string(args.left)
    y = element_from_string(args.right)
    result = commutator(x, y)
    _emit(
        {"left": args.left, "right": args.right, "commutator": format_element(result)},
        args.json,
        [format_element(result)],
    )
    return 0


def _cmd_grade(args, cap: int) -> int:
    x = element_from_string(args.expr)
    if x.is_zero():
        raise _UsageError("the zero element has no grading data")
    span = grade_span(x)
    comps = grade_components(x)
    hf = to_h_form(x)
    payload = {
        "input": args.expr,
        "normal_form": format_element(x),
        "grade_span": {"min": span.min_grade, "max": span.max_grade},
        "components": {str(s): format_element(c) for s, c in comps.items()},
        "h_form": [{"grade": s, "coeffs": unipoly_to_json(hf.parts[s])} for s in hf.grades()],
    }
    lines = [
        f"normal form : {format_element(x)}",
        f"grade span  : [{span.min_grade}, {span.max_grade}]",
        "components  :",
    ]
    for s, c in comps.items():
        lines.append(f"  grade {s:+d}: {format_element(c)}")
    lines.append("h-form      :")
    for s in hf.grades():
        f = hf.parts[s]
        if s > 0:
            tail = f"q^{s}" if s > 1 else "q"
            lines.append(f"  grade {s:+d}: ({f}) * {tail}   [X stands for h]")
        elif s < 0:
            tail = f"p^{-s}" if s < -1 else "p"
            lines.append(f"  grade {s:+d}: ({f}) * {tail}   [X stands for h]")
        else:
            lines.append(f"  grade +0: {f}   [X stands for h]")
    _emit(payload, args.json, lines)
    return 0


def _cmd_polygon(args, cap: int) -> int:
    x = element_from_string(args.expr)
    if x.is_zero():
        raise _UsageError("the zero element has no support polygon")
    profile = edges(x)
    payload = {
        "input": args.expr,
        "normal_form": format_element(x),
        "polygon": _polygon_to_json(x, profile),
        "support": [list(pt) for pt in sorted(x.support())],
    }
    lines = [f"normal form : {format_element(x)}"]
    if profile.edges:
        lines.append("edges:")
        for e in profile.edges:
            pidx = power_index(e.polynomial, e.weight) if e.weight.is_axis() else None
            pidx_txt = str(pidx) if pidx is not None else "n/a (non-axis weight)"
            lines.append(
                f"  weight {e.weight}: degree {e.degree}, "
                f"support {sorted(e.support)}, polynomial {e.polynomial}, "
                f"power index {pidx_txt}"
            )
    else:
        lines.append("edges: none")
    if profile.vertices:
        lines.append("joining vertices:")
        for v in profile.vertices:
            lines.append(f"  point {v.point} with separating weight {v.separating_weight}")
    lines.append("")
    lines.append(lattice_sketch(x, profile))
    _emit(payload, args.json, lines)
    return 0


def _cmd_analyze(args, cap: int) -> int:
    x = element_from_string(args.expr)
    report = build_report(args.expr, x, box=args.box, cap=cap)
    verdict = report.verdict
    lines = [
        f"normal form : {report.normal_form}",
        f"verdict     : {verdict['outcome']}",
    ]
    if verdict["witness"] is not None:
        lines.append(f"witness     : {verdict['witness']}")
    for reason in verdict["reasons"]:
        lines.append(f"rule        : {reason['rule']}  {reason['params']}")
        lines.append(f"              {reason['citation']}")
    if verdict["outcome"] == "unknown":
        lines.append(f"attempted   : {', '.join(verdict['attempted'])}")
        lines.append(f"box bound   : {verdict['box_bound']}")
    for note in report.notes:
        lines.append(f"note        : {note}")
    _emit(report.to_json_dict(), args.json, lines)
    return 0


def _cmd_oracle(args, cap: int) -> int:
    x = element_from_string(args.expr)
    if x.is_zero():
        raise _UsageError("the zero element admits no witness")
    y = find_witness_box(x, args.box, cap=cap)
    payload = {
        "input": args.expr,
        "box": args.box,
        "witness": format_element(y) if y is not None else None,
    }
    if y is not None:
        lines = [f"witness within box {args.box}: {format_element(y)}"]
    else:
        lines = [f"no witness with exponents at most {args.box}"]
    _emit(payload, args.json, lines)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="weyl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("normalize", help="normal form of an expression")
    sp.add_argument("expr")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_normalize)

    sp = sub.add_parser("commutator", help="[left, right]")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_commutator)

    sp = sub.add_parser("grade", help="graded components, span and h-form")
    sp.add_argument("expr")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_grade)

    sp = sub.add_parser("polygon", help="edges, vertices and lattice sketch")
    sp.add_argument("expr")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_polygon)

    sp = sub.add_parser("analyze", help="run the solvability decision ladder")
    sp.add_argument("expr")
    sp.add_argument("--box", type=int, default=DEFAULT_BOX_BOUND)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("oracle", help="witness search in an exponent box")
    sp.add_argument("expr")
    sp.add_argument("--box", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cap = _box_cap()
        return args.func(args, cap)
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WeylInternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
