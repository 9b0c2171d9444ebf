"""
Text views of reports: JSON, aligned tables and CSV.

JSON is the canonical form; tables and CSV are derived from the same models.
"""

import csv
import io
import json
import logging
from typing import Any, Iterable, List, Sequence, Union

from jinja2 import Environment, StrictUndefined

from ..constructions.size_functions import f_value, g_value, turan_edges
from ..core.config import OutputFormat
from .schemas import (
    AnalysisReport,
    BaseSchema,
    ClawReport,
    ExtremalReport,
    GraphAnalysis,
    LineProfile,
    PropertyReport,
    SuiteReport,
    ValidationReport,
)

logger = logging.getLogger(__name__)

_env = Environment(
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)
_env.filters["ljust"] = lambda value, width: str(value).ljust(width)
_env.filters["rjust"] = lambda value, width: str(value).rjust(width)

TABLE_TEMPLATE = _env.from_string(
    """{% for row in rows %}
{% for cell in row %}{{ cell | ljust(widths[loop.index0]) if loop.index0 == 0 else cell | rjust(widths[loop.index0]) }}{{ "  " if not loop.last else "" }}{% endfor %}

{% endfor %}
"""
)

EXTREMAL_TEMPLATE = _env.from_string(
    """campaign        {{ r.campaign }}{% if r.matroid_class %} ({{ r.matroid_class }}){% endif %}

params          {% for k, v in r.params.items() %}{{ k }}={{ v }}{{ " " if not loop.last else "" }}{% endfor %}

threshold       {{ r.threshold }} = {{ r.threshold_label }}
observed min    {{ r.observed_min if r.observed_min is not none else "-" }}
scanned         {{ r.counts_scanned }}
verdict         {{ r.verdict }}{% if not r.complete %} (incomplete){% endif %}

{% if r.tight_classes %}
tight classes
{{ tight }}{% endif %}
{% for note in r.notes %}
note: {{ note }}
{% endfor %}
{% for path in r.artifacts %}
artifact: {{ path }}
{% endfor %}
{% if r.runtime_seconds is not none %}
runtime         {{ r.runtime_seconds }}s
{% endif %}
"""
)

PROPERTY_TEMPLATE = _env.from_string(
    """property        {{ p.name }}
seed            {{ p.seed }}
trials          {{ p.trials }}
random checks   {{ p.random_checks }}
exhaustive      {{ p.exhaustive_matroids }} matroids, {{ p.exhaustive_checks }} checks
failures        {{ p.failures | length }}
result          {{ "passed" if p.passed else "failed" }}{% if not p.complete %} (incomplete){% endif %}

{% if p.runtime_seconds is not none %}
runtime         {{ p.runtime_seconds }}s
{% endif %}
"""
)


def format_table(rows: Sequence[Sequence[Any]]) -> str:
    """Left-align the first column and right-align the rest"""
    rows = [[str(cell) for cell in row] for row in rows]
    if not rows:
        return ""
    columns = max(map(len, rows))
    widths = [max(len(row[i]) for row in rows if i < len(row)) for i in range(columns)]
    return TABLE_TEMPLATE.render(rows=rows, widths=widths)


def format_csv(rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def f_table_rows(r_max: int, t_max: int) -> List[List[Any]]:
    """One row per r, one column per t"""
    rows: List[List[Any]] = [["r"] + [f"t={t}" for t in range(1, t_max + 1)]]
    for r in range(r_max + 1):
        rows.append([r] + [f_value(r, t) for t in range(1, t_max + 1)])
    return rows


def g_table_rows(n_max: int, t_max: int) -> List[List[Any]]:
    """g(n, t) beside |E(G_{n,t})|, flagging where they differ"""
    rows: List[List[Any]] = [["n", "t", "g", "turan", "differs"]]
    for t in range(1, t_max + 1):
        for n in range(n_max + 1):
            g, e = g_value(n, t), turan_edges(n, t)
            rows.append([n, t, g, e, "yes" if g != e else ""])
    return rows


def _tight_rows(report: ExtremalReport) -> List[List[Any]]:
    rows: List[List[Any]] = [["label", "size", "detail", "diagnostics", "canon"]]
    for example in report.tight_classes:
        failed = [name for name, ok in example.diagnostics.items() if not ok]
        diagnostics = "ok" if not failed else "failed: " + ",".join(failed)
        detail = example.detail or "-"
        rows.append([example.label, example.size, detail, diagnostics, example.canon])
    return rows


def _extremal_table(report: ExtremalReport) -> str:
    return EXTREMAL_TEMPLATE.render(r=report, tight=format_table(_tight_rows(report)))


def _extremal_csv_rows(report: ExtremalReport) -> List[List[Any]]:
    header = [
        "campaign",
        "class",
        "params",
        "threshold",
        "observed_min",
        "verdict",
        "label",
        "size",
        "detail",
        "canon",
    ]
    params = ";".join(f"{k}={v}" for k, v in report.params.items())
    head = [
        report.campaign,
        report.matroid_class or "",
        params,
        report.threshold,
        report.observed_min,
        report.verdict,
    ]
    rows = [header]
    if not report.tight_classes:
        rows.append(head + ["", "", "", ""])
    for example in report.tight_classes:
        detail = example.detail or ""
        rows.append(head + [example.label, example.size, detail, example.canon])
    return rows


def _claw_rows(report: ClawReport) -> List[List[Any]]:
    rows: List[List[Any]] = [["size", "claws"]]
    rows.extend([size, count] for size, count in report.counts_by_size.items())
    return rows


def _line_rows(profile: LineProfile) -> List[List[Any]]:
    rows: List[List[Any]] = [["points on line", "lines"]]
    rows.extend([size, count] for size, count in profile.counts.items())
    return rows


def _property_rows(report: PropertyReport) -> List[List[Any]]:
    header = ["name", "seed", "trials", "random_checks", "exhaustive_checks"]
    values: List[Any] = [
        report.name,
        report.seed,
        report.trials,
        report.random_checks,
        report.exhaustive_checks,
    ]
    return [
        header + ["failures", "passed"],
        values + [len(report.failures), report.passed],
    ]


def _graph_rows(analysis: GraphAnalysis) -> List[List[Any]]:
    return [
        ["quantity", "value"],
        ["vertices", analysis.n],
        ["edges", analysis.edges],
        ["components", "+".join(map(str, analysis.component_sizes)) or "-"],
        ["max stable set", analysis.max_stable_set],
        ["max clique", analysis.max_clique],
        ["largest induced forest", analysis.largest_induced_forest],
    ]


Renderable = Union[BaseSchema, List[List[Any]]]


def render(obj: Renderable, output_format: OutputFormat) -> str:
    """Render a report model, or a table given as rows, in the requested format"""
    if isinstance(obj, list):
        if output_format == OutputFormat.CSV:
            return format_csv(obj)
        if output_format == OutputFormat.TABLE:
            return format_table(obj)
        header, *body = obj
        records = [dict(zip(map(str, header), row)) for row in body]
        return json.dumps(records, indent=2) + "\n"

    if output_format == OutputFormat.JSON:
        return obj.model_dump_json(indent=2) + "\n"

    if isinstance(obj, AnalysisReport):
        parts = [
            part
            for part in (obj.claws, obj.lines, obj.validation, obj.graph)
            if part is not None
        ]
        return "\n".join(render(part, output_format) for part in parts)
    if isinstance(obj, SuiteReport):
        reports = list(obj.reports) + list(obj.properties)
        parts = [render(r, output_format) for r in reports]
        return ("\n" if output_format == OutputFormat.TABLE else "").join(parts)
    if isinstance(obj, ExtremalReport):
        if output_format == OutputFormat.CSV:
            return format_csv(_extremal_csv_rows(obj))
        return _extremal_table(obj)
    if isinstance(obj, PropertyReport):
        if output_format == OutputFormat.CSV:
            return format_csv(_property_rows(obj))
        return PROPERTY_TEMPLATE.render(p=obj)
    if isinstance(obj, ClawReport):
        rows = _claw_rows(obj)
        if output_format == OutputFormat.CSV:
            return format_csv(rows)
        size = obj.max_claw_size if obj.max_claw_size is not None else "none (loop)"
        return f"max claw size: {size}\n" + format_table(rows)
    if isinstance(obj, LineProfile):
        rows = _line_rows(obj)
        if output_format == OutputFormat.CSV:
            return format_csv(rows)
        answer = "yes" if obj.triangle_free else "no"
        return f"triangle-free: {answer}\n" + format_table(rows)
    if isinstance(obj, GraphAnalysis):
        rows = _graph_rows(obj)
        if output_format == OutputFormat.CSV:
            return format_csv(rows)
        return format_table(rows)
    if isinstance(obj, ValidationReport):
        rows = [["check", "message"]]
        rows.extend(["violation", v] for v in obj.violations)
        rows.extend(["warning", w] for w in obj.warnings)
        if output_format == OutputFormat.CSV:
            return format_csv(rows)
        return f"valid: {'yes' if obj.valid else 'no'}\n" + format_table(rows)

    logger.debug(f"No table view for {type(obj).__name__}; using JSON")
    return obj.model_dump_json(indent=2) + "\n"
