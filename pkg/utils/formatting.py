from typing import List, Sequence

from models.reports import ClassificationReport, TableReport


def format_matrix(matrix: Sequence[Sequence[int]]) -> str:
    """Row-wise, right-aligned."""
    if not matrix:
        return ""
    width = max(len(str(entry)) for row in matrix for entry in row)
    return "\n".join(" ".join(str(entry).rjust(width) for entry in row) for row in matrix)


def markdown_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    lines += ["| " + " | ".join(str(cell) for cell in row) + " |" for row in rows]
    return "\n".join(lines)


def tsv_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join(str(cell) for cell in row) for row in rows]
    return "\n".join(lines)


def _group_rows(report: ClassificationReport) -> List[List[object]]:
    return [
        [
            group.polynomial,
            group.count,
            len(group.orbits),
            ", ".join(group.labels),
            group.components if report.closure else "",
        ]
        for group in report.groups
    ]


GROUP_HEADER = ("polynomial", "count", "orbits", "labels", "components")


def render_classification(report: ClassificationReport, fmt: str) -> str:
    if fmt == "tsv":
        return tsv_table(GROUP_HEADER, _group_rows(report))

    table = markdown_table(GROUP_HEADER, _group_rows(report))
    if fmt == "md":
        lines = [f"## Derived equivalence classes for type {report.dynkin_type}", "", table, ""]
    else:
        lines = [table, ""]
    lines.append(report.summary())
    if report.closure:
        counts = ", ".join(f"{kind}: {count}" for kind, count in sorted(report.closure.verdict_counts.items()))
        lines.append(f"mutation verdicts: {counts}")
    for polynomial in report.split_groups:
        lines.append(f"open discrepancy: group {polynomial} is split by the closure")
    return "\n".join(lines)


def render_tables(report: TableReport) -> str:
    lines = []
    for verdict in report.rows:
        flags = []
        if verdict.adjusted:
            flags.append("adjusted")
        if verdict.direction:
            flags.append(f"permutation {verdict.direction}")
        elif verdict.status == "good" and verdict.row.permutation:
            flags.append("permutation unmatched")
        suffix = f" [{', '.join(flags)}]" if flags else ""
        message = f": {verdict.message}" if verdict.status == "failed" and verdict.message else ""
        lines.append(f"{verdict.status:<10} {verdict.row.describe()}{suffix}{message}")
    for opposite in report.opposites:
        status = "good" if opposite.holds else "failed"
        lines.append(f"{status:<10} {opposite.label}^op {opposite.relation} {opposite.partner}")
    for mismatch in report.label_polynomials:
        lines.append(
            f"{'failed':<10} {mismatch['label']}: expected {mismatch['expected']}, got {mismatch['computed']}"
        )
    counts = report.counts()
    lines.append(
        f"{report.dynkin_type}: {counts['good']} good, {counts['failed']} failed, "
        f"{counts['unresolved']} unresolved rows; "
        f"{sum(o.holds for o in report.opposites)}/{len(report.opposites)} opposite pairings"
    )
    return "\n".join(lines)
