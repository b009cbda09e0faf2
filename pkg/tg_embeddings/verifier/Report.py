import json
from typing import Any, Iterable, NamedTuple


# Structs
class ClaimRecord(NamedTuple):
    name: str
    params: dict[str, Any]
    passed: bool
    # residual word, rank, witness or other evidence backing the verdict
    certificate: str = ""


def all_passed(records: Iterable[ClaimRecord]) -> bool:
    return all(record.passed for record in records)


def render_jsonl(records: Iterable[ClaimRecord]) -> str:
    """One JSON object per line with the keys name, params, passed and certificate."""
    return "".join(json.dumps(record._asdict(), sort_keys=True) + "\n" for record in records)


def render_table(records: Iterable[ClaimRecord]) -> str:
    """Fixed-width table, one row per record, with a closing summary line."""
    rows = [
        (
            record.name,
            " ".join(f"{key}={value}" for key, value in sorted(record.params.items())),
            "pass" if record.passed else "FAIL",
            record.certificate,
        )
        for record in records
    ]
    header = ("claim", "params", "result", "certificate")
    widths = [max(len(row[column]) for row in [header, *rows]) for column in range(3)]
    lines = []
    for row in [header, *rows]:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row[:3], widths)) + "  " + row[3])
    failed = sum(1 for row in rows if row[2] == "FAIL")
    lines.append(f"{len(rows) - failed} passed, {failed} failed")
    return "\n".join(line.rstrip() for line in lines) + "\n"
