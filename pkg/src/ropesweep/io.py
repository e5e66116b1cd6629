"""Text formats: arrangement files, sidecars and result records."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Sequence
from pathlib import Path

from .arrangement import WiringDiagram, canonicalize
from .errors import InputError, ParseError


def parse_arrangement(text: str) -> WiringDiagram:
    """Parse ``n`` and the swap word; ``#`` lines are comments."""
    rows = [
        (i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if len(rows) < 2:
        raise ParseError("expected a line with n and a line with swap positions",
                         rows[0][0] if rows else None)
    if len(rows) > 2:
        raise ParseError("unexpected extra content", rows[2][0])
    (ln_n, n_text), (ln_w, w_text) = rows
    try:
        n = int(n_text)
    except ValueError:
        raise ParseError(f"bad pseudoline count {n_text!r}", ln_n) from None
    try:
        swaps = [int(tok) for tok in w_text.split()]
    except ValueError:
        raise ParseError("swap positions must be integers", ln_w) from None
    try:
        return WiringDiagram(n, tuple(swaps))
    except InputError as exc:
        raise ParseError(str(exc), ln_w) from exc
    except ValueError as exc:
        raise ParseError(str(exc), ln_n) from exc


def parse_inline(text: str) -> WiringDiagram:
    """``"n:p1 p2 ..."`` or ``"n:p1,p2,..."`` as given on the command line."""
    if ":" not in text:
        raise ParseError("inline arrangement must look like 'n:1 2 1'")
    n_text, word = text.split(":", 1)
    return parse_arrangement(f"{n_text}\n{word.replace(',', ' ')}\n")


def format_arrangement(wd: WiringDiagram, comments: Iterable[str] = ()) -> str:
    """Arrangement file text; always the canonical word."""
    lines = [f"# {c}" for c in comments]
    lines.append(str(wd.n))
    lines.append(" ".join(map(str, canonicalize(wd).swaps)))
    return "\n".join(lines) + "\n"


def read_arrangement(path: str | Path) -> WiringDiagram:
    return parse_arrangement(Path(path).read_text(encoding="utf-8"))


def write_arrangement(path: str | Path, wd: WiringDiagram, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_arrangement(wd, comments), encoding="utf-8")


def sidecar_path(path: str | Path) -> Path:
    p = Path(path)
    return p.with_name(p.name + ".json")


def write_json(path: str | Path, obj: object) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def records_to_csv(records: Sequence[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: _csv_value(rec.get(k)) for k in fields})
    return buf.getvalue()


def _csv_value(v: object) -> object:
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return v
