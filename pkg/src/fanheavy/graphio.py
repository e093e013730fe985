"""graph6 codec, edge-list text format, corpus streaming, report emission.

graph6 per the de-facto standard: size byte 63+n for n <= 62, then the
upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2),
x(0,3), ... packed big-endian 6 bits per character, each character +63.
Only the single-byte size tier is implemented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph

GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Malformed graph6 / edge-list input."""

    def __init__(self, message: str, line_no: int | None = None, line: str | None = None):
        self.line_no = line_no
        self.line = line
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"n={g.n} exceeds the supported graph6 tier (n <= {GRAPH6_MAX_N})")
    out = [chr(63 + g.n)]
    bits = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            bits = (bits << 1) | ((g.adj[row] >> col) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + bits))
                bits = nbits = 0
    if nbits:
        out.append(chr(63 + (bits << (6 - nbits))))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if not s:
        raise GraphFormatError("empty graph6 line")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
    if s[0] == "~":
        raise GraphFormatError("multi-byte graph6 size tier not supported (n > 62)")
    n = ord(s[0]) - 63
    need = (n * (n - 1) // 2 + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise GraphFormatError(
            f"expected {need} data characters for n={n}, got {len(data)}")
    rows = [0] * n
    k = 0  # bit cursor over the upper triangle
    col, row = 1, 0
    for ch in data:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if col >= n:
                if (val >> shift) & 1:
                    raise GraphFormatError("nonzero padding bits")
                continue
            if (val >> shift) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            row += 1
            if row == col:
                col += 1
                row = 0
            k += 1
    return Graph.from_rows(tuple(rows))


# -- edge-list text format ----------------------------------------------
# First line "n m", then m lines "u v".

def decode_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("expected header 'n m'", line_no=1, line=lines[0])
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError("expected integer header 'n m'", line_no=1, line=lines[0])
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError("expected edge 'u v'", line_no=i, line=ln)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError("expected integer edge 'u v'", line_no=i, line=ln)
    return Graph(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_corpus(
    lines: Iterable[str],
    fmt: str = "graph6",
    errors: list[tuple[int, str]] | None = None,
) -> Iterator[tuple[int, Graph]]:
    """Yield (corpus index, Graph) per non-empty line.

    Malformed lines raise GraphFormatError with a 1-based line number,
    unless an `errors` list is supplied, in which case the failure is
    appended as (line_no, message) and streaming continues.
    """
    if fmt != "graph6":
        raise ValueError(f"unsupported corpus format {fmt!r}")
    index = 0
    for line_no, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s:
            continue
        try:
            g = decode_graph6(s)
        except GraphFormatError as exc:
            if errors is None:
                raise GraphFormatError(str(exc), line_no=line_no, line=s) from exc
            errors.append((line_no, str(exc)))
            continue
        yield index, g
        index += 1


# -- verdict reports -----------------------------------------------------

@dataclass
class VerdictRecord:
    graph_id: int
    condition: str
    verdict: bool
    witness: dict | None = None
    seconds: float = 0.0
    error: str | None = None

    def to_dict(self) -> dict:
        d = {
            "graph_id": self.graph_id,
            "condition": self.condition,
            "verdict": self.verdict,
            "seconds": round(self.seconds, 6),
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.error is not None:
            d["error"] = self.error
        return d


def write_report(records: Iterable[VerdictRecord], fmt: str = "json") -> str:
    recs = sorted(records, key=lambda r: r.graph_id)
    n_true = sum(1 for r in recs if r.error is None and r.verdict)
    n_false = sum(1 for r in recs if r.error is None and not r.verdict)
    n_error = sum(1 for r in recs if r.error is not None)
    if fmt == "json":
        lines = [json.dumps(r.to_dict(), sort_keys=True) for r in recs]
        lines.append(json.dumps(
            {"summary": {"true": n_true, "false": n_false, "errors": n_error}},
            sort_keys=True))
        return "\n".join(lines) + "\n"
    if fmt == "table":
        lines = [f"{'graph':>6}  {'condition':<12} {'verdict':<8} witness"]
        for r in recs:
            wit = json.dumps(r.witness, sort_keys=True) if r.witness else ""
            verdict = "ERROR" if r.error is not None else str(r.verdict)
            lines.append(f"{r.graph_id:>6}  {r.condition:<12} {verdict:<8} {wit}")
        lines.append(f"summary: true={n_true} false={n_false} errors={n_error}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
