"""Plain-text polytope files.

The first line holds ``d n``; then come ``n`` lines of ``d`` integers.  Blank
lines and anything after ``#`` are ignored.  Duplicate points are fine.
"""

from __future__ import annotations

from pathlib import Path

from .lattice import LatticePolytope


class PolytopeParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _int_tokens(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not t.lstrip("+-").isdigit())
        raise PolytopeParseError(lineno, f"not an integer: {bad!r}") from None


def parse_polytope_text(text: str) -> LatticePolytope:
    lines = [(i, raw.split("#", 1)[0].split()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise PolytopeParseError(1, "empty file")
    lineno, header = lines[0]
    if len(header) != 2:
        raise PolytopeParseError(lineno, "header must be 'd n'")
    d, n = _int_tokens(header, lineno)
    if d < 1 or n < 1:
        raise PolytopeParseError(lineno, "need d >= 1 and n >= 1")
    rows = lines[1:]
    if len(rows) != n:
        at = rows[n][0] if len(rows) > n else (rows[-1][0] + 1 if rows else lineno + 1)
        raise PolytopeParseError(at, f"expected {n} point rows, found {len(rows)}")
    points = []
    for i, toks in rows:
        if len(toks) != d:
            raise PolytopeParseError(i, f"expected {d} coordinates, found {len(toks)}")
        points.append(tuple(_int_tokens(toks, i)))
    return LatticePolytope(points)


def parse_polytope(path) -> LatticePolytope:
    return parse_polytope_text(Path(path).read_text())


def format_polytope(P: LatticePolytope) -> str:
    lines = [f"{P.dim} {len(P)}"] + [" ".join(map(str, p)) for p in P.points]
    return "\n".join(lines) + "\n"
