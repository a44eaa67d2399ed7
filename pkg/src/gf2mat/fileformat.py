"""Line-oriented text formats for matroids and colourings.

    # comment
    dim: 4
    points: 1 2 4 8 15

``points:`` may repeat; blank lines and ``#`` comments are ignored.  A
colouring file has ``dim:``, ``colors: c`` and one ``color <point> <id>``
line per nonzero vector.  The emitters write the canonical form (sorted
points, 16 per line), so parse followed by emit reproduces canonical files
byte for byte.
"""

from __future__ import annotations

from .errors import MatroidFormatError
from .gf2 import MAX_SET_DIM
from .matroid import Matroid
from .ramsey import Coloring

POINTS_PER_LINE = 16


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise MatroidFormatError(f"{what} {token!r} is not a decimal integer", lineno) from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header_dim(value: str, lineno: int) -> int:
    n = _int(value.strip(), lineno, "dimension")
    if not 0 <= n <= MAX_SET_DIM:
        raise MatroidFormatError(f"malformed header: dimension {n} outside [0, {MAX_SET_DIM}]", lineno)
    return n


def parse_matroid(text: str) -> Matroid:
    n = None
    points: list[int] = []
    seen: dict[int, int] = {}
    for lineno, line in _lines(text):
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise MatroidFormatError(f"malformed line {line!r}", lineno)
        if key == "dim":
            if n is not None:
                raise MatroidFormatError("malformed header: repeated 'dim:'", lineno)
            n = _header_dim(value, lineno)
        elif key == "points":
            if n is None:
                raise MatroidFormatError("malformed header: 'points:' before 'dim:'", lineno)
            for tok in value.split():
                p = _int(tok, lineno, "point")
                if p == 0:
                    raise MatroidFormatError("point 0 is not a point of the projective geometry", lineno)
                if not 0 < p < (1 << n):
                    raise MatroidFormatError(f"point out of range: {p} not in [1, {(1 << n) - 1}]", lineno)
                if p in seen:
                    raise MatroidFormatError(f"duplicate point {p} (first on line {seen[p]})", lineno)
                seen[p] = lineno
                points.append(p)
        else:
            raise MatroidFormatError(f"unknown field {key!r}", lineno)
    if n is None:
        raise MatroidFormatError("malformed header: missing 'dim:'")
    return Matroid.from_points(n, points)


def _point_lines(points) -> list[str]:
    pts = [str(int(p)) for p in points]
    if not pts:
        return ["points:"]
    return [
        "points: " + " ".join(pts[i:i + POINTS_PER_LINE])
        for i in range(0, len(pts), POINTS_PER_LINE)
    ]


def emit_matroid(m: Matroid, comment: str | None = None) -> str:
    out = [f"# {line}" for line in comment.splitlines()] if comment else []
    out.append(f"dim: {m.n}")
    out += _point_lines(m.points())
    return "\n".join(out) + "\n"


def read_matroid(path: str) -> Matroid:
    with open(path, encoding="utf-8") as fh:
        return parse_matroid(fh.read())


def parse_coloring(text: str) -> Coloring:
    n = c = None
    colors: dict[int, int] = {}
    for lineno, line in _lines(text):
        if line.startswith("color "):
            if n is None or c is None:
                raise MatroidFormatError("malformed header: 'color' before 'dim:' and 'colors:'", lineno)
            parts = line.split()
            if len(parts) != 3:
                raise MatroidFormatError("expected 'color <point> <id>'", lineno)
            p = _int(parts[1], lineno, "point")
            col = _int(parts[2], lineno, "colour id")
            if p == 0:
                raise MatroidFormatError("point 0 is not a point of the projective geometry", lineno)
            if not 0 < p < (1 << n):
                raise MatroidFormatError(f"point out of range: {p} not in [1, {(1 << n) - 1}]", lineno)
            if p in colors:
                raise MatroidFormatError(f"duplicate point {p}", lineno)
            if not 0 <= col < c:
                raise MatroidFormatError(f"colour id {col} not in [0, {c})", lineno)
            colors[p] = col
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise MatroidFormatError(f"malformed line {line!r}", lineno)
        if key == "dim":
            if n is not None:
                raise MatroidFormatError("malformed header: repeated 'dim:'", lineno)
            n = _header_dim(value, lineno)
        elif key == "colors":
            if c is not None:
                raise MatroidFormatError("malformed header: repeated 'colors:'", lineno)
            c = _int(value.strip(), lineno, "colour count")
            if c < 1:
                raise MatroidFormatError("malformed header: need at least one colour", lineno)
        else:
            raise MatroidFormatError(f"unknown field {key!r}", lineno)
    if n is None or c is None:
        raise MatroidFormatError("malformed header: need 'dim:' and 'colors:'")
    missing = [p for p in range(1, 1 << n) if p not in colors]
    if missing:
        raise MatroidFormatError(f"point {missing[0]} has no colour")
    return Coloring(n, tuple(colors[p] for p in range(1, 1 << n)), c)


def emit_coloring(col: Coloring) -> str:
    out = [f"dim: {col.n}", f"colors: {col.c}"]
    out += [f"color {p} {col.color(p)}" for p in range(1, 1 << col.n)]
    return "\n".join(out) + "\n"
