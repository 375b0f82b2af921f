"""Readers and writers for the ``fms 1`` space and ``fmap 1`` map text formats.

FMS v1::

    fms 1
    points 3
    x y z
    exact
    0 1 1
    1 0 1
    1 1 0

Entries are integers, ``num/den`` rationals or decimals; ``float`` replaces
``exact`` for floating point matrices.  FMAP v1 is ``fmap 1`` followed by one
``source target`` line per point.
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .mapping import MapError, TableMap
from .metric import STAR, FiniteSpace, verify_metric_axioms
from .numeric import format_scalar, parse_scalar
from .paper_spaces import PaperSpace

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Malformed input; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MetricAxiomError(ValueError):
    def __init__(self, report) -> None:
        super().__init__(report.detail)
        self.report = report


def _lines(text: str):
    """Yield ``(lineno, [(col, token), ...])`` for non-blank lines."""
    for lineno, raw in enumerate(text.split("\n"), start=1):
        toks = []
        col = 0
        for part in raw.split():
            col = raw.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield lineno, toks


def _expect_header(it, words: list[str], last_line: int):
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise FormatError(f"expected '{' '.join(words)}'", last_line + 1) from None
    got = [t for _, t in toks]
    if got != words:
        raise FormatError(f"expected '{' '.join(words)}', got '{' '.join(got)}'", lineno, toks[0][0])
    return lineno


def parse_fms(text: str, verify: bool = True) -> FiniteSpace:
    """Parse FMS v1 text; with ``verify`` the metric axioms must hold."""
    it = iter(_lines(text))
    lineno = _expect_header(it, ["fms", "1"], 0)
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise FormatError("expected 'points <n>'", lineno + 1) from None
    if len(toks) != 2 or toks[0][1] != "points":
        raise FormatError("expected 'points <n>'", lineno, toks[0][0])
    try:
        n = int(toks[1][1])
    except ValueError:
        raise FormatError(f"bad point count {toks[1][1]!r}", lineno, toks[1][0]) from None
    if n < 1:
        raise FormatError("point count must be >= 1", lineno, toks[1][0])
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise FormatError("expected point names", lineno + 1) from None
    if len(toks) != n:
        raise FormatError(f"expected {n} point names, got {len(toks)}", lineno, toks[0][0])
    names = [t for _, t in toks]
    if len(set(names)) != n:
        raise FormatError("duplicate point name", lineno, toks[0][0])
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise FormatError("expected 'exact' or 'float'", lineno + 1) from None
    mode = [t for _, t in toks]
    if mode not in (["exact"], ["float"]):
        raise FormatError(f"expected 'exact' or 'float', got '{' '.join(mode)}'", lineno, toks[0][0])
    exact = mode == ["exact"]
    rows = []
    for r in range(n):
        try:
            lineno, toks = next(it)
        except StopIteration:
            raise FormatError(f"expected matrix row {r + 1} of {n}", lineno + 1) from None
        if len(toks) != n:
            raise FormatError(f"expected {n} entries, got {len(toks)}", lineno, toks[0][0])
        row = []
        for col, tok in toks:
            try:
                row.append(parse_scalar(tok, exact=exact))
            except (ValueError, ArithmeticError) as exc:
                raise FormatError(str(exc), lineno, col) from None
        rows.append(row)
    for lineno, toks in it:
        raise FormatError("unexpected trailing content", lineno, toks[0][0])
    space = FiniteSpace(names, rows, exact=exact)
    if verify:
        report = verify_metric_axioms(space)
        if not report.passed:
            raise MetricAxiomError(report)
    return space


def load_fms(path: PathLike, verify: bool = True) -> FiniteSpace:
    return parse_fms(Path(path).read_text(encoding="utf-8"), verify=verify)


def format_fms(space: FiniteSpace) -> str:
    n = len(space)
    out = ["fms 1", f"points {n}", " ".join(space.names), "exact" if space.exact else "float"]
    out += [" ".join(format_scalar(v) for v in row) for row in space.matrix]
    return "\n".join(out) + "\n"


def save_fms(space: FiniteSpace, path: PathLike) -> None:
    Path(path).write_text(format_fms(space), encoding="utf-8", newline="\n")


def parse_fmap(text: str, space: FiniteSpace) -> TableMap:
    """Parse FMAP v1 text against ``space``; every point must be a source once."""
    it = iter(_lines(text))
    lineno = _expect_header(it, ["fmap", "1"], 0)
    table = {}
    for lineno, toks in it:
        if len(toks) != 2:
            raise FormatError("expected 'source target'", lineno, toks[0][0])
        (cs, src), (ct, dst) = toks
        for col, nm in ((cs, src), (ct, dst)):
            if nm not in space.names:
                raise FormatError(f"unknown point {nm!r}", lineno, col)
        s = space.lookup(src)
        if s in table:
            raise FormatError(f"duplicate source {src!r}", lineno, cs)
        table[s] = space.lookup(dst)
    missing = [space.names[p] for p in space.points() if p not in table]
    if missing:
        raise MapError(f"map is not total: no image for {missing[0]!r}")
    return TableMap(space, table)


def load_fmap(path: PathLike, space: FiniteSpace) -> TableMap:
    return parse_fmap(Path(path).read_text(encoding="utf-8"), space)


def format_fmap(map: TableMap) -> str:
    space = map.space
    lines = ["fmap 1"] + [f"{space.name(p)} {space.name(q)}" for p, q in map.table.items()]
    return "\n".join(lines) + "\n"


def save_fmap(map: TableMap, path: PathLike) -> None:
    Path(path).write_text(format_fmap(map), encoding="utf-8", newline="\n")


def materialize_paper_space(
    space: PaperSpace,
    window: Optional[int] = None,
    remap_boundary_to_star: bool = False,
) -> tuple[FiniteSpace, Optional[TableMap]]:
    """Restrict the countable space to ``x_0 .. x_N, x*`` as a finite space.

    The restricted shift map is returned only with
    ``remap_boundary_to_star=True``: the image ``x_{N+1}`` of the boundary
    point lies outside the window and is replaced by ``x*``, which changes the
    map.  Otherwise the map is ``None``.
    """
    pts = space.points(window)
    names = [space.name(p) for p in pts]
    matrix = [[space.distance(p, q) for q in pts] for p in pts]
    finite = FiniteSpace(names, matrix, exact=space.exact, tolerance=space.tolerance)
    if not remap_boundary_to_star:
        return finite, None
    last = len(pts) - 2
    images = [i + 1 if i < last else len(pts) - 1 for i in range(len(pts) - 1)]
    images.append(len(pts) - 1)
    assert pts[-1] is STAR
    return finite, TableMap(finite, images)
