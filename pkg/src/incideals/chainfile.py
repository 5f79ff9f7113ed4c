"""Text formats: monomials like x1^2*x3 and flat chain description files.

A chain file is line oriented.  '#' starts a comment, blank lines are
ignored, and each remaining line is one of

    index <r>
    symmetry inc|sym
    gen <monomial>
    head <k> <monomial>

with one index line, at least one gen line, and head lines (optional)
filling in explicit terms below the index.  Monomials are "1" or products
of factors xI or xI^E with I >= 1 and E >= 1; repeated variables multiply.
"""
from __future__ import annotations

from .chains import OrbitChain, Symmetry
from .monomials import Monomial, MonomialIdeal

__all__ = ["ChainFileError", "parse_monomial", "load_chain", "loads_chain"]


class ChainFileError(ValueError):
    """A parse or validation error with a 1-based position."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}: " if col is None else f"line {line}, col {col}: "
        elif col is not None:
            where = f"col {col}: "
        super().__init__(where + message)


def parse_monomial(text: str, ambient: int | None = None) -> Monomial:
    """Parse "1" or xI(^E)?("*" factor)* into a monomial.

    Column numbers in errors are 1-based offsets into `text`.  With no
    ambient the width defaults to the largest index used.
    """
    if text == "1":
        return Monomial.one(ambient if ambient is not None else 1)
    if not text:
        raise ChainFileError("empty monomial", col=1)
    pairs: list[tuple[int, int]] = []
    pos = 0

    def read_int(what: str) -> int:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ChainFileError(f"expected {what}", col=start + 1)
        return int(text[start:pos])

    while True:
        if pos >= len(text) or text[pos] != "x":
            raise ChainFileError("expected 'x'", col=pos + 1)
        pos += 1
        var_col = pos + 1
        i = read_int("a variable index")
        if i < 1:
            raise ChainFileError("variable index must be at least 1", col=var_col)
        e = 1
        if pos < len(text) and text[pos] == "^":
            pos += 1
            exp_col = pos + 1
            e = read_int("an exponent")
            if e < 1:
                raise ChainFileError("exponent must be positive", col=exp_col)
        pairs.append((i, e))
        if pos == len(text):
            break
        if text[pos] != "*":
            raise ChainFileError("expected '*' between factors", col=pos + 1)
        pos += 1
    width = ambient if ambient is not None else max(i for i, _ in pairs)
    top = max(i for i, _ in pairs)
    if top > width:
        raise ChainFileError(f"variable x{top} exceeds width {width}", col=1)
    return Monomial.from_pairs(pairs, width)


def loads_chain(content: str) -> OrbitChain:
    """Build an orbit chain from chain-file text."""
    index: int | None = None
    index_line = 0
    symmetry = Symmetry.INC
    gen_lines: list[tuple[int, int, str]] = []  # (line, col, text)
    head_lines: list[tuple[int, int, int, str]] = []  # (line, col, width, text)

    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        key, _, rest = stripped.partition(" ")
        rest_off = indent + len(key) + 1
        rest_stripped = rest.strip()
        rest_col = rest_off + (len(rest) - len(rest.lstrip())) + 1
        if key == "index":
            if index is not None:
                raise ChainFileError("duplicate index line", line=lineno)
            try:
                index = int(rest_stripped)
            except ValueError:
                raise ChainFileError("index must be an integer", line=lineno, col=rest_col)
            if index < 1:
                raise ChainFileError("index must be at least 1", line=lineno, col=rest_col)
            index_line = lineno
        elif key == "symmetry":
            try:
                symmetry = Symmetry(rest_stripped)
            except ValueError:
                raise ChainFileError(
                    f"symmetry must be one of {', '.join(s.value for s in Symmetry)}",
                    line=lineno,
                    col=rest_col,
                )
        elif key == "gen":
            if not rest_stripped:
                raise ChainFileError("gen line needs a monomial", line=lineno)
            gen_lines.append((lineno, rest_col, rest_stripped))
        elif key == "head":
            wtext, _, mono = rest_stripped.partition(" ")
            mono = mono.strip()
            try:
                w = int(wtext)
            except ValueError:
                raise ChainFileError("head needs a width", line=lineno, col=rest_col)
            if not mono:
                raise ChainFileError("head line needs a monomial", line=lineno)
            mono_col = rest_col + len(wtext) + 1
            head_lines.append((lineno, mono_col, w, mono))
        else:
            raise ChainFileError(f"unknown key {key!r}", line=lineno, col=indent + 1)

    if index is None:
        raise ChainFileError("missing index line")
    if not gen_lines:
        raise ChainFileError("no gen lines")

    def parse_at(text: str, width: int, lineno: int, col: int) -> Monomial:
        try:
            return parse_monomial(text, width)
        except ChainFileError as exc:
            inner = exc.col or 1
            raise ChainFileError(exc.message, line=lineno, col=col + inner - 1) from None

    gens = [parse_at(t, index, ln, c) for ln, c, t in gen_lines]
    head: tuple[MonomialIdeal, ...] = ()
    if head_lines:
        by_width: dict[int, list[Monomial]] = {}
        for ln, c, w, t in head_lines:
            if not 1 <= w <= index - 1:
                raise ChainFileError(
                    f"head width must lie in 1..{index - 1}", line=ln
                )
            by_width.setdefault(w, []).append(parse_at(t, w, ln, c))
        head = tuple(
            MonomialIdeal.from_gens(tuple(by_width.get(w, ())), w)
            for w in range(1, index)
        )
    try:
        return OrbitChain(
            seed=MonomialIdeal.from_gens(tuple(gens), index),
            index=index,
            symmetry=symmetry,
            head=head,
        )
    except ValueError as exc:
        raise ChainFileError(str(exc), line=index_line) from None


def load_chain(path: str) -> OrbitChain:
    """Read and parse a chain file from disk."""
    with open(path, "r", encoding="utf-8") as fh:
        return loads_chain(fh.read())
