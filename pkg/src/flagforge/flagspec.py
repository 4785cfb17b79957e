"""FlagSpec documents: a small text format describing a flag and an optional subgroup.

Grammar (EBNF; ``#`` starts a comment, blank lines are ignored)::

    document  = header { subspace } [ subgroup ] ;
    header    = "field" "p=" INT "n=" INT [ "poly=" INT { "," INT } ] ;
    subspace  = "subspace" ":" ELEM { "," ELEM } ;
    subgroup  = "subgroup" "l=" INT ;
    ELEM      = "0" | "1" | "a" | "a^" INT | "[" INT { "," INT } "]" ;

Each ``subspace`` line lists generators of one subspace of the flag, from the
smallest to the largest.  ``poly`` gives the modulus coefficients, constant
term first.  Example::

    field p=3 n=8
    subspace: 1, a^820
    subspace: 1, a^82, a^164, a^246
    subgroup l=1
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FlagforgeError, FlagSpecError
from .ffield import FieldCtx, build_field
from .flag import Flag
from .subspace import Subspace

_ELEM = re.compile(r"\[[^\]]*\]?|[^,\s]+")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class FlagSpecDocument:
    p: int
    n: int
    modulus: tuple[int, ...] | None
    subspaces: tuple[tuple[Token, ...], ...]
    l: int | None = None
    header_line: int = 1

    def generator_texts(self) -> list[list[str]]:
        return [[t.text for t in gens] for gens in self.subspaces]


@dataclass(frozen=True)
class ParsedFlag:
    document: FlagSpecDocument
    ctx: FieldCtx
    flag: Flag

    @property
    def l(self) -> int | None:
        return self.document.l


def _int(value: str, line: int, col: int) -> int:
    if not re.fullmatch(r"\d+", value):
        raise FlagSpecError(line, col, f"expected a non-negative integer, got {value!r}")
    return int(value)


def _key_values(line: str, start: int, lineno: int, allowed: tuple[str, ...]) -> dict[str, tuple[str, int]]:
    """key=value pairs in line[start:]; values carry the 1-based column where they begin."""
    out: dict[str, tuple[str, int]] = {}
    for m in re.finditer(r"\S+", line[start:]):
        tok, col = m.group(), start + m.start() + 1
        key, eq, value = tok.partition("=")
        if not eq:
            raise FlagSpecError(lineno, col, f"expected key=value, got {tok!r}")
        if key not in allowed:
            raise FlagSpecError(lineno, col, f"unknown key {key!r}")
        if key in out:
            raise FlagSpecError(lineno, col, f"duplicate key {key!r}")
        out[key] = (value, col + len(key) + 1)
    return out


def _generators(line: str, start: int, lineno: int) -> tuple[Token, ...]:
    body = line[start:]
    tokens = []
    expect_elem = True
    pos = 0
    while pos < len(body):
        ch = body[pos]
        if ch.isspace():
            pos += 1
            continue
        col = start + pos + 1
        if ch == ",":
            if expect_elem:
                raise FlagSpecError(lineno, col, "empty generator")
            expect_elem = True
            pos += 1
            continue
        if not expect_elem:
            raise FlagSpecError(lineno, col, "expected ',' between generators")
        m = _ELEM.match(body, pos)
        tokens.append(Token(m.group(), lineno, col))
        expect_elem = False
        pos = m.end()
    if expect_elem:
        col = start + len(body.rstrip()) + 1
        raise FlagSpecError(lineno, col, "missing generator")
    return tuple(tokens)


def parse_document(text: str) -> FlagSpecDocument:
    """Syntax only; field construction and element parsing happen in :func:`load_flag`."""
    header = None
    header_line = 1
    subspaces: list[tuple[Token, ...]] = []
    l = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        word = re.match(r"[A-Za-z_]+", line[indent:])
        word = word.group() if word else line[indent:].split()[0]
        col = indent + 1
        if word == "field":
            if header is not None:
                raise FlagSpecError(lineno, col, "second field header")
            kv = _key_values(line, indent + 5, lineno, ("p", "n", "poly"))
            for key in ("p", "n"):
                if key not in kv:
                    raise FlagSpecError(lineno, col, f"field header needs {key}=")
            p = _int(kv["p"][0], lineno, kv["p"][1])
            n = _int(kv["n"][0], lineno, kv["n"][1])
            modulus = None
            if "poly" in kv:
                value, vcol = kv["poly"]
                modulus = tuple(_int(c.strip(), lineno, vcol) for c in value.split(","))
            header, header_line = (p, n, modulus), lineno
        elif word == "subspace":
            if header is None:
                raise FlagSpecError(lineno, col, "subspace line before the field header")
            if l is not None:
                raise FlagSpecError(lineno, col, "subspace line after the subgroup line")
            m = re.compile(r"subspace\s*:").match(line, indent)
            if not m:
                raise FlagSpecError(lineno, indent + 9, "expected ':' after 'subspace'")
            subspaces.append(_generators(line, m.end(), lineno))
        elif word == "subgroup":
            if header is None:
                raise FlagSpecError(lineno, col, "subgroup line before the field header")
            if l is not None:
                raise FlagSpecError(lineno, col, "second subgroup line")
            kv = _key_values(line, indent + 8, lineno, ("l",))
            if "l" not in kv:
                raise FlagSpecError(lineno, col, "subgroup line needs l=")
            l = _int(kv["l"][0], lineno, kv["l"][1])
        else:
            raise FlagSpecError(lineno, col, f"unknown directive {word!r}")
    if header is None:
        raise FlagSpecError(1, 1, "missing field header")
    if not subspaces:
        raise FlagSpecError(header_line, 1, "no subspace lines")
    p, n, modulus = header
    return FlagSpecDocument(p, n, modulus, tuple(subspaces), l, header_line)


def load_flag(text: str) -> ParsedFlag:
    """Parse a document and build its field and flag; every failure is a positioned FlagSpecError."""
    doc = parse_document(text)
    try:
        ctx = build_field(doc.p, doc.n, doc.modulus)
    except FlagforgeError as exc:
        raise FlagSpecError(doc.header_line, 1, str(exc)) from exc
    spaces = []
    for gens in doc.subspaces:
        elems = []
        for tok in gens:
            try:
                elems.append(ctx.parse_element(tok.text))
            except FlagforgeError as exc:
                raise FlagSpecError(tok.line, tok.column, str(exc)) from exc
        try:
            spaces.append(Subspace.from_generators(ctx, elems))
        except FlagforgeError as exc:
            raise FlagSpecError(gens[0].line, gens[0].column, str(exc)) from exc
    # grow the flag one level at a time so a failure points at the offending line
    for i, gens in enumerate(doc.subspaces, start=1):
        try:
            flag = Flag(spaces[:i])
        except FlagforgeError as exc:
            raise FlagSpecError(gens[0].line, gens[0].column, str(exc)) from exc
    return ParsedFlag(doc, ctx, flag)


def load_flag_file(path: str) -> ParsedFlag:
    with open(path, encoding="utf-8") as fh:
        return load_flag(fh.read())
