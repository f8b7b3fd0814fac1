"""Plain-text automaton documents.

A document is a sequence of ``key: value`` lines; ``matrix``, ``config`` and
``omega`` take an indented block::

    field: F2
    group: free(2)
    matrix:
      a - 1, b - 1
      0, 0
    config:
      1: 1, 0
      a*b^-1: 0, 1
    radius: 3
    properties: pre-injective, surjective

Entry expressions are sums of terms ``[coefficient *] word`` where a word is
``1`` or a ``*``-product of generator atoms ``a`` or ``a^e`` (``|e| <= 64``);
``num/den`` coefficients are only allowed over Q. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .engine import Configuration
from .errors import ParseError, UsageError
from .fields import field_from_name
from .groupring import GroupRingElement, LCAMatrix
from .groups import group_from_spec

MAX_EXPONENT = 64

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_BLOCK_KEYS = ("matrix", "config", "omega")
_SCALAR_KEYS = ("field", "group", "n", "radius", "properties", "seed")


@dataclass
class AutomatonDocument:
    field: object
    group: object
    theta: LCAMatrix
    config: Configuration = None
    omega: Configuration = None
    radius: int = None
    properties: tuple = None
    seed: int = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def n(self):
        return self.theta.n


class _Tokens:
    def __init__(self, text, line, col0):
        self.toks = []
        for m in _TOKEN_RE.finditer(text):
            if m.lastindex is None:
                continue
            kind = ("num", "name", "op")[m.lastindex - 1]
            value = m.group(m.lastindex)
            if kind == "op" and value.isspace():
                continue
            self.toks.append((kind, value, col0 + m.start(m.lastindex)))
        self.i = 0
        self.line = line
        self.end_col = col0 + len(text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def accept(self, value):
        kind, v, _ = self.peek()
        if kind == "op" and v == value:
            self.i += 1
            return True
        return False

    def error(self, message, col=None):
        return ParseError(message, self.line, self.peek()[2] if col is None else col)


def parse_entry(text: str, group, field, line=None, column=1) -> GroupRingElement:
    """Parse one entry expression into an element of ``field[group]``."""
    toks = _Tokens(text, line, column)
    F, G = field, group
    coeffs = {}
    first = True
    while True:
        sign = 1
        if toks.accept("-"):
            sign = -1
        elif toks.accept("+"):
            pass
        elif not first:
            break
        coef, word = _parse_term(toks, G, F)
        c = F.mul(F(sign), coef)
        coeffs[word] = F.add(coeffs.get(word, F.zero), c)
        first = False
        kind, v, col = toks.peek()
        if kind is None:
            break
        if not (kind == "op" and v in "+-"):
            raise toks.error(f"unexpected {v!r}")
    return GroupRingElement(G, F, coeffs)


def _parse_term(toks, G, F):
    kind, v, col = toks.peek()
    coef = F.one
    if kind == "num":
        toks.take()
        num = int(v)
        if toks.accept("/"):
            if F.characteristic:
                raise toks.error(f"denominators are not allowed over {F.name}", col)
            k2, den, col2 = toks.take()
            if k2 != "num":
                raise toks.error("expected a denominator", col2)
            if int(den) == 0:
                raise toks.error("zero denominator", col2)
            coef = F.div(F(num), F(int(den)))
        else:
            coef = F(num)
        if not toks.accept("*"):
            return coef, G.identity
        kind, v, col = toks.peek()
    if kind is None:
        raise toks.error("expected a term")
    return coef, _parse_word(toks, G)


def _parse_word(toks, G):
    x = G.identity
    while True:
        kind, v, col = toks.take()
        if kind == "num" and v == "1":
            pass
        elif kind == "name":
            if v not in G.generator_names:
                raise toks.error(f"unknown generator {v!r} for {G.describe()}", col)
            e = 1
            if toks.accept("^"):
                neg = toks.accept("-")
                k2, ev, col2 = toks.take()
                if k2 != "num":
                    raise toks.error("expected an integer exponent", col2)
                e = -int(ev) if neg else int(ev)
                if abs(e) > MAX_EXPONENT:
                    raise toks.error(f"exponent {e} exceeds the limit of {MAX_EXPONENT}", col2)
            x = G.mul(x, G.gen(G.generator_index(v), e))
        else:
            raise toks.error(f"expected a generator or 1, found {v!r}" if v else "expected a generator or 1", col)
        if not toks.accept("*"):
            return x


def _split_commas(text, col0):
    parts = []
    start = 0
    for m in re.finditer(",", text):
        parts.append((text[start : m.start()], col0 + start))
        start = m.end()
    parts.append((text[start:], col0 + start))
    return parts


def _strip_comment(line):
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_document(text: str, base_dir=None) -> AutomatonDocument:
    """Parse a document; ``table("...")`` paths resolve against ``base_dir``."""
    scalars = {}
    blocks = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        if line[0].isspace():
            if current is None:
                raise ParseError("indented line outside a block", lineno, 1)
            indent = len(line) - len(line.lstrip())
            blocks[current].append((lineno, indent + 1, line.strip()))
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, value = line.split(":", 1)
        key = key.strip()
        if key in _BLOCK_KEYS:
            if key in blocks:
                raise ParseError(f"duplicate block {key!r}", lineno, 1)
            blocks[key] = []
            current = key
            if value.strip():
                raise ParseError(f"{key!r} takes an indented block on the following lines", lineno, len(key) + 2)
        elif key in _SCALAR_KEYS:
            scalars[key] = (lineno, value.strip())
            current = None
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)

    for key in ("field", "group"):
        if key not in scalars:
            raise ParseError(f"missing '{key}:' line")
    if "matrix" not in blocks or not blocks["matrix"]:
        raise ParseError("missing 'matrix:' block")

    lineno, value = scalars["field"]
    try:
        F = field_from_name(value)
    except UsageError as exc:
        raise ParseError(str(exc), lineno) from None
    lineno, value = scalars["group"]
    try:
        G = group_from_spec(value, base_dir)
    except (UsageError, OSError) as exc:
        raise ParseError(str(exc), lineno) from None

    rows = []
    for lineno, col, line in blocks["matrix"]:
        rows.append([parse_entry(part, G, F, lineno, c) for part, c in _split_commas(line, col)])
    n = len(rows)
    for (lineno, _, _), row in zip(blocks["matrix"], rows):
        if len(row) != n:
            raise ParseError(f"matrix row has {len(row)} entries, expected {n}", lineno)
    if "n" in scalars:
        lineno, value = scalars["n"]
        if not value.isdigit() or int(value) != n:
            raise ParseError(f"declared n = {value} does not match the {n}x{n} matrix", lineno)

    doc = AutomatonDocument(F, G, LCAMatrix(rows, G, F))
    for key in ("config", "omega"):
        if key in blocks:
            setattr(doc, key, _parse_configuration(blocks[key], G, F, n))
    if "radius" in scalars:
        lineno, value = scalars["radius"]
        if not value.isdigit():
            raise ParseError(f"radius must be a nonnegative integer, got {value!r}", lineno)
        doc.radius = int(value)
    if "seed" in scalars:
        lineno, value = scalars["seed"]
        try:
            doc.seed = int(value)
        except ValueError:
            raise ParseError(f"seed must be an integer, got {value!r}", lineno) from None
    if "properties" in scalars:
        doc.properties = tuple(p.strip() for p in scalars["properties"][1].split(",") if p.strip())
    return doc


def _parse_configuration(lines, G, F, n):
    values = {}
    for lineno, col, line in lines:
        if ":" not in line:
            raise ParseError("expected 'word: v1, ..., vn'", lineno, col)
        word_text, vec_text = line.split(":", 1)
        toks = _Tokens(word_text, lineno, col)
        g = _parse_word(toks, G)
        if toks.peek()[0] is not None:
            raise toks.error(f"unexpected {toks.peek()[1]!r} in word")
        parts = _split_commas(vec_text, col + len(word_text) + 1)
        if len(parts) != n:
            raise ParseError(f"vector has {len(parts)} entries, expected {n}", lineno, col)
        vec = []
        for part, c in parts:
            try:
                vec.append(F.parse(part))
            except (UsageError, ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad scalar {part.strip()!r}: {exc}", lineno, c) from None
        if g in values:
            vec = [F.add(x, y) for x, y in zip(values[g], vec)]
        values[g] = vec
    return Configuration(G, F, n, values)


def load_document(path) -> AutomatonDocument:
    path = Path(path)
    return parse_document(path.read_text(), base_dir=path.parent)


def format_configuration(c: Configuration):
    G, F = c.group, c.field
    return [f"  {G.format(g)}: {', '.join(F.format(x) for x in v)}" for g, v in c.items()]


def format_document(doc: AutomatonDocument) -> str:
    lines = [f"field: {doc.field.name}", f"group: {doc.group.describe()}", "matrix:"]
    for row in doc.theta.format_grid():
        lines.append("  " + ", ".join(row))
    for key in ("config", "omega"):
        c = getattr(doc, key)
        if c is not None:
            lines.append(f"{key}:")
            lines.extend(format_configuration(c))
    if doc.radius is not None:
        lines.append(f"radius: {doc.radius}")
    if doc.properties:
        lines.append(f"properties: {', '.join(doc.properties)}")
    if doc.seed is not None:
        lines.append(f"seed: {doc.seed}")
    return "\n".join(lines) + "\n"
