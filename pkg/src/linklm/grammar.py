"""Core link-grammar vocabulary: connectors, disjunct expressions, lexicons.

A lexicon maps words to and/or expressions over typed, directional
connectors.  Expressions expand into disjuncts, the flat connector lists a
word may satisfy inside a linkage.  The reserved pseudo-term ``TT`` closes
connectors that end up with no partner; it is never a lexicon word.

Lexicon source syntax, one statement per entry::

    word [word ...]: EXPR;

where EXPR is built from connectors such as ``S+`` or ``D-`` combined with
``&`` and ``or`` (``or`` binds looser; parentheses override).  ``%`` starts
a comment running to end of line.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

TT = "TT"  # reserved pseudo-term that closes an unmatched connector

LEFT = "-"
RIGHT = "+"

_LABEL_RE = re.compile(r"[A-Z][A-Z0-9]*\Z")
_CONNECTOR_RE = re.compile(r"([A-Z][A-Z0-9]*)([+-])\Z")
_WORD_BREAK = set(" \t\r\n%:;()&")


class LexiconSyntaxError(ValueError):
    """Malformed lexicon source; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True, order=True)
class Connector:
    """A typed half-link: ``label`` plus a polarity.

    ``+`` seeks a partner to the right, ``-`` to the left.
    """

    label: str
    direction: str

    def __post_init__(self):
        if not _LABEL_RE.match(self.label):
            raise ValueError(f"invalid connector label {self.label!r}")
        if self.direction not in (LEFT, RIGHT):
            raise ValueError(f"invalid connector direction {self.direction!r}")

    @property
    def opposite(self) -> "Connector":
        return Connector(self.label, LEFT if self.direction == RIGHT else RIGHT)

    def __str__(self) -> str:
        return self.label + self.direction

    @staticmethod
    def parse(text: str) -> "Connector":
        m = _CONNECTOR_RE.match(text)
        if not m:
            raise ValueError(f"invalid connector {text!r}")
        return Connector(m.group(1), m.group(2))


def connector_match(a: Connector, b: Connector) -> bool:
    """True iff the two connectors can form a link: same label, opposite sides."""
    return a.label == b.label and a.direction != b.direction


@dataclass(frozen=True)
class ExprLeaf:
    connector: Connector


@dataclass(frozen=True)
class ExprAnd:
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("AND node needs at least two children")


@dataclass(frozen=True)
class ExprOr:
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("OR node needs at least two children")


# A disjunct expression is any of the three node types above.
DisjunctExpr = ExprLeaf | ExprAnd | ExprOr

# One satisfying alternative of an expression: an ordered connector tuple.
# Connectors earlier in the tuple attach closer to the word than later
# same-side connectors.
Disjunct = tuple


def expand_disjuncts(expr: DisjunctExpr) -> list[Disjunct]:
    """All distinct flattened alternatives of ``expr``, left to right.

    ``or`` picks one child, ``&`` concatenates all children in order, a leaf
    is itself.  Duplicates are removed, first occurrence wins.
    """
    out = []
    seen = set()
    for alt in _alternatives(expr):
        if alt not in seen:
            seen.add(alt)
            out.append(alt)
    return out


def _alternatives(expr: DisjunctExpr) -> list[Disjunct]:
    if isinstance(expr, ExprLeaf):
        return [(expr.connector,)]
    if isinstance(expr, ExprAnd):
        alts = [()]
        for child in expr.children:
            alts = [a + b for a in alts for b in _alternatives(child)]
        return alts
    alts = []
    for child in expr.children:
        alts.extend(_alternatives(child))
    return alts


def connectors_of(expr: DisjunctExpr) -> list[Connector]:
    """All connector leaves in expression order, with multiplicity."""
    if isinstance(expr, ExprLeaf):
        return [expr.connector]
    out = []
    for child in expr.children:
        out.extend(connectors_of(child))
    return out


def expr_to_text(expr: DisjunctExpr) -> str:
    """Render an expression in lexicon syntax; compound children get parens."""
    if isinstance(expr, ExprLeaf):
        return str(expr.connector)
    sep = " & " if isinstance(expr, ExprAnd) else " or "
    parts = []
    for child in expr.children:
        text = expr_to_text(child)
        if not isinstance(child, ExprLeaf):
            text = f"({text})"
        parts.append(text)
    return sep.join(parts)


@dataclass(frozen=True)
class LexiconEntry:
    terms: tuple
    expr: DisjunctExpr

    def __post_init__(self):
        if not self.terms:
            raise ValueError("lexicon entry with no terms")
        if len(set(self.terms)) != len(self.terms):
            raise ValueError(f"duplicate term within entry: {self.terms}")


class Lexicon:
    """An immutable list of entries plus a word -> expressions index.

    A word may appear in several entries; lookups return every expression,
    in entry order, and the caller tries each.  ``TT`` is rejected as a word.
    """

    def __init__(self, entries: list[LexiconEntry] | tuple):
        self.entries = tuple(entries)
        index: dict[str, list[int]] = {}
        for i, entry in enumerate(self.entries):
            for term in entry.terms:
                if term == TT:
                    raise ValueError(f"{TT!r} is reserved and cannot be a lexicon word")
                index.setdefault(term, []).append(i)
        self._index = {w: tuple(ids) for w, ids in index.items()}

    @property
    def words(self) -> tuple:
        return tuple(self._index)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Lexicon) and self.entries == other.entries

    def entry_ids(self, word: str) -> tuple:
        """Indices into ``entries`` of every entry containing ``word``."""
        try:
            return self._index[word]
        except KeyError:
            raise KeyError(f"word {word!r} not in lexicon") from None

    def lookup(self, word: str) -> list[DisjunctExpr]:
        return [self.entries[i].expr for i in self.entry_ids(word)]

    def max_connector_set(self, word: str) -> tuple:
        """The word's maximal connector multiset across all its expressions.

        Per (label, direction) the largest multiplicity any single expression
        carries, ordered by first appearance.  This is the connector set a
        generator expands when the word is a tree root.
        """
        order: list[Connector] = []
        best: Counter = Counter()
        for expr in self.lookup(word):
            counts = Counter(connectors_of(expr))
            for c in connectors_of(expr):
                if c not in best:
                    order.append(c)
                    best[c] = counts[c]
            for c, n in counts.items():
                if n > best[c]:
                    best[c] = n
        out = []
        for c in order:
            out.extend([c] * best[c])
        return tuple(out)

    def carriers(self, connector: Connector) -> tuple:
        """Words carrying a connector that matches ``connector``, sorted."""
        want = connector.opposite
        found = [w for w in self._index if want in set(self.max_connector_set(w))]
        return tuple(sorted(found))


def lexicon_to_text(lexicon: Lexicon) -> str:
    lines = [
        f"{' '.join(entry.terms)}: {expr_to_text(entry.expr)};"
        for entry in lexicon.entries
    ]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Lexicon source parsing


@dataclass(frozen=True)
class _Token:
    kind: str  # WORD or one of : ; ( ) &
    text: str
    line: int
    column: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == "%":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in ":;()&":
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
        else:
            start, start_col = i, col
            while i < n and text[i] not in _WORD_BREAK:
                i += 1
                col += 1
            tokens.append(_Token("WORD", text[start:i], line, start_col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def fail(self, message, token=None):
        tok = token if token is not None else self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", "", 1, 1)
            raise LexiconSyntaxError(
                message + ", found end of input", last.line, last.column + len(last.text)
            )
        raise LexiconSyntaxError(f"{message}, found {tok.text!r}", tok.line, tok.column)

    def parse_lexicon(self) -> Lexicon:
        entries = []
        while self.peek() is not None:
            entries.append(self.parse_entry())
        return Lexicon(entries)

    def parse_entry(self) -> LexiconEntry:
        words = []
        while True:
            tok = self.peek()
            if tok is None:
                self.fail("expected ':' after entry words")
            if tok.kind == ":":
                self.next()
                break
            if tok.kind != "WORD":
                self.fail("expected a word or ':'")
            if tok.text in words:
                raise LexiconSyntaxError(
                    f"duplicate word {tok.text!r} within one entry", tok.line, tok.column
                )
            words.append(tok.text)
            self.next()
        if not words:
            self.fail("entry has no words before ':'")
        expr = self.parse_or()
        tok = self.peek()
        if tok is None or tok.kind != ";":
            self.fail("expected ';' after expression")
        self.next()
        return LexiconEntry(tuple(words), expr)

    def parse_or(self) -> DisjunctExpr:
        parts = [self.parse_and()]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "WORD" and tok.text == "or":
                self.next()
                parts.append(self.parse_and())
            else:
                break
        return parts[0] if len(parts) == 1 else ExprOr(tuple(parts))

    def parse_and(self) -> DisjunctExpr:
        parts = [self.parse_atom()]
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "&":
                self.next()
                parts.append(self.parse_atom())
            else:
                break
        return parts[0] if len(parts) == 1 else ExprAnd(tuple(parts))

    def parse_atom(self) -> DisjunctExpr:
        tok = self.peek()
        if tok is None:
            self.fail("expected a connector or '('")
        if tok.kind == "(":
            self.next()
            expr = self.parse_or()
            closing = self.peek()
            if closing is None or closing.kind != ")":
                self.fail("expected ')'")
            self.next()
            return expr
        if tok.kind != "WORD" or tok.text == "or":
            self.fail("expected a connector or '('")
        m = _CONNECTOR_RE.match(tok.text)
        if not m:
            self.fail(f"expected a connector like 'S+' or 'D-'")
        self.next()
        return ExprLeaf(Connector(m.group(1), m.group(2)))


def parse_lexicon(text: str) -> Lexicon:
    """Parse lexicon source text into a :class:`Lexicon`.

    Raises :class:`LexiconSyntaxError` with line and column on malformed
    input, including duplicate words within one entry.
    """
    return _Parser(_tokenize(text)).parse_lexicon()
