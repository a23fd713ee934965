"""Statistical language modeling over link grammars."""

from .grammar import (
    TT,
    Connector,
    DisjunctExpr,
    ExprAnd,
    ExprLeaf,
    ExprOr,
    Lexicon,
    LexiconEntry,
    LexiconSyntaxError,
    connector_match,
    connectors_of,
    expand_disjuncts,
    expr_to_text,
    lexicon_to_text,
    parse_lexicon,
)

__all__ = [
    "TT",
    "Connector",
    "DisjunctExpr",
    "ExprAnd",
    "ExprLeaf",
    "ExprOr",
    "Lexicon",
    "LexiconEntry",
    "LexiconSyntaxError",
    "connector_match",
    "connectors_of",
    "expand_disjuncts",
    "expr_to_text",
    "lexicon_to_text",
    "parse_lexicon",
]
