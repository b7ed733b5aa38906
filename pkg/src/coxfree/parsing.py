"""Text input for words and automorphism expressions.

Words are whitespace separated tokens: ``x3``, ``x3^-1`` or ``X3`` in a
free group, ``w2`` in a Coxeter group, and ``e`` for the empty word.

Automorphism expressions compose generators with ``*``, the right factor
acting first::

    P(2,3) * C(1) * S(1,4) * mu
"""

from __future__ import annotations

import re
from functools import reduce
from typing import List, Tuple, Union

from . import automorphisms as aut
from .words import CoxWord, FreeWord, LetterError

_WORD_TOKEN = re.compile(r"\s*(?:(?P<e>e)\b|(?P<x>[xX])(?P<xi>\d+)(?P<inv>\^-1)?|w(?P<wi>\d+))")
_AUT_TOKEN = re.compile(
    r"\s*(?:(?P<op>[PS])\(\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*\)"
    r"|C\(\s*(?P<c>\d+)\s*\)"
    r"|(?P<name>mu|tau|r)\b)"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_word(text: str, kind: str, rank: int) -> Union[FreeWord, CoxWord]:
    if kind not in ("free", "cox"):
        raise ValueError(f"kind must be 'free' or 'cox', got {kind!r}")
    letters: List[int] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected {text[pos:].strip()[:10]!r}", pos)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        pos = m.end()
        if m.group("e"):
            continue
        if m.group("x"):
            if kind != "free":
                raise ParseError("free generator in a Coxeter word", start)
            index = int(m.group("xi"))
            inverted = m.group("x") == "X" or m.group("inv") is not None
            if m.group("x") == "X" and m.group("inv"):
                inverted = False
            letter = -index if inverted else index
        else:
            if kind != "cox":
                raise ParseError("Coxeter generator in a free word", start)
            letter = int(m.group("wi"))
        if not 1 <= abs(letter) <= rank:
            raise LetterError(f"generator index {abs(letter)} out of range 1..{rank} at position {start}")
        letters.append(letter)
    if kind == "free":
        return FreeWord(rank, tuple(letters))
    return CoxWord(rank, tuple(letters))


def parse_images(text: str, rank: int) -> Tuple[FreeWord, ...]:
    """Images of ``x_1..x_rank`` separated by ``;`` or ``,``."""
    parts = re.split(r"[;,]", text)
    if len(parts) != rank:
        raise ParseError(f"expected {rank} images, got {len(parts)}", 0)
    return tuple(parse_word(p, "free", rank) for p in parts)


def parse_free_aut(text: str, rank: int) -> aut.FreeAut:
    return aut.FreeAut(rank, parse_images(text, rank))


def parse_aut(text: str, n: int, wrap: str = aut.WRAP_MOD_N) -> aut.CoxAut:
    """Build a ``CoxAut`` of ``W_n`` from an expression.

    ``r`` is accepted as a name for ``C(1)``, whose image under ``iota`` is
    the inversion of every free generator.
    """
    factors: List[aut.CoxAut] = []
    pos = 0
    text = text.rstrip()
    expect_factor = True
    while pos < len(text):
        if expect_factor:
            m = _AUT_TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"expected a generator, found {text[pos:].strip()[:10]!r}", pos)
            try:
                factors.append(_factor(m, n, wrap))
            except aut.AutomorphismError as exc:
                raise ParseError(str(exc), m.start()) from None
            pos = m.end()
            expect_factor = False
        else:
            m = re.compile(r"\s*\*").match(text, pos)
            if not m:
                raise ParseError("expected '*'", pos)
            pos = m.end()
            expect_factor = True
    if expect_factor:
        raise ParseError("expression is empty or ends with '*'", pos)
    return reduce(aut.compose_cox, factors)


def _factor(m: re.Match, n: int, wrap: str) -> aut.CoxAut:
    if m.group("op") == "P":
        return aut.partial_conj(n, int(m.group("a")), int(m.group("b")))
    if m.group("op") == "S":
        return aut.transposition(n, int(m.group("a")), int(m.group("b")))
    if m.group("c") is not None:
        return aut.inner_cox(n, int(m.group("c")))
    name = m.group("name")
    if name == "r":
        return aut.inner_cox(n, 1)
    if name == "mu":
        return aut.mu(n, wrap)
    return aut.tau(n, wrap)
