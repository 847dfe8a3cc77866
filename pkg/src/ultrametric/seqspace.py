"""Sequence spaces over finite alphabets and their ultrametrics.

Infinite sequences are stored as a finite prefix followed by a periodic
tail (a constant tail is a period-one block).  Every sequence is kept in a
canonical form -- minimal period, tail rotated to absorb as much of the
prefix as possible -- so two sequences are equal exactly when their
representations are.

Distances come back as :class:`UltrametricValue` objects holding the
agreement depth ``n`` rather than a number; ``.exact()`` evaluates
``rho**n`` (or the n-th entry of a :class:`ScaleTable`) as a Fraction.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Union

from ._exact import Rational, as_fraction

__all__ = [
    "Alphabet",
    "BiSequence",
    "ScaleTable",
    "SymbolSequence",
    "UltrametricValue",
    "agreement_depth",
    "bi_agreement_depth",
    "bishift",
    "d_general",
    "d_rho",
    "d_rho_bi",
    "embed",
    "format_bisequence",
    "format_sequence",
    "parse_bisequence",
    "parse_sequence",
    "shift_insert",
]


@dataclass(frozen=True)
class Alphabet:
    """Symbols ``0 .. size-1`` with a designated basepoint."""

    size: int
    basepoint: int = 0

    def __post_init__(self):
        if self.size < 2:
            raise ValueError(f"an alphabet needs at least two symbols, got {self.size}")
        self.check(self.basepoint)

    def check(self, symbol: int) -> int:
        if not 0 <= symbol < self.size:
            raise ValueError(f"symbol {symbol} outside alphabet of size {self.size}")
        return symbol


BINARY = Alphabet(2)


def _primitive_block(block: tuple[int, ...]) -> tuple[int, ...]:
    n = len(block)
    for k in range(1, n + 1):
        if n % k == 0 and block[:k] * (n // k) == block:
            return block[:k]
    return block


@dataclass(frozen=True)
class SymbolSequence:
    """The one-sided sequence ``prefix + tail + tail + ...`` (terms indexed from 1)."""

    alphabet: Alphabet
    prefix: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self):
        prefix = tuple(self.prefix)
        tail = tuple(self.tail)
        if not tail:
            raise ValueError("the periodic tail must be nonempty")
        for s in prefix + tail:
            self.alphabet.check(s)
        tail = _primitive_block(tail)
        while prefix and prefix[-1] == tail[-1]:
            prefix = prefix[:-1]
            tail = tail[-1:] + tail[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def constant(cls, symbol: int, prefix: Sequence[int] = (), alphabet: Alphabet = BINARY):
        return cls(alphabet, tuple(prefix), (symbol,))

    @classmethod
    def periodic(cls, block: Sequence[int], prefix: Sequence[int] = (), alphabet: Alphabet = BINARY):
        return cls(alphabet, tuple(prefix), tuple(block))

    def __getitem__(self, i: int) -> int:
        """Term ``i`` (1-based)."""
        if i < 1:
            raise IndexError("sequence terms are indexed from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.tail[(i - len(self.prefix) - 1) % len(self.tail)]

    def terms(self, n: int) -> tuple[int, ...]:
        """The first ``n`` terms."""
        return tuple(self[i] for i in range(1, n + 1))

    def drop_first(self) -> SymbolSequence:
        if self.prefix:
            return SymbolSequence(self.alphabet, self.prefix[1:], self.tail)
        return SymbolSequence(self.alphabet, (), self.tail[1:] + self.tail[:1])

    @property
    def is_constant(self) -> bool:
        return not self.prefix and len(self.tail) == 1

    def __str__(self) -> str:
        return format_sequence(self)


def _same_alphabet(a, b) -> None:
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")


def agreement_depth(a: SymbolSequence, b: SymbolSequence) -> int | None:
    """Largest ``n >= 0`` with ``a_i == b_i`` for all ``i <= n``; None if ``a == b``.

    >>> agreement_depth(parse_sequence("01;c0"), parse_sequence("01;c1"))
    2
    """
    _same_alphabet(a, b)
    if a == b:
        return None
    # beyond both prefixes the pair is periodic with period lcm(|tail_a|, |tail_b|)
    bound = max(len(a.prefix), len(b.prefix)) + math.lcm(len(a.tail), len(b.tail))
    for i in range(1, bound + 1):
        if a[i] != b[i]:
            return i - 1
    raise AssertionError("canonical forms differ but the sequences agree")  # pragma: no cover


@dataclass(frozen=True)
class ScaleTable:
    """A strictly decreasing scale ``rho_0 = 1 > rho_1 > ...``.

    Entries past the stored ones continue geometrically with ``ratio``;
    without a ratio, looking them up is an error.
    """

    values: tuple[Fraction, ...]
    ratio: Fraction | None = None

    def __post_init__(self):
        values = tuple(as_fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values or values[0] != 1:
            raise ValueError("a scale table must start with rho_0 = 1")
        if any(v <= 0 for v in values):
            raise ValueError("scale entries must be positive")
        if any(x <= y for x, y in zip(values, values[1:])):
            raise ValueError("scale entries must be strictly decreasing")
        if self.ratio is not None:
            ratio = as_fraction(self.ratio)
            if not 0 < ratio < 1:
                raise ValueError("the extension ratio must lie strictly between 0 and 1")
            object.__setattr__(self, "ratio", ratio)

    @classmethod
    def geometric(cls, rho: Rational | str) -> ScaleTable:
        """The table ``rho_n = rho**n``."""
        return cls((Fraction(1),), rho)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("scale tables are indexed from 0")
        k = len(self.values) - 1
        if n <= k:
            return self.values[n]
        if self.ratio is None:
            raise ValueError(f"depth {n} exceeds the scale table (last index {k}) and no extension rule is set")
        return self.values[k] * self.ratio ** (n - k)


Scale = Union[Fraction, ScaleTable]


@total_ordering
@dataclass(frozen=True)
class UltrametricValue:
    """A distance ``rho**depth`` (or ``table[depth]``); ``depth=None`` means 0."""

    depth: int | None
    scale: Scale

    @property
    def is_zero(self) -> bool:
        return self.depth is None

    def exact(self) -> Fraction:
        if self.depth is None:
            return Fraction(0)
        if isinstance(self.scale, ScaleTable):
            return self.scale[self.depth]
        return self.scale**self.depth

    def __float__(self) -> float:
        return float(self.exact())

    def __lt__(self, other):
        if isinstance(other, UltrametricValue):
            other = other.exact()
        return self.exact() < other

    def __eq__(self, other):
        if isinstance(other, UltrametricValue):
            return self.exact() == other.exact()
        if isinstance(other, (int, Fraction)):
            return self.exact() == other
        return NotImplemented

    def __hash__(self):
        return hash(self.exact())


def _check_rho(rho: Rational | str) -> Fraction:
    rho = as_fraction(rho)
    if rho == 1:
        raise ValueError("rho = 1 gives the discrete metric; use metricprops.discrete_space")
    if rho > 1:
        raise ValueError(f"rho = {rho} > 1 does not give a metric")
    if rho <= 0:
        raise ValueError(f"rho must be positive, got {rho}")
    return rho


def d_rho(a: SymbolSequence, b: SymbolSequence, rho: Rational | str) -> UltrametricValue:
    """``rho**n`` where ``n`` is the agreement depth of ``a`` and ``b``; 0 if equal."""
    return UltrametricValue(agreement_depth(a, b), _check_rho(rho))


def d_general(
    a: SymbolSequence,
    b: SymbolSequence,
    table: ScaleTable,
    sizes: Sequence[int] | None = None,
) -> UltrametricValue:
    """Distance ``table[n]`` for agreement depth ``n``.

    ``sizes`` optionally gives per-index alphabet sizes (index 1 first, the
    last entry repeating); both sequences are checked against them.
    """
    if sizes is not None:
        _check_sizes(a, sizes)
        _check_sizes(b, sizes)
    depth = agreement_depth(a, b)
    if depth is not None:
        table[depth]  # raises if the table cannot reach this depth
    return UltrametricValue(depth, table)


def _check_sizes(a: SymbolSequence, sizes: Sequence[int]) -> None:
    if not sizes or any(s < 2 for s in sizes):
        raise ValueError("every per-index alphabet needs at least two symbols")
    # terms past this index repeat with a period dividing len(tail)
    span = max(len(a.prefix), len(sizes)) + len(a.tail)
    for i in range(1, span + 1):
        size = sizes[min(i, len(sizes)) - 1]
        if a[i] >= size:
            raise ValueError(f"term {i} = {a[i]} outside alphabet of size {size}")


def shift_insert(symbol: int, a: SymbolSequence) -> SymbolSequence:
    """``T_alpha``: prepend ``symbol`` and move every term one place right."""
    a.alphabet.check(symbol)
    return SymbolSequence(a.alphabet, (symbol,) + a.prefix, a.tail)


@dataclass(frozen=True)
class BiSequence:
    """A doubly-infinite sequence equal to the basepoint at every ``i <= start``.

    Term ``start + j`` is ``body[j]`` for ``j >= 1``.  The canonical form
    starts as late as possible; the constant-basepoint sequence uses start 0.
    """

    start: int
    body: SymbolSequence

    def __post_init__(self):
        alpha = self.body.alphabet.basepoint
        start, body = self.start, self.body
        constant_alpha = body.is_constant and body.tail[0] == alpha
        if constant_alpha:
            start = 0
        else:
            while body[1] == alpha:
                body = body.drop_first()
                start += 1
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "body", body)

    @property
    def alphabet(self) -> Alphabet:
        return self.body.alphabet

    def __getitem__(self, i: int) -> int:
        if i <= self.start:
            return self.alphabet.basepoint
        return self.body[i - self.start]

    def __str__(self) -> str:
        return format_bisequence(self)


def embed(a: SymbolSequence) -> BiSequence:
    """Identify a one-sided sequence with the two-sided one that is the basepoint for ``i <= 0``."""
    return BiSequence(0, a)


def bishift(a: BiSequence, k: int = 1) -> BiSequence:
    """The ``k``-fold shift: term ``i`` of the result is term ``i - k`` of ``a``."""
    return BiSequence(a.start + k, a.body)


def bi_agreement_depth(a: BiSequence, b: BiSequence) -> int | None:
    """Largest integer ``n`` with ``a_i == b_i`` for all ``i <= n``; None if equal."""
    _same_alphabet(a, b)
    if a == b:
        return None
    lo = min(a.start, b.start)
    body_a = a.body if a.start == lo else SymbolSequence(
        a.alphabet, (a.alphabet.basepoint,) * (a.start - lo) + a.body.prefix, a.body.tail
    )
    body_b = b.body if b.start == lo else SymbolSequence(
        b.alphabet, (b.alphabet.basepoint,) * (b.start - lo) + b.body.prefix, b.body.tail
    )
    return lo + agreement_depth(body_a, body_b)


def d_rho_bi(a: BiSequence, b: BiSequence, rho: Rational | str) -> UltrametricValue:
    """``rho**n`` for the (possibly negative) agreement depth ``n``; unbounded above."""
    return UltrametricValue(bi_agreement_depth(a, b), _check_rho(rho))


_SEQ_RE = re.compile(r"^\s*([0-9,]*)\s*;\s*(?:c([0-9]+)|\(([0-9,]+)\)\*)\s*$")


def _symbols(text: str, comma: bool) -> tuple[int, ...]:
    if not text:
        return ()
    if comma:
        return tuple(int(s) for s in text.split(","))
    return tuple(int(c) for c in text)


def parse_sequence(text: str, alphabet: Alphabet = BINARY) -> SymbolSequence:
    """Parse ``<prefix>;c<sym>`` or ``<prefix>;(<block>)*``.

    Symbols are single digits for alphabets of up to ten symbols and
    comma-separated otherwise.
    """
    m = _SEQ_RE.match(text)
    if m is None:
        raise ValueError(f"bad sequence literal: {text!r}")
    prefix_text, const, block_text = m.groups()
    comma = alphabet.size > 10
    if not comma and ("," in prefix_text or (block_text and "," in block_text)):
        raise ValueError(f"commas are only used for alphabets larger than 10: {text!r}")
    prefix = _symbols(prefix_text, comma)
    tail = (int(const),) if const is not None else _symbols(block_text, comma)
    return SymbolSequence(alphabet, prefix, tail)


def format_sequence(a: SymbolSequence) -> str:
    sep = "," if a.alphabet.size > 10 else ""
    prefix = sep.join(map(str, a.prefix))
    if len(a.tail) == 1:
        return f"{prefix};c{a.tail[0]}"
    return f"{prefix};({sep.join(map(str, a.tail))})*"


def parse_bisequence(text: str, alphabet: Alphabet = BINARY) -> BiSequence:
    """Parse ``@<start> <sequence-literal>``."""
    m = re.match(r"^\s*@(-?[0-9]+)\s+(.*)$", text)
    if m is None:
        raise ValueError(f"bad bi-sequence literal: {text!r}")
    return BiSequence(int(m.group(1)), parse_sequence(m.group(2), alphabet))


def format_bisequence(a: BiSequence) -> str:
    return f"@{a.start} {format_sequence(a.body)}"
