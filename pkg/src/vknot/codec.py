"""Signed Gauss codes.

A virtual knot diagram is stored only through its classical crossings: the
cyclic sequence of over/under passes met while travelling along the
orientation, each pass tagged with the sign of its crossing.  Virtual
crossings leave no trace in this encoding, so every virtual Reidemeister move
(and the semi-virtual move) acts as the identity on a :class:`GaussCode`.

Text grammar::

    code  := token (sep token)* | ''
    token := ('O' | 'U') label sign
    label := [1-9][0-9]*
    sign  := '+' | '-'

``sep`` is an optional comma; whitespace is ignored.  Tokens always end in a
sign, so ``"O1+O2+U1+U2+"`` and ``"O1+, O2+, U1+, U2+"`` parse identically.
Realizability (planarity) is never checked.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

OVER = "O"
UNDER = "U"


class CodecError(ValueError):
    """Base class for invalid Gauss-code input."""


class MalformedToken(CodecError):
    pass


class DuplicateStrand(CodecError):
    pass


class SignMismatch(CodecError):
    pass


class OddOccurrence(CodecError):
    pass


class UnknownCrossing(LookupError):
    pass


@dataclass(frozen=True)
class Pass:
    label: int
    strand: str
    sign: int

    def __post_init__(self):
        if self.strand not in (OVER, UNDER):
            raise MalformedToken(f"strand must be O or U, got {self.strand!r}")
        if self.sign not in (1, -1):
            raise MalformedToken(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.label, int) or self.label < 1:
            raise MalformedToken(f"label must be a positive integer, got {self.label!r}")

    @property
    def is_over(self) -> bool:
        return self.strand == OVER

    def switched(self) -> "Pass":
        """The same pass with over/under exchanged and the sign negated."""
        return Pass(self.label, UNDER if self.is_over else OVER, -self.sign)

    def __str__(self) -> str:
        return f"{self.strand}{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Crossing:
    label: int
    sign: int
    over_position: int
    under_position: int


@dataclass(frozen=True)
class GaussCode:
    """An immutable, validated signed Gauss code (cyclic word of passes)."""

    passes: tuple[Pass, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "passes", tuple(self.passes))
        _validate(self.passes)

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[str, int, int]]) -> "GaussCode":
        return cls(tuple(Pass(label, strand, sign) for strand, label, sign in triples))

    def __len__(self) -> int:
        return len(self.passes)

    def __iter__(self):
        return iter(self.passes)

    def __getitem__(self, i: int) -> Pass:
        return self.passes[i]

    @cached_property
    def crossings(self) -> dict[int, Crossing]:
        """Crossing records keyed by label, in order of first appearance."""
        over, under, sign = {}, {}, {}
        for i, p in enumerate(self.passes):
            (over if p.is_over else under)[p.label] = i
            sign[p.label] = p.sign
        return {lab: Crossing(lab, sign[lab], over[lab], under[lab]) for lab in sign}

    @property
    def labels(self) -> list[int]:
        return list(self.crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.passes) // 2

    @property
    def n_arcs(self) -> int:
        return max(len(self.passes), 1)

    def crossing(self, label: int) -> Crossing:
        try:
            return self.crossings[label]
        except KeyError:
            raise UnknownCrossing(f"no crossing labelled {label} in {self.to_string()!r}") from None

    def sign(self, label: int) -> int:
        return self.crossing(label).sign

    def rotate(self, k: int) -> "GaussCode":
        if not self.passes:
            return self
        k %= len(self.passes)
        return GaussCode(self.passes[k:] + self.passes[:k])

    def relabel(self, mapping: Mapping[int, int]) -> "GaussCode":
        return GaussCode(tuple(Pass(mapping[p.label], p.strand, p.sign) for p in self.passes))

    def canonical(self) -> "GaussCode":
        """Rotation and relabelling with the lexicographically least serialization."""
        if not self.passes:
            return self
        best = None
        for k in range(len(self.passes)):
            rotated = self.rotate(k)
            order: dict[int, int] = {}
            for p in rotated.passes:
                order.setdefault(p.label, len(order) + 1)
            candidate = rotated.relabel(order)
            text = candidate.to_string()
            if best is None or text < best[0]:
                best = (text, candidate)
        return best[1]

    def to_string(self) -> str:
        """Serialize as written, without canonicalization."""
        return "".join(str(p) for p in self.passes)

    def __str__(self) -> str:
        return self.to_string()


_TOKEN = re.compile(r"([OUou])([1-9][0-9]*)([+-])")


def parse(text: str) -> GaussCode:
    """Parse and validate a Gauss code string; labels and rotation are kept as written."""
    compact = "".join(text.split())
    passes = []
    pos = 0
    expect_token = True
    while pos < len(compact):
        if not expect_token and compact[pos] == ",":
            pos += 1
            expect_token = True
            continue
        m = _TOKEN.match(compact, pos)
        if m is None:
            raise MalformedToken(f"bad token at offset {pos}: {compact[pos:pos + 8]!r}")
        strand, label, sign = m.groups()
        passes.append(Pass(int(label), strand.upper(), 1 if sign == "+" else -1))
        pos = m.end()
        expect_token = False
    if passes and expect_token:
        raise MalformedToken("trailing separator")
    return GaussCode(tuple(passes))


def serialize(code: GaussCode) -> str:
    """Canonical string: labels renumbered by first appearance, least rotation."""
    return code.canonical().to_string()


def writhe(code: GaussCode) -> int:
    return sum(c.sign for c in code.crossings.values())


def _validate(passes: tuple[Pass, ...]) -> None:
    seen: dict[int, list[Pass]] = {}
    for p in passes:
        if not isinstance(p, Pass):
            raise MalformedToken(f"expected Pass, got {p!r}")
        seen.setdefault(p.label, []).append(p)
    for label, group in seen.items():
        if len(group) != 2:
            raise OddOccurrence(f"crossing {label} occurs {len(group)} time(s), expected 2")
        first, second = group
        if first.strand == second.strand:
            kind = "over" if first.is_over else "under"
            raise DuplicateStrand(f"crossing {label} appears twice as {kind}")
        if first.sign != second.sign:
            raise SignMismatch(f"crossing {label} has passes with different signs")
