"""Transcribed example diagrams and the K_n / MK_n mutant family."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .codec import OVER, UNDER, GaussCode, Pass, parse
from .laurent import LaurentPoly2


class UnknownFixture(LookupError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    code: GaussCode
    expected: dict

    def names(self) -> dict[int, str]:
        return {int(k): v for k, v in self.expected.get("names", {}).items()}

    def poly(self, key: str, n: int | None = None) -> LaurentPoly2:
        """Expected polynomial ``key`` (``"P"``, ``"W"``) or ``key^n`` (``"L"``, ``"F"``)."""
        value = self.expected[key] if n is None else self.expected[key][str(n)]
        return as_poly(value)


def as_poly(value) -> LaurentPoly2:
    if isinstance(value, str):
        return LaurentPoly2.parse(value)
    return LaurentPoly2.from_json(value)


@lru_cache(maxsize=None)
def _load() -> dict[str, Fixture]:
    text = resources.files("vknot").joinpath("data/fixtures.txt").read_text(encoding="utf-8")
    out = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, expected = line.split("\t")
        out[name] = Fixture(name, parse(code), json.loads(expected))
    return out


def fixture_names() -> list[str]:
    return list(_load())


def fixture(name: str) -> Fixture:
    try:
        return _load()[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(_load())}") from None


def family_kn(n: int, mutant: bool = False) -> GaussCode:
    """Gauss code of ``K_n`` (or its positive-reflection mutant ``MK_n``).

    The single crossing ``c`` of the four-crossing base knot is replaced by a
    twist of ``n`` negative crossings ``c_1 .. c_n``; crossing ``d`` changes
    sign with the parity of ``n``.  Labels: ``a = 1``, ``b = 2``,
    ``c_k = 2 + k``, ``d = n + 3``, so ``n = 1`` gives the base knot labels.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    a, b, d = 1, 2, n + 3
    d_sign = 1 if n % 2 else -1

    def c(k: int) -> int:
        return 2 + k

    def twist(k: int, first_strand: bool) -> str:
        odd_over = OVER if first_strand else UNDER
        odd_under = UNDER if first_strand else OVER
        return odd_over if k % 2 else odd_under

    # K_n: the first twist strand goes over on odd c_k; the mutant swaps this.
    up = not mutant
    strand1 = [Pass(c(k), twist(k, up), -1) for k in range(1, n + 1)]
    strand2 = [Pass(c(k), twist(k, not up), -1) for k in range(n, 0, -1)]
    hi, lo = (OVER, UNDER) if not mutant else (UNDER, OVER)
    tail = [
        Pass(a, lo, 1), Pass(b, lo, 1), Pass(d, lo, d_sign),
        Pass(a, hi, 1), Pass(b, hi, 1),
    ]
    return GaussCode(tuple(strand1 + [Pass(d, hi, d_sign)] + strand2 + tail))


def family_labels(n: int) -> dict[str, int]:
    """Letter names of the family's crossings (``c1`` .. ``cn`` for the twist)."""
    names = {"a": 1, "b": 2, "d": n + 3}
    names.update({f"c{k}": 2 + k for k in range(1, n + 1)})
    return names


def random_code(rng: random.Random, n_crossings: int) -> GaussCode:
    """A uniformly shuffled Gauss code with random signs (usually not realizable)."""
    passes = []
    for label in range(1, n_crossings + 1):
        s = rng.choice((1, -1))
        passes += [Pass(label, OVER, s), Pass(label, UNDER, s)]
    rng.shuffle(passes)
    return GaussCode(tuple(passes))
