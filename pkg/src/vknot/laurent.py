"""Sparse integer Laurent polynomials in two commuting variables ``t`` and ``l``.

Terms are stored as ``{(i, j): coeff}`` meaning ``coeff * t**i * l**j``; zero
coefficients are never stored, so equality is plain dict equality.  Python
ints give exact, unbounded coefficients.

Display order: the constant term comes last, every other term is sorted by
``(i, j)`` descending.  So ``t + t^-1 - 2`` and ``-t^2*l - t^-2*l + 2``.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

Exponent = tuple[int, int]


class LaurentPoly2:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, int], Iterable[tuple[Exponent, int]], None] = None):
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for (i, j), c in items:
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def monomial(cls, coeff: int, i: int = 0, j: int = 0) -> "LaurentPoly2":
        return cls({(i, j): coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    # access

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int = 0) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring operations

    def __add__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return LaurentPoly2(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly2(acc)

    __rmul__ = __mul__

    # substitutions

    def invert_t(self) -> "LaurentPoly2":
        """Substitute ``t -> t^-1``."""
        return LaurentPoly2({(-i, j): c for (i, j), c in self._terms.items()})

    def invert_l(self) -> "LaurentPoly2":
        return LaurentPoly2({(i, -j): c for (i, j), c in self._terms.items()})

    def set_l_to_one(self) -> "LaurentPoly2":
        return LaurentPoly2(((i, 0), c) for (i, j), c in self._terms.items())

    def fold_abs_l(self) -> "LaurentPoly2":
        """Replace every ``l^q`` by ``l^|q|``."""
        return LaurentPoly2(((i, abs(j)), c) for (i, j), c in self._terms.items())

    def evaluate(self, t, l=1):
        return sum(c * t ** i * l ** j for (i, j), c in self._terms.items())

    # rendering

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        keys = sorted(self._terms, key=lambda k: (k == (0, 0), -k[0], -k[1]))
        return [(i, j, self._terms[(i, j)]) for i, j in keys]

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for n, (i, j, c) in enumerate(self.sorted_terms()):
            body = "*".join(v for v in (_power("t", i), _power("l", j)) if v)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if n == 0:
                out.append(text if c > 0 else "-" + text)
            else:
                out.append(("+ " if c > 0 else "- ") + text)
        return " ".join(out)

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for i, j, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, triples: Iterable[Iterable[int]]) -> "LaurentPoly2":
        return cls(((i, j), c) for i, j, c in triples)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        """Inverse of :meth:`to_string`; also tolerates ``t^{-1}`` braces and ``ℓ``."""
        s = text.replace("ℓ", "l").replace("{", "").replace("}", "")
        s = "".join(s.split())
        if s in ("", "0"):
            return cls()
        # split before every +/- that is not an exponent sign
        pieces = re.split(r"(?<!\^)(?=[+-])", s)
        acc: dict[Exponent, int] = {}
        for piece in pieces:
            if not piece:
                continue
            m = _TERM.fullmatch(piece)
            if m is None:
                raise ValueError(f"cannot parse term {piece!r} in {text!r}")
            sign = -1 if m["sign"] == "-" else 1
            coeff = int(m["coeff"]) if m["coeff"] else 1
            i = j = 0
            for fm in _FACTOR.finditer(m["rest"] or ""):
                e = int(fm["exp"]) if fm["exp"] is not None else 1
                if fm["var"] == "t":
                    i += e
                else:
                    j += e
            if not m["coeff"] and not m["rest"]:
                raise ValueError(f"empty term in {text!r}")
            acc[(i, j)] = acc.get((i, j), 0) + sign * coeff
        return cls(acc)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_string()!r})"


_FACTOR_RE = r"[tl](?:\^-?\d+)?"
_TERM = re.compile(
    rf"(?P<sign>[+-]?)(?:(?P<coeff>\d+)(?:\*(?=[tl]))?)?(?P<rest>{_FACTOR_RE}(?:\*?{_FACTOR_RE})*)?"
)
_FACTOR = re.compile(r"(?P<var>[tl])(?:\^(?P<exp>-?\d+))?")


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _coerce(x):
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, int):
        return LaurentPoly2.constant(x)
    return NotImplemented


# functional spellings

def monomial(coeff: int, i: int = 0, j: int = 0) -> LaurentPoly2:
    return LaurentPoly2.monomial(coeff, i, j)


def add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def negate(p: LaurentPoly2) -> LaurentPoly2:
    return -p


def invert_t(p: LaurentPoly2) -> LaurentPoly2:
    return p.invert_t()


def set_l_to_one(p: LaurentPoly2) -> LaurentPoly2:
    return p.set_l_to_one()


def fold_abs_l(p: LaurentPoly2) -> LaurentPoly2:
    return p.fold_abs_l()


def to_string(p: LaurentPoly2) -> str:
    return p.to_string()


P = LaurentPoly2.parse
