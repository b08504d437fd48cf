"""Classical Reidemeister moves as rewrites of signed Gauss codes.

Virtual crossings are not recorded in a Gauss code, so the virtual moves and
the semi-virtual move act as the identity here; only the three classical
moves need an implementation.  Each move is described by a :class:`MoveSite`
whose ``params`` depend on the kind:

``R1_insert``  ``(gap, over_first, sign)``
    Insert a kink ``O x U x`` (or ``U x O x``) before position ``gap``.
``R1_delete``  ``(label,)``
    Remove a crossing whose two passes are cyclically adjacent.
``R2_insert``  ``(gap1, gap2, over_first, parallel, sign)``
    Insert the bigon of two new crossings ``a`` (sign ``sign``) and ``b``
    (sign ``-sign``).  One strand gets ``O a O b``, the other ``U a U b``
    (parallel strands) or ``U b U a`` (antiparallel).  The fragment placed at
    ``gap1`` is the over one when ``over_first``; with ``gap1 == gap2`` the two
    fragments are placed back to back.
``R2_delete``  ``(a, b)``
    Remove a bigon: opposite signs, adjacent over passes, adjacent under passes.
``R3``  ``(x, y, z)``
    Slide a strand across a triangle.  The top strand meets ``x`` then ``y``
    (or ``y`` then ``x``) as over passes, the middle strand has ``U x`` next to
    ``O z`` and the bottom strand has ``U y`` next to ``U z``.  The move swaps
    each of the three adjacent pairs; signs are unchanged.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .codec import OVER, UNDER, GaussCode, Pass

R1_INSERT = "R1_insert"
R1_DELETE = "R1_delete"
R2_INSERT = "R2_insert"
R2_DELETE = "R2_delete"
R3 = "R3"
KINDS = (R1_INSERT, R1_DELETE, R2_INSERT, R2_DELETE, R3)


class InvalidSite(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    kind: str
    params: tuple

    def __str__(self) -> str:
        return f"{self.kind}{self.params}"


def _r3_patterns() -> frozenset[tuple]:
    """Every (order, sign) pattern a straight-line triangle of three strands can show.

    Three lines with normals 120 degrees apart bound a triangle; we try every
    assignment of the top/middle/bottom roles, every orientation of the
    lines, both sides of the triangle and the plane reflection, and record
    for each strand which of its two crossings comes first together with the
    signs of ``x = top/middle``, ``y = top/bottom`` and ``z = middle/bottom``.
    """
    found = set()
    for side, refl in itertools.product((1, -1), (1, -1)):
        normals = [
            (refl * math.cos(math.radians(a)), math.sin(math.radians(a))) for a in (90, 210, 330)
        ]
        for perm in itertools.permutations(range(3)):
            for flips in itertools.product((1, -1), repeat=3):
                lines = []
                for (nx, ny), f in zip(normals, flips):
                    lines.append(((nx * side, ny * side), (-ny * f, nx * f)))
                top, mid, bot = (lines[k] for k in perm)
                t_x, m_x = _meet(top, mid)
                t_y, b_y = _meet(top, bot)
                m_z, b_z = _meet(mid, bot)
                found.add((
                    t_x < t_y, m_x < m_z, b_y < b_z,
                    _sign(top, mid), _sign(top, bot), _sign(mid, bot),
                ))
    return frozenset(found)


def _meet(l1, l2) -> tuple[float, float]:
    """Line parameters of the intersection point on each of two lines."""
    (p, d), (q, e) = l1, l2
    det = -d[0] * e[1] + d[1] * e[0]
    rx, ry = q[0] - p[0], q[1] - p[1]
    s = (-rx * e[1] + ry * e[0]) / det
    r = (d[0] * ry - d[1] * rx) / det
    return s, r


def _sign(over, under) -> int:
    (_, d), (_, e) = over, under
    return 1 if d[0] * e[1] - d[1] * e[0] > 0 else -1


R3_PATTERNS = _r3_patterns()


def _adjacent(i: int, j: int, m: int) -> bool:
    return (j - i) % m in (1, m - 1)


def _follows(i: int, j: int, m: int) -> bool:
    """True when position ``j`` comes right after ``i`` in the cyclic word."""
    return (j - i) % m == 1


def _r3_site(code: GaussCode, x: int, y: int, z: int) -> bool:
    if len({x, y, z}) != 3:
        return False
    cx, cy, cz = code.crossings[x], code.crossings[y], code.crossings[z]
    m = len(code)
    pairs = (
        (cx.over_position, cy.over_position),
        (cx.under_position, cz.over_position),
        (cy.under_position, cz.under_position),
    )
    if not all(_adjacent(i, j, m) for i, j in pairs):
        return False
    key = tuple(_follows(i, j, m) for i, j in pairs) + (cx.sign, cy.sign, cz.sign)
    return key in R3_PATTERNS


def _gaps(code: GaussCode) -> range:
    return range(max(len(code), 1))


def deletion_sites(code: GaussCode) -> list[MoveSite]:
    """R1_delete, R2_delete and R3 sites (the finitely many non-insert moves)."""
    m = len(code)
    sites = []
    for c in code.crossings.values():
        if _adjacent(c.over_position, c.under_position, m):
            sites.append(MoveSite(R1_DELETE, (c.label,)))
    seen = set()
    for i in range(m):
        p, q = code[i], code[(i + 1) % m]
        if not (p.is_over and q.is_over) or p.label == q.label or p.sign == q.sign:
            continue
        key = frozenset((p.label, q.label))
        if key in seen:
            continue
        cp, cq = code.crossings[p.label], code.crossings[q.label]
        if _adjacent(cp.under_position, cq.under_position, m):
            seen.add(key)
            sites.append(MoveSite(R2_DELETE, tuple(sorted(key))))
    triples = set()
    for i in range(m):
        p, q = code[i], code[(i + 1) % m]
        if not (p.is_over and q.is_over) or p.label == q.label:
            continue
        for x, y in ((p.label, q.label), (q.label, p.label)):
            ux = code.crossings[x].under_position
            for nb in (ux - 1, (ux + 1) % m):
                cand = code[nb]
                if cand.is_over and _r3_site(code, x, y, cand.label):
                    triples.add((x, y, cand.label))
    sites.extend(MoveSite(R3, t) for t in sorted(triples))
    return sites


def enumerate_sites(code: GaussCode, max_crossings: int | None = None) -> list[MoveSite]:
    """Every applicable move, inserts included.

    The R2 insert family grows quadratically with the word length; pass
    ``max_crossings`` to drop inserts that would exceed it.
    """
    n = code.n_crossings
    sites = []
    if max_crossings is None or n + 1 <= max_crossings:
        for g in _gaps(code):
            for over_first in (True, False):
                for s in (1, -1):
                    sites.append(MoveSite(R1_INSERT, (g, over_first, s)))
    sites.extend(deletion_sites(code))
    if max_crossings is None or n + 2 <= max_crossings:
        for g1, g2 in itertools.combinations_with_replacement(_gaps(code), 2):
            for over_first, parallel, s in itertools.product((True, False), (True, False), (1, -1)):
                sites.append(MoveSite(R2_INSERT, (g1, g2, over_first, parallel, s)))
    return sites


def _fresh(code: GaussCode, k: int) -> list[int]:
    top = max(code.crossings, default=0)
    return [top + 1 + i for i in range(k)]


def apply(code: GaussCode, site: MoveSite) -> GaussCode:
    kind, params = site.kind, site.params
    passes = list(code.passes)
    m = len(passes)
    try:
        if kind == R1_INSERT:
            g, over_first, s = params
            _check_gap(code, g)
            (x,) = _fresh(code, 1)
            first, second = (OVER, UNDER) if over_first else (UNDER, OVER)
            passes[g:g] = [Pass(x, first, s), Pass(x, second, s)]
        elif kind == R1_DELETE:
            (x,) = params
            c = code.crossings.get(x)
            if c is None or not _adjacent(c.over_position, c.under_position, m):
                raise InvalidSite(f"{site}: passes of {x} are not adjacent")
            passes = [p for p in passes if p.label != x]
        elif kind == R2_INSERT:
            g1, g2, over_first, parallel, s = params
            _check_gap(code, g1)
            _check_gap(code, g2)
            if g1 > g2:
                raise InvalidSite(f"{site}: gaps must be ordered")
            a, b = _fresh(code, 2)
            over = [Pass(a, OVER, s), Pass(b, OVER, -s)]
            under = [Pass(a, UNDER, s), Pass(b, UNDER, -s)]
            if not parallel:
                under.reverse()
            first, second = (over, under) if over_first else (under, over)
            if g1 == g2:
                passes[g1:g1] = first + second
            else:
                passes[g2:g2] = second
                passes[g1:g1] = first
        elif kind == R2_DELETE:
            a, b = params
            if a not in code.crossings or b not in code.crossings or a == b:
                raise InvalidSite(f"{site}: unknown crossings")
            ca, cb = code.crossings[a], code.crossings[b]
            if not (
                ca.sign == -cb.sign
                and _adjacent(ca.over_position, cb.over_position, m)
                and _adjacent(ca.under_position, cb.under_position, m)
            ):
                raise InvalidSite(f"{site}: not a bigon")
            passes = [p for p in passes if p.label not in (a, b)]
        elif kind == R3:
            x, y, z = params
            if not all(lab in code.crossings for lab in params) or not _r3_site(code, x, y, z):
                raise InvalidSite(f"{site}: not a triangle")
            cx, cy, cz = code.crossings[x], code.crossings[y], code.crossings[z]
            for i, j in (
                (cx.over_position, cy.over_position),
                (cx.under_position, cz.over_position),
                (cy.under_position, cz.under_position),
            ):
                passes[i], passes[j] = passes[j], passes[i]
        else:
            raise InvalidSite(f"unknown move kind {kind!r}")
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InvalidSite):
            raise
        raise InvalidSite(f"{site}: {exc}") from exc
    return GaussCode(tuple(passes))


def _check_gap(code: GaussCode, g) -> None:
    if not isinstance(g, int) or g not in _gaps(code):
        raise InvalidSite(f"gap {g!r} out of range for a word of length {len(code)}")


@dataclass
class Walk:
    start: GaussCode
    seed: int
    final: GaussCode
    trace: list[MoveSite] = field(default_factory=list)


def _sample(code: GaussCode, rng: random.Random, max_crossings: int) -> MoveSite | None:
    """Pick a move kind uniformly among those available, then a site of that kind uniformly."""
    by_kind: dict[str, list[MoveSite]] = {}
    for site in deletion_sites(code):
        by_kind.setdefault(site.kind, []).append(site)
    kinds = []
    n = code.n_crossings
    if n + 1 <= max_crossings:
        kinds.append(R1_INSERT)
    kinds.extend(k for k in (R1_DELETE, R2_DELETE, R3) if k in by_kind)
    if n + 2 <= max_crossings:
        kinds.append(R2_INSERT)
    if not kinds:
        return None
    kind = rng.choice(kinds)
    gaps = len(_gaps(code))
    if kind == R1_INSERT:
        return MoveSite(kind, (rng.randrange(gaps), rng.random() < 0.5, rng.choice((1, -1))))
    if kind == R2_INSERT:
        k = rng.randrange(gaps * (gaps + 1) // 2)
        g1 = 0
        while k >= gaps - g1:
            k -= gaps - g1
            g1 += 1
        g2 = g1 + k
        return MoveSite(
            kind, (g1, g2, rng.random() < 0.5, rng.random() < 0.5, rng.choice((1, -1)))
        )
    return rng.choice(by_kind[kind])


def walk(code: GaussCode, steps: int, seed: int, max_crossings: int = 20) -> Walk:
    """Apply ``steps`` random moves; the trace replays the walk exactly."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    current = code
    trace = []
    for _ in range(steps):
        site = _sample(current, rng, max_crossings)
        if site is None:
            break
        current = apply(current, site)
        trace.append(site)
    return Walk(code, seed, current, trace)


def random_walk(code: GaussCode, steps: int, seed: int, max_crossings: int = 20) -> GaussCode:
    return walk(code, steps, seed, max_crossings).final


def replay(code: GaussCode, trace) -> GaussCode:
    for site in trace:
        code = apply(code, site)
    return code
