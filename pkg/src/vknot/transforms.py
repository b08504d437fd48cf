"""Gauss-code rewrites: smoothing against orientation, mirror, reverse, crossing change."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .codec import GaussCode, Pass


@dataclass(frozen=True)
class SmoothedDiagram:
    result: GaussCode
    removed_label: int
    flipped_labels: frozenset[int]


def smooth_against(code: GaussCode, label: int) -> SmoothedDiagram:
    """Smooth crossing ``label`` so that the new arcs disagree with the orientation.

    Rotate the word to ``U_c y O_c z``.  The smoothing joins the incoming
    under arc to the outgoing over arc backwards, so the loop ``y`` is
    traversed in reverse while ``z`` keeps its direction: the result is
    ``reverse(y) z``.  A crossing with exactly one pass in ``y`` now has one
    strand reversed, so its sign flips; over/under never changes.
    """
    c = code.crossing(label)
    passes = code.passes
    u = c.under_position
    rotated = passes[u:] + passes[:u]
    o = (c.over_position - u) % len(passes)
    y, z = rotated[1:o], rotated[o + 1:]
    counts = Counter(p.label for p in y)
    flipped = frozenset(lab for lab, k in counts.items() if k == 1)
    out = tuple(
        Pass(p.label, p.strand, -p.sign) if p.label in flipped else p
        for p in (*reversed(y), *z)
    )
    return SmoothedDiagram(GaussCode(out), label, flipped)


def mirror(code: GaussCode) -> GaussCode:
    """Switch every crossing: over and under exchange, signs negate."""
    return GaussCode(tuple(p.switched() for p in code.passes))


def reverse(code: GaussCode) -> GaussCode:
    """Reverse the orientation; signs are unchanged."""
    return GaussCode(tuple(reversed(code.passes)))


def crossing_change(code: GaussCode, label: int) -> GaussCode:
    code.crossing(label)
    return GaussCode(tuple(p.switched() if p.label == label else p for p in code.passes))
