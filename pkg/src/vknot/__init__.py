"""Index-type invariants of virtual knots computed from signed Gauss codes."""
from .codec import GaussCode, Pass, parse, serialize, writhe
from .invariants import (
    affine_index_poly,
    cheng_labeling,
    index_crossings,
    writhe_poly,
    writhe_table,
)
from .laurent import LaurentPoly2
from .lfpoly import (
    InvariantBundle,
    bundle,
    bundle_to_json,
    cosmetic_verdicts,
    distinguish,
    f_poly,
    l_poly,
    mirror_reverse_check,
    nset,
    t_set,
)
from .transforms import crossing_change, mirror, reverse, smooth_against

__all__ = [
    "GaussCode", "Pass", "parse", "serialize", "writhe",
    "affine_index_poly", "cheng_labeling", "index_crossings", "writhe_poly", "writhe_table",
    "LaurentPoly2",
    "InvariantBundle", "bundle", "bundle_to_json", "cosmetic_verdicts", "distinguish",
    "f_poly", "l_poly", "mirror_reverse_check", "nset", "t_set",
    "crossing_change", "mirror", "reverse", "smooth_against",
]
