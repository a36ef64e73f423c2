#  Copyright (c) 2023. The synrank contributors.
#  This file is part of the synrank project.
#
#  synrank is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  synrank is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with synrank.  If not, see <http://www.gnu.org/licenses/>.
#
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

from hosh import Hosh

from synrank.exception import InvalidParameter
from synrank.identity import Identified, value2hosh

JACCARD_DENOMINATORS = ("unadjusted", "adjusted")
ZERO_SYNONYMITY_RULES = ("mapped", "null")


def check_rbo_p(p: float) -> float:
    if not 0 < p < 1:
        raise InvalidParameter(f"RBO parameter p must lie in (0, 1): {p}")
    return p


@dataclass(frozen=True)
class MeasureConfig(Identified):
    """Knobs shared by all measures

    'footrule_penalty' is a factor of |A|: the default 0.5 charges k/2 per dropped feature.
    'zero_synonymity' decides how a substituted pair scoring Syn = 0 is weighted:
    'mapped' keeps it as a mapped pair (the literal weighted formulas), 'null' treats it as dropped,
    the exact provider always drops such pairs, so every weighted measure reduces to its standard counterpart under it.

    >>> MeasureConfig().rbo_p
    (0.5, 0.7, 0.9)
    >>> MeasureConfig(rbo_p=(1.0,))
    Traceback (most recent call last):
    ...
    synrank.exception.InvalidParameter: RBO parameter p must lie in (0, 1): 1.0
    """

    rbo_p: Tuple[float, ...] = (0.5, 0.7, 0.9)
    footrule_penalty: float = 0.5
    jaccard_denominator: str = "unadjusted"
    rbo_extrapolated: bool = True
    zero_synonymity: str = "mapped"

    def __post_init__(self):
        rbo_p = tuple(float(p) for p in self.rbo_p)
        for p in rbo_p:
            check_rbo_p(p)
        object.__setattr__(self, "rbo_p", rbo_p)
        if not self.footrule_penalty > 0:
            raise InvalidParameter(f"Footrule penalty factor must be positive: {self.footrule_penalty}")
        if self.jaccard_denominator not in JACCARD_DENOMINATORS:
            raise InvalidParameter(f"Jaccard denominator must be one of {JACCARD_DENOMINATORS}: {self.jaccard_denominator}")
        if self.zero_synonymity not in ZERO_SYNONYMITY_RULES:
            raise InvalidParameter(f"Zero-synonymity rule must be one of {ZERO_SYNONYMITY_RULES}: {self.zero_synonymity}")

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(
            (
                "config",
                self.rbo_p,
                float(self.footrule_penalty),
                self.jaccard_denominator,
                bool(self.rbo_extrapolated),
                self.zero_synonymity,
            )
        )


DEFAULT_CONFIG = MeasureConfig()


@dataclass(frozen=True)
class SimilarityResult:
    """Similarity in [0, 1]; distance-based measures also carry their raw and maximum distance"""

    measure: str
    similarity: float
    raw_distance: Optional[float] = None
    max_distance: Optional[float] = None

    def __float__(self):
        return self.similarity


def from_distance(measure: str, raw: float, maximum: float) -> SimilarityResult:
    """1 - raw/maximum, floored at 0

    >>> from_distance("kendall", 1, 3).similarity == 1 - 1 / 3
    True
    >>> from_distance("spearman", 30, 24).similarity
    0.0
    >>> from_distance("spearman", 0, 0).similarity, from_distance("spearman", 0.5, 0).similarity
    (1.0, 0.0)
    """
    if maximum <= 0:
        similarity = 1.0 if raw == 0 else 0.0
    else:
        similarity = max(0.0, 1.0 - raw / maximum)
    return SimilarityResult(measure, similarity, float(raw), float(maximum))


def clamp(value: float) -> float:
    return min(1.0, max(0.0, value))
