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
from functools import cached_property
from typing import List, Optional

from hosh import Hosh

from synrank.exception import UnknownMeasure
from synrank.explanation import FeatureMapping, RankedExplanation
from synrank.identity import Identified, value2hosh
from synrank.measures.config import DEFAULT_CONFIG, MeasureConfig, SimilarityResult, check_rbo_p
from synrank.measures.standard import jaccard, kendall, rbo, rbo_id, spearman_footrule
from synrank.measures.weighted import Syn, jaccard_weighted, kendall_weighted, rbo_weighted, spearman_weighted

MEASURE_NAMES = ("jaccard", "kendall", "spearman", "rbo")


class Measure(Identified):
    """A named measure with its standard and synonymity-weighted forms

    Identifiers are 'jaccard', 'kendall', 'spearman' and 'rbo@P'.

    >>> Measure.parse("rbo@0.70").id
    'rbo@0.7'
    >>> Measure.parse("Spearman").id
    'spearman'
    >>> Measure.parse("rbo")
    Traceback (most recent call last):
    ...
    synrank.exception.UnknownMeasure: RBO needs its parameter, e.g. 'rbo@0.7' ('rbo').
    """

    def __init__(self, name: str, p: Optional[float] = None):
        if name not in MEASURE_NAMES:
            raise UnknownMeasure(f"Unknown measure '{name}'; expected one of {MEASURE_NAMES} (RBO as 'rbo@P').")
        if (name == "rbo") != (p is not None):
            raise UnknownMeasure(f"Only RBO takes a parameter ({name}, {p}).")
        self.name = name
        self.p = None if p is None else check_rbo_p(float(p))

    @staticmethod
    def parse(text: str) -> "Measure":
        name, sep, p = text.strip().lower().partition("@")
        if name == "rbo" and not sep:
            raise UnknownMeasure(f"RBO needs its parameter, e.g. 'rbo@0.7' ('{text}').")
        if not sep:
            return Measure(name)
        try:
            value = float(p)
        except ValueError:
            raise UnknownMeasure(f"Invalid measure parameter in '{text}'.")
        return Measure(name, value)

    @cached_property
    def id(self) -> str:
        return self.name if self.p is None else rbo_id(self.p)

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("measure", self.id))

    def standard(self, A: RankedExplanation, B: RankedExplanation, config: MeasureConfig = DEFAULT_CONFIG) -> SimilarityResult:
        if self.name == "jaccard":
            return jaccard(A, B)
        if self.name == "kendall":
            return kendall(A, B)
        if self.name == "spearman":
            return spearman_footrule(A, B, config.footrule_penalty)
        return rbo(A, B, self.p, config.rbo_extrapolated)

    def weighted(
        self,
        A: RankedExplanation,
        B: RankedExplanation,
        mapping: FeatureMapping,
        syn: Syn,
        config: MeasureConfig = DEFAULT_CONFIG,
    ) -> SimilarityResult:
        if self.name == "jaccard":
            return jaccard_weighted(A, B, mapping, syn, config)
        if self.name == "kendall":
            return kendall_weighted(A, B, mapping, syn, config)
        if self.name == "spearman":
            return spearman_weighted(A, B, mapping, syn, config)
        return rbo_weighted(A, B, self.p, mapping, syn, config.rbo_extrapolated, config)

    def __eq__(self, other):
        return isinstance(other, Measure) and self.id == other.id

    def __hash__(self):
        return hash(self.id)

    def __repr__(self):
        return f"Measure({self.id})"

    def __str__(self):
        return self.id


def default_measures(config: MeasureConfig = DEFAULT_CONFIG) -> List[Measure]:
    """
    >>> [m.id for m in default_measures()]
    ['jaccard', 'kendall', 'spearman', 'rbo@0.5', 'rbo@0.7', 'rbo@0.9']
    """
    return [Measure("jaccard"), Measure("kendall"), Measure("spearman")] + [Measure("rbo", p) for p in config.rbo_p]


def parse_measures(text: str, config: MeasureConfig = DEFAULT_CONFIG) -> List[Measure]:
    """Comma-separated identifiers; 'all' or an empty string gives the default list

    >>> [m.id for m in parse_measures("jaccard, rbo@0.9")]
    ['jaccard', 'rbo@0.9']
    """
    if not text or text.strip().lower() == "all":
        return default_measures(config)
    measures = []
    for item in text.split(","):
        if item.strip():
            measure = Measure.parse(item)
            if measure not in measures:
                measures.append(measure)
    return measures
