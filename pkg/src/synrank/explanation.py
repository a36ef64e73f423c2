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
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from hosh import Hosh

from synrank.exception import DuplicateFeature, EmptyExplanation, InvalidEvent, InvalidFeature, InvalidRecord
from synrank.identity import Identified, value2hosh


@dataclass(frozen=True)
class Feature(Identified):
    """A single word of an explanation

    Comparison, hashing and identity use the case-folded form; 'token' keeps the surface form.

    >>> Feature("Good") == Feature("good")
    True
    >>> Feature(" Rash ").token, Feature(" Rash ").key
    ('Rash', 'rash')
    """

    token: str = field(compare=False)
    key: str = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.token, str):
            raise InvalidFeature(f"Feature token must be a string, not {type(self.token)}.")
        token = self.token.strip()
        if not token:
            raise InvalidFeature(f"Feature token cannot be blank ({self.token!r}).")
        object.__setattr__(self, "token", token)
        object.__setattr__(self, "key", token.casefold())

    @staticmethod
    def of(value: Union[str, "Feature"]) -> "Feature":
        return value if isinstance(value, Feature) else Feature(value)

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("feature", self.key))

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class RankedExplanation(Identified):
    """Ordered features of an explanation; the feature at position i has rank i (1-based)

    >>> e = RankedExplanation.fromtokens(["rash", "body", "worried"])
    >>> e.k, e.rank("body"), e.rank("BODY")
    (3, 2, 2)
    >>> "Rash" in e, "sick" in e
    (True, False)
    >>> print(e)
    [rash, body, worried]
    """

    features: Tuple[Feature, ...]

    def __post_init__(self):
        features = tuple(Feature.of(f) for f in self.features)
        if not features:
            raise EmptyExplanation("An explanation needs at least one feature.")
        seen = {}
        for f in features:
            if f.key in seen:
                raise DuplicateFeature(f"Explanations must have unique features: '{f.token}' collides with '{seen[f.key]}'.")
            seen[f.key] = f.token
        object.__setattr__(self, "features", features)

    @staticmethod
    def fromtokens(tokens: Iterable[Union[str, Feature]]) -> "RankedExplanation":
        return RankedExplanation(tuple(tokens))

    @property
    def k(self) -> int:
        return len(self.features)

    @cached_property
    def keys(self) -> Tuple[str, ...]:
        return tuple(f.key for f in self.features)

    @cached_property
    def tokens(self) -> Tuple[str, ...]:
        return tuple(f.token for f in self.features)

    @cached_property
    def ranks(self) -> Dict[str, int]:
        """Case-folded token -> 1-based rank"""
        return {key: i for i, key in enumerate(self.keys, start=1)}

    def rank(self, feature: Union[str, Feature]) -> Optional[int]:
        return self.ranks.get(Feature.of(feature).key)

    def prefix(self, depth: int) -> Tuple[str, ...]:
        """Case-folded keys of the top 'depth' features (shorter when the explanation is shorter)"""
        return self.keys[:depth]

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("explanation", self.keys))

    def __len__(self):
        return len(self.features)

    def __iter__(self) -> Iterator[Feature]:
        return iter(self.features)

    def __getitem__(self, item):
        return self.features[item]

    def __contains__(self, item):
        return Feature.of(item).key in self.ranks

    def __str__(self):
        return "[" + ", ".join(self.tokens) + "]"


def parse_explanation(lines: Iterable[str]) -> RankedExplanation:
    """Build an explanation from tokens given in rank order

    >>> parse_explanation(["rash", "body", "worried", "really", "sick", "feeling", "over"]).k
    7
    >>> parse_explanation(["a", "A"])
    Traceback (most recent call last):
    ...
    synrank.exception.DuplicateFeature: Explanations must have unique features: 'A' collides with 'a'.
    """
    return RankedExplanation.fromtokens(list(lines))


@dataclass(frozen=True)
class SubstitutionEvent(Identified):
    """Single-word replacement applied at a given iteration of an attack

    >>> SubstitutionEvent(1, "worried", "alarmed")
    SubstitutionEvent(iteration=1, original_token=Feature(token='worried'), replacement_token=Feature(token='alarmed'))
    """

    iteration: int
    original_token: Feature
    replacement_token: Feature

    def __post_init__(self):
        if isinstance(self.iteration, bool) or not isinstance(self.iteration, int) or self.iteration < 1:
            raise InvalidEvent(f"Iteration must be a positive integer ({self.iteration}).")
        original, replacement = Feature.of(self.original_token), Feature.of(self.replacement_token)
        if original == replacement:
            raise InvalidEvent(f"A substitution must change the token ({original.token} → {replacement.token}).")
        object.__setattr__(self, "original_token", original)
        object.__setattr__(self, "replacement_token", replacement)

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("event", self.iteration, self.original_token.key, self.replacement_token.key))


@dataclass(frozen=True)
class AdversarialRecord:
    """One attack instance: texts, both explanations and the substitution log

    'id' names the record; its content identifier is 'hosh'.
    """

    id: str
    original_text: str
    perturbed_text: str
    original_explanation: RankedExplanation
    perturbed_explanation: RankedExplanation
    substitutions: Tuple[SubstitutionEvent, ...] = ()
    guiding_measure: str = "jaccard"
    threshold: float = 0.5
    reported_final_similarity: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvalidRecord(f"Record id must be a non-empty string ({self.id!r}).")
        substitutions = tuple(self.substitutions)
        for previous, event in zip(substitutions, substitutions[1:]):
            if event.iteration <= previous.iteration:
                raise InvalidRecord(
                    f"Substitutions of record '{self.id}' must have strictly increasing iterations "
                    f"({previous.iteration} then {event.iteration})."
                )
        object.__setattr__(self, "substitutions", substitutions)
        threshold = float(self.threshold)
        if not 0 <= threshold <= 1:
            raise InvalidRecord(f"Threshold of record '{self.id}' must be a fraction ({self.threshold}).")
        object.__setattr__(self, "threshold", threshold)
        if self.reported_final_similarity is not None:
            object.__setattr__(self, "reported_final_similarity", float(self.reported_final_similarity))

    @cached_property
    def hosh(self) -> Hosh:
        h = self.original_explanation * self.perturbed_explanation
        for event in self.substitutions:
            h *= event.hosh
        return h * value2hosh(("record", self.id, self.guiding_measure, self.threshold))


@dataclass(frozen=True)
class FeatureMapping:
    """Pairing between the features of an original explanation A and a perturbed explanation B

    'pairs' follows the order of A; a target of None is the null mapping.
    'unmapped_targets' follows the order of B.
    """

    pairs: Tuple[Tuple[Feature, Optional[Feature]], ...]
    unmapped_targets: Tuple[Feature, ...] = ()

    @cached_property
    def targets(self) -> Dict[str, Optional[Feature]]:
        """Case-folded origin -> target feature (or None)"""
        return {origin.key: target for origin, target in self.pairs}

    def target_of(self, origin: Union[str, Feature]) -> Optional[Feature]:
        return self.targets.get(Feature.of(origin).key)

    @cached_property
    def survivors(self) -> Tuple[Feature, ...]:
        return tuple(o for o, t in self.pairs if t is not None and t == o)

    @cached_property
    def substituted(self) -> Tuple[Tuple[Feature, Feature], ...]:
        """Mapped pairs whose target differs from the origin"""
        return tuple((o, t) for o, t in self.pairs if t is not None and t != o)

    @cached_property
    def nulls(self) -> Tuple[Feature, ...]:
        return tuple(o for o, t in self.pairs if t is None)

    def __len__(self):
        return len(self.pairs)
