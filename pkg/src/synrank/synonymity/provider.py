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
from typing import Union

from hosh import Hosh

from synrank.explanation import Feature
from synrank.identity import Identified, value2hosh


class SynonymityProvider(Identified):
    """Syn(a, b) → [0, 1] with Syn(x, x) = 1

    Providers are queried as Syn(origin, target); symmetry is not assumed.
    Subclasses implement 'score' for distinct case-folded tokens.
    When 'drops_non_synonyms' is set, weighted measures treat a substituted pair scoring 0 as a dropped feature.
    """

    kind: str = ""
    drops_non_synonyms: bool = False

    def __init__(self, name: str = None):
        self.name = name or self.kind

    def __call__(self, a: Union[str, Feature], b: Union[str, Feature]) -> float:
        a, b = Feature.of(a), Feature.of(b)
        if a == b:
            return 1.0
        return self.score(a.key, b.key)

    def score(self, a: str, b: str) -> float:  # pragma: no cover
        raise NotImplementedError

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("provider", self.kind))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.name})"


class ExactSynonymity(SynonymityProvider):
    """Degenerate provider: only identical tokens are synonyms

    >>> syn = ExactSynonymity()
    >>> syn("rash", "rash"), syn("rash", "body"), syn("Good", "good")
    (1.0, 0.0, 1.0)
    """

    kind = "exact"
    drops_non_synonyms = True

    def score(self, a: str, b: str) -> float:
        return 0.0


EXACT = ExactSynonymity()
syn_exact = EXACT
