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
from typing import Dict, Iterable, List, Optional, Tuple

from synrank.exception import AmbiguousTarget, ConflictingChain
from synrank.explanation import Feature, FeatureMapping, RankedExplanation, SubstitutionEvent


def compose_substitutions(substitutions: Iterable[SubstitutionEvent]) -> Dict[Feature, Feature]:
    """Collapse each substitution chain into origin → final replacement

    A word replaced again later extends the chain it ends; intermediate tokens disappear.
    Chains that return to their origin vanish.

    >>> ev = SubstitutionEvent
    >>> compose_substitutions([ev(1, "worried", "alarmed")])
    {Feature(token='worried'): Feature(token='alarmed')}
    >>> compose_substitutions([ev(1, "a", "b"), ev(2, "b", "c")])
    {Feature(token='a'): Feature(token='c')}
    >>> compose_substitutions([])
    {}
    >>> compose_substitutions([ev(1, "a", "c"), ev(2, "b", "c")])
    Traceback (most recent call last):
    ...
    synrank.exception.ConflictingChain: Replacement 'c' at iteration 2 is already the current end of the chain started by 'a'.
    """
    chains: Dict[str, Tuple[Feature, Feature]] = {}  # origin key -> (origin, current end)
    ends: Dict[str, str] = {}  # current end key -> origin key
    last = 0
    for event in substitutions:
        if event.iteration <= last:
            raise ConflictingChain(f"Substitutions must be ordered by iteration ({last} then {event.iteration}).")
        last = event.iteration
        original, replacement = event.original_token, event.replacement_token
        if replacement.key in ends:
            origin = chains[ends[replacement.key]][0]
            raise ConflictingChain(
                f"Replacement '{replacement.token}' at iteration {event.iteration} is already the current end "
                f"of the chain started by '{origin.token}'."
            )
        if original.key in ends:
            origin_key = ends.pop(original.key)
            origin = chains[origin_key][0]
        elif original.key in chains:
            raise ConflictingChain(
                f"'{original.token}' was already replaced by '{chains[original.key][1].token}' "
                f"before iteration {event.iteration}."
            )
        else:
            origin_key, origin = original.key, original
        chains[origin_key] = origin, replacement
        ends[replacement.key] = origin_key
    return {origin: end for origin, end in chains.values() if origin != end}


def build_mapping(
    A: RankedExplanation, B: RankedExplanation, substitutions: Iterable[SubstitutionEvent] = ()
) -> FeatureMapping:
    """Pair every feature of A with its survivor, its substitution target in B, or None

    >>> A = RankedExplanation.fromtokens(["x", "y"])
    >>> m = build_mapping(A, RankedExplanation.fromtokens(["x", "z"]))
    >>> [(str(o), t and str(t)) for o, t in m.pairs], [str(f) for f in m.unmapped_targets]
    ([('x', 'x'), ('y', None)], ['z'])
    >>> m = build_mapping(A, RankedExplanation.fromtokens(["x", "w"]), [SubstitutionEvent(1, "y", "w")])
    >>> [(str(o), str(t)) for o, t in m.pairs], m.unmapped_targets
    ([('x', 'x'), ('y', 'w')], ())
    """
    chains = {origin.key: end for origin, end in compose_substitutions(substitutions).items()}
    pairs: List[Tuple[Feature, Optional[Feature]]] = []
    claimed = set()
    for a in A:
        if a in B:
            pairs.append((a, B[B.rank(a) - 1]))
            claimed.add(a.key)
            continue
        end = chains.get(a.key)
        if end is not None and end in B:
            if end in A:
                raise AmbiguousTarget(
                    f"Replacement '{end.token}' of '{a.token}' coincides with a feature of the original explanation."
                )
            pairs.append((a, B[B.rank(end) - 1]))
            claimed.add(end.key)
        else:
            pairs.append((a, None))
    unmapped = tuple(b for b in B if b.key not in claimed)
    return FeatureMapping(tuple(pairs), unmapped)
