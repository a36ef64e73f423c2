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
from typing import Callable, Dict, List, Tuple

from synrank.explanation import Feature, FeatureMapping, RankedExplanation
from synrank.measures.config import DEFAULT_CONFIG, MeasureConfig, SimilarityResult, check_rbo_p, from_distance
from synrank.measures.standard import footrule_max, overlap_profile, rbo_id, rbo_series

Syn = Callable[[Feature, Feature], float]


def credited_pairs(
    mapping: FeatureMapping, syn: Syn, config: MeasureConfig = DEFAULT_CONFIG
) -> List[Tuple[Feature, Feature, float]]:
    """Substituted pairs with their synonymity, in the order of A

    Pairs scoring 0 are left out as if dropped under the 'null' zero-synonymity rule,
    and always for providers that drop non-synonyms (exact matching).
    """
    drop = config.zero_synonymity == "null" or getattr(syn, "drops_non_synonyms", False)
    triples = []
    for a, b in mapping.substituted:
        s = float(syn(a, b))
        if s == 0 and drop:
            continue
        triples.append((a, b, s))
    return triples


def jaccard_weighted(
    A: RankedExplanation, B: RankedExplanation, mapping: FeatureMapping, syn: Syn, config: MeasureConfig = DEFAULT_CONFIG
) -> SimilarityResult:
    """Shared features count 1, substituted pairs count Syn(a, b)

    The adjusted denominator removes one union slot per substituted pair.

    >>> A = RankedExplanation.fromtokens(["a", "b", "c"])
    >>> B = RankedExplanation.fromtokens(["α", "β", "γ"])
    >>> from synrank.mapping import build_mapping
    >>> from synrank.explanation import SubstitutionEvent as Ev
    >>> m = build_mapping(A, B, [Ev(1, "a", "α"), Ev(2, "b", "β"), Ev(3, "c", "γ")])
    >>> table = {"α": 0.9, "β": 0.6, "γ": 0.3}
    >>> syn = lambda x, y: table[y.key]
    >>> round(jaccard_weighted(A, B, m, syn).similarity, 12)
    0.3
    >>> round(jaccard_weighted(A, B, m, syn, MeasureConfig(jaccard_denominator="adjusted")).similarity, 12)
    0.6
    """
    credited = credited_pairs(mapping, syn, config)
    shared = len(set(A.keys) & set(B.keys))
    numerator = shared + sum(s for _, _, s in credited)
    denominator = len(set(A.keys) | set(B.keys))
    if config.jaccard_denominator == "adjusted":
        denominator -= len(credited)
    return SimilarityResult("jaccard", min(1.0, numerator / denominator))


def kendall_weighted(
    A: RankedExplanation, B: RankedExplanation, mapping: FeatureMapping, syn: Syn, config: MeasureConfig = DEFAULT_CONFIG
) -> SimilarityResult:
    """A disagreement at position i costs 1 - Syn(A[i], B[i]) when A[i] is mapped onto B[i]

    >>> from synrank.mapping import build_mapping
    >>> from synrank.explanation import SubstitutionEvent as Ev
    >>> A, B = RankedExplanation.fromtokens(["a", "b"]), RankedExplanation.fromtokens(["x", "b"])
    >>> r = kendall_weighted(A, B, build_mapping(A, B, [Ev(1, "a", "x")]), lambda a, b: 0.8)
    >>> round(r.raw_distance, 12), round(r.similarity, 12)
    (0.2, 0.9)
    """
    credits: Dict[str, Tuple[str, float]] = {a.key: (b.key, s) for a, b, s in credited_pairs(mapping, syn, config)}
    raw = 0.0
    for a, b in zip(A.keys, B.keys):
        if a == b:
            continue
        target, s = credits.get(a, (None, 0.0))
        raw += 1 - s if target == b else 1
    raw += abs(len(A) - len(B))
    return from_distance("kendall", raw, max(len(A), len(B)))


def spearman_weighted(
    A: RankedExplanation, B: RankedExplanation, mapping: FeatureMapping, syn: Syn, config: MeasureConfig = DEFAULT_CONFIG
) -> SimilarityResult:
    """Shared features by displacement, substituted pairs by min(|i-j|/Syn, |A|-1), dropped ones by the penalty

    A substituted pair at the same position costs nothing; with Syn = 0 and a displacement it costs |A| - 1.

    >>> from synrank.mapping import build_mapping
    >>> from synrank.explanation import SubstitutionEvent as Ev
    >>> A = RankedExplanation.fromtokens(list("abcdefg"))
    >>> B = RankedExplanation.fromtokens(list("bxcdefg"))
    >>> r = spearman_weighted(A, B, build_mapping(A, B, [Ev(1, "a", "x")]), lambda a, b: 0.0)
    >>> r.raw_distance
    7.0
    """
    n = len(A)
    cap = n - 1
    penalty = config.footrule_penalty * n
    credits = {a.key: (b.key, s) for a, b, s in credited_pairs(mapping, syn, config)}
    raw = 0.0
    for i, key in enumerate(A.keys, start=1):
        j = B.ranks.get(key)
        if j is not None:
            raw += abs(i - j)
        elif key in credits:
            target, s = credits[key]
            displacement = abs(i - B.ranks[target])
            if displacement == 0:
                continue
            raw += cap if s == 0 else min(displacement / s, cap)
        else:
            raw += penalty
    return from_distance("spearman", raw, footrule_max(A))


def weighted_overlap_profile(
    A: RankedExplanation, B: RankedExplanation, mapping: FeatureMapping, syn: Syn, config: MeasureConfig = DEFAULT_CONFIG
) -> List[float]:
    """X_d plus Syn(a, b) for each substituted pair whose both ends lie within depth d"""
    k = max(len(A), len(B))
    credit_at = [0.0] * (k + 1)
    for a, b, s in credited_pairs(mapping, syn, config):
        credit_at[max(A.ranks[a.key], B.ranks[b.key])] += s
    profile, credit = [], 0.0
    for d, overlap in enumerate(overlap_profile(A, B), start=1):
        credit += credit_at[d]
        profile.append(overlap + credit)
    return profile


def rbo_weighted(
    A: RankedExplanation,
    B: RankedExplanation,
    p: float,
    mapping: FeatureMapping,
    syn: Syn,
    extrapolated: bool = True,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> SimilarityResult:
    """RBO whose prefix intersections also count the synonymity of substituted pairs

    >>> from synrank.mapping import build_mapping
    >>> from synrank.explanation import SubstitutionEvent as Ev
    >>> A, B = RankedExplanation.fromtokens(["a"]), RankedExplanation.fromtokens(["x"])
    >>> rbo_weighted(A, B, 0.7, build_mapping(A, B, [Ev(1, "a", "x")]), lambda a, b: 1.0).similarity
    1.0
    """
    check_rbo_p(p)
    return SimilarityResult(rbo_id(p), rbo_series(weighted_overlap_profile(A, B, mapping, syn, config), p, extrapolated))
