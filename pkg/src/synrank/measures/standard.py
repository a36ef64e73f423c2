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
from typing import Sequence

from synrank.explanation import RankedExplanation
from synrank.measures.config import SimilarityResult, check_rbo_p, clamp, from_distance


def jaccard(A: RankedExplanation, B: RankedExplanation) -> SimilarityResult:
    """|A ∩ B| / |A ∪ B| over case-folded features

    >>> A = RankedExplanation.fromtokens(["rash", "body", "worried", "really", "sick", "feeling", "over"])
    >>> B = RankedExplanation.fromtokens(["body", "rash", "alarmed", "feeling", "sickly", "over", "real"])
    >>> jaccard(A, B).similarity
    0.4
    """
    a, b = set(A.keys), set(B.keys)
    return SimilarityResult("jaccard", len(a & b) / len(a | b))


def kendall(A: RankedExplanation, B: RankedExplanation) -> SimilarityResult:
    """Positional disagreements plus the size difference, normalised by the longer length

    >>> A = RankedExplanation.fromtokens(["a", "b", "c"])
    >>> r = kendall(A, RankedExplanation.fromtokens(["a", "b"]))
    >>> r.raw_distance, round(r.similarity, 3)
    (1.0, 0.667)
    """
    raw = sum(1 for a, b in zip(A.keys, B.keys) if a != b) + abs(len(A) - len(B))
    return from_distance("kendall", raw, max(len(A), len(B)))


def footrule_max(A: RankedExplanation) -> int:
    return len(A) ** 2 // 2


def spearman_footrule(A: RankedExplanation, B: RankedExplanation, penalty: float = 0.5) -> SimilarityResult:
    """Displacement of shared features plus 'penalty'·|A| for each feature of A missing from B

    Normalised by ⌊|A|²/2⌋.

    >>> A = RankedExplanation.fromtokens(["a", "b", "c"])
    >>> spearman_footrule(A, RankedExplanation.fromtokens(["c", "b", "a"])).similarity
    0.0
    >>> spearman_footrule(A, A).similarity
    1.0
    """
    raw = 0.0
    for i, key in enumerate(A.keys, start=1):
        j = B.ranks.get(key)
        raw += penalty * len(A) if j is None else abs(i - j)
    return from_distance("spearman", raw, footrule_max(A))


def rbo_series(overlaps: Sequence[float], p: float, extrapolated: bool = True) -> float:
    """(1-p) Σ p^(d-1) X_d/d over depths 1..k, plus p^k X_k/k when extrapolated

    'overlaps' holds X_1..X_k.
    """
    k = len(overlaps)
    total = 0.0
    weight = 1.0
    for d, overlap in enumerate(overlaps, start=1):
        total += weight * overlap / d
        weight *= p
    total *= 1 - p
    if extrapolated:
        total += p**k * overlaps[-1] / k
    return clamp(total)


def overlap_profile(A: RankedExplanation, B: RankedExplanation) -> list:
    """|A[:d] ∩ B[:d]| for d = 1..max(|A|, |B|)"""
    seen_a, seen_b = set(), set()
    overlap, profile = 0, []
    for d in range(max(len(A), len(B))):
        a = A.keys[d] if d < len(A) else None
        b = B.keys[d] if d < len(B) else None
        if a is not None and a == b:
            overlap += 1
        else:
            if a is not None:
                overlap += a in seen_b
                seen_a.add(a)
            if b is not None:
                overlap += b in seen_a
                seen_b.add(b)
        profile.append(overlap)
    return profile


def rbo_id(p: float) -> str:
    return f"rbo@{p:g}"


def rbo(A: RankedExplanation, B: RankedExplanation, p: float, extrapolated: bool = True) -> SimilarityResult:
    """Rank-biased overlap; the shorter list's prefix stops growing past its end

    >>> A = RankedExplanation.fromtokens(["rash", "body", "worried", "really", "sick", "feeling", "over"])
    >>> B = RankedExplanation.fromtokens(["body", "rash", "alarmed", "feeling", "sickly", "over", "real"])
    >>> round(rbo(A, B, 0.7).similarity, 4), round(rbo(A, B, 0.9).similarity, 4)
    (0.4807, 0.5399)
    """
    check_rbo_p(p)
    return SimilarityResult(rbo_id(p), rbo_series(overlap_profile(A, B), p, extrapolated))
