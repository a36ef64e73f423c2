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
import random
from itertools import permutations

from synrank.explanation import AdversarialRecord, RankedExplanation, SubstitutionEvent
from synrank.synonymity import SynonymLexicon

ORIGINAL = ["rash", "body", "worried", "really", "sick", "feeling", "over"]
PERTURBED = ["body", "rash", "alarmed", "feeling", "sickly", "over", "real"]
EVENTS = (SubstitutionEvent(1, "worried", "alarmed"), SubstitutionEvent(2, "sick", "sickly"), SubstitutionEvent(3, "really", "real"))
ORIGINAL_TEXT = "I have a rash all over my body and I am really worried, feeling sick"
PERTURBED_TEXT = "I have a rash all over my body and I am real alarmed, feeling sickly"
POOL = [f"w{i}" for i in range(14)]


def rash_record(**kwargs) -> AdversarialRecord:
    fields = dict(
        id="rash",
        original_text=ORIGINAL_TEXT,
        perturbed_text=PERTURBED_TEXT,
        original_explanation=RankedExplanation.fromtokens(ORIGINAL),
        perturbed_explanation=RankedExplanation.fromtokens(PERTURBED),
        substitutions=EVENTS,
        guiding_measure="jaccard",
        threshold=0.5,
    )
    fields.update(kwargs)
    return AdversarialRecord(**fields)


def random_triple(rnd: random.Random, max_k=8):
    """Random (A, B, substitution log) with a mix of survivors, substitutions, chains and drops"""
    A = rnd.sample(POOL, rnd.randint(1, max_k))
    B = rnd.sample(POOL, rnd.randint(1, max_k))
    origins = [a for a in A if a not in B]
    targets = [b for b in B if b not in A]
    rnd.shuffle(origins)
    rnd.shuffle(targets)
    events, iteration, spare = [], 0, 0
    for origin in origins:
        if targets and rnd.random() < 0.7:
            target = targets.pop()
        else:
            spare += 1
            target = f"gone{spare}"
        if rnd.random() < 0.25:
            spare += 1
            iteration += 1
            events.append((iteration, origin, f"via{spare}"))
            origin = f"via{spare}"
        iteration += 1
        events.append((iteration, origin, target))
    log = tuple(SubstitutionEvent(*e) for e in events)
    return RankedExplanation.fromtokens(A), RankedExplanation.fromtokens(B), log


def random_syn(rnd: random.Random):
    table = {}

    def syn(a, b):
        if a == b:
            return 1.0
        return table.setdefault((a.key, b.key), rnd.choice([0.0, 1.0, rnd.random()]))

    return syn


def permutation_pairs(symbols="abcde"):
    perms = [RankedExplanation.fromtokens(p) for p in permutations(symbols)]
    for A in perms:
        for B in perms:
            yield A, B


def toy_lexicon() -> SynonymLexicon:
    return SynonymLexicon(
        {
            "sick": ["ill", "sickly", "unwell"],
            "worried": ["alarmed", "anxious", "concerned"],
            "really": ["real", "truly", "very"],
            "rash": ["eruption", "hives"],
            "body": ["torso", "frame"],
            "feeling": ["sensing", "perceiving"],
            "pain": ["ache", "soreness", "hurt"],
            "doctor": ["physician", "medic"],
            "tired": ["weary", "exhausted", "fatigued"],
            "fever": ["temperature", "pyrexia"],
        }
    )


VOCABULARY = sorted(toy_lexicon())


# Independent reimplementations used as oracles.
def naive_jaccard(A, B):
    a, b = list(A.keys), list(B.keys)
    return sum(1 for x in a if x in b) / len(set(a + b))


def naive_kendall(A, B):
    a, b = list(A.keys), list(B.keys)
    n = max(len(a), len(b))
    raw = 0
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        raw += x != y
    return max(0.0, 1 - raw / n)


def naive_footrule(A, B, penalty=0.5):
    a, b = list(A.keys), list(B.keys)
    raw = sum(abs(i - b.index(x)) if x in b else penalty * len(a) for i, x in enumerate(a))
    maximum = len(a) ** 2 // 2
    if maximum == 0:
        return 1.0 if raw == 0 else 0.0
    return max(0.0, 1 - raw / maximum)


def naive_rbo(A, B, p, extrapolated=True):
    a, b = list(A.keys), list(B.keys)
    k = max(len(a), len(b))
    total, last = 0.0, 0
    for d in range(1, k + 1):
        last = len(set(a[:d]) & set(b[:d]))
        total += (1 - p) * p ** (d - 1) * last / d
    if extrapolated:
        total += p**k * last / k
    return min(1.0, max(0.0, total))


def naive_rbo_weighted(A, B, p, mapping, syn, extrapolated=True):
    """Scans every (a, b) pair of both prefixes at each depth"""
    a, b = list(A.keys), list(B.keys)
    k = max(len(a), len(b))
    total, last = 0.0, 0.0
    for d in range(1, k + 1):
        last = 0.0
        for x in a[:d]:
            for y in b[:d]:
                if x == y:
                    last += 1
                elif (target := mapping.target_of(x)) is not None and target.key == y:
                    last += syn(A[a.index(x)], B[b.index(y)])
        total += (1 - p) * p ** (d - 1) * last / d
    if extrapolated:
        total += p**k * last / k
    return min(1.0, max(0.0, total))
