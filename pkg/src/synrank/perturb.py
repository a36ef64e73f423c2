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
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cached_property, partial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from synrank.exception import ConflictingChain, InvalidParameter, NoCandidates
from synrank.explanation import AdversarialRecord, Feature, RankedExplanation, SubstitutionEvent
from synrank.harness import success
from synrank.identity import value2hosh
from synrank.mapping import compose_substitutions
from synrank.measures import DEFAULT_CONFIG, Measure, MeasureConfig
from synrank.synonymity import SynonymLexicon

logger = logging.getLogger(__name__)


class ToyExplainer:
    """Deterministic stand-in for a model explainer: ranks the distinct tokens of a document by a static weight

    Tokens missing from the weight table get a pseudo-weight derived from the seed and the token.
    Ties are broken by ascending case-folded token.

    >>> ToyExplainer({"a": 0.9, "b": 0.5, "c": 0.1}, k=2).explain(["a", "b", "a", "c"])
    RankedExplanation(features=(Feature(token='a'), Feature(token='b')))
    >>> ToyExplainer({"x": 0.5, "y": 0.5}, k=5).explain(["y", "x"]).tokens
    ('x', 'y')
    """

    def __init__(self, weights: Mapping[str, float] = None, seed: int = 0, k: int = 10):
        if k < 1:
            raise InvalidParameter(f"Explanation size must be positive: {k}")
        self.weights = {}
        for token, weight in (weights or {}).items():
            if not 0 <= weight <= 1:
                raise InvalidParameter(f"Importance of '{token}' must lie in [0, 1]: {weight}")
            self.weights[Feature.of(token).key] = float(weight)
        self.seed = seed
        self.k = k
        self._fallback: Dict[str, float] = {}

    def weight(self, token: str) -> float:
        key = Feature.of(token).key
        if key in self.weights:
            return self.weights[key]
        if key not in self._fallback:
            self._fallback[key] = random.Random((value2hosh(self.seed) * value2hosh(key)).id).random()
        return self._fallback[key]

    def explain(self, document: Sequence[str]) -> RankedExplanation:
        if not document:
            raise InvalidParameter("Cannot explain an empty document.")
        first = {}
        for token in document:
            first.setdefault(Feature.of(token).key, token)
        ranked = sorted(first, key=lambda key: (-self.weight(key), key))
        return RankedExplanation.fromtokens(first[key] for key in ranked[: self.k])


def explain(document: Sequence[str], explainer: ToyExplainer) -> RankedExplanation:
    return explainer.explain(document)


@dataclass(frozen=True)
class SimulationConfig:
    """Settings of the greedy attack; 'lexicon' supplies the candidate substitutions"""

    lexicon: Optional[SynonymLexicon] = None
    seed: int = 0
    max_iterations: int = 10
    guiding_measure: str = "jaccard"
    tau: float = 0.5
    k: int = 10
    doc_length: int = 12
    measure_config: MeasureConfig = field(default=DEFAULT_CONFIG, repr=False)

    def __post_init__(self):
        if isinstance(self.max_iterations, bool) or not isinstance(self.max_iterations, int) or self.max_iterations < 1:
            raise InvalidParameter(f"Maximum number of iterations must be a positive integer: {self.max_iterations}")
        if not 0 <= self.tau <= 1:
            raise InvalidParameter(f"Threshold must lie in [0, 1]: {self.tau}")
        if self.k < 1:
            raise InvalidParameter(f"Explanation size must be positive: {self.k}")
        if self.doc_length < 1:
            raise InvalidParameter(f"Document length must be positive: {self.doc_length}")
        if not isinstance(self.seed, int) or not -(2**63) <= self.seed < 2**64:
            raise InvalidParameter(f"Seed must be a 64-bit integer: {self.seed}")
        object.__setattr__(self, "guiding_measure", Measure.parse(self.guiding_measure).id)

    @cached_property
    def measure(self) -> Measure:
        return Measure.parse(self.guiding_measure)


def candidates(
    document: List[str], original_keys: set, events: List[SubstitutionEvent], lexicon: SynonymLexicon, iteration: int
):
    """Every admissible single-word substitution (position, replacement) of the current document"""
    current_keys = {Feature.of(token).key for token in document}
    for position, token in enumerate(document):
        for replacement in sorted(lexicon.synonyms(token)):
            if len(replacement.split()) != 1 or replacement in current_keys or replacement in original_keys:
                continue
            event = SubstitutionEvent(iteration, token, replacement)
            try:
                compose_substitutions(events + [event])
            except ConflictingChain:
                continue
            yield position, replacement, event


def run_attack(document: Sequence[str], explainer: ToyExplainer, config: SimulationConfig, id: str = None) -> AdversarialRecord:
    """Greedy synonym-substitution attack on the explanation of 'document'

    Each iteration applies the single-word substitution that minimizes the guiding standard measure
    between the original explanation and the candidate's explanation
    (ties: earliest position, then smallest replacement). The attack stops on success (similarity < τ),
    when candidates run out, or after 'max_iterations'.

    >>> lexicon = SynonymLexicon({"worried": ["alarmed"]})
    >>> weights = {"rash": 0.9, "worried": 0.8, "alarmed": 0.75, "body": 0.7, "about": 0.1, "on": 0.1}
    >>> explainer = ToyExplainer(weights, k=3)
    >>> record = run_attack(["worried", "about", "rash", "on", "body"], explainer, SimulationConfig(lexicon, tau=1.0))
    >>> record.perturbed_text, str(record.perturbed_explanation), record.reported_final_similarity
    ('alarmed about rash on body', '[rash, alarmed, body]', 0.5)
    """
    original = document = list(document)
    lexicon = config.lexicon or SynonymLexicon()
    if not document:
        raise InvalidParameter("Cannot attack an empty document.")
    if not any(token in lexicon for token in document):
        raise NoCandidates(f"No token of the document appears in the lexicon ({' '.join(document)}).")
    measure, mconfig = config.measure, config.measure_config
    A = explainer.explain(document)
    original_keys = {Feature.of(token).key for token in document}
    B, similarity, events = A, measure.standard(A, A, mconfig).similarity, []
    for iteration in range(1, config.max_iterations + 1):
        if success(similarity, config.tau):
            break
        best = None
        for position, replacement, event in candidates(document, original_keys, events, lexicon, iteration):
            candidate = document[:position] + [replacement] + document[position + 1 :]
            explanation = explainer.explain(candidate)
            s = measure.standard(A, explanation, mconfig).similarity
            if best is None or s < best[0]:
                best = s, candidate, explanation, event
        if best is None:
            logger.debug("Attack exhausted its candidates after %d iteration(s)", iteration - 1)
            break
        similarity, document, B, event = best
        events.append(event)
        logger.debug(
            "Iteration %d: %s → %s, %s = %.4f", iteration, event.original_token, event.replacement_token, measure, similarity
        )
    if id is None:
        id = value2hosh((tuple(A.keys), config.seed, config.guiding_measure, config.tau)).id
    return AdversarialRecord(
        id=id,
        original_text=" ".join(original),
        perturbed_text=" ".join(document),
        original_explanation=A,
        perturbed_explanation=B,
        substitutions=tuple(events),
        guiding_measure=config.guiding_measure,
        threshold=config.tau,
        reported_final_similarity=similarity,
    )


def random_document(
    index: int, vocabulary: Sequence[str], lexicon: SynonymLexicon, config: SimulationConfig
) -> Tuple[str, List[str]]:
    """Record id and document for the given corpus position, containing at least one lexicon headword"""
    h = value2hosh(config.seed) * value2hosh(index)
    rnd = random.Random(h.id)
    document = [rnd.choice(vocabulary) for _ in range(config.doc_length)]
    if not any(token in lexicon for token in document):
        headwords = [token for token in vocabulary if token in lexicon]
        document[rnd.randrange(len(document))] = rnd.choice(headwords)
    return h.id, document


def _simulate(index, vocabulary, explainer, config):
    id, document = random_document(index, vocabulary, config.lexicon, config)
    return run_attack(document, explainer, config, id)


def generate_corpus(
    n: int,
    vocabulary: Iterable[str],
    lexicon: SynonymLexicon = None,
    config: SimulationConfig = None,
    weights: Mapping[str, float] = None,
    jobs: int = 1,
) -> List[AdversarialRecord]:
    """'n' attack records over seeded random documents drawn from 'vocabulary'

    Per-record documents derive from (seed, index), so the corpus is identical for any number of jobs.

    >>> lexicon = SynonymLexicon({"sick": ["ill", "sickly"], "worried": ["alarmed", "anxious"]})
    >>> vocabulary = ["sick", "worried", "rash", "body", "feeling", "over", "really", "days"]
    >>> corpus = generate_corpus(3, vocabulary, lexicon, SimulationConfig(seed=7, k=4, doc_length=6))
    >>> len(corpus), len({r.id for r in corpus})
    (3, 3)
    >>> corpus == generate_corpus(3, vocabulary, lexicon, SimulationConfig(seed=7, k=4, doc_length=6))
    True
    """
    if n < 1:
        raise InvalidParameter(f"Corpus size must be positive: {n}")
    if jobs < 1:
        raise InvalidParameter(f"Number of jobs must be positive: {jobs}")
    config = config or SimulationConfig()
    if lexicon is not None:
        config = replace(config, lexicon=lexicon)
    lexicon = config.lexicon or SynonymLexicon()
    vocabulary = sorted({token.strip() for token in vocabulary if token.strip()})
    if not vocabulary:
        raise InvalidParameter("Vocabulary is empty.")
    if not any(token in lexicon for token in vocabulary):
        raise NoCandidates("No vocabulary token appears in the lexicon.")
    explainer = ToyExplainer(weights, config.seed, config.k)
    task = partial(_simulate, vocabulary=vocabulary, explainer=explainer, config=config)
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(task, range(n), chunksize=max(1, n // (4 * jobs))))
    else:
        records = [task(index) for index in range(n)]
    successes = sum(success(r.reported_final_similarity, config.tau) for r in records)
    logger.info("Simulated %d records, %d successful under %s < %s", n, successes, config.guiding_measure, config.tau)
    return records
