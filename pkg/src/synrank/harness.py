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
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Dict, Iterable, List, MutableMapping, Optional, Sequence, Tuple, Union

from synrank.cache import Missing, fetch, store
from synrank.exception import EmptyCorpus, InvalidParameter, SynRankError, UnknownMeasure
from synrank.explanation import AdversarialRecord
from synrank.mapping import build_mapping
from synrank.measures import DEFAULT_CONFIG, Measure, MeasureConfig
from synrank.synonymity import SynonymityProvider

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLDS = (0.3, 0.4, 0.5, 0.6)

Scores = Dict[Tuple[str, str], Tuple[float, float]]  # (provider name, measure id) -> (base, weighted)


@dataclass(frozen=True)
class ReportRow:
    dataset: str
    measure: str
    provider: str
    tau: float
    base_rate: float
    weighted_rate: float
    base_avg_similarity: Optional[float]
    weighted_avg_similarity: Optional[float]
    n_records: int
    n_successes_base: int
    n_successes_weighted: int


@dataclass(frozen=True)
class EvaluationReport:
    """Success rates and average similarities per (measure, provider, τ) cell

    An average similarity is None exactly when its success count is zero.
    'skipped' lists (record id, reason) for records that could not be evaluated.
    """

    rows: Tuple[ReportRow, ...]
    skipped: Tuple[Tuple[str, str], ...] = ()

    @property
    def n_skipped(self) -> int:
        return len(self.skipped)

    @property
    def providers(self) -> List[str]:
        return list(dict.fromkeys(row.provider for row in self.rows))

    def group(self, provider: str) -> List[ReportRow]:
        return [row for row in self.rows if row.provider == provider]


def success(similarity: float, tau: float, inclusive: bool = False) -> bool:
    """An attack succeeds when it drives the similarity under the threshold

    >>> success(0.35, 0.40), success(0.40, 0.40), success(0.95, 0.30)
    (True, False, False)
    >>> success(0.40, 0.40, inclusive=True)
    True
    """
    if not 0 <= tau <= 1:
        raise InvalidParameter(f"Threshold must lie in [0, 1]: {tau}")
    return similarity <= tau if inclusive else similarity < tau


def cell_id(record: AdversarialRecord, measure: Measure, provider: SynonymityProvider, config: MeasureConfig) -> str:
    return (record.hosh * measure.hosh * provider.hosh * config.hosh).id


def evaluate_record(
    record: AdversarialRecord,
    measure: Union[Measure, str],
    provider: SynonymityProvider,
    config: MeasureConfig = DEFAULT_CONFIG,
    caches: Optional[List[MutableMapping]] = None,
) -> Tuple[float, float]:
    """Standard and synonymity-weighted similarity between the record's explanations

    The guiding measure of the record plays no role: weighting is applied to the final comparison only.
    """
    measure = Measure.parse(measure) if isinstance(measure, str) else measure
    key = None
    if caches:
        key = cell_id(record, measure, provider, config)
        if (cached := fetch(key, caches)) is not Missing:
            return tuple(cached)
    A, B = record.original_explanation, record.perturbed_explanation
    mapping = build_mapping(A, B, record.substitutions)
    result = measure.standard(A, B, config).similarity, measure.weighted(A, B, mapping, provider, config).similarity
    if caches:
        store(key, result, caches)
    return result


def score_record(
    record: AdversarialRecord,
    measures: Sequence[Measure],
    providers: Sequence[SynonymityProvider],
    config: MeasureConfig = DEFAULT_CONFIG,
) -> Scores:
    """Every (provider, measure) cell of one record; the mapping and the standard values are computed once"""
    A, B = record.original_explanation, record.perturbed_explanation
    mapping = build_mapping(A, B, record.substitutions)
    base = {measure.id: measure.standard(A, B, config).similarity for measure in measures}
    scores = {}
    for provider in providers:
        for measure in measures:
            weighted = measure.weighted(A, B, mapping, provider, config).similarity
            scores[provider.name, measure.id] = base[measure.id], weighted
    return scores


def _score_task(record, measures, providers, config):
    try:
        return score_record(record, measures, providers, config), None
    except SynRankError as e:
        return None, f"{e.__class__.__name__}: {e}"


def score_corpus(
    records: Sequence[AdversarialRecord],
    measures: Sequence[Measure],
    providers: Sequence[SynonymityProvider],
    config: MeasureConfig = DEFAULT_CONFIG,
    jobs: int = 1,
    caches: Optional[List[MutableMapping]] = None,
) -> Tuple[List[Optional[Scores]], List[Tuple[str, str]]]:
    """Per-record scores in input order (None for skipped records) and the skip reasons

    Results do not depend on 'jobs'.
    """
    outcomes: List = [None] * len(records)
    pending = []
    for i, record in enumerate(records):
        if caches:
            cached = {}
            for provider in providers:
                for measure in measures:
                    if (hit := fetch(cell_id(record, measure, provider, config), caches)) is Missing:
                        break
                    cached[provider.name, measure.id] = tuple(hit)
            if len(cached) == len(providers) * len(measures):
                outcomes[i] = cached, None
                continue
        pending.append(i)

    task = partial(_score_task, measures=list(measures), providers=list(providers), config=config)
    todo = [records[i] for i in pending]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            computed = list(executor.map(task, todo, chunksize=max(1, len(todo) // (4 * jobs))))
    else:
        computed = [task(record) for record in todo]
    for i, outcome in zip(pending, computed):
        outcomes[i] = outcome
        scores = outcome[0]
        if caches and scores is not None:
            for provider in providers:
                for measure in measures:
                    store(cell_id(records[i], measure, provider, config), scores[provider.name, measure.id], caches)

    scores, skipped = [], []
    for record, (record_scores, reason) in zip(records, outcomes):
        if reason is not None:
            logger.warning("Skipping record '%s': %s", record.id, reason)
            skipped.append((record.id, reason))
        scores.append(record_scores)
    return scores, skipped


def belongs_to_batch(record: AdversarialRecord, measure: Measure, tau: float) -> bool:
    """Whether the record was generated under this guiding measure and threshold"""
    try:
        guiding = Measure.parse(record.guiding_measure)
    except UnknownMeasure:
        return False
    return guiding == measure and math.isclose(record.threshold, tau, abs_tol=1e-9)


def mean(values: List[float]) -> Optional[float]:
    return math.fsum(values) / len(values) if values else None


def aggregate(
    records: Sequence[AdversarialRecord],
    scores: Sequence[Optional[Scores]],
    measures: Sequence[Measure],
    providers: Sequence[str],
    thresholds: Iterable[float],
    dataset: str = "corpus",
    own_batch: bool = False,
    inclusive: bool = False,
) -> List[ReportRow]:
    """Reduce per-record scores into report rows, ordered by provider, measure and ascending τ"""
    valid = [(record, s) for record, s in zip(records, scores) if s is not None]
    rows = []
    for provider in providers:
        for measure in measures:
            for tau in sorted(set(thresholds)):
                cell = [
                    s[provider, measure.id] for record, s in valid if not own_batch or belongs_to_batch(record, measure, tau)
                ]
                base_hits = [b for b, _ in cell if success(b, tau, inclusive)]
                weighted_hits = [w for _, w in cell if success(w, tau, inclusive)]
                n = len(cell)
                rows.append(
                    ReportRow(
                        dataset=dataset,
                        measure=measure.id,
                        provider=provider,
                        tau=tau,
                        base_rate=len(base_hits) / n if n else 0.0,
                        weighted_rate=len(weighted_hits) / n if n else 0.0,
                        base_avg_similarity=mean(base_hits),
                        weighted_avg_similarity=mean(weighted_hits),
                        n_records=n,
                        n_successes_base=len(base_hits),
                        n_successes_weighted=len(weighted_hits),
                    )
                )
    return rows


def evaluate_corpus(
    records: Sequence[AdversarialRecord],
    measures: Sequence[Union[Measure, str]],
    providers: Sequence[SynonymityProvider],
    thresholds: Iterable[float] = DEFAULT_THRESHOLDS,
    config: MeasureConfig = DEFAULT_CONFIG,
    dataset: str = "corpus",
    own_batch: bool = False,
    inclusive: bool = False,
    jobs: int = 1,
    caches: Optional[List[MutableMapping]] = None,
) -> EvaluationReport:
    """Attack success rates and average similarity of successful attacks, before and after weighting

    Averages are taken over the successful records of each column only.
    With 'own_batch', a (measure, τ) cell only aggregates records generated under that guiding measure and threshold.
    """
    records = list(records)
    if not records:
        raise EmptyCorpus("Cannot evaluate an empty corpus.")
    measures = [Measure.parse(m) if isinstance(m, str) else m for m in measures]
    thresholds = sorted(set(float(tau) for tau in thresholds))
    if not thresholds:
        raise InvalidParameter("At least one threshold is needed.")
    for tau in thresholds:
        if not 0 <= tau <= 1:
            raise InvalidParameter(f"Threshold must lie in [0, 1]: {tau}")
    if jobs < 1:
        raise InvalidParameter(f"Number of jobs must be positive: {jobs}")
    scores, skipped = score_corpus(records, measures, providers, config, jobs, caches)
    if len(skipped) == len(records):
        raise EmptyCorpus(f"No valid record among {len(records)}.")
    names = [provider.name for provider in providers]
    rows = aggregate(records, scores, measures, names, thresholds, dataset, own_batch, inclusive)
    return EvaluationReport(tuple(rows), tuple(skipped))


def sensitivity_analysis(
    records: Sequence[AdversarialRecord],
    measures: Sequence[Union[Measure, str]],
    providers: Sequence[SynonymityProvider],
    thresholds: Iterable[float] = DEFAULT_THRESHOLDS,
    config: MeasureConfig = DEFAULT_CONFIG,
    **kwargs,
) -> EvaluationReport:
    """One row group per provider over the same records; base columns are shared by construction"""
    if len(providers) < 2:
        logger.warning("Sensitivity analysis with %d provider(s) degenerates to a plain evaluation.", len(providers))
    if len({provider.name for provider in providers}) != len(providers):
        raise InvalidParameter(f"Provider names must be distinct: {[provider.name for provider in providers]}")
    return evaluate_corpus(records, measures, providers, thresholds, config, **kwargs)


def summarize(report: EvaluationReport):
    """Average over thresholds per (dataset, provider, measure), skipping absent similarities

    Returns a pandas DataFrame with columns dataset, provider, measure, base_rate, syn_rate, base_avg_sim, syn_avg_sim.
    """
    from synrank.serialization.report import report2df

    df = report2df(report)
    summary = df.groupby(["dataset", "provider", "measure"], sort=False)[
        ["base_rate", "syn_rate", "base_avg_sim", "syn_avg_sim"]
    ].mean()
    return summary.reset_index()
