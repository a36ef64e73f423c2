from synrank.measures.config import DEFAULT_CONFIG, MeasureConfig, SimilarityResult
from synrank.measures.registry import Measure, default_measures, parse_measures
from synrank.measures.standard import jaccard, kendall, rbo, spearman_footrule
from synrank.measures.weighted import jaccard_weighted, kendall_weighted, rbo_weighted, spearman_weighted
