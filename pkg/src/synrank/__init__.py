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
from synrank.explanation import AdversarialRecord, Feature, FeatureMapping, RankedExplanation, SubstitutionEvent
from synrank.explanation import parse_explanation as parse_explanation
from synrank.harness import EvaluationReport, evaluate_corpus, evaluate_record, sensitivity_analysis, success, summarize
from synrank.mapping import build_mapping, compose_substitutions
from synrank.measures import DEFAULT_CONFIG, Measure, MeasureConfig, default_measures, parse_measures
from synrank.perturb import SimulationConfig, ToyExplainer, generate_corpus, run_attack
from synrank.serialization import read_records, read_report, write_records, write_report
from synrank.synonymity import EXACT, SynonymLexicon, load_embedding, load_lexicon, load_provider
