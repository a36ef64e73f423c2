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
"""Command-line front end: 'synrank compare|batch-eval|sensitivity|simulate'

Exit codes: 0 success, 1 data error, 2 usage error.
"""
import argparse
import logging
import os
import shelve
import sys
from contextlib import ExitStack
from pathlib import Path
from typing import List

from synrank.exception import SynRankError
from synrank.harness import DEFAULT_THRESHOLDS, evaluate_corpus, sensitivity_analysis, success
from synrank.mapping import build_mapping
from synrank.measures import Measure, MeasureConfig, parse_measures
from synrank.measures.config import JACCARD_DENOMINATORS, ZERO_SYNONYMITY_RULES
from synrank.perturb import SimulationConfig, generate_corpus
from synrank.serialization import (
    read_records,
    read_substitutions,
    read_tokens,
    render_table,
    write_plot_csv,
    write_records,
    write_report,
    write_summary,
)
from synrank.synonymity import PROVIDER_KINDS, load_lexicon, load_provider

logger = logging.getLogger(__name__)

TRUE, FALSE = ("true", "yes", "1", "on"), ("false", "no", "0", "off")


def boolean(text: str) -> bool:
    """
    >>> boolean("Yes"), boolean("0")
    (True, False)
    """
    if text.strip().lower() in TRUE:
        return True
    if text.strip().lower() in FALSE:
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got '{text}'")


def fraction(text: str) -> float:
    value = float(text)
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"expected a value in [0, 1], got {text}")
    return value


def positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def thresholds(text: str) -> List[float]:
    """
    >>> thresholds("0.6,0.3, 0.4")
    [0.6, 0.3, 0.4]
    """
    try:
        return [fraction(tau) for tau in text.split(",") if tau.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated fractions, got '{text}'")


def add_measure_options(parser):
    parser.add_argument(
        "--measures", default="all", help="comma-separated ids among jaccard, kendall, spearman, rbo@P (default: all six)"
    )
    parser.add_argument("--jaccard-denominator", choices=JACCARD_DENOMINATORS, default="unadjusted")
    parser.add_argument("--rbo-extrapolated", type=boolean, default=True, metavar="BOOL")
    parser.add_argument(
        "--footrule-penalty", type=float, default=0.5, help="penalty per dropped feature as a factor of |A| (default: 0.5)"
    )
    parser.add_argument("--zero-synonymity", choices=ZERO_SYNONYMITY_RULES, default="mapped")


def add_provider_options(parser):
    parser.add_argument("--provider", choices=PROVIDER_KINDS, default="exact")
    parser.add_argument(
        "--embedding", metavar="PATH", help="word vectors in GloVe/fastText text format (default: $SYNRANK_EMBEDDING)"
    )
    parser.add_argument("--lexicon", metavar="PATH", help="thesaurus file, one 'headword TAB syn1,syn2,...' per line")


def add_evaluation_options(parser):
    parser.add_argument("--input", required=True, metavar="PATH", help="records in JSONL")
    parser.add_argument("--thresholds", type=thresholds, default=list(DEFAULT_THRESHOLDS), metavar="LIST")
    parser.add_argument("--output", metavar="PATH", help="CSV report")
    parser.add_argument("--json", metavar="PATH", help="JSON mirror of the report")
    parser.add_argument("--plot-csv", metavar="PATH", help="long-format CSV for plotting")
    parser.add_argument("--dataset", help="dataset label of the report rows (default: input file stem)")
    parser.add_argument("--filter-own-batch", type=boolean, default=False, metavar="BOOL")
    parser.add_argument("--inclusive", action="store_true", help="count similarity == τ as a success")
    parser.add_argument("--jobs", type=positive, default=1)
    parser.add_argument("--cache", metavar="PATH|URL", help="shelve file or, with the 'cache' extra, a database URL")
    add_measure_options(parser)


def parse_arguments(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="synrank", description="Standard and synonymity-weighted similarity of ranked explanations."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    compare = sub.add_parser("compare", help="compare two explanations")
    compare.add_argument("--original", required=True, metavar="FILE", help="one token per line, most important first")
    compare.add_argument("--perturbed", required=True, metavar="FILE")
    compare.add_argument("--substitutions", metavar="FILE", help="TSV: iteration, original, replacement")
    add_provider_options(compare)
    add_measure_options(compare)

    batch = sub.add_parser("batch-eval", help="attack success rates over a corpus")
    add_evaluation_options(batch)
    add_provider_options(batch)

    sensitivity = sub.add_parser("sensitivity", help="batch evaluation repeated per synonymity provider")
    add_evaluation_options(sensitivity)
    sensitivity.add_argument(
        "--providers", required=True, metavar="LIST", help="e.g. exact,embedding:glove.txt,thesaurus:syn.tsv,wordnet"
    )
    sensitivity.add_argument("--summary", metavar="PATH", help="CSV averaged over thresholds")

    simulate = sub.add_parser("simulate", help="generate a synthetic attack corpus")
    simulate.add_argument("--n", type=positive, required=True)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--lexicon", required=True, metavar="PATH")
    simulate.add_argument("--vocabulary", metavar="FILE", help="one token per line (default: every lexicon word)")
    simulate.add_argument("--guiding-measure", default="jaccard")
    simulate.add_argument("--tau", type=fraction, default=0.5)
    simulate.add_argument("--k", type=positive, default=10)
    simulate.add_argument("--doc-length", type=positive, default=12)
    simulate.add_argument("--max-iterations", type=positive, default=10)
    simulate.add_argument("--output", required=True, metavar="PATH")
    simulate.add_argument("--jobs", type=positive, default=1)

    args = parser.parse_args(argv)
    if getattr(args, "footrule_penalty", 1) <= 0:
        parser.error(f"--footrule-penalty must be positive, got {args.footrule_penalty}")
    if getattr(args, "thresholds", True) == []:
        parser.error("--thresholds cannot be empty")
    if getattr(args, "provider", None) == "embedding" and not (args.embedding or os.environ.get("SYNRANK_EMBEDDING")):
        parser.error("--provider embedding needs --embedding PATH (or $SYNRANK_EMBEDDING)")
    if getattr(args, "provider", None) == "thesaurus" and not args.lexicon:
        parser.error("--provider thesaurus needs --lexicon PATH")
    try:
        if hasattr(args, "measures"):
            parse_measures(args.measures)
        if hasattr(args, "guiding_measure"):
            Measure.parse(args.guiding_measure)
    except SynRankError as e:
        parser.error(str(e))
    if hasattr(args, "seed") and not -(2**63) <= args.seed < 2**64:
        parser.error(f"--seed must be a 64-bit integer, got {args.seed}")
    if args.command == "sensitivity":
        for spec in args.providers.split(","):
            kind, _, path = spec.partition(":")
            if kind.strip().lower() not in PROVIDER_KINDS:
                parser.error(f"unknown provider '{spec}' in --providers")
            if kind.strip().lower() == "thesaurus" and not path:
                parser.error(f"provider '{spec}' needs a path")
            if kind.strip().lower() == "embedding" and not (path or os.environ.get("SYNRANK_EMBEDDING")):
                parser.error(f"provider '{spec}' needs a path (or $SYNRANK_EMBEDDING)")
    return args


def measure_config(args) -> MeasureConfig:
    return MeasureConfig(
        footrule_penalty=args.footrule_penalty,
        jaccard_denominator=args.jaccard_denominator,
        rbo_extrapolated=args.rbo_extrapolated,
        zero_synonymity=args.zero_synonymity,
    )


def provider_spec(args) -> str:
    if args.provider == "embedding":
        return f"embedding:{args.embedding or ''}"
    if args.provider == "thesaurus":
        return f"thesaurus:{args.lexicon}"
    return args.provider


def vocabulary_of(records):
    return sorted({key for r in records for key in r.original_explanation.keys + r.perturbed_explanation.keys})


def open_caches(args, stack: ExitStack):
    if not args.cache:
        return None
    if "://" in args.cache:
        from shelchemy.core import Cache

        return [Cache(args.cache)]
    return [stack.enter_context(shelve.open(args.cache))]


def cmd_compare(args) -> int:
    config = measure_config(args)
    measures = parse_measures(args.measures, config)
    A, B = read_tokens(args.original), read_tokens(args.perturbed)
    substitutions = read_substitutions(args.substitutions) if args.substitutions else ()
    provider = load_provider(provider_spec(args), vocabulary=sorted(set(A.keys + B.keys)))
    mapping = build_mapping(A, B, substitutions)
    width = max(8, *(len(m.id) for m in measures))
    print(f"{'':10}" + "".join(f"{m.id:>{width + 2}}" for m in measures))
    print(f"{'Standard':10}" + "".join(f"{m.standard(A, B, config).similarity:>{width + 2}.4f}" for m in measures))
    print(
        f"{'Weighted':10}"
        + "".join(f"{m.weighted(A, B, mapping, provider, config).similarity:>{width + 2}.4f}" for m in measures)
    )
    return 0


def emit(report, args):
    if args.output:
        write_report(report, args.output, "csv")
    if args.json:
        write_report(report, args.json, "json")
    if args.plot_csv:
        write_plot_csv(report, args.plot_csv)
    print(render_table(report))
    if report.skipped:
        print(f"{report.n_skipped} record(s) skipped", file=sys.stderr)


def cmd_batch_eval(args) -> int:
    config = measure_config(args)
    measures = parse_measures(args.measures, config)
    records = read_records(args.input)
    provider = load_provider(provider_spec(args), vocabulary=vocabulary_of(records))
    with ExitStack() as stack:
        report = evaluate_corpus(
            records,
            measures,
            [provider],
            args.thresholds,
            config,
            dataset=args.dataset or Path(args.input).stem,
            own_batch=args.filter_own_batch,
            inclusive=args.inclusive,
            jobs=args.jobs,
            caches=open_caches(args, stack),
        )
    emit(report, args)
    return 0


def cmd_sensitivity(args) -> int:
    config = measure_config(args)
    measures = parse_measures(args.measures, config)
    records = read_records(args.input)
    vocabulary = vocabulary_of(records)
    providers = [load_provider(spec.strip(), vocabulary=vocabulary) for spec in args.providers.split(",") if spec.strip()]
    with ExitStack() as stack:
        report = sensitivity_analysis(
            records,
            measures,
            providers,
            args.thresholds,
            config,
            dataset=args.dataset or Path(args.input).stem,
            own_batch=args.filter_own_batch,
            inclusive=args.inclusive,
            jobs=args.jobs,
            caches=open_caches(args, stack),
        )
    emit(report, args)
    if args.summary:
        write_summary(report, args.summary)
    return 0


def cmd_simulate(args) -> int:
    lexicon = load_lexicon(args.lexicon)
    if args.vocabulary:
        vocabulary = list(read_tokens(args.vocabulary).tokens)
    else:
        vocabulary = sorted(set(lexicon) | {s for syns in lexicon.values() for s in syns})
    config = SimulationConfig(
        lexicon=lexicon,
        seed=args.seed,
        max_iterations=args.max_iterations,
        guiding_measure=args.guiding_measure,
        tau=args.tau,
        k=args.k,
        doc_length=args.doc_length,
    )
    records = generate_corpus(args.n, vocabulary, config=config, jobs=args.jobs)
    write_records(records, args.output)
    successes = sum(success(r.reported_final_similarity, config.tau) for r in records)
    print(f"{successes}/{len(records)} successful attacks ({config.guiding_measure} < {config.tau:g}) written to {args.output}")
    return 0


COMMANDS = {"compare": cmd_compare, "batch-eval": cmd_batch_eval, "sensitivity": cmd_sensitivity, "simulate": cmd_simulate}


def main(argv=None) -> int:
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except (SynRankError, OSError, ValueError, ImportError) as e:
        print(f"synrank: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
