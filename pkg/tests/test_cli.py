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
import pytest

from synrank.cli import main
from tests.fixtures import ORIGINAL, PERTURBED, rash_record, toy_lexicon
from synrank.serialization import read_records, write_records


@pytest.fixture
def files(tmp_path):
    original, perturbed, subs = tmp_path / "original.txt", tmp_path / "perturbed.txt", tmp_path / "subs.tsv"
    original.write_text("\n".join(ORIGINAL) + "\n", encoding="utf-8")
    perturbed.write_text("\n".join(PERTURBED) + "\n", encoding="utf-8")
    subs.write_text("1\tworried\talarmed\n2\tsick\tsickly\n3\treally\treal\n", encoding="utf-8")
    lexicon = tmp_path / "lexicon.tsv"
    lexicon.write_text("".join(f"{head}\t{','.join(sorted(syns))}\n" for head, syns in toy_lexicon().items()), encoding="utf-8")
    vocabulary = tmp_path / "vocabulary.txt"
    vocabulary.write_text("\n".join(toy_lexicon()) + "\n", encoding="utf-8")
    return tmp_path


def compare(files, *extra):
    return main(["compare", "--original", str(files / "original.txt"), "--perturbed", str(files / "perturbed.txt"), *extra])


def simulate(files, output, *extra):
    args = ["simulate", "--n", "50", "--seed", "7", "--lexicon", str(files / "lexicon.tsv"), "--output", str(output)]
    args += ["--vocabulary", str(files / "vocabulary.txt"), "--k", "12", "--doc-length", "12"]
    return main(args + list(extra))


def rows(capsys):
    out = capsys.readouterr().out.splitlines()
    header, standard, weighted = out[0].split(), out[1].split(), out[2].split()
    return header, [float(v) for v in standard[1:]], [float(v) for v in weighted[1:]]


def test_compare_rash_example(files, capsys):
    assert 0 == compare(files, "--substitutions", str(files / "subs.tsv"))
    header, standard, weighted = rows(capsys)
    assert ["jaccard", "kendall", "spearman", "rbo@0.5", "rbo@0.7", "rbo@0.9"] == header
    assert [0.4, 0.0, 0.3542] == standard[:3]
    assert 0.385 <= standard[3] <= 0.405
    assert [0.4807, 0.5399] == standard[4:]
    assert standard == weighted


def test_compare_either_zero_rule_reduces(files, capsys):
    for rule in ["mapped", "null"]:
        assert 0 == compare(files, "--substitutions", str(files / "subs.tsv"), "--zero-synonymity", rule)
        _, standard, weighted = rows(capsys)
        assert standard == weighted


def test_compare_identical(files, capsys):
    assert 0 == main(["compare", "--original", str(files / "original.txt"), "--perturbed", str(files / "original.txt")])
    _, standard, weighted = rows(capsys)
    assert [1.0] * 6 == standard == weighted


def test_compare_thesaurus(files, capsys):
    assert 0 == compare(files, "--substitutions", str(files / "subs.tsv"), "--provider", "thesaurus", "--lexicon", str(files / "lexicon.tsv"))
    _, standard, weighted = rows(capsys)
    assert weighted[0] == 0.7  # (4 + 3) / 10
    assert all(w >= s for w, s in zip(weighted, standard))


def test_usage_errors(files, monkeypatch, capsys):
    monkeypatch.delenv("SYNRANK_EMBEDDING", raising=False)
    assert 2 == compare(files, "--provider", "embedding")
    assert 2 == compare(files, "--provider", "thesaurus")
    assert 2 == compare(files, "--measures", "cosine")
    assert 2 == compare(files, "--rbo-extrapolated", "maybe")
    assert 2 == main(["batch-eval", "--input", "missing.jsonl", "--thresholds", "0.3,1.4"])
    assert 2 == main(["simulate", "--n", "0", "--lexicon", "x", "--output", "y"])
    assert 2 == main(["simulate", "--n", "5", "--tau", "1.5", "--lexicon", "x", "--output", "y"])
    assert 2 == main(["simulate", "--n", "5", "--guiding-measure", "rbo", "--lexicon", "x", "--output", "y"])
    assert 2 == main(["sensitivity", "--input", "x.jsonl", "--providers", "exact,glove"])
    assert 2 == main(["sensitivity", "--input", "x.jsonl", "--providers", "exact,embedding"])
    assert 2 == main(["sensitivity", "--input", "x.jsonl", "--providers", "exact,thesaurus"])
    assert 2 == main([])


def test_data_errors(files, tmp_path, capsys):
    assert 1 == main(["compare", "--original", str(tmp_path / "absent.txt"), "--perturbed", str(files / "original.txt")])
    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    assert 1 == main(["batch-eval", "--input", str(empty)])
    assert "synrank: error" in capsys.readouterr().err


def test_simulate(files, tmp_path, capsys):
    first, second, parallel = tmp_path / "a.jsonl", tmp_path / "b.jsonl", tmp_path / "c.jsonl"
    assert 0 == simulate(files, first)
    assert 0 == simulate(files, second)
    assert 0 == simulate(files, parallel, "--jobs", "8")
    assert first.read_bytes() == second.read_bytes() == parallel.read_bytes()
    assert 50 == len(read_records(first))


def test_simulate_degenerate_thresholds(files, tmp_path, capsys):
    assert 0 == simulate(files, tmp_path / "never.jsonl", "--tau", "0.0")
    assert capsys.readouterr().out.startswith("0/50 ")
    assert 0 == simulate(files, tmp_path / "always.jsonl", "--tau", "1.0")
    assert capsys.readouterr().out.startswith("50/50 ")


def test_batch_eval(files, tmp_path, capsys):
    corpus, report, json_report, plot = [tmp_path / name for name in ["corpus.jsonl", "r.csv", "r.json", "plot.csv"]]
    assert 0 == simulate(files, corpus, "--tau", "0.5")
    args = ["batch-eval", "--input", str(corpus), "--thresholds", "0.6,0.3,0.5,0.4"]
    assert 0 == main(args + ["--output", str(report), "--json", str(json_report), "--plot-csv", str(plot)])
    lines = report.read_text(encoding="utf-8").splitlines()
    assert "dataset,measure,provider,tau,base_rate,syn_rate,base_avg_sim,syn_avg_sim,n,skipped" == lines[0]
    assert 1 + 6 * 4 == len(lines)
    cells = [line.split(",") for line in lines[1:]]
    assert ["0.3000", "0.4000", "0.5000", "0.6000"] == [c[3] for c in cells[:4]]
    for c in cells:
        assert ("corpus", "exact", "50", "0") == (c[0], c[2], c[8], c[9])
        assert (c[4], c[6]) == (c[5], c[7])
    assert json_report.exists() and plot.exists()
    again = tmp_path / "again.csv"
    assert 0 == main(args + ["--output", str(again), "--jobs", "3"])
    assert report.read_bytes() == again.read_bytes()


def test_batch_eval_own_batch_and_cache(files, tmp_path, capsys):
    corpus, report, cache = tmp_path / "corpus.jsonl", tmp_path / "r.csv", tmp_path / "cache"
    write_records([rash_record(), rash_record(id="other", guiding_measure="kendall", threshold=0.4)], corpus)
    args = ["batch-eval", "--input", str(corpus), "--measures", "jaccard,kendall", "--thresholds", "0.4,0.5"]
    args += ["--filter-own-batch", "yes", "--dataset", "rash", "--output", str(report), "--cache", str(cache)]
    assert 0 == main(args)
    first = report.read_bytes()
    assert 0 == main(args)
    assert first == report.read_bytes()
    counts = {(c[1], c[3]): c[8] for c in (line.split(",") for line in first.decode().splitlines()[1:])}
    assert {("jaccard", "0.4000"): "0", ("jaccard", "0.5000"): "1", ("kendall", "0.4000"): "1", ("kendall", "0.5000"): "0"} == counts


def test_sensitivity(files, tmp_path, capsys):
    corpus, report, summary = tmp_path / "corpus.jsonl", tmp_path / "r.csv", tmp_path / "summary.csv"
    empty = tmp_path / "empty.tsv"
    empty.write_text("", encoding="utf-8")
    assert 0 == simulate(files, corpus)
    providers = f"exact,thesaurus:{empty},thesaurus:{files / 'lexicon.tsv'}"
    args = ["sensitivity", "--input", str(corpus), "--providers", providers, "--output", str(report), "--summary", str(summary)]
    assert 0 == main(args + ["--zero-synonymity", "null"])
    cells = [line.split(",") for line in report.read_text(encoding="utf-8").splitlines()[1:]]
    groups = {}
    for c in cells:
        groups.setdefault(c[2], []).append(c)
    assert ["exact", "thesaurus:empty", "thesaurus:lexicon"] == list(groups)
    for c in groups["exact"]:
        assert (c[4], c[6]) == (c[5], c[7])
    for a, b in zip(groups["exact"], groups["thesaurus:empty"]):
        assert a[3:] == b[3:]
    for a, b in zip(groups["exact"], groups["thesaurus:lexicon"]):
        assert (a[1], a[3], a[4], a[6]) == (b[1], b[3], b[4], b[6])
    assert 1 + 3 * 6 == len(summary.read_text(encoding="utf-8").splitlines())
