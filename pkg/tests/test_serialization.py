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
import json
from unittest import TestCase

import pytest

from synrank.exception import DuplicateRecord, MalformedLine
from synrank.harness import EvaluationReport, ReportRow, evaluate_corpus
from synrank.measures import default_measures
from synrank.perturb import SimulationConfig, generate_corpus
from synrank.serialization import (
    read_records,
    read_report,
    read_substitutions,
    read_tokens,
    record2dict,
    render_table,
    write_plot_csv,
    write_records,
    write_report,
    write_summary,
)
from synrank.synonymity import EXACT
from tests.fixtures import EVENTS, ORIGINAL, PERTURBED, VOCABULARY, rash_record, toy_lexicon

HEADER = "dataset,measure,provider,tau,base_rate,syn_rate,base_avg_sim,syn_avg_sim,n,skipped"


def rash_line(**kwargs):
    dic = record2dict(rash_record())
    dic.update(kwargs)
    return json.dumps(dic)


def one_row_report():
    row = ReportRow("toy", "jaccard", "exact", 0.3, 0.5, 0.25, 0.123456, None, 4, 2, 1)
    return EvaluationReport((row,), (("r9", "AmbiguousTarget: x"),))


def test_read_rash_record(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_text(rash_line() + "\n\n", encoding="utf-8")
    (record,) = read_records(path)
    assert record == rash_record()
    assert tuple(ORIGINAL) == record.original_explanation.tokens
    assert tuple(PERTURBED) == record.perturbed_explanation.tokens
    assert EVENTS == record.substitutions


def test_aliases_and_unknown_fields(tmp_path):
    dic = record2dict(rash_record())
    aliased = {
        "id": "rash",
        "original_text": dic["original_text"],
        "perturbed_text": dic["perturbed_text"],
        "original_exp": dic["original_explanation"],
        "perturbed_exp": dic["perturbed_explanation"],
        "substitutions": [[e["iteration"], e["original"], e["replacement"]] for e in dic["substitutions"]],
        "measure": "Jaccard",
        "tau": 0.5,
        "similarity": 0.4,
        "model": "distilbert",
    }
    path = tmp_path / "corpus.jsonl"
    path.write_text(json.dumps(aliased) + "\n", encoding="utf-8")
    (record,) = read_records(path)
    assert record == rash_record(reported_final_similarity=0.4)


def test_malformed_lines(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_text(rash_line() + "\n{not json\n", encoding="utf-8")
    with pytest.raises(MalformedLine) as e:
        read_records(path)
    assert 2 == e.value.line_no
    path.write_text(rash_line(id="a") + "\n" + rash_line(id="b", original_explanation=[]) + "\n", encoding="utf-8")
    with pytest.raises(MalformedLine, match="line 2"):
        read_records(path)
    path.write_text(rash_line(threshold="high") + "\n", encoding="utf-8")
    with pytest.raises(MalformedLine, match="line 1"):
        read_records(path)
    path.write_text(rash_line(guiding_measure="cosine") + "\n", encoding="utf-8")
    with pytest.raises(MalformedLine):
        read_records(path)
    path.write_text(json.dumps({"id": "x"}) + "\n", encoding="utf-8")
    with pytest.raises(MalformedLine):
        read_records(path)


def test_duplicate_ids(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_text(rash_line() + "\n" + rash_line() + "\n", encoding="utf-8")
    with pytest.raises(DuplicateRecord):
        read_records(path)


def test_empty_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("", encoding="utf-8")
    assert [] == read_records(path)


def test_records_roundtrip(tmp_path):
    corpus = generate_corpus(25, VOCABULARY, toy_lexicon(), SimulationConfig(seed=4, k=5, doc_length=8))
    corpus.append(rash_record(id="ünïcode", original_text="naïve café"))
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_records(corpus, first)
    assert corpus == read_records(first)
    write_records(read_records(first), second)
    assert first.read_bytes() == second.read_bytes()
    assert "naïve café" in first.read_text(encoding="utf-8")


def test_written_lines_are_canonical(tmp_path):
    path = tmp_path / "rash.jsonl"
    write_records([rash_record()], path)
    (line,) = path.read_text(encoding="utf-8").splitlines()
    assert record2dict(rash_record()) == json.loads(line)
    assert list(record2dict(rash_record())) == list(json.loads(line))
    assert line.startswith('{"id": "rash", "original_text": ')


def test_tokens_and_substitutions(tmp_path):
    tokens = tmp_path / "original.txt"
    tokens.write_text("\n".join(ORIGINAL) + "\n\n", encoding="utf-8")
    assert tuple(ORIGINAL) == read_tokens(tokens).tokens
    log = tmp_path / "subs.tsv"
    log.write_text("# iteration\toriginal\treplacement\n1\tworried\talarmed\n2\tsick\tsickly\n3\treally\treal\n", encoding="utf-8")
    assert EVENTS == read_substitutions(log)
    log.write_text("1\tworried\n", encoding="utf-8")
    with pytest.raises(MalformedLine, match="line 1"):
        read_substitutions(log)
    log.write_text("one\tworried\talarmed\n", encoding="utf-8")
    with pytest.raises(MalformedLine):
        read_substitutions(log)


class TestReport(TestCase):
    def test_csv(self):
        import tempfile
        from pathlib import Path

        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "report.csv"
            write_report(one_row_report(), path)
            lines = path.read_text(encoding="utf-8").splitlines()
            self.assertEqual([HEADER, "toy,jaccard,exact,0.3000,0.5000,0.2500,0.1235,-,4,1"], lines)
            again = Path(tmp) / "again.csv"
            write_report(one_row_report(), again)
            self.assertEqual(path.read_bytes(), again.read_bytes())

    def test_render(self):
        table = render_table(one_row_report())
        self.assertIn("0.1235", table)
        self.assertIn("-", table.splitlines()[1])


@pytest.mark.parametrize("suffix", ["csv", "json"])
def test_report_roundtrip(tmp_path, suffix):
    records = [rash_record(), rash_record(id="same", perturbed_explanation=rash_record().original_explanation, substitutions=())]
    report = evaluate_corpus(records, default_measures(), [EXACT], [0.3, 0.5], dataset="rash")
    path = tmp_path / f"report.{suffix}"
    write_report(report, path, suffix)
    back = read_report(path)
    assert len(report.rows) == len(back.rows)
    assert report.n_skipped == back.n_skipped
    for row, other in zip(report.rows, back.rows):
        assert (row.dataset, row.measure, row.provider, row.n_records) == (other.dataset, other.measure, other.provider, other.n_records)
        assert (row.n_successes_base, row.n_successes_weighted) == (other.n_successes_base, other.n_successes_weighted)
        assert row.tau == pytest.approx(other.tau)
        assert row.base_rate == pytest.approx(other.base_rate, abs=5e-5)
        if row.base_avg_similarity is None:
            assert other.base_avg_similarity is None
        else:
            assert row.base_avg_similarity == pytest.approx(other.base_avg_similarity, abs=5e-5)
    path2 = tmp_path / f"again.{suffix}"
    write_report(back, path2, suffix)
    assert path.read_bytes() == path2.read_bytes()


def test_json_mirror(tmp_path):
    path = tmp_path / "report.json"
    write_report(one_row_report(), path, "json")
    content = json.loads(path.read_text(encoding="utf-8"))
    assert {"r9": "AmbiguousTarget: x"} == content["skipped"]
    (row,) = content["rows"]
    assert HEADER.split(",") == list(row)
    assert (0.1235, None, 1) == (row["base_avg_sim"], row["syn_avg_sim"], row["skipped"])


def test_plot_and_summary(tmp_path):
    plot, summary = tmp_path / "plot.csv", tmp_path / "summary.csv"
    write_plot_csv(one_row_report(), plot)
    assert [
        "dataset,measure,provider,tau,variant,rate,avg_sim",
        "toy,jaccard,exact,0.3000,base,0.5000,0.1235",
        "toy,jaccard,exact,0.3000,weighted,0.2500,-",
    ] == plot.read_text(encoding="utf-8").splitlines()
    write_summary(one_row_report(), summary)
    assert [
        "dataset,provider,measure,base_rate,syn_rate,base_avg_sim,syn_avg_sim",
        "toy,exact,jaccard,0.5000,0.2500,0.1235,-",
    ] == summary.read_text(encoding="utf-8").splitlines()
