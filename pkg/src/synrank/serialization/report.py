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
from pathlib import Path
from typing import Union

from synrank.harness import EvaluationReport, ReportRow

COLUMNS = ["dataset", "measure", "provider", "tau", "base_rate", "syn_rate", "base_avg_sim", "syn_avg_sim", "n", "skipped"]
FLOAT_COLUMNS = ["tau", "base_rate", "syn_rate", "base_avg_sim", "syn_avg_sim"]
PLOT_COLUMNS = ["dataset", "measure", "provider", "tau", "variant", "rate", "avg_sim"]
ABSENT = "-"
FORMATS = ("csv", "json")


def report2df(report: EvaluationReport):
    """One DataFrame row per report cell, in report order

    >>> from synrank.harness import ReportRow
    >>> row = ReportRow("toy", "jaccard", "exact", 0.4, 0.5, 0.25, 0.2, None, 4, 2, 1)
    >>> df = report2df(EvaluationReport((row,), (("r9", "ConflictingChain: ..."),)))
    >>> df.columns.tolist() == COLUMNS
    True
    >>> df["syn_rate"].tolist(), df["n"].tolist(), df["skipped"].tolist(), df["syn_avg_sim"].isna().tolist()
    ([0.25], [4], [1], [True])
    """
    import pandas as pd

    data = [
        [
            row.dataset,
            row.measure,
            row.provider,
            row.tau,
            row.base_rate,
            row.weighted_rate,
            row.base_avg_similarity,
            row.weighted_avg_similarity,
            row.n_records,
            report.n_skipped,
        ]
        for row in report.rows
    ]
    df = pd.DataFrame(data, columns=COLUMNS)
    df[FLOAT_COLUMNS] = df[FLOAT_COLUMNS].astype(float)
    df[["n", "skipped"]] = df[["n", "skipped"]].astype(int)
    return df


def df2csv(df, path: Union[str, Path]):
    df.to_csv(path, index=False, na_rep=ABSENT, float_format="%.4f", lineterminator="\n")


def write_report(report: EvaluationReport, path: Union[str, Path], format: str = "csv"):
    """Write the report as CSV (fixed header, 4 decimals, '-' for absent) or as its JSON mirror"""
    if format not in FORMATS:
        raise ValueError(f"Unknown report format '{format}'; expected one of {FORMATS}.")
    if format == "csv":
        df2csv(report2df(report), path)
        return
    rows = []
    for row in report2df(report).itertuples(index=False):
        dic = {}
        for col, value in zip(COLUMNS, row):
            if col in FLOAT_COLUMNS:
                value = None if value != value else round(float(value), 4)
            elif col in ["n", "skipped"]:
                value = int(value)
            dic[col] = value
        rows.append(dic)
    content = {"rows": rows, "skipped": {id: reason for id, reason in report.skipped}}
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(content, f, indent=2, ensure_ascii=False)
        f.write("\n")


def read_report(path: Union[str, Path], format: str = None) -> EvaluationReport:
    """Inverse of 'write_report' at the field level, format guessed from the file suffix by default

    Success counts are recovered as rate × n. A CSV only stores how many records were skipped,
    so their ids read back as empty strings.
    """
    import pandas as pd

    format = format or ("json" if Path(path).suffix.lower() == ".json" else "csv")
    if format not in FORMATS:
        raise ValueError(f"Unknown report format '{format}'; expected one of {FORMATS}.")
    if format == "csv":
        df = pd.read_csv(path, na_values=[ABSENT], keep_default_na=False, dtype={c: str for c in COLUMNS[:3]})
        n_skipped = int(df["skipped"].iloc[0]) if len(df) else 0
        skipped = (("", "unrecorded"),) * n_skipped
        records = df.to_dict("records")
    else:
        with open(path, encoding="utf-8") as f:
            content = json.load(f)
        records = content["rows"]
        skipped = tuple(content["skipped"].items())

    def absent(value):
        return None if value is None or value != value else float(value)

    rows = []
    for r in records:
        n = int(r["n"])
        rows.append(
            ReportRow(
                dataset=r["dataset"],
                measure=r["measure"],
                provider=r["provider"],
                tau=float(r["tau"]),
                base_rate=float(r["base_rate"]),
                weighted_rate=float(r["syn_rate"]),
                base_avg_similarity=absent(r["base_avg_sim"]),
                weighted_avg_similarity=absent(r["syn_avg_sim"]),
                n_records=n,
                n_successes_base=round(float(r["base_rate"]) * n),
                n_successes_weighted=round(float(r["syn_rate"]) * n),
            )
        )
    return EvaluationReport(tuple(rows), skipped)


def plot_df(report: EvaluationReport):
    """Long format: one row per (cell, variant) with variant in {base, weighted}"""
    import pandas as pd

    data = []
    for row in report.rows:
        cell = [row.dataset, row.measure, row.provider, row.tau]
        data.append(cell + ["base", row.base_rate, row.base_avg_similarity])
        data.append(cell + ["weighted", row.weighted_rate, row.weighted_avg_similarity])
    df = pd.DataFrame(data, columns=PLOT_COLUMNS)
    df[["tau", "rate", "avg_sim"]] = df[["tau", "rate", "avg_sim"]].astype(float)
    return df


def write_plot_csv(report: EvaluationReport, path: Union[str, Path]):
    df2csv(plot_df(report), path)


def write_summary(report: EvaluationReport, path: Union[str, Path]):
    from synrank.harness import summarize

    df2csv(summarize(report), path)


def render_table(report: EvaluationReport) -> str:
    """Fixed-width table for the terminal, one line per report cell"""
    df = report2df(report)
    return df.to_string(index=False, na_rep=ABSENT, float_format=lambda x: f"{x:.4f}")
