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
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Tuple, Union

from synrank.exception import DuplicateRecord, InvalidRecord, MalformedLine, SynRankError
from synrank.explanation import AdversarialRecord, RankedExplanation, SubstitutionEvent, parse_explanation
from synrank.measures import Measure
from synrank.serialization.customjson import CustomJSONEncoder

logger = logging.getLogger(__name__)

FIELDS = (
    "id",
    "original_text",
    "perturbed_text",
    "original_explanation",
    "perturbed_explanation",
    "substitutions",
    "guiding_measure",
    "threshold",
    "final_similarity",
)
ALIASES = {
    "original_exp": "original_explanation",
    "perturbed_exp": "perturbed_explanation",
    "measure": "guiding_measure",
    "tau": "threshold",
    "similarity": "final_similarity",
}
REQUIRED = ("id", "original_explanation", "perturbed_explanation")


def record2dict(record: AdversarialRecord) -> Dict:
    """Canonical JSON-ready form, keys in canonical order; 'final_similarity' is omitted when unknown"""
    dic = {
        "id": record.id,
        "original_text": record.original_text,
        "perturbed_text": record.perturbed_text,
        "original_explanation": list(record.original_explanation.tokens),
        "perturbed_explanation": list(record.perturbed_explanation.tokens),
        "substitutions": [
            {"iteration": e.iteration, "original": e.original_token.token, "replacement": e.replacement_token.token}
            for e in record.substitutions
        ],
        "guiding_measure": record.guiding_measure,
        "threshold": record.threshold,
    }
    if record.reported_final_similarity is not None:
        dic["final_similarity"] = record.reported_final_similarity
    return dic


def event(obj) -> SubstitutionEvent:
    if isinstance(obj, dict):
        return SubstitutionEvent(obj["iteration"], obj["original"], obj["replacement"])
    if isinstance(obj, (list, tuple)) and len(obj) == 3:
        return SubstitutionEvent(*obj)
    raise InvalidRecord(f"Substitution must be an object with iteration, original and replacement ({obj!r}).")


def explanation(obj, field) -> RankedExplanation:
    if not isinstance(obj, list):
        raise InvalidRecord(f"Field '{field}' must be an array of strings ({obj!r}).")
    return parse_explanation(obj)


def dict2record(obj: Dict) -> AdversarialRecord:
    """Build a record from its canonical (or aliased) JSON form; unknown keys are ignored

    >>> r = dict2record({"id": "t1", "original_exp": ["rash", "worried"], "perturbed_exp": ["rash", "alarmed"],
    ...                  "substitutions": [{"iteration": 1, "original": "worried", "replacement": "alarmed"}],
    ...                  "measure": "RBO@0.70", "tau": 0.4, "comment": "ignored"})
    >>> r.guiding_measure, r.threshold, r.original_explanation.k
    ('rbo@0.7', 0.4, 2)
    """
    if not isinstance(obj, dict):
        raise InvalidRecord(f"A record must be a JSON object ({type(obj).__name__}).")
    fields = {}
    for key, value in obj.items():
        key = ALIASES.get(key, key)
        if key in FIELDS:
            fields[key] = value
    for key in REQUIRED:
        if key not in fields:
            raise InvalidRecord(f"Missing field '{key}'.")
    text = {k: fields.get(k, "") for k in ["original_text", "perturbed_text"]}
    for k, v in text.items():
        if not isinstance(v, str):
            raise InvalidRecord(f"Field '{k}' must be a string ({v!r}).")
    threshold = fields.get("threshold", 0.5)
    if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
        raise InvalidRecord(f"Field 'threshold' must be a number ({threshold!r}).")
    final = fields.get("final_similarity")
    if final is not None and (isinstance(final, bool) or not isinstance(final, (int, float))):
        raise InvalidRecord(f"Field 'final_similarity' must be a number ({final!r}).")
    substitutions = fields.get("substitutions") or []
    if not isinstance(substitutions, list):
        raise InvalidRecord(f"Field 'substitutions' must be an array ({substitutions!r}).")
    return AdversarialRecord(
        id=str(fields["id"]),
        original_text=text["original_text"],
        perturbed_text=text["perturbed_text"],
        original_explanation=explanation(fields["original_explanation"], "original_explanation"),
        perturbed_explanation=explanation(fields["perturbed_explanation"], "perturbed_explanation"),
        substitutions=tuple(event(e) for e in substitutions),
        guiding_measure=Measure.parse(str(fields.get("guiding_measure", "jaccard"))).id,
        threshold=threshold,
        reported_final_similarity=final,
    )


def read_records(path: Union[str, Path]) -> List[AdversarialRecord]:
    """One JSON object per line; blank lines are ignored

    Errors carry the 1-based line number of the offending line.
    """
    records, seen = [], {}
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = dict2record(json.loads(line))
            except (ValueError, KeyError, TypeError, SynRankError) as e:
                raise MalformedLine(line_no, e) from e
            if record.id in seen:
                raise DuplicateRecord(f"Record id '{record.id}' at line {line_no} already appeared at line {seen[record.id]}.")
            seen[record.id] = line_no
            records.append(record)
    logger.info("Read %d records from %s", len(records), path)
    return records


def write_records(records: Iterable[AdversarialRecord], path: Union[str, Path]):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for record in records:
            f.write(json.dumps(record, ensure_ascii=False, cls=CustomJSONEncoder) + "\n")


def read_tokens(path: Union[str, Path]) -> RankedExplanation:
    """Explanation stored as one token per line, most important first"""
    with open(path, encoding="utf-8") as f:
        tokens = [line.strip() for line in f if line.strip()]
    return parse_explanation(tokens)


def read_substitutions(path: Union[str, Path]) -> Tuple[SubstitutionEvent, ...]:
    """TSV log with columns iteration, original, replacement; blank lines and '#' comments are ignored"""
    events = []
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            cells = line.rstrip("\r\n").split("\t")
            try:
                if len(cells) != 3:
                    raise InvalidRecord(f"Expected 3 tab-separated columns, got {len(cells)}.")
                events.append(SubstitutionEvent(int(cells[0]), cells[1].strip(), cells[2].strip()))
            except (ValueError, SynRankError) as e:
                raise MalformedLine(line_no, e) from e
    return tuple(events)
