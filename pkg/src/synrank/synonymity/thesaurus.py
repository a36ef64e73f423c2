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
from functools import cached_property
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Mapping, Union

from hosh import Hosh

from synrank.exception import MalformedLexicon
from synrank.explanation import Feature
from synrank.identity import value2hosh
from synrank.synonymity.provider import SynonymityProvider

logger = logging.getLogger(__name__)


class SynonymLexicon(Mapping[str, FrozenSet[str]]):
    """Headword → set of synonyms, everything case-folded

    The headword never belongs to its own set.

    >>> lex = SynonymLexicon({"Sick": ["ill", "sickly", "sick"]})
    >>> sorted(lex["sick"]), "SICK" in lex, lex.synonyms("rash")
    (['ill', 'sickly'], True, frozenset())
    """

    def __init__(self, entries: Mapping[str, Iterable[str]] = None):
        data: Dict[str, set] = {}
        for headword, synonyms in (entries or {}).items():
            head = Feature.of(headword).key
            bucket = data.setdefault(head, set())
            for synonym in synonyms:
                synonym = synonym.strip().casefold()
                if synonym and synonym != head:
                    bucket.add(synonym)
        self._data = {head: frozenset(syns) for head, syns in sorted(data.items())}

    def synonyms(self, headword: Union[str, Feature]) -> FrozenSet[str]:
        return self._data.get(Feature.of(headword).key, frozenset())

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(tuple((head, tuple(sorted(syns))) for head, syns in self._data.items()))

    def __getitem__(self, item):
        return self._data[Feature.of(item).key]

    def __contains__(self, item):
        return isinstance(item, (str, Feature)) and Feature.of(item).key in self._data

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __repr__(self):
        return f"SynonymLexicon({len(self)} headwords)"


def load_lexicon(path: Union[str, Path]) -> SynonymLexicon:
    """Read 'headword TAB syn1,syn2,...' lines; an empty synonym list is allowed"""
    entries: Dict[str, list] = {}
    with open(path, encoding="utf-8") as fd:
        for line_no, line in enumerate(fd, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            if "\t" not in line:
                raise MalformedLexicon(f"line {line_no}: missing TAB between headword and synonyms ({line}).")
            headword, synonyms = line.split("\t", 1)
            if not headword.strip():
                raise MalformedLexicon(f"line {line_no}: blank headword.")
            entries.setdefault(headword, []).extend(s for s in synonyms.split(",") if s.strip())
    lexicon = SynonymLexicon(entries)
    logger.info("Loaded %d lexicon headwords from %s", len(lexicon), path)
    return lexicon


def wordnet_lexicon(vocabulary: Iterable[str]) -> SynonymLexicon:
    """Synonym sets from WordNet lemma names for each word of 'vocabulary'

    Needs the 'wordnet' extra and the NLTK WordNet corpus.
    """
    from nltk.corpus import wordnet

    entries = {}
    for word in sorted({Feature.of(w).key for w in vocabulary}):
        entries[word] = [lemma.name().replace("_", " ") for syn in wordnet.synsets(word) for lemma in syn.lemmas()]
    return SynonymLexicon(entries)


class ThesaurusSynonymity(SynonymityProvider):
    """Dichotomous synonymity: 1 when the target belongs to the origin's synonym set

    >>> syn = ThesaurusSynonymity(SynonymLexicon({"sick": ["sickly"]}))
    >>> syn("sick", "sickly"), syn("sickly", "sick"), syn("sick", "rash"), syn("x", "x")
    (1.0, 0.0, 0.0, 1.0)
    """

    kind = "thesaurus"

    def __init__(self, lexicon: SynonymLexicon, name: str = None):
        super().__init__(name)
        self.lexicon = lexicon

    def score(self, a: str, b: str) -> float:
        return 1.0 if b in self.lexicon.synonyms(a) else 0.0

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("provider", self.kind)) * self.lexicon.hosh


def syn_thesaurus(a: Union[str, Feature], b: Union[str, Feature], lexicon: SynonymLexicon) -> float:
    return ThesaurusSynonymity(lexicon)(a, b)
