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
from typing import Dict, Iterable, Optional, Sequence, Union

import numpy as np
from hosh import Hosh

from synrank.exception import MalformedEmbedding, ZeroVector
from synrank.explanation import Feature
from synrank.identity import value2hosh
from synrank.synonymity.provider import SynonymityProvider

logger = logging.getLogger(__name__)


class EmbeddingTable:
    """Case-folded token → d-dimensional vector

    >>> table = EmbeddingTable.fromdict({"x": [1, 0], "y": [0, 1]})
    >>> table.dimension, len(table), "X" in table
    (2, 2, True)
    """

    def __init__(self, tokens: Sequence[str], vectors: np.ndarray):
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[0] != len(tokens) or vectors.shape[1] < 1:
            raise MalformedEmbedding(f"Expected {len(tokens)} vectors of positive dimension, got shape {vectors.shape}.")
        if not np.all(np.isfinite(vectors)):
            raise MalformedEmbedding("Embedding vectors must have finite components.")
        self.tokens = tuple(tokens)
        self.index: Dict[str, int] = {}
        for i, token in enumerate(self.tokens):
            if token in self.index:
                raise MalformedEmbedding(f"Duplicate embedding token '{token}'.")
            self.index[token] = i
        self.vectors = vectors
        self.norms = np.linalg.norm(vectors, axis=1)

    @staticmethod
    def fromdict(entries: Dict[str, Iterable[float]]) -> "EmbeddingTable":
        tokens = [Feature(t).key for t in entries]
        rows = [list(v) for v in entries.values()]
        if len({len(r) for r in rows}) > 1:
            raise MalformedEmbedding("All embedding vectors must have the same dimension.")
        return EmbeddingTable(tokens, np.array(rows, dtype=np.float64).reshape(len(rows), -1))

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]

    def vector(self, token: str) -> Optional[np.ndarray]:
        i = self.index.get(token)
        return None if i is None else self.vectors[i]

    def cosine(self, a: str, b: str) -> Optional[float]:
        """Raw cosine between two in-vocabulary tokens, None when either is out of vocabulary"""
        i, j = self.index.get(a), self.index.get(b)
        if i is None or j is None:
            return None
        na, nb = self.norms[i], self.norms[j]
        if na == 0 or nb == 0:
            raise ZeroVector(f"Corrupt embedding data: zero vector for '{a if na == 0 else b}'.")
        return float(np.dot(self.vectors[i], self.vectors[j]) / (na * nb))

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(self.tokens) * Hosh(self.vectors.tobytes())

    def __contains__(self, token):
        return Feature.of(token).key in self.index

    def __len__(self):
        return len(self.tokens)


def load_embedding(path: Union[str, Path], vocabulary: Iterable[str] = None) -> EmbeddingTable:
    """Read a GloVe-style text file ('token c1 c2 ... cd' per line)

    A leading 'count dimension' line (fastText .vec) is taken as a header.
    Otherwise d is inferred from the first vector line.
    When 'vocabulary' is given, only those tokens are kept.
    Case variants of a token keep the first occurrence.
    """
    wanted = None if vocabulary is None else {Feature.of(t).key for t in vocabulary}
    tokens, rows = [], []
    seen = set()
    d = None
    with open(path, encoding="utf-8") as fd:
        for line_no, line in enumerate(fd, start=1):
            parts = line.rstrip().split(" ")
            if parts == [""]:
                continue
            if d is None and line_no == 1 and len(parts) == 2 and all(p.isdigit() for p in parts):
                d = int(parts[1])
                continue
            if d is None:
                d = len(parts) - 1
                if d < 1:
                    raise MalformedEmbedding(f"line {line_no}: missing vector components.")
            if len(parts) - 1 != d:
                raise MalformedEmbedding(f"line {line_no}: expected {d} components, found {len(parts) - 1}.")
            key = parts[0].casefold()
            if key in seen or (wanted is not None and key not in wanted):
                continue
            try:
                row = np.array(parts[1:], dtype=np.float64)
            except ValueError as e:
                raise MalformedEmbedding(f"line {line_no}: {e}")
            if not np.all(np.isfinite(row)):
                raise MalformedEmbedding(f"line {line_no}: non-finite component.")
            seen.add(key)
            tokens.append(key)
            rows.append(row)
    if d is None:
        raise MalformedEmbedding(f"Empty embedding file: {path}")
    logger.info("Loaded %d vectors of dimension %d from %s", len(tokens), d, path)
    return EmbeddingTable(tokens, np.array(rows, dtype=np.float64).reshape(len(rows), d))


class EmbeddingSynonymity(SynonymityProvider):
    """Clamped cosine similarity; out-of-vocabulary tokens score 0 against different tokens

    >>> syn = EmbeddingSynonymity(EmbeddingTable.fromdict({"a": [1, 0], "b": [0, 1], "c": [1, 1], "d": [-1, 0]}))
    >>> syn("a", "b"), round(syn("a", "c"), 4), syn("a", "d"), syn("a", "unknown"), syn("unknown", "unknown")
    (0.0, 0.7071, 0.0, 0.0, 1.0)
    """

    kind = "embedding"

    def __init__(self, table: EmbeddingTable, name: str = None):
        super().__init__(name)
        self.table = table

    def score(self, a: str, b: str) -> float:
        cosine = self.table.cosine(a, b)
        if cosine is None:
            return 0.0
        return min(1.0, max(0.0, cosine))

    @cached_property
    def hosh(self) -> Hosh:
        return value2hosh(("provider", self.kind)) * self.table.hosh


def syn_embedding(a: Union[str, Feature], b: Union[str, Feature], table: EmbeddingTable) -> float:
    return EmbeddingSynonymity(table)(a, b)
