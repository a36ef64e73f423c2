import os
from pathlib import Path
from typing import Iterable

from synrank.exception import UnknownProvider
from synrank.synonymity.embedding import EmbeddingSynonymity, EmbeddingTable, load_embedding, syn_embedding
from synrank.synonymity.provider import EXACT, ExactSynonymity, SynonymityProvider, syn_exact
from synrank.synonymity.thesaurus import (
    SynonymLexicon,
    ThesaurusSynonymity,
    load_lexicon,
    syn_thesaurus,
    wordnet_lexicon,
)

PROVIDER_KINDS = ("exact", "embedding", "thesaurus", "wordnet")


def load_provider(spec: str, vocabulary: Iterable[str] = None) -> SynonymityProvider:
    """Build a provider from 'exact', 'embedding:PATH', 'thesaurus:PATH' or 'wordnet'

    An 'embedding' spec without a path falls back to $SYNRANK_EMBEDDING.
    'vocabulary' restricts what is loaded from large embedding files and is required by 'wordnet'.

    >>> load_provider("exact").name
    'exact'
    >>> load_provider("glove")
    Traceback (most recent call last):
    ...
    synrank.exception.UnknownProvider: Unknown synonymity provider 'glove'; expected one of ('exact', 'embedding', 'thesaurus', 'wordnet').
    """
    kind, _, path = spec.partition(":")
    kind = kind.strip().lower()
    if kind not in PROVIDER_KINDS:
        raise UnknownProvider(f"Unknown synonymity provider '{spec}'; expected one of {PROVIDER_KINDS}.")
    if kind == "exact":
        return EXACT
    if kind == "wordnet":
        if vocabulary is None:
            raise UnknownProvider("The 'wordnet' provider needs the corpus vocabulary.")
        return ThesaurusSynonymity(wordnet_lexicon(vocabulary), name="wordnet")
    if kind == "embedding" and not path:
        path = os.environ.get("SYNRANK_EMBEDDING", "")
    if not path:
        raise UnknownProvider(f"Provider '{kind}' needs a file path ('{kind}:PATH').")
    name = f"{kind}:{Path(path).stem}"
    if kind == "embedding":
        return EmbeddingSynonymity(load_embedding(path, vocabulary), name=name)
    return ThesaurusSynonymity(load_lexicon(path), name=name)
