"""Frequency-truncated vocabulary with hashtag pool and OOV sentinel."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .records import TweetRecord

OOV_TOKEN = "<UNKNOWN>"

# Reserved padding id; never a table row, masked out of pooling downstream.
PAD_ID = -1


@dataclass
class Vocabulary:
    """Token ids for kept words plus an ordered hashtag pool.

    Word ids are dense in ``[0, len(word_index))`` with the OOV sentinel
    last. Hashtag pool entry ``j`` owns embedding-table row
    ``len(word_index) + j`` so tags live in the same table as words
    without sharing word ids.
    """

    word_index: dict[str, int]
    counts: dict[str, int]
    hashtag_pool: list[str]
    oov_id: int
    tag_index: dict[str, int] = field(init=False)

    def __post_init__(self):
        base = len(self.word_index)
        self.tag_index = {tag: base + j for j, tag in enumerate(self.hashtag_pool)}

    @property
    def n_words(self) -> int:
        return len(self.word_index)

    @property
    def n_tags(self) -> int:
        return len(self.hashtag_pool)

    @property
    def n_rows(self) -> int:
        """Total embedding-table rows: words (incl. OOV) plus pool tags."""
        return self.n_words + self.n_tags

    def word_id(self, token: str) -> int:
        return self.word_index.get(token, self.oov_id)

    def tag_id(self, tag: str) -> int:
        if tag not in self.tag_index:
            raise KeyError(f"hashtag not in pool: {tag!r}")
        return self.tag_index[tag]

    def tag_ids(self) -> np.ndarray:
        base = self.n_words
        return np.arange(base, base + self.n_tags)


def build_vocabulary(
    corpus: Iterable[TweetRecord],
    max_words: int,
    max_hashtags: int,
    stopwords: frozenset[str] | set[str] = frozenset(),
) -> Vocabulary:
    """Keep the most frequent words and hashtags; everything else is OOV.

    Ties in the frequency cutoff break lexicographically ascending so the
    result is independent of corpus order.
    """
    if max_words < 1 or max_hashtags < 1:
        raise ValueError("max_words and max_hashtags must be >= 1")
    word_counts: Counter[str] = Counter()
    tag_counts: Counter[str] = Counter()
    empty = True
    for rec in corpus:
        empty = False
        for tok in rec.tokens():
            if tok.startswith("#"):
                tag_counts[tok] += 1
            elif tok not in stopwords:
                word_counts[tok] += 1
    if empty:
        raise ValueError("empty corpus")

    def top_k(counts: Counter[str], k: int) -> list[str]:
        return sorted(counts, key=lambda t: (-counts[t], t))[:k]

    kept_words = top_k(word_counts, max_words)
    kept_tags = top_k(tag_counts, max_hashtags)

    word_index = {tok: i for i, tok in enumerate(kept_words)}
    oov_id = len(word_index)
    word_index[OOV_TOKEN] = oov_id

    counts = {tok: word_counts[tok] for tok in kept_words}
    dropped = sum(c for t, c in word_counts.items() if t not in counts)
    dropped += sum(c for t, c in tag_counts.items() if t not in set(kept_tags))
    counts[OOV_TOKEN] = dropped
    counts.update({tag: tag_counts[tag] for tag in kept_tags})

    return Vocabulary(word_index, counts, kept_tags, oov_id)


def encode_tweet(record: TweetRecord, vocab: Vocabulary, max_len: int) -> np.ndarray:
    """Encode a normalized record as word ids, truncated/padded to ``max_len``.

    Hashtags are substituted by their plain-word ids (leakage prevention:
    pool-tag rows never appear in the input sequence).
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    ids = []
    for tok in record.tokens()[:max_len]:
        if tok.startswith("#"):
            tok = tok[1:]
        ids.append(vocab.word_id(tok))
    ids.extend([PAD_ID] * (max_len - len(ids)))
    return np.asarray(ids, dtype=np.int64)


def save_vocabulary(path: str | Path, vocab: Vocabulary) -> None:
    """Write the TSV format: header line, then ``token<TAB>id<TAB>count``."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#vocab v1 words={vocab.n_words} hashtags={vocab.n_tags}\n")
        by_id = sorted(vocab.word_index.items(), key=lambda kv: kv[1])
        for token, idx in by_id:
            fh.write(f"{token}\t{idx}\t{vocab.counts.get(token, 0)}\n")
        for tag in vocab.hashtag_pool:
            fh.write(f"{tag}\t{vocab.tag_index[tag]}\t{vocab.counts.get(tag, 0)}\n")


def load_vocabulary(path: str | Path) -> Vocabulary:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        parts = header.split()
        if len(parts) != 4 or parts[0] != "#vocab" or parts[1] != "v1":
            raise ValueError(f"{path}: bad vocabulary header: {header!r}")
        n_words = int(parts[2].split("=")[1])
        n_tags = int(parts[3].split("=")[1])
        word_index: dict[str, int] = {}
        counts: dict[str, int] = {}
        pool: list[str] = []
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                token, idx_s, count_s = line.split("\t")
            except ValueError:
                raise ValueError(f"{path}:{lineno}: expected token<TAB>id<TAB>count") from None
            idx, count = int(idx_s), int(count_s)
            counts[token] = count
            if idx < n_words:
                word_index[token] = idx
            else:
                pool.append(token)
    if len(word_index) != n_words or len(pool) != n_tags:
        raise ValueError(f"{path}: header does not match row counts")
    if OOV_TOKEN not in word_index:
        raise ValueError(f"{path}: missing OOV sentinel")
    return Vocabulary(word_index, counts, pool, word_index[OOV_TOKEN])
