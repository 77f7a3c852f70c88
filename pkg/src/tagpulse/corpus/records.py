"""Tweet records, region codes, and the line-oriented corpus file formats."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .normalize import hashtags_of, lemmatize, normalize_text

# 48 contiguous states plus the District of Columbia.
CONTIGUOUS_US = (
    "AL AR AZ CA CO CT DC DE FL GA IA ID IL IN KS KY LA MA MD ME MI MN MO MS "
    "MT NC ND NE NH NJ NM NV NY OH OK OR PA RI SC SD TN TX UT VA VT WA WI WV WY"
).split()

_SYNTH_REGION = re.compile(r"^R\d{2,}$")


def is_valid_region(code: str) -> bool:
    return code in CONTIGUOUS_US or bool(_SYNTH_REGION.match(code))


@dataclass
class TweetRecord:
    """One post: opaque id, region code, text, and its hashtags."""

    id: str
    region: str
    text: str
    hashtags: list[str] = field(default_factory=list)

    def normalized(self) -> "TweetRecord":
        """Copy with normalized text and hashtags recomputed from it."""
        tokens = normalize_text(self.text)
        return TweetRecord(self.id, self.region, " ".join(tokens), hashtags_of(tokens))

    def tokens(self) -> list[str]:
        return self.text.split()


def read_tweets(path: str | Path) -> Iterator[TweetRecord]:
    """Stream TweetRecords from a JSON-lines file (id, region, text)."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: malformed JSON line: {exc}") from None
            for key in ("id", "region", "text"):
                if key not in obj:
                    raise ValueError(f"{path}:{lineno}: missing field '{key}'")
            if not is_valid_region(obj["region"]):
                raise ValueError(f"{path}:{lineno}: unknown region '{obj['region']}'")
            tokens = obj["text"].split()
            yield TweetRecord(
                str(obj["id"]), obj["region"], obj["text"], hashtags_of(tokens)
            )


def write_tweets(path: str | Path, records: Iterable[TweetRecord]) -> int:
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(
                json.dumps(
                    {"id": rec.id, "region": rec.region, "text": rec.text},
                    ensure_ascii=False,
                )
            )
            fh.write("\n")
            n += 1
    return n


@dataclass
class KeywordList:
    """Lemmatized single-word keyword terms with their source tags."""

    terms: list[str]
    sources: dict[str, str]

    def __contains__(self, term: str) -> bool:
        return term in self.sources

    def __len__(self) -> int:
        return len(self.terms)


def load_keywords(path: str | Path) -> KeywordList:
    """Read a keyword file: one term per line, optional ``\\tsource=<tag>``.

    Terms are lemmatized on load; duplicates after lemmatization keep the
    first occurrence. Multi-word entries are rejected.
    """
    terms: list[str] = []
    sources: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            source = "database"
            if "\t" in line:
                term_part, _, suffix = line.partition("\t")
                suffix = suffix.strip()
                if not suffix.startswith("source="):
                    raise ValueError(f"{path}:{lineno}: bad suffix {suffix!r}")
                source = suffix[len("source="):]
            else:
                term_part = line
            term = term_part.strip()
            if " " in term:
                raise ValueError(f"{path}:{lineno}: keyword contains whitespace: {term!r}")
            term = lemmatize(term.lower())
            if term and term not in sources:
                terms.append(term)
                sources[term] = source
    return KeywordList(terms, sources)


def write_keywords(path: str | Path, keywords: KeywordList) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for term in keywords.terms:
            fh.write(f"{term}\tsource={keywords.sources[term]}\n")


def read_targets(path: str | Path) -> dict[str, float]:
    """Read a targets CSV ``region,target`` (header optional extra columns ignored)."""
    targets: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        if header[:2] != ["region", "target"]:
            raise ValueError(f"{path}: expected header starting 'region,target'")
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) < 2:
                raise ValueError(f"{path}:{lineno}: expected region,target")
            targets[parts[0]] = float(parts[1])
    return targets


def write_targets(path: str | Path, targets: dict[str, float]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("region,target\n")
        for region in sorted(targets):
            fh.write(f"{region},{targets[region]!r}\n")
