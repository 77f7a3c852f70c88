"""Tweet text normalization and rule-based lemmatization."""

from __future__ import annotations

from importlib import resources

_URL_PREFIXES = ("http://", "https://", "www.")

# Consecutive repeats of one token are capped; keeps emphasis without
# letting spam runs dominate token counts.
REPEAT_CAP = 3


def _load_emoji_ranges() -> list[tuple[int, int]]:
    ranges = []
    path = resources.files("tagpulse.corpus").joinpath("data/emoji_ranges.txt")
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        lo, hi = line.split()
        ranges.append((int(lo, 16), int(hi, 16)))
    return ranges


_EMOJI_RANGES = _load_emoji_ranges()


def is_emoji(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


def _clean_token(token: str) -> list[str]:
    """Strip one whitespace-delimited token down to its surviving pieces.

    Keeps lowercase letters and emoji; digits survive only inside a
    hashtag; `#` always starts a new piece so it can only appear
    token-initially; consecutive emoji are split apart.
    """
    pieces: list[str] = []
    buf = ""
    prev_emoji = False

    def flush():
        nonlocal buf
        if buf and buf != "#":
            pieces.append(buf)
        buf = ""

    for ch in token:
        if ch == "#":
            flush()
            buf = "#"
            prev_emoji = False
        elif is_emoji(ch):
            if prev_emoji:
                flush()
            buf += ch
            prev_emoji = True
        elif "a" <= ch <= "z":
            buf += ch
            prev_emoji = False
        elif ch.isdigit():
            if buf.startswith("#"):
                buf += ch
            prev_emoji = False
        else:
            prev_emoji = False
    flush()
    return pieces


def normalize_text(raw: str) -> list[str]:
    """Normalize raw tweet text into a token sequence.

    Lowercases, drops URLs and @-mentions, strips special characters
    (keeping `#` and emoji), drops digits outside hashtags, splits
    consecutive emoji, and caps token repeats at ``REPEAT_CAP``.
    """
    tokens: list[str] = []
    for tok in raw.lower().split():
        if tok.startswith(_URL_PREFIXES):
            continue
        if tok.startswith("@"):
            continue
        tokens.extend(_clean_token(tok))

    capped: list[str] = []
    run = 0
    for tok in tokens:
        if capped and tok == capped[-1]:
            run += 1
        else:
            run = 1
        if run <= REPEAT_CAP:
            capped.append(tok)
    return capped


_ES_SUFFIXES = ("ses", "xes", "zes", "ches", "shes")


def lemmatize(token: str) -> str:
    """Reduce a lowercase token to its singular form by suffix rules.

    Idempotent; never raises. Expects a normalized token without `#`.
    """
    if token.endswith("ies"):
        return token[:-3] + "y"
    if token.endswith(_ES_SUFFIXES):
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss") and len(token) > 3:
        return token[:-1]
    return token


def hashtags_of(tokens: list[str]) -> list[str]:
    """Unique `#`-prefixed tokens, in first-appearance order."""
    seen = set()
    out = []
    for tok in tokens:
        if tok.startswith("#") and tok not in seen:
            seen.add(tok)
            out.append(tok)
    return out


def load_stopwords() -> frozenset[str]:
    path = resources.files("tagpulse.corpus").joinpath("data/stopwords.txt")
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)
