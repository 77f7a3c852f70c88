"""Deterministic synthetic tweet corpus with planted regional structure.

Regions get evenly spaced food-tweet rates inside a configured band, an
exact (rounded, not sampled) number of food tweets, and a scalar target
that is a monotone function of the food rate. One food hashtag (the
"driver") grows more prevalent with the region's food intensity so that
downstream feature ranking has a known answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .records import KeywordList, TweetRecord


@dataclass
class Topic:
    """A token source: named hashtag channels sharing a theme."""

    name: str
    channels: list[tuple[str, list[str]]]  # (hashtag, signature words)
    food: bool = False

    def hashtags(self) -> list[str]:
        return [tag for tag, _ in self.channels]


class RegionTruth(NamedTuple):
    target: float
    food_rate: float


@dataclass
class SyntheticSpec:
    n_regions: int = 20
    tweets_per_region: int = 500
    rate_low: float = 0.030
    rate_high: float = 0.062
    topics: list[Topic] = field(default_factory=lambda: default_topics())
    driver_hashtag: str = "#doughnut"
    driver_boost: float = 3.0
    target_intercept: float = 20.0
    target_slope: float = 240.0
    # Food tweets carry hashtags more often than others; with the default
    # rate band this plants ~9.4% food prevalence among hashtag-bearing
    # tweets while the whole-corpus food rate stays in the band.
    hashtag_prob_food: float = 0.86
    hashtag_prob_other: float = 0.40
    mix_low: float = 0.55
    mix_high: float = 0.80
    dual_hashtag_prob: float = 0.15
    noise_prob: float = 0.10

    def validate(self) -> None:
        if self.n_regions < 1 or self.tweets_per_region < 1:
            raise ValueError("config error: n_regions and tweets_per_region must be >= 1")
        for name, value in (("rate_low", self.rate_low), ("rate_high", self.rate_high)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"config error: {name}={value} outside [0, 1]")
        if self.rate_low > self.rate_high:
            raise ValueError("config error: rate_low > rate_high")
        food = [t for t in self.topics if t.food]
        if len(food) != 1:
            raise ValueError("config error: exactly one topic must be marked food")
        if self.driver_hashtag not in food[0].hashtags():
            raise ValueError("config error: driver_hashtag not in the food topic")

    @property
    def food_topic(self) -> Topic:
        return next(t for t in self.topics if t.food)

    def regions(self) -> list[str]:
        return [f"R{i + 1:02d}" for i in range(self.n_regions)]

    def all_hashtags(self) -> list[str]:
        return [tag for topic in self.topics for tag in topic.hashtags()]

    def keyword_list(self) -> KeywordList:
        """Food-channel words as keywords: heads from the database source,
        support words from the press source."""
        terms: list[str] = []
        sources: dict[str, str] = {}
        for tag, words in self.food_topic.channels:
            head = tag.lstrip("#")
            for word in words:
                src = "database" if word == head else "press"
                term = lemmatize(word)
                if term not in sources:
                    terms.append(term)
                    sources[term] = src
        for extra in ("sushi", "yogurt"):
            if extra not in sources:
                terms.append(extra)
                sources[extra] = "press"
        return KeywordList(terms, sources)


_FILLERS = [
    "today", "tonight", "lol", "omg", "mood", "vibes", "happy", "fun",
    "super", "totally", "really", "the", "so", "just", "🙂", "🔥",
]


def default_topics() -> list[Topic]:
    return [
        Topic(
            "food",
            [
                ("#pizza", ["pizza", "crust", "slice", "cheesy"]),
                ("#burger", ["burger", "fries", "grill", "bun"]),
                ("#doughnut", ["doughnut", "glaze", "sprinkles", "frosting"]),
                ("#salad", ["salad", "lettuce", "kale", "crunchy"]),
                ("#taco", ["taco", "salsa", "guac", "tortilla"]),
            ],
            food=True,
        ),
        Topic(
            "lifestyle",
            [
                ("#gym", ["gym", "workout", "lifting"]),
                ("#selfie", ["selfie", "camera", "mirror"]),
                ("#work", ["work", "office", "meeting"]),
                ("#sleep", ["sleep", "nap", "tired"]),
                ("#game", ["game", "console", "level"]),
            ],
        ),
        Topic(
            "places",
            [
                ("#nyc", ["nyc", "skyline", "borough"]),
                ("#beach", ["beach", "sand", "waves"]),
                ("#car", ["car", "traffic", "highway"]),
                ("#rain", ["rain", "storm", "umbrella"]),
                ("#dog", ["dog", "puppy", "leash"]),
            ],
        ),
        Topic(
            "culture",
            [
                ("#music", ["music", "concert", "album"]),
                ("#book", ["book", "novel", "chapter"]),
                ("#movie", ["movie", "film", "trailer"]),
                ("#football", ["football", "touchdown", "stadium"]),
                ("#cat", ["cat", "kitten", "whiskers"]),
            ],
        ),
    ]


def _pick_channel(topic: Topic, rng: np.random.Generator, weights=None):
    idx = rng.choice(len(topic.channels), p=weights)
    return topic.channels[idx]


def _channel_weights(spec: SyntheticSpec, intensity: float) -> np.ndarray:
    w = np.ones(len(spec.food_topic.channels))
    for i, (tag, _) in enumerate(spec.food_topic.channels):
        if tag == spec.driver_hashtag:
            w[i] = 1.0 + spec.driver_boost * intensity
    return w / w.sum()


def _make_tokens(
    channel: tuple[str, list[str]], mix: float, rng: np.random.Generator
) -> list[str]:
    tag, words = channel
    head = tag.lstrip("#")
    tokens = [head]
    for _ in range(int(rng.integers(5, 10))):
        if rng.random() < mix:
            tokens.append(words[int(rng.integers(len(words)))])
        else:
            tokens.append(_FILLERS[int(rng.integers(len(_FILLERS)))])
    return tokens


def _add_noise(tokens: list[str], rng: np.random.Generator) -> list[str]:
    noisy = list(tokens)
    kind = int(rng.integers(4))
    pos = int(rng.integers(len(noisy) + 1))
    if kind == 0:
        noisy.insert(pos, "http://t.co/x1y2z")
    elif kind == 1:
        noisy.insert(pos, "@somepal")
    elif kind == 2:
        i = int(rng.integers(len(noisy)))
        noisy[i] = noisy[i].upper()
    else:
        i = int(rng.integers(len(noisy)))
        if not noisy[i].startswith("#"):
            noisy[i] = noisy[i] + "!!"
    return noisy


def generate_synthetic_corpus(
    spec: SyntheticSpec, seed: int
) -> tuple[list[TweetRecord], dict[str, RegionTruth]]:
    """Emit tweets plus per-region ground truth, deterministically."""
    spec.validate()
    rng = np.random.default_rng(seed)
    non_food = [t for t in spec.topics if not t.food]
    records: list[TweetRecord] = []
    truth: dict[str, RegionTruth] = {}

    for s, region in enumerate(spec.regions()):
        u = s / (spec.n_regions - 1) if spec.n_regions > 1 else 0.0
        rate = spec.rate_low + (spec.rate_high - spec.rate_low) * u
        mix = spec.mix_low + (spec.mix_high - spec.mix_low) * u
        n = spec.tweets_per_region
        n_food = int(round(rate * n))
        food_slots = set(rng.permutation(n)[:n_food].tolist())
        food_weights = _channel_weights(spec, u)

        for i in range(n):
            if i in food_slots:
                topic = spec.food_topic
                channel = _pick_channel(topic, rng, food_weights)
                tokens = _make_tokens(channel, mix, rng)
                tag_prob = spec.hashtag_prob_food
            else:
                topic = non_food[int(rng.integers(len(non_food)))]
                channel = _pick_channel(topic, rng)
                tokens = _make_tokens(channel, 0.5, rng)
                tag_prob = spec.hashtag_prob_other

            hashtags: list[str] = []
            if rng.random() < tag_prob:
                hashtags.append(channel[0])
                if rng.random() < spec.dual_hashtag_prob and len(topic.channels) > 1:
                    others = [c for c in topic.channels if c[0] != channel[0]]
                    second = others[int(rng.integers(len(others)))]
                    tokens.insert(int(rng.integers(len(tokens) + 1)), second[1][0])
                    hashtags.append(second[0])
            if rng.random() < spec.noise_prob:
                tokens = _add_noise(tokens, rng)

            text = " ".join(tokens + hashtags)
            records.append(TweetRecord(f"{region}-{i:05d}", region, text, list(hashtags)))

        truth[region] = RegionTruth(
            target=spec.target_intercept + spec.target_slope * (n_food / n),
            food_rate=n_food / n,
        )
    return records, truth


def write_truth(path: str | Path, truth: dict[str, RegionTruth]) -> None:
    """Ground-truth CSV: ``region,target,food_rate``."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("region,target,food_rate\n")
        for region in sorted(truth):
            t = truth[region]
            fh.write(f"{region},{t.target!r},{t.food_rate!r}\n")


def read_truth(path: str | Path) -> dict[str, RegionTruth]:
    truth: dict[str, RegionTruth] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "region,target,food_rate":
            raise ValueError(f"{path}: expected header 'region,target,food_rate'")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            region, target, rate = line.split(",")
            truth[region] = RegionTruth(float(target), float(rate))
    return truth
