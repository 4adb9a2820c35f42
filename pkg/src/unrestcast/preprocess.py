"""Shallow text preprocessing: tokens, lemmas, sentences, stop-word removal.

Two views of a document are produced. ``sentences`` keeps every token with
exact character offsets so the extraction stages can work on the original
text; ``bag_tokens`` is the stop-word- and punctuation-free lemma list the
modeling stages consume.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

__all__ = [
    "Token",
    "ProcessedDoc",
    "tokenize",
    "lemmatize",
    "split_sentences",
    "preprocess_document",
    "load_stopwords",
]

_WORD_CHUNK = re.compile(r"\S+")
_SENT_END = re.compile(r"[.?!]+")
_PUNCT_CHARS = set("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")

# Trailing period after these never ends a sentence.
_ABBREVIATIONS = frozenset(
    """mr mrs ms dr prof gen col lt capt st rd ave no vs etc inc ltd co corp
    govt dept approx jan feb mar apr jun jul aug sep sept oct nov dec
    shri smt pvt hon""".split()
)

# Irregular forms the suffix rules cannot reach.
_IRREGULAR = {
    "held": "hold",
    "met": "meet",
    "went": "go",
    "sat": "sit",
    "took": "take",
    "led": "lead",
    "men": "man",
    "women": "woman",
    "children": "child",
}

# Words ending in -s or -ies that are not inflected forms.
_NOT_INFLECTED = frozenset(
    "news series species politics always perhaps whereas besides".split()
)

# Stems that take back their final -e after -ing/-ed stripping.
_E_RESTORE = "cgsuvz"


@dataclass
class Token:
    """One surface token with offsets into the source text."""

    surface: str
    lemma: str
    char_start: int
    char_end: int
    sentence_index: int

    def is_punctuation(self) -> bool:
        return all(c in _PUNCT_CHARS for c in self.surface)


@dataclass
class ProcessedDoc:
    """Preprocessed article: full sentences plus the modeling bag."""

    article_id: str
    text: str
    sentences: list[list[Token]] = field(default_factory=list)
    bag_tokens: list[str] = field(default_factory=list)

    def tokens(self):
        for sentence in self.sentences:
            yield from sentence


def lemmatize(surface: str) -> str:
    """Reduce a surface form to a lowercase lemma by suffix stripping.

    Deterministic and idempotent. Handles plural -s/-es/-ies, -ing and
    -ed with stem repair (undoubling, -e restoration), plus a small
    irregular table. Stems shorter than 3 characters are never produced.
    """
    w = surface.lower()
    if w in _IRREGULAR:
        return _IRREGULAR[w]
    if w in _NOT_INFLECTED:
        return w
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("es") and len(w) - 2 >= 3:
        if w[-3] in "xz" or w[-4:-2] in ("ch", "sh"):
            return w[:-2]
    if (
        w.endswith("s")
        and not w.endswith(("ss", "us", "is"))
        and len(w) - 1 >= 3
    ):
        return w[:-1]
    if w.endswith("ing") and len(w) - 3 >= 3:
        return _repair_stem(w[:-3])
    if w.endswith("ed") and len(w) - 2 >= 3:
        return _repair_stem(w[:-2])
    return w


def _repair_stem(stem: str) -> str:
    # planning -> plann -> plan, but call/pass/flee keep their doubles
    if len(stem) >= 2 and stem[-1] == stem[-2]:
        if stem[-1] not in "lse":
            return stem[:-1]
        return stem
    # stage/raise/argue style verbs lose -e before -ing/-ed
    if stem[-1] in _E_RESTORE:
        return stem + "e"
    return stem


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Return (start, end) character spans of sentences.

    A sentence ends at [.?!] followed by whitespace and a capital letter,
    or at end of text. Abbreviations and single-letter initials do not end
    sentences.
    """
    if not text.strip():
        return []
    boundaries = []
    for m in _SENT_END.finditer(text):
        end = m.end()
        if end >= len(text):
            boundaries.append(end)
            continue
        after = text[end:]
        lead_ws = len(after) - len(after.lstrip())
        if lead_ws == 0:
            continue
        nxt = after[lead_ws : lead_ws + 1]
        if not (nxt.isupper() or nxt == '"' or nxt == "'"):
            continue
        before = text[: m.start()]
        word = re.search(r"([A-Za-z]+)$", before)
        if word:
            w = word.group(1)
            if w.lower() in _ABBREVIATIONS or (len(w) == 1 and w.isupper()):
                continue
        boundaries.append(end)
    if not boundaries or boundaries[-1] < len(text):
        boundaries.append(len(text))

    spans = []
    start = 0
    for b in boundaries:
        chunk = text[start:b]
        lead = len(chunk) - len(chunk.lstrip())
        trail = len(chunk) - len(chunk.rstrip())
        if chunk.strip():
            spans.append((start + lead, b - trail))
        start = b
    return spans


def tokenize(text: str) -> list[Token]:
    """Split text into tokens, detaching edge punctuation.

    Offsets are exact: ``text[t.char_start:t.char_end] == t.surface`` for
    every token. Punctuation is emitted as its own tokens so the modeling
    side can drop it while the extraction side keeps sentence structure.
    """
    tokens: list[Token] = []
    for sent_idx, (s_start, s_end) in enumerate(split_sentences(text)):
        for chunk in _WORD_CHUNK.finditer(text, s_start, s_end):
            tokens.extend(_split_chunk(chunk.group(), chunk.start(), sent_idx))
    return tokens


def _split_chunk(chunk: str, offset: int, sent_idx: int) -> list[Token]:
    left = 0
    right = len(chunk)
    lead: list[Token] = []
    trail: list[Token] = []
    while left < right and chunk[left] in _PUNCT_CHARS:
        lead.append(_make_token(chunk[left], offset + left, sent_idx))
        left += 1
    while right > left and chunk[right - 1] in _PUNCT_CHARS:
        trail.append(_make_token(chunk[right - 1], offset + right - 1, sent_idx))
        right -= 1
    out = lead
    if left < right:
        out.append(_make_token(chunk[left:right], offset + left, sent_idx))
    out.extend(reversed(trail))
    return out


def _make_token(surface: str, start: int, sent_idx: int) -> Token:
    return Token(
        surface=surface,
        lemma=lemmatize(surface),
        char_start=start,
        char_end=start + len(surface),
        sentence_index=sent_idx,
    )


def load_stopwords(path: str | None = None) -> frozenset[str]:
    """Load a stop-word list (one word per line) and lemmatize the entries.

    Entries are stored as lemmas because filtering happens after
    lemmatization. With no path the bundled English list is used.
    """
    if path is None:
        text = (
            resources.files("unrestcast.data").joinpath("stopwords.txt").read_text()
        )
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    lemmas = set()
    for line in text.splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            lemmas.add(lemmatize(word))
    return frozenset(lemmas)


def preprocess_document(article, stopwords: frozenset[str]) -> ProcessedDoc:
    """Tokenize an article body and build both document views.

    ``article`` needs ``id`` and ``body`` attributes. bag_tokens excludes
    every stop-word lemma and every pure-punctuation token; sentences keep
    everything.
    """
    tokens = tokenize(article.body)
    sentences: list[list[Token]] = []
    for tok in tokens:
        while len(sentences) <= tok.sentence_index:
            sentences.append([])
        sentences[tok.sentence_index].append(tok)
    bag = [
        t.lemma
        for t in tokens
        if not t.is_punctuation()
        and t.lemma not in stopwords
        and any(c.isalnum() for c in t.surface)
    ]
    return ProcessedDoc(
        article_id=article.id,
        text=article.body,
        sentences=sentences,
        bag_tokens=bag,
    )
