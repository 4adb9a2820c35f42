"""Normalize date expressions relative to an article's publication date.

The grammar covers the phrase classes that announce planned events:
absolute dates ("february 16", "16 february 2017", "16/02/2017"), deictic
forms ("tomorrow", "day after tomorrow"), weekdays ("next wednesday"),
day offsets ("in two days", "5 days later") and "this weekend". Anything
else resolves to direction "ambiguous" rather than an error, so taggers
can hand over every DATE span they find.

Resolution rules:
  * bare / "this" / "coming" + weekday: nearest strictly-future occurrence
  * "next" + weekday: that day of the following ISO week
  * month-day without year: earliest occurrence on or after the anchor
  * numeric dates are day-first (Indian convention) unless month_first=True
  * "this weekend": Saturday..Sunday of the anchor's ISO week
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from datetime import date, timedelta
from functools import lru_cache

__all__ = [
    "DateMention",
    "normalize",
    "is_future_mention",
    "merge_adjacent_date_spans",
    "grammar_surfaces",
]

FUTURE = "future"
PAST = "past"
SAME_DAY = "same-day"
AMBIGUOUS = "ambiguous"

_MONTHS = {}
for _i, _name in enumerate(
    "january february march april may june july august september october "
    "november december".split(),
    start=1,
):
    _MONTHS[_name] = _i
    _MONTHS[_name[:3]] = _i
_MONTHS["sept"] = 9

_WEEKDAYS = {
    name: i
    for i, name in enumerate(
        "monday tuesday wednesday thursday friday saturday sunday".split()
    )
}

_WORD_NUMBERS = {
    name: i
    for i, name in enumerate(
        "one two three four five six seven eight nine ten".split(), start=1
    )
}

_DAYS_IN_MONTH = (31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)

_MONTH_RE = "|".join(sorted(_MONTHS, key=len, reverse=True))
_WEEKDAY_RE = "|".join(_WEEKDAYS)
_NUM_RE = "|".join(_WORD_NUMBERS)
_ORD = r"(?:st|nd|rd|th)?"

# Fragments reused by the entity tagger so every DATE span it emits is
# inside this grammar.
DATE_FRAGMENTS = [
    r"day\s+after\s+tomorrow",
    r"day\s+before\s+yesterday",
    r"today",
    r"tomorrow",
    r"yesterday",
    r"this\s+weekend",
    rf"(?:this\s+|coming\s+|next\s+)?(?:{_WEEKDAY_RE})",
    rf"in\s+(?:\d{{1,3}}|{_NUM_RE})\s+days?",
    rf"(?:\d{{1,3}}|{_NUM_RE})\s+days?\s+later",
    rf"(?:{_MONTH_RE})\.?\s+\d{{1,2}}{_ORD}(?:\s*,?\s*\d{{4}})?",
    rf"\d{{1,2}}{_ORD}\s+(?:of\s+)?(?:{_MONTH_RE})(?:\s*,?\s*\d{{4}})?",
    r"\d{4}-\d{2}-\d{2}",
    r"\d{1,2}[/.]\d{1,2}(?:[/.]\d{4})?",
]


@dataclass(frozen=True)
class DateMention:
    """A date surface resolved against an anchor (publication) date."""

    surface: str
    anchor: date
    resolved: date | None
    resolved_end: date | None
    direction: str

    def iso(self) -> str | None:
        if self.resolved is None:
            return None
        if self.resolved_end is not None and self.resolved_end != self.resolved:
            return f"{self.resolved.isoformat()}/{self.resolved_end.isoformat()}"
        return self.resolved.isoformat()


def _clean(surface: str) -> str:
    s = re.sub(r"\s+", " ", surface.strip().lower())
    s = re.sub(r"[.!?,;:]+$", "", s)
    for prefix in ("on the ", "on ", "the "):
        if s.startswith(prefix):
            s = s[len(prefix) :]
            break
    return s


def _number(text: str) -> int:
    return _WORD_NUMBERS.get(text, 0) or int(text)


@lru_cache(maxsize=65536)
def _parse(surface: str):
    """Parse a surface into an anchor-independent form, or None."""
    s = _clean(surface)
    if s in ("today", "tonight"):
        return ("offset", 0)
    if s == "tomorrow":
        return ("offset", 1)
    if s == "day after tomorrow":
        return ("offset", 2)
    if s == "yesterday":
        return ("offset", -1)
    if s == "day before yesterday":
        return ("offset", -2)
    if s == "this weekend":
        return ("weekend",)

    m = re.fullmatch(rf"(this|coming|next)?\s*({_WEEKDAY_RE})", s)
    if m:
        flavor = "next" if m.group(1) == "next" else "nearest"
        return ("weekday", _WEEKDAYS[m.group(2)], flavor)

    m = re.fullmatch(rf"in (\d{{1,3}}|{_NUM_RE}) days?", s)
    if m:
        return ("offset", _number(m.group(1)))
    m = re.fullmatch(rf"(\d{{1,3}}|{_NUM_RE}) days? later", s)
    if m:
        return ("offset", _number(m.group(1)))

    m = re.fullmatch(rf"({_MONTH_RE})\.? (\d{{1,2}}){_ORD}(?:,? (\d{{4}}))?", s)
    if m:
        month, day = _MONTHS[m.group(1)], int(m.group(2))
        return _month_day(month, day, m.group(3))
    m = re.fullmatch(rf"(\d{{1,2}}){_ORD} (?:of )?({_MONTH_RE})(?:,? (\d{{4}}))?", s)
    if m:
        month, day = _MONTHS[m.group(2)], int(m.group(1))
        return _month_day(month, day, m.group(3))

    m = re.fullmatch(r"(\d{4})-(\d{2})-(\d{2})", s)
    if m:
        return _absolute(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    m = re.fullmatch(r"(\d{1,2})[/.](\d{1,2})(?:[/.](\d{4}))?", s)
    if m:
        return ("numeric", int(m.group(1)), int(m.group(2)), m.group(3))
    return None


def _month_day(month: int, day: int, year: str | None):
    if not 1 <= day <= _DAYS_IN_MONTH[month - 1]:
        return None
    if year is not None:
        return _absolute(int(year), month, day)
    return ("monthday", month, day)


def _absolute(year: int, month: int, day: int):
    try:
        return ("absolute", date(year, month, day))
    except ValueError:
        return None


def _resolve(parsed, anchor: date, month_first: bool):
    """Resolve a parsed form to (start, end) dates, or None."""
    kind = parsed[0]
    if kind == "absolute":
        return parsed[1], parsed[1]
    if kind == "offset":
        resolved = anchor + timedelta(days=parsed[1])
        return resolved, resolved
    if kind == "weekday":
        _, target, flavor = parsed
        if flavor == "next":
            next_monday = anchor + timedelta(days=7 - anchor.weekday())
            resolved = next_monday + timedelta(days=target)
        else:
            resolved = anchor + timedelta(
                days=(target - anchor.weekday() - 1) % 7 + 1
            )
        return resolved, resolved
    if kind == "weekend":
        saturday = anchor + timedelta(days=5 - anchor.weekday())
        return saturday, saturday + timedelta(days=1)
    if kind == "monthday":
        _, month, day = parsed
        for year in range(anchor.year, anchor.year + 9):
            try:
                candidate = date(year, month, day)
            except ValueError:
                continue
            if candidate >= anchor:
                return candidate, candidate
        return None
    if kind == "numeric":
        _, first, second, year = parsed
        day, month = (second, first) if month_first else (first, second)
        if not 1 <= month <= 12:
            return None
        parsed2 = _month_day(month, day, year)
        if parsed2 is None:
            return None
        return _resolve(parsed2, anchor, month_first)
    raise AssertionError(f"unknown parse kind {kind!r}")


def normalize(surface: str, anchor: date, month_first: bool = False) -> DateMention:
    """Resolve a date surface against an anchor date.

    Unparseable or impossible surfaces yield direction "ambiguous" with no
    resolved date; ambiguity is a value, never an error.
    """
    parsed = _parse(surface)
    span = _resolve(parsed, anchor, month_first) if parsed is not None else None
    if span is None:
        return DateMention(surface, anchor, None, None, AMBIGUOUS)
    start, end = span
    if start > anchor:
        direction = FUTURE
    elif end < anchor:
        direction = PAST
    else:
        direction = SAME_DAY
    return DateMention(surface, anchor, start, end, direction)


def is_future_mention(mention: DateMention) -> bool:
    """True only for strictly-future resolutions; ambiguous is not future."""
    return mention.direction == FUTURE


def merge_adjacent_date_spans(spans, text: str):
    """Merge DATE/TIME spans separated only by whitespace or a comma.

    Taggers may emit "february" and "16" as separate spans; downstream
    normalization needs the combined surface. Non-temporal spans pass
    through untouched. Input must be sorted by char_start.
    """
    merged = []
    for span in spans:
        if merged and span.label in ("DATE", "TIME"):
            prev = merged[-1]
            gap = text[prev.char_end : span.char_start]
            if (
                prev.label in ("DATE", "TIME")
                and prev.sentence_index == span.sentence_index
                and re.fullmatch(r"[\s,]*", gap)
            ):
                label = "DATE" if "DATE" in (prev.label, span.label) else "TIME"
                merged[-1] = dataclasses.replace(
                    prev,
                    label=label,
                    char_end=span.char_end,
                    surface=text[prev.char_start : span.char_end],
                )
                continue
        merged.append(span)
    return merged


def grammar_surfaces():
    """Yield one instance of every surface the grammar accepts.

    This is the declared surface set used by the exhaustive sweep and the
    fuzz harness: deictic forms, all weekday variants, day offsets up to
    30, "this weekend", and every valid month-day in each supported
    spelling (with 2017 standing in for the year-bearing forms).
    """
    yield from ("today", "tomorrow", "day after tomorrow", "yesterday")
    yield "this weekend"
    for name in _WEEKDAYS:
        yield name
        yield f"this {name}"
        yield f"coming {name}"
        yield f"next {name}"
    for n in range(1, 31):
        yield f"in {n} days"
        yield f"{n} days later"
    for word in _WORD_NUMBERS:
        yield f"in {word} days"
        yield f"{word} days later"
    ordinals = {1: "st", 2: "nd", 3: "rd", 21: "st", 22: "nd", 23: "rd", 31: "st"}
    for name, month in _MONTHS.items():
        if len(name) <= 4:
            continue
        for day in range(1, _DAYS_IN_MONTH[month - 1] + 1):
            yield f"{name} {day}"
            yield f"{name} {day}{ordinals.get(day, 'th')}"
            yield f"{day} {name}"
            yield f"{day}/{month}"
            try:
                date(2017, month, day)
            except ValueError:
                continue
            yield f"{name} {day}, 2017"
            yield f"2017-{month:02d}-{day:02d}"
            yield f"{day}/{month}/2017"
