"""Brute-force ground truth: exhaustive enumeration of words and insertions.

Deliberately dumb.  These routines exist so that every closed formula and
clever algorithm in the package can be checked against direct enumeration
on small instances; they trade speed for obviousness and carry explicit
resource guards.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .words import (
    MIRROR_IDENTIFIED,
    KnotClass,
    Word,
    available_moves,
    check_word,
    knot_class,
    reduce_runs,
)

INTERNAL_ONLY = "internal-only"
ALL = "all"


class ResourceGuardError(RuntimeError):
    """Raised when an enumeration would exceed its configured size guard."""


@dataclass
class ExactDist:
    """Knot counts over all 2**n words of length n."""

    n: int
    mode: str
    counts: dict[Word, int]  # canonical word of the class -> number of words
    classes: dict[Word, KnotClass] = field(repr=False)
    crossing_counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return 1 << self.n

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "total": str(self.total),
            "counts": {k: str(v) for k, v in sorted(self.counts.items())},
            "crossing_counts": {
                str(c): str(v) for c, v in sorted(self.crossing_counts.items())
            },
        }


def _terminal(word: Word) -> Word:
    """reduce() by way of run lengths; skips validation for the hot loop."""
    if not word:
        return ""
    lengths = []
    current = 1
    for prev, ch in zip(word, word[1:]):
        if ch == prev:
            current += 1
        else:
            lengths.append(current)
            current = 1
    lengths.append(current)
    first, reduced = reduce_runs(int(word[0]), lengths)
    return _rebuild(first, reduced)


def _rebuild(first_bit: int, lengths: tuple[int, ...]) -> Word:
    bit = first_bit
    parts = []
    for n in lengths:
        parts.append(("1" if bit else "0") * n)
        bit ^= 1
    return "".join(parts)


def tally_terminals(n: int, start: int, stop: int) -> Counter:
    """Terminal-word counts over the words numbered start..stop-1.

    Word number v is the n-bit binary expansion of v.  Tallies over
    disjoint ranges add up to the full tally, so ranges can be processed
    in any partition (or in parallel) with identical totals.
    """
    counts: Counter[Word] = Counter()
    for value in range(start, stop):
        word = format(value, f"0{n}b") if n else ""
        counts[_terminal(word)] += 1
    return counts


def exact_distribution(
    n: int, mode: str = MIRROR_IDENTIFIED, *, max_n: int = 22, chunk: int = 1 << 16
) -> ExactDist:
    """Reduce every one of the 2**n words and tally the resulting knots.

    Counts are grouped by the canonical word of each knot class and a
    crossing-number histogram is tallied alongside.  Words are streamed in
    fixed ranges via tally_terminals and merged; only the (small) set of
    distinct terminal words is ever held at once.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 3 == 2:
        raise ValueError(f"invalid length {n}: need n = 0 or 1 mod 3")
    if n > max_n:
        raise ResourceGuardError(f"n={n} exceeds the enumeration guard {max_n}")

    total = 1 << n
    terminal_counts: Counter[Word] = Counter()
    for start in range(0, total, chunk):
        terminal_counts.update(tally_terminals(n, start, min(start + chunk, total)))

    counts: dict[Word, int] = {}
    classes: dict[Word, KnotClass] = {}
    crossing: Counter[int] = Counter()
    for terminal, tally in terminal_counts.items():
        cls = knot_class(terminal, mode)
        counts[cls.canonical] = counts.get(cls.canonical, 0) + tally
        classes[cls.canonical] = cls
        crossing[cls.crossing_number] += tally
    return ExactDist(n, mode, counts, classes, dict(crossing))


def enumerate_insertions(
    w: Word,
    m: int,
    scope: str = ALL,
    *,
    max_len: int = 8,
    max_insertions: int = 4,
) -> set[Word]:
    """All words reachable from w by exactly m single-triple insertions.

    scope INTERNAL_ONLY permits 000/111 at any position; scope ALL also
    permits the four external affixes.  Levels are deduplicated as they are
    built, breadth first.
    """
    check_word(w)
    if scope not in (INTERNAL_ONLY, ALL):
        raise ValueError(f"unknown scope {scope!r}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(w) > max_len or m > max_insertions:
        raise ResourceGuardError(
            f"enumerate_insertions({len(w)=}, {m=}) exceeds guard "
            f"({max_len=}, {max_insertions=})"
        )
    level = {w}
    for _ in range(m):
        nxt = set()
        for u in level:
            for pos in range(len(u) + 1):
                head, tail = u[:pos], u[pos:]
                nxt.add(head + "000" + tail)
                nxt.add(head + "111" + tail)
            if scope == ALL:
                nxt.add("001" + u)
                nxt.add("110" + u)
                nxt.add(u + "011")
                nxt.add(u + "100")
        level = nxt
    return level


def all_terminal_words(w: Word, *, max_len: int = 13) -> set[Word]:
    """Terminal words over every possible order of reduction moves.

    A singleton answer on every input certifies that the rewriting system
    is confluent for that word; multi-element answers can only contain
    unknot leftovers.
    """
    check_word(w)
    if len(w) > max_len:
        raise ResourceGuardError(f"word length {len(w)} exceeds guard {max_len}")
    memo: dict[Word, frozenset] = {}

    def explore(u: Word) -> frozenset:
        cached = memo.get(u)
        if cached is not None:
            return cached
        moves = available_moves(u)
        if not moves:
            result = frozenset((u,))
        else:
            acc = set()
            for mv in moves:
                i = mv.position - 1
                acc |= explore(u[:i] + u[i + 3 :])
            result = frozenset(acc)
        memo[u] = result
        return result

    return set(explore(w))
