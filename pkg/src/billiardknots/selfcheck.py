"""Built-in consistency checks wiring the formulas against the brute force.

Each check returns (name, ok, detail).  The quick set runs in a few
seconds; --deep repeats the expensive audits at the sizes used by the
package's acceptance tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

from . import counting, distributions, insertions, oracle, words

Check = tuple[str, bool, str]


def _all_words(n: int) -> Iterator[str]:
    for value in range(1 << n):
        yield format(value, f"0{n}b") if n else ""


def check_reduce_engines(max_n: int) -> Check:
    """Naive strategy loop and the run-length engine agree on every word."""
    for n in range(max_n + 1):
        for w in _all_words(n):
            slow = words.reduce(w)
            r = words.runs(w)
            fast = words.RunDecomposition(
                *words.reduce_runs(r.first_bit, r.run_lengths)
            ).word()
            if slow != fast:
                return ("reduce-engines", False, f"{w}: {slow} != {fast}")
    return ("reduce-engines", True, f"all words up to length {max_n}")


def check_confluence(max_n: int) -> Check:
    """Every move order reaches one terminal (or only unknot leftovers)."""
    for n in range(max_n + 1):
        for w in _all_words(n):
            terminals = oracle.all_terminal_words(w)
            if len(terminals) > 1:
                if not all(t in words.UNKNOT_FORMS for t in terminals):
                    return ("confluence", False, f"{w} -> {sorted(terminals)}")
    return ("confluence", True, f"all words up to length {max_n}")


def check_counting(limit: int) -> Check:
    """Binomial summation identities used by the closed insertion count."""
    for n in range(limit + 1):
        for m in range(n + 1):
            lhs1 = sum(k * counting.binomial(n, k) for k in range(m))
            if 2 * lhs1 != n * counting.binomial_lt(n, m) - m * counting.binomial(n, m):
                return ("counting-identities", False, f"first identity at {n=} {m=}")
            lhs2 = sum(k * (k - 1) * counting.binomial(n, k) for k in range(m))
            rhs2 = n * (n - 1) * counting.binomial_lt(n, m) - m * (
                2 * m + n - 3
            ) * counting.binomial(n, m)
            if 4 * lhs2 != rhs2:
                return ("counting-identities", False, f"second identity at {n=} {m=}")
    return ("counting-identities", True, f"n up to {limit}")


def check_insertion_counts(max_m: int) -> Check:
    """Closed counting formulas equal brute-force enumeration sizes."""
    for base in ("101", "0101"):
        for m in range(max_m + 1):
            expected = len(oracle.enumerate_insertions(base, m, oracle.INTERNAL_ONLY))
            got = counting.count_internal(len(base), m)
            if expected != got:
                return ("insertion-counts", False, f"I'({base},{m}): {expected} != {got}")
            expected = len(oracle.enumerate_insertions(base, m, oracle.ALL))
            got = counting.count_full(m, len(base))
            if expected != got:
                return ("insertion-counts", False, f"I({base},{m}): {expected} != {got}")
    return ("insertion-counts", True, f"m up to {max_m}")


def check_distribution(lengths) -> Check:
    """Formula probabilities match exhaustive enumeration, both modes."""
    for n in lengths:
        for mode in (words.MIRROR_IDENTIFIED, words.CHIRAL):
            dist = oracle.exact_distribution(n, mode)
            for canonical, cnt in dist.counts.items():
                p = distributions.knot_probability(dist.classes[canonical], n)
                if p.fraction != Fraction(cnt, dist.total):
                    return (
                        "distribution",
                        False,
                        f"n={n} {mode} {canonical}: {p} != {cnt}/{dist.total}",
                    )
            pmf = distributions.crossing_pmf(n)
            for c, cnt in dist.crossing_counts.items():
                mass = pmf.unknot_mass if c == 0 else pmf.masses[c]
                if mass.fraction != Fraction(cnt, dist.total):
                    return ("distribution", False, f"n={n} c={c} mismatch")
    return ("distribution", True, f"n in {sorted(lengths)}")


def check_normalization(max_n: int) -> Check:
    """Crossing pmf masses sum to exactly 1."""
    for n in range(1, max_n + 1):
        if n % 3 == 2:
            continue
        if distributions.crossing_pmf(n).total() != 1:
            return ("pmf-normalization", False, f"n={n}")
    return ("pmf-normalization", True, f"n up to {max_n}")


def check_location_roundtrip(max_len: int, max_m: int) -> Check:
    """Location map inverts reconstruction on every enumerated insertion."""
    for n in range(max_len + 1):
        for w in _all_words(n):
            for m in range(max_m + 1):
                for wp in oracle.enumerate_insertions(w, m, oracle.INTERNAL_ONLY):
                    loc = insertions.location_map(w, wp)
                    if loc is None:
                        return ("location-roundtrip", False, f"{w} -> {wp}: no map")
                    trace = insertions.reconstruct(w, m, loc)
                    if trace.word != wp:
                        return ("location-roundtrip", False, f"{w} -> {wp} via {loc}")
    return ("location-roundtrip", True, f"len <= {max_len}, m <= {max_m}")


def check_alpha_gap(lengths) -> Check:
    """Trefoil rate gap shrinks along increasing lengths."""
    trefoil = words.knot_class("101")
    gaps = [distributions.alpha_rate(trefoil, n).gap for n in lengths]
    ok = all(a > b for a, b in zip(gaps, gaps[1:]))
    return ("alpha-gap", ok, " > ".join(f"{g:.4f}" for g in gaps))


def run_selfcheck(deep: bool = False) -> list[Check]:
    quick: list[Callable[[], Check]] = [
        lambda: check_reduce_engines(9),
        lambda: check_confluence(8),
        lambda: check_counting(20),
        lambda: check_insertion_counts(2),
        lambda: check_distribution((3, 4, 6, 7)),
        lambda: check_normalization(21),
        lambda: check_location_roundtrip(3, 2),
    ]
    deep_only: list[Callable[[], Check]] = [
        lambda: check_reduce_engines(12),
        lambda: check_confluence(10),
        lambda: check_counting(40),
        lambda: check_insertion_counts(3),
        lambda: check_distribution((1, 3, 4, 6, 7, 9, 10, 12, 13)),
        lambda: check_normalization(40),
        lambda: check_location_roundtrip(4, 3),
        lambda: check_alpha_gap((99, 300, 999)),
    ]
    checks = deep_only if deep else quick
    return [fn() for fn in checks]
