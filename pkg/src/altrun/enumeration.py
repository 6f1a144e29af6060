"""Exhaustive generation of permutation-like objects and their statistics.

Classes of objects (all streamed in lexicographic order of the printed word):

    perm           permutations of [n], as tuples
    signed         signed permutations: |word| is a permutation of [n]
    signed_hat     signed permutations with a positive first letter
    derangement    fixed-point-free permutations
    stirling       words over {1,1,...,n,n} with the nesting condition
    dual_stirling  images of Stirling words under the doubling map

Statistics are plain functions on tuples; `stat` dispatches by class name and
`distribution` folds a statistic tuple into an exact polynomial.  These
distributions are the brute-force oracle for the recurrence triangles.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidStirlingWord, SizeLimit, StatClassMismatch
from .multipoly import MultiPoly

Word = tuple[int, ...]

DEFAULT_BUDGET = 10**8

CLASSES = ("perm", "signed", "signed_hat", "derangement", "stirling", "dual_stirling")


def enumeration_budget() -> int:
    """Object budget; override with the ALTRUN_BUDGET environment variable."""
    raw = os.environ.get("ALTRUN_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    return int(raw)


def _derangement_count(n: int) -> int:
    a, b = 1, 0  # D_0, D_1
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return b


def _double_factorial_odd(n: int) -> int:
    """(2n-1)!! with the empty product equal to 1."""
    out = 1
    for v in range(1, 2 * n, 2):
        out *= v
    return out


def cardinality(kind: str, n: int) -> int:
    if kind == "perm":
        return math.factorial(n)
    if kind == "signed":
        return 2**n * math.factorial(n)
    if kind == "signed_hat":
        if n < 1:
            raise ValueError("signed_hat requires n >= 1")
        return 2 ** (n - 1) * math.factorial(n)
    if kind == "derangement":
        return _derangement_count(n)
    if kind in ("stirling", "dual_stirling"):
        return _double_factorial_odd(n)
    raise ValueError(f"unknown class {kind!r}")


def _check_budget(kind: str, n: int) -> None:
    count = cardinality(kind, n)
    budget = enumeration_budget()
    if count > budget:
        raise SizeLimit(f"{kind} n={n} has {count} objects, budget is {budget}")


def _signed_words(n: int, first_positive: bool) -> Iterator[Word]:
    values = [v for v in range(-n, n + 1) if v != 0]
    word: list[int] = []
    used = [False] * (n + 1)

    def rec() -> Iterator[Word]:
        if len(word) == n:
            yield tuple(word)
            return
        for v in values:
            if used[abs(v)]:
                continue
            if first_positive and not word and v < 0:
                continue
            used[abs(v)] = True
            word.append(v)
            yield from rec()
            word.pop()
            used[abs(v)] = False

    return rec()


def _stirling_words(n: int) -> Iterator[Word]:
    # Open values nest (LIFO): a value opened inside the pair of t must
    # exceed t, so the smallest legal next letter is always "close the top",
    # then unused values above the top in increasing order.
    word: list[int] = []
    stack: list[int] = []
    used = [False] * (n + 1)

    def rec() -> Iterator[Word]:
        if len(word) == 2 * n:
            yield tuple(word)
            return
        top = stack[-1] if stack else 0
        if stack:
            word.append(top)
            closed = stack.pop()
            yield from rec()
            stack.append(closed)
            word.pop()
        for v in range(top + 1, n + 1):
            if used[v]:
                continue
            used[v] = True
            stack.append(v)
            word.append(v)
            yield from rec()
            word.pop()
            stack.pop()
            used[v] = False

    return rec()


def generate(kind: str, n: int) -> Iterator[Word]:
    """Stream every object of the class exactly once, lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_budget(kind, n)
    if kind == "perm":
        return iter(permutations(range(1, n + 1)))
    if kind == "signed":
        return _signed_words(n, first_positive=False)
    if kind == "signed_hat":
        return _signed_words(n, first_positive=True)
    if kind == "derangement":
        return (
            w for w in permutations(range(1, n + 1))
            if all(w[i] != i + 1 for i in range(n))
        )
    if kind == "stirling":
        return _stirling_words(n)
    if kind == "dual_stirling":
        # The doubling map is lex-order-preserving: equal prefixes map to
        # equal prefixes, and both images of a smaller letter are smaller
        # than both images of a larger one.
        return (dual_map(w) for w in _stirling_words(n))
    raise ValueError(f"unknown class {kind!r}")


# ---------------------------------------------------------------------------
# word statistics
# ---------------------------------------------------------------------------


def _runs(word: Sequence[float]) -> int:
    """Number of maximal strictly monotone segments; 0 for short words."""
    if len(word) < 2:
        return 0
    count = 1
    prev_dir = 0
    for a, b in zip(word, word[1:]):
        if a == b:
            raise ValueError("runs undefined for words with equal neighbours")
        direction = 1 if b > a else -1
        if prev_dir and direction != prev_dir:
            count += 1
        prev_dir = direction
    return count


def altrun(word: Sequence[int]) -> int:
    """Alternating runs of a word with distinct entries.

    >>> altrun((3, 2, 4, 1, 5, 6))
    4
    """
    return _runs(word)


def udrun(word: Sequence[int]) -> int:
    """Alternating runs after prepending 0.

    >>> udrun((3, 2, 4, 1, 5, 6))
    5
    """
    return _runs((0, *word))


def descents(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def longest_alternating_subsequence(word: Sequence[int]) -> int:
    """Length of the longest subsequence shaped a1 > a2 < a3 > ...

    Quadratic DP: track the best subsequence ending at each position whose
    last comparison was a descent / an ascent.
    """
    n = len(word)
    if n == 0:
        return 0
    down = [0] * n  # last step was a descent (length >= 2)
    up = [0] * n  # last step was an ascent; only valid after a descent
    best = 1
    for j in range(n):
        for i in range(j):
            if word[i] > word[j]:
                down[j] = max(down[j], max(up[i], 1) + 1)
            elif word[i] < word[j] and down[i]:
                up[j] = max(up[j], down[i] + 1)
        best = max(best, down[j], up[j])
    return best


def descents_type_b(word: Sequence[int]) -> int:
    """Type B descents of a signed word, counting position 0 against 0."""
    return descents((0, *word))


def signed_altrun(word: Sequence[int]) -> int:
    """Alternating runs of the 0-prepended signed word.

    >>> signed_altrun((2, -1))
    2
    """
    return _runs((0, *word))


def fixed_points(word: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(word, start=1) if v == i)


def cycle_canonical(word: Sequence[int]) -> tuple[Word, ...]:
    """Standard cycle decomposition: each cycle starts at its minimum and
    cycles are ordered by increasing minimum.

    >>> cycle_canonical((3, 1, 2))
    ((1, 3, 2),)
    """
    n = len(word)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        v = word[start - 1]
        while v != start:
            cycle.append(v)
            seen[v] = True
            v = word[v - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def cycles_to_word(cycles: Iterable[Sequence[int]], n: int) -> Word:
    """Inverse of cycle_canonical."""
    word = [0] * n
    for cycle in cycles:
        for i, v in enumerate(cycle):
            word[v - 1] = cycle[(i + 1) % len(cycle)]
    if 0 in word:
        raise ValueError("cycles do not cover [n]")
    return tuple(word)


def _cycle_scan(cycle: Sequence[int]) -> tuple[int, int, int]:
    """(peaks, double ascents, double descents) of a canonical cycle word,
    scanning positions 2..k with an infinity sentinel appended."""
    k = len(cycle)
    peaks = dasc = ddes = 0
    for i in range(1, k):
        prev = cycle[i - 1]
        cur = cycle[i]
        nxt = cycle[i + 1] if i + 1 < k else math.inf
        if prev < cur > nxt:
            peaks += 1
        elif prev < cur < nxt:
            dasc += 1
        elif prev > cur > nxt:
            ddes += 1
    return peaks, dasc, ddes


def cycle_runs(cycle: Sequence[int]) -> int:
    """Alternating runs of a canonical cycle word with infinity appended."""
    return _runs((*cycle, math.inf))


def crun_of_cycles(cycles: Iterable[Sequence[int]]) -> int:
    return sum(cycle_runs(c) for c in cycles)


def crun(word: Sequence[int]) -> int:
    """Cycle-run statistic: total cycle runs over the standard decomposition.

    >>> crun((3, 1, 2))
    3
    """
    return crun_of_cycles(cycle_canonical(word))


def cycle_count(word: Sequence[int]) -> int:
    return len(cycle_canonical(word))


def cycle_peaks(word: Sequence[int]) -> int:
    return sum(_cycle_scan(c)[0] for c in cycle_canonical(word))


def cycle_double_ascents(word: Sequence[int]) -> int:
    return sum(_cycle_scan(c)[1] for c in cycle_canonical(word))


def cycle_double_descents(word: Sequence[int]) -> int:
    return sum(_cycle_scan(c)[2] for c in cycle_canonical(word))


def _check_stirling(word: Sequence[int]) -> int:
    """Validate the Stirling nesting condition; return the order n."""
    if len(word) % 2:
        raise InvalidStirlingWord("odd length")
    n = len(word) // 2
    counts = [0] * (n + 1)
    open_stack: list[int] = []
    for v in word:
        if not 1 <= v <= n:
            raise InvalidStirlingWord(f"letter {v} outside 1..{n}")
        counts[v] += 1
        if counts[v] > 2:
            raise InvalidStirlingWord(f"letter {v} occurs more than twice")
        if open_stack and open_stack[-1] == v:
            open_stack.pop()
        else:
            if open_stack and v < open_stack[-1]:
                raise InvalidStirlingWord(
                    f"letter {v} inside the pair of {open_stack[-1]}"
                )
            open_stack.append(v)
    if open_stack:
        raise InvalidStirlingWord("unclosed letters")
    return n


def ascent_plateaus(word: Sequence[int]) -> int:
    """Positions i >= 2 with word[i-1] < word[i] == word[i+1] (1-based)."""
    return sum(
        1
        for i in range(1, len(word) - 1)
        if word[i - 1] < word[i] == word[i + 1]
    )


def left_ascent_plateaus(word: Sequence[int]) -> int:
    """Ascent plateaus with a 0 boundary prepended."""
    padded = (0, *word)
    return sum(
        1
        for i in range(1, len(padded) - 1)
        if padded[i - 1] < padded[i] == padded[i + 1]
    )


def flag_ascent_plateaus(word: Sequence[int]) -> int:
    """fap = ap + la.

    >>> flag_ascent_plateaus((1, 1, 2, 2))
    3
    """
    return ascent_plateaus(word) + left_ascent_plateaus(word)


def dual_map(word: Sequence[int]) -> Word:
    """Send the first copy of j to 2j and the second to 2j-1.

    >>> dual_map((2, 2, 1, 3, 3, 1))
    (4, 3, 2, 6, 5, 1)
    """
    _check_stirling(word)
    seen: set[int] = set()
    out = []
    for v in word:
        if v in seen:
            out.append(2 * v - 1)
        else:
            seen.add(v)
            out.append(2 * v)
    return tuple(out)


# ---------------------------------------------------------------------------
# statistic dispatch
# ---------------------------------------------------------------------------

_PERM_STATS = {
    "altrun": altrun,
    "udrun": udrun,
    "des": descents,
    "as": longest_alternating_subsequence,
    "crun": crun,
    "cyc": cycle_count,
    "fix": fixed_points,
    "cpk": cycle_peaks,
    "cdasc": cycle_double_ascents,
    "cddes": cycle_double_descents,
}

_SIGNED_STATS = {
    "des_B": descents_type_b,
    "altrun_B": signed_altrun,
}

_STIRLING_STATS = {
    "ap": ascent_plateaus,
    "la": left_ascent_plateaus,
    "fap": flag_ascent_plateaus,
}

_STATS_BY_CLASS = {
    "perm": _PERM_STATS,
    "derangement": _PERM_STATS,
    "dual_stirling": _PERM_STATS,
    "signed": _SIGNED_STATS,
    "signed_hat": _SIGNED_STATS,
    "stirling": _STIRLING_STATS,
}

STAT_NAMES = tuple(
    sorted(set(_PERM_STATS) | set(_SIGNED_STATS) | set(_STIRLING_STATS))
)


def stat(word: Sequence[int], name: str, kind: str = "perm") -> int:
    """Evaluate a named statistic on an object of the given class."""
    if kind not in _STATS_BY_CLASS:
        raise ValueError(f"unknown class {kind!r}")
    table = _STATS_BY_CLASS[kind]
    if name not in table:
        raise StatClassMismatch(f"statistic {name!r} undefined for class {kind!r}")
    return table[name](tuple(word))


def distribution(
    kind: str,
    n: int,
    stats: Sequence[tuple[str, str]],
) -> MultiPoly:
    """Sum over all objects of prod variable^statistic, exactly.

    `stats` is a sequence of (statistic name, variable name) pairs.

    >>> str(distribution("perm", 3, [("altrun", "x")]))
    '2*x + 4*x^2'
    """
    table = _STATS_BY_CLASS.get(kind)
    if table is None:
        raise ValueError(f"unknown class {kind!r}")
    fns = []
    for stat_name, _ in stats:
        if stat_name not in table:
            raise StatClassMismatch(
                f"statistic {stat_name!r} undefined for class {kind!r}"
            )
        fns.append(table[stat_name])
    variables = tuple(var for _, var in stats)
    counts: dict[tuple[int, ...], int] = {}
    for word in generate(kind, n):
        key = tuple(fn(word) for fn in fns)
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(variables, {k: Fraction(v) for k, v in counts.items()})


def format_word(word: Sequence[int], kind: str = "perm") -> str:
    """Objects print as words; signed words keep explicit signs."""
    if kind in ("signed", "signed_hat"):
        return " ".join(f"{v:+d}" for v in word)
    return "".join(str(v) for v in word)


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycles)
