"""Ground-truth counters and the weakly/strict up-down bijection.

Letters are 1-based throughout: a word over k uses letters 1..k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import BudgetExceeded, LengthOneExcluded, NotUpDown, NotWeaklyUpDown

DEFAULT_BUDGET = 10**8


class WordClass(str, Enum):
    UPDOWN = "updown"
    WEAKLY_UPDOWN = "weakly_updown"
    CYCLIC_UPDOWN = "cyclic_updown"


@dataclass(frozen=True)
class Word:
    k: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {self.k!r}")
        letters = tuple(self.letters)
        for a in letters:
            if not isinstance(a, int) or not 1 <= a <= self.k:
                raise ValueError(f"letter {a!r} outside 1..{self.k}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


def _pattern_ok(letters: Sequence[int], strict: bool) -> bool:
    for i in range(1, len(letters)):
        a, b = letters[i - 1], letters[i]
        # position i (0-based) is even in 1-based terms when i is odd
        if i % 2:
            ok = a < b if strict else a <= b
        else:
            ok = a > b if strict else a >= b
        if not ok:
            return False
    return True


def is_member(w: Word, cls: WordClass | str) -> bool:
    cls = WordClass(cls)
    if cls is WordClass.UPDOWN:
        return _pattern_ok(w.letters, strict=True)
    if cls is WordClass.WEAKLY_UPDOWN:
        return _pattern_ok(w.letters, strict=False)
    n = len(w)
    if n % 2:
        return False
    return _pattern_ok(w.letters, strict=True) and (n == 0 or w.letters[-1] > w.letters[0])


def _members(k: int, n: int, cls: WordClass, first: int) -> Iterator[tuple[int, ...]]:
    """Depth-first walk in odometer order, abandoning a prefix at its first violation."""
    strict = cls is not WordClass.WEAKLY_UPDOWN
    word = [first]
    if n == 1:
        yield tuple(word)
        return

    def extend(pos: int):
        prev = word[-1]
        if pos % 2:  # 1-based position pos+1 is even: ascent into it
            lo, hi = (prev + 1, k) if strict else (prev, k)
        else:
            lo, hi = (1, prev - 1) if strict else (1, prev)
        for a in range(lo, hi + 1):
            word.append(a)
            if pos == n - 1:
                yield tuple(word)
            else:
                yield from extend(pos + 1)
            word.pop()

    yield from extend(1)


def iter_words(k: int, n: int, cls: WordClass | str) -> Iterator[Word]:
    """All members of a class of length n over k, in lexicographic order."""
    cls = WordClass(cls)
    if n == 0:
        yield Word(k, ())
        return
    if cls is WordClass.CYCLIC_UPDOWN and n % 2:
        return
    for first in range(1, k + 1):
        for letters in _members(k, n, cls, first):
            if cls is WordClass.CYCLIC_UPDOWN and letters[-1] <= letters[0]:
                continue
            yield Word(k, letters)


def brute_count(
    k: int,
    n: int,
    cls: WordClass | str,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> int:
    """Count class members among all k**n words by exhaustive search.

    With ``prune=False`` every word of [k]^n is generated and tested, which is
    only useful as a check on the pruned search.
    """
    cls = WordClass(cls)
    if k**n > budget:
        raise BudgetExceeded(f"{k}^{n} words exceed the budget of {budget}")
    if not prune:
        return sum(
            is_member(Word(k, letters), cls)
            for letters in itertools.product(range(1, k + 1), repeat=n)
        )
    # partitioned by first letter; the per-letter sums are added in order
    if n == 0:
        return 1
    if cls is WordClass.CYCLIC_UPDOWN and n % 2:
        return 0
    total = 0
    for first in range(1, k + 1):
        for letters in _members(k, n, cls, first):
            if cls is not WordClass.CYCLIC_UPDOWN or letters[-1] > letters[0]:
                total += 1
    return total


def _dp_step(row: list[int], ascent: bool) -> list[int]:
    k = len(row)
    out = [0] * k
    if ascent:
        acc = 0
        for j in range(k):
            out[j] = acc
            acc += row[j]
    else:
        acc = 0
        for j in range(k - 1, -1, -1):
            out[j] = acc
            acc += row[j]
    return out


def _dp_final(start: list[int], length: int) -> list[int]:
    row = start
    for m in range(2, length + 1):
        row = _dp_step(row, ascent=m % 2 == 0)
    return row


def dp_count(k: int, n: int) -> int:
    """f_{k,n} by a last-letter transfer matrix with prefix sums."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"alphabet size must be a positive integer, got {k!r}")
    if n == 0:
        return 1
    return sum(_dp_final([1] * k, n))


def dp_cyclic_count(k: int, n: int) -> int:
    """a_{k,2n}: the transfer matrix run once per first letter c, keeping last letters > c."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"alphabet size must be a positive integer, got {k!r}")
    if n == 0:
        return 1
    total = 0
    for c in range(k):
        start = [0] * k
        start[c] = 1
        total += sum(_dp_final(start, 2 * n)[c + 1:])
    return total


def weakly_to_updown(w: Word) -> Word:
    """Map a weakly up-down word over k to an up-down word over k + 1.

    Odd positions and strict peaks are kept; every other even position becomes
    the new letter k + 1.  The letter after the end is taken to be 0.
    """
    n = len(w)
    if n == 1:
        raise LengthOneExcluded("the bijection is not defined for length 1")
    if not is_member(w, WordClass.WEAKLY_UPDOWN):
        raise NotWeaklyUpDown(f"{w} is not weakly up-down")
    padded = (0,) + w.letters + (0,)
    out = []
    for i in range(1, n + 1):
        if i % 2 or padded[i - 1] < padded[i] > padded[i + 1]:
            out.append(padded[i])
        else:
            out.append(w.k + 1)
    return Word(w.k + 1, tuple(out))


def updown_to_weakly(u: Word) -> Word:
    """Inverse of weakly_to_updown: replace each top letter by its larger neighbour."""
    n = len(u)
    if n == 1:
        raise LengthOneExcluded("the bijection is not defined for length 1")
    if not is_member(u, WordClass.UPDOWN):
        raise NotUpDown(f"{u} is not up-down")
    if u.k < 2:
        raise ValueError("target alphabet would be empty")
    top = u.k
    padded = (0,) + u.letters + (0,)
    out = [
        padded[i] if padded[i] < top else max(padded[i - 1], padded[i + 1])
        for i in range(1, n + 1)
    ]
    return Word(top - 1, tuple(out))
