"""Brute-force reference enumeration.

Walks every one of the ``k**l`` raw words, keeps the reduced ones and maps
each to its canonical representative. Nothing here knows about prenecklaces
or the recursive generators; that independence is the point.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import List

from .symbols import GroupContext, Word, canonical_bracelet, is_reduced, least_rotation

DEFAULT_BUDGET = 10**7

ORACLE_KINDS = ("necklace", "bracelet", "lyndon", "prime-bracelet")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CanonicalSet:
    kind: str
    g: int
    length: int
    words: List[Word]

    def __len__(self):
        return len(self.words)


def is_proper_power(w):
    """True if ``w == u * m`` for some shorter ``u`` and ``m >= 2``."""
    n = len(w)
    return any(n % d == 0 and w == w[:d] * (n // d) for d in range(1, n))


@lru_cache(maxsize=32)
def _rotation_classes(g, length, budget):
    k = GroupContext(g).k
    if k**length > budget:
        raise BudgetExceeded(f"{k}**{length} raw words exceeds the budget of {budget}")
    seen = set()
    for w in product(range(k), repeat=length):
        if is_reduced(w):
            seen.add(least_rotation(w))
    return frozenset(seen)


def brute_enumerate(kind, g, length, budget=DEFAULT_BUDGET):
    if kind not in ORACLE_KINDS:
        raise ValueError(f"kind must be one of {ORACLE_KINDS}, got {kind!r}")
    if length < 1:
        raise ValueError("length must be positive")
    # canonical_bracelet(w) only depends on w's rotation class, so one pass
    # over the raw words serves every kind
    classes = _rotation_classes(g, length, budget)
    if kind in ("bracelet", "prime-bracelet"):
        words = {canonical_bracelet(w) for w in classes}
    else:
        words = set(classes)
    if kind in ("lyndon", "prime-bracelet"):
        words = {w for w in words if not is_proper_power(w)}
    return CanonicalSet(kind, g, length, sorted(words))


def brute_reduced_words(g, length, budget=DEFAULT_BUDGET):
    """All reduced words of the given length, as a sorted list."""
    k = GroupContext(g).k
    if k**length > budget:
        raise BudgetExceeded(f"{k}**{length} raw words exceeds the budget of {budget}")
    return [w for w in product(range(k), repeat=length) if is_reduced(w)]


def oracle_kind(kind, aperiodic):
    """Oracle selector matching a generator run."""
    if kind == "necklace":
        return "lyndon" if aperiodic else "necklace"
    return "prime-bracelet" if aperiodic else "bracelet"
