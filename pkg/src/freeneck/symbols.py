"""Alphabet encoding and word arithmetic in the free group F_g.

Symbols are the integers ``0 .. k-1`` with ``k = 2g``. An even value ``2m`` is
the m-th generator and ``2m + 1`` is its inverse, so every generator sorts
immediately before its own inverse.

Words are plain tuples of symbols. Python indexing is 0-based: ``w[0]`` is the
first letter (``a_1`` in the usual 1-based notation of the generation
algorithms). Functions that take 1-based positions say so explicitly.
"""
from dataclasses import dataclass
from string import ascii_lowercase, ascii_uppercase
from typing import Sequence, Tuple

Word = Tuple[int, ...]

MAX_LETTER_RANK = len(ascii_lowercase)


@dataclass(frozen=True)
class GroupContext:
    """Rank ``g`` of the free group; ``k = 2g`` is the alphabet size."""

    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 1:
            raise ValueError(f"rank g must be a positive integer, got {self.g!r}")

    @property
    def k(self) -> int:
        return 2 * self.g

    @property
    def is_cat(self) -> bool:
        # rank 1 takes O(l) per word (z^l, Z^l), so the generators are not CAT there
        return self.g > 1

    def check_word(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        for s in w:
            if not 0 <= s < self.k:
                raise ValueError(f"symbol {s} out of range for k={self.k}")
        return w


def are_inverses(x: int, y: int) -> bool:
    if x % 2 == 0:
        return x + 1 == y
    return x == y + 1


def inverse_symbol(x: int) -> int:
    if x % 2 == 0:
        return x + 1
    return x - 1


def invert_word(w: Sequence[int]) -> Word:
    """Formal inverse: reverse the word and invert every letter."""
    return tuple(inverse_symbol(s) for s in reversed(w))


def free_reduce(w: Sequence[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    stack = []
    for s in w:
        if stack and are_inverses(stack[-1], s):
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


def is_freely_reduced(w: Sequence[int]) -> bool:
    return all(not are_inverses(w[i], w[i + 1]) for i in range(len(w) - 1))


def reduction_status(w: Sequence[int]) -> Tuple[bool, bool]:
    """Return ``(freely_reduced, cyclically_reduced)``.

    The cyclic flag only looks at the end letters, so it is meaningful on its
    own even when the word is not freely reduced. A single letter is both.
    """
    if not w:
        return True, True
    return is_freely_reduced(w), not are_inverses(w[0], w[-1])


def is_reduced(w: Sequence[int]) -> bool:
    free, cyclic = reduction_status(w)
    return free and cyclic


def cyclic_reduce(w: Sequence[int]) -> Word:
    if not is_freely_reduced(w):
        raise ValueError("cyclic_reduce needs a freely reduced word")
    lo, hi = 0, len(w)
    while hi - lo >= 2 and are_inverses(w[lo], w[hi - 1]):
        lo += 1
        hi -= 1
    return tuple(w[lo:hi])


def conjugate(w: Sequence[int], r: int) -> Word:
    """Freely reduced ``r^-1 w r``."""
    return free_reduce((inverse_symbol(r), *w, r))


def least_rotation(w: Sequence[int]) -> Word:
    """Lexicographically least rotation, via Booth's failure-function method."""
    n = len(w)
    if n == 0:
        raise ValueError("least_rotation of the empty word is undefined")
    s = tuple(w) * 2
    fail = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        c = s[j]
        i = fail[j - best - 1]
        while i != -1 and c != s[best + i + 1]:
            if c < s[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if i == -1 and c != s[best]:
            if c < s[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return s[best:best + n]


def canonical_bracelet(w: Sequence[int]) -> Word:
    """Least rotation of ``w`` or of its inverse, whichever is smaller."""
    if not w:
        raise ValueError("canonical_bracelet of the empty word is undefined")
    if not is_reduced(w):
        raise ValueError(f"word {tuple(w)} is not freely and cyclically reduced")
    return min(least_rotation(w), least_rotation(invert_word(w)))


def format_word(w: Sequence[int], style: str = "letters", g: int = None) -> str:
    """Render a word as ``"aB"`` (letters) or ``"0,3"`` (ints)."""
    if style == "ints":
        return ",".join(str(s) for s in w)
    if style != "letters":
        raise ValueError(f"unknown word style {style!r}")
    if g is not None and g > MAX_LETTER_RANK:
        raise ValueError(f"letters style supports g <= {MAX_LETTER_RANK}; use ints")
    out = []
    for s in w:
        m = s // 2
        if not 0 <= m < MAX_LETTER_RANK:
            raise ValueError(f"symbol {s} has no letter form; use ints")
        out.append(ascii_uppercase[m] if s % 2 else ascii_lowercase[m])
    return "".join(out)


def default_style(g: int) -> str:
    return "letters" if g <= MAX_LETTER_RANK else "ints"


def parse_word(text: str, g: int, style: str = None) -> Word:
    """Inverse of :func:`format_word`. ``style=None`` picks by content."""
    ctx = GroupContext(g)
    text = text.strip()
    if style is None:
        style = "ints" if any(c.isdigit() for c in text) else "letters"
    if not text:
        return ()
    if style == "ints":
        try:
            w = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed ints word {text!r}") from None
        return ctx.check_word(w)
    if style != "letters":
        raise ValueError(f"unknown word style {style!r}")
    w = []
    for c in text:
        if c in ascii_lowercase:
            w.append(2 * ascii_lowercase.index(c))
        elif c in ascii_uppercase:
            w.append(2 * ascii_uppercase.index(c) + 1)
        else:
            raise ValueError(f"character {c!r} is not a generator letter")
    return ctx.check_word(w)
