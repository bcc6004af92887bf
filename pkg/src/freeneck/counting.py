"""Exact counts of reduced words, necklaces and bracelets in F_g.

Everything here is integer arithmetic on Python ints, so nothing wraps no
matter how large ``(2g-1)**l`` gets.
"""
from enum import Enum


class CountKind(str, Enum):
    REDUCED_WORDS = "reduced-words"
    NECKLACES = "necklaces"
    BRACELETS = "bracelets"
    LYNDON = "lyndon"
    PRIME_WORDS = "prime-words"
    PRIME_BRACELETS = "prime-bracelets"


def _check_positive(name, n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def factorize(n):
    """Prime factorization as a ``{prime: exponent}`` dict (trial division)."""
    _check_positive("n", n)
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n):
    _check_positive("n", n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n):
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n):
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def _exact_div(num, den, what):
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def reduced_words(g, length):
    """Number of freely and cyclically reduced words of the given length."""
    _check_positive("g", g)
    _check_positive("length", length)
    base = (2 * g - 1) ** length
    return base + 1 if length % 2 else base + 2 * g - 1


def necklaces(g, length):
    total = sum(euler_phi(d) * reduced_words(g, length // d) for d in divisors(length))
    return _exact_div(total, length, f"necklaces({g}, {length})")


def prime_words(g, length):
    _check_positive("g", g)
    return sum(mobius(length // d) * reduced_words(g, d) for d in divisors(length))


def bracelets(g, length):
    # necklaces pair up with their inverse classes, never self-paired
    return _exact_div(necklaces(g, length), 2, f"bracelets({g}, {length})")


def lyndon(g, length):
    return _exact_div(prime_words(g, length), length, f"lyndon({g}, {length})")


def prime_bracelets(g, length):
    return _exact_div(prime_words(g, length), 2 * length, f"prime_bracelets({g}, {length})")


_DISPATCH = {
    CountKind.REDUCED_WORDS: reduced_words,
    CountKind.NECKLACES: necklaces,
    CountKind.BRACELETS: bracelets,
    CountKind.LYNDON: lyndon,
    CountKind.PRIME_WORDS: prime_words,
    CountKind.PRIME_BRACELETS: prime_bracelets,
}


def count(kind, g, length):
    """Exact count for ``kind`` (a :class:`CountKind` or its string value)."""
    return _DISPATCH[CountKind(kind)](g, length)


def enumeration_kind(kind, aperiodic):
    """CountKind matching a generator run of ``kind`` in {necklace, bracelet}."""
    if kind == "necklace":
        return CountKind.LYNDON if aperiodic else CountKind.NECKLACES
    if kind == "bracelet":
        return CountKind.PRIME_BRACELETS if aperiodic else CountKind.BRACELETS
    raise ValueError(f"kind must be 'necklace' or 'bracelet', got {kind!r}")
