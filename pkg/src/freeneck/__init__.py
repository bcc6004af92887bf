"""Reduced necklaces and bracelets (conjugacy classes and relators) in free groups."""
from ._accel import BACKEND, NUMBA_ENABLED
from .counting import CountKind, count
from .generate import (
    WorkCounters,
    bracelets,
    check_inv,
    generate_bracelets,
    generate_from_prefix,
    generate_necklaces,
    iter_words,
    necklaces,
    split_prefixes,
)
from .symbols import (
    GroupContext,
    canonical_bracelet,
    format_word,
    invert_word,
    least_rotation,
    parse_word,
)

__version__ = "0.1.0"
