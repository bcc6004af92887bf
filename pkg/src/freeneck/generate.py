"""Generation of reduced necklaces and bracelets in free groups.

Both generators extend a freely reduced prenecklace one symbol at a time,
skipping any symbol that would cancel against its left neighbour and, in the
last position, any symbol that would cancel cyclically against ``a_1``. The
bracelet generator additionally tracks how many copies of ``a_1`` open the
word (``u``) and of ``a_1^-1`` close it (``v``) so that prefixes whose
inverse is already smaller are cut off early.

Visitors are called once per word with a read-only ``numpy`` view into a
reused chunk buffer. Copy it (``tuple(word)``) if you need to keep it.
"""
from dataclasses import dataclass, fields

import numpy as np

from . import _kernels as K
from ._accel import BACKEND, int_buffer
from .symbols import GroupContext, Word, are_inverses, inverse_symbol

KINDS = ("necklace", "bracelet")
DEFAULT_CHUNK = 8192


@dataclass
class WorkCounters:
    """Exact work counts for one run.

    ``calls`` counts invocations of the recursive procedure and ``loop_iters``
    iterations of its inner symbol loop, whether or not the symbol was used.
    ``checkinv_iters`` counts iterations of the inverse comparison loop
    (bracelets only). ``checkinv_zero`` and ``checkinv_late`` are diagnostics
    that should stay at zero on reduced input.
    """

    calls: int = 0
    loop_iters: int = 0
    checkinv_iters: int = 0
    outputs: int = 0
    checkinv_zero: int = 0
    checkinv_late: int = 0
    non_cat: bool = False

    @property
    def work(self) -> int:
        return self.calls + self.loop_iters + self.checkinv_iters

    def __add__(self, other):
        if not isinstance(other, WorkCounters):
            return NotImplemented
        merged = {f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)}
        merged["non_cat"] = self.non_cat or other.non_cat
        return WorkCounters(**merged)

    @classmethod
    def _from_buffer(cls, cnt, non_cat):
        return cls(
            calls=int(cnt[K.C_CALLS]),
            loop_iters=int(cnt[K.C_LOOP]),
            checkinv_iters=int(cnt[K.C_CHECKINV]),
            outputs=int(cnt[K.C_OUTPUTS]),
            checkinv_zero=int(cnt[K.C_CHECKINV_ZERO]),
            checkinv_late=int(cnt[K.C_CHECKINV_LATE]),
            non_cat=non_cat,
        )


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _check_args(g, length):
    ctx = GroupContext(g)
    if not isinstance(length, int) or length < 1:
        raise ValueError(f"word length must be a positive integer, got {length!r}")
    return ctx


class _Run:
    """Kernel state for one enumeration (whole tree or one subtree)."""

    def __init__(self, kind, g, length, cut, mode):
        self.kind = kind
        self.ctx = GroupContext(g)
        self.length = length
        self.cut = cut
        self.mode = mode
        size = length + 2
        self.a = int_buffer(size)
        self.fp = int_buffer(size)
        self.fu = int_buffer(size)
        self.fv = int_buffer(size)
        self.fvv = int_buffer(size)
        self.fph = int_buffer(size)
        self.fj = int_buffer(size)
        self.st = int_buffer(K.ST_SIZE)
        self.cnt = int_buffer(K.C_SIZE)

    def start_full(self):
        k = self.ctx.k
        step = 1 if self.kind == "necklace" else 2
        self.st[K.ST_T] = 1
        self.st[K.ST_BASE] = 2
        self.st[K.ST_NEXT] = 0
        self.st[K.ST_END] = k - step
        self.st[K.ST_STEP] = step
        return self

    def start_subtree(self, prefix, p, u, v):
        d = len(prefix)
        for i, s in enumerate(prefix, start=1):
            self.a[i] = s
        t = d + 1
        self.st[K.ST_T] = t
        self.st[K.ST_BASE] = t
        self.st[K.ST_NEXT] = 1
        self.st[K.ST_END] = 0  # no further start symbols
        self.st[K.ST_STEP] = 1
        self.st[K.ST_AOI] = inverse_symbol(prefix[0])
        self.fp[t] = p
        self.fu[t] = u
        self.fv[t] = v
        self.fph[t] = K.ENTER
        return self

    def _step(self, out, maxout):
        if self.kind == "necklace":
            return K.necklace_kernel(
                self.a, self.fp, self.fph, self.fj, self.st, self.cnt,
                self.length, self.ctx.k, self.cut, self.mode, out, maxout,
            )
        return K.bracelet_kernel(
            self.a, self.fp, self.fu, self.fv, self.fvv, self.fph, self.fj, self.st, self.cnt,
            self.length, self.ctx.k, self.cut, self.mode, out, maxout,
        )

    def chunks(self, chunk=DEFAULT_CHUNK):
        """Yield ``(n, cut)`` int64 arrays of words until the tree is exhausted."""
        buf = np.zeros(chunk * self.cut, dtype=np.int64)
        while not self.st[K.ST_DONE]:
            n = self._step(buf, chunk)
            if n:
                view = buf[: n * self.cut].reshape(n, self.cut)
                view.flags.writeable = False
                yield view

    def run(self, visitor=None, chunk=DEFAULT_CHUNK):
        if visitor is None:
            self._step(np.zeros(1, dtype=np.int64), 0)
        else:
            for block in self.chunks(chunk):
                for row in block:
                    visitor(row)
        return WorkCounters._from_buffer(self.cnt, non_cat=not self.ctx.is_cat)


def _mode(aperiodic):
    return K.EMIT_APERIODIC if aperiodic else K.EMIT_ALL_PERIODS


def generate_necklaces(g, length, aperiodic=False, visitor=None, chunk=DEFAULT_CHUNK):
    """Enumerate reduced necklaces (or reduced Lyndon words) in lexicographic order.

    ``visitor(word)`` is called once per word; with ``visitor=None`` the run
    only counts. Returns the :class:`WorkCounters` of the run.
    """
    _check_args(g, length)
    return _Run("necklace", g, length, length, _mode(aperiodic)).start_full().run(visitor, chunk)


def generate_bracelets(g, length, aperiodic=False, visitor=None, chunk=DEFAULT_CHUNK):
    """Enumerate reduced bracelets (relator class representatives) in order."""
    _check_args(g, length)
    return _Run("bracelet", g, length, length, _mode(aperiodic)).start_full().run(visitor, chunk)


def generate(kind, g, length, aperiodic=False, visitor=None, chunk=DEFAULT_CHUNK):
    _check_kind(kind)
    fn = generate_necklaces if kind == "necklace" else generate_bracelets
    return fn(g, length, aperiodic, visitor, chunk)


def iter_words(kind, g, length, aperiodic=False, prefix=None, chunk=DEFAULT_CHUNK):
    """Yield words as tuples, streaming chunk by chunk."""
    _check_kind(kind)
    _check_args(g, length)
    if prefix is None:
        run = _Run(kind, g, length, length, _mode(aperiodic)).start_full()
    else:
        run = _subtree_run(tuple(prefix), g, length, aperiodic, kind)
    for block in run.chunks(chunk):
        for row in block.tolist():
            yield tuple(row)


def necklaces(g, length, aperiodic=False):
    return list(iter_words("necklace", g, length, aperiodic))


def bracelets(g, length, aperiodic=False):
    return list(iter_words("bracelet", g, length, aperiodic))


def check_inv(word, t, i):
    """Compare ``a_i .. a_t`` with the inverse of ``a_1 .. a_t``.

    Positions are 1-based over ``word`` (``a_1 = word[0]``). Returns -1 when
    the word precedes its inverse at the first differing position, +1 when it
    follows it, and 0 when no difference is found.
    """
    if not 1 <= i <= t <= len(word):
        raise ValueError(f"need 1 <= i <= t <= len(word), got i={i}, t={t}")
    a = np.zeros(t + 1, dtype=np.int64)
    a[1:] = word[:t]
    cnt = np.zeros(K.C_SIZE, dtype=np.int64)
    if BACKEND == "python":
        a, cnt = a.tolist(), cnt.tolist()
    return int(K.check_inv_kernel(a, t, i, cnt))


def split_prefixes(g, length, depth, kind):
    """Every length-``depth`` node of the recursion tree, in lexicographic order.

    Each prefix is a unit of work for :func:`generate_from_prefix`; running all
    of them in order reproduces the full enumeration.
    """
    _check_kind(kind)
    _check_args(g, length)
    if not isinstance(depth, int) or not 1 <= depth <= length:
        raise ValueError(f"depth must be in 1..{length}, got {depth!r}")
    run = _Run(kind, g, length, depth, K.EMIT_FRONTIER).start_full()
    out = []
    for block in run.chunks():
        out.extend(tuple(row) for row in block.tolist())
    return out


def subtree_parameters(prefix, g, length, kind):
    """Recursion parameters ``(p, u, v)`` at which ``prefix`` is extended.

    ``p`` is the length of the longest Lyndon prefix, ``u`` the run of
    ``a_1`` at the front and ``v`` the run of ``a_1^-1`` at the back. Raises
    ``ValueError`` when the generator would never reach ``prefix``.
    """
    _check_kind(kind)
    ctx = _check_args(g, length)
    w = ctx.check_word(prefix)
    d = len(w)
    if not 1 <= d <= length:
        raise ValueError(f"prefix length must be in 1..{length}, got {d}")
    a1 = w[0]
    aoi = inverse_symbol(a1)
    if kind == "bracelet" and a1 % 2:
        raise ValueError("bracelets never start with an inverse generator")
    p, u, v = 1, 1, 0
    for t in range(2, d + 1):
        j = w[t - 1]
        if are_inverses(w[t - 2], j) or (t == length and j == aoi):
            raise ValueError(f"prefix {w} is not reduced at position {t}")
        ref = w[t - p - 1]
        if j < ref:
            raise ValueError(f"prefix {w} is not a prenecklace")
        if j > ref:
            p = t
        if kind == "bracelet":
            if u == t - 1 and j == a1:
                u = t
            v = v + 1 if j == aoi else 0
            if u < v or (u == v and check_inv(w, t, u + 1) >= 0):
                raise ValueError(f"prefix {w} is pruned by the inverse comparison")
    return p, u, v


def _subtree_run(prefix, g, length, aperiodic, kind):
    p, u, v = subtree_parameters(prefix, g, length, kind)
    return _Run(kind, g, length, length, _mode(aperiodic)).start_subtree(prefix, p, u, v)


def generate_from_prefix(prefix, g, length, aperiodic=False, kind="necklace", visitor=None,
                         chunk=DEFAULT_CHUNK):
    """Enumerate only the words under ``prefix`` (a node from :func:`split_prefixes`).

    Each call owns its own buffers, so separate prefixes can run in separate
    threads or processes; sum the returned counters afterwards.
    """
    return _subtree_run(tuple(prefix), g, length, aperiodic, kind).run(visitor, chunk)


__all__ = [
    "WorkCounters", "Word", "generate_necklaces", "generate_bracelets", "generate",
    "iter_words", "necklaces", "bracelets", "check_inv", "split_prefixes",
    "subtree_parameters", "generate_from_prefix",
]
