"""Straight recursive form of the necklace and bracelet generators.

This mirrors the textbook procedures line for line (1-based buffer, globals
folded into a small state object) and is used to cross-check the unrolled
kernels: for every instance both must emit the same words and report the
same work counters. It is too slow for anything but small cases.
"""
import sys

from .symbols import are_inverses, inverse_symbol


class _State:
    def __init__(self, g, length, aperiodic):
        self.k = 2 * g
        self.length = length
        self.aperiodic = aperiodic
        self.a = [0] * (length + 2)
        self.aoi = 0
        self.calls = 0
        self.loop_iters = 0
        self.checkinv_iters = 0
        self.checkinv_zero = 0
        self.words = []

    def emit(self, p):
        if (self.length == p) if self.aperiodic else (self.length % p == 0):
            self.words.append(tuple(self.a[1:self.length + 1]))

    def allowed(self, t, j):
        return not are_inverses(self.a[t - 1], j) and (t < self.length or j != self.aoi)


def _gen_neck(s, t, p):
    s.calls += 1
    if t > s.length:
        s.emit(p)
        return
    j = s.a[t - p]
    if s.allowed(t, j):
        s.a[t] = j
        _gen_neck(s, t + 1, p)
    for j in range(s.a[t - p] + 1, s.k):
        s.loop_iters += 1
        if s.allowed(t, j):
            s.a[t] = j
            _gen_neck(s, t + 1, t)


def _check_inv(s, t, i):
    for j in range(i, t + 1):
        s.checkinv_iters += 1
        y = inverse_symbol(s.a[t - j + 1])
        if s.a[j] < y:
            return -1
        if s.a[j] > y:
            return 1
    s.checkinv_zero += 1
    return 0


def _gen_brace(s, t, p, u, v):
    s.calls += 1
    vv = v
    if t > s.length:
        s.emit(p)
        return
    a1 = s.a[1]
    j = s.a[t - p]
    if j == a1:
        v = 0
        if u == t - 1:
            u += 1
    elif j == s.aoi:
        v += 1
    else:
        v = 0
    if s.allowed(t, j):
        s.a[t] = j
        if u == v:
            if _check_inv(s, t, u + 1) < 0:
                _gen_brace(s, t + 1, p, u, v)
        elif u > v:
            _gen_brace(s, t + 1, p, u, v)
    if u == t:
        u -= 1
    for j in range(s.a[t - p] + 1, s.k):
        s.loop_iters += 1
        if s.allowed(t, j):
            v = vv + 1 if j == s.aoi else 0
            s.a[t] = j
            if u == v:
                if _check_inv(s, t, u + 1) < 0:
                    _gen_brace(s, t + 1, t, u, v)
            elif u > v:
                _gen_brace(s, t + 1, t, u, v)


def _run(kind, g, length, aperiodic):
    if length < 1 or g < 1:
        raise ValueError("g and length must be positive")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), length + 100))
    s = _State(g, length, aperiodic)
    step = 1 if kind == "necklace" else 2
    for j in range(0, s.k, step):
        s.a[1] = j
        s.aoi = inverse_symbol(j)
        if kind == "necklace":
            _gen_neck(s, 2, 1)
        else:
            _gen_brace(s, 2, 1, 1, 0)
    return s


def necklaces(g, length, aperiodic=False):
    """Return ``(words, counters)``; counters is a dict of raw work counts."""
    s = _run("necklace", g, length, aperiodic)
    return s.words, {"calls": s.calls, "loop_iters": s.loop_iters}


def bracelets(g, length, aperiodic=False):
    s = _run("bracelet", g, length, aperiodic)
    return s.words, {
        "calls": s.calls,
        "loop_iters": s.loop_iters,
        "checkinv_iters": s.checkinv_iters,
        "checkinv_zero": s.checkinv_zero,
    }
