"""Resumable enumeration kernels for reduced necklaces and bracelets.

The recursive procedures are unrolled onto an explicit stack indexed by the
next position ``t``: a call at position ``t`` only ever calls ``t + 1``, so the
frame for depth ``t`` lives in slot ``t`` of each frame buffer. Because all
state sits in caller-owned buffers, a kernel can stop after filling an output
chunk and pick up exactly where it left off on the next call.

Buffers (all integer, length ``length + 2`` unless noted):

    a          word being built, 1-based: a[1] .. a[length]
    fp         per-frame p (length of the longest Lyndon prefix)
    fu, fv     per-frame u / v (run of a[1] at the front, run of a[1]^-1 at the back)
    fvv        per-frame saved entry value of v
    fj         per-frame loop symbol
    fph        per-frame phase, ENTER or LOOP
    st         scalar state, see the ST_* slots
    cnt        work counters, see the C_* slots

Outputs are written flat into ``out``: word ``n`` occupies
``out[n * cut : (n + 1) * cut]``.
"""
from ._accel import jit

ENTER = 0
LOOP = 1

# scalar state slots
ST_T = 0
ST_BASE = 1
ST_NEXT = 2
ST_END = 3
ST_STEP = 4
ST_AOI = 5
ST_DONE = 6
ST_SIZE = 7

# counter slots
C_CALLS = 0
C_LOOP = 1
C_CHECKINV = 2
C_OUTPUTS = 3
C_CHECKINV_ZERO = 4
C_CHECKINV_LATE = 5
C_SIZE = 6

# emission modes
EMIT_ALL_PERIODS = 0  # length % p == 0: every necklace
EMIT_APERIODIC = 1  # length == p: Lyndon words only
EMIT_FRONTIER = 2  # every node at depth cut, no filtering


@jit
def check_inv_kernel(a, t, i, cnt):
    """Compare a[i..t] against the inverse of a[1..t]; -1, 0 or +1."""
    half = (t + 1) // 2 + 1
    for j in range(i, t + 1):
        cnt[C_CHECKINV] += 1
        x = a[j]
        y = a[t - j + 1]
        y = y + 1 if y % 2 == 0 else y - 1
        if x < y:
            if j > half:
                cnt[C_CHECKINV_LATE] += 1
            return -1
        if x > y:
            if j > half:
                cnt[C_CHECKINV_LATE] += 1
            return 1
    cnt[C_CHECKINV_ZERO] += 1
    return 0


@jit
def necklace_kernel(a, fp, fph, fj, st, cnt, length, k, cut, mode, out, maxout):
    n = 0
    t = st[ST_T]
    aoi = st[ST_AOI]
    while True:
        if t < st[ST_BASE]:
            s = st[ST_NEXT]
            if s > st[ST_END]:
                st[ST_DONE] = 1
                break
            st[ST_NEXT] = s + st[ST_STEP]
            a[1] = s
            aoi = s + 1 if s % 2 == 0 else s - 1
            st[ST_AOI] = aoi
            t = 2
            fp[2] = 1
            fph[2] = ENTER
            continue

        if fph[t] == ENTER:
            cnt[C_CALLS] += 1
            p = fp[t]
            if t > cut:
                if mode == EMIT_FRONTIER or (mode == EMIT_ALL_PERIODS and length % p == 0) or (
                    mode == EMIT_APERIODIC and length == p
                ):
                    cnt[C_OUTPUTS] += 1
                    if maxout > 0:
                        base = n * cut
                        for i in range(cut):
                            out[base + i] = a[i + 1]
                    n += 1
                t -= 1
                if maxout > 0 and n == maxout:
                    break
                continue
            j = a[t - p]
            fph[t] = LOOP
            fj[t] = j
            prev = a[t - 1]
            inv_prev = prev + 1 if prev % 2 == 0 else prev - 1
            if j != inv_prev and (t < length or j != aoi):
                a[t] = j
                fp[t + 1] = p
                fph[t + 1] = ENTER
                t += 1
            continue

        # LOOP phase: try the symbols above a[t - p], resuming after fj[t]
        prev = a[t - 1]
        inv_prev = prev + 1 if prev % 2 == 0 else prev - 1
        j = fj[t] + 1
        pushed = False
        while j < k:
            cnt[C_LOOP] += 1
            if j != inv_prev and (t < length or j != aoi):
                a[t] = j
                fj[t] = j
                fp[t + 1] = t
                fph[t + 1] = ENTER
                t += 1
                pushed = True
                break
            j += 1
        if not pushed:
            t -= 1

    st[ST_T] = t
    return n


@jit
def bracelet_kernel(a, fp, fu, fv, fvv, fph, fj, st, cnt, length, k, cut, mode, out, maxout):
    n = 0
    t = st[ST_T]
    aoi = st[ST_AOI]
    while True:
        if t < st[ST_BASE]:
            s = st[ST_NEXT]
            if s > st[ST_END]:
                st[ST_DONE] = 1
                break
            st[ST_NEXT] = s + st[ST_STEP]
            a[1] = s
            aoi = s + 1 if s % 2 == 0 else s - 1
            st[ST_AOI] = aoi
            t = 2
            fp[2] = 1
            fu[2] = 1
            fv[2] = 0
            fph[2] = ENTER
            continue

        a1 = a[1]
        if fph[t] == ENTER:
            cnt[C_CALLS] += 1
            p = fp[t]
            u = fu[t]
            v = fv[t]
            fvv[t] = v
            if t > cut:
                if mode == EMIT_FRONTIER or (mode == EMIT_ALL_PERIODS and length % p == 0) or (
                    mode == EMIT_APERIODIC and length == p
                ):
                    cnt[C_OUTPUTS] += 1
                    if maxout > 0:
                        base = n * cut
                        for i in range(cut):
                            out[base + i] = a[i + 1]
                    n += 1
                t -= 1
                if maxout > 0 and n == maxout:
                    break
                continue
            j = a[t - p]
            if j == a1:
                v = 0
                if u == t - 1:
                    u += 1
            elif j == aoi:
                v += 1
            else:
                v = 0
            fph[t] = LOOP
            fj[t] = j
            # the loop below runs with u restored; the child gets the raised value
            fu[t] = u - 1 if u == t else u
            prev = a[t - 1]
            inv_prev = prev + 1 if prev % 2 == 0 else prev - 1
            if j != inv_prev and (t < length or j != aoi):
                a[t] = j
                descend = False
                if u == v:
                    descend = check_inv_kernel(a, t, u + 1, cnt) < 0
                elif u > v:
                    descend = True
                if descend:
                    fp[t + 1] = p
                    fu[t + 1] = u
                    fv[t + 1] = v
                    fph[t + 1] = ENTER
                    t += 1
            continue

        u = fu[t]
        vv = fvv[t]
        prev = a[t - 1]
        inv_prev = prev + 1 if prev % 2 == 0 else prev - 1
        j = fj[t] + 1
        pushed = False
        while j < k:
            cnt[C_LOOP] += 1
            if j != inv_prev and (t < length or j != aoi):
                v = vv + 1 if j == aoi else 0
                a[t] = j
                descend = False
                if u == v:
                    descend = check_inv_kernel(a, t, u + 1, cnt) < 0
                elif u > v:
                    descend = True
                if descend:
                    fj[t] = j
                    fp[t + 1] = t
                    fu[t + 1] = u
                    fv[t + 1] = v
                    fph[t + 1] = ENTER
                    t += 1
                    pushed = True
                    break
            j += 1
        if not pushed:
            t -= 1

    st[ST_T] = t
    return n
