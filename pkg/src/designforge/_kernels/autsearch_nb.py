"""Numba kernel for the automorphism backtracking search.

Same algorithm as the numpy fallback, as an iterative DFS over uint64
masks.  Cached compilation; first call pays the JIT cost.
"""

import numpy as np
from numba import njit

__all__ = ["search_automorphisms_nb"]


@njit(cache=True)
def _search(pm, v, nblocks, max_count, out):
    full = np.uint64((1 << nblocks) - 1)
    one = np.uint64(1)
    # cand[t, j]: allowed image blocks for block j after assigning points < t
    cand = np.empty((v + 1, nblocks), dtype=np.uint64)
    for j in range(nblocks):
        cand[0, j] = full
    perm = np.full(v, -1, dtype=np.int16)
    used = np.zeros(v, dtype=np.bool_)
    choice = np.zeros(v, dtype=np.int16)  # next candidate y to try at depth t
    count = 0
    t = 0
    while t >= 0:
        if t == v:
            if count >= max_count:
                return count, True
            for i in range(v):
                out[count, i] = perm[i]
            count += 1
            t -= 1
            continue
        advanced = False
        y = choice[t]
        tm = pm[t]
        while y < v:
            if not used[y]:
                ym = pm[y]
                nym = ym ^ full
                ok = True
                for j in range(nblocks):
                    if (tm >> np.uint64(j)) & one:
                        c = cand[t, j] & ym
                    else:
                        c = cand[t, j] & nym
                    cand[t + 1, j] = c
                    if c == np.uint64(0):
                        ok = False
                        break
                if ok:
                    if perm[t] >= 0:
                        used[perm[t]] = False
                    perm[t] = y
                    used[y] = True
                    choice[t] = y + 1
                    choice[t + 1] = 0
                    t += 1
                    advanced = True
                    break
            y += 1
        if not advanced:
            if perm[t] >= 0:
                used[perm[t]] = False
                perm[t] = -1
            choice[t] = 0
            t -= 1
    return count, False


def search_automorphisms_nb(point_masks, v, nblocks, max_count):
    pm = np.asarray(point_masks, dtype=np.uint64)
    out = np.empty((max_count, v), dtype=np.int16)
    count, overflow = _search(pm, v, nblocks, max_count, out)
    return out[:count].copy(), overflow
