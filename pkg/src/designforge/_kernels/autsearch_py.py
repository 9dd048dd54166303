"""Numpy fallback for the automorphism backtracking search.

Assigns point images in index order, maintaining for every block the mask
of blocks it can still map to (arc consistency).  At each node the
viability of all v candidate images is computed in one vectorized pass.
"""

import numpy as np

__all__ = ["search_automorphisms_py"]


def search_automorphisms_py(point_masks, v, nblocks, max_count):
    """All point permutations mapping blocks to blocks.

    point_masks: uint64 array, point_masks[x] = bitmask of blocks through x.
    Returns (perms int16 array of shape (count, v), overflow flag).
    """
    pm = np.asarray(point_masks, dtype=np.uint64)
    full = np.uint64((1 << nblocks) - 1)
    not_pm = pm ^ full
    # t_in_block[t, j] = whether point t lies in block j
    bits = ((pm[:, None] >> np.arange(nblocks, dtype=np.uint64)[None, :]) & np.uint64(1)).astype(bool)

    out = []
    perm = np.full(v, -1, dtype=np.int16)
    used = np.zeros(v, dtype=bool)
    overflow = False

    def rec(t, cand):
        nonlocal overflow
        if overflow:
            return
        if t == v:
            if len(out) >= max_count:
                overflow = True
            else:
                out.append(perm.copy())
            return
        # new_cand[y, j]: cand after assigning t -> y
        new_cand = np.where(bits[t][None, :], cand[None, :] & pm[:, None], cand[None, :] & not_pm[:, None])
        viable = ~used & (new_cand != 0).all(axis=1)
        for y in np.flatnonzero(viable):
            perm[t] = y
            used[y] = True
            rec(t + 1, new_cand[y])
            used[y] = False
        perm[t] = -1

    rec(0, np.full(nblocks, full, dtype=np.uint64))
    if out:
        return np.stack(out), overflow
    return np.empty((0, v), dtype=np.int16), overflow
