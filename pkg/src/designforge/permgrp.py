"""Permutation groups at desk scale: orbits, exact order via a base and
strong generating set, transitivity and primitivity, flag actions, and the
backtracking automorphism search for small incidence structures.

Permutations are image tuples: g maps i to g[i].  Composition is
compose(g, h) = "apply h, then g".
"""

from __future__ import annotations

import os

import numpy as np

from ._kernels import get_search_kernel, kernel_name
from .designs import IncidenceStructure

__all__ = [
    "identity",
    "compose",
    "invert",
    "PermGroup",
    "orbit",
    "group_order",
    "is_transitive",
    "is_primitive",
    "is_automorphism",
    "flags",
    "is_flag_transitive",
    "subdegrees",
    "automorphism_group_search",
    "read_group_file",
    "write_group_file",
    "AUT_SEARCH_GUARD",
]

AUT_SEARCH_GUARD = 24  # automorphism search refuses larger v unless forced


def identity(n: int) -> tuple:
    return tuple(range(n))


def check_perm(g) -> tuple:
    g = tuple(g)
    if sorted(g) != list(range(len(g))):
        raise ValueError("not a permutation")
    return g


def compose(g, h) -> tuple:
    """Apply h first, then g."""
    return tuple(g[h[i]] for i in range(len(g)))


def invert(g) -> tuple:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def _min_moved(g):
    for i, x in enumerate(g):
        if x != i:
            return i
    return None


class PermGroup:
    """Group generated by permutations, with a cached stabilizer chain.

    The chain uses deterministic base selection (smallest moved point
    first); stabilizer generators at each level are the deduplicated
    Schreier generators, which Schreier's lemma makes exact.
    """

    def __init__(self, generators, degree=None):
        gens = [check_perm(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("need a degree for the trivial group")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise ValueError("generators have mixed degrees")
        self.degree = degree
        self.generators = [g for g in gens if g != identity(degree)]
        self._chain = None

    # -- stabilizer chain ------------------------------------------------
    @staticmethod
    def _orbit_transversal(point, gens, n):
        trans = {point: identity(n)}
        queue = [point]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = compose(g, trans[x])
                    queue.append(y)
        return trans

    @staticmethod
    def _build_chain(gens, n, first_point=None):
        chain = []
        cur = [g for g in gens if g != identity(n)]
        force = first_point
        while cur:
            moved = sorted({m for m in map(_min_moved, cur) if m is not None})
            if force is not None and any(g[force] != force for g in cur):
                pt = force
            else:
                pt = moved[0]
            force = None
            trans = PermGroup._orbit_transversal(pt, cur, n)
            stab = []
            seen = set()
            for x in sorted(trans):
                ux = trans[x]
                for g in cur:
                    t = trans[g[x]]
                    sg = compose(invert(t), compose(g, ux))
                    if sg != identity(n) and sg not in seen:
                        seen.add(sg)
                        stab.append(sg)
            chain.append({"point": pt, "transversal": trans, "gens": cur})
            cur = stab
        return chain

    @property
    def chain(self):
        if self._chain is None:
            self._chain = self._build_chain(self.generators, self.degree)
        return self._chain

    def order(self) -> int:
        out = 1
        for level in self.chain:
            out *= len(level["transversal"])
        return out

    def __contains__(self, g):
        g = check_perm(g)
        if len(g) != self.degree:
            return False
        for level in self.chain:
            x = g[level["point"]]
            if x not in level["transversal"]:
                return False
            g = compose(invert(level["transversal"][x]), g)
        return g == identity(self.degree)

    # -- actions -----------------------------------------------------------
    def orbit(self, x: int) -> set:
        if not 0 <= x < self.degree:
            raise ValueError("point out of range")
        seen = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for g in self.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return seen

    def orbits(self) -> list:
        left = set(range(self.degree))
        out = []
        while left:
            o = self.orbit(min(left))
            out.append(o)
            left -= o
        return out

    def is_transitive(self) -> bool:
        if self.degree < 2:
            raise ValueError("degree must be >= 2")
        return len(self.orbit(0)) == self.degree

    def minimal_block(self, alpha: int, beta: int) -> set:
        """Smallest block of imprimitivity containing {alpha, beta} (Atkinson)."""
        n = self.degree
        rep = list(range(n))

        def find(x):
            while rep[x] != x:
                rep[x] = rep[rep[x]]
                x = rep[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            if ry < rx:
                rx, ry = ry, rx
            rep[ry] = rx
            return rx, ry

        queue = [(alpha, beta)]
        union(alpha, beta)
        while queue:
            x, y = queue.pop()
            for g in self.generators:
                merged = union(g[x], g[y])
                if merged:
                    queue.append(merged)
        root = find(alpha)
        return {i for i in range(n) if find(i) == root}

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            return False
        for beta in range(1, self.degree):
            if len(self.minimal_block(0, beta)) != self.degree:
                return False
        return True

    def stabilizer_generators(self, x: int) -> list:
        """Generators of the point stabilizer of x, via Schreier generators."""
        chain = self._build_chain(self.generators, self.degree, first_point=x)
        if not chain or chain[0]["point"] != x:
            return list(self.generators)  # x is fixed by everything
        cur = chain[0]
        trans = cur["transversal"]
        out, seen = [], set()
        for y in sorted(trans):
            uy = trans[y]
            for g in cur["gens"]:
                sg = compose(invert(trans[g[y]]), compose(g, uy))
                if sg != identity(self.degree) and sg not in seen:
                    seen.add(sg)
                    out.append(sg)
        return out

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"


# -- module-level operation surface --------------------------------------


def orbit(G: PermGroup, x: int) -> set:
    return G.orbit(x)


def group_order(G: PermGroup) -> int:
    return G.order()


def is_transitive(G: PermGroup) -> bool:
    return G.is_transitive()


def is_primitive(G: PermGroup) -> bool:
    return G.is_primitive()


def is_automorphism(g, S: IncidenceStructure) -> bool:
    """True iff the image of every block of S is a block of S."""
    g = check_perm(g)
    if len(g) != S.v:
        raise ValueError("degree mismatch")
    block_set = set(S.blocks)
    return all(tuple(sorted(g[x] for x in blk)) in block_set for blk in S.blocks)


def flags(S: IncidenceStructure) -> list:
    """All incident (point, block index) pairs, sorted."""
    return sorted((x, j) for j, blk in enumerate(S.blocks) for x in blk)


def _block_perm(g, S: IncidenceStructure) -> tuple:
    index = {blk: j for j, blk in enumerate(S.blocks)}
    out = []
    for blk in S.blocks:
        img = tuple(sorted(g[x] for x in blk))
        if img not in index:
            raise ValueError("generator is not an automorphism")
        out.append(index[img])
    return tuple(out)


def is_flag_transitive(G: PermGroup, S: IncidenceStructure) -> bool:
    """Single orbit on flags?  Generators must be automorphisms of S."""
    gens_pt = G.generators
    gens_blk = [_block_perm(g, S) for g in gens_pt]
    all_flags = flags(S)
    if not all_flags:
        raise ValueError("structure has no flags")
    start = all_flags[0]
    seen = {start}
    queue = [start]
    while queue:
        x, j = queue.pop()
        for gp, gb in zip(gens_pt, gens_blk):
            nxt = (gp[x], gb[j])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(all_flags)


def subdegrees(G: PermGroup, x: int) -> list:
    """Sorted orbit lengths of the stabilizer G_x on all points (fixed points
    count as length 1).  Requires G transitive."""
    if not G.is_transitive():
        raise ValueError("group is not transitive")
    stab = PermGroup(G.stabilizer_generators(x) or [identity(G.degree)], degree=G.degree)
    return sorted(len(o) for o in stab.orbits())


def automorphism_group_search(S: IncidenceStructure, force: bool = False, max_count: int = 250000) -> PermGroup:
    """Full automorphism group of a small incidence structure by backtracking
    over point images with block-image arc consistency.

    Guarded at v <= 24 (override with force); blocks must number <= 64 so
    block sets fit a uint64 mask.
    """
    v, b = S.v, len(S.blocks)
    if v > AUT_SEARCH_GUARD and not force:
        raise ValueError(f"v = {v} exceeds the search guard {AUT_SEARCH_GUARD}; pass force=True")
    if b > 64:
        raise ValueError("more than 64 blocks")
    masks = np.array(S.point_block_masks(), dtype=np.uint64)
    kernel = get_search_kernel()
    perms, overflow = kernel(masks, v, b, max_count)
    if overflow:
        raise RuntimeError(f"more than {max_count} automorphisms; raise max_count")
    found = [tuple(int(i) for i in row) for row in perms]
    # reduce to a small generating set by sifting through a growing chain
    gens = []
    group = PermGroup([], degree=v)
    for g in found:
        if g != identity(v) and g not in group:
            gens.append(g)
            group = PermGroup(gens, degree=v)
    assert group.order() == len(found), "generator reduction lost elements"
    return group


# -- group file format ----------------------------------------------------
# one permutation per line as space-separated images; comments start '#';
# degree inferred from line length and must be uniform.


def read_group_file(path) -> PermGroup:
    gens = []
    with open(path, encoding="utf-8") as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            gens.append(check_perm(int(tok) for tok in ln.split()))
    if not gens:
        raise ValueError("no permutations in file")
    if len({len(g) for g in gens}) != 1:
        raise ValueError("mixed degrees in group file")
    return PermGroup(gens)


def write_group_file(path, G: PermGroup):
    lines = [" ".join(map(str, g)) for g in (G.generators or [identity(G.degree)])]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
