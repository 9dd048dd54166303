"""GF(p^d) arithmetic for the Paley, cyclotomic base-block and PG constructions.

Elements are represented by their radix index 0 .. p^d - 1: the element with
coefficient vector (c0, c1, ..., c_{d-1}) over F_p (low degree first) has
index sum(c_i * p^i).  The index doubles as the point label of constructed
designs, so the additive group of the field and the abelian group used by
developments agree element-for-element.

The modulus is the monic irreducible polynomial of degree d whose
non-leading coefficient vector has the smallest radix encoding, so two
constructions of the same field are byte-identical.
"""

from __future__ import annotations

from functools import lru_cache

from . import arith

__all__ = ["FiniteField", "make_field", "primitive_element", "subgroup_generated", "squares"]

# A field element is just its radix index (an int); FiniteField carries the ops.
FieldElement = int


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, mod, p)


def _poly_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) > dm:
        c = a[-1] * inv_lead % p
        if c:
            off = len(a) - 1 - dm
            for i, mi in enumerate(mod):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_powmod(a, e, mod, p):
    result = (1,)
    base = _poly_rem(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_divrem(a, b, p)
    return a


def _poly_divrem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and _poly_trim(a):
        c = a[-1] * inv_lead % p
        off = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[off + i] = (a[off + i] - c * bi) % p
        a.pop()
    return _poly_trim(a)


def _is_irreducible(f, p):
    """Rabin's test: f of degree d is irreducible over F_p iff x^(p^d) = x
    mod f and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d."""
    d = len(f) - 1
    x = (0, 1)
    for r, _ in arith.factorize(d) if d > 1 else []:
        h = _poly_powmod(x, p ** (d // r), f, p)
        g = list(h) + [0] * (2 - len(h))
        g[1] = (g[1] - 1) % p
        if len(_poly_gcd(_poly_trim(g), f, p)) > 1:
            return False
    h = _poly_powmod(x, p**d, f, p)
    return h == x


class FiniteField:
    """GF(p^d) with integer-indexed elements and deterministic modulus."""

    def __init__(self, p: int, d: int):
        if not arith.is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.d = d
        self.q = p**d
        self.modulus = self._smallest_irreducible(p, d)

    @staticmethod
    def _smallest_irreducible(p, d):
        if d == 1:
            return (0, 1)  # the polynomial x
        # ascending radix encoding sum(c_i p^i) of the non-leading coefficients
        for v in range(1, p**d):
            lower = []
            t = v
            for _ in range(d):
                t, r = divmod(t, p)
                lower.append(r)
            f = tuple(lower) + (1,)
            if f[0] == 0:
                continue  # divisible by x
            if _is_irreducible(f, p):
                return f
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover

    # -- index <-> coefficient vector ------------------------------------
    def coeffs(self, a: int):
        out = []
        for _ in range(self.d):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    # -- arithmetic on indices -------------------------------------------
    def add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.encode((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        return self.encode((-x) % self.p for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        pa = _poly_trim(self.coeffs(a))
        pb = _poly_trim(self.coeffs(b))
        if not pa or not pb:
            return 0
        return self.encode(self._pad(_poly_mulmod(pa, pb, self.modulus, self.p)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def _pad(self, poly):
        return tuple(poly) + (0,) * (self.d - len(poly))

    # -- element orderings and orders ------------------------------------
    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        order = n
        for r, _ in arith.factorize(n) if n > 1 else []:
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.d) == (other.p, other.d)

    def __hash__(self):
        return hash((self.p, self.d))

    def __repr__(self):
        return f"FiniteField(p={self.p}, d={self.d})"


@lru_cache(maxsize=64)
def make_field(p: int, d: int = 1) -> FiniteField:
    """GF(p^d) with the deterministic smallest modulus."""
    return FiniteField(p, d)


def primitive_element(F: FiniteField) -> int:
    """Smallest element (by radix index) of multiplicative order q-1."""
    if F.q == 2:
        return 1
    for a in range(1, F.q):
        if F.mult_order(a) == F.q - 1:
            return a
    raise AssertionError("no primitive element")  # pragma: no cover


def subgroup_generated(F: FiniteField, g: int) -> set:
    """The cyclic multiplicative subgroup generated by g != 0."""
    if g == 0:
        raise ValueError("g must be nonzero")
    out = {1}
    x = g
    while x != 1:
        out.add(x)
        x = F.mul(x, g)
    return out


def squares(F: FiniteField) -> set:
    """Nonzero squares of F; requires odd characteristic."""
    if F.p == 2:
        raise ValueError("squares are only meaningful in odd characteristic")
    return {F.mul(x, x) for x in range(1, F.q)}
