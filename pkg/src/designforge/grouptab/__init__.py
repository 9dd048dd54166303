"""Order formulas and dimension data for the finite simple groups driving
the elimination scans, plus the singular/non-singular point counts used in
the classical-subgroup analysis.

Formulas are the classical order products; everything representation-
theoretic (minimal degrees, the exceptional-family parameter table, the
sporadic data) is consumed as literal data from data/tables.txt, one
record per line with a source tag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .. import arith

__all__ = [
    "GroupSpec",
    "DimBounds",
    "lie",
    "alt",
    "sporadic",
    "order",
    "aut_order",
    "dim_bounds",
    "singular_counts",
    "borel_index",
    "sporadic_names",
    "excluded_sporadic_names",
    "data_records",
]

_LIE_FAMILIES = {
    "A", "2A", "B", "C", "D", "2D",
    "G2", "F4", "E6", "2E6", "E7", "E8",
    "2B2", "2G2", "2F4", "3D4",
}

# not simple at all: always rejected
_A_NONSIMPLE = {(1, 2), (1, 3)}
# isomorphic to an alternating group or to another listed group; constructible
# (the cross-characteristic scans need e.g. PSL2(7)) but flagged as folded so
# canonical enumerations can skip them
_A_FOLDED = {(1, 4), (1, 5), (1, 7), (1, 9), (3, 2)}
_C_FOLDED = {(2, 3)}  # PSp4(3) = PSU4(2)


def _parse_factored(text: str) -> int:
    out = 1
    for tok in text.split("*"):
        if "^" in tok:
            b, e = tok.split("^")
            out *= int(b) ** int(e)
        else:
            out *= int(tok)
    return out


@lru_cache(maxsize=1)
def data_records():
    recs = []
    text = resources.files(__package__).joinpath("data/tables.txt").read_text()
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        kind, name, fld, value, source = ln.split("|")
        recs.append({"kind": kind, "name": name, "field": fld, "value": value, "source": source})
    return recs


@lru_cache(maxsize=1)
def _data_map():
    out = {}
    for r in data_records():
        out.setdefault((r["kind"], r["name"]), {})[r["field"]] = r["value"]
    return out


def sporadic_names():
    """The groups of the bounded sporadic scan, in table order."""
    seen = []
    for r in data_records():
        if r["kind"] == "sporadic" and r["name"] not in seen:
            seen.append(r["name"])
    return seen


def excluded_sporadic_names():
    seen = []
    for r in data_records():
        if r["kind"] == "sporadic-excluded" and r["name"] not in seen:
            seen.append(r["name"])
    return seen


@dataclass(frozen=True)
class GroupSpec:
    """A finite simple group: Lie family with rank and field, alternating
    degree, or a sporadic name."""

    family: str
    l: int = 0  # Lie rank parameter, or alternating degree
    s: int = 0  # field size (0 for Alt / sporadic)

    def __post_init__(self):
        f = self.family
        if f == "Alt":
            if self.l < 5:
                raise ValueError("alternating groups start at degree 5")
            return
        if f in ("sporadic", "sporadic-excluded"):
            return
        if f not in _LIE_FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        s, l = self.s, self.l
        if arith.prime_power_decompose(s) is None:
            raise ValueError(f"field size {s} is not a prime power")
        if f == "A" and (l < 1 or (l, s) in _A_NONSIMPLE):
            raise ValueError(f"A_{l}({s}) is not simple")
        if f == "2A" and (l < 2 or (l, s) == (2, 2)):
            raise ValueError(f"2A_{l}({s}) excluded or not simple")
        if f == "C" and (l < 2 or (l, s) == (2, 2)):
            raise ValueError(f"C_{l}({s}) excluded or not simple")
        if f == "B" and (l < 3 or s % 2 == 0):
            raise ValueError("B_l needs l >= 3 and s odd")
        if f in ("D", "2D") and l < 4:
            raise ValueError("D_l needs l >= 4")
        if f == "G2" and s < 3:
            raise ValueError("G2 needs s >= 3")
        if f in ("2B2", "2F4"):
            pp = arith.prime_power_decompose(s)
            if pp.p != 2 or pp.d % 2 == 0 or s < 8:
                raise ValueError(f"{f} needs s = 2^(2m+1) >= 8")
        if f == "2G2":
            pp = arith.prime_power_decompose(s)
            if pp.p != 3 or pp.d % 2 == 0 or s < 27:
                raise ValueError(f"{f} needs s = 3^(2m+1) >= 27")

    sporadic_name: str = ""

    @property
    def name(self) -> str:
        if self.family == "Alt":
            return f"A{self.l}"
        if self.family in ("sporadic", "sporadic-excluded"):
            return self.sporadic_name
        return f"{self.family}_{self.l}({self.s})" if self.l else f"{self.family}({self.s})"

    @property
    def folded(self) -> bool:
        """True when this spec is isomorphic to an alternating group or to
        another listed Lie-type group (the source table's condition column)."""
        key = (self.l, self.s)
        return (self.family == "A" and key in _A_FOLDED) or (
            self.family == "C" and key in _C_FOLDED
        )


def lie(family: str, l: int, s: int) -> GroupSpec:
    return GroupSpec(family, l, s)


def alt(c: int) -> GroupSpec:
    return GroupSpec("Alt", c)


def sporadic(name: str) -> GroupSpec:
    for kind in ("sporadic", "sporadic-excluded"):
        if (kind, name) in _data_map():
            return GroupSpec(kind, sporadic_name=name)
    raise ValueError(f"unknown sporadic group {name!r}")


# convenience constructors in classical notation
def psl(m: int, s: int) -> GroupSpec:
    return lie("A", m - 1, s)


def psu(m: int, s: int) -> GroupSpec:
    return lie("2A", m - 1, s)


def psp(two_m: int, s: int) -> GroupSpec:
    if two_m % 2 != 0:
        raise ValueError("symplectic dimension must be even")
    return lie("C", two_m // 2, s)


def _field_exponent(s: int) -> int:
    pp = arith.prime_power_decompose(s)
    return pp.d


def order(spec: GroupSpec) -> int:
    """Exact simple-group order."""
    f, l, s = spec.family, spec.l, spec.s
    if f == "Alt":
        return math.factorial(l) // 2
    if f in ("sporadic", "sporadic-excluded"):
        return _parse_factored(_data_map()[(f, spec.sporadic_name)]["order"])
    if f == "A":
        num = s ** (l * (l + 1) // 2) * math.prod(s**i - 1 for i in range(2, l + 2))
        return num // math.gcd(l + 1, s - 1)
    if f == "2A":
        num = s ** (l * (l + 1) // 2) * math.prod(s**i - (-1) ** i for i in range(2, l + 2))
        return num // math.gcd(l + 1, s + 1)
    if f in ("B", "C"):
        num = s ** (l * l) * math.prod(s ** (2 * i) - 1 for i in range(1, l + 1))
        return num // math.gcd(2, s - 1)
    if f == "D":
        num = s ** (l * (l - 1)) * (s**l - 1) * math.prod(s ** (2 * i) - 1 for i in range(1, l))
        return num // math.gcd(4, s**l - 1)
    if f == "2D":
        num = s ** (l * (l - 1)) * (s**l + 1) * math.prod(s ** (2 * i) - 1 for i in range(1, l))
        return num // math.gcd(4, s**l + 1)
    if f == "G2":
        return s**6 * (s**6 - 1) * (s**2 - 1)
    if f == "F4":
        return s**24 * (s**12 - 1) * (s**8 - 1) * (s**6 - 1) * (s**2 - 1)
    if f == "E6":
        num = s**36 * math.prod(s**i - 1 for i in (12, 9, 8, 6, 5, 2))
        return num // math.gcd(3, s - 1)
    if f == "2E6":
        num = s**36 * (s**12 - 1) * (s**9 + 1) * (s**8 - 1) * (s**6 - 1) * (s**5 + 1) * (s**2 - 1)
        return num // math.gcd(3, s + 1)
    if f == "E7":
        num = s**63 * math.prod(s**i - 1 for i in (18, 14, 12, 10, 8, 6, 2))
        return num // math.gcd(2, s - 1)
    if f == "E8":
        return s**120 * math.prod(s**i - 1 for i in (30, 24, 20, 18, 14, 12, 8, 2))
    if f == "2B2":
        return s**2 * (s**2 + 1) * (s - 1)
    if f == "2G2":
        return s**3 * (s**3 + 1) * (s - 1)
    if f == "2F4":
        return s**12 * (s**6 + 1) * (s**4 - 1) * (s**3 + 1) * (s - 1)
    if f == "3D4":
        return s**12 * (s**8 + s**4 + 1) * (s**6 - 1) * (s**2 - 1)
    raise ValueError(f"no order formula for {f}")


def out_order(spec: GroupSpec) -> int:
    """|Out(L)| (an upper bound in the D-family corner cases, which is the
    safe direction for every bound this feeds)."""
    f, l, s = spec.family, spec.l, spec.s
    if f == "Alt":
        return 4 if l == 6 else 2
    if f in ("sporadic", "sporadic-excluded"):
        return int(_data_map()[(f, spec.sporadic_name)]["out"])
    a = _field_exponent(s)
    p = arith.prime_power_decompose(s).p
    if f == "A":
        d = math.gcd(l + 1, s - 1)
        return d * a * (1 if l == 1 else 2)
    if f == "2A":
        return math.gcd(l + 1, s + 1) * 2 * a
    if f == "B":
        return math.gcd(2, s - 1) * a
    if f == "C":
        g = 2 if (l == 2 and p == 2) else 1
        return math.gcd(2, s - 1) * a * g
    if f == "D":
        d = math.gcd(4, s**l - 1) if l % 2 else math.gcd(2, s - 1) ** 2
        return d * a * (6 if l == 4 else 2)
    if f == "2D":
        return math.gcd(4, s**l + 1) * 2 * a
    if f == "G2":
        return a * (2 if p == 3 else 1)
    if f == "F4":
        return a * (2 if p == 2 else 1)
    if f == "E6":
        return math.gcd(3, s - 1) * a * 2
    if f == "2E6":
        return math.gcd(3, s + 1) * 2 * a
    if f == "E7":
        return math.gcd(2, s - 1) * a
    if f in ("E8", "2B2", "2G2", "2F4"):
        return a
    if f == "3D4":
        return 3 * a
    raise ValueError(f)


def aut_order(spec: GroupSpec) -> int:
    return order(spec) * out_order(spec)


def aut_order_paper(name: str) -> int:
    """The sporadic table's |Aut(L)| column, verbatim (Tits row included)."""
    for kind in ("sporadic", "sporadic-excluded"):
        rec = _data_map().get((kind, name))
        if rec:
            return _parse_factored(rec.get("aut_paper", rec["order"])) * (
                1 if "aut_paper" in rec else int(rec["out"])
            )
    raise ValueError(name)


@dataclass(frozen=True)
class DimBounds:
    """Dimension data for one family: minimal defining-characteristic degree
    R_p, cross-characteristic lower bound R_p', positive roots + rank, and
    the lambda exponent bound u0."""

    u0: int
    N_plus_l: int
    R_p: int
    R_p_prime: int = 0
    labels: frozenset = frozenset()
    u_n: int = 0  # derived n upper bound for exceptional families


_CLASSICAL_DB = {
    # family: (u0(l), N+l(l), R_p(l))
    "A": (lambda l: l + 1, lambda l: l * (l + 3) // 2, lambda l: l + 1),
    "2A": (lambda l: l + 1, lambda l: l * (l + 3) // 2, lambda l: l + 1),
    "B": (lambda l: l, lambda l: l * l + l, lambda l: 2 * l + 1),
    "C": (lambda l: l, lambda l: l * l + l, lambda l: 2 * l),
    "D": (lambda l: l, lambda l: l * l, lambda l: 2 * l),
    "2D": (lambda l: l, lambda l: l * l, lambda l: 2 * l),
}


def cross_char_min_dim(spec: GroupSpec) -> int:
    """Lower bound for the minimal faithful projective degree in
    non-defining characteristic (the standard Landazuri-Seitz bounds; the
    handful of special values the source analysis needs live in the asset)."""
    f, l, s = spec.family, spec.l, spec.s
    if f in ("sporadic", "sporadic-excluded"):
        return int(_data_map()[(f, spec.sporadic_name)]["min_dim"])
    dm = _data_map()
    m = l + 1  # classical matrix degree for A/2A
    if f == "A":
        if l == 1:
            return (s - 1) // math.gcd(2, s - 1)
        if (m, s) == (3, 4):
            return int(dm[("crossdata", "PSL3(4)")]["min_dim"])
        return s ** (m - 1) - 1
    if f == "2A":
        if m % 2 == 1:
            return s * (s ** (m - 1) - 1) // (s + 1)
        return (s**m - 1) // (s + 1)
    if f == "C":
        m = l
        if s % 2 == 1:
            return (s**m - 1) // 2
        return s * (s**m - 1) * (s ** (m - 1) - 1) // (2 * (s + 1))
    if f == "B":
        m = l
        return s ** (m - 1) * (s ** (m - 1) - 1)
    if f == "D":
        m = l
        return s ** (m - 2) * (s ** (m - 1) - 1)
    if f == "2D":
        m = l
        return (s ** (m - 2) - 1) * (s ** (m - 1) + 1)
    if f == "G2":
        if s == 3:
            return int(dm[("crossdata", "G2(3)")]["dims"].split(",")[0])
        if s == 4:
            return int(dm[("crossdata", "G2(4)")]["min_dim"])
        return s * (s**2 - 1)
    if f == "F4":
        if s == 2:
            return int(dm[("crossdata", "F4(2)")]["min_dim"])
        if s % 2 == 1:
            return s**6 * (s**2 - 1)
        return s**7 * (s**3 - 1) * (s - 1) // 2
    if f == "2F4":
        return s**4 * (s - 1)
    if f == "2B2":
        return arith.is_perfect_square(s // 2) * (s - 1)
    if f == "2G2":
        return s * (s - 1)
    if f == "3D4":
        return s**3 * (s**2 - 1)
    if f == "E6" or f == "2E6":
        return s**9 * (s**2 - 1)
    if f == "E7":
        return s**15 * (s**2 - 1)
    if f == "E8":
        return s**27 * (s**2 - 1)
    raise ValueError(f)


def dim_bounds(spec: GroupSpec) -> DimBounds:
    f = spec.family
    if f in _CLASSICAL_DB:
        u0f, nlf, rpf = _CLASSICAL_DB[f]
        return DimBounds(
            u0=u0f(spec.l),
            N_plus_l=nlf(spec.l),
            R_p=rpf(spec.l),
            R_p_prime=cross_char_min_dim(spec),
        )
    if f in ("sporadic", "sporadic-excluded"):
        return DimBounds(u0=0, N_plus_l=0, R_p=0, R_p_prime=cross_char_min_dim(spec))
    rec = _data_map().get(("exceptional", f))
    if rec is None:
        raise ValueError(f"no stored dimension data for {f}")
    labels = frozenset({"R_p:lower_bound"} if f == "F4" else set())
    return DimBounds(
        u0=int(rec["u0"]),
        N_plus_l=int(rec["N_plus_l"]),
        R_p=int(rec["Rp"]),
        R_p_prime=cross_char_min_dim(spec) if spec.s else 0,
        labels=labels,
        u_n=int(rec["un"]),
    )


def singular_counts(form: str, n: int, q: int):
    """|S|, |N| and the claimed gcd for the four isometry-type forms.

    form is one of 'SU' (inside GL_n(q) with q a square), 'O0', 'O+', 'O-'.
    Requires q an odd prime power and n in the form's validity range.
    """
    pp = arith.prime_power_decompose(q)
    if pp is None or q % 2 == 0:
        raise ValueError("q must be an odd prime power")
    if form == "SU":
        if n < 3:
            raise ValueError("SU needs n >= 3")
        r = arith.is_perfect_square(q)
        if r is None:
            raise ValueError("SU form needs q a square")
        rn = r**n
        rn1 = r ** (n - 1)
        sgn_n = (-1) ** n
        sgn_n1 = (-1) ** (n - 1)
        S = (rn - sgn_n) * (rn1 - sgn_n1)
        N = rn1 * (rn - sgn_n) * (r - 1)
        claimed = (rn + 1) * (r - 1)
        return S, N, claimed
    if form == "O0":
        if n < 3:
            raise ValueError("O0 needs n >= 3")
        return q ** (n - 1) - 1, q ** (n - 1) * (q - 1), q - 1
    if form in ("O+", "O-"):
        if n < 4 or n % 2 != 0:
            raise ValueError(f"{form} needs even n >= 4")
        h = n // 2
        if form == "O+":
            S = (q**h - 1) * (q ** (h - 1) + 1)
            N = q ** (h - 1) * (q**h - 1) * (q - 1)
            claimed = 2 * (q**h - 1)
        else:
            S = (q**h + 1) * (q ** (h - 1) - 1)
            N = q ** (h - 1) * (q**h + 1) * (q - 1)
            claimed = (q**h + 1) * (q - 1)
        return S, N, claimed
    raise ValueError(f"unknown form {form!r}")


def singular_gcd_check(form: str, n: int, q: int) -> dict:
    """Compare the table's claimed gcd column against gcd(|S|, |N|).

    Counterexamples are reported, not asserted away: the SU row's claimed
    gcd holds for odd n (the only case the analysis uses) and fails for
    even n.
    """
    S, N, claimed = singular_counts(form, n, q)
    actual = math.gcd(S, N)
    return {
        "form": form,
        "n": n,
        "q": q,
        "S": S,
        "N": N,
        "claimed": claimed,
        "actual": actual,
        "ok": claimed == actual,
    }


def borel_index(spec: GroupSpec) -> int:
    """|L : N_L(U)| for a Sylow-p normalizer (Borel subgroup) in the
    families the eliminations use."""
    f, l, s = spec.family, spec.l, spec.s
    if f == "A":
        return math.prod((s**i - 1) // (s - 1) for i in range(2, l + 2))
    if f == "2A":
        m = l + 1
        if m == 3:
            return s**3 + 1
        if m == 4:
            # note: the source table prints (s+1)(s^2+1)^2 here, which does
            # not divide |PSU4(s)|; the flag count is (s^3+1)(s^2+1)
            return (s**3 + 1) * (s**2 + 1)
        raise ValueError("unitary Borel index stored only for PSU3/PSU4")
    if f in ("B", "C"):
        return math.prod((s ** (2 * i) - 1) // (s - 1) for i in range(1, l + 1))
    if f == "D":
        return (s**l - 1) // (s - 1) * math.prod((s ** (2 * i) - 1) // (s - 1) for i in range(1, l))
    if f == "2D":
        return (s**l + 1) * math.prod((s ** (2 * i) - 1) // (s - 1) for i in range(1, l))
    if f == "G2":
        return (s**2 - 1) * (s**6 - 1) // (s - 1) ** 2
    if f == "F4":
        return math.prod((s**i - 1) // (s - 1) for i in (2, 6, 8, 12))
    if f == "E6":
        return math.prod((s**i - 1) // (s - 1) for i in (2, 5, 6, 8, 9, 12))
    if f == "E7":
        return math.prod((s**i - 1) // (s - 1) for i in (2, 6, 8, 10, 12, 14, 18))
    if f == "E8":
        return math.prod((s**i - 1) // (s - 1) for i in (2, 8, 12, 14, 18, 20, 24, 30))
    if f == "2G2":
        return s**3 + 1
    if f == "2B2":
        return s**2 + 1
    if f == "3D4":
        return (s**8 + s**4 + 1) * (s**3 + 1) * (s + 1)
    raise ValueError(f"no Borel index for {f}")
