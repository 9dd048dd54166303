"""Symmetric-design parameter arithmetic and admissibility screens.

A parameter triple (v, k, lambda) is *admissible* when it passes the
counting conditions every flag-transitive symmetric design satisfies:
the order equation k(k-1) = lambda(v-1), squareness of 4 lambda(v-1)+1,
lambda*v < k^2, and the optional divisibility conditions against a
stabilizer order or subdegree list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import arith

__all__ = [
    "DesignParams",
    "FeasibilityReport",
    "order_equation_k",
    "check_admissible",
    "complement",
    "lam_p_screen",
    "enumerate_feasible",
]


@dataclass(frozen=True, order=True)
class DesignParams:
    """A nontrivial (v, k, lambda) triple: 2 <= k <= v-2 and lambda >= 1."""

    v: int
    k: int
    lmbda: int

    def __post_init__(self):
        if self.lmbda < 1:
            raise ValueError("lambda must be >= 1")
        if not 2 <= self.k <= self.v - 2:
            raise ValueError(f"trivial or degenerate parameters {(self.v, self.k, self.lmbda)}")

    def order_equation_holds(self) -> bool:
        return self.k * (self.k - 1) == self.lmbda * (self.v - 1)

    def as_tuple(self):
        return (self.v, self.k, self.lmbda)


@dataclass
class FeasibilityReport:
    params: DesignParams
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(self.checks.values())


def order_equation_k(v: int, lmbda: int):
    """The unique k >= 2 with k(k-1) = lambda(v-1), if it exists.

    k = (1 + sqrt(4 lambda (v-1) + 1)) / 2 must be integral.
    """
    if v < 4 or lmbda < 1:
        raise ValueError("need v >= 4 and lambda >= 1")
    root = arith.is_perfect_square(4 * lmbda * (v - 1) + 1)
    if root is None or (1 + root) % 2 != 0:
        return None
    k = (1 + root) // 2
    assert k * (k - 1) == lmbda * (v - 1)
    return k


def check_admissible(params: DesignParams, group_order=None, subdegrees=None) -> FeasibilityReport:
    """Evaluate the flag-transitive counting conditions on a parameter triple.

    Always checks the order equation, the square condition and
    lambda*v < k^2.  "k divides |H|" is only evaluated when a stabilizer
    order is supplied; the subdegree condition k | lambda*d only when a
    subdegree list is supplied.
    """
    v, k, lm = params.as_tuple()
    rep = FeasibilityReport(params)
    rep.checks["order-equation"] = k * (k - 1) == lm * (v - 1)
    root = arith.is_perfect_square(4 * lm * (v - 1) + 1)
    rep.checks["square-condition"] = root is not None
    if root is not None:
        rep.witnesses["square_root"] = root
    rep.checks["lambda-v-lt-k2"] = lm * v < k * k
    if group_order is not None:
        rep.checks["k-divides"] = group_order % k == 0
    if subdegrees is not None:
        nontrivial = [d for d in subdegrees if d != 1]
        rep.checks["subdegree"] = all((lm * d) % k == 0 for d in nontrivial)
        rep.witnesses["subdegrees"] = list(subdegrees)
    return rep


def complement(params: DesignParams) -> DesignParams:
    """Complement parameters (v, v-k, v-2k+lambda)."""
    v, k, lm = params.as_tuple()
    lm2 = v - 2 * k + lm
    if lm2 < 1:
        raise ValueError("degenerate complement")
    return DesignParams(v, v - k, lm2)


def lam_p_screen(p: int, d: int, lmbda: int) -> dict:
    """The two arithmetic obstructions for v = p^d with lambda an odd prime != p.

    Reports whether lambda and 1-4*lambda are squares in F_p (a necessary
    condition), and, when the order equation yields k, whether k - lambda is a
    perfect square (which is forbidden).
    """
    if lmbda == 2 or not arith.is_prime(lmbda):
        raise ValueError("lambda must be an odd prime")
    if p == 2 or not arith.is_prime(p):
        raise ValueError("p must be an odd prime")
    if lmbda == p:
        raise ValueError("lambda = p is handled by the lambda-eq-p scan")
    if d < 1:
        raise ValueError("d must be >= 1")
    leg_lam = arith.legendre(lmbda, p)
    leg_disc = arith.legendre(1 - 4 * lmbda, p)
    out = {
        "legendre_lambda": leg_lam,
        "legendre_1_minus_4lambda": leg_disc,
        "passes_b1": leg_lam == 1 and leg_disc in (0, 1),
    }
    k = order_equation_k(p**d, lmbda) if p**d >= 4 else None
    if k is not None:
        out["k"] = k
        out["k_minus_lambda_square_forbidden"] = arith.is_perfect_square(k - lmbda) is not None
    return out


def enumerate_feasible(v_max: int, lambda_filter=None) -> list:
    """All admissible (v, k, lambda) with v <= v_max, sorted by (v, k).

    Applies the order equation, the square condition and lambda*v < k^2;
    lambda_filter (e.g. primality) restricts lambda.
    """
    if v_max < 4:
        return []
    out = []
    for v in range(4, v_max + 1):
        # k <= v-2 forces lambda = k(k-1)/(v-1) < v
        for lm in range(1, v):
            if lambda_filter is not None and not lambda_filter(lm):
                continue
            k = order_equation_k(v, lm)
            if k is None or not 2 <= k <= v - 2:
                continue
            params = DesignParams(v, k, lm)
            if check_admissible(params).verdict:
                out.append(params)
    return sorted(out, key=lambda p: (p.v, p.k))
