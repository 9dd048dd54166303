"""Candidates, elimination records, and the replayable rule registry.

Every eliminated candidate carries a rule id plus the witness integers of
the violated relation; re-evaluating the rule on the candidate must
reproduce the witnesses exactly (tested).  Rules with id "cited:*" record
eliminations the source analysis delegates to external references; their
witnesses are the identifying parameters, never a fake derivation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import arith

__all__ = ["Candidate", "EliminationRecord", "ScanResult", "RULES", "evaluate_rule", "make_record"]


@dataclass(frozen=True)
class Candidate:
    scenario: str
    data: tuple  # sorted (key, value) pairs

    @staticmethod
    def of(scenario: str, **kw) -> "Candidate":
        return Candidate(scenario, tuple(sorted(kw.items())))

    def as_dict(self) -> dict:
        return dict(self.data)

    def __str__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.data)
        return f"{self.scenario}({inner})"


@dataclass(frozen=True)
class EliminationRecord:
    candidate: Candidate
    rule: str
    witnesses: tuple
    verdict: str  # "eliminated" | "survivor"

    def to_json(self) -> dict:
        return {
            "candidate": {"scenario": self.candidate.scenario, **self.candidate.as_dict()},
            "rule": self.rule,
            "witnesses": list(self.witnesses),
            "verdict": self.verdict,
        }


@dataclass
class ScanResult:
    scan: str
    candidates_examined: int = 0
    records: list = field(default_factory=list)
    survivors: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def add(self, rec: EliminationRecord):
        self.records.append(rec)
        if rec.verdict == "survivor":
            self.survivors.append(rec.candidate)

    def to_json(self) -> dict:
        return {
            "scan": self.scan,
            "candidates_examined": self.candidates_examined,
            "records": [r.to_json() for r in self.records],
            "survivors": [str(c) for c in self.survivors],
            "notes": list(self.notes),
        }


# -- rule registry ---------------------------------------------------------
# Each rule maps the candidate's data dict to the witness tuple.  The
# candidate must carry the fields the rule reads (v, lmbda, ...).


def _w_square(d):
    m = 4 * d["lmbda"] * (d["v"] - 1) + 1
    r = arith.is_perfect_square(m)
    import math

    return (m, math.isqrt(m), 1 if r is not None else 0)


def _w_no_k(d):
    import math

    m = d["lmbda"] * (d["v"] - 1)
    k = (1 + math.isqrt(4 * m + 1)) // 2
    return (m, k, k * (k - 1))


def _w_lambda_not_integral(d):
    return (d["lmbda_num"], d["lmbda_den"], d["lmbda_num"] % d["lmbda_den"])


def _w_lambda_not_prime(d):
    return (d["lmbda"], 1 if arith.is_prime(d["lmbda"]) else 0)


def _w_inequality(d):
    return (d["lhs"], d["rhs"])


def _w_k_div(d):
    return (d["k"], d["bound"], d["bound"] % d["k"])


def _w_lambda_v_k2(d):
    return (d["lmbda"] * d["v"], d["k"] ** 2)


def _w_trivial(d):
    return (d["v"], d["k"], d["lmbda"])


def _w_parity(d):
    return (d["lmbda"], d["lmbda"] % 2)


def _w_prop31(d):
    return (arith.legendre(d["lmbda"], d["p"]), arith.legendre(1 - 4 * d["lmbda"], d["p"]))


def _w_embedding(d):
    return (d["group_order"], d["ambient_order"], d["ambient_order"] % d["group_order"])


def _w_cited(d):
    return tuple(v for _, v in sorted(d.items()) if isinstance(v, int))


def _w_no_lambda(d):
    return ()


RULES = {
    "square-condition": _w_square,
    "order-equation-no-k": _w_no_k,
    "lambda-not-integral": _w_lambda_not_integral,
    "lambda-not-prime": _w_lambda_not_prime,
    "inequality": _w_inequality,
    "k-divisibility": _w_k_div,
    "lambda-v-ge-k2": _w_lambda_v_k2,
    "trivial-parameters": _w_trivial,
    "lambda-even-parity": _w_parity,
    "prop-3.1-b1": _w_prop31,
    "stabilizer-order-embedding": _w_embedding,
    "no-admissible-lambda": _w_no_lambda,
}


def evaluate_rule(rule: str, candidate: Candidate) -> tuple:
    if rule.startswith("cited:"):
        return _w_cited(candidate.as_dict())
    return RULES[rule](candidate.as_dict())


def make_record(candidate: Candidate, rule: str, verdict: str = "eliminated") -> EliminationRecord:
    return EliminationRecord(candidate, rule, evaluate_rule(rule, candidate), verdict)
