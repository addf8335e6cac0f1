"""Randomized law suites over the stuffle operations.

Each suite draws seeded samples from the augmentation ideal (no empty-word
part, so the partial operations are total on them) and compares both sides
of every relation by exact equality. Case `i` of a run gets its own child
generator ``random.Random(f"{seed}:{i}")``, which makes runs reproducible
and order-independent, so the parallel path returns byte-identical reports.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .bialg import check_compatibility
from .coeff import CoeffAlgebraSpec
from .grammar import render_element, render_square_element
from .sampling import random_element
from .tensorq import (
    TensorElement,
    involute_element,
    op_dot,
    op_left,
    op_right,
    quasi_shuffle,
)


@dataclass(frozen=True)
class LawViolation:
    law: str
    case_index: int
    inputs: tuple[str, ...]
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "case": self.case_index,
            "inputs": list(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class LawReport:
    suite: str
    algebra: str
    cases: int
    seed: int
    violations: list[LawViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "cases": self.cases,
            "seed": self.seed,
            "ok": self.ok,
            "violations": [v.to_json() for v in self.violations],
        }


# Relation tables. Each entry maps three sampled elements to (lhs, rhs).
# The seven-relation suite holds over any letter algebra; the three-relation
# suite (plus x>y = y<x) additionally needs the letter product commutative.

_SEVEN = (
    ("(x<y)<z = x<(y*z)", lambda A, L, R, D, S, x, y, z: (L(A, L(A, x, y), z), L(A, x, S(A, y, z)))),
    ("(x>y)<z = x>(y<z)", lambda A, L, R, D, S, x, y, z: (L(A, R(A, x, y), z), R(A, x, L(A, y, z)))),
    ("(x*y)>z = x>(y>z)", lambda A, L, R, D, S, x, y, z: (R(A, S(A, x, y), z), R(A, x, R(A, y, z)))),
    ("(x.y)<z = x.(y<z)", lambda A, L, R, D, S, x, y, z: (L(A, D(A, x, y), z), D(A, x, L(A, y, z)))),
    ("(x<y).z = x.(y>z)", lambda A, L, R, D, S, x, y, z: (D(A, L(A, x, y), z), D(A, x, R(A, y, z)))),
    ("(x>y).z = x>(y.z)", lambda A, L, R, D, S, x, y, z: (D(A, R(A, x, y), z), R(A, x, D(A, y, z)))),
    ("(x.y).z = x.(y.z)", lambda A, L, R, D, S, x, y, z: (D(A, D(A, x, y), z), D(A, x, D(A, y, z)))),
)

_CTD_THREE = (
    (
        "(x<y)<z = x<(y<z + z<y + y.z)",
        lambda A, L, R, D, S, x, y, z: (
            L(A, L(A, x, y), z),
            L(A, x, L(A, y, z) + L(A, z, y) + D(A, y, z)),
        ),
    ),
    ("(x.y)<z = x.(y<z)", lambda A, L, R, D, S, x, y, z: (L(A, D(A, x, y), z), D(A, x, L(A, y, z)))),
    ("(x.y).z = x.(y.z)", lambda A, L, R, D, S, x, y, z: (D(A, D(A, x, y), z), D(A, x, D(A, y, z)))),
    ("x>y = y<x", lambda A, L, R, D, S, x, y, z: (R(A, x, y), L(A, y, x))),
)


def _check_triple_relations(alg, relations, x, y, z, index):
    found = []
    for name, sides in relations:
        lhs, rhs = sides(alg, op_left, op_right, op_dot, quasi_shuffle, x, y, z)
        if lhs != rhs:
            found.append(
                LawViolation(
                    law=name,
                    case_index=index,
                    inputs=(render_element(x), render_element(y), render_element(z)),
                    lhs=render_element(lhs),
                    rhs=render_element(rhs),
                )
            )
    return found


def _sample(alg, rng, max_degree):
    return random_element(alg, rng, max_total_degree=max_degree)


def _case_seven(alg, rng, index, max_degree):
    x = _sample(alg, rng, max_degree)
    y = _sample(alg, rng, max_degree)
    z = _sample(alg, rng, max_degree)
    return _check_triple_relations(alg, _SEVEN, x, y, z, index)


def _case_ctd_three(alg, rng, index, max_degree):
    x = _sample(alg, rng, max_degree)
    y = _sample(alg, rng, max_degree)
    z = _sample(alg, rng, max_degree)
    return _check_triple_relations(alg, _CTD_THREE, x, y, z, index)


def _case_splitting(alg, rng, index, max_degree):
    x = _sample(alg, rng, max_degree)
    y = _sample(alg, rng, max_degree)
    lhs = quasi_shuffle(alg, x, y)
    rhs = op_left(alg, x, y) + op_right(alg, x, y) + op_dot(alg, x, y)
    if lhs != rhs:
        return [
            LawViolation(
                law="x*y = x<y + x>y + x.y",
                case_index=index,
                inputs=(render_element(x), render_element(y)),
                lhs=render_element(lhs),
                rhs=render_element(rhs),
            )
        ]
    return []


_INVOLUTION = (
    ("s(s(x)) = x", lambda A, s, x, y: (s(A, s(A, x)), x)),
    ("s(x*y) = s(y)*s(x)", lambda A, s, x, y: (s(A, quasi_shuffle(A, x, y)), quasi_shuffle(A, s(A, y), s(A, x)))),
    ("s(x<y) = s(y)>s(x)", lambda A, s, x, y: (s(A, op_left(A, x, y)), op_right(A, s(A, y), s(A, x)))),
    ("s(x>y) = s(y)<s(x)", lambda A, s, x, y: (s(A, op_right(A, x, y)), op_left(A, s(A, y), s(A, x)))),
    ("s(x.y) = s(y).s(x)", lambda A, s, x, y: (s(A, op_dot(A, x, y)), op_dot(A, s(A, y), s(A, x)))),
)


def _case_involution(alg, rng, index, max_degree):
    x = _sample(alg, rng, max_degree)
    y = _sample(alg, rng, max_degree)
    found = []
    for name, sides in _INVOLUTION:
        lhs, rhs = sides(alg, involute_element, x, y)
        if lhs != rhs:
            found.append(
                LawViolation(
                    law=name,
                    case_index=index,
                    inputs=(render_element(x), render_element(y)),
                    lhs=render_element(lhs),
                    rhs=render_element(rhs),
                )
            )
    return found


def _case_compat(alg, rng, index, max_degree):
    x = _sample(alg, rng, max_degree)
    y = _sample(alg, rng, max_degree)
    report = check_compatibility(alg, x, y)
    return [
        LawViolation(
            law=f"coproduct is a morphism for {v.relation}",
            case_index=index,
            inputs=(render_element(v.x), render_element(v.y)),
            lhs=render_square_element(v.lhs),
            rhs=render_square_element(v.rhs),
        )
        for v in report.violations
    ]


# suite name -> (case function, default per-element degree bound); triple
# suites default to 2 so a whole triple stays at total degree <= 6
SUITES = {
    "seven": (_case_seven, 2),
    "ctd-three": (_case_ctd_three, 2),
    "splitting": (_case_splitting, 3),
    "involution": (_case_involution, 3),
    "bialgebra-compat": (_case_compat, 2),
}


def run_suite(
    suite: str,
    alg: CoeffAlgebraSpec,
    cases: int,
    seed: int,
    max_degree: int | None = None,
    parallel: bool = False,
) -> LawReport:
    """Run `cases` seeded checks of one suite and collect violations."""
    if suite not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {suite!r}; known suites: {known}")
    if cases < 0:
        raise ValueError("cases must be non-negative")
    case_fn, default_degree = SUITES[suite]
    degree = default_degree if max_degree is None else max_degree
    if degree < 1:
        raise ValueError("max_degree must be at least 1")

    def one(index: int):
        rng = random.Random(f"{seed}:{index}")
        return case_fn(alg, rng, index, degree)

    if parallel and cases > 1:
        with ThreadPoolExecutor() as pool:
            per_case = list(pool.map(one, range(cases)))
    else:
        per_case = [one(index) for index in range(cases)]
    violations = [violation for sub in per_case for violation in sub]
    return LawReport(suite=suite, algebra=alg.name, cases=cases, seed=seed, violations=violations)
