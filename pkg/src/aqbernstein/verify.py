"""Exact-mode verification suite.

Runs the library's independent-oracle checks over a (q, alpha) grid and all
degrees n up to a cap: the two operator representations agree, eigenvectors
satisfy the eigen relation exactly, the two eigenvalue formulas coincide and
equal the leading monomial-image coefficient, eigenvalues are strictly
decreasing from k = 1, the two q-Stirling computation paths agree, the
closed-form low-degree eigenvectors come out, and the operator axioms
(endpoint interpolation, invariance of a t + b, degree reduction, partition
of unity) hold.

Every check reports its case count and, on failure, the first
counterexample in serialized form. The suite is deterministic: the random
sample vectors used by the representation-equivalence check come from a
fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .bernstein import (
    OperatorParams,
    apply_pointwise,
    apply_to_samples,
    basis_values,
    monomial_image,
    sample_nodes,
)
from .eigen import eigensystem, eigenvalue, eigenvalue_product_form
from .polynomials import Polynomial, poly_eval, poly_fit, poly_scale
from .qcalc import q_stirling2, q_stirling2_rec
from .scalars import format_scalar

Q_GRID = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))
ALPHA_GRID = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)
DEFAULT_SEED = 20260801


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: dict | None

    def as_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    max_n: int
    checks: tuple[CheckResult, ...]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_n": self.max_n,
            "checks": [c.as_dict() for c in self.checks],
        }


def _ce(**fields) -> dict:
    out = {}
    for key, value in fields.items():
        if isinstance(value, Polynomial):
            out[key] = [format_scalar(c) for c in value.coeffs]
        elif isinstance(value, (list, tuple)):
            out[key] = [format_scalar(v) for v in value]
        elif isinstance(value, int):
            out[key] = value
        else:
            out[key] = format_scalar(value)
    return out


def _grid(max_n: int):
    for n in range(1, max_n + 1):
        for q in Q_GRID:
            for alpha in ALPHA_GRID:
                yield OperatorParams(n, q, alpha)


def check_stirling_cross(max_kr: int = 12) -> CheckResult:
    cases = 0
    for q in Q_GRID:
        for k in range(max_kr + 1):
            for r in range(max_kr + 1):
                cases += 1
                a = q_stirling2(k, r, q)
                b = q_stirling2_rec(k, r, q)
                if a != b:
                    return CheckResult(
                        "stirling_cross_check",
                        False,
                        cases,
                        _ce(q=q, k=k, r=r, explicit=a, recurrence=b),
                    )
    return CheckResult("stirling_cross_check", True, cases, None)


def check_representation_equivalence(
    max_n: int, vectors_per_case: int = 3, seed: int = DEFAULT_SEED
) -> CheckResult:
    rng = random.Random(seed)
    cases = 0
    for params in _grid(max_n):
        for _ in range(vectors_per_case):
            f = [
                Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for _ in range(params.n + 1)
            ]
            cases += 1
            direct = apply_to_samples(f, params)
            xs = [Fraction(t, 2 * params.n + 1) for t in range(params.n + 2)]
            pts = [(x, apply_pointwise(f, params, x)) for x in xs]
            fitted = poly_fit(pts, params.n)
            if direct != fitted:
                return CheckResult(
                    "representation_equivalence",
                    False,
                    cases,
                    _ce(
                        n=params.n,
                        q=params.q,
                        alpha=params.alpha,
                        samples=f,
                        difference_form=direct,
                        basis_form=fitted,
                    ),
                )
    return CheckResult("representation_equivalence", True, cases, None)


def check_eigen_relation(max_n: int) -> CheckResult:
    cases = 0
    for params in _grid(max_n):
        system = eigensystem(params)
        nodes = sample_nodes(params)
        for k in range(params.n + 1):
            cases += 1
            p = system.vectors[k]
            image = apply_to_samples([poly_eval(p, t) for t in nodes], params)
            if image != poly_scale(p, system.lambdas[k]):
                return CheckResult(
                    "eigen_relation",
                    False,
                    cases,
                    _ce(
                        n=params.n,
                        q=params.q,
                        alpha=params.alpha,
                        k=k,
                        eigenvector=p,
                        image=image,
                        eigenvalue=system.lambdas[k],
                    ),
                )
    return CheckResult("eigen_relation", True, cases, None)


def check_leading_coefficient(max_n: int) -> CheckResult:
    cases = 0
    for params in _grid(max_n):
        for k in range(1, params.n + 1):
            cases += 1
            lam = eigenvalue(k, params)
            a_kk = monomial_image(k, params).coeffs[k]
            if a_kk != lam:
                return CheckResult(
                    "leading_coefficient",
                    False,
                    cases,
                    _ce(n=params.n, q=params.q, alpha=params.alpha, k=k,
                        leading=a_kk, eigenvalue=lam),
                )
            if k >= 2 and eigenvalue_product_form(k, params) != lam:
                return CheckResult(
                    "leading_coefficient",
                    False,
                    cases,
                    _ce(n=params.n, q=params.q, alpha=params.alpha, k=k,
                        product_form=eigenvalue_product_form(k, params),
                        closed_form=lam),
                )
    return CheckResult("leading_coefficient", True, cases, None)


def check_distinctness(max_n: int) -> CheckResult:
    cases = 0
    for params in _grid(max_n):
        lams = [eigenvalue(k, params) for k in range(params.n + 1)]
        for k in range(2, params.n + 1):
            cases += 1
            if not lams[k] < lams[k - 1] or lams[k] < 0:
                return CheckResult(
                    "distinctness",
                    False,
                    cases,
                    _ce(n=params.n, q=params.q, alpha=params.alpha, k=k,
                        lambdas=lams),
                )
    return CheckResult("distinctness", True, cases, None)


def check_example_fixed_points(max_n: int) -> CheckResult:
    cases = 0
    for params in _grid(max_n):
        if params.n < 2:
            continue
        cases += 1
        system = eigensystem(params)
        if system.vectors[2] != Polynomial((0, -1, 1)):
            return CheckResult(
                "example_fixed_points",
                False,
                cases,
                _ce(n=params.n, q=params.q, alpha=params.alpha,
                    degree2=system.vectors[2]),
            )
    if max_n >= 3:
        for q in Q_GRID:
            for alpha in ALPHA_GRID:
                cases += 1
                den = (1 - alpha) * q**4 + q**3 + 2 * q**2 + (1 + alpha) * q + 1
                a2 = -((1 - alpha) * q**4 + (2 - alpha) * q**3 + 3 * q**2
                       + (2 * alpha + 1) * q + 2) / den
                a1 = ((1 - alpha) * q**3 + q**2 + alpha * q + 1) / den
                expected = Polynomial((Fraction(0), a1, a2, Fraction(1)))
                params = OperatorParams(3, q, alpha)
                got = eigensystem(params).vectors[3]
                if got != expected:
                    return CheckResult(
                        "example_fixed_points",
                        False,
                        cases,
                        _ce(q=q, alpha=alpha, degree3=got, expected=expected),
                    )
    return CheckResult("example_fixed_points", True, cases, None)


def check_operator_axioms(max_n: int, seed: int = DEFAULT_SEED) -> CheckResult:
    rng = random.Random(seed + 1)
    cases = 0
    xs = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
    for params in _grid(max_n):
        nodes = sample_nodes(params)
        # partition of unity
        for x in xs:
            cases += 1
            total = sum(basis_values(params, x))
            if total != 1:
                return CheckResult(
                    "operator_axioms", False, cases,
                    _ce(axiom="partition_of_unity", n=params.n, q=params.q,
                        alpha=params.alpha, x=x, total=total),
                )
        # endpoint interpolation on a random sample vector
        f = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
             for _ in range(params.n + 1)]
        cases += 1
        if (apply_pointwise(f, params, Fraction(0)) != f[0]
                or apply_pointwise(f, params, Fraction(1)) != f[-1]):
            return CheckResult(
                "operator_axioms", False, cases,
                _ce(axiom="endpoint_interpolation", n=params.n, q=params.q,
                    alpha=params.alpha, samples=f),
            )
        # invariance of a t + b
        a_, b_ = Fraction(rng.randint(-5, 5), rng.randint(1, 5)), Fraction(
            rng.randint(-5, 5), rng.randint(1, 5))
        cases += 1
        image = apply_to_samples([a_ * t + b_ for t in nodes], params)
        if image != Polynomial((b_, a_)):
            return CheckResult(
                "operator_axioms", False, cases,
                _ce(axiom="linear_invariance", n=params.n, q=params.q,
                    alpha=params.alpha, a=a_, b=b_, image=image),
            )
        # degree reduction on monomials
        for k in range(1, params.n + 1):
            cases += 1
            image = apply_to_samples([t**k for t in nodes], params)
            lam = eigenvalue(k, params)
            bad = image.degree > k or (lam != 0 and image.degree != k)
            if bad:
                return CheckResult(
                    "operator_axioms", False, cases,
                    _ce(axiom="degree_reduction", n=params.n, q=params.q,
                        alpha=params.alpha, k=k, image=image),
                )
    return CheckResult("operator_axioms", True, cases, None)


def run_verify(
    max_n: int = 6, vectors_per_case: int = 3, seed: int = DEFAULT_SEED
) -> VerifyReport:
    """Run every check; the report carries one result per check."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    checks = (
        check_stirling_cross(),
        check_representation_equivalence(max_n, vectors_per_case, seed),
        check_eigen_relation(max_n),
        check_leading_coefficient(max_n),
        check_distinctness(max_n),
        check_example_fixed_points(max_n),
        check_operator_axioms(max_n, seed),
    )
    return VerifyReport(all(c.passed for c in checks), max_n, checks)
