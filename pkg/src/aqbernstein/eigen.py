"""Eigenvalues and monic eigenvector polynomials of T_{n,q,alpha}.

The operator fixes constants and x, so lambda_0 = lambda_1 = 1 with
eigenvectors 1 and x. For k = 2..n the eigenvalue is

    lambda_k = q^(k(k-1)/2) * ([n-2]_q! / ([n-k]_q! [n]_q^k))
               * ((1-alpha) [n-k]_q [n-1+k]_q + alpha [n]_q [n-1]_q)

and the monic eigenvector of degree k is built top-down: its coefficient
of x^(k-j) is a linear combination of already-known higher coefficients
weighted by monomial-image coefficients, divided by lambda_k - lambda_{k-j}.
For alpha in [0,1] those differences are provably nonzero (the lambda
sequence is strictly decreasing from k = 1), which makes the recursion
well posed.

Eigenvalue differences are evaluated in a factored, cancellation-free form:
for q > 1 and large n, lambda_k and lambda_{k-j} agree to within ~q^(k-n),
so float-mode subtraction of separately computed values would lose every
significant digit. The factored form is an algebraic identity, so exact
mode is unaffected (tests pin it against direct subtraction).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .bernstein import MonomialImage, OperatorParams, monomial_image
from .polynomials import Polynomial, poly_add, poly_scale
from .qcalc import q_integer
from .scalars import (
    MixedModeError,
    Scalar,
    common_mode,
    scalar_from_json,
    scalar_to_json,
)


class DegenerateEigenvalueError(ArithmeticError):
    """A required eigenvalue difference vanished (or lost all float precision)."""


def eigenvalue(k: int, params: OperatorParams) -> Scalar:
    """lambda_k for 0 <= k <= n; equals 1 for k in {0, 1}."""
    n, q, alpha = params.n, params.q, params.alpha
    if not 0 <= k <= n:
        raise ValueError(f"eigenvalue index needs 0 <= k <= n, got k={k}, n={n}")
    if k <= 1:
        return q * 0 + 1
    # Factorial ratio regrouped into bounded quotients; exact values
    # unchanged, float mode safe at large n.
    dn = q_integer(n, q)
    base = q * 0 + 1
    for m in range(n - k + 1, n - 1):
        base = base * q_integer(m, q) / dn
    bracket = alpha * q_integer(n - 1, q) / dn
    if alpha != 1:
        bracket = bracket + (1 - alpha) * (q_integer(n - k, q) / dn) * (
            q_integer(n + k - 1, q) / dn
        )
    return q ** (k * (k - 1) // 2) * base * bracket


def eigenvalue_product_form(k: int, params: OperatorParams) -> Scalar:
    """The same eigenvalue written as a product:

        (alpha + (1-alpha) [n-k]_q [n+k-1]_q / ([n]_q [n-1]_q))
        * prod_{m=1}^{k-1} (1 - [m]_q/[n]_q)

    for 2 <= k <= n. An independent path used to cross-check
    :func:`eigenvalue`.
    """
    n, q, alpha = params.n, params.q, params.alpha
    if not 2 <= k <= n:
        raise ValueError(f"product form needs 2 <= k <= n, got k={k}, n={n}")
    out = _u_factor(k, params)
    dn = q_integer(n, q)
    for m in range(1, k):
        out = out * (1 - q_integer(m, q) / dn)
    return out


def _u_factor(k: int, params: OperatorParams) -> Scalar:
    """alpha + (1-alpha) [n-k]_q [n+k-1]_q / ([n]_q [n-1]_q); equals 1 at k <= 1."""
    n, q, alpha = params.n, params.q, params.alpha
    if alpha == 1:
        # skip the vanishing term; [n+k-1]_q may overflow float range at
        # extreme n even though it contributes nothing
        return q * 0 + 1
    return alpha + (1 - alpha) * (q_integer(n - k, q) / q_integer(n, q)) * (
        q_integer(n + k - 1, q) / q_integer(n - 1, q)
    )


def eigenvalue_difference(k: int, m: int, params: OperatorParams) -> Scalar:
    """lambda_k - lambda_m, evaluated without catastrophic cancellation.

    Writing lambda_j = u_j * prod_{t<j}(1 - [t]_q/[n]_q), the difference
    factors as

        prod_{t<m}(1 - [t]_q/[n]_q) * [ u_k * (P - 1) + (u_k - u_m) ]

    with P = prod_{t=m}^{k-1}(1 - [t]_q/[n]_q), where P - 1 is accumulated
    incrementally and u_k - u_m uses the closed form

        -(1-alpha) q^(n-k) (q^(k-m) - 1)(q^(k+m-1) - 1)
            / ((q-1)^2 [n]_q [n-1]_q)

    (limit value -(1-alpha)(k-m)(k+m-1)/(n(n-1)) at q = 1). Both pieces are
    algebraic identities, so exact mode returns exactly
    eigenvalue(k) - eigenvalue(m).

    Raises DegenerateEigenvalueError when the result is zero, or in float
    mode when it underflows below the smallest normal float (no relative
    precision left).
    """
    n, q, alpha = params.n, params.q, params.alpha
    if not 0 <= m < k <= n:
        raise ValueError(f"need 0 <= m < k <= n, got m={m}, k={k}, n={n}")
    dn = q_integer(n, q)
    base = q * 0 + 1
    for t in range(1, m):
        base = base * (1 - q_integer(t, q) / dn)
    # delta = prod_{t=m}^{k-1}(1 - [t]/[n]) - 1, accumulated as a difference
    delta = q * 0
    for t in range(max(m, 1), k):
        x = q_integer(t, q) / dn
        delta = delta * (1 - x) - x
    if q == 1:
        du = -(1 - alpha) * (k - m) * (k + m - 1) / (dn * q_integer(n - 1, q))
    else:
        du = (
            -(1 - alpha)
            * q ** (n - k)
            * (q ** (k - m) - 1)
            * (q ** (k + m - 1) - 1)
            / ((q - 1) ** 2 * dn * q_integer(n - 1, q))
        )
    diff = base * (_u_factor(k, params) * delta + du)
    if diff == 0:
        raise DegenerateEigenvalueError(
            f"lambda_{k} - lambda_{m} vanished for n={n}, q={q}, alpha={alpha}"
        )
    if isinstance(diff, float) and abs(diff) < sys.float_info.min:
        raise DegenerateEigenvalueError(
            f"lambda_{k} - lambda_{m} underflowed in float mode "
            f"(n={n}, q={q}, alpha={alpha})"
        )
    return diff


def _require_alpha_ok(params: OperatorParams) -> None:
    if not params.alpha_in_unit_interval and not params.allow_any_alpha:
        raise ValueError(
            f"alpha={params.alpha} outside [0,1]: eigenvector recursion is only "
            "guaranteed well posed on [0,1]"
        )


def _eigenvector_coeffs(
    k: int, params: OperatorParams, images: dict[int, MonomialImage]
) -> tuple[Scalar, ...]:
    q = params.q
    if k == 0:
        return (q * 0 + 1,)
    if k == 1:
        return (q * 0, q * 0 + 1)
    c: list[Scalar] = [q * 0] * (k + 1)
    c[k] = q * 0 + 1
    for j in range(1, k + 1):
        total = q * 0
        for i in range(j):
            total = total + c[k - i] * images[k - i].coeffs[k - j]
        c[k - j] = total / eigenvalue_difference(k, k - j, params)
    return tuple(c)


def eigenvector(k: int, params: OperatorParams) -> Polynomial:
    """The monic degree-k eigenvector polynomial p_k (p_0 = 1, p_1 = x)."""
    if not 0 <= k <= params.n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={params.n}")
    _require_alpha_ok(params)
    images = {m: monomial_image(m, params) for m in range(1, k + 1)}
    return Polynomial(_eigenvector_coeffs(k, params, images))


@dataclass(frozen=True)
class EigenSystem:
    """The complete eigenstructure of one operator.

    ``lambdas[k]`` pairs with the monic degree-k polynomial ``vectors[k]``.
    ``distinctness_verified`` is True when alpha lies in [0,1], the range on
    which the eigenvalues are guaranteed pairwise distinct below 1.
    """

    params: OperatorParams
    lambdas: tuple[Scalar, ...]
    vectors: tuple[Polynomial, ...]
    distinctness_verified: bool

    def as_dict(self) -> dict:
        """JSON-ready form with keys n, q, alpha, lambdas, vectors."""
        return {
            "n": self.params.n,
            "q": scalar_to_json(self.params.q),
            "alpha": scalar_to_json(self.params.alpha),
            "lambdas": [scalar_to_json(v) for v in self.lambdas],
            "vectors": [[scalar_to_json(c) for c in p.coeffs] for p in self.vectors],
        }


def eigensystem_from_dict(obj: dict) -> EigenSystem:
    """Rebuild an EigenSystem from its ``as_dict`` form."""
    q = scalar_from_json(obj["q"])
    alpha = scalar_from_json(obj["alpha"])
    params = OperatorParams(int(obj["n"]), q, alpha, allow_any_alpha=True)
    lambdas = tuple(scalar_from_json(v) for v in obj["lambdas"])
    vectors = tuple(
        Polynomial(tuple(scalar_from_json(c) for c in coeffs))
        for coeffs in obj["vectors"]
    )
    return EigenSystem(params, lambdas, vectors, params.alpha_in_unit_interval)


def eigensystem(params: OperatorParams) -> EigenSystem:
    """All eigenvalues and monic eigenvectors for k = 0..n.

    Monomial images are computed once and shared by the per-degree
    recursions.
    """
    _require_alpha_ok(params)
    n = params.n
    images = {m: monomial_image(m, params) for m in range(1, n + 1)}
    lambdas = tuple(eigenvalue(k, params) for k in range(n + 1))
    vectors = tuple(
        Polynomial(_eigenvector_coeffs(k, params, images)) for k in range(n + 1)
    )
    return EigenSystem(params, lambdas, vectors, params.alpha_in_unit_interval)


def eigen_expand(p: Polynomial, system: EigenSystem) -> tuple[Scalar, ...]:
    """Coefficients e_0..e_n with p = sum_k e_k vectors[k].

    Unique because the vectors are monic of strictly increasing degree;
    computed by back-substitution from the top degree down.
    """
    n = system.params.n
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds the system's n={n}")
    mode = common_mode(system.params.q, *p.coeffs)
    if mode is not None and mode != system.params.mode:
        raise MixedModeError(
            f"polynomial is {mode}-mode but the eigensystem is {system.params.mode}"
        )
    q = system.params.q
    residual = [p.coeff(j) + q * 0 for j in range(n + 1)]
    out: list[Scalar] = [q * 0] * (n + 1)
    for k in range(n, -1, -1):
        e = residual[k]
        out[k] = e
        if e != 0:
            vk = system.vectors[k]
            for j in range(k + 1):
                residual[j] = residual[j] - e * vk.coeff(j)
    return tuple(out)


def operator_power(p: Polynomial, m: int, system: EigenSystem) -> Polynomial:
    """Apply the operator m times to p through its eigen-expansion:
    sum_k e_k lambda_k^m vectors[k]."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"power must be an integer >= 0, got {m!r}")
    weights = eigen_expand(p, system)
    out = Polynomial()
    for k, e in enumerate(weights):
        if e != 0:
            out = poly_add(out, poly_scale(system.vectors[k], e * system.lambdas[k] ** m))
    return out
