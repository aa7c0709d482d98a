"""The (alpha,q)-Bernstein operator T_{n,q,alpha}.

T_{n,q,alpha} sends a function f on [0,1], known through its samples
f_i = f([i]_q / [n]_q), to the degree-n polynomial

    T_{n,q,alpha}(f; x) = sum_i f_i * p_{n,q,i}^{(alpha)}(x),

where the basis blends two q-binomial families by the parameter alpha:
alpha = 1 recovers the q-Bernstein operator and q = 1 the alpha-Bernstein
operator. The module provides two independent computation routes, the basis
sum above (``apply_pointwise``) and the forward q-difference representation

    sum_r [ (1-alpha) qbinom(n-1, r) Delta_q^r g_0
            + alpha qbinom(n, r) Delta_q^r f_0 ] x^r

(``apply_to_samples``), plus the closed-form coefficients of the monomial
images T(t^k) from which the eigenstructure is built.

Basis evaluation uses a factored form in which the removable division by
(1 - q^(n-i-1) x) has been cancelled, so no evaluation point is singular.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Sequence

from .polynomials import Polynomial
from .qcalc import (
    q_binomial,
    q_difference_table,
    q_integer,
    q_pochhammer,
    q_stirling2,
)
from .scalars import MixedModeError, Scalar, coerce, common_mode

# Test-only fault injection: names in this set corrupt a formula on purpose
# so the verification harness can prove it would catch a regression.
_ACTIVE_FAULTS: set[str] = set()
KNOWN_FAULTS = frozenset({"ark-sign"})


@contextmanager
def inject_fault(name: str):
    """Enable a named, deliberate formula corruption while the context runs."""
    if name not in KNOWN_FAULTS:
        raise ValueError(f"unknown fault {name!r}; known: {sorted(KNOWN_FAULTS)}")
    _ACTIVE_FAULTS.add(name)
    try:
        yield
    finally:
        _ACTIVE_FAULTS.discard(name)


@dataclass(frozen=True)
class OperatorParams:
    """The triple (n, q, alpha) defining T_{n,q,alpha}.

    Requires n >= 1 and q > 0. alpha must lie in [0,1] unless
    ``allow_any_alpha`` is set; outside that interval the eigenvalue
    distinctness guarantee is void, so eigen computations refuse by default.
    q and alpha must share a scalar mode (ints count as exact).
    """

    n: int
    q: Scalar
    alpha: Scalar
    allow_any_alpha: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        mode = common_mode(self.q, self.alpha) or "exact"
        object.__setattr__(self, "q", coerce(self.q, mode))
        object.__setattr__(self, "alpha", coerce(self.alpha, mode))
        if not self.q > 0:
            raise ValueError(f"q must be positive, got {self.q}")
        if not self.allow_any_alpha and not 0 <= self.alpha <= 1:
            raise ValueError(
                f"alpha={self.alpha} is outside [0,1]; pass allow_any_alpha=True "
                "to compute anyway (eigenvalue distinctness is then unverified)"
            )

    @property
    def mode(self) -> str:
        return "float" if isinstance(self.q, float) else "exact"

    @property
    def alpha_in_unit_interval(self) -> bool:
        return 0 <= self.alpha <= 1


@dataclass(frozen=True)
class MonomialImage:
    """Coefficients a(0,k)..a(k,k) of T(t^k; x), ascending powers.

    a(0,k) = 0 for k >= 1 and a(k,k) is the k-th eigenvalue.
    """

    k: int
    coeffs: tuple[Scalar, ...]


def _check_samples(samples: Sequence[Scalar], params: OperatorParams) -> tuple[Scalar, ...]:
    if len(samples) != params.n + 1:
        raise ValueError(
            f"expected {params.n + 1} samples for n={params.n}, got {len(samples)}"
        )
    mode = common_mode(params.q, *samples)
    if mode is not None and mode != params.mode:
        raise MixedModeError(
            f"samples are {mode}-mode but operator parameters are {params.mode}"
        )
    return tuple(coerce(v, params.mode) for v in samples)


def sample_nodes(params: OperatorParams) -> tuple[Scalar, ...]:
    """The nodes [i]_q / [n]_q for i = 0..n; starts at 0, ends at 1."""
    n, q = params.n, params.q
    denom = q_integer(n, q)
    return tuple(q_integer(i, q) / denom for i in range(n + 1))


def basis_eval(params: OperatorParams, i: int, x: Scalar) -> Scalar:
    """Value of the basis polynomial p_{n,q,i}^{(alpha)} at x.

    For n >= 2 the three contributions are, with the removable factor
    cancelled:

        (1-alpha) qbinom(n-2, i)   x^i     (x;q)_{n-i-1}
      + (1-alpha) qbinom(n-2, i-2) q^(n-i) x^(i-1) (x;q)_{n-i}
      + alpha     qbinom(n, i)     x^i     (x;q)_{n-i}

    The q-power on the middle term must be n-i for the family to sum to 1
    (partition of unity) and to agree with the forward-difference form of
    the operator; both are enforced by tests.
    """
    n, q, alpha = params.n, params.q, params.alpha
    if not 0 <= i <= n:
        raise ValueError(f"basis index i must satisfy 0 <= i <= {n}, got {i}")
    mode = common_mode(q, x)
    if mode is not None and mode != params.mode:
        raise MixedModeError(f"x is {mode}-mode but operator parameters are {params.mode}")
    x = coerce(x, params.mode)
    if n == 1:
        return 1 - x if i == 0 else x

    total = q * 0
    b = q_binomial(n - 2, i, q)
    if b != 0:
        total = total + (1 - alpha) * b * x**i * q_pochhammer(x, q, n - i - 1)
    if i >= 2:
        b = q_binomial(n - 2, i - 2, q)
        if b != 0:
            total = total + (
                (1 - alpha) * b * q ** (n - i) * x ** (i - 1) * q_pochhammer(x, q, n - i)
            )
    b = q_binomial(n, i, q)
    if b != 0:
        total = total + alpha * b * x**i * q_pochhammer(x, q, n - i)
    return total


def _qbinom_row(n: int, q: Scalar) -> tuple[Scalar, ...]:
    """All q-binomials (n choose i)_q for i = 0..n, by incremental update."""
    row = [q * 0 + 1]
    for i in range(n):
        row.append(row[-1] * q_integer(n - i, q) / q_integer(i + 1, q))
    return tuple(row)


def basis_values(params: OperatorParams, x: Scalar) -> tuple[Scalar, ...]:
    """All n+1 basis values p_{n,q,i}^{(alpha)}(x) at once.

    Agrees entrywise with :func:`basis_eval`; shares the q-shifted-product
    prefixes and binomial rows across i, which matters when the basis sum is
    used as a brute-force oracle.
    """
    n, q, alpha = params.n, params.q, params.alpha
    mode = common_mode(q, x)
    if mode is not None and mode != params.mode:
        raise MixedModeError(f"x is {mode}-mode but operator parameters are {params.mode}")
    x = coerce(x, params.mode)
    if n == 1:
        return (1 - x, x)
    one = q * 0 + 1
    poch = [one]
    for s in range(n):
        poch.append(poch[-1] * (1 - x * q**s))
    xpow = [one]
    for _ in range(n):
        xpow.append(xpow[-1] * x)
    row_n = _qbinom_row(n, q)
    row_n2 = _qbinom_row(n - 2, q)
    values = []
    for i in range(n + 1):
        total = alpha * row_n[i] * xpow[i] * poch[n - i]
        if i <= n - 2:
            total = total + (1 - alpha) * row_n2[i] * xpow[i] * poch[n - i - 1]
        if i >= 2:
            total = total + (
                (1 - alpha) * row_n2[i - 2] * q ** (n - i) * xpow[i - 1] * poch[n - i]
            )
        values.append(total)
    return tuple(values)


def _g_samples(samples: tuple[Scalar, ...], params: OperatorParams) -> tuple[Scalar, ...]:
    """The blended sequence g_i, i = 0..n-1 (a q-weighted mix of f_i, f_{i+1})."""
    n, q = params.n, params.q
    dn1 = q_integer(n - 1, q)
    out = []
    for i in range(n):
        w = q ** (n - i - 1) * q_integer(i, q) / dn1
        out.append((1 - w) * samples[i] + w * samples[i + 1])
    return tuple(out)


def g_difference(
    samples: Sequence[Scalar], i: int, r: int, params: OperatorParams
) -> Scalar:
    """Delta_q^r g_i expressed through differences of f:

        (1 - q^(n-i-1) [i]_q/[n-1]_q) Delta_q^r f_i
        + (q^(n-i-1-r) [i+r]_q/[n-1]_q) Delta_q^r f_{i+1}.

    Requires n >= 2 (g is undefined at n = 1) and i + r + 1 <= n.
    """
    n, q = params.n, params.q
    if n < 2:
        raise ValueError("g is undefined for n < 2")
    if i < 0 or r < 0:
        raise ValueError(f"need i, r >= 0, got ({i}, {r})")
    if i + r + 1 > n:
        raise ValueError(f"need i + r + 1 <= n, got {i} + {r} + 1 > {n}")
    f = _check_samples(samples, params)
    table = q_difference_table(f, q)
    dn1 = q_integer(n - 1, q)
    w_i = q ** (n - i - 1) * q_integer(i, q) / dn1
    w_i1 = q ** (n - i - 1 - r) * q_integer(i + r, q) / dn1
    return (1 - w_i) * table[r][i] + w_i1 * table[r][i + 1]


def apply_to_samples(samples: Sequence[Scalar], params: OperatorParams) -> Polynomial:
    """T_{n,q,alpha}(f; .) as a polynomial, via the forward-difference form.

    n = 1 is linear interpolation f_0 (1-x) + f_1 x; for n >= 2 the
    coefficient of x^r combines Delta_q^r g_0 and Delta_q^r f_0 (the g term
    is absent at r = n, where its q-binomial weight vanishes).
    """
    f = _check_samples(samples, params)
    n, q, alpha = params.n, params.q, params.alpha
    if n == 1:
        return Polynomial((f[0], f[1] - f[0]))
    ftable = q_difference_table(f, q)
    gtable = q_difference_table(_g_samples(f, params), q)
    coeffs = []
    for r in range(n + 1):
        c = alpha * q_binomial(n, r, q) * ftable[r][0]
        if r <= n - 1:
            c = c + (1 - alpha) * q_binomial(n - 1, r, q) * gtable[r][0]
        coeffs.append(c)
    return Polynomial(tuple(coeffs))


def apply_pointwise(
    samples: Sequence[Scalar], params: OperatorParams, x: Scalar
) -> Scalar:
    """T_{n,q,alpha}(f; x) as the basis-weighted sum of the samples.

    A computation route independent of ``apply_to_samples``; the two agree
    exactly as polynomials.
    """
    f = _check_samples(samples, params)
    row = basis_values(params, x)
    return sum((f[i] * row[i] for i in range(params.n + 1)), start=params.q * 0)


def monomial_image(k: int, params: OperatorParams) -> MonomialImage:
    """Coefficients of T(t^k; x) for 1 <= k <= n.

    The coefficient of x^r is

        q^(r(r-1)/2) * ([n-2]_q! / ([n]_q^k [n-r]_q!))
          * { (1-alpha) [n-r]_q ([n+r-1]_q S_q(k+1,r+1)
                                 - [r+1]_q [n-1]_q S_q(k,r+1))
              + alpha [n]_q [n-1]_q S_q(k,r) }

    evaluated here with the factorial ratio regrouped into bounded
    quotients [m]_q/[n]_q, which leaves exact values unchanged and keeps
    float mode in range at large n (the raw q-factorials would overflow).
    """
    n, q, alpha = params.n, params.q, params.alpha
    if not 1 <= k <= n:
        raise ValueError(f"monomial image needs 1 <= k <= n, got k={k}, n={n}")
    if n == 1:
        return MonomialImage(1, (q * 0, q * 0 + 1))

    mid_sign = 1 if "ark-sign" in _ACTIVE_FAULTS else -1
    dn = q_integer(n, q)
    ratio_n1 = q_integer(n - 1, q) / dn
    coeffs = []
    for r in range(k + 1):
        s_up = q_stirling2(k + 1, r + 1, q)
        s_mid = q_stirling2(k, r + 1, q)
        s_low = q_stirling2(k, r, q)
        braces = (1 - alpha) * (q_integer(n - r, q) / dn) * (
            (q_integer(n + r - 1, q) / dn) * s_up
            + mid_sign * q_integer(r + 1, q) * ratio_n1 * s_mid
        ) + alpha * ratio_n1 * s_low
        if r >= 2:
            base = q * 0 + 1
            for m in range(n - r + 1, n - 1):
                base = base * q_integer(m, q) / dn
            base = base / dn ** (k - r)
        elif r == 1:
            base = (dn / q_integer(n - 1, q)) / dn ** (k - 1)
        else:
            base = (dn / q_integer(n - 1, q)) / dn**k
        coeffs.append(q ** (r * (r - 1) // 2) * base * braces)
    return MonomialImage(k, tuple(coeffs))
