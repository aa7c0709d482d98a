"""q-calculus primitives.

The building blocks of q-analysis with a deformation parameter q > 0:
q-integers, q-factorials, q-binomial coefficients, q-shifted (Pochhammer)
products, q-Stirling numbers of the second kind, and iterated forward
q-differences of sample sequences. Everything specializes to the classical
object at q = 1.

All functions are generic over the scalar mode of q: exact rationals give
exact results, floats give floats. Functions are pure; the memo table used
by the recurrence form of the q-Stirling numbers is local to each call.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import Scalar


def _zero(q: Scalar) -> Scalar:
    return q * 0


def _one(q: Scalar) -> Scalar:
    return q * 0 + 1


def _require_positive_q(q: Scalar) -> None:
    if not q > 0:
        raise ValueError(f"q must be positive, got {q}")


def q_integer(n: int, q: Scalar) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0."""
    _require_positive_q(q)
    if n < 0:
        raise ValueError(f"q-integer needs n >= 0, got {n}")
    if n == 0:
        return _zero(q)
    if q == 1:
        return _one(q) * n
    return (q**n - 1) / (q - 1)


def q_factorial(n: int, q: Scalar) -> Scalar:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError(f"q-factorial needs n >= 0, got {n}")
    out = _one(q)
    for m in range(1, n + 1):
        out = out * q_integer(m, q)
    return out


def q_binomial(n: int, k: int, q: Scalar) -> Scalar:
    """q-binomial coefficient, extended by 0 outside 0 <= k <= n."""
    _require_positive_q(q)
    if k < 0 or k > n:
        return _zero(q)
    k = min(k, n - k)
    out = _one(q)
    for i in range(1, k + 1):
        out = out * q_integer(n - k + i, q) / q_integer(i, q)
    return out


def q_pochhammer(a: Scalar, q: Scalar, k: int) -> Scalar:
    """(a;q)_k = prod_{s=0}^{k-1} (1 - a q^s); the empty product is 1."""
    _require_positive_q(q)
    if k < 0:
        raise ValueError(f"q-Pochhammer needs k >= 0, got {k}")
    out = _one(q)
    for s in range(k):
        out = out * (1 - a * q**s)
    return out


def q_stirling2(k: int, r: int, q: Scalar) -> Scalar:
    """q-Stirling number of the second kind S_q(k, r), by its explicit sum.

    S_q(k, r) = (1 / ([r]_q! q^(r(r-1)/2)))
                * sum_{i=0}^{r} (-1)^i q^(i(i-1)/2) qbinom(r, i) [r-i]_q^k.

    Boundary values are pinned before the sum is consulted: S_q(0,0) = 1,
    S_q(k,0) = 0 for k > 0, and S_q(k,r) = 0 for k < r.
    """
    _require_positive_q(q)
    if k < 0 or r < 0:
        raise ValueError(f"q-Stirling number needs k, r >= 0, got ({k}, {r})")
    if r == 0:
        return _one(q) if k == 0 else _zero(q)
    if k < r:
        return _zero(q)
    total = _zero(q)
    for i in range(r + 1):
        term = q ** (i * (i - 1) // 2) * q_binomial(r, i, q) * q_integer(r - i, q) ** k
        total = total - term if i % 2 else total + term
    return total / (q_factorial(r, q) * q ** (r * (r - 1) // 2))


def q_stirling2_rec(k: int, r: int, q: Scalar) -> Scalar:
    """S_q(k, r) via the recurrence S_q(k+1, r) = S_q(k, r-1) + [r]_q S_q(k, r).

    An independent computation path kept solely for cross-checking the
    explicit sum. The memo table lives and dies with this call.
    """
    _require_positive_q(q)
    if k < 0 or r < 0:
        raise ValueError(f"q-Stirling number needs k, r >= 0, got ({k}, {r})")
    if r == 0:
        return _one(q) if k == 0 else _zero(q)
    if k < r:
        return _zero(q)
    qints = [q_integer(m, q) for m in range(r + 1)]
    # row[j] = S_q(i, j) while sweeping i upward
    row = [_one(q)] + [_zero(q)] * r
    for i in range(1, k + 1):
        new = [_zero(q)] * (r + 1)
        for j in range(1, min(i, r) + 1):
            new[j] = row[j - 1] + qints[j] * row[j]
        row = new
    return row[r]


def q_difference_table(samples: Sequence[Scalar], q: Scalar) -> tuple[tuple[Scalar, ...], ...]:
    """All iterated forward q-differences of a sample sequence.

    Row r holds Delta_q^r applied at each admissible start index:
    ``table[r][i]`` is Delta_q^r f_i, built from
    Delta_q^r f_i = Delta_q^(r-1) f_{i+1} - q^(r-1) Delta_q^(r-1) f_i.
    """
    _require_positive_q(q)
    rows = [tuple(samples)]
    for r in range(1, len(samples)):
        prev = rows[-1]
        w = q ** (r - 1)
        rows.append(tuple(prev[i + 1] - w * prev[i] for i in range(len(prev) - 1)))
    return tuple(rows)


def q_forward_difference(samples: Sequence[Scalar], i: int, r: int, q: Scalar) -> Scalar:
    """Delta_q^r f_i for the given sample sequence."""
    _require_positive_q(q)
    if r < 0 or i < 0:
        raise ValueError(f"forward difference needs i, r >= 0, got ({i}, {r})")
    if i + r > len(samples) - 1:
        raise ValueError(
            f"not enough samples: Delta^{r} at i={i} needs index {i + r}, "
            f"have 0..{len(samples) - 1}"
        )
    row = tuple(samples)
    for s in range(1, r + 1):
        w = q ** (s - 1)
        row = tuple(row[t + 1] - w * row[t] for t in range(len(row) - 1))
    return row[i]


def monomial_q_difference(k: int, i: int, r: int, n: int, q: Scalar) -> Scalar:
    """Closed form of Delta_q^r f_i when f samples t^k at the nodes [i]_q/[n]_q.

    Equals (1/[n]_q^k) sum_{s=0}^{r} (-1)^s q^(s(s-1)/2) qbinom(r, s)
    [i+r-s]_q^k, valid for r <= k (the closed form is not extrapolated
    beyond that range; use the generic difference for r > k).
    """
    _require_positive_q(q)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    if r < 0 or r > k:
        raise ValueError(f"closed form requires 0 <= r <= k, got r={r}, k={k}")
    if i + r > n:
        raise ValueError(f"need i + r <= n, got {i} + {r} > {n}")
    total = _zero(q)
    for s in range(r + 1):
        term = (
            q ** (s * (s - 1) // 2)
            * q_binomial(r, s, q)
            * q_integer(i + r - s, q) ** k
        )
        total = total - term if s % 2 else total + term
    return total / q_integer(n, q) ** k
