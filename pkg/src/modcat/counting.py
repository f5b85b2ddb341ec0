"""Closed formulas and generating functions for the counting sequences.

Naming follows the objects counted:

* ``c_modular(k, n)``: number of k-equivalence classes of binary trees with
  ``n`` internal nodes (modular Catalan number).
* ``m_general(k, n)``: binary trees with ``n`` internal nodes avoiding
  ``comb(k + 1)`` (generalized Motzkin number).
* ``d_intersections(k, n)``: axis contacts summed over the Dyck paths of
  length ``2n`` avoiding ``D U^k``.

Most quantities come with two independent backends: a positive sum over
partitions in a box (``*_msf``) and an alternating binomial sum (``*_alt``).
Everything is exact integer arithmetic; every division is checked to leave
no remainder.
"""

from __future__ import annotations

from collections.abc import Container, Iterator, Sequence
from math import comb, factorial

from .series import TruncatedSeries

__all__ = [
    "binomial",
    "multinomial",
    "catalan",
    "narayana",
    "kreweras",
    "c_modular_msf",
    "c_modular_alt",
    "c_modular",
    "m_general_msf",
    "m_general_alt",
    "m_general",
    "count_degree_constrained",
    "series_m",
    "series_c",
    "series_d",
    "ck_equation_residual",
    "d_intersections",
    "largest_class_size_formula",
    "m_refined",
    "c_refined",
    "refined_degree_constrained",
    "c3_central",
    "c_boundary",
    "m_boundary",
    "boundary_identities",
]


def binomial(a: int, b: int) -> int:
    """``a choose b``, taken to be 0 unless ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def multinomial(total: int, parts: Sequence[int]) -> int:
    if sum(parts) != total or any(p < 0 for p in parts):
        return 0
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"{numerator} is not divisible by {denominator}")
    return q


def catalan(n: int) -> int:
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, r: int) -> int:
    """Plane trees with ``n + 1`` nodes of which ``r`` are internal."""
    if n == 0:
        return 1 if r == 0 else 0
    if not 1 <= r <= n:
        return 0
    return _exact_div(comb(n, r) * comb(n, r - 1), n)


def kreweras(multiplicities: Sequence[int]) -> int:
    """Plane trees having ``multiplicities[i]`` nodes of degree ``i``.

    Zero whenever the multiplicities cannot describe a tree.
    """
    n = sum(multiplicities)
    if n < 1 or any(m < 0 for m in multiplicities):
        return 0
    if sum(i * m for i, m in enumerate(multiplicities)) != n - 1:
        return 0
    return _exact_div(multinomial(n, multiplicities), n)


def _multiplicity_vectors(max_part: int, max_length: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Vectors ``(m_1, ..., m_max_part)`` with ``sum m_i <= max_length`` and
    ``sum i*m_i <= max_size``."""
    if max_part <= 0:
        yield ()
        return
    current = [0] * max_part

    def fill(part, length_left, size_left):
        if part == 0:
            yield tuple(current)
            return
        for m in range(min(length_left, size_left // part) + 1):
            current[part - 1] = m
            yield from fill(part - 1, length_left - m, size_left - m * part)
        current[part - 1] = 0

    yield from fill(max_part, max_length, max_size)


def _c_terms(k: int, n: int, internal: int | None = None):
    """Numerators ``(n - |lambda|) * m_lambda(1^n)`` over ``lambda`` in a
    ``(k-1) x n`` box with ``|lambda| < n``."""
    total = 0
    for mults in _multiplicity_vectors(k - 1, n, n - 1):
        length = sum(mults)
        if internal is not None and length != internal:
            continue
        weight = sum(i * m for i, m in enumerate(mults, start=1))
        total += (n - weight) * multinomial(n, (n - length,) + mults)
    return total


def c_modular_msf(k: int, n: int) -> int:
    """Modular Catalan number as a positive sum over partitions in a box."""
    _check_k(k, 1)
    if n == 0:
        return 1
    return _exact_div(_c_terms(k, n), n)


def c_modular_alt(k: int, n: int) -> int:
    """Modular Catalan number as an alternating binomial sum."""
    _check_k(k, 1)
    if n == 0:
        return 1
    total = sum((-1) ** j * comb(n, j) * binomial(2 * n - j * k, n + 1) for j in range((n - 1) // k + 1))
    result = _exact_div(total, n)
    assert result >= 0
    return result


def m_general_msf(k: int, n: int) -> int:
    """Generalized Motzkin number via partitions of ``n`` inside ``k^(n+1)``."""
    _check_k(k, 0)
    total = 0
    for mults in _multiplicity_vectors(k, n + 1, n):
        if sum(i * m for i, m in enumerate(mults, start=1)) != n:
            continue
        total += multinomial(n + 1, (n + 1 - sum(mults),) + mults)
    return _exact_div(total, n + 1)


def m_general_alt(k: int, n: int) -> int:
    """Generalized Motzkin number via the alternating sum (shifted index)."""
    _check_k(k, 0)
    step = k + 1
    total = sum(
        (-1) ** j * comb(n + 1, j) * binomial(2 * n - j * step, n) for j in range(n // step + 1)
    )
    result = _exact_div(total, n + 1)
    assert result >= 0
    return result


def c_modular(k: int, n: int, method: str = "alt") -> int:
    if method == "alt":
        return c_modular_alt(k, n)
    if method == "msf":
        return c_modular_msf(k, n)
    if method == "series":
        return series_c(k, n + 1)[n + 1]
    raise ValueError(f"unknown method {method!r}")


def m_general(k: int, n: int, method: str = "alt") -> int:
    if method == "alt":
        return m_general_alt(k, n)
    if method == "msf":
        return m_general_msf(k, n)
    if method == "series":
        return series_m(k, n + 1)[n + 1]
    raise ValueError(f"unknown method {method!r}")


def _check_k(k, least):
    if k < least:
        raise ValueError(f"k must be >= {least}")


def _degree_polynomial(allowed: Container[int], order: int, skip_zero: bool = False) -> TruncatedSeries:
    return TruncatedSeries(
        (1 if (i in allowed and not (skip_zero and i == 0)) else 0 for i in range(order + 1)), order
    )


def count_degree_constrained(allowed: Container[int], root_degree: int, n: int) -> int:
    """Plane trees with ``n + 1`` nodes, root degree ``root_degree`` and every
    other degree in ``allowed``.

    ``allowed`` is only queried for ``0..n``, so ``range`` objects or any
    container with ``__contains__`` serve for infinite sets.
    """
    if n < 1 or root_degree < 1:
        raise ValueError("n and root_degree must be >= 1")
    if root_degree > n:
        return 0
    target = n - root_degree
    power = _degree_polynomial(allowed, target) ** n
    return _exact_div(root_degree * power[target], n)


def series_m(k: int, order: int) -> TruncatedSeries:
    """``M(z) = z (1 + M + ... + M^k)``; coefficient of ``z^(n+1)`` is ``m_general(k, n)``."""
    _check_k(k, 0)
    z = TruncatedSeries.z(order)
    one = TruncatedSeries.constant(1, order)
    current = z
    for _ in range(order):
        poly = one
        for _ in range(k):
            poly = one + current * poly
        nxt = z * poly
        if nxt == current:
            break
        current = nxt
    return current


def series_c(k: int, order: int) -> TruncatedSeries:
    """``C(z) = z / (1 - M_{k-1}(z))``; coefficient of ``z^(n+1)`` is ``c_modular(k, n)``."""
    _check_k(k, 1)
    m = series_m(k - 1, order)
    return TruncatedSeries.z(order) * (1 - m).inverse()


def series_d(k: int, order: int) -> TruncatedSeries:
    """``D(z) = z / (1 - M_{k-1}(z))^2``; coefficient of ``z^(n+1)`` is ``d_intersections(k, n)``."""
    _check_k(k, 1)
    m = series_m(k - 1, order)
    return TruncatedSeries.z(order) * ((1 - m) ** 2).inverse()


def ck_equation_residual(c: TruncatedSeries, k: int) -> TruncatedSeries:
    """Left side of the algebraic equation satisfied by ``series_c(k)``.

    For ``k = 1`` the equation is multiplied through by ``C`` to avoid the
    negative power.
    """
    z = TruncatedSeries.z(c.order)
    if k == 1:
        return (c - z) * c - c * c + c - z
    return (c - z) ** k - c**k + c ** (k - 1) - z * c ** (k - 2)


def d_intersections(k: int, n: int) -> int:
    """Total axis contacts over all Dyck paths of length ``2n`` avoiding ``D U^k``."""
    _check_k(k, 1)
    if n == 0:
        return 1
    total = sum(
        (-1) ** j * 2 * comb(n, j) * binomial(2 * n - j * k + 1, n + 2) for j in range((n - 1) // k + 1)
    )
    return _exact_div(total, n)


def largest_class_size_formula(n: int, k: int) -> int:
    _check_k(k, 1)
    if n == 0:
        return 1
    total = sum((n - j * k) * binomial(n + j - 1, j) for j in range(n // k + 1))
    return _exact_div(total, n)


def m_refined(k: int, n: int, r: int, method: str = "alt") -> int:
    """Plane trees with ``n + 1`` nodes, ``r`` of them internal, all degrees ``<= k``."""
    _check_k(k, 1)
    if n == 0:
        return 1 if r == 0 else 0
    if not 1 <= r <= n:
        return 0
    if method == "msf":
        total = 0
        for mults in _multiplicity_vectors(k, n + 1, n):
            if sum(mults) != r or sum(i * m for i, m in enumerate(mults, start=1)) != n:
                continue
            total += multinomial(n + 1, (n + 1 - r,) + mults)
        return _exact_div(total, n + 1)
    if method == "alt":
        total = sum(
            (-1) ** j * comb(r, j) * binomial(n - j * k - 1, r - 1) for j in range((n - r) // k + 1)
        )
        return _exact_div(comb(n + 1, r) * total, n + 1)
    raise ValueError(f"unknown method {method!r}")


def c_refined(k: int, n: int, r: int, method: str = "alt") -> int:
    """Plane trees with ``n + 1`` nodes, ``r`` internal, every non-root degree ``< k``."""
    _check_k(k, 1)
    if n == 0:
        return 1 if r == 0 else 0
    if not 1 <= r <= n:
        return 0
    if method == "msf":
        # the root is always internal here, so r - 1 internal nodes sit below it
        return _exact_div(_c_terms(k, n, internal=r - 1), n)
    if method == "alt":
        bound = k - 1
        if bound == 0:
            return 1 if r == 1 else 0
        total = sum(
            (-1) ** j * comb(r - 1, j) * binomial(n - j * bound, r) for j in range((n - r) // bound + 1)
        )
        return _exact_div(comb(n, r - 1) * total, n)
    raise ValueError(f"unknown method {method!r}")


def refined_degree_constrained(allowed: Container[int], root_degree: int, n: int, r: int) -> int:
    """Plane trees with ``n + 1`` nodes, root degree ``root_degree``, non-root
    degrees in ``allowed`` or zero, and exactly ``r`` internal non-root nodes.

    The count is read off the bivariate polynomial ``(1 + x P(z))^n`` where
    ``P`` lists the allowed positive degrees.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if root_degree < 0 or not 0 <= r <= n - 1 or root_degree > n:
        return 0
    target = n - root_degree
    poly = _degree_polynomial(allowed, target, skip_zero=True)
    one = TruncatedSeries.constant(1, target)
    zero = TruncatedSeries.constant(0, target)
    # layers[j] is the coefficient of x^j, a series in z
    layers = [one] + [zero] * r
    for _ in range(n):
        layers = [layers[0]] + [layers[j] + poly * layers[j - 1] for j in range(1, r + 1)]
    return _exact_div(root_degree * layers[r][target], n)


def c3_central(n: int) -> int:
    """``sum_i binom(n-1, i) * binom(i, floor(i/2))``; equals ``c_modular(3, n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(comb(n - 1, i) * comb(i, i // 2) for i in range(n))


def c_boundary(k: int, l: int) -> int:
    """``c_modular(k, k + l)`` from the boundary identity; needs ``k >= l >= 1``."""
    if not k >= l >= 1:
        raise ValueError("requires k >= l >= 1")
    return catalan(k + l) - binomial(k + 2 * l, l - 1)


def m_boundary(k: int, l: int) -> int:
    """``m_general(k, k + l)`` from the boundary identity; needs ``k >= l - 1 >= 0``."""
    if not k >= l - 1 >= 0:
        raise ValueError("requires k >= l - 1 >= 0")
    return catalan(k + l) - binomial(k + 2 * l - 1, l - 1)


def boundary_identities(k: int, l: int) -> tuple[int, int]:
    """``(c_modular(k, k+l), m_general(k, k+l))`` via the boundary identities."""
    return c_boundary(k, l), m_boundary(k, l)
