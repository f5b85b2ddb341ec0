"""Exact truncated power series over the integers."""

from __future__ import annotations

from collections.abc import Iterable


class TruncatedSeries:
    """Integer power series known up to and including ``z**order``.

    Products and powers truncate at the smaller of the two orders, so every
    stored coefficient is exact.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Iterable[int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = list(coefficients)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coefficients = tuple(coeffs)
        self.order = order

    @classmethod
    def z(cls, order: int) -> TruncatedSeries:
        return cls([0, 1], order)

    @classmethod
    def constant(cls, value: int, order: int) -> TruncatedSeries:
        return cls([value], order)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coefficients)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coefficients)}, order={self.order})"

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.coefficients, self.order))

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries((a + b for a, b in zip(self, other)), order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-a for a in self), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries((other * a for a in self), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [0] * (order + 1)
        for i in range(order + 1):
            if a[i]:
                ai = a[i]
                for j in range(order + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant term must be 1 or -1."""
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("only series with constant term +-1 are invertible over the integers")
        out = [c0]
        for i in range(1, self.order + 1):
            acc = sum(self.coefficients[j] * out[i - j] for j in range(1, i + 1))
            out.append(-acc * c0)
        return TruncatedSeries(out, self.order)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coefficients, min(order, self.order))
