"""Exact rational vertex weights.

Weights live in Q+ and all arithmetic on them is exact; nothing in the value
lattice is ever a float. Missing vertices default to weight 1.
"""

from fractions import Fraction


def as_fraction(value):
    """Exact Fraction from an int, Fraction, or string like '3/4' or '0.25'."""
    f = Fraction(value)
    return f


class WeightMap:
    """Per-vertex nonnegative rational weights over a graph of `n` vertices."""

    __slots__ = ("n", "_w")

    def __init__(self, n, values=None):
        self.n = n
        w = {}
        if values:
            for v, x in dict(values).items():
                if not (0 <= v < n):
                    raise ValueError(f"weighted vertex {v} out of range [0, {n})")
                f = as_fraction(x)
                if f < 0:
                    raise ValueError(f"weight of vertex {v} is negative: {f}")
                w[v] = f
        self._w = w

    def __getitem__(self, v):
        return self._w.get(v, Fraction(1))

    def total(self, vertices):
        """w(S) = sum of the member weights."""
        t = Fraction(0)
        for v in vertices:
            t += self[v]
        return t

    def scaled(self, factor):
        f = as_fraction(factor)
        return WeightMap(self.n, {v: self[v] * f for v in range(self.n)})

    def items(self):
        for v in range(self.n):
            yield v, self[v]

    def __eq__(self, other):
        if not isinstance(other, WeightMap):
            return NotImplemented
        return self.n == other.n and all(self[v] == other[v] for v in range(self.n))

    def __repr__(self):
        return f"WeightMap(n={self.n})"
