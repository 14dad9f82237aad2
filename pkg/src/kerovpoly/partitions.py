"""Partitions, their combinatorial statistics, and Young-diagram surgery.

A Partition is an immutable tuple of weakly decreasing positive integers; the
empty tuple is the zero partition.  Multiplicity views are computed on demand,
never stored.  Enumeration order is reverse lexicographic ((n) first, (1^n)
last), which downstream code relies on for reproducible tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicity(self, i):
        return sum(1 for p in self if p == i)

    def multiplicities(self):
        """Dict {part value: multiplicity}."""
        out = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self if p >= i) for i in range(1, self[0] + 1))
        )

    def nodes(self):
        """Iterate the cells (i, j) of the diagram, 1-based, row i, column j."""
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains_part(self, r):
        return r in self

    def text(self):
        return "[" + ",".join(str(p) for p in self) + "]"

    @staticmethod
    def from_text(s):
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"bad partition text {s!r}")
        inner = s[1:-1].strip()
        if not inner:
            return Partition()
        return Partition(tuple(int(x) for x in inner.split(",")))

    def __repr__(self):
        return f"Partition({tuple(self)})"


@dataclass(frozen=True)
class PartitionStats:
    """The four standard constants attached to a partition:

    z = prod i^m_i * m_i!        (centralizer order of the cycle type)
    u = l! / prod m_i!           (compositions with the same part multiset)
    v = prod (i-1)^m_i
    w = v * sum_{i>=2} i*m_i/(i-1)
    """

    z: int
    u: int
    v: int
    w: Fraction


def stats(mu: Partition) -> PartitionStats:
    mults = mu.multiplicities()
    z = 1
    denom = 1
    v = 1
    for i, m in mults.items():
        z *= i**m * math.factorial(m)
        denom *= math.factorial(m)
        v *= (i - 1) ** m
    u = math.factorial(len(mu)) // denom
    w = Fraction(0)
    if v:
        w = v * sum(Fraction(i * m, i - 1) for i, m in mults.items() if i >= 2)
    return PartitionStats(z=z, u=u, v=v, w=Fraction(w))


def enumerate_partitions(n, min_part=1, max_part=None):
    """All partitions of n with parts in [min_part, max_part], in reverse
    lexicographic order.  The order is part of the contract: (n) comes first,
    the all-min_part partition (when it exists) last."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if max_part is None:
        max_part = n
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        top = min(cap, remaining)
        for p in range(top, min_part - 1, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, max_part, ())
    return out


def partitions_up_to(n, min_part=1, max_part=None):
    """Partitions of every weight 0..n, weight by weight, rev-lex inside."""
    out = []
    for w in range(n + 1):
        out.extend(enumerate_partitions(w, min_part, max_part))
    return out


def add_node(lam: Partition, i: int) -> Partition:
    """The partition obtained from lam by adding one node on row i
    (1 <= i <= length+1); raises when the result is not a partition."""
    if not 1 <= i <= len(lam) + 1:
        raise ValueError(f"row {i} out of range for {lam}")
    parts = list(lam) + ([1] if i == len(lam) + 1 else [])
    if i <= len(lam):
        parts[i - 1] += 1
    if i > 1 and parts[i - 1] > parts[i - 2]:
        raise ValueError(f"no such partition: adding node at row {i} of {lam}")
    return Partition(parts)


def union_part(mu: Partition, r: int) -> Partition:
    return Partition(tuple(sorted(mu + (r,), reverse=True)))


def remove_part(mu: Partition, r: int) -> Partition:
    if r not in mu:
        raise ValueError(f"no such partition: {mu} has no part {r}")
    parts = list(mu)
    parts.remove(r)
    return Partition(parts)


def down_part(mu: Partition, r: int) -> Partition:
    """Replace one part r by r-1 (dropping it when r = 1)."""
    rest = remove_part(mu, r)
    return union_part(rest, r - 1) if r > 1 else rest


def up_part(mu: Partition, r: int) -> Partition:
    """Replace one part r by r+1."""
    return union_part(remove_part(mu, r), r + 1)


def surgery(mu: Partition, kind: str, r: int) -> Partition:
    ops = {"union": union_part, "remove": remove_part, "down": down_part, "up": up_part}
    if kind not in ops:
        raise ValueError(f"unknown surgery {kind!r}")
    return ops[kind](mu, r)


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same weight assumed)."""
    acc_l = acc_m = 0
    for k in range(max(len(lam), len(mu))):
        acc_l += lam[k] if k < len(lam) else 0
        acc_m += mu[k] if k < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True
