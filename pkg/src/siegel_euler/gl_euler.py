"""Trivial-Hecke-character multiplicities in GL_n level-one Euler characteristics.

The multiplicity of the trivial character in e(GL_n, V) is computed from the
Levi-sum formula restricted to the surviving terms: partitions of {1..n}
into singletons and adjacent pairs (the slots whose square-integrable block
degenerates to the trivial-character line), with GL_1 parity filters.  The
closed mod-6 / mod-12 patterns are the test oracle, not the implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError
from .weyl import perm_sign


def f_periodic(m):
    """f(m) = sum_b (-1)^b C(m-b, b), via the recurrence f(m+1) = f(m) - f(m-1)."""
    if m < 0:
        raise DomainError("m must be >= 0")
    a, b = 1, 1  # f(0), f(1)
    if m == 0:
        return a
    for _ in range(m - 1):
        a, b = b, b - a
    return b


@dataclass(frozen=True)
class GLEulerQuery:
    n: int
    twist: str = "plain"  # "plain" (V_0) or "det-sign" (lam = (1,...,1))

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if self.twist not in ("plain", "det-sign"):
            raise DomainError(f"unknown twist {self.twist!r}")
        if self.twist == "det-sign" and self.n % 2:
            raise DomainError("det-sign is only defined for even n")


def _adjacent_pair_sigmas(n, a, b):
    """Permutations in S(a,b) satisfying sigma^{-1}(a+2i) = sigma^{-1}(a+2i-1)+1.

    These correspond to partitions of {1..n} into a singletons and b
    adjacent pairs {j, j+1}; yields (sigma images, singleton positions).
    """

    def rec(pos, pairs):
        if pos > n:
            if len(pairs) == b:
                yield tuple(pairs)
            return
        if len(pairs) < b and pos + 1 <= n:
            yield from rec(pos + 2, pairs + [(pos, pos + 1)])
        yield from rec(pos + 1, pairs)

    for pairs in rec(1, []):
        paired = {x for pr in pairs for x in pr}
        singles = [x for x in range(1, n + 1) if x not in paired]
        q = singles + [x for pr in pairs for x in pr]  # q[j] = sigma^{-1}(j+1)
        images = [0] * n
        for j, p in enumerate(q, start=1):
            images[p - 1] = j
        yield tuple(images), tuple(singles)


def trivial_multiplicity(query):
    """Multiplicity of the trivial Hecke character, from the restricted Levi sum."""
    n = query.n
    lam = tuple([1] * n if query.twist == "det-sign" else [0] * n)
    total = 0
    for b in range(n // 2 + 1):
        a = n - 2 * b
        outer = -1 if (a * (a - 1) // 2) % 2 else 1
        for images, singles in _adjacent_pair_sigmas(n, a, b):
            # GL_1 parity filter on (sigma . lam)_i + a + 1 for each singleton slot
            ok = True
            for i in range(1, a + 1):
                src = singles[i - 1]  # sigma^{-1}(i)
                entry = lam[src - 1] - src + i
                if (entry + a + 1) % 2:
                    ok = False
                    break
            if ok:
                total += outer * perm_sign(images)
    return total


def surviving_sigma_count(n, a, b):
    """Number of adjacency-restricted sigmas; equals C(n-b, b) when a+2b = n."""
    if a + 2 * b != n:
        raise DomainError("need a + 2b = n")
    return sum(1 for _ in _adjacent_pair_sigmas(n, a, b))


def binomial_pair_count(n, b):
    return comb(n - b, b)
