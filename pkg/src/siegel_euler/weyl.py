"""Hyperoctahedral Weyl group combinatorics for GSp_2n.

Elements are permutations w of {±1, ..., ±n} with w(-i) = -w(i), stored by
their images on positive indices.  The module provides the exhaustive
enumeration used as a brute-force oracle, the two Kostant-type subsets
W(a,b,n) and W'(a,b,n) driving the Euler-characteristic conversions, the
GL_n analogue, signs, and the dot action w . lam = w(lam + rho) - rho.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalConsistencyError, SizeLimitError

MAX_ENUMERATION_RANK = 8


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation; images[i-1] = w(i) for 1 <= i <= n."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(abs(x) for x in self.images) != list(range(1, n + 1)):
            raise DomainError(f"not a signed permutation: {self.images}")

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def inverse(self):
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            if x > 0:
                inv[x - 1] = i
            else:
                inv[-x - 1] = -i
        return SignedPermutation(tuple(inv))

    def compose(self, other):
        """(self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise DomainError("rank mismatch in composition")
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    @staticmethod
    def identity(n):
        return SignedPermutation(tuple(range(1, n + 1)))


def enumerate_signed_perms(n):
    """All 2^n n! signed permutations, lexicographic by image sequence."""
    if not 1 <= n <= MAX_ENUMERATION_RANK:
        raise SizeLimitError(f"exhaustive enumeration limited to 1 <= n <= {MAX_ENUMERATION_RANK}")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * p for s, p in zip(signs, perm))))
    return tuple(sorted(out, key=lambda w: w.images))


def sign(w):
    """Determinant of w on the reflection representation: (-1)^(inversions + flips)."""
    images = w.images
    absimg = [abs(x) for x in images]
    inv = sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if absimg[i] > absimg[j]
    )
    flips = sum(1 for x in images if x < 0)
    return -1 if (inv + flips) % 2 else 1


def _pair_partitions(items, b):
    """Partitions of a set of b disjoint unordered pairs drawn from items."""
    items = sorted(items)
    if b == 0:
        yield (), tuple(items)
        return
    first = items[0]
    for partner in items[1:]:
        rest = [x for x in items[1:] if x != partner]
        for pairs, leftover in _pair_partitions(rest, b - 1):
            yield ((first, partner),) + pairs, leftover


def weyl_set(kind, a, b, n):
    """The set W(a,b,n) (kind="W") or W'(a,b,n) (kind="W_prime").

    Both consist of signed permutations w with, writing q_j = w^{-1}(j):
    the first a slots are positive (increasing for W, decreasing for W'),
    pair slots satisfy 0 < q_{a+1} < q_{a+3} < ... and |q_{a+2i}| > q_{a+2i-1},
    and the trailing slots are positive increasing.
    """
    if kind not in ("W", "W_prime"):
        raise DomainError(f"unknown kind {kind!r}")
    if a < 0 or b < 0 or a + 2 * b > n:
        raise DomainError(f"need a,b >= 0 and a+2b <= n, got ({a},{b},{n})")
    out = []
    for singles in itertools.combinations(range(1, n + 1), a):
        remaining = [x for x in range(1, n + 1) if x not in singles]
        for pairs, leftover in _pair_partitions(remaining, b):
            pairs = tuple(sorted(pairs))  # ordered by smaller element
            for signs in itertools.product((1, -1), repeat=b):
                q = [0] * n
                ordered_singles = singles if kind == "W" else tuple(reversed(singles))
                for j, pos in enumerate(ordered_singles):
                    q[j] = pos
                for i, ((lo, hi), s) in enumerate(zip(pairs, signs)):
                    q[a + 2 * i] = lo
                    q[a + 2 * i + 1] = s * hi
                for j, pos in enumerate(sorted(leftover)):
                    q[a + 2 * b + j] = pos
                out.append(SignedPermutation(tuple(q)).inverse())
    return tuple(sorted(out, key=lambda w: w.images))


def weyl_set_cardinality(a, b, n):
    import math

    return math.comb(n, a) * math.factorial(n - a) // (
        math.factorial(b) * math.factorial(n - a - 2 * b)
    )


def kostant_gl(a, b):
    """Permutations of {1..a+2b} indexing partitions into a singletons and b pairs.

    sigma is returned in one-line notation (images tuple); the defining
    conditions are sigma^{-1}(1) < ... < sigma^{-1}(a), each pair slot
    increasing, and pair slots ordered by their first members.
    """
    if a < 0 or b < 0 or a + 2 * b < 1:
        raise DomainError(f"need a,b >= 0 and a+2b >= 1, got ({a},{b})")
    h = a + 2 * b
    out = []
    for singles in itertools.combinations(range(1, h + 1), a):
        remaining = [x for x in range(1, h + 1) if x not in singles]
        for pairs, _leftover in _pair_partitions(remaining, b):
            q = list(singles)
            for lo, hi in sorted(pairs):
                q.extend((lo, hi))
            # q[j] = sigma^{-1}(j+1); invert to one-line images
            images = [0] * h
            for j, pos in enumerate(q, start=1):
                images[pos - 1] = j
            out.append(tuple(images))
    return tuple(sorted(out))


def perm_sign(images):
    inv = sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class DominantWeight:
    """GSp_2n highest weight (lam_1 >= ... >= lam_n >= 0; similitude exponent m)."""

    lam: tuple
    m: int = 0

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or (lam and lam[-1] < 0):
            raise DomainError(f"weight not dominant: {lam}")

    @property
    def n(self):
        return len(self.lam)


@dataclass(frozen=True)
class GLWeight:
    """A GL_1^a x GL_2^b weight read off after the lin/her split."""

    entries: tuple


def rho_vector(n):
    """rho = (n, n-1, ..., 1; n(n+1)/4); the similitude part may be half-integral."""
    return tuple(range(n, 0, -1)), Fraction(n * (n + 1), 4)


def infinitesimal_character(wt):
    """tau = lam + rho as (entries, similitude) with exact similitude bookkeeping."""
    rho, rho_m = rho_vector(wt.n)
    return tuple(l + r for l, r in zip(wt.lam, rho)), wt.m + rho_m


def dot_action(w, wt):
    """w . lam = w(lam + rho) - rho; returns (entries, similitude exponent).

    A coordinate flipped by w subtracts its tau-value from the similitude
    channel.  The channel is carried as an exact rational and asserted
    integral on the way out.
    """
    n = wt.n
    if w.n != n:
        raise DomainError("rank mismatch between w and weight")
    tau, tau_m = infinitesimal_character(wt)
    winv = w.inverse()
    new_tau = []
    for j in range(1, n + 1):
        src = winv(j)
        new_tau.append(tau[abs(src) - 1] if src > 0 else -tau[-src - 1])
    new_m = Fraction(tau_m)
    for i in range(1, n + 1):
        if w(i) < 0:
            new_m -= tau[i - 1]
    rho, rho_m = rho_vector(n)
    entries = tuple(t - r for t, r in zip(new_tau, rho))
    m_out = new_m - rho_m
    if m_out.denominator != 1:
        raise InternalConsistencyError(f"non-integral similitude exponent {m_out}")
    return entries, int(m_out)


def split_lin_her(entries, m, a, b):
    """Split a full weight into ((first a+2b entries), (rest; m))."""
    h = a + 2 * b
    if h > len(entries):
        raise DomainError("a+2b exceeds the rank")
    return GLWeight(tuple(entries[:h])), (tuple(entries[h:]), m)
