"""Level-one Arthur parameters, their sign apparatus, and spin contributions.

A parameter is a formal sum of factors pi[d] where pi is a self-dual
level-one cuspidal family member and d the SL_2 block size; factor value
sets are matched against the positive half of the infinitesimal character
lam + rho.  Each enumerated parameter carries exact closed-form virtual
motives (via the tensor decomposition of intersection cohomology) and an
independent spectral evaluation path through Satake eigenvalue atoms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    InternalConsistencyError,
    NoClosedFormError,
    UnknownHeckeError,
)
from .forms import frobenius_power_trace
from .motives import (
    ONE,
    ZERO,
    VirtualMotive,
    elliptic_symbol,
    lefschetz,
    sym2_elliptic_symbol,
    siegel_symbol,
)
from .weyl import DominantWeight, infinitesimal_character

HALF = Fraction(1, 2)

# family tags: "1" is the trivial representation of GL_1 (an O_o class with
# no positive eigenvalues); "S" symplectic type; "Oo"/"Oe" orthogonal types.
ODD_FAMILIES = ("1", "Oo")
EVEN_FAMILIES = ("S", "Oe")


@dataclass(frozen=True)
class Factor:
    family: str
    weights: tuple
    d: int

    def __post_init__(self):
        if self.family in ODD_FAMILIES and self.d % 2 == 0:
            raise DomainError(f"orthogonal factor needs odd d: {self}")
        if self.family in EVEN_FAMILIES and self.family == "S" and self.d % 2:
            raise DomainError(f"symplectic factor needs even d: {self}")

    @property
    def gl_rank(self):
        if self.family in ODD_FAMILIES:
            return 2 * len(self.weights) + 1
        return 2 * len(self.weights)

    @property
    def dim(self):
        return self.gl_rank * self.d

    @property
    def is_odd(self):
        return self.dim % 2 == 1

    def values(self):
        """Positive half of the factor's infinitesimal-character multiset."""
        vals = set()
        shifts = [Fraction(self.d - 1, 2) - k for k in range(self.d)]
        for w in self.weights:
            for s in shifts:
                v = w + s
                if v.denominator != 1:
                    raise InternalConsistencyError(f"non-integral value in {self}")
                vals.add(int(v))
        if self.family in ODD_FAMILIES:
            vals.update(range(1, (self.d - 1) // 2 + 1))
        return frozenset(vals)

    def __str__(self):
        if self.family == "1":
            return f"[{self.d}]"
        body = ",".join(str(w) for w in self.weights)
        return f"{self.family}({body})[{self.d}]"


@dataclass(frozen=True)
class ArthurParameter:
    """psi = (odd factor) + (even factors, sorted by top eigenvalue)."""

    n: int
    lam: tuple
    factors: tuple  # factors[0] odd, the rest even

    @property
    def odd_factor(self):
        return self.factors[0]

    @property
    def even_factors(self):
        return self.factors[1:]

    @property
    def r(self):
        return len(self.factors) - 1

    def __str__(self):
        return " + ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class SlotPartition:
    """J[i] = slots (1-indexed, by decreasing eigenvalue) owned by factor i."""

    J: tuple


def _positive_values(n, lam):
    wt = DominantWeight(tuple(lam))
    tau, _ = infinitesimal_character(wt)
    return frozenset(tau)


def validate_parameter(psi):
    """Re-check the defining invariants of an enumerated parameter."""
    if sum(f.dim for f in psi.factors) != 2 * psi.n + 1:
        raise InternalConsistencyError(f"dimension mismatch in {psi}")
    odd = [f for f in psi.factors if f.is_odd]
    if len(odd) != 1 or psi.factors[0] is not odd[0]:
        raise InternalConsistencyError(f"need exactly one leading odd factor in {psi}")
    if len(set(psi.factors)) != len(psi.factors):
        raise InternalConsistencyError(f"repeated factor in {psi}")
    seen = set()
    for f in psi.factors:
        vals = f.values()
        if seen & vals:
            raise InternalConsistencyError(f"repeated eigenvalue in {psi}")
        seen |= vals
    if seen != _positive_values(psi.n, psi.lam):
        raise InternalConsistencyError(f"infinitesimal character mismatch in {psi}")
    return True


# -- enumeration -------------------------------------------------------------


def _candidate_factors(vmax, remaining, allow_odd):
    """Factors whose value set contains vmax and fits inside remaining."""
    out = []
    if allow_odd and all(v in remaining for v in range(1, vmax + 1)):
        out.append(Factor("1", (), 2 * vmax + 1))

    def extend_weights(family, d, weights, used):
        out.append(Factor(family, tuple(weights), d))
        last = weights[-1]
        shifts = [Fraction(d - 1, 2) - k for k in range(d)]
        lo_gap = Fraction(d - 1, 2)
        w = last - 1
        while w - lo_gap >= 1:
            block = {int(w + s) for s in shifts}
            if len(block) == d and block <= remaining and not (block & used):
                extend_weights(family, d, weights + [w], used | block)
            w -= 1

    for family in ("S", "Oo", "Oe"):
        if family in ODD_FAMILIES and not allow_odd:
            continue
        d = 2 if family == "S" else 1
        while True:
            w1 = Fraction(vmax) - Fraction(d - 1, 2)
            if w1 - Fraction(d - 1, 2) < 1:
                break
            good_parity = w1.denominator == (2 if family == "S" else 1)
            if good_parity:
                base = set(range(1, (d - 1) // 2 + 1)) if family == "Oo" else set()
                block1 = {int(w1 + Fraction(d - 1, 2) - k) for k in range(d)}
                used = base | block1
                if len(block1) == d and used <= remaining:
                    extend_weights(family, d, [w1], used)
            d += 2
    return out


def _enumerate_shapes(values):
    """All factor multisets consuming the positive value set exactly."""

    def rec(remaining, odd_used):
        if not remaining:
            if odd_used:
                yield ()
            else:
                yield (Factor("1", (), 1),)
            return
        vmax = max(remaining)
        for f in _candidate_factors(vmax, remaining, allow_odd=not odd_used):
            vals = f.values()
            if not vals <= remaining:
                continue
            for rest in rec(remaining - vals, odd_used or f.is_odd):
                yield (f,) + rest

    return rec(frozenset(values), False)


def _canonical(n, lam, factors):
    odd = [f for f in factors if f.is_odd]
    even = [f for f in factors if not f.is_odd]
    even.sort(key=lambda f: -max(f.values()))
    return ArthurParameter(n=n, lam=tuple(lam), factors=tuple(odd + even))


def factor_count(factor, table):
    if factor.family == "1":
        return 1
    return table.resolve_count(factor.family, factor.weights)


def is_general_type(psi):
    """The full-size tempered family O_o(lam+rho)[1] at genus >= 2."""
    return (
        psi.n >= 2
        and len(psi.factors) == 1
        and psi.factors[0].family == "Oo"
        and psi.factors[0].d == 1
        and len(psi.factors[0].weights) == psi.n
    )


@dataclass(frozen=True)
class Enumeration:
    parameters: tuple  # explicit parameters, every factor count resolved > 0
    general_key: tuple  # (family, weights) of the full-size tempered family, or ()
    general_count: object  # int when resolved, None when unknown
    missing: tuple  # shape keys blocked by unknown non-general counts


def enumerate_parameters(n, lam, table):
    """Enumerate parameters with infinitesimal character lam + rho.

    Explicit parameters have every factor count resolved positive.  The
    full-size tempered family is reported separately (it is bundled into
    the Siegel bracket downstream); any other unknown count is reported in
    ``missing`` as the blocked parameter shape.
    """
    lam = tuple(lam)
    if len(lam) != n:
        raise DomainError("weight length must equal the genus")
    if sum(lam) % 2:
        return Enumeration((), (), 0, ())
    explicit = []
    general_key = ()
    general_count = 0
    missing = []
    for factors in _enumerate_shapes(_positive_values(n, lam)):
        psi = _canonical(n, lam, factors)
        if is_general_type(psi):
            f = psi.factors[0]
            general_key = (f.family, f.weights)
            general_count = table.resolve_count(f.family, f.weights)
            continue
        counts = [factor_count(f, table) for f in psi.factors]
        if any(c == 0 for c in counts):
            continue
        if any(c is None for c in counts):
            missing.append(tuple(str(f) for f in psi.factors))
            continue
        validate_parameter(psi)
        explicit.append(psi)
    explicit.sort(key=lambda p: tuple(str(f) for f in p.factors))
    return Enumeration(tuple(explicit), general_key, general_count, tuple(sorted(missing)))


def multiplicity(psi, table):
    out = 1
    for f in psi.factors:
        out *= factor_count(f, table)
    return out


# -- sign apparatus -----------------------------------------------------------


def slot_partition(psi):
    values = sorted(_positive_values(psi.n, psi.lam), reverse=True)
    owner = {}
    for idx, f in enumerate(psi.factors):
        for v in f.values():
            owner[v] = idx
    J = [[] for _ in psi.factors]
    for slot, v in enumerate(values, start=1):
        J[owner[v]].append(slot)
    return SlotPartition(tuple(tuple(j) for j in J))


def epsilon_pair(pi_o, pi_s):
    """Archimedean epsilon sign for an orthogonal x symplectic cuspidal pair.

    The even-orthogonal rule contributes (-1) per pair of weights with
    w_a > w'_b; an odd-dimensional pi_o adds the correction
    prod_b (-1)^(w'_b + 1/2).
    """
    fam_o, weights_o = pi_o
    fam_s, weights_s = pi_s
    if fam_o not in ODD_FAMILIES + ("Oe",) or fam_s != "S":
        raise DomainError(f"epsilon_pair needs an orthogonal and a symplectic class, got {fam_o}, {fam_s}")
    exponent = sum(1 for wa in weights_o for wb in weights_s if wa > wb)
    if fam_o in ODD_FAMILIES:
        corr = sum(wb + HALF for wb in weights_s)
        if Fraction(corr).denominator != 1:
            raise InternalConsistencyError("non-integral epsilon correction")
        exponent += int(corr)
    return -1 if exponent % 2 else 1


def epsilon_psi(psi, i):
    """epsilon_psi(s_i) over pairs of opposite block parity, i >= 1."""
    if not 1 <= i <= psi.r:
        raise DomainError(f"even-factor index out of range: {i}")
    fi = psi.factors[i]
    out = 1
    for j, fj in enumerate(psi.factors):
        if j == i or (fj.d - fi.d) % 2 == 0:
            continue
        orth, symp = (fi, fj) if fi.family in ODD_FAMILIES + ("Oe",) else (fj, fi)
        eps = epsilon_pair((orth.family, orth.weights), (symp.family, symp.weights))
        if min(fi.d, fj.d) % 2:
            out *= eps
    return out


def u_sign(psi, i):
    """u_i(psi) = epsilon_psi(s_i) * (-1)^(N_i), N_i = #even slots owned by factor i."""
    if not 1 <= i <= psi.r:
        raise DomainError(f"even-factor index out of range: {i}")
    J = slot_partition(psi).J[i]
    n_i = sum(1 for slot in J if slot % 2 == 0)
    return epsilon_psi(psi, i) * (-1 if n_i % 2 else 1)


def u_vector(psi):
    return tuple(u_sign(psi, i) for i in range(1, psi.r + 1))


def global_sign(psi):
    d0 = psi.odd_factor.dim
    exponent = psi.n * (psi.n + 1) // 2 + (d0 * d0 - 1) // 8
    s = -1 if exponent % 2 else 1
    for i, u in enumerate(u_vector(psi), start=1):
        if (psi.factors[i].d - 1) % 2:
            s *= u
    return s


def siegel_contributes(psi, lam=None):
    """Membership in the Siegel cusp bracket: tempered odd part, all u_i = +1."""
    if psi.odd_factor.d != 1:
        return False
    return all(u == 1 for u in u_vector(psi))


# -- closed-form spin motives --------------------------------------------------


def _block_motive(d):
    """spin of a [2d+1] block in arithmetic normalization: prod (1 + L^i)."""
    out = ONE
    for i in range(1, (d - 1) // 2 + 1):
        out = out * (ONE + lefschetz(i))
    return out


def _elliptic_weight(w):
    k = 2 * w + 1
    if Fraction(k).denominator != 1:
        raise InternalConsistencyError(f"bad symplectic weight {w}")
    return int(k)


def _odd_factor_motive(factor, table):
    """(family-aggregated arithmetic motive, tate offset) for the odd factor."""
    if factor.family == "1":
        return _block_motive(factor.d), 0
    if factor.family == "Oo" and len(factor.weights) == 1 and factor.d == 1:
        k = int(factor.weights[0]) + 1
        return elliptic_symbol(k), (k - 2) // 2
    raise NoClosedFormError(factor)


def _even_factor_motive(factor, sgn, table):
    """(family-aggregated arithmetic motive, tate offset) for one half-spin."""
    if factor.family == "S" and len(factor.weights) == 1 and factor.d == 2:
        k = _elliptic_weight(factor.weights[0])
        if sgn > 0:
            return elliptic_symbol(k), k // 2 - 1
        cnt = table.resolve_count("S", factor.weights)
        return cnt * (ONE + lefschetz(1)), 0
    if factor.family == "S" and len(factor.weights) == 1 and factor.d == 4:
        k = _elliptic_weight(factor.weights[0])
        cnt = table.resolve_count("S", factor.weights)
        if sgn > 0:
            tail = sum((lefschetz(k - 2 + i) for i in range(-1, 4)), ZERO)
            return sym2_elliptic_symbol(k) + cnt * tail, k - 2
        tail = sum((lefschetz(i) for i in range(4)), ZERO)
        return elliptic_symbol(k) * tail, k // 2
    if factor.family == "Oe" and len(factor.weights) == 2 and factor.d == 1:
        w1, w2 = factor.weights
        k1 = int((w1 + w2 + 1) // 2)
        k2 = int((w1 - w2 + 1) // 2)
        if sgn > 0:
            cnt2 = table.resolve_count("S", (Fraction(2 * k2 - 1, 2),))
            return cnt2 * elliptic_symbol(2 * k1), k1 - 1
        cnt1 = table.resolve_count("S", (Fraction(2 * k1 - 1, 2),))
        return cnt1 * elliptic_symbol(2 * k2), k2 - 1
    raise NoClosedFormError(factor)


def _normalization(psi):
    """n(n+1)/4 - g0(g0+1)/4 - sum(rank_i d_i / 8) as an exact rational."""
    g0 = (psi.odd_factor.dim - 1) // 2
    out = Fraction(psi.n * (psi.n + 1), 4) - Fraction(g0 * (g0 + 1), 4)
    for f in psi.even_factors:
        out -= Fraction(f.dim, 8)
    return out


def _tate_exponent(psi, offsets):
    e = Fraction(sum(psi.lam), 2) + _normalization(psi) - sum(offsets)
    if e.denominator != 1:
        raise InternalConsistencyError(f"non-integral Tate exponent for {psi}")
    return int(e)


def spin_contribution(psi, table):
    """This parameter's additive contribution to e_IH(n, lam) at m = 0."""
    motives = []
    offsets = []
    mot, off = _odd_factor_motive(psi.odd_factor, table)
    motives.append(mot)
    offsets.append(off)
    for f, u in zip(psi.even_factors, u_vector(psi)):
        mot, off = _even_factor_motive(f, u, table)
        motives.append(mot)
        offsets.append(off)
    out = lefschetz(_tate_exponent(psi, offsets)) * global_sign(psi)
    for mot in motives:
        out = out * mot
    return out


def siegel_spin_sum(psi, table):
    """This parameter's contribution to the Siegel bracket S[k(lam)]:
    the 2^r-fold sum over half-spin sign vectors, arithmetically normalized."""
    if not siegel_contributes(psi):
        raise DomainError(f"{psi} does not contribute to the Siegel bracket")
    base = Fraction(sum(psi.lam), 2) + _normalization(psi)
    mot0, off0 = _odd_factor_motive(psi.odd_factor, table)
    out = mot0 * lefschetz(0)
    shift = base - off0
    for f in psi.even_factors:
        plus, off_p = _even_factor_motive(f, +1, table)
        minus, off_m = _even_factor_motive(f, -1, table)
        # fold each half-spin's offset into its own term before summing
        m1 = max(off_p, off_m)
        out = out * (plus.tate_twist(m1 - off_p) + minus.tate_twist(m1 - off_m))
        shift -= m1
    if Fraction(shift).denominator != 1:
        raise InternalConsistencyError(f"non-integral Siegel twist for {psi}")
    return out.tate_twist(int(shift))


# -- spectral evaluation (independent path) -----------------------------------


@dataclass(frozen=True)
class _Atom:
    """Monomial (prod_j alpha_j^exps[j]) * p^(phalf/2) over elliptic roots."""

    exps: tuple
    phalf: Fraction


def _atom_mul(a, b):
    return _Atom(tuple(x + y for x, y in zip(a.exps, b.exps)), a.phalf + b.phalf)


def _atom_inv(a):
    return _Atom(tuple(-x for x in a.exps), -a.phalf)


def _factor_atoms(factor, nconst):
    """(z-list, s, constituent elliptic weights) for the block cocharacters."""
    mono = lambda exps, ph: _Atom(tuple(exps), Fraction(ph))
    if factor.family == "1":
        g = (factor.d - 1) // 2
        z = [mono([0] * nconst, 2 * (g + 1 - i)) for i in range(1, g + 1)]
        s = mono([0] * nconst, Fraction(g * (g + 1), 2))
        return z, s, []
    if factor.family == "Oo" and len(factor.weights) == 1 and factor.d == 1:
        k = int(factor.weights[0]) + 1
        t1 = mono([1] + [0] * (nconst - 1), -(k - 1))
        return [_atom_mul(t1, t1)], t1, [k]
    if factor.family == "S" and len(factor.weights) == 1 and factor.d in (2, 4):
        k = _elliptic_weight(factor.weights[0])
        t1 = mono([1] + [0] * (nconst - 1), -(k - 1))
        t = mono([0] * nconst, 1)
        if factor.d == 2:
            z = [_atom_mul(t1, t), _atom_mul(t1, _atom_inv(t))]
            return z, t1, [k]
        powers = [3, 1, -1, -3]
        z = [_atom_mul(t1, _Atom(tuple([0] * nconst), Fraction(j))) for j in powers]
        return z, _atom_mul(t1, t1), [k]
    if factor.family == "Oe" and len(factor.weights) == 2 and factor.d == 1:
        w1, w2 = factor.weights
        k1 = int((w1 + w2 + 1) // 2)
        k2 = int((w1 - w2 + 1) // 2)
        t1 = mono([1, 0] + [0] * (nconst - 2), -(2 * k1 - 1))
        t2 = mono([0, 1] + [0] * (nconst - 2), -(2 * k2 - 1))
        z = [_atom_mul(t1, t2), _atom_mul(t1, _atom_inv(t2))]
        return z, t1, [2 * k1, 2 * k2]
    raise NoClosedFormError(factor)


def _halfspin_atoms(z, s, parity):
    """s * prod_{i in I} z_i^{-1} over subsets I; parity None means all subsets."""
    out = []
    for rset in range(len(z) + 1):
        if parity is not None and rset % 2 != parity:
            continue
        for idx in itertools.combinations(range(len(z)), rset):
            a = s
            for i in idx:
                a = _atom_mul(a, _atom_inv(z[i]))
            out.append(a)
    return out


def _orbit_sum(atoms, weights, aps, p, m):
    """Exact sum of m-th powers over a conjugation-symmetric atom multiset."""
    remaining = list(atoms)
    total = Fraction(0)
    while remaining:
        a = remaining.pop()
        # normalize to the all-nonnegative-exponent orbit representative;
        # the conjugation on constituent j is exps_j -> -exps_j with
        # phalf -> phalf + 2 * exps_j * (K_j - 1)   (beta = p^(K-1)/alpha)
        rep_exps = list(a.exps)
        rep_ph = a.phalf
        for j, c in enumerate(rep_exps):
            if c < 0:
                rep_exps[j] = -c
                rep_ph += c * (weights[j] - 1) * 2
        live = [j for j, c in enumerate(rep_exps) if c]
        expected = []
        for flips in itertools.product((0, 1), repeat=len(live)):
            exps = list(rep_exps)
            ph = rep_ph
            for j, fl in zip(live, flips):
                if fl:
                    ph += exps[j] * (weights[j] - 1) * 2
                    exps[j] = -exps[j]
            expected.append(_Atom(tuple(exps), ph))
        # remove the orbit from the pool (a itself already popped)
        skipped_self = False
        for member in expected:
            if member == a and not skipped_self:
                skipped_self = True
                continue
            try:
                remaining.remove(member)
            except ValueError:
                raise InternalConsistencyError("atom multiset is not conjugation-symmetric")
        # the product p^(ph m/2) prod_j (alpha_j^(c_j m) + beta_j^(c_j m))
        # expands to exactly the orbit's 2^#live eigenvalue powers
        val = Fraction(p) ** Fraction(rep_ph * m, 2)
        for j in live:
            val *= frobenius_power_trace(weights[j], aps[j], p, rep_exps[j] * m)
        total += val
    return total


def _factor_trace(factor, sgn, p, m, table):
    """Family-aggregated spin trace of one factor at Frob_p^m (sigma level)."""
    nconst = {"1": 0, "Oo": 1, "S": 1, "Oe": 2}[factor.family]
    z, s, weights = _factor_atoms(factor, nconst)
    parity = None if factor.is_odd else (0 if sgn > 0 else 1)
    atoms = _halfspin_atoms(z, s, parity)
    if not weights:
        return sum(Fraction(p) ** Fraction(a.phalf * m, 2) for a in atoms)
    systems = []
    for k in weights:
        data = table.elliptic_ap(k, p)
        if data is None:
            raise UnknownHeckeError(f"weight-{k} family", p)
        systems.append(data)
    total = Fraction(0)
    for aps in itertools.product(*systems):
        total += _orbit_sum(atoms, weights, aps, p, m)
    return total


def spectral_trace(psi, signs, p, m, table):
    """Frobenius trace of the normalized spin tensor, from eigenvalue atoms.

    Evaluates the same object as trace_frobenius(spin closed form) but from
    first principles: block cocharacters give each factor's Satake atoms,
    half-spin weights are subset sums of the prescribed parity, and the
    global normalization is p^(n(n+1)/4 + sum(lam)/2) per Frobenius power.
    The result equals the trace of the unsigned spin_contribution motive.
    """
    if signs is None:
        signs = u_vector(psi)
    if len(signs) != psi.r:
        raise DomainError("sign vector length must match the number of even factors")
    total = _factor_trace(psi.odd_factor, +1, p, m, table)
    for f, sgn in zip(psi.even_factors, signs):
        total *= _factor_trace(f, sgn, p, m, table)
    norm = Fraction(psi.n * (psi.n + 1), 4) + Fraction(sum(psi.lam), 2)
    total *= Fraction(p) ** Fraction(norm * m, 1)
    if total.denominator != 1:
        raise InternalConsistencyError(f"non-integral spectral trace for {psi}")
    return int(total)


# -- Siegel dimensions ---------------------------------------------------------


@dataclass(frozen=True)
class SiegelDimension:
    known_part: int
    missing: tuple  # family keys without a resolved count

    @property
    def resolved(self):
        return not self.missing

    @property
    def value(self):
        if not self.resolved:
            raise DomainError(f"dimension not resolved, missing {self.missing}")
        return self.known_part


def dim_siegel_cusp(n, kweights, table):
    """dim S_k(Sp_2n(Z)) from the parameter count, k_i = lam_i + n + 1."""
    kweights = tuple(kweights)
    if len(kweights) != n or any(k < n + 1 for k in kweights):
        raise DomainError("need n weights with k_n >= n+1")
    lam = tuple(k - (n + 1) for k in kweights)
    if sum(lam) % 2:
        return SiegelDimension(0, ())
    enum = enumerate_parameters(n, lam, table)
    total = 0
    missing = list(enum.missing)
    for psi in enum.parameters:
        if siegel_contributes(psi):
            total += multiplicity(psi, table)
    if enum.general_key:
        if enum.general_count is None:
            missing.append(enum.general_key)
        else:
            total += enum.general_count
    return SiegelDimension(total, tuple(missing))
