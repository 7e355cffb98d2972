"""Ground-truth data layer for level-one cuspidal families.

Covers the classical dimension formula for S_k(SL_2(Z)), the q-expansion of
Delta with its Hecke recursions, and the catalog of self-dual level-one
cuspidal families of types S / O_o / O_e keyed by their positive
infinitesimal-character eigenvalues.  Built-in counts are derived from the
elliptic dimension formula (symmetric-square and pair rules); everything
else must be ingested from JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, IngestionError, SizeLimitError

TAU_SERIES_BOUND = 10**4

# Family shapes with top eigenvalue in this range are exhaustively classified
# at level one: no cuspidal family exists there beyond the derived ones
# (the weight-12 elliptic form and its lifts).
CLASSIFIED_TOP_EIGENVALUE = Fraction(7)


def dim_cusp_elliptic(k):
    """dim S_k(SL_2(Z)) for integer k: 0 below weight 12 and in weight 14."""
    if k < 12 or k % 2:
        return 0
    return k // 12 - (1 if k % 12 == 2 else 0)


_sigma1_cache = [0]
_eta24_cache = [1]  # coefficients of prod_m (1-q^m)^24


def _sigma1(n):
    while len(_sigma1_cache) <= n:
        m = len(_sigma1_cache)
        _sigma1_cache.append(sum(d for d in range(1, m + 1) if m % d == 0))
    return _sigma1_cache[n]


def tau_coefficient(n):
    """The n-th coefficient of q prod_{m>=1} (1-q^m)^24 (so tau(1) = 1)."""
    if not 1 <= n <= TAU_SERIES_BOUND:
        raise SizeLimitError(f"tau expansion bounded by {TAU_SERIES_BOUND}")
    # f = prod (1-q^m)^24 satisfies n a_n = -24 sum_{k<=n} sigma_1(k) a_{n-k}.
    while len(_eta24_cache) < n:
        m = len(_eta24_cache)
        acc = 0
        for k in range(1, m + 1):
            acc += _sigma1(k) * _eta24_cache[m - k]
        _eta24_cache.append(-24 * acc // m)
    return _eta24_cache[n - 1]


def frobenius_power_trace(k, a_p, p, m):
    """alpha^m + beta^m for alpha+beta = a_p, alpha*beta = p^(k-1)."""
    if m < 0:
        raise DomainError("m must be >= 0")
    t0, t1 = 2, a_p
    if m == 0:
        return t0
    q = p ** (k - 1)
    for _ in range(m - 1):
        t0, t1 = t1, a_p * t1 - q * t0
    return t1


def _as_weight(x):
    w = Fraction(x)
    if w <= 0 or w.denominator not in (1, 2):
        raise DomainError(f"weights must be positive with denominator <= 2: {x}")
    return w


def normalize_weights(family, weights):
    ws = tuple(_as_weight(x) for x in weights)
    if any(ws[i] <= ws[i + 1] for i in range(len(ws) - 1)):
        raise DomainError(f"weights must be strictly decreasing: {weights}")
    if family == "S":
        if any(w.denominator != 2 for w in ws):
            raise DomainError(f"S-family weights must be half-odd: {weights}")
    elif family in ("Oo", "Oe"):
        if any(w.denominator != 1 for w in ws):
            raise DomainError(f"{family}-family weights must be integers: {weights}")
    else:
        raise DomainError(f"unknown family type {family!r}")
    return ws


def family_gl_rank(family, weights):
    if family == "S" or family == "Oe":
        return 2 * len(weights)
    return 2 * len(weights) + 1


@dataclass(frozen=True)
class CuspidalClass:
    """One level-one self-dual cuspidal family member."""

    family: str
    weights: tuple
    label: str
    provenance: str = "builtin-derived"
    hecke: dict = field(default_factory=dict, compare=False)

    @property
    def gl_rank(self):
        return family_gl_rank(self.family, self.weights)


class FormsTable:
    """Catalog of cuspidal families; built-in derivations plus JSON overlays.

    Count resolution returns an int when known and None for "unknown", a
    first-class state distinct from 0.  Instances are immutable after
    construction and own the memo caches of the Euler-characteristic layer.
    """

    def __init__(self, max_weight=25):
        if max_weight > 25:
            raise DomainError("built-in derivation rules are complete only up to weight 25")
        self.max_weight = max_weight
        self._overrides = {}
        self._members = {}
        self._caches = {}
        delta = CuspidalClass(
            family="S",
            weights=(Fraction(11, 2),),
            label="Delta11",
            hecke={p: tau_coefficient(p) for p in _primes_upto(97)},
        )
        self._members[("S", delta.weights)] = (delta,)

    # -- count resolution ------------------------------------------------

    def resolve_count(self, family, weights):
        """Known count of the family, or None when the table has no answer."""
        weights = normalize_weights(family, weights)
        key = (family, weights)
        if key in self._overrides:
            return self._overrides[key]
        if weights and weights[0] > self.max_weight:
            return None
        if family == "S" and len(weights) == 1:
            return dim_cusp_elliptic(int(2 * weights[0] + 1))
        if family == "Oo" and len(weights) == 1:
            # symmetric-square (Gelbart-Jacquet) lifts of elliptic eigenforms
            return dim_cusp_elliptic(int(weights[0]) + 1)
        if family == "Oe" and len(weights) == 2:
            w1, w2 = weights
            if (w1 + w2) % 2 == 0:
                return 0
            k1 = int((w1 + w2 + 1) // 2)
            k2 = int((w1 - w2 + 1) // 2)
            return dim_cusp_elliptic(2 * k1) * dim_cusp_elliptic(2 * k2)
        if family == "Oe" and len(weights) % 2 == 1:
            return 0  # no parameters exist for SO_{2n} with n odd
        if weights and weights[0] <= CLASSIFIED_TOP_EIGENVALUE:
            # classified range: only the derived families above are non-empty
            return 0
        return None

    def _is_derived(self, family, weights):
        if weights and weights[0] > self.max_weight:
            return False
        if family == "S" and len(weights) == 1:
            return True
        if family == "Oo" and len(weights) == 1:
            return True
        if family == "Oe" and (len(weights) == 2 or len(weights) % 2 == 1):
            return True
        return bool(weights) and weights[0] <= CLASSIFIED_TOP_EIGENVALUE

    def members(self, family, weights):
        weights = normalize_weights(family, weights)
        return self._members.get((family, weights), ())

    # -- elliptic Hecke data ----------------------------------------------

    def elliptic_eigensystems(self, k):
        """[(label, {p: a_p})] for the weight-k elliptic family, or None.

        None signals that eigenvalue data is missing for at least one of the
        dim S_k eigenforms.
        """
        count = dim_cusp_elliptic(k)
        if count == 0:
            return []
        mem = self.members("S", (Fraction(2 * k - 1, 2),))
        if len(mem) != count or any(not m.hecke for m in mem):
            return None
        return [(m.label, m.hecke) for m in mem]

    def elliptic_ap(self, k, p):
        systems = self.elliptic_eigensystems(k)
        if systems is None:
            return None
        out = []
        for _label, hecke in systems:
            if p not in hecke:
                return None
            out.append(hecke[p])
        return out

    # -- overlay ----------------------------------------------------------

    def _ingest(self, doc, source):
        if not isinstance(doc, dict) or "families" not in doc:
            raise IngestionError(f"{source}: top-level object must have a 'families' list")
        seen = set()
        for i, fam in enumerate(doc["families"]):
            where = f"{source}: families[{i}]"
            try:
                ftype = fam["type"]
                weights = normalize_weights(ftype, [_parse_weight(w) for w in fam["weights"]])
                count = fam["count"]
            except (KeyError, TypeError, DomainError) as exc:
                raise IngestionError(f"{where}: {exc}") from exc
            if not isinstance(count, int) or count < 0:
                raise IngestionError(f"{where}: count must be a non-negative integer")
            key = (ftype, weights)
            if key in seen:
                raise IngestionError(f"{where}: duplicate family key {key}")
            seen.add(key)
            if self._is_derived(ftype, weights):
                derived = self.resolve_count(ftype, weights)
                if derived != count:
                    raise IngestionError(
                        f"{where}: count {count} conflicts with derived count {derived}"
                    )
            self._overrides[key] = count
            forms = fam.get("forms", [])
            if forms:
                if len(forms) != count:
                    raise IngestionError(f"{where}: {len(forms)} forms but count {count}")
                classes = []
                for form in forms:
                    try:
                        label = form["label"]
                        hecke = {int(p): int(v) for p, v in form.get("hecke", {}).items()}
                    except (KeyError, TypeError, ValueError) as exc:
                        raise IngestionError(f"{where}: bad form entry: {exc}") from exc
                    classes.append(
                        CuspidalClass(ftype, weights, label, provenance="ingested", hecke=hecke)
                    )
                self._members[key] = tuple(classes)


def _parse_weight(x):
    if isinstance(x, str):
        if "/" in x:
            num, den = x.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    raise DomainError(f"weights must be integers or 'p/q' strings, got {x!r}")


def _primes_upto(bound):
    sieve = [True] * (bound + 1)
    sieve[0:2] = [False, False]
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, is_p in enumerate(sieve) if is_p]


def builtin_table(max_weight=25):
    return FormsTable(max_weight=max_weight)


def load_forms_table(path, max_weight=25):
    """Builtin table overlaid with the JSON document at path."""
    table = FormsTable(max_weight=max_weight)
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise IngestionError(f"{path}: not valid JSON: {exc}") from exc
    table._ingest(doc, str(path))
    return table
