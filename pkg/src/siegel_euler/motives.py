"""The commutative ring of virtual motives.

Basis classes are L^k (Lefschetz/Tate, Frobenius trace p^k) tensored with a
multiset of symbolic cusp classes.  The paper-side twist chi_ell^{-k}
corresponds to L^k here, so point-count polynomials come out with positive
exponents.  All arithmetic is exact; Frobenius traces use integer Newton
recursions on Hecke eigenvalues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    InternalConsistencyError,
    UnknownDimensionError,
    UnknownHeckeError,
)
from .forms import dim_cusp_elliptic, frobenius_power_trace

DECORATIONS = ("plain", "sym2")


@dataclass(frozen=True, order=True)
class CuspSymbol:
    """Symbolic cusp class S[k] (genus 1..3) or Sym^2 S[k] (genus 1)."""

    genus: int
    weights: tuple
    decoration: str = "plain"

    def __post_init__(self):
        if self.genus not in (1, 2, 3):
            raise DomainError(f"symbol genus must be 1..3, got {self.genus}")
        if len(self.weights) != self.genus:
            raise DomainError("weight tuple length must equal the genus")
        if self.decoration not in DECORATIONS:
            raise DomainError(f"unknown decoration {self.decoration!r}")
        if self.decoration == "sym2" and self.genus != 1:
            raise DomainError("sym2 decoration only exists in genus 1")
        ws = self.weights
        if self.genus == 1:
            if ws[0] < 2 or ws[0] % 2:
                raise DomainError(f"genus-1 symbol weight must be even >= 2: {ws}")
        else:
            floor = self.genus + 1
            if any(ws[i] < ws[i + 1] for i in range(len(ws) - 1)) or ws[-1] < floor:
                raise DomainError(f"genus-{self.genus} symbol needs k_1>=...>=k_n>={floor}: {ws}")

    def __str__(self):
        body = ",".join(str(w) for w in self.weights)
        return f"Sym2S[{body}]" if self.decoration == "sym2" else f"S[{body}]"


def _canonical_symbols(symbols):
    return tuple(sorted(symbols))


class VirtualMotive:
    """Integer combination of (L^k tensor cusp-symbol multiset) basis classes."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canon = {}
        for (tate, symbols), coeff in (terms or {}).items():
            if coeff:
                key = (int(tate), _canonical_symbols(symbols))
                canon[key] = canon.get(key, 0) + coeff
        self._terms = {k: v for k, v in sorted(canon.items()) if v}

    @property
    def terms(self):
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, VirtualMotive) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            out[key] = out.get(key, 0) + coeff
        return VirtualMotive(out)

    __radd__ = __add__

    def __neg__(self):
        return VirtualMotive({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for (t1, s1), c1 in self._terms.items():
            for (t2, s2), c2 in other._terms.items():
                key = (t1 + t2, _canonical_symbols(s1 + s2))
                out[key] = out.get(key, 0) + c1 * c2
        return VirtualMotive(out)

    __rmul__ = __mul__

    def tate_twist(self, k):
        return VirtualMotive({(t + k, s): c for (t, s), c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (tate, symbols), coeff in self._terms.items():
            factors = []
            if tate:
                factors.append("L" if tate == 1 else f"L^{tate}")
            factors.extend(str(s) for s in symbols)
            sgn = "+" if coeff > 0 else "-"
            if not factors:
                parts.append(f"{sgn} {abs(coeff)}")
            elif abs(coeff) == 1:
                parts.append(f"{sgn} {'*'.join(factors)}")
            else:
                parts.append(f"{sgn} {abs(coeff)}*{'*'.join(factors)}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def _coerce(x):
    if isinstance(x, VirtualMotive):
        return x
    if isinstance(x, int):
        return VirtualMotive({(0, ()): x}) if x else ZERO
    raise DomainError(f"cannot coerce {x!r} to a motive")


ZERO = VirtualMotive()
ONE = VirtualMotive({(0, ()): 1})


def lefschetz(k=1):
    return VirtualMotive({(int(k), ()): 1})


L = lefschetz(1)


def elliptic_symbol(k):
    """The motive S[k] of weight-k level-one elliptic cusp forms.

    S[2] expands to -1 - L by convention; weights with no cusp forms give 0.
    """
    if k == 2:
        return VirtualMotive({(0, ()): -1, (1, ()): -1})
    if k < 2 or k % 2 or dim_cusp_elliptic(k) == 0:
        return ZERO
    return VirtualMotive({(0, (CuspSymbol(1, (k,)),)): 1})


def sym2_elliptic_symbol(k):
    if dim_cusp_elliptic(k) == 0:
        return ZERO
    return VirtualMotive({(0, (CuspSymbol(1, (k,), "sym2"),)): 1})


def siegel_symbol(genus, weights):
    return VirtualMotive({(0, (CuspSymbol(genus, tuple(weights)),)): 1})


# -- rank ------------------------------------------------------------------


def default_dimensions(symbol):
    """Galois dimension of a symbol, or None when not resolvable."""
    if symbol.genus == 1:
        d = dim_cusp_elliptic(symbol.weights[0])
        return 3 * d if symbol.decoration == "sym2" else 2 * d
    return None


def rank(motive, dims=None):
    """Virtual dimension: sum of coeff * prod(dim(symbol))."""
    dims = dims or default_dimensions
    total = 0
    for (_tate, symbols), coeff in motive.terms.items():
        prod = 1
        for sym in symbols:
            d = dims(sym)
            if d is None:
                raise UnknownDimensionError(sym)
            prod *= d
        total += coeff * prod
    return total


# -- Frobenius traces --------------------------------------------------------


def _symbol_trace(symbol, p, m, table):
    if symbol.genus != 1:
        raise UnknownHeckeError(symbol, p)
    k = symbol.weights[0]
    aps = table.elliptic_ap(k, p) if table is not None else None
    if aps is None:
        raise UnknownHeckeError(symbol, p)
    if symbol.decoration == "sym2":
        return sum(
            frobenius_power_trace(k, ap, p, 2 * m) + p ** ((k - 1) * m) for ap in aps
        )
    return sum(frobenius_power_trace(k, ap, p, m) for ap in aps)


def trace_frobenius(motive, p, m, table=None):
    """Trace of Frob_p^m; exact, using Newton recursions on a_p data."""
    if m < 1:
        raise DomainError("m must be a positive integer")
    total = Fraction(0)
    for (tate, symbols), coeff in motive.terms.items():
        val = Fraction(p) ** (tate * m)
        for sym in symbols:
            val *= _symbol_trace(sym, p, m, table)
        total += coeff * val
    if total.denominator != 1:
        raise InternalConsistencyError(f"non-integral Frobenius trace {total}")
    return int(total)


# -- point-count polynomials --------------------------------------------------


@dataclass(frozen=True)
class PointCountResult:
    """Either a polynomial in q (is_tate) or the list of offending symbols."""

    is_tate: bool
    coefficients: dict
    symbols: tuple = ()

    def evaluate(self, q):
        if not self.is_tate:
            raise DomainError("motive is not Tate")
        return sum(c * q**e for e, c in self.coefficients.items())


def as_point_count_polynomial(motive):
    coeffs = {}
    offending = set()
    for (tate, symbols), coeff in motive.terms.items():
        if symbols:
            offending.update(symbols)
        else:
            coeffs[tate] = coeffs.get(tate, 0) + coeff
    if offending:
        return PointCountResult(False, {}, tuple(sorted(offending)))
    return PointCountResult(True, {e: c for e, c in sorted(coeffs.items()) if c})


# -- JSON -----------------------------------------------------------------


def motive_to_json(motive):
    terms = []
    for (tate, symbols), coeff in motive.terms.items():
        terms.append(
            {
                "tate": tate,
                "symbols": [
                    {"genus": s.genus, "weights": list(s.weights), "decoration": s.decoration}
                    for s in symbols
                ],
                "coeff": coeff,
            }
        )
    return {"terms": terms}


def motive_from_json(doc):
    terms = {}
    for entry in doc["terms"]:
        symbols = tuple(
            CuspSymbol(s["genus"], tuple(s["weights"]), s["decoration"])
            for s in entry["symbols"]
        )
        key = (entry["tate"], _canonical_symbols(symbols))
        terms[key] = terms.get(key, 0) + entry["coeff"]
    return VirtualMotive(terms)


def motive_dumps(motive):
    return json.dumps(motive_to_json(motive), sort_keys=True, separators=(",", ":"))
