"""The positive annulus skein as a ring of symmetric functions.

Elements are Scalar-linear combinations of monomials h_lambda in the
closure-of-row-idempotent generators h_1, h_2, ...; a monomial is indexed by
the partition of its factors, and products just merge partitions.  Schur
functions enter through the Jacobi-Trudi determinant, power sums through the
logarithm of the generating series H(t) = 1 + h_1 t + h_2 t^2 + ..., and the
elementary functions through E(-t)H(t) = 1.  All conversions are exact.

The closed-braid elements A_m and the encircling map come straight from the
generating-function identities A(t) = H(st)E(-s^{-1}t) and the eigenvalue
action on the Schur basis.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .coeff import Scalar, s_pow, z
from .series import DEFAULT_ORDER, TruncSeries

Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    t = tuple(int(x) for x in parts)
    if any(x <= 0 for x in t):
        raise ValueError(f"partition parts must be positive: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {t}")
    return t


class SymFunc:
    """Symmetric function over Scalar, stored in the h-monomial basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, Scalar] | None = None):
        self.terms: dict[Partition, Scalar] = {}
        if terms:
            for p, c in terms.items():
                if not c.is_zero():
                    self.terms[check_partition(p)] = c

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def zero() -> SymFunc:
        return SymFunc()

    @staticmethod
    def one() -> SymFunc:
        out = SymFunc()
        out.terms[()] = Scalar.from_int(1)
        return out

    @staticmethod
    def scalar(c: Scalar) -> SymFunc:
        out = SymFunc()
        if not c.is_zero():
            out.terms[()] = c
        return out

    @staticmethod
    def h_monomial(parts, c: Scalar | None = None) -> SymFunc:
        out = SymFunc()
        coeff = Scalar.from_int(1) if c is None else c
        if not coeff.is_zero():
            out.terms[check_partition(tuple(sorted(parts, reverse=True)))] = coeff
        return out

    # -- coefficient-algebra protocol ------------------------------------------------

    def zero_like(self) -> SymFunc:
        return SymFunc()

    def one_like(self) -> SymFunc:
        return SymFunc.one()

    def scale(self, c: Scalar) -> SymFunc:
        out = SymFunc()
        if c.is_zero():
            return out
        for p, k in self.terms.items():
            v = k * c
            if not v.is_zero():
                out.terms[p] = v
        return out

    # -- ring structure ------------------------------------------------------------------

    def __add__(self, other: SymFunc) -> SymFunc:
        out = SymFunc()
        out.terms = dict(self.terms)
        for p, c in other.terms.items():
            if p in out.terms:
                v = out.terms[p] + c
                if v.is_zero():
                    del out.terms[p]
                else:
                    out.terms[p] = v
            else:
                out.terms[p] = c
        return out

    def __neg__(self) -> SymFunc:
        out = SymFunc()
        out.terms = {p: -c for p, c in self.terms.items()}
        return out

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def __mul__(self, other: SymFunc) -> SymFunc:
        out = SymFunc()
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                key = tuple(sorted(p1 + p2, reverse=True))
                prev = out.terms.get(key)
                if prev is None:
                    out.terms[key] = c
                else:
                    v = prev + c
                    if v.is_zero():
                        del out.terms[key]
                    else:
                        out.terms[key] = v
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    # -- grading -----------------------------------------------------------------------------

    def degrees(self) -> set[int]:
        return {sum(p) for p in self.terms}

    def homogeneous_degree(self) -> int | None:
        degs = self.degrees()
        if len(degs) != 1:
            return None
        return degs.pop()

    def graded_part(self, d: int) -> SymFunc:
        out = SymFunc()
        out.terms = {p: c for p, c in self.terms.items() if sum(p) == d}
        return out

    # -- extra structure ----------------------------------------------------------------------

    def mirror(self) -> SymFunc:
        """Mirror map: the h generators are fixed, coefficients mirrored."""
        out = SymFunc()
        for p, c in self.terms.items():
            out.terms[p] = c.mirror()
        return out

    # -- serialization ----------------------------------------------------------------------

    def to_json(self, basis: str = "h") -> dict:
        if basis == "h":
            rows = self.terms
        elif basis == "schur":
            rows = to_schur(self)
        elif basis == "p":
            rows = to_p(self)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return {
            "basis": basis,
            "terms": [
                {"partition": list(p), "coeff": c.to_json()}
                for p, c in sorted(rows.items())
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> SymFunc:
        basis = obj.get("basis", "h")
        rows = {
            check_partition(row["partition"]): Scalar.from_json(row["coeff"])
            for row in obj["terms"]
        }
        if basis == "h":
            return SymFunc(rows)
        if basis == "schur":
            out = SymFunc()
            for p, c in rows.items():
                out = out + schur(p).scale(c)
            return out
        if basis == "p":
            return from_p(rows)
        raise ValueError(f"unknown basis {basis!r}")

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFunc(0)"
        body = " + ".join(f"({c!r})*h{list(p)}" for p, c in sorted(self.terms.items()))
        return f"SymFunc({body})"


def complete(k: int) -> SymFunc:
    """The generator h_k (h_0 = 1)."""
    if k < 0:
        raise ValueError("h_k needs k >= 0")
    return SymFunc.one() if k == 0 else SymFunc.h_monomial((k,))


# ---------------------------------------------------------------------------
# Schur functions and conversions.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _schur_terms(parts: Partition) -> tuple[tuple[Partition, int], ...]:
    """Jacobi-Trudi: det(h_{lambda_i - i + j}) expanded by Leibniz."""
    ell = len(parts)
    if ell == 0:
        return (((), 1),)
    acc: dict[Partition, int] = {}
    for sigma in itertools.permutations(range(ell)):
        exps = []
        ok = True
        for i in range(ell):
            e = parts[i] - (i + 1) + (sigma[i] + 1)
            if e < 0:
                ok = False
                break
            if e > 0:
                exps.append(e)
        if not ok:
            continue
        sign = _parity(sigma)
        key = tuple(sorted(exps, reverse=True))
        acc[key] = acc.get(key, 0) + sign
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def _parity(sigma: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def schur(parts) -> SymFunc:
    """The Schur function s_lambda in the h basis (Jacobi-Trudi)."""
    lam = check_partition(parts)
    out = SymFunc()
    for key, c in _schur_terms(lam):
        out.terms[key] = Scalar.from_int(c)
    return out


def to_schur(f: SymFunc) -> dict[Partition, Scalar]:
    """Schur expansion of f, by lex-triangular elimination per degree."""
    out: dict[Partition, Scalar] = {}
    rest = SymFunc()
    rest.terms = dict(f.terms)
    while rest.terms:
        d = min(sum(p) for p in rest.terms)
        mu = min(p for p in rest.terms if sum(p) == d)
        c = rest.terms[mu]
        out[mu] = c
        rest = rest - schur(mu).scale(c)
    return out


# ---------------------------------------------------------------------------
# Power sums via Newton's relation: sum_m (P_m/m) t^m = log H(t).
# ---------------------------------------------------------------------------


def complete_series(order: int = DEFAULT_ORDER) -> TruncSeries:
    """H(t) = 1 + h_1 t + h_2 t^2 + ... as a series over the annulus ring."""
    return TruncSeries([complete(k) for k in range(order + 1)])


def elementary_series(order: int = DEFAULT_ORDER) -> TruncSeries:
    """E(t) = 1 + e_1 t + e_2 t^2 + ..."""
    return TruncSeries([elementary(k) for k in range(order + 1)])


@lru_cache(maxsize=256)
def power_sum(m: int) -> SymFunc:
    """P_m, read off as m times the t^m coefficient of log H(t)."""
    if m < 1:
        raise ValueError("power sum needs m >= 1")
    logh = complete_series(m).log()
    return logh.coeffs[m].scale(Scalar.from_int(m))


@lru_cache(maxsize=256)
def elementary(k: int) -> SymFunc:
    """e_k, from the recursion sum_{i+j=k} (-1)^i e_i h_j = 0."""
    if k < 0:
        raise ValueError("e_k needs k >= 0")
    if k == 0:
        return SymFunc.one()
    acc = SymFunc()
    for i in range(k):
        term = elementary(i) * complete(k - i)
        acc = acc + term.scale(Scalar.from_int((-1) ** i))
    return acc.scale(Scalar.from_int((-1) ** (k + 1)))


@lru_cache(maxsize=1024)
def _p_monomial(parts: Partition) -> SymFunc:
    out = SymFunc.one()
    for m in parts:
        out = out * power_sum(m)
    return out


def from_p(coeffs: dict[Partition, Scalar]) -> SymFunc:
    """Assemble a symmetric function from its power-sum expansion."""
    out = SymFunc()
    for p, c in coeffs.items():
        out = out + _p_monomial(check_partition(p)).scale(c)
    return out


def to_p(f: SymFunc) -> dict[Partition, Scalar]:
    """Power-sum expansion of f, by lex-triangular elimination.

    The lex-greatest h-monomial of the product p_mu is h_mu with coefficient
    prod(mu_i), so eliminating from the top converges.
    """
    out: dict[Partition, Scalar] = {}
    rest = SymFunc()
    rest.terms = dict(f.terms)
    while rest.terms:
        mu = max(rest.terms)
        c = rest.terms[mu]
        mult = 1
        for part in mu:
            mult *= part
        pc = c * Scalar.from_fraction(1, mult)
        out[mu] = pc
        rest = rest - _p_monomial(mu).scale(pc)
    return out


# ---------------------------------------------------------------------------
# Closed-braid elements and the encircling map.
# ---------------------------------------------------------------------------


def closed_braid_A(m: int) -> SymFunc:
    """A_m: the closure of the m-braid sigma_{m-1}...sigma_1.

    Extracted from A(t) = H(st)E(-s^{-1}t) = 1 + z sum A_m t^m; the division
    by z is exact.
    """
    if m < 1:
        raise ValueError("A_m needs m >= 1")
    acc = SymFunc()
    for i in range(m + 1):
        j = m - i
        c = s_pow(i) * s_pow(-j).int_mul((-1) ** j)
        acc = acc + (complete(i) * elementary(j)).scale(c)
    return acc.scale(z().inv())


def phi_apply(f: SymFunc, n: int) -> SymFunc:
    """The encircling map on the degree-n part: s_lambda -> t_lambda s_lambda."""
    if f.is_zero():
        return f
    if f.homogeneous_degree() != n:
        raise ValueError(f"phi needs a homogeneous element of degree {n}")
    from . import repn
    from .hecke import t_circle

    tc = t_circle(n)
    out = SymFunc()
    for lam, c in to_schur(f).items():
        t_lam = repn.central_scalar(tc, lam)
        out = out + schur(lam).scale(c * t_lam)
    return out
