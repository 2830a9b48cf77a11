"""Exact arithmetic in the coefficient ring: rational functions in v and s.

The ground ring is Z[v^{±1}, s^{±1}] together with the inverses of the
denominators that show up in idempotent computations (powers of s^k - s^{-k}
and friends).  Rather than track a specific localization we work in the full
fraction field of the Laurent ring: every scalar is a quotient of two integer
Laurent polynomials, kept in a canonical reduced form so that equality is
plain structural equality.

Canonical form of a quotient num/den:

* num and den share no non-unit polynomial factor,
* den is a genuine polynomial (no negative exponents) with no monomial
  factor v or s left in it,
* the lexicographically greatest term of den (by (e_v, e_s)) has positive
  coefficient.

>>> z() * delta() == v_pow(-1) - v_pow(1)
True
>>> quantum_int(2)
Scalar('s + s^-1')
>>> (s_pow(1) * s_pow(-1)).is_one()
True
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

ExpPair = tuple[int, int]  # (e_v, e_s)


class IntLaurent:
    """Integer Laurent polynomial in v and s, as a sparse term map.

    Terms map (e_v, e_s) -> nonzero int.  The zero polynomial has an empty
    map.  Instances are immutable; all arithmetic returns new objects.
    """

    __slots__ = ("terms", "_key")

    def __init__(self, terms: dict[ExpPair, int] | None = None):
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
        self._key: tuple | None = None

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_int(c: int) -> IntLaurent:
        return IntLaurent({(0, 0): c} if c else {})

    @staticmethod
    def monomial(c: int, e_v: int, e_s: int) -> IntLaurent:
        return IntLaurent({(e_v, e_s): c} if c else {})

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def key(self) -> tuple:
        """Sorted term tuple; used for caching and ordering."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: IntLaurent) -> IntLaurent:
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                del out[e]
        res = IntLaurent.__new__(IntLaurent)
        res.terms = out
        res._key = None
        return res

    def __neg__(self) -> IntLaurent:
        res = IntLaurent.__new__(IntLaurent)
        res.terms = {e: -c for e, c in self.terms.items()}
        res._key = None
        return res

    def __sub__(self, other: IntLaurent) -> IntLaurent:
        return self + (-other)

    def __mul__(self, other: IntLaurent) -> IntLaurent:
        if not self.terms or not other.terms:
            return _L_ZERO
        if len(other.terms) == 1:
            ((ev, es), c), = other.terms.items()
            if (ev, es) == (0, 0) and c == 1:
                return self
            res = IntLaurent.__new__(IntLaurent)
            res.terms = {(a + ev, b + es): k * c for (a, b), k in self.terms.items()}
            res._key = None
            return res
        if len(self.terms) == 1:
            return other * self
        out: dict[ExpPair, int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                elif e in out:
                    del out[e]
        res = IntLaurent.__new__(IntLaurent)
        res.terms = out
        res._key = None
        return res

    def int_mul(self, c: int) -> IntLaurent:
        if c == 0:
            return _L_ZERO
        if c == 1:
            return self
        res = IntLaurent.__new__(IntLaurent)
        res.terms = {e: k * c for e, k in self.terms.items()}
        res._key = None
        return res

    def shift(self, e_v: int, e_s: int) -> IntLaurent:
        """Multiply by the monomial v^e_v s^e_s."""
        if e_v == 0 and e_s == 0:
            return self
        res = IntLaurent.__new__(IntLaurent)
        res.terms = {(a + e_v, b + e_s): c for (a, b), c in self.terms.items()}
        res._key = None
        return res

    def __eq__(self, other) -> bool:
        return isinstance(other, IntLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    # -- structure -----------------------------------------------------------

    def min_exponents(self) -> ExpPair:
        evs = [e[0] for e in self.terms]
        ess = [e[1] for e in self.terms]
        return (min(evs), min(ess))

    def lex_leading(self) -> tuple[ExpPair, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def int_content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def uses_v(self) -> bool:
        return any(e[0] for e in self.terms)

    def uses_s(self) -> bool:
        return any(e[1] for e in self.terms)

    def mirror(self) -> IntLaurent:
        """Substitute v -> v^{-1}, s -> s^{-1}."""
        res = IntLaurent.__new__(IntLaurent)
        res.terms = {(-a, -b): c for (a, b), c in self.terms.items()}
        res._key = None
        return res

    def eval_fraction(self, v0: Fraction, s0: Fraction) -> Fraction:
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * v0 ** a * s0 ** b
        return total

    # -- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntLaurent('{_fmt_poly(self)}')"


_L_ZERO = IntLaurent()
_L_ONE = IntLaurent.from_int(1)


def _fmt_poly(p: IntLaurent) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (a, b), c in sorted(p.terms.items(), reverse=True):
        mono = []
        if a:
            mono.append("v" if a == 1 else f"v^{a}")
        if b:
            mono.append("s" if b == 1 else f"s^{b}")
        body = "*".join(mono)
        if not body:
            body = str(abs(c))
        elif abs(c) != 1:
            body = f"{abs(c)}*{body}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Polynomial gcd machinery.
#
# Laurent monomials are units, so gcds are computed on the polynomial parts
# after stripping monomial content.  Univariate gcds use the subresultant
# polynomial remainder sequence over Z; the bivariate case runs the same PRS
# with coefficients in Z[v], recursing for contents.  Nested dense lists:
# a depth-1 poly is a list of ints, a depth-2 poly a list of depth-1 polys.
# ---------------------------------------------------------------------------


def _trim(p: list) -> list:
    while p and _p_is_zero_coeff(p[-1]):
        p.pop()
    return p


def _p_is_zero_coeff(c) -> bool:
    return c == 0 if isinstance(c, int) else not c


def _p_zero(depth: int):
    return []


def _p_one(depth: int):
    return [1] if depth == 1 else [[1]]


def _c_add(a, b):
    if isinstance(a, int):
        return a + b
    return _trim([x + y for x, y in _zip_pad(a, b)])


def _zip_pad(a: list, b: list) -> Iterator[tuple]:
    n = max(len(a), len(b))
    zero = 0 if (a and isinstance(a[0], int)) or (b and isinstance(b[0], int)) else []
    for i in range(n):
        yield (a[i] if i < len(a) else zero, b[i] if i < len(b) else zero)


def _c_neg(a):
    if isinstance(a, int):
        return -a
    return [-x for x in a]


def _c_mul(a, b):
    if isinstance(a, int):
        return a * b
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)

def _c_divexact(a, b):
    """Exact division of coefficients (ints or int-lists)."""
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact coefficient division")
        return q
    return _list_divexact(a, b)


def _list_divexact(a: list[int], b: list[int]) -> list[int]:
    if not a:
        return []
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c == 0:
            continue
        qc, r = divmod(c, b[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[i] = qc
        for j, y in enumerate(b):
            a[i + j] -= qc * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _p_add(a: list, b: list) -> list:
    return _trim([_c_add(x, y) for x, y in _zip_pad(a, b)])


def _p_coeff_mul(p: list, c) -> list:
    return _trim([_c_mul(c, x) for x in p])


def _p_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    is_int = isinstance(a[0], int) if a else isinstance(b[0], int)
    zero = 0 if is_int else []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if _p_is_zero_coeff(x):
            continue
        for j, y in enumerate(b):
            if _p_is_zero_coeff(y):
                continue
            out[i + j] = _c_add(out[i + j], _c_mul(x, y))
    return _trim(out)


def _p_divexact(a: list, b: list) -> list:
    """Exact division of nested polys, main variable last index."""
    if not a:
        return []
    a = [x if isinstance(x, int) else list(x) for x in a]
    n, m = len(a), len(b)
    q: list = [0 if isinstance(a[0], int) else []] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c = a[i + m - 1]
        if _p_is_zero_coeff(c):
            continue
        qc = _c_divexact(c, b[-1])
        q[i] = qc
        for j, y in enumerate(b):
            a[i + j] = _c_add(a[i + j], _c_neg(_c_mul(qc, y)))
    if any(not _p_is_zero_coeff(x) for x in a):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _int_list_gcd(cs: Iterable[int]) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _p_content(p: list, depth: int):
    if depth == 1:
        return _int_list_gcd(p)
    g: list = []
    for c in p:
        g = _gcd_lists(g, c, 1)
        if g == [1]:
            return g
    return g


def _p_primitive(p: list, depth: int) -> tuple:
    if not p:
        return (_p_one(depth - 1) if depth == 2 else 1), p
    cont = _p_content(p, depth)
    if depth == 1:
        if cont == 1:
            return 1, p
        return cont, [c // cont for c in p]
    if cont == [1]:
        return cont, p
    return cont, [_list_divexact(c, cont) for c in p]


def _p_pseudo_rem(a: list, b: list, depth: int) -> list:
    """Pseudo-remainder lc(b)^{deg a - deg b + 1} * a mod b."""
    lb = b[-1]
    r = list(a)
    steps = len(a) - len(b) + 1
    used = 0
    while r and len(r) >= len(b):
        lr = r[-1]
        r = [_c_mul(lb, x) for x in r[:-1]]
        used += 1
        shift = len(r) - (len(b) - 1)
        for j, y in enumerate(b[:-1]):
            r[shift + j] = _c_add(r[shift + j], _c_neg(_c_mul(lr, y)))
        r = _trim(r)
    # degree may drop by more than one per step; pad the lc(b) factor
    for _ in range(steps - used):
        r = [_c_mul(lb, x) for x in r]
    return r


def _c_pow(c, n: int, depth: int):
    out = 1 if depth == 1 else [1]
    for _ in range(n):
        out = _c_mul(out, c)
    return out


def _gcd_lists(a: list, b: list, depth: int) -> list:
    """Gcd of nested dense polys; result primitive-part normalized."""
    if not a:
        return _pos_normal(b, depth)
    if not b:
        return _pos_normal(a, depth)
    ca, pa = _p_primitive(a, depth)
    cb, pb = _p_primitive(b, depth)
    if depth == 1:
        cg: object = math.gcd(ca, cb)
    else:
        cg = _gcd_lists(ca, cb, 1) if not isinstance(ca, int) else math.gcd(ca, cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    # Subresultant PRS on primitive parts.
    g = 1 if depth == 1 else [1]
    h = 1 if depth == 1 else [1]
    while True:
        d = len(pa) - len(pb)
        r = _p_pseudo_rem(pa, pb, depth)
        if not r:
            break
        if len(r) == 1:
            pb = _p_one(depth)
            break
        pa, pb = pb, r
        divisor = _c_mul(g, _c_pow(h, d, depth))
        pb = [_c_divexact(c, divisor) for c in pb]
        g = pa[-1]
        if d == 0:
            pass  # h unchanged
        elif d == 1:
            h = g
        else:
            h = _c_divexact(_c_pow(g, d, depth), _c_pow(h, d - 1, depth))
    _, pg = _p_primitive(pb, depth)
    if depth == 1:
        out = [cg * c for c in pg]
    else:
        out = [_c_mul(cg, c) for c in pg]
    return _pos_normal(out, depth)


def _pos_normal(p: list, depth: int) -> list:
    if not p:
        return p
    lead = p[-1]
    neg = (lead < 0) if isinstance(lead, int) else (lead[-1] < 0)
    if neg:
        return [_c_neg(c) for c in p]
    return list(p)


def _to_lists(p: IntLaurent, main_s: bool) -> list:
    """Genuine polynomial -> nested list [coeff in other var][main exp]."""
    deg_main = max(e[1] if main_s else e[0] for e in p.terms)
    deg_other = max(e[0] if main_s else e[1] for e in p.terms)
    if deg_other == 0:
        out: list = [0] * (deg_main + 1)
        for (a, b), c in p.terms.items():
            out[b if main_s else a] = c
        return out
    out = [[0] * (deg_other + 1) for _ in range(deg_main + 1)]
    for (a, b), c in p.terms.items():
        if main_s:
            out[b][a] = c
        else:
            out[a][b] = c
    return [_trim(row) for row in out]


def _from_lists(p: list, main_s: bool, depth: int) -> IntLaurent:
    terms: dict[ExpPair, int] = {}
    for i, c in enumerate(p):
        if depth == 1:
            if c:
                terms[(0, i) if main_s else (i, 0)] = c
        else:
            for j, cc in enumerate(c):
                if cc:
                    terms[(j, i) if main_s else (i, j)] = cc
    return IntLaurent(terms)


def poly_gcd(f: IntLaurent, g: IntLaurent) -> IntLaurent:
    """Gcd of the polynomial parts of two Laurent polynomials.

    Monomial (unit) factors are ignored.  The result is a genuine polynomial
    with no monomial factor and positive lex-leading coefficient; it is 1
    exactly when f and g are coprime up to units.
    """
    if f.is_zero():
        return canon_poly_part(g)
    if g.is_zero():
        return canon_poly_part(f)
    f0 = _strip_monomial(f)
    g0 = _strip_monomial(g)
    cf = math.gcd(f0.int_content(), g0.int_content())
    if f0.is_monomial() or g0.is_monomial():
        # constant after stripping: only integer content can be shared
        return IntLaurent.from_int(cf)
    fv, fs = f0.uses_v(), f0.uses_s()
    gv, gs = g0.uses_v(), g0.uses_s()
    if (fv, fs) == (True, False) and (gv, gs) == (False, True):
        return IntLaurent.from_int(cf)
    if (fv, fs) == (False, True) and (gv, gs) == (True, False):
        return IntLaurent.from_int(cf)
    if not fv and not gv:
        r = _gcd_lists(_to_lists(f0, True), _to_lists(g0, True), 1)
        return _from_lists(r, True, 1)
    if not fs and not gs:
        r = _gcd_lists(_to_lists(f0, False), _to_lists(g0, False), 1)
        return _from_lists(r, False, 1)
    # at least one genuinely bivariate: main variable s, coefficients in Z[v]
    a = [c if isinstance(c, list) else ([c] if c else []) for c in _to_lists(f0, True)]
    b = [c if isinstance(c, list) else ([c] if c else []) for c in _to_lists(g0, True)]
    r = _gcd_lists(a, b, 2)
    return _from_lists(r, True, 2)


def _strip_monomial(p: IntLaurent) -> IntLaurent:
    mv, ms = p.min_exponents()
    return p.shift(-mv, -ms) if (mv or ms) else p


def canon_poly_part(p: IntLaurent) -> IntLaurent:
    """Strip the monomial factor and sign-normalize; 0 stays 0."""
    if p.is_zero():
        return p
    q = _strip_monomial(p)
    if q.lex_leading()[1] < 0:
        q = -q
    return q


def laurent_divexact(f: IntLaurent, g: IntLaurent) -> IntLaurent:
    """Exact division f/g in the Laurent ring; raises if not exact."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return _L_ZERO
    if g.is_monomial():
        ((a, b), c), = g.terms.items()
        if c in (1, -1):
            return f.shift(-a, -b).int_mul(c)
        out = {}
        for (ev, es), k in f.terms.items():
            q, r = divmod(k, c)
            if r:
                raise ArithmeticError("inexact division")
            out[(ev - a, es - b)] = q
        return IntLaurent(out)
    rem = dict(f.terms)
    (ga, gb), gc = g.lex_leading()
    quot: dict[ExpPair, int] = {}
    guard = len(f.terms) * len(g.terms) + len(f.terms) + len(g.terms) + 1000
    while rem:
        guard -= 1
        if guard < 0:
            raise ArithmeticError("inexact division")
        (fa, fb) = max(rem)
        fc = rem[(fa, fb)]
        q, r = divmod(fc, gc)
        if r:
            raise ArithmeticError("inexact division")
        e = (fa - ga, fb - gb)
        quot[e] = quot.get(e, 0) + q
        for (ta, tb), tc in g.terms.items():
            key = (ta + e[0], tb + e[1])
            nc = rem.get(key, 0) - q * tc
            if nc:
                rem[key] = nc
            else:
                rem.pop(key, None)
    return IntLaurent(quot)


_GCD_CACHE: dict[tuple, IntLaurent] = {}
_GCD_CACHE_MAX = 1 << 16


def _gcd_cached(f: IntLaurent, g: IntLaurent) -> IntLaurent:
    key = (f.key(), g.key())
    hit = _GCD_CACHE.get(key)
    if hit is None:
        hit = poly_gcd(f, g)
        if len(_GCD_CACHE) < _GCD_CACHE_MAX:
            _GCD_CACHE[key] = hit
    return hit


# ---------------------------------------------------------------------------
# Scalars: canonical fractions of Laurent polynomials.
# ---------------------------------------------------------------------------


class Scalar:
    """Element of the fraction field of Z[v^{±1}, s^{±1}], in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntLaurent, den: IntLaurent):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _reduce(num, den)
        self.num = num
        self.den = den

    # Internal: build without reduction when num/den already canonical.
    @staticmethod
    def _raw(num: IntLaurent, den: IntLaurent) -> Scalar:
        obj = Scalar.__new__(Scalar)
        obj.num = num
        obj.den = den
        return obj

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_int(c: int) -> Scalar:
        return Scalar._raw(IntLaurent.from_int(c), _L_ONE)

    @staticmethod
    def from_fraction(p: int, q: int) -> Scalar:
        return Scalar(IntLaurent.from_int(p), IntLaurent.from_int(q))

    @staticmethod
    def monomial(c: int, e_v: int, e_s: int) -> Scalar:
        return Scalar._raw(IntLaurent.monomial(c, e_v, e_s), _L_ONE)

    @staticmethod
    def from_poly(p: IntLaurent) -> Scalar:
        return Scalar._raw(p, _L_ONE)

    # -- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self.num.terms == other.num.terms
            and self.den.terms == other.den.terms
        )

    def __hash__(self) -> int:
        return hash((self.num.key(), self.den.key()))

    # -- field operations --------------------------------------------------------

    def __add__(self, other: Scalar) -> Scalar:
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        b, d = self.den, other.den
        if b.terms == d.terms:
            t = self.num + other.num
            if t.is_zero():
                return ZERO
            if b.is_one():
                return Scalar._raw(t, b)
            g1 = _gcd_cached(t, b)
            if g1.is_one():
                return Scalar._raw(t, b)
            return _normalize(laurent_divexact(t, g1), laurent_divexact(b, g1))
        g0 = _L_ONE if (b.is_one() or d.is_one()) else _gcd_cached(b, d)
        if g0.is_one():
            t = self.num * d + other.num * b
            if t.is_zero():
                return ZERO
            return _normalize_coprime(t, b * d)
        b1 = laurent_divexact(b, g0)
        d1 = laurent_divexact(d, g0)
        t = self.num * d1 + other.num * b1
        if t.is_zero():
            return ZERO
        g1 = _gcd_cached(t, g0)
        if g1.is_one():
            return _normalize_coprime(t, b1 * d)
        return _normalize(
            laurent_divexact(t, g1),
            laurent_divexact(b, g1) * d1,
        )

    def __neg__(self) -> Scalar:
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other: Scalar) -> Scalar:
        return self + (-other)

    def __mul__(self, other: Scalar) -> Scalar:
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        a, b = self.num, self.den
        c, d = other.num, other.den
        if b.is_one() and d.is_one():
            return _normalize(a * c, _L_ONE)
        g1 = _L_ONE if d.is_one() else _gcd_cached(a, d)
        g2 = _L_ONE if b.is_one() else _gcd_cached(c, b)
        if not g1.is_one():
            a = laurent_divexact(a, g1)
            d = laurent_divexact(d, g1)
        if not g2.is_one():
            c = laurent_divexact(c, g2)
            b = laurent_divexact(b, g2)
        return _normalize_coprime(a * c, b * d)

    def inv(self) -> Scalar:
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero scalar")
        return _normalize_coprime(self.den, self.num)

    def __truediv__(self, other: Scalar) -> Scalar:
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return self * other.inv()

    def int_mul(self, c: int) -> Scalar:
        if c == 0 or self.num.is_zero():
            return ZERO
        if c == 1:
            return self
        if self.den.is_one():
            return Scalar._raw(self.num.int_mul(c), self.den)
        return Scalar(self.num.int_mul(c), self.den)

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- coefficient-algebra protocol (shared with HeckeElt and SymFunc) -----------

    def zero_like(self) -> Scalar:
        return ZERO

    def one_like(self) -> Scalar:
        return ONE

    def scale(self, c: Scalar) -> Scalar:
        return self * c

    # -- the extra structure ------------------------------------------------------

    def mirror(self) -> Scalar:
        """Substitute v -> v^{-1}, s -> s^{-1}; an involution."""
        return _normalize(self.num.mirror(), self.den.mirror())

    def eval_rational(self, v0, s0) -> Fraction:
        """Exact value at rational (v0, s0); raises on a pole."""
        v0 = Fraction(v0)
        s0 = Fraction(s0)
        if v0 == 0 or s0 == 0:
            raise ZeroDivisionError("v and s must be nonzero")
        dval = self.den.eval_fraction(v0, s0)
        if dval == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval_fraction(v0, s0) / dval

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": _poly_json(self.num), "den": _poly_json(self.den)}

    @staticmethod
    def from_json(obj: dict) -> Scalar:
        return Scalar(_poly_from_json(obj["num"]), _poly_from_json(obj["den"]))

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"Scalar('{_fmt_poly(self.num)}')"
        return f"Scalar('({_fmt_poly(self.num)}) / ({_fmt_poly(self.den)})')"


def _poly_json(p: IntLaurent) -> list:
    return [[a, b, str(c)] for (a, b), c in sorted(p.terms.items())]


def _poly_from_json(rows: list) -> IntLaurent:
    return IntLaurent({(int(a), int(b)): int(c) for a, b, c in rows})


def _normalize(num: IntLaurent, den: IntLaurent) -> Scalar:
    num, den = _reduce(num, den)
    return Scalar._raw(num, den)


def _reduce(num: IntLaurent, den: IntLaurent) -> tuple[IntLaurent, IntLaurent]:
    if num.is_zero():
        return _L_ZERO, _L_ONE
    if den.is_monomial():
        c = math.gcd(num.int_content(), den.int_content())
        if c > 1:
            num = IntLaurent({e: k // c for e, k in num.terms.items()})
            den = IntLaurent({e: k // c for e, k in den.terms.items()})
    else:
        g = _gcd_cached(num, den)
        if not g.is_one():
            num = laurent_divexact(num, g)
            den = laurent_divexact(den, g)
    return _unit_normalize(num, den)


def _normalize_coprime(num: IntLaurent, den: IntLaurent) -> Scalar:
    """Normalize when num/den are known coprime up to units and contents."""
    if num.is_zero():
        return ZERO
    cn = num.int_content()
    cd = den.int_content()
    g = math.gcd(cn, cd)
    if g > 1:
        num = IntLaurent({e: c // g for e, c in num.terms.items()})
        den = IntLaurent({e: c // g for e, c in den.terms.items()})
    num, den = _unit_normalize(num, den)
    return Scalar._raw(num, den)


def _unit_normalize(num: IntLaurent, den: IntLaurent) -> tuple[IntLaurent, IntLaurent]:
    mv, ms = den.min_exponents()
    if mv or ms:
        den = den.shift(-mv, -ms)
        num = num.shift(-mv, -ms)
    if den.lex_leading()[1] < 0:
        den = -den
        num = -num
    return num, den


# ---------------------------------------------------------------------------
# The standard symbols.
# ---------------------------------------------------------------------------

ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)


def v_pow(e: int = 1) -> Scalar:
    return Scalar.monomial(1, e, 0)


def s_pow(e: int = 1) -> Scalar:
    return Scalar.monomial(1, 0, e)


def z() -> Scalar:
    """The skein parameter z = s - s^{-1}."""
    return Scalar._raw(IntLaurent({(0, 1): 1, (0, -1): -1}), _L_ONE)


def delta() -> Scalar:
    """Value of a free loop, (v^{-1} - v) / (s - s^{-1})."""
    return Scalar(
        IntLaurent({(-1, 0): 1, (1, 0): -1}),
        IntLaurent({(0, 1): 1, (0, -1): -1}),
    )


def quantum_int(n: int) -> Scalar:
    """The quantum integer [n] = s^{n-1} + s^{n-3} + ... + s^{1-n}."""
    if n <= 0:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    return Scalar._raw(
        IntLaurent({(0, n - 1 - 2 * k): 1 for k in range(n)}), _L_ONE
    )
