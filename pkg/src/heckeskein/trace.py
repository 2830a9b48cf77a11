"""Markov trace on the Hecke algebras and HOMFLY polynomials of closed braids.

The trace implements plane evaluation of a tangle's closure.  On a braid
basis element it peels off the top strand using the descending coset normal
form w_pi = w_u . sigma_{n-1} sigma_{n-2} ... sigma_k:

* if pi fixes the top strand, closing it adds a free loop: factor delta;
* otherwise the single sigma_{n-1} crossing closes into a curl: factor
  v^{-1}, and the leftover sigma_{n-2}...sigma_k gets absorbed into H_{n-1}.

The multiplicative evaluation on the annulus ring sends h_k to the trace of
the k-strand row idempotent; together with the character closure this gives
the consistency check markov_ev = ev_sym(closure(.)).

The user-facing `homfly` rescales by the writhe and normalizes the unknot
to 1, matching published HOMFLY tables in the (v, z) conventions.
"""

from __future__ import annotations

from functools import lru_cache

from .coeff import IntLaurent, Scalar, delta, v_pow
from .hecke import HeckeElt, PolyTerms, _rmul_gen_poly, h_idem, word_elt
from .symfun import SymFunc

_ONE_POLY = IntLaurent.from_int(1)

_BASIS_TRACE: dict[tuple[int, ...], Scalar] = {}


def _basis_trace(images: tuple[int, ...]) -> Scalar:
    hit = _BASIS_TRACE.get(images)
    if hit is not None:
        return hit
    n = len(images)
    if n == 0:
        out = Scalar.from_int(1)
    elif n == 1:
        out = delta()
    else:
        k = images.index(n) + 1
        rest = tuple(v for v in images if v != n)
        if k == n:
            out = delta() * _basis_trace(rest)
        else:
            # w_pi = w_u sigma_{n-1} (sigma_{n-2}...sigma_k); closing the top
            # strand through the single sigma_{n-1} gives the curl factor.
            terms: PolyTerms = {rest: _ONE_POLY}
            for i in range(n - 2, k - 1, -1):
                terms = _rmul_gen_poly(terms, i, +1)
            acc = Scalar.from_int(0)
            for im, c in terms.items():
                acc = acc + Scalar.from_poly(c) * _basis_trace(im)
            out = v_pow(-1) * acc
    _BASIS_TRACE[images] = out
    return out


def markov_ev(x: HeckeElt) -> Scalar:
    """The framed Markov trace: delta per free loop, v^{-1} per curl."""
    out = Scalar.from_int(0)
    for p, c in x.terms.items():
        out = out + c * _basis_trace(p.images)
    return out


@lru_cache(maxsize=None)
def _h_trace(k: int) -> Scalar:
    return markov_ev(h_idem(k))


def ev_sym(f: SymFunc) -> Scalar:
    """Plane evaluation of the annulus ring: h_k -> markov_ev(h_idem(k))."""
    out = Scalar.from_int(0)
    for parts, c in f.terms.items():
        val = c
        for k in parts:
            val = val * _h_trace(k)
        out = out + val
    return out


def homfly(n: int, word: list[int]) -> Scalar:
    """Framed-corrected HOMFLY polynomial of the closed braid, unknot = 1."""
    if n < 1:
        raise ValueError("need at least one strand")
    writhe = sum(1 if i > 0 else -1 for i in word)
    raw = markov_ev(word_elt(n, word))
    return v_pow(writhe) * raw / delta()
