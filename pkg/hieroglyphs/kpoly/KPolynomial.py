"""
K-polynomials of monomial quotients R/J.

Three independent algorithms compute the same Laurent polynomial:
an alternating lcm sum over generator subsets, a colon-ideal recursion,
and a sum over the faces of the Stanley-Reisner complex.
"""
import logging
from enum import Enum
from math import comb
from typing import Dict, List, Optional, Tuple

from .. import settings
from ..core.Errors import NotSquarefree, TooManyGenerators
from ..core.Grading import Grading
from ..core.Monomial import Monomial
from ..groebner.HilbertFunction import hilbert_function_oracle
from ..monomial.MonomialIdeal import MonomialIdeal, minimal_subset
from ..stanleyreisner.SimplicialComplex import sr_facets
from .LaurentPoly import LaurentPoly

log = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


class KAlgorithm(Enum):
    TAYLOR = "taylor"
    SPLIT = "split"
    FACES = "faces"


def _grading_for(ideal: MonomialIdeal, grading: Optional[Grading]) -> Grading:
    if grading is None:
        return Grading.standard(ideal.ring.nvars)
    if grading.nvars != ideal.ring.nvars:
        raise ValueError(f"Grading has {grading.nvars} weights, ring has {ideal.ring.nvars} variables")
    return grading


def kpoly_taylor(ideal: MonomialIdeal, grading: Optional[Grading] = None) -> LaurentPoly:
    """
    Alternating sum of t^{w(lcm S)} over all subsets S of the generators.

    The subsets are never listed: coefficients are accumulated per lcm as
    generators are added one at a time.

    Args:
        ideal: Monomial ideal by minimal generators
        grading: Grading (standard when omitted)

    Raises:
        TooManyGenerators: Above settings.MAX_TAYLOR_GENERATORS generators
    """
    grading = _grading_for(ideal, grading)
    if len(ideal) > settings.MAX_TAYLOR_GENERATORS:
        raise TooManyGenerators(
            f"{len(ideal)} generators exceed the Taylor limit of {settings.MAX_TAYLOR_GENERATORS}; "
            f"use the split algorithm")
    n = ideal.ring.nvars
    lcms: Dict[Exponents, int] = {(0,) * n: 1}
    for generator in ideal.gens:
        g = generator.exponents
        updated = dict(lcms)
        for exponents, coefficient in lcms.items():
            lcm = tuple(max(a, b) for a, b in zip(exponents, g))
            updated[lcm] = updated.get(lcm, 0) - coefficient
        lcms = {e: c for e, c in updated.items() if c}
    acc: Dict[Exponents, int] = {}
    for exponents, coefficient in lcms.items():
        weight = grading.weight(exponents)
        acc[weight] = acc.get(weight, 0) + coefficient
    return LaurentPoly(grading.dim, acc)


def _components(gens: List[Exponents]) -> List[List[Exponents]]:
    """Group generators into classes that share variables, transitively."""
    groups: List[Tuple[set, List[Exponents]]] = []
    for g in gens:
        support = {i for i, a in enumerate(g) if a}
        merged_support, merged_gens = set(support), [g]
        kept = []
        for group_support, group_gens in groups:
            if group_support & support:
                merged_support |= group_support
                merged_gens = group_gens + merged_gens
            else:
                kept.append((group_support, group_gens))
        groups = kept + [(merged_support, merged_gens)]
    return [sorted(group_gens) for _, group_gens in groups]


def kpoly_split(ideal: MonomialIdeal, grading: Optional[Grading] = None) -> LaurentPoly:
    """
    K-polynomial by the recursion K(I + <m>) = K(I) - t^{w(m)} K(I : m).

    Ideals whose generators fall into variable-disjoint groups are split
    into a product. Results are memoized for the duration of one call.

    Args:
        ideal: Monomial ideal by minimal generators
        grading: Grading (standard when omitted)
    """
    grading = _grading_for(ideal, grading)
    dim = grading.dim
    memo: Dict[Tuple[Exponents, ...], LaurentPoly] = {}

    def recurse(gens: Tuple[Exponents, ...]) -> LaurentPoly:
        if not gens:
            return LaurentPoly.one(dim)
        if gens in memo:
            return memo[gens]
        groups = _components(list(gens))
        if len(groups) > 1:
            result = LaurentPoly.one(dim)
            for group in groups:
                result = result * recurse(tuple(group))
        elif len(gens) == 1:
            result = LaurentPoly.one(dim) - LaurentPoly.monomial(grading.weight(gens[0]))
        else:
            pivot = gens[-1]
            rest = gens[:-1]
            colon = minimal_subset(
                Monomial(tuple(a - min(a, b) for a, b in zip(r, pivot))) for r in rest)
            result = recurse(rest)
            if not any(m.is_one() for m in colon):
                colon_key = tuple(sorted(m.exponents for m in colon))
                result = result - recurse(colon_key).shifted(grading.weight(pivot))
        memo[gens] = result
        return result

    result = recurse(tuple(sorted(m.exponents for m in ideal.gens)))
    log.debug("kpoly_split: %d memoized ideals", len(memo))
    return result


def kpoly_faces(ideal: MonomialIdeal, grading: Optional[Grading] = None) -> LaurentPoly:
    """
    K-polynomial as a sum over faces of the Stanley-Reisner complex:
    each face contributes prod over its vertices of t^{w_i} times prod over
    the other variables of (1 - t^{w_j}).

    Raises:
        NotSquarefree: If a generator has an exponent above 1
    """
    grading = _grading_for(ideal, grading)
    if not ideal.is_squarefree():
        raise NotSquarefree(f"{ideal.to_string()} is not squarefree; polarize it first")
    dim = grading.dim
    n = ideal.ring.nvars
    inside = [LaurentPoly.monomial(w) for w in grading.weights]
    outside = [LaurentPoly.one(dim) - inside[i] for i in range(n)]
    total = LaurentPoly.zero(dim)
    for face in sr_facets(ideal).faces():
        term = LaurentPoly.one(dim)
        for i in range(n):
            term = term * (inside[i] if i in face else outside[i])
        total = total + term
    return total


def kpoly(ideal: MonomialIdeal, grading: Optional[Grading] = None,
          algorithm: KAlgorithm = KAlgorithm.SPLIT) -> LaurentPoly:
    """Dispatch to one of the three K-polynomial algorithms."""
    if algorithm is KAlgorithm.TAYLOR:
        return kpoly_taylor(ideal, grading)
    if algorithm is KAlgorithm.FACES:
        return kpoly_faces(ideal, grading)
    return kpoly_split(ideal, grading)


def hilbert_series_coefficients(K: LaurentPoly, nvars: int, bound: int) -> List[int]:
    """Expand K(t) / (1 - t)^N as a power series up to t^bound."""
    if K.dim != 1:
        raise ValueError("Hilbert series expansion needs a one-dimensional grading")
    series = []
    for k in range(bound + 1):
        total = 0
        for (j,), coefficient in K.items():
            if j > k:
                continue
            if nvars == 0:
                total += coefficient if j == k else 0
            else:
                total += coefficient * comb(k - j + nvars - 1, nvars - 1)
        series.append(total)
    return series


def hilbert_series_check(ideal: MonomialIdeal, K: LaurentPoly, bound: int) -> bool:
    """
    Compare the series of K / (1 - t)^N with direct monomial counts.

    Args:
        ideal: Monomial ideal
        K: Its standard-graded K-polynomial
        bound: Largest degree compared
    """
    expected = hilbert_function_oracle(ideal, bound)
    actual = hilbert_series_coefficients(K, ideal.ring.nvars, bound)
    if actual != expected:
        log.info("Hilbert series mismatch: %s from K versus %s counted", actual, expected)
    return actual == expected
