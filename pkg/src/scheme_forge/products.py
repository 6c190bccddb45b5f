"""Complex products of relations and the structure they force at valency 4.

In a scheme where every non-diagonal color has valency 4, the square of
a color decomposes in exactly one of two ways, and the product of two
distinct colors in one of three.  The maps phi and psi record the heavy
and light components of each square and drive everything downstream
(planes, rotation automorphisms, base-number witnesses).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .scheme_core import Scheme, SchemeForgeError, is_k_equivalenced


class NotFourEquivalenced(SchemeForgeError):
    """An operation needed all non-diagonal valencies to equal 4."""


class DichotomyViolation(SchemeForgeError):
    """A color square is neither 4*1 + 3s nor 4*1 + 2u + v."""

    def __init__(self, s, decomposition):
        super().__init__("square of color %d decomposes as %s" % (s, decomposition))
        self.s = s
        self.decomposition = decomposition


class TrichotomyViolation(SchemeForgeError):
    """A product of distinct colors fits none of the three allowed shapes."""

    def __init__(self, s, t, detail):
        super().__init__("product of colors %d,%d: %s" % (s, t, detail))
        self.s = s
        self.t = t


class ProductClass(enum.Enum):
    FOUR_DISTINCT = "four-distinct"
    TWO_PLUS_DOUBLE = "two-plus-double"
    TWO_TWO = "two-two"


@dataclass(frozen=True)
class PhiPsi:
    """Square decomposition maps, extended by the identity off s3.

    For s in s3 the square is 4*1 + 2*phi(s) + psi(s); for s in s2 it is
    4*1 + 3s and both maps fix s.
    """

    phi: tuple[int, ...]
    psi: tuple[int, ...]
    s2: frozenset[int]
    s3: frozenset[int]


def complex_product(scheme: Scheme, rset, tset) -> frozenset[int]:
    """Support of the product: colors u with c(r,t,u) != 0 for some r,t."""
    rs = sorted(set(int(x) for x in rset))
    ts = sorted(set(int(x) for x in tset))
    for x in rs + ts:
        if not 0 <= x < scheme.r:
            raise ValueError("no such color: %d" % x)
    if not rs or not ts:
        return frozenset()
    block = scheme.tensor.c[np.ix_(rs, ts)]
    support = np.nonzero(block.any(axis=(0, 1)))[0]
    return frozenset(int(u) for u in support)


def closure(scheme: Scheme, rset) -> frozenset[int]:
    """Smallest color set containing rset that is closed under dual and product."""
    current = set(int(x) for x in rset)
    current.add(0)
    while True:
        grown = set(current)
        grown.update(int(scheme.dual[s]) for s in current)
        grown.update(complex_product(scheme, current, current))
        if grown == current:
            return frozenset(current)
        current = grown


def wr(scheme: Scheme, s: int, t: int) -> bool:
    """True when neither color lies in the closure generated by the other."""
    return s not in closure(scheme, {t}) and t not in closure(scheme, {s})


def phi_psi(scheme: Scheme) -> PhiPsi:
    """Classify every color square; NotFourEquivalenced unless k = 4."""
    if is_k_equivalenced(scheme) != 4:
        raise NotFourEquivalenced("phi/psi need common valency 4")
    c = scheme.tensor.c
    phi = list(range(scheme.r))
    psi = list(range(scheme.r))
    s2, s3 = set(), set()
    for s in scheme.nondiagonal():
        coeffs = c[s, s]
        decomposition = {int(u): int(coeffs[u]) for u in np.nonzero(coeffs)[0]}
        if decomposition.get(0) != 4:
            raise DichotomyViolation(s, decomposition)
        rest = {u: m for u, m in decomposition.items() if u != 0}
        if rest == {s: 3}:
            s2.add(s)
        elif sorted(rest.values()) == [1, 2]:
            heavy = next(u for u, m in rest.items() if m == 2)
            light = next(u for u, m in rest.items() if m == 1)
            phi[s] = heavy
            psi[s] = light
            s3.add(s)
        else:
            raise DichotomyViolation(s, decomposition)
    return PhiPsi(tuple(phi), tuple(psi), frozenset(s2), frozenset(s3))


def product_class(scheme: Scheme, pp: PhiPsi, s: int, t: int) -> ProductClass:
    """Shape of the product of two distinct non-diagonal colors.

    The coefficient profile of c(s,t,.) must match the phi criterion:
    four singles iff neither is phi of the other, a doubled factor iff
    exactly one is, 2s + 2t iff each is phi of the other.
    """
    if s == t or s == 0 or t == 0:
        raise ValueError("product_class needs two distinct non-diagonal colors")
    coeffs = scheme.tensor.c[s, t]
    decomposition = {int(u): int(coeffs[u]) for u in np.nonzero(coeffs)[0]}
    profile = sorted(decomposition.values())
    s_is_phi_t = s == pp.phi[t]
    t_is_phi_s = t == pp.phi[s]
    if profile == [1, 1, 1, 1]:
        if s_is_phi_t or t_is_phi_s:
            raise TrichotomyViolation(
                s, t, "four distinct factors but a phi relation holds"
            )
        return ProductClass.FOUR_DISTINCT
    if profile == [1, 1, 2]:
        heavy = next(u for u, m in decomposition.items() if m == 2)
        if heavy == s and t_is_phi_s and not s_is_phi_t:
            return ProductClass.TWO_PLUS_DOUBLE
        if heavy == t and s_is_phi_t and not t_is_phi_s:
            return ProductClass.TWO_PLUS_DOUBLE
        raise TrichotomyViolation(
            s, t, "doubled factor %d disagrees with phi: %s" % (heavy, decomposition)
        )
    if profile == [2, 2]:
        if set(decomposition) == {s, t} and s_is_phi_t and t_is_phi_s:
            return ProductClass.TWO_TWO
        raise TrichotomyViolation(s, t, "2+2 shape disagrees with phi: %s" % decomposition)
    raise TrichotomyViolation(s, t, "unrecognized profile %s" % decomposition)


@dataclass
class StructureReport:
    """Outcome of the full structure sweep: empty violations means pass."""

    violations: list[str]
    checked: dict[str, int]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_structure_lemmas(scheme: Scheme) -> StructureReport:
    """Exhaustively check the valency-4 product structure over all colors.

    Covers: the square dichotomy, the distinct-product trichotomy with
    its phi criteria, bijectivity of phi and psi on s3 with psi = phi o
    phi, existence of a four-element product partner once there are at
    least four non-diagonal colors, and both independence properties of
    pairs whose closures avoid each other.
    """
    violations: list[str] = []
    checked: dict[str, int] = {}
    if is_k_equivalenced(scheme) != 4:
        raise NotFourEquivalenced("structure sweep needs common valency 4")

    pp = None
    try:
        pp = phi_psi(scheme)
        checked["square-dichotomy"] = scheme.r - 1
    except DichotomyViolation as err:
        violations.append("square-dichotomy: %s" % err)
        checked["square-dichotomy"] = scheme.r - 1

    if pp is not None:
        pairs = 0
        for s in scheme.nondiagonal():
            for t in scheme.nondiagonal():
                if s == t:
                    continue
                pairs += 1
                try:
                    product_class(scheme, pp, s, t)
                except TrichotomyViolation as err:
                    violations.append("product-trichotomy: %s" % err)
        checked["product-trichotomy"] = pairs

        image_phi = sorted(pp.phi[s] for s in pp.s3)
        image_psi = sorted(pp.psi[s] for s in pp.s3)
        ok = image_phi == sorted(pp.s3) and image_psi == sorted(pp.s3)
        for s in pp.s3:
            if pp.psi[s] != pp.phi[pp.phi[s]]:
                ok = False
        if not ok:
            violations.append(
                "phi-psi-bijections: phi=%s psi=%s on s3=%s"
                % (pp.phi, pp.psi, sorted(pp.s3))
            )
        checked["phi-psi-bijections"] = len(pp.s3)

    # a partner with a four-element product exists once there are at
    # least four non-diagonal colors to choose from
    if scheme.r >= 5:
        for u in scheme.nondiagonal():
            if not any(
                len(complex_product(scheme, {u}, {v})) == 4
                for v in scheme.nondiagonal()
            ):
                violations.append(
                    "four-product-partner: color %d has no partner with |uv| = 4" % u
                )
        checked["four-product-partner"] = scheme.r - 1
    else:
        checked["four-product-partner"] = 0

    closures = {s: closure(scheme, {s}) for s in scheme.nondiagonal()}
    independent = [
        (s, t)
        for s in scheme.nondiagonal()
        for t in scheme.nondiagonal()
        if s < t and s not in closures[t] and t not in closures[s]
    ]
    for s, t in independent:
        prod = complex_product(scheme, {s}, {t})
        if len(prod) != 4:
            violations.append(
                "independent-product-split: |%d.%d| = %d" % (s, t, len(prod))
            )
        elif prod & (closures[s] | closures[t]):
            violations.append(
                "independent-product-split: product of %d,%d meets a closure" % (s, t)
            )
    checked["independent-product-split"] = len(independent)

    bound_pairs = 0
    if pp is not None:
        for s, t in independent:
            if s in pp.s3 and t in pp.s3:
                bound_pairs += 1
                left = complex_product(scheme, {pp.phi[t]}, {pp.phi[s]})
                right = complex_product(scheme, {pp.psi[t]}, {pp.psi[s]})
                if len(left & right) > 1:
                    violations.append(
                        "split-intersection-bound: colors %d,%d share %s"
                        % (s, t, sorted(left & right))
                    )
    checked["split-intersection-bound"] = bound_pairs

    return StructureReport(violations, checked)
