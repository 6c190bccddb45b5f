"""Block designs cut out of a scheme's relation rows."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .scheme_core import Scheme, is_k_equivalenced
from .products import NotFourEquivalenced


@dataclass(frozen=True)
class BlockDesign:
    n: int
    blocks: tuple[frozenset[int], ...]


def scheme_to_design(scheme: Scheme) -> BlockDesign:
    """One block per (point, non-diagonal color): the relation row.

    Repeated point sets are kept as separate blocks, so a scheme with r
    colors contributes exactly n * (r - 1) blocks.
    """
    if is_k_equivalenced(scheme) != 4:
        raise NotFourEquivalenced("rows must all have size 4")
    blocks = tuple(
        frozenset(int(y) for y in scheme.row(alpha, s))
        for alpha in range(scheme.n)
        for s in scheme.nondiagonal()
    )
    return BlockDesign(scheme.n, blocks)


def verify_design(design: BlockDesign, t: int = 2, k: int = 4, lam: int = 3) -> bool:
    """Every block has k points and every t-set lies in exactly lam blocks."""
    if any(len(b) != k for b in design.blocks):
        return False
    counts = Counter()
    for block in design.blocks:
        for subset in itertools.combinations(sorted(block), t):
            counts[subset] += 1
    expected = len(list(itertools.combinations(range(design.n), t)))
    if len(counts) != expected:
        return False
    return all(v == lam for v in counts.values())
