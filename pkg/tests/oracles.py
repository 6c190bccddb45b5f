"""Independent slow-path implementations used to cross-check the library.

Everything here recomputes results from first principles (adjacency
matrices, exhaustive permutation search, naive dict-based refinement) so
the fast numpy paths in scheme_forge are never checked against themselves.
"""

import itertools
import math

import numpy as np


def adjacency_matrices(scheme):
    return [(scheme.color == s).astype(np.int64) for s in range(scheme.r)]


def tensor_by_matmul(scheme):
    """c(s,t,u) read off A_s @ A_t at one representative pair per color."""
    mats = adjacency_matrices(scheme)
    reps = []
    for u in range(scheme.r):
        xs, ys = np.nonzero(scheme.color == u)
        reps.append((int(xs[0]), int(ys[0])))
    c = np.zeros((scheme.r, scheme.r, scheme.r), dtype=np.int64)
    for s in range(scheme.r):
        for t in range(scheme.r):
            prod = mats[s] @ mats[t]
            for u, (x, y) in enumerate(reps):
                c[s, t, u] = prod[x, y]
    return c


def inner_by_trace(scheme, s, t, u, v):
    """<st, uv> = (1/n) tr((A_s A_t)(A_u A_v)^T)."""
    mats = adjacency_matrices(scheme)
    left = mats[s] @ mats[t]
    right = mats[u] @ mats[v]
    return int(np.trace(left @ right.T)) // scheme.n


def valency_by_rows(scheme, s):
    counts = {int((scheme.color[x] == s).sum()) for x in range(scheme.n)}
    assert len(counts) == 1
    return counts.pop()


def indistinguishing_by_count(scheme, s):
    """Count points equidistant from both ends of an s-colored pair."""
    xs, ys = np.nonzero(scheme.color == s)
    x, y = int(xs[0]), int(ys[0])
    return sum(
        1
        for z in range(scheme.n)
        if scheme.color[x, z] == scheme.color[y, z] and scheme.color[x, z] != 0
    )


def is_automorphism(color, img):
    idx = np.asarray(img)
    return bool((color[np.ix_(idx, idx)] == color).all())


def aut_by_factorial(scheme):
    """Filter all n! permutations; only sane for n <= 7."""
    assert scheme.n <= 7
    found = []
    for img in itertools.permutations(range(scheme.n)):
        if is_automorphism(scheme.color, img):
            found.append(img)
    return sorted(found)


def aut_by_anchors(scheme):
    """Enumerate automorphisms from candidate images of the points 0, 1.

    For every consistent image pair (a, b) of (0, 1), each point x must map
    into {y : C[a,y] = C[0,x] and C[b,y] = C[1,x]}; the map is completed by
    depth-first search over those candidate sets and verified in full.
    """
    color = scheme.color
    n = scheme.n
    if n == 1:
        return [(0,)]
    found = []
    for a in range(n):
        for b in range(n):
            if a == b or color[a, b] != color[0, 1] or color[b, a] != color[1, 0]:
                continue
            cands = []
            feasible = True
            for x in range(n):
                mask = (
                    (color[a] == color[0, x])
                    & (color[b] == color[1, x])
                    & (color[:, a] == color[x, 0])
                    & (color[:, b] == color[x, 1])
                )
                opts = np.nonzero(mask)[0].tolist()
                if not opts:
                    feasible = False
                    break
                cands.append(opts)
            if not feasible:
                continue
            order = sorted(range(n), key=lambda x: len(cands[x]))
            img = [-1] * n
            used = [False] * n

            def place(k):
                if k == n:
                    if is_automorphism(color, img):
                        found.append(tuple(img))
                    return
                x = order[k]
                for y in cands[x]:
                    if used[y]:
                        continue
                    img[x] = y
                    used[y] = True
                    place(k + 1)
                    used[y] = False
                img[x] = -1

            place(0)
    return sorted(set(found))


def wl_partition_by_dicts(color):
    """Naive dict-based 2-dim refinement; returns the stable pair partition."""
    n = len(color)
    current = {(x, y): int(color[x][y]) for x in range(n) for y in range(n)}
    while True:
        sigs = {}
        for x in range(n):
            for y in range(n):
                around = sorted((current[(x, z)], current[(z, y)]) for z in range(n))
                sigs[(x, y)] = (current[(x, y)], tuple(around))
        relabel = {}
        fresh = {}
        for pair in sorted(sigs):
            sig = sigs[pair]
            if sig not in relabel:
                relabel[sig] = len(relabel)
            fresh[pair] = relabel[sig]
        if len(relabel) == len(set(current.values())):
            classes = {}
            for pair, c in fresh.items():
                classes.setdefault(c, set()).add(pair)
            return {frozenset(v) for v in classes.values()}
        current = fresh


def partition_of(matrix):
    classes = {}
    n = len(matrix)
    for x in range(n):
        for y in range(n):
            classes.setdefault(int(matrix[x][y]), set()).add((x, y))
    return {frozenset(v) for v in classes.values()}


def frobenius_by_definition(elements, n):
    """Transitive, and non-identity elements fix at most one point with at
    least one fixing exactly one."""
    identity = tuple(range(n))
    if identity not in elements:
        return False
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in elements:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    if len(seen) != n:
        return False
    some_one_fixer = False
    for g in elements:
        if g == identity:
            continue
        fixed = sum(1 for i in range(n) if g[i] == i)
        if fixed > 1:
            return False
        if fixed == 1:
            some_one_fixer = True
    return some_one_fixer


def orbital_partition(elements, n):
    """Pair partition into orbits of the diagonal action."""
    seen = {}
    label = 0
    out = [[-1] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if out[x][y] != -1:
                continue
            for g in elements:
                out[g[x]][g[y]] = label
            label += 1
    return out


def blocks_by_pair_count(design, t, lam):
    """Check every t-subset lies in exactly lam blocks by direct counting."""
    hits = {}
    for block in design.blocks:
        for sub in itertools.combinations(sorted(block), t):
            hits[sub] = hits.get(sub, 0) + 1
    expected = math.comb(design.n, t)
    return len(hits) == expected and set(hits.values()) == {lam}
