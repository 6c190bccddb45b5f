"""Association schemes as dense color matrices with exact intersection data.

A scheme on n points is stored as an n x n matrix of color indices
0..r-1.  Color 0 is reserved for the diagonal.  Validation derives the
full tensor of intersection numbers c(s,t,u) and refuses any matrix
where a structure constant fails to be constant over its color class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class SchemeForgeError(Exception):
    """Base class for structured errors raised by this package."""


class DiagonalViolation(SchemeForgeError):
    """Color 0 and the diagonal do not coincide."""


class DualViolation(SchemeForgeError):
    """Transposing the matrix does not act as an involution on colors."""


class NonConstantIntersection(SchemeForgeError):
    """Some c(s,t,u) differs between two pairs of the same color."""

    def __init__(self, s, t, u, pair, expected, got):
        super().__init__(
            "c(%d,%d;%d) is not constant: pair %s gives %d, first witness gave %d"
            % (s, t, u, pair, got, expected)
        )
        self.s = s
        self.t = t
        self.u = u
        self.pair = pair
        self.expected = expected
        self.got = got


class DiagonalColor(SchemeForgeError):
    """The diagonal color was passed where a non-diagonal one is required."""


class FormatError(SchemeForgeError):
    """A scheme or permutation text file is malformed."""


@dataclass(frozen=True, eq=False)
class IntersectionTensor:
    """All structure constants of a scheme, c[s, t, u] as an (r,r,r) array."""

    c: np.ndarray

    def __call__(self, s: int, t: int, u: int) -> int:
        return int(self.c[s, t, u])

    def support(self, s: int, t: int) -> tuple[int, ...]:
        """Colors u with c(s,t,u) != 0, ascending."""
        return tuple(int(u) for u in np.nonzero(self.c[s, t])[0])

    def decomposition(self, s: int, t: int) -> dict[int, int]:
        """Map u -> c(s,t,u) over the support of the product."""
        return {int(u): int(self.c[s, t, u]) for u in np.nonzero(self.c[s, t])[0]}


@dataclass(frozen=True, eq=False)
class Scheme:
    """A validated association scheme.

    Fields are never mutated after validate() returns; the arrays are
    marked read-only so accidental writes fail loudly.
    """

    n: int
    r: int
    color: np.ndarray
    dual: np.ndarray
    tensor: IntersectionTensor
    valencies: np.ndarray

    def color_of(self, x: int, y: int) -> int:
        return int(self.color[x, y])

    def row(self, alpha: int, s: int) -> np.ndarray:
        """Points y with color(alpha, y) = s."""
        return np.nonzero(self.color[alpha] == s)[0]

    def nondiagonal(self) -> range:
        return range(1, self.r)


def _first_occurrence_rank(codes: np.ndarray) -> tuple[np.ndarray, int]:
    """Relabel a flat integer array by first occurrence; returns (labels, count)."""
    uniq, first, inv = np.unique(codes, return_index=True, return_inverse=True)
    inv = inv.reshape(-1)
    rank = np.empty(len(uniq), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(uniq))
    return rank[inv], len(uniq)


def canonical_relabel(matrix: np.ndarray) -> np.ndarray:
    """Renumber colors by first occurrence in row-major order.

    Two matrices induce the same pair partition iff their canonical
    relabelings are equal, which is how generated schemes and orbital
    partitions are compared.
    """
    m = np.asarray(matrix, dtype=np.int64)
    labels, _ = _first_occurrence_rank(m.ravel())
    return labels.reshape(m.shape)


def _constancy_tensor(color: np.ndarray, r: int) -> np.ndarray:
    """Compute c(s,t,u) for all triples, raising on any non-constant count.

    For each (s,t) the product of 0/1 color matrices counts, at entry
    (x,y), the paths x -> z -> y through colors s then t.  The count at
    the first pair of each color u is the candidate c(s,t,u); every
    other pair of color u must agree.
    """
    n = color.shape[0]
    flat = color.ravel()
    uniq, first = np.unique(flat, return_index=True)
    first_flat = np.empty(r, dtype=np.int64)
    first_flat[uniq] = first
    # float64 matmul is exact here: entries are bounded by n << 2**53
    indicators = np.stack([(color == s).astype(np.float64) for s in range(r)])
    c = np.zeros((r, r, r), dtype=np.int64)
    for s in range(r):
        for t in range(r):
            paths = indicators[s] @ indicators[t]
            witness = paths.ravel()[first_flat]
            expected = witness[color]
            if not np.array_equal(paths, expected):
                x, y = map(int, np.argwhere(paths != expected)[0])
                u = int(color[x, y])
                raise NonConstantIntersection(
                    s, t, u, (x, y), int(witness[u]), int(paths[x, y])
                )
            c[s, t] = np.rint(witness).astype(np.int64)
    return c


def validate(n: int, r: int, color, dual) -> Scheme:
    """Check all scheme axioms and return the Scheme with its tensor attached.

    Raises DiagonalViolation / DualViolation / NonConstantIntersection for
    axiom failures, ValueError for out-of-range or missing colors.
    """
    if n < 1 or r < 1:
        raise ValueError("need at least one point and one color")
    mat = np.array(color, dtype=np.int64)
    if mat.shape != (n, n):
        raise ValueError("color matrix is not %d x %d" % (n, n))
    if mat.min() < 0 or mat.max() >= r:
        raise ValueError("color entries must lie in 0..%d" % (r - 1))
    dual_arr = np.array(dual, dtype=np.int64)
    if dual_arr.shape != (r,):
        raise ValueError("dual must assign one color to each of %d colors" % r)
    if dual_arr.min() < 0 or dual_arr.max() >= r:
        raise ValueError("dual entries must lie in 0..%d" % (r - 1))

    diag = mat.diagonal()
    if (diag != 0).any():
        x = int(np.nonzero(diag != 0)[0][0])
        raise DiagonalViolation("color(%d,%d) = %d, expected 0" % (x, x, diag[x]))
    off = (mat == 0) & ~np.eye(n, dtype=bool)
    if off.any():
        x, y = map(int, np.argwhere(off)[0])
        raise DiagonalViolation("color(%d,%d) = 0 off the diagonal" % (x, y))

    if dual_arr[0] != 0:
        raise DualViolation("dual of the diagonal color must be itself")
    if not np.array_equal(dual_arr[dual_arr], np.arange(r)):
        s = int(np.nonzero(dual_arr[dual_arr] != np.arange(r))[0][0])
        raise DualViolation("dual is not an involution at color %d" % s)
    transposed = dual_arr[mat]
    if not np.array_equal(mat.T, transposed):
        x, y = map(int, np.argwhere(mat.T != transposed)[0])
        raise DualViolation(
            "color(%d,%d) = %d but color(%d,%d) = %d is not its dual"
            % (y, x, mat[y, x], x, y, mat[x, y])
        )

    counts = np.bincount(mat.ravel(), minlength=r)
    if (counts == 0).any():
        s = int(np.nonzero(counts == 0)[0][0])
        raise ValueError("color %d never occurs" % s)

    c = _constancy_tensor(mat, r)
    valencies = c[np.arange(r), dual_arr, 0].copy()
    for arr in (mat, dual_arr, c, valencies):
        arr.setflags(write=False)
    return Scheme(n, r, mat, dual_arr, IntersectionTensor(c), valencies)


def from_matrix(color) -> Scheme:
    """Validate a bare color matrix, deriving r and the dual map by scanning."""
    mat = np.array(color, dtype=np.int64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("color matrix must be square")
    n = mat.shape[0]
    r = int(mat.max()) + 1 if mat.size else 0
    dual = _scan_dual(mat, r)
    return validate(n, r, mat, dual)


def _scan_dual(mat: np.ndarray, r: int) -> np.ndarray:
    """Derive s -> s* from the matrix; DualViolation if transpose mixes colors."""
    dual = np.empty(r, dtype=np.int64)
    transposed = mat.T
    for s in range(r):
        vals = np.unique(transposed[mat == s])
        if len(vals) == 0:
            raise ValueError("color %d never occurs" % s)
        if len(vals) != 1:
            raise DualViolation(
                "transpose of color %d meets colors %s" % (s, list(map(int, vals)))
            )
        dual[s] = vals[0]
    return dual


def intersection_tensor(scheme: Scheme) -> IntersectionTensor:
    return scheme.tensor


def valency(scheme: Scheme, s: int) -> int:
    """Out-degree of color s: c(s, s*, 0)."""
    return int(scheme.valencies[s])


def is_k_equivalenced(scheme: Scheme):
    """The common non-diagonal valency, or None if valencies are mixed."""
    if scheme.r < 2:
        return None
    vals = set(int(v) for v in scheme.valencies[1:])
    if len(vals) == 1:
        return vals.pop()
    return None


def is_symmetric(scheme: Scheme) -> bool:
    """Every color is its own dual."""
    return bool(np.array_equal(scheme.dual, np.arange(scheme.r)))


def is_commutative(scheme: Scheme) -> bool:
    """c(s,t,u) = c(t,s,u) for all triples."""
    c = scheme.tensor.c
    return bool(np.array_equal(c, c.transpose(1, 0, 2)))


def indistinguishing_number(scheme: Scheme, s: int) -> int:
    """Number of points related equally to both ends of an s-pair.

    For (x,y) of color s this counts z with color(x,z) = color(y,z)
    non-diagonal, i.e. the sum of c(u, u*, s) over non-diagonal u.
    """
    if s == 0:
        raise DiagonalColor("indistinguishing number is defined off the diagonal")
    if not 0 < s < scheme.r:
        raise ValueError("no such color: %d" % s)
    c = scheme.tensor.c
    us = np.arange(1, scheme.r)
    return int(c[us, scheme.dual[us], s].sum())


def scheme_indistinguishing(scheme: Scheme) -> int:
    """Maximum indistinguishing number over non-diagonal colors (0 if none)."""
    if scheme.r < 2:
        return 0
    return max(indistinguishing_number(scheme, s) for s in scheme.nondiagonal())


def is_pseudocyclic(scheme: Scheme) -> bool:
    """k-equivalenced with every indistinguishing number equal to k - 1."""
    k = is_k_equivalenced(scheme)
    if k is None:
        return False
    return all(
        indistinguishing_number(scheme, s) == k - 1 for s in scheme.nondiagonal()
    )


def product_inner(scheme: Scheme, s: int, t: int, u: int, v: int) -> int:
    """Hermitian product of the matrix products A_s A_t and A_u A_v.

    Equals sum over w of c(s,t,w) * c(u,v,w) * n_w, since distinct color
    matrices are orthogonal with <A_w, A_w> = n_w.
    """
    c = scheme.tensor.c
    return int((c[s, t] * c[u, v] * scheme.valencies).sum())


# --- scheme text format (.asc) ---
#
# line 1: "n r"; then n lines of n space-separated colors.  LF endings,
# no trailing whitespace.  The dual map is derived by scanning.


def write_asc(scheme: Scheme) -> str:
    lines = ["%d %d" % (scheme.n, scheme.r)]
    for row in scheme.color:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def read_asc(text: str) -> Scheme:
    """Parse and fully validate a scheme file; FormatError on malformed text."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty scheme file")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'n r'")
    try:
        n, r = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError("header must be two integers") from None
    if n < 1 or r < 1:
        raise FormatError("header values must be positive")
    if len(lines) != n + 1:
        raise FormatError("expected %d matrix rows, found %d" % (n, len(lines) - 1))
    mat = np.empty((n, n), dtype=np.int64)
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != n:
            raise FormatError("row %d has %d entries, expected %d" % (i, len(parts), n))
        try:
            mat[i] = [int(p) for p in parts]
        except ValueError:
            raise FormatError("row %d has a non-integer entry" % i) from None
    if mat.min() < 0 or mat.max() >= r:
        raise FormatError("color entries must lie in 0..%d" % (r - 1))
    dual = _scan_dual(mat, r)
    return validate(n, r, mat, dual)


def load_asc(path) -> Scheme:
    with open(path, "r", encoding="ascii") as fh:
        return read_asc(fh.read())


def save_asc(scheme: Scheme, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(write_asc(scheme))
