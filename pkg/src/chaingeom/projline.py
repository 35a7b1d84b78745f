"""The projective line over a finite ring and its distant graph.

Points are canonical admissible pairs (a, b): the index-lexicographically
least pair among the left unit multiples (u*a, u*b).  Matrices over the
ring are plain row-major 4-tuples (a, b, c, d) for [[a, b], [c, d]].

Point enumeration runs two independent methods, an orbit BFS from (1, 0)
under elementary and diagonal matrices and a full admissible-pair scan,
and treats disagreement as fatal: over exotic rings membership of R(x,y)
in the line does not force admissibility of (x, y), and the cross-check
guards the convention that points are represented by admissible pairs
only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Optional

from chaingeom.rings import Matrix2Ring, OppositeRing, Ring

Point = tuple[int, int]
Matrix2 = tuple[int, int, int, int]


class NotAdmissibleError(ValueError):
    pass


class MethodDisagreementError(AssertionError):
    """Orbit enumeration and admissible-pair scan produced different point sets."""


# matrices ----------------------------------------------------------------

def mat_identity(R: Ring) -> Matrix2:
    return (R.one, R.zero, R.zero, R.one)


def mat_mul(R: Ring, M: Matrix2, N: Matrix2) -> Matrix2:
    a, b, c, d = M
    e, f, g, h = N
    return (
        R.add(R.mul(a, e), R.mul(b, g)),
        R.add(R.mul(a, f), R.mul(b, h)),
        R.add(R.mul(c, e), R.mul(d, g)),
        R.add(R.mul(c, f), R.mul(d, h)),
    )


def elementary(R: Ring, t: int) -> Matrix2:
    """The elementary matrix [[t, 1], [-1, 0]]."""
    return (t, R.one, R.neg(R.one), R.zero)


def row_times_mat(R: Ring, row: tuple[int, int], M: Matrix2) -> tuple[int, int]:
    a, b = row
    return (R.add(R.mul(a, M[0]), R.mul(b, M[2])),
            R.add(R.mul(a, M[1]), R.mul(b, M[3])))


def mat_times_col(R: Ring, M: Matrix2, col: tuple[int, int]) -> tuple[int, int]:
    v, w = col
    return (R.add(R.mul(M[0], v), R.mul(M[1], w)),
            R.add(R.mul(M[2], v), R.mul(M[3], w)))


def _mat4_rows(R: Matrix2Ring, M: Matrix2) -> list[list[int]]:
    A, B, C, D = (R._tuples[x] for x in M)
    return [
        [A[0], A[1], B[0], B[1]],
        [A[2], A[3], B[2], B[3]],
        [C[0], C[1], D[0], D[1]],
        [C[2], C[3], D[2], D[3]],
    ]


def modp_invert(rows: list[list[int]], p: int) -> Optional[list[list[int]]]:
    """Gauss-Jordan inverse of a square matrix mod prime p, or None."""
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] % p), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def modp_rank(rows: list[list[int]], p: int) -> int:
    mat = [list(r) for r in rows]
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if mat[r][col] % p), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(n_rows):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def mat_invert(R: Ring, M: Matrix2) -> Optional[Matrix2]:
    """Two-sided inverse of M in GL2(R), or None.

    matrix2 rings reinterpret M as a 4x4 matrix over F_q and eliminate;
    opposite rings delegate via transposition; everything else brute-force
    solves for the inverse columns over R^2 (fine for |R| <= 16).
    """
    if isinstance(R, Matrix2Ring):
        inv4 = modp_invert(_mat4_rows(R, M), R.p)
        if inv4 is None:
            return None
        enc = R._encode
        return (
            enc((inv4[0][0], inv4[0][1], inv4[1][0], inv4[1][1])),
            enc((inv4[0][2], inv4[0][3], inv4[1][2], inv4[1][3])),
            enc((inv4[2][0], inv4[2][1], inv4[3][0], inv4[3][1])),
            enc((inv4[2][2], inv4[2][3], inv4[3][2], inv4[3][3])),
        )
    if isinstance(R, OppositeRing):
        a, b, c, d = M
        inv = mat_invert(R.base, (a, c, b, d))
        if inv is None:
            return None
        return (inv[0], inv[2], inv[1], inv[3])
    a, b, c, d = M
    one, zero = R.one, R.zero
    # bucket the products b*y by value so each column solve is linear in |R|
    by = R.left_products(b)
    buckets: dict = {}
    for y in R.elements():
        buckets.setdefault(int(by[y]), []).append(y)
    cols = []
    for e1, e2 in ((one, zero), (zero, one)):
        found = None
        for x in R.elements():
            need = R.sub(e1, R.mul(a, x))
            for y in buckets.get(need, ()):
                if R.add(R.mul(c, x), R.mul(d, y)) == e2:
                    found = (x, y)
                    break
            if found:
                break
        if found is None:
            return None
        cols.append(found)
    N = (cols[0][0], cols[1][0], cols[0][1], cols[1][1])
    # finite rings are Dedekind-finite, so the one-sided inverse is two-sided
    assert mat_mul(R, N, M) == mat_identity(R)
    return N


# admissibility and points --------------------------------------------------

@cache
def _admissible_table(R: Ring) -> dict:
    return {}


def is_admissible(R: Ring, a: int, b: int) -> bool:
    """True iff (a, b) extends to the first row of a matrix in GL2(R).

    matrix2 rings use the rank test on the 2x4 matrix [a | b] over F_q
    (completions exist iff the first two rows of the 4x4 block matrix are
    independent); opposite rings map to column admissibility over the base;
    the generic path scans completions (c, d) with mat_invert.  Results are
    cached per ring.
    """
    table = _admissible_table(R)
    key = (a, b)
    hit = table.get(key)
    if hit is not None:
        return hit
    if isinstance(R, Matrix2Ring):
        A, B = R._tuples[a], R._tuples[b]
        out = modp_rank([[A[0], A[1], B[0], B[1]],
                         [A[2], A[3], B[2], B[3]]], R.p) == 2
    elif isinstance(R, OppositeRing):
        out = is_column_admissible(R.base, a, b)
    else:
        out = any(mat_invert(R, (a, b, c, d)) is not None
                  for c in R.elements() for d in R.elements())
    table[key] = out
    return out


def is_column_admissible(R: Ring, v: int, w: int) -> bool:
    """True iff (v, w)^T extends to the first column of a matrix in GL2(R)."""
    table = _admissible_table(R)
    key = ("col", v, w)
    hit = table.get(key)
    if hit is not None:
        return hit
    if isinstance(R, Matrix2Ring):
        V, W = R._tuples[v], R._tuples[w]
        out = modp_rank([[V[0], V[1]], [V[2], V[3]], [W[0], W[1]], [W[2], W[3]]],
                        R.p) == 2
    elif isinstance(R, OppositeRing):
        out = is_admissible(R.base, v, w)
    else:
        out = any(mat_invert(R, (v, x, w, y)) is not None
                  for x in R.elements() for y in R.elements())
    table[key] = out
    return out


def make_point(R: Ring, a: int, b: int) -> Point:
    """Canonical representative of R(a, b); raises NotAdmissibleError."""
    if not is_admissible(R, a, b):
        raise NotAdmissibleError(f"({a}, {b}) is not admissible over {R.name}")
    return R.canonical_pair_left(a, b)


def infinity(R: Ring) -> Point:
    """The point R(1, 0)."""
    return R.canonical_pair_left(R.one, R.zero)


def apply_matrix(R: Ring, p: Point, M: Matrix2) -> Point:
    """The point p * M, canonicalized."""
    return R.canonical_pair_left(*row_times_mat(R, p, M))


def line_generators(R: Ring) -> list[Matrix2]:
    """{E(t) : t in R} plus diag(u, 1) and diag(1, u) for units u."""
    gens = [elementary(R, t) for t in R.elements()]
    gens += [(u, R.zero, R.zero, R.one) for u in R.units]
    gens += [(R.one, R.zero, R.zero, u) for u in R.units]
    return gens


@cache
def enumerate_points(R: Ring) -> tuple[Point, ...]:
    """All points, by orbit BFS cross-checked against the admissible scan."""
    start = infinity(R)
    gens = line_generators(R)
    seen = {start}
    frontier = [start]
    while frontier:
        p = frontier.pop()
        for M in gens:
            q = apply_matrix(R, p, M)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    scanned = {R.canonical_pair_left(a, b)
               for a in R.elements() for b in R.elements()
               if is_admissible(R, a, b)}
    if seen != scanned:
        raise MethodDisagreementError(
            f"{R.name}: orbit gives {len(seen)} points, scan gives {len(scanned)}")
    return tuple(sorted(seen))


def distant(R: Ring, p: Point, q: Point) -> bool:
    """True iff the stacked representatives form a matrix in GL2(R)."""
    return mat_invert(R, (p[0], p[1], q[0], q[1])) is not None


@dataclass
class DistantGraph:
    """Distant graph with components and the (shared) diameter."""

    ring: Ring
    points: tuple[Point, ...]
    index: dict
    adj: list[frozenset]
    component: list[int]
    n_components: int
    diameter: int
    dist_from_infinity: dict

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2


def _bfs(adj, src):
    dist = {src: 0}
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


@cache
def distant_graph(R: Ring) -> DistantGraph:
    """Build the full graph; asserts every component has the same diameter."""
    pts = enumerate_points(R)
    index = {p: i for i, p in enumerate(pts)}
    n = len(pts)
    adj_sets: list[set] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if distant(R, pts[i], pts[j]):
                adj_sets[i].add(j)
                adj_sets[j].add(i)
    adj = [frozenset(s) for s in adj_sets]
    component = [-1] * n
    diameters = []
    n_comp = 0
    for i in range(n):
        if component[i] != -1:
            continue
        dist = _bfs(adj, i)
        ecc = max(dist.values())
        for j in dist:
            component[j] = n_comp
        # diameter of the component: max over all sources inside it
        diam = ecc
        for j in dist:
            diam = max(diam, max(_bfs(adj, j).values()))
        diameters.append(diam)
        n_comp += 1
    assert len(set(diameters)) == 1, f"components disagree on diameter: {diameters}"
    inf_idx = index[infinity(R)]
    dist_inf = _bfs(adj, inf_idx)
    return DistantGraph(
        ring=R,
        points=pts,
        index=index,
        adj=adj,
        component=component,
        n_components=n_comp,
        diameter=diameters[0],
        dist_from_infinity={pts[j]: d for j, d in dist_inf.items()},
    )


# elementary words ----------------------------------------------------------

def word_point(R: Ring, ts: tuple[int, ...]) -> Point:
    """The point spanned by (1, 0) * E(t_n) * ... * E(t_1)."""
    row = (R.one, R.zero)
    for t in reversed(ts):
        row = row_times_mat(R, row, elementary(R, t))
    return R.canonical_pair_left(*row)


@cache
def _word_table(R: Ring) -> dict:
    """Shortest elementary word for every reachable point, by a single BFS.

    The search stops one step past max{2, m} (m the graph diameter), which
    suffices for every point of the component of (1, 0).
    """
    bound = max(2, distant_graph(R).diameter) + 1
    layer = {infinity(R): ()}
    seen = dict(layer)
    for _ in range(bound):
        nxt = {}
        for q, w in layer.items():
            for t in R.elements():
                r = apply_matrix(R, q, elementary(R, t))
                if r not in seen:
                    word = (t,) + w
                    seen[r] = word
                    nxt[r] = word
        layer = nxt
        if not layer:
            break
    return seen


def point_word(R: Ring, p: Point) -> Optional[tuple[int, ...]]:
    """A shortest elementary word for p, or None outside the component of (1,0)."""
    return _word_table(R).get(p)


def point_permutation(R: Ring, M: Matrix2) -> dict:
    """The permutation p -> p*M of the whole point set."""
    return {p: apply_matrix(R, p, M) for p in enumerate_points(R)}
