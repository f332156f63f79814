"""Matroids on the ground set {1, ..., n}, with subsets encoded as bitmasks.

Bit i-1 of a mask stands for element i.  All derived data (rank table,
flats, closure) is computed lazily and cached; instances are immutable
after construction.
"""

from itertools import combinations


class MatroidError(Exception):
    pass


class EmptyBases(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeAxiomViolated(MatroidError):
    pass


class RankOutOfRange(MatroidError):
    pass


class RankZero(MatroidError):
    pass


class LoopyMatroid(MatroidError):
    pass


def set_to_mask(elements):
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def mask_to_set(mask):
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def popcount(mask):
    return bin(mask).count("1")


class Matroid:
    def __init__(self, n, bases, _validated=False):
        self.n = n
        self.full = (1 << n) - 1
        self.bases = frozenset(bases)
        if not self.bases:
            raise EmptyBases("a matroid needs at least one basis")
        sizes = {popcount(b) for b in self.bases}
        if len(sizes) != 1:
            raise UnequalCardinality("bases of different sizes: %s" % sorted(sizes))
        self.r = sizes.pop()
        if not _validated:
            self._check_exchange()
        self._rank_cache = {}
        self._flats = None
        self._closure_cache = {}

    def _check_exchange(self):
        # for bases A, B and x in A \ B there must be y in B \ A with
        # A - x + y again a basis
        for a in self.bases:
            for b in self.bases:
                diff = a & ~b
                x = diff
                while x:
                    bit = x & -x
                    base = a & ~bit
                    rest = b & ~a
                    y = rest
                    ok = False
                    while y:
                        ybit = y & -y
                        if (base | ybit) in self.bases:
                            ok = True
                            break
                        y &= y - 1
                    if not ok:
                        raise ExchangeAxiomViolated(
                            "exchange fails for bases %s, %s at element %s"
                            % (mask_to_set(a), mask_to_set(b), mask_to_set(bit)[0]))
                    x &= x - 1

    def rank(self, mask):
        if mask in self._rank_cache:
            return self._rank_cache[mask]
        rk = max(popcount(b & mask) for b in self.bases)
        self._rank_cache[mask] = rk
        return rk

    def closure(self, mask):
        if mask in self._closure_cache:
            return self._closure_cache[mask]
        rk = self.rank(mask)
        out = mask
        rem = self.full & ~mask
        while rem:
            bit = rem & -rem
            if self.rank(mask | bit) == rk:
                out |= bit
            rem &= rem - 1
        self._closure_cache[mask] = out
        return out

    def is_flat(self, mask):
        return self.closure(mask) == mask

    def flats(self):
        """All flats of the matroid, sorted by (rank, mask)."""
        if self._flats is None:
            found = {self.closure(0), self.full}
            frontier = list(found)
            while frontier:
                nxt = []
                for f in frontier:
                    rem = self.full & ~f
                    while rem:
                        bit = rem & -rem
                        g = self.closure(f | bit)
                        if g not in found:
                            found.add(g)
                            nxt.append(g)
                        rem &= rem - 1
                frontier = nxt
            self._flats = tuple(sorted(found, key=lambda f: (self.rank(f), f)))
        return self._flats

    def loops(self):
        return self.closure(0)

    def truncate(self):
        if self.r == 0:
            raise RankZero("cannot truncate a rank-0 matroid")
        if self.r == 1:
            return Matroid(self.n, [0], _validated=True)
        sub = set()
        for b in self.bases:
            m = b
            while m:
                bit = m & -m
                sub.add(b & ~bit)
                m &= m - 1
        return Matroid(self.n, sub, _validated=True)

    def delete_loops(self):
        """Remove loops; returns (loopless matroid, old-to-new element map)."""
        loops = self.loops()
        if loops == 0:
            return self, {e: e for e in range(1, self.n + 1)}
        keep = [e for e in range(1, self.n + 1) if not (loops >> (e - 1)) & 1]
        relabel = {e: i + 1 for i, e in enumerate(keep)}
        def remap(mask):
            out = 0
            for e in keep:
                if (mask >> (e - 1)) & 1:
                    out |= 1 << (relabel[e] - 1)
            return out
        bases = {remap(b) for b in self.bases}
        return Matroid(len(keep), bases, _validated=True), relabel

    def __repr__(self):
        return "Matroid(n=%d, r=%d, %d bases)" % (self.n, self.r, len(self.bases))

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))


def matroid_from_bases(n, bases):
    if n < 1:
        raise MatroidError("ground set must be nonempty")
    masks = []
    for b in bases:
        m = b if isinstance(b, int) else set_to_mask(b)
        if m & ~((1 << n) - 1):
            raise MatroidError("basis %r not contained in [%d]" % (b, n))
        masks.append(m)
    return Matroid(n, masks)


def matroid_uniform(r, n):
    if not 0 <= r <= n:
        raise RankOutOfRange("need 0 <= r <= n, got r=%d, n=%d" % (r, n))
    bases = [set_to_mask(c) for c in combinations(range(1, n + 1), r)]
    return Matroid(n, bases, _validated=True)


def matroid_from_graph(vertices, edges):
    """Graphic matroid; edges are (u, v) pairs labeled 1..len(edges) in order."""
    n = len(edges)
    # maximal forests via all subsets, fine at desk scale
    for size in range(min(n, vertices - 1), -1, -1):
        found = [set_to_mask([i + 1 for i in combo])
                 for combo in combinations(range(n), size)
                 if _is_forest(vertices, [edges[i] for i in combo])]
        if found:
            return Matroid(n, found, _validated=True)
    return Matroid(max(n, 1), [0], _validated=True)


def _is_forest(vertices, edge_list):
    parent = list(range(vertices + 1))
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for u, v in edge_list:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def matroid_from_json(data):
    """Parse a matroid descriptor dict.

    Accepted forms: {"n": 4, "bases": [[1,2], ...]}, {"uniform": [r, n]},
    {"graph": {"vertices": 5, "edges": [[1,2], ...]}}.
    """
    if "uniform" in data:
        r, n = data["uniform"]
        return matroid_uniform(r, n)
    if "graph" in data:
        g = data["graph"]
        return matroid_from_graph(g["vertices"], [tuple(e) for e in g["edges"]])
    if "bases" in data:
        return matroid_from_bases(data["n"], data["bases"])
    raise MatroidError("unrecognized matroid descriptor: %r" % (sorted(data),))


def pyramid_matroid():
    """Graphic matroid of the wheel-like graph on 5 vertices and 8 edges
    used throughout the tests: a 4-cycle 1,2,3,4 plus spokes 5,6,7,8 to
    an apex vertex."""
    edges = [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5), (3, 5), (4, 5)]
    return matroid_from_graph(5, edges)
