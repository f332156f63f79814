"""The cancellation calculus on biflags: splitting at the first gap,
lexicographic decrease, canonical expansions, the pos/neg bookkeeping with
its set-level identities, and the bundle relation checks that tie the
combinatorics to the Chow engine.

Everything before the verify_* helpers is pure biflag arithmetic on a
matroid and never builds a fan, so large ground sets stay cheap.
"""

from collections import Counter
from fractions import Fraction

from .chow import (ChowElement, is_zero_class, multiply_by_divisor,
                   nonzero_pairing_witness, unit_class)
from .fans import (bisubset_leq, gap_indices, is_chain, proper_biflats,
                   projective_bundle_fan)
from .matroid import mask_to_set, popcount
from .tautological import elementary_symmetric_products, structural_divisors


class BiflagError(Exception):
    pass


class NotABiflag(BiflagError):
    pass


class NotLexDecreasing(BiflagError):
    pass


class IndexOutOfRange(BiflagError):
    pass


class InvalidFirstComponent(BiflagError):
    pass


def _minimum(mask):
    return (mask & -mask).bit_length()


class SplitBiflag:
    """A biflag of M split at its first gap index s, with the sentinels
    T_0|G_0 = S_s|F_s and T_{l+1}|G_{l+1} = [N]|0."""

    def __init__(self, M, first, second):
        self.M = M
        self.first = list(first)
        self.second = list(second)
        self.s = len(self.first)
        self.l = len(self.second)
        full = M.full
        Ss = self.first[-1][0] if self.first else 0
        self.closure_Ssc = M.closure(full & ~Ss)
        self.a = M.rank(self.closure_Ssc)

    def chain(self):
        return self.first + self.second

    def T(self, i):
        if i == 0:
            return self.first[-1] if self.first else (0, self.M.full)
        if i == self.l + 1:
            return (self.M.full, 0)
        return self.second[i - 1]


def split_at_first_gap(M, chain):
    chain = list(chain)
    gaps = sorted(gap_indices(M.n, chain))
    if not gaps:
        raise NotABiflag("chain has no gap index")
    for S, F in chain:
        if not M.is_flat(F):
            raise NotABiflag("%s is not a flat" % (mask_to_set(F),))
    s = gaps[0]
    return SplitBiflag(M, chain[:s], chain[s:])


def is_lex_decreasing(split, at=None):
    """min(closure(S_s^c) \\ G_{i+1}) in G_i, for one index or all of
    0..l; index 0 holds automatically."""
    if at is not None:
        if not 0 <= at <= split.l:
            raise IndexOutOfRange("index %d outside 0..%d" % (at, split.l))
        gi = split.T(at)[1]
        gnext = split.T(at + 1)[1]
        rem = split.closure_Ssc & ~gnext
        if rem == 0:
            return True
        return bool(gi & (1 << (_minimum(rem) - 1)))
    return all(is_lex_decreasing(split, at=i) for i in range(split.l + 1))


def dyck_profile(split):
    """Per index i = 1..l, the pair (rk(closure(S_s^c) & G_i), rk(T_i^c));
    asserts the strict-decrease and sandwich inequalities."""
    if not is_lex_decreasing(split):
        raise NotLexDecreasing("profile is only defined for lexicographically "
                               "decreasing biflags")
    M, a = split.M, split.a
    full = M.full
    out = []
    prev = a
    for i in range(1, split.l + 1):
        Ti, Gi = split.T(i)
        inter = M.rank(split.closure_Ssc & Gi)
        tci = M.rank(full & ~Ti)
        assert inter < prev
        assert tci <= inter <= a - i
        out.append((inter, tci))
        prev = inter
    return out


def expansion_index(split):
    """The smallest 1 <= i <= l+1 with rk(T_i^c) < a - l, and the pivot
    element e = min(closure(S_s^c) \\ G_i)."""
    M, full = split.M, split.M.full
    target = split.a - split.l
    for i in range(1, split.l + 2):
        Ti, Gi = split.T(i)
        if M.rank(full & ~Ti) < target:
            rem = split.closure_Ssc & ~Gi
            return i, _minimum(rem)
    raise BiflagError("no expansion index; rk(T_{l+1}^c) = 0 should qualify")


def _insertable(chain, p):
    """Whether biflat p can be inserted into the strictly increasing chain,
    and the resulting chain if so."""
    out = []
    placed = False
    for q in chain:
        if q == p:
            return None
        if not placed and bisubset_leq(p, q) and p != q:
            out.append(p)
            placed = True
        out.append(q)
    if not placed:
        out.append(p)
    return out if is_chain(out) else None


def canonical_expansion(split):
    """The signed square-free rewriting of x_chain * (gammabar - v_{a-l}^-)
    with the representative gammabar_e: returns (e, pos, neg) where pos and
    neg are sets of chains (tuples of biflats)."""
    if not is_lex_decreasing(split):
        raise NotLexDecreasing("canonical expansion needs a lexicographically "
                               "decreasing biflag")
    M, full = split.M, split.M.full
    target = split.a - split.l
    i, e = expansion_index(split)
    ebit = 1 << (e - 1)
    chain = split.chain()
    pos, neg = set(), set()
    for U, H in proper_biflats(M):
        rkU = M.rank(full & ~U)
        if rkU < target and (H & ebit) and H != full:
            bucket = pos
        elif rkU >= target and not (H & ebit):
            bucket = neg
        else:
            continue
        new = _insertable(chain, (U, H))
        if new is None:
            continue
        if gap_indices(M.n, new):
            bucket.add(tuple(new))
    return e, pos, neg


def family_sets(M, first, l):
    """All the set-level data of the cancellation argument for the first
    component `first` and second components of length l: the family A of
    lexicographically decreasing biflags, its partition A_1..A_{l+1} by
    first low-rank index, the length-(l+1) family A', the pos/neg images,
    and the subfamily B of pos(A_1) whose inserted flat contains
    closure(S_s^c)."""
    first = list(first)
    s = len(first)
    if first:
        gaps = gap_indices(M.n, first)
        if any(g < s for g in gaps):
            raise InvalidFirstComponent("first component has a gap before its end")
        for S, F in first:
            if not M.is_flat(F):
                raise InvalidFirstComponent("%s is not a flat" % (mask_to_set(F),))
    base = SplitBiflag(M, first, [])
    a = base.a
    full = M.full
    Ss = first[-1][0] if first else 0

    rays = proper_biflats(M)

    def seconds(length):
        """Second components: chains of biflats above S_s|F_s keeping the
        first gap at s and the whole biflag lexicographically decreasing."""
        found = []
        def extend(cur):
            if len(cur) == length:
                # the first gap must sit exactly at the end of `first`
                if (Ss | (cur[0][1] if cur else 0)) == full:
                    return
                split = SplitBiflag(M, first, cur)
                if is_lex_decreasing(split):
                    found.append(split)
                return
            last = cur[-1] if cur else (first[-1] if first else None)
            for p in rays:
                if last is not None and (p == last or not bisubset_leq(last, p)):
                    continue
                if not cur:
                    # gap at s: S_s union T_1 != [N]
                    if (Ss | p[1]) == full:
                        continue
                extend(cur + [p])
        extend([])
        return found

    A = seconds(l)
    Aprime = seconds(l + 1)

    def first_low_index(split):
        for j in range(1, split.l + 2):
            if M.rank(full & ~split.T(j)[0]) < a - l:
                return j
        return None

    parts = {j: [] for j in range(1, l + 2)}
    for split in A:
        parts[first_low_index(split)].append(split)

    pos_parts = {j: {} for j in range(1, l + 2)}
    neg_parts = {j: {} for j in range(1, l + 2)}
    for j, members in parts.items():
        for split in members:
            e, pos, neg = canonical_expansion(split)
            pos_parts[j][tuple(split.chain())] = pos
            neg_parts[j][tuple(split.chain())] = neg

    # B: in pos(A_1) the inserted biflat sits right after the first
    # component; it belongs to B when closure(S_s^c) lies in its flat
    B = set()
    cSsc = base.closure_Ssc
    for chain, pos in pos_parts[1].items():
        for new in pos:
            inserted = [p for p in new if p not in chain]
            assert len(inserted) == 1
            if (cSsc & ~inserted[0][1]) == 0:
                B.add(new)

    return {
        "a": a,
        "A": A,
        "parts": parts,
        "Aprime": Aprime,
        "pos_parts": pos_parts,
        "neg_parts": neg_parts,
        "B": B,
    }


def verify_cancellation(M, first, l):
    """Check the disjointness, emptiness, containment, partition, and
    signed-sum identities of the length-l cancellation step.  Returns a
    report dict with status and a witness on the first failure."""
    data = family_sets(M, first, l)
    l1 = l + 1
    pos_parts, neg_parts = data["pos_parts"], data["neg_parts"]

    def fail(check, witness):
        return {"status": "fail", "check": check, "witness": witness, "data": data}

    # pairwise disjointness across members of A
    all_pos, all_neg = {}, {}
    for j in range(1, l1 + 1):
        for chain, pos in pos_parts[j].items():
            for new in pos:
                if new in all_pos:
                    return fail("disjoint-pos", new)
                all_pos[new] = chain
        for chain, neg in neg_parts[j].items():
            for new in neg:
                if new in all_neg:
                    return fail("disjoint-neg", new)
                all_neg[new] = chain

    # neg of the last part is empty
    for chain, neg in neg_parts[l1].items():
        if neg:
            return fail("last-neg-empty", sorted(neg)[0])

    pos_union = {j: set().union(*pos_parts[j].values()) if pos_parts[j] else set()
                 for j in range(1, l1 + 1)}
    neg_union = {j: set().union(*neg_parts[j].values()) if neg_parts[j] else set()
                 for j in range(1, l1 + 1)}

    aprime_chains = {tuple(sp.chain()) for sp in data["Aprime"]}

    # the shifted containment and its characterized difference
    full = M.full
    a = data["a"]
    def first_low_of_chain(new):
        split = split_at_first_gap(M, list(new))
        for j in range(1, split.l + 2):
            if M.rank(full & ~split.T(j)[0]) < a - l:
                return j, split
        return None, split
    for j in range(1, l1):
        diff = pos_union[j + 1] - neg_union[j]
        if not neg_union[j] <= pos_union[j + 1]:
            return fail("neg-containment", sorted(neg_union[j] - pos_union[j + 1])[0])
        for new in diff:
            jj, split = first_low_of_chain(new)
            if not (split.s == len(first) and is_lex_decreasing(split)
                    and split.l == l + 1 and jj == j + 1):
                return fail("neg-containment-difference", new)
        expected = {tuple(sp.chain()) for sp in data["Aprime"]
                    if first_low_of_chain(tuple(sp.chain()))[0] == j + 1}
        if diff != expected:
            return fail("neg-containment-difference",
                        sorted(diff.symmetric_difference(expected))[0])

    # the partition identity for the next-length family
    B = data["B"]
    assembled = set(pos_union[1]) - B
    for j in range(1, l1):
        assembled |= pos_union[j + 1] - neg_union[j]
    if assembled != aprime_chains:
        return fail("partition", sorted(assembled.symmetric_difference(aprime_chains))[0])
    alt = (set(all_pos) - B) - set(all_neg)
    if alt != aprime_chains:
        return fail("partition-alt", sorted(alt.symmetric_difference(aprime_chains))[0])

    # the signed formal sum collapses onto A' plus B
    signed = Counter()
    for new in all_pos:
        signed[new] += 1
    for new in all_neg:
        signed[new] -= 1
    expected = Counter()
    for new in aprime_chains:
        expected[new] += 1
    for new in B:
        expected[new] += 1
    signed = {k: v for k, v in signed.items() if v}
    expected = {k: v for k, v in expected.items() if v}
    if signed != expected:
        bad = set(signed.items()).symmetric_difference(expected.items())
        return fail("signed-sum", sorted(bad)[0])

    return {"status": "pass", "data": data}


def gap_free_firsts(M, max_len=1):
    """Chains of proper biflats with no gap before their end, in increasing
    length, starting with the empty chain.  These are exactly the usable
    first components: the first gap of any completed biflag sits at the
    chain length or later."""
    out = [()]
    rays = proper_biflats(M)
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for cur in frontier:
            last = cur[-1] if cur else None
            for p in rays:
                if last is not None and (p == last or not bisubset_leq(last, p)):
                    continue
                cand = cur + (p,)
                if all(g >= len(cand) for g in gap_indices(M.n, list(cand))):
                    nxt.append(cand)
        out.extend(nxt)
        frontier = nxt
    return out


def lemma_suite(M, fan=None, max_first_len=1, with_min_dec=True):
    """Run the cancellation and vanishing checks over every gap-free first
    component up to the given length and every admissible l.  Yields one
    report dict per (first, l) pair."""
    if with_min_dec and fan is None:
        fan = projective_bundle_fan(M.n, M)
    for first in gap_free_firsts(M, max_first_len):
        a = SplitBiflag(M, list(first), []).a
        for l in range(a):
            rep = verify_cancellation(M, list(first), l)
            yield {"check": "cancellation", "first": first, "l": l,
                   "status": rep["status"],
                   "witness": rep.get("witness"), "detail": rep.get("check")}
            if with_min_dec:
                ok = verify_min_dec(M, fan, list(first), l)
                yield {"check": "vanishing-product", "first": first, "l": l,
                       "status": "pass" if ok else "fail", "witness": None}


def chain_to_cone(fan, chain):
    try:
        cone = tuple(sorted(fan.ray_index[p] for p in chain))
    except KeyError:
        return None
    return cone if cone in fan.cones else None


def verify_min_dec(M, fan, first, l):
    """Check that the sum of x_chain over the length-l lexicographically
    decreasing family, times prod_{i=1}^{a-l} (gammabar - v_i^-), vanishes."""
    first = list(first)
    base = SplitBiflag(M, first, [])
    if base.a == 0:
        # the first component is gap-free, so its monomial is already zero
        return chain_to_cone(fan, first) is None
    data = family_sets(M, first, l)
    terms = {}
    for sp in data["A"]:
        cone = chain_to_cone(fan, sp.chain())
        if cone is not None:
            terms[cone] = Fraction(1)
    elem = ChowElement(fan, len(first) + l, terms)
    sd = structural_divisors(fan, M)
    for i in range(1, base.a - l + 1):
        elem = multiply_by_divisor(elem, sd["gammabar"] - sd["vminus"][i])
    return is_zero_class(elem)


def verify_bundle_identity(N, M, fan=None):
    """The degree-r relation on the biflag fan of M: the Chern polynomial
    in delta, the product of (delta + u_j), and the product of
    (gammabar - v_j^-) all vanish and agree pairwise; additionally every
    restricted v_r^- coefficient is zero on this fan."""
    if fan is None:
        fan = projective_bundle_fan(N, M)
    sd = structural_divisors(fan, M)
    r = M.r
    us = sd["u"][1:]
    cs = elementary_symmetric_products(us)
    delta = sd["delta"]

    e1 = ChowElement(fan, r)
    for i in range(0, r + 1):
        term = cs[i]
        for _ in range(r - i):
            term = multiply_by_divisor(term, delta)
        e1 = e1 + term

    e2 = unit_class(fan)
    for j in range(1, r + 1):
        e2 = multiply_by_divisor(e2, delta + sd["u"][j])

    e3 = unit_class(fan)
    for j in range(1, r + 1):
        e3 = multiply_by_divisor(e3, sd["gammabar"] - sd["vminus"][j])

    checks = {}
    checks["chern-delta-polynomial"] = nonzero_pairing_witness(e1)
    checks["delta-u-product-difference"] = nonzero_pairing_witness(e1 - e2)
    checks["v-minus-product-difference"] = nonzero_pairing_witness(e2 - e3)
    vr = sd["vminus"][r]
    bad_ray = next((i for i, c in enumerate(vr.coeffs) if c != 0), None)
    checks["v-r-minus-restricts-to-zero"] = (
        None if bad_ray is None else fan.ray_labels[bad_ray])
    status = "pass" if all(w is None for w in checks.values()) else "fail"
    return {"status": status, "checks": checks, "fan": fan}
