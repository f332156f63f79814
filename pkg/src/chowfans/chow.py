"""Chow classes on the flag fans: formal rational sums of square-free cone
monomials, divisor multiplication through per-cone linear representatives,
degrees, pairings, graded bases, and transport maps.

Everything is exact; coefficients are fractions.Fraction throughout.
"""

from fractions import Fraction

from . import linalg
from .fans import Fan, check_balanced


SUPPORTED_FAMILIES = ("permutohedral", "bergman", "bipermutohedral",
                      "projective_bundle")


class ChowError(Exception):
    pass


class FanMismatch(ChowError):
    pass


class DegreeMismatch(ChowError):
    pass


class NonzeroOnLineality(ChowError):
    pass


class UnsupportedFan(ChowError):
    pass


class NotASubfan(ChowError):
    pass


class UnbalancedInput(ChowError):
    pass


class DegreeTooLow(ChowError):
    pass


class ChowElement:
    """Degree-k class written as a sum of square-free cone monomials."""

    def __init__(self, fan, degree, terms=None):
        self.fan = fan
        self.degree = degree
        self.terms = {}
        if terms:
            for cone, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[cone] = c

    def __add__(self, other):
        if self.fan is not other.fan or self.degree != other.degree:
            raise FanMismatch("cannot add classes of different fans or degrees")
        out = dict(self.terms)
        for cone, c in other.terms.items():
            v = out.get(cone, Fraction(0)) + c
            if v:
                out[cone] = v
            elif cone in out:
                del out[cone]
        return ChowElement(self.fan, self.degree, out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return ChowElement(self.fan, self.degree,
                           {c: v * s for c, v in self.terms.items()})

    __rmul__ = __mul__

    def is_empty(self):
        return not self.terms

    def __repr__(self):
        return "ChowElement(deg=%d, %d terms)" % (self.degree, len(self.terms))


class DivisorClass:
    """Degree-1 class given by a rational coefficient per ray."""

    def __init__(self, fan, coeffs):
        self.fan = fan
        self.coeffs = [Fraction(c) for c in coeffs]
        if len(self.coeffs) != len(fan.rays):
            raise FanMismatch("coefficient vector has wrong length")

    def __add__(self, other):
        if self.fan is not other.fan:
            raise FanMismatch("divisors on different fans")
        return DivisorClass(self.fan, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.fan is not other.fan:
            raise FanMismatch("divisors on different fans")
        return DivisorClass(self.fan, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return DivisorClass(self.fan, [a * s for a in self.coeffs])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1


class MinkowskiWeight:
    """Rational function on the dim-cones of a fan, assumed balanced."""

    def __init__(self, fan, dim, values, check=True):
        self.fan = fan
        self.dim = dim
        self.values = {c: Fraction(v) for c, v in values.items() if v != 0}
        if check:
            bad = check_balanced(fan, dim, self.values)
            if bad:
                raise UnbalancedInput("balancing fails at cone %r" % (bad[0],))

    def __eq__(self, other):
        return (isinstance(other, MinkowskiWeight) and self.fan is other.fan
                and self.dim == other.dim and self.values == other.values)


def unit_class(fan):
    return ChowElement(fan, 0, {(): Fraction(1)})


def fundamental_weight(fan):
    """Weight 1 on every maximal cone, with the balancing check run."""
    return MinkowskiWeight(fan, fan.top_dim, dict(fan.weight))


def linear_relation_class(fan, m):
    """Divisor a_rho = m(u_rho) for a functional m vanishing on lineality.
    Such classes are zero in the Chow ring."""
    m = [Fraction(x) for x in m]
    if len(m) != fan.ambient_dim:
        raise FanMismatch("functional has wrong length")
    for v in fan.lineality:
        if sum(a * b for a, b in zip(m, v)) != 0:
            raise NonzeroOnLineality("functional does not vanish on the lineality space")
    return DivisorClass(fan, [sum(a * b for a, b in zip(m, ray)) for ray in fan.rays])


def ray_class(fan, rho):
    coeffs = [Fraction(0)] * len(fan.rays)
    coeffs[rho] = Fraction(1)
    return DivisorClass(fan, coeffs)


def multiply_by_divisor(elem, D):
    if elem.fan is not D.fan:
        raise FanMismatch("element and divisor live on different fans")
    fan = elem.fan
    a = D.coeffs
    out = {}
    for cone, c in elem.terms.items():
        values = tuple(a[i] for i in cone)
        m = fan.solve_representative(cone, values)
        for rho in fan.cone_extensions(cone):
            coef = a[rho] - sum(mi * ri for mi, ri in zip(m, fan.rays[rho]))
            if coef == 0:
                continue
            key = tuple(sorted(cone + (rho,)))
            v = out.get(key, Fraction(0)) + c * coef
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return ChowElement(fan, elem.degree + 1, out)


def _ray_fanout(fan, cone, rho):
    """Expansion data for x_cone * x_rho when rho already lies in cone:
    list of (bigger cone, rational coefficient).  Cached on the fan."""
    cache = getattr(fan, "_fanout_cache", None)
    if cache is None:
        cache = fan._fanout_cache = {}
    key = (cone, rho)
    hit = cache.get(key)
    if hit is None:
        values = tuple(Fraction(int(i == rho)) for i in cone)
        m = fan.solve_representative(cone, values)
        hit = []
        for rho2 in fan.cone_extensions(cone):
            coef = Fraction(int(rho2 == rho)) - sum(
                mi * ri for mi, ri in zip(m, fan.rays[rho2]))
            if coef != 0:
                hit.append((tuple(sorted(cone + (rho2,))), coef))
        cache[key] = hit
    return hit


def multiply_by_ray(elem, rho):
    """elem * x_rho, with the cheap path for cones not containing rho."""
    fan = elem.fan
    cones = fan.cones
    out = {}
    for cone, c in elem.terms.items():
        if rho in cone:
            for key, coef in _ray_fanout(fan, cone, rho):
                v = out.get(key, Fraction(0)) + c * coef
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        else:
            key = tuple(sorted(cone + (rho,)))
            if key in cones:
                v = out.get(key, Fraction(0)) + c
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
    return ChowElement(fan, elem.degree + 1, out)


def multiply_by_monomial(elem, cone):
    for rho in sorted(cone):
        elem = multiply_by_ray(elem, rho)
    return elem


def multiply_elements(e1, e2):
    if e1.fan is not e2.fan:
        raise FanMismatch("elements on different fans")
    out = ChowElement(e1.fan, e1.degree + e2.degree)
    for cone, c in e2.terms.items():
        out = out + multiply_by_monomial(e1, cone) * c
    return out


def degree(elem):
    fan = elem.fan
    if elem.degree != fan.top_dim:
        raise DegreeMismatch("degree %d element on a top-dimension-%d fan"
                             % (elem.degree, fan.top_dim))
    total = Fraction(0)
    for cone, c in elem.terms.items():
        total += c * fan.weight[cone] / fan.cone_multiplicity(cone)
    return total


def pair(elem, tau):
    fan = elem.fan
    tau = tuple(sorted(tau))
    if elem.degree + len(tau) != fan.top_dim:
        raise DegreeMismatch("pairing degrees %d + %d != %d"
                             % (elem.degree, len(tau), fan.top_dim))
    return degree(multiply_by_monomial(elem, tau))


def pair_all(elem):
    """Pairings of elem against every complementary-dimension cone, as a
    dict cone -> value.  Shares work across cones with a common prefix of
    ray indices."""
    fan = elem.fan
    k = fan.top_dim - elem.degree
    if k < 0:
        raise DegreeMismatch("element degree above top dimension")
    out = {}
    nrays = len(fan.rays)
    def walk(cur_elem, prefix, next_ray):
        depth = len(prefix)
        if depth == k:
            if tuple(prefix) in fan.cones:
                out[tuple(prefix)] = degree(cur_elem)
            return
        for rho in range(next_ray, nrays - (k - depth - 1)):
            nxt = multiply_by_ray(cur_elem, rho)
            if nxt.is_empty():
                # the value is 0 for every completion; record cones only
                continue
            walk(nxt, prefix + [rho], rho + 1)
    walk(elem, [], 0)
    # fill in zeros for cones never reached
    for tau in fan.cones_of_dim(k):
        out.setdefault(tau, Fraction(0))
    return out


def is_zero_class(elem):
    fan = elem.fan
    if fan.family not in SUPPORTED_FAMILIES:
        raise UnsupportedFan("zero-testing by duality is only valid on the "
                             "four flag-fan families")
    if elem.degree > fan.top_dim:
        return True
    return nonzero_pairing_witness(elem) is None


def nonzero_pairing_witness(elem):
    """A complementary cone pairing nonzero with elem, or None."""
    fan = elem.fan
    k = fan.top_dim - elem.degree
    nrays = len(fan.rays)
    def walk(cur_elem, prefix, next_ray):
        depth = len(prefix)
        if depth == k:
            if tuple(prefix) in fan.cones and degree(cur_elem) != 0:
                return tuple(prefix)
            return None
        for rho in range(next_ray, nrays - (k - depth - 1)):
            nxt = multiply_by_ray(cur_elem, rho)
            if nxt.is_empty():
                continue
            w = walk(nxt, prefix + [rho], rho + 1)
            if w is not None:
                return w
        return None
    return walk(elem, [], 0)


def _pairing_matrix(fan, k):
    """Matrix of deg(x_sigma x_tau) over (k-cones) x ((top-k)-cones).
    Cached on the fan; the complementary degree reuses the transpose."""
    cache = getattr(fan, "_pairing_cache", None)
    if cache is None:
        cache = fan._pairing_cache = {}
    if k in cache:
        return cache[k]
    n = fan.top_dim
    if n - k in cache and n - k != k:
        rows_c, cols_c, mat_c = cache[n - k]
        mat = [[mat_c[j][i] for j in range(len(rows_c))] for i in range(len(cols_c))]
        cache[k] = (cols_c, rows_c, mat)
        return cache[k]
    rows = fan.cones_of_dim(k)
    cols = fan.cones_of_dim(n - k)
    col_index = {c: j for j, c in enumerate(cols)}
    mat = []
    for sigma in rows:
        pairings = pair_all(ChowElement(fan, k, {sigma: Fraction(1)}))
        mat.append([pairings[c] for c in cols])
    cache[k] = (rows, cols, mat)
    return cache[k]


def graded_basis(fan, k):
    """A set of k-cones whose monomials form a basis of the degree-k Chow
    group, together with their pairing (Gram) matrix against the basis
    cones of complementary degree."""
    if fan.family not in SUPPORTED_FAMILIES:
        raise UnsupportedFan("graded bases need Poincare duality")
    cache = getattr(fan, "_basis_cache", None)
    if cache is None:
        cache = fan._basis_cache = {}
    if k in cache:
        return cache[k]
    rows, cols, mat = _pairing_matrix(fan, k)
    basis_rows = _independent_rows(mat)
    basis_cols = _independent_rows([[mat[i][j] for i in range(len(rows))]
                                    for j in range(len(cols))])
    gram = [[mat[i][j] for j in basis_cols] for i in basis_rows]
    result = ([rows[i] for i in basis_rows], [cols[j] for j in basis_cols], gram)
    cache[k] = result
    return result


def _independent_rows(mat):
    """Indices of a maximal linearly independent subset of rows, taken
    greedily in order."""
    if not mat:
        return []
    ncols = len(mat[0])
    kept = []
    echelon = []
    pivots = []
    for idx, row in enumerate(mat):
        work = [Fraction(x) for x in row]
        for erow, p in zip(echelon, pivots):
            if work[p] != 0:
                f = work[p] / erow[p]
                for j in range(ncols):
                    work[j] -= f * erow[j]
        pcol = next((j for j in range(ncols) if work[j] != 0), None)
        if pcol is not None:
            kept.append(idx)
            echelon.append(work)
            pivots.append(pcol)
    return kept


def chow_dim(fan, k):
    return len(graded_basis(fan, k)[0])


def cap_product(weight, D):
    """Divisor cap Minkowski weight; the result is balanced (checked)."""
    fan = weight.fan
    if D.fan is not fan:
        raise FanMismatch("weight and divisor on different fans")
    a = D.coeffs
    out = {}
    for tau in fan.cones_of_dim(weight.dim - 1):
        total = Fraction(0)
        pending = []
        touched = False
        for rho in fan.cone_extensions(tau):
            sigma = tuple(sorted(tau + (rho,)))
            w = weight.values.get(sigma, Fraction(0))
            if w == 0:
                continue
            touched = True
            pending.append((rho, w))
        if not touched:
            continue
        m = fan.solve_representative(tau, tuple(a[i] for i in tau))
        for rho, w in pending:
            coef = a[rho] - sum(mi * ri for mi, ri in zip(m, fan.rays[rho]))
            total += coef * w
        if total:
            out[tau] = total
    return MinkowskiWeight(fan, weight.dim - 1, out)


def restrict_to_subfan(elem, subfan):
    """Restriction along an inclusion of fans, matching cones by ray label."""
    fan = elem.fan
    for lab in subfan.ray_labels:
        if lab not in fan.ray_index:
            raise NotASubfan("ray %r missing from the ambient fan" % (lab,))
    out = {}
    for cone, c in elem.terms.items():
        labs = [fan.ray_labels[i] for i in cone]
        try:
            target = tuple(sorted(subfan.ray_index[l] for l in labs))
        except KeyError:
            continue
        if target in subfan.cones:
            out[target] = c
    return ChowElement(subfan, elem.degree, out)


def restrict_divisor(D, subfan):
    fan = D.fan
    out = []
    for lab in subfan.ray_labels:
        if lab not in fan.ray_index:
            raise NotASubfan("ray %r missing from the ambient fan" % (lab,))
        out.append(D.coeffs[fan.ray_index[lab]])
    return DivisorClass(subfan, out)


def pullback_pi1(D, target):
    """Pull a divisor on the flag fan of [N] back along the first projection
    of a biflag fan: b_{S|T} = a_S."""
    fan = D.fan
    out = []
    for S, T in target.ray_labels:
        full = (1 << (fan.ambient_dim)) - 1
        if S == full:
            # e_{[N]|T} maps to the lineality of the base fan
            out.append(Fraction(0))
        else:
            out.append(D.coeffs[fan.ray_index[S]])
    return DivisorClass(target, out)


def negation_relabel(D):
    """Relabel a_S -> a_{S^c} on a flag fan of subsets (the ray map induced
    by negating the ambient space)."""
    fan = D.fan
    full = (1 << fan.ambient_dim) - 1
    out = [Fraction(0)] * len(fan.rays)
    for i, S in enumerate(fan.ray_labels):
        out[fan.ray_index[full & ~S]] = D.coeffs[i]
    return DivisorClass(fan, out)
