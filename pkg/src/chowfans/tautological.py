"""The named degree-one classes on the flag and biflag fans, and the
symmetric-function machinery (Chern, Segre, twisted Chern) built on them.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .chow import (ChowElement, DivisorClass, multiply_by_divisor,
                   multiply_elements, negation_relabel, unit_class)
from .matroid import LoopyMatroid, popcount


def structural_divisors(fan, M, j=1):
    """The classes gamma, gammabar, delta, u_1..u_r, v_1^+..v_r^+, and
    v_1^-..v_r^- on a biflag fan whose ray labels are biflats of M.

    gamma_j sums the rays with j in S and S proper; gammabar_j those with
    j in F and F proper; delta = gamma + gammabar minus the rays with both
    parts proper.  u_i adds the rays with rk(S^c) < i, S proper, minus
    gamma; v_i^+/v_i^- split delta + u_i - gammabar into its F = [N] and
    F proper parts.
    """
    if M.loops():
        raise LoopyMatroid("structural divisors need a loopless matroid")
    full = M.full
    nrays = len(fan.rays)
    jbit = 1 << (j - 1)
    gamma = [Fraction(0)] * nrays
    gammabar = [Fraction(0)] * nrays
    both_proper = [Fraction(0)] * nrays
    low_rank = [[Fraction(0)] * nrays for _ in range(M.r + 1)]
    vplus = [[Fraction(0)] * nrays for _ in range(M.r + 1)]
    vminus = [[Fraction(0)] * nrays for _ in range(M.r + 1)]
    for idx, (S, F) in enumerate(fan.ray_labels):
        s_proper = S != full
        f_proper = F != full
        if s_proper and (S & jbit):
            gamma[idx] = Fraction(1)
        if f_proper and (F & jbit):
            gammabar[idx] = Fraction(1)
        if s_proper and f_proper:
            both_proper[idx] = Fraction(1)
        rk = M.rank(full & ~S)
        for i in range(1, M.r + 1):
            if s_proper and rk < i:
                low_rank[i][idx] = Fraction(1)
                if not f_proper:
                    vplus[i][idx] = Fraction(1)
            if s_proper and f_proper and rk >= i:
                vminus[i][idx] = Fraction(1)
    g = DivisorClass(fan, gamma)
    gb = DivisorClass(fan, gammabar)
    delta = DivisorClass(fan, [gamma[i] + gammabar[i] - both_proper[i]
                               for i in range(nrays)])
    out = {
        "gamma": g,
        "gammabar": gb,
        "delta": delta,
        "u": [None] + [DivisorClass(fan, low_rank[i]) - g for i in range(1, M.r + 1)],
        "vplus": [None] + [DivisorClass(fan, vplus[i]) for i in range(1, M.r + 1)],
        "vminus": [None] + [DivisorClass(fan, vminus[i]) for i in range(1, M.r + 1)],
    }
    return out


def w_divisors(fan, M):
    """The classes w_1..w_r and alpha on the flag fan of subsets of [N].

    alpha is taken in the same ray-sum normalization as gamma: the sum of
    the rays whose subset contains 1, which pulls back to gamma under the
    first projection at the level of coefficient vectors.
    """
    if M.loops():
        raise LoopyMatroid("w classes need a loopless matroid")
    full = M.full
    nrays = len(fan.rays)
    alpha = [Fraction(1) if (S & 1) and S != full else Fraction(0)
             for S in fan.ray_labels]
    alpha = DivisorClass(fan, alpha)
    ws = [None]
    for i in range(1, M.r + 1):
        coeffs = [Fraction(1) if S != full and M.rank(full & ~S) < i else Fraction(0)
                  for S in fan.ray_labels]
        ws.append(DivisorClass(fan, coeffs) - alpha)
    return {"alpha": alpha, "w": ws}


def elementary_symmetric_products(divisors):
    """ChowElements e_0, e_1, ..., e_r of a list of divisors, each e_i
    expanded as the sum over i-subsets of left-to-right products."""
    fan = divisors[0].fan
    out = [unit_class(fan)]
    r = len(divisors)
    for i in range(1, r + 1):
        acc = ChowElement(fan, i)
        for combo in combinations(range(r), i):
            term = unit_class(fan)
            for idx in combo:
                term = multiply_by_divisor(term, divisors[idx])
            acc = acc + term
        out.append(acc)
    return out


def chern_classes(fan, M, via="identity"):
    """c_0..c_r on a flag fan of subsets, as elementary symmetric
    polynomials of the w classes; via='negation' relabels each w through
    the ambient negation first."""
    wd = w_divisors(fan, M)
    ws = wd["w"][1:]
    if via == "negation":
        ws = [negation_relabel(w) for w in ws]
    elif via != "identity":
        raise ValueError("via must be 'identity' or 'negation'")
    return elementary_symmetric_products(ws)


def segre_classes(cs, n):
    """s_0..s_n from c_0..c_r via the inverse-series recursion."""
    fan = cs[0].fan
    r = len(cs) - 1
    out = [unit_class(fan)]
    for i in range(1, n + 1):
        acc = ChowElement(fan, i)
        for j in range(1, min(i, r) + 1):
            acc = acc - multiply_elements(cs[j], out[i - j])
        out.append(acc)
    return out


def twist_classes(cs, delta, lam):
    """c_i' = sum_j (-1)^j C(r-i+j, j) c_{i-j} (lam*delta)^j."""
    fan = cs[0].fan
    r = len(cs) - 1
    d = delta * lam
    out = [unit_class(fan)]
    for i in range(1, r + 1):
        acc = ChowElement(fan, i)
        for j in range(0, i + 1):
            term = cs[i - j]
            for _ in range(j):
                term = multiply_by_divisor(term, d)
            sign = -1 if j % 2 else 1
            acc = acc + term * (sign * comb(r - i + j, j))
        out.append(acc)
    return out
