"""QSym (M, F), NSym (H, R), the peak algebra and peak functions.

Compositions key every basis. Peak-algebra elements use the basis tag
``"peakset"`` (the sums Pi_P); elements of Peak* written in the peak
functions use ``"K"``. Everything can be brought to F coordinates, which is
the common currency for comparisons.
"""
from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache
from itertools import product

from .combinat import (
    Composition,
    DescentSet,
    PeakSet,
    composition_of_subset,
    descent_set_of_composition,
    enumerate_compositions,
    enumerate_peak_sets,
    peak_set,
    peak_set_of_composition,
    triangle,
    union_shift,
)
from .freemodule import LinComb
from .words import descent_set, shift, shuffle


def _mask(alpha: Composition) -> int:
    return descent_set_of_composition(alpha).mask


def _comp(n: int, mask: int) -> Composition:
    return composition_of_subset(DescentSet(n, tuple(i for i in range(1, n) if mask >> i & 1)))


def _supersets(n: int, mask: int):
    free = [i for i in range(1, n) if not mask >> i & 1]
    for bits in product((0, 1), repeat=len(free)):
        extra = 0
        for i, b in zip(free, bits):
            if b:
                extra |= 1 << i
        yield mask | extra, sum(bits)


def _subsets(n: int, mask: int):
    on = [i for i in range(1, n) if mask >> i & 1]
    for bits in product((0, 1), repeat=len(on)):
        sub = 0
        for i, b in zip(on, bits):
            if b:
                sub |= 1 << i
        yield sub, len(on) - sum(bits)


def c_of(w) -> Composition:
    """Descent composition c(w) of a permutation."""
    return composition_of_subset(descent_set(w))


def F(alpha) -> LinComb:
    return LinComb.monomial(tuple(alpha), basis="F")


def M(alpha) -> LinComb:
    return LinComb.monomial(tuple(alpha), basis="M")


# --- QSym ---------------------------------------------------------------------------


def F_to_M(x: Mapping) -> LinComb:
    """F_alpha = sum of M_beta over beta refining alpha."""
    out = LinComb(basis="M")
    for alpha, c in x.items():
        n = sum(alpha)
        if n == 0:
            out.add_term((), c)
            continue
        for m, _ in _supersets(n, _mask(alpha)):
            out.add_term(_comp(n, m), c)
    return out


def M_to_F(x: Mapping) -> LinComb:
    """Moebius inversion of :func:`F_to_M`."""
    out = LinComb(basis="F")
    for alpha, c in x.items():
        n = sum(alpha)
        if n == 0:
            out.add_term((), c)
            continue
        for m, k in _supersets(n, _mask(alpha)):
            out.add_term(_comp(n, m), c * (-1) ** k)
    return out


def to_F(x: LinComb) -> LinComb:
    if x.basis == "M":
        return M_to_F(x)
    if x.basis in ("F", ""):
        return LinComb(x, basis="F")
    if x.basis == "K":
        return K_to_F(x)
    raise ValueError(f"cannot read basis {x.basis!r} as QSym")


def canonical_representative(alpha: Composition) -> tuple[int, ...]:
    """The permutation with descent composition alpha whose runs are blocks of consecutive values, top block first."""
    n = sum(alpha)
    out, top = [], n
    for part in alpha:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(out)


def complement_representative(alpha: Composition) -> tuple[int, ...]:
    """Another permutation with descent composition alpha: the value-complement of
    the canonical word for the complementary descent set."""
    n = sum(alpha)
    if n == 0:
        return ()
    m = _mask(alpha) ^ ((1 << n) - 2)
    return tuple(n + 1 - v for v in canonical_representative(_comp(n, m)))


@lru_cache(maxsize=None)
def _f_product(alpha: Composition, beta: Composition, rep: str) -> tuple[tuple[Composition, int], ...]:
    pick = canonical_representative if rep == "canonical" else complement_representative
    u, v = pick(alpha), pick(beta)
    out = LinComb(basis="F")
    for w in shuffle(u, shift(v, len(u))):
        out.add_term(c_of(w), 1)
    return tuple(out.items())


def qsym_product(x: LinComb, y: LinComb, rep: str = "canonical") -> LinComb:
    """Product in QSym via shuffles of representatives; result in the F basis."""
    x, y = to_F(x), to_F(y)
    out = LinComb(basis="F")
    for a, ca in x.items():
        for b, cb in y.items():
            for gamma, m in _f_product(a, b, rep):
                out.add_term(gamma, ca * cb * m)
    return out


def pi_prime(a: Mapping) -> LinComb:
    """MR' -> QSym, w |-> F_{c(w)}."""
    out = LinComb(basis="F")
    for w, c in a.items():
        out.add_term(c_of(w), c)
    return out


def pr_to_qsym(x: Mapping) -> LinComb:
    """PR -> QSym, [U] |-> F_{c(U)}."""
    from .tableaux import composition_of_tableau

    out = LinComb(basis="F")
    for U, c in x.items():
        out.add_term(composition_of_tableau(U), c)
    return out


# --- NSym ---------------------------------------------------------------------------


def H(alpha) -> LinComb:
    return LinComb.monomial(tuple(alpha), basis="H")


def R(alpha) -> LinComb:
    return LinComb.monomial(tuple(alpha), basis="R")


def H_to_R(x: Mapping) -> LinComb:
    """H_alpha = sum of R_beta over beta coarser than alpha."""
    out = LinComb(basis="R")
    for alpha, c in x.items():
        n = sum(alpha)
        if n == 0:
            out.add_term((), c)
            continue
        for m, _ in _subsets(n, _mask(alpha)):
            out.add_term(_comp(n, m), c)
    return out


def R_to_H(x: Mapping) -> LinComb:
    """R_alpha = sum over beta coarser than alpha of (-1)^{l(alpha)-l(beta)} H_beta."""
    out = LinComb(basis="H")
    for alpha, c in x.items():
        n = sum(alpha)
        if n == 0:
            out.add_term((), c)
            continue
        for m, k in _subsets(n, _mask(alpha)):
            out.add_term(_comp(n, m), c * (-1) ** k)
    return out


def to_H(x: LinComb) -> LinComb:
    if x.basis == "R":
        return R_to_H(x)
    if x.basis in ("H", ""):
        return LinComb(x, basis="H")
    raise ValueError(f"cannot read basis {x.basis!r} as NSym")


def to_R(x: LinComb) -> LinComb:
    if x.basis == "H":
        return H_to_R(x)
    if x.basis in ("R", ""):
        return LinComb(x, basis="R")
    if x.basis == "peakset":
        return peak_to_nsym(x)
    raise ValueError(f"cannot read basis {x.basis!r} as NSym")


def nsym_product(x: LinComb, y: LinComb) -> LinComb:
    """Product in the H basis: H_alpha H_beta = H_{alpha beta}."""
    x, y = to_H(x), to_H(y)
    out = LinComb(basis="H")
    for a, ca in x.items():
        for b, cb in y.items():
            out.add_term(a + b, ca * cb)
    return out


def nsym_coproduct(x: LinComb) -> LinComb:
    """Delta(H_n) = sum H_k (x) H_{n-k}, extended multiplicatively."""
    out = LinComb(basis="H.H")
    for alpha, c in to_H(x).items():
        for split in product(*(range(a + 1) for a in alpha)):
            left = tuple(k for k in split if k)
            right = tuple(a - k for a, k in zip(alpha, split) if a - k)
            out.add_term((left, right), c)
    return out


def pairing_qsym_nsym(x: LinComb, f: LinComb) -> int:
    """<H_alpha, M_beta> = <R_alpha, F_beta> = delta."""
    if x.basis == "H":
        f = F_to_M(to_F(f)) if f.basis != "M" else f
    else:
        x, f = to_R(x), to_F(f)
    return sum(c * f.get(k, 0) for k, c in x.items())


# --- peak functions and the peak algebra --------------------------------------------------


def peak_K_M(P: PeakSet) -> LinComb:
    """K_P = sum of 2^{l(alpha)} M_alpha over P inside D(alpha) union (D(alpha)+1)."""
    out = LinComb(basis="M")
    Ps = set(P.elems)
    for alpha in enumerate_compositions(P.n):
        if Ps <= union_shift(descent_set_of_composition(alpha)):
            out.add_term(alpha, 2 ** len(alpha))
    return out


def peak_K_F(P: PeakSet) -> LinComb:
    """K_P = 2^{|P|+1} sum of F_alpha over P inside D(alpha) sym-diff (D(alpha)+1)."""
    out = LinComb(basis="F")
    Ps = set(P.elems)
    for alpha in enumerate_compositions(P.n):
        if Ps <= triangle(descent_set_of_composition(alpha)):
            out.add_term(alpha, 2 ** (len(Ps) + 1))
    return out


@lru_cache(maxsize=None)
def _peak_K(P: PeakSet) -> tuple:
    return tuple(peak_K_F(P).items())


def peak_K(P: PeakSet, basis: str = "F") -> LinComb:
    if basis == "M":
        return peak_K_M(P)
    return LinComb(_peak_K(P), basis="F")


def K_to_F(x: Mapping) -> LinComb:
    out = LinComb(basis="F")
    for P, c in x.items():
        out.iadd(peak_K(P), c)
    return out


def vartheta_map(x: LinComb) -> LinComb:
    """Descent-to-peak map QSym -> Peak*, F_alpha |-> K_{Peak(alpha)}; result in the K basis."""
    out = LinComb(basis="K")
    for alpha, c in to_F(x).items():
        out.add_term(peak_set_of_composition(alpha) if alpha else PeakSet(0), c)
    return out


def theta_H(alpha: Composition) -> LinComb:
    """Theta(H_alpha) = 2^{l(alpha)} sum of Pi_P over P inside D(alpha) union (D(alpha)+1)."""
    D = descent_set_of_composition(tuple(alpha))
    cup = union_shift(D)
    return LinComb({P: 2 ** len(alpha) for P in enumerate_peak_sets(D.n) if set(P.elems) <= cup}, basis="peakset")


def theta_R(alpha: Composition) -> LinComb:
    """Theta(R_alpha) = sum of 2^{|P|+1} Pi_P over P inside D(alpha) sym-diff (D(alpha)+1)."""
    D = descent_set_of_composition(tuple(alpha))
    tri = triangle(D)
    return LinComb({P: 2 ** (len(P) + 1) for P in enumerate_peak_sets(D.n) if set(P.elems) <= tri}, basis="peakset")


def Theta_map(x: LinComb, route: str | None = None) -> LinComb:
    """Descent-to-peak transform NSym -> Peak.

    ``route`` picks the defining formula: ``"H"`` or ``"R"``; by default the
    basis of ``x`` decides. Both routes agree through the H/R change of basis.
    """
    route = route or ("R" if x.basis == "R" else "H")
    x = to_R(x) if route == "R" else to_H(x)
    f = theta_R if route == "R" else theta_H
    out = LinComb(basis="peakset")
    for alpha, c in x.items():
        out.iadd(f(alpha), c)
    return out


def peak_to_nsym(x: Mapping) -> LinComb:
    """Peak -> NSym in the R basis: Pi_P = sum of R_alpha with Peak(alpha) = P."""
    out = LinComb(basis="R")
    for P, c in x.items():
        for alpha in enumerate_compositions(P.n):
            if peak_set_of_composition(alpha) == P:
                out.add_term(alpha, c)
    return out


def peak_sets_of(n: int) -> tuple[PeakSet, ...]:
    return enumerate_peak_sets(n)


def peak_of_descents(D: DescentSet) -> PeakSet:
    return peak_set(D)
