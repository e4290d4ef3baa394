"""The two Malvenuto-Reutenauer Hopf structures on ZS and their class quotients.

Elements are :class:`LinComb` objects. Basis tags:

* ``"perm"``   permutations (MR and MR')
* ``"syt"``    standard Young tableaux: [U] in PR, cl(U) in PR'
* ``"shsyt"``  standard shifted tableaux: <T> in SPR, scl(T) in SPR'
* ``"comp"``   compositions (NSym), ``"peakset"`` peak sets (Peak)

Tensor elements use pair keys and a dotted tag such as ``"shsyt.syt"``.
SPR and PR are stored in the tableau basis (images of the projections), so
equality is coefficient comparison. The SPR' and PR' class sums are stored by
their index tableau as well; :func:`expand_scl` and :func:`expand_cl` turn
them back into permutation sums.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import lru_cache
from itertools import combinations

from .combinat import (
    Composition,
    PeakSet,
    composition_of_subset,
    descent_set_of_composition,
    enumerate_partitions,
    refines,
    enumerate_peak_sets,
)
from .config import check_cap
from .freemodule import LinComb, bilinear
from .insertion import (
    Q_SW,
    cached_P_RS,
    cached_P_SW,
    knuth_class,
    rectify,
    shifted_knuth_class,
)
from .tableaux import (
    ShiftedTableau,
    YoungTableau,
    concat_after_shift,
    decompose_prefix,
    enumerate_ShSYT,
    enumerate_skew_ShSYT,
    peak_set_tableau,
    reading_word,
    row_tableau,
    strict_supersets,
    unmark,
)
from .words import (
    Permutation,
    descent_set,
    enumerate_permutations,
    inverse,
    peak_set_perm,
    restrict,
    shift,
    shuffle,
    standardize,
)

EMPTY_SH = ShiftedTableau()
EMPTY_YT = YoungTableau()


def as_comb(x, basis: str = "perm") -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Mapping):
        return LinComb(x, basis=basis)
    return LinComb.monomial(tuple(x) if basis == "perm" else x, basis=basis)


# --- MR and MR' ----------------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _mr_pair(w: Permutation, v: Permutation) -> tuple[Permutation, ...]:
    p, q = len(w), len(v)
    n = p + q
    out = []
    for A in combinations(range(1, n + 1), p):
        chosen = set(A)
        B = [x for x in range(1, n + 1) if x not in chosen]
        out.append(tuple(A[i - 1] for i in w) + tuple(B[i - 1] for i in v))
    return tuple(out)


def mr_product(a, b) -> LinComb:
    """Convolution product *: sum of uv with st(u)=w, st(v)=w' and disjoint alphabets."""
    return bilinear(lambda w, v: LinComb.from_keys(_mr_pair(w, v)), as_comb(a), as_comb(b), "perm")


def _split_values(w: Permutation):
    n = len(w)
    for i in range(n + 1):
        yield restrict(w, 1, i), standardize(restrict(w, i + 1, n))


def _split_positions(w: Permutation):
    for i in range(len(w) + 1):
        yield standardize(w[:i]), standardize(w[i:])


def mr_coproduct(a) -> LinComb:
    out = LinComb(basis="perm.perm")
    for w, c in as_comb(a).items():
        for pair in _split_values(w):
            out.add_term(pair, c)
    return out


def mr_prime_product(a, b) -> LinComb:
    """Shifted shuffle *': w shuffled with w' raised by |w|."""
    return bilinear(
        lambda w, v: LinComb.from_keys(shuffle(w, shift(v, len(w)))), as_comb(a), as_comb(b), "perm"
    )


def mr_prime_coproduct(a) -> LinComb:
    out = LinComb(basis="perm.perm")
    for w, c in as_comb(a).items():
        for pair in _split_positions(w):
            out.add_term(pair, c)
    return out


def eta(a) -> LinComb:
    return as_comb(a).map_keys(inverse)


def counit(a) -> int:
    return as_comb(a).get((), 0)


# --- class sums and projections --------------------------------------------------------


def pr_class(U: YoungTableau, cap: int | None = None) -> LinComb:
    """cl(U): the Knuth class of w(U) as a permutation sum."""
    return LinComb.from_keys(sorted(knuth_class(reading_word(U), cap)), basis="perm")


def spr_class(T: ShiftedTableau, cap: int | None = None) -> LinComb:
    """scl(T): the shifted Knuth class of w(T) as a permutation sum."""
    return LinComb.from_keys(sorted(shifted_knuth_class(reading_word(T), cap)), basis="perm")


@lru_cache(maxsize=None)
def _fiber_size(T: ShiftedTableau) -> int:
    return len(shifted_knuth_class(reading_word(T)))


@lru_cache(maxsize=None)
def _class_size(U: YoungTableau) -> int:
    return len(knuth_class(reading_word(U)))


def project_to_spr(a) -> LinComb:
    """MR -> SPR = MR/J_SK, w |-> <P_SW(w)>."""
    return as_comb(a).map_keys(cached_P_SW, basis="shsyt")


def project_to_pr(a) -> LinComb:
    """MR -> PR = MR/J_K, w |-> [P(w)]."""
    return as_comb(a).map_keys(cached_P_RS, basis="syt")


def pr_to_spr(x: Mapping) -> LinComb:
    """PR -> SPR, [U] |-> <P_SW(w(U))>."""
    return as_comb(x, "syt").map_keys(lambda U: cached_P_SW(reading_word(U)), basis="shsyt")


def expand_scl(x: Mapping) -> LinComb:
    """SPR' element in the scl basis -> permutation sum."""
    out = LinComb(basis="perm")
    for T, c in as_comb(x, "shsyt").items():
        out.iadd(spr_class(T), c)
    return out


def expand_cl(x: Mapping) -> LinComb:
    out = LinComb(basis="perm")
    for U, c in as_comb(x, "syt").items():
        out.iadd(pr_class(U), c)
    return out


class NotAClassSum(ValueError):
    """A permutation sum that is not constant on the requested classes."""


def _regroup(a: Mapping, key, size, basis: str) -> LinComb:
    groups: dict = {}
    for w, c in a.items():
        groups.setdefault(key(w), {})[w] = c
    out = LinComb(basis=basis)
    for k, members in groups.items():
        coeffs = set(members.values())
        if len(members) != size(k) or len(coeffs) != 1:
            raise NotAClassSum(f"coefficients on the class of {k!r} are not constant: {members}")
        out.add_term(k, coeffs.pop())
    return out


def regroup_scl(a) -> LinComb:
    """Write a permutation sum in the scl basis; raises if it is not a sum of whole classes."""
    return _regroup(as_comb(a), cached_P_SW, _fiber_size, "shsyt")


def regroup_cl(a) -> LinComb:
    return _regroup(as_comb(a), cached_P_RS, _class_size, "syt")


# --- SPR and PR structure maps ----------------------------------------------------------


def spr_module_action(x, y) -> LinComb:
    """Right PR-action on SPR, <T1> * [T2], through representatives w(T1), w(T2)."""
    out = LinComb(basis="shsyt")
    for T1, c1 in as_comb(x, "shsyt").items():
        for T2, c2 in as_comb(y, "syt").items():
            out.iadd(project_to_spr(mr_product(reading_word(T1), reading_word(T2))), c1 * c2)
    return out


def pr_product(x, y) -> LinComb:
    out = LinComb(basis="syt")
    for U1, c1 in as_comb(x, "syt").items():
        for U2, c2 in as_comb(y, "syt").items():
            out.iadd(project_to_pr(mr_product(reading_word(U1), reading_word(U2))), c1 * c2)
    return out


def spr_coproduct(x) -> LinComb:
    """Delta<T> = sum over k of <T'> (x) <rect(S)> where T = (T')_S, |T'| = k."""
    out = LinComb(basis="shsyt.shsyt")
    for T, c in as_comb(x, "shsyt").items():
        for k in range(T.size + 1):
            head, S = decompose_prefix(T, k)
            out.add_term((head, rectify(S) if S.size else EMPTY_SH), c)
    return out


def pr_coproduct(x) -> LinComb:
    out = LinComb(basis="syt.syt")
    for U, c in as_comb(x, "syt").items():
        for left, right in _split_values(reading_word(U)):
            out.add_term((cached_P_RS(left), cached_P_RS(right)), c)
    return out


def project_tensor(t: Mapping, left=project_to_spr, right=project_to_spr, basis: str = "") -> LinComb:
    """(f (x) g) on a tensor over permutations, with f, g projections."""
    out = LinComb(basis=basis)
    for (a, b), c in t.items():
        for ka, ca in left(LinComb.monomial(a, basis="perm")).items():
            for kb, cb in right(LinComb.monomial(b, basis="perm")).items():
                out.add_term((ka, kb), c * ca * cb)
    return out


def sprp_product(x, y) -> LinComb:
    """scl(T1) *' scl(T2) = sum of scl((T1)_S) over skew S on nu/shape(T1) with rect(S) = T2."""
    out = LinComb(basis="shsyt")
    for T1, c1 in as_comb(x, "shsyt").items():
        for T2, c2 in as_comb(y, "shsyt").items():
            out.iadd(_sprp_pair(T1, T2), c1 * c2)
    return out


@lru_cache(maxsize=None)
def _sprp_pair(T1: ShiftedTableau, T2: ShiftedTableau) -> LinComb:
    out = LinComb(basis="shsyt")
    if T2.size == 0:
        out.add_term(T1, 1)
        return out
    check_cap(T1.size + T2.size)
    for nu in strict_supersets(T1.shape, T2.size):
        for S in enumerate_skew_ShSYT(nu, T1.shape):
            if rectify(S) == T2:
                out.add_term(concat_after_shift(T1, S), 1)
    return out


def sprp_product_via_permutations(x, y) -> LinComb:
    """Same product computed as *' of the class sums, regrouped into classes."""
    return regroup_scl(mr_prime_product(expand_scl(x), expand_scl(y)))


def sprp_coproduct(x) -> LinComb:
    """Delta'(scl(T)) in the basis scl (x) cl, via Delta' of the permutation sum.

    The coefficients must be constant on (shifted class) x (Knuth class)
    blocks; anything else raises :class:`NotAClassSum`.
    """
    out = LinComb(basis="shsyt.syt")
    for T, c in as_comb(x, "shsyt").items():
        raw = mr_prime_coproduct(spr_class(T))
        groups: dict = {}
        for (a, b), m in raw.items():
            groups.setdefault((cached_P_SW(a), cached_P_RS(b)), {})[(a, b)] = m
        for (T1, U2), members in groups.items():
            coeffs = set(members.values())
            if len(members) != _fiber_size(T1) * _class_size(U2) or len(coeffs) != 1:
                raise NotAClassSum(f"split ({T1!r}, {U2!r}) of scl({T!r}) is not a block of classes")
            out.add_term((T1, U2), c * coeffs.pop())
    return out


# --- NSym and Peak inside MR ---------------------------------------------------------------


def iota_H(alpha: Composition, cap: int | None = None) -> LinComb:
    """D_{>=alpha}: permutations whose descent composition is coarser than alpha."""
    n = sum(alpha)
    return LinComb.from_keys(
        (w for w in enumerate_permutations(n, cap) if refines(tuple(alpha), composition_of_subset(descent_set(w)))),
        basis="perm",
    )


def iota_R(alpha: Composition, cap: int | None = None) -> LinComb:
    """D_alpha: permutations with descent composition exactly alpha."""
    D = descent_set_of_composition(tuple(alpha))
    return LinComb.from_keys((w for w in enumerate_permutations(D.n, cap) if descent_set(w) == D), basis="perm")


def iota(x: Mapping, basis: str = "R") -> LinComb:
    f = iota_R if basis == "R" else iota_H
    out = LinComb(basis="perm")
    for alpha, c in x.items():
        out.iadd(f(alpha), c)
    return out


def peak_sum(P: PeakSet, cap: int | None = None) -> LinComb:
    """Pi_P: the sum of permutations with peak set P."""
    return LinComb.from_keys((w for w in enumerate_permutations(P.n, cap) if peak_set_perm(w) == P), basis="perm")


@lru_cache(maxsize=None)
def _shsyt_by_peak(n: int) -> dict[PeakSet, tuple[ShiftedTableau, ...]]:
    out: dict[PeakSet, list[ShiftedTableau]] = {P: [] for P in enumerate_peak_sets(n)}
    for lam in enumerate_partitions(n, strict=True):
        for T in enumerate_ShSYT(lam):
            out[peak_set_tableau(T)].append(T)
    return {P: tuple(ts) for P, ts in out.items()}


def shsyt_with_peak(P: PeakSet) -> tuple[ShiftedTableau, ...]:
    return _shsyt_by_peak(P.n)[P]


def peak_embedding(P: PeakSet) -> LinComb:
    """eta(iota(Pi_P)) written in the scl basis: the sum of scl(T) over Peak(T) = P."""
    check_cap(P.n)
    return LinComb.from_keys(shsyt_with_peak(P), basis="shsyt")


# --- the sets S(T, V), S(T) and the maps j, Xi ----------------------------------------------


def frakS(T: ShiftedTableau, V: YoungTableau) -> frozenset[Permutation]:
    """{w : P_SW(w) = T, P(w^{-1}) = V}."""
    if T.size != V.size:
        raise ValueError("T and V must have the same size")
    check_cap(T.size)
    return frozenset(w for w in spr_class(T) if cached_P_RS(inverse(w)) == V)


@lru_cache(maxsize=None)
def frakS_T(T: ShiftedTableau, base: ShiftedTableau | None = None) -> frozenset[Permutation]:
    """{w : P_SW(w^{-1}) = base, |Q_SW(w^{-1})| = T}; base defaults to the row-filled T_lambda."""
    base = row_tableau(T.shape) if base is None else base
    if base.shape != T.shape:
        raise ValueError("base tableau must have the shape of T")
    check_cap(T.size)
    return frozenset(inverse(u) for u in spr_class(base) if unmark(Q_SW(u)) == T)


def j_map(x, base_of=None) -> LinComb:
    """j: SPR -> PR, <T> |-> 2^{l(lambda)} sum over w in S(T) of [P(w)].

    ``base_of(shape)`` may replace T_lambda by another fixed tableau of that shape.
    """
    out = LinComb(basis="syt")
    for T, c in as_comb(x, "shsyt").items():
        base = base_of(T.shape) if base_of else None
        scale = 2 ** len(T.shape)
        for w in frakS_T(T, base):
            out.add_term(cached_P_RS(w), c * scale)
    return out


def xi_map(x) -> LinComb:
    """Xi: PR' -> SPR', cl(U) |-> sum over strict lambda of 2^{l(lambda)} sum_{w in S(T_lambda, U)} scl(|Q_SW(w)|)."""
    out = LinComb(basis="shsyt")
    for U, c in as_comb(x, "syt").items():
        for lam in enumerate_partitions(U.size, strict=True):
            scale = 2 ** len(lam)
            for w in frakS(row_tableau(lam), U):
                out.add_term(unmark(Q_SW(w)), c * scale)
    return out


def class_pairing(x, y) -> int:
    """<[U], scl(T)> = 1 iff the Knuth class of U sits inside the shifted class of T."""
    total = 0
    y = as_comb(y, "shsyt")
    for U, c in as_comb(x, "syt").items():
        total += c * y.get(cached_P_SW(reading_word(U)), 0)
    return total


def spr_row_sum(lam) -> LinComb:
    """Image of Q_lambda in SPR: sum of <T> over ShSYT(lambda)."""
    return LinComb.from_keys(enumerate_ShSYT(lam), basis="shsyt")


def pr_row_sum(lam) -> LinComb:
    """Image of s_lambda in PR: sum of [U] over SYT(lambda)."""
    from .tableaux import enumerate_SYT

    return LinComb.from_keys(enumerate_SYT(lam), basis="syt")


def all_shsyt(n: int) -> Iterable[ShiftedTableau]:
    for lam in enumerate_partitions(n, strict=True):
        yield from enumerate_ShSYT(lam)


def all_syt(n: int) -> Iterable[YoungTableau]:
    from .tableaux import enumerate_SYT

    for lam in enumerate_partitions(n):
        yield from enumerate_SYT(lam)


