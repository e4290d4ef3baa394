"""Schur, Schur P/Q and modified Schur functions inside QSym, plus the maps
theta, phi and the expansions that relate them.

Symmetric functions (Lambda) and the subring Omega have no separate
representation: an element is its F-expansion in QSym. Decomposition into a
named basis is exact linear algebra over the rationals in F coordinates.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .combinat import (
    DescentSet,
    PeakSet,
    enumerate_partitions,
    enumerate_peak_sets,
    is_partition,
    peak_set,
    triangle,
)
from .config import check_cap
from .freemodule import LinComb
from .insertion import rectify
from .qsym import peak_K, peak_to_nsym, qsym_product, to_F, to_H, to_R
from .tableaux import (
    ShiftedTableau,
    composition_of_tableau,
    descent_set_tableau,
    enumerate_ShSSYT_pm,
    enumerate_ShSYT,
    enumerate_SSYT,
    enumerate_SSYT_pm,
    enumerate_SYT,
    enumerate_skew_ShSYT,
    markings,
    peak_set_tableau,
    strict_supersets,
    weight,
)


def _frozen(x: LinComb) -> tuple:
    return tuple(sorted(x.items()))


def _sum_F(tableaux) -> LinComb:
    out = LinComb(basis="F")
    for T in tableaux:
        out.add_term(composition_of_tableau(T), 1)
    return out


# --- the families -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _schur(lam) -> tuple:
    return _frozen(_sum_F(enumerate_SYT(lam)))


@lru_cache(maxsize=None)
def _schurP(lam) -> tuple:
    return _frozen(_sum_F(S for T in enumerate_ShSYT(lam) for S in markings(T)))


@lru_cache(maxsize=None)
def _modified(lam) -> tuple:
    return _frozen(_sum_F(S for T in enumerate_SYT(lam) for S in markings(T)))


def schur(lam) -> LinComb:
    """s_lambda as the F-sum over standard Young tableaux."""
    return LinComb(_schur(tuple(lam)), basis="F")


def schurP(lam) -> LinComb:
    """P_lambda as the F-sum over marked-standard shifted tableaux."""
    lam = tuple(lam)
    if not is_partition(lam, strict=True):
        raise ValueError(f"{lam} is not a strict partition")
    return LinComb(_schurP(lam), basis="F")


def schurQ(lam) -> LinComb:
    return 2 ** len(lam) * schurP(lam)


def modified_schur(lam) -> LinComb:
    """S_lambda as the F-sum over marked-standard unshifted tableaux."""
    return LinComb(_modified(tuple(lam)), basis="F")


def h(n: int) -> LinComb:
    return LinComb.monomial((n,) if n else (), basis="F")


def q(n: int) -> LinComb:
    return schurQ((n,)) if n else LinComb.monomial((), basis="F")


def h_product(lam) -> LinComb:
    out = LinComb.monomial((), basis="F")
    for part in lam:
        out = qsym_product(out, h(part))
    return out


def q_product(lam) -> LinComb:
    out = LinComb.monomial((), basis="F")
    for part in lam:
        out = qsym_product(out, q(part))
    return out


# --- exact decomposition --------------------------------------------------------------


BASES = ("schur", "schurP", "schurQ", "K", "h", "q")


def _basis(name: str, n: int) -> list[tuple[object, LinComb]]:
    if name == "schur":
        return [(lam, schur(lam)) for lam in enumerate_partitions(n)]
    if name == "schurP":
        return [(lam, schurP(lam)) for lam in enumerate_partitions(n, strict=True)]
    if name == "schurQ":
        return [(lam, schurQ(lam)) for lam in enumerate_partitions(n, strict=True)]
    if name == "K":
        return [(P, peak_K(P)) for P in enumerate_peak_sets(n)]
    if name == "h":
        return [(lam, h_product(lam)) for lam in enumerate_partitions(n)]
    if name == "q":
        return [(lam, q_product(lam)) for lam in enumerate_partitions(n, strict=True)]
    raise ValueError(f"unknown basis {name!r}; expected one of {BASES}")


@dataclass
class Decomposition:
    coeffs: LinComb
    residual: LinComb

    @property
    def ok(self) -> bool:
        return not self.residual


def _solve(vectors: list[LinComb], target: LinComb) -> tuple[list[Fraction], LinComb]:
    """Exact Gauss-Jordan solve of sum c_i v_i = target in F coordinates."""
    coords = sorted({k for v in vectors for k in v} | set(target))
    m = len(vectors)
    rows = []
    for k in coords:
        row = [Fraction(0)] * (m + 1)
        for j, v in enumerate(vectors):
            row[j] = Fraction(v.get(k, 0))
        row[m] = Fraction(target.get(k, 0))
        rows.append(row)
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    sol = [Fraction(0)] * m
    for i, col in enumerate(pivots):
        sol[col] = rows[i][m]
    residual = LinComb(target, basis="F")
    for j, v in enumerate(vectors):
        if sol[j]:
            for k, c in v.items():
                residual[k] = residual.get(k, 0) - sol[j] * c
    residual = LinComb({k: c for k, c in residual.items() if c}, basis="F")
    return sol, residual


def decompose(x: LinComb, basis: str) -> Decomposition:
    """Coordinates of ``x`` in a named basis of (a subspace of) QSym.

    Non-members come back with a nonzero residual (x minus the best pivot
    solution) rather than raising. Non-integral coefficients are kept as
    fractions in ``coeffs`` so the caller can see them.
    """
    x = to_F(x)
    by_degree: dict[int, LinComb] = {}
    for alpha, c in x.items():
        by_degree.setdefault(sum(alpha), LinComb(basis="F")).add_term(alpha, c)
    coeffs = LinComb(basis=basis)
    residual = LinComb(basis="F")
    for n, part in sorted(by_degree.items()):
        check_cap(n)
        keyed = _basis(basis, n)
        sol, res = _solve([v for _, v in keyed], part)
        for (key, _), c in zip(keyed, sol):
            if c:
                coeffs.add_term(key, int(c) if c.denominator == 1 else c)
        residual.iadd(res)
    return Decomposition(coeffs, residual)


def expand(x: LinComb, basis: str) -> LinComb:
    """Like :func:`decompose` but raises on non-membership."""
    if basis in ("F", "M"):
        from .qsym import F_to_M

        return to_F(x) if basis == "F" else F_to_M(to_F(x))
    d = decompose(x, basis)
    if not d.ok:
        raise ValueError(f"element is not in the span of the {basis} basis; residual {d.residual!r}")
    return d.coeffs


def from_basis(x: LinComb, basis: str | None = None) -> LinComb:
    """F-expansion of an element written in a named basis."""
    basis = basis or x.basis
    if basis in ("F", "M", "K"):
        return to_F(LinComb(x, basis=basis))
    make = {"schur": schur, "schurP": schurP, "schurQ": schurQ, "h": h_product, "q": q_product}[basis]
    out = LinComb(basis="F")
    for key, c in x.items():
        out.iadd(make(key), c)
    return out


# --- maps ------------------------------------------------------------------------------


def theta_map(f: LinComb) -> LinComb:
    """theta: Lambda -> Omega, h_n |-> q_n, computed through the h basis."""
    out = LinComb(basis="F")
    for lam, c in expand(f, "h").items():
        out.iadd(q_product(lam), c)
    return out


def phi_nsym(x: LinComb) -> LinComb:
    """Forgetful map NSym -> Lambda, H_alpha |-> h_alpha."""
    out = LinComb(basis="F")
    for alpha, c in to_H(x).items():
        out.iadd(h_product(alpha), c)
    return out


@lru_cache(maxsize=None)
def _shsyt_peak_counts(n: int) -> dict:
    out: dict = {}
    for lam in enumerate_partitions(n, strict=True):
        for T in enumerate_ShSYT(lam):
            key = (peak_set_tableau(T), lam)
            out[key] = out.get(key, 0) + 1
    return out


def phi_peak(P: PeakSet) -> LinComb:
    """phi(Pi_P) = sum over strict lambda of #{T in ShSYT(lambda): Peak(T) = P} P_lambda (F coordinates)."""
    out = LinComb(basis="F")
    for (Q, lam), m in _shsyt_peak_counts(P.n).items():
        if Q == P:
            out.iadd(schurP(lam), m)
    return out


def phi_peak_via_nsym(x: LinComb) -> LinComb:
    """phi on Peak through Pi_P = sum of R_alpha and the forgetful map."""
    return phi_nsym(peak_to_nsym(x))


# --- pairings -------------------------------------------------------------------------


def hall_pairing(f: LinComb, g: LinComb) -> int:
    """<s_lambda, s_mu> = delta on Lambda."""
    a, b = expand(f, "schur"), expand(g, "schur")
    return sum(c * b.get(k, 0) for k, c in a.items())


def omega_pairing(f: LinComb, g: LinComb) -> int:
    """[P_lambda, Q_mu] = delta on Omega."""
    a, b = expand(f, "schurP"), expand(g, "schurQ")
    return sum(c * b.get(k, 0) for k, c in a.items())


def pairing_peak(x: LinComb, f: LinComb) -> int:
    """[Pi_P, K_Q] = delta; ``f`` must lie in the span of the peak functions."""
    coeffs = expand(f, "K")
    return sum(c * coeffs.get(P, 0) for P, c in x.items())


def pairing_peak_qsym(x: LinComb, f: LinComb) -> int:
    """<F, f> for F in Peak (viewed inside NSym) and f in QSym."""
    from .qsym import pairing_qsym_nsym

    return pairing_qsym_nsym(to_R(x), f)


# --- shifted LR and peak-function expansions -------------------------------------------


def shifted_LR(lam, mu, T: ShiftedTableau | None = None) -> LinComb:
    """b^nu_{lam,mu} = #{S in ShSYT(nu/lam) : rect(S) = T} for a fixed T of shape mu."""
    lam, mu = tuple(lam), tuple(mu)
    if T is None:
        T = enumerate_ShSYT(mu)[0]
    if T.shape != mu:
        raise ValueError(f"T has shape {T.shape}, expected {mu}")
    check_cap(sum(lam) + sum(mu))
    out = LinComb(basis="schurP")
    for nu in strict_supersets(lam, sum(mu)):
        for S in enumerate_skew_ShSYT(nu, lam):
            if (rectify(S) if S.size else ShiftedTableau()) == T:
                out.add_term(nu, 1)
    return out


def kf1_expand(T: ShiftedTableau) -> LinComb:
    """2^{l(lambda)} times the F-sum over the markings S of T."""
    check_cap(T.size)
    return 2 ** len(T.shape) * _sum_F(markings(T))


@dataclass(frozen=True)
class MarkedCount:
    count: int
    expected: int | None
    admissible: bool
    witnesses: tuple = ()


def count_marked_with_descents(T, D: DescentSet, keep: bool = False) -> MarkedCount:
    """#{S : |S| = T, Des(S) = D} over markings of T (shifted or unshifted).

    When Peak(T) lies in D sym-diff (D+1) the expected value is
    2^{|Peak(T)|+1-l(lambda)} for shifted T and 2^{|Peak(T)|+1} otherwise.
    Outside that hypothesis ``admissible`` is False and the count is still
    reported (it is 0 for a correct implementation).
    """
    P = peak_set_tableau(T)
    admissible = set(P.elems) <= triangle(D)
    hits = [S for S in markings(T) if descent_set_tableau(S) == D]
    expected = None
    if admissible:
        expected = 2 ** (len(P) + 1 - (len(T.shape) if T.shifted else 0))
    return MarkedCount(len(hits), expected, admissible, tuple(hits) if keep else ())


def marked_descent_tally(T) -> Counter:
    """Des(S) over all markings S of T."""
    return Counter(descent_set_tableau(S) for S in markings(T))


def qk_expected(lam) -> LinComb:
    """sum of K_{Peak(T)} over T in ShSYT(lambda), in the K basis."""
    out = LinComb(basis="K")
    for T in enumerate_ShSYT(lam):
        out.add_term(peak_set_tableau(T), 1)
    return out


def sk_expected(lam) -> LinComb:
    """sum of K_{Peak(T)} over T in SYT(lambda), in the K basis."""
    out = LinComb(basis="K")
    for T in enumerate_SYT(lam):
        out.add_term(peak_set(descent_set_tableau(T)), 1)
    return out


# --- monomial oracles ----------------------------------------------------------------------


Poly = Counter


def poly_from_tableaux(tableaux, k: int) -> Poly:
    out: Poly = Counter()
    for T in tableaux:
        w = weight(T)
        out[w + (0,) * (k - len(w))] += 1
    return out


def poly_F(alpha, k: int) -> Poly:
    """F_alpha(x_1..x_k) from its defining sum over weakly increasing index sequences."""
    n = sum(alpha)
    D = set(DescentSet(n, tuple(_partial_sums(alpha))).elems) if n else set()
    out: Poly = Counter()
    for seq in combinations_with_replacement(range(k), n):
        if any(seq[i - 1] == seq[i] for i in D):
            continue
        e = [0] * k
        for v in seq:
            e[v] += 1
        out[tuple(e)] += 1
    return out


def _partial_sums(alpha):
    acc, out = 0, []
    for a in alpha[:-1]:
        acc += a
        out.append(acc)
    return out


def poly_of_qsym(x: LinComb, k: int) -> Poly:
    out: Poly = Counter()
    for alpha, c in to_F(x).items():
        for e, m in poly_F(alpha, k).items():
            out[e] += c * m
    return Counter({e: c for e, c in out.items() if c})


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return Counter({e: c for e, c in out.items() if c})


def poly_add(a: Poly, b: Poly, scale: int = 1) -> Poly:
    out = Counter(a)
    for e, c in b.items():
        out[e] += scale * c
    return Counter({e: c for e, c in out.items() if c})


@lru_cache(maxsize=None)
def _schurP_poly(lam, k):
    return tuple(poly_from_tableaux(enumerate_ShSSYT_pm(lam, k), k).items())


def schurP_poly(lam, k: int) -> Poly:
    """P_lambda(x_1..x_k) from marked shifted semistandard tableaux."""
    return Counter(dict(_schurP_poly(tuple(lam), k)))


def schur_poly(lam, k: int) -> Poly:
    return poly_from_tableaux(enumerate_SSYT(tuple(lam), k), k)


def modified_schur_poly(lam, k: int) -> Poly:
    return poly_from_tableaux(enumerate_SSYT_pm(tuple(lam), k), k)
