"""Acceptance run: twelve exact criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

import time

import pytest

from shiftedpr import Q_SW, sagan_worley
from shiftedpr.insertion import P_SW
from shiftedpr.tableaux import compact, peak_set_tableau
from shiftedpr.verify import VerifyConfig, clear_caches, run_suite
from shiftedpr.words import descent_set, inverse, peak_set_perm

CONFIG = VerifyConfig(count_cap=9, class_cap=7, hopf_cap=5, workers=2, timing=False)

_reports = {}


def report(name):
    if name not in _reports:
        _reports[name] = run_suite(name, CONFIG)
    return _reports[name]


def checks(suite, *names, prefix=None):
    """Selected checks of a suite; ``prefix`` selects every check whose name starts with it."""
    rep = report(suite)
    out = [rep.check(n) for n in names]
    if prefix is not None:
        out += [c for c in rep.checks if c.name.startswith(prefix)]
    assert out, f"no checks selected in {suite}"
    return out


def all_checks(suite):
    return list(report(suite).checks)


def summarize(selected):
    failed = [c for c in selected if c.failed]
    total = sum(c.count for c in selected)
    if failed:
        c = failed[0]
        return False, f"{c.name} failed: {c.counterexample}"
    return True, f"{len(selected)} checks, {total} cases"


# --- criteria --------------------------------------------------------------------------------


def criterion_1():
    clear_caches()
    start = time.perf_counter()
    w = (6, 1, 2, 5, 4, 3)
    res, res_inv = sagan_worley(w), sagan_worley(inverse(w))
    direct = (
        inverse(w) == (2, 3, 6, 5, 4, 1)
        and len(res.trace) == len(res_inv.trace) == 6
        and compact(res.Q) == "1 2' 4 6' / 3 5'"
        and compact(res_inv.Q) == "1 2 3 6' / 4 5'"
        and descent_set(w).elems == (1, 4, 5)
        and descent_set(inverse(w)).elems == (3, 4, 5)
        and peak_set_perm(w).elems == (4,)
        and peak_set_perm(inverse(w)).elems == (3,)
        and peak_set_tableau(P_SW(inverse(w))).elems == (4,)
        and peak_set_tableau(Q_SW(w)).elems == (4,)
    )
    elapsed = time.perf_counter() - start
    ok, detail = summarize(checks("examples", "insertion traces of 612543 and 236541"))
    ok = ok and direct and elapsed < 1.0
    return ok, f"{detail}, direct replay {elapsed * 1000:.1f} ms"


def criterion_2():
    return summarize(checks("lemma-des", "des-Q_SW(w)=des(w)", "peak-P_SW(w^-1)=peak(w)"))


def criterion_3():
    return summarize(checks("sw-bijection", "sum g_lambda^2 2^(n-l) = n!", "insertion-injective"))


def criterion_4():
    return summarize(checks("sk-fibers", "SK-class = P_SW-fiber"))


def criterion_5():
    sel = checks("left-ideal-counterexample", "product-table-cell-for-cell", "project(12*123) != project(12*213)")
    sel += checks("right-ideal", "P_SW(u*w') = P_SW(v*w') for u =SK v", "(P_SW x P_SW) Delta(u - v) = 0")
    return summarize(sel)


def criterion_6():
    return summarize(checks("pf-pro", "pi'(scl T) = P_lambda", "P_lambda(x1..x4) = ShSSYT+- generating sum"))


def criterion_7():
    return summarize(all_checks("dp-counts"))


def criterion_8():
    return summarize(checks(
        "qk-kf-kf1",
        "K_P M-form = F-form",
        "2^l sum F_c(S) over |S|=T equals K_Peak(T)",
        "Q_lambda = sum of K_Peak(T)",
    ))


def criterion_9():
    return summarize(checks(
        "lr-shifted",
        "b coefficients independent of T in ShSYT(mu)",
        "shifted_LR = monomial-product oracle",
        "P1 P1 = P2 and P2 P1 = P3 + P21 (oracle)",
    ))


def criterion_10():
    return summarize(all_checks("diagrams"))


def criterion_11():
    return summarize(checks(
        "j-xi",
        "j-failure example artifacts",
        "Delta(j<T>) != (j x j) Delta<T>",
        "term [P(u)] (x) [P(v)] separates the two sides",
    ))


def criterion_12():
    return summarize(checks("structure-maps", "<a*b, c> = <a(x)b, Delta'(c)>", "<a*'b, c> = <a(x)b, Delta(c)>",
                            prefix="pairing:"))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def line(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'} ({detail})"


@pytest.mark.parametrize("i", range(1, len(CRITERIA) + 1))
def test_criterion(i, capsys):
    ok, detail = CRITERIA[i - 1]()
    with capsys.disabled():
        print("\n" + line(i, ok, detail))
    assert ok, detail


def test_pairing_checks_are_all_five():
    assert len(checks("structure-maps", prefix="pairing:")) == 5


if __name__ == "__main__":
    results = [(i, *f()) for i, f in enumerate(CRITERIA, 1)]
    for r in results:
        print(line(*r))
    raise SystemExit(0 if all(ok for _, ok, _ in results) else 1)
