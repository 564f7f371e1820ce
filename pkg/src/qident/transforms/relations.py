"""Composition relations among the transformation kernels.

Every relation is a data record: each side is either a single kernel value
or a sum of products of two kernel values over an internal index s, with
explicit base multipliers.  Three summation templates occur:

  par:   sum_{s=r, s=r(2)}^{L}   F^A_{L,s}   F^B_{s,r}
  dbl:   sum_{s=r}^{L}           F^A_{2L,2s} F^B_{s,r}
  half:  sum_{s=r}^{floor(L/2)}  F^A_{L,2s}  F^B_{s,r}

Stricter supports (cubic kernels, triples like s >= 3r) need no extra
bookkeeping since kernel values vanish outside their support.  A relation
holds entrywise in (L, r); this is exactly what makes the uniqueness
argument behind these identities effective, so the verifier checks every
(L, r) pair exactly.
"""

from __future__ import annotations

from functools import lru_cache

from ..qpoly import FactoredRational
from ..report import Stopwatch, VerificationReport
from .kernels import _tree_sum, kernel_eval


@lru_cache(maxsize=None)
def _K(tag: str, L: int, r: int, base) -> FactoredRational:
    return kernel_eval(tag, L, r, base)


def _eval_side(side, L: int, r: int) -> FactoredRational:
    if side[0] == "F":
        _, tag, base = side
        return _K(tag, L, r, base)
    _, a_tag, a_base, mode, b_tag, b_base = side
    terms = []
    if mode == "par":
        for s in range(r, L + 1, 2):
            fa = _K(a_tag, L, s, a_base)
            if fa.is_zero():
                continue
            fb = _K(b_tag, s, r, b_base)
            if fb.is_zero():
                continue
            terms.append(fa * fb)
    elif mode == "dbl":
        for s in range(r, L + 1):
            fa = _K(a_tag, 2 * L, 2 * s, a_base)
            if fa.is_zero():
                continue
            fb = _K(b_tag, s, r, b_base)
            if fb.is_zero():
                continue
            terms.append(fa * fb)
    elif mode == "half":
        for s in range(r, L // 2 + 1):
            fa = _K(a_tag, L, 2 * s, a_base)
            if fa.is_zero():
                continue
            fb = _K(b_tag, s, r, b_base)
            if fb.is_zero():
                continue
            terms.append(fa * fb)
    else:  # pragma: no cover
        raise ValueError(f"unknown summation mode {mode!r}")
    return _tree_sum(terms)


def F(tag, base=1):
    return ("F", tag, base)


def S(a_tag, a_base, mode, b_tag, b_base):
    return ("S", a_tag, a_base, mode, b_tag, b_base)


# fmt: off
RELATIONS: dict[str, tuple] = {
    # sum FF = F: compositions collapsing to a single kernel
    "fcbis-a":  (S("qt2", 1, "par", "qt2", 1), F("qt1", 1)),
    "fcbis-b":  (S("qt4", 1, "par", "qt2", 1), F("qt3", 1)),
    # sum FF = sum FF among the base-q kernels
    "ff1":      (S("qt1", 1, "par", "qt2", 1), S("qt2", 1, "par", "qt1", 1)),
    "ff2-a":    (S("qt4", 1, "par", "qt1", 1), S("qt3", 1, "par", "qt2", 1)),
    "ff2-b":    (S("qt4", 1, "par", "qt1", 1), S("qt2", 2, "par", "qt4", 1)),
    "ff3":      (S("qt3", 1, "par", "qt1", 1), S("qt2", 2, "par", "qt3", 1)),
    "ff4":      (S("qt4", 3, "par", "qt5", 1), S("qt5", 2, "par", "qt4", 1)),
    # five decompositions of the quadratic kernel
    "f25-a":    (F("t2", 2), S("t4", 2, "par", "qt3", 4)),
    "f25-b":    (F("t2", 2), S("qt3", 1, "dbl", "t4", 1)),
    "f25-c":    (F("t2", 2), S("t2dual", 2, "par", "qt1", 4)),
    "f25-d":    (F("t2", 2), S("t2b", 2, "par", "qt2", 4)),
    "f25-e":    (F("t2", 2), S("qt2", 2, "dbl", "t2dual", 2)),
    # three decompositions of its shifted companion
    "f29-a":    (F("t2b", 2), S("t4", 2, "par", "qt4", 4)),
    "f29-b":    (F("t2b", 2), S("qt4", 1, "dbl", "t4", 1)),
    "f29-c":    (F("t2b", 2), S("t2dual", 2, "par", "qt2", 4)),
    # linear (base-preserving) commutation relations
    "ff-q1-a":  (S("t2dual", 1, "half", "t2", 2), S("t2b", 1, "half", "t2dual", 2)),
    "ff-q1-b":  (S("t2", 1, "half", "t2dual", 2), S("t2b", 1, "half", "t2", 2)),
    # base q -> q^{4/3}
    "ff-q43-a": (S("t3", 1, "dbl", "t4b", 3), S("t4b", 1, "par", "t3", 4)),
    "ff-q43-b": (S("t3", 1, "dbl", "t4", 3), S("t4", 1, "par", "t3", 4)),
    # base q -> q^{3/2}
    "ff-q32-a": (S("t3", 1, "dbl", "t2b", 3), S("t2b", 1, "par", "t3", 2)),
    "ff-q32-b": (S("t3", 1, "dbl", "t2c", 3), S("t2c", 1, "par", "t3", 2)),
    # quadratic
    "ff-q2-a":  (S("qt1", 1, "dbl", "t2dual", 1), S("qt2", 1, "dbl", "t2", 1)),
    "ff-q2-b":  (S("qt2", 1, "dbl", "t2", 1), S("t2", 1, "par", "qt1", 2)),
    "ff-q2-c":  (S("qt2", 1, "dbl", "t2b", 1), S("t2b", 1, "par", "qt1", 2)),
    "ff-q2-d":  (S("t2b", 1, "par", "qt1", 2), S("t2", 1, "par", "qt2", 2)),
    "ff-q2-e":  (S("t2", 1, "half", "t4b", 2), S("t4b", 1, "half", "t2", 4)),
    "ff-q2-f":  (S("t2dual", 1, "half", "t4b", 2), S("t4b", 1, "half", "t2dual", 4)),
    "ff-q2-g":  (S("t2", 1, "half", "t4", 2), S("t4", 1, "half", "t2", 4)),
    "ff-q2-h":  (S("t2dual", 1, "half", "t4", 2), S("t4", 1, "half", "t2dual", 4)),
    "ff-q2-i":  (S("t2b", 1, "half", "t4b", 2), S("t4b", 1, "half", "t2b", 4)),
    "ff-q2-j":  (S("t2b", 1, "half", "t4", 2), S("t4", 1, "half", "t2b", 4)),
    # quartic
    "ff-q4-a":  (S("qt3", 1, "dbl", "t2dual", 1), S("qt4", 1, "dbl", "t2", 1)),
    "ff-q4-b":  (S("qt4", 1, "dbl", "t2", 1), S("t2b", 2, "par", "qt3", 2)),
    "ff-q4-c":  (S("qt4", 1, "dbl", "t2b", 1), S("t2b", 2, "par", "qt4", 2)),
    "ff-q4-d":  (S("qt3", 1, "dbl", "t2", 1), S("t2", 2, "par", "qt3", 2)),
    "ff-q4-e":  (S("qt3", 1, "dbl", "t2b", 1), S("t2", 2, "par", "qt4", 2)),
    "ff-q4-f":  (S("qt4", 1, "dbl", "t2dual", 1), S("t2dual", 2, "par", "qt3", 2)),
    "ff-q4-g":  (S("qt2", 1, "dbl", "t4b", 1), S("t4b", 1, "par", "qt2", 4)),
    "ff-q4-h":  (S("qt2", 1, "dbl", "t4", 1), S("t4", 1, "par", "qt2", 4)),
    "ff-q4-i":  (S("qt1", 1, "dbl", "t4b", 1), S("t4b", 1, "par", "qt1", 4)),
    "ff-q4-j":  (S("qt1", 1, "dbl", "t4", 1), S("t4", 1, "par", "qt1", 4)),
    # sextic
    "ff-q6-a":  (S("qt5", 1, "dbl", "t2b", 1), S("t2b", 3, "par", "qt5", 2)),
    "ff-q6-b":  (S("t3", 2, "par", "qt4", 3), S("qt4", 1, "par", "t3", 1)),
    # base q -> q^9
    "ff-q9":    (S("qt5", 1, "par", "t3", 1), S("t3", 3, "par", "qt5", 3)),
    # base q -> q^12
    "ff-q12":   (S("qt5", 1, "dbl", "t4", 1), S("t4", 3, "par", "qt5", 4)),
}
# fmt: on

# verified here but absent from the older composition catalogs these extend
PAPER_NOVEL = {"ff1", "ff2-a", "ff2-b", "ff4"}


def verify_relation(rel: str, L_max: int) -> VerificationReport:
    lhs, rhs = RELATIONS[rel]
    report = VerificationReport(f"relation-{rel}", params={"L_max": L_max})
    if rel in PAPER_NOVEL:
        report.params["novel"] = True
    with Stopwatch() as sw:
        for L in range(L_max + 1):
            for r in range(L + 1):
                diff = _eval_side(lhs, L, r) - _eval_side(rhs, L, r)
                ok = diff.num.is_zero()
                report.record((L, r), ok, None if ok else diff)
                if not ok:
                    report.seconds = getattr(sw, "elapsed", 0.0)
                    return report
    report.seconds = sw.elapsed
    return report


def verify_all_relations(L_max: int) -> list[VerificationReport]:
    return [verify_relation(rel, L_max) for rel in RELATIONS]
