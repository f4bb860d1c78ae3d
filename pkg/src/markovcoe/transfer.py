"""The transfer maps between integer cylinder functions.

For ``f`` on ``X_B``::

    Psi_h(f)(x) = sum_{i < l1(x)} f(sigma^i h(x)) - sum_{j < k1(x)} f(sigma^j h(sigma x))

is again locally constant; it is computed as an exact table whose depth is
large enough that every window it reads is already determined by the
transducer output on the cylinder.  ``Psi_hinv`` is the same construction
applied to the inverted spec.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .coe import CoeSpec, eventual_period_pairs
from .cylfn import (
    CylFn,
    birkhoff_at,
    compose_shift,
    is_order_unit,
    is_positive_class,
    omega,
)
from .errors import SpaceMismatch
from .report import PASS, SKIPPED, CertReport, merge, verdict
from .shift import admissible_words, evps_up_to, shift_evp, word_str


def transfer_depth(spec: CoeSpec, f: CylFn) -> int:
    h = spec.h
    kmax, lmax = spec.k1.max(), spec.l1.max()
    d = max(spec.k1.depth, spec.l1.depth, h.required_input_depth(lmax + f.depth - 1))
    if kmax > 0:
        d = max(d, 1 + h.required_input_depth(kmax + f.depth - 1))
    return d


def psi_transfer(spec: CoeSpec, f: CylFn) -> CylFn:
    """``Psi_h(f)`` as a reduced table on ``X_A``."""
    if f.space != spec.B:
        raise SpaceMismatch("Psi_h takes functions on X_B")
    d = transfer_depth(spec, f)
    k, h = f.depth, spec.h
    table = {}
    for w in admissible_words(spec.A, d):
        out = h.apply_prefix(w)
        val = sum(f.table[out[i : i + k]] for i in range(spec.l1.eval_word(w)))
        kk = spec.k1.eval_word(w)
        if kk:
            out2 = h.apply_prefix(w[1:])
            val -= sum(f.table[out2[j : j + k]] for j in range(kk))
        table[w] = val
    return CylFn(spec.A, d, table).reduced()


def psi_transfer_inv(spec: CoeSpec, g: CylFn) -> CylFn:
    """``Psi_hinv(g)`` on ``X_B``."""
    if g.space != spec.A:
        raise SpaceMismatch("Psi_hinv takes functions on X_A")
    return psi_transfer(spec.inverse(), g)


def compose_with_h(spec: CoeSpec, f: CylFn) -> CylFn:
    """``f o h``."""
    if f.space != spec.B:
        raise SpaceMismatch("f must live on X_B")
    d = spec.h.required_input_depth(f.depth)
    return CylFn(spec.A, d, {w: f.table[spec.h.apply_prefix(w)[: f.depth]]
                             for w in admissible_words(spec.A, d)}).reduced()


def indicators_up_to(S, D: int) -> list:
    """``chi_[w]`` for every admissible ``w`` with ``|w| <= D``; the empty word gives ``1``."""
    return [(w, CylFn.indicator(S, w)) for d in range(D + 1) for w in admissible_words(S, d)]


def check_composition(spec: CoeSpec, D: int = 5) -> CertReport:
    """``Psi_h o Psi_hinv = id`` and ``Psi_hinv o Psi_h = id`` on all indicators of depth <= D."""
    subs = []
    for label, s in (("A", spec), ("B", spec.inverse())):
        bad = None
        checked = 0
        for w, chi in indicators_up_to(s.A, D):
            checked += 1
            if psi_transfer(s, psi_transfer_inv(s, chi)) != chi:
                bad = list(w)
                break
        subs.append(CertReport(f"composition[{label}]", verdict(bad is None),
                               "Psi_h Psi_hinv = id" if label == "A" else "Psi_hinv Psi_h = id",
                               D, bad, {"indicators": checked}))
    rep = merge("transfer-composition", subs, "Psi_h o Psi_hinv = id and Psi_hinv o Psi_h = id", D)
    rep.details["indicators"] = {r.name: r.details["indicators"] for r in subs}
    return rep


def check_coboundary_lemma(spec: CoeSpec, f: CylFn) -> CertReport:
    """``Psi_h(f - f o sigma_B) = f o h - f o h o sigma_A``."""
    lhs = psi_transfer(spec, f - compose_shift(f))
    fh = compose_with_h(spec, f)
    rhs = fh - compose_shift(fh)
    ok = lhs == rhs
    return CertReport("transfer-coboundary", verdict(ok), "Psi_h(f - f o sigma) = f o h - f o h o sigma",
                      counterexample=None if ok else f)


def check_telescoping(spec: CoeSpec, f: CylFn, x, m: int) -> CertReport:
    """``(Psi_h f)^m(x) = f^{l1^m(x)}(h(x)) - f^{k1^m(x)}(h(sigma^m x))``."""
    lhs = birkhoff_at(psi_transfer(spec, f), x, m)
    rhs = (birkhoff_at(f, spec.h(x), birkhoff_at(spec.l1, x, m))
           - birkhoff_at(f, spec.h(shift_evp(x, m)), birkhoff_at(spec.k1, x, m)))
    return CertReport("transfer-telescoping", verdict(lhs == rhs),
                      "(Psi_h f)^m(x) = f^{l1^m(x)}(h x) - f^{k1^m(x)}(h sigma^m x)",
                      counterexample=None if lhs == rhs else {"x": x, "m": m},
                      details={"lhs": lhs, "rhs": rhs})


def check_order_iso(spec: CoeSpec, sample_fns: Iterable[CylFn], bound=None) -> CertReport:
    """Positive classes map to positive classes in both directions, and ``[c1]``, ``[c2]`` are order units.

    Sample functions may live on either side.  A sample whose class is not
    positive gives a skipped sub-report, since no claim is made about it.
    """
    subs = []
    for i, f in enumerate(sample_fns):
        if f.space == spec.B:
            fwd, label = psi_transfer, "Psi_h"
        elif f.space == spec.A:
            fwd, label = psi_transfer_inv, "Psi_hinv"
        else:
            raise SpaceMismatch("sample function lives on neither side")
        name = f"order-iso[{i}]"
        if not is_positive_class(f).holds:
            subs.append(CertReport(name, SKIPPED, f"{label} preserves positivity",
                                   details={"reason": "hypothesis unmet: class not positive"}))
            continue
        d = is_positive_class(fwd(spec, f))
        subs.append(CertReport(name, verdict(d.holds), f"{label} preserves positivity",
                               counterexample=None if d.holds else d.orbit, details={"image": d.verdict.value}))
    for label, c in (("c1", spec.c1), ("c2", spec.c2)):
        d = is_order_unit(c)
        subs.append(CertReport(f"order-unit[{label}]", verdict(d.holds), f"[{label}] is an order unit",
                               counterexample=None if d.holds else d.orbit, details={"mean": d.mean}))
    rep = merge("order-isomorphism", subs, "Psi_h induces an order isomorphism of ordered cohomology", bound)
    rep.details["subchecks"] = {r.name: r.verdict for r in subs}
    return rep


def six_conditions(spec: CoeSpec, bound: int = 5, sample_fns: Sequence[CylFn] = ()) -> dict:
    """Evaluate the six equivalent positivity conditions for ``c1`` on test data.

    Conditions (iii)-(vi) are checked on every eventually periodic point up to
    ``bound`` with the pairs ``(r, s)`` from :func:`eventual_period_pairs`.
    Condition (i) uses ``1_B`` and the positive members of ``sample_fns``.
    """
    A = spec.A
    fns = [CylFn.constant(spec.B, 1)] + [f for f in sample_fns if is_positive_class(f).holds]
    cond = {
        "i": all(is_positive_class(psi_transfer(spec, f)).holds for f in fns),
        "ii": is_positive_class(spec.c1).holds,
    }
    c3 = c4 = c5 = c6 = True
    for x in evps_up_to(A, bound):
        for r0, s0 in eventual_period_pairs(x, 2):
            for extra in range(2):
                r, s = r0 + extra, s0 + extra
                q = r - s
                xs = shift_evp(x, s)
                c3 &= omega(spec.c1, x, r, s) > 0
                c4 &= birkhoff_at(spec.c1, xs, q) > 0
                c5 &= (birkhoff_at(spec.l1, x, r) + birkhoff_at(spec.k1, x, s)
                       > birkhoff_at(spec.k1, x, r) + birkhoff_at(spec.l1, x, s))
                c6 &= birkhoff_at(spec.l1, xs, q) > birkhoff_at(spec.k1, xs, q)
    cond.update({"iii": c3, "iv": c4, "v": c5, "vi": c6})
    return cond


def check_six_conditions(spec: CoeSpec, bound: int = 5, sample_fns: Sequence[CylFn] = ()) -> CertReport:
    cond = six_conditions(spec, bound, sample_fns)
    agree = len(set(cond.values())) == 1
    return CertReport("positivity-conditions-agree", verdict(agree),
                      "the six equivalent positivity conditions for c1 agree", bound, details=cond)


def format_table(f: CylFn) -> str:
    return ", ".join(f"{word_str(w) or '()'}:{v}" for w, v in f.table.items())
