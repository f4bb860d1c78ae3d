"""Batteries of checks run by the command line front end.

Each ``*_checks`` function returns one :class:`CertReport` per identity,
aggregated over all of its test points.
"""

from __future__ import annotations

from . import coe, transfer
from .cylfn import CylFn, birkhoff_at
from .errors import MarkovCoeError
from .report import FAIL, CertReport, merge, verdict
from .shift import evps_up_to, periodic_orbits_up_to, shift_evp


def _aggregate(name, identity, bound, reports) -> CertReport:
    reports = list(reports)
    first_bad = next((r for r in reports if not r), None)
    rep = CertReport(name, verdict(first_bad is None), identity, bound,
                     None if first_bad is None else first_bad.counterexample)
    rep.details["instances"] = len(reports)
    return rep


def _points(S, bound):
    return evps_up_to(S, bound)


def taileq_checks(spec, bound: int) -> CertReport:
    reps = []
    for x in _points(spec.A, bound):
        for p in range(1, 3):
            reps.append(coe.check_taileq(spec, x, shift_evp(x, p), p, 0))
            reps.append(coe.check_taileq(spec, shift_evp(x, p), x, 0, p))
    return _aggregate("tail-equivalence", reps[0].identity, bound, reps)


def klp_checks(spec, bound: int = 6, max_p: int = 5) -> CertReport:
    reps = []
    for S in (spec.A, spec.B):
        for x in _points(S, bound):
            for p in range(max_p + 1):
                reps.append(coe.check_klp(spec, x, p))
    return _aggregate("exponent-identity", reps[0].identity, bound, reps)


def cor_positive_checks(spec, bound: int) -> CertReport:
    reps = []
    for x in _points(spec.A, bound):
        for r, s in coe.eventual_period_pairs(x, 2):
            reps.append(coe.check_cor_positive(spec, x, r, s))
    return _aggregate("cocycle-positive-on-cycles", reps[0].identity, bound, reps)


def periodic_point_checks(spec, P: int) -> CertReport:
    reps = []
    for g in periodic_orbits_up_to(spec.A, P):
        for x in g.points():
            for n in (1, 2):
                reps.append(coe.check_psi_equations(spec, x, n * g.period))
        reps.append(coe.check_xi_representative(spec, g))
        reps.append(coe.check_orbit_length(spec, g))
    return _aggregate("periodic-point-map", "psi_h anchoring, intertwining, periodicity; xi_h well defined; "
                      "|xi_h(gamma)| = beta_gamma([c1])", P, reps)


def factor_checks(spec, P: int) -> CertReport:
    reps = [coe.check_factor(spec, g.point(0), n) for g in periodic_orbits_up_to(spec.A, P) for n in range(1, 5)]
    return _aggregate("cocycle-multiplicativity", reps[0].identity, P, reps)


def omega_transport_checks(spec, P: int, basis_depth: int = 2) -> CertReport:
    reps = []
    fns = [chi for _, chi in transfer.indicators_up_to(spec.B, basis_depth)]
    for g in periodic_orbits_up_to(spec.A, P):
        x = g.point(0)
        for f in fns:
            reps.append(coe.check_lemma_omega_transport(spec, f, x, g.period, 0))
        reps.append(coe.check_rminuss(spec, x, g.period, 0))
    return _aggregate("omega-transport", "omega_{Psi_h f}^{r,s}(x) = omega_f^{r',s'}(z); c2^{q'}(sigma^{s'} z) = r - s",
                      P, reps)


def coboundary_lemma_checks(spec, depth: int) -> CertReport:
    reps = [transfer.check_coboundary_lemma(spec, chi) for _, chi in transfer.indicators_up_to(spec.B, depth)]
    return _aggregate("transfer-coboundary", reps[0].identity, depth, reps)


def telescoping_checks(spec, bound: int, basis_depth: int = 2, max_m: int = 5) -> CertReport:
    reps = []
    pts = _points(spec.A, bound)
    for _, f in transfer.indicators_up_to(spec.B, basis_depth):
        g = transfer.psi_transfer(spec, f)
        for x in pts:
            hx = spec.h(x)
            for m in range(1, max_m + 1):
                lhs = birkhoff_at(g, x, m)
                rhs = (birkhoff_at(f, hx, birkhoff_at(spec.l1, x, m))
                       - birkhoff_at(f, spec.h(shift_evp(x, m)), birkhoff_at(spec.k1, x, m)))
                reps.append(CertReport("t", verdict(lhs == rhs),
                                       counterexample=None if lhs == rhs else {"x": x, "m": m, "f": f}))
    return _aggregate("transfer-telescoping", "(Psi_h f)^m(x) = f^{l1^m(x)}(h x) - f^{k1^m(x)}(h sigma^m x)",
                      bound, reps)


def order_checks(spec, depth: int = 2, bound: int = 5) -> list:
    on_b = [chi for _, chi in transfer.indicators_up_to(spec.B, depth)]
    on_a = [chi for _, chi in transfer.indicators_up_to(spec.A, depth)]
    # one sample with a non-positive class exercises the skipped branch
    on_b.append(CylFn.constant(spec.B, -1))
    return [transfer.check_order_iso(spec, on_b + on_a), transfer.check_six_conditions(spec, bound, on_b)]


def verify_suite(spec, bound: int = 8, depth: int = 5) -> list:
    """Thunks for every orbit-equation, cocycle and transfer identity at the given bounds."""
    small = min(bound, 6)
    jobs = [
        ("coe-certification", lambda: coe.verify_coe(spec, bound, depth)),
        ("tail-equivalence", lambda: taileq_checks(spec, small)),
        ("exponent-identity", lambda: klp_checks(spec, small, 5)),
        ("cocycle-positive-on-cycles", lambda: cor_positive_checks(spec, bound)),
        ("cocycle-multiplicativity", lambda: factor_checks(spec, small)),
        ("transfer-composition", lambda: transfer.check_composition(spec, depth)),
        ("transfer-coboundary", lambda: coboundary_lemma_checks(spec, min(depth, 3))),
        ("transfer-telescoping", lambda: telescoping_checks(spec, min(bound, 5))),
        ("omega-transport", lambda: omega_transport_checks(spec, small)),
        ("periodic-point-map", lambda: periodic_point_checks(spec, small)),
        ("orbit-bijection", lambda: coe.check_orbit_bijection(spec, bound)),
        ("order-isomorphism", lambda: order_checks(spec)),
    ]
    return jobs


def run_jobs(jobs, threads: int = 1) -> list:
    """Run ``(name, thunk)`` pairs, optionally in a thread pool; reports come back sorted by name.

    A thunk that raises a library error (a violated precondition inside a
    broken spec, say) becomes a failing report under its job name.
    """
    import time

    def timed(item):
        name, job = item
        t = time.perf_counter()
        try:
            out = job()
        except MarkovCoeError as exc:
            out = CertReport(name, FAIL, details={"error": type(exc).__name__, "message": str(exc)})
        ms = (time.perf_counter() - t) * 1000
        out = out if isinstance(out, list) else [out]
        for r in out:
            r.runtime_ms = ms / len(out)
        return out

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(timed, jobs))
    else:
        batches = [timed(j) for j in jobs]
    reports = [r for b in batches for r in b]
    return sorted(reports, key=lambda r: r.name)


def overall(reports) -> CertReport:
    return merge("overall", reports)
