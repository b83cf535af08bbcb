"""Regression checks against the published example values."""

from dataclasses import dataclass
from math import sqrt

from . import states
from .concurrence import concurrence_lower_bound, isotropic_exact_concurrence, max_concurrence, pure_concurrence
from .criteria import criteria_scores
from .errors import ConcurrenceBoundError


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    expected: float
    tol: float

    @property
    def passed(self):
        return bool(abs(self.value - self.expected) <= self.tol)


def horodecki_realignment_norm(alpha):
    return (19.0 + 2.0 * sqrt(3.0 * alpha**2 - 15.0 * alpha + 19.0)) / 21.0


def horodecki_ppt_norm(alpha):
    if alpha <= 4.0:
        return 1.0
    return (2.0 + sqrt(4.0 * alpha**2 - 20.0 * alpha + 41.0)) / 7.0


def horodecki_bound(alpha):
    if alpha <= 3.0:
        return 0.0
    return 2.0 * sqrt(3.0) * (sqrt(3.0 * alpha**2 - 15.0 * alpha + 19.0) - 1.0) / 63.0


def isotropic_grid(d, points=21):
    """``points`` fidelities evenly spaced in ``(1/d, 1]``."""
    return [1.0 / d + (1.0 - 1.0 / d) * k / points for k in range(1, points + 1)]


def horodecki_grid():
    return [round(2.0 + 0.1 * k, 10) for k in range(31)]


def _upb_checks(name, rho, ccnr, bound):
    s = criteria_scores(rho)
    b = concurrence_lower_bound(rho, s)
    return [
        Check(f"{name} ||rho^TA||", s.ppt_norm, 1.0, 1e-9),
        Check(f"{name} ||R(rho)||", s.realignment_norm, ccnr, 5e-3),
        Check(f"{name} concurrence bound", b.value, bound, 3e-3),
    ]


def _isotropic_checks():
    checks = []
    for d in (2, 3, 4, 5):
        norm_err = bound_err = 0.0
        for f in isotropic_grid(d):
            rho = states.isotropic(d, f)
            s = criteria_scores(rho)
            b = concurrence_lower_bound(rho, s)
            norm_err = max(norm_err, abs(s.ppt_norm - d * f), abs(s.realignment_norm - d * f))
            bound_err = max(bound_err, abs(b.value - isotropic_exact_concurrence(d, f)))
        checks.append(Check(f"isotropic d={d} norms = dF (max err)", norm_err, 0.0, 1e-8))
        checks.append(Check(f"isotropic d={d} bound exact (max err)", bound_err, 0.0, 1e-8))
    return checks


def _horodecki_checks():
    checks = []
    ccnr_err = ppt_err = bound_err = 0.0
    for alpha in horodecki_grid():
        rho = states.horodecki_3x3(alpha)
        s = criteria_scores(rho)
        b = concurrence_lower_bound(rho, s)
        ccnr_err = max(ccnr_err, abs(s.realignment_norm - horodecki_realignment_norm(alpha)))
        ppt_err = max(ppt_err, abs(s.ppt_norm - horodecki_ppt_norm(alpha)))
        if alpha > 3.0:
            bound_err = max(bound_err, abs(b.value - horodecki_bound(alpha)))
    checks.append(Check("horodecki ||R(sigma)|| closed form (max err)", ccnr_err, 0.0, 1e-8))
    checks.append(Check("horodecki ||sigma^TA|| closed form (max err)", ppt_err, 0.0, 1e-8))
    checks.append(Check("horodecki bound closed form (max err)", bound_err, 0.0, 1e-8))
    return checks


def _mes_checks():
    return [
        Check(f"MES d={d} concurrence", pure_concurrence(states.maximally_entangled(d)), max_concurrence(d), 1e-10)
        for d in (2, 3, 4)
    ]


GROUPS = (
    ("tiles", lambda: _upb_checks("tiles", states.tiles_upb(), 1.087, 0.05)),
    ("pyramid", lambda: _upb_checks("pyramid", states.pyramid_upb(), 1.098, 0.056)),
    ("isotropic", _isotropic_checks),
    ("horodecki", _horodecki_checks),
    ("MES", _mes_checks),
)


def run_checks():
    """Evaluate every check; returns a list of :class:`Check`.

    A group whose states cannot even be constructed yields one failing
    check carrying a NaN value.
    """
    checks = []
    for name, group in GROUPS:
        try:
            checks.extend(group())
        except ConcurrenceBoundError as exc:
            checks.append(Check(f"{name} construction ({type(exc).__name__})", float("nan"), 0.0, 0.0))
    return checks


def format_table(checks):
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  {'value':>14}  {'expected':>10}  {'tol':>7}  result"]
    for c in checks:
        lines.append(
            f"{c.name:<{width}}  {c.value:>14.9g}  {c.expected:>10.6g}  {c.tol:>7.0e}  "
            f"{'PASS' if c.passed else 'FAIL'}"
        )
    return "\n".join(lines)


def all_passed(checks):
    return all(c.passed for c in checks)
