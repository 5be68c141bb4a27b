# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

"""
Cross-module consistency sweeps.

Each sweep evaluates one family of identities over a range of levels and
records how many cases it checked and which ones failed. A correct build
has no failures.
"""

import concurrent.futures
import dataclasses
import functools
import logging
import random
from collections.abc import Callable
from fractions import Fraction
from typing import Any

from ._errors import K3FrickeError
from .classify import (
    EllipticAtMinusTwoPoint,
    FiniteOrder,
    MinusTwoReducible,
    PseudoAnosov,
    ZeroReducible,
    classify_element,
)
from .counting import count_involution_classes, count_subgroups_mod2
from .cubic import has_associated_cubic, hassett_conditions
from .fricke import fricke_invariants
from .fricke_group import (
    DetTag,
    FrickeElement,
    compose,
    enumerate_elements,
    fricke_involution,
    make_element,
    translation,
)
from .gamma0 import elliptic_congruence_oracle, gamma0_invariants
from .mukai import (
    det_disc,
    eigen_data,
    induced_isometry,
    is_isometry,
    unipotency_index,
)

_logger = logging.getLogger(__name__)

_MAX_REPORTED_FAILURES = 5


@dataclasses.dataclass(frozen=True)
class SweepLimits:
    """
    Ranges covered by `verify`.

    Attributes
    ----------
    max_n : int
        Upper level for the table, parity, coupling and count sweeps.
    cubic_max_n : int
        Upper level for the cubic equivalence sweep.
    lattice_words : int
        Number of random words for the lattice sweep.
    lattice_max_n : int
        Levels of the random words are drawn from ``1..lattice_max_n``.
    word_length : int
        Number of generators multiplied into each random word.
    polychotomy_max_n : int
        Upper level for the exhaustive classification sweep.
    polychotomy_bound : int
        Entry bound of the elements classified.
    seed : int
        Seed of the random words.
    """

    max_n: int = 500
    cubic_max_n: int = 1000
    lattice_words: int = 500
    lattice_max_n: int = 50
    word_length: int = 10
    polychotomy_max_n: int = 12
    polychotomy_bound: int = 40
    seed: int = 0


@dataclasses.dataclass
class SweepResult:
    """The outcome of one sweep."""

    name: str
    checked: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)

    def error(self, where: str, e: K3FrickeError) -> None:
        self.checked += 1
        self.failures.append(f"{where}: {e.kind.value} error: {e}")

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": len(self.failures),
            "first_failures": self.failures[:_MAX_REPORTED_FAILURES],
        }


@dataclasses.dataclass(frozen=True)
class VerifyReport:
    limits: SweepLimits
    sweeps: tuple[SweepResult, ...]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.sweeps)

    @property
    def failures(self) -> int:
        return sum(len(s.failures) for s in self.sweeps)

    def as_dict(self) -> dict[str, Any]:
        return {
            "limits": dataclasses.asdict(self.limits),
            "ok": self.ok,
            "failures": self.failures,
            "sweeps": [s.as_dict() for s in self.sweeps],
        }


def _sweep_oracle(limits: SweepLimits) -> SweepResult:
    result = SweepResult("oracle equality")
    for n in range(1, limits.max_n + 1):
        try:
            t = gamma0_invariants(n)
            nu2 = elliptic_congruence_oracle(n, 2)
            nu3 = elliptic_congruence_oracle(n, 3)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        result.check(
            (t.nu2, t.nu3) == (nu2, nu3),
            f"n={n}: formulas give ({t.nu2}, {t.nu3}), residues "
            f"({nu2}, {nu3})",
        )
    return result


def _sweep_genus(limits: SweepLimits) -> SweepResult:
    result = SweepResult("genus integrality")
    for n in range(1, limits.max_n + 1):
        try:
            t = gamma0_invariants(n)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        genus = (
            1
            + Fraction(t.mu, 12)
            - Fraction(t.nu2, 4)
            - Fraction(t.nu3, 3)
            - Fraction(t.nu_inf, 2)
        )
        result.check(
            genus == t.genus and t.genus >= 0,
            f"n={n}: genus {t.genus}, formula {genus}",
        )
    return result


def _sweep_parity(limits: SweepLimits) -> SweepResult:
    result = SweepResult("parity")
    for n in range(5, limits.max_n + 1):
        try:
            t = gamma0_invariants(n)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        result.check(
            t.nu2 % 2 == 0 and t.nu3 % 2 == 0 and t.nu_inf % 2 == 0,
            f"n={n}: (nu2, nu3, nu_inf) = ({t.nu2}, {t.nu3}, {t.nu_inf})",
        )
    return result


def _sweep_xi_coupling(limits: SweepLimits) -> SweepResult:
    result = SweepResult("class number coupling")
    for n in range(5, limits.max_n + 1):
        try:
            ft = fricke_invariants(n)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        value = Fraction(2 * ft.base.genus + 2 - ft.xi, 2)
        result.check(
            value.denominator == 1 and value >= 0 and value % 2 == 0,
            f"n={n}: g + 1 - xi/2 = {value}",
        )
    return result


def _sweep_riemann_hurwitz(limits: SweepLimits) -> SweepResult:
    result = SweepResult("Riemann-Hurwitz")
    for n in range(2, limits.max_n + 1):
        try:
            ft = fricke_invariants(n)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        lhs = 2 * ft.base.genus - 2
        rhs = 2 * (2 * ft.genus_p - 2) + ft.ramification_points
        result.check(lhs == rhs, f"n={n}: 2g - 2 = {lhs}, {rhs} expected")
        if n >= 5:
            result.check(
                ft.ramification_points == ft.xi,
                f"n={n}: {ft.ramification_points} ramification points, "
                f"xi = {ft.xi}",
            )
    return result


def _sweep_involution_counts(limits: SweepLimits) -> SweepResult:
    result = SweepResult("involution count agreement")
    for n in range(5, limits.max_n + 1):
        try:
            count = count_involution_classes(2 * n)
            nu2 = gamma0_invariants(n).nu2
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        result.check(2 * count == nu2, f"n={n}: {count} classes, nu2={nu2}")
    return result


def _sweep_z3_counts(limits: SweepLimits) -> SweepResult:
    result = SweepResult("Z3 count agreement")
    for n in range(5, limits.max_n + 1):
        try:
            count = count_subgroups_mod2(2 * n).z3_mod2_classes
            nu3 = gamma0_invariants(n).nu3
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        result.check(2 * count == nu3, f"n={n}: {count} classes, nu3={nu3}")
    return result


def _sweep_cubic(limits: SweepLimits) -> SweepResult:
    result = SweepResult("cubic equivalence")
    for n in range(7, limits.cubic_max_n + 1):
        try:
            verdict = has_associated_cubic(2 * n)
            hassett = hassett_conditions(2 * n)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
            continue
        result.check(
            verdict.has_associated_cubic
            == (hassett.nonempty and hassett.has_k3),
            f"n={n}: nu3={verdict.nu3}, Hassett {tuple(hassett)}",
        )
    return result


def _generators(n: int) -> list[FrickeElement]:
    gens = [
        translation(n),
        make_element(n, 1, 0, n, 1, DetTag.UNIT),
        fricke_involution(n),
    ]
    return gens + [g.inverse() for g in gens]


def _random_word(rng: random.Random, n: int, length: int) -> FrickeElement:
    gens = _generators(n)
    g = FrickeElement.identity(n)
    for _ in range(length):
        g = compose(g, rng.choice(gens))
    return g


def _check_word(
    result: SweepResult, g: FrickeElement, h: FrickeElement
) -> None:
    where = f"n={g.n} {g.entries}"
    m = induced_isometry(g)
    result.check(
        is_isometry(m.rows, g.n) and m.det == 1,
        f"{where}: {m.rows} is not an isometry of determinant 1",
    )
    product = induced_isometry(compose(g, h))
    result.check(
        product.same_up_to_sign(m @ induced_isometry(h)),
        f"{where}: the induced action is not multiplicative",
    )
    if g.n >= 2:
        result.check(
            det_disc(g) == (1 if g.det_tag is DetTag.UNIT else -1),
            f"{where}: det·disc does not match the coset",
        )
    if g.is_identity():
        return
    data = eigen_data(m, g)
    result.check(
        (unipotency_index(m) == 3) == (data.trace_squared == 4),
        f"{where}: Jordan type disagrees with t² = {data.trace_squared}",
    )


def _sweep_lattice(limits: SweepLimits) -> SweepResult:
    result = SweepResult("lattice identities")
    rng = random.Random(limits.seed)
    for _ in range(limits.lattice_words):
        n = rng.randint(1, limits.lattice_max_n)
        try:
            g = _random_word(rng, n, limits.word_length)
            h = _random_word(rng, n, limits.word_length)
            _check_word(result, g, h)
        except K3FrickeError as e:
            result.error(f"n={n}", e)
    return result


_VARIANTS = (
    FiniteOrder,
    MinusTwoReducible,
    ZeroReducible,
    PseudoAnosov,
    EllipticAtMinusTwoPoint,
)

# Elliptic orders that occur at a single level only.
_EXCEPTIONAL_ORDERS = {4: 2, 6: 3}


def _sweep_polychotomy(limits: SweepLimits) -> SweepResult:
    result = SweepResult("polychotomy totality")
    for n in range(1, limits.polychotomy_max_n + 1):
        for g in enumerate_elements(n, limits.polychotomy_bound):
            if g.is_identity():
                continue
            try:
                kind = classify_element(g)
            except K3FrickeError as e:
                result.error(f"n={n} {g.entries}", e)
                continue
            matches = [v for v in _VARIANTS if isinstance(kind, v)]
            result.check(
                len(matches) == 1,
                f"n={n} {g.entries}: {len(matches)} variants",
            )
            order = getattr(kind, "order", None)
            if order in _EXCEPTIONAL_ORDERS:
                result.check(
                    n == _EXCEPTIONAL_ORDERS[order],
                    f"n={n} {g.entries}: elliptic of order {order}",
                )
    return result


_SWEEPS: tuple[Callable[[SweepLimits], SweepResult], ...] = (
    _sweep_oracle,
    _sweep_genus,
    _sweep_parity,
    _sweep_xi_coupling,
    _sweep_riemann_hurwitz,
    _sweep_involution_counts,
    _sweep_z3_counts,
    _sweep_cubic,
    _sweep_lattice,
    _sweep_polychotomy,
)


def _run_sweep(
    sweep: Callable[[SweepLimits], SweepResult], limits: SweepLimits
) -> SweepResult:
    _logger.info("Starting sweep %s", sweep.__name__)
    result = sweep(limits)
    _logger.info(
        "Finished sweep %s: %d checked, %d failed",
        result.name,
        result.checked,
        len(result.failures),
    )
    return result


def _print_report(report: VerifyReport, print) -> None:
    print(f"Sweep limits: {report.limits}")
    for s in report.sweeps:
        status = "ok" if s.ok else "FAILED"
        print(f"  {s.name:<28} {s.checked:>8} checked  {status}")
        for message in s.failures[:_MAX_REPORTED_FAILURES]:
            print(f"    {message}")
    print(f"Total failures: {report.failures}")


def verify(
    limits: SweepLimits | None = None, *, jobs: int = 1, file=None
) -> VerifyReport:
    """
    Run every consistency sweep and print a summary.

    Parameters
    ----------
    limits : SweepLimits, optional
        The ranges to cover; defaults to ``SweepLimits()``.
    jobs : int
        Number of worker threads. With 1 (the default), sweeps run in
        order in the calling thread.
    file
        A file-like object (default: `sys.stdout`) for the summary.

    Returns
    -------
    VerifyReport
        The per-sweep results, in a fixed order regardless of `jobs`.
    """
    limits = SweepLimits() if limits is None else limits
    run = functools.partial(_run_sweep, limits=limits)
    if jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(jobs) as executor:
            results = tuple(executor.map(run, _SWEEPS))
    else:
        results = tuple(run(sweep) for sweep in _SWEEPS)
    report = VerifyReport(limits, results)
    _print_report(report, functools.partial(print, file=file))
    return report
