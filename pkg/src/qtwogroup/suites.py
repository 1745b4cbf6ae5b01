"""Named check suites driven by input files, producing certificates.

Exit codes: 0 when every required check passes, 1 on any failure, 2 on bad
or missing input.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Callable

from . import io
from .braided import (
    BraidedCrossedModuleData,
    BraidedHopfData,
    QuasitriangularStructure,
    biproduct_projections,
    check_braided_crossed_module,
    check_braided_hopf,
    check_quasitriangular,
    check_twisted_coproduct_obstruction,
    induced_coaction,
    transmutation,
)
from .constructions import CrossedModuleData, PreconditionError, adjoint_crossed_module, graded_function_crossed_module
from .fields import Field, FieldError, QQ
from .hopf import HopfAlgebraData, YetterDrinfeldModule, check_hopf
from .report import CheckReport, compare_maps
from .two_group import (
    build_strict_2group,
    check_adjoint_closed_forms,
    check_crossed_module,
    check_embedded_quantum_groupoid,
    check_graded_closed_forms,
    check_interchange,
    check_units,
    groupoid_antipode_diagnostics,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class SuiteInputError(ValueError):
    pass


@dataclass(frozen=True)
class Options:
    field: Field | None = None
    full_basis: bool = False
    jobs: int = 1


@dataclass
class SuiteResult:
    suite: str
    report: CheckReport
    certificate: dict
    field: Field
    extras: dict = dc_field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.report.passed else EXIT_FAIL


@dataclass(frozen=True)
class Suite:
    name: str
    roles: tuple[str, ...]
    run: Callable[[dict, Options], tuple[CheckReport, Field]]
    summary: str


# ---------------------------------------------------------------- loaders


def _hopf(inputs, opts, role="H") -> HopfAlgebraData:
    return io.parse_algebra(inputs[role], opts.field, validate=False)


def _crossed_module(inputs, opts) -> CrossedModuleData:
    A = io.parse_algebra(inputs["A"], opts.field, validate=False)
    H = io.parse_algebra(inputs["H"], opts.field, validate=False)
    d = io.parse_dmap(inputs["d"], opts.field)
    act = io.parse_action(inputs["action"], H, opts.field, validate=False)
    if d.shape != (H.dim, A.dim):
        raise SuiteInputError(f"d has shape {d.shape}, expected {(H.dim, A.dim)}")
    return CrossedModuleData(A, H, d, act, name=A.name and f"{A.name}/{H.name}")


def _braided_cm(inputs, opts) -> BraidedCrossedModuleData:
    H = _hopf(inputs, opts)
    B0 = io.parse_algebra(inputs["B"], opts.field, validate=False)
    act = io.parse_action(inputs["B-action"], H, opts.field, validate=False)
    coact = io.parse_coaction(inputs["B-coaction"], H, opts.field, validate=False)
    d = io.parse_dmap(inputs["d"], opts.field)
    if act.dim != B0.dim or coact.dim != B0.dim:
        raise SuiteInputError("action/coaction carrier does not match B")
    if d.shape != (H.dim, B0.dim):
        raise SuiteInputError(f"d has shape {d.shape}, expected {(H.dim, B0.dim)}")
    B = BraidedHopfData(
        B0.dim, B0.m, B0.unit, B0.comul, B0.counit, B0.antipode, YetterDrinfeldModule(act, coact), B0.name
    )
    return BraidedCrossedModuleData(B, d, name=B0.name)


def _quasitriangular(inputs, opts) -> QuasitriangularStructure:
    H = _hopf(inputs, opts)
    R, dims = io.parse_element(inputs["R"], opts.field)
    if dims != (H.dim, H.dim):
        raise SuiteInputError(f"R has dims {dims}, expected {(H.dim, H.dim)}")
    return QuasitriangularStructure(H, R, name=H.name)


# ---------------------------------------------------------------- suite bodies


def _run_hopf(inputs, opts):
    H = _hopf(inputs, opts)
    return check_hopf(H), H.field


def _run_crossed_module(inputs, opts):
    cm = _crossed_module(inputs, opts)
    return check_crossed_module(cm), cm.H.field


def two_group_report(cm: CrossedModuleData, jobs: int = 1, title: str = "") -> tuple[CheckReport, object]:
    rep = CheckReport(title or f"strict 2-group {cm.name}".strip())
    pre = check_crossed_module(cm)
    rep.extend(pre, "crossed module: ")
    if not pre.passed:
        return rep, None
    qg = build_strict_2group(cm, check=False)
    rep.extend(check_embedded_quantum_groupoid(qg), "groupoid: ")
    rep.extend(check_interchange(qg, jobs=jobs), "interchange: ")
    rep.extend(groupoid_antipode_diagnostics(qg, cm), "diagnostics: ")
    rep.extend(check_units(qg), "units: ")
    return rep, qg


def _run_2group(inputs, opts):
    cm = _crossed_module(inputs, opts)
    rep, _ = two_group_report(cm, opts.jobs)
    return rep, cm.H.field


def _run_adjoint(inputs, opts):
    H = _hopf(inputs, opts)
    try:
        ad = adjoint_crossed_module(H)
    except PreconditionError as e:
        raise SuiteInputError(str(e)) from None
    rep, qg = two_group_report(ad.cm, opts.jobs)
    if qg is not None:
        rep.extend(check_adjoint_closed_forms(ad, qg), "closed forms: ")
    return rep, H.field


def _run_graded(inputs, opts):
    inp = io.parse_graded(inputs["graded"])
    fld = opts.field or QQ
    try:
        g = graded_function_crossed_module(inp, fld)
    except (PreconditionError, FieldError) as e:
        raise SuiteInputError(str(e)) from None
    rep, qg = two_group_report(g.cm, opts.jobs)
    if qg is not None:
        rep.extend(check_graded_closed_forms(g, qg), "closed forms: ")
    return rep, fld


def _run_quasitriangular(inputs, opts):
    q = _quasitriangular(inputs, opts)
    rep = CheckReport(f"quasitriangular {q.name}".strip())
    rep.extend(check_hopf(q.H), "H: ")
    rep.extend(check_quasitriangular(q))
    return rep, q.field


def _run_braided_cm(inputs, opts):
    bcm = _braided_cm(inputs, opts)
    return check_braided_crossed_module(bcm), bcm.B.field


def _run_biproduct(inputs, opts):
    bcm = _braided_cm(inputs, opts)
    proj = biproduct_projections(bcm, check=False, full_basis=opts.full_basis or None)
    rep = proj.report
    if proj.generator_scope:
        rep.title += " (generator scope)"
    return rep, bcm.B.field


def transmute_report(q: QuasitriangularStructure, full_basis: bool = False) -> CheckReport:
    H = q.H
    rep = CheckReport(f"transmutation {q.name}".strip())
    qt = check_quasitriangular(q)
    rep.extend(qt, "R: ")
    if not qt.passed:
        return rep
    B = transmutation(q)
    rep.extend(check_braided_hopf(B), "B: ")
    bcm = BraidedCrossedModuleData(B, H.id, name=B.name)
    rep.extend(check_braided_crossed_module(bcm, include_braided=False), "d = id: ")
    rep.add(compare_maps("d = id: induced coaction is the coproduct", induced_coaction(bcm).coact, H.comul, (H.dim,)))
    proj = biproduct_projections(bcm, check=False, full_basis=full_basis or None)
    scope = " (generator scope)" if proj.generator_scope else ""
    rep.extend(proj.report, "biproduct" + scope + ": ")
    return rep


def _run_transmute(inputs, opts):
    q = _quasitriangular(inputs, opts)
    return transmute_report(q, opts.full_basis), q.field


def _run_obstruction(inputs, opts):
    q = _quasitriangular(inputs, opts)
    qt = check_quasitriangular(q)
    if not qt.passed:
        rep = CheckReport(f"twisted coproduct obstruction {q.name}".strip())
        rep.extend(qt, "R: ")
        return rep, q.field
    B = transmutation(q, check=False)
    bcm = BraidedCrossedModuleData(B, q.H.id, name=B.name)
    return check_twisted_coproduct_obstruction(bcm, q), q.field


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("hopf", ("H",), _run_hopf, "Hopf algebra axioms"),
        Suite("crossed-module", ("A", "H", "d", "action"), _run_crossed_module, "crossed module, both formulations"),
        Suite("2group", ("A", "H", "d", "action"), _run_2group, "strict quantum 2-group from a crossed module"),
        Suite("adjoint", ("H",), _run_adjoint, "adjoint 2-group of a cocommutative H with closed forms"),
        Suite("graded", ("graded",), _run_graded, "graded function-algebra 2-group with closed forms"),
        Suite("quasitriangular", ("H", "R"), _run_quasitriangular, "quasitriangular structure"),
        Suite(
            "braided-cm",
            ("H", "B", "B-action", "B-coaction", "d"),
            _run_braided_cm,
            "braided crossed module",
        ),
        Suite("biproduct", ("H", "B", "B-action", "B-coaction", "d"), _run_biproduct, "biproduct projections"),
        Suite("transmute", ("H", "R"), _run_transmute, "transmutation, d = id and biproduct projections"),
        Suite("obstruction", ("H", "R"), _run_obstruction, "twisted coproduct against the adjoint groupoid product"),
    )
}


def run_suite(name: str, inputs: dict[str, str | Path], options: Options | None = None) -> SuiteResult:
    """Run a suite on files keyed by role.  Raises SuiteInputError / io.ParseError on bad input."""
    opts = options or Options()
    if name not in SUITES:
        raise SuiteInputError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    suite = SUITES[name]
    missing = [r for r in suite.roles if r not in inputs]
    if missing:
        raise SuiteInputError(f"suite {name!r} needs {', '.join(suite.roles)}; missing {', '.join(missing)}")
    used = {r: inputs[r] for r in suite.roles}
    try:
        report, fld = suite.run(used, opts)
    except ValueError as e:
        if isinstance(e, (io.ParseError, SuiteInputError)):
            raise
        raise SuiteInputError(str(e)) from e
    cert = io.certificate(name, fld, used, report)
    return SuiteResult(name, report, cert, fld)
