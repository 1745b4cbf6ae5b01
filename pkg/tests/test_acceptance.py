"""Acceptance criteria, one test each.  Every test prints a single ACCEPTANCE line."""

import json
import time

import pytest

from conftest import double_cm, double_q, z2_q
from oracles import cotensor_dimension, dense
from qtwogroup import (
    GF,
    QQ,
    BraidedCrossedModuleData,
    GradedCrossedModuleInput,
    adjoint_crossed_module,
    biproduct_projections,
    build_strict_2group,
    check_braided_crossed_module,
    check_braided_hopf,
    check_crossed_module,
    check_embedded_quantum_groupoid,
    check_hopf,
    check_interchange,
    check_quasitriangular,
    check_twisted_coproduct_obstruction,
    cyclic,
    graded_function_crossed_module,
    symmetric,
    transmutation,
)
from qtwogroup import io
from qtwogroup.braided import double_form, induced_coaction
from qtwogroup.constructions import function_algebra, group_algebra
from qtwogroup.hopf import trivial_action
from qtwogroup.linalg import SubspaceBasis, from_dense, subspace_equal
from qtwogroup.suites import SuiteInputError, run_suite
from qtwogroup.two_group import QuantumGroupoidData


def announce(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}  {detail}")


def checks(cert_bytes):
    return {c["name"]: c for c in json.loads(cert_bytes)["checks"]}


# ---------------------------------------------------------------- 1


def test_criterion_1_hopf_axioms(capsys):
    t0 = time.perf_counter()
    problems = []
    for G in (cyclic(2), cyclic(3), cyclic(4), symmetric(3)):
        for H in (group_algebra(G, QQ), function_algebra(G, QQ)):
            rep = check_hopf(H)
            if not rep.passed:
                problems.append(f"{H.name}: {[e.name for e in rep.failures()]}")
            if not rep["antipode invertible"].passed:
                problems.append(f"{H.name}: antipode not invertible")
            if rep["cocommutative"].passed and not rep["antipode involutive"].passed:
                problems.append(f"{H.name}: S^2 != id")
    secs = time.perf_counter() - t0
    ok = not problems and secs < 5
    announce(capsys, 1, ok, f"8 algebras, {secs:.2f}s (limit 5s) {problems or ''}")
    assert not problems
    assert secs < 5


# ---------------------------------------------------------------- 2


def _two_group_ok(cm):
    cmr = check_crossed_module(cm)
    qg = build_strict_2group(cm, check=False)
    gr = check_embedded_quantum_groupoid(qg)
    ic = check_interchange(qg)
    fails = [e.name for r in (cmr, gr, ic) for e in r.failures()]
    return fails


def test_criterion_2_double_two_groups(capsys):
    out, ok = [], True
    for key, field, limit in ((2, QQ, 60), (3, QQ, 60), ("S3", GF(101), 300)):
        t0 = time.perf_counter()
        fails = _two_group_ok(double_cm(key, field))
        secs = time.perf_counter() - t0
        good = not fails and secs < limit
        ok &= good
        out.append(f"D({key}) {field.name} {secs:.1f}s/{limit}s {'ok' if good else fails}")
    announce(capsys, 2, ok, "; ".join(out))
    assert ok, out


# ---------------------------------------------------------------- 3


def _group_closed_forms(G):
    """Closed forms on kG (x) kG in the group basis, computed from the Cayley table alone."""
    n = G.order
    phi = {b * n + h: G.mul(b, h) * n + h for b in range(n) for h in range(n)}
    s = {g * n + h: h for g in range(n) for h in range(n)}
    t = {g * n + h: g for g in range(n) for h in range(n)}
    i = {h: h * n + h for h in range(n)}
    anti = {g * n + h: h * n + g for g in range(n) for h in range(n)}

    def circ(a, b, c, d):
        return G.mul(G.mul(a, G.inv(b)), c) * n + d

    return phi, s, t, i, anti, circ


def test_criterion_3_adjoint_cotensor_and_closed_forms(capsys):
    out, ok = [], True
    for G in (cyclic(2), symmetric(3)):
        n = G.order
        H = group_algebra(G, QQ).materialized()
        qg = build_strict_2group(adjoint_crossed_module(H).cm)
        phi, s, t, i, anti, circ = _group_closed_forms(G)
        N = n * n
        phi2 = lambda v: {phi[a] * N + phi[b]: x for k, x in v.items() for a, b in [divmod(k, N)]}  # noqa: E731
        image = SubspaceBasis.span([phi2(v) for v in qg.cotensor.vectors], N * N, QQ)
        expected = SubspaceBasis.span(
            [{((a * n + b) * n + b) * n + c: 1} for a in range(n) for b in range(n) for c in range(n)], N * N, QQ
        )
        box_ok = subspace_equal(image, expected) and image.dim == n**3
        inv_phi = {v: k for k, v in phi.items()}
        forms_ok = all(
            qg.s.col(inv_phi[j]) == {s[j]: 1}
            and qg.t.col(inv_phi[j]) == {t[j]: 1}
            and qg.antipode.col(inv_phi[j]) == {inv_phi[anti[j]]: 1}
            for j in range(N)
        ) and all(qg.i.col(h) == {inv_phi[i[h]]: 1} for h in range(n))
        for j1 in range(N):
            for j2 in range(N):
                a, b = divmod(j1, n)
                c, d = divmod(j2, n)
                got = qg.circ.col(inv_phi[j1] * N + inv_phi[j2])
                forms_ok &= got == {inv_phi[circ(a, b, c, d)]: 1}
        good = box_ok and forms_ok
        ok &= good
        out.append(f"k{G.name}: cotensor dim {image.dim}=n^3 {box_ok}, closed forms {forms_ok}")
    announce(capsys, 3, ok, "; ".join(out))
    assert ok, out


# ---------------------------------------------------------------- 4

TWO_GROUP_SUITES = ("2group", "adjoint", "graded")
IMPLICATIONS = (
    "diagnostics: symmetry implies antipode reverses circ",
    "diagnostics: antipode involutive iff symmetry and A involutive",
    "diagnostics: antipode anti-comultiplicative iff symmetry and H cocommutative",
)


def test_criterion_4_antipode_diagnostics(gallery_runs, capsys):
    out, ok = [], True
    seen = 0
    for name, g in gallery_runs.items():
        for suite, cert in g["runs"][1]["certs"].items():
            if suite not in TWO_GROUP_SUITES:
                continue
            seen += 1
            c = checks(cert)
            bad = [k for k in IMPLICATIONS if not c[k]["passed"]]
            sq = c["diagnostics: groupoid antipode squares to id"]["passed"]
            fourth = c["diagnostics: groupoid antipode fourth power is id"]["passed"]
            if name.startswith("double-"):
                bad += [] if sq else ["S^2 != id on D(G)"]
            if name == "graded-s3-z2":
                bad += [] if (not sq and fourth) else ["expected S^2 != id and S^4 = id"]
                out.append(f"graded-s3-z2 S^2=id {sq}, S^4=id {fourth}")
            ok &= not bad
            if bad:
                out.append(f"{name}/{suite}: {bad}")
    ok &= seen == 7
    announce(capsys, 4, ok, f"{seen} gallery 2-groups; " + "; ".join(out))
    assert ok, out


# ---------------------------------------------------------------- 5


AGREE = ("cross-check: both formulations agree", "both formulations agree")


def _agreement_entries(c):
    return {k: v["passed"] for k, v in c.items() if k.endswith(AGREE)}


def _mutants(tmp):
    """One deliberately broken input set per suite."""
    from conftest import h4_q, kG
    from qtwogroup.gallery import gallery_entry

    def write(role_objs, sub):
        d = tmp / sub
        d.mkdir()
        return {r: io.write_json(d / f"{r}.json", o) for r, o in role_objs.items()}

    H2 = io.algebra_to_json(kG(2))
    bad_S = dict(H2, antipode=[[0, 0, "1"], [1, 1, "2"]])
    dz2 = gallery_entry("double-z2").files
    swap = dict(dz2["action"], entries=[[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]])
    bad_cm = dict(dz2, action=swap)
    S3 = symmetric(3)
    tau = S3.labels.index("(12)")
    conj = tuple(S3.mul(S3.mul(tau, m), S3.inv(tau)) for m in S3.elements())
    graded = GradedCrossedModuleInput(S3, cyclic(2), (tuple(S3.elements()), conj), (0, tau), name="conj-s3")
    tz2 = gallery_entry("transmute-z2").files
    bad_R = io.element_to_json({0: 1, 3: 1}, (2, 2), QQ, "bad R")
    neg_d = io.map_to_json(from_dense([[1, 0], [0, -1]], QQ), "g -> -g")
    bad_B = dict(tz2["B"], antipode=[[0, 0, "1"], [1, 1, "2"]])
    kS3 = io.algebra_to_json(kG("S3"))
    # a module Hopf algebra with d a Hopf map, but d(a) does not act by conjugation
    triv_cm = {
        "A": kS3,
        "H": kS3,
        "d": io.map_to_json(kG("S3").id, "id"),
        "action": io.action_to_json(trivial_action(kG("S3"), 6), "trivial"),
    }
    bad_S3 = dict(kS3, antipode=[[j, j, "1"] for j in range(6)])
    h4 = h4_q().H
    return {
        "hopf": write({"H": bad_S}, "hopf"),
        "crossed-module": write(triv_cm, "cm"),
        "2group": write(bad_cm, "2g"),
        "adjoint": write({"H": bad_S3}, "adj"),
        "graded": write({"graded": io.graded_to_json(graded)}, "graded"),
        "quasitriangular": write({"H": H2, "R": bad_R}, "qt"),
        "braided-cm": write(dict(tz2, d=neg_d), "bcm"),
        "biproduct": write(dict(tz2, B=bad_B), "bip"),
        "transmute": write({"H": H2, "R": bad_R}, "tr"),
        "obstruction": write(
            {"H": io.algebra_to_json(h4), "R": io.element_to_json({0: 1}, (4, 4), QQ, "1 (x) 1")}, "obs"
        ),
    }


def test_criterion_5_formulations_agree_and_mutants_fail(gallery_runs, tmp_path, capsys):
    problems, n_agree = [], 0
    for name, g in gallery_runs.items():
        for suite, cert in g["runs"][1]["certs"].items():
            for k, passed in _agreement_entries(checks(cert)).items():
                n_agree += 1
                if not passed:
                    problems.append(f"{name}/{suite}: {k}")
    mutant_lines = []
    for suite, inputs in _mutants(tmp_path).items():
        try:
            res = run_suite(suite, inputs)
        except SuiteInputError as e:
            problems.append(f"mutant {suite}: rejected as input ({e})")
            continue
        fails = res.report.failures()
        if res.report.passed:
            problems.append(f"mutant {suite}: passed")
        elif not any(e.witness is not None for e in fails):
            problems.append(f"mutant {suite}: no witness")
        for e in res.report.entries:
            if e.name.endswith(AGREE):
                n_agree += 1
                if not e.passed:
                    problems.append(f"mutant {suite}: {e.name}")
                elif suite == "crossed-module" and e.note is not None:
                    problems.append(f"mutant {suite}: agreement not exercised ({e.note})")
        mutant_lines.append(f"{suite}:fail")
    ok = not problems and n_agree > 0 and len(mutant_lines) == 10
    announce(capsys, 5, ok, f"{n_agree} agreement entries, mutants {' '.join(mutant_lines)} {problems or ''}")
    assert ok, problems


# ---------------------------------------------------------------- 6


def test_criterion_6_braided_suite(capsys):
    t0 = time.perf_counter()
    parts, ok = [], True
    for label, q in (("kZ2", z2_q()), ("D(Z3)", double_q(3))):
        qt = check_quasitriangular(q)
        good = qt.passed and qt["(S (x) id) R = R inverse"].passed and qt["(S (x) S) R = R"].passed
        B = transmutation(q)
        good &= check_braided_hopf(B).passed
        bcm = BraidedCrossedModuleData(B, q.H.id, name=B.name)
        good &= check_braided_crossed_module(bcm, include_braided=False).passed
        good &= induced_coaction(bcm).coact == q.H.comul
        proj = biproduct_projections(bcm, check=False)
        good &= proj.report.passed and proj.report["si = id"].passed and proj.report["ti = id"].passed
        ok &= good
        parts.append(f"{label} structures {'ok' if good else 'FAILED'}")
    q = z2_q()
    B = transmutation(q)
    obs = check_twisted_coproduct_obstruction(BraidedCrossedModuleData(B, q.H.id), q)
    e = obs["twisted coproduct breaks the circ-hom law"]
    witness_ok = e.passed and e.witness is not None and e.witness.lhs != e.witness.rhs
    parts.append(f"kZ2 circ-hom witness {'found' if witness_ok else 'NOT FOUND: ' + (e.witness.detail or '')}")
    secs = time.perf_counter() - t0
    ok = ok and witness_ok and secs < 120
    announce(capsys, 6, ok, f"{'; '.join(parts)}; {secs:.1f}s (limit 120s)")
    assert witness_ok, "no witness for kZ2: H (x) H is commutative, so the twisted coproduct is a circ-hom"
    assert ok


# ---------------------------------------------------------------- 7


def test_criterion_7_determinism(gallery_runs, capsys):
    differ, total = [], 0
    for name, g in gallery_runs.items():
        a, b = g["runs"][1]["certs"], g["runs"][4]["certs"]
        if a.keys() != b.keys():
            differ.append(f"{name}: suite sets differ")
        for suite in a:
            total += 1
            if a[suite] != b.get(suite):
                differ.append(f"{name}/{suite}")
    ok = not differ and total > 0
    announce(capsys, 7, ok, f"{total} certificates byte-identical across --jobs 1 and 4 {differ or ''}")
    assert ok, differ


# ---------------------------------------------------------------- 8


def _gallery_groupoids(g):
    """(label, groupoid) pairs whose cotensor a gallery suite computes."""
    d = g["dir"]
    files = g["manifest"]["files"]
    suites = g["manifest"]["suites"]
    out = []
    if "adjoint" in suites:
        H = io.parse_algebra(d / files["H"])
        out.append(("adjoint", build_strict_2group(adjoint_crossed_module(H).cm, check=False)))
    if "2group" in suites:
        from qtwogroup.suites import Options, _crossed_module

        cm = _crossed_module({r: d / f for r, f in files.items()}, Options())
        out.append(("2group", build_strict_2group(cm, check=False)))
    if "graded" in suites:
        gr = graded_function_crossed_module(io.parse_graded(d / files["graded"]), QQ)
        out.append(("graded", build_strict_2group(gr.cm, check=False)))
    if "obstruction" in suites:
        from qtwogroup.suites import Options, _quasitriangular

        q = _quasitriangular({r: d / files[r] for r in ("H", "R")}, Options())
        if check_quasitriangular(q).passed:
            bcm = BraidedCrossedModuleData(transmutation(q), q.H.id)
            T, M = double_form(bcm)
            out.append(("twisted form", QuantumGroupoidData(M, q.H, T.s, T.t, T.i, T.circ, T.antipode)))
    return out


def test_criterion_8_cotensor_oracle(gallery_runs, capsys):
    rows, ok, count = [], True, 0
    for name, g in gallery_runs.items():
        for label, qg in _gallery_groupoids(g):
            count += 1
            box = qg.cotensor
            p = qg.field.p
            res = cotensor_dimension(dense(qg.delta_R), dense(qg.delta_L), qg.M.dim, list(box.vectors), p)
            good = res["oracle"] == box.dim == res["basis_rank"] and res["basis_in_kernel"]
            ok &= good
            rows.append(f"{name}/{label} {box.dim}{'' if good else ' vs oracle ' + str(res)}")
    ok &= count >= 9
    announce(capsys, 8, ok, f"{count} cotensors match: " + ", ".join(rows))
    assert ok, rows


# ---------------------------------------------------------------- gallery manifests


def _manifest_cases():
    from qtwogroup.gallery import ENTRIES

    return list(ENTRIES)


@pytest.mark.parametrize("entry", _manifest_cases())
def test_gallery_manifest_verdicts(gallery_runs, entry):
    g = gallery_runs[entry]
    for suite, want in g["manifest"]["suites"].items():
        got = json.loads(g["runs"][1]["certs"][suite])["verdict"]
        assert got == want["expected"], f"{entry}/{suite}: manifest expects {want['expected']}, got {got}"
