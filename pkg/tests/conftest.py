import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from qtwogroup import GF, QQ, cyclic, symmetric  # noqa: E402
from qtwogroup.constructions import (  # noqa: E402
    double_r_matrix,
    group_algebra,
    group_triangular_r,
    quantum_double_crossed_module,
    smash_product,
    sweedler_h4,
    sweedler_r0,
)

settings.register_profile(
    "default", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def kG(n_or_name, field=QQ):
    G = symmetric(3) if n_or_name == "S3" else cyclic(n_or_name)
    return group_algebra(G, field).materialized()


@lru_cache(maxsize=None)
def double_cm(n_or_name, field=QQ):
    G = symmetric(3) if n_or_name == "S3" else cyclic(n_or_name)
    return quantum_double_crossed_module(G, field)


@lru_cache(maxsize=None)
def double_q(n_or_name, field=QQ):
    from qtwogroup import QuasitriangularStructure

    cm = double_cm(n_or_name, field)
    G = symmetric(3) if n_or_name == "S3" else cyclic(n_or_name)
    D = smash_product(cm.A, cm.H, cm.action).materialized()
    return QuasitriangularStructure(D, double_r_matrix(G, field), f"D({G.name})")


@lru_cache(maxsize=None)
def z2_q():
    from qtwogroup import QuasitriangularStructure

    return QuasitriangularStructure(kG(2), group_triangular_r(QQ), "kZ2")


@lru_cache(maxsize=None)
def h4_q():
    from qtwogroup import QuasitriangularStructure

    return QuasitriangularStructure(sweedler_h4(QQ).materialized(), sweedler_r0(QQ), "H4")


@pytest.fixture
def F101():
    return GF(101)


@pytest.fixture(scope="session")
def gallery_runs(tmp_path_factory):
    """Emit every gallery entry and check it through the CLI with --jobs 1 and --jobs 4.

    Returns {entry: {"dir", "manifest", "runs": {jobs: {"exit", "seconds", "certs": {suite: bytes}}}}}.
    """
    import contextlib
    import io as _io
    import time

    from qtwogroup import io
    from qtwogroup.cli import main
    from qtwogroup.gallery import ENTRIES, gallery

    root = tmp_path_factory.mktemp("gallery")
    out = {}
    for name in ENTRIES:
        gallery(name, root)
        d = root / name
        manifest = io.load_json(d / "manifest.json")
        runs = {}
        for jobs in (1, 4):
            emit = root / f"certs-j{jobs}" / name
            buf = _io.StringIO()
            t0 = time.perf_counter()
            with contextlib.redirect_stdout(buf):
                code = main(["check", "--dir", str(d), "--jobs", str(jobs), "--emit", str(emit) + "/"])
            runs[jobs] = {
                "exit": code,
                "seconds": time.perf_counter() - t0,
                "text": buf.getvalue(),
                "certs": {p.name.split(".")[0]: p.read_bytes() for p in sorted(emit.iterdir())},
            }
        out[name] = {"dir": d, "manifest": manifest, "runs": runs}
    return out
