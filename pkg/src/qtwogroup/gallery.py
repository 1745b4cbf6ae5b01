"""Named worked instances, emitted as input files plus a manifest of expected verdicts.

Expected verdicts marked ``claimed`` restate what the construction is supposed
to satisfy; ``computed`` ones were decided by running the checker at emit time.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import io
from .braided import QuasitriangularStructure, check_quasitriangular, transmutation
from .constructions import (
    GradedCrossedModuleInput,
    double_r_matrix,
    group_algebra,
    group_triangular_r,
    quantum_double_crossed_module,
    smash_product,
    sweedler_h4,
    sweedler_r0,
)
from .fields import GF, QQ, Field
from .groups import cyclic, symmetric


class UnknownEntry(KeyError):
    def __str__(self):
        return self.args[0]


@dataclass
class GalleryEntry:
    name: str
    field: Field
    description: str
    files: dict[str, dict]  # role -> JSON object
    suites: dict[str, dict]  # suite -> {"expected": ..., "basis": ...}

    def manifest(self) -> dict:
        return {
            "format": "manifest",
            "entry": self.name,
            "field": self.field.name,
            "description": self.description,
            "files": {role: f"{role}.json" for role in sorted(self.files)},
            "suites": self.suites,
        }


def _claimed(*suites: str) -> dict[str, dict]:
    return {s: {"expected": "pass", "basis": "claimed"} for s in suites}


def _adjoint(G, label):
    def build() -> GalleryEntry:
        H = group_algebra(G, QQ).materialized()
        return GalleryEntry(
            f"adjoint-{label}",
            QQ,
            f"cocommutative H = k{G.name} acting on itself by the adjoint action, d = id",
            {"H": io.algebra_to_json(H)},
            _claimed("hopf", "adjoint"),
        )

    return build


def _double(G, label, field):
    def build() -> GalleryEntry:
        cm = quantum_double_crossed_module(G, field)
        return GalleryEntry(
            f"double-{label}",
            field,
            f"k({G.name}) with the coadjoint action of k{G.name} and trivial d; total space D({G.name})",
            {
                "A": io.algebra_to_json(cm.A),
                "H": io.algebra_to_json(cm.H),
                "d": io.map_to_json(cm.d, "d"),
                "action": io.action_to_json(cm.action, "coadjoint"),
            },
            _claimed("crossed-module", "2group"),
        )

    return build


def _graded(name, inp, description):
    def build() -> GalleryEntry:
        return GalleryEntry(name, QQ, description, {"graded": io.graded_to_json(inp)}, _claimed("graded"))

    return build


def _transmute_files(q: QuasitriangularStructure) -> dict[str, dict]:
    H = q.H
    B = transmutation(q)
    return {
        "H": io.algebra_to_json(H),
        "R": io.element_to_json(q.R, (H.dim, H.dim), H.field, "R"),
        "B": io.algebra_to_json(B.as_hopf_data()),
        "B-action": io.action_to_json(B.yd.action, "adjoint"),
        "B-coaction": io.coaction_to_json(B.yd.coaction, "R-induced"),
        "d": io.map_to_json(H.id, "id"),
    }


def _transmute_z2() -> GalleryEntry:
    H = group_algebra(cyclic(2), QQ).materialized()
    q = QuasitriangularStructure(H, group_triangular_r(QQ), "kZ2")
    suites = _claimed("quasitriangular", "transmute", "braided-cm", "biproduct", "obstruction")
    return GalleryEntry(
        "transmute-z2",
        QQ,
        "kZ2 with its nontrivial triangular R; braided version with d = id",
        _transmute_files(q),
        suites,
    )


def _transmute_double_s3() -> GalleryEntry:
    F = GF(101)
    cm = quantum_double_crossed_module(symmetric(3), F)
    D = smash_product(cm.A, cm.H, cm.action, name="D(S3)").materialized()
    q = QuasitriangularStructure(D, double_r_matrix(symmetric(3), F), "D(S3)")
    return GalleryEntry(
        "transmute-double-s3",
        F,
        "D(S3) with its canonical R; braided version with d = id (biproduct checked on generators)",
        _transmute_files(q),
        _claimed("quasitriangular", "braided-cm", "biproduct"),
    )


def _sweedler() -> GalleryEntry:
    H = sweedler_h4(QQ).materialized()
    q = QuasitriangularStructure(H, sweedler_r0(QQ), "H4")
    verdict = "pass" if check_quasitriangular(q).passed else "fail"
    computed = {"expected": verdict, "basis": "computed"}
    suites = {"hopf": {"expected": "pass", "basis": "claimed"}, "quasitriangular": computed}
    if verdict == "pass":
        suites["transmute"] = computed
        suites["obstruction"] = computed
    return GalleryEntry(
        "sweedler-h4",
        QQ,
        "four-dimensional Sweedler algebra, g^2 = 1, x^2 = 0, xg = -gx, with candidate R0",
        {"H": io.algebra_to_json(H), "R": io.element_to_json(q.R, (4, 4), QQ, "R0")},
        suites,
    )


S3 = symmetric(3)
_S3_TRANSPOSITION = S3.labels.index("(12)")

ENTRIES: dict[str, Callable[[], GalleryEntry]] = {
    "adjoint-z2": _adjoint(cyclic(2), "z2"),
    "adjoint-s3": _adjoint(S3, "s3"),
    "double-z2": _double(cyclic(2), "z2", QQ),
    "double-z3": _double(cyclic(3), "z3", QQ),
    "double-s3": _double(S3, "s3", GF(101)),
    "graded-s3-z2": _graded(
        "graded-s3-z2",
        GradedCrossedModuleInput(
            S3, cyclic(2), ((0, 1, 2, 3, 4, 5),) * 2, (0, _S3_TRANSPOSITION), name="graded-s3-z2"
        ),
        "k(S3) graded by Z2 with trivial action; the sign character maps to (12)",
    ),
    "graded-z3-inv": _graded(
        "graded-z3-inv",
        GradedCrossedModuleInput(cyclic(3), cyclic(2), ((0, 1, 2), (0, 2, 1)), (0, 0), name="graded-z3-inv"),
        "k(Z3) with Z2 acting by inversion and trivial d_hat",
    ),
    "transmute-z2": _transmute_z2,
    "transmute-double-s3": _transmute_double_s3,
    "sweedler-h4": _sweedler,
}


def gallery_entry(name: str) -> GalleryEntry:
    if name not in ENTRIES:
        raise UnknownEntry(f"unknown gallery entry {name!r}; available: {', '.join(ENTRIES)}")
    return ENTRIES[name]()


def gallery(name: str, emit_dir: str | Path) -> list[Path]:
    """Write the entry's input files and manifest.json into emit_dir/name."""
    entry = gallery_entry(name)
    out = Path(emit_dir) / name
    out.mkdir(parents=True, exist_ok=True)
    paths = [io.write_json(out / f"{role}.json", obj) for role, obj in sorted(entry.files.items())]
    paths.append(io.write_json(out / "manifest.json", entry.manifest()))
    return paths


def manifest_inputs(directory: str | Path) -> tuple[dict, dict[str, Path]]:
    """Load a manifest and resolve its file roles to paths."""
    directory = Path(directory)
    obj = io.load_json(directory / "manifest.json")
    return obj, {role: directory / fname for role, fname in obj["files"].items()}
