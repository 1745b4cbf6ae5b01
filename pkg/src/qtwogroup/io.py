"""JSON file formats and certificates.

Every file is a JSON object with a ``"format"`` tag.  Scalars are strings
("3/2", "-1", "17") parsed in the declared field, and structure maps are
sparse lists of index tuples ending in a scalar:

  algebra   mul      [i, j, k, c]  m(e_i (x) e_j) has c on e_k
            comul    [i, j, k, c]  Delta(e_i) has c on e_j (x) e_k
            unit     [k, c]        1 has c on e_k
            counit   [i, c]        eps(e_i) = c
            antipode [i, k, c]     S(e_i) has c on e_k
  map       [j, i, c]              f(e_j) has c on e_i
  action    [h, v, w, c]           e_h |> e_v has c on e_w
  coaction  [v, h, w, c]           e_v -> c e_h (x) e_w
  element   [i_1, ..., i_k, c]     coefficient of e_{i_1} (x) ... (x) e_{i_k}

Tensor indices are row-major.  Unlisted entries are zero; repeated entries add.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .constructions import GradedCrossedModuleInput
from .fields import Field, FieldError, field_from_name
from .groups import CayleyTable, InvalidGroupError
from .hopf import Coaction, HopfAlgebraData, ModuleAction
from .linalg import LinearMap, Matrix, Vec, ravel, unravel
from .report import CheckReport

CERTIFICATE_SCHEMA = "qtwogroup-certificate/1"


class ParseError(ValueError):
    """Malformed input; the message names the file and the offending entry."""


class ValidationError(ValueError):
    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------- writing


def _scalar(x) -> str:
    return str(x)


def _map_triples(f: LinearMap, split) -> list[list]:
    out = []
    for j in range(f.cols):
        col = f.col(j)
        for i in sorted(col):
            if col[i]:
                out.append([*split(j, i), _scalar(col[i])])
    return out


def algebra_to_json(H: HopfAlgebraData) -> dict:
    n = H.dim
    return {
        "format": "algebra",
        "name": H.name,
        "field": H.field.name,
        "dim": n,
        "mul": _map_triples(H.m, lambda j, k: (*divmod(j, n), k)),
        "unit": _map_triples(H.unit, lambda j, k: (k,)),
        "comul": _map_triples(H.comul, lambda j, k: (j, *divmod(k, n))),
        "counit": _map_triples(H.counit, lambda j, k: (j,)),
        "antipode": _map_triples(H.antipode, lambda j, k: (j, k)),
    }


def map_to_json(f: LinearMap, name: str = "") -> dict:
    return {
        "format": "map",
        "name": name,
        "field": f.field.name,
        "rows": f.rows,
        "cols": f.cols,
        "entries": _map_triples(f, lambda j, i: (j, i)),
    }


def action_to_json(a: ModuleAction, name: str = "") -> dict:
    n = a.dim
    return {
        "format": "action",
        "name": name,
        "field": a.act.field.name,
        "hopf_dim": a.H.dim,
        "dim": n,
        "entries": _map_triples(a.act, lambda j, w: (*divmod(j, n), w)),
    }


def coaction_to_json(c: Coaction, name: str = "") -> dict:
    n = c.dim
    return {
        "format": "coaction",
        "name": name,
        "field": c.coact.field.name,
        "hopf_dim": c.H.dim,
        "dim": n,
        "entries": _map_triples(c.coact, lambda v, k: (v, *divmod(k, n))),
    }


def element_to_json(v: Vec, dims: tuple[int, ...], field: Field, name: str = "") -> dict:
    return {
        "format": "element",
        "name": name,
        "field": field.name,
        "dims": list(dims),
        "entries": [[*unravel(k, dims), _scalar(v[k])] for k in sorted(v) if v[k]],
    }


def group_to_json(G: CayleyTable) -> dict:
    d = {"format": "group", "name": G.name, "table": [list(r) for r in G.table]}
    if G.labels is not None:
        d["labels"] = list(G.labels)
    return d


def graded_to_json(inp: GradedCrossedModuleInput) -> dict:
    return {
        "format": "graded",
        "name": inp.name,
        "M": group_to_json(inp.M),
        "G": group_to_json(inp.G),
        "action": [list(r) for r in inp.action],
        "dhat": list(inp.dhat),
    }


def dumps(obj: dict) -> str:
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def write_json(path: str | Path, obj: dict) -> Path:
    path = Path(path)
    path.write_text(dumps(obj), encoding="utf-8")
    return path


# ---------------------------------------------------------------- reading


@dataclass
class _Ctx:
    source: str

    def fail(self, msg: str):
        raise ParseError(f"{self.source}: {msg}")


def _load(path_or_obj, ctx_name: str | None = None) -> tuple[dict, _Ctx]:
    if isinstance(path_or_obj, dict):
        return path_or_obj, _Ctx(ctx_name or "<object>")
    path = Path(path_or_obj)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"{path}: cannot read ({e.strerror})") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: top level must be an object")
    return obj, _Ctx(str(path))


def load_json(path: str | Path) -> dict:
    return _load(path)[0]


def _expect_format(obj: dict, ctx: _Ctx, fmt: str):
    if obj.get("format") != fmt:
        ctx.fail(f"expected format {fmt!r}, found {obj.get('format')!r}")


def _get(obj: dict, key: str, ctx: _Ctx, typ=None):
    if key not in obj:
        ctx.fail(f"missing field {key!r}")
    v = obj[key]
    if typ is not None and not isinstance(v, typ) or (typ is int and isinstance(v, bool)):
        ctx.fail(f"field {key!r} has the wrong type")
    return v


def _field(obj: dict, ctx: _Ctx, override: Field | None) -> Field:
    if override is not None:
        return override
    try:
        return field_from_name(str(_get(obj, "field", ctx)))
    except FieldError as e:
        ctx.fail(f"field: {e}")


def _columns(
    obj: dict, key: str, ctx: _Ctx, field: Field, bounds: tuple[int, ...], col_of, row_of, ncols: int
) -> list[Vec]:
    entries = _get(obj, key, ctx, list)
    cols: list[Vec] = [{} for _ in range(ncols)]
    for pos, e in enumerate(entries):
        where = f"{key}[{pos}]"
        if not isinstance(e, list) or len(e) != len(bounds) + 1:
            ctx.fail(f"{where}: expected {len(bounds)} indices and a scalar")
        idx, s = e[:-1], e[-1]
        for i, b in zip(idx, bounds):
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < b:
                ctx.fail(f"{where}: index {i!r} out of range 0..{b - 1}")
        if not isinstance(s, str):
            ctx.fail(f"{where}: scalar must be a string, found {s!r}")
        try:
            c = field.parse(s)
        except FieldError as err:
            ctx.fail(f"{where}: {err}")
        col, row = col_of(idx), row_of(idx)
        x = field.add(cols[col].get(row, 0), c)
        if x:
            cols[col][row] = x
        else:
            cols[col].pop(row, None)
    return cols


def parse_algebra(src, field: Field | None = None, validate: bool = True) -> HopfAlgebraData:
    obj, ctx = _load(src)
    _expect_format(obj, ctx, "algebra")
    f = _field(obj, ctx, field)
    n = _get(obj, "dim", ctx, int)
    if n < 1:
        ctx.fail("dim must be positive")
    H = HopfAlgebraData(
        n,
        Matrix(n, n * n, f, _columns(obj, "mul", ctx, f, (n, n, n), lambda e: e[0] * n + e[1], lambda e: e[2], n * n)),
        Matrix(n, 1, f, _columns(obj, "unit", ctx, f, (n,), lambda e: 0, lambda e: e[0], 1)),
        Matrix(n * n, n, f, _columns(obj, "comul", ctx, f, (n, n, n), lambda e: e[0], lambda e: e[1] * n + e[2], n)),
        Matrix(1, n, f, _columns(obj, "counit", ctx, f, (n,), lambda e: e[0], lambda e: 0, n)),
        Matrix(n, n, f, _columns(obj, "antipode", ctx, f, (n, n), lambda e: e[0], lambda e: e[1], n)),
        name=str(obj.get("name", "")),
    )
    if validate:
        from .hopf import check_hopf

        rep = check_hopf(H)
        if not rep.passed:
            raise ValidationError(f"{ctx.source}: not a Hopf algebra ({_fail_names(rep)})", rep)
    return H


def parse_dmap(src, field: Field | None = None) -> Matrix:
    obj, ctx = _load(src)
    _expect_format(obj, ctx, "map")
    f = _field(obj, ctx, field)
    r, c = _get(obj, "rows", ctx, int), _get(obj, "cols", ctx, int)
    return Matrix(r, c, f, _columns(obj, "entries", ctx, f, (c, r), lambda e: e[0], lambda e: e[1], c))


def parse_action(src, H: HopfAlgebraData, field: Field | None = None, validate: bool = True) -> ModuleAction:
    obj, ctx = _load(src)
    _expect_format(obj, ctx, "action")
    f = _field(obj, ctx, field)
    nH, n = _get(obj, "hopf_dim", ctx, int), _get(obj, "dim", ctx, int)
    if nH != H.dim:
        ctx.fail(f"hopf_dim {nH} does not match the acting algebra ({H.dim})")
    cols = _columns(obj, "entries", ctx, f, (nH, n, n), lambda e: e[0] * n + e[1], lambda e: e[2], nH * n)
    a = ModuleAction(H, n, Matrix(n, nH * n, f, cols))
    if validate:
        from .hopf import check_module

        rep = check_module(a)
        if not rep.passed:
            raise ValidationError(f"{ctx.source}: not a module ({_fail_names(rep)})", rep)
    return a


def parse_coaction(src, H: HopfAlgebraData, field: Field | None = None, validate: bool = True) -> Coaction:
    obj, ctx = _load(src)
    _expect_format(obj, ctx, "coaction")
    f = _field(obj, ctx, field)
    nH, n = _get(obj, "hopf_dim", ctx, int), _get(obj, "dim", ctx, int)
    if nH != H.dim:
        ctx.fail(f"hopf_dim {nH} does not match the coacting algebra ({H.dim})")
    cols = _columns(obj, "entries", ctx, f, (n, nH, n), lambda e: e[0], lambda e: e[1] * n + e[2], n)
    c = Coaction(H, n, Matrix(nH * n, n, f, cols))
    if validate:
        from .hopf import check_comodule

        rep = check_comodule(c)
        if not rep.passed:
            raise ValidationError(f"{ctx.source}: not a comodule ({_fail_names(rep)})", rep)
    return c


def parse_element(src, field: Field | None = None) -> tuple[Vec, tuple[int, ...]]:
    obj, ctx = _load(src)
    _expect_format(obj, ctx, "element")
    f = _field(obj, ctx, field)
    dims = _get(obj, "dims", ctx, list)
    if not dims or not all(isinstance(d, int) and d > 0 for d in dims):
        ctx.fail("dims must be a list of positive integers")
    dims = tuple(dims)
    cols = _columns(obj, "entries", ctx, f, dims, lambda e: 0, lambda e: ravel(tuple(e), dims), 1)
    return cols[0], dims


def parse_cayley(src) -> CayleyTable:
    obj, ctx = _load(src)
    return _group_from(obj, ctx)


def _group_from(obj: dict, ctx: _Ctx) -> CayleyTable:
    _expect_format(obj, ctx, "group")
    table = _get(obj, "table", ctx, list)
    try:
        return CayleyTable(table, obj.get("labels"), str(obj.get("name", "")))
    except (InvalidGroupError, TypeError, ValueError) as e:
        ctx.fail(f"table: {e}")


def parse_graded(src) -> GradedCrossedModuleInput:
    obj, ctx = _load(src)
    _expect_format(obj, ctx, "graded")
    M = _group_from(_get(obj, "M", ctx, dict), _Ctx(ctx.source + ":M"))
    G = _group_from(_get(obj, "G", ctx, dict), _Ctx(ctx.source + ":G"))
    action = _get(obj, "action", ctx, list)
    dhat = _get(obj, "dhat", ctx, list)
    try:
        return GradedCrossedModuleInput(
            M, G, tuple(tuple(int(x) for x in r) for r in action), tuple(int(x) for x in dhat), str(obj.get("name", ""))
        )
    except (TypeError, ValueError) as e:
        ctx.fail(f"action/dhat: {e}")


def _fail_names(rep: CheckReport) -> str:
    return ", ".join(e.name for e in rep.failures()[:5])


# ---------------------------------------------------------------- certificates


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def certificate(suite: str, field: Field, inputs: dict[str, str | Path], report: CheckReport) -> dict:
    """Deterministic certificate: no timestamps, inputs keyed by role with sha256 digests."""
    return {
        "schema": CERTIFICATE_SCHEMA,
        "engine": __version__,
        "suite": suite,
        "field": field.name,
        "inputs": {role: {"file": Path(p).name, "sha256": file_digest(p)} for role, p in sorted(inputs.items())},
        "title": report.title,
        "checks": [e.to_dict() for e in report.entries],
        "verdict": "pass" if report.passed else "fail",
    }
