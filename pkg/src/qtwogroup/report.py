"""Check reports shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .linalg import LinearMap, Vec, unravel


@dataclass(frozen=True)
class Witness:
    index: int | tuple | None = None
    multi_index: tuple | None = None
    lhs: Vec | None = None
    rhs: Vec | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        d: dict = {}
        if self.index is not None:
            d["index"] = list(self.index) if isinstance(self.index, tuple) else self.index
        if self.multi_index is not None:
            d["multi_index"] = list(self.multi_index)
        if self.lhs is not None:
            d["lhs"] = _vec_json(self.lhs)
        if self.rhs is not None:
            d["rhs"] = _vec_json(self.rhs)
        if self.detail is not None:
            d["detail"] = self.detail
        return d

    def short(self) -> str:
        parts = []
        if self.index is not None:
            parts.append(f"index={self.index}")
        if self.multi_index is not None:
            parts.append(f"basis={self.multi_index}")
        if self.lhs is not None:
            parts.append(f"lhs={_vec_str(self.lhs)}")
        if self.rhs is not None:
            parts.append(f"rhs={_vec_str(self.rhs)}")
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


def _vec_json(v: Vec) -> list:
    return [[k, str(v[k])] for k in sorted(v)]


def _vec_str(v: Vec, limit: int = 6) -> str:
    ks = sorted(v)
    body = ", ".join(f"{k}:{v[k]}" for k in ks[:limit])
    if len(ks) > limit:
        body += f", ... ({len(ks)} terms)"
    return "{" + body + "}"


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    required: bool = True
    witness: Witness | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "required": self.required}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    title: str = ""
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, entry: CheckEntry) -> CheckEntry:
        self.entries.append(entry)
        return entry

    def extend(self, other: "CheckReport | Iterable[CheckEntry]", prefix: str = "") -> "CheckReport":
        items = other.entries if isinstance(other, CheckReport) else other
        for e in items:
            if prefix:
                e = CheckEntry(prefix + e.name, e.passed, e.required, e.witness, e.note)
            self.entries.append(e)
        return self

    def flag(self, name: str, ok: bool, required: bool = True, detail: str | None = None, note: str | None = None):
        w = Witness(detail=detail) if (detail and not ok) else None
        return self.add(CheckEntry(name, bool(ok), required, w, note))

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries if e.required)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.required and not e.passed]

    def __getitem__(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "verdict": "pass" if self.passed else "fail",
            "checks": [e.to_dict() for e in self.entries],
        }

    def to_text(self) -> str:
        lines = [f"== {self.title}" if self.title else "=="]
        for e in self.entries:
            if e.required:
                tag = "PASS" if e.passed else "FAIL"
            else:
                tag = "info:yes" if e.passed else "info:no"
            line = f"{tag:10s} {e.name}"
            if e.witness is not None and not e.passed:
                line += "  [" + e.witness.short() + "]"
            if e.note:
                line += f"  -- {e.note}"
            lines.append(line)
        lines.append(f"verdict: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def compare_maps(
    name: str,
    lhs: LinearMap,
    rhs: LinearMap,
    dims: Sequence[int] | None = None,
    required: bool = True,
    columns: Iterable[int] | None = None,
    note: str | None = None,
) -> CheckEntry:
    """Exact equality of two maps, scanning domain basis indices in order.

    The witness is the first differing column (``dims`` gives the tensor
    factorisation of the domain for the multi-index).
    """
    if lhs.shape != rhs.shape:
        return CheckEntry(
            name, False, required, Witness(detail=f"shape mismatch {lhs.shape} vs {rhs.shape}"), note
        )
    cols = range(lhs.cols) if columns is None else columns
    for j in cols:
        a, b = lhs.col(j), rhs.col(j)
        if a != b:
            mi = unravel(j, dims) if dims else None
            return CheckEntry(name, False, required, Witness(j, mi, dict(a), dict(b)), note)
    return CheckEntry(name, True, required, None, note)


def compare_on_vectors(
    name: str,
    lhs: Callable[[Vec], Vec],
    rhs: Callable[[Vec], Vec],
    vectors: Sequence[Vec],
    required: bool = True,
    note: str | None = None,
) -> CheckEntry:
    """Equality of two maps on a list of vectors (e.g. a subspace basis)."""
    for k, v in enumerate(vectors):
        a, b = lhs(v), rhs(v)
        if a != b:
            return CheckEntry(name, False, required, Witness(k, None, dict(a), dict(b)), note)
    return CheckEntry(name, True, required, None, note)


def iff_entry(name: str, left: bool, right: bool, required: bool = True, note: str | None = None) -> CheckEntry:
    ok = bool(left) == bool(right)
    w = None if ok else Witness(detail=f"left side {bool(left)}, right side {bool(right)}")
    return CheckEntry(name, ok, required, w, note)


def implies_entry(name: str, premise: bool, conclusion: bool, required: bool = True, note: str | None = None) -> CheckEntry:
    ok = (not premise) or bool(conclusion)
    w = None if ok else Witness(detail="premise holds but conclusion fails")
    return CheckEntry(name, ok, required, w, note)


def zero_entry(name: str, f: LinearMap, dims=None, required: bool = True) -> CheckEntry:
    for j in range(f.cols):
        c = f.col(j)
        if c:
            return CheckEntry(name, False, required, Witness(j, unravel(j, dims) if dims else None, dict(c), {}))
    return CheckEntry(name, True, required)


__all__ = [
    "Witness",
    "CheckEntry",
    "CheckReport",
    "compare_maps",
    "compare_on_vectors",
    "iff_entry",
    "implies_entry",
    "zero_entry",
]
