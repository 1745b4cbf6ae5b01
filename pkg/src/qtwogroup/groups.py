"""Finite groups as Cayley tables (identity at index 0)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product


class InvalidGroupError(ValueError):
    pass


@dataclass(frozen=True)
class CayleyTable:
    """``table[a][b]`` is the index of the product ``a*b``."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(int(x) for x in row) for row in self.table))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        validate_table(self.table)
        if self.labels is not None and len(self.labels) != self.order:
            raise InvalidGroupError("label count does not match the group order")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverses[a]

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(self.table[a].index(0) for a in range(self.order))

    def conj(self, h: int, s: int) -> int:
        """h s h^-1."""
        return self.mul(self.mul(h, s), self.inv(h))

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm

        e = 1
        for a in self.elements():
            e = lcm(e, self.element_order(a))
        return e

    def is_central(self, a: int) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for b in self.elements())

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


def validate_table(table) -> None:
    n = len(table)
    if n == 0:
        raise InvalidGroupError("empty table")
    for a, row in enumerate(table):
        if len(row) != n:
            raise InvalidGroupError(f"row {a} has length {len(row)}, expected {n}")
        if sorted(row) != list(range(n)):
            raise InvalidGroupError(f"row {a} is not a permutation")
    for b in range(n):
        if sorted(table[a][b] for a in range(n)) != list(range(n)):
            raise InvalidGroupError(f"column {b} is not a permutation")
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise InvalidGroupError("index 0 is not a two-sided identity")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InvalidGroupError(f"associativity fails at ({a}, {b}, {c})")


def cyclic(n: int) -> CayleyTable:
    return CayleyTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), name=f"Z{n}")


def trivial_group() -> CayleyTable:
    return CayleyTable(((0,),), name="1")


def symmetric(k: int) -> CayleyTable:
    """S_k with permutations in lexicographic order (identity first).

    Product is composition ``(p*q)(x) = p(q(x))``.
    """
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[tuple(p[q[x]] for x in range(k))] for q in perms) for p in perms)
    labels = tuple(_cycle_label(p) for p in perms)
    return CayleyTable(table, labels, name=f"S{k}")


def _cycle_label(p) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x + 1)
            x = p[x]
        if len(c) > 1:
            cycles.append("(" + "".join(map(str, c)) + ")")
    return "".join(cycles) or "e"


def direct_product(g: CayleyTable, h: CayleyTable) -> CayleyTable:
    """(a, b) is stored at index a*|h| + b."""
    ng, nh = g.order, h.order
    table = tuple(
        tuple(g.mul(a1, a2) * nh + h.mul(b1, b2) for a2 in range(ng) for b2 in range(nh))
        for a1 in range(ng)
        for b1 in range(nh)
    )
    return CayleyTable(table, name=f"{g.name}x{h.name}")


def klein_four() -> CayleyTable:
    t = direct_product(cyclic(2), cyclic(2))
    return CayleyTable(t.table, name="V4")


def is_homomorphism(f, src: CayleyTable, dst: CayleyTable) -> bool:
    return all(f[src.mul(a, b)] == dst.mul(f[a], f[b]) for a in src.elements() for b in src.elements())


def is_automorphism(f, g: CayleyTable) -> bool:
    return sorted(f) == list(g.elements()) and is_homomorphism(f, g, g)


def validate_right_action(action, G: CayleyTable, M: CayleyTable) -> None:
    """``action[g][m]`` is ``m <| g``; must be a right action by automorphisms."""
    if len(action) != G.order:
        raise InvalidGroupError("action table needs one row per element of G")
    for g in G.elements():
        if len(action[g]) != M.order or not is_automorphism(action[g], M):
            raise InvalidGroupError(f"action of G element {g} is not an automorphism of M")
    if list(action[0]) != list(M.elements()):
        raise InvalidGroupError("identity of G does not act trivially")
    for g, h in product(G.elements(), repeat=2):
        # (m <| g) <| h == m <| (gh)
        gh = G.mul(g, h)
        if any(action[h][action[g][m]] != action[gh][m] for m in M.elements()):
            raise InvalidGroupError(f"not a right action at ({g}, {h})")
