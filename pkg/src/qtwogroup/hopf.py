"""Finite-dimensional Hopf algebras as structure maps, plus axiom checkers.

Everything is a :class:`~qtwogroup.linalg.LinearMap` on tensor powers of
the basis: ``m: n*n -> n``, ``unit: 1 -> n``, ``comul: n -> n*n``,
``counit: n -> 1``, ``antipode: n -> n``.  Axioms are compared as exact
maps; the first failing basis index is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .fields import Field, same_field
from .linalg import (
    DimensionMismatch,
    LinearMap,
    Matrix,
    SingularMap,
    Vec,
    chain,
    compose,
    flip,
    identity,
    inverse,
    is_invertible,
    kron,
    permute_factors,
    vec_tensor,
)
from .report import CheckEntry, CheckReport, compare_maps

# materialize structure maps whose domain has at most this many basis vectors
MATERIALIZE_LIMIT = 200_000


def _maybe_materialize(f: LinearMap) -> LinearMap:
    return f.materialize() if f.cols <= MATERIALIZE_LIMIT else f


def _expect_shape(name: str, f: LinearMap, shape: tuple[int, int]):
    if f.shape != shape:
        raise DimensionMismatch(f"{name} has shape {f.shape}, expected {shape}")


@dataclass(eq=False)
class HopfAlgebraData:
    dim: int
    m: LinearMap
    unit: LinearMap
    comul: LinearMap
    counit: LinearMap
    antipode: LinearMap
    name: str = ""

    def __post_init__(self):
        n = self.dim
        _expect_shape("m", self.m, (n, n * n))
        _expect_shape("unit", self.unit, (n, 1))
        _expect_shape("comul", self.comul, (n * n, n))
        _expect_shape("counit", self.counit, (1, n))
        _expect_shape("antipode", self.antipode, (n, n))
        same_field(self.m.field, self.unit.field, self.comul.field, self.counit.field, self.antipode.field)

    @property
    def field(self) -> Field:
        return self.m.field

    @property
    def id(self) -> Matrix:
        return identity(self.dim, self.field)

    @cached_property
    def one(self) -> Vec:
        return dict(self.unit.col(0))

    def mul(self, x: Vec, y: Vec) -> Vec:
        return self.m.apply(vec_tensor(x, y, self.dim, self.field))

    def delta(self, x: Vec) -> Vec:
        return self.comul.apply(x)

    def eps(self, x: Vec):
        return self.counit.apply(x).get(0, 0)

    @cached_property
    def antipode_inverse(self) -> Matrix:
        return inverse(self.antipode)

    def materialized(self) -> "HopfAlgebraData":
        return HopfAlgebraData(
            self.dim,
            _maybe_materialize(self.m),
            self.unit.materialize(),
            self.comul.materialize(),
            self.counit.materialize(),
            self.antipode.materialize(),
            self.name,
        )

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebraData):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.m == other.m
            and self.unit == other.unit
            and self.comul == other.comul
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    __hash__ = None

    def __repr__(self):
        return f"<HopfAlgebraData {self.name or '?'} dim={self.dim} over {self.field.name}>"


# ---------------------------------------------------------------- tensor helpers


def interleave(n_left: list[int] | tuple, n_right: list[int] | tuple, field: Field) -> LinearMap:
    """(a1..ak) (x) (b1..bk) -> a1 b1 a2 b2 ... ak bk."""
    k = len(n_left)
    dims = list(n_left) + list(n_right)
    perm = []
    for i in range(k):
        perm += [i, k + i]
    return permute_factors(dims, perm, field)


def deinterleave(n_left, n_right, field: Field) -> LinearMap:
    """a1 b1 ... ak bk -> (a1..ak) (x) (b1..bk)."""
    k = len(n_left)
    dims = []
    for a, b in zip(n_left, n_right):
        dims += [a, b]
    perm = [2 * i for i in range(k)] + [2 * i + 1 for i in range(k)]
    return permute_factors(dims, perm, field)


def tensor_mult(m: LinearMap, n: int, k: int) -> LinearMap:
    """Componentwise product on H^{(x)k} given ``m`` on H."""
    if k == 1:
        return m
    f = m.field
    return compose(kron(*([m] * k)), interleave([n] * k, [n] * k, f))


def tensor_comul(comul: LinearMap, n: int, k: int) -> LinearMap:
    """Tensor-product coalgebra coproduct on H^{(x)k}."""
    if k == 1:
        return comul
    f = comul.field
    return compose(deinterleave([n] * k, [n] * k, f), kron(*([comul] * k)))


def triple_mult(H: HopfAlgebraData) -> LinearMap:
    """x (x) y (x) z -> xyz."""
    return compose(H.m, kron(H.m, H.id))


def tensor_product_hopf(H: HopfAlgebraData, K: HopfAlgebraData, name: str = "") -> HopfAlgebraData:
    f = same_field(H.field, K.field)
    nH, nK = H.dim, K.dim
    m = compose(kron(H.m, K.m), permute_factors((nH, nK, nH, nK), (0, 2, 1, 3), f))
    comul = compose(permute_factors((nH, nH, nK, nK), (0, 2, 1, 3), f), kron(H.comul, K.comul))
    out = HopfAlgebraData(
        nH * nK,
        m,
        kron(H.unit, K.unit),
        comul,
        kron(H.counit, K.counit),
        kron(H.antipode, K.antipode),
        name or f"{H.name}(x){K.name}",
    )
    return out.materialized()


# ---------------------------------------------------------------- checkers


def check_algebra(m: LinearMap, unit: LinearMap, prefix: str = "") -> CheckReport:
    n = m.rows
    if m.shape != (n, n * n) or unit.shape != (n, 1):
        raise DimensionMismatch(f"algebra maps of shapes {m.shape}, {unit.shape}")
    f = m.field
    idn = identity(n, f)
    rep = CheckReport("algebra")
    rep.add(compare_maps(prefix + "associativity", compose(m, kron(m, idn)), compose(m, kron(idn, m)), (n, n, n)))
    rep.add(compare_maps(prefix + "left unit", compose(m, kron(unit, idn)), idn, (n,)))
    rep.add(compare_maps(prefix + "right unit", compose(m, kron(idn, unit)), idn, (n,)))
    return rep


def check_coalgebra(comul: LinearMap, counit: LinearMap, prefix: str = "") -> CheckReport:
    n = comul.cols
    if comul.shape != (n * n, n) or counit.shape != (1, n):
        raise DimensionMismatch(f"coalgebra maps of shapes {comul.shape}, {counit.shape}")
    f = comul.field
    idn = identity(n, f)
    rep = CheckReport("coalgebra")
    rep.add(
        compare_maps(prefix + "coassociativity", compose(kron(comul, idn), comul), compose(kron(idn, comul), comul), (n,))
    )
    rep.add(compare_maps(prefix + "left counit", compose(kron(counit, idn), comul), idn, (n,)))
    rep.add(compare_maps(prefix + "right counit", compose(kron(idn, counit), comul), idn, (n,)))
    return rep


def check_bialgebra(H: HopfAlgebraData, prefix: str = "") -> CheckReport:
    n, f = H.dim, H.field
    rep = CheckReport("bialgebra")
    rep.add(
        compare_maps(
            prefix + "comultiplication multiplicative",
            compose(H.comul, H.m),
            compose(tensor_mult(H.m, n, 2), kron(H.comul, H.comul)),
            (n, n),
        )
    )
    rep.add(compare_maps(prefix + "counit multiplicative", compose(H.counit, H.m), kron(H.counit, H.counit), (n, n)))
    rep.add(compare_maps(prefix + "comultiplication unital", compose(H.comul, H.unit), kron(H.unit, H.unit)))
    rep.add(compare_maps(prefix + "counit unital", compose(H.counit, H.unit), identity(1, f)))
    return rep


def antipode_maps(H: HopfAlgebraData, S: LinearMap | None = None) -> tuple[LinearMap, LinearMap, LinearMap]:
    """(m(S (x) id)Delta, m(id (x) S)Delta, eta eps)."""
    S = H.antipode if S is None else S
    left = chain(H.m, kron(S, H.id), H.comul)
    right = chain(H.m, kron(H.id, S), H.comul)
    return left, right, compose(H.unit, H.counit)


def check_hopf(H: HopfAlgebraData, prefix: str = "") -> CheckReport:
    n = H.dim
    rep = CheckReport(f"Hopf algebra {H.name}".strip())
    rep.extend(check_algebra(H.m, H.unit, prefix))
    rep.extend(check_coalgebra(H.comul, H.counit, prefix))
    rep.extend(check_bialgebra(H, prefix))
    left, right, ee = antipode_maps(H)
    rep.add(compare_maps(prefix + "antipode left", left, ee, (n,)))
    rep.add(compare_maps(prefix + "antipode right", right, ee, (n,)))
    rep.flag(prefix + "antipode invertible", is_invertible(H.antipode))
    rep.add(compare_maps(prefix + "antipode involutive", compose(H.antipode, H.antipode), H.id, (n,), required=False))
    rep.add(compare_maps(prefix + "cocommutative", compose(flip(n, n, H.field), H.comul), H.comul, (n,), required=False))
    rep.add(compare_maps(prefix + "commutative", compose(H.m, flip(n, n, H.field)), H.m, (n, n), required=False))
    return rep


def is_cocommutative(H: HopfAlgebraData) -> bool:
    return compose(flip(H.dim, H.dim, H.field), H.comul) == H.comul


def is_commutative(H: HopfAlgebraData) -> bool:
    return compose(H.m, flip(H.dim, H.dim, H.field)) == H.m


def check_hopf_map(f: LinearMap, H: HopfAlgebraData, K: HopfAlgebraData, prefix: str = "") -> CheckReport:
    """f: H -> K preserves product, unit, coproduct, counit and antipode."""
    _expect_shape("Hopf map", f, (K.dim, H.dim))
    nH = H.dim
    rep = CheckReport("Hopf algebra map")
    rep.add(compare_maps(prefix + "multiplicative", compose(f, H.m), compose(K.m, kron(f, f)), (nH, nH)))
    rep.add(compare_maps(prefix + "unital", compose(f, H.unit), K.unit))
    rep.add(compare_maps(prefix + "comultiplicative", compose(K.comul, f), compose(kron(f, f), H.comul), (nH,)))
    rep.add(compare_maps(prefix + "counital", compose(K.counit, f), H.counit, (nH,)))
    rep.add(compare_maps(prefix + "antipode compatible", compose(f, H.antipode), compose(K.antipode, f), (nH,)))
    return rep


def dual_hopf(H: HopfAlgebraData, name: str = "") -> HopfAlgebraData:
    """Dual Hopf algebra in the dual basis: every structure map transposed."""
    return HopfAlgebraData(
        H.dim,
        H.comul.transpose(),
        H.counit.transpose(),
        H.m.transpose(),
        H.unit.transpose(),
        H.antipode.transpose(),
        name or f"{H.name}*",
    )


# ---------------------------------------------------------------- modules and comodules


@dataclass(eq=False)
class ModuleAction:
    """Left action ``act: H (x) V -> V``."""

    H: HopfAlgebraData
    dim: int
    act: LinearMap

    def __post_init__(self):
        _expect_shape("action", self.act, (self.dim, self.H.dim * self.dim))

    def __call__(self, h: Vec, v: Vec) -> Vec:
        return self.act.apply(vec_tensor(h, v, self.dim, self.H.field))


@dataclass(eq=False)
class Coaction:
    """Left coaction ``coact: V -> H (x) V``."""

    H: HopfAlgebraData
    dim: int
    coact: LinearMap

    def __post_init__(self):
        _expect_shape("coaction", self.coact, (self.H.dim * self.dim, self.dim))


@dataclass(eq=False)
class YetterDrinfeldModule:
    action: ModuleAction
    coaction: Coaction

    def __post_init__(self):
        if self.action.dim != self.coaction.dim:
            raise DimensionMismatch("action and coaction carriers differ")
        if self.action.H is not self.coaction.H and self.action.H != self.coaction.H:
            raise ValueError("action and coaction are over different Hopf algebras")

    @property
    def H(self) -> HopfAlgebraData:
        return self.action.H

    @property
    def dim(self) -> int:
        return self.action.dim


def trivial_action(H: HopfAlgebraData, dim: int) -> ModuleAction:
    return ModuleAction(H, dim, kron(H.counit, identity(dim, H.field)).materialize())


def trivial_coaction(H: HopfAlgebraData, dim: int) -> Coaction:
    return Coaction(H, dim, kron(H.unit, identity(dim, H.field)).materialize())


def adjoint_map(H: HopfAlgebraData) -> LinearMap:
    """h (x) g -> h_1 g S(h_2)."""
    n, f = H.dim, H.field
    return chain(
        triple_mult(H),
        kron(H.id, H.id, H.antipode),
        permute_factors((n, n, n), (0, 2, 1), f),
        kron(H.comul, H.id),
    )


def adjoint_action(H: HopfAlgebraData) -> ModuleAction:
    return ModuleAction(H, H.dim, _maybe_materialize(adjoint_map(H)))


def regular_coaction(H: HopfAlgebraData) -> Coaction:
    return Coaction(H, H.dim, H.comul)


def tensor_action(a: ModuleAction, b: ModuleAction) -> LinearMap:
    """H acting on V (x) W through the coproduct."""
    H = a.H
    nH, f = H.dim, H.field
    return chain(
        kron(a.act, b.act),
        permute_factors((nH, nH, a.dim, b.dim), (0, 2, 1, 3), f),
        kron(H.comul, identity(a.dim * b.dim, f)),
    )


def tensor_coaction(a: Coaction, b: Coaction) -> LinearMap:
    """Coaction on V (x) W: v (x) w -> v^(1) w^(1) (x) v^(2) (x) w^(2)."""
    H = a.H
    nH, f = H.dim, H.field
    return chain(
        kron(H.m, identity(a.dim * b.dim, f)),
        permute_factors((nH, a.dim, nH, b.dim), (0, 2, 1, 3), f),
        kron(a.coact, b.coact),
    )


def check_module(action: ModuleAction, prefix: str = "") -> CheckReport:
    H, n = action.H, action.dim
    idv = identity(n, H.field)
    rep = CheckReport("module")
    rep.add(
        compare_maps(
            prefix + "action associative",
            compose(action.act, kron(H.m, idv)),
            compose(action.act, kron(H.id, action.act)),
            (H.dim, H.dim, n),
        )
    )
    rep.add(compare_maps(prefix + "action unital", compose(action.act, kron(H.unit, idv)), idv, (n,)))
    return rep


def check_comodule(coaction: Coaction, prefix: str = "") -> CheckReport:
    H, n = coaction.H, coaction.dim
    idv = identity(n, H.field)
    c = coaction.coact
    rep = CheckReport("comodule")
    rep.add(
        compare_maps(
            prefix + "coaction coassociative", compose(kron(H.id, c), c), compose(kron(H.comul, idv), c), (n,)
        )
    )
    rep.add(compare_maps(prefix + "coaction counital", compose(kron(H.counit, idv), c), idv, (n,)))
    return rep


def check_module_algebra(H: HopfAlgebraData, A: HopfAlgebraData, action: ModuleAction, prefix: str = "") -> CheckReport:
    if action.dim != A.dim:
        raise DimensionMismatch("action carrier does not match the algebra")
    nH, nA, f = H.dim, A.dim, H.field
    rep = CheckReport("module algebra")
    rep.extend(check_module(action, prefix))
    # h |> (ab) == (h1 |> a)(h2 |> b)
    rep.add(
        compare_maps(
            prefix + "action multiplicative",
            compose(action.act, kron(H.id, A.m)),
            chain(
                A.m,
                kron(action.act, action.act),
                permute_factors((nH, nH, nA, nA), (0, 2, 1, 3), f),
                kron(H.comul, A.id, A.id),
            ),
            (nH, nA, nA),
        )
    )
    rep.add(
        compare_maps(
            prefix + "action preserves unit", compose(action.act, kron(H.id, A.unit)), compose(A.unit, H.counit), (nH,)
        )
    )
    return rep


def check_module_coalgebra(H: HopfAlgebraData, A: HopfAlgebraData, action: ModuleAction, prefix: str = "") -> CheckReport:
    if action.dim != A.dim:
        raise DimensionMismatch("action carrier does not match the coalgebra")
    nH, nA, f = H.dim, A.dim, H.field
    rep = CheckReport("module coalgebra")
    rep.add(
        compare_maps(
            prefix + "action comultiplicative",
            compose(A.comul, action.act),
            chain(
                kron(action.act, action.act),
                permute_factors((nH, nH, nA, nA), (0, 2, 1, 3), f),
                kron(H.comul, A.comul),
            ),
            (nH, nA),
        )
    )
    rep.add(
        compare_maps(
            prefix + "action preserves counit", compose(A.counit, action.act), kron(H.counit, A.counit), (nH, nA)
        )
    )
    return rep


def yd_rhs(action: ModuleAction, coaction: Coaction) -> LinearMap:
    """h (x) v  ->  h_1 v^(1) S(h_3) (x) h_2 |> v^(2)."""
    H, n = action.H, action.dim
    nH, f = H.dim, H.field
    triple = compose(kron(H.comul, H.id), H.comul)
    return chain(
        kron(triple_mult(H), action.act),
        kron(H.id, H.id, H.antipode, H.id, identity(n, f)),
        # factors: h1 h2 h3 c v  ->  h1 c h3 h2 v
        permute_factors((nH, nH, nH, nH, n), (0, 3, 2, 1, 4), f),
        kron(triple, coaction.coact),
    )


def check_yetter_drinfeld(V: YetterDrinfeldModule, prefix: str = "") -> CheckReport:
    H, n = V.H, V.dim
    rep = CheckReport("Yetter-Drinfeld module")
    rep.add(
        compare_maps(
            prefix + "crossed compatibility",
            compose(V.coaction.coact, V.action.act),
            yd_rhs(V.action, V.coaction),
            (H.dim, n),
        )
    )
    return rep


def check_yetter_drinfeld_full(V: YetterDrinfeldModule, prefix: str = "") -> CheckReport:
    rep = CheckReport("Yetter-Drinfeld module")
    rep.extend(check_module(V.action, prefix))
    rep.extend(check_comodule(V.coaction, prefix))
    rep.extend(check_yetter_drinfeld(V, prefix))
    return rep


class SingularBraiding(SingularMap):
    pass


def braiding_map(coaction: Coaction, W: ModuleAction) -> LinearMap:
    """Lazy braiding v (x) w -> v^(1) |> w (x) v^(2) (no invertibility check)."""
    nV = coaction.dim
    H = W.H
    return chain(
        kron(W.act, identity(nV, H.field)),
        kron(H.id, flip(nV, W.dim, H.field)),
        kron(coaction.coact, identity(W.dim, H.field)),
    )


def braiding(V: YetterDrinfeldModule, W: YetterDrinfeldModule) -> Matrix:
    """Matrix of Psi_{V,W}: V (x) W -> W (x) V."""
    if V.H is not W.H and V.H != W.H:
        raise ValueError("braiding between modules over different Hopf algebras")
    psi = braiding_map(V.coaction, W.action).materialize()
    if not is_invertible(psi):
        raise SingularBraiding("braiding is singular; the input is not a valid crossed module")
    return psi


def check_braid_relation(V: YetterDrinfeldModule, psi: LinearMap | None = None, name: str = "braid relation") -> CheckEntry:
    """(Psi (x) id)(id (x) Psi)(Psi (x) id) == (id (x) Psi)(Psi (x) id)(id (x) Psi) on V^3."""
    n = V.dim
    psi = braiding(V, V) if psi is None else psi
    idv = identity(n, V.H.field)
    a, b = kron(psi, idv), kron(idv, psi)
    return compare_maps(name, chain(a, b, a), chain(b, a, b), (n, n, n))


def check_braiding_naturality(
    V: YetterDrinfeldModule, W: YetterDrinfeldModule, f: LinearMap, g: LinearMap | None = None, prefix: str = ""
) -> CheckReport:
    """For f: V -> W a morphism, Psi (f (x) id) == (id (x) f) Psi and the mirror."""
    rep = CheckReport("braiding naturality")
    psi_vv = braiding_map(V.coaction, V.action)
    psi_wv = braiding_map(W.coaction, V.action)
    psi_vw = braiding_map(V.coaction, W.action)
    idv = identity(V.dim, V.H.field)
    rep.add(
        compare_maps(
            prefix + "natural in first slot",
            compose(psi_wv, kron(f, idv)),
            compose(kron(idv, f), psi_vv),
        )
    )
    rep.add(
        compare_maps(
            prefix + "natural in second slot",
            compose(psi_vw, kron(idv, f)),
            compose(kron(f, idv), psi_vv),
        )
    )
    return rep
