"""Builders for concrete Hopf algebras and crossed-module inputs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import QQ, Field, FieldError
from .groups import CayleyTable, InvalidGroupError, is_homomorphism, validate_right_action
from .hopf import (
    HopfAlgebraData,
    ModuleAction,
    _maybe_materialize,
    adjoint_map,
    check_module_algebra,
    check_module_coalgebra,
    is_cocommutative,
    tensor_product_hopf,
    triple_mult,
)
from .linalg import (
    LinearMap,
    FunctionMap,
    Matrix,
    Vec,
    chain,
    compose,
    flip,
    from_function,
    identity,
    kron,
    permute_factors,
)
from .report import CheckReport, compare_maps


class PreconditionError(ValueError):
    """Raised when a builder's inputs fail a required check."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


class NotCocommutativeError(PreconditionError):
    pass


def _require(report: CheckReport, what: str):
    if not report.passed:
        names = ", ".join(e.name for e in report.failures())
        raise PreconditionError(f"{what}: failing checks {names}", report)


# ---------------------------------------------------------------- group algebras


def group_algebra(G: CayleyTable, field: Field = QQ) -> HopfAlgebraData:
    n = G.order
    m = from_function(n, n * n, field, lambda j: {G.mul(*divmod(j, n)): 1})
    return HopfAlgebraData(
        n,
        m,
        Matrix(n, 1, field, [{0: 1}]),
        from_function(n * n, n, field, lambda g: {g * n + g: 1}),
        Matrix(1, n, field, [{0: 1}] * n),
        from_function(n, n, field, lambda g: {G.inv(g): 1}),
        name=f"k{G.name}",
    )


def function_algebra(G: CayleyTable, field: Field = QQ) -> HopfAlgebraData:
    """k(G) in the delta basis: pointwise product, Delta(d_g) = sum_{ab=g} d_a (x) d_b."""
    n = G.order

    def comul(g):
        return {a * n + G.mul(G.inv(a), g): 1 for a in range(n)}

    return HopfAlgebraData(
        n,
        from_function(n, n * n, field, lambda j: {j // n: 1} if j // n == j % n else {}),
        Matrix(n, 1, field, [{g: 1 for g in range(n)}]),
        from_function(n * n, n, field, comul),
        Matrix(1, n, field, [{0: 1}] + [{}] * (n - 1)),
        from_function(n, n, field, lambda g: {G.inv(g): 1}),
        name=f"k({G.name})",
    )


def trivial_hopf(field: Field = QQ) -> HopfAlgebraData:
    """The ground field as a one-dimensional Hopf algebra."""
    one = Matrix(1, 1, field, [{0: 1}])
    return HopfAlgebraData(1, one, one, one, one, one, name="k")


# ---------------------------------------------------------------- smash products


@dataclass(eq=False)
class CrossedModuleData:
    A: HopfAlgebraData
    H: HopfAlgebraData
    d: LinearMap
    action: ModuleAction
    name: str = ""
    r_matrix: Vec | None = None

    def __post_init__(self):
        if self.d.shape != (self.H.dim, self.A.dim):
            raise ValueError(f"d has shape {self.d.shape}, expected {(self.H.dim, self.A.dim)}")
        if self.action.dim != self.A.dim or self.action.H.dim != self.H.dim:
            raise ValueError("action does not match A and H")

    @property
    def field(self) -> Field:
        return self.A.field


def action_symmetry_maps(H: HopfAlgebraData, action: ModuleAction) -> tuple[LinearMap, LinearMap]:
    """h (x) a  ->  h_1 (x) h_2 |> a   and   h_2 (x) h_1 |> a."""
    nH, f = H.dim, H.field
    idA = identity(action.dim, f)
    lhs = compose(kron(H.id, action.act), kron(H.comul, idA))
    rhs = chain(kron(H.id, action.act), kron(flip(nH, nH, f), idA), kron(H.comul, idA))
    return lhs, rhs


def smash_multiplication(A: HopfAlgebraData, H: HopfAlgebraData, act: LinearMap) -> LinearMap:
    """(a (x) h)(b (x) g) = a (h_1 |> b) (x) h_2 g."""
    nA, nH, f = A.dim, H.dim, A.field
    return chain(
        kron(A.m, H.m),
        kron(A.id, act, H.id, H.id),
        permute_factors((nA, nH, nH, nA, nH), (0, 1, 3, 2, 4), f),
        kron(A.id, H.comul, A.id, H.id),
    )


def smash_product(
    A: HopfAlgebraData, H: HopfAlgebraData, action: ModuleAction, check: bool = True, name: str = ""
) -> HopfAlgebraData:
    """A >| H with the tensor product unit and coalgebra."""
    nA, nH, f = A.dim, H.dim, A.field
    if check:
        _require(check_module_algebra(H, A, action), "not a module algebra")
        _require(check_module_coalgebra(H, A, action), "not a module coalgebra")
        lhs, rhs = action_symmetry_maps(H, action)
        rep = CheckReport("action symmetry")
        rep.add(compare_maps("action symmetry", lhs, rhs, (nH, nA)))
        _require(rep, "smash coalgebra not compatible")
    m = smash_multiplication(A, H, action.act)
    comul = compose(permute_factors((nA, nA, nH, nH), (0, 2, 1, 3), f), kron(A.comul, H.comul))
    # S(a (x) h) = (1 (x) S h)(S a (x) 1)
    S = chain(m, kron(A.unit, H.id, A.id, H.unit), flip(nA, nH, f), kron(A.antipode, H.antipode))
    out = HopfAlgebraData(
        nA * nH,
        _maybe_materialize(m),
        kron(A.unit, H.unit),
        comul,
        kron(A.counit, H.counit),
        S,
        name or f"{A.name}>|{H.name}",
    )
    return out.materialized()


def biproduct(B, check: bool = True, name: str = "") -> HopfAlgebraData:
    """Smash product and smash coproduct of a braided Hopf algebra B over H.

    ``B`` carries ``m, unit, comul, counit, antipode`` and a Yetter-Drinfeld
    structure ``B.yd`` giving the action and coaction.
    """
    if check:
        from .braided import check_braided_hopf

        _require(check_braided_hopf(B), "not a braided Hopf algebra")
    H = B.H
    nB, nH, f = B.dim, H.dim, H.field
    act, coact = B.yd.action.act, B.yd.coaction.coact
    idB = identity(nB, f)
    Bm = _maybe_materialize(B.m)
    Hm, Hc = _maybe_materialize(H.m), H.comul.materialize()
    act = act.materialize()

    def mcol(j):
        # (b (x) h)(c (x) g) = b (h_1 |> c) (x) h_2 g
        bh, cg = divmod(j, nB * nH)
        b, h = divmod(bh, nH)
        c, g = divmod(cg, nH)
        out: Vec = {}
        for h12, ch in Hc.col(h).items():
            h1, h2 = divmod(h12, nH)
            hc = act.col(h1 * nB + c)
            if not hc:
                continue
            hg = Hm.col(h2 * nH + g)
            for c2, x in hc.items():
                for k, y in Bm.col(b * nB + c2).items():
                    cxy = f.mul(ch, f.mul(x, y))
                    for l, z in hg.items():
                        idx = k * nH + l
                        out[idx] = f.add(out.get(idx, 0), f.mul(cxy, z))
        return {k: v for k, v in out.items() if v}

    m = FunctionMap(nB * nH, (nB * nH) ** 2, f, mcol)
    # b (x) h -> b_1 (x) b_2^(1) h_1 (x) b_2^(2) (x) h_2
    comul = chain(
        kron(idB, H.m, idB, H.id),
        permute_factors((nB, nH, nB, nH, nH), (0, 1, 3, 2, 4), f),
        kron(idB, coact, H.id, H.id),
        kron(B.comul, H.comul),
    )
    # S(b (x) h) = (1 (x) S(b^(1) h))(S_B b^(2) (x) 1)
    S = chain(
        m,
        kron(B.unit, H.id, idB, H.unit),
        kron(H.antipode, idB),
        kron(H.m, B.antipode),
        permute_factors((nH, nB, nH), (0, 2, 1), f),
        kron(coact, H.id),
    )
    out = HopfAlgebraData(
        nB * nH,
        m,
        kron(B.unit, H.unit),
        comul,
        kron(B.counit, H.counit),
        S,
        name or f"{B.name}>|.{H.name}",
    )
    return out.materialized()


# ---------------------------------------------------------------- quantum double


def coadjoint_action(G: CayleyTable, field: Field = QQ) -> LinearMap:
    """kG on k(G): h |> d_s = d_{h s h^-1}."""
    n = G.order
    return from_function(n, n * n, field, lambda j: {G.conj(*divmod(j, n)): 1})


def double_r_matrix(G: CayleyTable, field: Field = QQ) -> Vec:
    """R = sum_g (d_g (x) e) (x) (1 (x) g) in D(G) (x) D(G)."""
    n = G.order
    D = n * n
    R: Vec = {}
    for g in range(n):
        left = g * n + 0
        for x in range(n):
            R[left * D + x * n + g] = 1
    return R


def quantum_double_crossed_module(G: CayleyTable, field: Field = QQ) -> CrossedModuleData:
    A = function_algebra(G, field).materialized()
    H = group_algebra(G, field).materialized()
    act = ModuleAction(H, A.dim, coadjoint_action(G, field))
    d = compose(H.unit, A.counit).materialize()
    return CrossedModuleData(A, H, d, act, name=f"D({G.name})", r_matrix=double_r_matrix(G, field))


# ---------------------------------------------------------------- adjoint crossed module


@dataclass(eq=False)
class AdjointTransport:
    """The smash product H >| H carried over to H (x) H, with the closed forms."""

    H: HopfAlgebraData
    phi: LinearMap
    phi_inv: LinearMap
    M: HopfAlgebraData
    s: LinearMap
    t: LinearMap
    i: LinearMap
    circ: LinearMap
    antipode: LinearMap


@dataclass(eq=False)
class AdjointCrossedModule:
    cm: CrossedModuleData
    transported: AdjointTransport


def adjoint_transport(H: HopfAlgebraData) -> AdjointTransport:
    n, f = H.dim, H.field
    phi = compose(kron(H.m, H.id), kron(H.id, H.comul)).materialize()
    phi_inv = chain(kron(H.m, H.id), kron(H.id, H.antipode, H.id), kron(H.id, H.comul)).materialize()
    circ = compose(kron(triple_mult(H), H.id), kron(H.id, H.antipode, H.id, H.id))
    return AdjointTransport(
        H,
        phi,
        phi_inv,
        tensor_product_hopf(H, H),
        kron(H.counit, H.id).materialize(),
        kron(H.id, H.counit).materialize(),
        H.comul.materialize(),
        _maybe_materialize(circ),
        flip(n, n, f).materialize(),
    )


def adjoint_crossed_module(H: HopfAlgebraData) -> AdjointCrossedModule:
    if not is_cocommutative(H):
        raise NotCocommutativeError(f"{H.name or 'H'} is not cocommutative")
    act = ModuleAction(H, H.dim, _maybe_materialize(adjoint_map(H)))
    cm = CrossedModuleData(H, H, H.id, act, name=f"Ad({H.name})")
    return AdjointCrossedModule(cm, adjoint_transport(H))


# ---------------------------------------------------------------- graded function algebras


@dataclass(frozen=True)
class GradedCrossedModuleInput:
    """M with a right action of an abelian G and a hom d_hat from the dual group.

    ``action[g][m]`` is ``m <| g``.  ``dhat[k]`` is the image of the k-th
    character in the canonical order of :func:`characters`.
    """

    M: CayleyTable
    G: CayleyTable
    action: tuple[tuple[int, ...], ...]
    dhat: tuple[int, ...]
    name: str = ""


def _generators(G: CayleyTable) -> list[int]:
    gens, reached = [], {0}
    for a in G.elements():
        if a in reached:
            continue
        gens.append(a)
        frontier = list(reached)
        reached = set(reached)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = G.mul(x, g)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    return gens


def characters(G: CayleyTable) -> list[tuple[int, ...]]:
    """Homs G -> Z/e (e the exponent) as exponent tuples, sorted; trivial first.

    The character with tuple ``k`` sends ``g`` to ``zeta**k[g]`` for the
    field's chosen primitive e-th root ``zeta``.
    """
    if not G.is_abelian():
        raise InvalidGroupError("characters need an abelian group")
    e = G.exponent()
    gens = _generators(G)
    out = set()
    for ks in product(range(e), repeat=len(gens)):
        val = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, k in zip(gens, ks):
                y = G.mul(x, g)
                v = (val[x] + k) % e
                if y in val:
                    if val[y] != v:
                        ok = False
                        break
                else:
                    val[y] = v
                    frontier.append(y)
        if ok:
            chi = tuple(val[g] for g in G.elements())
            if all((chi[a] + chi[b]) % e == chi[G.mul(a, b)] for a in G.elements() for b in G.elements()):
                out.add(chi)
    return sorted(out)


def dual_group(G: CayleyTable) -> tuple[CayleyTable, list[tuple[int, ...]]]:
    chars = characters(G)
    e = G.exponent()
    index = {c: i for i, c in enumerate(chars)}
    table = tuple(
        tuple(index[tuple((a + b) % e for a, b in zip(u, v))] for v in chars) for u in chars
    )
    return CayleyTable(table, name=f"{G.name}^"), chars


def _check_graded_input(inp: GradedCrossedModuleInput, field: Field):
    M, G = inp.M, inp.G
    if not G.is_abelian():
        raise InvalidGroupError("G must be abelian")
    validate_right_action(inp.action, G, M)
    if not field.is_invertible_int(G.order):
        raise FieldError(f"|G| = {G.order} is not invertible in {field.name}")
    field.primitive_root_of_unity(G.exponent())
    Ghat, chars = dual_group(G)
    if len(inp.dhat) != Ghat.order:
        raise InvalidGroupError(f"d_hat needs {Ghat.order} values, one per character")
    if not is_homomorphism(inp.dhat, Ghat, M):
        raise InvalidGroupError("d_hat is not a group homomorphism")
    for u in inp.dhat:
        if any(inp.action[g][u] != u for g in G.elements()):
            raise InvalidGroupError(f"d_hat lands outside the fixed subgroup (element {M.label(u)})")
    return Ghat, chars


@dataclass(eq=False)
class GradedCrossedModule:
    cm: CrossedModuleData
    input: GradedCrossedModuleInput
    dual: CayleyTable
    characters: list[tuple[int, ...]]
    zeta: int
    # closed forms on A (x) H, index m*|Ghat| + u
    s: LinearMap
    t: LinearMap
    antipode: LinearMap


def grading_action(inp: GradedCrossedModuleInput, chars, field: Field) -> LinearMap:
    """d_u |> d_m = (1/|G|) sum_g u(g)^-1 d_{m <| g^-1}: projection onto the u-graded part."""
    M, G = inp.M, inp.G
    nM, nU = M.order, len(chars)
    e = G.exponent()
    zeta = field.primitive_root_of_unity(e)
    inv_order = field.inv(field(G.order))
    zpow = [pow(zeta, k, field.p) if field.p else zeta**k for k in range(e)]

    def col(j):
        u, m = divmod(j, nM)
        out: Vec = {}
        for g in G.elements():
            k = (-chars[u][g]) % e
            tgt = inp.action[G.inv(g)][m]
            out[tgt] = field.add(out.get(tgt, 0), field.mul(inv_order, zpow[k]))
        return {i: x for i, x in out.items() if x}

    return from_function(nM, nU * nM, field, col)


def graded_function_crossed_module(inp: GradedCrossedModuleInput, field: Field = QQ) -> GradedCrossedModule:
    Ghat, chars = _check_graded_input(inp, field)
    M = inp.M
    nM, nU = M.order, Ghat.order
    A = function_algebra(M, field).materialized()
    H = function_algebra(Ghat, field).materialized()
    act = ModuleAction(H, nM, grading_action(inp, chars, field))
    # d(f)(u) = f(d_hat(u)), i.e. pull back along d_hat
    d = from_function(nU, nM, field, lambda m: {u: 1 for u in range(nU) if inp.dhat[u] == m})
    cm = CrossedModuleData(A, H, d, act, name=inp.name or f"graded({M.name},{inp.G.name})")
    s = from_function(nU, nM * nU, field, lambda j: {j % nU: 1} if j // nU == 0 else {})
    t = from_function(nU, nM * nU, field, lambda j: {j % nU: 1} if j // nU == inp.dhat[j % nU] else {})

    def anti(j):
        m, u = divmod(j, nU)
        return {M.mul(inp.dhat[u], M.inv(m)) * nU + u: 1}

    S = from_function(nM * nU, nM * nU, field, anti)
    zeta = field.primitive_root_of_unity(inp.G.exponent())
    return GradedCrossedModule(cm, inp, Ghat, chars, zeta, s, t, S)


# ---------------------------------------------------------------- Sweedler's four-dimensional algebra


def sweedler_h4(field: Field = QQ) -> HopfAlgebraData:
    """Basis 1, g, x, gx (index a + 2b for g^a x^b); g^2 = 1, x^2 = 0, xg = -gx."""
    if field.p == 2:
        raise FieldError("Sweedler's algebra needs characteristic other than 2")
    neg1 = field.neg(1)

    def mul(j):
        i, k = divmod(j, 4)
        a, b = i % 2, i // 2
        c, dd = k % 2, k // 2
        if b + dd > 1:
            return {}
        sign = neg1 if b * c else 1
        return {(a + c) % 2 + 2 * (b + dd): sign}

    comul_cols = [
        {0 * 4 + 0: 1},
        {1 * 4 + 1: 1},
        {2 * 4 + 0: 1, 1 * 4 + 2: 1},
        {3 * 4 + 1: 1, 0 * 4 + 3: 1},
    ]
    S_cols = [{0: 1}, {1: 1}, {3: neg1}, {2: 1}]
    return HopfAlgebraData(
        4,
        from_function(4, 16, field, mul),
        Matrix(4, 1, field, [{0: 1}]),
        Matrix(16, 4, field, comul_cols),
        Matrix(1, 4, field, [{0: 1}, {0: 1}, {}, {}]),
        Matrix(4, 4, field, S_cols),
        name="H4",
    )


def sweedler_r0(field: Field = QQ) -> Vec:
    """1/2 (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)."""
    h = field.inv(field(2))
    return {0: h, 1: h, 4: h, 5: field.neg(h)}


def group_triangular_r(field: Field = QQ) -> Vec:
    """1/2 (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) on kZ2."""
    h = field.inv(field(2))
    return {0: h, 1: h, 2: h, 3: field.neg(h)}
