"""Does the R-twisted coproduct on H (x) H break the groupoid composition law?

Runs the obstruction check on several quasitriangular Hopf algebras and prints
the first failing pair when there is one.
"""

from qtwogroup import QQ, QuasitriangularStructure, cyclic
from qtwogroup.braided import BraidedCrossedModuleData, check_twisted_coproduct_obstruction, transmutation
from qtwogroup.hopf import check_hopf
from qtwogroup.constructions import (
    double_r_matrix,
    group_algebra,
    group_triangular_r,
    quantum_double_crossed_module,
    smash_product,
    sweedler_h4,
    sweedler_r0,
)


def double(n: int) -> QuasitriangularStructure:
    G = cyclic(n)
    cm = quantum_double_crossed_module(G, QQ)
    D = smash_product(cm.A, cm.H, cm.action).materialized()
    return QuasitriangularStructure(D, double_r_matrix(G, QQ), f"D(Z{n})")


def cases() -> list[QuasitriangularStructure]:
    return [
        QuasitriangularStructure(group_algebra(cyclic(2), QQ).materialized(), group_triangular_r(QQ), "kZ2"),
        double(2),
        double(3),
        QuasitriangularStructure(sweedler_h4(QQ).materialized(), sweedler_r0(QQ), "H4"),
    ]


def main() -> None:
    for q in cases():
        B = transmutation(q, check=False)
        rep = check_twisted_coproduct_obstruction(BraidedCrossedModuleData(B, q.H.id, name=q.name), q)
        e = rep["twisted coproduct breaks the circ-hom law"]
        w = e.witness
        where = w.detail or f"basis pair {w.multi_index or w.index}" if w is not None else ""
        print(f"{q.name:6s} dim {q.H.dim:3d}  commutative {is_commutative(q.H)!s:5s}  obstruction {'found' if e.passed else 'absent'}  {where}")


def is_commutative(H) -> bool:
    return check_hopf(H)["commutative"].passed


if __name__ == "__main__":
    main()
