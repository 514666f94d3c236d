"""Curated descent cases shared by the acceptance tests and the scripts.

Each case pairs an equivariant module with the space it lives on and the
verdict we expect.  The first two verdicts follow from a direct reading of
the fibers at the origin.  The others were confirmed independently with the
invariant oracle, which never consults the stratum criterion.
"""
from __future__ import annotations

from dataclasses import dataclass

from .builtins import builtin_irreps
from .eqmod import BlockModule
from .group import builtin_group
from .rep import Representation, permutation_rep, regular_rep, rep_from_generators
from .scalar import ZERO, zeta


@dataclass(frozen=True)
class DescentCase:
    name: str
    module: BlockModule
    mode: str
    expected: bool  # True when the module descends


def c3_diagonal_action() -> Representation:
    """C3 acting on the plane by diag(z, z^2), z a primitive cube root of unity."""
    C3 = builtin_group("C3")
    z = zeta(3)
    return rep_from_generators(C3, {C3.generators[0]: [[z, ZERO], [ZERO, z * z]]}, "diag")


def curated_descent_cases() -> list[DescentCase]:
    S2 = builtin_group("S2")
    swap = permutation_rep(S2)
    triv, sign = builtin_irreps(S2)
    C2 = builtin_group("C2")
    line = builtin_irreps(C2)[1]  # C2 acting by -1 on one coordinate
    diag = c3_diagonal_action()
    c3_triv, c3_chi1, _ = builtin_irreps(diag.group)
    return [
        DescentCase("swap plane, triv (x) A", BlockModule(swap, ((0, triv),)), "affine", True),
        DescentCase("swap plane, sign (x) A", BlockModule(swap, ((0, sign),)), "affine", False),
        DescentCase("C2 on the line by -1, regular (x) A",
                    BlockModule(line, ((0, regular_rep(C2)),)), "affine", False),
        DescentCase("P^1 with swap, triv (x) A(-1)", BlockModule(swap, ((1, triv),)), "projective", False),
        DescentCase("P^1 with swap, triv (x) A", BlockModule(swap, ((0, triv),)), "projective", True),
        DescentCase("C3 diagonal, triv (x) A + chi1 (x) A(-1)",
                    BlockModule(diag, ((0, c3_triv), (1, c3_chi1))), "affine", False),
    ]


def descending_modules() -> list[BlockModule]:
    """Modules from the suite that descend on the affine space, grouped by action.

    The list is ordered so that consecutive modules share an action, which
    lets callers enumerate maps between every pair on the same action.
    """
    S2 = builtin_group("S2")
    swap = permutation_rep(S2)
    triv = builtin_irreps(S2)[0]
    diag = c3_diagonal_action()
    c3_triv = builtin_irreps(diag.group)[0]
    out = [BlockModule(swap, ((a, triv),)) for a in range(3)]
    out.append(BlockModule(swap, ((0, triv), (1, triv))))
    out += [BlockModule(diag, ((a, c3_triv),)) for a in range(4)]
    out.append(BlockModule(diag, ((0, c3_triv), (2, c3_triv))))
    return out
