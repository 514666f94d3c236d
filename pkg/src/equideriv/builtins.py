"""Built-in groups, irreducible lists and variable actions.

Names follow ``<group>.<rep>``, e.g. ``S3.std``, ``C4.chi1``, ``S2.perm``.
"""
from __future__ import annotations

from .errors import ValidationError
from .group import FiniteGroup, builtin_group
from .rep import (Representation, direct_sum_rep, permutation_rep, regular_rep,
                  rep_from_generators, trivial_rep)
from .scalar import zeta


def _linear(G: FiniteGroup, gen_values: list, label: str) -> Representation:
    return rep_from_generators(G, {g: [[v]] for g, v in zip(G.generators, gen_values)}, label)


def builtin_irreps(G: FiniteGroup) -> list[Representation]:
    """Complete irreducible list for a built-in group, trivial first."""
    name = G.name
    if G.order == 1:
        return [trivial_rep(G)]
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        out = [trivial_rep(G)]
        for k in range(1, n):
            label = "sign" if n == 2 else f"chi{k}"
            out.append(_linear(G, [zeta(n, k)], label))
        return out
    if name == "S2":
        return [trivial_rep(G), _linear(G, [-1], "sign")]
    if name == "S3":
        # generators: transposition (0 1), 3-cycle; std = sum-zero part of k^3
        std = rep_from_generators(G, {G.generators[0]: [[-1, 1], [0, 1]],
                                      G.generators[1]: [[0, -1], [1, -1]]}, "std")
        return [trivial_rep(G), _linear(G, [-1, 1], "sign"), std]
    if name == "D4":
        # generators: rotation r = (0 1 2 3), reflection s fixing vertices 0 and 2
        std = rep_from_generators(G, {G.generators[0]: [[0, -1], [1, 0]],
                                      G.generators[1]: [[1, 0], [0, -1]]}, "std")
        return [trivial_rep(G), _linear(G, [1, -1], "sgn_s"), _linear(G, [-1, 1], "sgn_r"),
                _linear(G, [-1, -1], "sgn_rs"), std]
    if name == "V4":
        return [trivial_rep(G), _linear(G, [-1, 1], "chi_a"), _linear(G, [1, -1], "chi_b"),
                _linear(G, [-1, -1], "chi_ab")]
    raise ValidationError(f"no built-in irreducible list for group {name!r}")


def builtin_rep(G: FiniteGroup, key: str) -> Representation:
    """Resolve a rep name (without group prefix) for a built-in group."""
    if key in ("regular", "reg"):
        return regular_rep(G)
    if key == "perm":
        return permutation_rep(G)
    try:
        irreps = builtin_irreps(G)
    except ValidationError:
        irreps = []
    for r in irreps:
        if r.label == key or (key == "chi0" and r.label == "triv"):
            return r
    if key == "triv":
        return trivial_rep(G)
    raise ValidationError(f"unknown built-in representation {G.name}.{key}")


def resolve_builtin(ref: str) -> tuple[FiniteGroup, Representation]:
    group_name, _, key = ref.partition(".")
    if not key:
        raise ValidationError(f"built-in rep reference must look like 'S3.std', got {ref!r}")
    G = builtin_group(group_name)
    return G, builtin_rep(G, key)


def builtin_action(G: FiniteGroup, nvars: int) -> Representation:
    """A deterministic faithful-ish linear action of a built-in group on nvars variables."""
    irr = builtin_irreps(G)
    lin = [r for r in irr if r.dim == 1]
    nontriv = [r for r in lin if r.label != "triv"] or [irr[0]]
    two = [r for r in irr if r.dim == 2]
    if G.name in ("S2", "S3", "D4") and len(G.elements[0]) == nvars:
        return permutation_rep(G).with_label(f"{G.name}.perm")
    pieces: list[Representation] = []
    if two and nvars >= 2:
        pieces.append(two[0])
    while sum(p.dim for p in pieces) < nvars:
        pieces.append(nontriv[len(pieces) % len(nontriv)] if not two else nontriv[0])
    if sum(p.dim for p in pieces) != nvars:
        pieces = [nontriv[i % len(nontriv)] for i in range(nvars)]
    rho = direct_sum_rep(*pieces) if len(pieces) > 1 else pieces[0]
    return rho.with_label(f"{G.name}:" + "+".join(p.label for p in pieces))
