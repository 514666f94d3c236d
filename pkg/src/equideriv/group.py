"""Finite groups as explicit multiplication tables.

Groups are small (order <= 64), so everything here is plain enumeration:
closure from generators, conjugation orbits, subgroup lattices by joining
cyclic subgroups.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .errors import InternalConsistencyError, LimitError, ValidationError

MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    elements: tuple  # labels; permutations are 0-based image tuples
    table: tuple  # table[a][b] = index of a*b
    identity: int
    inverse: tuple
    generators: tuple = ()
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.table[self.table[g][x]][self.inverse[g]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            o = self.element_order(a)
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(conjugacy_classes(self))

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        idx = [0] * self.order
        for c, cls in enumerate(self.classes):
            for x in cls:
                idx[x] = c
        return tuple(idx)

    def closure(self, elems) -> frozenset:
        members = {self.identity}
        frontier = deque([self.identity])
        gens = sorted(set(elems))
        while frontier:
            x = frontier.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in members:
                    members.add(y)
                    frontier.append(y)
        return frozenset(members)

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False)
    members: tuple  # sorted element indices

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.members)

    def is_trivial(self) -> bool:
        return self.order == 1

    def validate(self) -> None:
        G = self.parent
        s = self._member_set
        if G.identity not in s:
            raise ValidationError("subgroup does not contain the identity")
        for a in self.members:
            if G.inv(a) not in s:
                raise ValidationError("subgroup not closed under inverses")
            for b in self.members:
                if G.mul(a, b) not in s:
                    raise ValidationError("subgroup not closed under multiplication")

    def conjugate(self, g: int) -> "Subgroup":
        return Subgroup(self.parent, tuple(self.parent.conj(g, x) for x in self.members))

    def exponent(self) -> int:
        e = 1
        for a in self.members:
            o = self.parent.element_order(a)
            e = e * o // gcd(e, o)
        return e

    def generators(self) -> tuple[int, ...]:
        """Greedy small generating set, in index order."""
        G = self.parent
        gens: list[int] = []
        span = frozenset([G.identity])
        for x in self.members:
            if x not in span:
                gens.append(x)
                span = G.closure(gens)
        return tuple(gens)

    def label(self) -> list[int]:
        return list(self.members)

    @cached_property
    def as_group(self) -> FiniteGroup:
        """H as a standalone group; local index i is parent element members[i]."""
        G = self.parent
        local = {m: i for i, m in enumerate(self.members)}
        table = tuple(tuple(local[G.mul(a, b)] for b in self.members) for a in self.members)
        inverse = tuple(local[G.inv(a)] for a in self.members)
        gens = tuple(local[g] for g in self.generators())
        name = f"{G.name or 'G'}|{list(self.members)}"
        return FiniteGroup(tuple(G.elements[m] for m in self.members), table,
                           local[G.identity], inverse, gens, name)


# construction ---------------------------------------------------------------

def _compose(p: tuple, q: tuple) -> tuple:
    # (p*q)(x) = p(q(x))
    return tuple(p[q[i]] for i in range(len(q)))


def generate_group(generators, name: str = "", degree: int | None = None) -> FiniteGroup:
    """Closure of a set of permutations (0-based image tuples)."""
    gens = [tuple(g) for g in generators]
    if gens:
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValidationError("permutation generators act on sets of different sizes")
        for g in gens:
            if sorted(g) != list(range(n)):
                raise ValidationError(f"not a permutation: {g}")
    else:
        n = degree or 1
    ident = tuple(range(n))
    elements = [ident]
    index = {ident: 0}
    frontier = deque([ident])
    while frontier:
        x = frontier.popleft()
        for s in gens:
            y = _compose(x, s)
            if y not in index:
                if len(elements) >= MAX_ORDER:
                    raise LimitError(f"group closure exceeds order {MAX_ORDER}")
                index[y] = len(elements)
                elements.append(y)
                frontier.append(y)
    table = tuple(tuple(index[_compose(a, b)] for b in elements) for a in elements)
    inverse = tuple(next(j for j in range(len(elements)) if table[i][j] == 0) for i in range(len(elements)))
    gen_idx = tuple(dict.fromkeys(index[g] for g in gens if index[g] != 0))
    return FiniteGroup(tuple(elements), table, 0, inverse, gen_idx, name)


def group_from_table(table, name: str = "") -> FiniteGroup:
    """Validate a full Cayley table (0-based indices) and wrap it."""
    n = len(table)
    if n == 0:
        raise ValidationError("empty multiplication table")
    if n > MAX_ORDER:
        raise LimitError(f"group order {n} exceeds {MAX_ORDER}")
    rows = []
    for row in table:
        if len(row) != n or any(not (isinstance(x, int) and 0 <= x < n) for x in row):
            raise ValidationError("multiplication table must be square with entries in range")
        rows.append(tuple(row))
    ident = next((e for e in range(n) if rows[e] == tuple(range(n))
                  and all(rows[a][e] == a for a in range(n))), None)
    if ident is None:
        raise ValidationError("table has no two-sided identity")
    inverse = []
    for a in range(n):
        b = next((b for b in range(n) if rows[a][b] == ident and rows[b][a] == ident), None)
        if b is None:
            raise ValidationError(f"element {a} has no inverse")
        inverse.append(b)
    for a in range(n):
        for b in range(n):
            ab = rows[a][b]
            for c in range(n):
                if rows[ab][c] != rows[a][rows[b][c]]:
                    raise ValidationError(f"table is not associative at ({a},{b},{c})")
    G = FiniteGroup(tuple(range(n)), tuple(rows), ident, tuple(inverse), (), name)
    gens = G.whole().generators()
    return FiniteGroup(G.elements, G.table, ident, G.inverse, gens, name)


def validate_group(G: FiniteGroup) -> None:
    """Exhaustive axiom check (associativity, identity, inverses, closure)."""
    n = G.order
    t = G.table
    for a in range(n):
        if t[G.identity][a] != a or t[a][G.identity] != a:
            raise ValidationError("identity law fails")
        if t[a][G.inverse[a]] != G.identity:
            raise ValidationError("inverse law fails")
        for b in range(n):
            if not 0 <= t[a][b] < n:
                raise ValidationError("table not closed")
            for c in range(n):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise ValidationError("associativity fails")


def _cycle(n: int) -> tuple:
    return tuple((i + 1) % n for i in range(n))


def trivial_group() -> FiniteGroup:
    return generate_group([], name="trivial")


def cyclic_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 12:
        raise LimitError("built-in cyclic groups are C1..C12")
    if n == 1:
        return generate_group([], name="C1")
    return generate_group([_cycle(n)], name=f"C{n}")


def symmetric_group(n: int) -> FiniteGroup:
    if n not in (2, 3):
        raise LimitError("built-in symmetric groups are S2 and S3")
    if n == 2:
        return generate_group([(1, 0)], name="S2")
    return generate_group([(1, 0, 2), (1, 2, 0)], name="S3")


def dihedral_group_4() -> FiniteGroup:
    # symmetries of the square with vertices 0,1,2,3
    return generate_group([(1, 2, 3, 0), (0, 3, 2, 1)], name="D4")


def klein_four() -> FiniteGroup:
    return generate_group([(1, 0, 3, 2), (2, 3, 0, 1)], name="V4")


def builtin_group(name: str) -> FiniteGroup:
    key = name.strip()
    if key in ("trivial", "1", "C1"):
        return trivial_group() if key == "trivial" else cyclic_group(1)
    if key in ("S2", "S3"):
        return symmetric_group(int(key[1]))
    if key == "D4":
        return dihedral_group_4()
    if key in ("V4", "Klein", "K4"):
        return klein_four()
    if key.startswith("C") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    raise ValidationError(f"unknown built-in group {name!r}")


BUILTIN_GROUP_NAMES = ("trivial",) + tuple(f"C{n}" for n in range(2, 13)) + ("S2", "S3", "D4", "V4")


# structure ------------------------------------------------------------------

def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugation orbits, each sorted, listed by smallest member."""
    seen = set()
    classes = []
    for x in range(G.order):
        if x in seen:
            continue
        orbit = sorted({G.conj(g, x) for g in range(G.order)})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return classes


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    if G.order > MAX_ORDER:
        raise LimitError(f"subgroup enumeration is limited to order {MAX_ORDER}")
    cyclic = {G.closure([x]) for x in range(G.order)}
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyclic:
                if C <= S:
                    continue
                J = G.closure(S | C)
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    subs = [Subgroup(G, tuple(s)) for s in found]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def subgroups_up_to_conjugacy(G: FiniteGroup) -> list[Subgroup]:
    """One representative per conjugacy class, ordered by (order, members)."""
    reps = []
    seen = set()
    for S in all_subgroups(G):
        if S.members in seen:
            continue
        orbit = {S.conjugate(g).members for g in range(G.order)}
        seen.update(orbit)
        reps.append(Subgroup(G, min(orbit)))
    reps.sort(key=lambda s: (s.order, s.members))
    return reps


def are_conjugate(S: Subgroup, T: Subgroup) -> bool:
    return any(S.conjugate(g).members == T.members for g in range(S.parent.order))


def commutator_subgroup(H: Subgroup) -> Subgroup:
    G = H.parent
    comms = {G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))) for a in H.members for b in H.members}
    return Subgroup(G, tuple(G.closure(comms)))


def linear_characters(H: Subgroup) -> list[dict[int, tuple[int, int]]]:
    """All homomorphisms H -> roots of unity.

    Each character maps an element index to ``(k, e)`` meaning zeta_e^k, with
    e the exponent of H.  Found by extending generator assignments over the
    Cayley graph; consistent assignments are exactly the characters of the
    abelianization, whose count is checked against [H : [H, H]].
    """
    G = H.parent
    e = H.exponent()
    gens = H.generators()
    results: list[dict[int, int]] = []

    def extend(val: dict[int, int], depth: int):
        if depth == len(gens):
            results.append(val)
            return
        t = gens[depth]
        o = G.element_order(t)
        active = gens[: depth + 1]
        for k in range(o):
            gvals = {s: val[s] for s in gens[:depth]}
            gvals[t] = k * (e // o)
            trial = dict(val)
            trial[t] = gvals[t]
            queue = deque(trial)
            ok = True
            while queue and ok:
                x = queue.popleft()
                for s in active:
                    y = G.mul(x, s)
                    w = (trial[x] + gvals[s]) % e
                    if y not in trial:
                        trial[y] = w
                        queue.append(y)
                    elif trial[y] != w:
                        ok = False
                        break
            if ok:
                extend(trial, depth + 1)

    extend({G.identity: 0}, 0)
    index = H.order // commutator_subgroup(H).order
    if len(results) != index:
        raise InternalConsistencyError("linear character count disagrees with the abelianization")
    chars = [{x: (val[x], e) for x in H.members} for val in results]
    chars.sort(key=lambda c: tuple(c[g][0] for g in gens))
    return chars
