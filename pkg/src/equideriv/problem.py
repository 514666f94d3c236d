"""Problem files: JSON documents naming a group, representations, an action,
objects and tasks.  ``load_problem`` resolves every cross-reference and
validates structure before any task runs.

Minimal example::

    {"group": {"builtin": "S2"},
     "action": {"rep": "perm"},
     "objects": {"E": {"blocks": [{"shift": 0, "rep": "sign"}]}},
     "tasks": [{"op": "descend", "object": "E"}]}
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from math import gcd

from .builtins import builtin_irreps, builtin_rep, resolve_builtin
from .eqmod import (BlockModule, ChainMap, EquivariantComplex, RawEquivariantModule, cone,
                    identity_map, koszul_complex, shift, single_term)
from .eqmod.modules import act_on_matrix
from .errors import LimitError, ParseError, ValidationError
from .group import FiniteGroup, MAX_ORDER, builtin_group, generate_group, group_from_table
from .literal import parse_polynomial, parse_scalar
from .poly import poly_identity, poly_matmul
from .rep import (Representation, direct_sum_rep, dual_rep, rep_from_generators, rep_from_matrices,
                  tensor_rep, validate_irreps)

MAX_VARIABLES = 6
OPS = ("decompose", "normalize", "hom", "koszul", "homology", "descend", "oracle", "verify", "morphism")


@dataclass
class Problem:
    group: FiniteGroup
    order: int  # cyclotomic order used for literals
    irreps: list
    reps: dict  # name -> Representation
    action: Representation | None
    objects: dict  # name -> BlockModule | RawEquivariantModule | EquivariantComplex
    tasks: list
    digest: str
    raw: dict = field(repr=False, default_factory=dict)

    @property
    def nvars(self) -> int:
        return self.action.dim if self.action is not None else 0


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"{where}: missing field {key!r}")
    return obj[key]


def _as_int(x, where) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(f"{where}: expected an integer, got {x!r}")
    return x


# group -------------------------------------------------------------------------------

def parse_group(doc, where="group") -> FiniteGroup:
    if not isinstance(doc, dict):
        raise ValidationError(f"{where}: expected an object")
    name = doc.get("name", "")
    if "builtin" in doc:
        return builtin_group(str(doc["builtin"]))
    if "permutation_generators" in doc:
        gens = doc["permutation_generators"]
        if not isinstance(gens, list):
            raise ValidationError(f"{where}.permutation_generators: expected a list")
        perms = []
        for k, p in enumerate(gens):
            if not isinstance(p, list) or not p or any(not isinstance(i, int) for i in p):
                raise ValidationError(f"{where}.permutation_generators[{k}]: expected one-line images")
            perms.append(tuple(i - 1 for i in p))
        degree = doc.get("degree")
        return generate_group(perms, name=name or "G", degree=degree)
    if "table" in doc:
        table = doc["table"]
        if not isinstance(table, list):
            raise ValidationError(f"{where}.table: expected a list of rows")
        if len(table) > MAX_ORDER:
            raise LimitError(f"group order {len(table)} exceeds {MAX_ORDER}")
        return group_from_table(table, name=name or "G")
    raise ValidationError(f"{where}: need one of 'builtin', 'permutation_generators', 'table'")


# scalars and matrices ----------------------------------------------------------------------

def _scalar_matrix(rows, order, where) -> list:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValidationError(f"{where}: expected a matrix (list of rows)")
    return [[parse_scalar(x, order, f"{where}[{i}][{j}]") for j, x in enumerate(r)]
            for i, r in enumerate(rows)]


def _poly_matrix(rows, nvars, order, where) -> list:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValidationError(f"{where}: expected a matrix (list of rows)")
    return [[parse_polynomial(x, nvars, order, f"{where}[{i}][{j}]") for j, x in enumerate(r)]
            for i, r in enumerate(rows)]


def _element_keyed(mapping, G: FiniteGroup, where) -> dict:
    if not isinstance(mapping, dict):
        raise ValidationError(f"{where}: expected an object keyed by element index")
    out = {}
    for k, v in mapping.items():
        try:
            g = int(k)
        except ValueError:
            raise ValidationError(f"{where}: element key {k!r} is not an integer") from None
        if not 0 <= g < G.order:
            raise ValidationError(f"{where}: element index {g} out of range")
        out[g] = v
    return out


def _generator_keyed(images, G: FiniteGroup, where) -> dict:
    if not isinstance(images, list) or len(images) != len(G.generators):
        raise ValidationError(f"{where}: expected one image per group generator "
                              f"({len(G.generators)})")
    return dict(zip(G.generators, images))


# representations -------------------------------------------------------------------------------

class _RepResolver:
    def __init__(self, G: FiniteGroup, order: int, docs: dict, irreps: list):
        self.G, self.order, self.docs = G, order, docs
        self.done: dict = {}
        self.irreps = {r.label: r for r in irreps}
        self.active: set = set()

    def get(self, ref, where) -> Representation:
        if isinstance(ref, dict):
            return self.build(ref, where)
        if not isinstance(ref, str):
            raise ValidationError(f"{where}: representation reference must be a string or object")
        if ref in self.done:
            return self.done[ref]
        if ref in self.docs:
            if ref in self.active:
                raise ValidationError(f"{where}: representation {ref!r} refers to itself")
            self.active.add(ref)
            rho = self.build(self.docs[ref], f"reps.{ref}").with_label(ref)
            self.active.discard(ref)
            self.done[ref] = rho
            return rho
        if ref in self.irreps:
            return self.irreps[ref]
        if "." in ref:
            G2, rho = resolve_builtin(ref)
            if G2.name != self.G.name or G2.order != self.G.order:
                raise ValidationError(f"{where}: built-in {ref!r} belongs to another group")
            return Representation(self.G, rho.dim, rho.matrices, ref.split(".", 1)[1])
        try:
            return builtin_rep(self.G, ref)
        except ValidationError:
            raise ValidationError(f"{where}: unresolved representation {ref!r}") from None

    def build(self, doc, where) -> Representation:
        G, order = self.G, self.order
        if not isinstance(doc, dict):
            return self.get(doc, where)
        label = doc.get("label", "")
        if "builtin" in doc:
            return self.get(str(doc["builtin"]), where)
        if "matrices" in doc:
            mats = {g: _scalar_matrix(m, order, f"{where}.matrices.{g}")
                    for g, m in _element_keyed(doc["matrices"], G, f"{where}.matrices").items()}
            return rep_from_matrices(G, mats, label)
        if "generators" in doc:
            imgs = {g: _scalar_matrix(m, order, f"{where}.generators")
                    for g, m in _generator_keyed(doc["generators"], G, f"{where}.generators").items()}
            return rep_from_generators(G, imgs, label)
        if "tensor" in doc:
            parts = [self.get(r, f"{where}.tensor") for r in doc["tensor"]]
            out = parts[0]
            for p in parts[1:]:
                out = tensor_rep(out, p)
            return out
        if "sum" in doc:
            return direct_sum_rep(*(self.get(r, f"{where}.sum") for r in doc["sum"]))
        if "dual" in doc:
            return dual_rep(self.get(doc["dual"], f"{where}.dual"))
        raise ValidationError(f"{where}: unknown representation form {sorted(doc)}")


# objects -----------------------------------------------------------------------------------------

def _blocks(doc, reps: _RepResolver, action, where) -> BlockModule:
    if not isinstance(doc, list):
        raise ValidationError(f"{where}: blocks must be a list")
    blocks = []
    for k, b in enumerate(doc):
        a = _as_int(_need(b, "shift", f"{where}[{k}]"), f"{where}[{k}].shift")
        if a < 0:
            raise ValidationError(f"{where}[{k}]: shift must be non-negative")
        blocks.append((a, reps.get(_need(b, "rep", f"{where}[{k}]"), f"{where}[{k}].rep")))
    M = BlockModule(action, tuple(blocks))
    M.validate()
    return M


def _raw(doc, problem_order, action, where) -> RawEquivariantModule:
    G, n = action.group, action.dim
    degrees = tuple(_as_int(d, f"{where}.degrees") for d in _need(doc, "degrees", where))
    if "matrices" in doc:
        mats = {g: _poly_matrix(m, n, problem_order, f"{where}.matrices.{g}")
                for g, m in _element_keyed(doc["matrices"], G, f"{where}.matrices").items()}
        if set(mats) != set(range(G.order)):
            raise ValidationError(f"{where}: matrices must cover every element")
        M = RawEquivariantModule(action, degrees, tuple(mats[g] for g in range(G.order)))
    elif "generators" in doc:
        imgs = {g: _poly_matrix(m, n, problem_order, f"{where}.generators")
                for g, m in _generator_keyed(doc["generators"], G, f"{where}.generators").items()}
        M = RawEquivariantModule(action, degrees, _extend_cocycle(action, degrees, imgs))
    else:
        raise ValidationError(f"{where}: raw module needs 'matrices' or 'generators'")
    M.validate()
    return M


def _extend_cocycle(action, degrees, imgs) -> tuple:
    """R(x s) = R(x) (x . R(s)), breadth first from the identity."""
    G, n, r = action.group, action.dim, len(degrees)
    mats = {G.identity: poly_identity(n, r)}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, Rs in imgs.items():
                y = G.mul(x, s)
                if y not in mats:
                    mats[y] = poly_matmul(mats[x], act_on_matrix(action, x, Rs), n)
                    nxt.append(y)
        frontier = nxt
    if len(mats) != G.order:
        raise ValidationError("generator images do not reach every group element")
    return tuple(mats[g] for g in range(G.order))


def _as_complex(obj, where) -> EquivariantComplex:
    if isinstance(obj, EquivariantComplex):
        return obj
    if isinstance(obj, BlockModule):
        return single_term(obj)
    raise ValidationError(f"{where}: expected a complex or a block module")


def _complex(doc, reps, action, order, objects, where) -> EquivariantComplex:
    n = action.dim
    if "koszul" in doc:
        return koszul_complex(action)
    if "shift" in doc:
        s = doc["shift"]
        base = _as_complex(_lookup(objects, _need(s, "of", f"{where}.shift"), where), where)
        return shift(base, _as_int(_need(s, "by", f"{where}.shift"), f"{where}.shift.by"))
    if "cone" in doc:
        c = doc["cone"]
        src = _as_complex(_lookup(objects, _need(c, "source", f"{where}.cone"), where), where)
        if c.get("identity"):
            return cone(identity_map(src))
        tgt = _as_complex(_lookup(objects, _need(c, "target", f"{where}.cone"), where), where)
        comps = {int(p): _poly_matrix(m, n, order, f"{where}.cone.components.{p}")
                 for p, m in c.get("components", {}).items()}
        return cone(ChainMap(src, tgt, comps))
    terms_doc = _need(doc, "terms", where)
    terms = {int(p): _blocks(b, reps, action, f"{where}.terms.{p}") for p, b in terms_doc.items()}
    diffs = {int(p): _poly_matrix(m, n, order, f"{where}.differentials.{p}")
             for p, m in doc.get("differentials", {}).items()}
    C = EquivariantComplex(action, terms, diffs)
    C.validate()
    return C


def _lookup(objects, name, where):
    if name not in objects:
        raise ValidationError(f"{where}: unresolved object {name!r}")
    return objects[name]


# entry points ---------------------------------------------------------------------------------------

def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def parse_json(text: str, where: str = "problem") -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} (line {exc.lineno})", column=exc.colno,
                         where=where) from None
    if not isinstance(data, dict):
        raise ValidationError("problem file must be a JSON object")
    return data


def load_problem(text: str) -> Problem:
    data = parse_json(text)
    unknown = set(data) - {"scalars", "group", "irreps", "reps", "action", "objects", "tasks", "comment"}
    if unknown:
        raise ValidationError(f"unknown top-level fields {sorted(unknown)}")
    G = parse_group(_need(data, "group", "problem"))
    order = G.exponent
    if "scalars" in data:
        m = _as_int(_need(data["scalars"], "order", "scalars"), "scalars.order")
        if m < 1:
            raise ValidationError("scalars.order must be positive")
        order = _lcm(m, G.exponent)

    irreps_doc = data.get("irreps", "builtin")
    if irreps_doc == "builtin":
        try:
            irreps = builtin_irreps(G)
        except ValidationError:
            irreps = []
    else:
        if not isinstance(irreps_doc, list):
            raise ValidationError("irreps must be 'builtin' or a list")
        seed = _RepResolver(G, order, {}, [])
        irreps = []
        for k, doc in enumerate(irreps_doc):
            if isinstance(doc, dict):
                label = doc.get("name") or doc.get("label") or f"irrep{k}"
            else:
                label = str(doc).split(".")[-1]
            irreps.append(seed.get(doc, f"irreps[{k}]").with_label(label))
    if irreps:
        validate_irreps(irreps)

    rep_docs = data.get("reps", {})
    if not isinstance(rep_docs, dict):
        raise ValidationError("reps must be an object keyed by name")
    resolver = _RepResolver(G, order, rep_docs, irreps)
    reps = {name: resolver.get(name, f"reps.{name}") for name in rep_docs}

    action = None
    if "action" in data:
        a = data["action"]
        ref = a.get("rep") if isinstance(a, dict) and "rep" in a else a
        action = resolver.get(ref, "action")
        if action.dim > MAX_VARIABLES:
            raise LimitError(f"{action.dim} variables exceeds the limit of {MAX_VARIABLES}")
        if action.dim < 1:
            raise ValidationError("the variable action needs at least one variable")

    objects: dict = {}
    obj_specs = data.get("objects", {})
    if obj_specs and action is None:
        raise ValidationError("objects need an 'action' on the variables")
    for name, doc in obj_specs.items():
        where = f"objects.{name}"
        if not isinstance(doc, dict):
            raise ValidationError(f"{where}: expected an object")
        if "blocks" in doc:
            objects[name] = _blocks(doc["blocks"], resolver, action, f"{where}.blocks")
        elif "raw" in doc:
            objects[name] = _raw(doc["raw"], order, action, f"{where}.raw")
        else:
            objects[name] = _complex(doc, resolver, action, order, objects, where)

    tasks = data.get("tasks", [])
    if not isinstance(tasks, list):
        raise ValidationError("tasks must be a list")
    names = set()
    for k, t in enumerate(tasks):
        op = _need(t, "op", f"tasks[{k}]")
        if op not in OPS:
            raise ValidationError(f"tasks[{k}]: unknown op {op!r}; expected one of {', '.join(OPS)}")
        t.setdefault("name", f"{op}-{k}")
        if t["name"] in names:
            raise ValidationError(f"tasks[{k}]: duplicate task name {t['name']!r}")
        names.add(t["name"])
        for key in ("object", "source", "target"):
            ref = t.get(key)
            if isinstance(ref, str) and op != "hom":
                _lookup(objects, ref, f"tasks[{k}].{key}")
        if "rep" in t:
            resolver.get(t["rep"], f"tasks[{k}].rep")
    return Problem(G, order, irreps, reps, action, objects, tasks, digest(text), data)


def resolve_rep(problem: Problem, ref, where: str) -> Representation:
    resolver = _RepResolver(problem.group, problem.order, {}, problem.irreps)
    resolver.done.update(problem.reps)
    return resolver.get(ref, where)
