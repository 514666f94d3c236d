"""Command-line runner for problem files.

    equideriv run problem.json [--task NAME] [--json OUT] [--degree-bound D] [--space affine|projective]

Exit status: 0 on success, 2 on invalid input (including parse and limit
errors), 3 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .descent import AFFINE, descend_morphism, descends, invariant_oracle
from .eqmod import (BlockModule, EquivariantComplex, RawEquivariantModule, block_module_as_raw,
                    graded_homology, hom_complexes, hom_generators, hom_generators_bruteforce,
                    koszul_complex, normalize_module, single_term)
from .eqmod.complexes import slice_dimension
from .errors import EquiderivError, InternalConsistencyError, ValidationError
from .group import validate_group
from .problem import Problem, _as_int, _lookup, _poly_matrix, digest, load_problem, resolve_rep
from .rep import character, decompose, is_irreducible, multiplicity

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 2, 3


# rendering ------------------------------------------------------------------------------

def _lit(x, order: int) -> str:
    if order % x.order == 0:
        return x.lift(order).to_literal()
    return x.to_literal(var=f"z{x.order}")


def _scalar_rows(m, order) -> list:
    return [[_lit(x, order) for x in row] for row in m]


def _poly_rows(m) -> list:
    return [[f.to_literal() for f in row] for row in m]


def _decomposition(rho, irreps) -> dict:
    if not irreps:
        return {}
    chi = character(rho)
    return {V.label: multiplicity(chi, character(V)) for V in irreps}


def _objects(problem: Problem, name, where):
    return _lookup(problem.objects, name, where)


def _complex_of(obj, where) -> EquivariantComplex:
    if isinstance(obj, EquivariantComplex):
        return obj
    if isinstance(obj, BlockModule):
        return single_term(obj)
    raise ValidationError(f"{where}: expected a complex or a block module")


# tasks ---------------------------------------------------------------------------------------

def task_decompose(problem: Problem, task: dict, opts) -> dict:
    rho = resolve_rep(problem, task.get("rep"), f"task {task['name']}")
    if not problem.irreps:
        raise ValidationError("decompose needs an irreducible list")
    d = decompose(rho, problem.irreps)
    return {"rep": rho.label, "dimension": rho.dim,
            "multiplicities": d.as_dict(),
            "projectors": [{"irrep": lab, "matrix": _scalar_rows(p, problem.order)}
                           for lab, p in zip(d.labels, d.projectors)]}


def task_normalize(problem: Problem, task: dict, opts) -> dict:
    M = _objects(problem, task.get("object"), task["name"])
    if isinstance(M, BlockModule):
        M = block_module_as_raw(M)
    if not isinstance(M, RawEquivariantModule):
        raise ValidationError(f"task {task['name']}: normalize needs a module")
    B, P = normalize_module(M)
    blocks = []
    for a, rep in B.blocks:
        blocks.append({"shift": a, "dim": rep.dim, "decomposition": _decomposition(rep, problem.irreps)})
    return {"blocks": blocks, "change_of_basis": _poly_rows(P)}


def _hom_pair(problem, V, i, W, j, with_basis) -> dict:
    res = hom_generators(V, i, W, j, problem.action, with_basis=with_basis)
    brute = hom_generators_bruteforce(V, i, W, j, problem.action)
    if brute != res.dimension:
        raise InternalConsistencyError(
            f"Hom({V.label}(-{i}), {W.label}(-{j})): formula {res.dimension} vs solver {brute}")
    out = {"source": {"rep": V.label, "shift": i}, "target": {"rep": W.label, "shift": j},
           "dimension": res.dimension}
    if with_basis:
        out["basis"] = [_poly_rows(b) for b in res.basis]
    return out


def task_hom(problem: Problem, task: dict, opts) -> dict:
    name = task["name"]
    if problem.action is None:
        raise ValidationError(f"task {name}: hom needs a variable action")
    if task.get("table"):
        top = _as_int(task.get("max_shift", problem.nvars - 1), f"task {name}.max_shift")
        rows = []
        for i in range(top + 1):
            for j in range(i + 1):
                for V in problem.irreps:
                    for W in problem.irreps:
                        rows.append(_hom_pair(problem, V, i, W, j, False))
        return {"table": rows}
    src, tgt = task.get("source"), task.get("target")
    if isinstance(src, str) and isinstance(tgt, str):
        C = _complex_of(_objects(problem, src, name), name)
        D = _complex_of(_objects(problem, tgt, name), name)
        degrees = task.get("l", 0)
        degrees = degrees if isinstance(degrees, list) else [degrees]
        return {"source": src, "target": tgt,
                "dimensions": {str(l): hom_complexes(C, D, _as_int(l, f"task {name}.l")) for l in degrees}}
    if not isinstance(src, dict) or not isinstance(tgt, dict):
        raise ValidationError(f"task {name}: hom needs source/target as {{rep, shift}} or object names")
    V = resolve_rep(problem, src.get("rep"), f"task {name}.source")
    W = resolve_rep(problem, tgt.get("rep"), f"task {name}.target")
    i = _as_int(src.get("shift", 0), f"task {name}.source.shift")
    j = _as_int(tgt.get("shift", 0), f"task {name}.target.shift")
    return _hom_pair(problem, V, i, W, j, bool(task.get("basis")))


def _describe_complex(C: EquivariantComplex, irreps) -> list:
    out = []
    for p in C.positions():
        M = C.term(p)
        out.append({"position": p, "rank": M.rank,
                    "blocks": [{"shift": a, "dim": r.dim, "decomposition": _decomposition(r, irreps)}
                               for a, r in M.blocks]})
    return out


def _homology(C: EquivariantComplex, degrees, irreps) -> list:
    out = []
    for d in degrees:
        pieces = graded_homology(C, d)
        euler_terms = sum((-1) ** (p % 2) * slice_dimension(C, p, d) for p in C.positions())
        euler_h = sum((-1) ** (h.position % 2) * h.dimension for h in pieces)
        if euler_terms != euler_h:
            raise InternalConsistencyError(f"Euler characteristic mismatch in degree {d}")
        out.append({"degree": d,
                    "homology": [{"position": h.position, "dimension": h.dimension,
                                  "decomposition": _decomposition(h.rep, irreps) if h.dimension else {}}
                                 for h in pieces if h.dimension]})
    return out


def _degree_list(task, default, name) -> list:
    if "degrees" in task:
        return [_as_int(d, f"task {name}.degrees") for d in task["degrees"]]
    if "degree" in task:
        return [_as_int(task["degree"], f"task {name}.degree")]
    return list(default)


def task_koszul(problem: Problem, task: dict, opts) -> dict:
    if problem.action is None:
        raise ValidationError(f"task {task['name']}: koszul needs a variable action")
    K = koszul_complex(problem.action)
    K.validate(exhaustive=True)
    out = {"terms": _describe_complex(K, problem.irreps), "d_squared_zero": True, "equivariant": True}
    degrees = _degree_list(task, [], task["name"])
    if degrees:
        out["homology"] = _homology(K, degrees, problem.irreps)
    return out


def task_homology(problem: Problem, task: dict, opts) -> dict:
    name = task["name"]
    C = _complex_of(_objects(problem, task.get("object"), name), name)
    return {"object": task["object"], "degrees": _homology(C, _degree_list(task, range(4), name),
                                                           problem.irreps)}


def _space(task, opts) -> str:
    return opts.space or task.get("space", AFFINE)


def _module(problem, task) -> object:
    obj = _objects(problem, task.get("object"), task["name"])
    if isinstance(obj, RawEquivariantModule):
        obj, _ = normalize_module(obj)
    return obj


def task_descend(problem: Problem, task: dict, opts) -> dict:
    E = _module(problem, task)
    if not isinstance(E, (BlockModule, EquivariantComplex)):
        raise ValidationError(f"task {task['name']}: descend needs a module or complex")
    cert = descends(E, _space(task, opts), problem.irreps or None)
    return {"object": task["object"], **cert.as_dict()}


def task_oracle(problem: Problem, task: dict, opts) -> dict:
    E = _module(problem, task)
    if not isinstance(E, BlockModule):
        raise ValidationError(f"task {task['name']}: the oracle needs a module")
    bound = opts.degree_bound if opts.degree_bound is not None else task.get("degree_bound")
    report = invariant_oracle(E, bound, _space(task, opts))
    return {"object": task["object"], **report.as_dict()}


def task_morphism(problem: Problem, task: dict, opts) -> dict:
    name = task["name"]
    S = _objects(problem, task.get("source"), name)
    T = _objects(problem, task.get("target"), name)
    if not isinstance(S, BlockModule) or not isinstance(T, BlockModule):
        raise ValidationError(f"task {name}: morphism needs block modules")
    phi = _poly_matrix(task.get("matrix"), problem.nvars, problem.order, f"task {name}.matrix")
    descend_morphism(phi, S, T, problem.irreps or None)
    return {"source": task["source"], "target": task["target"], "invariant_entries": True,
            "matrix": _poly_rows(phi)}


def task_verify(problem: Problem, task: dict, opts) -> dict:
    checks = []
    validate_group(problem.group)
    checks.append("group axioms")
    for V in problem.irreps:
        V.validate(exhaustive=True)
        if not is_irreducible(V):
            raise ValidationError(f"irrep {V.label} is reducible")
    if problem.irreps:
        checks.append(f"{len(problem.irreps)} irreducibles")
    for name, rho in sorted(problem.reps.items()):
        rho.validate(exhaustive=True)
        character(rho)
        checks.append(f"rep {name}")
    if problem.action is not None:
        problem.action.validate(exhaustive=True)
        checks.append("variable action")
    for name, obj in sorted(problem.objects.items()):
        if isinstance(obj, RawEquivariantModule):
            obj.validate(exhaustive=True)
        elif isinstance(obj, EquivariantComplex):
            obj.validate(exhaustive=True)
        else:
            obj.validate()
        checks.append(f"object {name}")
    return {"checks": checks, "ok": True}


TASKS = {"decompose": task_decompose, "normalize": task_normalize, "hom": task_hom,
         "koszul": task_koszul, "homology": task_homology, "descend": task_descend,
         "oracle": task_oracle, "verify": task_verify, "morphism": task_morphism}


def run_problem(text: str, opts) -> dict:
    problem = load_problem(text)
    tasks = problem.tasks
    if opts.task:
        tasks = [t for t in tasks if t["name"] == opts.task]
        if not tasks:
            raise ValidationError(f"no task named {opts.task!r}")
    results = []
    for t in tasks:
        results.append({"name": t["name"], "op": t["op"], "result": TASKS[t["op"]](problem, t, opts)})
    return {"equideriv_version": __version__, "input_sha256": problem.digest,
            "group": {"name": problem.group.name, "order": problem.group.order},
            "status": "ok", "tasks": results}


def _summary(task: dict) -> str:
    r, op = task["result"], task["op"]
    if op == "decompose":
        body = ", ".join(f"{k}:{v}" for k, v in r["multiplicities"].items())
    elif op == "normalize":
        body = " + ".join((f"A(-{b['shift']})" if b["shift"] else "A") + f"^{b['dim']}"
                          for b in r["blocks"])
    elif op == "hom":
        if "table" in r:
            body = f"{len(r['table'])} entries, formula = solver"
        elif "dimensions" in r:
            body = ", ".join(f"l={k}: {v}" for k, v in r["dimensions"].items())
        else:
            body = f"dim {r['dimension']}"
    elif op == "koszul":
        body = "ranks " + " ".join(str(t["rank"]) for t in r["terms"])
    elif op == "homology":
        body = "; ".join(f"d={x['degree']}: " + (", ".join(f"H^{h['position']}={h['dimension']}"
                                                          for h in x["homology"]) or "0")
                         for x in r["degrees"])
    elif op == "descend":
        body = r["verdict"]
        if "witness" in r:
            w = r["witness"]
            body += f" (subgroup {w['subgroup']}, block {w['block']}, component {w['component']})"
    elif op == "oracle":
        body = r["summary"]
    elif op == "morphism":
        body = "entries invariant"
    else:
        body = f"{len(r['checks'])} checks passed"
    return f"[{task['name']}] {op}: {body}"


def dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="equideriv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"equideriv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run the tasks of a problem file")
    run.add_argument("file")
    run.add_argument("--task", help="run only the task with this name")
    run.add_argument("--json", dest="json_out", help="write the JSON report here ('-' for stdout)")
    run.add_argument("--degree-bound", type=int, help="degree bound for oracle tasks")
    run.add_argument("--space", choices=["affine", "projective"], help="override the space of descent tasks")
    args = parser.parse_args(argv)

    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_INVALID
    code = EXIT_OK
    try:
        if args.degree_bound is not None and args.degree_bound < 0:
            raise ValidationError("--degree-bound must be non-negative")
        report = run_problem(text, args)
        if args.json_out != "-":
            for t in report["tasks"]:
                print(_summary(t))
            if not report["tasks"]:
                print("input valid; no tasks to run")
    except InternalConsistencyError as exc:
        code = EXIT_INTERNAL
        report = {"status": "internal-error", "error": str(exc)}
    except EquiderivError as exc:
        code = EXIT_INVALID
        report = {"status": "invalid", "error": str(exc)}
    if code:
        report.update({"equideriv_version": __version__, "input_sha256": digest(text)})
        print(f"error: {report['error']}", file=sys.stderr)
    if args.json_out == "-":
        sys.stdout.write(dump(report))
    elif args.json_out:
        Path(args.json_out).write_text(dump(report), encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
