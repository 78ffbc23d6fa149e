"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .arquiver import knit, parse_object
from .charcat import cc, cc_table, index_vector
from .clusteralg import enumerate_seeds, initial_seed, mutate_seed
from .errors import ClusterCharError, DepthExceeded, InputError
from .fpoly import f_polynomial
from .grassmann import euler_char, grass_table
from .laurent import LaurentPoly
from .quivers import Quiver
from .reps import Representation


def _load_quiver(args) -> Quiver:
    if not args.quiver:
        raise InputError("this command requires --quiver FILE")
    return Quiver.from_file(args.quiver)


def _load_rep(args) -> Representation:
    if not args.rep:
        raise InputError("this command requires --rep FILE")
    return Representation.from_file(args.rep)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _variable_payload(value: LaurentPoly) -> dict:
    return {"canonical": value.to_str(), "display": value.fraction_str()}


def cmd_fpoly(args) -> int:
    rep = _load_rep(args)
    fp = f_polynomial(rep)
    _emit(args, {"fpoly": fp.to_str(), "dims": list(rep.dims)}, fp.to_str())
    return 0


def cmd_grassmannian(args) -> int:
    rep = _load_rep(args)
    if args.e:
        e = tuple(int(x) for x in args.e.split(","))
        chi = euler_char(rep, e)
        _emit(args, {"e": list(e), "chi": chi}, f"{','.join(map(str, e))} -> {chi}")
        return 0
    table = grass_table(rep)
    doc = {"table": [{"e": list(e), "chi": chi} for e, chi in table.items()]}
    text = "\n".join(f"{','.join(map(str, e))} -> {chi}" for e, chi in table.items())
    _emit(args, doc, text)
    return 0


def cmd_cc(args) -> int:
    quiver = _load_quiver(args)
    obj = parse_object(args.object)
    value = cc(quiver, obj)
    doc = {
        "object": obj.label(),
        "name": obj.name(),
        "cc": _variable_payload(value),
        "index": list(index_vector(quiver, obj)),
    }
    _emit(args, doc, value.to_str())
    return 0


def cmd_index(args) -> int:
    quiver = _load_quiver(args)
    obj = parse_object(args.object)
    vec = index_vector(quiver, obj)
    _emit(args, {"object": obj.label(), "index": list(vec)}, "(" + ",".join(map(str, vec)) + ")")
    return 0


def cmd_cc_table(args) -> int:
    quiver = _load_quiver(args)
    table = cc_table(quiver)
    entries = []
    lines = []
    for obj in table.objects:
        value = table.value(obj)
        entries.append(
            {
                "object": obj.label(),
                "name": obj.name(),
                "index": list(index_vector(quiver, obj)),
                "cc": _variable_payload(value),
            }
        )
        lines.append(f"{obj.label():8} {obj.name():12} {value.to_str()}")
    _emit(args, {"entries": entries}, "\n".join(lines))
    return 0


def cmd_ar_quiver(args) -> int:
    quiver = _load_quiver(args)
    ar = knit(quiver)
    doc = ar.to_json()
    lines = ["vertices:"]
    for v in doc["vertices"]:
        flags = "".join(
            [" (projective)" if v["projective"] else "", " (injective)" if v["injective"] else ""]
        )
        lines.append(f"  [{v['interval'][0]},{v['interval'][1]}] = {v['name']}{flags}")
    lines.append("arrows:")
    for a in doc["arrows"]:
        lines.append(f"  {a['from']} -> {a['to']}")
    lines.append("tau:")
    for t in doc["tau"]:
        lines.append(f"  tau{t['from']} = {t['to']}")
    lines.append("meshes:")
    for m in doc["meshes"]:
        middle = " + ".join(str(x) for x in m["middle"])
        lines.append(f"  0 -> {m['tau']} -> {middle} -> {m['top']} -> 0")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_mutate(args) -> int:
    quiver = _load_quiver(args)
    seed = initial_seed(quiver)
    sequence = [int(x) for x in args.seq.split(",")] if args.seq else []
    for i in sequence:
        seed = mutate_seed(seed, i)
    doc = {
        "sequence": sequence,
        "cluster": [_variable_payload(u) for u in seed.cluster],
        "quiver": seed.quiver.to_json(),
    }
    text = "\n".join(
        [f"u{i + 1} = {u.to_str()}" for i, u in enumerate(seed.cluster)]
        + ["arrows: " + ", ".join(f"{a.source}->{a.target}" for a in seed.quiver.arrows)]
    )
    _emit(args, doc, text)
    return 0


def cmd_enumerate(args) -> int:
    quiver = _load_quiver(args)
    status = "closed"
    try:
        seeds, variables = enumerate_seeds(quiver, max_depth=args.max_depth)
    except DepthExceeded as exc:
        seeds, variables = exc.seeds, exc.variables
        status = "depth-exceeded"
    var_strings = sorted(u.to_str() for u in variables)
    doc = {
        "status": status,
        "seeds": len(seeds),
        "variables": len(var_strings),
        "variable_list": var_strings,
    }
    text = "\n".join(
        [f"status: {status}", f"seeds: {len(seeds)}", f"variables: {len(var_strings)}"]
        + [f"  {v}" for v in var_strings]
    )
    _emit(args, doc, text)
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_suite(args.suite)
    ok = all(r.ok for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": ok,
                    "checks": [
                        {
                            "name": r.name,
                            "ok": r.ok,
                            "detail": r.detail,
                            "elapsed": round(r.elapsed, 3),
                        }
                        for r in results
                    ],
                },
                indent=2,
            )
        )
    else:
        for r in results:
            print(r.line())
        print(f"{'OK' if ok else 'FAILED'}: {sum(r.ok for r in results)}/{len(results)} checks passed")
    return 0 if ok else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    quiver = Quiver.from_file(args.quiver) if args.quiver else None
    app = create_app(quiver)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterchar",
        description="Quiver Grassmannians, F-polynomials and cluster characters in type A",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--quiver", help="quiver JSON file")
        p.add_argument("--rep", help="representation JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--max-depth", type=int, default=12, help="seed BFS depth bound")
        return p

    add("fpoly", cmd_fpoly, help="F-polynomial of a representation")
    g = add("grassmannian", cmd_grassmannian, help="Euler characteristics of submodule Grassmannians")
    g.add_argument("--e", help="single subdimension vector, e.g. 1,1")
    c = add("cc", cmd_cc, help="cluster character of one object")
    c.add_argument("--object", required=True, help='object label: "[1,3]" or "T2"')
    i = add("index", cmd_index, help="index vector of one object")
    i.add_argument("--object", required=True, help='object label: "[1,3]" or "T2"')
    add("cc-table", cmd_cc_table, help="characters of all indecomposables")
    add("ar-quiver", cmd_ar_quiver, help="knitted AR quiver")
    m = add("mutate", cmd_mutate, help="mutate the initial seed along a sequence")
    m.add_argument("--seq", default="", help="comma-separated vertices, e.g. 1,2,1")
    add("enumerate", cmd_enumerate, help="BFS enumeration of seeds and cluster variables")
    v = add("verify", cmd_verify, help="run verification suites")
    v.add_argument(
        "--suite",
        default="all",
        choices=["fpoly", "grass", "char", "algebra", "all"],
        help="which suite to run",
    )
    s = add("serve", cmd_serve, help="run the JSON service")
    s.add_argument("--port", type=int, default=8787)
    s.add_argument("--host", default="127.0.0.1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ClusterCharError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
