"""Command-line interface.

Exit codes, uniform across subcommands:
    0   success / positive result
    1   internal error or unknown subcommand
    2   invalid input (unreadable file, parse error, precondition failure)
    3   negative or not-applicable result (no sphere found, theorem
        hypothesis not met)

Output is deterministic: identical inputs produce byte-identical
output.  `--json` emits a machine-readable document validating against
the schema shipped as nscrush/schema.json (`-` writes it to stdout).
"""

import argparse
import json
import sys

from .casson import check_reducible_minimal, decompose
from .enumeration import vertex_solutions
from .errors import (GluingFormatError, InvalidTriangulationError,
                     NscrushError)
from .homology import h1
from .skeleton import compute_skeleton, euler_characteristic, validate
from .spheres import full_sphere_search, restricted_sphere_search
from .surfaces import classify, format_vector, parse_vector, quad_support
from .triangulation import parse_triangulation, serialize_triangulation
from .crush import crush_sphere

OK, ERROR, INVALID_INPUT, NEGATIVE = 0, 1, 2, 3


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _InputProblem("cannot read {}: {}".format(path, exc))
    try:
        return parse_triangulation(text)
    except (GluingFormatError, NscrushError) as exc:
        raise _InputProblem("{}: {}".format(path, exc))


class _InputProblem(Exception):
    pass


def _emit_json(doc, target):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="utf-8") as handle:
            handle.write(text)


def _surface_doc(tri, x):
    cls = classify(tri, x)
    return {
        "coords": list(x),
        "kind": cls.kind,
        "euler": cls.euler,
        "connected": cls.connected,
        "orientable": cls.orientable,
        "vertex_linking": cls.vertex_linking,
        "quad_support": list(quad_support(x, tri.n)),
    }


def _cmd_validate(args):
    tri = _load(args.file)
    report = validate(tri)
    print("tets: {}".format(tri.n))
    print("orientable: {}".format("yes" if report.orientable else "no"))
    print("closed: {}".format("yes" if report.closed else "no"))
    print("edge_valid: {}".format("yes" if report.edge_valid else "no"))
    for k, t in enumerate(report.vertex_link_types):
        print("vertex {}: link {}".format(k, t))
    for failure in report.failures:
        print("defect: {}".format(failure))
    if args.json:
        _emit_json({
            "format": 1, "kind": "validation",
            "orientable": report.orientable,
            "closed": report.closed,
            "vertex_links": list(report.vertex_link_types),
            "edge_valid": report.edge_valid,
            "failures": list(report.failures),
        }, args.json)
    return OK


def _cmd_skeleton(args):
    tri = _load(args.file)
    sk = compute_skeleton(tri)
    v, e, f = sk.counts()
    print("tets: {}".format(tri.n))
    print("vertices: {}".format(v))
    print("edges: {}".format(e))
    print("faces: {}".format(f))
    print("edge degrees: {}".format(
        " ".join(str(sk.edge_degree(k)) for k in range(e))))
    print("boundary faces: {}".format(len(sk.boundary_faces)))
    print("euler: {}".format(euler_characteristic(tri)))
    if args.json:
        _emit_json({
            "format": 1, "kind": "skeleton",
            "tets": tri.n, "vertices": v, "edges": e, "faces": f,
            "edge_degrees": [sk.edge_degree(k) for k in range(e)],
            "boundary_faces": [list(bf) for bf in sk.boundary_faces],
            "euler": euler_characteristic(tri),
        }, args.json)
    return OK


def _cmd_homology(args):
    tri = _load(args.file)
    try:
        group = h1(tri)
    except InvalidTriangulationError as exc:
        raise _InputProblem(str(exc))
    print("H1 = {}".format(group))
    if args.json:
        _emit_json({
            "format": 1, "kind": "homology",
            "h1": str(group), "betti": group.betti,
            "torsion": list(group.torsion),
        }, args.json)
    return OK


def _cmd_surfaces(args):
    tri = _load(args.file)
    try:
        rays = vertex_solutions(tri)
    except InvalidTriangulationError as exc:
        raise _InputProblem(str(exc))
    for x in rays:
        print(format_vector(x))
    if args.json:
        _emit_json({
            "format": 1, "kind": "surfaces",
            "tets": tri.n,
            "surfaces": [_surface_doc(tri, x) for x in rays],
        }, args.json)
    return OK


def _cmd_find_sphere(args):
    tri = _load(args.file)
    try:
        if args.full:
            result = full_sphere_search(tri)
        else:
            result = restricted_sphere_search(tri, args.restricted)
    except InvalidTriangulationError as exc:
        raise _InputProblem(str(exc))
    doc = {
        "format": 1, "kind": "sphere",
        "found": result.found, "mode": result.mode,
        "enumerations": result.enumerations,
        "system_rows": result.system_rows,
        "supplement_fired": result.supplement_fired,
    }
    if result.found:
        cls = classify(tri, result.sphere)
        print(format_vector(result.sphere))
        print("kind: {} euler: {} vertex_linking: {}".format(
            cls.kind, cls.euler, cls.vertex_linking))
        print("pattern: {}".format(
            " ".join("{}:{}".format(t, s) for t, s in result.pattern)))
        print("mode: {} enumerations: {}".format(
            result.mode, result.enumerations))
        doc["sphere"] = _surface_doc(tri, result.sphere)
        doc["pattern"] = [list(p) for p in result.pattern]
        if args.json:
            _emit_json(doc, args.json)
        return OK
    print("no non-trivial normal sphere found "
          "(mode: {}, enumerations: {})".format(
              result.mode, result.enumerations))
    if args.json:
        _emit_json(doc, args.json)
    return NEGATIVE


def _cmd_crush(args):
    tri = _load(args.file)
    try:
        with open(args.vector, "r", encoding="utf-8") as handle:
            x = parse_vector(handle.read(), tri.n)
    except OSError as exc:
        raise _InputProblem("cannot read {}: {}".format(args.vector, exc))
    except ValueError as exc:
        raise _InputProblem(str(exc))
    try:
        report = crush_sphere(tri, x)
    except (InvalidTriangulationError, ValueError) as exc:
        raise _InputProblem(str(exc))
    print("separating: {}".format("yes" if report.separating else "no"))
    print("destroyed: {}".format(
        " ".join(str(t) for t in report.destroyed_tets)))
    outputs = []
    for k, out in enumerate(report.outputs):
        text = serialize_triangulation(out)
        print("output {}: {} tets, H1 = {}".format(k, out.n, h1(out)))
        if args.out_prefix:
            path = "{}.{}.tri".format(args.out_prefix, k)
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
            print("wrote {}".format(path))
        outputs.append({
            "tets": out.n, "gluing_file": text, "h1": str(h1(out)),
        })
    if args.json:
        _emit_json({
            "format": 1, "kind": "crush",
            "input_tets": report.input_tets,
            "sphere": list(report.sphere),
            "separating": report.separating,
            "destroyed_tets": list(report.destroyed_tets),
            "outputs": outputs,
        }, args.json)
    return OK


def _cmd_decompose(args):
    tri = _load(args.file)
    try:
        report = decompose(tri)
    except InvalidTriangulationError as exc:
        raise _InputProblem(str(exc))
    print("root: {} tets, H1 = {}".format(tri.n, h1(tri)))
    for step in report.steps:
        print("crush piece {} ({} tets, {} search): {} -> pieces {}".format(
            step.piece, step.tets, step.mode,
            "separating" if step.report.separating else "non-separating",
            " ".join(str(c) for c in step.children) or "none"))
    for leaf in report.leaves:
        print("leaf {}: {} tets, H1 = {}".format(
            leaf.piece, leaf.triangulation.n, leaf.homology))
    print("s2xs1 factors: {}".format(report.s2xs1_factors))
    print("trivial pieces dropped: {}".format(report.dropped_trivial))
    print("homology ledger: {}".format(
        "balanced" if report.homology_balanced() else "UNBALANCED"))
    if args.json:
        _emit_json({
            "format": 1, "kind": "decomposition",
            "root_tets": tri.n, "root_h1": str(h1(tri)),
            "assume_minimal": bool(args.assume_minimal),
            "steps": [{
                "piece": s.piece, "parent": s.parent, "tets": s.tets,
                "mode": s.mode, "sphere": list(s.sphere),
                "separating": s.report.separating,
                "children": list(s.children), "retries": s.retries,
            } for s in report.steps],
            "leaves": [{
                "piece": l.piece, "tets": l.triangulation.n,
                "h1": str(l.homology),
                "gluing_file": serialize_triangulation(l.triangulation),
            } for l in report.leaves],
            "s2xs1_factors": report.s2xs1_factors,
            "dropped_trivial": report.dropped_trivial,
            "balanced": report.homology_balanced(),
        }, args.json)
    return OK


def _cmd_check_reducible(args):
    tri = _load(args.file)
    try:
        verdict = check_reducible_minimal(
            tri, assume_minimal=bool(args.assume_minimal))
    except InvalidTriangulationError as exc:
        raise _InputProblem(str(exc))
    print("verdict: {}".format(verdict.verdict))
    print("enumerations: {}".format(verdict.enumerations))
    if verdict.certificate is not None:
        print("certificate: {}".format(format_vector(verdict.certificate)))
    print("note: {}".format(verdict.assumption))
    doc = {
        "format": 1, "kind": "reducibility",
        "verdict": verdict.verdict, "tets": verdict.tets,
        "enumerations": verdict.enumerations,
        "system_rows": verdict.system_rows,
        "assumption": verdict.assumption,
    }
    if verdict.certificate is not None:
        doc["certificate"] = _surface_doc(tri, verdict.certificate)
        doc["pattern"] = [list(p) for p in verdict.pattern]
    if args.json:
        _emit_json(doc, args.json)
    return NEGATIVE if verdict.verdict == "not-applicable" else OK


def _parser():
    parser = argparse.ArgumentParser(
        prog="nscrush",
        description="Normal surfaces, sphere crushing and connected-sum "
                    "decomposition for triangulated 3-manifolds.")
    sub = parser.add_subparsers(dest="command")

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("file", help="gluing file")
        p.add_argument("--json", metavar="PATH",
                       help="write a JSON report ('-' for stdout)")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, help="orientability, closedness, links")
    add("skeleton", _cmd_skeleton, help="vertex/edge/face class counts")
    add("homology", _cmd_homology, help="first integer homology")
    add("surfaces", _cmd_surfaces, help="vertex normal surfaces")

    p = add("find-sphere", _cmd_find_sphere,
            help="locate a non-trivial normal 2-sphere")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--restricted", type=int, metavar="K", default=2,
                      help="quads in at most K tetrahedra (default 2)")
    mode.add_argument("--full", action="store_true",
                      help="scan all vertex solutions")

    p = add("crush", _cmd_crush, help="collapse a normal sphere")
    p.add_argument("vector", help="file holding one coordinate line")
    p.add_argument("--out-prefix", metavar="PATH",
                   help="write each output piece to PATH.<k>.tri")

    p = add("decompose", _cmd_decompose,
            help="decompose into sphere-free pieces")
    p.add_argument("--assume-minimal", action="store_true",
                   help="record the minimality assumption in the report")

    p = add("check-reducible", _cmd_check_reducible,
            help="polynomial reducibility check for minimal triangulations")
    p.add_argument("--assume-minimal", action="store_true",
                   help="caller asserts the triangulation is minimal")
    return parser


def run(argv):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits itself on --help (0) and usage errors; fold
        # the latter into the generic error code.
        return OK if exc.code == 0 else ERROR
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return ERROR
    try:
        return args.func(args)
    except _InputProblem as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return INVALID_INPUT
    except NscrushError as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
