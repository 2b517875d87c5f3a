"""Command-line surface: classify, inspect, verify, embed, wirth-list.

Exit codes: 0 success, 1 domain error (bad file, precondition failure,
reported as one line on stderr), 2 usage error. Output is deterministic:
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import (
    MAX_DIMENSION,
    Decomposition,
    canonical_form,
    classify,
    compose,
    decompose,
    dual_embedding_bound,
    embed_in_cube,
    verify_theorems,
)
from .polytope import LatticePolytope, format_polytope_text, parse_polytope_text
from .wirth import WirthMatrix, enumerate_one_minimal, reduce as reduce_wirth


def _dimension(value: str) -> int:
    try:
        dim = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension {value!r}")
    if not 1 <= dim <= MAX_DIMENSION:
        raise argparse.ArgumentTypeError(f"dimension must lie in [1, {MAX_DIMENSION}]")
    return dim


def _describe_factor_list(dec: Decomposition) -> str:
    parts = []
    if dec.core is not None:
        c = ",".join("".join(str(x) for x in row) for row in dec.core.c)
        parts.append(f"crosspolytope-core(dim={dec.core.dim},f={dec.core.f},c=[{c}])")
    if dec.segments:
        parts.append(f"segment x{dec.segments}" if dec.segments > 1 else "segment")
    for k in dec.del_pezzo:
        parts.append(f"del-pezzo({k})")
    for k in dec.pseudo_del_pezzo:
        parts.append(f"pseudo-del-pezzo({k})")
    return " + ".join(parts)


def _load_polytope(path: str) -> LatticePolytope:
    text = Path(path).read_text(encoding="ascii")
    return parse_polytope_text(text)


def _print_matrix(m, out):
    for row in m.entries:
        out.write("  " + " ".join(f"{x:3d}" for x in row) + "\n")


def cmd_classify(args, out) -> int:
    classes = classify(args.dim)
    if args.format == "json":
        out.write(json.dumps([dec.to_dict() for dec in classes], indent=2) + "\n")
    else:
        out.write(f"# pseudo-symmetric simplicial reflexive polytopes, dimension {args.dim}\n")
        out.write(f"# {len(classes)} classes\n")
        for i, dec in enumerate(classes):
            out.write(f"{i:03d}  {_describe_factor_list(dec)}\n")
    if args.emit_vertices:
        directory = Path(args.emit_vertices)
        directory.mkdir(parents=True, exist_ok=True)
        for i, dec in enumerate(classes):
            p = compose(dec)
            digest = canonical_form(p).digest[:12]
            name = f"{i:03d}_{digest}.poly"
            comment = f"dimension {args.dim} class {i:03d}: {_describe_factor_list(dec)}"
            (directory / name).write_text(format_polytope_text(p, comment=comment), encoding="ascii")
            out.write(f"wrote {directory / name}\n")
    return 0


def _inspect_data(p: LatticePolytope) -> dict:
    report = p.lattice_points()
    data = {
        "dim": p.dim,
        "vertices": p.n_vertices,
        "facets": len(p.facets),
        "reflexive": p.is_reflexive(),
        "simplicial": p.is_simplicial(),
        "centrally_symmetric": p.is_centrally_symmetric(),
        "pseudo_symmetric": p.is_pseudo_symmetric(),
        "smooth_fano": p.is_smooth_fano(),
        "f_vector": list(p.f_vector()),
        "lattice_points": {
            "total": report.total,
            "boundary": report.boundary,
            "interior_nonzero": report.interior_nonzero,
        },
    }
    if p.is_reflexive() and p.is_simplicial() and p.is_pseudo_symmetric():
        data["decomposition"] = decompose(p).to_dict()
    else:
        data["decomposition"] = None
    return data


def cmd_inspect(args, out) -> int:
    p = _load_polytope(args.path)
    data = _inspect_data(p)
    if args.format == "json":
        out.write(json.dumps(data, indent=2) + "\n")
        return 0
    yesno = lambda flag: "yes" if flag else "no"
    out.write(f"dimension            {data['dim']}\n")
    out.write(f"vertices             {data['vertices']}\n")
    out.write(f"facets               {data['facets']}\n")
    out.write(f"reflexive            {yesno(data['reflexive'])}\n")
    out.write(f"simplicial           {yesno(data['simplicial'])}\n")
    out.write(f"centrally symmetric  {yesno(data['centrally_symmetric'])}\n")
    out.write(f"pseudo-symmetric     {yesno(data['pseudo_symmetric'])}\n")
    out.write(f"smooth Fano          {yesno(data['smooth_fano'])}\n")
    out.write(f"f-vector             {tuple(data['f_vector'])}\n")
    pts = data["lattice_points"]
    out.write(
        f"lattice points       total {pts['total']}, boundary {pts['boundary']}, "
        f"interior nonzero {pts['interior_nonzero']}\n"
    )
    if data["decomposition"] is not None:
        dec = Decomposition.from_dict(data["decomposition"])
        out.write(f"decomposition        {_describe_factor_list(dec)}\n")
    else:
        out.write("decomposition        n/a (needs pseudo-symmetric simplicial reflexive)\n")
    return 0


def _verify_one(p: LatticePolytope, out, label: str) -> bool:
    report = verify_theorems(p)
    ok = report.passed
    embed_in_cube(p)  # raises on failure
    if p.dim >= 2:
        dual_embedding_bound(p)
    out.write(f"{label}\n")
    for check in report.checks:
        flag = "ok" if check.passed else "FAIL"
        eq = ", equality" + (f": {check.note}" if check.note else "") if check.equality else ""
        out.write(f"  {check.name:22s} {check.measured:>5d} <= {check.limit:<5d} {flag}{eq}\n")
    out.write(f"  cube embedding         vertices land in {{-1,0,1}} ok\n")
    if p.dim >= 2:
        out.write(f"  dual embedding         coordinates within {p.dim // 2} ok\n")
    return ok


def cmd_verify(args, out) -> int:
    if args.path is not None:
        p = _load_polytope(args.path)
        ok = _verify_one(p, out, f"polytope from {args.path}")
        out.write(("verified\n") if ok else ("verification FAILED\n"))
        return 0 if ok else 1
    classes = classify(args.dim)
    passed = 0
    for i, dec in enumerate(classes):
        p = compose(dec)
        ok = _verify_one(p, out, f"class {i:03d}: {_describe_factor_list(dec)}")
        passed += ok
    out.write(f"{passed}/{len(classes)} classes verified\n")
    return 0 if passed == len(classes) else 1


def cmd_embed(args, out) -> int:
    p = _load_polytope(args.path)
    u = embed_in_cube(p)
    out.write("unimodular transform:\n")
    _print_matrix(u, out)
    out.write("transformed vertices:\n")
    for v in p.vertex_columns:
        image = u.apply(v)
        out.write("  " + " ".join(f"{x:2d}" for x in image) + "\n")
    return 0


def _wirth_classes(dim: int, one_minimal: bool) -> list[WirthMatrix]:
    if one_minimal:
        return list(enumerate_one_minimal(dim))
    classes = []
    for core_dim in [0] + list(range(2, dim + 1)):
        if core_dim == 0:
            classes.append(WirthMatrix(dim, 0, ((),) * dim))
            continue
        pad = dim - core_dim
        for core in enumerate_one_minimal(core_dim):
            classes.append(WirthMatrix(dim, core.f, core.c + ((0,) * core.f,) * pad))
    return classes


def cmd_wirth_list(args, out) -> int:
    classes = _wirth_classes(args.dim, args.one_minimal)
    if args.format == "json":
        out.write(json.dumps([w.to_dict() for w in classes], indent=2) + "\n")
        return 0
    kind = "1-minimal Wirth matrices" if args.one_minimal else "Wirth matrices"
    out.write(f"# equivalence classes of {kind}, dimension {args.dim}\n")
    out.write(f"# {len(classes)} classes\n")
    for i, w in enumerate(classes):
        red = reduce_wirth(w)
        out.write(f"class {i:03d}: f={w.f} det={w.determinant()} segments_after_reduction={red.r}\n")
        _print_matrix(w.assembled(), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosspoly",
        description="Classification toolkit for pseudo-symmetric simplicial reflexive polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="enumerate all isomorphism classes")
    p_classify.add_argument("--dim", type=_dimension, required=True)
    p_classify.add_argument("--format", choices=("text", "json"), default="text")
    p_classify.add_argument(
        "--emit-vertices", metavar="DIR",
        help="write one polytope file per class, named by index and canonical digest",
    )
    p_classify.set_defaults(func=cmd_classify)

    p_inspect = sub.add_parser("inspect", help="report the properties of a polytope file")
    p_inspect.add_argument("path")
    p_inspect.add_argument("--format", choices=("text", "json"), default="text")
    p_inspect.set_defaults(func=cmd_inspect)

    p_verify = sub.add_parser(
        "verify", help="check every structural bound, for one file or a whole dimension"
    )
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--dim", type=_dimension)
    group.add_argument("path", nargs="?")
    p_verify.set_defaults(func=cmd_verify)

    p_embed = sub.add_parser("embed", help="unimodular embedding into the unit cube")
    p_embed.add_argument("path")
    p_embed.set_defaults(func=cmd_embed)

    p_wirth = sub.add_parser("wirth-list", help="list Wirth matrix equivalence classes")
    p_wirth.add_argument("--dim", type=_dimension, required=True)
    p_wirth.add_argument("--one-minimal", action="store_true")
    p_wirth.add_argument("--format", choices=("text", "json"), default="text")
    p_wirth.set_defaults(func=cmd_wirth_list)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
