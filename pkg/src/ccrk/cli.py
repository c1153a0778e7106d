"""Command line front end: ``ccrk build|homology|degree|verify|export``.

Exit codes: 0 success, 1 a check failed, 2 usage/config/parse error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ccrk.complex import SimplicialComplex, VertexMap
from ccrk.errors import CCRKError, FacetFileError, LabelError, NotASphereError, NotSimplicialError, TheoremViolation
from ccrk.facetfile import format_facets, parse_facets, parse_map, write_facets, write_map
from ccrk.homology import degree_report, reduced_homology
from ccrk.report import (
    G_CAP,
    N_CAP,
    ConfigError,
    SuiteConfig,
    build_report,
    default_jobs,
    dumps_json,
    dumps_text,
    parse_range,
    run_suite,
)
from ccrk.surfaces import (
    counterexample_g,
    counterexample_g2n1,
    genus_rigid_set,
    polygon_model,
    rho_map,
    sphere_rigid_set,
    subset_sphere,
    theorem1_check,
)
from ccrk.tubings import associahedron_dual

OK, CHECK_FAILED, USAGE, IO_ERROR = 0, 1, 2, 3

# family -> (constructor, parameter name, cap under the default limits)
FAMILIES = {
    "assoc-dual": (associahedron_dual, "m", N_CAP - 1),
    "sphere-rigid": (sphere_rigid_set, "n", N_CAP),
    "genus-rigid": (genus_rigid_set, "g", G_CAP),
    "polygon": (polygon_model, "n", N_CAP),
    "subset-sphere": (subset_sphere, "N", N_CAP - 2),
}


class UsageError(CCRKError):
    pass


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_complex(path: str) -> SimplicialComplex:
    try:
        return parse_facets(_read(path))
    except FacetFileError as exc:
        raise FacetFileError(f"{path}: {exc}") from None


def _profile_text(profile) -> str:
    lines = []
    for g in profile.groups:
        tors = " + ".join(f"Z/{t}" for t in g.torsion)
        free = f"Z^{g.betti}" if g.betti > 1 else ("Z" if g.betti else "")
        group = " + ".join(p for p in (free, tors) if p) or "0"
        lines.append(f"H~_{g.dim} = {group}")
    return "\n".join(lines) + "\n"


def _check_cap(value: int, cap: int, name: str, allow_large: bool) -> None:
    if value > cap and not allow_large:
        raise UsageError(f"{name}={value} exceeds the cap {cap}; pass --allow-large to override")


# -- verbs ------------------------------------------------------------------------


def cmd_build(args) -> int:
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    make, pname, cap = FAMILIES[args.family]
    _check_cap(args.param, cap, pname, args.allow_large)
    try:
        K = make(args.param)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = f"{args.family} {pname}={args.param}: {K.n_vertices} vertices, {len(K.facets)} facets, dim {K.dim}"
    text = format_facets(K, header)
    if args.out is None:
        sys.stdout.write(text)
        print(header, file=sys.stderr)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(header)
    return OK


def cmd_homology(args) -> int:
    K = _load_complex(args.facets)
    h = reduced_homology(K)
    if args.format == "json":
        text = json.dumps({"schema": 1, "vertices": K.n_vertices, "dim": K.dim, "homology": h.to_json()},
                          sort_keys=True, indent=2) + "\n"
    else:
        text = _profile_text(h)
    _emit(text, args.out)
    return OK


def _rho_endpoints(N: int, allow_large: bool) -> VertexMap:
    _check_cap(N, N_CAP - 2, "N", allow_large)
    if N < 2:
        raise UsageError(f"rho needs N >= 2, got {N}")
    return rho_map(N)


def cmd_degree(args) -> int:
    if args.rho is not None:
        if args.files:
            raise UsageError("give either --rho N or three files, not both")
        f = _rho_endpoints(args.rho, args.allow_large)
    else:
        if len(args.files) != 3:
            raise UsageError("degree needs SOURCE TARGET MAP files (or --rho N)")
        src, tgt = _load_complex(args.files[0]), _load_complex(args.files[1])
        try:
            f = parse_map(_read(args.files[2]), src, tgt)
        except FacetFileError as exc:
            raise FacetFileError(f"{args.files[2]}: {exc}") from None
    try:
        rep = degree_report(f)
    except (NotSimplicialError, NotASphereError) as exc:
        print(f"degree check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED
    if args.format == "json":
        text = json.dumps({"schema": 1, **rep.to_json()}, sort_keys=True, indent=2) + "\n"
    else:
        text = f"degree {rep.degree} (|degree| = {abs(rep.degree)}) in dimension {rep.dim}\n"
    _emit(text, args.out)
    return OK


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    cfg = SuiteConfig(
        suite=args.suite,
        n=parse_range(args.n) if args.n else None,
        g=parse_range(args.g) if args.g else None,
        m=parse_range(args.m) if args.m else None,
        jobs=jobs,
        allow_large=args.allow_large,
    )
    if args.out is not None and not Path(args.out).resolve().parent.is_dir():
        raise OSError(f"output directory for {args.out} does not exist")
    results = run_suite(cfg)
    report = build_report(cfg, results)
    text = dumps_json(report) if args.format == "json" else dumps_text(report)
    _emit(text, args.out)
    if args.out is not None:
        sys.stdout.write(dumps_text(report))
    return OK if report["payload"]["summary"]["fail"] == 0 else CHECK_FAILED


def cmd_export(args) -> int:
    """Write source/target facet files, a map file and (when present) a witness."""
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    witness = None
    if args.target == "rho":
        if args.n is None:
            raise UsageError("export rho needs --n N (the chain length)")
        f = _rho_endpoints(args.n, args.allow_large)
        note = f"rho map, N={args.n}"
    elif args.target == "theorem1":
        if args.n is None:
            raise UsageError("export theorem1 needs --n")
        _check_cap(args.n, N_CAP, "n", args.allow_large)
        try:
            res = theorem1_check(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        f, witness = res.iso, res.to_json()
        note = f"interval sphere to polygon model, n={args.n}"
    elif args.target == "counterexample":
        if args.g is None:
            raise UsageError("export counterexample needs --g")
        _check_cap(args.g, G_CAP, "g", args.allow_large)
        try:
            w = counterexample_g(args.g)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        f, witness = w.f, w.to_json()
        note = f"non-rigidity map, g={args.g}"
    else:
        w = counterexample_g2n1()
        f, witness = w.f, w.to_json()
        note = "non-rigidity map, g=2 with one marked point"
    write_facets(f.source, out / "source.facets", f"source: {note}")
    write_facets(f.target, out / "target.facets", f"target: {note}")
    write_map(f, out / "map.txt", note)
    if witness is not None:
        (out / "witness.json").write_text(json.dumps({"schema": 1, "witness": witness}, sort_keys=True, indent=2)
                                          + "\n", encoding="utf-8")
    print(f"wrote {note} to {out}")
    return OK


# -- argument parsing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccrk", description="Build and verify finite curve-complex spheres.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--out", help="output path (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--allow-large", action="store_true",
                        help=f"lift the n <= {N_CAP}, g <= {G_CAP} caps (runtime grows quickly)")

    b = sub.add_parser("build", help="write the facet file of a complex family")
    b.add_argument("family", help=", ".join(FAMILIES))
    b.add_argument("param", type=int)
    common(b, fmt=False)
    b.set_defaults(func=cmd_build)

    h = sub.add_parser("homology", help="reduced integral homology of a facet file")
    h.add_argument("facets", help="facet file, or - for stdin")
    common(h)
    h.set_defaults(func=cmd_homology)

    d = sub.add_parser("degree", help="degree of a simplicial map between homology spheres")
    d.add_argument("files", nargs="*", metavar="FILE", help="SOURCE TARGET MAP")
    d.add_argument("--rho", type=int, metavar="N", help="use the left-most component map over 1..N")
    common(d)
    d.set_defaults(func=cmd_degree)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all")
    v.add_argument("--n", help="range of marked points, e.g. 4..9")
    v.add_argument("--g", help="range of genera, e.g. 3..4")
    v.add_argument("--m", help="range of associahedron indices, e.g. 3..9")
    v.add_argument("--jobs", type=int, help="worker processes (default: $CCRK_JOBS or 1)")
    common(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="export a map with its source and target complexes")
    e.add_argument("target", choices=("rho", "theorem1", "counterexample", "counterexample-g2n1"))
    e.add_argument("--n", type=int)
    e.add_argument("--g", type=int)
    e.add_argument("--out", required=True, help="output directory")
    e.add_argument("--allow-large", action="store_true")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigError, FacetFileError, LabelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except TheoremViolation as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
