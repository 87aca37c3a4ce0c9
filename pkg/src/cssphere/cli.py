"""Command line interface.

Exit codes: 0 success / property holds, 1 property fails or counts differ,
2 usage error, 3 budget exhausted or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .enumeration import KNOWN_CYCLIC_COUNTS, SearchConfig, classify, enumerate_nn_cs_spheres
from .homology import homology
from .invariants import (
    central_neighborliness_degree,
    check_stanley,
    cs_upper_bound_check,
    is_nearly_neighborly,
    kuehnel_sparla_for,
)
from .io import ParseError, read_complex, serialize_complex, serialize_orbits
from .recognition import DEFAULT_BUDGET, Verdict, is_combinatorial_manifold, is_sphere
from .symmetry import GroupSpec, are_isomorphic, is_centrally_symmetric

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

CHECKS = ("cs", "nn", "manifold", "sphere", "stanley", "ubt", "ks")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": 1, **payload}, sort_keys=True))
    else:
        print(text)


def cmd_construct(args) -> int:
    kind = args.family
    if kind == "crosspolytope":
        c = cons.crosspolytope_boundary(args.k)
    elif kind == "cs4m":
        if args.orbits:
            sys.stdout.write(serialize_orbits(cons.cs_sphere_4m_orbits(args.m), GroupSpec("cyclic", 4 * args.m), d=3))
            return EXIT_OK
        c = cons.cs_sphere_4m(args.m)
    elif kind == "torus":
        c = cons.torus_t2(args.m)
    elif kind == "jockusch":
        s = cons.crosspolytope_boundary(4)
        for _ in range(4, args.k):
            s = cons.jockusch_next(s, seed=args.seed).complex
        c = s
    elif kind == "ms-sphere":
        c = cons.mcmullen_shephard_sphere(args.d)
    elif kind == "stacked":
        c = cons.stacked_cs_sphere(args.d, args.k)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(kind)
    text = serialize_complex(c)
    if kind == "jockusch":
        text = f"# seed={args.seed}\n" + text
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    c = read_complex(args.file)
    wanted = [w.strip() for w in args.check.split(",") if w.strip()]
    for w in wanted:
        if w not in CHECKS:
            raise ValueError(f"unknown check {w!r}; choose from {', '.join(CHECKS)}")
    results: dict[str, object] = {}
    inconclusive = False
    for w in wanted:
        if w == "cs":
            results[w] = c.n % 2 == 0 and is_centrally_symmetric(c)
        elif w == "nn":
            results[w] = bool(c.n % 2 == 0 and is_centrally_symmetric(c) and is_nearly_neighborly(c))
        elif w == "manifold":
            cert = is_combinatorial_manifold(c, budget=args.budget, seed=args.seed)
            if cert.verdict == Verdict.INCONCLUSIVE:
                inconclusive = True
                results[w] = None
            else:
                results[w] = cert.verdict in (Verdict.MANIFOLD, Verdict.SPHERE)
        elif w == "sphere":
            cert = is_sphere(c, budget=args.budget, seed=args.seed)
            if cert.is_sphere:
                results[w] = True
            elif cert.verdict == Verdict.MANIFOLD and not cert.obstruction:
                inconclusive = True
                results[w] = None
            else:
                results[w] = False
        elif w == "stanley":
            results[w] = check_stanley(c)
        elif w == "ubt":
            results[w] = cs_upper_bound_check(c)
        elif w == "ks":
            rep = kuehnel_sparla_for(c)
            results[w] = rep.status.value != "violated"
            results["ks_detail"] = rep.to_dict()
    lines = [f"{k}: {v}" for k, v in results.items()] + [f"seed: {args.seed}"]
    _emit(args, {"checks": results, "seed": args.seed}, "\n".join(lines))
    if any(v is False for k, v in results.items() if k in CHECKS):
        return EXIT_FALSE
    return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


def cmd_fvector(args) -> int:
    c = read_complex(args.file)
    f = list(c.f_vector())
    payload = {"f_vector": f, "euler_characteristic": c.euler_characteristic()}
    if c.n % 2 == 0 and is_centrally_symmetric(c):
        payload["central_neighborliness"] = central_neighborliness_degree(c)
    _emit(args, payload, " ".join(map(str, f)))
    return EXIT_OK


def cmd_homology(args) -> int:
    h = homology(read_complex(args.file))
    text = "\n".join(
        f"H_{i}: Z^{b}" + "".join(f" + Z/{t}" for t in tors) for i, (b, tors) in enumerate(zip(h.betti, h.torsion))
    )
    _emit(args, h.to_dict(), text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = SearchConfig(
        d=args.d, n=args.n, group=args.group, flip_budget=args.budget, seed=args.seed, time_budget=args.time_budget
    )
    res = enumerate_nn_cs_spheres(cfg)
    catalog = classify(res)
    expected = KNOWN_CYCLIC_COUNTS.get((args.d, args.n)) if args.group == "cyclic" else None
    payload = res.to_dict()
    payload["labels"] = [e.label for e in catalog]
    payload["expected"] = expected
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for e in catalog:
            print(e.presentation_text(), end="")
        print(f"# count={res.count} exhausted={res.exhausted} seed={cfg.seed}"
              + (f" expected={expected}" if expected is not None else ""))
    if not res.exhausted or res.uncertified:
        return EXIT_INCONCLUSIVE
    if expected is not None and res.count != expected:
        return EXIT_FALSE
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = read_complex(args.a), read_complex(args.b)
    perm = are_isomorphic(a, b)
    payload = {"isomorphic": perm is not None, "permutation": list(perm.images) if perm else None}
    _emit(args, payload, f"isomorphic: {list(perm.images)}" if perm else "not isomorphic")
    return EXIT_OK if perm is not None else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cssphere", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="structured output on stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a known complex")
    c.add_argument("family", choices=["crosspolytope", "cs4m", "torus", "jockusch", "ms-sphere", "stacked"])
    c.add_argument("--k", type=int, default=4)
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--d", type=int, default=4)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--orbits", action="store_true", help="orbit presentation instead of facets (cs4m)")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check properties of a complex")
    v.add_argument("file")
    v.add_argument("--check", default=",".join(CHECKS[:4]))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fvector", help="print the f-vector")
    f.add_argument("file")
    f.set_defaults(func=cmd_fvector)

    h = sub.add_parser("homology", help="integral homology")
    h.add_argument("file")
    h.set_defaults(func=cmd_homology)

    e = sub.add_parser("enumerate", help="symmetric nearly neighborly sphere search")
    e.add_argument("-d", type=int, required=True, help="sphere dimension")
    e.add_argument("-n", type=int, required=True, help="number of vertices")
    e.add_argument("--group", choices=["cyclic", "dihedral"], default="cyclic")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="bistellar moves per certificate")
    e.add_argument("--time-budget", type=float, default=None, help="seconds")
    e.set_defaults(func=cmd_enumerate)

    i = sub.add_parser("iso", help="test two complexes for isomorphism")
    i.add_argument("a")
    i.add_argument("b")
    i.set_defaults(func=cmd_iso)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
