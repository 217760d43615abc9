"""Command-line interface: reproducible experiments over point-set files.

Exit codes are a stable scripting contract: 0 found / claim verified, 1 not
found (or hunt budget exhausted), 2 usage error, 3 input validation error.
Search-style commands print a machine-readable JSON report on stdout and a
one-line human summary on stderr; ``CPL_THREADS`` is accepted as an upper
bound on parallelism (the current implementation runs one worker).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .bounds import (
    bdv_nprime,
    best_known_nonexist_k,
    f_threshold,
    g_bounds,
    koshelev_nonexist_k,
    modq_upper,
    render_table,
    sendov_k,
    survival_k,
)
from .generators import (
    PointFormatError,
    horton,
    parse_pointset,
    random_general_position,
    serialize_pointset,
    shear_to_distinct_x,
)
from .geometry import (
    ColoredPointSet,
    GeometryError,
    PointSet,
    convex_hull,
    validate_general_position,
)
from .hunt import HuntQuery, randomized_witness_search
from .search import (
    AtMost,
    ChainKind,
    ChainWitness,
    SearchError,
    SearchStats,
    ZeroMod,
    find_chain,
    find_empty_mono_quad,
    find_ngon,
    longest_chain,
    max_convex_subset,
)

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_INVALID = 3

RNG_NAME = "python-random-mt19937"


def _threads() -> int:
    raw = os.environ.get("CPL_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CPL_THREADS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("CPL_THREADS must be >= 1")
    return min(cap, 1)


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _witness_json(w, points) -> dict:
    out = {
        "vertex_indices": list(w.vertex_indices),
        "vertices": [[points[i].x, points[i].y] for i in w.vertex_indices],
        "interior_count": w.interior_count,
    }
    if isinstance(w, ChainWitness):
        out["kind"] = w.kind.value
    else:
        out["kind"] = "polygon"
    return out


def _emit_report(report: dict, summary: str, report_path: str | None) -> None:
    doc = json.dumps(report, sort_keys=True, indent=2)
    print(doc)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    print(summary, file=sys.stderr)


def _read_input(path: str):
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_pointset(data.decode("utf-8")), _digest(data)


def cmd_generate(args) -> int:
    if args.kind == "horton":
        s = horton(args.level)
        default_name = f"horton-{args.level}.pts"
        params = f"horton level={args.level}"
    else:
        s = random_general_position(args.n, args.seed, args.range)
        default_name = f"random-{args.n}-seed{args.seed}.pts"
        params = f"random n={args.n} seed={args.seed} range={args.range} rng={RNG_NAME}"
    out = args.out or default_name
    text = serialize_pointset(s)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)
    hull = convex_hull(s).vertex_indices if len(s) >= 3 else ()
    print(f"wrote {out}: {len(s)} points ({params}), hull size {len(hull)}, "
          f"digest {_digest(text.encode('utf-8'))}")
    return EXIT_FOUND


def cmd_check(args) -> int:
    s, digest = _read_input(args.input)
    base = s.base if isinstance(s, ColoredPointSet) else s
    check = validate_general_position(base)
    if check.ok:
        kind = "colored set" if isinstance(s, ColoredPointSet) else "set"
        print(f"ok: {kind} of {len(base)} points in general position ({digest})")
        return EXIT_FOUND
    if check.duplicate_pair is not None:
        print(f"invalid: duplicate points at indices {check.duplicate_pair}")
    else:
        print(f"invalid: collinear triple at indices {check.collinear_triple}")
    return EXIT_INVALID


def _search_outcome(args, s: PointSet | ColoredPointSet, stats: SearchStats):
    """Run the requested query; returns (query string, witness-or-None, color)."""
    base = s.base if isinstance(s, ColoredPointSet) else s
    q = args.query
    if q == "ngon":
        if args.mod is not None:
            constraint = ZeroMod(args.mod, zero_allowed=not args.nonempty)
            desc = f"ngon n={args.n} interior=0 mod {args.mod}" + (
                " (nonempty)" if args.nonempty else "")
        elif args.max_interior is not None:
            constraint = AtMost(args.max_interior)
            desc = f"ngon n={args.n} interior<={args.max_interior}"
        else:
            constraint = AtMost(len(base))
            desc = f"ngon n={args.n} (any interior)"
        return desc, find_ngon(base, args.n, constraint, stats=stats), None
    if q in ("cup", "cap"):
        kind = ChainKind.CUP if q == "cup" else ChainKind.CAP
        if args.shear:
            base = shear_to_distinct_x(base)
        if args.max_interior is not None:
            desc = f"{q} l={args.l} interior<={args.max_interior}"
            return desc, find_chain(base, kind, args.l, args.max_interior, stats=stats), None
        length, witness = longest_chain(base, kind, stats=stats)
        desc = f"{q} l={args.l} (any interior)"
        return desc, (witness if length >= args.l else None), None
    if q == "max-convex":
        size, witness = max_convex_subset(base, stats=stats)
        return f"max-convex (size {size})", witness, None
    if q == "mono-quad":
        if not isinstance(s, ColoredPointSet):
            raise GeometryError("mono-quad needs a colored input file (x y color lines)")
        desc = "mono-quad empty-over=" + ("same-color" if args.same_color_empty else "all")
        got = find_empty_mono_quad(s, count_all_colors=not args.same_color_empty,
                                   stats=stats)
        if got is None:
            return desc, None, None
        return desc, got[0], got[1]
    raise AssertionError(q)


def cmd_search(args) -> int:
    s, digest = _read_input(args.input)
    base = s.base if isinstance(s, ColoredPointSet) else s
    stats = SearchStats()
    started = time.perf_counter()
    desc, witness, color = _search_outcome(args, s, stats)
    elapsed = time.perf_counter() - started
    outcome = "found" if witness is not None else "not-found"
    report = {
        "command": ["search", args.input, *args.echo],
        "input_digest": digest,
        "query": desc,
        "outcome": outcome,
        "witness": _witness_json(witness, base.points) if witness is not None else None,
        "color": color,
        "statistics": {
            "points": len(base),
            "candidates": stats.candidates,
            "elapsed_s": round(elapsed, 6),
            "threads": _threads(),
        },
        "tool_version": __version__,
    }
    _emit_report(report, f"{desc}: {outcome}", args.report)
    return EXIT_FOUND if witness is not None else EXIT_NOT_FOUND


def cmd_bounds(args) -> int:
    q = args.bquery
    if q == "g":
        row = g_bounds(args.n)
        upper = row.upper_tv if row.upper_tv is not None else row.upper_es
        print(f"lower {row.lower}, upper {upper}")
        extra = f"classical upper {row.upper_es}"
        if row.upper_tv is not None:
            extra += f", sharpened upper {row.upper_tv}"
        print(extra)
    elif q == "f":
        print(f_threshold(args.l, args.m))
    elif q == "table":
        sys.stdout.write(render_table(args.id, fmt="tsv" if args.tsv else "text"))
    elif q == "nonexist":
        print(f"schedule A (power-of-two): {sendov_k(args.n)}")
        print(f"schedule B (central binomial): {koshelev_nonexist_k(args.n)}")
        print(f"best known: {best_known_nonexist_k(args.n)}")
    elif q == "survival":
        print(survival_k(args.n))
    elif q == "modq":
        value = modq_upper(args.n, args.q)
        nprime = bdv_nprime(args.n, args.q)
        if value is not None:
            big_n = args.q * (args.n - 4) + 4
            print(f"h({args.n}, mod {args.q}) <= g({big_n}) <= {value}")
        else:
            print(f"h({args.n}, mod {args.q}): the g(q(n-4)+4) bound needs "
                  f"n >= 2q-1 = {2 * args.q - 1}; inapplicable")
        reps = ", ".join([f"n'={nprime}"] * args.q)
        print(f"symbolic (not evaluated; Ramsey numbers unknown): "
              f"h({args.n}, mod {args.q}) <= g(R_3({reps}))")
    return EXIT_FOUND


def cmd_hunt(args) -> int:
    try:
        if args.forbid.startswith("empty-ngon"):
            n_gon = int(args.forbid[len("empty-ngon"):])
            query = HuntQuery(n_gon, AtMost(0))
        elif args.forbid.startswith("ngon"):
            n_gon = int(args.forbid[len("ngon"):])
            query = HuntQuery(n_gon, None)
        else:
            raise ValueError
    except ValueError:
        raise ValueError(
            f"--forbid must look like ngon5 or empty-ngon5, got {args.forbid!r}") from None
    started = time.perf_counter()
    result = randomized_witness_search(args.n, query, budget=args.budget,
                                       seed=args.seed, coord_range=args.range)
    elapsed = time.perf_counter() - started
    witness_file = None
    verified = False
    if result.outcome == "found":
        text = serialize_pointset(result.point_set)
        witness_file = args.out or f"hunt-{args.n}-{args.forbid}-seed{args.seed}.pts"
        with open(witness_file, "w", encoding="utf-8") as fh:
            fh.write(text)
        # exhaustive re-verification stamp
        if query.ngon > len(result.point_set):
            verified = True  # too few points to contain the structure
        else:
            constraint = query.constraint if query.constraint is not None \
                else AtMost(len(result.point_set))
            verified = find_ngon(result.point_set, query.ngon, constraint) is None
    report = {
        "command": ["hunt", str(args.n), "--forbid", args.forbid,
                    "--budget", str(args.budget), "--seed", str(args.seed)],
        "forbidden": query.describe(),
        "outcome": result.outcome,
        "witness_file": witness_file,
        "exhaustively_verified": verified,
        "statistics": {
            "iterations": result.iterations,
            "best_violations": result.best_violations,
            "seed": result.seed,
            "rng": RNG_NAME,
            "elapsed_s": round(elapsed, 6),
            "threads": _threads(),
        },
        "tool_version": __version__,
    }
    summary = f"hunt n={args.n} forbid={args.forbid}: {result.outcome}"
    if witness_file:
        summary += f" -> {witness_file} (verified={verified})"
    _emit_report(report, summary, args.report)
    if result.outcome == "found" and not verified:
        return EXIT_INVALID
    return EXIT_FOUND if result.outcome == "found" else EXIT_NOT_FOUND


def cmd_render(args) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "cpl"
    s, _digest_unused = _read_input(args.input)
    if isinstance(s, ColoredPointSet):
        pts, colors = s.base.points, s.colors
    else:
        pts, colors = s.points, None
    fig, ax = plt.subplots(figsize=(6, 6))
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    if colors is None:
        ax.scatter(xs, ys, s=36, color="#1f3a93", zorder=3)
    else:
        palette = ["#1f3a93", "#c0392b", "#1e8449", "#7d3c98", "#b7950b"]
        point_colors = [palette[c % len(palette)] for c in colors]
        ax.scatter(xs, ys, s=36, color=point_colors, zorder=3)
    if args.witness:
        with open(args.witness, "r", encoding="utf-8") as fh:
            report = json.load(fh)
        w = report.get("witness")
        if w:
            poly = w["vertices"] + w["vertices"][:1]
            ax.plot([v[0] for v in poly], [v[1] for v in poly],
                    color="#e67e22", linewidth=2, zorder=2)
            ax.fill([v[0] for v in poly], [v[1] for v in poly],
                    color="#e67e22", alpha=0.15, zorder=1)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    for side in ax.spines.values():
        side.set_visible(False)
    metadata = {"Date": None} if args.out.endswith(".svg") else None
    fig.savefig(args.out, metadata=metadata)
    plt.close(fig)
    print(f"wrote {args.out}")
    return EXIT_FOUND


def cmd_verify_claims(args) -> int:
    from .claims import run_all

    results = run_all(quick=args.quick)
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name}  [{r.elapsed_s:.1f}s]  {r.detail}")
        if not r.ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} claims verified")
    return EXIT_FOUND if failed == 0 else EXIT_NOT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpl",
        description="Exact searches, certified generators and closed-form "
                    "bounds for convex-position problems on planar point sets.")
    parser.add_argument("--version", action="version", version=f"cpl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a point-set file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    gh = gsub.add_parser("horton")
    gh.add_argument("level", type=int)
    gh.add_argument("out", nargs="?", default=None)
    gr = gsub.add_parser("random")
    gr.add_argument("n", type=int)
    gr.add_argument("out", nargs="?", default=None)
    gr.add_argument("--seed", type=int, default=0)
    gr.add_argument("--range", type=int, default=1_000_000)

    chk = sub.add_parser("check", help="validate a point-set file")
    chk.add_argument("input")

    srch = sub.add_parser("search", help="run an exhaustive query on a file")
    srch.add_argument("input")
    srch.add_argument("--report", default=None, help="also write the JSON report here")
    ssub = srch.add_subparsers(dest="query", required=True)
    sn = ssub.add_parser("ngon")
    sn.add_argument("n", type=int)
    group = sn.add_mutually_exclusive_group()
    group.add_argument("--max-interior", type=int, default=None)
    group.add_argument("--mod", type=int, default=None)
    sn.add_argument("--nonempty", action="store_true",
                    help="with --mod: require a nonempty interior")
    for name in ("cup", "cap"):
        sc = ssub.add_parser(name)
        sc.add_argument("l", type=int)
        sc.add_argument("--max-interior", type=int, default=None)
        sc.add_argument("--shear", action="store_true",
                        help="shear input to distinct x first")
    ssub.add_parser("max-convex")
    sm = ssub.add_parser("mono-quad")
    sm.add_argument("--same-color-empty", action="store_true",
                    help="emptiness with respect to same-colored points only")

    bnd = sub.add_parser("bounds", help="evaluate closed-form bounds")
    bsub = bnd.add_subparsers(dest="bquery", required=True)
    bg = bsub.add_parser("g")
    bg.add_argument("n", type=int)
    bf = bsub.add_parser("f")
    bf.add_argument("l", type=int)
    bf.add_argument("m", type=int)
    bt = bsub.add_parser("table")
    bt.add_argument("id", type=int, choices=(1, 2, 4))
    bt.add_argument("--tsv", action="store_true")
    bn = bsub.add_parser("nonexist")
    bn.add_argument("n", type=int)
    bs = bsub.add_parser("survival")
    bs.add_argument("n", type=int)
    bm = bsub.add_parser("modq")
    bm.add_argument("n", type=int)
    bm.add_argument("q", type=int)

    hnt = sub.add_parser("hunt", help="randomized search for a forbidden-structure-free set")
    hnt.add_argument("n", type=int)
    hnt.add_argument("--forbid", required=True, help="ngonK or empty-ngonK")
    hnt.add_argument("--budget", type=int, default=20_000)
    hnt.add_argument("--seed", type=int, default=0)
    hnt.add_argument("--range", type=int, default=512)
    hnt.add_argument("--out", default=None)
    hnt.add_argument("--report", default=None)

    rnd = sub.add_parser("render", help="render a point-set file to a static figure")
    rnd.add_argument("input")
    rnd.add_argument("out")
    rnd.add_argument("--witness", default=None,
                     help="JSON report whose witness polygon to highlight")

    vc = sub.add_parser("verify-claims", help="run the full verification suite")
    vc.add_argument("--quick", action="store_true", help="reduced trial counts")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "search":
        args.echo = argv[argv.index(args.input) + 1:]
    handlers = {
        "generate": cmd_generate,
        "check": cmd_check,
        "search": cmd_search,
        "bounds": cmd_bounds,
        "hunt": cmd_hunt,
        "render": cmd_render,
        "verify-claims": cmd_verify_claims,
    }
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (PointFormatError, GeometryError, SearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
