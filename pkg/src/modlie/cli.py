"""Command-line entry point.

Subcommands:
  construct   build an exceptional, Cartan-type or exotic algebra and print
              its dimension, centre and grading shape (optional JSON dump)
  orbit       check one catalog orbit against its expected centralizer
              dimension, optionally with the full normalizer-tower analysis
  verify      run registered verification tasks (--all for every task)
  filtration  build the Weisfeiler filtration for an analyzable orbit and
              print the graded shape report

Exit codes: 0 pass, 1 verification mismatch, 2 usage or input error.
MODLIE_SEED sets the default randomness seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import analysis, cartan, chevalley, fp, meataxe, orbits, roots, subalgebra, tasks, weisfeiler


def _parse_n(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def cmd_construct(args) -> int:
    if args.type:
        rs = roots.build(args.type if args.rank is None else f"{args.type}{args.rank}")
        g = chevalley.chevalley_algebra(rs, args.p)
        name = rs.name
    elif args.family:
        fam = args.family
        if fam.lower() in ("er", "melikyan", "m", "skr1", "skr2", "skr3"):
            g = cartan.exotic_algebra(fam, _parse_n(args.n or "1,1"), args.p,
                                      derived=args.derived)
        elif fam.lower() == "scripth":
            g = cartan.hamiltonian_special_subalgebra(args.m or 6)
        else:
            n = _parse_n(args.n or "1")
            g = cartan.cartan_algebra(fam, args.m or 1, n, args.p, derived=args.derived)
        name = fam
    else:
        print("construct: need --type or --family", file=sys.stderr)
        return 2
    print(f"{name}: dim {g.dim}, centre {g.center().dim}")
    if g.grading is not None:
        print("grading:", " ".join(f"{k}:{v}" for k, v in g.graded_dims().items()))
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(g.dump())
        print(f"dumped to {args.dump}")
    return 0


def cmd_orbit(args) -> int:
    rec = orbits.lookup(args.group, args.orbit)
    g = tasks.algebra(args.group, args.p)
    expected = orbits.expected_centralizer_dim(rec, args.p)
    e = orbits.representative(g, rec)
    got = g.dim - fp.rank(g.ad(e), g.p)
    status = "ok" if got == expected else "MISMATCH"
    print(f"{args.group} {rec.label} p={args.p}: dim g_e = {got} "
          f"(table {expected}) {status}")
    if got != expected:
        return 1
    if args.analyze:
        tw = analysis.normalizer_tower(g, e)
        ab = subalgebra.is_abelian(tw.radical)
        print(f"n_e {tw.normalizer.dim}, radical {tw.radical.dim} "
              f"({'abelian' if ab else 'non-abelian'}), N_g(A) {tw.radical_normalizer.dim}")
        q, _ = subalgebra.quotient(tw.radical_normalizer, tw.radical)
        print(f"N_g(A)/A dim {q.dim}")
        if args.ideal_degree is not None and rec.diagram is not None:
            grad = orbits.cocharacter_grading(g, rec)
            I = analysis.bracket_ideal(g, tw.radical_normalizer, tw, grad, args.ideal_degree)
            print(f"bracket ideal I dim {I.dim}")
            try:
                J = analysis.witt_factor_ideal(g, tw.radical_normalizer, I,
                                               seed=args.seed if args.seed is not None else 0)
                print(f"Witt-factor ideal J dim {J.dim}")
            except (ValueError, RuntimeError):
                pass
    return 0


def _run_one(task_seed):
    task_id, seed = task_seed
    return tasks.run_task(task_id, seed)


def cmd_verify(args) -> int:
    ids = sorted(tasks.TASKS) if args.all else [args.task]
    if not args.all and args.task not in tasks.TASKS:
        print(f"unknown task {args.task!r}; known: {', '.join(sorted(tasks.TASKS))}",
              file=sys.stderr)
        return 2
    seed = args.seed if args.seed is not None else tasks.env_seed()
    results = []
    if args.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, [(t, seed) for t in ids]))
    else:
        for t in ids:
            results.append(tasks.run_task(t, seed))
    all_ok = True
    reports = []
    for res in results:
        ok = res.passed
        all_ok &= ok
        print(f"[{'PASS' if ok else 'FAIL'}] {res.task} "
              f"({sum(c.passed for c in res.checks)}/{len(res.checks)} checks)")
        for c in res.checks:
            if not c.passed or args.verbose:
                mark = "ok" if c.passed else "FAIL"
                print(f"    {mark}: {c.name}: expected {c.expected}, got {c.got} "
                      f"[{c.anchor}]")
        reports.append(json.loads(res.to_json()))
    if args.json:
        payload = reports[0] if len(reports) == 1 else {"schema": 1, "tasks": reports}
        with open(args.json, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
    return 0 if all_ok else 1


def cmd_filtration(args) -> int:
    rec = orbits.lookup(args.group, args.orbit)
    g = tasks.algebra(args.group, args.p)
    tw = analysis.normalizer_tower(g, orbits.representative(g, rec))
    M = tw.radical_normalizer
    L1 = subalgebra.step_space(g, tw.radical, M)
    mod = meataxe.action_module(M, ("quotient-space", L1, M.space))
    if not meataxe.is_irreducible(mod, seed=args.seed):
        if rec.diagram is None:
            print("filtration: no irreducible step quotient found", file=sys.stderr)
            return 1
        grad = orbits.cocharacter_grading(g, rec)
        found = False
        for k0 in (2, 4):
            try:
                I = analysis.bracket_ideal(g, M, tw, grad, k0)
            except ValueError:
                continue
            rel = subalgebra.step_space(g, tw.radical, I).sum(M.space)
            if rel.dim <= M.dim or rel.dim >= L1.dim:
                continue
            mod = meataxe.action_module(M, ("quotient-space", rel, M.space))
            if meataxe.is_irreducible(mod, seed=args.seed):
                L1 = rel
                found = True
                break
        if not found:
            print("filtration: no irreducible step module by any implemented route",
                  file=sys.stderr)
            return 1
    f = weisfeiler.build_filtration(g, M, L1, check_irreducible=False)
    print("filtration dims:", json.dumps({str(k): v for k, v in f.dims().items()}))
    ga = weisfeiler.graded_algebra(f)
    report = weisfeiler.shape_report(ga, seed=args.seed)
    print(weisfeiler.report_json(report))
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="modlie",
                                 description="workbench for modular Lie algebras over GF(p)")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an algebra and print its shape")
    c.add_argument("--type", help="exceptional type, e.g. E8 or G2")
    c.add_argument("--rank", type=int)
    c.add_argument("--family", help="W|S|H|K|CS|CH|Er|M|Skr1|Skr2|Skr3|scriptH")
    c.add_argument("--m", type=int)
    c.add_argument("--n", help="truncation vector, e.g. 1,1")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--derived", type=int, default=None)
    c.add_argument("--dump")
    c.set_defaults(fn=cmd_construct)

    o = sub.add_parser("orbit", help="check an orbit against the catalog")
    o.add_argument("--group", required=True)
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--orbit", required=True)
    o.add_argument("--analyze", action="store_true")
    o.add_argument("--ideal-degree", type=int, default=None)
    o.add_argument("--seed", type=int, default=None)
    o.set_defaults(fn=cmd_orbit)

    v = sub.add_parser("verify", help="run verification tasks")
    v.add_argument("--task")
    v.add_argument("--all", action="store_true")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--json", help="write the JSON report here")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(fn=cmd_verify)

    f = sub.add_parser("filtration", help="build a Weisfeiler filtration")
    f.add_argument("--group", required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--orbit", required=True)
    f.add_argument("--seed", type=int, default=0)
    f.set_defaults(fn=cmd_filtration)

    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
