"""Command line interface.

    rsdict verify  --structures all --n 4096 --density 0.01,0.25 --seed 1
    rsdict measure --structures esp,sarray --n 1048576 --density 0.01 \
                   --seed 1 --ops 20000 --csv out.csv
    rsdict dump    --structures plain --n 65536 --density 0.05 --seed 1 --out .

Structure parameters are overridden with repeated --param flags, either bare
(applied to every structure that accepts the name) or scoped, for example
--param esp.slack=0 or --param vcode.offset_mode=sampled.  RSDICT_THREADS
caps verify parallelism; --backend selects the kernel implementation.
"""
from __future__ import annotations

import argparse
import inspect
import sys
from pathlib import Path

from rsdict import api, bench
from rsdict._backend import BACKEND, available_backends


def _parse_value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def _collect_params(pairs, structures):
    from rsdict.api import _registry

    registry = _registry()
    out = {st: {} for st in structures}
    for pair in pairs or []:
        if "=" not in pair:
            raise SystemExit(f"--param expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        value = _parse_value(value)
        if "." in key:
            st, name = key.split(".", 1)
            if st not in out:
                raise SystemExit(f"--param names unknown structure {st!r}")
            out[st][name] = value
        else:
            hit = False
            for st in structures:
                sig = inspect.signature(registry[st].__init__)
                if key in sig.parameters:
                    out[st][key] = value
                    hit = True
            if not hit:
                raise SystemExit(f"--param {key!r} matches no structure parameter")
    return out


def _common(sub):
    sub.add_argument("--structures", default="all",
                     help="comma list or 'all' (default)")
    sub.add_argument("--n", type=int, default=1 << 20, help="vector length in bits")
    sub.add_argument("--density", default="0.01",
                     help="comma list of ones densities")
    sub.add_argument("--seed", type=int, default=1)
    sub.add_argument("--ops", type=int, default=20_000,
                     help="random queries per kind at large n")
    sub.add_argument("--csv", default=None, help="write CSV here instead of stdout")
    sub.add_argument("--param", action="append", default=[],
                     help="structure parameter override, key=value")
    sub.add_argument("--backend", default=None,
                     choices=["auto", "pure", "compiled", "both"],
                     help=f"kernel backend (default {BACKEND})")
    sub.add_argument("--exact-m", action="store_true",
                     help="draw exactly round(density*n) ones instead of Bernoulli")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rsdict",
        description="entropy-compressed rank/select dictionaries")
    subs = parser.add_subparsers(dest="command", required=True)
    for name in ("verify", "measure", "dump"):
        sub = subs.add_parser(name)
        _common(sub)
        if name == "measure":
            sub.add_argument("--reps", type=int, default=5)
        if name == "dump":
            sub.add_argument("--out", default=".", help="output directory")
    args = parser.parse_args(argv)

    structures = (list(api.KINDS) if args.structures == "all"
                  else args.structures.split(","))
    for st in structures:
        if st not in api.KINDS:
            raise SystemExit(f"unknown structure {st!r}; choose from {api.KINDS}")
    densities = [float(d) for d in str(args.density).split(",")]
    params = _collect_params(args.param, structures)
    backends = ([args.backend] if args.backend not in ("both", None)
                else (available_backends() if args.backend == "both" else [None]))

    if args.command == "verify":
        failures = 0
        for backend in backends:
            report = bench.verify(structures, args.n, densities, args.seed,
                                  ops=args.ops, params=params, backend=backend,
                                  exact_m=args.exact_m)
            for case in report.cases:
                if not case.ok:
                    failures += 1
                    print(f"FAIL {case.structure} n={case.n} density={case.density} "
                          f"seed={case.seed} op={case.op}: {case.detail}")
            tag = backend or BACKEND
            verdict = "PASS" if report.ok else "FAIL"
            print(f"{verdict} backend={tag}: {len(report.cases)} cases, "
                  f"{sum(c.queries for c in report.cases)} queries")
        return 1 if failures else 0

    if args.command == "measure":
        rows = []
        for backend in backends:
            got = bench.measure(structures, args.n, densities, args.seed,
                                ops=args.ops, reps=args.reps, params=params,
                                backend=backend, exact_m=args.exact_m)
            if len(backends) > 1:
                for row in got:
                    row["structure"] = f"{row['structure']}@{backend}"
            rows.extend(got)
        text = bench.rows_to_csv(rows)
        if args.csv:
            Path(args.csv).write_text(text)
            print(f"wrote {len(rows)} rows to {args.csv}")
        else:
            sys.stdout.write(text)
        return 0

    if args.command == "dump":
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for density in densities:
            vec = bench.generate(args.n, density, args.seed, exact_m=args.exact_m)
            positions = vec.positions()
            for st in structures:
                d = api.build(st, positions, args.n,
                              backend=None if args.backend in (None, "both") else args.backend,
                              **params.get(st, {}))
                blob = d.serialize()
                path = outdir / f"{st}_n{args.n}_d{density}_s{args.seed}.rsd"
                path.write_bytes(blob)
                rep = api.size_report(d)
                nh0 = f"{rep.pct_of_nh0:.2f}" if rep.pct_of_nh0 is not None else "-"
                print(f"{path} {len(blob)} bytes total_bits={rep.total_bits} "
                      f"pct_of_n={rep.pct_of_n:.2f} pct_of_nH0={nh0}")
        return 0
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
