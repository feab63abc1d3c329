"""``probedf`` command line: recognize, verify, gen, oracle, bench.

Exit codes: 0 member / valid, 1 non-member / invalid, 2 input or schema error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .aux_bipartite import build_aux
from .bench import run_bench
from .generators import KINDS, generate
from .graph import GraphFormatError, format_graph, parse_graph
from .lucs import RoleState, assign_roles
from .oracle import oracle_completion, oracle_forbidden
from .recognizer import Positive, certificate_from_json, recognize, verify

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, fmt: str):
    return parse_graph(_read(path), fmt)


def _thread_limit() -> int:
    raw = os.environ.get("PROBEDF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _describe(cert) -> str:
    if isinstance(cert, Positive):
        pairs = " ".join(f"{u}-{v}" for u, v in cert.F)
        return (
            "member: yes\n"
            f"probes: {' '.join(map(str, cert.P))}\n"
            f"nonprobes: {' '.join(map(str, cert.N))}\n"
            f"completion: {pairs}"
        )
    return f"member: no\nobstruction: {cert.name} (indicator {cert.indicator})\nvertices: {' '.join(map(str, cert.Q))}"


def _recognize_one(job: tuple[str, str]) -> tuple[int, str, str]:
    """Returns ``(exit code, text, json)`` so results survive a process pool."""
    path, fmt = job
    try:
        g = _load(path, fmt)
    except (OSError, GraphFormatError) as exc:
        return EXIT_ERROR, f"{path}: {exc}", json.dumps({"file": path, "error": str(exc)})
    cert = recognize(g)
    code = EXIT_YES if cert.member else EXIT_NO
    return code, _describe(cert), json.dumps(cert.to_json())


def cmd_recognize(args) -> int:
    jobs = [(path, args.format) for path in args.files]
    workers = min(_thread_limit(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_recognize_one, jobs))
    else:
        results = [_recognize_one(job) for job in jobs]
    for (path, _), (code, text, js) in zip(jobs, results):
        if code == EXIT_ERROR:
            print(text, file=sys.stderr)
            if args.json:
                print(js)
            continue
        if args.json:
            print(js)
        else:
            if len(jobs) > 1:
                print(f"== {path}")
            print(text)
    if args.dump_aux:
        _dump_aux(args.files[0], args.format, args.dump_aux)
    codes = {code for code, _, _ in results}
    return EXIT_ERROR if EXIT_ERROR in codes else max(codes)


def _dump_aux(path: str, fmt: str, out: str) -> None:
    try:
        g = _load(path, fmt)
    except (OSError, GraphFormatError):
        return
    st = assign_roles(g)
    if not isinstance(st, RoleState) or st.conflict is not None:
        print("auxiliary graph not built: input is not conflict-free LUCS", file=sys.stderr)
        return
    b = build_aux(g, st)
    lines = [f"# representatives {b.n}..{b.n + b.rep_count - 1} with clique pairs"]
    lines += [f"# {a} = {i} {j}" for a, (i, j) in enumerate(b.rep, b.n)]
    lines.append(f"{b.n + b.rep_count} {b.edge_count()}")
    lines += [f"{a} {s}" for a, s in b.edges()]
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_gen(args) -> int:
    try:
        g = generate(args.kind, args.n, args.seed, p=args.p, indicator=args.indicator)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(format_graph(g, args.format))
    return EXIT_YES


def cmd_verify(args) -> int:
    try:
        g = _load(args.graph, args.format)
        cert = certificate_from_json(json.loads(_read(args.cert)))
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_ERROR
    ok = verify(g, cert)
    print("valid" if ok else "invalid")
    return EXIT_YES if ok else EXIT_NO


def cmd_oracle(args) -> int:
    try:
        g = _load(args.file, args.format)
    except (OSError, GraphFormatError) as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_ERROR
    verdicts = []
    try:
        if args.basis in ("forbidden", "both"):
            verdicts.append(oracle_forbidden(g))
        if args.basis in ("completion", "both"):
            verdicts.append(oracle_completion(g, max_n=args.max_n))
    except ValueError as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for v in verdicts:
        out = {"basis": v.basis, "member": v.member}
        if v.obstruction is not None:
            out["indicator"], out["vertices"] = v.obstruction[0], list(v.obstruction[1])
        if v.partition is not None:
            out["nonprobes"] = list(v.partition[0])
            out["completion"] = [list(e) for e in v.partition[1]]
        print(json.dumps(out) if args.json else " ".join(f"{k}={val}" for k, val in out.items()))
    members = {v.member for v in verdicts}
    if len(members) > 1:
        print("oracle: bases disagree", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_YES if members == {True} else EXIT_NO


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        report = run_bench(sizes, args.density, args.seed, args.repeats, args.kind, args.instances)
    except ValueError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps(report.to_json()))
        return EXIT_YES
    print(f"{'n':>8} {'m':>9} {'seconds':>10} {'ops':>11} {'ops/nm':>9}")
    for r in report.rows:
        print(f"{r.n:>8} {r.m:>9} {r.seconds:>10.4f} {r.ops:>11} {r.ops / max(r.n * r.m, 1):>9.4f}")
    exp = report.exponent
    print("exponent (time vs n*m): " + ("undefined" if exp is None else f"{exp:.3f}"))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="probedf", description="Probe diamond-free graph recognition with certificates.")
    sub = ap.add_subparsers(dest="command", required=True)
    formats = ("edgelist", "dimacs")

    p = sub.add_parser("recognize", help="decide membership and print a certificate")
    p.add_argument("files", nargs="+", help="graph files, '-' for stdin")
    p.add_argument("--format", choices=formats, default="edgelist")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dump-aux", metavar="PATH", help="write the auxiliary bipartite graph of the first file")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", aliases=["generate"], help="print a seeded random graph")
    p.add_argument("--kind", choices=KINDS, default="gnp")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability for gnp")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--indicator", type=int, help="template for planted-no (default: random)")
    p.add_argument("--format", choices=formats, default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--format", choices=formats, default="edgelist")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force membership (small graphs)")
    p.add_argument("file")
    p.add_argument("--basis", choices=("forbidden", "completion", "both"), default="both")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=formats, default="edgelist")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time recognition across sizes")
    p.add_argument("--sizes", default="500,1000,2000,4000,8000", help="comma-separated, ascending")
    p.add_argument("--density", type=float, default=10.0, help="target edges per vertex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--kind", choices=("gnp", "planted-yes"), default="gnp")
    p.add_argument("--instances", type=int, default=1, help="seeded graphs per size")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
