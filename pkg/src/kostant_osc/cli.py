"""Command line front end.

    kostant-osc char --type c --d 2 --lambda 1
    kostant-osc homology --side super --type c --m 1 --n 1 --d 2 --lambda - --k 1 --json
    kostant-osc weyl --type a --kmax 1
    kostant-osc casimir --side super --type d --d 2 --m 1 --n 1 --lambda 1
    kostant-osc verify --suite duality --type c --d 2 --degree 5
    kostant-osc batch jobs.jsonl

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import verify as V
from .howe import DualPair, homology_character, module_character
from .partitions import format_partition
from .weights import casimir_classical, casimir_constant, theta
from .weyl import coset_reps, dot

THREADS_ENV = "KOSTANT_OSC_THREADS"
SUITES = ("duality", "euler", "omega", "omega-char", "casimir", "dot", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Outcome:
    code: int
    payload: dict
    text: list[str] = field(default_factory=list)


def _pair_flags(p: argparse.ArgumentParser, need_d: bool = True) -> None:
    p.add_argument("--side", choices=("classical", "super", "negative"), default="classical")
    p.add_argument("--type", dest="tag", choices=("a", "b", "c", "d", "b0"), required=True)
    p.add_argument("--d", type=int, required=need_d, default=None if need_d else 2)
    for name in ("p", "q", "m", "n"):
        p.add_argument(f"--{name}", type=int, default=0)
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kostant-osc", description="Characters and homology of Fock space modules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("char", help="module character truncated at a degree")
    _pair_flags(p)
    p.add_argument("--lambda", dest="label", required=True)
    p.add_argument("--degree", type=int, default=5)

    p = sub.add_parser("homology", help="k-th homology character with its contributors")
    _pair_flags(p)
    p.add_argument("--lambda", dest="label", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("weyl", help="minimal coset representatives with their shapes")
    _pair_flags(p, need_d=False)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--lambda", dest="label", default=None)

    p = sub.add_parser("casimir", help="Casimir eigenvalues and lemma checks")
    _pair_flags(p)
    p.add_argument("--lambda", dest="label", default="-")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="run a verification suite")
    _pair_flags(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--degree", type=int, default=5)
    p.add_argument("--lambda", dest="label", default=None)
    p.add_argument("--max-size", type=int, default=None, help="largest label size to sweep")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("batch", help="run JSON-lines jobs")
    p.add_argument("file")
    return parser


def _pair(args) -> DualPair:
    try:
        return DualPair(args.side, args.tag, args.d, args.p, args.q, args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _label(pair: DualPair, text: str):
    try:
        return pair.parse_label(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# commands ------------------------------------------------------------------------------

def cmd_char(args) -> Outcome:
    pair = _pair(args)
    lam = _label(pair, args.label)
    if not pair.admissible(lam) and not any(pair.admissible(mu) for mu in pair.members(lam)):
        raise UsageError(f"{args.label} does not occur for {pair.describe()}")
    ch = module_character(pair, lam, pair.module_ring(args.degree))
    payload = {"pair": pair.describe(), "label": list(lam), "members": [list(m) for m in pair.members(lam)],
               "prefactor": {v: str(e) for v, e in pair.prefactor().items()}, "character": ch.to_json()}
    return Outcome(0, payload, [ch.format()])


def cmd_homology(args) -> Outcome:
    pair = _pair(args)
    lam = _label(pair, args.label)
    if args.k < 0:
        raise UsageError("k must be non-negative")
    h = homology_character(pair, lam, args.k)
    text = [f"{c.element.text()}  {_shape_text(c.shapes)}  degree {c.degree}" for c in h.contributors]
    text.append(h.series.format())
    return Outcome(0, h.to_json(), text)


def _shape_text(sh) -> str:
    if isinstance(sh, tuple) and len(sh) == 2 and not isinstance(sh[0], int):
        return f"({format_partition(sh[0])} | {format_partition(sh[1])})"
    return format_partition(sh)


def cmd_weyl(args) -> Outcome:
    pair = _pair(args)
    lam = _label(pair, args.label) if args.label is not None else _label(pair, "-" if pair.group != "GL" else
                                                                        ",".join(["0"] * pair.d))
    base = pair.base_weight(lam)
    rows, text = [], []
    for k in range(args.kmax + 1):
        for w in coset_reps(pair.source_tag, k):
            sh = pair.shapes(dot(w, base))
            shape = {"plus": list(sh[0]), "minus": list(sh[1])} if pair.source_tag == "a" else list(sh)
            rows.append({"k": k, "w": w.text(), "length": w.length(), "shape": shape})
            text.append(f"{k}  {w.text():<24} {_shape_text(sh)}")
    return Outcome(0, {"tag": pair.source_tag, "d": pair.d, "label": list(lam), "elements": rows}, text)


def cmd_casimir(args) -> Outcome:
    pair = _pair(args)
    lam = _label(pair, args.label)
    base = pair.base_weight(lam)
    payload = {"pair": pair.describe(), "label": list(lam), "classical": str(casimir_classical(base))}
    text = [f"classical Casimir {payload['classical']}"]
    results = []
    if pair.side == "super":
        sw = theta(base, pair.p, pair.q, pair.m, pair.n)
        payload["super"] = str(pair.casimir(sw))
        payload["constant"] = str(casimir_constant(pair.tag, sw.level, pair.p, pair.q, pair.m, pair.n))
        text.append(f"super Casimir {payload['super']}  constant {payload['constant']}")
        results.append(V.verify_casimir_lemmas(pair.tag, pair.d, pair.p, pair.q, pair.m, pair.n,
                                               args.samples, args.seed))
    elif pair.side == "negative":
        img = pair.image(base)
        payload["negative"] = str(pair.casimir(img))
        text.append(f"negative level Casimir {payload['negative']}")
        results.append(V.verify_casimir_negative(pair.source_tag, pair.d, args.samples, args.seed))
    results.append(V.verify_dot_invariance(pair.source_tag, pair.d, lam))
    payload["checks"] = [r.to_json() for r in results]
    ok = all(r.ok for r in results)
    payload["ok"] = ok
    return Outcome(0 if ok else 1, payload, text + [r.line() for r in results])


def _suite_checks(args, pair: DualPair):
    D = args.degree
    single = [_label(pair, args.label)] if args.label is not None else None
    suites = ("duality", "euler", "omega", "omega-char", "casimir", "dot") if args.suite == "all" else (args.suite,)
    for suite in suites:
        if suite == "duality":
            yield lambda: V.verify_duality(pair, D)
        elif suite == "euler":
            for lam in single or pair.labels(min(args.max_size or 3, D)):
                yield lambda lam=lam: V.verify_euler_poincare(pair, lam, D)
        elif suite == "omega":
            if pair.side == "classical":
                continue
            for lam in single or pair.labels(args.max_size or 2):
                for k in range(args.kmax + 1):
                    yield lambda lam=lam, k=k: V.verify_omega_transport(pair, lam, k)
        elif suite == "omega-char":
            if pair.side != "negative":
                continue
            for lam in single or pair.labels(min(args.max_size or 3, D)):
                yield lambda lam=lam: V.verify_omega_characters(pair, lam, D)
        elif suite == "casimir":
            if pair.side == "super":
                yield lambda: V.verify_casimir_lemmas(pair.tag, pair.d, pair.p, pair.q, pair.m, pair.n,
                                                      args.samples, args.seed)
            elif pair.side == "negative":
                yield lambda: V.verify_casimir_negative(pair.source_tag, pair.d, args.samples, args.seed)
        elif suite == "dot":
            for lam in single or pair.labels(args.max_size or 2):
                for mu in pair.members(lam):
                    yield lambda mu=mu: V.verify_dot_invariance(pair.source_tag, pair.d, mu, args.kmax)


def cmd_verify(args) -> Outcome:
    pair = _pair(args)
    if args.degree < 0:
        raise UsageError("degree must be non-negative")
    results = [check() for check in _suite_checks(args, pair)]
    ok = all(r.ok for r in results)
    payload = {"pair": pair.describe(), "suite": args.suite, "ok": ok, "results": [r.to_json() for r in results]}
    text = [r.line() for r in results] + [f"{sum(r.ok for r in results)}/{len(results)} checks passed"]
    return Outcome(0 if ok else 1, payload, text)


COMMANDS = {"char": cmd_char, "homology": cmd_homology, "weyl": cmd_weyl,
            "casimir": cmd_casimir, "verify": cmd_verify}


# batch -------------------------------------------------------------------------------------------

def job_argv(job: dict) -> list[str]:
    """Turn a JSON job object into command line arguments."""
    if not isinstance(job, dict) or "command" not in job:
        raise UsageError("job must be an object with a 'command' field")
    argv = [str(job["command"])]
    for key, value in job.items():
        if key == "command":
            continue
        flag = "--" + ("lambda" if key in ("lambda", "label") else key.replace("_", "-"))
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        else:
            argv += [flag, str(value)]
    return argv


def _execute(argv: list[str]) -> Outcome:
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        raise UsageError("batch jobs cannot nest")
    return COMMANDS[args.command](args)


def _run_job(numbered: tuple[int, str]) -> dict:
    i, line = numbered
    try:
        argv = job_argv(json.loads(line))
        out = _execute(argv)
        return {"line": i, "ok": out.code == 0, "exit": out.code, "result": out.payload}
    except (UsageError, json.JSONDecodeError) as exc:
        return {"line": i, "ok": False, "exit": 2, "error": str(exc)}


def threads() -> int:
    value = os.environ.get(THREADS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer") from None
    return os.cpu_count() or 1


def run_batch(path: str, stream) -> int:
    try:
        with open(path) as fh:
            lines = [(i, ln) for i, ln in enumerate(fh, 1) if ln.strip()]
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        results = list(pool.map(_run_job, lines))
    for r in results:
        stream.write(json.dumps(r, sort_keys=True) + "\n")
    passed = sum(r["ok"] for r in results)
    summary = {"summary": {"jobs": len(results), "ok": passed, "failed": len(results) - passed}}
    stream.write(json.dumps(summary, sort_keys=True) + "\n")
    return 0 if passed == len(results) else 1


# entry point ---------------------------------------------------------------------------------------

def run(argv: list[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "batch":
            return run_batch(args.file, stream)
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    if args.json:
        stream.write(json.dumps(out.payload, sort_keys=True) + "\n")
    else:
        for line in out.text:
            stream.write(line + "\n")
    return out.code


def main() -> None:
    sys.exit(run())
