"""Command-line front end. Exit status: 0 pass, 1 verification failure, 2 usage error."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass

from .filt import DEFAULT_UNIVERSE_DIM, GeneratorSet, check_jhp, check_wjhp, filtrations, x_length
from .quiver import IsoClass, Interval, TypeAQuiver
from .reflect import (
    TABLE_HEADER, ReflectionPlan, main6_jhp, render_table, sink_plan_to_linear, sorting_word, table_rows,
)
from .semibrick import (
    ShiftedInterval, catalan, enumerate_semibricks_linear, is_semibrick_linear, is_semibrick_shifted,
)
from .symgroup import (
    Permutation, bruhat_inversions, enumerate_c_sortables, inversions, is_c_sortable, support,
)
from .torsion import (
    Bounds, bb_criterion, class_to_json, enumerate_tf_classes_bruteforce, jhp_by_count,
    tf_class_of, torsion_free_verdict,
)
from .verify import SUITES, run_all, run_suite


_INTERVAL = re.compile(r"\[(\d+),(\d+)\)")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    quiver: TypeAQuiver | None = None
    universe_dim: int = DEFAULT_UNIVERSE_DIM
    pair_sum: int = 2
    field_char: int = 2
    fmt: str = "table"
    out: str | None = None
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if not _is_prime(self.field_char):
            raise UsageError(f"--field {self.field_char} is not prime")
        if self.universe_dim < 1:
            raise UsageError("--universe-dim must be at least 1")
        if self.pair_sum < 1:
            raise UsageError("--pair-sum must be at least 1")
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        q = None
        if args.quiver is not None:
            try:
                q = TypeAQuiver.parse(args.quiver)
            except ValueError as e:
                raise UsageError(str(e)) from None
        return cls(args.command, q, args.universe_dim, args.pair_sum, args.field,
                   args.format, args.out, args.seed, args.threads)


@dataclass
class Result:
    columns: list[str]
    rows: list[list[str]]
    payload: object = None   # JSON body; defaults to a list of row objects
    text: str | None = None  # preferred table rendering
    status: int = 0


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _quiver(args) -> TypeAQuiver:
    if args.quiver is None:
        raise UsageError("--quiver is required")
    try:
        return TypeAQuiver.parse(args.quiver)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _perm(text: str | None) -> Permutation:
    if text is None:
        raise UsageError("a permutation is required (--perm)")
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise UsageError(f"permutation {text!r}: {e}") from None


def _intervals(text: str | None) -> list[Interval]:
    """Parse "[1,3),[2,3)" (commas or semicolons between items)."""
    if not text:
        return []
    body = text.replace(" ", "")
    out, pos = [], 0
    for hit in _INTERVAL.finditer(body):
        gap = body[pos:hit.start()].strip(",;")
        if gap:
            raise UsageError(f"unexpected {gap!r} at position {pos + 1} of {text!r}")
        try:
            out.append(Interval(int(hit[1]), int(hit[2])))
        except ValueError as e:
            raise UsageError(f"interval at position {hit.start() + 1}: {e}") from None
        pos = hit.end()
    if body[pos:].strip(",;") or not out:
        raise UsageError(f"cannot parse intervals from {text!r} after position {pos}")
    return out


def _check_fits(q: TypeAQuiver, ivs: list[Interval]):
    for x in ivs:
        if x.j > q.n + 1:
            raise UsageError(f"{x} does not fit on a quiver with {q.n} vertices")


def _rank_match(w: Permutation, q: TypeAQuiver):
    if w.n_plus_1 != q.n + 1:
        raise UsageError(f"permutation {w} has rank {w.n_plus_1}, quiver needs {q.n + 1}")


def cmd_sortable(args) -> Result:
    q = _quiver(args)
    if args.action == "list":
        rows = [[str(w), sorting_word(w, q).split("=")[0]] for w in enumerate_c_sortables(q)]
        return Result(["w", "word"], rows)
    w = _perm(args.perm)
    _rank_match(w, q)
    cert = is_c_sortable(w, q)
    factors = [" ".join(f"s{i}" for i in f) for f in cert.factors] if cert else []
    row = [str(w), "yes" if cert else "no", " | ".join(factors)]
    return Result(["w", "sortable", "factors"], [row],
                  {"perm": str(w), "sortable": cert is not None,
                   "factors": [list(f) for f in cert.factors] if cert else None})


def cmd_tf(args) -> Result:
    q = _quiver(args)
    bounds = Bounds(args.pair_sum, None)
    if args.action == "enumerate":
        rows = [[str(w), class_to_json(tf_class_of(w, q).intervals)] for w in enumerate_c_sortables(q)]
        status = 0
        if args.brute:
            brute = set(enumerate_tf_classes_bruteforce(q, bounds, args.field))
            status = 0 if brute == {tf_class_of(w, q).intervals for w in enumerate_c_sortables(q)} else 1
        return Result(["w", "class"], rows, status=status)
    ivs = _intervals(args.intervals)
    _check_fits(q, ivs)
    verdict = torsion_free_verdict(ivs, q, Bounds(args.pair_sum, args.universe_dim), args.field)
    return Result(["class", "verdict"], [[class_to_json(ivs), verdict.value]],
                  {"class": sorted(str(x) for x in ivs), "verdict": verdict.value})


def _plan(args, q: TypeAQuiver) -> ReflectionPlan:
    if not getattr(args, "plan", None):
        return sink_plan_to_linear(q)
    try:
        return ReflectionPlan(q, tuple(int(v) for v in args.plan.split(",")))
    except ValueError as e:
        raise UsageError(f"plan: {e}") from None


def cmd_jhp(args) -> Result:
    if args.action == "bb":
        w = _perm(args.perm)
        verdict = bb_criterion(w, reading=args.reading)
        return Result(["w", "verdict"], [[str(w), verdict.value]], {"perm": str(w), "verdict": verdict.value})
    q = _quiver(args)
    printed = args.reading == "printed"
    if args.action == "table":
        rows = table_rows(q, _plan(args, q), printed)
        return Result(TABLE_HEADER, [r.cells() for r in rows], text=render_table(rows))
    w = _perm(args.perm)
    _rank_match(w, q)
    if is_c_sortable(w, q) is None:
        raise UsageError(f"{w} is not c-sortable for {q.pretty()}")
    res = main6_jhp(w, q, _plan(args, q), printed)
    by_count = jhp_by_count(w)
    row = [str(w), str(res.dagger_total), str(res.ddagger_total), str(res.jhp).lower(), str(by_count).lower()]
    payload = json.loads(res.to_json())
    payload["jhp_by_count"] = by_count
    return Result(["w", "dagger", "ddagger", "jhp", "jhp_by_count"], [row], payload,
                  status=0 if res.jhp == by_count else 1)


def cmd_reflect(args) -> Result:
    q = _quiver(args)
    w = _perm(args.perm)
    _rank_match(w, q)
    if is_c_sortable(w, q) is None:
        raise UsageError(f"{w} is not c-sortable for {q.pretty()}")
    res = main6_jhp(w, q, _plan(args, q), args.reading == "printed")
    rows = [[str(st.vertex), str(st.perm_before), str(st.perm_after), str(st.dagger), str(st.ddagger)]
            for st in res.steps]
    return Result(["vertex", "perm_before", "perm_after", "dagger", "ddagger"], rows, json.loads(res.to_json()))


def _shifted(text: str) -> list[ShiftedInterval]:
    out = []
    for pos, part in enumerate([p for p in text.replace(" ", "").split(";") if p], 1):
        try:
            out.append(ShiftedInterval.parse(part))
        except ValueError as e:
            raise UsageError(f"object #{pos}: {e}") from None
    return out


def cmd_semibrick(args) -> Result:
    if args.action == "count":
        rows = [[str(n), str(len(enumerate_semibricks_linear(n))), str(catalan(n))]
                for n in range(1, args.n + 1)]
        status = 0 if all(r[1] == r[2] for r in rows) else 1
        return Result(["n", "semibricks", "catalan"], rows, status=status)
    objs = _shifted(args.objects or "")
    for o in objs:
        if o.j > args.n:
            raise UsageError(f"{o} does not live over A_{args.n}")
    if all(o.k == 0 for o in objs):
        verdict = is_semibrick_linear([o.module for o in objs])
    else:
        verdict = is_semibrick_shifted(objs, args.n)
    return Result(["objects", "semibrick"], [[";".join(map(str, sorted(objs))), str(verdict).lower()]],
                  {"objects": [str(o) for o in sorted(objs)], "semibrick": verdict})


def cmd_filt(args) -> Result:
    q = _quiver(args)
    gens_iv = _intervals(args.generators)
    _check_fits(q, gens_iv)
    if not gens_iv:
        raise UsageError("--generators is required")
    gens = GeneratorSet.of_intervals(q, gens_iv, args.field)
    if args.action == "list":
        m = IsoClass(tuple(_intervals(args.module)))
        _check_fits(q, list(m))
        recs = sorted(filtrations(m, gens, cap=max(m.total_dim, 1)), key=lambda r: (r.length, r.cone_sequence))
        rows = [[str(r.length), str(r)] for r in recs]
        return Result(["length", "cones"], rows,
                      {"module": str(m), "x_length": x_length(m, gens),
                       "filtrations": [[str(c) for c in r.cone_sequence] for r in recs]})
    within = _intervals(args.within) or None
    check = check_wjhp if args.action == "wjhp" else check_jhp
    rep = check(gens, args.universe_dim, within)
    rows = [[c["module"], " ".join(c["seq_a"]), " ".join(c["seq_b"])] for c in rep.counterexamples]
    return Result(["module", "seq_a", "seq_b"], rows, json.loads(rep.to_json()),
                  text=f"verdict: {rep.verdict}\n" + "".join(f"{r[0]}: ({r[1]}) vs ({r[2]})\n" for r in rows),
                  status=0 if rep.passed else 1)


def cmd_binv(args) -> Result:
    w = _perm(args.perm_pos or args.perm)
    rows = [[str(t)] for t in sorted(bruhat_inversions(w))]
    return Result(["transposition"], rows,
                  {"perm": str(w), "inversions": [str(t) for t in sorted(inversions(w))],
                   "bruhat_inversions": [r[0] for r in rows], "support": sorted(support(w))})


def cmd_verify(args) -> Result:
    q = _quiver(args) if args.quiver else None
    kw = dict(p=args.field, seed=args.seed, universe_dim=args.universe_dim, pair_sum=args.pair_sum)
    if args.suite == "all":
        checks = run_all(q, args.max_n, args.threads, **kw)
    elif args.suite in SUITES:
        checks = run_suite(args.suite, q, args.max_n, **kw)
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose all or one of {', '.join(SUITES)}")
    rows = [[c.suite, c.name, "pass" if c.passed else "FAIL", c.detail] for c in checks]
    return Result(["suite", "check", "result", "detail"], rows,
                  status=0 if all(c.passed for c in checks) else 1)


def _render(res: Result, fmt: str) -> str:
    if fmt == "json":
        body = res.payload if res.payload is not None else [dict(zip(res.columns, r)) for r in res.rows]
        return json.dumps(body, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(res.columns)
        wr.writerows(res.rows)
        return buf.getvalue()
    if res.text is not None:
        return res.text
    widths = [max([len(c)] + [len(r[k]) for r in res.rows]) for k, c in enumerate(res.columns)]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(res.columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(wd) for v, wd in zip(r, widths)).rstrip() for r in res.rows]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", help='orientation string, e.g. "><" for 1->2<-3')
    common.add_argument("--perm", help="permutation in one-line notation")
    common.add_argument("--universe-dim", type=int, default=DEFAULT_UNIVERSE_DIM)
    common.add_argument("--pair-sum", type=int, default=2, help="max summands in the submodule check")
    common.add_argument("--field", type=int, default=2, help="prime field characteristic")
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--reading", choices=["corrected", "printed"], default="corrected",
                        help="formula variant for the i = 1 statistic and the pattern criterion")
    common.add_argument("--plan", help="comma-separated sink-mutation plan")

    ap = argparse.ArgumentParser(prog="typea-jhp", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sortable", parents=[common])
    p.add_argument("action", choices=["list", "check"])
    p.set_defaults(func=cmd_sortable)

    p = sub.add_parser("tf", parents=[common])
    p.add_argument("action", choices=["enumerate", "oracle"])
    p.add_argument("--intervals", help='e.g. "[1,3),[2,3)"')
    p.add_argument("--brute", action="store_true", help="also compare with the brute-force oracle")
    p.set_defaults(func=cmd_tf)

    p = sub.add_parser("jhp", parents=[common])
    p.add_argument("action", choices=["check", "table", "bb"])
    p.set_defaults(func=cmd_jhp)

    p = sub.add_parser("reflect", parents=[common])
    p.add_argument("action", choices=["trace"])
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("semibrick", parents=[common])
    p.add_argument("action", choices=["count", "check"])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--objects", help='";"-separated list such as "M(0,1)[-1];M(0,3)[0]"')
    p.set_defaults(func=cmd_semibrick)

    p = sub.add_parser("filt", parents=[common])
    p.add_argument("action", choices=["list", "wjhp", "jhp"])
    p.add_argument("--generators", help='e.g. "[1,2),[2,3)"')
    p.add_argument("--module", help="direct sum of intervals, e.g. \"[1,3),[2,3)\"")
    p.add_argument("--within", help="restrict the universe to sums of these intervals")
    p.set_defaults(func=cmd_filt)

    p = sub.add_parser("binv", parents=[common])
    p.add_argument("perm_pos", nargs="?", metavar="PERM")
    p.set_defaults(func=cmd_binv)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        res = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = _render(res, config.fmt)
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return res.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
