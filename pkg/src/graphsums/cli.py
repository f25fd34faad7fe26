"""Command line front end.

Exit codes: 0 when every reported identity holds, 1 when one fails, 2 for
usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from itertools import combinations

from . import chi_zero, core_fixed, matrix_tree, orientations, roots, tutte
from .errors import GraphSumsError, IsolatedVertex, ParseError, TooLarge, Disconnected, NotIrreducible, BadShape
from .formats import read_core, read_input, read_weights
from .graph import Graph, is_connected
from .linalg import PairSet
from .ring import Poly, poly_eval, render

__all__ = ["main", "RunConfig", "CheckResult", "verify_all", "build_parser"]

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class UsageError(GraphSumsError):
    pass


@dataclass
class RunConfig:
    path: str
    command: str
    cap_n: int = 7
    cap_e: int = 14
    weights: str = "symbolic"
    fmt: str = "text"

    def __post_init__(self):
        if self.cap_n < 1 or self.cap_e < 1:
            raise UsageError("caps must be positive")


@dataclass
class CheckResult:
    name: str
    status: str
    lhs: object = None
    rhs: object = None
    note: str = ""
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# input handling


def _weight_mode(mode):
    if mode in ("symbolic", "all-ones"):
        return mode
    if mode.startswith("file:"):
        return mode
    raise UsageError(f"--weights must be all-ones, symbolic or file:<path>, got {mode!r}")


def load(config):
    """Parse the input file and apply the weight mode."""
    obj = read_input(config.path)
    mode = _weight_mode(config.weights)
    if isinstance(obj, Graph):
        if mode == "all-ones":
            obj = obj.all_ones()
        elif mode.startswith("file:"):
            table = read_weights(mode[5:])
            missing = [e for e in obj.edges if e not in table]
            if missing:
                raise UsageError(f"weight file has no value for edges {missing}")
            extra = [e for e in table if e not in obj.edges]
            if extra:
                raise UsageError(f"weight file names non-edges {extra}")
            obj = obj.with_weights(table)
    elif mode.startswith("file:"):
        raise UsageError("weight files apply to unsigned graphs only")
    return obj


def _finish(x, config):
    """Apply all-ones weights to root-set results (their weights stay symbolic internally)."""
    if config.weights == "all-ones" and isinstance(x, Poly):
        names = [v for v in x.variables() if v[0] in "uv"]
        return x.subs({v: 1 for v in names}) if names else x
    return x


def _check_caps(obj, config):
    n = obj.n
    m = obj.m if isinstance(obj, Graph) else len(obj)
    if n > config.cap_n:
        raise TooLarge(f"{n} vertices exceeds --cap-n {config.cap_n}")
    if m > config.cap_e:
        raise TooLarge(f"{m} edges exceeds --cap-e {config.cap_e}")


# ---------------------------------------------------------------------------
# verify-all


def _eq(name, lhs, rhs, note=""):
    return CheckResult(name, PASS if lhs == rhs else FAIL, lhs, rhs, note)


def _many(name, pairs):
    """Aggregate an iterable of (label, lhs, rhs); reports the first failure."""
    count = 0
    for label, lhs, rhs in pairs:
        count += 1
        if lhs != rhs:
            return CheckResult(name, FAIL, lhs, rhs, f"first failure at {label}")
    return CheckResult(name, PASS, note=f"{count} instances")


def _graph_checks(G):
    def tree_sum():
        if not is_connected(G):
            return CheckResult("tree-sum", SKIPPED, note="graph is disconnected")
        return _eq("tree-sum", matrix_tree.spanning_tree_sum(G), matrix_tree.spanning_tree_sum_oracle(G))

    def all_minors():
        def gen():
            cells = [(i, j) for i in range(1, G.n + 1) for j in range(1, G.n + 1)]
            for m in (1, 2):
                for combo in combinations(cells, m):
                    try:
                        J = PairSet(combo)
                    except GraphSumsError:
                        continue
                    yield (str(J), *matrix_tree.all_minors_check(G, J))

        return _many("all-minors", gen())

    def msub():
        shapes = core_fixed.core_shapes(G)

        def gen():
            for H in shapes:
                for labeled in (True, False):
                    yield (f"{H} labeled={labeled}", *core_fixed.msub_check(G, H, labeled))

        return _many("core-msub", gen())

    def inversion():
        def gen():
            for H in core_fixed.core_shapes(G):
                try:
                    z = core_fixed.z_core_via_inversion(G, H)
                except BadShape:
                    continue
                yield str(H), z, core_fixed.z_core_oracle(G, H)

        return _many("core-inversion", gen())

    def one_cycle():
        def gen():
            for s in range(2, G.n + 1):
                yield f"s={s}", chi_zero.one_cycle_sum(G, s), chi_zero.one_cycle_oracle(G, s)

        return _many("one-cycle", gen())

    def chi0():
        def gen():
            for d in (False, True):
                yield f"doubled={d}", chi_zero.chi_zero_connected_sum(G, d), chi_zero.chi_zero_oracle(G, d)

        return _many("chi-zero", gen())

    def given_cycle():
        def gen():
            for m in (1, 2):
                for J in chi_zero.component_disjoint_sets(G, m):
                    lhs, rhs = chi_zero.given_cycle_check(G, J)
                    yield str(J), lhs, rhs
                    yield f"{J} (direct)", rhs, chi_zero.given_cycle_oracle(G, J)

        return _many("given-cycle", gen())

    def genfun():
        return _eq("genfun", *chi_zero.genfun_check(G))

    def altsum():
        return _eq("altsum", *chi_zero.altsum_check(G))

    def dcount():
        if G.isolated_vertices():
            return CheckResult("dcount", SKIPPED, note="graph has isolated vertices")
        vals = {name: fn(G) for name, fn in orientations.METHODS.items()}
        ok = len(set(vals.values())) == 1
        return CheckResult("dcount", PASS if ok else FAIL, vals["oracle"], vals["subgraph"], extra=vals)

    def ext_activity():
        if not is_connected(G):
            return CheckResult("ext-activity", SKIPPED, note="graph is disconnected")
        a = tutte.ext_activity_tree_def(G)
        b = tutte.ext_activity_subgraph_sum(G)
        c = tutte.ext_activity_partition_formula(G)
        ok = a == b == c
        return CheckResult("ext-activity", PASS if ok else FAIL, a, c, extra={"subgraph": b})

    def free_term():
        if not is_connected(G):
            return CheckResult("free-term", SKIPPED, note="graph is disconnected")
        return _eq("free-term", *tutte.free_term_check(G))

    def moebius():
        v = tutte.moebius_lemma_check(G.n) if G.n >= 2 else 0
        return _eq("moebius", v, 0)

    return [
        ("tree-sum", tree_sum),
        ("all-minors", all_minors),
        ("core-msub", msub),
        ("core-inversion", inversion),
        ("one-cycle", one_cycle),
        ("chi-zero", chi0),
        ("given-cycle", given_cycle),
        ("genfun", genfun),
        ("altsum", altsum),
        ("dcount", dcount),
        ("ext-activity", ext_activity),
        ("free-term", free_term),
        ("moebius", moebius),
    ]


def _root_checks(S):
    def independence():
        def gen():
            for r in range(len(S) + 1):
                for sub in combinations(S.roots, r):
                    yield (
                        str(S.subset(sub)),
                        roots.independent_by_rank(sub, S.n),
                        roots.independent_by_graph(sub, S.n),
                    )

        return _many("independence", gen())

    def maximal():
        found = sorted(tuple(x.roots) for x in roots.maximal_independent_subsets(S))
        predicted = roots.maximal_by_structure(S)
        res = _eq("maximal-sets", len(found), len(predicted))
        if found != predicted:
            res.status = FAIL
            res.note = "enumeration and structural description disagree"
        return res

    def ntrees():
        if not S.is_type_a:
            return CheckResult("an-ntrees", SKIPPED, note="root set has '-' roots")
        try:
            return _eq("an-ntrees", *roots.ntrees_check(S))
        except NotIrreducible as exc:
            return CheckResult("an-ntrees", SKIPPED, note=str(exc))

    def cardm():
        return _eq("dn-cardm", *roots.cardm_check(S))

    def sumd():
        lhs, rhs, degenerate = roots.sumd_check(S)
        res = _eq("dn-sumd", lhs, rhs)
        if degenerate:
            res.note = "no spanning odd-unicyclic subset"
        return res

    return [
        ("independence", independence),
        ("maximal-sets", maximal),
        ("an-ntrees", ntrees),
        ("dn-cardm", cardm),
        ("dn-sumd", sumd),
    ]


def verify_all(obj, config):
    """Run every applicable check in a fixed order; caps and size limits
    become SKIPPED entries."""
    checks = _graph_checks(obj) if isinstance(obj, Graph) else _root_checks(obj)
    results = []
    try:
        _check_caps(obj, config)
    except TooLarge as exc:
        return [CheckResult(name, SKIPPED, note=str(exc)) for name, _ in checks]
    for name, fn in checks:
        try:
            res = fn()
        except (TooLarge, IsolatedVertex, Disconnected) as exc:
            res = CheckResult(name, SKIPPED, note=str(exc))
        res.lhs = _finish(res.lhs, config)
        res.rhs = _finish(res.rhs, config)
        results.append(res)
    return results


# ---------------------------------------------------------------------------
# output


def _text(x):
    if isinstance(x, bool):
        return str(x).lower()
    return render(x)


def emit(results, config, out=None):
    out = out or sys.stdout
    for r in results:
        if config.fmt == "json-lines":
            rec = {"check": r.name, "status": r.status}
            if r.lhs is not None:
                rec["lhs"] = _text(r.lhs)
            if r.rhs is not None:
                rec["rhs"] = _text(r.rhs)
            if r.note:
                rec["note"] = r.note
            for k, v in r.extra.items():
                rec[k] = _text(v)
            print(json.dumps(rec), file=out)
        else:
            line = f"{r.status:<8}{r.name}"
            if r.lhs is not None or r.rhs is not None:
                line += f"  lhs={_text(r.lhs)}  rhs={_text(r.rhs)}"
            if r.note:
                line += f"  ({r.note})"
            print(line, file=out)


def _value(name, value, config, out=None, **extra):
    out = out or sys.stdout
    value = _finish(value, config)
    if config.fmt == "json-lines":
        rec = {"quantity": name, "value": _text(value)}
        rec.update({k: _text(v) for k, v in extra.items()})
        print(json.dumps(rec), file=out)
    else:
        print(f"{name} = {_text(value)}", file=out)
        for k, v in extra.items():
            print(f"{k} = {_text(v)}", file=out)


# ---------------------------------------------------------------------------
# subcommands


def _need_graph(obj, cmd):
    if not isinstance(obj, Graph):
        raise UsageError(f"{cmd} needs an unsigned graph, got a signed root set")
    return obj


def _need_roots(obj, cmd):
    if isinstance(obj, Graph):
        # an unsigned edge list is read as A-type roots
        return roots.RootSet(obj.n, [(i, j, "+") for i, j in obj.edges])
    return obj


def _status(results):
    return 1 if any(r.status == FAIL for r in results) else 0


def run(args, out=None):
    out = out or sys.stdout
    config = RunConfig(
        path=getattr(args, "input", ""),
        command=args.command,
        cap_n=args.cap_n,
        cap_e=args.cap_e,
        weights=args.weights,
        fmt=args.format,
    )
    if args.command == "moebius":
        v = tutte.moebius_lemma_check(args.n)
        res = [_eq("moebius", v, 0)]
        emit(res, config, out)
        return _status(res)

    obj = load(config)
    cmd = args.command
    if cmd == "verify-all":
        res = verify_all(obj, config)
        emit(res, config, out)
        return _status(res)

    _check_caps(obj, config)

    if cmd == "tree-sum":
        G = _need_graph(obj, cmd)
        _value("tree_sum", matrix_tree.spanning_tree_sum(G, args.root), config, out)
        return 0
    if cmd == "all-minors":
        G = _need_graph(obj, cmd)
        res = [_eq("all-minors", *matrix_tree.all_minors_check(G, PairSet.parse(args.J)))]
    elif cmd == "rho":
        G = _need_graph(obj, cmd)
        H = core_fixed.CoreShape.from_mult(G.n, read_core(args.core))
        _value("rho", core_fixed.rho(G, H), config, out, z_core=core_fixed.z_core_oracle(G, H))
        res = [_eq("core-msub", *core_fixed.msub_check(G, H))]
        try:
            res.append(_eq("core-inversion", core_fixed.z_core_via_inversion(G, H), core_fixed.z_core_oracle(G, H)))
        except BadShape as exc:
            res.append(CheckResult("core-inversion", SKIPPED, note=str(exc)))
    elif cmd == "one-cycle":
        G = _need_graph(obj, cmd)
        v = chi_zero.one_cycle_sum(G, args.s)
        _value(f"one_cycle_sum[s={args.s}]", v, config, out)
        res = [_eq("one-cycle", v, chi_zero.one_cycle_oracle(G, args.s))]
    elif cmd == "chi-zero":
        G = _need_graph(obj, cmd)
        v = chi_zero.chi_zero_connected_sum(G, args.doubled)
        _value("chi_zero_sum", v, config, out)
        res = [_eq("chi-zero", v, chi_zero.chi_zero_oracle(G, args.doubled))]
    elif cmd == "given-cycle":
        G = _need_graph(obj, cmd)
        J = PairSet.parse(args.J)
        lhs, rhs = chi_zero.given_cycle_check(G, J)
        res = [_eq("given-cycle", lhs, rhs), _eq("given-cycle-direct", rhs, chi_zero.given_cycle_oracle(G, J))]
    elif cmd == "genfun":
        G = _need_graph(obj, cmd)
        res = [_eq("genfun", *chi_zero.genfun_check(G))]
    elif cmd == "dn-cardm":
        res = [_eq("dn-cardm", *roots.cardm_check(_need_roots(obj, cmd)))]
    elif cmd == "dn-sumd":
        lhs, rhs, degenerate = roots.sumd_check(_need_roots(obj, cmd))
        res = [_eq("dn-sumd", lhs, rhs, "no spanning odd-unicyclic subset" if degenerate else "")]
    elif cmd == "an-ntrees":
        res = [_eq("an-ntrees", *roots.ntrees_check(_need_roots(obj, cmd)))]
    elif cmd == "dcount":
        G = _need_graph(obj, cmd)
        _value("d", orientations.d_count(G, args.method), config, out)
        return 0
    elif cmd == "tutte":
        G = _need_graph(obj, cmd)
        _value("tutte", tutte.tutte_multivariate(G), config, out)
        return 0
    elif cmd == "ext-activity":
        G = _need_graph(obj, cmd)
        order = None
        if args.order:
            if args.method != "tree":
                raise UsageError("--order only applies to --method tree")
            perm = [int(x) for x in args.order.split(",")]
            order = tutte.EdgeOrder.from_permutation(G, perm)
        _value("ext_activity", tutte.ext_activity(G, args.method, order), config, out)
        return 0
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd}")
    for r in res:
        r.lhs = _finish(r.lhs, config)
        r.rhs = _finish(r.rhs, config)
    emit(res, config, out)
    return _status(res)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weights", default="symbolic", help="all-ones | symbolic | file:<path>")
    common.add_argument("--cap-n", type=int, default=7, help="largest vertex count (default 7)")
    common.add_argument("--cap-e", type=int, default=14, help="largest edge/root count (default 14)")
    common.add_argument("--format", choices=["text", "json-lines"], default="text")

    p = argparse.ArgumentParser(prog="graphsums", description="Exact graph sums and their enumeration checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", help="edge-list file")
        return sp

    sp = add("tree-sum", "spanning-tree sum from a principal minor")
    sp.add_argument("--root", type=int, default=1)
    sp = add("all-minors", "all-minors identity for one pair set")
    sp.add_argument("--J", required=True, help="pairs as i:j,i:j")
    sp = add("rho", "rho and the fixed-core identities for one core shape")
    sp.add_argument("--core", required=True, help="core file: lines 'i j [1|2]'")
    sp = add("one-cycle", "sum over connected subgraphs with one cycle of a given length")
    sp.add_argument("--s", type=int, required=True)
    sp = add("chi-zero", "sum over connected spanning subgraphs with Euler characteristic 0")
    sp.add_argument("--doubled", action="store_true", help="count doubled edges as 2-cycles")
    sp = add("given-cycle", "fixed-cycle-edges minor identity")
    sp.add_argument("--J", required=True)
    add("genfun", "generating function of the Q_m (polynomial in t)")
    add("dn-cardm", "D_n generating function identity")
    add("dn-sumd", "D_n identity at t = -2")
    add("an-ntrees", "A_n maximal independent sets against the Laplacian minor")
    sp = add("dcount", "orientations without sources or sinks")
    sp.add_argument("--method", choices=sorted(orientations.METHODS), default="oracle")
    add("tutte", "multivariate Tutte polynomial (variable q)")
    sp = add("ext-activity", "external activity polynomial")
    sp.add_argument("--method", choices=sorted(tutte.METHODS), default="subgraph")
    sp.add_argument("--order", help="edge order as a permutation of 1..e, e.g. 3,1,2")
    add("verify-all", "run every applicable identity check")
    sp = sub.add_parser("moebius", parents=[common], help="partition sum that must vanish")
    sp.add_argument("n", type=int)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return run(args)
    except (ParseError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TooLarge, BadShape, NotIrreducible, Disconnected, IsolatedVertex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
