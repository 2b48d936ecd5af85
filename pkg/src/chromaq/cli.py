"""Command-line front end.

    chromaq compute --family kchain --gamma 3,3 --method all
    chromaq compute --family path --n 6 --method forest
    chromaq compute --edges claw.txt --method nbc
    chromaq scan --n 5
    chromaq verify --suite involutions --n 6
    chromaq enumerate --n 4

Exit codes: 0 success, 2 usage or input error (including limit breaches),
3 invariant violation or cross-method mismatch, 4 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Callable, Iterator

from . import foresttriples as ft
from . import kchain as kc
from .graphs import (Graph, GraphError, KChainSpec, Nuig, enumerate_nuigs, make_family,
                     parse_b_sequence, parse_edge_list, path, complete, validate_nuig)
from .llt import EDGE_LIMIT, x_from_llt
from .nbc import EdgeOrder, signed_e_sum_nbc, two_part_coefficient
from .oracle import DEFAULT_LIMIT, LimitError, chrom_sym_q1, limits_lifted, x_brute_force
from .qpoly import QPoly, is_log_concave, is_nonnegative, is_palindromic, is_unimodal
from .symfunc import ESym

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_CONJECTURE = 0, 2, 3, 4

Q_METHODS = ("brute", "forest", "llt", "kchain", "twoclique")
ALL_METHODS = Q_METHODS + ("nbc",)
# spanning-tree enumeration per block grows fast; --method all caps nbc here
NBC_ALL_LIMIT = 9


class InvariantViolation(Exception):
    pass


# -- graph input ---------------------------------------------------------


@dataclass
class GraphInput:
    graph: Graph
    nuig: Nuig | None = None
    spec: KChainSpec | None = None
    label: str = ""

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.graph.n,
            "b": list(self.nuig.b) if self.nuig is not None else None,
            "edges": [list(e) for e in self.graph.sorted_edges()],
        }


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def graph_from_args(args) -> GraphInput:
    sources = [x for x in (args.family, args.b, args.edges) if x is not None]
    if len(sources) != 1:
        raise GraphError("give exactly one of --family, --b, --edges")
    if args.family:
        fam = args.family
        if fam == "kchain":
            if not args.gamma:
                raise GraphError("--family kchain needs --gamma")
            spec = KChainSpec(_int_list(args.gamma), _int_list(args.epsilon) if args.epsilon else ())
            g = spec.graph()
            return GraphInput(g.graph, g, spec, str(spec))
        if args.n is None:
            raise GraphError(f"--family {fam} needs --n")
        g = make_family(fam, args.n)
        return GraphInput(g.graph, g, None, f"{fam}({args.n})")
    if args.b is not None:
        g = parse_b_sequence(args.b)
        return GraphInput(g.graph, g, None, f"b=({g.b_string()})")
    text = Path(args.edges).read_text()
    gr = parse_edge_list(text)
    try:
        nuig = validate_nuig(gr)
    except GraphError:
        nuig = None
    return GraphInput(gr, nuig, None, str(args.edges))


# -- methods ---------------------------------------------------------------


def applicable(method: str, gi: GraphInput, all_mode: bool = False) -> str | None:
    """None if the method can run on this input, else the reason it cannot."""
    lifted = limits_lifted()
    if method == "nbc":
        if all_mode and gi.graph.n > NBC_ALL_LIMIT and not lifted:
            return f"more than {NBC_ALL_LIMIT} vertices (run --method nbc on its own)"
        return None
    if method == "brute":
        if gi.graph.n > DEFAULT_LIMIT and not lifted:
            return f"more than {DEFAULT_LIMIT} vertices"
        return None
    if gi.nuig is None:
        return "not a natural unit interval graph"
    if method == "forest" and gi.graph.n > ft.FOREST_LIMIT and not lifted:
        return f"more than {ft.FOREST_LIMIT} vertices"
    if method == "llt" and gi.nuig.edge_count > EDGE_LIMIT and not lifted:
        return f"more than {EDGE_LIMIT} edges"
    if method == "kchain" and gi.spec is None:
        return "needs --family kchain"
    if method == "twoclique":
        if gi.spec is None or gi.spec.length != 2 or any(gi.spec.epsilon):
            return "needs a two-clique chain (--gamma a,b with epsilon 0,0)"
    return None


def run_method(method: str, gi: GraphInput, order: str = "lex") -> ESym:
    g = gi.nuig
    if method == "brute":
        return x_brute_force(g) if g is not None else chrom_sym_q1(gi.graph)
    if method == "forest":
        return ft.signed_e_sum(g)
    if method == "llt":
        return x_from_llt(g)
    if method == "kchain":
        return kc.explicit_formula(gi.spec)
    if method == "twoclique":
        return kc.two_clique_formula(*gi.spec.gamma)
    if method == "nbc":
        return signed_e_sum_nbc(gi.graph, EdgeOrder.parse(gi.graph, order))
    raise ValueError(f"unknown method {method!r}")


def is_q_free(method: str, gi: GraphInput) -> bool:
    return method == "nbc" or gi.nuig is None


def first_difference(a: ESym, b: ESym) -> str:
    for mu in sorted(set(p for p, _ in a) | set(p for p, _ in b), reverse=True):
        if a[mu] != b[mu]:
            return f"e{list(mu)}: {a[mu]} vs {b[mu]}"
    return "none"


def compute_all(gi: GraphInput, order: str = "lex") -> tuple[dict[str, ESym], dict[str, str]]:
    """Run every applicable method; raise InvariantViolation on any disagreement."""
    results: dict[str, ESym] = {}
    skipped: dict[str, str] = {}
    for m in ALL_METHODS:
        why = applicable(m, gi, all_mode=True)
        if why:
            skipped[m] = why
            continue
        results[m] = run_method(m, gi, order)
    q_ref = next((m for m in results if not is_q_free(m, gi)), None)
    one_ref = next(iter(results), None)
    for m, e in results.items():
        if q_ref is not None and not is_q_free(m, gi):
            if e != results[q_ref]:
                raise InvariantViolation(f"{m} disagrees with {q_ref}: {first_difference(e, results[q_ref])}")
        if one_ref is not None:
            a, b = e.at_q(1), results[one_ref].at_q(1)
            if a != b:
                raise InvariantViolation(f"{m} disagrees with {one_ref} at q=1: {first_difference(a, b)}")
    return results, skipped


# -- scan --------------------------------------------------------------------


def cheapest(g: Nuig) -> ESym:
    if g.n <= ft.FOREST_LIMIT or limits_lifted():
        return ft.signed_e_sum(g, limit=max(ft.FOREST_LIMIT, g.n))
    return x_from_llt(g)


def verdicts(c: QPoly, twice_center: int) -> dict[str, bool]:
    return {
        "nonnegative": is_nonnegative(c),
        "palindromic": is_palindromic(c, twice_center),
        "unimodal": is_unimodal(c),
        "log_concave": is_log_concave(c),
    }


def scan_one(b: tuple[int, ...]) -> dict:
    g = Nuig(b)
    e = cheapest(g)
    report = kc.positivity_report(e, g.edge_count)
    bad = [{"partition": list(v.partition), "coeff": v.coeff.to_json(),
            "failed": [k for k in ("nonnegative", "palindromic", "unimodal", "log_concave")
                       if not getattr(v, k)]}
           for v in report.verdicts
           if not (v.nonnegative and v.palindromic and v.unimodal and v.log_concave)]
    return {"b": list(b), "edges": g.edge_count, **report.summary(), "failures": bad}


def synthetic_record(coeffs: tuple[int, ...]) -> dict:
    """A fake graph record carrying one given coefficient, for testing the exit paths."""
    c = QPoly(coeffs)
    low = c.low_degree if c else 0
    high = c.degree if c else 0
    v = verdicts(c, low + high)
    return {
        "b": None, "edges": None, "injected": True,
        "e_positive": v["nonnegative"], "palindromic": v["palindromic"],
        "e_unimodal": v["unimodal"], "e_log_concave": v["log_concave"],
        "failures": [] if all(v.values()) else
        [{"partition": [], "coeff": c.to_json(), "failed": [k for k, ok in v.items() if not ok]}],
    }


def scan(n: int, jobs: int = 1, inject: tuple[int, ...] | None = None) -> list[dict]:
    bs = [g.b for g in enumerate_nuigs(n)]
    if n > ft.FOREST_LIMIT and not limits_lifted():
        raise LimitError(f"scan n = {n} exceeds the limit {ft.FOREST_LIMIT} "
                         "(set CHROMAQ_LIMIT_OVERRIDE=1 to lift)")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            records = list(ex.map(scan_one, bs, chunksize=8))
    else:
        records = [scan_one(b) for b in bs]
    if inject is not None:
        records.append(synthetic_record(inject))
    return records


def scan_summary(records: list[dict]) -> dict:
    return {
        "graphs": sum(1 for r in records if not r.get("injected")),
        "not_e_positive": sum(1 for r in records if not r["e_positive"]),
        "not_palindromic": sum(1 for r in records if not r["palindromic"]),
        "not_e_unimodal": sum(1 for r in records if not r["e_unimodal"]),
        "not_e_log_concave": sum(1 for r in records if not r["e_log_concave"]),
    }


def scan_exit_code(summary: dict) -> int:
    # palindromicity is a theorem; positivity and log-concavity are conjectures
    if summary["not_palindromic"]:
        return EXIT_INVARIANT
    if summary["not_e_positive"] or summary["not_e_log_concave"] or summary["not_e_unimodal"]:
        return EXIT_CONJECTURE
    return EXIT_OK


# -- verification suites ---------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failure: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure is None


class _Fail(Exception):
    pass


def _check(res: SuiteResult, cond: bool, msg: Callable[[], str] | str) -> None:
    res.checks += 1
    if not cond:
        raise _Fail(msg() if callable(msg) else msg)


def _run_suite(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    try:
        body(res)
    except _Fail as exc:
        res.failure = str(exc)
    except (AssertionError, ft.InvolutionError, ft.TreeListError, ArithmeticError) as exc:
        res.failure = f"{type(exc).__name__}: {exc}"
    return res


def _involution_pair(res: SuiteResult, g: Nuig, triples: Iterator, inv, fixed) -> None:
    for f in triples:
        h = inv(f, g)
        if h == f:
            _check(res, fixed(f), lambda: f"{f} is fixed but not in the fixed set")
            continue
        _check(res, not fixed(f), lambda: f"{f} is in the fixed set but maps to {h}")
        _check(res, inv(h, g) == f, lambda: f"{f} -> {h} -> {inv(h, g)} is not an involution")
        _check(res, h.is_valid_for(g), lambda: f"{f} -> {h} leaves the forest triples")
        _check(res, h.sign == -f.sign, lambda: f"{f} -> {h} keeps the sign")
        _check(res, h.type == f.type, lambda: f"{f} -> {h} changes the type")
        _check(res, h.weight(g) == f.weight(g), lambda: f"{f} -> {h} changes the weight")
        _check(res, h.alpha11 == f.alpha11, lambda: f"{f} -> {h} changes alpha_1^(1)")


def suite_involutions(sizes: list[int], complete_max: int = 6) -> SuiteResult:
    def body(res):
        for n in sizes:
            g = path(n)
            _involution_pair(res, g, ft.enumerate_forest_triples(g), ft.path_involution, ft.path_fixed)
            if n <= complete_max:
                g = complete(n)
                _involution_pair(res, g, ft.enumerate_forest_triples(g, simple_only=True),
                                 ft.complete_involution, ft.complete_fixed)
    return _run_suite("involutions", body)


def suite_treelist(sizes: list[int]) -> SuiteResult:
    def body(res):
        for n in sizes:
            for g in enumerate_nuigs(n):
                for k in range(1, n + 1):
                    for A in combinations(range(1, n + 1), k):
                        lists = set(ft.tree_lists(g, A))
                        trees = list(ft.decreasing_trees(g, A))
                        _check(res, len(lists) == len(trees),
                               lambda: f"G={g}, A={A}: {len(lists)} tree lists vs {len(trees)} trees")
                        for t in trees:
                            sigma = ft.list_of(t)
                            _check(res, sigma in lists, lambda: f"G={g}: list {sigma} of {t} is not a tree list")
                            _check(res, ft.tree_from_list(sigma, g) == t,
                                   lambda: f"G={g}: tree -> {sigma} -> tree does not round trip")
                        for sigma in lists:
                            _check(res, ft.list_of(ft.tree_from_list(sigma, g)) == sigma,
                                   lambda: f"G={g}: {sigma} -> tree -> list does not round trip")
                        lhs, rhs = ft.tree_list_product_check(g, A)
                        _check(res, lhs == rhs, lambda: f"G={g}, A={A}: {lhs} != {rhs}")
    return _run_suite("treelist", body)


def kchain_specs(max_n: int, parts=(2, 3, 4)) -> Iterator[KChainSpec]:
    """Every almost-K-chain with parts from `parts` and at most max_n vertices."""
    def gammas(room: int, acc: tuple):
        if acc:
            yield acc
        for p in parts:
            if p - 1 <= room:
                yield from gammas(room - (p - 1), acc + (p,))

    for gamma in gammas(max_n - 1, ()):
        choices = [(0, 1) if g >= 3 else (0,) for g in gamma]
        for eps in product(*choices):
            yield KChainSpec(gamma, eps)


def suite_kchain(max_n: int) -> SuiteResult:
    def body(res):
        for spec in kchain_specs(max_n):
            g = spec.graph()
            ex = kc.explicit_formula(spec)
            fx = kc.fixed_sum(spec, limit=max(ft.FOREST_LIMIT, g.n))
            _check(res, ex == fx, lambda: f"{spec}: explicit {ex} != fixed {fx}")
            if g.n <= DEFAULT_LIMIT or limits_lifted():
                bf = x_brute_force(g, limit=g.n)
                _check(res, ex == bf, lambda: f"{spec}: explicit {ex} != brute {bf}")
            else:
                sf = ft.signed_e_sum(g, limit=g.n)
                _check(res, ex == sf, lambda: f"{spec}: explicit {ex} != forest {sf}")
    return _run_suite("kchain", body)


def suite_restriction(sizes: list[int]) -> SuiteResult:
    def body(res):
        for n in sizes:
            for g in enumerate_nuigs(n):
                for a in range(2, n):
                    if not g.is_cut(a):
                        continue
                    _, g2 = ft.split_at(g, a)
                    for f in ft.enumerate_forest_triples(g, simple_only=True):
                        h = ft.restrict_ge(f, a, g)
                        _check(res, h.is_valid_for(g2), lambda: f"G={g}, a={a}: {f} restricts to invalid {h}")
    return _run_suite("restriction", body)


def suite_twopart(sizes: list[int]) -> SuiteResult:
    def body(res):
        for n in sizes:
            for g in enumerate_nuigs(n):
                e = ft.signed_e_sum(g)
                for k in range(1, n // 2 + 1):
                    c = two_part_coefficient(g, k)
                    _check(res, c == e[(n - k, k)], lambda: f"G={g}, k={k}: {c} != {e[(n - k, k)]}")
    return _run_suite("twopart", body)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        g = Graph(n, frozenset(e for e in pairs if rng.random() < p))
        if g.is_connected():
            return g


def suite_nbc(sizes: list[int], graphs: int = 100, orders: int = 5, seed: int = 0) -> SuiteResult:
    def body(res):
        rng = random.Random(seed)
        for n in sizes:
            for _ in range(graphs):
                g = random_connected_graph(n, rng)
                ref = chrom_sym_q1(g)
                for _ in range(orders):
                    s = rng.randrange(1 << 30)
                    got = signed_e_sum_nbc(g, EdgeOrder.random(g, s))
                    _check(res, got == ref, lambda: f"edges {g.sorted_edges()}, order seed {s}: {got} != {ref}")
    return _run_suite("nbc", body)


def suite_crossval(sizes: list[int]) -> SuiteResult:
    def body(res):
        for n in sizes:
            for g in enumerate_nuigs(n):
                bf = x_brute_force(g)
                fs = ft.signed_e_sum(g)
                ll = x_from_llt(g)
                _check(res, bf == fs, lambda: f"G={g}: brute != forest ({first_difference(bf, fs)})")
                _check(res, bf == ll, lambda: f"G={g}: brute != llt ({first_difference(bf, ll)})")
                for mu, c in bf:
                    _check(res, is_palindromic(c, g.edge_count),
                           lambda: f"G={g}: e{list(mu)} coefficient {c} not palindromic about |E|/2")
    return _run_suite("crossval", body)


SUITES = ("involutions", "treelist", "kchain", "restriction", "twopart", "nbc", "crossval")


def run_suite(name: str, n: int | None, max_n: int | None) -> SuiteResult:
    defaults = {"involutions": 6, "treelist": 5, "kchain": 7, "restriction": 6,
                "twopart": 7, "nbc": 6, "crossval": 6}
    top = max_n or n or defaults[name]
    sizes = [n] if n is not None and max_n is None else list(range(1, top + 1))
    if name == "kchain":
        return suite_kchain(top)
    if name == "nbc":
        return suite_nbc([k for k in sizes if k >= 2])
    fn = {"involutions": suite_involutions, "treelist": suite_treelist,
          "restriction": suite_restriction, "twopart": suite_twopart,
          "crossval": suite_crossval}[name]
    return fn(sizes)


# -- argument parsing ------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source (exactly one)")
    src.add_argument("--family", choices=["path", "complete", "almostcomplete", "ladder", "kchain"])
    src.add_argument("--b", metavar="B1,B2,...", help="b-sequence b_2..b_n (empty string for one vertex)")
    src.add_argument("--edges", metavar="FILE", help="edge list: vertex count, then one 'i j' per line")
    p.add_argument("--n", type=int, help="vertex count for --family")
    p.add_argument("--gamma", help="clique sizes for --family kchain, e.g. 3,3")
    p.add_argument("--epsilon", help="0/1 flags for --family kchain, e.g. 0,1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromaq",
        description="e-expansions of chromatic quasisymmetric functions of natural unit interval graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="exit codes: 0 ok, 2 usage/input/limit error, 3 invariant violation, "
               "4 conjecture counterexample\nCHROMAQ_LIMIT_OVERRIDE=1 lifts the safety limits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "compute", help="e-expansion of one graph",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"--method all runs every applicable method and cross-checks them.\n"
               f"Limits: brute <= {DEFAULT_LIMIT} vertices, forest <= {ft.FOREST_LIMIT} vertices, "
               f"llt <= {EDGE_LIMIT} edges,\nnbc <= {NBC_ALL_LIMIT} vertices inside --method all (unbounded on its own),\n"
               f"kchain/twoclique unbounded. nbc (and any non-NUIG input) "
               f"is compared at q=1.",
    )
    _add_graph_args(p)
    p.add_argument("--method", default="forest", choices=ALL_METHODS + ("all",))
    p.add_argument("--order", default="lex", help="edge order for nbc: lex or random:<seed>")
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("scan", help="check positivity and shape properties for every NUIG on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--summary-only", action="store_true")
    p.add_argument("--inject-coefficient", metavar="C0,C1,...",
                   help="append a synthetic record with this coefficient (tests the exit-code paths)")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--n", type=int, help="single size")
    p.add_argument("--max-n", type=int, help="all sizes up to this bound")
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("enumerate", help="list NUIGs on n vertices, or forest triples of one graph")
    p.add_argument("what", nargs="?", default="nuigs", choices=["nuigs", "forests"])
    _add_graph_args(p)
    p.add_argument("--type", help="forest type filter, e.g. 3,2")
    p.add_argument("--format", default="text", choices=["text", "json"])
    return parser


# -- command handlers ------------------------------------------------------


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_compute(args) -> int:
    gi = graph_from_args(args)
    header = f"graph: {gi.label}  n={gi.graph.n}  |E|={len(gi.graph.edges)}"
    if args.method == "all":
        try:
            results, skipped = compute_all(gi, args.order)
        except InvariantViolation as exc:
            print(f"MISMATCH: {exc}", file=sys.stderr)
            return EXIT_INVARIANT
        lines = [header] + [f"{m}: {e}" for m, e in results.items()]
        lines += [f"{m}: skipped ({why})" for m, why in skipped.items()]
        lines.append(f"all {len(results)} methods agree")
        obj = {"graph": gi.to_json(), "results": {m: e.to_json() for m, e in results.items()},
               "q_specialized": [m for m in results if is_q_free(m, gi)],
               "skipped": skipped, "agree": True}
        _emit(obj, args.format, "\n".join(lines))
        return EXIT_OK
    why = applicable(args.method, gi)
    if why:
        print(f"error: method {args.method} not applicable: {why}", file=sys.stderr)
        return EXIT_USAGE
    e = run_method(args.method, gi, args.order)
    obj = {"graph": gi.to_json(), "method": args.method, "q_specialized": is_q_free(args.method, gi),
           "expansion": e.to_json()}
    _emit(obj, args.format, f"{header}\n{args.method}: {e}")
    return EXIT_OK


def cmd_scan(args) -> int:
    inject = _int_list(args.inject_coefficient) if args.inject_coefficient else None
    t0 = time.perf_counter()
    records = scan(args.n, args.jobs, inject)
    summary = scan_summary(records)
    summary["seconds"] = round(time.perf_counter() - t0, 3)
    code = scan_exit_code(summary)
    if args.format == "json":
        print(json.dumps({"n": args.n, "summary": summary, "exit_code": code,
                          "graphs": [] if args.summary_only else records}, indent=2))
        return code
    yn = {True: "yes", False: "NO"}
    if not args.summary_only:
        for r in records:
            name = "injected" if r.get("injected") else "b=(" + ",".join(map(str, r["b"])) + ")"
            print(f"{name}  e-positive={yn[r['e_positive']]}  palindromic={yn[r['palindromic']]}  "
                  f"unimodal={yn[r['e_unimodal']]}  log-concave={yn[r['e_log_concave']]}")
            for fail in r["failures"]:
                print(f"    e{fail['partition']}: {QPoly.from_json(fail['coeff'])}  fails {', '.join(fail['failed'])}")
    print(f"n={args.n}: {summary['graphs']} graphs, {summary['not_palindromic']} not palindromic, "
          f"{summary['not_e_positive']} not e-positive, {summary['not_e_unimodal']} not unimodal, "
          f"{summary['not_e_log_concave']} not log-concave  ({summary['seconds']}s)")
    if code == EXIT_INVARIANT:
        print("INVARIANT VIOLATION: a coefficient is not palindromic", file=sys.stderr)
    elif code == EXIT_CONJECTURE:
        print("CONJECTURE COUNTEREXAMPLE: see the records above", file=sys.stderr)
    return code


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    results = []
    for name in names:
        t0 = time.perf_counter()
        res = run_suite(name, args.n, args.max_n)
        results.append((res, time.perf_counter() - t0))
    if args.format == "json":
        print(json.dumps([{"suite": r.name, "checks": r.checks, "ok": r.ok, "failure": r.failure,
                           "seconds": round(dt, 3)} for r, dt in results], indent=2))
    else:
        for r, dt in results:
            status = "pass" if r.ok else "FAIL"
            print(f"{r.name}: {status} ({r.checks} checks, {dt:.2f}s)")
            if r.failure:
                print(f"  first counterexample: {r.failure}")
    return EXIT_OK if all(r.ok for r, _ in results) else EXIT_INVARIANT


def cmd_enumerate(args) -> int:
    if args.what == "nuigs":
        if args.n is None:
            raise GraphError("enumerate nuigs needs --n")
        gs = list(enumerate_nuigs(args.n))
        _emit([list(g.b) for g in gs], args.format,
              "\n".join(f"b=({g.b_string()})  |E|={g.edge_count}" for g in gs) + f"\n{len(gs)} graphs")
        return EXIT_OK
    gi = graph_from_args(args)
    if gi.nuig is None:
        raise GraphError("forest triples need a natural unit interval graph")
    g = gi.nuig
    type_filter = _int_list(args.type) if args.type else None
    fs = list(ft.enumerate_forest_triples(g, type_filter=type_filter))
    _emit([{"forest": str(f), "sign": f.sign, "weight": f.weight(g), "type": list(f.type)} for f in fs],
          args.format,
          "\n".join(f"{f}  sign={f.sign:+d}  weight={f.weight(g)}" for f in fs) + f"\n{len(fs)} forest triples")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"compute": cmd_compute, "scan": cmd_scan, "verify": cmd_verify,
               "enumerate": cmd_enumerate}[args.command]
    try:
        return handler(args)
    except (GraphError, LimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
