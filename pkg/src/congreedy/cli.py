"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 search budget exhausted,
3 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import fixtures
from .classify import classify, connected_chromatic_number, connected_grundy_number, great_by_biconnected, great_violation, grundy_with_witness
from .constructive import comparability_good_ordering, k4mf_good_ordering, perfect_run
from .errors import BudgetExhausted, CongreedyError, GraphParseError
from .exact import SearchBudget, chromatic_number, maximum_clique
from .generators import knn_minus_matching
from .graph import Graph, format_dimacs, format_edge_list, parse_graph, recognize
from .greedy import check_permutation, greedy_colouring, is_connected_ordering

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["dimacs", "edges"], default="dimacs", help="graph input/output format")
    p.add_argument("--budget-nodes", type=int, default=None, metavar="N")
    p.add_argument("--budget-ms", type=int, default=None, metavar="N")
    p.add_argument("--table", action="store_true", help="human-readable output instead of JSON")
    p.add_argument("--expensive", action="store_true", help="allow full searches on the large fixtures")
    return p


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", default="-", help="graph file, or - for stdin (default)")
    p.add_argument("--fixture", choices=fixtures.NAMES, help="use a bundled fixture instead of a file")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="congreedy", description="Connected greedy colouring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [
        ("chi", "chromatic number with an optimal colouring"),
        ("omega", "clique number with a maximum clique"),
        ("grundy", "Grundy number over all orderings"),
        ("gamma-c", "connected Grundy number"),
        ("chi-c", "connected greedy chromatic number"),
        ("great", "exhaustive great-graph test"),
    ]:
        _graph_args(sub.add_parser(name, parents=[common], help=help_))

    p = sub.add_parser("classify", parents=[common], help="good / bad / ugly verdict")
    _graph_args(p)
    p.add_argument("--gamma", action="store_true", help="also compute the Grundy number")

    p = sub.add_parser("recognize", parents=[common], help="graph class membership")
    p.add_argument("cls", choices=["bipartite", "block", "cactus", "k4-minor-free"])
    _graph_args(p)

    p = sub.add_parser("ordering", parents=[common], help="constructive good connected ordering")
    p.add_argument("pipeline", choices=["k4mf", "comparability", "perfect"])
    _graph_args(p)
    p.add_argument("--start", default=None, help="start vertex (perfect pipeline)")
    p.add_argument("--trusted-perfect", action="store_true", help="skip the perfection check")

    p = sub.add_parser("verify-ordering", parents=[common], help="replay an ordering")
    p.add_argument("ordering", help="vertices as a JSON array or comma/space separated ids or labels")
    _graph_args(p)

    p = sub.add_parser("fixture", parents=[common], help="print a bundled fixture graph")
    p.add_argument("name", choices=fixtures.NAMES)
    p.add_argument("--info", action="store_true", help="print metadata as JSON instead of the graph")

    p = sub.add_parser("gen", parents=[common], help="print a generated graph")
    p.add_argument("family", choices=["knn-minus-matching"])
    p.add_argument("n", type=int)
    return parser


def _load_graph(args: argparse.Namespace, stdin: TextIO) -> Graph:
    if args.fixture:
        fx = fixtures.load(args.fixture)
        if fx.expensive and not args.expensive and args.command in ("classify", "chi-c", "gamma-c", "great", "grundy"):
            raise CongreedyError(f"fixture {fx.name} needs a large search; pass --expensive")
        return fx.graph
    if args.graph == "-":
        text = stdin.read()
    else:
        try:
            with open(args.graph, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {args.graph}: {exc.strerror}") from None
    return parse_graph(text, args.format)


def _vertex(g: Graph, token: str) -> int:
    token = token.strip()
    if g.labels is not None and token in g.labels:
        return g.labels.index(token)
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"unknown vertex {token!r}") from None


def _parse_ordering(g: Graph, text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"bad ordering JSON: {exc.msg}") from None
        return [_vertex(g, str(x)) for x in items]
    return [_vertex(g, tok) for tok in text.replace(",", " ").split()]


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(args.budget_nodes, args.budget_ms)


def _certify(g: Graph, ordering: list[int], budget: SearchBudget) -> dict:
    replay = greedy_colouring(g, ordering)
    chi = chromatic_number(g, budget)[0]
    return {
        "ordering": ordering,
        "colouring": replay.to_list(),
        "colours": replay.max_colour,
        "connected": is_connected_ordering(g, ordering),
        "chi": chi,
        "good": replay.max_colour == chi,
    }


def _execute(args: argparse.Namespace, stdin: TextIO) -> dict | str:
    cmd = args.command
    if cmd == "fixture":
        fx = fixtures.load(args.name)
        if args.info:
            return {"name": fx.name, "n": fx.graph.n, "m": fx.graph.m, "expected": fx.expected,
                    "provenance": fx.provenance, "expensive": fx.expensive}
        return _emit_graph(fx.graph, args.format, [fx.name])
    if cmd == "gen":
        return _emit_graph(knn_minus_matching(args.n), args.format, [f"K_{{{args.n},{args.n}}} minus a perfect matching"])

    g = _load_graph(args, stdin)
    budget = _budget(args)
    if cmd == "chi":
        chi, colouring = chromatic_number(g, budget)
        return {"chi": chi, "colouring": colouring.to_list()}
    if cmd == "omega":
        clique = maximum_clique(g, budget)
        return {"omega": len(clique), "clique": clique}
    if cmd == "grundy":
        gamma, witness = grundy_with_witness(g, budget)
        return {"gamma": gamma, "witness": witness}
    if cmd == "gamma-c":
        gamma_c, witness = connected_grundy_number(g, budget)
        return {"gamma_c": gamma_c, "witness": witness}
    if cmd == "chi-c":
        chi = chromatic_number(g, budget)[0]
        chi_c, witness = connected_chromatic_number(g, budget, chi=chi)
        return {"chi_c": chi_c, "chi": chi, "witness": witness}
    if cmd == "classify":
        return classify(g, budget, compute_gamma=args.gamma).to_dict()
    if cmd == "great":
        violation = great_violation(g, budget)
        out: dict = {"great": violation is None}
        if violation is not None:
            out["violation"] = {"ordering": violation[0], "seed": violation[1]}
        out["by_biconnected"] = great_by_biconnected(g, budget)
        return out
    if cmd == "recognize":
        return {"class": args.cls, "result": recognize(g, args.cls)}
    if cmd == "ordering":
        if args.pipeline == "k4mf":
            ordering = k4mf_good_ordering(g)
        elif args.pipeline == "comparability":
            ordering = comparability_good_ordering(g)
        else:
            start = _vertex(g, args.start) if args.start is not None else 0
            ordering = perfect_run(g, start, budget, trusted_perfect=args.trusted_perfect).ordering
        return {"pipeline": args.pipeline, **_certify(g, ordering, budget)}
    if cmd == "verify-ordering":
        ordering = _parse_ordering(g, args.ordering)
        check_permutation(g, ordering)
        return _certify(g, ordering, budget)
    raise UsageError(f"unknown command {cmd}")


def _emit_graph(g: Graph, fmt: str, comments: list[str]) -> str:
    return format_dimacs(g, comments) if fmt == "dimacs" else format_edge_list(g)


def _render(result: dict | str, table: bool) -> str:
    if isinstance(result, str):
        return result
    if not table:
        return json.dumps(result) + "\n"
    width = max(len(k) for k in result)
    return "".join(f"{k:<{width}}  {json.dumps(v) if not isinstance(v, str) else v}\n" for k, v in result.items())


def cmd_run(argv: Sequence[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_PARSE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_PARSE
    try:
        result = _execute(args, stdin)
    except GraphParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except BudgetExhausted as exc:
        stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except (CongreedyError, KeyError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    stdout.write(_render(result, args.table))
    return EXIT_OK


def main() -> None:
    sys.exit(cmd_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
