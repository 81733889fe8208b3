"""Command-line front end.

    multimatrix <subcommand> [flags] <input file>

Exit codes: 0 success, 1 invalid input, 2 guard or budget exceeded,
3 a checker produced a violation verdict.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

import multimatrix
from multimatrix.assign import (
    INTERPRETATION,
    brute_force_assign,
    reduction_bound,
    solve_axial_map,
)
from multimatrix.cli.generate import InstanceKind, generate
from multimatrix.cli.hunt import HuntConfig, Target, hunt
from multimatrix.cli.report import Report
from multimatrix.core import (
    BinaryMultimatrix,
    CostMultimatrix,
    Shape,
    digest,
    parse,
)
from multimatrix.det import (
    count_nonzero_monomials,
    find_nonzero_monomial,
    multideterminant,
    support_of,
    term_count,
)
from multimatrix.exceptions import FeasibilityError, InputError
from multimatrix.friendship import (
    PartitionedGraph,
    check_friendship_theorem,
    clique_decomposition,
    graph_digest,
    hall_condition,
    parse_graph,
)
from multimatrix.limits import DEFAULT_LIMITS, Limits
from multimatrix.menger import (
    check_cover_matching,
    check_separator_paths,
    max_disjoint_path_system,
    max_matching_multipartite,
    min_all_pairs_separator,
    min_vertex_cover_multipartite,
)
from multimatrix.minimax import (
    ScanMode,
    duality_gap,
    gap_scan,
    max_rplane_matching,
    min_rplane_cover,
)

logger = logging.getLogger("multimatrix.cli")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_VIOLATION = 3

SUFFIXES = {
    InstanceKind.MULTIMATRIX: "mm",
    InstanceKind.COSTMATRIX: "cmm",
    InstanceKind.GRAPH: "pg",
}

Handler = Callable[[argparse.Namespace, Limits], Report | bytes]

EPILOG = """\
mm and cmm instances are cubic. A rectangular m x l acquaintance matrix
(m <= l) is entered as the l x l matrix padded with zero rows, as pad_to_square
does; in a sparse mm file the padded cells are simply absent.
"""


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_INPUT instead of argparse's 2, the guard code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _binary(path: Path) -> tuple[BinaryMultimatrix, str]:
    text = _read(path)
    m = parse(text)
    if not isinstance(m, BinaryMultimatrix):
        raise InputError(f"{path} holds a cost multimatrix; expected 'mm'")
    return m, digest(m)


def _costs(path: Path) -> tuple[CostMultimatrix, str]:
    c = parse(_read(path))
    if not isinstance(c, CostMultimatrix):
        raise InputError(f"{path} holds a binary multimatrix; expected 'cmm'")
    return c, digest(c)


def _graph(path: Path) -> tuple[PartitionedGraph, str]:
    g = parse_graph(_read(path))
    return g, graph_digest(g)


def _cells(cells: Sequence[tuple[int, ...]]) -> list[str]:
    return [" ".join(map(str, c)) for c in cells]


def _det(args: argparse.Namespace, limits: Limits) -> Report:
    m, key = _binary(args.input)
    report = Report("det", key).add("n", m.shape.n).add("k", m.shape.k)
    return report.add("terms", term_count(m.shape)).add("value", multideterminant(m, limits))


def _monomial_find(args: argparse.Namespace, limits: Limits) -> Report:
    m, key = _binary(args.input)
    t = find_nonzero_monomial(m)
    report = Report("monomial-find", key).add("found", t is not None)
    if t is not None:
        report.add("tuple", t).add("sign", t.sign)
        report.block("support", _cells(support_of(m.shape, t)))
    return report


def _monomial_count(args: argparse.Namespace, limits: Limits) -> Report:
    m, key = _binary(args.input)
    counted = count_nonzero_monomials(m, args.cap)
    report = Report("monomial-count", key).add("terms", term_count(m.shape))
    return report.add("nonzero", counted.count).add("capped", counted.capped)


def _hall_check(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    result = hall_condition(g)
    report = Report("hall-check", key).add("holds", result.holds)
    if result.violation is not None:
        v = result.violation
        report.add("source", v.source).add("target", v.target)
        report.add("subset", " ".join(map(str, v.subset)))
        report.add("neighborhood", " ".join(map(str, v.neighborhood)))
        report.add("deficiency", v.deficiency)
        report.add("pair_deficiency", v.pair_deficiency)
    return report


def _decompose(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    d = clique_decomposition(g)
    report = Report("decompose", key).add("decomposable", d is not None)
    if d is not None:
        report.add("tuple", d.monomial)
        report.block("sets", [" ".join(map(str, s)) for s in d.sets])
    return report


def _check_t21(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    result = check_friendship_theorem(g)
    report = Report("check-t21", key).add("hall", result.hall.holds)
    report.add("decomposable", result.decomposable).add("verdict", result.verdict)
    if result.decomposition is not None:
        report.block("sets", [" ".join(map(str, s)) for s in result.decomposition.sets])
    report.violation = result.verdict.is_violation
    return report


def _plane_cover(name: str, r: int | None = None) -> Handler:
    def run(args: argparse.Namespace, limits: Limits) -> Report:
        m, key = _binary(args.input)
        cover = min_rplane_cover(m, r or args.r, limits)
        report = Report(name, key).add("r", cover.r).add("alpha", cover.size)
        return report.block("cover_planes", cover.planes)

    return run


def _plane_matching(name: str, r: int | None = None) -> Handler:
    def run(args: argparse.Namespace, limits: Limits) -> Report:
        m, key = _binary(args.input)
        matching = max_rplane_matching(m, r or args.r, limits)
        report = Report(name, key).add("r", matching.r).add("beta", matching.size)
        return report.block("matching_cells", _cells(matching.cells))

    return run


def _gap(args: argparse.Namespace, limits: Limits) -> Report:
    m, key = _binary(args.input)
    result = duality_gap(m, args.r, limits)
    report = Report("gap", key).add("r", args.r)
    report.add("alpha", result.alpha).add("beta", result.beta).add("gap", result.gap)
    report.add("verdict", "gap" if result.gap else "equal")
    report.block("cover_planes", result.cover.planes)
    report.block("matching_cells", _cells(result.matching.cells))
    report.violation = result.gap > 0
    return report


def _gap_scan(args: argparse.Namespace, limits: Limits) -> Report:
    shape = Shape(args.n, args.k)
    scan = gap_scan(
        shape, args.r, args.mode, args.count, args.seed, args.out, args.density, limits
    )
    report = Report("gap-scan", seed=args.seed if scan.mode is ScanMode.RANDOM else None)
    report.add("n", shape.n).add("k", shape.k).add("r", scan.r).add("mode", scan.mode)
    report.add("instances", scan.count).add("findings", len(scan.findings))
    report.block("histogram", [f"{gap} {n}" for gap, n in scan.histogram.items()])
    report.block(
        "violations",
        [f"{f.index} alpha={f.alpha} beta={f.beta} {f.digest}" for f in scan.findings],
    )
    report.violation = bool(scan.findings)
    return report


def _assign(args: argparse.Namespace, limits: Limits) -> Report:
    c, key = _costs(args.input)
    result = brute_force_assign(c, limits) if args.oracle else solve_axial_map(c, limits)
    bound, _ = reduction_bound(c)
    report = Report("assign", key).add("n", c.shape.n).add("k", c.shape.k)
    report.add("interpretation", INTERPRETATION)
    report.add("method", "enumeration" if args.oracle else "branch-and-bound")
    report.add("cost", result.cost).add("tuple", result.tuple).add("reduction_bound", bound)
    if result.stats is not None:
        report.add("nodes", result.stats.nodes).add("pruned", result.stats.pruned)
    if args.check:
        report.add("brute_force_cost", brute_force_assign(c, limits).cost)
    return report.block("cells", _cells(support_of(c.shape, result.tuple)))


def _edges(edges: Sequence[tuple[int, int]]) -> list[str]:
    return [f"{u} {v}" for u, v in edges]


def _cover_match(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    cover = min_vertex_cover_multipartite(g, limits)
    matching = max_matching_multipartite(g, limits)
    report = Report("cover-match", key).add("cover", cover.size).add("matching", matching.size)
    report.block("cover_vertices", [" ".join(map(str, cover.vertices))])
    return report.block("matching_edges", _edges(matching.edges))


def _check_t43(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    result = check_cover_matching(g, limits)
    report = Report("check-t43", key)
    report.add("cover", result.cover.size).add("matching", result.matching.size)
    report.add("gap", result.gap).add("verdict", result.verdict)
    report.block("cover_vertices", [" ".join(map(str, result.cover.vertices))])
    report.block("matching_edges", _edges(result.matching.edges))
    report.violation = result.verdict.is_violation
    return report


def _paths(paths: Sequence[tuple[int, ...]]) -> list[str]:
    return [" ".join(map(str, p)) for p in paths]


def _menger(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    separator = min_all_pairs_separator(g, limits)
    system = max_disjoint_path_system(g, limits)
    report = Report("menger", key).add("separator", separator.size).add("paths", system.size)
    report.block("separator_vertices", [" ".join(map(str, separator.vertices))])
    return report.block("path_system", _paths(system.paths))


def _check_t51(args: argparse.Namespace, limits: Limits) -> Report:
    g, key = _graph(args.input)
    result = check_separator_paths(g, limits)
    report = Report("check-t51", key)
    report.add("separator", result.separator.size).add("paths", result.paths.size)
    report.add("gap", result.gap).add("verdict", result.verdict)
    report.block("separator_vertices", [" ".join(map(str, result.separator.vertices))])
    report.block("path_system", _paths(result.paths.paths))
    report.violation = result.verdict.is_violation
    return report


def _parts(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated sizes, got {text!r}") from None


def _gen(args: argparse.Namespace, limits: Limits) -> Report | bytes:
    text = generate(
        args.kind, args.n, args.k, args.seed, args.density, args.low, args.high, args.parts
    )
    if args.out is None:
        return text
    kind = InstanceKind(args.kind)
    suffix = SUFFIXES[kind]
    args.out.mkdir(parents=True, exist_ok=True)
    path = args.out / f"{kind}-n{args.n}-k{args.k}-s{args.seed}.{suffix}"
    path.write_bytes(text)
    key = graph_digest(text) if kind is InstanceKind.GRAPH else digest(text)
    return Report("gen", key, args.seed).add("kind", kind).add("path", path)


def _hunt(args: argparse.Namespace, limits: Limits) -> Report:
    config = HuntConfig(
        Target(args.target),
        args.n,
        args.k,
        args.count,
        seed=args.seed,
        r=args.r,
        density=args.density,
        shrink=not args.no_shrink,
        out_dir=args.out,
    )
    result = hunt(config, limits)
    report = Report("hunt", seed=args.seed).add("target", config.target)
    report.add("n", config.n).add("k", config.k).add("r", config.r)
    report.add("density", config.density).add("instances", config.count)
    report.add("findings", len(result.findings))
    lines = []
    for f in result.findings:
        line = f"{f.index} {f.verdict} {f.digest}"
        if f.shrunk_digest is not None:
            line += f" shrunk={f.shrunk_digest} size={f.shrunk_size}"
        lines.append(line)
    report.block("violations", lines)
    report.violation = bool(result.findings)
    return report


def _common() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for gen, hunt and random scans")
    common.add_argument("--out", type=Path, help="directory for generated or found instances")
    common.add_argument("--guard", type=int, help="vertex guard; also raises the cell budget")
    common.add_argument("--budget", type=int, help="term, enumeration and scan budget")
    common.add_argument("--workers", type=int, default=0, help="process pool size (0 = inline)")
    common.add_argument("--quiet", action="store_true", help="log warnings only")
    common.add_argument("-v", "--verbose", action="store_true", help="log search details")
    return common


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="multimatrix",
        description="Multideterminants, plane covers and friendship decompositions.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=multimatrix.__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    def command(
        name: str, handler: Handler, summary: str, takes_input: bool = True
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=summary)
        if takes_input:
            p.add_argument("input", type=Path)
        p.set_defaults(handler=handler)
        return p

    command("det", _det, "multideterminant of a binary multimatrix (rectangular: zero-pad)")
    command("monomial-find", _monomial_find, "least permutation tuple with a nonzero monomial")
    p = command("monomial-count", _monomial_count, "number of nonzero monomials")
    p.add_argument("--cap", type=int, help="stop counting at this many")
    command("hall-check", _hall_check, "pairwise Hall condition of a partitioned graph")
    command("decompose", _decompose, "clique decomposition of a friendship graph")
    command("check-t21", _check_t21, "Hall condition against decomposability")
    command("line-cover", _plane_cover("line-cover", 1), "minimum line cover")
    command("line-matching", _plane_matching("line-matching", 1), "maximum line matching")
    p = command("rplane-cover", _plane_cover("rplane-cover"), "minimum r-plane cover")
    p.add_argument("--r", type=int, required=True)
    p = command("rplane-matching", _plane_matching("rplane-matching"), "maximum r-plane matching")
    p.add_argument("--r", type=int, required=True)
    p = command("gap", _gap, "r-plane cover against r-plane matching")
    p.add_argument("--r", type=int, default=1)

    p = command("gap-scan", _gap_scan, "duality gap histogram over a family", takes_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--mode", choices=[m.value for m in ScanMode], default=ScanMode.EXHAUSTIVE)
    p.add_argument("--count", type=int, default=0, help="instances in random mode")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--golden", action="store_true", help="print the histogram block only")

    p = command("assign", _assign, "axial multidimensional assignment")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--oracle", action="store_true", help="solve by full enumeration only")
    how.add_argument("--check", action="store_true", help="cross-check against full enumeration")
    command("cover-match", _cover_match, "vertex cover and matching of a multipartite graph")
    command("check-t43", _check_t43, "vertex cover against matching")
    command("menger", _menger, "all-pairs separator and disjoint path system")
    command("check-t51", _check_t51, "separator against disjoint paths")

    p = command("gen", _gen, "seeded random instance", takes_input=False)
    p.add_argument("kind", choices=[k.value for k in InstanceKind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--low", type=int, default=0)
    p.add_argument("--high", type=int, default=9)
    p.add_argument("--parts", type=_parts, help="graph part sizes, e.g. 3,4")

    p = command("hunt", _hunt, "seeded counterexample search", takes_input=False)
    p.add_argument("--target", choices=[t.value for t in Target], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--no-shrink", action="store_true")
    return parser


def limits_from(args: argparse.Namespace) -> Limits:
    limits = DEFAULT_LIMITS.replace(workers=max(args.workers, 0))
    if args.guard is not None:
        limits = limits.replace(
            vertex_guard=args.guard, cell_budget=max(limits.cell_budget, args.guard)
        )
    if args.budget is not None:
        limits = limits.replace(
            term_limit=args.budget, enumeration_budget=args.budget, scan_budget=args.budget
        )
    return limits


def _configure_logging(args: argparse.Namespace) -> None:
    root = logging.getLogger("multimatrix")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    if args.verbose:
        root.setLevel(logging.DEBUG)
    elif args.quiet:
        root.setLevel(logging.WARNING)
    else:
        root.setLevel(logging.INFO)


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    _configure_logging(args)
    started = time.perf_counter()
    try:
        result = args.handler(args, limits_from(args))
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except FeasibilityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD

    if isinstance(result, bytes):
        sys.stdout.write(result.decode("utf-8"))
        return EXIT_OK
    if getattr(args, "golden", False):
        sys.stdout.write("".join(f"{line}\n" for line in _golden(result)))
    else:
        result.elapsed_ms = (time.perf_counter() - started) * 1000
        sys.stdout.write(result.render())
    logger.debug("%s finished with violation=%s", args.command, result.violation)
    return EXIT_VIOLATION if result.violation else EXIT_OK


def _golden(report: Report) -> list[str]:
    lines = dict(report.blocks)["histogram"]
    return ["[histogram]", *lines, "[end]"]


if __name__ == "__main__":
    sys.exit(main())
