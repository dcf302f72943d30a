"""Command-line application for tensegrity-strata."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.text import Text

from . import __version__
from .analysis import (
    apply_surgery,
    atom_sum,
    decompose,
    fiber_equivalent,
    fingerprint,
    is_self_stress,
    self_stress_space,
    sign_matrix,
    tau_report,
)
from .analysis.surgery import surgery_graphs
from .catalog import catalog_list, lookup, prism_labeling_search, prop22_scan, verify
from .config import Config
from .exceptions import InputError, PreconditionError, TensegrityError
from .formats import (
    dumps_points,
    load_condition_system,
    load_framework,
    load_graph,
    load_points,
    load_surgery,
    write_svg,
)
from .geometry import conditional_number, construct_configuration, evaluate_system
from .models import Framework, Stress
from .sampling import Lcg64
from .themes import CONSOLE_THEME
from .utils import edge_label, format_rational, format_vector

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class TensegrityApp:
    """Runs one subcommand and writes its report to the console."""

    def __init__(self, config: Config, console: Console, seed: int, samples: int):
        self.config = config
        self.console = console
        self.seed = seed
        self.samples = samples

    def line(self, key: str, value: object = "", style: Optional[str] = None) -> None:
        text = Text.assemble((key, "key"), ": ", (str(value), style or ""))
        self.console.print(text)

    def plain(self, value: str, style: Optional[str] = None) -> None:
        self.console.print(Text(value, style=style or ""))

    def _stress_or_basis(self, framework: Framework, stress: Optional[Stress]) -> Optional[Stress]:
        if stress is not None:
            return stress
        space = self_stress_space(framework)
        return space.basis[0] if space.dim else None

    def _print_stress(self, prefix: str, stress: Stress) -> None:
        for e, w in zip(stress.edges, stress.values):
            self.line(f"{prefix} {edge_label(e)}", format_rational(w))

    # -- subcommands ---------------------------------------------------------

    def stress(self, args: argparse.Namespace) -> int:
        doc = load_framework(args.file)
        f = doc.framework
        space = self_stress_space(f)
        self.plain(f"dim = {space.dim}")
        self.line("edges", " ".join(edge_label(e) for e in f.graph.edge_order))
        for index, w in enumerate(space.basis, start=1):
            self.line(f"basis[{index}]", format_vector(w.values))
            self.line(f"signs[{index}]", sign_matrix(w, f.n).pattern())
            for row in sign_matrix(w, f.n).as_rows():
                self.plain("  " + " ".join(f"{s:>2}" for s in row), "muted")
        if doc.stress is not None:
            ok = is_self_stress(f, doc.stress)
            self.line("given stress", "self-stress" if ok else "not a self-stress", "pass" if ok else "fail")
        return EXIT_OK

    def signs(self, args: argparse.Namespace) -> int:
        fp = fingerprint(load_framework(args.file).framework)
        self.line("symbols", len(fp))
        self.line("digest", fp.digest())
        for row in fp.canonical().splitlines():
            self.plain(row)
        return EXIT_OK

    def same_stratum(self, args: argparse.Namespace) -> int:
        f1 = load_framework(args.first).framework
        f2 = load_framework(args.second).framework
        same = fiber_equivalent(f1, f2)
        self.line("fiber-equivalent", "yes" if same else "no", "pass" if same else "fail")
        return EXIT_OK if same else EXIT_NEGATIVE

    def tc(self, args: argparse.Namespace) -> int:
        graph = load_graph(args.file)
        report = tau_report(
            graph, args.dim, seed=self.seed, samples=self.samples, bound=self.config.sampling.coordinate_bound
        )
        self.line("d", report.d)
        self.line("samples", report.samples_used)
        self.line("dims", " ".join(str(d) for d in report.dims))
        self.line("generic dim", report.generic_dim)
        self.plain(report.verdict())
        if report.witness is not None:
            system = report.witness.system
            self.line("witness-system", system.name)
            self.line("witness-description", system.description)
            self.line("witness-dims", " ".join(str(d) for d in report.witness.dims))
        return EXIT_OK

    def decompose(self, args: argparse.Namespace) -> int:
        doc = load_framework(args.file)
        f = doc.framework
        w = self._stress_or_basis(f, doc.stress)
        if w is None:
            self.line("atoms", 0)
            return EXIT_OK
        atoms = decompose(f, w)
        self.line("atoms", len(atoms))
        for atom in atoms:
            support = ",".join(str(v) for v in atom.support)
            self.line(f"atom {support}", f"{format_rational(atom.coefficient)} * {format_vector(atom.stress.values)}")
        total = atom_sum(f, atoms)
        matches = total.restrict_to(f.graph) == w
        self.line("sum matches", "yes" if matches else "no", "pass" if matches else "fail")
        return EXIT_OK if matches else EXIT_NEGATIVE

    def surgery(self, args: argparse.Namespace) -> int:
        doc = load_framework(args.framework)
        f = doc.framework
        spec = load_surgery(args.spec, f.graph)
        source_graph, _ = surgery_graphs(f, spec)
        if doc.stress is not None:
            w = doc.stress.restrict_to(source_graph)
        else:
            space = self_stress_space(f.with_graph(source_graph))
            if space.dim == 0:
                raise InputError("the source framework has no self-stress to transport")
            w = space.basis[0]
        result = apply_surgery(f, spec, w)
        self.line("direction", spec.direction.value)
        self.line("source dim", self_stress_space(result.source).dim)
        self.line("target dim", self_stress_space(result.target).dim)
        for name in result.checked:
            self.line("checked", name)
        self._print_stress("tension", result.stress)
        return EXIT_OK

    def condition_eval(self, args: argparse.Namespace) -> int:
        system = load_condition_system(args.system)
        points = load_points(args.points)
        if len(points) != system.base_count:
            raise InputError(f"{system.name} needs {system.base_count} points, got {len(points)}")
        result = evaluate_system(system, points)
        self.line("system", system.name)
        self.line("conditional number", conditional_number(system))
        for entry in result.trace:
            self.line("trace", entry)
        self.line("satisfied", "yes" if result.satisfied else "no", "pass" if result.satisfied else "fail")
        return EXIT_OK if result.satisfied else EXIT_NEGATIVE

    def condition_sample(self, args: argparse.Namespace) -> int:
        system = load_condition_system(args.system)
        points = construct_configuration(system, Lcg64.seeded(self.seed))
        text = dumps_points(points)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            self.line("written", args.output)
        else:
            self.console.print(Text(text.rstrip("\n")))
        return EXIT_OK

    def catalog_list(self, args: argparse.Namespace) -> int:
        for entry in catalog_list():
            self.line(
                entry.name,
                f"{entry.provenance.value} d={entry.d} n={entry.graph.n} edges={entry.graph.edge_count}",
            )
        return EXIT_OK

    def catalog_verify(self, args: argparse.Namespace) -> int:
        entries = [lookup(args.name)] if args.name else catalog_list()
        failed = False
        for entry in entries:
            report = verify(entry, self.seed, self.config.catalog, self.samples)
            failed |= not report.passed
            self.line(entry.name, report.status, "pass" if report.passed else "fail")
            for claim in report.claims:
                mark = "pass" if claim.passed else "FAIL"
                detail = f" ({claim.detail})" if claim.detail else ""
                self.plain(f"  {mark} {claim.claim}{detail}", None if claim.passed else "fail")
        return EXIT_NEGATIVE if failed else EXIT_OK

    def catalog_scan(self, args: argparse.Namespace) -> int:
        failed = False
        for row in prop22_scan(seed=self.seed, samples=self.samples):
            failed |= row.status == "fail"
            if row.status == "skipped":
                self.line(row.name, f"skipped ({row.reason})", "warn")
            else:
                self.line(row.name, f"{row.status} k-2n+3={row.predicted} generic={row.generic}")
        return EXIT_NEGATIVE if failed else EXIT_OK

    def catalog_labeling(self, args: argparse.Namespace) -> int:
        chosen, results = prism_labeling_search(self.seed, self.config.catalog)
        for result in results:
            label = ",".join(str(v) for v in result.triangle)
            self.line(f"triangle {label}", "PASS" if result.passed else "fail")
        self.line("labeling", ",".join(str(v) for v in chosen) if chosen else "none")
        return EXIT_OK if chosen else EXIT_NEGATIVE

    def render(self, args: argparse.Namespace) -> int:
        doc = load_framework(args.file)
        if doc.framework.d != 2:
            raise InputError(f"render supports d=2 only, got d={doc.framework.d}")
        stress = self._stress_or_basis(doc.framework, doc.stress)
        write_svg(args.output, doc.framework, stress, self.config.render)
        self.line("written", args.output)
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default from config, 1)")
    common.add_argument(
        "--samples", type=int, default=argparse.SUPPRESS, help="random samples per estimate (default 3)"
    )
    parser = argparse.ArgumentParser(
        prog="tensegrity-strata",
        description="Exact self-stresses, strata and tensegrity characteristics of frameworks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=None, help="random seed (default from config, 1)")
    parser.add_argument("--samples", type=int, default=None, help="random samples per estimate (default 3)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more (-vv for debug)")
    parser.add_argument("--no-color", action="store_true", help="plain output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stress", parents=[common], help="self-stress space of a framework")
    p.add_argument("file")
    p.set_defaults(handler=TensegrityApp.stress)

    p = sub.add_parser("signs", parents=[common], help="stratum fingerprint of a framework")
    p.add_argument("file")
    p.set_defaults(handler=TensegrityApp.signs)

    p = sub.add_parser(
        "same-stratum",
        parents=[common],
        help="fiber equivalence of two frameworks on one graph",
        description="Compares fingerprints: equal fingerprints mean the two linear fibers are "
        "sign-preservingly equivalent. This is not a test of stratum path-connectivity.",
    )
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=TensegrityApp.same_stratum)

    p = sub.add_parser("tc", parents=[common], help="tensegrity d-characteristic of a graph")
    p.add_argument("file")
    p.add_argument("--dim", type=int, default=2)
    p.set_defaults(handler=TensegrityApp.tc)

    p = sub.add_parser("decompose", parents=[common], help="atom decomposition of a stress")
    p.add_argument("file")
    p.set_defaults(handler=TensegrityApp.decompose)

    p = sub.add_parser("surgery", parents=[common], help="graph surgeries")
    surgery = p.add_subparsers(dest="action", required=True)
    q = surgery.add_parser("apply", parents=[common], help="transport a self-stress through a surgery")
    q.add_argument("spec")
    q.add_argument("framework")
    q.set_defaults(handler=TensegrityApp.surgery)

    p = sub.add_parser("condition", parents=[common], help="projective condition systems")
    condition = p.add_subparsers(dest="action", required=True)
    q = condition.add_parser("eval", parents=[common], help="evaluate a system at given points")
    q.add_argument("system")
    q.add_argument("points")
    q.set_defaults(handler=TensegrityApp.condition_eval)
    q = condition.add_parser("sample", parents=[common], help="construct points satisfying a system")
    q.add_argument("system")
    q.add_argument("-o", "--output")
    q.set_defaults(handler=TensegrityApp.condition_sample)

    p = sub.add_parser("catalog", parents=[common], help="named graphs and their claims")
    catalog = p.add_subparsers(dest="action", required=True)
    q = catalog.add_parser("list", parents=[common])
    q.set_defaults(handler=TensegrityApp.catalog_list)
    q = catalog.add_parser("verify", parents=[common])
    q.add_argument("name", nargs="?")
    q.set_defaults(handler=TensegrityApp.catalog_verify)
    q = catalog.add_parser("scan", parents=[common], help="compare generic dims with k-2n+3")
    q.set_defaults(handler=TensegrityApp.catalog_scan)
    q = catalog.add_parser("labeling", parents=[common], help="search the prism triangle labeling")
    q.set_defaults(handler=TensegrityApp.catalog_labeling)

    p = sub.add_parser("render", parents=[common], help="draw a planar tensegrity as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=TensegrityApp.render)
    return parser


def setup_logging(verbosity: int, no_color: bool) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    handler = RichHandler(
        console=Console(stderr=True, no_color=no_color),
        show_time=False,
        show_path=False,
    )
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose, args.no_color)
    console = Console(highlight=False, soft_wrap=True, theme=CONSOLE_THEME, no_color=args.no_color)
    errors = Console(stderr=True, highlight=False, soft_wrap=True, no_color=args.no_color)
    try:
        config = Config.load(Path.cwd())
        seed = config.sampling.seed if args.seed is None else args.seed
        samples = config.sampling.samples if args.samples is None else args.samples
        if samples < 1:
            raise InputError("--samples must be at least 1")
        app = TensegrityApp(config, console, seed, samples)
        return args.handler(app, args)
    except PreconditionError as e:
        message = str(e) if e.name in str(e) else f"{e} [{e.name}]"
        errors.print(Text(f"error: {message}"))
        return EXIT_ERROR
    except TensegrityError as e:
        errors.print(Text(f"error: {e}"))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
