"""infodist command line: estimators, distances, trees and oracle experiments."""
from __future__ import annotations

import argparse
import itertools
import sys
from typing import Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv

from infodist import __version__
from infodist.alphabet import Alphabet, SymbolString
from infodist.cli.exceptions import IoFailure, UsageError
from infodist.cli.experiment import format_table, run_experiment
from infodist.cli.ingest import CorpusItem, IngestMode, ingest, ingest_corpus, parse_alphabet
from infodist.cli.output import Output, emit_all
from infodist.distances import ConditionalMode, DistanceSpec, DivergenceMethod, Metric, distance_matrix
from infodist.divergence import ReferenceRates, concat_conjecture, cross_code_divergence, zm_divergence
from infodist.estimators import (
    EstimatorChoice,
    EstimatorKind,
    adapter_from_command,
    conditional_entropy_direct,
    conditional_entropy_indirect,
    joint_entropy,
)
from infodist.exceptions import InfodistError
from infodist.phylo import neighbor_joining, read_phylip, to_newick, upgma, write_phylip
from infodist.presets import load_preset_sources
from infodist.sources import (
    ConditionalDirection,
    MarginalNotMarkov,
    SourceSpec,
    exact_conditional_entropy_rate,
    exact_divergence_rate,
    exact_entropy_rate,
    exact_joint_entropy_rate,
    load_source_spec,
    sample,
    sample_pair,
)
from utils.config import DEFAULT_CONFIG, Settings, load_settings
from utils.logger import get_logger, init_logger
from utils.observability import setup_telemetry, tracing_requested

logger = get_logger(__name__)


# Shared option groups


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=[m.value for m in IngestMode], default=IngestMode.BYTES.value, help="ingestion mode")
    p.add_argument("--alphabet", help="text mode only: whitespace-separated symbol tokens, e.g. 'a b c d'")


def _add_estimator_options(p: argparse.ArgumentParser, settings: Settings) -> None:
    p.add_argument("--estimator", choices=[k.value for k in EstimatorKind], default=EstimatorKind.KT.value)
    p.add_argument("--order", type=int, default=settings.kt_order, help="context order k for kt")
    p.add_argument("--adapter-cmd", help="external compressor command with {in} and {out} placeholders")


def _add_output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def _estimator_choice(args: argparse.Namespace) -> EstimatorChoice:
    adapter = adapter_from_command(args.adapter_cmd) if args.adapter_cmd else None
    try:
        return EstimatorChoice(kind=args.estimator, order=args.order, adapter=adapter)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _alphabet(args: argparse.Namespace) -> Optional[Alphabet]:
    return parse_alphabet(args.alphabet) if args.alphabet else None


def _corpus(args: argparse.Namespace, paths: Sequence[str]) -> List[CorpusItem]:
    return ingest_corpus(paths, args.mode, _alphabet(args))


def _two(args: argparse.Namespace) -> tuple[SymbolString, SymbolString]:
    """x and y may be the same file; labels are not used by pair commands."""
    alphabet = _alphabet(args)
    return ingest(args.x, args.mode, alphabet).string, ingest(args.y, args.mode, alphabet).string


def _fmt(value: float, args: argparse.Namespace) -> str:
    return f"{value:.{args.precision}f}"


# Command handlers; each returns the text to emit


def cmd_entropy(args: argparse.Namespace) -> str:
    estimator = _estimator_choice(args).build()
    lines = [f"{item.label}\t{_fmt(estimator.entropy(item.string), args)}" for item in _corpus(args, args.files)]
    return "\n".join(lines) + "\n"


def cmd_joint_entropy(args: argparse.Namespace) -> str:
    x, y = _two(args)
    return _fmt(joint_entropy(x, y, _estimator_choice(args)), args) + "\n"


def cmd_cond_entropy(args: argparse.Namespace) -> str:
    x, y = _two(args)
    if args.indirect:
        value = conditional_entropy_indirect(x, y, _estimator_choice(args))
    else:
        value = conditional_entropy_direct(x, y, args.order)
    return _fmt(value, args) + "\n"


def cmd_divergence(args: argparse.Namespace) -> str:
    z, x = _two(args)
    if args.method == DivergenceMethod.ZM.value:
        estimate = zm_divergence(z, x, clamp=args.clamp)
    else:
        estimate = cross_code_divergence(z, x, args.order, clamp=args.clamp)
    out = _fmt(estimate.value, args)
    if estimate.clamped:
        out += f"\tclamped\traw={_fmt(estimate.raw, args)}"
    return out + "\n"


def _reference(args: argparse.Namespace) -> Optional[ReferenceRates]:
    if not args.reference:
        return None
    x_spec, y_spec = (load_source_spec(p).source for p in args.reference)
    return ReferenceRates(
        h_x=exact_entropy_rate(x_spec),
        h_y=exact_entropy_rate(y_spec),
        d_y_x=exact_divergence_rate(y_spec, x_spec),
    )


def cmd_conjecture_check(args: argparse.Namespace) -> str:
    x, y = _two(args)
    report = concat_conjecture(x, y, _estimator_choice(args), _reference(args))
    fields = [
        ("measured_rate", report.measured_rate),
        ("baseline_rate", report.baseline_rate),
        ("predicted_rate", report.predicted_rate),
        ("excess", report.excess),
        ("li_estimate", report.li_estimate),
    ]
    lines = [f"{name}\t{_fmt(value, args)}" for name, value in fields]
    lines.append(f"estimator\t{report.estimator_id}")
    lines.append(f"reference\t{'oracle' if report.from_reference else 'estimated'}")
    return "\n".join(lines) + "\n"


def cmd_distance_matrix(args: argparse.Namespace) -> str:
    metric = Metric(args.metric)
    try:
        spec = DistanceSpec(
            metric=metric,
            estimator=_estimator_choice(args),
            method=DivergenceMethod(args.method) if metric.is_kl else None,
            conditional=ConditionalMode(args.conditional),
            clamp=not args.no_clamp,
            min_entropy=args.min_entropy,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e
    corpus = [(item.label, item.string) for item in _corpus(args, args.files)]
    return write_phylip(distance_matrix(corpus, spec, jobs=args.jobs), precision=args.precision)


def cmd_tree(args: argparse.Namespace) -> str:
    try:
        matrix = read_phylip(args.matrix)
    except OSError as e:
        raise IoFailure(f"cannot read {args.matrix}: {e}") from e
    tree = neighbor_joining(matrix) if args.method == "nj" else upgma(matrix)
    return to_newick(tree, args.precision) + "\n"


def _format_tokens(tokens: Sequence[object]) -> str:
    text = [str(t) for t in tokens]
    sep = "" if all(len(t) == 1 for t in text) else " "
    return sep.join(text) + "\n"


def cmd_gen_markov(args: argparse.Namespace) -> str | List[Output]:
    spec = load_source_spec(args.spec)
    if args.pair_output:
        x, y = sample_pair(spec.joint(), args.length, args.seed)
        return [(args.output, _format_tokens(x.tokens())), (args.pair_output, _format_tokens(y.tokens()))]
    return _format_tokens(sample(spec.source, args.length, args.seed).tokens())


def _oracle_lines(name: str, spec: SourceSpec, args: argparse.Namespace) -> List[str]:
    lines = [f"{name}\tentropy_rate\t{_fmt(exact_entropy_rate(spec.source), args)}"]
    if spec.channel is None:
        return lines
    joint = spec.joint()
    lines.append(f"{name}\tjoint_entropy_rate\t{_fmt(exact_joint_entropy_rate(joint), args)}")
    for direction in ConditionalDirection:
        try:
            value = _fmt(exact_conditional_entropy_rate(joint, direction), args)
        except MarginalNotMarkov:
            value = "n/a"
        lines.append(f"{name}\tconditional_{direction.value.replace('-', '_')}\t{value}")
    return lines


def cmd_oracle(args: argparse.Namespace) -> str:
    specs: Dict[str, SourceSpec] = {path: load_source_spec(path) for path in args.specs}
    lines: List[str] = []
    for name, spec in specs.items():
        lines.extend(_oracle_lines(name, spec, args))
    for a, b in itertools.permutations(specs, 2):
        if specs[a].source.alphabet == specs[b].source.alphabet:
            value = exact_divergence_rate(specs[a].source, specs[b].source)
            lines.append(f"{a}||{b}\tdivergence_rate\t{_fmt(value, args)}")
    return "\n".join(lines) + "\n"


def _parse_lengths(text: str) -> List[int]:
    try:
        lengths = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise UsageError(f"--lengths must be comma-separated integers: {text!r}") from e
    if not lengths or min(lengths) < 2:
        raise UsageError("--lengths needs at least one length >= 2")
    return lengths


def cmd_experiment(args: argparse.Namespace) -> str:
    if bool(args.preset) == bool(args.specs):
        raise UsageError("give either --preset or source-spec files")
    if args.preset:
        try:
            specs = load_preset_sources(args.preset)
        except (FileNotFoundError, KeyError, TypeError) as e:
            raise UsageError(str(e)) from e
    else:
        specs = {path: load_source_spec(path) for path in args.specs}
    sources = {name: spec.source for name, spec in specs.items()}
    rows = run_experiment(
        sources,
        _parse_lengths(args.lengths),
        seeds=args.seeds,
        base_seed=args.seed,
        estimators=args.estimators.split(","),
        methods=[] if args.no_divergence else args.methods.split(","),
        jobs=args.jobs,
    )
    return format_table(rows, args.precision)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="infodist", description="Compression-based entropy, divergence and distance estimation")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=settings.seed, help="seed for every random choice")
    parser.add_argument("--precision", type=int, default=settings.precision, help="decimal places in output")
    parser.add_argument("--jobs", type=int, default=settings.jobs, help="worker processes")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more (repeat for debug)")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], str | List[Output]], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        _add_output_options(p)
        return p

    p = command("entropy", cmd_entropy, "entropy-rate estimate per file")
    p.add_argument("files", nargs="+")
    _add_input_options(p)
    _add_estimator_options(p, settings)

    for name, handler, help_text in (
        ("joint-entropy", cmd_joint_entropy, "joint entropy rate of two files over supersymbols"),
        ("conjecture-check", cmd_conjecture_check, "rates for the concatenation of two equal-length files"),
    ):
        p = command(name, handler, help_text)
        p.add_argument("x")
        p.add_argument("y")
        _add_input_options(p)
        _add_estimator_options(p, settings)
        if name == "conjecture-check":
            p.add_argument("--reference", nargs=2, metavar=("X_SPEC", "Y_SPEC"), help="source specs giving oracle rates")

    p = command("cond-entropy", cmd_cond_entropy, "conditional entropy rate of x given y")
    p.add_argument("x")
    p.add_argument("y")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--direct", action="store_true", default=True, help="side-information coding (default)")
    mode.add_argument("--indirect", action="store_true", help="joint minus marginal; may be negative")
    _add_input_options(p)
    _add_estimator_options(p, settings)

    p = command("divergence", cmd_divergence, "relative entropy rate D(z||x)")
    p.add_argument("x", metavar="z")
    p.add_argument("y", metavar="x")
    p.add_argument("--method", choices=[m.value for m in DivergenceMethod], default=DivergenceMethod.CROSS_CODE.value)
    p.add_argument("--order", type=int, default=settings.kt_order)
    p.add_argument("--clamp", action="store_true", help="report negative estimates as 0")
    _add_input_options(p)

    p = command("distance-matrix", cmd_distance_matrix, "PHYLIP distance matrix over files")
    p.add_argument("files", nargs="+")
    p.add_argument("--metric", choices=[m.value for m in Metric], default=Metric.E2.value)
    p.add_argument("--method", choices=[m.value for m in DivergenceMethod], default=DivergenceMethod.CROSS_CODE.value)
    p.add_argument("--conditional", choices=[c.value for c in ConditionalMode], default=ConditionalMode.DIRECT.value)
    p.add_argument("--no-clamp", action="store_true", help="keep negative directed divergences before combining")
    p.add_argument("--min-entropy", type=float, default=settings.min_entropy)
    _add_input_options(p)
    _add_estimator_options(p, settings)

    p = command("tree", cmd_tree, "Newick tree from a PHYLIP matrix")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["nj", "upgma"], default="nj")

    p = command("gen-markov", cmd_gen_markov, "sample a source-spec file")
    p.add_argument("spec")
    p.add_argument("-n", "--length", type=int, required=True)
    p.add_argument("--pair-output", help="spec with channel rows: write the y string here, x to --output")

    p = command("oracle", cmd_oracle, "exact rates for source-spec files")
    p.add_argument("specs", nargs="+")

    p = command("experiment", cmd_experiment, "estimator-vs-oracle sweep as a TSV table")
    p.add_argument("specs", nargs="*")
    p.add_argument("--preset", help="named preset profile instead of spec files")
    p.add_argument("--lengths", default="1000,10000")
    p.add_argument("--seeds", type=int, default=3, help="trials per length")
    p.add_argument("--estimators", default="kt,lz78")
    p.add_argument("--methods", default="cross-code,zm")
    p.add_argument("--no-divergence", action="store_true")

    return parser


def _init_logging(verbosity: int) -> None:
    level = {0: None, 1: "INFO"}.get(verbosity, "DEBUG")
    if DEFAULT_CONFIG.is_file():
        init_logger(DEFAULT_CONFIG, level=level)
    else:
        init_logger(level=level or "WARNING")


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and return the exit status."""
    load_dotenv()
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _init_logging(args.verbose)
    if tracing_requested():
        try:
            setup_telemetry()
        except (ImportError, ValueError) as e:
            logger.warning("telemetry_unavailable", error=str(e))

    try:
        if args.jobs < 1 or args.precision < 0:
            raise UsageError("--jobs must be >= 1 and --precision >= 0")
        result = args.handler(args)
        emit_all([(args.output, result)] if isinstance(result, str) else result)
    except InfodistError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error("command_failed", command=args.command, error=str(e), exc_info=True)
        print(f"error: unexpected failure: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
