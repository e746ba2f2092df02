"""Batch command-line front door.

One binary, six subcommands: ``ball`` (BFS ball export), ``check-theorem5``
(exhaustive acceptor-vs-oracle comparison), ``check-lemmas`` (parity,
non-geodesic grid, unique-geodesic and count-formula suites), ``fftp-scan``
(minimal falsification constants for every non-geodesic word up to a
bound), ``witness`` (the diverging witness family), and ``automaton``
(dump/minimize/compare serialized acceptors).  Every numeric bound has a
hard ceiling, and all emissions are byte-deterministic for a given
configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path

from . import automata, kernels
from .cayley import ball, distance, export_dot
from .errors import ResourceBoundError
from .fellow import (
    fftp_scan,
    min_fftp_constant,
    path_point,
    reports_to_csv,
    scan_to_json,
    summary_to_csv,
)
from .geodesics import geodesics_to, two_t_exponents
from .group import (
    GroupElement,
    Layer,
    Letter,
    Word,
    canonical_geodesic,
    evaluate,
    format_word,
    geodesic_length,
)

RADIUS_CEILING = 14
THEOREM5_CEILING = 11
LEMMA_CEILING = 12
SCAN_CEILING = 12
WITNESS_N_RANGE = (1, 6)
WORKERS_CEILING = 64


@dataclass
class RunConfig:
    command: str
    radius: int = 0
    max_len: int = 0
    n: int = 0
    out: str | None = None
    format: str = "text"
    seed: int = 0
    workers: int = 1
    inject_fault: bool = False
    sources: tuple[str, ...] = ()
    action: str = ""


def _bounded(flag: str, lo: int, hi: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(
                f"{flag} {value} outside the allowed range [{lo}, {hi}]"
            )
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geofellow",
        description="Geodesic language and fellow-traveler analysis "
        "on the two-layer Cayley graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="export a BFS ball of the Cayley graph")
    p.add_argument(
        "--radius",
        type=_bounded("--radius", 0, RADIUS_CEILING),
        default=4,
        help=f"ball radius (default 4, ceiling {RADIUS_CEILING})",
    )
    p.add_argument("--format", choices=("csv", "dot"), default="csv")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser(
        "check-theorem5",
        help="exhaustively compare the geodesic acceptor with the word metric",
    )
    p.add_argument(
        "--max-len",
        type=_bounded("--max-len", 0, THEOREM5_CEILING),
        default=THEOREM5_CEILING,
        help=f"sweep all words up to this length (ceiling {THEOREM5_CEILING})",
    )
    p.add_argument(
        "--inject-fault",
        action="store_true",
        help="corrupt the acceptor first (validates mismatch reporting)",
    )
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("check-lemmas", help="run the structural lemma suites")
    p.add_argument(
        "--max-len",
        type=_bounded("--max-len", 0, LEMMA_CEILING),
        default=11,
        help=f"parity sweep length (default 11, ceiling {LEMMA_CEILING})",
    )
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser(
        "fftp-scan",
        help="minimal falsification constants for all short non-geodesic words",
    )
    p.add_argument(
        "--max-len",
        type=_bounded("--max-len", 0, SCAN_CEILING),
        default=7,
        help=f"scan all non-geodesic words up to this length (ceiling {SCAN_CEILING})",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.add_argument(
        "--workers",
        type=_bounded("--workers", 1, WORKERS_CEILING),
        default=1,
        help=f"parallel workers (ceiling {WORKERS_CEILING}); never affects output",
    )
    p.add_argument("--seed", type=int, default=0, help="recorded in JSON config")

    p = sub.add_parser("witness", help="report one word of the diverging family")
    p.add_argument(
        "--n",
        type=_bounded("--n", *WITNESS_N_RANGE),
        required=True,
        help=f"family index, range {list(WITNESS_N_RANGE)}",
    )
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("automaton", help="dump, minimize, or compare automata")
    p.add_argument("action", choices=("dump", "minimize", "compare"))
    p.add_argument(
        "sources",
        nargs="*",
        help="automaton files; the literal 'acceptor' means the built-in "
        "geodesic acceptor",
    )
    p.add_argument("--out", metavar="PATH")

    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for field in (
        "radius",
        "max_len",
        "n",
        "out",
        "format",
        "seed",
        "workers",
        "inject_fault",
        "action",
    ):
        if hasattr(ns, field):
            setattr(cfg, field, getattr(ns, field))
    if hasattr(ns, "sources"):
        cfg.sources = tuple(ns.sources)
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_ball(cfg: RunConfig) -> int:
    dmap = ball(cfg.radius)
    if cfg.format == "dot":
        _emit(export_dot(dmap), cfg.out)
        return 0
    rows = sorted(
        ((g, d) for g, d in dmap.entries.items()),
        key=lambda item: (item[1], int(item[0].layer), item[0].x, item[0].y),
    )
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "y", "layer", "dist"])
    for g, d in rows:
        writer.writerow([g.x, g.y, "top" if g.layer is Layer.TOP else "bottom", d])
    _emit(out.getvalue(), cfg.out)
    return 0


def cmd_check_theorem5(cfg: RunConfig) -> int:
    acceptor = automata.build_geodesic_acceptor()
    if cfg.inject_fault:
        # Dropping the start state from the accepting set guarantees a
        # mismatch on the empty word, whatever the sweep length.
        acceptor = automata.Dfa(
            acceptor.alphabet,
            acceptor.transitions,
            acceptor.accepting - {acceptor.start},
            acceptor.start,
        )
    transitions, accepting, start = kernels.dfa_tables(acceptor)
    count, mismatches = kernels.theorem5_mismatches(
        cfg.max_len, transitions, accepting, start
    )
    lines = [
        f"theorem5 check: max_len={cfg.max_len} words={count} "
        f"mismatches={len(mismatches)} backend={kernels.BACKEND}"
    ]
    for raw in mismatches:
        word = Word(raw)
        lines.append(
            f"mismatch word={format_word(word)!r} len={len(word)} "
            f"geodesic_length={geodesic_length(evaluate(word))}"
        )
    lines.append("PASS" if not mismatches else "FAIL")
    _emit("\n".join(lines) + "\n", cfg.out)
    return 0 if not mismatches else 1


def _lemma_suites(max_len: int):
    """Run the lemma suites; yields (name, cases, failures, detail rows)."""
    count, bad = kernels.parity_mismatches(max_len)
    yield ("lemma1-parity", count, bad, [])

    failures = 0
    for n in range(-5, 6):
        for m in range(-5, 6):
            word = _power_word([(1, n), (1, m), (1, 0)])
            if len(word) == geodesic_length(evaluate(word)):
                failures += 1
    yield ("lemma2-three-t-words", 121, failures, [])

    rows = []
    failures = 0
    for x in range(-4, 5):
        for y in range(-4, 5):
            target = GroupElement(x, y, Layer.TOP)
            family = geodesics_to(target)
            rows.append((str(target), len(family.words)))
            if family.words != {canonical_geodesic(target)}:
                failures += 1
    yield ("lemma3-unique-top-geodesics", 81, failures, rows)

    rows = []
    failures = 0
    for x in range(-4, 5):
        for y in [v for v in range(-4, 5) if v != 0]:
            target = GroupElement(x, y, Layer.BOTTOM)
            family = geodesics_to(target)
            rows.append((str(target), len(family.words)))
            if len(family.words) != abs(x) + 1:
                failures += 1
                continue
            for word in family.words:
                parts = two_t_exponents(word)
                if parts is None:
                    failures += 1
                    break
                x1, mid, x2 = parts
                if mid != y or x1 + x2 != x or x1 * x2 < 0:
                    failures += 1
                    break
    yield ("count-formula-bottom-targets", 72, failures, rows)


def _power_word(parts: list[tuple[int, int]]) -> Word:
    """Build a word from (t-count, a-exponent) alternating segments."""
    letters: list[Letter] = []
    for tcount, exp in parts:
        letters.extend([Letter.T] * tcount)
        letters.extend([Letter.A if exp > 0 else Letter.A_INV] * abs(exp))
    return Word(letters)


def cmd_check_lemmas(cfg: RunConfig) -> int:
    results = list(_lemma_suites(cfg.max_len))
    failed = any(f for _, _, f, _ in results)
    if cfg.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["target", "count"])
        for _, _, _, rows in results:
            writer.writerows(rows)
        _emit(out.getvalue(), cfg.out)
    else:
        lines = [
            f"{name}: cases={cases} failures={f} {'PASS' if not f else 'FAIL'}"
            for name, cases, f, _ in results
        ]
        lines.append("PASS" if not failed else "FAIL")
        _emit("\n".join(lines) + "\n", cfg.out)
    return 1 if failed else 0


def cmd_fftp_scan(cfg: RunConfig) -> int:
    reports, summary = fftp_scan(cfg.max_len, workers=cfg.workers)
    # Workers and output paths are execution details, not part of the scan
    # definition, so they stay out of the recorded config.
    recorded = {
        "command": "fftp-scan",
        "max_len": cfg.max_len,
        "format": cfg.format,
        "seed": cfg.seed,
    }
    if cfg.format == "json":
        _emit(scan_to_json(recorded, reports, summary), cfg.out)
    else:
        rows_text = reports_to_csv(reports)
        summary_text = summary_to_csv(summary)
        if cfg.out:
            _emit(rows_text, cfg.out)
            _emit(summary_text, _summary_path(cfg.out))
        else:
            _emit(rows_text + summary_text, None)
    if cfg.out:
        for length, count, best in summary:
            print(f"len={length} count_nongeodesic={count} max_min_k={best}")
    return 0


def _summary_path(out: str) -> str:
    path = Path(out)
    if path.suffix == ".csv":
        return str(path.with_suffix(".summary.csv"))
    return out + ".summary"


def cmd_witness(cfg: RunConfig) -> int:
    n = cfg.n
    word = _power_word([(1, n), (1, n), (1, 0)])
    report = min_fftp_constant(word)
    lines = [
        f"word: {format_word(report.word)}",
        f"endpoint: {report.endpoint}",
        f"word_len: {report.word_len}",
        f"geo_len: {report.geo_len}",
        f"min_k: {report.min_k}",
        f"witness: {format_word(report.witness)}",
        "t w(t) v(t) d",
    ]
    for t in range(report.word_len + 1):
        a = path_point(report.word, t)
        b = path_point(report.witness, t)
        lines.append(f"{t} {a} {b} {distance(a, b)}")
    _emit("\n".join(lines) + "\n", cfg.out)
    return 0


def _load_automaton(source: str) -> automata.Dfa:
    if source == "acceptor":
        return automata.build_geodesic_acceptor()
    return automata.from_text(Path(source).read_text(encoding="utf-8"))


def cmd_automaton(cfg: RunConfig) -> int:
    if cfg.action == "dump":
        if cfg.sources:
            print("error: dump takes no sources", file=sys.stderr)
            return 2
        d = automata.canonical_form(automata.build_geodesic_acceptor())
        _emit(automata.to_text(d), cfg.out)
        return 0
    if cfg.action == "minimize":
        if len(cfg.sources) > 1:
            print("error: minimize takes at most one source", file=sys.stderr)
            return 2
        d = _load_automaton(cfg.sources[0] if cfg.sources else "acceptor")
        _emit(automata.to_text(automata.minimize(d)), cfg.out)
        return 0
    if len(cfg.sources) != 2:
        print("error: compare takes exactly two sources", file=sys.stderr)
        return 2
    d1 = _load_automaton(cfg.sources[0])
    d2 = _load_automaton(cfg.sources[1])
    same = automata.equivalent(d1, d2)
    _emit(f"equivalent: {'yes' if same else 'no'}\n", cfg.out)
    return 0 if same else 1


_COMMANDS = {
    "ball": cmd_ball,
    "check-theorem5": cmd_check_theorem5,
    "check-lemmas": cmd_check_lemmas,
    "fftp-scan": cmd_fftp_scan,
    "witness": cmd_witness,
    "automaton": cmd_automaton,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = _config(ns)
    try:
        return _COMMANDS[cfg.command](cfg)
    except (ResourceBoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
