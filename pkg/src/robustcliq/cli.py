"""Command line front end.

Every command reads its input from a path argument, or from stdin when the
path is omitted, so that ``grid 3 3 | complex robust -k 3 | homology`` works.

Exit codes: 0 when every verdict is ``match``, 1 on any ``mismatch``, 2 when
the worst verdict is ``flagged``.  Errors use 64 (usage), 65 (malformed JSON),
66 (invalid input) and 67 (cap exceeded), each with its own stderr prefix.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field

from . import harness
from .complex import SimplicialComplex, robust_clique_complex, total_cut_complex
from .errors import InvalidAttachment, OddCycle, SizeCapExceeded, UniverseMismatch
from .graph import Graph, dumps, make_grid
from .harness import FLAGGED, MISMATCH, Caps, VerificationReport
from .homology import reduced_homology
from .sequence import EDGE, build_square_sequence, grid_sequence, ladder_sequence, load_script, random_script, script_to_json

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_FLAGGED = 2
EXIT_USAGE = 64
EXIT_BAD_JSON = 65
EXIT_BAD_INPUT = 66
EXIT_CAP = 67

PREFIX = {
    EXIT_USAGE: "usage error",
    EXIT_BAD_JSON: "malformed json",
    EXIT_BAD_INPUT: "invalid input",
    EXIT_CAP: "cap exceeded",
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(EXIT_USAGE, message)


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    k: int | None = None
    m: int | None = None
    n: int | None = None
    seed: int = 0
    caps: Caps = field(default_factory=Caps)
    fmt: str = "json"
    timings: bool = False


# ------------------------------------------------------------------- input


def _read(path: str | None, stdin) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_BAD_INPUT, f"cannot read {path}: {exc.strerror}") from exc


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_BAD_JSON, f"{exc.msg} at line {exc.lineno} column {exc.colno}") from exc


def _load_graph(path, stdin) -> Graph:
    return Graph.from_json_obj(_json(_read(path, stdin)))


def _load_complex(path, stdin) -> SimplicialComplex:
    return SimplicialComplex.from_json_obj(_json(_read(path, stdin)))


def _load_sequence(path, stdin):
    text = _read(path, stdin)
    _json(text)
    return build_square_sequence(load_script(text))


# ------------------------------------------------------------------ output


def _emit_reports(reports: list[VerificationReport], cfg: RunConfig, out) -> int:
    if cfg.fmt == "json":
        for r in reports:
            out.write(dumps(r.to_json_obj(include_runtime=cfg.timings)) + "\n")
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["claim", "params", "verdict", "ms"])
        for r in reports:
            w.writerow([r.claim, dumps(r.params), r.verdict, f"{r.runtime_ms:.3f}"])
    else:
        for r in reports:
            line = f"{r.claim} {dumps(r.params)} -> {r.verdict}"
            if cfg.timings:
                line += f" ({r.runtime_ms:.1f} ms)"
            out.write(line + "\n")
            if r.notes:
                out.write(f"  note: {r.notes}\n")
    return exit_code(reports)


def exit_code(reports) -> int:
    verdicts = {r.verdict for r in reports}
    if MISMATCH in verdicts:
        return EXIT_MISMATCH
    if FLAGGED in verdicts:
        return EXIT_FLAGGED
    return EXIT_OK


def _emit_complex(K: SimplicialComplex, fmt: str, out):
    if fmt == "json":
        out.write(K.to_json() + "\n")
    elif fmt == "csv":
        out.write(K.f_vector_csv())
    else:
        out.write(f"universe {K.universe_size}, f-vector {K.f_vector()}\n")
        for f in K.facets():
            out.write(" ".join(map(str, f)) + "\n")


# ---------------------------------------------------------------- commands


def cmd_grid(args, cfg, stdin, out):
    if args.m < 2 or args.n < 2:
        raise CliError(EXIT_BAD_INPUT, "grid needs m, n >= 2")
    g = make_grid(args.m, args.n)
    if cfg.fmt == "json":
        out.write(g.to_json() + "\n")
    elif cfg.fmt == "csv":
        out.write("u,v\n" + "".join(f"{a},{b}\n" for a, b in g.sorted_edges()))
    else:
        out.write(f"G_{{{args.m},{args.n}}}: {g.vertex_count} vertices, {len(g.edges)} edges\n")
    return EXIT_OK


def cmd_seq(args, cfg, stdin, out):
    if args.seq_command == "build":
        seq = _load_sequence(args.script, stdin)
        obj = {"final": seq.final.to_json_obj(), "summary": seq.summary()}
        if cfg.fmt == "json":
            out.write(dumps(obj) + "\n")
        elif cfg.fmt == "csv":
            out.write("step,kind\n" + "".join(f"{i},{k}\n" for i, k in enumerate(seq.kinds(), start=1)))
        else:
            s = seq.summary()
            out.write(f"length {s['length']}: {s['vertices']} vertices, {s['edges']} edges, kinds {' '.join(s['kinds'])}\n")
        return EXIT_OK
    if args.seq_command == "grid":
        steps = grid_sequence(args.m, args.n).sequence.steps
    elif args.seq_command == "ladder":
        steps = ladder_sequence(args.length).steps
    else:
        kinds = (EDGE,) if args.edge_only else ("edge", "corner")
        steps = random_script(args.length, random.Random(cfg.seed), kinds)
    out.write(script_to_json(steps) + "\n")
    return EXIT_OK


def cmd_complex(args, cfg, stdin, out):
    g = _load_graph(args.graph, stdin)
    if args.k < 1:
        raise CliError(EXIT_BAD_INPUT, "k must be >= 1")
    if args.kind == "robust":
        K = robust_clique_complex(g, args.k, max_faces=cfg.caps.max_faces, max_universe=cfg.caps.max_universe)
    else:
        K = total_cut_complex(g, args.k, cap=cfg.caps.max_universe)
    _emit_complex(K, cfg.fmt, out)
    return EXIT_OK


def cmd_homology(args, cfg, stdin, out):
    K = _load_complex(args.complex, stdin)
    h = reduced_homology(K, deadline=cfg.caps.deadline())
    if cfg.fmt == "json":
        out.write(h.to_json() + "\n")
    elif cfg.fmt == "csv":
        out.write("dim,betti,torsion\n")
        out.write(f"-1,{h.betti_minus_one},\n")
        for d, b in enumerate(h.reduced_betti):
            out.write(f"{d},{b},{' '.join(map(str, h.torsion.get(d, [])))}\n")
    else:
        dims = ", ".join(f"H~{d} = Z^{b}" for d, b in enumerate(h.reduced_betti) if b) or "all reduced homology vanishes"
        out.write(dims + "\n")
        for d, t in sorted(h.torsion.items()):
            if t:
                out.write(f"torsion in dim {d}: {t}\n")
    return EXIT_OK


def _seq_source(args, stdin):
    if getattr(args, "grid", None):
        return grid_sequence(*args.grid).sequence
    if getattr(args, "ladder", None):
        return ladder_sequence(args.ladder)
    return _load_sequence(args.script, stdin)


def cmd_verify(args, cfg, stdin, out):
    caps = cfg.caps
    claim = args.claim
    if claim == "thm-main":
        reports = [harness.verify_thm_main(args.m, args.n, args.k, caps)]
    elif claim == "total-cut":
        reports = [harness.verify_total_cut(args.m, args.n, args.k, caps)]
    elif claim == "main2":
        reports = [harness.verify_main2(_seq_source(args, stdin), caps)]
    elif claim == "clique":
        reports = [harness.verify_clique_lemma(_seq_source(args, stdin), caps)]
    elif claim == "edge-cor":
        reports = [harness.verify_edge_corollary(_seq_source(args, stdin), args.k, caps)]
    elif claim == "decomposition":
        seq = _seq_source(args, stdin)
        steps = [args.step] if args.step else range(2, len(seq) + 1)
        reports = [harness.verify_decomposition(seq, s, args.k) for s in steps]
    elif claim == "koenig":
        g = _load_graph(args.graph, stdin)
        reports = [harness.verify_koenig(g, args.k, seed=cfg.seed)]
    elif claim == "example26":
        reports = [harness.verify_example_26(caps)]
    elif claim == "join-spheres":
        reports = [harness.verify_join_spheres(args.a, args.b)]
    elif claim == "embedded-join":
        reports = harness.verify_embedded_join_batch(args.samples, cfg.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(EXIT_USAGE, f"unknown claim {claim}")
    return _emit_reports(reports, cfg, out)


def cmd_scan(args, cfg, stdin, out):
    if args.scan_command == "conjecture":
        kinds = (EDGE,) if args.edge_only else ("edge", "corner")
        reports = harness.scan_conjecture(args.k, args.max_len, args.samples, cfg.seed, kinds=kinds, caps=cfg.caps)
    else:
        reports = harness.scan_grid_alpha(caps=cfg.caps)
    return _emit_reports(reports, cfg, out)


def cmd_dual(args, cfg, stdin, out):
    g = _load_graph(args.graph, stdin)
    return _emit_reports([harness.verify_duality(g, args.k, cfg.caps)], cfg, out)


# ------------------------------------------------------------------ parser


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--cap-universe", type=_positive_int, default=20, help="max vertices for complex construction")
    common.add_argument("--cap-faces", type=_positive_int, default=2_000_000, help="max faces for complex construction")
    common.add_argument("--budget-secs", type=_positive_float, default=None, help="per-instance homology time budget")
    common.add_argument("--timings", action="store_true", help="include runtime_ms in JSON reports")

    p = _Parser(prog="robustcliq", description="Robust clique complexes of square sequence graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("grid", parents=[common], help="grid graph JSON")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)

    s = sub.add_parser("seq", help="square sequences")
    ssub = s.add_subparsers(dest="seq_command", required=True, parser_class=_Parser)
    b = ssub.add_parser("build", parents=[common], help="validate a gluing script")
    b.add_argument("script", nargs="?")
    sg = ssub.add_parser("grid", parents=[common], help="canonical script of a grid")
    sg.add_argument("m", type=_positive_int)
    sg.add_argument("n", type=_positive_int)
    sl = ssub.add_parser("ladder", parents=[common], help="edge-only ladder script")
    sl.add_argument("length", type=_positive_int)
    sr = ssub.add_parser("random", parents=[common], help="seeded random script")
    sr.add_argument("length", type=_positive_int)
    sr.add_argument("--edge-only", action="store_true")

    c = sub.add_parser("complex", parents=[common], help="robust clique or total cut complex")
    c.add_argument("kind", choices=("robust", "cut"))
    c.add_argument("-k", type=int, required=True)
    c.add_argument("graph", nargs="?")

    h = sub.add_parser("homology", parents=[common], help="reduced integral homology of a complex")
    h.add_argument("complex", nargs="?")

    v = sub.add_parser("verify", help="check one claim")
    vsub = v.add_subparsers(dest="claim", required=True, parser_class=_Parser)
    for name in ("thm-main", "total-cut"):
        x = vsub.add_parser(name, parents=[common])
        x.add_argument("m", type=int)
        x.add_argument("n", type=int)
        x.add_argument("k", type=int)

    def seq_args(x):
        x.add_argument("script", nargs="?")
        grp = x.add_mutually_exclusive_group()
        grp.add_argument("--grid", nargs=2, type=_positive_int, metavar=("M", "N"))
        grp.add_argument("--ladder", type=_positive_int, metavar="L")

    for name in ("main2", "clique"):
        seq_args(vsub.add_parser(name, parents=[common]))
    x = vsub.add_parser("edge-cor", parents=[common])
    x.add_argument("-k", type=int, required=True)
    seq_args(x)
    x = vsub.add_parser("decomposition", parents=[common])
    x.add_argument("-k", type=int, required=True)
    x.add_argument("--step", type=int)
    seq_args(x)
    x = vsub.add_parser("koenig", parents=[common])
    x.add_argument("-k", type=int, required=True)
    x.add_argument("graph", nargs="?")
    vsub.add_parser("example26", parents=[common])
    x = vsub.add_parser("join-spheres", parents=[common])
    x.add_argument("a", type=_positive_int)
    x.add_argument("b", type=_positive_int)
    x = vsub.add_parser("embedded-join", parents=[common])
    x.add_argument("--samples", type=_positive_int, default=50)

    sc = sub.add_parser("scan", help="exploratory scans, JSONL output")
    scsub = sc.add_subparsers(dest="scan_command", required=True, parser_class=_Parser)
    x = scsub.add_parser("conjecture", parents=[common])
    x.add_argument("-k", type=int, required=True)
    x.add_argument("--max-len", type=_positive_int, required=True)
    x.add_argument("--samples", type=_positive_int, required=True)
    x.add_argument("--edge-only", action="store_true")
    scsub.add_parser("grid-alpha", parents=[common])

    d = sub.add_parser("dual", parents=[common], help="Alexander duality check")
    d.add_argument("graph", nargs="?")
    d.add_argument("-k", type=int, required=True)
    return p


COMMANDS = {
    "grid": cmd_grid,
    "seq": cmd_seq,
    "complex": cmd_complex,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "dual": cmd_dual,
}


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        if not hasattr(args, "fmt"):
            raise CliError(EXIT_USAGE, f"{args.command} needs a subcommand")
        caps = Caps(
            max_universe=args.cap_universe,
            max_faces=args.cap_faces,
            budget_secs=args.budget_secs,
            direct_cut=min(args.cap_universe, Caps.direct_cut),
        )
        cfg = RunConfig(
            command=args.command,
            inputs=[p for p in (getattr(args, a, None) for a in ("script", "graph", "complex")) if p],
            k=getattr(args, "k", None),
            m=getattr(args, "m", None),
            n=getattr(args, "n", None),
            seed=args.seed,
            caps=caps,
            fmt=args.fmt,
            timings=args.timings,
        )
        buf = io.StringIO()
        code = COMMANDS[args.command](args, cfg, stdin, buf)
        stdout.write(buf.getvalue())
        return code
    except CliError as exc:
        stderr.write(f"{PREFIX[exc.code]}: {exc}\n")
        return exc.code
    except SizeCapExceeded as exc:
        stderr.write(f"{PREFIX[EXIT_CAP]}: {exc}\n")
        return EXIT_CAP
    except (InvalidAttachment, OddCycle, UniverseMismatch, ValueError, KeyError, TypeError) as exc:
        stderr.write(f"{PREFIX[EXIT_BAD_INPUT]}: {exc}\n")
        return EXIT_BAD_INPUT


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
