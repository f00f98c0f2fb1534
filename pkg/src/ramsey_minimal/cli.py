"""Command-line entry point.

Exit codes: 0 for a true/positive result, 1 for false/negative, 2 for
errors. ``--format json`` output is the stable contract; text is a summary.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import shlex
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import io as gio
from .arrowing import arrows, check_family_conditions, enumerate_minimal, is_minimal
from .families import ToothFn, symbolic_from_obj, tooth_from_obj, truncate
from .hubgraph import (
    BlueMatchingFound,
    HubGraph,
    blue_matching_vertex_set,
    construct_self_embedding,
    hub_from_obj,
    hub_truncate,
    is_family_member,
)
from .konig import build_level_sets, finite_arrowing_subgraph, ray_prefix_search, stitch_embedding
from .selfembed import comb_self_embeddable, comb_translation_embedding


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # single-line diagnostics, exit 2
        raise UsageError(message)


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict[str, Any] = {}
        self.lines: list[str] = []
        self.dot: Optional[str] = None

    def emit(self, stream) -> None:
        if self.fmt == "json":
            stream.write(gio.dumps(self.data) + "\n")
        elif self.fmt == "dot" and self.dot is not None:
            stream.write(self.dot)
        else:
            stream.write("\n".join(self.lines) + "\n")


def _yes(b: bool) -> str:
    return "true" if b else "false"


def _load_symbolic(path: str):
    obj = gio.load_json(path)
    if isinstance(obj, dict) and "family" in obj:
        return symbolic_from_obj(obj)
    raise ValueError(f"{path}: expected a symbolic graph with a 'family' field")


def _load_tooth(path: str) -> ToothFn:
    obj = gio.load_json(path)
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: expected a tooth-function object")
    return tooth_from_obj(obj)


def _load_hub(path: str) -> HubGraph:
    return hub_from_obj(gio.load_json(path))


# ---------------------------------------------------------------------------
# subcommands


def cmd_arrow(args, out: Output) -> int:
    f, g, h = (gio.load_graph(p) for p in (args.F, args.G, args.H))
    verdict = arrows(f, g, h, certify=args.certify)
    out.data["arrows"] = verdict.arrows
    out.lines.append(f"arrows: {_yes(verdict.arrows)}")
    if args.witness and verdict.witness is not None:
        w = gio.coloring_to_obj(verdict.witness)
        out.data["witness"] = w
        out.lines.append("witness: " + gio.dumps(w))
        out.dot = gio.to_dot(f, verdict.witness)
    if args.certify and verdict.certificates is not None:
        out.data["certificates"] = [c.as_json() for c in verdict.certificates]
        out.lines.append(f"certificates: {len(verdict.certificates)}")
    if out.dot is None:
        out.dot = gio.to_dot(f)
    return 0 if verdict.arrows else 1


def cmd_minimal(args, out: Output) -> int:
    f, g, h = (gio.load_graph(p) for p in (args.F, args.G, args.H))
    result = is_minimal(f, g, h)
    out.data["minimal"] = result
    out.lines.append(f"minimal: {_yes(result)}")
    return 0 if result else 1


def cmd_enumerate(args, out: Output) -> int:
    g, h = gio.load_graph(args.G), gio.load_graph(args.H)
    found = enumerate_minimal(g, h, args.max_v, args.max_e)
    out.data["graphs"] = [gio.graph_to_obj(x) for x in found]
    out.data["count"] = len(found)
    out.lines.append(f"minimal graphs: {len(found)}")
    out.lines.extend(",".join(f"{u}-{v}" for u, v in x.edge_list) for x in found)
    out.dot = "".join(gio.to_dot(x, name=f"M{i}") for i, x in enumerate(found))
    return 0


def cmd_family_check(args, out: Output) -> int:
    g, h = gio.load_graph(args.G), gio.load_graph(args.H)
    family = [gio.load_graph(p) for p in args.family]
    report = check_family_conditions(family, g, h, args.max_v, args.max_e)
    out.data.update(report.as_json())
    out.lines.append(f"condition 1 (every member arrows): {_yes(report.condition1)}")
    out.lines.append(f"condition 2 ({report.condition2_scope}): {_yes(report.condition2)}")
    out.lines.append(f"condition 3 (no member contains another): {_yes(report.condition3)}")
    return 0 if report.condition1 and report.condition2 and report.condition3 else 1


def cmd_comb(args, out: Output) -> int:
    tooth = _load_tooth(args.file)
    verdict = comb_self_embeddable(tooth)
    out.data.update(verdict.as_json())
    out.lines.append(f"self-embeddable: {_yes(verdict.self_embeddable)}")
    if verdict.self_embeddable:
        out.lines.append(f"shift: {verdict.shift}")
    out.lines.append(f"s: {verdict.s_value}")
    out.lines.append(f"normalized: {_yes(verdict.normalized)}")
    if args.depth and verdict.self_embeddable:
        emb = comb_translation_embedding(verdict.tooth, verdict.shift, args.depth)
        out.data["embedding"] = emb.as_json()
        out.lines.append("embedding: " + gio.dumps(emb.as_json()))
    return 0 if verdict.self_embeddable else 1


def cmd_hub(args, out: Output) -> int:
    if args.hub_cmd == "member":
        g = _load_hub(args.file)
        member = is_family_member(g)
        out.data["member"] = member
        out.lines.append(f"member: {_yes(member)}")
        return 0 if member else 1
    if args.hub_cmd == "selfembed":
        g = _load_hub(args.file)
        emb = construct_self_embedding(g, args.depth)
        host = hub_truncate(g, args.depth + 1)
        omitted = sorted(set(host.vertices) - emb.image())
        out.data["embedding"] = emb.as_json()
        out.data["omitted"] = omitted
        out.lines.append("embedding: " + gio.dumps(emb.as_json()))
        out.lines.append(f"omitted: {omitted}")
        return 0
    f = gio.load_graph(args.f)
    coloring = gio.coloring_from_obj(gio.load_json(args.coloring))
    try:
        vs, rounds = blue_matching_vertex_set(f, coloring, args.n)
    except BlueMatchingFound as exc:
        out.data["matching"] = [list(e) for e in exc.matching]
        out.lines.append(f"blue matching of size {len(exc.matching)}: {exc.matching}")
        return 1
    out.data["vertices"] = sorted(vs)
    out.data["iterations"] = rounds
    out.lines.append(f"vertices: {sorted(vs)}")
    out.lines.append(f"iterations: {rounds}")
    return 0


def cmd_compact(args, out: Output) -> int:
    f = _load_symbolic(args.F)
    g, h = gio.load_graph(args.G), gio.load_graph(args.H)
    result = finite_arrowing_subgraph(f, g, h, args.cap)
    if result is None:
        out.data.update({"found": False, "cap": args.cap})
        out.lines.append(f"no truncation up to depth {args.cap} arrows (inconclusive)")
        return 1
    out.data.update({"found": True, "depth": result.depth, "graph": gio.graph_to_obj(result.graph)})
    out.lines.append(f"depth: {result.depth}")
    out.lines.append("graph: " + ",".join(f"{u}-{v}" for u, v in result.graph.edge_list))
    out.dot = gio.to_dot(result.graph)
    return 0


def cmd_konig(args, out: Output) -> int:
    if args.konig_cmd == "levels":
        pattern, host = gio.load_pointed(args.pattern), gio.load_pointed(args.host)
        levels = build_level_sets(pattern, host, args.max_level)
        out.data.update(levels.as_json())
        out.lines.append(f"order: {levels.order}")
        out.lines.append(f"level sizes: {levels.sizes()}")
        if args.max_level is None:
            emb = stitch_embedding(levels)
            out.data["embedding"] = emb.as_json() if emb else None
            out.lines.append("embedding: " + (gio.dumps(emb.as_json()) if emb else "none"))
            return 0 if emb else 1
        return 0
    host = _load_symbolic(args.host)
    emb = ray_prefix_search(host, args.len, args.depth)
    out.data["embedding"] = emb.as_json() if emb else None
    out.lines.append("embedding: " + (gio.dumps(emb.as_json()) if emb else "none"))
    return 0 if emb else 1


def cmd_truncate(args, out: Output) -> int:
    obj = gio.load_json(args.file)
    if isinstance(obj, dict) and obj.get("family") == "hub":
        g = hub_truncate(hub_from_obj(obj), args.depth)
    elif isinstance(obj, dict) and "family" not in obj and "classes" in obj:
        g = hub_truncate(hub_from_obj(obj), args.depth)
    else:
        g = truncate(_load_symbolic(args.file), args.depth)
    out.data.update(gio.graph_to_obj(g))
    out.lines.append(f"vertices: {g.order()}, edges: {g.size()}")
    out.lines.append(",".join(f"{u}-{v}" for u, v in g.edge_list))
    out.dot = gio.to_dot(g)
    return 0


def cmd_vectors(args, out: Output) -> int:
    summary = run_vectors(args.file)
    out.data.update(summary)
    for r in summary["results"]:
        line = f"{'PASS' if r['pass'] else 'FAIL'} {r['command']}"
        if r.get("diagnostic"):
            line += f"  ({r['diagnostic']})"
        out.lines.append(line)
    out.lines.append(f"{summary['passed']} passed, {summary['failed']} failed, {summary['total']} total")
    return 0 if summary["failed"] == 0 else 1


# ---------------------------------------------------------------------------
# test vectors


def _json_subset(expected: Any, actual: Any) -> bool:
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(
            k in actual and _json_subset(v, actual[k]) for k, v in expected.items()
        )
    return expected == actual


def _read_records(path: Path) -> list:
    text = path.read_text().strip()
    if not text:
        return []
    if text[0] == "[":
        return json.loads(text)
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _check_record(rec: Any) -> tuple[bool, str, str]:
    if not isinstance(rec, dict) or "command" not in rec or "expected" not in rec:
        return False, gio.dumps(rec), "malformed record: needs 'command' and 'expected'"
    command = rec["command"]
    argv = shlex.split(command) if isinstance(command, str) else [str(x) for x in command]
    label = command if isinstance(command, str) else shlex.join(argv)
    expected = rec["expected"]
    if isinstance(expected, int) and not isinstance(expected, bool):
        expected = {"exit": expected}
    if not isinstance(expected, dict):
        return False, label, "malformed record: 'expected' must be an int or object"
    if "json" in expected and "--format" not in argv:
        argv = argv + ["--format", "json"]
    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(argv)
    stdout = buf.getvalue()
    problems = []
    if "exit" in expected and code != expected["exit"]:
        problems.append(f"exit {code} != {expected['exit']}")
    if "stdout_contains" in expected and expected["stdout_contains"] not in stdout:
        problems.append(f"stdout lacks {expected['stdout_contains']!r}")
    if "json" in expected:
        try:
            actual = json.loads(stdout)
        except json.JSONDecodeError:
            actual = None
        if not _json_subset(expected["json"], actual):
            problems.append("json mismatch")
    return not problems, label, "; ".join(problems)


def run_vectors(path: str | os.PathLike) -> dict:
    """Run {command, expected} records; commands resolve paths from the file's directory."""
    path = Path(path).resolve()
    records = _read_records(path)
    results = []
    old = os.getcwd()
    os.chdir(path.parent)
    try:
        for rec in records:
            try:
                ok, label, diag = _check_record(rec)
            except Exception as exc:  # a broken record counts as a failure
                ok, label, diag = False, gio.dumps(rec), f"{type(exc).__name__}: {exc}"
            results.append({"command": label, "pass": ok, "diagnostic": diag})
    finally:
        os.chdir(old)
    passed = sum(r["pass"] for r in results)
    return {"total": len(results), "passed": passed, "failed": len(results) - passed, "results": results}


# ---------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def _threads_default() -> int:
    raw = os.environ.get("RAMSEY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "dot"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS)

    parser = _Parser(prog="ramsey", description="Ramsey arrowing and self-embeddability tools")
    parser.add_argument("--format", choices=["json", "text", "dot"], default="text")
    parser.add_argument("--threads", type=_positive, default=_threads_default())
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("arrow", parents=[common], help="decide F -> (G, H)")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=cmd_arrow)

    p = sub.add_parser("minimal", parents=[common], help="is F (G, H)-minimal")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("H")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("enumerate", parents=[common], help="list (G, H)-minimal graphs within bounds")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--max-v", type=_positive, required=True)
    p.add_argument("--max-e", type=_positive, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family-check", parents=[common], help="check family conditions")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("family", nargs="+")
    p.add_argument("--max-v", type=_positive, required=True)
    p.add_argument("--max-e", type=_positive, required=True)
    p.set_defaults(func=cmd_family_check)

    p = sub.add_parser("comb", parents=[common], help="comb self-embeddability")
    csub = p.add_subparsers(dest="comb_cmd", required=True, parser_class=_Parser)
    c = csub.add_parser("check", parents=[common])
    c.add_argument("file")
    c.add_argument("--depth", type=_positive)
    c.set_defaults(func=cmd_comb)

    p = sub.add_parser("hub", parents=[common], help="hub graph operations")
    hsub = p.add_subparsers(dest="hub_cmd", required=True, parser_class=_Parser)
    c = hsub.add_parser("member", parents=[common])
    c.add_argument("file")
    c = hsub.add_parser("selfembed", parents=[common])
    c.add_argument("file")
    c.add_argument("--depth", type=_positive, required=True)
    c = hsub.add_parser("bluematch", parents=[common])
    c.add_argument("f")
    c.add_argument("coloring")
    c.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_hub)

    p = sub.add_parser("compact", parents=[common], help="least arrowing truncation")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--cap", type=_positive, required=True)
    p.set_defaults(func=cmd_compact)

    p = sub.add_parser("konig", parents=[common], help="pointed-embedding level sets")
    ksub = p.add_subparsers(dest="konig_cmd", required=True, parser_class=_Parser)
    c = ksub.add_parser("levels", parents=[common])
    c.add_argument("pattern")
    c.add_argument("host")
    c.add_argument("--max-level", type=int)
    c = ksub.add_parser("ray", parents=[common])
    c.add_argument("host")
    c.add_argument("--len", type=_positive, required=True)
    c.add_argument("--depth", type=_positive, required=True)
    p.set_defaults(func=cmd_konig)

    p = sub.add_parser("truncate", parents=[common], help="finite truncation of a symbolic graph")
    p.add_argument("file")
    p.add_argument("--depth", type=_positive, required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("vectors", parents=[common], help="run a test-vector file")
    p.add_argument("file")
    p.set_defaults(func=cmd_vectors)
    return parser


def run(args: argparse.Namespace) -> int:
    out = Output(args.format)
    code = args.func(args, out)
    out.emit(sys.stdout)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return run(args)
    except UsageError as exc:
        print(f"ramsey: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"ramsey: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
