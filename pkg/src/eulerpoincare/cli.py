"""Command-line interface.

Exit status: 0 on success, 1 when validation or classification fails,
2 on parse and usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .builders import MODEL_NAMES, ModelId, build
from .cauchy import reduce
from .errors import (
    DegenerateFace, DegenerateSimplex, DiagonalCollision, InvalidParameter, ParseError, TopologyError,
)
from .io.off import fan_triangulate, parse_off
from .io.scx import parse_scx, serialize_scx
from .orientation import orientability_check
from .simplicial import euler_characteristic, validate
from .surfaces import classify, connected_sum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# errors that mean "the input could not be read", as opposed to "the input is not what was asked for"
_INPUT_ERRORS = (
    ParseError, DegenerateSimplex, DegenerateFace, DiagonalCollision, InvalidParameter,
    OSError, UnicodeDecodeError,
)


class _Usage(Exception):
    pass


def _read_text(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    return Path(path).read_text()


def _sniff(path: str, text: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix in (".off", ".scx"):
        return suffix[1:]
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return "off" if line.split()[0] == "OFF" else "scx"
    return "scx"


def load_complex(path: str, fmt: str | None = None, stdin=None):
    text = _read_text(path, stdin or sys.stdin)
    if _sniff(path, text, fmt) == "off":
        return fan_triangulate(parse_off(text))
    return parse_scx(text)


def _fmt_simplex(s) -> str:
    return "(" + " ".join(map(str, s)) + ")"


def _yes_no(flag) -> str:
    return "undefined" if flag is None else ("yes" if flag else "no")


# -- subcommands ----------------------------------------------------------
# each returns (exit code, json document, human lines)


def cmd_chi(args, stdin):
    c = load_complex(args.file, args.format, stdin)
    chi = euler_characteristic(c)
    return EXIT_OK, {"chi": chi, "counts": list(c.counts())}, [str(chi)]


def cmd_validate(args, stdin):
    c = load_complex(args.file, args.format, stdin)
    k = c.dim if args.pure is None else args.pure
    report = validate(c, require_pure=k)
    doc = {
        "valid": report.ok,
        "pure_dim": k,
        "counts": list(c.counts()),
        "missing_faces": [{"simplex": list(s), "face": list(f)} for s, f in report.missing_faces],
        "impure": [list(s) for s in report.impure],
    }
    lines = report.findings() or [f"valid: pure of dimension {k}, counts {' '.join(map(str, c.counts()))}"]
    return (EXIT_OK if report.ok else EXIT_FAIL), doc, lines


def report_lines(r) -> list:
    pinches = " ".join(map(str, r.pinch_vertices)) or "none"
    return [
        r.summary(),
        f"label: {r.label}",
        f"kind: {r.kind}",
        f"closed: {_yes_no(r.closed)}",
        f"orientable: {_yes_no(r.orientable)}",
        f"genus: {'none' if r.genus is None else r.genus}",
        f"chi: {r.chi}",
        f"pinch vertices: {pinches}",
    ]


def cmd_classify(args, stdin):
    c = load_complex(args.file, args.format, stdin)
    r = classify(c)
    code = EXIT_FAIL if r.kind == "not-surface" else EXIT_OK
    return code, r.to_dict(), report_lines(r)


def cmd_orientable(args, stdin):
    c = load_complex(args.file, args.format, stdin)
    verdict = orientability_check(c)
    if verdict.orientable:
        doc = {
            "orientable": True,
            "assignment": [{"triangle": list(t), "sign": s} for t, s in sorted(verdict.assignment.items())],
        }
        return EXIT_OK, doc, ["orientable"]
    doc = {"orientable": False, "witness": [list(t) for t in verdict.witness]}
    lines = ["non-orientable", "witness: " + " -> ".join(_fmt_simplex(t) for t in verdict.witness)]
    return EXIT_OK, doc, lines


def _parse_seed(text):
    if text is None:
        return None
    try:
        vs = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise _Usage(f"--seed expects three vertex ids, got {text!r}") from None
    if len(vs) != 3:
        raise _Usage(f"--seed expects three vertex ids, got {text!r}")
    return vs


def cmd_reduce(args, stdin):
    c = load_complex(args.file, args.format, stdin)
    trace = reduce(c, seed_triangle=_parse_seed(args.seed), max_backtrack=args.max_backtrack)
    lines = trace.log_lines() if args.trace else [trace.final_line()]
    doc = trace.to_dict()
    if not args.trace:
        doc.pop("steps")
        doc["n_steps"] = len(trace.steps)
    return EXIT_OK, doc, lines


def _emit_complex(c, out_path, extra):
    text = serialize_scx(c)
    if out_path:
        Path(out_path).write_text(text)
    doc = dict(extra, counts=list(c.counts()), chi=euler_characteristic(c),
               maximal=[list(s) for s in c.maximal_simplices()])
    if out_path:
        doc["output"] = out_path
    return doc, ([] if not out_path else [f"wrote {out_path}"]), (None if out_path else text)


def cmd_build(args, stdin):
    m = ModelId.parse(args.model)
    doc, lines, text = _emit_complex(build(m), args.output, {"model": str(m)})
    return EXIT_OK, doc, lines if text is None else text


def cmd_connect_sum(args, stdin):
    a = load_complex(args.a, args.format, stdin)
    b = load_complex(args.b, args.format, stdin)
    doc, lines, text = _emit_complex(connected_sum(a, b), args.output, {})
    return EXIT_OK, doc, lines if text is None else text


COMMANDS = {
    "chi": cmd_chi,
    "validate": cmd_validate,
    "classify": cmd_classify,
    "orientable": cmd_orientable,
    "reduce": cmd_reduce,
    "build": cmd_build,
    "connect-sum": cmd_connect_sum,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print one JSON document instead of text")
    common.add_argument("--format", choices=("scx", "off"), default=argparse.SUPPRESS,
                        help="input format (default: from the extension or the first line)")

    p = _Parser(prog="eulerpoincare", description="Euler characteristic and surface tools.",
                parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def file_cmd(name, help):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.add_argument("file", nargs="?", default="-", help="input file, '-' for stdin")
        return sp

    file_cmd("chi", "print the Euler characteristic")
    sp = file_cmd("validate", "check face closure and purity")
    sp.add_argument("--pure", type=int, default=None, metavar="K",
                    help="required pure dimension (default: the complex's dimension)")
    file_cmd("classify", "identify the surface")
    file_cmd("orientable", "decide orientability, with a witness cycle if not")
    sp = file_cmd("reduce", "run the triangle-removal reduction")
    sp.add_argument("--trace", action="store_true", help="print every step")
    sp.add_argument("--seed", metavar="T", help="seed triangle, e.g. '0,1,2'")
    sp.add_argument("--max-backtrack", type=int, default=8, metavar="K")
    sp = sub.add_parser("build", help="write a model complex as SCX", parents=[common])
    sp.add_argument("model", help="one of: " + ", ".join(
        n + ("(N)" if n in ("genus", "crosscaps") else "") for n in MODEL_NAMES))
    sp.add_argument("-o", "--output")
    sp = sub.add_parser("connect-sum", help="connected sum of two surfaces, as SCX", parents=[common])
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("-o", "--output")
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as e:
        print(f"usage error: {e}", file=stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    args.json = getattr(args, "json", False)
    args.format = getattr(args, "format", None)

    try:
        code, doc, out = COMMANDS[args.command](args, stdin)
    except (_Usage, *_INPUT_ERRORS) as e:
        code, doc, out = EXIT_USAGE, {"error": {"type": type(e).__name__, "message": str(e)}}, None
        err = str(e)
    except TopologyError as e:
        code, doc, out = EXIT_FAIL, {"error": {"type": type(e).__name__, "message": str(e)}}, None
        err = str(e)
    else:
        err = None

    if args.json:
        doc = dict(doc, command=args.command, exit_code=code)
        stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif out is not None:
        stdout.write(out if isinstance(out, str) else "\n".join(out) + "\n")
    if err is not None:
        print(f"error: {err}", file=stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
