"""
The command line
================

Everything above is also available as ``eulerpoincare`` (or
``python -m eulerpoincare``).  Here the entry point is called in-process.
"""

import io
import json
import sys

from eulerpoincare.cli import main


def sh(*argv, stdin=""):
    print("$ eulerpoincare", " ".join(argv))
    sys.stdout.flush()
    out = io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=sys.stdout)
    print(out.getvalue().rstrip())
    print(f"[exit {code}]")
    return out.getvalue()


klein = sh("build", "klein")
sh("chi", stdin=klein)
sh("classify", stdin=klein)
sh("orientable", stdin=klein)
sh("reduce", stdin=sh("build", "sphere-tetra"))

# --json gives one document per call, with the exit code inside
doc = json.loads(sh("--json", "classify", stdin=klein))
print(doc["label"], doc["exit_code"])

# bad input exits with 2
sh("chi", stdin="scx 1\n0 1 1\n")
