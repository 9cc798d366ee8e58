#!/usr/bin/env python3
"""Validates one report per subcommand against docs/run_report.schema.json."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main(tool, schema_path, pairs):
    schema = json.loads(Path(schema_path).read_text())
    tmp = Path(tempfile.mkdtemp())
    (tmp / "set.txt").write_text("1/3\n25/3\n")
    (tmp / "graph.txt").write_text("4 3\n0 1\n1 2\n2 3\n")
    (tmp / "verts.txt").write_text("0\n3\n")
    runs = [
        ["dist", "1/0", "3/8"],
        ["geod", "1/0", "1/2"],
        ["twist", "1/0", "3", "1/3", "--half"],
        ["project", "--core", "1/0", "1/3", "13/3"],
        ["ulfp", "--set", str(tmp / "set.txt"), "--l", "5", "--k", "2"],
        ["audit-bgit", "--pairs", pairs],
        ["slice", "1/0", "1/2", "0/1", "--delta", "1", "--M", "1"],
        ["weak-index", "--geodesic", "1/0,0/1,1/3,3/8"],
        ["bounds", "--surface", "2,0", "--l", "1", "--k", "2", "--M", "1"],
        ["bounds", "--surface", "3,0", "--l", "2", "--k", "3", "--log10"],
        ["bounds", "--surface", "1,1", "--slice"],
        ["graph-ulfp", "--graph", str(tmp / "graph.txt"), "--set", str(tmp / "verts.txt"), "--l", "1", "--k", "2"],
    ]
    for args in runs:
        out = subprocess.run([tool, *args], check=True, capture_output=True, text=True).stdout
        jsonschema.validate(json.loads(out), schema)
        print("ok", " ".join(args))
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
