"""Validates norbit JSON output against docs/norbit.schema.json."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ("validate", ["validate", "B", "2", "3,1,1"]),
    ("validate", ["validate", "C", "2", "3,1"]),
    ("orbit_info", ["orbit-info", "D", "4", "4,4", "--label", "II"]),
    ("orbit_info", ["orbit-info", "C", "3", "2,1^4"]),
    ("orbit_list", ["orbit-list", "C", "3"]),
    ("hasse", ["hasse", "B", "3"]),
    ("infchar", ["infchar", "B", "2", "3,1,1"]),
    ("infchar", ["infchar", "C", "3", "2,2,2", "--explain", "--pairing-mode", "literal"]),
    ("induce", ["induce", "B", "3", "--base", "3,1,1", "--blocks", "1"]),
    ("induce", ["induce", "A", "3", "--gl-orbit", "2", "--gl-orbit", "1,1"]),
    ("complete", ["complete", "D", "3", "1^6"]),
    ("complete", ["complete", "B", "3", "5,1,1"]),
    ("bvdual", ["bvdual", "C", "4", "4,4"]),
    ("branch", ["branch", "B", "2", "--weight", "1,1", "--blocks", "1"]),
    ("branch", ["branch", "A", "2", "--weight", "1,0,-1", "--blocks", "2,1", "--trivial"]),
    ("verify_report", ["verify", "hilbert", "A", "2", "2,1", "--max-degree", "2"]),
    ("verify_report", ["verify", "richardson", "A", "1", "2"]),
    ("verify_report", ["verify", "prop55", "B", "2", "--blocks", "2"]),
    ("verify_reports", ["verify", "prop55", "--all-type-a", "2"]),
    ("verify_report", ["verify", "collapse", "D", "8"]),
    ("verify_report", ["verify", "duality", "B", "3"]),
    ("verify_report", ["verify", "stage", "C", "3"]),
    ("consistency", ["verify", "consistency", "D", "4"]),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    failures = 0
    for kind, args in CASES:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True, check=False)
        if proc.returncode not in (0, 1, 2) or not proc.stdout:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode} {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        try:
            jsonschema.validate(doc, {**schema, "$ref": f"#/$defs/{kind}"})
        except jsonschema.ValidationError as err:
            print(f"FAIL {' '.join(args)}: {err.message}")
            failures += 1
            continue
        again = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True, check=False)
        if again.stdout != proc.stdout:
            print(f"FAIL {' '.join(args)}: output not deterministic")
            failures += 1
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
