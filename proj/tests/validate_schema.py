#!/usr/bin/env python3
"""Runs each CLI verb once and validates the JSON against the report schema."""

import json
import subprocess
import sys
import tempfile
import os

import jsonschema


def main():
    if len(sys.argv) != 3:
        print("usage: validate_schema.py <cli> <schema>", file=sys.stderr)
        return 2
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft7Validator(schema)

    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("2 2\n2 1\n1 3\n")
        matrix_path = f.name

    invocations = {
        "snf": ["snf", "--matrix", matrix_path],
        "ktheory": ["ktheory", "--matrix", matrix_path],
        "count": ["count", "--curve", "ec:a=0,b=1", "--p", "13", "--ext", "2"],
        "zeta": ["zeta", "--curve", "ec:a=0,b=1", "--p", "5", "--order", "4"],
        "factors": ["factors", "--curve", "ec:a=1,b=1", "--s", "2", "--bound", "40"],
        "family": ["family", "--curve", "ec:a=0,b=7", "--bound", "30"],
        "scan": ["scan", "--curve", "ec:a=0,b=1", "--bound", "60"],
        "scan-empty": ["scan", "--curve", "ec:a=0,b=1", "--bound", "3"],
        "verify-t11": ["verify-t11", "--matrix", matrix_path],
    }

    failures = 0
    for name, args in invocations.items():
        proc = subprocess.run([cli] + args, capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {name}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {name}: output is not JSON: {e}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            first = errors[0]
            print(f"FAIL {name}: {first.message} at {list(first.path)}")
            failures += 1
        else:
            print(f"PASS {name}")

    os.unlink(matrix_path)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
