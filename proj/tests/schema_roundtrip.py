"""Run every CLI command and validate the JSON reports with jsonschema."""

import json
import os
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["membership", "--family", "f_theta", "--lambda", "0.5", "--against", "0.5"],
    ["coeffs", "--family", "f_a", "--lambda", "0.15", "--a", "0.5"],
    ["counterexample", "--lambda", "0.15", "--a", "0.5"],
    ["counterexample", "--scan"],
    ["convexity", "--family", "omega1_az2", "--lambda", "1", "--a", "1", "--gamma", "0"],
    ["subordination", "--family", "example32", "--lambda", "0.25", "--k", "3"],
    ["blaschke", "--kind", "B1"],
    ["harmonic", "--lambda", "0.3", "--dilatation", "0.18*z"],
    ["render", "--family", "g", "--radius", "0.999", "--samples", "300"],
]
PLAN = ["--radii-count", "10", "--angles", "256"]
NEEDS_PLAN = {"membership", "convexity", "subordination", "harmonic"}


def main() -> int:
    binary, schema_path, out_dir = sys.argv[1:4]
    os.makedirs(out_dir, exist_ok=True)
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for i, args in enumerate(COMMANDS):
        target = os.path.join(out_dir, f"report_{i}.json")
        full = [binary, *args, "--json", target]
        if args[0] in NEEDS_PLAN:
            full += PLAN
        proc = subprocess.run(full, capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        with open(target, encoding="utf-8") as fh:
            doc = json.load(fh)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for err in errors:
            print(f"FAIL {' '.join(args)}: {list(err.path)}: {err.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
