"""Runs the cantorq binary on a spread of arguments and validates every JSON
document against docs/cli-output.schema.json."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["optimal-set", "--n", "1"],
    ["optimal-set", "--n", "6", "--split-set", "all"],
    ["optimal-set", "--n", "4", "--split-set", "none"],
    ["error-table", "--max-n", "40"],
    ["verify", "--max-n", "6", "--level", "5"],
    ["asymptotics", "--kind", "dimension", "--max-level", "20"],
    ["asymptotics", "--kind", "coefficient", "--max-level", "62"],
    ["asymptotics", "--kind", "dimension", "--max-level", "8", "--plot-data"],
]


def main(tool, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([tool, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
