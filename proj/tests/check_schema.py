"""Runs qrun across its commands and validates every JSON document against
the shipped schema. Usage: check_schema.py QRUN SCHEMA"""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["count", "--k", "2", "--n", "30"],
    ["count", "--k", "3", "--n", "20", "--family", "gk"],
    ["series", "--family", "hk", "--k", "2", "--order", "40"],
    ["series", "--family", "phi", "--order", "40"],
    ["bivariate", "--k", "1", "--order", "12", "--x-order", "12"],
    ["verify", "--suite", "all"],
    ["verify", "--suite", "fine", "--inject-fault"],
    ["asym", "--kind", "hk"],
    ["asym", "--kind", "pbar", "--k", "2"],
    ["asym", "--kind", "pklog", "--k", "3", "--n", "500"],
    ["sweep", "--n", "6", "--eps", "0.04"],
]


def main():
    qrun, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([qrun, *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors[:5]:
            print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    # The schema must reject malformed rows too.
    bad = [{"identity_name": "x", "trunc_order": 5, "status": "pass", "first_mismatch": None,
            "lhs_coeff": None, "rhs_coeff": None}]
    if validator.is_valid(bad):
        print("FAIL schema accepts a numeric trunc_order")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
