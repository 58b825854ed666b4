"""Runs the symlen tool and validates each JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
for path in sorted(schema_dir.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

cases = [
    ("reduction_report", ["reduce", "--q", "5", "--rational", "(t,2)_2*(t+1,3)_2"]),
    ("reduction_report", ["reduce", "--q", "7", "--rational", "--seed", "3", "(t,3)_3*(t+1,5)_3*(t+2,2)_3"]),
    ("reduction_report", ["reduce", "--q", "5", "--rational", "--layered", "(t,2)_4*(t+1,3)_4"]),
    ("reduction_report", ["reduce", "--q", "5", "--n", "2", "(2,3)_2"]),
    ("reduction_report", ["demo-section8", "--q", "5"]),
    ("reduction_report", ["demo-section8", "--q", "5", "--a1", "t", "--b1", "-t", "--a2", "t+1", "--b2", "2"]),
    ("invariants", ["invariants", "--q", "5", "--rational", "(t,2)_4"]),
    ("invariants", ["invariants", "--q", "9", "--ext-modulus", "1,0,1", "--rational", "(t,[1,1])_2"]),
    ("equiv", ["equiv", "--q", "5", "--rational", "(t,2)_2", "(t,2)_2*(2,3)_2"]),
    ("zero_find", ["zero-find", "--q", "5", "--n", "2", "--strategy", "exhaustive", "(2,3)_2"]),
    ("zero_find", ["zero-find", "--q", "5", "--rational", "(t,2)_2*(t+1,3)_2"]),
]

failures = 0
for name, args in cases:
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    validator = jsonschema.Draft202012Validator({"$ref": f"urn:symlen:{name}"}, registry=registry)
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(f"FAIL {label}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {name}: {label}")

sys.exit(1 if failures else 0)
