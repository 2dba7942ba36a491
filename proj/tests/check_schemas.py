"""Validates ellimod command output against the shipped JSON schemas."""
import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

tool, schema_dir = sys.argv[1], Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items())


def validate(instance, name):
    Draft202012Validator(schemas[name], registry=registry).validate(instance)


SL = '{"group":"SL","n":3,"summands":[{"d":2,"lambda":["1/3","0"]},{"d":1,"lambda":["1/3","0"]}]}'
SP = '{"group":"Sp","n":2,"summands":[{"d":2,"lambda":["1/2","0"]},{"d":1,"lambda":["1/7","0"]},{"d":1,"lambda":["6/7","0"]}]}'
CASES = [
    (["canon", "--group", "E6", "--mu", "1/2,0;0,0;1/3,0;0,0;0,1/2;1/4,1/4"], "orbit_canonical_form.schema.json"),
    (["from-mu", "--group", "A3", "--mu", "1/3,0;2/3,0;0,1/2"], "bundle_decomp.schema.json"),
    (["from-mu", "--group", "C3", "--mu", "1/2,0;1/3,0;0,1/2"], "bundle_decomp.schema.json"),
    (["spectral", "--json", SL], "spectral_fiber.schema.json"),
    (["spectral", "--json", SP], "spectral_fiber.schema.json"),
    (["parabolic", "--group", "E8"], "parabolic_data.schema.json"),
    (["parabolic", "--group", "A5", "--d", "2"], "parabolic_data.schema.json"),
    (["family", "--group", "D5"], "family_table.schema.json"),
    (["verify", "--samples", "10"], "verify_report.schema.json"),
    (["family", "--group", "E8"], None),
]

for args, result_schema in CASES:
    proc = subprocess.run([tool, *args], capture_output=True, text=True)
    out = json.loads(proc.stdout)
    validate(out, "envelope.schema.json")
    if result_schema:
        assert proc.returncode == 0, (args, proc.stderr)
        validate(out["result"], result_schema)
    else:
        assert proc.returncode == 2 and "error" in out, args
    print("ok", " ".join(args[:3]))

# Decomposition input round-trips through the schema as well.
validate(json.loads(SP), "bundle_decomp.schema.json")
