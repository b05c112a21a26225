"""Validate arclab JSON output against the shipped schemas.

usage: schema_check.py ARCLAB_BINARY SCHEMA_DIR
"""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def validate(doc, name):
    jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)


def lines(*args):
    out = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
    docs = [json.loads(line) for line in out.splitlines() if line.strip()]
    validate(docs[0], "header.schema.json")
    return docs[1:]


for row in lines("census", "--q", "4", "--k", "2,3,4", "--format", "json"):
    validate(row, "census_row.schema.json")
for args in (["--q", "7", "--parabola"], ["--q", "9", "--random", "0.4", "--seed", "2"],
             ["--q", "13", "--random", "0.5", "--method", "greedy"]):
    (cert,) = lines("maxarc", *args)
    validate(cert, "maxarc_certificate.schema.json")
(cert,) = lines("construct", "--q", "49", "--seed", "7")
validate(cert, "construction_certificate.schema.json")
validate(cert["points"], "point_set.schema.json")
for mode in ("none", "greedy", "exact"):
    docs = lines("random-arc", "--q", "7", "--p", "1/4", "--trials", "5", "--arc-mode", mode)
    for trial in docs[:-1]:
        validate(trial, "experiment_trial.schema.json")
    validate(docs[-1], "experiment_report.schema.json")

with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "p.json"
    path.write_text(json.dumps({"q": 5, "kind": "affine", "points": [0, 6, 12]}))
    validate(json.loads(path.read_text()), "point_set.schema.json")
    (cert,) = lines("maxarc", "--points", str(path))
    validate(cert, "maxarc_certificate.schema.json")

print("all outputs match their schemas")
