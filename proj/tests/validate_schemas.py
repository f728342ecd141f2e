#!/usr/bin/env python3
# Runs the gt binary over a fixed set of invocations and validates every
# document against schemas/. Usage: validate_schemas.py <gt> <schemas dir>
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

gt, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}

tmp = pathlib.Path(tempfile.mkdtemp())
(tmp / "A.json").write_text('[{"coef": "3/2", "word": "x1 y1"}, {"coef": 2, "word": "x1"}]')
(tmp / "F.json").write_text('{"t": {"x1": 2, "z1": 1}}')
(tmp / "psi.json").write_text('{"images": {"x1": "x1", "y1": "y1 x1"}}')

runs = [
    ("bracket", ["bracket", "--g", "1", "--n", "0", str(tmp / "A.json"), str(tmp / "A.json")], 0),
    ("bracket", ["bracket", "--g", "1", "--n", "0", "x", "y", "--pretty"], 0),
    ("bracket", ["bracket", "--g", "1", "--n", "1", "x y Z1", "y y", "--threads", "2"], 0),
    ("cobracket", ["cobracket", "--g", "1", "--n", "0", "x x Y Y", "--framing", '{"t":{"x1":1}}'], 0),
    ("cobracket", ["cobracket", "--g", "0", "--n", "2", "z1 z1 z2", "--unframed", "--pretty"], 0),
    ("rot", ["rot", "--g", "1", "--n", "0", "--framing", '{"t":{}}', "--word", "x1 y1 X1 Y1"], 0),
    ("degrees", ["degrees", "--g", "1", "--n", "1", "--framing", "@" + str(tmp / "F.json")], 0),
    ("classify", ["classify", "--g", "1", "--n", "1", "--framing", '{"t":{"x1":2}}'], 0),
    ("classify", ["classify", "--g", "2", "--n", "0", "--other", '{"t":{"y2":1}}'], 0),
    ("orbit", ["orbit", "--g", "1", "--n", "1", "--box", "1"], 0),
    ("exists-qaf", ["exists-qaf", "--g", "1", "--n", "2"], 0),
    ("push", ["push", "--g", "1", "--n", "2", "--puncture", "2", "--word", "x y"], 0),
    ("cocycle", ["cocycle", "--g", "1", "--n", "1", "--images", "@" + str(tmp / "psi.json")], 0),
    ("cocycle", ["cocycle", "--g", "1", "--n", "1", "--puncture", "1", "--word", "x"], 0),
    ("expand", ["expand", "--g", "1", "--n", "0", "--word", "x y", "--N", "3", "--log"], 0),
    ("expand", ["expand", "--g", "1", "--n", "1", "--word", "x z1", "--cyclic"], 0),
    ("boundary-defect", ["boundary-defect", "--g", "0", "--n", "2", "--N", "4"], 0),
    ("boundary-defect", ["boundary-defect", "--g", "1", "--n", "1", "--N", "4", "--expansion", "boundary"], 0),
    ("filtration-report", ["filtration-report", "--g", "1", "--n", "0", "--N", "5", "x y X Y", "x"], 0),
    ("filtration-report", ["filtration-report", "--g", "0", "--n", "2", "z1"], 0),
    ("check", ["check", "--surface", "1,0", "--samples", "3"], 0),
    ("error", ["rot", "--g", "0", "--n", "0", "--word", "x"], 2),
    ("error", ["rot", "--g", "1", "--n", "0", "--word", ""], 2),
    ("error", ["push", "--g", "1", "--n", "1", "--puncture", "3", "--word", "x"], 2),
    ("error", ["cocycle", "--g", "1", "--n", "0", "--images", '{"images":{"x1":"x1 x1"}}'], 2),
    ("error", ["rot", "--g", "1"], 1),
    ("error", ["rot", "--g", "1", "--n", "0", "--word", "x", "--nope"], 1),
    ("error", ["degrees", "--g", "1", "--n", "0", "--framing", "{bad"], 1),
]

failures = 0
for kind, args, want in runs:
    outs = []
    for _ in range(2):
        p = subprocess.run([gt] + args, capture_output=True, text=True)
        outs.append(p.stdout)
    if outs[0] != outs[1]:
        print(f"FAIL nondeterministic: {args}")
        failures += 1
    if p.returncode != want:
        print(f"FAIL exit {p.returncode} != {want}: {args}\n{p.stdout}")
        failures += 1
        continue
    try:
        jsonschema.validate(json.loads(outs[0]), schemas[kind])
    except (jsonschema.ValidationError, json.JSONDecodeError) as e:
        print(f"FAIL schema {kind}: {args}: {e}")
        failures += 1
        continue
    print(f"ok   {kind}: {' '.join(args)}")

# outputs feed back in as inputs
p = subprocess.run([gt, "bracket", "--g", "1", "--n", "0", "x", "y"], capture_output=True, text=True)
(tmp / "B.json").write_text(p.stdout)
q = subprocess.run([gt, "bracket", "--g", "1", "--n", "0", str(tmp / "B.json"), "x y"], capture_output=True, text=True)
if json.loads(q.stdout).get("terms") != []:
    print("FAIL round trip")
    failures += 1

print(f"{failures} failures")
sys.exit(1 if failures else 0)
