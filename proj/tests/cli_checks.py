# Copyright 2026 The sgq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Drives the sgq binary over the files in data/: exit codes, report values,
# schema validation and byte-identical reruns.
# usage: cli_checks.py <sgq> <repo root> <scratch dir>

import filecmp
import json
import os
import shutil
import subprocess
import sys

import jsonschema

SGQ, ROOT, SCRATCH = sys.argv[1:4]
DATA = os.path.join(ROOT, "data")
SCHEMAS = os.path.join(ROOT, "docs", "schemas")
failures = []


def d(name):
    return os.path.join(DATA, name)


def run(args, code=0, schema=None):
    p = subprocess.run([SGQ] + args, capture_output=True, text=True)
    label = " ".join(args)
    if p.returncode != code:
        failures.append(f"{label}: exit {p.returncode}, wanted {code}; stderr: {p.stderr.strip()}")
    if schema is None:
        return p
    try:
        out = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{label}: stdout is not JSON ({e})")
        return p
    with open(os.path.join(SCHEMAS, schema + ".schema.json")) as f:
        try:
            jsonschema.validate(out, json.load(f))
        except jsonschema.ValidationError as e:
            failures.append(f"{label}: {schema} schema: {e.message}")
    p.json = out
    return p


def expect(cond, what):
    if not cond:
        failures.append(what)


def pair(graph, group):
    return ["--graph", d(graph), "--group", d(group)]


shutil.rmtree(SCRATCH, ignore_errors=True)
os.makedirs(SCRATCH)
out1, out2 = os.path.join(SCRATCH, "a"), os.path.join(SCRATCH, "b")

# analyze
r = run(["analyze"] + pair("k5.graph", "s5.grp"), schema="symmetry_report")
expect(r.json["max_s_arc_transitive"] == 2, "K5: max s is 2")
r = run(["analyze"] + pair("k8.graph", "agl32.grp"), schema="symmetry_report")
expect(r.json["local_group"]["order"] == 168, "K8: local group of order 168")
r = run(["analyze", "--graph", d("nope.graph"), "--group", d("s5.grp")], code=2)
expect("nope.graph" in r.stderr, "missing file is named")
run(["analyze"] + pair("k5.graph", "s4.grp"), code=3)
r = run(["analyze", "--graph", d("k5.graph"), "--group", d("bad.grp")], code=2)
expect("bad.grp:3" in r.stderr, "parse error carries the line number: " + r.stderr)

# orbits
r = run(["orbits"] + pair("k55m.graph", "k55m.grp"), schema="orbits")
expect([o["ell"] for o in r.json["orbits"]] == [[1, 2], [2, 1]], "K55-5K2 ell vectors")
r = run(["orbits", "--self-paired-only"] + pair("chiral_k33.graph", "chiral_k33.grp"), schema="orbits")
expect(r.json["orbits"] == [], "chiral orbits are filtered out")
r = run(["orbits"] + pair("chiral_k33.graph", "chiral_k33.grp"), schema="orbits")
expect(len(r.json["orbits"]) == 2, "chiral fixture has two orbits")
r = run(["orbits", "--graph", d("empty.graph"), "--group", d("trivial3.grp")], code=3)
expect("no 3-arcs" in r.stderr, "empty graph message")

# construct, twice into separate directories
for out in (out1, out2):
    r = run(["construct", "xi"] + pair("k5.graph", "s5.grp") + ["--orbit", "0", "--out", out],
            schema="construction_sidecar")
    expect(r.json["vertices"] == 20 and r.json["edges"] == 30, "Xi(K5) is 20 vertices, cubic")
    run(["construct", "gimel"] + pair("k55m.graph", "k55m.grp") + ["--orbit", "0,6,2,5", "--out", out],
        schema="construction_sidecar")
    run(["construct", "psi"] + pair("k5.graph", "s5.grp") + ["--orbit", "1", "--out", out],
        schema="construction_sidecar")
    r = run(["construct", "pi"] + pair("k8.graph", "agl32.grp") +
            ["--star", "0;2,4,6", "--partner", "4;0,2,6", "--out", out, "--name", "pi1"],
            schema="construction_sidecar")
    expect(r.json["vertices"] == 56 and r.json["edges"] == 84, "Pi1 on K8 has 14 K4 worth of edges")
    run(["construct", "pi"] + pair("k8.graph", "agl32.grp") +
        ["--star", "0;2,4,6", "--orbit", "1", "--out", out, "--name", "pi2"], schema="construction_sidecar")
match, mismatch, errors = filecmp.cmpfiles(out1, out2, sorted(os.listdir(out1)), shallow=False)
expect(not mismatch and not errors and len(match) >= 15, f"reruns differ: {mismatch} {errors}")
run(["construct", "xi"] + pair("k5.graph", "s5.grp") + ["--orbit", "7", "--out", out1], code=4)
run(["construct", "gimel"] + pair("k5.graph", "s5.grp") + ["--orbit", "0,1,0,1", "--out", out1], code=4)
run(["construct", "xi"] + pair("chiral_k33.graph", "chiral_k33.grp") + ["--orbit", "0", "--out", out1], code=3)

# classify
def classify(stem):
    p = os.path.join(out1, stem)
    return run(["classify", "--graph", p + ".graph", "--group", p + ".grp", "--partition", p + ".part"],
               schema="quotient_report").json


expect(classify("xi")["case"] == "a", "Xi(K5) is case a")
expect(classify("psi")["case"] == "b", "Psi(K5) is case b")
q = classify("pi2")
expect(q["case"] == "c" and q["subcase"] == "c.2", "Pi2 on K8 is c.2")
expect(q["params"] == {"v": 7, "k": 3, "r": 3, "b": 7}, "Pi2 parameters")
expect(classify("pi1")["subcase"] == "c.1", "Pi1 on K8 is c.1")

# verify
r = run(["verify", "near-ngonal", "--graph", d("k55m.graph"), "--cycles", d("k55m_delta1.cycles")],
        schema="near_polygon")
expect(r.json["certified"] and r.json["n"] == 6, "K55-5K2 cycles certified")
run(["verify", "near-ngonal", "--graph", d("k5.graph"), "--cycles", d("k5_triangles.cycles")], code=1,
    schema="near_polygon")
r = run(["verify", "round-trip", "--construction", "pi"] + pair("k8.graph", "agl32.grp") + ["--star", "0;2,4,6"],
        schema="round_trip")
expect(r.json["passed"] and r.json["reconstruction"]["verified"], "pi round trip")
run(["verify", "round-trip", "--construction", "xi"] + pair("k55m.graph", "k55m.grp") + ["--orbit", "1"],
    schema="round_trip")
r = run(["verify", "suite", "--json", "--criterion", "3"], schema="suite")
expect(r.json["passed"], "criterion 3 via the CLI")

# coset, iso, bounds
r = run(["coset", "--psl2", "23", "--shape", "S4"], schema="coset")
expect(r.json["graph"]["connected"] and r.json["graph"]["vertices"] == 253, "PSL(2,23) S4 coset graph")
r = run(["coset", "--psl2", "17", "--shape", "S4"], schema="coset")
expect(r.json["hits"] == 0 and r.json["graph"] is None, "PSL(2,17) has no S4 hit")
run(["--max-order", "100", "coset", "--psl2", "11"], code=3)
r = run(["iso", "--graph", d("k5.graph"), "--other", d("k5.graph")], schema="iso")
expect(r.json["isomorphic"], "K5 is K5")
run(["iso", "--graph", d("k5.graph"), "--other", d("k4.graph")], schema="iso")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
