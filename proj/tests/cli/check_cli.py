# Copyright 2026 The QCW Authors
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

"""Runs the qcw binary, validates every output line against the shipped schemas and checks
byte-identical output for repeated seeds."""

import json
import os
import pathlib
import subprocess
import sys

import jsonschema
import referencing

QCW, ROOT = sys.argv[1], pathlib.Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "data"


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


resources = [(s["$id"], referencing.Resource.from_contents(s))
             for s in map(load_schema, ["run_report.schema.json", "aggregate.schema.json",
                                        "transcript.schema.json"])]
registry = referencing.Registry().with_resources(resources)
trial_validator = jsonschema.Draft202012Validator(load_schema("run_report.schema.json"), registry=registry)
aggregate_validator = jsonschema.Draft202012Validator(load_schema("aggregate.schema.json"), registry=registry)

failures = []


def run(args, env_extra=None, expect=0):
    env = dict(os.environ)
    env.pop("QCW_SEED", None)
    env.update(env_extra or {})
    proc = subprocess.run([QCW, *args], capture_output=True, text=True, env=env)
    if proc.returncode != expect:
        failures.append(f"{args}: exit {proc.returncode}, expected {expect}: {proc.stderr.strip()}")
    return proc.stdout


def lines_of(args, **kw):
    out = run(args, **kw)
    rows = [json.loads(line) for line in out.splitlines()]
    for row in rows:
        validator = aggregate_validator if row.get("type") == "aggregate" else trial_validator
        for error in validator.iter_errors(row):
            failures.append(f"{args}: schema: {error.message}")
    if not rows or rows[-1].get("type") != "aggregate":
        failures.append(f"{args}: missing aggregate line")
    return out, rows


def check(cond, what):
    if not cond:
        failures.append(what)


COMMANDS = [
    ["deutsch", "--seed", "7"],
    ["simon", "--n", "5", "--trials", "3", "--seed", "2"],
    ["grover", "--n", "10", "--marked", "0000000001", "--trials", "3"],
    ["grover", "--oracle", str(DATA / "marked_101.tt")],
    ["sat", "--circuit", str(DATA / "parity_five_gate.json")],
    ["sat", "--circuit", str(DATA / "contradiction.json")],
    ["or-and", "--n1", "3", "--n2", "3", "--eps", "0.1", "--trials", "3"],
    ["parity", "--n", "6"],
    ["order", "--a", "2", "--N", "5"],
    ["factor", "--N", "2021"],
    ["eq", "--n", "64", "--eps", "0.001", "--trials", "5"],
    ["intersect", "--n", "16", "--eps", "0.01", "--trials", "100", "--seed", "1"],
    ["ip-check", "--n", "4"],
    ["simulate", "--circuit", str(DATA / "toffoli_from_cv.txt"), "--input", "110"],
]

for cmd in COMMANDS:
    first, rows = lines_of(cmd)
    second = run(cmd)
    check(first == second, f"{cmd}: output differs between identical runs")

# Specific expectations.
_, rows = lines_of(["deutsch", "--seed", "7"])
trials = [r for r in rows if r["type"] == "trial"]
check(len(trials) == 4 and all(r["queries"] == 1 and r["success"] for r in trials), "deutsch reports")

_, rows = lines_of(["intersect", "--n", "16", "--eps", "0.01", "--trials", "100", "--seed", "1"])
trials = [r for r in rows if r["type"] == "trial"]
check(rows[-1]["success_rate"] >= 0.99, "intersect success rate")
check(all(r["transcript"]["qubits_total"] == 14 * r["queries"] for r in trials), "intersect qubit accounting")

_, rows = lines_of(["factor", "--N", "2021"])
check(rows[0]["outcome"]["factors"] == [43, 47], "factor 2021")

_, rows = lines_of(["sat", "--circuit", str(DATA / "contradiction.json")])
check(rows[0]["outcome"]["satisfiable"] is False and rows[0]["success"], "unsatisfiable circuit exits 0")

# Seed selection: QCW_SEED replaces the default, --seed wins over it.
env_out = run(["simon", "--n", "4"], env_extra={"QCW_SEED": "9"})
check(env_out == run(["simon", "--n", "4", "--seed", "9"]), "QCW_SEED overrides default")
check(env_out != run(["simon", "--n", "4"]), "QCW_SEED changes output")
check(run(["simon", "--n", "4", "--seed", "3"], env_extra={"QCW_SEED": "9"}) == run(["simon", "--n", "4", "--seed", "3"]),
      "--seed beats QCW_SEED")

# Other formats render without error.
run(["parity", "--n", "3", "--format", "csv"])
run(["parity", "--n", "3", "--format", "table"])

# Exit codes.
run(["grover", "--n", "3", "--eps", "0.7"], expect=2)
run(["grover", "--n", "3", "--trials", "0"], expect=2)
run(["parity", "--n", "3", "--format", "xml"], expect=2)
run(["simon", "--n", "4"], env_extra={"QCW_SEED": "abc"}, expect=2)
run(["order", "--a", "5", "--N", "10"], expect=2)
run(["sat", "--circuit", str(DATA / "missing.json")], expect=3)
run(["simulate", "--circuit", str(DATA / "parity_five_gate.json")], expect=3)
run([], expect=2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print(f"cli checks passed ({len(COMMANDS)} commands)")
