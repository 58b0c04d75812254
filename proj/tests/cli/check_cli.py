"""Runs every subcommand, validates its JSON against the shipped schema, and
checks exit codes and byte-identical reruns."""
import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
failures = []


def run(args, threads=None):
    env = dict(os.environ)
    if threads is not None:
        env["INTERCHANGE_THREADS"] = str(threads)
    return subprocess.run([cli, *args], capture_output=True, text=True, env=env)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def report(name, args, status=0, rerun=True):
    first = run(args)
    expect(first.returncode == status, f"{name}: exit {first.returncode}, want {status} {first.stderr.strip()}")
    doc = json.loads(first.stdout)
    schema = json.loads((schema_dir / f"{doc['command']}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
        expect(True, f"{name}: schema")
    except jsonschema.ValidationError as e:
        expect(False, f"{name}: schema: {e.message}")
    if rerun:
        expect(run(args).stdout == first.stdout, f"{name}: byte-identical rerun")
    return doc


with tempfile.TemporaryDirectory() as tmp:
    wfile = pathlib.Path(tmp) / "w.txt"
    wfile.write_text("# two edges\nn 4\n0 1 1.5\n1 2 0.5\n2 3 2\n0 3 0.25\n")
    dis = pathlib.Path(tmp) / "d.txt"
    dis.write_text("n 4\n0 1 1\n2 3 1\n")

    m = report("mix complete:3", ["mix", "--graph", "complete:3"])
    expect(m["lmix"] == 2 and m["mix"] == 1 and abs(m["delta"] - 16 / 33) < 1e-12, "mix complete:3 values")
    report("mix file", ["mix", "--graph", f"file:{wfile}"])
    d = report("mix disconnected", ["mix", "--graph", f"file:{dis}"])
    expect(d["lmix"] is None and d["delta"] is None, "mix disconnected gives null")

    c = report("compare path:3", ["compare", "--graph", "path:3"])
    expect(abs(c["a_star"] - 1 / 3) < 1e-9 and c["aldous"], "compare path:3 values")
    report("compare disconnected", ["compare", "--graph", f"file:{dis}"])

    o = report("octopus star", ["octopus", "--n", "3", "--arms", "1,1"])
    expect(max(abs(a - b) for a, b in zip(o["spectrum"], [0, 0, 0, 3, 3, 3])) < 1e-9, "octopus star spectrum")
    report("octopus n=6", ["octopus", "--n", "6", "--hub", "2", "--arms", "1,0,2,0.5,3"])
    report("verify-doubling", ["verify-doubling", "--graph", "cycle:5", "--levels", "3"])
    report("cycles", ["cycles", "--graph", "complete:4", "--k", "2", "--t", "0.5"])
    report("cycles mc", ["cycles", "--graph", "hamming2:2", "--k", "4", "--t", "0.3", "--mc",
                         "--samples", "5000", "--seed", "9"])
    qargs = ["qhf", "--graph", "cycle:6", "--t", "0.8", "--samples", "20000", "--seed", "4"]
    expect(run(qargs, threads=1).stdout == run(qargs, threads=5).stdout, "Monte Carlo independent of thread count")
    report("large-cycles", ["large-cycles", "--graph", "complete:8", "--t", "1", "--samples", "3000"])
    q = report("qhf", ["qhf", "--graph", "complete:4", "--t", "0", "--samples", "100"])
    expect(q["monte_carlo"]["z"] == 16 and q["monte_carlo"]["m_sq"] == 4, "qhf at t=0")
    report("constants", ["constants", "--graphs", "complete:4;path:5;hamming2:2"])

    s = report("suite desk", ["suite", "--level", "desk", "--omit-timing"])
    expect(s["passed"] and [c["id"] for c in s["checks"]] == list(range(1, 12)), "suite: 11 criteria, all pass")

    out, csv = pathlib.Path(tmp) / "r.json", pathlib.Path(tmp) / "r.csv"
    r = run(["compare", "--graph", "star:4", "--out", str(out), "--csv", str(csv)])
    expect(r.returncode == 0 and r.stdout == "" and json.loads(out.read_text())["command"] == "compare",
           "--out writes the report")
    expect(csv.read_text().startswith("partition,dim,lambda_kn,lambda_1\n"), "--csv writes the table")

    for args in (["mix"], ["nope"], ["mix", "--graph", "bogus:3"], ["cycles", "--graph", "path:3", "--k", "9", "--t", "1"],
                 ["qhf", "--graph", "path:3", "--t", "-1"], ["mix", "--graph", "path:3", "--tol", "0"],
                 ["mix", "--graph", "path:3", "--csv", str(csv)], []):
        expect(run(args).returncode == 2, f"usage error exit 2: {' '.join(args)}")

    r = run(["octopus", "--n", "4", "--arms", "1,1"])
    expect(r.returncode == 2, "octopus with wrong arm count is a usage error")

sys.exit(1 if failures else 0)
