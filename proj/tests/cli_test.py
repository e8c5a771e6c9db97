#!/usr/bin/env python3
"""End-to-end checks for the forgetcnf command line tool."""

import json
import subprocess
import sys
import tempfile
import os

CLI = sys.argv[1]

failures = []


def run(args, stdin=None):
    return subprocess.run(
        [CLI] + args, input=stdin, capture_output=True, text=True
    )


def check(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")
        print(f"FAIL {name} {detail}")
    else:
        print(f"ok   {name}")


def clause_set(text):
    out = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(frozenset(line.split()))
    return out


def write(path, content):
    with open(path, "w") as fh:
        fh.write(content)
    return path


tmp = tempfile.mkdtemp(prefix="forgetcnf-cli-")
PI = write(os.path.join(tmp, "pi.txt"), "p q -a\np -q\nb -p\nc -p\n")
SIGMA = write(os.path.join(tmp, "sigma.txt"), "p -a\np -q -b\nq -p\nc -p\n")
EX1 = write(os.path.join(tmp, "ex1.txt"), "p q\n-p -q\np -q\n")
TARGET = write(os.path.join(tmp, "target.txt"), "b -a\nc -a\n")
HORN42 = write(os.path.join(tmp, "horn42.txt"), "-p -r\n-q r\n-s r\n-t\n")
DIMACS = write(os.path.join(tmp, "tiny.cnf"), "p cnf 2 2\n1 2 0\n-1 -2 0\n")

# forget: the -f list is also the unfold order, so q,p reproduces the
# two-clause result and p,q the equivalent three-clause one.
r = run(["forget", "-f", "q,p", PI])
check("forget order q,p", r.returncode == 0 and
      clause_set(r.stdout) == {frozenset({"b", "-a"}), frozenset({"c", "-a"})},
      r.stdout)
r = run(["forget", "-f", "p,q", PI])
check("forget order p,q", r.returncode == 0 and
      clause_set(r.stdout) == {frozenset({"b", "-a"}), frozenset({"c", "-a"}),
                               frozenset({"b", "c", "-a"})},
      r.stdout)

r = run(["forget", "-f", "p,q", "--minimize", PI])
check("forget minimized", r.returncode == 0 and
      clause_set(r.stdout) == {frozenset({"b", "-a"}), frozenset({"c", "-a"})},
      r.stdout)

r = run(["forget", "-f", "p,q", "--format", "json", PI])
payload = json.loads(r.stdout)
check("forget json", r.returncode == 0 and
      {frozenset(c) for c in payload["clauses"]} ==
      {frozenset({"b", "-a"}), frozenset({"c", "-a"}),
       frozenset({"b", "c", "-a"})},
      r.stdout)

# stdin and DNF input
r = run(["forget", "--dnf", "-f", "q", "-"], stdin="p -q\n")
check("forget dnf stdin", r.returncode == 0 and r.stdout.strip() == "p",
      r.stdout)

# pi / ip
r = run(["pi", EX1])
check("pi", r.returncode == 0 and
      clause_set(r.stdout) == {frozenset({"p"}), frozenset({"-q"})}, r.stdout)
r = run(["ip", EX1])
check("ip", r.returncode == 0 and
      clause_set(r.stdout) == {frozenset({"p", "-q"})}, r.stdout)

# classify
r = run(["classify", "--format", "json", EX1])
report = json.loads(r.stdout)
check("classify json", r.returncode == 0 and report["horn"] is False and
      report["krom"] is True and report["q_horn"] is not None, r.stdout)

# check: true and false verdicts drive the exit code
r = run(["check", "--task", "var-match", "-f", "p,q", TARGET, PI])
check("check true exit 0", r.returncode == 0 and '"answer"' not in r.stdout and
      "answer: true" in r.stdout, f"rc={r.returncode} {r.stdout}")
r = run(["check", "--task", "var-ent", "-f", "p,q", SIGMA, PI,
         "--format", "json"])
verdict = json.loads(r.stdout)
check("check false exit 1", r.returncode == 1 and verdict["answer"] is False and
      frozenset(verdict["certificate"]["witness_clause"]) ==
      frozenset({"b", "-a"}),
      f"rc={r.returncode} {r.stdout}")
r = run(["check", "--task", "var-ind", "-f", "p", "-"], stdin="b -a\n")
check("check var-ind", r.returncode == 0, f"rc={r.returncode}")

# snc / wsc / define
r = run(["snc", "--target", "q", "--over", "r", "-"], stdin="-q r\n")
check("snc", r.returncode == 0 and r.stdout.strip() == "r", r.stdout)
r = run(["wsc", "--target", "t", "--over", "p,q,s", HORN42])
check("wsc", r.returncode == 0 and
      clause_set(r.stdout) == {frozenset({"p", "q"}), frozenset({"p", "s"})},
      r.stdout)
r = run(["define", "--target", "p", "--over", "a,b", "-"],
        stdin="-p a\n-p b\n-a -b p\n")
check("define true", r.returncode == 0 and "answer: true" in r.stdout, r.stdout)
r = run(["define", "--target", "p", "--over", "a", "-"],
        stdin="-p a\n-p b\n-a -b p\n")
check("define false exit 1", r.returncode == 1, f"rc={r.returncode}")

# DIMACS round trip and autodetection
r = run(["forget", "-f", "x1", DIMACS])
check("dimacs forget", r.returncode == 0 and r.stdout.startswith("p cnf"),
      r.stdout)
r = run(["pi", "-"], stdin="p q -a\n")
check("named text starting with p", r.returncode == 0, r.stderr)

# determinism
a = run(["forget", "-f", "p,q", PI]).stdout
b = run(["forget", "-f", "p,q", PI]).stdout
check("deterministic output", a == b)

# exit code 2: usage and parse errors
r = run(["forget", "-f", "p", "-"], stdin="p 1bad\n")
check("parse error exit 2", r.returncode == 2, f"rc={r.returncode}")
r = run(["check", "--task", "nope", "-f", "p", EX1])
check("unknown task exit 2", r.returncode == 2, f"rc={r.returncode}")
r = run(["forget", os.path.join(tmp, "missing.txt")])
check("missing file exit 2", r.returncode == 2, f"rc={r.returncode}")

# exit code 3: resource guard on a negation blowup
blowup = "\n".join(
    " ".join(f"a{i}_{j}" for j in range(3)) for i in range(12)
) + "\n"
r = run(["ip", "-"], stdin=blowup)
check("resource guard exit 3", r.returncode == 3, f"rc={r.returncode} {r.stderr}")

print()
if failures:
    print(f"{len(failures)} failure(s)")
    sys.exit(1)
print("all cli checks passed")
