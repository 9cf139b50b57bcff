#!/usr/bin/env python3
"""End-to-end checks of the dcmom command-line tool."""

import json
import math
import subprocess
import sys

BIN = sys.argv[1]


def pytest_approx(x, rel=1e-12):
    class _A:
        def __eq__(self, other):
            return abs(other - x) <= rel * max(abs(x), abs(other), 1e-300)
    return _A()

failures = 0


def run(args, expect_code=0):
    global failures
    proc = subprocess.run([BIN] + args, capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect_code}")
        print(proc.stderr[:500])
    return proc


def check(cond, label):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {label}")


def csv_cells(text):
    rows = [line.split(",") for line in text.strip().splitlines()]
    return rows[0], rows[1:]


# --- rel: p = 0 row must show A = 1 and all routes agree ---
proc = run(["rel", "--nr", "0", "--kappa", "-1", "--mu", "0.5", "--pmin", "0",
            "--pmax", "2", "--routes", "all", "--bits", "128"])
header, rows = csv_cells(proc.stdout)
check(header == ["p", "route", "A", "B", "C", "indint1_residual"], "rel csv header")
p0 = [r for r in rows if r[0] == "0"]
check(len(p0) >= 5, "rel p=0 has many routes")
for r in p0:
    check(abs(float(r[2]) - 1.0) < 1e-30, f"rel p=0 A=1 on route {r[1]}")
by_route = {}
for r in rows:
    by_route.setdefault(r[0], []).append(r[2:5])
for p, vals in by_route.items():
    for v in vals[1:]:
        for i in range(3):
            a, b = float(vals[0][i]), float(v[i])
            check(abs(a - b) <= 1e-12 * max(abs(a), 1e-300), f"route agreement p={p}")

# --- rel with --Z: p = -1 row equals the exact initial vector ---
proc = run(["rel", "--Z", "92", "--nr", "1", "--kappa", "-1", "--pmin", "-1",
            "--pmax", "1", "--routes", "recurrence_mat1,shabaev_up", "--bits", "128"])
_, rows = csv_cells(proc.stdout)
mu = 92 * 7.2973525693e-3
nu = math.sqrt(1 - mu * mu)
eps = (1 + nu) / math.sqrt((1 + nu) ** 2 + mu * mu)
a2 = 1 - eps * eps
want_Am1 = (1 / (mu * nu)) * a2 * (eps * nu + mu * math.sqrt(a2))
got = [float(r[2]) for r in rows if r[0] == "-1"]
check(len(got) == 2, "rel --Z p=-1 rows present")
for g in got:
    check(abs(g - want_Am1) < 1e-12 * want_Am1, "rel --Z p=-1 A matches the exact vector")

# --- invalid state exits 2 ---
run(["rel", "--nr", "0", "--kappa", "1", "--mu", "0.1", "--pmin", "0", "--pmax", "1"],
    expect_code=2)
run(["rel", "--nr", "1", "--kappa", "-1", "--pmin", "0", "--pmax", "1"], expect_code=2)
run(["rel", "--nr", "1", "--kappa", "-1", "--mu", "2.0", "--pmin", "0", "--pmax", "1"],
    expect_code=2)

# --- nonrel: k = -1 row is Z/(a0 n^2); inversion column range ---
proc = run(["nonrel", "--n", "1", "--l", "0", "--Z", "1", "--kmin", "-2", "--kmax", "4",
            "--bits", "128"])
_, rows = csv_cells(proc.stdout)
km1 = [r for r in rows if r[0] == "-1"]
check(any(abs(float(r[2]) - 1.0) < 1e-30 for r in km1), "nonrel k=-1 shows 1.0 at n=1")
inv_rows = [r for r in rows if r[1] == "inversion"]
check({r[0] for r in inv_rows} == {"-2"}, "inversion column spans -2-2l..-2 only (l=0)")

proc = run(["nonrel", "--n", "2", "--l", "1", "--kmax", "1", "--bits", "128"])
_, rows = csv_cells(proc.stdout)
k1 = [r for r in rows if r[0] == "1" and r[1] == "closed_form"]
check(len(k1) == 1 and abs(float(k1[0][2]) - 5.0) < 1e-30, "nonrel <r> = 5 at n=2 l=1")
run(["nonrel", "--n", "2", "--l", "2", "--kmax", "1"], expect_code=2)

# --- csv and json carry identical numeric strings ---
args = ["rel", "--nr", "1", "--kappa", "-2", "--mu", "1.1", "--pmin", "0", "--pmax", "3",
        "--routes", "hahn_form,recurrence_mat1", "--bits", "192"]
ascsv = run(args + ["--format", "csv"]).stdout
asjson = json.loads(run(args + ["--format", "json"]).stdout)
_, rows = csv_cells(ascsv)
for r in rows:
    p, route = r[0], r[1]
    jrow = next(x for x in asjson["rows"] if str(x["p"]) == p)
    for i, comp in enumerate(("A", "B", "C")):
        check(jrow["routes"][route][comp] == r[2 + i],
              f"csv/json numeric identity p={p} {route} {comp}")

# --- hahn subcommand: both paths agree to working precision ---
proc = run(["hahn", "--m", "7", "--x", "3", "--N", "-4.25", "--bits", "128"])
lines = dict(l.split(",", 1) for l in proc.stdout.strip().splitlines()[1:])
check(float(lines["series"]) == pytest_approx(float(lines["recurrence"])),
      "hahn paths agree numerically")
check(float(lines["rel_diff"]) < 1e-35, "hahn paths agree to working precision")

# --- verify: default grid passes and reports identities ---
proc = run(["verify", "--bits", "128", "--pmax", "4", "--format", "json"])
rep = json.loads(proc.stdout)
check(rep["pass"] is True, "verify passes")
names = {i["name"] for i in rep["identities"]}
check("factorization" in names and "det_P" in names, "verify reports the identity suite")
check(all(i["pass"] for i in rep["identities"]), "every identity passes")

# --- verify: near-critical grid records divergent skips but still exits 0 ---
proc = run(["verify", "--bits", "128", "--pmax", "2", "--quad", "--quad-pmin", "-2",
            "--quad-pmax", "1", "--mu-fracs", "0.99", "--format", "json"])
rep = json.loads(proc.stdout)
check(rep["pass"] is True, "near-critical verify passes")
check(rep["skipped_divergent"] > 0, "divergent quadrature cases recorded as skips")

# --- out file writing ---
import tempfile, os
with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "t.csv")
    run(["nonrel", "--n", "3", "--l", "1", "--kmax", "2", "--out", path, "--bits", "96"])
    check(open(path).read().startswith("k,route,value"), "wrote table to --out path")

if failures:
    print(f"{failures} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
