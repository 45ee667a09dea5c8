#!/usr/bin/env python3
"""End-to-end checks for the lced command line tool.

Usage: cli_test.py <path-to-lced-binary>

Exercises every subcommand, the documented exit codes (0 decided/verified,
1 not LCED, 2 usage or input error, 3 inconclusive or budget exhausted),
structured output, --out, and the LCED_BUDGET environment override.
"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]

EX1 = "3\n2 3\n1 0 2\n0 1 2\n"  # every Gram permutation determinant vanishes

EX2 = ("2\n4 6\n"
       "1 0 0 0 1 1\n"
       "0 1 0 0 1 0\n"
       "0 0 1 0 0 1\n"
       "0 0 0 1 1 1\n")

# standard form (I | A) whose identity Gram determinant vanishes but which
# is not caught by any shortcut, so a capped search must report inconclusive
SEARCHY = ("2\n3 6\n"
           "1 0 0 1 1 0\n"
           "0 1 0 0 1 1\n"
           "0 0 1 1 1 1\n")

DEFICIENT = "2\n2 2\n1 1\n1 1\n"

IDENTITY4 = "2\n4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"

failures = []


def run(args, env_extra=None, timeout=300):
    env = dict(os.environ)
    env.pop("LCED_BUDGET", None)
    if env_extra:
        env.update(env_extra)
    p = subprocess.run([BIN] + args, capture_output=True, text=True,
                       env=env, timeout=timeout)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    if cond:
        print("ok: " + name)
    else:
        failures.append(name)
        print("FAIL: " + name + (" -- " + detail if detail else ""))


def write(tmp, name, text):
    path = os.path.join(tmp, name)
    with open(path, "w") as f:
        f.write(text)
    return path


def main():
    tmp = tempfile.mkdtemp(prefix="lced-cli-")
    ex1 = write(tmp, "ex1.txt", EX1)
    ex2 = write(tmp, "ex2.txt", EX2)
    searchy = write(tmp, "searchy.txt", SEARCHY)
    deficient = write(tmp, "deficient.txt", DEFICIENT)
    garbage = write(tmp, "garbage.txt", "not a matrix\n")

    # check: not LCED, forced conclusion without search
    code, out, _ = run(["check", "--matrix", ex1])
    check("check not-lced exit", code == 1, "exit %d" % code)
    check("check not-lced text", "NotLCED" in out and "Theorem011" in out, out)

    # check: LCED with structured output
    code, out, _ = run(["check", "--matrix", ex2, "--format", "structured"])
    doc = json.loads(out)
    check("check lced exit", code == 0, "exit %d" % code)
    check("check schema", doc["schema_version"] == 1)
    check("check command", doc["command"] == "check")
    check("check strategy",
          doc["strategy"] == "order=identity-first;limit=unlimited;seed=0")
    check("check status", doc["verdict"]["status"] == "LCED")
    check("check witness", doc["verdict"]["witness"] is not None)

    # check: identity matrix is its own witness
    identity4 = write(tmp, "identity4.txt", IDENTITY4)
    code, out, _ = run(["check", "--matrix", identity4, "--format",
                        "structured"])
    doc = json.loads(out)
    check("identity exit", code == 0, "exit %d" % code)
    check("identity witness", doc["verdict"]["witness"] == "id")

    # check: error paths
    code, _, err = run(["check", "--matrix", os.path.join(tmp, "absent.txt")])
    check("missing file", code == 2 and "error:" in err, "exit %d" % code)
    code, _, err = run(["check", "--matrix", garbage])
    check("garbage file", code == 2 and "error:" in err, "exit %d" % code)
    code, _, err = run(["check", "--matrix", ex1, "--field", "5"])
    check("field mismatch", code == 2, "exit %d" % code)
    code, _, err = run(["check", "--matrix", ex2, "--certify", "--limit", "9"])
    check("certify vs limit", code == 2 and "certify" in err, err)

    # check: capped search is honest about inconclusiveness
    code, out, _ = run(["check", "--matrix", searchy, "--limit", "1",
                        "--format", "structured"])
    doc = json.loads(out)
    check("capped exit", code == 3, "exit %d" % code)
    check("capped verdict", doc["verdict"] is None and doc["inconclusive"])
    check("capped count", doc["perms_examined"] >= 1)
    code, out, _ = run(["check", "--matrix", searchy, "--format",
                        "structured"])
    doc = json.loads(out)
    check("uncapped exit", code in (0, 1), "exit %d" % code)
    check("uncapped conclusive", doc["verdict"] is not None)

    # check: dependent rows
    code, _, err = run(["check", "--matrix", deficient])
    check("deficient rejected", code == 2 and "allow-deficient" in err, err)
    code, out, _ = run(["check", "--matrix", deficient, "--allow-deficient",
                        "--format", "structured"])
    doc = json.loads(out)
    check("deficient verdict", code == 1
          and doc["verdict"]["certificate"] == "RankDeficient",
          "exit %d" % code)

    # sweep: verified cells, deterministic across worker counts
    code, out, _ = run(["sweep", "--field", "2", "--k", "1..2", "--n", "2..4",
                        "--format", "structured"])
    doc = json.loads(out)
    check("sweep exit", code == 0, "exit %d" % code)
    check("sweep cells", len(doc["reports"]) == 6, out)
    check("sweep verified",
          all(r["certified"] and not r["counterexamples"]
              for r in doc["reports"]))

    out1 = os.path.join(tmp, "jobs1.json")
    out3 = os.path.join(tmp, "jobs3.json")
    code1, stdout1, _ = run(["sweep", "--field", "3", "--k", "2", "--n", "4",
                             "--jobs", "1", "--format", "structured",
                             "--out", out1])
    code3, _, _ = run(["sweep", "--field", "3", "--k", "2", "--n", "4",
                       "--jobs", "3", "--format", "structured",
                       "--out", out3])
    with open(out1) as f:
        bytes1 = f.read()
    with open(out3) as f:
        bytes3 = f.read()
    check("sweep jobs exit", code1 == 0 and code3 == 0)
    check("sweep jobs deterministic", bytes1 == bytes3)

    code, stdout_direct, _ = run(["sweep", "--field", "3", "--k", "2", "--n",
                                  "4", "--format", "structured"])
    check("out matches stdout", code == 0 and stdout_direct == bytes1)

    # sweep: budget exhaustion via flag and via environment
    code, out, _ = run(["sweep", "--field", "2", "--k", "2", "--n", "4",
                        "--budget", "5", "--format", "structured"])
    doc = json.loads(out)
    check("sweep budget exit", code == 3, "exit %d" % code)
    check("sweep budget note",
          any(not r["certified"] for r in doc["reports"]))
    code, _, _ = run(["sweep", "--field", "2", "--k", "2", "--n", "4"],
                     env_extra={"LCED_BUDGET": "5"})
    check("env budget", code == 3, "exit %d" % code)
    code, _, err = run(["sweep", "--field", "2", "--k", "2", "--n", "4"],
                       env_extra={"LCED_BUDGET": "not-a-number"})
    check("env budget invalid", code == 2, "exit %d" % code)

    # sweep: ranges beyond reach are accepted and reported honestly
    code, out, _ = run(["sweep", "--field", "19", "--k", "3", "--n", "7",
                        "--format", "structured"],
                       env_extra={"LCED_BUDGET": "1000"})
    doc = json.loads(out)
    check("large sweep exit", code == 3, "exit %d" % code)
    check("large sweep note",
          any("budget" in r.get("note", "") for r in doc["reports"]), out)

    # pik
    code, out, _ = run(["pik", "--field", "2", "--k", "2", "--format",
                        "structured"])
    doc = json.loads(out)
    check("pik exit", code == 0, "exit %d" % code)
    check("pik verified",
          all(not r["entry_sum_violations"] and not r["stronger_violations"]
              for r in doc["reports"]))
    code, _, _ = run(["pik", "--field", "2", "--k", "3", "--budget", "1"])
    check("pik budget", code == 3, "exit %d" % code)

    # identities
    code, out, _ = run(["identities", "--field", "3", "--k", "2..3",
                        "--trials", "20", "--format", "structured"])
    doc = json.loads(out)
    check("identities exit", code == 0, "exit %d" % code)
    check("identities reports", len(doc["reports"]) == 2
          and all(r["all_passed"] for r in doc["reports"]))
    code, out, _ = run(["identities", "--field", "Z", "--k", "3",
                        "--trials", "10"])
    check("identities integers", code == 0, "exit %d" % code)

    # cyclic
    code, out, _ = run(["cyclic", "--field", "2", "--poly", "1,0,1,0,1",
                        "--n", "12", "--format", "structured"])
    doc = json.loads(out)
    check("cyclic exit", code == 0, "exit %d" % code)
    check("cyclic gcd", doc["gcd_criterion"] is False)
    check("cyclic reciprocal",
          doc["reciprocal_construction"] == "witness found"
          and doc["reciprocal_witness"] == "(1 9)(2 10)(3 11)(4 12)", out)
    check("cyclic status", doc["verdict"]["status"] == "LCED")

    code, out, _ = run(["cyclic", "--field", "2", "--poly", "1,1", "--n", "3",
                        "--format", "structured"])
    doc = json.loads(out)
    check("cyclic coprime", code == 0 and doc["gcd_criterion"] is True, out)

    # gcd criterion inconclusive, yet the decision still lands
    code, out, _ = run(["cyclic", "--field", "2", "--poly", "1,1", "--n", "4",
                        "--format", "structured"])
    doc = json.loads(out)
    check("cyclic gcd inconclusive",
          doc["gcd_criterion"] is False and doc["verdict"] is not None, out)
    check("cyclic even-weight code", code == 1
          and doc["verdict"]["status"] == "NotLCED", "exit %d" % code)
    code, _, err = run(["cyclic", "--field", "2", "--poly", "1,1,1",
                        "--n", "4"])
    check("cyclic non-divisor", code == 2 and "error:" in err,
          "exit %d" % code)

    # argument handling
    code, _, _ = run([])
    check("no subcommand", code == 2, "exit %d" % code)
    code, _, _ = run(["check", "--matrix", ex1, "--bogus"])
    check("unknown flag", code == 2, "exit %d" % code)
    code, _, _ = run(["--help"])
    check("help", code == 0, "exit %d" % code)
    code, _, _ = run(["check", "--matrix", ex1, "--order", "bogus"])
    check("bad order", code == 2, "exit %d" % code)

    print()
    if failures:
        print("%d case(s) failed: %s" % (len(failures), ", ".join(failures)))
    else:
        print("all cli cases passed")
    return len(failures)


if __name__ == "__main__":
    sys.exit(main())
