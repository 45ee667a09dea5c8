#!/usr/bin/env python3
"""Smoke test for the lced Python package (wraps the compiled extension)."""

import sys

import lced

EX2 = ("2\n4 6\n"
       "1 0 0 0 1 1\n"
       "0 1 0 0 1 0\n"
       "0 0 1 0 0 1\n"
       "0 0 0 1 1 1\n")

EX1 = "3\n2 3\n1 0 2\n0 1 2\n"

failures = 0


def check(name, cond):
    global failures
    if cond:
        print("ok: " + name)
    else:
        failures += 1
        print("FAIL: " + name)


doc = lced.decide(EX2)
check("decide lced", doc["verdict"]["status"] == "LCED")
check("decide strategy",
      doc["strategy"] == "order=identity-first;limit=unlimited;seed=0")
w = doc["verdict"]["witness"]
check("decide witness verifies", lced.gram_det(EX2, w) != "0")

doc = lced.decide(EX1)
check("decide not-lced", doc["verdict"]["status"] == "NotLCED"
      and doc["verdict"]["certificate"] == "Theorem011")

doc = lced.decide(EX2, order="heap", seed=5)
check("decide heap order", doc["verdict"]["status"] == "LCED")

check("gram identity", lced.gram_det(EX1, "id") == "0")

rep = lced.sweep("3", 2, 3)
check("sweep counts", rep["candidates_total"] == 9
      and rep["lced_count"] + rep["notlced_count"] == 9)
check("sweep verified", rep["certified"] and not rep["counterexamples"])
check("sweep deterministic",
      lced.sweep("3", 2, 4, jobs=3) == lced.sweep("3", 2, 4, jobs=1))

rep = lced.verify_pi_k("2", 2)
check("pik verified", not rep["entry_sum_violations"]
      and not rep["stronger_violations"])

rep = lced.identities("3", 3, trials=25)
check("identities pass", rep["all_passed"] and len(rep["items"]) == 7)
rep = lced.identities("Z", 3, trials=25)
check("integer identities pass", rep["all_passed"])

doc = lced.cyclic("2", "1,0,1,0,1", 12)
check("cyclic reciprocal", doc["gcd_criterion"] is False
      and doc["reciprocal_witness"] == "(1 9)(2 10)(3 11)(4 12)")
check("cyclic status", doc["verdict"]["status"] == "LCED")

cert = lced.all_lced_certificate(7, 1, 2, 6)
check("certificate present", cert is not None and cert["p"] == 7)
check("certificate absent", lced.all_lced_certificate(3, 1, 2, 6) is None)

check("dual generator", lced.decide(lced.dual_generator(EX1))
      ["verdict"]["status"] == "NotLCED")
check("min distance", lced.min_distance(EX1) == 2)
check("roundtrip stable",
      lced.roundtrip(lced.roundtrip(EX2)) == lced.roundtrip(EX2))

try:
    lced.decide("nonsense")
    check("parse error raised", False)
except lced.LcedError:
    check("parse error raised", True)

print()
print("all python cases passed" if failures == 0
      else "%d python case(s) failed" % failures)
sys.exit(failures)
