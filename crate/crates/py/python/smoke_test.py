"""Smoke test for the pybizeta extension module."""

import pybizeta as bz

f10 = bz.LatticeFamily("F", 1)
assert f10.ranks == (3, 2, 1)

cc = bz.local_zeta(f10, "cc")
assert cc.evaluate({"q": 3}).series(1)[1] == "8*T1 + 3"
assert bz.verify_funceq(f10, "cc") and bz.verify_funceq(bz.LatticeFamily("H", 2), "irr")

assert bz.conjugacy_classes(f10, 3, 1) == [(1, 3), (3, 8)]
assert bz.group_classes(f10, 3, 1) == [(1, 3), (3, 8)]
assert bz.verify_census(bz.LatticeFamily("G", 2), 3, 1)["ok"]

assert bz.verify_stat_gh(3)["ok"]
assert bz.signed_permutation_stats([-1, -2])["ell"] == 4
assert bz.global_class_zeta(f10) == "ζ(s-2)ζ(s-1)/ζ(s)"

print(bz.LatticeFamily("G", 3).a_matrix())
print("Z_cc(F_{1,0}) =", cc)
try:
    bz.LatticeFamily("Q", 1)
except ValueError as e:
    print("rejected:", e)
else:
    raise AssertionError("bad family accepted")
print("smoke test passed")
