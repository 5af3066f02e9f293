"""Daisy and doubled daisy relations, with structural reports.

A daisy sends lines 2..n through one center and crosses them with line 1;
the relation collects one twist per petal plus one around the whole center.
The doubled daisy crosses the central pencil from both sides.  Each checker
verifies the relation exactly and compares the factor inventory against the
family's expected pattern.
"""

import lanterns as L

for n in (3, 4, 6):
    check = L.check_daisy(n)
    print(f"daisy({n}): ok={check.ok}")
    print("  text:  ", L.export_relation(check.relation, "text").strip())
    print("  latex: ", L.export_relation(check.relation, "latex").strip())

print()
for n in (5, 6):
    check = L.check_doubled_daisy(n)
    print(f"doubled daisy({n}): ok={check.ok}, "
          f"single-power display form holds: {check.display_ok}")
    print("  text:", L.export_relation(check.relation, "text").strip())

print("\na mirrored daisy still satisfies its relation, but the factor")
print("pattern no longer matches the daisy inventory:")
n = 5
mirrored = L.validate_arrangement([(n, 1)] + [(n + 1 - i, 0) for i in range(2, n + 1)])
check = L.check_daisy_arrangement(mirrored)
print("  relation verified:", check.verification.verified)
print("  structure ok:", check.ok)
for problem in check.problems:
    print("  flagged:", problem)
