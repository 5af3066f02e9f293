"""Degenerate relations: pencils, and the pair of pants at n = 2.

All lines of a pencil cross at one point, so the relation collapses to
"outer boundary twist = one interior twist around everything" - the
consistency condition that pins the outer twist's framing to (1, ..., 1).
At n = 2 the surface is a pair of pants, whose mapping class group is free
abelian of rank three on its boundary twists; the model reproduces that.
"""

import lanterns as L

for n in (2, 3, 5):
    relation = L.verified_relation(L.make_pencil(n), name="pencil")
    print(f"pencil({n}):", L.export_relation(relation, "text").strip(),
          "| verified:", relation.report.verified)

print("\ntotal monodromy of any arrangement is the full twist, framing zero:")
for n in (2, 4, 6):
    total = L.total_monodromy(L.make_pencil(n))
    print(f"  pencil({n}): braid letters {len(total.braid.letters)}, "
          f"framing {total.framing}, equals full twist: "
          f"{L.braids_equal(total.braid, L.full_twist_block(n, 1, n))}")

print("\npair of pants: the three boundary twists commute and are independent")
d0 = L.outer_boundary_twist(2)
d1 = L.inner_boundary_twist(2, 1)
d2 = L.inner_boundary_twist(2, 2)
print("  d0 d1 == d1 d0:", L.elements_equal(L.compose(d0, d1), L.compose(d1, d0)))
for a, b, c in [(1, 0, 0), (0, 1, -1), (1, -1, -1), (2, -2, 0)]:
    word = L.compose_all([d0**a, d1**b, d2**c])
    trivial = L.elements_equal(word, L.identity_element(2))
    print(f"  d0^{a} d1^{b} d2^{c} trivial: {trivial}")
