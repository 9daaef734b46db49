"""
Exceptional groups from bundled data
====================================

The exceptional posets are stored as node/edge/dual records.  This loads
F4, validates it, and follows dbar through its single nonspecial node.
"""

####################################################################

from orbit_duality import exceptional_dbar, load_group, validate_dataset

f4 = load_group("F4")
print(validate_dataset(f4).to_text())
print(len(f4.nodes), "pairs,", len(f4.special_ids), "special")

####################################################################
# The nonspecial pair (~A1, 2A1) goes to the dual of the smallest special
# pair above it.

boxed = next(n for n in f4.nodes if not n.special)
print(boxed, "->", f4.node(exceptional_dbar(f4, boxed.id)))

####################################################################
# Every group at once.

for g in ("G2", "F4", "E6", "E7", "E8"):
    ds = load_group(g)
    print(g, len(ds.nodes), len(ds.special_ids), validate_dataset(ds).passed)
