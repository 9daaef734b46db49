"""
Hasse diagrams for small classical types
========================================

Builds the posets of reduced labels for C6 and its dual B7, and checks
that dbar reflects one special subposet onto the other.
"""

####################################################################
# The C6 poset has ten labels, one of them nonspecial.

from orbit_duality import hasse
from orbit_duality.render import render_poset

c6 = hasse("C", 6)
print(render_poset(c6, "text"))

####################################################################
# DOT output, with the nonspecial node drawn as a box.  Pipe it through
# ``dot -Tsvg`` to get a picture.

print(render_poset(c6, "dot"))

####################################################################
# dbar pairs the special labels of C6 with those of B7 and reverses the
# order between them.

from orbit_duality import pair_leq

b7 = hasse("B", 7)
specials = [l for l in c6.labels if c6.special[l]]
for a in specials:
    for b in specials:
        assert pair_leq(a, b) == pair_leq(c6.duality[b], c6.duality[a])
        assert b7.duality[c6.duality[a]] == a
print(f"{len(specials)} special labels, order reversed")
