"""
Extended duality on a type-B label
==================================

Walks through dbar on the B label ``[7,5,4^2,3,2^2,1^2]|[3,1]``, printing
each intermediate partition.
"""

####################################################################
# The input label and its division into blocks.

from orbit_duality import MarkedPartition, dbar_trace, divide_into_blocks, is_special

mp = MarkedPartition.parse("[7,5,4^2,3,2^2,1^2]|[3,1]", "B")
print(mp.describe())
for block in divide_into_blocks(mp):
    print("  block", block.describe())

####################################################################
# The trace keeps everything the construction touches.  tau_tilde is
# Sommers' d_S value; the marking comes from nu_hat together with rho.

t = dbar_trace(mp)
for name in ("eta", "eta_star", "eta_tilde", "pi", "nu_star", "tau",
             "rho_raw", "rho", "tau_tilde", "nu_hat"):
    print(f"{name:>10} = {getattr(t, name)}")
print("result:", t.result.describe(), "special:", is_special(t.result))

####################################################################
# Applying dbar twice lands on the smallest special label above the input.

from orbit_duality import dbar, specialize

twice = dbar(t.result)
print(twice.describe(), twice == specialize(mp))
