# %% [markdown]
# # Residuals and block radicals
#
# The sigma-nilpotent residual is the least normal subgroup with a
# sigma-nilpotent quotient.  `O_upper` and `O_lower` are the block analogues
# of the p-residual and the p-core.

# %%
from sigmagroups import catalog
from sigmagroups.catalog import parse_sigma_spec
from sigmagroups.residuals import (O_lower, O_upper, induces_power_automorphisms,
                                   is_hall_subgroup, nilpotent_residual, sigma_nilpotent_residual)
from sigmagroups.sigma import SigmaPartition

G = catalog.paper_example()
D = sigma_nilpotent_residual(G, parse_sigma_spec("3,5|*"))
print("residual of C5xS3:", D.order, "| Hall:", is_hall_subgroup(D, G),
      "| power automorphisms:", induces_power_automorphisms(G, D))

# %% Classical case: S4 has nilpotent residual A4, which is not a Hall subgroup.
S4 = catalog.symmetric(4)
N = nilpotent_residual(S4)
print("S4:", N.order, "| Hall:", is_hall_subgroup(N, S4))

# %%
s0 = SigmaPartition.sigma0()
for p in (2, 3):
    i = s0.block_of(p)
    print(f"p={p}: O^p(S4) order {O_upper(S4, s0, i).order}, O_p(S4) order {O_lower(S4, s0, i).order}")
