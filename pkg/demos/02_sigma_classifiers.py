# %% [markdown]
# # Partitions of the primes and the classifiers they induce
#
# A partition is written as blocks split by `|`, with `*` standing for all
# remaining primes.  `2|3|*` separates 2 and 3; `3,5|*` groups 3 with 5.

# %%
from sigmagroups import catalog
from sigmagroups.catalog import parse_sigma_spec
from sigmagroups.sigma import (complete_hall_sigma_sets, find_generalized_wielandt_set,
                               is_sigma_full_sylow_type, is_sigma_nilpotent, is_sigma_primary,
                               is_sigma_soluble, sigma_of)

G = catalog.paper_example()
sigma = parse_sigma_spec("3,5|*")
print("sigma(G) =", [sigma.block_label(i) for i in sorted(sigma_of(G.order, sigma))])
print("primary", is_sigma_primary(G, sigma), "| nilpotent", is_sigma_nilpotent(G, sigma),
      "| soluble", is_sigma_soluble(G, sigma))

# %% Complete Hall sets: the normal C15 paired with each of the three Sylow 2-subgroups.
for hs in complete_hall_sigma_sets(G, sigma):
    print({sigma.block_label(i): H.order for i, H in hs.entries})

# %% A5 is where things break down.
A5 = catalog.alternating(5)
for spec in ("2,3,5|*", "2,5|3|*", "2,3|5|*"):
    s = parse_sigma_spec(spec)
    print(f"A5 under {spec:8}: soluble={is_sigma_soluble(A5, s)}, "
          f"Hall sets={len(complete_hall_sigma_sets(A5, s))}, "
          f"full Sylow type={is_sigma_full_sylow_type(A5, s)}, "
          f"Wielandt set={'yes' if find_generalized_wielandt_set(A5, s) else 'no'}")
