# %% [markdown]
# # Deciding the PsigmaT property two ways
#
# The brute-force route checks transitivity of sigma-quasinormality over all
# pairs K <= H <= G.  The second route checks that every sigma-subnormal
# subgroup is sigma-quasinormal.  Both return witnesses that can be replayed.

# %%
from sigmagroups import catalog
from sigmagroups.catalog import parse_sigma_spec
from sigmagroups.psigmat import (is_psigmat_bruteforce, is_psigmat_subnormal_criterion,
                                 replay_witness, special_psigmat_certificate, theoremC_criterion)

def show(G, spec):
    s = parse_sigma_spec(spec)
    bf, sn = is_psigmat_bruteforce(G, s), is_psigmat_subnormal_criterion(G, s)
    print(f"{G.name:6} {spec:8} brute force {bf.value!s:5} subnormal route {sn.value!s:5}")
    if not bf.value:
        K, H = bf.witness
        print("   witness K =", [G.labels[x] for x in K.members], "in H of order", H.order,
              "| replays:", replay_witness(bf, G, s))
    return s

# %%
show(catalog.symmetric(4), "2|3|*")
show(catalog.quaternion8(), "2|3|*")
s = show(catalog.paper_example(), "3,5|*")

# %% The order-30 example is special: residual C3 inside a Hall C15 = C3 x C5.
cert = special_psigmat_certificate(catalog.paper_example(), s)
print("D, E, S orders:", cert.residual.order, cert.hall.order, cert.complement.order)

# %% The residual-based criterion, with its hypotheses reported separately.
for G, spec in [(catalog.paper_example(), "3,5|*"), (catalog.symmetric(4), "2|3|*"),
                (catalog.alternating(5), "2,3|5|*")]:
    r = theoremC_criterion(G, parse_sigma_spec(spec))
    print(f"{G.name:6} {spec:8} applicable={r.applicable} verdict={r.verdict}")

# %% Without any complete Hall sigma-set the two routes part ways (see the README).
show(catalog.alternating(5), "2|*")
