# %% [markdown]
# # Groups as tables, and their subgroup lattices
#
# Every group is a multiplication table with the identity at index 0.
# Permutation groups are closed up from generators; products, semidirect
# products and quotients stay in table form.

# %%
from sigmagroups import catalog
from sigmagroups.group import direct_product, quotient
from sigmagroups.lattice import all_subgroups, chief_series, frattini, minimal_normal_subgroups

S4 = catalog.symmetric(4)
print(S4.order, "elements; first few:", S4.labels[:5])

# %% Subgroups are enumerated once and cached on the group.
subs = all_subgroups(S4)
print(len(subs), "subgroups; orders:", sorted({A.order for A in subs}))
print("minimal normal:", [N.order for N in minimal_normal_subgroups(S4)])
print("Frattini subgroup order:", frattini(S4).order)

# %% A chief series, with the non-cyclic Klein four factor at the bottom.
cs = chief_series(S4)
print([(f.order, "cyclic" if f.cyclic else "non-cyclic") for f in cs.factors])

# %% Quotients come back as groups plus a projection.
V4 = minimal_normal_subgroups(S4)[0]
Q, proj = quotient(S4, V4)
print("S4/V4 has order", Q.order, "and element orders", Q.order_signature())

# %% The order-30 example: C5 x S3, where S3 is built as C3 x| C2.
G = catalog.paper_example()
print(G.name, G.order, "with", sum(A.order == 2 for A in all_subgroups(G)), "involution subgroups")
print("C4 x C6 has order", direct_product(catalog.cyclic(4), catalog.cyclic(6)).order)
