# %% [markdown]
# # PODI from POI and the two-element group
#
# C2 = {1, h} with h the reversal acts on POI by conjugation.

# %%
from semigroup_forge import pperm as pp
from semigroup_forge.constructions import (
    Construction, conj_left, embedding_map, family_monoid, inverse_in_semidirect, mu_map, product_monoid,
    restriction_check,
)
from semigroup_forge.families import Family
from semigroup_forge.monoid_core import (
    idempotents, inverse_table, is_injective, is_inverse, is_surjective, separates_idempotents, verify_hom,
)

n = 3
h = pp.reversal(n)
print("h =", h, "  h{1↦2}h =", conj_left(h, pp.PartialPerm(n, {1: 2})))

# %%
M = product_monoid(Construction.PODI_SEMIDIRECT, n)
print("order", len(M), is_inverse(M).to_dict())
for i in idempotents(M):
    print("  idempotent", tuple(map(str, M.elements[i])))

# %%
inv = inverse_table(M)
x = (pp.PartialPerm(n, {1: 2}), h)
print("inverse of", tuple(map(str, x)), "is", tuple(map(str, M.elements[inv[M.index(x)]])))
print("closed form agrees everywhere:",
      all(M.elements[inv[k]] == inverse_in_semidirect(M.elements[k]) for k in range(len(M))))

# %%
m = mu_map(Construction.PODI_SEMIDIRECT, n)
for r in (verify_hom(m), is_surjective(m), separates_idempotents(m)):
    print(f"{r.law:42s} {r.holds}")
emb = embedding_map(n)
print(f"{'embedding hom / injective':42s} {verify_hom(emb).holds} {is_injective(emb).holds}")

# %% [markdown]
# Restricting to isometries gives DP = ODP · C2.

# %%
fm = lambda f: family_monoid(f, n)
print(restriction_check(fm(Family.POI), fm(Family.C2), fm(Family.ODP), fm(Family.C2),
                        conj_left, fm(Family.DP)).to_dict())
