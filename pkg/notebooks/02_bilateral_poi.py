# %% [markdown]
# # POI as a quotient of a bilateral semidirect product
#
# The co-extensive part POI⁻ and the extensive part POI⁺ act on each other.
# Their bilateral product maps onto POI by (s, u) ↦ su.

# %%
import numpy as np

from semigroup_forge import pperm as pp
from semigroup_forge.bilateral import check_axioms
from semigroup_forge.constructions import (
    Construction, action_pair, decompose, factorization_law, mu_map, poi_left, poi_right, product_monoid,
)
from semigroup_forge.monoid_core import green, idempotents, is_aperiodic, is_regular_element, is_surjective, verify_hom

c = Construction.POI_BILATERAL
u, s = pp.PartialPerm(3, {2: 3}), pp.PartialPerm(3, {3: 2})
print("us      =", u * s)
print("u◁s     =", poi_left(u, s))
print("u^s     =", poi_right(u, s))
print("(u◁s)u^s =", poi_left(u, s) * poi_right(u, s))

# %%
a = action_pair(c, 3)
for r in check_axioms(a) + [factorization_law(a)]:
    print(f"{r.law:28s} holds={r.holds}  checked={r.checked}")

# %%
M = product_monoid(c, 3)
print("order:", len(M), "idempotents:", len(idempotents(M)))
print(is_aperiodic(M).to_dict())
G = green(M)
print("D-classes:", len(G.classes("D")), "R-classes:", len(G.classes("R")))

# %%
m = mu_map(c, 3)
print(verify_hom(m).holds, is_surjective(m).holds)
t = pp.PartialPerm(3, {1: 2, 3: 3})
print(t, "=", " · ".join(str(x) for x in decompose(c, t)))

# %% [markdown]
# The product is not an inverse monoid: (e, ∅) is not regular, and two idempotents fail to commute.

# %%
one, nil = pp.identity(3), pp.empty(3)
e, f = pp.PartialPerm(3, {1: 1}), pp.PartialPerm(3, {1: 1, 2: 2})
print("(e, ∅) regular:", is_regular_element(M, M.index((e, nil))))
p, q = (one, e), (f, f)
print("pq =", tuple(map(str, M.multiply(p, q))), " qp =", tuple(map(str, M.multiply(q, p))))

# %%
# sizes grow fast; the ODP version stays small
for n in range(2, 5):
    print(n, len(product_monoid(c, n)), len(product_monoid(Construction.ODP_BILATERAL, n)))
