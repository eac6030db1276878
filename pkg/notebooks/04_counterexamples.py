# %% [markdown]
# # Counterexample reports
#
# Corrupt one output of the right action and watch the law checks catch it.

# %%
import json

from semigroup_forge import pperm as pp
from semigroup_forge.bilateral import check_axioms
from semigroup_forge.claims import corrupted_poi_right, mutation_site, run_claims
from semigroup_forge.constructions import Construction, action_pair, factorization_law, poi_right

(u, s), value = mutation_site(3)
print(f"u^s for u = {u}, s = {s}: {poi_right(u, s)} replaced by {value}")

bad = corrupted_poi_right(3)
a = action_pair(Construction.POI_BILATERAL, 3, right=bad)
for r in check_axioms(a) + [factorization_law(a)]:
    print(json.dumps(r.to_dict(), ensure_ascii=False))

# %%
# a witness is a tuple of actual elements and can be re-checked by hand
rep = check_axioms(a)[2]
x, p, q = rep.witness
print(bad(x, pp.compose(p, q)), "!=", bad(bad(x, p), q))

# %% [markdown]
# Sampled mode draws tuples from a seeded generator, so reruns reproduce the same report.

# %%
good = action_pair(Construction.POI_BILATERAL, 5)
print([r.to_dict() for r in check_axioms(good, mode="sampled", samples=20000, seed=3)][3])

# %%
failed = [r.law for r in run_claims(3, mutate=True) if not r.holds]
print("failing under mutation:", failed)
