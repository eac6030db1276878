# %% [markdown]
# # Partial permutations and the named families
#
# Elements are injective partial maps of 1..n, composed left to right.

# %%
from math import comb

from semigroup_forge import pperm as pp
from semigroup_forge.families import Family, enumerate_brute_force, enumerate_family, member

s = pp.parse("[1 3 / 2 1]", 3)
t = pp.PartialPerm(3, {1: 1, 2: 3})
print("s      =", s)
print("t      =", t)
print("st     =", s * t)      # s first, then t
print("s^-1   =", pp.inverse(s))
print("dom(s) =", pp.dom(s), " im(s) =", pp.im(s))

# %%
# s swaps the order of 1 and 3, so it is order-reversing but not order-preserving
for f in Family:
    print(f"{f.value:10s} {member(f, s)}")

# %% [markdown]
# Cardinalities, structured enumeration against a brute-force filter of all (n+1)^n maps.

# %%
print(f"{'family':10s} " + " ".join(f"n={n:<5d}" for n in range(1, 6)))
for f in Family:
    sizes = []
    for n in range(1, 6):
        fast = enumerate_family(f, n)
        assert fast == enumerate_brute_force(f, n)
        sizes.append(len(fast))
    print(f"{f.value:10s} " + " ".join(f"{k:<7d}" for k in sizes))

# %%
# order-preserving maps are determined by (domain, image) with equal sizes
for n in range(1, 7):
    print(n, len(enumerate_family(Family.POI, n)), comb(2 * n, n))
