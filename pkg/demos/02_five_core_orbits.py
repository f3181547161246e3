"""5-cores, their alpha-vectors, the 5-core crank and the orbits it induces.

Run with ``python3 demos/02_five_core_orbits.py``.
"""

# %%
from rpl import five_core_crank, littlewood_decompose, orbit, phi2, srank, t_cores
from rpl.cores import alpha_from_n, alpha_quadratic, core_counts, orbit_table, theta_map

# %% [markdown]
# A 5-core of weight 5n+4 is pinned down by a vector alpha of five integers
# summing to 1, and its weight is 5 Q(alpha) - 1.  The 5-core crank reads
# off 1 + sum i*alpha_i mod 5.

# %%
for core in t_cores(9, 5):
    n = phi2(core, 5)
    a = alpha_from_n(n)
    print(f"{str(core):16s} n={n} alpha={a} Q={alpha_quadratic(a)} crank={five_core_crank(core)}")

# %% [markdown]
# Every partition splits into a 5-core and five quotient partitions.
# Cycling alpha (and, for the srank version, shuffling the quotient) moves
# the crank up by one and keeps the weight.

# %%
print(littlewood_decompose((3, 3, 3), 5))
for variant in ("plain", "srank"):
    orb = orbit((3, 3, 3), variant)
    print(variant, [str(p) for p in orb], [srank(p) % 4 for p in orb])

# %%
for row in orbit_table(9, "srank"):
    print(srank(row[0]) % 4, "  ".join(f"{str(p):14s}" for p in row))

# %% [markdown]
# theta sends the 5-cores of n to the crank-0 5-cores of 5n+4, which is why
# a_5(5n+4) = 5 a_5(n).

# %%
for n in range(8):
    images = [theta_map(c) for c in t_cores(n, 5)]
    print(n, core_counts(n, 5), core_counts(5 * n + 4, 5), {five_core_crank(c) for c in images})
