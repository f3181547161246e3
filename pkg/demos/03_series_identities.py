"""Exact q-series: generating functions compared coefficient by coefficient.

Run with ``python3 demos/03_series_identities.py``.
"""

# %%
from rpl import assert_equal, build_named_series, cyclic_reduce_check
from rpl.qseries import X, enumerative_series, pochhammer_inf

# %% [markdown]
# Series carry Laurent polynomials in x and y as coefficients.  The Euler
# product (q;q)_inf gives the pentagonal numbers.

# %%
print(pochhammer_inf(1, 1, 16).integer_coefficients())
print((pochhammer_inf(1, 1, 16) ** -1).integer_coefficients())

# %% [markdown]
# The joint generating function of stcrank (x) and srank (y), built by
# enumerating partitions, equals an infinite product.

# %%
order = 20
g = enumerative_series(order, "stcrank", "srank")
print("q^4 coefficient:", g[4])
print("product form agrees:", bool(assert_equal(g, build_named_series("lemma1_rhs", order))))

# %% [markdown]
# At a primitive fifth root of unity the q^(5n+4) coefficients vanish.  With
# integer arithmetic this is the statement that the x-exponents spread
# evenly over the five residues mod 5.

# %%
g1 = g.substitute("y", X ** 0)
for k in range(4, order, 5):
    print(k, g1[k].residue_totals("x", 5))
print(cyclic_reduce_check(g1, "x", 5, (4, 5)))

# %%
lhs = build_named_series("rambest_rhs", 12).integer_coefficients()
rhs = build_named_series("p5n4", 12).integer_coefficients()
print(lhs)
print(rhs)
