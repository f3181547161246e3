"""Walk through srank, the two bijections and stcrank on the partitions of 9.

Run with ``python3 demos/01_srank_and_stcrank.py``.
"""

# %%
from collections import Counter

from rpl import Partition, enumerate_partitions, partition_count, srank, stcrank
from rpl.stanley import bijection1, bijection2, classify, TypeClass

# %% [markdown]
# srank is the number of odd parts minus the number of odd parts of the
# conjugate.  It is always even, and for weights 4 mod 5 it only takes the
# classes 0 and 2 mod 4.

# %%
ps = list(enumerate_partitions(9))
print(len(ps), "partitions of 9; p(9) =", partition_count(9))
print("srank classes:", Counter(srank(p) % 4 for p in ps))

# %%
p = Partition(2, 2, 1, 1, 1, 1, 1)
pi1, pi2 = bijection1(p)
print(f"{p} splits into pi1={pi1} and pi2={pi2}; 4*|pi1| + |pi2| = {4 * sum(pi1) + sum(pi2)}")
print(p, "is", classify(p).name, "and maps to", bijection2(p))

# %% [markdown]
# Type A partitions are the ones whose first component is (1).  Their
# partners under the second bijection are the type B partitions, and
# stcrank is shifted by -1 and +1 on them respectively.

# %%
for n in (4, 9, 14):
    kinds = Counter(classify(q) for q in enumerate_partitions(n))
    print(n, {k.name: kinds[k] for k in TypeClass})

# %%
grid = Counter((srank(q) % 4, stcrank(q) % 5) for q in ps)
for i in (0, 2):
    print(f"srank={i}:", [grid[i, k] for k in range(5)])

# %% [markdown]
# Each row is constant, so stcrank splits p_0(9) = 20 and p_2(9) = 10 into
# five equal pieces.  The same happens for every weight 5n+4.

# %%
for n in (14, 19, 24):
    counts = Counter((srank(q) % 4, stcrank(q) % 5) for q in enumerate_partitions(n))
    print(n, [[counts[i, k] for k in range(5)] for i in (0, 2)])
