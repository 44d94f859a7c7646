"""Powers and orders.

Each element x has a sequence e, x, x^2, ... where x^(k+1) is what is left of
x^k * x after taking out one copy of x^(k-1). In Z/m folded by negation,
x^k is just the class of k*x, so the order of a class is the additive order
of its representative.
"""

# %%
from twovalued import AbelianSpec, abelian_coset, order, power_sequence, verify_power_relation

for m in (2, 3, 5, 8, 12):
    t = abelian_coset(AbelianSpec((m,)))
    print(f"Z/{m}:")
    for x in range(t.n):
        seq = power_sequence(t, x, 2 * m).terms
        print(f"  x={x}  ord={order(t, x):2d}  powers {' '.join(map(str, seq))}")

# %% the power relation x^k * x^m = [x^|k-m|, x^(k+m)] holds far past the order
t = abelian_coset(AbelianSpec((12,)))
print(all(verify_power_relation(t, x, 2 * t.n ** 2) for x in range(t.n)))

# %% order 2 is exactly x*x = [e, e]
for x in range(1, t.n):
    print(x, order(t, x), t[x, x])
