"""Tables and the axioms.

A two-valued multiplication assigns to every ordered pair (x, y) an
unordered pair [a, b]. We build one from Z/5 folded by negation, look at
it, and run the four checks. Then we break it on purpose.
"""

# %%
from twovalued import AbelianSpec, abelian_coset, serialize_table, verify_all
from twovalued.core import Pair, Table, mset_product

t = abelian_coset(AbelianSpec((5,)))  # classes {0}, {1,4}, {2,3}
print(serialize_table(t))

# %% every product is a Pair; products of multisets are multisets
print("1*2 =", t[1, 2])
print("[1,2]*[2] =", mset_product(t, [1, 2], [2]))

# %% the full report: associativity, strong identity, involutivity, commutativity
report = verify_all(t)
print(report.as_dict())

# %% change one cell so that 1*1 no longer contains the identity
cells = [list(row) for row in t.cells]
cells[1][1] = Pair(1, 2)
broken = Table(3, tuple(map(tuple, cells)))
report = verify_all(broken)
print("involutive:", report.involutive.holds, "witness", report.involutive.witness)
print("associative:", report.associative.holds)
if not report.associative:
    w = report.associative.witness
    print(f"  ({w.x}*{w.y})*{w.z} = {list(w.lhs)}  vs  {w.x}*({w.y}*{w.z}) = {list(w.rhs)}")
