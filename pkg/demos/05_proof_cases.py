"""The identity behind commutativity, checked pair by pair.

For every x, y the 8-element multiset (x*y)*(y*x) must equal
[e, e, x^2, x^2] together with x*y^2*x. The case census sorts each ordered
pair by how x*y and y*x relate; on valid structures every pair lands in
the first case (the two products agree).
"""

# %%
from twovalued import AbelianSpec, abelian_coset, group_coset_attempt
from twovalued.construct import dihedral_group
from twovalued.theoremlab import case_census, main_identity_sides

t = abelian_coset(AbelianSpec((3, 3)))
for x, y in [(1, 2), (2, 3), (4, 4)]:
    lhs, rhs = main_identity_sides(t, x, y)
    print(f"x={x} y={y}: {list(lhs)} == {list(rhs)}: {lhs == rhs}")
print(case_census(t).as_dict())

# %% on the failed S3 attempt the census is not all case 1
bad = group_coset_attempt(dihedral_group(3))
print(case_census(bad).as_dict())
