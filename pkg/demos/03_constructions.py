"""Structures from groups.

Folding a group by inversion gives a valid structure for every abelian
group. For nonabelian groups the same recipe may or may not work: S3 and
the dihedral groups fail associativity, while Q8 folds to a valid (and
commutative) structure on five elements.
"""

# %%
from twovalued import abelian_coset, group_coset_attempt, verify_all
from twovalued.construct import abelian_specs, dihedral_group, quaternion_group

valid = sum(verify_all(abelian_coset(s)).is_involutive_2vg for s in abelian_specs(32))
print(f"abelian groups of order <= 32: {valid} of {len(list(abelian_specs(32)))} fold to valid structures")

# %%
for name, g in [("S3", dihedral_group(3)), ("D4", dihedral_group(4)), ("D5", dihedral_group(5)), ("Q8", quaternion_group())]:
    t = group_coset_attempt(g)
    r = verify_all(t)
    print(
        f"{name}: {t.n} classes, associative={r.associative.holds}, "
        f"identity={r.strong_identity.holds}, involutive={r.involutive.holds}, commutative={r.commutative.holds}"
    )
