"""Finite involutive two-valued groups: tables, axioms, powers, constructions and enumeration."""

from .axioms import AxiomReport, Verdict, verify_all
from .construct import AbelianSpec, abelian_coset, group_coset_attempt
from .core import IDENTITY, Multiset, Pair, Table, mset_product, mul, pair_make
from .enumeration import are_isomorphic, canonical_form, enumerate_structures
from .io import GroupTable, ParseError, parse_group, parse_table, serialize_table
from .powers import IllFormedError, order, power_sequence, verify_power_relation

__all__ = [
    "AbelianSpec",
    "AxiomReport",
    "GroupTable",
    "IDENTITY",
    "IllFormedError",
    "Multiset",
    "Pair",
    "ParseError",
    "Table",
    "Verdict",
    "abelian_coset",
    "are_isomorphic",
    "canonical_form",
    "enumerate_structures",
    "group_coset_attempt",
    "mset_product",
    "mul",
    "order",
    "pair_make",
    "parse_group",
    "parse_table",
    "power_sequence",
    "serialize_table",
    "verify_all",
    "verify_power_relation",
]
