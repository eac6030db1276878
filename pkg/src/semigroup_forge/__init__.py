"""Monoids of partial permutations on a finite chain and their semidirect decompositions."""
from .pperm import PartialPerm, compose, identity, empty, inverse, reversal, order_iso, parse, render
from .families import Family, enumerate_family, member
from .monoid_core import FiniteMonoid, MonoidMap, build, direct_product, green
from .reports import VerificationReport
from .bilateral import ActionPair, build_bilateral, build_semidirect, build_reverse_semidirect
from .constructions import Construction

__version__ = "0.1.0"
