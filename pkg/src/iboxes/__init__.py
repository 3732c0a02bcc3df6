"""Exact combinatorics of i-box chains, box moves, T-systems and cluster mutation.

The package is organized bottom-up:

- ``roots``       simply laced root systems, Weyl words, folded affine data
- ``qdata``       height functions, reflection functors, the lattice and phi
- ``sequences``   admissible sequences and their index calculus
- ``chains``      i-boxes, admissible chains, box moves, T-equivalence
- ``quivers``     repetition / block quivers and exchange matrices
- ``laurent``     exact integer Laurent polynomials
- ``cluster``     seeds, matrix / Lambda / variable mutation
- ``tsystems``    T-system relations, KR labels, seeds from chains
- ``invariants``  the type A reference backend for d, Lambda, E-vectors
- ``verify``      the property suites behind `iboxes verify`
- ``cli``         command line front door
- ``service``     JSON-over-HTTP session service for the explorer
"""

from iboxes.roots import FoldedCartanDatum, folded_datum

__all__ = ["FoldedCartanDatum", "folded_datum"]
__version__ = "0.1.0"
