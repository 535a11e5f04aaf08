"""tsglab: which complete graphs K_m admit an embedding in the 3-sphere whose
orientation-preserving topological symmetry group is A4, S4 or A5.

The package answers the question three independent ways and cross-checks:
congruence rules on fixed-vertex profiles, exhaustive orbit-multiset
feasibility, and explicit equivariant constructions realized as SO(4)
matrices with machine-checkable edge-placement certificates.
"""

__version__ = "0.1.0"
