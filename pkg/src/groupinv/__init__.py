"""Finite-group character machinery and noncommutative invariant generators.

Subpackage map:

- ``cyclotomic``: exact arithmetic in Q(zeta_m)
- ``groups``: finite groups as multiplication tables, closures, quotients
- ``chartheory``: character tables (modular method) and Clifford-theory ops
- ``decide``: ramification-style decision procedures and completeness checks
- ``freegroup``: free-group words, Schreier generators, Stallings folding
- ``invariants``: generator synthesis for algebras of invariants
- ``cli``: command-line entry points
"""

from __future__ import annotations

__version__ = "0.1.0"
