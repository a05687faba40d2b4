"""Exact, finite models of big intervals, big paths and their targets.

Submodules:

- ``cardinal``: symbolic cardinals with three-valued comparison under ZFC or GCH
- ``orders``: finite chains, monotone maps, the injection/surjection duality
- ``lexint``: the lexicographic interval [0,1]^n over the rationals
- ``embedding``: embedding finite chains into [0,1]^n with a replayable trace
- ``quotient``: collapsing [0,1]^n onto a mixed interval of atoms and segments
- ``finspace``: finite topological spaces and step homotopies
- ``bigmaps``: cellwise-constant paths and maps, loop algebra, density reduction
- ``cli``: the ``bighomotopy`` command
"""

from ._common import BigHomotopyError, RefusalError, Tri, ValidationError, Verdict

__version__ = "0.1.0"

__all__ = ["BigHomotopyError", "RefusalError", "Tri", "ValidationError", "Verdict", "__version__"]
