"""hopspan: hop spanners for geometric intersection graphs.

The package builds 2-hop and 3-hop spanners for intersection graphs of
intervals, unit disks, translates of a convex body, axis-aligned
rectangles, and fat convex bodies, and verifies every construction
against a brute-force hop-distance oracle.
"""

__version__ = "0.1.0"
