"""Ideals of ruled surfaces over curves, computed over Z/p.

Subpackages: ``core`` (rings, polynomials, matrices), ``groebner`` (bases,
colon/saturation/elimination, Hilbert data, resolutions), ``modules``
(graded modules over curve coordinate rings) and ``surfaces`` (curves,
scrolls, conic and k-bundles).  ``recipes`` holds the worked pipelines and
``cli`` the command-line tool.
"""

__version__ = "0.1.0"
