"""Vertex-transmission toolkit.

Computing, classifying and searching vertex-transmission structure in
graphs: transmissions for cores with chordal paths without expanding,
TI/MTI/ITI classification, parametric families with closed-form oracles,
Cartesian-product constructions, exhaustive chord searches, and an
interactive exploration session served over a JSON API.
"""

__version__ = "0.1.0"
