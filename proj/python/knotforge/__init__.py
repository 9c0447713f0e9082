"""Exact knot invariants, annulus-twist families, and slice-ribbon obstructions.

The heavy lifting lives in the C++ extension module; this package re-exports
it with a couple of JSON conveniences.
"""

import json as _json

from ._core import (  # noqa: F401
    InputError,
    MathError,
    PlanarDiagram,
    __version__,
    alexander,
    alexander_from_monodromy,
    annulus_presentation_63_json,
    annulus_twist_json,
    connected_sum,
    d3,
    d3_family,
    determinant,
    diagram_from_json,
    dichotomy,
    family_63,
    homological_action,
    jones,
    kauffman_bracket,
    ribbon_check,
    same_fibered_knot,
    signature,
    word_for_An,
)


def annulus_presentation_63():
    """Built-in annulus presentation of 6_3 as a dict."""
    return _json.loads(annulus_presentation_63_json())


def annulus_twist(presentation, n):
    """Apply an n-fold annulus twist to a presentation dict; returns a knot dict."""
    return _json.loads(annulus_twist_json(_json.dumps(presentation), n))


def dichotomy_report(n, m):
    """Structured report for the family pair (K_n, K_m) as a dict."""
    return _json.loads(dichotomy(n, m))
