"""Small named structures used throughout the tests and docs.

PT is the three-point bitopological example that drives most of the
worked counterexamples: X = {a, b, c} with tau1 = {0, X, {a}, {b,c}} and
tau2 = {0, X, {b}}; its join topology has the six opens
0, {a}, {b}, {a,b}, {b,c}, X, here labelled 0 a b ab bc 1.
"""

from __future__ import annotations

from .bilocales import symmetric_bilocale, validate_bilocale
from .lattice import build_lattice


def p1():
    """The one-element lattice (bottom = top)."""
    return build_lattice(["0"], [], name="P1")


def c2():
    """The two-element Boolean lattice."""
    return build_lattice(["0", "1"], [("0", "1")], name="C2")


def c3():
    """The three-chain 0 < m < 1, the smallest non-Boolean frame."""
    return build_lattice(["0", "m", "1"], [("0", "m"), ("m", "1")], name="C3")


def b4():
    """The four-element Boolean lattice {0, p, q, 1}."""
    return build_lattice(["0", "p", "q", "1"],
                         [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
                         name="B4")


def m3():
    """The diamond: three incomparable atoms; the standard non-frame."""
    return build_lattice(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
        name="M3")


def pt_lattice():
    """The six-open join topology of the PT bispace."""
    return build_lattice(
        ["0", "a", "b", "ab", "bc", "1"],
        [("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab"),
         ("b", "bc"), ("ab", "1"), ("bc", "1")],
        name="PT")


def _mask(lat, labels):
    m = 0
    for lab in labels:
        m |= 1 << lat.index(lab)
    return m


def pt():
    """The PT bilocale: parts tau1 = {0, a, bc, 1} and tau2 = {0, b, 1}."""
    lat = pt_lattice()
    return validate_bilocale(lat, _mask(lat, ["0", "a", "bc", "1"]),
                             _mask(lat, ["0", "b", "1"]), name="PT")


def c3_sym():
    return symmetric_bilocale(c3(), name="C3")


def b4_sym():
    return symmetric_bilocale(b4(), name="B4")


def p1_sym():
    return symmetric_bilocale(p1(), name="P1")
