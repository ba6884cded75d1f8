"""Polynomial families in x: the deformed Bell polynomials, the new-type
variant built on the classical second-kind triangle, and the two families
generated by the doubly-iterated deformed maps.

Each family is produced two ways -- the explicit sum over a triangle against
the deformed falling basis, and coefficient extraction from its generating
series -- and the two are compared term by term (RouteMismatchError on any
disagreement).  Family polynomials are monic of exact degree n in x with a
λ-free leading coefficient, which the builders verify.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import XPoly, deg_falling_factorial
from .oracles import bell_number_classical
from .triangles import (
    RouteMismatchError,
    Triangle,
    classical_triangles,
    jstirling1,
    jstirling2,
    stirling2_deg,
)
from .series import Series, classical_exp, compose, deg_exp, deg_log

FAMILY_KINDS = ("degbell", "newbell", "jindalrae", "gaenari")


@dataclass(frozen=True)
class PolyFamily:
    kind: str
    order: int
    polys: tuple

    def poly(self, n: int) -> XPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"index {n} beyond stored order {self.order}")
        return self.polys[n]


def _sum_route(rows, order: int):
    """polys[n] = sum over k of rows[n][k] * x(x-λ)...(x-(k-1)λ)."""
    basis = [deg_falling_factorial(k) for k in range(order + 1)]
    polys = []
    for n in range(order + 1):
        acc = XPoly.zero()
        for k in range(n + 1):
            c = rows[n][k]
            if c:
                acc = acc + basis[k] * c
        polys.append(acc)
    return polys


def _egf_route(inner: Series, order: int):
    """polys[n] = n! [t^n] of the deformed exponential of x composed with inner."""
    outer = deg_exp(XPoly.var(), order)
    series = compose(outer, inner.truncate(order).lift())
    return [series.egf_coeff(n) for n in range(order + 1)]


def _validated(kind: str, order: int, sum_polys, egf_polys) -> PolyFamily:
    for n, (a, b) in enumerate(zip(sum_polys, egf_polys)):
        if a != b:
            raise RouteMismatchError(
                f"{kind} routes disagree at n={n}: sum {a} vs series {b}"
            )
    for n, p in enumerate(sum_polys):
        lead = p.coeff(n).constant_value()
        if p.degree != n or lead != 1:
            raise RouteMismatchError(
                f"{kind} P_{n} is not monic of degree {n} in x: {p}"
            )
    return PolyFamily(kind, order, tuple(sum_polys))


def deg_bell(order: int, triangle: Triangle | None = None) -> PolyFamily:
    """Deformed Bell polynomials."""
    if triangle is None:
        triangle = stirling2_deg(order)
    return _validated(
        "degbell",
        order,
        _sum_route(triangle.rows, order),
        _egf_route(deg_exp(1, order) - 1, order),
    )


def newtype_bell(order: int, triangle: Triangle | None = None) -> PolyFamily:
    """New-type deformed Bell polynomials (classical second-kind weights)."""
    if triangle is None:
        triangle = classical_triangles(order)[0]
    return _validated(
        "newbell",
        order,
        _sum_route(triangle.rows, order),
        _egf_route(classical_exp(order) - 1, order),
    )


def jindalrae(order: int, triangle: Triangle | None = None) -> PolyFamily:
    """Jindalrae polynomials (iterated second-kind weights)."""
    if triangle is None:
        triangle = jstirling2(order)
    em1 = deg_exp(1, order) - 1
    return _validated(
        "jindalrae",
        order,
        _sum_route(triangle.rows, order),
        _egf_route(compose(em1, em1), order),
    )


def gaenari(order: int, triangle: Triangle | None = None) -> PolyFamily:
    """Gaenari polynomials (iterated first-kind weights)."""
    if triangle is None:
        triangle = jstirling1(order)
    lg = deg_log(order)
    return _validated(
        "gaenari",
        order,
        _sum_route(triangle.rows, order),
        _egf_route(compose(lg, lg), order),
    )


def build_family(kind: str, order: int) -> PolyFamily:
    builders = {
        "degbell": deg_bell,
        "newbell": newtype_bell,
        "jindalrae": jindalrae,
        "gaenari": gaenari,
    }
    if kind not in builders:
        raise ValueError(f"unknown polynomial family {kind!r}")
    return builders[kind](order)


__all__ = [
    "FAMILY_KINDS",
    "PolyFamily",
    "bell_number_classical",
    "build_family",
    "deg_bell",
    "gaenari",
    "jindalrae",
    "newtype_bell",
]
