"""Number triangles: classical and degenerate Stirling kinds, their iterated
second-level kinds, the doubly-composed classical table, and the two
order-parametrised number slices (the 1/log and 1/(exp-1) power coefficients).

Every triangle is produced by two independent routes and compared entrywise;
the second route is the test oracle, since no published numeric tables exist
for the degenerate families.  A route disagreement raises
``RouteMismatchError`` -- it signals an engine bug, never bad input.

Routes per kind:

* second-kind degenerate ("s2deg"): EGF extraction from powers of e_λ(t)-1
  versus the triangular change of basis expressing x(x-λ)...(x-(n-1)λ) in the
  plain falling-factorial basis.
* first-kind degenerate ("s1deg"): powers of the deformed logarithm versus
  the change of basis expressing (x)_n in the deformed falling basis.
* iterated kinds ("j2deg"/"j1deg"): powers of the doubly-composed map versus
  the self-convolution of the single-level triangle.
* classical ("s2"/"s1"): λ=0 specialisation versus brute-force oracles.
* doubly-composed classical ("t"): convolution of the classical second-kind
  table with itself versus the multinomial sum over Bell-number products
  (the latter only for n <= 8; composition counts grow quickly).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .algebra import LambdaPoly, deg_falling_factorial, falling_factorial
from .oracles import bell_number_classical, partition_oracle, signed_cycle_oracle
from .scalars import Q
from .series import Series, compose, deg_exp, deg_log, mul_inverse

TRIANGLE_KINDS = ("s1", "s2", "s1deg", "s2deg", "j1deg", "j2deg", "t")
SLICE_KINDS = ("korobov", "degbernoulli")

_ORACLE_CHECK_LIMIT = 10


class RouteMismatchError(RuntimeError):
    """Two supposedly-equal computation routes disagreed: an engine bug."""


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular table (n, k) -> LambdaPoly for 0 <= k <= n <= order."""

    kind: str
    order: int
    rows: tuple

    def entry(self, n: int, k: int) -> LambdaPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"row {n} beyond stored order {self.order}")
        if not 0 <= k <= self.order:
            raise IndexError(f"column {k} beyond stored order {self.order}")
        if k > n:
            return LambdaPoly.zero()
        return self.rows[n][k]

    def specialized(self, lambda_value):
        """All entries at a rational λ, as triangular rows of scalars."""
        return tuple(
            tuple(c.eval(lambda_value) for c in row) for row in self.rows
        )


def rows_mismatch(rows_a, rows_b):
    """First (n, k, a, b) where two triangular tables differ, else None."""
    for n, (ra, rb) in enumerate(zip(rows_a, rows_b)):
        for k, (a, b) in enumerate(zip(ra, rb)):
            if a != b:
                return n, k, a, b
    return None


def _validated(kind: str, order: int, rows_a, rows_b, what: str) -> Triangle:
    bad = rows_mismatch(rows_a, rows_b)
    if bad is not None:
        n, k, a, b = bad
        raise RouteMismatchError(
            f"{kind} routes disagree at (n={n}, k={k}): {what}: {a} vs {b}"
        )
    return Triangle(kind, order, tuple(tuple(row) for row in rows_a))


def egf_triangle_rows(f: Series, order: int):
    """rows[n][k] = n!/k! * [t^n] f(t)^k for a delta series f."""
    if f.coeffs[0]:
        raise ValueError("EGF extraction needs a delta series")
    facts = [factorial(n) for n in range(order + 1)]
    zero = LambdaPoly.zero()
    rows = [[zero] * (n + 1) for n in range(order + 1)]
    rows[0][0] = LambdaPoly.one()
    power = Series.one(LambdaPoly, order)
    for k in range(1, order + 1):
        power = power * f
        scale_k = facts[k]
        for n in range(k, order + 1):
            rows[n][k] = power.coeffs[n] * Q(facts[n], scale_k)
    return rows


def basis_change_rows(targets, basis):
    """Expand targets[n] in the given monic triangular basis.

    rows[n][k] is the coefficient of basis[k] in targets[n]; peeled from the
    top degree down, which is exact because basis[k] is monic of degree k.
    """
    rows = []
    for n, target in enumerate(targets):
        residual = target
        row = [LambdaPoly.zero()] * (n + 1)
        for k in range(n, -1, -1):
            c = residual.coeff(k)
            if c:
                row[k] = c
                residual = residual - basis[k] * c
        if not residual.is_zero():
            raise RouteMismatchError(
                f"basis change left a nonzero residual for index {n}: {residual}"
            )
        rows.append(row)
    return rows


def convolution_rows(rows_a, rows_b):
    """rows[n][k] = sum over m of a[n][m] * b[m][k] (lower-triangular product)."""
    zero = LambdaPoly.zero()
    out = []
    for n, row_a in enumerate(rows_a):
        row = []
        for k in range(n + 1):
            acc = zero
            for m in range(k, n + 1):
                a = row_a[m]
                b = rows_b[m][k]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def lambda_zero_rows(rows):
    """Specialise triangular LambdaPoly rows at λ = 0 (constant entries)."""
    return [[LambdaPoly.const(c.eval(0)) for c in row] for row in rows]


def stirling2_deg_routes(order: int):
    egf = egf_triangle_rows(deg_exp(1, order) - 1, order)
    targets = [deg_falling_factorial(n) for n in range(order + 1)]
    basis = [falling_factorial(k) for k in range(order + 1)]
    return egf, basis_change_rows(targets, basis)


def stirling2_deg(order: int) -> Triangle:
    """Degenerate second-kind triangle."""
    egf, basis = stirling2_deg_routes(order)
    return _validated("s2deg", order, egf, basis, "series vs basis change")


def stirling1_deg_routes(order: int):
    egf = egf_triangle_rows(deg_log(order), order)
    targets = [falling_factorial(n) for n in range(order + 1)]
    basis = [deg_falling_factorial(k) for k in range(order + 1)]
    return egf, basis_change_rows(targets, basis)


def stirling1_deg(order: int) -> Triangle:
    """Degenerate (signed) first-kind triangle."""
    egf, basis = stirling1_deg_routes(order)
    return _validated("s1deg", order, egf, basis, "series vs basis change")


def jstirling2_routes(order: int, s2_rows=None):
    em1 = deg_exp(1, order) - 1
    egf = egf_triangle_rows(compose(em1, em1), order)
    if s2_rows is None:
        s2_rows = stirling2_deg(order).rows
    return egf, convolution_rows(s2_rows, s2_rows)


def jstirling2(order: int) -> Triangle:
    """Iterated degenerate second-kind triangle."""
    egf, conv = jstirling2_routes(order)
    return _validated("j2deg", order, egf, conv, "series vs self-convolution")


def jstirling1_routes(order: int, s1_rows=None):
    lg = deg_log(order)
    egf = egf_triangle_rows(compose(lg, lg), order)
    if s1_rows is None:
        s1_rows = stirling1_deg(order).rows
    return egf, convolution_rows(s1_rows, s1_rows)


def jstirling1(order: int) -> Triangle:
    """Iterated degenerate first-kind triangle."""
    egf, conv = jstirling1_routes(order)
    return _validated("j1deg", order, egf, conv, "series vs self-convolution")


def classical_triangles(order: int):
    """Classical second-kind and signed first-kind triangles, as (s2, s1).

    Obtained by specialising the degenerate triangles at λ = 0 and
    cross-checked against the enumeration oracles (up to the oracle cap).
    """
    s2_rows = lambda_zero_rows(stirling2_deg(order).rows)
    s1_rows = lambda_zero_rows(stirling1_deg(order).rows)
    limit = min(order, _ORACLE_CHECK_LIMIT)
    oracle_s2 = [
        [LambdaPoly.const(partition_oracle(n, k)) for k in range(n + 1)]
        for n in range(limit + 1)
    ]
    oracle_s1 = [
        [LambdaPoly.const(signed_cycle_oracle(n, k)) for k in range(n + 1)]
        for n in range(limit + 1)
    ]
    s2 = _validated("s2", order, s2_rows, oracle_s2 + s2_rows[limit + 1 :],
                    "λ=0 vs partition enumeration")
    s1 = _validated("s1", order, s1_rows, oracle_s1 + s1_rows[limit + 1 :],
                    "λ=0 vs product expansion")
    return s2, s1


def _compositions(n: int, k: int):
    """All k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def t_multinomial_rows(order: int):
    """rows[n][k] = (1/k!) * sum over compositions of n into k positive parts
    of the multinomial coefficient times the product of Bell numbers."""
    facts = [factorial(i) for i in range(order + 1)]
    bells = [bell_number_classical(i) for i in range(order + 1)]
    rows = []
    for n in range(order + 1):
        row = []
        for k in range(n + 1):
            if k == 0:
                row.append(LambdaPoly.const(1 if n == 0 else 0))
                continue
            total = 0
            for parts in _compositions(n, k):
                coeff = facts[n]
                for p in parts:
                    coeff //= facts[p]
                term = coeff
                for p in parts:
                    term *= bells[p]
                total += term
            value = Q(total, facts[k])
            if value.denominator != 1:
                raise RouteMismatchError(
                    f"multinomial route produced a non-integer at ({n},{k}): {value}"
                )
            row.append(LambdaPoly.const(value))
        rows.append(row)
    return rows


def t_numbers_routes(order: int, s2_classical_rows=None):
    if s2_classical_rows is None:
        s2_classical_rows = classical_triangles(order)[0].rows
    conv = convolution_rows(s2_classical_rows, s2_classical_rows)
    multi = t_multinomial_rows(min(order, 8))
    return conv, multi


def t_numbers(order: int) -> Triangle:
    """Doubly-composed classical second-kind triangle."""
    conv, multi = t_numbers_routes(order)
    limit = len(multi) - 1
    _validated("t", limit, conv[: limit + 1], multi, "convolution vs multinomial")
    return Triangle("t", order, tuple(tuple(row) for row in conv))


def korobov(order: int, r: int):
    """Constant terms of (t / log_λ(1+t))^r: one λ-polynomial per n <= order."""
    return korobov_table(order, r)[r]


def deg_bernoulli(order: int, r: int):
    """Constant terms of (t / (e_λ(t)-1))^r: one λ-polynomial per n <= order."""
    return deg_bernoulli_table(order, r)[r]


def _power_slices(base: Series, order: int, max_r: int):
    """table[r][n] = n! [t^n] base^r for r = 0..max_r (table[0] is 1, 0, ...)."""
    facts = [factorial(n) for n in range(order + 1)]
    table = [tuple(
        LambdaPoly.one() if n == 0 else LambdaPoly.zero() for n in range(order + 1)
    )]
    power = Series.one(LambdaPoly, order)
    for _ in range(max_r):
        power = power * base
        table.append(tuple(power.coeffs[n] * facts[n] for n in range(order + 1)))
    return table


def korobov_table(order: int, max_r: int):
    """Korobov-number slices for every order 0..max_r at once."""
    if max_r < 1:
        raise ValueError("slice order r must be >= 1")
    base = mul_inverse(deg_log(order + 1).shift_down())
    return _power_slices(base, order, max_r)


def deg_bernoulli_table(order: int, max_r: int):
    """Higher-order deformed Bernoulli number slices for 0..max_r at once."""
    if max_r < 1:
        raise ValueError("slice order r must be >= 1")
    base = mul_inverse((deg_exp(1, order + 1) - 1).shift_down())
    return _power_slices(base, order, max_r)
