"""Truncated power series over exact integers, and the counting identities.

Every identity the package cares about is integral, so coefficients are
plain Python ints and every check is exact.  Operations on series of
different truncation orders truncate to the smaller order.  Sums over all
powers of a series are finite here because the inner series always has zero
constant term, so powers beyond the truncation order vanish.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import decorated_trees, permutations, planar_trees
from .errors import BoundExceeded, ComposeNonzeroConstant
from .permutations import IndecKind


@dataclass(frozen=True)
class Series:
    """Coefficients ``a0..aN`` of a series truncated at order ``N``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("a series carries at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def zeros(cls, order: int) -> "Series":
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, value: int, order: int) -> "Series":
        return cls((value,) + (0,) * order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: int = 1) -> "Series":
        if degree > order:
            return cls.zeros(order)
        return cls(tuple(coefficient if i == degree else 0 for i in range(order + 1)))

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.coefficients[: order + 1])

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(self.coefficients[i] + other.coefficients[i] for i in range(n + 1)))

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(self.coefficients[i] - other.coefficients[i] for i in range(n + 1)))

    def __mul__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coefficients[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return Series(tuple(out))

    def scale(self, factor: int) -> "Series":
        return Series(tuple(factor * c for c in self.coefficients))

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` for the indeterminate; ``inner`` must have
        zero constant term."""
        if inner.coefficients[0] != 0:
            raise ComposeNonzeroConstant("substitution needs a zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = Series.zeros(n)
        for coef in reversed(self.coefficients[: n + 1]):
            acc = acc * inner + Series.constant(coef, n)
        return acc

    def __str__(self) -> str:
        terms = []
        for degree, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if degree == 0:
                terms.append(str(c))
            elif degree == 1:
                terms.append(f"{c}*T")
            else:
                terms.append(f"{c}*T^{degree}")
        if not terms:
            return "0"
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def series_arith(a: Series, b: Series, kind: str) -> Series:
    """Dispatch ``add``/``sub``/``mul``/``compose`` by name."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "compose":
        return a.compose(b)
    raise ValueError(f"unknown series operation {kind!r}")


def sum_of_powers(g: Series, alternating: bool = False) -> Series:
    """Sum of ``g^k`` for k >= 1 (signs alternating if asked), truncated at
    ``g``'s order; needs a zero constant term so the sum is finite."""
    if g.coefficients[0] != 0:
        raise ComposeNonzeroConstant("power sums need a zero constant term")
    acc = Series.zeros(g.order)
    power = g
    sign = 1
    for _ in range(1, g.order + 1):
        acc = acc + power if sign > 0 else acc - power
        power = power * g
        if alternating:
            sign = -sign
    return acc


# --- named coefficient sources -----------------------------------------------

SOURCES = ("factorials", "sharp-indec", "s2-indec", "super-catalan", "catalan", "dupl")

_WORD_SCAN_LIMIT = 2**21


def from_counts(source: str, order: int, alphabet_size: int = 1) -> Series:
    """Series whose degree-n coefficient is the named count, for n = 1..order.

    ``sharp-indec`` and ``s2-indec`` are computed both by scanning all
    permutations and by the alternating block-sum formulas; the two routes
    must agree.  ``dupl`` counts label-decorated trees over an alphabet of
    ``alphabet_size`` generators, by enumeration.
    """
    if source == "factorials":
        return Series((0,) + tuple(math.factorial(n) for n in range(1, order + 1)))
    if source == "super-catalan":
        return Series((0,) + tuple(planar_trees.super_catalan(n) for n in range(1, order + 1)))
    if source == "catalan":
        from .binary_trees import catalan

        return Series((0,) + tuple(catalan(n) for n in range(1, order + 1)))
    if source == "sharp-indec":
        return _cross_checked(_scan_indec(IndecKind.SHARP, order), _sharp_indec_formula(order), source)
    if source == "s2-indec":
        factorials = from_counts("factorials", order)
        formula = _sharp_indec_formula(order).scale(2) - factorials
        return _cross_checked(_scan_indec(IndecKind.S2, order), formula, source)
    if source == "dupl":
        counts = [
            len(decorated_trees.enumerate_decorated(n)) * alphabet_size**n
            for n in range(1, order + 1)
        ]
        return Series((0, *counts))
    raise ValueError(f"unknown count source {source!r}; known: {', '.join(SOURCES)}")


def _scan_indec(kind: IndecKind, order: int) -> Series:
    counts = [len(permutations.enumerate_indecomposable(n, kind)) for n in range(1, order + 1)]
    return Series((0, *counts))


def _sharp_indec_formula(order: int) -> Series:
    # inclusion-exclusion over ordered block splits: sum_k (-1)^(k-1) psi^k
    return sum_of_powers(from_counts("factorials", order), alternating=True)


def _cross_checked(scanned: Series, formula: Series, source: str) -> Series:
    if scanned != formula:
        raise RuntimeError(f"count routes disagree for {source}: {scanned} vs {formula}")
    return scanned


# --- named identity checks ----------------------------------------------------

CHECKS = ("ass", "fesvi", "usformula", "supercatalan", "dupl", "desformula", "cor52")

DEFAULT_ORDERS = {
    "ass": 7,
    "fesvi": 12,
    "usformula": 7,
    "supercatalan": 12,
    "dupl": 6,
    "desformula": 7,
    "cor52": 7,
}


@dataclass(frozen=True)
class CheckResult:
    label: str
    ok: bool
    mismatch_degree: int | None = None
    lhs_coefficient: int | None = None
    rhs_coefficient: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    name: str
    order: int
    ok: bool
    checks: tuple[CheckResult, ...]

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.ok), None)


def _compare(label: str, lhs: Series, rhs: Series) -> CheckResult:
    n = min(lhs.order, rhs.order)
    for degree in range(n + 1):
        a, b = lhs.coefficients[degree], rhs.coefficients[degree]
        if a != b:
            return CheckResult(label, False, degree, a, b)
    return CheckResult(label, True)


def verify_identity(name: str, order: int | None = None) -> VerificationReport:
    """Check one of the named counting identities coefficient-wise.

    Each check compares two independently computed series (enumeration
    against closed formula, or formula against formula in a different
    shape) modulo ``T**(order+1)``.
    """
    if name not in CHECKS:
        raise ValueError(f"unknown identity {name!r}; known: {', '.join(CHECKS)}")
    if order is None:
        order = DEFAULT_ORDERS[name]
    checks = _CHECK_BUILDERS[name](order)
    return VerificationReport(name, order, all(c.ok for c in checks), tuple(checks))


def _check_free_semigroup_series(order: int) -> list[CheckResult]:
    # word counts by enumeration against s*T / (1 - s*T), cross-multiplied
    results = []
    for s in (1, 2, 3):
        if s**order > _WORD_SCAN_LIMIT:
            raise BoundExceeded(f"word scan {s}**{order} exceeds the enumeration limit")
        counts = [
            sum(1 for _ in itertools.product(range(s), repeat=n)) for n in range(1, order + 1)
        ]
        lhs = Series((0, *counts)) * Series((1, -s) + (0,) * (order - 1))
        rhs = Series.monomial(1, order, s)
        results.append(_compare(f"alphabet of {s}: words*(1-{s}T) = {s}T", lhs, rhs))
    return results


def _check_tree_series_sqrt(order: int) -> list[CheckResult]:
    # (T + 1 - 4f)^2 = T^2 - 6T + 1 with f the tree-count series
    f = from_counts("super-catalan", order)
    lhs = Series.monomial(1, order) + Series.constant(1, order) - f.scale(4)
    return [_compare("(T+1-4f)^2 = T^2-6T+1", lhs * lhs, Series((1, -6, 1) + (0,) * (order - 2)))]


def _check_factorial_composition(order: int) -> list[CheckResult]:
    # factorials = sum over k of (scanned indecomposable series)^k
    psi = from_counts("factorials", order)
    u = from_counts("sharp-indec", order)
    return [_compare("sum_k u(T)^k = sum n! T^n", sum_of_powers(u), psi)]


def _check_tree_series_doubling(order: int) -> list[CheckResult]:
    # sum over k of g^k = T + 2(g - T) with g the tree-count series
    g = from_counts("super-catalan", order)
    t = Series.monomial(1, order)
    return [_compare("sum_k g^k = T + 2(g-T)", sum_of_powers(g), t + (g - t).scale(2))]


def _check_labeled_duplex_series(order: int) -> list[CheckResult]:
    # enumerated label counts against s*T + 2*sum_{n>=2} C_n (sT)^n
    results = []
    for s in (1, 2):
        counted = from_counts("dupl", order, alphabet_size=s)
        tail = Series(
            (0, 0) + tuple(planar_trees.super_catalan(n) * s**n for n in range(2, order + 1))
        )
        formula = Series.monomial(1, order, s) + tail.scale(2)
        results.append(_compare(f"alphabet of {s}: counts = {s}T + 2*sum C_n ({s}T)^n", counted, formula))
    return results


def _check_doubly_indec_formula(order: int) -> list[CheckResult]:
    # scanned doubly-indecomposable counts against 2u_n - n!
    d = _scan_indec(IndecKind.S2, order)
    u = _scan_indec(IndecKind.SHARP, order)
    psi = from_counts("factorials", order)
    return [_compare("d_n = 2u_n - n!", d, u.scale(2) - psi)]


def _check_factorial_quadratic(order: int) -> list[CheckResult]:
    # psi^2 + xi*psi - psi + xi = 0, and the solved form psi = 2f(xi) - xi
    psi = from_counts("factorials", order)
    xi = from_counts("s2-indec", order)
    quadratic = psi * psi + xi * psi - psi + xi
    f = from_counts("super-catalan", order)
    solved = f.compose(xi).scale(2) - xi
    return [
        _compare("psi^2 + xi*psi - psi + xi = 0", quadratic, Series.zeros(order)),
        _compare("psi = 2f(xi) - xi", psi, solved),
    ]


_CHECK_BUILDERS = {
    "ass": _check_free_semigroup_series,
    "fesvi": _check_tree_series_sqrt,
    "usformula": _check_factorial_composition,
    "supercatalan": _check_tree_series_doubling,
    "dupl": _check_labeled_duplex_series,
    "desformula": _check_doubly_indec_formula,
    "cor52": _check_factorial_quadratic,
}
