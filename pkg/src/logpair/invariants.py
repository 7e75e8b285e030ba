"""Numerical invariants of an open surface S - D and their identities.

All quantities are exact rationals.  The boundary enters twice, as a
lattice class and as a dual graph, and the arithmetic genus is computed
from both presentations and cross-checked before anything else runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .dualgraph import DualGraph
from .errors import InputError, InternalError
from .lattice import DivisorClass, HodgeData, SurfaceModel
from .linalg import is_negative_definite, solve_linear


@dataclass(frozen=True)
class LogInvariants:
    c1bar_sq: Fraction  # (K+D)^2
    c2bar: Fraction     # e(S) + 2(p_a(D) - 1 - l)
    pa_D: int
    l: int              # total edge multiplicity of the boundary graph
    chi_bar: Fraction   # chi(O_S) + (K+D).D / 2
    e_open: Fraction    # topological Euler number of S - D
    pg_log: int
    h1_log: int
    m: int              # connected components of the boundary


def log_genus_rational(
    graph: DualGraph,
    hodge: Optional[HodgeData] = None,
) -> tuple[int, int, int]:
    """(pg_log, h1_log, m) for a boundary on a rational surface.

    With q = p_g = 0 the section/kernel bookkeeping collapses and only
    the component count m and the boundary genus survive:
    h1_log = m - 1 and pg_log = p_a(D) + m - 1.
    """
    if hodge is not None and not hodge.is_rational_type:
        raise InputError(
            "requires cohomology data beyond Hodge numbers; only rational "
            "models (q = p_g = 0) are supported")
    if not graph.vertices:
        raise InputError("empty boundary graph")
    m = len(graph.components())
    pa = graph.arithmetic_genus()
    return pa + m - 1, m - 1, m


def log_chern(
    model: SurfaceModel,
    boundary: DivisorClass,
    graph: DualGraph,
) -> LogInvariants:
    hodge = model.hodge
    hodge.check()
    if boundary.is_zero():
        raise InputError("boundary class must be nonzero")
    if not boundary.is_integral():
        raise InputError("boundary class must be integral")
    pa_class = model.arithmetic_genus(boundary)
    pa_graph = graph.arithmetic_genus()
    if pa_class != pa_graph:
        raise InputError(
            f"inconsistent arithmetic genus sources: adjunction gives "
            f"{pa_class}, the dual graph gives {pa_graph}")
    pa = int(pa_class)
    l = graph.total_edge_multiplicity
    k = model.canonical_class()
    c1bar_sq = model.self_intersection(k + boundary)
    c2bar = Fraction(hodge.euler_e + 2 * (pa - 1 - l))
    # independent route through the Hodge numbers; must agree
    e_open = Fraction(
        hodge.h11 + 2 * hodge.p_g - 4 * hodge.q + 2 * pa - 2 * l)
    if e_open != c2bar:
        raise InternalError("Euler number routes disagree")
    chi_o = 1 - hodge.q + hodge.p_g
    chi_bar = chi_o + model.intersect(k + boundary, boundary) / 2
    pg_log, h1_log, m = log_genus_rational(graph, hodge)
    return LogInvariants(
        c1bar_sq=c1bar_sq,
        c2bar=c2bar,
        pa_D=pa,
        l=l,
        chi_bar=chi_bar,
        e_open=e_open,
        pg_log=pg_log,
        h1_log=h1_log,
        m=m,
    )


def noether_check(inv: LogInvariants, d_sq) -> bool:
    """c1bar^2 + c2bar + 6(p_a - 1) + D^2 + 2l == 12 chi_bar."""
    lhs = (inv.c1bar_sq + inv.c2bar + 6 * (inv.pa_D - 1)
           + Fraction(d_sq) + 2 * inv.l)
    return lhs == 12 * inv.chi_bar


@dataclass(frozen=True)
class EulerBoundReport:
    hypothesis_holds: bool          # p_a <= 2(l+q) + 1 - h11
    hypothesis_lhs: int
    hypothesis_rhs: int
    chi_omega_log: int              # 2(q+l) + 1 - h11 - p_a
    conclusion_holds: bool          # e_open <= 2 pg_log + 1
    strong_conclusion_holds: Optional[bool]  # e_open <= pg_log + 1 (p_g = 0)


def euler_bound_check(inv: LogInvariants,
                      hodge: HodgeData) -> EulerBoundReport:
    """Bound on the open Euler number via the log genus.

    The conclusion values are evaluated even when the hypothesis fails,
    so callers can see how tight each side is; nothing is asserted.
    """
    lhs = inv.pa_D
    rhs = 2 * (inv.l + hodge.q) + 1 - hodge.h11
    chi_omega = 2 * (hodge.q + inv.l) + 1 - hodge.h11 - inv.pa_D
    weak = inv.e_open <= 2 * inv.pg_log + 1
    strong = (inv.e_open <= inv.pg_log + 1) if hodge.p_g == 0 else None
    return EulerBoundReport(
        hypothesis_holds=lhs <= rhs,
        hypothesis_lhs=lhs,
        hypothesis_rhs=rhs,
        chi_omega_log=chi_omega,
        conclusion_holds=weak,
        strong_conclusion_holds=strong,
    )


def bmy_check(p_sq, n_sq, c2bar) -> bool:
    """P^2 / 3 <= c2bar - N^2 / 4 for a decomposition K+D = P + N."""
    return Fraction(p_sq) / 3 <= Fraction(c2bar) - Fraction(n_sq) / 4


def genus_bound(n: int, p_sq) -> Fraction:
    """(n+2)/(2 n^2) * P^2 + 1, the fiber genus cap for an n-section."""
    if not isinstance(n, int) or n < 1:
        raise InputError("the section multiplicity n must be an integer >= 1")
    return Fraction(n + 2, 2 * n * n) * Fraction(p_sq) + 1


def genus_asymptotic_bound(n: int, n_sq) -> Fraction:
    """Upper bound for g - 1 once the square bound is fed through the
    surface inequality: 3 (n+2) (2n + 3 - N^2/4) / (2 n^2)."""
    if not isinstance(n, int) or n < 1:
        raise InputError("the section multiplicity n must be an integer >= 1")
    return (Fraction(3 * (n + 2), 2 * n * n)
            * (2 * n + 3 - Fraction(n_sq) / 4))


@dataclass(frozen=True)
class CorrectionResult:
    coefficients: tuple[Fraction, ...]
    corrected: DivisorClass
    original_square: Fraction
    corrected_square: Fraction


def sharp_completion(
    model: SurfaceModel,
    x: DivisorClass,
    components: Sequence[DivisorClass],
) -> CorrectionResult:
    """X# = X + sum(a_i D_i) with X# orthogonal to every D_i.

    The components must span a negative definite sublattice.  Since the
    correction lives in that sublattice, (X#)^2 = X^2 - A^2 >= X^2 holds
    unconditionally and is verified here.
    """
    if len(x) != model.basis_size:
        raise InputError("class does not live in the model lattice")
    comps = list(components)
    if not comps:
        return CorrectionResult((), x, model.self_intersection(x),
                                model.self_intersection(x))
    gram = [[model.intersect(a, b) for b in comps] for a in comps]
    if not is_negative_definite(gram):
        raise InputError("component Gram matrix is not negative definite")
    rhs = [-model.intersect(x, c) for c in comps]
    coeffs = solve_linear(gram, rhs)
    corrected = x
    for a, c in zip(coeffs, comps):
        corrected = corrected + a * c
    for c in comps:
        if model.intersect(corrected, c) != 0:
            raise InternalError("orthogonal correction failed to close")
    x_sq = model.self_intersection(x)
    out_sq = model.self_intersection(corrected)
    if out_sq < x_sq:
        raise InternalError("corrected square dropped below the original")
    return CorrectionResult(tuple(coeffs), corrected, x_sq, out_sq)


@dataclass(frozen=True)
class TheoremCheck:
    applicable_branch: bool         # b >= 2, so the g+k window applies
    window_holds: Optional[bool]    # 2 <= g+k <= 3 (None when b < 2)
    boundary_case: bool             # g+k == 3
    boundary_b_holds: Optional[bool]       # b <= 2 (None unless boundary)
    boundary_h1_holds: Optional[bool]      # h1_log == 0 (None if not given)
    passed: bool
    note: str

    def as_dict(self) -> dict:
        return {
            "applicable_branch": self.applicable_branch,
            "window_holds": self.window_holds,
            "boundary_case": self.boundary_case,
            "boundary_b_holds": self.boundary_b_holds,
            "boundary_h1_holds": self.boundary_h1_holds,
            "passed": self.passed,
            "note": self.note,
        }


_FORM_NOTE = (
    "implements the g+k form (b >= 2 forces 2 <= g+k <= 3, and g+k = 3 "
    "forces b <= 2 with vanishing h1); a differently normalized 2g+k "
    "form (3 <= 2g+k <= 9, boundary 2g+k <= 6) circulates for the same "
    "bound and is not reconciled here"
)


def main_theorem_predicate(
    g: int,
    k: int,
    b: int,
    h1_log: Optional[int] = None,
) -> TheoremCheck:
    """Check a fibered pair's (genus, boundary degree, section count)
    triple against the classification window."""
    if k <= 0:
        raise InputError("the boundary must meet the fiber: k > 0 required")
    if g < 0 or b < 0:
        raise InputError("g and b must be nonnegative")
    applicable = b >= 2
    window = (2 <= g + k <= 3) if applicable else None
    boundary = (g + k == 3)
    b_ok = (b <= 2) if boundary else None
    h1_ok = (h1_log == 0) if (boundary and h1_log is not None) else None
    passed = True
    if applicable and not window:
        passed = False
    if boundary and b_ok is False:
        passed = False
    if h1_ok is False:
        passed = False
    return TheoremCheck(
        applicable_branch=applicable,
        window_holds=window,
        boundary_case=boundary,
        boundary_b_holds=b_ok,
        boundary_h1_holds=h1_ok,
        passed=passed,
        note=_FORM_NOTE,
    )
