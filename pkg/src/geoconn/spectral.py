"""Eigenpair verification, Perron iteration and connectivity certificates.

Two eigenpair notions are handled for an order-m tensor T:

    H:  T x^{m-1} = lambda * x^{[m-1]}        (x^{[p]} = entrywise p-th power)
    Z:  T x^{m-1} = lambda * x  and  x'x = 1

The headline computations certify that the number of connected components r
of a k-uniform hypergraph equals the maximum number of linearly independent
nonnegative null eigenvectors of its Laplacian tensor: the component
indicator vectors are verified exactly as 0-eigenvectors, and maximality is
pinned per component through the uniqueness of the Perron vector of the
component's shifted Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import isqrt, sqrt
from typing import Sequence

from .errors import (
    DimensionError,
    NoConvergence,
    NotIrreducible,
    NotRegular,
    ZeroVector,
)
from .hypergraph import (
    ComponentDecomposition,
    Hypergraph,
    connected_components,
    induced,
    is_regular,
)
from .tensor import (
    Number,
    TensorView,
    adjacency,
    apply,
    is_exact_scalar,
    is_weakly_irreducible,
    laplacian,
    shifted_laplacian,
)

DEFAULT_TOL = 1e-9
PERRON_TOL = 1e-10
MAX_ITER = 10000

VARIANT_H = "H"
VARIANT_Z = "Z"

# Maximality certification status per component.
CERTIFIED = "certified"
TRIVIAL = "trivial"
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class EigenpairCertificate:
    """A checked eigenpair candidate.

    ``residual`` is the scale-normalized max-norm defect (exact definition
    depends on the variant, see the verify functions); it is exactly 0 when
    a true eigenpair is checked in exact arithmetic. ``exact`` records
    whether integer/rational arithmetic was used throughout.
    """

    eigenvalue: Number
    vector: tuple[Number, ...]
    variant: str
    residual: Number
    exact: bool
    tol: float

    @property
    def accepted(self) -> bool:
        return self.residual <= self.tol


@dataclass(frozen=True)
class PerronResult:
    """Converged output of the shifted power iteration."""

    rho: float
    vector: tuple[float, ...]
    iterations: int
    tolerance: float


@dataclass(frozen=True)
class ConnectivityReport:
    """Everything the connectivity computations certify about one hypergraph.

    ``certificates`` holds one verified eigenpair per component, in component
    order. ``maximality`` records per component whether the basis was proved
    maximal: ``certified`` (Perron vector of the component's shifted
    Laplacian is parallel to the all-ones vector), ``trivial`` (singleton
    component) or ``unverified`` (iteration did not converge).
    """

    component_count: int
    beta: int
    beta_z: int
    beta_rho: int | None
    certificates: tuple[EigenpairCertificate, ...]
    weakly_irreducible: bool
    regular_degree: int | None
    spectral_radius: Number | None
    decomposition: ComponentDecomposition = field(repr=False)
    maximality: tuple[str, ...] = field(repr=False)
    perron_runs: tuple[PerronResult | None, ...] = field(repr=False)

    @property
    def maximality_certified(self) -> bool:
        return all(status != UNVERIFIED for status in self.maximality)


@dataclass(frozen=True)
class SignedNullVectorsDemo:
    """Outcome of checking signed null-eigenvector candidates against beta."""

    accepted: tuple[EigenpairCertificate, ...]
    rejected: tuple[EigenpairCertificate, ...]
    beta: int

    @property
    def independent_count(self) -> int:
        return len(self.accepted)


def _checked_vector(view: TensorView, x: Sequence[Number]) -> tuple[Number, ...]:
    xs = tuple(x)
    if len(xs) != view.dim:
        raise DimensionError(f"vector has length {len(xs)}, tensor dimension is {view.dim}")
    if all(v == 0 for v in xs):
        raise ZeroVector("candidate eigenvector must be nonzero")
    return xs


def verify_h_eigenpair(view: TensorView, eigenvalue: Number, x: Sequence[Number],
                       tol: float = DEFAULT_TOL) -> EigenpairCertificate:
    """Check T x^{m-1} = lambda * x^{[m-1]}.

    residual = ||T x^{m-1} - lambda * x^{[m-1]}||_inf / max(1, ||x||_inf^{m-1}),
    kept as an exact rational when the tensor, eigenvalue and vector are all
    exact.
    """
    xs = _checked_vector(view, x)
    exact = view.is_exact and is_exact_scalar(eigenvalue) and all(map(is_exact_scalar, xs))
    power = view.order - 1
    y = apply(view, xs)
    defect: Number = 0
    for yi, xi in zip(y, xs):
        d = abs(yi - eigenvalue * (xi ** power))
        if d > defect:
            defect = d
    scale = max(abs(xi) for xi in xs) ** power
    if scale < 1:
        scale = 1
    residual = Fraction(defect, scale) if exact else defect / scale
    return EigenpairCertificate(eigenvalue, xs, VARIANT_H, residual, exact, tol)


def verify_z_eigenpair(view: TensorView, eigenvalue: Number, x: Sequence[Number],
                       tol: float = DEFAULT_TOL) -> EigenpairCertificate:
    """Check T x^{m-1} = lambda * x together with the normalization x'x = 1.

    residual = max(||T x^{m-1} - lambda * x||_inf, |x'x - 1|).
    """
    xs = _checked_vector(view, x)
    exact = view.is_exact and is_exact_scalar(eigenvalue) and all(map(is_exact_scalar, xs))
    y = apply(view, xs)
    defect: Number = 0
    for yi, xi in zip(y, xs):
        d = abs(yi - eigenvalue * xi)
        if d > defect:
            defect = d
    norm_defect = abs(sum(xi * xi for xi in xs) - 1)
    residual = max(defect, norm_defect)
    if exact:
        residual = Fraction(residual)
    return EigenpairCertificate(eigenvalue, xs, VARIANT_Z, residual, exact, tol)


def perron(view: TensorView, tol: float = PERRON_TOL,
           max_iter: int = MAX_ITER) -> PerronResult:
    """Spectral radius and positive eigenvector of a nonnegative weakly
    irreducible tensor by shifted power iteration.

    Iterates on T + I (unit diagonal shift; weak irreducibility alone does
    not make the plain iteration convergent, while the shift does and only
    moves the spectral radius by 1). From x > 0, each step computes
    z = (T + I) x^{m-1}; the ratios z_i / x_i^{m-1} bracket the spectral
    radius of T + I, and the iteration stops once max - min < tol, returning
    the bracket midpoint minus the shift. The next iterate is the entrywise
    (m-1)-th root of z, sup-normalized.

    The returned vector is entrywise positive and the pair passes
    verify_h_eigenpair at tolerance 10*tol. Raises NotIrreducible when the
    support digraph is not strongly connected, NoConvergence (with the last
    bracket) when max_iter is hit.
    """
    if not is_weakly_irreducible(view):
        raise NotIrreducible("power iteration requires a weakly irreducible tensor")
    power = view.order - 1
    root = 1.0 / power
    x = [1.0] * view.dim
    lower = upper = 0.0
    for iteration in range(1, max_iter + 1):
        y = apply(view, x)
        z = [float(yi) + xi ** power for yi, xi in zip(y, x)]
        ratios = [zi / xi ** power for zi, xi in zip(z, x)]
        upper = max(ratios)
        lower = min(ratios)
        if upper - lower < tol:
            rho = (upper + lower) / 2.0 - 1.0
            vector = tuple(x)
            certificate = verify_h_eigenpair(view, rho, vector, 10.0 * tol)
            if not certificate.accepted:
                raise NoConvergence(
                    f"converged ratios failed verification (residual {certificate.residual})",
                    lower - 1.0, upper - 1.0, iteration)
            return PerronResult(rho, vector, iteration, tol)
        scaled = [zi ** root for zi in z]
        top = max(scaled)
        x = [si / top for si in scaled]
    raise NoConvergence(
        f"no convergence after {max_iter} iterations "
        f"(spectral radius in [{lower - 1.0}, {upper - 1.0}])",
        lower - 1.0, upper - 1.0, max_iter)


def _indicator(n: int, part: Sequence[int]) -> tuple[int, ...]:
    members = set(part)
    return tuple(1 if v in members else 0 for v in range(1, n + 1))


def _cosine_with_ones(vector: Sequence[float]) -> float:
    n = len(vector)
    total = sum(vector)
    norm = sqrt(sum(v * v for v in vector) * n)
    return total / norm


def geometry_connectivity(g: Hypergraph, tol: float = DEFAULT_TOL, *,
                          perron_tol: float = PERRON_TOL,
                          max_iter: int = MAX_ITER) -> ConnectivityReport:
    """Compute beta(G) with certificates.

    The component indicator vectors e_{V_1},...,e_{V_r} are each verified in
    exact integer arithmetic as 0-eigenvectors of the Laplacian tensor, so
    beta equals the component count r. Maximality of the basis is certified
    per component: on each component with edges, the Perron vector of the
    shifted Laplacian (max-degree shift) is unique and must be parallel to
    the all-ones vector, which pins the nonnegative null space of that
    component to one ray. A component whose Perron iteration fails to
    converge is reported with maximality ``unverified``; beta is unaffected.
    """
    decomposition = connected_components(g)
    parts = decomposition.parts
    lap = laplacian(g)
    certificates = tuple(
        verify_h_eigenpair(lap, 0, _indicator(g.n, part), tol) for part in parts)
    maximality: list[str] = []
    runs: list[PerronResult | None] = []
    for part in parts:
        if len(part) == 1:
            maximality.append(TRIVIAL)
            runs.append(None)
            continue
        component, _ = induced(g, part)
        try:
            result = perron(shifted_laplacian(component), perron_tol, max_iter)
        except NoConvergence:
            maximality.append(UNVERIFIED)
            runs.append(None)
            continue
        parallel = _cosine_with_ones(result.vector) >= 1.0 - tol
        maximality.append(CERTIFIED if parallel else UNVERIFIED)
        runs.append(result)
    degree = is_regular(g)
    r = len(parts)
    return ConnectivityReport(
        component_count=r,
        beta=r,
        beta_z=r,
        beta_rho=r if degree is not None else None,
        certificates=certificates,
        weakly_irreducible=is_weakly_irreducible(adjacency(g)),
        regular_degree=degree,
        spectral_radius=None,
        decomposition=decomposition,
        maximality=tuple(maximality),
        perron_runs=tuple(runs),
    )


def _unit_indicator(n: int, part: Sequence[int]) -> tuple[Number, ...]:
    # 1/sqrt(|part|) on the part; exact rational when |part| is a square
    size = len(part)
    r = isqrt(size)
    entry: Number = Fraction(1, r) if r * r == size else 1.0 / sqrt(size)
    members = set(part)
    return tuple(entry if v in members else 0 for v in range(1, n + 1))


def z_geometry_connectivity(g: Hypergraph, tol: float = DEFAULT_TOL, *,
                            perron_tol: float = PERRON_TOL,
                            max_iter: int = MAX_ITER) -> ConnectivityReport:
    """Compute beta_Z(G): same indicator basis as geometry_connectivity,
    rescaled to unit Euclidean norm and re-verified as Z-eigenpairs at 0.

    The two null-vector sets differ only by normalization, so
    beta_Z = beta = component count. The rescaled certificates stay exact
    whenever the component size is a perfect square.
    """
    report = geometry_connectivity(g, tol, perron_tol=perron_tol, max_iter=max_iter)
    lap = laplacian(g)
    certificates = tuple(
        verify_z_eigenpair(lap, 0, _unit_indicator(g.n, part), tol)
        for part in report.decomposition.parts)
    return replace(report, certificates=certificates)


def rho_connectivity(g: Hypergraph, tol: float = DEFAULT_TOL, *,
                     perron_tol: float = PERRON_TOL,
                     max_iter: int = MAX_ITER) -> ConnectivityReport:
    """Compute beta_rho(G) for a d-regular hypergraph.

    For a d-regular hypergraph L = d*I - A, so (lambda, x) is an eigenpair
    of A exactly when (d - lambda, x) is one of L; the all-ones vector is a
    positive eigenvector of A at d, which forces the spectral radius to be
    d. The component indicators are verified exactly as eigenvectors of the
    adjacency tensor at d, and maximality transfers from the null-space
    certification of geometry_connectivity. Raises NotRegular otherwise.
    """
    degree = is_regular(g)
    if degree is None:
        raise NotRegular("beta_rho is defined for regular hypergraphs only")
    report = geometry_connectivity(g, tol, perron_tol=perron_tol, max_iter=max_iter)
    adj = adjacency(g)
    certificates = tuple(
        verify_h_eigenpair(adj, degree, _indicator(g.n, part), tol)
        for part in report.decomposition.parts)
    return replace(report, certificates=certificates, spectral_radius=degree)


_SIGN_PATTERNS_4 = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))


def signed_null_vectors_demo(g: Hypergraph,
                             candidates: Sequence[Sequence[Number]] | None = None,
                             tol: float = DEFAULT_TOL) -> SignedNullVectorsDemo:
    """Contrast beta with the count of linearly independent signed null
    eigenvectors.

    Each candidate is checked as a 0-eigenvector of the Laplacian tensor;
    failures are listed as rejected rather than raising. With no explicit
    candidates and n = 4 the four sign patterns (1,1,1,1), (1,1,-1,-1),
    (1,-1,1,-1), (1,-1,-1,1) are used; on the single-edge 4-uniform
    hypergraph all four verify exactly while beta is 1.
    """
    if candidates is None:
        if g.n != 4:
            raise ValueError("default sign patterns need n=4; pass candidates explicitly")
        candidates = _SIGN_PATTERNS_4
    lap = laplacian(g)
    accepted: list[EigenpairCertificate] = []
    rejected: list[EigenpairCertificate] = []
    for candidate in candidates:
        certificate = verify_h_eigenpair(lap, 0, candidate, tol)
        (accepted if certificate.accepted else rejected).append(certificate)
    beta = geometry_connectivity(g, tol).beta
    return SignedNullVectorsDemo(tuple(accepted), tuple(rejected), beta)
