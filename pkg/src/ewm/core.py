"""General-case pipeline: assemble the three generator families, compute the
weight lattice and the dual-basis functionals, evaluate the 0/1 coefficients,
solve the third-family linear system, and run the simple-spherical-root
necessary/sufficient tests.

Index convention: simple roots are 0-based throughout this module; the CLI
translates to/from the 1-based labels used in input files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .chevalley import (
    AlgVec,
    ChevalleyAlgebra,
    commutes_with_all,
    ideal_closure,
    is_contained,
    root_vector,
)
from .errors import (
    AlphaNotInLambda,
    DataInconsistency,
    Inconsistent,
    MissingOmegaBar,
    NoExpression,
    NoLift,
    SupportClash,
    SupportOutsidePiL,
    UniquenessViolated,
)
from .intlin import (
    CharSpace,
    CharVec,
    IntMatrix,
    hnf_rows,
    in_sublattice,
    kernel_with_moduli,
    mat_vec,
    solve_with_moduli,
)
from .rootsys import RootSystem, WeightVec, is_dominant, root_to_weight, wsupp

__all__ = [
    "Biweight",
    "GeneralDatum",
    "MonoidResult",
    "Diagnostic",
    "NonUnique",
    "NecessaryReport",
    "compute_xi1",
    "lift_tau_L",
    "compute_xi2",
    "pi12",
    "xi12_at",
    "kernel_iota",
    "lambda_lattice",
    "mu_lift",
    "rho_value",
    "delta_coeff",
    "solve_xi3",
    "compute_monoid",
    "check_necessary",
    "check_sufficient_lie",
    "levi_kernel_helper",
]


@dataclass(frozen=True)
class Biweight:
    """A generator (lambda, chi) of the extended weight monoid."""

    lam: WeightVec
    chi: CharVec
    origin: str  # "Xi1" | "Xi2" | "Xi3"

    def __post_init__(self):
        assert is_dominant(self.lam), self.lam


@dataclass(frozen=True)
class GeneralDatum:
    rs: RootSystem
    pi_L: frozenset[int]
    char_space_K: CharSpace
    omega_bar: tuple[tuple[int, CharVec], ...]  # alpha index -> restriction
    codomain: CharSpace
    iota: IntMatrix  # codomain.dim x rank; column i = iota(pi_i)
    xi2_prime: tuple[tuple[WeightVec, CharVec], ...]
    xi3_prime: tuple[tuple[CharVec, Optional[WeightVec]], ...]
    sigma_simple: frozenset[int]
    unique_expected: bool = True

    @property
    def rank(self) -> int:
        return self.rs.rank

    def omega_bar_at(self, i: int) -> CharVec:
        for j, v in self.omega_bar:
            if j == i:
                return v
        raise MissingOmegaBar(f"no restriction supplied for fundamental weight {i + 1}")


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "info" | "warning" | "error"
    code: str
    message: str
    data: tuple[tuple[str, object], ...] = ()


@dataclass(frozen=True)
class NonUnique:
    """Per-module-weight solution families when the system is underdetermined."""

    entries: tuple[tuple[int, tuple[int, ...], tuple[tuple[int, ...], ...]], ...]
    # each entry: (mu index, particular coefficients over Xi12,
    #              homogeneous basis vectors over Xi12)
    xi12_size: int


@dataclass(frozen=True)
class NecessaryReport:
    alpha: int
    in_lambda: bool
    rho_values: Optional[tuple[int, ...]]
    passed: bool

    @property
    def classification(self) -> str:
        return "NecessaryPassed" if self.passed else "NecessaryFailed"


@dataclass(frozen=True)
class MonoidResult:
    generators: tuple[Biweight, ...]
    lambda_basis: tuple[tuple[int, ...], ...]
    sigma_used: tuple[int, ...]
    diagnostics: tuple[Diagnostic, ...]


def _fundamental(rank: int, i: int, coeff: int = 1) -> WeightVec:
    return WeightVec(tuple(coeff if j == i else 0 for j in range(rank)))


def compute_xi1(d: GeneralDatum) -> list[Biweight]:
    """First family: (pi_alpha, -restriction) for alpha outside the Levi."""
    out = []
    for i in sorted(set(range(d.rank)) - d.pi_L):
        out.append(Biweight(_fundamental(d.rank, i), -d.omega_bar_at(i), "Xi1"))
    return out


def lift_tau_L(d: GeneralDatum, lambda_L: WeightVec) -> WeightVec:
    """Lift a dominant weight of the Levi by placing the same coefficients at
    the matching fundamental weights of the big group (the inverse of the
    restriction isomorphism)."""
    if not wsupp(lambda_L) <= d.pi_L:
        raise SupportOutsidePiL(f"support {sorted(wsupp(lambda_L))} not inside Levi")
    return lambda_L


def compute_xi2(d: GeneralDatum) -> list[Biweight]:
    """Second family, transported from the Levi quotient."""
    out = []
    for lam_L, chi in d.xi2_prime:
        if wsupp(lam_L) & (set(range(d.rank)) - d.pi_L):
            raise SupportClash(f"second-family support meets the Levi complement")
        out.append(Biweight(lift_tau_L(d, lam_L), chi, "Xi2"))
    return out


def pi12(xi12: Sequence[Biweight]) -> set[int]:
    out: set[int] = set()
    for bw in xi12:
        out |= wsupp(bw.lam)
    return out


def xi12_at(xi12: Sequence[Biweight], alpha: int) -> list[Biweight]:
    return [bw for bw in xi12 if alpha in wsupp(bw.lam)]


def _mu_columns(d: GeneralDatum) -> IntMatrix:
    return IntMatrix.from_cols([mu.coords for mu, _ in d.xi3_prime])


def _codomain_moduli(d: GeneralDatum) -> list[int]:
    return [0] * d.codomain.free_rank + list(d.codomain.moduli)


def kernel_iota(d: GeneralDatum) -> list[tuple[int, ...]]:
    """Basis of Ker iota inside the weight lattice of T (pi-coordinates)."""
    return kernel_with_moduli(d.iota, _codomain_moduli(d))


def lambda_lattice(d: GeneralDatum) -> list[tuple[int, ...]]:
    """Basis of the preimage under iota of the span of the module weights."""
    if not d.xi3_prime:
        return kernel_iota(d)
    mu_cols = [mu.coords for mu, _ in d.xi3_prime]
    rows = []
    for i, r in enumerate(d.iota.entries):
        rows.append(tuple(r) + tuple(-col[i] for col in mu_cols))
    joint = IntMatrix.from_rows(rows)
    gens = [k[: d.rank] for k in kernel_with_moduli(joint, _codomain_moduli(d))]
    return hnf_rows(gens, d.rank)


def _iota_of_simple_root(d: GeneralDatum, alpha: int) -> tuple[int, ...]:
    w = root_to_weight(d.rs, _root_basis_vec(d.rank, alpha))
    return mat_vec(d.iota, w.coeffs)


def _root_basis_vec(rank: int, i: int):
    from .rootsys import RootVec

    return RootVec(tuple(1 if j == i else 0 for j in range(rank)))


def _rho_vector(d: GeneralDatum, alpha: int) -> tuple[int, ...]:
    """All functional values (rho_1(alpha), ..., rho_k(alpha)) at once."""
    lam = lambda_lattice(d)
    w = root_to_weight(d.rs, _root_basis_vec(d.rank, alpha))
    if not in_sublattice(w.coeffs, lam, [0] * d.rank):
        raise AlphaNotInLambda(f"simple root {alpha + 1} outside the weight lattice")
    target = _iota_of_simple_root(d, alpha)
    sol = solve_with_moduli(_mu_columns(d), _codomain_moduli(d), target)
    if sol is None:
        raise NoExpression(f"iota(alpha_{alpha + 1}) has no module-weight expression")
    particular, hom = sol
    if hom:
        raise NoExpression("module weights do not freely generate their span")
    return particular


def rho_value(d: GeneralDatum, mu_index: int, alpha: int) -> int:
    return _rho_vector(d, alpha)[mu_index]


def delta_coeff(d: GeneralDatum, mu_index: int, alpha: int) -> int:
    """The 0/1 coefficient prescribed for the third-family generators."""
    if alpha not in d.sigma_simple:
        return 0
    xi12 = compute_xi1(d) + compute_xi2(d)
    if len(xi12_at(xi12, alpha)) != 1:
        return 0
    return 1 if rho_value(d, mu_index, alpha) == 1 else 0


def mu_lift(d: GeneralDatum, mu_index: int) -> WeightVec:
    """A weight mapping to the given module weight under iota (user override
    wins; otherwise an integer solve)."""
    mu, override = d.xi3_prime[mu_index]
    if override is not None:
        got = mat_vec(d.iota, override.coeffs)
        if d.codomain.reduce(got) != mu.coords:
            raise NoLift(f"supplied lift for module weight {mu_index} is not a lift")
        return override
    sol = solve_with_moduli(d.iota, _codomain_moduli(d), mu.coords)
    if sol is None:
        raise NoLift(f"module weight {mu_index} outside the image of iota")
    return WeightVec(sol[0])


def solve_xi3(d: GeneralDatum) -> Union[list[Biweight], NonUnique]:
    """Third family via the linear system: for each module weight mu, the
    coefficient of its generator at each fundamental weight in Pi12 is the
    prescribed 0/1 value."""
    if not d.xi3_prime:
        return []
    xi12 = compute_xi1(d) + compute_xi2(d)
    p12 = sorted(pi12(xi12))
    nonunique_entries = []
    out: list[Biweight] = []
    for mu_index in range(len(d.xi3_prime)):
        lift = mu_lift(d, mu_index)
        rows = [[bw.lam.coeffs[a] for bw in xi12] for a in p12]
        rhs = [delta_coeff(d, mu_index, a) - lift.coeffs[a] for a in p12]
        sol = solve_with_moduli(IntMatrix.from_rows(rows), [0] * len(p12), rhs)
        if sol is None:
            raise Inconsistent(
                f"no integer solution for module weight {mu_index}: input data "
                "contradicts the generation theorem"
            )
        particular, hom = sol
        if hom:
            if d.unique_expected:
                raise UniquenessViolated(
                    f"solution family for module weight {mu_index} is "
                    "positive-dimensional"
                )
            nonunique_entries.append(
                (mu_index, tuple(particular), tuple(tuple(h) for h in hom))
            )
            continue
        lam = lift
        chi = d.char_space_K.zero()
        for a, bw in zip(particular, xi12):
            lam = lam + bw.lam.scale(a)
            chi = chi + bw.chi.scale(a)
        assert is_dominant(lam), lam
        for a in p12:
            assert lam.coeffs[a] == delta_coeff(d, mu_index, a)
        out.append(Biweight(lam, chi, "Xi3"))
    if nonunique_entries:
        return NonUnique(entries=tuple(nonunique_entries), xi12_size=len(xi12))
    return out


def _necessary_diagnostics(d: GeneralDatum, xi12: Sequence[Biweight]) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    if not d.xi3_prime:
        return diags
    p12 = pi12(xi12)
    for a in sorted(p12):
        if len(xi12_at(xi12, a)) != 1:
            continue
        report = check_necessary(d, a)
        if report.passed and a not in d.sigma_simple:
            diags.append(
                Diagnostic(
                    severity="info",
                    code="NECESSARY_PASSED_NOT_IN_SIGMA",
                    message=(
                        f"alpha_{a + 1} passes all necessary conditions for a "
                        "simple spherical root but is not asserted to be one"
                    ),
                    data=(("alpha", a + 1),),
                )
            )
        if not report.passed and a in d.sigma_simple:
            raise DataInconsistency(
                f"alpha_{a + 1} is asserted to be a simple spherical root but "
                "fails a necessary condition"
            )
    return diags


def lift_shift(d: GeneralDatum, kernel_vec: Sequence[int]):
    """Effect on a third-family generator of replacing a lift by lift + k for
    a kernel element k: the pair (lambda shift, chi shift), or None when the
    perturbed system has no solution (that lift choice is simply invalid).

    The prescribed coefficients pin the generator only on the coupled simple
    roots, so the shift is the same for every module weight."""
    xi12 = compute_xi1(d) + compute_xi2(d)
    p12 = sorted(pi12(xi12))
    rows = [[bw.lam.coeffs[a] for bw in xi12] for a in p12]
    rhs = [-kernel_vec[a] for a in p12]
    sol = solve_with_moduli(IntMatrix.from_rows(rows), [0] * len(p12), rhs)
    if sol is None:
        return None
    delta_a = sol[0]
    lam = WeightVec(tuple(kernel_vec))
    chi = d.char_space_K.zero()
    for a, bw in zip(delta_a, xi12):
        lam = lam + bw.lam.scale(a)
        chi = chi + bw.chi.scale(a)
    return lam, chi


def _lift_sensitivity_diagnostics(d: GeneralDatum) -> list[Diagnostic]:
    """Perturbation self-check: the computed third family should not depend on
    which lift was chosen for each module weight.  Flag any kernel direction
    along which it does."""
    diags: list[Diagnostic] = []
    if not d.xi3_prime:
        return diags
    for k in kernel_iota(d):
        shift = lift_shift(d, k)
        if shift is None:
            continue
        lam, chi = shift
        if any(lam.coeffs) or not chi.is_zero():
            diags.append(
                Diagnostic(
                    severity="warning",
                    code="LIFT_SENSITIVE",
                    message=(
                        "third-family characters depend on the chosen lifts "
                        "of the module weights; the supplied lifts are "
                        "treated as part of the input"
                    ),
                    data=(
                        ("kernel_vector", list(k)),
                        ("lambda_shift", list(lam.coeffs)),
                        ("chi_shift", list(chi.coords)),
                    ),
                )
            )
    return diags


def compute_monoid(d: GeneralDatum) -> MonoidResult:
    """The full generator list, the weight lattice, and diagnostics."""
    xi1 = compute_xi1(d)
    xi2 = compute_xi2(d)
    diagnostics = _necessary_diagnostics(d, xi1 + xi2)
    diagnostics += _lift_sensitivity_diagnostics(d)
    xi3 = solve_xi3(d)
    if isinstance(xi3, NonUnique):
        raise UniquenessViolated(
            "compute_monoid requires a unique third family; use solve_xi3 for "
            "the non-unique report"
        )
    generators = tuple(xi1 + xi2 + xi3)
    expected = (d.rank - len(d.pi_L)) + len(d.xi2_prime) + len(d.xi3_prime)
    assert len(generators) == expected, (len(generators), expected)
    return MonoidResult(
        generators=generators,
        lambda_basis=tuple(lambda_lattice(d)),
        sigma_used=tuple(sorted(d.sigma_simple)),
        diagnostics=tuple(diagnostics),
    )


def check_necessary(d: GeneralDatum, alpha: int) -> NecessaryReport:
    """Necessary conditions for alpha to be a simple spherical root: alpha in
    the weight lattice, and exactly one functional takes value 1 on it with
    every other value at most 0."""
    try:
        rho = _rho_vector(d, alpha)
    except AlphaNotInLambda:
        return NecessaryReport(alpha=alpha, in_lambda=False, rho_values=None, passed=False)
    ones = sum(1 for v in rho if v == 1)
    others_ok = all(v <= 0 for v in rho if v != 1)
    passed = ones == 1 and others_ok
    return NecessaryReport(alpha=alpha, in_lambda=True, rho_values=tuple(rho), passed=passed)


def check_sufficient_lie(
    alg: ChevalleyAlgebra,
    alpha: int,
    p_u_basis: Sequence[AlgVec],
    h_u_basis: Sequence[AlgVec],
    s_prime_gens: Sequence[AlgVec],
) -> str:
    """Sufficient test at the Lie-algebra level.

    Returns "NotSpherical" when the ideal generated by the lowered simple root
    vector sits inside h_u, "Spherical" when it does not and the root vector
    commutes with the given semisimple-part generators, else "Inconclusive".
    The caller is responsible for supplying data for a generic conjugate.
    """
    rank = alg.rs.rank
    e_neg = root_vector(alg, tuple(-1 if j == alpha else 0 for j in range(rank)))
    ideal = ideal_closure(alg, [e_neg], p_u_basis)
    if is_contained(alg, ideal, h_u_basis):
        return "NotSpherical"
    if commutes_with_all(alg, e_neg, s_prime_gens):
        return "Spherical"
    return "Inconclusive"


def levi_kernel_helper(
    d: GeneralDatum, lambda_L_basis: Sequence[WeightVec]
) -> tuple[set[int], list[tuple[int, ...]]]:
    """The sub-Levi orthogonal to a character basis, and the common kernel of
    those characters in the cocharacter lattice (simple-coroot coordinates)."""
    from .rootsys import inner

    pi_M = set()
    for a in sorted(d.pi_L):
        alpha_w = root_to_weight(d.rs, _root_basis_vec(d.rank, a))
        if all(inner(d.rs, alpha_w, lam) == 0 for lam in lambda_L_basis):
            pi_M.add(a)
    if not lambda_L_basis:
        return pi_M, [
            tuple(1 if j == i else 0 for j in range(d.rank)) for i in range(d.rank)
        ]
    A = IntMatrix.from_rows([lam.coeffs for lam in lambda_L_basis])
    return pi_M, kernel_with_moduli(A, [0] * len(lambda_L_basis))
