"""Closed-form adjacency and distance spectra.

Base families first (Johnson, Hamming, cycles, complete graphs), then the
distance spectra of K_n (x) G for G a cycle, a complete graph, a Johnson
graph or a Hamming graph.  Every product spectrum is assembled from the
block-circulant reduction of the product's distance matrix: one
distinguished block H_0 plus n-1 copies of a common repeated block, so
full multiplicities come out of the construction rather than being quoted.

Integer-valued spectra are computed in exact integer arithmetic and carry
grouping tolerance 0; the cycle products are trigonometric and grouped at
1e-6.

Validity domains are enforced strictly.  Three of them are narrower than a
naive reading suggests, each pinned by the brute-force oracle:

* K_n (x) K_m needs BOTH n, m >= 3 (a K_2 factor puts same-position pairs
  at distance 3, not 2);
* K_n (x) C_len needs n >= 3 and len >= 4, with len == 3 handled as
  K_n (x) K_3 since C_3 is K_3;
* K_n (x) H(d, q) needs q >= 3: for q = 2 the Hamming factor is bipartite,
  adjacent factor pairs sit at product distance 3, and the formula's
  diagonal blocks are wrong (H(2,2) is the 4-cycle and is served by the
  even-cycle form instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .circulant import cycle_adjacency_eigenvalues, cycle_combo_eigenvalues
from .errors import FamilyDomainError
from .spectrum import Spectrum, spectrum_from_values

__all__ = [
    "IntersectionArray",
    "IntegralityReport",
    "johnson_intersection",
    "hamming_intersection",
    "johnson_adjacency_eigenvalues",
    "johnson_adjacency_multiplicities",
    "johnson_adjacency_spectrum",
    "johnson_distance_total",
    "johnson_distance_spectrum",
    "hamming_adjacency_eigenvalues",
    "hamming_adjacency_multiplicities",
    "hamming_adjacency_spectrum",
    "hamming_distance_spectrum",
    "complete_adjacency_spectrum",
    "complete_distance_spectrum",
    "cycle_adjacency_spectrum",
    "cycle_distance_spectrum",
    "kron_cycle_even_spectrum",
    "kron_cycle_odd_spectrum",
    "kron_complete_spectrum",
    "kron_johnson_spectrum",
    "kron_hamming_spectrum",
    "check_integrality",
]


@dataclass(frozen=True)
class IntersectionArray:
    """Intersection numbers of a distance-regular graph: b_0..b_{d-1}, c_1..c_d."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    diameter: int

    def __post_init__(self):
        if self.diameter < 1:
            raise ValueError("diameter must be positive")
        if len(self.b) != self.diameter or len(self.c) != self.diameter:
            raise ValueError("b and c must each have length equal to the diameter")
        if self.b[0] <= 0 or self.c[0] < 1:
            raise ValueError("need b_0 > 0 and c_1 >= 1")


def _check_johnson(m: int, r: int) -> None:
    if not (m >= 2 * r >= 2):
        raise FamilyDomainError(f"Johnson needs m >= 2r >= 2, got m={m}, r={r}")


def _check_hamming(d: int, q: int) -> None:
    if d < 1 or q < 2:
        raise FamilyDomainError(f"Hamming needs d >= 1 and q >= 2, got d={d}, q={q}")


def johnson_intersection(m: int, r: int) -> IntersectionArray:
    """J(m, r): c_i = i^2, b_i = (r-i)(m-r-i), diameter r."""
    _check_johnson(m, r)
    b = tuple((r - i) * (m - r - i) for i in range(r))
    c = tuple(i * i for i in range(1, r + 1))
    return IntersectionArray(b, c, r)


def hamming_intersection(d: int, q: int) -> IntersectionArray:
    """H(d, q): c_i = i, b_i = (d-i)(q-1), diameter d."""
    _check_hamming(d, q)
    b = tuple((d - i) * (q - 1) for i in range(d))
    c = tuple(range(1, d + 1))
    return IntersectionArray(b, c, d)


# ---------------------------------------------------------------------------
# Base families
# ---------------------------------------------------------------------------

def johnson_adjacency_eigenvalues(m: int, r: int) -> list[int]:
    """lambda_i = (r-i)(m-r-i) - i for i = 0..r (strictly decreasing)."""
    _check_johnson(m, r)
    return [(r - i) * (m - r - i) - i for i in range(r + 1)]


def johnson_adjacency_multiplicities(m: int, r: int) -> list[int]:
    """C(m, i) - C(m, i-1) for i = 0..r."""
    _check_johnson(m, r)
    return [comb(m, i) - comb(m, i - 1) if i else 1 for i in range(r + 1)]


def johnson_adjacency_spectrum(m: int, r: int) -> Spectrum:
    return Spectrum.from_pairs(
        zip(johnson_adjacency_eigenvalues(m, r), johnson_adjacency_multiplicities(m, r))
    )


def johnson_distance_total(m: int, r: int) -> int:
    """s = sum_j j * C(r, j) * C(m-r, j): the distance row sum of J(m, r).

    k_j = C(r, j) * C(m-r, j) counts vertices at distance j from a fixed
    vertex, so s is also the Perron distance eigenvalue.
    """
    _check_johnson(m, r)
    return sum(j * comb(r, j) * comb(m - r, j) for j in range(r + 1))


def johnson_distance_spectrum(m: int, r: int) -> Spectrum:
    """Distance spectrum of J(m, r): {s, -s/(m-1), 0} with multiplicities
    1, m-1 and C(m, r) - m.

    s/(m-1) = C(m-2, r-1) exactly, so all values are integers; the zero
    class is empty when C(m, r) == m (r = 1).
    """
    s = johnson_distance_total(m, r)
    if s % (m - 1):
        raise ArithmeticError(f"s={s} not divisible by m-1={m - 1}")
    pairs = {s: 1, -(s // (m - 1)): m - 1}
    zero_mult = comb(m, r) - m
    if zero_mult:
        pairs[0] = pairs.get(0, 0) + zero_mult
    return Spectrum.from_pairs(pairs)


def hamming_adjacency_eigenvalues(d: int, q: int) -> list[int]:
    """lambda_i = d(q-1) - q*i for i = 0..d."""
    _check_hamming(d, q)
    return [d * (q - 1) - q * i for i in range(d + 1)]


def hamming_adjacency_multiplicities(d: int, q: int) -> list[int]:
    """C(d, i) * (q-1)^i for i = 0..d."""
    _check_hamming(d, q)
    return [comb(d, i) * (q - 1) ** i for i in range(d + 1)]


def hamming_adjacency_spectrum(d: int, q: int) -> Spectrum:
    return Spectrum.from_pairs(
        zip(hamming_adjacency_eigenvalues(d, q), hamming_adjacency_multiplicities(d, q))
    )


def hamming_distance_spectrum(d: int, q: int) -> Spectrum:
    """Distance spectrum of H(d, q): {d*q^(d-1)*(q-1), -q^(d-1), 0} with
    multiplicities 1, d(q-1) and q^d - d(q-1) - 1."""
    _check_hamming(d, q)
    t = d * q ** (d - 1) * (q - 1)
    pairs = {t: 1, -(q ** (d - 1)): d * (q - 1)}
    zero_mult = q ** d - d * (q - 1) - 1
    if zero_mult:
        pairs[0] = pairs.get(0, 0) + zero_mult
    return Spectrum.from_pairs(pairs)


def complete_adjacency_spectrum(n: int) -> Spectrum:
    if n < 1:
        raise FamilyDomainError(f"complete graph needs n >= 1, got {n}")
    if n == 1:
        return Spectrum.from_pairs({0: 1})
    return Spectrum.from_pairs({n - 1: 1, -1: n - 1})


def complete_distance_spectrum(n: int) -> Spectrum:
    # D(K_n) = J - I: same spectrum as the adjacency matrix.
    return complete_adjacency_spectrum(n)


def cycle_adjacency_spectrum(n: int, group_tol: float = 1e-6) -> Spectrum:
    return spectrum_from_values(cycle_adjacency_eigenvalues(n), group_tol)


def cycle_distance_spectrum(n: int, group_tol: float = 1e-6) -> Spectrum:
    return spectrum_from_values(cycle_combo_eigenvalues(n, 0.0, 1.0), group_tol)


# ---------------------------------------------------------------------------
# Kronecker products with a complete graph
# ---------------------------------------------------------------------------

def _check_left_complete(n: int) -> None:
    if n < 3:
        raise FamilyDomainError(
            f"product closed forms need a complete factor K_n with n >= 3, got n={n};"
            " with n = 2 the off-diagonal distance blocks are wrong"
            " (no third block to route distance-2 detours through)"
        )


def kron_cycle_even_spectrum(n: int, m: int, group_tol: float = 1e-6) -> Spectrum:
    """Distance spectrum of K_n (x) C_{2m} for n >= 3, m >= 2.

    Blocks of the product distance matrix: diagonal 2A + D, off-diagonal
    2I + D over the cycle's own A and D.  Reduction gives one block
    2(n-1)I + nD + 2A and n-1 copies of 2(A - I); eigenvalues come from
    the cycle closed forms.  The repeated block contributes
    4*cos(pi*r/m) - 2 for r = 0..2m-1: the r = 0 value 2 is included,
    which the multiplicity count and the zero-trace identity both require.
    """
    _check_left_complete(n)
    if m < 2:
        raise FamilyDomainError(f"even cycle factor needs length >= 4, got {2 * m}")
    length = 2 * m
    values = list(2.0 * (n - 1) + cycle_combo_eigenvalues(length, 2.0, float(n)))
    repeated = list(2.0 * cycle_adjacency_eigenvalues(length) - 2.0)
    values.extend(repeated * (n - 1))
    return spectrum_from_values(values, group_tol)


def kron_cycle_odd_spectrum(n: int, m: int, group_tol: float = 1e-6) -> Spectrum:
    """Distance spectrum of K_n (x) C_{2m+1} for n >= 3, m >= 2.

    Same block shapes as the even case.  The distinguished block has 2m+1
    eigenvalues: the top value 2(n+1) + n(m^2+m), the secant family for
    p = 1..m (not m-1: stopping early loses one eigenvalue) and the
    cosecant family for q = 1..m.  Length 3 is rejected here: C_3 is K_3
    and same-block adjacent pairs then sit at distance 2, not 3, so the
    complete-graph form applies instead.
    """
    _check_left_complete(n)
    if m < 2:
        raise FamilyDomainError(
            f"odd cycle factor needs length >= 5, got {2 * m + 1}; "
            "length 3 is the complete graph K_3 (use the complete-product form)"
        )
    length = 2 * m + 1
    values = list(2.0 * (n - 1) + cycle_combo_eigenvalues(length, 2.0, float(n)))
    repeated = list(2.0 * cycle_adjacency_eigenvalues(length) - 2.0)
    values.extend(repeated * (n - 1))
    return spectrum_from_values(values, group_tol)


def kron_complete_spectrum(n: int, m: int) -> Spectrum:
    """Distance spectrum of K_n (x) K_m for n, m >= 3:
    {mn+m+n-3: 1, n-3: m-1, m-3: n-1, -3: (n-1)(m-1)}."""
    _check_left_complete(n)
    if m < 3:
        raise FamilyDomainError(
            f"complete-product form needs both factors >= 3, got m={m}; "
            "with a K_2 factor same-position pairs sit at distance 3, not 2"
        )
    pairs: dict[int, int] = {}
    for value, mult in (
        (m * n + m + n - 3, 1),
        (n - 3, m - 1),
        (m - 3, n - 1),
        (-3, (n - 1) * (m - 1)),
    ):
        pairs[value] = pairs.get(value, 0) + mult
    return Spectrum.from_pairs(pairs)


def kron_johnson_spectrum(n: int, m: int, r: int) -> Spectrum:
    """Distance spectrum of K_n (x) J(m, r) for n >= 3, C(m, r) > 2.

    Distinguished block 2(n-1)I + nD + A evaluated on the Johnson
    adjacency eigenvalues lambda_i:
        2n - 2 + n*s + lambda_0            (multiplicity 1)
        2n - 2 - n*s/(m-1) + lambda_1      (multiplicity m-1)
        2n - 2 + lambda_i                  (i >= 2, adjacency multiplicity)
    plus n-1 copies of the repeated block A - 2I.  All values are exact
    integers, so the family is distance integral.
    """
    _check_left_complete(n)
    _check_johnson(m, r)
    if comb(m, r) <= 2:
        raise FamilyDomainError(
            "J(2,1) is K_2; the product closed form needs a factor with more"
            " than two vertices (adjacent pairs must have a common neighbor)"
        )
    lam = johnson_adjacency_eigenvalues(m, r)
    mult = johnson_adjacency_multiplicities(m, r)
    s = johnson_distance_total(m, r)
    mu1 = -(s // (m - 1))
    pairs: dict[int, int] = {}

    def add(value: int, count: int) -> None:
        pairs[value] = pairs.get(value, 0) + count

    add(2 * n - 2 + n * s + lam[0], mult[0])
    add(2 * n - 2 + n * mu1 + lam[1], mult[1])
    for i in range(2, r + 1):
        add(2 * n - 2 + lam[i], mult[i])
    for value, count in zip(lam, mult):
        add(value - 2, count * (n - 1))
    return Spectrum.from_pairs(pairs)


def kron_hamming_spectrum(n: int, d: int, q: int) -> Spectrum:
    """Distance spectrum of K_n (x) H(d, q) for n >= 3, q >= 3.

    Distinguished block 2(n-1)I + nD + A on the Hamming adjacency
    eigenvalues lambda_i:
        2n - 2 + n*t + lambda_0            (t = d*q^(d-1)*(q-1), mult 1)
        2n - 2 - n*q^(d-1) + lambda_1      (multiplicity d(q-1))
        2n - 2 + lambda_i                  (i >= 2, adjacency multiplicity)
    plus n-1 copies of A - 2I.  The factor n on q^(d-1) is required: the
    variant without it fails the zero-trace identity and the oracle.
    q = 2 is rejected: the hypercube factor is bipartite and the diagonal
    distance blocks differ (H(2,2) is the 4-cycle; use the even-cycle form).
    """
    _check_left_complete(n)
    _check_hamming(d, q)
    if q < 3:
        raise FamilyDomainError(
            "hamming factor with q = 2 is bipartite: adjacent factor pairs sit"
            " at product distance 3, not 2, so this closed form does not apply"
            " (H(2,2) is the 4-cycle; use the even-cycle product form)"
        )
    lam = hamming_adjacency_eigenvalues(d, q)
    mult = hamming_adjacency_multiplicities(d, q)
    t = d * q ** (d - 1) * (q - 1)
    pairs: dict[int, int] = {}

    def add(value: int, count: int) -> None:
        pairs[value] = pairs.get(value, 0) + count

    add(2 * n - 2 + n * t + lam[0], mult[0])
    add(2 * n - 2 - n * q ** (d - 1) + lam[1], mult[1])
    for i in range(2, d + 1):
        add(2 * n - 2 + lam[i], mult[i])
    for value, count in zip(lam, mult):
        add(value - 2, count * (n - 1))
    return Spectrum.from_pairs(pairs)


# ---------------------------------------------------------------------------
# Integrality certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegralityReport:
    is_integral: bool
    worst_deviation: float
    offending_values: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "is_integral": self.is_integral,
            "worst_deviation": self.worst_deviation,
            "offending_values": list(self.offending_values),
        }


def check_integrality(sp: Spectrum, tol: float = 1e-6) -> IntegralityReport:
    """Distance of each eigenvalue from the nearest integer."""
    worst = 0.0
    offending: list[float] = []
    for value, _ in sp.pairs:
        dev = abs(value - round(value))
        worst = max(worst, dev)
        if dev > tol:
            offending.append(value)
    return IntegralityReport(worst <= tol, worst, tuple(offending))
