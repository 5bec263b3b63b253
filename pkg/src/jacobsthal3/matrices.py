"""The four 3x3 matrix families built on the scalar sequences.

* M(k, n) and N(k, n): matrix-valued terms of the order-3 recurrence
  X(n+3) = (k-1)X(n+2) + (k-1)X(n+1) + k*X(n) from explicit seed matrices.
* J_power(k, n) = G^n and j_power(k, n) = N(k, 0) * G^n for any integer n,
  where G = M(k, 1) is the invertible generator (det G = k).
* assemble_*_closed_form: the same matrices rebuilt entry-by-entry from
  scalar sequence terms, giving an independent route for testing.

Results are cached per (k, n); everything is immutable so sharing is safe.
"""

from __future__ import annotations

from functools import lru_cache

from .matrix3 import Matrix3
from .rings import ConsistencyError, DomainError, Scalar, scalar_inverse
from .sequences import KValue, T_term, jac3_term, lucas3_term, t_term


@lru_cache(maxsize=None)
def generator(k: KValue) -> Matrix3:
    """The companion matrix M(k, 1) whose powers carry the J sequence."""
    kk = k.k()
    one = k.scalar(1)
    zero = k.scalar(0)
    return Matrix3(((kk - 1, kk - 1, kk), (one, zero, zero), (zero, one, zero)))


def _m_seeds(k: KValue) -> tuple[Matrix3, Matrix3, Matrix3]:
    kk = k.k()
    one = k.scalar(1)
    zero = k.scalar(0)
    m1 = generator(k)
    m2 = Matrix3(
        (
            (kk * kk - kk, kk * kk - kk + 1, kk * kk - kk),
            (kk - 1, kk - 1, kk),
            (one, zero, zero),
        )
    )
    return Matrix3.identity_like(m1), m1, m2


def _n_seeds(k: KValue) -> tuple[Matrix3, Matrix3, Matrix3]:
    kk = k.k()
    inv_k = scalar_inverse(kk)
    two = k.scalar(2)
    n0 = Matrix3(
        (
            (kk - 1, 2 * kk, 2 * kk),
            (two, 1 - kk, two),
            (2 * inv_k, 2 * inv_k, -(kk * kk + kk - 2) * inv_k),
        )
    )
    n1 = Matrix3(
        (
            (kk * kk + 1, kk * kk + 1, kk * kk - kk),
            (kk - 1, 2 * kk, 2 * kk),
            (two, 1 - kk, two),
        )
    )
    n2 = Matrix3(
        (
            (kk ** 3 + kk, kk ** 3 - 1, kk ** 3 + kk),
            (kk * kk + 1, kk * kk + 1, kk * kk - kk),
            (kk - 1, 2 * kk, 2 * kk),
        )
    )
    return n0, n1, n2


def _recurrence_matrix(k: KValue, n: int, seeds: tuple[Matrix3, Matrix3, Matrix3]) -> Matrix3:
    if n < 0:
        raise DomainError("matrix recurrence terms are defined for n >= 0")
    kk = k.k()
    km1 = kk - 1
    u0, u1, u2 = seeds
    for _ in range(n):
        u0, u1, u2 = u1, u2, u2 * km1 + u1 * km1 + u0 * kk
    return u0


@lru_cache(maxsize=None)
def M_matrix(k: KValue, n: int) -> Matrix3:
    """n-th term of the k-Jacobsthal matrix recurrence, n >= 0."""
    return _recurrence_matrix(k, n, _m_seeds(k))


@lru_cache(maxsize=None)
def N_matrix(k: KValue, n: int) -> Matrix3:
    """n-th term of the k-Jacobsthal-Lucas matrix recurrence, n >= 0."""
    return _recurrence_matrix(k, n, _n_seeds(k))


@lru_cache(maxsize=None)
def J_power(k: KValue, n: int) -> Matrix3:
    """Generator power G^n for any integer n (G is always invertible)."""
    return generator(k) ** n


@lru_cache(maxsize=None)
def j_power(k: KValue, n: int) -> Matrix3:
    """N(k, 0) * G^n for any integer n."""
    return N_matrix(k, 0) * J_power(k, n)


def assemble_J_closed_form(k: KValue, n: int) -> Matrix3:
    """G^n rebuilt from scalar terms: rows [J(i+1), T(i-1), k*J(i)] for i = n, n-1, n-2."""
    kk = k.k()
    return Matrix3(
        tuple(
            (jac3_term(k, i + 1), T_term(k, i - 1), kk * jac3_term(k, i))
            for i in (n, n - 1, n - 2)
        )
    )


def assemble_j_closed_form(k: KValue, n: int) -> Matrix3:
    """Same layout with Lucas-side scalars j and t."""
    kk = k.k()
    return Matrix3(
        tuple(
            (lucas3_term(k, i + 1), t_term(k, i - 1), kk * lucas3_term(k, i))
            for i in (n, n - 1, n - 2)
        )
    )


def det_J(k: KValue, n: int) -> Scalar:
    """det(G^n) = k^n, self-checked against the cofactor determinant."""
    expected = k.k_power(n)
    if J_power(k, n).det() != expected:
        raise ConsistencyError(f"det(J_power) != k^{n}")
    return expected


def det_j(k: KValue, n: int) -> Scalar:
    """det(N(k,0) * G^n) = (k+1)^2 (k^2+k+2) k^(n-1), self-checked likewise."""
    kk = k.k()
    expected = (kk + 1) * (kk + 1) * (kk * kk + kk + 2) * k.k_power(n - 1)
    if j_power(k, n).det() != expected:
        raise ConsistencyError(f"det(j_power) mismatch at n={n}")
    return expected


def characteristic_residual(k: KValue) -> Matrix3:
    """G^3 - (k-1)G^2 - (k-1)G - kI, which must be the zero matrix.

    This single relation is what makes N(k, 0) a polynomial in G and hence
    makes every matrix in sight commute.
    """
    g = generator(k)
    kk = k.k()
    km1 = kk - 1
    ident = Matrix3.identity_like(g)
    return g * g * g - g * g * km1 - g * km1 - ident * kk


_MATRIX_FAMILIES = {"M": M_matrix, "N": N_matrix, "Jmat": J_power, "jmat": j_power}


def matrix_term(family: str, k: KValue, n: int) -> Matrix3:
    """Dispatch by family name: M, N (n >= 0) or Jmat, jmat (any integer n)."""
    try:
        fn = _MATRIX_FAMILIES[family]
    except KeyError:
        raise DomainError(f"unknown matrix family: {family!r}") from None
    return fn(k, n)
