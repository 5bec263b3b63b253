"""The classic (k = 2) integer specializations.

Everything here is plain integer arithmetic: the classic third-order
Jacobsthal numbers, the modified companion sequence with seeds 3, 1, 3,
the 3-periodic residue sequences Z and Y that encode the oscillating part
of their closed forms, and the stride-r multiply-index recurrence.
"""

from __future__ import annotations

from .rings import ConsistencyError, DomainError

_Z_TABLE = (2, -3, 1)


def Z(n: int) -> int:
    """3-periodic: 2, -3, 1 according to n mod 3 (mathematical mod, any sign)."""
    return _Z_TABLE[n % 3]


def Y(n: int) -> int:
    """3-periodic: 2 when n is divisible by 3, else -1."""
    return 2 if n % 3 == 0 else -1


def jac3_classic(n: int) -> int:
    """Classic third-order Jacobsthal number (2^(n+1) - Z(n)) / 7, n >= 0."""
    if n < 0:
        raise DomainError("classic closed form requires n >= 0")
    num = 2 ** (n + 1) - Z(n)
    q, r = divmod(num, 7)
    if r:  # cannot happen: 2^(n+1) == Z(n) (mod 7) for every n
        raise ConsistencyError(f"2^{n + 1} - Z({n}) is not divisible by 7")
    return q


def modified_lucas_classic(n: int) -> int:
    """Modified third-order Jacobsthal number 2^n + Y(n), n >= 0."""
    if n < 0:
        raise DomainError("classic closed form requires n >= 0")
    return 2 ** n + Y(n)


def modified_lucas_recurrence(n: int) -> int:
    """Same sequence through the recurrence with seeds 3, 1, 3.

    Kept as an independent route; the identity suite checks it against the
    closed form.
    """
    if n < 0:
        raise DomainError("recurrence route requires n >= 0")
    u0, u1, u2 = 3, 1, 3
    for _ in range(n):
        u0, u1, u2 = u1, u2, u2 + u1 + 2 * u0
    return u0


def jac3_multi_index(r: int, n: int) -> int:
    """J(r*n) via the order-3 recurrence on the stride-r subsequence.

    Seeds are J(0), J(r), J(2r); the recurrence is
    S(m+3) = K(r)*S(m+2) - (2^r*Y(r) + 1)*S(m+1) + 2^r*S(m).
    Stride 0 would make every term J(0), so r >= 1 is required.
    """
    if r < 1:
        raise DomainError("stride r must be >= 1")
    if n < 0:
        raise DomainError("multiply-index recurrence requires n >= 0")
    u0, u1, u2 = jac3_classic(0), jac3_classic(r), jac3_classic(2 * r)
    a = modified_lucas_classic(r)
    b = 2 ** r * Y(r) + 1
    c = 2 ** r
    for _ in range(n):
        u0, u1, u2 = u1, u2, a * u2 - b * u1 + c * u0
    return u0
