"""Arithmetic functions used on the closed-form side of the cyclic-group identities."""

from functools import lru_cache
from math import gcd

from sympy import divisor_count, divisor_sigma, divisors as _divisors, isprime, totient

INFINITE = float("inf")


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(int(d) for d in _divisors(n))


def sigma(n: int) -> int:
    return int(divisor_sigma(n))


def phi(n: int) -> int:
    return int(totient(n))


def tau(n: int) -> int:
    return int(divisor_count(n))


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def occ_integers(m: int):
    """Number of subgroups of the additive integers containing ``m``.

    Returns ``INFINITE`` for ``m == 0``.
    """
    return INFINITE if m == 0 else tau(abs(m))


def gcd_divisor_sum(n: int, k: int) -> int:
    return sum(gcd(k, d) for d in divisors(n))


@lru_cache(maxsize=None)
def phi_t_sum(m: int) -> int:
    """Sum of phi(t) * t over the divisors t of m."""
    return sum(phi(t) * t for t in divisors(m))


def order_weighted_divisor_sum(n: int, k: int) -> int:
    return sum(phi_t_sum(gcd(k, d)) for d in divisors(n))
