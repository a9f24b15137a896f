"""Prime sets and π-parts of integers."""

from typing import Iterable

from sympy import factorint, isprime, multiplicity, primefactors


class PrimeTools:
    """Number-theoretic helpers for π(n), p-parts and π-numbers."""

    @staticmethod
    def prime_set(n: int) -> frozenset[int]:
        """
        π(n), the set of prime divisors of n.

        Examples:
            >>> sorted(PrimeTools.prime_set(60))
            [2, 3, 5]
            >>> PrimeTools.prime_set(1)
            frozenset()
        """
        if n < 1:
            raise ValueError(f"prime_set needs a positive integer, got {n}")
        return frozenset(int(p) for p in primefactors(n))

    @staticmethod
    def factorize(n: int) -> dict[int, int]:
        """Prime factorisation as {p: exponent}."""
        return {int(p): int(e) for p, e in factorint(n).items()}

    @staticmethod
    def p_part(n: int, p: int) -> int:
        """Largest power of p dividing n."""
        return p ** int(multiplicity(p, n)) if n % p == 0 else 1

    @staticmethod
    def pi_part(n: int, primes: Iterable[int]) -> int:
        """Product of the p-parts of n over the given primes."""
        out = 1
        for p in set(primes):
            out *= PrimeTools.p_part(n, p)
        return out

    @staticmethod
    def is_pi_number(n: int, primes: Iterable[int]) -> bool:
        """True if every prime divisor of n lies in ``primes``."""
        return PrimeTools.prime_set(n) <= frozenset(primes)

    @staticmethod
    def is_prime(n: int) -> bool:
        return bool(isprime(n))
