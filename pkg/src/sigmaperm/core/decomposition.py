"""Splitting elements and generating sets into σ_i-components."""

import logging
from typing import Iterable

from ..errors import InvariantViolation, PartitionError, PreconditionError
from ..models.partition import Block, Partition
from ..models.permutation import Permutation
from ..models.sigma_generators import SigmaGenerators
from ..utils.primes import PrimeTools
from .stab_chain import PermGroup


logger = logging.getLogger(__name__)


def _component_exponent(order: int, primes: Iterable[int]) -> int:
    """Exponent e with x^e the π-component of an element of the given order.

    e ≡ 1 modulo the π-part of ``order`` and e ≡ 0 modulo the rest, so the
    components over a partition multiply back to x.
    """
    part = PrimeTools.pi_part(order, primes)
    if part == 1:
        return 0
    rest = order // part
    return rest * pow(rest, -1, part) % order


def decompose_element(s: Permutation, sigma: Partition) -> dict[Block, Permutation]:
    """
    The σ_i-components s_{σ_i} of an element, one per block.

    The components are powers of s, pairwise commute, multiply to s and
    generate ⟨s⟩. Blocks missing the order of s map to the identity.

    Raises:
        PreconditionError: If the order of s has a prime outside the ground

    Examples:
        >>> s = Permutation.parse("(1 2)(3 4 5)", 5)
        >>> parts = decompose_element(s, Partition.singletons({2, 3}))
        >>> str(parts[(2,)]), str(parts[(3,)])
        ('(1 2)', '(3 4 5)')
    """
    order = s.order()
    outside = PrimeTools.prime_set(order) - sigma.ground
    if outside:
        raise PreconditionError(
            f"element order {order} has primes {sorted(outside)} outside the partition"
        )
    return {block: s.power(_component_exponent(order, block)) for block in sigma.blocks}


def decompose_generators(
    g: PermGroup, sigma: Partition, extra: Iterable[int] = ()
) -> SigmaGenerators:
    """
    Split G's generators into per-block lists of σ_i-elements.

    Args:
        g: The group
        sigma: Partition whose ground, together with ``extra``, covers π(G)
        extra: Primes outside the ground collected in a separate bucket

    Returns:
        SigmaGenerators whose lists jointly generate G

    Raises:
        PartitionError: If ``extra`` meets the ground
        PreconditionError: If π(G) is not covered
        InvariantViolation: If more than n³ elements are produced
    """
    extra = frozenset(extra)
    if extra & sigma.ground:
        raise PartitionError(
            f"extra primes {sorted(extra & sigma.ground)} overlap the partition"
        )
    uncovered = PrimeTools.prime_set(g.order()) - sigma.ground - extra
    if uncovered:
        raise PreconditionError(f"primes {sorted(uncovered)} of |G| are not covered")

    buckets: list[tuple[Block, frozenset[int]]] = [(b, frozenset(b)) for b in sigma.blocks]
    lists: dict[Block, dict[Permutation, None]] = {b: {} for b in sigma.blocks}
    extra_list: dict[Permutation, None] = {}
    for s in g.generators:
        order = s.order()
        for block, primes in buckets:
            part = s.power(_component_exponent(order, primes))
            if not part.is_identity():
                lists[block].setdefault(part, None)
        if extra:
            part = s.power(_component_exponent(order, extra))
            if not part.is_identity():
                extra_list.setdefault(part, None)

    result = SigmaGenerators(
        partition=sigma,
        by_block={b: list(gens) for b, gens in lists.items()},
        extra_primes=extra,
        extra=list(extra_list),
    )
    bound = g.degree**3
    if result.total > bound:
        raise InvariantViolation(
            f"decomposition produced {result.total} elements, above n³ = {bound}"
        )
    logger.debug(f"Decomposed {len(g.generators)} generators into {result.total} parts")
    return result
